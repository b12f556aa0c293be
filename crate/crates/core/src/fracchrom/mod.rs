//! Exact fractional chromatic number: the covering LP over independent sets
//! solved in rational arithmetic, with primal and dual certificates.

mod mis;
mod simplex;

pub use mis::{maximal_independent_sets, maximal_independent_sets_with_budget, DEFAULT_MIS_BUDGET, MAX_MIS_ORDER};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::bounds::render;
use crate::error::{Error, Result};
use crate::graph::generators::binomial;
use crate::graph::Graph;
use mis::bits;

/// Constraints added per round of constraint generation.
const GENERATION_BATCH: usize = 16;

/// Largest order accepted by [`fractional_chromatic`].
pub const MAX_FRACTIONAL_ORDER: usize = 64;

/// Optimal fractional colouring.
#[derive(Debug, Clone, PartialEq)]
pub struct FractionalSolution {
    /// `chi_f`.
    pub value: BigRational,
    /// Independent sets (bitmasks) with positive weight. Weights cover every
    /// vertex at least once and sum to `value`.
    pub weights: Vec<(u64, BigRational)>,
    /// Vertex weights `y` with `sum y = value` and `y(S) <= 1` on every
    /// independent set `S`.
    pub dual_certificate: Option<Vec<BigRational>>,
}

impl FractionalSolution {
    pub fn value_string(&self) -> String {
        render(&self.value)
    }

    /// Checks both certificates in exact arithmetic against `g`.
    pub fn verify(&self, g: &Graph) -> Result<()> {
        let fail = |m: String| Err(Error::Verification(m));
        let n = g.n();
        let mut total = BigRational::zero();
        let mut cover = vec![BigRational::zero(); n];
        for (set, w) in &self.weights {
            if w.is_negative() {
                return fail(format!("negative weight on set {set:#x}"));
            }
            if g.edges().iter().any(|&(u, v)| set >> u & 1 == 1 && set >> v & 1 == 1) {
                return fail(format!("set {set:#x} is not independent"));
            }
            if *set >> n != 0 && n < 64 {
                return fail(format!("set {set:#x} has vertices out of range"));
            }
            total += w;
            for v in bits(*set) {
                cover[v] += w;
            }
        }
        if let Some(v) = cover.iter().position(|c| *c < BigRational::one()) {
            return fail(format!("vertex {v} covered with weight {}", render(&cover[v])));
        }
        if total != self.value {
            return fail(format!("weights sum to {} but value is {}", render(&total), render(&self.value)));
        }
        if let Some(y) = &self.dual_certificate {
            if y.len() != n || y.iter().any(Signed::is_negative) {
                return fail("dual certificate has wrong length or a negative entry".into());
            }
            let sum: BigRational = y.iter().sum();
            if sum != self.value {
                return fail(format!("dual sums to {} but value is {}", render(&sum), render(&self.value)));
            }
            for s in maximal_independent_sets(g)? {
                let load: BigRational = bits(s).map(|v| &y[v]).sum();
                if load > BigRational::one() {
                    return fail(format!("dual load {} on independent set {s:#x}", render(&load)));
                }
            }
        }
        Ok(())
    }
}

impl Serialize for FractionalSolution {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("FractionalSolution", 3)?;
        st.serialize_field("value", &render(&self.value))?;
        let weights: Vec<(String, String)> = self.weights.iter().map(|(s, w)| (format!("{s:x}"), render(w))).collect();
        st.serialize_field("weights", &weights)?;
        let dual: Option<Vec<String>> = self.dual_certificate.as_ref().map(|y| y.iter().map(render).collect());
        st.serialize_field("dual_certificate", &dual)?;
        st.end()
    }
}

/// `chi_f(g)` exactly. Connected components are solved separately; the
/// value is their maximum and the certificates are merged.
pub fn fractional_chromatic(g: &Graph) -> Result<FractionalSolution> {
    if g.n() > MAX_FRACTIONAL_ORDER {
        return Err(Error::SizeCap { what: "fractional chromatic number", size: g.n(), max: MAX_FRACTIONAL_ORDER });
    }
    let comps = g.components();
    let mut solved = Vec::with_capacity(comps.len());
    for comp in &comps {
        let sub = g.induced(comp);
        let sol = solve_connected(&sub)?;
        // lift masks and dual back to the labels of g
        let lift = |m: u64| bits(m).fold(0u64, |acc, i| acc | 1 << comp[i]);
        let weights: Vec<(u64, BigRational)> = sol.weights.into_iter().map(|(m, w)| (lift(m), w)).collect();
        solved.push((sol.value, weights, sol.dual_certificate.unwrap()));
    }
    let value = solved.iter().map(|s| s.0.clone()).max().unwrap();
    let best = solved.iter().position(|s| s.0 == value).unwrap();

    let mut dual = vec![BigRational::zero(); g.n()];
    for (i, &v) in comps[best].iter().enumerate() {
        dual[v] = solved[best].2[i].clone();
    }
    let solution = FractionalSolution {
        value: value.clone(),
        weights: merge_components(&solved.iter().map(|s| (s.0.clone(), s.1.clone())).collect::<Vec<_>>(), &value),
        dual_certificate: Some(dual),
    };
    solution.verify(g)?;
    Ok(solution)
}

/// Lays each component's weights on `[0, value)` (padding with the empty
/// set) and cuts at every breakpoint; each piece takes the union of the
/// sets active on it.
fn merge_components(parts: &[(BigRational, Vec<(u64, BigRational)>)], value: &BigRational) -> Vec<(u64, BigRational)> {
    let mut queues: Vec<Vec<(u64, BigRational)>> = parts
        .iter()
        .map(|(v, ws)| {
            let mut q = ws.clone();
            if v < value {
                q.push((0, value - v));
            }
            q.reverse();
            q
        })
        .collect();
    let mut out: Vec<(u64, BigRational)> = Vec::new();
    while queues.iter().all(|q| !q.is_empty()) {
        let step = queues.iter().map(|q| q.last().unwrap().1.clone()).min().unwrap();
        let mut union = 0u64;
        for q in queues.iter_mut() {
            let top = q.last_mut().unwrap();
            union |= top.0;
            top.1 -= &step;
            if top.1.is_zero() {
                q.pop();
            }
        }
        match out.iter_mut().find(|(s, _)| *s == union) {
            Some((_, w)) => *w += step,
            None => out.push((union, step)),
        }
    }
    out.sort_by_key(|a| a.0);
    out
}

fn solve_connected(g: &Graph) -> Result<FractionalSolution> {
    let n = g.n();
    if g.edge_count() == 0 {
        // single vertex
        let one = BigRational::one();
        return Ok(FractionalSolution {
            value: one.clone(),
            weights: vec![((1u64 << n) - 1, one.clone())],
            dual_certificate: Some(vec![one; n]),
        });
    }
    let sets = maximal_independent_sets(g)?;
    // Constraint generation on the dual LP  max sum y  s.t.  y(S) <= 1.
    // Start from sets covering every vertex so the LP stays bounded.
    let mut active: Vec<u64> = Vec::new();
    let mut covered = 0u64;
    for &s in &sets {
        if s & !covered != 0 {
            covered |= s;
            active.push(s);
        }
    }
    let one = BigRational::one();
    loop {
        let a: Vec<Vec<BigRational>> = active
            .iter()
            .map(|&s| (0..n).map(|v| if s >> v & 1 == 1 { one.clone() } else { BigRational::zero() }).collect())
            .collect();
        let lp = simplex::maximize(&a, &vec![one.clone(); active.len()], &vec![one.clone(); n]);
        let mut violated: Vec<(BigRational, u64)> = sets
            .iter()
            .filter_map(|&s| {
                let load: BigRational = bits(s).map(|v| &lp.primal[v]).sum();
                (load > one).then_some((load, s))
            })
            .collect();
        if violated.is_empty() {
            let weights = active.iter().zip(lp.dual).filter(|(_, w)| !w.is_zero()).map(|(&s, w)| (s, w)).collect();
            return Ok(FractionalSolution { value: lp.value, weights, dual_certificate: Some(lp.primal) });
        }
        violated.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));
        active.extend(violated.iter().take(GENERATION_BATCH).map(|x| x.1));
    }
}

/// `lambda_max / |lambda_min|` of the Kneser graph `K(n, k)`, computed as
/// `C(n-k, k) / C(n-k-1, k-1)` and checked against `n/k - 1`.
pub fn kneser_ratio(n: usize, k: usize) -> Result<BigRational> {
    if k == 0 || n < 2 * k {
        return Err(Error::InvalidArguments { generator: "kneser".into(), reason: format!("need n >= 2k >= 2, got n = {n}, k = {k}") });
    }
    let from_binomials = BigRational::new(BigInt::from(binomial(n - k, k)), BigInt::from(binomial(n - k - 1, k - 1)));
    let closed_form = BigRational::new(BigInt::from(n), BigInt::from(k)) - BigRational::one();
    if from_binomials != closed_form {
        return Err(Error::Verification(format!(
            "kneser ratio mismatch: {} vs {}",
            render(&from_binomials),
            render(&closed_form)
        )));
    }
    Ok(closed_form)
}

/// Distinct eigenvalues `(-1)^i C(n-k-i, k-i)` of `K(n, k)` with
/// multiplicities `C(n, i) - C(n, i-1)`, for `i = 0..=k`.
pub fn kneser_eigenvalues(n: usize, k: usize) -> Vec<(i128, u128)> {
    (0..=k)
        .map(|i| {
            let mag = binomial(n - k - i, k - i) as i128;
            let value = if i % 2 == 0 { mag } else { -mag };
            let mult = binomial(n, i) - if i == 0 { 0 } else { binomial(n, i - 1) };
            (value, mult)
        })
        .collect()
}
