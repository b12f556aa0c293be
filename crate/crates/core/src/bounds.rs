//! Spectral and combinatorial lower bounds on the chromatic number.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{eigendecompose, squared_energies, Spectrum, SymMatrix};

/// All bounds for one graph. Floating values are always present; `*_exact`
/// fields carry a rational rendering when the spectrum is integral.
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub s_plus: f64,
    pub s_minus: f64,
    pub ando_lin: f64,
    pub hoffman: f64,
    pub inertia: f64,
    pub clique: usize,
    pub lambda_max: f64,
    pub lambda_min: f64,
    pub n_plus: usize,
    pub n_minus: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ando_lin_exact: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hoffman_exact: Option<String>,
    pub inertia_exact: String,
}

pub fn adjacency_spectrum(g: &Graph) -> Result<Spectrum> {
    eigendecompose(&SymMatrix::adjacency(g))
}

/// `max(a/b, b/a)` for positive `a`, `b`.
pub fn symmetric_ratio(a: f64, b: f64) -> f64 {
    (a / b).max(b / a)
}

fn require_edges(g: &Graph) -> Result<()> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    Ok(())
}

/// `max(s+/s-, s-/s+)` from a spectrum.
pub fn energy_ratio(spec: &Spectrum) -> Result<f64> {
    let (p, m) = squared_energies(spec);
    if p <= 0.0 || m <= 0.0 {
        return Err(Error::Edgeless);
    }
    Ok(symmetric_ratio(p, m))
}

/// `lambda_max / |lambda_min|` from a spectrum.
pub fn hoffman_ratio(spec: &Spectrum) -> Result<f64> {
    if spec.lambda_min() >= -spec.zero_threshold {
        return Err(Error::Edgeless);
    }
    Ok(spec.lambda_max() / spec.lambda_min().abs())
}

/// `1 + max(s+/s-, s-/s+)`; a lower bound on both `chi` and `chi_f`.
pub fn ando_lin_bound(g: &Graph) -> Result<f64> {
    require_edges(g)?;
    Ok(1.0 + energy_ratio(&adjacency_spectrum(g)?)?)
}

/// `1 + lambda_max / |lambda_min|`.
pub fn hoffman_bound(g: &Graph) -> Result<f64> {
    require_edges(g)?;
    Ok(1.0 + hoffman_ratio(&adjacency_spectrum(g)?)?)
}

/// `1 + max(n+/n-, n-/n+)`. Established for `chi` only; whether it also
/// bounds `chi_f` is open, so it is not used as a `chi_f` bound anywhere.
pub fn inertia_bound(g: &Graph) -> Result<f64> {
    require_edges(g)?;
    let (p, m, _) = adjacency_spectrum(g)?.inertia();
    Ok(1.0 + symmetric_ratio(p as f64, m as f64))
}

/// Largest clique size: branch and bound with greedy-colouring pruning.
pub fn clique_number(g: &Graph) -> Result<usize> {
    if g.n() > 64 {
        return Err(Error::SizeCap { what: "clique number", size: g.n(), max: 64 });
    }
    let rows: Vec<u64> = (0..g.n()).map(|u| g.row_mask(u)).collect();
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let mut best = 0;
    expand(&rows, 0, all, &mut best);
    Ok(best)
}

fn expand(rows: &[u64], size: usize, candidates: u64, best: &mut usize) {
    if candidates == 0 {
        *best = (*best).max(size);
        return;
    }
    // greedy colouring of the candidates; colour classes bound the clique
    let mut order: Vec<(usize, usize)> = Vec::new();
    let mut uncolored = candidates;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !(1 << v) & !rows[v];
            uncolored &= !(1 << v);
            order.push((v, color));
        }
    }
    let mut remaining = candidates;
    for &(v, c) in order.iter().rev() {
        if size + c <= *best {
            return;
        }
        expand(rows, size + 1, remaining & rows[v], best);
        remaining &= !(1 << v);
    }
}

fn integral_spectrum(spec: &Spectrum) -> Option<Vec<i64>> {
    let tol = spec.zero_threshold.max(1e-9);
    spec.eigenvalues
        .iter()
        .map(|&l| {
            let r = l.round();
            ((l - r).abs() <= tol).then_some(r as i64)
        })
        .collect()
}

pub(crate) fn render(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn rational_symmetric_ratio(a: i64, b: i64) -> BigRational {
    let (a, b) = (BigInt::from(a), BigInt::from(b));
    let x = BigRational::new(a.clone(), b.clone());
    let y = BigRational::new(b, a);
    if x > y {
        x
    } else {
        y
    }
}

/// Every bound for `g`, labelled with `graph_id`.
pub fn full_report(g: &Graph, graph_id: &str) -> Result<BoundReport> {
    require_edges(g)?;
    let spec = adjacency_spectrum(g)?;
    let (s_plus, s_minus) = squared_energies(&spec);
    let (n_plus, n_minus, _) = spec.inertia();
    let one = BigRational::from_integer(1.into());
    let exact = integral_spectrum(&spec);
    let ando_lin_exact = exact.as_ref().map(|ev| {
        let p: i64 = ev.iter().filter(|&&l| l > 0).map(|l| l * l).sum();
        let m: i64 = ev.iter().filter(|&&l| l < 0).map(|l| l * l).sum();
        render(&(one.clone() + rational_symmetric_ratio(p, m)))
    });
    let hoffman_exact = exact.as_ref().map(|ev| {
        let r = BigRational::new(BigInt::from(ev[0]), BigInt::from(-ev[ev.len() - 1]));
        render(&(one.clone() + r))
    });
    Ok(BoundReport {
        graph_id: graph_id.to_string(),
        s_plus,
        s_minus,
        ando_lin: 1.0 + energy_ratio(&spec)?,
        hoffman: 1.0 + hoffman_ratio(&spec)?,
        inertia: 1.0 + symmetric_ratio(n_plus as f64, n_minus as f64),
        clique: clique_number(g)?,
        lambda_max: spec.lambda_max(),
        lambda_min: spec.lambda_min(),
        n_plus,
        n_minus,
        ando_lin_exact,
        hoffman_exact,
        inertia_exact: render(&(one + rational_symmetric_ratio(n_plus as i64, n_minus as i64))),
    })
}
