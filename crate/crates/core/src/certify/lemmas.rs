//! Seeded numerical checks of the matrix inequalities behind the bounds.
//!
//! Every trial draws from its own ChaCha8 stream `(seed, trial index)`, so
//! sequential and parallel runs give identical reports.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{adjacency_spectrum, hoffman_ratio};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{write_graph6, Graph};
use crate::partition::HPartition;
use crate::spectra::{block_frobenius, eigendecompose, min_eigenvalue, psd_split, SymMatrix};
use crate::symmetry::{pair_orbit_scheme, reynolds_average, PairOrbitScheme};

/// Largest accepted relative violation of an inequality.
pub const VIOLATION_TOLERANCE: f64 = 1e-8;
/// Largest accepted relative residual of an identity.
pub const CLAIM_TOLERANCE: f64 = 1e-9;
/// Rejection-sampling attempts allowed per trial.
pub const REJECTION_BUDGET: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LemmaId {
    Main,
    Conformal,
    SchemeSpan,
    GeneralZ,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SeedRecord {
    pub seed: u64,
    /// Trial `t` uses `ChaCha8Rng::seed_from_u64(seed)` on stream `t`.
    pub streams: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LemmaTrialReport {
    pub lemma_id: LemmaId,
    /// graph6 of the target.
    pub target: String,
    pub trials: usize,
    /// Largest `(lhs - rhs) / max(1, |lhs|, |rhs|)`, floored at 0.
    pub max_violation: f64,
    /// Largest residual of the auxiliary identities, relative to the
    /// matrix scale.
    pub max_claim_residual: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub acceptance_rate: Option<f64>,
    pub seeds: SeedRecord,
    pub passed: bool,
}

/// One evaluation of `lhs <= rhs`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LemmaCheck {
    pub lhs: f64,
    pub rhs: f64,
}

impl LemmaCheck {
    pub fn violation(&self) -> f64 {
        (self.lhs - self.rhs) / self.lhs.abs().max(self.rhs.abs()).max(1.0)
    }

    pub fn holds(&self) -> bool {
        self.violation() <= VIOLATION_TOLERANCE
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Outcome {
    violation: f64,
    claim: f64,
    attempts: usize,
}

/// A vertex- and edge-transitive target with its scheme and Hoffman ratio.
struct Target {
    graph: Graph,
    scheme: PairOrbitScheme,
    ratio: f64,
}

fn transitive_target(h: &Graph) -> Result<Target> {
    if h.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let scheme = pair_orbit_scheme(h)?;
    let orbits = scheme.group.orbits().len();
    if orbits != 1 {
        return Err(Error::NotVertexTransitive { orbits });
    }
    let ratio = hoffman_ratio(&adjacency_spectrum(h)?)?;
    Ok(Target { graph: h.clone(), scheme, ratio })
}

fn run(
    lemma_id: LemmaId,
    target: &Graph,
    trials: usize,
    seed: u64,
    exec: Execution,
    sampled: bool,
    trial: impl Fn(&mut ChaCha8Rng) -> Result<Outcome> + Sync + Send,
) -> Result<LemmaTrialReport> {
    let outcomes = exec.map_range(trials, |t| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t as u64);
        trial(&mut rng)
    });
    let outcomes = outcomes.into_iter().collect::<Result<Vec<_>>>()?;
    let max_violation = outcomes.iter().map(|o| o.violation).fold(0.0, f64::max);
    let max_claim_residual = outcomes.iter().map(|o| o.claim).fold(0.0, f64::max);
    let attempts: usize = outcomes.iter().map(|o| o.attempts).sum();
    Ok(LemmaTrialReport {
        lemma_id,
        target: write_graph6(target),
        trials,
        max_violation,
        max_claim_residual,
        acceptance_rate: (sampled && attempts > 0).then(|| trials as f64 / attempts as f64),
        seeds: SeedRecord { seed, streams: trials },
        passed: max_violation <= VIOLATION_TOLERANCE && max_claim_residual <= CLAIM_TOLERANCE,
    })
}

/// Gram matrix `B^T B` of a random factor with between 1 and `dim` rows.
/// Entries are uniform on `(-1, 1)`, or on `(0, 1)` when `nonnegative`.
pub fn random_psd(rng: &mut impl Rng, dim: usize, nonnegative: bool) -> SymMatrix {
    if dim == 0 {
        return SymMatrix::zeros(0);
    }
    let rows = rng.gen_range(1..=dim);
    let low = if nonnegative { 0.0 } else { -1.0 };
    let factor: Vec<f64> = (0..rows * dim).map(|_| rng.gen_range(low..1.0)).collect();
    SymMatrix::gram(&factor, rows, dim)
}

/// `||X||^2 <= (1 + ratio_H) * sum_{uv not in E(H)} ||X_[u,v]||^2`, the sum
/// over ordered pairs including `u = v`.
pub fn lemma_main_instance(x: &SymMatrix, part: &HPartition, ratio_h: f64) -> Result<LemmaCheck> {
    let z = block_frobenius(x, part)?;
    let k = part.class_count();
    let mut off = 0.0;
    for u in 0..k {
        for v in 0..k {
            if !part.target().has_edge(u, v) {
                off += z.get(u, v);
            }
        }
    }
    Ok(LemmaCheck { lhs: x.frobenius_sq(), rhs: (1.0 + ratio_h) * off })
}

pub fn verify_lemma_main(h: &Graph, partition_sizes: &[usize], trials: usize, seed: u64) -> Result<LemmaTrialReport> {
    verify_lemma_main_with(h, partition_sizes, trials, seed, Execution::default())
}

pub fn verify_lemma_main_with(
    h: &Graph,
    partition_sizes: &[usize],
    trials: usize,
    seed: u64,
    exec: Execution,
) -> Result<LemmaTrialReport> {
    let target = transitive_target(h)?;
    let part = HPartition::from_sizes(partition_sizes, h)?;
    let dim = part.source_size();
    run(LemmaId::Main, h, trials, seed, exec, false, |rng| {
        let x = random_psd(rng, dim, false);
        let check = lemma_main_instance(&x, &part, target.ratio)?;
        // the off-edge sum read entrywise from X must equal sum((J - A_H) o Z)
        let z = block_frobenius(&x, &part)?;
        let mut direct = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                if part.off_edge(i, j) {
                    direct += x.get(i, j).powi(2);
                }
            }
        }
        let claim = (direct - target.scheme.off_edge_sum(&z)).abs() / check.lhs.max(1.0);
        Ok(Outcome { violation: check.violation().max(0.0), claim, attempts: 1 })
    })
}

/// Result of the conformal-split check on one matrix `A`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ConformalCheck {
    /// `||X||^2 <= ratio_H ||Y||^2`.
    pub forward: LemmaCheck,
    /// `||Y||^2 <= ratio_H ||X||^2`.
    pub mirrored: LemmaCheck,
    /// `max |(XY)_ij|` relative to the scale of `A`.
    pub product_residual: f64,
    /// `max |X_ij - Y_ij|` over off-edge blocks, relative to the scale.
    pub block_residual: f64,
}

/// Splits `a` into `X - Y` and checks both inequalities. `a` must vanish
/// on every block `(u, v)` with `{u, v}` not an edge of the target.
pub fn lemma_conformal_instance(a: &SymMatrix, part: &HPartition, ratio_h: f64) -> Result<ConformalCheck> {
    if a.dim() != part.source_size() {
        return Err(Error::Dimension(format!("matrix of dimension {} for a partition of {}", a.dim(), part.source_size())));
    }
    let n = a.dim();
    let scale = a.scale();
    for i in 0..n {
        for j in 0..n {
            if part.off_edge(i, j) && a.get(i, j) != 0.0 {
                return Err(Error::Partition(format!("entry ({i}, {j}) lies in a non-edge block but is nonzero")));
            }
        }
    }
    let split = psd_split(a)?;
    let product = split.x.matmul(&split.y);
    let product_residual = product.iter().fold(0.0f64, |m, v| m.max(v.abs())) / scale;
    let mut block_residual: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            if part.off_edge(i, j) {
                block_residual = block_residual.max((split.x.get(i, j) - split.y.get(i, j)).abs() / scale);
            }
        }
    }
    let (xx, yy) = (split.x.frobenius_sq(), split.y.frobenius_sq());
    Ok(ConformalCheck {
        forward: LemmaCheck { lhs: xx, rhs: ratio_h * yy },
        mirrored: LemmaCheck { lhs: yy, rhs: ratio_h * xx },
        product_residual,
        block_residual,
    })
}

pub fn verify_lemma_conformal(h: &Graph, partition: &HPartition, trials: usize, seed: u64) -> Result<LemmaTrialReport> {
    verify_lemma_conformal_with(h, partition, trials, seed, Execution::default())
}

pub fn verify_lemma_conformal_with(
    h: &Graph,
    partition: &HPartition,
    trials: usize,
    seed: u64,
    exec: Execution,
) -> Result<LemmaTrialReport> {
    if partition.target() != h {
        return Err(Error::Partition("partition target differs from the lemma target".into()));
    }
    let target = transitive_target(h)?;
    let n = partition.source_size();
    run(LemmaId::Conformal, h, trials, seed, exec, false, |rng| {
        let a = SymMatrix::from_fn(n, |i, j| {
            if partition.off_edge(i, j) {
                0.0
            } else {
                rng.gen_range(-1.0..1.0)
            }
        });
        let c = lemma_conformal_instance(&a, partition, target.ratio)?;
        Ok(Outcome {
            violation: c.forward.violation().max(c.mirrored.violation()).max(0.0),
            claim: c.product_residual.max(c.block_residual),
            attempts: 1,
        })
    })
}

/// `sum(Z) <= (1 + ratio_H) * sum((J - A_H) o Z)` for `Z = sum_i z_i A_i`.
pub fn scheme_span_instance(scheme: &PairOrbitScheme, z: &[f64], ratio_h: f64) -> LemmaCheck {
    let m = scheme.combine(z);
    LemmaCheck { lhs: m.sum(), rhs: (1.0 + ratio_h) * scheme.off_edge_sum(&m) }
}

pub fn verify_scheme_span_inequality(h: &Graph, trials: usize, seed: u64) -> Result<LemmaTrialReport> {
    verify_scheme_span_inequality_with(h, trials, seed, Execution::default())
}

/// Samples `z_i ~ U(0, 1)` for `i >= 1` and `z_0 ~ U(0, sum_i z_i lambda_max(A_i))`
/// and keeps the draw once `sum z_i A_i` is PSD.
pub fn verify_scheme_span_inequality_with(h: &Graph, trials: usize, seed: u64, exec: Execution) -> Result<LemmaTrialReport> {
    let target = transitive_target(h)?;
    let scheme = &target.scheme;
    let k = scheme.class_count();
    let lambda_max = (1..k)
        .map(|i| Ok(eigendecompose(&scheme.matrix_f64(i))?.lambda_max()))
        .collect::<Result<Vec<f64>>>()?;
    run(LemmaId::SchemeSpan, &target.graph, trials, seed, exec, true, |rng| {
        for attempt in 1..=REJECTION_BUDGET {
            let mut z = vec![0.0; k];
            for zi in z.iter_mut().skip(1) {
                *zi = rng.gen_range(0.0..1.0);
            }
            let top: f64 = (1..k).map(|i| z[i] * lambda_max[i - 1]).sum();
            z[0] = if top > 0.0 { rng.gen_range(0.0..top) } else { 0.0 };
            let m = scheme.combine(&z);
            if min_eigenvalue(&m)? < -1e-9 * m.scale() {
                continue;
            }
            let check = scheme_span_instance(scheme, &z, target.ratio);
            return Ok(Outcome { violation: check.violation().max(0.0), claim: 0.0, attempts: attempt });
        }
        Err(Error::RejectionBudget { accepted: 0, attempts: REJECTION_BUDGET })
    })
    .map_err(|e| match e {
        Error::RejectionBudget { .. } => Error::RejectionBudget { accepted: 0, attempts: REJECTION_BUDGET * trials },
        other => other,
    })
}

/// The inequality for an arbitrary `Z` plus the three averaging claims.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeneralZCheck {
    pub inequality: LemmaCheck,
    /// `|sum(avg Z) - sum(Z)|`, relative to the scale of `Z`.
    pub sum_residual: f64,
    /// `|sum((J - A_H) o avg Z) - sum((J - A_H) o Z)|`, relative.
    pub off_edge_residual: f64,
    /// Distance of `avg Z` from `span{A_i}`, relative.
    pub span_residual: f64,
}

impl GeneralZCheck {
    pub fn max_claim_residual(&self) -> f64 {
        self.sum_residual.max(self.off_edge_residual).max(self.span_residual)
    }
}

pub fn general_z_instance(scheme: &PairOrbitScheme, z: &SymMatrix, ratio_h: f64) -> Result<GeneralZCheck> {
    if z.dim() != scheme.n() {
        return Err(Error::Dimension(format!("matrix of dimension {} for a target on {} vertices", z.dim(), scheme.n())));
    }
    let avg = reynolds_average(z, &scheme.group)?;
    let scale = z.scale();
    let off = scheme.off_edge_sum(z);
    Ok(GeneralZCheck {
        inequality: LemmaCheck { lhs: z.sum(), rhs: (1.0 + ratio_h) * off },
        sum_residual: (avg.sum() - z.sum()).abs() / scale,
        off_edge_residual: (scheme.off_edge_sum(&avg) - off).abs() / scale,
        span_residual: scheme.project(&avg).1 / scale,
    })
}

pub fn verify_general_z_inequality(h: &Graph, trials: usize, seed: u64) -> Result<LemmaTrialReport> {
    verify_general_z_inequality_with(h, trials, seed, Execution::default())
}

pub fn verify_general_z_inequality_with(h: &Graph, trials: usize, seed: u64, exec: Execution) -> Result<LemmaTrialReport> {
    let target = transitive_target(h)?;
    let n = h.n();
    run(LemmaId::GeneralZ, h, trials, seed, exec, false, |rng| {
        let z = random_psd(rng, n, true);
        let c = general_z_instance(&target.scheme, &z, target.ratio)?;
        Ok(Outcome { violation: c.inequality.violation().max(0.0), claim: c.max_claim_residual(), attempts: 1 })
    })
}

/// Runs all four verifiers on `h` with `trials` each. The main and
/// conformal lemmas use two source vertices per target vertex.
pub fn verify_all_lemmas(h: &Graph, trials: usize, seed: u64, exec: Execution) -> Result<Vec<LemmaTrialReport>> {
    let sizes = vec![2; h.n()];
    let part = HPartition::from_sizes(&sizes, h)?;
    Ok(vec![
        verify_lemma_main_with(h, &sizes, trials, seed, exec)?,
        verify_lemma_conformal_with(h, &part, trials, seed, exec)?,
        verify_scheme_span_inequality_with(h, trials, seed, exec)?,
        verify_general_z_inequality_with(h, trials, seed, exec)?,
    ])
}
