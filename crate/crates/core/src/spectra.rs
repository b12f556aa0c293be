//! Dense symmetric eigendecomposition (cyclic Jacobi), squared energies
//! `s+`/`s-`, and the split `A = X - Y` into PSD parts with `XY = 0`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::HPartition;

/// Real symmetric matrix with full row-major storage. Constructors mirror
/// the upper triangle, so `entries[i][j] == entries[j][i]` holds exactly.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SymMatrix {
    dim: usize,
    entries: Vec<f64>,
}

impl SymMatrix {
    pub fn zeros(dim: usize) -> SymMatrix {
        SymMatrix { dim, entries: vec![0.0; dim * dim] }
    }

    pub fn identity(dim: usize) -> SymMatrix {
        SymMatrix::from_fn(dim, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    /// `f` is evaluated on `i <= j` only.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> SymMatrix {
        let mut m = SymMatrix::zeros(dim);
        for i in 0..dim {
            for j in i..dim {
                let x = f(i, j);
                m.entries[i * dim + j] = x;
                m.entries[j * dim + i] = x;
            }
        }
        m
    }

    /// Rejects non-square or non-symmetric input (exact comparison).
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<SymMatrix> {
        let dim = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != dim {
                return Err(Error::Dimension(format!("row {i} has length {}, expected {dim}", r.len())));
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate().take(i) {
                if v != rows[j][i] {
                    return Err(Error::Dimension(format!("matrix not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(SymMatrix { dim, entries: rows.iter().flatten().copied().collect() })
    }

    pub fn adjacency(g: &Graph) -> SymMatrix {
        SymMatrix { dim: g.n(), entries: g.adjacency_f64() }
    }

    /// Gram matrix `B^T B` of a `rows x dim` factor given row-major.
    pub fn gram(factor: &[f64], rows: usize, dim: usize) -> SymMatrix {
        assert_eq!(factor.len(), rows * dim);
        SymMatrix::from_fn(dim, |i, j| (0..rows).map(|r| factor[r * dim + i] * factor[r * dim + j]).sum())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.dim + j]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        self.entries.chunks(self.dim.max(1)).map(<[f64]>::to_vec).collect()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// `<X, X>` = sum of squared entries.
    pub fn frobenius_sq(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum()
    }

    /// Sum of all entries.
    pub fn sum(&self) -> f64 {
        self.entries.iter().sum()
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn sub(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.dim, other.dim);
        SymMatrix { dim: self.dim, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect() }
    }

    pub fn add(&self, other: &SymMatrix) -> SymMatrix {
        assert_eq!(self.dim, other.dim);
        SymMatrix { dim: self.dim, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() }
    }

    pub fn scaled(&self, s: f64) -> SymMatrix {
        SymMatrix { dim: self.dim, entries: self.entries.iter().map(|a| a * s).collect() }
    }

    /// Entrywise maximum distance.
    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        assert_eq!(self.dim, other.dim);
        self.entries.iter().zip(&other.entries).fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    /// Ordinary product (not symmetric in general), row-major.
    pub fn matmul(&self, other: &SymMatrix) -> Vec<f64> {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0.0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    /// `P^T M P` for the permutation matrix with `P[i][perm[i]] = 1`, i.e.
    /// entry `(i, j)` of the result is `M[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> SymMatrix {
        SymMatrix::from_fn(self.dim, |i, j| self.get(perm[i], perm[j]))
    }

    /// Scale used by relative tolerances: `max(1, max |entry|)`.
    pub fn scale(&self) -> f64 {
        self.max_abs().max(1.0)
    }
}

/// Full eigendecomposition, eigenvalues in descending order.
#[derive(Debug, Clone, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// Row-major `dim x dim`; column `i` is the unit eigenvector of
    /// `eigenvalues[i]`.
    pub eigenvectors: Vec<f64>,
    /// Values with `|lambda| <= zero_threshold` count as zero.
    pub zero_threshold: f64,
}

impl Spectrum {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn lambda_max(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    pub fn eigenvector(&self, i: usize) -> Vec<f64> {
        let n = self.dim();
        (0..n).map(|r| self.eigenvectors[r * n + i]).collect()
    }

    /// `(n+, n-, n0)` under the zero threshold.
    pub fn inertia(&self) -> (usize, usize, usize) {
        let eps = self.zero_threshold;
        let pos = self.eigenvalues.iter().filter(|&&l| l > eps).count();
        let neg = self.eigenvalues.iter().filter(|&&l| l < -eps).count();
        (pos, neg, self.dim() - pos - neg)
    }

    /// `sum_i w(lambda_i) v_i v_i^T`.
    pub fn reassemble(&self, mut weight: impl FnMut(f64) -> f64) -> SymMatrix {
        let n = self.dim();
        let weights: Vec<f64> = self.eigenvalues.iter().map(|&l| weight(l)).collect();
        SymMatrix::from_fn(n, |i, j| {
            (0..n)
                .filter(|&k| weights[k] != 0.0)
                .map(|k| weights[k] * self.eigenvectors[i * n + k] * self.eigenvectors[j * n + k])
                .sum()
        })
    }
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi eigendecomposition. Sweeps run until the off-diagonal
/// Frobenius norm is at most `1e-12 * ||A||_F`.
pub fn eigendecompose(a: &SymMatrix) -> Result<Spectrum> {
    let n = a.dim();
    let mut m = a.entries.clone();
    let mut v = SymMatrix::identity(n).entries;
    let target = 1e-12 * a.frobenius_sq().sqrt();
    let off = |m: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += m[i * n + j] * m[i * n + j];
                }
            }
        }
        s.sqrt()
    };
    let mut sweeps = 0;
    let mut residual = off(&m);
    while residual > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence { sweeps, residual });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = m[p * n + p];
                let aqq = m[q * n + q];
                // rotation angle annihilating (p, q)
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let mkp = m[k * n + p];
                    let mkq = m[k * n + q];
                    m[k * n + p] = c * mkp - s * mkq;
                    m[k * n + q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let mpk = m[p * n + k];
                    let mqk = m[q * n + k];
                    m[p * n + k] = c * mpk - s * mqk;
                    m[q * n + k] = s * mpk + c * mqk;
                }
                m[p * n + q] = 0.0;
                m[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        residual = off(&m);
    }
    let mut order: Vec<usize> = (0..n).collect();
    // stable: equal eigenvalues keep their diagonal order
    order.sort_by(|&i, &j| m[j * n + j].total_cmp(&m[i * n + i]));
    let eigenvalues: Vec<f64> = order.iter().map(|&i| m[i * n + i]).collect();
    let mut eigenvectors = vec![0.0; n * n];
    for (col, &src) in order.iter().enumerate() {
        for r in 0..n {
            eigenvectors[r * n + col] = v[r * n + src];
        }
    }
    Ok(Spectrum { eigenvalues, eigenvectors, zero_threshold: 1e-9 * n as f64 * a.max_abs() })
}

/// `(s+, s-)`: sums of squares of the eigenvalues above `eps` and below
/// `-eps`.
pub fn squared_energies(spec: &Spectrum) -> (f64, f64) {
    let eps = spec.zero_threshold;
    let plus = spec.eigenvalues.iter().filter(|&&l| l > eps).map(|l| l * l).sum();
    let minus = spec.eigenvalues.iter().filter(|&&l| l < -eps).map(|l| l * l).sum();
    (plus, minus)
}

/// `A = X - Y` with `X = sum_{mu > 0} mu E_mu`, `Y = -sum_{mu < 0} mu E_mu`.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralSplit {
    pub x: SymMatrix,
    pub y: SymMatrix,
    pub s_plus: f64,
    pub s_minus: f64,
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

pub fn psd_split(a: &SymMatrix) -> Result<SpectralSplit> {
    let spec = eigendecompose(a)?;
    Ok(split_from_spectrum(&spec))
}

pub fn split_from_spectrum(spec: &Spectrum) -> SpectralSplit {
    let eps = spec.zero_threshold;
    let x = spec.reassemble(|l| if l > eps { l } else { 0.0 });
    let y = spec.reassemble(|l| if l < -eps { -l } else { 0.0 });
    let (s_plus, s_minus) = squared_energies(spec);
    let (n_plus, n_minus, n_zero) = spec.inertia();
    SpectralSplit { x, y, s_plus, s_minus, n_plus, n_minus, n_zero }
}

/// Smallest eigenvalue, for PSD checks.
pub fn min_eigenvalue(a: &SymMatrix) -> Result<f64> {
    Ok(eigendecompose(a)?.lambda_min())
}

/// `Z[u][v] = ||X_[u,v]||^2`, the squared Frobenius norm of the block with
/// rows in class `u` and columns in class `v`.
pub fn block_frobenius(x: &SymMatrix, part: &HPartition) -> Result<SymMatrix> {
    if part.source_size() != x.dim() {
        return Err(Error::Partition(format!(
            "partition covers {} indices but the matrix has dimension {}",
            part.source_size(),
            x.dim()
        )));
    }
    let k = part.class_count();
    let mut z = vec![0.0; k * k];
    let class_of = part.class_of();
    for i in 0..x.dim() {
        for j in 0..x.dim() {
            let e = x.get(i, j);
            z[class_of[i] * k + class_of[j]] += e * e;
        }
    }
    // symmetric by construction; mirror to make it exact
    Ok(SymMatrix::from_fn(k, |u, v| z[u * k + v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;

    fn spectrum_of(spec: &str) -> Spectrum {
        let g = crate::graph::GraphSpec::parse(spec).unwrap().build().unwrap();
        eigendecompose(&SymMatrix::adjacency(&g)).unwrap()
    }

    fn assert_close(a: &[f64], b: &[f64], tol: f64) {
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(b) {
            assert!((x - y).abs() <= tol, "{a:?} vs {b:?}");
        }
    }

    #[test]
    fn complete_graph_spectrum() {
        assert_close(&spectrum_of("complete:4").eigenvalues, &[3.0, -1.0, -1.0, -1.0], 1e-10);
    }

    #[test]
    fn paley9_spectrum() {
        // Paley(q) has eigenvalues (q-1)/2 and (-1 +- sqrt(q))/2; a multiset
        // {4, 2^4, (-2)^4} would have trace 4 and sum of squares 48 != 2m = 36.
        assert_close(&spectrum_of("paley:9").eigenvalues, &[4.0, 1.0, 1.0, 1.0, 1.0, -2.0, -2.0, -2.0, -2.0], 1e-10);
    }

    #[test]
    fn c7_extreme_ratio() {
        let s = spectrum_of("cycle:7");
        let expected_min = 2.0 * (6.0 * std::f64::consts::PI / 7.0).cos();
        assert!((s.lambda_min() - expected_min).abs() < 1e-12);
        assert!((s.lambda_max() / s.lambda_min().abs() - 1.109916).abs() < 1e-6);
    }

    #[test]
    fn squared_energies_examples() {
        let (p, m) = squared_energies(&spectrum_of("complete:5"));
        assert!((p - 16.0).abs() < 1e-9 && (m - 4.0).abs() < 1e-9);
        let (p, m) = squared_energies(&spectrum_of("cycle:6"));
        assert!((p - 6.0).abs() < 1e-9 && (m - 6.0).abs() < 1e-9);
        let (p, m) = squared_energies(&spectrum_of("petersen"));
        assert!((p - 14.0).abs() < 1e-9 && (m - 16.0).abs() < 1e-9);
    }

    #[test]
    fn spectrum_invariants() {
        let a = SymMatrix::adjacency(&generate("petersen", &[]).unwrap());
        let s = eigendecompose(&a).unwrap();
        let n = a.dim();
        let rebuilt = s.reassemble(|l| l);
        assert!(rebuilt.max_abs_diff(&a) <= 1e-9 * n as f64);
        for i in 0..n {
            for j in 0..n {
                let dot: f64 = (0..n).map(|r| s.eigenvectors[r * n + i] * s.eigenvectors[r * n + j]).sum();
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((dot - want).abs() <= 1e-9);
            }
        }
        assert!(s.eigenvalues.windows(2).all(|w| w[0] >= w[1]));
    }

    #[test]
    fn split_examples() {
        let id = psd_split(&SymMatrix::identity(3)).unwrap();
        assert!(id.x.max_abs_diff(&SymMatrix::identity(3)) < 1e-12);
        assert!(id.y.max_abs() < 1e-12);
        assert_eq!((id.s_plus, id.s_minus), (3.0, 0.0));

        let k2 = psd_split(&SymMatrix::adjacency(&generate("complete", &[2]).unwrap())).unwrap();
        let half = SymMatrix::from_rows(&[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        let half_neg = SymMatrix::from_rows(&[vec![0.5, -0.5], vec![-0.5, 0.5]]).unwrap();
        assert!(k2.x.max_abs_diff(&half) < 1e-12);
        assert!(k2.y.max_abs_diff(&half_neg) < 1e-12);
        assert!(k2.x.matmul(&k2.y).iter().all(|v| v.abs() < 1e-12));

        let a = SymMatrix::adjacency(&generate("petersen", &[]).unwrap());
        let sp = psd_split(&a).unwrap();
        assert!((sp.x.frobenius_sq() - 14.0).abs() < 1e-8);
        assert!((sp.y.frobenius_sq() - 16.0).abs() < 1e-8);
        assert!(sp.x.matmul(&sp.y).iter().all(|v| v.abs() <= 1e-9));
        assert!(sp.x.sub(&sp.y).max_abs_diff(&a) <= 1e-9);
        assert_eq!((sp.n_plus, sp.n_minus, sp.n_zero), (6, 4, 0));
    }

    #[test]
    fn zero_matrix() {
        let s = eigendecompose(&SymMatrix::zeros(3)).unwrap();
        assert_eq!(s.eigenvalues, vec![0.0; 3]);
        assert_eq!(squared_energies(&s), (0.0, 0.0));
        assert_eq!(s.inertia(), (0, 0, 3));
    }

    #[test]
    fn block_frobenius_examples() {
        let target = generate("complete", &[2]).unwrap();
        let part = HPartition::from_sizes(&[2, 2], &target).unwrap();
        let z = block_frobenius(&SymMatrix::identity(4), &part).unwrap();
        assert_eq!(z.rows(), vec![vec![2.0, 0.0], vec![0.0, 2.0]]);

        let ones = SymMatrix::from_fn(2, |_, _| 1.0);
        let part = HPartition::from_sizes(&[1, 1], &target).unwrap();
        assert_eq!(block_frobenius(&ones, &part).unwrap().rows(), vec![vec![1.0, 1.0], vec![1.0, 1.0]]);

        let part = HPartition::from_sizes(&[1, 2], &target).unwrap();
        assert!(block_frobenius(&ones, &part).is_err());
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(SymMatrix::from_rows(&[vec![0.0, 1.0], vec![2.0, 0.0]]).is_err());
        assert!(SymMatrix::from_rows(&[vec![0.0, 1.0]]).is_err());
    }
}
