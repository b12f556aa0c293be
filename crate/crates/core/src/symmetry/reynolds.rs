//! Group averaging `Z -> (1/|G|) sum_pi P_pi^T Z P_pi`.

use super::group::{orbits_of, PermGroup};
use crate::error::{Error, Result};
use crate::spectra::SymMatrix;

/// Reynolds average computed orbit-wise: each entry is replaced by the mean
/// of `z` over the orbit of its ordered index pair. Every orbit element is
/// hit `|Stab|` times by the group sum, so this equals the group average.
pub fn reynolds_average(z: &SymMatrix, group: &PermGroup) -> Result<SymMatrix> {
    let n = z.dim();
    check_degree(z, group)?;
    let orbits = orbits_of(n * n, group.generators(), |p, i| p[i / n] * n + p[i % n]);
    let mut avg = vec![0.0; n * n];
    for orbit in orbits {
        let mean = orbit.iter().map(|&i| z.get(i / n, i % n)).sum::<f64>() / orbit.len() as f64;
        for i in orbit {
            avg[i] = mean;
        }
    }
    Ok(SymMatrix::from_fn(n, |i, j| avg[i * n + j]))
}

/// Reynolds average by explicit summation over all group elements; limited
/// to groups of order at most [`super::MAX_ENUMERATED_ORDER`].
pub fn reynolds_average_enumerated(z: &SymMatrix, group: &PermGroup) -> Result<SymMatrix> {
    check_degree(z, group)?;
    let elements = group.elements()?;
    let n = z.dim();
    let mut acc = vec![0.0; n * n];
    for p in &elements {
        for i in 0..n {
            for j in 0..n {
                acc[i * n + j] += z.get(p[i], p[j]);
            }
        }
    }
    let k = elements.len() as f64;
    Ok(SymMatrix::from_fn(n, |i, j| acc[i * n + j] / k))
}

fn check_degree(z: &SymMatrix, group: &PermGroup) -> Result<()> {
    if z.dim() != group.degree() {
        return Err(Error::Dimension(format!("matrix dimension {} != group degree {}", z.dim(), group.degree())));
    }
    Ok(())
}
