//! Partition of the vertex pairs of an edge-transitive graph into orbits of
//! its automorphism group.

use serde::Serialize;

use super::group::{automorphism_group, edge_orbits_under, orbits_of, PermGroup};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::SymMatrix;

/// One class of the scheme.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SchemeClass {
    /// Largest row sum (the valency when the class graph is regular).
    pub row_sum: usize,
    pub regular: bool,
    /// Lexicographically smallest member pair.
    pub representative: (usize, usize),
    /// Number of unordered pairs in the class (0 pairs for the identity,
    /// which holds the diagonal).
    pub pairs: usize,
}

/// `A_0 = I, A_1, ..., A_m`: the 0/1 matrices of the pair orbits, with
/// `sum_i A_i = J`. Classes after the identity are sorted by
/// `(row_sum, representative)`.
#[derive(Debug, Clone, Serialize)]
pub struct PairOrbitScheme {
    #[serde(skip)]
    pub base: Graph,
    #[serde(skip)]
    pub group: PermGroup,
    /// `class_of[u * n + v]`: the class containing the pair `{u, v}`
    /// (0 on the diagonal).
    pub class_of: Vec<usize>,
    pub classes: Vec<SchemeClass>,
    /// Index `i` with `A_i` equal to the adjacency matrix of the base graph.
    pub edge_class_index: usize,
}

impl PairOrbitScheme {
    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// Number of matrices including `A_0`.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class(&self, u: usize, v: usize) -> usize {
        self.class_of[u * self.n() + v]
    }

    /// `A_i` as a 0/1 matrix.
    pub fn matrix(&self, i: usize) -> Vec<Vec<u8>> {
        let n = self.n();
        (0..n).map(|u| (0..n).map(|v| (self.class(u, v) == i) as u8).collect()).collect()
    }

    pub fn matrix_f64(&self, i: usize) -> SymMatrix {
        SymMatrix::from_fn(self.n(), |u, v| if self.class(u, v) == i { 1.0 } else { 0.0 })
    }

    /// `A_i` rows rendered as bitstrings.
    pub fn bitstring_rows(&self, i: usize) -> Vec<String> {
        self.matrix(i).iter().map(|r| r.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect()).collect()
    }

    /// `sum(M)` restricted to pairs outside the edge class, i.e.
    /// `sum((J - A_H) o M)`.
    pub fn off_edge_sum(&self, m: &SymMatrix) -> f64 {
        let n = self.n();
        let mut s = 0.0;
        for u in 0..n {
            for v in 0..n {
                if self.class(u, v) != self.edge_class_index {
                    s += m.get(u, v);
                }
            }
        }
        s
    }

    /// Projection onto `span{A_i}` (class-wise means) and the largest
    /// entrywise deviation of `m` from it.
    pub fn project(&self, m: &SymMatrix) -> (Vec<f64>, f64) {
        let n = self.n();
        let k = self.class_count();
        let mut sums = vec![0.0; k];
        let mut counts = vec![0usize; k];
        for u in 0..n {
            for v in 0..n {
                let c = self.class(u, v);
                sums[c] += m.get(u, v);
                counts[c] += 1;
            }
        }
        let coeffs: Vec<f64> = sums.iter().zip(&counts).map(|(s, &c)| s / c as f64).collect();
        let mut residual: f64 = 0.0;
        for u in 0..n {
            for v in 0..n {
                residual = residual.max((m.get(u, v) - coeffs[self.class(u, v)]).abs());
            }
        }
        (coeffs, residual)
    }

    /// `sum_i z_i A_i`.
    pub fn combine(&self, z: &[f64]) -> SymMatrix {
        assert_eq!(z.len(), self.class_count());
        SymMatrix::from_fn(self.n(), |u, v| z[self.class(u, v)])
    }
}

/// Builds the scheme of `h`; fails unless `h` is edge-transitive.
pub fn pair_orbit_scheme(h: &Graph) -> Result<PairOrbitScheme> {
    if h.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    let group = automorphism_group(h)?;
    scheme_from_group(h, group)
}

pub fn scheme_from_group(h: &Graph, group: PermGroup) -> Result<PairOrbitScheme> {
    let edge_orbits = edge_orbits_under(h, &group);
    if edge_orbits.len() > 1 {
        return Err(Error::NotEdgeTransitive { first: edge_orbits[0][0], second: edge_orbits[1][0] });
    }
    let n = h.n();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let pair_index = |u: usize, v: usize| -> usize {
        let (a, b) = (u.min(v), u.max(v));
        // index of (a, b) in row-major upper-triangle order
        a * n - a * (a + 1) / 2 + (b - a - 1)
    };
    let orbits = orbits_of(pairs.len(), group.generators(), |p, i| {
        let (u, v) = pairs[i];
        pair_index(p[u], p[v])
    });

    let mut described: Vec<(SchemeClass, Vec<usize>)> = orbits
        .into_iter()
        .map(|orbit| {
            let mut deg = vec![0usize; n];
            for &i in &orbit {
                let (u, v) = pairs[i];
                deg[u] += 1;
                deg[v] += 1;
            }
            let row_sum = *deg.iter().max().unwrap();
            let class = SchemeClass {
                row_sum,
                regular: deg.iter().all(|&d| d == row_sum),
                representative: pairs[orbit[0]],
                pairs: orbit.len(),
            };
            (class, orbit)
        })
        .collect();
    described.sort_by_key(|a| (a.0.row_sum, a.0.representative));

    let mut class_of = vec![0usize; n * n];
    let mut classes = vec![SchemeClass { row_sum: 1, regular: true, representative: (0, 0), pairs: 0 }];
    for (idx, (class, orbit)) in described.into_iter().enumerate() {
        for i in orbit {
            let (u, v) = pairs[i];
            class_of[u * n + v] = idx + 1;
            class_of[v * n + u] = idx + 1;
        }
        classes.push(class);
    }
    let (eu, ev) = h.edges()[0];
    let edge_class_index = class_of[eu * n + ev];
    let scheme = PairOrbitScheme { base: h.clone(), group, class_of, classes, edge_class_index };
    debug_assert!(scheme.matrix(edge_class_index).iter().enumerate().all(|(u, r)| r.iter().enumerate().all(|(v, &b)| (b == 1) == h.has_edge(u, v))));
    Ok(scheme)
}
