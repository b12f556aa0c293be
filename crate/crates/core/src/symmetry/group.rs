//! Automorphism groups by refinement and backtracking, stored as a
//! stabiliser chain so that the order is exact and elements can be listed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::canon::{degree_partition, individualize, masks, refine, target_cell, Partition};
use crate::graph::Graph;

/// `perm[x]` is the image of `x`.
pub type Perm = Vec<usize>;

/// Largest group order for which elements may be enumerated.
pub const MAX_ENUMERATED_ORDER: u128 = 10_000_000;

/// Default node budget for one automorphism-group computation.
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

/// Applies `first`, then `second`.
pub fn compose(first: &[usize], second: &[usize]) -> Perm {
    first.iter().map(|&x| second[x]).collect()
}

pub fn inverse(p: &[usize]) -> Perm {
    let mut inv = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

/// A permutation group given by a base and strong generating set.
#[derive(Debug, Clone, Serialize)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    base: Vec<usize>,
    /// `transversals[i]`: pairs `(point, rep)` where `rep` fixes `base[..i]`
    /// and maps `base[i]` to `point`.
    #[serde(skip)]
    transversals: Vec<Vec<(usize, Perm)>>,
}

impl PermGroup {
    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup { degree, generators: Vec::new(), base: Vec::new(), transversals: Vec::new() }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn base(&self) -> &[usize] {
        &self.base
    }

    /// Exact group order: the product of the basic orbit lengths.
    pub fn order(&self) -> u128 {
        self.transversals.iter().map(|t| t.len() as u128).product()
    }

    /// Orbits of the point action, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.generators, |p, x| p[x])
    }

    /// Random element, uniform over the group.
    pub fn random_element(&self, rng: &mut impl Rng) -> Perm {
        let mut g: Perm = (0..self.degree).collect();
        for level in self.transversals.iter().rev() {
            let (_, rep) = &level[rng.gen_range(0..level.len())];
            g = compose(&g, rep);
        }
        g
    }

    /// Every element exactly once, as `t_0 o t_1 o ... o t_k` (the deepest
    /// transversal element applied first). Refuses groups larger than
    /// [`MAX_ENUMERATED_ORDER`].
    pub fn elements(&self) -> Result<Vec<Perm>> {
        let order = self.order();
        if order > MAX_ENUMERATED_ORDER {
            return Err(Error::SizeCap { what: "group enumeration", size: order as usize, max: MAX_ENUMERATED_ORDER as usize });
        }
        let mut out: Vec<Perm> = vec![(0..self.degree).collect()];
        for level in self.transversals.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.len());
            for g in &out {
                for (_, rep) in level {
                    next.push(compose(g, rep));
                }
            }
            out = next;
        }
        Ok(out)
    }

    /// Whether `p` belongs to the group (sifting through the chain).
    pub fn contains(&self, p: &[usize]) -> bool {
        if p.len() != self.degree {
            return false;
        }
        let mut h: Perm = p.to_vec();
        for (i, level) in self.transversals.iter().enumerate() {
            let image = h[self.base[i]];
            let Some((_, rep)) = level.iter().find(|(pt, _)| *pt == image) else {
                return false;
            };
            h = compose(&h, &inverse(rep));
        }
        h.iter().enumerate().all(|(x, &y)| x == y)
    }
}

/// Union-find orbits of an action given by `act(generator, point)`.
pub(crate) fn orbits_of(points: usize, gens: &[Perm], act: impl Fn(&Perm, usize) -> usize) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..points).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        for x in 0..points {
            let (a, b) = (find(&mut parent, x), find(&mut parent, act(g, x)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..points {
        let r = find(&mut parent, x);
        groups.entry(r).or_default().push(x);
    }
    groups.into_values().collect()
}

struct Searcher<'a> {
    graph: &'a Graph,
    rows: Vec<u64>,
    nodes: u64,
    budget: u64,
}

fn shape(p: &Partition) -> Vec<usize> {
    p.iter().map(Vec::len).collect()
}

impl Searcher<'_> {
    /// An automorphism mapping the cells of `a` onto the cells of `b`
    /// (index by index), if one exists.
    fn extend(&mut self, a: &Partition, b: &Partition) -> Result<Option<Perm>> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { what: "automorphism search", budget: self.budget });
        }
        if shape(a) != shape(b) {
            return Ok(None);
        }
        let Some(idx) = target_cell(a) else {
            let mut perm = vec![0; self.graph.n()];
            for (ca, cb) in a.iter().zip(b) {
                perm[ca[0]] = cb[0];
            }
            return Ok(self.graph.is_automorphism(&perm).then_some(perm));
        };
        let x = a[idx][0];
        let child_a = refine(&self.rows, individualize(a, idx, x));
        for &y in &b[idx] {
            let child_b = refine(&self.rows, individualize(b, idx, y));
            if let Some(p) = self.extend(&child_a, &child_b)? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }
}

/// `Aut(g)` with the default node budget.
pub fn automorphism_group(g: &Graph) -> Result<PermGroup> {
    automorphism_group_with_budget(g, DEFAULT_NODE_BUDGET)
}

/// `Aut(g)`: walks one path of the individualisation-refinement tree to get
/// a base, then from the deepest level upwards finds, for every candidate
/// image of the base point not yet in its basic orbit, an automorphism
/// fixing the earlier base points. The found automorphisms form a strong
/// generating set.
pub fn automorphism_group_with_budget(g: &Graph, budget: u64) -> Result<PermGroup> {
    let n = g.n();
    if n > 64 {
        return Err(Error::SizeCap { what: "automorphism search", size: n, max: 64 });
    }
    let mut s = Searcher { graph: g, rows: masks(g), nodes: 0, budget };

    // partitions[i] is the node after individualising base[..i]
    let mut partitions = vec![degree_partition(&s.rows)];
    let mut base = Vec::new();
    let mut cells = Vec::new();
    while let Some(idx) = target_cell(partitions.last().unwrap()) {
        let p = partitions.last().unwrap();
        let b = p[idx][0];
        base.push(b);
        cells.push(idx);
        let next = refine(&s.rows, individualize(p, idx, b));
        partitions.push(next);
    }

    let depth = base.len();
    let mut strong: Vec<Vec<Perm>> = vec![Vec::new(); depth];
    let mut transversals: Vec<Vec<(usize, Perm)>> = vec![Vec::new(); depth];
    for level in (0..depth).rev() {
        let p = &partitions[level];
        let idx = cells[level];
        let b = base[level];
        let fixed_here = partitions[level + 1].clone();
        let mut gens: Vec<Perm> = strong[level..].iter().flatten().cloned().collect();
        let mut orbit = basic_orbit(b, &gens, n);
        for &c in &p[idx] {
            if orbit.iter().any(|(pt, _)| *pt == c) {
                continue;
            }
            let image = refine(&s.rows, individualize(p, idx, c));
            if let Some(perm) = s.extend(&fixed_here, &image)? {
                strong[level].push(perm.clone());
                gens.push(perm);
                orbit = basic_orbit(b, &gens, n);
            }
        }
        transversals[level] = orbit;
    }

    let generators: Vec<Perm> = strong.into_iter().flatten().collect();
    let group = PermGroup { degree: n, generators, base, transversals };
    spot_check(g, &group)?;
    Ok(group)
}

/// Orbit of `b` with coset representatives (`rep(b) = point`).
fn basic_orbit(b: usize, gens: &[Perm], n: usize) -> Vec<(usize, Perm)> {
    let mut reps: Vec<Option<Perm>> = vec![None; n];
    reps[b] = Some((0..n).collect());
    let mut out = vec![b];
    let mut i = 0;
    while i < out.len() {
        let x = out[i];
        let rx = reps[x].clone().unwrap();
        for g in gens {
            let y = g[x];
            if reps[y].is_none() {
                reps[y] = Some(compose(&rx, g));
                out.push(y);
            }
        }
        i += 1;
    }
    out.into_iter().map(|x| (x, reps[x].take().unwrap())).collect()
}

fn spot_check(g: &Graph, group: &PermGroup) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..100 {
        let p = group.random_element(&mut rng);
        if !g.is_automorphism(&p) {
            return Err(Error::Verification(format!("group element {p:?} is not an automorphism")));
        }
    }
    Ok(())
}

/// Vertex orbits under `Aut(g)`.
pub fn vertex_orbits(g: &Graph) -> Result<Vec<Vec<usize>>> {
    Ok(automorphism_group(g)?.orbits())
}

pub fn is_vertex_transitive(g: &Graph) -> Result<bool> {
    Ok(vertex_orbits(g)?.len() == 1)
}

/// Orbits of `group` on the edges of `g` (edges as `(u, v)`, `u < v`).
pub fn edge_orbits_under(g: &Graph, group: &PermGroup) -> Vec<Vec<(usize, usize)>> {
    let edges = g.edges();
    let index: std::collections::HashMap<(usize, usize), usize> = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let act = |p: &Perm, i: usize| {
        let (u, v) = edges[i];
        let (a, b) = (p[u], p[v]);
        index[&(a.min(b), a.max(b))]
    };
    orbits_of(edges.len(), group.generators(), act)
        .into_iter()
        .map(|o| o.into_iter().map(|i| edges[i]).collect())
        .collect()
}

pub fn edge_orbits(g: &Graph) -> Result<Vec<Vec<(usize, usize)>>> {
    Ok(edge_orbits_under(g, &automorphism_group(g)?))
}

/// Single edge orbit. Edgeless graphs are rejected.
pub fn is_edge_transitive(g: &Graph) -> Result<bool> {
    if g.edge_count() == 0 {
        return Err(Error::Edgeless);
    }
    Ok(edge_orbits(g)?.len() == 1)
}
