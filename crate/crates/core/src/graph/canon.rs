//! Canonical labelling by individualisation-refinement for graphs with at
//! most 64 vertices.

use super::Graph;
use crate::error::{Error, Result};

/// Isomorphism-invariant key: adjacency rows (as bitmasks) of the
/// canonically relabelled graph, preceded by the vertex count.
pub type CanonicalKey = Vec<u64>;

pub(crate) type Partition = Vec<Vec<usize>>;

/// Refines an ordered partition to the coarsest equitable partition below
/// it. Cells are split by neighbour counts into each splitter cell, the
/// pieces ordered by count, so the result is label-invariant.
pub(crate) fn refine(rows: &[u64], mut cells: Partition) -> Partition {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s].iter().fold(0u64, |m, &v| m | (1 << v));
            let mut next: Partition = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for cell in &cells {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, usize)> =
                    cell.iter().map(|&v| ((rows[v] & splitter).count_ones(), v)).collect();
                keyed.sort_by_key(|&(c, _)| c);
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                if keyed[0].0 != keyed[keyed.len() - 1].0 {
                    split = true;
                }
            }
            if split {
                cells = next;
                continue 'outer;
            }
        }
        return cells;
    }
}

pub(crate) fn degree_partition(rows: &[u64]) -> Partition {
    refine(rows, vec![(0..rows.len()).collect()])
}

/// Splits `cells[idx]` into `[v]` followed by the rest.
pub(crate) fn individualize(cells: &Partition, idx: usize, v: usize) -> Partition {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for (i, cell) in cells.iter().enumerate() {
        if i == idx {
            out.push(vec![v]);
            out.push(cell.iter().copied().filter(|&x| x != v).collect());
        } else {
            out.push(cell.clone());
        }
    }
    out
}

pub(crate) fn target_cell(cells: &Partition) -> Option<usize> {
    cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
}

pub(crate) fn masks(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|u| g.row_mask(u)).collect()
}

struct Search<'a> {
    rows: &'a [u64],
    best: Option<(CanonicalKey, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn certificate(&self, order: &[usize]) -> (CanonicalKey, Vec<usize>) {
        let n = order.len();
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut key = Vec::with_capacity(n + 1);
        key.push(n as u64);
        for &v in order {
            let mut m = 0u64;
            let mut r = self.rows[v];
            while r != 0 {
                let w = r.trailing_zeros() as usize;
                m |= 1 << pos[w];
                r &= r - 1;
            }
            key.push(m);
        }
        (key, pos)
    }

    fn visit(&mut self, cells: Partition, path: &mut Vec<usize>) {
        let Some(idx) = target_cell(&cells) else {
            let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
            let (key, pos) = self.certificate(&order);
            match &self.best {
                None => self.best = Some((key, pos)),
                Some((best_key, best_pos)) => {
                    if key == *best_key {
                        // pos^-1 o best_pos maps best's labelling onto this one
                        let mut inv = vec![0usize; pos.len()];
                        for (v, &p) in pos.iter().enumerate() {
                            inv[p] = v;
                        }
                        let gamma: Vec<usize> = best_pos.iter().map(|&p| inv[p]).collect();
                        self.automorphisms.push(gamma);
                    } else if key > *best_key {
                        self.best = Some((key, pos));
                    }
                }
            }
            return;
        };
        let candidates = cells[idx].clone();
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            if self.equivalent_to_tried(v, &tried, path) {
                continue;
            }
            tried.push(v);
            path.push(v);
            let child = refine(self.rows, individualize(&cells, idx, v));
            self.visit(child, path);
            path.pop();
        }
    }

    // v lies in the orbit of an already explored sibling under the group
    // generated by known automorphisms fixing the current path pointwise.
    fn equivalent_to_tried(&self, v: usize, tried: &[usize], path: &[usize]) -> bool {
        if tried.is_empty() {
            return false;
        }
        let gens: Vec<&Vec<usize>> =
            self.automorphisms.iter().filter(|g| path.iter().all(|&p| g[p] == p)).collect();
        if gens.is_empty() {
            return false;
        }
        let n = self.rows.len();
        let mut seen = vec![false; n];
        let mut stack = vec![v];
        seen[v] = true;
        while let Some(x) = stack.pop() {
            if tried.contains(&x) {
                return true;
            }
            for g in &gens {
                if !seen[g[x]] {
                    seen[g[x]] = true;
                    stack.push(g[x]);
                }
            }
        }
        false
    }
}

/// Canonical key and canonical labelling (`labelling[v]` is the new label of
/// vertex `v`). Two graphs are isomorphic iff their keys are equal.
pub fn canonical_form(g: &Graph) -> Result<(CanonicalKey, Vec<usize>)> {
    if g.n() > 64 {
        return Err(Error::SizeCap { what: "canonical form", size: g.n(), max: 64 });
    }
    let rows = masks(g);
    let mut search = Search { rows: &rows, best: None, automorphisms: Vec::new() };
    search.visit(degree_partition(&rows), &mut Vec::new());
    Ok(search.best.expect("search reaches at least one leaf"))
}
