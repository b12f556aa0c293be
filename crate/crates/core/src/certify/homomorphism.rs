use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest source or target order accepted by [`find_homomorphism`].
pub const MAX_HOMOMORPHISM_ORDER: usize = 64;

/// Default node budget for [`find_homomorphism`].
pub const DEFAULT_HOMOMORPHISM_BUDGET: u64 = 10_000_000;

/// Searches for a map `V(g) -> V(h)` sending edges to edges.
///
/// `Ok(None)` means the search was exhaustive and no map exists.
pub fn find_homomorphism(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    find_homomorphism_with_budget(g, h, DEFAULT_HOMOMORPHISM_BUDGET)
}

/// Backtracking with forward checking on bitmask domains and a
/// smallest-domain-first variable order.
pub fn find_homomorphism_with_budget(g: &Graph, h: &Graph, budget: u64) -> Result<Option<Vec<usize>>> {
    for (gr, what) in [(g, "homomorphism source"), (h, "homomorphism target")] {
        if gr.n() > MAX_HOMOMORPHISM_ORDER {
            return Err(Error::SizeCap { what, size: gr.n(), max: MAX_HOMOMORPHISM_ORDER });
        }
    }
    let full = if h.n() == 64 { u64::MAX } else { (1u64 << h.n()) - 1 };
    let mut search = Search {
        g,
        h_rows: (0..h.n()).map(|x| h.row_mask(x)).collect(),
        assignment: vec![usize::MAX; g.n()],
        nodes: 0,
        budget,
    };
    let domains = vec![full; g.n()];
    if !search.descend(domains)? {
        return Ok(None);
    }
    let map = search.assignment;
    if g.edges().iter().any(|&(u, v)| !h.has_edge(map[u], map[v])) {
        return Err(Error::Verification("homomorphism search returned a map that breaks an edge".into()));
    }
    Ok(Some(map))
}

struct Search<'a> {
    g: &'a Graph,
    h_rows: Vec<u64>,
    assignment: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn descend(&mut self, domains: Vec<u64>) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded { what: "homomorphism search", budget: self.budget });
        }
        let next = (0..self.g.n())
            .filter(|&u| self.assignment[u] == usize::MAX)
            .min_by_key(|&u| (domains[u].count_ones(), std::cmp::Reverse(self.g.degree(u))));
        let Some(u) = next else {
            return Ok(true);
        };
        let mut options = domains[u];
        while options != 0 {
            let x = options.trailing_zeros() as usize;
            options &= options - 1;
            let mut narrowed = domains.clone();
            narrowed[u] = 1 << x;
            let mut dead = false;
            for w in self.g.neighbors(u) {
                if self.assignment[w] == usize::MAX {
                    narrowed[w] &= self.h_rows[x];
                    if narrowed[w] == 0 {
                        dead = true;
                        break;
                    }
                }
            }
            if dead {
                continue;
            }
            self.assignment[u] = x;
            if self.descend(narrowed)? {
                return Ok(true);
            }
            self.assignment[u] = usize::MAX;
        }
        Ok(false)
    }
}
