use std::collections::BTreeMap;

use super::{canonical_form, Graph};
use crate::error::{Error, Result};
use crate::exec::Execution;

/// Largest order handled by the built-in enumerator.
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// One graph per isomorphism class on `n` vertices, canonically labelled,
/// in increasing canonical-key order.
///
/// Every graph on `k + 1` vertices arises from one on `k` vertices by adding
/// a vertex, so each level extends the previous one by all neighbourhoods of
/// a new vertex and deduplicates by canonical key.
pub fn enumerate_nonisomorphic(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    enumerate_nonisomorphic_with(n, connected_only, Execution::default())
}

pub fn enumerate_nonisomorphic_with(n: usize, connected_only: bool, exec: Execution) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::SizeCap { what: "enumeration order", size: n, max: MAX_ENUMERATION_ORDER });
    }
    let mut level = vec![Graph::empty(1)];
    for k in 1..n {
        let extended: Vec<Vec<(Vec<u64>, Graph)>> = exec.map(&level, |g| {
            (0u64..1 << k)
                .map(|mask| {
                    let child = Graph::from_fn(k + 1, |u, v| if v == k { mask >> u & 1 == 1 } else { g.has_edge(u, v) });
                    let (key, lab) = canonical_form(&child).expect("order within canonical-form cap");
                    (key, child.permuted(&lab))
                })
                .collect()
        });
        let mut classes: BTreeMap<Vec<u64>, Graph> = BTreeMap::new();
        for (key, g) in extended.into_iter().flatten() {
            classes.entry(key).or_insert(g);
        }
        level = classes.into_values().collect();
    }
    if connected_only {
        level.retain(Graph::is_connected);
    }
    Ok(level)
}
