use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest graph accepted by the independent-set enumeration.
pub const MAX_MIS_ORDER: usize = 64;

/// Default cap on the number of maximal independent sets.
pub const DEFAULT_MIS_BUDGET: usize = 1_000_000;

/// Maximal independent sets as vertex bitmasks, ascending.
pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<u64>> {
    maximal_independent_sets_with_budget(g, DEFAULT_MIS_BUDGET)
}

/// Bron-Kerbosch with Tomita pivoting on the complement graph.
pub fn maximal_independent_sets_with_budget(g: &Graph, budget: usize) -> Result<Vec<u64>> {
    let n = g.n();
    if n > MAX_MIS_ORDER {
        return Err(Error::SizeCap { what: "independent set enumeration", size: n, max: MAX_MIS_ORDER });
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    // neighbourhoods in the complement
    let co: Vec<u64> = (0..n).map(|u| all & !g.row_mask(u) & !(1u64 << u)).collect();
    let mut out = Vec::new();
    bron_kerbosch(&co, 0, all, 0, &mut out, budget)?;
    out.sort_unstable();
    Ok(out)
}

fn bron_kerbosch(co: &[u64], r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>, budget: usize) -> Result<()> {
    if p == 0 {
        if x == 0 {
            if out.len() == budget {
                return Err(Error::BudgetExceeded { what: "maximal independent sets", budget: budget as u64 });
            }
            out.push(r);
        }
        return Ok(());
    }
    let pivot = bits(p | x).max_by_key(|&u| (co[u] & p).count_ones()).unwrap();
    for v in bits(p & !co[pivot]) {
        let bit = 1u64 << v;
        bron_kerbosch(co, r | bit, p & co[v], x & co[v], out, budget)?;
        p &= !bit;
        x |= bit;
    }
    Ok(())
}

pub(crate) fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}
