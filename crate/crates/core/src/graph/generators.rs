use super::Graph;
use crate::error::{Error, Result};

/// Registered generator names with their argument synopsis.
pub const GENERATORS: &[(&str, &str)] = &[
    ("complete", "complete:n"),
    ("cycle", "cycle:n (n >= 3)"),
    ("path", "path:n"),
    ("empty", "empty:n"),
    ("star", "star:m (K_{1,m}, m >= 1)"),
    ("wheel", "wheel:n (C_n plus a hub, n >= 3)"),
    ("kneser", "kneser:n:k (n >= 2k >= 2)"),
    ("petersen", "petersen"),
    ("paley", "paley:q (prime q = 1 mod 4, or q = 9)"),
];

/// Upper bound on generated vertex counts (dense representation).
const MAX_VERTICES: usize = 4096;

fn invalid(generator: &str, reason: impl Into<String>) -> Error {
    Error::InvalidArguments { generator: generator.to_string(), reason: reason.into() }
}

fn arity(name: &str, args: &[usize], want: usize) -> Result<()> {
    if args.len() != want {
        return Err(invalid(name, format!("expected {want} argument(s), got {}", args.len())));
    }
    Ok(())
}

/// Builds a named graph. `complement` is handled by [`super::GraphSpec`].
pub fn generate(name: &str, args: &[usize]) -> Result<Graph> {
    let size_check = |n: usize| -> Result<usize> {
        if n == 0 {
            return Err(invalid(name, "need at least one vertex"));
        }
        if n > MAX_VERTICES {
            return Err(Error::SizeCap { what: "generated graph", size: n, max: MAX_VERTICES });
        }
        Ok(n)
    };
    match name {
        "complete" => {
            arity(name, args, 1)?;
            let n = size_check(args[0])?;
            Ok(Graph::from_fn(n, |_, _| true))
        }
        "empty" => {
            arity(name, args, 1)?;
            Ok(Graph::empty(size_check(args[0])?))
        }
        "cycle" => {
            arity(name, args, 1)?;
            let n = size_check(args[0])?;
            if n < 3 {
                return Err(invalid(name, "a cycle needs n >= 3"));
            }
            Ok(Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)))
        }
        "path" => {
            arity(name, args, 1)?;
            let n = size_check(args[0])?;
            Ok(Graph::from_fn(n, |u, v| v == u + 1))
        }
        "star" => {
            arity(name, args, 1)?;
            if args[0] == 0 {
                return Err(invalid(name, "a star needs m >= 1 leaves"));
            }
            let n = size_check(args[0] + 1)?;
            Ok(Graph::from_fn(n, |u, _| u == 0))
        }
        "wheel" => {
            arity(name, args, 1)?;
            let rim = args[0];
            if rim < 3 {
                return Err(invalid(name, "the rim cycle needs n >= 3"));
            }
            let n = size_check(rim + 1)?;
            // rim 0..rim, hub = rim
            Ok(Graph::from_fn(n, |u, v| v == rim || v == u + 1 || (u == 0 && v == rim - 1)))
        }
        "kneser" => {
            arity(name, args, 2)?;
            kneser(args[0], args[1])
        }
        "petersen" => {
            arity(name, args, 0)?;
            kneser(5, 2)
        }
        "paley" => {
            arity(name, args, 1)?;
            paley(args[0])
        }
        _ => Err(Error::UnknownGenerator(name.to_string())),
    }
}

/// k-subsets of `0..n` in colexicographic order, as bitmasks.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k == 0 {
        out.push(0);
        return out;
    }
    // Gosper's hack enumerates in increasing numeric (colex) order
    let mut s: u64 = (1u64 << k) - 1;
    let limit = 1u64 << n;
    while s < limit {
        out.push(s);
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

fn kneser(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || n < 2 * k {
        return Err(invalid("kneser", format!("need n >= 2k >= 2, got n = {n}, k = {k}")));
    }
    if n > 63 {
        return Err(invalid("kneser", "ground set larger than 63"));
    }
    let count = binomial(n, k);
    if count > MAX_VERTICES as u128 {
        return Err(Error::SizeCap { what: "kneser graph", size: count as usize, max: MAX_VERTICES });
    }
    let sets = k_subsets(n, k);
    Ok(Graph::from_fn(sets.len(), |u, v| sets[u] & sets[v] == 0))
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Paley graphs. Prime `q = 1 mod 4`: vertices `Z_q`, adjacent iff the
/// difference is a nonzero square. `q = 9`: vertices of `GF(9) = GF(3)[i]`
/// with `i^2 = -1`, element `a + b i` stored as `3a + b`, adjacent iff the
/// difference is a nonzero square in `GF(9)`.
fn paley(q: usize) -> Result<Graph> {
    if q == 9 {
        let mul = |x: (usize, usize), y: (usize, usize)| {
            // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
            ((x.0 * y.0 + 2 * x.1 * y.1) % 3, (x.0 * y.1 + x.1 * y.0) % 3)
        };
        let elem = |v: usize| (v / 3, v % 3);
        let mut square = [false; 9];
        for v in 1..9 {
            let s = mul(elem(v), elem(v));
            square[3 * s.0 + s.1] = true;
        }
        return Ok(Graph::from_fn(9, |u, v| {
            let (a, b) = elem(u);
            let (c, d) = elem(v);
            let diff = ((a + 3 - c) % 3, (b + 3 - d) % 3);
            square[3 * diff.0 + diff.1]
        }));
    }
    if !is_prime(q) || q % 4 != 1 {
        return Err(invalid("paley", format!("q = {q} must be a prime = 1 mod 4, or 9")));
    }
    if q > MAX_VERTICES {
        return Err(Error::SizeCap { what: "paley graph", size: q, max: MAX_VERTICES });
    }
    let mut square = vec![false; q];
    for x in 1..q {
        square[x * x % q] = true;
    }
    Ok(Graph::from_fn(q, |u, v| square[(v - u) % q]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn regular_degree(g: &Graph) -> Option<usize> {
        let d = g.degree(0);
        (0..g.n()).all(|u| g.degree(u) == d).then_some(d)
    }

    #[test]
    fn petersen_is_kneser_5_2() {
        let p = generate("kneser", &[5, 2]).unwrap();
        assert_eq!(p.n(), 10);
        assert_eq!(p.edge_count(), 15);
        assert_eq!(regular_degree(&p), Some(3));
        assert_eq!(generate("petersen", &[]).unwrap(), p);
    }

    #[test]
    fn kneser_sizes() {
        for (n, k) in [(5, 2), (6, 2), (7, 2), (7, 3), (8, 3), (6, 1)] {
            let g = generate("kneser", &[n, k]).unwrap();
            assert_eq!(g.n() as u128, binomial(n, k));
            assert_eq!(regular_degree(&g).unwrap() as u128, binomial(n - k, k));
        }
        assert!(generate("kneser", &[3, 2]).is_err());
        assert!(generate("kneser", &[4, 0]).is_err());
    }

    #[test]
    fn paley_graphs() {
        let p9 = generate("paley", &[9]).unwrap();
        assert_eq!(p9.n(), 9);
        assert_eq!(regular_degree(&p9), Some(4));
        // P9 is self-complementary
        assert_eq!(p9.complement().edge_count(), p9.edge_count());
        let p13 = generate("paley", &[13]).unwrap();
        assert_eq!(regular_degree(&p13), Some(6));
        assert!(generate("paley", &[7]).is_err());
        assert!(generate("paley", &[25]).is_err());
    }

    #[test]
    fn wheel_and_friends() {
        for n in 3..9 {
            let w = generate("wheel", &[n]).unwrap();
            assert_eq!(w.n(), n + 1);
            assert_eq!(w.edge_count(), 2 * n);
        }
        assert_eq!(generate("path", &[4]).unwrap().edge_count(), 3);
        assert_eq!(generate("star", &[4]).unwrap().edge_count(), 4);
        assert_eq!(generate("cycle", &[6]).unwrap().complement().edge_count(), 9);
        assert!(matches!(generate("nope", &[1]), Err(Error::UnknownGenerator(_))));
        assert!(generate("cycle", &[2]).is_err());
        assert!(generate("complete", &[]).is_err());
    }

    #[test]
    fn subsets_in_colex_order() {
        assert_eq!(k_subsets(4, 2), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(k_subsets(7, 3).len(), 35);
    }
}
