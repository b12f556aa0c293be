use chibound::bounds::{adjacency_spectrum, energy_ratio, hoffman_ratio};
use chibound::certify::{find_homomorphism, obstruction_certificate};
use chibound::graph::{enumerate_nonisomorphic, generate};
use chibound::symmetry::{is_edge_transitive, is_vertex_transitive};
use chibound::{Execution, Graph};

fn edge_transitive_targets(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        out.extend(enumerate_nonisomorphic(n, true).unwrap().into_iter().filter(|h| is_edge_transitive(h).unwrap()));
    }
    out
}

fn sources(max_n: usize) -> Vec<Graph> {
    (2..=max_n).flat_map(|n| enumerate_nonisomorphic(n, true).unwrap()).collect()
}

#[test]
fn certificates_are_sound() {
    // targets up to 8 vertices from named families, sources up to 6
    let mut targets = edge_transitive_targets(6);
    for (name, args) in [("cycle", vec![7]), ("cycle", vec![8]), ("complete", vec![7]), ("complete", vec![8]), ("star", vec![7])] {
        targets.push(generate(name, &args).unwrap());
    }
    let srcs = sources(6);
    let pairs: Vec<(usize, usize)> = (0..srcs.len()).flat_map(|i| (0..targets.len()).map(move |j| (i, j))).collect();
    let bad: Vec<String> = Execution::default()
        .map(&pairs, |&(i, j)| {
            let (g, h) = (&srcs[i], &targets[j]);
            let cert = obstruction_certificate(g, h).unwrap();
            let hom = find_homomorphism(g, h).unwrap();
            match hom {
                Some(_) if cert.margin > 1e-6 => Some(format!("false certificate {i} -> {j}: margin {}", cert.margin)),
                Some(_) if cert.ratio_h < cert.ratio_g - 1e-8 => Some(format!("{i} -> {j}: ratio_H {} < ratio_G {}", cert.ratio_h, cert.ratio_g)),
                _ => None,
            }
        })
        .into_iter()
        .flatten()
        .collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn stars_are_the_bipartite_degenerate_case() {
    for m in 2..=6 {
        let star = generate("star", &[m]).unwrap();
        assert!(is_edge_transitive(&star).unwrap());
        assert!(!is_vertex_transitive(&star).unwrap());
        assert!(star.is_bipartite());
        let ratio_h = hoffman_ratio(&adjacency_spectrum(&star).unwrap()).unwrap();
        assert!((ratio_h - 1.0).abs() < 1e-9);
        for g in sources(6) {
            if find_homomorphism(&g, &star).unwrap().is_some() {
                assert!(g.is_bipartite());
                let ratio_g = energy_ratio(&adjacency_spectrum(&g).unwrap()).unwrap();
                assert!((ratio_g - 1.0).abs() < 1e-9);
            }
        }
    }
}

#[test]
fn vertex_transitive_targets_can_beat_the_ratio_order() {
    let c6_bar = generate("cycle", &[6]).unwrap().complement();
    assert!(is_vertex_transitive(&c6_bar).unwrap());
    assert!(!is_edge_transitive(&c6_bar).unwrap());
    let k3 = generate("complete", &[3]).unwrap();
    assert!(find_homomorphism(&k3, &c6_bar).unwrap().is_some());
    let ratio = hoffman_ratio(&adjacency_spectrum(&c6_bar).unwrap()).unwrap();
    assert!((ratio - 1.5).abs() < 1e-8);
    let ratio_g = energy_ratio(&adjacency_spectrum(&k3).unwrap()).unwrap();
    assert!(ratio < ratio_g);
}
