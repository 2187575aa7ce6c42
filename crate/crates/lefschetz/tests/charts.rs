mod common;

use common::{genus, random_chart_move};
use lefschetz::chart::{
    apply_move, counts, degree_sum_check, fiber_loop, gamma0_chart, intersection_word, l0_chart,
    lh_chart, r4_chart, validate_chart, Chart, Crossing, VertexKind,
};
use lefschetz::corpus::Example;
use lefschetz::hurwitz::fiber_counts;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn corpus_charts(n: usize) -> Vec<(String, Chart)> {
    let g = genus(n);
    let mut out = vec![
        ("Gamma0".to_string(), gamma0_chart(g)),
        ("R4".to_string(), r4_chart(g)),
    ];
    for i in 1..=g.generators() {
        out.push((format!("L0({i})"), l0_chart(g, i).unwrap()));
    }
    for h in 1..=g.max_chain() {
        out.push((format!("L{h}"), lh_chart(g, h).unwrap()));
    }
    out
}

#[test]
fn corpus_charts_validate_and_balance() {
    for n in 2..=4 {
        for (name, c) in corpus_charts(n) {
            assert!(validate_chart(&c).unwrap().valid, "{name} at genus {n}");
            assert!(degree_sum_check(&c), "{name} at genus {n}");
        }
    }
}

#[test]
fn flipped_edge_is_pinpointed() {
    let mut c = gamma0_chart(genus(2));
    let white = c
        .vertices
        .iter()
        .position(|v| v.kind == VertexKind::White)
        .unwrap();
    let d = c.vertices[white].rotation[3];
    let p = c.pairing[d];
    c.outgoing[d] = !c.outgoing[d];
    c.outgoing[p] = !c.outgoing[p];
    let report = validate_chart(&c).unwrap();
    assert!(!report.valid);
    // the leaf now reads a negative fiber, which is still a valid black vertex
    assert_eq!(report.offending, vec![white]);
}

#[test]
fn deleted_black_vertex_breaks_degree_sum() {
    let mut c = r4_chart(genus(2));
    let black = c
        .vertices
        .iter()
        .position(|v| v.kind == VertexKind::Black)
        .unwrap();
    c.vertices.remove(black);
    assert!(validate_chart(&c).is_err());
    assert!(!degree_sum_check(&c));
}

#[test]
fn black_tallies_match_the_system() {
    let g = genus(3);
    let c = r4_chart(g);
    let k = counts(&c).unwrap();
    let f = fiber_counts(&Example::ChainOdd.build(g).unwrap());
    assert_eq!(k.n0_plus.iter().sum::<usize>(), f.n0_plus);
    assert_eq!(k.n0_minus.iter().sum::<usize>(), f.n0_minus);
}

#[test]
fn crossing_one_edge() {
    let c = l0_chart(genus(2), 2).unwrap();
    let d = c.vertices[0].rotation[0];
    let dart = if c.outgoing[d] { d } else { c.pairing[d] };
    assert_eq!(
        intersection_word(
            &c,
            &[Crossing {
                dart,
                leftward: true
            }]
        )
        .unwrap(),
        vec![2]
    );
    let path = fiber_loop(&c, 0).unwrap();
    assert_eq!(intersection_word(&c, &path).unwrap(), vec![2]);
}

#[test]
fn random_moves_stay_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [2, 3] {
        for (name, start) in corpus_charts(n) {
            let w = counts(&start).unwrap().w;
            let mut c = start;
            for _ in 0..6 {
                let mv = random_chart_move(&mut rng, &c);
                c = apply_move(&c, &mv).unwrap_or_else(|e| panic!("{name}: {mv:?}: {e}"));
                assert!(degree_sum_check(&c), "{name}: {mv:?}");
                assert_eq!(counts(&c).unwrap().w, w, "{name}: {mv:?}");
            }
        }
    }
}
