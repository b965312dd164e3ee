mod common;

use common::*;
use dicrit_core::constructions::{
    bidirected_complete, dg_digraph, dg_graph, dirac_join, directed_cycle, extremal_digraph,
    extremal_family, hajos_join, DGParams,
};
use dicrit_core::digraph::biorient;
use dicrit_core::extremal::ext_formula_digraph;
use dicrit_core::{chromatic_number, dichromatic_number, is_k_critical, Digraph};
use rand::Rng;

fn hajos_joins_stay_critical(k: usize, factors: &[Digraph]) {
    for d1 in factors {
        for d2 in factors {
            for a1 in d1.arcs() {
                for a2 in d2.arcs() {
                    let h = hajos_join(d1, a1, d2, a2).unwrap();
                    assert_eq!(h.order(), d1.order() + d2.order() - 1);
                    assert_eq!(h.arc_count(), d1.arc_count() + d2.arc_count() - 1);
                    assert!(is_k_critical(&h, k).is_some(), "{a1} {a2}: {h:?}");
                }
            }
        }
    }
}

#[test]
fn hajos_join_preserves_criticality_at_level_three() {
    hajos_joins_stay_critical(
        3,
        &[
            bidirected_complete(3).unwrap(),
            dg_digraph(3, Some(DGParams::new(3, 1, 1).unwrap())).unwrap(),
        ],
    );
}

#[test]
fn hajos_join_preserves_criticality_at_level_four() {
    let factors: Vec<Digraph> = std::iter::once(bidirected_complete(4).unwrap())
        .chain(
            DGParams::all(4)
                .into_iter()
                .map(|p| dg_digraph(4, Some(p)).unwrap()),
        )
        .collect();
    hajos_joins_stay_critical(4, &factors);
}

#[test]
fn dirac_join_adds_dichromatic_numbers() {
    let mut rng = rng(0xd1ac);
    for _ in 0..200 {
        let n1 = rng.gen_range(1..=7);
        let n2 = rng.gen_range(1..=8 - n1);
        let (p1, p2) = (rng.gen_range(0.1..0.9), rng.gen_range(0.1..0.9));
        let d1 = random_digraph(&mut rng, n1, p1);
        let d2 = random_digraph(&mut rng, n2, p2);
        let j = dirac_join(&d1, &d2).unwrap();
        assert_eq!(j.arc_count(), d1.arc_count() + d2.arc_count() + 2 * n1 * n2);
        assert_eq!(
            dichromatic_number(&j),
            dichromatic_number(&d1) + dichromatic_number(&d2)
        );
    }
}

#[test]
fn dirac_join_of_critical_digraphs_is_critical() {
    let parts = [
        (directed_cycle(3).unwrap(), 2),
        (directed_cycle(4).unwrap(), 2),
        (bidirected_complete(2).unwrap(), 2),
        (Digraph::empty(1).unwrap(), 1),
        (
            dg_digraph(3, Some(DGParams::new(3, 1, 1).unwrap())).unwrap(),
            3,
        ),
    ];
    for (d1, k1) in &parts {
        for (d2, k2) in &parts {
            if d1.order() + d2.order() <= 9 {
                let j = dirac_join(d1, d2).unwrap();
                assert!(is_k_critical(&j, k1 + k2).is_some());
            }
        }
    }
}

#[test]
fn dirac_gallai_graphs_are_critical() {
    for k in 3..=5 {
        for p in DGParams::all(k) {
            let g = dg_graph(p).unwrap();
            assert_eq!(g.order(), 2 * k - 1);
            assert_eq!(chromatic_number(&g), k);
            assert!(is_k_critical(&biorient(&g), k).is_some(), "{p:?}");
        }
    }
    assert!(is_k_critical(&dg_digraph(2, None).unwrap(), 2).is_some());
}

#[test]
fn extremal_digraphs_have_the_formula_arc_count() {
    for k in 3..=8 {
        for p in 1..k {
            for d in extremal_family(k, p).unwrap() {
                assert_eq!(d.order(), k + p);
                assert_eq!(
                    d.arc_count() as u64,
                    ext_formula_digraph(k as u64, (k + p) as u64).unwrap()
                );
            }
        }
    }
    assert!(extremal_digraph(4, 1, Some(DGParams::new(3, 1, 1).unwrap())).is_err());
}
