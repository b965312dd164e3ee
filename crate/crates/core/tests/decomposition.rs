mod common;

use common::*;
use dicrit_core::canonical_form;
use dicrit_core::constructions::{dirac_join_all, directed_cycle, extremal_family};
use dicrit_core::decomposition::{
    check_factor_bounds, decompose, is_indecomposable, stehlik_check,
};
use dicrit_core::is_k_critical;
use rand::Rng;

#[test]
fn rebuilding_from_factors_gives_an_isomorphic_digraph() {
    let mut rng = rng(3);
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        let density = rng.gen_range(0.3..1.0);
        let d = random_digraph(&mut rng, n, density);
        let report = decompose(&d, 0);
        let factors: usize = report.factors.iter().map(|f| f.vertices.len()).sum();
        assert_eq!(factors, n);
        let rebuilt = report.rebuild().unwrap();
        assert_eq!(
            canonical_form(&rebuilt).unwrap(),
            canonical_form(&d).unwrap()
        );
        for f in &report.factors {
            assert!(is_indecomposable(&f.digraph).unwrap());
        }
    }
}

#[test]
fn critical_joins_satisfy_the_decomposition_bounds() {
    let c3 = directed_cycle(3).unwrap();
    let three = dirac_join_all([&c3, &c3, &c3]).unwrap();
    let report = decompose(&three, 6);
    assert_eq!(report.q, 3);
    assert!(check_factor_bounds(&three, 6, &report).is_ok());
    for k in 3..=5 {
        for p in 1..k {
            for d in extremal_family(k, p).unwrap() {
                assert!(is_k_critical(&d, k).is_some());
                assert!(stehlik_check(&d, k));
                if d.order() <= 2 * k - 2 {
                    let report = decompose(&d, k);
                    check_factor_bounds(&d, k, &report).unwrap();
                }
            }
        }
    }
}
