//! Closed forms against frozen lattice-engine output. Regenerate the
//! fixtures with `mkls verify --freeze crates/core/tests/fixtures/oracle.json`.

use std::collections::BTreeMap;

use mkls_core::fixtures::{FixtureEntry, FixtureKind};
use mkls_core::formulas::*;
use mkls_core::{invariants, QContext};

fn load() -> Vec<FixtureEntry> {
    let text = include_str!("fixtures/oracle.json");
    serde_json::from_str(text).expect("fixture file parses")
}

fn p(e: &FixtureEntry, name: &str) -> u32 {
    e.params[name] as u32
}

#[test]
fn fixtures_cover_every_family() {
    let fx = load();
    let count = |kind: FixtureKind| fx.iter().filter(|e| e.kind == kind).count();
    assert_eq!(count(FixtureKind::Uniform), 45);
    assert_eq!(count(FixtureKind::Qniform), 10);
    assert_eq!(count(FixtureKind::StressedPair), 28);
    assert_eq!(count(FixtureKind::RelaxedStressedPair), 28);
    assert!(count(FixtureKind::SparsePaving) > 0);
}

#[test]
fn frozen_values_are_reproduced_by_the_engine() {
    for e in load() {
        let m = e.matroid.build().unwrap();
        assert_eq!(invariants(&m).unwrap(), e.invariants, "{:?} {:?}", e.kind, e.params);
    }
}

#[test]
fn uniform_closed_forms_match_frozen_oracle() {
    for e in load().iter().filter(|e| e.kind == FixtureKind::Uniform) {
        let (k, n) = (p(e, "k"), p(e, "n"));
        let y = equiv_y_uniform(k, n).unwrap().dimension_poly().unwrap();
        assert_eq!(y, e.invariants.y, "k={k} n={n}");
        let q = equiv_q_uniform(k, n).unwrap().dimension_poly().unwrap();
        assert_eq!(q, e.invariants.inv_kl_q, "k={k} n={n}");
        let mu = equiv_mobius_uniform(k, n).unwrap().dimension();
        assert_eq!(mu, e.invariants.char_poly.coeff(0), "k={k} n={n}");
    }
}

#[test]
fn qniform_closed_forms_match_frozen_oracle() {
    for e in load().iter().filter(|e| e.kind == FixtureKind::Qniform) {
        let (k, n) = (p(e, "k"), p(e, "n"));
        let ctx = QContext::new(e.params["q"]).unwrap();
        assert_eq!(ordinary_y_qniform(k, n, &ctx).unwrap(), e.invariants.y, "k={k} n={n}");
        let qdim = equiv_y_qniform(k, n).unwrap().qdimension_poly(&ctx).unwrap();
        assert_eq!(qdim, e.invariants.y, "k={k} n={n}");
        let chi = equiv_char_qniform(k, n).unwrap().qdimension_poly(&ctx).unwrap();
        assert_eq!(chi, e.invariants.char_poly, "k={k} n={n}");
    }
}

#[test]
fn paving_closed_forms_match_frozen_oracle() {
    for e in load() {
        match e.kind {
            FixtureKind::StressedPair => {
                let (k, h) = (p(&e, "k"), p(&e, "h"));
                let lambda = BTreeMap::from([(h, 1)]);
                assert_eq!(ordinary_paving_y(k, h + 1, &lambda), e.invariants.y, "k={k} h={h}");
                let equi = equiv_y_stressed_pair(k, h).unwrap().dimension_poly().unwrap();
                assert_eq!(equi, e.invariants.y, "k={k} h={h}");
            }
            FixtureKind::RelaxedStressedPair => {
                let (k, h) = (p(&e, "k"), p(&e, "h"));
                assert_eq!(ordinary_y_uniform(k, h + 1), e.invariants.y, "k={k} h={h}");
            }
            FixtureKind::SparsePaving => {
                let (k, n, c) = (p(&e, "k"), p(&e, "n"), p(&e, "circuit_hyperplanes"));
                assert_eq!(sparse_paving_y(k, n, c), e.invariants.y, "k={k} n={n} c={c}");
            }
            _ => {}
        }
    }
}
