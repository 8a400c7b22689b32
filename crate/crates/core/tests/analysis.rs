use qdim_core::analysis::{
    audit_spectrum, build_counterexample, default_probes, estimate_rate, growth_table, theorem_audit, GrowthClass,
    RateBand,
};
use qdim_core::fusion::{FusionRing, GroupKind};
use qdim_core::spectra::RhoSpectrum;
use qdim_core::{Error, Precision, Scalar};

fn prec() -> Precision {
    Precision::default()
}

fn au_counterexample() -> FusionRing {
    let ce = build_counterexample(&Scalar::from_int(2), prec()).unwrap();
    FusionRing::free_unitary(ce.spectrum, prec()).unwrap()
}

#[test]
fn growth_tables_respect_invariants() {
    let rings = [
        FusionRing::ao_kac(3, prec()).unwrap(),
        au_counterexample(),
        FusionRing::group_dual(GroupKind::Free { rank: 2 }, prec()).unwrap(),
    ];
    for ring in &rings {
        let table = growth_table(ring, &ring.fundamental(), 5).unwrap();
        for pair in table.rows.windows(2) {
            assert!(pair[0].b <= pair[1].b);
        }
        assert!(table.rows.iter().all(|r| r.p <= r.b));
    }
}

#[test]
fn free_unitary_growth_is_base_three() {
    let ring = au_counterexample();
    let table = growth_table(&ring, &ring.fundamental(), 6).unwrap();
    assert_eq!(table.rows.iter().map(|r| r.p).collect::<Vec<_>>(), vec![1, 3, 9, 27, 81, 243, 729]);
    let est = estimate_rate(&table, &RateBand::default(), prec()).unwrap();
    assert_eq!(est.class, GrowthClass::ExponentialConsistent);
    assert!((est.base.to_f64() - 3.0).abs() < 0.15);
}

#[test]
fn free_group_is_exponential() {
    // F_2 has 4 * 3^(n-1) reduced words of length n.
    let ring = FusionRing::group_dual(GroupKind::Free { rank: 2 }, prec()).unwrap();
    let table = growth_table(&ring, &ring.fundamental(), 8).unwrap();
    assert_eq!(table.rows[2].b, 1 + 4 + 12);
    let est = estimate_rate(&table, &RateBand::default(), prec()).unwrap();
    assert_eq!(est.class, GrowthClass::ExponentialConsistent);
}

#[test]
fn counterexample_audit() {
    let ring = au_counterexample();
    let audit = theorem_audit(&ring, &ring.fundamental(), 6, &default_probes()).unwrap();
    assert!(!audit.symmetry.symmetric);
    assert!(!audit.newton_symmetric);
    let two = audit.contrapositive.iter().find(|c| c.t == Scalar::from_int(2)).unwrap();
    assert!((two.c.to_f64() - 1.5277863967).abs() < 1e-9);
    assert_eq!(two.confirmed_through(), 6);
    for pair in two.rows.windows(2) {
        assert!(pair[1].margin > pair[0].margin);
    }
    for row in &audit.rows {
        assert!(row.forward_margin() >= Scalar::one() - prec().tolerance());
        assert!(row.backward_margin() >= Scalar::one() - prec().tolerance());
    }
}

#[test]
fn symmetric_catalogs_have_no_contrapositive() {
    let rings = [
        FusionRing::su_q2(&Scalar::ratio(1, 2), prec()).unwrap(),
        FusionRing::ao_kac(3, prec()).unwrap(),
        FusionRing::group_dual(GroupKind::FreeAbelian { rank: 2 }, prec()).unwrap(),
    ];
    for ring in &rings {
        let audit = theorem_audit(ring, &ring.fundamental(), 6, &default_probes()).unwrap();
        assert!(audit.symmetry.symmetric && audit.newton_symmetric);
        assert!(audit.contrapositive.is_empty());
        assert_eq!(audit.rows.len(), 7 * 3);
    }
}

#[test]
fn audit_flags_inconsistent_input() {
    let ce = build_counterexample(&Scalar::from_int(2), prec()).unwrap();
    // The true P_U(n) is 3^n; P_U(n) = 1 would force d_t = d_{-t}.
    let fake = vec![1u128; 7];
    match audit_spectrum(&ce.spectrum, &fake, &default_probes(), prec()) {
        Err(Error::InequalityViolation { .. }) => {}
        other => panic!("expected a violation, got {other:?}"),
    }
    let kac = RhoSpectrum::kac(3);
    assert!(audit_spectrum(&kac, &[1, 1, 1], &default_probes(), prec()).is_ok());
}
