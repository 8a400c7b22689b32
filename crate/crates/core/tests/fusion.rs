use qdim_core::analysis::build_counterexample;
use qdim_core::fusion::{tl_dimension, Decomposition, FusionRing, GroupKind, IrrepLabel, Letter};
use qdim_core::spectra::RhoSpectrum;
use qdim_core::{Precision, Scalar};

fn prec() -> Precision {
    Precision::default()
}

fn catalogs() -> Vec<(&'static str, FusionRing)> {
    let ce = build_counterexample(&Scalar::from_int(2), prec()).unwrap();
    vec![
        ("kac n=3", FusionRing::ao_kac(3, prec()).unwrap()),
        ("SU_1/2(2)", FusionRing::su_q2(&Scalar::ratio(1, 2), prec()).unwrap()),
        ("A_u y=2", FusionRing::free_unitary(ce.spectrum, prec()).unwrap()),
        ("Z^2", FusionRing::group_dual(GroupKind::FreeAbelian { rank: 2 }, prec()).unwrap()),
        ("F_2", FusionRing::group_dual(GroupKind::Free { rank: 2 }, prec()).unwrap()),
    ]
}

fn tensor_power(s: &RhoSpectrum, n: usize) -> RhoSpectrum {
    (0..n).fold(RhoSpectrum::trivial(), |acc, _| acc.tensor(s, prec()))
}

#[test]
fn tl_associativity() {
    for n in 2..=4 {
        let ring = FusionRing::ao_kac(n, prec()).unwrap();
        for a in 0..=5 {
            for b in 0..=5 {
                for c in 0..=5 {
                    let (a, b, c) = (IrrepLabel::Tl(a), IrrepLabel::Tl(b), IrrepLabel::Tl(c));
                    let left = ring
                        .fuse_decompositions(&ring.fuse(&a, &b).unwrap(), &Decomposition::single(c.clone()))
                        .unwrap();
                    let right = ring
                        .fuse_decompositions(&Decomposition::single(a.clone()), &ring.fuse(&b, &c).unwrap())
                        .unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }
}

#[test]
fn dimension_homomorphism_and_reciprocity() {
    for (name, ring) in catalogs() {
        let labels: Vec<IrrepLabel> = ring
            .power_sequence(&ring.fundamental(), 3)
            .unwrap()
            .iter()
            .flat_map(|d| d.labels().cloned().collect::<Vec<_>>())
            .collect();
        for a in &labels {
            let a_bar = ring.conjugate(a).unwrap();
            let with_conj = ring.fuse(a, &a_bar).unwrap();
            assert_eq!(with_conj.multiplicity(&ring.trivial()), 1, "{name}: {a}");
            for b in &labels {
                let ab = ring.fuse(a, b).unwrap();
                assert_eq!(
                    ring.total_dimension(&ab).unwrap(),
                    ring.dimension(a).unwrap() * ring.dimension(b).unwrap(),
                    "{name}: {a} (x) {b}"
                );
            }
        }
    }
}

#[test]
fn conjugation_examples() {
    let ring = catalogs().swap_remove(2).1;
    use Letter::{UBar, U};
    assert_eq!(ring.conjugate(&IrrepLabel::Word(vec![U, UBar, U])).unwrap(), IrrepLabel::Word(vec![UBar, U, UBar]));
    let tl = FusionRing::ao_kac(3, prec()).unwrap();
    assert_eq!(tl.conjugate(&IrrepLabel::Tl(5)).unwrap(), IrrepLabel::Tl(5));
    let z = FusionRing::group_dual(GroupKind::FreeAbelian { rank: 1 }, prec()).unwrap();
    assert_eq!(z.conjugate(&IrrepLabel::Abelian(vec![3])).unwrap(), IrrepLabel::Abelian(vec![-3]));
}

#[test]
fn tl_symmetric_and_monotone() {
    let ring = FusionRing::su_q2(&Scalar::ratio(1, 2), prec()).unwrap();
    for r in 0..=10 {
        assert!(ring.irrep_spectrum(&IrrepLabel::Tl(r)).unwrap().is_symmetric(prec()).symmetric);
    }
    for n in 3..=6 {
        for r in 0..20 {
            assert!(tl_dimension(n, r + 1) > tl_dimension(n, r));
        }
    }
    // n = 2 is the boundary: z_r = r + 1.
    assert_eq!(tl_dimension(2, 9), Scalar::from_int(10));
}

#[test]
fn decomposed_powers_match_tensor_powers() {
    for (name, ring) in catalogs() {
        let fund = ring.spectrum_of(&ring.fundamental()).unwrap();
        for n in 0..=5 {
            let d = ring.decompose_power(&ring.fundamental(), n).unwrap();
            let via_irreps = ring.spectrum_of(&d).unwrap();
            let brute = tensor_power(&fund, n);
            assert!(via_irreps.approx_eq(&brute, prec()), "{name}, n = {n}");
        }
    }
}

#[test]
fn reducible_generator() {
    let ring = catalogs().swap_remove(2).1;
    let u = ring.fundamental();
    let mut gen = ring.fundamental();
    gen.merge(&ring.conjugate_decomposition(&u).unwrap()).unwrap();
    let s = ring.spectrum_of(&gen).unwrap();
    assert!(s.is_symmetric(prec()).symmetric);
    for n in 0..=3 {
        let d = ring.decompose_power(&gen, n).unwrap();
        assert!(ring.spectrum_of(&d).unwrap().approx_eq(&tensor_power(&s, n), prec()));
    }
}
