use super::*;
use crate::error::ErrorKind;
use crate::numerics::{Precision, Scalar};
use crate::spectra::RhoSpectrum;
use Letter::{UBar, U};

fn prec() -> Precision {
    Precision::default()
}

fn words(max_len: usize) -> Vec<IrrepLabel> {
    let mut out = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|w: &Vec<Letter>| [U, UBar].map(|l| [w.as_slice(), &[l]].concat()))
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out.into_iter().map(IrrepLabel::Word).collect()
}

fn au_diag() -> FusionRing {
    let spectrum = RhoSpectrum::new(vec![Scalar::from_int(2), Scalar::ratio(1, 2), Scalar::one()], prec()).unwrap();
    FusionRing::free_unitary(spectrum, prec()).unwrap()
}

#[test]
fn kac_tl_powers() {
    let ring = FusionRing::ao_kac(3, prec()).unwrap();
    let u3 = ring.decompose_power(&ring.fundamental(), 3).unwrap();
    assert_eq!(u3.multiplicity(&IrrepLabel::Tl(3)), 1);
    assert_eq!(u3.multiplicity(&IrrepLabel::Tl(1)), 2);
    assert_eq!(ring.total_dimension(&u3).unwrap(), 27);
    let s = ring.irrep_spectrum(&IrrepLabel::Tl(4)).unwrap();
    assert_eq!(s, RhoSpectrum::kac(55));
}

#[test]
fn su_q2_irreps_match_closed_form() {
    let q = Scalar::ratio(1, 2);
    let ring = FusionRing::su_q2(&q, prec()).unwrap();
    assert_eq!(ring.fundamental_spectrum().eigenvalues(), &[Scalar::from_int(2), Scalar::ratio(1, 2)]);
    for r in 0..8 {
        let derived = ring.irrep_spectrum(&IrrepLabel::Tl(r)).unwrap();
        let closed = su_q2_spectrum(&Scalar::from_int(2), r, prec()).unwrap();
        assert!(derived.approx_eq(&closed, prec()), "V({r}): {derived} vs {closed}");
    }
}

#[test]
fn free_unitary_associative_and_dimension_preserving() {
    let ring = au_diag();
    let ws = words(3);
    for a in &ws {
        for b in &ws {
            let ab = ring.fuse(a, b).unwrap();
            assert_eq!(
                ring.total_dimension(&ab).unwrap(),
                ring.dimension(a).unwrap() * ring.dimension(b).unwrap()
            );
            for c in ws.iter().take(7) {
                let left = ring.fuse_decompositions(&ab, &Decomposition::single(c.clone())).unwrap();
                let bc = ring.fuse(b, c).unwrap();
                let right = ring.fuse_decompositions(&Decomposition::single(a.clone()), &bc).unwrap();
                assert_eq!(left, right, "({a} {b}) {c}");
            }
        }
    }
}

#[test]
fn frobenius_reciprocity() {
    let ring = au_diag();
    let ws = words(3);
    for a in &ws {
        for b in &ws {
            let ab = ring.fuse(a, b).unwrap();
            let b_bar = ring.conjugate(b).unwrap();
            for c in &ws {
                let cb = ring.fuse(c, &b_bar).unwrap();
                assert_eq!(ab.multiplicity(c), cb.multiplicity(a), "{a} {b} {c}");
            }
        }
    }
}

#[test]
fn free_unitary_spectra() {
    let ring = au_diag();
    for w in words(4) {
        let s = ring.irrep_spectrum(&w).unwrap();
        assert_eq!(s.dim() as u128, ring.dimension(&w).unwrap());
        let conj = ring.irrep_spectrum(&ring.conjugate(&w).unwrap()).unwrap();
        assert!(conj.approx_eq(&s.inverse(), prec()), "{w}");
    }
    let uu = ring.irrep_spectrum(&IrrepLabel::Word(vec![U, U])).unwrap();
    let u = ring.fundamental_spectrum();
    assert!(uu.approx_eq(&u.tensor(u, prec()), prec()));
    // u (x) ū = 1 + uū
    let mixed = ring.irrep_spectrum(&IrrepLabel::Word(vec![U, UBar])).unwrap();
    assert_eq!(mixed.dim(), 8);
    let ones = mixed.eigenvalues().iter().filter(|x| x.approx_eq(&Scalar::one(), &prec().tolerance())).count();
    assert_eq!(ones, 2);
}

#[test]
fn tl_spectra_are_self_conjugate() {
    let ring = FusionRing::su_q2(&Scalar::ratio(1, 3), prec()).unwrap();
    for r in 0..6 {
        let s = ring.irrep_spectrum(&IrrepLabel::Tl(r)).unwrap();
        assert!(s.is_symmetric(prec()).symmetric);
        assert_eq!(ring.conjugate(&IrrepLabel::Tl(r)).unwrap(), IrrepLabel::Tl(r));
    }
}

#[test]
fn group_duals() {
    let ring = FusionRing::group_dual(GroupKind::Free { rank: 2 }, prec()).unwrap();
    let fund = ring.fundamental();
    assert_eq!(fund.len(), 4);
    let u2 = ring.decompose_power(&fund, 2).unwrap();
    assert_eq!(u2.multiplicity(&IrrepLabel::Free(vec![])), 4);
    assert_eq!(u2.len(), 13);
    assert_eq!(ring.fuse(&IrrepLabel::Free(vec![1, 2]), &IrrepLabel::Free(vec![-2])).unwrap(),
        Decomposition::single(IrrepLabel::Free(vec![1])));
    assert!(ring.check(&IrrepLabel::Free(vec![3])).is_err());
    assert!(ring.check(&IrrepLabel::Free(vec![1, -1])).is_err());

    let z = FusionRing::group_dual(GroupKind::FreeAbelian { rank: 1 }, prec()).unwrap();
    let z4 = z.decompose_power(&z.fundamental(), 4).unwrap();
    assert_eq!(z4.multiplicity(&IrrepLabel::Abelian(vec![0])), 6);
    assert_eq!(z4.len(), 5);
    assert_eq!(z.irrep_spectrum(&IrrepLabel::Abelian(vec![3])).unwrap(), RhoSpectrum::trivial());
}

#[test]
fn foreign_labels_and_guards() {
    let ring = FusionRing::ao_kac(3, prec()).unwrap();
    let err = ring.fuse(&IrrepLabel::Tl(1), &IrrepLabel::Word(vec![U])).unwrap_err();
    assert_eq!(err.kind(), ErrorKind::Validation);

    let guards = Guards { max_total_dim: 1000, ..Guards::default() };
    let ring = FusionRing::ao_kac(3, prec()).unwrap().with_guards(guards);
    assert!(ring.decompose_power(&ring.fundamental(), 6).is_ok());
    let err = ring.decompose_power(&ring.fundamental(), 7).unwrap_err();
    assert_eq!(err.kind(), ErrorKind::ResourceGuard);

    let guards = Guards { max_spectrum_len: 10, ..Guards::default() };
    let ring = FusionRing::ao_kac(3, prec()).unwrap().with_guards(guards);
    assert_eq!(ring.irrep_spectrum(&IrrepLabel::Tl(3)).unwrap_err().kind(), ErrorKind::ResourceGuard);
}

#[test]
fn spectrum_of_reducible() {
    let ring = FusionRing::su_q2(&Scalar::ratio(1, 2), prec()).unwrap();
    let u2 = ring.decompose_power(&ring.fundamental(), 2).unwrap();
    let s = ring.spectrum_of(&u2).unwrap();
    let f = ring.fundamental_spectrum();
    assert!(s.approx_eq(&f.tensor(f, prec()), prec()));
}
