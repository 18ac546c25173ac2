use num_traits::Signed;

use zopoly::exact::{det, rat_inverse, Int, IntMat, Rat};
use zopoly::extremal::{
    alon_vu, alon_vu_01, chi, chi_witness, diamond, flat_simplex_distance_sq,
    huge_coefficient_simplex, orient_chi_witness, verify_huge_facet, Corner,
};
use zopoly::hull::vrep_to_hrep;
use zopoly::randlab::rho_table;

/// χ computed from the rational inverse instead of the adjugate.
fn chi_by_inverse(a: &IntMat) -> Rat {
    let inv = rat_inverse(&a.to_rat()).unwrap();
    inv.to_rows().into_iter().flatten().map(|v| v.abs()).max().unwrap()
}

#[test]
fn alon_vu_column_is_column_of_inverse() {
    for m in 3..=4 {
        let b = alon_vu(m).unwrap();
        let inv = rat_inverse(&b.a.to_rat()).unwrap();
        for i in 0..b.n {
            assert_eq!(inv.get(i, b.i0), &b.y[i]);
        }
        assert_eq!(det(&b.a).unwrap().abs(), b.det_a);
        assert!(b.x[b.n - 1] > Rat::from_integer(b.product_bound.clone()));
        assert_eq!(chi_by_inverse(&b.a), chi(&b.a).unwrap());
        assert!(chi(&b.a).unwrap() >= b.column_max());
    }
}

#[test]
fn zero_one_source_has_chi_relation() {
    for m in 3..=4 {
        let b = alon_vu(m).unwrap();
        let a0 = alon_vu_01(&b).unwrap();
        assert_eq!(a0.rows(), b.n - 1);
        assert_eq!(chi_by_inverse(&a0), chi(&a0).unwrap());
        let h = huge_coefficient_simplex(&a0).unwrap();
        verify_huge_facet(&h).unwrap();
        assert_eq!(Rat::from_integer(h.facet.greatest_coefficient()), h.chi);
        let hull = vrep_to_hrep(&h.simplex).unwrap();
        // other facets may have even larger coefficients
        assert!(hull.greatest_coefficient() >= h.facet.greatest_coefficient());
    }
}

#[test]
fn flat_simplex_distance_bounds() {
    let a0 = alon_vu_01(&alon_vu(3).unwrap()).unwrap();
    let d = a0.rows();
    assert_eq!(d, 7);
    let oriented = orient_chi_witness(&a0, Corner::First).unwrap();
    let c = chi(&oriented).unwrap();
    let dist = flat_simplex_distance_sq(&oriented).unwrap();
    assert!(dist <= Rat::from_integer(1.into()) / (&c * &c), "{dist} vs χ = {c}");
    let rho = rho_table(d - 1).unwrap();
    let lower = Rat::new(1.into(), Int::from(d) * &rho * &rho);
    assert!(dist >= lower, "{dist} < {lower}");
}

#[test]
fn diamond_multiplies_chi_of_oriented_witnesses() {
    let a0 = alon_vu_01(&alon_vu(3).unwrap()).unwrap();
    let a = orient_chi_witness(&a0, Corner::Last).unwrap();
    let b = orient_chi_witness(&a0, Corner::First).unwrap();
    let ab = diamond(&a, &b).unwrap();
    assert_eq!(det(&ab).unwrap(), det(&a).unwrap() * det(&b).unwrap());
    let (ca, cb) = (chi(&a).unwrap(), chi(&b).unwrap());
    let cab = chi(&ab).unwrap();
    assert!(cab >= &ca * &cb, "{cab} < {ca}·{cb}");
    assert_eq!(chi_by_inverse(&ab), cab);
    let w = chi_witness(&ab).unwrap();
    assert_eq!(w.value, cab);
}
