//! Integration checks for the catalog constructors: quotient dimensions,
//! determinants, localizations, Laurent models, and the universal map.

use wbafrac_core::catalog;
use wbafrac_core::exactfield::{CycloField, Scalar};
use wbafrac_core::graded::check_central;
use wbafrac_core::localization::{
    check_ore, laurent_model, localize, universal_map, Equivalence, Fraction, LocalizedWBA,
};
use wbafrac_core::wba::{
    check_antipode, check_bialgebra, check_wba_axioms, is_group_like, Element, GroupLike,
    LinearMap,
};

#[test]
fn mq2_dimensions_and_determinant() {
    let m = catalog::mq2(3, 3).unwrap();
    let dims: Vec<(i32, u32, u32)> = m.quotient.dims();
    assert_eq!(
        dims,
        vec![(0, 1, 1), (1, 4, 4), (2, 16, 10), (3, 64, 20)],
        "free vs quotient dimension table"
    );
    assert_eq!(is_group_like(m.wba(), &m.det).unwrap(), GroupLike::Both);
    assert!(check_central(m.wba(), "detq", &m.det).unwrap().passed());
    // a is not central: witness exists
    let a = m.wba().gen("a").unwrap();
    assert!(!check_central(m.wba(), "a", &a).unwrap().passed());
    assert!(check_bialgebra(m.wba()).unwrap().passed());
}

#[test]
fn mq2_rform_generator_values() {
    let m = catalog::mq2(3, 2).unwrap();
    let h = m.wba();
    let g = |l: &str| h.gen(l).unwrap();
    let q = &m.q;
    let q_inv = q.inv().unwrap();
    assert_eq!(m.rform.eval(h, &g("c"), &g("b")).unwrap(), q.sub(&q_inv));
    assert_eq!(m.rform.eval(h, &g("a"), &g("a")).unwrap(), q.clone());
    assert!(m.rform.eval(h, &g("a"), &g("b")).unwrap().is_zero());
    // rbar swaps q and q^-1 on generators
    assert_eq!(m.rform.eval_bar(h, &g("a"), &g("a")).unwrap(), q_inv);
    assert_eq!(
        m.rform.eval_bar(h, &g("c"), &g("b")).unwrap(),
        q_inv.sub(q)
    );
}

#[test]
fn mq2_coquasi_suite_low_cutoff() {
    let m = catalog::mq2(3, 2).unwrap();
    let gl = vec![("detq".to_string(), m.det.clone())];
    let report =
        wbafrac_core::coquasi::check_coquasi(m.wba(), &m.rform, &gl).unwrap();
    assert!(report.passed(), "{report}");
}

#[test]
fn mhatq2_r3_quotient() {
    let m = catalog::mhatq2(3, 3).unwrap();
    let dims = m.quotient.dims();
    println!("mhatq2 r=3 dims: {dims:?}");
    assert_eq!(dims[0], (0, 4, 4));
    assert_eq!(dims[1].1, 4);
    // determinant is group-like and central in the quotient
    assert!(!m.det.is_zero());
    assert_eq!(is_group_like(m.wba(), &m.det).unwrap(), GroupLike::Both);
    assert!(check_central(m.wba(), "detq", &m.det).unwrap().passed());
    // graph WBAs over two or more vertices are not bialgebras
    assert!(!check_bialgebra(m.wba()).unwrap().passed());
}

#[test]
fn mhatq2_regression_dimension_tables() {
    // the level family's quotient dimensions are computed, not asserted a
    // priori; these values are frozen as regressions of the elimination
    let m4 = catalog::mhatq2(4, 3).unwrap();
    assert_eq!(
        m4.quotient.dims(),
        vec![(0, 9, 9), (1, 16, 16), (2, 36, 14), (3, 64, 8)]
    );
}

#[test]
fn radford_tensor_behaviour() {
    let field = CycloField::rationals();
    let h = catalog::radford_tensor(&field, 3).unwrap();
    assert!(check_wba_axioms(&h).unwrap().passed());
    assert!(check_bialgebra(&h).unwrap().passed());
    // the unit is group-like, the coalgebra vector v is not
    assert_eq!(
        is_group_like(&h, h.unit()).unwrap(),
        GroupLike::Both
    );
    assert_eq!(
        is_group_like(&h, &h.gen("v").unwrap()).unwrap(),
        GroupLike::Neither
    );
    // eps(v) = 1 even though v is not group-like
    assert!(h.counit(&h.gen("v").unwrap()).is_one());
    // localization at G = {1} keeps the dimension table
    let monoid = wbafrac_core::localization::DenominatorMonoid::central(
        &h,
        vec![("1".to_string(), h.unit().clone())],
        wbafrac_core::localization::AnnihilatorStrategy::DeclaredRegular,
    )
    .unwrap();
    let harc = std::sync::Arc::new(h);
    let loc = LocalizedWBA::new(&harc, monoid).unwrap();
    for (d, dim, image, conclusive) in loc.phi_image_dims() {
        assert_eq!(dim as usize, image, "degree {d}");
        assert!(conclusive);
    }
}

#[test]
fn h4_localization_collapses_to_dimension_one() {
    let h = std::sync::Arc::new(catalog::h4_rational());
    let monoid = catalog::h4_monoid(&h).unwrap();
    let loc = LocalizedWBA::new(&h, monoid).unwrap();
    let mat = localize(&loc).unwrap();
    assert_eq!(mat.wba().total_dim(), 1);
    assert!(check_wba_axioms(mat.wba()).unwrap().passed());
    // kernel = span of differences of equal-coefficient-sum elements
    assert_eq!(loc.kernel().total_kernel_dim(), 3);
    let zero = h.gen("0bar").unwrap();
    for l in ["1bar", "2bar", "3bar"] {
        let diff = h.gen(l).unwrap().sub(&zero);
        assert!(loc.kernel().reduce(&diff).is_zero());
    }
    // the paper's fraction identity: 2bar/0bar = 3bar/1bar
    let a = Fraction::new(h.gen("2bar").unwrap(), vec![0]);
    let b = Fraction::new(h.gen("3bar").unwrap(), vec![1]);
    assert_eq!(loc.eq(&a, &b).unwrap(), Equivalence::Equal);
    // but 2bar/0bar != (2bar + 3bar)/0bar
    let c = Fraction::new(
        h.gen("2bar").unwrap().add(&h.gen("3bar").unwrap()),
        vec![0],
    );
    assert_eq!(loc.eq(&a, &c).unwrap(), Equivalence::NotEqual);
}

#[test]
fn sweedler_localization_is_isomorphic_to_itself() {
    let (w, rform) = catalog::sweedler_rational(1);
    let monoid = catalog::sweedler_monoid(&w, &rform).unwrap();
    let w = std::sync::Arc::new(w);
    let loc = LocalizedWBA::new(&w, monoid).unwrap();
    assert_eq!(loc.kernel().total_kernel_dim(), 0);
    let mat = localize(&loc).unwrap();
    assert_eq!(mat.wba().total_dim(), 4);
    assert!(check_wba_axioms(mat.wba()).unwrap().passed());
    // the canonical map is the identity on structure constants
    for a in w.basis_ids() {
        for b in w.basis_ids() {
            let ea = Element::from_basis(a, Scalar::one(w.field()));
            let eb = Element::from_basis(b, Scalar::one(w.field()));
            let host_prod = w.mul(&ea, &eb).unwrap();
            let image_prod = mat
                .wba()
                .mul(&mat.phi().apply(&ea).unwrap(), &mat.phi().apply(&eb).unwrap())
                .unwrap();
            assert_eq!(mat.phi().apply(&host_prod).unwrap(), image_prod);
        }
        let ea = Element::from_basis(a, Scalar::one(w.field()));
        assert_eq!(
            w.counit(&ea),
            mat.wba().counit(&mat.phi().apply(&ea).unwrap())
        );
    }
}

#[test]
fn sweedler_fraction_arithmetic() {
    let (w, rform) = catalog::sweedler_rational(1);
    let monoid = catalog::sweedler_monoid(&w, &rform).unwrap();
    let w = std::sync::Arc::new(w);
    let loc = LocalizedWBA::new(&w, monoid).unwrap();
    let y = w.gen("y").unwrap();
    let fy = w.gen("fy").unwrap();
    // y/f + y/f = 2y/f
    let yf = Fraction::new(y.clone(), vec![0]);
    let two_yf = loc.add(&yf, &yf).unwrap();
    let expect = Fraction::new(y.scale(&Scalar::from_integer(w.field(), 2)), vec![0]);
    assert!(loc.eq_strict(&two_yf, &expect).unwrap());
    // (y/f) * (y/1) = y I_f^-1(y) / f = -y^2/f = 0
    let y1 = loc.phi(&y);
    let prod = loc.mul(&yf, &y1).unwrap();
    assert_eq!(loc.is_zero_fraction(&prod).unwrap(), Equivalence::Equal);
    // 0/1 + x/g = x/g
    let z = loc.zero();
    let s = loc.add(&z, &yf).unwrap();
    assert!(loc.eq_strict(&s, &yf).unwrap());
    // x/g = (x I_g^-1(h))/(hg): equivalent pair by construction
    let x = fy.add(&w.gen("1").unwrap());
    let xg = Fraction::new(x.clone(), vec![0]);
    let twisted = loc
        .monoid()
        .action()
        .apply_word_inverse(&[0], &loc.den_value(&[0]).unwrap())
        .unwrap();
    let xh = Fraction::new(w.mul(&x, &twisted).unwrap(), vec![0, 0]);
    assert!(loc.eq_strict(&xg, &xh).unwrap());
    // coproduct well-definedness across that pair
    let da = loc.delta(&xg).unwrap();
    let db = loc.delta(&xh).unwrap();
    assert_eq!(loc.pair_eq(&da, &db).unwrap(), Equivalence::Equal);
    assert_eq!(loc.counit(&xg), loc.counit(&xh));
}

#[test]
fn ore_conditions_on_catalog_pairs() {
    let (w, rform) = catalog::sweedler_rational(1);
    let monoid = catalog::sweedler_monoid(&w, &rform).unwrap();
    let report = check_ore(&w, &monoid).unwrap();
    assert!(report.passed(), "{report}");

    let h = catalog::h4_rational();
    let monoid = catalog::h4_monoid(&h).unwrap();
    let report = check_ore(&h, &monoid).unwrap();
    assert!(report.passed(), "{report}");
    // 0bar genuinely has annihilators, so (S2) was not vacuous
    let s2 = report.check("ore.S2.annihilator-witness").unwrap();
    assert!(s2.checked >= 2);
}

#[test]
fn glq2_laurent_model() {
    let m = catalog::mq2(3, 3).unwrap();
    let gl = laurent_model(m.wba(), "detq", &m.det, 2).unwrap();
    let h = gl.wba();

    // det * X = 1
    let det = gl.embed(&m.det).unwrap();
    let x = gl.x().unwrap();
    assert_eq!(h.mul(&det, &x).unwrap(), *h.unit());
    assert_eq!(h.mul(&x, &det).unwrap(), *h.unit());

    // antipode table on the generators and X
    let q = &m.q;
    let host = m.wba();
    let gen = |l: &str| host.gen(l).unwrap();
    let emb1 = |l: &str| gl.embed_with_power(&gen(l), 1).unwrap();
    let mut s = LinearMap::new();
    let id_of = |l: &str| *gl.embed(&gen(l)).unwrap().support().next().unwrap();
    s.define(id_of("1"), gl.embed(host.unit()).unwrap());
    s.define(id_of("a"), emb1("d"));
    s.define(id_of("b"), emb1("b").scale(&q.neg()));
    s.define(id_of("c"), emb1("c").scale(&q.inv().unwrap().neg()));
    s.define(id_of("d"), emb1("a"));
    let x_id = *x.support().next().unwrap();
    s.define(x_id, det.clone());
    let at: Vec<(String, Element)> = [("a", gl.embed(&gen("a")).unwrap()),
        ("b", gl.embed(&gen("b")).unwrap()),
        ("c", gl.embed(&gen("c")).unwrap()),
        ("d", gl.embed(&gen("d")).unwrap()),
        ("X", x.clone())]
    .into_iter()
    .map(|(l, e)| (l.to_string(), e))
    .collect();
    let report = check_antipode(h, &s, &at).unwrap();
    assert!(report.passed(), "{report}");

    // Laurent <-> fraction maps are mutually inverse on generators
    let monoid = m.det_monoid().unwrap();
    let loc = LocalizedWBA::new(m.wba(), monoid).unwrap();
    for l in ["a", "b", "c", "d"] {
        let e = gen(l);
        let model = gl.embed(&e).unwrap();
        let (num, n) = gl.to_fraction(&model).unwrap();
        let back = gl.embed_with_power(&num, n).unwrap();
        assert_eq!(back, model);
        let frac = Fraction::new(num, vec![0; n]);
        assert!(loc.eq_strict(&frac, &loc.phi(&e)).unwrap());
    }
    // X -> 1/det -> X
    let (num, n) = gl.to_fraction(&x).unwrap();
    assert_eq!(n, 1);
    let back = gl.embed_with_power(&num, n).unwrap();
    assert_eq!(back, x);
}

#[test]
fn universal_map_mq2_to_glq2() {
    let m = catalog::mq2(3, 3).unwrap();
    let gl = laurent_model(m.wba(), "detq", &m.det, 2).unwrap();
    let monoid = m.det_monoid().unwrap();
    let loc = LocalizedWBA::new(m.wba(), monoid).unwrap();

    // psi: Mq2 -> GLq2 is the canonical embedding
    let mut psi = LinearMap::new();
    for id in m.wba().basis_ids() {
        let e = Element::from_basis(id, Scalar::one(m.wba().field()));
        psi.define(id, gl.embed(&e).unwrap());
    }
    let (map, report) = universal_map(&loc, &psi, gl.wba()).unwrap();
    assert!(report.passed(), "{report}");
    // sigma(a/det) = psi(a) X
    let a = m.wba().gen("a").unwrap();
    let frac = Fraction::new(a.clone(), vec![0]);
    let sigma = map.sigma(&frac).unwrap();
    let expect = gl
        .wba()
        .mul(&gl.embed(&a).unwrap(), &gl.x().unwrap())
        .unwrap();
    assert_eq!(sigma, expect);
}

#[test]
fn glhatq2_exists_and_det_inverts() {
    let m = catalog::mhatq2(3, 3).unwrap();
    let gl = laurent_model(m.wba(), "detq", &m.det, 1).unwrap();
    let det = gl.embed(&m.det).unwrap();
    let x = gl.x().unwrap();
    assert_eq!(gl.wba().mul(&det, &x).unwrap(), *gl.wba().unit());
}
