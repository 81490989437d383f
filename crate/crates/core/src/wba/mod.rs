//! Based (co)algebras, weak bialgebras, and their axiom checkers.

mod algebra;
mod check;
mod element;
pub mod json;
mod linmap;

pub use algebra::{tensor_wba, AlgebraError, BasedWBA, TensorWba, WbaBuilder};
pub use check::{
    check_antipode, check_bialgebra, check_counital_maps, check_wba_axioms, is_group_like,
    GroupLike,
};
pub use element::{BasisId, Element, PairTensor, TripleTensor};
pub use linmap::LinearMap;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::exactfield::{CycloField, Scalar};

    #[test]
    fn sweedler_relations() {
        let (w, _) = catalog::sweedler_rational(1);
        let y = w.gen("y").unwrap();
        let f = w.gen("f").unwrap();
        // y^2 = 0, yf = -fy, eta(1) x = x
        assert!(w.mul(&y, &y).unwrap().is_zero());
        assert_eq!(w.mul(&y, &f).unwrap(), w.gen("fy").unwrap().neg());
        assert_eq!(w.mul(w.unit(), &y).unwrap(), y);
    }

    #[test]
    fn sweedler_coproducts() {
        let (w, _) = catalog::sweedler_rational(1);
        let y = w.gen("y").unwrap();
        let dy = w.delta(&y).unwrap();
        let mut expect = PairTensor::zero();
        expect.add_term(
            w.by_label("y").unwrap(),
            w.by_label("1").unwrap(),
            Scalar::one(w.field()),
        );
        expect.add_term(
            w.by_label("f").unwrap(),
            w.by_label("y").unwrap(),
            Scalar::one(w.field()),
        );
        assert_eq!(dy, expect);
    }

    #[test]
    fn sweedler_axioms_and_mutation() {
        let (w, _) = catalog::sweedler_rational(1);
        let report = check_wba_axioms(&w).unwrap();
        assert!(report.passed(), "{report}");

        // negative control: corrupt f*y with a sign flip
        let f = w.by_label("f").unwrap();
        let y = w.by_label("y").unwrap();
        let bad = w.with_mul_entry(f, y, w.gen("fy").unwrap().neg());
        let report = check_wba_axioms(&bad).unwrap();
        assert!(!report.passed());
        let failing: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| c.axiom.as_str())
            .collect();
        assert!(
            failing.iter().any(|a| a.starts_with("wba.compat") || *a == "algebra.assoc"),
            "unexpected failures: {failing:?}"
        );
        // witnesses locate a concrete basis tuple
        assert!(report
            .checks
            .iter()
            .filter(|c| !c.passed())
            .all(|c| c.witnesses.iter().all(|w| !w.basis.is_empty())));
    }

    #[test]
    fn counital_maps_on_sweedler() {
        let (w, _) = catalog::sweedler_rational(1);
        let y = w.gen("y").unwrap();
        let f = w.gen("f").unwrap();
        // bialgebra: eps_s = eta . eps
        assert!(w.counital_source(&y).unwrap().is_zero());
        assert_eq!(w.counital_source(&f).unwrap(), *w.unit());
        let essy = w
            .counital_source(&w.counital_source(&y).unwrap())
            .unwrap();
        assert_eq!(essy, w.counital_source(&y).unwrap());
        assert!(check_counital_maps(&w).unwrap().passed());
        assert!(check_bialgebra(&w).unwrap().passed());
    }

    #[test]
    fn group_like_classification() {
        let (w, _) = catalog::sweedler_rational(1);
        let f = w.gen("f").unwrap();
        let y = w.gen("y").unwrap();
        assert_eq!(is_group_like(&w, &f).unwrap(), GroupLike::Both);
        assert_eq!(is_group_like(&w, &y).unwrap(), GroupLike::Neither);

        let h4 = catalog::h4_rational();
        for id in h4.basis_ids() {
            let e = Element::from_basis(id, Scalar::one(h4.field()));
            assert_eq!(is_group_like(&h4, &e).unwrap(), GroupLike::Both);
        }
    }

    #[test]
    fn antipode_candidates_on_sweedler() {
        let (w, _) = catalog::sweedler_rational(1);
        let at: Vec<(String, Element)> = ["1", "f", "y", "fy"]
            .iter()
            .map(|l| (l.to_string(), w.gen(l).unwrap()))
            .collect();

        // S(f) = f, S(y) = -fy satisfies the axioms
        let mut good = LinearMap::new();
        good.define(w.by_label("1").unwrap(), w.gen("1").unwrap());
        good.define(w.by_label("f").unwrap(), w.gen("f").unwrap());
        good.define(w.by_label("y").unwrap(), w.gen("fy").unwrap().neg());
        good.define(w.by_label("fy").unwrap(), w.gen("y").unwrap());
        assert!(check_antipode(&w, &good, &at).unwrap().passed());

        // S(f) = f, S(y) = y fails at y
        let mut bad = LinearMap::new();
        bad.define(w.by_label("1").unwrap(), w.gen("1").unwrap());
        bad.define(w.by_label("f").unwrap(), w.gen("f").unwrap());
        bad.define(w.by_label("y").unwrap(), w.gen("y").unwrap());
        bad.define(w.by_label("fy").unwrap(), w.gen("fy").unwrap());
        let report = check_antipode(&w, &bad, &at).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn tensor_of_sweedler_and_h4() {
        let field = CycloField::rationals();
        let (w, _) = catalog::sweedler(&field, Scalar::one(&field)).unwrap();
        let h4 = catalog::h4(&field).unwrap();
        let t = tensor_wba(&w, &h4).unwrap();
        assert_eq!(t.wba().total_dim(), 16);
        let f1 = t
            .embed(&w.gen("f").unwrap(), &h4.gen("1bar").unwrap())
            .unwrap();
        assert_eq!(is_group_like(t.wba(), &f1).unwrap(), GroupLike::Both);
        assert!(check_wba_axioms(t.wba()).unwrap().passed());
    }

    #[test]
    fn json_round_trip_identity() {
        let (w, _) = catalog::sweedler_rational(2);
        let emitted = json::emit(&w);
        let loaded = json::load(&emitted).unwrap();
        assert_eq!(json::emit(&loaded), emitted);
        assert!(check_wba_axioms(&loaded).unwrap().passed());
    }
}
