//! Checkers for the weak bialgebra axioms, antipodes, and group-likes.
//!
//! Every checker enumerates basis tuples inside the materialized window,
//! skips (and counts) tuples whose products fall outside it, and reports
//! each violated equation with witnesses.

use crate::exactfield::Scalar;
use crate::report::{CheckBuilder, Report};
use crate::wba::{AlgebraError, BasedWBA, BasisId, Element, LinearMap, PairTensor, TripleTensor};

/// Runs the full Definition-2.1-style suite: associativity, unit laws,
/// coassociativity, counit laws, and the three weak compatibility equations.
pub fn check_wba_axioms(h: &BasedWBA) -> Result<Report, AlgebraError> {
    let mut report = Report::new(format!("wba-axioms {}", h.name()))
        .with_context("window", format!("{:?}", h.window()))
        .with_context("dim", h.total_dim());

    let ids: Vec<BasisId> = h.basis_ids().collect();
    let one = Scalar::one(h.field());
    let elems: Vec<Element> = ids
        .iter()
        .map(|id| Element::from_basis(*id, one.clone()))
        .collect();

    // unit laws
    let mut unit_law = CheckBuilder::new("algebra.unit");
    for (i, a) in ids.iter().enumerate() {
        match (h.mul(h.unit(), &elems[i]), h.mul(&elems[i], h.unit())) {
            (Ok(l), Ok(r)) => {
                let ok = l == elems[i] && r == elems[i];
                unit_law.record(ok, &[*a], h.show(&l), h.show(&r));
            }
            _ => unit_law.skip(),
        }
    }
    report.checks.push(unit_law.finish());

    // counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta
    let mut counit_law = CheckBuilder::new("coalgebra.counit");
    for (i, a) in ids.iter().enumerate() {
        let d = h.delta_basis(a)?;
        let mut left = Element::zero();
        let mut right = Element::zero();
        for ((l, r), c) in d.terms() {
            left.add_term(*r, c.mul(&h.counit_basis(l)));
            right.add_term(*l, c.mul(&h.counit_basis(r)));
        }
        let ok = left == elems[i] && right == elems[i];
        counit_law.record(ok, &[*a], h.show(&left), h.show(&right));
    }
    report.checks.push(counit_law.finish());

    // coassociativity
    let mut coassoc = CheckBuilder::new("coalgebra.coassoc");
    for a in &ids {
        let d = h.delta_basis(a)?;
        let mut lhs = TripleTensor::zero();
        let mut rhs = TripleTensor::zero();
        for ((l, r), c) in d.terms() {
            for ((x, y), c2) in h.delta_basis(l)?.terms() {
                lhs.add_term(*x, *y, *r, c.mul(c2));
            }
            for ((x, y), c2) in h.delta_basis(r)?.terms() {
                rhs.add_term(*l, *x, *y, c.mul(c2));
            }
        }
        coassoc.record(lhs == rhs, &[*a], "(Delta(x)id)Delta", "(id(x)Delta)Delta");
    }
    report.checks.push(coassoc.finish());

    // associativity
    let mut assoc = CheckBuilder::new("algebra.assoc");
    for (i, a) in ids.iter().enumerate() {
        for (j, b) in ids.iter().enumerate() {
            let ab = match h.mul_basis(a, b) {
                Ok(v) => v,
                Err(_) => {
                    // count one skip per missing pair rather than per triple
                    assoc.skip();
                    continue;
                }
            };
            for (k, c) in ids.iter().enumerate() {
                let lhs = match h.mul(&ab, &elems[k]) {
                    Ok(v) => v,
                    Err(_) => {
                        assoc.skip();
                        continue;
                    }
                };
                let bc = match h.mul_basis(b, c) {
                    Ok(v) => v,
                    Err(_) => {
                        assoc.skip();
                        continue;
                    }
                };
                let rhs = match h.mul(&elems[i], &bc) {
                    Ok(v) => v,
                    Err(_) => {
                        assoc.skip();
                        continue;
                    }
                };
                let _ = j;
                assoc.record(lhs == rhs, &[*a, *b, *c], h.show(&lhs), h.show(&rhs));
            }
        }
    }
    report.checks.push(assoc.finish());

    // Delta(xy) = Delta(x) Delta(y)
    let mut compat_mul = CheckBuilder::new("wba.compat.delta-mul");
    for a in &ids {
        for b in &ids {
            let ab = match h.mul_basis(a, b) {
                Ok(v) => v,
                Err(_) => {
                    compat_mul.skip();
                    continue;
                }
            };
            let lhs = h.delta(&ab)?;
            let rhs = match h.mul_pair(&h.delta_basis(a)?, &h.delta_basis(b)?) {
                Ok(v) => v,
                Err(_) => {
                    compat_mul.skip();
                    continue;
                }
            };
            compat_mul.record(lhs == rhs, &[*a, *b], h.show_pair(&lhs), h.show_pair(&rhs));
        }
    }
    report.checks.push(compat_mul.finish());

    // eps(xyz) = eps(x y') eps(y'' z) = eps(x y'') eps(y' z)
    let mut compat_counit = CheckBuilder::new("wba.compat.counit-mul");
    let mut compat_counit_op = CheckBuilder::new("wba.compat.counit-mul-op");
    for (i, a) in ids.iter().enumerate() {
        for b in &ids {
            let delta_b = h.delta_basis(b)?;
            for (k, c) in ids.iter().enumerate() {
                let full = match h
                    .mul_basis(a, b)
                    .and_then(|ab| h.mul(&ab, &elems[k]))
                {
                    Ok(v) => h.counit(&v),
                    Err(_) => {
                        compat_counit.skip();
                        compat_counit_op.skip();
                        continue;
                    }
                };
                let mut plain = Scalar::zero(h.field());
                let mut op = Scalar::zero(h.field());
                let mut overflow = false;
                for ((l, r), s) in delta_b.terms() {
                    let xl = h.mul(&elems[i], &Element::from_basis(*l, one.clone()));
                    let rz = h.mul(&Element::from_basis(*r, one.clone()), &elems[k]);
                    let xr = h.mul(&elems[i], &Element::from_basis(*r, one.clone()));
                    let lz = h.mul(&Element::from_basis(*l, one.clone()), &elems[k]);
                    match (xl, rz, xr, lz) {
                        (Ok(xl), Ok(rz), Ok(xr), Ok(lz)) => {
                            plain = plain.add(&h.counit(&xl).mul(&h.counit(&rz)).mul(s));
                            op = op.add(&h.counit(&xr).mul(&h.counit(&lz)).mul(s));
                        }
                        _ => {
                            overflow = true;
                            break;
                        }
                    }
                }
                if overflow {
                    compat_counit.skip();
                    compat_counit_op.skip();
                    continue;
                }
                compat_counit.record(full == plain, &[*a, *b, *c], &full, &plain);
                compat_counit_op.record(full == op, &[*a, *b, *c], &full, &op);
            }
        }
    }
    report.checks.push(compat_counit.finish());
    report.checks.push(compat_counit_op.finish());

    // (Delta (x) id) Delta (1) = (id (x) mu (x) id)(Delta(1) (x) Delta(1)), both orders
    let mut compat_unit = CheckBuilder::new("wba.compat.delta-unit");
    let mut compat_unit_op = CheckBuilder::new("wba.compat.delta-unit-op");
    {
        let lhs = h.delta2(h.unit())?;
        let d1 = h.delta_one().clone();
        let mut rhs = TripleTensor::zero();
        let mut rhs_op = TripleTensor::zero();
        let mut overflow = false;
        for ((a, b), c1) in d1.terms() {
            for ((x, y), c2) in d1.terms() {
                let mid = h.mul_basis(b, x);
                let mid_op = h.mul_basis(x, b);
                match (mid, mid_op) {
                    (Ok(m), Ok(mo)) => {
                        for (bm, cm) in m.terms() {
                            rhs.add_term(*a, *bm, *y, c1.mul(c2).mul(cm));
                        }
                        for (bm, cm) in mo.terms() {
                            rhs_op.add_term(*a, *bm, *y, c1.mul(c2).mul(cm));
                        }
                    }
                    _ => {
                        overflow = true;
                    }
                }
            }
        }
        if overflow {
            compat_unit.skip();
            compat_unit_op.skip();
        } else {
            compat_unit.record(lhs == rhs, &[], "Delta^2(1)", "(id(x)mu(x)id)(D1(x)D1)");
            compat_unit_op.record(lhs == rhs_op, &[], "Delta^2(1)", "(id(x)mu-op(x)id)(D1(x)D1)");
        }
    }
    report.checks.push(compat_unit.finish());
    report.checks.push(compat_unit_op.finish());

    Ok(report)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupLike {
    Right,
    Left,
    Both,
    Neither,
}

impl GroupLike {
    pub fn is_group_like(&self) -> bool {
        matches!(self, GroupLike::Both)
    }
}

impl std::fmt::Display for GroupLike {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GroupLike::Right => "right",
            GroupLike::Left => "left",
            GroupLike::Both => "both",
            GroupLike::Neither => "neither",
        };
        write!(f, "{s}")
    }
}

/// Classifies `g`: right group-like iff `Delta g = g1' (x) g1''` and
/// `eps_s(g) = 1`; left group-like iff `Delta g = 1'g (x) 1''g` and
/// `eps_t(g) = 1`; group-like when both hold.
pub fn is_group_like(h: &BasedWBA, g: &Element) -> Result<GroupLike, AlgebraError> {
    let dg = h.delta(g)?;
    let gg = PairTensor::of(g, g);
    let right = dg == h.mul_pair(&gg, h.delta_one())? && h.counital_source(g)? == *h.unit();
    let left = dg == h.mul_pair(h.delta_one(), &gg)? && h.counital_target(g)? == *h.unit();
    Ok(match (right, left) {
        (true, true) => GroupLike::Both,
        (true, false) => GroupLike::Right,
        (false, true) => GroupLike::Left,
        (false, false) => GroupLike::Neither,
    })
}

/// Verifies the three antipode equations at the given elements (labelled for
/// the report). `S` must be defined on every basis id reachable by `Delta`
/// from the tested elements.
pub fn check_antipode(
    h: &BasedWBA,
    s: &LinearMap,
    at: &[(String, Element)],
) -> Result<Report, AlgebraError> {
    let mut report = Report::new(format!("antipode {}", h.name()));
    let mut a1 = CheckBuilder::new("antipode.id-s");
    let mut a2 = CheckBuilder::new("antipode.s-id");
    let mut a3 = CheckBuilder::new("antipode.s-id-s");
    for (label, x) in at {
        let dx = h.delta(x)?;
        // mu (id (x) S) Delta = eps_t
        let mut lhs1 = Element::zero();
        // mu (S (x) id) Delta = eps_s
        let mut lhs2 = Element::zero();
        let mut overflow = false;
        for ((l, r), c) in dx.terms() {
            let el = Element::from_basis(*l, Scalar::one(h.field()));
            let er = Element::from_basis(*r, Scalar::one(h.field()));
            let t1 = h.mul(&el, s.image_of(r)?);
            let t2 = h.mul(s.image_of(l)?, &er);
            match (t1, t2) {
                (Ok(t1), Ok(t2)) => {
                    lhs1.add_scaled(&t1, c);
                    lhs2.add_scaled(&t2, c);
                }
                _ => {
                    overflow = true;
                    break;
                }
            }
        }
        if overflow {
            a1.skip();
            a2.skip();
        } else {
            let rhs1 = h.counital_target(x)?;
            let rhs2 = h.counital_source(x)?;
            a1.record(lhs1 == rhs1, &[], format!("{label}: {}", h.show(&lhs1)), h.show(&rhs1));
            a2.record(lhs2 == rhs2, &[], format!("{label}: {}", h.show(&lhs2)), h.show(&rhs2));
        }

        // mu (mu (x) id) (S (x) id (x) S) Delta^2 = S
        let d2 = h.delta2(x)?;
        let mut lhs3 = Element::zero();
        let mut overflow3 = false;
        for ((a, b, c3), coeff) in d2.terms() {
            let eb = Element::from_basis(*b, Scalar::one(h.field()));
            let t = h
                .mul(s.image_of(a)?, &eb)
                .and_then(|v| h.mul(&v, s.image_of(c3)?));
            match t {
                Ok(t) => lhs3.add_scaled(&t, coeff),
                Err(_) => {
                    overflow3 = true;
                    break;
                }
            }
        }
        if overflow3 {
            a3.skip();
        } else {
            let rhs3 = s.apply(x)?;
            a3.record(lhs3 == rhs3, &[], format!("{label}: {}", h.show(&lhs3)), h.show(&rhs3));
        }
    }
    report.checks.push(a1.finish());
    report.checks.push(a2.finish());
    report.checks.push(a3.finish());
    Ok(report)
}

/// `eps_s = eta . eps` on the basis: holds exactly when the WBA is a
/// bialgebra. Returns the report either way.
pub fn check_bialgebra(h: &BasedWBA) -> Result<Report, AlgebraError> {
    let mut report = Report::new(format!("bialgebra-test {}", h.name()));
    let mut c = CheckBuilder::new("bialgebra.eps_s-eq-eta-eps");
    for id in h.basis_ids() {
        let e = Element::from_basis(id, Scalar::one(h.field()));
        let lhs = h.counital_source(&e)?;
        let rhs = h.unit().scale(&h.counit(&e));
        c.record(lhs == rhs, &[id], h.show(&lhs), h.show(&rhs));
    }
    report.checks.push(c.finish());
    Ok(report)
}

/// Idempotency of the counital maps plus elementwise commutation of their
/// images, checked on the materialized basis.
pub fn check_counital_maps(h: &BasedWBA) -> Result<Report, AlgebraError> {
    let mut report = Report::new(format!("counital-maps {}", h.name()));
    let mut idem_s = CheckBuilder::new("counital.eps_s-idempotent");
    let mut idem_t = CheckBuilder::new("counital.eps_t-idempotent");
    let mut commute = CheckBuilder::new("counital.images-commute");
    let ids: Vec<BasisId> = h.basis_ids().collect();
    let mut images_s = Vec::new();
    let mut images_t = Vec::new();
    for id in &ids {
        let e = Element::from_basis(*id, Scalar::one(h.field()));
        let s = h.counital_source(&e)?;
        let t = h.counital_target(&e)?;
        let ss = h.counital_source(&s)?;
        let tt = h.counital_target(&t)?;
        idem_s.record(ss == s, &[*id], h.show(&ss), h.show(&s));
        idem_t.record(tt == t, &[*id], h.show(&tt), h.show(&t));
        images_s.push(s);
        images_t.push(t);
    }
    for (i, s) in images_s.iter().enumerate() {
        for (j, t) in images_t.iter().enumerate() {
            match (h.mul(s, t), h.mul(t, s)) {
                (Ok(st), Ok(ts)) => {
                    commute.record(st == ts, &[ids[i], ids[j]], h.show(&st), h.show(&ts));
                }
                _ => commute.skip(),
            }
        }
    }
    report.checks.push(idem_s.finish());
    report.checks.push(idem_t.finish());
    report.checks.push(commute.finish());
    Ok(report)
}
