//! The coquasi-triangularity suite: defining axioms of a universal r-form,
//! plus the derived identity suites used as regression oracles (they are
//! theorems, so any failure indicts the implementation or the tables).

use std::collections::BTreeMap;

use crate::coquasi::RForm;
use crate::exactfield::Scalar;
use crate::report::{CheckBuilder, Report};
use crate::wba::{AlgebraError, BasedWBA, BasisId, Element, PairTensor};

struct Ctx<'a> {
    h: &'a BasedWBA,
    r: &'a RForm,
    ids: Vec<BasisId>,
    elems: BTreeMap<BasisId, Element>,
    eps_s: BTreeMap<BasisId, Element>,
    eps_t: BTreeMap<BasisId, Element>,
}

impl<'a> Ctx<'a> {
    fn new(h: &'a BasedWBA, r: &'a RForm) -> Result<Self, AlgebraError> {
        let ids: Vec<BasisId> = h.basis_ids().collect();
        let mut elems = BTreeMap::new();
        let mut eps_s = BTreeMap::new();
        let mut eps_t = BTreeMap::new();
        for id in &ids {
            let e = Element::from_basis(*id, Scalar::one(h.field()));
            eps_s.insert(*id, h.counital_source(&e)?);
            eps_t.insert(*id, h.counital_target(&e)?);
            elems.insert(*id, e);
        }
        Ok(Ctx {
            h,
            r,
            ids,
            elems,
            eps_s,
            eps_t,
        })
    }

    fn e(&self, id: &BasisId) -> &Element {
        &self.elems[id]
    }

    fn rv(&self, x: &Element, y: &Element) -> Result<Scalar, AlgebraError> {
        self.r.eval(self.h, x, y)
    }

    fn rbv(&self, x: &Element, y: &Element) -> Result<Scalar, AlgebraError> {
        self.r.eval_bar(self.h, x, y)
    }
}

/// Runs the full Definition-2.3 axiom set plus the twelve-identity and
/// four-identity derived suites on the materialized basis (the latter at the
/// supplied group-like elements).
pub fn check_coquasi(
    h: &BasedWBA,
    rform: &RForm,
    group_likes: &[(String, Element)],
) -> Result<Report, AlgebraError> {
    let ctx = Ctx::new(h, rform)?;
    let mut report = Report::new(format!("coquasi {}", h.name()))
        .with_context("mode", rform.mode())
        .with_context("dim", h.total_dim());

    defining_axioms(&ctx, &mut report)?;
    prop_suite_pairs(&ctx, &mut report)?;
    prop_suite_group_likes(&ctx, group_likes, &mut report)?;
    Ok(report)
}

fn defining_axioms(ctx: &Ctx, report: &mut Report) -> Result<(), AlgebraError> {
    let h = ctx.h;
    let mut def_a = CheckBuilder::new("coquasi.def.eps-left");
    let mut def_b = CheckBuilder::new("coquasi.def.eps-right");
    let mut inv1 = CheckBuilder::new("coquasi.inv1");
    let mut inv2 = CheckBuilder::new("coquasi.inv2");
    let mut intertwine = CheckBuilder::new("coquasi.intertwiner");

    for x in &ctx.ids {
        let dx = h.delta_basis(x)?;
        for y in &ctx.ids {
            let dy = h.delta_basis(y)?;
            let direct = ctx.rv(ctx.e(x), ctx.e(y))?;

            let mut lhs_a = Scalar::zero(h.field());
            let mut lhs_b = Scalar::zero(h.field());
            let mut lhs_inv1 = Scalar::zero(h.field());
            let mut lhs_inv2 = Scalar::zero(h.field());
            let mut int_l = Element::zero();
            let mut int_r = Element::zero();
            let mut overflow = false;
            for ((x1, x2), cx) in dx.terms() {
                for ((y1, y2), cy) in dy.terms() {
                    let c = cx.mul(cy);
                    let (p_xy, p_yx) = match (h.mul_basis(x1, y1), h.mul_basis(y2, x2)) {
                        (Ok(a), Ok(b)) => (a, b),
                        _ => {
                            overflow = true;
                            break;
                        }
                    };
                    lhs_a = lhs_a.add(
                        &h.counit(&p_xy)
                            .mul(&ctx.rv(ctx.e(x2), ctx.e(y2))?)
                            .mul(&c),
                    );
                    lhs_b = lhs_b.add(
                        &ctx.rv(ctx.e(x1), ctx.e(y1))?
                            .mul(&h.counit(&p_yx))
                            .mul(&c),
                    );
                    lhs_inv1 = lhs_inv1.add(
                        &ctx.rbv(ctx.e(x1), ctx.e(y1))?
                            .mul(&ctx.rv(ctx.e(x2), ctx.e(y2))?)
                            .mul(&c),
                    );
                    lhs_inv2 = lhs_inv2.add(
                        &ctx.rv(ctx.e(x1), ctx.e(y1))?
                            .mul(&ctx.rbv(ctx.e(x2), ctx.e(y2))?)
                            .mul(&c),
                    );
                    let (xy_prod, yx_prod) = match (h.mul_basis(x1, y1), h.mul_basis(y2, x2)) {
                        (Ok(a), Ok(b)) => (a, b),
                        _ => {
                            overflow = true;
                            break;
                        }
                    };
                    int_l.add_scaled(&xy_prod, &ctx.rv(ctx.e(x2), ctx.e(y2))?.mul(&c));
                    int_r.add_scaled(&yx_prod, &ctx.rv(ctx.e(x1), ctx.e(y1))?.mul(&c));
                }
                if overflow {
                    break;
                }
            }
            if overflow {
                def_a.skip();
                def_b.skip();
                inv1.skip();
                inv2.skip();
                intertwine.skip();
                continue;
            }
            def_a.record(direct == lhs_a, &[*x, *y], &direct, &lhs_a);
            def_b.record(direct == lhs_b, &[*x, *y], &direct, &lhs_b);
            let eps_yx = match h.mul_basis(y, x) {
                Ok(p) => h.counit(&p),
                Err(_) => {
                    inv1.skip();
                    inv2.skip();
                    intertwine.skip();
                    continue;
                }
            };
            let eps_xy = match h.mul_basis(x, y) {
                Ok(p) => h.counit(&p),
                Err(_) => {
                    inv1.skip();
                    inv2.skip();
                    intertwine.skip();
                    continue;
                }
            };
            inv1.record(lhs_inv1 == eps_yx, &[*x, *y], &lhs_inv1, &eps_yx);
            inv2.record(lhs_inv2 == eps_xy, &[*x, *y], &lhs_inv2, &eps_xy);
            intertwine.record(int_l == int_r, &[*x, *y], h.show(&int_l), h.show(&int_r));
        }
    }
    report.checks.push(def_a.finish());
    report.checks.push(def_b.finish());
    report.checks.push(inv1.finish());
    report.checks.push(inv2.finish());
    report.checks.push(intertwine.finish());

    // multiplicativity in each slot
    let mut univ1 = CheckBuilder::new("coquasi.univ.mul-left");
    let mut univ2 = CheckBuilder::new("coquasi.univ.mul-right");
    for x in &ctx.ids {
        for y in &ctx.ids {
            let xy = match h.mul_basis(x, y) {
                Ok(v) => v,
                Err(_) => {
                    for _ in &ctx.ids {
                        univ1.skip();
                        univ2.skip();
                    }
                    continue;
                }
            };
            for z in &ctx.ids {
                // r(xy (x) z) = r(y (x) z') r(x (x) z'')
                let direct = ctx.rv(&xy, ctx.e(z))?;
                let dz = h.delta_basis(z)?;
                let mut lhs = Scalar::zero(h.field());
                for ((z1, z2), c) in dz.terms() {
                    lhs = lhs.add(
                        &ctx.rv(ctx.e(y), ctx.e(z1))?
                            .mul(&ctx.rv(ctx.e(x), ctx.e(z2))?)
                            .mul(c),
                    );
                }
                univ1.record(direct == lhs, &[*x, *y, *z], &direct, &lhs);

                // r(z (x) xy) = r(z' (x) x) r(z'' (x) y)
                let direct = ctx.rv(ctx.e(z), &xy)?;
                let mut lhs = Scalar::zero(h.field());
                for ((z1, z2), c) in dz.terms() {
                    lhs = lhs.add(
                        &ctx.rv(ctx.e(z1), ctx.e(x))?
                            .mul(&ctx.rv(ctx.e(z2), ctx.e(y))?)
                            .mul(c),
                    );
                }
                univ2.record(direct == lhs, &[*z, *x, *y], &direct, &lhs);
            }
        }
    }
    report.checks.push(univ1.finish());
    report.checks.push(univ2.finish());
    Ok(())
}

fn prop_suite_pairs(ctx: &Ctx, report: &mut Report) -> Result<(), AlgebraError> {
    let h = ctx.h;

    // identity 1: r(x (x) 1) = eps(x) = r(1 (x) x)
    let mut p1 = CheckBuilder::new("prop34.1.unit-slots");
    for x in &ctx.ids {
        let ex = ctx.e(x);
        let eps = h.counit(ex);
        let left = ctx.rv(ex, h.unit())?;
        let right = ctx.rv(h.unit(), ex)?;
        p1.record(
            left == eps && right == eps,
            &[*x],
            format!("{left} / {right}"),
            &eps,
        );
    }
    report.checks.push(p1.finish());

    let mut checks: Vec<CheckBuilder> = vec![
        CheckBuilder::new("prop34.2.eps_s-right"),
        CheckBuilder::new("prop34.3.eps_t-right"),
        CheckBuilder::new("prop34.4.eps_s-left"),
        CheckBuilder::new("prop34.5.eps_t-left"),
        CheckBuilder::new("prop34.6.base-exchange"),
        CheckBuilder::new("prop34.7.r-eps_t"),
        CheckBuilder::new("prop34.8.r-eps_s"),
        CheckBuilder::new("prop34.9.eps_t-r"),
        CheckBuilder::new("prop34.10.eps_s-r"),
        CheckBuilder::new("prop34.11.slide-right"),
        CheckBuilder::new("prop34.12.slide-left"),
    ];

    for x in &ctx.ids {
        let ex = ctx.e(x);
        let dx = h.delta_basis(x)?;
        for y in &ctx.ids {
            let ey = ctx.e(y);
            let dy = h.delta_basis(y)?;
            let direct = ctx.rv(ex, ey)?;

            // 2: r(x' (x) y') r(x'' (x) eps_s(y'')) = r(x (x) y)
            // 3: r(x' (x) eps_t(y')) r(x'' (x) y'') = r(x (x) y)
            let mut v2 = Scalar::zero(h.field());
            let mut v3 = Scalar::zero(h.field());
            for ((x1, x2), cx) in dx.terms() {
                for ((y1, y2), cy) in dy.terms() {
                    let c = cx.mul(cy);
                    v2 = v2.add(
                        &ctx.rv(ctx.e(x1), ctx.e(y1))?
                            .mul(&ctx.rv(ctx.e(x2), &ctx.eps_s[y2])?)
                            .mul(&c),
                    );
                    v3 = v3.add(
                        &ctx.rv(ctx.e(x1), &ctx.eps_t[y1])?
                            .mul(&ctx.rv(ctx.e(x2), ctx.e(y2))?)
                            .mul(&c),
                    );
                }
            }
            checks[0].record(v2 == direct, &[*x, *y], &v2, &direct);
            checks[1].record(v3 == direct, &[*x, *y], &v3, &direct);

            // 4: r(eps_s(x'') (x) y') r(x' (x) y'') = r(x (x) y)
            // 5: r(x'' (x) y') r(eps_t(x') (x) y'') = r(x (x) y)
            let mut v4 = Scalar::zero(h.field());
            let mut v5 = Scalar::zero(h.field());
            for ((x1, x2), cx) in dx.terms() {
                for ((y1, y2), cy) in dy.terms() {
                    let c = cx.mul(cy);
                    v4 = v4.add(
                        &ctx.rv(&ctx.eps_s[x2], ctx.e(y1))?
                            .mul(&ctx.rv(ctx.e(x1), ctx.e(y2))?)
                            .mul(&c),
                    );
                    v5 = v5.add(
                        &ctx.rv(ctx.e(x2), ctx.e(y1))?
                            .mul(&ctx.rv(&ctx.eps_t[x1], ctx.e(y2))?)
                            .mul(&c),
                    );
                }
            }
            checks[2].record(v4 == direct, &[*x, *y], &v4, &direct);
            checks[3].record(v5 == direct, &[*x, *y], &v5, &direct);

            // 6: r(x' (x) y') (eps_t(y'') (x) eps_s(x''))
            //    = (eps_t(x') (x) eps_s(y')) r(x'' (x) y'')   in H (x) H
            let mut t6l = PairTensor::zero();
            let mut t6r = PairTensor::zero();
            for ((x1, x2), cx) in dx.terms() {
                for ((y1, y2), cy) in dy.terms() {
                    let c = cx.mul(cy);
                    let left = PairTensor::of(&ctx.eps_t[y2], &ctx.eps_s[x2]);
                    t6l.add_scaled(&left, &ctx.rv(ctx.e(x1), ctx.e(y1))?.mul(&c));
                    let right = PairTensor::of(&ctx.eps_t[x1], &ctx.eps_s[y1]);
                    t6r.add_scaled(&right, &ctx.rv(ctx.e(x2), ctx.e(y2))?.mul(&c));
                }
            }
            checks[4].record(
                t6l == t6r,
                &[*x, *y],
                h.show_pair(&t6l),
                h.show_pair(&t6r),
            );

            // 7-10: collapsed slots
            let (exy, eyx) = match (h.mul_basis(x, y), h.mul_basis(y, x)) {
                (Ok(a), Ok(b)) => (h.counit(&a), h.counit(&b)),
                _ => {
                    for k in 5..=8 {
                        checks[k].skip();
                    }
                    for k in 9..=10 {
                        checks[k].skip();
                    }
                    continue;
                }
            };
            let v7 = ctx.rv(ex, &ctx.eps_t[y])?;
            checks[5].record(v7 == exy, &[*x, *y], &v7, &exy);
            let v8 = ctx.rv(ex, &ctx.eps_s[y])?;
            checks[6].record(v8 == eyx, &[*x, *y], &v8, &eyx);
            let v9 = ctx.rv(&ctx.eps_t[x], ey)?;
            let rhs9 = h.counit(&h.mul(&ctx.eps_t[x], ey)?);
            checks[7].record(v9 == rhs9, &[*x, *y], &v9, &rhs9);
            let v10 = ctx.rv(&ctx.eps_s[x], ey)?;
            let rhs10 = h.counit(&h.mul(ey, &ctx.eps_s[x])?);
            checks[8].record(v10 == rhs10, &[*x, *y], &v10, &rhs10);

            // 11: r(x (x) y') eps_s(y'') = r(x' (x) y) eps_s(eps_t(x''))
            let mut v11l = Element::zero();
            for ((y1, y2), cy) in dy.terms() {
                v11l.add_scaled(&ctx.eps_s[y2], &ctx.rv(ex, ctx.e(y1))?.mul(cy));
            }
            let mut v11r = Element::zero();
            for ((x1, x2), cx) in dx.terms() {
                let inner = h.counital_source(&ctx.eps_t[x2])?;
                v11r.add_scaled(&inner, &ctx.rv(ctx.e(x1), ey)?.mul(cx));
            }
            checks[9].record(v11l == v11r, &[*x, *y], h.show(&v11l), h.show(&v11r));

            // 12: eps_t(y') r(x (x) y'') = eps_t(eps_s(x')) r(x'' (x) y)
            let mut v12l = Element::zero();
            for ((y1, y2), cy) in dy.terms() {
                v12l.add_scaled(&ctx.eps_t[y1], &ctx.rv(ex, ctx.e(y2))?.mul(cy));
            }
            let mut v12r = Element::zero();
            for ((x1, x2), cx) in dx.terms() {
                let inner = h.counital_target(&ctx.eps_s[x1])?;
                v12r.add_scaled(&inner, &ctx.rv(ctx.e(x2), ey)?.mul(cx));
            }
            checks[10].record(v12l == v12r, &[*x, *y], h.show(&v12l), h.show(&v12r));
        }
    }
    for c in checks {
        report.checks.push(c.finish());
    }
    Ok(())
}

fn prop_suite_group_likes(
    ctx: &Ctx,
    group_likes: &[(String, Element)],
    report: &mut Report,
) -> Result<(), AlgebraError> {
    let h = ctx.h;
    let mut p1 = CheckBuilder::new("prop35.1.rbar-r-collapse");
    let mut p2 = CheckBuilder::new("prop35.2.r-rbar-collapse");
    let mut p3 = CheckBuilder::new("prop35.3.r-split");
    let mut p4 = CheckBuilder::new("prop35.4.rbar-split");

    for (label, g) in group_likes {
        let dg = h.delta(g)?;
        for x in &ctx.ids {
            let ex = ctx.e(x);
            let dx = h.delta_basis(x)?;
            let eps_x = h.counit(ex);

            let mut v1 = Scalar::zero(h.field());
            let mut v2 = Scalar::zero(h.field());
            for ((x1, x2), c) in dx.terms() {
                v1 = v1.add(
                    &ctx.rbv(ctx.e(x1), g)?
                        .mul(&ctx.rv(ctx.e(x2), g)?)
                        .mul(c),
                );
                v2 = v2.add(
                    &ctx.rv(ctx.e(x1), g)?
                        .mul(&ctx.rbv(ctx.e(x2), g)?)
                        .mul(c),
                );
            }
            p1.record(v1 == eps_x, &[*x], format!("[{label}] {v1}"), &eps_x);
            p2.record(v2 == eps_x, &[*x], format!("[{label}] {v2}"), &eps_x);

            for y in &ctx.ids {
                let ey = ctx.e(y);
                let dy = h.delta_basis(y)?;

                // 3: r(x (x) g') r(y (x) g'') = r(x' (x) g) r(y' (x) g) eps(y'' x'')
                let mut lhs3 = Scalar::zero(h.field());
                for ((g1, g2), cg) in dg.terms() {
                    lhs3 = lhs3.add(
                        &ctx.rv(ex, ctx.e(g1))?
                            .mul(&ctx.rv(ey, ctx.e(g2))?)
                            .mul(cg),
                    );
                }
                let mut rhs3 = Scalar::zero(h.field());
                let mut overflow = false;
                for ((x1, x2), cx) in dx.terms() {
                    for ((y1, y2), cy) in dy.terms() {
                        match h.mul_basis(y2, x2) {
                            Ok(p) => {
                                rhs3 = rhs3.add(
                                    &ctx.rv(ctx.e(x1), g)?
                                        .mul(&ctx.rv(ctx.e(y1), g)?)
                                        .mul(&h.counit(&p))
                                        .mul(&cx.mul(cy)),
                                );
                            }
                            Err(_) => overflow = true,
                        }
                    }
                }
                if overflow {
                    p3.skip();
                } else {
                    p3.record(lhs3 == rhs3, &[*x, *y], format!("[{label}] {lhs3}"), &rhs3);
                }

                // 4: the op/cop mirror of 3, which is how the rbar identity
                // is provable: rbar(x (x) g'') rbar(y (x) g')
                //            = eps(x' y') rbar(x'' (x) g) rbar(y'' (x) g)
                let mut lhs4 = Scalar::zero(h.field());
                for ((g1, g2), cg) in dg.terms() {
                    lhs4 = lhs4.add(
                        &ctx.rbv(ex, ctx.e(g2))?
                            .mul(&ctx.rbv(ey, ctx.e(g1))?)
                            .mul(cg),
                    );
                }
                let mut rhs4 = Scalar::zero(h.field());
                let mut overflow4 = false;
                for ((x1, x2), cx) in dx.terms() {
                    for ((y1, y2), cy) in dy.terms() {
                        let c = cx.mul(cy);
                        match h.mul_basis(x1, y1) {
                            Ok(p) => {
                                rhs4 = rhs4.add(
                                    &h.counit(&p)
                                        .mul(&ctx.rbv(ctx.e(x2), g)?)
                                        .mul(&ctx.rbv(ctx.e(y2), g)?)
                                        .mul(&c),
                                );
                            }
                            Err(_) => overflow4 = true,
                        }
                    }
                }
                if overflow4 {
                    p4.skip();
                } else {
                    p4.record(lhs4 == rhs4, &[*x, *y], format!("[{label}] {lhs4}"), &rhs4);
                }
            }
        }
    }
    report.checks.push(p1.finish());
    report.checks.push(p2.finish());
    report.checks.push(p3.finish());
    report.checks.push(p4.finish());
    Ok(())
}
