//! Explicit materialization of `H[G^-1]` for fully materialized hosts.
//!
//! Because `phi(x) = x/1` is surjective whenever the value monoid is finite
//! (powers of any value are eventually periodic, which manufactures an
//! inverse for `phi(g)` inside the image), the localization is the quotient
//! `H / ker(phi)`. The quotient is built by row reduction, the coalgebra
//! descent is checked (not assumed), and an inverse of every `phi(g)` is
//! solved for and verified; together these certify conditions (F1)-(F3)
//! for the constructed object.

use std::sync::Arc;

use crate::exactfield::Scalar;
use crate::linalg::LinSolver;
use crate::localization::kernel::ColumnMap;
use crate::localization::{LocError, LocalizedWBA};
use crate::report::{CheckBuilder, Report};
use crate::wba::{BasedWBA, BasisId, Element, LinearMap, PairTensor, WbaBuilder};

pub struct MaterializedLocalization {
    wba: Arc<BasedWBA>,
    phi: LinearMap,
    /// inverse of `phi(g)` in the quotient, one per generator
    generator_inverses: Vec<Element>,
    report: Report,
}

impl MaterializedLocalization {
    pub fn wba(&self) -> &Arc<BasedWBA> {
        &self.wba
    }

    pub fn phi(&self) -> &LinearMap {
        &self.phi
    }

    pub fn generator_inverses(&self) -> &[Element] {
        &self.generator_inverses
    }

    pub fn report(&self) -> &Report {
        &self.report
    }
}

/// Builds the quotient `H / ker(phi)` with inherited structure.
pub fn localize(loc: &LocalizedWBA) -> Result<MaterializedLocalization, LocError> {
    let host = loc.host();
    if !host.is_complete() {
        return Err(LocError::HostNotFiniteDim);
    }
    let kernel = loc.kernel();
    if !kernel.decisive() {
        return Err(LocError::Indeterminate(
            "materialization needs a decisive annihilator strategy".to_string(),
        ));
    }

    let mut report = Report::new(format!("localize {}", host.name()))
        .with_context("strategy", loc.monoid().strategy())
        .with_context("kernel-dim", kernel.total_kernel_dim());
    for (k, dim) in kernel.stabilization() {
        report.set_context(&format!("kernel-dim-after-{k}-tests"), dim);
    }

    // kernel must be a coideal with vanishing counit, else Delta/eps do not
    // descend; these are theorems given the hypotheses, so a failure here
    // means the monoid data was defective
    let mut coideal = CheckBuilder::new("localize.kernel-coideal");
    let mut counit_ok = CheckBuilder::new("localize.kernel-counit");
    let project = |x: &Element| kernel.reduce(x);
    let project_pair = |t: &PairTensor| -> PairTensor {
        let mut out = PairTensor::zero();
        for ((l, r), c) in t.terms() {
            let pl = project(&Element::from_basis(*l, Scalar::one(host.field())));
            let pr = project(&Element::from_basis(*r, Scalar::one(host.field())));
            for (bl, cl) in pl.terms() {
                for (br, cr) in pr.terms() {
                    out.add_term(*bl, *br, c.mul(cl).mul(cr));
                }
            }
        }
        out
    };
    for d in host.degrees().collect::<Vec<_>>() {
        for v in kernel.kernel_basis(d) {
            let dv = host.delta(&v)?;
            let p = project_pair(&dv);
            coideal.record(p.is_zero(), &[], host.show_pair(&p), "0");
            let eps = host.counit(&v);
            counit_ok.record(eps.is_zero(), &[], &eps, "0");
        }
    }
    report.checks.push(coideal.finish());
    report.checks.push(counit_ok.finish());
    if !report.passed() {
        return Err(LocError::AlmostCentralFailed(
            "kernel fails the coideal/counit descent test".to_string(),
        ));
    }

    // surviving coordinates become the quotient basis
    let mut quotient_ids: Vec<(i32, u32)> = Vec::new();
    let mut survivors: Vec<BasisId> = Vec::new();
    for d in host.degrees() {
        let mut idx = 0u32;
        for b in host.basis_of_degree(d) {
            let e = Element::from_basis(b, Scalar::one(host.field()));
            if project(&e) == e {
                quotient_ids.push((d, idx));
                survivors.push(b);
                idx += 1;
            }
        }
    }
    let to_quotient = |x: &Element| -> Element {
        // normal forms are supported on surviving coordinates
        let mut out = Element::zero();
        for (b, c) in project(x).terms() {
            let pos = survivors
                .iter()
                .position(|s| s == b)
                .expect("normal form is supported on surviving coordinates");
            out.add_term(BasisId::new(b.degree, quotient_ids[pos].1), c.clone());
        }
        out
    };

    let name = format!("{}[G^-1]", host.name());
    let mut builder = WbaBuilder::new(name, host.field()).window(
        host.window().0,
        host.window().1,
        false,
        false,
    );
    for (pos, b) in survivors.iter().enumerate() {
        builder.basis(
            BasisId::new(quotient_ids[pos].0, quotient_ids[pos].1),
            host.label(b).to_string(),
        );
    }
    builder.unit(to_quotient(host.unit()));
    for (pa, a) in survivors.iter().enumerate() {
        let qa = BasisId::new(quotient_ids[pa].0, quotient_ids[pa].1);
        let ea = Element::from_basis(*a, Scalar::one(host.field()));
        let mut t = PairTensor::zero();
        for ((l, r), c) in host.delta_basis(a)?.terms() {
            let pl = to_quotient(&Element::from_basis(*l, Scalar::one(host.field())));
            let pr = to_quotient(&Element::from_basis(*r, Scalar::one(host.field())));
            for (bl, cl) in pl.terms() {
                for (br, cr) in pr.terms() {
                    t.add_term(*bl, *br, c.mul(cl).mul(cr));
                }
            }
        }
        builder.coproduct(qa, t);
        builder.counit(qa, host.counit(&ea));
        for (pb, b) in survivors.iter().enumerate() {
            let qb = BasisId::new(quotient_ids[pb].0, quotient_ids[pb].1);
            let prod = host.mul_basis(a, b)?;
            builder.product(qa, qb, to_quotient(&prod));
        }
    }
    let wba = Arc::new(builder.build()?);

    let mut phi = LinearMap::new();
    for b in host.basis_ids() {
        phi.define(
            b,
            to_quotient(&Element::from_basis(b, Scalar::one(host.field()))),
        );
    }

    // solve for two-sided inverses of the generator images
    let mut inverses = Vec::new();
    let mut inv_check = CheckBuilder::new("localize.generator-inverses");
    let cols = ColumnMap::new(&wba);
    let all_ids: Vec<BasisId> = wba.basis_ids().collect();
    for (label, g) in loc.monoid().generators() {
        let pg = phi.apply(g)?;
        let mut images = Vec::new();
        for b in &all_ids {
            let e = Element::from_basis(*b, Scalar::one(wba.field()));
            images.push(cols.flatten(&wba.mul(&pg, &e)?).expect("window closed"));
        }
        let solver = LinSolver::new(wba.field().clone(), cols.total(), &images);
        let rhs = cols.flatten(wba.unit()).expect("unit in window");
        let Some(coeffs) = solver.solve(&rhs) else {
            return Err(LocError::NotInvertible(label.clone()));
        };
        let mut u = Element::zero();
        for (j, c) in coeffs {
            u.add_term(all_ids[j], c);
        }
        let left = wba.mul(&pg, &u)?;
        let right = wba.mul(&u, &pg)?;
        inv_check.record(
            left == *wba.unit() && right == *wba.unit(),
            &[],
            format!("phi({label}) * u = {}", wba.show(&left)),
            wba.show(wba.unit()),
        );
        inverses.push(u);
    }
    report.checks.push(inv_check.finish());
    report.set_context("dim", wba.total_dim());
    if !report.passed() {
        return Err(LocError::NotInvertible(
            "a generator image has no two-sided inverse".to_string(),
        ));
    }

    Ok(MaterializedLocalization {
        wba,
        phi,
        generator_inverses: inverses,
        report,
    })
}
