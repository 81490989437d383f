//! Linear maps given by images of basis elements.
//!
//! Antipode candidates, conjugation automorphisms and WBA homomorphisms are
//! all carried as [`LinearMap`]s. A map may be partial: applying it to an
//! element whose support reaches an undefined basis id is an error.

use std::collections::BTreeMap;

use crate::report::{CheckBuilder, Report};
use crate::wba::{AlgebraError, BasedWBA, BasisId, Element, PairTensor};

#[derive(Debug, Clone, Default)]
pub struct LinearMap {
    images: BTreeMap<BasisId, Element>,
}

impl LinearMap {
    pub fn new() -> Self {
        LinearMap::default()
    }

    pub fn define(&mut self, on: BasisId, image: Element) -> &mut Self {
        self.images.insert(on, image);
        self
    }

    pub fn from_images(images: BTreeMap<BasisId, Element>) -> Self {
        LinearMap { images }
    }

    pub fn identity_on(h: &BasedWBA) -> Self {
        let mut m = LinearMap::new();
        for id in h.basis_ids() {
            m.define(
                id,
                Element::from_basis(id, crate::exactfield::Scalar::one(h.field())),
            );
        }
        m
    }

    pub fn defined_on(&self, id: &BasisId) -> bool {
        self.images.contains_key(id)
    }

    pub fn domain(&self) -> impl Iterator<Item = &BasisId> {
        self.images.keys()
    }

    pub fn image_of(&self, id: &BasisId) -> Result<&Element, AlgebraError> {
        self.images.get(id).ok_or(AlgebraError::UndefinedOn(*id))
    }

    pub fn apply(&self, x: &Element) -> Result<Element, AlgebraError> {
        let mut out = Element::zero();
        for (b, c) in x.terms() {
            out.add_scaled(self.image_of(b)?, c);
        }
        Ok(out)
    }

    /// `self . other` (apply `other` first).
    pub fn compose(&self, other: &LinearMap) -> Result<LinearMap, AlgebraError> {
        let mut out = LinearMap::new();
        for (b, img) in &other.images {
            out.define(*b, self.apply(img)?);
        }
        Ok(out)
    }

    /// Applies `f (x) g` leg-wise to a pair tensor.
    pub fn apply_pair(
        f: &LinearMap,
        g: &LinearMap,
        t: &PairTensor,
    ) -> Result<PairTensor, AlgebraError> {
        let mut out = PairTensor::zero();
        for ((l, r), c) in t.terms() {
            let fl = f.image_of(l)?;
            let gr = g.image_of(r)?;
            for (bl, cl) in fl.terms() {
                for (br, cr) in gr.terms() {
                    out.add_term(*bl, *br, c.mul(cl).mul(cr));
                }
            }
        }
        Ok(out)
    }

    /// Checks that the map is a homomorphism of WBAs from `dom` to `cod`:
    /// unital and multiplicative, intertwines the coproducts, preserves the
    /// counit. Pairs whose product leaves a window are reported as skipped.
    pub fn check_wba_hom(&self, dom: &BasedWBA, cod: &BasedWBA) -> Result<Report, AlgebraError> {
        let mut report = Report::new(format!("wba-hom {} -> {}", dom.name(), cod.name()));

        let mut unital = CheckBuilder::new("hom.unital");
        let img_unit = self.apply(dom.unit())?;
        unital.record(
            img_unit == *cod.unit(),
            &[],
            cod.show(&img_unit),
            cod.show(cod.unit()),
        );
        report.checks.push(unital.finish());

        let mut multiplicative = CheckBuilder::new("hom.multiplicative");
        let ids: Vec<BasisId> = dom.basis_ids().collect();
        for a in &ids {
            for b in &ids {
                let ab = match dom.mul_basis(a, b) {
                    Ok(v) => v,
                    Err(_) => {
                        multiplicative.skip();
                        continue;
                    }
                };
                let lhs = self.apply(&ab)?;
                let rhs = match cod.mul(self.image_of(a)?, self.image_of(b)?) {
                    Ok(v) => v,
                    Err(_) => {
                        multiplicative.skip();
                        continue;
                    }
                };
                multiplicative.record(lhs == rhs, &[*a, *b], cod.show(&lhs), cod.show(&rhs));
            }
        }
        report.checks.push(multiplicative.finish());

        let mut comul = CheckBuilder::new("hom.comultiplicative");
        let mut counit = CheckBuilder::new("hom.counit");
        for a in &ids {
            let lhs = cod.delta(self.image_of(a)?)?;
            let rhs = LinearMap::apply_pair(self, self, &dom.delta_basis(a)?)?;
            comul.record(lhs == rhs, &[*a], cod.show_pair(&lhs), cod.show_pair(&rhs));
            let cl = cod.counit(self.image_of(a)?);
            let cr = dom.counit_basis(a);
            counit.record(cl == cr, &[*a], cl.to_string(), cr.to_string());
        }
        report.checks.push(comul.finish());
        report.checks.push(counit.finish());
        Ok(report)
    }

    /// Checks `self . other = id` and `other . self = id` on the basis of `h`.
    pub fn check_mutually_inverse(
        &self,
        other: &LinearMap,
        h: &BasedWBA,
    ) -> Result<Report, AlgebraError> {
        let mut report = Report::new(format!("mutually-inverse on {}", h.name()));
        let mut fwd = CheckBuilder::new("inverse.forward");
        let mut bwd = CheckBuilder::new("inverse.backward");
        for id in h.basis_ids() {
            let e = Element::from_basis(id, crate::exactfield::Scalar::one(h.field()));
            let fb = self.apply(&other.apply(&e)?)?;
            fwd.record(fb == e, &[id], h.show(&fb), h.show(&e));
            let bf = other.apply(&self.apply(&e)?)?;
            bwd.record(bf == e, &[id], h.show(&bf), h.show(&e));
        }
        report.checks.push(fwd.finish());
        report.checks.push(bwd.finish());
        Ok(report)
    }
}
