//! The universal property map out of a localization:
//! `sigma(a/s) = psi(a) psi(s)^{-1}`.

use std::sync::Arc;

use crate::exactfield::Scalar;
use crate::linalg::LinSolver;
use crate::localization::kernel::ColumnMap;
use crate::localization::{Fraction, LocError, LocalizedWBA};
use crate::report::{CheckBuilder, Report};
use crate::wba::{BasedWBA, Element, LinearMap};

/// Solves `x u = 1 = u x` inside the materialized window of `target`.
pub fn invert_in(target: &BasedWBA, x: &Element, label: &str) -> Result<Element, LocError> {
    let cols = ColumnMap::new(target);
    let ids: Vec<_> = target.basis_ids().collect();
    let mut domain = Vec::new();
    let mut images = Vec::new();
    for b in &ids {
        let e = Element::from_basis(*b, Scalar::one(target.field()));
        if let Ok(img) = target.mul(x, &e) {
            if let Some(flat) = cols.flatten(&img) {
                domain.push(*b);
                images.push(flat);
            }
        }
    }
    let solver = LinSolver::new(target.field().clone(), cols.total(), &images);
    let rhs = cols
        .flatten(target.unit())
        .ok_or_else(|| LocError::NotInvertible(label.to_string()))?;
    let coeffs = solver
        .solve(&rhs)
        .ok_or_else(|| LocError::NotInvertible(label.to_string()))?;
    let mut u = Element::zero();
    for (j, c) in coeffs {
        u.add_term(domain[j], c);
    }
    let right = target.mul(&u, x).map_err(LocError::Algebra)?;
    if right != *target.unit() {
        return Err(LocError::NotInvertible(format!("{label} (right inverse differs)")));
    }
    Ok(u)
}

/// The induced homomorphism `H[G^-1] -> T` determined by a WBA map
/// `psi: H -> T` that inverts every denominator.
pub struct UniversalMap {
    psi: LinearMap,
    target: Arc<BasedWBA>,
    /// `psi(g_i)^{-1}` per generator
    inverses: Vec<Element>,
}

impl UniversalMap {
    pub fn target(&self) -> &Arc<BasedWBA> {
        &self.target
    }

    pub fn psi(&self) -> &LinearMap {
        &self.psi
    }

    pub fn generator_inverse(&self, i: usize) -> &Element {
        &self.inverses[i]
    }

    /// `sigma(x/w) = psi(x) * psi(g_{i_k})^{-1} ... psi(g_{i_1})^{-1}`.
    pub fn sigma(&self, f: &Fraction) -> Result<Element, LocError> {
        let mut acc = self.psi.apply(&f.num).map_err(LocError::Algebra)?;
        for &i in f.den.iter().rev() {
            acc = self.target.mul(&acc, &self.inverses[i])?;
        }
        Ok(acc)
    }
}

/// Builds `sigma` and verifies the triangle `sigma . phi = psi`, its
/// multiplicativity and coalgebra compatibility on a deterministic sample
/// of fractions, and spanning-set uniqueness.
pub fn universal_map(
    loc: &LocalizedWBA,
    psi: &LinearMap,
    target: &Arc<BasedWBA>,
) -> Result<(UniversalMap, Report), LocError> {
    let host = loc.host();
    let mut report = psi.check_wba_hom(host, target)?;
    report.title = format!("universal map out of {}[G^-1]", host.name());
    if !report.passed() {
        return Err(LocError::AlmostCentralFailed(
            "psi is not a WBA homomorphism".to_string(),
        ));
    }

    let mut inverses = Vec::new();
    for (label, g) in loc.monoid().generators() {
        let pg = psi.apply(g).map_err(LocError::Algebra)?;
        inverses.push(invert_in(target, &pg, label)?);
    }
    let map = UniversalMap {
        psi: psi.clone(),
        target: target.clone(),
        inverses,
    };

    // triangle: sigma(phi(x)) = psi(x) on the basis
    let mut triangle = CheckBuilder::new("universal.triangle");
    for b in host.basis_ids() {
        let e = Element::from_basis(b, Scalar::one(host.field()));
        let lhs = map.sigma(&loc.phi(&e))?;
        let rhs = psi.apply(&e).map_err(LocError::Algebra)?;
        triangle.record(lhs == rhs, &[b], target.show(&lhs), target.show(&rhs));
    }
    report.checks.push(triangle.finish());

    // sample fractions: basis numerators over the empty word and each
    // single-generator word
    let mut sample: Vec<Fraction> = Vec::new();
    for b in host.basis_ids() {
        let e = Element::from_basis(b, Scalar::one(host.field()));
        sample.push(loc.phi(&e));
        for i in 0..loc.monoid().generators().len() {
            sample.push(Fraction::new(e.clone(), vec![i]));
        }
    }

    let mut multiplicative = CheckBuilder::new("universal.multiplicative");
    for a in &sample {
        for b in &sample {
            let ab = match loc.mul(a, b) {
                Ok(v) => v,
                Err(_) => {
                    multiplicative.skip();
                    continue;
                }
            };
            let lhs = map.sigma(&ab)?;
            let rhs = match target.mul(&map.sigma(a)?, &map.sigma(b)?) {
                Ok(v) => v,
                Err(_) => {
                    multiplicative.skip();
                    continue;
                }
            };
            multiplicative.record(lhs == rhs, &[], target.show(&lhs), target.show(&rhs));
        }
    }
    report.checks.push(multiplicative.finish());

    let mut coalgebra = CheckBuilder::new("universal.coalgebra");
    for f in &sample {
        let df = loc.delta(f)?;
        // (sigma (x) sigma) Delta(f): each leg keeps f's denominator
        let mut lhs = crate::wba::PairTensor::zero();
        let mut skip = false;
        for ((l, r), c) in df.tensor.terms() {
            let fl = Fraction::new(
                Element::from_basis(*l, Scalar::one(host.field())),
                df.den.clone(),
            );
            let fr = Fraction::new(
                Element::from_basis(*r, Scalar::one(host.field())),
                df.den.clone(),
            );
            match (map.sigma(&fl), map.sigma(&fr)) {
                (Ok(sl), Ok(sr)) => {
                    for (bl, cl) in sl.terms() {
                        for (br, cr) in sr.terms() {
                            lhs.add_term(*bl, *br, c.mul(cl).mul(cr));
                        }
                    }
                }
                _ => skip = true,
            }
        }
        let rhs = match target.delta(&map.sigma(f)?) {
            Ok(v) => v,
            Err(_) => {
                coalgebra.skip();
                continue;
            }
        };
        if skip {
            coalgebra.skip();
        } else {
            coalgebra.record(
                lhs == rhs,
                &[],
                target.show_pair(&lhs),
                target.show_pair(&rhs),
            );
        }
        let el = loc.counit(f);
        let er = target.counit(&map.sigma(f)?);
        coalgebra.record(el == er, &[], &el, &er);
    }
    report.checks.push(coalgebra.finish());

    // uniqueness on a spanning set: any homomorphism agreeing with sigma on
    // phi(H) and on 1/g for each generator takes the same value on x/w
    let mut unique = CheckBuilder::new("universal.spanning-uniqueness");
    for f in &sample {
        let direct = map.sigma(f)?;
        let mut assembled = map.sigma(&loc.phi(&f.num))?;
        for &i in f.den.iter().rev() {
            let inv_frac = Fraction::new(host.unit().clone(), vec![i]);
            assembled = match target.mul(&assembled, &map.sigma(&inv_frac)?) {
                Ok(v) => v,
                Err(_) => {
                    unique.skip();
                    continue;
                }
            };
        }
        unique.record(
            direct == assembled,
            &[],
            target.show(&direct),
            target.show(&assembled),
        );
    }
    report.checks.push(unique.finish());

    Ok((map, report))
}
