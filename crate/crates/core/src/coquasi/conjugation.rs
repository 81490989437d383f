//! Conjugation automorphisms `I_g` and the almost-central checker.
//!
//! For a coquasi-triangular host, `I_g(x) = rbar(x' (x) g) x'' r(x''' (x) g)`
//! with inverse `r(x' (x) g) x'' rbar(x''' (x) g)`. Central denominators use
//! the identity action instead. A monoid `G` with such an action is almost
//! central when `g x = I_g(x) g` on all of `H` and `I_g(G)` stays inside `G`.

use crate::coquasi::RForm;
use crate::exactfield::Scalar;
use crate::report::{CheckBuilder, Report};
use crate::wba::{is_group_like, AlgebraError, BasedWBA, BasisId, Element, LinearMap};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Forward,
    Inverse,
}

/// One application of `I_g` (or its inverse) computed from the r-form.
pub fn conjugate(
    host: &BasedWBA,
    rform: &RForm,
    g: &Element,
    x: &Element,
    direction: Direction,
) -> Result<Element, AlgebraError> {
    let status = is_group_like(host, g)?;
    if !status.is_group_like() {
        return Err(AlgebraError::NotGroupLike(format!(
            "{} is {}",
            host.show(g),
            status
        )));
    }
    let d2 = host.delta2(x)?;
    let mut out = Element::zero();
    for ((a, b, c), coeff) in d2.terms() {
        let ea = Element::from_basis(*a, Scalar::one(host.field()));
        let ec = Element::from_basis(*c, Scalar::one(host.field()));
        let (left, right) = match direction {
            Direction::Forward => (rform.eval_bar(host, &ea, g)?, rform.eval(host, &ec, g)?),
            Direction::Inverse => (rform.eval(host, &ea, g)?, rform.eval_bar(host, &ec, g)?),
        };
        out.add_term(*b, coeff.mul(&left).mul(&right));
    }
    Ok(out)
}

/// Per-generator algebra automorphisms with inverses, forming the monoid
/// action `g -> I_g` used by localization.
#[derive(Debug, Clone)]
pub struct ConjugationAction {
    maps: Vec<(LinearMap, LinearMap)>,
}

impl ConjugationAction {
    /// The central case: every generator acts as the identity.
    pub fn identity(host: &BasedWBA, generator_count: usize) -> Self {
        let id = LinearMap::identity_on(host);
        ConjugationAction {
            maps: vec![(id.clone(), id); generator_count],
        }
    }

    /// Derives each generator's action from the r-form via the displayed
    /// formulas.
    pub fn from_rform(
        host: &BasedWBA,
        rform: &RForm,
        generators: &[Element],
    ) -> Result<Self, AlgebraError> {
        let mut maps = Vec::with_capacity(generators.len());
        for g in generators {
            let mut fwd = LinearMap::new();
            let mut inv = LinearMap::new();
            for id in host.basis_ids() {
                let e = Element::from_basis(id, Scalar::one(host.field()));
                fwd.define(id, conjugate(host, rform, g, &e, Direction::Forward)?);
                inv.define(id, conjugate(host, rform, g, &e, Direction::Inverse)?);
            }
            maps.push((fwd, inv));
        }
        Ok(ConjugationAction { maps })
    }

    /// Explicitly supplied automorphisms, e.g. tensor extensions.
    pub fn from_maps(maps: Vec<(LinearMap, LinearMap)>) -> Self {
        ConjugationAction { maps }
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn forward(&self, generator: usize) -> &LinearMap {
        &self.maps[generator].0
    }

    pub fn inverse(&self, generator: usize) -> &LinearMap {
        &self.maps[generator].1
    }

    /// `I_w(x)` for a denominator word `w = [i1, ..., ik]`, i.e.
    /// `I_{g_{i1}} . ... . I_{g_{ik}}` applied right-to-left.
    pub fn apply_word(&self, word: &[usize], x: &Element) -> Result<Element, AlgebraError> {
        let mut cur = x.clone();
        for &i in word.iter().rev() {
            cur = self.maps[i].0.apply(&cur)?;
        }
        Ok(cur)
    }

    /// `I_w^{-1}(x) = I_{g_{ik}}^{-1} . ... . I_{g_{i1}}^{-1}` applied
    /// left-to-right along the word.
    pub fn apply_word_inverse(&self, word: &[usize], x: &Element) -> Result<Element, AlgebraError> {
        let mut cur = x.clone();
        for &i in word.iter() {
            cur = self.maps[i].1.apply(&cur)?;
        }
        Ok(cur)
    }
}

/// Enumerates the distinct values of words in the generators up to
/// `max_len`, in breadth-first order. Returns the values together with a
/// saturation flag (true when no new value appeared at the last length) and
/// the per-length counts.
pub fn enumerate_monoid_values(
    host: &BasedWBA,
    generators: &[Element],
    max_len: usize,
) -> Result<(Vec<Element>, bool, Vec<(usize, usize)>), AlgebraError> {
    let mut values: Vec<Element> = vec![host.unit().clone()];
    let mut frontier: Vec<Element> = vec![host.unit().clone()];
    let mut table = vec![(0usize, 1usize)];
    let mut saturated = false;
    let mut truncated = false;
    for len in 1..=max_len {
        let mut next = Vec::new();
        for v in &frontier {
            for g in generators {
                // a product leaving the window ends this branch; the
                // enumeration is then incomplete rather than failed
                let w = match host.mul(v, g) {
                    Ok(w) => w,
                    Err(_) => {
                        truncated = true;
                        continue;
                    }
                };
                if !values.contains(&w) && !next.contains(&w) {
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            saturated = !truncated;
            table.push((len, values.len()));
            break;
        }
        values.extend(next.iter().cloned());
        table.push((len, values.len()));
        frontier = next;
    }
    Ok((values, saturated, table))
}

/// Verifies almost-centrality of the monoid generated by `generators` with
/// the supplied action: each generator is group-like, each `I_g` is a WBA
/// automorphism with two-sided inverse, (C1) `g x = I_g(x) g` holds on the
/// basis, and (C2) `I_g` maps generators back into the word monoid
/// (membership decided by bounded word enumeration up to `word_bound`).
pub fn check_almost_central(
    host: &BasedWBA,
    generators: &[(String, Element)],
    action: &ConjugationAction,
    word_bound: usize,
) -> Result<Report, AlgebraError> {
    let mut report = Report::new(format!("almost-central on {}", host.name()))
        .with_context("generators", generators.len())
        .with_context("word-bound", word_bound);

    let mut grouplike = CheckBuilder::new("almost-central.generators-group-like");
    for (label, g) in generators {
        let status = is_group_like(host, g)?;
        grouplike.record(
            status.is_group_like(),
            &[],
            format!("{label} is {status}"),
            "both",
        );
    }
    report.checks.push(grouplike.finish());

    // each I_g a WBA homomorphism with two-sided inverse
    for (i, (label, _)) in generators.iter().enumerate() {
        let mut hom = action.forward(i).check_wba_hom(host, host)?;
        for c in &mut hom.checks {
            c.axiom = format!("almost-central.I[{label}].{}", c.axiom);
        }
        report.merge(hom);
        let mut inv = action
            .forward(i)
            .check_mutually_inverse(action.inverse(i), host)?;
        for c in &mut inv.checks {
            c.axiom = format!("almost-central.I[{label}].{}", c.axiom);
        }
        report.merge(inv);
    }

    // (C1) g x = I_g(x) g on the materialized basis
    let mut c1 = CheckBuilder::new("almost-central.C1");
    let ids: Vec<BasisId> = host.basis_ids().collect();
    for (i, (label, g)) in generators.iter().enumerate() {
        for id in &ids {
            let x = Element::from_basis(*id, Scalar::one(host.field()));
            let lhs = match host.mul(g, &x) {
                Ok(v) => v,
                Err(_) => {
                    c1.skip();
                    continue;
                }
            };
            let rhs = match host.mul(&action.forward(i).apply(&x)?, g) {
                Ok(v) => v,
                Err(_) => {
                    c1.skip();
                    continue;
                }
            };
            c1.record(
                lhs == rhs,
                &[*id],
                format!("[{label}] {}", host.show(&lhs)),
                host.show(&rhs),
            );
        }
    }
    report.checks.push(c1.finish());

    // (C2) I_g(h) lands back in the word monoid
    let gen_elems: Vec<Element> = generators.iter().map(|(_, g)| g.clone()).collect();
    let (values, saturated, _) = enumerate_monoid_values(host, &gen_elems, word_bound)?;
    report.set_context("monoid-values", values.len());
    report.set_context("monoid-saturated", saturated);
    let mut c2 = CheckBuilder::new("almost-central.C2");
    for (i, (gl, _)) in generators.iter().enumerate() {
        for (hl, h) in generators {
            let img = action.forward(i).apply(h)?;
            let found = values.contains(&img);
            c2.record(
                found,
                &[],
                format!("I[{gl}]({hl}) = {}", host.show(&img)),
                "a word in the generators",
            );
        }
    }
    report.checks.push(c2.finish());

    Ok(report)
}
