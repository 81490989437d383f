//! Fractions `x / g` and the calculus of the right ring of fractions.
//!
//! Denominators are carried as words in the monoid generators so the
//! conjugation action applies symbolically; values are evaluated only
//! inside equality tests and reports. The arithmetic is
//! `x/g + y/h = (x I_g^{-1}(h) + y g) / (hg)` and
//! `x/g * y/h = x I_g^{-1}(y) / (hg)`, and equality reduces to the single
//! annihilation test `(x I_g^{-1}(h) - y g) t = 0` for some monoid `t`,
//! resolved through the declared strategy.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::exactfield::Scalar;
use crate::linalg::RowSpace;
use crate::localization::{AnnihilatorStrategy, DenominatorMonoid, KernelData, LocError};
use crate::report::Report;
use crate::wba::{BasedWBA, Element, PairTensor};

/// A fraction: numerator element over a denominator word (generator
/// indices, leftmost factor first).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: Element,
    pub den: Vec<usize>,
}

impl Fraction {
    pub fn new(num: Element, den: Vec<usize>) -> Self {
        Fraction { num, den }
    }
}

/// Three-valued equivalence verdict; `Indeterminate` records that the
/// bounded strategy exhausted its search without a decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Equal,
    NotEqual,
    Indeterminate,
}

/// `Delta` of a fraction: a numerator pair tensor over a common slot
/// denominator on both legs.
#[derive(Debug, Clone)]
pub struct FractionPair {
    pub den: Vec<usize>,
    pub tensor: PairTensor,
}

/// The right WBA of fractions `H[G^-1]`, presented through its fraction
/// calculus. Construction verifies the almost-centrality hypotheses and
/// precomputes the kernel of `phi` under the declared strategy.
pub struct LocalizedWBA {
    host: Arc<BasedWBA>,
    monoid: DenominatorMonoid,
    kernel: KernelData,
    hypothesis_report: Report,
}

impl LocalizedWBA {
    pub fn new(host: &Arc<BasedWBA>, monoid: DenominatorMonoid) -> Result<Self, LocError> {
        let report = monoid.check(host, 8)?;
        if !report.passed() {
            let failing = report
                .checks
                .iter()
                .filter(|c| !c.passed())
                .map(|c| c.axiom.clone())
                .collect::<Vec<_>>()
                .join(", ");
            return Err(LocError::AlmostCentralFailed(failing));
        }
        Self::with_report(host, monoid, report)
    }

    /// Skips re-running the hypothesis suite; for callers that already
    /// checked the same monoid on the same host.
    pub fn new_trusted(host: &Arc<BasedWBA>, monoid: DenominatorMonoid) -> Result<Self, LocError> {
        let report = Report::new("almost-central (trusted by caller)");
        Self::with_report(host, monoid, report)
    }

    fn with_report(
        host: &Arc<BasedWBA>,
        monoid: DenominatorMonoid,
        hypothesis_report: Report,
    ) -> Result<Self, LocError> {
        let kernel = KernelData::compute(host, &monoid)?;
        if let AnnihilatorStrategy::DeclaredRegular = monoid.strategy() {
            // spot-check the declaration on the generators themselves
            for (label, g) in monoid.generators() {
                for d in host.degrees().collect::<Vec<_>>() {
                    let basis: Vec<_> = host.basis_of_degree(d).collect();
                    let mut images = Vec::new();
                    let mut ok = true;
                    for b in &basis {
                        let e = Element::from_basis(*b, Scalar::one(host.field()));
                        match host.mul(&e, g) {
                            Ok(img) => images.push(img),
                            Err(_) => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if !ok {
                        continue;
                    }
                    let cols = super::kernel::ColumnMap::new(host);
                    let flat: Option<Vec<_>> =
                        images.iter().map(|e| cols.flatten(e)).collect();
                    if let Some(flat) = flat {
                        let solver =
                            crate::linalg::LinSolver::new(host.field().clone(), cols.total(), &flat);
                        if !solver.kernel().is_empty() {
                            return Err(LocError::NotRegularAtDegree(d))
                                .map_err(|e| annotate(e, label));
                        }
                    }
                }
            }
        }
        Ok(LocalizedWBA {
            host: host.clone(),
            monoid,
            kernel,
            hypothesis_report,
        })
    }

    pub fn host(&self) -> &Arc<BasedWBA> {
        &self.host
    }

    pub fn monoid(&self) -> &DenominatorMonoid {
        &self.monoid
    }

    pub fn kernel(&self) -> &KernelData {
        &self.kernel
    }

    pub fn hypothesis_report(&self) -> &Report {
        &self.hypothesis_report
    }

    /// `phi(x) = x/1`.
    pub fn phi(&self, x: &Element) -> Fraction {
        Fraction::new(x.clone(), Vec::new())
    }

    pub fn zero(&self) -> Fraction {
        Fraction::new(Element::zero(), Vec::new())
    }

    pub fn one(&self) -> Fraction {
        self.phi(self.host.unit())
    }

    pub fn den_value(&self, word: &[usize]) -> Result<Element, LocError> {
        self.monoid.value(&self.host, word)
    }

    /// `x/g + y/h = (x I_g^{-1}(h) + y g) / (hg)`.
    pub fn add(&self, a: &Fraction, b: &Fraction) -> Result<Fraction, LocError> {
        let h_val = self.den_value(&b.den)?;
        let g_val = self.den_value(&a.den)?;
        let twisted = self
            .monoid
            .action()
            .apply_word_inverse(&a.den, &h_val)?;
        let left = self.host.mul(&a.num, &twisted)?;
        let right = self.host.mul(&b.num, &g_val)?;
        let mut den = b.den.clone();
        den.extend_from_slice(&a.den);
        Ok(Fraction::new(left.add(&right), den))
    }

    pub fn neg(&self, a: &Fraction) -> Fraction {
        Fraction::new(a.num.neg(), a.den.clone())
    }

    pub fn sub(&self, a: &Fraction, b: &Fraction) -> Result<Fraction, LocError> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &Fraction, c: &Scalar) -> Fraction {
        Fraction::new(a.num.scale(c), a.den.clone())
    }

    /// `x/g * y/h = x I_g^{-1}(y) / (hg)`.
    pub fn mul(&self, a: &Fraction, b: &Fraction) -> Result<Fraction, LocError> {
        let twisted = self.monoid.action().apply_word_inverse(&a.den, &b.num)?;
        let num = self.host.mul(&a.num, &twisted)?;
        let mut den = b.den.clone();
        den.extend_from_slice(&a.den);
        Ok(Fraction::new(num, den))
    }

    /// Decides `a = b` via the single annihilation reduction.
    pub fn eq(&self, a: &Fraction, b: &Fraction) -> Result<Equivalence, LocError> {
        let diff = self.sub(a, b)?;
        self.is_zero_fraction(&diff)
    }

    pub fn is_zero_fraction(&self, a: &Fraction) -> Result<Equivalence, LocError> {
        let reduced = self.kernel.reduce(&a.num);
        if reduced.is_zero() {
            return Ok(Equivalence::Equal);
        }
        if self.kernel.conclusive_for(&a.num) {
            Ok(Equivalence::NotEqual)
        } else {
            Ok(Equivalence::Indeterminate)
        }
    }

    /// Like [`LocalizedWBA::eq`] but turns `Indeterminate` into an error.
    pub fn eq_strict(&self, a: &Fraction, b: &Fraction) -> Result<bool, LocError> {
        match self.eq(a, b)? {
            Equivalence::Equal => Ok(true),
            Equivalence::NotEqual => Ok(false),
            Equivalence::Indeterminate => Err(LocError::Indeterminate(format!(
                "strategy {} exhausted",
                self.monoid.strategy()
            ))),
        }
    }

    /// `Delta(x/g) = x'/g (x) x''/g`.
    pub fn delta(&self, a: &Fraction) -> Result<FractionPair, LocError> {
        Ok(FractionPair {
            den: a.den.clone(),
            tensor: self.host.delta(&a.num)?,
        })
    }

    /// `eps(x/g) = eps(x)`.
    pub fn counit(&self, a: &Fraction) -> Scalar {
        self.host.counit(&a.num)
    }

    /// Compares two fraction coproducts by rewriting both to a common slot
    /// denominator and projecting the numerator tensor mod `ker phi` legwise.
    pub fn pair_eq(&self, a: &FractionPair, b: &FractionPair) -> Result<Equivalence, LocError> {
        let u = self.den_value(&a.den)?;
        let v = self.den_value(&b.den)?;
        let vu = self.host.mul(&v, &u)?;
        let uv = self.host.mul(&u, &v)?;
        if vu != uv {
            return Err(LocError::NoCommonStage(
                "slot denominators do not commute as values".to_string(),
            ));
        }
        // a-legs pick up I_{den_a}^{-1}(v), b-legs pick up I_{den_b}^{-1}(u)
        let ta = self.twist_tensor(&a.tensor, &a.den, &v)?;
        let tb = self.twist_tensor(&b.tensor, &b.den, &u)?;
        let diff = ta.sub(&tb);
        let mut projected = PairTensor::zero();
        let mut conclusive = true;
        for ((l, r), c) in diff.terms() {
            let el = Element::from_basis(*l, Scalar::one(self.host.field()));
            let er = Element::from_basis(*r, Scalar::one(self.host.field()));
            conclusive &= self.kernel.conclusive_for(&el) && self.kernel.conclusive_for(&er);
            let pl = self.kernel.reduce(&el);
            let pr = self.kernel.reduce(&er);
            for (bl, cl) in pl.terms() {
                for (br, cr) in pr.terms() {
                    projected.add_term(*bl, *br, c.mul(cl).mul(cr));
                }
            }
        }
        if projected.is_zero() {
            Ok(Equivalence::Equal)
        } else if conclusive && self.kernel.decisive() {
            Ok(Equivalence::NotEqual)
        } else {
            Ok(Equivalence::Indeterminate)
        }
    }

    fn twist_tensor(
        &self,
        t: &PairTensor,
        den: &[usize],
        by: &Element,
    ) -> Result<PairTensor, LocError> {
        let twist = self.monoid.action().apply_word_inverse(den, by)?;
        let mut out = PairTensor::zero();
        for ((l, r), c) in t.terms() {
            let el = Element::from_basis(*l, Scalar::one(self.host.field()));
            let er = Element::from_basis(*r, Scalar::one(self.host.field()));
            let nl = self.host.mul(&el, &twist)?;
            let nr = self.host.mul(&er, &twist)?;
            for (bl, cl) in nl.terms() {
                for (br, cr) in nr.terms() {
                    out.add_term(*bl, *br, c.mul(cl).mul(cr));
                }
            }
        }
        Ok(out)
    }

    /// Right-cancels a trailing central generator when the numerator is
    /// exactly divisible by it. Correctness is guaranteed by testing against
    /// `eq`, not by construction.
    pub fn canonicalize(&self, a: &Fraction) -> Result<Fraction, LocError> {
        let mut cur = a.clone();
        'outer: loop {
            let Some(&last) = cur.den.last() else {
                return Ok(cur);
            };
            let g = self.monoid.generator(last).clone();
            // only central generators may cancel on the right
            for id in self.host.basis_ids() {
                let e = Element::from_basis(id, Scalar::one(self.host.field()));
                match (self.host.mul(&g, &e), self.host.mul(&e, &g)) {
                    (Ok(ge), Ok(eg)) if ge == eg => {}
                    _ => return Ok(cur),
                }
            }
            // solve num = x' * g degree by degree
            let mut preimage = Element::zero();
            for d in cur.num.degrees() {
                let comp = cur.num.component(d);
                let gdeg = g.degrees().first().copied().unwrap_or(0);
                let src_deg = d - gdeg;
                let basis: Vec<_> = self.host.basis_of_degree(src_deg).collect();
                if basis.is_empty() {
                    return Ok(cur);
                }
                let cols = super::kernel::ColumnMap::new(&self.host);
                let mut images = Vec::new();
                for b in &basis {
                    let e = Element::from_basis(*b, Scalar::one(self.host.field()));
                    match self.host.mul(&e, &g) {
                        Ok(img) => match cols.flatten(&img) {
                            Some(v) => images.push(v),
                            None => return Ok(cur),
                        },
                        Err(_) => return Ok(cur),
                    }
                }
                let solver =
                    crate::linalg::LinSolver::new(self.host.field().clone(), cols.total(), &images);
                let rhs = match cols.flatten(&comp) {
                    Some(v) => v,
                    None => return Ok(cur),
                };
                match solver.solve(&rhs) {
                    Some(coeffs) => {
                        for (j, c) in coeffs {
                            preimage.add_term(basis[j], c);
                        }
                    }
                    None => break 'outer,
                }
            }
            cur = Fraction::new(preimage, cur.den[..cur.den.len() - 1].to_vec());
        }
        Ok(cur)
    }

    /// Per-degree dimension of the image of `phi` (host dim minus kernel
    /// dim), with a conclusiveness flag per degree.
    pub fn phi_image_dims(&self) -> Vec<(i32, u32, usize, bool)> {
        self.host
            .degrees()
            .map(|d| {
                let e = Element::from_basis(
                    crate::wba::BasisId::new(d, 0),
                    Scalar::one(self.host.field()),
                );
                let conclusive = self.host.dim(d) == 0 || self.kernel.conclusive_for(&e);
                (
                    d,
                    self.host.dim(d),
                    self.host.dim(d) as usize - self.kernel.kernel_dim(d),
                    conclusive,
                )
            })
            .collect()
    }

    /// Dimension table of the stage `span{ x/w : |w| <= bound }` per
    /// Z-degree, computed by embedding every denominator class into one
    /// common stage and row-reducing numerators modulo `ker phi`.
    pub fn stage_dims(&self, bound: usize) -> Result<Vec<(i32, usize)>, LocError> {
        // distinct denominator values with one canonical word each
        let mut classes: Vec<(Vec<usize>, Element)> = vec![(Vec::new(), self.host.unit().clone())];
        let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..bound {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 0..self.monoid.generators().len() {
                    let mut w2 = w.clone();
                    w2.push(i);
                    let v = self.den_value(&w2)?;
                    if !classes.iter().any(|(_, u)| *u == v) {
                        classes.push((w2.clone(), v));
                        next.push(w2);
                    }
                }
            }
            frontier = next;
        }
        // common stage: concatenation of all non-identity class words
        let mut stage_word: Vec<usize> = Vec::new();
        for (w, v) in &classes {
            if v != self.host.unit() {
                stage_word.extend_from_slice(w);
            }
        }
        let stage_value = self.den_value(&stage_word)?;
        let stage_degree = self.monoid.word_degree(&stage_word);

        // complement of each class inside the stage: the product of all the
        // other class words, valid when the values commute (checked)
        let mut complements = Vec::new();
        for (w, v) in &classes {
            let mut comp_word: Vec<usize> = Vec::new();
            for (w2, v2) in &classes {
                if w2 != w && v2 != self.host.unit() {
                    comp_word.extend_from_slice(w2);
                }
            }
            let c = self.den_value(&comp_word)?;
            if self.host.mul(&c, v)? != stage_value {
                return Err(LocError::NoCommonStage(format!(
                    "denominator value {} does not commute into the stage",
                    self.host.show(v)
                )));
            }
            complements.push((w.clone(), c));
        }

        // per Z-degree, row-reduce candidate numerators modulo the kernel
        let mut dims = Vec::new();
        let (lo, hi) = self.host.window();
        for m in (lo - stage_degree)..=(hi - stage_degree) {
            let num_degree = m + stage_degree;
            if self.host.dim(num_degree) == 0 {
                continue;
            }
            let mut space = RowSpace::new(self.host.field().clone());
            for row in self
                .kernel
                .kernel_basis(num_degree)
                .iter()
                .map(|e| e.terms().map(|(b, c)| (b.index as usize, c.clone())).collect())
            {
                space.insert(row);
            }
            let base = space.rank();
            for (w, c) in &complements {
                let class_degree = self.monoid.word_degree(w);
                let x_degree = m + class_degree;
                let twisted = self.monoid.action().apply_word_inverse(w, c)?;
                for b in self.host.basis_of_degree(x_degree) {
                    let e = Element::from_basis(b, Scalar::one(self.host.field()));
                    let num = match self.host.mul(&e, &twisted) {
                        Ok(v) => v,
                        Err(_) => continue,
                    };
                    if num.is_zero() {
                        continue;
                    }
                    debug_assert!(num.is_homogeneous());
                    let row = num
                        .terms()
                        .map(|(b, c)| (b.index as usize, c.clone()))
                        .collect();
                    space.insert(row);
                }
            }
            dims.push((m, space.rank() - base));
        }
        Ok(dims)
    }
}

fn annotate(e: LocError, label: &str) -> LocError {
    match e {
        LocError::NotRegularAtDegree(d) => LocError::AlmostCentralFailed(format!(
            "generator {label} declared regular but has a right annihilator at degree {d}"
        )),
        other => other,
    }
}
