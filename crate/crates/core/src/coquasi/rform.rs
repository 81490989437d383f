//! Universal r-forms and their weak convolution inverses.
//!
//! An [`RForm`] holds `r` and `rbar` as tables on basis pairs. Tables can be
//! supplied complete, or extended recursively from values on degree-one
//! generators using the multiplicativity rules
//! `r(xy (x) z) = r(y (x) z') r(x (x) z'')` and
//! `r(x (x) yz) = r(x' (x) y) r(x'' (x) z)`; the weak convolution inverse
//! extends with the mirrored rules `rbar(xy (x) z) = rbar(x (x) z')
//! rbar(y (x) z'')` and `rbar(x (x) yz) = rbar(x' (x) z) rbar(x'' (x) y)`.
//! This is how the catalog materializes the quantum-matrix r-form from its
//! five generator values.

use std::collections::{BTreeMap, BTreeSet};

use crate::exactfield::Scalar;
use crate::wba::{AlgebraError, BasedWBA, BasisId, Element};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtensionMode {
    TableComplete,
    RecursiveFromGenerators,
}

impl std::fmt::Display for ExtensionMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ExtensionMode::TableComplete => write!(f, "table-complete"),
            ExtensionMode::RecursiveFromGenerators => write!(f, "recursive-from-degree-1"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct RForm {
    mode: ExtensionMode,
    r: BTreeMap<(BasisId, BasisId), Scalar>,
    rbar: BTreeMap<(BasisId, BasisId), Scalar>,
    /// Basis ids covered by the tables; evaluation outside is an error.
    cover: BTreeSet<BasisId>,
}

impl RForm {
    /// A table-complete r-form; zero entries may be omitted.
    pub fn from_tables(
        host: &BasedWBA,
        r: BTreeMap<(BasisId, BasisId), Scalar>,
        rbar: BTreeMap<(BasisId, BasisId), Scalar>,
    ) -> RForm {
        RForm {
            mode: ExtensionMode::TableComplete,
            r,
            rbar,
            cover: host.basis_ids().collect(),
        }
    }

    pub fn mode(&self) -> ExtensionMode {
        self.mode
    }

    pub fn table(&self) -> &BTreeMap<(BasisId, BasisId), Scalar> {
        &self.r
    }

    pub fn table_bar(&self) -> &BTreeMap<(BasisId, BasisId), Scalar> {
        &self.rbar
    }

    fn basis_value(
        &self,
        table: &BTreeMap<(BasisId, BasisId), Scalar>,
        host: &BasedWBA,
        a: &BasisId,
        b: &BasisId,
    ) -> Result<Scalar, AlgebraError> {
        if !self.cover.contains(a) {
            return Err(AlgebraError::UnknownBasis(*a));
        }
        if !self.cover.contains(b) {
            return Err(AlgebraError::UnknownBasis(*b));
        }
        Ok(table
            .get(&(*a, *b))
            .cloned()
            .unwrap_or_else(|| Scalar::zero(host.field())))
    }

    /// Bilinear evaluation of `r`.
    pub fn eval(&self, host: &BasedWBA, x: &Element, y: &Element) -> Result<Scalar, AlgebraError> {
        let mut out = Scalar::zero(host.field());
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                let v = self.basis_value(&self.r, host, bx, by)?;
                out = out.add(&v.mul(cx).mul(cy));
            }
        }
        Ok(out)
    }

    /// Bilinear evaluation of the weak convolution inverse `rbar`.
    pub fn eval_bar(
        &self,
        host: &BasedWBA,
        x: &Element,
        y: &Element,
    ) -> Result<Scalar, AlgebraError> {
        let mut out = Scalar::zero(host.field());
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                let v = self.basis_value(&self.rbar, host, bx, by)?;
                out = out.add(&v.mul(cx).mul(cy));
            }
        }
        Ok(out)
    }

    /// Extends generator-pair values of `r` and `rbar` to the whole
    /// materialized basis.
    ///
    /// `words` factors every basis id into a product of degree-one letters;
    /// the empty word must name the unit. Recursion strips the leftmost
    /// letter and uses the host's coproduct, so the result is well-defined
    /// exactly when the generator table respects the host's relations (the
    /// coquasi checker verifies that independently).
    pub fn from_generators(
        host: &BasedWBA,
        words: &BTreeMap<BasisId, Vec<BasisId>>,
        gen_r: &BTreeMap<(BasisId, BasisId), Scalar>,
        gen_rbar: &BTreeMap<(BasisId, BasisId), Scalar>,
    ) -> Result<RForm, AlgebraError> {
        let ids: Vec<BasisId> = host.basis_ids().collect();
        for id in &ids {
            if !words.contains_key(id) {
                return Err(AlgebraError::BadStructure(format!(
                    "no generator word for basis id {id}"
                )));
            }
        }
        let unit_ids: Vec<&BasisId> = words
            .iter()
            .filter(|(_, w)| w.is_empty())
            .map(|(id, _)| id)
            .collect();
        let unit_ok = unit_ids.len() == 1
            && host.unit().len() == 1
            && host.unit().coeff(unit_ids[0]).map_or(false, |c| c.is_one());
        if !unit_ok {
            return Err(AlgebraError::BadStructure(
                "recursive extension needs the empty word to name the unit basis vector"
                    .to_string(),
            ));
        }

        let mut builder = Extend {
            host,
            words,
            gen_r,
            gen_rbar,
            r: BTreeMap::new(),
            rbar: BTreeMap::new(),
            pending: BTreeSet::new(),
        };
        for a in &ids {
            for b in &ids {
                builder.value(a, b, false)?;
                builder.value(a, b, true)?;
            }
        }
        Ok(RForm {
            mode: ExtensionMode::RecursiveFromGenerators,
            r: builder.r.into_iter().filter(|(_, v)| !v.is_zero()).collect(),
            rbar: builder
                .rbar
                .into_iter()
                .filter(|(_, v)| !v.is_zero())
                .collect(),
            cover: ids.into_iter().collect(),
        })
    }
}

/// The tensor-product r-form: `r((x1 (x) x2) (x) (y1 (x) y2)) =
/// r1(x1 (x) y1) r2(x2 (x) y2)`, materialized as a complete table on the
/// tensor basis.
pub fn tensor_rform(
    tensor: &crate::wba::TensorWba,
    h1: &BasedWBA,
    r1: &RForm,
    h2: &BasedWBA,
    r2: &RForm,
) -> Result<RForm, AlgebraError> {
    let host = tensor.wba();
    let mut r = BTreeMap::new();
    let mut rbar = BTreeMap::new();
    let ids: Vec<BasisId> = host.basis_ids().collect();
    for a in &ids {
        let (a1, a2) = tensor
            .factor_pair(a)
            .ok_or(AlgebraError::UnknownBasis(*a))?;
        let ea1 = Element::from_basis(a1, Scalar::one(h1.field()));
        let ea2 = Element::from_basis(a2, Scalar::one(h2.field()));
        for b in &ids {
            let (b1, b2) = tensor
                .factor_pair(b)
                .ok_or(AlgebraError::UnknownBasis(*b))?;
            let eb1 = Element::from_basis(b1, Scalar::one(h1.field()));
            let eb2 = Element::from_basis(b2, Scalar::one(h2.field()));
            let v = r1.eval(h1, &ea1, &eb1)?.mul(&r2.eval(h2, &ea2, &eb2)?);
            if !v.is_zero() {
                r.insert((*a, *b), v);
            }
            let vb = r1
                .eval_bar(h1, &ea1, &eb1)?
                .mul(&r2.eval_bar(h2, &ea2, &eb2)?);
            if !vb.is_zero() {
                rbar.insert((*a, *b), vb);
            }
        }
    }
    Ok(RForm::from_tables(host, r, rbar))
}

struct Extend<'a> {
    host: &'a BasedWBA,
    words: &'a BTreeMap<BasisId, Vec<BasisId>>,
    gen_r: &'a BTreeMap<(BasisId, BasisId), Scalar>,
    gen_rbar: &'a BTreeMap<(BasisId, BasisId), Scalar>,
    r: BTreeMap<(BasisId, BasisId), Scalar>,
    rbar: BTreeMap<(BasisId, BasisId), Scalar>,
    pending: BTreeSet<(BasisId, BasisId, bool)>,
}

impl<'a> Extend<'a> {
    fn eval_elem(&mut self, x: &Element, y: &Element, bar: bool) -> Result<Scalar, AlgebraError> {
        let mut out = Scalar::zero(self.host.field());
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                let v = self.value(bx, by, bar)?;
                out = out.add(&v.mul(cx).mul(cy));
            }
        }
        Ok(out)
    }

    /// Product of the tail letters of a word (the word minus its first letter).
    fn tail_element(&self, word: &[BasisId]) -> Result<Element, AlgebraError> {
        let mut acc = self.host.unit().clone();
        for letter in &word[1..] {
            let e = Element::from_basis(*letter, Scalar::one(self.host.field()));
            acc = self.host.mul(&acc, &e)?;
        }
        Ok(acc)
    }

    fn value(&mut self, a: &BasisId, b: &BasisId, bar: bool) -> Result<Scalar, AlgebraError> {
        let table = if bar { &self.rbar } else { &self.r };
        if let Some(v) = table.get(&(*a, *b)) {
            return Ok(v.clone());
        }
        if !self.pending.insert((*a, *b, bar)) {
            return Err(AlgebraError::BadStructure(format!(
                "cyclic r-form recursion at ({a}, {b})"
            )));
        }
        let wa = &self.words[a];
        let wb = &self.words[b];
        let ea = Element::from_basis(*a, Scalar::one(self.host.field()));
        let eb = Element::from_basis(*b, Scalar::one(self.host.field()));
        let v = if wa.is_empty() {
            self.host.counit(&eb)
        } else if wb.is_empty() {
            self.host.counit(&ea)
        } else if wa.len() == 1 && wb.len() == 1 {
            let table = if bar { self.gen_rbar } else { self.gen_r };
            table
                .get(&(wa[0], wb[0]))
                .cloned()
                .unwrap_or_else(|| Scalar::zero(self.host.field()))
        } else if wa.len() == 1 {
            // split b = h * T and recurse through Delta(a)
            let h = Element::from_basis(wb[0], Scalar::one(self.host.field()));
            let t = self.tail_element(wb)?;
            let da = self.host.delta_basis(a)?;
            let mut acc = Scalar::zero(self.host.field());
            for ((a1, a2), c) in da.terms() {
                let e1 = Element::from_basis(*a1, Scalar::one(self.host.field()));
                let e2 = Element::from_basis(*a2, Scalar::one(self.host.field()));
                let v = if bar {
                    // rbar(x (x) hT) = rbar(x' (x) T) rbar(x'' (x) h)
                    self.eval_elem(&e1, &t, true)?.mul(&self.eval_elem(&e2, &h, true)?)
                } else {
                    // r(x (x) hT) = r(x' (x) h) r(x'' (x) T)
                    self.eval_elem(&e1, &h, false)?.mul(&self.eval_elem(&e2, &t, false)?)
                };
                acc = acc.add(&v.mul(c));
            }
            acc
        } else {
            // split a = g * T and recurse through Delta(b)
            let g = Element::from_basis(wa[0], Scalar::one(self.host.field()));
            let t = self.tail_element(wa)?;
            let db = self.host.delta_basis(b)?;
            let mut acc = Scalar::zero(self.host.field());
            for ((b1, b2), c) in db.terms() {
                let e1 = Element::from_basis(*b1, Scalar::one(self.host.field()));
                let e2 = Element::from_basis(*b2, Scalar::one(self.host.field()));
                let v = if bar {
                    // rbar(gT (x) z) = rbar(g (x) z') rbar(T (x) z'')
                    self.eval_elem(&g, &e1, true)?.mul(&self.eval_elem(&t, &e2, true)?)
                } else {
                    // r(gT (x) z) = r(T (x) z') r(g (x) z'')
                    self.eval_elem(&t, &e1, false)?.mul(&self.eval_elem(&g, &e2, false)?)
                };
                acc = acc.add(&v.mul(c));
            }
            acc
        };
        self.pending.remove(&(*a, *b, bar));
        let table = if bar { &mut self.rbar } else { &mut self.r };
        table.insert((*a, *b), v.clone());
        Ok(v)
    }
}
