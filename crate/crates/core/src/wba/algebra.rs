//! Weak bialgebras presented by structure constants on an explicit basis.
//!
//! A [`BasedWBA`] stores the multiplication, comultiplication, counit and
//! unit as sparse tables over [`BasisId`]s. Nothing about the tables is
//! assumed: the axioms are enforced by [`crate::wba::check_wba_axioms`], not
//! by construction. Graded algebras are materialized up to an explicit
//! degree window, and any product that would leave the window is a loud
//! error rather than a silent truncation.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::exactfield::{CycloField, Scalar};
use crate::wba::{BasisId, Element, PairTensor, TripleTensor};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("product of degrees {0} and {1} leaves the materialized window [{2}, {3}]")]
    DegreeOverflow(i32, i32, i32, i32),
    #[error("basis pair ({0}, {1}) has no materialized product")]
    ProductUnavailable(BasisId, BasisId),
    #[error("unknown basis id {0}")]
    UnknownBasis(BasisId),
    #[error("unknown basis label {0:?}")]
    UnknownLabel(String),
    #[error("elements live over different fields")]
    FieldMismatch,
    #[error("linear map undefined on basis id {0}")]
    UndefinedOn(BasisId),
    #[error("malformed structure: {0}")]
    BadStructure(String),
    #[error("element is not group-like: {0}")]
    NotGroupLike(String),
}

/// Builder for [`BasedWBA`]; see the module docs for the table conventions.
pub struct WbaBuilder {
    name: String,
    field: Arc<CycloField>,
    labels: BTreeMap<BasisId, String>,
    unit: Element,
    mul: BTreeMap<(BasisId, BasisId), Element>,
    mul_overflow: BTreeSet<(BasisId, BasisId)>,
    delta: BTreeMap<BasisId, PairTensor>,
    counit: BTreeMap<BasisId, Scalar>,
    min_degree: i32,
    max_degree: i32,
    unbounded_above: bool,
    unbounded_below: bool,
}

impl WbaBuilder {
    pub fn new(name: impl Into<String>, field: &Arc<CycloField>) -> Self {
        WbaBuilder {
            name: name.into(),
            field: field.clone(),
            labels: BTreeMap::new(),
            unit: Element::zero(),
            mul: BTreeMap::new(),
            mul_overflow: BTreeSet::new(),
            delta: BTreeMap::new(),
            counit: BTreeMap::new(),
            min_degree: 0,
            max_degree: 0,
            unbounded_above: false,
            unbounded_below: false,
        }
    }

    /// Declares the materialized degree window. `unbounded_above` means the
    /// true object has (or may have) nonzero components beyond `max`.
    pub fn window(mut self, min: i32, max: i32, unbounded_above: bool, unbounded_below: bool) -> Self {
        self.min_degree = min;
        self.max_degree = max;
        self.unbounded_above = unbounded_above;
        self.unbounded_below = unbounded_below;
        self
    }

    pub fn basis(&mut self, id: BasisId, label: impl Into<String>) -> &mut Self {
        self.labels.insert(id, label.into());
        self
    }

    pub fn unit(&mut self, unit: Element) -> &mut Self {
        self.unit = unit;
        self
    }

    pub fn product(&mut self, a: BasisId, b: BasisId, value: Element) -> &mut Self {
        if !value.is_zero() {
            self.mul.insert((a, b), value);
        }
        self
    }

    /// Marks a basis pair whose product exists but falls outside the window.
    pub fn product_overflow(&mut self, a: BasisId, b: BasisId) -> &mut Self {
        self.mul_overflow.insert((a, b));
        self
    }

    pub fn coproduct(&mut self, a: BasisId, value: PairTensor) -> &mut Self {
        if !value.is_zero() {
            self.delta.insert(a, value);
        }
        self
    }

    pub fn counit(&mut self, a: BasisId, value: Scalar) -> &mut Self {
        if !value.is_zero() {
            self.counit.insert(a, value);
        }
        self
    }

    pub fn build(self) -> Result<BasedWBA, AlgebraError> {
        let mut dims: BTreeMap<i32, u32> = BTreeMap::new();
        for id in self.labels.keys() {
            let d = dims.entry(id.degree).or_insert(0);
            if id.index != *d {
                return Err(AlgebraError::BadStructure(format!(
                    "basis indices of degree {} are not contiguous at {}",
                    id.degree, id
                )));
            }
            *d += 1;
        }
        let check_id = |id: &BasisId| -> Result<(), AlgebraError> {
            match dims.get(&id.degree) {
                Some(d) if id.index < *d => Ok(()),
                _ => Err(AlgebraError::UnknownBasis(*id)),
            }
        };
        for id in self.unit.support() {
            check_id(id)?;
        }
        for ((a, b), v) in &self.mul {
            check_id(a)?;
            check_id(b)?;
            for id in v.support() {
                check_id(id)?;
            }
        }
        for (a, t) in &self.delta {
            check_id(a)?;
            for ((l, r), _) in t.terms() {
                check_id(l)?;
                check_id(r)?;
            }
        }
        for a in self.counit.keys() {
            check_id(a)?;
        }
        let mut wba = BasedWBA {
            name: self.name,
            field: self.field,
            dims,
            labels: self.labels,
            label_index: BTreeMap::new(),
            unit: self.unit,
            mul: self.mul,
            mul_overflow: self.mul_overflow,
            delta: self.delta,
            counit: self.counit,
            min_degree: self.min_degree,
            max_degree: self.max_degree,
            unbounded_above: self.unbounded_above,
            unbounded_below: self.unbounded_below,
            delta_one: PairTensor::zero(),
        };
        wba.label_index = wba
            .labels
            .iter()
            .map(|(id, l)| (l.clone(), *id))
            .collect();
        if wba.label_index.len() != wba.labels.len() {
            return Err(AlgebraError::BadStructure(
                "duplicate basis labels".to_string(),
            ));
        }
        wba.delta_one = wba.delta(&wba.unit)?;
        Ok(wba)
    }
}

/// A based weak bialgebra: algebra and coalgebra structure constants on one
/// ordered basis, over a fixed cyclotomic field.
#[derive(Clone)]
pub struct BasedWBA {
    name: String,
    field: Arc<CycloField>,
    dims: BTreeMap<i32, u32>,
    labels: BTreeMap<BasisId, String>,
    label_index: BTreeMap<String, BasisId>,
    unit: Element,
    mul: BTreeMap<(BasisId, BasisId), Element>,
    mul_overflow: BTreeSet<(BasisId, BasisId)>,
    delta: BTreeMap<BasisId, PairTensor>,
    counit: BTreeMap<BasisId, Scalar>,
    min_degree: i32,
    max_degree: i32,
    unbounded_above: bool,
    unbounded_below: bool,
    // Delta(1) drives eps_s, eps_t and the group-like test, so it is cached
    delta_one: PairTensor,
}

impl fmt::Debug for BasedWBA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BasedWBA({}, dim {} over Q(zeta_{}))",
            self.name,
            self.total_dim(),
            self.field.conductor()
        )
    }
}

impl BasedWBA {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn delta_one(&self) -> &PairTensor {
        &self.delta_one
    }

    pub fn window(&self) -> (i32, i32) {
        (self.min_degree, self.max_degree)
    }

    pub fn is_unbounded_above(&self) -> bool {
        self.unbounded_above
    }

    pub fn is_unbounded_below(&self) -> bool {
        self.unbounded_below
    }

    /// True when the materialized window covers the whole algebra.
    pub fn is_complete(&self) -> bool {
        !self.unbounded_above && !self.unbounded_below
    }

    pub fn dim(&self, degree: i32) -> u32 {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> u64 {
        self.dims.values().map(|&d| d as u64).sum()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i32> + '_ {
        self.dims.keys().copied()
    }

    pub fn basis_ids(&self) -> impl Iterator<Item = BasisId> + '_ {
        self.labels.keys().copied()
    }

    pub fn basis_of_degree(&self, degree: i32) -> impl Iterator<Item = BasisId> + '_ {
        (0..self.dim(degree)).map(move |i| BasisId::new(degree, i))
    }

    pub fn label(&self, id: &BasisId) -> &str {
        self.labels.get(id).map(|s| s.as_str()).unwrap_or("?")
    }

    pub fn by_label(&self, label: &str) -> Result<BasisId, AlgebraError> {
        self.label_index
            .get(label)
            .copied()
            .ok_or_else(|| AlgebraError::UnknownLabel(label.to_string()))
    }

    /// Basis element with coefficient 1, looked up by label.
    pub fn gen(&self, label: &str) -> Result<Element, AlgebraError> {
        Ok(Element::from_basis(
            self.by_label(label)?,
            Scalar::one(&self.field),
        ))
    }

    fn in_window(&self, degree: i32) -> bool {
        degree >= self.min_degree && degree <= self.max_degree
    }

    /// Product of two basis vectors. Missing table entries inside the window
    /// mean zero; a product falling outside the window is an error unless
    /// the algebra is known to be zero out there.
    pub fn mul_basis(&self, a: &BasisId, b: &BasisId) -> Result<Element, AlgebraError> {
        if self.mul_overflow.contains(&(*a, *b)) {
            return Err(AlgebraError::ProductUnavailable(*a, *b));
        }
        if let Some(v) = self.mul.get(&(*a, *b)) {
            return Ok(v.clone());
        }
        let d = a.degree + b.degree;
        if self.in_window(d)
            || (d > self.max_degree && !self.unbounded_above)
            || (d < self.min_degree && !self.unbounded_below)
        {
            Ok(Element::zero())
        } else {
            Err(AlgebraError::DegreeOverflow(
                a.degree,
                b.degree,
                self.min_degree,
                self.max_degree,
            ))
        }
    }

    /// Bilinear extension of the multiplication table.
    pub fn mul(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        let mut out = Element::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                let prod = self.mul_basis(bx, by)?;
                out.add_scaled(&prod, &cx.mul(cy));
            }
        }
        Ok(out)
    }

    pub fn mul3(&self, x: &Element, y: &Element, z: &Element) -> Result<Element, AlgebraError> {
        self.mul(&self.mul(x, y)?, z)
    }

    pub fn delta_basis(&self, a: &BasisId) -> Result<PairTensor, AlgebraError> {
        if !self.labels.contains_key(a) {
            return Err(AlgebraError::UnknownBasis(*a));
        }
        Ok(self.delta.get(a).cloned().unwrap_or_default())
    }

    /// Linear extension of the comultiplication table.
    pub fn delta(&self, x: &Element) -> Result<PairTensor, AlgebraError> {
        let mut out = PairTensor::zero();
        for (b, c) in x.terms() {
            let d = self.delta_basis(b)?;
            out.add_scaled(&d, c);
        }
        Ok(out)
    }

    /// `(Delta (x) id) . Delta`, using coassociativity-free evaluation.
    pub fn delta2(&self, x: &Element) -> Result<TripleTensor, AlgebraError> {
        let mut out = TripleTensor::zero();
        for ((l, r), c) in self.delta(x)?.terms() {
            for ((a, b), c2) in self.delta_basis(l)?.terms() {
                out.add_term(*a, *b, *r, c.mul(c2));
            }
        }
        Ok(out)
    }

    pub fn counit_basis(&self, a: &BasisId) -> Scalar {
        self.counit
            .get(a)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(&self.field))
    }

    pub fn counit(&self, x: &Element) -> Scalar {
        let mut out = Scalar::zero(&self.field);
        for (b, c) in x.terms() {
            out = out.add(&self.counit_basis(b).mul(c));
        }
        out
    }

    /// Source counital map `eps_s(x) = 1' eps(x 1'')`.
    pub fn counital_source(&self, x: &Element) -> Result<Element, AlgebraError> {
        let mut out = Element::zero();
        for ((l, r), c) in self.delta_one.terms() {
            let right = Element::from_basis(*r, Scalar::one(&self.field));
            let s = self.counit(&self.mul(x, &right)?).mul(c);
            out.add_term(*l, s);
        }
        Ok(out)
    }

    /// Target counital map `eps_t(x) = eps(1' x) 1''`.
    pub fn counital_target(&self, x: &Element) -> Result<Element, AlgebraError> {
        let mut out = Element::zero();
        for ((l, r), c) in self.delta_one.terms() {
            let left = Element::from_basis(*l, Scalar::one(&self.field));
            let s = self.counit(&self.mul(&left, x)?).mul(c);
            out.add_term(*r, s);
        }
        Ok(out)
    }

    /// Componentwise product on `H (x) H`: `(a (x) b)(c (x) d) = ac (x) bd`.
    pub fn mul_pair(&self, s: &PairTensor, t: &PairTensor) -> Result<PairTensor, AlgebraError> {
        let mut out = PairTensor::zero();
        for ((a, b), c1) in s.terms() {
            for ((c, d), c2) in t.terms() {
                let left = self.mul_basis(a, c)?;
                let right = self.mul_basis(b, d)?;
                let coeff = c1.mul(c2);
                for (bl, cl) in left.terms() {
                    for (br, cr) in right.terms() {
                        out.add_term(*bl, *br, coeff.mul(cl).mul(cr));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Render an element using this algebra's basis labels.
    pub fn show(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (b, c) in x.terms() {
            let label = self.label(b);
            if c.is_one() {
                parts.push(label.to_string());
            } else {
                parts.push(format!("({})*{}", c, label));
            }
        }
        parts.join(" + ")
    }

    pub fn show_pair(&self, t: &PairTensor) -> String {
        if t.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for ((l, r), c) in t.terms() {
            let term = format!("{}(x){}", self.label(l), self.label(r));
            if c.is_one() {
                parts.push(term);
            } else {
                parts.push(format!("({})*{}", c, term));
            }
        }
        parts.join(" + ")
    }

    /// Copy of this algebra with one multiplication entry replaced; used by
    /// the mutation harness to produce negative controls.
    pub fn with_mul_entry(&self, a: BasisId, b: BasisId, value: Element) -> BasedWBA {
        let mut out = self.clone();
        if value.is_zero() {
            out.mul.remove(&(a, b));
        } else {
            out.mul.insert((a, b), value);
        }
        out
    }

    pub fn with_name(&self, name: impl Into<String>) -> BasedWBA {
        let mut out = self.clone();
        out.name = name.into();
        out
    }

    pub(crate) fn raw_tables(
        &self,
    ) -> (
        &BTreeMap<BasisId, String>,
        &Element,
        &BTreeMap<(BasisId, BasisId), Element>,
        &BTreeSet<(BasisId, BasisId)>,
        &BTreeMap<BasisId, PairTensor>,
        &BTreeMap<BasisId, Scalar>,
    ) {
        (
            &self.labels,
            &self.unit,
            &self.mul,
            &self.mul_overflow,
            &self.delta,
            &self.counit,
        )
    }
}

/// The tensor product WBA together with the leg bookkeeping needed to embed
/// elements and maps of the factors.
pub struct TensorWba {
    wba: Arc<BasedWBA>,
    pair_to_id: BTreeMap<(BasisId, BasisId), BasisId>,
    id_to_pair: BTreeMap<BasisId, (BasisId, BasisId)>,
}

impl TensorWba {
    pub fn wba(&self) -> &Arc<BasedWBA> {
        &self.wba
    }

    pub fn factor_pair(&self, id: &BasisId) -> Option<(BasisId, BasisId)> {
        self.id_to_pair.get(id).copied()
    }

    pub fn pair_id(&self, left: &BasisId, right: &BasisId) -> Option<BasisId> {
        self.pair_to_id.get(&(*left, *right)).copied()
    }

    /// `x (x) y` as an element of the tensor algebra.
    pub fn embed(&self, x: &Element, y: &Element) -> Result<Element, AlgebraError> {
        let mut out = Element::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                let id = self
                    .pair_id(bx, by)
                    .ok_or(AlgebraError::UnknownBasis(*bx))?;
                out.add_term(id, cx.mul(cy));
            }
        }
        Ok(out)
    }

    /// The leg-wise map `left (x) right` on the tensor basis.
    pub fn map_pair(
        &self,
        left: &crate::wba::LinearMap,
        right: &crate::wba::LinearMap,
    ) -> Result<crate::wba::LinearMap, AlgebraError> {
        let mut out = crate::wba::LinearMap::new();
        for (id, (b1, b2)) in &self.id_to_pair {
            let img = self.embed(left.image_of(b1)?, right.image_of(b2)?)?;
            out.define(*id, img);
        }
        Ok(out)
    }
}

/// Componentwise tensor product of two WBAs over the same field.
///
/// The coproduct uses the middle transposition, so group-likes of the
/// factors multiply to group-likes of the product.
pub fn tensor_wba(h1: &BasedWBA, h2: &BasedWBA) -> Result<TensorWba, AlgebraError> {
    if h1.field.conductor() != h2.field.conductor() {
        return Err(AlgebraError::FieldMismatch);
    }
    let name = format!("{}(x){}", h1.name, h2.name);

    // window arithmetic: an unbounded factor clips what the product can
    // guarantee at each total degree
    let mut max = h1.max_degree + h2.max_degree;
    let mut min = h1.min_degree + h2.min_degree;
    if h1.unbounded_above {
        max = max.min(h1.max_degree + h2.min_degree);
    }
    if h2.unbounded_above {
        max = max.min(h1.min_degree + h2.max_degree);
    }
    if h1.unbounded_below {
        min = min.max(h1.min_degree + h2.max_degree);
    }
    if h2.unbounded_below {
        min = min.max(h1.max_degree + h2.min_degree);
    }
    let unbounded_above = h1.unbounded_above || h2.unbounded_above;
    let unbounded_below = h1.unbounded_below || h2.unbounded_below;

    let mut builder = WbaBuilder::new(name, &h1.field).window(min, max, unbounded_above, unbounded_below);
    let mut pair_to_id = BTreeMap::new();
    let mut id_to_pair = BTreeMap::new();
    let mut counters: BTreeMap<i32, u32> = BTreeMap::new();
    for b1 in h1.basis_ids() {
        for b2 in h2.basis_ids() {
            let d = b1.degree + b2.degree;
            if d < min || d > max {
                continue;
            }
            let idx = counters.entry(d).or_insert(0);
            let id = BasisId::new(d, *idx);
            *idx += 1;
            pair_to_id.insert((b1, b2), id);
            id_to_pair.insert(id, (b1, b2));
            builder.basis(id, format!("{}(x){}", h1.label(&b1), h2.label(&b2)));
        }
    }

    let embed = |x: &Element, y: &Element| -> Option<Element> {
        let mut out = Element::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                let id = pair_to_id.get(&(*bx, *by))?;
                out.add_term(*id, cx.mul(cy));
            }
        }
        Some(out)
    };

    let unit = embed(h1.unit(), h2.unit()).ok_or_else(|| {
        AlgebraError::BadStructure("tensor unit does not fit the window".to_string())
    })?;
    builder.unit(unit);

    let ids: Vec<BasisId> = pair_to_id.values().copied().collect();
    for id in &ids {
        let (b1, b2) = id_to_pair[id];
        // coproduct with the middle swap
        let d1 = h1.delta_basis(&b1)?;
        let d2 = h2.delta_basis(&b2)?;
        let mut t = PairTensor::zero();
        let mut total = true;
        for ((l1, r1), c1) in d1.terms() {
            for ((l2, r2), c2) in d2.terms() {
                match (pair_to_id.get(&(*l1, *l2)), pair_to_id.get(&(*r1, *r2))) {
                    (Some(l), Some(r)) => t.add_term(*l, *r, c1.mul(c2)),
                    _ => total = false,
                }
            }
        }
        if !total {
            return Err(AlgebraError::BadStructure(format!(
                "coproduct of {} leaves the tensor window",
                id
            )));
        }
        builder.coproduct(*id, t);
        builder.counit(*id, h1.counit_basis(&b1).mul(&h2.counit_basis(&b2)));
    }

    for (a, pa) in &id_to_pair {
        for (b, pb) in &id_to_pair {
            if a.degree + b.degree > max || a.degree + b.degree < min {
                continue;
            }
            let p1 = h1.mul_basis(&pa.0, &pb.0);
            let p2 = h2.mul_basis(&pa.1, &pb.1);
            match (p1, p2) {
                (Ok(x), Ok(y)) => {
                    if x.is_zero() || y.is_zero() {
                        continue;
                    }
                    match embed(&x, &y) {
                        Some(v) => {
                            builder.product(*a, *b, v);
                        }
                        None => {
                            builder.product_overflow(*a, *b);
                        }
                    }
                }
                _ => {
                    builder.product_overflow(*a, *b);
                }
            }
        }
    }

    let wba = Arc::new(builder.build()?);
    Ok(TensorWba {
        wba,
        pair_to_id,
        id_to_pair,
    })
}
