//! Basis identifiers, elements, and low-order tensors.
//!
//! An [`Element`] is a finite linear combination of basis vectors with exact
//! scalar coefficients; zero coefficients are never stored. [`PairTensor`]
//! and [`TripleTensor`] play the same role in `H (x) H` and `H (x) H (x) H`,
//! which is as deep as any of the axiom checks need to go.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::exactfield::Scalar;

/// Position of a basis vector: homogeneous degree plus index within the
/// fixed ordering of that degree's component. Ungraded algebras use degree 0
/// only; localization models at a positive-degree denominator are Z-graded,
/// hence the signed degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BasisId {
    pub degree: i32,
    pub index: u32,
}

impl BasisId {
    pub fn new(degree: i32, index: u32) -> Self {
        BasisId { degree, index }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.degree, self.index)
    }
}

/// A finite linear combination of basis vectors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Element {
    terms: BTreeMap<BasisId, Scalar>,
}

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn from_basis(id: BasisId, coeff: Scalar) -> Self {
        let mut e = Element::zero();
        e.add_term(id, coeff);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisId, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, id: &BasisId) -> Option<&Scalar> {
        self.terms.get(id)
    }

    pub fn support(&self) -> impl Iterator<Item = &BasisId> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, id: BasisId, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(id) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&coeff);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (id, c) in other.terms() {
            out.add_term(*id, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (id, c) in other.terms() {
            out.add_term(*id, c.neg());
        }
        out
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(id, c)| (*id, c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        let mut out = Element::zero();
        for (id, s) in self.terms() {
            out.add_term(*id, s.mul(c));
        }
        out
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (id, s) in other.terms() {
            self.add_term(*id, s.mul(c));
        }
    }

    /// Degrees occurring in the support.
    pub fn degrees(&self) -> Vec<i32> {
        let mut ds: Vec<i32> = self.terms.keys().map(|b| b.degree).collect();
        ds.dedup();
        ds
    }

    /// The homogeneous component of a given degree.
    pub fn component(&self, degree: i32) -> Element {
        Element {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.degree == degree)
                .map(|(b, c)| (*b, c.clone()))
                .collect(),
        }
    }

    /// True when all terms share one degree (zero counts as homogeneous).
    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }
}

impl Serialize for Element {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let v: Vec<(&BasisId, &Scalar)> = self.terms.iter().collect();
        v.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Element {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let v: Vec<(BasisId, Scalar)> = Vec::deserialize(deserializer)?;
        let mut e = Element::zero();
        for (id, c) in v {
            e.add_term(id, c);
        }
        Ok(e)
    }
}

/// An element of `H (x) H` over basis pairs.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PairTensor {
    terms: BTreeMap<(BasisId, BasisId), Scalar>,
}

impl PairTensor {
    pub fn zero() -> Self {
        PairTensor::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(BasisId, BasisId), &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, left: BasisId, right: BasisId, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((left, right)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&coeff);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &PairTensor) -> PairTensor {
        let mut out = self.clone();
        for ((l, r), c) in other.terms() {
            out.add_term(*l, *r, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &PairTensor) -> PairTensor {
        let mut out = self.clone();
        for ((l, r), c) in other.terms() {
            out.add_term(*l, *r, c.neg());
        }
        out
    }

    pub fn add_scaled(&mut self, other: &PairTensor, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for ((l, r), s) in other.terms() {
            self.add_term(*l, *r, s.mul(c));
        }
    }

    pub fn scale(&self, c: &Scalar) -> PairTensor {
        let mut out = PairTensor::zero();
        out.add_scaled(self, c);
        out
    }

    /// `x (x) y` for plain elements.
    pub fn of(x: &Element, y: &Element) -> PairTensor {
        let mut out = PairTensor::zero();
        for (bx, cx) in x.terms() {
            for (by, cy) in y.terms() {
                out.add_term(*bx, *by, cx.mul(cy));
            }
        }
        out
    }

    /// Swap the two tensor legs.
    pub fn transpose(&self) -> PairTensor {
        let mut out = PairTensor::zero();
        for ((l, r), c) in self.terms() {
            out.add_term(*r, *l, c.clone());
        }
        out
    }
}

/// An element of `H (x) H (x) H`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TripleTensor {
    terms: BTreeMap<(BasisId, BasisId, BasisId), Scalar>,
}

impl TripleTensor {
    pub fn zero() -> Self {
        TripleTensor::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(BasisId, BasisId, BasisId), &Scalar)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, a: BasisId, b: BasisId, c: BasisId, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry((a, b, c)) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(&coeff);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }
}
