//! Homogeneous quotients of graded algebras by degree-2 relations.
//!
//! The two-sided ideal's degree-`d` slice is the span of `a * rho * b` over
//! basis elements `a`, `b` and relations `rho`; each slice is row-reduced
//! exactly, the surviving (non-pivot) monomials become the quotient basis,
//! and multiplication, coproduct and counit descend through the projection.
//! Descending the coproduct is legitimate only when the ideal is a coideal,
//! which is checked, not assumed.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exactfield::Scalar;
use crate::linalg::{RowSpace, SparseVec};
use crate::report::{CheckBuilder, Report};
use crate::wba::{AlgebraError, BasedWBA, BasisId, Element, PairTensor, WbaBuilder};

pub struct GradedQuotient {
    free: Arc<BasedWBA>,
    relations: Vec<Element>,
    /// per-degree echelonized ideal slices
    ideal: BTreeMap<i32, RowSpace>,
    /// representative free monomials per degree, ascending index
    kept: BTreeMap<i32, Vec<BasisId>>,
    kept_index: BTreeMap<BasisId, u32>,
    wba: Arc<BasedWBA>,
}

impl GradedQuotient {
    pub fn free(&self) -> &Arc<BasedWBA> {
        &self.free
    }

    pub fn relations(&self) -> &[Element] {
        &self.relations
    }

    pub fn wba(&self) -> &Arc<BasedWBA> {
        &self.wba
    }

    /// `(degree, free dim, quotient dim)` for each materialized degree.
    pub fn dims(&self) -> Vec<(i32, u32, u32)> {
        self.wba
            .degrees()
            .map(|d| (d, self.free.dim(d), self.wba.dim(d)))
            .collect()
    }

    /// Projects a free element onto quotient coordinates.
    pub fn reduce(&self, x: &Element) -> Result<Element, AlgebraError> {
        let mut out = Element::zero();
        for d in x.degrees() {
            let comp = x.component(d);
            let reduced = match self.ideal.get(&d) {
                Some(space) => {
                    let v: SparseVec = comp
                        .terms()
                        .map(|(b, c)| (b.index as usize, c.clone()))
                        .collect();
                    space.reduce(&v)
                }
                None => comp
                    .terms()
                    .map(|(b, c)| (b.index as usize, c.clone()))
                    .collect(),
            };
            for (col, c) in reduced {
                let free_id = BasisId::new(d, col as u32);
                let q = self
                    .kept_index
                    .get(&free_id)
                    .ok_or(AlgebraError::UnknownBasis(free_id))?;
                out.add_term(BasisId::new(d, *q), c);
            }
        }
        Ok(out)
    }

    /// The representative free element of a quotient element.
    pub fn lift(&self, x: &Element) -> Result<Element, AlgebraError> {
        let mut out = Element::zero();
        for (b, c) in x.terms() {
            let reps = self
                .kept
                .get(&b.degree)
                .ok_or(AlgebraError::UnknownBasis(*b))?;
            let rep = reps
                .get(b.index as usize)
                .ok_or(AlgebraError::UnknownBasis(*b))?;
            out.add_term(*rep, c.clone());
        }
        Ok(out)
    }
}

/// Quotients `free` by the two-sided ideal generated by homogeneous
/// degree-2 `relations`, materializing every degree of the host's window.
pub fn impose_relations(
    free: &Arc<BasedWBA>,
    relations: Vec<Element>,
    name: impl Into<String>,
) -> Result<GradedQuotient, AlgebraError> {
    let relations: Vec<Element> = relations.into_iter().filter(|r| !r.is_zero()).collect();
    for rel in &relations {
        if !rel.is_homogeneous() || rel.degrees() != vec![2] {
            return Err(AlgebraError::BadStructure(
                "relations must be homogeneous of degree 2".to_string(),
            ));
        }
    }
    let (lo, hi) = free.window();
    if lo != 0 {
        return Err(AlgebraError::BadStructure(
            "quotients expect an N-graded host".to_string(),
        ));
    }

    let one = Scalar::one(free.field());
    let mut ideal: BTreeMap<i32, RowSpace> = BTreeMap::new();
    for d in 2..=hi {
        let mut space = RowSpace::new(free.field().clone());
        for i in 0..=(d - 2) {
            let j = d - 2 - i;
            for a in free.basis_of_degree(i) {
                let ea = Element::from_basis(a, one.clone());
                for rel in &relations {
                    let left = free.mul(&ea, rel)?;
                    if left.is_zero() {
                        continue;
                    }
                    for b in free.basis_of_degree(j) {
                        let eb = Element::from_basis(b, one.clone());
                        let row_elem = free.mul(&left, &eb)?;
                        if row_elem.is_zero() {
                            continue;
                        }
                        let row: SparseVec = row_elem
                            .terms()
                            .map(|(id, c)| (id.index as usize, c.clone()))
                            .collect();
                        space.insert(row);
                    }
                }
            }
        }
        ideal.insert(d, space);
    }

    // surviving monomials per degree
    let mut kept: BTreeMap<i32, Vec<BasisId>> = BTreeMap::new();
    let mut kept_index: BTreeMap<BasisId, u32> = BTreeMap::new();
    for d in 0..=hi {
        let pivots: Vec<usize> = ideal
            .get(&d)
            .map(|s| s.pivots().to_vec())
            .unwrap_or_default();
        let mut reps = Vec::new();
        for idx in 0..free.dim(d) {
            if !pivots.contains(&(idx as usize)) {
                kept_index.insert(BasisId::new(d, idx), reps.len() as u32);
                reps.push(BasisId::new(d, idx));
            }
        }
        kept.insert(d, reps);
    }

    let mut stub = GradedQuotient {
        free: free.clone(),
        relations,
        ideal,
        kept,
        kept_index,
        wba: Arc::new(
            WbaBuilder::new("quotient-stub", free.field())
                .build()
                .expect("empty builder"),
        ),
    };

    // counit must vanish on the ideal, and the ideal must be a coideal,
    // otherwise the quotient coalgebra is undefined
    for (d, space) in &stub.ideal {
        for row in space.rows() {
            let mut v = Element::zero();
            for (col, c) in row {
                v.add_term(BasisId::new(*d, *col as u32), c.clone());
            }
            if !free.counit(&v).is_zero() {
                return Err(AlgebraError::BadStructure(format!(
                    "counit does not vanish on the degree-{d} ideal slice"
                )));
            }
            let dv = free.delta(&v)?;
            let projected = project_pair(&stub, &dv)?;
            if !projected.is_zero() {
                return Err(AlgebraError::BadStructure(format!(
                    "coideal test failed in degree {d}: Delta(I) is not inside I(x)H + H(x)I"
                )));
            }
        }
    }

    // build the quotient WBA on the surviving monomials
    let mut builder = WbaBuilder::new(name, free.field()).window(0, hi, free.is_unbounded_above(), false);
    for (d, reps) in &stub.kept {
        for (i, rep) in reps.iter().enumerate() {
            builder.basis(BasisId::new(*d, i as u32), free.label(rep).to_string());
        }
    }
    builder.unit(stub.reduce(free.unit())?);
    for (d, reps) in &stub.kept {
        for (i, rep) in reps.iter().enumerate() {
            let qa = BasisId::new(*d, i as u32);
            let rep_elem = Element::from_basis(*rep, one.clone());
            builder.coproduct(qa, project_pair(&stub, &free.delta_basis(rep)?)?);
            builder.counit(qa, free.counit(&rep_elem));
            for (d2, reps2) in &stub.kept {
                if d + d2 > hi {
                    continue;
                }
                for (j, rep2) in reps2.iter().enumerate() {
                    let qb = BasisId::new(*d2, j as u32);
                    let prod = free.mul_basis(rep, rep2)?;
                    let reduced = stub.reduce(&prod)?;
                    builder.product(qa, qb, reduced);
                }
            }
        }
    }
    stub.wba = Arc::new(builder.build()?);
    Ok(stub)
}

fn project_pair(q: &GradedQuotient, t: &PairTensor) -> Result<PairTensor, AlgebraError> {
    let one = Scalar::one(q.free.field());
    let mut out = PairTensor::zero();
    for ((l, r), c) in t.terms() {
        let pl = q.reduce(&Element::from_basis(*l, one.clone()))?;
        let pr = q.reduce(&Element::from_basis(*r, one.clone()))?;
        for (bl, cl) in pl.terms() {
            for (br, cr) in pr.terms() {
                out.add_term(*bl, *br, c.mul(cl).mul(cr));
            }
        }
    }
    Ok(out)
}

/// Verifies that `x` commutes with every basis element whose degree keeps
/// the product inside the window.
pub fn check_central(h: &BasedWBA, label: &str, x: &Element) -> Result<Report, AlgebraError> {
    let mut report = Report::new(format!("centrality of {label} in {}", h.name()));
    let mut c = CheckBuilder::new("central.commutes");
    let one = Scalar::one(h.field());
    for id in h.basis_ids() {
        let e = Element::from_basis(id, one.clone());
        match (h.mul(x, &e), h.mul(&e, x)) {
            (Ok(xe), Ok(ex)) => c.record(xe == ex, &[id], h.show(&xe), h.show(&ex)),
            _ => c.skip(),
        }
    }
    report.checks.push(c.finish());
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::CycloField;
    use crate::graded::free_matrix_bialgebra;

    #[test]
    fn empty_relation_list_keeps_free_model() {
        let field = CycloField::rationals();
        let free = Arc::new(free_matrix_bialgebra(2, &field, None, 2).unwrap());
        let q = impose_relations(&free, vec![], "same").unwrap();
        assert_eq!(q.wba().dim(2), free.dim(2));
    }

    #[test]
    fn commutative_plane_quotient() {
        // k{x,y} / (yx - xy): degree-d dimension d + 1
        let field = CycloField::rationals();
        let one = Scalar::one(&field);
        let letters = vec![
            super::super::LetterSpec {
                label: "x".to_string(),
                coproduct: vec![(0, 0, one.clone())],
                counit: one.clone(),
            },
            super::super::LetterSpec {
                label: "y".to_string(),
                coproduct: vec![(1, 1, one.clone())],
                counit: one.clone(),
            },
        ];
        let free = Arc::new(
            super::super::free_letter_bialgebra("plane", &field, &letters, 3).unwrap(),
        );
        let yx = free.mul(&free.gen("y").unwrap(), &free.gen("x").unwrap()).unwrap();
        let xy = free.mul(&free.gen("x").unwrap(), &free.gen("y").unwrap()).unwrap();
        let q = impose_relations(&free, vec![yx.sub(&xy)], "plane-quotient").unwrap();
        assert_eq!(q.wba().dim(0), 1);
        assert_eq!(q.wba().dim(1), 2);
        assert_eq!(q.wba().dim(2), 3);
        assert_eq!(q.wba().dim(3), 4);
        // reduce respects products
        let x = free.gen("x").unwrap();
        let y = free.gen("y").unwrap();
        let yx2 = free.mul(&y, &free.mul(&x, &x).unwrap()).unwrap();
        let x2y = free.mul(&free.mul(&x, &x).unwrap(), &y).unwrap();
        assert_eq!(q.reduce(&yx2).unwrap(), q.reduce(&x2y).unwrap());
        // x is central here
        let qx = q.reduce(&x).unwrap();
        assert!(check_central(q.wba(), "x", &qx).unwrap().passed());
    }
}
