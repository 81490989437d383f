//! Sparse exact linear algebra over a cyclotomic field.
//!
//! Vectors are sorted `(column, Scalar)` pairs without explicit zeros.
//! [`RowSpace`] maintains a reduced row echelon form with deterministic
//! pivots (always the smallest column), which makes quotient bases and
//! normal forms reproducible run over run.

use std::sync::Arc;

use crate::exactfield::{CycloField, Scalar};

pub type SparseVec = Vec<(usize, Scalar)>;

/// `dst += c * src`, keeping the sparse representation sorted and zero-free.
pub fn add_scaled(dst: &SparseVec, src: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return dst.clone();
    }
    let mut out = Vec::with_capacity(dst.len() + src.len());
    let mut i = 0;
    let mut j = 0;
    while i < dst.len() || j < src.len() {
        match (dst.get(i), src.get(j)) {
            (Some((ci, vi)), Some((cj, vj))) if ci == cj => {
                let v = vi.add(&vj.mul(c));
                if !v.is_zero() {
                    out.push((*ci, v));
                }
                i += 1;
                j += 1;
            }
            (Some((ci, vi)), Some((cj, _))) if ci < cj => {
                out.push((*ci, vi.clone()));
                i += 1;
            }
            (Some(_), Some((cj, vj))) => {
                let v = vj.mul(c);
                if !v.is_zero() {
                    out.push((*cj, v));
                }
                j += 1;
            }
            (Some((ci, vi)), None) => {
                out.push((*ci, vi.clone()));
                i += 1;
            }
            (None, Some((cj, vj))) => {
                let v = vj.mul(c);
                if !v.is_zero() {
                    out.push((*cj, v));
                }
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    out
}

pub fn scale(v: &SparseVec, c: &Scalar) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, s)| (*i, s.mul(c))).collect()
}

fn coeff_at(v: &SparseVec, col: usize) -> Option<&Scalar> {
    v.binary_search_by_key(&col, |(i, _)| *i)
        .ok()
        .map(|k| &v[k].1)
}

/// A row space in reduced row echelon form over an exact field.
pub struct RowSpace {
    field: Arc<CycloField>,
    rows: Vec<SparseVec>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(field: Arc<CycloField>) -> Self {
        RowSpace {
            field,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Pivot columns in insertion-echelon order (kept sorted ascending).
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    /// Normal form of `v` modulo the row space: eliminates every pivot column.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut cur = v.clone();
        loop {
            let mut changed = false;
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if let Some(c) = coeff_at(&cur, p) {
                    let c = c.neg();
                    cur = add_scaled(&cur, row, &c);
                    changed = true;
                }
            }
            if !changed {
                return cur;
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Inserts `v`; returns true when it enlarges the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let mut v = self.reduce(&v);
        if v.is_empty() {
            return false;
        }
        let (pivot, lead) = v[0].clone();
        let inv = lead.inv().expect("nonzero leading coefficient");
        v = scale(&v, &inv);
        // keep reduced form: clear the new pivot from existing rows
        for row in self.rows.iter_mut() {
            if let Some(c) = coeff_at(row, pivot) {
                let c = c.neg();
                *row = add_scaled(row, &v, &c);
            }
        }
        let at = self.pivots.partition_point(|&p| p < pivot);
        self.pivots.insert(at, pivot);
        self.rows.insert(at, v);
        true
    }

    pub fn extend_from(&mut self, other: &RowSpace) {
        for row in &other.rows {
            self.insert(row.clone());
        }
    }
}

/// Solver for a linear map given by the images of domain basis vectors.
///
/// Supports preimage computation and a kernel basis via the augmented-row
/// trick: each inserted row is `[image | unit vector]` and rows whose image
/// part vanishes record kernel combinations.
pub struct LinSolver {
    target_dim: usize,
    space: RowSpace,
    kernel: Vec<SparseVec>,
}

impl LinSolver {
    pub fn new(field: Arc<CycloField>, target_dim: usize, images: &[SparseVec]) -> Self {
        let mut solver = LinSolver {
            target_dim,
            space: RowSpace::new(field),
            kernel: Vec::new(),
        };
        for (j, img) in images.iter().enumerate() {
            solver.push(j, img);
        }
        solver
    }

    fn push(&mut self, j: usize, image: &SparseVec) {
        let mut row: SparseVec = image.clone();
        row.push((self.target_dim + j, Scalar::one(self.space.field())));
        let reduced = self.space.reduce(&row);
        match reduced.first() {
            None => {}
            Some((lead, _)) if *lead >= self.target_dim => {
                // image part vanished: domain combination in the kernel
                let v: SparseVec = reduced
                    .into_iter()
                    .map(|(c, s)| (c - self.target_dim, s))
                    .collect();
                self.kernel.push(v);
            }
            Some(_) => {
                self.space.insert(reduced);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.space.rank()
    }

    /// Kernel basis vectors in domain coordinates.
    pub fn kernel(&self) -> &[SparseVec] {
        &self.kernel
    }

    /// Domain coefficients `x` with `sum x_j * image_j = rhs`, if any.
    pub fn solve(&self, rhs: &SparseVec) -> Option<SparseVec> {
        let row: SparseVec = rhs.clone();
        let reduced = self.space.reduce(&row);
        match reduced.first() {
            None => Some(Vec::new()),
            Some((lead, _)) if *lead >= self.target_dim => Some(
                reduced
                    .into_iter()
                    .map(|(c, s)| (c - self.target_dim, s.neg()))
                    .collect(),
            ),
            Some(_) => None,
        }
    }

    /// Splits `rhs = (sum x_j * image_j) + c` with `c` the normal form of
    /// `rhs` modulo the image span. Returns `(c, x)`.
    pub fn split(&self, rhs: &SparseVec) -> (SparseVec, SparseVec) {
        let reduced = self.space.reduce(rhs);
        let mut complement = Vec::new();
        let mut coeffs = Vec::new();
        for (col, s) in reduced {
            if col < self.target_dim {
                complement.push((col, s));
            } else {
                coeffs.push((col - self.target_dim, s.neg()));
            }
        }
        (complement, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Scalar;

    fn f() -> Arc<CycloField> {
        CycloField::rationals()
    }

    fn sv(field: &Arc<CycloField>, entries: &[(usize, i64)]) -> SparseVec {
        entries
            .iter()
            .filter(|(_, v)| *v != 0)
            .map(|&(i, v)| (i, Scalar::from_integer(field, v)))
            .collect()
    }

    #[test]
    fn echelon_rank_and_reduce() {
        let field = f();
        let mut rs = RowSpace::new(field.clone());
        assert!(rs.insert(sv(&field, &[(0, 1), (1, 2)])));
        assert!(rs.insert(sv(&field, &[(1, 1), (2, 1)])));
        assert!(!rs.insert(sv(&field, &[(0, 2), (1, 6), (2, 2)])));
        assert_eq!(rs.rank(), 2);
        assert_eq!(rs.pivots(), &[0, 1]);
        // reduced form of (1,0,0) eliminates pivots 0 and 1
        let nf = rs.reduce(&sv(&field, &[(0, 1)]));
        assert_eq!(nf, sv(&field, &[(2, 2)]));
    }

    #[test]
    fn solver_kernel_and_preimage() {
        let field = f();
        // map e0 -> (1,0), e1 -> (0,1), e2 -> (1,1)
        let images = vec![
            sv(&field, &[(0, 1)]),
            sv(&field, &[(1, 1)]),
            sv(&field, &[(0, 1), (1, 1)]),
        ];
        let solver = LinSolver::new(field.clone(), 2, &images);
        assert_eq!(solver.rank(), 2);
        assert_eq!(solver.kernel().len(), 1);
        let k = &solver.kernel()[0];
        // kernel spanned by e0 + e1 - e2 (up to scale)
        let mut acc: SparseVec = Vec::new();
        for (j, c) in k {
            acc = add_scaled(&acc, &images[*j], c);
        }
        assert!(acc.is_empty());

        let x = solver.solve(&sv(&field, &[(0, 3), (1, 5)])).unwrap();
        let mut acc: SparseVec = Vec::new();
        for (j, c) in &x {
            acc = add_scaled(&acc, &images[*j], c);
        }
        assert_eq!(acc, sv(&field, &[(0, 3), (1, 5)]));

        // a non-surjective map leaves unreachable targets
        let thin = LinSolver::new(field.clone(), 2, &[sv(&field, &[(0, 1)])]);
        assert!(thin.solve(&sv(&field, &[(1, 1)])).is_none());
    }
}
