//! The kernel of `phi: H -> H[G^-1]`, computed per degree.
//!
//! By the fraction condition "phi(x) = 0 iff x t = 0 for some t in G", the
//! kernel is the union of right-annihilator kernels over the monoid; being a
//! subspace, it equals their span. The strategy's test set bounds which `t`
//! are tried, so verdicts carry a decisiveness flag: membership in the
//! computed span always implies `phi(x) = 0`, while non-membership is
//! conclusive only when the test set covers the whole value monoid.

use std::collections::BTreeMap;

use crate::linalg::{LinSolver, RowSpace, SparseVec};
use crate::localization::{DenominatorMonoid, LocError};
use crate::wba::{BasedWBA, BasisId, Element};

pub struct KernelData {
    /// per-source-degree echelon of `sum_t ker(R_t)`
    spaces: BTreeMap<i32, RowSpace>,
    /// degrees where every test element could be applied
    complete_degrees: BTreeMap<i32, bool>,
    /// strategy-level decisiveness (complete test set or saturated search)
    decisive: bool,
    /// cumulative kernel dimension per test-set prefix, for the
    /// stabilization report: (tests applied, total kernel dim)
    stabilization: Vec<(usize, usize)>,
}

/// Flattens a homogeneous-component element to sparse coordinates over one
/// degree's basis.
fn component_coords(x: &Element, degree: i32) -> SparseVec {
    x.terms()
        .filter(|(b, _)| b.degree == degree)
        .map(|(b, c)| (b.index as usize, c.clone()))
        .collect()
}

/// Global flat coordinates across the host window, for inhomogeneous images.
pub struct ColumnMap {
    offsets: BTreeMap<i32, usize>,
    total: usize,
}

impl ColumnMap {
    pub fn new(host: &BasedWBA) -> Self {
        let mut offsets = BTreeMap::new();
        let mut total = 0usize;
        for d in host.degrees() {
            offsets.insert(d, total);
            total += host.dim(d) as usize;
        }
        ColumnMap { offsets, total }
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn col(&self, id: &BasisId) -> Option<usize> {
        self.offsets.get(&id.degree).map(|o| o + id.index as usize)
    }

    pub fn flatten(&self, x: &Element) -> Option<SparseVec> {
        let mut v = Vec::with_capacity(x.len());
        for (b, c) in x.terms() {
            v.push((self.col(b)?, c.clone()));
        }
        v.sort_by_key(|(i, _)| *i);
        Some(v)
    }
}

impl KernelData {
    pub fn compute(host: &BasedWBA, monoid: &DenominatorMonoid) -> Result<KernelData, LocError> {
        let (tests, decisive, _) = monoid.test_elements(host)?;
        let cols = ColumnMap::new(host);
        let mut spaces: BTreeMap<i32, RowSpace> = BTreeMap::new();
        let mut complete: BTreeMap<i32, bool> = BTreeMap::new();
        let mut stabilization = Vec::new();
        for d in host.degrees() {
            spaces.insert(d, RowSpace::new(host.field().clone()));
            complete.insert(d, true);
        }
        for (k, t) in tests.iter().enumerate() {
            for d in host.degrees().collect::<Vec<_>>() {
                let basis: Vec<BasisId> = host.basis_of_degree(d).collect();
                let mut images = Vec::with_capacity(basis.len());
                let mut ok = true;
                for b in &basis {
                    let e = Element::from_basis(*b, crate::exactfield::Scalar::one(host.field()));
                    match host.mul(&e, t) {
                        Ok(img) => match cols.flatten(&img) {
                            Some(v) => images.push(v),
                            None => {
                                ok = false;
                                break;
                            }
                        },
                        Err(_) => {
                            ok = false;
                            break;
                        }
                    }
                }
                if !ok {
                    complete.insert(d, false);
                    continue;
                }
                let solver = LinSolver::new(host.field().clone(), cols.total(), &images);
                let space = spaces.get_mut(&d).expect("initialized above");
                for kv in solver.kernel() {
                    space.insert(kv.clone());
                }
            }
            let total: usize = spaces.values().map(|s| s.rank()).sum();
            stabilization.push((k + 1, total));
        }
        Ok(KernelData {
            spaces,
            complete_degrees: complete,
            decisive,
            stabilization,
        })
    }

    pub fn decisive(&self) -> bool {
        self.decisive
    }

    pub fn stabilization(&self) -> &[(usize, usize)] {
        &self.stabilization
    }

    pub fn kernel_dim(&self, degree: i32) -> usize {
        self.spaces.get(&degree).map(|s| s.rank()).unwrap_or(0)
    }

    pub fn total_kernel_dim(&self) -> usize {
        self.spaces.values().map(|s| s.rank()).sum()
    }

    /// Kernel basis vectors of one degree, as elements.
    pub fn kernel_basis(&self, degree: i32) -> Vec<Element> {
        let mut out = Vec::new();
        if let Some(space) = self.spaces.get(&degree) {
            for row in space.rows() {
                let mut e = Element::zero();
                for (col, c) in row {
                    e.add_term(BasisId::new(degree, *col as u32), c.clone());
                }
                out.push(e);
            }
        }
        out
    }

    /// Normal form of `x` modulo the computed kernel.
    pub fn reduce(&self, x: &Element) -> Element {
        let mut out = Element::zero();
        for d in x.degrees() {
            let comp = x.component(d);
            match self.spaces.get(&d) {
                Some(space) => {
                    let v = component_coords(&comp, d);
                    for (col, c) in space.reduce(&v) {
                        out.add_term(BasisId::new(d, col as u32), c);
                    }
                }
                None => {
                    for (b, c) in comp.terms() {
                        out.add_term(*b, c.clone());
                    }
                }
            }
        }
        out
    }

    /// True when the computed span provably equals the kernel at every
    /// degree in `x`'s support.
    pub fn conclusive_for(&self, x: &Element) -> bool {
        self.decisive
            && x.degrees()
                .iter()
                .all(|d| *self.complete_degrees.get(d).unwrap_or(&false))
    }
}
