//! The graph WBA `H[G]`: basis `[p|q]_m` on pairs of equal-length paths.
//!
//! As an algebra this is the path algebra of the product quiver; as a
//! coalgebra it is a direct sum of matrix coalgebras, one per path length.

use std::sync::Arc;

use crate::exactfield::{CycloField, Scalar};
use crate::graded::{enumerate_paths, DirectedGraph};
use crate::wba::{AlgebraError, BasedWBA, BasisId, Element, PairTensor, WbaBuilder};

pub struct GraphWba {
    pub graph: DirectedGraph,
    wba: Arc<BasedWBA>,
    /// paths of each length `0..=cutoff`, lexicographically ordered
    paths: Vec<Vec<Vec<usize>>>,
}

impl GraphWba {
    pub fn wba(&self) -> &Arc<BasedWBA> {
        &self.wba
    }

    pub fn paths(&self, degree: usize) -> &[Vec<usize>] {
        &self.paths[degree]
    }

    fn path_rank(&self, degree: usize, p: &[usize]) -> Option<usize> {
        self.paths[degree].binary_search_by(|q| q.as_slice().cmp(p)).ok()
    }

    /// The basis id of `[p|q]` (paths given as vertex sequences).
    pub fn pair_id(&self, p: &[usize], q: &[usize]) -> Result<BasisId, AlgebraError> {
        if p.len() != q.len() || p.is_empty() {
            return Err(AlgebraError::BadStructure(
                "path pair must have equal positive vertex counts".to_string(),
            ));
        }
        let m = p.len() - 1;
        let count = self.paths[m].len();
        let rp = self
            .path_rank(m, p)
            .ok_or_else(|| AlgebraError::BadStructure(format!("not a path: {p:?}")))?;
        let rq = self
            .path_rank(m, q)
            .ok_or_else(|| AlgebraError::BadStructure(format!("not a path: {q:?}")))?;
        Ok(BasisId::new(m as i32, (rp * count + rq) as u32))
    }

    /// The basis element `[p|q]` with coefficient 1.
    pub fn pair(&self, p: &[usize], q: &[usize]) -> Result<Element, AlgebraError> {
        Ok(Element::from_basis(
            self.pair_id(p, q)?,
            Scalar::one(self.wba.field()),
        ))
    }
}

fn path_label(p: &[usize]) -> String {
    if p.iter().all(|&v| v <= 9) {
        p.iter().map(|v| v.to_string()).collect()
    } else {
        p.iter()
            .map(|v| v.to_string())
            .collect::<Vec<_>>()
            .join(".")
    }
}

/// Materializes `H[G]` up to path length `cutoff`.
pub fn build_graph_wba(
    graph: &DirectedGraph,
    field: &Arc<CycloField>,
    cutoff: i32,
) -> Result<GraphWba, AlgebraError> {
    if cutoff < 0 {
        return Err(AlgebraError::BadStructure("cutoff must be >= 0".to_string()));
    }
    let name = format!("H[graph v{} e{}]", graph.vertices, graph.edges.len());
    let mut builder = WbaBuilder::new(name, field).window(0, cutoff, true, false);
    let one = Scalar::one(field);

    let paths: Vec<Vec<Vec<usize>>> = (0..=cutoff as usize)
        .map(|m| enumerate_paths(graph, m))
        .collect();

    for (m, pm) in paths.iter().enumerate() {
        let count = pm.len();
        for (rp, p) in pm.iter().enumerate() {
            for (rq, q) in pm.iter().enumerate() {
                let id = BasisId::new(m as i32, (rp * count + rq) as u32);
                builder.basis(id, format!("[{}|{}]", path_label(p), path_label(q)));
            }
        }
    }

    let rank = |m: usize, p: &[usize]| paths[m].binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    let id_of = |m: usize, p: &[usize], q: &[usize]| {
        let count = paths[m].len();
        BasisId::new(m as i32, (rank(m, p) * count + rank(m, q)) as u32)
    };

    // unit = sum over all vertex pairs in degree 0
    let mut unit = Element::zero();
    for j in 0..graph.vertices {
        for l in 0..graph.vertices {
            unit.add_term(id_of(0, &[j], &[l]), one.clone());
        }
    }
    builder.unit(unit);

    for (m, pm) in paths.iter().enumerate() {
        for p in pm {
            for q in pm {
                let a = id_of(m, p, q);

                // coproduct: sum over middle paths of the same length
                let mut t = PairTensor::zero();
                for r in pm {
                    t.add_term(id_of(m, p, r), id_of(m, r, q), one.clone());
                }
                builder.coproduct(a, t);

                if p == q {
                    builder.counit(a, one.clone());
                }

                // products with every shorter-or-equal partner
                for (l, pl) in paths.iter().enumerate() {
                    if m + l > cutoff as usize {
                        continue;
                    }
                    for r in pl {
                        for s in pl {
                            // source(p) = last vertex, target(r) = first vertex
                            if p.last() != r.first() || q.last() != s.first() {
                                continue;
                            }
                            let b = id_of(l, r, s);
                            let mut pr = p.clone();
                            pr.extend_from_slice(&r[1..]);
                            let mut qs = q.clone();
                            qs.extend_from_slice(&s[1..]);
                            let c = id_of(m + l, &pr, &qs);
                            builder.product(a, b, Element::from_basis(c, one.clone()));
                        }
                    }
                }
            }
        }
    }

    let wba = Arc::new(builder.build()?);
    Ok(GraphWba {
        graph: graph.clone(),
        wba,
        paths,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wba::{check_bialgebra, check_wba_axioms};

    #[test]
    fn graph_wba_dimensions_and_counit() {
        let g = DirectedGraph::level_graph(3).unwrap();
        let field = CycloField::rationals();
        let h = build_graph_wba(&g, &field, 2).unwrap();
        // dim of degree m is |paths_m|^2
        assert_eq!(h.wba().dim(0), 4);
        assert_eq!(h.wba().dim(1), 4);
        assert_eq!(h.wba().dim(2), 4);
        let e = h.pair(&[0, 1, 0], &[1, 0, 1]).unwrap();
        assert!(h.wba().counit(&e).is_zero());
        let d = h.pair(&[0, 1, 0], &[0, 1, 0]).unwrap();
        assert!(h.wba().counit(&d).is_one());
    }

    #[test]
    fn graph_wba_axioms_pass_and_not_bialgebra() {
        let field = CycloField::rationals();
        for r in [3usize, 4] {
            let g = DirectedGraph::level_graph(r).unwrap();
            let h = build_graph_wba(&g, &field, 2).unwrap();
            let report = check_wba_axioms(h.wba()).unwrap();
            assert!(report.passed(), "r = {r}:\n{report}");
            // a graph WBA on >= 2 vertices is not a bialgebra
            assert!(!check_bialgebra(h.wba()).unwrap().passed());
        }
    }

    #[test]
    fn counital_target_on_vertex_pair() {
        let g = DirectedGraph::level_graph(3).unwrap();
        let field = CycloField::rationals();
        let h = build_graph_wba(&g, &field, 2).unwrap();
        let x = h.pair(&[0], &[0]).unwrap();
        let got = h.wba().counital_target(&x).unwrap();
        let mut expect = Element::zero();
        for l in 0..2 {
            expect.add_term(
                h.pair_id(&[0], &[l]).unwrap(),
                Scalar::one(h.wba().field()),
            );
        }
        assert_eq!(got, expect);
    }

    #[test]
    fn degree_overflow_is_loud() {
        let g = DirectedGraph::level_graph(3).unwrap();
        let field = CycloField::rationals();
        let h = build_graph_wba(&g, &field, 2).unwrap();
        let a = h.pair(&[0, 1], &[0, 1]).unwrap();
        let b = h.pair(&[1, 0], &[1, 0]).unwrap();
        let ab = h.wba().mul(&a, &b).unwrap();
        assert!(!ab.is_zero());
        assert!(h.wba().mul(&ab, &a).is_err());
    }
}
