//! RTT relation data for the level-`r` line graph and the quantum
//! determinant.
//!
//! Conventions: the ambient field is `Q(zeta_{8r})` with `q = zeta^4`,
//! `q^{1/2} = zeta^2` (one of the two consistent choices; the quotient is
//! insensitive to global rescaling of the coefficient table, which is itself
//! tested) and `sqrt(2) = zeta^r + zeta^{-r}`.

use std::sync::Arc;

use crate::exactfield::{quantum_integer, sqrt_two, CycloField, FieldError, Scalar};
use crate::graded::GraphWba;
use crate::wba::{AlgebraError, Element};

fn field_err(e: FieldError) -> AlgebraError {
    AlgebraError::BadStructure(e.to_string())
}

/// `q = zeta_{8r}^4`, a primitive 2r-th root of unity.
pub fn level_q(field: &Arc<CycloField>) -> Scalar {
    Scalar::zeta_pow(field, 4)
}

/// Checks the triple is a length-2 walk `(j0, j1, j2)` on the level graph.
fn valid_triple(r: usize, t: &[usize; 3]) -> bool {
    let top = r - 2;
    t.iter().all(|&v| v <= top)
        && t[0].abs_diff(t[1]) == 1
        && t[1].abs_diff(t[2]) == 1
}

/// The RTT coefficient `R_{j;l}` for two length-2 paths on the level-`r`
/// graph. Zero for every index pair outside the four listed families.
pub fn rtt_coefficient(
    field: &Arc<CycloField>,
    r: usize,
    j: &[usize; 3],
    l: &[usize; 3],
) -> Result<Scalar, AlgebraError> {
    if field.conductor() != 8 * r as u64 {
        return Err(AlgebraError::BadStructure(format!(
            "level {r} expects conductor {}, got {}",
            8 * r,
            field.conductor()
        )));
    }
    if !valid_triple(r, j) || !valid_triple(r, l) {
        return Err(AlgebraError::BadStructure(format!(
            "not length-2 paths at level {r}: {j:?}, {l:?}"
        )));
    }
    let q = level_q(field);
    let qint = |n: i64| quantum_integer(n, &q).map_err(field_err);
    let q_inv_half = Scalar::zeta_pow(field, -2);
    let zero = Scalar::zero(field);

    // the families all have matching endpoints
    if j[0] != l[0] || j[2] != l[2] {
        return Ok(zero);
    }
    let base = j[0] as i64;

    if j == l && j[0] == j[2] {
        // diagonal hook terms: -q^{-1/2} q^{-(j+1)}/[[j+1]] on the upper
        // hook, +q^{-1/2} q^{+(j+1)}/[[j+1]] on the lower one. This exponent
        // pairing is the one under which the quantum determinant below is
        // central and group-like for every level (verified for r = 3, 4, 5).
        let up = j[1] == j[0] + 1;
        let exp = if up { -(base + 1) } else { base + 1 };
        let v = q_inv_half
            .mul(&q.pow(exp).map_err(field_err)?)
            .div(&qint(base + 1)?)
            .map_err(field_err)?;
        return Ok(if up { v.neg() } else { v });
    }
    if j[0] == j[2] && j[1] + 1 == j[0] && l[1] == l[0] + 1 {
        // (j, j-1, j); (j, j+1, j)
        let v = q_inv_half
            .mul(&qint(base)?)
            .mul(&qint(base + 2)?)
            .div(&qint(base + 1)?.mul(&qint(base + 1)?))
            .map_err(field_err)?;
        return Ok(v);
    }
    if j[0] == j[2] && j[1] == j[0] + 1 && l[1] + 1 == l[0] {
        // (j, j+1, j); (j, j-1, j)
        return Ok(q_inv_half);
    }
    if j == l && j[0] != j[2] {
        // straight-through terms: q^{-3/2}
        return Ok(Scalar::zeta_pow(field, -6));
    }
    Ok(zero)
}

/// The degree-2 relation elements generating the RTT ideal inside `H[G]`:
/// for each pair of length-2 paths `(J, L)`,
/// `sum_i [J|i] R_{i;L} - sum_i R_{J;i} [i|L]`, with zero rows dropped.
pub fn rtt_relations(
    graph: &GraphWba,
    field: &Arc<CycloField>,
    r: usize,
) -> Result<Vec<Element>, AlgebraError> {
    let paths2: Vec<[usize; 3]> = graph
        .paths(2)
        .iter()
        .map(|p| [p[0], p[1], p[2]])
        .collect();
    let mut rels = Vec::new();
    for j in &paths2 {
        for l in &paths2 {
            let mut rel = Element::zero();
            for i in &paths2 {
                let right = rtt_coefficient(field, r, i, l)?;
                if !right.is_zero() {
                    rel.add_term(graph.pair_id(j, i)?, right);
                }
                let left = rtt_coefficient(field, r, j, i)?;
                if !left.is_zero() {
                    rel.add_term(graph.pair_id(i, l)?, left.neg());
                }
            }
            if !rel.is_zero() {
                rels.push(rel);
            }
        }
    }
    Ok(rels)
}

/// The weight `alpha_j`: 1 at the ends of the level graph, `1/sqrt(2)`
/// in between, realized inside `Q(zeta_{8r})`.
fn alpha(field: &Arc<CycloField>, r: usize, j: usize) -> Result<Scalar, AlgebraError> {
    if j == 0 || j == r - 2 {
        Ok(Scalar::one(field))
    } else {
        // 1/sqrt(2) = sqrt(2)/2
        let s = sqrt_two(field).map_err(field_err)?;
        s.div(&Scalar::from_integer(field, 2)).map_err(field_err)
    }
}

/// The quantum determinant of the level-`r` graph quotient, as a degree-2
/// element of the free graph WBA. Terms whose hook paths would leave the
/// vertex range are omitted.
pub fn quantum_determinant(
    graph: &GraphWba,
    field: &Arc<CycloField>,
    r: usize,
) -> Result<Element, AlgebraError> {
    if r < 3 {
        return Err(AlgebraError::BadStructure("need r >= 3".to_string()));
    }
    let q = level_q(field);
    let qint = |n: i64| quantum_integer(n, &q).map_err(field_err);
    let up = |j: usize| -> Option<[usize; 3]> {
        if j + 1 <= r - 2 {
            Some([j, j + 1, j])
        } else {
            None
        }
    };
    let down = |j: usize| -> Option<[usize; 3]> {
        if j >= 1 {
            Some([j, j - 1, j])
        } else {
            None
        }
    };

    let mut det = Element::zero();
    for j in 0..=(r - 2) {
        for l in 0..=(r - 2) {
            let w = alpha(field, r, j)?.mul(&alpha(field, r, l)?);
            let jj = j as i64;
            let ll = l as i64;
            if let (Some(pj), Some(pl)) = (up(j), up(l)) {
                let c = w.mul(&qint(ll + 1)?.div(&qint(jj + 1)?).map_err(field_err)?);
                det.add_term(graph.pair_id(&pj, &pl)?, c);
            }
            if let (Some(pj), Some(pl)) = (down(j), down(l)) {
                let c = w.mul(&qint(ll)?.div(&qint(jj)?).map_err(field_err)?);
                det.add_term(graph.pair_id(&pj, &pl)?, c);
            }
            if let (Some(pj), Some(pl)) = (down(j), up(l)) {
                let c = w.mul(&qint(ll + 1)?.div(&qint(jj)?).map_err(field_err)?);
                det.add_term(graph.pair_id(&pj, &pl)?, c.neg());
            }
            if let (Some(pj), Some(pl)) = (up(j), down(l)) {
                let c = w.mul(&qint(ll)?.div(&qint(jj + 1)?).map_err(field_err)?);
                det.add_term(graph.pair_id(&pj, &pl)?, c.neg());
            }
        }
    }
    Ok(det)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::{build_graph_wba, DirectedGraph};

    #[test]
    fn coefficient_families() {
        let r = 3usize;
        let field = CycloField::new(8 * r as u64).unwrap();
        // straight-through: q^{-3/2} would need r >= 4 for (0,1,2); check at r=4
        let r4 = 4usize;
        let f4 = CycloField::new(32).unwrap();
        let v = rtt_coefficient(&f4, r4, &[0, 1, 2], &[0, 1, 2]).unwrap();
        assert_eq!(v, Scalar::zeta_pow(&f4, -6));
        // (j, j+1, j); (j, j-1, j) -> q^{-1/2}
        let v = rtt_coefficient(&f4, r4, &[1, 2, 1], &[1, 0, 1]).unwrap();
        assert_eq!(v, Scalar::zeta_pow(&f4, -2));
        // mismatched outer vertices vanish
        let v = rtt_coefficient(&field, r, &[0, 1, 0], &[1, 0, 1]).unwrap();
        assert!(v.is_zero());
        // invalid paths are rejected
        assert!(rtt_coefficient(&field, r, &[0, 2, 0], &[0, 1, 0]).is_err());
    }

    #[test]
    fn determinant_r3_is_the_four_term_expansion() {
        let r = 3usize;
        let field = CycloField::new(24).unwrap();
        let g = DirectedGraph::level_graph(r).unwrap();
        let h = build_graph_wba(&g, &field, 2).unwrap();
        let det = quantum_determinant(&h, &field, r).unwrap();
        let one = Scalar::one(&field);
        let mut expect = Element::zero();
        expect.add_term(h.pair_id(&[0, 1, 0], &[0, 1, 0]).unwrap(), one.clone());
        expect.add_term(h.pair_id(&[0, 1, 0], &[1, 0, 1]).unwrap(), one.neg());
        expect.add_term(h.pair_id(&[1, 0, 1], &[0, 1, 0]).unwrap(), one.neg());
        expect.add_term(h.pair_id(&[1, 0, 1], &[1, 0, 1]).unwrap(), one.clone());
        assert_eq!(det, expect);
    }

    #[test]
    fn determinant_r4_middle_weight() {
        // the [(1,2,1)|(1,2,1)] term carries alpha_1^2 [[2]]/[[2]] = 1/2
        let r = 4usize;
        let field = CycloField::new(32).unwrap();
        let g = DirectedGraph::level_graph(r).unwrap();
        let h = build_graph_wba(&g, &field, 2).unwrap();
        let det = quantum_determinant(&h, &field, r).unwrap();
        let id = h.pair_id(&[1, 2, 1], &[1, 2, 1]).unwrap();
        assert_eq!(det.coeff(&id).unwrap(), &Scalar::ratio(&field, 1, 2));
    }
}
