//! Free graded bialgebras on a finite set of letters.
//!
//! Words are the monomial basis; the coproduct and counit of a letter are
//! supplied and extended multiplicatively. The matrix bialgebra used for the
//! quantum 2x2 family and the tensor-algebra example are both instances.

use std::sync::Arc;

use crate::exactfield::{CycloField, Scalar};
use crate::wba::{AlgebraError, BasedWBA, BasisId, Element, PairTensor, WbaBuilder};

/// One generator: its label, coproduct as `(left letter, right letter,
/// coefficient)` triples, and counit value.
pub struct LetterSpec {
    pub label: String,
    pub coproduct: Vec<(usize, usize, Scalar)>,
    pub counit: Scalar,
}

/// Word `rank` in base `letters`, most significant letter first.
pub(crate) fn word_of_rank(mut rank: usize, len: usize, letters: usize) -> Vec<usize> {
    let mut w = vec![0; len];
    for slot in (0..len).rev() {
        w[slot] = rank % letters;
        rank /= letters;
    }
    w
}

fn rank_of_word(w: &[usize], letters: usize) -> usize {
    w.iter().fold(0, |acc, &l| acc * letters + l)
}

/// The free bialgebra on the given letters, materialized to `cutoff`.
pub fn free_letter_bialgebra(
    name: impl Into<String>,
    field: &Arc<CycloField>,
    letters: &[LetterSpec],
    cutoff: i32,
) -> Result<BasedWBA, AlgebraError> {
    if letters.is_empty() || cutoff < 0 {
        return Err(AlgebraError::BadStructure(
            "need at least one letter and a nonnegative cutoff".to_string(),
        ));
    }
    let n = letters.len();
    let single_char = letters.iter().all(|l| l.label.chars().count() == 1);
    let word_label = |w: &[usize]| -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        let parts: Vec<&str> = w.iter().map(|&l| letters[l].label.as_str()).collect();
        if single_char {
            parts.concat()
        } else {
            parts.join("*")
        }
    };

    let mut builder = WbaBuilder::new(name, field).window(0, cutoff, true, false);
    for m in 0..=cutoff as usize {
        let count = n.pow(m as u32);
        for rank in 0..count {
            let w = word_of_rank(rank, m, n);
            builder.basis(BasisId::new(m as i32, rank as u32), word_label(&w));
        }
    }
    let one = Scalar::one(field);
    builder.unit(Element::from_basis(BasisId::new(0, 0), one.clone()));

    // products: concatenation of words
    for m1 in 0..=cutoff as usize {
        for m2 in 0..=(cutoff as usize - m1) {
            let c1 = n.pow(m1 as u32);
            let c2 = n.pow(m2 as u32);
            for r1 in 0..c1 {
                for r2 in 0..c2 {
                    let target = BasisId::new((m1 + m2) as i32, (r1 * c2 + r2) as u32);
                    builder.product(
                        BasisId::new(m1 as i32, r1 as u32),
                        BasisId::new(m2 as i32, r2 as u32),
                        Element::from_basis(target, one.clone()),
                    );
                }
            }
        }
    }

    // coproduct and counit: multiplicative extension of the letter tables
    for m in 0..=cutoff as usize {
        let count = n.pow(m as u32);
        for rank in 0..count {
            let w = word_of_rank(rank, m, n);
            let mut t = PairTensor::zero();
            if m == 0 {
                t.add_term(BasisId::new(0, 0), BasisId::new(0, 0), one.clone());
            } else {
                // expand the product of letter coproducts
                let mut partial: Vec<(Vec<usize>, Vec<usize>, Scalar)> =
                    vec![(Vec::new(), Vec::new(), one.clone())];
                for &letter in &w {
                    let mut next = Vec::new();
                    for (lw, rw, c) in &partial {
                        for (ll, rl, lc) in &letters[letter].coproduct {
                            let mut lw2 = lw.clone();
                            lw2.push(*ll);
                            let mut rw2 = rw.clone();
                            rw2.push(*rl);
                            next.push((lw2, rw2, c.mul(lc)));
                        }
                    }
                    partial = next;
                }
                for (lw, rw, c) in partial {
                    t.add_term(
                        BasisId::new(m as i32, rank_of_word(&lw, n) as u32),
                        BasisId::new(m as i32, rank_of_word(&rw, n) as u32),
                        c,
                    );
                }
            }
            builder.coproduct(BasisId::new(m as i32, rank as u32), t);

            let mut eps = one.clone();
            for &letter in &w {
                eps = eps.mul(&letters[letter].counit);
            }
            builder.counit(BasisId::new(m as i32, rank as u32), eps);
        }
    }

    builder.build()
}

/// The free matrix bialgebra on an `n x n` family `t_pq` with
/// `Delta(t_pq) = sum_k t_pk (x) t_kq` and `eps(t_pq) = delta_pq`.
///
/// `labels`, when given, renames the generators row-major (the 2x2 case uses
/// `a, b, c, d`).
pub fn free_matrix_bialgebra(
    n: usize,
    field: &Arc<CycloField>,
    labels: Option<&[&str]>,
    cutoff: i32,
) -> Result<BasedWBA, AlgebraError> {
    if n == 0 {
        return Err(AlgebraError::BadStructure("need n >= 1".to_string()));
    }
    if let Some(ls) = labels {
        if ls.len() != n * n {
            return Err(AlgebraError::BadStructure(format!(
                "expected {} labels, got {}",
                n * n,
                ls.len()
            )));
        }
    }
    let one = Scalar::one(field);
    let zero = Scalar::zero(field);
    let idx = |p: usize, q: usize| p * n + q;
    let letters: Vec<LetterSpec> = (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .map(|(p, q)| LetterSpec {
            label: labels
                .map(|ls| ls[idx(p, q)].to_string())
                .unwrap_or_else(|| format!("t{}{}", p + 1, q + 1)),
            coproduct: (0..n).map(|k| (idx(p, k), idx(k, q), one.clone())).collect(),
            counit: if p == q { one.clone() } else { zero.clone() },
        })
        .collect();
    free_letter_bialgebra(format!("M-free({n})"), field, &letters, cutoff)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::wba::{check_bialgebra, check_wba_axioms, is_group_like, GroupLike};

    #[test]
    fn matrix_bialgebra_coproducts() {
        let field = CycloField::rationals();
        let h = free_matrix_bialgebra(2, &field, Some(&["a", "b", "c", "d"]), 2).unwrap();
        let show = |label: &str| {
            let e = h.gen(label).unwrap();
            h.show_pair(&h.delta(&e).unwrap())
        };
        assert_eq!(show("a"), "a(x)a + b(x)c");
        assert_eq!(show("d"), "c(x)b + d(x)d");
        assert!(check_wba_axioms(&h).unwrap().passed());
        assert!(check_bialgebra(&h).unwrap().passed());
    }

    #[test]
    fn one_letter_case_is_polynomials_with_group_like_t() {
        let field = CycloField::rationals();
        let h = free_matrix_bialgebra(1, &field, None, 3).unwrap();
        assert_eq!(h.dim(2), 1);
        let t = h.gen("t11").unwrap();
        assert_eq!(is_group_like(&h, &t).unwrap(), GroupLike::Both);
    }
}
