//! Constructors for the worked examples, wired to the checkers.
//!
//! Each named example is a one-call reproducible object over an exact
//! cyclotomic field: the 4-dimensional bialgebra `W` with its r-form, the
//! mod-4 monoid algebra `H4`, the quantum 2x2 families `Mq2` / `MhatQ2`
//! with their determinants, the truncated tensor-algebra bialgebra, and the
//! tensor combinations with their denominator monoids.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coquasi::{ConjugationAction, RForm};
use crate::exactfield::{CycloField, Scalar};
use crate::graded::{
    build_graph_wba, free_matrix_bialgebra, impose_relations, quantum_determinant, rtt_relations,
    word_of_rank, DirectedGraph, GradedQuotient, GraphWba,
};
use crate::localization::{AnnihilatorStrategy, DenominatorMonoid, LocError};
use crate::wba::{
    tensor_wba, AlgebraError, BasedWBA, BasisId, Element, LinearMap, PairTensor, TensorWba,
    WbaBuilder,
};

/// Tunable parameters shared by the constructors and the CLI.
#[derive(Debug, Clone)]
pub struct Params {
    /// level of the root-of-unity family (conductor 8r)
    pub r: usize,
    /// Sweedler r-form parameter, as a rational
    pub alpha: i64,
    /// materialization cutoff for graded hosts
    pub cutoff: i32,
    /// X-power bound for Laurent models
    pub x_bound: usize,
    /// word-length bound for monoid membership searches
    pub word_bound: usize,
}

impl Default for Params {
    fn default() -> Self {
        Params {
            r: 3,
            alpha: 1,
            cutoff: 3,
            x_bound: 2,
            word_bound: 8,
        }
    }
}

/// The 4-dimensional bialgebra on `{1, f, y, fy}` with relations
/// `f^2 = 1`, `y^2 = 0`, `yf = -fy`, together with its universal r-form
/// (`r(f,f) = -1`, `r(y,y) = alpha`, `rbar = r` on generators).
pub fn sweedler(
    field: &Arc<CycloField>,
    alpha: Scalar,
) -> Result<(BasedWBA, RForm), AlgebraError> {
    if alpha.is_zero() {
        return Err(AlgebraError::BadStructure(
            "alpha must be nonzero".to_string(),
        ));
    }
    let one = Scalar::one(field);
    let ids: Vec<BasisId> = (0..4).map(|i| BasisId::new(0, i)).collect();
    let (e1, ef, ey, efy) = (ids[0], ids[1], ids[2], ids[3]);
    let mut b = WbaBuilder::new("W", field);
    b.basis(e1, "1");
    b.basis(ef, "f");
    b.basis(ey, "y");
    b.basis(efy, "fy");
    b.unit(Element::from_basis(e1, one.clone()));

    let elem = |id: BasisId| Element::from_basis(id, one.clone());
    // products of the non-unit part: f^2 = 1, y^2 = 0, yf = -fy
    for &x in &ids {
        b.product(e1, x, elem(x));
        b.product(x, e1, elem(x));
    }
    b.product(ef, ef, elem(e1));
    b.product(ef, ey, elem(efy));
    b.product(ef, efy, elem(ey));
    b.product(ey, ef, elem(efy).neg());
    b.product(ey, ey, Element::zero());
    b.product(ey, efy, Element::zero());
    b.product(efy, ef, elem(ey).neg());
    b.product(efy, ey, Element::zero());
    b.product(efy, efy, Element::zero());

    let mut d1 = PairTensor::zero();
    d1.add_term(e1, e1, one.clone());
    b.coproduct(e1, d1);
    let mut df = PairTensor::zero();
    df.add_term(ef, ef, one.clone());
    b.coproduct(ef, df);
    let mut dy = PairTensor::zero();
    dy.add_term(ey, e1, one.clone());
    dy.add_term(ef, ey, one.clone());
    b.coproduct(ey, dy);
    let mut dfy = PairTensor::zero();
    dfy.add_term(efy, ef, one.clone());
    dfy.add_term(e1, efy, one.clone());
    b.coproduct(efy, dfy);

    b.counit(e1, one.clone());
    b.counit(ef, one.clone());
    let w = b.build()?;

    let words: BTreeMap<BasisId, Vec<BasisId>> = [
        (e1, vec![]),
        (ef, vec![ef]),
        (ey, vec![ey]),
        (efy, vec![ef, ey]),
    ]
    .into_iter()
    .collect();
    let mut gen_r = BTreeMap::new();
    gen_r.insert((ef, ef), one.neg());
    gen_r.insert((ey, ey), alpha);
    let gen_rbar = gen_r.clone();
    let rform = RForm::from_generators(&w, &words, &gen_r, &gen_rbar)?;
    Ok((w, rform))
}

/// [`sweedler`] over the rationals with an integer alpha.
pub fn sweedler_rational(alpha: i64) -> (BasedWBA, RForm) {
    let field = CycloField::rationals();
    sweedler(&field, Scalar::from_integer(&field, alpha)).expect("rational Sweedler data is valid")
}

/// The monoid `{1, f}` with the conjugation action derived from the r-form.
pub fn sweedler_monoid(w: &BasedWBA, rform: &RForm) -> Result<DenominatorMonoid, LocError> {
    let f = w.gen("f")?;
    let one = w.gen("1")?;
    let action = ConjugationAction::from_rform(w, rform, std::slice::from_ref(&f))?;
    DenominatorMonoid::new(
        vec![("f".to_string(), f)],
        action,
        AnnihilatorStrategy::FiniteTestSet(vec![one, w.gen("f")?]),
    )
}

/// The monoid algebra of `(Z/4Z, *)`: commutative, with `Delta(x) = x (x) x`
/// and `eps(x) = 1` on the monoid basis `0bar..3bar`; the unit is `1bar`.
pub fn h4(field: &Arc<CycloField>) -> Result<BasedWBA, AlgebraError> {
    let one = Scalar::one(field);
    let ids: Vec<BasisId> = (0..4).map(|i| BasisId::new(0, i)).collect();
    let mut b = WbaBuilder::new("H4", field);
    for (i, id) in ids.iter().enumerate() {
        b.basis(*id, format!("{i}bar"));
    }
    b.unit(Element::from_basis(ids[1], one.clone()));
    for i in 0..4usize {
        for j in 0..4usize {
            b.product(
                ids[i],
                ids[j],
                Element::from_basis(ids[(i * j) % 4], one.clone()),
            );
        }
        let mut d = PairTensor::zero();
        d.add_term(ids[i], ids[i], one.clone());
        b.coproduct(ids[i], d);
        b.counit(ids[i], one.clone());
    }
    b.build()
}

pub fn h4_rational() -> BasedWBA {
    h4(&CycloField::rationals()).expect("H4 data is valid")
}

/// The commutative-case r-form `r(x (x) y) = eps(xy)` on `H4` (identically
/// 1 on the monoid basis), with `rbar = r`.
pub fn h4_rform(h: &BasedWBA) -> Result<RForm, AlgebraError> {
    let one = Scalar::one(h.field());
    let mut table = BTreeMap::new();
    for a in h.basis_ids() {
        for b in h.basis_ids() {
            table.insert((a, b), one.clone());
        }
    }
    Ok(RForm::from_tables(h, table.clone(), table))
}

/// The denominators `{0bar, 1bar}` of `H4`, central with the complete
/// two-element test set.
pub fn h4_monoid(h: &BasedWBA) -> Result<DenominatorMonoid, LocError> {
    DenominatorMonoid::central(
        h,
        vec![
            ("0bar".to_string(), h.gen("0bar")?),
            ("1bar".to_string(), h.gen("1bar")?),
        ],
        AnnihilatorStrategy::FiniteTestSet(vec![h.gen("1bar")?, h.gen("0bar")?]),
    )
}

/// The quantum 2x2 matrix bialgebra at `q = zeta_{8r}^4`.
pub struct Mq2 {
    pub field: Arc<CycloField>,
    pub q: Scalar,
    pub quotient: GradedQuotient,
    pub rform: RForm,
    /// `det = da - q bc` in quotient coordinates (degree 2)
    pub det: Element,
}

impl Mq2 {
    pub fn wba(&self) -> &Arc<BasedWBA> {
        self.quotient.wba()
    }

    /// The monoid generated by the central `det`, declared regular.
    pub fn det_monoid(&self) -> Result<DenominatorMonoid, LocError> {
        DenominatorMonoid::central(
            self.wba(),
            vec![("detq".to_string(), self.det.clone())],
            AnnihilatorStrategy::DeclaredRegular,
        )
    }
}

/// Builds `Mq2` to the given cutoff: the free matrix bialgebra on
/// `a, b, c, d` modulo the six quadratic relations, the degree-1 r-form
/// extended recursively, and the quantum determinant.
pub fn mq2(r: usize, cutoff: i32) -> Result<Mq2, LocError> {
    if r < 3 {
        return Err(LocError::Algebra(AlgebraError::BadStructure(
            "need r >= 3 so that q^2 != 1, -1".to_string(),
        )));
    }
    let field = CycloField::new(8 * r as u64)
        .map_err(|e| LocError::Algebra(AlgebraError::BadStructure(e.to_string())))?;
    let q = Scalar::zeta_pow(&field, 4);
    let q_inv = q.inv().expect("root of unity");
    let free = Arc::new(free_matrix_bialgebra(
        2,
        &field,
        Some(&["a", "b", "c", "d"]),
        cutoff,
    )?);
    let g = |l: &str| free.gen(l).expect("generator label");
    let (a, b, c, d) = (g("a"), g("b"), g("c"), g("d"));
    let m = |x: &Element, y: &Element| free.mul(x, y).expect("degree 2 products fit");
    // ba = q ab, ca = q ac, db = q bd, dc = q cd, bc = cb,
    // ad - da = (q^-1 - q) bc
    let relations = vec![
        m(&b, &a).sub(&m(&a, &b).scale(&q)),
        m(&c, &a).sub(&m(&a, &c).scale(&q)),
        m(&d, &b).sub(&m(&b, &d).scale(&q)),
        m(&d, &c).sub(&m(&c, &d).scale(&q)),
        m(&b, &c).sub(&m(&c, &b)),
        m(&a, &d)
            .sub(&m(&d, &a))
            .sub(&m(&b, &c).scale(&q_inv.sub(&q))),
    ];
    let quotient = impose_relations(&free, relations, format!("Mq2(r={r})"))?;

    // r-form on generators: r(a,a) = r(d,d) = q, r(a,d) = r(d,a) = 1,
    // r(c,b) = q - q^-1; rbar swaps q and q^-1
    let qb = quotient.wba().clone();
    let words = monomial_words(&qb, &quotient, 4)?;
    let gen = |l: &str| -> Result<BasisId, LocError> { Ok(qb.by_label(l)?) };
    let (ia, ib, ic, id) = (gen("a")?, gen("b")?, gen("c")?, gen("d")?);
    let mut gen_r = BTreeMap::new();
    let mut gen_rbar = BTreeMap::new();
    for (x, y, v, vb) in [
        (ia, ia, q.clone(), q_inv.clone()),
        (id, id, q.clone(), q_inv.clone()),
        (ia, id, Scalar::one(&field), Scalar::one(&field)),
        (id, ia, Scalar::one(&field), Scalar::one(&field)),
        (ic, ib, q.sub(&q_inv), q_inv.sub(&q)),
    ] {
        gen_r.insert((x, y), v);
        gen_rbar.insert((x, y), vb);
    }
    let rform = RForm::from_generators(&qb, &words, &gen_r, &gen_rbar)?;

    let det_free = m(&d, &a).sub(&m(&b, &c).scale(&q));
    let det = quotient.reduce(&det_free)?;
    Ok(Mq2 {
        field,
        q,
        quotient,
        rform,
        det,
    })
}

/// Generator words for the surviving monomials of a quotient of a free
/// letter algebra: the letters of each representative monomial, filtered
/// through the degree-1 quotient basis.
fn monomial_words(
    qb: &Arc<BasedWBA>,
    quotient: &GradedQuotient,
    letters: usize,
) -> Result<BTreeMap<BasisId, Vec<BasisId>>, LocError> {
    let mut words = BTreeMap::new();
    for id in qb.basis_ids() {
        let rep = quotient.lift(&Element::from_basis(id, Scalar::one(qb.field())))?;
        let rep_id = rep.support().next().expect("monomial representative");
        let w = word_of_rank(
            rep_id.index as usize,
            rep_id.degree as usize,
            letters,
        );
        words.insert(id, w.into_iter().map(|l| BasisId::new(1, l as u32)).collect());
    }
    Ok(words)
}

/// The graph WBA family at level `r`: `H[G]` modulo the RTT relations,
/// with its quantum determinant.
pub struct MhatQ2 {
    pub field: Arc<CycloField>,
    pub graph: GraphWba,
    pub quotient: GradedQuotient,
    /// determinant in quotient coordinates (degree 2)
    pub det: Element,
    /// the same element in the free graph WBA
    pub det_free: Element,
}

impl MhatQ2 {
    pub fn wba(&self) -> &Arc<BasedWBA> {
        self.quotient.wba()
    }

    /// The monoid generated by the central `det`, declared regular (the
    /// declaration is spot-checked degree by degree at construction of any
    /// localization).
    pub fn det_monoid(&self) -> Result<DenominatorMonoid, LocError> {
        DenominatorMonoid::central(
            self.wba(),
            vec![("detq".to_string(), self.det.clone())],
            AnnihilatorStrategy::DeclaredRegular,
        )
    }
}

pub fn mhatq2(r: usize, cutoff: i32) -> Result<MhatQ2, LocError> {
    let field = CycloField::new(8 * r as u64)
        .map_err(|e| LocError::Algebra(AlgebraError::BadStructure(e.to_string())))?;
    let graph_shape = DirectedGraph::level_graph(r)?;
    let graph = build_graph_wba(&graph_shape, &field, cutoff)?;
    let relations = rtt_relations(&graph, &field, r)?;
    let quotient = impose_relations(graph.wba(), relations, format!("MhatQ2(r={r})"))?;
    let det_free = quantum_determinant(&graph, &field, r)?;
    let det = quotient.reduce(&det_free)?;
    Ok(MhatQ2 {
        field,
        graph,
        quotient,
        det,
        det_free,
    })
}

/// The truncated tensor-algebra bialgebra on the coalgebra dual to the
/// complex numbers viewed over the reals: letters `v` (the coalgebra's
/// distinguished vector) and `i`, with `Delta(v) = v(x)v - i(x)i`,
/// `Delta(i) = v(x)i + i(x)v`.
pub fn radford_tensor(field: &Arc<CycloField>, cutoff: i32) -> Result<BasedWBA, AlgebraError> {
    let one = Scalar::one(field);
    let letters = vec![
        crate::graded::LetterSpec {
            label: "v".to_string(),
            coproduct: vec![(0, 0, one.clone()), (1, 1, one.neg())],
            counit: one.clone(),
        },
        crate::graded::LetterSpec {
            label: "i".to_string(),
            coproduct: vec![(0, 1, one.clone()), (1, 0, one.clone())],
            counit: Scalar::zero(field),
        },
    ];
    let h = crate::graded::free_letter_bialgebra("T(V)", field, &letters, cutoff)?;
    Ok(h.with_name("T(V)"))
}

/// A tensor host together with the paper-specified denominator monoid.
pub struct CombinedExample {
    pub tensor: TensorWba,
    pub monoid: DenominatorMonoid,
}

impl CombinedExample {
    pub fn wba(&self) -> &Arc<BasedWBA> {
        self.tensor.wba()
    }
}

/// `W (x) H4` with denominators `f (x) 1bar` (conjugation from the W
/// r-form) and `1 (x) 0bar` (central).
pub fn w_tensor_h4(field: &Arc<CycloField>, alpha: Scalar) -> Result<CombinedExample, LocError> {
    let (w, rform) = sweedler(field, alpha)?;
    let h = h4(field)?;
    let tensor = tensor_wba(&w, &h)?;
    let f = w.gen("f")?;
    let f_action = ConjugationAction::from_rform(&w, &rform, std::slice::from_ref(&f))?;
    let id_w = LinearMap::identity_on(&w);
    let id_h = LinearMap::identity_on(&h);
    let f1 = tensor.embed(&f, h.unit())?;
    let zero1 = tensor.embed(w.unit(), &h.gen("0bar")?)?;
    let fwd = tensor.map_pair(f_action.forward(0), &id_h)?;
    let inv = tensor.map_pair(f_action.inverse(0), &id_h)?;
    let id_t = tensor.map_pair(&id_w, &id_h)?;
    let action = ConjugationAction::from_maps(vec![(fwd, inv), (id_t.clone(), id_t)]);
    // complete value set: {1, f} (x) {1bar, 0bar}
    let mut tests = Vec::new();
    for wl in ["1", "f"] {
        for hl in ["1bar", "0bar"] {
            tests.push(tensor.embed(&w.gen(wl)?, &h.gen(hl)?)?);
        }
    }
    let monoid = DenominatorMonoid::new(
        vec![
            ("f(x)1bar".to_string(), f1),
            ("1(x)0bar".to_string(), zero1),
        ],
        action,
        AnnihilatorStrategy::FiniteTestSet(tests),
    )?;
    Ok(CombinedExample { tensor, monoid })
}

/// `W (x) Mq2` with denominators `f (x) 1` and `1 (x) det`, both regular.
pub fn w_tensor_mq2(r: usize, cutoff: i32, alpha: i64) -> Result<(CombinedExample, Mq2), LocError> {
    let m = mq2(r, cutoff)?;
    let (w, rform) = sweedler(&m.field, Scalar::from_integer(&m.field, alpha))?;
    let tensor = tensor_wba(&w, m.wba())?;
    let f = w.gen("f")?;
    let f_action = ConjugationAction::from_rform(&w, &rform, std::slice::from_ref(&f))?;
    let id_w = LinearMap::identity_on(&w);
    let id_m = LinearMap::identity_on(m.wba());
    let fwd = tensor.map_pair(f_action.forward(0), &id_m)?;
    let inv = tensor.map_pair(f_action.inverse(0), &id_m)?;
    let id_t = tensor.map_pair(&id_w, &id_m)?;
    let f1 = tensor.embed(&f, m.wba().unit())?;
    let det1 = tensor.embed(w.unit(), &m.det)?;
    let monoid = DenominatorMonoid::new(
        vec![
            ("f(x)1".to_string(), f1),
            ("1(x)detq".to_string(), det1),
        ],
        ConjugationAction::from_maps(vec![(fwd, inv), (id_t.clone(), id_t)]),
        AnnihilatorStrategy::DeclaredRegular,
    )?;
    Ok((CombinedExample { tensor, monoid }, m))
}

/// `H4 (x) Mq2` with central denominators `0bar (x) 1`, `1bar (x) 1`,
/// `1 (x) det`; `0bar (x) 1` is not regular, so the strategy is a bounded
/// search.
pub fn h4_tensor_mq2(r: usize, cutoff: i32) -> Result<(CombinedExample, Mq2), LocError> {
    let m = mq2(r, cutoff)?;
    let h = h4(&m.field)?;
    let tensor = tensor_wba(&h, m.wba())?;
    let zero1 = tensor.embed(&h.gen("0bar")?, m.wba().unit())?;
    let one1 = tensor.embed(&h.gen("1bar")?, m.wba().unit())?;
    let det1 = tensor.embed(h.unit(), &m.det)?;
    let monoid = DenominatorMonoid::central(
        tensor.wba(),
        vec![
            ("0bar(x)1".to_string(), zero1),
            ("1bar(x)1".to_string(), one1),
            ("1(x)detq".to_string(), det1),
        ],
        AnnihilatorStrategy::BoundedSearch(2),
    )?;
    Ok((CombinedExample { tensor, monoid }, m))
}

/// The most general combination: `W (x) H4 (x) MhatQ2`, with the verbatim
/// generator list including the nilpotent `y (x) 1bar (x) 1` (which is not
/// group-like; the almost-central checker is the arbiter, and localization
/// construction rejects the defective monoid).
pub fn glfusion(
    r: usize,
    cutoff: i32,
    alpha: i64,
    include_y_generator: bool,
) -> Result<(CombinedExample, MhatQ2), LocError> {
    let mhat = mhatq2(r, cutoff)?;
    let (w, rform) = sweedler(&mhat.field, Scalar::from_integer(&mhat.field, alpha))?;
    let h = h4(&mhat.field)?;
    let wh = tensor_wba(&w, &h)?;
    let tensor = tensor_wba(wh.wba(), mhat.wba())?;

    let f = w.gen("f")?;
    let y = w.gen("y")?;
    let f_action = ConjugationAction::from_rform(&w, &rform, std::slice::from_ref(&f))?;
    let id_w = LinearMap::identity_on(&w);
    let id_h = LinearMap::identity_on(&h);
    let id_m = LinearMap::identity_on(mhat.wba());
    let id_wh = wh.map_pair(&id_w, &id_h)?;
    let f_wh_fwd = wh.map_pair(f_action.forward(0), &id_h)?;
    let f_wh_inv = wh.map_pair(f_action.inverse(0), &id_h)?;
    let f_fwd = tensor.map_pair(&f_wh_fwd, &id_m)?;
    let f_inv = tensor.map_pair(&f_wh_inv, &id_m)?;
    let id_t = tensor.map_pair(&id_wh, &id_m)?;

    let embed3 = |a: &Element, b: &Element, c: &Element| -> Result<Element, LocError> {
        Ok(tensor.embed(&wh.embed(a, b)?, c)?)
    };
    let f11 = embed3(&f, h.unit(), mhat.wba().unit())?;
    let y11 = embed3(&y, h.unit(), mhat.wba().unit())?;
    let zero1 = embed3(w.unit(), &h.gen("0bar")?, mhat.wba().unit())?;
    let det1 = embed3(w.unit(), h.unit(), &mhat.det)?;

    let mut gens = vec![("f(x)1bar(x)1".to_string(), f11)];
    let mut maps = vec![(f_fwd, f_inv)];
    if include_y_generator {
        gens.push(("y(x)1bar(x)1".to_string(), y11));
        maps.push((id_t.clone(), id_t.clone()));
    }
    gens.push(("1(x)0bar(x)1".to_string(), zero1));
    maps.push((id_t.clone(), id_t.clone()));
    gens.push(("1(x)1bar(x)detq".to_string(), det1));
    maps.push((id_t.clone(), id_t));

    let monoid = DenominatorMonoid::new(
        gens,
        ConjugationAction::from_maps(maps),
        AnnihilatorStrategy::BoundedSearch(2),
    )?;
    Ok((
        CombinedExample { tensor, monoid },
        mhat,
    ))
}

/// A short machine-readable description of one catalog entry.
#[derive(Debug, Clone, serde::Serialize)]
pub struct ExampleDescriptor {
    pub name: &'static str,
    pub summary: &'static str,
    pub parameters: &'static str,
    /// suites expected to pass at the default parameters
    pub manifest: &'static [&'static str],
}

pub fn descriptors() -> Vec<ExampleDescriptor> {
    vec![
        ExampleDescriptor {
            name: "sweedler",
            summary: "4-dimensional bialgebra W with universal r-form (alpha)",
            parameters: "--alpha",
            manifest: &["wba", "coquasi", "bialgebra", "counital", "almost-central", "ore"],
        },
        ExampleDescriptor {
            name: "h4",
            summary: "monoid algebra of (Z/4Z, *); every basis vector group-like",
            parameters: "",
            manifest: &["wba", "coquasi", "bialgebra", "counital", "almost-central", "ore"],
        },
        ExampleDescriptor {
            name: "mq2",
            summary: "quantum 2x2 matrix bialgebra at q = zeta_{8r}^4",
            parameters: "--r --cutoff",
            manifest: &["wba", "bialgebra", "counital", "central", "grouplike", "ore"],
        },
        ExampleDescriptor {
            name: "mhatq2",
            summary: "graph WBA at level r modulo RTT relations, with det_q",
            parameters: "--r --cutoff",
            manifest: &["wba", "counital", "central", "grouplike", "ore"],
        },
        ExampleDescriptor {
            name: "glq2",
            summary: "Laurent model Mq2[X]/(det X - 1) with its antipode table",
            parameters: "--r --cutoff --x-bound",
            manifest: &["wba", "antipode"],
        },
        ExampleDescriptor {
            name: "glhatq2",
            summary: "Laurent model MhatQ2[X]/(det X - 1)",
            parameters: "--r --cutoff --x-bound",
            manifest: &["wba"],
        },
        ExampleDescriptor {
            name: "radford",
            summary: "truncated tensor-algebra bialgebra; only the unit is group-like",
            parameters: "--cutoff",
            manifest: &["wba", "bialgebra"],
        },
        ExampleDescriptor {
            name: "w-h4",
            summary: "W (x) H4 with denominators f(x)1bar and 1(x)0bar",
            parameters: "--alpha",
            manifest: &["wba", "almost-central", "ore"],
        },
        ExampleDescriptor {
            name: "w-mq2",
            summary: "W (x) Mq2 with denominators f(x)1 and 1(x)detq",
            parameters: "--r --cutoff --alpha",
            manifest: &["wba", "almost-central", "ore"],
        },
        ExampleDescriptor {
            name: "h4-mq2",
            summary: "H4 (x) Mq2 with a non-regular central denominator",
            parameters: "--r --cutoff",
            manifest: &["wba", "almost-central", "ore"],
        },
        ExampleDescriptor {
            name: "glfusion",
            summary: "W (x) H4 (x) MhatQ2 with the verbatim generator list",
            parameters: "--r --cutoff --alpha",
            manifest: &["wba"],
        },
    ]
}
