//! The Laurent-polynomial model `H[X]/(gX - 1)` of a localization at a
//! central group-like `g` of positive degree.
//!
//! Elements are canonical pairs `v X^n` with `v` not divisible by `g` on
//! the right for `n >= 1`; the identification `(zg) X^n = z X^{n-1}` is
//! applied through an exact splitting of each degree into `im(R_g)` and a
//! complement. The result is a Z-graded [`BasedWBA`] whose products that
//! would leave the materialized window (in numerator degree or in X-power)
//! are marked as loud overflows.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::exactfield::Scalar;
use crate::linalg::{LinSolver, SparseVec};
use crate::localization::{Fraction, LocError};
use crate::report::Report;
use crate::wba::{
    is_group_like, AlgebraError, BasedWBA, BasisId, Element, PairTensor, WbaBuilder,
};

pub struct LaurentModel {
    host: Arc<BasedWBA>,
    g: Element,
    g_degree: i32,
    x_bound: usize,
    wba: Arc<BasedWBA>,
    /// model basis id -> (X-power, host coordinate)
    slots: BTreeMap<BasisId, (usize, BasisId)>,
    /// (X-power, host coordinate) -> model basis id
    ids: BTreeMap<(usize, BasisId), BasisId>,
    /// per host degree: splitter of that degree into im(R_g) + complement
    splitters: BTreeMap<i32, LinSolver>,
    report: Report,
}

impl LaurentModel {
    pub fn wba(&self) -> &Arc<BasedWBA> {
        &self.wba
    }

    pub fn host(&self) -> &Arc<BasedWBA> {
        &self.host
    }

    pub fn denominator(&self) -> &Element {
        &self.g
    }

    pub fn x_bound(&self) -> usize {
        self.x_bound
    }

    pub fn report(&self) -> &Report {
        &self.report
    }

    /// The adjoined inverse `X = 1/g`.
    pub fn x(&self) -> Result<Element, LocError> {
        self.embed_with_power(self.host.unit(), 1)
    }

    /// `a X^n` in canonical coordinates.
    pub fn embed_with_power(&self, a: &Element, n: usize) -> Result<Element, LocError> {
        self.canonicalize(a, n)
    }

    /// `phi(a) = a X^0`.
    pub fn embed(&self, a: &Element) -> Result<Element, LocError> {
        self.embed_with_power(a, 0)
    }

    fn canonicalize(&self, a: &Element, n: usize) -> Result<Element, LocError> {
        if n == 0 {
            let mut out = Element::zero();
            for (b, c) in a.terms() {
                let id = self.ids.get(&(0, *b)).ok_or_else(|| {
                    LocError::Algebra(AlgebraError::UnknownBasis(*b))
                })?;
                out.add_term(*id, c.clone());
            }
            return Ok(out);
        }
        let mut out = Element::zero();
        for d in a.degrees() {
            let comp = a.component(d);
            let flat: SparseVec = comp
                .terms()
                .map(|(b, c)| (b.index as usize, c.clone()))
                .collect();
            let (complement, preimage) = match self.splitters.get(&d) {
                Some(s) => s.split(&flat),
                None => (flat, Vec::new()),
            };
            for (col, c) in complement {
                let host_id = BasisId::new(d, col as u32);
                let id = self.ids.get(&(n, host_id)).ok_or_else(|| {
                    LocError::Algebra(AlgebraError::DegreeOverflow(
                        d,
                        -(n as i32),
                        self.wba.window().0,
                        self.wba.window().1,
                    ))
                })?;
                out.add_term(*id, c);
            }
            if !preimage.is_empty() {
                let mut z = Element::zero();
                for (j, c) in preimage {
                    z.add_term(BasisId::new(d - self.g_degree, j as u32), c);
                }
                let rec = self.canonicalize(&z, n - 1)?;
                out = out.add(&rec);
            }
        }
        Ok(out)
    }

    /// Reads a model element back as a single fraction `num / g^power`.
    pub fn to_fraction(&self, x: &Element) -> Result<(Element, usize), LocError> {
        let max_n = x
            .support()
            .map(|id| self.slots[id].0)
            .max()
            .unwrap_or(0);
        let mut num = Element::zero();
        for (id, c) in x.terms() {
            let (n, host_id) = self.slots[id];
            // v X^n = v g^{max-n} X^{max}, g central
            let mut v = Element::from_basis(host_id, Scalar::one(self.host.field()));
            for _ in n..max_n {
                v = self.host.mul(&v, &self.g)?;
            }
            num.add_scaled(&v, c);
        }
        Ok((num, max_n))
    }

    /// The same fraction as a word-denominator [`Fraction`] over a monoid
    /// whose single generator is `g`.
    pub fn to_word_fraction(&self, x: &Element) -> Result<Fraction, LocError> {
        let (num, n) = self.to_fraction(x)?;
        Ok(Fraction::new(num, vec![0; n]))
    }
}

/// Builds the Laurent model, checking that `g` is group-like, central on
/// the materialized basis, homogeneous of positive degree, nonvanishing in
/// every materializable power, and right-regular degree by degree.
pub fn laurent_model(
    host: &Arc<BasedWBA>,
    g_label: &str,
    g: &Element,
    x_bound: usize,
) -> Result<LaurentModel, LocError> {
    let status = is_group_like(host, g)?;
    if !status.is_group_like() {
        return Err(LocError::Algebra(AlgebraError::NotGroupLike(format!(
            "{g_label} is {status}"
        ))));
    }
    if !g.is_homogeneous() || g.is_zero() {
        return Err(LocError::Algebra(AlgebraError::BadStructure(format!(
            "{g_label} must be homogeneous and nonzero"
        ))));
    }
    let g_degree = g.degrees()[0];
    if g_degree <= 0 {
        return Err(LocError::FiniteOrder(format!(
            "{g_label} has degree {g_degree}; positive degree guarantees infinite order"
        )));
    }
    let mut report = Report::new(format!("laurent model {}[X]/({g_label} X - 1)", host.name()))
        .with_context("x-bound", x_bound)
        .with_context("denominator-degree", g_degree);

    // centrality on the materialized basis
    let mut central = crate::report::CheckBuilder::new("laurent.central");
    for id in host.basis_ids() {
        let e = Element::from_basis(id, Scalar::one(host.field()));
        match (host.mul(g, &e), host.mul(&e, g)) {
            (Ok(ge), Ok(eg)) => central.record(ge == eg, &[id], host.show(&ge), host.show(&eg)),
            _ => central.skip(),
        }
    }
    let central = central.finish();
    let central_ok = central.passed();
    report.checks.push(central);
    if !central_ok {
        return Err(LocError::NotCentral(g_label.to_string()));
    }

    // powers of g stay nonzero as far as they are materializable
    let (_, hi) = host.window();
    let mut power = host.unit().clone();
    let mut max_power = 0usize;
    while (max_power as i32 + 1) * g_degree <= hi {
        power = host.mul(&power, g)?;
        if power.is_zero() {
            return Err(LocError::FiniteOrder(format!(
                "{g_label}^{} = 0",
                max_power + 1
            )));
        }
        max_power += 1;
    }
    report.set_context("verified-nonzero-powers", max_power);

    // per-degree splitters: target degree d, domain degree d - g_degree
    let mut splitters = BTreeMap::new();
    for d in host.degrees().collect::<Vec<_>>() {
        let src = d - g_degree;
        let domain: Vec<BasisId> = host.basis_of_degree(src).collect();
        let mut images = Vec::with_capacity(domain.len());
        for b in &domain {
            let e = Element::from_basis(*b, Scalar::one(host.field()));
            let img = host.mul(&e, g)?;
            images.push(
                img.terms()
                    .map(|(id, c)| (id.index as usize, c.clone()))
                    .collect::<SparseVec>(),
            );
        }
        let solver = LinSolver::new(host.field().clone(), host.dim(d) as usize, &images);
        if !solver.kernel().is_empty() {
            return Err(LocError::NotRegularAtDegree(src));
        }
        splitters.insert(d, solver);
    }

    // canonical basis: all of H at power 0, complements at powers 1..=bound
    let mut slots: BTreeMap<BasisId, (usize, BasisId)> = BTreeMap::new();
    let mut ids: BTreeMap<(usize, BasisId), BasisId> = BTreeMap::new();
    let mut counters: BTreeMap<i32, u32> = BTreeMap::new();
    let mut order: Vec<(usize, BasisId)> = Vec::new();
    for n in 0..=x_bound {
        for d in host.degrees() {
            for b in host.basis_of_degree(d) {
                if n > 0 {
                    let pivots = splitters.get(&d).map(|s| s).expect("all degrees split");
                    let flat: SparseVec = vec![(b.index as usize, Scalar::one(host.field()))];
                    let (complement, _) = pivots.split(&flat);
                    let survives = complement.len() == 1
                        && complement[0].0 == b.index as usize
                        && complement[0].1.is_one();
                    if !survives {
                        continue;
                    }
                }
                order.push((n, b));
                let z_degree = d - (n as i32) * g_degree;
                let idx = counters.entry(z_degree).or_insert(0);
                let id = BasisId::new(z_degree, *idx);
                *idx += 1;
                slots.insert(id, (n, b));
                ids.insert((n, b), id);
            }
        }
    }

    let (host_lo, host_hi) = host.window();
    let lo = host_lo - (x_bound as i32) * g_degree;
    let name = format!("{}[X]/({g_label}X-1)", host.name());
    let mut builder = WbaBuilder::new(name, host.field()).window(lo, host_hi, true, true);
    for (id, (n, b)) in &slots {
        let label = if *n == 0 {
            host.label(b).to_string()
        } else if *n == 1 {
            format!("{}*X", host.label(b))
        } else {
            format!("{}*X^{n}", host.label(b))
        };
        builder.basis(*id, label);
    }

    let model_stub = LaurentModel {
        host: host.clone(),
        g: g.clone(),
        g_degree,
        x_bound,
        wba: Arc::new(WbaBuilder::new("stub", host.field()).build().expect("empty")),
        slots: slots.clone(),
        ids: ids.clone(),
        splitters,
        report: Report::new("stub"),
    };

    builder.unit(model_stub.embed(host.unit())?);
    for (id, (n, b)) in &slots {
        let eb = Element::from_basis(*b, Scalar::one(host.field()));
        // Delta(v X^n) = v' X^n (x) v'' X^n
        let mut t = PairTensor::zero();
        for ((l, r), c) in host.delta_basis(b)?.terms() {
            let pl = model_stub.canonicalize(
                &Element::from_basis(*l, Scalar::one(host.field())),
                *n,
            )?;
            let pr = model_stub.canonicalize(
                &Element::from_basis(*r, Scalar::one(host.field())),
                *n,
            )?;
            for (bl, cl) in pl.terms() {
                for (br, cr) in pr.terms() {
                    t.add_term(*bl, *br, c.mul(cl).mul(cr));
                }
            }
        }
        builder.coproduct(*id, t);
        builder.counit(*id, host.counit(&eb));
    }
    for (a, (na, ba)) in &slots {
        for (b2, (nb, bb)) in &slots {
            match host.mul_basis(ba, bb) {
                Ok(prod) => {
                    if prod.is_zero() {
                        continue;
                    }
                    match model_stub.canonicalize(&prod, na + nb) {
                        Ok(v) => {
                            builder.product(*a, *b2, v);
                        }
                        Err(_) => {
                            builder.product_overflow(*a, *b2);
                        }
                    }
                }
                Err(_) => {
                    builder.product_overflow(*a, *b2);
                }
            }
        }
    }
    let wba = Arc::new(builder.build()?);
    report.set_context("dim", wba.total_dim());

    Ok(LaurentModel {
        wba,
        report,
        ..model_stub
    })
}
