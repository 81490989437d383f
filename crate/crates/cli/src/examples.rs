//! Construction and suite dispatch for the named examples.

use std::sync::Arc;

use wbafrac_core::catalog::{self, CombinedExample, Mq2, MhatQ2, Params};
use wbafrac_core::coquasi::{check_coquasi, RForm};
use wbafrac_core::exactfield::{CycloField, Scalar};
use wbafrac_core::graded::check_central;
use wbafrac_core::localization::{
    check_ore, laurent_model, localize, DenominatorMonoid, LaurentModel, LocError, LocalizedWBA,
};
use wbafrac_core::report::Report;
use wbafrac_core::wba::{
    check_antipode, check_bialgebra, check_counital_maps, check_wba_axioms, is_group_like,
    BasedWBA, Element, LinearMap,
};

pub enum Example {
    Sweedler { wba: Arc<BasedWBA>, rform: RForm },
    H4 { wba: Arc<BasedWBA>, rform: RForm },
    Mq2(Mq2),
    MhatQ2(MhatQ2),
    GlQ2 { model: LaurentModel, base: Mq2 },
    GlHatQ2 { model: LaurentModel },
    Radford(Arc<BasedWBA>),
    Combined { name: &'static str, example: CombinedExample },
}

pub fn build(name: &str, p: &Params) -> Result<Example, String> {
    let err = |e: LocError| e.to_string();
    match name {
        "sweedler" => {
            let field = CycloField::rationals();
            let alpha = Scalar::from_integer(&field, p.alpha);
            let (wba, rform) = catalog::sweedler(&field, alpha).map_err(|e| e.to_string())?;
            Ok(Example::Sweedler {
                wba: Arc::new(wba),
                rform,
            })
        }
        "h4" => {
            let wba = catalog::h4_rational();
            let rform = catalog::h4_rform(&wba).map_err(|e| e.to_string())?;
            Ok(Example::H4 {
                wba: Arc::new(wba),
                rform,
            })
        }
        "mq2" => Ok(Example::Mq2(catalog::mq2(p.r, p.cutoff).map_err(err)?)),
        "mhatq2" => Ok(Example::MhatQ2(catalog::mhatq2(p.r, p.cutoff).map_err(err)?)),
        "glq2" => {
            let base = catalog::mq2(p.r, p.cutoff).map_err(err)?;
            let model =
                laurent_model(base.wba(), "detq", &base.det, p.x_bound).map_err(err)?;
            Ok(Example::GlQ2 { model, base })
        }
        "glhatq2" => {
            let base = catalog::mhatq2(p.r, p.cutoff).map_err(err)?;
            let model =
                laurent_model(base.wba(), "detq", &base.det, p.x_bound).map_err(err)?;
            Ok(Example::GlHatQ2 { model })
        }
        "radford" => {
            let field = CycloField::rationals();
            let wba = catalog::radford_tensor(&field, p.cutoff).map_err(|e| e.to_string())?;
            Ok(Example::Radford(Arc::new(wba)))
        }
        "w-h4" => {
            let field = CycloField::rationals();
            let alpha = Scalar::from_integer(&field, p.alpha);
            let example = catalog::w_tensor_h4(&field, alpha).map_err(err)?;
            Ok(Example::Combined {
                name: "w-h4",
                example,
            })
        }
        "w-mq2" => {
            let (example, _) = catalog::w_tensor_mq2(p.r, p.cutoff, p.alpha).map_err(err)?;
            Ok(Example::Combined {
                name: "w-mq2",
                example,
            })
        }
        "h4-mq2" => {
            let (example, _) = catalog::h4_tensor_mq2(p.r, p.cutoff).map_err(err)?;
            Ok(Example::Combined {
                name: "h4-mq2",
                example,
            })
        }
        "glfusion" => {
            let (example, _) = catalog::glfusion(p.r, p.cutoff, p.alpha, true).map_err(err)?;
            Ok(Example::Combined {
                name: "glfusion",
                example,
            })
        }
        other => Err(format!(
            "unknown example {other:?}; see `wbafrac list`"
        )),
    }
}

impl Example {
    pub fn wba(&self) -> &Arc<BasedWBA> {
        match self {
            Example::Sweedler { wba, .. } => wba,
            Example::H4 { wba, .. } => wba,
            Example::Mq2(m) => m.wba(),
            Example::MhatQ2(m) => m.wba(),
            Example::GlQ2 { model, .. } => model.wba(),
            Example::GlHatQ2 { model } => model.wba(),
            Example::Radford(wba) => wba,
            Example::Combined { example, .. } => example.wba(),
        }
    }

    pub fn rform(&self) -> Option<&RForm> {
        match self {
            Example::Sweedler { rform, .. } => Some(rform),
            Example::H4 { rform, .. } => Some(rform),
            Example::Mq2(m) => Some(&m.rform),
            _ => None,
        }
    }

    /// Named group-like candidates used by the grouplike and coquasi suites.
    pub fn group_likes(&self) -> Result<Vec<(String, Element)>, String> {
        let e = |x: wbafrac_core::wba::AlgebraError| x.to_string();
        Ok(match self {
            Example::Sweedler { wba, .. } => vec![
                ("1".to_string(), wba.gen("1").map_err(e)?),
                ("f".to_string(), wba.gen("f").map_err(e)?),
            ],
            Example::H4 { wba, .. } => (0..4)
                .map(|i| {
                    let l = format!("{i}bar");
                    Ok((l.clone(), wba.gen(&l).map_err(e)?))
                })
                .collect::<Result<Vec<_>, String>>()?,
            Example::Mq2(m) => vec![("detq".to_string(), m.det.clone())],
            Example::MhatQ2(m) => vec![("detq".to_string(), m.det.clone())],
            _ => Vec::new(),
        })
    }

    /// The example's denominator monoid, restricted to `at` labels when given.
    pub fn monoid(&self, at: Option<&[String]>) -> Result<DenominatorMonoid, String> {
        let base = match self {
            Example::Sweedler { wba, rform } => {
                catalog::sweedler_monoid(wba, rform).map_err(|e| e.to_string())?
            }
            Example::H4 { wba, .. } => catalog::h4_monoid(wba).map_err(|e| e.to_string())?,
            Example::Mq2(m) => m.det_monoid().map_err(|e| e.to_string())?,
            Example::MhatQ2(m) => m.det_monoid().map_err(|e| e.to_string())?,
            Example::Combined { example, .. } => example.monoid.clone(),
            _ => return Err("this example has no denominator monoid".to_string()),
        };
        let Some(at) = at else { return Ok(base) };
        let canon = |s: &str| -> String {
            match s {
                "zerobar" => "0bar".to_string(),
                "onebar" => "1bar".to_string(),
                "twobar" => "2bar".to_string(),
                "threebar" => "3bar".to_string(),
                other => other.to_string(),
            }
        };
        let wanted: Vec<String> = at.iter().map(|s| canon(s)).collect();
        let mut gens = Vec::new();
        let mut maps = Vec::new();
        for want in &wanted {
            let idx = base
                .generators()
                .iter()
                .position(|(l, _)| l == want)
                .ok_or_else(|| {
                    let names: Vec<&str> =
                        base.generators().iter().map(|(l, _)| l.as_str()).collect();
                    format!("unknown denominator {want:?}; available: {names:?}")
                })?;
            gens.push(base.generators()[idx].clone());
            maps.push((
                base.action().forward(idx).clone(),
                base.action().inverse(idx).clone(),
            ));
        }
        DenominatorMonoid::new(
            gens,
            wbafrac_core::coquasi::ConjugationAction::from_maps(maps),
            base.strategy().clone(),
        )
        .map_err(|e| e.to_string())
    }

    /// Runs one named suite.
    pub fn run_suite(&self, suite: &str, p: &Params) -> Result<Report, String> {
        let e = |x: wbafrac_core::wba::AlgebraError| x.to_string();
        match suite {
            "wba" => check_wba_axioms(self.wba()).map_err(e),
            "counital" => check_counital_maps(self.wba()).map_err(e),
            "bialgebra" => check_bialgebra(self.wba()).map_err(e),
            "coquasi" => {
                let rform = self
                    .rform()
                    .ok_or("this example carries no materialized r-form")?;
                let gl = self.group_likes()?;
                check_coquasi(self.wba(), rform, &gl).map_err(e)
            }
            "grouplike" => {
                let mut report = Report::new(format!("group-likes of {}", self.wba().name()));
                let mut c = wbafrac_core::report::CheckBuilder::new("grouplike.candidates");
                for (label, g) in self.group_likes()? {
                    let status = is_group_like(self.wba(), &g).map_err(e)?;
                    c.record(
                        status.is_group_like(),
                        &[],
                        format!("{label} is {status}"),
                        "both",
                    );
                }
                report.checks.push(c.finish());
                Ok(report)
            }
            "central" => {
                let det = match self {
                    Example::Mq2(m) => m.det.clone(),
                    Example::MhatQ2(m) => m.det.clone(),
                    _ => return Err("central suite is defined for mq2 and mhatq2".to_string()),
                };
                check_central(self.wba(), "detq", &det).map_err(e)
            }
            "almost-central" => {
                let monoid = self.monoid(None)?;
                monoid
                    .check(self.wba(), p.word_bound)
                    .map_err(|x| x.to_string())
            }
            "ore" => {
                let monoid = self.monoid(None)?;
                check_ore(self.wba(), &monoid).map_err(|x| x.to_string())
            }
            "antipode" => match self {
                Example::GlQ2 { model, base } => glq2_antipode_report(model, base),
                _ => Err("antipode suite is defined for glq2".to_string()),
            },
            other => Err(format!(
                "unknown suite {other:?}; known: wba, counital, bialgebra, coquasi, grouplike, central, almost-central, ore, antipode"
            )),
        }
    }

    /// The localization report for `localize`.
    pub fn localization_report(
        &self,
        at: Option<&[String]>,
        stage_bound: usize,
    ) -> Result<Report, String> {
        let monoid = self.monoid(at)?;
        let loc = LocalizedWBA::new(self.wba(), monoid).map_err(|x| x.to_string())?;
        let mut report = Report::new(format!("localization of {}", self.wba().name()))
            .with_context("strategy", loc.monoid().strategy())
            .with_context(
                "denominators",
                loc.monoid()
                    .generators()
                    .iter()
                    .map(|(l, _)| l.as_str())
                    .collect::<Vec<_>>()
                    .join(","),
            );
        for (k, dim) in loc.kernel().stabilization() {
            report.set_context(&format!("kernel-dim-after-{k}-tests"), dim);
        }
        if self.wba().is_complete() {
            let mat = localize(&loc).map_err(|x| x.to_string())?;
            report.set_context("dimension", mat.wba().total_dim());
            report.merge(mat.report().clone());
            let axioms = check_wba_axioms(mat.wba()).map_err(|x| x.to_string())?;
            report.merge(axioms);
        } else {
            let dims = loc.phi_image_dims();
            for (d, host, image, conclusive) in dims {
                report.set_context(
                    &format!("phi-image-dim[{d}]"),
                    format!("{image} of {host} (conclusive: {conclusive})"),
                );
            }
            if let Ok(stage) = loc.stage_dims(stage_bound) {
                for (m, dim) in stage {
                    report.set_context(&format!("stage-dim[{m}] (bound {stage_bound})"), dim);
                }
            }
        }
        Ok(report)
    }
}

fn glq2_antipode_report(model: &LaurentModel, base: &Mq2) -> Result<Report, String> {
    let e = |x: wbafrac_core::wba::AlgebraError| x.to_string();
    let le = |x: LocError| x.to_string();
    let host = base.wba();
    let gen = |l: &str| host.gen(l).map_err(e);
    let mut s = LinearMap::new();
    let id_of = |x: &Element| *x.support().next().expect("basis element");
    let det = model.embed(&base.det).map_err(le)?;
    let x = model.x().map_err(le)?;
    let q = &base.q;
    s.define(
        id_of(&model.embed(host.unit()).map_err(le)?),
        model.embed(host.unit()).map_err(le)?,
    );
    s.define(
        id_of(&model.embed(&gen("a")?).map_err(le)?),
        model.embed_with_power(&gen("d")?, 1).map_err(le)?,
    );
    s.define(
        id_of(&model.embed(&gen("b")?).map_err(le)?),
        model
            .embed_with_power(&gen("b")?, 1)
            .map_err(le)?
            .scale(&q.neg()),
    );
    s.define(
        id_of(&model.embed(&gen("c")?).map_err(le)?),
        model
            .embed_with_power(&gen("c")?, 1)
            .map_err(le)?
            .scale(&q.inv().map_err(|x| x.to_string())?.neg()),
    );
    s.define(
        id_of(&model.embed(&gen("d")?).map_err(le)?),
        model.embed_with_power(&gen("a")?, 1).map_err(le)?,
    );
    s.define(id_of(&x), det);
    let mut at = Vec::new();
    for l in ["a", "b", "c", "d"] {
        at.push((l.to_string(), model.embed(&gen(l)?).map_err(le)?));
    }
    at.push(("X".to_string(), x));
    check_antipode(model.wba(), &s, &at).map_err(e)
}
