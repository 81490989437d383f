//! Denominator monoids: generator words of group-likes, a conjugation
//! action, and an explicit annihilator strategy.
//!
//! The strategy is the honest part of the contract: deciding `x t = 0 for
//! some t in G` over an arbitrary monoid is not possible in this
//! representation, so each localization declares how annihilators are
//! searched and every report records that declaration.

use thiserror::Error;

use crate::coquasi::{check_almost_central, enumerate_monoid_values, ConjugationAction};
use crate::report::Report;
use crate::wba::{AlgebraError, BasedWBA, Element};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LocError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("almost-centrality fails: {0}")]
    AlmostCentralFailed(String),
    #[error("equivalence is indeterminate: {0}")]
    Indeterminate(String),
    #[error("{0} is not invertible in the target")]
    NotInvertible(String),
    #[error("materialization needs a fully materialized (finite-dimensional) host")]
    HostNotFiniteDim,
    #[error("{0} is not central")]
    NotCentral(String),
    #[error("denominator has finite order or vanishing power: {0}")]
    FiniteOrder(String),
    #[error("right multiplication by the denominator is not injective at degree {0}")]
    NotRegularAtDegree(i32),
    #[error("no common denominator stage: {0}")]
    NoCommonStage(String),
}

/// How `frac_eq` searches for an annihilating denominator `t`.
#[derive(Debug, Clone)]
pub enum AnnihilatorStrategy {
    /// Every denominator is declared regular; only `t = 1` is used, and the
    /// declaration is spot-checked on the generators at construction.
    DeclaredRegular,
    /// An explicit complete list of monoid values to test.
    FiniteTestSet(Vec<Element>),
    /// Breadth-first enumeration of generator words up to the given length;
    /// decisive only if the value set saturates before the bound.
    BoundedSearch(usize),
}

impl std::fmt::Display for AnnihilatorStrategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AnnihilatorStrategy::DeclaredRegular => write!(f, "declared-regular"),
            AnnihilatorStrategy::FiniteTestSet(v) => write!(f, "finite-test-set({})", v.len()),
            AnnihilatorStrategy::BoundedSearch(b) => write!(f, "bounded-search({b})"),
        }
    }
}

#[derive(Clone)]
pub struct DenominatorMonoid {
    generators: Vec<(String, Element)>,
    action: ConjugationAction,
    strategy: AnnihilatorStrategy,
}

impl DenominatorMonoid {
    /// Builds the monoid data. Generators must be homogeneous (the kernel
    /// machinery is graded); group-likeness and almost-centrality are
    /// verified by [`DenominatorMonoid::check`], not assumed here, so that
    /// defective generator sets can still be examined.
    pub fn new(
        generators: Vec<(String, Element)>,
        action: ConjugationAction,
        strategy: AnnihilatorStrategy,
    ) -> Result<Self, LocError> {
        if generators.len() != action.len() {
            return Err(LocError::Algebra(AlgebraError::BadStructure(
                "one action map per generator required".to_string(),
            )));
        }
        for (label, g) in &generators {
            if !g.is_homogeneous() {
                return Err(LocError::Algebra(AlgebraError::BadStructure(format!(
                    "generator {label} is not homogeneous"
                ))));
            }
        }
        Ok(DenominatorMonoid {
            generators,
            action,
            strategy,
        })
    }

    /// Central case: identity action on every generator.
    pub fn central(
        host: &BasedWBA,
        generators: Vec<(String, Element)>,
        strategy: AnnihilatorStrategy,
    ) -> Result<Self, LocError> {
        let action = ConjugationAction::identity(host, generators.len());
        DenominatorMonoid::new(generators, action, strategy)
    }

    pub fn generators(&self) -> &[(String, Element)] {
        &self.generators
    }

    pub fn generator(&self, i: usize) -> &Element {
        &self.generators[i].1
    }

    pub fn action(&self) -> &ConjugationAction {
        &self.action
    }

    pub fn strategy(&self) -> &AnnihilatorStrategy {
        &self.strategy
    }

    /// Evaluates a denominator word to its monoid value.
    pub fn value(&self, host: &BasedWBA, word: &[usize]) -> Result<Element, LocError> {
        let mut acc = host.unit().clone();
        for &i in word {
            let g = self
                .generators
                .get(i)
                .map(|(_, g)| g)
                .ok_or_else(|| {
                    LocError::Algebra(AlgebraError::BadStructure(format!(
                        "generator index {i} out of range"
                    )))
                })?;
            acc = host.mul(&acc, g)?;
        }
        Ok(acc)
    }

    /// The degree of a denominator word's value (generators homogeneous).
    pub fn word_degree(&self, word: &[usize]) -> i32 {
        word.iter()
            .map(|&i| {
                self.generators[i]
                    .1
                    .degrees()
                    .first()
                    .copied()
                    .unwrap_or(0)
            })
            .sum()
    }

    /// The annihilator test elements implied by the strategy, together with
    /// a decisiveness flag (true when the set provably covers all values of
    /// the monoid) and the enumeration table for reports.
    pub fn test_elements(
        &self,
        host: &BasedWBA,
    ) -> Result<(Vec<Element>, bool, Vec<(usize, usize)>), LocError> {
        let gens: Vec<Element> = self.generators.iter().map(|(_, g)| g.clone()).collect();
        match &self.strategy {
            AnnihilatorStrategy::DeclaredRegular => {
                Ok((vec![host.unit().clone()], true, Vec::new()))
            }
            AnnihilatorStrategy::FiniteTestSet(ts) => Ok((ts.clone(), true, Vec::new())),
            AnnihilatorStrategy::BoundedSearch(bound) => {
                let (values, saturated, table) = enumerate_monoid_values(host, &gens, *bound)?;
                Ok((values, saturated, table))
            }
        }
    }

    /// Runs the full hypothesis suite: generators group-like, action maps
    /// are automorphisms with inverses, (C1), (C2).
    pub fn check(&self, host: &BasedWBA, word_bound: usize) -> Result<Report, LocError> {
        Ok(check_almost_central(
            host,
            &self.generators,
            &self.action,
            word_bound,
        )?)
    }
}
