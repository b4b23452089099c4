use serde::Serialize;

use crate::error::Result;
use crate::theorems;

use super::index::{FactoredIndex, Sieve};

/// One rewriting step from an index to a simpler one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum ReductionStep {
    /// `g(f_n) = (n / rad n) · g(f_{rad n})` for both `Φ` and `Ψ`.
    Radical { from: u64, to: u64, multiplier: u64 },
    /// `n = 2m`, `m` odd: `g(Φ_{2m}) = g(Φ_m)`, `g(Ψ_{2m}) = max{g(Ψ_m), φ(m)}`.
    Even { from: u64, to: u64, totient: u64 },
}

/// The steps taking `n` to its odd squarefree core.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionChain {
    pub n: u64,
    pub radical: u64,
    pub multiplier: u64,
    pub steps: Vec<ReductionStep>,
    pub core: u64,
    pub core_primes: Vec<u64>,
}

impl ReductionChain {
    pub fn even_step(&self) -> Option<(u64, u64)> {
        self.steps.iter().find_map(|s| match *s {
            ReductionStep::Even { to, totient, .. } => Some((to, totient)),
            _ => None,
        })
    }
}

pub fn reduce_index(n: u64) -> Result<ReductionChain> {
    Ok(reduce_factored(&Sieve::shared().factor(n)?))
}

pub fn reduce_factored(idx: &FactoredIndex) -> ReductionChain {
    let mut steps = Vec::new();
    let multiplier = idx.n / idx.radical;
    if multiplier > 1 {
        steps.push(ReductionStep::Radical {
            from: idx.n,
            to: idx.radical,
            multiplier,
        });
    }
    let mut core = idx.radical;
    if core.is_multiple_of(2) {
        let m = core / 2;
        let totient = idx
            .prime_factors
            .iter()
            .filter(|f| f.0 != 2)
            .map(|f| f.0 - 1)
            .product();
        steps.push(ReductionStep::Even {
            from: core,
            to: m,
            totient,
        });
        core = m;
    }
    ReductionChain {
        n: idx.n,
        radical: idx.radical,
        multiplier,
        steps,
        core,
        core_primes: idx
            .prime_factors
            .iter()
            .map(|f| f.0)
            .filter(|&p| p != 2)
            .collect(),
    }
}

/// What is known about a maximum gap without building the polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GapValue {
    Exact { value: u64 },
    /// `lower <= g < upper_exclusive`.
    Bounded { lower: u64, upper_exclusive: u64 },
    BruteForceOnly,
}

impl GapValue {
    fn bounded(lower: u64, upper_exclusive: u64) -> Self {
        if upper_exclusive == lower + 1 {
            GapValue::Exact { value: lower }
        } else {
            GapValue::Bounded {
                lower,
                upper_exclusive,
            }
        }
    }

    /// Whether an observed gap is consistent; `None` when nothing is known.
    pub fn admits(&self, g: u64) -> Option<bool> {
        match *self {
            GapValue::Exact { value } => Some(g == value),
            GapValue::Bounded {
                lower,
                upper_exclusive,
            } => Some(lower <= g && g < upper_exclusive),
            GapValue::BruteForceOnly => None,
        }
    }

    fn max_with(self, v: u64) -> Self {
        match self {
            GapValue::Exact { value } => GapValue::Exact {
                value: value.max(v),
            },
            GapValue::Bounded {
                lower,
                upper_exclusive,
            } => GapValue::bounded(lower.max(v), upper_exclusive.max(v + 1)),
            GapValue::BruteForceOnly => GapValue::BruteForceOnly,
        }
    }

    fn scale(self, m: u64) -> Self {
        match self {
            GapValue::Exact { value } => GapValue::Exact { value: value * m },
            GapValue::Bounded {
                lower,
                upper_exclusive,
            } => GapValue::bounded(lower * m, (upper_exclusive - 1) * m + 1),
            GapValue::BruteForceOnly => GapValue::BruteForceOnly,
        }
    }
}

/// Which closed form produced the core values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum CoreRule {
    Unit,
    OnePrime { p1: u64 },
    TwoPrimes { p1: u64, p2: u64 },
    ThreePrimes {
        p1: u64,
        p2: u64,
        p3: u64,
        lambda: i64,
        eq2: bool,
    },
    NoClosedForm { primes: Vec<u64> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapAnswer {
    pub chain: ReductionChain,
    pub rule: CoreRule,
    pub core_phi: GapValue,
    pub core_psi: GapValue,
    pub phi: GapValue,
    pub psi: GapValue,
}

pub fn gap_dispatch(n: u64) -> Result<GapAnswer> {
    Ok(dispatch_factored(&Sieve::shared().factor(n)?))
}

pub fn dispatch_factored(idx: &FactoredIndex) -> GapAnswer {
    let chain = reduce_factored(idx);
    let exact = |value| GapValue::Exact { value };
    let (rule, core_phi, core_psi) = match *chain.core_primes.as_slice() {
        [] => (CoreRule::Unit, exact(1), exact(0)),
        [p1] => (CoreRule::OnePrime { p1 }, exact(1), exact(1)),
        [p1, p2] => (
            CoreRule::TwoPrimes { p1, p2 },
            exact(theorems::gap_phi_closed_unchecked(p1)),
            exact(p2 - (p1 - 1)),
        ),
        [p1, p2, p3] => {
            let report = theorems::conditions_unchecked(p1, p2, p3);
            let bounds = theorems::bounds_psi3_unchecked(p1, p2, p3);
            let psi = if report.eq2 {
                exact(report.lambda as u64)
            } else {
                GapValue::bounded(bounds.lower as u64, bounds.upper_exclusive as u64)
            };
            (
                CoreRule::ThreePrimes {
                    p1,
                    p2,
                    p3,
                    lambda: report.lambda,
                    eq2: report.eq2,
                },
                GapValue::BruteForceOnly,
                psi,
            )
        }
        _ => (
            CoreRule::NoClosedForm {
                primes: chain.core_primes.clone(),
            },
            GapValue::BruteForceOnly,
            GapValue::BruteForceOnly,
        ),
    };

    let mut phi = core_phi;
    let mut psi = core_psi;
    if let Some((_, totient)) = chain.even_step() {
        psi = psi.max_with(totient);
    }
    phi = phi.scale(chain.multiplier);
    psi = psi.scale(chain.multiplier);

    GapAnswer {
        chain,
        rule,
        core_phi,
        core_psi,
        phi,
        psi,
    }
}
