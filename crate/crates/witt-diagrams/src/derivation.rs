//! The recursive decomposition executed as hypothesis-checked rewrite rules,
//! with a citation trace recording each step, and the cross-check of its
//! result against the diagram enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::enumeration::{count, recursive_enumerate};
use crate::error::{Error, Result};
use crate::twist::{
    omega_theta_twist, relative_canonical_twist, DegreeClass, LineBundleSymbol, TwistClass,
};
use crate::witt::{Generator, GradedWittModule, Provenance};

/// Rewrite rules. Each carries a machine-checked hypothesis; applying a rule
/// whose hypothesis fails is an error, never silent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    /// n = 1: the variety is the base, so the module is one free rank.
    BaseCase,
    /// Odd n >= 3: split off a copy shifted by 2n-3; the twist picked up
    /// along the way is trivial in Pic/2.
    OddSplit,
    /// Even n: split off a copy shifted by n-1 and twisted by DetEnTilde.
    EvenSplit,
    /// Components twisted by the Pfaffian O(1) vanish.
    TwistVanish,
    /// Projective bundle of even relative dimension r: pushforward and
    /// pullback are inverse isomorphisms up to shift r and the relative
    /// canonical twist.
    PbfEvenIso,
    /// Projective bundle of odd relative dimension r: the composite
    /// pushforward-after-pullback vanishes.
    PbfOddVanish,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::BaseCase => "BaseCase",
            Rule::OddSplit => "OddSplit",
            Rule::EvenSplit => "EvenSplit",
            Rule::TwistVanish => "TwistVanish",
            Rule::PbfEvenIso => "PbfEvenIso",
            Rule::PbfOddVanish => "PbfOddVanish",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parameters a rule is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleParams {
    /// Spinor parameter n, for BaseCase, OddSplit and EvenSplit.
    Spinor { n: u32 },
    /// Relative dimension r of a projective bundle, for PbfEvenIso and
    /// PbfOddVanish.
    ProjBundle { r: u32 },
    /// Twist of a component, for TwistVanish.
    Twist { class: TwistClass },
}

/// What an admissible rule application does to a module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleApplication {
    pub shift: i64,
    pub twist: TwistClass,
}

/// Validates the rule's hypothesis and returns the shift and twist it
/// applies.
pub fn check_rule(rule: Rule, params: RuleParams) -> Result<RuleApplication> {
    match (rule, params) {
        (Rule::BaseCase, RuleParams::Spinor { n }) => {
            if n != 1 {
                return Err(Error::HypothesisFailed {
                    rule: "BaseCase",
                    detail: format!("requires n = 1, got {n}"),
                });
            }
            Ok(RuleApplication {
                shift: 0,
                twist: TwistClass::TRIVIAL,
            })
        }
        (Rule::OddSplit, RuleParams::Spinor { n }) => {
            if n < 3 || n % 2 == 0 {
                return Err(Error::ParityViolation {
                    rule: "OddSplit",
                    required: "odd n >= 3",
                    got: i64::from(n),
                });
            }
            let theta = omega_theta_twist(n)?;
            if !theta.is_trivial() {
                return Err(Error::TwistCheckFailed {
                    rule: "OddSplit",
                    expected: TwistClass::TRIVIAL.to_string(),
                    actual: theta.to_string(),
                });
            }
            Ok(RuleApplication {
                shift: i64::from(2 * n - 3),
                twist: theta,
            })
        }
        (Rule::EvenSplit, RuleParams::Spinor { n }) => {
            if n < 2 || n % 2 == 1 {
                return Err(Error::ParityViolation {
                    rule: "EvenSplit",
                    required: "even n >= 2",
                    got: i64::from(n),
                });
            }
            Ok(RuleApplication {
                shift: i64::from(n - 1),
                twist: TwistClass::singleton(LineBundleSymbol::DetEnTilde),
            })
        }
        (Rule::TwistVanish, RuleParams::Twist { class }) => {
            if !class.contains(LineBundleSymbol::O1) {
                return Err(Error::HypothesisFailed {
                    rule: "TwistVanish",
                    detail: format!("requires a twist containing O1, got {class}"),
                });
            }
            Ok(RuleApplication {
                shift: 0,
                twist: class,
            })
        }
        (Rule::PbfEvenIso, RuleParams::ProjBundle { r }) => {
            if r % 2 == 1 {
                return Err(Error::ParityViolation {
                    rule: "PbfEvenIso",
                    required: "even relative dimension r",
                    got: i64::from(r),
                });
            }
            Ok(RuleApplication {
                shift: i64::from(r),
                twist: relative_canonical_twist(r),
            })
        }
        (Rule::PbfOddVanish, RuleParams::ProjBundle { r }) => {
            if r % 2 == 0 {
                return Err(Error::ParityViolation {
                    rule: "PbfOddVanish",
                    required: "odd relative dimension r",
                    got: i64::from(r),
                });
            }
            Ok(RuleApplication {
                shift: 0,
                twist: TwistClass::TRIVIAL,
            })
        }
        (rule, params) => Err(Error::HypothesisFailed {
            rule: rule.name(),
            detail: format!("parameters {params:?} do not fit this rule"),
        }),
    }
}

/// One recorded rule application.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: Rule,
    pub n: u32,
    pub shift: i64,
    pub twist: TwistClass,
    pub cite: String,
}

/// Ordered record of the rule applications of one decomposition, outermost
/// first; parameters strictly decrease down to 1.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DerivationTrace {
    steps: Vec<TraceStep>,
}

impl DerivationTrace {
    pub fn steps(&self) -> &[TraceStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, TraceStep> {
        self.steps.iter()
    }
}

fn base_case_cite() -> String {
    "OG_+(1,E) is the base S itself, so W^tot(OG_+(1,E)) = W^tot(S): one free rank in degree 0"
        .to_string()
}

fn odd_split_cite(n: u32) -> String {
    format!(
        "n odd: W^tot(OG_+({n})) = W^tot(OG_+({s}))[-(2n-3) = -{shift}] (+) W^tot(OG_+({s})); \
         the twist [omega_theta] vanishes in Pic/2",
        s = n - 2,
        shift = 2 * n - 3
    )
}

fn even_split_cite(n: u32, trivial_det: bool) -> String {
    let substitution = if trivial_det {
        "; DetEnTilde is trivial since det E is"
    } else {
        ""
    };
    format!(
        "n even: W^tot(OG_+({n})) = W^tot(OG_+({s}))[-(n-1) = -{shift}, DetEnTilde] \
         (+) W^tot(OG_+({s})){substitution}",
        s = n - 1,
        shift = n - 1
    )
}

/// Runs the recursion down to n = 1 and returns the resulting module with
/// its trace. With `trivial_det` the DetEnTilde twist introduced by even
/// steps is substituted away; without it the twist is kept, and if it
/// survives to the final module the decomposition is reported as unresolved.
pub fn decompose(n: u32, trivial_det: bool) -> Result<(GradedWittModule, DerivationTrace)> {
    assert!(n >= 1, "spinor parameter must be at least 1");
    fn go(n: u32, trivial_det: bool, steps: &mut Vec<TraceStep>) -> Result<GradedWittModule> {
        if n == 1 {
            let app = check_rule(Rule::BaseCase, RuleParams::Spinor { n })?;
            steps.push(TraceStep {
                rule: Rule::BaseCase,
                n,
                shift: app.shift,
                twist: app.twist,
                cite: base_case_cite(),
            });
            return Ok(GradedWittModule::from_generators(vec![Generator {
                degree: DegreeClass::new(0),
                twist: TwistClass::TRIVIAL,
                provenance: Provenance::Label("BaseCase".to_string()),
            }]));
        }
        if n % 2 == 1 {
            let app = check_rule(Rule::OddSplit, RuleParams::Spinor { n })?;
            steps.push(TraceStep {
                rule: Rule::OddSplit,
                n,
                shift: app.shift,
                twist: app.twist,
                cite: odd_split_cite(n),
            });
            let sub = go(n - 2, trivial_det, steps)?;
            Ok(sub.shift(app.shift, app.twist).direct_sum(&sub))
        } else {
            let app = check_rule(Rule::EvenSplit, RuleParams::Spinor { n })?;
            let twist = if trivial_det {
                TwistClass::TRIVIAL
            } else {
                app.twist
            };
            steps.push(TraceStep {
                rule: Rule::EvenSplit,
                n,
                shift: app.shift,
                twist,
                cite: even_split_cite(n, trivial_det),
            });
            let sub = go(n - 1, trivial_det, steps)?;
            Ok(sub.shift(app.shift, twist).direct_sum(&sub))
        }
    }
    let mut steps = Vec::new();
    let module = go(n, trivial_det, &mut steps)?;
    if !trivial_det {
        let retained = module
            .generators()
            .iter()
            .filter(|g| g.twist.contains(LineBundleSymbol::DetEnTilde))
            .count() as u64;
        if retained > 0 {
            return Err(Error::NontrivialTwistUnresolved { n, retained });
        }
    }
    Ok((module, DerivationTrace { steps }))
}

/// Number of cells of the variety, the rank seen by K-theory and Chow
/// theory: 2^(n-1).
pub fn cell_count(n: u32) -> u64 {
    assert!((1..=64).contains(&n), "cell_count needs 1 <= n <= 64");
    1u64 << (n - 1)
}

/// Agreement report of the two pipelines for one n.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CrossCheckReport {
    pub n: u32,
    /// Rank of the Witt module, 2^(n/2) with the exponent rounded down.
    pub witt_rank: u64,
    /// Rank seen by K-theory and Chow theory, 2^(n-1).
    pub cell_count: u64,
}

/// Shape difference between the decomposition and the enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MismatchReport {
    pub n: u32,
    /// (degree, twist) pairs the enumeration has and the decomposition lacks.
    pub missing: Vec<(i64, TwistClass)>,
    /// (degree, twist) pairs the decomposition has and the enumeration lacks.
    pub extra: Vec<(i64, TwistClass)>,
}

impl fmt::Display for MismatchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "decomposition and enumeration disagree at n = {}: ",
            self.n
        )?;
        let list = |pairs: &[(i64, TwistClass)]| {
            pairs
                .iter()
                .map(|(d, t)| format!("(degree {d}, twist {t})"))
                .collect::<Vec<_>>()
                .join(", ")
        };
        if !self.missing.is_empty() {
            write!(f, "missing {}", list(&self.missing))?;
            if !self.extra.is_empty() {
                write!(f, "; ")?;
            }
        }
        if !self.extra.is_empty() {
            write!(f, "extra {}", list(&self.extra))?;
        }
        Ok(())
    }
}

/// Compares the (degree, twist) multisets of the decomposition with trivial
/// determinant and of the module built from the enumerated diagrams.
pub fn cross_check(n: u32) -> Result<CrossCheckReport> {
    let (decomposed, _) = decompose(n, true)?;
    let enumerated = GradedWittModule::from_diagrams(&recursive_enumerate(n));
    let got = decomposed.degree_twist_multiset();
    let want = enumerated.degree_twist_multiset();
    if got != want {
        let missing = multiset_difference(&want, &got);
        let extra = multiset_difference(&got, &want);
        return Err(Error::Mismatch(MismatchReport { n, missing, extra }));
    }
    Ok(CrossCheckReport {
        n,
        witt_rank: count(n),
        cell_count: cell_count(n),
    })
}

/// Elements of `a` minus `b` with multiset multiplicity; both inputs sorted.
fn multiset_difference(a: &[(i64, TwistClass)], b: &[(i64, TwistClass)]) -> Vec<(i64, TwistClass)> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() {
        if j >= b.len() || a[i] < b[j] {
            out.push(a[i]);
            i += 1;
        } else if a[i] == b[j] {
            i += 1;
            j += 1;
        } else {
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twist::twist_add;

    #[test]
    fn base_case_is_one_rank_in_degree_zero() {
        let (m, trace) = decompose(1, true).unwrap();
        assert_eq!(m.rank(), 1);
        assert_eq!(m.generators()[0].degree.degree(), 0);
        assert!(m.generators()[0].twist.is_trivial());
        assert_eq!(trace.len(), 1);
        assert_eq!(trace.steps()[0].rule, Rule::BaseCase);
    }

    #[test]
    fn n2_is_one_even_split_over_the_base() {
        let (m, trace) = decompose(2, true).unwrap();
        let degrees: Vec<i64> = m.generators().iter().map(|g| g.degree.degree()).collect();
        assert_eq!(degrees, vec![0, 1]);
        let rules: Vec<Rule> = trace.iter().map(|s| s.rule).collect();
        assert_eq!(rules, vec![Rule::EvenSplit, Rule::BaseCase]);
        assert_eq!(trace.steps()[0].shift, 1);
    }

    #[test]
    fn n7_trace_is_three_odd_splits_then_the_base() {
        let (m, trace) = decompose(7, true).unwrap();
        let degrees: Vec<i64> = m.generators().iter().map(|g| g.degree.degree()).collect();
        assert_eq!(degrees, vec![0, 3, 7, 10, 11, 14, 18, 21]);
        let summary: Vec<(Rule, u32, i64)> = trace.iter().map(|s| (s.rule, s.n, s.shift)).collect();
        assert_eq!(
            summary,
            vec![
                (Rule::OddSplit, 7, 11),
                (Rule::OddSplit, 5, 7),
                (Rule::OddSplit, 3, 3),
                (Rule::BaseCase, 1, 0),
            ]
        );
        assert!(trace.iter().all(|s| s.twist.is_trivial()));
    }

    #[test]
    fn decompose_is_deterministic() {
        assert_eq!(decompose(9, true).unwrap(), decompose(9, true).unwrap());
    }

    #[test]
    fn trace_shifts_follow_the_rule_formulas_and_parameters_decrease() {
        for n in 1..=20 {
            let (_, trace) = decompose(n, true).unwrap();
            let mut previous = None;
            for step in trace.iter() {
                match step.rule {
                    Rule::OddSplit => assert_eq!(step.shift, i64::from(2 * step.n - 3)),
                    Rule::EvenSplit => assert_eq!(step.shift, i64::from(step.n - 1)),
                    Rule::BaseCase => {
                        assert_eq!(step.n, 1);
                        assert_eq!(step.shift, 0);
                    }
                    other => panic!("unexpected rule {other} in a decomposition trace"),
                }
                if let Some(prev) = previous {
                    assert!(step.n < prev, "parameters must strictly decrease");
                }
                previous = Some(step.n);
            }
            assert_eq!(previous, Some(1), "every trace ends at the base case");
        }
    }

    #[test]
    fn no_generator_ever_carries_the_pfaffian_twist() {
        for n in 1..=20 {
            let (m, _) = decompose(n, true).unwrap();
            for class in TwistClass::all().filter(|c| c.contains(LineBundleSymbol::O1)) {
                assert!(m.twisted_component(class).is_zero(), "n = {n}");
            }
        }
    }

    #[test]
    fn cross_check_passes_up_to_n_20() {
        for n in 1..=20 {
            let report = cross_check(n).unwrap();
            assert_eq!(report.witt_rank, count(n));
            assert_eq!(report.cell_count, 1 << (n - 1));
        }
        let r7 = cross_check(7).unwrap();
        assert_eq!((r7.witt_rank, r7.cell_count), (8, 64));
        let r12 = cross_check(12).unwrap();
        assert_eq!((r12.witt_rank, r12.cell_count), (64, 2048));
        let r1 = cross_check(1).unwrap();
        assert_eq!((r1.witt_rank, r1.cell_count), (1, 1));
    }

    #[test]
    fn nontrivial_determinant_is_reported_on_even_n() {
        let err = decompose(4, false).unwrap_err();
        match err {
            Error::NontrivialTwistUnresolved { n, retained } => {
                assert_eq!(n, 4);
                assert_eq!(retained, 2);
            }
            other => panic!("expected NontrivialTwistUnresolved, got {other}"),
        }
    }

    #[test]
    fn odd_n_does_not_need_the_determinant_assumption() {
        let (with, _) = decompose(9, true).unwrap();
        let (without, _) = decompose(9, false).unwrap();
        assert_eq!(with, without);
    }

    #[test]
    fn rule_gating_rejects_wrong_parities() {
        assert!(matches!(
            check_rule(Rule::OddSplit, RuleParams::Spinor { n: 4 }),
            Err(Error::ParityViolation { .. })
        ));
        assert!(matches!(
            check_rule(Rule::EvenSplit, RuleParams::Spinor { n: 7 }),
            Err(Error::ParityViolation { .. })
        ));
        assert!(matches!(
            check_rule(Rule::PbfEvenIso, RuleParams::ProjBundle { r: 3 }),
            Err(Error::ParityViolation { .. })
        ));
        assert!(matches!(
            check_rule(Rule::PbfOddVanish, RuleParams::ProjBundle { r: 2 }),
            Err(Error::ParityViolation { .. })
        ));
        assert!(matches!(
            check_rule(Rule::BaseCase, RuleParams::Spinor { n: 2 }),
            Err(Error::HypothesisFailed { .. })
        ));
        assert!(matches!(
            check_rule(Rule::OddSplit, RuleParams::ProjBundle { r: 3 }),
            Err(Error::HypothesisFailed { .. })
        ));
    }

    #[test]
    fn admissible_rules_report_their_shift_and_twist() {
        let app = check_rule(Rule::PbfEvenIso, RuleParams::ProjBundle { r: 2 }).unwrap();
        assert_eq!(app.shift, 2);
        assert_eq!(
            app.twist,
            twist_add(
                TwistClass::singleton(LineBundleSymbol::DetE),
                TwistClass::singleton(LineBundleSymbol::O1)
            )
        );
        let app = check_rule(Rule::PbfOddVanish, RuleParams::ProjBundle { r: 3 }).unwrap();
        assert_eq!(app.shift, 0);
        let app = check_rule(Rule::OddSplit, RuleParams::Spinor { n: 7 }).unwrap();
        assert_eq!(app.shift, 11);
        assert!(app.twist.is_trivial());
        let app = check_rule(
            Rule::TwistVanish,
            RuleParams::Twist {
                class: TwistClass::singleton(LineBundleSymbol::O1),
            },
        )
        .unwrap();
        assert_eq!(app.shift, 0);
        assert!(matches!(
            check_rule(
                Rule::TwistVanish,
                RuleParams::Twist {
                    class: TwistClass::TRIVIAL
                }
            ),
            Err(Error::HypothesisFailed { .. })
        ));
    }

    #[test]
    fn trace_json_round_trips() {
        let (_, trace) = decompose(7, true).unwrap();
        let json = serde_json::to_string(&trace).unwrap();
        assert!(json.starts_with(r#"[{"rule":"OddSplit","n":7,"shift":11,"twist":[],"cite":"#));
        let back: DerivationTrace = serde_json::from_str(&json).unwrap();
        assert_eq!(back, trace);
    }

    #[test]
    fn mismatch_reports_display_both_sides() {
        let report = MismatchReport {
            n: 4,
            missing: vec![(3, TwistClass::TRIVIAL)],
            extra: vec![(2, TwistClass::singleton(LineBundleSymbol::O1))],
        };
        let text = report.to_string();
        assert!(text.contains("missing (degree 3, twist {})"));
        assert!(text.contains("extra (degree 2, twist {O1})"));
    }

    #[test]
    fn multiset_difference_respects_multiplicity() {
        let t = TwistClass::TRIVIAL;
        let a = vec![(1, t), (1, t), (2, t)];
        let b = vec![(1, t), (2, t), (2, t)];
        assert_eq!(multiset_difference(&a, &b), vec![(1, t)]);
        assert_eq!(multiset_difference(&b, &a), vec![(2, t)]);
    }
}
