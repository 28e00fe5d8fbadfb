//! End-to-end self checks. Every check cross-validates two independent
//! computations of the same quantity; together they exercise the whole
//! pipeline from diagram membership to rendered pictures.

use crate::derivation::{check_rule, cross_check, decompose, Rule, RuleParams};
use crate::diagram::{make_diagram, Frame, StrictPartition};
use crate::enumeration::{
    count, oracle_enumerate, poincare_polynomial, recursive_enumerate, DiagramSet,
};
use crate::error::Error;
use crate::render::{parse_inner_segments, render_ascii, render_svg, RenderSpec};
use crate::twist::{
    omega_iota_twist, omega_theta_twist, relative_canonical_twist, LineBundleSymbol, TwistClass,
};
use crate::witt::GradedWittModule;

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

fn check(name: &str, body: impl FnOnce() -> std::result::Result<String, String>) -> CheckResult {
    let (ok, detail) = match body() {
        Ok(detail) => (true, detail),
        Err(detail) => (false, detail),
    };
    CheckResult {
        name: name.to_string(),
        ok,
        detail,
    }
}

/// Runs every check; the exhaustive oracle comparison goes up to `max_n`.
pub fn run_all(max_n: u32) -> Vec<CheckResult> {
    vec![
        check("n7-ground-truth", n7_ground_truth),
        check("oracle-vs-recursion", || oracle_vs_recursion(max_n)),
        check("counting-law", counting_law),
        check("poincare-identities", poincare_identities),
        check("theta-twist-triviality", theta_twist_triviality),
        check("pfaffian-vanishing", pfaffian_vanishing),
        check("decomposition-vs-enumeration", decomposition_vs_enumeration),
        check("rule-gating", rule_gating),
        check("render-round-trip", render_round_trip),
    ]
}

const N7_MEMBERS: [&[i64]; 8] = [
    &[6, 5, 4, 3, 2, 1],
    &[6, 5, 4, 3],
    &[6, 5, 2, 1],
    &[6, 5],
    &[4, 3, 2, 1],
    &[4, 3],
    &[2, 1],
    &[],
];

const N7_WEIGHTS: [u64; 8] = [21, 18, 14, 11, 10, 7, 3, 0];

fn n7_ground_truth() -> std::result::Result<String, String> {
    let set = recursive_enumerate(7);
    let expected: Vec<StrictPartition> = N7_MEMBERS
        .iter()
        .map(|parts| StrictPartition::new(parts).unwrap())
        .collect();
    let got: Vec<StrictPartition> = set.members().to_vec();
    if got != expected {
        return Err(format!("membership list differs: got {got:?}"));
    }
    let weights: Vec<u64> = set.iter().map(|p| p.weight()).collect();
    if weights != N7_WEIGHTS {
        return Err(format!("weights differ: got {weights:?}"));
    }
    Ok("8 members with weights {0,3,7,10,11,14,18,21}".to_string())
}

fn oracle_vs_recursion(max_n: u32) -> std::result::Result<String, String> {
    for n in 1..=max_n {
        let oracle = oracle_enumerate(n).map_err(|e| e.to_string())?;
        let recursive = recursive_enumerate(n);
        if oracle != recursive {
            return Err(format!("sets differ at n = {n}"));
        }
    }
    Ok(format!(
        "exhaustive filter agrees with the recursion for n <= {max_n}"
    ))
}

fn counting_law() -> std::result::Result<String, String> {
    for n in 1..=20 {
        let got = recursive_enumerate(n).len() as u64;
        if got != count(n) {
            return Err(format!("n = {n}: {got} members, expected {}", count(n)));
        }
    }
    Ok("member count is 2^floor(n/2) for n <= 20".to_string())
}

fn poincare_identities() -> std::result::Result<String, String> {
    for n in 1..=20u32 {
        let p = poincare_polynomial(n);
        if p.eval_at_one() != count(n) {
            return Err(format!("n = {n}: P(1) != member count"));
        }
        if !p.is_palindromic() {
            return Err(format!("n = {n}: polynomial is not palindromic"));
        }
        let top = u64::from(n) * u64::from(n - 1) / 2;
        if n >= 2 && p.max_degree() != Some(top) {
            return Err(format!("n = {n}: top degree is not n(n-1)/2"));
        }
        if n >= 3 && n % 2 == 1 {
            let want = poincare_polynomial(n - 2).times_one_plus_q_pow(u64::from(2 * n - 3));
            if p != want {
                return Err(format!("n = {n}: odd recursion identity fails"));
            }
        }
        if n >= 2 && n % 2 == 0 {
            let want = poincare_polynomial(n - 1).times_one_plus_q_pow(u64::from(n - 1));
            if p != want {
                return Err(format!("n = {n}: even recursion identity fails"));
            }
        }
    }
    if poincare_polynomial(9).coefficient(18) != 2 {
        return Err("n = 9: expected coefficient 2 in degree 18".to_string());
    }
    Ok("recursion identities, palindromicity and top degree hold for n <= 20".to_string())
}

fn theta_twist_triviality() -> std::result::Result<String, String> {
    for n in (3..=99u32).step_by(2) {
        let theta = omega_theta_twist(n).map_err(|e| e.to_string())?;
        if !theta.is_trivial() {
            return Err(format!("n = {n}: theta twist {theta} is not trivial"));
        }
        let sum = crate::twist::twist_add(omega_iota_twist(n, 0), omega_iota_twist(n, 1));
        if sum != theta {
            return Err(format!(
                "n = {n}: depth twists do not sum to the theta twist"
            ));
        }
    }
    for n in (4..=98u32).step_by(2) {
        if omega_theta_twist(n).is_ok() {
            return Err(format!("n = {n}: even n must be rejected"));
        }
    }
    Ok("theta twist is trivial for every odd n <= 99 and rejected for even n".to_string())
}

fn pfaffian_vanishing() -> std::result::Result<String, String> {
    for n in 1..=20 {
        let (module, _) = decompose(n, true).map_err(|e| e.to_string())?;
        for class in TwistClass::all().filter(|c| c.contains(LineBundleSymbol::O1)) {
            if !module.twisted_component(class).is_zero() {
                return Err(format!("n = {n}: component twisted by {class} is nonzero"));
            }
        }
    }
    Ok("every component twisted by O1 vanishes for n <= 20".to_string())
}

fn decomposition_vs_enumeration() -> std::result::Result<String, String> {
    for n in 1..=20 {
        cross_check(n).map_err(|e| e.to_string())?;
    }
    let module = GradedWittModule::from_diagrams(&recursive_enumerate(7));
    let table = module.rank_table();
    let expected: Vec<((u8, TwistClass), u64)> = [(0u8, 1u64), (1, 1), (2, 3), (3, 3)]
        .iter()
        .map(|&(r, k)| ((r, TwistClass::TRIVIAL), k))
        .collect();
    let got: Vec<((u8, TwistClass), u64)> = table.into_iter().collect();
    if got != expected {
        return Err(format!("n = 7 rank table differs: got {got:?}"));
    }
    Ok("decomposition matches enumeration for n <= 20; n = 7 ranks are (1,1,3,3)".to_string())
}

fn rule_gating() -> std::result::Result<String, String> {
    let cases: [(Rule, RuleParams); 5] = [
        (Rule::OddSplit, RuleParams::Spinor { n: 4 }),
        (Rule::EvenSplit, RuleParams::Spinor { n: 7 }),
        (Rule::PbfEvenIso, RuleParams::ProjBundle { r: 3 }),
        (Rule::PbfOddVanish, RuleParams::ProjBundle { r: 2 }),
        (Rule::BaseCase, RuleParams::Spinor { n: 3 }),
    ];
    for (rule, params) in cases {
        match check_rule(rule, params) {
            Err(Error::ParityViolation { .. }) | Err(Error::HypothesisFailed { .. }) => {}
            other => {
                return Err(format!(
                    "{rule} with {params:?} must be rejected, got {other:?}"
                ))
            }
        }
    }
    for r in 0..=6u32 {
        let twist = relative_canonical_twist(r);
        let expected_o1 = r % 2 == 0;
        if twist.contains(LineBundleSymbol::O1) != expected_o1
            || !twist.contains(LineBundleSymbol::DetE)
        {
            return Err(format!("relative canonical twist at r = {r} is {twist}"));
        }
        if r % 2 == 0 {
            let app = check_rule(Rule::PbfEvenIso, RuleParams::ProjBundle { r })
                .map_err(|e| e.to_string())?;
            if app.shift != i64::from(r) || app.twist != twist {
                return Err(format!("even bundle rule at r = {r} reports {app:?}"));
            }
        }
    }
    Ok("inadmissible rule applications are rejected; admissible ones report the stated shift and twist"
        .to_string())
}

/// Fixture files, one per member of the n = 7 set in canonical order.
const N7_FIXTURES: [(&[i64], &str); 8] = [
    (
        &[6, 5, 4, 3, 2, 1],
        include_str!("../fixtures/n7_654321.txt"),
    ),
    (&[6, 5, 4, 3], include_str!("../fixtures/n7_6543.txt")),
    (&[6, 5, 2, 1], include_str!("../fixtures/n7_6521.txt")),
    (&[6, 5], include_str!("../fixtures/n7_65.txt")),
    (&[4, 3, 2, 1], include_str!("../fixtures/n7_4321.txt")),
    (&[4, 3], include_str!("../fixtures/n7_43.txt")),
    (&[2, 1], include_str!("../fixtures/n7_21.txt")),
    (&[], include_str!("../fixtures/n7_empty.txt")),
];

fn render_round_trip() -> std::result::Result<String, String> {
    let spec = RenderSpec::default();
    for (parts, fixture) in N7_FIXTURES {
        let diagram = make_diagram(Frame::staircase(6), parts).map_err(|e| e.to_string())?;
        let art = render_ascii(&diagram, &spec);
        if art != fixture {
            return Err(format!(
                "ASCII picture of {diagram} differs from its fixture"
            ));
        }
    }
    let set: DiagramSet = recursive_enumerate(7);
    let svg = render_svg(&set, &spec);
    let parsed = parse_inner_segments(&svg, &spec);
    if parsed.len() != set.len() {
        return Err(format!(
            "expected {} SVG groups, found {}",
            set.len(),
            parsed.len()
        ));
    }
    for (diagram, units) in set.placed().iter().zip(&parsed) {
        let expected: Vec<_> = diagram
            .inner_segment_runs()
            .iter()
            .flat_map(|run| run.unit_segments())
            .collect();
        if units != &expected {
            return Err(format!("SVG inner runs of {diagram} do not parse back"));
        }
    }
    Ok("8 ASCII fixtures match and the SVG gallery parses back to the inner runs".to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass_at_small_max_n() {
        let results = run_all(6);
        for result in &results {
            assert!(result.ok, "{}: {}", result.name, result.detail);
        }
        assert_eq!(results.len(), 9);
    }

    #[test]
    fn check_names_are_unique() {
        let results = run_all(1);
        let mut names: Vec<&str> = results.iter().map(|r| r.name.as_str()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), results.len());
    }
}
