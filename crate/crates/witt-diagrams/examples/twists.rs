//! Walks through the Pic/2 twist bookkeeping: the symbol registry, the
//! canonical-bundle twist computations, and a parity gate at work.

use witt_diagrams::{
    check_rule, o_twist, omega_theta_twist, relative_canonical_twist, twist_add, LineBundleSymbol,
    Rule, RuleParams, TwistClass,
};

fn main() {
    let a = TwistClass::from_symbols(&[LineBundleSymbol::DetE, LineBundleSymbol::O1]);
    let b = TwistClass::from_symbols(&[LineBundleSymbol::O1, LineBundleSymbol::E1]);
    println!(
        "{a} + {b} = {} (symmetric difference, every class is self-inverse)",
        twist_add(a, b)
    );
    assert!(twist_add(a, a).is_trivial());

    println!(
        "O(k) twists depend only on k mod 2: O(3) -> {}, O(4) -> {}",
        o_twist(3),
        o_twist(4)
    );

    for n in [3, 5, 7, 99] {
        let theta = omega_theta_twist(n).unwrap();
        println!("theta twist at n = {n}: {theta}");
        assert!(theta.is_trivial());
    }

    for r in 0..4 {
        println!(
            "relative canonical twist of a P^{r} bundle: {}",
            relative_canonical_twist(r)
        );
    }

    let err = check_rule(Rule::OddSplit, RuleParams::Spinor { n: 6 }).unwrap_err();
    println!("applying OddSplit at n = 6 is refused: {err}");
}
