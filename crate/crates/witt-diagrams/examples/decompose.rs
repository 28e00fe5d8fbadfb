//! Runs the recursive decomposition for n = 7 and prints the resulting
//! module together with its citation trace.

use witt_diagrams::decompose;

fn main() {
    let (module, trace) = decompose(7, true).unwrap();
    println!(
        "W^tot(OG_+(7,E)) is free of rank {} over W^tot(S)",
        module.rank()
    );
    for generator in module.generators() {
        println!(
            "  degree {:>2}  residue {}  twist {}",
            generator.degree.degree(),
            generator.degree.residue(),
            generator.twist
        );
    }
    println!("\nderivation trace:");
    for step in trace.iter() {
        println!(
            "  {} at n = {} (shift {}, twist {})",
            step.rule, step.n, step.shift, step.twist
        );
        println!("      {}", step.cite);
    }
}
