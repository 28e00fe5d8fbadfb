//! Lists the even shifted diagrams in the staircase for a few n and checks
//! the counting law against the closed form.

use witt_diagrams::{count, recursive_enumerate};

fn main() {
    for n in [1, 2, 3, 4, 7] {
        let set = recursive_enumerate(n);
        println!(
            "n = {n}: {} diagrams in the staircase of depth {}",
            set.len(),
            n - 1
        );
        for member in set.iter() {
            println!("  {member}  weight {}", member.weight());
        }
        assert_eq!(set.len() as u64, count(n));
    }
    println!(
        "counts match 2^floor(n/2) up to n = 20: {:?}",
        (1..=20).map(count).collect::<Vec<_>>()
    );
}
