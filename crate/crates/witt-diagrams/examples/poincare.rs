//! Prints Poincare polynomials of the diagram sets and demonstrates the
//! two-term recursions and the first coefficient collision.

use witt_diagrams::poincare_polynomial;

fn main() {
    for n in 1..=9 {
        println!("P_{n}(q) = {}", poincare_polynomial(n));
    }
    let p7 = poincare_polynomial(7);
    let p5 = poincare_polynomial(5);
    assert_eq!(p7, p5.times_one_plus_q_pow(11));
    println!("odd recursion: P_7 = (1 + q^11) P_5");

    let p9 = poincare_polynomial(9);
    assert!(p9.is_palindromic());
    assert_eq!(p9.coefficient(18), 2);
    println!("P_9 is palindromic and has its first coefficient 2 in degree 18");
}
