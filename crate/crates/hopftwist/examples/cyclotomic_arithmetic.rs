//! Exact arithmetic in cyclotomic fields: power-basis representation,
//! mixed-order lifting, inverses, and Galois automorphisms.
//!
//! Run with: cargo run --example cyclotomic_arithmetic

use hopftwist::scalar::{parse_scalar, rat, CycloNum};

fn main() {
    // zeta_4 is the imaginary unit: its square is -1.
    let i = CycloNum::zeta(4);
    println!("zeta_4^2        = {}", &i * &i);

    // The three cube roots of unity sum to zero.
    let z = CycloNum::zeta(3);
    let sum = &(&CycloNum::one() + &z) + &(&z * &z);
    println!("1 + z3 + z3^2   = {sum}");

    // Division is exact: 1 / zeta_3 = zeta_3^2.
    let inv = CycloNum::one().checked_div(&z).unwrap();
    println!("1 / zeta_3      = {inv}   (zeta_3^2 = {})", &z * &z);

    // Mixed orders lift into the compositum: zeta_3 * zeta_4 in Q(zeta_12).
    let p = &z * &i;
    println!("zeta_3 * zeta_4 = {p}   (order {})", p.order());

    // Nontrivial inverse in Q(zeta_5).
    let x = &CycloNum::one() + &CycloNum::zeta(5);
    let xinv = x.inv().unwrap();
    println!("(1 + zeta_5)^-1 = {xinv}");
    println!("check           = {}", &x * &xinv);

    // Galois automorphism zeta -> zeta^2 on Q(zeta_5); rationals are fixed.
    let y = &x + &CycloNum::from_rational(rat(3, 7));
    println!("sigma_2({y}) = {}", y.galois(2).unwrap());

    // The text syntax used by all JSON bundles.
    let parsed = parse_scalar("3/2*z^2 - 1", 5).unwrap();
    println!("parse '3/2*z^2 - 1' @ N=5 -> {parsed}");
}
