//! The Taft deformation family W_(a,b): comodule-algebra verification,
//! the Galois map M and its exact inverse, and the one-parameter moduli
//! visible through fingerprints (independent of a, separated by b).
//!
//! Run with: cargo run --release --example taft_deformations

use hopftwist::catalog::taft_deformation;
use hopftwist::deform::Deformation;
use hopftwist::invariants::{compare_fingerprints, fingerprint, Verdict};
use hopftwist::scalar::CycloNum;

fn main() {
    let n = 3u32;
    let int = CycloNum::from_int;

    let (parent, w) = taft_deformation(n, &int(1), &int(2)).unwrap();
    println!(
        "W_(1,2) over Taft H_{n}: dim {}, provenance {}",
        w.dim(),
        w.provenance().as_str()
    );
    println!("comodule axioms: {}", w.verify().summary());
    println!("T inverts M: {}", w.check_t_inverts_m().unwrap());

    // Fingerprints do not see a ...
    let fp_a1 = fingerprint(&w, 2, None, None).unwrap();
    let (_, w_a2) = taft_deformation(n, &int(2), &int(2)).unwrap();
    let fp_a2 = fingerprint(&w_a2, 2, None, None).unwrap();
    println!(
        "W_(1,2) vs W_(2,2) at depth 2: {:?}",
        compare_fingerprints(&fp_a1, &fp_a2).unwrap()
    );

    // ... but separate different b's.
    let (_, w_b0) = taft_deformation(n, &int(1), &int(0)).unwrap();
    let fp_b0 = fingerprint(&w_b0, 2, None, None).unwrap();
    match compare_fingerprints(&fp_a1, &fp_b0).unwrap() {
        Verdict::Distinct { first_difference } => {
            let (l, sigma, f, hs) = first_difference;
            println!(
                "W_(1,2) vs W_(1,0): distinct; first difference at l={l}, sigma={sigma:?}, f={}, hs={:?}",
                parent.labels()[f],
                hs.iter().map(|&h| parent.labels()[h].clone()).collect::<Vec<_>>()
            );
        }
        v => println!("unexpected verdict: {v:?}"),
    }

    // W_(1,0) is the trivial deformation in disguise.
    let trivial = Deformation::trivial(parent);
    let fp_triv = fingerprint(&trivial, 2, None, None).unwrap();
    println!(
        "W_(1,0) vs trivial at depth 2: {:?}",
        compare_fingerprints(&fp_b0, &fp_triv).unwrap()
    );
}
