//! Basic invariants and fingerprints: sound refutation of isomorphism,
//! gauge invariance, and the projector family of the dual-group case.
//!
//! Run with: cargo run --example fingerprints_and_compare

use hopftwist::catalog::{dual_group_deformation, group_cocycle_deformation, lift_group_cocycle};
use hopftwist::cohomology::MuNCocycle;
use hopftwist::deform::Deformation;
use hopftwist::invariants::{
    compare_fingerprints, fingerprint, projector_from_t, Verdict,
};
use hopftwist::groups::Subgroup;
use hopftwist::scalar::{rat, CycloNum};
use hopftwist::tensor::{rank, SparseVec};

fn main() {
    // K^alpha V4 vs K V4: distinguished at depth 3 (the commutator value
    // -1 shows up only for the nondegenerate cocycle).
    let alpha = MuNCocycle::v4_nondegenerate();
    let (kg, w) = group_cocycle_deformation(&alpha).unwrap();
    let trivial = Deformation::trivial(kg.clone());
    let fp_w = fingerprint(&w, 3, None, None).unwrap();
    let fp_t = fingerprint(&trivial, 3, None, None).unwrap();
    println!(
        "K^alpha V4 contains the value -1: {}",
        fp_w.entries.values().any(|v| v == &CycloNum::from_int(-1))
    );
    match compare_fingerprints(&fp_w, &fp_t).unwrap() {
        Verdict::Distinct { first_difference } => {
            println!("twisted vs trivial at depth 3: distinct, first difference {first_difference:?}")
        }
        v => println!("unexpected: {v:?}"),
    }

    // Gauge-equivalent cocycles are indistinguishable at any depth; check 2.
    let c = lift_group_cocycle(&kg, &alpha).unwrap();
    let mut nu = SparseVec::zero(vec![4]);
    nu.add_to(0, CycloNum::one());
    nu.add_to(1, CycloNum::from_int(5));
    nu.add_to(2, CycloNum::from_rational(rat(-2, 3)));
    nu.add_to(3, CycloNum::one());
    let gauged = c.gauge(&nu).unwrap();
    let fp_g = fingerprint(&gauged.twist().unwrap(), 2, None, None).unwrap();
    let fp_w2 = fingerprint(&w, 2, None, None).unwrap();
    println!(
        "gauged cocycle vs original at depth 2: {:?}",
        compare_fingerprints(&fp_w2, &fp_g).unwrap()
    );

    // The dual-group projector family E_f = m tau T_(e_(f^-1)): rank-one
    // idempotents summing to the identity.
    let g = alpha.group().clone();
    let (_, wd) = dual_group_deformation(&g, &Subgroup::full(&g), &alpha).unwrap();
    for f in 0..4usize {
        let e = projector_from_t(&wd, &SparseVec::basis(vec![4], &[g.inv(f)])).unwrap();
        println!(
            "E_{f}: idempotent {}, rank {}",
            e.then(&e).unwrap() == e,
            rank(&e)
        );
    }
}
