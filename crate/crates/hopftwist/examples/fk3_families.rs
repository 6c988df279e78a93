//! The two 72-dimensional deformation families over S3: W_(lambda, mu)
//! with its generator twist, and W_(la, lb, lc) with its relation and
//! symmetry structure.
//!
//! Run with: cargo run --release --example fk3_families

use hopftwist::catalog::{
    fk3_deformation_dual, fk3_deformation_group, fk3_group_generator_twist, fk3_group_presented,
    fk3_index, s3, S3_ID_12, S3_ID_13, S3_ID_23,
};
use hopftwist::deform::extend_generator_twist;
use hopftwist::invariants::{basic_invariant, InvariantSpec};
use hopftwist::scalar::CycloNum;
use hopftwist::tensor::{Permutation, SparseVec};

fn main() {
    let int = CycloNum::from_int;

    // W_(1,1): built from the presentation, coaction extended from the
    // generators, T assembled from the generator twist.
    let (_, w) = fk3_deformation_group(&int(1), &int(1)).unwrap();
    println!("W_(1,1): dim {}, T present: {}", w.dim(), w.inverse_galois().is_some());
    println!("T inverts M: {}", w.check_t_inverts_m().unwrap());

    // The generator-twist images must form an algebra map H -> W^op ⊗ W;
    // the pattern-consistent image for b passes, a mismatched one fails.
    let alg = fk3_group_presented(&int(1), &int(1)).unwrap();
    let good = fk3_group_generator_twist(&alg, false).unwrap();
    println!("pattern-consistent T~: {}", extend_generator_twist(&w, &good).is_ok());
    let mismatched = fk3_group_generator_twist(&alg, true).unwrap();
    match extend_generator_twist(&w, &mismatched) {
        Err(e) => println!("mismatched T~ image for b: rejected ({e})"),
        Ok(_) => println!("mismatched T~ image for b: unexpectedly accepted"),
    }

    // Two depth-3 invariants read off (multiples of) lambda and
    // lambda + mu, separating the deformation parameters.
    let sigma = Permutation::from_one_line(&[1, 4, 3, 2]).unwrap();
    let f_a = fk3_index(1, 0);
    let (h_a, h_b, h_c) = (fk3_index(1, 0), fk3_index(2, 0), fk3_index(3, 0));
    let spec1 = InvariantSpec::new(3, sigma.clone(), f_a, vec![h_b, h_a, h_b]).unwrap();
    let spec2 = InvariantSpec::new(3, sigma, f_a, vec![h_b, h_c, h_a]).unwrap();
    for (l, m) in [(0i64, 0i64), (1, 0), (0, 1), (1, 1)] {
        let (_, wlm) = fk3_deformation_group(&int(l), &int(m)).unwrap();
        let v1 = basic_invariant(&wlm, &spec1).unwrap();
        let v2 = basic_invariant(&wlm, &spec2).unwrap();
        println!("W_({l},{m}): spec1 = {v1}, spec2 = {v2}");
    }

    // The dual family: relations and the derived cube identity.
    let (la, lb, lc) = (int(1), int(2), int(3));
    let (_, wd) = fk3_deformation_dual(&la, &lb, &lc).unwrap();
    let n = wd.dim();
    let letter = |v: usize| {
        let mut out = SparseVec::zero(vec![n]);
        for gid in 0..6 {
            out.add_to(fk3_index(v + 1, gid) as u64, CycloNum::one());
        }
        out
    };
    let (wa, wb, wc) = (letter(0), letter(1), letter(2));
    println!(
        "W_(1,2,3): w_a^2 = la: {}",
        wd.multiply(&wa, &wa) == wd.unit().scale(&la)
    );
    let lhs = wa.scale(&(&lb - &lc));
    let rhs = wd
        .multiply(&wd.multiply(&wc, &wb), &wc)
        .sub(&wd.multiply(&wd.multiply(&wb, &wc), &wb));
    println!("(lb - lc) w_a = w_c w_b w_c - w_b w_c w_b: {}", lhs == rhs);
    // Straightening through the idempotents.
    let g = s3();
    let e = |gid: usize| SparseVec::basis(vec![n], &[fk3_index(0, gid)]);
    let ok = (0..6).all(|gid| {
        wd.multiply(&e(gid), &wa) == wd.multiply(&wa, &e(g.op(S3_ID_12, gid)))
            && wd.multiply(&e(gid), &wb) == wd.multiply(&wb, &e(g.op(S3_ID_23, gid)))
            && wd.multiply(&e(gid), &wc) == wd.multiply(&wc, &e(g.op(S3_ID_13, gid)))
    });
    println!("e_g w_x = w_x e_(sigma_x g) for all g: {ok}");
}
