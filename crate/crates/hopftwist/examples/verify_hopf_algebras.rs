//! The catalog Hopf algebras and the exact axiom verifier, including the
//! two 72-dimensional bosonizations over S3.
//!
//! Run with: cargo run --release --example verify_hopf_algebras

use hopftwist::catalog::{
    deformed_hopf_prop510, deformed_hopf_sec55, dual_group_algebra, fk3_bosonization_dual,
    fk3_bosonization_group, group_algebra, taft_hopf,
};
use hopftwist::groups::FiniteGroup;
use hopftwist::scalar::CycloNum;

fn main() {
    let s3 = FiniteGroup::symmetric(3);

    let kg = group_algebra(&s3);
    println!("K S3 ({} dim): {}", kg.dim(), kg.verify().summary());

    let kdual = dual_group_algebra(&s3);
    println!("K[S3] ({} dim): {}", kdual.dim(), kdual.verify().summary());

    for n in [2u32, 3] {
        let h = taft_hopf(n).unwrap();
        println!("Taft H_{n} ({} dim): {}", h.dim(), h.verify().summary());
        // Structure-constant duality is an involution; the dual verifies too.
        let d = h.dual();
        println!("Taft H_{n} dual: {}", d.verify().summary());
    }

    let t = std::time::Instant::now();
    let h = fk3_bosonization_group().unwrap();
    println!(
        "B(V) # K S3 ({} dim): {} [{:?}]",
        h.dim(),
        h.verify().summary(),
        t.elapsed()
    );

    let t = std::time::Instant::now();
    let hd = fk3_bosonization_dual().unwrap();
    println!(
        "B(V) # K[S3] ({} dim): {} [{:?}]",
        hd.dim(),
        hd.verify().summary(),
        t.elapsed()
    );

    // The deformed Hopf algebras at the end of the classification.
    let one = CycloNum::from_int(1);
    let p = deformed_hopf_prop510(&one).unwrap();
    println!("deformed bosonization (mu = 1): {}", p.verify().summary());
    let s = deformed_hopf_sec55(
        &CycloNum::from_int(1),
        &CycloNum::from_int(2),
        &CycloNum::from_int(3),
    )
    .unwrap();
    println!("deformed dual bosonization (1,2,3): {}", s.verify().summary());

    // A perturbed algebra fails with the first bad index triple reported.
    let mut bad_mult = kg.mult().clone();
    bad_mult.set_multi(&[1, 2], &[1], CycloNum::one());
    let bad = hopftwist::hopf::HopfAlgebraData::new_unchecked(
        kg.dim(),
        1,
        kg.labels().to_vec(),
        kg.unit().clone(),
        kg.counit().to_vec(),
        bad_mult,
        kg.comult().clone(),
        kg.antipode().clone(),
    );
    println!("perturbed K S3: {}", bad.verify().summary());
}
