//! Finite groups as multiplication tables, subgroup cosets, and the
//! second cohomology H^2(G, mu_N) modulo K^x-coboundaries.
//!
//! Run with: cargo run --example finite_groups_and_cohomology

use hopftwist::cohomology::{check_group_cocycle, compute_h2, MuNCocycle};
use hopftwist::groups::{paper36_group, paper36_normal_subgroup, parse_group_spec, FiniteGroup};

fn main() {
    // Groups come from a small spec language.
    for spec in ["cyclic:6", "sym:3", "prod(cyclic:2,cyclic:2)"] {
        let g = parse_group_spec(spec).unwrap();
        println!("{spec}: order {}, exponent {}", g.order(), g.exponent());
    }

    // The order-36 semidirect product (Z/3 x Z/3) x| Z/4 and its normal
    // (Z/3)^2 subgroup with coset representatives.
    let g36 = paper36_group();
    let f = paper36_normal_subgroup(&g36).unwrap();
    println!(
        "(Z/3xZ/3) x| Z/4: order {}, |F| = {}, coset reps = {:?}",
        g36.order(),
        f.size(),
        f.coset_reps()
    );

    // H^2 for the basic examples.
    for (spec, n) in [("cyclic:4", 4u32), ("cyclic:6", 6), ("sym:3", 6)] {
        let g = parse_group_spec(spec).unwrap();
        let h2 = compute_h2(&g, n);
        println!(
            "H^2({spec}, mu_{n}) invariant factors: {:?}",
            h2.invariant_factors
        );
    }
    let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
    let h2 = compute_h2(&v4, 2);
    println!("H^2(V4, mu_2) invariant factors: {:?}", h2.invariant_factors);

    // The representative is a genuine normalized cocycle and is
    // cohomologous to the explicit bilinear form (-1)^(jk).
    let rep = &h2.representatives[0];
    println!("representative passes the cocycle identity: {}", check_group_cocycle(rep));
    println!(
        "cohomologous to the (-1)^(jk) form: {}",
        h2.cohomologous(rep, &MuNCocycle::v4_nondegenerate())
    );
}
