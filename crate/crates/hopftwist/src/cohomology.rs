//! Group 2-cocycles valued in roots of unity, `H^2(G, mu_N)`, twisted
//! group algebras, and word invariants.
//!
//! Cocycles are stored additively as exponent tables over `Z/N` with
//! `alpha(g, h) = zeta_N^(exponents[g][h])`, normalized so that
//! `alpha(1, x) = alpha(x, 1) = 1`.
//!
//! `compute_h2` presents the group of cocycle classes *modulo coboundaries
//! of K^x-valued cochains* — the shadow of `H^2(G, K^x)` carried by
//! `mu_N`-valued cocycles. A coboundary `d(phi)` with values in `mu_N` may
//! come from a cochain `phi` valued in the larger group `mu_(N·exp G)`, so
//! the coboundary lattice is built from those.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::groups::FiniteGroup;
use crate::scalar::CycloNum;
use crate::snf::{self, IntMat};
use crate::tensor::{kernel as tensor_kernel, SparseTensor};
use crate::{Error, Result};

/// A normalized group 2-cocycle with values in `mu_N`.
#[derive(Clone, Debug)]
pub struct MuNCocycle {
    group: FiniteGroup,
    n: u32,
    exponents: Vec<Vec<u64>>,
}

impl MuNCocycle {
    /// Build and validate; the table is first normalized by gauging away
    /// `alpha(1,1)` (every 2-cocycle is cohomologous to a normalized one).
    pub fn new(group: FiniteGroup, n: u32, mut exponents: Vec<Vec<u64>>) -> Result<Self> {
        let m = group.order();
        if exponents.len() != m || exponents.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidCocycle("exponent table is not |G| x |G|".into()));
        }
        for row in &mut exponents {
            for v in row.iter_mut() {
                *v %= n as u64;
            }
        }
        let e = group.identity();
        let shift = exponents[e][e];
        if shift != 0 {
            let n64 = n as u64;
            for row in &mut exponents {
                for v in row.iter_mut() {
                    *v = (*v + n64 - shift) % n64;
                }
            }
        }
        let c = MuNCocycle {
            group,
            n,
            exponents,
        };
        if !c.is_normalized() {
            return Err(Error::InvalidCocycle(
                "table is not normalizable: alpha(1,x) or alpha(x,1) nonconstant".into(),
            ));
        }
        if let Some((g, h, k)) = c.first_cocycle_failure() {
            return Err(Error::InvalidCocycle(format!(
                "cocycle identity fails at ({g}, {h}, {k})"
            )));
        }
        Ok(c)
    }

    pub fn trivial(group: FiniteGroup, n: u32) -> Self {
        let m = group.order();
        MuNCocycle {
            group,
            n,
            exponents: vec![vec![0; m]; m],
        }
    }

    /// The nondegenerate cocycle `alpha(x^i y^j, x^k y^l) = (-1)^(jk)` on
    /// `V4 = Z/2 x Z/2` (elements ordered `(i, j) -> 2i + j`).
    pub fn v4_nondegenerate() -> Self {
        let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        let table = (0..4)
            .map(|a: usize| {
                (0..4)
                    .map(|b: usize| {
                        let j = (a % 2) as u64;
                        let k = (b / 2) as u64;
                        (j * k) % 2
                    })
                    .collect()
            })
            .collect();
        MuNCocycle::new(v4, 2, table).expect("bilinear form is a cocycle")
    }

    /// `alpha(x^i y^j, x^k y^l) = zeta_3^(jk)` on `(Z/3)^2`
    /// (elements ordered `(i, j) -> 3i + j`).
    pub fn z3z3_zeta_jk() -> Self {
        let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(3));
        let table = (0..9)
            .map(|a: usize| {
                (0..9)
                    .map(|b: usize| {
                        let j = (a % 3) as u64;
                        let k = (b / 3) as u64;
                        (j * k) % 3
                    })
                    .collect()
            })
            .collect();
        MuNCocycle::new(g, 3, table).expect("bilinear form is a cocycle")
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> u32 {
        self.n
    }

    pub fn exponents(&self) -> &[Vec<u64>] {
        &self.exponents
    }

    pub fn exponent(&self, g: usize, h: usize) -> u64 {
        self.exponents[g][h]
    }

    /// `alpha(g, h)` as a root of unity.
    pub fn value(&self, g: usize, h: usize) -> CycloNum {
        CycloNum::zeta_pow(self.n, self.exponents[g][h] as i64)
    }

    fn is_normalized(&self) -> bool {
        let e = self.group.identity();
        (0..self.group.order())
            .all(|g| self.exponents[e][g] == 0 && self.exponents[g][e] == 0)
    }

    fn first_cocycle_failure(&self) -> Option<(usize, usize, usize)> {
        let m = self.group.order();
        let n = self.n as u64;
        for g in 0..m {
            for h in 0..m {
                let gh = self.group.op(g, h);
                for k in 0..m {
                    // alpha(g,h) + alpha(gh,k) = alpha(h,k) + alpha(g,hk)
                    let lhs = (self.exponents[g][h] + self.exponents[gh][k]) % n;
                    let rhs =
                        (self.exponents[h][k] + self.exponents[g][self.group.op(h, k)]) % n;
                    if lhs != rhs {
                        return Some((g, h, k));
                    }
                }
            }
        }
        None
    }

    /// Pull back along conjugation: `(t^* alpha)(g, h) = alpha(tgt^{-1}, tht^{-1})`.
    pub fn conjugate_by(&self, t: usize) -> MuNCocycle {
        let m = self.group.order();
        let table = (0..m)
            .map(|g| {
                (0..m)
                    .map(|h| self.exponents[self.group.conjugate(t, g)][self.group.conjugate(t, h)])
                    .collect()
            })
            .collect();
        MuNCocycle::new(self.group.clone(), self.n, table).expect("conjugate of a cocycle")
    }

    /// Multiply by the coboundary of a normalized 1-cochain (additive
    /// exponents `phi`, with `phi(identity) = 0`).
    pub fn multiply_coboundary(&self, phi: &[u64]) -> MuNCocycle {
        let m = self.group.order();
        let n = self.n as u64;
        let table = (0..m)
            .map(|g| {
                (0..m)
                    .map(|h| {
                        let d = (phi[g] + phi[h] + n - phi[self.group.op(g, h)] % n) % n;
                        (self.exponents[g][h] + d) % n
                    })
                    .collect()
            })
            .collect();
        MuNCocycle::new(self.group.clone(), self.n, table).expect("coboundary shift of a cocycle")
    }
}

/// Report for a full normalized-cocycle check.
pub fn check_group_cocycle(c: &MuNCocycle) -> bool {
    c.is_normalized() && c.first_cocycle_failure().is_none()
}

/// `H^2(G, mu_N)` modulo `K^x`-coboundaries, presented by invariant factors
/// (each at least 2) and class representatives.
pub struct CohomologyGroup {
    pub invariant_factors: Vec<u64>,
    pub representatives: Vec<MuNCocycle>,
    /// Column basis of the coboundary lattice, kept for membership tests.
    coboundaries: IntMat,
    group: FiniteGroup,
    n: u32,
}

fn nonidentity_elements(g: &FiniteGroup) -> Vec<usize> {
    (0..g.order()).filter(|&x| x != g.identity()).collect()
}

pub fn compute_h2(group: &FiniteGroup, n: u32) -> CohomologyGroup {
    let m = group.order();
    let e_id = group.identity();
    let elems = nonidentity_elements(group);
    let pos: Vec<Option<usize>> = {
        let mut v = vec![None; m];
        for (i, &g) in elems.iter().enumerate() {
            v[g] = Some(i);
        }
        v
    };
    let r1 = elems.len();
    let r2 = r1 * r1;
    let pair = |g: usize, h: usize| -> Option<usize> {
        Some(pos[g]? * r1 + pos[h]?)
    };

    // d2 : C^2 -> C^3 on normalized cochains.
    let r3 = r1 * r1 * r1;
    let mut d2 = IntMat::zero(r3, r2);
    for (ia, &g) in elems.iter().enumerate() {
        for (ib, &h) in elems.iter().enumerate() {
            for (ic, &k) in elems.iter().enumerate() {
                let row = (ia * r1 + ib) * r1 + ic;
                let mut add = |col: Option<usize>, v: i64| {
                    if let Some(c) = col {
                        let cur = d2.at(row, c) + BigInt::from(v);
                        d2.set(row, c, cur);
                    }
                };
                add(pair(h, k), 1);
                add(pair(group.op(g, h), k), -1);
                add(pair(g, group.op(h, k)), 1);
                add(pair(g, h), -1);
            }
        }
    }

    // Cocycle lattice L1 = {x : d2 x = 0 mod N}.
    let mut block = IntMat::zero(r3, r2 + r3);
    for r in 0..r3 {
        for c in 0..r2 {
            block.set(r, c, d2.at(r, c).clone());
        }
        block.set(r, r2 + r, BigInt::from(n));
    }
    let mut l1_gens: Vec<Vec<BigInt>> = snf::integer_kernel(&block)
        .into_iter()
        .map(|v| v[..r2].to_vec())
        .collect();
    for i in 0..r2 {
        let mut v = vec![BigInt::zero(); r2];
        v[i] = BigInt::from(n);
        l1_gens.push(v);
    }
    let u1 = snf::lattice_basis(&IntMat::from_columns(r2, &l1_gens));

    // d1 : C^1 -> C^2 on normalized cochains.
    let mut d1 = IntMat::zero(r2, r1);
    for (ia, &g) in elems.iter().enumerate() {
        for (ib, &h) in elems.iter().enumerate() {
            let row = ia * r1 + ib;
            let mut add = |x: usize, v: i64| {
                if x != e_id {
                    let c = pos[x].unwrap();
                    let cur = d1.at(row, c) + BigInt::from(v);
                    d1.set(row, c, cur);
                }
            };
            add(g, 1);
            add(h, 1);
            add(group.op(g, h), -1);
        }
    }

    // Coboundary lattice L2: x with e·x = d1(phi) mod N·e,
    // phi valued in mu_(N·e), e = exp(G).
    let e_exp = group.exponent() as i64;
    let ne = BigInt::from(n as i64 * e_exp);
    let mut block2 = IntMat::zero(r2, r1 + 2 * r2);
    for r in 0..r2 {
        for c in 0..r1 {
            block2.set(r, c, d1.at(r, c).clone());
        }
        block2.set(r, r1 + r, ne.clone());
        block2.set(r, r1 + r2 + r, BigInt::from(-e_exp));
    }
    let l2_gens: Vec<Vec<BigInt>> = snf::integer_kernel(&block2)
        .into_iter()
        .map(|v| v[r1 + r2..].to_vec())
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    let u2 = snf::lattice_basis(&IntMat::from_columns(r2, &l2_gens));

    // H^2 = L1 / L2 via the Smith form of U1^{-1} U2.
    let x = snf::solve_integral(&u1, &u2)
        .expect("coboundary lattice must sit inside the cocycle lattice");
    let s = snf::snf(&x);
    let mut invariant_factors = Vec::new();
    let mut representatives = Vec::new();
    for (i, d) in s.diag.iter().enumerate() {
        let d = d.abs();
        if d <= BigInt::from(1) {
            continue;
        }
        let dv = u64::try_from(&d).expect("invariant factor fits in u64");
        invariant_factors.push(dv);
        // Generator of this cyclic factor: column i of U1 · Pinv(X).
        let mut gen = vec![BigInt::zero(); r2];
        for r in 0..r2 {
            let mut acc = BigInt::zero();
            for k in 0..r2 {
                acc += u1.at(r, k) * s.pinv.at(k, i);
            }
            gen[r] = acc;
        }
        let mut table = vec![vec![0u64; m]; m];
        for (ia, &g) in elems.iter().enumerate() {
            for (ib, &h) in elems.iter().enumerate() {
                let v = &gen[ia * r1 + ib] % BigInt::from(n);
                let v = if v.is_negative() { v + BigInt::from(n) } else { v };
                table[g][h] = u64::try_from(&v).unwrap();
            }
        }
        representatives.push(
            MuNCocycle::new(group.clone(), n, table)
                .expect("representative column satisfies the cocycle identity"),
        );
    }
    CohomologyGroup {
        invariant_factors,
        representatives,
        coboundaries: u2,
        group: group.clone(),
        n,
    }
}

impl CohomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Is the cocycle a `K^x`-coboundary (cohomologous to the trivial one)?
    pub fn is_coboundary(&self, c: &MuNCocycle) -> bool {
        assert_eq!(c.order(), self.n);
        let elems = nonidentity_elements(&self.group);
        let r1 = elems.len();
        let mut x = vec![BigInt::zero(); r1 * r1];
        for (ia, &g) in elems.iter().enumerate() {
            for (ib, &h) in elems.iter().enumerate() {
                x[ia * r1 + ib] = BigInt::from(c.exponent(g, h));
            }
        }
        snf::lattice_contains(&self.coboundaries, &x)
    }

    /// Are two cocycles in the same class?
    pub fn cohomologous(&self, a: &MuNCocycle, b: &MuNCocycle) -> bool {
        let m = self.group.order();
        let n = self.n as u64;
        let diff = (0..m)
            .map(|g| {
                (0..m)
                    .map(|h| (a.exponent(g, h) + n - b.exponent(g, h)) % n)
                    .collect()
            })
            .collect();
        let d = MuNCocycle::new(self.group.clone(), self.n, diff)
            .expect("difference of cocycles is a cocycle");
        self.is_coboundary(&d)
    }
}

/// The twisted group algebra `K^alpha F` on the basis `{U_f}`.
pub struct TwistedGroupAlgebra {
    cocycle: MuNCocycle,
    mult: SparseTensor,
}

pub fn twisted_group_algebra(alpha: &MuNCocycle) -> Result<TwistedGroupAlgebra> {
    if !check_group_cocycle(alpha) {
        return Err(Error::InvalidCocycle("invalid cocycle table".into()));
    }
    let m = alpha.group().order();
    let mut mult = SparseTensor::new(vec![m, m], vec![m]);
    for g in 0..m {
        for h in 0..m {
            mult.set_multi(&[g, h], &[alpha.group().op(g, h)], alpha.value(g, h));
        }
    }
    Ok(TwistedGroupAlgebra {
        cocycle: alpha.clone(),
        mult,
    })
}

impl TwistedGroupAlgebra {
    pub fn mult(&self) -> &SparseTensor {
        &self.mult
    }

    pub fn cocycle(&self) -> &MuNCocycle {
        &self.cocycle
    }

    /// Exact dimension of the center, by solving the centrality system.
    pub fn center_dimension(&self) -> usize {
        let m = self.cocycle.group().order();
        let group = self.cocycle.group();
        // Unknown z = sum_f c_f U_f with z U_g = U_g z for all g; equations
        // indexed by (g, basis element k).
        let mut sys = SparseTensor::new(vec![m], vec![m, m]);
        for g in 0..m {
            for k in 0..m {
                // coefficient of U_k in z·U_g: f with f g = k.
                let f = group.op(k, group.inv(g));
                sys.add_to(f as u64, (g * m + k) as u64, self.cocycle.value(f, g));
                // minus coefficient of U_k in U_g·z: f' with g f' = k.
                let f2 = group.op(group.inv(g), k);
                sys.add_to(f2 as u64, (g * m + k) as u64, -&self.cocycle.value(g, f2));
            }
        }
        tensor_kernel(&sys).expect("well-shaped system").len()
    }

    /// Nondegenerate means the twisted algebra is a full matrix algebra,
    /// equivalently its center is one-dimensional.
    pub fn is_nondegenerate(&self) -> bool {
        let nondeg = self.center_dimension() == 1;
        if nondeg {
            let m = self.cocycle.group().order();
            let root = (m as f64).sqrt().round() as usize;
            assert_eq!(root * root, m, "nondegenerate cocycle on non-square order");
        }
        nondeg
    }
}

pub fn is_nondegenerate(alpha: &MuNCocycle) -> Result<bool> {
    Ok(twisted_group_algebra(alpha)?.is_nondegenerate())
}

/// Evaluate a word `U_(h_1)^(e_1) ... U_(h_r)^(e_r)` in the twisted group
/// algebra; the group word must multiply to the identity, and the result is
/// the scalar `lambda` with product `= lambda · U_1`.
pub fn uct_evaluate(alpha: &MuNCocycle, word: &[(usize, i64)]) -> Result<CycloNum> {
    let group = alpha.group();
    let mut cur = group.identity();
    for &(h, e) in word {
        let x = if e >= 0 { h } else { group.inv(h) };
        cur = group.op(cur, x);
    }
    if cur != group.identity() {
        return Err(Error::WordNotIdentity);
    }
    let mut scalar = CycloNum::one();
    let mut cur = group.identity();
    for &(h, e) in word {
        if e >= 0 {
            scalar = &scalar * &alpha.value(cur, h);
            cur = group.op(cur, h);
        } else {
            let hinv = group.inv(h);
            // U_h^{-1} = alpha(h, h^{-1})^{-1} U_(h^{-1}).
            scalar = &scalar * &alpha.value(cur, hinv);
            scalar = scalar.checked_div(&alpha.value(h, hinv))?;
            cur = group.op(cur, hinv);
        }
    }
    Ok(scalar)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::paper36_group;

    #[test]
    fn trivial_table_is_a_cocycle() {
        for g in [FiniteGroup::cyclic(5), FiniteGroup::symmetric(3)] {
            let c = MuNCocycle::trivial(g, 6);
            assert!(check_group_cocycle(&c));
        }
    }

    #[test]
    fn v4_bilinear_form_is_a_cocycle_and_flip_breaks_it() {
        let c = MuNCocycle::v4_nondegenerate();
        assert!(check_group_cocycle(&c));
        let mut table = c.exponents().to_vec();
        // Flip one non-identity entry.
        table[1][1] = (table[1][1] + 1) % 2;
        assert!(MuNCocycle::new(c.group().clone(), 2, table).is_err());
    }

    #[test]
    fn h2_of_cyclic_groups_is_trivial() {
        for n in 2..=6 {
            let g = FiniteGroup::cyclic(n);
            let h2 = compute_h2(&g, n as u32);
            assert!(h2.is_trivial(), "H^2(Z/{n}) should vanish");
        }
        // Also with a coefficient order that does not match the group order.
        let h2 = compute_h2(&FiniteGroup::cyclic(4), 2);
        assert!(h2.is_trivial());
    }

    #[test]
    fn h2_of_v4_is_z2_with_brute_force_oracle() {
        let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        let h2 = compute_h2(&v4, 2);
        assert_eq!(h2.invariant_factors, vec![2]);
        assert_eq!(h2.representatives.len(), 1);
        assert!(check_group_cocycle(&h2.representatives[0]));
        // The representative is in the nontrivial class.
        assert!(!h2.is_coboundary(&h2.representatives[0]));
        assert!(h2.is_coboundary(&MuNCocycle::trivial(v4.clone(), 2)));
        assert!(h2.cohomologous(&h2.representatives[0], &MuNCocycle::v4_nondegenerate()));

        // Brute-force oracle over all normalized exponent tables.
        let mut cocycles = Vec::new();
        for bits in 0u32..512 {
            let mut table = vec![vec![0u64; 4]; 4];
            let mut b = bits;
            for g in 1..4 {
                for h in 1..4 {
                    table[g][h] = (b & 1) as u64;
                    b >>= 1;
                }
            }
            if let Ok(c) = MuNCocycle::new(v4.clone(), 2, table) {
                cocycles.push(c);
            }
        }
        assert_eq!(cocycles.len(), 16, "|Z^2(V4, mu_2)| = 16");
        // K^x-coboundaries: d(phi) for phi valued in mu_4 with d(phi) in mu_2.
        let mut coboundary_tables = std::collections::BTreeSet::new();
        for p in 0u64..64 {
            let phi = [0, p % 4, (p / 4) % 4, (p / 16) % 4];
            let mut table = vec![vec![0u64; 4]; 4];
            let mut valued_in_mu2 = true;
            for g in 0..4 {
                for h in 0..4 {
                    let v = (phi[g] + phi[h] + 8 - phi[v4.op(g, h)]) % 4;
                    if v % 2 != 0 {
                        valued_in_mu2 = false;
                    }
                    table[g][h] = v / 2;
                }
            }
            if valued_in_mu2 {
                coboundary_tables.insert(table);
            }
        }
        assert_eq!(coboundary_tables.len(), 8, "|B^2| = 8");
        // 16 cocycles / 8 coboundaries = 2 classes.
        for c in &cocycles {
            let in_lattice = h2.is_coboundary(c);
            let brute = coboundary_tables.contains(&c.exponents().to_vec());
            assert_eq!(in_lattice, brute, "lattice and brute force disagree");
        }
    }

    #[test]
    fn h2_of_s3_is_trivial() {
        let h2 = compute_h2(&FiniteGroup::symmetric(3), 6);
        assert!(h2.is_trivial());
    }

    #[test]
    fn h2_with_mismatched_coefficient_orders() {
        let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        // mu_3 carries none of the 2-torsion class.
        assert!(compute_h2(&v4, 3).is_trivial());
        // mu_4 and mu_6 still see the full Z/2.
        assert_eq!(compute_h2(&v4, 4).invariant_factors, vec![2]);
        assert_eq!(compute_h2(&v4, 6).invariant_factors, vec![2]);
        // S3 stays trivial at any order.
        assert!(compute_h2(&FiniteGroup::symmetric(3), 2).is_trivial());
        assert!(compute_h2(&FiniteGroup::symmetric(3), 3).is_trivial());
        // (Z/3)^2 at mu_9: still one Z/3 worth of classes.
        let g9 = FiniteGroup::direct_product(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(3));
        assert_eq!(compute_h2(&g9, 9).invariant_factors, vec![3]);
    }

    #[test]
    fn h2_representatives_are_pairwise_non_cohomologous() {
        let v4 = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        for (g, n) in [(v4, 2u32), (FiniteGroup::direct_product(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(3)), 3)] {
            let h2 = compute_h2(&g, n);
            for (i, a) in h2.representatives.iter().enumerate() {
                for (j, b) in h2.representatives.iter().enumerate() {
                    if i != j {
                        assert!(!h2.cohomologous(a, b));
                    }
                }
            }
        }
    }

    #[test]
    fn h2_of_z3z3_contains_the_zeta_jk_class() {
        let g = FiniteGroup::direct_product(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(3));
        let h2 = compute_h2(&g, 3);
        assert_eq!(h2.invariant_factors, vec![3]);
        assert!(!h2.is_coboundary(&MuNCocycle::z3z3_zeta_jk()));
    }

    #[test]
    fn twisted_algebra_relations() {
        // Trivial cocycle: center dimension = number of conjugacy classes.
        let s3 = FiniteGroup::symmetric(3);
        let triv = twisted_group_algebra(&MuNCocycle::trivial(s3.clone(), 6)).unwrap();
        assert_eq!(triv.center_dimension(), s3.number_of_conjugacy_classes());
        assert!(!triv.is_nondegenerate());

        // V4: U_x U_y = -U_y U_x.
        let a = twisted_group_algebra(&MuNCocycle::v4_nondegenerate()).unwrap();
        let x = 2usize; // (1, 0)
        let y = 1usize; // (0, 1)
        let xy = a.cocycle.group().op(x, y);
        let fwd = a.mult().get(crate::tensor::encode_index(&[4, 4], &[x, y]), xy as u64);
        let bwd = a.mult().get(crate::tensor::encode_index(&[4, 4], &[y, x]), xy as u64);
        assert_eq!(fwd, -&bwd);
        assert!(a.is_nondegenerate());

        // (Z/3)^2: U_x and U_y commute up to a primitive cube root,
        // U_x U_y = zeta^{-1} U_y U_x for alpha = zeta^{jk}.
        let b = twisted_group_algebra(&MuNCocycle::z3z3_zeta_jk()).unwrap();
        let x = 3usize; // (1, 0)
        let y = 1usize; // (0, 1)
        let xy = b.cocycle.group().op(x, y);
        let fwd = b.mult().get(crate::tensor::encode_index(&[9, 9], &[x, y]), xy as u64);
        let bwd = b.mult().get(crate::tensor::encode_index(&[9, 9], &[y, x]), xy as u64);
        assert_eq!(fwd, &CycloNum::zeta_pow(3, -1) * &bwd);
        assert!(b.is_nondegenerate());
    }

    #[test]
    fn uct_word_values() {
        let alpha = MuNCocycle::v4_nondegenerate();
        let g = alpha.group().clone();
        // x_g x_h x_{gh}^{-1} -> alpha(g, h).
        for a in 0..4 {
            for b in 0..4 {
                let ab = g.op(a, b);
                let val = uct_evaluate(&alpha, &[(a, 1), (b, 1), (ab, -1)]).unwrap();
                assert_eq!(val, alpha.value(a, b));
            }
        }
        // Commutator of x and y evaluates to -1.
        let x = 2usize;
        let y = 1usize;
        let c = uct_evaluate(&alpha, &[(x, 1), (y, 1), (x, -1), (y, -1)]).unwrap();
        assert_eq!(c, CycloNum::from_int(-1));
        // Any word under the trivial cocycle evaluates to 1.
        let triv = MuNCocycle::trivial(g.clone(), 2);
        let c = uct_evaluate(&triv, &[(x, 1), (y, 1), (x, -1), (y, -1)]).unwrap();
        assert!(c.is_one());
        // Non-identity words are rejected.
        assert!(matches!(
            uct_evaluate(&alpha, &[(x, 1)]),
            Err(Error::WordNotIdentity)
        ));
    }

    #[test]
    fn uct_is_gauge_invariant_on_balanced_words() {
        let alpha = MuNCocycle::v4_nondegenerate();
        // Words where every group element appears with zero exponent sum.
        let x = 2usize;
        let y = 1usize;
        let words: Vec<Vec<(usize, i64)>> = vec![
            vec![(x, 1), (y, 1), (x, -1), (y, -1)],
            vec![(x, 1), (x, -1)],
            vec![(x, 1), (y, 1), (y, -1), (x, -1)],
        ];
        for seed in 0..8u64 {
            let phi: Vec<u64> = (0..4)
                .map(|i| if i == 0 { 0 } else { (seed >> i) & 1 })
                .collect();
            let gauged = alpha.multiply_coboundary(&phi);
            for w in &words {
                assert_eq!(
                    uct_evaluate(&alpha, w).unwrap(),
                    uct_evaluate(&gauged, w).unwrap()
                );
            }
        }
    }

    #[test]
    fn paper36_exponent_is_twelve() {
        assert_eq!(paper36_group().exponent(), 12);
    }
}
