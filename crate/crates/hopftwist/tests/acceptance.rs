//! Acceptance suite: one test per criterion, each asserting exact equality
//! (all arithmetic is exact; there are no tolerances anywhere).

use std::sync::{Arc, OnceLock};

use hopftwist::catalog::*;
use hopftwist::cohomology::{compute_h2, uct_evaluate, MuNCocycle};
use hopftwist::deform::{
    check_hopf_cocycle, check_t_identities, check_twisted_antipode,
    double_twist_from_deformation, Deformation, HopfTwoCocycle,
};
use hopftwist::groups::{paper36_group, paper36_normal_subgroup, FiniteGroup, Subgroup};
use hopftwist::invariants::{
    basic_invariant, compare_fingerprints, fingerprint, galois_fingerprint,
    galois_twist_deformation, projector_from_t, rationality_report, InvariantSpec, Verdict,
};
use hopftwist::scalar::{rat, CycloNum};
use hopftwist::tensor::{rank, Permutation, SparseTensor, SparseVec};

fn v4() -> FiniteGroup {
    FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2))
}

fn int(k: i64) -> CycloNum {
    CycloNum::from_int(k)
}

/// Shared order-36 dual-group deformation and its depth-2 fingerprint
/// (used by criteria 6 and 7).
fn order36() -> &'static (Deformation, hopftwist::invariants::Fingerprint) {
    static CELL: OnceLock<(Deformation, hopftwist::invariants::Fingerprint)> = OnceLock::new();
    CELL.get_or_init(|| {
        let g = paper36_group();
        let f = paper36_normal_subgroup(&g).unwrap();
        let alpha = MuNCocycle::z3z3_zeta_jk();
        let (_, w) = dual_group_deformation(&g, &f, &alpha).unwrap();
        let fp = fingerprint(&w, 2, None, None).unwrap();
        (w, fp)
    })
}

#[test]
fn criterion_01_hopf_axiom_suite() {
    let start = std::time::Instant::now();
    let mut groups: Vec<FiniteGroup> = (2..=6).map(FiniteGroup::cyclic).collect();
    groups.push(v4());
    groups.push(FiniteGroup::symmetric(3));
    groups.push(paper36_group());
    for g in &groups {
        let kg = group_algebra(g);
        assert!(kg.verify().is_pass(), "KG fails for |G| = {}", g.order());
        let kdual = dual_group_algebra(g);
        assert!(kdual.verify().is_pass(), "K[G] fails for |G| = {}", g.order());
    }
    for n in [2u32, 3, 4] {
        // taft_hopf verifies at construction; re-assert explicitly.
        assert!(taft_hopf(n).unwrap().verify().is_pass(), "Taft H_{n}");
    }
    let dim72_start = std::time::Instant::now();
    assert!(fk3_bosonization_group().unwrap().verify().is_pass(), "B(V)#KS3");
    assert!(fk3_bosonization_dual().unwrap().verify().is_pass(), "B(V)#K[S3]");
    assert!(
        deformed_hopf_prop510(&int(1)).unwrap().verify().is_pass(),
        "deformed Hopf algebra at mu = 1"
    );
    assert!(
        deformed_hopf_sec55(&int(1), &int(2), &int(3))
            .unwrap()
            .verify()
            .is_pass(),
        "deformed dual Hopf algebra at (1,2,3)"
    );
    let dim72 = dim72_start.elapsed();
    assert!(
        dim72.as_secs() < 300,
        "dim-72 cases exceeded the 5-minute target: {dim72:?}"
    );
    println!(
        "criterion 1 (Hopf axiom suite): PASS ({:?} total, {dim72:?} for the dim-72 cases)",
        start.elapsed()
    );
}

#[test]
fn criterion_02_cocycle_gamma_machinery() {
    let cocycles: Vec<HopfTwoCocycle> = {
        let ks3 = group_algebra(&FiniteGroup::symmetric(3));
        let kv4 = group_algebra(&v4());
        let k33 = group_algebra(MuNCocycle::z3z3_zeta_jk().group());
        vec![
            HopfTwoCocycle::trivial(ks3),
            lift_group_cocycle(&kv4, &MuNCocycle::v4_nondegenerate()).unwrap(),
            lift_group_cocycle(&k33, &MuNCocycle::z3z3_zeta_jk()).unwrap(),
        ]
    };
    for (i, c) in cocycles.iter().enumerate() {
        let report = check_hopf_cocycle(c.parent(), c.table());
        assert!(report.is_pass(), "cocycle {i}: {}", report.summary());
        // gamma convolution-invertible and alpha * alpha^{-1} = eps ⊗ eps
        // with alpha^{-1} from the closed formula.
        assert!(c.gamma_data().is_ok(), "cocycle {i}: gamma not invertible");
        assert!(
            c.check_inverse_identity().unwrap(),
            "cocycle {i}: alpha * alpha^{{-1}} != eps ⊗ eps"
        );
        // Twisted-antipode identities on every basis element.
        assert!(
            check_twisted_antipode(c).unwrap(),
            "cocycle {i}: twisted antipode identities fail"
        );
    }
    println!("criterion 2 (cocycle/gamma machinery): PASS");
}

#[test]
fn criterion_03_m_t_consistency() {
    let start = std::time::Instant::now();
    let mut deformations: Vec<(String, Deformation)> = Vec::new();

    let (_, w) = group_cocycle_deformation(&MuNCocycle::v4_nondegenerate()).unwrap();
    deformations.push(("K^alpha V4".into(), w));

    let alpha = MuNCocycle::v4_nondegenerate();
    let g4 = alpha.group().clone();
    let (_, w) = dual_group_deformation(&g4, &Subgroup::full(&g4), &alpha).unwrap();
    deformations.push(("dual-group V4".into(), w));

    let alpha9 = MuNCocycle::z3z3_zeta_jk();
    let g9 = alpha9.group().clone();
    let (_, w) = dual_group_deformation(&g9, &Subgroup::full(&g9), &alpha9).unwrap();
    deformations.push(("dual-group (Z/3)^2".into(), w));

    deformations.push(("dual-group order 36".into(), order36().0.clone()));

    for n in [2u32, 3, 4] {
        let (_, w) = taft_deformation(n, &int(1), &int(2)).unwrap();
        deformations.push((format!("Taft W_(1,2) n={n}"), w));
    }

    let (_, w) = fk3_deformation_group(&int(1), &int(1)).unwrap();
    deformations.push(("FK3 W_(1,1)".into(), w));

    for (name, w) in &deformations {
        assert!(
            w.check_t_inverts_m().unwrap(),
            "{name}: T and M are not mutually inverse"
        );
        let ids = check_t_identities(w).unwrap();
        assert!(ids.is_pass(), "{name}: {}", ids.summary());
    }

    // Generator-twist checks for the FK3 T~: the pattern-consistent image
    // for b passes, the mismatched variant is rejected.
    let alg = fk3_group_presented(&int(1), &int(1)).unwrap();
    let (_, w11) = fk3_deformation_group(&int(1), &int(1)).unwrap();
    let good = fk3_group_generator_twist(&alg, false).unwrap();
    assert!(hopftwist::deform::extend_generator_twist(&w11, &good).is_ok());
    let mismatched = fk3_group_generator_twist(&alg, true).unwrap();
    assert!(
        hopftwist::deform::extend_generator_twist(&w11, &mismatched).is_err(),
        "the mismatched image for b must fail the generator checks"
    );
    println!("criterion 3 (M/T consistency): PASS ({:?})", start.elapsed());
}

#[test]
fn criterion_04_group_cohomology() {
    for n in 2..=6usize {
        let h2 = compute_h2(&FiniteGroup::cyclic(n), n as u32);
        assert!(h2.is_trivial(), "H^2(Z/{n}) should vanish");
    }
    let h2v4 = compute_h2(&v4(), 2);
    assert_eq!(h2v4.invariant_factors, vec![2], "H^2(V4, mu_2) = Z/2");

    // Brute-force oracle over all normalized exponent tables for |G| = 4.
    let group = v4();
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
        if let Ok(c) = MuNCocycle::new(group.clone(), 2, table) {
            cocycles.push(c);
        }
    }
    assert_eq!(cocycles.len(), 16, "|Z^2(V4, mu_2)| = 16");
    let classes: std::collections::BTreeSet<bool> = cocycles
        .iter()
        .map(|c| h2v4.is_coboundary(c))
        .collect();
    assert_eq!(classes.len(), 2, "exactly two classes");
    let nontrivial = cocycles.iter().filter(|c| !h2v4.is_coboundary(c)).count();
    assert_eq!(nontrivial, 8, "16 cocycles / 8 coboundaries = 2 classes");

    let h2s3 = compute_h2(&FiniteGroup::symmetric(3), 6);
    assert!(h2s3.is_trivial(), "H^2(S3, mu_6) = 0");
    println!("criterion 4 (group cohomology): PASS");
}

#[test]
fn criterion_05_uct_agreement() {
    let alpha = MuNCocycle::v4_nondegenerate();
    let x = 2usize;
    let y = 1usize;
    let comm = uct_evaluate(&alpha, &[(x, 1), (y, 1), (x, -1), (y, -1)]).unwrap();
    assert_eq!(comm, int(-1), "commutator word evaluates to -1");

    // Exhaustive depth <= 3 enumeration over the canonical bases.
    let (kg, w) = group_cocycle_deformation(&alpha).unwrap();
    let fp = fingerprint(&w, 3, None, None).unwrap();
    assert!(
        fp.entries.values().any(|v| v == &int(-1)),
        "-1 must occur among depth <= 3 invariants of the nondegenerate twist"
    );
    let trivial = Deformation::trivial(kg);
    let fp0 = fingerprint(&trivial, 3, None, None).unwrap();
    assert!(
        fp0.entries.values().all(|v| v != &int(-1)),
        "-1 must not occur for the trivial cocycle"
    );
    // And the two are distinguished at depth 3.
    assert!(matches!(
        compare_fingerprints(&fp, &fp0).unwrap(),
        Verdict::Distinct { .. }
    ));
    println!("criterion 5 (UCT agreement): PASS");
}

#[test]
fn criterion_06_dual_group_identities() {
    // Projector families for F = G in {V4, (Z/3)^2}.
    for alpha in [MuNCocycle::v4_nondegenerate(), MuNCocycle::z3z3_zeta_jk()] {
        let g = alpha.group().clone();
        let n = g.order();
        let (_, w) = dual_group_deformation(&g, &Subgroup::full(&g), &alpha).unwrap();
        let mut sum = SparseTensor::new(vec![n], vec![n]);
        let mut projectors = Vec::new();
        for f in 0..n {
            let e = projector_from_t(&w, &SparseVec::basis(vec![n], &[g.inv(f)])).unwrap();
            assert_eq!(e.then(&e).unwrap(), e, "E_f idempotent");
            assert_eq!(rank(&e), 1, "E_f has rank 1");
            sum = sum.add(&e);
            projectors.push(e);
        }
        assert_eq!(sum, SparseTensor::identity(vec![n]), "sum E_f = id");
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    assert!(
                        projectors[i].then(&projectors[j]).unwrap().is_zero(),
                        "E_f orthogonal"
                    );
                }
            }
        }
    }

    // Coset-sum formula on the order-36 example, both sides independent.
    let g = paper36_group();
    let f = paper36_normal_subgroup(&g).unwrap();
    let (w36, fp36) = order36();
    let _ = w36;
    // The 9-dimensional block deformation on F itself, with the matching
    // element indexing (position in F).
    let f_group = f.as_group(&g);
    let alpha_f = MuNCocycle::new(
        f_group.clone(),
        3,
        MuNCocycle::z3z3_zeta_jk().exponents().to_vec(),
    )
    .unwrap();
    let (_, wf) = dual_group_deformation(&f_group, &Subgroup::full(&f_group), &alpha_f).unwrap();

    // Entries with any index outside F vanish (F is normal).
    for ((_, _, fidx, hs), _) in &fp36.entries {
        assert!(f.contains(*fidx), "nonzero invariant with f outside F");
        for h in hs {
            assert!(f.contains(*h), "nonzero invariant with h outside F");
        }
    }
    // For indices inside F, the invariant is the sum over cosets of the
    // conjugated block invariants.
    let fpos = |x: usize| f.position(x).unwrap();
    let felts: Vec<usize> = f.elements().to_vec();
    for l in 0..=2usize {
        for sigma in Permutation::all(l + 1) {
            for &gelt in &felts {
                for hs in hopftwist::invariants::cartesian_power(&felts, l) {
                    let key = (l, sigma.one_line(), gelt, hs.clone());
                    let lhs = fp36
                        .entries
                        .get(&key)
                        .cloned()
                        .unwrap_or_else(CycloNum::zero);
                    let mut rhs = CycloNum::zero();
                    for i in 0..f.coset_reps().len() {
                        let t = f.coset_reps()[i];
                        let conj = |x: usize| g.op(g.op(g.inv(t), x), t);
                        let spec = InvariantSpec::new(
                            l,
                            sigma.clone(),
                            fpos(conj(gelt)),
                            hs.iter().map(|&h| fpos(conj(h))).collect(),
                        )
                        .unwrap();
                        rhs += &basic_invariant(&wf, &spec).unwrap();
                    }
                    assert_eq!(lhs, rhs, "coset-sum fails at {key:?}");
                }
            }
        }
    }
    println!("criterion 6 (dual-group identities): PASS");
}

#[test]
fn criterion_07_rationality_and_galois() {
    // Every nonzero depth <= 2 fingerprint entry of the order-36
    // deformation over canonical bases lies in Q.
    let (_, fp36) = order36();
    let report = rationality_report(fp36);
    assert!(report.total_nonzero > 0);
    assert!(
        report.all_rational(),
        "irrational entries: {:?}",
        report.irrational_keys.len()
    );

    // gamma(c_W) = c_(gamma W) for j = 2 on the F = G = (Z/3)^2 case.
    let alpha = MuNCocycle::z3z3_zeta_jk();
    let g9 = alpha.group().clone();
    let (_, w) = dual_group_deformation(&g9, &Subgroup::full(&g9), &alpha).unwrap();
    let fp = fingerprint(&w, 2, None, None).unwrap();
    let tw = galois_twist_deformation(&w, 2).unwrap();
    let fp_tw = fingerprint(&tw, 2, None, None).unwrap();
    assert_eq!(galois_fingerprint(&fp, 2).unwrap().entries, fp_tw.entries);
    // The twist is genuinely different pointwise (the fingerprints are not
    // all rational here).
    assert!(fp.entries.values().any(|v| !v.is_rational()));
    println!("criterion 7 (rationality / Galois): PASS");
}

#[test]
fn criterion_08_taft_moduli() {
    for n in [2u32, 3] {
        let mut by_b = Vec::new();
        for b in [0i64, 1, 2] {
            let (_, w1) = taft_deformation(n, &int(1), &int(b)).unwrap();
            let f1 = fingerprint(&w1, 2, None, None).unwrap();
            let (_, w2) = taft_deformation(n, &int(2), &int(b)).unwrap();
            let f2 = fingerprint(&w2, 2, None, None).unwrap();
            assert!(
                matches!(
                    compare_fingerprints(&f1, &f2).unwrap(),
                    Verdict::IndistinguishableAtDepth(2)
                ),
                "n={n}, b={b}: fingerprint must be independent of a"
            );
            by_b.push((b, f1));
        }
        for i in 0..by_b.len() {
            for j in (i + 1)..by_b.len() {
                assert!(
                    matches!(
                        compare_fingerprints(&by_b[i].1, &by_b[j].1).unwrap(),
                        Verdict::Distinct { .. }
                    ),
                    "n={n}: b={} and b={} must be distinguished",
                    by_b[i].0,
                    by_b[j].0
                );
            }
        }
        // W_(1,0) matches the trivial deformation.
        let trivial = Deformation::trivial(taft_hopf(n).unwrap());
        let f0 = fingerprint(&trivial, 2, None, None).unwrap();
        assert!(
            matches!(
                compare_fingerprints(&by_b[0].1, &f0).unwrap(),
                Verdict::IndistinguishableAtDepth(2)
            ),
            "n={n}: W_(1,0) must look trivial"
        );
    }
    println!("criterion 8 (Taft moduli behavior): PASS");
}

/// 2x2 matrices over the cyclotomic field, for the witness checks.
#[derive(Clone, PartialEq, Eq, Debug)]
struct M2([CycloNum; 4]);

impl M2 {
    fn new(a: CycloNum, b: CycloNum, c: CycloNum, d: CycloNum) -> Self {
        M2([a, b, c, d])
    }

    fn scalar(c: &CycloNum) -> Self {
        M2([c.clone(), CycloNum::zero(), CycloNum::zero(), c.clone()])
    }

    fn mul(&self, o: &M2) -> M2 {
        let a = &self.0;
        let b = &o.0;
        M2([
            &(&a[0] * &b[0]) + &(&a[1] * &b[2]),
            &(&a[0] * &b[1]) + &(&a[1] * &b[3]),
            &(&a[2] * &b[0]) + &(&a[3] * &b[2]),
            &(&a[2] * &b[1]) + &(&a[3] * &b[3]),
        ])
    }

    fn add(&self, o: &M2) -> M2 {
        let mut out = self.clone();
        for i in 0..4 {
            out.0[i] = &out.0[i] + &o.0[i];
        }
        out
    }

    fn scale(&self, c: &CycloNum) -> M2 {
        let mut out = self.clone();
        for i in 0..4 {
            out.0[i] = &out.0[i] * c;
        }
        out
    }
}

fn check_r_relations(a: &M2, b: &M2, c: &M2, lambda: &CycloNum, mu: &CycloNum) {
    assert_eq!(a.mul(a), M2::scalar(lambda), "a^2 = lambda");
    assert_eq!(b.mul(b), M2::scalar(lambda), "b^2 = lambda");
    assert_eq!(c.mul(c), M2::scalar(lambda), "c^2 = lambda");
    let cyc1 = a.mul(b).add(&b.mul(c)).add(&c.mul(a));
    assert_eq!(cyc1, M2::scalar(mu), "ab + bc + ca = mu");
    let cyc2 = a.mul(c).add(&c.mul(b)).add(&b.mul(a));
    assert_eq!(cyc2, M2::scalar(mu), "ac + cb + ba = mu");
}

#[test]
fn criterion_09_fk3_families() {
    let start = std::time::Instant::now();
    // Full comodule-algebra suite at the four parameter points.
    let points = [(0i64, 0i64), (1, 0), (0, 1), (1, 1)];
    let mut ws = Vec::new();
    for (l, m) in points {
        let (_, w) = fk3_deformation_group(&int(l), &int(m)).unwrap();
        let report = w.verify();
        assert!(report.is_pass(), "W({l},{m}): {}", report.summary());
        ws.push(((l, m), w));
    }

    // Curated invariant specs separating the four points pairwise. The
    // two specs below evaluate (up to fixed factors) to lambda and to
    // lambda + mu; frozen expected values were computed by this library
    // and cross-checked against the separation requirement.
    let sigma = Permutation::from_one_line(&[1, 4, 3, 2]).unwrap();
    let f_a = fk3_index(1, 0);
    let h_a = fk3_index(1, 0);
    let h_b = fk3_index(2, 0);
    let h_c = fk3_index(3, 0);
    let spec_lambda =
        InvariantSpec::new(3, sigma.clone(), f_a, vec![h_b, h_a, h_b]).unwrap();
    let spec_mix = InvariantSpec::new(3, sigma, f_a, vec![h_b, h_c, h_a]).unwrap();
    let mut signatures = Vec::new();
    for ((l, m), w) in &ws {
        let v1 = basic_invariant(w, &spec_lambda).unwrap();
        let v2 = basic_invariant(w, &spec_mix).unwrap();
        assert_eq!(v1, int(24 * l), "spec_lambda at ({l},{m})");
        assert_eq!(v2, int(-6 * (l + m)), "spec_mix at ({l},{m})");
        signatures.push((v1, v2));
    }
    for i in 0..signatures.len() {
        for j in (i + 1)..signatures.len() {
            assert_ne!(signatures[i], signatures[j], "points {i} and {j} not separated");
        }
    }

    // Matrix witnesses, lambda = 0 regime.
    for mu in [int(1), int(5)] {
        let a = M2::new(CycloNum::zero(), CycloNum::one(), CycloNum::zero(), CycloNum::zero());
        let b = a.clone();
        let c = M2::new(CycloNum::zero(), CycloNum::zero(), mu.clone(), CycloNum::zero());
        check_r_relations(&a, &b, &c, &CycloNum::zero(), &mu);
    }
    // Matrix witnesses, lambda != 0 regime: X = diag(1,-1), Y = antidiag,
    // phi(a) = phi(b) = tX, phi(c) = rX + sY with t^2 = lambda and
    // s^2 = lambda - r^2. Expanding ab + bc + ca = (lambda + 2tr)·id
    // forces r = (mu - lambda)/(2t) (the printed form (mu - lambda)/t
    // fails the cyclic relations whenever mu != lambda).
    let x_mat = M2::new(CycloNum::one(), CycloNum::zero(), CycloNum::zero(), int(-1));
    let y_mat = M2::new(CycloNum::zero(), CycloNum::one(), CycloNum::one(), CycloNum::zero());
    let sqrt3 = &CycloNum::zeta(12) + &CycloNum::zeta_pow(12, -1);
    assert_eq!(&sqrt3 * &sqrt3, int(3));
    let witness_points: Vec<(CycloNum, CycloNum, CycloNum, CycloNum)> = vec![
        // (lambda, mu, t, s)
        (int(1), int(1), int(1), int(1)),
        (int(1), int(3), int(1), int(0)),
        (int(4), int(0), int(2), sqrt3),
    ];
    for (lambda, mu, t, s) in witness_points {
        let r = (&mu - &lambda)
            .checked_div(&(&t * &int(2)))
            .unwrap();
        assert_eq!(&(&lambda - &(&r * &r)), &(&s * &s), "s^2 = lambda - r^2");
        let a = x_mat.scale(&t);
        let b = a.clone();
        let c = x_mat.scale(&r).add(&y_mat.scale(&s));
        check_r_relations(&a, &b, &c, &lambda, &mu);
        // The printed coefficient fails unless mu = lambda.
        if mu != lambda {
            let r_printed = (&mu - &lambda).checked_div(&t).unwrap();
            let cyc = |c: &M2, a: &M2, b: &M2| a.mul(b).add(&b.mul(c)).add(&c.mul(a));
            let c_bad = x_mat.scale(&r_printed);
            assert_ne!(cyc(&c_bad, &a, &b), M2::scalar(&mu));
        }
    }

    // The dual family W_(la, lb, lc).
    let (la, lb, lc) = (int(1), int(2), int(3));
    let (parent, wd) = fk3_deformation_dual(&la, &lb, &lc).unwrap();
    let report = wd.verify();
    assert!(report.is_pass(), "W_(1,2,3): {}", report.summary());
    let n = 72usize;
    let e = |gid: usize| SparseVec::basis(vec![n], &[fk3_index(0, gid)]);
    let letter = |v: usize| -> SparseVec {
        let mut out = SparseVec::zero(vec![n]);
        for gid in 0..6 {
            out.add_to(fk3_index(v + 1, gid) as u64, CycloNum::one());
        }
        out
    };
    let wa = letter(0);
    let wb = letter(1);
    let wc = letter(2);
    let g = s3();
    // Relation list: idempotents, straightening, squares, cyclic sums.
    let mut esum = SparseVec::zero(vec![n]);
    for gid in 0..6 {
        esum.add_assign(&e(gid));
        for hid in 0..6 {
            let prod = wd.multiply(&e(gid), &e(hid));
            if gid == hid {
                assert_eq!(prod, e(gid));
            } else {
                assert!(prod.is_zero());
            }
        }
    }
    assert_eq!(&esum, wd.unit());
    let sigma_of = [S3_ID_12, S3_ID_23, S3_ID_13];
    for (v, wv) in [(0, &wa), (1, &wb), (2, &wc)] {
        for gid in 0..6usize {
            let lhs = wd.multiply(&e(gid), wv);
            let rhs = wd.multiply(wv, &e(g.op(sigma_of[v], gid)));
            assert_eq!(lhs, rhs, "e_g w straightening at v={v}, g={gid}");
            assert!(!lhs.is_zero());
        }
    }
    assert_eq!(wd.multiply(&wa, &wa), wd.unit().scale(&la), "w_a^2 = la");
    assert_eq!(wd.multiply(&wb, &wb), wd.unit().scale(&lb), "w_b^2 = lb");
    assert_eq!(wd.multiply(&wc, &wc), wd.unit().scale(&lc), "w_c^2 = lc");
    let cyc1 = wd
        .multiply(&wa, &wb)
        .add(&wd.multiply(&wb, &wc))
        .add(&wd.multiply(&wc, &wa));
    assert!(cyc1.is_zero(), "w_a w_b + w_b w_c + w_c w_a = 0");
    let cyc2 = wd
        .multiply(&wa, &wc)
        .add(&wd.multiply(&wc, &wb))
        .add(&wd.multiply(&wb, &wa));
    assert!(cyc2.is_zero(), "w_a w_c + w_c w_b + w_b w_a = 0");

    // Displayed coaction formulas.
    let h_e = |gid: usize| SparseVec::basis(vec![n], &[fk3_index(0, gid)]);
    let h_letter = |v: usize| -> SparseVec {
        let mut out = SparseVec::zero(vec![n]);
        for gid in 0..6 {
            out.add_to(fk3_index(v + 1, gid) as u64, CycloNum::one());
        }
        out
    };
    let legs: [[(usize, usize); 3]; 3] = [
        [(0, S3_ID_12), (S3_ID_132, S3_ID_13), (S3_ID_123, S3_ID_23)],
        [(0, S3_ID_23), (S3_ID_132, S3_ID_12), (S3_ID_123, S3_ID_13)],
        [(0, S3_ID_13), (S3_ID_132, S3_ID_23), (S3_ID_123, S3_ID_12)],
    ];
    let letter_cycle: [[usize; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
    for (v, wv) in [(0, &wa), (1, &wb), (2, &wc)] {
        let got = wd.coaction().apply(wv);
        let mut expect = wv.tensor(parent.unit());
        for leg in 0..3 {
            let (plus, minus) = legs[v][leg];
            let coeff = e(plus).sub(&e(minus));
            expect.add_assign(&coeff.tensor(&h_letter(letter_cycle[v][leg])));
        }
        assert_eq!(got, expect, "rho(w) formula at v={v}");
    }
    let _ = h_e;

    // Derived identity (lb - lc) w_a = w_c w_b w_c - w_b w_c w_b.
    let lhs = wa.scale(&(&lb - &lc));
    let rhs = wd
        .multiply(&wd.multiply(&wc, &wb), &wc)
        .sub(&wd.multiply(&wd.multiply(&wb, &wc), &wb));
    assert_eq!(lhs, rhs, "(lb - lc) w_a = w_c w_b w_c - w_b w_c w_b");

    // S3-relabeling equivariance in (la, lb, lc).
    let lam = [la.clone(), lb.clone(), lc.clone()];
    let degs = [S3_ID_12, S3_ID_23, S3_ID_13];
    for t in 0..6usize {
        // pi(v) = letter whose degree is t deg(v) t^{-1}.
        let pi: Vec<usize> = (0..3)
            .map(|v| {
                let target = g.conjugate(t, degs[v]);
                degs.iter().position(|&d| d == target).unwrap()
            })
            .collect();
        // lambda'_(pi(v)) = lambda_v.
        let mut lam2 = [int(0), int(0), int(0)];
        for v in 0..3 {
            lam2[pi[v]] = lam[v].clone();
        }
        let (_, w2) = fk3_deformation_dual(&lam2[0], &lam2[1], &lam2[2]).unwrap();
        // The relabeling map on basis elements.
        let mut map = SparseTensor::new(vec![n], vec![n]);
        for mono in 0..12usize {
            for gid in 0..6usize {
                let mut img = SparseVec::basis(vec![n], &[fk3_index(0, g.conjugate(t, gid))]);
                for &lt in fk3_monomials()[mono].iter().rev() {
                    let wl = {
                        let mut out = SparseVec::zero(vec![n]);
                        for gg in 0..6 {
                            out.add_to(
                                fk3_index(pi[lt as usize] + 1, gg) as u64,
                                CycloNum::one(),
                            );
                        }
                        out
                    };
                    img = w2.multiply(&wl, &img);
                }
                for (k, c) in img.entries() {
                    map.add_to(fk3_index(mono, gid) as u64, *k, c.clone());
                }
            }
        }
        // Bijective algebra map.
        assert_eq!(rank(&map), n, "relabeling must be a bijection");
        let lhs = map.tensor(&map).then(w2.mult()).unwrap();
        let rhs = wd.mult().then(&map).unwrap();
        assert_eq!(lhs, rhs, "relabeling is an algebra map at t={t}");
    }
    println!("criterion 9 (FK3 families): PASS ({:?})", start.elapsed());
}

#[test]
fn criterion_10_double_twist() {
    // V4: coinvariant construction agrees with the two-sided twist formula.
    let alpha = MuNCocycle::v4_nondegenerate();
    let kg = group_algebra(alpha.group());
    let c = lift_group_cocycle(&kg, &alpha).unwrap();
    let w = c.twist().unwrap();
    let via_formula = c.double_twist().unwrap();
    let via_coinv = double_twist_from_deformation(&w).unwrap();
    assert_eq!(via_formula.mult(), via_coinv.mult());
    assert_eq!(via_formula.comult(), via_coinv.comult());
    assert_eq!(via_formula.antipode(), via_coinv.antipode());
    assert!(via_coinv.verify().is_pass());

    // Taft n = 2 with a nontrivial (coboundary) cocycle.
    let h2 = taft_hopf(2).unwrap();
    let trivial = HopfTwoCocycle::trivial(Arc::clone(&h2));
    let mut nu = SparseVec::zero(vec![4]);
    for i in 0..4u64 {
        nu.add_to(
            i,
            if i % 2 == 0 {
                CycloNum::one()
            } else {
                CycloNum::from_rational(rat(1, 3))
            },
        );
    }
    let gauged = trivial.gauge(&nu).unwrap();
    assert!(gauged.table() != trivial.table());
    let w2 = gauged.twist().unwrap();
    let via_formula = gauged.double_twist().unwrap();
    let via_coinv = double_twist_from_deformation(&w2).unwrap();
    assert_eq!(via_formula.mult(), via_coinv.mult());
    assert_eq!(via_formula.antipode(), via_coinv.antipode());
    assert!(via_coinv.verify().is_pass());

    // Degenerations of the deformed Hopf algebras.
    let h = fk3_bosonization_group().unwrap();
    let d0 = deformed_hopf_prop510(&CycloNum::zero()).unwrap();
    assert_eq!(d0.mult(), h.mult());
    assert_eq!(d0.comult(), h.comult());
    assert_eq!(d0.antipode(), h.antipode());
    let hd = fk3_bosonization_dual().unwrap();
    let lam = int(7);
    let dd = deformed_hopf_sec55(&lam, &lam, &lam).unwrap();
    assert_eq!(dd.mult(), hd.mult());
    assert_eq!(dd.comult(), hd.comult());
    assert_eq!(dd.antipode(), hd.antipode());
    println!("criterion 10 (double twist): PASS");
}
