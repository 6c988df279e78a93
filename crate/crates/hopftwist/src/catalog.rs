//! Constructors for the worked families: group algebras and their twisted
//! forms, dual group algebras and their `(F, alpha)` deformations, Taft
//! algebras with the `W_(a,b)` family, and the two 72-dimensional
//! bosonizations over `S_3` with their deformation families.
//!
//! Builders are pure; parameterless 72-dimensional parents are cached so
//! repeated calls share one `Arc`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::cohomology::MuNCocycle;
use crate::deform::{extend_generator_twist, Deformation, GeneratorTwist, Provenance};
use crate::groups::{FiniteGroup, Subgroup};
use crate::hopf::HopfAlgebraData;
use crate::rewrite::{
    comb_from, structure_constants, FreeWord, LinComb, PresentedAlgebra, RewriteSystem,
};
use crate::scalar::{rat, CycloNum};
use crate::tensor::{invert_map, SparseTensor, SparseVec};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Group algebras and dual group algebras
// ---------------------------------------------------------------------------

/// The group algebra `KG` on the group-like basis `U_g`.
pub fn group_algebra(g: &FiniteGroup) -> Arc<HopfAlgebraData> {
    let n = g.order();
    let mut mult = SparseTensor::new(vec![n, n], vec![n]);
    let mut comult = SparseTensor::new(vec![n], vec![n, n]);
    let mut antipode = SparseTensor::new(vec![n], vec![n]);
    for a in 0..n {
        for b in 0..n {
            mult.set_multi(&[a, b], &[g.op(a, b)], CycloNum::one());
        }
        comult.set_multi(&[a], &[a, a], CycloNum::one());
        antipode.set_multi(&[a], &[g.inv(a)], CycloNum::one());
    }
    Arc::new(HopfAlgebraData::new_unchecked(
        n,
        1,
        g.labels().iter().map(|l| format!("U_{l}")).collect(),
        SparseVec::basis(vec![n], &[g.identity()]),
        vec![CycloNum::one(); n],
        mult,
        comult,
        antipode,
    ))
}

/// The dual group algebra `K[G]` on the idempotent basis `e_g`.
pub fn dual_group_algebra(g: &FiniteGroup) -> Arc<HopfAlgebraData> {
    let n = g.order();
    let mut mult = SparseTensor::new(vec![n, n], vec![n]);
    let mut comult = SparseTensor::new(vec![n], vec![n, n]);
    let mut antipode = SparseTensor::new(vec![n], vec![n]);
    let mut unit = SparseVec::zero(vec![n]);
    let mut counit = vec![CycloNum::zero(); n];
    for a in 0..n {
        mult.set_multi(&[a, a], &[a], CycloNum::one());
        for b in 0..n {
            comult.set_multi(&[g.op(a, b)], &[a, b], CycloNum::one());
        }
        antipode.set_multi(&[a], &[g.inv(a)], CycloNum::one());
        unit.add_to(a as u64, CycloNum::one());
    }
    counit[g.identity()] = CycloNum::one();
    Arc::new(HopfAlgebraData::new_unchecked(
        n,
        1,
        g.labels().iter().map(|l| format!("e_{l}")).collect(),
        unit,
        counit,
        mult,
        comult,
        antipode,
    ))
}

/// Lift a group cocycle to a Hopf 2-cocycle on `KG`:
/// `alpha(U_g, U_h) = zeta_N^(e(g,h))`.
pub fn lift_group_cocycle(
    kg: &Arc<HopfAlgebraData>,
    c: &MuNCocycle,
) -> Result<crate::deform::HopfTwoCocycle> {
    let n = kg.dim();
    assert_eq!(n, c.group().order());
    let table = (0..n)
        .map(|i| (0..n).map(|j| c.value(i, j)).collect())
        .collect();
    crate::deform::HopfTwoCocycle::new(Arc::clone(kg), table)
}

/// `K^alpha G` as a deformation of `KG` (twist of the lifted cocycle).
pub fn group_cocycle_deformation(c: &MuNCocycle) -> Result<(Arc<HopfAlgebraData>, Deformation)> {
    let kg = group_algebra(c.group());
    let cocycle = lift_group_cocycle(&kg, c)?;
    let w = cocycle.twist()?;
    Ok((kg, w))
}

// ---------------------------------------------------------------------------
// Dual-group deformations
// ---------------------------------------------------------------------------

/// The deformation of `K[G]` attached to a subgroup `F` carrying a
/// nondegenerate cocycle: `W = ⊕_i e_(t_i) K^alpha F`, with the transported
/// `G`-action as coaction and the explicit averaged `T`.
pub fn dual_group_deformation(
    g: &FiniteGroup,
    f: &Subgroup,
    alpha: &MuNCocycle,
) -> Result<(Arc<HopfAlgebraData>, Deformation)> {
    let f_group = f.as_group(g);
    if !alpha.group().same_structure(&f_group) {
        return Err(Error::InvalidInput(
            "cocycle must live on the subgroup's own multiplication table".into(),
        ));
    }
    if f.size() > 1 && !crate::cohomology::is_nondegenerate(alpha)? {
        return Err(Error::DegenerateCocycle(
            "dual-group deformations require a nondegenerate cocycle on F".into(),
        ));
    }
    let parent = dual_group_algebra(g);
    let n = g.order();
    let reps = f.coset_reps().to_vec();
    let fsize = f.size();
    assert_eq!(reps.len() * fsize, n);
    let idx = |coset: usize, fpos: usize| coset * fsize + fpos;
    let av = |x: usize, y: usize| alpha.value(x, y);
    let fg = &f_group;

    let mut labels = Vec::with_capacity(n);
    for &t in &reps {
        for &fe in f.elements() {
            labels.push(format!("e_{}*U_{}", g.label(t), g.label(fe)));
        }
    }

    // Blockwise multiplication.
    let mut mult = SparseTensor::new(vec![n, n], vec![n]);
    for i in 0..reps.len() {
        for f1 in 0..fsize {
            for f2 in 0..fsize {
                let prod = fg.op(f1, f2);
                mult.set_multi(&[idx(i, f1), idx(i, f2)], &[idx(i, prod)], av(f1, f2));
            }
        }
    }
    let mut unit = SparseVec::zero(vec![n]);
    let fid = fg.identity();
    for i in 0..reps.len() {
        unit.add_to(idx(i, fid) as u64, CycloNum::one());
    }

    // Coaction rho(w) = sum_g (g·w) ⊗ e_g, with
    // g·(e_(t_i) U_(f')) = e_(t_j) U_f U_(f') U_f^{-1} where g t_i = t_j f.
    let mut coaction = SparseTensor::new(vec![n], vec![n, n]);
    for i in 0..reps.len() {
        for fp in 0..fsize {
            for gelt in 0..n {
                let gt = g.op(gelt, reps[i]);
                let j = f.coset_index_of(gt);
                let fx = g.op(g.inv(reps[j]), gt);
                let fx = f.position(fx).expect("t_j^{-1} g t_i lies in F");
                // U_fx U_fp U_fx^{-1} = scalar · U_(fx fp fx^{-1}).
                let conj = fg.op(fg.op(fx, fp), fg.inv(fx));
                let scalar = (&av(fx, fp) * &av(fg.op(fx, fp), fg.inv(fx)))
                    .checked_div(&av(fx, fg.inv(fx)))?;
                coaction.add_to(idx(i, fp) as u64, (idx(j, conj) * n + gelt) as u64, scalar);
            }
        }
    }

    // T_(e_g)(e_(t_i) U_(f1)) =
    //   (1/|F|) sum_f e_(t_i) U_(f1) U_f ⊗ e_(t_j) U_(f2)^{-1} U_f^{-1} U_(f2),
    // with f2 = t_i^{-1} g t_j for the unique coset j making f2 land in F.
    let inv_size = CycloNum::from_rational(rat(1, fsize as i64));
    let mut t = SparseTensor::new(vec![n, n], vec![n, n]);
    for i in 0..reps.len() {
        for f1 in 0..fsize {
            for gelt in 0..n {
                let j = f.paired_coset(g, i, gelt);
                let f2 = g.op(g.op(g.inv(reps[i]), gelt), reps[j]);
                let f2 = f.position(f2).expect("paired coset lands in F");
                for fe in 0..fsize {
                    let left = fg.op(f1, fe);
                    let c1 = av(f1, fe);
                    let f2i = fg.inv(f2);
                    let fei = fg.inv(fe);
                    let prod1 = fg.op(f2i, fei);
                    let right = fg.op(prod1, f2);
                    let c2 = (&av(f2i, fei) * &av(prod1, f2))
                        .checked_div(&(&av(f2, f2i) * &av(fe, fei)))?;
                    t.add_to(
                        (idx(i, f1) * n + gelt) as u64,
                        (idx(i, left) * n + idx(j, right)) as u64,
                        &(&c1 * &c2) * &inv_size,
                    );
                }
            }
        }
    }

    let w = Deformation::new(
        parent.clone(),
        labels,
        unit,
        mult,
        coaction,
        Some(t),
        Provenance::Catalog("dual-group-def".into()),
    );
    Ok((parent, w))
}

// ---------------------------------------------------------------------------
// Shared extension helpers
// ---------------------------------------------------------------------------

/// Multiply inside a tensor-product algebra `A ⊗ B` without materializing
/// its full multiplication tensor.
fn make_pair_mul(
    mult_a: SparseTensor,
    mult_b: SparseTensor,
) -> impl Fn(&SparseVec, &SparseVec) -> SparseVec {
    move |x: &SparseVec, y: &SparseVec| {
        let da = mult_a.in_shape()[0] as u64;
        let db = mult_b.in_shape()[0] as u64;
        let mut out = SparseVec::zero(x.shape().to_vec());
        for (kx, cx) in x.entries() {
            let (a1, b1) = (kx / db, kx % db);
            for (ky, cy) in y.entries() {
                let (a2, b2) = (ky / db, ky % db);
                let c = cx * cy;
                for (pa, ca) in mult_a.row(a1 * da + a2) {
                    for (pb, cb) in mult_b.row(b1 * db + b2) {
                        out.add_to(pa * db + pb, &(&c * ca) * cb);
                    }
                }
            }
        }
        out
    }
}

/// Extend generator images along basis words (reversed for
/// anti-multiplicative maps) and collect the images into a tensor.
fn extend_images<F>(
    words: &[FreeWord],
    images: &[SparseVec],
    unit_image: &SparseVec,
    mul: &F,
    reverse: bool,
) -> SparseTensor
where
    F: Fn(&SparseVec, &SparseVec) -> SparseVec,
{
    let imgs = extend_images_vec(words, images, unit_image, mul, reverse);
    images_to_tensor(words.len(), unit_image.shape().to_vec(), imgs)
}

fn extend_images_vec<F>(
    words: &[FreeWord],
    images: &[SparseVec],
    unit_image: &SparseVec,
    mul: &F,
    reverse: bool,
) -> Vec<SparseVec>
where
    F: Fn(&SparseVec, &SparseVec) -> SparseVec,
{
    words
        .iter()
        .map(|w| {
            let mut acc = unit_image.clone();
            let letters: Vec<u8> = if reverse {
                w.0.iter().rev().copied().collect()
            } else {
                w.0.clone()
            };
            for l in letters {
                acc = mul(&acc, &images[l as usize]);
            }
            acc
        })
        .collect()
}

fn images_to_tensor(dim: usize, out_shape: Vec<usize>, images: Vec<SparseVec>) -> SparseTensor {
    let mut t = SparseTensor::new(vec![dim], out_shape);
    for (i, img) in images.into_iter().enumerate() {
        for (k, c) in img.entries() {
            t.add_to(i as u64, *k, c.clone());
        }
    }
    t
}

/// Counit-style extension: product of per-letter scalars.
fn extend_scalar_images(words: &[FreeWord], values: &[CycloNum]) -> Vec<CycloNum> {
    words
        .iter()
        .map(|w| {
            let mut acc = CycloNum::one();
            for &l in &w.0 {
                acc = &acc * &values[l as usize];
            }
            acc
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Taft algebras
// ---------------------------------------------------------------------------

fn taft_cache() -> &'static Mutex<HashMap<u32, Arc<HopfAlgebraData>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<HopfAlgebraData>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn taft_label(i: usize, j: usize, g: &str, x: &str) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push(g.to_string()),
        _ => parts.push(format!("{g}^{i}")),
    }
    match j {
        0 => {}
        1 => parts.push(x.to_string()),
        _ => parts.push(format!("{x}^{j}")),
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

fn taft_words(nn: usize) -> Vec<FreeWord> {
    (0..nn)
        .flat_map(|i| {
            (0..nn).map(move |j| {
                let mut w = vec![0u8; i];
                w.extend(std::iter::repeat(1u8).take(j));
                FreeWord(w)
            })
        })
        .collect()
}

/// The Taft Hopf algebra `H_n` on the basis `g^i x^j` (dimension `n^2`),
/// with `g x g^{-1} = zeta x`, `Delta(g) = g ⊗ g`,
/// `Delta(x) = x ⊗ 1 + g ⊗ x`.
pub fn taft_hopf(n: u32) -> Result<Arc<HopfAlgebraData>> {
    assert!(n >= 2);
    if let Some(h) = taft_cache().lock().unwrap().get(&n) {
        return Ok(Arc::clone(h));
    }
    let nn = n as usize;
    let zeta_inv = CycloNum::zeta(n).pow(-1)?;
    // Letters: g = 0 < x = 1.
    let relations = vec![
        comb_from(vec![
            (FreeWord(vec![1, 0]), CycloNum::one()),
            (FreeWord(vec![0, 1]), -&zeta_inv),
        ]),
        comb_from(vec![
            (FreeWord(vec![0u8; nn]), CycloNum::one()),
            (FreeWord::empty(), CycloNum::from_int(-1)),
        ]),
        comb_from(vec![(FreeWord(vec![1u8; nn]), CycloNum::one())]),
    ];
    let sys = RewriteSystem::new(
        vec!["g".into(), "x".into()],
        relations,
        taft_words(nn),
    )?
    .complete(nn + 2)?;
    let alg = structure_constants(sys, &comb_from(vec![(FreeWord::empty(), CycloNum::one())]))?;
    let dim = alg.dim();

    let word = |letters: &[u8]| alg.word(letters).expect("word reduces into basis");
    let pair_mul = make_pair_mul(alg.mult.clone(), alg.mult.clone());
    let one = word(&[]);
    let d_g = word(&[0]).tensor(&word(&[0]));
    let d_x = word(&[1]).tensor(&one).add(&word(&[0]).tensor(&word(&[1])));
    let comult = extend_images(
        alg.system.basis(),
        &[d_g, d_x],
        &one.tensor(&one),
        &pair_mul,
        false,
    );
    let counit = extend_scalar_images(alg.system.basis(), &[CycloNum::one(), CycloNum::zero()]);
    // S(g) = g^(n-1), S(x) = -g^(n-1) x, extended anti-multiplicatively.
    let s_g = word(&vec![0u8; nn - 1]);
    let s_x = {
        let mut w = vec![0u8; nn - 1];
        w.push(1);
        word(&w).scale(&CycloNum::from_int(-1))
    };
    let w_mult = alg.mult.clone();
    let mul_w = move |a: &SparseVec, b: &SparseVec| w_mult.apply(&a.tensor(b));
    let antipode = images_to_tensor(
        dim,
        vec![dim],
        extend_images_vec(alg.system.basis(), &[s_g, s_x], &one, &mul_w, true),
    );

    let labels = (0..nn)
        .flat_map(|i| (0..nn).map(move |j| taft_label(i, j, "g", "x")))
        .collect();
    let h = Arc::new(HopfAlgebraData::new(
        dim,
        n,
        labels,
        alg.unit.clone(),
        counit,
        alg.mult.clone(),
        comult,
        antipode,
    )?);
    taft_cache().lock().unwrap().insert(n, Arc::clone(&h));
    Ok(h)
}

/// The Taft deformation `W_(a,b)` on the basis `g~^i t^j`: case-split
/// multiplication with `g~^n = a`, `t^n = b`, `t g~ = zeta^{-1} g~ t`, the
/// coaction normalized so `A_xi(t) = 1`, and `T` by exact inversion of `M`
/// for `n <= 4`.
pub fn taft_deformation(
    n: u32,
    a: &CycloNum,
    b: &CycloNum,
) -> Result<(Arc<HopfAlgebraData>, Deformation)> {
    if a.is_zero() {
        return Err(Error::InvalidInput(
            "the group-like analog g~ must be invertible: a must be nonzero".into(),
        ));
    }
    let parent = taft_hopf(n)?;
    let nn = n as usize;
    let dim = nn * nn;
    let zeta = CycloNum::zeta(n);
    let idx = |i: usize, j: usize| i * nn + j;

    let mut mult = SparseTensor::new(vec![dim, dim], vec![dim]);
    for i in 0..nn {
        for j in 0..nn {
            for k in 0..nn {
                for l in 0..nn {
                    let mut coef = zeta.pow(-((j * k) as i64))?;
                    if i + k >= nn {
                        coef = &coef * a;
                    }
                    if j + l >= nn {
                        coef = &coef * b;
                    }
                    mult.add_to(
                        (idx(i, j) * dim + idx(k, l)) as u64,
                        idx((i + k) % nn, (j + l) % nn) as u64,
                        coef,
                    );
                }
            }
        }
    }
    let unit = SparseVec::basis(vec![dim], &[0]);

    // rho(g~) = g~ ⊗ g, rho(t) = t ⊗ g^(n-1) + 1 ⊗ g^(n-1) x, extended
    // multiplicatively (this is the gauge with A_xi(t) = 1).
    let basis_of = |i: usize, j: usize| SparseVec::basis(vec![dim], &[idx(i, j)]);
    let rho_g = basis_of(1, 0).tensor(&basis_of(1, 0));
    let rho_t = basis_of(0, 1)
        .tensor(&basis_of(nn - 1, 0))
        .add(&basis_of(0, 0).tensor(&basis_of(nn - 1, 1)));
    let pair_mul = make_pair_mul(mult.clone(), parent.mult().clone());
    let coaction = extend_images(
        &taft_words(nn),
        &[rho_g, rho_t],
        &unit.tensor(parent.unit()),
        &pair_mul,
        false,
    );

    let labels = (0..nn)
        .flat_map(|i| (0..nn).map(move |j| taft_label(i, j, "g~", "t")))
        .collect();
    let mut w = Deformation::new(
        Arc::clone(&parent),
        labels,
        unit,
        mult,
        coaction,
        None,
        Provenance::Catalog("taft-def".into()),
    );
    if n <= 4 {
        w.invert_m()?;
    }
    Ok((parent, w))
}

// ---------------------------------------------------------------------------
// FK3 bosonizations over S3
// ---------------------------------------------------------------------------

/// The twelve normal-form monomials of the Fomin-Kirillov algebra on
/// `a < b < c` (degree profile 1, 3, 4, 3, 1).
pub fn fk3_monomials() -> Vec<Vec<u8>> {
    vec![
        vec![],
        vec![0],
        vec![1],
        vec![2],
        vec![0, 1],
        vec![0, 2],
        vec![1, 0],
        vec![1, 2],
        vec![0, 1, 0],
        vec![0, 1, 2],
        vec![1, 0, 2],
        vec![0, 1, 0, 2],
    ]
}

pub fn s3() -> &'static FiniteGroup {
    static S3: OnceLock<FiniteGroup> = OnceLock::new();
    S3.get_or_init(|| FiniteGroup::symmetric(3))
}

/// Group ids in `symmetric(3)`: 0 = e, 1 = (23), 2 = (12), 3 = (123),
/// 4 = (132), 5 = (13). The degree of `a` is (12), of `b` is (23), of
/// `c` is (13).
pub const S3_ID_23: usize = 1;
pub const S3_ID_12: usize = 2;
pub const S3_ID_123: usize = 3;
pub const S3_ID_132: usize = 4;
pub const S3_ID_13: usize = 5;

/// Canonical index of basis element `monomial ⊗ group element`.
pub fn fk3_index(mono: usize, g: usize) -> usize {
    mono * 6 + g
}

/// The signed action of `S_3` on the span of `a, b, c`:
/// `v_i -> signs[i] · v_(perm[i])`.
#[derive(Clone, Debug)]
struct SignedAction {
    perm: [usize; 3],
    signs: [i8; 3],
}

impl SignedAction {
    fn identity() -> Self {
        SignedAction {
            perm: [0, 1, 2],
            signs: [1, 1, 1],
        }
    }

    /// `self ∘ other` (apply `other` first).
    fn compose(&self, other: &SignedAction) -> SignedAction {
        let mut perm = [0usize; 3];
        let mut signs = [1i8; 3];
        for v in 0..3 {
            let mid = other.perm[v];
            perm[v] = self.perm[mid];
            signs[v] = other.signs[v] * self.signs[mid];
        }
        SignedAction { perm, signs }
    }
}

/// The signed action of every element of `S_3`, generated by
/// `(12): a -> -a, b -> -c, c -> -b` and `(123): a -> b -> c -> a`.
fn s3_signed_actions() -> Vec<SignedAction> {
    let g = s3();
    let gen12 = SignedAction {
        perm: [0, 2, 1],
        signs: [-1, -1, -1],
    };
    let gen123 = SignedAction {
        perm: [1, 2, 0],
        signs: [1, 1, 1],
    };
    // BFS over the group, composing generator actions.
    let mut actions: Vec<Option<SignedAction>> = vec![None; 6];
    actions[g.identity()] = Some(SignedAction::identity());
    let gens = [(S3_ID_12, gen12), (S3_ID_123, gen123)];
    let mut changed = true;
    while changed {
        changed = false;
        for x in 0..6 {
            let Some(ax) = actions[x].clone() else { continue };
            for (gid, act) in &gens {
                let y = g.op(*gid, x);
                if actions[y].is_none() {
                    actions[y] = Some(act.compose(&ax));
                    changed = true;
                }
            }
        }
    }
    actions.into_iter().map(|a| a.unwrap()).collect()
}

/// Letters of the group-bosonization presentation: `a, b, c` then the five
/// non-identity elements of `S_3` (ids 1..5 as letters 3..7).
fn group_letter(gid: usize) -> u8 {
    debug_assert!(gid >= 1 && gid <= 5);
    (2 + gid) as u8
}

fn group_boson_basis() -> Vec<FreeWord> {
    let mut basis = Vec::with_capacity(72);
    for m in fk3_monomials() {
        for g in 0..6 {
            let mut w = m.clone();
            if g != 0 {
                w.push(group_letter(g));
            }
            basis.push(FreeWord(w));
        }
    }
    basis
}

/// Presentation of `B(V) # K S_3` (or its deformations): FK3 letters with
/// the given square/cyclic right-hand sides, the group table, and the
/// straightening rules `gamma · v = gamma(v) · gamma`.
fn group_boson_system(
    square: &CycloNum,
    cyclic_abc: LinComb,
    cyclic_acb: LinComb,
) -> Result<RewriteSystem> {
    let g = s3();
    let actions = s3_signed_actions();
    let mut relations = Vec::new();
    // Squares.
    for v in 0..3u8 {
        relations.push(comb_from(vec![
            (FreeWord(vec![v, v]), CycloNum::one()),
            (FreeWord::empty(), -square),
        ]));
    }
    relations.push(cyclic_abc);
    relations.push(cyclic_acb);
    // Group products.
    for x in 1..6usize {
        for y in 1..6usize {
            let p = g.op(x, y);
            let mut rel = vec![(
                FreeWord(vec![group_letter(x), group_letter(y)]),
                CycloNum::one(),
            )];
            if p == 0 {
                rel.push((FreeWord::empty(), CycloNum::from_int(-1)));
            } else {
                rel.push((FreeWord::letter(group_letter(p)), CycloNum::from_int(-1)));
            }
            relations.push(comb_from(rel));
        }
    }
    // Straightening.
    for x in 1..6usize {
        let act = &actions[x];
        for v in 0..3usize {
            relations.push(comb_from(vec![
                (FreeWord(vec![group_letter(x), v as u8]), CycloNum::one()),
                (
                    FreeWord(vec![act.perm[v] as u8, group_letter(x)]),
                    CycloNum::from_int(-(act.signs[v] as i64)),
                ),
            ]));
        }
    }
    let generators = vec![
        "a".into(),
        "b".into(),
        "c".into(),
        "(23)".into(),
        "(12)".into(),
        "(123)".into(),
        "(132)".into(),
        "(13)".into(),
    ];
    RewriteSystem::new(generators, relations, group_boson_basis())?.complete(6)
}

fn plain_cyclic(mu: &CycloNum) -> (LinComb, LinComb) {
    let one = CycloNum::one;
    (
        comb_from(vec![
            (FreeWord(vec![0, 1]), one()),
            (FreeWord(vec![1, 2]), one()),
            (FreeWord(vec![2, 0]), one()),
            (FreeWord::empty(), -mu),
        ]),
        comb_from(vec![
            (FreeWord(vec![0, 2]), one()),
            (FreeWord(vec![2, 1]), one()),
            (FreeWord(vec![1, 0]), one()),
            (FreeWord::empty(), -mu),
        ]),
    )
}

fn group_boson_labels() -> Vec<String> {
    let g = s3();
    let sys_labels = ["a", "b", "c"];
    let mut labels = Vec::with_capacity(72);
    for m in fk3_monomials() {
        let mono: String = m.iter().map(|&l| sys_labels[l as usize]).collect();
        for gid in 0..6 {
            let gl = g.label(gid);
            labels.push(match (mono.is_empty(), gid == 0) {
                (true, true) => "1".into(),
                (true, false) => format!("({})", gl.trim_matches(['(', ')'])),
                (false, true) => mono.clone(),
                (false, false) => format!("{mono}*{gl}"),
            });
        }
    }
    // Normalize group labels: keep them exactly as the group prints them.
    let mut labels2 = Vec::with_capacity(72);
    for (i, l) in labels.into_iter().enumerate() {
        let gid = i % 6;
        let mono = i / 6;
        if mono == 0 && gid != 0 {
            labels2.push(g.label(gid).to_string());
        } else {
            labels2.push(l);
        }
    }
    labels2
}

/// Hopf structure shared by `B(V) # KS_3` and its Hopf deformations: the
/// group letters are group-like and `a, b, c` are skew-primitive over
/// their degrees.
fn group_boson_hopf(alg: &PresentedAlgebra, field_order: u32) -> Result<HopfAlgebraData> {
    let dim = alg.dim();
    let word = |letters: &[u8]| alg.word(letters).expect("word reduces into basis");
    let one = word(&[]);
    let deg = [S3_ID_12, S3_ID_23, S3_ID_13];
    let mut d_images = Vec::new();
    let mut s_images = Vec::new();
    let mut e_values = Vec::new();
    for v in 0..3usize {
        let gv = word(&[group_letter(deg[v])]);
        let xv = word(&[v as u8]);
        d_images.push(xv.tensor(&one).add(&gv.tensor(&xv)));
        s_images.push(
            word(&[group_letter(deg[v]), v as u8]).scale(&CycloNum::from_int(-1)),
        );
        e_values.push(CycloNum::zero());
    }
    let g = s3();
    for gid in 1..6usize {
        let gv = word(&[group_letter(gid)]);
        d_images.push(gv.tensor(&gv));
        let ginv = g.inv(gid);
        s_images.push(if ginv == 0 {
            one.clone()
        } else {
            word(&[group_letter(ginv)])
        });
        e_values.push(CycloNum::one());
    }
    let pair_mul = make_pair_mul(alg.mult.clone(), alg.mult.clone());
    let comult = extend_images(
        alg.system.basis(),
        &d_images,
        &one.tensor(&one),
        &pair_mul,
        false,
    );
    let counit = extend_scalar_images(alg.system.basis(), &e_values);
    let w_mult = alg.mult.clone();
    let mul_w = move |a: &SparseVec, b: &SparseVec| w_mult.apply(&a.tensor(b));
    let antipode = images_to_tensor(
        dim,
        vec![dim],
        extend_images_vec(alg.system.basis(), &s_images, &one, &mul_w, true),
    );
    Ok(HopfAlgebraData::new_unchecked(
        dim,
        field_order,
        group_boson_labels(),
        alg.unit.clone(),
        counit,
        alg.mult.clone(),
        comult,
        antipode,
    ))
}

fn fk3_group_cache() -> &'static OnceLock<Arc<HopfAlgebraData>> {
    static CACHE: OnceLock<Arc<HopfAlgebraData>> = OnceLock::new();
    &CACHE
}

/// The 72-dimensional pointed bosonization `B(V) # K S_3`.
pub fn fk3_bosonization_group() -> Result<Arc<HopfAlgebraData>> {
    if let Some(h) = fk3_group_cache().get() {
        return Ok(Arc::clone(h));
    }
    let (cab, cacb) = plain_cyclic(&CycloNum::zero());
    let sys = group_boson_system(&CycloNum::zero(), cab, cacb)?;
    let alg = structure_constants(sys, &comb_from(vec![(FreeWord::empty(), CycloNum::one())]))?;
    let h = Arc::new(group_boson_hopf(&alg, 1)?);
    let _ = fk3_group_cache().set(Arc::clone(&h));
    Ok(h)
}

/// The Hopf algebra of the double twist of `W_(0,mu)`-type deformations:
/// `a^2 = b^2 = c^2 = 0`, `ab + bc + ca = mu(1 - (123))`,
/// `ba + ac + cb = mu(1 - (132))`, same coalgebra as the bosonization.
pub fn deformed_hopf_prop510(mu: &CycloNum) -> Result<Arc<HopfAlgebraData>> {
    let one = CycloNum::one;
    let cab = comb_from(vec![
        (FreeWord(vec![0, 1]), one()),
        (FreeWord(vec![1, 2]), one()),
        (FreeWord(vec![2, 0]), one()),
        (FreeWord::empty(), -mu),
        (FreeWord::letter(group_letter(S3_ID_123)), mu.clone()),
    ]);
    let cacb = comb_from(vec![
        (FreeWord(vec![0, 2]), one()),
        (FreeWord(vec![2, 1]), one()),
        (FreeWord(vec![1, 0]), one()),
        (FreeWord::empty(), -mu),
        (FreeWord::letter(group_letter(S3_ID_132)), mu.clone()),
    ]);
    let sys = group_boson_system(&CycloNum::zero(), cab, cacb)?;
    let alg = structure_constants(sys, &comb_from(vec![(FreeWord::empty(), CycloNum::one())]))?;
    Ok(Arc::new(group_boson_hopf(&alg, 1)?))
}

/// The comodule-algebra deformation `W_(lambda, mu)` of `B(V) # K S_3`,
/// with `T` assembled from the generator twist.
pub fn fk3_deformation_group(
    lambda: &CycloNum,
    mu: &CycloNum,
) -> Result<(Arc<HopfAlgebraData>, Deformation)> {
    let parent = fk3_bosonization_group()?;
    let (cab, cacb) = plain_cyclic(mu);
    let sys = group_boson_system(lambda, cab, cacb)?;
    let alg = structure_constants(sys, &comb_from(vec![(FreeWord::empty(), CycloNum::one())]))?;
    let dim = alg.dim();
    let word = |letters: &[u8]| alg.word(letters).expect("word reduces into basis");

    // Coaction: rho(w_gamma) = w_gamma ⊗ gamma,
    // rho(w_v) = w_v ⊗ 1 + w_(deg v) ⊗ v.
    let h_basis = |i: usize| SparseVec::basis(vec![dim], &[i]);
    let deg = [S3_ID_12, S3_ID_23, S3_ID_13];
    let mut rho_images = Vec::new();
    for v in 0..3usize {
        let wv = word(&[v as u8]);
        let wg = word(&[group_letter(deg[v])]);
        rho_images.push(
            wv.tensor(&h_basis(fk3_index(0, 0)))
                .add(&wg.tensor(&h_basis(fk3_index(v + 1, 0)))),
        );
    }
    for gid in 1..6usize {
        let wg = word(&[group_letter(gid)]);
        rho_images.push(wg.tensor(&h_basis(fk3_index(0, gid))));
    }
    let pair_mul = make_pair_mul(alg.mult.clone(), parent.mult().clone());
    let coaction = extend_images(
        alg.system.basis(),
        &rho_images,
        &alg.unit.tensor(parent.unit()),
        &pair_mul,
        false,
    );

    let mut w = Deformation::new(
        Arc::clone(&parent),
        group_boson_labels(),
        alg.unit.clone(),
        alg.mult.clone(),
        coaction,
        None,
        Provenance::FromGenerators,
    );

    // Generator twist (the image for b follows the a/c pattern).
    let t = extend_generator_twist(&w, &fk3_group_generator_twist(&alg, false)?)?;
    w = Deformation::new(
        Arc::clone(&parent),
        w.labels().to_vec(),
        w.unit().clone(),
        w.mult().clone(),
        w.coaction().clone(),
        Some(t),
        Provenance::FromGenerators,
    );
    Ok((parent, w))
}

/// The generator twist `T~` for `W_(lambda, mu)`. With `mismatched_b` the
/// image of `b` reuses the second tensor leg of the `a`-image instead of
/// its own; that variant breaks multiplicativity and is kept only as a
/// regression guard for the checking machinery.
pub fn fk3_group_generator_twist(
    alg: &PresentedAlgebra,
    mismatched_b: bool,
) -> Result<GeneratorTwist> {
    let word = |letters: &[u8]| alg.word(letters).expect("word reduces into basis");
    let one = word(&[]);
    let g = s3();
    let deg = [S3_ID_12, S3_ID_23, S3_ID_13];
    let mut images = Vec::new();
    for v in 0..3usize {
        let gv = group_letter(deg[v]);
        let first = word(&[gv, v as u8]).scale(&CycloNum::from_int(-1));
        let (second_left, second_right) = if mismatched_b && v == 1 {
            // b -> -w_(23) w_b ⊗ 1 + w_(12) ⊗ w_a: the a-legs do not close.
            (word(&[group_letter(S3_ID_12)]), word(&[0]))
        } else {
            (word(&[gv]), word(&[v as u8]))
        };
        images.push(first.tensor(&one).add(&second_left.tensor(&second_right)));
    }
    for gid in 1..6usize {
        let ginv = g.inv(gid);
        let left = if ginv == 0 {
            one.clone()
        } else {
            word(&[group_letter(ginv)])
        };
        images.push(left.tensor(&word(&[group_letter(gid)])));
    }
    let mut w_generators = Vec::new();
    for l in 0..8u8 {
        w_generators.push(word(&[l]));
    }
    Ok(GeneratorTwist {
        images,
        h_basis_words: alg.system.basis().to_vec(),
        w_generators,
        generator_names: alg.system.generators().to_vec(),
    })
}

// ---------------------------------------------------------------------------
// Dual bosonization B(V) # K[S3]
// ---------------------------------------------------------------------------

// Letters: a = 0, b = 1, c = 2, then e_g for the five kept group ids 0..4;
// e_(13) (id 5) is eliminated via sum e_g = 1.
fn idem_letter(gid: usize) -> u8 {
    debug_assert!(gid <= 4);
    (3 + gid) as u8
}

/// Presented-basis index: slot 0..4 = kept idempotent, slot 5 = bare word.
fn dual_presented_index(mono: usize, slot: usize) -> usize {
    mono * 6 + slot
}

fn dual_boson_basis() -> Vec<FreeWord> {
    let mut basis = Vec::with_capacity(72);
    for m in fk3_monomials() {
        for slot in 0..6 {
            let mut w = m.clone();
            if slot < 5 {
                w.push(idem_letter(slot));
            }
            basis.push(FreeWord(w));
        }
    }
    basis
}

/// The idempotent `e_g` as a combination of presented basis words of a
/// given monomial prefix (`e_(13) = 1 - sum of the kept ones`).
fn dual_idem_comb(mono_word: &[u8], gid: usize) -> Vec<(FreeWord, CycloNum)> {
    if gid <= 4 {
        let mut w = mono_word.to_vec();
        w.push(idem_letter(gid));
        vec![(FreeWord(w), CycloNum::one())]
    } else {
        let mut out = vec![(FreeWord(mono_word.to_vec()), CycloNum::one())];
        for k in 0..5usize {
            let mut w = mono_word.to_vec();
            w.push(idem_letter(k));
            out.push((FreeWord(w), CycloNum::from_int(-1)));
        }
        out
    }
}

/// Dual-bosonization rewrite system with the given square right-hand sides
/// (as combinations of idempotents/scalars) and zero cyclic sums.
fn dual_boson_system(squares: [LinComb; 3]) -> Result<RewriteSystem> {
    let g = s3();
    let one = CycloNum::one;
    let mut relations = Vec::new();
    for (v, sq) in squares.into_iter().enumerate() {
        let mut rel = sq;
        // aa - rhs = 0, with rhs already carrying its sign.
        crate::rewrite::comb_add(&mut rel, FreeWord(vec![v as u8, v as u8]), one());
        relations.push(rel);
    }
    relations.push(comb_from(vec![
        (FreeWord(vec![0, 1]), one()),
        (FreeWord(vec![1, 2]), one()),
        (FreeWord(vec![2, 0]), one()),
    ]));
    relations.push(comb_from(vec![
        (FreeWord(vec![0, 2]), one()),
        (FreeWord(vec![2, 1]), one()),
        (FreeWord(vec![1, 0]), one()),
    ]));
    // Idempotent products.
    for x in 0..5usize {
        for y in 0..5usize {
            let mut rel = vec![(
                FreeWord(vec![idem_letter(x), idem_letter(y)]),
                CycloNum::one(),
            )];
            if x == y {
                rel.push((FreeWord(vec![idem_letter(x)]), CycloNum::from_int(-1)));
            }
            relations.push(comb_from(rel));
        }
    }
    // Straightening: e_g v = v e_(sigma_v g).
    let sigma = [S3_ID_12, S3_ID_23, S3_ID_13];
    for gid in 0..5usize {
        for v in 0..3usize {
            let target = g.op(sigma[v], gid);
            let mut rel = vec![(
                FreeWord(vec![idem_letter(gid), v as u8]),
                CycloNum::one(),
            )];
            for (w, c) in dual_idem_comb(&[v as u8], target) {
                rel.push((w, -&c));
            }
            relations.push(comb_from(rel));
        }
    }
    let generators = vec![
        "a".into(),
        "b".into(),
        "c".into(),
        "e_e".into(),
        "e_(23)".into(),
        "e_(12)".into(),
        "e_(123)".into(),
        "e_(132)".into(),
    ];
    RewriteSystem::new(generators, relations, dual_boson_basis())?.complete(6)
}

/// Transport from the canonical `(monomial, e_g)` basis into the presented
/// basis (where `m e_(13)` is a combination).
fn dual_transport() -> SparseTensor {
    let mut p = SparseTensor::new(vec![72], vec![72]);
    for mono in 0..12usize {
        for gid in 0..6usize {
            let canonical = fk3_index(mono, gid) as u64;
            if gid <= 4 {
                p.add_to(canonical, dual_presented_index(mono, gid) as u64, CycloNum::one());
            } else {
                p.add_to(canonical, dual_presented_index(mono, 5) as u64, CycloNum::one());
                for k in 0..5usize {
                    p.add_to(
                        canonical,
                        dual_presented_index(mono, k) as u64,
                        CycloNum::from_int(-1),
                    );
                }
            }
        }
    }
    p
}

fn dual_boson_labels() -> Vec<String> {
    let g = s3();
    let sys_labels = ["a", "b", "c"];
    let mut labels = Vec::with_capacity(72);
    for m in fk3_monomials() {
        let mono: String = m.iter().map(|&l| sys_labels[l as usize]).collect();
        for gid in 0..6 {
            let gl = format!("e_{}", g.label(gid));
            labels.push(if mono.is_empty() {
                gl
            } else {
                format!("{mono}*{gl}")
            });
        }
    }
    labels
}

/// `e_g` as a presented-space element.
fn dual_idem_elem(gid: usize, sys: &RewriteSystem) -> SparseVec {
    let mut v = SparseVec::zero(vec![72]);
    for (w, c) in dual_idem_comb(&[], gid) {
        v.add_to(sys.basis_position(&w).unwrap() as u64, c);
    }
    v
}

/// Build the coalgebra/antipode data of the dual bosonization family on a
/// given presented algebra and transport everything to the canonical
/// `(monomial, e_g)` basis.
fn dual_boson_hopf(alg: &PresentedAlgebra, field_order: u32) -> Result<HopfAlgebraData> {
    let dim = alg.dim();
    let g = s3();
    let sys = &alg.system;
    let word = |letters: &[u8]| alg.word(letters).expect("word reduces into basis");
    let one = word(&[]);
    let idem = |gid: usize| dual_idem_elem(gid, sys);

    // Comultiplication images.
    let mut d_images: Vec<SparseVec> = Vec::new();
    // Delta(a) = a ⊗ 1 + (e_1 - e_12) ⊗ a + (e_132 - e_13) ⊗ b
    //          + (e_123 - e_23) ⊗ c, and its b/c rotations.
    let legs: [[(usize, usize); 3]; 3] = [
        // (idempotent pair (plus, minus), letter) per trailing leg
        [(0, S3_ID_12), (S3_ID_132, S3_ID_13), (S3_ID_123, S3_ID_23)],
        [(0, S3_ID_23), (S3_ID_132, S3_ID_12), (S3_ID_123, S3_ID_13)],
        [(0, S3_ID_13), (S3_ID_132, S3_ID_23), (S3_ID_123, S3_ID_12)],
    ];
    // Letter cycled per leg: for a: (a, b, c); for b: (b, c, a); for c: (c, a, b).
    let letter_cycle: [[u8; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
    for v in 0..3usize {
        let mut img = word(&[v as u8]).tensor(&one);
        for leg in 0..3usize {
            let (plus, minus) = legs[v][leg];
            let coeff = idem(plus).sub(&idem(minus));
            img.add_assign(&coeff.tensor(&word(&[letter_cycle[v][leg]])));
        }
        d_images.push(img);
    }
    for gid in 0..5usize {
        let mut img = SparseVec::zero(vec![72, 72]);
        for g1 in 0..6usize {
            let g2 = g.op(g.inv(g1), gid);
            img.add_assign(&idem(g1).tensor(&idem(g2)));
        }
        d_images.push(img);
    }
    let pair_mul = make_pair_mul(alg.mult.clone(), alg.mult.clone());
    let comult_pres = extend_images(sys.basis(), &d_images, &one.tensor(&one), &pair_mul, false);

    // Counit: e_g -> delta(g = identity), letters -> 0.
    let mut e_values = vec![CycloNum::zero(); 3];
    for gid in 0..5usize {
        e_values.push(if gid == 0 {
            CycloNum::one()
        } else {
            CycloNum::zero()
        });
    }
    let counit_pres = extend_scalar_images(sys.basis(), &e_values);

    // Antipode: S(e_g) = e_(g^{-1}); S on the letters from the antipode
    // axiom against the comultiplication above.
    let mul_w = {
        let m = alg.mult.clone();
        move |a: &SparseVec, b: &SparseVec| m.apply(&a.tensor(b))
    };
    let mut s_images: Vec<SparseVec> = Vec::new();
    for v in 0..3usize {
        let mut img = SparseVec::zero(vec![72]);
        for leg in 0..3usize {
            let (plus, minus) = legs[v][leg];
            // S of the idempotent combination pairs with the same letter.
            let coeff = idem(g.inv(plus)).sub(&idem(g.inv(minus)));
            img.add_assign(
                &mul_w(&coeff, &word(&[letter_cycle[v][leg]])).scale(&CycloNum::from_int(-1)),
            );
        }
        s_images.push(img);
    }
    for gid in 0..5usize {
        s_images.push(idem(g.inv(gid)));
    }
    let antipode_pres = images_to_tensor(
        dim,
        vec![dim],
        extend_images_vec(sys.basis(), &s_images, &one, &mul_w, true),
    );

    // Transport to the canonical (monomial, e_g) basis.
    let p = dual_transport();
    let pinv = invert_map(&p)?;
    let mult = p.tensor(&p).then(&alg.mult)?.then(&pinv)?;
    let comult = p.then(&comult_pres)?.then(&pinv.tensor(&pinv))?;
    let antipode = p.then(&antipode_pres)?.then(&pinv)?;
    let unit = pinv.apply(&alg.unit);
    let counit: Vec<CycloNum> = (0..dim as u64)
        .map(|i| {
            let img = p.apply(&SparseVec::basis(vec![dim], &[i as usize]));
            let mut acc = CycloNum::zero();
            for (k, c) in img.entries() {
                acc += &(c * &counit_pres[*k as usize]);
            }
            acc
        })
        .collect();
    Ok(HopfAlgebraData::new_unchecked(
        dim,
        field_order,
        dual_boson_labels(),
        unit,
        counit,
        mult,
        comult,
        antipode,
    ))
}

fn zero_squares() -> [LinComb; 3] {
    [LinComb::new(), LinComb::new(), LinComb::new()]
}

fn fk3_dual_cache() -> &'static OnceLock<Arc<HopfAlgebraData>> {
    static CACHE: OnceLock<Arc<HopfAlgebraData>> = OnceLock::new();
    &CACHE
}

/// The 72-dimensional non-pointed bosonization `B(V) # K[S_3]` on the
/// canonical `(monomial, e_g)` basis.
pub fn fk3_bosonization_dual() -> Result<Arc<HopfAlgebraData>> {
    if let Some(h) = fk3_dual_cache().get() {
        return Ok(Arc::clone(h));
    }
    let sys = dual_boson_system(zero_squares())?;
    let alg = structure_constants(sys, &comb_from(vec![(FreeWord::empty(), CycloNum::one())]))?;
    let h = Arc::new(dual_boson_hopf(&alg, 1)?);
    let _ = fk3_dual_cache().set(Arc::clone(&h));
    Ok(h)
}

/// The comodule-algebra deformation `W_(lambda_a, lambda_b, lambda_c)` of
/// `B(V) # K[S_3]`. No generator twist is known for this family, so `T` is
/// not constructed; verification covers the remaining axioms.
pub fn fk3_deformation_dual(
    la: &CycloNum,
    lb: &CycloNum,
    lc: &CycloNum,
) -> Result<(Arc<HopfAlgebraData>, Deformation)> {
    let parent = fk3_bosonization_dual()?;
    let squares = [
        comb_from(vec![(FreeWord::empty(), -la)]),
        comb_from(vec![(FreeWord::empty(), -lb)]),
        comb_from(vec![(FreeWord::empty(), -lc)]),
    ];
    let sys = dual_boson_system(squares)?;
    let alg = structure_constants(sys, &comb_from(vec![(FreeWord::empty(), CycloNum::one())]))?;
    let dim = alg.dim();
    let g = s3();
    let sysr = &alg.system;
    let word = |letters: &[u8]| alg.word(letters).expect("word reduces into basis");
    let idem = |gid: usize| dual_idem_elem(gid, sysr);

    // Parent-side elements (canonical coordinates).
    let h_e = |gid: usize| SparseVec::basis(vec![dim], &[fk3_index(0, gid)]);
    let h_letter = |v: usize| -> SparseVec {
        let mut out = SparseVec::zero(vec![dim]);
        for gid in 0..6usize {
            out.add_to(fk3_index(v + 1, gid) as u64, CycloNum::one());
        }
        out
    };
    let h_unit = parent.unit().clone();

    // rho images (presented W-leg ⊗ canonical H-leg).
    let legs: [[(usize, usize); 3]; 3] = [
        [(0, S3_ID_12), (S3_ID_132, S3_ID_13), (S3_ID_123, S3_ID_23)],
        [(0, S3_ID_23), (S3_ID_132, S3_ID_12), (S3_ID_123, S3_ID_13)],
        [(0, S3_ID_13), (S3_ID_132, S3_ID_23), (S3_ID_123, S3_ID_12)],
    ];
    let letter_cycle: [[usize; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
    let mut rho_images: Vec<SparseVec> = Vec::new();
    for v in 0..3usize {
        let mut img = word(&[v as u8]).tensor(&h_unit);
        for leg in 0..3usize {
            let (plus, minus) = legs[v][leg];
            let coeff = idem(plus).sub(&idem(minus));
            img.add_assign(&coeff.tensor(&h_letter(letter_cycle[v][leg])));
        }
        rho_images.push(img);
    }
    for gid in 0..5usize {
        let mut img = SparseVec::zero(vec![72, 72]);
        for g1 in 0..6usize {
            let g2 = g.op(g.inv(g1), gid);
            img.add_assign(&idem(g1).tensor(&h_e(g2)));
        }
        rho_images.push(img);
    }
    let pair_mul = make_pair_mul(alg.mult.clone(), parent.mult().clone());
    let rho_pres = extend_images(
        sysr.basis(),
        &rho_images,
        &alg.unit.tensor(&h_unit),
        &pair_mul,
        false,
    );

    // Transport the W legs to the canonical basis.
    let p = dual_transport();
    let pinv = invert_map(&p)?;
    let id_h = SparseTensor::identity(vec![dim]);
    let mult = p.tensor(&p).then(&alg.mult)?.then(&pinv)?;
    let coaction = p.then(&rho_pres)?.then(&pinv.tensor(&id_h))?;
    let unit = pinv.apply(&alg.unit);

    let w = Deformation::new(
        Arc::clone(&parent),
        dual_boson_labels(),
        unit,
        mult,
        coaction,
        None,
        Provenance::Catalog("fk3-dual-def".into()),
    );
    Ok((parent, w))
}

/// The deformed dual Hopf algebras at the end of the classification:
/// squares of `a, b, c` become idempotent combinations weighted by
/// differences of the `lambda`s; everything else matches the bosonization.
pub fn deformed_hopf_sec55(
    la: &CycloNum,
    lb: &CycloNum,
    lc: &CycloNum,
) -> Result<Arc<HopfAlgebraData>> {
    // a^2 = (la - lb)(e_13 + e_132) + (la - lc)(e_23 + e_123)
    // b^2 = (lb - lc)(e_12 + e_132) + (lb - la)(e_13 + e_123)
    // c^2 = (lc - la)(e_23 + e_132) + (lc - lb)(e_12 + e_123)
    let sq = |d1: CycloNum, p1: [usize; 2], d2: CycloNum, p2: [usize; 2]| -> LinComb {
        let mut comb = LinComb::new();
        for gid in p1 {
            for (w, c) in dual_idem_comb(&[], gid) {
                crate::rewrite::comb_add(&mut comb, w, -&(&c * &d1));
            }
        }
        for gid in p2 {
            for (w, c) in dual_idem_comb(&[], gid) {
                crate::rewrite::comb_add(&mut comb, w, -&(&c * &d2));
            }
        }
        comb
    };
    let squares = [
        sq(la - lb, [S3_ID_13, S3_ID_132], la - lc, [S3_ID_23, S3_ID_123]),
        sq(lb - lc, [S3_ID_12, S3_ID_132], lb - la, [S3_ID_13, S3_ID_123]),
        sq(lc - la, [S3_ID_23, S3_ID_132], lc - lb, [S3_ID_12, S3_ID_123]),
    ];
    let sys = dual_boson_system(squares)?;
    let alg = structure_constants(sys, &comb_from(vec![(FreeWord::empty(), CycloNum::one())]))?;
    Ok(Arc::new(dual_boson_hopf(&alg, 1)?))
}

/// Rebuild the presented algebra of `W_(lambda, mu)` (used by tests that
/// need word-level access).
pub fn fk3_group_presented(lambda: &CycloNum, mu: &CycloNum) -> Result<PresentedAlgebra> {
    let (cab, cacb) = plain_cyclic(mu);
    let sys = group_boson_system(lambda, cab, cacb)?;
    structure_constants(sys, &comb_from(vec![(FreeWord::empty(), CycloNum::one())]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::paper36_group;

    #[test]
    fn group_algebra_of_trivial_group_is_base_field() {
        let h = group_algebra(&FiniteGroup::cyclic(1));
        assert_eq!(h.dim(), 1);
        assert!(h.verify().is_pass());
    }

    #[test]
    fn dual_of_kg_matches_dual_group_algebra() {
        for g in [FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)] {
            let kg = group_algebra(&g);
            let dual = kg.dual();
            let kdual = dual_group_algebra(&g);
            assert_eq!(dual.mult(), kdual.mult());
            assert_eq!(dual.comult(), kdual.comult());
            assert_eq!(dual.antipode(), kdual.antipode());
            assert_eq!(dual.unit(), kdual.unit());
            assert_eq!(dual.counit(), kdual.counit());
            assert!(kdual.verify().is_pass());
        }
    }

    #[test]
    fn dual_group_algebra_of_s3_is_commutative_not_cocommutative() {
        let h = dual_group_algebra(&FiniteGroup::symmetric(3));
        assert_eq!(h.dim(), 6);
        // Commutative: mult symmetric.
        for i in 0..6u64 {
            for j in 0..6u64 {
                for k in 0..6u64 {
                    assert_eq!(h.mult().get(i * 6 + j, k), h.mult().get(j * 6 + i, k));
                }
            }
        }
        // Not cocommutative: Delta(e_g) asymmetric for some g.
        let mut cocomm = true;
        for i in 0..6u64 {
            let d = h.comult().apply(&SparseVec::basis(vec![6], &[i as usize]));
            let flipped = d
                .permute_legs(&crate::tensor::Permutation::transposition(2, 1, 2))
                .unwrap();
            if d != flipped {
                cocomm = false;
            }
        }
        assert!(!cocomm);
    }

    #[test]
    fn v4_group_deformation_is_a_matrix_algebra() {
        let c = MuNCocycle::v4_nondegenerate();
        let (_kg, w) = group_cocycle_deformation(&c).unwrap();
        let report = w.verify();
        assert!(report.is_pass(), "{}", report.summary());
        assert!(w.check_t_inverts_m().unwrap());
        // T matches the closed group formula T(U_g ⊗ h) = U_g U_h^{-1} ⊗ U_h.
        let g = c.group();
        let n = 4u64;
        let t = w.inverse_galois().unwrap();
        for x in 0..4usize {
            for h in 0..4usize {
                let hinv = g.inv(h);
                let coef = c
                    .value(x, hinv)
                    .checked_div(&c.value(h, hinv))
                    .unwrap();
                let row: Vec<(u64, CycloNum)> = t
                    .row(x as u64 * n + h as u64)
                    .map(|(o, c)| (o, c.clone()))
                    .collect();
                assert_eq!(row.len(), 1);
                let (o, v) = &row[0];
                assert_eq!(*o, g.op(x, hinv) as u64 * n + h as u64);
                assert_eq!(v, &coef);
            }
        }
    }

    #[test]
    fn dual_group_deformation_smallest_cases() {
        // F trivial in S3: W = K[G] itself.
        let g = FiniteGroup::symmetric(3);
        let f = Subgroup::new(&g, &[g.identity()]).unwrap();
        let triv = MuNCocycle::trivial(f.as_group(&g), 1);
        let (parent, w) = dual_group_deformation(&g, &f, &triv).unwrap();
        assert_eq!(w.mult(), parent.mult());
        let report = w.verify();
        assert!(report.is_pass(), "{}", report.summary());

        // F = G = V4 nondegenerate.
        let alpha = MuNCocycle::v4_nondegenerate();
        let v4 = alpha.group().clone();
        let full = Subgroup::full(&v4);
        let (_, w) = dual_group_deformation(&v4, &full, &alpha).unwrap();
        let report = w.verify();
        assert!(report.is_pass(), "{}", report.summary());
        assert!(w.check_t_inverts_m().unwrap());

        // Degenerate cocycle rejected.
        let triv4 = MuNCocycle::trivial(v4.clone(), 2);
        assert!(matches!(
            dual_group_deformation(&v4, &full, &triv4),
            Err(Error::DegenerateCocycle(_))
        ));
    }

    #[test]
    fn order36_dual_group_deformation_verifies() {
        let g = paper36_group();
        let f = crate::groups::paper36_normal_subgroup(&g).unwrap();
        let alpha = MuNCocycle::z3z3_zeta_jk();
        // The subgroup's own table must equal the (Z/3)^2 product table.
        let (parent, w) = dual_group_deformation(&g, &f, &alpha).unwrap();
        assert_eq!(parent.dim(), 36);
        assert_eq!(w.dim(), 36);
        let report = w.verify();
        assert!(report.is_pass(), "{}", report.summary());
    }

    #[test]
    fn taft_hopf_algebras_verify() {
        for n in [2u32, 3, 4] {
            let h = taft_hopf(n).unwrap();
            assert_eq!(h.dim(), (n * n) as usize);
            assert!(h.verify().is_pass(), "Taft H_{n}");
            // Dual also passes.
            assert!(h.dual().verify().is_pass(), "dual of Taft H_{n}");
        }
    }

    #[test]
    fn taft_deformation_n2_relations() {
        let a = CycloNum::from_int(1);
        let b = CycloNum::from_int(2);
        let (_h, w) = taft_deformation(2, &a, &b).unwrap();
        // g~^2 = a, t^2 = b, t g~ = -g~ t.
        let gt = |i: usize, j: usize| SparseVec::basis(vec![4], &[i * 2 + j]);
        assert_eq!(w.multiply(&gt(1, 0), &gt(1, 0)), gt(0, 0).scale(&a));
        assert_eq!(w.multiply(&gt(0, 1), &gt(0, 1)), gt(0, 0).scale(&b));
        assert_eq!(
            w.multiply(&gt(0, 1), &gt(1, 0)),
            w.multiply(&gt(1, 0), &gt(0, 1)).scale(&CycloNum::from_int(-1))
        );
        let report = w.verify();
        assert!(report.is_pass(), "{}", report.summary());
        // a = 0 is rejected.
        assert!(taft_deformation(2, &CycloNum::zero(), &b).is_err());
    }

    #[test]
    fn taft_coaction_reproduces_a_xi_values() {
        // A_xi(t^j) is the quantum integer [j] times t^(j-1), where
        // xi(g^i x^j) = delta(j = 1). The gauge here has A_xi(t) = 1 and
        // A_gamma(g~^i t^j) = zeta^(i-j), which forces the zeta-version
        // [j] = 1 + zeta + ... + zeta^(j-1).
        for n in [2u32, 3] {
            let nn = n as usize;
            let (h, w) = taft_deformation(n, &CycloNum::from_int(1), &CycloNum::from_int(2))
                .unwrap();
            let mut xi = SparseVec::zero(vec![h.dim()]);
            for i in 0..nn {
                xi.add_to((i * nn + 1) as u64, CycloNum::one());
            }
            let a_xi = w.functional_action(&xi);
            let zeta = CycloNum::zeta(n);
            for j in 1..nn {
                let mut coef = CycloNum::zero();
                let mut power = CycloNum::one();
                for _ in 0..j {
                    coef += &power;
                    power = &power * &zeta;
                }
                let image = a_xi.apply(&SparseVec::basis(vec![nn * nn], &[j]));
                let expect = SparseVec::basis(vec![nn * nn], &[j - 1]).scale(&coef);
                assert_eq!(image, expect, "A_xi(t^{j}) at n={n}");
            }
            // A_xi(t) = 1 exactly (the gauge that pins the scale of t).
            let image = a_xi.apply(&SparseVec::basis(vec![nn * nn], &[1]));
            assert_eq!(image, SparseVec::basis(vec![nn * nn], &[0]));
            // A_gamma eigenvalues zeta^(i-j) on g~^i t^j, with
            // gamma(g^i x^j) = delta(j, 0) zeta^i.
            let mut gamma = SparseVec::zero(vec![h.dim()]);
            for i in 0..nn {
                gamma.add_to((i * nn) as u64, zeta.pow(i as i64).unwrap());
            }
            let a_gamma = w.functional_action(&gamma);
            for i in 0..nn {
                for j in 0..nn {
                    let v = SparseVec::basis(vec![nn * nn], &[i * nn + j]);
                    let expect = v.scale(&zeta.pow(i as i64 - j as i64).unwrap());
                    assert_eq!(a_gamma.apply(&v), expect);
                }
            }
            // Conjugation by g~ (the map m tau T_g) has eigenvalue zeta^j.
            let proj =
                crate::invariants::projector_from_t(&w, &SparseVec::basis(vec![nn * nn], &[nn]))
                    .unwrap();
            for i in 0..nn {
                for j in 0..nn {
                    let v = SparseVec::basis(vec![nn * nn], &[i * nn + j]);
                    let expect = v.scale(&zeta.pow(j as i64).unwrap());
                    assert_eq!(proj.apply(&v), expect, "T~_g eigenvalue at ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn fk3_group_bosonization_has_dimension_72() {
        let h = fk3_bosonization_group().unwrap();
        assert_eq!(h.dim(), 72);
        // Group-likes multiply by the group table.
        let g = s3();
        for x in 0..6usize {
            for y in 0..6usize {
                let p = g.op(x, y);
                let prod = h.mult().apply(
                    &SparseVec::basis(vec![72], &[fk3_index(0, x)])
                        .tensor(&SparseVec::basis(vec![72], &[fk3_index(0, y)])),
                );
                assert_eq!(prod, SparseVec::basis(vec![72], &[fk3_index(0, p)]));
            }
        }
    }

    #[test]
    fn fk3_group_deformation_at_zero_matches_parent_mult() {
        let h = fk3_bosonization_group().unwrap();
        let (_, w) = fk3_deformation_group(&CycloNum::zero(), &CycloNum::zero()).unwrap();
        assert_eq!(w.mult(), h.mult());
        assert_eq!(w.coaction(), h.comult());
    }

    #[test]
    fn fk3_dual_bosonization_relations() {
        let h = fk3_bosonization_dual().unwrap();
        assert_eq!(h.dim(), 72);
        let g = s3();
        // e_g e_h = delta e_g and sum e_g = 1.
        let e = |gid: usize| SparseVec::basis(vec![72], &[fk3_index(0, gid)]);
        let mut total = SparseVec::zero(vec![72]);
        for x in 0..6usize {
            total.add_assign(&e(x));
            for y in 0..6usize {
                let prod = h.mult().apply(&e(x).tensor(&e(y)));
                if x == y {
                    assert_eq!(prod, e(x));
                } else {
                    assert!(prod.is_zero());
                }
            }
        }
        assert_eq!(&total, h.unit());
        // e_g a = a e_((12) g).
        let a_elt: SparseVec = {
            let mut v = SparseVec::zero(vec![72]);
            for gid in 0..6 {
                v.add_to(fk3_index(1, gid) as u64, CycloNum::one());
            }
            v
        };
        for gid in 0..6usize {
            let lhs = h.mult().apply(&e(gid).tensor(&a_elt));
            let rhs = h
                .mult()
                .apply(&a_elt.tensor(&e(g.op(S3_ID_12, gid))));
            assert_eq!(lhs, rhs, "e_g a = a e_((12)g) at g={gid}");
            assert!(!lhs.is_zero());
        }
    }

    #[test]
    fn prop510_at_zero_and_sec55_at_equal_lambdas_degenerate() {
        let h = fk3_bosonization_group().unwrap();
        let d = deformed_hopf_prop510(&CycloNum::zero()).unwrap();
        assert_eq!(d.mult(), h.mult());
        assert_eq!(d.comult(), h.comult());
        assert_eq!(d.antipode(), h.antipode());

        let hd = fk3_bosonization_dual().unwrap();
        let lam = CycloNum::from_int(5);
        let d = deformed_hopf_sec55(&lam, &lam, &lam).unwrap();
        assert_eq!(d.mult(), hd.mult());
        assert_eq!(d.comult(), hd.comult());
        assert_eq!(d.antipode(), hd.antipode());
    }
}
