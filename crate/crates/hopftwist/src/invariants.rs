//! Trace invariants of deformations and fingerprint machinery.
//!
//! The basic invariant attached to `(l, sigma, f, h(1), ..., h(l))` is the
//! trace over `W` of
//! `m^l ∘ L_sigma ∘ (Id^(l-1) ⊗ T_h(l)) ··· T_h(1) ∘ A_f`,
//! evaluated by streaming one basis vector of `W` at a time so the peak
//! intermediate is a single sparse vector in `W^(⊗ l+1)`. A fingerprint is
//! the deterministic table of all such values up to a depth cap; equality
//! is necessary for isomorphism of deformations, inequality refutes it.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::deform::Deformation;
use crate::hopf::decode_pair;
use crate::scalar::CycloNum;
use crate::tensor::{Permutation, SparseTensor, SparseVec};
use crate::{Error, Result};

/// An invariant index: depth, leg permutation, dual-basis functional index,
/// and the tuple of `H`-basis indices fed to the iterated `T`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct InvariantSpec {
    pub l: usize,
    pub sigma: Permutation,
    pub f: usize,
    pub hs: Vec<usize>,
}

pub type SpecKey = (usize, Vec<usize>, usize, Vec<usize>);

impl InvariantSpec {
    pub fn new(l: usize, sigma: Permutation, f: usize, hs: Vec<usize>) -> Result<Self> {
        if sigma.size() != l + 1 || hs.len() != l {
            return Err(Error::InvalidInput(format!(
                "invariant spec shape mismatch: l={l}, sigma size {}, {} h's",
                sigma.size(),
                hs.len()
            )));
        }
        Ok(InvariantSpec { l, sigma, f, hs })
    }

    /// Canonical ordering key: (l, sigma one-line, f, hs).
    pub fn key(&self) -> SpecKey {
        (self.l, self.sigma.one_line(), self.f, self.hs.clone())
    }
}

/// The `T_h : W -> W ⊗ W` slices for each basis element of `H`.
pub fn t_slices(w: &Deformation) -> Result<Vec<SparseTensor>> {
    let t = w.require_t()?;
    let n = w.dim();
    let nu = n as u64;
    let mut out = Vec::with_capacity(n);
    for h in 0..nu {
        let mut slice = SparseTensor::new(vec![n], vec![n, n]);
        for x in 0..nu {
            for (o, c) in t.row(x * nu + h) {
                slice.add_to(x, o, c.clone());
            }
        }
        out.push(slice);
    }
    Ok(out)
}

/// Apply the iterated-T chain for the given `h` indices to a vector in `W`.
fn t_chain(v: &SparseVec, slices: &[SparseTensor], hs: &[usize]) -> SparseVec {
    let mut cur = v.clone();
    for (k, &h) in hs.iter().enumerate() {
        cur = slices[h].apply_at(&cur, k);
    }
    cur
}

/// Multiply all legs down to one, left to right.
fn fold_multiply(w: &Deformation, v: &SparseVec) -> SparseVec {
    let mut cur = v.clone();
    while cur.shape().len() > 1 {
        cur = w.mult().apply_at(&cur, 0);
    }
    cur
}

/// One basic invariant `Tr_W(m^l L_sigma T(h(1)..h(l)) A_f)`.
pub fn basic_invariant(w: &Deformation, spec: &InvariantSpec) -> Result<CycloNum> {
    let slices = t_slices(w)?;
    basic_invariant_with(w, spec, &slices, true)
}

/// Same trace with `A_f` composed last instead of first (equal by trace
/// cyclicity; exposed for the cyclic-order property test).
pub fn basic_invariant_a_last(w: &Deformation, spec: &InvariantSpec) -> Result<CycloNum> {
    let slices = t_slices(w)?;
    basic_invariant_with(w, spec, &slices, false)
}

fn basic_invariant_with(
    w: &Deformation,
    spec: &InvariantSpec,
    slices: &[SparseTensor],
    a_first: bool,
) -> Result<CycloNum> {
    let n = w.dim();
    let f_vec = SparseVec::basis(vec![n], &[spec.f]);
    let a_f = w.functional_action(&f_vec);
    let mut acc = CycloNum::zero();
    for i in 0..n as u64 {
        let start = SparseVec::basis(vec![n], &[i as usize]);
        let v = if a_first { a_f.apply(&start) } else { start.clone() };
        if v.is_zero() {
            continue;
        }
        let chained = t_chain(&v, slices, &spec.hs);
        let permuted = chained.permute_legs(&spec.sigma)?;
        let mut folded = fold_multiply(w, &permuted);
        if !a_first {
            folded = a_f.apply(&folded);
        }
        acc += &folded.get(i);
    }
    Ok(acc)
}

/// The basic invariant with extra endomorphisms of `W` inserted on the
/// leading tensor legs between the `T`-chain and `L_sigma` (the projector
/// decomposition of the dual-group analysis); up to `l + 1` maps.
pub fn invariant_with_leg_maps(
    w: &Deformation,
    spec: &InvariantSpec,
    leg_maps: &[&SparseTensor],
) -> Result<CycloNum> {
    assert!(leg_maps.len() <= spec.l + 1);
    let slices = t_slices(w)?;
    let n = w.dim();
    let f_vec = SparseVec::basis(vec![n], &[spec.f]);
    let a_f = w.functional_action(&f_vec);
    let mut acc = CycloNum::zero();
    for i in 0..n as u64 {
        let start = a_f.apply(&SparseVec::basis(vec![n], &[i as usize]));
        if start.is_zero() {
            continue;
        }
        let mut chained = t_chain(&start, &slices, &spec.hs);
        for (leg, map) in leg_maps.iter().enumerate() {
            chained = map.apply_at(&chained, leg);
        }
        let permuted = chained.permute_legs(&spec.sigma)?;
        let folded = fold_multiply(w, &permuted);
        acc += &folded.get(i);
    }
    Ok(acc)
}

/// A deterministic table of basic invariants up to a depth cap, with zero
/// values omitted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fingerprint {
    pub depth: usize,
    pub parent_dim: usize,
    pub f_set: Vec<usize>,
    pub h_set: Vec<usize>,
    pub entries: BTreeMap<SpecKey, CycloNum>,
}

/// Evaluate every spec with `l <= depth` over the given functional and
/// `H`-basis index sets (defaults: full dual/primal bases).
pub fn fingerprint(
    w: &Deformation,
    depth: usize,
    f_set: Option<&[usize]>,
    h_set: Option<&[usize]>,
) -> Result<Fingerprint> {
    let n = w.dim();
    let f_set: Vec<usize> = f_set.map(|s| s.to_vec()).unwrap_or_else(|| (0..n).collect());
    let h_set: Vec<usize> = h_set.map(|s| s.to_vec()).unwrap_or_else(|| (0..n).collect());
    let slices = t_slices(w)?;
    let mut entries = BTreeMap::new();
    for l in 0..=depth {
        let tuples: Vec<Vec<usize>> = cartesian_power(&h_set, l);
        let sigmas = Permutation::all(l + 1);
        let results: Vec<(SpecKey, CycloNum)> = tuples
            .par_iter()
            .flat_map(|hs| {
                let mut local = Vec::new();
                // One T-chain per basis vector, reused for every sigma / f.
                let chains: Vec<SparseVec> = (0..n)
                    .map(|i| t_chain(&SparseVec::basis(vec![n], &[i]), &slices, hs))
                    .collect();
                for sigma in &sigmas {
                    let mut endo = SparseTensor::new(vec![n], vec![n]);
                    for (i, chain) in chains.iter().enumerate() {
                        let permuted = chain.permute_legs(sigma).expect("sigma sized l+1");
                        let folded = fold_multiply(w, &permuted);
                        for (k, c) in folded.entries() {
                            endo.add_to(i as u64, *k, c.clone());
                        }
                    }
                    // Tr(endo ∘ A_f) for all f at once via the coaction.
                    let mut traces: BTreeMap<usize, CycloNum> = BTreeMap::new();
                    for i in 0..n as u64 {
                        for (o, c) in w.coaction().row(i) {
                            let (j, f) = decode_pair(n, o);
                            let e = endo.get(j as u64, i);
                            if e.is_zero() {
                                continue;
                            }
                            let v = c * &e;
                            traces.entry(f).and_modify(|acc| *acc += &v).or_insert(v);
                        }
                    }
                    for &f in &f_set {
                        if let Some(v) = traces.get(&f) {
                            if !v.is_zero() {
                                local.push(((l, sigma.one_line(), f, hs.clone()), v.clone()));
                            }
                        }
                    }
                }
                local
            })
            .collect();
        for (k, v) in results {
            entries.insert(k, v);
        }
    }
    Ok(Fingerprint {
        depth,
        parent_dim: n,
        f_set,
        h_set,
        entries,
    })
}

pub fn cartesian_power(set: &[usize], l: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..l {
        let mut next = Vec::with_capacity(out.len() * set.len());
        for prefix in &out {
            for &x in set {
                let mut t = prefix.clone();
                t.push(x);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Evaluate a curated list of specs (the dim-72 policy).
pub fn evaluate_specs(
    w: &Deformation,
    specs: &[InvariantSpec],
) -> Result<Vec<(SpecKey, CycloNum)>> {
    let slices = t_slices(w)?;
    specs
        .par_iter()
        .map(|s| Ok((s.key(), basic_invariant_with(w, s, &slices, true)?)))
        .collect()
}

/// Outcome of a fingerprint comparison. `Distinct` proves the deformations
/// are non-isomorphic; `IndistinguishableAtDepth` is *not* a proof of
/// isomorphism, only the absence of a refutation at this depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Distinct { first_difference: SpecKey },
    IndistinguishableAtDepth(usize),
}

pub fn compare_fingerprints(a: &Fingerprint, b: &Fingerprint) -> Result<Verdict> {
    if a.parent_dim != b.parent_dim {
        return Err(Error::IncomparableFingerprints(
            "different parent dimensions".into(),
        ));
    }
    if a.depth != b.depth || a.f_set != b.f_set || a.h_set != b.h_set {
        return Err(Error::IncomparableFingerprints(
            "different depth or index sets".into(),
        ));
    }
    let keys: std::collections::BTreeSet<_> =
        a.entries.keys().chain(b.entries.keys()).cloned().collect();
    for k in keys {
        let va = a.entries.get(&k);
        let vb = b.entries.get(&k);
        let equal = match (va, vb) {
            (Some(x), Some(y)) => x == y,
            (None, None) => true,
            _ => false,
        };
        if !equal {
            return Ok(Verdict::Distinct { first_difference: k });
        }
    }
    Ok(Verdict::IndistinguishableAtDepth(a.depth))
}

/// `m ∘ tau ∘ T_h : W -> W` (for dual-group deformations with `h = e_(f^-1)`
/// this is the coefficient projector onto the `U_f` component).
pub fn projector_from_t(w: &Deformation, h: &SparseVec) -> Result<SparseTensor> {
    let t_h = w.t_of(h)?;
    let n = w.dim();
    let flip =
        SparseTensor::permutation_operator(&Permutation::transposition(2, 1, 2), vec![n, n]);
    t_h.then(&flip)?.then(w.mult())
}

/// Apply the Galois automorphism `zeta -> zeta^j` entrywise to a
/// deformation's tensors. Requires the parent Hopf algebra to be fixed by
/// the automorphism (defined over the fixed field).
pub fn galois_twist_deformation(w: &Deformation, j: i64) -> Result<Deformation> {
    let h = w.parent();
    let fixed = |t: &SparseTensor| -> Result<bool> { Ok(&t.map_scalars(|c| c.galois(j))? == t) };
    if !(fixed(h.mult())? && fixed(h.comult())? && fixed(h.antipode())?) {
        return Err(Error::ParentNotRational);
    }
    let unit_fixed = h.unit().map_scalars(|c| c.galois(j))? == *h.unit();
    let counit_fixed = h
        .counit()
        .iter()
        .map(|c| c.galois(j))
        .collect::<Result<Vec<_>>>()?
        == h.counit().to_vec();
    if !unit_fixed || !counit_fixed {
        return Err(Error::ParentNotRational);
    }
    Ok(Deformation::new(
        std::sync::Arc::clone(h),
        w.labels().to_vec(),
        w.unit().map_scalars(|c| c.galois(j))?,
        w.mult().map_scalars(|c| c.galois(j))?,
        w.coaction().map_scalars(|c| c.galois(j))?,
        match w.inverse_galois() {
            Some(t) => Some(t.map_scalars(|c| c.galois(j))?),
            None => None,
        },
        w.provenance().clone(),
    ))
}

/// Which fingerprint entries lie in `Q`.
#[derive(Clone, Debug)]
pub struct RationalityReport {
    pub total_nonzero: usize,
    pub rational: usize,
    pub irrational_keys: Vec<SpecKey>,
}

impl RationalityReport {
    pub fn all_rational(&self) -> bool {
        self.irrational_keys.is_empty()
    }
}

pub fn rationality_report(fp: &Fingerprint) -> RationalityReport {
    let mut rational = 0;
    let mut irrational_keys = Vec::new();
    for (k, v) in &fp.entries {
        if v.is_rational() {
            rational += 1;
        } else {
            irrational_keys.push(k.clone());
        }
    }
    RationalityReport {
        total_nonzero: fp.entries.len(),
        rational,
        irrational_keys,
    }
}

/// Apply a Galois automorphism to every fingerprint value (for the
/// `gamma(c_W) = c_(gamma W)` consistency check).
pub fn galois_fingerprint(fp: &Fingerprint, j: i64) -> Result<Fingerprint> {
    let mut entries = BTreeMap::new();
    for (k, v) in &fp.entries {
        entries.insert(k.clone(), v.galois(j)?);
    }
    Ok(Fingerprint {
        depth: fp.depth,
        parent_dim: fp.parent_dim,
        f_set: fp.f_set.clone(),
        h_set: fp.h_set.clone(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::deform::{Deformation, HopfTwoCocycle};
    use crate::hopf::HopfAlgebraData;
    use std::sync::Arc;

    fn kz2() -> Arc<HopfAlgebraData> {
        let n = 2;
        let mut mult = SparseTensor::new(vec![n, n], vec![n]);
        for i in 0..2usize {
            for j in 0..2usize {
                mult.set_multi(&[i, j], &[(i + j) % 2], CycloNum::one());
            }
        }
        let mut comult = SparseTensor::new(vec![n], vec![n, n]);
        comult.set_multi(&[0], &[0, 0], CycloNum::one());
        comult.set_multi(&[1], &[1, 1], CycloNum::one());
        Arc::new(
            HopfAlgebraData::new(
                n,
                1,
                vec!["U_0".into(), "U_1".into()],
                SparseVec::basis(vec![n], &[0]),
                vec![CycloNum::one(), CycloNum::one()],
                mult,
                comult,
                SparseTensor::identity(vec![n]),
            )
            .unwrap(),
        )
    }

    #[test]
    fn depth_zero_traces_on_a_group_algebra_are_all_one() {
        let w = Deformation::trivial(kz2());
        for f in 0..2 {
            let spec = InvariantSpec::new(0, Permutation::identity(1), f, vec![]).unwrap();
            assert_eq!(basic_invariant(&w, &spec).unwrap(), CycloNum::one());
        }
    }

    #[test]
    fn cyclic_order_agreement() {
        let h = kz2();
        let mut table = vec![vec![CycloNum::one(); 2]; 2];
        table[1][1] = CycloNum::from_int(-1);
        let c = HopfTwoCocycle::new(Arc::clone(&h), table).unwrap();
        let w = c.twist().unwrap();
        for l in 0..=2usize {
            for sigma in Permutation::all(l + 1) {
                for f in 0..2 {
                    for hs in cartesian_power(&[0, 1], l) {
                        let spec = InvariantSpec::new(l, sigma.clone(), f, hs).unwrap();
                        assert_eq!(
                            basic_invariant(&w, &spec).unwrap(),
                            basic_invariant_a_last(&w, &spec).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn equal_deformations_have_equal_fingerprints() {
        let w = Deformation::trivial(kz2());
        let f1 = fingerprint(&w, 2, None, None).unwrap();
        let f2 = fingerprint(&w, 2, None, None).unwrap();
        assert_eq!(f1, f2);
        assert!(matches!(
            compare_fingerprints(&f1, &f2).unwrap(),
            Verdict::IndistinguishableAtDepth(2)
        ));
        // Mismatched depths are rejected.
        let f3 = fingerprint(&w, 1, None, None).unwrap();
        assert!(compare_fingerprints(&f1, &f3).is_err());
    }

    #[test]
    fn fingerprint_matches_per_spec_evaluation() {
        let h = kz2();
        let mut table = vec![vec![CycloNum::one(); 2]; 2];
        table[1][1] = CycloNum::from_int(-1);
        let c = HopfTwoCocycle::new(Arc::clone(&h), table).unwrap();
        let w = c.twist().unwrap();
        let fp = fingerprint(&w, 2, None, None).unwrap();
        for l in 0..=2usize {
            for sigma in Permutation::all(l + 1) {
                for f in 0..2 {
                    for hs in cartesian_power(&[0, 1], l) {
                        let spec = InvariantSpec::new(l, sigma.clone(), f, hs).unwrap();
                        let v = basic_invariant(&w, &spec).unwrap();
                        let from_fp = fp.entries.get(&spec.key());
                        if v.is_zero() {
                            assert!(from_fp.is_none());
                        } else {
                            assert_eq!(from_fp, Some(&v));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn galois_twist_requires_rational_parent_and_is_identity_at_one() {
        let w = Deformation::trivial(kz2());
        let tw = galois_twist_deformation(&w, 1).unwrap();
        assert_eq!(tw.mult(), w.mult());
        assert_eq!(tw.coaction(), w.coaction());
    }
}
