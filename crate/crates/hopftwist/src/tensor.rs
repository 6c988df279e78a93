//! Sparse exact multi-linear algebra over `Q(zeta_N)`.
//!
//! A [`SparseTensor`] is a linear map between tensor products of
//! finite-dimensional spaces, stored as a sparse map from multi-indices to
//! nonzero [`CycloNum`] entries. Multi-indices are packed row-major into a
//! single integer key, which keeps leg permutation and contraction cheap.
//! Linear solving is fraction-free (Bareiss-style, with sparsity-aware
//! partial pivoting) and exact.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::One;

use crate::scalar::{CycloNum, Rational};
use crate::{Error, Result};

/// A permutation of `{1..p}`, stored 0-based: `apply(i) = images[i]`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(p: usize) -> Self {
        Permutation {
            images: (0..p).collect(),
        }
    }

    /// Build from 0-based images; must be a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let p = images.len();
        let mut seen = vec![false; p];
        for &i in &images {
            if i >= p || seen[i] {
                return Err(Error::InvalidInput(format!(
                    "not a permutation: {images:?}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Build from 1-based one-line notation.
    pub fn from_one_line(line: &[usize]) -> Result<Self> {
        Self::from_images(line.iter().map(|&i| i.wrapping_sub(1)).collect())
    }

    /// A transposition (i j) of {1..p}, 1-based arguments.
    pub fn transposition(p: usize, i: usize, j: usize) -> Self {
        let mut images: Vec<usize> = (0..p).collect();
        images.swap(i - 1, j - 1);
        Permutation { images }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Function composition: `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.size(), other.size());
        Permutation {
            images: (0..self.size()).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// 1-based one-line notation, e.g. `[2, 1, 3]`.
    pub fn one_line(&self) -> Vec<usize> {
        self.images.iter().map(|&i| i + 1).collect()
    }

    /// All permutations of `{1..p}` in lexicographic one-line order.
    pub fn all(p: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut line: Vec<usize> = (0..p).collect();
        loop {
            out.push(Permutation {
                images: line.clone(),
            });
            // next lexicographic permutation
            let Some(i) = (0..p.saturating_sub(1)).rev().find(|&i| line[i] < line[i + 1]) else {
                break;
            };
            let j = (i + 1..p).rev().find(|&j| line[j] > line[i]).unwrap();
            line.swap(i, j);
            line[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ{:?}", self.one_line())
    }
}

pub fn encode_index(shape: &[usize], multi: &[usize]) -> u64 {
    debug_assert_eq!(shape.len(), multi.len());
    let mut key = 0u64;
    for (d, i) in shape.iter().zip(multi) {
        debug_assert!(i < d);
        key = key * (*d as u64) + *i as u64;
    }
    key
}

pub fn decode_index(shape: &[usize], mut key: u64) -> Vec<usize> {
    let mut multi = vec![0usize; shape.len()];
    for (slot, d) in multi.iter_mut().zip(shape).rev() {
        *slot = (key % (*d as u64)) as usize;
        key /= *d as u64;
    }
    multi
}

pub fn total_dim(shape: &[usize]) -> u64 {
    shape.iter().map(|&d| d as u64).product()
}

/// Sparse vector in a tensor product of spaces.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseVec {
    shape: Vec<usize>,
    entries: BTreeMap<u64, CycloNum>,
}

impl SparseVec {
    pub fn zero(shape: Vec<usize>) -> Self {
        SparseVec {
            shape,
            entries: BTreeMap::new(),
        }
    }

    pub fn basis(shape: Vec<usize>, multi: &[usize]) -> Self {
        let key = encode_index(&shape, multi);
        let mut entries = BTreeMap::new();
        entries.insert(key, CycloNum::one());
        SparseVec { shape, entries }
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn entries(&self) -> impl Iterator<Item = (&u64, &CycloNum)> {
        self.entries.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, key: u64) -> CycloNum {
        self.entries.get(&key).cloned().unwrap_or_else(CycloNum::zero)
    }

    pub fn add_to(&mut self, key: u64, value: CycloNum) {
        if value.is_zero() {
            return;
        }
        match self.entries.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn set(&mut self, key: u64, value: CycloNum) {
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    pub fn scale(&self, c: &CycloNum) -> SparseVec {
        if c.is_zero() {
            return SparseVec::zero(self.shape.clone());
        }
        SparseVec {
            shape: self.shape.clone(),
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (*k, v * c))
                .collect(),
        }
    }

    pub fn add(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &SparseVec) {
        assert_eq!(self.shape, other.shape);
        for (k, v) in &other.entries {
            self.add_to(*k, v.clone());
        }
    }

    pub fn add_scaled(&mut self, other: &SparseVec, c: &CycloNum) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.entries {
            self.add_to(*k, v * c);
        }
    }

    pub fn sub(&self, other: &SparseVec) -> SparseVec {
        let mut out = self.clone();
        for (k, v) in &other.entries {
            out.add_to(*k, -v);
        }
        out
    }

    pub fn tensor(&self, other: &SparseVec) -> SparseVec {
        let shape: Vec<usize> = self
            .shape
            .iter()
            .chain(other.shape.iter())
            .copied()
            .collect();
        let od = total_dim(&other.shape);
        let mut entries = BTreeMap::new();
        for (k1, v1) in &self.entries {
            for (k2, v2) in &other.entries {
                let v = v1 * v2;
                if !v.is_zero() {
                    entries.insert(k1 * od + k2, v);
                }
            }
        }
        SparseVec {
            shape,
            entries,
        }
    }

    /// `L_sigma`: the vector at tensor position `i` moves to position
    /// `sigma(i)`, i.e. `L_sigma(w_1 ⊗ … ⊗ w_p) = w_{sigma^{-1}(1)} ⊗ …`.
    pub fn permute_legs(&self, sigma: &Permutation) -> Result<SparseVec> {
        let p = self.shape.len();
        if sigma.size() != p {
            return Err(Error::ShapeMismatch(format!(
                "permutation of size {} on {p} legs",
                sigma.size()
            )));
        }
        let mut shape = vec![0usize; p];
        for i in 0..p {
            shape[sigma.apply(i)] = self.shape[i];
        }
        let mut entries = BTreeMap::new();
        for (k, v) in &self.entries {
            let multi = decode_index(&self.shape, *k);
            let mut perm = vec![0usize; p];
            for i in 0..p {
                perm[sigma.apply(i)] = multi[i];
            }
            entries.insert(encode_index(&shape, &perm), v.clone());
        }
        Ok(SparseVec { shape, entries })
    }

    pub fn map_scalars<F: Fn(&CycloNum) -> Result<CycloNum>>(&self, f: F) -> Result<SparseVec> {
        let mut out = SparseVec::zero(self.shape.clone());
        for (k, v) in &self.entries {
            out.add_to(*k, f(v)?);
        }
        Ok(out)
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SparseVec{:?}{{", self.shape)?;
        for (k, v) in &self.entries {
            write!(f, " {:?}: {},", decode_index(&self.shape, *k), v)?;
        }
        write!(f, "}}")
    }
}

/// Sparse linear map between tensor products, entries keyed by
/// `in_key * out_dim + out_key` so rows are contiguous in the map.
#[derive(Clone, PartialEq, Eq)]
pub struct SparseTensor {
    in_shape: Vec<usize>,
    out_shape: Vec<usize>,
    entries: BTreeMap<u64, CycloNum>,
}

impl SparseTensor {
    pub fn new(in_shape: Vec<usize>, out_shape: Vec<usize>) -> Self {
        SparseTensor {
            in_shape,
            out_shape,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(shape: Vec<usize>) -> Self {
        let d = total_dim(&shape);
        let mut t = SparseTensor::new(shape.clone(), shape);
        for k in 0..d {
            t.entries.insert(k * d + k, CycloNum::one());
        }
        t
    }

    pub fn in_shape(&self) -> &[usize] {
        &self.in_shape
    }

    pub fn out_shape(&self) -> &[usize] {
        &self.out_shape
    }

    pub fn in_dim(&self) -> u64 {
        total_dim(&self.in_shape)
    }

    pub fn out_dim(&self) -> u64 {
        total_dim(&self.out_shape)
    }

    pub fn entry_count(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn add_to(&mut self, in_key: u64, out_key: u64, value: CycloNum) {
        if value.is_zero() {
            return;
        }
        let key = in_key * self.out_dim() + out_key;
        match self.entries.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(value);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn set_multi(&mut self, in_multi: &[usize], out_multi: &[usize], value: CycloNum) {
        let ik = encode_index(&self.in_shape, in_multi);
        let ok = encode_index(&self.out_shape, out_multi);
        let key = ik * self.out_dim() + ok;
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    pub fn get(&self, in_key: u64, out_key: u64) -> CycloNum {
        self.entries
            .get(&(in_key * self.out_dim() + out_key))
            .cloned()
            .unwrap_or_else(CycloNum::zero)
    }

    /// All entries as `(in_key, out_key, value)`.
    pub fn entries(&self) -> impl Iterator<Item = (u64, u64, &CycloNum)> {
        let od = self.out_dim();
        self.entries.iter().map(move |(k, v)| (k / od, k % od, v))
    }

    /// The row of a single input basis vector.
    pub fn row(&self, in_key: u64) -> impl Iterator<Item = (u64, &CycloNum)> {
        let od = self.out_dim();
        self.entries
            .range(in_key * od..(in_key + 1) * od)
            .map(move |(k, v)| (k % od, v))
    }

    /// Build from images of input basis vectors.
    pub fn from_basis_images<F>(in_shape: Vec<usize>, out_shape: Vec<usize>, mut image: F) -> Self
    where
        F: FnMut(u64) -> SparseVec,
    {
        let mut t = SparseTensor::new(in_shape, out_shape);
        for ik in 0..t.in_dim() {
            let v = image(ik);
            debug_assert_eq!(v.shape(), t.out_shape.as_slice());
            for (ok, c) in v.entries() {
                t.add_to(ik, *ok, c.clone());
            }
        }
        t
    }

    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        debug_assert_eq!(v.shape(), self.in_shape.as_slice());
        let mut out = SparseVec::zero(self.out_shape.clone());
        let od = self.out_dim();
        for (ik, c) in &v.entries {
            for (k, val) in self.entries.range(ik * od..(ik + 1) * od) {
                out.add_to(k % od, val * c);
            }
        }
        out
    }

    /// Composition `then ∘ self` (apply `self` first).
    pub fn then(&self, then: &SparseTensor) -> Result<SparseTensor> {
        if self.out_dim() != then.in_dim() {
            return Err(Error::ShapeMismatch(format!(
                "compose: output shape {:?} does not match input shape {:?}",
                self.out_shape, then.in_shape
            )));
        }
        let mut out = SparseTensor::new(self.in_shape.clone(), then.out_shape.clone());
        let od = then.out_dim();
        for (ik, mid, c) in self.entries() {
            for (k, val) in then.entries.range(mid * od..(mid + 1) * od) {
                out.add_to(ik, k % od, val * c);
            }
        }
        Ok(out)
    }

    /// Compose a pipeline of maps, applied left to right.
    pub fn compose_chain(maps: &[&SparseTensor]) -> Result<SparseTensor> {
        assert!(!maps.is_empty());
        let mut acc = maps[0].clone();
        for m in &maps[1..] {
            acc = acc.then(m)?;
        }
        Ok(acc)
    }

    /// Tensor product of maps: `(self ⊗ other)`.
    pub fn tensor(&self, other: &SparseTensor) -> SparseTensor {
        let in_shape: Vec<usize> = self
            .in_shape
            .iter()
            .chain(other.in_shape.iter())
            .copied()
            .collect();
        let out_shape: Vec<usize> = self
            .out_shape
            .iter()
            .chain(other.out_shape.iter())
            .copied()
            .collect();
        let mut t = SparseTensor::new(in_shape, out_shape);
        let oid = other.in_dim();
        let ood = other.out_dim();
        for (i1, o1, c1) in self.entries() {
            for (i2, o2, c2) in other.entries() {
                t.add_to(i1 * oid + i2, o1 * ood + o2, c1 * c2);
            }
        }
        t
    }

    /// The operator `L_sigma` on a tensor power.
    pub fn permutation_operator(sigma: &Permutation, shape: Vec<usize>) -> SparseTensor {
        let mut out_shape = vec![0usize; shape.len()];
        for i in 0..shape.len() {
            out_shape[sigma.apply(i)] = shape[i];
        }
        let d = total_dim(&shape);
        let mut t = SparseTensor::new(shape.clone(), out_shape.clone());
        for k in 0..d {
            let multi = decode_index(&shape, k);
            let mut perm = vec![0usize; shape.len()];
            for i in 0..shape.len() {
                perm[sigma.apply(i)] = multi[i];
            }
            t.add_to(k, encode_index(&out_shape, &perm), CycloNum::one());
        }
        t
    }

    /// `L_sigma ∘ self` for an operator into a tensor power.
    pub fn permute_out_legs(&self, sigma: &Permutation) -> Result<SparseTensor> {
        if sigma.size() != self.out_shape.len() {
            return Err(Error::ShapeMismatch(format!(
                "permutation of size {} on {} output legs",
                sigma.size(),
                self.out_shape.len()
            )));
        }
        let p = self.out_shape.len();
        let mut out_shape = vec![0usize; p];
        for i in 0..p {
            out_shape[sigma.apply(i)] = self.out_shape[i];
        }
        let mut t = SparseTensor::new(self.in_shape.clone(), out_shape.clone());
        for (ik, ok, c) in self.entries() {
            let multi = decode_index(&self.out_shape, ok);
            let mut perm = vec![0usize; p];
            for i in 0..p {
                perm[sigma.apply(i)] = multi[i];
            }
            t.add_to(ik, encode_index(&out_shape, &perm), c.clone());
        }
        Ok(t)
    }

    /// Transpose: swap input and output (structure-constant duality).
    pub fn transpose(&self) -> SparseTensor {
        let mut t = SparseTensor::new(self.out_shape.clone(), self.in_shape.clone());
        for (ik, ok, c) in self.entries() {
            t.add_to(ok, ik, c.clone());
        }
        t
    }

    pub fn scale(&self, c: &CycloNum) -> SparseTensor {
        let mut t = SparseTensor::new(self.in_shape.clone(), self.out_shape.clone());
        if c.is_zero() {
            return t;
        }
        for (k, v) in &self.entries {
            let nv = v * c;
            if !nv.is_zero() {
                t.entries.insert(*k, nv);
            }
        }
        t
    }

    pub fn add(&self, other: &SparseTensor) -> SparseTensor {
        assert_eq!(self.in_shape, other.in_shape);
        assert_eq!(self.out_shape, other.out_shape);
        let mut t = self.clone();
        for (ik, ok, c) in other.entries() {
            t.add_to(ik, ok, c.clone());
        }
        t
    }

    pub fn sub(&self, other: &SparseTensor) -> SparseTensor {
        assert_eq!(self.in_shape, other.in_shape);
        assert_eq!(self.out_shape, other.out_shape);
        let mut t = self.clone();
        for (ik, ok, c) in other.entries() {
            t.add_to(ik, ok, -c);
        }
        t
    }

    pub fn map_scalars<F: Fn(&CycloNum) -> Result<CycloNum>>(&self, f: F) -> Result<SparseTensor> {
        let mut t = SparseTensor::new(self.in_shape.clone(), self.out_shape.clone());
        for (ik, ok, c) in self.entries() {
            t.add_to(ik, ok, f(c)?);
        }
        Ok(t)
    }

    /// Trace of an endomorphism; cyclic under composition.
    pub fn trace(&self) -> Result<CycloNum> {
        if self.in_dim() != self.out_dim() {
            return Err(Error::ShapeMismatch(format!(
                "trace of a non-square map {:?} -> {:?}",
                self.in_shape, self.out_shape
            )));
        }
        let mut acc = CycloNum::zero();
        let d = self.out_dim();
        for k in 0..d {
            if let Some(c) = self.entries.get(&(k * d + k)) {
                acc += c;
            }
        }
        Ok(acc)
    }

    /// Apply a map to legs `[at, at + k)` of a vector, splicing the output
    /// legs in place. The map must have `k` input legs.
    pub fn apply_at(&self, v: &SparseVec, at: usize) -> SparseVec {
        let k = self.in_shape.len();
        debug_assert_eq!(&v.shape()[at..at + k], self.in_shape.as_slice());
        let mut shape: Vec<usize> = v.shape()[..at].to_vec();
        shape.extend_from_slice(&self.out_shape);
        shape.extend_from_slice(&v.shape()[at + k..]);

        let suffix_dim: u64 = total_dim(&v.shape()[at + k..]);
        let mid_dim: u64 = total_dim(&v.shape()[at..at + k]);
        let out_mid = self.out_dim();
        let mut out = SparseVec::zero(shape);
        for (key, c) in v.entries() {
            let suffix = key % suffix_dim;
            let rest = key / suffix_dim;
            let mid = rest % mid_dim;
            let prefix = rest / mid_dim;
            for (ok, val) in self.entries.range(mid * out_mid..(mid + 1) * out_mid) {
                let nk = (prefix * out_mid + ok % out_mid) * suffix_dim + suffix;
                out.add_to(nk, val * c);
            }
        }
        out
    }
}

impl fmt::Debug for SparseTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "SparseTensor({:?} -> {:?}, {} entries)",
            self.in_shape,
            self.out_shape,
            self.entries.len()
        )
    }
}

// ---------------------------------------------------------------------------
// Exact linear solving
// ---------------------------------------------------------------------------

/// Dense working matrix for elimination.
struct DenseMat {
    rows: usize,
    cols: usize,
    data: Vec<CycloNum>,
}

impl DenseMat {
    fn zero(rows: usize, cols: usize) -> Self {
        DenseMat {
            rows,
            cols,
            data: vec![CycloNum::zero(); rows * cols],
        }
    }

    fn at(&self, r: usize, c: usize) -> &CycloNum {
        &self.data[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: CycloNum) {
        self.data[r * self.cols + c] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn row_nnz(&self, r: usize, from_col: usize, to_col: usize) -> usize {
        (from_col..to_col)
            .filter(|&c| !self.at(r, c).is_zero())
            .count()
    }

    /// Clear denominators row by row (the elimination below is then
    /// fraction-free on each pivot step).
    fn clear_denominators(&mut self, upto_col: usize) {
        use num_bigint::BigInt;
        use num_integer::Integer;
        for r in 0..self.rows {
            let mut l = BigInt::one();
            for c in 0..self.cols.min(upto_col) {
                for coef in self.at(r, c).coeffs() {
                    l = l.lcm(coef.denom());
                }
            }
            if l.is_one() {
                continue;
            }
            let scale = CycloNum::from_rational(Rational::from(l));
            for c in 0..self.cols {
                let v = self.at(r, c) * &scale;
                self.set(r, c, v);
            }
        }
    }
}

/// Fraction-free row echelon reduction (Bareiss). Eliminates on the first
/// `lead_cols` columns; the remaining columns ride along (augmented part).
/// Returns the pivot (row, col) list.
fn bareiss_echelon(m: &mut DenseMat, lead_cols: usize) -> Vec<(usize, usize)> {
    m.clear_denominators(lead_cols);
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut prev = CycloNum::one();
    let mut row = 0usize;
    for col in 0..lead_cols {
        if row >= m.rows {
            break;
        }
        // Sparsity-aware partial pivoting: among rows with a nonzero in this
        // column, pick the one with the fewest nonzero entries.
        let pivot = (row..m.rows)
            .filter(|&r| !m.at(r, col).is_zero())
            .min_by_key(|&r| (m.row_nnz(r, col, lead_cols), r));
        let Some(p) = pivot else { continue };
        m.swap_rows(row, p);
        let pv = m.at(row, col).clone();
        for i in row + 1..m.rows {
            let f = m.at(i, col).clone();
            if f.is_zero() {
                // Still rescale to keep the Bareiss invariant exact.
                for j in col..m.cols {
                    if !m.at(i, j).is_zero() {
                        let v = (&pv * m.at(i, j)).checked_div(&prev).unwrap();
                        m.set(i, j, v);
                    }
                }
                continue;
            }
            for j in col..m.cols {
                let num = &(&pv * m.at(i, j)) - &(&f * m.at(row, j));
                let v = if num.is_zero() {
                    num
                } else {
                    num.checked_div(&prev).unwrap()
                };
                m.set(i, j, v);
            }
        }
        prev = pv;
        pivots.push((row, col));
        row += 1;
    }
    pivots
}

/// Back-substitute an echelon matrix to reduced form (pivots become 1, and
/// pivot columns are cleared above), including the augmented columns.
fn back_substitute(m: &mut DenseMat, pivots: &[(usize, usize)]) {
    for (k, &(r, c)) in pivots.iter().enumerate().rev() {
        let pv = m.at(r, c).clone();
        let inv = pv.inv().expect("pivot is nonzero");
        for j in c..m.cols {
            let v = m.at(r, j) * &inv;
            m.set(r, j, v);
        }
        for &(r2, _) in &pivots[..k] {
            let f = m.at(r2, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..m.cols {
                let v = m.at(r2, j) - &(&f * m.at(r, j));
                m.set(r2, j, v);
            }
        }
    }
}

fn tensor_to_dense(a: &SparseTensor) -> DenseMat {
    let rows = a.out_dim() as usize;
    let cols = a.in_dim() as usize;
    let mut m = DenseMat::zero(rows, cols);
    for (ik, ok, c) in a.entries() {
        m.set(ok as usize, ik as usize, c.clone());
    }
    m
}

/// Solve `A x = b` exactly for a square invertible `A` (viewed as a linear
/// map from its input space to its output space).
pub fn solve_linear(a: &SparseTensor, b: &SparseVec) -> Result<SparseVec> {
    let n = a.in_dim() as usize;
    if a.out_dim() as usize != n {
        return Err(Error::ShapeMismatch(
            "solve_linear requires a square map".into(),
        ));
    }
    if b.shape() != a.out_shape() {
        return Err(Error::ShapeMismatch(
            "right-hand side does not live in the output space".into(),
        ));
    }
    let mut m = DenseMat::zero(n, n + 1);
    for (ik, ok, c) in a.entries() {
        m.set(ok as usize, ik as usize, c.clone());
    }
    for (k, c) in b.entries() {
        m.set(*k as usize, n, c.clone());
    }
    let pivots = bareiss_echelon(&mut m, n);
    if pivots.len() < n {
        return Err(Error::Singular {
            rank: pivots.len(),
            dim: n,
        });
    }
    back_substitute(&mut m, &pivots);
    let mut x = SparseVec::zero(a.in_shape().to_vec());
    for (r, c) in pivots {
        x.add_to(c as u64, m.at(r, n).clone());
    }
    Ok(x)
}

/// Solve `A x = b` for a (possibly rectangular) map with full column rank;
/// errors if the system is inconsistent or underdetermined.
pub fn solve_full_column_rank(a: &SparseTensor, b: &SparseVec) -> Result<SparseVec> {
    let rows = a.out_dim() as usize;
    let cols = a.in_dim() as usize;
    if b.shape() != a.out_shape() {
        return Err(Error::ShapeMismatch(
            "right-hand side does not live in the output space".into(),
        ));
    }
    let mut m = DenseMat::zero(rows, cols + 1);
    for (ik, ok, c) in a.entries() {
        m.set(ok as usize, ik as usize, c.clone());
    }
    for (k, c) in b.entries() {
        m.set(*k as usize, cols, c.clone());
    }
    let pivots = bareiss_echelon(&mut m, cols);
    if pivots.len() < cols {
        return Err(Error::Singular {
            rank: pivots.len(),
            dim: cols,
        });
    }
    back_substitute(&mut m, &pivots);
    // Rows below the pivots must have vanished entirely.
    for r in pivots.len()..rows {
        if !m.at(r, cols).is_zero() {
            return Err(Error::ShapeMismatch(
                "inconsistent linear system: vector is outside the column span".into(),
            ));
        }
    }
    let mut x = SparseVec::zero(a.in_shape().to_vec());
    for (r, c) in pivots {
        x.add_to(c as u64, m.at(r, cols).clone());
    }
    Ok(x)
}

/// Exact inverse of a square map; errors with the rank if singular.
pub fn invert_map(a: &SparseTensor) -> Result<SparseTensor> {
    let n = a.in_dim() as usize;
    if a.out_dim() as usize != n {
        return Err(Error::ShapeMismatch("invert_map requires a square map".into()));
    }
    let mut m = DenseMat::zero(n, 2 * n);
    for (ik, ok, c) in a.entries() {
        m.set(ok as usize, ik as usize, c.clone());
    }
    for i in 0..n {
        m.set(i, n + i, CycloNum::one());
    }
    let pivots = bareiss_echelon(&mut m, n);
    if pivots.len() < n {
        return Err(Error::Singular {
            rank: pivots.len(),
            dim: n,
        });
    }
    back_substitute(&mut m, &pivots);
    // Rows are ordered by pivot column = original variable index, and the
    // inverse maps the output space back to the input space.
    let mut inv = SparseTensor::new(a.out_shape().to_vec(), a.in_shape().to_vec());
    for (r, c) in pivots {
        for j in 0..n {
            let v = m.at(r, n + j);
            if !v.is_zero() {
                inv.add_to(j as u64, c as u64, v.clone());
            }
        }
    }
    Ok(inv)
}

/// Exact basis of the null space `{x : A x = 0}`.
pub fn kernel(a: &SparseTensor) -> Result<Vec<SparseVec>> {
    let rows = a.out_dim() as usize;
    let cols = a.in_dim() as usize;
    let mut m = tensor_to_dense(a);
    let pivots = bareiss_echelon(&mut m, cols);
    back_substitute(&mut m, &pivots);
    let _ = rows;
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = SparseVec::zero(a.in_shape().to_vec());
        v.add_to(free as u64, CycloNum::one());
        for &(r, c) in &pivots {
            let coef = m.at(r, free);
            if !coef.is_zero() {
                v.add_to(c as u64, -coef);
            }
        }
        basis.push(v);
    }
    Ok(basis)
}

/// Rank of a map, computed by exact elimination.
pub fn rank(a: &SparseTensor) -> usize {
    let mut m = tensor_to_dense(a);
    let cols = a.in_dim() as usize;
    bareiss_echelon(&mut m, cols).len()
}
