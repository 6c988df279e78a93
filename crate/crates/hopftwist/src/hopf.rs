//! Finite-dimensional Hopf algebras as structure-constant bundles.
//!
//! A [`HopfAlgebraData`] stores unit, counit, multiplication,
//! comultiplication and antipode as sparse tensors over a fixed basis.
//! `verify` checks the full axiom list exactly and reports the first
//! failing basis indices per axiom. Duals transpose structure constants,
//! and the convolution algebra of any coalgebra view supports exact
//! convolution inverses by linear solving.

use crate::scalar::CycloNum;
use crate::tensor::{
    encode_index, solve_linear, SparseTensor, SparseVec,
};
use crate::{Error, Result};

/// A linear functional, stored as a sparse vector of coefficients against
/// the (dual) basis of the space it acts on.
pub type Functional = SparseVec;

#[derive(Clone)]
pub struct HopfAlgebraData {
    dim: usize,
    field_order: u32,
    labels: Vec<String>,
    unit: SparseVec,
    counit: Vec<CycloNum>,
    mult: SparseTensor,
    comult: SparseTensor,
    antipode: SparseTensor,
}

/// Outcome of one axiom check.
#[derive(Clone, Debug)]
pub struct AxiomCheck {
    pub name: &'static str,
    pub pass: bool,
    pub first_failure: Option<Vec<usize>>,
}

/// Pass/fail report for the full Hopf axiom suite.
#[derive(Clone, Debug)]
pub struct HopfReport {
    pub checks: Vec<AxiomCheck>,
}

impl HopfReport {
    pub fn is_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failing(&self) -> Vec<&AxiomCheck> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }

    pub fn summary(&self) -> String {
        if self.is_pass() {
            return "all axioms pass".into();
        }
        self.failing()
            .iter()
            .map(|c| match &c.first_failure {
                Some(idx) => format!("{} fails at {:?}", c.name, idx),
                None => format!("{} fails", c.name),
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

impl HopfAlgebraData {
    /// Build and verify all axioms; fails with the first broken axiom.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        dim: usize,
        field_order: u32,
        labels: Vec<String>,
        unit: SparseVec,
        counit: Vec<CycloNum>,
        mult: SparseTensor,
        comult: SparseTensor,
        antipode: SparseTensor,
    ) -> Result<Self> {
        let h = Self::new_unchecked(dim, field_order, labels, unit, counit, mult, comult, antipode);
        let report = h.verify();
        if !report.is_pass() {
            return Err(Error::VerificationFailed(report.summary()));
        }
        Ok(h)
    }

    /// Build without running the axiom suite (large catalog algebras whose
    /// builders establish the axioms; the CLI re-verifies unless --trust).
    #[allow(clippy::too_many_arguments)]
    pub fn new_unchecked(
        dim: usize,
        field_order: u32,
        labels: Vec<String>,
        unit: SparseVec,
        counit: Vec<CycloNum>,
        mult: SparseTensor,
        comult: SparseTensor,
        antipode: SparseTensor,
    ) -> Self {
        assert_eq!(labels.len(), dim);
        assert_eq!(unit.shape(), &[dim]);
        assert_eq!(counit.len(), dim);
        assert_eq!(mult.in_shape(), &[dim, dim]);
        assert_eq!(mult.out_shape(), &[dim]);
        assert_eq!(comult.in_shape(), &[dim]);
        assert_eq!(comult.out_shape(), &[dim, dim]);
        assert_eq!(antipode.in_shape(), &[dim]);
        assert_eq!(antipode.out_shape(), &[dim]);
        HopfAlgebraData {
            dim,
            field_order,
            labels,
            unit,
            counit,
            mult,
            comult,
            antipode,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field_order(&self) -> u32 {
        self.field_order
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit(&self) -> &SparseVec {
        &self.unit
    }

    pub fn counit(&self) -> &[CycloNum] {
        &self.counit
    }

    pub fn mult(&self) -> &SparseTensor {
        &self.mult
    }

    pub fn comult(&self) -> &SparseTensor {
        &self.comult
    }

    pub fn antipode(&self) -> &SparseTensor {
        &self.antipode
    }

    pub fn basis(&self, i: usize) -> SparseVec {
        SparseVec::basis(vec![self.dim], &[i])
    }

    pub fn multiply(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        self.mult.apply(&a.tensor(b))
    }

    pub fn counit_of(&self, v: &SparseVec) -> CycloNum {
        let mut acc = CycloNum::zero();
        for (k, c) in v.entries() {
            acc += &(&self.counit[*k as usize] * c);
        }
        acc
    }

    /// `Delta^(k): H -> H^(⊗k)`; `k = 1` is the identity.
    pub fn iterated_coproduct(&self, v: &SparseVec, k: usize) -> SparseVec {
        assert!(k >= 1);
        let mut cur = v.clone();
        for step in 1..k {
            cur = self.comult.apply_at(&cur, step - 1);
        }
        cur
    }

    /// The action matrix `A_f : h -> h_1 f(h_2)` of a functional on `H`.
    pub fn functional_action(&self, f: &Functional) -> SparseTensor {
        let n = self.dim;
        let mut a = SparseTensor::new(vec![n], vec![n]);
        for (i, out, c) in self.comult.entries() {
            let multi = decode_pair(n, out);
            let fv = f.get(multi.1 as u64);
            if fv.is_zero() {
                continue;
            }
            a.add_to(i, multi.0 as u64, c * &fv);
        }
        a
    }

    /// Structure-constant dual: multiplication and comultiplication (and
    /// the antipode) transpose; an involution on the data.
    pub fn dual(&self) -> HopfAlgebraData {
        let n = self.dim;
        let unit = {
            let mut v = SparseVec::zero(vec![n]);
            for (i, c) in self.counit.iter().enumerate() {
                v.add_to(i as u64, c.clone());
            }
            v
        };
        let counit: Vec<CycloNum> = (0..n as u64).map(|i| self.unit.get(i)).collect();
        HopfAlgebraData {
            dim: n,
            field_order: self.field_order,
            labels: self.labels.iter().map(|l| format!("{l}^*")).collect(),
            unit,
            counit,
            mult: self.comult.transpose(),
            comult: self.mult.transpose(),
            antipode: self.antipode.transpose(),
        }
    }

    /// Coalgebra view of `H` itself.
    pub fn coalgebra(&self) -> CoalgebraView {
        CoalgebraView {
            comult: self.comult.clone(),
            counit: self.counit.clone(),
        }
    }

    /// Coalgebra view of `H ⊗ H` (for functionals on `H ⊗ H` such as Hopf
    /// 2-cocycles).
    pub fn tensor_square_coalgebra(&self) -> CoalgebraView {
        let n = self.dim;
        // Delta_{H⊗H}(x ⊗ y) = x1 ⊗ y1 ⊗ x2 ⊗ y2.
        let mut comult = SparseTensor::new(vec![n, n], vec![n, n, n, n]);
        for (i, oi, ci) in self.comult.entries() {
            let (i1, i2) = decode_pair(n, oi);
            for (j, oj, cj) in self.comult.entries() {
                let (j1, j2) = decode_pair(n, oj);
                comult.add_to(
                    i * n as u64 + j,
                    encode_index(&[n, n, n, n], &[i1, j1, i2, j2]),
                    ci * cj,
                );
            }
        }
        let mut counit = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                counit.push(&self.counit[i] * &self.counit[j]);
            }
        }
        CoalgebraView { comult, counit }
    }

    /// Full axiom suite.
    pub fn verify(&self) -> HopfReport {
        let n = self.dim;
        let nu = n as u64;
        let mut checks = Vec::new();

        // 1. Associativity m(m ⊗ 1) = m(1 ⊗ m).
        let mut assoc_fail = None;
        'assoc: for i in 0..nu {
            for j in 0..nu {
                let ij: Vec<(u64, CycloNum)> = self
                    .mult
                    .row(i * nu + j)
                    .map(|(k, c)| (k, c.clone()))
                    .collect();
                for k in 0..nu {
                    let mut lhs = SparseVec::zero(vec![n]);
                    for (l, c) in &ij {
                        for (o, c2) in self.mult.row(l * nu + k) {
                            lhs.add_to(o, c2 * c);
                        }
                    }
                    let mut rhs = SparseVec::zero(vec![n]);
                    for (l, c) in self.mult.row(j * nu + k) {
                        for (o, c2) in self.mult.row(i * nu + l) {
                            rhs.add_to(o, c2 * c);
                        }
                    }
                    if lhs != rhs {
                        assoc_fail = Some(vec![i as usize, j as usize, k as usize]);
                        break 'assoc;
                    }
                }
            }
        }
        checks.push(AxiomCheck {
            name: "associativity",
            pass: assoc_fail.is_none(),
            first_failure: assoc_fail,
        });

        // 2. Unit.
        let mut unit_fail = None;
        for j in 0..nu {
            let b = self.basis(j as usize);
            if self.multiply(&self.unit, &b) != b || self.multiply(&b, &self.unit) != b {
                unit_fail = Some(vec![j as usize]);
                break;
            }
        }
        checks.push(AxiomCheck {
            name: "unit",
            pass: unit_fail.is_none(),
            first_failure: unit_fail,
        });

        // 3. Coassociativity.
        let mut coassoc_fail = None;
        for i in 0..nu {
            let d = self.comult.apply(&self.basis(i as usize));
            let lhs = self.comult.apply_at(&d, 0);
            let rhs = self.comult.apply_at(&d, 1);
            if lhs != rhs {
                coassoc_fail = Some(vec![i as usize]);
                break;
            }
        }
        checks.push(AxiomCheck {
            name: "coassociativity",
            pass: coassoc_fail.is_none(),
            first_failure: coassoc_fail,
        });

        // 4. Counit.
        let mut counit_fail = None;
        for i in 0..nu {
            let mut left = SparseVec::zero(vec![n]);
            let mut right = SparseVec::zero(vec![n]);
            for (o, c) in self.comult.row(i) {
                let (j, k) = decode_pair(n, o);
                left.add_to(k as u64, c * &self.counit[j]);
                right.add_to(j as u64, c * &self.counit[k]);
            }
            if left != self.basis(i as usize) || right != self.basis(i as usize) {
                counit_fail = Some(vec![i as usize]);
                break;
            }
        }
        checks.push(AxiomCheck {
            name: "counit",
            pass: counit_fail.is_none(),
            first_failure: counit_fail,
        });

        // 5. Comultiplication is an algebra map.
        let mut bialg_fail = None;
        'bi: for i in 0..nu {
            let di = self.comult.apply(&self.basis(i as usize));
            for j in 0..nu {
                let mut lhs = SparseVec::zero(vec![n, n]);
                for (o, c) in self.mult.row(i * nu + j) {
                    for (o2, c2) in self.comult.row(o) {
                        lhs.add_to(o2, c2 * c);
                    }
                }
                let dj = self.comult.apply(&self.basis(j as usize));
                let mut rhs = SparseVec::zero(vec![n, n]);
                for (ki, ci) in di.entries() {
                    let (i1, i2) = decode_pair(n, *ki);
                    for (kj, cj) in dj.entries() {
                        let (j1, j2) = decode_pair(n, *kj);
                        let c = ci * cj;
                        for (p, cp) in self.mult.row(i1 as u64 * nu + j1 as u64) {
                            for (q, cq) in self.mult.row(i2 as u64 * nu + j2 as u64) {
                                rhs.add_to(p * nu + q, &(&c * cp) * cq);
                            }
                        }
                    }
                }
                if lhs != rhs {
                    bialg_fail = Some(vec![i as usize, j as usize]);
                    break 'bi;
                }
            }
        }
        checks.push(AxiomCheck {
            name: "comult-is-algebra-map",
            pass: bialg_fail.is_none(),
            first_failure: bialg_fail,
        });

        // 6. Counit is an algebra map.
        let mut emap_fail = None;
        'em: for i in 0..nu {
            for j in 0..nu {
                let mut lhs = CycloNum::zero();
                for (o, c) in self.mult.row(i * nu + j) {
                    lhs += &(c * &self.counit[o as usize]);
                }
                if lhs != &self.counit[i as usize] * &self.counit[j as usize] {
                    emap_fail = Some(vec![i as usize, j as usize]);
                    break 'em;
                }
            }
        }
        checks.push(AxiomCheck {
            name: "counit-is-algebra-map",
            pass: emap_fail.is_none(),
            first_failure: emap_fail,
        });

        // 7. Unit is group-like.
        let unit_gl = self.comult.apply(&self.unit) == self.unit.tensor(&self.unit)
            && self.counit_of(&self.unit).is_one();
        checks.push(AxiomCheck {
            name: "unit-is-grouplike",
            pass: unit_gl,
            first_failure: None,
        });

        // 8. Antipode convolution identity, both sides.
        let mut antipode_fail = None;
        for i in 0..nu {
            let target = self.unit.scale(&self.counit[i as usize]);
            let mut left = SparseVec::zero(vec![n]);
            let mut right = SparseVec::zero(vec![n]);
            for (o, c) in self.comult.row(i) {
                let (j, k) = decode_pair(n, o);
                // m(S ⊗ 1)
                for (sj, cs) in self.antipode.row(j as u64) {
                    for (p, cp) in self.mult.row(sj * nu + k as u64) {
                        left.add_to(p, &(c * cs) * cp);
                    }
                }
                // m(1 ⊗ S)
                for (sk, cs) in self.antipode.row(k as u64) {
                    for (p, cp) in self.mult.row(j as u64 * nu + sk) {
                        right.add_to(p, &(c * cs) * cp);
                    }
                }
            }
            if left != target || right != target {
                antipode_fail = Some(vec![i as usize]);
                break;
            }
        }
        checks.push(AxiomCheck {
            name: "antipode",
            pass: antipode_fail.is_none(),
            first_failure: antipode_fail,
        });

        HopfReport { checks }
    }

    /// Solve the convolution-inverse system for `id_H` in `Hom(H, H)`;
    /// the unique solution is the antipode. Quadratic-size solve, meant for
    /// small dimensions.
    pub fn antipode_from_convolution(&self) -> Result<SparseTensor> {
        solve_antipode(self.dim, &self.mult, &self.comult, &self.unit, &self.counit)
    }
}

/// Solve `m(X ⊗ 1)Delta = u·eps` for the map `X : H -> H` (the antipode of
/// the bialgebra given by these tensors).
pub fn solve_antipode(
    n: usize,
    mult: &SparseTensor,
    comult: &SparseTensor,
    unit: &SparseVec,
    counit: &[CycloNum],
) -> Result<SparseTensor> {
    let nu = n as u64;
    // Unknown X: H -> H with sum X(h_{i,1}) h_{i,2} = u eps(h_i).
    // Equations indexed by (i, output coordinate).
    let mut sys = SparseTensor::new(vec![n, n], vec![n, n]);
    for i in 0..nu {
        for (o, c) in comult.row(i) {
            let (j, k) = decode_pair(n, o);
            // X[j -> l] contributes c * mult[(l, k) -> out].
            for l in 0..nu {
                for (out, cm) in mult.row(l * nu + k as u64) {
                    sys.add_to(j as u64 * nu + l, i * nu + out, c * cm);
                }
            }
        }
    }
    let mut rhs = SparseVec::zero(vec![n, n]);
    for i in 0..nu {
        let e = &counit[i as usize];
        if e.is_zero() {
            continue;
        }
        for (k, c) in unit.entries() {
            rhs.add_to(i * nu + k, c * e);
        }
    }
    let x = solve_linear(&sys, &rhs)?;
    let mut s = SparseTensor::new(vec![n], vec![n]);
    for (key, c) in x.entries() {
        s.add_to(key / nu, key % nu, c.clone());
    }
    Ok(s)
}

pub(crate) fn decode_pair(n: usize, key: u64) -> (usize, usize) {
    ((key / n as u64) as usize, (key % n as u64) as usize)
}

/// A coalgebra (comultiplication and counit) presented on its own basis;
/// hosts the convolution algebra of functionals.
pub struct CoalgebraView {
    comult: SparseTensor,
    counit: Vec<CycloNum>,
}

impl CoalgebraView {
    pub fn dim(&self) -> u64 {
        self.comult.in_dim()
    }

    pub fn underlying_shape(&self) -> Vec<usize> {
        self.comult.in_shape().to_vec()
    }

    /// The convolution unit (the counit as a functional).
    pub fn convolution_unit(&self) -> Functional {
        let mut v = SparseVec::zero(self.underlying_shape());
        for (i, c) in self.counit.iter().enumerate() {
            v.add_to(i as u64, c.clone());
        }
        v
    }

    /// `(f * g)(x) = f(x_1) g(x_2)`.
    pub fn convolve(&self, f: &Functional, g: &Functional) -> Functional {
        let mut out = SparseVec::zero(self.underlying_shape());
        let half = self.comult.out_shape().len() / 2;
        let second_dim: u64 = self.comult.out_shape()[half..]
            .iter()
            .map(|&d| d as u64)
            .product();
        for (i, o, c) in self.comult.entries() {
            let j = o / second_dim;
            let k = o % second_dim;
            let fv = f.get(j);
            if fv.is_zero() {
                continue;
            }
            let gv = g.get(k);
            if gv.is_zero() {
                continue;
            }
            out.add_to(i, &(c * &fv) * &gv);
        }
        out
    }

    /// Exact convolution inverse by linear solving; errors with the rank of
    /// the convolution-multiplication operator when not invertible.
    pub fn convolution_inverse(&self, f: &Functional) -> Result<Functional> {
        let d = self.dim();
        let half = self.comult.out_shape().len() / 2;
        let second_dim: u64 = self.comult.out_shape()[half..]
            .iter()
            .map(|&d| d as u64)
            .product();
        // A[i][k] = sum_j Delta[i][(j,k)] f(j); solve A psi = eps.
        let shape = self.underlying_shape();
        let mut a = SparseTensor::new(shape.clone(), shape.clone());
        for (i, o, c) in self.comult.entries() {
            let j = o / second_dim;
            let k = o % second_dim;
            let fv = f.get(j);
            if !fv.is_zero() {
                a.add_to(k, i, c * &fv);
            }
        }
        let eps = self.convolution_unit();
        let psi = match solve_linear(&a, &eps) {
            Ok(psi) => psi,
            Err(Error::Singular { rank, dim }) => {
                return Err(Error::NotConvolutionInvertible { rank, dim })
            }
            Err(e) => return Err(e),
        };
        debug_assert_eq!(self.convolve(&psi, f), eps, "inverse must be two-sided");
        let _ = d;
        Ok(psi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat_int;

    /// The group algebra of Z/2 built by hand.
    fn kz2() -> HopfAlgebraData {
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
        let antipode = SparseTensor::identity(vec![n]);
        HopfAlgebraData::new(
            n,
            1,
            vec!["U_0".into(), "U_1".into()],
            SparseVec::basis(vec![n], &[0]),
            vec![CycloNum::one(), CycloNum::one()],
            mult,
            comult,
            antipode,
        )
        .unwrap()
    }

    /// The group algebra of Z/n built by hand.
    fn kzn(n: usize) -> HopfAlgebraData {
        let mut mult = SparseTensor::new(vec![n, n], vec![n]);
        let mut comult = SparseTensor::new(vec![n], vec![n, n]);
        let mut antipode = SparseTensor::new(vec![n], vec![n]);
        for i in 0..n {
            for j in 0..n {
                mult.set_multi(&[i, j], &[(i + j) % n], CycloNum::one());
            }
            comult.set_multi(&[i], &[i, i], CycloNum::one());
            antipode.set_multi(&[i], &[(n - i) % n], CycloNum::one());
        }
        HopfAlgebraData::new(
            n,
            1,
            (0..n).map(|i| format!("U_{i}")).collect(),
            SparseVec::basis(vec![n], &[0]),
            vec![CycloNum::one(); n],
            mult,
            comult,
            antipode,
        )
        .unwrap()
    }

    #[test]
    fn kz2_passes_and_perturbation_fails_associativity() {
        let h = kz2();
        assert!(h.verify().is_pass());

        // Perturb one multiplication entry of KZ3 asymmetrically.
        let h3 = kzn(3);
        let mut bad_mult = h3.mult().clone();
        bad_mult.set_multi(&[1, 2], &[1], CycloNum::one());
        let bad = HopfAlgebraData::new_unchecked(
            3,
            1,
            h3.labels().to_vec(),
            h3.unit().clone(),
            h3.counit().to_vec(),
            bad_mult,
            h3.comult().clone(),
            h3.antipode().clone(),
        );
        let report = bad.verify();
        assert!(!report.is_pass());
        let assoc = report
            .checks
            .iter()
            .find(|c| c.name == "associativity")
            .unwrap();
        assert!(!assoc.pass, "report: {}", report.summary());
        assert!(assoc.first_failure.is_some());
    }

    #[test]
    fn dual_is_an_involution_and_passes() {
        let h = kz2();
        let d = h.dual();
        assert!(d.verify().is_pass());
        let dd = d.dual();
        assert_eq!(dd.mult(), h.mult());
        assert_eq!(dd.comult(), h.comult());
        assert_eq!(dd.antipode(), h.antipode());
        assert_eq!(dd.unit(), h.unit());
        assert_eq!(dd.counit(), h.counit());
    }

    #[test]
    fn convolution_inverse_of_counit_is_counit() {
        let h = kz2();
        let coal = h.coalgebra();
        let eps = coal.convolution_unit();
        let inv = coal.convolution_inverse(&eps).unwrap();
        assert_eq!(inv, eps);
    }

    #[test]
    fn convolution_inverse_on_group_algebra_functionals() {
        let h = kz2();
        let coal = h.coalgebra();
        // f(U_g) = c_g with all c_g nonzero: inverse is g -> 1/c_g.
        let mut f = SparseVec::zero(vec![2]);
        f.add_to(0, CycloNum::from_int(2));
        f.add_to(1, CycloNum::from_int(-3));
        let inv = coal.convolution_inverse(&f).unwrap();
        assert_eq!(coal.convolve(&f, &inv), coal.convolution_unit());
        assert_eq!(coal.convolve(&inv, &f), coal.convolution_unit());
        assert_eq!(inv.get(0), CycloNum::from_rational(crate::scalar::rat(1, 2)));
        assert_eq!(inv.get(1), CycloNum::from_rational(crate::scalar::rat(-1, 3)));
        // A functional vanishing on a group-like is not invertible.
        let mut g = SparseVec::zero(vec![2]);
        g.add_to(0, CycloNum::one());
        assert!(matches!(
            coal.convolution_inverse(&g),
            Err(Error::NotConvolutionInvertible { .. })
        ));
    }

    #[test]
    fn functional_action_of_counit_is_identity() {
        let h = kz2();
        let eps = h.coalgebra().convolution_unit();
        let a = h.functional_action(&eps);
        assert_eq!(a, SparseTensor::identity(vec![2]));
    }

    #[test]
    fn iterated_coproduct_degrees() {
        let h = kz2();
        let v = h.basis(1);
        assert_eq!(h.iterated_coproduct(&v, 1), v);
        let d3 = h.iterated_coproduct(&v, 3);
        assert_eq!(d3.shape(), &[2, 2, 2]);
        assert_eq!(d3.get(encode_index(&[2, 2, 2], &[1, 1, 1])), CycloNum::one());
        assert_eq!(d3.support_len(), 1);
    }

    #[test]
    fn antipode_solved_from_convolution_matches_stored() {
        let h = kz2();
        let s = h.antipode_from_convolution().unwrap();
        assert_eq!(&s, h.antipode());
    }

    #[test]
    fn convolution_on_tensor_square() {
        let h = kz2();
        let sq = h.tensor_square_coalgebra();
        let eps2 = sq.convolution_unit();
        assert_eq!(sq.convolve(&eps2, &eps2), eps2);
        let mut alpha = SparseVec::zero(vec![2, 2]);
        for i in 0..2u64 {
            for j in 0..2u64 {
                let v = if i == 1 && j == 1 {
                    CycloNum::from_int(-1)
                } else {
                    CycloNum::one()
                };
                alpha.add_to(i * 2 + j, v);
            }
        }
        let inv = sq.convolution_inverse(&alpha).unwrap();
        assert_eq!(sq.convolve(&alpha, &inv), eps2);
        let _ = rat_int(0);
    }
}
