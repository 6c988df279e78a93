//! Deterministic noncommutative rewriting to normal form.
//!
//! An algebra is presented by generators, relations (linear combinations of
//! free words), and a declared normal-form basis. Relations are oriented
//! into rules along the degree-lexicographic order with the generator list
//! as precedence (earlier generators are smaller). Bounded critical-pair
//! completion resolves overlaps up to a degree bound, and structure
//! constants are extracted once every basis-pair product reduces inside
//! the declared basis.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use crate::scalar::CycloNum;
use crate::tensor::{SparseTensor, SparseVec};
use crate::{Error, Result};

/// Word in the free monoid on the generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeWord(pub Vec<u8>);

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord(Vec::new())
    }

    pub fn letter(i: u8) -> Self {
        FreeWord(vec![i])
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        FreeWord(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl std::fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "w{:?}", self.0)
    }
}

/// Degree-lexicographic order: compare lengths, then letters.
impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Linear combination of free words; zero coefficients are never stored.
pub type LinComb = BTreeMap<FreeWord, CycloNum>;

pub fn comb_add(acc: &mut LinComb, word: FreeWord, c: CycloNum) {
    if c.is_zero() {
        return;
    }
    match acc.entry(word) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn comb_from(terms: Vec<(FreeWord, CycloNum)>) -> LinComb {
    let mut acc = LinComb::new();
    for (w, c) in terms {
        comb_add(&mut acc, w, c);
    }
    acc
}

#[derive(Clone, Debug)]
struct Rule {
    lhs: FreeWord,
    rhs: Vec<(FreeWord, CycloNum)>,
}

pub struct RewriteSystem {
    generators: Vec<String>,
    rules: Vec<Rule>,
    /// rules indexed by the first letter of the lhs
    by_first: HashMap<u8, Vec<usize>>,
    basis: Vec<FreeWord>,
    basis_index: HashMap<FreeWord, usize>,
    cache: RwLock<HashMap<FreeWord, LinComb>>,
}

impl RewriteSystem {
    /// Orient relations into rules. Each relation is a combination that
    /// equals zero; its largest word becomes a rule head.
    pub fn new(
        generators: Vec<String>,
        relations: Vec<LinComb>,
        basis: Vec<FreeWord>,
    ) -> Result<Self> {
        let mut sys = RewriteSystem {
            generators,
            rules: Vec::new(),
            by_first: HashMap::new(),
            basis: Vec::new(),
            basis_index: HashMap::new(),
            cache: RwLock::new(HashMap::new()),
        };
        for rel in relations {
            sys.add_relation(rel)?;
        }
        for (i, w) in basis.iter().enumerate() {
            if sys.find_match(&w.0).is_some() {
                return Err(Error::InvalidInput(format!(
                    "declared basis word {} is reducible",
                    sys.word_label(w)
                )));
            }
            if sys.basis_index.insert(w.clone(), i).is_some() {
                return Err(Error::InvalidInput(format!(
                    "duplicate basis word {}",
                    sys.word_label(w)
                )));
            }
        }
        sys.basis = basis;
        Ok(sys)
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn basis(&self) -> &[FreeWord] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    pub fn basis_position(&self, w: &FreeWord) -> Option<usize> {
        self.basis_index.get(w).copied()
    }

    pub fn word_label(&self, w: &FreeWord) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.0.iter()
            .map(|&i| self.generators[i as usize].as_str())
            .collect::<Vec<_>>()
            .join("")
    }

    fn add_relation(&mut self, rel: LinComb) -> Result<()> {
        let mut rel = rel;
        loop {
            let Some((lead, coef)) = rel.iter().next_back().map(|(w, c)| (w.clone(), c.clone()))
            else {
                return Ok(()); // relation reduced to zero
            };
            let inv = coef.inv()?;
            let rhs: Vec<(FreeWord, CycloNum)> = rel
                .iter()
                .filter(|(w, _)| **w != lead)
                .map(|(w, c)| (w.clone(), -&(c * &inv)))
                .collect();
            // If a rule with this head exists, subtract and re-orient the
            // difference instead of duplicating the head.
            if let Some(idx) = self.rules.iter().position(|r| r.lhs == lead) {
                let mut diff = LinComb::new();
                for (w, c) in &self.rules[idx].rhs {
                    comb_add(&mut diff, w.clone(), c.clone());
                }
                for (w, c) in &rhs {
                    comb_add(&mut diff, w.clone(), -c);
                }
                if diff.is_empty() {
                    return Ok(());
                }
                rel = diff;
                continue;
            }
            for (w, _) in &rhs {
                debug_assert!(*w < lead, "rule right-hand side must decrease");
            }
            let first = lead.0[0];
            self.by_first.entry(first).or_default().push(self.rules.len());
            self.rules.push(Rule { lhs: lead, rhs });
            self.cache.write().unwrap().clear();
            return Ok(());
        }
    }

    /// Leftmost-largest match: smallest starting position, then the rule
    /// with the longest left-hand side there.
    fn find_match(&self, word: &[u8]) -> Option<(usize, usize)> {
        for pos in 0..word.len() {
            let mut best: Option<usize> = None;
            if let Some(rules) = self.by_first.get(&word[pos]) {
                for &ri in rules {
                    let lhs = &self.rules[ri].lhs.0;
                    if word.len() - pos >= lhs.len() && word[pos..pos + lhs.len()] == lhs[..] {
                        best = match best {
                            None => Some(ri),
                            Some(b) if self.rules[ri].lhs.len() > self.rules[b].lhs.len() => {
                                Some(ri)
                            }
                            keep => keep,
                        };
                    }
                }
            }
            if let Some(ri) = best {
                return Some((pos, ri));
            }
        }
        None
    }

    /// Fully reduce a single word to a combination of irreducible words
    /// (no basis-membership requirement).
    fn reduce_word(&self, word: &FreeWord) -> LinComb {
        if let Some(hit) = self.cache.read().unwrap().get(word) {
            return hit.clone();
        }
        let result = match self.find_match(&word.0) {
            None => {
                let mut out = LinComb::new();
                out.insert(word.clone(), CycloNum::one());
                out
            }
            Some((pos, ri)) => {
                let rule = &self.rules[ri];
                let prefix = &word.0[..pos];
                let suffix = &word.0[pos + rule.lhs.len()..];
                let mut out = LinComb::new();
                for (w, c) in &rule.rhs {
                    let mut replaced = Vec::with_capacity(prefix.len() + w.len() + suffix.len());
                    replaced.extend_from_slice(prefix);
                    replaced.extend_from_slice(&w.0);
                    replaced.extend_from_slice(suffix);
                    for (rw, rc) in self.reduce_word(&FreeWord(replaced)) {
                        comb_add(&mut out, rw, &rc * c);
                    }
                }
                out
            }
        };
        self.cache
            .write()
            .unwrap()
            .insert(word.clone(), result.clone());
        result
    }

    /// Reduce a combination to irreducible words.
    pub fn reduce(&self, comb: &LinComb) -> LinComb {
        let mut out = LinComb::new();
        for (w, c) in comb {
            for (rw, rc) in self.reduce_word(w) {
                comb_add(&mut out, rw, &rc * c);
            }
        }
        out
    }

    /// Normal form supported on the declared basis; errors with the first
    /// irreducible word that escapes it.
    pub fn normal_form(&self, comb: &LinComb) -> Result<LinComb> {
        let out = self.reduce(comb);
        for w in out.keys() {
            if !self.basis_index.contains_key(w) {
                return Err(Error::EscapesBasis(self.word_label(w)));
            }
        }
        Ok(out)
    }

    /// Rightmost-first reduction strategy, for confluence testing only.
    pub fn reduce_rightmost(&self, comb: &LinComb) -> LinComb {
        let mut out = LinComb::new();
        for (w, c) in comb {
            for (rw, rc) in self.reduce_word_rightmost(w) {
                comb_add(&mut out, rw, &rc * c);
            }
        }
        out
    }

    fn reduce_word_rightmost(&self, word: &FreeWord) -> LinComb {
        let mut found: Option<(usize, usize)> = None;
        for pos in (0..word.0.len()).rev() {
            if let Some(rules) = self.by_first.get(&word.0[pos]) {
                let mut best: Option<usize> = None;
                for &ri in rules {
                    let lhs = &self.rules[ri].lhs.0;
                    if word.0.len() - pos >= lhs.len() && word.0[pos..pos + lhs.len()] == lhs[..]
                    {
                        best = match best {
                            None => Some(ri),
                            Some(b) if self.rules[ri].lhs.len() > self.rules[b].lhs.len() => {
                                Some(ri)
                            }
                            keep => keep,
                        };
                    }
                }
                if let Some(ri) = best {
                    found = Some((pos, ri));
                    break;
                }
            }
        }
        match found {
            None => {
                let mut out = LinComb::new();
                out.insert(word.clone(), CycloNum::one());
                out
            }
            Some((pos, ri)) => {
                let rule = &self.rules[ri];
                let prefix = &word.0[..pos];
                let suffix = &word.0[pos + rule.lhs.len()..];
                let mut out = LinComb::new();
                for (w, c) in &rule.rhs {
                    let mut replaced = Vec::with_capacity(prefix.len() + w.len() + suffix.len());
                    replaced.extend_from_slice(prefix);
                    replaced.extend_from_slice(&w.0);
                    replaced.extend_from_slice(suffix);
                    for (rw, rc) in self.reduce_word_rightmost(&FreeWord(replaced)) {
                        comb_add(&mut out, rw, &rc * c);
                    }
                }
                out
            }
        }
    }

    /// Bounded critical-pair completion. Resolves all overlaps whose
    /// superposed word has length at most `degree_bound`, then requires the
    /// closure property: every product of two basis words reduces inside
    /// the declared basis.
    pub fn complete(mut self, degree_bound: usize) -> Result<RewriteSystem> {
        let max_rounds = 64;
        for _ in 0..max_rounds {
            let mut new_relations: Vec<LinComb> = Vec::new();
            let snapshot: Vec<(FreeWord, Vec<(FreeWord, CycloNum)>)> = self
                .rules
                .iter()
                .map(|r| (r.lhs.clone(), r.rhs.clone()))
                .collect();
            for (l1, r1) in &snapshot {
                for (l2, r2) in &snapshot {
                    // Overlap: a proper suffix of l1 equals a prefix of l2.
                    for k in 1..l1.len().min(l2.len()) {
                        if l1.0[l1.len() - k..] != l2.0[..k] {
                            continue;
                        }
                        let mut sup = l1.0.clone();
                        sup.extend_from_slice(&l2.0[k..]);
                        if sup.len() > degree_bound {
                            continue;
                        }
                        // Route 1: rewrite the l1 part.
                        let mut via1 = LinComb::new();
                        for (w, c) in r1 {
                            let mut word = w.0.clone();
                            word.extend_from_slice(&l2.0[k..]);
                            comb_add(&mut via1, FreeWord(word), c.clone());
                        }
                        // Route 2: rewrite the l2 part.
                        let mut via2 = LinComb::new();
                        for (w, c) in r2 {
                            let mut word = l1.0[..l1.len() - k].to_vec();
                            word.extend_from_slice(&w.0);
                            comb_add(&mut via2, FreeWord(word), c.clone());
                        }
                        let mut diff = self.reduce(&via1);
                        for (w, c) in self.reduce(&via2) {
                            comb_add(&mut diff, w, -&c);
                        }
                        if !diff.is_empty() {
                            new_relations.push(diff);
                        }
                    }
                    // Containment: l2 strictly inside l1.
                    if l2.len() < l1.len() {
                        for pos in 0..=l1.len() - l2.len() {
                            if l1.0[pos..pos + l2.len()] != l2.0[..] {
                                continue;
                            }
                            let mut via2 = LinComb::new();
                            for (w, c) in r2 {
                                let mut word = l1.0[..pos].to_vec();
                                word.extend_from_slice(&w.0);
                                word.extend_from_slice(&l1.0[pos + l2.len()..]);
                                comb_add(&mut via2, FreeWord(word), c.clone());
                            }
                            let mut diff = comb_from(r1.clone());
                            for (w, c) in self.reduce(&via2) {
                                comb_add(&mut diff, w, -&c);
                            }
                            diff = self.reduce(&diff);
                            if !diff.is_empty() {
                                new_relations.push(diff);
                            }
                        }
                    }
                }
            }
            if new_relations.is_empty() {
                // Stable: check closure on the declared basis.
                for u in &self.basis {
                    for v in &self.basis {
                        self.normal_form(&comb_from(vec![(u.concat(v), CycloNum::one())]))?;
                    }
                }
                return Ok(self);
            }
            for rel in new_relations {
                let rel = self.reduce(&rel);
                if rel.is_empty() {
                    continue;
                }
                let lead = rel.keys().next_back().unwrap();
                if lead.len() > degree_bound {
                    return Err(Error::CompletionFailed(degree_bound));
                }
                self.add_relation(rel)?;
            }
        }
        Err(Error::CompletionFailed(degree_bound))
    }

    /// Enumerate all irreducible words up to a length (diagnostics/tests).
    pub fn irreducible_words(&self, max_len: usize) -> Vec<FreeWord> {
        let mut out = vec![FreeWord::empty()];
        let mut layer = vec![FreeWord::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for w in &layer {
                for g in 0..self.generators.len() as u8 {
                    let mut word = w.0.clone();
                    word.push(g);
                    let cand = FreeWord(word);
                    if self.find_match(&cand.0).is_none() {
                        next.push(cand);
                    }
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
            if layer.is_empty() {
                break;
            }
        }
        out
    }
}

/// A finite-dimensional algebra extracted from a confluent presentation.
pub struct PresentedAlgebra {
    pub system: RewriteSystem,
    pub mult: SparseTensor,
    pub unit: SparseVec,
}

/// Compute structure constants on the declared basis, plus the unit vector.
/// Associativity is re-verified on all triples for dimensions up to 81, and
/// on a deterministic sample plus all generator-word triples above that.
pub fn structure_constants(system: RewriteSystem, unit: &LinComb) -> Result<PresentedAlgebra> {
    let n = system.dim();
    let mut mult = SparseTensor::new(vec![n, n], vec![n]);
    for (i, u) in system.basis().iter().enumerate() {
        for (j, v) in system.basis().iter().enumerate() {
            let prod = system.normal_form(&comb_from(vec![(u.concat(v), CycloNum::one())]))?;
            for (w, c) in prod {
                let k = system
                    .basis_position(&w)
                    .expect("normal form is basis-supported");
                mult.add_to((i * n + j) as u64, k as u64, c);
            }
        }
    }
    let unit_nf = system.normal_form(unit)?;
    let mut unit_vec = SparseVec::zero(vec![n]);
    for (w, c) in unit_nf {
        unit_vec.add_to(system.basis_position(&w).unwrap() as u64, c);
    }
    // Unit law.
    for j in 0..n {
        let b = SparseVec::basis(vec![n], &[j]);
        let left = mult.apply(&unit_vec.tensor(&b));
        let right = mult.apply(&b.tensor(&unit_vec));
        if left != b || right != b {
            return Err(Error::VerificationFailed(format!(
                "unit law fails on basis word {}",
                system.word_label(&system.basis()[j])
            )));
        }
    }
    // Associativity.
    let nu = n as u64;
    let triples: Vec<(u64, u64, u64)> = if n <= 81 {
        (0..nu)
            .flat_map(|i| (0..nu).flat_map(move |j| (0..nu).map(move |k| (i, j, k))))
            .collect()
    } else {
        let gens: Vec<u64> = (0..system.generators().len())
            .filter_map(|g| {
                system
                    .basis_position(&FreeWord::letter(g as u8))
                    .map(|p| p as u64)
            })
            .collect();
        let mut t: Vec<(u64, u64, u64)> = Vec::new();
        for &i in &gens {
            for &j in &gens {
                for &k in &gens {
                    t.push((i, j, k));
                }
            }
        }
        for s in 0..nu * 7 {
            t.push(((s * 31) % nu, (s * 17 + 5) % nu, (s * 13 + 11) % nu));
        }
        t
    };
    for (i, j, k) in triples {
        let mut lhs = SparseVec::zero(vec![n]);
        for (l, c) in mult.row(i * nu + j) {
            for (o, c2) in mult.row(l * nu + k) {
                lhs.add_to(o, c2 * c);
            }
        }
        let mut rhs = SparseVec::zero(vec![n]);
        for (l, c) in mult.row(j * nu + k) {
            for (o, c2) in mult.row(i * nu + l) {
                rhs.add_to(o, c2 * c);
            }
        }
        if lhs != rhs {
            return Err(Error::VerificationFailed(format!(
                "associativity fails at basis triple ({i}, {j}, {k})"
            )));
        }
    }
    Ok(PresentedAlgebra {
        system,
        mult,
        unit: unit_vec,
    })
}

impl PresentedAlgebra {
    pub fn dim(&self) -> usize {
        self.system.dim()
    }

    /// Expand a combination of words into a basis vector.
    pub fn element(&self, comb: &LinComb) -> Result<SparseVec> {
        let nf = self.system.normal_form(comb)?;
        let mut v = SparseVec::zero(vec![self.dim()]);
        for (w, c) in nf {
            v.add_to(self.system.basis_position(&w).unwrap() as u64, c);
        }
        Ok(v)
    }

    pub fn word(&self, letters: &[u8]) -> Result<SparseVec> {
        self.element(&comb_from(vec![(
            FreeWord(letters.to_vec()),
            CycloNum::one(),
        )]))
    }

    pub fn labels(&self) -> Vec<String> {
        self.system
            .basis()
            .iter()
            .map(|w| self.system.word_label(w))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // FK3 generators a < b < c with deformed squares and cyclic sums.
    fn fk3_relations(
        lambda: CycloNum,
        mu: CycloNum,
    ) -> (Vec<String>, Vec<LinComb>, Vec<FreeWord>) {
        let gens = vec!["a".to_string(), "b".to_string(), "c".to_string()];
        let w = |s: &[u8]| FreeWord(s.to_vec());
        let one = CycloNum::one;
        let relations = vec![
            comb_from(vec![(w(&[0, 0]), one()), (FreeWord::empty(), -&lambda)]),
            comb_from(vec![(w(&[1, 1]), one()), (FreeWord::empty(), -&lambda)]),
            comb_from(vec![(w(&[2, 2]), one()), (FreeWord::empty(), -&lambda)]),
            comb_from(vec![
                (w(&[0, 1]), one()),
                (w(&[1, 2]), one()),
                (w(&[2, 0]), one()),
                (FreeWord::empty(), -&mu),
            ]),
            comb_from(vec![
                (w(&[0, 2]), one()),
                (w(&[2, 1]), one()),
                (w(&[1, 0]), one()),
                (FreeWord::empty(), -&mu),
            ]),
        ];
        let basis = vec![
            FreeWord::empty(),
            w(&[0]),
            w(&[1]),
            w(&[2]),
            w(&[0, 1]),
            w(&[0, 2]),
            w(&[1, 0]),
            w(&[1, 2]),
            w(&[0, 1, 0]),
            w(&[0, 1, 2]),
            w(&[1, 0, 2]),
            w(&[0, 1, 0, 2]),
        ];
        (gens, relations, basis)
    }

    fn fk3_system(lambda: i64, mu: i64) -> RewriteSystem {
        let (gens, rels, basis) =
            fk3_relations(CycloNum::from_int(lambda), CycloNum::from_int(mu));
        RewriteSystem::new(gens, rels, basis)
            .unwrap()
            .complete(5)
            .unwrap()
    }

    #[test]
    fn fk3_normal_forms() {
        let sys = fk3_system(0, 0);
        // a·a -> 0
        let nf = sys
            .normal_form(&comb_from(vec![(FreeWord(vec![0, 0]), CycloNum::one())]))
            .unwrap();
        assert!(nf.is_empty());
        // c·a -> -ab - bc
        let nf = sys
            .normal_form(&comb_from(vec![(FreeWord(vec![2, 0]), CycloNum::one())]))
            .unwrap();
        let mut expect = LinComb::new();
        expect.insert(FreeWord(vec![0, 1]), CycloNum::from_int(-1));
        expect.insert(FreeWord(vec![1, 2]), CycloNum::from_int(-1));
        assert_eq!(nf, expect);
    }

    #[test]
    fn deformed_squares_reduce_to_scalars() {
        let sys = fk3_system(5, 0);
        let nf = sys
            .normal_form(&comb_from(vec![(FreeWord(vec![0, 0]), CycloNum::one())]))
            .unwrap();
        let mut expect = LinComb::new();
        expect.insert(FreeWord::empty(), CycloNum::from_int(5));
        assert_eq!(nf, expect);
    }

    #[test]
    fn fk3_basis_count_and_degree_profile() {
        for (l, m) in [(0, 0), (1, 0), (0, 1), (1, 1), (3, 7)] {
            let sys = fk3_system(l, m);
            let irr = sys.irreducible_words(6);
            assert_eq!(irr.len(), 12, "lambda={l} mu={m}");
            let mut profile = [0usize; 5];
            for w in &irr {
                profile[w.len()] += 1;
            }
            assert_eq!(profile, [1, 3, 4, 3, 1]);
            for w in &irr {
                assert!(sys.basis_position(w).is_some());
            }
        }
    }

    #[test]
    fn fk3_structure_constants_are_associative() {
        let (gens, rels, basis) = fk3_relations(CycloNum::from_int(1), CycloNum::from_int(1));
        let sys = RewriteSystem::new(gens, rels, basis)
            .unwrap()
            .complete(5)
            .unwrap();
        let alg =
            structure_constants(sys, &comb_from(vec![(FreeWord::empty(), CycloNum::one())]))
                .unwrap();
        assert_eq!(alg.dim(), 12);
    }

    #[test]
    fn commutative_truncated_ring_is_already_confluent() {
        // x^2 = 0, y^2 = 0, yx = xy on x < y.
        let w = |s: &[u8]| FreeWord(s.to_vec());
        let rels = vec![
            comb_from(vec![(w(&[0, 0]), CycloNum::one())]),
            comb_from(vec![(w(&[1, 1]), CycloNum::one())]),
            comb_from(vec![
                (w(&[1, 0]), CycloNum::one()),
                (w(&[0, 1]), CycloNum::from_int(-1)),
            ]),
        ];
        let basis = vec![FreeWord::empty(), w(&[0]), w(&[1]), w(&[0, 1])];
        let sys = RewriteSystem::new(vec!["x".into(), "y".into()], rels, basis).unwrap();
        let before = sys.rule_count();
        let sys = sys.complete(6).unwrap();
        assert_eq!(sys.rule_count(), before, "no critical pair should survive");
    }

    #[test]
    fn dropped_rule_is_detected() {
        // FK3 without the (ac + cb + ba) relation: cb stays irreducible and
        // escapes the declared basis.
        let (gens, mut rels, basis) = fk3_relations(CycloNum::zero(), CycloNum::zero());
        rels.remove(4);
        let sys = RewriteSystem::new(gens, rels, basis).unwrap();
        // Closure fails before completion...
        let direct = sys.normal_form(&comb_from(vec![(
            FreeWord(vec![2, 1]),
            CycloNum::one(),
        )]));
        assert!(matches!(direct, Err(Error::EscapesBasis(ref w)) if w == "cb"));
        // ...and completion cannot repair a missing independent relation.
        assert!(sys.complete(5).is_err());
    }

    #[test]
    fn normal_form_is_idempotent_and_linear() {
        let sys = fk3_system(1, 2);
        let mix = comb_from(vec![
            (FreeWord(vec![2, 1, 0]), CycloNum::from_int(3)),
            (FreeWord(vec![0, 1, 2]), CycloNum::from_int(-2)),
            (FreeWord(vec![2, 2, 2, 0]), CycloNum::one()),
        ]);
        let nf = sys.normal_form(&mix).unwrap();
        assert_eq!(sys.normal_form(&nf).unwrap(), nf);
        // Linearity: NF(3u - 2v) = 3 NF(u) - 2 NF(v).
        let u = comb_from(vec![(FreeWord(vec![2, 1, 0]), CycloNum::one())]);
        let v = comb_from(vec![(FreeWord(vec![1, 1, 0]), CycloNum::one())]);
        let mut combo = LinComb::new();
        for (w, c) in &u {
            comb_add(&mut combo, w.clone(), c * &CycloNum::from_int(3));
        }
        for (w, c) in &v {
            comb_add(&mut combo, w.clone(), c * &CycloNum::from_int(-2));
        }
        let lhs = sys.normal_form(&combo).unwrap();
        let nu = sys.normal_form(&u).unwrap();
        let nv = sys.normal_form(&v).unwrap();
        let mut rhs = LinComb::new();
        for (w, c) in nu {
            comb_add(&mut rhs, w, &c * &CycloNum::from_int(3));
        }
        for (w, c) in nv {
            comb_add(&mut rhs, w, &c * &CycloNum::from_int(-2));
        }
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn reduction_is_strategy_independent_after_completion() {
        let sys = fk3_system(2, 3);
        let mut seed = 0x9e3779b97f4a7c15u64;
        for _ in 0..200 {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let len = (seed >> 60) as usize % 7;
            let word: Vec<u8> = (0..len).map(|i| ((seed >> (i * 8)) % 3) as u8).collect();
            let comb = comb_from(vec![(FreeWord(word), CycloNum::one())]);
            assert_eq!(sys.reduce(&comb), sys.reduce_rightmost(&comb));
        }
    }
}
