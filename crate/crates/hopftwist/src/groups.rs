//! Finite groups as explicit multiplication tables.
//!
//! Elements are dense indices `0..m-1`; labels are cosmetic. Every
//! constructed group passes full associativity / identity / inverse
//! verification. Products of permutations compose as functions:
//! `(ab)(x) = a(b(x))`.

use std::collections::HashMap;

use serde::Deserialize;

use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    mult: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
    labels: Vec<String>,
}

impl std::fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "FiniteGroup(order {})", self.order)
    }
}

impl FiniteGroup {
    /// Build from a multiplication table, verifying the group axioms.
    pub fn from_table(mult: Vec<Vec<usize>>, labels: Option<Vec<String>>) -> Result<Self> {
        let m = mult.len();
        if m == 0 || mult.iter().any(|row| row.len() != m) {
            return Err(Error::NotAGroup("table is not square".into()));
        }
        let flat: Vec<usize> = mult.iter().flatten().copied().collect();
        if flat.iter().any(|&x| x >= m) {
            return Err(Error::NotAGroup("table entry out of range".into()));
        }
        // Identity.
        let identity = (0..m)
            .find(|&e| (0..m).all(|a| mult[e][a] == a && mult[a][e] == a))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;
        // Inverses.
        let mut inverse = vec![usize::MAX; m];
        for a in 0..m {
            let inv = (0..m)
                .find(|&b| mult[a][b] == identity && mult[b][a] == identity)
                .ok_or_else(|| Error::NotAGroup(format!("element {a} has no inverse")))?;
            inverse[a] = inv;
        }
        // Associativity.
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    if mult[mult[a][b]][c] != mult[a][mult[b][c]] {
                        return Err(Error::NotAGroup(format!(
                            "associativity fails at ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != m {
                    return Err(Error::NotAGroup("label count mismatch".into()));
                }
                let mut seen = std::collections::HashSet::new();
                for lab in &l {
                    if !seen.insert(lab.clone()) {
                        return Err(Error::NotAGroup(format!("duplicate label '{lab}'")));
                    }
                }
                l
            }
            None => (0..m).map(|i| i.to_string()).collect(),
        };
        Ok(FiniteGroup {
            order: m,
            mult: flat,
            inverse,
            identity,
            labels,
        })
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mult = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        FiniteGroup::from_table(mult, Some((0..n).map(|i| i.to_string()).collect()))
            .expect("cyclic group table is a group")
    }

    pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Self {
        let m = a.order * b.order;
        let idx = |x: usize, y: usize| x * b.order + y;
        let mut mult = vec![vec![0usize; m]; m];
        for x1 in 0..a.order {
            for y1 in 0..b.order {
                for x2 in 0..a.order {
                    for y2 in 0..b.order {
                        mult[idx(x1, y1)][idx(x2, y2)] = idx(a.op(x1, x2), b.op(y1, y2));
                    }
                }
            }
        }
        let labels = (0..m)
            .map(|i| format!("({},{})", a.labels[i / b.order], b.labels[i % b.order]))
            .collect();
        FiniteGroup::from_table(mult, Some(labels)).expect("product of groups is a group")
    }

    /// Semidirect product `H ⋊ A`. `action[k]` is the automorphism of `H`
    /// by which the `k`-th element of `A` acts; the element `(h, a)` has
    /// index `h * |A| + a` and `(h1, a1)(h2, a2) = (h1 · a1(h2), a1 a2)`.
    pub fn semidirect(h: &FiniteGroup, a: &FiniteGroup, action: &[Vec<usize>]) -> Result<Self> {
        if action.len() != a.order {
            return Err(Error::NotAnAutomorphism);
        }
        for phi in action {
            if phi.len() != h.order {
                return Err(Error::NotAnAutomorphism);
            }
            // Bijective and multiplicative.
            let mut seen = vec![false; h.order];
            for &y in phi {
                if y >= h.order || seen[y] {
                    return Err(Error::NotAnAutomorphism);
                }
                seen[y] = true;
            }
            for x in 0..h.order {
                for y in 0..h.order {
                    if phi[h.op(x, y)] != h.op(phi[x], phi[y]) {
                        return Err(Error::NotAnAutomorphism);
                    }
                }
            }
        }
        let m = h.order * a.order;
        let idx = |x: usize, k: usize| x * a.order + k;
        let mut mult = vec![vec![0usize; m]; m];
        for h1 in 0..h.order {
            for a1 in 0..a.order {
                for h2 in 0..h.order {
                    for a2 in 0..a.order {
                        let acted = action[a1][h2];
                        mult[idx(h1, a1)][idx(h2, a2)] = idx(h.op(h1, acted), a.op(a1, a2));
                    }
                }
            }
        }
        let labels = (0..m)
            .map(|i| format!("({};{})", h.labels[i / a.order], a.labels[i % a.order]))
            .collect();
        FiniteGroup::from_table(mult, Some(labels))
    }

    /// Symmetric group on `n <= 4` letters; elements are permutations in
    /// lexicographic one-line order, labeled by cycle notation.
    pub fn symmetric(n: usize) -> Self {
        assert!((1..=4).contains(&n), "symmetric(n) supports n <= 4");
        let perms = crate::tensor::Permutation::all(n);
        let index: HashMap<Vec<usize>, usize> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.one_line(), i))
            .collect();
        let m = perms.len();
        let mut mult = vec![vec![0usize; m]; m];
        for (i, p) in perms.iter().enumerate() {
            for (j, q) in perms.iter().enumerate() {
                mult[i][j] = index[&p.compose(q).one_line()];
            }
        }
        let labels = perms.iter().map(cycle_label).collect();
        FiniteGroup::from_table(mult, Some(labels)).expect("symmetric group table is a group")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn op(&self, a: usize, b: usize) -> usize {
        self.mult[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// `g x g^{-1}`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.op(self.op(g, x), self.inv(g))
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn element_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.op(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        use num_integer::Integer;
        (0..self.order).fold(1usize, |acc, a| acc.lcm(&self.element_order(a)))
    }

    pub fn is_subgroup(&self, elements: &[usize]) -> bool {
        let set: std::collections::HashSet<usize> = elements.iter().copied().collect();
        if !set.contains(&self.identity) {
            return false;
        }
        set.iter().all(|&a| {
            set.contains(&self.inv(a)) && set.iter().all(|&b| set.contains(&self.op(a, b)))
        })
    }

    pub fn is_normal(&self, elements: &[usize]) -> bool {
        if !self.is_subgroup(elements) {
            return false;
        }
        let set: std::collections::HashSet<usize> = elements.iter().copied().collect();
        (0..self.order).all(|g| set.iter().all(|&x| set.contains(&self.conjugate(g, x))))
    }

    /// The subgroup generated by a set of elements.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = std::collections::BTreeSet::new();
        set.insert(self.identity);
        let mut frontier: Vec<usize> = vec![self.identity];
        while let Some(x) = frontier.pop() {
            for &g in gens {
                for y in [self.op(x, g), self.op(g, x), self.inv(self.op(x, g))] {
                    if set.insert(y) {
                        frontier.push(y);
                    }
                }
            }
        }
        set.into_iter().collect()
    }

    /// Structural equality: same order and multiplication table
    /// (labels are cosmetic).
    pub fn same_structure(&self, other: &FiniteGroup) -> bool {
        self.order == other.order && self.mult == other.mult
    }

    pub fn number_of_conjugacy_classes(&self) -> usize {
        let mut seen = vec![false; self.order];
        let mut classes = 0;
        for a in 0..self.order {
            if seen[a] {
                continue;
            }
            classes += 1;
            for g in 0..self.order {
                seen[self.conjugate(g, a)] = true;
            }
        }
        classes
    }
}

fn cycle_label(p: &crate::tensor::Permutation) -> String {
    let n = p.size();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p.apply(start) == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        loop {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p.apply(x);
            if x == start {
                break;
            }
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push('e');
    }
    out
}

/// A subgroup together with an ordered left-coset transversal
/// (identity-first, then ascending element index).
#[derive(Clone, Debug)]
pub struct Subgroup {
    elements: Vec<usize>,
    element_index: HashMap<usize, usize>,
    coset_reps: Vec<usize>,
    /// For each group element, the index of the coset `t_j F` containing it.
    coset_of: Vec<usize>,
}

impl Subgroup {
    /// Verify `elements` is a subgroup of `g` and compute coset data.
    pub fn new(g: &FiniteGroup, elements: &[usize]) -> Result<Self> {
        let mut elements: Vec<usize> = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        if !g.is_subgroup(&elements) {
            return Err(Error::NotASubgroup(format!(
                "{} elements, not closed",
                elements.len()
            )));
        }
        let element_index: HashMap<usize, usize> =
            elements.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut coset_reps = Vec::new();
        let mark = |rep: usize, coset_of: &mut Vec<usize>, coset_reps: &mut Vec<usize>| {
            let id = coset_reps.len();
            coset_reps.push(rep);
            for &f in &elements {
                coset_of[g.op(rep, f)] = id;
            }
        };
        mark(g.identity(), &mut coset_of, &mut coset_reps);
        for rep in 0..g.order() {
            if coset_of[rep] == usize::MAX {
                mark(rep, &mut coset_of, &mut coset_reps);
            }
        }
        Ok(Subgroup {
            elements,
            element_index,
            coset_reps,
            coset_of,
        })
    }

    pub fn full(g: &FiniteGroup) -> Self {
        Subgroup::new(g, &(0..g.order()).collect::<Vec<_>>()).expect("G is a subgroup of itself")
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.element_index.contains_key(&x)
    }

    /// Position of `x` in the subgroup's element list.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.element_index.get(&x).copied()
    }

    pub fn coset_reps(&self) -> &[usize] {
        &self.coset_reps
    }

    pub fn coset_index_of(&self, x: usize) -> usize {
        self.coset_of[x]
    }

    /// The unique `j` with `t_i^{-1} g t_j ∈ F`.
    pub fn paired_coset(&self, g_group: &FiniteGroup, i: usize, gelt: usize) -> usize {
        let ti = self.coset_reps[i];
        self.coset_of[g_group.op(g_group.inv(gelt), ti)]
    }

    /// Restrict the subgroup to its own multiplication table.
    pub fn as_group(&self, g: &FiniteGroup) -> FiniteGroup {
        let table = self
            .elements
            .iter()
            .map(|&a| {
                self.elements
                    .iter()
                    .map(|&b| self.element_index[&g.op(a, b)])
                    .collect()
            })
            .collect();
        let labels = self.elements.iter().map(|&a| g.label(a).to_string()).collect();
        FiniteGroup::from_table(table, Some(labels)).expect("subgroup is a group")
    }
}

/// The order-36 semidirect product `(Z/3 × Z/3) ⋊ Z/4` with the generator of
/// `Z/4` acting by `x^i y^j -> x^{2i} y^j`.
pub fn paper36_group() -> FiniteGroup {
    let h = FiniteGroup::direct_product(&FiniteGroup::cyclic(3), &FiniteGroup::cyclic(3));
    let a = FiniteGroup::cyclic(4);
    let gen: Vec<usize> = (0..9)
        .map(|idx| {
            let (i, j) = (idx / 3, idx % 3);
            (2 * i % 3) * 3 + j
        })
        .collect();
    let mut action = vec![(0..9).collect::<Vec<usize>>()];
    for _ in 1..4 {
        let prev = action.last().unwrap();
        action.push((0..9).map(|x| gen[prev[x]]).collect());
    }
    FiniteGroup::semidirect(&h, &a, &action).expect("paper36 action is by automorphisms")
}

/// The `(Z/3)^2` subgroup of [`paper36_group`] (elements with trivial
/// `Z/4` part).
pub fn paper36_normal_subgroup(g: &FiniteGroup) -> Result<Subgroup> {
    let elements: Vec<usize> = (0..9).map(|h| h * 4).collect();
    Subgroup::new(g, &elements)
}

#[derive(Deserialize)]
struct GroupTableJson {
    #[serde(default)]
    labels: Option<Vec<String>>,
    mult: Vec<Vec<usize>>,
}

/// Parse the group spec mini-language:
/// `cyclic:N`, `sym:N`, `prod(S1,S2)`,
/// `semidirect(S1,S2,action=paper-36)`, `table:PATH`.
pub fn parse_group_spec(spec: &str) -> Result<FiniteGroup> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("cyclic:") {
        let n: usize = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad cyclic order '{rest}'")))?;
        if n == 0 {
            return Err(Error::Parse("cyclic order must be positive".into()));
        }
        return Ok(FiniteGroup::cyclic(n));
    }
    if let Some(rest) = spec.strip_prefix("sym:") {
        let n: usize = rest
            .parse()
            .map_err(|_| Error::Parse(format!("bad symmetric degree '{rest}'")))?;
        if !(1..=4).contains(&n) {
            return Err(Error::Parse("sym:N supports 1 <= N <= 4".into()));
        }
        return Ok(FiniteGroup::symmetric(n));
    }
    if let Some(rest) = spec.strip_prefix("prod(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse("unterminated prod(...)".into()))?;
        let (a, b) = split_top_level(inner)
            .ok_or_else(|| Error::Parse("prod needs two arguments".into()))?;
        return Ok(FiniteGroup::direct_product(
            &parse_group_spec(a)?,
            &parse_group_spec(b)?,
        ));
    }
    if let Some(rest) = spec.strip_prefix("semidirect(") {
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse("unterminated semidirect(...)".into()))?;
        let (h_spec, tail) = split_top_level(inner)
            .ok_or_else(|| Error::Parse("semidirect needs three arguments".into()))?;
        let (a_spec, action_spec) = split_top_level(tail)
            .ok_or_else(|| Error::Parse("semidirect needs three arguments".into()))?;
        let action_name = action_spec
            .trim()
            .strip_prefix("action=")
            .ok_or_else(|| Error::Parse("third semidirect argument must be action=NAME".into()))?;
        match action_name {
            "paper-36" => {
                let expect_h = "prod(cyclic:3,cyclic:3)";
                let expect_a = "cyclic:4";
                if h_spec.trim() != expect_h || a_spec.trim() != expect_a {
                    return Err(Error::Parse(format!(
                        "action=paper-36 requires {expect_h} and {expect_a}"
                    )));
                }
                Ok(paper36_group())
            }
            other => Err(Error::Parse(format!("unknown action '{other}'"))),
        }
    } else if let Some(path) = spec.strip_prefix("table:") {
        let text = std::fs::read_to_string(path)?;
        let table: GroupTableJson = serde_json::from_str(&text)?;
        FiniteGroup::from_table(table.mult, table.labels)
    } else {
        Err(Error::Parse(format!("unknown group spec '{spec}'")))
    }
}

/// Split "a,b..." at the first top-level comma.
fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0usize;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::cyclic(1);
        assert_eq!(g.order(), 1);
        assert_eq!(g.identity(), 0);
    }

    #[test]
    fn symmetric_three() {
        let g = FiniteGroup::symmetric(3);
        assert_eq!(g.order(), 6);
        let involutions = (0..6).filter(|&a| a != g.identity() && g.element_order(a) == 2).count();
        assert_eq!(involutions, 3);
        assert_eq!(g.number_of_conjugacy_classes(), 3);
    }

    #[test]
    fn paper36_semidirect_has_order_36() {
        let g = paper36_group();
        assert_eq!(g.order(), 36);
        // The square of the Z/4 generator is central.
        let a2 = 2; // (identity of (Z/3)^2 ; a^2) = index 0*4 + 2
        for x in 0..36 {
            assert_eq!(g.op(a2, x), g.op(x, a2));
        }
    }

    #[test]
    fn conjugation_in_s3() {
        let g = FiniteGroup::symmetric(3);
        let g123 = g.element_by_label("(123)").unwrap();
        let g12 = g.element_by_label("(12)").unwrap();
        let g23 = g.element_by_label("(23)").unwrap();
        assert_eq!(g.conjugate(g123, g12), g23);
    }

    #[test]
    fn normality_checks() {
        let g36 = paper36_group();
        let f: Vec<usize> = (0..9).map(|h| h * 4).collect();
        assert!(g36.is_normal(&f));
        let s3 = FiniteGroup::symmetric(3);
        let g12 = s3.element_by_label("(12)").unwrap();
        let sub = s3.generated_subgroup(&[g12]);
        assert_eq!(sub.len(), 2);
        assert!(s3.is_subgroup(&sub));
        assert!(!s3.is_normal(&sub));
    }

    #[test]
    fn coset_reps_extremes() {
        let g = FiniteGroup::symmetric(3);
        let full = Subgroup::full(&g);
        assert_eq!(full.coset_reps(), &[g.identity()]);
        let trivial = Subgroup::new(&g, &[g.identity()]).unwrap();
        assert_eq!(trivial.coset_reps().len(), 6);
    }

    #[test]
    fn paper36_coset_reps_are_z4_powers() {
        let g = paper36_group();
        let f = paper36_normal_subgroup(&g).unwrap();
        assert_eq!(f.size(), 9);
        // 36/9 = 4 cosets; reps are exactly the powers of the Z/4 generator
        // (identity first, then ascending index = (0;1), (0;2), (0;3)).
        assert_eq!(f.coset_reps(), &[0, 1, 2, 3]);
    }

    #[test]
    fn cosets_partition_the_group() {
        let g = paper36_group();
        let f = paper36_normal_subgroup(&g).unwrap();
        let mut hit = vec![false; g.order()];
        for &t in f.coset_reps() {
            for &x in f.elements() {
                let y = g.op(t, x);
                assert!(!hit[y], "coset map not injective");
                hit[y] = true;
            }
        }
        assert!(hit.iter().all(|&b| b));
        // paired_coset: t_i^{-1} g t_j lies in F.
        for i in 0..f.coset_reps().len() {
            for gelt in 0..g.order() {
                let j = f.paired_coset(&g, i, gelt);
                let ti = f.coset_reps()[i];
                let tj = f.coset_reps()[j];
                let x = g.op(g.op(g.inv(ti), gelt), tj);
                assert!(f.contains(x));
            }
        }
    }

    #[test]
    fn group_spec_parser() {
        assert_eq!(parse_group_spec("cyclic:3").unwrap().order(), 3);
        assert_eq!(parse_group_spec("sym:3").unwrap().order(), 6);
        assert_eq!(parse_group_spec("prod(cyclic:2,cyclic:2)").unwrap().order(), 4);
        let g = parse_group_spec("semidirect(prod(cyclic:3,cyclic:3),cyclic:4,action=paper-36)")
            .unwrap();
        assert_eq!(g.order(), 36);
        assert!(parse_group_spec("frobnicate:9").is_err());
    }

    #[test]
    fn bad_tables_are_rejected() {
        // Left-ideal-like table: 0 maps everything to 0, not a group.
        let t = vec![vec![0, 0], vec![0, 0]];
        assert!(FiniteGroup::from_table(t, None).is_err());
        // Non-associative magma with identity (no inverse structure).
        let t = vec![
            vec![0, 1, 2],
            vec![1, 1, 0],
            vec![2, 0, 1],
        ];
        assert!(FiniteGroup::from_table(t, None).is_err());
    }
}
