//! Finite groups as Cayley tables over dense indices, subgroups, right cosets
//! and the left action of the normalizer on multisets of right cosets.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use crate::error::{invalid, Error, Result};

/// Dense element index; the identity is always `0`.
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Group {
    order: usize,
    mul: Vec<Elem>,
    inv: Vec<Elem>,
    names: Option<Vec<String>>,
}

impl Group {
    /// Builds a group from a multiplication table whose identity sits at index 0.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>, cap: usize) -> Result<Group> {
        let order = table.len();
        if order == 0 {
            return invalid("empty multiplication table");
        }
        if order > cap {
            return Err(Error::Cap { what: "group order", value: order, cap });
        }
        let mut mul = Vec::with_capacity(order * order);
        for (a, row) in table.iter().enumerate() {
            if row.len() != order {
                return invalid(format!("table row {a} has length {} instead of {order}", row.len()));
            }
            let mut seen = vec![false; order];
            for &c in row {
                if c >= order {
                    return invalid(format!("table entry {c} out of range"));
                }
                if std::mem::replace(&mut seen[c], true) {
                    return invalid(format!("table row {a} repeats entry {c}"));
                }
            }
            mul.extend_from_slice(row);
        }
        for a in 0..order {
            if mul[a] != a || mul[a * order] != a {
                return invalid("index 0 is not a two-sided identity");
            }
        }
        for b in 0..order {
            let mut seen = vec![false; order];
            for a in 0..order {
                if std::mem::replace(&mut seen[mul[a * order + b]], true) {
                    return invalid(format!("table column {b} repeats an entry"));
                }
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = mul[a * order + b];
                for c in 0..order {
                    if mul[ab * order + c] != mul[a * order + mul[b * order + c]] {
                        return invalid(format!("table is not associative at ({a},{b},{c})"));
                    }
                }
            }
        }
        let mut inv = vec![0; order];
        for a in 0..order {
            inv[a] = (0..order).find(|&b| mul[a * order + b] == 0).expect("latin square row contains 0");
        }
        if let Some(names) = &names {
            if names.len() != order {
                return invalid("names length differs from group order");
            }
        }
        Ok(Group { order, mul, inv, names })
    }

    /// Closure of permutation generators on `degree` points. Elements are
    /// indexed in breadth-first discovery order; `(ab)(x) = a(b(x))`.
    pub fn from_permutations(generators: &[Vec<usize>], degree: usize, cap: usize) -> Result<Group> {
        for g in generators {
            if g.len() != degree {
                return invalid(format!("generator {g:?} does not act on {degree} points"));
            }
            let mut seen = vec![false; degree];
            for &x in g {
                if x >= degree || std::mem::replace(&mut seen[x], true) {
                    return invalid(format!("generator {g:?} is not a permutation"));
                }
            }
        }
        let compose = |a: &[usize], b: &[usize]| b.iter().map(|&x| a[x]).collect::<Vec<_>>();
        let identity: Vec<usize> = (0..degree).collect();
        let mut perms = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = compose(&perms[x], g);
                if !index.contains_key(&y) {
                    if perms.len() == cap {
                        return Err(Error::Cap { what: "group order", value: cap + 1, cap });
                    }
                    index.insert(y.clone(), perms.len());
                    queue.push_back(perms.len());
                    perms.push(y);
                }
            }
        }
        let order = perms.len();
        let mut mul = Vec::with_capacity(order * order);
        for a in &perms {
            for b in &perms {
                mul.push(index[&compose(a, b)]);
            }
        }
        let mut inv = vec![0; order];
        for a in 0..order {
            inv[a] = (0..order).find(|&b| mul[a * order + b] == 0).expect("closure contains inverses");
        }
        Ok(Group { order, mul, inv, names: None })
    }

    /// Table built from a closed-form product; validated like any table.
    pub fn from_fn(order: usize, f: impl Fn(Elem, Elem) -> Elem) -> Result<Group> {
        let table = (0..order).map(|a| (0..order).map(|b| f(a, b)).collect()).collect();
        Group::from_table(table, None, usize::MAX)
    }

    pub fn cyclic(n: usize) -> Group {
        Group::from_fn(n, |a, b| (a + b) % n).expect("cyclic table is a group")
    }

    /// `a` is the fast coordinate: `(x, y) ↦ x + |a|·y`.
    pub fn direct_product(a: &Group, b: &Group) -> Group {
        let na = a.order;
        Group::from_fn(na * b.order, |x, y| {
            a.mul(x % na, y % na) + na * b.mul(x / na, y / na)
        })
        .expect("direct product is a group")
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Group> {
        if names.len() != self.order {
            return invalid("names length differs from group order");
        }
        self.names = Some(names);
        Ok(self)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.mul[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inv[a]
    }

    /// `g h g⁻¹`.
    #[inline]
    pub fn conj(&self, g: Elem, h: Elem) -> Elem {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn product(&self, word: &[Elem]) -> Elem {
        word.iter().fold(0, |acc, &x| self.mul(acc, x))
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, a: Elem) -> String {
        match &self.names {
            Some(n) => n[a].clone(),
            None => format!("g{a}"),
        }
    }

    pub fn table(&self) -> Vec<Vec<usize>> {
        self.mul.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn element_order(&self, a: Elem) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Sorted subgroup generated by `gens`.
    pub fn closure(&self, gens: &[Elem]) -> Vec<Elem> {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0];
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        members
    }

    pub fn is_subgroup(&self, set: &[Elem]) -> bool {
        let mut inside = vec![false; self.order];
        for &x in set {
            if x >= self.order {
                return false;
            }
            inside[x] = true;
        }
        inside[0] && set.iter().all(|&a| inside[self.inv(a)] && set.iter().all(|&b| inside[self.mul(a, b)]))
    }
}

/// A subgroup `H ≤ G` with its right cosets, canonical transversal and normalizer.
#[derive(Debug, Clone)]
pub struct Subgroup {
    group: Arc<Group>,
    elements: Vec<Elem>,
    local: Vec<Option<usize>>,
    local_mul: Vec<usize>,
    coset_id: Vec<Elem>,
    cosets: Vec<Vec<Elem>>,
    in_normalizer: Vec<bool>,
    normalizer: Vec<Elem>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements && (Arc::ptr_eq(&self.group, &other.group) || self.group == other.group)
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub fn new(group: Arc<Group>, elements: &[Elem]) -> Result<Subgroup> {
        let mut elements = elements.to_vec();
        elements.sort_unstable();
        elements.dedup();
        if !group.is_subgroup(&elements) {
            return invalid(format!("{elements:?} is not a subgroup"));
        }
        let order = group.order();
        let mut local = vec![None; order];
        for (i, &h) in elements.iter().enumerate() {
            local[h] = Some(i);
        }
        let k = elements.len();
        let mut local_mul = Vec::with_capacity(k * k);
        for &a in &elements {
            for &b in &elements {
                local_mul.push(local[group.mul(a, b)].expect("closed"));
            }
        }
        let mut coset_id = vec![usize::MAX; order];
        let mut cosets = Vec::new();
        for g in 0..order {
            if coset_id[g] == usize::MAX {
                let mut coset: Vec<Elem> = elements.iter().map(|&h| group.mul(h, g)).collect();
                coset.sort_unstable();
                for &x in &coset {
                    coset_id[x] = g;
                }
                cosets.push(coset);
            }
        }
        let in_normalizer: Vec<bool> = (0..order)
            .map(|g| elements.iter().all(|&h| local[group.conj(g, h)].is_some()))
            .collect();
        let normalizer = (0..order).filter(|&g| in_normalizer[g]).collect();
        Ok(Subgroup { group, elements, local, local_mul, coset_id, cosets, in_normalizer, normalizer })
    }

    pub fn trivial(group: Arc<Group>) -> Subgroup {
        Subgroup::new(group, &[0]).expect("trivial subgroup")
    }

    pub fn whole(group: Arc<Group>) -> Subgroup {
        let all: Vec<Elem> = (0..group.order()).collect();
        Subgroup::new(group, &all).expect("whole group")
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: Elem) -> bool {
        self.local[g].is_some()
    }

    /// Position of `g` in the sorted element list.
    pub fn local_index(&self, g: Elem) -> Option<usize> {
        self.local[g]
    }

    pub fn element(&self, local: usize) -> Elem {
        self.elements[local]
    }

    #[inline]
    pub fn local_mul(&self, a: usize, b: usize) -> usize {
        self.local_mul[a * self.elements.len() + b]
    }

    /// Canonical id (minimal index) of the right coset `Hg`.
    #[inline]
    pub fn coset_id(&self, g: Elem) -> Elem {
        self.coset_id[g]
    }

    pub fn cosets(&self) -> &[Vec<Elem>] {
        &self.cosets
    }

    /// Minimal-index representatives, one per right coset, ascending.
    pub fn transversal(&self) -> Vec<Elem> {
        self.cosets.iter().map(|c| c[0]).collect()
    }

    pub fn index(&self) -> usize {
        self.cosets.len()
    }

    pub fn normalizer(&self) -> &[Elem] {
        &self.normalizer
    }

    pub fn normalizes(&self, g: Elem) -> bool {
        self.in_normalizer[g]
    }

    pub fn is_normal(&self) -> bool {
        self.normalizer.len() == self.group.order()
    }

    /// `gHg⁻¹`.
    pub fn conjugate(&self, g: Elem) -> Subgroup {
        if self.in_normalizer[g] {
            return self.clone();
        }
        let conj: Vec<Elem> = self.elements.iter().map(|&h| self.group.conj(g, h)).collect();
        Subgroup::new(self.group.clone(), &conj).expect("conjugate of a subgroup")
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> usize {
        self.elements
            .iter()
            .map(|&h| self.group.element_order(h))
            .fold(1, num_integer::lcm)
    }

    pub fn multiset(&self, tuple: &[Elem]) -> CosetMultiset {
        let mut counts = BTreeMap::new();
        for &g in tuple {
            *counts.entry(self.coset_id(g)).or_insert(0) += 1;
        }
        CosetMultiset { counts }
    }

    /// `Hb ↦ Hgb` on every coset, for `g ∈ N_G(H)`.
    pub fn act_on_multiset(&self, g: Elem, lambda: &CosetMultiset) -> Result<CosetMultiset> {
        if !self.normalizes(g) {
            return invalid(format!("{} does not normalize H", self.group.name(g)));
        }
        let mut counts = BTreeMap::new();
        for (&b, &c) in &lambda.counts {
            *counts.entry(self.coset_id(self.group.mul(g, b))).or_insert(0) += c;
        }
        Ok(CosetMultiset { counts })
    }
}

/// Multiset of right cosets keyed by canonical coset id.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CosetMultiset {
    pub counts: BTreeMap<Elem, usize>,
}

impl CosetMultiset {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn count(&self, coset: Elem) -> usize {
        self.counts.get(&coset).copied().unwrap_or(0)
    }

    pub fn max_multiplicity(&self) -> usize {
        self.counts.values().copied().max().unwrap_or(0)
    }
}
