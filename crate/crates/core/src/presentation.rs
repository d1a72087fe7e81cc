//! Presentations `(H, α, 𝔤)`, admissible moves, canonical normalization and
//! the invariant chain `H ⊴ S ≤ K ≤ N_G(H)`.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use serde::Serialize;

use crate::cyclo::SubfieldDescriptor;
use crate::error::{invalid, precondition, Error, Result};
use crate::group::{CosetMultiset, Elem, Group, Subgroup};
use crate::par::{self, Exec};
use crate::settings::Settings;
use crate::twisted::{canonical_cocycle, Cocycle, MuImage};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    group: Arc<Group>,
    h: Arc<Subgroup>,
    alpha: Cocycle,
    tuple: Vec<Elem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// `g_pos ↦ h·g_pos` for `h ∈ H`.
    I { pos: usize, h: Elem },
    /// New tuple `(g_{σ(1)}, …, g_{σ(n)})`.
    II(Vec<usize>),
    /// `𝔤 ↦ g𝔤`, `H ↦ gHg⁻¹`, `α ↦ α^g`.
    III(Elem),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ValidationReport {
    pub wellformed: bool,
    pub connected: bool,
    pub problems: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InvariantChain {
    pub k: Vec<Elem>,
    pub n_sub: Vec<Elem>,
    pub s: Vec<Elem>,
    pub n: u32,
    pub s_bar_image: Vec<u32>,
    pub field: SubfieldDescriptor,
    pub word_bound_used: usize,
    pub mu_stable: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Classification {
    pub division_form: bool,
    #[serde(rename = "stronglyVP")]
    pub strongly_vp: bool,
    #[serde(rename = "essentiallyVP")]
    pub essentially_vp: bool,
}

/// The subgroup `K` as computed by each characterization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KWitness {
    pub stabilizer: Vec<Elem>,
    pub equal_frequency: Vec<Elem>,
    pub factorization: Vec<Elem>,
}

impl Presentation {
    pub fn new(alpha: Cocycle, tuple: Vec<Elem>) -> Result<Presentation> {
        let h = alpha.subgroup().clone();
        let group = h.group().clone();
        if tuple.is_empty() {
            return invalid("tuple must be nonempty");
        }
        if let Some(&x) = tuple.iter().find(|&&x| x >= group.order()) {
            return invalid(format!("tuple entry {x} is not a group element"));
        }
        Ok(Presentation { group, h, alpha, tuple })
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn subgroup(&self) -> &Arc<Subgroup> {
        &self.h
    }

    pub fn cocycle(&self) -> &Cocycle {
        &self.alpha
    }

    pub fn tuple(&self) -> &[Elem] {
        &self.tuple
    }

    pub fn len(&self) -> usize {
        self.tuple.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuple.is_empty()
    }

    /// `Λ`.
    pub fn multiset(&self) -> CosetMultiset {
        self.h.multiset(&self.tuple)
    }

    pub fn with_cocycle(&self, alpha: Cocycle) -> Result<Presentation> {
        if **alpha.subgroup() != *self.h {
            return invalid("cocycle lives on a different subgroup");
        }
        Presentation::new(alpha, self.tuple.clone())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut problems = Vec::new();
        if !self.alpha.validate() {
            problems.push("cocycle identity or normalization fails".to_string());
        }
        let g = &self.group;
        let mut gens = BTreeSet::new();
        for &a in &self.tuple {
            for &b in &self.tuple {
                for &h in self.h.elements() {
                    gens.insert(g.mul(g.mul(g.inv(a), h), b));
                }
            }
        }
        let gens: Vec<Elem> = gens.into_iter().collect();
        let connected = g.closure(&gens).len() == g.order();
        ValidationReport { wellformed: problems.is_empty(), connected, problems }
    }

    pub fn apply_move(&self, m: &Move) -> Result<Presentation> {
        let mut out = self.clone();
        match m {
            Move::I { pos, h } => {
                if *pos >= self.tuple.len() {
                    return invalid(format!("position {pos} is outside the tuple"));
                }
                if !self.h.contains(*h) {
                    return invalid(format!("{} is not in H", self.group.name(*h)));
                }
                out.tuple[*pos] = self.group.mul(*h, self.tuple[*pos]);
            }
            Move::II(perm) => {
                let n = self.tuple.len();
                let mut seen = vec![false; n];
                if perm.len() != n || perm.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
                    return invalid(format!("{perm:?} is not a permutation of {n} points"));
                }
                out.tuple = perm.iter().map(|&i| self.tuple[i]).collect();
            }
            Move::III(g) => {
                if *g >= self.group.order() {
                    return invalid(format!("{g} is not a group element"));
                }
                out.alpha = self.alpha.conjugate(*g);
                out.h = out.alpha.subgroup().clone();
                out.tuple = self.tuple.iter().map(|&x| self.group.mul(*g, x)).collect();
            }
        }
        Ok(out)
    }

    /// Stabilizer of `Λ` in `N_G(H)`.
    pub fn k_stabilizer(&self) -> Vec<Elem> {
        let lam = self.multiset();
        self.h
            .normalizer()
            .iter()
            .copied()
            .filter(|&g| self.h.act_on_multiset(g, &lam).expect("g normalizes H") == lam)
            .collect()
    }

    fn counts_all(&self) -> Vec<usize> {
        let mut counts = vec![0; self.group.order()];
        for &g in &self.tuple {
            counts[self.h.coset_id(g)] += 1;
        }
        counts
    }

    fn equal_frequency(&self, u: &[Elem], counts: &[usize]) -> bool {
        let mut per_coset: BTreeMap<Elem, usize> = BTreeMap::new();
        for c in self.h.transversal() {
            let key = u.iter().map(|&x| self.group.mul(x, c)).min().expect("nonempty");
            let cnt = counts[c];
            if *per_coset.entry(key).or_insert(cnt) != cnt {
                return false;
            }
        }
        true
    }

    fn factors_along(&self, u: &[Elem], counts: &[usize]) -> bool {
        let mut left = counts.to_vec();
        let mut t: Vec<Elem> = u.iter().map(|&x| self.h.coset_id(x)).collect();
        t.sort_unstable();
        t.dedup();
        while let Some(b) = (0..left.len()).find(|&c| left[c] > 0) {
            for &x in &t {
                let c = self.h.coset_id(self.group.mul(x, b));
                if left[c] == 0 {
                    return false;
                }
                left[c] -= 1;
            }
        }
        true
    }

    /// Largest subgroup between `H` and `N_G(H)` satisfying `pred`, found by
    /// growing satisfying subgroups one normalizer element at a time.
    fn maximal_subgroup(&self, pred: impl Fn(&[Elem]) -> bool) -> Result<Vec<Elem>> {
        let start = self.h.elements().to_vec();
        if !pred(&start) {
            return Err(Error::Internal("H fails a property every presentation has".into()));
        }
        let mut seen: HashSet<Vec<Elem>> = HashSet::from([start.clone()]);
        let mut good = vec![start.clone()];
        let mut queue = vec![start];
        while let Some(u) = queue.pop() {
            for &g in self.h.normalizer() {
                if u.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens = u.clone();
                gens.push(g);
                let v = self.group.closure(&gens);
                if seen.insert(v.clone()) && pred(&v) {
                    good.push(v.clone());
                    queue.push(v);
                }
            }
        }
        let best = good.iter().max_by_key(|u| u.len()).expect("H is good").clone();
        if good.iter().any(|u| u.iter().any(|x| best.binary_search(x).is_err())) {
            return Err(Error::Internal("satisfying subgroups have no unique maximum".into()));
        }
        Ok(best)
    }

    /// `K` three ways; an error if they disagree.
    pub fn k_three_ways(&self) -> Result<KWitness> {
        let counts = self.counts_all();
        let w = KWitness {
            stabilizer: self.k_stabilizer(),
            equal_frequency: self.maximal_subgroup(|u| self.equal_frequency(u, &counts))?,
            factorization: self.maximal_subgroup(|u| self.factors_along(u, &counts))?,
        };
        if w.stabilizer != w.equal_frequency || w.stabilizer != w.factorization {
            return Err(Error::Internal(format!(
                "characterizations of K disagree: stabilizer {:?}, equal frequency {:?}, factorization {:?}",
                w.stabilizer, w.equal_frequency, w.factorization
            )));
        }
        Ok(w)
    }

    /// Elements of `set ⊆ N_G(H)` whose conjugation preserves `B_α`, decided on one
    /// representative per `H`-coset (inner automorphisms fix every ratio).
    fn b_alpha_normalizers(&self, set: &[Elem], bound: usize, exec: Exec) -> Result<Vec<Elem>> {
        let reps: Vec<Elem> = {
            let mut r: Vec<Elem> = set.iter().map(|&g| self.h.coset_id(g)).collect();
            r.sort_unstable();
            r.dedup();
            r
        };
        let flags = par::map(exec, 0..reps.len(), |i| self.alpha.normalizes_b_alpha(reps[i], bound, Exec::Sequential));
        let mut keep = HashSet::new();
        for (r, f) in reps.iter().zip(flags) {
            if f? {
                keep.insert(*r);
            }
        }
        Ok(set.iter().copied().filter(|&g| keep.contains(&self.h.coset_id(g))).collect())
    }

    /// Invariants of this presentation exactly as given (no normalization).
    pub fn invariants_literal(&self, settings: &Settings) -> Result<InvariantChain> {
        let bound = settings.word_bound;
        if bound < 2 {
            return invalid("word bound must be at least 2");
        }
        let k = self.k_three_ways()?.stabilizer;
        let n_sub = self.b_alpha_normalizers(self.h.normalizer(), bound, settings.exec)?;
        let s: Vec<Elem> = k.iter().copied().filter(|x| n_sub.binary_search(x).is_ok()).collect();
        for (name, set) in [("N", &n_sub), ("S", &s)] {
            if !self.group.is_subgroup(set) {
                return Err(Error::Internal(format!("{name} is not a subgroup")));
            }
        }
        let MuImage { n, stable, .. } = self.alpha.image_mu_n(bound, settings.exec);
        let mut reps: Vec<Elem> = s.iter().map(|&x| self.h.coset_id(x)).collect();
        reps.sort_unstable();
        reps.dedup();
        let js = par::map(settings.exec, 0..reps.len(), |i| {
            self.alpha.galois_action_of_s(reps[i], n, bound, Exec::Sequential)
        });
        let js: Vec<u32> = js.into_iter().collect::<Result<_>>()?;
        let field = SubfieldDescriptor::from_generators(n, &js)?;
        Ok(InvariantChain {
            k,
            n_sub,
            s,
            n,
            s_bar_image: field.units().to_vec(),
            field,
            word_bound_used: bound,
            mu_stable: stable,
        })
    }

    /// Invariants of the canonical form; constant on move orbits.
    pub fn compute_kns(&self, settings: &Settings) -> Result<InvariantChain> {
        self.normalize(settings)?.invariants_literal(settings)
    }

    pub fn minimal_field(&self, settings: &Settings) -> Result<SubfieldDescriptor> {
        Ok(self.compute_kns(settings)?.field)
    }

    /// Canonical representative of the move orbit.
    pub fn normalize(&self, settings: &Settings) -> Result<Presentation> {
        if !self.alpha.validate() {
            return precondition("cocycle identity fails");
        }
        let g = &self.group;
        let lam = self.multiset();
        let top = lam.max_multiplicity();
        let k = self.k_stabilizer();
        let s = self.b_alpha_normalizers(&k, settings.word_bound.max(2), settings.exec)?;
        let thetas: Vec<Elem> = lam
            .counts
            .iter()
            .filter(|&(_, &c)| c == top)
            .flat_map(|(&b, _)| self.h.elements().iter().map(move |&h| (h, b)))
            .map(|(h, b)| g.inv(g.mul(h, b)))
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let candidates = par::map(settings.exec, 0..thetas.len(), |i| self.normal_candidate(thetas[i], &k, &s));
        let best = candidates
            .into_iter()
            .min_by(|a, b| a.0.cmp(&b.0))
            .expect("some coset has maximal multiplicity");
        Ok(best.1)
    }

    fn normal_candidate(&self, theta: Elem, k: &[Elem], s: &[Elem]) -> (NormalKey, Presentation) {
        let g = &self.group;
        let ti = g.inv(theta);
        let alpha = canonical_cocycle(&self.alpha.conjugate(theta));
        let h = alpha.subgroup().clone();
        let conj = |set: &[Elem]| -> Vec<Elem> {
            let mut v: Vec<Elem> = set.iter().map(|&x| g.mul(g.mul(theta, x), ti)).collect();
            v.sort_unstable();
            v
        };
        let (k, s) = (conj(k), conj(s));
        let mut counts = vec![0usize; g.order()];
        for &x in &self.tuple {
            counts[h.coset_id(g.mul(theta, x))] += 1;
        }
        // H-coset transversal of K, S part first
        let mut t_s: Vec<Elem> = s.iter().map(|&x| h.coset_id(x)).collect();
        t_s.sort_unstable();
        t_s.dedup();
        let mut t_k: Vec<Elem> = k.iter().map(|&x| h.coset_id(x)).filter(|x| t_s.binary_search(x).is_err()).collect();
        t_k.sort_unstable();
        t_k.dedup();
        let transversal: Vec<Elem> = t_s.into_iter().chain(t_k).collect();
        // one H-coset per right K-coset met by Λ
        let mut lambda0: BTreeMap<Elem, usize> = BTreeMap::new();
        for c in 0..g.order() {
            if counts[c] > 0 {
                let rep = k.iter().map(|&x| g.mul(x, c)).min().expect("nonempty");
                lambda0.insert(rep, counts[rep]);
            }
        }
        let reps: Vec<Elem> = lambda0.keys().copied().collect();
        let double = |x: Elem| -> BTreeSet<Elem> {
            h.elements().iter().flat_map(|&a| h.elements().iter().map(move |&b| g.mul(g.mul(a, x), b))).collect()
        };
        let classes: Vec<BTreeSet<Elem>> = reps.iter().map(|&x| double(x)).collect();
        let mut order: Vec<(u8, Elem, Elem)> = reps
            .iter()
            .zip(&classes)
            .map(|(&x, cls)| {
                let related: Vec<Elem> = reps.iter().copied().filter(|y| cls.contains(y)).collect();
                let cat = if x == 0 {
                    0
                } else if h.normalizes(x) {
                    1
                } else if related.len() == 1 {
                    2
                } else {
                    3
                };
                (cat, related[0], x)
            })
            .collect();
        order.sort_unstable();
        let mut tuple = Vec::with_capacity(self.tuple.len());
        for &t in &transversal {
            for &(_, _, x) in &order {
                let c = h.coset_id(g.mul(t, x));
                tuple.extend(std::iter::repeat(c).take(lambda0[&x]));
            }
        }
        let key = NormalKey {
            h: h.elements().to_vec(),
            tuple: tuple.clone(),
            exps: alpha.table().concat(),
        };
        let p = Presentation { group: g.clone(), h, alpha, tuple };
        (key, p)
    }

    pub fn classify(&self, settings: &Settings) -> Result<Classification> {
        let report = self.validate();
        if !report.wellformed {
            return precondition(format!("presentation is malformed: {}", report.problems.join("; ")));
        }
        if !report.connected {
            return precondition("grading is not connected: the support does not generate G");
        }
        let chain = self.compute_kns(settings)?;
        let division_form = chain.s.len() == self.group.order();
        let strongly_vp = self.h.is_normal() && {
            let counts = self.counts_all();
            let reps = self.h.transversal();
            let c0 = counts[reps[0]];
            reps.iter().all(|&r| counts[r] == c0)
        } && {
            let reps = self.h.transversal();
            let checks = par::map(settings.exec, 0..reps.len(), |i| {
                self.alpha.is_cohomologous(&self.alpha.conjugate(reps[i]), None)
            });
            checks.into_iter().collect::<Result<Vec<bool>>>()?.into_iter().all(|b| b)
        };
        Ok(Classification { division_form, strongly_vp, essentially_vp: division_form })
    }

    /// `g` with `H₂ = gH₁g⁻¹`, `Λ₂ = g·Λ₁` and `α₂ ~ α₁^g`, if one exists.
    pub fn isomorphism(&self, other: &Presentation, exec: Exec) -> Result<Option<Elem>> {
        if !(Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group) {
            return invalid("presentations live in different groups");
        }
        if self.tuple.len() != other.tuple.len() {
            return Ok(None);
        }
        let g = &self.group;
        let target = other.multiset();
        let found = par::find_first(exec, 0..g.order(), |x| {
            if other.h.elements() != self.h.conjugate(x).elements() {
                return None;
            }
            let moved: Vec<Elem> = self.tuple.iter().map(|&t| g.mul(x, t)).collect();
            if other.h.multiset(&moved) != target {
                return None;
            }
            let conj = self.alpha.conjugate(x);
            match conj.is_cohomologous(&other.alpha, None) {
                Ok(true) => Some(Ok(x)),
                Ok(false) => None,
                Err(e) => Some(Err(e)),
            }
        });
        found.transpose()
    }

    pub fn iso_test(&self, other: &Presentation, exec: Exec) -> Result<bool> {
        Ok(self.isomorphism(other, exec)?.is_some())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct NormalKey {
    h: Vec<Elem>,
    tuple: Vec<Elem>,
    exps: Vec<u32>,
}

/// `(g₁⁻¹h₁g₂, …, gₙ⁻¹hₙg₁)`.
pub fn derivative(group: &Group, tuple: &[Elem], along: &[Elem]) -> Result<Vec<Elem>> {
    if tuple.len() != along.len() {
        return invalid("derivative needs one H-element per tuple entry");
    }
    let n = tuple.len();
    Ok((0..n)
        .map(|i| group.mul(group.mul(group.inv(tuple[i]), along[i]), tuple[(i + 1) % n]))
        .collect())
}

/// The cyclic sequence of sets `gᵢ⁻¹Hgᵢ₊₁`.
pub fn full_derivative(h: &Subgroup, tuple: &[Elem]) -> Vec<Vec<Elem>> {
    let g = h.group();
    let n = tuple.len();
    (0..n)
        .map(|i| {
            let a = g.inv(tuple[i]);
            let b = tuple[(i + 1) % n];
            let mut set: Vec<Elem> = h.elements().iter().map(|&x| g.mul(g.mul(a, x), b)).collect();
            set.sort_unstable();
            set
        })
        .collect()
}

/// Minimal `θ ∈ N_G(H)` with `θgᵢ ∈ Hĝᵢ` for every position, present exactly
/// when the full derivatives agree.
pub fn find_theta(h: &Subgroup, tuple: &[Elem], hat: &[Elem]) -> Result<Option<Elem>> {
    if tuple.is_empty() || tuple.len() != hat.len() || full_derivative(h, tuple) != full_derivative(h, hat) {
        return Ok(None);
    }
    let g = h.group();
    let theta = g.mul(hat[0], g.inv(tuple[0]));
    let fits = |t: Elem| tuple.iter().zip(hat).all(|(&a, &b)| h.coset_id(g.mul(t, a)) == h.coset_id(b));
    if !h.normalizes(theta) || !fits(theta) {
        return Err(Error::Internal("equal full derivatives without a translating θ".into()));
    }
    Ok(h.normalizer().iter().copied().find(|&t| fits(t)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn settings() -> Settings {
        Settings::default().sequential()
    }

    #[test]
    fn moves_on_d6() {
        let p = corpus::d6_presentation();
        let q = p.apply_move(&Move::III(2)).unwrap();
        assert_eq!(q.tuple(), &[2, 2, 0, 0, 5, 5, 1, 1]);
        let id: Vec<usize> = (0..8).collect();
        assert_eq!(p.apply_move(&Move::II(id)).unwrap(), p);
        assert!(p.apply_move(&Move::I { pos: 0, h: 1 }).is_err());
    }

    #[test]
    fn d6_invariants() {
        let p = corpus::d6_presentation();
        let w = p.k_three_ways().unwrap();
        assert_eq!(w.stabilizer, vec![0, 2]);
        let chain = p.compute_kns(&settings()).unwrap();
        assert_eq!(chain.k, vec![0, 2]);
        assert_eq!(chain.s, vec![0, 2]);
        assert_eq!(chain.n, 1);
        assert!(chain.field.is_rationals());
        let norm = p.normalize(&settings()).unwrap();
        assert_eq!(norm.tuple(), &[0, 0, 1, 1, 2, 2, 5, 5]);
        assert_eq!(norm.multiset(), p.multiset());
    }

    #[test]
    fn z2_normalization_moves_max_to_identity() {
        let g = Arc::new(Group::cyclic(2));
        let h = Arc::new(Subgroup::trivial(g));
        let p = Presentation::new(Cocycle::trivial(h, 1), vec![1, 1, 0]).unwrap();
        assert_eq!(p.normalize(&settings()).unwrap().tuple(), &[0, 0, 1]);
    }

    #[test]
    fn connectivity() {
        assert!(corpus::d6_presentation().validate().connected);
        assert!(corpus::trivial_presentation().validate().connected);
        let g = Arc::new(Group::cyclic(2));
        let h = Arc::new(Subgroup::trivial(g));
        let p = Presentation::new(Cocycle::trivial(h, 1), vec![0, 0]).unwrap();
        assert!(!p.validate().connected);
        assert!(p.classify(&settings()).is_err());
    }

    #[test]
    fn corpus_classifications() {
        let c = corpus::pauli_presentation().classify(&settings()).unwrap();
        assert!(c.division_form && c.strongly_vp && c.essentially_vp);
        let c = corpus::swap_presentation().classify(&settings()).unwrap();
        assert!(c.division_form && !c.strongly_vp && c.essentially_vp);
        let c = corpus::d6_presentation().classify(&settings()).unwrap();
        assert!(!c.division_form);
    }

    #[test]
    fn swap_chain() {
        let chain = corpus::swap_presentation().compute_kns(&settings()).unwrap();
        assert_eq!(chain.k.len(), 18);
        assert_eq!(chain.s.len(), 18);
        assert_eq!(chain.n, 3);
        assert_eq!(chain.s_bar_image, vec![1, 2]);
        assert!(chain.field.is_rationals());
        let pauli = corpus::pauli_presentation().minimal_field(&settings()).unwrap();
        assert_eq!(pauli.n(), 2);
    }

    #[test]
    fn derivatives_and_theta() {
        let g = Arc::new(Group::cyclic(2));
        let h = Subgroup::trivial(g.clone());
        assert_eq!(full_derivative(&h, &[0, 1]), vec![vec![1], vec![1]]);
        assert_eq!(derivative(&g, &[0, 0], &[0, 0]).unwrap(), vec![0, 0]);
        let p = corpus::d6_presentation();
        let t = p.tuple().to_vec();
        assert_eq!(find_theta(p.subgroup(), &t, &t).unwrap(), Some(0));
        let moved: Vec<Elem> = t.iter().map(|&x| p.group().mul(2, x)).collect();
        let theta = find_theta(p.subgroup(), &t, &moved).unwrap().unwrap();
        assert!([0, 2].contains(&theta));
        assert_eq!(find_theta(p.subgroup(), &t, &t[..7]).unwrap(), None);
    }

    #[test]
    fn iso_against_moves_and_classes() {
        let p = corpus::d6_presentation();
        let q = p.apply_move(&Move::III(4)).unwrap();
        assert!(p.iso_test(&q, Exec::Sequential).unwrap());
        let pauli = corpus::pauli_presentation();
        let triv = pauli.with_cocycle(Cocycle::trivial(pauli.subgroup().clone(), 2)).unwrap();
        assert!(!pauli.iso_test(&triv, Exec::Sequential).unwrap());
    }
}
