//! Graded polynomials over `Q(ζ)`, basis evaluation and identity testing.

pub mod mproduct;
pub mod witness;

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::cyclo::CycScalar;
use crate::error::{invalid, precondition, Error, Result};
use crate::galgebra::{AlgElement, GradedAlgebra};
use crate::group::{Elem, Group, Subgroup};
use crate::par::{self, Exec};
use crate::settings::Settings;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Var {
    pub id: String,
    pub degree: Elem,
}

/// `coeff · x_{seq[0]} ⋯ x_{seq[l−1]}` with variables by index.
#[derive(Clone, Debug, PartialEq)]
pub struct Monomial {
    pub coeff: CycScalar,
    pub seq: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GradedPolynomial {
    vars: Vec<Var>,
    monomials: Vec<Monomial>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MonomialSpec {
    pub coeff: CycScalar,
    pub seq: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolynomialSpec {
    pub vars: Vec<Var>,
    pub monomials: Vec<MonomialSpec>,
}

/// Assignment of a basis element to a variable, for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AssignedBasis {
    pub var: String,
    pub h: Elem,
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct IdentityReport {
    pub is_identity: bool,
    pub search_space: u128,
    pub falsifying: Option<Vec<AssignedBasis>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PathResult {
    pub position: usize,
    pub vanishes: bool,
    pub search_space: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PathReport {
    pub paths: Vec<PathResult>,
    pub is_identity: bool,
    pub consistent: bool,
}

impl GradedPolynomial {
    pub fn new(vars: Vec<Var>, monomials: Vec<Monomial>) -> Result<GradedPolynomial> {
        let mut seen = std::collections::HashSet::new();
        if let Some(v) = vars.iter().find(|v| !seen.insert(v.id.as_str())) {
            return invalid(format!("variable `{}` is declared twice", v.id));
        }
        if let Some(&i) = monomials.iter().flat_map(|m| &m.seq).find(|&&i| i >= vars.len()) {
            return invalid(format!("monomial uses undeclared variable #{i}"));
        }
        let mut p = GradedPolynomial { vars, monomials };
        p.simplify();
        Ok(p)
    }

    pub fn zero(vars: Vec<Var>) -> GradedPolynomial {
        GradedPolynomial { vars, monomials: Vec::new() }
    }

    pub fn from_spec(spec: &PolynomialSpec) -> Result<GradedPolynomial> {
        let index: HashMap<&str, usize> = spec.vars.iter().enumerate().map(|(i, v)| (v.id.as_str(), i)).collect();
        let mut monomials = Vec::with_capacity(spec.monomials.len());
        for m in &spec.monomials {
            let seq = m
                .seq
                .iter()
                .map(|id| index.get(id.as_str()).copied().ok_or_else(|| Error::Invalid(format!("unknown variable `{id}`"))))
                .collect::<Result<Vec<_>>>()?;
            monomials.push(Monomial { coeff: m.coeff.clone(), seq });
        }
        GradedPolynomial::new(spec.vars.clone(), monomials)
    }

    pub fn to_spec(&self) -> PolynomialSpec {
        PolynomialSpec {
            vars: self.vars.clone(),
            monomials: self
                .monomials
                .iter()
                .map(|m| MonomialSpec {
                    coeff: m.coeff.clone(),
                    seq: m.seq.iter().map(|&i| self.vars[i].id.clone()).collect(),
                })
                .collect(),
        }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn var_index(&self, id: &str) -> Option<usize> {
        self.vars.iter().position(|v| v.id == id)
    }

    /// Merges equal words and drops zero coefficients, keeping first-appearance order.
    fn simplify(&mut self) {
        let mut order: Vec<Vec<usize>> = Vec::new();
        let mut sums: HashMap<Vec<usize>, CycScalar> = HashMap::new();
        for m in self.monomials.drain(..) {
            match sums.get_mut(&m.seq) {
                Some(c) => *c = c.add(&m.coeff),
                None => {
                    order.push(m.seq.clone());
                    sums.insert(m.seq, m.coeff);
                }
            }
        }
        self.monomials = order
            .into_iter()
            .filter_map(|seq| {
                let c = sums.remove(&seq).expect("present");
                (!c.is_zero()).then_some(Monomial { coeff: c, seq })
            })
            .collect();
    }

    pub fn add(&self, other: &GradedPolynomial) -> Result<GradedPolynomial> {
        if self.vars != other.vars {
            return invalid("polynomials have different variable lists");
        }
        let mut monomials = self.monomials.clone();
        monomials.extend(other.monomials.iter().cloned());
        GradedPolynomial::new(self.vars.clone(), monomials)
    }

    pub fn scale(&self, c: &CycScalar) -> GradedPolynomial {
        let monomials = self.monomials.iter().map(|m| Monomial { coeff: m.coeff.mul(c), seq: m.seq.clone() }).collect();
        let mut p = GradedPolynomial { vars: self.vars.clone(), monomials };
        p.simplify();
        p
    }

    fn counts(&self, m: &Monomial) -> Vec<usize> {
        let mut c = vec![0; self.vars.len()];
        for &i in &m.seq {
            c[i] += 1;
        }
        c
    }

    /// Every variable at most once per monomial, all monomials over one variable set.
    pub fn is_multilinear(&self) -> bool {
        let Some(first) = self.monomials.first() else {
            return true;
        };
        let c0 = self.counts(first);
        c0.iter().all(|&c| c <= 1) && self.monomials.iter().all(|m| self.counts(m) == c0)
    }

    /// All monomials use each variable equally often.
    pub fn is_multihomogeneous(&self) -> bool {
        let Some(first) = self.monomials.first() else {
            return true;
        };
        let c0 = self.counts(first);
        self.monomials.iter().all(|m| self.counts(m) == c0)
    }

    pub fn monomial_degree(&self, group: &Group, m: &Monomial) -> Elem {
        m.seq.iter().fold(0, |acc, &i| group.mul(acc, self.vars[i].degree))
    }

    pub fn is_g_homogeneous(&self, group: &Group) -> bool {
        let mut it = self.monomials.iter().map(|m| self.monomial_degree(group, m));
        match it.next() {
            Some(d) => it.all(|e| e == d),
            None => true,
        }
    }

    /// Variables actually used, in order of first use in the first monomial.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.vars.len()];
        let mut out = Vec::new();
        for m in &self.monomials {
            for &i in &m.seq {
                if !std::mem::replace(&mut seen[i], true) {
                    out.push(i);
                }
            }
        }
        out
    }

    /// Full multilinearization: each variable of multiplicity `k > 1` becomes
    /// `t₁, …, t_k` (ids `x_1, …, x_k`), summed over all placements.
    pub fn linearize(&self) -> Result<GradedPolynomial> {
        if !self.is_multihomogeneous() {
            return precondition("linearization needs a multihomogeneous polynomial");
        }
        let Some(first) = self.monomials.first() else {
            return Ok(self.clone());
        };
        let mult = self.counts(first);
        if mult.iter().all(|&c| c <= 1) {
            return Ok(self.clone());
        }
        let mut vars = Vec::new();
        let mut copies: Vec<Vec<usize>> = Vec::with_capacity(self.vars.len());
        for (v, &k) in self.vars.iter().zip(&mult) {
            if k <= 1 {
                copies.push(vec![vars.len()]);
                vars.push(v.clone());
            } else {
                copies.push((0..k).map(|j| {
                    vars.push(Var { id: format!("{}_{}", v.id, j + 1), degree: v.degree });
                    vars.len() - 1
                }).collect());
            }
        }
        let mut monomials = Vec::new();
        for m in &self.monomials {
            // occurrences of each repeated variable receive the copies in every order
            let mut partial: Vec<Vec<usize>> = vec![Vec::new()];
            let mut used: Vec<Vec<Vec<bool>>> = vec![copies.iter().map(|c| vec![false; c.len()]).collect()];
            for &x in &m.seq {
                let mut next = Vec::new();
                let mut next_used = Vec::new();
                for (seq, u) in partial.iter().zip(&used) {
                    for (t, &var) in copies[x].iter().enumerate() {
                        if !u[x][t] {
                            let mut s = seq.clone();
                            s.push(var);
                            let mut nu = u.clone();
                            nu[x][t] = true;
                            next.push(s);
                            next_used.push(nu);
                        }
                    }
                }
                partial = next;
                used = next_used;
            }
            monomials.extend(partial.into_iter().map(|seq| Monomial { coeff: m.coeff.clone(), seq }));
        }
        GradedPolynomial::new(vars, monomials)
    }

    /// Substitutes variables of `self` by variables of `target` (by index map), merging terms.
    pub fn rename(&self, target_vars: Vec<Var>, map: &[usize]) -> Result<GradedPolynomial> {
        let monomials = self
            .monomials
            .iter()
            .map(|m| Monomial { coeff: m.coeff.clone(), seq: m.seq.iter().map(|&i| map[i]).collect() })
            .collect();
        GradedPolynomial::new(target_vars, monomials)
    }
}

/// Sum of `coeff × product of assigned basis elements`.
pub fn evaluate(p: &GradedPolynomial, a: &GradedAlgebra, assignment: &[usize]) -> Result<AlgElement> {
    if assignment.len() != p.vars.len() {
        return invalid(format!("assignment has {} values for {} variables", assignment.len(), p.vars.len()));
    }
    for (v, &b) in p.vars.iter().zip(assignment) {
        if b >= a.dim() {
            return invalid(format!("basis index {b} for `{}` is outside the algebra", v.id));
        }
        if a.degree(b) != v.degree {
            return invalid(format!("`{}` has degree {} but its value has degree {}", v.id, v.degree, a.degree(b)));
        }
    }
    let m = a.modulus();
    let mut out = AlgElement::zero();
    for mono in &p.monomials {
        let word: Vec<usize> = mono.seq.iter().map(|&i| assignment[i]).collect();
        if word.is_empty() {
            out = out.add(&a.identity().scale(&mono.coeff));
            continue;
        }
        if let Some((e, b)) = a.mul_word(&word) {
            out.add_term(b, mono.coeff.mul_root(m, e as i64));
        }
    }
    Ok(out)
}

/// Per-monomial coefficients `D·c·ζ_m^e` as integer power-basis vectors at a common modulus.
struct FastCoeffs {
    table: Vec<Vec<Vec<i128>>>,
}

impl FastCoeffs {
    fn new(p: &GradedPolynomial, m: u32) -> Option<FastCoeffs> {
        let big = p.monomials.iter().fold(m, |acc, x| acc.lcm(&x.coeff.modulus()));
        let mut denom = BigInt::one();
        for mono in &p.monomials {
            for c in mono.coeff.promote(big).coeffs() {
                denom = denom.lcm(c.denom());
            }
        }
        let d = BigRational::from_integer(denom);
        let mut table = Vec::with_capacity(p.monomials.len());
        for mono in &p.monomials {
            let base = mono.coeff.promote(big);
            let mut per_e = Vec::with_capacity(m as usize);
            for e in 0..m {
                let v = base.mul_root(m, e as i64).promote(big);
                let mut row = Vec::with_capacity(v.coeffs().len());
                for c in v.coeffs() {
                    let x = (c * &d).to_integer();
                    // headroom for summing every monomial
                    let x = x.to_i128().filter(|x| x.abs() < (1i128 << 100))?;
                    row.push(x);
                }
                per_e.push(row);
            }
            table.push(per_e);
        }
        Some(FastCoeffs { table })
    }
}

/// Evaluation kernel shared by identity testing and the path machinery.
pub(crate) struct Evaluator<'a> {
    p: &'a GradedPolynomial,
    a: &'a GradedAlgebra,
    fast: Option<FastCoeffs>,
}

impl<'a> Evaluator<'a> {
    pub(crate) fn new(p: &'a GradedPolynomial, a: &'a GradedAlgebra) -> Self {
        let fast = FastCoeffs::new(p, a.modulus());
        Evaluator { p, a, fast }
    }

    /// Whether `p` is nonzero at `assignment`.
    pub(crate) fn nonzero(&self, assignment: &[usize]) -> bool {
        let mut word = Vec::new();
        match &self.fast {
            Some(fast) => {
                let mut acc: BTreeMap<usize, Vec<i128>> = BTreeMap::new();
                for (mi, mono) in self.p.monomials.iter().enumerate() {
                    word.clear();
                    word.extend(mono.seq.iter().map(|&i| assignment[i]));
                    let (e, b) = if word.is_empty() {
                        (0, usize::MAX)
                    } else {
                        match self.a.mul_word(&word) {
                            Some(x) => x,
                            None => continue,
                        }
                    };
                    let row = &fast.table[mi][e as usize];
                    let slot = acc.entry(b).or_insert_with(|| vec![0; row.len()]);
                    for (x, y) in slot.iter_mut().zip(row) {
                        *x += y;
                    }
                }
                acc.values().any(|v| v.iter().any(|&x| x != 0))
            }
            None => !evaluate(self.p, self.a, assignment).expect("degrees checked").is_zero(),
        }
    }

    /// First (in mixed-radix order) assignment from `candidates` where `p` is nonzero.
    pub(crate) fn find_nonzero(&self, candidates: &[Vec<usize>], exec: Exec) -> Option<Vec<usize>> {
        let total = space(candidates);
        if total == 0 {
            return None;
        }
        let total = total as usize;
        let decode = |mut idx: usize| {
            let mut out = vec![0; candidates.len()];
            for (slot, c) in out.iter_mut().zip(candidates).rev() {
                *slot = c[idx % c.len()];
                idx /= c.len();
            }
            out
        };
        const CHUNK: usize = 4096;
        let chunks = total.div_ceil(CHUNK);
        par::find_first(exec, 0..chunks, |c| {
            (c * CHUNK..((c + 1) * CHUNK).min(total)).map(decode).find(|asg| self.nonzero(asg))
        })
    }
}

fn space(candidates: &[Vec<usize>]) -> u128 {
    candidates.iter().map(|c| c.len() as u128).product()
}

fn check_budget(needed: u128, budget: u64) -> Result<()> {
    if needed > budget as u128 {
        return Err(Error::Budget { needed, budget });
    }
    Ok(())
}

fn candidates_by_degree(p: &GradedPolynomial, a: &GradedAlgebra) -> Vec<Vec<usize>> {
    let used = p.support();
    let mut c: Vec<Vec<usize>> = p.vars.iter().map(|_| vec![0]).collect();
    for i in used {
        c[i] = a.of_degree_checked(p.vars[i].degree).to_vec();
    }
    c
}

fn assigned(p: &GradedPolynomial, a: &GradedAlgebra, asg: &[usize]) -> Vec<AssignedBasis> {
    let h = a.presentation().subgroup();
    p.support()
        .into_iter()
        .map(|i| {
            let t = a.triple(asg[i]);
            AssignedBasis { var: p.vars[i].id.clone(), h: h.element(t.h), i: t.i, j: t.j }
        })
        .collect()
}

/// Whether every degree-respecting basis assignment annihilates `p`.
pub fn is_identity(p: &GradedPolynomial, a: &GradedAlgebra, settings: &Settings) -> Result<IdentityReport> {
    if !p.is_multilinear() {
        return precondition("identity testing needs a multilinear polynomial; linearize first");
    }
    if let Some(v) = p.vars.iter().find(|v| v.degree >= a.presentation().group().order()) {
        return invalid(format!("`{}` has degree {} outside the group", v.id, v.degree));
    }
    let candidates = candidates_by_degree(p, a);
    let search_space = space(&candidates);
    check_budget(search_space, settings.budget)?;
    let ev = Evaluator::new(p, a);
    let hit = if p.is_zero() { None } else { ev.find_nonzero(&candidates, settings.exec) };
    Ok(IdentityReport {
        is_identity: hit.is_none(),
        search_space,
        falsifying: hit.map(|asg| assigned(p, a, &asg)),
    })
}

/// `x_{w₁}⋯x_{w_r} − ζ_m^{e}·x_{w_{τ(1)}}⋯x_{w_{τ(r)}}` over `r` distinct variables.
pub fn binomial(word: &[Elem], tau: &[usize], m: u32, zeta_exp: u32) -> Result<GradedPolynomial> {
    let r = word.len();
    let mut seen = vec![false; r];
    if tau.len() != r || tau.iter().any(|&i| i >= r || std::mem::replace(&mut seen[i], true)) {
        return invalid(format!("{tau:?} is not a permutation of {r} points"));
    }
    let vars = word.iter().enumerate().map(|(i, &d)| Var { id: format!("x{}", i + 1), degree: d }).collect();
    let monomials = vec![
        Monomial { coeff: CycScalar::one(m), seq: (0..r).collect() },
        Monomial { coeff: CycScalar::root(m, zeta_exp as i64).neg(), seq: tau.to_vec() },
    ];
    GradedPolynomial::new(vars, monomials)
}

/// `Z_σ = t_{σ(1)}⋯t_{σ(n)}` is good for `Z = t₁⋯t_n` (degrees `base`).
pub fn is_good_permutation(h: &Subgroup, base: &[Elem], sigma: &[usize]) -> Result<bool> {
    let n = base.len();
    let mut seen = vec![false; n];
    if sigma.len() != n || sigma.iter().any(|&i| i >= n || std::mem::replace(&mut seen[i], true)) {
        return invalid(format!("{sigma:?} is not a permutation of {n} points"));
    }
    let permuted: Vec<Elem> = sigma.iter().map(|&i| base[i]).collect();
    let mut inv = vec![0; n];
    for (pos, &i) in sigma.iter().enumerate() {
        inv[i] = pos;
    }
    Ok(prefix_signature(h, base) == permuted_signature(h, &permuted, &inv))
}

fn prefix_cosets(h: &Subgroup, word: &[Elem]) -> Vec<Elem> {
    let g = h.group();
    let mut acc = 0;
    word.iter()
        .map(|&x| {
            acc = g.mul(acc, x);
            h.coset_id(acc)
        })
        .collect()
}

/// `(total degree, coset of the prefix ending at t_i for each i)`.
fn prefix_signature(h: &Subgroup, base: &[Elem]) -> (Elem, Vec<Elem>) {
    let total = h.group().product(base);
    (total, prefix_cosets(h, base))
}

fn permuted_signature(h: &Subgroup, permuted: &[Elem], inv: &[usize]) -> (Elem, Vec<Elem>) {
    let total = h.group().product(permuted);
    let pc = prefix_cosets(h, permuted);
    (total, inv.iter().map(|&pos| pc[pos]).collect())
}

/// Signature of a monomial of a multilinear polynomial, indexed by the variable list.
fn monomial_signature(p: &GradedPolynomial, h: &Subgroup, m: &Monomial) -> (Elem, Vec<Option<Elem>>) {
    let degrees: Vec<Elem> = m.seq.iter().map(|&i| p.vars[i].degree).collect();
    let pc = prefix_cosets(h, &degrees);
    let mut sig = vec![None; p.vars.len()];
    for (pos, &i) in m.seq.iter().enumerate() {
        sig[i] = Some(pc[pos]);
    }
    (h.group().product(&degrees), sig)
}

/// Partition into classes of mutually good permutations, in order of first appearance.
pub fn pure_split(p: &GradedPolynomial, h: &Subgroup) -> Result<Vec<GradedPolynomial>> {
    if !p.is_multilinear() {
        return precondition("pure splitting needs a multilinear polynomial over one variable set");
    }
    let mut keys: Vec<(Elem, Vec<Option<Elem>>)> = Vec::new();
    let mut parts: Vec<Vec<Monomial>> = Vec::new();
    for m in &p.monomials {
        let key = monomial_signature(p, h, m);
        match keys.iter().position(|k| *k == key) {
            Some(i) => parts[i].push(m.clone()),
            None => {
                keys.push(key);
                parts.push(vec![m.clone()]);
            }
        }
    }
    Ok(parts.into_iter().map(|monomials| GradedPolynomial { vars: p.vars.clone(), monomials }).collect())
}

pub fn is_pure(p: &GradedPolynomial, h: &Subgroup) -> bool {
    let mut sigs = p.monomials.iter().map(|m| monomial_signature(p, h, m));
    match sigs.next() {
        Some(s) => sigs.all(|t| t == s),
        None => true,
    }
}

/// Evaluates along each path `i` (the first variable of the leading monomial
/// takes values in row `i`) and compares with the exhaustive verdict.
pub fn path_check(p: &GradedPolynomial, a: &GradedAlgebra, settings: &Settings) -> Result<PathReport> {
    let pres = a.presentation();
    let h = pres.subgroup();
    if pres.multiset().max_multiplicity() > 1 {
        return precondition("path checking needs every H-coset at most once in the tuple");
    }
    if !p.is_multilinear() || !is_pure(p, h) {
        return precondition("path checking needs a pure multilinear polynomial");
    }
    let full = is_identity(p, a, settings)?;
    let Some(first) = p.monomials.first().and_then(|m| m.seq.first().copied()) else {
        let paths = (0..a.n()).map(|position| PathResult { position, vanishes: true, search_space: 0 }).collect();
        return Ok(PathReport { paths, is_identity: true, consistent: true });
    };
    let base = candidates_by_degree(p, a);
    let ev = Evaluator::new(p, a);
    let mut paths = Vec::with_capacity(a.n());
    for position in 0..a.n() {
        let mut c = base.clone();
        c[first].retain(|&b| a.triple(b).i == position);
        let search_space = space(&c);
        let vanishes = ev.find_nonzero(&c, settings.exec).is_none();
        paths.push(PathResult { position, vanishes, search_space });
    }
    let consistent = paths.iter().all(|r| r.vanishes == full.is_identity);
    Ok(PathReport { paths, is_identity: full.is_identity, consistent })
}

impl GradedAlgebra {
    /// `of_degree` tolerant of out-of-range degrees.
    pub fn of_degree_checked(&self, g: Elem) -> &[usize] {
        if g < self.presentation().group().order() {
            self.of_degree(g)
        } else {
            &[]
        }
    }
}
