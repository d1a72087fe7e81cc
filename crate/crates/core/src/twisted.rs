//! Root-of-unity 2-cocycles on a subgroup `H`, twisted products, binomial
//! identities and the cohomology computations built on them.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::cyclo::reduce_unit;
use crate::error::{invalid, precondition, Error, Result};
use crate::group::{Elem, Subgroup};
use crate::par::{self, Exec};
use crate::zmod;

/// `α(h₁,h₂) = ζ_m^{exps[h₁][h₂]}`, indexed by position in `H`'s sorted element list.
#[derive(Clone, Debug)]
pub struct Cocycle {
    h: Arc<Subgroup>,
    modulus: u32,
    exps: Vec<u32>,
}

impl PartialEq for Cocycle {
    fn eq(&self, other: &Self) -> bool {
        self.modulus == other.modulus && self.exps == other.exps && *self.h == *other.h
    }
}

impl Eq for Cocycle {}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct CocycleSpec {
    pub modulus: u32,
    pub exps: Vec<Vec<i64>>,
}

/// Binomial `x_{h₁}⋯x_{h_r} − ζ·x_{h_{τ(1)}}⋯x_{h_{τ(r)}}` data.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BinomialDatum {
    pub word: Vec<Elem>,
    pub perm: Vec<usize>,
    pub ratio: u32,
}

/// Order of the root subgroup generated by bounded binomial ratios.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MuImage {
    pub n: u32,
    pub word_bound: usize,
    pub stable: bool,
}

/// `f: H → Z/M` with `exps′ − exps ≡ δf`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coboundary {
    pub modulus: u32,
    pub f: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transform {
    Conjugate(Elem),
    Galois(u32),
}

fn permutations(r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..r).collect();
    permute(&mut cur, 0, &mut out);
    out.sort();
    out
}

fn permute(cur: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == cur.len() {
        out.push(cur.clone());
        return;
    }
    for i in k..cur.len() {
        cur.swap(k, i);
        permute(cur, k + 1, out);
        cur.swap(k, i);
    }
}

fn decode(mut index: usize, r: usize, k: usize) -> Vec<usize> {
    let mut w = vec![0; r];
    for slot in w.iter_mut().rev() {
        *slot = index % k;
        index /= k;
    }
    w
}

impl Cocycle {
    pub fn new(h: Arc<Subgroup>, modulus: u32, exps: Vec<Vec<i64>>) -> Result<Cocycle> {
        let k = h.order();
        if modulus == 0 {
            return invalid("cocycle modulus must be positive");
        }
        if exps.len() != k || exps.iter().any(|row| row.len() != k) {
            return invalid(format!("cocycle table must be {k}×{k}"));
        }
        let exps = exps.iter().flatten().map(|&e| e.rem_euclid(modulus as i64) as u32).collect();
        Ok(Cocycle { h, modulus, exps })
    }

    pub fn from_spec(h: Arc<Subgroup>, spec: &CocycleSpec) -> Result<Cocycle> {
        Cocycle::new(h, spec.modulus, spec.exps.clone())
    }

    pub fn to_spec(&self) -> CocycleSpec {
        CocycleSpec { modulus: self.modulus, exps: self.table().into_iter().map(|r| r.into_iter().map(i64::from).collect()).collect() }
    }

    pub fn trivial(h: Arc<Subgroup>, modulus: u32) -> Cocycle {
        let k = h.order();
        Cocycle { h, modulus, exps: vec![0; k * k] }
    }

    /// Table from a formula on parent-group elements.
    pub fn from_fn(h: Arc<Subgroup>, modulus: u32, f: impl Fn(Elem, Elem) -> i64) -> Cocycle {
        let els = h.elements().to_vec();
        let exps = els.iter().map(|&a| els.iter().map(|&b| f(a, b)).collect()).collect();
        Cocycle::new(h, modulus, exps).expect("dimensions match")
    }

    fn from_flat(h: Arc<Subgroup>, modulus: u32, flat: Vec<u32>) -> Cocycle {
        Cocycle { h, modulus, exps: flat }
    }

    pub fn subgroup(&self) -> &Arc<Subgroup> {
        &self.h
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Exponent on local indices.
    #[inline]
    pub fn exp_local(&self, a: usize, b: usize) -> u32 {
        self.exps[a * self.h.order() + b]
    }

    /// Exponent on parent-group elements of `H`.
    pub fn exp(&self, a: Elem, b: Elem) -> u32 {
        let la = self.h.local_index(a).expect("element of H");
        let lb = self.h.local_index(b).expect("element of H");
        self.exp_local(la, lb)
    }

    pub fn table(&self) -> Vec<Vec<u32>> {
        self.exps.chunks(self.h.order()).map(<[u32]>::to_vec).collect()
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn validate(&self) -> bool {
        let k = self.h.order();
        let m = self.modulus;
        if (0..k).any(|x| self.exp_local(0, x) != 0 || self.exp_local(x, 0) != 0) {
            return false;
        }
        for a in 0..k {
            for b in 0..k {
                let ab = self.h.local_mul(a, b);
                for c in 0..k {
                    let bc = self.h.local_mul(b, c);
                    let lhs = (self.exp_local(a, b) + self.exp_local(ab, c)) % m;
                    let rhs = (self.exp_local(b, c) + self.exp_local(a, bc)) % m;
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn local_word(&self, word: &[Elem]) -> Result<Vec<usize>> {
        word.iter()
            .map(|&x| {
                self.h
                    .local_index(x)
                    .ok_or_else(|| Error::Invalid(format!("word letter {x} is not in H")))
            })
            .collect()
    }

    /// Left fold of `u_{h₁}⋯u_{h_r}` over local indices.
    fn fold_local(&self, word: &[usize]) -> (u32, usize) {
        let m = self.modulus;
        let mut acc = (0u32, 0usize);
        for &x in word {
            acc = ((acc.0 + self.exp_local(acc.1, x)) % m, self.h.local_mul(acc.1, x));
        }
        acc
    }

    /// `u_{h₁}⋯u_{h_r} = ζ_m^e u_{h₁⋯h_r}`; returns `(e, h₁⋯h_r)`.
    pub fn word_value(&self, word: &[Elem]) -> Result<(u32, Elem)> {
        let (e, p) = self.fold_local(&self.local_word(word)?);
        Ok((e, self.h.element(p)))
    }

    fn ratio_local(&self, word: &[usize], tau: &[usize]) -> Option<u32> {
        let (e1, p1) = self.fold_local(word);
        let permuted: Vec<usize> = tau.iter().map(|&i| word[i]).collect();
        let (e2, p2) = self.fold_local(&permuted);
        (p1 == p2).then(|| (e1 + self.modulus - e2) % self.modulus)
    }

    /// `exp(word) − exp(τ·word)`, where `(τ·word)_i = word_{τ(i)}`.
    pub fn binomial_ratio(&self, word: &[Elem], tau: &[usize]) -> Result<u32> {
        check_perm(tau, word.len())?;
        let w = self.local_word(word)?;
        self.ratio_local(&w, tau)
            .ok_or_else(|| Error::Precondition("word and permuted word have different products".into()))
    }

    /// Whether `x_{h₁}⋯x_{h_r} − ζ_m^{zeta_exp}·x_{τ…}` is an identity of `F^αH`.
    pub fn is_binomial_identity(&self, word: &[Elem], tau: &[usize], zeta_exp: u32) -> Result<bool> {
        Ok(self.binomial_ratio(word, tau)? == zeta_exp % self.modulus)
    }

    /// Visits every (word, τ) of length `r` with equal products, in a
    /// deterministic order, folding results with `reduce`.
    fn fold_binomials<T, F, R>(&self, r: usize, exec: Exec, identity: T, f: F, reduce: R) -> T
    where
        T: Send + Sync + Clone,
        F: Fn(&[usize], &[usize], u32) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        let k = self.h.order();
        let perms = permutations(r);
        let total = k.pow(r as u32);
        par::map_reduce(
            exec,
            0..total,
            identity.clone(),
            |idx| {
                let w = decode(idx, r, k);
                let mut acc = identity.clone();
                for tau in &perms[1..] {
                    if let Some(ratio) = self.ratio_local(&w, tau) {
                        acc = reduce(acc, f(&w, tau, ratio));
                    }
                }
                acc
            },
            &reduce,
        )
    }

    /// Order of the subgroup of `μ_m` generated by ratios of words of length ≤ `bound`.
    pub fn image_mu_n(&self, bound: usize, exec: Exec) -> MuImage {
        let m = self.modulus as u64;
        let mut g = m;
        let mut prev = g;
        for r in 2..=bound.max(2) {
            prev = g;
            let gr = self.fold_binomials(r, exec, m, |_, _, ratio| ratio as u64, |a, b| a.gcd(&b));
            g = g.gcd(&gr);
            if g == 1 {
                return MuImage { n: self.modulus, word_bound: bound, stable: true };
            }
        }
        MuImage { n: (m / g) as u32, word_bound: bound, stable: prev == g }
    }

    /// `α^g(h₁,h₂) = α(g⁻¹h₁g, g⁻¹h₂g)` on `gHg⁻¹`, for any `g ∈ G`.
    pub fn conjugate(&self, g: Elem) -> Cocycle {
        let group = self.h.group().clone();
        let target = Arc::new(self.h.conjugate(g));
        let gi = group.inv(g);
        let back: Vec<usize> = target
            .elements()
            .iter()
            .map(|&x| self.h.local_index(group.conj(gi, x)).expect("conjugate lies in H"))
            .collect();
        let k = back.len();
        let mut exps = Vec::with_capacity(k * k);
        for &a in &back {
            for &b in &back {
                exps.push(self.exp_local(a, b));
            }
        }
        Cocycle::from_flat(target, self.modulus, exps)
    }

    pub fn galois(&self, j: u32) -> Result<Cocycle> {
        let m = self.modulus;
        if m > 1 && (j as u64).gcd(&(m as u64)) != 1 {
            return invalid(format!("{j} is not a unit modulo {m}"));
        }
        let exps = self.exps.iter().map(|&e| ((e as u64 * j as u64) % m as u64) as u32).collect();
        Ok(Cocycle::from_flat(self.h.clone(), m, exps))
    }

    pub fn transform(&self, t: Transform) -> Result<Cocycle> {
        match t {
            Transform::Conjugate(g) => {
                if !self.h.normalizes(g) {
                    return precondition(format!("{} is not in N_G(H)", self.h.group().name(g)));
                }
                Ok(self.conjugate(g))
            }
            Transform::Galois(j) => self.galois(j),
        }
    }

    /// Same class, written with roots of order `big` (a multiple of the modulus).
    pub fn embed(&self, big: u32) -> Cocycle {
        assert!(big % self.modulus == 0);
        let s = big / self.modulus;
        Cocycle::from_flat(self.h.clone(), big, self.exps.iter().map(|&e| e * s).collect())
    }

    /// `α·δf` with `f` on local indices (values mod the cocycle modulus).
    pub fn shift(&self, f: &[u32]) -> Cocycle {
        let k = self.h.order();
        let m = self.modulus as u64;
        let mut exps = self.exps.clone();
        for a in 0..k {
            for b in 0..k {
                let ab = self.h.local_mul(a, b);
                let d = (f[a] as u64 + f[b] as u64 + m - f[ab] as u64 % m) % m;
                exps[a * k + b] = ((exps[a * k + b] as u64 + d) % m) as u32;
            }
        }
        Cocycle::from_flat(self.h.clone(), self.modulus, exps)
    }

    /// Witness `f` (over `Z/M`, `M = lcm(m, m′)·extension`) with `exps′ − exps ≡ δf`,
    /// or `None` when the classes differ. `extension` defaults to `exp(H)`.
    pub fn cohomologous(&self, other: &Cocycle, extension: Option<u32>) -> Result<Option<Coboundary>> {
        if *self.h != *other.h {
            return invalid("cocycles live on different subgroups");
        }
        let ext = extension.unwrap_or(self.h.exponent() as u32).max(1);
        let big = (self.modulus.lcm(&other.modulus) * ext) as u64;
        let s1 = big / self.modulus as u64;
        let s2 = big / other.modulus as u64;
        let k = self.h.order();
        let mut rows = Vec::with_capacity(k * k);
        let mut rhs = Vec::with_capacity(k * k);
        for a in 0..k {
            for b in 0..k {
                let mut row = vec![0u64; k - 1];
                let ab = self.h.local_mul(a, b);
                if a > 0 {
                    row[a - 1] += 1;
                }
                if b > 0 {
                    row[b - 1] += 1;
                }
                if ab > 0 {
                    row[ab - 1] = (row[ab - 1] + big - 1) % big;
                }
                rows.push(row);
                let d = (other.exp_local(a, b) as u64 * s2 + big - self.exp_local(a, b) as u64 * s1 % big) % big;
                rhs.push(d);
            }
        }
        if k == 1 {
            return Ok(rhs.iter().all(|&d| d == 0).then(|| Coboundary { modulus: big as u32, f: vec![0] }));
        }
        Ok(zmod::solve(&rows, k - 1, &rhs, big).map(|sol| {
            let mut f = vec![0u32];
            f.extend(sol.into_iter().map(|x| x as u32));
            Coboundary { modulus: big as u32, f }
        }))
    }

    pub fn is_cohomologous(&self, other: &Cocycle, extension: Option<u32>) -> Result<bool> {
        Ok(self.cohomologous(other, extension)?.is_some())
    }

    fn conj_local(&self, g: Elem) -> Vec<usize> {
        let group = self.h.group();
        let gi = group.inv(g);
        self.h
            .elements()
            .iter()
            .map(|&x| self.h.local_index(group.conj(gi, x)).expect("g normalizes H"))
            .collect()
    }

    /// Whether conjugation `h ↦ g⁻¹hg` preserves the kernel of binomial ratios.
    pub fn normalizes_b_alpha(&self, g: Elem, bound: usize, exec: Exec) -> Result<bool> {
        if !self.h.normalizes(g) {
            return precondition(format!("{} is not in N_G(H)", self.h.group().name(g)));
        }
        let c = self.conj_local(g);
        for r in 2..=bound.max(2) {
            let ok = self.fold_binomials(
                r,
                exec,
                true,
                |w, tau, ratio| {
                    let cw: Vec<usize> = w.iter().map(|&x| c[x]).collect();
                    let cr = self.ratio_local(&cw, tau).expect("conjugation preserves products");
                    (ratio == 0) == (cr == 0)
                },
                |a, b| a && b,
            );
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The unit `j` mod `n` with `s(ζ) = ζ^j` on bounded binomial witnesses.
    pub fn galois_action_of_s(&self, s: Elem, n: u32, bound: usize, exec: Exec) -> Result<u32> {
        if !self.h.normalizes(s) {
            return precondition(format!("{} is not in N_G(H)", self.h.group().name(s)));
        }
        if n <= 1 {
            return Ok(1);
        }
        let m = self.modulus;
        if m % n != 0 {
            return invalid(format!("{n} does not divide the cocycle modulus {m}"));
        }
        let step = m / n;
        let c = self.conj_local(s);
        // every witness as (a, a′) in Z/n, in deterministic order
        let mut pairs: Vec<(u32, u32)> = Vec::new();
        for r in 2..=bound.max(2) {
            let found = self.fold_binomials(
                r,
                exec,
                Vec::new(),
                |w, tau, ratio| {
                    let cw: Vec<usize> = w.iter().map(|&x| c[x]).collect();
                    let cr = self.ratio_local(&cw, tau).expect("conjugation preserves products");
                    vec![(ratio, cr)]
                },
                |mut a, b| {
                    a.extend(b);
                    a
                },
            );
            pairs.extend(found);
        }
        if pairs.iter().any(|&(a, b)| a % step != 0 || b % step != 0) {
            return Err(Error::Precondition(format!(
                "a bounded ratio lies outside μ_{n}; the word bound {bound} is too small"
            )));
        }
        let pairs: Vec<(u32, u32)> = pairs.iter().map(|&(a, b)| (a / step, b / step)).collect();
        let Some(&(a, b)) = pairs.iter().find(|(a, _)| (*a as u64).gcd(&(n as u64)) == 1) else {
            return Err(Error::Precondition(format!("no primitive witness of order {n} within length {bound}")));
        };
        let ai = (1..n).find(|&x| (a as u64 * x as u64) % n as u64 == 1).expect("unit");
        let j = reduce_unit(b as u64 * ai as u64, n);
        if let Some((a2, b2)) = pairs.iter().find(|&&(a2, b2)| (a2 as u64 * j as u64) % n as u64 != b2 as u64) {
            return Err(Error::Precondition(format!(
                "inconsistent action: witness ratio {a2} maps to {b2}, expected {}",
                (*a2 as u64 * j as u64) % n as u64
            )));
        }
        Ok(j)
    }

    /// First bounded witness whose ratio has exact order `n`.
    pub fn primitive_witness(&self, n: u32, bound: usize) -> Option<BinomialDatum> {
        let m = self.modulus;
        if n == 0 || m % n != 0 {
            return None;
        }
        let step = m / n;
        let k = self.h.order();
        for r in 2..=bound.max(2) {
            let perms = permutations(r);
            for idx in 0..k.pow(r as u32) {
                let w = decode(idx, r, k);
                for tau in &perms[1..] {
                    if let Some(ratio) = self.ratio_local(&w, tau) {
                        if ratio % step == 0 && ((ratio / step) as u64).gcd(&(n as u64)) == 1 {
                            let word = w.iter().map(|&x| self.h.element(x)).collect();
                            return Some(BinomialDatum { word, perm: tau.clone(), ratio });
                        }
                    }
                }
            }
        }
        None
    }
}

fn check_perm(tau: &[usize], r: usize) -> Result<()> {
    let mut seen = vec![false; r];
    if tau.len() != r || tau.iter().any(|&i| i >= r || std::mem::replace(&mut seen[i], true)) {
        return invalid(format!("{tau:?} is not a permutation of {r} points"));
    }
    Ok(())
}

/// `H²(H, μ_m)` modulo extended-modulus coboundaries, with canonical coordinates.
#[derive(Debug)]
pub struct CohomologyClasses {
    k: usize,
    modulus: u32,
    cocycles: zmod::Kernel,
    classes: zmod::Quotient,
}

impl CohomologyClasses {
    fn compute(h: &Subgroup, m: u32) -> CohomologyClasses {
        let k = h.order();
        let mm = m as u64;
        let nv = (k - 1) * (k - 1);
        let var = |a: usize, b: usize| (a > 0 && b > 0).then(|| (a - 1) * (k - 1) + (b - 1));
        let mut eqs = Vec::new();
        for a in 1..k {
            for b in 1..k {
                let ab = h.local_mul(a, b);
                for c in 1..k {
                    let bc = h.local_mul(b, c);
                    let mut row = vec![0u64; nv];
                    let mut add = |v: Option<usize>, s: u64| {
                        if let Some(v) = v {
                            row[v] = (row[v] + s) % mm;
                        }
                    };
                    add(var(a, b), 1);
                    add(var(ab, c), 1);
                    add(var(b, c), mm - 1);
                    add(var(a, bc), mm - 1);
                    if row.iter().any(|&x| x != 0) {
                        eqs.push(row);
                    }
                }
            }
        }
        let cocycles = if eqs.is_empty() {
            zmod::kernel(&[vec![0; nv.max(1)]], nv, mm)
        } else {
            zmod::kernel(&eqs, nv, mm)
        };
        let delta = |f: &dyn Fn(usize) -> u64, scale_down: u64| -> Vec<u64> {
            let mut v = vec![0u64; nv];
            for a in 1..k {
                for b in 1..k {
                    let ab = h.local_mul(a, b);
                    let d = f(a) + f(b) + scale_down * mm - f(ab);
                    v[var(a, b).expect("nonidentity")] = (d / scale_down) % mm;
                }
            }
            v
        };
        let ng = cocycles.gens.len();
        let mut relations: Vec<Vec<u64>> = Vec::new();
        for (i, (_, order)) in cocycles.gens.iter().enumerate() {
            let mut r = vec![0u64; ng];
            r[i] = *order % mm;
            relations.push(r);
        }
        for x in 1..k {
            let b = delta(&|y| u64::from(y == x), 1);
            relations.push(cocycles.coords(&b));
        }
        // δ of lifted homomorphisms H → Z/E, divided by E
        let e = h.exponent() as u64;
        if e > 1 {
            let mut hom_eqs = Vec::new();
            for a in 1..k {
                for b in 1..k {
                    let ab = h.local_mul(a, b);
                    let mut row = vec![0u64; k - 1];
                    row[a - 1] += 1;
                    row[b - 1] += 1;
                    if ab > 0 {
                        row[ab - 1] = (row[ab - 1] + e - 1) % e;
                    }
                    hom_eqs.push(row);
                }
            }
            let homs = zmod::kernel(&hom_eqs, k - 1, e);
            for (phi, _) in &homs.gens {
                let f = |y: usize| if y == 0 { 0 } else { phi[y - 1] };
                let v = delta(&|y| f(y), e);
                relations.push(cocycles.coords(&v));
            }
        }
        let classes = zmod::quotient(ng, &relations, mm);
        CohomologyClasses { k, modulus: m, cocycles, classes }
    }

    fn cached(h: &Subgroup, m: u32) -> Arc<CohomologyClasses> {
        type Key = (Vec<usize>, u32);
        static CACHE: OnceLock<Mutex<HashMap<Key, Arc<CohomologyClasses>>>> = OnceLock::new();
        let k = h.order();
        let mut table = Vec::with_capacity(k * k);
        for a in 0..k {
            for b in 0..k {
                table.push(h.local_mul(a, b));
            }
        }
        let key = (table, m);
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(c) = cache.lock().expect("cohomology cache").get(&key) {
            return c.clone();
        }
        let c = Arc::new(CohomologyClasses::compute(h, m));
        cache.lock().expect("cohomology cache").insert(key, c.clone());
        c
    }

    pub fn count(&self) -> u128 {
        self.classes.size()
    }

    fn vector(&self, alpha: &Cocycle) -> Vec<u64> {
        let k = self.k;
        let mut v = Vec::with_capacity((k - 1) * (k - 1));
        for a in 1..k {
            for b in 1..k {
                v.push(alpha.exp_local(a, b) as u64);
            }
        }
        v
    }

    fn class_coords(&self, alpha: &Cocycle) -> Vec<u64> {
        let z = self.cocycles.coords(&self.vector(alpha));
        self.classes.coords(&z)
    }

    fn representative(&self, h: Arc<Subgroup>, coords: &[u64]) -> Cocycle {
        let m = self.modulus as u64;
        let ng = self.cocycles.gens.len();
        let mut zc = vec![0u64; ng];
        for (c, gen) in coords.iter().zip(&self.classes.gens) {
            for (z, g) in zc.iter_mut().zip(gen) {
                *z = (*z + c * g) % m;
            }
        }
        let nv = (self.k - 1) * (self.k - 1);
        let mut v = vec![0u64; nv];
        for (c, (gen, _)) in zc.iter().zip(&self.cocycles.gens) {
            for (x, g) in v.iter_mut().zip(gen) {
                *x = (*x + c * g) % m;
            }
        }
        let k = self.k;
        let mut exps = vec![0u32; k * k];
        for a in 1..k {
            for b in 1..k {
                exps[a * k + b] = v[(a - 1) * (k - 1) + (b - 1)] as u32;
            }
        }
        Cocycle::from_flat(h, self.modulus, exps)
    }
}

/// Representatives of the cocycle classes on `H` with values in `μ_m`,
/// distinct up to extended-modulus coboundaries; the trivial class first.
pub fn h2_classes(h: Arc<Subgroup>, m: u32, cap: usize) -> Result<Vec<Cocycle>> {
    if h.order() > cap {
        return Err(Error::Cap { what: "subgroup order for cohomology", value: h.order(), cap });
    }
    if m == 0 {
        return invalid("modulus must be positive");
    }
    if h.order() == 1 {
        return Ok(vec![Cocycle::trivial(h, m)]);
    }
    let data = CohomologyClasses::cached(&h, m);
    let count = data.count();
    if count > 1 << 20 {
        return Err(Error::Cap { what: "number of cohomology classes", value: count as usize, cap: 1 << 20 });
    }
    let orders = data.classes.orders.clone();
    let mut out = Vec::with_capacity(count as usize);
    let mut coords = vec![0u64; orders.len()];
    loop {
        out.push(data.representative(h.clone(), &coords));
        let mut i = orders.len();
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            coords[i] += 1;
            if coords[i] < orders[i] {
                break;
            }
            coords[i] = 0;
        }
    }
}

/// The canonical representative of `α`'s class among [`h2_classes`] output.
pub fn canonical_cocycle(alpha: &Cocycle) -> Cocycle {
    let h = alpha.subgroup().clone();
    if h.order() == 1 {
        return Cocycle::trivial(h, alpha.modulus());
    }
    let data = CohomologyClasses::cached(&h, alpha.modulus());
    let coords = data.class_coords(alpha);
    data.representative(h, &coords)
}
