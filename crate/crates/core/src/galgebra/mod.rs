//! The algebra `A = F^αH ⊗ M_n(F)` of a presentation, on the basis `u_h ⊗ e_{ij}`.

pub mod kform;

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::cyclo::CycScalar;
use crate::error::{invalid, precondition, Error, Result};
use crate::group::Elem;
use crate::presentation::Presentation;
use crate::settings::Caps;

/// Basis element `u_h ⊗ e_{ij}` with `h` a local index of `H`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisTriple {
    pub h: usize,
    pub i: usize,
    pub j: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Relation {
    SameBlock,
    RelatedDistinct,
    Unrelated,
}

#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    p: Presentation,
    n: usize,
    k: usize,
    degrees: Vec<Elem>,
    by_degree: Vec<Vec<usize>>,
    blocks: Vec<Vec<usize>>,
    block_of: Vec<usize>,
}

/// Sparse `Σ c_b b` over basis indices.
#[derive(Clone, Debug, PartialEq, Default)]
pub struct AlgElement {
    terms: BTreeMap<usize, CycScalar>,
}

impl GradedAlgebra {
    pub fn build(p: &Presentation, caps: &Caps) -> Result<GradedAlgebra> {
        let n = p.len();
        let h = p.subgroup();
        let k = h.order();
        let dim = k * n * n;
        if dim > caps.algebra_dim {
            return Err(Error::Cap { what: "algebra dimension", value: dim, cap: caps.algebra_dim });
        }
        let g = p.group();
        let tuple = p.tuple();
        let mut degrees = Vec::with_capacity(dim);
        let mut by_degree = vec![Vec::new(); g.order()];
        for hl in 0..k {
            let he = h.element(hl);
            for i in 0..n {
                let left = g.mul(g.inv(tuple[i]), he);
                for j in 0..n {
                    let d = g.mul(left, tuple[j]);
                    by_degree[d].push(degrees.len());
                    degrees.push(d);
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![0; n];
        let mut seen: BTreeMap<Elem, usize> = BTreeMap::new();
        for (i, &x) in tuple.iter().enumerate() {
            let c = h.coset_id(x);
            let b = *seen.entry(c).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(i);
            block_of[i] = b;
        }
        Ok(GradedAlgebra { p: p.clone(), n, k, degrees, by_degree, blocks, block_of })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    /// Modulus of the cocycle values.
    pub fn modulus(&self) -> u32 {
        self.p.cocycle().modulus()
    }

    pub fn index(&self, t: BasisTriple) -> usize {
        (t.h * self.n + t.i) * self.n + t.j
    }

    pub fn triple(&self, b: usize) -> BasisTriple {
        BasisTriple { h: b / (self.n * self.n), i: (b / self.n) % self.n, j: b % self.n }
    }

    /// Basis index of `u_h ⊗ e_{ij}` for a group element `h ∈ H`.
    pub fn basis(&self, h: Elem, i: usize, j: usize) -> Result<usize> {
        let hl = self.p.subgroup().local_index(h).ok_or_else(|| Error::Invalid(format!("{h} is not in H")))?;
        if i >= self.n || j >= self.n {
            return invalid(format!("matrix position ({i}, {j}) is outside {0}×{0}", self.n));
        }
        Ok(self.index(BasisTriple { h: hl, i, j }))
    }

    pub fn degree(&self, b: usize) -> Elem {
        self.degrees[b]
    }

    pub fn of_degree(&self, g: Elem) -> &[usize] {
        &self.by_degree[g]
    }

    /// `g ↦ dim A_g` over the support.
    pub fn dims(&self) -> BTreeMap<Elem, usize> {
        self.by_degree.iter().enumerate().filter(|(_, v)| !v.is_empty()).map(|(g, v)| (g, v.len())).collect()
    }

    /// Tuple positions grouped by equal `H`-coset, in order of first appearance.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_of(&self, position: usize) -> usize {
        self.block_of[position]
    }

    /// `Δ_e`.
    pub fn e_basis(&self) -> &[usize] {
        &self.by_degree[0]
    }

    /// `b₁b₂ = ζ_m^e b` or zero.
    #[inline]
    pub fn mul_basis(&self, b1: usize, b2: usize) -> Option<(u32, usize)> {
        let n = self.n;
        let (h1, i, j) = (b1 / (n * n), (b1 / n) % n, b1 % n);
        let (h2, k, l) = (b2 / (n * n), (b2 / n) % n, b2 % n);
        if j != k {
            return None;
        }
        let h = self.p.subgroup().local_mul(h1, h2);
        Some((self.p.cocycle().exp_local(h1, h2), (h * n + i) * n + l))
    }

    /// Left-to-right product of basis elements.
    pub fn mul_word(&self, word: &[usize]) -> Option<(u32, usize)> {
        let m = self.modulus();
        let (&first, rest) = word.split_first()?;
        let mut acc = (0u32, first);
        for &b in rest {
            let (e, c) = self.mul_basis(acc.1, b)?;
            acc = ((acc.0 + e) % m, c);
        }
        Some(acc)
    }

    pub fn identity(&self) -> AlgElement {
        let m = self.modulus();
        AlgElement::from_terms((0..self.n).map(|i| (self.index(BasisTriple { h: 0, i, j: i }), CycScalar::one(m))))
    }

    pub fn multiply(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        let m = self.modulus();
        let mut out = AlgElement::zero();
        for (&a, ca) in &x.terms {
            for (&b, cb) in &y.terms {
                if let Some((e, c)) = self.mul_basis(a, b) {
                    out.add_term(c, ca.mul(cb).mul_root(m, e as i64));
                }
            }
        }
        out
    }

    pub fn check_element(&self, x: &AlgElement) -> Result<()> {
        match x.terms.keys().next_back() {
            Some(&b) if b >= self.dim() => invalid(format!("basis index {b} is outside the algebra")),
            _ => Ok(()),
        }
    }

    /// Classification of two tuple positions.
    pub fn relate(&self, i: usize, j: usize) -> Relation {
        let h = self.p.subgroup();
        let g = self.p.group();
        let t = self.p.tuple();
        if h.coset_id(t[i]) == h.coset_id(t[j]) {
            return Relation::SameBlock;
        }
        // g_i⁻¹ H g_j ∩ H ≠ ∅
        let gi = g.inv(t[i]);
        if h.elements().iter().any(|&x| h.contains(g.mul(g.mul(gi, x), t[j]))) {
            Relation::RelatedDistinct
        } else {
            Relation::Unrelated
        }
    }

    /// Every basis `c` with `z·c·w ≠ 0`.
    pub fn bridges(&self, z: usize, w: usize) -> Vec<usize> {
        let (a, b) = (self.triple(z), self.triple(w));
        (0..self.k).map(|h| self.index(BasisTriple { h, i: a.j, j: b.i })).collect()
    }

    /// The minimal bridge of the kind the block relation calls for.
    pub fn bridge(&self, z: usize, w: usize) -> Result<usize> {
        if self.degree(z) != 0 || self.degree(w) != 0 {
            return precondition("bridges connect elements of degree e");
        }
        let h = self.p.subgroup();
        let (a, b) = (self.triple(z), self.triple(w));
        let rel = self.relate(a.i, b.i);
        let wanted = |c: usize| {
            let d = self.degree(c);
            match rel {
                Relation::SameBlock => d == 0,
                Relation::RelatedDistinct => d != 0 && h.contains(d),
                Relation::Unrelated => !h.contains(d),
            }
        };
        self.bridges(z, w)
            .into_iter()
            .find(|&c| wanted(c))
            .ok_or_else(|| Error::Internal(format!("no {rel:?} bridge between {z} and {w}")))
    }

    pub fn element_to_spec(&self, x: &AlgElement) -> ElementSpec {
        let h = self.p.subgroup();
        ElementSpec {
            terms: x
                .terms
                .iter()
                .map(|(&b, c)| {
                    let t = self.triple(b);
                    TermSpec { h: h.element(t.h), i: t.i, j: t.j, coeff: c.clone() }
                })
                .collect(),
        }
    }

    pub fn element_from_spec(&self, spec: &ElementSpec) -> Result<AlgElement> {
        let mut out = AlgElement::zero();
        for t in &spec.terms {
            out.add_term(self.basis(t.h, t.i, t.j)?, t.coeff.clone());
        }
        Ok(out)
    }
}

impl AlgElement {
    pub fn zero() -> Self {
        AlgElement::default()
    }

    pub fn basis(b: usize, m: u32) -> Self {
        AlgElement::from_terms([(b, CycScalar::one(m))])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (usize, CycScalar)>) -> Self {
        let mut out = AlgElement::zero();
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<usize, CycScalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: usize) -> Option<&CycScalar> {
        self.terms.get(&b)
    }

    pub fn add_term(&mut self, b: usize, c: CycScalar) {
        let sum = match self.terms.remove(&b) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(b, sum);
        }
    }

    pub fn add(&self, other: &AlgElement) -> AlgElement {
        let mut out = self.clone();
        for (&b, c) in &other.terms {
            out.add_term(b, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &CycScalar) -> AlgElement {
        AlgElement::from_terms(self.terms.iter().map(|(&b, x)| (b, x.mul(c))))
    }

    pub fn neg(&self) -> AlgElement {
        AlgElement::from_terms(self.terms.iter().map(|(&b, x)| (b, x.neg())))
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermSpec {
    pub h: Elem,
    pub i: usize,
    pub j: usize,
    pub coeff: CycScalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ElementSpec {
    pub terms: Vec<TermSpec>,
}
