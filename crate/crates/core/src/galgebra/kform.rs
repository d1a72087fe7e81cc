//! Explicit generators of a form of `A` over its minimal field `k`, with an
//! exact span-closure check.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{AlgElement, BasisTriple, GradedAlgebra};
use crate::cyclo::CycScalar;
use crate::error::{precondition, Error, Result};
use crate::group::Elem;
use crate::linalg::Echelon;
use crate::par;
use crate::settings::Settings;
use crate::zmod;

/// Reading of the superscripts `u_h^{g⁻¹}` and `z^{g⁻¹}` on the diagonal families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum KFormVariant {
    /// `u_{g h g⁻¹}` on each diagonal slot, scalars untouched.
    Conjugation,
    /// `u_h` on each slot, scalars moved by the Galois element of the slot.
    Galois,
    /// Conjugation with root-of-unity corrections solved so the families close up.
    TwistedConjugation,
}

impl KFormVariant {
    pub const ALL: [KFormVariant; 3] =
        [KFormVariant::Conjugation, KFormVariant::Galois, KFormVariant::TwistedConjugation];
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum Family {
    TwistedGroup,
    Scalar,
    MatrixUnit,
    Permutation,
}

#[derive(Clone, Debug)]
pub struct KGenerator {
    pub family: Family,
    pub label: String,
    pub element: AlgElement,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct KFormReport {
    pub variant: KFormVariant,
    pub generators: usize,
    pub homogeneous: bool,
    pub algebra_dim: usize,
    pub k_degree: usize,
    pub q_dim: usize,
    pub k_dim: usize,
    pub f_rank: usize,
    pub multiplication_closed: bool,
    pub verified: bool,
}

#[derive(Clone, Debug)]
pub struct KForm {
    pub generators: Vec<KGenerator>,
    pub report: KFormReport,
}

const CLOSURE_WIDTH_CAP: usize = 1 << 14;

/// Sparse linear congruences over `Z/m`.
struct System {
    m: u64,
    cols: usize,
    rows: Vec<Vec<(usize, i64)>>,
    rhs: Vec<i64>,
}

impl System {
    fn new(m: u64) -> Self {
        System { m, cols: 0, rows: Vec::new(), rhs: Vec::new() }
    }

    fn alloc(&mut self, count: usize) -> usize {
        self.cols += count;
        self.cols - count
    }

    fn push(&mut self, row: Vec<(usize, i64)>, rhs: i64) {
        self.rows.push(row);
        self.rhs.push(rhs);
    }

    fn solve(&self) -> Option<Vec<u64>> {
        let m = self.m as i64;
        let dense: Vec<Vec<u64>> = self
            .rows
            .iter()
            .map(|r| {
                let mut v = vec![0i64; self.cols];
                for &(c, x) in r {
                    v[c] += x;
                }
                v.into_iter().map(|x| x.rem_euclid(m) as u64).collect()
            })
            .collect();
        let rhs: Vec<u64> = self.rhs.iter().map(|x| x.rem_euclid(m) as u64).collect();
        zmod::solve(&dense, self.cols, &rhs, self.m)
    }
}

/// Shape data shared by the constructions.
struct Frame<'a> {
    a: &'a GradedAlgebra,
    /// Roots available in `Q(ζ_n)`: `n′ = lcm(n, 2)`.
    n_prime: u32,
    big: u32,
    /// Slot Galois exponents mod `n′`.
    slot_j: Vec<u32>,
}

impl Frame<'_> {
    fn alpha_big(&self, x: Elem, y: Elem) -> i64 {
        let alpha = self.a.presentation().cocycle();
        (alpha.exp(x, y) * (self.big / alpha.modulus())) as i64
    }

    fn q(&self) -> i64 {
        (self.big / self.n_prime) as i64
    }

    fn term(&self, x: Elem, i: usize, j: usize, e: i64) -> (usize, CycScalar) {
        (self.a.basis(x, i, j).expect("element of H"), CycScalar::root(self.big, e))
    }
}

pub fn build_k_form(a: &GradedAlgebra, variant: KFormVariant, settings: &Settings) -> Result<KForm> {
    let p = a.presentation();
    let chain = p.invariants_literal(settings)?;
    let h = p.subgroup();
    let alpha = p.cocycle();
    let n = chain.n.max(1);
    let n_prime = n.lcm(&2);
    let big = (alpha.modulus() * h.exponent() as u32).lcm(&n_prime);
    let k_degree = chain.field.degree();

    let generators = if chain.s_bar_image.len() <= 1 {
        let frame = Frame { a, n_prime, big, slot_j: vec![1; a.n()] };
        split_generators(&frame, variant)?
    } else {
        // S̄ nontrivial: the tuple must be one representative per H-coset of S, with T = H.
        let s = &chain.s;
        let tuple = p.tuple();
        let mut cosets: Vec<Elem> = tuple.iter().map(|&x| h.coset_id(x)).collect();
        cosets.sort_unstable();
        cosets.dedup();
        let s_cosets: Vec<Elem> = {
            let mut v: Vec<Elem> = s.iter().map(|&x| h.coset_id(x)).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        if cosets.len() != tuple.len() || cosets != s_cosets {
            return precondition("k-form with nontrivial Galois action needs the tuple to be an S-transversal of H");
        }
        if chain.s_bar_image.len() != tuple.len() {
            return precondition("k-form with nontrivial Galois action needs S acting faithfully on Q(ζ_n) modulo H");
        }
        let mut slot_j = Vec::with_capacity(tuple.len());
        for &x in tuple {
            let j = alpha.galois_action_of_s(x, n, settings.word_bound, settings.exec)?;
            let ji = (1..n).find(|&y| (j as u64 * y as u64) % n as u64 == 1).unwrap_or(1);
            slot_j.push(lift_unit(ji, n, n_prime));
        }
        let frame = Frame { a, n_prime, big, slot_j };
        galois_generators(&frame, variant)?
    };
    let report = verify(a, variant, &generators, k_degree, settings)?;
    Ok(KForm { generators, report })
}

/// Every variant, in a fixed order.
pub fn build_k_forms(a: &GradedAlgebra, settings: &Settings) -> Result<Vec<KForm>> {
    KFormVariant::ALL.iter().map(|&v| build_k_form(a, v, settings)).collect()
}

fn lift_unit(j: u32, n: u32, n_prime: u32) -> u32 {
    (0..n_prime / n).map(|t| j + t * n).find(|&x| (x as u64).gcd(&(n_prime as u64)) == 1).expect("unit lifts")
}

/// `S̄` trivial: `k = Q(ζ_n)`, and `Q(ζ_n)^{α′}H ⊗ M_n(Q)` is a form.
fn split_generators(fr: &Frame, variant: KFormVariant) -> Result<Vec<KGenerator>> {
    let a = fr.a;
    let h = a.presentation().subgroup();
    let k = h.order();
    let f: Vec<i64> = match variant {
        KFormVariant::TwistedConjugation => {
            let mut sys = System::new(fr.big as u64);
            let fcol = sys.alloc(k);
            let wcol = sys.alloc(k * k);
            for x in 0..k {
                for y in 0..k {
                    let xy = h.local_mul(x, y);
                    let row = vec![(fcol + x, 1), (fcol + y, 1), (fcol + xy, -1), (wcol + x * k + y, -fr.q())];
                    sys.push(row, -fr.alpha_big(h.element(x), h.element(y)));
                }
            }
            let sol = sys.solve().ok_or_else(|| Error::Internal("no root-of-unity rescaling of α into Q(ζ_n)".into()))?;
            (0..k).map(|x| sol[fcol + x] as i64).collect()
        }
        _ => vec![0; k],
    };
    let mut out = Vec::new();
    for (x, &fx) in f.iter().enumerate() {
        let he = h.element(x);
        out.push(KGenerator {
            family: Family::TwistedGroup,
            label: format!("X[{he}]"),
            element: AlgElement::from_terms([fr.term(he, 0, 0, fx)]),
        });
    }
    let mut z = AlgElement::zero();
    for i in 0..a.n() {
        let (b, _) = fr.term(0, i, i, 0);
        z.add_term(b, CycScalar::root(fr.n_prime, 1));
    }
    out.push(KGenerator { family: Family::Scalar, label: format!("Z[ζ{}]", fr.n_prime), element: z });
    for i in 0..a.n() {
        for j in 0..a.n() {
            if i != j {
                out.push(KGenerator {
                    family: Family::MatrixUnit,
                    label: format!("E[{i},{j}]"),
                    element: AlgElement::from_terms([fr.term(0, i, j, 0)]),
                });
            }
        }
    }
    Ok(out)
}

/// `S̄` nontrivial with `T = H` and the tuple an `S`-transversal.
fn galois_generators(fr: &Frame, variant: KFormVariant) -> Result<Vec<KGenerator>> {
    let a = fr.a;
    let p = a.presentation();
    let g = p.group();
    let h = p.subgroup();
    let tuple = p.tuple();
    let m = tuple.len();
    let k = h.order();
    let slot = |x: Elem| -> usize {
        let c = h.coset_id(x);
        tuple.iter().position(|&t| h.coset_id(t) == c).expect("S-transversal")
    };
    // x_a(h) = g_a h g_a⁻¹
    let xa = |s: usize, x: usize| g.conj(tuple[s], h.element(x));
    // g_a g_b = y_a(b) g_{π_b(a)}
    let pi: Vec<Vec<usize>> = (0..m).map(|b| (0..m).map(|s| slot(g.mul(tuple[s], tuple[b]))).collect()).collect();
    let ya = |s: usize, b: usize| g.mul(g.mul(tuple[s], tuple[b]), g.inv(tuple[pi[b][s]]));

    let (f, mu) = if variant == KFormVariant::TwistedConjugation {
        let mut sys = System::new(fr.big as u64);
        let fcol = sys.alloc(m * k);
        let mucol = sys.alloc(m * m);
        let fv = |s: usize, x: usize| fcol + s * k + x;
        let muv = |s: usize, b: usize| mucol + s * m + b;
        let q = fr.q();
        for x in 0..k {
            for y in 0..k {
                let w = sys.alloc(1);
                let xy = h.local_mul(x, y);
                for s in 0..m {
                    let row = vec![(fv(s, x), 1), (fv(s, y), 1), (fv(s, xy), -1), (w, -q * fr.slot_j[s] as i64)];
                    sys.push(row, -fr.alpha_big(xa(s, x), xa(s, y)));
                }
            }
        }
        for b in 0..m {
            for x in 0..k {
                let w = sys.alloc(1);
                let x2 = h.local_index(g.conj(tuple[b], h.element(x))).expect("S normalizes H");
                for s in 0..m {
                    let ps = pi[b][s];
                    let y = ya(s, b);
                    let row = vec![(fv(ps, x), 1), (fv(s, x2), -1), (w, -q * fr.slot_j[s] as i64)];
                    sys.push(row, fr.alpha_big(xa(s, x2), y) - fr.alpha_big(y, xa(ps, x)));
                }
            }
        }
        for b in 0..m {
            for c in 0..m {
                let w = sys.alloc(1);
                let bc = g.mul(tuple[b], tuple[c]);
                let d = slot(bc);
                let h0 = h.local_index(g.mul(bc, g.inv(tuple[d]))).expect("same coset");
                for s in 0..m {
                    let ps = pi[b][s];
                    let row = vec![
                        (muv(s, b), 1),
                        (muv(ps, c), 1),
                        (fv(s, h0), -1),
                        (muv(s, d), -1),
                        (w, -q * fr.slot_j[s] as i64),
                    ];
                    sys.push(row, fr.alpha_big(xa(s, h0), ya(s, d)) - fr.alpha_big(ya(s, b), ya(ps, c)));
                }
            }
        }
        let sol = sys.solve().ok_or_else(|| Error::Internal("no monomial solution for the k-form corrections".into()))?;
        let f: Vec<Vec<i64>> = (0..m).map(|s| (0..k).map(|x| sol[fv(s, x)] as i64).collect()).collect();
        let mu: Vec<Vec<i64>> = (0..m).map(|s| (0..m).map(|b| sol[muv(s, b)] as i64).collect()).collect();
        (f, mu)
    } else {
        (vec![vec![0; k]; m], vec![vec![0; m]; m])
    };

    let mut out = Vec::new();
    for x in 0..k {
        let terms: Vec<(usize, CycScalar)> = (0..m)
            .map(|s| {
                let u = if variant == KFormVariant::Galois { h.element(x) } else { xa(s, x) };
                fr.term(u, s, s, f[s][x])
            })
            .collect();
        out.push(KGenerator {
            family: Family::TwistedGroup,
            label: format!("X[{}]", h.element(x)),
            element: AlgElement::from_terms(terms),
        });
    }
    let z = AlgElement::from_terms((0..m).map(|s| {
        let j = if variant == KFormVariant::Conjugation { 1 } else { fr.slot_j[s] };
        (fr.term(0, s, s, 0).0, CycScalar::root(fr.n_prime, j as i64))
    }));
    out.push(KGenerator { family: Family::Scalar, label: format!("Z[ζ{}]", fr.n_prime), element: z });
    for b in 0..m {
        let terms: Vec<(usize, CycScalar)> = (0..m).map(|s| fr.term(ya(s, b), s, pi[b][s], mu[s][b])).collect();
        out.push(KGenerator {
            family: Family::Permutation,
            label: format!("P[{}]", g.name(tuple[b])),
            element: AlgElement::from_terms(terms),
        });
    }
    Ok(out)
}

fn is_homogeneous(a: &GradedAlgebra, x: &AlgElement) -> bool {
    let mut degrees = x.terms().keys().map(|&b| a.degree(b));
    match degrees.next() {
        Some(d) => degrees.all(|e| e == d),
        None => true,
    }
}

fn flatten(x: &AlgElement, dim: usize, m: u32) -> Vec<BigRational> {
    let phi = CycScalar::zero(m).coeffs().len();
    let mut v = vec![BigRational::zero(); dim * phi];
    for (&b, c) in x.terms() {
        for (i, q) in c.promote(m).coeffs().iter().enumerate() {
            v[b * phi + i] = q.clone();
        }
    }
    v
}

/// Q-span closure of the generated algebra plus F-rank.
fn verify(
    a: &GradedAlgebra,
    variant: KFormVariant,
    gens: &[KGenerator],
    k_degree: usize,
    settings: &Settings,
) -> Result<KFormReport> {
    let dim = a.dim();
    let big = gens
        .iter()
        .flat_map(|g| g.element.terms().values().map(|c| c.modulus()))
        .fold(a.modulus(), |acc, m| acc.lcm(&m));
    let width = dim * CycScalar::zero(big).coeffs().len();
    if width > CLOSURE_WIDTH_CAP {
        return Err(Error::Cap { what: "k-form closure width", value: width, cap: CLOSURE_WIDTH_CAP });
    }
    let homogeneous = gens.iter().all(|g| is_homogeneous(a, &g.element));
    let mut ech: Echelon<BigRational> = Echelon::new(width);
    let mut span: Vec<AlgElement> = Vec::new();
    for x in std::iter::once(a.identity()).chain(gens.iter().map(|g| g.element.clone())) {
        if ech.insert(flatten(&x, dim, big)) {
            span.push(x);
        }
    }
    let mut next = 0;
    while next < span.len() {
        let x = span[next].clone();
        let products = par::map(settings.exec, 0..gens.len(), |i| a.multiply(&x, &gens[i].element));
        for y in products {
            if ech.insert(flatten(&y, dim, big)) {
                span.push(y);
            }
        }
        next += 1;
    }
    let q_dim = span.len();
    let mut f_ech: Echelon<CycScalar> = Echelon::new(dim);
    for x in &span {
        if f_ech.rank() == dim {
            break;
        }
        let mut v = vec![CycScalar::zero(big); dim];
        for (&b, c) in x.terms() {
            v[b] = c.promote(big);
        }
        f_ech.insert(v);
    }
    let f_rank = f_ech.rank();
    let k_dim = q_dim / k_degree.max(1);
    let verified = homogeneous && q_dim == k_degree * dim && f_rank == dim;
    Ok(KFormReport {
        variant,
        generators: gens.len(),
        homogeneous,
        algebra_dim: dim,
        k_degree,
        q_dim,
        k_dim,
        f_rank,
        multiplication_closed: true,
        verified,
    })
}

impl GradedAlgebra {
    /// `u_e ⊗ e_{ij}` as an element.
    pub fn matrix_unit(&self, i: usize, j: usize) -> AlgElement {
        AlgElement::basis(self.index(BasisTriple { h: 0, i, j }), self.modulus())
    }
}
