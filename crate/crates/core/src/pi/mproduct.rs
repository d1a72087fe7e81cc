//! `m(X)`: the product of one binomial per Galois conjugate of a primitive
//! ratio, symmetrized so its coefficients are fixed by `S̄`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use super::{GradedPolynomial, Monomial, Var};
use crate::cyclo::{CycScalar, SubfieldDescriptor};
use crate::error::{invalid, precondition, Error, Result};
use crate::galgebra::GradedAlgebra;
use crate::presentation::Presentation;
use crate::settings::Settings;
use crate::twisted::{BinomialDatum, Cocycle};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MProduct {
    pub n: u32,
    pub s_bar_image: Vec<u32>,
    pub witness: BinomialDatum,
    #[serde(skip)]
    pub polynomial: GradedPolynomial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct MProductReport {
    /// `(s, identity of F^{α^s}H)` over coset representatives of `S`.
    pub inner: Vec<(usize, bool)>,
    /// `(j, identity of F^{α^[j]}H)` over units `j ∉ S̄`.
    pub outer: Vec<(u32, bool)>,
    pub coefficients_in_k: bool,
}

/// Elementary symmetric polynomials `e_0, …, e_q` of `values`.
fn elementary_symmetric(values: &[CycScalar], m: u32) -> Vec<CycScalar> {
    let mut e = vec![CycScalar::one(m)];
    for v in values {
        let mut next = vec![CycScalar::zero(m); e.len() + 1];
        for (t, x) in e.iter().enumerate() {
            next[t] = next[t].add(x);
            next[t + 1] = next[t + 1].add(&x.mul(v));
        }
        e = next;
    }
    e
}

fn binomial_coefficient(q: usize, t: usize) -> BigInt {
    (0..t).fold(BigInt::from(1), |acc, i| acc * BigInt::from(q - i) / BigInt::from(i + 1))
}

/// `(1/q!) Σ_π Π_l β(x^{(l)}; ζ_n^{a·j_{π(l)}})` over disjoint copies `x^{(l)}`.
pub fn build_m_product(alpha: &Cocycle, s_bar: &[u32], n: u32, witness: &BinomialDatum) -> Result<GradedPolynomial> {
    let m = alpha.modulus();
    if n == 0 || m % n != 0 {
        return invalid(format!("{n} does not divide the cocycle modulus {m}"));
    }
    let ratio = alpha.binomial_ratio(&witness.word, &witness.perm)?;
    if ratio != witness.ratio % m {
        return invalid("witness ratio does not match the cocycle");
    }
    let step = m / n;
    if ratio % step != 0 || ((ratio / step) as u64).gcd(&(n as u64)) != 1 {
        return precondition(format!("witness ratio ζ_{m}^{ratio} does not have order {n}"));
    }
    let a = (ratio / step) as i64;
    let q = s_bar.len().max(1);
    let js: Vec<u32> = if s_bar.is_empty() { vec![1] } else { s_bar.to_vec() };
    let values: Vec<CycScalar> = js.iter().map(|&j| CycScalar::root(n, a * j as i64)).collect();
    let e = elementary_symmetric(&values, n);
    let r = witness.word.len();
    let mut vars = Vec::with_capacity(q * r);
    for l in 0..q {
        for (i, &d) in witness.word.iter().enumerate() {
            vars.push(Var { id: format!("x{}_{}", l + 1, i + 1), degree: d });
        }
    }
    let mut monomials = Vec::with_capacity(1 << q);
    for mask in 0u64..(1u64 << q) {
        let t = mask.count_ones() as usize;
        let sign = if t % 2 == 0 { 1 } else { -1 };
        let scale = BigRational::new(BigInt::from(sign), binomial_coefficient(q, t));
        let coeff = e[t].scale(&scale);
        let mut seq = Vec::with_capacity(q * r);
        for l in 0..q {
            if mask >> l & 1 == 1 {
                seq.extend(witness.perm.iter().map(|&i| l * r + i));
            } else {
                seq.extend((0..r).map(|i| l * r + i));
            }
        }
        monomials.push(Monomial { coeff, seq });
    }
    GradedPolynomial::new(vars, monomials)
}

/// `m(X)` for a presentation, from its invariants and first primitive witness.
pub fn m_product_for(p: &Presentation, settings: &Settings) -> Result<MProduct> {
    let chain = p.invariants_literal(settings)?;
    let alpha = p.cocycle();
    let witness = alpha.primitive_witness(chain.n, settings.word_bound).ok_or_else(|| {
        Error::Precondition(format!("no primitive witness of order {} within length {}", chain.n, settings.word_bound))
    })?;
    let polynomial = build_m_product(alpha, &chain.s_bar_image, chain.n, &witness)?;
    Ok(MProduct { n: chain.n, s_bar_image: chain.s_bar_image, witness, polynomial })
}

fn identity_on(alpha: Cocycle, poly: &GradedPolynomial, settings: &Settings) -> Result<bool> {
    let p = Presentation::new(alpha, vec![0])?;
    let a = GradedAlgebra::build(&p, &settings.caps)?;
    Ok(super::is_identity(poly, &a, settings)?.is_identity)
}

/// Checks `m(X)` on every `F^{α^s}H`, every outer Galois twist and in `k`.
pub fn verify_m_product(p: &Presentation, mp: &MProduct, settings: &Settings) -> Result<MProductReport> {
    let chain = p.invariants_literal(settings)?;
    let alpha = p.cocycle();
    let h = p.subgroup();
    let mut reps: Vec<usize> = chain.s.iter().map(|&x| h.coset_id(x)).collect();
    reps.sort_unstable();
    reps.dedup();
    let mut inner = Vec::with_capacity(reps.len());
    for s in reps {
        inner.push((s, identity_on(alpha.conjugate(s), &mp.polynomial, settings)?));
    }
    let m = alpha.modulus();
    let mut outer = Vec::new();
    for j in crate::cyclo::units_mod(mp.n.max(1)) {
        if mp.n > 1 && mp.s_bar_image.contains(&j) || mp.n <= 1 {
            continue;
        }
        let lift = (0..m / mp.n)
            .map(|t| j + t * mp.n)
            .find(|&x| (x as u64).gcd(&(m as u64)) == 1)
            .ok_or_else(|| Error::Internal(format!("{j} has no unit lift modulo {m}")))?;
        outer.push((j, identity_on(alpha.galois(lift)?, &mp.polynomial, settings)?));
    }
    let field = SubfieldDescriptor::from_generators(mp.n.max(1), &mp.s_bar_image)?;
    let coefficients_in_k = mp.polynomial.monomials().iter().all(|x| field.contains(&x.coeff));
    Ok(MProductReport { inner, outer, coefficients_in_k })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn symmetric_functions() {
        let e = elementary_symmetric(&[CycScalar::root(3, 1), CycScalar::root(3, 2)], 3);
        assert_eq!(e[1], CycScalar::from_int(3, -1));
        assert_eq!(e[2], CycScalar::one(3));
        assert_eq!(binomial_coefficient(4, 2), BigInt::from(6));
    }

    #[test]
    fn z3sq_single_factor() {
        let p = corpus::z3sq_presentation();
        let s = Settings::default();
        let mp = m_product_for(&p, &s).unwrap();
        assert_eq!(mp.polynomial.monomials().len(), 2);
        let r = verify_m_product(&p, &mp, &s).unwrap();
        assert!(r.inner.iter().all(|&(_, ok)| ok));
        assert_eq!(r.outer, vec![(2, false)]);
        assert!(r.coefficients_in_k);
    }

    #[test]
    fn swap_two_factors_rational() {
        let p = corpus::swap_presentation();
        let s = Settings::default();
        let mp = m_product_for(&p, &s).unwrap();
        assert_eq!(mp.polynomial.monomials().len(), 4);
        let r = verify_m_product(&p, &mp, &s).unwrap();
        assert!(r.inner.iter().all(|&(_, ok)| ok));
        assert!(r.outer.is_empty());
        assert!(r.coefficients_in_k);
        assert!(mp.polynomial.monomials().iter().all(|x| x.coeff.is_rational()));
    }

    /// The symmetrized product equals the explicit average over orderings.
    #[test]
    fn matches_explicit_average() {
        let p = corpus::swap_presentation();
        let s = Settings::default();
        let mp = m_product_for(&p, &s).unwrap();
        let w = &mp.witness;
        let n = mp.n;
        let a = (w.ratio / (p.cocycle().modulus() / n)) as i64;
        let js = &mp.s_bar_image;
        let r = w.word.len();
        let mut monomials = Vec::new();
        for pi in crate::pi::witness::permutations(js.len()) {
            for mask in 0u64..(1 << js.len()) {
                let mut coeff = CycScalar::one(n);
                let mut seq = Vec::new();
                for l in 0..js.len() {
                    if mask >> l & 1 == 1 {
                        coeff = coeff.mul(&CycScalar::root(n, a * js[pi[l]] as i64).neg());
                        seq.extend(w.perm.iter().map(|&i| l * r + i));
                    } else {
                        seq.extend((0..r).map(|i| l * r + i));
                    }
                }
                let fact: i64 = (1..=js.len() as i64).product();
                monomials.push(Monomial { coeff: coeff.scale(&BigRational::new(1.into(), fact.into())), seq });
            }
        }
        let explicit = GradedPolynomial::new(mp.polynomial.vars().to_vec(), monomials).unwrap();
        assert_eq!(explicit, mp.polynomial);
    }
}
