mod common;

use gforge::corpus;
use gforge::cyclo::CycScalar;
use gforge::pi::mproduct::{m_product_for, verify_m_product};
use gforge::pi::witness::{build_witness, permutations};
use gforge::pi::{evaluate, is_good_permutation, is_identity, path_check, pure_split, GradedPolynomial, Monomial, Var};
use gforge::{Caps, GradedAlgebra, Presentation, Settings};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

fn settings() -> Settings {
    Settings::default().sequential()
}

fn alg(p: &Presentation) -> GradedAlgebra {
    GradedAlgebra::build(p, &Caps::default()).unwrap()
}

/// Corpus presentations with every coset at most once in the tuple.
fn simple_corpus() -> Vec<Presentation> {
    vec![
        corpus::matrix_e_g(),
        corpus::pauli_presentation(),
        corpus::z3sq_presentation(),
        corpus::swap_presentation(),
        corpus::trivial_presentation(),
    ]
}

fn small_algebra(seed: u64) -> GradedAlgebra {
    let mut r = common::rng(seed);
    let pool = [corpus::matrix_e_g(), corpus::matrix_e_e_g(), corpus::pauli_presentation(), corpus::z3sq_presentation()];
    let p = if r.gen_bool(0.5) { pool.choose(&mut r).unwrap().clone() } else { common::random_connected(seed, 6, 2) };
    alg(&p)
}

/// Random multilinear polynomial in `k` variables whose degrees occur in the algebra.
fn random_multilinear(r: &mut ChaCha8Rng, a: &GradedAlgebra, k: usize) -> GradedPolynomial {
    let support: Vec<usize> = a.dims().into_iter().filter(|&(_, d)| d > 0).map(|(g, _)| g).collect();
    let vars: Vec<Var> =
        (0..k).map(|i| Var { id: format!("v{i}"), degree: *support.choose(r).unwrap() }).collect();
    let m = a.modulus();
    let mut monomials = Vec::new();
    for mut seq in permutations(k) {
        if r.gen_bool(0.5) {
            continue;
        }
        seq.shuffle(r);
        let coeff = CycScalar::root(m, r.gen_range(0..m.max(1)) as i64).scale(&BigRational::from_integer(BigInt::from(r.gen_range(-1..=1))));
        monomials.push(Monomial { coeff, seq });
    }
    GradedPolynomial::new(vars, monomials).unwrap()
}

/// Binomial identity `x_w − ζ^ratio x_{τw}` of `F^αH` read in the algebra.
fn random_binomial(r: &mut ChaCha8Rng, a: &GradedAlgebra) -> Option<GradedPolynomial> {
    let p = a.presentation();
    let h = p.subgroup();
    let alpha = p.cocycle();
    let k = r.gen_range(2..=3);
    let word: Vec<usize> = (0..k).map(|_| *h.elements().choose(r).unwrap()).collect();
    let mut tau: Vec<usize> = (0..k).collect();
    tau.shuffle(r);
    let ratio = alpha.binomial_ratio(&word, &tau).ok()?;
    gforge::pi::binomial(&word, &tau, alpha.modulus(), ratio).ok()
}

fn exhaustive(p: &GradedPolynomial, a: &GradedAlgebra) -> bool {
    let cands: Vec<Vec<usize>> = p.vars().iter().map(|v| a.of_degree_checked(v.degree).to_vec()).collect();
    let total: usize = cands.iter().map(Vec::len).product();
    (0..total).all(|mut idx| {
        let assignment: Vec<usize> = cands
            .iter()
            .map(|c| {
                let b = c[idx % c.len()];
                idx /= c.len();
                b
            })
            .collect();
        evaluate(p, a, &assignment).unwrap().is_zero()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn identity_matches_exhaustive_evaluation(seed in any::<u64>()) {
        let a = small_algebra(seed);
        let mut r = common::rng(seed);
        let p = match r.gen_bool(0.5) {
            true => random_binomial(&mut r, &a).unwrap_or_else(|| random_multilinear(&mut r, &a, 2)),
            false => {
                let k = r.gen_range(1..=3);
                random_multilinear(&mut r, &a, k)
            }
        };
        let report = is_identity(&p, &a, &settings()).unwrap();
        prop_assert_eq!(report.is_identity, exhaustive(&p, &a));
        if let Some(f) = report.falsifying {
            let assignment: Vec<usize> = p
                .vars()
                .iter()
                .map(|v| match f.iter().find(|x| x.var == v.id) {
                    Some(x) => a.basis(x.h, x.i, x.j).unwrap(),
                    None => a.of_degree(v.degree)[0],
                })
                .collect();
            prop_assert!(!evaluate(&p, &a, &assignment).unwrap().is_zero());
        }
    }

    #[test]
    fn linearization_collapses_to_scaled_original(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let ids = ["x", "y", "z"];
        let nvars = r.gen_range(1..=3);
        let mult: Vec<usize> = (0..nvars).map(|_| r.gen_range(1..=3)).collect();
        let vars: Vec<Var> = (0..nvars).map(|i| Var { id: ids[i].into(), degree: r.gen_range(0..4) }).collect();
        let base: Vec<usize> = mult.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat(i).take(k)).collect();
        let mut monomials = Vec::new();
        for _ in 0..r.gen_range(1..=4) {
            let mut seq = base.clone();
            seq.shuffle(&mut r);
            monomials.push(Monomial { coeff: CycScalar::from_int(1, r.gen_range(-3..=3)), seq });
        }
        let p = GradedPolynomial::new(vars.clone(), monomials).unwrap();
        let lin = p.linearize().unwrap();
        prop_assert!(lin.is_multilinear());
        let map: Vec<usize> = lin
            .vars()
            .iter()
            .map(|v| vars.iter().position(|o| v.id == o.id || v.id.starts_with(&format!("{}_", o.id))).unwrap())
            .collect();
        let collapsed = lin.rename(vars, &map).unwrap();
        let scale: i64 = mult.iter().map(|&k| (1..=k as i64).product::<i64>()).product();
        prop_assert_eq!(collapsed, p.scale(&CycScalar::from_int(1, scale)));
    }

    #[test]
    fn path_checks_agree_with_identity(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let corpus = simple_corpus();
        let a = alg(corpus.choose(&mut r).unwrap());
        let k = r.gen_range(1..=3);
        let p = random_multilinear(&mut r, &a, k);
        for part in pure_split(&p, a.presentation().subgroup()).unwrap() {
            let report = path_check(&part, &a, &settings()).unwrap();
            prop_assert!(report.consistent, "{:?}", report);
        }
    }
}

/// Good permutations keep a nonzero path product in its matrix position;
/// the others move it or kill it.
#[test]
fn good_permutations_on_paths() {
    for p in simple_corpus() {
        let a = alg(&p);
        let h = p.subgroup();
        assert!(h.contains(p.tuple()[0]));
        let row0: Vec<usize> = (0..a.dim()).filter(|&b| a.triple(b).i == 0).collect();
        for r in 2..=3 {
            let perms = permutations(r);
            let mut stack: Vec<Vec<usize>> = row0.iter().map(|&b| vec![b]).collect();
            while let Some(word) = stack.pop() {
                if word.len() < r {
                    let last = a.triple(*word.last().unwrap()).j;
                    stack.extend((0..a.dim()).filter(|&b| a.triple(b).i == last).map(|b| {
                        let mut w = word.clone();
                        w.push(b);
                        w
                    }));
                    continue;
                }
                let Some((_, z)) = a.mul_word(&word) else { continue };
                let degrees: Vec<usize> = word.iter().map(|&b| a.degree(b)).collect();
                for sigma in &perms {
                    let permuted: Vec<usize> = sigma.iter().map(|&i| word[i]).collect();
                    let moved = a.mul_word(&permuted).map(|(_, b)| (a.triple(b).i, a.triple(b).j));
                    let same = moved == Some((a.triple(z).i, a.triple(z).j));
                    assert_eq!(is_good_permutation(h, &degrees, sigma).unwrap(), same, "{word:?} {sigma:?}");
                }
            }
        }
    }
}

#[test]
fn m_product_separates_galois_twists() {
    for p in [corpus::pauli_presentation(), corpus::z3sq_presentation(), corpus::swap_presentation()] {
        let s = Settings::default();
        let mp = m_product_for(&p, &s).unwrap();
        let r = verify_m_product(&p, &mp, &s).unwrap();
        assert!(r.inner.iter().all(|&(_, ok)| ok), "{r:?}");
        assert!(r.outer.iter().all(|&(_, ok)| !ok), "{r:?}");
        assert!(r.coefficients_in_k);
    }
}

fn witness_algebras() -> Vec<GradedAlgebra> {
    [corpus::matrix_e_g(), corpus::matrix_e_e_g(), corpus::pauli_presentation(), corpus::trivial_presentation()]
        .iter()
        .map(alg)
        .collect()
}

#[test]
fn p1_alternates_in_designated_variables() {
    for a in witness_algebras() {
        let w = build_witness(&a).unwrap();
        let p1 = w.p1(&a, &Caps::default()).unwrap();
        let d = &w.designated;
        for x in 0..d.len() {
            for y in x + 1..d.len() {
                let mut map: Vec<usize> = (0..p1.vars().len()).collect();
                map.swap(d[x], d[y]);
                let swapped = p1.rename(p1.vars().to_vec(), &map).unwrap();
                assert!(swapped.add(&p1).unwrap().is_zero());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn framed_evaluations_hit_one_monomial(seed in any::<u64>()) {
        let mut r = common::rng(seed);
        let algebras = witness_algebras();
        let a = algebras.choose(&mut r).unwrap();
        let w = build_witness(a).unwrap();
        let p1 = w.p1(a, &Caps::default()).unwrap();
        let mut values = w.designated_values();
        values.shuffle(&mut r);
        let mut assignment = w.e1.clone();
        for (k, &slot) in w.designated.iter().enumerate() {
            assignment[slot] = values[k];
        }
        let nonzero = p1
            .monomials()
            .iter()
            .filter(|m| a.mul_word(&m.seq.iter().map(|&v| assignment[v]).collect::<Vec<_>>()).is_some())
            .count();
        prop_assert!(nonzero <= 1);
    }
}
