//! The framed monomial `E₁` visiting all of `Δ_e`, its template `Z₁`, the
//! alternation `p₁` and the nonvanishing permutation set.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{GradedPolynomial, Monomial, Var};
use crate::cyclo::CycScalar;
use crate::error::{Error, Result};
use crate::galgebra::{BasisTriple, GradedAlgebra};
use crate::par::{self, Exec};
use crate::settings::Caps;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum SlotKind {
    /// `X`: a chosen appearance of an element of `Δ_e`.
    Designated,
    /// `X⋄`: other `e`-elements of the walk.
    Extra,
    /// `Y`: an `e`-element bordering a designated one.
    Frame,
    /// `W` between blocks.
    Bridge,
    /// `W` at either end.
    Border,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WitnessBundle {
    /// `E₁` as basis indices.
    pub e1: Vec<usize>,
    pub kinds: Vec<SlotKind>,
    /// Positions in `e1`.
    pub designated: Vec<usize>,
    pub frames: Vec<usize>,
    pub bridges: Vec<usize>,
    /// Variable ids of `Z₁`, slot by slot.
    pub ids: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct ConditionReport {
    pub nonzero: bool,
    pub covers_delta_e: bool,
    pub designated_distinct: bool,
    pub blocks_separated_by_e: bool,
    pub blocks_in_order: bool,
    pub borders_not_designated: bool,
    pub borders_in_delta_e: bool,
    pub bridges_compliant: bool,
}

impl ConditionReport {
    pub fn all(&self) -> bool {
        self.nonzero
            && self.covers_delta_e
            && self.designated_distinct
            && self.blocks_separated_by_e
            && self.blocks_in_order
            && self.borders_not_designated
            && self.borders_in_delta_e
            && self.bridges_compliant
    }
}

/// Euler circuit of the complete digraph with loops on `block`, starting at its
/// first index: loops first, then the smallest unused edge.
fn block_circuit(block: &[usize]) -> Vec<(usize, usize)> {
    let d = block.len();
    let mut unused: Vec<BTreeSet<usize>> = (0..d).map(|_| (0..d).collect()).collect();
    // Hierholzer on local indices, with loops preferred.
    let mut stack = vec![0usize];
    let mut circuit = Vec::new();
    while let Some(&v) = stack.last() {
        let next = if unused[v].contains(&v) { Some(v) } else { unused[v].iter().next().copied() };
        match next {
            Some(w) => {
                unused[v].remove(&w);
                stack.push(w);
            }
            None => circuit.push(stack.pop().expect("nonempty")),
        }
    }
    circuit.reverse();
    circuit.windows(2).map(|w| (block[w[0]], block[w[1]])).collect()
}

pub fn build_witness(a: &GradedAlgebra) -> Result<WitnessBundle> {
    let mut e1 = Vec::new();
    let mut kinds = Vec::new();
    let e_at = |i: usize, j: usize| -> Result<usize> {
        a.e_basis()
            .iter()
            .copied()
            .find(|&b| {
                let t = a.triple(b);
                t.i == i && t.j == j
            })
            .ok_or_else(|| Error::Internal(format!("no e-element at ({i}, {j})")))
    };
    let blocks = a.blocks();
    let first = blocks[0][0];
    e1.push(e_at(first, first)?);
    kinds.push(SlotKind::Border);
    for (bi, block) in blocks.iter().enumerate() {
        let r = block[0];
        if bi > 0 {
            let prev = blocks[bi - 1][0];
            let z = e_at(prev, prev)?;
            let w = e_at(r, r)?;
            e1.push(a.bridge(z, w)?);
            kinds.push(SlotKind::Bridge);
        }
        e1.push(e_at(r, r)?);
        kinds.push(SlotKind::Frame);
        for (i, j) in block_circuit(block) {
            e1.push(e_at(i, j)?);
            kinds.push(SlotKind::Designated);
            e1.push(e_at(j, j)?);
            kinds.push(SlotKind::Frame);
        }
    }
    let last = blocks[blocks.len() - 1][0];
    e1.push(e_at(last, last)?);
    kinds.push(SlotKind::Border);

    let mut counters = [0usize; 3];
    let ids = kinds
        .iter()
        .map(|k| {
            let (c, name) = match k {
                SlotKind::Designated => (0, "x"),
                SlotKind::Extra => (0, "x"),
                SlotKind::Frame => (1, "y"),
                SlotKind::Bridge | SlotKind::Border => (2, "w"),
            };
            counters[c] += 1;
            format!("{name}{}", counters[c])
        })
        .collect();
    let pos = |want: &[SlotKind]| kinds.iter().enumerate().filter(|(_, k)| want.contains(k)).map(|(i, _)| i).collect();
    Ok(WitnessBundle {
        designated: pos(&[SlotKind::Designated]),
        frames: pos(&[SlotKind::Frame]),
        bridges: pos(&[SlotKind::Bridge]),
        e1,
        kinds,
        ids,
    })
}

impl WitnessBundle {
    /// `E₀`: `E₁` without its frames.
    pub fn e0(&self) -> Vec<usize> {
        self.e1.iter().zip(&self.kinds).filter(|(_, k)| **k != SlotKind::Frame).map(|(&b, _)| b).collect()
    }

    /// The designated values `X̂` in slot order.
    pub fn designated_values(&self) -> Vec<usize> {
        self.designated.iter().map(|&p| self.e1[p]).collect()
    }

    /// `Z₁` as a one-monomial polynomial.
    pub fn z1(&self, a: &GradedAlgebra) -> GradedPolynomial {
        let vars: Vec<Var> =
            self.ids.iter().zip(&self.e1).map(|(id, &b)| Var { id: id.clone(), degree: a.degree(b) }).collect();
        let seq = (0..vars.len()).collect();
        GradedPolynomial { vars, monomials: vec![Monomial { coeff: CycScalar::one(1), seq }] }
    }

    /// `Σ_σ sign(σ) Z₁,σ` over the designated variables.
    pub fn p1(&self, a: &GradedAlgebra, caps: &Caps) -> Result<GradedPolynomial> {
        let d = self.designated.len();
        if d > caps.designated {
            return Err(Error::Cap { what: "designated variables", value: d, cap: caps.designated });
        }
        let z1 = self.z1(a);
        let mut monomials = Vec::new();
        for sigma in permutations(d) {
            let mut seq: Vec<usize> = (0..self.e1.len()).collect();
            for (k, &slot) in self.designated.iter().enumerate() {
                seq[slot] = self.designated[sigma[k]];
            }
            monomials.push(Monomial { coeff: CycScalar::from_int(1, sign(&sigma)), seq });
        }
        Ok(GradedPolynomial { vars: z1.vars, monomials })
    }

    /// Conditions on `E₀` and its framing.
    pub fn conditions(&self, a: &GradedAlgebra) -> ConditionReport {
        let h = a.presentation().subgroup();
        let nonzero = a.mul_word(&self.e1).is_some() && a.mul_word(&self.e0()).is_some();
        let values = self.designated_values();
        let set: BTreeSet<usize> = values.iter().copied().collect();
        let covers_delta_e = a.e_basis().iter().all(|b| set.contains(b));
        let designated_distinct = set.len() == values.len();
        let block_of = |b: usize| a.block_of(a.triple(b).i);
        // consecutive Δ_e elements of one block never have a non-e element between them
        let e0 = self.e0();
        let mut blocks_separated_by_e = true;
        let mut last_e: Option<(usize, usize)> = None;
        for (idx, &b) in e0.iter().enumerate() {
            if a.degree(b) == 0 {
                if let Some((prev_idx, prev_block)) = last_e {
                    if prev_block == block_of(b) && e0[prev_idx + 1..idx].iter().any(|&c| a.degree(c) != 0) {
                        blocks_separated_by_e = false;
                    }
                }
                last_e = Some((idx, block_of(b)));
            }
        }
        let visit: Vec<usize> = values.iter().map(|&b| block_of(b)).collect();
        let blocks_in_order = visit.windows(2).all(|w| w[0] <= w[1])
            && visit.first() == Some(&0)
            && visit.iter().collect::<BTreeSet<_>>().len() == a.blocks().len();
        let ends = [0, self.e1.len() - 1];
        let borders_not_designated = ends.iter().all(|&p| self.kinds[p] != SlotKind::Designated);
        let borders_in_delta_e = ends.iter().all(|&p| a.degree(self.e1[p]) == 0);
        let bridges_compliant = self.bridges.iter().all(|&p| {
            let t = a.triple(self.e1[p]);
            let d = a.degree(self.e1[p]);
            match a.relate(t.i, t.j) {
                crate::galgebra::Relation::SameBlock => d == 0,
                crate::galgebra::Relation::RelatedDistinct => d != 0 && h.contains(d),
                crate::galgebra::Relation::Unrelated => !h.contains(d),
            }
        });
        ConditionReport {
            nonzero,
            covers_delta_e,
            designated_distinct,
            blocks_separated_by_e,
            blocks_in_order,
            borders_not_designated,
            borders_in_delta_e,
            bridges_compliant,
        }
    }

    /// Whether `Z₁,σ` has a nonzero value with `X = X̂` and the other variables free.
    pub fn admits(&self, a: &GradedAlgebra, sigma: &[usize]) -> bool {
        let xhat = self.designated_values();
        let mut fixed: Vec<Option<usize>> = vec![None; self.e1.len()];
        for (k, &slot) in self.designated.iter().enumerate() {
            fixed[slot] = Some(xhat[sigma[k]]);
        }
        // reachable current columns after each slot
        let n = a.n();
        let mut reach: Option<Vec<bool>> = None;
        for (slot, &b) in self.e1.iter().enumerate() {
            let options: Vec<BasisTriple> = match fixed[slot] {
                Some(v) => vec![a.triple(v)],
                None => a.of_degree(a.degree(b)).iter().map(|&c| a.triple(c)).collect(),
            };
            let mut next = vec![false; n];
            for t in options {
                if reach.as_ref().map_or(true, |r| r[t.i]) {
                    next[t.j] = true;
                }
            }
            if !next.iter().any(|&x| x) {
                return false;
            }
            reach = Some(next);
        }
        true
    }

    /// `Ad`: permutations of the designated variables admitting a nonzero value.
    pub fn nonvanishing_set(&self, a: &GradedAlgebra, caps: &Caps, exec: Exec) -> Result<Vec<Vec<usize>>> {
        let d = self.designated.len();
        if d > caps.designated {
            return Err(Error::Cap { what: "designated variables", value: d, cap: caps.designated });
        }
        let perms = permutations(d);
        let keep = par::map(exec, 0..perms.len(), |i| self.admits(a, &perms[i]));
        Ok(perms.into_iter().zip(keep).filter(|(_, k)| *k).map(|(p, _)| p).collect())
    }
}

/// All permutations of `0..d` in lexicographic order.
pub fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..d).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (1..d).rev().find(|&i| cur[i - 1] < cur[i]) else {
            break;
        };
        let j = (i..d).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

pub fn sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::pi::{evaluate, Evaluator};

    fn alg(p: &crate::Presentation) -> GradedAlgebra {
        GradedAlgebra::build(p, &Caps::default()).unwrap()
    }

    fn pairs(a: &GradedAlgebra, seq: &[usize]) -> Vec<(usize, usize)> {
        seq.iter().map(|&b| a.triple(b)).map(|t| (t.i + 1, t.j + 1)).collect()
    }

    #[test]
    fn matrix_example_layout() {
        let a = alg(&corpus::matrix_e_e_g());
        let w = build_witness(&a).unwrap();
        assert_eq!(
            pairs(&a, &w.e0()),
            vec![(1, 1), (1, 1), (1, 2), (2, 2), (2, 1), (1, 3), (3, 3), (3, 3)]
        );
        assert_eq!(w.ids.join(" "), "w1 y1 x1 y2 x2 y3 x3 y4 x4 y5 w2 y6 x5 y7 w3");
        assert!(w.conditions(&a).all(), "{:?}", w.conditions(&a));
        let ad = w.nonvanishing_set(&a, &Caps::default(), Exec::Sequential).unwrap();
        assert!(ad.contains(&vec![0, 1, 2, 3, 4]));
        assert!(ad.iter().all(|s| s[4] == 4));
        assert_eq!(ad.len(), 24);
    }

    #[test]
    fn admits_matches_brute_force() {
        for p in [corpus::matrix_e_g(), corpus::pauli_presentation(), corpus::trivial_presentation()] {
            let a = alg(&p);
            let w = build_witness(&a).unwrap();
            let z1 = w.z1(&a);
            let xhat = w.designated_values();
            for sigma in permutations(w.designated.len()) {
                let mut cands: Vec<Vec<usize>> = w.e1.iter().map(|&b| a.of_degree(a.degree(b)).to_vec()).collect();
                for (k, &slot) in w.designated.iter().enumerate() {
                    cands[slot] = vec![xhat[sigma[k]]];
                }
                let mut z1s = z1.clone();
                for (k, &slot) in w.designated.iter().enumerate() {
                    z1s.monomials[0].seq[slot] = w.designated[sigma[k]];
                }
                let ev = Evaluator::new(&z1s, &a);
                let brute = ev.find_nonzero(&cands_for_vars(&cands, &z1s), Exec::Sequential).is_some();
                assert_eq!(brute, w.admits(&a, &sigma), "{sigma:?}");
            }
        }
    }

    /// Candidates indexed by variable rather than slot.
    fn cands_for_vars(slot_cands: &[Vec<usize>], z: &GradedPolynomial) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); z.vars.len()];
        for (slot, &v) in z.monomials[0].seq.iter().enumerate() {
            out[v] = slot_cands[slot].clone();
        }
        out
    }

    #[test]
    fn p1_alternates() {
        let a = alg(&corpus::matrix_e_g());
        let w = build_witness(&a).unwrap();
        let p1 = w.p1(&a, &Caps::default()).unwrap();
        assert_eq!(p1.monomials().len(), 2);
        let asg: Vec<usize> = w.e1.clone();
        assert!(!evaluate(&p1, &a, &asg).unwrap().is_zero());
        let d6 = alg(&corpus::d6_presentation());
        assert!(build_witness(&d6).unwrap().p1(&d6, &Caps::default()).is_err());
    }

    #[test]
    fn e23_bridge_vanishes() {
        let a = alg(&corpus::matrix_e_e_g());
        let e = |i: usize, j: usize| a.basis(0, i - 1, j - 1).unwrap();
        assert!(a.mul_word(&[e(1, 1), e(1, 2), e(2, 2), e(2, 1), e(2, 3), e(3, 3)]).is_none());
        assert!(a.mul_word(&[e(1, 1), e(1, 2), e(2, 2), e(2, 1), e(1, 3), e(3, 3)]).is_some());
    }

    #[test]
    fn permutation_helpers() {
        assert_eq!(permutations(3).len(), 6);
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
        assert_eq!(sign(&[1, 0, 2]), -1);
        assert_eq!(sign(&[1, 2, 0]), 1);
    }
}
