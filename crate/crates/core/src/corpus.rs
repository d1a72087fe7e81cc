//! Small groups, cocycles and presentations used by tests, benches and the CLI.

use std::sync::Arc;

use crate::group::{Elem, Group, Subgroup};
use crate::presentation::Presentation;
use crate::twisted::Cocycle;

/// `(Z/p)^k` with index `Σ x_i p^i`.
pub fn elementary_abelian(p: usize, k: usize) -> Group {
    let order = p.pow(k as u32);
    Group::from_fn(order, |a, b| {
        let (mut a, mut b, mut out, mut scale) = (a, b, 0, 1);
        for _ in 0..k {
            out += ((a % p + b % p) % p) * scale;
            a /= p;
            b /= p;
            scale *= p;
        }
        out
    })
    .expect("elementary abelian table")
}

/// Dihedral group of order `2n` acting on an `n`-gon.
pub fn dihedral(n: usize) -> Group {
    let rot: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let refl: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    Group::from_permutations(&[rot, refl], n, usize::MAX).expect("dihedral closure")
}

/// `Sym(3)` from σ = (1 2 3) and τ = (1 2), elements `e, σ, τ, σ², στ, σ²τ`.
pub fn d6() -> Arc<Group> {
    let g = Group::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]], 3, usize::MAX).expect("D6 closure");
    let names = ["e", "s", "t", "s2", "st", "s2t"].map(String::from).to_vec();
    Arc::new(g.with_names(names).expect("six names"))
}

pub fn d6_sigma(_: &Group) -> Elem {
    1
}

pub fn d6_tau(_: &Group) -> Elem {
    2
}

/// `(Z/p)² ⋊ Z/2` with the generator of `Z/2` swapping coordinates.
/// Index `x₁ + p·x₂ + p²·s`.
pub fn swap_product(p: usize) -> Group {
    let sq = p * p;
    let split = |x: usize| (x % p, (x / p) % p, x / sq);
    Group::from_fn(2 * sq, move |a, b| {
        let (a1, a2, s) = split(a);
        let (b1, b2, t) = split(b);
        let (c1, c2) = if s == 1 { (b2, b1) } else { (b1, b2) };
        (a1 + c1) % p + p * ((a2 + c2) % p) + sq * ((s + t) % 2)
    })
    .expect("semidirect product table")
}

/// The involution of [`swap_product`]`(3)`.
pub fn swap_involution() -> Elem {
    9
}

/// The involution of [`swap_product`]`(2)`.
pub fn d8_swap() -> Elem {
    4
}

pub fn quaternion() -> Group {
    // index 4·sign + unit, units 1, i, j, k
    const UNIT: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    Group::from_fn(8, |a, b| {
        let (s, u) = UNIT[a % 4][b % 4];
        4 * ((a / 4 + b / 4 + s) % 2) + u
    })
    .expect("quaternion table")
}

pub fn alternating4() -> Group {
    Group::from_permutations(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], 4, usize::MAX).expect("A4 closure")
}

/// Every group of order ≤ 16 used by randomized tests.
pub fn small_groups() -> Vec<Arc<Group>> {
    let mut out = vec![Group::cyclic(1)];
    out.extend((2..=16).map(Group::cyclic));
    out.push(elementary_abelian(2, 2));
    out.push(elementary_abelian(2, 3));
    out.push(elementary_abelian(2, 4));
    out.push(Group::direct_product(&Group::cyclic(2), &Group::cyclic(4)));
    out.push(Group::direct_product(&Group::cyclic(2), &Group::cyclic(6)));
    out.push(elementary_abelian(3, 2));
    out.push(dihedral(3));
    out.push(dihedral(4));
    out.push(dihedral(5));
    out.push(dihedral(6));
    out.push(dihedral(8));
    out.push(quaternion());
    out.push(alternating4());
    out.push(Group::direct_product(&dihedral(3), &Group::cyclic(2)));
    out.push(Group::direct_product(&quaternion(), &Group::cyclic(2)));
    out.push(swap_product(2));
    out.into_iter().map(Arc::new).collect()
}

/// `α((x₁,x₂),(y₁,y₂)) = x₂y₁` on `(Z/p)²`, values in `μ_p`.
pub fn bicharacter(h: Arc<Subgroup>, p: usize, local: impl Fn(Elem) -> Elem) -> Cocycle {
    Cocycle::from_fn(h, p as u32, |a, b| {
        let (a, b) = (local(a), local(b));
        ((a / p) * (b % p)) as i64
    })
}

/// Pauli cocycle on `Z/2 × Z/2` with `G = H`.
pub fn pauli_cocycle() -> (Arc<Subgroup>, Cocycle) {
    let g = Arc::new(elementary_abelian(2, 2));
    let h = Arc::new(Subgroup::whole(g));
    let alpha = bicharacter(h.clone(), 2, |x| x);
    (h, alpha)
}

/// Pauli cocycle on the normal Klein subgroup of [`swap_product`]`(2)`.
pub fn pauli_in_d8() -> (Arc<Subgroup>, Cocycle) {
    let g = Arc::new(swap_product(2));
    let h = Arc::new(Subgroup::new(g, &[0, 1, 2, 3]).expect("Klein subgroup"));
    let alpha = bicharacter(h.clone(), 2, |x| x);
    (h, alpha)
}

/// `x₂y₁` modulo 3 on `(Z/3)²` with `G = H`.
pub fn z3sq_cocycle() -> (Arc<Subgroup>, Cocycle) {
    let g = Arc::new(elementary_abelian(3, 2));
    let h = Arc::new(Subgroup::whole(g));
    let alpha = bicharacter(h.clone(), 3, |x| x);
    (h, alpha)
}

/// `x₂y₁` modulo 3 on the normal `(Z/3)²` of [`swap_product`]`(3)`.
pub fn z3sq_swap_cocycle() -> (Arc<Group>, Arc<Subgroup>, Cocycle) {
    let g = Arc::new(swap_product(3));
    let h = Arc::new(Subgroup::new(g.clone(), &(0..9).collect::<Vec<_>>()).expect("normal subgroup"));
    let alpha = bicharacter(h.clone(), 3, |x| x);
    (g, h, alpha)
}

/// D6 with trivial `H` and tuple `(e,e,τ,τ,σ,σ,σ²τ,σ²τ)`.
pub fn d6_presentation() -> Presentation {
    let g = d6();
    let h = Arc::new(Subgroup::trivial(g));
    let tuple = vec![0, 0, 2, 2, 1, 1, 5, 5];
    Presentation::new(Cocycle::trivial(h, 1), tuple).expect("D6 presentation")
}

pub fn pauli_presentation() -> Presentation {
    let (_, alpha) = pauli_cocycle();
    Presentation::new(alpha, vec![0]).expect("Pauli presentation")
}

/// `(Z/3)² ⋊ Z/2`, `H = (Z/3)²`, tuple `(e, t)`.
pub fn swap_presentation() -> Presentation {
    let (_, _, alpha) = z3sq_swap_cocycle();
    Presentation::new(alpha, vec![0, swap_involution()]).expect("swap presentation")
}

/// `G = H = (Z/3)²` with the `x₂y₁` cocycle and tuple `(e)`.
pub fn z3sq_presentation() -> Presentation {
    let (_, alpha) = z3sq_cocycle();
    Presentation::new(alpha, vec![0]).expect("Z3² presentation")
}

/// `M₃` graded by `Z/2` through the tuple `(e, e, g)`.
pub fn matrix_e_e_g() -> Presentation {
    let g = Arc::new(Group::cyclic(2));
    let h = Arc::new(Subgroup::trivial(g));
    Presentation::new(Cocycle::trivial(h, 1), vec![0, 0, 1]).expect("elementary grading")
}

/// `M₂` graded by `Z/2` through `(e, g)`.
pub fn matrix_e_g() -> Presentation {
    let g = Arc::new(Group::cyclic(2));
    let h = Arc::new(Subgroup::trivial(g));
    Presentation::new(Cocycle::trivial(h, 1), vec![0, 1]).expect("elementary grading")
}

/// The ground field graded by the trivial group.
pub fn trivial_presentation() -> Presentation {
    let g = Arc::new(Group::cyclic(1));
    let h = Arc::new(Subgroup::trivial(g));
    Presentation::new(Cocycle::trivial(h, 1), vec![0]).expect("trivial presentation")
}

/// Named corpus presentations.
pub fn presentations() -> Vec<(&'static str, Presentation)> {
    vec![
        ("trivial", trivial_presentation()),
        ("d6", d6_presentation()),
        ("pauli", pauli_presentation()),
        ("z3sq", z3sq_presentation()),
        ("swap", swap_presentation()),
        ("matrix_eeg", matrix_e_e_g()),
        ("matrix_eg", matrix_e_g()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(d6().order(), 6);
        assert_eq!(dihedral(4).order(), 8);
        assert_eq!(quaternion().order(), 8);
        assert!(!quaternion().is_abelian());
        assert_eq!(alternating4().order(), 12);
        assert_eq!(swap_product(3).order(), 18);
        assert_eq!(elementary_abelian(2, 3).order(), 8);
        assert!(small_groups().iter().all(|g| g.order() <= 16));
    }

    #[test]
    fn d6_names_match_products() {
        let g = d6();
        let (s, t) = (d6_sigma(&g), d6_tau(&g));
        assert_eq!(g.mul(s, s), 3);
        assert_eq!(g.mul(s, t), 4);
        assert_eq!(g.mul(t, s), 5);
        assert_eq!(g.mul(3, t), 5);
        assert_eq!(g.name(5), "s2t");
    }

    #[test]
    fn quaternion_relations() {
        let q = quaternion();
        let (i, j, k, minus) = (1, 2, 3, 4);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), minus + k);
        assert_eq!(q.mul(i, i), minus);
        assert_eq!(q.element_order(i), 4);
    }

    #[test]
    fn swap_involution_swaps() {
        let g = swap_product(3);
        let t = swap_involution();
        assert_eq!(g.conj(t, 1), 3);
        assert_eq!(g.mul(t, t), 0);
    }
}
