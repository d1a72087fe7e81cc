//! Linear algebra over `Z/M` for composite `M`: diagonalization `U·A·V = D`
//! by unimodular row and column operations, with solving, kernels and
//! quotient modules built on top.

use num_integer::Integer;

fn inv_mod(a: u64, m: u64) -> Option<u64> {
    let e = (a as i64).extended_gcd(&(m as i64));
    (e.gcd == 1).then(|| e.x.rem_euclid(m as i64) as u64)
}

/// A unit `u` with `v·u ≡ gcd(v, m) (mod m)`.
fn normalizing_unit(v: u64, m: u64) -> u64 {
    let g = v.gcd(&m);
    let mp = m / g;
    let u0 = if mp == 1 { 1 } else { inv_mod(v / g % mp, mp).expect("coprime after division") };
    (0..g)
        .map(|k| u0 + k * mp)
        .find(|&u| u.gcd(&m) == 1)
        .expect("a unit lift always exists")
}

#[derive(Debug, Clone)]
pub struct Smith {
    pub m: u64,
    pub rows: usize,
    pub cols: usize,
    /// Diagonal entries `D[i][i]` for `i < min(rows, cols)`.
    pub d: Vec<u64>,
    pub v: Vec<Vec<u64>>,
    pub v_inv: Vec<Vec<u64>>,
    pub u: Option<Vec<Vec<u64>>>,
    pub u_inv: Option<Vec<Vec<u64>>>,
    /// Right-hand sides carried through the row operations (`U·b`).
    pub rhs: Vec<Vec<u64>>,
}

fn identity(n: usize) -> Vec<Vec<u64>> {
    (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect()
}

/// Diagonalizes `a` (rows × cols) modulo `m`.
pub fn smith(a: &[Vec<u64>], cols: usize, m: u64, track_u: bool, rhs: Vec<Vec<u64>>) -> Smith {
    let rows = a.len();
    let mut a: Vec<Vec<u64>> = a.iter().map(|r| r.iter().map(|&x| x % m).collect()).collect();
    let mut rhs: Vec<Vec<u64>> = rhs.into_iter().map(|b| b.into_iter().map(|x| x % m).collect()).collect();
    let mut v = identity(cols);
    let mut v_inv = identity(cols);
    let mut u = track_u.then(|| identity(rows));
    let mut u_inv = track_u.then(|| identity(rows));
    let sub = |x: u64, y: u64| (x + m - y) % m;

    // R_i -= q R_t
    let row_op = |a: &mut Vec<Vec<u64>>,
                  rhs: &mut Vec<Vec<u64>>,
                  u: &mut Option<Vec<Vec<u64>>>,
                  u_inv: &mut Option<Vec<Vec<u64>>>,
                  i: usize,
                  t: usize,
                  q: u64| {
        if q == 0 {
            return;
        }
        let (ri, rt) = if i < t {
            let (lo, hi) = a.split_at_mut(t);
            (&mut lo[i], &hi[0])
        } else {
            let (lo, hi) = a.split_at_mut(i);
            (&mut hi[0], &lo[t])
        };
        for (x, &y) in ri.iter_mut().zip(rt.iter()) {
            if y != 0 {
                *x = sub(*x, q * y % m);
            }
        }
        for b in rhs.iter_mut() {
            b[i] = sub(b[i], q * b[t] % m);
        }
        if let Some(u) = u {
            let rt = u[t].clone();
            for (x, y) in u[i].iter_mut().zip(rt) {
                *x = sub(*x, q * y % m);
            }
        }
        if let Some(ui) = u_inv {
            for row in ui.iter_mut() {
                row[t] = (row[t] + q * row[i]) % m;
            }
        }
    };

    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero residue in the remaining block
        let mut best: Option<(u64, usize, usize)> = None;
        for (i, row) in a.iter().enumerate().skip(t) {
            for (j, &x) in row.iter().enumerate().skip(t) {
                if x != 0 && best.map_or(true, |(b, _, _)| x.gcd(&m) < b.gcd(&m) || (x.gcd(&m) == b.gcd(&m) && x < b)) {
                    best = Some((x, i, j));
                }
            }
        }
        let Some((_, pi, pj)) = best else { break };
        if pi != t {
            a.swap(pi, t);
            for b in rhs.iter_mut() {
                b.swap(pi, t);
            }
            if let Some(u) = &mut u {
                u.swap(pi, t);
            }
            if let Some(ui) = &mut u_inv {
                for row in ui.iter_mut() {
                    row.swap(pi, t);
                }
            }
        }
        if pj != t {
            for row in a.iter_mut() {
                row.swap(pj, t);
            }
            for row in v.iter_mut() {
                row.swap(pj, t);
            }
            v_inv.swap(pj, t);
        }
        // scale the pivot row so the pivot becomes gcd(pivot, m)
        let w = normalizing_unit(a[t][t], m);
        if w != 1 {
            for x in a[t].iter_mut() {
                *x = *x * w % m;
            }
            for b in rhs.iter_mut() {
                b[t] = b[t] * w % m;
            }
            if let Some(u) = &mut u {
                for x in u[t].iter_mut() {
                    *x = *x * w % m;
                }
            }
            if let Some(ui) = &mut u_inv {
                let wi = inv_mod(w, m).expect("unit");
                for row in ui.iter_mut() {
                    row[t] = row[t] * wi % m;
                }
            }
        }
        let p = a[t][t];
        let mut restart = false;
        for i in 0..rows {
            if i == t || a[i][t] == 0 {
                continue;
            }
            let q = a[i][t] / p;
            row_op(&mut a, &mut rhs, &mut u, &mut u_inv, i, t, q);
            if a[i][t] != 0 {
                restart = true;
            }
        }
        for j in 0..cols {
            if j == t || a[t][j] == 0 {
                continue;
            }
            let q = a[t][j] / p;
            // C_j -= q C_t
            for row in a.iter_mut() {
                let y = row[t];
                if y != 0 {
                    row[j] = sub(row[j], q * y % m);
                }
            }
            for row in v.iter_mut() {
                let y = row[t];
                row[j] = sub(row[j], q * y % m);
            }
            let rj = v_inv[j].clone();
            for (x, y) in v_inv[t].iter_mut().zip(rj) {
                *x = (*x + q * y) % m;
            }
            if a[t][j] != 0 {
                restart = true;
            }
        }
        if !restart {
            t += 1;
        }
    }
    let d = (0..rows.min(cols)).map(|i| a[i][i]).collect();
    Smith { m, rows, cols, d, v, v_inv, u, u_inv, rhs }
}

fn mat_vec(a: &[Vec<u64>], x: &[u64], m: u64) -> Vec<u64> {
    a.iter()
        .map(|row| row.iter().zip(x).fold(0u64, |acc, (&r, &y)| (acc + r * y) % m))
        .collect()
}

/// One solution of `A·x ≡ b (mod m)`, if any.
pub fn solve(a: &[Vec<u64>], cols: usize, b: &[u64], m: u64) -> Option<Vec<u64>> {
    if m == 1 {
        return Some(vec![0; cols]);
    }
    let s = smith(a, cols, m, false, vec![b.to_vec()]);
    let c = &s.rhs[0];
    let mut y = vec![0u64; cols];
    for (i, &ci) in c.iter().enumerate() {
        let di = s.d.get(i).copied().unwrap_or(0);
        if di == 0 {
            if ci != 0 {
                return None;
            }
            continue;
        }
        let g = di.gcd(&m);
        if ci % g != 0 {
            return None;
        }
        let mg = m / g;
        y[i] = if mg == 1 { 0 } else { (ci / g) % mg * inv_mod(di / g % mg, mg).expect("unit") % mg };
    }
    Some(mat_vec(&s.v, &y, m))
}

/// The kernel of `A` modulo `m` as a direct sum of cyclic pieces.
#[derive(Debug, Clone)]
pub struct Kernel {
    pub m: u64,
    /// Generators with their additive orders (all > 1).
    pub gens: Vec<(Vec<u64>, u64)>,
    v_inv: Vec<Vec<u64>>,
    /// For each generator: the coordinate index in `V⁻¹·x` and its scale `m/order`.
    slots: Vec<(usize, u64)>,
}

impl Kernel {
    /// Coordinates of a kernel element along `gens`.
    pub fn coords(&self, x: &[u64]) -> Vec<u64> {
        let y = mat_vec(&self.v_inv, x, self.m);
        self.gens
            .iter()
            .zip(&self.slots)
            .map(|((_, order), &(i, scale))| {
                debug_assert_eq!(y[i] % scale, 0);
                (y[i] / scale) % order
            })
            .collect()
    }
}

pub fn kernel(a: &[Vec<u64>], cols: usize, m: u64) -> Kernel {
    let s = smith(a, cols, m, false, Vec::new());
    let mut gens = Vec::new();
    let mut slots = Vec::new();
    for i in 0..cols {
        let di = s.d.get(i).copied().unwrap_or(0);
        let order = if di == 0 { m } else { di.gcd(&m) };
        if order == 1 {
            continue;
        }
        let scale = m / order;
        let col: Vec<u64> = s.v.iter().map(|row| row[i] * scale % m).collect();
        gens.push((col, order));
        slots.push((i, scale));
    }
    Kernel { m, gens, v_inv: s.v_inv, slots }
}

/// `(Z/m)^k / span(relations)` presented as `⊕ Z/orders[i]`.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub m: u64,
    /// Invariant orders (all > 1) and the matching generator vectors in `(Z/m)^k`.
    pub orders: Vec<u64>,
    pub gens: Vec<Vec<u64>>,
    u: Vec<Vec<u64>>,
    slots: Vec<usize>,
}

impl Quotient {
    /// Canonical coordinates of the class of `x`.
    pub fn coords(&self, x: &[u64]) -> Vec<u64> {
        let y = mat_vec(&self.u, x, self.m);
        self.slots.iter().zip(&self.orders).map(|(&i, &o)| y[i] % o).collect()
    }

    pub fn size(&self) -> u128 {
        self.orders.iter().map(|&o| o as u128).product()
    }
}

pub fn quotient(k: usize, relations: &[Vec<u64>], m: u64) -> Quotient {
    // columns of the k × r matrix are the relations
    let a: Vec<Vec<u64>> = (0..k).map(|i| relations.iter().map(|r| r[i] % m).collect()).collect();
    let s = smith(&a, relations.len(), m, true, Vec::new());
    let u = s.u.expect("tracked");
    let u_inv = s.u_inv.expect("tracked");
    let mut orders = Vec::new();
    let mut gens = Vec::new();
    let mut slots = Vec::new();
    for i in 0..k {
        let di = s.d.get(i).copied().unwrap_or(0);
        let order = if di == 0 { m } else { di.gcd(&m) };
        if order == 1 {
            continue;
        }
        orders.push(order);
        gens.push(u_inv.iter().map(|row| row[i]).collect());
        slots.push(i);
    }
    Quotient { m, orders, gens, u, slots }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check(a: &[Vec<u64>], cols: usize, m: u64) {
        let s = smith(a, cols, m, true, Vec::new());
        let u = s.u.as_ref().unwrap();
        let ui = s.u_inv.as_ref().unwrap();
        let mul = |x: &[Vec<u64>], y: &[Vec<u64>], inner: usize| -> Vec<Vec<u64>> {
            x.iter()
                .map(|row| (0..y[0].len()).map(|j| (0..inner).fold(0, |acc, k| (acc + row[k] * y[k][j]) % m)).collect())
                .collect()
        };
        let uav = mul(&mul(u, a, a.len()), &s.v, cols);
        for (i, row) in uav.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let expect = if i == j { s.d[i] } else { 0 };
                assert_eq!(x, expect, "entry ({i},{j})");
            }
        }
        assert_eq!(mul(u, ui, a.len()), identity(a.len()));
        assert_eq!(mul(&s.v, &s.v_inv, cols), identity(cols));
    }

    #[test]
    fn diagonalizes_composite_modulus() {
        check(&[vec![2, 3], vec![4, 6], vec![1, 5]], 2, 12);
        check(&[vec![6, 4, 2], vec![3, 9, 3]], 3, 12);
        check(&[vec![0, 0], vec![0, 0]], 2, 8);
    }

    #[test]
    fn solve_respects_zero_divisors() {
        // 2x ≡ 1 mod 4 has no solution; 2x ≡ 2 does.
        assert!(solve(&[vec![2]], 1, &[1], 4).is_none());
        let x = solve(&[vec![2]], 1, &[2], 4).unwrap();
        assert_eq!(2 * x[0] % 4, 2);
        // 2x + y ≡ 0, 2y ≡ 2 mod 4 is inconsistent
        assert!(solve(&[vec![2, 1], vec![0, 2]], 2, &[0, 2], 4).is_none());
    }

    #[test]
    fn kernel_of_scalar_map() {
        let k = kernel(&[vec![2]], 1, 6);
        assert_eq!(k.gens.len(), 1);
        assert_eq!(k.gens[0].1, 2);
        assert_eq!(k.gens[0].0, vec![3]);
        assert_eq!(k.coords(&[3]), vec![1]);
    }

    #[test]
    fn quotient_of_cyclic_module() {
        let q = quotient(1, &[vec![4]], 12);
        assert_eq!(q.orders, vec![4]);
        assert_eq!(q.coords(&[4]), vec![0]);
        assert_eq!(q.coords(&[5]), q.coords(&[1]));
    }
}
