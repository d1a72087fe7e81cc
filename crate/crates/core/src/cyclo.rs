//! Exact arithmetic in `Q(ζ_m)` on the power basis modulo `Φ_m`, the Galois
//! action `ζ ↦ ζ^j`, and fixed subfields `Q(ζ_n)^U`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error, Result};

pub fn euler_phi(m: u32) -> u32 {
    (1..=m).filter(|&j| j.gcd(&m) == 1).count() as u32
}

/// Units modulo `m`; modulo 1 the single unit is written `1`.
pub fn units_mod(m: u32) -> Vec<u32> {
    if m == 1 {
        return vec![1];
    }
    (1..m).filter(|&j| j.gcd(&m) == 1).collect()
}

/// `j mod n` with the same convention as [`units_mod`].
pub fn reduce_unit(j: u64, n: u32) -> u32 {
    if n == 1 {
        1
    } else {
        (j % n as u64) as u32
    }
}

/// Integer coefficients of `Φ_m`, lowest degree first.
pub fn cyclotomic_poly(m: u32) -> Vec<i64> {
    // x^m - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in (1..m).filter(|d| m % d == 0) {
        let div = cyclotomic_poly(d);
        num = monic_div(&num, &div);
    }
    num
}

fn monic_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    q
}

struct Ctx {
    phi: usize,
    /// Power-basis coordinates of `ζ^e` for `0 ≤ e < m`.
    pow: Vec<Vec<i64>>,
}

fn ctx(m: u32) -> Arc<Ctx> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<Ctx>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(c) = cache.lock().expect("cyclotomic cache").get(&m) {
        return c.clone();
    }
    let poly = cyclotomic_poly(m);
    let phi = poly.len() - 1;
    let mut pow = Vec::with_capacity(m as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..m {
        pow.push(cur.clone());
        // multiply by ζ and reduce x^φ = -Σ poly[i] x^i
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        for i in 0..phi {
            cur[i] -= top * poly[i];
        }
    }
    let c = Arc::new(Ctx { phi, pow });
    cache.lock().expect("cyclotomic cache").insert(m, c.clone());
    c
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// An element of `Q(ζ_m)` in canonical power-basis form.
#[derive(Clone, Debug)]
pub struct CycScalar {
    modulus: u32,
    coeffs: Vec<BigRational>,
}

impl CycScalar {
    pub fn zero(m: u32) -> Self {
        let phi = ctx(m).phi;
        CycScalar { modulus: m, coeffs: vec![BigRational::zero(); phi] }
    }

    pub fn one(m: u32) -> Self {
        Self::from_rational(m, BigRational::one())
    }

    pub fn from_int(m: u32, n: i64) -> Self {
        Self::from_rational(m, rat(n))
    }

    pub fn from_rational(m: u32, q: BigRational) -> Self {
        let mut x = Self::zero(m);
        x.coeffs[0] = q;
        x
    }

    /// `ζ_m^e` for any integer `e`.
    pub fn root(m: u32, e: i64) -> Self {
        let e = e.rem_euclid(m as i64) as usize;
        let c = ctx(m);
        CycScalar { modulus: m, coeffs: c.pow[e].iter().map(|&v| rat(v)).collect() }
    }

    /// Reduces a group-ring vector `Σ v_e ζ^e` (`e < m`).
    pub fn from_group_ring(m: u32, v: &[BigRational]) -> Self {
        let c = ctx(m);
        let mut coeffs = vec![BigRational::zero(); c.phi];
        for (e, ve) in v.iter().enumerate() {
            if ve.is_zero() {
                continue;
            }
            for (i, &p) in c.pow[e].iter().enumerate() {
                if p != 0 {
                    coeffs[i] += ve * rat(p);
                }
            }
        }
        CycScalar { modulus: m, coeffs }
    }

    pub fn from_coeffs(m: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        if m == 0 {
            return invalid("modulus must be positive");
        }
        let phi = ctx(m).phi;
        if coeffs.len() != phi {
            return invalid(format!("modulus {m} needs {phi} coefficients, got {}", coeffs.len()));
        }
        Ok(CycScalar { modulus: m, coeffs })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn rational_part(&self) -> Option<BigRational> {
        self.is_rational().then(|| self.coeffs[0].clone())
    }

    /// Re-expresses `self` at modulus `big`, a multiple of the current modulus.
    pub fn promote(&self, big: u32) -> Self {
        if big == self.modulus {
            return self.clone();
        }
        assert!(big % self.modulus == 0, "modulus {big} is not a multiple of {}", self.modulus);
        let step = (big / self.modulus) as usize;
        let mut v = vec![BigRational::zero(); big as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i * step] = c.clone();
        }
        Self::from_group_ring(big, &v)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        if a.modulus == b.modulus {
            return (a.clone(), b.clone());
        }
        let m = a.modulus.lcm(&b.modulus);
        (a.promote(m), b.promote(m))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = Self::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (mut a, b) = Self::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x -= y;
        }
        a
    }

    pub fn neg(&self) -> Self {
        CycScalar { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CycScalar { modulus: self.modulus, coeffs: self.coeffs.iter().map(|c| c * q).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::common(self, other);
        let m = a.modulus as usize;
        let mut v = vec![BigRational::zero(); m];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    v[(i + j) % m] += x * y;
                }
            }
        }
        Self::from_group_ring(a.modulus, &v)
    }

    /// Multiplication by `ζ_m^e` at the scalar's own modulus (`m` must divide it).
    pub fn mul_root(&self, m: u32, e: i64) -> Self {
        let big = self.modulus.lcm(&m);
        let x = self.promote(big);
        let shift = (e.rem_euclid(m as i64) as usize) * (big / m) as usize;
        let mut v = vec![BigRational::zero(); big as usize];
        for (i, c) in x.coeffs.iter().enumerate() {
            v[(i + shift) % big as usize] = c.clone();
        }
        Self::from_group_ring(big, &v)
    }

    /// Galois automorphism `ζ_m ↦ ζ_m^j`.
    pub fn galois(&self, j: u32) -> Result<Self> {
        let m = self.modulus;
        if (j as u64).gcd(&(m as u64)) != 1 && m > 1 {
            return invalid(format!("{j} is not a unit modulo {m}"));
        }
        let mut v = vec![BigRational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[(i as u64 * j as u64 % m as u64) as usize] += c;
        }
        Ok(Self::from_group_ring(m, &v))
    }

    /// Product of all Galois conjugates; a rational number.
    pub fn norm(&self) -> BigRational {
        let mut acc = CycScalar::one(self.modulus);
        for j in units_mod(self.modulus) {
            acc = acc.mul(&self.galois(j).expect("unit"));
        }
        acc.coeffs[0].clone()
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Precondition("division by zero".into()));
        }
        // x⁻¹ = (Π_{j≠1} σ_j(x)) / N(x)
        let mut acc = CycScalar::one(self.modulus);
        for j in units_mod(self.modulus).into_iter().filter(|&j| j > 1) {
            acc = acc.mul(&self.galois(j)?);
        }
        let n = self.mul(&acc).coeffs[0].clone();
        Ok(acc.scale(&n.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.modulus == other.modulus {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for CycScalar {}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => c.to_string(),
                1 => format!("({c})·ζ{}", self.modulus),
                _ => format!("({c})·ζ{}^{i}", self.modulus),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

fn int_to_json(n: &BigInt) -> serde_json::Value {
    match n.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(n.to_string()),
    }
}

fn json_to_int(v: &serde_json::Value) -> std::result::Result<BigInt, String> {
    match v {
        serde_json::Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| format!("{n} is not an integer")),
        serde_json::Value::String(s) => s.parse().map_err(|_| format!("`{s}` is not an integer")),
        other => Err(format!("{other} is not an integer")),
    }
}

#[derive(Serialize, Deserialize)]
struct ScalarRepr {
    modulus: u32,
    coeffs: Vec<[serde_json::Value; 2]>,
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ScalarRepr {
            modulus: self.modulus,
            coeffs: self.coeffs.iter().map(|c| [int_to_json(c.numer()), int_to_json(c.denom())]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ScalarRepr::deserialize(d)?;
        let mut coeffs = Vec::with_capacity(repr.coeffs.len());
        for [n, q] in &repr.coeffs {
            let n = json_to_int(n).map_err(D::Error::custom)?;
            let q = json_to_int(q).map_err(D::Error::custom)?;
            if q.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            coeffs.push(BigRational::new(n, q));
        }
        if repr.modulus == 0 {
            return Err(D::Error::custom("modulus must be positive"));
        }
        CycScalar::from_coeffs(repr.modulus, coeffs).map_err(D::Error::custom)
    }
}

/// The fixed field `Q(ζ_n)^U` for a subgroup `U` of the units mod `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubfieldDescriptor {
    n: u32,
    units: Vec<u32>,
}

impl SubfieldDescriptor {
    /// Closes `generators` (taken mod `n`) to a subgroup of `(Z/n)*`.
    pub fn from_generators(n: u32, generators: &[u32]) -> Result<Self> {
        if n == 0 {
            return invalid("conductor must be positive");
        }
        let mut units = vec![1];
        for &g in generators {
            let g = reduce_unit(g as u64, n);
            if n > 1 && g.gcd(&n) != 1 {
                return invalid(format!("{g} is not a unit modulo {n}"));
            }
            let mut i = 0;
            while i < units.len() {
                let p = reduce_unit(units[i] as u64 * g as u64, n);
                if !units.contains(&p) {
                    units.push(p);
                }
                i += 1;
            }
        }
        units.sort_unstable();
        Ok(SubfieldDescriptor { n, units })
    }

    pub fn rationals() -> Self {
        SubfieldDescriptor { n: 1, units: vec![1] }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn units(&self) -> &[u32] {
        &self.units
    }

    /// `[k : Q] = φ(n)/|U|`.
    pub fn degree(&self) -> usize {
        euler_phi(self.n) as usize / self.units.len()
    }

    pub fn is_rationals(&self) -> bool {
        self.degree() == 1
    }

    /// Membership of `x` in `Q(ζ_n)^U`, tested inside `Q(ζ_L)`, `L = lcm(n, m)`:
    /// `x` must be fixed by every `j ∈ (Z/L)*` whose residue mod `n` lies in `U`.
    pub fn contains(&self, x: &CycScalar) -> bool {
        let l = self.n.lcm(&x.modulus());
        let xl = x.promote(l);
        units_mod(l)
            .into_iter()
            .filter(|&j| self.units.contains(&reduce_unit(j as u64, self.n)))
            .all(|j| xl.galois(j).expect("unit") == xl)
    }

    /// A `Q`-basis of the fixed field, as traces of `ζ_n^i`.
    pub fn basis(&self) -> Vec<CycScalar> {
        let mut echelon = crate::linalg::Echelon::<BigRational>::new(euler_phi(self.n) as usize);
        let mut out = Vec::new();
        for i in 0..euler_phi(self.n) as i64 {
            let z = CycScalar::root(self.n, i);
            let mut t = CycScalar::zero(self.n);
            for &j in &self.units {
                t = t.add(&z.galois(j).expect("unit"));
            }
            if echelon.insert(t.coeffs().to_vec()) {
                out.push(t);
            }
            if out.len() == self.degree() {
                break;
            }
        }
        out
    }

    pub fn label(&self) -> String {
        if self.is_rationals() {
            "Q".to_string()
        } else if self.units.len() == 1 {
            format!("Q(ζ{})", self.n)
        } else {
            let u: Vec<String> = self.units.iter().map(u32::to_string).collect();
            format!("Q(ζ{})^<{}>", self.n, u.join(","))
        }
    }
}

impl Serialize for SubfieldDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: u32,
            unit_generators: &'a [u32],
            degree: usize,
            label: String,
        }
        Repr { n: self.n, unit_generators: &self.units, degree: self.degree(), label: self.label() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SubfieldDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        #[derive(Deserialize)]
        struct Repr {
            n: u32,
            unit_generators: Vec<u32>,
        }
        let r = Repr::deserialize(d)?;
        SubfieldDescriptor::from_generators(r.n, &r.unit_generators).map_err(D::Error::custom)
    }
}
