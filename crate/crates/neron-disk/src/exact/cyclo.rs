//! The cyclotomic field `Q(ζ_m)` as the polynomial quotient
//! `Q[x] / Φ_m(x)`. Order 1 degenerates to plain `Q`.

use super::{Rat, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

fn rzero() -> Rat {
    num_traits::Zero::zero()
}

fn rone() -> Rat {
    num_traits::One::one()
}

pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

static CYCLO_CACHE: Lazy<Mutex<HashMap<u32, Arc<Vec<BigInt>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
pub fn cyclotomic_polynomial(m: u32) -> Arc<Vec<BigInt>> {
    if let Some(p) = CYCLO_CACHE.lock().unwrap().get(&m) {
        return p.clone();
    }
    let poly = compute_cyclotomic(m);
    let arc = Arc::new(poly);
    CYCLO_CACHE.lock().unwrap().insert(m, arc.clone());
    arc
}

fn compute_cyclotomic(m: u32) -> Vec<BigInt> {
    // x^m - 1 divided by the product of Phi_d over proper divisors d.
    let mut num = vec![BigInt::zero(); m as usize + 1];
    num[0] = BigInt::from(-1);
    num[m as usize] = BigInt::one();
    for d in 1..m {
        if m % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

/// Exact division of integer polynomials with monic divisor.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let nd = rem.len() - 1;
    if nd < dd {
        return vec![BigInt::zero()];
    }
    let mut quot = vec![BigInt::zero(); nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let c = rem[k + dd].clone();
        if c.is_zero() {
            continue;
        }
        quot[k] = c.clone();
        for (i, dc) in den.iter().enumerate() {
            rem[k + i] -= &c * dc;
        }
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    while quot.len() > 1 && quot.last().unwrap().is_zero() {
        quot.pop();
    }
    quot
}

/// Element of `Q(ζ_m)`, stored as rational coefficients of
/// `1, ζ, …, ζ^{φ(m)−1}` reduced modulo `Φ_m`.
#[derive(Clone, Debug)]
pub struct CycloScalar {
    order: u32,
    coeffs: Vec<Rat>,
}

impl CycloScalar {
    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn from_rational(r: Rat) -> Self {
        CycloScalar {
            order: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    /// Builds an element from raw coefficients (length φ(m) not required;
    /// higher powers are reduced).
    pub fn from_coeffs(order: u32, coeffs: Vec<Rat>) -> Self {
        let reduced = reduce_mod_phi(order, coeffs);
        CycloScalar {
            order,
            coeffs: reduced,
        }
    }

    /// ζ_m^k.
    pub fn root_of_unity(order: u32, k: u32) -> Self {
        let k = (k % order) as usize;
        let mut coeffs = vec![rzero(); k + 1];
        coeffs[k] = rone();
        Self::from_coeffs(order, coeffs)
    }

    /// Lifts into `Q(ζ_m)` for a multiple m of the current order.
    pub fn promote(&self, m: u32) -> Self {
        if m == self.order {
            return self.clone();
        }
        assert!(
            m % self.order == 0,
            "promotion target {m} must be a multiple of {}",
            self.order
        );
        let step = (m / self.order) as usize;
        let mut coeffs = vec![rzero(); (self.coeffs.len() - 1) * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * step] = c.clone();
        }
        Self::from_coeffs(m, coeffs)
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| Scalar::is_zero(c))
    }

    pub fn as_rational(&self) -> Option<Rat> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Numeric embedding ζ ↦ exp(2πi/m), for display only.
    pub fn approx(&self) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for (k, c) in self.coeffs.iter().enumerate() {
            let v = rat_to_f64(c);
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (self.order as f64);
            re += v * theta.cos();
            im += v * theta.sin();
        }
        (re, im)
    }
}

fn rat_to_f64(r: &Rat) -> f64 {
    let n = r.numer().to_string().parse::<f64>().unwrap_or(f64::NAN);
    let d = r.denom().to_string().parse::<f64>().unwrap_or(f64::NAN);
    n / d
}

fn reduce_mod_phi(order: u32, mut coeffs: Vec<Rat>) -> Vec<Rat> {
    let phi = euler_phi(order) as usize;
    let modulus = cyclotomic_polynomial(order);
    let deg_mod = modulus.len() - 1;
    debug_assert_eq!(deg_mod, phi);
    // Polynomial remainder modulo the monic integer polynomial.
    while coeffs.len() > deg_mod {
        let top = coeffs.pop().unwrap();
        if Scalar::is_zero(&top) {
            continue;
        }
        let k = coeffs.len() - deg_mod;
        for (i, mc) in modulus.iter().take(deg_mod).enumerate() {
            let sub = &top * BigRational::from_integer(mc.clone());
            coeffs[k + i] -= sub;
        }
    }
    coeffs.resize(phi, rzero());
    coeffs
}

fn binop(a: &CycloScalar, b: &CycloScalar, f: impl Fn(&CycloScalar, &CycloScalar) -> CycloScalar) -> CycloScalar {
    if a.order == b.order {
        return f(a, b);
    }
    let m = a.order.lcm(&b.order);
    f(&a.promote(m), &b.promote(m))
}

impl PartialEq for CycloScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        let m = self.order.lcm(&other.order);
        self.promote(m).coeffs == other.promote(m).coeffs
    }
}

impl Eq for CycloScalar {}

impl Scalar for CycloScalar {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn from_i64(v: i64) -> Self {
        Self::from_int(v)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| Scalar::is_zero(c))
    }
    fn add(&self, other: &Self) -> Self {
        binop(self, other, |a, b| {
            let coeffs = a
                .coeffs
                .iter()
                .zip(b.coeffs.iter())
                .map(|(x, y)| x + y)
                .collect();
            CycloScalar {
                order: a.order,
                coeffs,
            }
        })
    }
    fn sub(&self, other: &Self) -> Self {
        Scalar::add(self, &Scalar::neg(other))
    }
    fn mul(&self, other: &Self) -> Self {
        binop(self, other, |a, b| {
            if a.is_rational() {
                let r = &a.coeffs[0];
                return CycloScalar {
                    order: b.order,
                    coeffs: b.coeffs.iter().map(|c| r * c).collect(),
                };
            }
            let mut prod = vec![rzero(); a.coeffs.len() + b.coeffs.len() - 1];
            for (i, x) in a.coeffs.iter().enumerate() {
                if Scalar::is_zero(x) {
                    continue;
                }
                for (j, y) in b.coeffs.iter().enumerate() {
                    if Scalar::is_zero(y) {
                        continue;
                    }
                    prod[i + j] += x * y;
                }
            }
            CycloScalar::from_coeffs(a.order, prod)
        })
    }
    fn neg(&self) -> Self {
        CycloScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        if self.is_rational() {
            return Some(Self::from_rational(self.coeffs[0].recip()));
        }
        // Extended Euclid in Q[x] against the (irreducible) modulus.
        let modulus: Vec<Rat> = cyclotomic_polynomial(self.order)
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect();
        let inv = poly_modinv(&self.coeffs, &modulus)?;
        Some(CycloScalar::from_coeffs(self.order, inv))
    }
    fn conj(&self) -> Self {
        if self.order <= 2 {
            return self.clone();
        }
        let m = self.order;
        let mut acc = vec![rzero()];
        for (i, c) in self.coeffs.iter().enumerate() {
            if Scalar::is_zero(c) {
                continue;
            }
            let e = (i as u32 * (m - 1)) % m;
            let mut term = vec![rzero(); e as usize + 1];
            term[e as usize] = c.clone();
            if term.len() > acc.len() {
                acc.resize(term.len(), rzero());
            }
            for (k, t) in term.into_iter().enumerate() {
                acc[k] += t;
            }
        }
        CycloScalar::from_coeffs(m, acc)
    }
}

fn poly_trim(p: &mut Vec<Rat>) {
    while p.len() > 1 && Scalar::is_zero(p.last().unwrap()) {
        p.pop();
    }
}

fn poly_rem(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut r: Vec<Rat> = a.to_vec();
    poly_trim(&mut r);
    let mut bb = b.to_vec();
    poly_trim(&mut bb);
    let db = bb.len() - 1;
    let lead = bb[db].clone();
    while r.len() > db && !(r.len() == 1 && Scalar::is_zero(&r[0])) {
        let dr = r.len() - 1;
        let c = &r[dr] / &lead;
        for i in 0..=db {
            let sub = &c * &bb[i];
            r[dr - db + i] -= sub;
        }
        poly_trim(&mut r);
        if dr == db {
            break;
        }
    }
    r
}

/// Inverse of `a` modulo `m` in Q[x] via extended Euclid.
fn poly_modinv(a: &[Rat], modulus: &[Rat]) -> Option<Vec<Rat>> {
    let mut r0 = modulus.to_vec();
    let mut r1 = a.to_vec();
    poly_trim(&mut r0);
    poly_trim(&mut r1);
    let mut s0 = vec![rzero()];
    let mut s1 = vec![rone()];
    while !(r1.len() == 1 && Scalar::is_zero(&r1[0])) {
        let (q, r) = poly_divmod(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    // r0 = gcd; must be a nonzero constant.
    if r0.len() != 1 || Scalar::is_zero(&r0[0]) {
        return None;
    }
    let c = r0[0].recip();
    Some(s0.iter().map(|x| x * &c).collect())
}

fn poly_divmod(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let mut r = a.to_vec();
    poly_trim(&mut r);
    let mut bb = b.to_vec();
    poly_trim(&mut bb);
    let db = bb.len() - 1;
    let lead = bb[db].clone();
    if r.len() <= db && !(r.len() == db + 1) {
        return (vec![rzero()], r);
    }
    let mut q = vec![rzero(); r.len().saturating_sub(db)];
    while r.len() > db || (r.len() == db + 1) {
        if r.len() < db + 1 || (r.len() == 1 && Scalar::is_zero(&r[0])) {
            break;
        }
        let dr = r.len() - 1;
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        q[dr - db] = c.clone();
        for i in 0..=db {
            let sub = &c * &bb[i];
            r[dr - db + i] -= sub;
        }
        poly_trim(&mut r);
        if dr == 0 {
            break;
        }
    }
    (q, r)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![rzero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    poly_trim(&mut out);
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![rzero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    poly_trim(&mut out);
    out
}

impl fmt::Display for CycloScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.coeffs[0]);
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if Scalar::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "z^{k}")?;
            } else {
                write!(f, "{c}*z^{k}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " [z=zeta_{}]", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclotomic_polys() {
        let p4: Vec<i64> = cyclotomic_polynomial(4).iter().map(|c| c.to_string().parse().unwrap()).collect();
        assert_eq!(p4, vec![1, 0, 1]); // x^2 + 1
        let p6: Vec<i64> = cyclotomic_polynomial(6).iter().map(|c| c.to_string().parse().unwrap()).collect();
        assert_eq!(p6, vec![1, -1, 1]); // x^2 - x + 1
        let p12: Vec<i64> = cyclotomic_polynomial(12).iter().map(|c| c.to_string().parse().unwrap()).collect();
        assert_eq!(p12, vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(1), 1);
    }

    #[test]
    fn roots_multiply() {
        let z = CycloScalar::root_of_unity(5, 1);
        let mut acc = CycloScalar::one();
        for _ in 0..5 {
            acc = Scalar::mul(&acc, &z);
        }
        assert_eq!(acc, CycloScalar::one());
    }

    #[test]
    fn conj_is_inverse_on_roots() {
        for m in [3u32, 4, 5, 6, 8, 12] {
            let z = CycloScalar::root_of_unity(m, 1);
            let prod = Scalar::mul(&z, &Scalar::conj(&z));
            assert_eq!(prod, CycloScalar::one(), "m = {m}");
        }
    }

    #[test]
    fn promote_roundtrip() {
        let z3 = CycloScalar::root_of_unity(3, 1);
        let z6 = z3.promote(6);
        // zeta_3 = zeta_6^2
        assert_eq!(z6, CycloScalar::root_of_unity(6, 2));
        // Mixed-order arithmetic promotes transparently.
        let s = Scalar::add(&z3, &CycloScalar::root_of_unity(6, 1));
        assert!(!Scalar::is_zero(&s));
    }

    proptest! {
        #[test]
        fn field_inverse(m in prop::sample::select(vec![1u32, 2, 3, 4, 6, 8, 12]),
                         raw in prop::collection::vec(-4i64..5, 1..4)) {
            let coeffs: Vec<Rat> = raw.iter().map(|&v| crate::exact::rat_int(v)).collect();
            let x = CycloScalar::from_coeffs(m, coeffs);
            if !Scalar::is_zero(&x) {
                let inv = Scalar::inv(&x).unwrap();
                prop_assert_eq!(Scalar::mul(&x, &inv), CycloScalar::one());
            }
        }

        #[test]
        fn conj_involution(m in prop::sample::select(vec![1u32, 3, 4, 5, 6, 12]),
                           raw in prop::collection::vec(-4i64..5, 1..5)) {
            let coeffs: Vec<Rat> = raw.iter().map(|&v| crate::exact::rat_int(v)).collect();
            let x = CycloScalar::from_coeffs(m, coeffs);
            prop_assert_eq!(Scalar::conj(&Scalar::conj(&x)), x);
        }

        #[test]
        fn conj_is_automorphism(raw1 in prop::collection::vec(-3i64..4, 1..4),
                                raw2 in prop::collection::vec(-3i64..4, 1..4)) {
            let a = CycloScalar::from_coeffs(12, raw1.iter().map(|&v| crate::exact::rat_int(v)).collect());
            let b = CycloScalar::from_coeffs(12, raw2.iter().map(|&v| crate::exact::rat_int(v)).collect());
            let lhs = Scalar::conj(&Scalar::mul(&a, &b));
            let rhs = Scalar::mul(&Scalar::conj(&a), &Scalar::conj(&b));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
