use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{Scalar, Tolerance};
use crate::error::{Error, Result};

/// Square-free integer `d ∉ {0, 1}` naming the field ℚ(√d).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Discriminant(i64);

impl Discriminant {
    pub fn new(d: i64) -> Result<Self> {
        if d == 0 || d == 1 || !is_square_free(d.unsigned_abs()) {
            return Err(Error::InvalidDiscriminant(d));
        }
        Ok(Discriminant(d))
    }

    pub fn get(self) -> i64 {
        self.0
    }

    /// ℚ(i).
    pub fn gaussian() -> Self {
        Discriminant(-1)
    }

    /// ℚ(√-3), home of the Eisenstein integers.
    pub fn eisenstein() -> Self {
        Discriminant(-3)
    }

    fn big(self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.0))
    }
}

fn is_square_free(n: u64) -> bool {
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Exact element `(p + q√d)/r` of ℚ(√d).
///
/// Stored with `r > 0` and `gcd(p, q, r) = 1`, so structural equality is
/// field equality. One shared denominator keeps the gcd work to one
/// reduction per operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticNumber {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    d: Discriminant,
}

impl QuadraticNumber {
    pub fn new(a: BigRational, b: BigRational, d: Discriminant) -> Self {
        let (an, ad) = a.into_raw();
        let (bn, bd) = b.into_raw();
        let r = ad.lcm(&bd);
        let p = an * (&r / &ad);
        let q = bn * (&r / &bd);
        Self::reduced(p, q, r, d)
    }

    fn reduced(mut p: BigInt, mut q: BigInt, mut r: BigInt, d: Discriminant) -> Self {
        if p.is_zero() && q.is_zero() {
            return QuadraticNumber { p, q, r: BigInt::one(), d };
        }
        if r.is_negative() {
            p = -p;
            q = -q;
            r = -r;
        }
        if !r.is_one() {
            let mut g = p.gcd(&r);
            if !g.is_one() {
                g = g.gcd(&q);
                if !g.is_one() {
                    p /= &g;
                    q /= &g;
                    r /= &g;
                }
            }
        }
        QuadraticNumber { p, q, r, d }
    }

    pub fn rational(a: BigRational, d: Discriminant) -> Self {
        Self::new(a, BigRational::zero(), d)
    }

    /// `num/den + (num2/den2)√d` from machine integers.
    pub fn from_parts(a: (i64, i64), b: (i64, i64), d: Discriminant) -> Result<Self> {
        Ok(Self::new(ratio(a.0, a.1)?, ratio(b.0, b.1)?, d))
    }

    /// `√d` itself.
    pub fn sqrt_d(d: Discriminant) -> Self {
        Self::new(BigRational::zero(), BigRational::one(), d)
    }

    /// Rational part.
    pub fn a(&self) -> BigRational {
        BigRational::new(self.p.clone(), self.r.clone())
    }

    /// Coefficient of `√d`.
    pub fn b(&self) -> BigRational {
        BigRational::new(self.q.clone(), self.r.clone())
    }

    pub fn discriminant(&self) -> Discriminant {
        self.d
    }

    /// Field norm `a² − d·b²`.
    pub fn norm(&self) -> BigRational {
        BigRational::new(self.norm_numer(), &self.r * &self.r)
    }

    /// `p² − d q²`, the norm times `r²`.
    fn norm_numer(&self) -> BigInt {
        &self.p * &self.p - &self.q * &self.q * self.d.0
    }

    fn assert_same_field(&self, other: &Self) {
        assert!(
            self.d == other.d,
            "mixed exact fields Q(sqrt({})) and Q(sqrt({}))",
            self.d.0,
            other.d.0
        );
    }

    /// `x·y` as an unreduced pair over the denominator `r_x r_y`.
    fn raw_mul(x: &Self, y: &Self) -> (BigInt, BigInt) {
        (
            &x.p * &y.p + &x.q * &y.q * x.d.0,
            &x.p * &y.q + &x.q * &y.p,
        )
    }

    /// Sign of the real number `u + v√d` for `d > 0`.
    fn real_sign(u: &BigRational, v: &BigRational, d: Discriminant) -> Ordering {
        let su = u.cmp(&BigRational::zero());
        let sv = v.cmp(&BigRational::zero());
        if sv == Ordering::Equal {
            return su;
        }
        if su == Ordering::Equal || su == sv {
            return sv;
        }
        // Opposite signs: the larger square wins.
        match (u * u).cmp(&(v * v * d.big())) {
            Ordering::Greater => su,
            Ordering::Less => sv,
            Ordering::Equal => Ordering::Equal,
        }
    }

    fn is_principal(&self) -> bool {
        if self.d.0 < 0 {
            self.p.is_positive() || (self.p.is_zero() && !self.q.is_negative())
        } else {
            Self::real_sign(&self.a(), &self.b(), self.d) != Ordering::Less
        }
    }
}

fn ratio(num: i64, den: i64) -> Result<BigRational> {
    if den == 0 {
        return Err(Error::DivisionByZero);
    }
    Ok(BigRational::new(BigInt::from(num), BigInt::from(den)))
}

/// Square root of a rational when it is a perfect square.
pub(crate) fn rational_sqrt(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let m = x.denom().sqrt();
    if &(&n * &n) == x.numer() && &(&m * &m) == x.denom() {
        Some(BigRational::new(n, m))
    } else {
        None
    }
}

fn add_sub(x: QuadraticNumber, y: QuadraticNumber, sub: bool) -> QuadraticNumber {
    x.assert_same_field(&y);
    let (yp, yq) = if sub { (-y.p, -y.q) } else { (y.p, y.q) };
    if x.r == y.r {
        QuadraticNumber::reduced(x.p + yp, x.q + yq, x.r, x.d)
    } else {
        QuadraticNumber::reduced(x.p * &y.r + yp * &x.r, x.q * &y.r + yq * &x.r, x.r * y.r, x.d)
    }
}

impl Add for QuadraticNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        add_sub(self, rhs, false)
    }
}

impl Sub for QuadraticNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        add_sub(self, rhs, true)
    }
}

impl Mul for QuadraticNumber {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.assert_same_field(&rhs);
        let (p, q) = QuadraticNumber::raw_mul(&self, &rhs);
        QuadraticNumber::reduced(p, q, self.r * rhs.r, self.d)
    }
}

impl Neg for QuadraticNumber {
    type Output = Self;
    fn neg(self) -> Self {
        QuadraticNumber { p: -self.p, q: -self.q, ..self }
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl Scalar for QuadraticNumber {
    type Field = Discriminant;
    type Key = (BigInt, BigInt, BigInt);

    const EXACT: bool = true;

    fn field(&self) -> Discriminant {
        self.d
    }

    fn from_int(field: &Discriminant, n: i64) -> Self {
        QuadraticNumber { p: BigInt::from(n), q: BigInt::zero(), r: BigInt::one(), d: *field }
    }

    fn from_ratio(field: &Discriminant, num: i64, den: i64) -> Result<Self> {
        Ok(QuadraticNumber::rational(ratio(num, den)?, *field))
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::MixedField(self.d.0, other.d.0))
        }
    }

    fn is_zero(&self, _: Tolerance) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    fn approx_eq(&self, other: &Self, _: Tolerance) -> bool {
        self == other
    }

    /// `x₁y₁ + x₂y₂` with a single reduction.
    fn dot2(x1: &Self, y1: &Self, x2: &Self, y2: &Self) -> Self {
        x1.assert_same_field(x2);
        x1.assert_same_field(y1);
        x2.assert_same_field(y2);
        let (p1, q1) = Self::raw_mul(x1, y1);
        let (p2, q2) = Self::raw_mul(x2, y2);
        let r1 = &x1.r * &y1.r;
        let r2 = &x2.r * &y2.r;
        if r1 == r2 {
            Self::reduced(p1 + p2, q1 + q2, r1, x1.d)
        } else {
            Self::reduced(p1 * &r2 + p2 * &r1, q1 * &r2 + q2 * &r1, r1 * r2, x1.d)
        }
    }

    fn inv(&self) -> Result<Self> {
        // r/(p + q√d) = r(p − q√d)/(p² − d q²)
        let n = self.norm_numer();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(&self.r * &self.p, -(&self.r * &self.q), n, self.d))
    }

    fn conj(&self) -> Self {
        if self.d.0 < 0 {
            QuadraticNumber { q: -self.q.clone(), ..self.clone() }
        } else {
            self.clone()
        }
    }

    fn sqrt_principal(&self) -> Result<Self> {
        let unsupported =
            || Error::ExactModeUnsupported(format!("{} is not a square in Q(sqrt({}))", self, self.d.0));
        let (sa, sb) = (self.a(), self.b());
        let zero = BigRational::zero();
        let two = BigRational::from_integer(BigInt::from(2));
        let mut root = if sb.is_zero() {
            if let Some(u) = rational_sqrt(&sa) {
                QuadraticNumber::new(u, zero, self.d)
            } else if let Some(v) = rational_sqrt(&(&sa / self.d.big())) {
                QuadraticNumber::new(zero, v, self.d)
            } else {
                return Err(unsupported());
            }
        } else {
            // (u + v√d)² = u² + d v² + 2uv√d; u² solves t² − a t + d b²/4 = 0.
            let s = rational_sqrt(&self.norm()).ok_or_else(unsupported)?;
            let found = [&sa + &s, &sa - &s].into_iter().find_map(|twice_u2| {
                let u = rational_sqrt(&(twice_u2 / &two))?;
                if u.is_zero() {
                    return None;
                }
                let v = &sb / (&two * &u);
                let cand = QuadraticNumber::new(u, v, self.d);
                (cand.clone() * cand.clone() == *self).then_some(cand)
            });
            found.ok_or_else(unsupported)?
        };
        if !root.is_principal() {
            root = -root;
        }
        Ok(root)
    }

    fn to_c64(&self) -> Complex64 {
        let a = self.a().to_f64().unwrap_or(f64::NAN);
        let b = self.b().to_f64().unwrap_or(f64::NAN);
        let r = (self.d.0.unsigned_abs() as f64).sqrt();
        if self.d.0 < 0 {
            Complex64::new(a, b * r)
        } else {
            Complex64::new(a + b * r, 0.0)
        }
    }

    fn canonical_sign(&self, _: Tolerance) -> Ordering {
        match self.p.sign() {
            num_bigint::Sign::NoSign => self.q.cmp(&BigInt::zero()),
            num_bigint::Sign::Plus => Ordering::Greater,
            num_bigint::Sign::Minus => Ordering::Less,
        }
    }

    fn real_cmp(&self, n: i64, _: Tolerance) -> Option<Ordering> {
        let shifted = self.a() - BigRational::from_integer(BigInt::from(n));
        if self.d.0 < 0 {
            self.q.is_zero().then(|| shifted.cmp(&BigRational::zero()))
        } else {
            Some(Self::real_sign(&shifted, &self.b(), self.d))
        }
    }

    fn modulus_cmp_one(&self) -> Ordering {
        if self.d.0 < 0 {
            self.norm_numer().cmp(&(&self.r * &self.r))
        } else {
            let (a, b) = (self.a(), self.b());
            let s = Self::real_sign(&a, &b, self.d);
            let (a, b) = if s == Ordering::Less { (-a, -b) } else { (a, b) };
            Self::real_sign(&(a - BigRational::one()), &b, self.d)
        }
    }

    fn key(&self, _: Tolerance) -> Self::Key {
        (self.p.clone(), self.q.clone(), self.r.clone())
    }

    fn compact(&self) -> String {
        let a = &self.a();
        let b = &self.b();
        let root = format!("√{}", self.d.0);
        if b.is_zero() {
            return a.to_string();
        }
        let b_part = if b.is_one() {
            root
        } else if *b == -BigRational::one() {
            format!("-{root}")
        } else {
            format!("{b}{root}")
        };
        if a.is_zero() {
            b_part
        } else if b.is_negative() {
            format!("{a}{b_part}")
        } else {
            format!("{a}+{b_part}")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: (i64, i64), b: (i64, i64), d: i64) -> QuadraticNumber {
        QuadraticNumber::from_parts(a, b, Discriminant::new(d).unwrap()).unwrap()
    }

    #[test]
    fn discriminant_validation() {
        assert!(Discriminant::new(-3).is_ok());
        assert!(Discriminant::new(5).is_ok());
        assert_eq!(Discriminant::new(0), Err(Error::InvalidDiscriminant(0)));
        assert_eq!(Discriminant::new(1), Err(Error::InvalidDiscriminant(1)));
        assert_eq!(Discriminant::new(-4), Err(Error::InvalidDiscriminant(-4)));
        assert_eq!(Discriminant::new(12), Err(Error::InvalidDiscriminant(12)));
    }

    #[test]
    fn addition_in_eisenstein_field() {
        let x = q((1, 1), (0, 1), -3);
        let y = q((0, 1), (1, 1), -3);
        assert_eq!(x + y, q((1, 1), (1, 1), -3));
    }

    #[test]
    fn norm_identity() {
        for (a, b, d) in [(3, 2, -3), (-5, 7, 5), (1, -1, -1), (0, 4, 2)] {
            let x = q((a, 1), (b, 1), d);
            let n = x.clone() * x.conj_galois();
            assert_eq!(n, q((a * a - d * b * b, 1), (0, 1), d));
        }
    }

    impl QuadraticNumber {
        fn conj_galois(&self) -> Self {
            QuadraticNumber::new(self.a(), -self.b(), self.d)
        }
    }

    #[test]
    fn canonical_fractions_compare_equal() {
        let tol = Tolerance::default();
        assert!(q((1, 2), (0, 1), -1).checked_eq(&q((2, 4), (0, 1), -1), tol).unwrap());
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let x = q((1, 1), (1, 1), -1);
        let y = q((1, 1), (1, 1), -3);
        assert_eq!(x.checked_add(&y), Err(Error::MixedField(-1, -3)));
        assert_eq!(x.checked_mul(&y), Err(Error::MixedField(-1, -3)));
        assert_eq!(x.checked_eq(&y, Tolerance::default()), Err(Error::MixedField(-1, -3)));
    }

    #[test]
    fn division_by_zero() {
        let z = q((0, 1), (0, 1), -1);
        assert_eq!(z.inv(), Err(Error::DivisionByZero));
        assert_eq!(q((1, 1), (0, 1), -1).checked_div(&z), Err(Error::DivisionByZero));
    }

    #[test]
    fn exact_square_roots() {
        // √-1 in Q(i) is i.
        assert_eq!(q((-1, 1), (0, 1), -1).sqrt_principal().unwrap(), q((0, 1), (1, 1), -1));
        // (1+i)² = 2i.
        assert_eq!(q((0, 1), (2, 1), -1).sqrt_principal().unwrap(), q((1, 1), (1, 1), -1));
        // 9/4 → 3/2.
        assert_eq!(q((9, 4), (0, 1), 5).sqrt_principal().unwrap(), q((3, 2), (0, 1), 5));
        // 5 = (√5)² in Q(√5).
        assert_eq!(q((5, 1), (0, 1), 5).sqrt_principal().unwrap(), q((0, 1), (1, 1), 5));
        // (3 + √5)/2 = ((1 + √5)/2)².
        assert_eq!(q((3, 2), (1, 2), 5).sqrt_principal().unwrap(), q((1, 2), (1, 2), 5));
        // 2 is not a square in Q(i).
        assert!(matches!(
            q((2, 1), (0, 1), -1).sqrt_principal(),
            Err(Error::ExactModeUnsupported(_))
        ));
    }

    #[test]
    fn principal_branch_in_real_field() {
        // (1 − √5)² = 6 − 2√5; the principal root is √5 − 1 > 0.
        let r = q((6, 1), (-2, 1), 5).sqrt_principal().unwrap();
        assert_eq!(r, q((-1, 1), (1, 1), 5));
    }

    #[test]
    fn real_comparisons() {
        let tol = Tolerance::default();
        assert_eq!(q((5, 2), (0, 1), -1).real_cmp(2, tol), Some(Ordering::Greater));
        assert_eq!(q((1, 1), (1, 1), -1).real_cmp(2, tol), None);
        // (1 + √5)/2 ≈ 1.618 < 2
        assert_eq!(q((1, 2), (1, 2), 5).real_cmp(2, tol), Some(Ordering::Less));
        assert_eq!(q((2, 1), (0, 1), 5).real_cmp(2, tol), Some(Ordering::Equal));
    }

    #[test]
    fn modulus_against_one() {
        assert_eq!(q((0, 1), (1, 1), -1).modulus_cmp_one(), Ordering::Equal);
        assert_eq!(q((2, 1), (0, 1), -1).modulus_cmp_one(), Ordering::Greater);
        assert_eq!(q((-1, 2), (1, 2), -3).modulus_cmp_one(), Ordering::Equal);
        assert_eq!(q((-1, 2), (1, 2), 5).modulus_cmp_one(), Ordering::Less);
        assert_eq!(q((-1, 2), (-1, 2), 5).modulus_cmp_one(), Ordering::Greater);
    }

    #[test]
    fn compact_rendering() {
        assert_eq!(q((2, 1), (0, 1), -1).compact(), "2");
        assert_eq!(q((1, 2), (1, 2), -3).compact(), "1/2+1/2√-3");
        assert_eq!(q((0, 1), (-1, 1), -1).compact(), "-√-1");
    }
}
