//! SL(2,ℂ) and PSL(2,ℂ) elements, the trace classification of isometries
//! of hyperbolic 3-space, fixed points on the Riemann sphere, and the
//! standard transformations `S_λ`, `S′_λ`, `T_v`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::numerics::{Scalar, Tolerance};

/// A 2×2 matrix `[[a, b], [c, d]]` with `ad − bc = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct Sl2<S> {
    a: S,
    b: S,
    c: S,
    d: S,
}

impl<S: Scalar> Sl2<S> {
    /// Validates field compatibility, finiteness and the determinant.
    pub fn new(a: S, b: S, c: S, d: S, tol: Tolerance) -> Result<Self> {
        a.check_compatible(&b)?;
        a.check_compatible(&c)?;
        a.check_compatible(&d)?;
        if ![&a, &b, &c, &d].iter().all(|x| x.is_finite()) {
            return Err(Error::NonFinite);
        }
        let m = Sl2 { a, b, c, d };
        if !m.det().approx_eq(&m.a.one_like(), tol) {
            return Err(Error::NotUnimodular);
        }
        Ok(m)
    }

    /// Builds a matrix whose entries the caller knows to share a field and
    /// to have determinant 1.
    pub fn new_unchecked(a: S, b: S, c: S, d: S) -> Self {
        Sl2 { a, b, c, d }
    }

    pub fn identity(field: &S::Field) -> Self {
        let one = S::from_int(field, 1);
        let zero = S::from_int(field, 0);
        Sl2::new_unchecked(one.clone(), zero.clone(), zero, one)
    }

    /// `U_z = [[1, z], [0, 1]]`.
    pub fn upper(z: S) -> Self {
        Sl2::new_unchecked(z.one_like(), z.zero_like(), z.zero_like(), z.one_like()).with_b(z)
    }

    /// `L_z = [[1, 0], [z, 1]]`.
    pub fn lower(z: S) -> Self {
        Sl2::new_unchecked(z.one_like(), z.zero_like(), z.zero_like(), z.one_like()).with_c(z)
    }

    /// `diag(μ, μ⁻¹)`.
    pub fn diagonal(mu: S) -> Result<Self> {
        let inv = mu.inv()?;
        Ok(Sl2::new_unchecked(mu.clone(), mu.zero_like(), mu.zero_like(), inv))
    }

    fn with_b(mut self, b: S) -> Self {
        self.b = b;
        self
    }

    fn with_c(mut self, c: S) -> Self {
        self.c = c;
        self
    }

    pub fn a(&self) -> &S {
        &self.a
    }
    pub fn b(&self) -> &S {
        &self.b
    }
    pub fn c(&self) -> &S {
        &self.c
    }
    pub fn d(&self) -> &S {
        &self.d
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> [&S; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn field(&self) -> S::Field {
        self.a.field()
    }

    pub fn det(&self) -> S {
        self.a.clone() * self.d.clone() - self.b.clone() * self.c.clone()
    }

    pub fn trace(&self) -> S {
        self.a.clone() + self.d.clone()
    }

    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        self.a.check_compatible(&other.a)
    }

    /// Matrix product with field compatibility checked.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self * other)
    }

    /// Determinant-one inverse `[[d, −b], [−c, a]]`.
    pub fn inverse(&self) -> Self {
        Sl2::new_unchecked(
            self.d.clone(),
            -self.b.clone(),
            -self.c.clone(),
            self.a.clone(),
        )
    }

    pub fn neg(&self) -> Self {
        Sl2::new_unchecked(
            -self.a.clone(),
            -self.b.clone(),
            -self.c.clone(),
            -self.d.clone(),
        )
    }

    /// Right action `A · g = g⁻¹ A g`.
    pub fn conj_right(&self, g: &Self) -> Self {
        &(&g.inverse() * self) * g
    }

    /// Inner automorphism `ι_g(A) = g A g⁻¹`.
    pub fn conj_by(&self, g: &Self) -> Self {
        &(g * self) * &g.inverse()
    }

    /// Conjugation quandle operation `x ◁ y = y⁻¹ x y`.
    pub fn quandle_op(&self, y: &Self) -> Self {
        self.conj_right(y)
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.a.approx_eq(&other.a, tol)
            && self.b.approx_eq(&other.b, tol)
            && self.c.approx_eq(&other.c, tol)
            && self.d.approx_eq(&other.d, tol)
    }

    /// `Some(1)` for `I₂`, `Some(-1)` for `−I₂`, `None` otherwise.
    pub fn central_sign(&self, tol: Tolerance) -> Option<i8> {
        if !(self.b.is_zero(tol) && self.c.is_zero(tol)) {
            return None;
        }
        let one = self.a.one_like();
        if self.a.approx_eq(&one, tol) && self.d.approx_eq(&one, tol) {
            Some(1)
        } else if self.a.approx_eq(&-one.clone(), tol) && self.d.approx_eq(&-one, tol) {
            Some(-1)
        } else {
            None
        }
    }

    pub fn is_central(&self, tol: Tolerance) -> bool {
        self.central_sign(tol).is_some()
    }

    /// Frobenius norm of the entries, in floating point.
    pub fn frobenius_norm(&self) -> f64 {
        self.entries()
            .iter()
            .map(|x| x.to_c64().norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Frobenius distance between two matrices, in floating point.
    pub fn distance(&self, other: &Self) -> f64 {
        self.entries()
            .iter()
            .zip(other.entries())
            .map(|(x, y)| (x.to_c64() - y.to_c64()).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Möbius action `z ↦ (az + b)/(cz + d)` on the Riemann sphere.
    pub fn act(&self, p: &Point<S>, tol: Tolerance) -> Result<Point<S>> {
        match p {
            Point::Infinity => {
                if self.c.is_zero(tol) {
                    Ok(Point::Infinity)
                } else {
                    Ok(Point::Finite(self.a.clone() * self.c.inv()?))
                }
            }
            Point::Finite(z) => {
                let num = self.a.clone() * z.clone() + self.b.clone();
                let den = self.c.clone() * z.clone() + self.d.clone();
                if den.is_zero(tol) {
                    Ok(Point::Infinity)
                } else {
                    Ok(Point::Finite(num * den.inv()?))
                }
            }
        }
    }

    /// Hashable key of the matrix itself (no sign quotient).
    pub fn key(&self, tol: Tolerance) -> [S::Key; 4] {
        [
            self.a.key(tol),
            self.b.key(tol),
            self.c.key(tol),
            self.d.key(tol),
        ]
    }
}

impl<S: Scalar> Mul for &Sl2<S> {
    type Output = Sl2<S>;

    /// Panics when the operands live in different exact fields; see
    /// [`Sl2::try_mul`] for the checked form.
    fn mul(self, o: &Sl2<S>) -> Sl2<S> {
        let (a, b, c, d) = (&self.a, &self.b, &self.c, &self.d);
        Sl2 {
            a: S::dot2(a, &o.a, b, &o.c),
            b: S::dot2(a, &o.b, b, &o.d),
            c: S::dot2(c, &o.a, d, &o.c),
            d: S::dot2(c, &o.b, d, &o.d),
        }
    }
}

impl<S: Scalar> fmt::Display for Sl2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.a.compact(),
            self.b.compact(),
            self.c.compact(),
            self.d.compact()
        )
    }
}

/// An element of PSL(2,ℂ), stored as its canonical SL(2,ℂ) lift: the first
/// nonzero entry in the order `a, b, c, d` has positive canonical sign.
#[derive(Clone, Debug, PartialEq)]
pub struct Psl2<S> {
    rep: Sl2<S>,
}

impl<S: Scalar> Psl2<S> {
    /// Projects with the default tolerance deciding which float entries
    /// count as zero during sign normalization.
    pub fn new(rep: Sl2<S>) -> Self {
        Self::with_tolerance(rep, Tolerance::default())
    }

    pub fn with_tolerance(rep: Sl2<S>, tol: Tolerance) -> Self {
        let sign = rep
            .entries()
            .iter()
            .map(|x| x.canonical_sign(tol))
            .find(|s| *s != Ordering::Equal)
            .unwrap_or(Ordering::Greater);
        if sign == Ordering::Less {
            Psl2 { rep: rep.neg() }
        } else {
            Psl2 { rep }
        }
    }

    pub fn identity(field: &S::Field) -> Self {
        Psl2 {
            rep: Sl2::identity(field),
        }
    }

    pub fn rep(&self) -> &Sl2<S> {
        &self.rep
    }

    pub fn into_rep(self) -> Sl2<S> {
        self.rep
    }

    pub fn field(&self) -> S::Field {
        self.rep.field()
    }

    pub fn compose(&self, other: &Self) -> Self {
        Psl2::new(&self.rep * &other.rep)
    }

    pub fn try_compose(&self, other: &Self) -> Result<Self> {
        Ok(Psl2::new(self.rep.try_mul(&other.rep)?))
    }

    pub fn inverse(&self) -> Self {
        Psl2::new(self.rep.inverse())
    }

    pub fn conj_right(&self, g: &Self) -> Self {
        Psl2::new(self.rep.conj_right(&g.rep))
    }

    pub fn conj_by(&self, g: &Self) -> Self {
        Psl2::new(self.rep.conj_by(&g.rep))
    }

    pub fn quandle_op(&self, y: &Self) -> Self {
        self.conj_right(y)
    }

    pub fn is_identity(&self, tol: Tolerance) -> bool {
        self.rep.is_central(tol)
    }

    /// Sign-quotient key: equal for `A` and `−A`.
    pub fn key(&self, tol: Tolerance) -> [S::Key; 4] {
        let k = self.rep.key(tol);
        let n = self.rep.neg().key(tol);
        k.min(n)
    }

    /// Distance `min(‖A − B‖, ‖A + B‖)` between classes.
    pub fn distance(&self, other: &Self) -> f64 {
        self.rep
            .distance(&other.rep)
            .min(self.rep.distance(&other.rep.neg()))
    }

    pub fn act(&self, p: &Point<S>, tol: Tolerance) -> Result<Point<S>> {
        self.rep.act(p, tol)
    }
}

/// `psl_eq`: equality up to global sign.
pub fn psl_eq<S: Scalar>(f: &Psl2<S>, g: &Psl2<S>, tol: Tolerance) -> Result<bool> {
    f.rep.check_compatible(&g.rep)?;
    Ok(f.rep.approx_eq(&g.rep, tol) || f.rep.approx_eq(&g.rep.neg(), tol))
}

impl<S: Scalar> fmt::Display for Psl2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "±{}", self.rep)
    }
}

/// Type of an orientation-preserving isometry of ℍ³.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IsometryClass {
    Identity,
    Elliptic,
    Parabolic,
    Loxodromic,
}

impl IsometryClass {
    pub fn as_str(self) -> &'static str {
        match self {
            IsometryClass::Identity => "identity",
            IsometryClass::Elliptic => "elliptic",
            IsometryClass::Parabolic => "parabolic",
            IsometryClass::Loxodromic => "loxodromic",
        }
    }
}

impl fmt::Display for IsometryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// True when the trace is `±2` (within eps for floats).
pub fn is_parabolic_trace<S: Scalar>(t: &S, tol: Tolerance) -> bool {
    t.real_cmp(2, tol) == Some(Ordering::Equal) || t.real_cmp(-2, tol) == Some(Ordering::Equal)
}

/// True when the trace is real and strictly inside `(−2, 2)`.
pub fn is_elliptic_trace<S: Scalar>(t: &S, tol: Tolerance) -> bool {
    t.real_cmp(-2, tol) == Some(Ordering::Greater) && t.real_cmp(2, tol) == Some(Ordering::Less)
}

/// Trace classification of a PSL(2,ℂ) element.
pub fn classify<S: Scalar>(f: &Psl2<S>, tol: Tolerance) -> IsometryClass {
    classify_sl2(f.rep(), tol)
}

pub fn classify_sl2<S: Scalar>(a: &Sl2<S>, tol: Tolerance) -> IsometryClass {
    if a.is_central(tol) {
        return IsometryClass::Identity;
    }
    let t = a.trace();
    if is_parabolic_trace(&t, tol) {
        IsometryClass::Parabolic
    } else if is_elliptic_trace(&t, tol) {
        IsometryClass::Elliptic
    } else {
        IsometryClass::Loxodromic
    }
}

/// A point of ℂP¹.
#[derive(Clone, Debug, PartialEq)]
pub enum Point<S> {
    Finite(S),
    Infinity,
}

impl<S: Scalar> Point<S> {
    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        match (self, other) {
            (Point::Infinity, Point::Infinity) => true,
            (Point::Finite(x), Point::Finite(y)) => x.approx_eq(y, tol),
            _ => false,
        }
    }
}

impl<S: Scalar> fmt::Display for Point<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Finite(z) => f.write_str(&z.compact()),
            Point::Infinity => f.write_str("∞"),
        }
    }
}

/// Fixed points on ℂP¹: the roots of `cz² + (d − a)z − b = 0`, with `∞`
/// contributed when `c = 0`.
pub fn fixed_points<S: Scalar>(f: &Psl2<S>, tol: Tolerance) -> Result<Vec<Point<S>>> {
    let m = f.rep();
    if m.is_central(tol) {
        return Err(Error::IdentityHasAllPoints);
    }
    let (a, b, c, d) = (m.a(), m.b(), m.c(), m.d());
    let parabolic = is_parabolic_trace(&m.trace(), tol);
    if c.is_zero(tol) {
        let diff = d.clone() - a.clone();
        if parabolic || diff.is_zero(tol) {
            return Ok(vec![Point::Infinity]);
        }
        let z = b.clone() * diff.inv()?;
        return Ok(vec![Point::Finite(z), Point::Infinity]);
    }
    let two_c_inv = (c.clone() + c.clone()).inv()?;
    let a_minus_d = a.clone() - d.clone();
    if parabolic {
        return Ok(vec![Point::Finite(a_minus_d * two_c_inv)]);
    }
    // discriminant (d − a)² + 4bc = tr² − 4
    let t = m.trace();
    let disc = t.clone() * t - a.int_like(4);
    let s = disc.sqrt_principal()?;
    Ok(vec![
        Point::Finite((a_minus_d.clone() + s.clone()) * two_c_inv.clone()),
        Point::Finite((a_minus_d - s) * two_c_inv),
    ])
}

/// Which standard transformation to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    /// `S_λ(z) = λz`
    Scale,
    /// `S′_λ(z) = −λ/z`
    ScaleInvert,
    /// `T_v(z) = z + v`
    Translate,
}

/// `S_λ`, `S′_λ` or `T_v` as a PSL(2,ℂ) element. The square roots of λ are
/// principal; both lifts project to the same class.
pub fn standard<S: Scalar>(kind: StandardKind, param: S) -> Result<Psl2<S>> {
    let tol = Tolerance::default();
    match kind {
        StandardKind::Translate => Ok(Psl2::new(Sl2::upper(param))),
        StandardKind::Scale | StandardKind::ScaleInvert => {
            if param.is_zero(tol) {
                return Err(Error::ZeroParameter);
            }
            let mu = param.sqrt_principal()?;
            let mu_inv = mu.inv()?;
            let zero = mu.zero_like();
            let rep = if kind == StandardKind::Scale {
                Sl2::new_unchecked(mu, zero.clone(), zero, mu_inv)
            } else {
                Sl2::new_unchecked(zero.clone(), -mu, mu_inv, zero)
            };
            Ok(Psl2::new(rep))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{Discriminant, QuadraticNumber};
    use num_complex::Complex64;

    type Q = QuadraticNumber;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn qi(n: i64) -> Q {
        Q::from_int(&Discriminant::gaussian(), n)
    }

    fn i_unit() -> Q {
        Q::sqrt_d(Discriminant::gaussian())
    }

    fn m(a: i64, b: i64, c: i64, d: i64) -> Sl2<Q> {
        Sl2::new(qi(a), qi(b), qi(c), qi(d), tol()).unwrap()
    }

    fn fm(a: f64, b: f64, c: f64, d: f64) -> Sl2<Complex64> {
        let z = |x| Complex64::new(x, 0.0);
        Sl2::new(z(a), z(b), z(c), z(d), tol()).unwrap()
    }

    #[test]
    fn determinant_is_enforced() {
        assert_eq!(
            Sl2::new(qi(1), qi(1), qi(1), qi(1), tol()),
            Err(Error::NotUnimodular)
        );
        let other = Q::from_int(&Discriminant::eisenstein(), 0);
        assert_eq!(
            Sl2::new(qi(1), other, qi(0), qi(1), tol()),
            Err(Error::MixedField(-1, -3))
        );
        let nan = Complex64::new(f64::NAN, 0.0);
        let one = Complex64::new(1.0, 0.0);
        assert_eq!(Sl2::new(one, nan, nan, one, tol()), Err(Error::NonFinite));
    }

    #[test]
    fn identity_is_neutral() {
        let a = m(2, 3, 1, 2);
        let id = Sl2::identity(&Discriminant::gaussian());
        assert_eq!(&id * &a, a);
        assert_eq!(&a * &id, a);
    }

    #[test]
    fn unipotent_inverse() {
        assert_eq!(m(1, 1, 0, 1).inverse(), m(1, -1, 0, 1));
    }

    #[test]
    fn diagonal_trace() {
        let lam = Q::from_parts((3, 1), (1, 1), Discriminant::gaussian()).unwrap();
        let a = Sl2::diagonal(lam.clone()).unwrap();
        assert_eq!(a.trace(), lam.clone() + lam.inv().unwrap());
    }

    #[test]
    fn conjugation_by_identity_and_trace() {
        let a = m(2, 3, 1, 2);
        let g = m(1, 1, 1, 2);
        assert_eq!(a.conj_right(&Sl2::identity(&Discriminant::gaussian())), a);
        assert_eq!(a.conj_right(&g).trace(), a.trace());
    }

    #[test]
    fn quandle_op_by_hand() {
        // y⁻¹xy with x = [[1,1],[0,1]], y = [[0,-1],[1,0]]
        let x = m(1, 1, 0, 1);
        let y = m(0, -1, 1, 0);
        assert_eq!(x.quandle_op(&y), m(1, 0, -1, 1));
        assert_eq!(x.quandle_op(&x), x);
    }

    #[test]
    fn sign_quotient_equality() {
        let a = Psl2::new(m(2, 3, 1, 2));
        let neg = Psl2::new(m(-2, -3, -1, -2));
        assert!(psl_eq(&a, &neg, tol()).unwrap());
        assert_eq!(a, neg);
        let id = Psl2::new(m(1, 0, 0, 1));
        let minus_id = Psl2::new(m(-1, 0, 0, -1));
        assert!(psl_eq(&id, &minus_id, tol()).unwrap());
        assert!(id.is_identity(tol()) && minus_id.is_identity(tol()));
        let u = Psl2::new(m(1, 1, 0, 1));
        let l = Psl2::new(m(1, 0, 1, 1));
        assert!(!psl_eq(&u, &l, tol()).unwrap());
    }

    #[test]
    fn canonical_representative() {
        let f = Psl2::new(m(0, -1, 1, 0));
        assert_eq!(f.rep(), &m(0, 1, -1, 0));
        let again = Psl2::new(f.rep().clone());
        assert_eq!(again, f);
    }

    #[test]
    fn classification_by_trace() {
        assert_eq!(classify(&Psl2::new(m(1, 1, 0, 1)), tol()), IsometryClass::Parabolic);
        assert_eq!(classify(&Psl2::new(m(-1, 1, 0, -1)), tol()), IsometryClass::Parabolic);
        let i = i_unit();
        let rot = Sl2::new_unchecked(i.clone(), qi(0), qi(0), -i);
        assert_eq!(classify(&Psl2::new(rot), tol()), IsometryClass::Elliptic);
        let lox = fm(2.0, 0.0, 0.0, 0.5);
        assert_eq!(classify(&Psl2::new(lox), tol()), IsometryClass::Loxodromic);
        assert_eq!(classify(&Psl2::new(m(1, 0, 0, 1)), tol()), IsometryClass::Identity);
        assert_eq!(classify(&Psl2::new(m(-1, 0, 0, -1)), tol()), IsometryClass::Identity);
    }

    #[test]
    fn float_boundary_cases() {
        // trace within eps of 2 but matrix within eps of I₂ → identity
        let near_id = fm(1.0 + 1e-12, 0.0, 0.0, 1.0 / (1.0 + 1e-12));
        assert_eq!(classify(&Psl2::new(near_id), tol()), IsometryClass::Identity);
        let near_par = fm(1.0, 1e-3, 0.0, 1.0);
        assert_eq!(classify(&Psl2::new(near_par), tol()), IsometryClass::Parabolic);
        // complex trace with tiny imaginary part is still elliptic
        let e = Complex64::new(0.0, 1.0);
        let tilt = Complex64::new(1e-12, 0.0);
        let rot = Sl2::new_unchecked(e + tilt, Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), (e + tilt).inv());
        assert_eq!(classify(&Psl2::new(rot), tol()), IsometryClass::Elliptic);
    }

    #[test]
    fn fixed_points_examples() {
        let t1 = Psl2::new(m(1, 1, 0, 1));
        assert_eq!(fixed_points(&t1, tol()).unwrap(), vec![Point::Infinity]);

        let s4 = standard(StandardKind::Scale, qi(4)).unwrap();
        let pts = fixed_points(&s4, tol()).unwrap();
        assert_eq!(pts, vec![Point::Finite(qi(0)), Point::Infinity]);

        // z² + 1 = 0
        let rot = Psl2::new(m(0, -1, 1, 0));
        let pts = fixed_points(&rot, tol()).unwrap();
        assert_eq!(pts.len(), 2);
        assert!(pts.contains(&Point::Finite(i_unit())));
        assert!(pts.contains(&Point::Finite(-i_unit())));

        let id = Psl2::new(m(1, 0, 0, 1));
        assert_eq!(fixed_points(&id, tol()), Err(Error::IdentityHasAllPoints));
    }

    #[test]
    fn fixed_points_are_fixed() {
        let f = Psl2::new(fm(2.0, 1.0, 3.0, 2.0));
        for p in fixed_points(&f, tol()).unwrap() {
            assert!(f.act(&p, tol()).unwrap().approx_eq(&p, tol().scaled(100.0)));
        }
    }

    #[test]
    fn standard_transformations() {
        assert_eq!(standard(StandardKind::Translate, qi(1)).unwrap().rep(), &m(1, 1, 0, 1));
        let s4 = standard(StandardKind::Scale, qi(4)).unwrap();
        let half = Q::from_ratio(&Discriminant::gaussian(), 1, 2).unwrap();
        assert_eq!(s4.rep(), &Sl2::new_unchecked(qi(2), qi(0), qi(0), half.clone()));
        // action z ↦ 4z
        let p = Point::Finite(qi(3));
        assert_eq!(s4.act(&p, tol()).unwrap(), Point::Finite(qi(12)));

        let sp = standard(StandardKind::ScaleInvert, qi(1)).unwrap();
        assert!(psl_eq(&sp, &Psl2::new(m(0, -1, 1, 0)), tol()).unwrap());
        // action z ↦ −1/z
        let half_pt = Point::Finite(qi(2));
        assert_eq!(sp.act(&half_pt, tol()).unwrap(), Point::Finite(-half));

        assert_eq!(standard(StandardKind::Scale, qi(0)), Err(Error::ZeroParameter));
        assert!(matches!(
            standard(StandardKind::Scale, qi(2)),
            Err(Error::ExactModeUnsupported(_))
        ));
    }
}
