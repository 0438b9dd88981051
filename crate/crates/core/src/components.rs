//! Connected components of Conj(SL(2,ℂ)) and Conj(PSL(2,ℂ)).
//!
//! For a trace `t` the component `X̃ₜ` consists of the non-central matrices of
//! trace `t`. Each carries a base point `Aₜ`, a stabilizer `H̃ₜ`, and an
//! explicit chart: the parabolic chart `F₂(α, β) = A_(α,β)` for `t = ±2`
//! (shifted by the sign `ε = t/2`) and `Fₜ(α, β, γ) = A^{λₜ}_(α,β,γ)` on the
//! variety `α(1 − α) + βγ = 0` otherwise. The PSL layer indexes components by
//! trace classes `τ = {t, −t}`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::moebius::{is_elliptic_trace, is_parabolic_trace, Psl2, Sl2};
use crate::numerics::{Scalar, Tolerance};

/// The class `τ = {t, −t}`, stored through its canonical representative.
#[derive(Clone, Debug, PartialEq)]
pub struct TraceClass<S> {
    rep: S,
}

impl<S: Scalar> TraceClass<S> {
    pub fn new(t: S, tol: Tolerance) -> Self {
        if t.canonical_sign(tol) == Ordering::Less {
            TraceClass { rep: -t }
        } else {
            TraceClass { rep: t }
        }
    }

    pub fn rep(&self) -> &S {
        &self.rep
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.rep.approx_eq(&other.rep, tol) || self.rep.approx_eq(&-other.rep.clone(), tol)
    }

    /// `τ = [2]`, the parabolic class.
    pub fn is_parabolic(&self, tol: Tolerance) -> bool {
        is_parabolic_trace(&self.rep, tol)
    }

    /// `τ = [0]`.
    pub fn is_zero(&self, tol: Tolerance) -> bool {
        self.rep.is_zero(tol)
    }
}

impl<S: Scalar> fmt::Display for TraceClass<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep.compact())
    }
}

/// Index of a component in the decomposition of Conj(SL(2,ℂ)).
#[derive(Clone, Debug, PartialEq)]
pub enum ComponentIdSl<S> {
    CenterPlus,
    CenterMinus,
    Trace(S),
}

/// Index of a component in the decomposition of Conj(PSL(2,ℂ)).
#[derive(Clone, Debug, PartialEq)]
pub enum ComponentIdPsl<S> {
    Identity,
    Trace(TraceClass<S>),
}

impl<S: Scalar> ComponentIdSl<S> {
    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        match (self, other) {
            (ComponentIdSl::CenterPlus, ComponentIdSl::CenterPlus) => true,
            (ComponentIdSl::CenterMinus, ComponentIdSl::CenterMinus) => true,
            (ComponentIdSl::Trace(a), ComponentIdSl::Trace(b)) => a.approx_eq(b, tol),
            _ => false,
        }
    }
}

impl<S: Scalar> ComponentIdPsl<S> {
    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        match (self, other) {
            (ComponentIdPsl::Identity, ComponentIdPsl::Identity) => true,
            (ComponentIdPsl::Trace(a), ComponentIdPsl::Trace(b)) => a.approx_eq(b, tol),
            _ => false,
        }
    }
}

impl<S: Scalar> fmt::Display for ComponentIdPsl<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentIdPsl::Identity => f.write_str("id"),
            ComponentIdPsl::Trace(tau) => tau.fmt(f),
        }
    }
}

impl<S: Scalar> fmt::Display for ComponentIdSl<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentIdSl::CenterPlus => f.write_str("I"),
            ComponentIdSl::CenterMinus => f.write_str("-I"),
            ComponentIdSl::Trace(t) => write!(f, "X({})", t.compact()),
        }
    }
}

/// Coordinates `[(α, β)] = [(−α, −β)]` on the parabolic components.
#[derive(Clone, Debug, PartialEq)]
pub struct ParabolicCoord<S> {
    alpha: S,
    beta: S,
}

impl<S: Scalar> ParabolicCoord<S> {
    /// Rejects `(0, 0)` and stores the sign-canonical representative.
    pub fn new(alpha: S, beta: S, tol: Tolerance) -> Result<Self> {
        alpha.check_compatible(&beta)?;
        let sign = match alpha.canonical_sign(tol) {
            Ordering::Equal => beta.canonical_sign(tol),
            s => s,
        };
        match sign {
            Ordering::Equal => Err(Error::ZeroParameter),
            Ordering::Less => Ok(ParabolicCoord {
                alpha: -alpha,
                beta: -beta,
            }),
            Ordering::Greater => Ok(ParabolicCoord { alpha, beta }),
        }
    }

    pub fn alpha(&self) -> &S {
        &self.alpha
    }

    pub fn beta(&self) -> &S {
        &self.beta
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        let same = self.alpha.approx_eq(&other.alpha, tol) && self.beta.approx_eq(&other.beta, tol);
        let flipped = self.alpha.approx_eq(&-other.alpha.clone(), tol)
            && self.beta.approx_eq(&-other.beta.clone(), tol);
        same || flipped
    }
}

/// A point `(α, β, γ)` of the variety `α(1 − α) + βγ = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneralCoord<S> {
    alpha: S,
    beta: S,
    gamma: S,
}

impl<S: Scalar> GeneralCoord<S> {
    pub fn new(alpha: S, beta: S, gamma: S, tol: Tolerance) -> Result<Self> {
        alpha.check_compatible(&beta)?;
        alpha.check_compatible(&gamma)?;
        let q = GeneralCoord { alpha, beta, gamma };
        if !q.variety_defect().is_zero(tol) {
            return Err(Error::NotInComponent(
                "coordinates violate alpha(1 - alpha) + beta*gamma = 0".into(),
            ));
        }
        Ok(q)
    }

    /// `α(1 − α) + βγ`, zero on the variety.
    pub fn variety_defect(&self) -> S {
        let one = self.alpha.one_like();
        self.alpha.clone() * (one - self.alpha.clone()) + self.beta.clone() * self.gamma.clone()
    }

    pub fn alpha(&self) -> &S {
        &self.alpha
    }
    pub fn beta(&self) -> &S {
        &self.beta
    }
    pub fn gamma(&self) -> &S {
        &self.gamma
    }

    pub fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        self.alpha.approx_eq(&other.alpha, tol)
            && self.beta.approx_eq(&other.beta, tol)
            && self.gamma.approx_eq(&other.gamma, tol)
    }
}

/// `λₜ`: the solution of `λ + λ⁻¹ = t` with `λ = ±1` for `t = ±2`,
/// `λ = e^{iθ}`, `θ ∈ (0, π)` for real `t ∈ (−2, 2)`, and `|λ| > 1` otherwise.
pub fn lambda_of_trace<S: Scalar>(t: &S, tol: Tolerance) -> Result<S> {
    if t.real_cmp(2, tol) == Some(Ordering::Equal) {
        return Ok(t.one_like());
    }
    if t.real_cmp(-2, tol) == Some(Ordering::Equal) {
        return Ok(-t.one_like());
    }
    let disc = t.clone() * t.clone() - t.int_like(4);
    let s = disc.sqrt_principal()?;
    let half = S::from_ratio(&t.field(), 1, 2)?;
    let plus = (t.clone() + s.clone()) * half.clone();
    if is_elliptic_trace(t, tol) {
        // disc < 0, so the principal root is i·√|disc| and Im(plus) > 0.
        return Ok(plus);
    }
    let minus = (t.clone() - s) * half;
    if plus.modulus_cmp_one() == Ordering::Greater {
        Ok(plus)
    } else {
        Ok(minus)
    }
}

fn require_parabolic_sign<S: Scalar>(t: &S, tol: Tolerance) -> Option<S> {
    if t.real_cmp(2, tol) == Some(Ordering::Equal) {
        Some(t.one_like())
    } else if t.real_cmp(-2, tol) == Some(Ordering::Equal) {
        Some(-t.one_like())
    } else {
        None
    }
}

/// The base point `Aₜ`: `[[λₜ, 1], [0, λₜ⁻¹]]` for `t = ±2`, else
/// `diag(λₜ, λₜ⁻¹)`.
pub fn base_point_sl<S: Scalar>(t: &S, tol: Tolerance) -> Result<Sl2<S>> {
    let lam = lambda_of_trace(t, tol)?;
    let lam_inv = lam.inv()?;
    let zero = lam.zero_like();
    if is_parabolic_trace(t, tol) {
        Ok(Sl2::new_unchecked(lam.clone(), lam.one_like(), zero, lam_inv))
    } else {
        Ok(Sl2::new_unchecked(lam, zero.clone(), zero, lam_inv))
    }
}

/// The base point `f_τ = π(Aₜ)`: `T₁` for `τ = [2]`, else `S_{λₜ²}`.
pub fn base_point_psl<S: Scalar>(tau: &TraceClass<S>, tol: Tolerance) -> Result<Psl2<S>> {
    Ok(Psl2::with_tolerance(base_point_sl(tau.rep(), tol)?, tol))
}

/// Membership in the stabilizer `H̃ₜ` of `Aₜ`: `±` upper unitriangular for
/// `t = ±2`, diagonal otherwise.
pub fn in_stabilizer_sl<S: Scalar>(g: &Sl2<S>, t: &S, tol: Tolerance) -> bool {
    if is_parabolic_trace(t, tol) {
        is_signed_unitriangular(g, tol)
    } else {
        is_diagonal(g, tol)
    }
}

/// Membership in `H_τ`: translations for `τ = [2]`, diagonal classes for
/// `τ ∉ {[0], [2]}`, diagonal or antidiagonal classes for `τ = [0]`.
pub fn in_stabilizer_psl<S: Scalar>(g: &Psl2<S>, tau: &TraceClass<S>, tol: Tolerance) -> bool {
    let m = g.rep();
    if tau.is_parabolic(tol) {
        is_signed_unitriangular(m, tol)
    } else if tau.is_zero(tol) {
        is_diagonal(m, tol) || (m.a().is_zero(tol) && m.d().is_zero(tol))
    } else {
        is_diagonal(m, tol)
    }
}

fn is_diagonal<S: Scalar>(g: &Sl2<S>, tol: Tolerance) -> bool {
    g.b().is_zero(tol) && g.c().is_zero(tol)
}

fn is_signed_unitriangular<S: Scalar>(g: &Sl2<S>, tol: Tolerance) -> bool {
    if !g.c().is_zero(tol) || !g.a().approx_eq(g.d(), tol) {
        return false;
    }
    let one = g.a().one_like();
    g.a().approx_eq(&one, tol) || g.a().approx_eq(&-one, tol)
}

pub fn component_of_sl<S: Scalar>(a: &Sl2<S>, tol: Tolerance) -> ComponentIdSl<S> {
    match a.central_sign(tol) {
        Some(1) => ComponentIdSl::CenterPlus,
        Some(_) => ComponentIdSl::CenterMinus,
        None => ComponentIdSl::Trace(a.trace()),
    }
}

pub fn component_of_psl<S: Scalar>(f: &Psl2<S>, tol: Tolerance) -> ComponentIdPsl<S> {
    if f.is_identity(tol) {
        ComponentIdPsl::Identity
    } else {
        ComponentIdPsl::Trace(TraceClass::new(f.rep().trace(), tol))
    }
}

/// `F₂`: `[(α, β)] ↦ [[1 + αβ, α²], [−β², 1 − αβ]]`.
pub fn chart_parabolic<S: Scalar>(p: &ParabolicCoord<S>) -> Sl2<S> {
    chart_parabolic_signed(p, &p.alpha.one_like())
}

/// The parabolic chart centred on `εI₂`: `εI₂ + [[αβ, α²], [−β², −αβ]]`,
/// which covers `X̃_{2ε}`.
pub fn chart_parabolic_signed<S: Scalar>(p: &ParabolicCoord<S>, eps: &S) -> Sl2<S> {
    let (a, b) = (&p.alpha, &p.beta);
    let ab = a.clone() * b.clone();
    Sl2::new_unchecked(
        eps.clone() + ab.clone(),
        a.clone() * a.clone(),
        -(b.clone() * b.clone()),
        eps.clone() - ab,
    )
}

/// Inverse of [`chart_parabolic`] on `X̃₂`.
pub fn chart_parabolic_inv<S: Scalar>(b: &Sl2<S>, tol: Tolerance) -> Result<ParabolicCoord<S>> {
    if b.trace().real_cmp(2, tol) != Some(Ordering::Equal) {
        return Err(Error::NotInComponent("trace is not 2".into()));
    }
    parabolic_coords(b, &b.a().one_like(), tol)
}

/// Coordinates of a parabolic matrix relative to the sign `ε` of its trace:
/// `α² = b`, `β² = −c`, `αβ = a − ε`.
fn parabolic_coords<S: Scalar>(m: &Sl2<S>, eps: &S, tol: Tolerance) -> Result<ParabolicCoord<S>> {
    if m.is_central(tol) {
        return Err(Error::NotInComponent("central element".into()));
    }
    let (alpha, beta) = if !m.b().is_zero(tol) {
        let alpha = m.b().sqrt_principal()?;
        let beta = (m.a().clone() - eps.clone()) * alpha.inv()?;
        (alpha, beta)
    } else {
        (m.a().zero_like(), (-m.c().clone()).sqrt_principal()?)
    };
    ParabolicCoord::new(alpha, beta, tol)
}

/// `Fₜ`: `(α, β, γ) ↦ [[αλ + (1 − α)λ⁻¹, (λ − λ⁻¹)β], [−(λ − λ⁻¹)γ, (1 − α)λ + αλ⁻¹]]`.
pub fn chart_general<S: Scalar>(q: &GeneralCoord<S>, t: &S, tol: Tolerance) -> Result<Sl2<S>> {
    q.alpha.check_compatible(t)?;
    if is_parabolic_trace(t, tol) {
        return Err(Error::ParabolicTrace);
    }
    let lam = lambda_of_trace(t, tol)?;
    let lam_inv = lam.inv()?;
    let spread = lam.clone() - lam_inv.clone();
    let one = lam.one_like();
    let al = q.alpha.clone();
    Ok(Sl2::new_unchecked(
        al.clone() * lam.clone() + (one.clone() - al.clone()) * lam_inv.clone(),
        spread.clone() * q.beta.clone(),
        -(spread * q.gamma.clone()),
        (one - al.clone()) * lam + al * lam_inv,
    ))
}

/// Inverse of [`chart_general`]; the trace is read off the matrix.
pub fn chart_general_inv<S: Scalar>(b: &Sl2<S>, tol: Tolerance) -> Result<GeneralCoord<S>> {
    let t = b.trace();
    if is_parabolic_trace(&t, tol) {
        return Err(Error::ParabolicTrace);
    }
    let lam = lambda_of_trace(&t, tol)?;
    let lam_inv = lam.inv()?;
    let k = (lam - lam_inv.clone()).inv()?;
    Ok(GeneralCoord {
        alpha: (b.a().clone() - lam_inv) * k.clone(),
        beta: b.b().clone() * k.clone(),
        gamma: -(b.c().clone() * k),
    })
}

/// Returns `(t, g)` with `t = tr B` and `g⁻¹ Aₜ g = B`, using the case-wise
/// conjugators from the surjectivity arguments of the two charts.
pub fn conjugator_to_base<S: Scalar>(b: &Sl2<S>, tol: Tolerance) -> Result<(S, Sl2<S>)> {
    if b.is_central(tol) {
        return Err(Error::CentralElement);
    }
    let t = b.trace();
    if let Some(eps) = require_parabolic_sign(&t, tol) {
        let p = parabolic_coords(b, &eps, tol)?;
        let (alpha, beta) = (p.alpha, p.beta);
        let g = if !alpha.is_zero(tol) {
            Sl2::new_unchecked(alpha.inv()?, alpha.zero_like(), beta, alpha)
        } else {
            Sl2::new_unchecked(alpha.zero_like(), -beta.inv()?, beta, alpha)
        };
        return Ok((t, g));
    }
    let q = chart_general_inv(b, tol)?;
    let (alpha, beta, gamma) = (q.alpha, q.beta, q.gamma);
    let zero = alpha.zero_like();
    let one = alpha.one_like();
    let g = if !alpha.is_zero(tol) {
        let c = gamma * alpha.inv()?;
        Sl2::new_unchecked(alpha, beta, c, one)
    } else if beta.is_zero(tol) && !gamma.is_zero(tol) {
        Sl2::new_unchecked(one, -gamma.inv()?, gamma, zero)
    } else if gamma.is_zero(tol) && !beta.is_zero(tol) {
        Sl2::new_unchecked(zero, beta.clone(), -beta.inv()?, one)
    } else {
        // (0, 0, 0): B = diag(λ⁻¹, λ), reached by the Weyl element.
        Sl2::new_unchecked(zero.clone(), one.clone(), -one, zero)
    };
    Ok((t, g))
}

/// The automorphism `σ̃ₜ = ι_{Aₜ⁻¹}: g ↦ Aₜ⁻¹ g Aₜ` (or `σ_τ` on PSL).
#[derive(Clone, Debug)]
pub struct PointSymmetry<S> {
    base: Sl2<S>,
    base_inv: Sl2<S>,
}

impl<S: Scalar> PointSymmetry<S> {
    pub fn at_trace(t: &S, tol: Tolerance) -> Result<Self> {
        Ok(Self::at(base_point_sl(t, tol)?))
    }

    pub fn at_class(tau: &TraceClass<S>, tol: Tolerance) -> Result<Self> {
        Self::at_trace(tau.rep(), tol)
    }

    pub fn at(base: Sl2<S>) -> Self {
        let base_inv = base.inverse();
        PointSymmetry { base, base_inv }
    }

    pub fn base(&self) -> &Sl2<S> {
        &self.base
    }

    pub fn apply(&self, g: &Sl2<S>) -> Sl2<S> {
        &(&self.base_inv * g) * &self.base
    }

    pub fn apply_psl(&self, g: &Psl2<S>) -> Psl2<S> {
        Psl2::new(self.apply(g.rep()))
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

    fn m(a: i64, b: i64, c: i64, d: i64) -> Sl2<Q> {
        Sl2::new(qi(a), qi(b), qi(c), qi(d), tol()).unwrap()
    }

    fn q5(a: (i64, i64), b: (i64, i64)) -> Q {
        Q::from_parts(a, b, Discriminant::new(5).unwrap()).unwrap()
    }

    #[test]
    fn lambda_table() {
        assert_eq!(lambda_of_trace(&qi(2), tol()).unwrap(), qi(1));
        assert_eq!(lambda_of_trace(&qi(-2), tol()).unwrap(), qi(-1));
        assert_eq!(lambda_of_trace(&qi(0), tol()).unwrap(), Q::sqrt_d(Discriminant::gaussian()));
        let five_halves = Q::from_ratio(&Discriminant::gaussian(), 5, 2).unwrap();
        assert_eq!(lambda_of_trace(&five_halves, tol()).unwrap(), qi(2));
        // t = 3 in Q(√5): λ = (3 + √5)/2
        assert_eq!(lambda_of_trace(&q5((3, 1), (0, 1)), tol()).unwrap(), q5((3, 2), (1, 2)));
        // t = 1 in Q(√-3): λ = (1 + √-3)/2 = e^{iπ/3}
        let eis = Discriminant::eisenstein();
        assert_eq!(
            lambda_of_trace(&Q::from_int(&eis, 1), tol()).unwrap(),
            Q::from_parts((1, 2), (1, 2), eis).unwrap()
        );
        // t = -3 in Q(√5): |λ| > 1 picks (−3 − √5)/2
        assert_eq!(lambda_of_trace(&q5((-3, 1), (0, 1)), tol()).unwrap(), q5((-3, 2), (-1, 2)));
        assert!(matches!(lambda_of_trace(&qi(3), tol()), Err(Error::ExactModeUnsupported(_))));
    }

    #[test]
    fn lambda_solves_trace_equation_in_floats() {
        for t in [
            Complex64::new(1.0, 1.0),
            Complex64::new(-0.3, 0.0),
            Complex64::new(5.0, -2.0),
            Complex64::new(-7.0, 0.0),
        ] {
            let lam = lambda_of_trace(&t, tol()).unwrap();
            assert!((lam + lam.inv() - t).norm() < 1e-12);
            if is_elliptic_trace(&t, tol()) {
                assert!((lam.norm() - 1.0).abs() < 1e-12 && lam.im > 0.0);
            } else {
                assert!(lam.norm() > 1.0);
            }
        }
    }

    #[test]
    fn base_points() {
        assert_eq!(base_point_sl(&qi(2), tol()).unwrap(), m(1, 1, 0, 1));
        assert_eq!(base_point_sl(&qi(-2), tol()).unwrap(), m(-1, 1, 0, -1));
        let i = Q::sqrt_d(Discriminant::gaussian());
        let tau0 = TraceClass::new(qi(0), tol());
        let f0 = base_point_psl(&tau0, tol()).unwrap();
        assert_eq!(f0, Psl2::new(Sl2::new_unchecked(i.clone(), qi(0), qi(0), -i)));
    }

    #[test]
    fn trace_class_canonical_rep() {
        assert_eq!(TraceClass::new(qi(-2), tol()).rep(), &qi(2));
        assert_eq!(TraceClass::new(qi(0), tol()).rep(), &qi(0));
        assert_eq!(TraceClass::new(qi(-2), tol()).to_string(), "[2]");
        let t = TraceClass::new(Complex64::new(-1.0, 1.0), tol());
        assert_eq!(t.rep(), &Complex64::new(1.0, -1.0));
    }

    #[test]
    fn stabilizer_examples() {
        assert!(in_stabilizer_sl(&m(-1, 3, 0, -1), &qi(2), tol()));
        let five = Q::from_int(&Discriminant::new(5).unwrap(), 5);
        let diag = Sl2::diagonal(five).unwrap();
        assert!(in_stabilizer_sl(&diag, &q5((3, 1), (0, 1)), tol()));
        assert!(!in_stabilizer_sl(&m(1, 1, 0, 1), &qi(0), tol()));

        let anti = Psl2::new(m(0, -1, 1, 0));
        assert!(in_stabilizer_psl(&anti, &TraceClass::new(qi(0), tol()), tol()));
        let tau3 = TraceClass::new(Complex64::new(3.0, 0.0), tol());
        let anti_f = Psl2::new(Sl2::new_unchecked(
            Complex64::new(0.0, 0.0),
            Complex64::new(-1.0, 0.0),
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
        ));
        assert!(!in_stabilizer_psl(&anti_f, &tau3, tol()));
    }

    #[test]
    fn components() {
        assert_eq!(component_of_sl(&m(1, 0, 0, 1), tol()), ComponentIdSl::CenterPlus);
        assert_eq!(component_of_sl(&m(-1, 0, 0, -1), tol()), ComponentIdSl::CenterMinus);
        assert_eq!(component_of_sl(&m(1, 1, 0, 1), tol()), ComponentIdSl::Trace(qi(2)));
        let f = Psl2::new(m(-1, -1, 0, -1));
        assert_eq!(
            component_of_psl(&f, tol()),
            ComponentIdPsl::Trace(TraceClass::new(qi(2), tol()))
        );
        assert_eq!(component_of_psl(&Psl2::new(m(-1, 0, 0, -1)), tol()), ComponentIdPsl::Identity);
    }

    #[test]
    fn parabolic_chart_examples() {
        let p = ParabolicCoord::new(qi(1), qi(0), tol()).unwrap();
        assert_eq!(chart_parabolic(&p), m(1, 1, 0, 1));
        let p = ParabolicCoord::new(qi(0), qi(1), tol()).unwrap();
        assert_eq!(chart_parabolic(&p), m(1, 0, -1, 1));
        assert_eq!(ParabolicCoord::new(qi(0), qi(0), tol()), Err(Error::ZeroParameter));
        assert_eq!(
            ParabolicCoord::new(qi(-1), qi(2), tol()).unwrap(),
            ParabolicCoord::new(qi(1), qi(-2), tol()).unwrap()
        );
    }

    #[test]
    fn parabolic_inverse_rejects_other_components() {
        assert!(matches!(chart_parabolic_inv(&m(2, 1, 1, 1), tol()), Err(Error::NotInComponent(_))));
        assert!(matches!(chart_parabolic_inv(&m(1, 0, 0, 1), tol()), Err(Error::NotInComponent(_))));
        let p = chart_parabolic_inv(&m(1, 0, -1, 1), tol()).unwrap();
        assert_eq!(p, ParabolicCoord::new(qi(0), qi(1), tol()).unwrap());
    }

    #[test]
    fn general_chart_examples() {
        let t = q5((3, 1), (0, 1));
        let lam = lambda_of_trace(&t, tol()).unwrap();
        let lam_inv = lam.inv().unwrap();
        let zero = t.zero_like();
        let one = t.one_like();
        let q = GeneralCoord::new(one.clone(), zero.clone(), zero.clone(), tol()).unwrap();
        assert_eq!(
            chart_general(&q, &t, tol()).unwrap(),
            base_point_sl(&t, tol()).unwrap()
        );
        let q = GeneralCoord::new(zero.clone(), zero.clone(), one, tol()).unwrap();
        let expected = Sl2::new_unchecked(lam_inv.clone(), zero.clone(), -(lam.clone() - lam_inv), lam);
        assert_eq!(chart_general(&q, &t, tol()).unwrap(), expected);
        assert_eq!(chart_general(&q, &t.int_like(2), tol()), Err(Error::ParabolicTrace));
        assert!(matches!(
            GeneralCoord::new(t.one_like(), t.one_like(), t.one_like(), tol()),
            Err(Error::NotInComponent(_))
        ));
    }

    #[test]
    fn conjugator_examples() {
        let (t, g) = conjugator_to_base(&m(1, 0, -1, 1), tol()).unwrap();
        assert_eq!(t, qi(2));
        assert_eq!(g, m(0, -1, 1, 0));
        let a2 = m(1, 1, 0, 1);
        let (_, g) = conjugator_to_base(&a2, tol()).unwrap();
        assert_eq!(g, m(1, 0, 0, 1));
        assert_eq!(conjugator_to_base(&m(-1, 0, 0, -1), tol()), Err(Error::CentralElement));
        // trace −2, Gaussian entries
        let b = m(-1, 4, 0, -1);
        let (t, g) = conjugator_to_base(&b, tol()).unwrap();
        assert_eq!(base_point_sl(&t, tol()).unwrap().conj_right(&g), b);
    }

    #[test]
    fn conjugator_covers_the_antidiagonal_base_case() {
        // B = diag(λ⁻¹, λ) has general coordinates (0, 0, 0)
        let t = q5((3, 1), (0, 1));
        let lam = lambda_of_trace(&t, tol()).unwrap();
        let b = Sl2::diagonal(lam.inv().unwrap()).unwrap();
        let (t, g) = conjugator_to_base(&b, tol()).unwrap();
        assert_eq!(base_point_sl(&t, tol()).unwrap().conj_right(&g), b);
    }

    #[test]
    fn point_symmetry_fixes_base_and_matches_quandle_op() {
        let sigma = PointSymmetry::at_trace(&qi(2), tol()).unwrap();
        let a2 = m(1, 1, 0, 1);
        assert_eq!(sigma.apply(&a2), a2);
        // A₂⁻¹ [[1,0],[1,1]] A₂ by hand: [[1,-1],[0,1]]·[[1,0],[1,1]] = [[0,-1],[1,1]];
        // then ·[[1,1],[0,1]] = [[0,-1],[1,2]].
        let x = m(1, 0, 1, 1);
        assert_eq!(sigma.apply(&x), m(0, -1, 1, 2));
        assert_eq!(sigma.apply(&x), x.quandle_op(&a2));
        let g = m(2, 1, 1, 1);
        let h = m(1, 3, 0, 1);
        assert_eq!(sigma.apply(&(&g * &h)), &sigma.apply(&g) * &sigma.apply(&h));
    }
}
