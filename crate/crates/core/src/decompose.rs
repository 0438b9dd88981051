//! Factorizations certifying that every `X̃ₜ` generates SL(2,ℂ): first into
//! transvections `U_z`, `L_z`, then each transvection into two elements of
//! `X̃ₜ`.

use std::fmt;

use crate::components::lambda_of_trace;
use crate::error::{Error, Result};
use crate::moebius::{is_parabolic_trace, Sl2};
use crate::numerics::{Scalar, Tolerance};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransvectionKind {
    U,
    L,
}

/// `U_z = [[1, z], [0, 1]]` or `L_z = [[1, 0], [z, 1]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Transvection<S> {
    pub kind: TransvectionKind,
    pub z: S,
}

impl<S: Scalar> Transvection<S> {
    pub fn u(z: S) -> Self {
        Transvection { kind: TransvectionKind::U, z }
    }

    pub fn l(z: S) -> Self {
        Transvection { kind: TransvectionKind::L, z }
    }

    pub fn matrix(&self) -> Sl2<S> {
        match self.kind {
            TransvectionKind::U => Sl2::upper(self.z.clone()),
            TransvectionKind::L => Sl2::lower(self.z.clone()),
        }
    }
}

impl<S: Scalar> fmt::Display for Transvection<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            TransvectionKind::U => "U",
            TransvectionKind::L => "L",
        };
        write!(f, "{k}({})", self.z.compact())
    }
}

/// An ordered list of factors whose left-to-right product should equal
/// `target`.
#[derive(Clone, Debug, PartialEq)]
pub struct FactorWord<S> {
    pub factors: Vec<Sl2<S>>,
    pub target: Sl2<S>,
}

impl<S: Scalar> FactorWord<S> {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn product(&self) -> Sl2<S> {
        self.factors
            .iter()
            .fold(Sl2::identity(&self.target.field()), |acc, f| &acc * f)
    }

    /// Exact equality in exact mode. In float mode the residual may grow by
    /// `10·eps` per factor, relative to the size of the factors.
    pub fn verify(&self, tol: Tolerance) -> bool {
        if S::EXACT {
            return self.product().approx_eq(&self.target, tol);
        }
        let scale = self
            .factors
            .iter()
            .map(|f| f.frobenius_norm())
            .fold(self.target.frobenius_norm().max(1.0), f64::max);
        let n = self.factors.len().max(1) as f64;
        self.product().distance(&self.target) <= 10.0 * tol.eps() * n * scale * scale
    }
}

/// `A` as a product of at most four transvections.
pub fn decompose_ul<S: Scalar>(m: &Sl2<S>, tol: Tolerance) -> Result<Vec<Transvection<S>>> {
    let one = m.a().one_like();
    if !m.det().approx_eq(&one, tol) {
        return Err(Error::NotUnimodular);
    }
    let [a, b, c, d] = m.entries().map(Clone::clone);
    if !b.is_zero(tol) {
        return Ok(vec![
            Transvection::l((d - one.clone()).checked_div(&b)?),
            Transvection::u(b.clone()),
            Transvection::l((a - one).checked_div(&b)?),
        ]);
    }
    if !c.is_zero(tol) {
        let ac = a.clone() * c.clone();
        return Ok(vec![
            Transvection::u((a.clone() - one.clone()).checked_div(&c)?),
            Transvection::l(c),
            Transvection::u((one - a).checked_div(&ac)?),
        ]);
    }
    let a_inv = a.inv()?;
    Ok(vec![
        Transvection::u(-(a.clone() * (a.clone() - one.clone()))),
        Transvection::l(-a_inv),
        Transvection::u(a - one.clone()),
        Transvection::l(one),
    ])
}

/// Two elements of `X̃ₜ` whose product is the transvection; a single factor
/// when `t = 2`.
pub fn transvection_in_xt<S: Scalar>(tr: &Transvection<S>, t: &S, tol: Tolerance) -> Result<FactorWord<S>> {
    if tr.z.is_zero(tol) {
        return Err(Error::ZeroTransvection);
    }
    let target = tr.matrix();
    let z = tr.z.clone();
    let one = z.one_like();
    let new = |a: S, b: S, c: S, d: S| Sl2::new_unchecked(a, b, c, d);
    let o = || z.zero_like();
    let factors = if is_parabolic_trace(t, tol) && t.real_cmp(0, tol) == Some(std::cmp::Ordering::Greater) {
        vec![target.clone()]
    } else if is_parabolic_trace(t, tol) {
        let m1 = -one.clone();
        // Both factor pairs below are unipotent up to sign; the first factor
        // of the primary pair degenerates to −I at z = 1, so switch pairs.
        let z_is_one = z.approx_eq(&one, tol);
        match (tr.kind, z_is_one) {
            (TransvectionKind::U, false) => vec![
                new(m1.clone(), one.clone() - z.clone(), o(), m1.clone()),
                new(m1.clone(), m1.clone(), o(), m1.clone()),
            ],
            (TransvectionKind::U, true) => vec![
                new(m1.clone(), m1.clone() - z.clone(), o(), m1.clone()),
                new(m1.clone(), one.clone(), o(), m1.clone()),
            ],
            (TransvectionKind::L, false) => vec![
                new(m1.clone(), o(), m1.clone(), m1.clone()),
                new(m1.clone(), o(), one.clone() - z.clone(), m1.clone()),
            ],
            (TransvectionKind::L, true) => vec![
                new(m1.clone(), o(), one.clone(), m1.clone()),
                new(m1.clone(), o(), m1.clone() - z.clone(), m1.clone()),
            ],
        }
    } else {
        let lam = lambda_of_trace(t, tol)?;
        let li = lam.inv()?;
        let diag = new(li.clone(), o(), o(), lam.clone());
        match tr.kind {
            TransvectionKind::U => vec![new(lam, li.clone() * z.clone(), o(), li), diag],
            TransvectionKind::L => vec![diag, new(lam, o(), li.clone() * z.clone(), li)],
        }
    };
    Ok(FactorWord { factors, target })
}

/// A word in `X̃ₜ` with product `A`: at most eight factors. Identity
/// transvections contribute nothing.
pub fn decompose_in_xt<S: Scalar>(m: &Sl2<S>, t: &S, tol: Tolerance) -> Result<FactorWord<S>> {
    let mut factors = Vec::new();
    for tr in decompose_ul(m, tol)? {
        if tr.z.is_zero(tol) {
            continue;
        }
        factors.extend(transvection_in_xt(&tr, t, tol)?.factors);
    }
    Ok(FactorWord {
        factors,
        target: m.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::components::{component_of_sl, ComponentIdSl};
    use crate::numerics::{Discriminant, QuadraticNumber};
    use num_complex::Complex64;

    type Q = QuadraticNumber;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn qi(n: i64) -> Q {
        Q::from_int(&Discriminant::gaussian(), n)
    }

    fn qr(n: i64, d: i64) -> Q {
        Q::from_ratio(&Discriminant::gaussian(), n, d).unwrap()
    }

    fn m(a: Q, b: Q, c: Q, d: Q) -> Sl2<Q> {
        Sl2::new(a, b, c, d, tol()).unwrap()
    }

    fn mi(a: i64, b: i64, c: i64, d: i64) -> Sl2<Q> {
        m(qi(a), qi(b), qi(c), qi(d))
    }

    fn product(ts: &[Transvection<Q>]) -> Sl2<Q> {
        ts.iter().fold(mi(1, 0, 0, 1), |acc, t| &acc * &t.matrix())
    }

    #[test]
    fn ul_first_branch() {
        let a = mi(0, -1, 1, 0);
        let w = decompose_ul(&a, tol()).unwrap();
        assert_eq!(w, vec![Transvection::l(qi(1)), Transvection::u(qi(-1)), Transvection::l(qi(1))]);
        assert_eq!(product(&w), a);
    }

    #[test]
    fn ul_second_branch() {
        let a = m(qi(2), qi(0), qi(3), qr(1, 2));
        let w = decompose_ul(&a, tol()).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w[1], Transvection::l(qi(3)));
        assert_eq!(product(&w), a);
    }

    #[test]
    fn ul_third_branch() {
        let id = mi(1, 0, 0, 1);
        let w = decompose_ul(&id, tol()).unwrap();
        assert_eq!(
            w,
            vec![Transvection::u(qi(0)), Transvection::l(qi(-1)), Transvection::u(qi(0)), Transvection::l(qi(1))]
        );
        assert_eq!(product(&w), id);

        let a = m(qi(2), qi(0), qi(0), qr(1, 2));
        let w = decompose_ul(&a, tol()).unwrap();
        assert_eq!(
            w,
            vec![Transvection::u(qi(-2)), Transvection::l(qr(-1, 2)), Transvection::u(qi(1)), Transvection::l(qi(1))]
        );
        assert_eq!(product(&w), a);
    }

    #[test]
    fn ul_rejects_non_unimodular() {
        let a = Sl2::new_unchecked(qi(2), qi(0), qi(0), qi(1));
        assert_eq!(decompose_ul(&a, tol()), Err(Error::NotUnimodular));
    }

    #[test]
    fn minus_two_pairs() {
        let w = transvection_in_xt(&Transvection::u(qi(1)), &qi(-2), tol()).unwrap();
        assert_eq!(w.product(), mi(1, 1, 0, 1));
        for z in [1, 2, -1, 5] {
            for tr in [Transvection::u(qi(z)), Transvection::l(qi(z))] {
                let w = transvection_in_xt(&tr, &qi(-2), tol()).unwrap();
                assert_eq!(w.len(), 2);
                assert_eq!(w.product(), tr.matrix(), "{tr}");
                for f in &w.factors {
                    assert_eq!(f.trace(), qi(-2));
                    assert!(!f.is_central(tol()), "{tr}");
                }
            }
        }
    }

    #[test]
    fn general_trace_pairs() {
        // t = 1 has λ = (1 + √−3)/2, so work in ℚ(√−3).
        let d = Discriminant::eisenstein();
        let t = Q::from_int(&d, 1);
        for tr in [Transvection::u(Q::from_int(&d, 3)), Transvection::l(Q::from_int(&d, -2))] {
            let w = transvection_in_xt(&tr, &t, tol()).unwrap();
            assert_eq!(w.product(), tr.matrix());
            for f in &w.factors {
                assert_eq!(f.trace(), t);
            }
        }
    }

    #[test]
    fn trace_three_in_floats() {
        let t = Complex64::new(3.0, 0.0);
        let z = Complex64::new(0.5, -2.0);
        for tr in [Transvection::u(z), Transvection::l(z)] {
            let w = transvection_in_xt(&tr, &t, tol()).unwrap();
            assert!(w.verify(tol()));
            for f in &w.factors {
                assert!(f.trace().approx_eq(&t, tol()));
            }
        }
    }

    #[test]
    fn zero_transvection() {
        assert_eq!(
            transvection_in_xt(&Transvection::u(qi(0)), &qi(-2), tol()),
            Err(Error::ZeroTransvection)
        );
    }

    #[test]
    fn trace_two_is_single_factor() {
        let w = decompose_in_xt(&mi(1, 5, 0, 1), &qi(2), tol()).unwrap();
        assert_eq!(w.factors, vec![mi(1, 5, 0, 1)]);
    }

    #[test]
    fn rotation_at_minus_two() {
        let a = mi(0, -1, 1, 0);
        let w = decompose_in_xt(&a, &qi(-2), tol()).unwrap();
        assert_eq!(w.len(), 6);
        assert!(w.verify(tol()));
        for f in &w.factors {
            assert_eq!(component_of_sl(f, tol()), ComponentIdSl::Trace(qi(-2)));
        }
    }

    #[test]
    fn identity_skips_zero_transvections() {
        let w = decompose_in_xt(&mi(1, 0, 0, 1), &qi(-2), tol()).unwrap();
        assert_eq!(w.len(), 4);
        assert!(w.verify(tol()));
    }
}
