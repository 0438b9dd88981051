use std::cmp::Ordering;
use std::fmt;

use num_complex::{Complex, Complex64};
use num_traits::Float;

use super::{fmt_real, Scalar, Tolerance};
use crate::error::{Error, Result};

impl<T> Scalar for Complex<T>
where
    T: Float + fmt::Debug + Send + Sync + 'static,
{
    type Field = ();
    type Key = (i64, i64);

    const EXACT: bool = false;

    fn field(&self) {}

    fn from_int(_: &(), n: i64) -> Self {
        Complex::new(T::from(n).expect("integer fits the float type"), T::zero())
    }

    fn from_ratio(_: &(), num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        let v = T::from(num).ok_or(Error::NonFinite)? / T::from(den).ok_or(Error::NonFinite)?;
        Ok(Complex::new(v, T::zero()))
    }

    fn check_compatible(&self, _: &Self) -> Result<()> {
        Ok(())
    }

    fn is_zero(&self, tol: Tolerance) -> bool {
        self.norm().to_f64().unwrap_or(f64::INFINITY) <= tol.eps()
    }

    fn inv(&self) -> Result<Self> {
        if self.re.is_zero() && self.im.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let r = self.inv();
        if r.re.is_finite() && r.im.is_finite() {
            Ok(r)
        } else {
            Err(Error::DivisionByZero)
        }
    }

    fn conj(&self) -> Self {
        Complex::conj(self)
    }

    fn sqrt_principal(&self) -> Result<Self> {
        let mut r = self.sqrt();
        // num-complex follows the sign of a signed-zero imaginary part.
        if r.re.is_zero() && r.im < T::zero() {
            r = -r;
        }
        if r.re < T::zero() {
            r = -r;
        }
        Ok(r)
    }

    fn to_c64(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    fn canonical_sign(&self, tol: Tolerance) -> Ordering {
        let z = self.to_c64();
        if z.re.abs() > tol.eps() {
            z.re.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
        } else if z.im.abs() > tol.eps() {
            z.im.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
        } else {
            Ordering::Equal
        }
    }

    fn real_cmp(&self, n: i64, tol: Tolerance) -> Option<Ordering> {
        let z = self.to_c64();
        if z.im.abs() > tol.eps() {
            return None;
        }
        let diff = z.re - n as f64;
        if diff.abs() <= tol.eps() {
            Some(Ordering::Equal)
        } else {
            diff.partial_cmp(&0.0)
        }
    }

    fn modulus_cmp_one(&self) -> Ordering {
        self.to_c64()
            .norm_sqr()
            .partial_cmp(&1.0)
            .unwrap_or(Ordering::Equal)
    }

    fn key(&self, tol: Tolerance) -> (i64, i64) {
        let g = tol.key_grid();
        let z = self.to_c64();
        ((z.re / g).round() as i64, (z.im / g).round() as i64)
    }

    fn compact(&self) -> String {
        let z = self.to_c64();
        let re = fmt_real(z.re);
        let im = fmt_real(z.im);
        match (re.as_str(), im.as_str()) {
            (_, "0") => re,
            ("0", _) => format!("{im}i"),
            _ if z.im < 0.0 => format!("{re}{im}i"),
            _ => format!("{re}+{im}i"),
        }
    }
}
