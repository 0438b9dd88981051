//! Seeded samplers for property checks.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::components::{GeneralCoord, ParabolicCoord};
use crate::moebius::{Psl2, Sl2};
use crate::numerics::{Discriminant, QuadraticNumber, Scalar, Tolerance};
use crate::quandle::{check_conjugation_axioms, AxiomReport};

/// Draws random scalars of one mode.
pub trait Sampler {
    type S: Scalar;

    fn scalar<R: Rng>(&self, rng: &mut R) -> Self::S;

    /// A scalar that is nonzero with respect to `tol`.
    fn nonzero<R: Rng>(&self, rng: &mut R, tol: Tolerance) -> Self::S {
        loop {
            let x = self.scalar(rng);
            if !x.is_zero(tol) {
                return x;
            }
        }
    }

    /// `[[a, b], [c, (1 + bc)/a]]` with `a` nonzero.
    fn sl2<R: Rng>(&self, rng: &mut R, tol: Tolerance) -> Sl2<Self::S> {
        let a = self.nonzero(rng, tol);
        let b = self.scalar(rng);
        let c = self.scalar(rng);
        let one = a.one_like();
        let d = (one + b.clone() * c.clone()) * a.inv().expect("nonzero");
        Sl2::new_unchecked(a, b, c, d)
    }

    /// A random matrix other than `±I`.
    fn non_central<R: Rng>(&self, rng: &mut R, tol: Tolerance) -> Sl2<Self::S> {
        loop {
            let m = self.sl2(rng, tol);
            if !m.is_central(tol) {
                return m;
            }
        }
    }

    fn parabolic_coord<R: Rng>(&self, rng: &mut R, tol: Tolerance) -> ParabolicCoord<Self::S> {
        loop {
            if let Ok(p) = ParabolicCoord::new(self.scalar(rng), self.scalar(rng), tol) {
                return p;
            }
        }
    }

    /// A point of `α(1 − α) + βγ = 0`.
    fn general_coord<R: Rng>(&self, rng: &mut R, tol: Tolerance) -> GeneralCoord<Self::S> {
        let alpha = self.scalar(rng);
        let beta = self.nonzero(rng, tol);
        let one = alpha.one_like();
        let gamma = -(alpha.clone() * (one - alpha.clone())) * beta.inv().expect("nonzero");
        GeneralCoord::new(alpha, beta, gamma, tol).expect("on the variety by construction")
    }
}

/// Complex scalars with real and imaginary parts uniform in `[-scale, scale]`.
#[derive(Clone, Copy, Debug)]
pub struct FloatSampler {
    pub scale: f64,
}

impl Default for FloatSampler {
    fn default() -> Self {
        FloatSampler { scale: 2.0 }
    }
}

impl Sampler for FloatSampler {
    type S = Complex64;

    fn scalar<R: Rng>(&self, rng: &mut R) -> Complex64 {
        Complex64::new(
            rng.gen_range(-self.scale..=self.scale),
            rng.gen_range(-self.scale..=self.scale),
        )
    }

    /// Keeps `|a| ≥ 1/2` so that entries stay moderate.
    fn nonzero<R: Rng>(&self, rng: &mut R, _: Tolerance) -> Complex64 {
        loop {
            let x = self.scalar(rng);
            if x.norm() >= 0.5 {
                return x;
            }
        }
    }
}

/// Elements `p/q + (r/s)√d` with numerators in `[-max_num, max_num]` and
/// denominators in `[1, max_den]`.
#[derive(Clone, Copy, Debug)]
pub struct ExactSampler {
    pub d: Discriminant,
    pub max_num: i64,
    pub max_den: i64,
}

impl ExactSampler {
    pub fn new(d: Discriminant) -> Self {
        ExactSampler { d, max_num: 5, max_den: 3 }
    }
}

impl Sampler for ExactSampler {
    type S = QuadraticNumber;

    fn scalar<R: Rng>(&self, rng: &mut R) -> QuadraticNumber {
        let mut part = || (rng.gen_range(-self.max_num..=self.max_num), rng.gen_range(1..=self.max_den));
        let (a, b) = (part(), part());
        QuadraticNumber::from_parts(a, b, self.d).expect("positive denominators")
    }
}

/// Checks the quandle axioms of Conj(SL) and Conj(PSL) on `triples`
/// random triples drawn from a pool of `pool` random matrices.
pub fn random_axiom_check<Sm: Sampler>(
    sampler: &Sm,
    pool: usize,
    triples: usize,
    seed: u64,
    tol: Tolerance,
) -> (AxiomReport, AxiomReport) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pool = pool.max(1);
    let els: Vec<Sl2<Sm::S>> = (0..pool).map(|_| sampler.sl2(&mut rng, tol)).collect();
    let idx: Vec<(usize, usize, usize)> = (0..triples)
        .map(|_| (rng.gen_range(0..pool), rng.gen_range(0..pool), rng.gen_range(0..pool)))
        .collect();
    let psl: Vec<Psl2<Sm::S>> = els.iter().map(|m| Psl2::with_tolerance(m.clone(), tol)).collect();
    (
        check_conjugation_axioms(&els, &idx, tol),
        check_conjugation_axioms(&psl, &idx, tol),
    )
}
