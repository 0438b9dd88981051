//! A fast invariant battery backing the `selftest` subcommand.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::components::{
    base_point_sl, chart_general, chart_general_inv, chart_parabolic, chart_parabolic_inv, component_of_psl,
    component_of_sl, conjugator_to_base, in_stabilizer_sl, ComponentIdPsl, ComponentIdSl, TraceClass,
};
use crate::decompose::decompose_in_xt;
use crate::kleinian::{build_quandle, figure_eight, injectivity_check, picard, quandle_hom_check, Word};
use crate::moebius::Psl2;
use crate::numerics::{Discriminant, QuadraticNumber, Scalar, Tolerance};
use crate::quandle::{check_conjugation_axioms, Coset, QuandleTriplet};
use crate::random::{ExactSampler, FloatSampler, Sampler};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SelfTestRow {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

fn row(name: &'static str, failures: usize, total: usize) -> SelfTestRow {
    SelfTestRow {
        name,
        passed: failures == 0,
        detail: format!("{failures} failures in {total}"),
    }
}

/// Runs every check with `n` random samples each.
pub fn run(seed: u64, n: usize, tol: Tolerance) -> Vec<SelfTestRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gauss = ExactSampler::new(Discriminant::gaussian());
    let float = FloatSampler::default();
    let mut rows = Vec::new();

    let els: Vec<_> = (0..n.max(3)).map(|_| gauss.sl2(&mut rng, tol)).collect();
    let triples: Vec<_> = (0..n).map(|i| (i % els.len(), (i * 7 + 1) % els.len(), (i * 13 + 2) % els.len())).collect();
    rows.push(SelfTestRow {
        name: "quandle axioms (exact SL)",
        passed: check_conjugation_axioms(&els, &triples, tol).all_pass(),
        detail: format!("{} triples", triples.len()),
    });
    let psl: Vec<Psl2<QuadraticNumber>> = els.iter().cloned().map(Psl2::new).collect();
    rows.push(SelfTestRow {
        name: "quandle axioms (exact PSL)",
        passed: check_conjugation_axioms(&psl, &triples, tol).all_pass(),
        detail: format!("{} triples", triples.len()),
    });

    let mut bad = 0;
    for _ in 0..n {
        let a = gauss.non_central(&mut rng, tol);
        let g = gauss.sl2(&mut rng, tol);
        let same = component_of_sl(&a, tol) == component_of_sl(&a.conj_right(&g), tol);
        let class = component_of_psl(&Psl2::new(a.clone()), tol);
        let projected = class.approx_eq(&ComponentIdPsl::Trace(TraceClass::new(a.trace(), tol)), tol);
        if !same || !projected {
            bad += 1;
        }
    }
    rows.push(row("component invariance", bad, n));

    let mut bad = 0;
    for _ in 0..n {
        let p = gauss.parabolic_coord(&mut rng, tol);
        let ok = chart_parabolic_inv(&chart_parabolic(&p), tol).is_ok_and(|q| q.approx_eq(&p, tol));
        if !ok {
            bad += 1;
        }
    }
    rows.push(row("parabolic chart round trip", bad, n));

    let t3 = Complex64::new(3.0, 0.0);
    let mut bad = 0;
    for _ in 0..n {
        let q = float.general_coord(&mut rng, tol);
        let ok = chart_general(&q, &t3, tol)
            .and_then(|m| chart_general_inv(&m, tol))
            .is_ok_and(|r| r.approx_eq(&q, tol.scaled(10.0)));
        if !ok {
            bad += 1;
        }
    }
    rows.push(row("general chart round trip", bad, n));

    let mut bad = 0;
    for t in [Complex64::new(-2.0, 0.0), t3, Complex64::new(1.0, 1.0)] {
        for _ in 0..n {
            let a = float.sl2(&mut rng, tol);
            let ok = decompose_in_xt(&a, &t, tol).is_ok_and(|w| {
                w.len() <= 8
                    && w.verify(tol)
                    && w.factors.iter().all(|f| component_of_sl(f, tol) == ComponentIdSl::Trace(f.trace()))
                    && w.factors.iter().all(|f| f.trace().approx_eq(&t, tol.scaled(10.0)))
            });
            if !ok {
                bad += 1;
            }
        }
    }
    rows.push(row("generation certificate", bad, 3 * n));

    let t2 = QuadraticNumber::from_int(&gauss.d, 2);
    let base = base_point_sl(&t2, tol).expect("parabolic base point");
    let stab = t2.clone();
    let triplet = QuandleTriplet::new(base.clone(), move |h| in_stabilizer_sl(h, &stab, tol));
    let mut bad = 0;
    for _ in 0..n {
        let x = gauss.sl2(&mut rng, tol);
        let y = gauss.sl2(&mut rng, tol);
        let phi = |g: &crate::moebius::Sl2<QuadraticNumber>| base.conj_right(g);
        let lhs = phi(&triplet.coset_op(&Coset::new(x.clone()), &Coset::new(y.clone())).rep);
        let rhs = phi(&x).quandle_op(&phi(&y));
        let back = conjugator_to_base(&phi(&x), tol)
            .is_ok_and(|(_, g)| triplet.coset_eq(&Coset::new(g), &Coset::new(x.clone())));
        if lhs != rhs || !back {
            bad += 1;
        }
    }
    rows.push(row("homogeneous presentation", bad, n));

    let fig8 = figure_eight();
    let pic = picard();
    let relators_ok = fig8.check_relators(tol).is_ok_and(|b| b.is_empty())
        && pic.check_relators(tol).is_ok_and(|b| b.is_empty());
    rows.push(SelfTestRow {
        name: "preset relators",
        passed: relators_ok,
        detail: "figure-eight and Picard".into(),
    });

    match build_quandle(&fig8, &Word::parse("A").expect("valid"), 3, 1_000_000, tol) {
        Ok(q) => {
            let inj = injectivity_check(&q);
            rows.push(row("avatar injectivity (radius 3)", inj.mismatches.len(), inj.pairs));
            rows.push(SelfTestRow {
                name: "triplet homomorphism (radius 3)",
                passed: quandle_hom_check(&q, n, seed).is_ok(),
                detail: format!("{n} pairs"),
            });
        }
        Err(e) => rows.push(SelfTestRow {
            name: "avatar injectivity (radius 3)",
            passed: false,
            detail: e.to_string(),
        }),
    }
    rows
}

#[cfg(test)]
mod tests {
    #[test]
    fn battery_passes() {
        let rows = super::run(1, 30, super::Tolerance::default());
        for r in &rows {
            assert!(r.passed, "{r:?}");
        }
    }
}
