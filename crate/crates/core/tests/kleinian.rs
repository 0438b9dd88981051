//! Regression values for the preset groups. Ball sizes, coset counts and
//! minimum separations were first computed by an independent floating point
//! enumeration (numpy, Frobenius window 20, distance min(|A-B|, |A+B|)).

use std::time::Instant;

use conjquandle::kleinian::*;
use conjquandle::Tolerance;

fn tol() -> Tolerance {
    Tolerance::default()
}

fn w(s: &str) -> Word {
    Word::parse(s).unwrap()
}

#[test]
fn figure_eight_counts() {
    let t = Instant::now();
    let q = build_quandle(&figure_eight(), &w("A"), 6, 1_000_000, tol()).unwrap();
    eprintln!("fig8 r6 built in {:?}", t.elapsed());
    assert_eq!(q.ball_sizes(), vec![1, 5, 17, 53, 161, 475, 1375]);
    assert_eq!(q.coset_counts()[2..], [9, 27, 80, 230, 658]);
    let r = discreteness_report(&q, &[2, 3, 4, 5, 6], 20.0).unwrap();
    let in_window: Vec<usize> = r.rows.iter().map(|x| x.in_window).collect();
    assert_eq!(in_window, vec![9, 27, 70, 148, 212]);
    let s3 = 3f64.sqrt();
    let s2 = 2f64.sqrt();
    for (row, want) in r.rows.iter().zip([s3, s3, s2, s2, s2]) {
        assert!((row.min_separation - want).abs() < 1e-9, "{row:?}");
    }
    eprintln!("fig8 total {:?}", t.elapsed());
}

#[test]
fn control_counts() {
    let t = Instant::now();
    let q = build_quandle(&nondiscrete_control(), &w("A"), 6, 1_000_000, tol()).unwrap();
    assert_eq!(q.ball_sizes()[2..], [17, 53, 161, 485, 1457]);
    assert_eq!(q.coset_counts()[2..], [9, 27, 81, 243, 727]);
    let r = discreteness_report(&q, &[4, 5, 6], 20.0).unwrap();
    let want = [0.0179006, 0.0177006, 0.00279073];
    for (row, want) in r.rows.iter().zip(want) {
        assert!((row.min_separation - want).abs() < 1e-6, "{row:?}");
    }
    assert_eq!(r.verdict, Verdict::ShrinkingEvidence);
    eprintln!("control total {:?}", t.elapsed());
}

#[test]
fn figure_eight_injectivity_radius_five() {
    let t = Instant::now();
    let q = build_quandle(&figure_eight(), &w("A"), 5, 1_000_000, tol()).unwrap();
    let r = injectivity_check(&q);
    eprintln!("injectivity {:?} {:?}", t.elapsed(), (r.pairs, r.equal_cosets));
    assert_eq!(r.pairs, 475 * 475);
    assert!(r.mismatches.is_empty());
}
