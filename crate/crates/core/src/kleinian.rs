//! Finitely generated subgroups of PSL(2,ℂ) and the quandle `Q(Γ, γ)`.
//!
//! Elements are enumerated as a Cayley ball in shortlex order. A coset
//! `C_Γ(γ)·g` is stored by its avatar `g⁻¹γg`, since `Hx = Hy` exactly when
//! `x⁻¹γx = y⁻¹γy`; the canonical map into Conj(PSL(2,ℂ)) is then the
//! identity on stored data.

use std::collections::HashMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::components::{component_of_psl, ComponentIdPsl};
use crate::error::{Error, Result};
use crate::moebius::{classify, psl_eq, IsometryClass, Psl2, Sl2};
use crate::numerics::{Discriminant, QuadraticNumber, Scalar, Tolerance};
use crate::quandle::{Coset, QuandleTriplet};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inv(self) -> Letter {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

/// A word in the generators. Written either with letters (`A` is the first
/// generator, `a` its inverse) or as signed 1-based indices (`1,-2`).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(pub Vec<Letter>);

impl Word {
    pub fn identity() -> Word {
        Word(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn parse(s: &str) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(Word::identity());
        }
        if s.chars().all(|c| c.is_ascii_alphabetic()) {
            let letters = s
                .chars()
                .map(|c| Letter {
                    generator: (c.to_ascii_uppercase() as u8 - b'A') as usize,
                    inverse: c.is_ascii_lowercase(),
                })
                .collect();
            return Ok(Word(letters));
        }
        let mut letters = Vec::new();
        for tok in s.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
            let n: i64 = tok.parse().map_err(|_| Error::InvalidWord(s.to_string()))?;
            if n == 0 {
                return Err(Error::InvalidWord(s.to_string()));
            }
            letters.push(Letter {
                generator: (n.unsigned_abs() - 1) as usize,
                inverse: n < 0,
            });
        }
        Ok(Word(letters))
    }

    /// Signed 1-based indices.
    pub fn from_indices(indices: &[i64]) -> Result<Word> {
        let mut letters = Vec::with_capacity(indices.len());
        for &n in indices {
            if n == 0 {
                return Err(Error::InvalidWord(format!("{indices:?}")));
            }
            letters.push(Letter {
                generator: (n.unsigned_abs() - 1) as usize,
                inverse: n < 0,
            });
        }
        Ok(Word(letters))
    }

    pub fn to_indices(&self) -> Vec<i64> {
        self.0
            .iter()
            .map(|l| {
                let n = l.generator as i64 + 1;
                if l.inverse {
                    -n
                } else {
                    n
                }
            })
            .collect()
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        match self.0.iter().find(|l| l.generator >= rank) {
            Some(_) => Err(Error::InvalidWord(format!("{self} uses a generator beyond {rank}"))),
            None => Ok(()),
        }
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        if self.0.iter().all(|l| l.generator < 26) {
            for l in &self.0 {
                let c = (b'A' + l.generator as u8) as char;
                write!(f, "{}", if l.inverse { c.to_ascii_lowercase() } else { c })?;
            }
            Ok(())
        } else {
            let idx: Vec<String> = self.to_indices().iter().map(i64::to_string).collect();
            f.write_str(&idx.join(","))
        }
    }
}

/// A finitely generated subgroup of PSL(2,ℂ).
#[derive(Clone, Debug)]
pub struct GroupSpec<S: Scalar> {
    pub name: String,
    pub generators: Vec<Psl2<S>>,
    pub relators: Vec<Word>,
    /// Recorded hypothesis only: the group is the fundamental group of a
    /// complete finite-volume hyperbolic 3-orbifold.
    pub finite_volume: bool,
}

impl<S: Scalar> GroupSpec<S> {
    pub fn new(name: impl Into<String>, generators: Vec<Psl2<S>>) -> Self {
        GroupSpec {
            name: name.into(),
            generators,
            relators: Vec::new(),
            finite_volume: false,
        }
    }

    pub fn with_relators(mut self, relators: Vec<Word>) -> Self {
        self.relators = relators;
        self
    }

    pub fn with_finite_volume(mut self, finite_volume: bool) -> Self {
        self.finite_volume = finite_volume;
        self
    }

    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    pub fn field(&self) -> Option<S::Field> {
        self.generators.first().map(Psl2::field)
    }

    fn letter_value(&self, l: Letter) -> Psl2<S> {
        let g = &self.generators[l.generator];
        if l.inverse {
            g.inverse()
        } else {
            g.clone()
        }
    }

    pub fn evaluate(&self, w: &Word) -> Result<Psl2<S>> {
        w.check_rank(self.rank())?;
        let field = self.field().ok_or_else(|| Error::InvalidWord("group has no generators".into()))?;
        Ok(w
            .0
            .iter()
            .fold(Psl2::identity(&field), |acc, &l| acc.compose(&self.letter_value(l))))
    }

    /// Indices of relators that do not evaluate to the identity.
    pub fn check_relators(&self, tol: Tolerance) -> Result<Vec<usize>> {
        let mut bad = Vec::new();
        for (i, r) in self.relators.iter().enumerate() {
            if !self.evaluate(r)?.is_identity(tol) {
                bad.push(i);
            }
        }
        Ok(bad)
    }

    /// `ι_f(Γ)`: every generator replaced by `f g f⁻¹`.
    pub fn conjugated(&self, f: &Psl2<S>) -> GroupSpec<S> {
        GroupSpec {
            name: self.name.clone(),
            generators: self.generators.iter().map(|g| g.conj_by(f)).collect(),
            relators: self.relators.clone(),
            finite_volume: self.finite_volume,
        }
    }

    /// Letters in shortlex order: `A < a < B < b < ...`.
    fn alphabet(&self) -> Vec<Letter> {
        (0..self.rank())
            .flat_map(|g| {
                [false, true].map(|inverse| Letter { generator: g, inverse })
            })
            .collect()
    }
}

/// A group element together with its shortlex-first witness word.
#[derive(Clone, Debug, PartialEq)]
pub struct MarkedElement<S> {
    pub word: Word,
    pub value: Psl2<S>,
}

/// Deduplicating index: exact keys in exact mode; rounded keys confirmed
/// by `psl_eq` in float mode.
struct DedupIndex<S: Scalar> {
    map: HashMap<[S::Key; 4], usize>,
    tol: Tolerance,
}

impl<S: Scalar> DedupIndex<S> {
    fn new(tol: Tolerance) -> Self {
        DedupIndex {
            map: HashMap::new(),
            tol,
        }
    }

    /// Registers `value` under `id` unless an equal element is known.
    /// Returns `Ok(true)` when the element is new.
    fn insert(
        &mut self,
        value: &Psl2<S>,
        id: usize,
        existing: impl Fn(usize) -> (Psl2<S>, String),
        label: impl Fn() -> String,
    ) -> Result<bool> {
        let key = value.key(self.tol);
        match self.map.get(&key) {
            Some(&j) => {
                if !S::EXACT {
                    let (other, other_label) = existing(j);
                    if !psl_eq(value, &other, self.tol)? {
                        return Err(Error::NumericalCollision(other_label, label()));
                    }
                }
                Ok(false)
            }
            None => {
                self.map.insert(key, id);
                Ok(true)
            }
        }
    }
}

/// All products of at most `radius` generators and inverses, deduplicated,
/// each kept with its shortlex-first word, in shortlex order.
pub fn cayley_ball<S: Scalar>(
    g: &GroupSpec<S>,
    radius: usize,
    cap: usize,
    tol: Tolerance,
) -> Result<Vec<MarkedElement<S>>> {
    let field = g
        .field()
        .ok_or_else(|| Error::InvalidWord("group has no generators".into()))?;
    let alphabet = g.alphabet();
    let letters: Vec<Psl2<S>> = alphabet.iter().map(|&l| g.letter_value(l)).collect();

    let mut ball = vec![MarkedElement {
        word: Word::identity(),
        value: Psl2::identity(&field),
    }];
    let mut index = DedupIndex::new(tol);
    index.insert(&ball[0].value, 0, |_| unreachable!(), String::new)?;
    if ball.len() > cap {
        return Err(Error::BudgetExceeded(cap));
    }

    let mut frontier = 0..1;
    for _ in 0..radius {
        let candidates: Vec<(usize, usize, Psl2<S>)> = ball[frontier.clone()]
            .par_iter()
            .enumerate()
            .flat_map_iter(|(off, m)| {
                let last = m.word.0.last().copied();
                let letters = &letters;
                alphabet.iter().enumerate().filter_map(move |(li, &l)| {
                    if last == Some(l.inv()) {
                        None
                    } else {
                        Some((off, li, m.value.compose(&letters[li])))
                    }
                })
            })
            .collect();
        let start = ball.len();
        for (off, li, value) in candidates {
            let parent = frontier.start + off;
            let id = ball.len();
            let word = || {
                let mut w = ball[parent].word.clone();
                w.0.push(alphabet[li]);
                w
            };
            let fresh = index.insert(
                &value,
                id,
                |j| (ball[j].value.clone(), ball[j].word.to_string()),
                || word().to_string(),
            )?;
            if fresh {
                let w = word();
                ball.push(MarkedElement { word: w, value });
                if ball.len() > cap {
                    return Err(Error::BudgetExceeded(cap));
                }
            }
        }
        frontier = start..ball.len();
        if frontier.is_empty() {
            break;
        }
    }
    Ok(ball)
}

/// Ball size for every radius `0..=radius`, read off the shortlex order.
pub fn ball_sizes<S>(ball: &[MarkedElement<S>], radius: usize) -> Vec<usize> {
    (0..=radius)
        .map(|r| ball.partition_point(|m| m.word.len() <= r))
        .collect()
}

/// `g γ = γ g` in PSL(2,ℂ).
pub fn centralizer_test<S: Scalar>(gamma: &Psl2<S>, g: &Psl2<S>, tol: Tolerance) -> bool {
    psl_eq(&g.compose(gamma), &gamma.compose(g), tol).unwrap_or(false)
}

/// The avatar `g⁻¹γg` of a coset, with the ball index of its first witness.
#[derive(Clone, Debug, PartialEq)]
pub struct Avatar<S> {
    pub value: Psl2<S>,
    pub witness: usize,
}

/// `Q(Γ, γ)` sampled on a Cayley ball.
#[derive(Clone, Debug)]
pub struct KleinQuandle<S: Scalar> {
    pub group: GroupSpec<S>,
    pub gamma_word: Word,
    pub gamma: Psl2<S>,
    pub radius: usize,
    pub ball: Vec<MarkedElement<S>>,
    /// Index into `avatars` of the coset of each ball element.
    pub coset_of: Vec<usize>,
    pub avatars: Vec<Avatar<S>>,
    pub tol: Tolerance,
}

impl<S: Scalar> KleinQuandle<S> {
    pub fn ball_sizes(&self) -> Vec<usize> {
        ball_sizes(&self.ball, self.radius)
    }

    /// Number of distinct cosets met by `ball(r)` for each `r ≤ radius`.
    pub fn coset_counts(&self) -> Vec<usize> {
        self.ball_sizes()
            .iter()
            .map(|&n| self.avatars.partition_point(|a| a.witness < n))
            .collect()
    }

    /// Avatars whose witness lies in `ball(r)`.
    pub fn avatars_within(&self, r: usize) -> &[Avatar<S>] {
        let n = self.ball.partition_point(|m| m.word.len() <= r);
        &self.avatars[..self.avatars.partition_point(|a| a.witness < n)]
    }

    /// The triplet `(Γ, C_Γ(γ), σ_γ)` with `σ_γ(g) = γ⁻¹ g γ`.
    pub fn triplet(&self) -> QuandleTriplet<Psl2<S>> {
        self.triplet_with_anchor(self.gamma.clone())
    }

    pub fn triplet_with_anchor(&self, anchor: Psl2<S>) -> QuandleTriplet<Psl2<S>> {
        let gamma = self.gamma.clone();
        let tol = self.tol;
        QuandleTriplet::new(anchor, move |h: &Psl2<S>| centralizer_test(&gamma, h, tol))
    }

    pub fn avatar_of(&self, g: &Psl2<S>) -> Psl2<S> {
        self.gamma.conj_right(g)
    }
}

/// Builds `Q(Γ, γ)` on `ball(radius)`, storing each coset once.
pub fn build_quandle<S: Scalar>(
    g: &GroupSpec<S>,
    gamma_word: &Word,
    radius: usize,
    cap: usize,
    tol: Tolerance,
) -> Result<KleinQuandle<S>> {
    let gamma = g.evaluate(gamma_word)?;
    if gamma.is_identity(tol) {
        return Err(Error::TrivialGamma);
    }
    let ball = cayley_ball(g, radius, cap, tol)?;
    let conj: Vec<Psl2<S>> = ball.par_iter().map(|m| gamma.conj_right(&m.value)).collect();

    let mut avatars: Vec<Avatar<S>> = Vec::new();
    let mut coset_of = Vec::with_capacity(ball.len());
    let mut index = DedupIndex::new(tol);
    let mut by_key: HashMap<[S::Key; 4], usize> = HashMap::new();
    for (i, value) in conj.into_iter().enumerate() {
        let id = avatars.len();
        let fresh = index.insert(
            &value,
            id,
            |j| (avatars[j].value.clone(), ball[avatars[j].witness].word.to_string()),
            || ball[i].word.to_string(),
        )?;
        if fresh {
            by_key.insert(value.key(tol), id);
            coset_of.push(id);
            avatars.push(Avatar { value, witness: i });
        } else {
            coset_of.push(by_key[&value.key(tol)]);
        }
    }
    Ok(KleinQuandle {
        group: g.clone(),
        gamma_word: gamma_word.clone(),
        gamma,
        radius,
        ball,
        coset_of,
        avatars,
        tol,
    })
}

/// The canonical map `Hg ↦ g⁻¹γg`, with the component of each image.
pub fn canonical_map<S: Scalar>(q: &KleinQuandle<S>) -> Vec<(Psl2<S>, ComponentIdPsl<S>)> {
    q.avatars
        .iter()
        .map(|a| (a.value.clone(), component_of_psl(&a.value, q.tol)))
        .collect()
}

/// Result of an exhaustive injectivity pass over the ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectivityReport {
    pub pairs: usize,
    pub equal_cosets: usize,
    /// Pairs where coset equality and avatar equality disagree, as witness
    /// words.
    pub mismatches: Vec<(String, String)>,
}

/// Checks `x y⁻¹ ∈ C_Γ(γ) ⟺ x⁻¹γx = y⁻¹γy` on every pair of ball elements.
pub fn injectivity_check<S: Scalar>(q: &KleinQuandle<S>) -> InjectivityReport {
    let n = q.ball.len();
    let gamma = q.gamma.rep();
    // x y⁻¹ γ = ±γ x y⁻¹ is tested as x·(y⁻¹γ) against (γx)·y⁻¹.
    let inv: Vec<Sl2<S>> = q.ball.par_iter().map(|m| m.value.rep().inverse()).collect();
    let inv_gamma: Vec<Sl2<S>> = inv.par_iter().map(|y| y * gamma).collect();
    let gamma_x: Vec<Sl2<S>> = q.ball.par_iter().map(|m| gamma * m.value.rep()).collect();
    let conj: Vec<Psl2<S>> = q.ball.par_iter().map(|m| q.avatar_of(&m.value)).collect();
    let rows: Vec<(usize, Vec<(String, String)>)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let x = q.ball[i].value.rep();
            let mut eq = 0;
            let mut bad = Vec::new();
            for j in 0..n {
                let lhs = x * &inv_gamma[j];
                let rhs = &gamma_x[i] * &inv[j];
                let coset = lhs.approx_eq(&rhs, q.tol) || lhs.approx_eq(&rhs.neg(), q.tol);
                let avatar = psl_eq(&conj[i], &conj[j], q.tol).unwrap_or(false);
                if coset {
                    eq += 1;
                }
                if coset != avatar {
                    bad.push((q.ball[i].word.to_string(), q.ball[j].word.to_string()));
                }
            }
            (eq, bad)
        })
        .collect();
    InjectivityReport {
        pairs: n * n,
        equal_cosets: rows.iter().map(|r| r.0).sum(),
        mismatches: rows.into_iter().flat_map(|r| r.1).collect(),
    }
}

/// Outcome of the homomorphism check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCheckReport {
    pub samples: usize,
    pub seed: u64,
}

/// For random ball pairs `(x, y)`, compares the avatar of `Hx ◁ Hy` with
/// the conjugate of `x⁻¹γx` by `y⁻¹γy`.
pub fn quandle_hom_check<S: Scalar>(q: &KleinQuandle<S>, samples: usize, seed: u64) -> Result<HomCheckReport> {
    quandle_hom_check_with_anchor(q, &q.gamma, samples, seed)
}

/// As [`quandle_hom_check`] but with `σ = ι_{s⁻¹}` for an arbitrary anchor
/// `s`; anything other than `γ` should fail on a non-abelian ball.
pub fn quandle_hom_check_with_anchor<S: Scalar>(
    q: &KleinQuandle<S>,
    anchor: &Psl2<S>,
    samples: usize,
    seed: u64,
) -> Result<HomCheckReport> {
    let t = q.triplet_with_anchor(anchor.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = q.ball.len();
    let pairs: Vec<(usize, usize)> = (0..samples).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    let failure = pairs.par_iter().find_first(|&&(i, j)| {
        let (x, y) = (&q.ball[i].value, &q.ball[j].value);
        let op = t.coset_op(&Coset::new(x.clone()), &Coset::new(y.clone()));
        let lhs = q.avatar_of(&op.rep);
        let rhs = q.avatar_of(x).quandle_op(&q.avatar_of(y));
        !psl_eq(&lhs, &rhs, q.tol).unwrap_or(false)
    });
    match failure {
        Some(&(i, j)) => Err(Error::HomomorphismFailure(
            q.ball[i].word.to_string(),
            q.ball[j].word.to_string(),
        )),
        None => Ok(HomCheckReport { samples, seed }),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    SeparatedStable,
    ShrinkingEvidence,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::SeparatedStable => "SeparatedStable",
            Verdict::ShrinkingEvidence => "ShrinkingEvidence",
        }
    }
}

/// Which discreteness clause of the main theorem covers `(Γ, γ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremScope {
    /// `γ` parabolic and `Γ` recorded as finite-volume.
    ParabolicFiniteVolume,
    /// `γ` not parabolic with a centralizer that keeps growing.
    InfiniteCentralizer,
    OutsideScope,
}

impl TheoremScope {
    pub fn as_str(self) -> &'static str {
        match self {
            TheoremScope::ParabolicFiniteVolume => "parabolic-finite-volume",
            TheoremScope::InfiniteCentralizer => "infinite-centralizer",
            TheoremScope::OutsideScope => "outside-theorem-scope",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SeparationRow {
    pub radius: usize,
    pub in_window: usize,
    /// `+∞` when fewer than two images fall inside the window.
    pub min_separation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DiscretenessReport {
    pub rows: Vec<SeparationRow>,
    pub window: f64,
    pub verdict: Verdict,
    pub scope: TheoremScope,
}

impl DiscretenessReport {
    pub const NOTE: &'static str = "evidence from finite samples, not a proof of discreteness";
}

/// Allowed relative drop of the windowed minimum separation.
pub const SEPARATION_DROP: f64 = 0.10;

/// Windowed minimum separation of the canonical images for each radius in
/// `radii`. The verdict is `SeparatedStable` unless some later minimum falls
/// more than 10% below the first one.
pub fn discreteness_report<S: Scalar>(
    q: &KleinQuandle<S>,
    radii: &[usize],
    window: f64,
) -> Result<DiscretenessReport> {
    let mut rows = Vec::new();
    for &r in radii.iter().filter(|&&r| r <= q.radius) {
        let pts: Vec<&Psl2<S>> = q
            .avatars_within(r)
            .iter()
            .map(|a| &a.value)
            .filter(|v| v.rep().frobenius_norm() <= window)
            .collect();
        if pts.is_empty() {
            return Err(Error::EmptyWindow);
        }
        let min_separation = (0..pts.len())
            .into_par_iter()
            .map(|i| {
                pts[i + 1..]
                    .iter()
                    .map(|p| pts[i].distance(p))
                    .fold(f64::INFINITY, f64::min)
            })
            .reduce(|| f64::INFINITY, f64::min);
        rows.push(SeparationRow {
            radius: r,
            in_window: pts.len(),
            min_separation,
        });
    }
    if rows.is_empty() {
        return Err(Error::EmptyWindow);
    }
    let verdict = separation_verdict(&rows);
    let scope = theorem_scope(q);
    Ok(DiscretenessReport {
        rows,
        window,
        verdict,
        scope,
    })
}

fn separation_verdict(rows: &[SeparationRow]) -> Verdict {
    let finite: Vec<f64> = rows
        .iter()
        .map(|r| r.min_separation)
        .filter(|s| s.is_finite())
        .collect();
    match finite.split_first() {
        Some((&first, rest)) if rest.iter().any(|&s| s < (1.0 - SEPARATION_DROP) * first) => {
            Verdict::ShrinkingEvidence
        }
        _ => Verdict::SeparatedStable,
    }
}

fn theorem_scope<S: Scalar>(q: &KleinQuandle<S>) -> TheoremScope {
    if classify(&q.gamma, q.tol) == IsometryClass::Parabolic {
        if q.group.finite_volume {
            TheoremScope::ParabolicFiniteVolume
        } else {
            TheoremScope::OutsideScope
        }
    } else {
        match centralizer_type_on_ball(&q.gamma, &q.ball, q.radius, q.tol).0 {
            ElementaryType::HyperbolicType => TheoremScope::InfiniteCentralizer,
            _ => TheoremScope::OutsideScope,
        }
    }
}

/// Elementary type of `C_Γ(γ)`. Everything except `ParabolicType` is
/// evidence read off a finite sample.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ElementaryType {
    EllipticType,
    ParabolicType,
    HyperbolicType,
    NotElementaryEvidence,
}

impl ElementaryType {
    pub fn as_str(self) -> &'static str {
        match self {
            ElementaryType::EllipticType => "EllipticType",
            ElementaryType::ParabolicType => "ParabolicType",
            ElementaryType::HyperbolicType => "HyperbolicType",
            ElementaryType::NotElementaryEvidence => "NotElementaryEvidence",
        }
    }

    pub fn is_evidence_grade(self) -> bool {
        self != ElementaryType::ParabolicType
    }
}

/// Classifies `C_Γ(γ)` from `ball(radius)`. Also returns the sampled
/// centralizer size for each radius.
pub fn centralizer_type<S: Scalar>(
    g: &GroupSpec<S>,
    gamma_word: &Word,
    radius: usize,
    cap: usize,
    tol: Tolerance,
) -> Result<(ElementaryType, Vec<usize>)> {
    let gamma = g.evaluate(gamma_word)?;
    if gamma.is_identity(tol) {
        return Err(Error::TrivialGamma);
    }
    let ball = cayley_ball(g, radius, cap, tol)?;
    Ok(centralizer_type_on_ball(&gamma, &ball, radius, tol))
}

/// [`centralizer_type`] read off an already built quandle.
pub fn centralizer_type_of<S: Scalar>(q: &KleinQuandle<S>) -> (ElementaryType, Vec<usize>) {
    centralizer_type_on_ball(&q.gamma, &q.ball, q.radius, q.tol)
}

fn centralizer_type_on_ball<S: Scalar>(
    gamma: &Psl2<S>,
    ball: &[MarkedElement<S>],
    radius: usize,
    tol: Tolerance,
) -> (ElementaryType, Vec<usize>) {
    let central: Vec<bool> = ball.par_iter().map(|m| centralizer_test(gamma, &m.value, tol)).collect();
    let counts: Vec<usize> = ball_sizes(ball, radius)
        .iter()
        .map(|&n| central[..n].iter().filter(|&&c| c).count())
        .collect();
    let tag = if classify(gamma, tol) == IsometryClass::Parabolic {
        ElementaryType::ParabolicType
    } else if radius == 0 {
        ElementaryType::NotElementaryEvidence
    } else if counts[radius] == counts[radius - 1] {
        ElementaryType::EllipticType
    } else {
        ElementaryType::HyperbolicType
    };
    (tag, counts)
}

/// `Q(ι_f(Γ), ι_f(γ))` rebuilt at the same radius.
pub fn change_basepoint<S: Scalar>(q: &KleinQuandle<S>, f: &Psl2<S>, cap: usize) -> Result<KleinQuandle<S>> {
    build_quandle(&q.group.conjugated(f), &q.gamma_word, q.radius, cap, q.tol)
}

fn exact_matrix(d: Discriminant, e: [(i64, i64, i64, i64); 4]) -> Psl2<QuadraticNumber> {
    let s = |(an, ad, bn, bd): (i64, i64, i64, i64)| {
        QuadraticNumber::from_parts((an, ad), (bn, bd), d).expect("nonzero denominators")
    };
    let m = Sl2::new(s(e[0]), s(e[1]), s(e[2]), s(e[3]), Tolerance::default()).expect("preset is unimodular");
    Psl2::new(m)
}

fn int(n: i64) -> (i64, i64, i64, i64) {
    (n, 1, 0, 1)
}

/// Holonomy image of the figure-eight knot group in `ℚ(√−3)`, with
/// meridians `A = [[1,1],[0,1]]` and `B = [[1,0],[−ω,1]]`.
pub fn figure_eight() -> GroupSpec<QuadraticNumber> {
    let d = Discriminant::eisenstein();
    let a = exact_matrix(d, [int(1), int(1), int(0), int(1)]);
    // −ω = 1/2 − (1/2)√−3
    let b = exact_matrix(d, [int(1), int(0), (1, 2, -1, 2), int(1)]);
    GroupSpec::new("figure8", vec![a, b])
        .with_relators(vec![Word::parse("ABaBAbaBab").expect("valid word")])
        .with_finite_volume(true)
}

/// `⟨T₁, T_i, S′₁⟩` in `ℚ(i)`.
pub fn picard() -> GroupSpec<QuadraticNumber> {
    let d = Discriminant::gaussian();
    let t1 = exact_matrix(d, [int(1), int(1), int(0), int(1)]);
    let ti = exact_matrix(d, [int(1), (0, 1, 1, 1), int(0), int(1)]);
    let s = exact_matrix(d, [int(0), int(-1), int(1), int(0)]);
    GroupSpec::new("picard", vec![t1, ti, s])
        .with_relators(vec![Word::parse("CC").expect("valid word"), Word::parse("ABab").expect("valid word")])
        .with_finite_volume(true)
}

/// `⟨S₄⟩`, the class of `diag(2, 1/2)`.
pub fn loxodromic_cyclic() -> GroupSpec<QuadraticNumber> {
    let d = Discriminant::gaussian();
    GroupSpec::new("loxodromic", vec![exact_matrix(d, [int(2), int(0), int(0), (1, 2, 0, 1)])])
}

/// `⟨T₁, [[1,0],[1/10,1]]⟩`, which is not discrete.
pub fn nondiscrete_control() -> GroupSpec<QuadraticNumber> {
    let d = Discriminant::gaussian();
    let t1 = exact_matrix(d, [int(1), int(1), int(0), int(1)]);
    let l = exact_matrix(d, [int(1), int(0), (1, 10, 0, 1), int(1)]);
    GroupSpec::new("control", vec![t1, l])
}

/// `⟨diag(i, −i)⟩`, of order 2 in PSL(2,ℂ).
pub fn elliptic_cyclic() -> GroupSpec<QuadraticNumber> {
    let d = Discriminant::gaussian();
    GroupSpec::new("elliptic", vec![exact_matrix(d, [(0, 1, 1, 1), int(0), int(0), (0, 1, -1, 1)])])
        .with_relators(vec![Word::parse("AA").expect("valid word")])
}

pub fn presets() -> Vec<GroupSpec<QuadraticNumber>> {
    vec![
        figure_eight(),
        picard(),
        loxodromic_cyclic(),
        nondiscrete_control(),
        elliptic_cyclic(),
    ]
}

pub fn preset(name: &str) -> Option<GroupSpec<QuadraticNumber>> {
    presets().into_iter().find(|g| g.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn word_parsing() {
        let w = Word::parse("ABab").unwrap();
        assert_eq!(w, Word::from_indices(&[1, 2, -1, -2]).unwrap());
        assert_eq!(Word::parse("1, 2,-1 -2").unwrap(), w);
        assert_eq!(w.to_string(), "ABab");
        assert_eq!(w.inverse().to_string(), "BAba");
        assert!(Word::parse("0").is_err());
        assert!(Word::parse("A?").is_err());
        assert!(Word::parse("").unwrap().is_empty());
    }

    #[test]
    fn radius_zero_is_identity() {
        let b = cayley_ball(&figure_eight(), 0, 10, tol()).unwrap();
        assert_eq!(b.len(), 1);
        assert!(b[0].value.is_identity(tol()));
    }

    #[test]
    fn cyclic_growth() {
        let b = cayley_ball(&loxodromic_cyclic(), 3, 100, tol()).unwrap();
        assert_eq!(b.len(), 7);
        let words: Vec<String> = b.iter().map(|m| m.word.to_string()).collect();
        assert_eq!(words, ["e", "A", "a", "AA", "aa", "AAA", "aaa"]);
    }

    #[test]
    fn finite_group_stops() {
        let b = cayley_ball(&elliptic_cyclic(), 5, 100, tol()).unwrap();
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn budget() {
        assert_eq!(
            cayley_ball(&figure_eight(), 3, 20, tol()),
            Err(Error::BudgetExceeded(20))
        );
    }

    #[test]
    fn shortlex_witnesses() {
        let b = cayley_ball(&figure_eight(), 2, 100, tol()).unwrap();
        let words: Vec<String> = b.iter().take(9).map(|m| m.word.to_string()).collect();
        assert_eq!(words, ["e", "A", "a", "B", "b", "AA", "AB", "Ab", "aa"]);
        for m in &b {
            assert!(psl_eq(&m.value, &figure_eight().evaluate(&m.word).unwrap(), tol()).unwrap());
        }
    }

    #[test]
    fn centralizer_examples() {
        let g = figure_eight();
        let a = &g.generators[0];
        let b = &g.generators[1];
        assert!(centralizer_test(a, &a.compose(a), tol()));
        assert!(!centralizer_test(a, b, tol()));
        let p = picard();
        assert!(centralizer_test(&p.generators[0], &p.generators[1], tol()));
    }

    #[test]
    fn abelian_quandle_is_a_point() {
        let g = GroupSpec::new("t1", vec![figure_eight().generators[0].clone()]);
        for r in 0..4 {
            let q = build_quandle(&g, &Word::parse("A").unwrap(), r, 100, tol()).unwrap();
            assert_eq!(q.avatars.len(), 1);
            let img = canonical_map(&q);
            assert_eq!(img[0].1.to_string(), "[2]");
        }
    }

    #[test]
    fn trivial_gamma() {
        let g = elliptic_cyclic();
        assert_eq!(
            build_quandle(&g, &Word::parse("AA").unwrap(), 1, 100, tol()).err(),
            Some(Error::TrivialGamma)
        );
    }

    #[test]
    fn coset_of_is_consistent() {
        let q = build_quandle(&figure_eight(), &Word::parse("A").unwrap(), 3, 1000, tol()).unwrap();
        for (i, m) in q.ball.iter().enumerate() {
            let a = &q.avatars[q.coset_of[i]];
            assert!(psl_eq(&a.value, &q.avatar_of(&m.value), tol()).unwrap());
        }
        let counts = q.coset_counts();
        assert!(counts.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn corrupted_anchor_fails() {
        let q = build_quandle(&figure_eight(), &Word::parse("A").unwrap(), 3, 1000, tol()).unwrap();
        assert!(quandle_hom_check(&q, 200, 7).is_ok());
        let wrong = q.gamma.inverse();
        assert!(matches!(
            quandle_hom_check_with_anchor(&q, &wrong, 200, 7),
            Err(Error::HomomorphismFailure(..))
        ));
    }

    #[test]
    fn single_image_is_stable() {
        let g = GroupSpec::new("t1", vec![figure_eight().generators[0].clone()]);
        let q = build_quandle(&g, &Word::parse("A").unwrap(), 4, 100, tol()).unwrap();
        let r = discreteness_report(&q, &[2, 3, 4], 20.0).unwrap();
        assert!(r.rows.iter().all(|row| row.min_separation == f64::INFINITY));
        assert_eq!(r.verdict, Verdict::SeparatedStable);
    }

    #[test]
    fn empty_window() {
        let q = build_quandle(&loxodromic_cyclic(), &Word::parse("AAAAA").unwrap(), 2, 100, tol()).unwrap();
        assert_eq!(discreteness_report(&q, &[2], 20.0), Err(Error::EmptyWindow));
    }

    #[test]
    fn verdict_rule() {
        let row = |radius, s| SeparationRow {
            radius,
            in_window: 2,
            min_separation: s,
        };
        assert_eq!(separation_verdict(&[row(4, 1.0), row(5, 0.95), row(6, 0.9)]), Verdict::SeparatedStable);
        assert_eq!(separation_verdict(&[row(4, 1.0), row(5, 1.0), row(6, 0.89)]), Verdict::ShrinkingEvidence);
        assert_eq!(
            separation_verdict(&[row(4, f64::INFINITY), row(5, 1.0)]),
            Verdict::SeparatedStable
        );
    }
}
