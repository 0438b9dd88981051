//! Quandle machinery: axiom checks, coset quandles `Q(G, H, σ)` of quandle
//! triplets, induced homomorphisms between them, and inner orbits in
//! conjugation quandles.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::moebius::{psl_eq, Psl2, Sl2};
use crate::numerics::{Scalar, Tolerance};

/// Default element cap for orbit and ball enumeration.
pub const DEFAULT_CAP: usize = 1_000_000;

/// A group whose elements can be multiplied, inverted, compared within a
/// tolerance, and keyed for deduplication.
pub trait GroupCarrier: Clone + fmt::Debug + Send + Sync + 'static {
    type Key: Clone + fmt::Debug + Eq + Hash + Ord + Send + Sync;

    fn compose(&self, other: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn identity_like(&self) -> Self;
    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool;
    fn key(&self, tol: Tolerance) -> Self::Key;

    /// `x ◁ y = y⁻¹ x y`.
    fn quandle_op(&self, y: &Self) -> Self {
        y.inverse().compose(self).compose(y)
    }

    /// Inverse point symmetry `s_y⁻¹(x) = y x y⁻¹`.
    fn quandle_op_inv(&self, y: &Self) -> Self {
        y.compose(self).compose(&y.inverse())
    }

    fn commutes_with(&self, other: &Self, tol: Tolerance) -> bool {
        self.compose(other).approx_eq(&other.compose(self), tol)
    }
}

impl<S: Scalar> GroupCarrier for Sl2<S> {
    type Key = [S::Key; 4];

    fn compose(&self, other: &Self) -> Self {
        self * other
    }
    fn inverse(&self) -> Self {
        Sl2::inverse(self)
    }
    fn identity_like(&self) -> Self {
        Sl2::identity(&self.field())
    }
    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        Sl2::approx_eq(self, other, tol)
    }
    fn key(&self, tol: Tolerance) -> Self::Key {
        Sl2::key(self, tol)
    }
    fn quandle_op(&self, y: &Self) -> Self {
        self.conj_right(y)
    }
}

impl<S: Scalar> GroupCarrier for Psl2<S> {
    type Key = [S::Key; 4];

    fn compose(&self, other: &Self) -> Self {
        Psl2::compose(self, other)
    }
    fn inverse(&self) -> Self {
        Psl2::inverse(self)
    }
    fn identity_like(&self) -> Self {
        Psl2::identity(&self.field())
    }
    fn approx_eq(&self, other: &Self, tol: Tolerance) -> bool {
        psl_eq(self, other, tol).unwrap_or(false)
    }
    fn key(&self, tol: Tolerance) -> Self::Key {
        Psl2::key(self, tol)
    }
    fn quandle_op(&self, y: &Self) -> Self {
        self.conj_right(y)
    }
}

/// Outcome of one axiom check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomOutcome {
    Pass,
    /// Indices into the sample of the first counterexample found.
    Fail(Vec<usize>),
}

impl AxiomOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, AxiomOutcome::Pass)
    }
}

/// Results of checking the three quandle axioms on a sample.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub idempotence: AxiomOutcome,
    pub bijectivity: AxiomOutcome,
    pub distributivity: AxiomOutcome,
    /// Pairs `(x, y)` whose product left the sample.
    pub escapes: Vec<(usize, usize)>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.idempotence.passed() && self.bijectivity.passed() && self.distributivity.passed()
    }
}

/// A finite set of element keys with a binary operation, e.g. an operation
/// table.
pub struct FiniteQuandleSample<K, F> {
    pub elements: Vec<K>,
    pub op: F,
}

impl<K, F> FiniteQuandleSample<K, F>
where
    K: Clone + Eq + Hash,
    F: Fn(&K, &K) -> K,
{
    pub fn new(elements: Vec<K>, op: F) -> Self {
        FiniteQuandleSample { elements, op }
    }

    /// Checks idempotence elementwise, injectivity of every `s_y` on the
    /// sample, and self-distributivity on all triples. Products that leave
    /// the sample are recorded as escapes and skip the triples they affect.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.elements.len();
        let index: HashMap<&K, usize> = self.elements.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut escapes = Vec::new();
        let mut table = vec![vec![None; n]; n];
        for (i, x) in self.elements.iter().enumerate() {
            for (j, y) in self.elements.iter().enumerate() {
                match index.get(&(self.op)(x, y)) {
                    Some(&k) => table[i][j] = Some(k),
                    None => escapes.push((i, j)),
                }
            }
        }

        let idempotence = (0..n)
            .find(|&i| table[i][i] != Some(i))
            .map_or(AxiomOutcome::Pass, |i| AxiomOutcome::Fail(vec![i]));

        let mut bijectivity = AxiomOutcome::Pass;
        'cols: for y in 0..n {
            let mut seen: HashMap<usize, usize> = HashMap::new();
            for x in 0..n {
                if let Some(r) = table[x][y] {
                    if let Some(&x0) = seen.get(&r) {
                        bijectivity = AxiomOutcome::Fail(vec![x0, x, y]);
                        break 'cols;
                    }
                    seen.insert(r, x);
                }
            }
        }

        let mut distributivity = AxiomOutcome::Pass;
        'outer: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let lhs = table[x][y].and_then(|xy| table[xy][z]);
                    let rhs = match (table[x][z], table[y][z]) {
                        (Some(xz), Some(yz)) => table[xz][yz],
                        _ => None,
                    };
                    if let (Some(l), Some(r)) = (lhs, rhs) {
                        if l != r {
                            distributivity = AxiomOutcome::Fail(vec![x, y, z]);
                            break 'outer;
                        }
                    }
                }
            }
        }

        AxiomReport {
            idempotence,
            bijectivity,
            distributivity,
            escapes,
        }
    }
}

/// Checks the axioms of Conj(G) directly on group elements: no closure is
/// needed because products are evaluated in the ambient group. Bijectivity
/// is certified with the explicit inverse `s_y⁻¹(x) = y x y⁻¹`.
pub fn check_conjugation_axioms<C: GroupCarrier>(
    elements: &[C],
    triples: &[(usize, usize, usize)],
    tol: Tolerance,
) -> AxiomReport {
    let idempotence = elements
        .par_iter()
        .position_first(|x| !x.quandle_op(x).approx_eq(x, tol))
        .map_or(AxiomOutcome::Pass, |i| AxiomOutcome::Fail(vec![i]));

    let bijectivity = triples
        .par_iter()
        .find_first(|&&(x, y, _)| {
            let (x, y) = (&elements[x], &elements[y]);
            !x.quandle_op(y).quandle_op_inv(y).approx_eq(x, tol)
                || !x.quandle_op_inv(y).quandle_op(y).approx_eq(x, tol)
        })
        .map_or(AxiomOutcome::Pass, |&(x, y, _)| AxiomOutcome::Fail(vec![x, y]));

    let distributivity = triples
        .par_iter()
        .find_first(|&&(x, y, z)| {
            let (x, y, z) = (&elements[x], &elements[y], &elements[z]);
            let lhs = x.quandle_op(y).quandle_op(z);
            let rhs = x.quandle_op(z).quandle_op(&y.quandle_op(z));
            !lhs.approx_eq(&rhs, tol)
        })
        .map_or(AxiomOutcome::Pass, |&(x, y, z)| AxiomOutcome::Fail(vec![x, y, z]));

    AxiomReport {
        idempotence,
        bijectivity,
        distributivity,
        escapes: Vec::new(),
    }
}

/// A quandle triplet `(G, H, σ)` with `σ = ι_{s⁻¹}: g ↦ s⁻¹ g s` and an
/// `H`-membership oracle.
pub struct QuandleTriplet<C> {
    anchor: C,
    anchor_inv: C,
    h_member: Box<dyn Fn(&C) -> bool + Send + Sync>,
}

impl<C: GroupCarrier> QuandleTriplet<C> {
    pub fn new(anchor: C, h_member: impl Fn(&C) -> bool + Send + Sync + 'static) -> Self {
        let anchor_inv = anchor.inverse();
        QuandleTriplet {
            anchor,
            anchor_inv,
            h_member: Box::new(h_member),
        }
    }

    /// The triplet `(G, C_G(s), ι_{s⁻¹})` with the centralizer tested by
    /// commutation.
    pub fn centralizer_of(anchor: C, tol: Tolerance) -> Self {
        let a = anchor.clone();
        Self::new(anchor, move |h: &C| h.commutes_with(&a, tol))
    }

    pub fn anchor(&self) -> &C {
        &self.anchor
    }

    pub fn sigma(&self, g: &C) -> C {
        self.anchor_inv.compose(g).compose(&self.anchor)
    }

    pub fn h_member(&self, g: &C) -> bool {
        (self.h_member)(g)
    }

    /// `Hx = Hy` iff `x y⁻¹ ∈ H`.
    pub fn coset_eq(&self, x: &Coset<C>, y: &Coset<C>) -> bool {
        self.h_member(&x.rep.compose(&y.rep.inverse()))
    }

    /// `Hx ◁ Hy = H σ(x y⁻¹) y`.
    pub fn coset_op(&self, x: &Coset<C>, y: &Coset<C>) -> Coset<C> {
        let xy_inv = x.rep.compose(&y.rep.inverse());
        Coset::new(self.sigma(&xy_inv).compose(&y.rep))
    }

    /// Samples the inclusion `H ⊆ C_G(σ)` on the given elements.
    pub fn check_fixed_by_sigma(&self, samples: &[C], tol: Tolerance) -> Option<usize> {
        samples
            .iter()
            .position(|h| self.h_member(h) && !self.sigma(h).approx_eq(h, tol))
    }
}

/// A right coset `Hx`, held by a representative.
#[derive(Clone, Debug, PartialEq)]
pub struct Coset<C> {
    pub rep: C,
}

impl<C> Coset<C> {
    pub fn new(rep: C) -> Self {
        Coset { rep }
    }
}

/// Validity report of an induced map `ρ̄: H′g ↦ Hρ(g)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedHomReport {
    pub samples_checked: usize,
    pub homomorphism_pairs_checked: usize,
    /// `ρ̄(x ◁ y) = ρ̄(x) ◁ ρ̄(y)` on every sampled pair.
    pub homomorphism: bool,
    /// `h′(g) ⟺ h(ρ(g))` on every sample, i.e. `H′ = ρ⁻¹(H)` as far as the
    /// samples can tell; this is the injectivity hypothesis.
    pub injectivity_certified: bool,
}

/// The coset map induced by a group homomorphism between triplets.
pub struct InducedHom<'a, C1, C2, F> {
    rho: F,
    source: &'a QuandleTriplet<C1>,
    target: &'a QuandleTriplet<C2>,
    pub report: InducedHomReport,
}

impl<'a, C1, C2, F> InducedHom<'a, C1, C2, F>
where
    C1: GroupCarrier,
    C2: GroupCarrier,
    F: Fn(&C1) -> C2,
{
    pub fn map_coset(&self, x: &Coset<C1>) -> Coset<C2> {
        Coset::new((self.rho)(&x.rep))
    }

    pub fn source(&self) -> &QuandleTriplet<C1> {
        self.source
    }

    pub fn target(&self) -> &QuandleTriplet<C2> {
        self.target
    }
}

/// Builds `ρ̄` and checks its hypotheses on `samples`: `σ ∘ ρ = ρ ∘ σ′`,
/// `ρ(H′) ⊆ H`, the homomorphism identity on consecutive sample pairs, and
/// whether `H′ = ρ⁻¹(H)` holds on the samples.
pub fn induced_hom<'a, C1, C2, F>(
    rho: F,
    source: &'a QuandleTriplet<C1>,
    target: &'a QuandleTriplet<C2>,
    samples: &[C1],
    tol: Tolerance,
) -> Result<InducedHom<'a, C1, C2, F>>
where
    C1: GroupCarrier,
    C2: GroupCarrier,
    F: Fn(&C1) -> C2,
{
    for (i, g) in samples.iter().enumerate() {
        if !target.sigma(&rho(g)).approx_eq(&rho(&source.sigma(g)), tol) {
            return Err(Error::IntertwiningFailure(format!("sample {i}")));
        }
        if source.h_member(g) && !target.h_member(&rho(g)) {
            return Err(Error::ImageEscapesH(format!("sample {i}")));
        }
    }
    let injectivity_certified = samples
        .iter()
        .all(|g| source.h_member(g) == target.h_member(&rho(g)));

    let mut pairs = 0;
    let mut homomorphism = true;
    for (i, x) in samples.iter().enumerate() {
        let y = &samples[(i + 1) % samples.len()];
        let (cx, cy) = (Coset::new(x.clone()), Coset::new(y.clone()));
        let lhs = Coset::new(rho(&source.coset_op(&cx, &cy).rep));
        let rhs = target.coset_op(&Coset::new(rho(x)), &Coset::new(rho(y)));
        pairs += 1;
        if !target.coset_eq(&lhs, &rhs) {
            homomorphism = false;
            break;
        }
    }

    Ok(InducedHom {
        rho,
        source,
        target,
        report: InducedHomReport {
            samples_checked: samples.len(),
            homomorphism_pairs_checked: pairs,
            homomorphism,
            injectivity_certified,
        },
    })
}

/// Closure of `seeds` under `x ↦ x ◁ g` and `x ↦ g x g⁻¹` for `g` in
/// `symmetries`, up to `radius` steps, deduplicated by key and returned in
/// discovery order.
pub fn inner_orbit<C: GroupCarrier>(
    seeds: &[C],
    symmetries: &[C],
    radius: usize,
    cap: usize,
    tol: Tolerance,
) -> Result<Vec<C>> {
    let mut seen: HashMap<C::Key, usize> = HashMap::new();
    let mut out: Vec<C> = Vec::new();
    for s in seeds {
        if seen.insert(s.key(tol), out.len()).is_none() {
            out.push(s.clone());
        }
    }
    if out.len() > cap {
        return Err(Error::BudgetExceeded(cap));
    }
    let mut frontier: Vec<usize> = (0..out.len()).collect();
    for _ in 0..radius {
        if frontier.is_empty() {
            break;
        }
        let candidates: Vec<C> = frontier
            .par_iter()
            .flat_map_iter(|&i| {
                let x = &out[i];
                symmetries
                    .iter()
                    .flat_map(move |g| [x.quandle_op(g), x.quandle_op_inv(g)])
            })
            .collect();
        let mut next = Vec::new();
        for c in candidates {
            if let Entry::Vacant(slot) = seen.entry(c.key(tol)) {
                slot.insert(out.len());
                next.push(out.len());
                out.push(c);
                if out.len() > cap {
                    return Err(Error::BudgetExceeded(cap));
                }
            }
        }
        frontier = next;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{Discriminant, QuadraticNumber};

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

    /// The dihedral quandle R₃: x ◁ y = 2y − x mod 3.
    fn dihedral3(x: &u8, y: &u8) -> u8 {
        (2 * y + 3 - x) % 3
    }

    #[test]
    fn singleton_passes() {
        let q = FiniteQuandleSample::new(vec![0u8], |x: &u8, _: &u8| *x);
        assert!(q.check_axioms().all_pass());
    }

    #[test]
    fn dihedral_quandle_passes() {
        let q = FiniteQuandleSample::new(vec![0u8, 1, 2], dihedral3);
        let r = q.check_axioms();
        assert!(r.all_pass(), "{r:?}");
        assert!(r.escapes.is_empty());
    }

    #[test]
    fn corrupted_table_fails_distributivity() {
        // Flip the single entry 0 ◁ 1 from 2 to 1; brute force shows
        // (0 ◁ 1) ◁ 2 = 1 ◁ 2 = 0 while (0 ◁ 2) ◁ (1 ◁ 2) = 1 ◁ 0 = 2.
        let op = |x: &u8, y: &u8| if (*x, *y) == (0, 1) { 1 } else { dihedral3(x, y) };
        let r = FiniteQuandleSample::new(vec![0u8, 1, 2], op).check_axioms();
        assert!(r.idempotence.passed());
        assert!(!r.bijectivity.passed());
        assert_eq!(r.distributivity, AxiomOutcome::Fail(vec![0, 1, 0]));
    }

    #[test]
    fn escapes_are_reported() {
        let r = FiniteQuandleSample::new(vec![0u8, 1], dihedral3).check_axioms();
        assert!(!r.escapes.is_empty());
    }

    #[test]
    fn conjugation_axioms_on_matrices() {
        let els = vec![m(1, 1, 0, 1), m(2, 1, 1, 1), m(0, -1, 1, 0), m(1, 0, 3, 1)];
        let mut triples = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                for z in 0..4 {
                    triples.push((x, y, z));
                }
            }
        }
        assert!(check_conjugation_axioms(&els, &triples, tol()).all_pass());
        let psl: Vec<Psl2<Q>> = els.into_iter().map(Psl2::new).collect();
        assert!(check_conjugation_axioms(&psl, &triples, tol()).all_pass());
    }

    fn a2_triplet() -> QuandleTriplet<Sl2<Q>> {
        QuandleTriplet::new(m(1, 1, 0, 1), move |h: &Sl2<Q>| {
            crate::components::in_stabilizer_sl(h, &qi(2), tol())
        })
    }

    #[test]
    fn coset_examples() {
        let t = a2_triplet();
        let x = Coset::new(m(2, 1, 1, 1));
        assert!(t.coset_eq(&x, &x));
        let h = m(-1, 5, 0, -1);
        let hx = Coset::new(&h * &x.rep);
        assert!(t.coset_eq(&hx, &x));
        let y = Coset::new(m(1, 0, 2, 1));
        assert!(!t.coset_eq(&x, &y));
        assert!(t.coset_eq(&t.coset_op(&x, &x), &x));
        let e = Coset::new(m(1, 0, 0, 1));
        let expected = Coset::new(&t.sigma(&y.rep.inverse()) * &y.rep);
        assert!(t.coset_eq(&t.coset_op(&e, &y), &expected));
    }

    #[test]
    fn coset_op_ignores_representatives() {
        let t = a2_triplet();
        let x = Coset::new(m(2, 1, 1, 1));
        let y = Coset::new(m(1, 2, 1, 3));
        let h1 = m(1, 7, 0, 1);
        let h2 = m(-1, -2, 0, -1);
        let lhs = t.coset_op(&Coset::new(&h1 * &x.rep), &Coset::new(&h2 * &y.rep));
        assert!(t.coset_eq(&lhs, &t.coset_op(&x, &y)));
    }

    #[test]
    fn identity_induces_identity() {
        let t = a2_triplet();
        let samples = vec![m(2, 1, 1, 1), m(1, 2, 1, 3), m(1, 4, 0, 1)];
        let hom = induced_hom(|g: &Sl2<Q>| g.clone(), &t, &t, &samples, tol()).unwrap();
        assert!(hom.report.homomorphism && hom.report.injectivity_certified);
        let c = Coset::new(samples[0].clone());
        assert_eq!(hom.map_coset(&c), c);
    }

    #[test]
    fn conjugation_changes_base_point_isomorphically() {
        let f = m(2, 1, 1, 1);
        let f_inv = f.inverse();
        let src = a2_triplet();
        let anchor = m(1, 1, 0, 1).conj_by(&f);
        let tgt = QuandleTriplet::centralizer_of(anchor, tol());
        let samples = vec![m(2, 1, 1, 1), m(1, 2, 1, 3), m(1, 4, 0, 1), m(-1, 3, 0, -1)];
        let rho = move |g: &Sl2<Q>| &(&f * g) * &f_inv;
        let hom = induced_hom(rho, &src, &tgt, &samples, tol()).unwrap();
        assert!(hom.report.homomorphism);
        assert!(hom.report.injectivity_certified);
    }

    #[test]
    fn broken_intertwining_is_reported() {
        let src = a2_triplet();
        let tgt = QuandleTriplet::new(m(1, 0, 1, 1), |_: &Sl2<Q>| true);
        let samples = vec![m(2, 1, 1, 1)];
        let res = induced_hom(|g: &Sl2<Q>| g.clone(), &src, &tgt, &samples, tol());
        assert!(matches!(res, Err(Error::IntertwiningFailure(_))));
    }

    #[test]
    fn image_escaping_h_is_reported() {
        let src = QuandleTriplet::new(m(1, 0, 0, 1), |_: &Sl2<Q>| true);
        let tgt = QuandleTriplet::new(m(1, 0, 0, 1), |g: &Sl2<Q>| g.b().is_zero(tol()));
        let samples = vec![m(1, 1, 0, 1)];
        let res = induced_hom(|g: &Sl2<Q>| g.clone(), &src, &tgt, &samples, tol());
        assert!(matches!(res, Err(Error::ImageEscapesH(_))));
    }

    #[test]
    fn orbit_radius_zero_is_seeds() {
        let seeds = vec![m(1, 1, 0, 1)];
        let orbit = inner_orbit(&seeds, &[m(1, 0, 1, 1)], 0, DEFAULT_CAP, tol()).unwrap();
        assert_eq!(orbit, seeds);
    }

    #[test]
    fn orbit_respects_cap() {
        let seeds = vec![m(1, 1, 0, 1)];
        let syms = vec![m(1, 1, 0, 1), m(1, 0, 1, 1)];
        let r = inner_orbit(&seeds, &syms, 6, 10, tol());
        assert_eq!(r, Err(Error::BudgetExceeded(10)));
    }
}
