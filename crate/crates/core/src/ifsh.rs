//! Intuitionistic fuzzy sub-hyperquasigroups (IFSH).
//!
//! Two independent deciders are provided: [`check_ifsh`] evaluates the four
//! defining conditions directly by exhaustive quantifier scans, and
//! [`check_ifsh_via_cuts`] tests every non-empty upper cut of `mu` and lower
//! cut of `lambda` for being a sub-hyperquasigroup. They must agree on every
//! input, including which condition fails first.
//!
//! Conditions are numbered as follows:
//!
//! 1. `min{mu(x), mu(y)} <= inf{mu(z) : z ∈ x∘y}`
//! 2. for all `x, a` there are `y, z` with `x ∈ (a∘y) ∩ (z∘a)` and
//!    `min{mu(a), mu(x)} <= min{mu(y), mu(z)}`
//! 3. `sup{lambda(z) : z ∈ x∘y} <= max{lambda(x), lambda(y)}`
//! 4. for all `x, a` there are `y, z` with `x ∈ (a∘y) ∩ (z∘a)` and
//!    `max{lambda(y), lambda(z)} <= max{lambda(a), lambda(x)}`
//!
//! and are checked in the order 1, 3, 2, 4.

use std::fmt;

use crate::error::{Error, Result};
use crate::fundamental::QuasigroupOp;
use crate::grade::Grade;
use crate::hyperstructure::{closure_failure, is_sub, reproduction_failure, Hypergroupoid, SubFailure};
use crate::ifs::{level_cut, CutKind, FuzzySet, IntuitionisticFuzzySet};
use crate::subset::CarrierSubset;

/// Where a failure was observed, beyond the witness elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureContext {
    /// A non-empty level cut at `threshold` is not a sub-hyperquasigroup.
    Cut { kind: CutKind, threshold: Grade },
    /// The failing quasigroup operation.
    Operation(QuasigroupOp),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IfshVerdict {
    pub holds: bool,
    pub failed_condition: Option<u8>,
    /// `(x, y)` for the closure-type conditions, `(x, a)` for the division-type ones.
    pub witness: Option<(usize, usize)>,
    pub context: Option<FailureContext>,
}

impl IfshVerdict {
    pub fn pass() -> Self {
        IfshVerdict {
            holds: true,
            failed_condition: None,
            witness: None,
            context: None,
        }
    }

    pub fn fail(condition: u8, witness: (usize, usize)) -> Self {
        IfshVerdict {
            holds: false,
            failed_condition: Some(condition),
            witness: Some(witness),
            context: None,
        }
    }

    fn with_context(mut self, context: FailureContext) -> Self {
        self.context = Some(context);
        self
    }
}

impl fmt::Display for IfshVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (Some(c), Some((p, q))) = (self.failed_condition, self.witness) else {
            return f.write_str("holds");
        };
        match (c, self.context) {
            (_, Some(FailureContext::Operation(op))) => {
                write!(f, "condition {c} at x={p} y={q} op={op}")
            }
            (1 | 3, ctx) => {
                write!(f, "condition {c} at x={p} y={q}")?;
                if let Some(FailureContext::Cut { kind, threshold }) = ctx {
                    write!(f, " ({} cut at {threshold})", cut_name(kind))?;
                }
                Ok(())
            }
            (_, ctx) => {
                write!(f, "condition {c} at x={p} a={q}")?;
                if let Some(FailureContext::Cut { kind, threshold }) = ctx {
                    write!(f, " ({} cut at {threshold})", cut_name(kind))?;
                }
                Ok(())
            }
        }
    }
}

fn cut_name(kind: CutKind) -> &'static str {
    match kind {
        CutKind::Upper => "upper",
        CutKind::Lower => "lower",
    }
}

/// How the existential witnesses of conditions 2 and 4 are read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WitnessMode {
    /// Conditions 2 and 4 may use different `(y, z)` pairs.
    #[default]
    Independent,
    /// One pair `(y, z)` must satisfy both conditions.
    Shared,
}

fn require_hyperquasigroup(h: &Hypergroupoid) -> Result<()> {
    let g = h.carrier();
    for x in 0..h.order() {
        let xs = CarrierSubset::singleton(x);
        if h.set_product(xs, g) != g || h.set_product(g, xs) != g {
            return Err(Error::NotAHyperquasigroup(x));
        }
    }
    Ok(())
}

/// `{y : x ∈ a∘y}`
fn left_solutions(h: &Hypergroupoid, a: usize, x: usize) -> impl Iterator<Item = usize> + '_ {
    (0..h.order()).filter(move |&y| h.product(a, y).contains(x))
}

/// `{z : x ∈ z∘a}`
fn right_solutions(h: &Hypergroupoid, a: usize, x: usize) -> impl Iterator<Item = usize> + '_ {
    (0..h.order()).filter(move |&z| h.product(z, a).contains(x))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn membership_closure(h: &Hypergroupoid, mu: &FuzzySet) -> Option<(usize, usize)> {
    pairs(h.order()).find(|&(x, y)| {
        let inf = mu.min_over(h.product(x, y)).expect("non-empty cell");
        mu[x].min(mu[y]) > inf
    })
}

fn nonmembership_closure(h: &Hypergroupoid, lambda: &FuzzySet) -> Option<(usize, usize)> {
    pairs(h.order()).find(|&(x, y)| {
        let sup = lambda.max_over(h.product(x, y)).expect("non-empty cell");
        sup > lambda[x].max(lambda[y])
    })
}

/// Condition 2 for a single `(x, a)`: some left and some right solution
/// reach `min{mu(a), mu(x)}`.
fn membership_division_holds(h: &Hypergroupoid, mu: &FuzzySet, x: usize, a: usize) -> bool {
    let t = mu[a].min(mu[x]);
    left_solutions(h, a, x).any(|y| mu[y] >= t) && right_solutions(h, a, x).any(|z| mu[z] >= t)
}

fn nonmembership_division_holds(h: &Hypergroupoid, lambda: &FuzzySet, x: usize, a: usize) -> bool {
    let s = lambda[a].max(lambda[x]);
    left_solutions(h, a, x).any(|y| lambda[y] <= s) && right_solutions(h, a, x).any(|z| lambda[z] <= s)
}

fn shared_division_holds(h: &Hypergroupoid, a_set: &IntuitionisticFuzzySet, x: usize, a: usize) -> bool {
    let (mu, lambda) = (a_set.mu(), a_set.lambda());
    let t = mu[a].min(mu[x]);
    let s = lambda[a].max(lambda[x]);
    let ok = |w: usize| mu[w] >= t && lambda[w] <= s;
    left_solutions(h, a, x).any(ok) && right_solutions(h, a, x).any(ok)
}

/// Decides the four IFSH conditions directly.
pub fn check_ifsh(h: &Hypergroupoid, a: &IntuitionisticFuzzySet) -> Result<IfshVerdict> {
    check_ifsh_with(h, a, WitnessMode::Independent)
}

pub fn check_ifsh_with(h: &Hypergroupoid, a: &IntuitionisticFuzzySet, mode: WitnessMode) -> Result<IfshVerdict> {
    a.check_len(h.order())?;
    require_hyperquasigroup(h)?;
    let (mu, lambda) = (a.mu(), a.lambda());
    if let Some(w) = membership_closure(h, mu) {
        return Ok(IfshVerdict::fail(1, w));
    }
    if let Some(w) = nonmembership_closure(h, lambda) {
        return Ok(IfshVerdict::fail(3, w));
    }
    if let Some(w) = pairs(h.order()).find(|&(x, a)| !membership_division_holds(h, mu, x, a)) {
        return Ok(IfshVerdict::fail(2, w));
    }
    if let Some(w) = pairs(h.order()).find(|&(x, a)| !nonmembership_division_holds(h, lambda, x, a)) {
        return Ok(IfshVerdict::fail(4, w));
    }
    if mode == WitnessMode::Shared {
        if let Some(w) = pairs(h.order()).find(|&(x, y)| !shared_division_holds(h, a, x, y)) {
            return Ok(IfshVerdict::fail(4, w));
        }
    }
    Ok(IfshVerdict::pass())
}

/// The three-condition fuzzy sub-hyperquasigroup test for a single fuzzy
/// set. Condition 2 asks for a left solution `y` of `x ∈ a∘y` and condition
/// 3 for a right solution `z` of `x ∈ z∘a`, each reaching `min{f(a), f(x)}`.
pub fn check_fuzzy_subhq(h: &Hypergroupoid, f: &FuzzySet) -> Result<IfshVerdict> {
    if f.len() != h.order() {
        return Err(Error::LengthMismatch {
            expected: h.order(),
            actual: f.len(),
        });
    }
    require_hyperquasigroup(h)?;
    if let Some(w) = membership_closure(h, f) {
        return Ok(IfshVerdict::fail(1, w));
    }
    let reach = |x: usize, a: usize| f[a].min(f[x]);
    if let Some(w) = pairs(h.order()).find(|&(x, a)| !left_solutions(h, a, x).any(|y| f[y] >= reach(x, a))) {
        return Ok(IfshVerdict::fail(2, w));
    }
    if let Some(w) = pairs(h.order()).find(|&(x, a)| !right_solutions(h, a, x).any(|z| f[z] >= reach(x, a))) {
        return Ok(IfshVerdict::fail(3, w));
    }
    Ok(IfshVerdict::pass())
}

/// `Im(mu) ∪ Im(lambda) ∪ {0, 1}`, ascending. Cuts of either grade vector
/// are constant between consecutive members.
pub fn critical_thresholds(a: &IntuitionisticFuzzySet) -> Vec<Grade> {
    let mut t: Vec<Grade> = a.mu().image();
    t.extend(a.lambda().image());
    t.push(Grade::ZERO);
    t.push(Grade::ONE);
    t.sort();
    t.dedup();
    t
}

/// Decides IFSH membership through level cuts: every non-empty `U(mu;t)` and
/// `L(lambda;t)` must be a sub-hyperquasigroup.
///
/// Closure failures of upper/lower cuts are reported as conditions 1/3 and
/// reproduction failures as conditions 2/4, in the same order the direct
/// check uses.
pub fn check_ifsh_via_cuts(h: &Hypergroupoid, a: &IntuitionisticFuzzySet) -> Result<IfshVerdict> {
    a.check_len(h.order())?;
    require_hyperquasigroup(h)?;
    let thresholds = critical_thresholds(a);
    let cuts = |kind: CutKind| {
        let f = match kind {
            CutKind::Upper => a.mu(),
            CutKind::Lower => a.lambda(),
        };
        thresholds
            .iter()
            .map(move |&t| (t, level_cut(f, t, kind)))
            .filter(|(_, k)| !k.is_empty())
    };

    for (condition, kind) in [(1, CutKind::Upper), (3, CutKind::Lower)] {
        for (threshold, k) in cuts(kind) {
            if let Some(SubFailure::NotClosed { x, y }) = closure_failure(h, k) {
                return Ok(IfshVerdict::fail(condition, (x, y)).with_context(FailureContext::Cut { kind, threshold }));
            }
        }
    }
    for (condition, kind) in [(2, CutKind::Upper), (4, CutKind::Lower)] {
        for (threshold, k) in cuts(kind) {
            match reproduction_failure(h, k) {
                Some(SubFailure::LeftNotReproduced { a, x } | SubFailure::RightNotReproduced { a, x }) => {
                    return Ok(
                        IfshVerdict::fail(condition, (x, a)).with_context(FailureContext::Cut { kind, threshold })
                    );
                }
                Some(SubFailure::NotClosed { .. }) => unreachable!("closure checked above"),
                None => {}
            }
        }
    }
    Ok(IfshVerdict::pass())
}

/// One row of a cut-by-cut report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutRow {
    pub threshold: Grade,
    pub upper: CarrierSubset,
    pub upper_is_sub: bool,
    pub lower: CarrierSubset,
    pub lower_is_sub: bool,
}

/// Upper cuts of `mu` and lower cuts of `lambda` at every critical threshold.
/// Empty cuts are reported with `*_is_sub = false`; they impose no condition.
pub fn cut_table(h: &Hypergroupoid, a: &IntuitionisticFuzzySet) -> Result<Vec<CutRow>> {
    a.check_len(h.order())?;
    Ok(critical_thresholds(a)
        .into_iter()
        .map(|t| {
            let upper = level_cut(a.mu(), t, CutKind::Upper);
            let lower = level_cut(a.lambda(), t, CutKind::Lower);
            CutRow {
                threshold: t,
                upper,
                upper_is_sub: is_sub(h, upper),
                lower,
                lower_is_sub: is_sub(h, lower),
            }
        })
        .collect())
}

fn require_sub(h: &Hypergroupoid, k: CarrierSubset) -> Result<()> {
    if k.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !k.fits(h.order()) {
        return Err(Error::SubsetOutOfRange {
            subset: k,
            order: h.order(),
        });
    }
    if !is_sub(h, k) {
        return Err(Error::NotASubHyperquasigroup(k));
    }
    Ok(())
}

/// Two-level IF set: `(in_mu, in_lambda)` on `K` and `(out_mu, out_lambda)`
/// off `K`. Requires `out_mu < in_mu` and `in_lambda < out_lambda`.
pub fn build_two_level(
    h: &Hypergroupoid,
    k: CarrierSubset,
    in_mu: Grade,
    out_mu: Grade,
    in_lambda: Grade,
    out_lambda: Grade,
) -> Result<IntuitionisticFuzzySet> {
    if out_mu >= in_mu {
        return Err(Error::ParameterOrderViolated(format!(
            "membership off the subset ({out_mu}) must be below membership on it ({in_mu})"
        )));
    }
    if in_lambda >= out_lambda {
        return Err(Error::ParameterOrderViolated(format!(
            "non-membership on the subset ({in_lambda}) must be below non-membership off it ({out_lambda})"
        )));
    }
    require_sub(h, k)?;
    let n = h.order();
    let pick = |x: usize, on: Grade, off: Grade| if k.contains(x) { on } else { off };
    let mu = FuzzySet::new((0..n).map(|x| pick(x, in_mu, out_mu)).collect())?;
    let lambda = FuzzySet::new((0..n).map(|x| pick(x, in_lambda, out_lambda)).collect())?;
    IntuitionisticFuzzySet::new(mu, lambda)
}

/// `(χ_K, χ_K^c)`.
pub fn build_characteristic(h: &Hypergroupoid, k: CarrierSubset) -> Result<IntuitionisticFuzzySet> {
    require_sub(h, k)?;
    Ok(IntuitionisticFuzzySet::characteristic(h.order(), k))
}

/// A strictly nested family of subsets indexed by distinct thresholds:
/// larger thresholds carry strictly smaller sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelChain {
    omega: Vec<Grade>,
    sets: Vec<CarrierSubset>,
}

impl LevelChain {
    /// Sorts the levels by descending threshold and checks the nesting.
    pub fn new(mut levels: Vec<(Grade, CarrierSubset)>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::ChainHypothesisViolated("no levels".into()));
        }
        levels.sort_by_key(|l| std::cmp::Reverse(l.0));
        for w in levels.windows(2) {
            let ((hi, upper), (lo, lower)) = (w[0], w[1]);
            if hi == lo {
                return Err(Error::ChainHypothesisViolated(format!("threshold {hi} listed twice")));
            }
            if !upper.is_proper_subset(lower) {
                return Err(Error::ChainHypothesisViolated(format!(
                    "level {hi} set {upper} is not a proper subset of level {lo} set {lower}"
                )));
            }
        }
        let (omega, sets) = levels.into_iter().unzip();
        Ok(LevelChain { omega, sets })
    }

    /// Thresholds in descending order.
    pub fn omega(&self) -> &[Grade] {
        &self.omega
    }

    pub fn sets(&self) -> &[CarrierSubset] {
        &self.sets
    }

    pub fn levels(&self) -> impl Iterator<Item = (Grade, CarrierSubset)> + '_ {
        self.omega.iter().copied().zip(self.sets.iter().copied())
    }

    /// Checks that the chain covers `h`'s carrier and consists of sub-hyperquasigroups.
    pub fn validate(&self, h: &Hypergroupoid) -> Result<()> {
        let union = self.sets.iter().fold(CarrierSubset::EMPTY, |acc, &s| acc.union(s));
        if union != h.carrier() {
            return Err(Error::ChainHypothesisViolated(format!(
                "union {union} is not the carrier {}",
                h.carrier()
            )));
        }
        for (t, k) in self.levels() {
            if k.is_empty() || !is_sub(h, k) {
                return Err(Error::ChainHypothesisViolated(format!(
                    "level {t} set {k} is not a sub-hyperquasigroup"
                )));
            }
        }
        Ok(())
    }
}

/// `mu(x) = max{α : x ∈ K_α}`, `lambda(x) = min{α : x ∈ K_α}`.
///
/// Fails with `ConstraintViolated` when the pair breaks `mu + lambda <= 1`.
pub fn build_from_chain(h: &Hypergroupoid, chain: &LevelChain) -> Result<IntuitionisticFuzzySet> {
    chain.validate(h)?;
    let levels_of = |x: usize| chain.levels().filter(move |(_, k)| k.contains(x)).map(|(t, _)| t);
    let n = h.order();
    let mu = (0..n)
        .map(|x| levels_of(x).max().expect("chain covers carrier"))
        .collect();
    let lambda = (0..n)
        .map(|x| levels_of(x).min().expect("chain covers carrier"))
        .collect();
    IntuitionisticFuzzySet::new(FuzzySet::new(mu)?, FuzzySet::new(lambda)?)
}
