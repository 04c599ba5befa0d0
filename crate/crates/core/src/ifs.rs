//! Fuzzy and intuitionistic fuzzy sets over a finite carrier.

use std::ops::Index;

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::subset::{CarrierSubset, MAX_ORDER};

/// A map from the carrier `{0, ..., n-1}` into `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FuzzySet(Vec<Grade>);

impl FuzzySet {
    pub fn new(grades: Vec<Grade>) -> Result<Self> {
        if grades.is_empty() || grades.len() > MAX_ORDER {
            return Err(Error::UnsupportedOrder(grades.len()));
        }
        Ok(FuzzySet(grades))
    }

    pub fn constant(n: usize, value: Grade) -> Self {
        FuzzySet(vec![value; n])
    }

    /// The characteristic function of `k` on a carrier of order `n`.
    pub fn characteristic(n: usize, k: CarrierSubset) -> Self {
        FuzzySet(
            (0..n)
                .map(|x| if k.contains(x) { Grade::ONE } else { Grade::ZERO })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn grades(&self) -> &[Grade] {
        &self.0
    }

    pub fn complement(&self) -> FuzzySet {
        FuzzySet(self.0.iter().map(|g| g.complement()).collect())
    }

    /// Distinct values taken, ascending.
    pub fn image(&self) -> Vec<Grade> {
        let mut v = self.0.clone();
        v.sort();
        v.dedup();
        v
    }

    /// Largest grade over the elements of `s`, if `s` is non-empty.
    pub fn max_over(&self, s: CarrierSubset) -> Option<Grade> {
        s.iter().map(|x| self.0[x]).max()
    }

    pub fn min_over(&self, s: CarrierSubset) -> Option<Grade> {
        s.iter().map(|x| self.0[x]).min()
    }

    fn zip_with(&self, other: &FuzzySet, f: impl Fn(Grade, Grade) -> Grade) -> FuzzySet {
        FuzzySet(self.0.iter().zip(&other.0).map(|(&a, &b)| f(a, b)).collect())
    }
}

impl Index<usize> for FuzzySet {
    type Output = Grade;

    fn index(&self, x: usize) -> &Grade {
        &self.0[x]
    }
}

/// A pair `(mu, lambda)` of membership and non-membership degrees with
/// `mu(x) + lambda(x) <= 1` everywhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntuitionisticFuzzySet {
    mu: FuzzySet,
    lambda: FuzzySet,
}

impl IntuitionisticFuzzySet {
    /// Validates the pair, reporting the first element that breaks the sum constraint.
    pub fn new(mu: FuzzySet, lambda: FuzzySet) -> Result<Self> {
        if mu.len() != lambda.len() {
            return Err(Error::LengthMismatch {
                expected: mu.len(),
                actual: lambda.len(),
            });
        }
        if let Some(x) = (0..mu.len()).find(|&x| !mu[x].sum_at_most_one(lambda[x])) {
            return Err(Error::ConstraintViolated(x));
        }
        Ok(IntuitionisticFuzzySet { mu, lambda })
    }

    /// `0_~ = (0, 1)`.
    pub fn zero(n: usize) -> Self {
        IntuitionisticFuzzySet {
            mu: FuzzySet::constant(n, Grade::ZERO),
            lambda: FuzzySet::constant(n, Grade::ONE),
        }
    }

    /// `K_~ = (χ_K, χ_K^c)`.
    pub fn characteristic(n: usize, k: CarrierSubset) -> Self {
        let mu = FuzzySet::characteristic(n, k);
        let lambda = mu.complement();
        IntuitionisticFuzzySet { mu, lambda }
    }

    pub fn mu(&self) -> &FuzzySet {
        &self.mu
    }

    pub fn lambda(&self) -> &FuzzySet {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.mu.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mu.is_empty()
    }

    pub fn into_parts(self) -> (FuzzySet, FuzzySet) {
        (self.mu, self.lambda)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: self.len(),
            });
        }
        Ok(())
    }
}

pub fn ifs_validate(mu: FuzzySet, lambda: FuzzySet) -> Result<IntuitionisticFuzzySet> {
    IntuitionisticFuzzySet::new(mu, lambda)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SetOp {
    Intersect,
    Union,
}

pub fn ifs_combine(
    a: &IntuitionisticFuzzySet,
    b: &IntuitionisticFuzzySet,
    op: SetOp,
) -> Result<IntuitionisticFuzzySet> {
    b.check_len(a.len())?;
    let (mu, lambda) = match op {
        SetOp::Intersect => (
            a.mu.zip_with(&b.mu, Grade::min),
            a.lambda.zip_with(&b.lambda, Grade::max),
        ),
        SetOp::Union => (
            a.mu.zip_with(&b.mu, Grade::max),
            a.lambda.zip_with(&b.lambda, Grade::min),
        ),
    };
    IntuitionisticFuzzySet::new(mu, lambda)
}

/// `A ⊆ B` iff `mu_A <= mu_B` and `lambda_A >= lambda_B` pointwise.
pub fn ifs_subset(a: &IntuitionisticFuzzySet, b: &IntuitionisticFuzzySet) -> Result<bool> {
    b.check_len(a.len())?;
    Ok((0..a.len()).all(|x| a.mu[x] <= b.mu[x] && a.lambda[x] >= b.lambda[x]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModalOp {
    /// `(lambda, mu)`
    Complement,
    /// `(mu, mu^c)`
    Box,
    /// `(lambda^c, lambda)`
    Diamond,
}

pub fn ifs_modal(a: &IntuitionisticFuzzySet, op: ModalOp) -> IntuitionisticFuzzySet {
    let (mu, lambda) = match op {
        ModalOp::Complement => (a.lambda.clone(), a.mu.clone()),
        ModalOp::Box => (a.mu.clone(), a.mu.complement()),
        ModalOp::Diamond => (a.lambda.complement(), a.lambda.clone()),
    };
    IntuitionisticFuzzySet { mu, lambda }
}

pub fn ifs_box(a: &IntuitionisticFuzzySet) -> IntuitionisticFuzzySet {
    ifs_modal(a, ModalOp::Box)
}

pub fn ifs_diamond(a: &IntuitionisticFuzzySet) -> IntuitionisticFuzzySet {
    ifs_modal(a, ModalOp::Diamond)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutKind {
    /// `{x : f(x) >= t}`
    Upper,
    /// `{x : f(x) <= t}`
    Lower,
}

pub fn level_cut(f: &FuzzySet, t: Grade, kind: CutKind) -> CarrierSubset {
    f.grades()
        .iter()
        .enumerate()
        .filter(|(_, &v)| match kind {
            CutKind::Upper => v >= t,
            CutKind::Lower => v <= t,
        })
        .map(|(x, _)| x)
        .collect()
}

/// Rebuilds `f` from its level cuts: for upper cuts, `x ↦ sup{α : x ∈ U(f;α)}`;
/// for lower cuts, `x ↦ inf{α : x ∈ L(f;α)}`.
///
/// The cuts only change at values of `f`, so the sup/inf over `[0, 1]` is
/// taken over the image plus the boundary grade.
pub fn reconstruct(f: &FuzzySet, kind: CutKind) -> FuzzySet {
    let mut thresholds = f.image();
    let grades = match kind {
        CutKind::Upper => {
            thresholds.push(Grade::ZERO);
            let cuts: Vec<_> = thresholds.iter().map(|&t| (t, level_cut(f, t, kind))).collect();
            (0..f.len())
                .map(|x| {
                    cuts.iter()
                        .filter(|(_, c)| c.contains(x))
                        .map(|&(t, _)| t)
                        .max()
                        .unwrap_or(Grade::ZERO)
                })
                .collect()
        }
        CutKind::Lower => {
            thresholds.push(Grade::ONE);
            let cuts: Vec<_> = thresholds.iter().map(|&t| (t, level_cut(f, t, kind))).collect();
            (0..f.len())
                .map(|x| {
                    cuts.iter()
                        .filter(|(_, c)| c.contains(x))
                        .map(|&(t, _)| t)
                        .min()
                        .unwrap_or(Grade::ONE)
                })
                .collect()
        }
    };
    FuzzySet(grades)
}
