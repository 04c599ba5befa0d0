//! Seeded random structures for property tests and the `random` command.
//!
//! All generators take the RNG explicitly; [`seeded`] gives the
//! deterministic generator used everywhere else in the crate, so a seed
//! always reproduces the same structure.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::hyperstructure::Hypergroupoid;
use crate::ifs::{FuzzySet, IntuitionisticFuzzySet};
use crate::subset::{CarrierSubset, MAX_ORDER};

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every cell an independent uniform non-empty subset.
pub fn random_hypergroupoid<R: Rng + ?Sized>(rng: &mut R, order: usize) -> Result<Hypergroupoid> {
    if order == 0 || order >= MAX_ORDER {
        return Err(Error::UnsupportedOrder(order));
    }
    let top = 1u64 << order;
    Hypergroupoid::from_fn(order, |_, _| CarrierSubset::from_bits(rng.random_range(1..top)))
}

/// Rejection-samples [`random_hypergroupoid`] until reproducibility holds.
/// Returns the structure and the number of tables drawn.
///
/// Regular tables are too rare to rejection-sample beyond order 3, so with
/// `regular` set each draw is instead a block table over a random
/// elementary abelian 2-group quotient (see [`random_block_hypergroupoid`]),
/// closed under [`Hypergroupoid::regular_closure`], and rejected until
/// reproducible.
pub fn random_hyperquasigroup<R: Rng + ?Sized>(
    rng: &mut R,
    order: usize,
    regular: bool,
    max_attempts: u64,
) -> Result<(Hypergroupoid, u64)> {
    if order == 0 || order >= MAX_ORDER {
        return Err(Error::UnsupportedOrder(order));
    }
    for attempt in 1..=max_attempts {
        let h = if regular {
            random_block_hypergroupoid(rng, order)?.regular_closure()
        } else {
            random_hypergroupoid(rng, order)?
        };
        if h.is_hyperquasigroup() && (!regular || h.is_regular()) {
            return Ok((h, attempt));
        }
    }
    Err(Error::SamplingExhausted(max_attempts))
}

/// Splits the carrier into `2^k` non-empty blocks labelled by `Z_2^k`
/// (`k` uniform with `2^k <= order`) and fills `x∘y` with a uniform
/// non-empty subset of the block labelled `b(x) xor b(y)`.
pub fn random_block_hypergroupoid<R: Rng + ?Sized>(rng: &mut R, order: usize) -> Result<Hypergroupoid> {
    if order == 0 || order >= MAX_ORDER {
        return Err(Error::UnsupportedOrder(order));
    }
    let k = rng.random_range(0..=order.ilog2());
    let blocks = 1usize << k;
    let mut elements: Vec<usize> = (0..order).collect();
    elements.shuffle(rng);
    let mut label = vec![0; order];
    for (i, &x) in elements.iter().enumerate() {
        label[x] = if i < blocks { i } else { rng.random_range(0..blocks) };
    }
    let members: Vec<Vec<usize>> = (0..blocks)
        .map(|b| (0..order).filter(|&x| label[x] == b).collect())
        .collect();
    Hypergroupoid::from_fn(order, |x, y| {
        let block = &members[label[x] ^ label[y]];
        let pick = rng.random_range(1..1u64 << block.len());
        block
            .iter()
            .enumerate()
            .filter(|&(i, _)| pick >> i & 1 == 1)
            .map(|(_, &z)| z)
            .collect()
    })
}

/// A grade `k/d` with `d` uniform in `1..=max_denominator` and `k` uniform in `0..=d`.
pub fn random_grade<R: Rng + ?Sized>(rng: &mut R, max_denominator: u64) -> Grade {
    let d = rng.random_range(1..=max_denominator.max(1));
    let k = rng.random_range(0..=d);
    Grade::new(k, d).expect("k <= d")
}

/// A grade with denominator at most `max_denominator` and value at most `bound`.
pub fn random_grade_below<R: Rng + ?Sized>(rng: &mut R, max_denominator: u64, bound: Grade) -> Grade {
    let d = rng.random_range(1..=max_denominator.max(1));
    // floor(bound * d)
    let top = (bound.numerator() as u128 * d as u128 / bound.denominator() as u128) as u64;
    let k = rng.random_range(0..=top);
    Grade::new(k, d).expect("k <= d")
}

pub fn random_fuzzy_set<R: Rng + ?Sized>(rng: &mut R, order: usize, max_denominator: u64) -> FuzzySet {
    FuzzySet::new((0..order).map(|_| random_grade(rng, max_denominator)).collect()).expect("order in range")
}

/// `mu` drawn first, then `lambda` below `1 - mu` pointwise.
pub fn random_ifs<R: Rng + ?Sized>(rng: &mut R, order: usize, max_denominator: u64) -> IntuitionisticFuzzySet {
    let mu = random_fuzzy_set(rng, order, max_denominator);
    let lambda = (0..order)
        .map(|x| random_grade_below(rng, max_denominator, mu[x].complement()))
        .collect();
    IntuitionisticFuzzySet::new(mu, FuzzySet::new(lambda).expect("order in range")).expect("constraint respected")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_structure() {
        let a = random_hyperquasigroup(&mut seeded(7), 3, false, 1000).unwrap();
        let b = random_hyperquasigroup(&mut seeded(7), 3, false, 1000).unwrap();
        assert_eq!(a, b);
        assert!(a.0.is_hyperquasigroup());
    }

    #[test]
    fn regular_sampling_at_small_orders() {
        let mut rng = seeded(1);
        for order in 2..=4 {
            let (h, _) = random_hyperquasigroup(&mut rng, order, true, 1_000_000).unwrap();
            assert!(h.is_hyperquasigroup() && h.is_regular());
        }
    }

    #[test]
    fn exhausted_sampling_is_reported() {
        // a single draw rarely yields a regular order-6 table
        let mut rng = seeded(3);
        let r = random_hyperquasigroup(&mut rng, 6, true, 1);
        assert!(matches!(r, Ok(_) | Err(Error::SamplingExhausted(1))));
        assert_eq!(random_hypergroupoid(&mut rng, 0), Err(Error::UnsupportedOrder(0)));
    }

    #[test]
    fn random_grades_respect_bounds() {
        let mut rng = seeded(11);
        for _ in 0..2000 {
            let x = random_grade(&mut rng, 6);
            assert!(x.denominator() <= 6);
            let b = random_grade(&mut rng, 5);
            let y = random_grade_below(&mut rng, 6, b);
            assert!(y <= b);
            let a = random_ifs(&mut rng, 4, 6);
            assert_eq!(a.len(), 4);
        }
    }
}
