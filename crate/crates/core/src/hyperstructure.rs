//! Finite hypergroupoids and their axioms.
//!
//! A [`Hypergroupoid`] of order `n` is an `n x n` table whose cells are
//! non-empty subsets of the carrier. The checks here decide reproducibility
//! (hyperquasigroups), associativity (hypergroups), regularity, and the
//! sub-hyperquasigroup criterion, always reporting the lexicographically
//! first counterexample.

use crate::error::{Error, Result};
use crate::subset::{CarrierSubset, MAX_ORDER};

/// Default cap on the carrier order for powerset enumeration.
pub const DEFAULT_ORDER_LIMIT: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergroupoid {
    order: usize,
    table: Vec<CarrierSubset>,
}

impl Hypergroupoid {
    /// Builds a hypergroupoid from a row-major table of `order * order` cells.
    pub fn new(order: usize, table: Vec<CarrierSubset>) -> Result<Self> {
        if order == 0 || order > MAX_ORDER {
            return Err(Error::UnsupportedOrder(order));
        }
        if table.len() != order * order {
            return Err(Error::TableShape {
                expected: order * order,
                actual: table.len(),
            });
        }
        for (i, cell) in table.iter().enumerate() {
            if cell.is_empty() {
                return Err(Error::EmptyCell(i / order, i % order));
            }
            if !cell.fits(order) {
                return Err(Error::SubsetOutOfRange { subset: *cell, order });
            }
        }
        Ok(Hypergroupoid { order, table })
    }

    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> CarrierSubset) -> Result<Self> {
        let table = (0..order * order).map(|i| f(i / order, i % order)).collect();
        Self::new(order, table)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn carrier(&self) -> CarrierSubset {
        CarrierSubset::full(self.order)
    }

    /// The cell `x ∘ y`.
    pub fn product(&self, x: usize, y: usize) -> CarrierSubset {
        self.table[x * self.order + y]
    }

    /// `A ∘ B`, the union of `x ∘ y` over `x ∈ A`, `y ∈ B`.
    pub fn set_product(&self, a: CarrierSubset, b: CarrierSubset) -> CarrierSubset {
        let mut out = CarrierSubset::EMPTY;
        for x in a {
            for y in b {
                out = out.union(self.product(x, y));
            }
        }
        out
    }

    pub fn cells(&self) -> &[CarrierSubset] {
        &self.table
    }

    pub fn is_hyperquasigroup(&self) -> bool {
        self.reproducibility_failure().is_none()
    }

    fn reproducibility_failure(&self) -> Option<usize> {
        let g = self.carrier();
        (0..self.order).find(|&x| {
            let x_set = CarrierSubset::singleton(x);
            self.set_product(x_set, g) != g || self.set_product(g, x_set) != g
        })
    }

    fn associativity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let xs = CarrierSubset::singleton(x);
                    let zs = CarrierSubset::singleton(z);
                    let left = self.set_product(xs, self.product(y, z));
                    let right = self.set_product(self.product(x, y), zs);
                    if left != right {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    fn regularity_failure(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if self.product(y, z).contains(x)
                        && !(self.product(x, z).contains(y) && self.product(y, x).contains(z))
                    {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn is_regular(&self) -> bool {
        self.regularity_failure().is_none()
    }

    /// The least regular hypergroupoid containing `self` cellwise.
    ///
    /// Only adds elements to cells, so reproducibility is preserved.
    pub fn regular_closure(&self) -> Hypergroupoid {
        let n = self.order;
        let mut table = self.table.clone();
        let mut changed = true;
        while changed {
            changed = false;
            for y in 0..n {
                for z in 0..n {
                    for x in table[y * n + z] {
                        for (cell, add) in [(x * n + z, y), (y * n + x, z)] {
                            if !table[cell].contains(add) {
                                table[cell].insert(add);
                                changed = true;
                            }
                        }
                    }
                }
            }
        }
        Hypergroupoid { order: n, table }
    }
}

impl std::fmt::Debug for Hypergroupoid {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergroupoid(order {}) [", self.order)?;
        for (i, c) in self.table.iter().enumerate() {
            if i % self.order == 0 {
                write!(f, "\n ")?;
            }
            write!(f, " {c}")?;
        }
        write!(f, "\n]")
    }
}

/// Verdicts for the hypergroupoid axioms.
///
/// Each `*_witness` names the first failure in lexicographic scan order:
/// the element `x` with `x∘G ≠ G` or `G∘x ≠ G`, the triple `(x, y, z)` with
/// `x∘(y∘z) ≠ (x∘y)∘z`, and the triple `(x, y, z)` with `x ∈ y∘z` but
/// `y ∉ x∘z` or `z ∉ y∘x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub is_hypergroupoid: bool,
    pub is_hyperquasigroup: bool,
    pub is_hypergroup: bool,
    pub is_regular: bool,
    pub reproducibility_witness: Option<usize>,
    pub associativity_witness: Option<(usize, usize, usize)>,
    pub regularity_witness: Option<(usize, usize, usize)>,
}

pub fn check_axioms(h: &Hypergroupoid) -> AxiomReport {
    let reproducibility_witness = h.reproducibility_failure();
    let associativity_witness = h.associativity_failure();
    let regularity_witness = h.regularity_failure();
    let is_hyperquasigroup = reproducibility_witness.is_none();
    AxiomReport {
        is_hypergroupoid: true,
        is_hyperquasigroup,
        is_hypergroup: is_hyperquasigroup && associativity_witness.is_none(),
        is_regular: regularity_witness.is_none(),
        reproducibility_witness,
        associativity_witness,
        regularity_witness,
    }
}

/// Why a subset fails to be a sub-hyperquasigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubFailure {
    /// `x ∘ y` leaves the subset.
    NotClosed { x: usize, y: usize },
    /// `x ∈ K` is missing from `a ∘ K`.
    LeftNotReproduced { a: usize, x: usize },
    /// `x ∈ K` is missing from `K ∘ a`.
    RightNotReproduced { a: usize, x: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubVerdict {
    pub holds: bool,
    pub failure: Option<SubFailure>,
}

impl SubVerdict {
    fn from_failure(failure: Option<SubFailure>) -> Self {
        SubVerdict {
            holds: failure.is_none(),
            failure,
        }
    }
}

pub(crate) fn closure_failure(h: &Hypergroupoid, k: CarrierSubset) -> Option<SubFailure> {
    for x in k {
        for y in k {
            if !h.product(x, y).is_subset(k) {
                return Some(SubFailure::NotClosed { x, y });
            }
        }
    }
    None
}

/// Checks `K ⊆ a∘K` and `K ⊆ K∘a` for every `a ∈ K`, restricted to `K`.
/// Together with closure this is `a∘K = K = K∘a`.
pub(crate) fn reproduction_failure(h: &Hypergroupoid, k: CarrierSubset) -> Option<SubFailure> {
    for a in k {
        let a_set = CarrierSubset::singleton(a);
        let left = h.set_product(a_set, k).intersection(k);
        if let Some(x) = k.difference(left).least() {
            return Some(SubFailure::LeftNotReproduced { a, x });
        }
        let right = h.set_product(k, a_set).intersection(k);
        if let Some(x) = k.difference(right).least() {
            return Some(SubFailure::RightNotReproduced { a, x });
        }
    }
    None
}

/// Decides whether `K` is a sub-hyperquasigroup: closed under `∘`, and
/// `a∘K = K = K∘a` for all `a ∈ K`.
pub fn is_sub_hyperquasigroup(h: &Hypergroupoid, k: CarrierSubset) -> Result<SubVerdict> {
    if k.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !k.fits(h.order()) {
        return Err(Error::SubsetOutOfRange {
            subset: k,
            order: h.order(),
        });
    }
    let failure = closure_failure(h, k).or_else(|| reproduction_failure(h, k));
    Ok(SubVerdict::from_failure(failure))
}

pub(crate) fn is_sub(h: &Hypergroupoid, k: CarrierSubset) -> bool {
    !k.is_empty() && closure_failure(h, k).is_none() && reproduction_failure(h, k).is_none()
}

/// All sub-hyperquasigroups in ascending bitmask order.
pub fn enumerate_subs(h: &Hypergroupoid, limit: usize) -> Result<Vec<CarrierSubset>> {
    if h.order() > limit || h.order() >= MAX_ORDER {
        return Err(Error::OrderLimitExceeded {
            order: h.order(),
            limit: limit.min(MAX_ORDER - 1),
        });
    }
    let subs = (1..1u64 << h.order())
        .map(CarrierSubset::from_bits)
        .filter(|&k| is_sub(h, k))
        .collect();
    Ok(subs)
}

/// The induced hyperquasigroup on `K`, with `K`'s elements relabelled
/// `0..|K|` in ascending order.
pub fn restrict(h: &Hypergroupoid, k: CarrierSubset) -> Result<Hypergroupoid> {
    if !is_sub_hyperquasigroup(h, k)?.holds {
        return Err(Error::NotASubHyperquasigroup(k));
    }
    let elems: Vec<usize> = k.iter().collect();
    let mut index = vec![usize::MAX; h.order()];
    for (i, &x) in elems.iter().enumerate() {
        index[x] = i;
    }
    Hypergroupoid::from_fn(elems.len(), |i, j| {
        h.product(elems[i], elems[j]).iter().map(|z| index[z]).collect()
    })
}

/// The standard small structures used throughout the tests and examples.
pub mod fixtures {
    use super::*;

    /// `x ∘ y = {x, y}`.
    pub fn pair(n: usize) -> Hypergroupoid {
        Hypergroupoid::from_fn(n, |x, y| [x, y].into_iter().collect()).expect("valid order")
    }

    /// `x ∘ y = G`.
    pub fn total(n: usize) -> Hypergroupoid {
        Hypergroupoid::from_fn(n, |_, _| CarrierSubset::full(n)).expect("valid order")
    }

    /// The cyclic group `Z_n` as a hyperoperation with singleton values.
    pub fn zgroup(n: usize) -> Hypergroupoid {
        Hypergroupoid::from_fn(n, |x, y| CarrierSubset::singleton((x + y) % n)).expect("valid order")
    }

    /// Carrier `{0,1,2,3}` split into blocks `{0,1}` and `{2,3}`; the product
    /// of two elements is the block indexed by the sum of their block indices mod 2.
    pub fn block4() -> Hypergroupoid {
        let blocks = [CarrierSubset::from_bits(0b0011), CarrierSubset::from_bits(0b1100)];
        Hypergroupoid::from_fn(4, |x, y| blocks[(x / 2 + y / 2) % 2]).expect("valid order")
    }
}
