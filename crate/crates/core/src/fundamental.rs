//! Finite products, the fundamental relation β*, and the fundamental
//! quasigroup `G/β*` with its left and right divisions.

use std::collections::HashSet;
use std::fmt;

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::hyperstructure::Hypergroupoid;
use crate::ifs::{FuzzySet, IntuitionisticFuzzySet};
use crate::ifsh::{FailureContext, IfshVerdict};
use crate::subset::CarrierSubset;

/// The values of all finite parenthesized products of carrier elements,
/// singletons included. Sorted by bitmask.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductFamily {
    subsets: Vec<CarrierSubset>,
}

impl ProductFamily {
    pub fn subsets(&self) -> &[CarrierSubset] {
        &self.subsets
    }

    pub fn contains(&self, s: CarrierSubset) -> bool {
        self.subsets.binary_search(&s).is_ok()
    }

    pub fn len(&self) -> usize {
        self.subsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subsets.is_empty()
    }
}

/// Least family containing every singleton and closed under `(u, v) ↦ u∘v`.
///
/// Every parenthesized product splits into a product of two shorter ones,
/// so this fixed point is exactly the set of values of all finite products.
pub fn finite_products(h: &Hypergroupoid) -> ProductFamily {
    let mut seen: HashSet<CarrierSubset> = HashSet::new();
    let mut members: Vec<CarrierSubset> = Vec::new();
    let mut frontier: Vec<CarrierSubset> = (0..h.order()).map(CarrierSubset::singleton).collect();
    for &s in &frontier {
        seen.insert(s);
    }
    // Each new member is multiplied against everything found so far, on both sides.
    while let Some(w) = frontier.pop() {
        members.push(w);
        let mut fresh = vec![];
        for &u in &members {
            for p in [h.set_product(u, w), h.set_product(w, u)] {
                if seen.insert(p) {
                    fresh.push(p);
                }
            }
        }
        frontier.extend(fresh);
    }
    members.sort();
    ProductFamily { subsets: members }
}

/// A partition of the carrier into classes, indexed by ascending least element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    class_of: Vec<usize>,
    classes: Vec<CarrierSubset>,
}

impl Partition {
    pub fn from_class_of(class_rep: &[usize]) -> Self {
        let n = class_rep.len();
        let mut classes: Vec<CarrierSubset> = vec![];
        let mut index_of_rep = vec![usize::MAX; n];
        let mut class_of = vec![0; n];
        for x in 0..n {
            let r = class_rep[x];
            if index_of_rep[r] == usize::MAX {
                index_of_rep[r] = classes.len();
                classes.push(CarrierSubset::EMPTY);
            }
            class_of[x] = index_of_rep[r];
            classes[class_of[x]].insert(x);
        }
        Partition { class_of, classes }
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn classes(&self) -> &[CarrierSubset] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn same_class(&self, x: usize, y: usize) -> bool {
        self.class_of[x] == self.class_of[y]
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.classes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Classes of β*, the transitive closure of "both lie in a common finite product".
pub fn beta_star(h: &Hypergroupoid) -> Partition {
    beta_star_of(h.order(), &finite_products(h))
}

fn beta_star_of(n: usize, products: &ProductFamily) -> Partition {
    let mut uf = UnionFind::<usize>::new(n);
    for u in products.subsets() {
        let mut it = u.iter();
        if let Some(first) = it.next() {
            for x in it {
                uf.union(first, x);
            }
        }
    }
    // Relabel so that each class is represented by its least element.
    let mut least = vec![usize::MAX; n];
    for x in 0..n {
        let r = uf.find(x);
        least[r] = least[r].min(x);
    }
    let reps: Vec<usize> = (0..n).map(|x| least[uf.find(x)]).collect();
    Partition::from_class_of(&reps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum QuasigroupOp {
    Mul,
    LeftDiv,
    RightDiv,
}

impl QuasigroupOp {
    pub const ALL: [QuasigroupOp; 3] = [QuasigroupOp::Mul, QuasigroupOp::LeftDiv, QuasigroupOp::RightDiv];
}

impl fmt::Display for QuasigroupOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuasigroupOp::Mul => "mult",
            QuasigroupOp::LeftDiv => "ldiv",
            QuasigroupOp::RightDiv => "rdiv",
        })
    }
}

/// A finite quasigroup: a Latin square with its derived divisions
/// `x\y = z ⟺ x·z = y` and `x/y = z ⟺ z·y = x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quasigroup {
    order: usize,
    mult: Vec<usize>,
    ldiv: Vec<usize>,
    rdiv: Vec<usize>,
}

impl Quasigroup {
    /// Builds the quasigroup from a row-major multiplication table.
    pub fn from_mult(order: usize, mult: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::UnsupportedOrder(0));
        }
        if mult.len() != order * order {
            return Err(Error::TableShape {
                expected: order * order,
                actual: mult.len(),
            });
        }
        let mut ldiv = vec![usize::MAX; order * order];
        let mut rdiv = vec![usize::MAX; order * order];
        for x in 0..order {
            for z in 0..order {
                let y = mult[x * order + z];
                if y >= order {
                    return Err(Error::NotALatinSquare(format!(
                        "entry {y} at ({x}, {z}) is out of range"
                    )));
                }
                // x·z = y  ⟹  x\y = z and y/z = x
                if ldiv[x * order + y] != usize::MAX {
                    return Err(Error::NotALatinSquare(format!("row {x} repeats {y}")));
                }
                ldiv[x * order + y] = z;
                if rdiv[y * order + z] != usize::MAX {
                    return Err(Error::NotALatinSquare(format!("column {z} repeats {y}")));
                }
                rdiv[y * order + z] = x;
            }
        }
        Ok(Quasigroup {
            order,
            mult,
            ldiv,
            rdiv,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mult[x * self.order + y]
    }

    /// `x \ y`
    pub fn ldiv(&self, x: usize, y: usize) -> usize {
        self.ldiv[x * self.order + y]
    }

    /// `x / y`
    pub fn rdiv(&self, x: usize, y: usize) -> usize {
        self.rdiv[x * self.order + y]
    }

    pub fn apply(&self, op: QuasigroupOp, x: usize, y: usize) -> usize {
        match op {
            QuasigroupOp::Mul => self.mul(x, y),
            QuasigroupOp::LeftDiv => self.ldiv(x, y),
            QuasigroupOp::RightDiv => self.rdiv(x, y),
        }
    }

    pub fn table(&self, op: QuasigroupOp) -> &[usize] {
        match op {
            QuasigroupOp::Mul => &self.mult,
            QuasigroupOp::LeftDiv => &self.ldiv,
            QuasigroupOp::RightDiv => &self.rdiv,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FundamentalResult {
    pub partition: Partition,
    pub quasigroup: Quasigroup,
    /// Whether the input was regular; not required for the construction.
    pub regular: bool,
}

/// Builds `G/β*` and verifies that the class product is well defined and
/// forms a Latin square.
pub fn fundamental_quasigroup(h: &Hypergroupoid) -> Result<FundamentalResult> {
    if !h.is_hyperquasigroup() {
        let g = h.carrier();
        let x = (0..h.order())
            .find(|&x| {
                let xs = CarrierSubset::singleton(x);
                h.set_product(xs, g) != g || h.set_product(g, xs) != g
            })
            .expect("some element fails reproducibility");
        return Err(Error::NotAHyperquasigroup(x));
    }
    let partition = beta_star(h);
    let m = partition.len();
    let mut mult = Vec::with_capacity(m * m);
    for (i, &ci) in partition.classes().iter().enumerate() {
        for (j, &cj) in partition.classes().iter().enumerate() {
            let product = h.set_product(ci, cj);
            let target = partition.class_of(product.least().expect("non-empty product"));
            if !product.is_subset(partition.classes()[target]) {
                return Err(Error::IllDefinedProduct(i, j));
            }
            mult.push(target);
        }
    }
    let quasigroup = Quasigroup::from_mult(m, mult)?;
    Ok(FundamentalResult {
        partition,
        quasigroup,
        regular: h.is_regular(),
    })
}

/// Tests `min{mu(x), mu(y)} <= mu(x*y)` (condition 1) and
/// `lambda(x*y) <= max{lambda(x), lambda(y)}` (condition 2) for `*` in
/// multiplication, left division and right division.
pub fn check_if_subquasigroup(q: &Quasigroup, a: &IntuitionisticFuzzySet) -> Result<IfshVerdict> {
    a.check_len(q.order())?;
    let (mu, lambda) = (a.mu(), a.lambda());
    let n = q.order();
    for op in QuasigroupOp::ALL {
        for x in 0..n {
            for y in 0..n {
                let z = q.apply(op, x, y);
                if mu[x].min(mu[y]) > mu[z] {
                    let mut v = IfshVerdict::fail(1, (x, y));
                    v.context = Some(FailureContext::Operation(op));
                    return Ok(v);
                }
                if lambda[z] > lambda[x].max(lambda[y]) {
                    let mut v = IfshVerdict::fail(2, (x, y));
                    v.context = Some(FailureContext::Operation(op));
                    return Ok(v);
                }
            }
        }
    }
    Ok(IfshVerdict::pass())
}

/// Pushes an IF set down to the β* classes: classwise max of `mu` and
/// classwise min of `lambda`.
pub fn pushforward(
    h: &Hypergroupoid,
    a: &IntuitionisticFuzzySet,
) -> Result<(FundamentalResult, IntuitionisticFuzzySet)> {
    a.check_len(h.order())?;
    let fundamental = fundamental_quasigroup(h)?;
    let classes = fundamental.partition.classes();
    let mu: Vec<Grade> = classes
        .iter()
        .map(|&c| a.mu().max_over(c).expect("non-empty class"))
        .collect();
    let lambda: Vec<Grade> = classes
        .iter()
        .map(|&c| a.lambda().min_over(c).expect("non-empty class"))
        .collect();
    let pushed = IntuitionisticFuzzySet::new(FuzzySet::new(mu)?, FuzzySet::new(lambda)?)?;
    Ok((fundamental, pushed))
}
