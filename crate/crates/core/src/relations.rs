//! Level-image equivalence relations over finite families of IFSHs.
//!
//! For a threshold `α`, two IF sets are related when their level images
//! coincide: the upper cut of `mu` (relation `U`), the lower cut of
//! `lambda` (relation `L`), or the intersection of both (relation `R`).

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::grade::Grade;
use crate::hyperstructure::{enumerate_subs, Hypergroupoid};
use crate::ifs::{level_cut, CutKind, IntuitionisticFuzzySet};
use crate::ifsh::check_ifsh;
use crate::subset::CarrierSubset;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LevelKind {
    /// `U(mu; α)`
    U,
    /// `L(lambda; α)`
    L,
    /// `U(mu; α) ∩ L(lambda; α)`
    I,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    U,
    L,
    R,
}

impl Relation {
    pub const ALL: [Relation; 3] = [Relation::U, Relation::L, Relation::R];

    pub fn level_kind(self) -> LevelKind {
        match self {
            Relation::U => LevelKind::U,
            Relation::L => LevelKind::L,
            Relation::R => LevelKind::I,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::U => "U",
            Relation::L => "L",
            Relation::R => "R",
        })
    }
}

pub fn level_map(a: &IntuitionisticFuzzySet, alpha: Grade, kind: LevelKind) -> CarrierSubset {
    let upper = || level_cut(a.mu(), alpha, CutKind::Upper);
    let lower = || level_cut(a.lambda(), alpha, CutKind::Lower);
    match kind {
        LevelKind::U => upper(),
        LevelKind::L => lower(),
        LevelKind::I => upper().intersection(lower()),
    }
}

/// A finite family of IFSHs of one hyperquasigroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IfshFamily {
    order: usize,
    members: Vec<IntuitionisticFuzzySet>,
}

impl IfshFamily {
    /// Checks every member against `h`; fails with the index of the first non-IFSH.
    pub fn new(h: &Hypergroupoid, members: Vec<IntuitionisticFuzzySet>) -> Result<Self> {
        for (i, m) in members.iter().enumerate() {
            if !check_ifsh(h, m)?.holds {
                return Err(Error::NotAnIfsh(i));
            }
        }
        Ok(IfshFamily {
            order: h.order(),
            members,
        })
    }

    pub fn members(&self) -> &[IntuitionisticFuzzySet] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Classes listed in first-seen order; each class lists member indices ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPartition {
    pub class_of: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
    /// The shared level image of each class.
    pub images: Vec<CarrierSubset>,
}

impl FamilyPartition {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }
}

pub fn classify(fam: &IfshFamily, alpha: Grade, rel: Relation) -> FamilyPartition {
    let mut index: HashMap<CarrierSubset, usize> = HashMap::new();
    let mut out = FamilyPartition {
        class_of: Vec::with_capacity(fam.len()),
        classes: vec![],
        images: vec![],
    };
    for (i, a) in fam.members().iter().enumerate() {
        let image = level_map(a, alpha, rel.level_kind());
        let c = *index.entry(image).or_insert_with(|| {
            out.classes.push(vec![]);
            out.images.push(image);
            out.classes.len() - 1
        });
        out.classes[c].push(i);
        out.class_of.push(c);
    }
    out
}

/// `{0_~} ∪ {K_~ : K a sub-hyperquasigroup}`.
pub fn canonical_family(h: &Hypergroupoid, limit: usize) -> Result<IfshFamily> {
    let n = h.order();
    let mut members = vec![IntuitionisticFuzzySet::zero(n)];
    members.extend(
        enumerate_subs(h, limit)?
            .into_iter()
            .map(|k| IntuitionisticFuzzySet::characteristic(n, k)),
    );
    IfshFamily::new(h, members)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationReport {
    pub relation: Relation,
    pub class_count: usize,
    /// Distinct classes carry distinct images.
    pub injective: bool,
    /// The images are exactly the sub-hyperquasigroups plus the empty set.
    pub surjective: bool,
}

impl RelationReport {
    pub fn passes(&self) -> bool {
        self.injective && self.surjective
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquipotenceReport {
    pub alpha: Grade,
    /// Number of sub-hyperquasigroups.
    pub subs_count: usize,
    pub relations: Vec<RelationReport>,
}

impl EquipotenceReport {
    pub fn passes(&self) -> bool {
        self.relations.iter().all(RelationReport::passes)
    }
}

/// Checks that each of the three quotients of the canonical family is in
/// bijection with the sub-hyperquasigroups plus the empty set.
pub fn verify_equipotence(h: &Hypergroupoid, alpha: Grade, limit: usize) -> Result<EquipotenceReport> {
    if alpha.is_zero() || alpha.is_one() {
        return Err(Error::AlphaOnBoundary);
    }
    let subs = enumerate_subs(h, limit)?;
    let family = canonical_family(h, limit)?;
    let mut expected: Vec<CarrierSubset> = subs.clone();
    expected.push(CarrierSubset::EMPTY);
    expected.sort();

    let relations = Relation::ALL
        .into_iter()
        .map(|relation| {
            let p = classify(&family, alpha, relation);
            let mut images = p.images.clone();
            images.sort();
            let before = images.len();
            images.dedup();
            RelationReport {
                relation,
                class_count: p.len(),
                injective: images.len() == before,
                surjective: images == expected,
            }
        })
        .collect();
    Ok(EquipotenceReport {
        alpha,
        subs_count: subs.len(),
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grade::g;
    use crate::hyperstructure::fixtures::*;
    use crate::hyperstructure::DEFAULT_ORDER_LIMIT;
    use crate::ifs::{ifs_box, ifs_diamond};
    use crate::ifsh::build_two_level;

    fn set(xs: &[usize]) -> CarrierSubset {
        xs.iter().copied().collect()
    }

    #[test]
    fn level_map_examples() {
        let half = g("1/2");
        let zero = IntuitionisticFuzzySet::zero(2);
        assert_eq!(level_map(&zero, half, LevelKind::U), CarrierSubset::EMPTY);
        assert_eq!(level_map(&zero, half, LevelKind::L), CarrierSubset::EMPTY);
        let k = IntuitionisticFuzzySet::characteristic(2, set(&[0]));
        assert_eq!(level_map(&k, half, LevelKind::I), set(&[0]));
        assert_eq!(level_map(&k, Grade::ZERO, LevelKind::U), set(&[0, 1]));
    }

    #[test]
    fn classify_examples() {
        let h = pair(2);
        let fam = canonical_family(&h, DEFAULT_ORDER_LIMIT).unwrap();
        assert_eq!(fam.len(), 4);
        let p = classify(&fam, g("1/2"), Relation::U);
        assert_eq!(p.classes, vec![vec![0], vec![1], vec![2], vec![3]]);
        assert_eq!(p.images, vec![CarrierSubset::EMPTY, set(&[0]), set(&[1]), set(&[0, 1])]);

        let one = IfshFamily::new(&h, vec![fam.members()[1].clone()]).unwrap();
        for rel in Relation::ALL {
            assert_eq!(classify(&one, g("1/3"), rel).len(), 1);
        }
    }

    #[test]
    fn box_shares_u_class_and_diamond_shares_l_class() {
        let h = zgroup(4);
        let a = build_two_level(&h, set(&[0, 2]), g("3/4"), g("1/4"), g("1/8"), g("1/2")).unwrap();
        for alpha in ["1/8", "1/4", "1/2", "3/4"] {
            let fam = IfshFamily::new(&h, vec![a.clone(), ifs_box(&a)]).unwrap();
            assert_eq!(classify(&fam, g(alpha), Relation::U).len(), 1);
            let fam = IfshFamily::new(&h, vec![a.clone(), ifs_diamond(&a)]).unwrap();
            assert_eq!(classify(&fam, g(alpha), Relation::L).len(), 1);
        }
    }

    #[test]
    fn u_and_l_together_imply_r() {
        let h = zgroup(4);
        let mut members = canonical_family(&h, DEFAULT_ORDER_LIMIT).unwrap().members().to_vec();
        for k in [set(&[0]), set(&[0, 2]), CarrierSubset::full(4)] {
            members.push(build_two_level(&h, k, g("3/4"), g("1/4"), g("1/8"), g("1/2")).unwrap());
            members.push(build_two_level(&h, k, g("1/2"), Grade::ZERO, g("1/4"), g("1/2")).unwrap());
        }
        let fam = IfshFamily::new(&h, members).unwrap();
        for alpha in ["1/8", "1/4", "1/2", "3/4"] {
            let u = classify(&fam, g(alpha), Relation::U);
            let l = classify(&fam, g(alpha), Relation::L);
            let r = classify(&fam, g(alpha), Relation::R);
            for i in 0..fam.len() {
                for j in 0..fam.len() {
                    if u.class_of[i] == u.class_of[j] && l.class_of[i] == l.class_of[j] {
                        assert_eq!(r.class_of[i], r.class_of[j]);
                    }
                }
            }
        }
    }

    #[test]
    fn canonical_family_sizes() {
        assert_eq!(canonical_family(&zgroup(2), 12).unwrap().len(), 3);
        assert_eq!(canonical_family(&pair(2), 12).unwrap().len(), 4);
        assert_eq!(canonical_family(&total(2), 12).unwrap().len(), 2);
        assert!(matches!(
            canonical_family(&pair(3), 2),
            Err(Error::OrderLimitExceeded { .. })
        ));
    }

    #[test]
    fn family_rejects_non_ifsh() {
        let bad = IntuitionisticFuzzySet::characteristic(2, set(&[1]));
        assert_eq!(IfshFamily::new(&zgroup(2), vec![bad]), Err(Error::NotAnIfsh(0)));
    }

    #[test]
    fn equipotence_examples() {
        let r = verify_equipotence(&pair(2), g("1/2"), 12).unwrap();
        assert!(r.passes());
        assert!(r.relations.iter().all(|x| x.class_count == 4));
        let r = verify_equipotence(&zgroup(2), g("1/2"), 12).unwrap();
        assert_eq!(r.subs_count, 2);
        assert!(r.passes() && r.relations.iter().all(|x| x.class_count == 3));
        assert_eq!(
            verify_equipotence(&zgroup(2), Grade::ONE, 12),
            Err(Error::AlphaOnBoundary)
        );
        assert_eq!(
            verify_equipotence(&zgroup(2), Grade::ZERO, 12),
            Err(Error::AlphaOnBoundary)
        );
    }
}
