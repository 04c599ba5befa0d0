//! Workbench for finite hyperquasigroups and their intuitionistic fuzzy
//! sub-hyperquasigroups.
//!
//! Membership grades are exact rationals ([`Grade`]), carriers are small
//! (`n <= 64`, bitmask subsets), and every decision procedure is an
//! exhaustive scan that reports the first counterexample it finds.
//!
//! * [`hyperstructure`]: hypergroupoid tables, axioms, sub-hyperquasigroups.
//! * [`ifs`]: fuzzy and intuitionistic fuzzy sets, modal operators, level cuts.
//! * [`ifsh`]: the IFSH test (direct and via level cuts) and constructions.
//! * [`relations`]: level-image equivalences over families of IFSHs.
//! * [`fundamental`]: finite products, β*, the fundamental quasigroup, pushforward.
//! * [`io`]: the `hqg`, `ifs`, `chain` and `qsg` text formats.
//! * [`cli`]: the `hyperq` command line.

pub mod cli;
pub mod error;
pub mod fundamental;
pub mod grade;
pub mod hyperstructure;
pub mod ifs;
pub mod ifsh;
pub mod io;
pub mod random;
pub mod relations;
pub mod subset;

pub use error::{Error, ParseError, Result};
pub use fundamental::{
    beta_star, check_if_subquasigroup, finite_products, fundamental_quasigroup, pushforward, FundamentalResult,
    Partition, ProductFamily, Quasigroup, QuasigroupOp,
};
pub use grade::{grade_complement, grade_parse, Grade};
pub use hyperstructure::{
    check_axioms, enumerate_subs, fixtures, is_sub_hyperquasigroup, restrict, AxiomReport, Hypergroupoid, SubFailure,
    SubVerdict, DEFAULT_ORDER_LIMIT,
};
pub use ifs::{
    ifs_box, ifs_combine, ifs_diamond, ifs_modal, ifs_subset, ifs_validate, level_cut, reconstruct, CutKind, FuzzySet,
    IntuitionisticFuzzySet, ModalOp, SetOp,
};
pub use ifsh::{
    build_characteristic, build_from_chain, build_two_level, check_fuzzy_subhq, check_ifsh, check_ifsh_via_cuts,
    check_ifsh_with, IfshVerdict, LevelChain, WitnessMode,
};
pub use relations::{
    canonical_family, classify, level_map, verify_equipotence, EquipotenceReport, FamilyPartition, IfshFamily,
    LevelKind, Relation,
};
pub use subset::CarrierSubset;
