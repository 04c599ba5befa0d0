//! IF sets, the modal operators, level cuts and reconstruction from cuts.

use hyperq::grade::g;
use hyperq::{
    ifs_box, ifs_combine, ifs_diamond, level_cut, reconstruct, CutKind, FuzzySet, IntuitionisticFuzzySet, SetOp,
};

fn main() -> hyperq::Result<()> {
    let a = IntuitionisticFuzzySet::new(
        FuzzySet::new(vec![g("9/10"), g("1/2"), g("1/5")])?,
        FuzzySet::new(vec![g("0"), g("1/4"), g("3/5")])?,
    )?;
    let b = IntuitionisticFuzzySet::new(
        FuzzySet::new(vec![g("1/2"), g("1/2"), g("1/2")])?,
        FuzzySet::new(vec![g("1/3"), g("1/3"), g("1/3")])?,
    )?;
    println!("A        = {a:?}");
    println!("box A    = {:?}", ifs_box(&a));
    println!("diamond A = {:?}", ifs_diamond(&a));
    println!("A ∩ B    = {:?}", ifs_combine(&a, &b, SetOp::Intersect)?);

    for t in ["1/5", "1/2", "9/10"] {
        println!(
            "t = {t}: U(mu;t) = {}, L(lambda;t) = {}",
            level_cut(a.mu(), g(t), CutKind::Upper),
            level_cut(a.lambda(), g(t), CutKind::Lower)
        );
    }

    // the cut families determine the sets exactly
    assert_eq!(&reconstruct(a.mu(), CutKind::Upper), a.mu());
    assert_eq!(&reconstruct(a.lambda(), CutKind::Lower), a.lambda());
    println!("mu and lambda rebuilt from their cuts");
    Ok(())
}
