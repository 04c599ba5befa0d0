//! Deciding IFSH membership directly and through level cuts.

use hyperq::fixtures::{pair, zgroup};
use hyperq::grade::g;
use hyperq::ifsh::cut_table;
use hyperq::{check_ifsh, check_ifsh_via_cuts, check_ifsh_with, FuzzySet, IntuitionisticFuzzySet, WitnessMode};

fn ifs(mu: &[&str], lambda: &[&str]) -> IntuitionisticFuzzySet {
    let f = |xs: &[&str]| FuzzySet::new(xs.iter().map(|s| g(s)).collect()).unwrap();
    IntuitionisticFuzzySet::new(f(mu), f(lambda)).unwrap()
}

fn main() -> hyperq::Result<()> {
    let z2 = zgroup(2);
    let bad = ifs(&["3/10", "7/10"], &["1/10", "1/10"]);
    println!("ZGROUP(2), mu=(3/10,7/10):");
    println!("  direct: {}", check_ifsh(&z2, &bad)?);
    println!("  cuts:   {}", check_ifsh_via_cuts(&z2, &bad)?);
    for row in cut_table(&z2, &bad)? {
        println!(
            "  t={:<5} U={:<6} sub={:<5} L={:<6} sub={}",
            row.threshold.to_string(),
            row.upper.to_string(),
            row.upper_is_sub,
            row.lower.to_string(),
            row.lower_is_sub
        );
    }

    let good = ifs(&["9/10", "1/5"], &["1/20", "3/5"]);
    println!("ZGROUP(2), mu=(9/10,1/5): {}", check_ifsh(&z2, &good)?);

    let p3 = pair(3);
    let a = ifs(&["1/2", "1/4", "1/4"], &["1/4", "1/2", "1/2"]);
    println!(
        "PAIR(3): independent witnesses {}, shared witnesses {}",
        check_ifsh(&p3, &a)?,
        check_ifsh_with(&p3, &a, WitnessMode::Shared)?
    );
    Ok(())
}
