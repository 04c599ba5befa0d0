//! Axiom checks and sub-hyperquasigroup enumeration on the built-in fixtures.

use hyperq::fixtures::{block4, pair, zgroup};
use hyperq::{check_axioms, enumerate_subs, is_sub_hyperquasigroup, restrict, CarrierSubset, DEFAULT_ORDER_LIMIT};

fn main() -> hyperq::Result<()> {
    for (name, h) in [("PAIR(3)", pair(3)), ("ZGROUP(4)", zgroup(4)), ("BLOCK4", block4())] {
        let r = check_axioms(&h);
        println!(
            "{name}: hyperquasigroup={} hypergroup={} regular={} (regularity witness {:?})",
            r.is_hyperquasigroup, r.is_hypergroup, r.is_regular, r.regularity_witness
        );
        let subs = enumerate_subs(&h, DEFAULT_ORDER_LIMIT)?;
        let listed: Vec<String> = subs.iter().map(ToString::to_string).collect();
        println!("  {} sub-hyperquasigroups: {}", subs.len(), listed.join(" "));
    }

    // {1} in Z/2 is not closed: 1 + 1 = 0
    let z2 = zgroup(2);
    let verdict = is_sub_hyperquasigroup(&z2, CarrierSubset::singleton(1))?;
    println!("{{1}} in ZGROUP(2): {:?}", verdict.failure);

    let even: CarrierSubset = [0, 2].into_iter().collect();
    let sub = restrict(&zgroup(4), even)?;
    println!("ZGROUP(4) restricted to {even}: {sub:?}");
    Ok(())
}
