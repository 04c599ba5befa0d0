//! Building IFSHs from sub-hyperquasigroups and from chains of them.

use hyperq::fixtures::{pair, zgroup};
use hyperq::grade::g;
use hyperq::{build_characteristic, build_from_chain, build_two_level, check_ifsh, CarrierSubset, Error, LevelChain};

fn main() -> hyperq::Result<()> {
    let z4 = zgroup(4);
    let even: CarrierSubset = [0, 2].into_iter().collect();

    let a = build_two_level(&z4, even, g("9/10"), g("1/5"), g("1/20"), g("3/5"))?;
    println!("two-level on {even}: {a:?}, IFSH: {}", check_ifsh(&z4, &a)?.holds);

    let chi = build_characteristic(&z4, even)?;
    println!("characteristic of {even}: {chi:?}");

    let chain = LevelChain::new(vec![
        (g("3/5"), CarrierSubset::singleton(0)),
        (g("2/5"), even),
        (g("1/5"), z4.carrier()),
    ])?;
    let c = build_from_chain(&z4, &chain)?;
    println!("from chain: {c:?}, IFSH: {}", check_ifsh(&z4, &c)?.holds);

    // a chain whose top threshold is too large breaks mu + lambda <= 1
    let steep = LevelChain::new(vec![
        (g("9/10"), CarrierSubset::singleton(0)),
        (g("1/2"), [0, 1].into_iter().collect()),
        (g("1/5"), pair(4).carrier()),
    ])?;
    match build_from_chain(&pair(4), &steep) {
        Err(Error::ConstraintViolated(x)) => println!("steep chain rejected at element {x}"),
        other => println!("unexpected: {other:?}"),
    }
    Ok(())
}
