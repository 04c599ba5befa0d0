//! The fundamental relation, the quotient quasigroup and the pushforward of an IFSH.

use hyperq::fixtures::block4;
use hyperq::grade::g;
use hyperq::io::serialize_quasigroup;
use hyperq::{beta_star, build_two_level, check_if_subquasigroup, finite_products, pushforward, CarrierSubset};

fn main() -> hyperq::Result<()> {
    let h = block4();
    let products: Vec<String> = finite_products(&h).subsets().iter().map(ToString::to_string).collect();
    println!("finite products: {}", products.join(" "));
    println!("beta*: {}", beta_star(&h));

    let a = build_two_level(&h, CarrierSubset::full(4), g("4/5"), g("0"), g("1/10"), g("1"))?;
    let low: CarrierSubset = [0, 1].into_iter().collect();
    let b = build_two_level(&h, low, g("9/10"), g("3/10"), g("1/10"), g("1/2"))?;
    for a in [a, b] {
        let (f, pushed) = pushforward(&h, &a)?;
        let verdict = check_if_subquasigroup(&f.quasigroup, &pushed)?;
        println!("{a:?}\n  -> {pushed:?} on {} classes: {verdict}", f.partition.len());
    }

    let (f, _) = pushforward(&h, &hyperq::IntuitionisticFuzzySet::zero(4))?;
    println!("{}", serialize_quasigroup(&f.quasigroup));
    Ok(())
}
