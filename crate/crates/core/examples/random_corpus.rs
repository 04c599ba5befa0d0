//! Seeded random hyperquasigroups and IF sets, as used by the property tests.

use hyperq::random::{random_hyperquasigroup, random_ifs, seeded};
use hyperq::{check_ifsh, fundamental_quasigroup};

fn main() -> hyperq::Result<()> {
    let mut rng = seeded(7);
    for order in 2..=5 {
        let (h, attempts) = random_hyperquasigroup(&mut rng, order, false, 100_000)?;
        let a = random_ifs(&mut rng, order, 6);
        println!(
            "order {order}: drawn in {attempts} attempts, regular={}, random IF set is IFSH: {}",
            h.is_regular(),
            check_ifsh(&h, &a)?.holds
        );
    }
    for order in 2..=5 {
        let (h, _) = random_hyperquasigroup(&mut rng, order, true, 1000)?;
        let f = fundamental_quasigroup(&h)?;
        println!(
            "regular order {order}: fundamental quasigroup of order {}",
            f.partition.len()
        );
    }
    Ok(())
}
