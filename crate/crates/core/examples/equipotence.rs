//! Level-image relations over IFSH families and their quotients.

use hyperq::fixtures::{block4, zgroup};
use hyperq::grade::g;
use hyperq::{canonical_family, classify, verify_equipotence, Relation, DEFAULT_ORDER_LIMIT};

fn main() -> hyperq::Result<()> {
    let h = zgroup(4);
    let family = canonical_family(&h, DEFAULT_ORDER_LIMIT)?;
    let alpha = g("1/2");
    for rel in Relation::ALL {
        let p = classify(&family, alpha, rel);
        let images: Vec<String> = p.images.iter().map(ToString::to_string).collect();
        println!(
            "{rel:?} at {alpha}: {} classes with images {}",
            p.len(),
            images.join(" ")
        );
    }

    for (name, h) in [("ZGROUP(4)", zgroup(4)), ("BLOCK4", block4())] {
        for alpha in ["1/4", "1/2", "3/4"] {
            let r = verify_equipotence(&h, g(alpha), DEFAULT_ORDER_LIMIT)?;
            let counts: Vec<usize> = r.relations.iter().map(|x| x.class_count).collect();
            println!(
                "{name} at {alpha}: {} subs, class counts {counts:?}, ok={}",
                r.subs_count,
                r.passes()
            );
        }
    }
    Ok(())
}
