//! The text formats: parsing, canonical serialization and positioned errors.

use hyperq::fixtures::zgroup;
use hyperq::ifs_validate;
use hyperq::io::{parse_hqg, parse_ifs, serialize_hqg, serialize_ifs};

fn main() -> hyperq::Result<()> {
    let text = serialize_hqg(&zgroup(3));
    println!("{text}\n");
    assert_eq!(serialize_hqg(&parse_hqg(&text)?), text);

    let loose = "# any order, comments, unreduced grades\nifs 2\n1 : 2/4 1/4   # second\n0 : 1 0";
    let (mu, lambda) = parse_ifs(loose)?;
    println!("{}\n", serialize_ifs(&ifs_validate(mu, lambda)?));

    if let Err(e) = parse_hqg("hqg 2\n0 0 : 0\n0 1 : 1\n1 0 : 2") {
        println!("{e}");
    }
    if let Err(e) = parse_ifs("ifs 1\n0 : 3/4 1/2x") {
        println!("{e}");
    }
    Ok(())
}
