//! Root data with a diagram automorphism: orbits, folding, coweights and the
//! Kottwitz group.

use adlv::root_datum::{CartanType, RootDatum, Twist};

fn main() -> adlv::Result<()> {
    let d = RootDatum::with_twist(CartanType::E(6), Twist::Flip)?;
    println!("{d}: rank {}, sigma of order {}", d.rank(), d.sigma_order());
    for row in d.cartan_matrix() {
        println!("  {row:?}");
    }
    let orbits: Vec<Vec<usize>> = d
        .orbits()
        .iter()
        .map(|o| o.iter().map(|i| i + 1).collect())
        .collect();
    println!("sigma-orbits of nodes: {orbits:?}");

    let fold = d.fold_to_split()?;
    println!("folds to the split datum {}", fold.split());
    for i in 0..d.rank() {
        let w = d.fundamental_coweight(i);
        let avg = d.sigma_average(&w);
        println!(
            "  omega_{}: <omega, 2 rho> = {}, sigma-average {avg}, folded {}",
            i + 1,
            d.pair_two_rho(&w),
            fold.to_split(&avg)?
        );
    }

    let split = RootDatum::split(CartanType::E(6));
    println!(
        "{split}: Kottwitz group of order {}; twisted: order {}",
        split.kottwitz_group().count(),
        d.kottwitz_group().count()
    );

    let from_json = RootDatum::from_json(r#"{"type":"D","rank":4,"sigma":[3,2,4,1]}"#)?;
    println!("from JSON: {from_json}, orbits {:?}", from_json.orbits());
    Ok(())
}
