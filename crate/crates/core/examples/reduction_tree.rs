//! Builds the reduction tree of an element and reads off class polynomials,
//! dimensions and the class polynomial identity.
//!
//! Usage: `cargo run --example reduction_tree -- [ELEMENT] [TYPE]`, for
//! example `-- "s0 s1 s2 s1 s0" A2`.

use std::sync::Arc;

use adlv::affine_weyl::AffineWeyl;
use adlv::reduction::{dim_and_components, Reducer, Strategy, DEFAULT_BUDGET};
use adlv::root_datum::{CartanType, RootDatum};

fn main() -> adlv::Result<()> {
    let mut args = std::env::args().skip(1);
    let text = args.next().unwrap_or_else(|| "s1 s2 s0 s1 s2 s1".into());
    let ty = CartanType::parse(&args.next().unwrap_or_else(|| "A2".into()))?;
    let aw = AffineWeyl::new(Arc::new(RootDatum::split(ty)));
    let w = aw.parse(&text)?;
    let r = Reducer::new(&aw, Strategy::FirstFound, DEFAULT_BUDGET);

    let tree = r.build_tree(&w)?;
    println!(
        "{} (length {}): {} nodes, {} leaves",
        aw.format(&w),
        aw.length(&w),
        tree.nodes.len(),
        tree.leaves().count()
    );
    for p in tree.paths(&r)? {
        println!(
            "  path to {:<18} l_I = {} l_II = {} class {}",
            aw.format(&p.end),
            p.l1,
            p.l2,
            p.class.newton
        );
    }
    for (b, f) in r.class_polynomials(&w)? {
        let dim = dim_and_components(&r, &w, &b)?.expect("nonempty");
        println!(
            "  F[{}] = {:<24} dim {} with {} top orbits",
            b.newton,
            f.poly.to_string(),
            dim.dim,
            dim.orbit_count
        );
    }
    println!(
        "class polynomial identity holds: {}",
        r.verify_class_identity(&w)?
    );
    println!("{}", tree.to_dot(&r));
    Ok(())
}
