//! The Iwahori-Weyl group: parsing, length, coset decomposition, Newton and
//! Kottwitz points, and sigma-Coxeter elements.

use std::sync::Arc;

use adlv::affine_weyl::AffineWeyl;
use adlv::root_datum::{CartanType, RootDatum, Twist};

fn main() -> adlv::Result<()> {
    let aw = AffineWeyl::new(Arc::new(RootDatum::split(CartanType::A(2))));
    for text in ["t[1,1]*s1 s2", "s0 s1 s2 s1", "t[2,-1]"] {
        let w = aw.parse(text)?;
        let dec = aw.coset_decompose(&w)?;
        println!(
            "{text:>14} = {:<16} length {}, mu {:?}, eta {}, newton {}, kottwitz {}, fixed space {}",
            aw.format(&w),
            aw.length(&w),
            dec.mu,
            aw.format_finite(&aw.eta_sigma(&w)?),
            aw.dominant_newton_point(&w)?,
            aw.kottwitz_point(&w),
            aw.fixed_space_dim(&w),
        );
    }

    let twisted = AffineWeyl::new(Arc::new(RootDatum::with_twist(
        CartanType::A(3),
        Twist::Flip,
    )?));
    let cox: Vec<String> = twisted
        .sigma_coxeter_elements()
        .iter()
        .map(|c| twisted.format_finite(c))
        .collect();
    println!("sigma-Coxeter elements of A3 with the flip: {cox:?}");
    let w = twisted.parse("s1 s0")?;
    println!(
        "sigma-conjugating {} by s2 gives {}",
        twisted.format(&w),
        twisted.format(&twisted.sigma_conjugate(2, &w))
    );

    let elements = aw.elements_up_to_length(4, 1_000_000)?;
    let mut by_len = [0usize; 5];
    for w in &elements {
        by_len[aw.length(w)] += 1;
    }
    println!("elements of affine A2 by length 0..=4: {by_len:?}");
    Ok(())
}
