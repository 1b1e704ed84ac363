//! The Kottwitz set B(G, mu): classes, invariants, the Hasse diagram and the
//! identity over indecomposable classes.

use std::sync::Arc;

use adlv::bset::{enumerate_bset, identity_sum, type_d_strata};
use adlv::root_datum::{CartanType, RootDatum};

fn main() -> adlv::Result<()> {
    let d = Arc::new(RootDatum::split(CartanType::C(3)));
    let mu = [0, 1, 1];
    let b = enumerate_bset(&d, &mu)?;
    println!(
        "B({d}, {mu:?}): {} classes, mu_diamond = {}",
        b.len(),
        b.mu_diamond()
    );
    for c in b.classes() {
        // the edge counts are defined on indecomposable classes only
        let ell = if b.is_indecomposable(&c.newton) {
            let (l1, l2, lb) = b.ell_invariants(&c.newton)?;
            format!("indec, ell = ({l1}, {l2}, {lb})")
        } else {
            String::new()
        };
        println!(
            "  nu = {:<22} I(nu) = {:<10} chai {} defect {} {ell}",
            c.newton.to_string(),
            b.level_set(&c.newton).to_string(),
            b.chai_length(&c.newton),
            b.defect(&c.newton),
        );
    }
    println!("Hasse edges: {:?}", b.hasse());
    let indec = b.indecomposable();
    println!(
        "{} indecomposable classes, identity sum = {}",
        indec.len(),
        identity_sum(&indec)
    );
    for (j, classes) in b.partition_by_irr() {
        println!("  irreducible on {j}: {} classes", classes.len());
    }

    let strata = type_d_strata(6, 3)?;
    println!(
        "D6, omega_3: strata of sizes {} + {} + {}, pairwise disjoint: {}",
        strata.first.len(),
        strata.second.len(),
        strata.third.len(),
        strata.pairwise_disjoint()
    );
    Ok(())
}
