//! Sizes of the indecomposable Kottwitz sets for fundamental coweights of
//! type E, with the identity checked for each.

use std::sync::Arc;
use std::time::Instant;

use adlv::bset::{enumerate_indec, identity_sum};
use adlv::qlaurent::QLaurent;
use adlv::root_datum::{CartanType, RootDatum};

fn main() -> adlv::Result<()> {
    for n in [6, 7, 8] {
        let d = Arc::new(RootDatum::split(CartanType::E(n)));
        for i in 0..n {
            let mut mu = vec![0; n];
            mu[i] = 1;
            let start = Instant::now();
            let b = enumerate_indec(&d, &mu)?;
            let ok = identity_sum(&b) == QLaurent::one();
            println!(
                "E{n} omega_{}: {:>4} classes, identity {}, {:.2?}",
                i + 1,
                b.len(),
                if ok { "ok" } else { "FAILS" },
                start.elapsed()
            );
        }
    }
    Ok(())
}
