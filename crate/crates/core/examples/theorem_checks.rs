//! Scans the structure theorems for reduction trees over small groups and
//! prints one summary line per group.

use std::time::Instant;

use adlv::reduction::scan::{coxeter_translation_scan, finite_coxeter_part_scan, group_of};
use adlv::reduction::{Strategy, DEFAULT_BUDGET};
use adlv::root_datum::{CartanType, RootDatum, Twist};

fn main() -> adlv::Result<()> {
    let max_len: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(12);
    let data = vec![
        RootDatum::split(CartanType::A(2)),
        RootDatum::split(CartanType::A(3)),
        RootDatum::with_twist(CartanType::A(3), Twist::Flip)?,
    ];
    for d in data {
        let name = d.to_string();
        let aw = group_of(d);
        let start = Instant::now();
        let reports = coxeter_translation_scan(&aw, 12, Strategy::FirstFound, DEFAULT_BUDGET)?;
        let bad = reports.iter().filter(|r| !r.ok).count();
        println!(
            "{name}: t^mu c, {} instances, {bad} failing, {:.2?}",
            reports.len(),
            start.elapsed()
        );
        for r in reports.iter().filter(|r| !r.ok).take(3) {
            println!("  {} {:?}", r.element, r.failures);
        }
    }
    let data = vec![
        RootDatum::split(CartanType::A(1)),
        RootDatum::split(CartanType::A(2)),
        RootDatum::split(CartanType::B(2)),
        RootDatum::split(CartanType::G2),
        RootDatum::split(CartanType::A(3)),
        RootDatum::split(CartanType::B(3)),
        RootDatum::split(CartanType::C(3)),
        RootDatum::with_twist(CartanType::A(2), Twist::Flip)?,
        RootDatum::with_twist(CartanType::A(3), Twist::Flip)?,
    ];
    for d in data {
        let name = d.to_string();
        let aw = group_of(d);
        let start = Instant::now();
        let reports = finite_coxeter_part_scan(&aw, max_len, Strategy::FirstFound, DEFAULT_BUDGET)?;
        let bad = reports.iter().filter(|r| !r.ok).count();
        println!(
            "{name}: finite Coxeter part, length <= {max_len}, {} elements, {bad} failing, {:.2?}",
            reports.len(),
            start.elapsed()
        );
        for r in reports.iter().filter(|r| !r.ok).take(3) {
            println!("  {} {:?}", r.element, r.failures);
        }
    }
    Ok(())
}
