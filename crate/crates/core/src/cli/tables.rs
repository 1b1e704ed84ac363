//! Indecomposable counts for the non-minuscule fundamental coweights of type E.

use std::io::Write;
use std::sync::Arc;

use clap::ValueEnum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{write_out, Format, Options, EXIT_MISMATCH, EXIT_OK};
use crate::bset::{enumerate_indec, identity_sum};
use crate::error::{Error, Result};
use crate::qlaurent::QLaurent;
use crate::root_datum::{CartanType, RootDatum};

/// Reference counts, one row per (type, 1-based coweight index).
pub const GOLDEN_CSV: &str = include_str!("../../data/type_e_indec_counts.csv");

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum Series {
    #[value(name = "E6", alias = "e6")]
    E6,
    #[value(name = "E7", alias = "e7")]
    E7,
    #[value(name = "E8", alias = "e8")]
    E8,
    #[default]
    #[value(name = "all")]
    #[serde(rename = "all")]
    All,
}

impl Series {
    fn ranks(self) -> Vec<usize> {
        match self {
            Series::E6 => vec![6],
            Series::E7 => vec![7],
            Series::E8 => vec![8],
            Series::All => vec![6, 7, 8],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
    pub twist: String,
    pub coweight: String,
    pub count_indec: usize,
    pub identity_ok: bool,
}

impl TableRow {
    fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.ty, self.rank, self.twist, self.coweight, self.count_indec, self.identity_ok
        )
    }
}

/// Parsed reference rows as `(rank, coweight index, count)`.
pub fn golden_rows() -> Result<Vec<(usize, usize, usize)>> {
    let mut out = Vec::new();
    for (n, line) in GOLDEN_CSV.lines().enumerate().skip(1) {
        let bad = || Error::Parse {
            pos: n,
            msg: format!("bad reference row {line:?}"),
        };
        let f: Vec<&str> = line.split(',').collect();
        if f.len() != 3 {
            return Err(bad());
        }
        let rank = f[0]
            .strip_prefix('E')
            .and_then(|r| r.parse().ok())
            .ok_or_else(bad)?;
        let i = f[1].parse().map_err(|_| bad())?;
        let count = f[2].parse().map_err(|_| bad())?;
        out.push((rank, i, count));
    }
    Ok(out)
}

/// Fundamental coweights whose pairing with the highest root exceeds one, 1-based.
fn non_minuscule(d: &RootDatum) -> Vec<usize> {
    let theta = &d.positive_roots()[d.highest_root_index()];
    (0..d.rank())
        .filter(|&i| theta[i] > 1)
        .map(|i| i + 1)
        .collect()
}

pub fn table_rows(series: Series) -> Result<Vec<TableRow>> {
    let jobs: Vec<(Arc<RootDatum>, usize)> = series
        .ranks()
        .into_iter()
        .flat_map(|n| {
            let d = Arc::new(RootDatum::split(CartanType::E(n)));
            non_minuscule(&d).into_iter().map(move |i| (d.clone(), i))
        })
        .collect();
    jobs.par_iter()
        .map(|(d, i)| {
            let mut mu = vec![0; d.rank()];
            mu[i - 1] = 1;
            let b = enumerate_indec(d, &mu)?;
            Ok(TableRow {
                ty: "E".into(),
                rank: d.rank(),
                twist: "none".into(),
                coweight: format!("w{i}"),
                count_indec: b.len(),
                identity_ok: identity_sum(&b) == QLaurent::one(),
            })
        })
        .collect()
}

pub(super) fn run(
    series: Series,
    opts: &Options,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8> {
    let rows = table_rows(series)?;
    match opts.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut s = String::from("type,rank,twist,coweight,count_indec,identity_ok\n");
            for r in &rows {
                s.push_str(&r.csv());
                s.push('\n');
            }
            write_out(out, &s)?;
        }
        Format::Json => write_out(
            out,
            &format!("{}\n", serde_json::to_string_pretty(&rows).expect("json")),
        )?,
        Format::Dot => return Err(Error::Contract("tables are exported as csv or json".into())),
    }
    let ranks = series.ranks();
    let golden: Vec<_> = golden_rows()?
        .into_iter()
        .filter(|g| ranks.contains(&g.0))
        .collect();
    let mut diff = Vec::new();
    for &(rank, i, count) in &golden {
        let key = format!("w{i}");
        match rows.iter().find(|r| r.rank == rank && r.coweight == key) {
            Some(r) if r.count_indec == count && r.identity_ok => {}
            Some(r) => diff.push(format!(
                "- E{rank},{key},{count},true\n+ E{rank},{key},{},{}",
                r.count_indec, r.identity_ok
            )),
            None => diff.push(format!("- E{rank},{key},{count},true\n+ (missing)")),
        }
    }
    for r in &rows {
        if !golden
            .iter()
            .any(|g| g.0 == r.rank && format!("w{}", g.1) == r.coweight)
        {
            diff.push(format!(
                "- (missing)\n+ E{},{},{},{}",
                r.rank, r.coweight, r.count_indec, r.identity_ok
            ));
        }
    }
    if diff.is_empty() {
        return Ok(EXIT_OK);
    }
    let _ = writeln!(
        err,
        "tables differ from the reference values:\n{}",
        diff.join("\n")
    );
    Ok(EXIT_MISMATCH)
}
