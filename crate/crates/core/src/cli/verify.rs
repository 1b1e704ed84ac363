//! Verification targets. Each instance is checked independently; failures and
//! per-instance errors are reported without stopping the batch.

use std::io::Write;

use clap::Subcommand;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{
    exit_code, parse_coweight, write_out, DatumArgs, Format, Options, EXIT_MISMATCH, EXIT_OK,
};
use crate::affine_weyl::{AffineElement, AffineWeyl};
use crate::bset::{verify_a_identity, verify_graph_identity, verify_identity, Graph};
use crate::error::{Error, Result};
use crate::reduction::scan::{coxeter_translation_instances, finite_coxeter_part_elements};
use crate::reduction::{verify_coxeter_translation, verify_finite_coxeter_part, Reducer};

#[derive(Subcommand, Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "target", rename_all = "kebab-case")]
pub enum Target {
    /// The Kottwitz-set identity for one coweight, or for every fundamental one.
    Identity {
        #[command(flatten)]
        #[serde(flatten)]
        datum: DatumArgs,
        #[arg(long)]
        #[serde(default, skip_serializing_if = "Option::is_none")]
        coweight: Option<String>,
    },
    /// The class polynomial identity for every element up to a length.
    #[command(name = "prop-id", alias = "class-identity")]
    #[serde(rename = "prop-id")]
    ClassIdentity {
        #[command(flatten)]
        #[serde(flatten)]
        datum: DatumArgs,
        #[arg(long, default_value_t = 8)]
        maxlen: usize,
    },
    /// Reduction paths of t^mu c for sigma-Coxeter c and <mu, 2 rho> up to a bound.
    #[command(name = "thm-main", alias = "coxeter-translation")]
    #[serde(rename = "thm-main")]
    CoxeterTranslation {
        #[command(flatten)]
        #[serde(flatten)]
        datum: DatumArgs,
        #[arg(long, default_value_t = 12)]
        bound: i64,
    },
    /// Reduction paths of elements with partial sigma-Coxeter finite part.
    #[command(name = "thm-7-1", alias = "finite-coxeter-part")]
    #[serde(rename = "thm-7-1")]
    FiniteCoxeterPart {
        #[command(flatten)]
        #[serde(flatten)]
        datum: DatumArgs,
        #[arg(long, default_value_t = 12)]
        maxlen: usize,
    },
    /// The graph identity on random graphs.
    GraphLemma {
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long, default_value_t = 8)]
        max_vertices: usize,
        #[arg(long, default_value_t = 0.4)]
        edge_probability: f64,
    },
    /// The closed-form type A identity for every 0 < i < n.
    AType {
        #[arg(long)]
        n: i64,
    },
}

impl Target {
    pub fn name(&self) -> &'static str {
        match self {
            Target::Identity { .. } => "identity",
            Target::ClassIdentity { .. } => "prop-id",
            Target::CoxeterTranslation { .. } => "thm-main",
            Target::FiniteCoxeterPart { .. } => "thm-7-1",
            Target::GraphLemma { .. } => "graph-lemma",
            Target::AType { .. } => "a-type",
        }
    }
}

struct Outcome {
    instance: String,
    result: Result<(bool, Value)>,
}

fn outcome(instance: String, result: Result<(bool, Value)>) -> Outcome {
    Outcome { instance, result }
}

fn value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

/// Checks every element in parallel, one reducer per worker.
fn over_elements<F>(
    aw: &AffineWeyl,
    elements: &[AffineElement],
    opts: &Options,
    check: F,
) -> Vec<Outcome>
where
    F: Fn(&Reducer<'_>, &AffineElement) -> Result<(bool, Value)> + Sync,
{
    elements
        .par_iter()
        .map_init(
            || Reducer::new(aw, opts.reduction_strategy(), opts.budget),
            |r, w| outcome(aw.format(w), check(r, w)),
        )
        .collect()
}

fn instances(target: &Target, opts: &Options) -> Result<Vec<Outcome>> {
    Ok(match target {
        Target::Identity { datum, coweight } => {
            let d = datum.build()?;
            let mus = match coweight {
                Some(c) => vec![parse_coweight(c, d.rank())?],
                None => (1..=d.rank())
                    .map(|i| parse_coweight(&format!("w{i}"), d.rank()))
                    .collect::<Result<_>>()?,
            };
            mus.par_iter()
                .map(|mu| {
                    let r = verify_identity(&d, mu).map(|rep| (rep.ok, value(&rep)));
                    outcome(format!("{d} mu={mu:?}"), r)
                })
                .collect()
        }
        Target::ClassIdentity { datum, maxlen } => {
            let aw = AffineWeyl::new(datum.build()?);
            let elements = aw.elements_up_to_length(*maxlen, opts.budget)?;
            over_elements(&aw, &elements, opts, |r, w| {
                let ok = r.verify_class_identity(w)?;
                let paths: u64 = r.paths(w)?.iter().map(|p| p.count).sum();
                Ok((ok, json!({"length": r.group().length(w), "paths": paths})))
            })
        }
        Target::CoxeterTranslation { datum, bound } => {
            let aw = AffineWeyl::new(datum.build()?);
            let elements: Vec<AffineElement> = coxeter_translation_instances(&aw, *bound)
                .into_iter()
                .map(|(_, w)| w)
                .collect();
            over_elements(&aw, &elements, opts, |r, w| {
                let rep = verify_coxeter_translation(r, &w.trans, &w.fin)?;
                Ok((rep.ok, value(&rep)))
            })
        }
        Target::FiniteCoxeterPart { datum, maxlen } => {
            let aw = AffineWeyl::new(datum.build()?);
            let elements = finite_coxeter_part_elements(&aw, *maxlen, opts.budget)?;
            over_elements(&aw, &elements, opts, |r, w| {
                let rep = verify_finite_coxeter_part(r, w)?;
                Ok((rep.ok, value(&rep)))
            })
        }
        Target::GraphLemma {
            count,
            max_vertices,
            edge_probability,
        } => {
            if *max_vertices > 20 {
                return Err(Error::Contract(
                    "graph fuzzing is limited to 20 vertices".into(),
                ));
            }
            if !(0.0..=1.0).contains(edge_probability) {
                return Err(Error::Contract(
                    "edge probability must lie in [0, 1]".into(),
                ));
            }
            (0..*count)
                .into_par_iter()
                .map(|k| {
                    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
                    rng.set_stream(k as u64);
                    let n = rng.gen_range(0..=*max_vertices);
                    let g = Graph::random(n, *edge_probability, &mut rng);
                    let y: u32 = rng.gen_range(0..(1u32 << n));
                    let r = verify_graph_identity(&g, y).map(|ok| {
                        let ys: Vec<usize> = (0..n).filter(|i| y >> i & 1 == 1).collect();
                        (ok, json!({"vertices": n, "edges": g.edges(), "y": ys}))
                    });
                    outcome(format!("graph {k}"), r)
                })
                .collect()
        }
        Target::AType { n } => {
            if *n < 2 {
                return Err(Error::Contract("the type A identity needs n >= 2".into()));
            }
            (1..*n)
                .into_par_iter()
                .map(|i| {
                    let r = verify_a_identity(*n, i).map(|rep| (rep.holds(), value(&rep)));
                    outcome(format!("n={n} i={i}"), r)
                })
                .collect()
        }
    })
}

pub(super) fn run(target: &Target, opts: &Options, out: &mut dyn Write) -> Result<u8> {
    let format = opts.format.unwrap_or(Format::Json);
    if format == Format::Dot {
        return Err(Error::Contract(
            "verification reports are json or csv".into(),
        ));
    }
    let results = instances(target, opts)?;
    let (mut passed, mut failed, mut errors, mut code) = (0usize, 0usize, 0usize, EXIT_OK);
    let mut text = String::new();
    if format == Format::Csv {
        text.push_str("instance,status,detail\n");
    }
    for o in &results {
        let (status, line) = match &o.result {
            Ok((ok, report)) => {
                if *ok {
                    passed += 1;
                } else {
                    failed += 1;
                    code = code.max(EXIT_MISMATCH);
                }
                let status = if *ok { "pass" } else { "fail" };
                (
                    status,
                    json!({"instance": o.instance, "ok": ok, "report": report}),
                )
            }
            Err(e) => {
                errors += 1;
                code = code.max(exit_code(e));
                (
                    "error",
                    json!({"instance": o.instance, "ok": false, "error": e.to_string()}),
                )
            }
        };
        match format {
            Format::Csv => {
                let detail = o
                    .result
                    .as_ref()
                    .err()
                    .map(|e| e.to_string())
                    .unwrap_or_default();
                text.push_str(&format!(
                    "\"{}\",{status},\"{}\"\n",
                    o.instance,
                    detail.replace('"', "'")
                ));
            }
            _ => {
                text.push_str(&line.to_string());
                text.push('\n');
            }
        }
    }
    let summary = json!({"target": target.name(), "instances": results.len(), "passed": passed, "failed": failed, "errors": errors});
    match format {
        Format::Csv => text.push_str(&format!(
            "summary,{passed}/{},\"failed {failed}, errors {errors}\"\n",
            results.len()
        )),
        _ => text.push_str(&format!("{}\n", json!({ "summary": summary }))),
    }
    write_out(out, &text)?;
    Ok(code)
}
