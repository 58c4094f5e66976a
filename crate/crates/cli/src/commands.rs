use std::fs;
use std::path::Path;

use increg::{
    construct_anticycle, derived_chain, expand, induced_matching_number_capped, is_quasi_saturated,
    limit_regularity, msupp, normalize_spec, q_invariant, reduce_index, regularity_auto,
    sweep_verify, Certificate, ChainSpec, RawSpec,
};
use serde_json::json;

use crate::args::{Cli, Format, Range, Verb};
use crate::error::CliError;
use crate::suite;
use crate::table::{join, key_values, Table};

/// Flags shared by every verb.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub format: Format,
    pub field: u32,
    pub oracle_cap: usize,
    pub seed: u64,
}

impl Options {
    pub fn text() -> Self {
        Options {
            format: Format::Text,
            field: 2,
            oracle_cap: increg::DEFAULT_ORACLE_CAP,
            seed: 0,
        }
    }

    pub fn json() -> Self {
        Options {
            format: Format::Json,
            ..Options::text()
        }
    }
}

pub fn load_spec(path: &Path) -> Result<ChainSpec, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_spec(&text)
}

pub fn parse_spec(text: &str) -> Result<ChainSpec, CliError> {
    let raw: RawSpec = serde_json::from_str(text)?;
    normalize_spec(raw.r, &raw.edges).map_err(CliError::InvalidSpec)
}

fn indices(range: &Range) -> Result<Vec<usize>, CliError> {
    match (range.n, range.from, range.to) {
        (Some(n), _, _) => Ok(vec![n]),
        (None, Some(lo), Some(hi)) if lo <= hi => Ok((lo..=hi).collect()),
        (None, Some(lo), Some(hi)) => Err(CliError::InvalidInput(format!(
            "empty range --from {lo} --to {hi}"
        ))),
        _ => Err(CliError::InvalidInput(
            "this verb needs --n or --from/--to".into(),
        )),
    }
}

/// One JSON document per line.
fn pretty(value: &serde_json::Value) -> String {
    let mut s = value.to_string();
    s.push('\n');
    s
}

/// Runs one command and returns what it prints on success.
pub fn run(cli: &Cli) -> Result<String, CliError> {
    let opts = Options {
        format: cli.format,
        field: cli.field,
        oracle_cap: cli.oracle_cap,
        seed: cli.seed,
    };
    match &cli.verb {
        Verb::Expand { spec, n } => expand_cmd(&load_spec(spec)?, *n, opts),
        Verb::Classify { spec } => classify_cmd(&load_spec(spec)?, opts),
        Verb::Indmatch { spec, range } => indmatch_cmd(&load_spec(spec)?, &indices(range)?, opts),
        Verb::Reg { spec, range } => reg_cmd(&load_spec(spec)?, &indices(range)?, opts),
        Verb::Anticycle { spec, n } => anticycle_cmd(&load_spec(spec)?, *n, opts),
        Verb::Quasisat { spec } => quasisat_cmd(&load_spec(spec)?, opts),
        Verb::Sweep { spec, from, to } => sweep_cmd(&load_spec(spec)?, *from, *to, opts),
        Verb::Verify { suite } => suite::run_suite(*suite, opts),
    }
}

pub fn expand_cmd(spec: &ChainSpec, n: usize, opts: Options) -> Result<String, CliError> {
    let g = expand(spec, n)?;
    Ok(match opts.format {
        Format::Json => pretty(&json!(g)),
        Format::Text => {
            let mut out = format!("# G_{n}: {} vertices, {} edges\n", g.n(), g.edge_count());
            for (u, v) in g.edges() {
                out.push_str(&format!("{u} {v}\n"));
            }
            out
        }
    })
}

pub fn classify_cmd(spec: &ChainSpec, opts: Options) -> Result<String, CliError> {
    let v = limit_regularity(spec);
    let reduced = reduce_index(spec);
    Ok(match opts.format {
        Format::Json => {
            let mut value = json!(v);
            value["reduced_spec"] = json!(reduced.to_raw());
            pretty(&value)
        }
        Format::Text => key_values(&[
            ("limit_reg", v.limit_reg.to_string()),
            ("case", v.case.as_str().to_string()),
            ("n0", v.n0.to_string()),
            ("N", v.big_n.to_string()),
            ("coarse", v.coarse.to_string()),
            ("limit_indmatch", v.limit_indmatch.to_string()),
            ("presented_r", v.presented_r.to_string()),
            ("reduced_r", v.reduced_r.to_string()),
        ]),
    })
}

pub fn indmatch_cmd(spec: &ChainSpec, ns: &[usize], opts: Options) -> Result<String, CliError> {
    let rows = ns
        .iter()
        .map(|&n| {
            let g = expand(spec, n)?;
            Ok((n, induced_matching_number_capped(&g, usize::MAX)))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(match opts.format {
        Format::Json => pretty(&json!(rows
            .iter()
            .map(|(n, m)| json!({"n": n, "indmatch": m.len(), "witness": m}))
            .collect::<Vec<_>>())),
        Format::Text => {
            let mut t = Table::new(["n", "indmatch", "witness"]);
            for (n, m) in &rows {
                let w: Vec<String> = m.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect();
                t.row([n.to_string(), m.len().to_string(), w.join(" ")]);
            }
            t.render()
        }
    })
}

fn certificate_text(c: &Option<Certificate>) -> String {
    match c {
        None => "-".into(),
        Some(Certificate::Subset {
            vertices,
            dimension,
        }) => format!("W={{{}}} d={dimension}", join(vertices)),
        Some(Certificate::EliminationOrder { order }) => {
            format!("complement elimination order {}", join(order))
        }
        Some(Certificate::InducedMatching { edges }) => {
            let w: Vec<String> = edges.iter().map(|(a, b)| format!("{{{a},{b}}}")).collect();
            format!("induced matching {}", w.join(" "))
        }
    }
}

pub fn reg_cmd(spec: &ChainSpec, ns: &[usize], opts: Options) -> Result<String, CliError> {
    let rows = ns
        .iter()
        .map(|&n| {
            let g = expand(spec, n)?;
            Ok((n, regularity_auto(&g, opts.field, opts.oracle_cap)?))
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok(match opts.format {
        Format::Json => pretty(&json!(rows
            .iter()
            .map(|(n, rep)| json!({"n": n, "report": rep}))
            .collect::<Vec<_>>())),
        Format::Text => {
            let mut t = Table::new(["n", "reg", "method", "exact", "certificate"]);
            for (n, rep) in &rows {
                let value = match rep.value {
                    Some(v) if rep.exact => v.to_string(),
                    Some(v) => format!(">={v}"),
                    None => "-".into(),
                };
                let method = serde_json::to_value(rep.method).unwrap();
                t.row([
                    n.to_string(),
                    value,
                    method.as_str().unwrap_or_default().to_string(),
                    rep.exact.to_string(),
                    certificate_text(&rep.certificate),
                ]);
            }
            t.render()
        }
    })
}

pub fn anticycle_cmd(spec: &ChainSpec, n: usize, opts: Options) -> Result<String, CliError> {
    let (w, trace) = construct_anticycle(spec, n)?;
    Ok(match opts.format {
        Format::Json => pretty(&json!(trace)),
        Format::Text => {
            let sets = |s: &[Vec<usize>]| {
                s.iter()
                    .map(|x| format!("{{{}}}", join(x)))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            let case = serde_json::to_value(trace.case).unwrap();
            key_values(&[
                ("case", case.as_str().unwrap_or_default().to_string()),
                ("graph", format!("G_{}", trace.graph)),
                ("m", w.len().to_string()),
                ("vertices", join(&w.vertices)),
                ("J", sets(&trace.j_sets)),
                ("u", join(&trace.u)),
                ("beta", trace.beta.to_string()),
                ("K", sets(&trace.k_sets)),
                ("v", join(&trace.v)),
                ("gamma", trace.gamma.to_string()),
                ("epsilon", trace.epsilon.to_string()),
                ("d", trace.d.to_string()),
            ])
        }
    })
}

pub fn quasisat_cmd(spec: &ChainSpec, opts: Options) -> Result<String, CliError> {
    let quasi = is_quasi_saturated(spec);
    let q = q_invariant(spec);
    let m = msupp(spec, spec.r())?;
    let derived = derived_chain(spec);
    Ok(match opts.format {
        Format::Json => pretty(&json!({
            "quasi_saturated": quasi,
            "q": q,
            "msupp": m,
            "derived": derived.to_raw(),
        })),
        Format::Text => {
            let edges: Vec<String> = derived
                .edges()
                .iter()
                .map(|(a, b)| format!("({a},{b})"))
                .collect();
            key_values(&[
                ("quasi_saturated", quasi.to_string()),
                ("q", q.to_string()),
                ("msupp", m.to_string()),
                ("derived_r", derived.r().to_string()),
                ("derived_edges", edges.join(" ")),
            ])
        }
    })
}

pub fn sweep_cmd(
    spec: &ChainSpec,
    lo: usize,
    hi: usize,
    opts: Options,
) -> Result<String, CliError> {
    let rep = sweep_verify(spec, lo, hi, opts.field, opts.oracle_cap)?;
    Ok(match opts.format {
        Format::Json => pretty(&json!(rep)),
        Format::Text => {
            let v = &rep.verdict;
            let mut out = format!(
                "# verdict {} ({}) from n0 = {}, field GF({})\n",
                v.limit_reg,
                v.case.as_str(),
                v.n0,
                rep.field
            );
            let mut t = Table::new(["n", "edges", "cochordal", "reg", "flag"]);
            for row in &rep.rows {
                t.row([
                    row.n.to_string(),
                    row.edges.to_string(),
                    row.cochordal.to_string(),
                    row.reg.map_or("-".into(), |r| r.to_string()),
                    if row.flagged { "!" } else { "" }.to_string(),
                ]);
            }
            out.push_str(&t.render());
            out
        }
    })
}
