//! Bundled golden and property checks behind `increg verify`.

use std::collections::BTreeSet;

use increg::{
    build_j_sets, build_k_sets, chain_indices, construct_anticycle, derived_chain, expand,
    final_vertices, generate_random_spec, induced_matching_number, initial_vertices, is_cochordal,
    is_quasi_saturated, limit_indmatch, limit_regularity, normalize_spec, q_invariant, regularity,
    regularity_bounds, sweep_verify, triangle_contains, verify_anticycle, AnticycleWitness, Case,
    ChainSpec, Edge, LimitCase, Triangle,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use crate::args::{Format, Suite};
use crate::commands::{anticycle_cmd, classify_cmd, expand_cmd, Options};
use crate::error::CliError;
use crate::table::Table;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check<F>(name: &str, body: F) -> Check
where
    F: FnOnce() -> Result<String, String>,
{
    let (passed, detail) = match body() {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Check {
        name: name.to_string(),
        passed,
        detail,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn text<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn spec(r: usize, edges: &[Edge]) -> ChainSpec {
    ChainSpec::new(r, edges.iter().copied()).expect("bundled specs are valid")
}

/// `(x2 x7, x3 x4)` with `r = 7`.
pub fn two_edge_chain() -> ChainSpec {
    spec(7, &[(2, 7), (3, 4)])
}

/// `(x1 x3, x2 x4)` with `r = 4`: limit regularity 3 with no induced `2K2`.
pub fn gap_two_chain() -> ChainSpec {
    spec(4, &[(1, 3), (2, 4)])
}

/// Six generators in `r = 9` used to trace the anticycle construction.
pub fn six_edge_chain() -> ChainSpec {
    spec(9, &[(1, 5), (1, 8), (2, 9), (3, 6), (4, 7), (5, 9)])
}

/// `r = 10` chain whose regularity drops to 2 at `n = 19`.
pub fn table_chain() -> ChainSpec {
    spec(10, &[(1, 10), (2, 4), (3, 5), (7, 9)])
}

/// `(x1 x9, x6 x8)`: limit 2 from `3r`, but `G_17` has an induced `2K2`.
pub fn near_sharp_chain() -> ChainSpec {
    spec(9, &[(1, 9), (6, 8)])
}

pub const TABLE_REGS: [usize; 10] = [5, 4, 3, 4, 4, 3, 3, 3, 3, 2];

pub fn six_edge_witness() -> Vec<usize> {
    vec![1, 4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 27]
}

fn is_induced_2k2(g: &increg::SimpleGraph, a: Edge, b: Edge) -> bool {
    g.has_edge(a.0, a.1)
        && g.has_edge(b.0, b.1)
        && [a.0, a.1]
            .iter()
            .all(|&x| [b.0, b.1].iter().all(|&y| x != y && !g.has_edge(x, y)))
}

pub fn golden() -> Vec<Check> {
    let mut out = Vec::new();

    out.push(check("normalize-sorts-and-orients", || {
        let s = normalize_spec(7, &[[3, 4], [7, 2]]).map_err(text)?;
        ensure(s.edges() == [(2, 7), (3, 4)], || format!("{:?}", s.edges()))?;
        Ok("edges (2,7),(3,4)".into())
    }));

    out.push(check("triangle-membership", || {
        ensure(triangle_contains(&Triangle::new((2, 7), 2), (3, 8)), || {
            "(3,8) missing from the size-2 triangle at (2,7)".into()
        })?;
        Ok("(3,8) in triangle((2,7),2)".into())
    }));

    out.push(check("expand-two-edge-chain-n9", || {
        let g = expand(&two_edge_chain(), 9).map_err(text)?;
        let want: Vec<Edge> = vec![
            (2, 7),
            (2, 8),
            (2, 9),
            (3, 4),
            (3, 5),
            (3, 6),
            (3, 8),
            (3, 9),
            (4, 5),
            (4, 6),
            (4, 9),
            (5, 6),
        ];
        ensure(g.edges() == want, || format!("{:?}", g.edges()))?;
        Ok("12 generators".into())
    }));

    out.push(check("expand-gap-two-chain-n6", || {
        let g = expand(&gap_two_chain(), 6).map_err(text)?;
        let want: Vec<Edge> = (1..=6)
            .flat_map(|i| (i + 2..=6).map(move |j| (i, j)))
            .filter(|&e| e != (1, 6))
            .collect();
        ensure(g.edges() == want, || format!("{:?}", g.edges()))?;
        Ok(format!("{} edges", want.len()))
    }));

    out.push(check("q-invariant-two-squares", || {
        let q = q_invariant(&spec(5, &[(1, 3), (2, 4)]));
        ensure(q == 13, || format!("q = {q}"))?;
        Ok("q = 13".into())
    }));

    out.push(check("chain-indices-six-edge-chain", || {
        let idx = chain_indices(&six_edge_chain());
        let got = (
            idx.last_of_first_row,
            idx.tightest.clone(),
            idx.first_tightest,
            idx.last_tightest,
            idx.first_highest,
            idx.last_highest,
        );
        ensure(got == (2, vec![4, 5], 4, 5, 3, 6), || format!("{got:?}"))?;
        Ok("q=2 J1={4,5} h=4 H=5 b=3 B=6".into())
    }));

    out.push(check("induced-clique-in-g9", || {
        let g = expand(&two_edge_chain(), 9).map_err(text)?;
        let h = g.induced_subgraph(&[3, 4, 5, 6]).map_err(text)?;
        ensure(h.graph == increg::SimpleGraph::complete(4), || {
            format!("{:?}", h.original_edges())
        })?;
        Ok("G_9[{3,4,5,6}] = K4".into())
    }));

    out.push(check("single-edge-chain-cochordal", || {
        let s = spec(2, &[(1, 2)]);
        for n in 2..=8 {
            let g = expand(&s, n).map_err(text)?;
            ensure(is_cochordal(&g), || format!("n = {n}"))?;
        }
        Ok("n = 2..8".into())
    }));

    out.push(check("gap-two-not-cochordal-n6", || {
        let g = expand(&gap_two_chain(), 6).map_err(text)?;
        ensure(!is_cochordal(&g), || "cochordal".into())?;
        Ok("not cochordal".into())
    }));

    out.push(check("gap-two-indmatch-n9", || {
        let g = expand(&gap_two_chain(), 9).map_err(text)?;
        let m = induced_matching_number(&g);
        ensure(m == 1, || format!("indmatch = {m}"))?;
        Ok("indmatch = 1".into())
    }));

    out.push(check("near-sharp-2k2-n17", || {
        let g = expand(&near_sharp_chain(), 17).map_err(text)?;
        let m = induced_matching_number(&g);
        ensure(m == 2, || format!("indmatch = {m}"))?;
        ensure(is_induced_2k2(&g, (10, 12), (5, 17)), || {
            "{10,12},{5,17} is not an induced 2K2".into()
        })?;
        Ok("indmatch = 2 via {10,12},{5,17}".into())
    }));

    out.push(check("gap-two-complement-cycle-n7", || {
        let g = expand(&gap_two_chain(), 7).map_err(text)?;
        let cycle = AnticycleWitness::new((1..=7).collect());
        ensure(verify_anticycle(&g, &cycle).map_err(text)?, || {
            "1..7 is not an induced cycle of the complement".into()
        })?;
        let found = increg::enumerate_induced_cycles(&g.complement(), 7, 7);
        let all: BTreeSet<usize> = (1..=7).collect();
        ensure(
            found
                .cycles
                .iter()
                .any(|c| c.iter().copied().collect::<BTreeSet<_>>() == all),
            || "enumeration missed 1..7".into(),
        )?;
        Ok("induced C7 on 1..7".into())
    }));

    out.push(check("six-edge-witness-g27", || {
        let g = expand(&six_edge_chain(), 27).map_err(text)?;
        let w = AnticycleWitness::new(six_edge_witness());
        ensure(verify_anticycle(&g, &w).map_err(text)?, || {
            "rejected".into()
        })?;
        Ok("C13 complement verified".into())
    }));

    out.push(check("gap-two-oracle-n6", || {
        let g = expand(&gap_two_chain(), 6).map_err(text)?;
        let reg = regularity(&g, 2).map_err(text)?.value;
        ensure(reg == Some(3), || format!("reg = {reg:?}"))?;
        Ok("reg = 3".into())
    }));

    out.push(check("gap-two-bounds-n9", || {
        let g = expand(&gap_two_chain(), 9).map_err(text)?;
        let b = regularity_bounds(&g).map_err(text)?;
        ensure(b == (2, false), || format!("{b:?}"))?;
        Ok("lower bound 2, not cochordal".into())
    }));

    out.push(check("j-sets-six-edge-chain", || {
        let t = build_j_sets(&six_edge_chain()).map_err(text)?;
        ensure(t.sets == vec![vec![4, 5], vec![1]], || {
            format!("{:?}", t.sets)
        })?;
        ensure(t.pivots == vec![4, 1] && t.beta() == 2, || {
            format!("{:?}", t.pivots)
        })?;
        Ok("J1={4,5} u1=4 J2={1} u2=1 beta=2".into())
    }));

    out.push(check("k-sets-six-edge-chain", || {
        let t = build_k_sets(&six_edge_chain()).map_err(text)?;
        ensure(t.sets == vec![vec![4, 5], vec![6]], || {
            format!("{:?}", t.sets)
        })?;
        ensure(t.pivots == vec![5, 6] && t.gamma() == 2, || {
            format!("{:?}", t.pivots)
        })?;
        Ok("K1={4,5} v1=5 K2={6} v2=6 gamma=2".into())
    }));

    out.push(check("initial-vertices-n18", || {
        let a = initial_vertices(&six_edge_chain(), 18).map_err(text)?;
        ensure(a == [1, 4], || format!("{a:?}"))?;
        Ok("a1=1 a2=4".into())
    }));

    out.push(check("final-vertices-n18-n19-n20", || {
        let s = six_edge_chain();
        let evens: Vec<usize> = (4..=24).step_by(2).collect();
        let cases = [
            (18, [evens.clone(), vec![27]].concat()),
            (19, [evens.clone(), vec![27, 28]].concat()),
            (20, [(4..=26).step_by(2).collect(), vec![29]].concat()),
        ];
        for (n, want) in cases {
            let got = final_vertices(&s, n, 4).map_err(text)?;
            ensure(got == want, || format!("n = {n}: {got:?}"))?;
        }
        Ok("tails end at 27, 28, 29".into())
    }));

    out.push(check("anticycles-g27-g28-g29", || {
        let s = six_edge_chain();
        let (w, trace) = construct_anticycle(&s, 18).map_err(text)?;
        ensure(w.vertices == six_edge_witness(), || {
            format!("{:?}", w.vertices)
        })?;
        ensure(trace.case == Case::I && trace.graph == 27, || {
            format!("{:?} in G_{}", trace.case, trace.graph)
        })?;
        for (n, m) in [(19, 14), (20, 14)] {
            let (w, trace) = construct_anticycle(&s, n).map_err(text)?;
            let g = expand(&s, trace.graph).map_err(text)?;
            ensure(
                w.len() == m && verify_anticycle(&g, &w).map_err(text)?,
                || format!("n = {n}: {:?}", w.vertices),
            )?;
        }
        Ok("lengths 13, 14, 14".into())
    }));

    out.push(check("classifier-verdicts", || {
        let v = limit_regularity(&table_chain());
        ensure(
            (v.limit_reg, v.case, v.n0) == (2, LimitCase::JqIsMax, 30),
            || format!("table chain {v:?}"),
        )?;
        let v = limit_regularity(&gap_two_chain());
        ensure(v.limit_reg == 3, || format!("gap-two chain {v:?}"))?;
        let v = limit_regularity(&six_edge_chain());
        ensure(v.limit_reg == 3, || format!("six-edge chain {v:?}"))?;
        Ok("2 (n0 = 30), 3, 3".into())
    }));

    out.push(check("gap-two-limit-indmatch", || {
        let m = limit_indmatch(&gap_two_chain());
        ensure(m == 1, || format!("{m}"))?;
        Ok("1".into())
    }));

    out.push(check("regularity-table-n10-n19", || {
        let rep = sweep_verify(&table_chain(), 10, 19, 2, 22).map_err(text)?;
        let regs: Vec<Option<usize>> = rep.rows.iter().map(|r| r.reg).collect();
        let want: Vec<Option<usize>> = TABLE_REGS.iter().map(|&r| Some(r)).collect();
        ensure(regs == want, || format!("{regs:?}"))?;
        Ok("5 4 3 4 4 3 3 3 3 2".into())
    }));

    out.push(check("near-sharp-sweep-n17", || {
        let rep = sweep_verify(&near_sharp_chain(), 17, 17, 2, 22).map_err(text)?;
        let reg = rep.rows[0].reg;
        ensure(reg.is_some_and(|r| r >= 3), || format!("reg = {reg:?}"))?;
        Ok(format!("reg = {}", reg.unwrap()))
    }));

    out.push(check("cli-expand-n9", || {
        let out = expand_cmd(&two_edge_chain(), 9, Options::text()).map_err(text)?;
        let lines: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
        let want = [
            "2 7", "2 8", "2 9", "3 4", "3 5", "3 6", "3 8", "3 9", "4 5", "4 6", "4 9", "5 6",
        ];
        ensure(lines == want, || format!("{lines:?}"))?;
        Ok("12 sorted lines".into())
    }));

    out.push(check("cli-classify-json", || {
        let out = classify_cmd(&table_chain(), Options::json()).map_err(text)?;
        let v: serde_json::Value = serde_json::from_str(&out).map_err(text)?;
        for key in [
            "limit_reg",
            "case",
            "n0",
            "N",
            "coarse",
            "limit_indmatch",
            "reduced_r",
        ] {
            ensure(v.get(key).is_some(), || format!("missing {key}"))?;
        }
        let head = json!([v["limit_reg"], v["case"], v["n0"]]);
        ensure(head == json!([2, "jq-is-max", 30]), || head.to_string())?;
        Ok(head.to_string())
    }));

    out.push(check("cli-anticycle-json-n18", || {
        let out = anticycle_cmd(&six_edge_chain(), 18, Options::json()).map_err(text)?;
        let v: serde_json::Value = serde_json::from_str(&out).map_err(text)?;
        for key in ["case", "J", "K", "u", "v", "beta", "gamma", "vertices"] {
            ensure(v.get(key).is_some(), || format!("missing {key}"))?;
        }
        ensure(v["vertices"] == json!(six_edge_witness()), || {
            v["vertices"].to_string()
        })?;
        Ok(v["vertices"].to_string())
    }));

    out
}

/// `count` specs with `2 <= r <= r_max`, reproducible from `seed`.
pub fn seeded_specs(count: usize, r_max: usize, seed: u64) -> Vec<ChainSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let r = rng.gen_range(2..=r_max);
            generate_random_spec(r, rng.gen_range(0.1..=0.9), rng.gen())
        })
        .collect()
}

fn violations(name: &str, checked: usize, bad: Vec<String>) -> Check {
    check(name, || {
        if bad.is_empty() {
            Ok(format!("{checked} checked, 0 violations"))
        } else {
            Err(format!(
                "{checked} checked, {} violations; first: {}",
                bad.len(),
                bad[0]
            ))
        }
    })
}

/// `indmatch(G_n)` lies in `{1, 2}` and is constant for `3r <= n <= 3r + 3`.
pub fn indmatch_constancy(count: usize, r_max: usize, seed: u64) -> Check {
    let mut bad = Vec::new();
    for s in seeded_specs(count, r_max, seed) {
        let r = s.r();
        let values: Vec<usize> = (3 * r..=3 * r + 3)
            .map(|n| induced_matching_number(&expand(&s, n).expect("n >= r")))
            .collect();
        if values.iter().any(|&m| m != 1 && m != 2) || values.windows(2).any(|w| w[0] != w[1]) {
            bad.push(format!("{:?}: {values:?}", s.to_raw()));
        }
    }
    violations("indmatch-settles-from-3r", count, bad)
}

/// The oracle never exceeds 3 at `n = 4r` and `n = 4r + 1`.
pub fn regularity_at_most_three(count: usize, r_max: usize, seed: u64, field: u32) -> Check {
    let mut bad = Vec::new();
    for s in seeded_specs(count, r_max, seed) {
        let r = s.r();
        for n in [4 * r, 4 * r + 1] {
            let g = expand(&s, n).expect("n >= r");
            match regularity(&g, field) {
                Ok(rep) if rep.value.is_some_and(|v| v <= 3) => {}
                other => bad.push(format!("{:?} n={n}: {other:?}", s.to_raw())),
            }
        }
    }
    violations("regularity-at-most-three-from-4r", count, bad)
}

/// Past `max(n0, 4r)`, `G_n` is cochordal exactly when the verdict is 2.
pub fn classifier_consistency(count: usize, r_max: usize, seed: u64) -> Check {
    let mut bad = Vec::new();
    for s in seeded_specs(count, r_max, seed) {
        let v = limit_regularity(&s);
        let start = v.n0.max(4 * s.r());
        for n in start..=start + 2 {
            let co = is_cochordal(&expand(&s, n).expect("n >= r"));
            if co != (v.limit_reg == 2) {
                bad.push(format!("{:?} n={n}: verdict {}", s.to_raw(), v.limit_reg));
            }
        }
    }
    violations("classifier-matches-cochordality", count, bad)
}

/// Edges of `G_n` by brute force: images of the generators under every
/// strictly increasing map `[r] -> [n]`.
pub fn orbit_edges(s: &ChainSpec, n: usize) -> BTreeSet<Edge> {
    fn walk(s: &ChainSpec, n: usize, image: &mut Vec<usize>, out: &mut BTreeSet<Edge>) {
        if image.len() == s.r() {
            for &(i, j) in s.edges() {
                out.insert((image[i - 1], image[j - 1]));
            }
            return;
        }
        let next = image.last().map_or(1, |&t| t + 1);
        let left = s.r() - image.len();
        for t in next..=n + 1 - left {
            image.push(t);
            walk(s, n, image, out);
            image.pop();
        }
    }
    let mut out = BTreeSet::new();
    walk(s, n, &mut Vec::new(), &mut out);
    out
}

/// `expand` agrees with orbit enumeration for `n <= r + 4`.
pub fn orbit_agreement(count: usize, r_max: usize, seed: u64) -> Check {
    let mut bad = Vec::new();
    for s in seeded_specs(count, r_max, seed) {
        for n in s.r()..=s.r() + 4 {
            let fast: BTreeSet<Edge> = expand(&s, n).expect("n >= r").edges().into_iter().collect();
            if fast != orbit_edges(&s, n) {
                bad.push(format!("{:?} n={n}", s.to_raw()));
            }
        }
    }
    violations("expand-matches-orbits", count, bad)
}

/// Every quasi-saturated spec met along the derived-chain iteration of the
/// seeded specs has cochordal `G_n` for `r <= n <= r + 6`.
pub fn quasi_saturated_cochordal(count: usize, r_max: usize, seed: u64) -> Check {
    let mut bad = Vec::new();
    let mut checked = 0;
    for mut s in seeded_specs(count, r_max, seed) {
        loop {
            if is_quasi_saturated(&s) {
                checked += 1;
                for n in s.r()..=s.r() + 6 {
                    if !is_cochordal(&expand(&s, n).expect("n >= r")) {
                        bad.push(format!("{:?} n={n}", s.to_raw()));
                    }
                }
                break;
            }
            s = derived_chain(&s);
        }
    }
    violations("quasi-saturated-cochordal", checked, bad)
}

pub fn properties(seed: u64, field: u32) -> Vec<Check> {
    vec![
        indmatch_constancy(200, 5, seed),
        regularity_at_most_three(100, 4, seed.wrapping_add(1), field),
        classifier_consistency(200, 6, seed.wrapping_add(2)),
        orbit_agreement(100, 5, seed.wrapping_add(3)),
        quasi_saturated_cochordal(200, 6, seed.wrapping_add(4)),
    ]
}

pub fn run_suite(suite: Suite, opts: Options) -> Result<String, CliError> {
    let mut checks = Vec::new();
    if matches!(suite, Suite::Golden | Suite::All) {
        checks.extend(golden());
    }
    if matches!(suite, Suite::Properties | Suite::All) {
        checks.extend(properties(opts.seed, opts.field));
    }
    let failed = checks.iter().filter(|c| !c.passed).count();
    let report = match opts.format {
        Format::Json => {
            let mut s = serde_json::to_string(&checks).expect("checks serialize");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut t = Table::new(["status", "check", "detail"]);
            for c in &checks {
                t.row([
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name.as_str(),
                    c.detail.as_str(),
                ]);
            }
            let mut s = t.render();
            s.push_str(&format!(
                "{} passed, {failed} failed\n",
                checks.len() - failed
            ));
            s
        }
    };
    if failed == 0 {
        Ok(report)
    } else {
        Err(CliError::VerificationFailed {
            failed,
            total: checks.len(),
            report,
        })
    }
}
