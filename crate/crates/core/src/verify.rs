//! Verification suites grouped by scope.
//!
//! Each suite fans out over its parameter range and merges the checks back
//! in parameter order, so a report is identical from run to run.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;

use crate::aqcube::{dim_raw, incident_edge, AugmentedCube, DimLabel, VertexLabel};
use crate::arcdiagram::{crossings, upsilon, ArcDiagram, EdgeSubset, Side};
use crate::blacklayout::{count_black, layout_black};
use crate::error::{Error, Result};
use crate::formulas::{
    bound_ladder, c_minus, c_plus, component_closed, first_positive_lower_bound, interval_sum, diagram_forms,
    lower_bound, nu_all, nu_all_by_recurrence, nu_cross, nu_cross_left, small_cases, total, total_collapsed,
    upper_bound, Component,
};
use crate::partition::{canonical_names, omega, verify_families, verify_edge_partition, EightParts, Part};
use crate::report::Check;
use crate::seqtables::{
    blue_black_inner, blue_black_inner_closed, blue_black_inner_measured, blue_red_inner, blue_red_inner_closed,
    s_table, special_index_identities, t_from_recurrence, t_measured_of, t_prime_of, S8, T8,
};
use crate::{Exact, ExactScalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Scope {
    Graph,
    Partition,
    Upsilon,
    Black,
    Sequences,
    Formulas,
    All,
}

impl Scope {
    pub const SUITES: [Scope; 6] =
        [Scope::Graph, Scope::Partition, Scope::Upsilon, Scope::Black, Scope::Sequences, Scope::Formulas];

    pub fn name(self) -> &'static str {
        match self {
            Scope::Graph => "graph",
            Scope::Partition => "partition",
            Scope::Upsilon => "upsilon",
            Scope::Black => "black",
            Scope::Sequences => "sequences",
            Scope::Formulas => "formulas",
            Scope::All => "all",
        }
    }

    /// Largest range the suite accepts.
    pub fn domain(self) -> RangeInclusive<u32> {
        match self {
            Scope::Graph => 1..=12,
            Scope::Partition => 5..=12,
            Scope::Upsilon => 0..=12,
            Scope::Black | Scope::Sequences => 8..=13,
            Scope::Formulas => 8..=64,
            Scope::All => 0..=64,
        }
    }

    /// Range used when none is given.
    pub fn default_range(self) -> RangeInclusive<u32> {
        match self {
            Scope::Graph => 1..=10,
            Scope::Partition => 5..=10,
            Scope::Upsilon => 0..=8,
            Scope::Black | Scope::Sequences => 8..=12,
            Scope::Formulas => 8..=64,
            Scope::All => 0..=64,
        }
    }

    /// Whether the suite's parameter is the step `m` rather than `n`.
    pub fn uses_m(self) -> bool {
        self == Scope::Upsilon
    }
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Scope::SUITES
            .into_iter()
            .chain([Scope::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Export(format!("unknown scope {s:?}")))
    }
}

/// Optional bounds on `m` and `n`; missing ends fall back to each suite's default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Bounds {
    pub m_min: Option<u32>,
    pub m_max: Option<u32>,
    pub n_min: Option<u32>,
    pub n_max: Option<u32>,
}

impl Bounds {
    /// The range for one suite. A single named suite rejects bounds outside
    /// its domain; under `all` they are clipped and an empty range skips it.
    pub fn resolve(&self, suite: Scope, strict: bool) -> Result<Option<RangeInclusive<u32>>> {
        let (lo, hi) = if suite.uses_m() { (self.m_min, self.m_max) } else { (self.n_min, self.n_max) };
        let (dom, def) = (suite.domain(), suite.default_range());
        let lo = lo.unwrap_or(*def.start());
        let hi = hi.unwrap_or(*def.end());
        if strict && (lo < *dom.start() || hi > *dom.end()) {
            return Err(Error::InvalidDimension { n: if lo < *dom.start() { lo } else { hi }, reason: range_reason(suite) });
        }
        let (lo, hi) = (lo.max(*dom.start()), hi.min(*dom.end()));
        Ok((lo <= hi).then_some(lo..=hi))
    }
}

fn range_reason(suite: Scope) -> &'static str {
    match suite {
        Scope::Graph => "graph checks run for 1 <= n <= 12",
        Scope::Partition => "partition checks run for 5 <= n <= 12",
        Scope::Upsilon => "arc diagram checks run for m <= 12",
        Scope::Black | Scope::Sequences => "drawing checks run for 8 <= n <= 13",
        Scope::Formulas | Scope::All => "formula checks run for 8 <= n <= 64",
    }
}

fn fan_out(range: RangeInclusive<u32>, f: impl Fn(u32) -> Result<Vec<Check>> + Sync + Send) -> Result<Vec<Check>> {
    let parts: Vec<Result<Vec<Check>>> = range.collect::<Vec<_>>().into_par_iter().map(f).collect();
    let mut out = Vec::new();
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

/// Runs a scope; `all` runs every suite in a fixed order.
pub fn run(scope: Scope, bounds: &Bounds) -> Result<Vec<Check>> {
    if scope != Scope::All {
        let range = bounds.resolve(scope, true)?.ok_or(Error::InvalidDimension { n: 0, reason: "empty range" })?;
        return run_suite(scope, range);
    }
    let mut out = Vec::new();
    for suite in Scope::SUITES {
        if let Some(range) = bounds.resolve(suite, false)? {
            out.extend(run_suite(suite, range)?);
        }
    }
    Ok(out)
}

pub fn run_suite(suite: Scope, range: RangeInclusive<u32>) -> Result<Vec<Check>> {
    match suite {
        Scope::Graph => fan_out(range, graph_checks),
        Scope::Partition => fan_out(range, partition_checks),
        Scope::Upsilon => fan_out(range, upsilon_checks),
        Scope::Black => fan_out(range, black_checks),
        Scope::Sequences => {
            let mut out = fan_out(range.clone(), sequence_checks)?;
            if range.contains(&8) {
                out.extend(table_eight_checks());
            }
            Ok(out)
        }
        Scope::Formulas => {
            let mut out = fan_out(range.clone(), formula_checks)?;
            out.extend(formula_globals(range)?);
            Ok(out)
        }
        Scope::All => run(Scope::All, &Bounds::default()),
    }
}

pub fn graph_checks(n: u32) -> Result<Vec<Check>> {
    let cube = AugmentedCube::build(n)?;
    let rec = AugmentedCube::build_recursive(n)?;
    let edges = cube.edges();
    let mut out = vec![
        Check::equal(format!("vertex count n = {n}"), 1usize << n, cube.vertex_count()),
        Check::equal(format!("edge count n = {n}"), (2 * n as usize - 1) << (n - 1), cube.edge_count()),
        Check::holds(
            format!("recursive and direct builds agree n = {n}"),
            (rec.edges() != edges).then(|| {
                let (a, b): (BTreeSet<_>, BTreeSet<_>) = (edges.iter().collect(), rec.edges().iter().copied().collect());
                let diff = a.iter().find(|e| !b.contains(**e)).map(|e| e.to_string());
                diff.unwrap_or_else(|| "recursive build has extra edges".into())
            }),
        ),
        Check::holds(
            format!("degree 2n-1 n = {n}"),
            (0..1u32 << n).find(|&a| cube.degree(a) != 2 * n as usize - 1).map(|a| format!("vertex {a}")),
        ),
        Check::holds(
            format!("edge dims in range n = {n}"),
            edges.iter().find(|e| !e.dim.is_edge_dim(n)).map(|e| format!("edge {e}")),
        ),
    ];
    let dims: Vec<DimLabel> = (-(n as i32)..=n as i32).map(DimLabel).filter(|d| d.is_edge_dim(n)).collect();
    let mut bad = None;
    'outer: for a in 0..1u32 << n {
        let nbrs: HashMap<i32, u32> = cube.neighbors(a).iter().map(|&(b, d)| (d.0, b)).collect();
        for &d in &dims {
            let e = incident_edge(VertexLabel::new(a, n)?, d)?;
            let other = if e.u == a { e.v } else { e.u };
            if nbrs.get(&d.0) != Some(&other) {
                bad = Some(format!("vertex {a}, dim {d}"));
                break 'outer;
            }
        }
    }
    out.push(Check::holds(format!("incident edge unique per dim n = {n}"), bad));
    if n <= 8 {
        let asym = (0..1u32 << n)
            .flat_map(|a| (0..1u32 << n).map(move |b| (a, b)))
            .find(|&(a, b)| dim_raw(a, b) != dim_raw(b, a))
            .map(|(a, b)| format!("{a}, {b}"));
        out.push(Check::holds(format!("dim symmetric n = {n}"), asym));
    }
    if n == 3 {
        out.push(k44_check());
    }
    Ok(out)
}

fn k44_check() -> Check {
    let cube = AugmentedCube::build(3).expect("n = 3 is valid");
    let w = crate::aqcube::find_k44_witness();
    Check::holds(
        "K44 witness in AQ_3",
        match &w {
            None => Some("no balanced split is complete bipartite".into()),
            Some(w) if !cube.is_complete_bipartite(&w.left, &w.right) => Some(format!("{w:?}")),
            _ => None,
        },
    )
}

pub fn partition_checks(n: u32) -> Result<Vec<Check>> {
    let mut out: Vec<Check> =
        verify_edge_partition(n)?.into_iter().map(|c| Check { name: format!("{} n = {n}", c.name), ..c }).collect();
    let names = canonical_names(n)?;
    out.extend(verify_families(&names).into_iter().map(|c| Check { name: format!("{} n = {n}", c.name), ..c }));
    let parts = EightParts::build(n)?;
    out.push(Check::equal(
        format!("parts cover V n = {n}"),
        1usize << n,
        Part::ALL.iter().map(|&p| parts.get(p).len()).sum(),
    ));
    if n <= 9 {
        let next = EightParts::build(n + 1)?;
        let mut lift_bad = None;
        for p in Part::ALL {
            if omega(parts.get(p), n)? != *next.get(p) {
                lift_bad = Some(format!("part {p}"));
                break;
            }
        }
        out.push(Check::holds(format!("parts lift by omega n = {n}"), lift_bad));
        let mut seen = BTreeSet::new();
        let mut clash = None;
        for a in 0..1u32 << n {
            let img = omega(&BTreeSet::from([a]), n)?;
            if let Some(x) = img.iter().find(|x| !seen.insert(**x)) {
                clash = Some(format!("vertex {a} maps onto {x}"));
                break;
            }
        }
        out.push(Check::holds(format!("omega images disjoint n = {n}"), clash));
    }
    Ok(out)
}

fn exact_u64(v: Exact) -> String {
    v.to_string()
}

/// Brute-force arc diagram checks at step `m`.
pub fn upsilon_checks(m: u32) -> Result<Vec<Check>> {
    let d = upsilon(m);
    let profile = d.cover_profile(EdgeSubset::All)?;
    let mut out = vec![
        Check::equal(format!("C+ m = {m}"), exact_u64(c_plus(m)), profile.total_above().to_string()),
        Check::equal(format!("C- m = {m}"), exact_u64(c_minus(m)), profile.total_below().to_string()),
    ];
    if m <= 8 {
        let labels = crate::partition::lift_spine(&Part::U1.column_seed(), d.network_dim(), m)?;
        out.push(Check::holds(format!("arcs match induced edges m = {m}"), d.label_mismatch(&labels)));
    }
    let all = d.crossings_of(EdgeSubset::All)?;
    if let Some(v) = nu_all::<Exact>(m) {
        out.push(Check::equal(format!("crossings of the diagram m = {m}"), exact_u64(v), all.to_string()));
    }
    if let Some(v) = nu_all_by_recurrence::<Exact>(m) {
        out.push(Check::equal(format!("crossing recurrence m = {m}"), exact_u64(v), all.to_string()));
    }
    let cross = d.select(EdgeSubset::Cross)?;
    if let Some(v) = nu_cross::<Exact>(m) {
        out.push(Check::equal(format!("half-joining crossings m = {m}"), exact_u64(v), crossings(&cross, None)?.to_string()));
    }
    if let Some(v) = nu_cross_left::<Exact>(m) {
        let left = d.select(EdgeSubset::Left)?;
        out.push(Check::equal(
            format!("half-joining vs left crossings m = {m}"),
            exact_u64(v),
            crossings(&cross, Some(&left))?.to_string(),
        ));
    }
    if m >= 1 {
        let sums = d.interval_sums()?;
        for (t, &(up, down)) in (1..=8).zip(sums.iter()) {
            let want = (interval_sum::<Exact>(m, t, true), interval_sum::<Exact>(m, t, false));
            out.push(Check::equal(
                format!("interval {t} sums m = {m}"),
                format!("{}/{}", want.0.expect("m >= 1"), want.1.expect("m >= 1")),
                format!("{up}/{down}"),
            ));
        }
        out.push(Check::holds(
            format!("no half-joining arc of length 2 m = {m}"),
            cross.iter().find(|a| a.hi - a.lo == 2).map(|a| format!("({}, {})", a.lo, a.hi)),
        ));
        out.push(Check::holds(
            format!("length-2 arcs start at 1 or 2 mod 4 m = {m}"),
            d.arcs().iter().find(|a| a.hi - a.lo == 2 && !matches!(a.lo % 4, 1 | 2)).map(|a| format!("({}, {})", a.lo, a.hi)),
        ));
        let hp = d.cover_profile(EdgeSubset::Cross)?;
        let mut bad = None;
        for t in 1..=8 {
            let (a, b) = if matches!(t, 1 | 4 | 5 | 8) { (1, 1) } else { (2, 0) };
            if let Some(k) = d.interval(t)?.find(|&k| hp.alpha(k) != a || hp.beta(k) != b) {
                bad = Some(format!("slot {k}: alpha {}, beta {}", hp.alpha(k), hp.beta(k)));
                break;
            }
        }
        out.push(Check::holds(format!("half-joining incidences m = {m}"), bad));
        out.push(Check::equal(
            format!("same-parity half-joining arcs m = {m}"),
            1usize << (m + 1),
            cross.iter().filter(|a| (a.hi - a.lo) % 2 == 0).count(),
        ));
    }
    out.push(Check::holds(format!("mirror symmetry m = {m}"), mirror_violation(&d)));
    if m < 12 {
        out.push(Check::holds(format!("lift keeps pairs, flips sides m = {m}"), lift_violation(&d, &upsilon(m + 1))));
    }
    if m <= 6 {
        let naive = naive_crossings(&d);
        out.push(Check::equal(format!("crossings against pairwise count m = {m}"), naive, all));
    }
    Ok(out)
}

fn mirror_violation(d: &ArcDiagram) -> Option<String> {
    let big = d.spine_len() + 1;
    let set: BTreeSet<(u32, u32)> = d.arcs().iter().map(|a| (a.lo, a.hi)).collect();
    d.arcs()
        .iter()
        .find(|a| !set.contains(&(big - a.hi, big - a.lo)))
        .map(|a| format!("({}, {}) has no mirror", a.lo, a.hi))
}

fn lift_violation(d: &ArcDiagram, next: &ArcDiagram) -> Option<String> {
    let sides: HashMap<(u32, u32), Side> = next.arcs().iter().map(|a| ((a.lo, a.hi), a.side)).collect();
    let len = d.spine_len();
    let here: BTreeSet<(u32, u32)> = d.arcs().iter().map(|a| (a.lo, a.hi)).collect();
    for a in d.arcs() {
        match sides.get(&(a.lo, a.hi)) {
            None => return Some(format!("({}, {}) missing after the lift", a.lo, a.hi)),
            Some(&s) if s != a.side.flip() => return Some(format!("({}, {}) keeps its side", a.lo, a.hi)),
            _ => {}
        }
    }
    next.arcs()
        .iter()
        .find(|a| a.hi <= len && !here.contains(&(a.lo, a.hi)))
        .map(|a| format!("({}, {}) appears only after the lift", a.lo, a.hi))
}

fn naive_crossings(d: &ArcDiagram) -> u64 {
    let arcs = d.arcs();
    let mut c = 0;
    for (i, a) in arcs.iter().enumerate() {
        c += arcs[i + 1..].iter().filter(|b| a.crosses(b)).count() as u64;
    }
    c
}

pub fn black_checks(n: u32) -> Result<Vec<Check>> {
    let layout = layout_black(n)?;
    let b = count_black(&layout)?;
    let closed: Exact = component_closed(n, Component::Black)?;
    let cm = c_minus::<Exact>(n - 5);
    let mut out = vec![Check::equal(format!("black crossings n = {n}"), closed.to_string(), b.total.to_string())];
    out.push(Check::holds(
        format!("pair counts equal n = {n}"),
        b.pairs.iter().position(|p| *p != b.pairs[0]).map(|i| format!("pair {}", i + 1)),
    ));
    let p = b.pairs[0];
    out.push(Check::equal(format!("straight-straight crossings n = {n}"), 1u64 << (n - 4), p.straight_straight));
    out.push(Check::equal(format!("straight-arc crossings n = {n}"), (Exact::from_i64(2) * cm.clone()).to_string(), p.straight_arc_u.to_string()));
    out.push(Check::equal(format!("straight-arc crossings, V side n = {n}"), (Exact::from_i64(2) * cm).to_string(), p.straight_arc_v.to_string()));
    Ok(out)
}

pub fn sequence_checks(n: u32) -> Result<Vec<Check>> {
    let layout = layout_black(n)?;
    let measured = t_measured_of(&layout);
    let rec = t_from_recurrence(n)?;
    let mut out = vec![Check::holds(
        format!("t from drawing equals t table n = {n}"),
        measured.iter().zip(&rec).position(|(a, b)| a != b).map(|j| format!("j = {}: {} vs {}", j + 1, measured[j], rec[j])),
    )];
    let tp = t_prime_of(&layout);
    out.push(Check::holds(
        format!("t exceeds t' by the straight-edge covers n = {n}"),
        (1..=rec.len()).find(|&j| rec[j - 1] < tp[j - 1]).map(|j| format!("j = {j}")),
    ));
    if n > 8 {
        let (prev_s, prev_t) = (s_table(n - 1)?, t_from_recurrence(n - 1)?);
        out.push(Check::holds(format!("s recurrences n = {n}"), recurrence_violation(&s_table(n)?, &prev_s, 0)));
        out.push(Check::holds(format!("t recurrences n = {n}"), recurrence_violation(&rec, &prev_t, 2)));
    }
    out.extend(special_index_identities(n)?.into_iter().map(|c| Check { name: format!("{} n = {n}", c.name), ..c }));
    out.push(Check::equal(format!("blue-red inner sum n = {n}"), blue_red_inner_closed(n), blue_red_inner(n)?));
    out.push(Check::equal(format!("blue-black inner sum n = {n}"), blue_black_inner_closed(n), blue_black_inner(n)?));
    out.push(Check::equal(
        format!("blue-black inner sum from the drawing n = {n}"),
        blue_black_inner_closed(n),
        blue_black_inner_measured(&layout)?,
    ));
    Ok(out)
}

/// `seq[2j-1] = 2 prev[j]`, `seq[2j] = prev[j] + prev[j+1] + extra`, 1-based.
fn recurrence_violation(seq: &[u64], prev: &[u64], extra: u64) -> Option<String> {
    for j in 1..=prev.len() {
        if seq[2 * j - 2] != 2 * prev[j - 1] {
            return Some(format!("index {}", 2 * j - 1));
        }
        if j < prev.len() && seq[2 * j - 1] != prev[j - 1] + prev[j] + extra {
            return Some(format!("index {}", 2 * j));
        }
    }
    None
}

fn table_eight_checks() -> Vec<Check> {
    let mut out = Vec::new();
    match layout_black(8) {
        Ok(layout) => {
            out.push(Check::equal("t at n = 8 from the drawing", format!("{T8:?}"), format!("{:?}", t_measured_of(&layout))))
        }
        Err(e) => out.push(Check::holds("t at n = 8 from the drawing", Some(e.to_string()))),
    }
    out.push(Check::holds(
        "s non-increasing at n = 8",
        S8.windows(2).position(|w| w[0] < w[1]).map(|j| format!("j = {}", j + 1)),
    ));
    out
}

pub fn formula_checks(n: u32) -> Result<Vec<Check>> {
    let t = total::<Exact>(n)?;
    let mut out = vec![
        Check::equal(format!("component sum equals collapsed total n = {n}"), total_collapsed::<Exact>(n)?, t.clone()),
        Check::holds(format!("total integral n = {n}"), (!t.is_integral()).then(|| t.to_string())),
        Check::holds(format!("total below the bound n = {n}"), (t >= upper_bound(n)).then(|| t.to_string())),
        Check::holds(format!("lower bound below total n = {n}"), (lower_bound::<Exact>(n)? >= t).then(|| t.to_string())),
    ];
    out.extend(bound_ladder::<Exact>(n)?);
    if n <= 60 {
        let fixed = total::<crate::Exact128>(n)?;
        out.push(Check::equal(format!("i128 total agrees n = {n}"), t.to_string(), fixed.to_string()));
    }
    Ok(out)
}

fn formula_globals(range: RangeInclusive<u32>) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    let mut bad = None;
    for m in 0..=30 {
        if let Err(e) = diagram_forms::<Exact>(m) {
            bad = Some(e.to_string());
            break;
        }
    }
    out.push(Check::holds("arc diagram closed forms integral for m <= 30", bad));
    out.push(k44_check());
    for c in small_cases() {
        let ok = match c.n {
            1..=3 => lower_bound::<Exact>(c.n.max(2))? <= Exact::from_i64(c.crossings as i64),
            _ => lower_bound::<Exact>(c.n)? < Exact::from_i64(c.crossings as i64),
        };
        out.push(Check::holds(
            format!("lower bound below small case n = {}", c.n),
            (!ok).then(|| c.crossings.to_string()),
        ));
    }
    let first = first_positive_lower_bound::<Exact>(2..=*range.end().max(&64))?;
    let shown = first.map_or_else(|| "none".to_string(), |n| n.to_string());
    out.push(Check::equal("first n with positive lower bound", "11".to_string(), shown));
    Ok(out)
}
