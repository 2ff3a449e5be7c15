//! The lifting maps, the eight vertex classes and the canonical names.
//!
//! `pi` embeds AQ_n into AQ_{n+1} by duplicating bit n-1 upward, `hat`
//! flips the low bits `1..=m-2` of a vertex of AQ_m, and `omega` sends a
//! vertex set to `{pi(a), hat(pi(a))}`. Iterating `omega` from eight fixed
//! quadruples of AQ_5 yields the parts U1..U4, V1..V4 of every AQ_n.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use crate::aqcube::{adjacent_raw, check_dim, dim_raw, AugmentedCube, DimLabel, Edge, VertexLabel};
use crate::error::{Error, Result};
use crate::report::Check;

/// `pi` on a raw label of AQ_n, `n >= 2`.
#[inline]
pub fn pi_raw(a: u32, n: u32) -> u32 {
    let low = a & ((1 << (n - 1)) - 1);
    let b_prev = (a >> (n - 2)) & 1;
    let b_top = (a >> (n - 1)) & 1;
    low | (b_prev << (n - 1)) | (b_top << n)
}

/// `hat` on a raw label of AQ_m, `m >= 4`.
#[inline]
pub fn hat_raw(a: u32, m: u32) -> u32 {
    a ^ ((1 << (m - 2)) - 1)
}

pub fn pi(a: VertexLabel) -> Result<VertexLabel> {
    if a.n() < 2 {
        return Err(Error::InvalidDimension { n: a.n(), reason: "pi needs n >= 2" });
    }
    VertexLabel::new(pi_raw(a.value(), a.n()), a.n() + 1)
}

pub fn hat(a: VertexLabel) -> Result<VertexLabel> {
    if a.n() < 4 {
        return Err(Error::InvalidDimension { n: a.n(), reason: "hat needs n >= 4" });
    }
    VertexLabel::new(hat_raw(a.value(), a.n()), a.n())
}

/// The two images of `a` (a vertex of AQ_n) in AQ_{n+1}: `(pi, hat∘pi)`.
#[inline]
pub fn omega_pair(a: u32, n: u32) -> (u32, u32) {
    let p = pi_raw(a, n);
    (p, hat_raw(p, n + 1))
}

fn check_omega_dim(n: u32) -> Result<()> {
    check_dim(n + 1)?;
    if n < 3 {
        return Err(Error::InvalidDimension { n, reason: "omega needs n >= 3" });
    }
    Ok(())
}

/// `omega` of a vertex set of AQ_n.
pub fn omega(set: &BTreeSet<u32>, n: u32) -> Result<BTreeSet<u32>> {
    check_omega_dim(n)?;
    Ok(set
        .iter()
        .flat_map(|&a| {
            let (p, h) = omega_pair(a, n);
            [p, h]
        })
        .collect())
}

/// `m`-fold iterate of `omega`; the result lives in AQ_{n+m}.
pub fn omega_m(set: &BTreeSet<u32>, n: u32, m: u32) -> Result<BTreeSet<u32>> {
    let mut cur = set.clone();
    for k in 0..m {
        cur = omega(&cur, n + k)?;
    }
    Ok(cur)
}

/// Lifts an ordered spine of AQ_n through `m` applications of `omega`,
/// keeping the spine order: the images of spine vertex `i` occupy slots
/// `2i-1` and `2i`, with `pi` first when `i` is odd and second when even.
pub fn lift_spine(seed: &[u32], n: u32, m: u32) -> Result<Vec<u32>> {
    let mut z = seed.to_vec();
    for k in 0..m {
        let level = n + k;
        check_omega_dim(level)?;
        let mut next = vec![0; 2 * z.len()];
        for (idx, &a) in z.iter().enumerate() {
            let (p, h) = omega_pair(a, level);
            if idx % 2 == 0 {
                next[2 * idx] = p;
                next[2 * idx + 1] = h;
            } else {
                next[2 * idx] = h;
                next[2 * idx + 1] = p;
            }
        }
        z = next;
    }
    Ok(z)
}

/// One of the eight vertex classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Part {
    U1,
    U2,
    U3,
    U4,
    V1,
    V2,
    V3,
    V4,
}

impl Part {
    pub const ALL: [Part; 8] = [Part::U1, Part::U2, Part::U3, Part::U4, Part::V1, Part::V2, Part::V3, Part::V4];

    pub fn u(i: usize) -> Part {
        Self::ALL[i - 1]
    }

    pub fn v(i: usize) -> Part {
        Self::ALL[i + 3]
    }

    pub fn is_u(self) -> bool {
        (self as usize) < 4
    }

    /// The index `i` in `U_i` / `V_i`.
    pub fn index(self) -> usize {
        self as usize % 4 + 1
    }

    /// The part on the other side of the straight-edge pairing.
    pub fn partner(self) -> Part {
        if self.is_u() {
            Part::v(self.index())
        } else {
            Part::u(self.index())
        }
    }

    pub fn name(self) -> &'static str {
        ["U1", "U2", "U3", "U4", "V1", "V2", "V3", "V4"][self as usize]
    }

    /// Horizontal column position.
    pub fn x_position(self) -> i32 {
        match self {
            Part::U1 | Part::U3 => -2,
            Part::V1 | Part::V3 => -1,
            Part::V2 | Part::V4 => 1,
            Part::U2 | Part::U4 => 2,
        }
    }

    /// Vertical anchors of the four seed vertices, in seed order.
    pub fn y_anchors(self) -> [i32; 4] {
        match self {
            Part::U1 | Part::V2 => [1, 2, 3, 4],
            Part::V1 | Part::U2 => [4, 3, 2, 1],
            Part::U3 | Part::V4 => [-4, -3, -2, -1],
            Part::V3 | Part::U4 => [-1, -2, -3, -4],
        }
    }

    /// Ordered seed quadruple in AQ_5 whose lifts form this part's column.
    pub fn column_seed(self) -> [u32; 4] {
        match self {
            Part::U1 => [0b00100, 0b00011, 0b00111, 0b00000],
            Part::U2 => [0b00001, 0b00110, 0b00010, 0b00101],
            Part::U3 => [0b10100, 0b10011, 0b10111, 0b10000],
            Part::U4 => [0b10101, 0b10010, 0b10110, 0b10001],
            Part::V1 => [0b01111, 0b01000, 0b01100, 0b01011],
            Part::V2 => [0b01010, 0b01101, 0b01001, 0b01110],
            Part::V3 => [0b11111, 0b11000, 0b11100, 0b11011],
            Part::V4 => [0b11110, 0b11001, 0b11101, 0b11010],
        }
    }

    /// The base class in AQ_5 as originally listed.
    pub fn base_list(self) -> [u32; 4] {
        match self {
            Part::U1 => [0b00100, 0b00011, 0b00111, 0b00000],
            Part::U2 => [0b00101, 0b00010, 0b00110, 0b00001],
            Part::U3 => [0b10100, 0b10011, 0b10111, 0b10000],
            Part::U4 => [0b10101, 0b10010, 0b10110, 0b10001],
            Part::V1 => [0b01011, 0b01100, 0b01000, 0b01111],
            Part::V2 => [0b01010, 0b01101, 0b01001, 0b01110],
            Part::V3 => [0b11011, 0b11100, 0b11000, 0b11111],
            Part::V4 => [0b11010, 0b11101, 0b11001, 0b11110],
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_part_dim(n: u32) -> Result<()> {
    check_dim(n)?;
    if n < 5 {
        return Err(Error::InvalidDimension { n, reason: "the eight parts need n >= 5" });
    }
    Ok(())
}

/// The eight disjoint classes of V(AQ_n), `n >= 5`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EightParts {
    n: u32,
    sets: [BTreeSet<u32>; 8],
}

impl EightParts {
    pub fn build(n: u32) -> Result<Self> {
        check_part_dim(n)?;
        let mut sets: [BTreeSet<u32>; 8] = Part::ALL.map(|p| p.base_list().into_iter().collect());
        for level in 5..n {
            for s in &mut sets {
                *s = omega(s, level)?;
            }
        }
        Ok(Self { n, sets })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn get(&self, p: Part) -> &BTreeSet<u32> {
        &self.sets[p as usize]
    }

    /// The part containing vertex `a`.
    pub fn part_of(&self, a: u32) -> Option<Part> {
        Part::ALL.into_iter().find(|&p| self.get(p).contains(&a))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let parts: BTreeMap<&str, Vec<u32>> =
            Part::ALL.iter().map(|&p| (p.name(), self.get(p).iter().copied().collect())).collect();
        serde_json::json!({ "n": self.n, "parts": parts })
    }
}

/// Edge classes of the drawing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeClass {
    Black,
    Red,
    Blue,
}

/// Classifies an edge of AQ_n by its dimension.
pub fn classify_edge(e: &Edge, n: u32) -> Result<EdgeClass> {
    check_part_dim(n)?;
    classify_dim(e.dim, n)
}

pub fn classify_dim(d: DimLabel, n: u32) -> Result<EdgeClass> {
    if !d.is_edge_dim(n) {
        return Err(Error::InvalidDimLabel { dim: d.0, n });
    }
    let n = n as i32;
    Ok(match d.0 {
        1 | 2 => EdgeClass::Red,
        t if t.abs() == n => EdgeClass::Blue,
        _ => EdgeClass::Black,
    })
}

fn in_upper_half(a: u32, n: u32) -> bool {
    (a >> (n - 2)) & 1 == 1
}

/// Compares an edge family to the set of edges whose dimension satisfies `pred`.
fn family_row(name: &str, cube: &AugmentedCube, family: &BTreeSet<Edge>, pred: impl Fn(i32) -> bool) -> Check {
    let target: BTreeSet<Edge> = cube.edges().into_iter().filter(|e| pred(e.dim.0)).collect();
    let extra = family.difference(&target).next();
    let missing = target.difference(family).next();
    let counterexample = extra.or(missing).map(|e| format!("edge {e}"));
    Check::holds(name, counterexample)
}

/// Expected lifted dimensions for an edge of dimension `d` in AQ_n: the
/// dimension of the parallel images, and of the two crossed images.
fn lift_expectation(d: i32, n: i32) -> (Option<i32>, Option<i32>) {
    if d == -(n - 1) {
        (Some(-n), Some(n))
    } else if d == -n {
        (Some(-(n + 1)), None)
    } else if d == n - 1 {
        (None, None)
    } else if d == -(n - 2) {
        (Some(d), Some(n - 1))
    } else if d == n {
        (Some(n + 1), None)
    } else {
        (Some(d), None)
    }
}

fn lifted_pair(u: u32, v: u32, n: u32) -> Option<String> {
    let (pu, hu) = omega_pair(u, n);
    let (pv, hv) = omega_pair(v, n);
    let (par, crossed) = lift_expectation(dim_raw(u, v), n as i32);
    let probe = |a: u32, b: u32, want: Option<i32>| -> Option<String> {
        let got = adjacent_raw(a, b).then(|| dim_raw(a, b));
        (got != want).then(|| format!("lift of {u}-{v}: pair {a}-{b} has {got:?}, want {want:?}"))
    };
    probe(pu, pv, par)
        .or_else(|| probe(hu, hv, par))
        .or_else(|| probe(pu, hv, crossed))
        .or_else(|| probe(hu, pv, crossed))
}

/// Checks the edge partition of AQ_n by the eight parts and how each
/// edge and non-edge behaves under one lift, `5 <= n`.
pub fn verify_edge_partition(n: u32) -> Result<Vec<Check>> {
    check_part_dim(n)?;
    check_dim(n + 1)?;
    let cube = AugmentedCube::build(n)?;
    let parts = EightParts::build(n)?;
    let ni = n as i32;
    let mut rows = Vec::new();

    let mut cross_half = BTreeSet::new();
    let mut same_half = BTreeSet::new();
    for e in cube.edges() {
        if in_upper_half(e.u, n) != in_upper_half(e.v, n) {
            cross_half.insert(e);
        } else {
            same_half.insert(e);
        }
    }
    rows.push(family_row("cross-half edges have dims -n, +-(n-1)", &cube, &cross_half, |d| {
        d == -ni || d.abs() == ni - 1
    }));
    rows.push(family_row("same-half edges have dims [-(n-2),-2], [1,n-2], n", &cube, &same_half, |d| {
        (-(ni - 2)..=-2).contains(&d) || (1..=ni - 2).contains(&d) || d == ni
    }));

    let lift_failure = |set: &BTreeSet<Edge>| set.iter().find_map(|e| lifted_pair(e.u, e.v, n));
    rows.push(Check::holds("cross-half edges lift as prescribed", lift_failure(&cross_half)));
    rows.push(Check::holds("same-half edges lift as prescribed", lift_failure(&same_half)));

    let size = 1u32 << n;
    let apart = (0..size).find_map(|u| {
        (u + 1..size).filter(|&v| !adjacent_raw(u, v)).find_map(|v| {
            let (pu, hu) = omega_pair(u, n);
            let (pv, hv) = omega_pair(v, n);
            [(pu, pv), (pu, hv), (hu, pv), (hu, hv)]
                .into_iter()
                .find(|&(a, b)| adjacent_raw(a, b))
                .map(|(a, b)| format!("non-adjacent {u},{v} lift to adjacent {a},{b}"))
        })
    });
    rows.push(Check::holds("non-adjacent pairs lift to non-adjacent sets", apart));

    let between = |pairs: &[(Part, Part)]| -> BTreeSet<Edge> {
        pairs
            .iter()
            .flat_map(|&(a, b)| cube.edges_between(parts.get(a), parts.get(b)))
            .collect()
    };
    use Part::*;
    rows.push(family_row(
        "red pairs carry dims 1, 2",
        &cube,
        &between(&[(U1, U2), (U3, U4), (V1, V2), (V3, V4)]),
        |d| d == 1 || d == 2,
    ));
    rows.push(family_row(
        "dim n pairs",
        &cube,
        &between(&[(U1, U3), (U2, U4), (V1, V3), (V2, V4)]),
        |d| d == ni,
    ));
    rows.push(family_row(
        "dim -n pairs",
        &cube,
        &between(&[(U1, V3), (U2, V4), (V1, U3), (V2, U4)]),
        |d| d == -ni,
    ));
    rows.push(family_row(
        "internal edges carry dims [-(n-2),-2], [3,n-2]",
        &cube,
        &between(&Part::ALL.map(|p| (p, p))),
        |d| (-(ni - 2)..=-2).contains(&d) || (3..=ni - 2).contains(&d),
    ));
    rows.push(family_row(
        "paired parts carry dims +-(n-1)",
        &cube,
        &between(&[(U1, V1), (U2, V2), (U3, V3), (U4, V4)]),
        |d| d.abs() == ni - 1,
    ));
    Ok(rows)
}

/// The naming `u_{i,j}` / `v_{i,j}` of every vertex, `j` in `[1, 2^{n-3}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalNames {
    n: u32,
    spines: [Vec<u32>; 8],
    reversed: [bool; 8],
}

impl CanonicalNames {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of names per part, `2^{n-3}`.
    pub fn len(&self) -> usize {
        self.spines[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.spines[0].is_empty()
    }

    /// The column spine of `p` in lift order.
    pub fn spine(&self, p: Part) -> &[u32] {
        &self.spines[p as usize]
    }

    /// Whether `j` runs against the spine order for `p`.
    pub fn is_reversed(&self, p: Part) -> bool {
        self.reversed[p as usize]
    }

    /// Spine slot (1-based) holding name index `j`.
    pub fn slot_of(&self, p: Part, j: usize) -> usize {
        if self.is_reversed(p) {
            self.len() + 1 - j
        } else {
            j
        }
    }

    /// Name index of spine slot `k`; the map is an involution.
    pub fn index_of_slot(&self, p: Part, k: usize) -> usize {
        self.slot_of(p, k)
    }

    /// The vertex named `p_{j}`, `j` in `[1, 2^{n-3}]`.
    pub fn name(&self, p: Part, j: usize) -> u32 {
        self.spine(p)[self.slot_of(p, j) - 1]
    }

    pub fn u(&self, i: usize, j: usize) -> u32 {
        self.name(Part::u(i), j)
    }

    pub fn v(&self, i: usize, j: usize) -> u32 {
        self.name(Part::v(i), j)
    }

    /// Names `p_1, ..., p_N` in index order.
    pub fn names(&self, p: Part) -> Vec<u32> {
        (1..=self.len()).map(|j| self.name(p, j)).collect()
    }

    /// First half `j <= 2^{n-4}` and second half of the names of `p`.
    pub fn halves(&self, p: Part) -> (Vec<u32>, Vec<u32>) {
        let mut all = self.names(p);
        let second = all.split_off(self.len() / 2);
        (all, second)
    }

    /// Parts whose orientation differs from the one implied by the
    /// seed anchors alone.
    pub fn anchor_disagreements(&self) -> Vec<Part> {
        Part::ALL.into_iter().filter(|&p| self.is_reversed(p) != anchor_reversed(p)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let names: BTreeMap<&str, Vec<u32>> = Part::ALL.iter().map(|&p| (p.name(), self.names(p))).collect();
        let reversed: BTreeMap<&str, bool> = Part::ALL.iter().map(|&p| (p.name(), self.is_reversed(p))).collect();
        serde_json::json!({ "n": self.n, "names": names, "reversed": reversed })
    }
}

/// Orientation implied by the anchors: names run from the largest `|Y|`
/// down, so a part whose anchors grow in `|Y|` is named against the spine.
fn anchor_reversed(p: Part) -> bool {
    let y = p.y_anchors();
    y[0].abs() < y[3].abs()
}

/// Builds the naming that satisfies every dimension family.
///
/// Orientation of U1 follows its anchors. The other seven parts are
/// searched exhaustively; exactly one assignment must pass.
pub fn canonical_names(n: u32) -> Result<CanonicalNames> {
    check_part_dim(n)?;
    let spines = Part::ALL.map(|p| lift_spine(&p.column_seed(), 5, n - 5));
    let spines: [Vec<u32>; 8] = {
        let mut out: [Vec<u32>; 8] = Default::default();
        for (slot, s) in out.iter_mut().zip(spines) {
            *slot = s?;
        }
        out
    };
    let anchors = Part::ALL.map(anchor_reversed);
    let mut candidate = CanonicalNames { n, spines, reversed: anchors };
    if family_failures(&candidate).is_none() {
        return Ok(candidate);
    }
    let mut found = None;
    for bits in 0u32..128 {
        let mut reversed = [anchors[0]; 8];
        for (k, r) in reversed.iter_mut().enumerate().skip(1) {
            *r = bits >> (k - 1) & 1 == 1;
        }
        candidate.reversed = reversed;
        if family_failures(&candidate).is_none() {
            if found.is_some() {
                return Err(Error::NoConsistentNaming { n });
            }
            found = Some(reversed);
        }
    }
    candidate.reversed = found.ok_or(Error::NoConsistentNaming { n })?;
    Ok(candidate)
}

type Family = (String, i32, Vec<(u32, u32)>);

fn families(names: &CanonicalNames) -> Vec<Family> {
    let n = names.n() as i32;
    let big = names.len();
    let half = big / 2;
    let (u, v) = (|i, j| names.u(i, j), |i, j| names.v(i, j));
    let js = || 1..=big;
    let wrap = |j: usize| (j + half - 1) % big + 1;
    let mut out: Vec<Family> = Vec::new();

    out.push((
        "dim -(n-1): u(i,j) v(i,j)".into(),
        -(n - 1),
        (1..=4).flat_map(|i| js().map(move |j| (u(i, j), v(i, j)))).collect(),
    ));
    out.push((
        "dim n-1: u(i,j) v(i,j+(-1)^(j-1))".into(),
        n - 1,
        (1..=4)
            .flat_map(|i| js().map(move |j| (u(i, j), v(i, if j % 2 == 1 { j + 1 } else { j - 1 }))))
            .collect(),
    ));
    out.push((
        "dim -(n-2): u(i,2j-1) u(i,2j), v(i,2j-1) v(i,2j)".into(),
        -(n - 2),
        (1..=4)
            .flat_map(|i| (1..=half).flat_map(move |j| [(u(i, 2 * j - 1), u(i, 2 * j)), (v(i, 2 * j - 1), v(i, 2 * j))]))
            .collect(),
    ));
    out.push((
        "dim 1: u(a,j) u(a+1,j), v(a,j) v(a+1,j) for a = 1, 3".into(),
        1,
        [1, 3]
            .into_iter()
            .flat_map(|a| js().flat_map(move |j| [(u(a, j), u(a + 1, j)), (v(a, j), v(a + 1, j))]))
            .collect(),
    ));
    out.push((
        "dim 2: u(a,j) u(a+1,j+2^(n-4)), v analogue, for a = 1, 3".into(),
        2,
        [1, 3]
            .into_iter()
            .flat_map(|a| js().flat_map(move |j| [(u(a, j), u(a + 1, wrap(j))), (v(a, j), v(a + 1, wrap(j)))]))
            .collect(),
    ));
    out.push((
        "dim n: u(a,j) u(a+2,j), v(a,j) v(a+2,j) for a = 1, 2".into(),
        n,
        [1, 2]
            .into_iter()
            .flat_map(|a| js().flat_map(move |j| [(u(a, j), u(a + 2, j)), (v(a, j), v(a + 2, j))]))
            .collect(),
    ));
    out.push((
        "dim -n: u(a,j) v(a+2,j), v(a,j) u(a+2,j) for a = 1, 2".into(),
        -n,
        [1, 2]
            .into_iter()
            .flat_map(|a| js().flat_map(move |j| [(u(a, j), v(a + 2, j)), (v(a, j), u(a + 2, j))]))
            .collect(),
    ));
    out
}

/// First violation of one family: a listed pair that is not an edge of
/// the stated dimension, a repeated pair, or a wrong family size.
fn family_violation(n: u32, dim: i32, pairs: &[(u32, u32)]) -> Option<String> {
    let mut seen = HashSet::with_capacity(pairs.len());
    for &(a, b) in pairs {
        if !adjacent_raw(a, b) || dim_raw(a, b) != dim {
            let got = if adjacent_raw(a, b) { dim_raw(a, b).to_string() } else { "no edge".into() };
            return Some(format!("{a}-{b}: {got}"));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Some(format!("{a}-{b} listed twice"));
        }
    }
    // each vertex has one edge of every dimension
    let expected = 1usize << (n - 1);
    (pairs.len() != expected).then(|| format!("family has {} pairs, dimension class has {expected}", pairs.len()))
}

fn family_failures(names: &CanonicalNames) -> Option<String> {
    families(names)
        .into_iter()
        .find_map(|(name, d, pairs)| family_violation(names.n(), d, &pairs).map(|c| format!("{name}: {c}")))
}

/// Checks each dimension family of the naming against the graph.
pub fn verify_families(names: &CanonicalNames) -> Vec<Check> {
    families(names)
        .into_iter()
        .map(|(name, d, pairs)| Check::holds(name, family_violation(names.n(), d, &pairs)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lbl(s: &str) -> VertexLabel {
        VertexLabel::from_bits(s).unwrap()
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi(lbl("00100")).unwrap(), lbl("000100"));
        assert_eq!(pi(lbl("00000")).unwrap(), lbl("000000"));
        assert_eq!(pi(lbl("11111")).unwrap(), lbl("111111"));
        assert_eq!(pi(lbl("10000")).unwrap(), lbl("100000"));
        assert_eq!(pi(lbl("01000")).unwrap(), lbl("011000"));
    }

    #[test]
    fn hat_examples() {
        let a = lbl("000100");
        let h = hat(a).unwrap();
        assert_eq!(h, lbl("001011"));
        assert_eq!(crate::aqcube::dim(a, h).unwrap(), DimLabel(-4));
        assert_eq!(hat(h).unwrap(), a);
        assert_eq!(hat(lbl("000000")).unwrap(), lbl("001111"));
        assert!(hat(lbl("000")).is_err());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&BTreeSet::from([0b00100]), 5).unwrap(), BTreeSet::from([4, 11]));
        let u1: BTreeSet<u32> = Part::U1.base_list().into_iter().collect();
        assert_eq!(omega(&u1, 5).unwrap(), BTreeSet::from([0, 3, 4, 7, 8, 11, 12, 15]));
        assert_eq!(omega_m(&BTreeSet::from([7]), 5, 3).unwrap().len(), 8);
        assert_eq!(omega_m(&u1, 5, 0).unwrap(), u1);
    }

    #[test]
    fn eight_parts_examples() {
        let p5 = EightParts::build(5).unwrap();
        assert_eq!(p5.get(Part::V4), &BTreeSet::from([0b11010, 0b11101, 0b11001, 0b11110]));
        let p6 = EightParts::build(6).unwrap();
        assert_eq!(p6.get(Part::U1), &BTreeSet::from([0, 3, 4, 7, 8, 11, 12, 15]));
        let p7 = EightParts::build(7).unwrap();
        let union: BTreeSet<u32> = Part::ALL.iter().flat_map(|&p| p7.get(p).iter().copied()).collect();
        assert_eq!(union.len(), 128);
        assert!(EightParts::build(4).is_err());
    }

    #[test]
    fn parts_match_spines() {
        for n in 5..=9 {
            let parts = EightParts::build(n).unwrap();
            for p in Part::ALL {
                let spine: BTreeSet<u32> = lift_spine(&p.column_seed(), 5, n - 5).unwrap().into_iter().collect();
                assert_eq!(&spine, parts.get(p), "{p} at n = {n}");
            }
        }
    }

    #[test]
    fn classify_examples() {
        let n = 7;
        assert_eq!(classify_dim(DimLabel(2), n).unwrap(), EdgeClass::Red);
        assert_eq!(classify_dim(DimLabel(-7), n).unwrap(), EdgeClass::Blue);
        assert_eq!(classify_dim(DimLabel(-6), n).unwrap(), EdgeClass::Black);
        assert_eq!(classify_dim(DimLabel(6), n).unwrap(), EdgeClass::Black);
        assert!(classify_dim(DimLabel(-1), n).is_err());
    }

    #[test]
    fn class_sizes() {
        for n in 5..=9 {
            let cube = AugmentedCube::build(n).unwrap();
            let mut counts = [0usize; 3];
            for e in cube.edges() {
                counts[classify_edge(&e, n).unwrap() as usize] += 1;
            }
            let half = 1usize << (n - 1);
            assert_eq!(counts[1], 2 * half);
            assert_eq!(counts[2], 2 * half);
            assert_eq!(counts.iter().sum::<usize>(), (2 * n as usize - 1) * half);
        }
    }

    #[test]
    fn edge_partition_small() {
        for n in 5..=8 {
            for row in verify_edge_partition(n).unwrap() {
                assert!(row.passed, "n = {n}: {row}");
            }
        }
    }

    #[test]
    fn naming_passes_families() {
        for n in 5..=10 {
            let names = canonical_names(n).unwrap();
            for row in verify_families(&names) {
                assert!(row.passed, "n = {n}: {row}");
            }
            assert_eq!(names.anchor_disagreements(), vec![Part::U3, Part::V3]);
        }
    }

    #[test]
    fn naming_examples() {
        let n = 8;
        let names = canonical_names(n).unwrap();
        let big = names.len();
        for j in 1..=big / 2 {
            assert_eq!(dim_raw(names.u(1, 2 * j - 1), names.u(1, 2 * j)), -(n as i32 - 2));
        }
        for i in 1..=4 {
            for j in 1..=big {
                assert_eq!(dim_raw(names.u(i, j), names.v(i, j)), -(n as i32 - 1));
            }
        }
        assert_eq!(dim_raw(names.u(1, 3), names.u(3, 3)), n as i32);
        assert_eq!(dim_raw(names.u(1, big), names.u(2, big / 2)), 2);
        assert_eq!(dim_raw(names.u(2, 5), names.v(4, 5)), -(n as i32));
    }

    #[test]
    fn broken_naming_is_caught() {
        let mut names = canonical_names(8).unwrap();
        names.reversed[Part::U2 as usize] ^= true;
        assert!(verify_families(&names).iter().any(|c| !c.passed));
    }
}
