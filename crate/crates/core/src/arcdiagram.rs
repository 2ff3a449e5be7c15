//! The inductive arc diagram on a lifted quadruple.
//!
//! Spine slots are numbered `1..=2^{m+2}`. Each arc joins two slots and sits
//! above (`+1`) or below (`-1`) the spine. Two arcs cross exactly when they
//! share a side and their endpoints strictly interleave.

use std::collections::{BTreeMap, HashSet};
use std::ops::RangeInclusive;

use serde::Serialize;

use crate::aqcube::{adjacent_raw, dim_raw, DimLabel};
use crate::error::{Error, Result};

/// Default ambient dimension of the seed quadruple.
pub const DEFAULT_NETWORK_DIM: u32 = 5;

/// Which side of the spine an arc is drawn on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Side {
    Above,
    Below,
}

impl Side {
    pub fn sign(self) -> i32 {
        match self {
            Side::Above => 1,
            Side::Below => -1,
        }
    }

    pub fn flip(self) -> Side {
        match self {
            Side::Above => Side::Below,
            Side::Below => Side::Above,
        }
    }
}

/// An arc between spine slots `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Arc {
    pub lo: u32,
    pub hi: u32,
    pub side: Side,
    pub dim: DimLabel,
}

impl Arc {
    /// Whether slot `k` lies strictly inside the arc.
    pub fn covers(&self, k: u32) -> bool {
        self.lo < k && k < self.hi
    }

    pub fn crosses(&self, other: &Arc) -> bool {
        self.side == other.side
            && ((self.lo < other.lo && other.lo < self.hi && self.hi < other.hi)
                || (other.lo < self.lo && self.lo < other.hi && other.hi < self.hi))
    }
}

/// Named edge subsets of a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EdgeSubset {
    /// Every arc.
    All,
    /// Arcs inside the left half of the spine.
    Left,
    /// Arcs inside the right half.
    Right,
    /// Arcs joining the two halves.
    Cross,
    /// Arcs inside the `t`-th of eight equal intervals, `t` in `[1, 8]`.
    Interval(u32),
    /// Arcs not inside any single interval.
    Kernel,
}

/// The diagram on `2^{m+2}` spine slots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcDiagram {
    m: u32,
    network_dim: u32,
    arcs: Vec<Arc>,
}

fn p_slot(i: u32) -> u32 {
    if i % 2 == 1 {
        2 * i - 1
    } else {
        2 * i
    }
}

fn h_slot(i: u32) -> u32 {
    if i % 2 == 1 {
        2 * i
    } else {
        2 * i - 1
    }
}

fn key(a: u32, b: u32) -> (u32, u32) {
    (a.min(b), a.max(b))
}

/// The diagram at step `m` with the default seed dimension.
pub fn upsilon(m: u32) -> ArcDiagram {
    ArcDiagram::build(m, DEFAULT_NETWORK_DIM)
}

impl ArcDiagram {
    /// Builds the step-`m` diagram over a seed quadruple of AQ_{network_dim}.
    pub fn build(m: u32, network_dim: u32) -> Self {
        let nd = network_dim as i32;
        let mut arcs: BTreeMap<(u32, u32), (Side, i32)> = BTreeMap::from([
            ((1, 2), (Side::Below, -(nd - 2))),
            ((3, 4), (Side::Below, -(nd - 2))),
            ((1, 3), (Side::Above, -(nd - 3))),
            ((2, 4), (Side::Above, -(nd - 3))),
            ((1, 4), (Side::Above, nd - 2)),
            ((2, 3), (Side::Above, nd - 2)),
        ]);
        for level in 1..=m {
            // dimension of the new sibling pairs and of the crossed images
            let top = nd + level as i32 - 2;
            let slots = 1u32 << (level + 1);
            let mut next = BTreeMap::new();
            for i in 1..=slots {
                let partner = if i % 2 == 1 { i + 1 } else { i - 1 };
                let (side, _) = arcs[&key(i, partner)];
                next.insert((2 * i - 1, 2 * i), (side.flip(), -top));
            }
            for (&(k, l), &(side, d)) in &arcs {
                if l == k + 1 && k % 2 == 1 {
                    next.insert((2 * k - 1, 2 * l), (side, d));
                    next.insert((2 * k, 2 * l - 1), (side, d));
                    next.insert((2 * k - 1, 2 * l - 1), (side, top));
                    next.insert((2 * k, 2 * l), (side, top));
                } else {
                    let flip_pi = l == k + 2 && matches!(k % 4, 1 | 2);
                    let pi_side = if flip_pi { side.flip() } else { side };
                    next.insert(key(p_slot(k), p_slot(l)), (pi_side, d));
                    next.insert(key(h_slot(k), h_slot(l)), (side, d));
                }
            }
            arcs = next;
        }
        let arcs = arcs
            .into_iter()
            .map(|((lo, hi), (side, d))| Arc { lo, hi, side, dim: DimLabel(d) })
            .collect();
        Self { m, network_dim, arcs }
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn network_dim(&self) -> u32 {
        self.network_dim
    }

    /// Ambient dimension of the labelled vertices, `network_dim + m`.
    pub fn ambient_dim(&self) -> u32 {
        self.network_dim + self.m
    }

    pub fn spine_len(&self) -> u32 {
        1 << (self.m + 2)
    }

    /// Arcs sorted by `(lo, hi)`.
    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// Slots of the `t`-th interval, `t` in `[1, 8]`.
    pub fn interval(&self, t: u32) -> Result<RangeInclusive<u32>> {
        if self.m == 0 {
            return Err(Error::InvalidDimension { n: 0, reason: "intervals need m >= 1" });
        }
        if !(1..=8).contains(&t) {
            return Err(Error::IndexOutOfRange { index: t.into(), len: 8 });
        }
        let w = 1 << (self.m - 1);
        Ok((t - 1) * w + 1..=t * w)
    }

    fn interval_of(&self, k: u32) -> u32 {
        (k - 1) / (1 << (self.m - 1)) + 1
    }

    pub fn contains(&self, arc: &Arc, subset: EdgeSubset) -> Result<bool> {
        let half = self.spine_len() / 2;
        Ok(match subset {
            EdgeSubset::All => true,
            EdgeSubset::Left => arc.hi <= half,
            EdgeSubset::Right => arc.lo > half,
            EdgeSubset::Cross => arc.lo <= half && arc.hi > half,
            EdgeSubset::Interval(t) => {
                let r = self.interval(t)?;
                r.contains(&arc.lo) && r.contains(&arc.hi)
            }
            EdgeSubset::Kernel => {
                self.interval(1)?;
                self.interval_of(arc.lo) != self.interval_of(arc.hi)
            }
        })
    }

    pub fn select(&self, subset: EdgeSubset) -> Result<Vec<Arc>> {
        let mut out = Vec::new();
        for a in &self.arcs {
            if self.contains(a, subset)? {
                out.push(*a);
            }
        }
        Ok(out)
    }

    /// Total crossings among the selected arcs.
    pub fn crossings_of(&self, subset: EdgeSubset) -> Result<u64> {
        crossings(&self.select(subset)?, None)
    }

    pub fn cover_profile(&self, subset: EdgeSubset) -> Result<CoverProfile> {
        Ok(CoverProfile::of(self.spine_len(), &self.select(subset)?))
    }

    /// Per-interval totals of the above and below covering counts over all arcs.
    pub fn interval_sums(&self) -> Result<[(u64, u64); 8]> {
        let profile = self.cover_profile(EdgeSubset::All)?;
        let mut out = [(0, 0); 8];
        for (t, slot) in (1..=8).zip(out.iter_mut()) {
            for k in self.interval(t)? {
                slot.0 += profile.gamma(k);
                slot.1 += profile.xi(k);
            }
        }
        Ok(out)
    }

    /// Compares the arcs with the edges induced on a labelled spine of
    /// AQ_{ambient_dim}; returns the first disagreement.
    pub fn label_mismatch(&self, labels: &[u32]) -> Option<String> {
        if labels.len() != self.spine_len() as usize {
            return Some(format!("{} labels for {} slots", labels.len(), self.spine_len()));
        }
        let arcs: HashSet<(u32, u32)> = self.arcs.iter().map(|a| (a.lo, a.hi)).collect();
        for a in &self.arcs {
            let (x, y) = (labels[a.lo as usize - 1], labels[a.hi as usize - 1]);
            if !adjacent_raw(x, y) {
                return Some(format!("arc ({}, {}) joins non-adjacent {x}, {y}", a.lo, a.hi));
            }
            if dim_raw(x, y) != a.dim.0 {
                return Some(format!("arc ({}, {}) has dim {} but labels give {}", a.lo, a.hi, a.dim, dim_raw(x, y)));
            }
        }
        for (i, &x) in labels.iter().enumerate() {
            for (j, &y) in labels.iter().enumerate().skip(i + 1) {
                if adjacent_raw(x, y) && !arcs.contains(&(i as u32 + 1, j as u32 + 1)) {
                    return Some(format!("edge {x}-{y} at slots ({}, {}) has no arc", i + 1, j + 1));
                }
            }
        }
        None
    }
}

/// Slots at level `m + k` occupied by the lifts of slot `t`.
pub fn fiber(t: u64, k: u32) -> RangeInclusive<u64> {
    ((t - 1) << k) + 1..=t << k
}

/// Sum over the fiber of `t` of the covering counts, on `side`, by the
/// lifted images of the level-`m` arc `(i, j)` at level `m + k`.
pub fn lifted_cover_sum(m: u32, k: u32, i: u32, j: u32, t: u32, side: Side) -> Result<u64> {
    let len = 1u64 << (m + 2);
    for x in [i, j, t] {
        if x == 0 || u64::from(x) > len {
            return Err(Error::IndexOutOfRange { index: x.into(), len });
        }
    }
    let deep = upsilon(m + k);
    let (fi, fj) = (fiber(i.into(), k), fiber(j.into(), k));
    let lifted: Vec<Arc> = deep
        .arcs()
        .iter()
        .filter(|a| {
            let (lo, hi) = (u64::from(a.lo), u64::from(a.hi));
            a.side == side && ((fi.contains(&lo) && fj.contains(&hi)) || (fj.contains(&lo) && fi.contains(&hi)))
        })
        .copied()
        .collect();
    Ok(fiber(t.into(), k)
        .map(|s| lifted.iter().filter(|a| a.covers(s as u32)).count() as u64)
        .sum())
}

fn by_side(arcs: &[Arc]) -> [Vec<Arc>; 2] {
    let mut out = [Vec::new(), Vec::new()];
    for a in arcs {
        out[usize::from(a.side == Side::Below)].push(*a);
    }
    for v in &mut out {
        v.sort_unstable_by_key(|a| (a.lo, a.hi));
    }
    out
}

/// Arcs of `sorted` whose left end lies strictly inside `(lo, hi)`.
fn starting_inside(sorted: &[Arc], lo: u32, hi: u32) -> &[Arc] {
    let from = sorted.partition_point(|a| a.lo <= lo);
    let to = sorted.partition_point(|a| a.lo < hi);
    &sorted[from..to.max(from)]
}

/// Crossings within `a`, or between `a` and `b` when given.
///
/// Every same-side pair is tested for interleaving; sorting by left end
/// only skips pairs whose left ends already rule it out.
pub fn crossings(a: &[Arc], b: Option<&[Arc]>) -> Result<u64> {
    let Some(b) = b else {
        let mut total = 0;
        for side in by_side(a) {
            for x in &side {
                total += starting_inside(&side, x.lo, x.hi).iter().filter(|y| y.hi > x.hi).count() as u64;
            }
        }
        return Ok(total);
    };
    let keys: HashSet<(u32, u32)> = a.iter().map(|x| (x.lo, x.hi)).collect();
    if let Some(y) = b.iter().find(|y| keys.contains(&(y.lo, y.hi))) {
        return Err(Error::OverlappingSubsets { lo: y.lo, hi: y.hi });
    }
    let (sa, sb) = (by_side(a), by_side(b));
    let mut total = 0;
    for (xs, ys) in sa.iter().zip(&sb) {
        for x in xs {
            total += starting_inside(ys, x.lo, x.hi).iter().filter(|y| y.hi > x.hi).count() as u64;
        }
        for y in ys {
            total += starting_inside(xs, y.lo, y.hi).iter().filter(|x| x.hi > y.hi).count() as u64;
        }
    }
    Ok(total)
}

/// Per-slot incidence and covering counts of an arc set.
///
/// `alpha`/`beta` count incident arcs above/below; `gamma`/`xi` count arcs
/// above/below strictly covering the slot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverProfile {
    pub alpha: Vec<u64>,
    pub beta: Vec<u64>,
    pub gamma: Vec<u64>,
    pub xi: Vec<u64>,
}

impl CoverProfile {
    pub fn of(len: u32, arcs: &[Arc]) -> Self {
        let len = len as usize;
        let mut alpha = vec![0; len];
        let mut beta = vec![0; len];
        let mut diff = [vec![0i64; len + 1], vec![0i64; len + 1]];
        for a in arcs {
            let (lo, hi) = (a.lo as usize, a.hi as usize);
            let s = usize::from(a.side == Side::Below);
            let inc = if s == 0 { &mut alpha } else { &mut beta };
            inc[lo - 1] += 1;
            inc[hi - 1] += 1;
            // slots lo+1 ..= hi-1, zero-based lo ..= hi-2
            diff[s][lo] += 1;
            diff[s][hi - 1] -= 1;
        }
        let [up, down] = diff.map(|d| {
            d.iter()
                .take(len)
                .scan(0i64, |acc, x| {
                    *acc += x;
                    Some(*acc as u64)
                })
                .collect::<Vec<u64>>()
        });
        Self { alpha, beta, gamma: up, xi: down }
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn alpha(&self, k: u32) -> u64 {
        self.alpha[k as usize - 1]
    }

    pub fn beta(&self, k: u32) -> u64 {
        self.beta[k as usize - 1]
    }

    pub fn gamma(&self, k: u32) -> u64 {
        self.gamma[k as usize - 1]
    }

    pub fn xi(&self, k: u32) -> u64 {
        self.xi[k as usize - 1]
    }

    /// Total covering count above the spine.
    pub fn total_above(&self) -> u64 {
        self.gamma.iter().sum()
    }

    /// Total covering count below the spine.
    pub fn total_below(&self) -> u64 {
        self.xi.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{lift_spine, Part};

    fn naive(a: &[Arc], b: Option<&[Arc]>) -> u64 {
        match b {
            None => {
                let mut c = 0;
                for (i, x) in a.iter().enumerate() {
                    c += a[i + 1..].iter().filter(|y| x.crosses(y)).count() as u64;
                }
                c
            }
            Some(b) => a.iter().map(|x| b.iter().filter(|y| x.crosses(y)).count() as u64).sum(),
        }
    }

    #[test]
    fn base_diagram() {
        let d = upsilon(0);
        assert_eq!(d.arcs().len(), 6);
        let p = d.cover_profile(EdgeSubset::All).unwrap();
        assert_eq!((p.total_above(), p.total_below()), (4, 0));
        assert_eq!(d.crossings_of(EdgeSubset::All).unwrap(), 1);
    }

    #[test]
    fn arc_counts() {
        let want = [6, 20, 56, 144, 352, 832, 1920, 4352];
        for (m, &w) in want.iter().enumerate() {
            assert_eq!(upsilon(m as u32).arcs().len(), w);
        }
    }

    #[test]
    fn small_crossing_values() {
        assert_eq!(upsilon(1).crossings_of(EdgeSubset::All).unwrap(), 4);
        assert_eq!(upsilon(1).crossings_of(EdgeSubset::Cross).unwrap(), 2);
        assert_eq!(upsilon(3).crossings_of(EdgeSubset::All).unwrap(), 480);
        let d2 = upsilon(2);
        let h = d2.select(EdgeSubset::Cross).unwrap();
        let l = d2.select(EdgeSubset::Left).unwrap();
        assert_eq!(crossings(&h, Some(&l)).unwrap(), 24);
        assert_eq!(crossings(&h, Some(&[])).unwrap(), 0);
        assert_eq!(d2.crossings_of(EdgeSubset::All).unwrap(), 72);
    }

    #[test]
    fn fast_count_matches_naive() {
        for m in 0..=4 {
            let d = upsilon(m);
            assert_eq!(crossings(d.arcs(), None).unwrap(), naive(d.arcs(), None));
            if m > 0 {
                let h = d.select(EdgeSubset::Cross).unwrap();
                let r = d.select(EdgeSubset::Right).unwrap();
                assert_eq!(crossings(&h, Some(&r)).unwrap(), naive(&h, Some(&r)));
            }
        }
    }

    #[test]
    fn overlap_rejected() {
        let d = upsilon(1);
        assert!(matches!(crossings(d.arcs(), Some(d.arcs())), Err(Error::OverlappingSubsets { .. })));
    }

    #[test]
    fn additivity() {
        let d = upsilon(4);
        let [l, r, h] = [EdgeSubset::Left, EdgeSubset::Right, EdgeSubset::Cross].map(|s| d.select(s).unwrap());
        let parts = crossings(&l, None).unwrap()
            + crossings(&r, None).unwrap()
            + crossings(&h, None).unwrap()
            + crossings(&l, Some(&r)).unwrap()
            + crossings(&l, Some(&h)).unwrap()
            + crossings(&r, Some(&h)).unwrap();
        assert_eq!(parts, d.crossings_of(EdgeSubset::All).unwrap());
    }

    #[test]
    fn first_cover_table() {
        let p = upsilon(1).cover_profile(EdgeSubset::Cross).unwrap();
        assert_eq!(&p.alpha[..4], &[1, 2, 2, 1]);
        assert_eq!(&p.beta[..4], &[1, 0, 0, 1]);
        assert_eq!(&p.gamma[..4], &[0, 1, 3, 5]);
        assert_eq!(&p.xi[..4], &[0, 1, 1, 1]);
    }

    #[test]
    fn interval_sum_small() {
        let s = upsilon(1).interval_sums().unwrap();
        assert_eq!(s.map(|x| x.0), [0, 1, 3, 5, 5, 3, 1, 0]);
        assert_eq!(s.map(|x| x.1), [0, 3, 3, 1, 1, 3, 3, 0]);
        let s = upsilon(2).interval_sums().unwrap();
        assert_eq!(s.map(|x| x.0), [4, 10, 18, 24, 24, 18, 10, 4]);
        assert_eq!(s.map(|x| x.1), [2, 12, 12, 6, 6, 12, 12, 2]);
    }

    #[test]
    fn labels_match_arcs() {
        for m in 0..=5 {
            let d = upsilon(m);
            for p in Part::ALL {
                let labels = lift_spine(&p.column_seed(), 5, m).unwrap();
                assert_eq!(d.label_mismatch(&labels), None, "{p} at m = {m}");
            }
        }
    }

    #[test]
    fn dims_present() {
        for m in 0..=6 {
            let d = upsilon(m);
            let nd = d.network_dim() as i32;
            let top = nd + m as i32 - 2;
            let got: std::collections::BTreeSet<i32> = d.arcs().iter().map(|a| a.dim.0).collect();
            let want: std::collections::BTreeSet<i32> = (-top..=-(nd - 3)).chain(nd - 2..=top).collect();
            assert_eq!(got, want, "m = {m}");
            let sibling: Vec<(u32, u32)> = d.arcs().iter().filter(|a| a.dim.0 == -top).map(|a| (a.lo, a.hi)).collect();
            let pairs: Vec<(u32, u32)> = (1..=d.spine_len() / 2).map(|i| (2 * i - 1, 2 * i)).collect();
            assert_eq!(sibling, pairs);
        }
    }

    #[test]
    fn fiber_examples() {
        assert_eq!(fiber(1, 0), 1..=1);
        assert_eq!(fiber(3, 2), 9..=12);
    }

    #[test]
    fn lifted_cover_small() {
        for m in 0..=2u32 {
            let d = upsilon(m);
            for a in d.arcs().iter().filter(|a| a.hi > a.lo + 2) {
                for k in 1..=3u32 {
                    for t in 1..=d.spine_len() {
                        let want = if a.covers(t) {
                            1u64 << (2 * k)
                        } else if t == a.lo || t == a.hi {
                            (1u64 << (k - 1)) * ((1u64 << k) - 1)
                        } else {
                            0
                        };
                        let got = lifted_cover_sum(m, k, a.lo, a.hi, t, a.side).unwrap();
                        assert_eq!(got, want, "m={m} k={k} arc=({}, {}) t={t}", a.lo, a.hi);
                    }
                }
            }
        }
    }
}
