//! Covering sequences along the `U_1` column and the two inner sums of
//! the blue crossings.
//!
//! `t'` and `t` are measured on the black drawing. `s` starts from a fixed
//! table at n = 8 and is propagated by its doubling recurrences; `t` is
//! propagated the same way as a cross-check of the measured values.

use std::io::Write;

use serde::Serialize;

use crate::blacklayout::{layout_black, BlackLayout};
use crate::error::{Error, Result};
use crate::partition::Part;
use crate::report::Check;

/// `s_{8,j}` for `j` in `[1, 17]`.
pub const S8: [u64; 17] = [22, 20, 18, 16, 14, 12, 10, 10, 10, 8, 6, 6, 6, 6, 6, 6, 6];

/// `t_{8,j}` for `j` in `[1, 17]`.
pub const T8: [u64; 17] = [0, 10, 16, 22, 24, 30, 32, 34, 32, 38, 40, 42, 40, 42, 40, 38, 32];

/// Largest `n` for which tables are built.
pub const MAX_TABLE_N: u32 = 30;

fn check_n(n: u32) -> Result<()> {
    if !(8..=MAX_TABLE_N).contains(&n) {
        return Err(Error::InvalidDimension { n, reason: "sequence tables need 8 <= n <= 30" });
    }
    Ok(())
}

/// 1-based access into a sequence stored 0-based.
#[inline]
fn at(seq: &[u64], j: usize) -> u64 {
    seq[j - 1]
}

/// One doubling step: odd entries double, even entries add neighbours
/// plus `extra`.
fn lift(prev: &[u64], extra: u64) -> Vec<u64> {
    let h = prev.len() - 1;
    let mut out = vec![0; 2 * h + 1];
    for j in 1..=h + 1 {
        out[2 * j - 2] = 2 * at(prev, j);
    }
    for j in 1..=h {
        out[2 * j - 1] = at(prev, j) + at(prev, j + 1) + extra;
    }
    out
}

fn propagate(base: &[u64], n: u32, extra: u64) -> Vec<u64> {
    (9..=n).fold(base.to_vec(), |seq, _| lift(&seq, extra))
}

/// `s_{n,j}` for `j` in `[1, 2^{n-4}+1]`.
pub fn s_table(n: u32) -> Result<Vec<u64>> {
    check_n(n)?;
    Ok(propagate(&S8, n, 0))
}

/// `t_{n,j}` propagated from the n = 8 table.
pub fn t_from_recurrence(n: u32) -> Result<Vec<u64>> {
    check_n(n)?;
    Ok(propagate(&T8, n, 2))
}

/// Per-index covering counts along the first half of the `U_1` column.
///
/// `varpi[j]` counts arcs spanning `u_{1,j}`; `up[j]` counts arcs at
/// `u_{1,j}` leading to a smaller index, `down[j]` to a larger one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverWalk {
    pub varpi: Vec<u64>,
    pub up: Vec<u64>,
    pub down: Vec<u64>,
}

impl CoverWalk {
    /// Walk over the internal arcs of `U_1`, optionally adding the straight
    /// edges at `U_1` (which span no `U_1` vertex).
    pub fn measure(layout: &BlackLayout, with_straight: bool) -> Self {
        let h = layout.names().len() / 2;
        let mut varpi = vec![0i64; h + 2];
        let mut up = vec![0; h];
        let mut down = vec![0; h];
        let mut count = |x: usize, y: usize, spans: bool| {
            if spans && x + 1 < y && x < h {
                varpi[x + 1] += 1;
                varpi[y.min(h + 1)] -= 1;
            }
            if y <= h {
                up[y - 1] += 1;
            }
            if x <= h {
                down[x - 1] += 1;
            }
        };
        for (x, y, _) in layout.arcs_by_index(Part::U1) {
            count(x, y, true);
        }
        if with_straight {
            for e in layout.straight_of_pair(1).filter(|e| !e.is_level()) {
                // a slanted edge leaves u_{1,j} toward the height of v_{1,k}
                let (x, y) = (e.u_index.min(e.v_index), e.u_index.max(e.v_index));
                if e.u_index == y {
                    if y <= h {
                        up[y - 1] += 1;
                    }
                } else if x <= h {
                    down[x - 1] += 1;
                }
            }
        }
        let mut acc = 0;
        let varpi = (1..=h)
            .map(|j| {
                acc += varpi[j];
                acc as u64
            })
            .collect();
        Self { varpi, up, down }
    }
}

/// `t'_{n,j}` measured on the internal arcs of `U_1`, `j` in `[1, 2^{n-4}+1]`.
pub fn t_prime_of(layout: &BlackLayout) -> Vec<u64> {
    let w = CoverWalk::measure(layout, false);
    let h = w.varpi.len();
    let mut out: Vec<u64> = (0..h).map(|j| w.varpi[j] + w.up[j]).collect();
    out.push(w.varpi[h - 1] + w.down[h - 1]);
    out
}

/// `t_{n,j}` measured on the internal arcs plus the straight edges of `U_1`.
pub fn t_measured_of(layout: &BlackLayout) -> Vec<u64> {
    let w = CoverWalk::measure(layout, true);
    let h = w.varpi.len();
    let mut out: Vec<u64> = (0..h).map(|j| w.varpi[j] + w.up[j]).collect();
    out.push(w.varpi[h - 1] + w.down[h - 1]);
    out
}

pub fn t_prime(n: u32) -> Result<Vec<u64>> {
    check_n(n)?;
    Ok(t_prime_of(&layout_black(n)?))
}

/// `t_{n,j}`, measured on the drawing and propagated from the n = 8 table;
/// the two must agree.
pub fn t_table(n: u32) -> Result<Vec<u64>> {
    check_n(n)?;
    t_table_of(&layout_black(n)?)
}

pub fn t_table_of(layout: &BlackLayout) -> Result<Vec<u64>> {
    let n = layout.n();
    check_n(n)?;
    let measured = t_measured_of(layout);
    let propagated = t_from_recurrence(n)?;
    if measured != propagated {
        let j = measured.iter().zip(&propagated).position(|(a, b)| a != b).unwrap_or(0) + 1;
        return Err(Error::Mismatch {
            what: format!("t at j = {j}"),
            n: n.into(),
            left: at(&measured, j).to_string(),
            right: at(&propagated, j).to_string(),
        });
    }
    Ok(measured)
}

/// The three sequences at one `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeqTable {
    pub n: u32,
    pub s: Vec<u64>,
    pub t: Vec<u64>,
    pub t_prime: Vec<u64>,
}

impl SeqTable {
    pub fn build(n: u32) -> Result<Self> {
        check_n(n)?;
        let layout = layout_black(n)?;
        Ok(Self { n, s: s_table(n)?, t: t_table_of(&layout)?, t_prime: t_prime_of(&layout) })
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// Writes `j,s,t,t_prime` rows.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["j", "s", "t", "t_prime"])?;
        for j in 0..self.len() {
            out.serialize((j + 1, self.s[j], self.t[j], self.t_prime[j]))?;
        }
        out.flush()?;
        Ok(())
    }
}

/// Checks the closed identities at the indices `j·2^{n-7}`, `+1`, `+2`
/// and the two sum identities.
pub fn special_index_identities(n: u32) -> Result<Vec<Check>> {
    let s = s_table(n)?;
    let t = t_from_recurrence(n)?;
    let a = 1usize << (n - 7);
    let r = 1u64 << (n - 8);
    let shift = 2 * u64::from(n - 8);
    let s8 = |j: usize| S8[j - 1];
    let t8 = |j: usize| T8[j - 1];
    let first = |seq: &[u64], want: &dyn Fn(usize) -> u64, js: std::ops::RangeInclusive<usize>, off: usize| {
        js.clone()
            .find(|&j| at(seq, j * a + off) != want(j))
            .map(|j| format!("j = {j}: {} vs {}", at(seq, j * a + off), want(j)))
    };
    let mut rows = vec![
        Check::holds("s at j*2^(n-7)+1", first(&s, &|j| r * s8(2 * j + 1), 0..=8, 1)),
        Check::holds("s at j*2^(n-7)", first(&s, &|j| s8(2 * j) + (r - 1) * s8(2 * j + 1), 1..=8, 0)),
        Check::holds("s at j*2^(n-7)+2", first(&s, &|j| (r - 1) * s8(2 * j + 1) + s8(2 * j + 2), 1..=7, 2)),
        Check::holds("t at j*2^(n-7)+1", first(&t, &|j| r * t8(2 * j + 1), 0..=8, 1)),
        Check::holds("t at j*2^(n-7)", first(&t, &|j| t8(2 * j) + (r - 1) * t8(2 * j + 1) + shift, 1..=8, 0)),
        Check::holds(
            "t at j*2^(n-7)+2",
            first(&t, &|j| (r - 1) * t8(2 * j + 1) + t8(2 * j + 2) + shift, 1..=7, 2),
        ),
    ];
    // sum of s: 4^{n-8}·182 - 7·2^{2n-15} + 7·2^{n-7}, scaled by 2^15
    let sum_s: u128 = s.iter().map(|&x| u128::from(x)).sum();
    let lhs = sum_s << 15;
    let rhs = (182u128 << (2 * (n - 8) + 15)) + (7u128 << (n + 8)) - (7u128 << (2 * n));
    rows.push(Check::equal("sum of s", rhs >> 15, lhs >> 15));
    let sum_t: u128 = t.iter().map(|&x| u128::from(x)).sum();
    rows.push(Check::equal("sum of t", 512u128 << (2 * (n - 8)), sum_t));
    Ok(rows)
}

/// Where the blue bunches entering `U_1` run, and which way each slanted
/// blue arc of the first half is drawn.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlueRoutingPlan {
    pub n: u32,
    /// `(index, multiplicity)` pairs.
    pub targets: Vec<(usize, u64)>,
    /// For `j` in `[1, 2^{n-4}]`: whether the arc from `v_{1,j}` runs above
    /// the line of `u_{1,j}`.
    pub above: Vec<bool>,
}

impl BlueRoutingPlan {
    pub fn new(n: u32) -> Result<Self> {
        check_n(n)?;
        let a = 1usize << (n - 7);
        let p = |k: u32| 1u64 << (n - k);
        let targets = vec![(1, p(5)), (4 * a + 1, p(7)), (5 * a + 1, p(8)), (6 * a + 1, p(8)), (8 * a + 1, p(6))];
        let below = |j: usize| matches!(j / a, 2..=6) && j.is_multiple_of(a) || (6 * a + 2..=8 * a).contains(&j);
        let above = (1..=8 * a).map(|j| !below(j)).collect();
        Ok(Self { n, targets, above })
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.targets.iter().map(|&(_, m)| m).sum()
    }

    /// Sum over `j` of the sequence at `j` (arc above) or `j + 1` (below),
    /// plus the bunches weighted by the sequence at their targets.
    pub fn routed_sum(&self, seq: &[u64]) -> i128 {
        let along: i128 = self
            .above
            .iter()
            .enumerate()
            .map(|(k, &up)| i128::from(at(seq, if up { k + 1 } else { k + 2 })))
            .sum();
        let bunches: i128 = self.targets.iter().map(|&(j, m)| i128::from(m) * i128::from(at(seq, j))).sum();
        along + bunches
    }
}

/// `C(m, 2)`.
pub fn choose2(m: u64) -> u128 {
    let m = u128::from(m);
    m * m.saturating_sub(1) / 2
}

/// Crossings among the parallel blue bunches beside `U_1`.
pub fn blue_bunch_term(n: u32) -> u128 {
    2 * choose2(1 << (n - 7)) + 4 * choose2(1 << (n - 8)) + 2 * choose2(1 << (n - 6))
}

/// `25·2^{2n-12} + 2^{n-5} - 6`.
pub fn blue_red_inner_closed(n: u32) -> i128 {
    25 * (1i128 << (2 * n - 12)) + (1i128 << (n - 5)) - 6
}

/// `403·2^{2n-15} - 3·2^{n-4} - 12n + 96`.
pub fn blue_black_inner_closed(n: u32) -> i128 {
    403 * (1i128 << (2 * n - 15)) - 3 * (1i128 << (n - 4)) - 12 * i128::from(n) + 96
}

fn agree(what: &str, n: u32, got: i128, want: i128) -> Result<i128> {
    if got != want {
        return Err(Error::Mismatch { what: what.into(), n: n.into(), left: got.to_string(), right: want.to_string() });
    }
    Ok(got)
}

/// Inner blue×red sum evaluated from the `s` table.
pub fn blue_red_inner(n: u32) -> Result<i128> {
    let plan = BlueRoutingPlan::new(n)?;
    let got = plan.routed_sum(&s_table(n)?);
    agree("blue-red inner sum", n, got, blue_red_inner_closed(n))
}

/// Inner blue×black sum evaluated from the `t` table and the bunch term.
pub fn blue_black_inner(n: u32) -> Result<i128> {
    let plan = BlueRoutingPlan::new(n)?;
    let got = plan.routed_sum(&t_from_recurrence(n)?) + blue_bunch_term(n) as i128;
    agree("blue-black inner sum", n, got, blue_black_inner_closed(n))
}

/// Inner blue×black sum using the `t` table measured on the drawing.
pub fn blue_black_inner_measured(layout: &BlackLayout) -> Result<i128> {
    let n = layout.n();
    let plan = BlueRoutingPlan::new(n)?;
    let got = plan.routed_sum(&t_table_of(layout)?) + blue_bunch_term(n) as i128;
    agree("blue-black inner sum", n, got, blue_black_inner_closed(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// The inner sum in its collapsed index form.
    fn collapsed(seq: &[u64], n: u32) -> i128 {
        let a = 1usize << (n - 7);
        let s = |j: usize| i128::from(at(seq, j));
        let p = |k: u32| 1i128 << (n - k);
        let mut v: i128 = seq.iter().map(|&x| i128::from(x)).sum();
        v += (2..=6).map(|j| s(j * a + 1) - s(j * a)).sum::<i128>();
        v -= s(6 * a + 2);
        v + p(5) * s(1) + p(7) * s(4 * a + 1) + p(8) * s(5 * a + 1) + p(8) * s(6 * a + 1) + p(6) * s(8 * a + 1)
    }

    #[test]
    fn s_examples() {
        let s9 = s_table(9).unwrap();
        assert_eq!((s9[0], s9[1]), (44, 42));
        assert_eq!(s_table(8).unwrap().iter().sum::<u64>(), 182);
        assert_eq!(s9.len(), 33);
    }

    #[test]
    fn t_examples() {
        let t9 = t_from_recurrence(9).unwrap();
        assert_eq!((t9[1], t9[2]), (12, 20));
        let tp = t_prime(8).unwrap();
        assert_eq!((tp[0], tp[1]), (0, 9));
        assert_eq!(t_table(8).unwrap(), T8.to_vec());
    }

    #[test]
    fn parity_rule() {
        let layout = layout_black(9).unwrap();
        let tp = t_prime_of(&layout);
        let t = t_measured_of(&layout);
        let h = tp.len() - 1;
        for j in 1..=h + 1 {
            let bump = u64::from(j % 2 == 0 && j <= h);
            assert_eq!(at(&t, j), at(&tp, j) + bump, "j = {j}");
        }
    }

    #[test]
    fn shift_identity() {
        let layout = layout_black(10).unwrap();
        let w = CoverWalk::measure(&layout, true);
        let t = t_measured_of(&layout);
        for j in 1..w.varpi.len() {
            assert_eq!(at(&t, j + 1), w.varpi[j - 1] + w.down[j - 1], "j = {j}");
        }
    }

    #[test]
    fn plan_multiplicities() {
        for n in 8..=16 {
            assert_eq!(BlueRoutingPlan::new(n).unwrap().total_multiplicity(), 1 << (n - 4));
        }
    }

    #[test]
    fn routed_matches_collapsed() {
        for n in 8..=14 {
            let plan = BlueRoutingPlan::new(n).unwrap();
            let s = s_table(n).unwrap();
            assert_eq!(plan.routed_sum(&s), collapsed(&s, n));
        }
    }

    #[test]
    fn inner_examples() {
        assert_eq!(blue_red_inner(8).unwrap(), 402);
        assert_eq!(blue_red_inner(9).unwrap(), 1610);
        assert_eq!(blue_red_inner(10).unwrap(), 6426);
        assert_eq!(blue_black_inner(8).unwrap(), 758);
        assert_eq!(blue_black_inner(9).unwrap(), 3116);
        assert_eq!(blue_bunch_term(8), 14);
    }

    #[test]
    fn identities_hold() {
        for n in 8..=16 {
            for row in special_index_identities(n).unwrap() {
                assert!(row.passed, "n = {n}: {row}");
            }
        }
        let s = s_table(12).unwrap();
        assert_eq!(s[0], (1 << 4) * 22);
        let t = t_from_recurrence(12).unwrap();
        assert_eq!(*t.last().unwrap(), (1 << 4) * 32);
    }

    #[test]
    fn csv_export() {
        let mut buf = Vec::new();
        SeqTable::build(8).unwrap().write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("j,s,t,t_prime"));
        assert_eq!(text.lines().nth(2), Some("2,20,10,9"));
        assert_eq!(text.lines().count(), 18);
    }

    #[test]
    fn range_checked() {
        assert!(s_table(7).is_err());
        assert!(BlueRoutingPlan::new(7).is_err());
    }
}
