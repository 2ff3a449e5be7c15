//! Closed forms for crossing counts, evaluated exactly.
//!
//! Every function is generic over an [`ExactScalar`]. Counts that must be
//! integers are checked on evaluation.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::Check;
use crate::scalar::ExactScalar;
use crate::seqtables;

/// Largest `n` for which component assembly evaluates the inner sums from
/// the sequence tables; beyond it their closed forms are used.
pub const ASSEMBLY_TABLE_MAX: u32 = 20;

fn int<S: ExactScalar>(v: i64) -> S {
    S::from_i64(v)
}

fn p2<S: ExactScalar>(e: i64) -> S {
    S::pow2(e)
}

fn p4<S: ExactScalar>(e: i64) -> S {
    S::pow4(e)
}

fn choose2<S: ExactScalar>(m: S) -> S {
    m.clone() * (m - S::one()) / int(2)
}

/// Requires a nonnegative integer.
fn count<S: ExactScalar>(what: &str, n: i64, v: S) -> Result<S> {
    if !v.is_integral() || v.is_negative() {
        return Err(Error::NonIntegral { what: what.into(), n, value: v.to_string() });
    }
    Ok(v)
}

fn same<S: ExactScalar>(what: &str, n: i64, left: S, right: S) -> Result<S> {
    if left != right {
        return Err(Error::Mismatch { what: what.into(), n, left: left.to_string(), right: right.to_string() });
    }
    Ok(left)
}

/// Crossings among two bunches of `m` parallel curves: `C(m, 2)`.
pub fn bunch_crossings(m: u64) -> u128 {
    seqtables::choose2(m)
}

/// Total covering count above the spine at step `m`.
pub fn c_plus<S: ExactScalar>(m: u32) -> S {
    let m = i64::from(m);
    S::frac(7, 3) * p4(m + 1) - (int::<S>(2 * m) + S::frac(16, 3) + S::frac(7, 6) * S::parity(m + 1)) * p2(m)
}

/// Total covering count below the spine at step `m`.
pub fn c_minus<S: ExactScalar>(m: u32) -> S {
    let m = i64::from(m);
    S::frac(5, 3) * p4(m + 1) - (int::<S>(2 * m) + S::frac(13, 3) + S::frac(7, 6) * S::parity(m)) * p2(m)
}

/// Crossings among arcs joining the two halves, `m >= 1`.
pub fn nu_cross<S: ExactScalar>(m: u32) -> Option<S> {
    (m >= 1).then(|| int::<S>(6) * p4(i64::from(m) - 1) - p2(i64::from(m) + 1))
}

/// Crossings between half-joining arcs and left-half arcs, `m >= 2`.
pub fn nu_cross_left<S: ExactScalar>(m: u32) -> Option<S> {
    let mi = i64::from(m);
    match m {
        0 | 1 => None,
        2 => Some(int(24)),
        3 => Some(int(128)),
        _ => Some(
            S::frac(158, 3) * p4(mi - 2)
                - (int::<S>(8 * mi) + S::frac(38, 3) + S::frac(7, 3) * S::parity(mi - 1)) * p2(mi - 2),
        ),
    }
}

/// Crossings of the whole diagram, `m >= 3`.
pub fn nu_all<S: ExactScalar>(m: u32) -> Option<S> {
    let mi = i64::from(m);
    (m >= 3).then(|| {
        S::frac(194, 3) * p4(mi - 1)
            - (int::<S>(4 * mi * mi + 23 * mi) + S::frac(101, 3) - S::frac(7, 6) * S::parity(mi)) * p2(mi - 1)
    })
}

/// Crossings of the whole diagram by the doubling recurrence from the
/// value 4 at `m = 1`.
pub fn nu_all_by_recurrence<S: ExactScalar>(m: u32) -> Option<S> {
    if m == 0 {
        return None;
    }
    let mut v: S = int(4);
    for k in 2..=m {
        v = int::<S>(2) * v + int::<S>(2) * nu_cross_left::<S>(k)? + nu_cross::<S>(k)?;
    }
    Some(v)
}

/// Sum over the `t`-th interval of the covering counts above (`above =
/// true`) or below the spine, `m >= 1`, `t` in `[1, 8]`.
pub fn interval_sum<S: ExactScalar>(m: u32, t: u32, above: bool) -> Option<S> {
    if m == 0 || !(1..=8).contains(&t) {
        return None;
    }
    let g = (t.min(9 - t) - 1) as usize;
    let mi = i64::from(m);
    Some(match (m, above) {
        (1, true) => int([0, 1, 3, 5][g]),
        (1, false) => int([0, 3, 3, 1][g]),
        (2, true) => int([4, 10, 18, 24][g]),
        (2, false) => int([2, 12, 12, 6][g]),
        (_, true) => {
            let (c0, c1) = [(98, 13), (182, 19), (278, 19), (338, 13)][g];
            S::frac(c0, 3) * p4(mi - 3)
                - (int::<S>(2 * mi) + S::frac(c1, 3) + S::frac(7, 6) * S::parity(mi + 1)) * p2(mi - 3)
        }
        (_, false) => {
            let (c0, c1) = [(94, 16), (202, 10), (202, 10), (142, 16)][g];
            S::frac(c0, 3) * p4(mi - 3)
                - (int::<S>(2 * mi) + S::frac(c1, 3) + S::frac(7, 6) * S::parity(mi)) * p2(mi - 3)
        }
    })
}

/// Every closed form of the arc diagram at step `m`.
#[derive(Clone, Debug, PartialEq)]
pub struct DiagramForms<S> {
    pub m: u32,
    pub c_plus: S,
    pub c_minus: S,
    pub nu_cross: Option<S>,
    pub nu_cross_left: Option<S>,
    pub nu_all: Option<S>,
    /// Above/below interval sums for `t = 1..=8`, `m >= 1`.
    pub interval_sums: Option<Vec<(S, S)>>,
}

pub fn diagram_forms<S: ExactScalar>(m: u32) -> Result<DiagramForms<S>> {
    let mi = i64::from(m);
    let opt = |what: &str, v: Option<S>| v.map(|x| count(what, mi, x)).transpose();
    let interval_sums = if m == 0 {
        None
    } else {
        let mut sums = Vec::with_capacity(8);
        for t in 1..=8 {
            let up = count("interval sum above", mi, interval_sum::<S>(m, t, true).expect("m >= 1"))?;
            let down = count("interval sum below", mi, interval_sum::<S>(m, t, false).expect("m >= 1"))?;
            sums.push((up, down));
        }
        Some(sums)
    };
    Ok(DiagramForms {
        m,
        c_plus: count("covering total above", mi, c_plus(m))?,
        c_minus: count("covering total below", mi, c_minus(m))?,
        nu_cross: opt("half-joining crossings", nu_cross(m))?,
        nu_cross_left: opt("half-joining vs left crossings", nu_cross_left(m))?,
        nu_all: opt("diagram crossings", nu_all(m))?,
        interval_sums,
    })
}

/// The six edge-class pairings of the drawing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Component {
    Blue,
    Red,
    Black,
    RedBlack,
    BlueRed,
    BlueBlack,
}

impl Component {
    pub const ALL: [Component; 6] = [
        Component::Blue,
        Component::Red,
        Component::Black,
        Component::RedBlack,
        Component::BlueRed,
        Component::BlueBlack,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Component::Blue => "blue",
            Component::Red => "red",
            Component::Black => "black",
            Component::RedBlack => "red_black",
            Component::BlueRed => "blue_red",
            Component::BlueBlack => "blue_black",
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_n(n: u32) -> Result<()> {
    if n < 8 {
        return Err(Error::InvalidDimension { n, reason: "the drawing counts need n >= 8" });
    }
    Ok(())
}

/// Final closed form of one component.
pub fn component_closed<S: ExactScalar>(n: u32, which: Component) -> Result<S> {
    check_n(n)?;
    let ni = i64::from(n);
    let v = match which {
        Component::Blue => int::<S>(11) * p2(2 * ni - 13) + p2(ni - 3),
        Component::Red => int::<S>(71) * p2(2 * ni - 10) - int::<S>(5) * p2(ni - 4),
        Component::Black => {
            int::<S>(59) * p2(2 * ni - 8)
                - int::<S>(4 * ni * ni - 9 * ni - 6) * p2(ni - 3)
                - int::<S>(7) * S::parity(ni - 1) * p2(ni - 4)
        }
        Component::RedBlack => {
            int::<S>(389) * p2(2 * ni - 11) - int::<S>(ni - 1) * p2(ni) + int::<S>(7) * S::parity(ni - 1) * p2(ni - 5)
        }
        Component::BlueRed => int::<S>(19) * p2(2 * ni - 8) - int::<S>(3) * p2(ni - 3) - int(48),
        Component::BlueBlack => {
            S::frac(2737, 3) * p2(2 * ni - 12)
                - (int::<S>(8 * ni) - S::frac(14, 3) + S::frac(7, 6) * S::parity(ni)) * p2(ni - 3)
                - int(96 * ni)
                + int(768)
        }
    };
    count(which.name(), ni, v)
}

fn inner_sums<S: ExactScalar>(n: u32) -> Result<(S, S)> {
    if n <= ASSEMBLY_TABLE_MAX {
        Ok((S::from_i128(seqtables::blue_red_inner(n)?), S::from_i128(seqtables::blue_black_inner(n)?)))
    } else {
        Ok((S::from_i128(seqtables::blue_red_inner_closed(n)), S::from_i128(seqtables::blue_black_inner_closed(n))))
    }
}

/// Interval sums of the red-black assembly at step `m = n - 5`.
fn red_black_interval_term<S: ExactScalar>(m: u32) -> S {
    let up = |t| interval_sum::<S>(m, t, true).expect("m >= 3");
    let down = |t| interval_sum::<S>(m, t, false).expect("m >= 3");
    [6, 7, 8].into_iter().map(|t| up(t) + down(t)).fold(S::zero(), |a, b| a + b) + int::<S>(2) * down(5)
}

/// One component assembled from its sub-counts.
pub fn component_assembled<S: ExactScalar>(n: u32, which: Component) -> Result<S> {
    check_n(n)?;
    let ni = i64::from(n);
    let m = n - 5;
    let c = |e: i64| choose2::<S>(p2(e));
    let v = match which {
        Component::Blue => {
            int::<S>(2) * p2(ni - 3) + int::<S>(8) * (c(ni - 6) + c(ni - 7) + int::<S>(2) * c(ni - 8))
        }
        Component::Red => {
            let inner = c(ni - 6)
                + int::<S>(3) * p4(ni - 6)
                + c(ni - 4)
                + int::<S>(3) * p2(ni - 7) * p2(ni - 4)
                + p2::<S>(ni - 6) * p2(ni - 5);
            int::<S>(8) * inner + int::<S>(2) * p4(ni - 3)
        }
        Component::Black => {
            let nu = nu_all::<S>(m).expect("m >= 3");
            int::<S>(4) * (int::<S>(2) * nu + p2(ni - 4) + int::<S>(4) * c_minus(m))
        }
        Component::RedBlack => {
            let bunches = int::<S>(4) * choose2(int::<S>(3) * p2(ni - 7))
                + int::<S>(4) * c(ni - 7)
                + int::<S>(2) * c(ni - 6)
                + int::<S>(6) * p4(ni - 6);
            let straight = int::<S>(4) * p2(ni - 5) * p2(ni - 6) + int::<S>(6) * p2(ni - 4) * p2(ni - 7);
            int::<S>(8) * (red_black_interval_term::<S>(m) + bunches + straight + c_plus(m))
        }
        Component::BlueRed => {
            let (inner, _) = inner_sums::<S>(n)?;
            int::<S>(8) * (int::<S>(2) * choose2(int::<S>(3) * p2(ni - 6)) + int::<S>(2) * c(ni - 5) + inner)
        }
        Component::BlueBlack => {
            let (_, inner) = inner_sums::<S>(n)?;
            let up = |t| interval_sum::<S>(m, t, true).expect("m >= 3");
            let down = |t| interval_sum::<S>(m, t, false).expect("m >= 3");
            let vertical = c_minus::<S>(m) / int(2) + up(1) + up(2) + down(3) + down(4);
            int::<S>(8) * (c_plus::<S>(m) + inner + vertical)
        }
    };
    count(which.name(), ni, v)
}

/// One component; the assembly from sub-counts must match the closed form.
pub fn component<S: ExactScalar>(n: u32, which: Component) -> Result<S> {
    let closed = component_closed::<S>(n, which)?;
    let assembled = component_assembled::<S>(n, which)?;
    same(&format!("{which} assembly"), n.into(), assembled, closed)
}

/// The total in collapsed form.
pub fn total_collapsed<S: ExactScalar>(n: u32) -> Result<S> {
    check_n(n)?;
    let ni = i64::from(n);
    let v = S::frac(19367, 3) * p2(2 * ni - 13)
        - (int::<S>(8 * ni * ni + 14 * ni) - S::frac(71, 3)) * p2(ni - 4)
        - S::frac(7, 3) * S::parity(ni - 1) * p2(ni - 5)
        - int(96 * ni)
        + int(720);
    count("collapsed total", ni, v)
}

/// Total crossings of the drawing; the component sum must match the
/// collapsed form.
pub fn total<S: ExactScalar>(n: u32) -> Result<S> {
    let mut sum = S::zero();
    for which in Component::ALL {
        sum = sum + component::<S>(n, which)?;
    }
    same("component sum vs collapsed total", n.into(), sum, total_collapsed(n)?)
}

/// `(26/32)·4^n - (2n² + 7n/2 - 6)·2^{n-2}`.
pub fn upper_bound<S: ExactScalar>(n: u32) -> S {
    let ni = i64::from(n);
    S::frac(26, 32) * p4(ni) - (int::<S>(2 * ni * ni - 6) + S::frac(7 * ni, 2)) * p2(ni - 2)
}

/// Whether the drawing beats the bound strictly.
pub fn check_bound<S: ExactScalar>(n: u32) -> Result<bool> {
    Ok(total::<S>(n)? < upper_bound(n))
}

/// The chain `total < L1 < L2 < bound` of successively looser bounds.
pub fn bound_ladder<S: ExactScalar>(n: u32) -> Result<Vec<Check>> {
    let ni = i64::from(n);
    let t = total::<S>(n)?;
    let l1 = S::frac(19367, 3) * p2(2 * ni - 13) - (int::<S>(8 * ni * ni + 14 * ni) - S::frac(71, 3)) * p2(ni - 4);
    let l2 = int::<S>(807) * p4(ni - 5) - int::<S>(4 * ni * ni + 7 * ni - 12) * p2(ni - 3);
    let l3 = upper_bound::<S>(n);
    let step = |name: &str, lo: &S, hi: &S| Check {
        name: format!("{name} at n = {n}"),
        passed: lo < hi,
        expected: format!("< {hi}"),
        computed: lo.to_string(),
        counterexample: None,
    };
    Ok(vec![
        step("total below first relaxation", &t, &l1),
        step("first relaxation below second", &l1, &l2),
        step("second relaxation below bound", &l2, &l3),
    ])
}

/// `4^n / (5(1 + 2^{2-n})²) - (4n² + 4n + 17/5)·2^{n-1}`, `n >= 2`.
pub fn lower_bound<S: ExactScalar>(n: u32) -> Result<S> {
    if n < 2 {
        return Err(Error::InvalidDimension { n, reason: "the lower bound needs n >= 2" });
    }
    let ni = i64::from(n);
    let d = S::one() + p2::<S>(2 - ni);
    Ok(p4::<S>(ni) / (int::<S>(5) * d.clone() * d) - (int::<S>(4 * ni * ni + 4 * ni) + S::frac(17, 5)) * p2(ni - 1))
}

/// First `n` in the range with a positive lower bound.
pub fn first_positive_lower_bound<S: ExactScalar>(range: std::ops::RangeInclusive<u32>) -> Result<Option<u32>> {
    for n in range {
        if lower_bound::<S>(n)?.is_positive() {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// All six components, their total and the bound at one `n`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentBreakdown<S> {
    pub n: u32,
    pub components: [S; 6],
    pub total: S,
    pub bound: S,
    pub slack: S,
    pub lower_bound: S,
}

impl<S: ExactScalar> ComponentBreakdown<S> {
    pub fn compute(n: u32) -> Result<Self> {
        let mut components: [S; 6] = std::array::from_fn(|_| S::zero());
        for (slot, which) in components.iter_mut().zip(Component::ALL) {
            *slot = component::<S>(n, which)?;
        }
        let total = total::<S>(n)?;
        let bound = upper_bound::<S>(n);
        let slack = bound.clone() - total.clone();
        Ok(Self { n, components, total, bound, slack, lower_bound: lower_bound(n)? })
    }

    pub fn get(&self, which: Component) -> &S {
        &self.components[which as usize]
    }

    /// Column names of [`ComponentBreakdown::row`].
    pub const HEADER: [&'static str; 11] = [
        "n",
        "blue",
        "red",
        "black",
        "red_black",
        "blue_red",
        "blue_black",
        "total",
        "upper_bound",
        "slack",
        "lower_bound",
    ];

    /// Every value as an exact decimal (or `p/q`) string.
    pub fn row(&self) -> Vec<String> {
        let mut out = vec![self.n.to_string()];
        out.extend(self.components.iter().map(ToString::to_string));
        out.extend([&self.total, &self.bound, &self.slack, &self.lower_bound].map(ToString::to_string));
        out
    }
}

/// Whether a small-case value is exact or only an upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Certainty {
    Exact,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SmallCase {
    pub n: u32,
    pub crossings: u64,
    pub certainty: Certainty,
}

/// Known crossing numbers and drawing upper bounds for `n <= 7`.
pub fn small_cases() -> Vec<SmallCase> {
    use Certainty::*;
    [(1, 0, Exact), (2, 0, Exact), (3, 4, Exact), (4, 46, Upper), (5, 328, Upper), (6, 1848, Upper), (7, 9112, Upper)]
        .into_iter()
        .map(|(n, crossings, certainty)| SmallCase { n, crossings, certainty })
        .collect()
}
