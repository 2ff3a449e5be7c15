//! The black sub-drawing: eight arc-diagram columns joined by straight
//! edges of dimension `±(n-1)`.
//!
//! Column `U_i` and its partner `V_i` stand side by side. Vertices named
//! `u_{i,j}` and `v_{i,j}` sit at the same height, which decreases with
//! `j`. Arcs of a column bulge to the left or right of its vertical line
//! but never reach a neighbouring column.

use std::collections::HashMap;

use serde::Serialize;

use crate::aqcube::{adjacent_raw, dim_raw, DimLabel};
use crate::arcdiagram::{crossings, upsilon, Arc, ArcDiagram, CoverProfile, Side};
use crate::error::{Error, Result};
use crate::partition::{canonical_names, CanonicalNames, Part};

/// Side of every column facing its partner column.
pub const FACING: Side = Side::Below;

/// A straight edge between `u_{i,j}` and `v_{i,k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StraightEdge {
    pub pair: usize,
    pub u_index: usize,
    pub v_index: usize,
    pub dim: DimLabel,
}

impl StraightEdge {
    pub fn is_level(&self) -> bool {
        self.u_index == self.v_index
    }

    /// Two edges of the same pair cross when their height orders disagree.
    pub fn crosses(&self, other: &StraightEdge) -> bool {
        let du = self.u_index as i64 - other.u_index as i64;
        let dv = self.v_index as i64 - other.v_index as i64;
        self.pair == other.pair && du * dv < 0
    }
}

/// One column of the drawing.
#[derive(Clone, Debug, Serialize)]
pub struct Column {
    pub part: Part,
    pub x: i32,
    /// `+1` for the upper half-plane, `-1` for the lower.
    pub y_sign: i32,
    pub facing: Side,
}

#[derive(Clone, Debug)]
pub struct BlackLayout {
    n: u32,
    diagram: ArcDiagram,
    names: CanonicalNames,
    columns: Vec<Column>,
    straight: Vec<StraightEdge>,
}

impl BlackLayout {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// The diagram shared by all eight columns.
    pub fn diagram(&self) -> &ArcDiagram {
        &self.diagram
    }

    pub fn names(&self) -> &CanonicalNames {
        &self.names
    }

    pub fn columns(&self) -> &[Column] {
        &self.columns
    }

    pub fn straight_edges(&self) -> &[StraightEdge] {
        &self.straight
    }

    pub fn straight_of_pair(&self, i: usize) -> impl Iterator<Item = &StraightEdge> {
        self.straight.iter().filter(move |e| e.pair == i)
    }

    /// Arcs of part `p` with endpoints given as name indices `j`.
    pub fn arcs_by_index(&self, p: Part) -> Vec<(usize, usize, Side)> {
        self.diagram
            .arcs()
            .iter()
            .map(|a| {
                let x = self.names.index_of_slot(p, a.lo as usize);
                let y = self.names.index_of_slot(p, a.hi as usize);
                (x.min(y), x.max(y), a.side)
            })
            .collect()
    }
}

/// Builds the black drawing of AQ_n, `n >= 5`.
///
/// Every column is checked against the graph: its arcs must be exactly the
/// edges induced on the part. Straight edges are read off the graph.
pub fn layout_black(n: u32) -> Result<BlackLayout> {
    let names = canonical_names(n)?;
    let diagram = upsilon(n - 5);
    for p in Part::ALL {
        if let Some(why) = diagram.label_mismatch(names.spine(p)) {
            return Err(Error::Mismatch {
                what: format!("column {p} against the graph"),
                n: n.into(),
                left: why,
                right: "induced edges".into(),
            });
        }
    }
    let columns = Part::ALL
        .iter()
        .map(|&p| Column { part: p, x: p.x_position(), y_sign: p.y_anchors()[0].signum(), facing: FACING })
        .collect();

    let mut straight = Vec::new();
    for i in 1..=4 {
        let v_index: HashMap<u32, usize> = names.names(Part::v(i)).into_iter().zip(1..).collect();
        for j in 1..=names.len() {
            let u = names.u(i, j);
            for d in [-(n as i32 - 1), n as i32 - 1] {
                let mask = if d > 0 { 1 << (d - 1) } else { (1u32 << -d) - 1 };
                let v = u ^ mask;
                debug_assert!(adjacent_raw(u, v) && dim_raw(u, v) == d);
                let k = *v_index.get(&v).ok_or_else(|| Error::Mismatch {
                    what: format!("straight edge at u({i},{j})"),
                    n: n.into(),
                    left: format!("neighbour {v}"),
                    right: format!("a vertex of V{i}"),
                })?;
                straight.push(StraightEdge { pair: i, u_index: j, v_index: k, dim: DimLabel(d) });
            }
        }
    }
    Ok(BlackLayout { n, diagram, names, columns, straight })
}

/// Crossings contributed by one column pair.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PairCount {
    pub internal_u: u64,
    pub internal_v: u64,
    pub straight_straight: u64,
    pub straight_arc_u: u64,
    pub straight_arc_v: u64,
}

impl PairCount {
    pub fn total(&self) -> u64 {
        self.internal_u + self.internal_v + self.straight_straight + self.straight_arc_u + self.straight_arc_v
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlackBreakdown {
    pub n: u32,
    pub pairs: [PairCount; 4],
    pub total: u64,
}

fn straight_arc(layout: &BlackLayout, p: Part, profile: &CoverProfile) -> u64 {
    let names = layout.names();
    layout
        .straight_of_pair(p.index())
        .map(|e| {
            let j = if p.is_u() { e.u_index } else { e.v_index };
            let slot = names.slot_of(p, j) as u32;
            match FACING {
                Side::Above => profile.gamma(slot),
                Side::Below => profile.xi(slot),
            }
        })
        .sum()
}

/// Counts the crossings of the black drawing.
pub fn count_black(layout: &BlackLayout) -> Result<BlackBreakdown> {
    let arcs: &[Arc] = layout.diagram().arcs();
    let internal = crossings(arcs, None)?;
    let profile = CoverProfile::of(layout.diagram().spine_len(), arcs);
    let mut pairs = [PairCount::default(); 4];
    for (i, slot) in (1..=4).zip(pairs.iter_mut()) {
        let edges: Vec<&StraightEdge> = layout.straight_of_pair(i).collect();
        let mut straight_straight = 0;
        for (a, e) in edges.iter().enumerate() {
            straight_straight += edges[a + 1..].iter().filter(|f| e.crosses(f)).count() as u64;
        }
        *slot = PairCount {
            internal_u: internal,
            internal_v: internal,
            straight_straight,
            straight_arc_u: straight_arc(layout, Part::u(i), &profile),
            straight_arc_v: straight_arc(layout, Part::v(i), &profile),
        };
    }
    let total = pairs.iter().map(PairCount::total).sum();
    Ok(BlackBreakdown { n: layout.n(), pairs, total })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn straight_edges_shape() {
        let layout = layout_black(8).unwrap();
        let big = layout.names().len();
        assert_eq!(layout.straight_edges().len(), 4 * 2 * big);
        for i in 1..=4 {
            let level = layout.straight_of_pair(i).filter(|e| e.is_level()).count();
            assert_eq!(level, big);
            for e in layout.straight_of_pair(i).filter(|e| !e.is_level()) {
                let partner = if e.u_index % 2 == 1 { e.u_index + 1 } else { e.u_index - 1 };
                assert_eq!(e.v_index, partner);
                assert_eq!(e.dim.0, 7);
            }
        }
    }

    #[test]
    fn eight_breakdown() {
        let layout = layout_black(8).unwrap();
        let b = count_black(&layout).unwrap();
        assert_eq!(b.total, 9408);
        let cm: u64 = CoverProfile::of(layout.diagram().spine_len(), layout.diagram().arcs()).total_below();
        for p in b.pairs {
            assert_eq!(p, b.pairs[0]);
            assert_eq!(p.straight_straight, 1 << 4);
            assert_eq!(p.straight_arc_u, 2 * cm);
            assert_eq!(p.internal_u, crossings(layout.diagram().arcs(), None).unwrap());
        }
    }

    #[test]
    fn nine_total() {
        assert_eq!(count_black(&layout_black(9).unwrap()).unwrap().total, 44800);
    }

    #[test]
    fn opposite_facing_disagrees() {
        // facing the other way would count covers above the spine instead
        let layout = layout_black(8).unwrap();
        let profile = CoverProfile::of(layout.diagram().spine_len(), layout.diagram().arcs());
        assert_ne!(profile.total_above(), profile.total_below());
    }
}
