//! The augmented cube AQ_n.
//!
//! Vertices are n-bit labels `a_n a_{n-1} ... a_1` stored as unsigned
//! integers, bit 1 being the least significant. Two vertices are adjacent
//! when they differ in exactly one bit, or in exactly the bits `1..=t` for
//! some `t >= 2`. Every edge carries a signed dimension label.

use std::collections::BTreeSet;
use std::fmt;
use std::io::Write;

use serde::Serialize;

use crate::error::{Error, Result};

/// Largest supported ambient dimension.
pub const MAX_DIM: u32 = 30;

pub(crate) fn check_dim(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidDimension { n, reason: "must be at least 1" });
    }
    if n > MAX_DIM {
        return Err(Error::InvalidDimension { n, reason: "exceeds the supported maximum" });
    }
    Ok(())
}

/// An n-bit vertex label with its ambient dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VertexLabel {
    value: u32,
    n: u32,
}

impl VertexLabel {
    pub fn new(value: u32, n: u32) -> Result<Self> {
        check_dim(n)?;
        if u64::from(value) >= 1u64 << n {
            return Err(Error::VertexOutOfRange { value: value.into(), n });
        }
        Ok(Self { value, n })
    }

    /// Parses a label written most significant bit first, e.g. `"00100"`.
    pub fn from_bits(s: &str) -> Result<Self> {
        let n = u32::try_from(s.len()).map_err(|_| Error::BadBitString(s.into()))?;
        if n == 0 || !s.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::BadBitString(s.into()));
        }
        check_dim(n)?;
        let value = u32::from_str_radix(s, 2).map_err(|_| Error::BadBitString(s.into()))?;
        Self::new(value, n)
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn n(self) -> u32 {
        self.n
    }

    /// Bit `i` of the label, defined for `i` in `[1, n]`.
    pub fn theta(self, i: u32) -> Option<u8> {
        (1..=self.n).contains(&i).then(|| ((self.value >> (i - 1)) & 1) as u8)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:0width$b}", self.value, width = self.n as usize)
    }
}

/// Signed edge dimension. Zero only for a vertex paired with itself.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DimLabel(pub i32);

impl DimLabel {
    pub fn get(self) -> i32 {
        self.0
    }

    /// Whether this label names an edge direction of AQ_n.
    pub fn is_edge_dim(self, n: u32) -> bool {
        let n = n as i32;
        (1..=n).contains(&self.0) || (-n..=-2).contains(&self.0)
    }
}

impl fmt::Display for DimLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Dimension label of a pair of raw labels. Does not imply adjacency.
#[inline]
pub fn dim_raw(a: u32, b: u32) -> i32 {
    let x = a ^ b;
    if x == 0 {
        return 0;
    }
    let t = 32 - x.leading_zeros();
    if t == 1 || (x >> (t - 2)) & 1 == 0 {
        t as i32
    } else {
        -(t as i32)
    }
}

/// Direct adjacency rule on raw labels.
#[inline]
pub fn adjacent_raw(a: u32, b: u32) -> bool {
    let x = a ^ b;
    if x == 0 {
        return false;
    }
    if x & (x - 1) == 0 {
        return true;
    }
    // all-ones mask 1..t with t >= 2
    x & x.wrapping_add(1) == 0
}

/// The dimension label of `(a, b)`.
pub fn dim(a: VertexLabel, b: VertexLabel) -> Result<DimLabel> {
    if a.n != b.n {
        return Err(Error::LengthMismatch { left: a.n, right: b.n });
    }
    Ok(DimLabel(dim_raw(a.value, b.value)))
}

/// An undirected edge with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Edge {
    pub u: u32,
    pub v: u32,
    pub dim: DimLabel,
}

impl Edge {
    pub fn new(a: u32, b: u32) -> Self {
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Self { u, v, dim: DimLabel(dim_raw(u, v)) }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} {}", self.u, self.v, self.dim)
    }
}

/// Raw mask flipped by the edge of dimension `t` at any vertex.
fn flip_mask(t: i32) -> u32 {
    if t > 0 {
        1 << (t - 1)
    } else {
        (1u32 << (-t)) - 1
    }
}

/// The unique edge at `a` with dimension `t`.
pub fn incident_edge(a: VertexLabel, t: DimLabel) -> Result<Edge> {
    if !t.is_edge_dim(a.n) {
        return Err(Error::InvalidDimLabel { dim: t.0, n: a.n });
    }
    let b = a.value ^ flip_mask(t.0);
    let e = Edge::new(a.value, b);
    debug_assert_eq!(e.dim, t);
    Ok(e)
}

/// AQ_n with a dimension-labelled adjacency list.
#[derive(Clone, Debug)]
pub struct AugmentedCube {
    n: u32,
    adjacency: Vec<Vec<(u32, DimLabel)>>,
}

impl AugmentedCube {
    /// Builds AQ_n by the direct bit rule.
    pub fn build(n: u32) -> Result<Self> {
        check_dim(n)?;
        let size = 1u32 << n;
        let mut adjacency = Vec::with_capacity(size as usize);
        for a in 0..size {
            let mut row: Vec<(u32, DimLabel)> = (1..=n as i32)
                .chain((2..=n as i32).map(|t| -t))
                .map(|t| (a ^ flip_mask(t), DimLabel(t)))
                .collect();
            row.sort_unstable();
            adjacency.push(row);
        }
        Ok(Self { n, adjacency })
    }

    /// Builds AQ_n from two copies of AQ_{n-1}, joining `0x` to `1x` and
    /// to `1x'` where `x'` is the bitwise complement of `x`.
    ///
    /// Kept as a reference construction for checking [`AugmentedCube::build`].
    pub fn build_recursive(n: u32) -> Result<Self> {
        check_dim(n)?;
        let mut edges: BTreeSet<(u32, u32)> = BTreeSet::from([(0, 1)]);
        for k in 2..=n {
            let top = 1u32 << (k - 1);
            let low_mask = top - 1;
            let mut next = BTreeSet::new();
            for &(u, v) in &edges {
                next.insert((u, v));
                next.insert((u | top, v | top));
            }
            for x in 0..top {
                next.insert((x, x | top));
                next.insert((x, (!x & low_mask) | top));
            }
            edges = next;
        }
        let mut adjacency = vec![Vec::new(); 1usize << n];
        for (u, v) in edges {
            let d = DimLabel(dim_raw(u, v));
            adjacency[u as usize].push((v, d));
            adjacency[v as usize].push((u, d));
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }
        Ok(Self { n, adjacency })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, a: u32) -> &[(u32, DimLabel)] {
        &self.adjacency[a as usize]
    }

    pub fn degree(&self, a: u32) -> usize {
        self.adjacency[a as usize].len()
    }

    pub fn contains_edge(&self, a: u32, b: u32) -> bool {
        self.adjacency
            .get(a as usize)
            .is_some_and(|row| row.iter().any(|&(x, _)| x == b))
    }

    /// All edges sorted by `(u, v)`.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .adjacency
            .iter()
            .enumerate()
            .flat_map(|(a, row)| {
                let a = a as u32;
                row.iter().filter(move |&&(b, _)| a < b).map(move |&(b, dim)| Edge { u: a, v: b, dim })
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Edges with one end in `a` and the other in `b`; an edge inside
    /// `a ∩ b` is listed once.
    pub fn edges_between(&self, a: &BTreeSet<u32>, b: &BTreeSet<u32>) -> Vec<Edge> {
        self.edges()
            .into_iter()
            .filter(|e| (a.contains(&e.u) && b.contains(&e.v)) || (a.contains(&e.v) && b.contains(&e.u)))
            .collect()
    }

    /// Whether every vertex of `a` is adjacent to every vertex of `b`.
    pub fn is_complete_bipartite(&self, a: &[u32], b: &[u32]) -> bool {
        a.iter().all(|&x| b.iter().all(|&y| self.contains_edge(x, y)))
    }

    /// Writes one `u v dim` line per edge, sorted by `(u, v)`.
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> Result<()> {
        for e in self.edges() {
            writeln!(w, "{e}")?;
        }
        Ok(())
    }
}

/// Streams the sorted edge list of AQ_n without building the graph.
pub fn write_edges<W: Write>(n: u32, mut w: W) -> Result<()> {
    check_dim(n)?;
    let masks: Vec<u32> = (1..=n as i32)
        .chain((2..=n as i32).map(|t| -t))
        .map(flip_mask)
        .collect();
    let mut row = Vec::with_capacity(masks.len());
    for u in 0..1u32 << n {
        row.clear();
        row.extend(masks.iter().map(|m| u ^ m).filter(|&v| v > u));
        row.sort_unstable();
        for &v in &row {
            writeln!(w, "{u} {v} {}", dim_raw(u, v))?;
        }
    }
    Ok(())
}

/// A balanced bipartition of V(AQ_3) with all 16 cross pairs adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K44Witness {
    pub left: [u32; 4],
    pub right: [u32; 4],
}

/// Searches every 4/4 split of V(AQ_3) (the side holding vertex 0 first)
/// and returns the first one inducing a complete bipartite subgraph.
pub fn find_k44_witness() -> Option<K44Witness> {
    let cube = AugmentedCube::build(3).expect("n = 3 is valid");
    for mask in 0u32..256 {
        if mask.count_ones() != 4 || mask & 1 == 0 {
            continue;
        }
        let left: Vec<u32> = (0..8).filter(|v| mask >> v & 1 == 1).collect();
        let right: Vec<u32> = (0..8).filter(|v| mask >> v & 1 == 0).collect();
        if cube.is_complete_bipartite(&left, &right) {
            return Some(K44Witness {
                left: left.try_into().expect("four vertices"),
                right: right.try_into().expect("four vertices"),
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lbl(s: &str) -> VertexLabel {
        VertexLabel::from_bits(s).unwrap()
    }

    #[test]
    fn dim_examples() {
        assert_eq!(dim(lbl("000"), lbl("100")).unwrap(), DimLabel(3));
        assert_eq!(dim(lbl("000"), lbl("111")).unwrap(), DimLabel(-3));
        assert_eq!(dim(lbl("000"), lbl("001")).unwrap(), DimLabel(1));
        assert_eq!(dim(lbl("101"), lbl("101")).unwrap(), DimLabel(0));
        assert!(matches!(dim(lbl("00"), lbl("000")), Err(Error::LengthMismatch { .. })));
    }

    #[test]
    fn incident_edge_examples() {
        let e = incident_edge(lbl("000"), DimLabel(-2)).unwrap();
        assert_eq!((e.u, e.v), (0b000, 0b011));
        let e = incident_edge(lbl("000"), DimLabel(3)).unwrap();
        assert_eq!((e.u, e.v), (0b000, 0b100));
        let e = incident_edge(lbl("10101"), DimLabel(-4)).unwrap();
        assert_eq!((e.u, e.v), (0b10101, 0b11010));
        assert_eq!(e.dim, DimLabel(-4));
        assert!(incident_edge(lbl("000"), DimLabel(-1)).is_err());
        assert!(incident_edge(lbl("000"), DimLabel(4)).is_err());
    }

    #[test]
    fn small_cubes() {
        let q2 = AugmentedCube::build(2).unwrap();
        assert_eq!(q2.edge_count(), 6);
        let q3 = AugmentedCube::build(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 20));
        assert!((0..8).all(|a| q3.degree(a) == 5));
        assert_eq!(AugmentedCube::build(5).unwrap().edge_count(), 144);
        assert_eq!(AugmentedCube::build(1).unwrap().edge_count(), 1);
        assert!(AugmentedCube::build(0).is_err());
    }

    #[test]
    fn edges_between_examples() {
        let q3 = AugmentedCube::build(3).unwrap();
        let all: BTreeSet<u32> = (0..8).collect();
        assert!(q3.edges_between(&BTreeSet::new(), &all).is_empty());
        let a = BTreeSet::from([0b000, 0b011, 0b101, 0b110]);
        let b = BTreeSet::from([0b001, 0b010, 0b100, 0b111]);
        assert_eq!(q3.edges_between(&a, &b).len(), 16);
        let pair = BTreeSet::from([0b000, 0b001]);
        let inner = q3.edges_between(&pair, &pair);
        assert_eq!(inner, vec![Edge::new(0, 1)]);
    }

    #[test]
    fn witness() {
        let w = find_k44_witness().unwrap();
        assert_eq!(w.left, [0, 3, 5, 6]);
        assert_eq!(w.right, [1, 2, 4, 7]);
        let q3 = AugmentedCube::build(3).unwrap();
        assert!(!q3.is_complete_bipartite(&[0, 1, 2, 3], &[4, 5, 6, 7]));
    }

    #[test]
    fn edge_list_format() {
        let mut buf = Vec::new();
        AugmentedCube::build(2).unwrap().write_edge_list(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().next(), Some("0 1 1"));
        assert_eq!(text.lines().count(), 6);
    }

    #[test]
    fn label_rendering() {
        assert_eq!(lbl("00100").to_string(), "00100");
        assert_eq!(lbl("00100").theta(3), Some(1));
        assert_eq!(lbl("00100").theta(6), None);
        assert!(VertexLabel::new(8, 3).is_err());
    }

    #[test]
    fn streamed_edges_match_graph() {
        for n in 1..=7 {
            let (mut a, mut b) = (Vec::new(), Vec::new());
            write_edges(n, &mut a).unwrap();
            AugmentedCube::build(n).unwrap().write_edge_list(&mut b).unwrap();
            assert_eq!(a, b, "n = {n}");
        }
    }
}
