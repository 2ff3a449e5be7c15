use std::collections::BTreeSet;

use proptest::prelude::*;

use aqcross::aqcube::{adjacent_raw, dim_raw, incident_edge, AugmentedCube, DimLabel, VertexLabel};
use aqcross::arcdiagram::{crossings, upsilon, Arc, CoverProfile, Side};
use aqcross::formulas::{total, total_collapsed};
use aqcross::partition::{classify_edge, omega, EdgeClass, EightParts, Part};
use aqcross::{Exact, Exact128};

fn vertex_pair() -> impl Strategy<Value = (u32, u32, u32)> {
    (1u32..=16).prop_flat_map(|n| (Just(n), 0..1u32 << n, 0..1u32 << n))
}

fn arb_arc(len: u32) -> impl Strategy<Value = Arc> {
    (1..len, 1..=len, any::<bool>()).prop_filter_map("empty arc", move |(a, b, up)| {
        (a < b).then_some(Arc { lo: a, hi: b, side: if up { Side::Above } else { Side::Below }, dim: DimLabel(1) })
    })
}

fn naive(arcs: &[Arc]) -> u64 {
    let mut c = 0;
    for (i, x) in arcs.iter().enumerate() {
        for y in &arcs[i + 1..] {
            let (a, b) = if x.lo <= y.lo { (x, y) } else { (y, x) };
            c += u64::from(a.side == b.side && a.lo < b.lo && b.lo < a.hi && a.hi < b.hi);
        }
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn dim_is_symmetric((_n, a, b) in vertex_pair()) {
        prop_assert_eq!(dim_raw(a, b), dim_raw(b, a));
        prop_assert_eq!(adjacent_raw(a, b), adjacent_raw(b, a));
    }

    #[test]
    fn incident_edges_are_distinct((n, a, _b) in vertex_pair()) {
        let v = VertexLabel::new(a, n).unwrap();
        let mut others = BTreeSet::new();
        for t in (-(n as i32)..=n as i32).map(DimLabel).filter(|t| t.is_edge_dim(n)) {
            let e = incident_edge(v, t).unwrap();
            prop_assert_eq!(e.dim, t);
            prop_assert!(e.u == a || e.v == a);
            prop_assert!(adjacent_raw(e.u, e.v));
            let other = if e.u == a { e.v } else { e.u };
            prop_assert!(others.insert(other), "repeated neighbour {}", other);
        }
        prop_assert_eq!(others.len(), 2 * n as usize - 1);
    }

    #[test]
    fn omega_images_disjoint(n in 5u32..=9, a in any::<u32>(), b in any::<u32>()) {
        let (a, b) = (a % (1 << n), b % (1 << n));
        prop_assume!(a != b);
        let (x, y) = (omega(&BTreeSet::from([a]), n).unwrap(), omega(&BTreeSet::from([b]), n).unwrap());
        prop_assert_eq!(x.len(), 2);
        prop_assert!(x.is_disjoint(&y));
    }

    #[test]
    fn crossings_match_pairwise(arcs in prop::collection::vec(arb_arc(40), 0..60)) {
        let arcs: Vec<Arc> = arcs.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        prop_assert_eq!(crossings(&arcs, None).unwrap(), naive(&arcs));
    }

    #[test]
    fn crossings_are_additive(m in 0u32..=5, mask in any::<u64>()) {
        let d = upsilon(m);
        let (mut a, mut b) = (Vec::new(), Vec::new());
        for (i, arc) in d.arcs().iter().enumerate() {
            if mask.rotate_left(i as u32) & 1 == 1 { a.push(*arc) } else { b.push(*arc) }
        }
        let whole = crossings(d.arcs(), None).unwrap();
        let split = crossings(&a, None).unwrap() + crossings(&b, None).unwrap() + crossings(&a, Some(&b)).unwrap();
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn upsilon_is_mirror_symmetric(m in 0u32..=8, pick in any::<prop::sample::Index>()) {
        let d = upsilon(m);
        let a = d.arcs()[pick.index(d.arcs().len())];
        let big = d.spine_len() + 1;
        prop_assert!(d.arcs().iter().any(|b| b.lo == big - a.hi && b.hi == big - a.lo));
    }

    #[test]
    fn incidences_are_degrees(m in 0u32..=6, k in any::<prop::sample::Index>()) {
        let d = upsilon(m);
        let p = CoverProfile::of(d.spine_len(), d.arcs());
        let k = k.index(d.spine_len() as usize) as u32 + 1;
        let deg = d.arcs().iter().filter(|a| a.lo == k || a.hi == k).count() as u64;
        prop_assert_eq!(p.alpha(k) + p.beta(k), deg);
    }

    #[test]
    fn scalar_types_agree(n in 8u32..=60) {
        prop_assert_eq!(total::<Exact>(n).unwrap().to_string(), total::<Exact128>(n).unwrap().to_string());
        prop_assert_eq!(total::<Exact>(n).unwrap(), total_collapsed::<Exact>(n).unwrap());
    }
}

#[test]
fn edge_classes_partition() {
    for n in 5..=10 {
        let cube = AugmentedCube::build(n).unwrap();
        let mut counts = [0usize; 3];
        for e in cube.edges() {
            let slot = match classify_edge(&e, n).unwrap() {
                EdgeClass::Black => 0,
                EdgeClass::Red => 1,
                EdgeClass::Blue => 2,
            };
            counts[slot] += 1;
        }
        let half = 1usize << (n - 1);
        assert_eq!(counts.iter().sum::<usize>(), (2 * n as usize - 1) * half);
        assert_eq!(counts[1], 2 * half);
        assert_eq!(counts[2], 2 * half);
    }
}

#[test]
fn parts_lift_by_omega() {
    for n in 5..=9 {
        let (here, next) = (EightParts::build(n).unwrap(), EightParts::build(n + 1).unwrap());
        for p in Part::ALL {
            assert_eq!(&omega(here.get(p), n).unwrap(), next.get(p), "{p} at n = {n}");
        }
    }
}
