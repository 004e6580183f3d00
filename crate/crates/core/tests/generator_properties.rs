use proptest::prelude::*;

use fgc_core::format::{parse_edge_list, to_edge_list, to_json};
use fgc_core::generators::{
    apollonian_iterative, apollonian_selfsimilar, ext_hanoi, hanoi, hanoi_adjacent, hanoi_extremes, HanoiMethod,
};
use fgc_core::{Family, FamilySpec, Method, VertexRole};

fn pow3(k: usize) -> usize {
    3usize.pow(k as u32)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn apollonian_methods_agree(n in 0usize..=7) {
        let (a, b) = (apollonian_iterative(n).unwrap(), apollonian_selfsimilar(n).unwrap());
        prop_assert_eq!(a.stats(), b.stats());
        prop_assert_eq!(a.vertex_count(), (pow3(n) + 5) / 2);
        prop_assert_eq!(a.edge_count(), (pow3(n + 1) + 3) / 2);
        prop_assert!(a.is_connected());
        // Planar triangulation: E = 3V - 6.
        prop_assert_eq!(a.edge_count(), 3 * a.vertex_count() - 6);
    }

    #[test]
    fn hanoi_methods_agree(n in 1usize..=7) {
        let (a, b) = (hanoi(n, HanoiMethod::MoveRule).unwrap(), hanoi(n, HanoiMethod::SelfSimilar).unwrap());
        prop_assert_eq!(a.edges(), b.edges());
        prop_assert_eq!(a.vertex_count(), pow3(n));
        prop_assert_eq!(a.edge_count(), (pow3(n + 1) - 3) / 2);
        prop_assert_eq!(hanoi_extremes(n), [0, (pow3(n) - 1) / 2, pow3(n) - 1]);
        for e in hanoi_extremes(n) {
            prop_assert_eq!(a.degree(e).unwrap(), 2);
        }
    }

    #[test]
    fn hanoi_edges_change_one_disk(n in 1usize..=6) {
        let g = hanoi(n, HanoiMethod::MoveRule).unwrap();
        for &(u, v) in g.edges() {
            let (x, y) = (g.label(u).unwrap().unwrap(), g.label(v).unwrap().unwrap());
            prop_assert!(hanoi_adjacent(x, y));
            prop_assert_eq!(x.digits().iter().zip(y.digits()).filter(|(p, q)| p != q).count(), 1);
        }
        for u in 0..g.vertex_count() {
            for v in u + 1..g.vertex_count() {
                let (x, y) = (g.label(u).unwrap().unwrap(), g.label(v).unwrap().unwrap());
                prop_assert_eq!(hanoi_adjacent(x, y), g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn ext_hanoi_is_cubic(n in 1usize..=7) {
        let g = ext_hanoi(n).unwrap();
        prop_assert_eq!(g.vertex_count(), pow3(n) + 1);
        prop_assert!((0..g.vertex_count()).all(|v| g.degree(v).unwrap() == 3));
        let s = g.find_role(VertexRole::Special).unwrap();
        prop_assert_eq!(s, pow3(n));
        prop_assert_eq!(g.neighbors(s).unwrap(), &hanoi_extremes(n)[..]);
    }

    #[test]
    fn edge_list_round_trips(family in prop_oneof![Just(Family::Apollonian), Just(Family::Hanoi), Just(Family::ExtHanoi)], n in 1usize..=5) {
        let g = FamilySpec::new(family, n).generate().unwrap();
        let text = to_edge_list(&g);
        prop_assert!(text.ends_with('\n') && !text.contains('\r'));
        let parsed = parse_edge_list(&text).unwrap();
        prop_assert_eq!(parsed.family, family);
        prop_assert_eq!(parsed.n, n);
        prop_assert_eq!(parsed.vertices, g.vertex_count());
        prop_assert_eq!(&parsed.edges[..], g.edges());
        let json = to_json(&g);
        prop_assert_eq!(json["vertices"].as_u64(), Some(g.vertex_count() as u64));
        prop_assert_eq!(json["edges"].as_array().map(Vec::len), Some(g.edge_count()));
    }
}

#[test]
fn construction_methods_by_name() {
    let a = FamilySpec::new(Family::Apollonian, 3).with_method("self-similar".parse::<Method>().unwrap());
    assert_eq!(a.generate().unwrap().vertex_count(), 16);
    assert!(FamilySpec::new(Family::ExtHanoi, 2)
        .with_method(Method::SelfSimilar)
        .generate()
        .is_err());
    assert!(FamilySpec::new(Family::Hanoi, 0).generate().is_err());
}
