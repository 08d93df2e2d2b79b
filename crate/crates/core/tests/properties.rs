use proptest::prelude::*;

use linchord::arith::{self, Rational};
use linchord::diagram::{ChordDiagram, PartialDiagram};
use linchord::oracle::Oracle;
use linchord::poly::ExactPoly;
use linchord::series::ExactSeries;

const ORDER: usize = 10;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| arith::rat(p, q))
}

fn series(order: usize) -> impl Strategy<Value = ExactSeries> {
    prop::collection::vec(small_rational(), order + 1).prop_map(move |c| ExactSeries::new(c, order))
}

fn unit_series(order: usize) -> impl Strategy<Value = ExactSeries> {
    series(order).prop_map(move |s| {
        let mut c = s.coeffs().to_vec();
        c.resize(order + 1, Rational::from_integer(0.into()));
        c[0] = Rational::from_integer(1.into());
        ExactSeries::new(c, order)
    })
}

fn inner_series(order: usize) -> impl Strategy<Value = ExactSeries> {
    (series(order), 1usize..=2).prop_map(move |(s, v)| s.mul_z_pow(v).truncate(order))
}

/// A random partial matching on `n` backbone vertices.
fn partial_diagram(max_n: usize) -> impl Strategy<Value = PartialDiagram> {
    (0..=max_n)
        .prop_flat_map(|n| (Just((1..=n).collect::<Vec<_>>()).prop_shuffle(), 0..=n / 2))
        .prop_map(|(order, k)| {
            let pairs: Vec<(usize, usize)> = order
                .chunks(2)
                .take(k)
                .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
                .collect();
            PartialDiagram::from_pairs(order.len(), &pairs).unwrap()
        })
}

fn chord_diagram(max_chords: usize) -> impl Strategy<Value = ChordDiagram> {
    (0..=max_chords)
        .prop_flat_map(|n| Just((1..=2 * n).collect::<Vec<_>>()).prop_shuffle())
        .prop_map(|order| {
            let pairs: Vec<(usize, usize)> = order.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
            ChordDiagram::from_pairs(&pairs).unwrap()
        })
}

proptest! {
    #[test]
    fn series_ring_axioms(a in series(ORDER), b in series(ORDER), c in series(ORDER)) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn reciprocal_inverts(a in unit_series(ORDER)) {
        prop_assert_eq!(a.mul(&a.reciprocal().unwrap()), ExactSeries::one(ORDER));
    }

    #[test]
    fn square_roots_agree(a in unit_series(ORDER)) {
        let r = a.sqrt().unwrap();
        prop_assert_eq!(r.mul(&r), a.clone());
        prop_assert_eq!(r, a.sqrt_binomial().unwrap());
    }

    #[test]
    fn composition_is_associative(f in series(ORDER), g in inner_series(ORDER), h in inner_series(ORDER)) {
        let left = f.compose(&g.compose(&h).unwrap()).unwrap();
        let right = f.compose(&g).unwrap().compose(&h).unwrap();
        let n = left.order().min(right.order());
        prop_assert!(n >= ORDER);
        prop_assert_eq!(left.truncate(n), right.truncate(n));
    }

    #[test]
    fn derivative_undoes_integration(a in series(ORDER)) {
        prop_assert_eq!(a.integrate().derivative(), a);
    }

    #[test]
    fn rationals_stay_reduced(a in small_rational(), b in small_rational()) {
        use num_integer::Integer as _;
        for r in [&a + &b, &a * &b, &a - &b] {
            prop_assert!(r.numer().gcd(r.denom()) == 1.into() || r.numer() == &0.into());
            prop_assert!(r.denom() > &0.into());
        }
    }

    #[test]
    fn shifted_basis_round_trip(
        c in prop::collection::vec(small_rational(), 9),
        scale in small_rational().prop_filter("nonzero", |s| *s != Rational::from_integer(0.into())),
        shift in small_rational(),
    ) {
        let p = ExactPoly::new(c);
        let q = p.in_shifted_basis(&scale, &shift);
        prop_assert_eq!(ExactPoly::from_shifted_basis(&q, &scale, &shift), p);
    }

    #[test]
    fn genus_and_boundary_are_consistent(d in partial_diagram(12)) {
        let s = d.stats();
        prop_assert_eq!(s.chord_count + 1, 2 * s.genus + s.boundary_components);
        prop_assert!(2 * s.genus <= s.chord_count);
    }

    #[test]
    fn text_encoding_round_trips(d in partial_diagram(12)) {
        prop_assert_eq!(d.to_string().parse::<PartialDiagram>().unwrap(), d);
    }

    #[test]
    fn projection_is_idempotent_and_keeps_genus(d in partial_diagram(12)) {
        let shape = d.project_shape();
        prop_assert!(shape.stack_sizes().iter().all(|&s| s == 1));
        prop_assert_eq!(shape.to_partial().project_shape(), shape.clone());
        prop_assert_eq!(shape.genus(), d.genus());
    }

    #[test]
    fn projection_keeps_one_chords_of_full_diagrams(d in chord_diagram(7)) {
        let shape = d.to_partial().project_shape();
        prop_assert_eq!(shape.one_chord_count(), d.one_chord_count());
        prop_assert_eq!(shape.genus(), d.genus());
    }

    #[test]
    fn doubling_a_chord_keeps_genus(d in chord_diagram(7), pick in any::<prop::sample::Index>()) {
        prop_assume!(d.chord_count() > 0);
        let p = d.to_partial();
        let (i, j) = p.pairs()[pick.index(d.chord_count())];
        let doubled = p.double_chord(i, j).unwrap();
        prop_assert_eq!(doubled.chord_count(), d.chord_count() + 1);
        prop_assert_eq!(doubled.genus(), d.genus());
        prop_assert_eq!(doubled.one_chord_count(), d.one_chord_count());
        prop_assert_eq!(doubled.project_shape(), p.project_shape());
    }
}

#[test]
fn genus_parity_holds_exhaustively() {
    let oracle = Oracle::default();
    for n in 0..=7 {
        for d in oracle.enumerate_chord_diagrams(n).unwrap() {
            assert_eq!((n + 1 - d.boundary_cycles()) % 2, 0, "{d}");
        }
    }
}

#[test]
fn projection_is_idempotent_exhaustively() {
    let oracle = Oracle::default();
    for n in 0..=10 {
        for d in oracle.enumerate_partial_diagrams(n).unwrap() {
            let shape = d.project_shape();
            assert_eq!(shape.to_partial().project_shape(), shape, "{d}");
            assert_eq!(shape.genus(), d.genus(), "{d}");
        }
    }
}

#[test]
fn oracle_is_deterministic_and_shapes_are_fewer() {
    let oracle = Oracle::default();
    let a = oracle.cg_onechords(6).unwrap();
    assert_eq!(a, oracle.cg_onechords(6).unwrap());
    let s = oracle.shapes(6).unwrap();
    for g in 0..=s.g_max() {
        for n in 0..=6 {
            assert!(s.get(g, n) <= a.get(g, n), "g={g} n={n}");
        }
    }
}
