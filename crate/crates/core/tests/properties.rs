use algsubshift::algebra::Unimodular;
use algsubshift::config::{apply_poly, apply_poly_torus, detect_periods, fourdot_decompose, ConfigSource, Region, Window};
use algsubshift::elimination::resultant;
use algsubshift::linefactors::{classify_nivat, line_factor_profile};
use algsubshift::newton::{candidate_line_directions, newton_polygon, sublattice_index, Direction};
use algsubshift::{LaurentPoly, Point, Ring, Var};
use proptest::prelude::*;

fn ring_strategy() -> impl Strategy<Value = Ring> {
    prop_oneof![Just(Ring::F2), Just(Ring::F3), Just(Ring::prime_field(5).unwrap()), Just(Ring::Z)]
}

fn field_strategy() -> impl Strategy<Value = Ring> {
    prop_oneof![Just(Ring::F2), Just(Ring::F3)]
}

fn poly_in(ring: Ring, lo: i64, hi: i64, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((lo..=hi, lo..=hi), -4i64..=4), 0..=max_terms)
        .prop_map(move |terms| LaurentPoly::from_terms(ring, terms))
}

fn poly(max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    ring_strategy().prop_flat_map(move |r| poly_in(r, -2, 2, max_terms))
}

fn triple() -> impl Strategy<Value = (LaurentPoly, LaurentPoly, LaurentPoly)> {
    ring_strategy().prop_flat_map(|r| (poly_in(r, -2, 2, 5), poly_in(r, -2, 2, 5), poly_in(r, -2, 2, 5)))
}

fn nonzero_field_poly(lo: i64, hi: i64, max_terms: usize) -> impl Strategy<Value = LaurentPoly> {
    field_strategy()
        .prop_flat_map(move |r| poly_in(r, lo, hi, max_terms))
        .prop_filter("nonzero", |f| !f.is_zero())
}

fn unimodular() -> impl Strategy<Value = Unimodular> {
    prop::collection::vec((0..4u8, -2i64..=2), 1..5).prop_map(|ops| {
        ops.into_iter().fold(Unimodular::IDENTITY, |m, (kind, k)| {
            let e = match kind {
                0 => Unimodular::new(1, k, 0, 1),
                1 => Unimodular::new(1, 0, k, 1),
                2 => Unimodular::new(0, 1, 1, 0),
                _ => Unimodular::new(-1, 0, 0, 1),
            }
            .unwrap();
            m.compose(&e)
        })
    })
}

/// A non-monomial line polynomial along `u`, shifted by a monomial.
fn line_poly(ring: Ring) -> impl Strategy<Value = (LaurentPoly, Direction)> {
    (
        (-2i64..=2, -2i64..=2).prop_filter_map("zero vector", |(a, b)| Direction::new(a, b)),
        prop::collection::vec(1i64..=4, 2..=3),
        (-2i64..=2, -2i64..=2),
    )
        .prop_filter_map("monomial", move |(u, coeffs, shift)| {
            let (a, b) = u.vector();
            let n = coeffs.len() as i64 - 1;
            let terms = coeffs.iter().enumerate().map(|(k, &c)| ((k as i64 * a, k as i64 * b), c));
            let mut l = LaurentPoly::from_terms(ring, terms);
            // Keep both end terms so that the line really spans `u`.
            if l.coeff((0, 0)) == 0.into() || l.coeff((n * a, n * b)) == 0.into() {
                return None;
            }
            l = l.shift(shift);
            Some((l, u))
        })
}

fn window(ring: Ring, w: usize, h: usize) -> impl Strategy<Value = Window> {
    let m = if ring.is_field() { ring.modulus() as i64 } else { 5 };
    prop::collection::vec(0..m, w * h)
        .prop_map(move |vals| Window::new(ring, Region::new((-3, 2), w, h), vals).unwrap())
}

fn support_sum(f: &LaurentPoly, g: &LaurentPoly) -> Vec<Point> {
    let mut out = Vec::new();
    for a in f.support() {
        for b in g.support() {
            out.push((a.0 + b.0, a.1 + b.1));
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((f, g, h) in triple()) {
        prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
        prop_assert_eq!(&(&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!(&f * &g, &g * &f);
        prop_assert_eq!(&f + &g, &g + &f);
        prop_assert!((&f - &f).is_zero());
    }

    #[test]
    fn support_of_product_is_in_minkowski_sum((f, g, _) in triple()) {
        let sum = support_sum(&f, &g);
        for e in (&f * &g).support() {
            prop_assert!(sum.contains(&e));
        }
    }

    #[test]
    fn normal_form_round_trip(f in poly(6).prop_filter("nonzero", |f| !f.is_zero())) {
        let (proper, m) = f.monomial_normal_form().unwrap();
        prop_assert!(proper.is_proper());
        let (lo, _) = proper.exponent_bounds().unwrap();
        prop_assert_eq!(lo, (0, 0));
        prop_assert_eq!(&m.to_poly() * &proper, f);
    }

    #[test]
    fn substitution_is_a_homomorphism(
        ring in ring_strategy(),
        seed in any::<u64>(),
    ) {
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(seed);
        use rand::Rng;
        let mut random = |xs: std::ops::RangeInclusive<i64>, ys: std::ops::RangeInclusive<i64>| {
            let terms: Vec<(Point, i64)> = (0..4)
                .map(|_| ((rng.gen_range(xs.clone()), rng.gen_range(ys.clone())), rng.gen_range(-3..=3)))
                .collect();
            LaurentPoly::from_terms(ring, terms)
        };
        let g = random(0..=2, -2..=2);
        let beta = random(0..=2, -2..=2);
        let r = random(0..=0, -2..=2);
        let x_minus_r = &LaurentPoly::x(ring) - &r;
        let lhs = (&(&g * &x_minus_r) + &beta).substitute_x(&r).unwrap();
        prop_assert_eq!(lhs, beta.substitute_x(&r).unwrap());
    }

    #[test]
    fn unimodular_changes_are_invertible_and_multiplicative(
        (f, g, _) in triple(),
        m in unimodular(),
    ) {
        prop_assert_eq!(f.unimodular_change(&m).unimodular_change(&m.inverse()), f.clone());
        prop_assert_eq!((&f * &g).unimodular_change(&m), &f.unimodular_change(&m) * &g.unimodular_change(&m));
    }

    #[test]
    fn hull_vertices_are_support_points(f in nonzero_field_poly(-3, 3, 7)) {
        let polygon = newton_polygon(&f).unwrap();
        let support = f.support();
        for v in polygon.vertices() {
            prop_assert!(support.contains(v));
        }
        for e in &support {
            prop_assert!(polygon.contains(*e));
        }
    }

    #[test]
    fn line_factor_creates_an_outer_edge_direction(
        ((l, u), f) in field_strategy().prop_flat_map(|r| (
            line_poly(r),
            poly_in(r, -2, 2, 5).prop_filter("nonzero", |f| !f.is_zero()),
        )),
    ) {
        prop_assert!(candidate_line_directions(&(&l * &f)).unwrap().contains(&u));
    }

    #[test]
    fn sublattice_index_is_invariant(f in nonzero_field_poly(-2, 2, 5), m in unimodular(), shift in (-3i64..=3, -3i64..=3)) {
        let index = sublattice_index(&f).unwrap();
        prop_assert_eq!(sublattice_index(&f.shift(shift)).unwrap(), index);
        prop_assert_eq!(sublattice_index(&f.unimodular_change(&m)).unwrap(), index);
    }

    #[test]
    fn line_contents_divide_and_are_complete(
        (l, u) in line_poly(Ring::F2),
        f in poly_in(Ring::F2, -2, 2, 5).prop_filter("nonzero", |f| !f.is_zero()),
    ) {
        let product = &l * &f;
        let profile = line_factor_profile(&product).unwrap();
        for entry in profile.candidates() {
            prop_assert!(product.is_divisible_by(&entry.content).unwrap());
        }
        let content = profile.content(u).expect("direction of a line factor is a candidate");
        prop_assert!(content.is_divisible_by(&l).unwrap(), "{} does not divide {}", l, content);
    }

    #[test]
    fn classification_ignores_monomials(f in nonzero_field_poly(-2, 2, 6), shift in (-3i64..=3, -3i64..=3)) {
        let a = classify_nivat(&f).unwrap();
        let b = classify_nivat(&f.shift(shift)).unwrap();
        prop_assert_eq!(a.name(), b.name());
    }

    #[test]
    fn apply_poly_composes(
        ring in ring_strategy(),
        seed in any::<u64>(),
    ) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut small = || {
            let terms: Vec<(Point, i64)> = (0..3)
                .map(|_| ((rng.gen_range(-1..=1), rng.gen_range(-1..=1)), rng.gen_range(1..=3)))
                .collect();
            LaurentPoly::from_terms(ring, terms)
        };
        let (f, g) = (small(), small());
        prop_assume!(!f.is_zero() && !g.is_zero());
        let m = if ring.is_field() { ring.modulus() as i64 } else { 4 };
        let vals: Vec<i64> = (0..100).map(|_| rng.gen_range(0..m)).collect();
        let w = Window::new(ring, Region::new((5, -7), 10, 10), vals).unwrap();
        prop_assert_eq!(apply_poly(&(&f * &g), &w).unwrap(), apply_poly(&f, &apply_poly(&g, &w).unwrap()).unwrap());
        prop_assert_eq!(apply_poly_torus(&(&f * &g), &w).unwrap(), apply_poly_torus(&f, &apply_poly_torus(&g, &w).unwrap()).unwrap());
    }

    #[test]
    fn resultant_is_symmetric_and_univariate(
        ring in field_strategy(),
        seed in any::<u64>(),
    ) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut random = || {
            let terms: Vec<(Point, i64)> = (0..4)
                .map(|_| ((rng.gen_range(0..=2), rng.gen_range(0..=2)), rng.gen_range(1..=2)))
                .collect();
            LaurentPoly::from_terms(ring, terms)
        };
        let (f, g) = (random(), random());
        prop_assume!(!f.is_zero() && !g.is_zero());
        for axis in [Var::X, Var::Y] {
            let r = resultant(&f, &g, axis).unwrap();
            let s = resultant(&g, &f, axis).unwrap();
            prop_assert!(r == s || r == s.neg(), "{} vs {}", r, s);
            prop_assert!(r.is_free_of(axis));
        }
    }

    #[test]
    fn torus_sources_have_their_periods(w in 1usize..=5, h in 1usize..=5, ring in field_strategy(), seed in any::<u64>()) {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let m = ring.modulus() as i64;
        let grid = Window::from_fn(ring, Region::new((0, 0), w, h), |_| rng.gen_range(0..m)).unwrap();
        let src = ConfigSource::torus(grid);
        let xw = LaurentPoly::from_terms(ring, [((w as i64, 0), 1), ((0, 0), -1)]);
        let yh = LaurentPoly::from_terms(ring, [((0, h as i64), 1), ((0, 0), -1)]);
        let big = src.generate_window(Region::new((-4, 3), 2 * w + 2, 2 * h + 2)).unwrap();
        prop_assert!(apply_poly(&xw, &big).unwrap().is_zero());
        prop_assert!(apply_poly(&yh, &big).unwrap().is_zero());
        let periods = detect_periods(&big, w.max(h));
        prop_assert!(periods.iter().any(|e| e.vector == (w as i64, 0)));
        prop_assert!(periods.iter().any(|e| e.vector == (0, h as i64)));
    }

    #[test]
    fn fourdot_decomposition_identities(
        r in prop::collection::vec(0u8..2, 1..6),
        s in prop::collection::vec(0u8..2, 1..6),
    ) {
        let src = ConfigSource::fourdot(&r, &s).unwrap();
        let c = src.generate_window(Region::new((-5, -5), 12, 12)).unwrap();
        let dec = fourdot_decompose(&c).unwrap();
        prop_assert!(dec.field_identity && dec.integer_identity);
        let one_plus_x = LaurentPoly::parse(Ring::F2, "1 + X").unwrap();
        let one_plus_y = LaurentPoly::parse(Ring::F2, "1 + Y").unwrap();
        prop_assert!(apply_poly(&one_plus_x, &dec.h).unwrap().is_zero());
        prop_assert!(apply_poly(&one_plus_y, &dec.v).unwrap().is_zero());
    }

    #[test]
    fn zlift_is_a_renaming(w in window(Ring::F3, 4, 3)) {
        let z = w.zlift().unwrap();
        prop_assert_eq!(z.ring(), Ring::Z);
        prop_assert_eq!(z.reduce(Ring::F3), w);
    }

    #[test]
    fn grid_text_round_trips(w in ring_strategy().prop_flat_map(|r| window(r, 5, 4))) {
        prop_assert_eq!(Window::parse_grid(&w.to_grid_text()).unwrap(), w);
    }
}
