use std::sync::OnceLock;

use nestdim::catalog::{catalog, enumerate_spherical_weights, k_vectors, SphericalPair};
use nestdim::dimension::{binomial, dim_for_k, match_w_form, phi_ratio, w_regular, w_singular, Mode, Signature};
use nestdim::rational::{as_integer, fmt_q, parse_q, q, qi, Q};
use nestdim::restriction::Analysis;
use nestdim::root_system::SignedPermutation;
use nestdim::vector::ExactVector;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

struct Entry {
    pair: SphericalPair,
    an: Analysis,
}

fn entries() -> &'static [Entry] {
    static CELL: OnceLock<Vec<Entry>> = OnceLock::new();
    CELL.get_or_init(|| {
        catalog()
            .into_iter()
            .map(|pair| Entry {
                an: Analysis::new(&pair).unwrap(),
                pair,
            })
            .collect()
    })
}

fn k_for(r: usize, seed: &[u32]) -> Vec<u32> {
    (0..r).map(|i| seed[i % seed.len()]).collect()
}

fn signatures() -> impl Strategy<Value = Signature> {
    prop_oneof![
        (1usize..12).prop_map(|m| Signature::new(m, 0, 0)),
        (1usize..6).prop_map(|h| Signature::new(2 * h, 1, 0)),
        (1usize..6).prop_map(|h| Signature::new(2 * h, 3, 0)),
        Just(Signature::new(8, 7, 0)),
        Just(Signature::new(3, 3, 0)),
        Just(Signature::new(2, 1, 2)),
    ]
}

fn rational() -> impl Strategy<Value = Q> {
    (-500i64..500, 1i64..60).prop_map(|(n, d)| q(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rationals_round_trip_through_text(x in rational()) {
        prop_assert_eq!(parse_q(&fmt_q(&x)).unwrap(), x);
    }

    #[test]
    fn dimension_functions_are_one_at_zero(sig in signatures(), y in (1i64..40, 1i64..4)) {
        let y = q(y.0 * 2 + 1, 2 * y.1) + qi(20);
        prop_assert_eq!(w_regular(&Q::zero(), &y, sig).unwrap(), Q::one());
        if sig.is_singular_admissible() {
            prop_assert_eq!(w_singular(&Q::zero(), &y, sig).unwrap(), Q::one());
        }
    }

    /// Finite differences of order degree + 1 vanish in x.
    #[test]
    fn regular_functions_are_polynomial_in_x(sig in signatures(), y in 30i64..80, x0 in 0i64..20) {
        let y = q(2 * y + 1, 2);
        let n = sig.degree() + 1;
        let mut diff = Q::zero();
        for j in 0..=n {
            let c = Q::from_integer(binomial(n as i64, j as i64));
            let v = w_regular(&qi(x0 + j as i64), &y, sig).unwrap();
            if (n - j) % 2 == 0 { diff += c * v } else { diff -= c * v }
        }
        prop_assert!(diff.is_zero());
    }

    #[test]
    fn phi_ratio_factors_as_shift_product(x in 0i64..30, y in 1i64..40, t2 in 0i64..8) {
        let (x, y, t) = (qi(x), qi(y) + q(1, 3), q(t2, 2));
        let mut want = Q::one();
        let mut s = -t.clone();
        while s <= t {
            want *= (&x + &y + &s) / (&y + &s);
            s += Q::one();
        }
        prop_assert_eq!(phi_ratio(&x, &y, &t).unwrap(), want);
    }

    /// A symmetric shift multiset of a regular signature is matched by W.
    #[test]
    fn regular_shift_multisets_match(h in 2usize..8, y in 10i64..40) {
        let m = 2 * h;
        let t = q(m as i64, 2) - qi(1);
        let mut shifts = vec![Q::zero()];
        let mut s = -t.clone();
        while s <= t {
            shifts.push(s.clone());
            s += Q::one();
        }
        let fm = match_w_form(&qi(y), [&shifts, &[], &[]]).unwrap();
        prop_assert!(fm.regular);
        prop_assert_eq!(fm.signature, Signature::new(m, 0, 0));
    }

    #[test]
    fn dimensions_are_positive_integers(i in 0usize..1000, seed in prop::collection::vec(0u32..3, 1..4)) {
        let e = &entries()[i % entries().len()];
        let k = k_for(e.pair.spherical_rank, &seed);
        let d = dim_for_k(&e.an, &k, Mode::Fast).unwrap().restricted_product;
        let n = as_integer(&d);
        prop_assert!(n.is_some() && n.unwrap().is_positive(), "{} {:?} -> {}", e.pair.key(), k, fmt_q(&d));
    }

    #[test]
    fn restricted_products_do_not_depend_on_the_form_scale(
        i in 0usize..1000,
        s in (1i64..7, 1i64..7),
        seed in prop::collection::vec(0u32..3, 1..4),
    ) {
        let e = &entries()[i % entries().len()];
        let scaled = Analysis::with_scale(&e.pair, q(s.0, s.1)).unwrap();
        let k = k_for(e.pair.spherical_rank, &seed);
        let a = dim_for_k(&e.an, &k, Mode::Fast).unwrap();
        let b = dim_for_k(&scaled, &k, Mode::Full).unwrap();
        prop_assert!(b.matches);
        prop_assert_eq!(&a.restricted_product, &b.restricted_product);
        for (x, y) in a.factors.iter().zip(&b.factors) {
            prop_assert_eq!(&x.value, &y.value);
        }
        let k1: Vec<_> = e.an.data.iter().map(|d| (d.form, d.klass)).collect();
        let k2: Vec<_> = scaled.data.iter().map(|d| (d.form, d.klass)).collect();
        prop_assert_eq!(k1, k2);
        let m1: Vec<usize> = e.an.data.iter().map(|d| d.multiplicity).collect();
        let m2: Vec<usize> = scaled.data.iter().map(|d| d.multiplicity).collect();
        prop_assert_eq!(m1, m2);
        let h1: Vec<Q> = e.an.data.iter().map(|d| d.h_min()).collect();
        let h2: Vec<Q> = scaled.data.iter().map(|d| d.h_min()).collect();
        prop_assert_eq!(h1, h2);
    }

    #[test]
    fn shift_multisets_are_symmetric(i in 0usize..1000) {
        let e = &entries()[i % entries().len()];
        for d in &e.an.data {
            let mut a = d.shifts.clone();
            let mut b: Vec<Q> = a.iter().map(|s| -s.clone()).collect();
            a.sort();
            b.sort();
            prop_assert_eq!(a, b, "{} {}", e.pair.key(), d.label);
        }
    }

    #[test]
    fn restriction_is_a_linear_projection(i in 0usize..1000, a in 0usize..500, b in 0usize..500, c in -3i64..4) {
        let e = &entries()[i % entries().len()];
        let roots = &e.an.rs.positive_roots;
        let (x, y) = (&roots[a % roots.len()], &roots[b % roots.len()]);
        let rx = e.an.restrict(x);
        prop_assert_eq!(e.an.restrict(&rx), rx.clone());
        let combo = x + &y.scale(&qi(c));
        prop_assert_eq!(e.an.restrict(&combo), &rx + &e.an.restrict(y).scale(&qi(c)));
    }

    #[test]
    fn enumeration_is_complete(i in 0usize..1000, max in 0u32..4) {
        let e = &entries()[i % entries().len()];
        let r = e.pair.spherical_rank as i64;
        let ws = enumerate_spherical_weights(&e.pair, max).unwrap();
        let want = binomial(max as i64 + r, r);
        prop_assert_eq!(Q::from_integer(want), qi(ws.len() as i64));
        for (k, lam) in &ws {
            prop_assert!(k.iter().sum::<u32>() <= max);
            prop_assert!(e.an.rs.is_dominant(lam));
        }
        let mut ks: Vec<&Vec<u32>> = ws.iter().map(|(k, _)| k).collect();
        ks.dedup();
        prop_assert_eq!(ks.len(), ws.len());
    }

    #[test]
    fn signed_permutations_compose(moves in prop::collection::vec((1usize..6, any::<bool>()), 5), v in prop::collection::vec(-5i64..5, 5)) {
        let mut targets: Vec<usize> = (1..=5).collect();
        let mut ms = Vec::new();
        for (from, (t, neg)) in moves.iter().enumerate() {
            let j = targets.remove(t % targets.len());
            ms.push((from + 1, j, *neg));
        }
        let w = SignedPermutation::from_moves(5, &ms).unwrap();
        let u = SignedPermutation::swap(5, 1, 3).unwrap();
        let v = ExactVector::from_ints(&v);
        let wu = w.compose(&u);
        prop_assert_eq!(wu.apply(&v).unwrap(), w.apply(&u.apply(&v).unwrap()).unwrap());
        prop_assert_eq!(w.apply(&v).unwrap().norm2(), v.norm2());
    }
}

#[test]
fn k_vectors_count_matches_binomial() {
    for r in 1..5 {
        for max in 0..5 {
            assert_eq!(k_vectors(r, max).len() as i64, binomial(max as i64 + r as i64, r as i64).try_into().unwrap_or(-1i64));
        }
    }
}
