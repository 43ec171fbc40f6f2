use proptest::prelude::*;

use hiernet::adjacency::{adjacent_digits, for_each_neighbor};
use hiernet::analytic::distance_upper_bound;
use hiernet::classify::VertexClass;
use hiernet::label::Label;
use hiernet::oracle::{dist_to_periphery, dist_to_root, distance};
use hiernet::{classify, Params};

fn params_and_labels(count: usize) -> impl Strategy<Value = (Params, Vec<Label>)> {
    (2u32..12, 1u32..14).prop_flat_map(move |(n, k)| {
        let p = Params::new(n, k).unwrap();
        let label = prop::collection::vec(0..n, k as usize).prop_map(move |d| Label::new(d, &p).unwrap());
        (Just(p), prop::collection::vec(label, count))
    })
}

proptest! {
    #[test]
    fn codec_round_trip(n in 2u32..40, k in 1u32..8, seed: u64) {
        let p = Params::new(n, k).unwrap();
        let id = seed % p.order_u64().unwrap();
        let label = Label::from_id(id, &p).unwrap();
        prop_assert_eq!(label.to_id(&p).unwrap(), id);
        prop_assert_eq!(Label::parse(&label.render(n), &p).unwrap(), label);
    }

    #[test]
    fn oracle_is_a_metric((p, v) in params_and_labels(3)) {
        let d = |a: &Label, b: &Label| distance(a, b, &p).unwrap();
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(d(x, y), d(y, x));
        prop_assert_eq!(d(x, y) == 0, x == y);
        prop_assert!(d(x, z) <= d(x, y) + d(y, z));
        prop_assert!(d(x, y) < 2 * p.k());
        if x != y {
            prop_assert!(d(x, y) <= distance_upper_bound(x, y, &p).unwrap());
        }
    }

    #[test]
    fn neighbors_are_at_distance_one((p, v) in params_and_labels(1)) {
        // keep the neighbor enumeration small
        prop_assume!(u64::from(p.n() - 1).pow(p.k()) <= 5000);
        let x = &v[0];
        let mut count = 0u64;
        for_each_neighbor(x.digits(), p.n(), |y| {
            count += 1;
            assert!(adjacent_digits(x.digits(), y));
            assert_eq!(hiernet::oracle::distance_digits(x.digits(), y), 1);
        });
        let row = hiernet::analytic::class_stat::<i128>(classify(x, &p).unwrap(), &p).unwrap();
        prop_assert_eq!(i128::from(count), row.degree);
    }

    #[test]
    fn helper_distances_respect_bounds(digits in prop::collection::vec(0u32..5, 1..20)) {
        let m = digits.len() as u32;
        let (r, q) = (dist_to_root(&digits), dist_to_periphery(&digits));
        if digits[0] == 0 {
            prop_assert!(r < m && q <= m);
        } else {
            prop_assert!(r <= m && q < m);
        }
        prop_assert_eq!(r == 0, digits.iter().all(|&d| d == 0));
        prop_assert_eq!(q == 0, digits.iter().all(|&d| d != 0));
    }

    #[test]
    fn class_follows_trailing_digit((p, v) in params_and_labels(1)) {
        let class = classify(&v[0], &p).unwrap();
        prop_assert_eq!(class.is_root(), *v[0].digits().last().unwrap() == 0);
        if let VertexClass::SubRoot(i) | VertexClass::SubPeripheral(i) = class {
            prop_assert!(i >= 1 && i < p.k());
        }
    }
}
