use proptest::prelude::*;

use super::*;
use crate::linalg::frac;

fn all_types() -> Vec<CartanType> {
    let mut v = Vec::new();
    for n in 1..=8 {
        v.push(CartanType::A(n));
    }
    for n in 2..=8 {
        v.push(CartanType::B(n));
        v.push(CartanType::C(n));
    }
    for n in 4..=8 {
        v.push(CartanType::D(n));
    }
    v.extend([
        CartanType::E(6),
        CartanType::E(7),
        CartanType::E(8),
        CartanType::F4,
        CartanType::G2,
    ]);
    v
}

fn expected_positive_roots(t: CartanType) -> usize {
    match t {
        CartanType::A(n) => n * (n + 1) / 2,
        CartanType::B(n) | CartanType::C(n) => n * n,
        CartanType::D(n) => n * (n - 1),
        CartanType::E(6) => 36,
        CartanType::E(7) => 63,
        CartanType::E(_) => 120,
        CartanType::F4 => 24,
        CartanType::G2 => 6,
    }
}

#[test]
fn positive_root_counts() {
    for t in all_types() {
        let d = RootDatum::split(t);
        assert_eq!(d.positive_roots().len(), expected_positive_roots(t), "{t}");
        assert_eq!(d.positive_coroots().len(), d.positive_roots().len());
    }
}

#[test]
fn fundamental_bases_are_dual() {
    for t in all_types() {
        let d = RootDatum::split(t);
        let n = d.rank();
        for i in 0..n {
            for j in 0..n {
                let want = if i == j { q(1) } else { q(0) };
                assert_eq!(d.pair_simple_root(&d.fundamental_coweight(i), j), want);
                assert_eq!(
                    d.pair(&d.simple_coroot(i), &d.fundamental_weight(j))
                        .unwrap(),
                    want
                );
            }
        }
    }
}

#[test]
fn rho_pairs_to_one_with_simple_coroots() {
    for t in all_types() {
        let d = RootDatum::split(t);
        let rho = d.rho();
        for i in 0..d.rank() {
            assert_eq!(d.pair(&d.simple_coroot(i), &rho).unwrap(), q(1), "{t}");
        }
    }
}

#[test]
fn coroots_pair_to_two_with_their_roots() {
    for t in all_types() {
        let d = RootDatum::split(t);
        for (r, c) in d.positive_roots().iter().zip(d.positive_coroots()) {
            let v = RationalVector::from_ints(c);
            assert_eq!(d.pair(&v, &Weight::from_ints(r)).unwrap(), q(2));
        }
    }
}

#[test]
fn e8_fourth_fundamental_coweight() {
    let d = RootDatum::split(CartanType::E(8));
    assert_eq!(
        d.fundamental_coweight(3),
        RationalVector::from_ints(&[10, 15, 20, 30, 24, 18, 12, 6])
    );
}

#[test]
fn a2_fundamental_coweight_coordinates() {
    let d = RootDatum::split(CartanType::A(2));
    assert_eq!(
        d.fundamental_coweight(0).coords,
        vec![frac(2, 3), frac(1, 3)]
    );
}

#[test]
fn dominant_rep_in_a2() {
    let d = RootDatum::split(CartanType::A(2));
    let v = d.coweight(&[-1, 2]).unwrap();
    let (dom, word) = d.dominant_rep(&v);
    assert_eq!(d.fundamental_coordinates(&dom).unwrap(), vec![1, 1]);
    assert_eq!(word, vec![0]);
}

#[test]
fn newton_level_set_rejects_non_dominant() {
    let d = RootDatum::split(CartanType::A(2));
    assert!(d.newton_level_set(&d.coweight(&[-1, 2]).unwrap()).is_err());
    let s = d.newton_level_set(&d.coweight(&[0, 3]).unwrap()).unwrap();
    assert_eq!(s, NodeSet::single(0));
}

#[test]
fn kottwitz_group_orders() {
    let cases = [
        (CartanType::A(1), 2),
        (CartanType::A(3), 4),
        (CartanType::B(3), 2),
        (CartanType::C(4), 2),
        (CartanType::D(5), 4),
        (CartanType::E(6), 3),
        (CartanType::E(7), 2),
        (CartanType::E(8), 1),
        (CartanType::F4, 1),
        (CartanType::G2, 1),
    ];
    for (t, k) in cases {
        assert_eq!(RootDatum::split(t).kottwitz_group().count(), k, "{t}");
    }
    let a3 = RootDatum::with_twist(CartanType::A(3), Twist::Flip).unwrap();
    assert_eq!(a3.kottwitz_group().count(), 2);
    let a2 = RootDatum::with_twist(CartanType::A(2), Twist::Flip).unwrap();
    assert_eq!(a2.kottwitz_group().count(), 1);
    let d4 = RootDatum::with_twist(CartanType::D(4), Twist::Triality).unwrap();
    assert_eq!(d4.kottwitz_group().count(), 1);
}

#[test]
fn kottwitz_of_a2_fundamental_coweight_is_a_generator() {
    let d = RootDatum::split(CartanType::A(2));
    let k1 = d.kottwitz_of(&d.fundamental_coweight(0)).unwrap();
    let k2 = d.kottwitz_of(&d.fundamental_coweight(1)).unwrap();
    assert_ne!(k1, 0);
    assert_ne!(k2, 0);
    assert_ne!(k1, k2);
    let twice = d.coweight(&[2, 0]).unwrap();
    assert_eq!(d.kottwitz_of(&twice).unwrap(), k2);
}

// The folded roots are orbit sums, so the folded system is dual to the type of
// the fixed-point affine Weyl group in the non-simply-laced cases.
#[test]
fn folding_catalogue() {
    let cases = [
        (CartanType::D(4), Twist::Triality, CartanType::G2),
        (CartanType::E(6), Twist::Flip, CartanType::F4),
        (CartanType::D(4), Twist::Flip, CartanType::C(3)),
        (CartanType::D(6), Twist::Flip, CartanType::C(5)),
        (CartanType::A(5), Twist::Flip, CartanType::B(3)),
        (CartanType::A(3), Twist::Flip, CartanType::C(2)),
        (CartanType::A(7), Twist::Flip, CartanType::B(4)),
    ];
    for (t, tw, want) in cases {
        let d = RootDatum::with_twist(t, tw).unwrap();
        let f = d.fold_to_split().unwrap();
        assert_eq!(f.split().cartan_type(), want, "{t} {tw:?}");
        assert!(f.split().is_split());
    }
}

#[test]
fn folding_odd_type_a() {
    let d = RootDatum::with_twist(CartanType::A(2), Twist::Flip).unwrap();
    assert_eq!(
        d.fold_to_split().unwrap().split().cartan_type(),
        CartanType::A(1)
    );
    let d = RootDatum::with_twist(CartanType::A(4), Twist::Flip).unwrap();
    let s = d.fold_to_split().unwrap();
    assert_eq!(s.split().rank(), 2);
    assert_eq!(s.split().positive_roots().len(), 4);
}

#[test]
fn folding_transfers_fundamental_pairings() {
    let d = RootDatum::with_twist(CartanType::E(6), Twist::Flip).unwrap();
    let f = d.fold_to_split().unwrap();
    for (k, o) in f.orbits().iter().enumerate() {
        let mu = d.diamond(&d.fundamental_coweight(o[0]));
        let v = f.to_split(&mu).unwrap();
        assert_eq!(v, f.split().fundamental_coweight(k));
        assert_eq!(f.from_split(&v), mu);
    }
}

#[test]
fn sigma_must_preserve_cartan_matrix() {
    assert!(RootDatum::new(CartanType::B(3), vec![2, 1, 0]).is_err());
    assert!(RootDatum::new(CartanType::A(3), vec![0, 0, 1]).is_err());
    assert!(RootDatum::with_twist(CartanType::E(7), Twist::Flip).is_err());
}

#[test]
fn json_round_trip() {
    let d = RootDatum::from_json(r#"{"type":"E","rank":6,"sigma":[6,2,5,4,3,1]}"#).unwrap();
    assert!(!d.is_split());
    assert_eq!(d.orbits().len(), 4);
    let text = serde_json::to_string(&d.spec()).unwrap();
    let e = RootDatum::from_json(&text).unwrap();
    assert_eq!(e.sigma(), d.sigma());
    assert!(RootDatum::from_json(r#"{"type":"Q","rank":3}"#).is_err());
}

fn datum_strategy() -> impl Strategy<Value = CartanType> {
    proptest::sample::select(all_types())
}

proptest! {
    #[test]
    fn dominant_rep_word_replays(t in datum_strategy(), seed in proptest::collection::vec(-4i64..5, 8)) {
        let d = RootDatum::split(t);
        let v = d.coweight(&seed[..d.rank()]).unwrap();
        let (dom, word) = d.dominant_rep(&v);
        prop_assert!(d.is_dominant(&dom));
        let mut w = v.clone();
        for &i in &word {
            w = d.reflect(&w, i);
        }
        prop_assert_eq!(&w, &dom);
        prop_assert_eq!(d.dominant_rep(&dom).0, dom);
    }

    #[test]
    fn basis_round_trip(t in datum_strategy(), seed in proptest::collection::vec(-6i64..7, 8)) {
        let d = RootDatum::split(t);
        let v = d.coweight(&seed[..d.rank()]).unwrap();
        prop_assert_eq!(d.fundamental_coordinates(&v).unwrap(), seed[..d.rank()].to_vec());
    }

    #[test]
    fn kottwitz_is_additive(t in datum_strategy(), a in proptest::collection::vec(-3i64..4, 8), b in proptest::collection::vec(-3i64..4, 8)) {
        let d = RootDatum::split(t);
        let n = d.rank();
        let va = d.coweight(&a[..n]).unwrap();
        let vb = d.coweight(&b[..n]).unwrap();
        let sum: Vec<i64> = a[..n].iter().zip(&b[..n]).map(|(x, y)| x + y).collect();
        let vs = d.coweight(&sum).unwrap();
        // The class only depends on the coset, so a and b can be shifted by coroots.
        let shifted = &va + &d.simple_coroot(0);
        prop_assert_eq!(d.kottwitz_of(&shifted).unwrap(), d.kottwitz_of(&va).unwrap());
        if d.kottwitz_of(&vb).unwrap() == 0 {
            prop_assert_eq!(d.kottwitz_of(&vs).unwrap(), d.kottwitz_of(&va).unwrap());
        }
    }
}
