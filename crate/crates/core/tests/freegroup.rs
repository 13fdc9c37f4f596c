mod common;

use braidforce_core::{FreeEndo, FreeWord, Letter};
use common::*;
use proptest::prelude::*;
use rand::Rng;

#[test]
fn insert_cancel_corruptions_reduce_back() {
    let mut rng = rng(1);
    for _ in 0..1000 {
        let rank = rng.gen_range(1..=6);
        let target = word(&mut rng, rank, 20);
        let mut letters = target.letters().to_vec();
        for _ in 0..rng.gen_range(1..8) {
            let at = rng.gen_range(0..=letters.len());
            let l = random_letter(&mut rng, rank);
            letters.splice(at..at, [l, l.inverse()]);
        }
        let reduced = FreeWord::reduce(rank, letters.clone()).unwrap();
        assert_eq!(reduced, target);
        assert_eq!(reduced.letters(), naive_reduce(letters).as_slice());
    }
}

#[test]
fn concat_is_associative() {
    let mut rng = rng(2);
    for _ in 0..1000 {
        let rank = rng.gen_range(1..=5);
        let (a, b, c) = (word(&mut rng, rank, 10), word(&mut rng, rank, 10), word(&mut rng, rank, 10));
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert!((&a * &a.inverse()).is_identity());
    }
}

#[test]
fn cyclic_reduction_of_constructed_conjugates() {
    let mut rng = rng(3);
    for _ in 0..500 {
        let rank = rng.gen_range(2..=5);
        let u = word(&mut rng, rank, 8);
        let (u_core, _) = u.cyclic_reduce();
        let c = word(&mut rng, rank, 8);
        let x = &(&c * &u) * &c.inverse();
        let (core, conj) = x.cyclic_reduce();
        assert_eq!(&(&conj * &core) * &conj.inverse(), x);
        if core.len() >= 2 {
            let l = core.letters();
            assert!(!l[0].cancels(l[l.len() - 1]));
        }
        // cores of conjugates are cyclic rotations of one another
        assert_eq!(core.len(), u_core.len());
        assert!(u_core.conjugator(&core).unwrap().is_some());
    }
}

#[test]
fn conjugator_finds_witnesses() {
    let mut rng = rng(4);
    for _ in 0..500 {
        let rank = rng.gen_range(1..=5);
        let u = word(&mut rng, rank, 10);
        let c = word(&mut rng, rank, 10);
        let target = &(&c * &u) * &c.inverse();
        let found = u.conjugator(&target).unwrap().expect("conjugate");
        assert_eq!(&(&found * &u) * &found.inverse(), target);
    }
}

#[test]
fn abelianization_intertwines_endomorphisms() {
    let mut rng = rng(5);
    for _ in 0..500 {
        let rank = rng.gen_range(1..=5);
        let images = (0..rank).map(|_| word(&mut rng, rank, 6)).collect();
        let e = FreeEndo::new(images).unwrap();
        let x = word(&mut rng, rank, 12);
        assert_eq!(e.apply(&x).unwrap().abelianize(), e.matrix().mul_vec(&x.abelianize()));
    }
}

fn letters_strategy(rank: u32) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec((1..=rank, any::<bool>()).prop_map(|(i, inv)| Letter::new(i, inv)), 0..40)
}

proptest! {
    #[test]
    fn reduce_is_idempotent(letters in letters_strategy(4)) {
        let once = FreeWord::reduce(4, letters).unwrap();
        let twice = FreeWord::reduce(4, once.letters().to_vec()).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn apply_is_letterwise_substitution(letters in letters_strategy(3), seed in any::<u64>()) {
        let mut rng = rng(seed);
        let e = FreeEndo::new((0..3).map(|_| word(&mut rng, 3, 5)).collect()).unwrap();
        let raw: Vec<Letter> = letters
            .iter()
            .flat_map(|l| {
                let image = e.image(l.index()).unwrap();
                if l.is_inverse() { image.inverse().letters().to_vec() } else { image.letters().to_vec() }
            })
            .collect();
        let x = FreeWord::reduce(3, letters).unwrap();
        prop_assert_eq!(e.apply(&x).unwrap(), FreeWord::reduce(3, raw).unwrap());
    }

    #[test]
    fn apply_is_homomorphic(a in letters_strategy(3), b in letters_strategy(3), seed in any::<u64>()) {
        let mut rng = rng(seed);
        let e = FreeEndo::new((0..3).map(|_| word(&mut rng, 3, 5)).collect()).unwrap();
        let (a, b) = (FreeWord::reduce(3, a).unwrap(), FreeWord::reduce(3, b).unwrap());
        prop_assert_eq!(e.apply(&(&a * &b)).unwrap(), &e.apply(&a).unwrap() * &e.apply(&b).unwrap());
    }
}

#[test]
fn worked_example_images_under_square() {
    let f = FreeEndo::new(vec![w(5, &[1, 2, 5, -2, -1]), w(5, &[1]), w(5, &[2]), w(5, &[-5, 3, 5]), w(5, &[-5, 4, 5])])
        .unwrap();
    let x3 = w(5, &[3]);
    assert_eq!(f.power(2).apply(&x3).unwrap(), w(5, &[1]));
    assert_eq!(f.apply(&f.apply(&x3).unwrap()).unwrap(), w(5, &[1]));
    assert_eq!(f.apply(&w(5, &[2])).unwrap(), w(5, &[1]));
    // column j of the matrix is the abelianized image of x_j: the 5-cycle
    let m = f.matrix();
    for (j, target) in [5, 1, 2, 3, 4].into_iter().enumerate() {
        let col = m.column(j);
        assert_eq!(col.iter().sum::<i64>(), 1);
        assert_eq!(col[target - 1], 1);
    }
    assert!(!f.endo_eq(&FreeEndo::identity(5)).unwrap());
}
