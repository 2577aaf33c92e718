use std::collections::BTreeSet;

use proptest::prelude::*;

use cyclesieve::csp::verify_csp;
use cyclesieve::symfunc::plethysm_by_substitution;
use cyclesieve::tableaux::{rsk, tableau_bfmaj_nu, tableau_descents};
use cyclesieve::words::{
    bfmaj_from_descents, bfmaj_nu, content, descent_set, flex, necklace_of, period_freq, rotations, Letter,
};
use cyclesieve::{Basis, Partition, Scalar, Sym, Word, Q};

fn word(max_len: usize, max_letter: Letter) -> impl Strategy<Value = Vec<Letter>> {
    prop::collection::vec(1..=max_letter, 1..=max_len)
}

fn composition_of(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(1..=n, 1..=n).prop_map(move |mut parts| {
        let mut out = Vec::new();
        let mut left = n;
        for p in parts.drain(..) {
            if left == 0 {
                break;
            }
            let take = p.min(left);
            out.push(take);
            left -= take;
        }
        if left > 0 {
            out.push(left);
        }
        out
    })
}

fn word_with_blocks(max_len: usize) -> impl Strategy<Value = (Vec<Letter>, Vec<usize>)> {
    word(max_len, 4).prop_flat_map(|w| {
        let n = w.len();
        (Just(w), composition_of(n))
    })
}

fn schur_combo(degree: usize, nonneg: bool) -> impl Strategy<Value = Sym> {
    let shapes = Partition::all(degree);
    let lo = if nonneg { 0 } else { -3 };
    prop::collection::vec(lo..=3i64, shapes.len()).prop_map(move |cs| {
        Sym::from_int_terms(degree, Basis::Schur, shapes.iter().cloned().zip(cs))
    })
}

fn sym_in(degree: usize) -> impl Strategy<Value = Sym> {
    (schur_combo(degree, false), prop::sample::select(vec![Basis::Schur, Basis::Monomial, Basis::PowerSum]))
        .prop_map(|(f, b)| f.convert(b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn period_times_frequency_is_length(w in word(10, 3)) {
        let (period, freq) = period_freq(&w).unwrap();
        prop_assert_eq!(period * freq, w.len());
        prop_assert_eq!(rotations(&w).unwrap().len(), period);
    }

    #[test]
    fn flex_is_a_multiple_of_frequency_in_range(w in word(10, 3)) {
        let f = flex(&w).unwrap();
        let (_, freq) = period_freq(&w).unwrap();
        prop_assert!(f >= 1 && f <= w.len());
        prop_assert_eq!(f % freq, 0);
    }

    #[test]
    fn flex_hits_each_admissible_value_once_per_necklace(w in word(9, 3)) {
        let n = w.len();
        let neck = necklace_of(&w).unwrap();
        let freq = neck.frequency();
        let values: Vec<usize> = neck.words().iter().map(|v| flex(v.letters()).unwrap()).collect();
        let distinct: BTreeSet<usize> = values.iter().copied().collect();
        prop_assert_eq!(distinct.len(), values.len());
        let expected: BTreeSet<usize> = (1..=n).filter(|r| r % freq == 0).collect();
        prop_assert_eq!(distinct, expected);
    }

    #[test]
    fn bfmaj_depends_only_on_descents((w, nu) in word_with_blocks(9)) {
        let direct = bfmaj_nu(&w, &nu).unwrap();
        let via_des = bfmaj_from_descents(&descent_set(&w), &nu).unwrap();
        prop_assert_eq!(direct, via_des);
    }

    #[test]
    fn rsk_preserves_content_shape_and_descents((w, nu) in word_with_blocks(9)) {
        let (p, q) = rsk(&w);
        prop_assert_eq!(p.content(), content(&w));
        prop_assert_eq!(p.shape(), q.shape());
        prop_assert!(q.is_standard());
        prop_assert_eq!(tableau_descents(&q).unwrap(), descent_set(&w));
        prop_assert_eq!(tableau_bfmaj_nu(&q, &nu).unwrap(), bfmaj_nu(&w, &nu).unwrap());
    }

    #[test]
    fn multiplication_is_commutative(f in sym_in(2), g in sym_in(3)) {
        prop_assert!(f.multiply(&g).value_eq(&g.multiply(&f)));
    }

    #[test]
    fn multiplication_is_associative(f in sym_in(1), g in sym_in(2), h in sym_in(2)) {
        prop_assert!(f.multiply(&g).multiply(&h).value_eq(&f.multiply(&g.multiply(&h))));
    }

    #[test]
    fn omega_is_an_involutive_algebra_map(f in sym_in(2), g in sym_in(3)) {
        prop_assert!(f.omega().omega().value_eq(&f));
        prop_assert!(f.multiply(&g).omega().value_eq(&f.omega().multiply(&g.omega())));
        let h = f.multiply(&g);
        let k = g.multiply(&f).scale(&Q::from_i64(2));
        prop_assert!((h.clone() + k.clone()).omega().value_eq(&(h.omega() + k.omega())));
    }

    #[test]
    fn plethysm_matches_substitution(
        (f, g) in (1usize..=3).prop_flat_map(|a| {
            let b = if a == 1 { 1usize..=3 } else { 1usize..=2 };
            (schur_combo(a, false), b.prop_flat_map(|b| schur_combo(b, true)))
        })
    ) {
        let nvars = f.degree() * g.degree();
        let fast = f.plethysm(&g);
        let slow = plethysm_by_substitution(&f, &g, nvars).unwrap();
        prop_assert!(fast.value_eq(&slow));
    }

    #[test]
    fn flex_sieves_rotation_closed_sets(seeds in prop::collection::vec(word(1, 3), 1..6), n in 1usize..=6) {
        // grow each seed to length n, then close under rotation
        let mut pool: BTreeSet<Vec<Letter>> = BTreeSet::new();
        for (i, s) in seeds.iter().enumerate() {
            let w: Vec<Letter> = (0..n).map(|j| ((s[0] as usize + i * j + j * j) % 3 + 1) as Letter).collect();
            for r in rotations(&w).unwrap() {
                pool.insert(r.letters().to_vec());
            }
        }
        let words: Vec<Word> = pool.into_iter().map(|v| Word::new(v).unwrap()).collect();
        let report = verify_csp(&words, n, |v| flex(v).unwrap()).unwrap();
        prop_assert!(report.holds);
    }
}
