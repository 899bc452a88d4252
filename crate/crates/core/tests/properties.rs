mod common;

use std::collections::HashSet;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::*;
use tercode_core::code::build_code;
use tercode_core::function::FamilyKind;
use tercode_core::minimality::{covers, covers_via_weight_identity};
use tercode_core::report::RunConfig;
use tercode_core::subspace::{spread_construct, Subspace};
use tercode_core::walsh::{walsh_table, Eisenstein};
use tercode_core::{index_vec, pow3, vec_index, Execution, Gf3, TritVec};

fn vec_strategy(m: usize) -> impl Strategy<Value = TritVec> {
    prop::collection::vec(0u8..3, m).prop_map(|d| TritVec::from_digits(&d).unwrap())
}

/// An ambient dimension, generators of a subspace and a probe vector.
fn subspace_case() -> impl Strategy<Value = (usize, Vec<TritVec>, TritVec)> {
    (1usize..=4).prop_flat_map(|m| {
        (
            Just(m),
            prop::collection::vec(vec_strategy(m), 0..=m),
            vec_strategy(m),
        )
    })
}

fn expected_sections(w: &Subspace, y: &TritVec) -> [usize; 3] {
    if w.dual().contains(y).unwrap() {
        [w.size(), 0, 0]
    } else {
        let third = pow3(w.dim() - 1);
        [third; 3]
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn sections_are_balanced_off_the_dual((m, gens, y) in subspace_case()) {
        let w = Subspace::span(m, &gens).unwrap();
        let counts = w.section_count(&y).unwrap();
        prop_assert_eq!(counts, expected_sections(&w, &y));
        prop_assert_eq!(counts.iter().sum::<usize>(), w.size());
    }

    #[test]
    fn dual_has_complementary_dimension((m, gens, _y) in subspace_case()) {
        let w = Subspace::span(m, &gens).unwrap();
        let d = w.dual();
        prop_assert_eq!(w.dim() + d.dim(), m);
        prop_assert_eq!(d.dual(), w.clone());
        for u in d.elements() {
            for x in w.basis() {
                prop_assert_eq!(u.dot(x).unwrap(), Gf3::ZERO);
            }
        }
    }

    #[test]
    fn packed_addition_matches_digits(a in vec_strategy(70), b in vec_strategy(70)) {
        let sum = &a + &b;
        for i in 0..70 {
            prop_assert_eq!(sum.get(i), a.get(i) + b.get(i));
        }
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        prop_assert_eq!(-&(-&a), a.clone());
        let dot = a.iter().zip(b.iter()).fold(Gf3::ZERO, |acc, (x, y)| acc + x * y);
        prop_assert_eq!(a.dot(&b).unwrap(), dot);
    }

    #[test]
    fn index_round_trip(n in 1usize..=8, seed in any::<u64>()) {
        let i = (seed as usize) % pow3(n);
        prop_assert_eq!(vec_index(&index_vec(i, n).unwrap()), i);
    }
}

#[test]
fn sections_exhaustive_small_dimensions() {
    for m in 1..=2 {
        let vectors: Vec<TritVec> = (0..pow3(m)).map(|i| index_vec(i, m).unwrap()).collect();
        for a in &vectors {
            for b in &vectors {
                let w = Subspace::span(m, &[a.clone(), b.clone()]).unwrap();
                for y in &vectors {
                    assert_eq!(w.section_count(y).unwrap(), expected_sections(&w, y));
                }
            }
        }
    }
}

#[test]
fn spread_duals_are_pairwise_disjoint() {
    for t in 1..=3 {
        let sp = spread_construct(t).unwrap();
        let duals: Vec<Subspace> = sp.members().iter().map(Subspace::dual).collect();
        for i in 0..duals.len() {
            assert_eq!(duals[i].dim(), t);
            for j in i + 1..duals.len() {
                assert!(sp.members()[i].meets_trivially(&sp.members()[j]));
                assert!(duals[i].meets_trivially(&duals[j]), "t={t} duals {i},{j}");
            }
        }
    }
}

#[test]
fn spreads_and_duals_partition_nonzero_vectors() {
    for t in 1..=3 {
        let sp = spread_construct(t).unwrap();
        let n = 2 * t;
        let mut member_hits = vec![0u32; pow3(n)];
        let mut dual_hits = vec![0u32; pow3(n)];
        for w in sp.members() {
            for x in w.elements() {
                member_hits[vec_index(&x)] += 1;
            }
            for u in w.dual().elements() {
                dual_hits[vec_index(&u)] += 1;
            }
        }
        let members = sp.len() as u32;
        assert_eq!(member_hits[0], members);
        assert_eq!(dual_hits[0], members);
        assert!(member_hits[1..].iter().all(|&h| h == 1), "t={t}");
        assert!(dual_hits[1..].iter().all(|&h| h == 1), "t={t}");
        let owner = sp.dual_owner_table();
        assert!(owner[0].is_none() && owner[1..].iter().all(Option::is_some));
    }
}

#[test]
fn weight_identity_exhaustive_small_codes() {
    for config in all_configs(2) {
        let code = build_code(&config.function().unwrap()).unwrap();
        let words = code.codewords(Execution::Sequential);
        for c1 in &words {
            for c2 in &words {
                assert_eq!(
                    covers_via_weight_identity(c1, c2).unwrap(),
                    covers(c1, c2).unwrap()
                );
            }
        }
    }
    // every pair of vectors of length 4
    let vectors: Vec<TritVec> = (0..pow3(4)).map(|i| index_vec(i, 4).unwrap()).collect();
    for c1 in &vectors {
        for c2 in &vectors {
            assert_eq!(
                covers_via_weight_identity(c1, c2).unwrap(),
                covers(c1, c2).unwrap()
            );
        }
    }
}

#[test]
fn weight_identity_sampled_at_n6() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut covered = 0;
    let mut total = 0;
    for config in [
        RunConfig::new(6, FamilyKind::Characteristic, 2, None),
        RunConfig::new(6, FamilyKind::Ternary, 1, None),
    ] {
        let code = build_code(&config.unwrap().function().unwrap()).unwrap();
        let words = code.codewords(Execution::Parallel);
        for k in 0..5_000 {
            let c2 = &words[rng.gen_range(0..words.len())];
            // half the pairs restrict c2 to a random subset of its support
            let c1 = if k % 2 == 0 {
                words[rng.gen_range(0..words.len())].clone()
            } else {
                let mut c = c2.clone();
                for i in 0..c.len() {
                    if rng.gen_bool(0.3) {
                        c.set(i, Gf3::ZERO);
                    } else if rng.gen_bool(0.5) {
                        c.set(i, -c.get(i));
                    }
                }
                c
            };
            let by_support = covers(&c1, c2).unwrap();
            assert_eq!(covers_via_weight_identity(&c1, c2).unwrap(), by_support);
            covered += by_support as usize;
            total += 1;
        }
    }
    assert_eq!(total, 10_000);
    assert!(covered >= 5_000);
}

#[test]
fn parseval_and_spectrum_sum() {
    for n in [2, 4, 6] {
        for config in all_configs(n) {
            let table = walsh_table(&config.function().unwrap());
            let q = pow3(n) as i64;
            assert_eq!(table.energy(), q * q, "{config:?}");
            // f(0) = 0 for every spread function
            assert_eq!(table.sum(), Eisenstein::real(q), "{config:?}");
        }
    }
}

#[test]
fn real_part_is_even() {
    for n in [2, 4, 6] {
        for config in all_configs(n) {
            let table = walsh_table(&config.function().unwrap());
            for i in 0..pow3(n) {
                let neg = vec_index(&-&index_vec(i, n).unwrap());
                assert_eq!(table.twice_re(i), table.twice_re(neg));
            }
        }
    }
}

#[test]
fn codes_have_full_rank() {
    for n in [2, 4] {
        for config in all_configs(n) {
            let code = build_code(&config.function().unwrap()).unwrap();
            assert_eq!(code.length(), pow3(n) - 1);
            assert_eq!(code.dimension(), n + 1, "{config:?}");
            let distinct: HashSet<TritVec> =
                code.codewords(Execution::default()).into_iter().collect();
            assert_eq!(distinct.len(), pow3(n + 1));
        }
    }
}
