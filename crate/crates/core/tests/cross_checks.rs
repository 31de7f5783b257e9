//! Heavier cross-module sweeps: the symmetrizer-rank route against the
//! Littlewood-Richardson numbers over the full degree range, and the
//! matching-diagram character route at the same sizes.

use extschur::ext::{ext1_closed, ext1_oracle_ub_character, ExtQuery};
use extschur::parallel::map_collect;
use extschur::partitions::{enumerate_partitions, lr_coefficient, Partition};
use extschur::symgroup::{right_ideal_with_embedded_symmetrizer, symmetrizer_multiplicity};

/// Symmetrizer ranks match LR numbers for every lambda of size up to 4 and
/// every mu of size |lambda| + 2 (ambient groups up to degree 6).
#[test]
fn symmetrizer_ranks_match_lr_through_degree_six() {
    let mut pairs = Vec::new();
    for n in 0..=4usize {
        for lambda in enumerate_partitions(n) {
            for mu in enumerate_partitions(n + 2) {
                pairs.push((lambda.clone(), mu));
            }
        }
    }
    let failures: Vec<String> = map_collect(&pairs, |(lambda, mu)| {
        let span = right_ideal_with_embedded_symmetrizer(lambda, lambda.size() + 2);
        let rank = symmetrizer_multiplicity(mu, &span) as u64;
        let lr = lr_coefficient(mu, lambda, &Partition::one_row(2));
        (rank != lr).then(|| format!("({lambda}, {mu}): rank {rank} vs LR {lr}"))
    })
    .into_iter()
    .flatten()
    .collect();
    assert!(failures.is_empty(), "mismatches: {failures:?}");
}

/// The matching-diagram character route agrees with the closed formula on
/// every |mu| = |lambda| + 2 pair with |lambda| <= 4, including the zeros.
#[test]
fn ub_character_route_matches_closed_formula() {
    for n in 0..=4usize {
        for lambda in enumerate_partitions(n) {
            for mu in enumerate_partitions(n + 2) {
                let q = ExtQuery::new(lambda.clone(), mu.clone());
                assert_eq!(
                    ext1_oracle_ub_character(&q),
                    ext1_closed(&q),
                    "at ({lambda}, {mu})"
                );
            }
        }
    }
}
