//! The upward Brauer category: hom-spaces spanned by perfect matchings of
//! positive (source) and negative (target) points with no positive-positive
//! pairs, with the two-sided relabeling actions of the symmetric groups.

use crate::partitions::factorial;
use crate::symgroup::Permutation;

/// Point of a matching: `Pos(i)` is the i-th source, `Neg(j)` the j-th
/// target, both 1-based.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Vertex {
    Pos(usize),
    Neg(usize),
}

/// Perfect matching on m positives and n negatives with no pair of two
/// positives. Pairs are stored canonically: each pair sorted, pairs sorted.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct UpwardBrauerDiagram {
    positives: usize,
    negatives: usize,
    pairs: Vec<(Vertex, Vertex)>,
}

impl UpwardBrauerDiagram {
    fn canonicalize(mut pairs: Vec<(Vertex, Vertex)>) -> Vec<(Vertex, Vertex)> {
        for p in pairs.iter_mut() {
            if p.0 > p.1 {
                std::mem::swap(&mut p.0, &mut p.1);
            }
        }
        pairs.sort();
        pairs
    }

    pub fn new(positives: usize, negatives: usize, pairs: Vec<(Vertex, Vertex)>) -> Self {
        let pairs = Self::canonicalize(pairs);
        let diagram = UpwardBrauerDiagram {
            positives,
            negatives,
            pairs,
        };
        diagram.validate();
        diagram
    }

    fn validate(&self) {
        assert_eq!(
            self.pairs.len() * 2,
            self.positives + self.negatives,
            "matching must be perfect"
        );
        let mut seen = std::collections::BTreeSet::new();
        for &(a, b) in &self.pairs {
            assert!(
                !matches!((a, b), (Vertex::Pos(_), Vertex::Pos(_))),
                "no pair of two positives"
            );
            for v in [a, b] {
                match v {
                    Vertex::Pos(i) => assert!(i >= 1 && i <= self.positives),
                    Vertex::Neg(j) => assert!(j >= 1 && j <= self.negatives),
                }
                assert!(seen.insert(v), "vertex matched twice");
            }
        }
    }

    pub fn positives(&self) -> usize {
        self.positives
    }

    pub fn negatives(&self) -> usize {
        self.negatives
    }

    pub fn pairs(&self) -> &[(Vertex, Vertex)] {
        &self.pairs
    }

    /// Relabel: `sigma` permutes the negatives, `tau` the positives.
    pub fn relabel(&self, sigma: &Permutation, tau: &Permutation) -> Self {
        debug_assert_eq!(sigma.degree(), self.negatives);
        debug_assert_eq!(tau.degree(), self.positives);
        let map = |v: Vertex| match v {
            Vertex::Pos(i) => Vertex::Pos(tau.apply(i - 1) + 1),
            Vertex::Neg(j) => Vertex::Neg(sigma.apply(j - 1) + 1),
        };
        UpwardBrauerDiagram {
            positives: self.positives,
            negatives: self.negatives,
            pairs: Self::canonicalize(
                self.pairs.iter().map(|&(a, b)| (map(a), map(b))).collect(),
            ),
        }
    }

    /// The distinguished diagram pairing i-th positive with i-th negative
    /// and the last two negatives with each other; requires n = m + 2
    /// negatives.
    pub fn identity_with_cup(m: usize) -> Self {
        let mut pairs: Vec<(Vertex, Vertex)> = (1..=m)
            .map(|i| (Vertex::Pos(i), Vertex::Neg(i)))
            .collect();
        pairs.push((Vertex::Neg(m + 1), Vertex::Neg(m + 2)));
        Self::new(m, m + 2, pairs)
    }
}

/// All diagrams with m positives and n negatives, in a deterministic order.
/// Empty when n < m or n - m is odd.
pub fn enumerate_ub(m: usize, n: usize) -> Vec<UpwardBrauerDiagram> {
    if n < m || !(n - m).is_multiple_of(2) {
        return Vec::new();
    }
    let vertices: Vec<Vertex> = (1..=m)
        .map(Vertex::Pos)
        .chain((1..=n).map(Vertex::Neg))
        .collect();
    let mut out = Vec::new();
    let mut pairs = Vec::new();
    let mut used = vec![false; vertices.len()];
    fn go(
        vertices: &[Vertex],
        used: &mut Vec<bool>,
        pairs: &mut Vec<(Vertex, Vertex)>,
        out: &mut Vec<Vec<(Vertex, Vertex)>>,
    ) {
        let Some(first) = used.iter().position(|&u| !u) else {
            out.push(pairs.clone());
            return;
        };
        used[first] = true;
        for second in first + 1..vertices.len() {
            if used[second] {
                continue;
            }
            // source-source pairs are not allowed
            if matches!(
                (vertices[first], vertices[second]),
                (Vertex::Pos(_), Vertex::Pos(_))
            ) {
                continue;
            }
            used[second] = true;
            pairs.push((vertices[first], vertices[second]));
            go(vertices, used, pairs, out);
            pairs.pop();
            used[second] = false;
        }
        used[first] = false;
    }
    let mut raw = Vec::new();
    go(&vertices, &mut used, &mut pairs, &mut raw);
    for pairs in raw {
        out.push(UpwardBrauerDiagram::new(m, n, pairs));
    }
    out.sort();
    out
}

/// Number of diagrams with m positives and n negatives.
pub fn ub_dim(m: usize, n: usize) -> u64 {
    enumerate_ub(m, n).len() as u64
}

/// Number of diagrams in the hom-space from n positives to m negatives fixed
/// by relabeling negatives with `sigma` and positives with `tau`. The action
/// permutes diagrams without signs, so the trace is a fixed-point count.
pub fn ub_bimodule_trace(n: usize, m: usize, sigma: &Permutation, tau: &Permutation) -> u64 {
    enumerate_ub(n, m)
        .into_iter()
        .filter(|d| &d.relabel(sigma, tau) == d)
        .count() as u64
}

/// Closed count for the one-cup case: n positives, n + 2 negatives.
pub fn ub_cup_count(n: usize) -> u64 {
    factorial(n + 2) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::all_permutations;
    use std::collections::BTreeSet;

    #[test]
    fn enumerate_small() {
        let d = enumerate_ub(0, 2);
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].pairs(), &[(Vertex::Neg(1), Vertex::Neg(2))]);

        assert_eq!(enumerate_ub(1, 3).len(), 3);
        assert_eq!(enumerate_ub(2, 3).len(), 0);
        assert_eq!(enumerate_ub(3, 1).len(), 0);
    }

    #[test]
    fn dims_match_closed_forms() {
        for n in 0..=5usize {
            assert_eq!(ub_dim(n, n + 2), ub_cup_count(n), "one cup, n = {n}");
        }
        for n in 0..=5usize {
            assert_eq!(ub_dim(n, n), factorial(n), "bijections at n = {n}");
        }
    }

    #[test]
    fn trace_identity_is_dimension() {
        for (n, m) in [(1, 3), (2, 4), (3, 3)] {
            assert_eq!(
                ub_bimodule_trace(n, m, &Permutation::identity(m), &Permutation::identity(n)),
                ub_dim(n, m)
            );
        }
    }

    #[test]
    fn cup_is_symmetric() {
        let swap = Permutation::from_cycles(2, &[vec![1, 2]]);
        assert_eq!(ub_bimodule_trace(0, 2, &swap, &Permutation::identity(0)), 1);
    }

    #[test]
    fn fixed_points_small_case() {
        let sigma = Permutation::from_cycles(3, &[vec![1, 2]]);
        assert_eq!(
            ub_bimodule_trace(1, 3, &sigma, &Permutation::identity(1)),
            1
        );
    }

    #[test]
    fn cup_diagrams_form_one_orbit_under_negative_relabeling() {
        for n in 0..=3usize {
            let base = UpwardBrauerDiagram::identity_with_cup(n);
            let orbit: BTreeSet<UpwardBrauerDiagram> = all_permutations(n + 2)
                .iter()
                .map(|sigma| base.relabel(sigma, &Permutation::identity(n)))
                .collect();
            let all: BTreeSet<UpwardBrauerDiagram> = enumerate_ub(n, n + 2).into_iter().collect();
            assert_eq!(orbit, all, "orbit generation fails at n = {n}");
        }
    }
}
