//! The multilinear Lie operad and the hom-spaces of the linear PROP for Lie
//! algebras, realized concretely: bracket trees expand into the tensor
//! algebra, where membership and ranks are plain linear algebra.
//!
//! Lie(k) is spanned by the left-normed brackets [[...[1, w2], w3...], wk]
//! over permutations (w2..wk) of {2..k}; the hom-space from n to m is the
//! direct sum over surjections {1..n} ->> {1..m} of tensor products of
//! Lie(fiber) factors, carrying commuting actions of the two symmetric
//! groups.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::linalg::{Rational, RationalMatrix, RowEchelon};
use crate::partitions::factorial;
use crate::symgroup::{all_permutations, Permutation};

/// Binary bracket tree with leaves labeled bijectively by {1..k}.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BracketTree {
    Leaf(usize),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn leaf(label: usize) -> Self {
        BracketTree::Leaf(label)
    }

    pub fn bracket(left: BracketTree, right: BracketTree) -> Self {
        BracketTree::Node(Box::new(left), Box::new(right))
    }

    /// Left-normed tree [[...[w1, w2], w3...], wk] for a word of length >= 1.
    pub fn left_normed(word: &[usize]) -> Self {
        assert!(!word.is_empty(), "left-normed tree needs at least one leaf");
        let mut tree = BracketTree::leaf(word[0]);
        for &w in &word[1..] {
            tree = BracketTree::bracket(tree, BracketTree::leaf(w));
        }
        tree
    }

    pub fn leaves(&self) -> Vec<usize> {
        match self {
            BracketTree::Leaf(l) => vec![*l],
            BracketTree::Node(a, b) => {
                let mut v = a.leaves();
                v.extend(b.leaves());
                v
            }
        }
    }
}

/// Multilinear element of the tensor algebra: a formal sum of length-k
/// permutation words with rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultilinearPoly {
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl MultilinearPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<usize>, Rational> {
        &self.terms
    }

    pub fn coefficient(&self, word: &[usize]) -> Rational {
        self.terms.get(word).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, word: Vec<usize>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        MultilinearPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, v)| (w.clone(), v * c))
                .collect(),
        }
    }

    /// Concatenation product of words, extended bilinearly.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1 * c2);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Dense coordinates over all length-k permutation words in Lehmer order.
    /// Words must use the letters 1..k.
    pub fn to_vector(&self, k: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); factorial(k) as usize];
        for (w, c) in &self.terms {
            let images: Vec<usize> = w.iter().map(|&x| x - 1).collect();
            v[Permutation::from_images(images).lehmer_rank()] = c.clone();
        }
        v
    }
}

/// Associative expansion [a, b] = ab - ba, recursively.
pub fn expand_bracket(t: &BracketTree) -> MultilinearPoly {
    match t {
        BracketTree::Leaf(l) => {
            let mut p = MultilinearPoly::zero();
            p.add_term(vec![*l], Rational::one());
            p
        }
        BracketTree::Node(a, b) => {
            let ea = expand_bracket(a);
            let eb = expand_bracket(b);
            ea.concat(&eb).add(&eb.concat(&ea).scale(&-Rational::one()))
        }
    }
}

/// The left-normed basis words of Lie(k): 1 followed by each permutation of
/// {2..k}, in lexicographic order.
pub fn left_normed_basis_words(k: usize) -> Vec<Vec<usize>> {
    assert!(k >= 1, "Lie(k) needs k >= 1");
    all_permutations(k - 1)
        .into_iter()
        .map(|p| {
            let mut w = vec![1];
            w.extend((0..k - 1).map(|i| p.apply(i) + 2));
            w
        })
        .collect()
}

/// Rank of the span of the left-normed expansions; equals (k-1)!.
pub fn lie_dim(k: usize) -> usize {
    assert!(k >= 1);
    let mut ech = RowEchelon::new(factorial(k) as usize);
    for w in left_normed_basis_words(k) {
        ech.insert(expand_bracket(&BracketTree::left_normed(&w)).to_vector(k));
    }
    ech.rank()
}

/// Coefficients of a multilinear Lie element over the left-normed basis,
/// found by solving against the basis expansions in the tensor algebra.
///
/// Panics if the expansion does not lie in the span; for genuine Lie
/// elements that cannot happen.
pub fn rewrite_poly_to_basis(poly: &MultilinearPoly, k: usize) -> Vec<Rational> {
    let words = left_normed_basis_words(k);
    let cols: Vec<Vec<Rational>> = words
        .iter()
        .map(|w| expand_bracket(&BracketTree::left_normed(w)).to_vector(k))
        .collect();
    let rows = factorial(k) as usize;
    let mut m = RationalMatrix::zeros(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col.iter().enumerate() {
            if !v.is_zero() {
                m.set(i, j, v.clone());
            }
        }
    }
    m.solve_consistent(&poly.to_vector(k))
        .expect("expansion must lie in the span of the left-normed basis")
}

/// Coefficients of a bracket tree over the left-normed basis of Lie(k),
/// where k is the number of leaves.
pub fn rewrite_to_basis(t: &BracketTree) -> Vec<Rational> {
    let mut leaves = t.leaves();
    let k = leaves.len();
    leaves.sort_unstable();
    assert!(
        leaves == (1..=k).collect::<Vec<_>>(),
        "leaves must be labeled bijectively by 1..k"
    );
    rewrite_poly_to_basis(&expand_bracket(t), k)
}

/// Dimension of the hom-space from m to n: the sum over surjections
/// f: {1..m} ->> {1..n} of prod_i (|f^-1(i)| - 1)!. Zero when m < n.
pub fn catlie_dim(m: usize, n: usize) -> u64 {
    if m < n {
        return 0;
    }
    if n == 0 {
        return u64::from(m == 0);
    }
    let mut total = 0u64;
    let mut assignment = vec![0usize; m];
    loop {
        let mut hit = vec![0usize; n];
        for &a in &assignment {
            hit[a] += 1;
        }
        if hit.iter().all(|&c| c > 0) {
            total += hit.iter().map(|&c| factorial(c - 1)).product::<u64>();
        }
        // odometer
        let mut i = 0;
        loop {
            if i == m {
                return total;
            }
            assignment[i] += 1;
            if assignment[i] < n {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

/// Basis element of the hom-space: a surjective assignment of sources to
/// targets (0-based) plus one left-normed word per target fiber, written
/// with the source labels (1-based).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CatLieBasisElement {
    pub assignment: Vec<usize>,
    pub slot_words: Vec<Vec<usize>>,
}

/// Explicit basis of the hom-space from `source_arity` inputs to
/// `target_arity` outputs, with precomputed rewriting data for the two-sided
/// symmetric group actions.
pub struct CatLieSpace {
    pub source_arity: usize,
    pub target_arity: usize,
    pub basis: Vec<CatLieBasisElement>,
    /// Per basis element and target slot: index of its word in the abstract
    /// left-normed word list of that fiber size.
    slot_abstract_index: Vec<Vec<usize>>,
    /// (fiber size, abstract word) -> coefficients over the left-normed words.
    rewrites: HashMap<(usize, Vec<usize>), Vec<Rational>>,
    /// Global index of each (assignment, abstract word indices) pair.
    index: HashMap<(Vec<usize>, Vec<usize>), usize>,
}

impl CatLieSpace {
    pub fn new(source_arity: usize, target_arity: usize) -> Self {
        let n = source_arity;
        let m = target_arity;
        let mut basis = Vec::new();
        let mut slot_abstract_index = Vec::new();
        let mut index = HashMap::new();

        let mut fiber_sizes: Vec<usize> = Vec::new();
        let assignments = surjections(n, m);
        // Left-normed abstract words per fiber size present.
        for f in &assignments {
            let mut hit = vec![0usize; m];
            for &a in f {
                hit[a] += 1;
            }
            for &c in &hit {
                if !fiber_sizes.contains(&c) {
                    fiber_sizes.push(c);
                }
            }
        }
        let mut abstract_words: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
        for &c in &fiber_sizes {
            abstract_words.insert(c, left_normed_basis_words(c));
        }

        for f in &assignments {
            let fibers: Vec<Vec<usize>> = (0..m)
                .map(|t| {
                    (0..n)
                        .filter(|&i| f[i] == t)
                        .map(|i| i + 1)
                        .collect()
                })
                .collect();
            // Cartesian product over per-fiber abstract word choices.
            let counts: Vec<usize> = fibers
                .iter()
                .map(|fib| abstract_words[&fib.len()].len())
                .collect();
            let mut choice = vec![0usize; m];
            loop {
                let slot_words: Vec<Vec<usize>> = (0..m)
                    .map(|t| {
                        let aw = &abstract_words[&fibers[t].len()][choice[t]];
                        aw.iter().map(|&a| fibers[t][a - 1]).collect()
                    })
                    .collect();
                index.insert((f.clone(), choice.clone()), basis.len());
                slot_abstract_index.push(choice.clone());
                basis.push(CatLieBasisElement {
                    assignment: f.clone(),
                    slot_words,
                });
                let mut t = 0;
                loop {
                    if t == m {
                        break;
                    }
                    choice[t] += 1;
                    if choice[t] < counts[t] {
                        break;
                    }
                    choice[t] = 0;
                    t += 1;
                }
                if t == m {
                    break;
                }
            }
        }

        // Precompute rewrites of every abstract word of every present size.
        let mut rewrites = HashMap::new();
        for &c in &fiber_sizes {
            for p in all_permutations(c) {
                let word: Vec<usize> = (0..c).map(|i| p.apply(i) + 1).collect();
                let tree = BracketTree::left_normed(&word);
                let coeffs = rewrite_poly_to_basis(&expand_bracket(&tree), c);
                rewrites.insert((c, word), coeffs);
            }
        }

        CatLieSpace {
            source_arity: n,
            target_arity: m,
            basis,
            slot_abstract_index,
            rewrites,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn relabeled_abstract(&self, word: &[usize], tau_inv: &Permutation) -> (Vec<usize>, Vec<usize>) {
        let relabeled: Vec<usize> = word.iter().map(|&s| tau_inv.apply(s - 1) + 1).collect();
        let mut sorted = relabeled.clone();
        sorted.sort_unstable();
        let abstract_w = relabeled
            .iter()
            .map(|s| sorted.binary_search(s).unwrap() + 1)
            .collect();
        (abstract_w, sorted)
    }

    /// Image of a basis element under the two-sided action: `sigma` permutes
    /// the target slots (by postcomposition), `tau` permutes the source
    /// labels (by precomposition). Sparse result over basis indices.
    pub fn apply(&self, elem: usize, sigma: &Permutation, tau: &Permutation) -> Vec<(usize, Rational)> {
        let e = &self.basis[elem];
        let n = self.source_arity;
        let m = self.target_arity;
        debug_assert_eq!(sigma.degree(), m);
        debug_assert_eq!(tau.degree(), n);
        let tau_inv = tau.inverse();
        let sigma_inv = sigma.inverse();
        let new_assignment: Vec<usize> =
            (0..n).map(|i| sigma.apply(e.assignment[tau.apply(i)])).collect();
        // Per target slot of the image: rewrite the relabeled word.
        let mut per_slot: Vec<Vec<(usize, Rational)>> = Vec::with_capacity(m);
        for t in 0..m {
            let src_slot = sigma_inv.apply(t);
            let word = &e.slot_words[src_slot];
            let (abstract_w, _) = self.relabeled_abstract(word, &tau_inv);
            let coeffs = &self.rewrites[&(word.len(), abstract_w)];
            per_slot.push(
                coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(i, c)| (i, c.clone()))
                    .collect(),
            );
        }
        let mut out: Vec<(usize, Rational)> = Vec::new();
        let mut stack: Vec<(usize, Vec<usize>, Rational)> = vec![(0, Vec::new(), Rational::one())];
        while let Some((slot, choices, coeff)) = stack.pop() {
            if slot == m {
                let idx = self.index[&(new_assignment.clone(), choices)];
                out.push((idx, coeff));
                continue;
            }
            for (i, c) in &per_slot[slot] {
                let mut next = choices.clone();
                next.push(*i);
                stack.push((slot + 1, next, &coeff * c));
            }
        }
        out.sort_by_key(|&(i, _)| i);
        out
    }

    /// Trace of v -> sigma . v . tau over the whole basis.
    pub fn trace(&self, sigma: &Permutation, tau: &Permutation) -> Rational {
        let n = self.source_arity;
        let m = self.target_arity;
        debug_assert_eq!(sigma.degree(), m);
        debug_assert_eq!(tau.degree(), n);
        let tau_inv = tau.inverse();
        let sigma_inv = sigma.inverse();
        let mut trace = Rational::zero();
        for (idx, e) in self.basis.iter().enumerate() {
            let fixed = (0..n).all(|i| sigma.apply(e.assignment[tau.apply(i)]) == e.assignment[i]);
            if !fixed {
                continue;
            }
            let mut contrib = Rational::one();
            for t in 0..m {
                let src_slot = sigma_inv.apply(t);
                let word = &e.slot_words[src_slot];
                let (abstract_w, _) = self.relabeled_abstract(word, &tau_inv);
                let coeffs = &self.rewrites[&(word.len(), abstract_w)];
                let c = &coeffs[self.slot_abstract_index[idx][t]];
                if c.is_zero() {
                    contrib = Rational::zero();
                    break;
                }
                contrib *= c;
            }
            trace += contrib;
        }
        trace
    }
}

fn surjections(n: usize, m: usize) -> Vec<Vec<usize>> {
    if n < m {
        return Vec::new();
    }
    if m == 0 {
        return if n == 0 { vec![vec![]] } else { Vec::new() };
    }
    let mut out = Vec::new();
    let mut assignment = vec![0usize; n];
    loop {
        let mut hit = vec![false; m];
        for &a in &assignment {
            hit[a] = true;
        }
        if hit.iter().all(|&b| b) {
            out.push(assignment.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            assignment[i] += 1;
            if assignment[i] < m {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}

/// Trace of the two-sided action on the hom-space from n inputs to m
/// outputs; `sigma` acts on the m outputs and `tau` on the n inputs.
pub fn bimodule_trace(n: usize, m: usize, sigma: &Permutation, tau: &Permutation) -> Rational {
    CatLieSpace::new(n, m).trace(sigma, tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use crate::partitions::{binomial, enumerate_partitions, CycleType};
    use crate::symgroup::class_representative;
    use proptest::prelude::*;

    fn word_poly(entries: &[(&[usize], i64)]) -> MultilinearPoly {
        let mut p = MultilinearPoly::zero();
        for (w, c) in entries {
            p.add_term(w.to_vec(), rat(*c));
        }
        p
    }

    #[test]
    fn expand_single_bracket() {
        let t = BracketTree::left_normed(&[1, 2]);
        assert_eq!(
            expand_bracket(&t),
            word_poly(&[(&[1, 2], 1), (&[2, 1], -1)])
        );
    }

    #[test]
    fn expand_left_normed_three() {
        let t = BracketTree::left_normed(&[1, 2, 3]);
        assert_eq!(
            expand_bracket(&t),
            word_poly(&[(&[1, 2, 3], 1), (&[2, 1, 3], -1), (&[3, 1, 2], -1), (&[3, 2, 1], 1)])
        );
    }

    #[test]
    fn lie_dims_are_factorials() {
        for k in 1..=6 {
            assert_eq!(lie_dim(k), factorial(k - 1) as usize, "at k = {k}");
        }
    }

    #[test]
    fn rewrite_basis_tree_is_identity() {
        let coeffs = rewrite_to_basis(&BracketTree::left_normed(&[1, 2, 3]));
        assert_eq!(coeffs, vec![rat(1), rat(0)]);
    }

    #[test]
    fn rewrite_right_normed_bracket() {
        // [1,[2,3]] = [[1,2],3] - [[1,3],2].
        let t = BracketTree::bracket(
            BracketTree::leaf(1),
            BracketTree::left_normed(&[2, 3]),
        );
        let coeffs = rewrite_to_basis(&t);
        assert_eq!(coeffs, vec![rat(1), rat(-1)]);
    }

    #[test]
    fn rewrite_antisymmetry_in_degree_two() {
        let t = BracketTree::left_normed(&[2, 1]);
        assert_eq!(rewrite_to_basis(&t), vec![rat(-1)]);
    }

    #[test]
    fn catlie_dim_examples() {
        assert_eq!(catlie_dim(2, 1), 1);
        assert_eq!(catlie_dim(1, 2), 0);
        assert_eq!(catlie_dim(3, 2), 6);
        for n in 2..=6usize {
            assert_eq!(
                catlie_dim(n, n - 1),
                binomial(n, 2) * factorial(n - 1),
                "one-merge hom dimension at n = {n}"
            );
        }
    }

    #[test]
    fn space_dimension_matches_formula() {
        for n in 0..=5usize {
            for m in 0..=n {
                assert_eq!(
                    CatLieSpace::new(n, m).dim() as u64,
                    catlie_dim(n, m),
                    "at ({n}, {m})"
                );
            }
        }
    }

    #[test]
    fn identity_trace_is_dimension() {
        for (n, m) in [(2, 1), (3, 2), (4, 3), (4, 2)] {
            let space = CatLieSpace::new(n, m);
            assert_eq!(
                space.trace(&Permutation::identity(m), &Permutation::identity(n)),
                rat(space.dim() as i64)
            );
        }
    }

    #[test]
    fn sign_action_on_single_bracket() {
        let space = CatLieSpace::new(2, 1);
        let tau = Permutation::from_cycles(2, &[vec![1, 2]]);
        assert_eq!(space.trace(&Permutation::identity(1), &tau), rat(-1));
    }

    #[test]
    fn trace_depends_only_on_conjugacy_classes() {
        for (n, m) in [(3, 2), (4, 3), (5, 4), (4, 2)] {
            let space = CatLieSpace::new(n, m);
            for mu in enumerate_partitions(m) {
                for lam in enumerate_partitions(n) {
                    let sigma = class_representative(&CycleType(mu.clone()));
                    let tau = class_representative(&CycleType(lam.clone()));
                    let base = space.trace(&sigma, &tau);
                    // conjugate both by a couple of fixed permutations
                    for g_rank in [1usize, 2, 5] {
                        let g = Permutation::from_lehmer_rank(m, g_rank % factorial(m) as usize);
                        let h = Permutation::from_lehmer_rank(n, (g_rank * 7) % factorial(n) as usize);
                        let sigma_c = g.compose(&sigma).compose(&g.inverse());
                        let tau_c = h.compose(&tau).compose(&h.inverse());
                        assert_eq!(space.trace(&sigma_c, &tau_c), base);
                    }
                }
            }
        }
    }

    #[test]
    fn two_sided_actions_commute() {
        let space = CatLieSpace::new(4, 2);
        let sigma = Permutation::from_cycles(2, &[vec![1, 2]]);
        let tau = Permutation::from_cycles(4, &[vec![1, 2, 3]]);
        let e_m = Permutation::identity(2);
        let e_n = Permutation::identity(4);
        for idx in 0..space.dim() {
            // sigma then tau
            let mut a: BTreeMap<usize, Rational> = BTreeMap::new();
            for (j, c) in space.apply(idx, &sigma, &e_n) {
                for (k, d) in space.apply(j, &e_m, &tau) {
                    *a.entry(k).or_insert_with(Rational::zero) += &c * d;
                }
            }
            let mut b: BTreeMap<usize, Rational> = BTreeMap::new();
            for (j, c) in space.apply(idx, &e_m, &tau) {
                for (k, d) in space.apply(j, &sigma, &e_n) {
                    *b.entry(k).or_insert_with(Rational::zero) += &c * d;
                }
            }
            a.retain(|_, v| !v.is_zero());
            b.retain(|_, v| !v.is_zero());
            assert_eq!(a, b, "actions fail to commute on basis element {idx}");
        }
    }

    // Deterministic pseudo-random tree over a permutation of 1..=k, driven
    // by a seed so proptest can shrink it.
    fn seeded_tree(k: usize, seed: u64) -> BracketTree {
        fn next(state: &mut u64) -> u64 {
            *state ^= *state << 13;
            *state ^= *state >> 7;
            *state ^= *state << 17;
            *state
        }
        let mut state = seed | 1;
        let mut labels: Vec<usize> = (1..=k).collect();
        for i in (1..labels.len()).rev() {
            let j = (next(&mut state) as usize) % (i + 1);
            labels.swap(i, j);
        }
        fn build(labels: &[usize], state: &mut u64) -> BracketTree {
            fn next(state: &mut u64) -> u64 {
                *state ^= *state << 13;
                *state ^= *state >> 7;
                *state ^= *state << 17;
                *state
            }
            if labels.len() == 1 {
                return BracketTree::leaf(labels[0]);
            }
            let cut = 1 + (next(state) as usize) % (labels.len() - 1);
            BracketTree::bracket(build(&labels[..cut], state), build(&labels[cut..], state))
        }
        build(&labels, &mut state)
    }

    fn arb_tree(k: usize) -> impl Strategy<Value = BracketTree> {
        any::<u64>().prop_map(move |seed| seeded_tree(k, seed))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn rewrite_respects_antisymmetry(t in (2usize..=5).prop_flat_map(arb_tree)) {
            let leaves = t.leaves();
            let k = leaves.len();
            // [t, t] expands to zero; more generally [a, b] + [b, a] with
            // a, b the two subtrees of any node rewrites to zero.
            if let BracketTree::Node(a, b) = &t {
                let ab = BracketTree::bracket((**a).clone(), (**b).clone());
                let ba = BracketTree::bracket((**b).clone(), (**a).clone());
                let sum = expand_bracket(&ab).add(&expand_bracket(&ba));
                let coeffs = rewrite_poly_to_basis(&sum, k);
                prop_assert!(coeffs.iter().all(Rational::is_zero));
            }
        }

        #[test]
        fn rewrite_respects_jacobi(seed in 0u64..1000) {
            // [a,[b,c]] - [[a,b],c] + [[a,c],b] rewrites to zero for leaves.
            let perms = all_permutations(3);
            let p = &perms[(seed as usize) % perms.len()];
            let (a, b, c) = (p.apply(0) + 1, p.apply(1) + 1, p.apply(2) + 1);
            let lhs = BracketTree::bracket(
                BracketTree::leaf(a),
                BracketTree::bracket(BracketTree::leaf(b), BracketTree::leaf(c)),
            );
            let m1 = BracketTree::bracket(
                BracketTree::bracket(BracketTree::leaf(a), BracketTree::leaf(b)),
                BracketTree::leaf(c),
            );
            let m2 = BracketTree::bracket(
                BracketTree::bracket(BracketTree::leaf(a), BracketTree::leaf(c)),
                BracketTree::leaf(b),
            );
            let combo = expand_bracket(&lhs)
                .add(&expand_bracket(&m1).scale(&rat(-1)))
                .add(&expand_bracket(&m2));
            let coeffs = rewrite_poly_to_basis(&combo, 3);
            prop_assert!(coeffs.iter().all(Rational::is_zero));
        }
    }
}
