//! Symmetric group machinery: permutations, the rational group algebra,
//! Young symmetrizers, and ideal-dimension computations by exact rank.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::linalg::{rat, Rational, RowEchelon};
use crate::partitions::{factorial, CycleType, Partition};

/// Permutation of {1..n}, stored 0-based: `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Self {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            assert!(i < n && !seen[i], "images must be a bijection of 0..n");
            seen[i] = true;
        }
        Permutation { images }
    }

    /// Build from disjoint cycles written with 1-based letters, e.g.
    /// `from_cycles(3, &[vec![1, 2]])` is the transposition (1 2).
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for w in 0..cycle.len() {
                let from = cycle[w] - 1;
                let to = cycle[(w + 1) % cycle.len()] - 1;
                images[from] = to;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// Composition `self . other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im] = i;
        }
        Permutation { images }
    }

    pub fn sign(&self) -> i64 {
        let cycles = self.cycle_type();
        if (self.degree() - cycles.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Cycle lengths as a partition of n.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cur = self.images[cur];
                len += 1;
            }
            lens.push(len);
        }
        lens.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lens)
    }

    /// Rank in the lexicographic order of all permutations of degree n.
    pub fn lehmer_rank(&self) -> usize {
        let n = self.degree();
        let mut rank = 0;
        let mut fact = factorial(n.saturating_sub(1)) as usize;
        for i in 0..n {
            let smaller = self.images[i + 1..]
                .iter()
                .filter(|&&x| x < self.images[i])
                .count();
            rank += smaller * fact;
            if n > i + 1 {
                fact /= n - i - 1;
            }
        }
        rank
    }

    pub fn from_lehmer_rank(n: usize, mut rank: usize) -> Self {
        let mut avail: Vec<usize> = (0..n).collect();
        let mut images = Vec::with_capacity(n);
        let mut fact = factorial(n.saturating_sub(1)) as usize;
        for i in 0..n {
            let idx = rank / fact;
            rank %= fact;
            images.push(avail.remove(idx));
            if n > i + 1 {
                fact /= n - i - 1;
            }
        }
        Permutation { images }
    }
}

/// All permutations of degree n, in lexicographic (Lehmer) order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    (0..factorial(n) as usize)
        .map(|r| Permutation::from_lehmer_rank(n, r))
        .collect()
}

/// Canonical class representative: consecutive cycles, longest first.
pub fn class_representative(class: &CycleType) -> Permutation {
    let n = class.n();
    let mut images: Vec<usize> = (0..n).collect();
    let mut offset = 0;
    for &len in class.cycles() {
        for (i, img) in images[offset..offset + len].iter_mut().enumerate() {
            *img = offset + (i + 1) % len;
        }
        offset += len;
    }
    Permutation::from_images(images)
}

/// Element of the rational group algebra of a symmetric group: a finite
/// formal sum of permutations with rational coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct GroupAlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(degree: usize) -> Self {
        GroupAlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The unit element e.
    pub fn unit(degree: usize) -> Self {
        Self::from_permutation(Permutation::identity(degree))
    }

    pub fn from_permutation(p: Permutation) -> Self {
        let degree = p.degree();
        let mut terms = BTreeMap::new();
        terms.insert(p, Rational::one());
        GroupAlgebraElement { degree, terms }
    }

    pub fn from_terms(degree: usize, entries: Vec<(Permutation, Rational)>) -> Self {
        let mut out = Self::zero(degree);
        for (p, c) in entries {
            out.add_term(p, c);
        }
        out
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn terms(&self) -> &BTreeMap<Permutation, Rational> {
        &self.terms
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, p: Permutation, c: Rational) {
        debug_assert_eq!(p.degree(), self.degree);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
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
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.degree);
        }
        GroupAlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, v)| (p.clone(), v * c))
                .collect(),
        }
    }

    /// Convolution product. Degrees must agree.
    pub fn multiply(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree, "degree mismatch in product");
        let mut out = Self::zero(self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q), a * b);
            }
        }
        out
    }

    /// Left-multiply by a single permutation.
    pub fn left_mul_perm(&self, p: &Permutation) -> Self {
        GroupAlgebraElement {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(q, c)| (p.compose(q), c.clone()))
                .collect(),
        }
    }

    /// Coordinates over the regular basis (all permutations in Lehmer order).
    pub fn to_regular_vector(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); factorial(self.degree) as usize];
        for (p, c) in &self.terms {
            v[p.lehmer_rank()] = c.clone();
        }
        v
    }
}

/// Young symmetrizer for the canonical (row-major) tableau of `lambda`,
/// kept unnormalized: (sum over row stabilizer) * (signed sum over column
/// stabilizer).
#[derive(Clone, Debug)]
pub struct YoungSymmetrizer {
    pub lambda: Partition,
    pub element: GroupAlgebraElement,
}

/// The canonical tableau fills rows with 1, 2, ... left to right, top to
/// bottom. Returns the letters of each row (1-based).
fn canonical_rows(lambda: &Partition) -> Vec<Vec<usize>> {
    let mut rows = Vec::new();
    let mut next = 1;
    for r in 0..lambda.len() {
        rows.push((next..next + lambda.part(r)).collect());
        next += lambda.part(r);
    }
    rows
}

fn canonical_columns(lambda: &Partition) -> Vec<Vec<usize>> {
    let rows = canonical_rows(lambda);
    let width = lambda.part(0);
    (0..width)
        .map(|c| rows.iter().filter_map(|row| row.get(c).copied()).collect())
        .collect()
}

/// All permutations of {1..n} fixing everything outside the given disjoint
/// blocks and permuting within each block.
fn block_permutations(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut result = vec![Permutation::identity(n)];
    for block in blocks {
        if block.len() < 2 {
            continue;
        }
        let arrangements = all_permutations(block.len());
        let mut next = Vec::with_capacity(result.len() * arrangements.len());
        for base in &result {
            for arr in &arrangements {
                let mut images = base.images.clone();
                for (i, &letter) in block.iter().enumerate() {
                    images[letter - 1] = block[arr.apply(i)] - 1;
                }
                next.push(Permutation { images });
            }
        }
        result = next;
    }
    result
}

/// Unnormalized Young symmetrizer of the canonical tableau.
pub fn young_symmetrizer(lambda: &Partition) -> YoungSymmetrizer {
    let n = lambda.size();
    let row_sum = GroupAlgebraElement::from_terms(
        n,
        block_permutations(n, &canonical_rows(lambda))
            .into_iter()
            .map(|p| (p, Rational::one()))
            .collect(),
    );
    let col_sum = GroupAlgebraElement::from_terms(
        n,
        block_permutations(n, &canonical_columns(lambda))
            .into_iter()
            .map(|p| {
                let s = rat(p.sign());
                (p, s)
            })
            .collect(),
    );
    YoungSymmetrizer {
        lambda: lambda.clone(),
        element: row_sum.multiply(&col_sum),
    }
}

/// Dimension of the left ideal K S_n . x, computed as the rank of
/// {sigma . x : sigma in S_n} over the regular basis.
pub fn left_ideal_dim(x: &GroupAlgebraElement) -> usize {
    let n = x.degree();
    let mut ech = RowEchelon::new(factorial(n) as usize);
    for sigma in all_permutations(n) {
        ech.insert(x.left_mul_perm(&sigma).to_regular_vector());
    }
    ech.rank()
}

/// Spanning set {sigma . (c_lambda (x) c_(2)) : sigma in S_{n_total}} of the
/// left ideal generated by the symmetrizer of `lambda` on the first |lambda|
/// letters tensored with the symmetrizer of (2) on the last two letters.
/// Duplicates are allowed; callers reduce by rank.
pub fn right_ideal_with_embedded_symmetrizer(
    lambda: &Partition,
    n_total: usize,
) -> Vec<GroupAlgebraElement> {
    assert_eq!(
        n_total,
        lambda.size() + 2,
        "ambient degree must be |lambda| + 2"
    );
    let c_lambda = young_symmetrizer(lambda).element;
    // Embed c_lambda on letters 1..|lambda| and e + (n-1, n) on the last two.
    let mut generator = GroupAlgebraElement::zero(n_total);
    let swap_last = Permutation::from_cycles(n_total, &[vec![n_total - 1, n_total]]);
    for (p, c) in c_lambda.terms() {
        let mut images: Vec<usize> = (0..n_total).collect();
        for (i, img) in images[..lambda.size()].iter_mut().enumerate() {
            *img = p.apply(i);
        }
        let embedded = Permutation::from_images(images);
        generator.add_term(embedded.clone(), c.clone());
        generator.add_term(swap_last.compose(&embedded), c.clone());
    }
    all_permutations(n_total)
        .into_iter()
        .map(|sigma| generator.left_mul_perm(&sigma))
        .collect()
}

/// Multiplicity of the irreducible labeled by `mu` in the span of the given
/// elements, computed as dim(c_mu . span).
pub fn symmetrizer_multiplicity(mu: &Partition, subspace: &[GroupAlgebraElement]) -> usize {
    let n = mu.size();
    assert!(
        subspace.iter().all(|v| v.degree() == n),
        "subspace degree must equal |mu|"
    );
    let c_mu = young_symmetrizer(mu).element;
    let dim = factorial(n) as usize;
    let mut ech = RowEchelon::new(dim);
    // Spanning sets often repeat elements (cosets of stabilizers collapse);
    // skip exact duplicates before the expensive products.
    let mut seen = std::collections::BTreeSet::new();
    for v in subspace {
        if !seen.insert(v) {
            continue;
        }
        // Accumulate c_mu . v directly as a regular-basis vector.
        let mut vec = vec![Rational::zero(); dim];
        for (p, a) in c_mu.terms() {
            for (q, b) in v.terms() {
                let idx = p.compose(q).lehmer_rank();
                vec[idx] += a * b;
            }
        }
        ech.insert(vec);
    }
    ech.rank()
}
