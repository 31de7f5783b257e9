//! Partition combinatorics for symmetric-group representation theory.
//!
//! - [`enumerate_partitions`]: all partitions of n in reverse-lexicographic order
//! - [`lr_coefficient`]: Littlewood–Richardson coefficients by lattice-word
//!   skew tableau enumeration
//! - [`pieri_add_horizontal`] / [`pieri_remove_vertical`]: the Pieri strips
//! - [`character_value`]: irreducible characters by the Murnaghan–Nakayama rule
//! - [`hook_dimension`] / [`schur_dim`]: hook length and hook content formulas

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Integer partition: weakly decreasing sequence of positive parts.
/// The empty partition is allowed and has size 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Build from parts, which must be weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// One-row partition `(n)`; the empty partition when n = 0.
    pub fn one_row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// One-column partition `(1^n)`.
    pub fn one_column(n: usize) -> Self {
        Partition {
            parts: vec![1; n],
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part at row `i` (0-based), zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_one_row(&self) -> bool {
        self.parts.len() <= 1
    }

    pub fn is_one_column(&self) -> bool {
        self.parts.iter().all(|&p| p == 1)
    }

    /// Containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Parse the CLI text format: comma-separated parts, e.g. `"3,1,1"`.
    /// The empty string and `"0"` both denote the empty partition.
    pub fn parse(s: &str) -> Result<Self, String> {
        let t = s.trim();
        if t.is_empty() || t == "0" {
            return Ok(Self::empty());
        }
        let mut parts = Vec::new();
        for piece in t.split(',') {
            let p: usize = piece
                .trim()
                .parse()
                .map_err(|_| format!("part {piece:?} is not a positive integer"))?;
            if p == 0 {
                return Err("parts must be positive (use \"0\" alone for the empty partition)".into());
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(format!("parts must be weakly decreasing, got {t:?}"));
        }
        Ok(Partition { parts })
    }

    /// Render in the CLI text format; the empty partition renders as `"0"`.
    pub fn text(&self) -> String {
        if self.parts.is_empty() {
            "0".to_string()
        } else {
            self.parts
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Order: by size, then reverse-lexicographic within a size, matching the
/// order produced by [`enumerate_partitions`].
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Conjugacy class label: a partition of n giving the cycle lengths.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct CycleType(pub Partition);

impl CycleType {
    pub fn n(&self) -> usize {
        self.0.size()
    }

    /// Cycle lengths, weakly decreasing.
    pub fn cycles(&self) -> &[usize] {
        self.0.parts()
    }

    /// Centralizer order z = prod_i i^{m_i} m_i! where m_i counts cycles of
    /// length i.
    pub fn centralizer_order(&self) -> u64 {
        let mut mult: HashMap<usize, u64> = HashMap::new();
        for &c in self.cycles() {
            *mult.entry(c).or_insert(0) += 1;
        }
        let mut z = 1u64;
        for (len, m) in mult {
            for k in 1..=m {
                z *= k;
            }
            z *= (len as u64).pow(m as u32);
        }
        z
    }

    /// Size of the conjugacy class, n!/z.
    pub fn class_size(&self) -> u64 {
        factorial(self.n()) / self.centralizer_order()
    }
}

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1u64;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// All partitions of `n` in reverse-lexicographic order, e.g. for n = 4:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for p in (1..=remaining.min(max_part)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n.max(1), &mut Vec::new(), &mut out);
    out
}

/// All partitions of every size `0..=max`, in [`Partition`] order.
pub fn partitions_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(enumerate_partitions).collect()
}

/// Hook lengths of each cell, row by row.
pub fn hook_lengths(lambda: &Partition) -> Vec<Vec<usize>> {
    let conj = lambda.conjugate();
    (0..lambda.len())
        .map(|r| {
            (0..lambda.part(r))
                .map(|c| (lambda.part(r) - c) + (conj.part(c) - r) - 1)
                .collect()
        })
        .collect()
}

/// Dimension of the irreducible representation labeled by `lambda`:
/// |lambda|! divided by the product of all hook lengths.
pub fn hook_dimension(lambda: &Partition) -> u64 {
    let mut num = BigInt::one();
    for k in 1..=lambda.size() {
        num *= k as u64;
    }
    let mut den = BigInt::one();
    for row in hook_lengths(lambda) {
        for h in row {
            den *= h as u64;
        }
    }
    (num / den).to_u64().expect("hook dimension fits in u64")
}

/// Number of semistandard Young tableaux of shape `lambda` with entries in
/// `{1..k}`, i.e. the dimension of the Schur functor S^lambda on a
/// k-dimensional space. Zero when k < l(lambda).
pub fn schur_dim(lambda: &Partition, k: usize) -> u64 {
    // Hook content formula: prod (k + j - i) / hook(i, j).
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let hooks = hook_lengths(lambda);
    for (i, row) in hooks.iter().enumerate() {
        for (j, &h) in row.iter().enumerate() {
            let content = j as i64 - i as i64;
            num *= BigInt::from(k as i64 + content);
            den *= h as u64;
        }
    }
    if num.is_zero() || num.is_negative() {
        // A zero factor appears exactly when k < l(lambda).
        return 0;
    }
    (num / den).to_u64().expect("schur dimension fits in u64")
}

/// Littlewood–Richardson coefficient LR^lambda_{rho,nu}: the number of
/// lattice-word semistandard skew tableaux of shape lambda/rho and content
/// nu. Zero unless rho fits inside lambda and |rho| + |nu| = |lambda|.
pub fn lr_coefficient(lambda: &Partition, rho: &Partition, nu: &Partition) -> u64 {
    if rho.size() + nu.size() != lambda.size() || !lambda.contains(rho) {
        return 0;
    }
    if nu.size() == 0 {
        return 1; // lambda == rho at this point
    }
    // Cells of the skew shape in reverse reading order: rows top to bottom,
    // each row right to left. Filling in this order lets the lattice
    // condition be checked incrementally.
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for r in 0..lambda.len() {
        let lo = rho.part(r);
        let hi = lambda.part(r);
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }

    struct Search<'a> {
        lambda: &'a Partition,
        rho: &'a Partition,
        nu: &'a Partition,
        cells: Vec<(usize, usize)>,
        fill: HashMap<(usize, usize), usize>,
        counts: Vec<usize>,
        found: u64,
    }

    impl Search<'_> {
        fn go(&mut self, idx: usize) {
            if idx == self.cells.len() {
                self.found += 1;
                return;
            }
            let (r, c) = self.cells[idx];
            for v in 1..=self.nu.len() {
                if self.counts[v] == self.nu.part(v - 1) {
                    continue; // content quota for v used up
                }
                // Lattice word: after placing v, #v must not exceed #(v-1).
                if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
                    continue;
                }
                // Row weakly increasing: right neighbor already placed.
                if c + 1 < self.lambda.part(r) {
                    if let Some(&right) = self.fill.get(&(r, c + 1)) {
                        if v > right {
                            continue;
                        }
                    }
                }
                // Column strictly increasing: cell above, when in the skew shape.
                if r > 0 && c >= self.rho.part(r - 1) && c < self.lambda.part(r - 1) {
                    match self.fill.get(&(r - 1, c)) {
                        Some(&above) if above < v => {}
                        _ => continue,
                    }
                }
                self.fill.insert((r, c), v);
                self.counts[v] += 1;
                self.go(idx + 1);
                self.counts[v] -= 1;
                self.fill.remove(&(r, c));
            }
        }
    }

    let mut search = Search {
        lambda,
        rho,
        nu,
        cells,
        fill: HashMap::new(),
        counts: vec![0; nu.len() + 1],
        found: 0,
    };
    search.go(0);
    search.found
}

/// All partitions obtained from `rho` by adding a horizontal k-strip (no two
/// added boxes in one column). Each result mu satisfies LR^mu_{rho,(k)} = 1.
pub fn pieri_add_horizontal(rho: &Partition, k: usize) -> Vec<Partition> {
    // mu interlaces rho: mu_1 >= rho_1 >= mu_2 >= rho_2 >= ... ; one extra
    // row below rho may receive boxes.
    fn go(
        rho: &Partition,
        row: usize,
        remaining: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > rho.len() {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.iter().copied().filter(|&p| p > 0).collect(),
                });
            }
            return;
        }
        let lo = rho.part(row);
        let hi = if row == 0 {
            lo + remaining
        } else {
            rho.part(row - 1).min(lo + remaining)
        };
        for m in lo..=hi {
            prefix.push(m);
            go(rho, row + 1, remaining - (m - lo), prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(rho, 0, k, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions rho such that lambda/rho is a vertical k-strip (no two
/// removed boxes in one row). Each result satisfies LR^lambda_{rho,(1^k)} = 1.
pub fn pieri_remove_vertical(lambda: &Partition, k: usize) -> Vec<Partition> {
    fn go(
        lambda: &Partition,
        row: usize,
        remaining: usize,
        prev: usize,
        prefix: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row == lambda.len() {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.iter().copied().filter(|&p| p > 0).collect(),
                });
            }
            return;
        }
        for drop in 0..=1usize.min(remaining) {
            let m = lambda.part(row) - drop;
            if m > prev {
                continue;
            }
            // rho must still contain row below: handled by recursion since
            // lambda is weakly decreasing and drops are at most one box.
            prefix.push(m);
            go(lambda, row + 1, remaining - drop, m, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, k, usize::MAX, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// Irreducible character value chi_lambda at the given conjugacy class,
/// computed by the Murnaghan–Nakayama border-strip recursion (memoized per
/// call on shape and position in the cycle list).
pub fn character_value(lambda: &Partition, class: &CycleType) -> i64 {
    assert_eq!(
        lambda.size(),
        class.n(),
        "character class size must match |lambda|"
    );
    let cycles: Vec<usize> = class.cycles().to_vec();
    let mut memo: HashMap<(Vec<usize>, usize), i64> = HashMap::new();
    mn(lambda.parts().to_vec(), &cycles, 0, &mut memo)
}

fn mn(
    shape: Vec<usize>,
    cycles: &[usize],
    idx: usize,
    memo: &mut HashMap<(Vec<usize>, usize), i64>,
) -> i64 {
    if idx == cycles.len() {
        debug_assert!(shape.is_empty());
        return 1;
    }
    if let Some(&v) = memo.get(&(shape.clone(), idx)) {
        return v;
    }
    let k = cycles[idx];
    // Beta-set (first-column hook lengths): strips of size k correspond to
    // beta values that can drop by k without colliding.
    let rows = shape.len();
    let betas: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (rows - 1 - i))
        .collect();
    let mut total = 0i64;
    for (i, &b) in betas.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if betas.contains(&target) {
            continue;
        }
        let crossings = betas
            .iter()
            .filter(|&&x| target < x && x < b)
            .count();
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        let mut new_betas = betas.clone();
        new_betas[i] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let new_shape: Vec<usize> = new_betas
            .iter()
            .enumerate()
            .map(|(j, &nb)| nb - (rows - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        total += sign * mn(new_shape, cycles, idx + 1, memo);
    }
    memo.insert((shape, idx), total);
    total
}
