//! Symmetric and exterior power functors evaluated on dual-abelianization
//! generator words, the Casimir invariance constraint system, and the
//! explicit two-step extension it produces.
//!
//! The six degree-zero Hopf generators act on the dual coordinate spaces by
//! explicit substitutions: multiplication merges two adjacent dual
//! variables, the unit inserts a fresh variable absent from the image,
//! comultiplication sends a variable to the sum of two fresh ones, the
//! counit kills a variable, the antipode negates one, and the symmetry
//! swaps two. A Casimir insertion raises the degree and is the one unknown;
//! stacking the invariance constraints pins it down exactly.

use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::linalg::{rat, Rational, RationalMatrix, RowEchelon};

/// The degree-zero Hopf algebra generators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenKind {
    Mult,
    Unit,
    Comult,
    Counit,
    Antipode,
    Swap,
}

/// One generator applied at a 1-based slot of a given source arity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HopfGenerator {
    pub kind: GenKind,
    pub slot: usize,
    pub arity: usize,
}

impl HopfGenerator {
    pub fn new(kind: GenKind, slot: usize, arity: usize) -> Self {
        let ok = match kind {
            GenKind::Mult | GenKind::Swap => slot >= 1 && slot < arity,
            GenKind::Unit => slot >= 1 && slot <= arity + 1,
            GenKind::Comult | GenKind::Counit | GenKind::Antipode => slot >= 1 && slot <= arity,
        };
        assert!(ok, "slot {slot} out of range for {kind:?} at arity {arity}");
        HopfGenerator { kind, slot, arity }
    }

    pub fn target_arity(&self) -> usize {
        match self.kind {
            GenKind::Mult | GenKind::Counit => self.arity - 1,
            GenKind::Unit | GenKind::Comult => self.arity + 1,
            GenKind::Antipode | GenKind::Swap => self.arity,
        }
    }
}

/// Matrix of the dual-abelianization action of one generator, mapping the
/// source coordinate space to the target coordinate space (columns index
/// source variables).
pub fn generator_matrix(g: &HopfGenerator) -> RationalMatrix {
    let a = g.arity;
    let s = g.slot - 1; // 0-based
    let mut m = RationalMatrix::zeros(g.target_arity(), a);
    match g.kind {
        GenKind::Mult => {
            // both merged variables map to the common image
            for j in 0..a {
                let row = if j < s {
                    j
                } else if j == s || j == s + 1 {
                    s
                } else {
                    j - 1
                };
                m.set(row, j, Rational::one());
            }
        }
        GenKind::Unit => {
            // fresh variable at slot s is absent from the image
            for j in 0..a {
                let row = if j < s { j } else { j + 1 };
                m.set(row, j, Rational::one());
            }
        }
        GenKind::Comult => {
            for j in 0..a {
                if j == s {
                    m.set(s, j, Rational::one());
                    m.set(s + 1, j, Rational::one());
                } else if j < s {
                    m.set(j, j, Rational::one());
                } else {
                    m.set(j + 1, j, Rational::one());
                }
            }
        }
        GenKind::Counit => {
            for j in 0..a {
                if j == s {
                    continue; // killed
                }
                let row = if j < s { j } else { j - 1 };
                m.set(row, j, Rational::one());
            }
        }
        GenKind::Antipode => {
            for j in 0..a {
                let v = if j == s { rat(-1) } else { Rational::one() };
                m.set(j, j, v);
            }
        }
        GenKind::Swap => {
            for j in 0..a {
                let row = if j == s {
                    s + 1
                } else if j == s + 1 {
                    s
                } else {
                    j
                };
                m.set(row, j, Rational::one());
            }
        }
    }
    m
}

/// Atom of a generator word: a Hopf generator or a degree-raising Casimir
/// insertion of two fresh slots.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WordAtom {
    Hopf(HopfGenerator),
    Casimir { slot: usize, arity: usize },
}

impl WordAtom {
    fn source_arity(&self) -> usize {
        match self {
            WordAtom::Hopf(g) => g.arity,
            WordAtom::Casimir { arity, .. } => *arity,
        }
    }

    fn target_arity(&self) -> usize {
        match self {
            WordAtom::Hopf(g) => g.target_arity(),
            WordAtom::Casimir { arity, .. } => arity + 2,
        }
    }
}

/// Composable sequence of atoms with a declared source arity; arities chain
/// through the sequence, first atom applied first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GeneratorWord {
    source_arity: usize,
    atoms: Vec<WordAtom>,
}

impl GeneratorWord {
    pub fn identity(arity: usize) -> Self {
        GeneratorWord {
            source_arity: arity,
            atoms: Vec::new(),
        }
    }

    fn push(mut self, atom: WordAtom) -> Self {
        assert_eq!(
            atom.source_arity(),
            self.target_arity(),
            "arity chain broken"
        );
        self.atoms.push(atom);
        self
    }

    fn hopf(self, kind: GenKind, slot: usize) -> Self {
        let arity = self.target_arity();
        self.push(WordAtom::Hopf(HopfGenerator::new(kind, slot, arity)))
    }

    pub fn mult(self, slot: usize) -> Self {
        self.hopf(GenKind::Mult, slot)
    }

    pub fn unit(self, slot: usize) -> Self {
        self.hopf(GenKind::Unit, slot)
    }

    pub fn comult(self, slot: usize) -> Self {
        self.hopf(GenKind::Comult, slot)
    }

    pub fn counit(self, slot: usize) -> Self {
        self.hopf(GenKind::Counit, slot)
    }

    pub fn antipode(self, slot: usize) -> Self {
        self.hopf(GenKind::Antipode, slot)
    }

    pub fn swap(self, slot: usize) -> Self {
        self.hopf(GenKind::Swap, slot)
    }

    pub fn casimir(self, slot: usize) -> Self {
        let arity = self.target_arity();
        assert!(slot >= 1 && slot <= arity + 1, "casimir slot out of range");
        self.push(WordAtom::Casimir { slot, arity })
    }

    /// The adjoint-action composite on the two slots starting at `slot`:
    /// mult . (mult x id) . (id2 x antipode) . (id x swap) . (comult x id).
    pub fn adjoint(self, slot: usize) -> Self {
        self.comult(slot)
            .swap(slot + 1)
            .antipode(slot + 2)
            .mult(slot)
            .mult(slot)
    }

    pub fn source_arity(&self) -> usize {
        self.source_arity
    }

    pub fn target_arity(&self) -> usize {
        self.atoms
            .last()
            .map_or(self.source_arity, WordAtom::target_arity)
    }

    pub fn atoms(&self) -> &[WordAtom] {
        &self.atoms
    }

    /// Number of Casimir insertions.
    pub fn degree(&self) -> usize {
        self.atoms
            .iter()
            .filter(|a| matches!(a, WordAtom::Casimir { .. }))
            .count()
    }
}

fn atoms_matrix(atoms: &[WordAtom], source_arity: usize, widen: usize) -> RationalMatrix {
    let mut m = RationalMatrix::identity(source_arity + widen);
    for atom in atoms {
        let WordAtom::Hopf(g) = atom else {
            panic!("matrix of a word is defined for degree-zero words only");
        };
        let g = HopfGenerator::new(g.kind, g.slot, g.arity + widen);
        m = generator_matrix(&g).mul(&m);
    }
    m
}

/// Composite matrix of a degree-zero word, factors applied in word order.
pub fn word_matrix(w: &GeneratorWord) -> RationalMatrix {
    assert_eq!(w.degree(), 0, "word must contain no Casimir insertion");
    atoms_matrix(&w.atoms, w.source_arity, 0)
}

/// Polynomial functor family.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Family {
    Symmetric,
    Exterior,
}

/// A symmetric or exterior power of a fixed degree.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FunctorKind {
    pub family: Family,
    pub degree: usize,
}

impl FunctorKind {
    pub fn new(family: Family, degree: usize) -> Self {
        FunctorKind { family, degree }
    }

    pub fn symmetric(degree: usize) -> Self {
        Self::new(Family::Symmetric, degree)
    }

    pub fn exterior(degree: usize) -> Self {
        Self::new(Family::Exterior, degree)
    }
}

/// Basis of the functor evaluated on `arity` variables. For symmetric
/// powers: exponent vectors summing to the degree, lexicographic. For
/// exterior powers: strictly increasing 0-based index sets, lexicographic.
pub fn space_basis(kind: FunctorKind, arity: usize) -> Vec<Vec<usize>> {
    match kind.family {
        Family::Symmetric => {
            fn go(arity: usize, degree: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if arity == 0 {
                    if degree == 0 {
                        out.push(prefix.clone());
                    }
                    return;
                }
                if arity == 1 {
                    prefix.push(degree);
                    out.push(prefix.clone());
                    prefix.pop();
                    return;
                }
                for e in 0..=degree {
                    prefix.push(e);
                    go(arity - 1, degree - e, prefix, out);
                    prefix.pop();
                }
            }
            let mut out = Vec::new();
            go(arity, kind.degree, &mut Vec::new(), &mut out);
            out
        }
        Family::Exterior => {
            fn go(
                arity: usize,
                degree: usize,
                start: usize,
                prefix: &mut Vec<usize>,
                out: &mut Vec<Vec<usize>>,
            ) {
                if degree == 0 {
                    out.push(prefix.clone());
                    return;
                }
                for i in start..arity {
                    if arity - i < degree {
                        break;
                    }
                    prefix.push(i);
                    go(arity, degree - 1, i + 1, prefix, out);
                    prefix.pop();
                }
            }
            let mut out = Vec::new();
            go(arity, kind.degree, 0, &mut Vec::new(), &mut out);
            out
        }
    }
}

pub fn space_dim(kind: FunctorKind, arity: usize) -> usize {
    space_basis(kind, arity).len()
}

/// Sparse image of one basis element under the functor applied to a linear
/// map (columns of `linear` index source variables). Returned as pairs of
/// (target basis index, coefficient).
fn functor_image(
    kind: FunctorKind,
    linear: &RationalMatrix,
    src: &[usize],
    target_index: &HashMap<Vec<usize>, usize>,
) -> Vec<(usize, Rational)> {
    let tgt_arity = linear.rows();
    match kind.family {
        Family::Symmetric => {
            // substitute each variable by its linear form and expand
            let mut acc: HashMap<Vec<usize>, Rational> = HashMap::new();
            acc.insert(vec![0; tgt_arity], Rational::one());
            for (j, &e) in src.iter().enumerate() {
                for _ in 0..e {
                    let mut next: HashMap<Vec<usize>, Rational> = HashMap::new();
                    for (mono, c) in &acc {
                        for i in 0..tgt_arity {
                            let m = linear.get(i, j);
                            if m.is_zero() {
                                continue;
                            }
                            let mut mono2 = mono.clone();
                            mono2[i] += 1;
                            let entry = next.entry(mono2).or_insert_with(Rational::zero);
                            *entry += c * m;
                        }
                    }
                    acc = next;
                }
            }
            let mut out: Vec<(usize, Rational)> = acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(mono, c)| (target_index[&mono], c))
                .collect();
            out.sort_by_key(|&(i, _)| i);
            out
        }
        Family::Exterior => {
            // wedge of the images; collect signed sorted index sets
            let mut acc: HashMap<Vec<usize>, Rational> = HashMap::new();
            acc.insert(Vec::new(), Rational::one());
            for &j in src {
                let mut next: HashMap<Vec<usize>, Rational> = HashMap::new();
                for (set, c) in &acc {
                    for i in 0..tgt_arity {
                        let m = linear.get(i, j);
                        if m.is_zero() {
                            continue;
                        }
                        // insert i into the sorted set with a sign
                        match set.binary_search(&i) {
                            Ok(_) => continue, // repeated factor vanishes
                            Err(pos) => {
                                let sign = if (set.len() - pos) % 2 == 0 {
                                    Rational::one()
                                } else {
                                    -Rational::one()
                                };
                                let mut set2 = set.clone();
                                set2.insert(pos, i);
                                let entry = next.entry(set2).or_insert_with(Rational::zero);
                                *entry += c * m * sign;
                            }
                        }
                    }
                }
                acc = next;
            }
            let mut out: Vec<(usize, Rational)> = acc
                .into_iter()
                .filter(|(_, c)| !c.is_zero())
                .map(|(set, c)| (target_index[&set], c))
                .collect();
            out.sort_by_key(|&(i, _)| i);
            out
        }
    }
}

fn basis_index(basis: &[Vec<usize>]) -> HashMap<Vec<usize>, usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, b)| (b.clone(), i))
        .collect()
}

/// Dense matrix of the functor applied to a linear map; multiplicative in
/// the linear argument.
pub fn functor_matrix(kind: FunctorKind, linear: &RationalMatrix) -> RationalMatrix {
    let src_basis = space_basis(kind, linear.cols());
    let tgt_basis = space_basis(kind, linear.rows());
    let tgt_index = basis_index(&tgt_basis);
    let mut m = RationalMatrix::zeros(tgt_basis.len(), src_basis.len());
    for (col, src) in src_basis.iter().enumerate() {
        for (row, c) in functor_image(kind, linear, src, &tgt_index) {
            m.set(row, col, c);
        }
    }
    m
}

/// Sign picked up by the generator monomial under an adjacent source
/// transposition: trivial for symmetric powers, alternating for exterior.
fn source_swap_sign(family: Family) -> Rational {
    match family {
        Family::Symmetric => Rational::one(),
        Family::Exterior => -Rational::one(),
    }
}

/// Constraint matrix on the unknown vector v in the target space at arity
/// l + 2 (l = source degree) representing the image of the canonical source
/// generator under one Casimir insertion. Rows encode: symmetry of the two
/// Casimir slots; the two comultiplication invariance relations at the
/// Casimir slots; counit annihilation at both Casimir slots; for each source
/// slot, the matching comultiplication and counit compatibilities; and
/// invariance (up to sign) under the source permutation action. Rows are
/// accumulated in echelon form, which preserves the kernel.
pub fn casimir_constraint_matrix(source: FunctorKind, target: FunctorKind) -> RationalMatrix {
    let l = source.degree;
    let arity = l + 2;
    let basis = space_basis(target, arity);
    let cols = basis.len();
    let mut ech = RowEchelon::new(cols);

    let gen = |kind: GenKind, slot: usize| -> RationalMatrix {
        generator_matrix(&HopfGenerator::new(kind, slot, arity))
    };

    // Each block is a signed sum of functor images of linear maps,
    // starting with the Casimir pair symmetry.
    let mut blocks: Vec<Vec<(RationalMatrix, Rational)>> = vec![vec![
        (gen(GenKind::Swap, l + 1), Rational::one()),
        (RationalMatrix::identity(arity), -Rational::one()),
    ]];
    // Comultiplication at the two Casimir slots.
    blocks.push(vec![
        (gen(GenKind::Comult, l + 1), Rational::one()),
        (gen(GenKind::Unit, l + 2), -Rational::one()),
        (gen(GenKind::Unit, l + 1), -Rational::one()),
    ]);
    blocks.push(vec![
        (gen(GenKind::Comult, l + 2), Rational::one()),
        (gen(GenKind::Unit, l + 2), -Rational::one()),
        (gen(GenKind::Unit, l + 3), -Rational::one()),
    ]);
    // Counit annihilation at the Casimir slots.
    blocks.push(vec![(gen(GenKind::Counit, l + 1), Rational::one())]);
    blocks.push(vec![(gen(GenKind::Counit, l + 2), Rational::one())]);
    // Source-slot compatibilities.
    for j in 1..=l {
        blocks.push(vec![
            (gen(GenKind::Comult, j), Rational::one()),
            (gen(GenKind::Unit, j), -Rational::one()),
            (gen(GenKind::Unit, j + 1), -Rational::one()),
        ]);
        blocks.push(vec![(gen(GenKind::Counit, j), Rational::one())]);
    }
    // Source permutation invariance on adjacent transpositions.
    let sign = source_swap_sign(source.family);
    for j in 1..l {
        blocks.push(vec![
            (gen(GenKind::Swap, j), Rational::one()),
            (RationalMatrix::identity(arity), -sign.clone()),
        ]);
    }

    for block in blocks {
        // Assemble the block's rows sparsely from per-column images.
        let mut rows: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
        for (linear, scalar) in &block {
            let tgt_basis = space_basis(target, linear.rows());
            let tgt_index = basis_index(&tgt_basis);
            for (col, src) in basis.iter().enumerate() {
                for (row, c) in functor_image(target, linear, src, &tgt_index) {
                    rows.entry(row).or_default().push((col, c * scalar));
                }
            }
        }
        let mut row_ids: Vec<usize> = rows.keys().copied().collect();
        row_ids.sort_unstable();
        for rid in row_ids {
            let mut dense = vec![Rational::zero(); cols];
            for (col, c) in &rows[&rid] {
                dense[*col] += c;
            }
            ech.insert(dense);
        }
    }
    ech.into_matrix()
}

/// Kernel of the constraint system.
pub fn casimir_kernel(source: FunctorKind, target: FunctorKind) -> Vec<Vec<Rational>> {
    casimir_constraint_matrix(source, target).kernel_basis()
}

pub fn casimir_kernel_dim(source: FunctorKind, target: FunctorKind) -> usize {
    casimir_kernel(source, target).len()
}

/// Render one basis monomial, e.g. `x1^2*x3`; the empty monomial is `1`.
pub fn render_monomial(kind: FunctorKind, element: &[usize]) -> String {
    let factors: Vec<String> = match kind.family {
        Family::Symmetric => element
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, e)
                }
            })
            .collect(),
        Family::Exterior => element.iter().map(|&i| format!("x{}", i + 1)).collect(),
    };
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Render a vector over the space basis as a signed sum of monomials.
pub fn render_vector(kind: FunctorKind, arity: usize, coeffs: &[Rational]) -> String {
    let basis = space_basis(kind, arity);
    assert_eq!(basis.len(), coeffs.len());
    let mut out = String::new();
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        let mono = render_monomial(kind, b);
        let abs = if c < &Rational::zero() { -c.clone() } else { c.clone() };
        let lead = if out.is_empty() {
            if c < &Rational::zero() { "-".to_string() } else { String::new() }
        } else if c < &Rational::zero() {
            " - ".to_string()
        } else {
            " + ".to_string()
        };
        out.push_str(&lead);
        if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

/// The extension of the degree-d symmetric power by the degree-(d+2) one:
/// degree-zero words act diagonally, a word with exactly one Casimir
/// insertion acts through the stored datum (the image of the canonical
/// generator, normalized to x1...x_{d+2}), and words of degree two or more
/// act as zero.
#[derive(Clone, Debug)]
pub struct Extension {
    degree: usize,
    datum: Vec<Rational>,
}

/// Action of one word on the two-summand module.
#[derive(Clone, Debug)]
pub enum ExtensionAction {
    /// Diagonal action: the functor matrices on the degree-d and
    /// degree-(d+2) summands.
    Degree0 {
        on_source: RationalMatrix,
        on_target: RationalMatrix,
    },
    /// Connecting action from the degree-d summand into the degree-(d+2)
    /// summand.
    Degree1 { connecting: RationalMatrix },
    /// Words with two or more Casimir insertions act as zero.
    Zero,
}

pub fn build_extension(d: usize) -> Extension {
    let kind = FunctorKind::symmetric(d + 2);
    let basis = space_basis(kind, d + 2);
    let all_ones = vec![1usize; d + 2];
    let mut datum = vec![Rational::zero(); basis.len()];
    let idx = basis
        .iter()
        .position(|b| *b == all_ones)
        .expect("all-ones monomial exists");
    datum[idx] = Rational::one();
    Extension { degree: d, datum }
}

impl Extension {
    /// Same shape as [`build_extension`] but with an arbitrary stored datum;
    /// used to probe the relation checker.
    pub fn with_datum(d: usize, datum: Vec<Rational>) -> Self {
        let dim = space_dim(FunctorKind::symmetric(d + 2), d + 2);
        assert_eq!(datum.len(), dim, "datum length must match the target space");
        Extension { degree: d, datum }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn datum(&self) -> &[Rational] {
        &self.datum
    }

    fn split_at_casimir(w: &GeneratorWord) -> (Vec<WordAtom>, usize, usize, Vec<WordAtom>) {
        let pos = w
            .atoms
            .iter()
            .position(|a| matches!(a, WordAtom::Casimir { .. }))
            .expect("word must contain a Casimir insertion");
        let WordAtom::Casimir { slot, arity } = w.atoms[pos] else {
            unreachable!()
        };
        (
            w.atoms[..pos].to_vec(),
            slot,
            arity,
            w.atoms[pos + 1..].to_vec(),
        )
    }

    /// Permutation matrix moving the two trailing slots of arity a + 2 to
    /// positions s, s + 1 (1-based), keeping the relative order of the rest.
    fn move_pair_matrix(a: usize, s: usize) -> RationalMatrix {
        let n = a + 2;
        let s0 = s - 1;
        let mut m = RationalMatrix::zeros(n, n);
        for j in 0..n {
            let row = if j < s0 {
                j
            } else if j < a {
                j + 2
            } else {
                s0 + (j - a)
            };
            m.set(row, j, Rational::one());
        }
        m
    }

    /// Composed linear map of the degree-zero factorization of a degree-one
    /// word: suffix . (move trailing pair into place) . (prefix widened by
    /// two trailing slots).
    fn factored_linear(w: &GeneratorWord) -> RationalMatrix {
        let (prefix, slot, cas_arity, suffix) = Self::split_at_casimir(w);
        let m_pre = atoms_matrix(&prefix, w.source_arity, 2);
        let m_move = Self::move_pair_matrix(cas_arity, slot);
        let m_suf = atoms_matrix(&suffix, cas_arity + 2, 0);
        m_suf.mul(&m_move.mul(&m_pre))
    }

    /// Evaluate a degree-one word on the canonical generator image
    /// x1...x_d at the word's source arity (which must be at least d).
    /// Works for any stored datum; the result lives in the degree-(d+2)
    /// space at the word's target arity.
    pub fn apply_word_to_generator(&self, w: &GeneratorWord) -> Vec<Rational> {
        assert_eq!(w.degree(), 1, "generator evaluation needs a degree-one word");
        let d = self.degree;
        let m = w.source_arity;
        assert!(
            m >= d,
            "canonical generator image needs source arity >= {d}"
        );
        let kind = FunctorKind::symmetric(d + 2);
        let linear = Self::factored_linear(w);
        debug_assert_eq!(linear.cols(), m + 2);
        let tgt_basis = space_basis(kind, linear.rows());
        let tgt_index = basis_index(&tgt_basis);
        let datum_basis = space_basis(kind, d + 2);
        let mut out = vec![Rational::zero(); tgt_basis.len()];
        for (i, c) in self.datum.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            // shift the datum to arity m + 2: source letters stay, the two
            // Casimir slots move to the end
            let e = &datum_basis[i];
            let mut shifted = vec![0usize; m + 2];
            shifted[..d].copy_from_slice(&e[..d]);
            shifted[m] = e[d];
            shifted[m + 1] = e[d + 1];
            for (row, v) in functor_image(kind, &linear, &shifted, &tgt_index) {
                out[row] += c * v;
            }
        }
        out
    }

    /// Action of an arbitrary word as matrices on the two summands.
    /// Requires the stored datum to be a multiple of the canonical
    /// x1...x_{d+2} monomial (as produced by [`build_extension`]).
    pub fn act(&self, w: &GeneratorWord) -> ExtensionAction {
        match w.degree() {
            0 => {
                let m = word_matrix(w);
                ExtensionAction::Degree0 {
                    on_source: functor_matrix(FunctorKind::symmetric(self.degree), &m),
                    on_target: functor_matrix(FunctorKind::symmetric(self.degree + 2), &m),
                }
            }
            1 => {
                let scale = self.canonical_scale();
                let m = w.source_arity;
                let kind = FunctorKind::symmetric(self.degree + 2);
                let linear = Self::factored_linear(w);
                // connecting = F(linear) . (append the two fresh variables)
                let src_basis = space_basis(FunctorKind::symmetric(self.degree), m);
                let tgt_basis = space_basis(kind, linear.rows());
                let tgt_index = basis_index(&tgt_basis);
                let mut conn = RationalMatrix::zeros(tgt_basis.len(), src_basis.len());
                for (col, e) in src_basis.iter().enumerate() {
                    let mut appended = e.clone();
                    appended.push(1);
                    appended.push(1);
                    for (row, v) in functor_image(kind, &linear, &appended, &tgt_index) {
                        conn.set(row, col, v * &scale);
                    }
                }
                ExtensionAction::Degree1 { connecting: conn }
            }
            _ => ExtensionAction::Zero,
        }
    }

    fn canonical_scale(&self) -> Rational {
        let basis = space_basis(FunctorKind::symmetric(self.degree + 2), self.degree + 2);
        let all_ones = vec![1usize; self.degree + 2];
        let mut scale = Rational::zero();
        for (i, c) in self.datum.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            assert!(
                basis[i] == all_ones,
                "matrix action needs a canonical-form datum"
            );
            scale = c.clone();
        }
        scale
    }
}

/// The defining invariance relations of the Casimir insertion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RelationId {
    /// Comultiplication on the first Casimir slot.
    ComultFirst,
    /// Symmetry of the Casimir pair.
    PairSymmetry,
    /// Compatibility with the two-sided adjoint action.
    AdjointInvariance,
    /// Comultiplication on the second Casimir slot.
    ComultSecond,
    /// Counit on the first Casimir slot.
    CounitFirst,
    /// Counit on the second Casimir slot.
    CounitSecond,
}

impl RelationId {
    pub const ALL: [RelationId; 6] = [
        RelationId::ComultFirst,
        RelationId::PairSymmetry,
        RelationId::AdjointInvariance,
        RelationId::ComultSecond,
        RelationId::CounitFirst,
        RelationId::CounitSecond,
    ];

    /// Source arity consumed by the relation before embedding.
    fn source_arity(self) -> usize {
        match self {
            RelationId::AdjointInvariance => 1,
            _ => 0,
        }
    }

    /// Word sums of the two sides, embedded with `a` identity strands on the
    /// left and `b` on the right.
    fn sides(self, a: usize, b: usize) -> (Vec<GeneratorWord>, Vec<GeneratorWord>) {
        let m = a + self.source_arity() + b;
        let w = || GeneratorWord::identity(m);
        match self {
            RelationId::ComultFirst => (
                vec![w().casimir(a + 1).comult(a + 1)],
                vec![
                    w().casimir(a + 1).unit(a + 2),
                    w().casimir(a + 1).unit(a + 1),
                ],
            ),
            RelationId::PairSymmetry => (
                vec![w().casimir(a + 1).swap(a + 1)],
                vec![w().casimir(a + 1)],
            ),
            RelationId::AdjointInvariance => (
                vec![w()
                    .comult(a + 1)
                    .casimir(a + 3)
                    .swap(a + 2)
                    .adjoint(a + 3)
                    .adjoint(a + 1)],
                vec![w().counit(a + 1).casimir(a + 1)],
            ),
            RelationId::ComultSecond => (
                vec![w().casimir(a + 1).comult(a + 2)],
                vec![
                    w().casimir(a + 1).unit(a + 2),
                    w().casimir(a + 1).unit(a + 3),
                ],
            ),
            RelationId::CounitFirst => (vec![w().casimir(a + 1).counit(a + 1)], vec![]),
            RelationId::CounitSecond => (vec![w().casimir(a + 1).counit(a + 2)], vec![]),
        }
    }
}

impl fmt::Display for RelationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            RelationId::ComultFirst => "comultiplication at the first Casimir slot",
            RelationId::PairSymmetry => "Casimir pair symmetry",
            RelationId::AdjointInvariance => "adjoint invariance",
            RelationId::ComultSecond => "comultiplication at the second Casimir slot",
            RelationId::CounitFirst => "counit at the first Casimir slot",
            RelationId::CounitSecond => "counit at the second Casimir slot",
        };
        f.write_str(name)
    }
}

/// First relation instance violated by the extension, if any.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RelationViolation {
    pub relation: RelationId,
    pub left_context: usize,
    pub right_context: usize,
}

impl fmt::Display for RelationViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} violated with {} identity strands on the left and {} on the right",
            self.relation, self.left_context, self.right_context
        )
    }
}

/// Check every relation instance embedded in identity contexts with source
/// arity up to `context_arity_cap`, evaluated on the canonical generator
/// image, comparing both sides exactly. Returns the first mismatch in a
/// fixed order (relations in declaration order, then left and right context
/// sizes ascending).
pub fn verify_casimir_relations(
    ext: &Extension,
    context_arity_cap: usize,
) -> Result<(), RelationViolation> {
    assert!(
        context_arity_cap >= ext.degree(),
        "context cap must be at least the source degree"
    );
    for relation in RelationId::ALL {
        let p = relation.source_arity();
        for a in 0..=context_arity_cap.saturating_sub(p) {
            for b in 0..=context_arity_cap.saturating_sub(p + a) {
                let m = a + p + b;
                if m < ext.degree() {
                    continue; // no canonical generator image at this arity
                }
                let (lhs, rhs) = relation.sides(a, b);
                let dim = {
                    let probe = &lhs[0];
                    space_dim(
                        FunctorKind::symmetric(ext.degree() + 2),
                        probe.target_arity(),
                    )
                };
                let mut left = vec![Rational::zero(); dim];
                for w in &lhs {
                    for (i, v) in ext.apply_word_to_generator(w).into_iter().enumerate() {
                        left[i] += v;
                    }
                }
                let mut right = vec![Rational::zero(); dim];
                for w in &rhs {
                    for (i, v) in ext.apply_word_to_generator(w).into_iter().enumerate() {
                        right[i] += v;
                    }
                }
                if left != right {
                    return Err(RelationViolation {
                        relation,
                        left_context: a,
                        right_context: b,
                    });
                }
            }
        }
    }
    Ok(())
}
