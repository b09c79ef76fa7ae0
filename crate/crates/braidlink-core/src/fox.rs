//! The Artin action on free groups, Fox free derivatives pushed through the
//! closure coloring, and the Magnus and link representations built from them.
//!
//! The free group `F_n = <x_1,…,x_n>` carries the right Artin action
//! `x_i·σ_i = x_i x_{i+1} x_i^{-1}`, `x_{i+1}·σ_i = x_i`, `x_j·σ_i = x_j`.
//! The alternative basis `g_i = x_1⋯x_i` satisfies `g_n·β = g_n` for every
//! braid, which forces the bottom row `(0,…,0,1)` of the Magnus matrix
//! `R(β)_{ij} = φ(∂(g_i·β)/∂g_j)` and exposes the link representation `r(β)`
//! as its top-left block. Here `φ` abelianizes by sending each `x_i` to the
//! variable of its closure component, so the link group itself is never
//! materialized.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::braid::{BraidWord, Sign, StrandSet};
use crate::laurent::{LaurentPoly, RingMatrix};

/// An element of `Z[t_1^{±1},…,t_μ^{±1}]` arising as the image of the
/// coloring-abelianized group ring map.
pub type ZHElement = LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FoxError {
    /// Generator index outside `1..=rank`.
    GeneratorOutOfRange { index: usize, rank: usize },
    /// The operation requires the other basis.
    WrongBasis { expected: Basis, found: Basis },
    /// Free-word and braid (or coloring) ranks differ.
    RankMismatch { left: usize, right: usize },
    /// A coloring must be constant on every cycle of the braid's permutation.
    IncompatibleColoring { strand: usize, image: usize },
    /// Color values must cover `1..=mu` with no gaps.
    InvalidColoring,
    /// The word is empty; the generalized Lefschetz number is only computed
    /// for nontrivial words.
    TrivialBraid,
    /// The Magnus matrix lost its `(0,…,0,1)` bottom row; this indicates a
    /// bug in the action or derivative computation, never bad input.
    BrokenBottomRow,
}

impl fmt::Display for FoxError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FoxError::GeneratorOutOfRange { index, rank } => {
                write!(f, "generator index {index} out of range for rank {rank}")
            }
            FoxError::WrongBasis { expected, found } => {
                write!(f, "expected a word in the {expected:?} basis, found {found:?}")
            }
            FoxError::RankMismatch { left, right } => {
                write!(f, "rank mismatch: {left} vs {right}")
            }
            FoxError::IncompatibleColoring { strand, image } => {
                write!(
                    f,
                    "coloring not constant on permutation cycles \
                     (strands {strand} and {image} share an orbit)"
                )
            }
            FoxError::InvalidColoring => write!(f, "color indices must cover 1..=mu"),
            FoxError::TrivialBraid => write!(f, "the empty braid word is rejected"),
            FoxError::BrokenBottomRow => {
                write!(f, "internal error: Magnus matrix bottom row is not (0,…,0,1)")
            }
        }
    }
}

impl core::error::Error for FoxError {}

/// Which free generating set a word is written in: the puncture loops
/// `x_1,…,x_n` or the prefix products `g_i = x_1⋯x_i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    X,
    G,
}

/// A freely reduced word in the free group of the given rank, tagged with
/// the basis its letters refer to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeWord {
    rank: usize,
    basis: Basis,
    letters: Vec<(usize, i8)>,
}

impl FreeWord {
    pub fn identity(rank: usize, basis: Basis) -> Self {
        FreeWord { rank, basis, letters: Vec::new() }
    }

    /// The generator `x_i`.
    pub fn x(rank: usize, i: usize) -> Result<Self, FoxError> {
        Self::from_letters(rank, Basis::X, vec![(i, 1)])
    }

    /// The generator `g_i`.
    pub fn g(rank: usize, i: usize) -> Result<Self, FoxError> {
        Self::from_letters(rank, Basis::G, vec![(i, 1)])
    }

    /// Builds and freely reduces a word; letter exponents must be `±1`.
    pub fn from_letters(
        rank: usize,
        basis: Basis,
        letters: Vec<(usize, i8)>,
    ) -> Result<Self, FoxError> {
        let mut w = FreeWord { rank, basis, letters: Vec::with_capacity(letters.len()) };
        for (i, e) in letters {
            if i == 0 || i > rank {
                return Err(FoxError::GeneratorOutOfRange { index: i, rank });
            }
            debug_assert!(e == 1 || e == -1);
            w.push_reduced(i, e);
        }
        Ok(w)
    }

    fn push_reduced(&mut self, i: usize, e: i8) {
        match self.letters.last() {
            Some(&(j, d)) if j == i && d == -e => {
                self.letters.pop();
            }
            _ => self.letters.push((i, e)),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn letters(&self) -> &[(usize, i8)] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Self) -> Result<Self, FoxError> {
        if self.rank != other.rank {
            return Err(FoxError::RankMismatch { left: self.rank, right: other.rank });
        }
        if self.basis != other.basis {
            return Err(FoxError::WrongBasis { expected: self.basis, found: other.basis });
        }
        let mut w = self.clone();
        for &(i, e) in &other.letters {
            w.push_reduced(i, e);
        }
        Ok(w)
    }

    pub fn inverse(&self) -> Self {
        FreeWord {
            rank: self.rank,
            basis: self.basis,
            letters: self.letters.iter().rev().map(|&(i, e)| (i, -e)).collect(),
        }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let name = match self.basis {
            Basis::X => 'x',
            Basis::G => 'g',
        };
        for (k, &(i, e)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "{name}{i}")?;
            } else {
                write!(f, "{name}{i}^-1")?;
            }
        }
        Ok(())
    }
}

/// Assigns each strand to the closure component it belongs to; component `j`
/// is abelianized to the variable `t_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    mu: usize,
}

impl Coloring {
    /// All strands in one component (`mu = 1`).
    pub fn uniform(n: usize) -> Self {
        Coloring { colors: vec![1; n], mu: 1 }
    }

    /// Builds a coloring from explicit 1-based color values; every color in
    /// `1..=max` must be attained.
    pub fn new(colors: Vec<usize>) -> Result<Self, FoxError> {
        let mu = colors.iter().copied().max().unwrap_or(0);
        if mu == 0 {
            return Err(FoxError::InvalidColoring);
        }
        let mut seen = vec![false; mu];
        for &c in &colors {
            if c == 0 {
                return Err(FoxError::InvalidColoring);
            }
            seen[c - 1] = true;
        }
        if seen.iter().all(|&s| s) {
            Ok(Coloring { colors, mu })
        } else {
            Err(FoxError::InvalidColoring)
        }
    }

    /// Component `k` of the list gets color `k+1`; the components must
    /// partition `{1,…,n}`.
    pub fn from_components(components: &[StrandSet], n: usize) -> Result<Self, FoxError> {
        let mut colors = vec![0; n];
        for (k, comp) in components.iter().enumerate() {
            for s in comp.iter() {
                if s == 0 || s > n || colors[s - 1] != 0 {
                    return Err(FoxError::InvalidColoring);
                }
                colors[s - 1] = k + 1;
            }
        }
        Self::new(colors)
    }

    pub fn n(&self) -> usize {
        self.colors.len()
    }

    pub fn mu(&self) -> usize {
        self.mu
    }

    /// Color of a strand (1-based).
    pub fn color_of(&self, strand: usize) -> usize {
        self.colors[strand - 1]
    }

    fn check_compatible(&self, braid: &BraidWord) -> Result<(), FoxError> {
        if self.n() != braid.n() {
            return Err(FoxError::RankMismatch { left: self.n(), right: braid.n() });
        }
        if self.mu == 1 {
            return Ok(());
        }
        let perm = braid.permutation();
        for s in 1..=braid.n() {
            let image = perm.image_of(s);
            if self.color_of(s) != self.color_of(image) {
                return Err(FoxError::IncompatibleColoring { strand: s, image });
            }
        }
        Ok(())
    }

    /// Abelianized exponent vector of `g_k = x_1⋯x_k`.
    fn g_degree(&self, k: usize) -> Vec<i64> {
        let mut e = vec![0; self.mu];
        for s in 1..=k {
            e[self.color_of(s) - 1] += 1;
        }
        e
    }
}

/// The right Artin action of a braid word on a free word in the `x` basis.
/// Inverse letters act by the inverse substitution
/// `x_i·σ_i^{-1} = x_{i+1}`, `x_{i+1}·σ_i^{-1} = x_{i+1}^{-1} x_i x_{i+1}`.
pub fn artin_act(w: &FreeWord, braid: &BraidWord) -> Result<FreeWord, FoxError> {
    if w.basis != Basis::X {
        return Err(FoxError::WrongBasis { expected: Basis::X, found: w.basis });
    }
    if w.rank != braid.n() {
        return Err(FoxError::RankMismatch { left: w.rank, right: braid.n() });
    }
    let mut current = w.clone();
    for l in braid.letters() {
        let i = l.index;
        let mut next = FreeWord::identity(w.rank, Basis::X);
        for &(gen, e) in &current.letters {
            match l.sign {
                Sign::Positive => {
                    if gen == i {
                        // x_i ↦ x_i x_{i+1} x_i^{-1}, conjugation commutes
                        // with inversion
                        next.push_reduced(i, 1);
                        next.push_reduced(i + 1, e);
                        next.push_reduced(i, -1);
                    } else if gen == i + 1 {
                        next.push_reduced(i, e);
                    } else {
                        next.push_reduced(gen, e);
                    }
                }
                Sign::Negative => {
                    if gen == i {
                        next.push_reduced(i + 1, e);
                    } else if gen == i + 1 {
                        next.push_reduced(i + 1, -1);
                        next.push_reduced(i, e);
                        next.push_reduced(i + 1, 1);
                    } else {
                        next.push_reduced(gen, e);
                    }
                }
            }
        }
        current = next;
    }
    Ok(current)
}

/// Rewrites between the two bases: `x_i = g_{i-1}^{-1} g_i` (with `g_0`
/// empty) and `g_i = x_1⋯x_i`. Applying it twice is the identity.
pub fn change_basis(w: &FreeWord) -> FreeWord {
    let mut out = FreeWord::identity(w.rank, match w.basis {
        Basis::X => Basis::G,
        Basis::G => Basis::X,
    });
    for &(i, e) in &w.letters {
        match w.basis {
            Basis::X => {
                if e == 1 {
                    if i > 1 {
                        out.push_reduced(i - 1, -1);
                    }
                    out.push_reduced(i, 1);
                } else {
                    out.push_reduced(i, -1);
                    if i > 1 {
                        out.push_reduced(i - 1, 1);
                    }
                }
            }
            Basis::G => {
                if e == 1 {
                    for j in 1..=i {
                        out.push_reduced(j, 1);
                    }
                } else {
                    for j in (1..=i).rev() {
                        out.push_reduced(j, -1);
                    }
                }
            }
        }
    }
    out
}

/// Abelianizes a word to the monomial `∏ t_{c(i)}^{e_i}`, where `e_i` is the
/// exponent sum of `x_i`.
pub fn abelianize(w: &FreeWord, coloring: &Coloring) -> Result<ZHElement, FoxError> {
    if w.rank != coloring.n() {
        return Err(FoxError::RankMismatch { left: w.rank, right: coloring.n() });
    }
    let xw = match w.basis {
        Basis::X => w.clone(),
        Basis::G => change_basis(w),
    };
    let mut exps = vec![0i64; coloring.mu()];
    for &(i, e) in &xw.letters {
        exps[coloring.color_of(i) - 1] += e as i64;
    }
    Ok(LaurentPoly::monomial(&exps, 1))
}

/// The Fox derivative `∂w/∂g_j` with values pushed through the
/// abelianization on the fly: `∂g_j/∂g_j = 1`, `∂(g_j^{-1})/∂g_j` is minus
/// the abelianized `g_j^{-1}`, and products follow
/// `∂(vw)/∂g_j = ∂v/∂g_j + φ(v) ∂w/∂g_j`.
pub fn fox_derivative(
    w: &FreeWord,
    j: usize,
    coloring: &Coloring,
) -> Result<ZHElement, FoxError> {
    if w.basis != Basis::G {
        return Err(FoxError::WrongBasis { expected: Basis::G, found: w.basis });
    }
    if w.rank != coloring.n() {
        return Err(FoxError::RankMismatch { left: w.rank, right: coloring.n() });
    }
    if j == 0 || j > w.rank {
        return Err(FoxError::GeneratorOutOfRange { index: j, rank: w.rank });
    }
    let mu = coloring.mu();
    let g_degrees: Vec<Vec<i64>> = (0..=w.rank).map(|k| coloring.g_degree(k)).collect();
    let mut result = LaurentPoly::zero(mu);
    let mut prefix = vec![0i64; mu];
    for &(k, e) in &w.letters {
        if e == 1 {
            if k == j {
                result = result.add(&LaurentPoly::monomial(&prefix, 1));
            }
            for (p, d) in prefix.iter_mut().zip(&g_degrees[k]) {
                *p += d;
            }
        } else {
            for (p, d) in prefix.iter_mut().zip(&g_degrees[k]) {
                *p -= d;
            }
            if k == j {
                result = result.add(&LaurentPoly::monomial(&prefix, -1));
            }
        }
    }
    Ok(result)
}

/// The `g_i` image under the braid action, expressed back in the `g` basis.
fn g_image(i: usize, braid: &BraidWord) -> Result<FreeWord, FoxError> {
    let gi = FreeWord::g(braid.n(), i)?;
    let acted = artin_act(&change_basis(&gi), braid)?;
    Ok(change_basis(&acted))
}

/// The Magnus matrix `R(β)`: entry `(i,j)` is the abelianized Fox derivative
/// `∂(g_i·β)/∂g_j`. For `mu > 1` the coloring must be constant on the cycles
/// of the braid's permutation; any braid is accepted for `mu = 1`.
pub fn magnus_matrix(braid: &BraidWord, coloring: &Coloring) -> Result<RingMatrix, FoxError> {
    coloring.check_compatible(braid)?;
    let n = braid.n();
    let mut rows: Vec<Vec<LaurentPoly>> = Vec::with_capacity(n);
    for i in 1..=n {
        let w = g_image(i, braid)?;
        let row: Result<Vec<_>, _> =
            (1..=n).map(|j| fox_derivative(&w, j, coloring)).collect();
        rows.push(row?);
    }
    Ok(RingMatrix::from_fn(n, n, coloring.mu(), |i, j| rows[i][j].clone()))
}

fn bottom_row_ok(m: &RingMatrix) -> bool {
    let n = m.rows();
    (0..n - 1).all(|j| m.at(n - 1, j).is_zero()) && m.at(n - 1, n - 1).is_one()
}

/// The link representation `r(β)`: the top-left `(n-1)×(n-1)` block of the
/// Magnus matrix. The invariance of `g_n` guarantees the bottom row
/// `(0,…,0,1)`; that invariant is re-checked before extracting the block.
pub fn link_rep(braid: &BraidWord, coloring: &Coloring) -> Result<RingMatrix, FoxError> {
    let full = magnus_matrix(braid, coloring)?;
    link_rep_block(&full)
}

fn link_rep_block(full: &RingMatrix) -> Result<RingMatrix, FoxError> {
    if !bottom_row_ok(full) {
        return Err(FoxError::BrokenBottomRow);
    }
    let n = full.rows();
    Ok(RingMatrix::from_fn(n - 1, n - 1, full.nvars(), |i, j| full.at(i, j).clone()))
}

/// The generalized Lefschetz number `L_H(β) = 1 - Tr R(β) = -Tr r(β)`, over
/// the coloring induced by the closure components. The empty word is
/// rejected.
pub fn lefschetz(braid: &BraidWord) -> Result<ZHElement, FoxError> {
    if braid.is_empty() {
        return Err(FoxError::TrivialBraid);
    }
    let coloring = Coloring::from_components(&braid.closure_components(), braid.n())?;
    let full = magnus_matrix(braid, &coloring)?;
    let r = link_rep_block(&full)?;
    let from_r = r.trace().expect("square").neg();
    let from_full = LaurentPoly::one(coloring.mu()).sub(&full.trace().expect("square"));
    if from_r != from_full {
        return Err(FoxError::BrokenBottomRow);
    }
    Ok(from_r)
}
