//! Exact arithmetic in the Laurent polynomial ring `Z[t_1^{±1},…,t_μ^{±1}]`
//! and matrices over it.
//!
//! Polynomials are kept in canonical form at all times: a term map from
//! exponent vectors to nonzero arbitrary-precision integer coefficients, so
//! two values are equal exactly when their term maps are. Determinants are
//! computed by fraction-free Bareiss elimination; the required exact
//! divisions are performed by [`LaurentPoly::div_exact`].

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Errors from ring and matrix operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingError {
    /// Variable index outside `1..=nvars`.
    IndexOutOfRange { index: usize, nvars: usize },
    /// The substituted value has the wrong number of variables.
    VariableCountMismatch { expected: usize, found: usize },
    /// Substituting a non-unit value for a variable that occurs with a
    /// negative exponent.
    NonUnitSubstitution,
    /// Exact division requested but the divisor does not divide the dividend.
    NonDivisible,
    DivisionByZero,
    NonSquareMatrix { rows: usize, cols: usize },
    DimensionMismatch,
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::IndexOutOfRange { index, nvars } => {
                write!(f, "variable index {index} out of range for {nvars} variable(s)")
            }
            RingError::VariableCountMismatch { expected, found } => {
                write!(f, "expected a value in {expected} variable(s), found {found}")
            }
            RingError::NonUnitSubstitution => {
                write!(f, "cannot substitute a non-unit for a variable with negative exponents")
            }
            RingError::NonDivisible => write!(f, "exact division failed: not divisible"),
            RingError::DivisionByZero => write!(f, "division by zero"),
            RingError::NonSquareMatrix { rows, cols } => {
                write!(f, "matrix is not square ({rows}x{cols})")
            }
            RingError::DimensionMismatch => write!(f, "matrix dimension mismatch"),
        }
    }
}

impl core::error::Error for RingError {}

/// An element of `Z[t_1^{±1},…,t_μ^{±1}]`.
///
/// Exponent vectors have fixed length `nvars`; coefficients are nonzero
/// `BigInt`s. Elementwise arithmetic panics on a variable-count mismatch
/// (callers always work in a fixed ring).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c.into());
        p
    }

    /// The variable `t_index` (1-based).
    pub fn var(nvars: usize, index: usize) -> Result<Self, RingError> {
        Self::var_pow(nvars, index, 1)
    }

    /// `t_index^exp` (1-based index, any integer exponent).
    pub fn var_pow(nvars: usize, index: usize, exp: i64) -> Result<Self, RingError> {
        if index == 0 || index > nvars {
            return Err(RingError::IndexOutOfRange { index, nvars });
        }
        let mut exps = vec![0; nvars];
        exps[index - 1] = exp;
        Ok(Self::monomial(&exps, 1))
    }

    /// A single term `c * t^exps`.
    pub fn monomial(exps: &[i64], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps.to_vec(), c.into());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending lexicographic order of exponent vectors.
    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, exps: Vec<i64>, c: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn assert_same_ring(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "laurent polynomials from different rings ({} vs {} variables)",
            self.nvars, other.nvars
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), -c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_ring(other);
        let mut r = Self::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1 * c2);
            }
        }
        r
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut r = Self::zero(self.nvars);
        for (e, k) in &self.terms {
            r.add_term(e.clone(), k * &c);
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one(self.nvars);
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// True iff the value is a unit of the Laurent ring, i.e. `± t^e`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    fn unit_inverse(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms.iter().next().unwrap();
        Some(Self::monomial(&e.iter().map(|x| -x).collect::<Vec<_>>(), c.clone()))
    }

    /// Substitutes `value` for the variable `t_var` (1-based). The value must
    /// be expressed in the remaining `nvars - 1` variables; the result drops
    /// the substituted variable. Substituting for a variable that occurs with
    /// negative exponents requires `value` to be a unit.
    pub fn substitute(&self, var: usize, value: &Self) -> Result<Self, RingError> {
        if var == 0 || var > self.nvars {
            return Err(RingError::IndexOutOfRange { index: var, nvars: self.nvars });
        }
        if value.nvars != self.nvars - 1 {
            return Err(RingError::VariableCountMismatch {
                expected: self.nvars - 1,
                found: value.nvars,
            });
        }
        let needs_inverse = self.terms.keys().any(|e| e[var - 1] < 0);
        let inv = if needs_inverse {
            Some(value.unit_inverse().ok_or(RingError::NonUnitSubstitution)?)
        } else {
            None
        };
        let mut r = Self::zero(self.nvars - 1);
        for (e, c) in &self.terms {
            let k = e[var - 1];
            let rest: Vec<i64> =
                e.iter().enumerate().filter(|(i, _)| *i != var - 1).map(|(_, &x)| x).collect();
            let factor = if k >= 0 {
                value.pow(k as u32)
            } else {
                inv.as_ref().unwrap().pow((-k) as u32)
            };
            let term = Self::monomial(&rest, c.clone()).mul(&factor);
            r = r.add(&term);
        }
        Ok(r)
    }

    /// Componentwise minimum exponent over the support (zeros for the zero
    /// polynomial).
    fn min_exponents(&self) -> Vec<i64> {
        let mut m = vec![i64::MAX; self.nvars];
        for e in self.terms.keys() {
            for (mi, &x) in m.iter_mut().zip(e) {
                *mi = (*mi).min(x);
            }
        }
        if self.terms.is_empty() {
            m.fill(0);
        }
        m
    }

    fn shift(&self, delta: &[i64]) -> Self {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(delta).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    /// Exact division: returns `q` with `self = q * divisor`, or
    /// `NonDivisible`. Minimal monomials are factored out of both operands so
    /// the remaining division happens between ordinary polynomials, driven by
    /// their lexicographically leading terms.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, RingError> {
        self.assert_same_ring(divisor);
        if divisor.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let neg_min_a: Vec<i64> = self.min_exponents().iter().map(|x| -x).collect();
        let neg_min_b: Vec<i64> = divisor.min_exponents().iter().map(|x| -x).collect();
        let mut rem = self.shift(&neg_min_a);
        let b = divisor.shift(&neg_min_b);
        let (b_lead_e, b_lead_c) = b.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut q = Self::zero(self.nvars);
        while !rem.is_zero() {
            let (r_lead_e, r_lead_c) =
                rem.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())).unwrap();
            let qe: Vec<i64> = r_lead_e.iter().zip(&b_lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) || !(&r_lead_c % &b_lead_c).is_zero() {
                return Err(RingError::NonDivisible);
            }
            let qterm = Self::monomial(&qe, &r_lead_c / &b_lead_c);
            rem = rem.sub(&qterm.mul(&b));
            q = q.add(&qterm);
        }
        // restore the monomial factors: self/divisor = q * t^(min_a - min_b)
        let delta: Vec<i64> = neg_min_b.iter().zip(&neg_min_a).map(|(b, a)| b - a).collect();
        Ok(q.shift(&delta))
    }

    fn display_key(exps: &[i64]) -> Vec<i64> {
        // 0, then 1, -1, 2, -2, … per variable; gives the conventional
        // reading "constant, t, t^-1, t^2, …"
        exps.iter().map(|&e| if e >= 0 { 2 * e - 1 } else { -2 * e }).collect()
    }

    fn fmt_monomial(exps: &[i64], out: &mut String) {
        use core::fmt::Write;
        let mut first = true;
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                out.push('*');
            }
            first = false;
            if e == 1 {
                let _ = write!(out, "t{}", i + 1);
            } else {
                let _ = write!(out, "t{}^{}", i + 1, e);
            }
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text form, e.g. `-1 + t1 + t1^-1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut ordered: Vec<(&Vec<i64>, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by_key(|(e, _)| Self::display_key(e));
        let mut out = String::new();
        for (k, (e, c)) in ordered.into_iter().enumerate() {
            let is_const = e.iter().all(|&x| x == 0);
            if k == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let a = c.abs();
            if is_const || !a.is_one() {
                out.push_str(&a.to_string());
                if !is_const {
                    out.push('*');
                }
            }
            if !is_const {
                Self::fmt_monomial(e, &mut out);
            }
        }
        f.write_str(&out)
    }
}

impl core::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: Self) -> LaurentPoly {
        LaurentPoly::add(self, rhs)
    }
}

impl core::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: Self) -> LaurentPoly {
        LaurentPoly::sub(self, rhs)
    }
}

impl core::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: Self) -> LaurentPoly {
        LaurentPoly::mul(self, rhs)
    }
}

impl core::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly::neg(self)
    }
}

/// A rectangular matrix over `Z[t_1^{±1},…,t_μ^{±1}]`. All entries share the
/// same number of variables. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMatrix {
    rows: usize,
    cols: usize,
    nvars: usize,
    entries: Vec<LaurentPoly>,
}

impl RingMatrix {
    pub fn from_fn(
        rows: usize,
        cols: usize,
        nvars: usize,
        mut f: impl FnMut(usize, usize) -> LaurentPoly,
    ) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                let e = f(i, j);
                assert_eq!(e.nvars(), nvars, "matrix entry in a different ring");
                entries.push(e);
            }
        }
        RingMatrix { rows, cols, nvars, entries }
    }

    pub fn identity(n: usize, nvars: usize) -> Self {
        Self::from_fn(n, n, nvars, |i, j| {
            if i == j {
                LaurentPoly::one(nvars)
            } else {
                LaurentPoly::zero(nvars)
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn at(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.cols + j]
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn mat_mul(&self, other: &Self) -> Result<Self, RingError> {
        if self.cols != other.rows || self.nvars != other.nvars {
            return Err(RingError::DimensionMismatch);
        }
        Ok(Self::from_fn(self.rows, other.cols, self.nvars, |i, j| {
            let mut acc = LaurentPoly::zero(self.nvars);
            for k in 0..self.cols {
                acc = acc.add(&self.at(i, k).mul(other.at(k, j)));
            }
            acc
        }))
    }

    /// `self - I`, defined for square matrices.
    pub fn sub_identity(&self) -> Result<Self, RingError> {
        if !self.is_square() {
            return Err(RingError::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        let one = LaurentPoly::one(self.nvars);
        Ok(Self::from_fn(self.rows, self.cols, self.nvars, |i, j| {
            if i == j {
                self.at(i, j).sub(&one)
            } else {
                self.at(i, j).clone()
            }
        }))
    }

    pub fn trace(&self) -> Result<LaurentPoly, RingError> {
        if !self.is_square() {
            return Err(RingError::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        let mut acc = LaurentPoly::zero(self.nvars);
        for i in 0..self.rows {
            acc = acc.add(self.at(i, i));
        }
        Ok(acc)
    }

    /// Exact determinant by fraction-free Bareiss elimination. Every division
    /// in the elimination is exact (Sylvester's identity); the empty matrix
    /// has determinant 1.
    pub fn determinant(&self) -> Result<LaurentPoly, RingError> {
        if !self.is_square() {
            return Err(RingError::NonSquareMatrix { rows: self.rows, cols: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(LaurentPoly::one(self.nvars));
        }
        let mut m: Vec<Vec<LaurentPoly>> =
            (0..n).map(|i| (0..n).map(|j| self.at(i, j).clone()).collect()).collect();
        let mut negate = false;
        let mut prev_pivot = LaurentPoly::one(self.nvars);
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negate = !negate;
                    }
                    None => return Ok(LaurentPoly::zero(self.nvars)),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                    m[i][j] = num
                        .div_exact(&prev_pivot)
                        .expect("Bareiss division is exact by Sylvester's identity");
                }
            }
            prev_pivot = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if negate { det.neg() } else { det })
    }
}
