//! Braid words, their permutations, closure components, and sub-braid
//! extraction by strand deletion.
//!
//! Strands and positions are 1-based throughout. A strand is named by the
//! position it occupies at the top of the diagram (`t = 0`); letters act in
//! word order reading the diagram top to bottom.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from braid-word construction and manipulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    /// Strand count must be at least 1.
    InvalidStrandCount,
    /// A token in the text form was not a nonzero integer.
    MalformedToken(String),
    /// Generator index outside `1..=n-1`.
    IndexOutOfRange { index: i64, n: usize },
    /// Word composition requires equal strand counts.
    StrandCountMismatch { left: usize, right: usize },
    /// Strand-set member outside `1..=n`.
    StrandOutOfRange { strand: usize, n: usize },
    /// `delete_strands` requires a non-empty kept set.
    EmptyKeep,
    /// The kept set must be a union of cycles of the braid's permutation.
    KeepNotClosed { strand: usize, image: usize },
}

impl fmt::Display for BraidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidError::InvalidStrandCount => write!(f, "strand count must be at least 1"),
            BraidError::MalformedToken(t) => write!(f, "malformed braid letter {t:?}"),
            BraidError::IndexOutOfRange { index, n } => {
                write!(f, "generator index {index} out of range for {n} strands")
            }
            BraidError::StrandCountMismatch { left, right } => {
                write!(f, "strand count mismatch: {left} vs {right}")
            }
            BraidError::StrandOutOfRange { strand, n } => {
                write!(f, "strand {strand} out of range for {n} strands")
            }
            BraidError::EmptyKeep => write!(f, "kept strand set is empty"),
            BraidError::KeepNotClosed { strand, image } => {
                write!(
                    f,
                    "kept set is not closed under the braid permutation \
                     (strand {strand} maps to {image})"
                )
            }
        }
    }
}

impl core::error::Error for BraidError {}

/// The sign of a braid letter; `σ_i` is the positive crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One letter `σ_index^±1` of a braid word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BraidLetter {
    pub index: usize,
    pub sign: Sign,
}

impl BraidLetter {
    pub fn signed(self) -> i64 {
        self.index as i64 * self.sign.value()
    }
}

/// A word in the Artin generators `σ_1,…,σ_{n-1}` of the braid group on `n`
/// strands. The empty word is the identity braid.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<BraidLetter>,
}

impl BraidWord {
    pub fn identity(n: usize) -> Result<Self, BraidError> {
        if n == 0 {
            return Err(BraidError::InvalidStrandCount);
        }
        Ok(BraidWord { n, letters: Vec::new() })
    }

    pub fn new(n: usize, letters: Vec<BraidLetter>) -> Result<Self, BraidError> {
        if n == 0 {
            return Err(BraidError::InvalidStrandCount);
        }
        for l in &letters {
            if l.index == 0 || l.index >= n {
                return Err(BraidError::IndexOutOfRange { index: l.index as i64, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    /// Builds a word from signed generator indices: `k > 0` is `σ_k`,
    /// `k < 0` is `σ_{|k|}^{-1}`.
    pub fn from_signed(n: usize, signed: &[i64]) -> Result<Self, BraidError> {
        if n == 0 {
            return Err(BraidError::InvalidStrandCount);
        }
        let mut letters = Vec::with_capacity(signed.len());
        for &k in signed {
            if k == 0 {
                return Err(BraidError::MalformedToken("0".to_string()));
            }
            let index = k.unsigned_abs() as usize;
            if index >= n {
                return Err(BraidError::IndexOutOfRange { index: k, n });
            }
            let sign = if k > 0 { Sign::Positive } else { Sign::Negative };
            letters.push(BraidLetter { index, sign });
        }
        Ok(BraidWord { n, letters })
    }

    /// Parses the shared text form: nonzero integers separated by whitespace
    /// or commas, e.g. `"1 -2 -3 -3 -4"`. The empty string is the identity.
    pub fn parse(text: &str, n: usize) -> Result<Self, BraidError> {
        if n == 0 {
            return Err(BraidError::InvalidStrandCount);
        }
        let mut signed = Vec::new();
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if token.is_empty() {
                continue;
            }
            let k: i64 =
                token.parse().map_err(|_| BraidError::MalformedToken(token.to_string()))?;
            if k == 0 {
                return Err(BraidError::MalformedToken(token.to_string()));
            }
            signed.push(k);
        }
        Self::from_signed(n, &signed)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[BraidLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Signed-integer view of the letters.
    pub fn signed_letters(&self) -> Vec<i64> {
        self.letters.iter().map(|l| l.signed()).collect()
    }

    /// Concatenation; both words must live on the same strand count.
    pub fn compose(&self, other: &Self) -> Result<Self, BraidError> {
        if self.n != other.n {
            return Err(BraidError::StrandCountMismatch { left: self.n, right: other.n });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// The group inverse: letters reversed with signs flipped.
    pub fn inverse(&self) -> Self {
        BraidWord {
            n: self.n,
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| BraidLetter { index: l.index, sign: l.sign.flipped() })
                .collect(),
        }
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs until none remain. This does not
    /// solve the braid word problem; it only removes free cancellations.
    pub fn free_cancel(&self) -> Self {
        let mut stack: Vec<BraidLetter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            match stack.last() {
                Some(top) if top.index == l.index && top.sign == l.sign.flipped() => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        BraidWord { n: self.n, letters: stack }
    }

    /// The underlying permutation: image of position `p` is the strand
    /// occupying `p` at the bottom of the diagram, so `σ_1 σ_2^{-1}` on three
    /// strands gives the 3-cycle `1→2→3→1`.
    pub fn permutation(&self) -> Permutation {
        let mut pos: Vec<usize> = (1..=self.n).collect();
        for l in &self.letters {
            pos.swap(l.index - 1, l.index);
        }
        Permutation { image: pos }
    }

    /// True iff the permutation is a single `n`-cycle, i.e. the closure is a
    /// knot and the braid is the braid of one periodic orbit.
    pub fn is_cyclic(&self) -> bool {
        self.permutation().is_full_cycle()
    }

    /// The components of the closure: the cycles of the permutation, each as
    /// a strand set, ordered by smallest member.
    pub fn closure_components(&self) -> Vec<StrandSet> {
        self.permutation().cycles().into_iter().map(StrandSet::from_cycle).collect()
    }

    /// Deletes all strands outside `keep`, which must be a non-empty union of
    /// cycles of the permutation. A letter survives iff both strands crossing
    /// at that moment are kept; its index becomes the rank of its position
    /// among positions currently occupied by kept strands.
    pub fn delete_strands(&self, keep: &StrandSet) -> Result<Self, BraidError> {
        if keep.is_empty() {
            return Err(BraidError::EmptyKeep);
        }
        for s in keep.iter() {
            if s == 0 || s > self.n {
                return Err(BraidError::StrandOutOfRange { strand: s, n: self.n });
            }
        }
        let perm = self.permutation();
        for s in keep.iter() {
            let image = perm.image_of(s);
            if !keep.contains(image) {
                return Err(BraidError::KeepNotClosed { strand: s, image });
            }
        }
        let mut pos: Vec<usize> = (1..=self.n).collect();
        let mut letters = Vec::new();
        for l in &self.letters {
            let (a, b) = (pos[l.index - 1], pos[l.index]);
            if keep.contains(a) && keep.contains(b) {
                let rank = pos[..l.index].iter().filter(|&&s| keep.contains(s)).count();
                letters.push(BraidLetter { index: rank, sign: l.sign });
            }
            pos.swap(l.index - 1, l.index);
        }
        Ok(BraidWord { n: keep.len(), letters })
    }
}

impl fmt::Display for BraidWord {
    /// The shared signed-integer text form, e.g. `1 -2 -3 -3 -4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l.signed())?;
        }
        Ok(())
    }
}

/// A permutation of `{1,…,n}`, stored as the image map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { image: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// Image of `i` (1-based).
    pub fn image_of(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &x)| x == i + 1)
    }

    /// `self` after `other`: the result maps `i` to `self(other(i))`.
    pub fn compose_after(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "permutation size mismatch");
        Permutation { image: (1..=self.n()).map(|i| self.image_of(other.image_of(i))).collect() }
    }

    pub fn is_full_cycle(&self) -> bool {
        self.cycles().len() == 1
    }

    /// Cycle decomposition; cycles are ordered by smallest member and each
    /// cycle starts at its smallest member.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.image_of(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.image.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// A set of strand names, e.g. the strands of one closure component.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct StrandSet {
    members: BTreeSet<usize>,
}

impl StrandSet {
    pub fn from_cycle(cycle: Vec<usize>) -> Self {
        StrandSet { members: cycle.into_iter().collect() }
    }

    pub fn contains(&self, strand: usize) -> bool {
        self.members.contains(&strand)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.members.iter().copied().collect()
    }

    /// The complement within `{1,…,n}`.
    pub fn complement(&self, n: usize) -> Self {
        (1..=n).filter(|s| !self.contains(*s)).collect()
    }
}

impl FromIterator<usize> for StrandSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        StrandSet { members: iter.into_iter().collect() }
    }
}

impl fmt::Display for StrandSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, s) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str, n: usize) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn parse_examples() {
        let b = w("1 -2", 3);
        assert_eq!(b.signed_letters(), vec![1, -2]);

        let id = w("", 4);
        assert!(id.is_empty());
        assert_eq!(id.n(), 4);

        let a1 = w("1 -2 -3 -3 -4", 5);
        assert_eq!(a1.signed_letters(), vec![1, -2, -3, -3, -4]);

        let commas = w("1, -2,,  -3", 5);
        assert_eq!(commas.signed_letters(), vec![1, -2, -3]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(BraidWord::parse("x", 3), Err(BraidError::MalformedToken(_))));
        assert!(matches!(BraidWord::parse("0", 3), Err(BraidError::MalformedToken(_))));
        assert!(matches!(
            BraidWord::parse("3", 3),
            Err(BraidError::IndexOutOfRange { index: 3, n: 3 })
        ));
        assert!(matches!(
            BraidWord::parse("-5", 3),
            Err(BraidError::IndexOutOfRange { index: -5, n: 3 })
        ));
        assert!(matches!(BraidWord::parse("1", 0), Err(BraidError::InvalidStrandCount)));
    }

    #[test]
    fn permutation_of_lr_braid() {
        // σ_1 σ_2^{-1} on three strands: the 3-cycle 1→2, 2→3, 3→1
        let p = w("1 -2", 3).permutation();
        assert_eq!(p.image(), &[2, 3, 1]);
        assert!(p.is_full_cycle());

        assert!(w("", 5).permutation().is_identity());
    }

    #[test]
    fn permutation_of_extension() {
        let p = w("1 -2 -3 -3 -4", 5).permutation();
        assert_eq!(p.cycles(), vec![vec![1, 2, 3], vec![4, 5]]);
        assert!(!w("1 -2 -3 -3 -4", 5).is_cyclic());
        assert!(!w("", 2).is_cyclic());
    }

    #[test]
    fn closure_components_examples() {
        let comps = w("1 -2", 3).closure_components();
        assert_eq!(comps, vec![StrandSet::from_iter([1, 2, 3])]);

        let comps = w("1 -2 -3 -3 -4", 5).closure_components();
        assert_eq!(
            comps,
            vec![StrandSet::from_iter([1, 2, 3]), StrandSet::from_iter([4, 5])]
        );

        let comps = w("", 3).closure_components();
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn delete_strands_base() {
        let ext = w("1 -2 -3 -3 -4", 5);
        let sub = ext.delete_strands(&StrandSet::from_iter([1, 2, 3])).unwrap();
        assert_eq!(sub, w("1 -2", 3));
    }

    #[test]
    fn delete_strands_rest() {
        // only σ_4^{-1} crosses two kept strands; it becomes σ_1^{-1} on 2 strands
        let ext = w("1 -2 -3 -3 -4", 5);
        let sub = ext.delete_strands(&StrandSet::from_iter([4, 5])).unwrap();
        assert_eq!(sub, w("-1", 2));
    }

    #[test]
    fn delete_all_is_identity() {
        let b = w("1 -2 -3 -3 -4", 5);
        assert_eq!(b.delete_strands(&(1..=5).collect()).unwrap(), b);
    }

    #[test]
    fn delete_strands_rejects_open_sets() {
        let b = w("1 -2 -3 -3 -4", 5);
        assert!(matches!(
            b.delete_strands(&StrandSet::from_iter([1, 2])),
            Err(BraidError::KeepNotClosed { .. })
        ));
        assert!(matches!(
            b.delete_strands(&StrandSet::default()),
            Err(BraidError::EmptyKeep)
        ));
        assert!(matches!(
            b.delete_strands(&StrandSet::from_iter([5, 6])),
            Err(BraidError::StrandOutOfRange { strand: 6, n: 5 })
        ));
    }

    #[test]
    fn compose_and_errors() {
        let a = w("1", 2);
        let b = w("-1", 2);
        assert_eq!(a.compose(&b).unwrap().signed_letters(), vec![1, -1]);
        assert_eq!(w("", 3).compose(&w("1 -2", 3)).unwrap(), w("1 -2", 3));
        assert_eq!(w("1", 3).compose(&w("-2", 3)).unwrap(), w("1 -2", 3));
        assert!(matches!(
            w("1", 2).compose(&w("1", 3)),
            Err(BraidError::StrandCountMismatch { .. })
        ));
    }

    #[test]
    fn free_cancel_examples() {
        assert!(w("1 -1", 2).free_cancel().is_empty());
        assert_eq!(w("1 -2", 3).free_cancel(), w("1 -2", 3));
        assert_eq!(w("1 2 -2 1", 3).free_cancel(), w("1 1", 3));
        // cancellation cascades through the stack
        assert!(w("1 2 -2 -1", 3).free_cancel().is_empty());
    }

    #[test]
    fn inverse_word() {
        let b = w("1 -2", 3);
        assert_eq!(b.inverse().signed_letters(), vec![2, -1]);
        assert!(b.compose(&b.inverse()).unwrap().free_cancel().is_empty());
    }

    #[test]
    fn strand_set_display() {
        let s = StrandSet::from_iter([3, 1, 2]);
        assert_eq!(s.to_string(), "{1,2,3}");
        assert_eq!(s.complement(5), StrandSet::from_iter([4, 5]));
    }
}
