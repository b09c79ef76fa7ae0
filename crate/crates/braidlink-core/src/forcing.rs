//! The L-R calculus for pseudo-Anosov 3-braid types and Handel's forcing
//! order.
//!
//! A non-finite-order 3-braid type has a cyclic-word representative over the
//! alphabet `L = σ_1`, `R = σ_2^{-1}`, and it is pseudo-Anosov exactly when
//! both letters occur. Forcing between pseudo-Anosov types is subsequence
//! extraction up to rotation: `w` forces `v` iff `v` is obtained from `w` by
//! removing letters and cyclic permutation.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::braid::BraidWord;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ForcingError {
    EmptyWord,
    InvalidCharacter(char),
    /// The forcing order is only defined between pseudo-Anosov words (both
    /// letters present).
    NotPseudoAnosov(String),
}

impl fmt::Display for ForcingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForcingError::EmptyWord => write!(f, "L-R word is empty"),
            ForcingError::InvalidCharacter(c) => {
                write!(f, "invalid L-R character {c:?} (expected L or R)")
            }
            ForcingError::NotPseudoAnosov(w) => {
                write!(f, "{w:?} is not pseudo-Anosov (needs both L and R)")
            }
        }
    }
}

impl core::error::Error for ForcingError {}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LRLetter {
    L,
    R,
}

impl LRLetter {
    fn as_char(self) -> char {
        match self {
            LRLetter::L => 'L',
            LRLetter::R => 'R',
        }
    }
}

/// A nonempty cyclic word over `{L, R}`, stored as its canonical form: the
/// lexicographically least rotation with `L < R`. Two words are equal
/// exactly when they agree up to rotation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LRWord {
    letters: Vec<LRLetter>,
}

impl LRWord {
    /// Canonicalizes an explicit letter sequence.
    pub fn new(letters: Vec<LRLetter>) -> Result<Self, ForcingError> {
        if letters.is_empty() {
            return Err(ForcingError::EmptyWord);
        }
        Ok(LRWord { letters: least_rotation(&letters) })
    }

    /// Parses a case-insensitive string of `L`s and `R`s.
    pub fn parse(text: &str) -> Result<Self, ForcingError> {
        let mut letters = Vec::with_capacity(text.len());
        for c in text.chars() {
            match c.to_ascii_uppercase() {
                'L' => letters.push(LRLetter::L),
                'R' => letters.push(LRLetter::R),
                other => return Err(ForcingError::InvalidCharacter(other)),
            }
        }
        Self::new(letters)
    }

    pub fn letters(&self) -> &[LRLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty() // never true: construction rejects empty words
    }

    /// True iff both letters occur, i.e. the braid type is pseudo-Anosov
    /// rather than a power of a single generator.
    pub fn is_pseudo_anosov(&self) -> bool {
        self.letters.contains(&LRLetter::L) && self.letters.contains(&LRLetter::R)
    }

    /// The 3-strand braid word with `L ↦ σ_1`, `R ↦ σ_2^{-1}`.
    pub fn to_braid(&self) -> BraidWord {
        let signed: Vec<i64> = self
            .letters
            .iter()
            .map(|l| match l {
                LRLetter::L => 1,
                LRLetter::R => -2,
            })
            .collect();
        BraidWord::from_signed(3, &signed).expect("L-R letters are valid in B_3")
    }

    fn rotations(&self) -> impl Iterator<Item = Vec<LRLetter>> + '_ {
        (0..self.len()).map(move |k| {
            let mut rot = self.letters[k..].to_vec();
            rot.extend_from_slice(&self.letters[..k]);
            rot
        })
    }
}

impl fmt::Display for LRWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.letters {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

fn least_rotation(letters: &[LRLetter]) -> Vec<LRLetter> {
    (0..letters.len())
        .map(|k| {
            let mut rot = letters[k..].to_vec();
            rot.extend_from_slice(&letters[..k]);
            rot
        })
        .min()
        .expect("nonempty")
}

fn is_subsequence(needle: &[LRLetter], haystack: &[LRLetter]) -> bool {
    let mut it = haystack.iter();
    needle.iter().all(|l| it.any(|h| h == l))
}

fn require_pa(w: &LRWord) -> Result<(), ForcingError> {
    if w.is_pseudo_anosov() {
        Ok(())
    } else {
        Err(ForcingError::NotPseudoAnosov(w.to_string()))
    }
}

/// Handel's criterion: `w` forces `v` iff some rotation of `v` is a (not
/// necessarily contiguous) subsequence of some rotation of `w`. Both words
/// must be pseudo-Anosov.
pub fn forces(w: &LRWord, v: &LRWord) -> Result<bool, ForcingError> {
    require_pa(w)?;
    require_pa(v)?;
    if v.len() > w.len() {
        return Ok(false);
    }
    for wrot in w.rotations() {
        for vrot in v.rotations() {
            if is_subsequence(&vrot, &wrot) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// All pseudo-Anosov words forced by `w`: canonical forms of the
/// pseudo-Anosov subsequences of all rotations of `w`. Includes `w` itself
/// (the forcing order is reflexive). Runs in `O(len · 2^len)`; meant for the
/// short words the L-R calculus is about.
pub fn forced_set(w: &LRWord) -> Result<BTreeSet<LRWord>, ForcingError> {
    require_pa(w)?;
    let len = w.len();
    let mut out = BTreeSet::new();
    for rot in w.rotations() {
        for mask in 1u64..(1u64 << len) {
            let sub: Vec<LRLetter> =
                (0..len).filter(|&i| mask & (1 << i) != 0).map(|i| rot[i]).collect();
            let word = LRWord::new(sub).expect("nonempty mask");
            if word.is_pseudo_anosov() {
                out.insert(word);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn lr(text: &str) -> LRWord {
        LRWord::parse(text).unwrap()
    }

    #[test]
    fn parse_and_canonicalize() {
        assert_eq!(lr("LR").to_string(), "LR");
        assert_eq!(lr("RL").to_string(), "LR");
        assert_eq!(lr("LRLLRR").to_string(), "LLRRLR");
        assert_eq!(lr("rl").to_string(), "LR");
        assert!(matches!(LRWord::parse(""), Err(ForcingError::EmptyWord)));
        assert!(matches!(LRWord::parse("LXR"), Err(ForcingError::InvalidCharacter('X'))));
    }

    #[test]
    fn pseudo_anosov_criterion() {
        assert!(lr("LR").is_pseudo_anosov());
        assert!(!lr("LL").is_pseudo_anosov());
        assert!(lr("LRLLRR").is_pseudo_anosov());
    }

    #[test]
    fn to_braid_examples() {
        assert_eq!(lr("LR").to_braid().signed_letters(), vec![1, -2]);
        assert_eq!(lr("L").to_braid().signed_letters(), vec![1]);
        // canonical form of LRLR is LRLR itself
        assert_eq!(lr("LRLR").to_braid().signed_letters(), vec![1, -2, 1, -2]);
    }

    #[test]
    fn forcing_examples() {
        let w = lr("LRLLRR");
        for v in ["LRLL", "LRLR", "LRRR", "LR"] {
            assert!(forces(&w, &lr(v)).unwrap(), "LRLLRR should force {v}");
        }
        assert!(forces(&w, &w).unwrap());
        assert!(!forces(&lr("LR"), &lr("LRLR")).unwrap());
        assert!(matches!(
            forces(&lr("LL"), &lr("LR")),
            Err(ForcingError::NotPseudoAnosov(_))
        ));
    }

    #[test]
    fn forced_set_examples() {
        let set = forced_set(&lr("LR")).unwrap();
        assert_eq!(set, BTreeSet::from([lr("LR")]));

        let set = forced_set(&lr("LLR")).unwrap();
        assert_eq!(set, BTreeSet::from([lr("LLR"), lr("LR")]));

        let set = forced_set(&lr("LRLLRR")).unwrap();
        for v in ["LRLL", "LRLR", "LRRR", "LR", "LRLLRR"] {
            assert!(set.contains(&lr(v)), "missing {v}");
        }
        // no non-pA members, all canonical
        for v in &set {
            assert!(v.is_pseudo_anosov());
            assert_eq!(v.letters().to_vec(), least_rotation(v.letters()));
        }
    }

    #[test]
    fn forced_set_length_filter() {
        // the members of length ≤ 4 are exactly the subsequence-forced words:
        // LR, the two length-3 classes, and all four length-4 classes (LLRR
        // is forced too, e.g. by dropping letters 2 and 4 of LRLLRR)
        let set = forced_set(&lr("LRLLRR")).unwrap();
        let small: BTreeSet<LRWord> = set.into_iter().filter(|v| v.len() <= 4).collect();
        let expect: BTreeSet<LRWord> = ["LR", "LLR", "LRR", "LRLL", "LLRR", "LRLR", "LRRR"]
            .iter()
            .map(|s| lr(s))
            .collect();
        assert_eq!(small, expect);
    }
}
