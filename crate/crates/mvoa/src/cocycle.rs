//! The sign cocycle on binary words.
//!
//! Attach to each coordinate a generator `e_i` with `e_i e_i = 1` and
//! `e_i e_j = -e_j e_i` for `i != j`, and to each word the ascending
//! product of its support generators. Multiplying two such products and
//! re-sorting yields `e^a e^b = eps(a,b) e^{a+b}`, with `eps` counting
//! generator transpositions. The signed words `{±e^a}` form a central
//! extension of the word group, and every sign rule downstream (module
//! multiplicities, sigma twists) reduces to this cocycle.

use crate::gf2::Word;

/// Sign in `{+1, -1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn mul(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// The cocycle value `eps(a, b)` with `e^a e^b = eps(a,b) e^{a+b}`.
///
/// Equals `(-1)` to the number of pairs `(i, j)` with `i` in the support
/// of `a`, `j` in the support of `b` and `i > j`, in the natural
/// coordinate order.
pub fn epsilon(a: &Word, b: &Word) -> Sign {
    Sign::from_parity(a.inversions_parity(b))
}

/// `e^a e^a = (-1)^{w(w-1)/2}` for a word of weight `w`.
pub fn square_sign(a: &Word) -> Sign {
    let w = a.weight();
    Sign::from_parity((w * w.saturating_sub(1) / 2) % 2 == 1)
}

/// Commutator sign: `e^a e^b = comm_sign(a,b) e^b e^a`, equal to
/// `(-1)^{<a,b> + |a||b|}`.
pub fn comm_sign(a: &Word, b: &Word) -> Sign {
    let cross = a.dot(b) as usize + a.weight() * b.weight();
    Sign::from_parity(cross % 2 == 1)
}

/// An element `±e^w` of the central extension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedWord {
    pub word: Word,
    pub sign: Sign,
}

impl SignedWord {
    pub fn new(word: Word, sign: Sign) -> Self {
        SignedWord { word, sign }
    }

    pub fn identity(len: usize) -> Self {
        SignedWord {
            word: Word::zeros(len),
            sign: Sign::Plus,
        }
    }

    pub fn mul(&self, other: &SignedWord) -> SignedWord {
        SignedWord {
            sign: self.sign.mul(other.sign).mul(epsilon(&self.word, &other.word)),
            word: self.word.xor(&other.word),
        }
    }
}
