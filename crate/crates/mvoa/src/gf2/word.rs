//! Fixed-length binary words, packed into 64-bit limbs.

use std::fmt;

use crate::error::Error;

/// A fixed-length vector over GF(2).
///
/// Coordinates are 0-based internally; reports use 1-based positions.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    len: usize,
    limbs: Vec<u64>,
}

fn limb_count(len: usize) -> usize {
    (len + 63) / 64
}

impl Word {
    /// The all-zero word of the given length.
    pub fn zeros(len: usize) -> Self {
        Word {
            len,
            limbs: vec![0; limb_count(len)],
        }
    }

    /// The all-one word of the given length.
    pub fn ones(len: usize) -> Self {
        let mut w = Word::zeros(len);
        for i in 0..len {
            w.set(i, true);
        }
        w
    }

    /// The standard basis word with a single 1 at `pos` (0-based).
    pub fn unit(len: usize, pos: usize) -> Self {
        let mut w = Word::zeros(len);
        w.set(pos, true);
        w
    }

    /// Build a word from the 0-based positions of its set bits.
    pub fn from_support(len: usize, support: &[usize]) -> Self {
        let mut w = Word::zeros(len);
        for &i in support {
            w.set(i, true);
        }
        w
    }

    /// Parse a string of `0`/`1` characters.
    pub fn parse(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let mut w = Word::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => w.set(i, true),
                _ => return Err(Error::Parse(format!("invalid bit character {c:?}"))),
            }
        }
        Ok(w)
    }

    /// Expand a run-length pattern such as `(1^16 0^8)`; plain `01` strings
    /// also parse. `{..}^k` repeats a group.
    pub fn from_pattern(pattern: &str) -> Result<Self, Error> {
        let expanded = expand_pattern(pattern)?;
        Word::parse(&expanded)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.limbs[i / 64] >> (i % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if v {
            self.limbs[i / 64] |= mask;
        } else {
            self.limbs[i / 64] &= !mask;
        }
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.limbs.iter().map(|l| l.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.limbs.iter().all(|&l| l == 0)
    }

    /// GF(2) sum (XOR) of two words of equal length.
    pub fn xor(&self, other: &Word) -> Word {
        assert_eq!(self.len, other.len, "word length mismatch");
        let limbs = self
            .limbs
            .iter()
            .zip(&other.limbs)
            .map(|(a, b)| a ^ b)
            .collect();
        Word { len: self.len, limbs }
    }

    pub fn xor_in_place(&mut self, other: &Word) {
        assert_eq!(self.len, other.len, "word length mismatch");
        for (a, b) in self.limbs.iter_mut().zip(&other.limbs) {
            *a ^= b;
        }
    }

    /// Standard inner product `<a,b>` over GF(2).
    pub fn dot(&self, other: &Word) -> bool {
        assert_eq!(self.len, other.len, "word length mismatch");
        let mut acc = 0u64;
        for (a, b) in self.limbs.iter().zip(&other.limbs) {
            acc ^= a & b;
        }
        acc.count_ones() % 2 == 1
    }

    /// Size of the common support `|Supp(a) ∩ Supp(b)|`.
    pub fn overlap(&self, other: &Word) -> usize {
        assert_eq!(self.len, other.len, "word length mismatch");
        self.limbs
            .iter()
            .zip(&other.limbs)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// `(1^n) - self`.
    pub fn complement(&self) -> Word {
        self.xor(&Word::ones(self.len))
    }

    /// True when `Supp(self) ⊆ Supp(other)`.
    pub fn supported_on(&self, other: &Word) -> bool {
        assert_eq!(self.len, other.len, "word length mismatch");
        self.limbs
            .iter()
            .zip(&other.limbs)
            .all(|(a, b)| a & !b == 0)
    }

    /// 0-based positions of the set bits, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    /// Restriction of the word to the listed coordinates, in order.
    pub fn restrict(&self, coords: &[usize]) -> Word {
        let mut w = Word::zeros(coords.len());
        for (j, &i) in coords.iter().enumerate() {
            if self.get(i) {
                w.set(j, true);
            }
        }
        w
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut w = Word::zeros(self.len + other.len);
        for i in 0..self.len {
            if self.get(i) {
                w.set(i, true);
            }
        }
        for i in 0..other.len {
            if other.get(i) {
                w.set(self.len + i, true);
            }
        }
        w
    }

    /// Embed into a longer ambient word, placing bit `j` at `coords[j]`.
    pub fn embed(&self, ambient: usize, coords: &[usize]) -> Word {
        assert_eq!(coords.len(), self.len);
        let mut w = Word::zeros(ambient);
        for (j, &i) in coords.iter().enumerate() {
            if self.get(j) {
                w.set(i, true);
            }
        }
        w
    }

    /// Doubles every bit: `(b_1 b_1 b_2 b_2 ...)`.
    pub fn doubled(&self) -> Word {
        let mut w = Word::zeros(2 * self.len);
        for i in 0..self.len {
            if self.get(i) {
                w.set(2 * i, true);
                w.set(2 * i + 1, true);
            }
        }
        w
    }

    /// True when every adjacent pair `(2i, 2i+1)` carries equal bits.
    pub fn is_doubled(&self) -> bool {
        self.len % 2 == 0 && (0..self.len / 2).all(|i| self.get(2 * i) == self.get(2 * i + 1))
    }

    /// Number of pairs `(i, j)` with `i ∈ Supp(self)`, `j ∈ Supp(other)`,
    /// `i > j`; reduced mod 2. Computed limb-wise with prefix popcounts.
    pub fn inversions_parity(&self, other: &Word) -> bool {
        assert_eq!(self.len, other.len, "word length mismatch");
        let mut prefix = 0usize; // bits of `other` strictly below current limb
        let mut total = 0usize;
        for (a, b) in self.limbs.iter().zip(&other.limbs) {
            let mut bits = *a;
            while bits != 0 {
                let pos = bits.trailing_zeros();
                let below = if pos == 0 { 0 } else { (b << (64 - pos)).count_ones() as usize };
                total += prefix + below;
                bits &= bits - 1;
            }
            prefix += b.count_ones() as usize;
        }
        total % 2 == 1
    }

    /// Total order by weight, then lexicographically (coordinate 0 first).
    pub fn graded_lex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| self.lex_cmp(other))
    }

    /// Lexicographic order with coordinate 0 most significant.
    pub fn lex_cmp(&self, other: &Word) -> std::cmp::Ordering {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.limbs.iter().zip(&other.limbs) {
            if a != b {
                // lowest differing coordinate decides; a set bit sorts first
                let diff = a ^ b;
                let pos = diff.trailing_zeros();
                return if (a >> pos) & 1 == 1 {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                };
            }
        }
        std::cmp::Ordering::Equal
    }

    pub fn bit_string(&self) -> String {
        (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bit_string())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({})", self.bit_string())
    }
}

fn expand_pattern(pattern: &str) -> Result<String, Error> {
    let mut out = String::new();
    let chars: Vec<char> = pattern.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        match chars[i] {
            c if c.is_whitespace() => i += 1,
            '(' | ')' => i += 1,
            '0' | '1' => {
                let bit = chars[i];
                i += 1;
                if i < chars.len() && chars[i] == '^' {
                    let (n, ni) = read_number(&chars, i + 1)?;
                    out.extend(std::iter::repeat(bit).take(n));
                    i = ni;
                } else {
                    out.push(bit);
                }
            }
            '{' => {
                let close = chars[i..]
                    .iter()
                    .position(|&c| c == '}')
                    .ok_or_else(|| Error::Parse("unclosed '{' in pattern".into()))?
                    + i;
                let group: String = chars[i + 1..close].iter().collect();
                let inner = expand_pattern(&group)?;
                let mut j = close + 1;
                let mut reps = 1;
                if j < chars.len() && chars[j] == '^' {
                    let (n, nj) = read_number(&chars, j + 1)?;
                    reps = n;
                    j = nj;
                }
                for _ in 0..reps {
                    out.push_str(&inner);
                }
                i = j;
            }
            c => return Err(Error::Parse(format!("invalid pattern character {c:?}"))),
        }
    }
    Ok(out)
}

fn read_number(chars: &[char], mut i: usize) -> Result<(usize, usize), Error> {
    let start = i;
    while i < chars.len() && chars[i].is_ascii_digit() {
        i += 1;
    }
    if i == start {
        return Err(Error::Parse("expected digits after '^'".into()));
    }
    let n: usize = chars[start..i]
        .iter()
        .collect::<String>()
        .parse()
        .map_err(|_| Error::Parse("bad repeat count".into()))?;
    Ok((n, i))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pattern_expansion() {
        assert_eq!(Word::from_pattern("(1^4 0^4)").unwrap().bit_string(), "11110000");
        assert_eq!(Word::from_pattern("{01}^4").unwrap().bit_string(), "01010101");
        assert_eq!(
            Word::from_pattern("({0^2 1^2}^2)").unwrap().bit_string(),
            "00110011"
        );
    }

    #[test]
    fn weight_and_complement() {
        let w = Word::from_pattern("1^3 0^5").unwrap();
        assert_eq!(w.weight(), 3);
        assert_eq!(w.complement().weight(), 5);
        assert_eq!(w.support(), vec![0, 1, 2]);
    }

    #[test]
    fn inversions_match_naive_count() {
        // all pairs of words of length 9 against a direct double loop
        let n = 9;
        for a in 0u32..(1 << n) {
            for b in 0u32..(1 << n) {
                let wa = word_from_u32(a, n);
                let wb = word_from_u32(b, n);
                let mut count = 0;
                for i in 0..n {
                    for j in 0..n {
                        if i > j && wa.get(i) && wb.get(j) {
                            count += 1;
                        }
                    }
                }
                assert_eq!(wa.inversions_parity(&wb), count % 2 == 1);
            }
        }
    }

    pub(crate) fn word_from_u32(bits: u32, len: usize) -> Word {
        let mut w = Word::zeros(len);
        for i in 0..len {
            if (bits >> i) & 1 == 1 {
                w.set(i, true);
            }
        }
        w
    }

    #[test]
    fn graded_lex_order() {
        let a = Word::parse("0011").unwrap();
        let b = Word::parse("1000").unwrap();
        assert_eq!(b.graded_lex_cmp(&a), std::cmp::Ordering::Less);
        let c = Word::parse("1100").unwrap();
        assert_eq!(c.graded_lex_cmp(&a), std::cmp::Ordering::Less);
    }
}
