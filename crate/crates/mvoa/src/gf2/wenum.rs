//! Exact weight enumerators: direct enumeration for small codes, the
//! MacWilliams transform through the dual otherwise, and coset weight
//! enumerators via a signed dual sum.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::gf2::code::Code;
use crate::gf2::word::Word;

/// Codes up to this dimension are enumerated directly.
pub const DIRECT_ENUM_DIM: usize = 26;

/// Exact counts `A_0..A_n` of words by Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    len: usize,
    counts: Vec<BigUint>,
}

impl WeightEnumerator {
    pub fn new(len: usize, counts: Vec<BigUint>) -> Self {
        assert_eq!(counts.len(), len + 1);
        WeightEnumerator { len, counts }
    }

    /// Weight enumerator of a code: direct enumeration when the dimension
    /// is small, MacWilliams transform of the dual otherwise.
    pub fn of_code(code: &Code) -> WeightEnumerator {
        if code.dim() <= DIRECT_ENUM_DIM {
            return Self::by_enumeration(code);
        }
        let dual = code.dual();
        assert!(
            dual.dim() <= DIRECT_ENUM_DIM,
            "both the code and its dual are too large to enumerate"
        );
        Self::by_enumeration(&dual)
            .macwilliams(dual.dim())
            .expect("MacWilliams transform of a genuine code cannot fail")
    }

    /// Direct count over all codewords.
    pub fn by_enumeration(code: &Code) -> WeightEnumerator {
        let mut counts = vec![0u64; code.len() + 1];
        for w in code.words() {
            counts[w.weight()] += 1;
        }
        WeightEnumerator {
            len: code.len(),
            counts: counts.into_iter().map(BigUint::from).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.counts.iter().all(|c| c.is_zero())
    }

    pub fn count(&self, weight: usize) -> &BigUint {
        &self.counts[weight]
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    /// The MacWilliams transform `W_dual(x,y) = 2^{-dim} W(x+y, x-y)`,
    /// mapping the enumerator of a `dim`-dimensional code to its dual's.
    ///
    /// Fails with an inconsistency error if any resulting coefficient is
    /// negative or non-integral (the input was not a code enumerator).
    pub fn macwilliams(&self, dim: usize) -> Result<WeightEnumerator, Error> {
        let n = self.len;
        let binom = binomial_table(n);
        let mut out = Vec::with_capacity(n + 1);
        let scale = BigInt::one() << dim;
        for j in 0..=n {
            let mut acc = BigInt::zero();
            for (w, count) in self.counts.iter().enumerate() {
                if count.is_zero() {
                    continue;
                }
                let count = BigInt::from_biguint(Sign::Plus, count.clone());
                acc += count * krawtchouk(j, w, n, &binom);
            }
            if (&acc % &scale) != BigInt::zero() || acc.is_negative() {
                return Err(Error::Inconsistent(format!(
                    "MacWilliams transform produced an invalid coefficient at weight {j}"
                )));
            }
            out.push((acc / &scale).to_biguint().unwrap());
        }
        Ok(WeightEnumerator { len: n, counts: out })
    }

    /// Weight counts of the coset `v + C`. Enumerates directly when the
    /// code is small and otherwise uses the signed dual sum
    /// `W_{v+C}(x,y) = |C^⊥|^{-1} Σ_{u∈C^⊥} (-1)^{<u,v>} (x+y)^{n-wt u} (x-y)^{wt u}`.
    pub fn of_coset(code: &Code, v: &Word) -> Result<WeightEnumerator, Error> {
        assert_eq!(v.len(), code.len(), "word length mismatch");
        let k = code.dim();
        let dual_dim = code.len() - k;
        let direct = k <= 16 || (k <= DIRECT_ENUM_DIM && k <= dual_dim);
        if direct {
            let mut counts = vec![0u64; code.len() + 1];
            for w in code.words() {
                counts[w.xor(v).weight()] += 1;
            }
            return Ok(WeightEnumerator {
                len: code.len(),
                counts: counts.into_iter().map(BigUint::from).collect(),
            });
        }
        let dual = code.dual();
        assert!(
            dual.dim() <= DIRECT_ENUM_DIM,
            "both the code and its dual are too large to enumerate"
        );
        let n = code.len();
        // signed weight distribution of the dual relative to v
        let mut signed = vec![BigInt::zero(); n + 1];
        for u in dual.words() {
            if u.dot(v) {
                signed[u.weight()] -= 1;
            } else {
                signed[u.weight()] += 1;
            }
        }
        let binom = binomial_table(n);
        let scale = BigInt::one() << dual.dim();
        let mut out = Vec::with_capacity(n + 1);
        for j in 0..=n {
            let mut acc = BigInt::zero();
            for (w, t) in signed.iter().enumerate() {
                if t.is_zero() {
                    continue;
                }
                acc += t * krawtchouk(j, w, n, &binom);
            }
            if (&acc % &scale) != BigInt::zero() || acc.is_negative() {
                return Err(Error::Inconsistent(format!(
                    "coset enumerator produced an invalid coefficient at weight {j}"
                )));
            }
            out.push((acc / &scale).to_biguint().unwrap());
        }
        Ok(WeightEnumerator { len: n, counts: out })
    }

    /// Counts as decimal strings indexed by weight, for JSON reports.
    pub fn to_decimal_strings(&self) -> Vec<String> {
        self.counts.iter().map(|c| c.to_string()).collect()
    }

    /// Sparse polynomial rendering like `X^48 + 3X^32 + 120X^24 + ...`,
    /// highest weight first.
    pub fn to_polynomial_string(&self) -> String {
        let mut parts = Vec::new();
        for (w, c) in self.counts.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() { String::new() } else { c.to_string() };
            let term = match w {
                0 => {
                    if coeff.is_empty() {
                        "1".to_string()
                    } else {
                        coeff.clone()
                    }
                }
                1 => format!("{coeff}X"),
                _ => format!("{coeff}X^{w}"),
            };
            parts.push(term);
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

/// The Krawtchouk value `K_j(w; n) = Σ_i (-1)^i C(w,i) C(n-w, j-i)`.
fn krawtchouk(j: usize, w: usize, n: usize, binom: &[Vec<BigInt>]) -> BigInt {
    let mut acc = BigInt::zero();
    for i in 0..=j.min(w) {
        if j - i > n - w {
            continue;
        }
        let term = &binom[w][i] * &binom[n - w][j - i];
        if i % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}

fn binomial_table(n: usize) -> Vec<Vec<BigInt>> {
    let mut table = vec![vec![BigInt::zero(); n + 1]; n + 1];
    for row in 0..=n {
        table[row][0] = BigInt::one();
        for col in 1..=row {
            let up = table[row - 1][col].clone();
            let up_left = table[row - 1][col - 1].clone();
            table[row][col] = up + up_left;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{standard_code, StandardCode};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn hamming_weight_distribution() {
        let c = standard_code(&StandardCode::Hamming8).unwrap();
        let we = WeightEnumerator::of_code(&c);
        assert_eq!(we.count(0), &BigUint::from(1u32));
        assert_eq!(we.count(4), &BigUint::from(14u32));
        assert_eq!(we.count(8), &BigUint::from(1u32));
        assert_eq!(we.total(), BigUint::from(16u32));
    }

    #[test]
    fn rm14_weight_distribution() {
        let c = standard_code(&StandardCode::ReedMuller { r: 1, m: 4 }).unwrap();
        let we = WeightEnumerator::of_code(&c);
        assert_eq!(we.count(0), &BigUint::from(1u32));
        assert_eq!(we.count(8), &BigUint::from(30u32));
        assert_eq!(we.count(16), &BigUint::from(1u32));
        assert_eq!(we.to_polynomial_string(), "X^16 + 30X^8 + 1");
    }

    #[test]
    fn repetition_code_self_dual_under_transform() {
        // W = x^2 + y^2, dim 1: transform returns itself
        let we = WeightEnumerator::new(
            2,
            vec![BigUint::one(), BigUint::zero(), BigUint::one()],
        );
        let t = we.macwilliams(1).unwrap();
        assert_eq!(t, we);
    }

    #[test]
    fn double_transform_is_identity() {
        let c = standard_code(&StandardCode::ReedMuller { r: 1, m: 4 }).unwrap();
        let we = WeightEnumerator::of_code(&c);
        let twice = we.macwilliams(c.dim()).unwrap().macwilliams(c.len() - c.dim()).unwrap();
        assert_eq!(twice, we);
    }

    #[test]
    fn transform_matches_direct_dual_enumeration() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(2..=12);
            let k = rng.gen_range(1..=n);
            let gens: Vec<Word> = (0..k)
                .map(|_| {
                    let mut w = Word::zeros(n);
                    for i in 0..n {
                        if rng.gen_bool(0.5) {
                            w.set(i, true);
                        }
                    }
                    w
                })
                .collect();
            let c = Code::from_generators(n, gens);
            let direct = WeightEnumerator::by_enumeration(&c.dual());
            let transformed = WeightEnumerator::by_enumeration(&c).macwilliams(c.dim()).unwrap();
            assert_eq!(direct, transformed);
        }
    }

    #[test]
    fn coset_enumerator_small_cases() {
        let c = Code::from_generators(2, vec![Word::parse("11").unwrap()]);
        let we = WeightEnumerator::of_coset(&c, &Word::parse("10").unwrap()).unwrap();
        assert_eq!(we.count(1), &BigUint::from(2u32));
        // v inside the code reproduces the plain enumerator
        let inside = WeightEnumerator::of_coset(&c, &Word::parse("11").unwrap()).unwrap();
        assert_eq!(inside, WeightEnumerator::of_code(&c));
    }

    #[test]
    fn coset_dual_sum_matches_brute_force() {
        let mut rng = StdRng::seed_from_u64(99);
        for _ in 0..200 {
            let n = rng.gen_range(2..=10);
            let k = rng.gen_range(1..=n);
            let gens: Vec<Word> = (0..k)
                .map(|_| {
                    let mut w = Word::zeros(n);
                    for i in 0..n {
                        if rng.gen_bool(0.5) {
                            w.set(i, true);
                        }
                    }
                    w
                })
                .collect();
            let c = Code::from_generators(n, gens);
            let mut v = Word::zeros(n);
            for i in 0..n {
                if rng.gen_bool(0.5) {
                    v.set(i, true);
                }
            }
            // brute force
            let mut counts = vec![BigUint::zero(); n + 1];
            for w in c.words() {
                counts[w.xor(&v).weight()] += BigUint::one();
            }
            let brute = WeightEnumerator::new(n, counts);
            // dual-sum path, forced by bypassing the small-dim shortcut
            let dual = c.dual();
            let mut signed = vec![BigInt::zero(); n + 1];
            for u in dual.words() {
                if u.dot(&v) {
                    signed[u.weight()] -= 1;
                } else {
                    signed[u.weight()] += 1;
                }
            }
            let binom = binomial_table(n);
            let scale = BigInt::one() << dual.dim();
            let mut out = Vec::new();
            for j in 0..=n {
                let mut acc = BigInt::zero();
                for (w, t) in signed.iter().enumerate() {
                    acc += t * krawtchouk(j, w, n, &binom);
                }
                assert_eq!(&acc % &scale, BigInt::zero());
                out.push((acc / &scale).to_biguint().unwrap());
            }
            assert_eq!(brute, WeightEnumerator::new(n, out));
        }
    }
}
