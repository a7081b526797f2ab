//! Exact linear algebra over GF(2): words, codes, duals, support
//! subcodes, radicals, and weight enumerators.

pub mod code;
pub mod wenum;
pub mod word;

pub use code::{Code, CodeClass, MinWeight};
pub use wenum::{WeightEnumerator, DIRECT_ENUM_DIM};
pub use word::Word;

use crate::error::Error;

/// The named code families every construction starts from.
#[derive(Clone, Debug)]
pub enum StandardCode {
    /// The self-dual doubly even `[8,4,4]` Hamming code, with the fixed
    /// generator basis `(1^8), (1^4 0^4), (1^2 0^2 1^2 0^2), ({10}^4)`.
    Hamming8,
    /// The Reed-Muller code `RM(r, m)` of length `2^m`: evaluations of
    /// polynomials of degree at most `r` in `m` variables over the points
    /// of `F_2^m`. Coordinate `k` carries the point with binary digits of
    /// `k`, most significant variable first, so the degree-one generators
    /// of `RM(1, 4)` come out as `(0^8 1^8), ({0^4 1^4}^2), ...`.
    ReedMuller { r: usize, m: usize },
    /// All even-weight words of length `n`.
    EvenAll(usize),
    /// An explicit generator list.
    FromGenerators { len: usize, generators: Vec<Word> },
}

/// Build one of the named codes.
pub fn standard_code(kind: &StandardCode) -> Result<Code, Error> {
    match kind {
        StandardCode::Hamming8 => {
            let gens = ["11111111", "11110000", "11001100", "10101010"]
                .iter()
                .map(|s| Word::parse(s))
                .collect::<Result<Vec<_>, _>>()?;
            Ok(Code::from_generators(8, gens))
        }
        StandardCode::ReedMuller { r, m } => {
            if *r > *m {
                return Err(Error::Domain(format!(
                    "RM({r},{m}) needs 0 <= r <= m"
                )));
            }
            if *m > 20 {
                return Err(Error::Domain("RM length over 2^20 unsupported".into()));
            }
            Ok(reed_muller(*r, *m))
        }
        StandardCode::EvenAll(n) => {
            if *n == 0 {
                return Err(Error::Domain("even code needs positive length".into()));
            }
            Ok(Code::even_all(*n))
        }
        StandardCode::FromGenerators { len, generators } => {
            if generators.iter().any(|g| g.len() != *len) {
                return Err(Error::Domain("generator length mismatch".into()));
            }
            Ok(Code::from_generators(*len, generators.clone()))
        }
    }
}

fn reed_muller(r: usize, m: usize) -> Code {
    let n = 1usize << m;
    let mut gens = Vec::new();
    // monomials grouped by degree; x_0 is the most significant variable
    for degree in 0..=r {
        for vars in subsets_of_size(m, degree) {
            let mut w = Word::zeros(n);
            for k in 0..n {
                // point coordinates: variable j reads bit (m-1-j) of k
                let value = vars.iter().all(|&j| (k >> (m - 1 - j)) & 1 == 1);
                if value {
                    w.set(k, true);
                }
            }
            gens.push(w);
        }
    }
    Code::from_generators(n, gens)
}

fn subsets_of_size(m: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(m: usize, size: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..m {
            current.push(i);
            rec(m, size, i + 1, current, out);
            current.pop();
        }
    }
    rec(m, size, 0, &mut current, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rm_dimensions() {
        // dim RM(r, m) = sum of C(m, i) for i <= r
        let c = standard_code(&StandardCode::ReedMuller { r: 1, m: 4 }).unwrap();
        assert_eq!((c.len(), c.dim()), (16, 5));
        let c = standard_code(&StandardCode::ReedMuller { r: 2, m: 4 }).unwrap();
        assert_eq!((c.len(), c.dim()), (16, 11));
        let c = standard_code(&StandardCode::ReedMuller { r: 1, m: 3 }).unwrap();
        assert_eq!((c.len(), c.dim()), (8, 4));
    }

    #[test]
    fn rm13_is_hamming8() {
        let rm = standard_code(&StandardCode::ReedMuller { r: 1, m: 3 }).unwrap();
        let h8 = standard_code(&StandardCode::Hamming8).unwrap();
        assert!(rm.same_code(&h8));
    }

    #[test]
    fn rm14_generators_match_listed_patterns() {
        let rm = standard_code(&StandardCode::ReedMuller { r: 1, m: 4 }).unwrap();
        for pat in ["1^16", "0^8 1^8", "{0^4 1^4}^2", "{0^2 1^2}^4", "{01}^8"] {
            assert!(rm.contains(&Word::from_pattern(pat).unwrap()));
        }
        assert_eq!(rm.dim(), 5);
    }

    #[test]
    fn even_all_two() {
        let c = standard_code(&StandardCode::EvenAll(2)).unwrap();
        let words: Vec<String> = c.words().map(|w| w.bit_string()).collect();
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(sorted, vec!["00", "11"]);
    }

    #[test]
    fn invalid_rm_parameters() {
        assert!(standard_code(&StandardCode::ReedMuller { r: 5, m: 4 }).is_err());
    }
}
