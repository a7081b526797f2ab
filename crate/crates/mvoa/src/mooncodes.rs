//! All named binary codes in the construction: the length-16 dual pair
//! of the E8 frame, the orbifold chain refining it, the length-48
//! moonshine pair, the Leech pair obtained by one more orthogonality
//! condition, the length-`16+32n` series generalizing the moonshine code,
//! and the automorphism group of the first-order Reed-Muller code.

use num_bigint::BigUint;

use crate::error::Error;
use crate::gf2::{Code, Word};
use crate::perm::{close_group, order_by_stabilizer_chain, Perm};

/// The dual pair of length-48 codes assembling the moonshine module: the
/// small code (dimension 7) grading the module sum, and its dual
/// (dimension 41) underlying the code vertex algebra.
#[derive(Clone, Debug)]
pub struct MoonshinePair {
    pub small: Code,
    pub large: Code,
}

/// The length-16 pair: the first-order Reed-Muller code (dimension 5)
/// and its dual (dimension 11).
pub fn e8_codes() -> (Code, Code) {
    let gens = ["1^16", "0^8 1^8", "{0^4 1^4}^2", "{0^2 1^2}^4", "{01}^8"]
        .iter()
        .map(|p| Word::from_pattern(p).expect("fixed pattern"))
        .collect();
    let s = Code::from_generators(16, gens);
    let d = s.dual();
    (s, d)
}

/// The five-step chain of small codes `S^1 ⊂ ... ⊂ S^5`, paired with the
/// duals `D(i) = (S^i)^⊥`; the last pair equals the length-16 pair above.
pub fn orbifold_chain() -> Vec<(Code, Code)> {
    let added = [
        "1^16",
        "1^8 0^8",
        "1^4 0^4 1^4 0^4",
        "{1100}^4",
        "{10}^8",
    ];
    let mut gens: Vec<Word> = Vec::new();
    let mut out = Vec::with_capacity(5);
    for pattern in added {
        gens.push(Word::from_pattern(pattern).expect("fixed pattern"));
        let s = Code::from_generators(16, gens.clone());
        let d = s.dual();
        out.push((s, d));
    }
    out
}

/// The moonshine code pair. The small code is generated by the three
/// 16-block words together with the diagonal embedding of the length-16
/// small code; its dual is the 41-dimensional large code.
pub fn moonshine_codes() -> MoonshinePair {
    let (s_e8, _) = e8_codes();
    let mut gens = vec![
        Word::from_pattern("1^16 0^16 0^16").unwrap(),
        Word::from_pattern("0^16 1^16 0^16").unwrap(),
        Word::from_pattern("0^16 0^16 1^16").unwrap(),
    ];
    for b in s_e8.basis() {
        gens.push(b.concat(b).concat(b));
    }
    let small = Code::from_generators(48, gens);
    let large = small.dual();
    MoonshinePair { small, large }
}

/// The four triple shapes a word of the moonshine small code factors
/// into: blocks equal to a common word or its complement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TripleShape {
    /// `(a, a, a)` — untwisted.
    Diagonal,
    /// `(a, a, a^c)` — twists on blocks 1 and 2.
    ComplementThird,
    /// `(a, a^c, a)` — twists on blocks 1 and 3.
    ComplementSecond,
    /// `(a^c, a, a)` — twists on blocks 2 and 3.
    ComplementFirst,
}

/// One row of the module assembly: the grading word, its shape, and per
/// block the length-16 label with its twist flag.
#[derive(Clone, Debug)]
pub struct AssemblyRow {
    pub chi: Word,
    pub shape: TripleShape,
    /// `(label word in the length-16 small code, coset-twisted)`
    pub parts: [(Word, bool); 3],
}

/// Classify every word of the moonshine small code into its triple
/// shape, with the tensor recipe of twisted and untwisted blocks.
pub fn assembly_table() -> Result<Vec<AssemblyRow>, Error> {
    let pair = moonshine_codes();
    let (s_e8, _) = e8_codes();
    let blocks: [Vec<usize>; 3] = [
        (0..16).collect(),
        (16..32).collect(),
        (32..48).collect(),
    ];
    let mut rows = Vec::with_capacity(128);
    for chi in pair.small.words() {
        let a = chi.restrict(&blocks[0]);
        let b = chi.restrict(&blocks[1]);
        let c = chi.restrict(&blocks[2]);
        let ones = Word::ones(16);
        let b_eq = b == a;
        let b_comp = b == a.xor(&ones);
        let c_eq = c == a;
        let c_comp = c == a.xor(&ones);
        let row = if b_eq && c_eq {
            AssemblyRow {
                chi: chi.clone(),
                shape: TripleShape::Diagonal,
                parts: [(a.clone(), false), (a.clone(), false), (a.clone(), false)],
            }
        } else if b_eq && c_comp {
            AssemblyRow {
                chi: chi.clone(),
                shape: TripleShape::ComplementThird,
                parts: [(a.clone(), true), (a.clone(), true), (a.complement(), false)],
            }
        } else if b_comp && c_eq {
            AssemblyRow {
                chi: chi.clone(),
                shape: TripleShape::ComplementSecond,
                parts: [(a.clone(), true), (a.complement(), false), (a.clone(), true)],
            }
        } else if b_comp && c_comp {
            // (a, a^c, a^c) = (alpha^c, alpha, alpha) for alpha = a^c
            let alpha = a.complement();
            AssemblyRow {
                chi: chi.clone(),
                shape: TripleShape::ComplementFirst,
                parts: [
                    (alpha.complement(), false),
                    (alpha.clone(), true),
                    (alpha.clone(), true),
                ],
            }
        } else {
            return Err(Error::Inconsistent(format!(
                "word {chi} of the moonshine small code matches no triple shape"
            )));
        };
        if !s_e8.contains(&a) {
            return Err(Error::Inconsistent("block label outside the length-16 code".into()));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// The Leech pair: intersect the moonshine small code with the
/// orthogonal complement of the first adjacent pair, and dualize.
pub fn lambda_codes() -> (Code, Code) {
    let pair = moonshine_codes();
    let pair_word = Word::from_support(48, &[0, 1]);
    let constraint = Code::from_generators(48, vec![pair_word]).dual();
    let s_lambda = pair.small.intersect(&constraint);
    let d_lambda = s_lambda.dual();
    (s_lambda, d_lambda)
}

/// The length-`16 + 32n` series: one block word per non-leading 16-block
/// plus the diagonal embedding of the length-16 small code across all
/// `2n+1` blocks. `n = 1` reproduces the moonshine pair.
pub fn series_codes(n: usize) -> Result<(Code, Code), Error> {
    if n == 0 {
        return Err(Error::Domain("series index must be at least 1".into()));
    }
    let blocks = 2 * n + 1;
    let len = 16 * blocks;
    let (s_e8, _) = e8_codes();
    let mut gens = Vec::new();
    for i in 1..=2 * n {
        let mut w = Word::zeros(len);
        for j in 0..16 {
            w.set(16 * i + j, true);
        }
        gens.push(w);
    }
    for b in s_e8.basis() {
        let mut w = b.clone();
        for _ in 1..blocks {
            w = w.concat(b);
        }
        gens.push(w);
    }
    let s = Code::from_generators(len, gens);
    let d = s.dual();
    Ok((s, d))
}

/// Whether the pair can have no module other than the algebra itself:
/// the small code must be exactly the dual of the large one.
pub fn holomorphy_check(large: &Code, small: &Code) -> bool {
    large.len() == small.len() && large.dual().same_code(small)
}

/// The automorphism group of the first-order length-16 Reed-Muller code,
/// generated by translations `v -> v + v_i` and transvections
/// `v -> v + <v, v_j> v_i` on the 16 coordinate points identified with
/// `F_2^4` (point `k` has the binary digits of `k`).
pub struct Rm41Aut {
    pub generators: Vec<Perm>,
    pub order: BigUint,
}

pub fn rm41_aut() -> Rm41Aut {
    let mut generators = Vec::new();
    // translations by the four basis vectors
    for i in 0..4 {
        let bit = 1usize << (3 - i);
        let images = (0..16).map(|k| (k ^ bit) as u8).collect();
        generators.push(Perm::from_images(images));
    }
    // transvections v -> v + <v, v_j> v_i for i != j
    for i in 0..4 {
        for j in 0..4 {
            if i == j {
                continue;
            }
            let bi = 1usize << (3 - i);
            let bj = 1usize << (3 - j);
            let images = (0..16)
                .map(|k| if k & bj != 0 { (k ^ bi) as u8 } else { k as u8 })
                .collect();
            generators.push(Perm::from_images(images));
        }
    }
    let order = order_by_stabilizer_chain(&generators);
    Rm41Aut { generators, order }
}

impl Rm41Aut {
    /// Materialize the whole group.
    pub fn elements(&self) -> Vec<Perm> {
        close_group(&self.generators, 400_000)
    }

    /// Check that a permutation preserves a length-16 code setwise.
    pub fn preserves(&self, perm: &Perm, code: &Code) -> bool {
        let images: Vec<usize> = (0..16).map(|i| perm.apply(i)).collect();
        code.permute(&images).same_code(code)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{standard_code, MinWeight, StandardCode, WeightEnumerator};
    use num_bigint::BigUint;
    use num_traits::{ToPrimitive, Zero};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    #[test]
    fn e8_pair_shapes() {
        let (s, d) = e8_codes();
        assert_eq!((s.len(), s.dim()), (16, 5));
        assert_eq!((d.len(), d.dim()), (16, 11));
        assert!(s.is_subcode_of(&d));
        let we = WeightEnumerator::of_code(&s);
        assert_eq!(we.to_polynomial_string(), "X^16 + 30X^8 + 1");
        assert_eq!(d.min_weight(), Some(MinWeight::Exact(4)));
        // the small code is the first-order Reed-Muller code
        let rm = standard_code(&StandardCode::ReedMuller { r: 1, m: 4 }).unwrap();
        assert!(s.same_code(&rm));
    }

    #[test]
    fn chain_is_nested_with_correct_duals() {
        let chain = orbifold_chain();
        assert_eq!(chain.len(), 5);
        for (i, (s, d)) in chain.iter().enumerate() {
            assert_eq!(s.dim(), i + 1);
            assert_eq!(d.dim(), 16 - (i + 1));
            assert!(s.dual().same_code(d));
        }
        for window in chain.windows(2) {
            assert!(window[0].0.is_subcode_of(&window[1].0));
            assert!(window[1].1.is_subcode_of(&window[0].1));
        }
        // the second stage is the four-word code
        let (s2, _) = &chain[1];
        let mut words: Vec<String> = s2.words().map(|w| w.bit_string()).collect();
        words.sort();
        assert_eq!(
            words,
            vec![
                "0000000000000000",
                "0000000011111111",
                "1111111100000000",
                "1111111111111111",
            ]
        );
        // the final stage is the length-16 pair
        let (s5, d5) = &chain[4];
        let (s_e8, d_e8) = e8_codes();
        assert!(s5.same_code(&s_e8));
        assert!(d5.same_code(&d_e8));
    }

    #[test]
    fn moonshine_pair_shapes() {
        let pair = moonshine_codes();
        assert_eq!(pair.small.dim(), 7);
        assert_eq!(pair.large.dim(), 41);
        let we = WeightEnumerator::of_code(&pair.small);
        assert_eq!(
            we.to_polynomial_string(),
            "X^48 + 3X^32 + 120X^24 + 3X^16 + 1"
        );
        assert_eq!(pair.large.min_weight(), Some(MinWeight::Exact(4)));
        // the large code contains the triple sum of the length-16 dual
        let (_, d_e8) = e8_codes();
        let z16 = Word::zeros(16);
        for b in d_e8.basis() {
            assert!(pair.large.contains(&b.concat(&z16).concat(&z16)));
            assert!(pair.large.contains(&z16.concat(b).concat(&z16)));
            assert!(pair.large.contains(&z16.concat(&z16).concat(b)));
        }
        assert!(holomorphy_check(&pair.large, &pair.small));
    }

    #[test]
    fn e8_radical_by_brute_force() {
        // the radical of the large code is the small one: checked by
        // enumerating all 2^11 codewords and keeping the ones orthogonal
        // to everything
        let (s_e8, d_e8) = e8_codes();
        let all: Vec<Word> = d_e8.words().collect();
        let mut gens = Vec::new();
        for w in &all {
            if all.iter().all(|v| !w.dot(v)) {
                gens.push(w.clone());
            }
        }
        assert_eq!(gens.len(), 32);
        let brute = Code::from_generators(16, gens);
        assert!(brute.same_code(&s_e8));
        assert!(d_e8.radical().same_code(&s_e8));
    }

    #[test]
    fn moonshine_large_code_weight_four_count() {
        // transform route vs bounded-weight enumeration
        let pair = moonshine_codes();
        let we = WeightEnumerator::of_code(&pair.small)
            .macwilliams(pair.small.dim())
            .unwrap();
        assert!(we.count(2).is_zero());
        let direct = pair
            .large
            .low_weight_words(4)
            .into_iter()
            .filter(|w| w.weight() == 4)
            .count();
        assert_eq!(we.count(4), &BigUint::from(direct));
        assert_eq!(direct, 3300);
    }

    #[test]
    fn moonshine_setbuilder_description_agrees() {
        // the generator form equals the set of all (a, b, c) with b and c
        // equal to a or its complement
        let pair = moonshine_codes();
        let (s_e8, _) = e8_codes();
        let mut words: Vec<Word> = Vec::new();
        for a in s_e8.words() {
            let ac = a.complement();
            words.push(a.concat(&a).concat(&a));
            words.push(a.concat(&a).concat(&ac));
            words.push(a.concat(&ac).concat(&a));
            words.push(ac.concat(&a).concat(&a));
        }
        words.sort_by(|x, y| x.lex_cmp(y));
        words.dedup();
        assert_eq!(words.len(), 128);
        let mut ours: Vec<Word> = pair.small.words().collect();
        ours.sort_by(|x, y| x.lex_cmp(y));
        assert_eq!(words, ours);
    }

    #[test]
    fn moonshine_membership_characterization_sampled() {
        // (a, b, c) lies in the large code iff all three blocks are even
        // and the block sum lies in the length-16 dual
        let pair = moonshine_codes();
        let (_, d_e8) = e8_codes();
        let mut rng = StdRng::seed_from_u64(2024);
        let mut hits = 0u32;
        for _ in 0..10_000 {
            let mut parts = Vec::with_capacity(3);
            for _ in 0..3 {
                let mut w = Word::zeros(16);
                for i in 0..16 {
                    if rng.gen_bool(0.5) {
                        w.set(i, true);
                    }
                }
                if w.weight() % 2 == 1 {
                    w.set(0, !w.get(0));
                }
                parts.push(w);
            }
            let triple = parts[0].concat(&parts[1]).concat(&parts[2]);
            let blocksum = parts[0].xor(&parts[1]).xor(&parts[2]);
            let expected = d_e8.contains(&blocksum);
            assert_eq!(pair.large.contains(&triple), expected);
            if expected {
                hits += 1;
            }
        }
        assert!(hits > 0, "sampling never hit the large code");
    }

    #[test]
    fn assembly_table_has_128_classified_rows() {
        let rows = assembly_table().unwrap();
        assert_eq!(rows.len(), 128);
        let diag = rows
            .iter()
            .filter(|r| r.shape == TripleShape::Diagonal)
            .count();
        assert_eq!(diag, 32);
        for r in &rows {
            let twisted = r.parts.iter().filter(|(_, t)| *t).count();
            match r.shape {
                TripleShape::Diagonal => assert_eq!(twisted, 0),
                _ => assert_eq!(twisted, 2),
            }
        }
    }

    #[test]
    fn lambda_pair_facts() {
        let (s_l, d_l) = lambda_codes();
        assert_eq!(s_l.dim(), 6);
        assert_eq!(d_l.dim(), 42);
        // every word is doubled
        for w in s_l.words() {
            assert!(w.is_doubled());
        }
        // the weight-2 words of the dual are exactly the adjacent pairs
        let weight2: Vec<Word> = d_l
            .low_weight_words(2)
            .into_iter()
            .filter(|w| w.weight() == 2)
            .collect();
        assert_eq!(weight2.len(), 24);
        for w in &weight2 {
            let sup = w.support();
            assert_eq!(sup[0] + 1, sup[1]);
            assert_eq!(sup[0] % 2, 0);
        }
    }

    #[test]
    fn series_codes_shapes() {
        let (s1, d1) = series_codes(1).unwrap();
        let pair = moonshine_codes();
        assert!(s1.same_code(&pair.small));
        assert!(d1.same_code(&pair.large));
        let (s2, d2) = series_codes(2).unwrap();
        assert_eq!(s2.len(), 80);
        assert_eq!(s2.dim(), 9);
        assert!(s2.is_even());
        assert!(s2.dual().same_code(&d2));
        assert!(series_codes(0).is_err());
    }

    #[test]
    fn holomorphy_examples() {
        let (s_e8, d_e8) = e8_codes();
        assert!(holomorphy_check(&d_e8, &s_e8));
        // the triple of the length-16 dual is too small against the
        // moonshine small code
        let pair = moonshine_codes();
        let (_, d_e8) = e8_codes();
        let mut gens = Vec::new();
        let z16 = Word::zeros(16);
        for b in d_e8.basis() {
            gens.push(b.concat(&z16).concat(&z16));
            gens.push(z16.concat(b).concat(&z16));
            gens.push(z16.concat(&z16).concat(b));
        }
        let d3 = Code::from_generators(48, gens);
        assert_eq!(d3.dim(), 33);
        assert!(!holomorphy_check(&d3, &pair.small));
    }

    #[test]
    fn rm41_aut_order_and_preservation() {
        let aut = rm41_aut();
        assert_eq!(aut.order.to_u64().unwrap(), 322_560);
        let (s_e8, _) = e8_codes();
        for g in &aut.generators {
            assert!(aut.preserves(g, &s_e8));
        }
        // identity belongs to the closure, and the closure size matches
        let elements = aut.elements();
        assert_eq!(BigUint::from(elements.len()), aut.order);
        assert!(elements.iter().any(|p| p.is_identity()));
    }
}
