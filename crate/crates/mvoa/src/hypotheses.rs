//! Decision procedure for the two code-level conditions every module
//! assembly rests on: the pair `(D, S)` must consist of even codes of
//! length a multiple of 8 with `S ⊆ D ∩ D^⊥`, and for each pair of
//! distinct words of `S` the code `D` must contain a self-dual subcode
//! splitting into Hamming blocks along the word's support, together with
//! maximal doubly even self-orthogonal subcodes matching across the pair.
//! Every witness the checker returns can be re-verified independently.

use crate::error::Error;
use crate::gf2::{Code, Word};

/// A verified witness for one pair `(alpha, beta)`.
#[derive(Clone, Debug)]
pub struct PairWitness {
    pub alpha: Word,
    pub beta: Word,
    /// Hamming blocks of the self-dual subcode, supports partitioning
    /// the coordinates; the first group tiles `Supp(alpha)`.
    pub blocks: Vec<Code>,
    /// The full self-dual subcode (sum of the blocks).
    pub e: Code,
    pub h_beta: Code,
    pub h_alpha_beta: Code,
}

#[derive(Clone, Debug)]
pub struct PairFailure {
    pub alpha: Word,
    pub beta: Word,
    pub reason: String,
}

#[derive(Clone, Debug)]
pub struct HypothesisReport {
    pub pass: bool,
    /// Failures of the global evenness/length/containment condition.
    pub condition1_failures: Vec<String>,
    pub witnesses: Vec<PairWitness>,
    pub failures: Vec<PairFailure>,
}

/// Search for disjoint `[8,4,4]` Hamming subcodes of `code` whose
/// supports partition `Supp(target)`. Candidate 8-blocks are unions of
/// weight-4 codeword supports; blocks are tried in a deterministic
/// order, backtracking over the partition.
pub fn hamming_decomposition_search(code: &Code, target: &Word) -> Option<Vec<Code>> {
    let weight4 = weight4_words(code);
    hamming_decomposition_with(code.len(), target, &weight4)
}

/// The weight-4 codewords, by bounded-weight enumeration.
pub fn weight4_words(code: &Code) -> Vec<Word> {
    let mut words: Vec<Word> = code
        .low_weight_words(4)
        .into_iter()
        .filter(|w| w.weight() == 4)
        .collect();
    words.sort_by(|a, b| a.lex_cmp(b));
    words
}

fn hamming_decomposition_with(len: usize, target: &Word, weight4: &[Word]) -> Option<Vec<Code>> {
    if target.weight() % 8 != 0 {
        return None;
    }
    if target.weight() == 0 {
        return Some(Vec::new());
    }
    search_blocks(len, target, weight4)
}

fn search_blocks(len: usize, remaining: &Word, weight4: &[Word]) -> Option<Vec<Code>> {
    if remaining.weight() == 0 {
        return Some(Vec::new());
    }
    let pivot = remaining.support()[0];
    // candidate blocks: unions of two disjoint weight-4 supports inside
    // the remaining coordinates, the first containing the pivot
    let mut seen = std::collections::HashSet::new();
    let mut candidates: Vec<Word> = Vec::new();
    let usable: Vec<&Word> = weight4
        .iter()
        .filter(|w| w.supported_on(remaining))
        .collect();
    for w1 in usable.iter().filter(|w| w.get(pivot)) {
        for w2 in &usable {
            if w1.overlap(w2) == 0 {
                let block = w1.xor(w2);
                if seen.insert(block.clone()) {
                    candidates.push(block);
                }
            }
        }
    }
    candidates.sort_by(|a, b| a.lex_cmp(b));
    for block in candidates {
        let in_block: Vec<Word> = weight4
            .iter()
            .filter(|w| w.supported_on(&block))
            .cloned()
            .collect();
        let Some(hamming) = find_hamming_inside(len, &block, &in_block) else {
            continue;
        };
        let rest = remaining.xor(&block);
        if let Some(mut tail) = search_blocks(len, &rest, weight4) {
            let mut out = vec![hamming];
            out.append(&mut tail);
            return Some(out);
        }
    }
    None
}

/// Find an `[8,4,4]` code spanned by the given weight-4 words on an
/// 8-coordinate block: a 4-dimensional span whose nonzero weights are
/// all 4 or 8.
fn find_hamming_inside(len: usize, block: &Word, weight4: &[Word]) -> Option<Code> {
    fn backtrack(weight4: &[Word], start: usize, chosen: &mut Vec<Word>, len: usize) -> Option<Code> {
        if chosen.len() == 4 {
            return Some(Code::from_generators(len, chosen.clone()));
        }
        for i in start..weight4.len() {
            let w = &weight4[i];
            let candidate = Code::from_generators(len, {
                let mut g = chosen.clone();
                g.push(w.clone());
                g
            });
            if candidate.dim() != chosen.len() + 1 {
                continue;
            }
            if !candidate.words().all(|x| matches!(x.weight(), 0 | 4 | 8)) {
                continue;
            }
            chosen.push(w.clone());
            if let Some(found) = backtrack(weight4, i + 1, chosen, len) {
                return Some(found);
            }
            chosen.pop();
        }
        None
    }
    let mut chosen: Vec<Word> = Vec::new();
    let found = backtrack(weight4, 0, &mut chosen, len)?;
    debug_assert_eq!(found.dim(), 4);
    debug_assert!(found.basis().iter().all(|w| w.supported_on(block)));
    Some(found)
}

/// One extension step for a doubly even self-orthogonal subcode: a word
/// of `within \ h` that is doubly even and orthogonal to `h` (callers
/// pass `within ⊆ D_beta ∩ h^⊥`, an even code). Returns `None` exactly
/// when no extension exists, by the classification of quadratic-form
/// zeros on the quotient.
fn extend_once(h: &Code, within: &Code) -> Option<Word> {
    // complete h to a basis of `within`
    let mut extras: Vec<Word> = Vec::new();
    let mut span = h.clone();
    for b in within.basis() {
        if !span.contains(b) {
            let reduced = span.reduce(b);
            extras.push(reduced.clone());
            span = span.sum(&Code::from_generators(h.len(), vec![reduced]));
        }
    }
    // q(w) = (wt(w)/2) mod 2 is constant on cosets of h inside `within`
    let q = |w: &Word| (w.weight() / 2) % 2 == 1;
    for u in &extras {
        if !q(u) {
            return Some(u.clone());
        }
    }
    for i in 0..extras.len() {
        for j in (i + 1)..extras.len() {
            if !extras[i].dot(&extras[j]) {
                return Some(extras[i].xor(&extras[j]));
            }
        }
    }
    if extras.len() >= 3 {
        return Some(extras[0].xor(&extras[1]).xor(&extras[2]));
    }
    None
}

/// Grow `seed` to a maximal doubly even self-orthogonal subcode of
/// `ambient_sub`, preferring extensions inside `preferred` when given.
fn maximal_doubly_even(seed: &Code, ambient_sub: &Code, preferred: Option<&Code>) -> Code {
    let mut h = seed.clone();
    loop {
        let orth = ambient_sub.intersect(&h.dual());
        if let Some(pref) = preferred {
            let guided = orth.intersect(pref);
            if let Some(w) = extend_once(&h, &guided) {
                h = h.sum(&Code::from_generators(h.len(), vec![w]));
                continue;
            }
        }
        match extend_once(&h, &orth) {
            Some(w) => {
                h = h.sum(&Code::from_generators(h.len(), vec![w]));
            }
            None => break,
        }
    }
    h
}

/// Check conditions (1) and (2) on the pair, with explicit witnesses.
pub fn check_conditions(d: &Code, s: &Code) -> Result<HypothesisReport, Error> {
    if d.len() != s.len() {
        return Err(Error::Domain("codes must share a length".into()));
    }
    let mut condition1_failures = Vec::new();
    if d.len() % 8 != 0 {
        condition1_failures.push(format!("length {} is not a multiple of 8", d.len()));
    }
    if !d.is_even() {
        condition1_failures.push("the large code is not even".into());
    }
    if !s.is_even() {
        condition1_failures.push("the small code is not even".into());
    }
    if !s.is_subcode_of(d) {
        condition1_failures.push("the small code is not contained in the large one".into());
    }
    if !s.is_subcode_of(&d.dual()) {
        condition1_failures.push("the small code is not orthogonal to the large one".into());
    }

    let mut s_words: Vec<Word> = s.words().collect();
    s_words.sort_by(|a, b| a.graded_lex_cmp(b));
    let weight4 = weight4_words(d);
    // the self-dual subcode depends only on alpha; search once per word
    let decompositions: Vec<Option<(Vec<Code>, Code)>> = s_words
        .iter()
        .map(|alpha| {
            let blocks_alpha = hamming_decomposition_with(d.len(), alpha, &weight4);
            let blocks_comp = hamming_decomposition_with(d.len(), &alpha.complement(), &weight4);
            match (blocks_alpha, blocks_comp) {
                (Some(a), Some(b)) => {
                    let mut blocks = a;
                    blocks.extend(b);
                    let mut e = Code::trivial(d.len());
                    for k in &blocks {
                        e = e.sum(k);
                    }
                    Some((blocks, e))
                }
                _ => None,
            }
        })
        .collect();
    let pairs: Vec<(usize, usize)> = (0..s_words.len())
        .flat_map(|i| ((i + 1)..s_words.len()).map(move |j| (i, j)))
        .collect();
    use rayon::prelude::*;
    let results: Vec<Result<PairWitness, PairFailure>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let alpha = &s_words[i];
            let beta = &s_words[j];
            pair_witness(d, alpha, beta, &decompositions[i]).map_err(|reason| PairFailure {
                alpha: alpha.clone(),
                beta: beta.clone(),
                reason,
            })
        })
        .collect();
    let mut witnesses = Vec::new();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(w) => witnesses.push(w),
            Err(f) => failures.push(f),
        }
    }
    Ok(HypothesisReport {
        pass: condition1_failures.is_empty() && failures.is_empty(),
        condition1_failures,
        witnesses,
        failures,
    })
}

fn pair_witness(
    d: &Code,
    alpha: &Word,
    beta: &Word,
    decomposition: &Option<(Vec<Code>, Code)>,
) -> Result<PairWitness, String> {
    let Some((blocks, e)) = decomposition.clone() else {
        return Err(format!(
            "no self-dual Hamming-sum subcode splits along {alpha}"
        ));
    };
    let gamma = alpha.xor(beta);
    let d_beta = d.support_subcode(beta);
    let d_gamma = d.support_subcode(&gamma);
    let e_beta = e.support_subcode(beta);
    let e_gamma = e.support_subcode(&gamma);
    if !e_beta.is_subcode_of(&d_beta) || !e_gamma.is_subcode_of(&d_gamma) {
        return Err("support pieces of the self-dual subcode escape the large code".into());
    }
    // fast path: a support subcode that is already doubly even and
    // self-orthogonal is its own maximal extension
    let h_beta = if d_beta.is_doubly_even() {
        d_beta.clone()
    } else {
        maximal_doubly_even(&e_beta, &d_beta, None)
    };
    let target = h_beta.sum(&e);
    let h_gamma = if d_gamma.is_doubly_even() {
        d_gamma.clone()
    } else {
        maximal_doubly_even(&e_gamma, &d_gamma, Some(&target))
    };
    if !h_gamma.sum(&e).same_code(&target) {
        // retry with the roles swapped before giving up
        let h_gamma2 = maximal_doubly_even(&e_gamma, &d_gamma, None);
        let target2 = h_gamma2.sum(&e);
        let h_beta2 = maximal_doubly_even(&e_beta, &d_beta, Some(&target2));
        if h_beta2.sum(&e).same_code(&target2) {
            let witness = PairWitness {
                alpha: alpha.clone(),
                beta: beta.clone(),
                blocks,
                e,
                h_beta: h_beta2,
                h_alpha_beta: h_gamma2,
            };
            verify_witness(d, &witness)?;
            return Ok(witness);
        }
        return Err(format!(
            "maximal doubly even subcodes for {beta} and {gamma} do not match modulo the self-dual subcode"
        ));
    }
    let witness = PairWitness {
        alpha: alpha.clone(),
        beta: beta.clone(),
        blocks,
        e,
        h_beta,
        h_alpha_beta: h_gamma,
    };
    verify_witness(d, &witness)?;
    Ok(witness)
}

/// Re-verify every predicate of a witness from scratch.
pub fn verify_witness(d: &Code, w: &PairWitness) -> Result<(), String> {
    let n = d.len();
    // blocks: [8,4,4], inside D, supports disjoint and tiling everything,
    // each on one side of the alpha split
    let mut covered = Word::zeros(n);
    for block in &w.blocks {
        if block.dim() != 4 {
            return Err("block is not 4-dimensional".into());
        }
        if !block.is_subcode_of(d) {
            return Err("block escapes the large code".into());
        }
        let support = block
            .basis()
            .iter()
            .fold(Word::zeros(n), |acc, b| {
                let mut m = acc;
                for i in b.support() {
                    m.set(i, true);
                }
                m
            });
        if support.weight() != 8 {
            return Err("block support is not 8 coordinates".into());
        }
        if covered.overlap(&support) != 0 {
            return Err("block supports overlap".into());
        }
        if support.overlap(&w.alpha) != 0 && support.overlap(&w.alpha.complement()) != 0 {
            return Err("block straddles the alpha split".into());
        }
        let class = block.classify();
        if !class.is_doubly_even || !class.is_self_orthogonal {
            return Err("block is not a doubly even self-orthogonal code".into());
        }
        if block.min_weight() != Some(crate::gf2::MinWeight::Exact(4)) {
            return Err("block minimum weight is not 4".into());
        }
        covered.xor_in_place(&support);
    }
    if covered.weight() != n {
        return Err("blocks do not tile the coordinates".into());
    }
    let class = w.e.classify();
    if !class.is_self_dual || !class.is_doubly_even {
        return Err("the block sum is not a doubly even self-dual code".into());
    }
    let gamma = w.alpha.xor(&w.beta);
    for (h, word) in [(&w.h_beta, &w.beta), (&w.h_alpha_beta, &gamma)] {
        let d_word = d.support_subcode(word);
        if !h.is_subcode_of(&d_word) {
            return Err("maximal subcode escapes its support subcode".into());
        }
        let class = h.classify();
        if !(class.is_doubly_even && class.is_self_orthogonal) && h.dim() > 0 {
            return Err("subcode is not doubly even self-orthogonal".into());
        }
        if !w.e.support_subcode(word).is_subcode_of(h) {
            return Err("subcode misses the self-dual piece on its support".into());
        }
        // maximality: no doubly even extension inside D_word orthogonal to h
        let orth = d_word.intersect(&h.dual());
        if extend_once(h, &orth).is_some() {
            return Err("subcode is not maximal".into());
        }
    }
    if !w.h_beta.sum(&w.e).same_code(&w.h_alpha_beta.sum(&w.e)) {
        return Err("the two maximal subcodes differ modulo the self-dual subcode".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::{standard_code, StandardCode};
    use crate::mooncodes::{e8_codes, moonshine_codes};

    #[test]
    fn decomposition_of_two_hamming_blocks() {
        let h8 = standard_code(&StandardCode::Hamming8).unwrap();
        let mut gens = Vec::new();
        let z8 = Word::zeros(8);
        for b in h8.basis() {
            gens.push(b.concat(&z8));
            gens.push(z8.concat(b));
        }
        let c = Code::from_generators(16, gens);
        let blocks = hamming_decomposition_search(&c, &Word::ones(16)).unwrap();
        assert_eq!(blocks.len(), 2);
        for b in &blocks {
            assert_eq!(b.dim(), 4);
        }
    }

    #[test]
    fn decomposition_inside_e8_code() {
        let (s_e8, d_e8) = e8_codes();
        // any weight-8 word of the small code splits the large one
        let alpha = s_e8.words().find(|w| w.weight() == 8).unwrap();
        let blocks = hamming_decomposition_search(&d_e8, &alpha).unwrap();
        assert_eq!(blocks.len(), 1);
        let comp = hamming_decomposition_search(&d_e8, &alpha.complement()).unwrap();
        assert_eq!(comp.len(), 1);
        // full-length search finds a pair
        let full = hamming_decomposition_search(&d_e8, &Word::ones(16)).unwrap();
        assert_eq!(full.len(), 2);
    }

    #[test]
    fn decomposition_absent_in_small_code() {
        let c = Code::from_generators(
            8,
            vec![
                Word::from_pattern("1^4 0^4").unwrap(),
                Word::from_pattern("0^4 1^4").unwrap(),
            ],
        );
        assert!(hamming_decomposition_search(&c, &Word::ones(8)).is_none());
    }

    #[test]
    fn e8_pair_passes() {
        let (s_e8, d_e8) = e8_codes();
        let report = check_conditions(&d_e8, &s_e8).unwrap();
        assert!(report.condition1_failures.is_empty());
        assert!(
            report.failures.is_empty(),
            "failures: {:?}",
            report.failures
        );
        assert!(report.pass);
        assert_eq!(report.witnesses.len(), 32 * 31 / 2);
        for w in &report.witnesses {
            verify_witness(&d_e8, w).unwrap();
        }
    }

    #[test]
    fn moonshine_triple_pair_passes() {
        let pair = moonshine_codes();
        let d3 = crate::qchar::triple_code();
        let report = check_conditions(&d3, &pair.small).unwrap();
        assert!(report.condition1_failures.is_empty());
        assert!(
            report.failures.is_empty(),
            "first failure: {:?}",
            report.failures.first()
        );
        assert!(report.pass);
        assert_eq!(report.witnesses.len(), 128 * 127 / 2);
    }

    #[test]
    fn designed_negative_fails_with_reason() {
        let d = Code::from_generators(
            8,
            vec![
                Word::from_pattern("1^4 0^4").unwrap(),
                Word::from_pattern("0^4 1^4").unwrap(),
            ],
        );
        let s = Code::from_generators(8, vec![Word::ones(8)]);
        let report = check_conditions(&d, &s).unwrap();
        assert!(!report.pass);
        assert_eq!(report.failures.len(), 1);
        assert!(report.failures[0].reason.contains("no self-dual Hamming-sum subcode"));
    }

    #[test]
    fn length_mismatch_is_a_domain_error() {
        let d = Code::trivial(8);
        let s = Code::trivial(16);
        assert!(check_conditions(&d, &s).is_err());
    }
}
