//! Invariant suite behind `mvoa selftest`: every module-level law the
//! crate relies on, runnable in one pass with a machine-readable
//! verdict per check.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::cocycle::{comm_sign, epsilon, square_sign};
use crate::gf2::{Code, WeightEnumerator, Word};
use crate::hypotheses;
use crate::lattice;
use crate::modrep::{self, Ising, TensorLabel};
use crate::mooncodes;
use crate::qchar;
use crate::qseries::{QSeries, DENOM};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &str, result: Result<String, String>) -> Check {
    match result {
        Ok(detail) => Check {
            name: name.into(),
            pass: true,
            detail,
        },
        Err(detail) => Check {
            name: name.into(),
            pass: false,
            detail,
        },
    }
}

fn all_words(n: usize) -> Vec<Word> {
    (0u32..(1 << n))
        .map(|bits| {
            let mut w = Word::zeros(n);
            for i in 0..n {
                if (bits >> i) & 1 == 1 {
                    w.set(i, true);
                }
            }
            w
        })
        .collect()
}

fn random_code(rng: &mut StdRng, max_len: usize) -> Code {
    let n = rng.gen_range(2..=max_len);
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
    Code::from_generators(n, gens)
}

fn random_word(rng: &mut StdRng, n: usize) -> Word {
    let mut w = Word::zeros(n);
    for i in 0..n {
        if rng.gen_bool(0.5) {
            w.set(i, true);
        }
    }
    w
}

fn cocycle_laws() -> Result<String, String> {
    let words6 = all_words(6);
    for a in &words6 {
        for b in &words6 {
            for c in &words6 {
                let lhs = epsilon(a, b).mul(epsilon(&a.xor(b), c));
                let rhs = epsilon(b, c).mul(epsilon(a, &b.xor(c)));
                if lhs != rhs {
                    return Err(format!("cocycle law fails at ({a}, {b}, {c})"));
                }
            }
        }
    }
    let words8 = all_words(8);
    for a in &words8 {
        if epsilon(a, a) != square_sign(a) {
            return Err(format!("square law fails at {a}"));
        }
        for b in &words8 {
            if epsilon(a, b).mul(epsilon(b, a)) != comm_sign(a, b) {
                return Err(format!("commutator law fails at ({a}, {b})"));
            }
        }
    }
    Ok("cocycle, square and commutator laws exhaustive to length 8".into())
}

fn macwilliams_vs_brute(cases: usize) -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0001);
    for i in 0..cases {
        let c = random_code(&mut rng, 12);
        let direct = WeightEnumerator::by_enumeration(&c.dual());
        let transformed = WeightEnumerator::by_enumeration(&c)
            .macwilliams(c.dim())
            .map_err(|e| format!("case {i}: {e}"))?;
        if direct != transformed {
            return Err(format!("case {i}: transform mismatch on {c:?}"));
        }
        if transformed.total() != (num_bigint::BigUint::one() << (c.len() - c.dim())) {
            return Err(format!("case {i}: dual size mismatch"));
        }
    }
    Ok(format!("{cases} random codes, dual enumeration = transform"))
}

fn coset_vs_brute(cases: usize) -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0002);
    for i in 0..cases {
        let c = random_code(&mut rng, 12);
        let v = random_word(&mut rng, c.len());
        let we = WeightEnumerator::of_coset(&c, &v).map_err(|e| format!("case {i}: {e}"))?;
        let mut counts = vec![0u64; c.len() + 1];
        for w in c.words() {
            counts[w.xor(&v).weight()] += 1;
        }
        for (w, count) in counts.iter().enumerate() {
            if we.count(w) != &num_bigint::BigUint::from(*count) {
                return Err(format!("case {i}: coset count differs at weight {w}"));
            }
        }
        if we.total() != (num_bigint::BigUint::one() << c.dim()) {
            return Err(format!("case {i}: coset size mismatch"));
        }
    }
    Ok(format!("{cases} random cosets match brute force"))
}

fn radical_and_support() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(0x5eed_0003);
    for i in 0..200 {
        let c = random_code(&mut rng, 12);
        let r = c.radical();
        if !r.is_subcode_of(&c) {
            return Err(format!("case {i}: radical escapes the code"));
        }
        for x in r.words() {
            for y in c.words() {
                if x.dot(&y) {
                    return Err(format!("case {i}: radical word pairs nontrivially"));
                }
            }
        }
        let beta = random_word(&mut rng, c.len());
        let sub = c.support_subcode(&beta);
        if !sub.is_subcode_of(&c) {
            return Err(format!("case {i}: support subcode escapes the code"));
        }
        for x in sub.words() {
            if !x.supported_on(&beta) {
                return Err(format!("case {i}: support subcode word escapes the support"));
            }
        }
        // cross-check against direct enumeration
        let expected: Vec<Word> = c.words().filter(|w| w.supported_on(&beta)).collect();
        if expected.len() != 1usize << sub.dim() {
            return Err(format!("case {i}: support subcode size mismatch"));
        }
        if !c.dual().dual().same_code(&c) {
            return Err(format!("case {i}: double dual differs"));
        }
    }
    Ok("radical, support subcode and double dual on 200 random codes".into())
}

fn named_code_facts() -> Result<String, String> {
    let (s_e8, d_e8) = mooncodes::e8_codes();
    if s_e8.dim() != 5 || d_e8.dim() != 11 {
        return Err("length-16 pair dimensions".into());
    }
    if WeightEnumerator::of_code(&s_e8).to_polynomial_string() != "X^16 + 30X^8 + 1" {
        return Err("length-16 small code weight enumerator".into());
    }
    let radical = d_e8.radical();
    if !radical.same_code(&s_e8) {
        return Err("radical of the length-16 dual is not the small code".into());
    }
    let chain = mooncodes::orbifold_chain();
    for ((s_a, d_a), (s_b, d_b)) in chain.iter().zip(chain.iter().skip(1)) {
        if !s_a.is_subcode_of(s_b) || !d_b.is_subcode_of(d_a) {
            return Err("chain is not nested".into());
        }
    }
    let pair = mooncodes::moonshine_codes();
    if pair.large.dim() != 41 {
        return Err("moonshine large code dimension".into());
    }
    if WeightEnumerator::of_code(&pair.small).to_polynomial_string()
        != "X^48 + 3X^32 + 120X^24 + 3X^16 + 1"
    {
        return Err("moonshine small code weight enumerator".into());
    }
    if pair.large.min_weight() != Some(crate::gf2::MinWeight::Exact(4)) {
        return Err("moonshine large code minimum weight".into());
    }
    let (s_l, d_l) = mooncodes::lambda_codes();
    if s_l.dim() != 6 {
        return Err("Leech-side small code dimension".into());
    }
    let weight2 = d_l
        .low_weight_words(2)
        .into_iter()
        .filter(|w| w.weight() == 2)
        .count();
    if weight2 != 24 {
        return Err(format!("Leech-side dual has {weight2} weight-2 words"));
    }
    for w in s_l.words() {
        if !w.is_doubled() {
            return Err("Leech-side small code word is not doubled".into());
        }
    }
    let rows = mooncodes::assembly_table().map_err(|e| e.to_string())?;
    if rows.len() != 128 {
        return Err("assembly table row count".into());
    }
    Ok("orbifold chain, moonshine pair, Leech pair, assembly table".into())
}

fn membership_characterization(samples: usize) -> Result<String, String> {
    let pair = mooncodes::moonshine_codes();
    let (_, d_e8) = mooncodes::e8_codes();
    let mut rng = StdRng::seed_from_u64(0x5eed_0004);
    for i in 0..samples {
        let mut parts = Vec::with_capacity(3);
        for _ in 0..3 {
            let mut w = random_word(&mut rng, 16);
            if w.weight() % 2 == 1 {
                w.set(15, !w.get(15));
            }
            parts.push(w);
        }
        let triple = parts[0].concat(&parts[1]).concat(&parts[2]);
        let blocksum = parts[0].xor(&parts[1]).xor(&parts[2]);
        if pair.large.contains(&triple) != d_e8.contains(&blocksum) {
            return Err(format!("sample {i}: membership characterization fails"));
        }
    }
    Ok(format!("{samples} random even triples"))
}

fn series_checks() -> Result<String, String> {
    let (s1, d1) = mooncodes::series_codes(1).map_err(|e| e.to_string())?;
    let pair = mooncodes::moonshine_codes();
    if !s1.same_code(&pair.small) || !d1.same_code(&pair.large) {
        return Err("series index 1 differs from the moonshine pair".into());
    }
    let (s2, _) = mooncodes::series_codes(2).map_err(|e| e.to_string())?;
    if s2.dim() != 9 || !s2.is_even() {
        return Err("series index 2 shape".into());
    }
    for n in 1..=2 {
        let w1 = qchar::series_weight_one(n).map_err(|e| e.to_string())?;
        if !w1.is_zero() {
            return Err(format!("weight-one states exist at series index {n}"));
        }
    }
    Ok("series codes match, weight-one spaces vanish".into())
}

fn rm41_checks() -> Result<String, String> {
    let aut = mooncodes::rm41_aut();
    if aut.order.to_u64() != Some(322_560) {
        return Err(format!("group order {}", aut.order));
    }
    let (s_e8, _) = mooncodes::e8_codes();
    for g in &aut.generators {
        if !aut.preserves(g, &s_e8) {
            return Err("generator does not preserve the code".into());
        }
    }
    let closure = aut.elements();
    if closure.len() != 322_560 {
        return Err(format!("closure size {}", closure.len()));
    }
    Ok("order 322560 by both routes, generators preserve the code".into())
}

fn lattice_checks() -> Result<String, String> {
    let chain = mooncodes::orbifold_chain();
    for m in 1..=4usize {
        let l = lattice::e8_variant(m).map_err(|e| e.to_string())?;
        let class = l.classify();
        if !class.even || !class.unimodular {
            return Err(format!("presentation {m} is not even unimodular"));
        }
        let tau = l.frame_tau_code().map_err(|e| e.to_string())?;
        if !tau.same_code(&chain[m - 1].0) {
            return Err(format!("frame tau-code of presentation {m} differs from chain step {m}"));
        }
    }
    let theta = lattice::e8_variant(1)
        .unwrap()
        .theta_series(2)
        .map_err(|e| e.to_string())?;
    if theta.coeff_q(1) != BigInt::from(240) {
        return Err("root count".into());
    }
    // the last chain step contains a non-doubled word, so no frame
    // realizes it
    let (s5, _) = &chain[4];
    if s5.words().all(|w| w.is_doubled()) {
        return Err("final chain step unexpectedly doubled".into());
    }
    Ok("presentations even unimodular; frame tau-codes follow the chain".into())
}

fn bound_scan_checks() -> Result<String, String> {
    let l = lattice::e8_variant(1).map_err(|e| e.to_string())?;
    let scan = lattice::conformal_bound_scan(&l).map_err(|e| e.to_string())?;
    if !scan.violations.is_empty() {
        return Err(format!("{} violations of the 1/12 bound", scan.violations.len()));
    }
    if scan.max_offdiag != lattice::Rat::new(9, 128) {
        return Err(format!("max off-diagonal {}", scan.max_offdiag));
    }
    if scan.min_distance_sq < lattice::Rat::new(1, 3) {
        return Err(format!("distance bound {}", scan.min_distance_sq));
    }
    Ok(format!(
        "{} labels, max off-diagonal 9/128, distances at least 1/3",
        scan.label_count
    ))
}

fn tau_additivity() -> Result<String, String> {
    let opts = [Ising::Vacuum, Ising::Half, Ising::Sixteenth];
    let n = 6usize;
    let mut labels = Vec::new();
    for mask in 0..3usize.pow(n as u32) {
        let mut m = mask;
        let mut factors = Vec::with_capacity(n);
        for _ in 0..n {
            factors.push(opts[m % 3]);
            m /= 3;
        }
        labels.push(TensorLabel::new(factors));
    }
    for a in &labels {
        let ta = a.tau_word();
        for b in &labels {
            let expected = ta.xor(&b.tau_word());
            for c in a.fuse(b) {
                if c.tau_word() != expected {
                    return Err("tau-word additivity fails".into());
                }
            }
        }
    }
    Ok(format!("exhaustive over {}^2 label pairs", labels.len()))
}

fn hamming_label_group() -> Result<String, String> {
    use crate::modrep::{HammingKind, HammingLabel};
    let mut labels = Vec::new();
    for kind in [HammingKind::Half, HammingKind::Sixteenth] {
        for w in all_words(8) {
            labels.push(HammingLabel::new(kind, w));
        }
    }
    labels.sort_by(|a, b| {
        format!("{:?}{}", a.kind, a.word()).cmp(&format!("{:?}{}", b.kind, b.word()))
    });
    labels.dedup();
    if labels.len() != 32 {
        return Err(format!("{} distinct labels", labels.len()));
    }
    let id = HammingLabel::identity();
    for a in &labels {
        if &a.fuse(&id) != a || a.fuse(a) != id {
            return Err("group law fails".into());
        }
        for b in &labels {
            if a.fuse(b) != b.fuse(a) {
                return Err("fusion is not commutative".into());
            }
        }
    }
    Ok("32 label classes form an elementary abelian group".into())
}

fn descriptor_invariance(cases: usize) -> Result<String, String> {
    let trunc = 3 * DENOM;
    let basis = qchar::CharBasis::new(trunc, 12);
    let mut rng = StdRng::seed_from_u64(0x5eed_0005);
    for i in 0..cases {
        let comp_len = rng.gen_range(1..8usize);
        let gens: Vec<Word> = (0..rng.gen_range(0..4usize))
            .map(|_| random_word(&mut rng, comp_len))
            .collect();
        let gamma = Code::from_generators(comp_len, gens);
        let offset = random_word(&mut rng, comp_len);
        let tau_len = rng.gen_range(0..3usize);
        let ambient = tau_len + comp_len;
        let mut tau = Word::zeros(ambient);
        for t in 0..tau_len {
            tau.set(t, true);
        }
        let d = modrep::Descriptor::new(
            ambient,
            tau.clone(),
            gamma.clone(),
            offset.clone(),
            num_bigint::BigUint::one(),
        );
        let base = qchar::descriptor_char(&d, &basis).map_err(|e| e.to_string())?;
        // shifting the offset by a code element preserves the character
        if gamma.dim() > 0 {
            let shift = gamma.basis()[rng.gen_range(0..gamma.dim())].clone();
            let shifted = modrep::Descriptor::new(
                ambient,
                tau.clone(),
                gamma.clone(),
                offset.xor(&shift),
                num_bigint::BigUint::one(),
            );
            let other = qchar::descriptor_char(&shifted, &basis).map_err(|e| e.to_string())?;
            if !other.agrees_with(&base, trunc) {
                return Err(format!("case {i}: offset invariance fails"));
            }
        }
        // brute force over all coset words
        let mut brute = QSeries::zero(trunc);
        let c0 = qchar::ising_char(Ising::Vacuum, trunc);
        let c12 = qchar::ising_char(Ising::Half, trunc);
        let c16 = qchar::ising_char(Ising::Sixteenth, trunc);
        for w in gamma.words() {
            let pattern = w.xor(&offset);
            let term = c0.pow((comp_len - pattern.weight()) as u32)
                .mul(&c12.pow(pattern.weight() as u32));
            brute = brute.add(&term);
        }
        brute = brute.mul(&c16.pow(tau_len as u32));
        let bound = base.trunc().min(brute.trunc());
        if !base.agrees_with(&brute, bound) {
            return Err(format!("case {i}: brute-force character differs"));
        }
    }
    Ok(format!("{cases} random descriptors vs brute force"))
}

fn character_anchors() -> Result<String, String> {
    let trunc = 4 * DENOM;
    let e8 = qchar::e8_char(trunc);
    let oracle = qchar::e8_char_oracle(trunc).map_err(|e| e.to_string())?;
    if !e8.agrees_with(&oracle, trunc) {
        return Err("E8 character differs from the theta oracle".into());
    }
    if e8.coeff_q(1) != BigInt::from(248) {
        return Err("E8 weight-one dimension".into());
    }
    let trunc = 3 * DENOM;
    let moonshine = qchar::moonshine_char(trunc).map_err(|e| e.to_string())?;
    if !moonshine.all_coeffs_nonnegative() {
        return Err("moonshine character has a negative coefficient".into());
    }
    let j = qchar::j_oracle(trunc - DENOM).map_err(|e| e.to_string())?;
    let shifted = moonshine.shift(-DENOM);
    if !shifted.agrees_with(&j, trunc - DENOM) {
        return Err("moonshine character differs from the J oracle".into());
    }
    let split = qchar::char_2b(2 * DENOM).map_err(|e| e.to_string())?;
    let total = split.plus.add(&split.minus);
    if !total.agrees_with(&qchar::moonshine_char(2 * DENOM).map_err(|e| e.to_string())?, 2 * DENOM)
    {
        return Err("the involution split does not sum to the character".into());
    }
    if split.plus.coeff_q(2) != BigInt::from(98580)
        || split.minus.coeff_q(2) != BigInt::from(98304)
    {
        return Err("involution split weight-two values".into());
    }
    let closed = qchar::closed_form_2b_minus(2 * DENOM);
    if !split.minus.agrees_with(&closed, 2 * DENOM) {
        return Err("closed form for the minus part differs".into());
    }
    let direct = qchar::char_3c_direct(6 * DENOM).map_err(|e| e.to_string())?;
    let substituted = qchar::char_3c_substituted(6 * DENOM).map_err(|e| e.to_string())?;
    if !direct.agrees_with(&substituted, 6 * DENOM) {
        return Err("the two order-three trace routes differ".into());
    }
    Ok("E8 oracle, J oracle, involution split, order-three trace".into())
}

fn hypotheses_checks() -> Result<String, String> {
    let (s_e8, d_e8) = mooncodes::e8_codes();
    let report = hypotheses::check_conditions(&d_e8, &s_e8).map_err(|e| e.to_string())?;
    if !report.pass {
        return Err("length-16 pair fails".into());
    }
    for w in report.witnesses.iter().take(40) {
        hypotheses::verify_witness(&d_e8, w)?;
    }
    let d = Code::from_generators(
        8,
        vec![
            Word::from_pattern("1^4 0^4").unwrap(),
            Word::from_pattern("0^4 1^4").unwrap(),
        ],
    );
    let s = Code::from_generators(8, vec![Word::ones(8)]);
    let negative = hypotheses::check_conditions(&d, &s).map_err(|e| e.to_string())?;
    if negative.pass || negative.failures.is_empty() {
        return Err("designed negative pair passes".into());
    }
    Ok("positive pair with recheckable witnesses; designed negative fails".into())
}

/// Run the whole suite. `quick` lowers the sampled case counts.
pub fn run_all(quick: bool) -> Vec<Check> {
    let sampled = if quick { 100 } else { 1000 };
    let membership_samples = if quick { 1000 } else { 10_000 };
    vec![
        check("cocycle-laws", cocycle_laws()),
        check("macwilliams-vs-brute", macwilliams_vs_brute(sampled)),
        check("coset-enumerator-vs-brute", coset_vs_brute(sampled)),
        check("radical-support-dual", radical_and_support()),
        check("named-code-facts", named_code_facts()),
        check(
            "moonshine-membership",
            membership_characterization(membership_samples),
        ),
        check("series-codes", series_checks()),
        check("rm41-automorphisms", rm41_checks()),
        check("lattice-presentations", lattice_checks()),
        check("conformal-bound-scan", bound_scan_checks()),
        check("tau-additivity", tau_additivity()),
        check("hamming-label-group", hamming_label_group()),
        check("descriptor-characters", descriptor_invariance(sampled)),
        check("character-anchors", character_anchors()),
        check("hypotheses-pairs", hypotheses_checks()),
    ]
}
