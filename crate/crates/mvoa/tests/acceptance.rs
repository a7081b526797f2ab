//! Acceptance suite: one test per headline criterion, each printing a
//! single pass line (run with `--nocapture` to see them).

use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use mvoa::cocycle::{comm_sign, epsilon, square_sign};
use mvoa::gf2::{Code, MinWeight, WeightEnumerator, Word};
use mvoa::hypotheses::{check_conditions, verify_witness};
use mvoa::lattice::{conformal_bound_scan, e8_variant, Rat};
use mvoa::modrep::{Descriptor, Ising, TensorLabel};
use mvoa::mooncodes::{
    e8_codes, lambda_codes, moonshine_codes, orbifold_chain, rm41_aut, series_codes,
};
use mvoa::qchar::{
    char_2b, char_3c_direct, char_3c_substituted, descriptor_char, e8_char, e8_char_oracle,
    ising_char, j_oracle, moonshine_char, series_weight_one, CharBasis,
};
use mvoa::qseries::{QSeries, DENOM};

fn pass(line: &str) {
    println!("[PASS] {line}");
}

fn coeff(series: &QSeries, k: i64) -> i64 {
    series.coeff_q(k).to_i64().unwrap()
}

#[test]
fn criterion_01_moonshine_graded_dimensions() {
    let start = Instant::now();
    let ch = moonshine_char(4 * DENOM).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(coeff(&ch, 0), 1);
    assert_eq!(coeff(&ch, 1), 0);
    assert_eq!(coeff(&ch, 2), 196_884);
    assert_eq!(coeff(&ch, 3), 21_493_760);
    // the independent modular oracle fixes the weight-3 value
    let j = j_oracle(3 * DENOM).unwrap();
    assert_eq!(j.coeff_q(2).to_i64().unwrap(), 21_493_760);
    assert!(
        elapsed.as_secs() < 60,
        "moonshine character took {elapsed:?}"
    );
    pass(&format!(
        "criterion 1: moonshine graded dimensions 1, 0, 196884, 21493760 in {elapsed:?}"
    ));
}

#[test]
fn criterion_02_involution_split() {
    let split = char_2b(2 * DENOM).unwrap();
    assert_eq!(coeff(&split.plus, 2), 98_580);
    assert_eq!(coeff(&split.minus, 2), 98_304);
    assert_eq!(coeff(&split.trace, 2), 276);
    let total = split.plus.add(&split.minus);
    let ch = moonshine_char(2 * DENOM).unwrap();
    assert!(total.agrees_with(&ch, 2 * DENOM));
    pass("criterion 2: involution split 98580 / 98304 / trace 276; parts sum to the character");
}

#[test]
fn criterion_03_order_three_trace() {
    let trunc = 6 * DENOM;
    let direct = char_3c_direct(trunc).unwrap();
    let substituted = char_3c_substituted(trunc).unwrap();
    assert!(direct.agrees_with(&substituted, trunc));
    assert_eq!(direct.coeff(-DENOM), BigInt::from(1));
    assert_eq!(coeff(&direct, 2), 248);
    pass("criterion 3: order-three trace 248 at q^2; direct sum = substitution through order 6");
}

#[test]
fn criterion_04_e8_character_oracle() {
    let trunc = 4 * DENOM;
    let ch = e8_char(trunc);
    let oracle = e8_char_oracle(trunc).unwrap();
    assert!(ch.agrees_with(&oracle, trunc));
    assert_eq!(coeff(&ch, 0), 1);
    assert_eq!(coeff(&ch, 1), 248);
    assert_eq!(coeff(&ch, 2), 4124);
    // itemize weight 2 across the three descriptor classes
    let basis = CharBasis::new(2 * DENOM, 16);
    let (s_e8, d_e8) = e8_codes();
    let code_part = mvoa::qchar::code_char(&WeightEnumerator::of_code(&d_e8), &basis);
    assert_eq!(coeff(&code_part, 2), 156);
    let mut weight8 = 0;
    for alpha in s_e8.words().filter(|w| w.weight() == 8) {
        let d = mvoa::modrep::v_e8_descriptor(&alpha).unwrap();
        weight8 += coeff(&descriptor_char(&d, &basis).unwrap(), 2);
    }
    assert_eq!(weight8, 30 * 128);
    let ones = mvoa::modrep::v_e8_descriptor(&Word::ones(16)).unwrap();
    assert_eq!(coeff(&descriptor_char(&ones, &basis).unwrap(), 2), 128);
    assert_eq!(156 + 30 * 128 + 128, 4124);
    pass("criterion 4: E8 character equals theta/eta oracle; 4124 = 156 + 30*128 + 128");
}

#[test]
fn criterion_05_code_facts() {
    let pair = moonshine_codes();
    assert_eq!(pair.large.dim(), 41);
    assert_eq!(
        WeightEnumerator::of_code(&pair.small).to_polynomial_string(),
        "X^48 + 3X^32 + 120X^24 + 3X^16 + 1"
    );
    assert_eq!(pair.large.min_weight(), Some(MinWeight::Exact(4)));
    let (s_e8, _) = e8_codes();
    assert_eq!(
        WeightEnumerator::of_code(&s_e8).to_polynomial_string(),
        "X^16 + 30X^8 + 1"
    );
    let (_, d_lambda) = lambda_codes();
    let weight2: Vec<Word> = d_lambda
        .low_weight_words(2)
        .into_iter()
        .filter(|w| w.weight() == 2)
        .collect();
    assert_eq!(weight2.len(), 24);
    for w in &weight2 {
        let sup = w.support();
        assert_eq!(sup[0] % 2, 0);
        assert_eq!(sup[1], sup[0] + 1);
    }
    pass("criterion 5: dim 41, both weight enumerators, min weight 4, 24 adjacent pairs");
}

#[test]
fn criterion_06_hypotheses_checker() {
    let (s_e8, d_e8) = e8_codes();
    let report = check_conditions(&d_e8, &s_e8).unwrap();
    assert!(report.pass, "{:?}", report.failures.first());
    for w in &report.witnesses {
        verify_witness(&d_e8, w).unwrap();
    }
    let pair = moonshine_codes();
    let d3 = mvoa::qchar::triple_code();
    let report3 = check_conditions(&d3, &pair.small).unwrap();
    assert!(report3.pass, "{:?}", report3.failures.first());
    assert_eq!(report3.witnesses.len(), 128 * 127 / 2);
    for w in report3.witnesses.iter().step_by(97) {
        verify_witness(&d3, w).unwrap();
    }
    let d_neg = Code::from_generators(
        8,
        vec![
            Word::from_pattern("1^4 0^4").unwrap(),
            Word::from_pattern("0^4 1^4").unwrap(),
        ],
    );
    let s_neg = Code::from_generators(8, vec![Word::ones(8)]);
    let negative = check_conditions(&d_neg, &s_neg).unwrap();
    assert!(!negative.pass);
    assert!(!negative.failures.is_empty());
    assert!(negative.failures[0].reason.contains("Hamming"));
    pass("criterion 6: hypotheses pass on both positive pairs, fail with reason on the negative");
}

#[test]
fn criterion_07_lattice_suite() {
    let chain = orbifold_chain();
    for m in 1..=4usize {
        let l = e8_variant(m).unwrap();
        let class = l.classify();
        assert!(class.even, "presentation {m} even");
        assert_eq!(class.det, Rat::new(1, 1), "presentation {m} determinant");
        let tau = l.frame_tau_code().unwrap();
        assert!(
            tau.same_code(&chain[m - 1].0),
            "frame tau-code of presentation {m} is chain step {m} (no coordinate permutation needed)"
        );
    }
    let theta = e8_variant(1).unwrap().theta_series(2).unwrap();
    assert_eq!(theta.coeff_q(1).to_i64().unwrap(), 240);
    // the final chain step contains a non-doubled word: no frame realizes it
    let (s5, _) = &chain[4];
    assert!(s5.contains(&Word::from_pattern("{10}^8").unwrap()));
    assert!(s5.words().any(|w| !w.is_doubled()));
    pass("criterion 7: presentations 1-4 even unimodular, theta 240, frame codes = chain steps 1-4 exactly, step 5 non-doubled");
}

#[test]
fn criterion_08_conformal_bound_scan() {
    let scan = conformal_bound_scan(&e8_variant(1).unwrap()).unwrap();
    assert_eq!(scan.label_count, 2160);
    assert!(scan.violations.is_empty());
    assert_eq!(scan.max_offdiag, Rat::new(9, 128));
    assert!(scan.min_distance_sq >= Rat::new(1, 3));
    pass("criterion 8: zero violations of 1/12, max off-diagonal 9/128, distances >= 1/3");
}

#[test]
fn criterion_09_property_suites() {
    // cocycle laws: square and commutator exhaustive to length 8, the
    // cocycle identity exhaustive to length 6
    let words8: Vec<Word> = (0u32..256)
        .map(|bits| {
            let mut w = Word::zeros(8);
            for i in 0..8 {
                if (bits >> i) & 1 == 1 {
                    w.set(i, true);
                }
            }
            w
        })
        .collect();
    for a in &words8 {
        assert_eq!(epsilon(a, a), square_sign(a));
        for b in &words8 {
            assert_eq!(epsilon(a, b).mul(epsilon(b, a)), comm_sign(a, b));
        }
    }
    let words6: Vec<Word> = words8
        .iter()
        .filter(|w| (6..8).all(|i| !w.get(i)))
        .map(|w| w.restrict(&[0, 1, 2, 3, 4, 5]))
        .collect();
    for a in &words6 {
        for b in &words6 {
            for c in &words6 {
                assert_eq!(
                    epsilon(a, b).mul(epsilon(&a.xor(b), c)),
                    epsilon(b, c).mul(epsilon(a, &b.xor(c)))
                );
            }
        }
    }

    // MacWilliams and coset enumerators against brute force, 1000 cases
    let mut rng = StdRng::seed_from_u64(2026);
    for _ in 0..1000 {
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
        let transformed = WeightEnumerator::by_enumeration(&c)
            .macwilliams(c.dim())
            .unwrap();
        assert_eq!(direct, transformed);
        let mut v = Word::zeros(n);
        for i in 0..n {
            if rng.gen_bool(0.5) {
                v.set(i, true);
            }
        }
        let coset = WeightEnumerator::of_coset(&c, &v).unwrap();
        let mut counts = vec![0u64; n + 1];
        for w in c.words() {
            counts[w.xor(&v).weight()] += 1;
        }
        for (w, count) in counts.iter().enumerate() {
            assert_eq!(coset.count(w), &num_bigint::BigUint::from(*count));
        }
    }

    // descriptor characters against brute force, with offset invariance,
    // 1000 cases up to dimension 10
    let trunc = 2 * DENOM;
    let basis = CharBasis::new(trunc, 16);
    let c0 = ising_char(Ising::Vacuum, trunc);
    let c12 = ising_char(Ising::Half, trunc);
    let c16 = ising_char(Ising::Sixteenth, trunc);
    let mut c0p = vec![QSeries::one(trunc)];
    let mut c12p = vec![QSeries::one(trunc)];
    for i in 1..=10 {
        c0p.push(c0p[i - 1].mul(&c0));
        c12p.push(c12p[i - 1].mul(&c12));
    }
    for case in 0..1000 {
        let comp_len = rng.gen_range(1..=10usize);
        let gen_count = rng.gen_range(0..=comp_len);
        let gens: Vec<Word> = (0..gen_count)
            .map(|_| {
                let mut w = Word::zeros(comp_len);
                for i in 0..comp_len {
                    if rng.gen_bool(0.5) {
                        w.set(i, true);
                    }
                }
                w
            })
            .collect();
        let gamma = Code::from_generators(comp_len, gens);
        let mut offset = Word::zeros(comp_len);
        for i in 0..comp_len {
            if rng.gen_bool(0.5) {
                offset.set(i, true);
            }
        }
        let tau_len = rng.gen_range(0..=2usize);
        let ambient = tau_len + comp_len;
        let mut tau = Word::zeros(ambient);
        for t in 0..tau_len {
            tau.set(t, true);
        }
        let d = Descriptor::new(
            ambient,
            tau.clone(),
            gamma.clone(),
            offset.clone(),
            num_bigint::BigUint::from(1u32),
        );
        let fast = descriptor_char(&d, &basis).unwrap();
        let mut brute = QSeries::zero(trunc);
        for w in gamma.words() {
            let pattern = w.xor(&offset);
            brute = brute.add(&c0p[comp_len - pattern.weight()].mul(&c12p[pattern.weight()]));
        }
        brute = brute.mul(&c16.pow(tau_len as u32));
        let bound = fast.trunc().min(brute.trunc()).min(trunc);
        assert!(fast.agrees_with(&brute, bound), "case {case}");
        if gamma.dim() > 0 {
            let shift = gamma.basis()[rng.gen_range(0..gamma.dim())].clone();
            let shifted = Descriptor::new(
                ambient,
                tau,
                gamma.clone(),
                offset.xor(&shift),
                num_bigint::BigUint::from(1u32),
            );
            let other = descriptor_char(&shifted, &basis).unwrap();
            assert!(other.agrees_with(&fast, bound), "case {case} offset");
        }
    }

    // tau-word additivity under fusion, exhaustive for length 6
    let opts = [Ising::Vacuum, Ising::Half, Ising::Sixteenth];
    let mut labels = Vec::new();
    for mask in 0..3usize.pow(6) {
        let mut m = mask;
        let mut factors = Vec::with_capacity(6);
        for _ in 0..6 {
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
                assert_eq!(c.tau_word(), expected);
            }
        }
    }

    pass("criterion 9: cocycle laws, MacWilliams/coset vs brute (1000), descriptor vs brute + offset invariance (1000), tau additivity");
}

#[test]
fn criterion_10_series_codes() {
    let (s1, d1) = series_codes(1).unwrap();
    let pair = moonshine_codes();
    assert!(s1.same_code(&pair.small));
    assert!(d1.same_code(&pair.large));
    let w1 = series_weight_one(2).unwrap();
    assert!(w1.is_zero());
    pass("criterion 10: series index 1 is the moonshine pair; index 2 has no weight-one states");
}

#[test]
fn criterion_11_rm_aut_order() {
    let aut = rm41_aut();
    assert_eq!(aut.order.to_u64(), Some(322_560));
    let elements = aut.elements();
    assert_eq!(elements.len(), 322_560);
    let (s_e8, _) = e8_codes();
    for g in &aut.generators {
        assert!(aut.preserves(g, &s_e8));
    }
    pass("criterion 11: automorphism order 322560 by closure and by orbit-stabilizer; generators preserve the code");
}
