//! Exact graded characters.
//!
//! The three Ising characters generate everything: a code vertex algebra
//! has character `Σ_w A_w c0^{n-w} c½^w` over its weight distribution, a
//! descriptor contributes `mult · c16^{|tau|}` times the analogous sum
//! over its half-pattern coset, and the moonshine module is the sum of
//! 128 induced descriptors. Two independent modular oracles close the
//! loop: the E8 theta series over the Euler product reproduces the E8
//! character, and `Θ³/(q·φ^24) - 744` reproduces the moonshine character
//! shifted by `q^{-1}`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint, Sign as NumSign};
use num_traits::{One, Zero};

use crate::error::Error;
use crate::gf2::{Code, WeightEnumerator, Word};
use crate::modrep::{v_e8_descriptor, Descriptor, Ising};
use crate::mooncodes::{assembly_table, e8_codes, moonshine_codes, series_codes, AssemblyRow, TripleShape};
use crate::qseries::{QSeries, DENOM};

/// `Π_{n≥1} (1 + q^{n-1/2})`, truncated.
pub fn product_plus_half(trunc: i64) -> QSeries {
    product(trunc, |n| n * DENOM - DENOM / 2, false)
}

/// `Π_{n≥1} (1 - q^{n-1/2})`, truncated.
pub fn product_minus_half(trunc: i64) -> QSeries {
    product(trunc, |n| n * DENOM - DENOM / 2, true)
}

/// `Π_{n≥1} (1 + q^n)`, truncated.
pub fn product_plus_int(trunc: i64) -> QSeries {
    product(trunc, |n| n * DENOM, false)
}

/// The Euler product `φ(q) = Π_{n≥1} (1 - q^n)`, truncated.
pub fn euler_product(trunc: i64) -> QSeries {
    product(trunc, |n| n * DENOM, true)
}

fn product(trunc: i64, exponent: impl Fn(i64) -> i64, minus: bool) -> QSeries {
    let mut acc = QSeries::one(trunc);
    let mut n = 1;
    loop {
        let e = exponent(n);
        if e > trunc {
            break;
        }
        let coeff = if minus { -BigInt::one() } else { BigInt::one() };
        let factor = QSeries::one(trunc).add(&QSeries::monomial(e, coeff, trunc));
        acc = acc.mul(&factor);
        n += 1;
    }
    acc
}

fn halve(series: &QSeries) -> QSeries {
    let two = BigInt::from(2);
    let mut out = QSeries::zero(series.trunc());
    for (e, c) in series.terms() {
        let (q, r) = (c / &two, c % &two);
        assert!(r.is_zero(), "coefficient not divisible by 2");
        out = out.add(&QSeries::monomial(e, q, series.trunc()));
    }
    out
}

/// Character of an irreducible Ising module, graded by conformal weight
/// with no central-charge prefactor.
pub fn ising_char(h: Ising, trunc: i64) -> QSeries {
    match h {
        Ising::Vacuum => halve(&product_plus_half(trunc).add(&product_minus_half(trunc))),
        Ising::Half => halve(&product_plus_half(trunc).sub(&product_minus_half(trunc))),
        Ising::Sixteenth => product_plus_int(trunc - 3).shift(3),
    }
}

/// Cached powers of the Ising characters, up to a fixed tensor length.
pub struct CharBasis {
    trunc: i64,
    c0: Vec<QSeries>,
    c12: Vec<QSeries>,
    c16: QSeries,
}

impl CharBasis {
    pub fn new(trunc: i64, max_len: usize) -> CharBasis {
        let c0 = ising_char(Ising::Vacuum, trunc);
        let c12 = ising_char(Ising::Half, trunc);
        let c16 = ising_char(Ising::Sixteenth, trunc);
        let mut c0_pows = Vec::with_capacity(max_len + 1);
        let mut c12_pows = Vec::with_capacity(max_len + 1);
        c0_pows.push(QSeries::one(trunc));
        c12_pows.push(QSeries::one(trunc));
        for i in 1..=max_len {
            c0_pows.push(c0_pows[i - 1].mul(&c0));
            c12_pows.push(c12_pows[i - 1].mul(&c12));
        }
        CharBasis {
            trunc,
            c0: c0_pows,
            c12: c12_pows,
            c16,
        }
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    fn pattern_sum(&self, counts: &[BigUint], len: usize) -> QSeries {
        let mut acc = QSeries::zero(self.trunc);
        for (w, count) in counts.iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            let coeff = BigInt::from_biguint(NumSign::Plus, count.clone());
            let term = self.c0[len - w].mul(&self.c12[w]).scale(&coeff);
            acc = acc.add(&term);
        }
        acc
    }

    fn sixteenth_power(&self, exp: usize) -> QSeries {
        self.c16.pow(exp as u32)
    }
}

/// Character of a code vertex algebra from its weight enumerator.
pub fn code_char(we: &WeightEnumerator, basis: &CharBasis) -> QSeries {
    basis.pattern_sum(we.counts(), we.len())
}

/// Character of a descriptor: multiplicity times the `1/16` tensor factor
/// times the half-pattern coset sum.
pub fn descriptor_char(d: &Descriptor, basis: &CharBasis) -> Result<QSeries, Error> {
    let coset = WeightEnumerator::of_coset(d.gamma_code(), d.gamma_offset())?;
    let sum = basis.pattern_sum(coset.counts(), coset.len());
    let mult = BigInt::from_biguint(NumSign::Plus, d.mult().clone());
    Ok(basis
        .sixteenth_power(d.tau().weight())
        .mul(&sum)
        .scale(&mult))
}

/// Graded dimensions of the E8 lattice vertex algebra over its length-16
/// frame, as the sum of the 32 descriptors.
pub fn e8_char(trunc: i64) -> QSeries {
    let basis = CharBasis::new(trunc, 16);
    e8_char_with(&basis)
}

pub fn e8_char_with(basis: &CharBasis) -> QSeries {
    let (s_e8, _) = e8_codes();
    let mut acc = QSeries::zero(basis.trunc());
    for alpha in s_e8.words() {
        let d = v_e8_descriptor(&alpha).expect("codeword of the small code");
        acc = acc.add(&descriptor_char(&d, basis).expect("coset enumerator of the projection"));
    }
    acc
}

/// The modular oracle for the E8 character: theta series over the eighth
/// power of the Euler product.
pub fn e8_char_oracle(trunc: i64) -> Result<QSeries, Error> {
    let order = trunc / DENOM + 1;
    let theta = crate::lattice::e8_variant(1)?.theta_series(order)?;
    let phi8 = euler_product(trunc).pow(8);
    Ok(theta.div(&phi8))
}

/// The normalized J-function `Θ_{E8}(q)^3 / (q · φ(q)^24) - 744`
/// computed purely from lattice and eta data; used as the independent
/// oracle for the moonshine character.
pub fn j_oracle(trunc: i64) -> Result<QSeries, Error> {
    let order = trunc / DENOM + 2;
    let theta = crate::lattice::e8_variant(1)?.theta_series(order)?;
    let phi24 = euler_product(trunc + DENOM).pow(24);
    let j = theta.pow(3).div(&phi24).shift(-DENOM);
    Ok(j.sub(&QSeries::monomial(0, BigInt::from(744), j.trunc())))
}

/// Tensor descriptor of one assembly row over the triple code.
fn row_descriptor(row: &AssemblyRow) -> Result<Descriptor, Error> {
    let xi1 = Word::unit(16, 0);
    let mut parts = Vec::with_capacity(3);
    for (label, twisted) in &row.parts {
        let mut d = v_e8_descriptor(label)?;
        if *twisted {
            d = d.coset_fuse(&xi1);
        }
        parts.push(d);
    }
    Ok(Descriptor::tensor(&parts))
}

/// The triple sum of the length-16 dual code inside length 48.
pub fn triple_code() -> Code {
    let (_, d_e8) = e8_codes();
    let z16 = Word::zeros(16);
    let mut gens = Vec::new();
    for b in d_e8.basis() {
        gens.push(b.concat(&z16).concat(&z16));
        gens.push(z16.concat(b).concat(&z16));
        gens.push(z16.concat(&z16).concat(b));
    }
    Code::from_generators(48, gens)
}

/// Per-grading-word characters of the moonshine module, exact through
/// `trunc`. The zero word is handled through the weight enumerator of
/// the large code; every other word goes through its induced descriptor.
pub fn moonshine_constituents(trunc: i64) -> Result<Vec<(Word, QSeries)>, Error> {
    let basis = CharBasis::new(trunc, 48);
    let pair = moonshine_codes();
    let d3 = triple_code();
    let reps = pair.large.coset_reps_mod(&d3)?;
    let rows = assembly_table()?;
    let mut out = Vec::with_capacity(rows.len());
    for row in &rows {
        if row.chi.is_zero() {
            let we = WeightEnumerator::of_code(&pair.large);
            out.push((row.chi.clone(), code_char(&we, &basis)));
            continue;
        }
        let d = row_descriptor(row)?;
        let counts = induced_coset_counts(&d, &reps)?;
        let sum = basis.pattern_sum(&counts, d.complement_coords().len());
        let mult = BigInt::from_biguint(NumSign::Plus, d.mult().clone());
        let ch = basis
            .sixteenth_power(d.tau().weight())
            .mul(&sum)
            .scale(&mult);
        out.push((row.chi.clone(), ch));
    }
    Ok(out)
}

/// Summed half-pattern weight counts of a descriptor induced along the
/// precomputed coset representatives, grouping equal shifted cosets.
fn induced_coset_counts(d: &Descriptor, reps: &[Word]) -> Result<Vec<BigUint>, Error> {
    let n = d.complement_coords().len();
    let mut grouped: HashMap<String, u64> = HashMap::new();
    for mu in reps {
        let shifted = d.coset_fuse(mu);
        let key = d.gamma_code().reduce(shifted.gamma_offset()).bit_string();
        *grouped.entry(key).or_insert(0) += 1;
    }
    let mut counts = vec![BigUint::zero(); n + 1];
    for (key, multiplicity) in grouped {
        let offset = Word::parse(&key)?;
        let we = WeightEnumerator::of_coset(d.gamma_code(), &offset)?;
        for (w, c) in we.counts().iter().enumerate() {
            counts[w] += c * multiplicity;
        }
    }
    Ok(counts)
}

/// Accumulated weight data grouped by tau weight and the pairing bit
/// with the first adjacent pair; drives both the total character and the
/// involution split without assembling 128 separate series.
struct GroupedCounts {
    /// `(tau weight, pairing) -> half-pattern counts scaled by mult`.
    groups: HashMap<(usize, bool), Vec<BigUint>>,
}

fn grouped_moonshine_counts() -> Result<GroupedCounts, Error> {
    let pair = moonshine_codes();
    let d3 = triple_code();
    let reps = pair.large.coset_reps_mod(&d3)?;
    let rows = assembly_table()?;
    let mut groups: HashMap<(usize, bool), Vec<BigUint>> = HashMap::new();
    for row in &rows {
        let pairing = row.chi.get(0) != row.chi.get(1);
        if row.chi.is_zero() {
            let we = WeightEnumerator::of_code(&pair.large);
            merge_counts(
                groups.entry((0, pairing)).or_default(),
                we.counts(),
                &BigUint::one(),
            );
            continue;
        }
        let d = row_descriptor(row)?;
        let counts = induced_coset_counts(&d, &reps)?;
        merge_counts(
            groups.entry((d.tau().weight(), pairing)).or_default(),
            &counts,
            d.mult(),
        );
    }
    Ok(GroupedCounts { groups })
}

fn merge_counts(target: &mut Vec<BigUint>, counts: &[BigUint], mult: &BigUint) {
    if target.len() < counts.len() {
        target.resize(counts.len(), BigUint::zero());
    }
    for (t, c) in target.iter_mut().zip(counts) {
        *t += c * mult;
    }
}

fn assemble_grouped(
    grouped: &GroupedCounts,
    basis: &CharBasis,
    keep: impl Fn(bool) -> bool,
) -> QSeries {
    let mut acc = QSeries::zero(basis.trunc());
    for ((tau_weight, pairing), counts) in &grouped.groups {
        if !keep(*pairing) {
            continue;
        }
        let len = 48 - tau_weight;
        let sum = basis.pattern_sum(counts, len);
        acc = acc.add(&basis.sixteenth_power(*tau_weight).mul(&sum));
    }
    acc
}

/// Graded dimensions of the moonshine module by conformal weight:
/// `1, 0, 196884, 21493760, ...`.
pub fn moonshine_char(trunc: i64) -> Result<QSeries, Error> {
    let basis = CharBasis::new(trunc, 48);
    let grouped = grouped_moonshine_counts()?;
    Ok(assemble_grouped(&grouped, &basis, |_| true))
}

/// The two eigenspace characters of the involution attached to the first
/// adjacent coordinate pair, and their difference.
pub struct Char2B {
    pub plus: QSeries,
    pub minus: QSeries,
    pub trace: QSeries,
}

pub fn char_2b(trunc: i64) -> Result<Char2B, Error> {
    let basis = CharBasis::new(trunc, 48);
    let grouped = grouped_moonshine_counts()?;
    let plus = assemble_grouped(&grouped, &basis, |pairing| !pairing);
    let minus = assemble_grouped(&grouped, &basis, |pairing| pairing);
    let trace = plus.sub(&minus);
    Ok(Char2B { plus, minus, trace })
}

/// Closed form for the minus part:
/// `2^11 q^{3/2} Π(1+q^n)^24 (Π(1+q^{n-1/2})^24 - Π(1-q^{n-1/2})^24)`.
pub fn closed_form_2b_minus(trunc: i64) -> QSeries {
    let margin = trunc + 2 * DENOM;
    let a = product_plus_int(margin).pow(24);
    let b = product_plus_half(margin).pow(24);
    let c = product_minus_half(margin).pow(24);
    a.mul(&b.sub(&c))
        .shift(3 * DENOM / 2)
        .scale(&BigInt::from(1u64 << 11))
}

/// The order-three trace in the normalization of the J-function: the
/// fixed-point trace of the coordinate 3-cycle, `q^{-1} + 248 q^2 +
/// 4124 q^5 + ...`. Only the diagonal grading words survive, and on them
/// the cyclic trace substitutes `q -> q^3` into one tensor factor.
pub fn char_3c(trunc: i64) -> Result<QSeries, Error> {
    char_3c_direct(trunc)
}

/// Direct route: iterate the assembly rows, keep the diagonal shapes,
/// and triple the grading of each length-16 constituent.
pub fn char_3c_direct(trunc: i64) -> Result<QSeries, Error> {
    let inner_trunc = trunc / 3 + DENOM;
    let basis = CharBasis::new(inner_trunc, 16);
    let rows = assembly_table()?;
    let mut acc = QSeries::zero(trunc + DENOM);
    for row in &rows {
        if row.shape != TripleShape::Diagonal {
            // the induced cosets of a non-diagonal word are permuted
            // without fixed points; no trace contribution
            continue;
        }
        let d = v_e8_descriptor(&row.parts[0].0)?;
        let ch = descriptor_char(&d, &basis)?;
        acc = acc.add(&ch.substitute_power(3));
    }
    Ok(acc.shift(-DENOM))
}

/// Substitution route: the whole E8 character, graded like the
/// J-function (`q^{-1/3}` prefactor), with `q -> q^3`.
pub fn char_3c_substituted(trunc: i64) -> Result<QSeries, Error> {
    let inner_trunc = trunc / 3 + DENOM;
    let e8 = e8_char(inner_trunc);
    Ok(e8.shift(-DENOM / 3).substitute_power(3))
}

/// Exact count of weight-one states of the series module for index `n`;
/// the construction makes it vanish for every `n`.
pub fn series_weight_one(n: usize) -> Result<BigUint, Error> {
    let (small, large) = series_codes(n)?;
    let blocks = 2 * n + 1;
    // contribution of the zero grading word: weight-2 words of the code
    let we_small = WeightEnumerator::of_code(&small);
    let we_large = we_small.macwilliams(small.dim())?;
    let mut total = we_large.count(2).clone();
    // contribution of the single-block grading words: a twisted code
    // block pattern must itself lie in the large code
    let xi1_block = |block: usize| -> Word {
        Word::unit(16 * blocks, 16 * block)
    };
    for j in 0..blocks {
        let mut pattern = Word::zeros(16 * blocks);
        for i in 0..blocks {
            if i != j {
                pattern.xor_in_place(&xi1_block(i));
            }
        }
        if large.contains(&pattern) {
            total += BigUint::from(8u32);
        }
    }
    Ok(total)
}
