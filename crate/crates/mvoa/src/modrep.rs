//! The label algebra of irreducible modules over tensor powers of the
//! Ising model and over code vertex algebras.
//!
//! An irreducible module over `L(1/2,0)^{⊗n}` is a tensor product of the
//! three Ising modules with lowest weights `0`, `1/2`, `1/16`; its
//! tau-word marks the `1/16` positions. Modules over a code vertex
//! algebra restrict to sums of such tensor products, and for character
//! purposes a module is pinned down by a descriptor: the tau-word, a
//! coset of half-patterns on the complementary coordinates, and a
//! power-of-two multiplicity coming from the irreducible representation
//! of the twisted group algebra on the tau support.

use num_bigint::BigUint;
use num_traits::One;

use crate::cocycle::{epsilon, Sign};
use crate::error::Error;
use crate::gf2::{standard_code, Code, StandardCode, Word};

/// Lowest weight of an irreducible Ising module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ising {
    /// `L(1/2, 0)`
    Vacuum,
    /// `L(1/2, 1/2)`
    Half,
    /// `L(1/2, 1/16)`
    Sixteenth,
}

impl Ising {
    /// Lowest conformal weight as an exponent numerator over 48.
    pub fn weight_48(self) -> i64 {
        match self {
            Ising::Vacuum => 0,
            Ising::Half => 24,
            Ising::Sixteenth => 3,
        }
    }
}

/// Fusion of two Ising labels: the vacuum is the identity,
/// `1/2 x 1/2 = 0`, `1/2 x 1/16 = 1/16`, and
/// `1/16 x 1/16 = 0 + 1/2`.
pub fn fuse_ising(a: Ising, b: Ising) -> Vec<Ising> {
    use Ising::*;
    match (a, b) {
        (Vacuum, x) | (x, Vacuum) => vec![x],
        (Half, Half) => vec![Vacuum],
        (Half, Sixteenth) | (Sixteenth, Half) => vec![Sixteenth],
        (Sixteenth, Sixteenth) => vec![Vacuum, Half],
    }
}

/// A tensor product label, one Ising factor per coordinate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorLabel {
    pub factors: Vec<Ising>,
}

impl TensorLabel {
    pub fn new(factors: Vec<Ising>) -> Self {
        TensorLabel { factors }
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The tau-word: bit `i` set exactly when factor `i` is the `1/16`
    /// module.
    pub fn tau_word(&self) -> Word {
        let mut w = Word::zeros(self.factors.len());
        for (i, f) in self.factors.iter().enumerate() {
            if *f == Ising::Sixteenth {
                w.set(i, true);
            }
        }
        w
    }

    /// All constituents of the componentwise fusion with another label.
    pub fn fuse(&self, other: &TensorLabel) -> Vec<TensorLabel> {
        assert_eq!(self.len(), other.len(), "label length mismatch");
        let mut out = vec![Vec::with_capacity(self.len())];
        for (a, b) in self.factors.iter().zip(&other.factors) {
            let choices = fuse_ising(*a, *b);
            let mut next = Vec::with_capacity(out.len() * choices.len());
            for prefix in &out {
                for c in &choices {
                    let mut p = prefix.clone();
                    p.push(*c);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter().map(TensorLabel::new).collect()
    }
}

/// Which of the two module families over the Hamming-code vertex algebra
/// a label belongs to: coset modules (tau-word zero) or the `1/16`-type
/// modules (tau-word all ones).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HammingKind {
    Half,
    Sixteenth,
}

/// An irreducible module label `H(1/2, a)` or `H(1/16, a)`; the word is
/// stored reduced modulo the Hamming code, since labels differing by a
/// codeword are isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HammingLabel {
    pub kind: HammingKind,
    word: Word,
}

/// The two frame changes of the Hamming-code vertex algebra, mapping
/// labels with respect to the standard coordinate frame to labels with
/// respect to the other two frames.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrameSwitch {
    EToD,
    EToF,
}

fn hamming8() -> Code {
    standard_code(&StandardCode::Hamming8).expect("Hamming code construction cannot fail")
}

impl HammingLabel {
    pub fn new(kind: HammingKind, word: Word) -> Self {
        assert_eq!(word.len(), 8, "Hamming labels live on 8 coordinates");
        let reduced = hamming8().reduce(&word);
        HammingLabel { kind, word: reduced }
    }

    pub fn identity() -> Self {
        HammingLabel::new(HammingKind::Half, Word::zeros(8))
    }

    /// Canonical coset representative of the label word.
    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Fusion: kinds multiply (`1/16 x 1/16` lands in the coset family),
    /// words add modulo the Hamming code.
    pub fn fuse(&self, other: &HammingLabel) -> HammingLabel {
        use HammingKind::*;
        let kind = match (self.kind, other.kind) {
            (Half, Half) | (Sixteenth, Sixteenth) => Half,
            _ => Sixteenth,
        };
        HammingLabel::new(kind, self.word.xor(&other.word))
    }

    /// Apply a frame change. Defined on the orbit of the four base
    /// labels (word 0 or `xi_1` modulo the Hamming code) and extended
    /// multiplicatively; anything else is rejected.
    pub fn frame_switch(&self, switch: FrameSwitch) -> Result<HammingLabel, Error> {
        let h8 = hamming8();
        let xi1 = Word::unit(8, 0);
        let word_is_zero = self.word.is_zero();
        let word_is_xi1 = h8.reduce(&self.word.xor(&xi1)).is_zero();
        if !word_is_zero && !word_is_xi1 {
            return Err(Error::UnsupportedLabel(format!(
                "frame switching is defined only on words in H8 or xi_1 + H8, got {}",
                self.word
            )));
        }
        // the switch fixes H(1/2, 0) and permutes the other three labels
        // of the Klein four-group cyclically
        use HammingKind::*;
        let table_e_to_d = |kind: HammingKind, xi: bool| -> (HammingKind, bool) {
            match (kind, xi) {
                (Half, false) => (Half, false),
                (Half, true) => (Sixteenth, false),
                (Sixteenth, false) => (Sixteenth, true),
                (Sixteenth, true) => (Half, true),
            }
        };
        let (kind, xi) = match switch {
            FrameSwitch::EToD => table_e_to_d(self.kind, word_is_xi1),
            FrameSwitch::EToF => {
                // inverse of the d-switch: apply it twice
                let once = table_e_to_d(self.kind, word_is_xi1);
                table_e_to_d(once.0, once.1)
            }
        };
        let word = if xi { xi1 } else { Word::zeros(8) };
        Ok(HammingLabel::new(kind, word))
    }
}

/// A sign character of the twisted group algebra of a code: a sign for
/// each basis word, extended multiplicatively through the cocycle with
/// `-e^0` acting as `-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepCharacter {
    base: Code,
    signs: Vec<Sign>,
}

impl RepCharacter {
    /// The character with the given sign on each reduced-basis word.
    pub fn new(base: Code, signs: Vec<Sign>) -> Self {
        assert_eq!(signs.len(), base.dim());
        RepCharacter { base, signs }
    }

    pub fn trivial(base: Code) -> Self {
        let signs = vec![Sign::Plus; base.dim()];
        RepCharacter { base, signs }
    }

    pub fn base(&self) -> &Code {
        &self.base
    }

    pub fn basis_signs(&self) -> &[Sign] {
        &self.signs
    }

    /// Value on `e^w` for a codeword `w`, via the basis expansion and the
    /// cocycle correction `e^{b_1} ... e^{b_k} = eps * e^w`.
    pub fn value(&self, w: &Word) -> Result<Sign, Error> {
        if !self.base.contains(w) {
            return Err(Error::Domain("word outside the base code".into()));
        }
        let mut acc_word = Word::zeros(w.len());
        let mut acc_sign = Sign::Plus;
        for ((b, &p), s) in self
            .base
            .basis()
            .iter()
            .zip(self.base.pivots())
            .zip(&self.signs)
        {
            // in reduced echelon form, w uses row b exactly when w has a 1
            // in b's pivot column
            if w.get(p) {
                acc_sign = acc_sign.mul(*s).mul(epsilon(&acc_word, b));
                acc_word.xor_in_place(b);
            }
        }
        debug_assert_eq!(acc_word, *w);
        Ok(acc_sign)
    }

    /// Twist by a word: multiplies the value on `e^b` by `(-1)^{<a,b>}`.
    pub fn sigma_twist(&self, a: &Word) -> RepCharacter {
        let signs = self
            .base
            .basis()
            .iter()
            .zip(&self.signs)
            .map(|(b, s)| if a.dot(b) { s.negate() } else { *s })
            .collect();
        RepCharacter {
            base: self.base.clone(),
            signs,
        }
    }
}

/// Character-level data of a module over a code vertex algebra, as a
/// module over the coordinate Virasoro frame: the tau-word, the coset of
/// half-patterns on the complementary coordinates, and the multiplicity.
#[derive(Clone, Debug)]
pub struct Descriptor {
    ambient: usize,
    tau: Word,
    /// Coordinates outside the tau support, ascending.
    complement: Vec<usize>,
    /// Code of half-pattern shifts, on the complement coordinates.
    gamma_code: Code,
    /// Offset of the half-pattern coset, on the complement coordinates.
    gamma_offset: Word,
    /// Multiplicity of each irreducible constituent (a power of two).
    mult: BigUint,
}

impl Descriptor {
    pub fn new(
        ambient: usize,
        tau: Word,
        gamma_code: Code,
        gamma_offset: Word,
        mult: BigUint,
    ) -> Self {
        assert_eq!(tau.len(), ambient);
        let complement: Vec<usize> = (0..ambient).filter(|&i| !tau.get(i)).collect();
        assert_eq!(gamma_code.len(), complement.len());
        assert_eq!(gamma_offset.len(), complement.len());
        Descriptor {
            ambient,
            tau,
            complement,
            gamma_code,
            gamma_offset,
            mult,
        }
    }

    /// The descriptor of the code vertex algebra itself: tau zero, the
    /// code as its own half-pattern set, multiplicity one.
    pub fn of_code(code: &Code) -> Descriptor {
        Descriptor::new(
            code.len(),
            Word::zeros(code.len()),
            code.clone(),
            Word::zeros(code.len()),
            BigUint::one(),
        )
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn tau(&self) -> &Word {
        &self.tau
    }

    pub fn complement_coords(&self) -> &[usize] {
        &self.complement
    }

    pub fn gamma_code(&self) -> &Code {
        &self.gamma_code
    }

    pub fn gamma_offset(&self) -> &Word {
        &self.gamma_offset
    }

    pub fn mult(&self) -> &BigUint {
        &self.mult
    }

    /// Fuse with the coset module of a word: bits on the tau support are
    /// absorbed, bits on the complement shift the half-pattern offset.
    pub fn coset_fuse(&self, shift: &Word) -> Descriptor {
        assert_eq!(shift.len(), self.ambient, "word length mismatch");
        let restricted = shift.restrict(&self.complement);
        Descriptor {
            gamma_offset: self.gamma_offset.xor(&restricted),
            ..self.clone()
        }
    }

    /// Tensor product: coordinates concatenate, half-pattern data takes
    /// the direct sum, multiplicities multiply.
    pub fn tensor(parts: &[Descriptor]) -> Descriptor {
        let ambient = parts.iter().map(|d| d.ambient).sum();
        let mut tau = Word::zeros(ambient);
        let mut offset_bits = Vec::new();
        let mut gamma_gens: Vec<Word> = Vec::new();
        let mut mult = BigUint::one();
        let total_complement: usize = parts.iter().map(|d| d.complement.len()).sum();
        let mut base_coord = 0usize;
        let mut base_comp = 0usize;
        for d in parts {
            for i in 0..d.ambient {
                if d.tau.get(i) {
                    tau.set(base_coord + i, true);
                }
            }
            for g in d.gamma_code.basis() {
                let mut w = Word::zeros(total_complement);
                for j in 0..g.len() {
                    if g.get(j) {
                        w.set(base_comp + j, true);
                    }
                }
                gamma_gens.push(w);
            }
            for j in 0..d.gamma_offset.len() {
                offset_bits.push(d.gamma_offset.get(j));
            }
            mult *= &d.mult;
            base_coord += d.ambient;
            base_comp += d.complement.len();
        }
        let mut offset = Word::zeros(total_complement);
        for (j, bit) in offset_bits.into_iter().enumerate() {
            if bit {
                offset.set(j, true);
            }
        }
        Descriptor::new(
            ambient,
            tau,
            Code::from_generators(total_complement, gamma_gens),
            offset,
            mult,
        )
    }

    /// Induction along a code extension `sub ⊆ sup` (both in the ambient
    /// coordinates): one coset-fused descriptor per coset representative,
    /// in graded lexicographic order.
    pub fn induce(&self, sub: &Code, sup: &Code) -> Result<Vec<Descriptor>, Error> {
        if sub.len() != self.ambient || sup.len() != self.ambient {
            return Err(Error::Domain("code length mismatch".into()));
        }
        if !sub.is_subcode_of(sup) {
            return Err(Error::Domain("induction needs a subcode".into()));
        }
        let reps = sup.coset_reps_mod(sub)?;
        Ok(reps.iter().map(|mu| self.coset_fuse(mu)).collect())
    }

    /// JSON form: `{tau, gamma_gens, gamma_offset, mult}` with words as
    /// bit strings and the multiplicity as a decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "tau": self.tau.bit_string(),
            "gamma_gens": self
                .gamma_code
                .basis()
                .iter()
                .map(|b| b.bit_string())
                .collect::<Vec<_>>(),
            "gamma_offset": self.gamma_offset.bit_string(),
            "mult": self.mult.to_string(),
        })
    }

    /// Two descriptors with the same tau-word and equal half-pattern
    /// cosets have identical characters.
    pub fn same_character_class(&self, other: &Descriptor) -> bool {
        self.ambient == other.ambient
            && self.tau == other.tau
            && self.mult == other.mult
            && self.gamma_code.same_code(&other.gamma_code)
            && self
                .gamma_code
                .reduce(&self.gamma_offset.xor(&other.gamma_offset))
                .is_zero()
    }
}

/// Multiplicity of each irreducible constituent of a module whose tau
/// support subcode is `c_mu`: the dimension `2^{(dim - dim radical)/2}`
/// of an irreducible representation of the twisted group algebra with
/// `-e^0` acting as `-1`.
pub fn tau_multiplicity(c_mu: &Code) -> BigUint {
    let k = c_mu.dim();
    let r = c_mu.radical().dim();
    debug_assert_eq!((k - r) % 2, 0, "Gram rank over GF(2) is even");
    BigUint::one() << ((k - r) / 2)
}

/// Descriptor of the `tau = alpha` summand of the E8 lattice vertex
/// algebra over its length-16 frame, for `alpha` in the dual pair's small
/// code. The half-pattern coset is the projection of the large code to
/// the complementary coordinates, with offset parity fixed by integrality
/// of the grading.
pub fn v_e8_descriptor(alpha: &Word) -> Result<Descriptor, Error> {
    let (s_e8, d_e8) = crate::mooncodes::e8_codes();
    if alpha.len() != 16 || !s_e8.contains(alpha) {
        return Err(Error::Domain("tau word must lie in the length-16 dual code".into()));
    }
    descriptor_over_code(alpha, &d_e8)
}

/// General form of the E8 construction: tau-word `alpha`, half-patterns
/// from projecting `code` off the tau support, multiplicity from the
/// support subcode, offset parity chosen so all graded weights are
/// integral.
pub fn descriptor_over_code(alpha: &Word, code: &Code) -> Result<Descriptor, Error> {
    if alpha.len() != code.len() {
        return Err(Error::Domain("word length mismatch".into()));
    }
    let c_mu = code.support_subcode(alpha);
    let mult = tau_multiplicity(&c_mu);
    let complement: Vec<usize> = (0..code.len()).filter(|&i| !alpha.get(i)).collect();
    let gamma_code = code.project(&complement);
    // weight of a constituent = wt(tau)/16 + |half pattern|/2 + integers;
    // the offset parity must make this integral
    let tau_part_twice = alpha.weight() % 16; // 2*wt(tau)/16 mod 2 scaled by 8
    let odd_offset = match tau_part_twice {
        0 => false,
        8 => true,
        _ => {
            return Err(Error::Domain(
                "tau weight must be a multiple of 8 for an integral grading".into(),
            ))
        }
    };
    let mut offset = Word::zeros(complement.len());
    if odd_offset {
        if complement.is_empty() {
            return Err(Error::Domain("no complement coordinate to carry the offset".into()));
        }
        offset.set(0, true);
    }
    Ok(Descriptor::new(
        code.len(),
        alpha.clone(),
        gamma_code,
        offset,
        mult,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn tau_words() {
        use Ising::*;
        let l = TensorLabel::new(vec![Vacuum, Half, Sixteenth, Sixteenth]);
        assert_eq!(l.tau_word().bit_string(), "0011");
        let all0 = TensorLabel::new(vec![Vacuum; 5]);
        assert!(all0.tau_word().is_zero());
        let all16 = TensorLabel::new(vec![Sixteenth; 5]);
        assert_eq!(all16.tau_word().weight(), 5);
    }

    #[test]
    fn ising_fusion_table() {
        use Ising::*;
        assert_eq!(fuse_ising(Sixteenth, Sixteenth), vec![Vacuum, Half]);
        assert_eq!(fuse_ising(Vacuum, Half), vec![Half]);
        assert_eq!(fuse_ising(Half, Half), vec![Vacuum]);
        assert_eq!(fuse_ising(Half, Sixteenth), vec![Sixteenth]);
    }

    #[test]
    fn tau_additivity_exhaustive_small() {
        use Ising::*;
        let opts = [Vacuum, Half, Sixteenth];
        let n = 4;
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
            for b in &labels {
                let expected = a.tau_word().xor(&b.tau_word());
                for c in a.fuse(b) {
                    assert_eq!(c.tau_word(), expected);
                }
            }
        }
    }

    #[test]
    fn hamming_fusion_is_group_law() {
        let xi1 = Word::unit(8, 0);
        let a = HammingLabel::new(HammingKind::Sixteenth, xi1.clone());
        let b = HammingLabel::new(HammingKind::Sixteenth, Word::zeros(8));
        let c = a.fuse(&b);
        assert_eq!(c.kind, HammingKind::Half);
        assert_eq!(c, HammingLabel::new(HammingKind::Half, xi1));
        // identity
        let id = HammingLabel::identity();
        assert_eq!(a.fuse(&id), a);
        // every label squares to the identity
        assert_eq!(a.fuse(&a), id);
    }

    #[test]
    fn hamming_labels_reduce_mod_code() {
        // (1^8) lies in the code, so H(1/2, 1^8) is the identity label
        let l = HammingLabel::new(HammingKind::Half, Word::ones(8));
        assert_eq!(l, HammingLabel::identity());
    }

    #[test]
    fn frame_switch_table_rows() {
        let xi1 = Word::unit(8, 0);
        let half0 = HammingLabel::identity();
        let half1 = HammingLabel::new(HammingKind::Half, xi1.clone());
        let six0 = HammingLabel::new(HammingKind::Sixteenth, Word::zeros(8));
        let six1 = HammingLabel::new(HammingKind::Sixteenth, xi1);

        assert_eq!(half0.frame_switch(FrameSwitch::EToD).unwrap(), half0);
        assert_eq!(half1.frame_switch(FrameSwitch::EToD).unwrap(), six0);
        assert_eq!(six0.frame_switch(FrameSwitch::EToD).unwrap(), six1);
        assert_eq!(six1.frame_switch(FrameSwitch::EToD).unwrap(), half1);

        assert_eq!(half0.frame_switch(FrameSwitch::EToF).unwrap(), half0);
        assert_eq!(half1.frame_switch(FrameSwitch::EToF).unwrap(), six1);
        assert_eq!(six0.frame_switch(FrameSwitch::EToF).unwrap(), half1);
        assert_eq!(six1.frame_switch(FrameSwitch::EToF).unwrap(), six0);
    }

    #[test]
    fn frame_switch_three_times_is_identity() {
        let labels = [
            HammingLabel::identity(),
            HammingLabel::new(HammingKind::Half, Word::unit(8, 0)),
            HammingLabel::new(HammingKind::Sixteenth, Word::zeros(8)),
            HammingLabel::new(HammingKind::Sixteenth, Word::unit(8, 0)),
        ];
        for l in &labels {
            let mut x = l.clone();
            for _ in 0..3 {
                x = x.frame_switch(FrameSwitch::EToD).unwrap();
            }
            assert_eq!(&x, l);
        }
    }

    #[test]
    fn frame_switch_is_multiplicative_on_orbit() {
        let xi1 = Word::unit(8, 0);
        let orbit = [
            HammingLabel::identity(),
            HammingLabel::new(HammingKind::Half, xi1.clone()),
            HammingLabel::new(HammingKind::Sixteenth, Word::zeros(8)),
            HammingLabel::new(HammingKind::Sixteenth, xi1),
        ];
        for a in &orbit {
            for b in &orbit {
                let lhs = a.fuse(b).frame_switch(FrameSwitch::EToD).unwrap();
                let rhs = a
                    .frame_switch(FrameSwitch::EToD)
                    .unwrap()
                    .fuse(&b.frame_switch(FrameSwitch::EToD).unwrap());
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn frame_switch_rejects_labels_outside_orbit() {
        let w = Word::parse("11000000").unwrap();
        let l = HammingLabel::new(HammingKind::Half, w);
        assert!(l.frame_switch(FrameSwitch::EToD).is_err());
    }

    #[test]
    fn sigma_twist_is_involution() {
        let h8 = hamming8();
        let chi = RepCharacter::trivial(h8);
        let a = Word::parse("10100000").unwrap();
        let twisted = chi.sigma_twist(&a);
        assert_eq!(twisted.sigma_twist(&a), chi);
        // zero word twists trivially
        assert_eq!(chi.sigma_twist(&Word::zeros(8)), chi);
    }

    #[test]
    fn rep_character_extends_multiplicatively() {
        let h8 = hamming8();
        let chi = RepCharacter::trivial(h8.clone());
        // on the trivial character, the value on e^w is the cocycle sign
        // of assembling w from the reduced basis
        for w in h8.words() {
            let v = chi.value(&w).unwrap();
            let mut acc_word = Word::zeros(8);
            let mut acc_sign = Sign::Plus;
            for (b, &p) in h8.basis().iter().zip(h8.pivots()) {
                if w.get(p) {
                    acc_sign = acc_sign.mul(epsilon(&acc_word, b));
                    acc_word.xor_in_place(b);
                }
            }
            assert_eq!(v, acc_sign);
        }
    }

    #[test]
    fn e8_descriptor_multiplicities() {
        let (s_e8, _) = crate::mooncodes::e8_codes();
        let weight8: Vec<Word> = s_e8.words().filter(|w| w.weight() == 8).collect();
        assert_eq!(weight8.len(), 30);
        for alpha in &weight8 {
            let d = v_e8_descriptor(alpha).unwrap();
            assert_eq!(d.mult().to_u64().unwrap(), 1);
            assert_eq!(d.gamma_code().dim(), 7);
            assert_eq!(d.gamma_offset().weight() % 2, 1);
        }
        let all_ones = v_e8_descriptor(&Word::ones(16)).unwrap();
        assert_eq!(all_ones.mult().to_u64().unwrap(), 8);
        assert!(all_ones.complement_coords().is_empty());
        let zero = v_e8_descriptor(&Word::zeros(16)).unwrap();
        assert_eq!(zero.mult().to_u64().unwrap(), 1);
        assert_eq!(zero.gamma_code().dim(), 11);
    }

    #[test]
    fn e8_descriptor_rejects_outsiders() {
        assert!(v_e8_descriptor(&Word::unit(16, 3)).is_err());
    }

    #[test]
    fn descriptor_json_shape() {
        let d = v_e8_descriptor(&Word::ones(16)).unwrap();
        let v = d.to_json();
        assert_eq!(v["tau"], "1111111111111111");
        assert_eq!(v["mult"], "8");
        assert_eq!(v["gamma_offset"], "");
        let d0 = v_e8_descriptor(&Word::zeros(16)).unwrap();
        assert_eq!(d0.to_json()["gamma_gens"].as_array().unwrap().len(), 11);
    }

    #[test]
    fn coset_fuse_basics() {
        let d = v_e8_descriptor(&Word::from_pattern("1^8 0^8").unwrap()).unwrap();
        // fusing with zero changes nothing
        let z = d.coset_fuse(&Word::zeros(16));
        assert!(z.same_character_class(&d));
        // a shift supported inside the tau word is absorbed
        let inside = d.coset_fuse(&Word::unit(16, 0));
        assert!(inside.same_character_class(&d));
        // double fusing cancels
        let shift = Word::unit(16, 12);
        let twice = d.coset_fuse(&shift).coset_fuse(&shift);
        assert!(twice.same_character_class(&d));
        // a single shift moves the coset parity
        let once = d.coset_fuse(&shift);
        assert!(!once.same_character_class(&d));
    }

    #[test]
    fn tensor_concatenates() {
        let alpha = Word::from_pattern("1^8 0^8").unwrap();
        let d = v_e8_descriptor(&alpha).unwrap();
        let t = Descriptor::tensor(&[d.clone(), d.clone(), d.clone()]);
        assert_eq!(t.ambient(), 48);
        assert_eq!(t.mult().to_u64().unwrap(), 1);
        assert_eq!(t.tau().weight(), 24);
        assert_eq!(t.gamma_code().dim(), 21);
        // tensoring with a length-zero descriptor is the identity
        let empty = Descriptor::new(
            0,
            Word::zeros(0),
            Code::trivial(0),
            Word::zeros(0),
            BigUint::one(),
        );
        let same = Descriptor::tensor(&[d.clone(), empty]);
        assert!(same.same_character_class(&d));
    }

    #[test]
    fn induce_counts_cosets() {
        let (_, d_e8) = crate::mooncodes::e8_codes();
        let d = Descriptor::of_code(&d_e8);
        // induce along the trivial extension: a singleton
        let singleton = d.induce(&d_e8, &d_e8).unwrap();
        assert_eq!(singleton.len(), 1);
        // induce up to all even words: 2^{15-11} cosets
        let even = Code::even_all(16);
        let list = d.induce(&d_e8, &even).unwrap();
        assert_eq!(list.len(), 16);
        // non-subcode rejected
        assert!(d.induce(&even, &d_e8).is_err());
    }
}
