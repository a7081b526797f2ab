//! Truncated formal series in `q^{1/48}` with exact big-integer
//! coefficients.
//!
//! Every grading that appears downstream (conformal weights of the three
//! Ising modules, lattice theta exponents, the `q^{-1}` shift of the
//! J-function) is a multiple of `1/48`, so exponents are stored as
//! integer numerators over the fixed denominator 48. Series remember the
//! exponent up to which they are exact, and multiplication propagates
//! that bound through the lowest orders of each factor, so no low-order
//! term is ever silently dropped.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Fixed exponent denominator.
pub const DENOM: i64 = 48;

/// A truncated series `sum c_e q^{e/48}` with exact integer coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: BTreeMap<i64, BigInt>,
    /// Exponent numerators `<= trunc` are exact.
    trunc: i64,
}

impl QSeries {
    /// The zero series, exact through `trunc` (numerator over 48).
    pub fn zero(trunc: i64) -> Self {
        QSeries {
            coeffs: BTreeMap::new(),
            trunc,
        }
    }

    /// The constant series 1.
    pub fn one(trunc: i64) -> Self {
        QSeries::monomial(0, BigInt::one(), trunc)
    }

    /// A single term `c q^{exp/48}`.
    pub fn monomial(exp: i64, coeff: BigInt, trunc: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !coeff.is_zero() && exp <= trunc {
            coeffs.insert(exp, coeff);
        }
        QSeries { coeffs, trunc }
    }

    /// Exponent numerator bound through which this series is exact.
    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Coefficient at exponent numerator `exp` (over 48).
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.coeffs.get(&exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient at an integral power `q^k`.
    pub fn coeff_q(&self, k: i64) -> BigInt {
        self.coeff(k * DENOM)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_order(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn all_coeffs_nonnegative(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    fn insert(&mut self, exp: i64, coeff: BigInt) {
        if exp > self.trunc || coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, other: &QSeries) -> QSeries {
        let trunc = self.trunc.min(other.trunc);
        let mut out = QSeries::zero(trunc);
        for (e, c) in self.terms().chain(other.terms()) {
            out.insert(e, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &QSeries) -> QSeries {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, -c.clone())).collect(),
            trunc: self.trunc,
        }
    }

    pub fn scale(&self, factor: &BigInt) -> QSeries {
        if factor.is_zero() {
            return QSeries::zero(self.trunc);
        }
        QSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e, c * factor)).collect(),
            trunc: self.trunc,
        }
    }

    /// Multiply by `q^{exp/48}`.
    pub fn shift(&self, exp: i64) -> QSeries {
        QSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e + exp, c.clone())).collect(),
            trunc: self.trunc + exp,
        }
    }

    /// Truncated product. The result is exact through
    /// `min(a.trunc + ord(b), b.trunc + ord(a))`: a term of the product at
    /// exponent `e` only involves factors at exponents `e - ord(other)`
    /// and below, so nothing below the bound is lost.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let ord_a = self.min_order().unwrap_or(self.trunc);
        let ord_b = other.min_order().unwrap_or(other.trunc);
        let trunc = (self.trunc + ord_b).min(other.trunc + ord_a);
        let mut out = QSeries::zero(trunc);
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let e = ea + eb;
                if e > trunc {
                    break;
                }
                out.insert(e, ca * cb);
            }
        }
        out
    }

    /// Integer power by repeated multiplication.
    pub fn pow(&self, mut exp: u32) -> QSeries {
        let mut base = self.clone();
        let mut acc = QSeries::one(self.trunc);
        if exp == 0 {
            return acc;
        }
        loop {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp == 0 {
                break;
            }
            base = base.mul(&base);
        }
        acc
    }

    /// Substitute `q -> q^k`: exponents scale by `k`, exactness extends to
    /// `trunc * k`.
    pub fn substitute_power(&self, k: i64) -> QSeries {
        assert!(k >= 1);
        QSeries {
            coeffs: self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())).collect(),
            trunc: self.trunc * k,
        }
    }

    /// Multiplicative inverse of a series with constant term `±1`.
    /// Panics when the constant term is anything else.
    pub fn invert(&self) -> QSeries {
        let unit = self.coeff(0);
        assert!(
            (unit.clone().abs()).is_one() && self.min_order() == Some(0),
            "can only invert a series with constant term ±1"
        );
        let mut inv = QSeries::zero(self.trunc);
        inv.insert(0, unit.clone());
        // b_e = -unit * sum_{0 < k <= e} a_k b_{e-k}
        let positive: Vec<(i64, BigInt)> = self
            .terms()
            .filter(|(e, _)| *e > 0)
            .map(|(e, c)| (e, c.clone()))
            .collect();
        for e in 1..=self.trunc {
            let mut acc = BigInt::zero();
            for (k, a) in &positive {
                if *k > e {
                    break;
                }
                let b = inv.coeff(e - k);
                if !b.is_zero() {
                    acc += a * b;
                }
            }
            if !acc.is_zero() {
                inv.insert(e, -&unit * acc);
            }
        }
        inv
    }

    /// Division through the inverse; the divisor may start at a nonzero
    /// exponent as long as its lowest coefficient is `±1`.
    pub fn div(&self, other: &QSeries) -> QSeries {
        let ord = other.min_order().expect("division by zero series");
        let shifted = other.shift(-ord);
        self.mul(&shifted.invert()).shift(-ord)
    }

    /// Compare coefficients of two series through exponent `bound`.
    pub fn agrees_with(&self, other: &QSeries, bound: i64) -> bool {
        assert!(bound <= self.trunc && bound <= other.trunc);
        let mut exps: Vec<i64> = self
            .terms()
            .chain(other.terms())
            .map(|(e, _)| e)
            .filter(|&e| e <= bound)
            .collect();
        exps.sort_unstable();
        exps.dedup();
        exps.into_iter().all(|e| self.coeff(e) == other.coeff(e))
    }

    /// CSV rows `exp_num_over_48,coefficient`.
    pub fn to_csv(&self) -> String {
        let mut s = String::from("exp_num_over_48,coefficient\n");
        for (e, c) in self.terms() {
            s.push_str(&format!("{e},{c}\n"));
        }
        s
    }

    /// JSON-ready list of `[exponent numerator, decimal coefficient]`.
    pub fn to_pairs(&self) -> Vec<(i64, String)> {
        self.terms().map(|(e, c)| (e, c.to_string())).collect()
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "O(q^{}/48)", self.trunc + 1);
        }
        let mut first = true;
        for (e, c) in self.terms().take(12) {
            let (sign, mag) = if c.is_negative() {
                ("-", -c.clone())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let power = if e == 0 {
                String::new()
            } else if e % DENOM == 0 {
                format!("q^{}", e / DENOM)
            } else {
                format!("q^{{{e}/48}}")
            };
            if power.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{power}")?;
            } else {
                write!(f, "{mag}{power}")?;
            }
        }
        if self.num_terms() > 12 {
            write!(f, " + ...")?;
        }
        write!(f, " + O(q^{{{}/48}})", self.trunc + 1)
    }
}

impl fmt::Debug for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSeries[{self}]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(exp: i64, trunc: i64) -> QSeries {
        QSeries::monomial(exp, BigInt::one(), trunc)
    }

    #[test]
    fn product_tracks_low_order_truncation() {
        // a is exact through q^2, b starts at q^3: the product must be
        // exact through q^5, not just q^2
        let a = QSeries::one(2 * DENOM).add(&q(DENOM, 2 * DENOM));
        let b = q(3 * DENOM, 10 * DENOM);
        let p = a.mul(&b);
        assert_eq!(p.trunc(), 5 * DENOM);
        assert_eq!(p.coeff_q(3), BigInt::one());
        assert_eq!(p.coeff_q(4), BigInt::one());
    }

    #[test]
    fn inverse_of_eta_like_product() {
        let trunc = 6 * DENOM;
        // 1 - q
        let a = QSeries::one(trunc).sub(&q(DENOM, trunc));
        let inv = a.invert();
        for k in 0..=6 {
            assert_eq!(inv.coeff_q(k), BigInt::one());
        }
        let product = a.mul(&inv);
        assert!(product.agrees_with(&QSeries::one(trunc), trunc));
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let trunc = 4 * DENOM;
        let a = QSeries::one(trunc).add(&q(24, trunc)).add(&q(DENOM, trunc));
        let mut by_mul = QSeries::one(trunc);
        for _ in 0..5 {
            by_mul = by_mul.mul(&a);
        }
        assert_eq!(a.pow(5), by_mul);
    }

    #[test]
    fn substitution_scales_exponents() {
        let a = q(24, 2 * DENOM); // q^{1/2}
        let b = a.substitute_power(3);
        assert_eq!(b.coeff(72), BigInt::one());
        assert_eq!(b.trunc(), 6 * DENOM);
    }

    #[test]
    fn division_with_shifted_divisor() {
        let trunc = 5 * DENOM;
        // (q^2 + q^3)/(q) = q + q^2
        let num = q(2 * DENOM, trunc).add(&q(3 * DENOM, trunc));
        let den = q(DENOM, trunc);
        let quot = num.div(&den);
        assert_eq!(quot.coeff_q(1), BigInt::one());
        assert_eq!(quot.coeff_q(2), BigInt::one());
    }
}
