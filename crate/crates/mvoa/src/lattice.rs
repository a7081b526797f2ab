//! Rational lattices with quarter-integer coordinates over an
//! orthonormal frame: the four length-16-compatible E8 presentations,
//! exact evenness and determinant checks, theta series by coset
//! enumeration, tau-code extraction over the frame of doubled conformal
//! vectors, and the inner-product geometry of central-charge-1/2
//! conformal vectors with the 1/12 bound.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::cocycle::Sign;
use crate::error::Error;
use crate::gf2::{Code, Word};
use crate::qseries::{QSeries, DENOM};

pub type Rat = Ratio<i64>;

/// A full-rank lattice given by generators with coordinates in `(1/4)Z`
/// over an orthonormal basis. A triangular basis is computed on
/// construction; all arithmetic is exact.
#[derive(Clone, Debug)]
pub struct Lattice {
    rank: usize,
    /// Triangular integer basis of the lattice scaled by 4.
    scaled_basis: Vec<Vec<i128>>,
}

impl Lattice {
    /// Build from generator rows; every coordinate must have denominator
    /// dividing 4 and the span must have full rank.
    pub fn from_generators(rank: usize, generators: &[Vec<Rat>]) -> Result<Lattice, Error> {
        let mut rows: Vec<Vec<i128>> = Vec::with_capacity(generators.len());
        for g in generators {
            if g.len() != rank {
                return Err(Error::Domain("generator rank mismatch".into()));
            }
            let mut row = Vec::with_capacity(rank);
            for x in g {
                let scaled = x * Rat::from_integer(4);
                if !scaled.is_integer() {
                    return Err(Error::Domain(
                        "lattice coordinates must have denominator dividing 4".into(),
                    ));
                }
                row.push(*scaled.numer() as i128);
            }
            rows.push(row);
        }
        let basis = integer_row_echelon(rank, rows);
        if basis.len() != rank {
            return Err(Error::Domain("generators do not span full rank".into()));
        }
        Ok(Lattice {
            rank,
            scaled_basis: basis,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Basis rows in lattice coordinates (unscaled rationals).
    pub fn basis(&self) -> Vec<Vec<Rat>> {
        self.scaled_basis
            .iter()
            .map(|row| row.iter().map(|&x| Rat::new(x as i64, 4)).collect())
            .collect()
    }

    /// Gram matrix of the basis.
    pub fn gram(&self) -> Vec<Vec<Rat>> {
        let b = self.basis();
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| dot(&b[i], &b[j])).collect())
            .collect()
    }

    /// Exact determinant of the Gram matrix.
    pub fn gram_det(&self) -> Rat {
        // det(gram) = (det basis)^2; the scaled basis is triangular
        let mut det_scaled = BigInt::one();
        for (i, row) in self.scaled_basis.iter().enumerate() {
            let pivot = row
                .iter()
                .enumerate()
                .find(|(_, &x)| x != 0)
                .map(|(j, _)| j)
                .unwrap_or(i);
            det_scaled *= BigInt::from(row[pivot]);
        }
        // unscale: each row carried a factor of 4
        let num = &det_scaled * &det_scaled;
        let den = BigInt::from(4u32).pow(2 * self.rank as u32);
        big_ratio_to_rat(num, den)
    }

    /// Membership by triangular back-substitution on the scaled basis.
    pub fn contains(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.rank);
        let mut target: Vec<i128> = Vec::with_capacity(self.rank);
        for x in v {
            let scaled = x * Rat::from_integer(4);
            if !scaled.is_integer() {
                return false;
            }
            target.push(*scaled.numer() as i128);
        }
        for row in &self.scaled_basis {
            let pivot = row.iter().position(|&x| x != 0).expect("full rank basis");
            if target[pivot] % row[pivot] != 0 {
                return false;
            }
            let q = target[pivot] / row[pivot];
            for (t, &r) in target.iter_mut().zip(row) {
                *t -= q * r;
            }
        }
        target.iter().all(|&x| x == 0)
    }

    /// Evenness, exact determinant, and unimodularity.
    pub fn classify(&self) -> LatticeClass {
        let b = self.basis();
        let mut even = true;
        for i in 0..self.rank {
            let norm = dot(&b[i], &b[i]);
            if !norm.is_integer() || norm.numer() % 2 != 0 {
                even = false;
            }
            for j in 0..i {
                if !dot(&b[i], &b[j]).is_integer() {
                    even = false;
                }
            }
        }
        let det = self.gram_det();
        LatticeClass {
            even,
            det,
            unimodular: det == Rat::one(),
        }
    }

    /// Residues of the lattice modulo `c * Z^rank`, as scaled-by-4
    /// integer vectors with coordinates in `[0, 4c)`. Requires
    /// `c * Z^rank` to be a sublattice.
    fn residues_mod(&self, c: i128) -> Result<Vec<Vec<i128>>, Error> {
        for i in 0..self.rank {
            let mut e = vec![Rat::zero(); self.rank];
            e[i] = Rat::from_integer(c as i64);
            if !self.contains(&e) {
                return Err(Error::Domain(format!(
                    "lattice does not contain {c} times the orthonormal frame"
                )));
            }
        }
        let modulus = 4 * c;
        let mut seen = std::collections::HashSet::new();
        let zero = vec![0i128; self.rank];
        seen.insert(zero.clone());
        let mut queue = vec![zero];
        while let Some(v) = queue.pop() {
            for row in &self.scaled_basis {
                let next: Vec<i128> = v
                    .iter()
                    .zip(row)
                    .map(|(a, b)| (a + b).rem_euclid(modulus))
                    .collect();
                if seen.insert(next.clone()) {
                    queue.push(next);
                }
            }
        }
        let mut out: Vec<Vec<i128>> = seen.into_iter().collect();
        out.sort();
        Ok(out)
    }

    /// Theta series through weight `order`: the coefficient of `q^k`
    /// counts lattice vectors of squared length `2k`.
    pub fn theta_series(&self, order: i64) -> Result<QSeries, Error> {
        let c: i128 = [1, 2, 4, 8]
            .into_iter()
            .find(|&c| {
                (0..self.rank).all(|i| {
                    let mut e = vec![Rat::zero(); self.rank];
                    e[i] = Rat::from_integer(c as i64);
                    self.contains(&e)
                })
            })
            .ok_or_else(|| Error::Domain("no scaled frame inside the lattice".into()))?;
        let residues = self.residues_mod(c)?;
        let max_norm = 2 * order; // squared length bound
        // exponents in 1/16 of a squared length: (k/4)^2 = k^2/16
        let bound16 = (16 * max_norm) as i128;
        let step = 4 * c;
        let mut total = vec![BigInt::zero(); bound16 as usize + 1];
        for residue in &residues {
            // per-coordinate squared-length polynomials, convolved
            let mut acc = vec![BigInt::zero(); bound16 as usize + 1];
            acc[0] = BigInt::one();
            for &r in residue {
                let mut single: Vec<(usize, u32)> = Vec::new();
                let push = |sq: i128, single: &mut Vec<(usize, u32)>| {
                    let key = sq as usize;
                    if let Some(entry) = single.iter_mut().find(|(k, _)| *k == key) {
                        entry.1 += 1;
                    } else {
                        single.push((key, 1));
                    }
                };
                // values r + step*k within |x| bound
                let mut x = r;
                while x * x <= bound16 {
                    push(x * x, &mut single);
                    x += step;
                }
                let mut x = r - step;
                while x * x <= bound16 {
                    push(x * x, &mut single);
                    x -= step;
                }
                let mut next = vec![BigInt::zero(); bound16 as usize + 1];
                for (i, a) in acc.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for &(j, s) in &single {
                        if i + j > bound16 as usize {
                            continue;
                        }
                        next[i + j] += a * s;
                    }
                }
                acc = next;
            }
            for (i, a) in acc.into_iter().enumerate() {
                total[i] += a;
            }
        }
        // squared length = idx/16; weight = squared length / 2 = idx/32
        let mut series = QSeries::zero(order * DENOM);
        for (idx, count) in total.into_iter().enumerate() {
            if count.is_zero() {
                continue;
            }
            let idx = idx as i64;
            if (idx * DENOM) % 32 != 0 {
                return Err(Error::Inconsistent(
                    "theta exponent outside the 1/48 grid".into(),
                ));
            }
            let exp = idx * DENOM / 32;
            if exp <= order * DENOM {
                series = series.add(&QSeries::monomial(exp, count, order * DENOM));
            }
        }
        Ok(series)
    }

    /// The tau-words of the lattice cosets over the frame of doubled
    /// conformal vectors: coordinate pair `(2i, 2i+1)` is set exactly
    /// when the `i`-th coordinate of the coset is a half-odd integer.
    /// Returns the resulting doubled code of length `2 * rank`.
    pub fn frame_tau_code(&self) -> Result<Code, Error> {
        let residues = self.residues_mod(2)?;
        let mut words = Vec::new();
        for residue in &residues {
            let mut w = Word::zeros(2 * self.rank);
            for (i, &r) in residue.iter().enumerate() {
                // scaled by 4: half-odd coordinates are 2 mod 4
                if r.rem_euclid(4) == 2 {
                    w.set(2 * i, true);
                    w.set(2 * i + 1, true);
                } else if r.rem_euclid(2) != 0 {
                    return Err(Error::Inconsistent(
                        "coset coordinate with denominator 4 has no frame tau-word".into(),
                    ));
                }
            }
            words.push(w);
        }
        // the image of a group homomorphism is linear; verify closure
        let code = Code::from_generators(2 * self.rank, words.clone());
        for w in &words {
            if !code.contains(w) {
                return Err(Error::Inconsistent("tau-word set is not closed".into()));
            }
        }
        let mut count = 0u64;
        for w in code.words() {
            if words.contains(&w) {
                count += 1;
            }
        }
        if count != 1u64 << code.dim() {
            return Err(Error::Inconsistent("tau-word set is not a full code".into()));
        }
        Ok(code)
    }

    /// All vectors of squared length 4, one representative per `±` pair.
    pub fn norm_four_vectors(&self) -> Result<Vec<Vec<Rat>>, Error> {
        let residues = self.residues_mod(2)?;
        let step = 8i128; // scaled by 4, modulus 2 -> 8
        let mut out = Vec::new();
        let target = 64i128; // |4v|^2 for |v|^2 = 4
        for residue in &residues {
            let mut coords = vec![0i128; self.rank];
            enumerate_norm(residue, step, target, 0, &mut coords, &mut out);
        }
        // keep one representative of each ± pair: first nonzero positive
        let mut reps = Vec::new();
        for v in out {
            let first = v.iter().find(|&&x| x != 0).copied().unwrap_or(0);
            if first > 0 {
                reps.push(v.iter().map(|&x| Rat::new(x as i64, 4)).collect());
            }
        }
        reps.sort();
        reps.dedup();
        Ok(reps)
    }
}

fn enumerate_norm(
    residue: &[i128],
    step: i128,
    remaining: i128,
    idx: usize,
    coords: &mut Vec<i128>,
    out: &mut Vec<Vec<i128>>,
) {
    if idx == residue.len() {
        if remaining == 0 {
            out.push(coords.clone());
        }
        return;
    }
    // x ≡ residue[idx] (mod step), x^2 <= remaining
    let r = residue[idx];
    let mut x = r;
    while x * x <= remaining {
        coords[idx] = x;
        enumerate_norm(residue, step, remaining - x * x, idx + 1, coords, out);
        x += step;
    }
    let mut x = r - step;
    while x * x <= remaining {
        coords[idx] = x;
        enumerate_norm(residue, step, remaining - x * x, idx + 1, coords, out);
        x -= step;
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeClass {
    pub even: bool,
    pub det: Rat,
    pub unimodular: bool,
}

/// The four presentations of the E8 lattice whose frame tau-codes
/// realize the successive steps of the orbifold chain.
pub fn e8_variant(m: usize) -> Result<Lattice, Error> {
    let half = Rat::new(1, 2);
    let one = Rat::one();
    let rank = 8;
    let mut gens: Vec<Vec<Rat>> = Vec::new();
    let vec_from = |entries: &[(usize, Rat)]| {
        let mut v = vec![Rat::zero(); rank];
        for &(i, x) in entries {
            v[i] = x;
        }
        v
    };
    match m {
        1 => {
            gens.push(vec![half; 8]);
            for i in 0..8 {
                for j in (i + 1)..8 {
                    gens.push(vec_from(&[(i, one), (j, one)]));
                    gens.push(vec_from(&[(i, one), (j, -one)]));
                }
            }
        }
        2 => {
            gens.push(vec_from(&[(0, half), (1, -half), (2, -half), (3, -half), (4, one)]));
            gens.push(vec_from(&[(4, half), (5, half), (6, half), (7, half), (0, one)]));
            for block in [[0usize, 1, 2, 3], [4, 5, 6, 7]] {
                for a in 0..4 {
                    for b in (a + 1)..4 {
                        gens.push(vec_from(&[(block[a], one), (block[b], one)]));
                        gens.push(vec_from(&[(block[a], one), (block[b], -one)]));
                    }
                }
            }
        }
        3 | 4 => {
            // glue construction: the half-support patterns of the glue
            // vectors must generate the halved chain-step code, the
            // integer part is the preimage of that code's dual, and the
            // integer corrections make all norms even and all pairings
            // integral
            let patterns: &[(&[usize], usize)] = if m == 3 {
                // (pattern, unit correction); plus the half-all vector
                &[(&[0, 1, 2, 3], 4), (&[0, 1, 4, 5], 6)]
            } else {
                &[(&[0, 1, 2, 3], 4), (&[0, 1, 4, 5], 6), (&[0, 2, 4, 6], 7)]
            };
            // half-all glue with a correction on the common coordinate
            let mut g0 = vec![half; 8];
            g0[0] += one;
            gens.push(g0);
            let mut pattern_words = vec![crate::gf2::Word::ones(8)];
            for &(pattern, correction) in patterns {
                let mut g = vec![Rat::zero(); 8];
                for &i in pattern {
                    g[i] = half;
                }
                g[correction] += one;
                gens.push(g);
                pattern_words.push(crate::gf2::Word::from_support(8, pattern));
            }
            // integer part: vectors whose mod-2 pattern is orthogonal to
            // every glue pattern
            let pattern_code = crate::gf2::Code::from_generators(8, pattern_words);
            for b in pattern_code.dual().basis() {
                gens.push((0..8).map(|i| if b.get(i) { one } else { Rat::zero() }).collect());
            }
            for i in 0..8 {
                gens.push(vec_from(&[(i, Rat::from_integer(2))]));
            }
        }
        _ => {
            return Err(Error::Domain(format!(
                "E8 presentation index must be 1..=4, got {m}"
            )))
        }
    }
    Lattice::from_generators(rank, &gens)
}

/// The frame lattice `2 Z^rank`.
pub fn frame_lattice(rank: usize) -> Lattice {
    let gens: Vec<Vec<Rat>> = (0..rank)
        .map(|i| {
            let mut v = vec![Rat::zero(); rank];
            v[i] = Rat::from_integer(2);
            v
        })
        .collect();
    Lattice::from_generators(rank, &gens).expect("diagonal lattice")
}

/// The integer lattice `Z^rank`.
pub fn integer_lattice(rank: usize) -> Lattice {
    let gens: Vec<Vec<Rat>> = (0..rank)
        .map(|i| {
            let mut v = vec![Rat::zero(); rank];
            v[i] = Rat::one();
            v
        })
        .collect();
    Lattice::from_generators(rank, &gens).expect("diagonal lattice")
}

/// Inner product of the conformal vectors labelled `(sign, a)` and
/// `(sign, b)` for norm-4 vectors: `<a,b>^2/128 + s·t·[a = ±b]/8`.
pub fn cv_inner(s: Sign, a: &[Rat], t: Sign, b: &[Rat]) -> Result<Rat, Error> {
    let na = dot(a, a);
    let nb = dot(b, b);
    if na != Rat::from_integer(4) || nb != Rat::from_integer(4) {
        return Err(Error::Domain("conformal-vector labels need squared length 4".into()));
    }
    let ip = dot(a, b);
    let mut value = ip * ip / Rat::from_integer(128);
    let neg_b: Vec<Rat> = b.iter().map(|x| -x).collect();
    if a == b || a == neg_b.as_slice() {
        let contribution = Rat::new(i64::from(s.value() * t.value()), 8);
        value += contribution;
    }
    Ok(value)
}

/// The sign `(-1)^{<a,x>}` of the involution attached to a norm-4
/// vector, on the lattice exponential of `x`.
pub fn tau_sign(a: &[Rat], x: &[Rat]) -> Result<Sign, Error> {
    if dot(a, a) != Rat::from_integer(4) {
        return Err(Error::Domain("involution labels need squared length 4".into()));
    }
    let p = dot(a, x);
    if !p.is_integer() {
        return Err(Error::Domain("pairing must be integral".into()));
    }
    Ok(Sign::from_parity(p.numer() % 2 != 0))
}

/// Result of scanning all pairs of distinct conformal-vector labels.
#[derive(Clone, Debug)]
pub struct BoundScan {
    pub label_count: usize,
    pub max_offdiag: Rat,
    /// Pairs exceeding 1/12, by index into the label list.
    pub violations: Vec<(usize, usize)>,
    pub min_distance_sq: Rat,
}

/// Enumerate all conformal-vector labels `(±, a)` for norm-4 vectors of
/// the lattice and scan all distinct pairs for the 1/12 bound; the
/// squared distance `<e-f, e-f> = 1/2 - 2<e,f>` is tracked alongside.
pub fn conformal_bound_scan(lattice: &Lattice) -> Result<BoundScan, Error> {
    let vectors = lattice.norm_four_vectors()?;
    // scaled integer copies for fast inner products
    let scaled: Vec<Vec<i64>> = vectors
        .iter()
        .map(|v| v.iter().map(|x| (x * Rat::from_integer(4)).to_integer()).collect())
        .collect();
    let bound = Rat::new(1, 12);
    let mut max_offdiag = Rat::new(-1, 1);
    let mut min_distance_sq = Rat::new(i64::MAX, 1);
    let mut violations = Vec::new();
    let labels = 2 * scaled.len();
    for i in 0..scaled.len() {
        for j in i..scaled.len() {
            // scaled inner product: 16 <a,b>
            let ip16: i64 = scaled[i].iter().zip(&scaled[j]).map(|(x, y)| x * y).sum();
            let ip = Rat::new(ip16, 16);
            let same_vector = i == j;
            // label pairs across the two signs
            for (si, sj) in [
                (Sign::Plus, Sign::Plus),
                (Sign::Plus, Sign::Minus),
                (Sign::Minus, Sign::Minus),
            ] {
                if same_vector && si == sj {
                    continue; // identical labels
                }
                let mut value = ip * ip / Rat::from_integer(128);
                if same_vector {
                    value += Rat::new(i64::from(si.value() * sj.value()), 8);
                }
                if value > max_offdiag {
                    max_offdiag = value;
                }
                let dist = Rat::new(1, 2) - Rat::from_integer(2) * value;
                if dist < min_distance_sq {
                    min_distance_sq = dist;
                }
                if value > bound {
                    let li = 2 * i + usize::from(si == Sign::Minus);
                    let lj = 2 * j + usize::from(sj == Sign::Minus);
                    violations.push((li, lj));
                }
            }
        }
    }
    Ok(BoundScan {
        label_count: labels,
        max_offdiag,
        violations,
        min_distance_sq,
    })
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn big_ratio_to_rat(num: BigInt, den: BigInt) -> Rat {
    use num_traits::ToPrimitive;
    let g = num_integer::gcd(num.clone(), den.clone());
    let num = (&num / &g).to_i64().expect("determinant fits in i64");
    let den = (&den / &g).to_i64().expect("determinant fits in i64");
    Rat::new(num.abs(), den.abs())
}

fn integer_row_echelon(width: usize, mut rows: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
    let mut basis: Vec<Vec<i128>> = Vec::new();
    let mut col = 0;
    while col < width && !rows.is_empty() {
        rows.retain(|r| r.iter().any(|&x| x != 0));
        // gcd-reduce entries in this column to a single row
        loop {
            let mut nonzero: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][col] != 0).collect();
            if nonzero.is_empty() {
                break;
            }
            if nonzero.len() == 1 {
                let mut row = rows.remove(nonzero[0]);
                if row[col] < 0 {
                    for x in &mut row {
                        *x = -*x;
                    }
                }
                basis.push(row);
                break;
            }
            nonzero.sort_by_key(|&i| rows[i][col].abs());
            let (a, b) = (nonzero[0], nonzero[1]);
            let q = rows[b][col] / rows[a][col];
            let pivot = rows[a].clone();
            for (x, p) in rows[b].iter_mut().zip(&pivot) {
                *x -= q * p;
            }
        }
        col += 1;
    }
    basis
}
