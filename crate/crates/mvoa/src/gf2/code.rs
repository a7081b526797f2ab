//! Binary linear codes kept as generator lists plus a cached
//! row-reduced basis. Codes are never materialized word-by-word unless
//! the dimension is small; membership goes through reduction.

use std::fmt;

use crate::error::Error;
use crate::gf2::word::Word;

/// A binary linear code of fixed length. Derived equality is
/// structural (same generator list); use [`Code::same_code`] for
/// equality of the spanned codes.
#[derive(Clone, PartialEq, Eq)]
pub struct Code {
    len: usize,
    gens: Vec<Word>,
    basis: Vec<Word>,   // reduced row echelon form, pivot columns ascending
    pivots: Vec<usize>, // pivot column of each basis row
}

impl Code {
    /// Span of the given generator words.
    pub fn from_generators(len: usize, gens: Vec<Word>) -> Self {
        for g in &gens {
            assert_eq!(g.len(), len, "generator length mismatch");
        }
        let (basis, pivots) = row_reduce(len, gens.clone());
        Code { len, gens, basis, pivots }
    }

    /// The zero code of the given length.
    pub fn trivial(len: usize) -> Self {
        Code::from_generators(len, vec![])
    }

    /// All even-weight words of the given length.
    pub fn even_all(len: usize) -> Self {
        let gens = (0..len.saturating_sub(1))
            .map(|i| Word::from_support(len, &[i, i + 1]))
            .collect();
        Code::from_generators(len, gens)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Original generator list (before reduction).
    pub fn generators(&self) -> &[Word] {
        &self.gens
    }

    /// The canonical reduced basis.
    pub fn basis(&self) -> &[Word] {
        &self.basis
    }

    /// Pivot column of each reduced-basis row.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce a word modulo the code; the result is the canonical coset
    /// representative (zero exactly for codewords).
    pub fn reduce(&self, w: &Word) -> Word {
        assert_eq!(w.len(), self.len, "word length mismatch");
        let mut r = w.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_in_place(row);
            }
        }
        r
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.reduce(w).is_zero()
    }

    pub fn is_subcode_of(&self, other: &Code) -> bool {
        self.basis.iter().all(|b| other.contains(b))
    }

    /// Set equality of the spanned codes.
    pub fn same_code(&self, other: &Code) -> bool {
        self.len == other.len
            && self.dim() == other.dim()
            && self.basis.iter().zip(&other.basis).all(|(a, b)| a == b)
    }

    /// Iterate over all `2^dim` codewords. Panics above 2^28 words.
    pub fn words(&self) -> CodeWords<'_> {
        assert!(self.dim() <= 28, "refusing to enumerate 2^{} codewords", self.dim());
        CodeWords {
            basis: &self.basis,
            current: Word::zeros(self.len),
            index: 0,
            count: 1u64 << self.dim(),
        }
    }

    /// Dual code under the standard inner product.
    pub fn dual(&self) -> Code {
        // null space of the basis matrix
        let n = self.len;
        let mut gens = Vec::with_capacity(n - self.dim());
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; n];
            for &p in &self.pivots {
                v[p] = true;
            }
            v
        };
        for free in 0..n {
            if pivot_set[free] {
                continue;
            }
            let mut w = Word::zeros(n);
            w.set(free, true);
            for (row, &p) in self.basis.iter().zip(&self.pivots) {
                if row.get(free) {
                    w.set(p, true);
                }
            }
            gens.push(w);
        }
        Code::from_generators(n, gens)
    }

    /// `{α ∈ C : Supp(α) ⊆ Supp(β)}` as a code of the same length.
    pub fn support_subcode(&self, beta: &Word) -> Code {
        assert_eq!(beta.len(), self.len, "word length mismatch");
        // eliminate on the complement coordinates; rows that end up zero
        // there span the subcode
        let outside: Vec<usize> = (0..self.len).filter(|&i| !beta.get(i)).collect();
        let mut rows = self.basis.clone();
        let mut used = vec![false; rows.len()];
        for &col in &outside {
            let Some(p) = (0..rows.len()).find(|&r| !used[r] && rows[r].get(col)) else {
                continue;
            };
            used[p] = true;
            let pivot_row = rows[p].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != p && !used[r] && row.get(col) {
                    row.xor_in_place(&pivot_row);
                }
            }
        }
        let gens = rows
            .into_iter()
            .zip(used)
            .filter(|(row, used)| !used && !row.is_zero())
            .map(|(row, _)| row)
            .collect();
        Code::from_generators(self.len, gens)
    }

    /// `C ∩ C^⊥`: the words of the code orthogonal to the whole code.
    pub fn radical(&self) -> Code {
        // kernel of the Gram matrix of the basis, expressed back in the code
        let k = self.dim();
        let mut gram: Vec<Word> = (0..k)
            .map(|i| {
                let mut row = Word::zeros(k);
                for j in 0..k {
                    if self.basis[i].dot(&self.basis[j]) {
                        row.set(j, true);
                    }
                }
                row
            })
            .collect();
        // kernel of gram: row reduce with column tracking
        let (reduced, pivots) = row_reduce(k, std::mem::take(&mut gram));
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; k];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut gens = Vec::new();
        for free in 0..k {
            if pivot_set[free] {
                continue;
            }
            // coefficient vector of a kernel element
            let mut coeff = Word::zeros(k);
            coeff.set(free, true);
            for (row, &p) in reduced.iter().zip(&pivots) {
                if row.get(free) {
                    coeff.set(p, true);
                }
            }
            let mut w = Word::zeros(self.len);
            for j in 0..k {
                if coeff.get(j) {
                    w.xor_in_place(&self.basis[j]);
                }
            }
            gens.push(w);
        }
        Code::from_generators(self.len, gens)
    }

    /// Sum of two codes of the same length.
    pub fn sum(&self, other: &Code) -> Code {
        assert_eq!(self.len, other.len, "code length mismatch");
        let mut gens = self.basis.clone();
        gens.extend(other.basis.iter().cloned());
        Code::from_generators(self.len, gens)
    }

    /// Intersection, via `(A^⊥ + B^⊥)^⊥`.
    pub fn intersect(&self, other: &Code) -> Code {
        self.dual().sum(&other.dual()).dual()
    }

    /// Image of the code under restriction to the listed coordinates.
    pub fn project(&self, coords: &[usize]) -> Code {
        let gens = self.basis.iter().map(|b| b.restrict(coords)).collect();
        Code::from_generators(coords.len(), gens)
    }

    /// Apply a coordinate permutation: bit `i` of each codeword moves to
    /// `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Code {
        assert_eq!(perm.len(), self.len);
        let gens = self
            .basis
            .iter()
            .map(|b| {
                let mut w = Word::zeros(self.len);
                for i in 0..self.len {
                    if b.get(i) {
                        w.set(perm[i], true);
                    }
                }
                w
            })
            .collect();
        Code::from_generators(self.len, gens)
    }

    /// All codewords of weight in `1..=max_weight`, by enumerating ambient
    /// words of small weight and testing membership.
    pub fn low_weight_words(&self, max_weight: usize) -> Vec<Word> {
        let mut found = Vec::new();
        let n = self.len;
        let mut support = Vec::new();
        fn rec(
            code: &Code,
            n: usize,
            start: usize,
            remaining: usize,
            support: &mut Vec<usize>,
            found: &mut Vec<Word>,
        ) {
            if !support.is_empty() {
                let w = Word::from_support(n, support);
                if code.contains(&w) {
                    found.push(w);
                }
            }
            if remaining == 0 {
                return;
            }
            for i in start..n {
                support.push(i);
                rec(code, n, i + 1, remaining - 1, support, found);
                support.pop();
            }
        }
        rec(self, n, 0, max_weight, &mut support, &mut found);
        found
    }

    /// Minimum nonzero weight. `None` for the zero code. Uses full
    /// enumeration for small dimension and bounded-weight search (up to
    /// weight 4) otherwise; `MinWeight::GreaterThan(4)` reports the latter
    /// when no small word exists.
    pub fn min_weight(&self) -> Option<MinWeight> {
        if self.dim() == 0 {
            return None;
        }
        if self.dim() <= 20 {
            let mut min = usize::MAX;
            for w in self.words() {
                let wt = w.weight();
                if wt > 0 && wt < min {
                    min = wt;
                }
            }
            return Some(MinWeight::Exact(min));
        }
        for target in 1..=4usize {
            let mut support = Vec::new();
            if self.has_word_of_weight(target, 0, &mut support) {
                return Some(MinWeight::Exact(target));
            }
        }
        Some(MinWeight::GreaterThan(4))
    }

    fn has_word_of_weight(&self, remaining: usize, start: usize, support: &mut Vec<usize>) -> bool {
        if remaining == 0 {
            let w = Word::from_support(self.len, support);
            return self.contains(&w);
        }
        for i in start..self.len {
            support.push(i);
            if self.has_word_of_weight(remaining - 1, i + 1, support) {
                support.pop();
                return true;
            }
            support.pop();
        }
        false
    }

    /// Structural flags used throughout: evenness, double evenness,
    /// self-orthogonality, self-duality, minimum weight.
    pub fn classify(&self) -> CodeClass {
        let is_even = self.basis.iter().all(|b| b.weight() % 2 == 0);
        let self_orthogonal = self.is_self_orthogonal();
        let is_doubly_even = self.basis.iter().all(|b| b.weight() % 4 == 0) && self_orthogonal;
        CodeClass {
            is_even,
            is_doubly_even,
            is_self_orthogonal: self_orthogonal,
            is_self_dual: self_orthogonal && 2 * self.dim() == self.len,
            min_weight: self.min_weight(),
        }
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let k = self.dim();
        (0..k).all(|i| (i..k).all(|j| !self.basis[i].dot(&self.basis[j])))
    }

    pub fn is_even(&self) -> bool {
        self.basis.iter().all(|b| b.weight() % 2 == 0)
    }

    pub fn is_doubly_even(&self) -> bool {
        self.basis.iter().all(|b| b.weight() % 4 == 0) && self.is_self_orthogonal()
    }

    /// Canonical coset representatives of `self / sub` in graded
    /// lexicographic order. `sub` must be a subcode.
    pub fn coset_reps_mod(&self, sub: &Code) -> Result<Vec<Word>, Error> {
        if !sub.is_subcode_of(self) {
            return Err(Error::Domain("not a subcode".into()));
        }
        let r = self.dim() - sub.dim();
        assert!(r <= 24, "too many cosets to enumerate");
        // complete sub's basis to a basis of self
        let mut extra = Vec::new();
        let mut work = sub.basis.to_vec();
        let mut work_code = Code::from_generators(self.len, work.clone());
        for b in &self.basis {
            if !work_code.contains(b) {
                extra.push(b.clone());
                work.push(b.clone());
                work_code = Code::from_generators(self.len, work.clone());
            }
        }
        debug_assert_eq!(extra.len(), r);
        let mut reps: Vec<Word> = (0..(1u64 << r))
            .map(|mask| {
                let mut w = Word::zeros(self.len);
                for (j, e) in extra.iter().enumerate() {
                    if (mask >> j) & 1 == 1 {
                        w.xor_in_place(e);
                    }
                }
                sub.reduce(&w)
            })
            .collect();
        reps.sort_by(|a, b| a.graded_lex_cmp(b));
        Ok(reps)
    }

    /// Text form: header `n=<length> k=<dim>`, then the reduced basis rows.
    pub fn to_text(&self) -> String {
        let mut s = format!("n={} k={}\n", self.len, self.dim());
        for b in &self.basis {
            s.push_str(&b.bit_string());
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Code, Error> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty code text".into()))?;
        let mut n = None;
        let mut k = None;
        for part in header.split_whitespace() {
            if let Some(v) = part.strip_prefix("n=") {
                n = Some(v.parse::<usize>().map_err(|_| Error::Parse("bad n".into()))?);
            } else if let Some(v) = part.strip_prefix("k=") {
                k = Some(v.parse::<usize>().map_err(|_| Error::Parse("bad k".into()))?);
            }
        }
        let n = n.ok_or_else(|| Error::Parse("missing n= in header".into()))?;
        let k = k.ok_or_else(|| Error::Parse("missing k= in header".into()))?;
        let mut gens = Vec::with_capacity(k);
        for line in lines.take(k) {
            let w = Word::parse(line)?;
            if w.len() != n {
                return Err(Error::Parse("row length differs from header".into()));
            }
            gens.push(w);
        }
        if gens.len() != k {
            return Err(Error::Parse("fewer rows than header dimension".into()));
        }
        let code = Code::from_generators(n, gens);
        if code.dim() != k {
            return Err(Error::Parse("rows are not independent".into()));
        }
        Ok(code)
    }
}

impl fmt::Debug for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Code[{},{}]", self.len, self.dim())
    }
}

/// Minimum-weight report; large codes are only searched up to weight 4.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinWeight {
    Exact(usize),
    GreaterThan(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeClass {
    pub is_even: bool,
    pub is_doubly_even: bool,
    pub is_self_orthogonal: bool,
    pub is_self_dual: bool,
    pub min_weight: Option<MinWeight>,
}

/// Gray-code iterator over all codewords.
pub struct CodeWords<'a> {
    basis: &'a [Word],
    current: Word,
    index: u64,
    count: u64,
}

impl Iterator for CodeWords<'_> {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.index == self.count {
            return None;
        }
        if self.index > 0 {
            let flip = self.index.trailing_zeros() as usize;
            self.current.xor_in_place(&self.basis[flip]);
        }
        self.index += 1;
        Some(self.current.clone())
    }
}

fn row_reduce(len: usize, mut rows: Vec<Word>) -> (Vec<Word>, Vec<usize>) {
    let mut basis: Vec<Word> = Vec::new();
    let mut pivots: Vec<usize> = Vec::new();
    for mut row in rows.drain(..) {
        for (b, &p) in basis.iter().zip(&pivots) {
            if row.get(p) {
                row.xor_in_place(b);
            }
        }
        if row.is_zero() {
            continue;
        }
        let pivot = (0..len).find(|&i| row.get(i)).unwrap();
        for (b, _) in basis.iter_mut().zip(&pivots) {
            if b.get(pivot) {
                b.xor_in_place(&row);
            }
        }
        // insert keeping pivot columns sorted
        let pos = pivots.partition_point(|&p| p < pivot);
        basis.insert(pos, row);
        pivots.insert(pos, pivot);
    }
    (basis, pivots)
}
