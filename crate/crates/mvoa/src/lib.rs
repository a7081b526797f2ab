//! Exact combinatorics behind the moonshine module: binary-code linear
//! algebra, the sign cocycle of framed vertex algebras, the label algebra
//! of Ising and Hamming modules, lattice theta machinery, and exact
//! q-series graded characters up to the J-function coefficient 196884.
//!
//! Everything is computed over exact integers and rationals; there is no
//! floating point anywhere in the crate. The main entry points:
//!
//! - [`gf2`] — binary words, linear codes, duals, radicals, weight
//!   enumerators (direct, MacWilliams, coset).
//! - [`cocycle`] — the sign cocycle `e^a e^b = eps(a,b) e^{a+b}` and its
//!   square and commutator laws.
//! - [`modrep`] — irreducible-module labels over tensor powers of the
//!   Ising model, Hamming-code module fusion, frame switching, and the
//!   tau-word/coset/multiplicity descriptors driving every character.
//! - [`hypotheses`] — the decision procedure for the code-pair conditions
//!   (self-dual Hamming-sum subcodes and matching maximal doubly even
//!   subcodes), with recheckable witnesses.
//! - [`mooncodes`] — the named codes: the length-16 orbifold chain, the
//!   moonshine pair, the Leech pair, the length-`16+32n` series, and the
//!   automorphism group of the first-order Reed-Muller code.
//! - [`lattice`] — rational lattices with quarter-integer coordinates,
//!   theta series, frame tau-code extraction, and conformal-vector inner
//!   products with the 1/12 bound scan.
//! - [`qchar`] — Ising characters, code and descriptor characters, the
//!   E8 and moonshine graded dimensions, the involution-split and
//!   tripling traces, and the modular J oracle.
//!
//! A narrative guide with runnable examples lives in `book/`; its code
//! blocks are compiled as doctests through [`book`].

pub mod cocycle;
pub mod error;
pub mod gf2;
pub mod hypotheses;
pub mod lattice;
pub mod modrep;
pub mod mooncodes;
pub mod perm;
pub mod qchar;
pub mod qseries;
pub mod selftest;

pub mod book;

pub use error::Error;
