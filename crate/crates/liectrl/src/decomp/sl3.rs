//! A Cartan-style basis of sl(3, C) and its paired-permutation cycle test.
//!
//! The eight basis elements are the diagonal matrices H1 = diag(1,-1,0),
//! H2 = diag(0,1,-1), the upper elementary matrices X1 = e12, X2 = e23,
//! X3 = e13, and the lower ones Y1 = e21, Y2 = e32, Y3 = e31.
//!
//! Each element is assigned a pair of letters in the symmetric group S3 —
//! one per summand of a direct-sum embedding — via
//!
//! ```text
//! H1, H2 -> (e,    e   )     X3 -> ((12), (12))
//! X1     -> ((12), e   )     Y3 -> ((23), (23))
//! X2     -> (e,    (12))
//! Y1     -> ((23), e   )
//! Y2     -> (e,    (23))
//! ```
//!
//! and a generator list maps to the slot-wise product of its letters
//! ([`sl3_iota`]). The cycle criterion asks for a sub-list whose product is a
//! pair of 3-cycles. Because each slot only ever sees the letters (12) and
//! (23), that reduces to a counting rule ([`sl3_cycle_controllable`]):
//! some subset uses, in each slot, at least one (12), at least one (23),
//! and an even number of letters in total.
//!
//! The rule is necessary for controllability but not sufficient: sets
//! containing both X3 and Y3 can pass the cycle test while spanning only a
//! proper subalgebra. The rank backend is authoritative; the disagreement
//! is reported, not hidden.

use crate::error::{Error, Result};
use crate::lie::{BasisKind, Generator, GeneratorSet};
use crate::matrix::ExactMatrix;
use crate::perm::{Permutation, TranspositionSequence};
use crate::scalar::{gauss, GaussianRational, Rational};
use std::fmt;

/// The eight members of the basis.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Sl3Gen {
    H1,
    H2,
    X1,
    X2,
    X3,
    Y1,
    Y2,
    Y3,
}

pub const SL3_BASIS: [Sl3Gen; 8] = [
    Sl3Gen::H1,
    Sl3Gen::H2,
    Sl3Gen::X1,
    Sl3Gen::X2,
    Sl3Gen::X3,
    Sl3Gen::Y1,
    Sl3Gen::Y2,
    Sl3Gen::Y3,
];

impl Sl3Gen {
    pub fn label(self) -> &'static str {
        match self {
            Sl3Gen::H1 => "H1",
            Sl3Gen::H2 => "H2",
            Sl3Gen::X1 => "X1",
            Sl3Gen::X2 => "X2",
            Sl3Gen::X3 => "X3",
            Sl3Gen::Y1 => "Y1",
            Sl3Gen::Y2 => "Y2",
            Sl3Gen::Y3 => "Y3",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        SL3_BASIS
            .iter()
            .copied()
            .find(|g| g.label() == text)
            .ok_or_else(|| {
                Error::spec(
                    "generators",
                    format!("'{text}' is not a basis member (H1, H2, X1..X3, Y1..Y3)"),
                )
            })
    }

    /// The pair of letters this element contributes, one per slot; `None`
    /// means the identity letter.
    pub fn slot_letters(self) -> [Option<(usize, usize)>; 2] {
        match self {
            Sl3Gen::H1 | Sl3Gen::H2 => [None, None],
            Sl3Gen::X1 => [Some((1, 2)), None],
            Sl3Gen::X2 => [None, Some((1, 2))],
            Sl3Gen::X3 => [Some((1, 2)), Some((1, 2))],
            Sl3Gen::Y1 => [Some((2, 3)), None],
            Sl3Gen::Y2 => [None, Some((2, 3))],
            Sl3Gen::Y3 => [Some((2, 3)), Some((2, 3))],
        }
    }
}

/// 3x3 matrix with a single 1 at the (1-based) position (p, q).
fn unit(p: usize, q: usize) -> ExactMatrix<GaussianRational> {
    let mut m = ExactMatrix::zero(3);
    m.set(p - 1, q - 1, gauss(1, 0));
    m
}

/// The matrix of a basis member.
pub fn sl3_matrix(g: Sl3Gen) -> ExactMatrix<GaussianRational> {
    match g {
        Sl3Gen::H1 => ExactMatrix::from_fn(3, |i, j| {
            if i != j {
                gauss(0, 0)
            } else {
                gauss([1, -1, 0][i], 0)
            }
        }),
        Sl3Gen::H2 => ExactMatrix::from_fn(3, |i, j| {
            if i != j {
                gauss(0, 0)
            } else {
                gauss([0, 1, -1][i], 0)
            }
        }),
        Sl3Gen::X1 => unit(1, 2),
        Sl3Gen::X2 => unit(2, 3),
        Sl3Gen::X3 => unit(1, 3),
        Sl3Gen::Y1 => unit(2, 1),
        Sl3Gen::Y2 => unit(3, 2),
        Sl3Gen::Y3 => unit(3, 1),
    }
}

impl GeneratorSet<GaussianRational> {
    /// Generators drawn from the Cartan-style basis of sl(3, C).
    pub fn sl3_cartan(members: &[Sl3Gen]) -> Result<Self> {
        let gens = members
            .iter()
            .map(|&g| Generator::new(g.label(), sl3_matrix(g)))
            .collect();
        Self::with_kind(3, BasisKind::Sl3Cartan, gens)
    }
}

/// Recover the basis members of a set, in generator order.
pub fn sl3_members(gens: &GeneratorSet<GaussianRational>) -> Result<Vec<Sl3Gen>> {
    if gens.kind() != BasisKind::Sl3Cartan {
        return Err(Error::WrongBasisKind {
            expected: "sl3_cartan".into(),
            found: gens.kind().name().into(),
        });
    }
    gens.generators()
        .iter()
        .map(|g| {
            let member = Sl3Gen::parse(g.label())?;
            if *g.matrix() != sl3_matrix(member) {
                return Err(Error::WrongBasisKind {
                    expected: "sl3_cartan".into(),
                    found: format!("generator '{}' does not match its basis matrix", g.label()),
                });
            }
            Ok(member)
        })
        .collect()
}

/// An element of the direct sum S3 (+) S3: one degree-3 permutation per slot.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SumPermutation {
    pub first: Permutation,
    pub second: Permutation,
}

impl SumPermutation {
    pub fn identity() -> Self {
        SumPermutation {
            first: Permutation::identity(3),
            second: Permutation::identity(3),
        }
    }

    /// Group order of the element (1 for the identity).
    pub fn order(&self) -> usize {
        let slot = |p: &Permutation| {
            p.cycle_type()
                .iter()
                .fold(1, |acc, &l| num::integer::lcm(acc, l))
        };
        num::integer::lcm(slot(&self.first), slot(&self.second))
    }

    /// The analog of a full cycle in the direct sum: both slots are 3-cycles.
    pub fn is_six_cycle(&self) -> bool {
        let three = |p: &Permutation| p.cycle_type() == [3];
        three(&self.first) && three(&self.second)
    }
}

impl fmt::Display for SumPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// Slot-wise product of the letters of an ordered member list, rightmost
/// letter acting first in each slot (matching transposition products).
pub fn sl3_iota(members: &[Sl3Gen]) -> SumPermutation {
    let mut slots = [Vec::new(), Vec::new()];
    for &m in members {
        for (k, letter) in m.slot_letters().into_iter().enumerate() {
            if let Some(pair) = letter {
                slots[k].push(pair);
            }
        }
    }
    let product = |pairs: Vec<(usize, usize)>| {
        TranspositionSequence::new(3, pairs)
            .expect("letters are fixed transpositions of {1,2,3}")
            .product()
    };
    let [first, second] = slots;
    SumPermutation {
        first: product(first),
        second: product(second),
    }
}

/// Letter-counting cycle criterion: some subset of the members has, in each
/// slot, at least one (12) letter, at least one (23) letter, and an even
/// total. Equivalent to the existence of an ordered sub-list whose
/// [`sl3_iota`] image is a pair of 3-cycles.
pub fn sl3_cycle_controllable(gens: &GeneratorSet<GaussianRational>) -> Result<bool> {
    let members = sl3_members(gens)?;
    Ok(any_subset_passes_counts(&members))
}

fn any_subset_passes_counts(members: &[Sl3Gen]) -> bool {
    let k = members.len();
    'mask: for mask in 0u64..1 << k {
        for slot in 0..2 {
            let mut n12 = 0usize;
            let mut n23 = 0usize;
            for (pos, m) in members.iter().enumerate() {
                if mask >> pos & 1 == 0 {
                    continue;
                }
                match m.slot_letters()[slot] {
                    Some((1, 2)) => n12 += 1,
                    Some((2, 3)) => n23 += 1,
                    Some(_) => unreachable!("letters are (1,2) or (2,3)"),
                    None => {}
                }
            }
            if n12 == 0 || n23 == 0 || !(n12 + n23).is_multiple_of(2) {
                continue 'mask;
            }
        }
        return true;
    }
    false
}

/// Reference implementation of the cycle criterion: enumerate every subset
/// and every ordering of it, and test the product directly.
pub fn sl3_cycle_controllable_bruteforce(gens: &GeneratorSet<GaussianRational>) -> Result<bool> {
    let members = sl3_members(gens)?;
    let k = members.len();
    for mask in 0u64..1 << k {
        let chosen: Vec<Sl3Gen> = (0..k)
            .filter(|pos| mask >> pos & 1 == 1)
            .map(|pos| members[pos])
            .collect();
        if some_ordering_is_six_cycle(&mut chosen.clone(), 0) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn some_ordering_is_six_cycle(members: &mut [Sl3Gen], fixed: usize) -> bool {
    if fixed == members.len() {
        return sl3_iota(members).is_six_cycle();
    }
    for k in fixed..members.len() {
        members.swap(fixed, k);
        if some_ordering_is_six_cycle(members, fixed + 1) {
            return true;
        }
        members.swap(fixed, k);
    }
    false
}

/// Real 2n x 2n image of a complex n x n matrix: a + bi maps to the block
/// matrix [[a, -b], [b, a]]. This is an injective algebra homomorphism, so
/// bracket closures of the images compute real Lie ranks.
pub fn realify(m: &ExactMatrix<GaussianRational>) -> ExactMatrix<Rational> {
    let n = m.dim();
    ExactMatrix::from_fn(2 * n, |i, j| {
        let (p, top) = if i < n { (i, true) } else { (i - n, false) };
        let (q, left) = if j < n { (j, true) } else { (j - n, false) };
        let entry = m.get(p, q);
        match (top, left) {
            (true, true) | (false, false) => entry.re.clone(),
            (true, false) => -entry.im.clone(),
            (false, true) => entry.im.clone(),
        }
    })
}

/// The set of real images of the generators. With
/// `include_imaginary_multiples`, the image of i times each generator is
/// added too (labelled `i*<label>`); over the rationals that is what makes
/// the real span of a complex algebra reachable.
pub fn realified(
    gens: &GeneratorSet<GaussianRational>,
    include_imaginary_multiples: bool,
) -> Result<GeneratorSet<Rational>> {
    let mut out = Vec::new();
    let i_unit = gauss(0, 1);
    for g in gens.generators() {
        out.push(Generator::new(g.label(), realify(g.matrix())));
        if include_imaginary_multiples {
            let scaled = g.matrix().scale(&i_unit);
            out.push(Generator::new(format!("i*{}", g.label()), realify(&scaled)));
        }
    }
    GeneratorSet::raw(2 * gens.matrix_dim(), out)
}
