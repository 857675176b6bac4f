//! Permutations of {1, ..., n} with cycle arithmetic.
//!
//! Composition follows function application: `(a.compose(&b))(x) = a(b(x))`,
//! so in a product written left to right the rightmost factor acts first.
//! That convention is what makes a product of transpositions like
//! (12)(23) equal the 3-cycle (123).

use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    // images[k] = sigma(k+1) - 1; both 0-based internally, 1-based at the API.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Build from 1-based images: `images[k]` is the image of k+1.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if img < 1 || img > n || seen[img - 1] {
                return Err(Error::NotAPermutation { n, images });
            }
            seen[img - 1] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x - 1).collect(),
        })
    }

    /// The transposition (a b) in degree n.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        for &p in &[a, b] {
            if p < 1 || p > n {
                return Err(Error::PointOutOfRange { p, n });
            }
        }
        if a == b {
            return Err(Error::SelfLoop { v: a });
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of a 1-based point.
    pub fn apply(&self, p: usize) -> Result<usize> {
        if p < 1 || p > self.degree() {
            return Err(Error::PointOutOfRange {
                p,
                n: self.degree(),
            });
        }
        Ok(self.images[p - 1] + 1)
    }

    /// (self o other)(x) = self(other(x)): `other` acts first.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.degree()];
        for (k, &img) in self.images.iter().enumerate() {
            images[img] = k;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &img)| k == img)
    }

    /// Nontrivial cycles in canonical form: each cycle starts at its smallest
    /// point, cycles sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start + 1];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                cyc.push(x + 1);
                seen[x] = true;
                x = self.images[x];
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    /// Multiset of nontrivial cycle lengths, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    /// Is this a single cycle through all n points? The empty product on a
    /// single point counts: the identity of degree 1 is a 1-cycle.
    pub fn is_full_cycle(&self) -> bool {
        match self.degree() {
            0 => false,
            1 => true,
            n => {
                let cy = self.cycles();
                cy.len() == 1 && cy[0].len() == n
            }
        }
    }

    /// All orbits, singletons included, each sorted, ordered by minimum.
    pub fn orbit_partition(&self) -> OrbitPartition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut blocks = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut block = vec![start + 1];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                block.push(x + 1);
                seen[x] = true;
                x = self.images[x];
            }
            block.sort_unstable();
            blocks.push(block);
        }
        OrbitPartition { n, blocks }
    }

    /// Parse the canonical cycle notation produced by `Display`, e.g.
    /// "(1 2 3)(4 5)" or "e". The degree cannot be inferred from the text,
    /// so it is supplied.
    pub fn parse(n: usize, text: &str) -> Result<Self> {
        let fail = |reason: &str| Error::PermutationParse {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        if trimmed == "e" {
            return Ok(Self::identity(n));
        }
        let mut result = Self::identity(n);
        let mut rest = trimmed;
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(fail("expected '('"));
            }
            let close = rest.find(')').ok_or_else(|| fail("missing ')'"))?;
            let inner = &rest[1..close];
            let points: Vec<usize> = inner
                .split_whitespace()
                .map(|w| {
                    w.parse::<usize>()
                        .map_err(|_| fail(&format!("bad point {w:?}")))
                })
                .collect::<Result<_>>()?;
            if points.len() < 2 {
                return Err(fail("cycle needs at least two points"));
            }
            cycles.push(points);
            rest = &rest[close + 1..];
        }
        let mut touched = vec![false; n];
        for points in &cycles {
            for &p in points {
                if p < 1 || p > n {
                    return Err(Error::PointOutOfRange { p, n });
                }
                if touched[p - 1] {
                    return Err(fail(&format!("point {p} repeated")));
                }
                touched[p - 1] = true;
            }
            for (k, &p) in points.iter().enumerate() {
                let q = points[(k + 1) % points.len()];
                result.images[p - 1] = q - 1;
            }
        }
        Ok(result)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for cyc in cycles {
            write!(f, "(")?;
            for (k, p) in cyc.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// An ordered list of transpositions of {1..n}. Order matters: the product
/// is read left to right with the rightmost transposition applied first, so
/// reordering the list generally changes the product.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TranspositionSequence {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl TranspositionSequence {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        for &(a, b) in &pairs {
            for &p in &[a, b] {
                if p < 1 || p > n {
                    return Err(Error::PointOutOfRange { p, n });
                }
            }
            if a == b {
                return Err(Error::SelfLoop { v: a });
            }
        }
        Ok(TranspositionSequence { n, pairs })
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The product of the sequence: rightmost transposition acts first, so
    /// [(1,2), (2,3)] gives (1 2)(2 3) = (1 2 3).
    pub fn product(&self) -> Permutation {
        let mut acc = Permutation::identity(self.n);
        for &(a, b) in &self.pairs {
            let t = Permutation::transposition(self.n, a, b).expect("validated at construction");
            acc = acc.compose(&t).expect("degrees match");
        }
        acc
    }

    pub fn reversed(&self) -> Self {
        let mut pairs = self.pairs.clone();
        pairs.reverse();
        TranspositionSequence { n: self.n, pairs }
    }
}

impl fmt::Display for TranspositionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return write!(f, "e");
        }
        for &(a, b) in &self.pairs {
            write!(f, "({a} {b})")?;
        }
        Ok(())
    }
}

/// Partition of {1..n} into orbits, singletons included. Blocks are sorted
/// internally and ordered by minimum element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrbitPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn nontrivial_blocks(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.blocks.iter().filter(|b| b.len() > 1)
    }

    /// Sum over blocks of |O|(|O|-1)/2: the dimension of the product of
    /// rotation algebras acting on each block.
    pub fn submanifold_dim(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| b.len() * (b.len() - 1) / 2)
            .sum()
    }
}

impl fmt::Display for OrbitPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{{")?;
            for (m, p) in block.iter().enumerate() {
                if m > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, "}}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(n: usize, pairs: &[(usize, usize)]) -> TranspositionSequence {
        TranspositionSequence::new(n, pairs.to_vec()).unwrap()
    }

    #[test]
    fn product_convention_matches_cycle_notation() {
        // (12)(23) = (123)
        let p = seq(3, &[(1, 2), (2, 3)]).product();
        assert_eq!(p.to_string(), "(1 2 3)");
        // (12)(23)(12) = (13)
        let p = seq(3, &[(1, 2), (2, 3), (1, 2)]).product();
        assert_eq!(p.to_string(), "(1 3)");
        // (12)(2345) built as (12)(23)(34)(45) = (12345)
        let p = seq(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).product();
        assert_eq!(p.to_string(), "(1 2 3 4 5)");
    }

    #[test]
    fn order_matters() {
        // Same multiset of transpositions, different orders, different cycles.
        let a = seq(4, &[(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]).product();
        assert_eq!(a.to_string(), "(1 4)");
        let b = seq(4, &[(1, 4), (1, 2), (2, 4), (2, 3), (3, 4)]).product();
        assert_eq!(b.to_string(), "(1 2 3 4)");
    }

    #[test]
    fn reversed_sequence_gives_inverse() {
        let s = seq(5, &[(1, 2), (2, 3), (1, 3), (3, 4)]);
        let p = s.product().compose(&s.reversed().product()).unwrap();
        assert!(p.is_identity());
    }

    #[test]
    fn compose_degree_mismatch() {
        let a = Permutation::identity(3);
        let b = Permutation::identity(4);
        assert!(matches!(
            a.compose(&b),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn inverse_composes_to_identity() {
        let p = seq(6, &[(1, 2), (3, 5), (2, 6)]).product();
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn full_cycle_detection() {
        assert!(seq(3, &[(1, 2), (2, 3)]).product().is_full_cycle());
        assert!(!seq(3, &[(1, 2)]).product().is_full_cycle());
        assert!(!Permutation::identity(3).is_full_cycle());
        // degree-1 identity counts as a 1-cycle by convention
        assert!(Permutation::identity(1).is_full_cycle());
        assert!(!Permutation::identity(0).is_full_cycle());
    }

    #[test]
    fn orbits_include_singletons() {
        let p = seq(5, &[(1, 2), (2, 3), (4, 5)]).product();
        let orbits = p.orbit_partition();
        assert_eq!(orbits.blocks(), &[vec![1, 2, 3], vec![4, 5]]);
        let q = seq(5, &[(1, 2)]).product();
        assert_eq!(
            q.orbit_partition().blocks(),
            &[vec![1, 2], vec![3], vec![4], vec![5]]
        );
        assert_eq!(q.orbit_partition().submanifold_dim(), 1);
    }

    #[test]
    fn display_and_parse_round_trip() {
        let cases = [
            seq(5, &[(1, 2), (2, 3), (4, 5)]).product(),
            seq(5, &[(1, 2), (2, 3), (3, 4), (4, 5)]).product(),
            Permutation::identity(5),
            seq(6, &[(1, 4), (2, 4), (3, 4), (5, 6)]).product(),
        ];
        for p in cases {
            let text = p.to_string();
            let back = Permutation::parse(p.degree(), &text).unwrap();
            assert_eq!(back, p, "round trip through {text:?}");
            assert_eq!(back.to_string(), text);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse(3, "(1 2").is_err());
        assert!(Permutation::parse(3, "(1)").is_err());
        assert!(Permutation::parse(3, "(1 2)(2 3)").is_err()); // repeated point
        assert!(Permutation::parse(3, "(1 4)").is_err()); // out of range
        assert!(Permutation::parse(3, "1 2 3").is_err());
    }

    #[test]
    fn parse_multidigit_points() {
        let p = Permutation::parse(12, "(1 10 12)(2 11)").unwrap();
        assert_eq!(p.apply(1).unwrap(), 10);
        assert_eq!(p.apply(10).unwrap(), 12);
        assert_eq!(p.apply(12).unwrap(), 1);
        assert_eq!(p.to_string(), "(1 10 12)(2 11)");
    }

    #[test]
    fn cycle_type_sorted_descending() {
        let p = seq(6, &[(1, 2), (3, 4), (4, 5)]).product();
        assert_eq!(p.cycle_type(), vec![3, 2]);
    }
}
