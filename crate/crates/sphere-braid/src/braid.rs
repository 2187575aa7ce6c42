use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::BraidError;
use crate::word;

/// A word in the Artin generators `x_1 .. x_{n-1}`; `v > 0` is `x_v`, `v < 0` its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands { n: strands, min: 2 });
        }
        if let Some(&letter) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= strands)
        {
            return Err(BraidError::LetterOutOfRange { letter, n: strands });
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    /// The Dirac braid `(x_1 ... x_{n-1})^n`.
    pub fn delta(strands: usize) -> Result<Self, BraidError> {
        if strands < 3 {
            return Err(BraidError::TooFewStrands { n: strands, min: 3 });
        }
        let turn: Vec<i32> = (1..strands as i32).collect();
        Ok(Self {
            strands,
            letters: word::power(&turn, strands as i64),
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn free_reduce(&self) -> Self {
        Self {
            strands: self.strands,
            letters: word::reduce(&self.letters),
        }
    }

    pub fn inverse(&self) -> Self {
        Self {
            strands: self.strands,
            letters: word::inverse(&self.letters),
        }
    }

    /// Concatenation `self * other`. Panics if the strand counts differ.
    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands, "strand count mismatch");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self {
            strands: self.strands,
            letters,
        }
    }

    pub fn pow(&self, e: i64) -> Self {
        Self {
            strands: self.strands,
            letters: word::power(&self.letters, e),
        }
    }

    /// `self other self^-1 other^-1`.
    pub fn commutator(&self, other: &Self) -> Self {
        assert_eq!(self.strands, other.strands, "strand count mismatch");
        Self {
            strands: self.strands,
            letters: word::commutator(&self.letters, &other.letters),
        }
    }

    pub fn permutation(&self) -> Permutation {
        let mut arrangement: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize;
            arrangement.swap(k - 1, k);
        }
        Permutation::from_arrangement(&arrangement)
    }
}

/// Where each strand ends up: `image(i)` is the final position of the strand starting at `i`.
///
/// Composition follows reading order: `permutation(uv) = permutation(u).then(&permutation(v))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// Builds the permutation from `arrangement[position] = strand` (0-based).
    pub(crate) fn from_arrangement(arrangement: &[usize]) -> Self {
        let mut images = vec![0; arrangement.len()];
        for (pos, &strand) in arrangement.iter().enumerate() {
            images[strand] = pos;
        }
        Self(images)
    }

    /// 1-based image of a 1-based point.
    pub fn image(&self, i: usize) -> usize {
        self.0[i - 1] + 1
    }

    pub fn then(&self, next: &Self) -> Self {
        Self(self.0.iter().map(|&p| next.0[p]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &p)| i == p)
    }

    /// Nontrivial cycles, 1-based, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.0[p];
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_letters() {
        assert!(BraidWord::new(4, vec![4]).is_err());
        assert!(BraidWord::new(4, vec![0]).is_err());
        assert!(BraidWord::new(4, vec![-3, 3]).is_ok());
    }

    #[test]
    fn transposition_and_square() {
        let w = BraidWord::new(4, vec![1]).unwrap();
        assert_eq!(w.permutation().cycles(), vec![vec![1, 2]]);
        assert!(w.pow(2).permutation().is_identity());
    }

    #[test]
    fn delta_lengths_and_permutation() {
        assert_eq!(
            BraidWord::delta(4).unwrap().letters(),
            &[1, 2, 3, 1, 2, 3, 1, 2, 3, 1, 2, 3]
        );
        assert_eq!(BraidWord::delta(8).unwrap().len(), 56);
        for n in 3..12 {
            assert!(BraidWord::delta(n).unwrap().permutation().is_identity());
        }
        assert!(BraidWord::delta(2).is_err());
    }

    #[test]
    fn composition_follows_reading_order() {
        let u = BraidWord::new(4, vec![1]).unwrap();
        let v = BraidWord::new(4, vec![2]).unwrap();
        assert_eq!(
            u.concat(&v).permutation(),
            u.permutation().then(&v.permutation())
        );
        assert_eq!(u.concat(&v).permutation().to_string(), "(1 3 2)");
    }
}
