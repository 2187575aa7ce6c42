//! Pure braid generators `A_ij` and rewriting of pure braid words into them.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::BraidError;
use crate::word::{self, Letter};

/// `A_ij^{+1}` or `A_ij^{-1}` with `1 <= i < j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PureLetter {
    pub i: usize,
    pub j: usize,
    pub positive: bool,
}

impl PureLetter {
    pub const fn new(i: usize, j: usize, positive: bool) -> Self {
        Self { i, j, positive }
    }

    fn pos(i: usize, j: usize) -> Self {
        Self::new(i, j, true)
    }

    fn neg(i: usize, j: usize) -> Self {
        Self::new(i, j, false)
    }
}

impl Letter for PureLetter {
    fn inv(self) -> Self {
        Self {
            positive: !self.positive,
            ..self
        }
    }
}

/// A word in the pure braid generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PureWord {
    strands: usize,
    letters: Vec<PureLetter>,
}

impl PureWord {
    pub fn new(strands: usize, letters: Vec<PureLetter>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands { n: strands, min: 2 });
        }
        if let Some(l) = letters
            .iter()
            .find(|l| l.i == 0 || l.i >= l.j || l.j > strands)
        {
            return Err(BraidError::PairOutOfRange {
                i: l.i,
                j: l.j,
                n: strands,
            });
        }
        Ok(Self { strands, letters })
    }

    pub(crate) fn from_parts(strands: usize, letters: Vec<PureLetter>) -> Self {
        Self { strands, letters }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[PureLetter] {
        &self.letters
    }

    /// Expands every `A_ij` into its Artin-generator definition.
    pub fn to_braid_word(&self) -> BraidWord {
        let mut letters = Vec::new();
        for l in &self.letters {
            let mut a = generator_word(l.i, l.j);
            if !l.positive {
                a = word::inverse(&a);
            }
            letters.extend(a);
        }
        BraidWord::new(self.strands, letters).expect("pure letters stay in range")
    }
}

/// `A_ij = (x_{j-1} ... x_{i+1}) x_i^2 (x_{i+1}^-1 ... x_{j-1}^-1)`.
pub fn generator_word(i: usize, j: usize) -> Vec<i32> {
    let outer: Vec<i32> = ((i + 1)..j).rev().map(|k| k as i32).collect();
    word::conjugate(&outer, &[i as i32, i as i32])
}

/// Full twist of the consecutive strands `a..=b`, as `prod_k (A_{a,k} ... A_{k-1,k})`.
pub fn full_twist(a: usize, b: usize) -> Vec<PureLetter> {
    let mut out = Vec::new();
    for k in (a + 1)..=b {
        out.extend((a..k).map(|i| PureLetter::pos(i, k)));
    }
    out
}

/// `x_k^{±1} A_ij x_k^{∓1}` as a word in pure generators.
pub fn conjugate_generator(k: usize, positive: bool, i: usize, j: usize) -> Vec<PureLetter> {
    use PureLetter as P;
    if k + 1 == i {
        if positive {
            vec![P::pos(k, i), P::pos(k, j), P::neg(k, i)]
        } else {
            vec![P::pos(k, j)]
        }
    } else if k == i && i + 1 < j {
        if positive {
            vec![P::pos(i + 1, j)]
        } else {
            vec![P::neg(i, i + 1), P::pos(i + 1, j), P::pos(i, i + 1)]
        }
    } else if k + 1 == j && i + 1 < j {
        if positive {
            vec![P::pos(k, j), P::pos(i, k), P::neg(k, j)]
        } else {
            vec![P::pos(i, k)]
        }
    } else if k == j {
        if positive {
            vec![P::pos(i, j + 1)]
        } else {
            vec![P::neg(j, j + 1), P::pos(i, j + 1), P::pos(j, j + 1)]
        }
    } else {
        vec![P::pos(i, j)]
    }
}

/// `x_k^{±1} w x_k^{∓1}` for a pure word `w`, freely reduced.
pub fn conjugate_by_letter(k: usize, positive: bool, w: &[PureLetter]) -> Vec<PureLetter> {
    let mut out = Vec::with_capacity(w.len());
    for l in w {
        let image = conjugate_generator(k, positive, l.i, l.j);
        if l.positive {
            word::extend_reduced(&mut out, &image);
        } else {
            word::extend_reduced(&mut out, &word::inverse(&image));
        }
    }
    out
}

/// Canonical positive word with the given arrangement (`arrangement[position] = strand`).
///
/// Strands are placed left to right; each one slides left past the strands it must cross.
pub fn transversal(arrangement: &[usize]) -> Vec<i32> {
    let mut current: Vec<usize> = (0..arrangement.len()).collect();
    let mut out = Vec::new();
    for (p, &strand) in arrangement.iter().enumerate() {
        let q = current
            .iter()
            .position(|&s| s == strand)
            .expect("arrangement is a permutation");
        for pos in ((p + 1)..=q).rev() {
            out.push(pos as i32);
            current.swap(pos - 1, pos);
        }
    }
    out
}

/// Rewrites a pure braid word in the generators `A_ij` (Reidemeister–Schreier over `S_n`).
pub fn to_pure_generators(w: &BraidWord) -> Result<PureWord, BraidError> {
    if !w.permutation().is_identity() {
        return Err(BraidError::NotPure);
    }
    let mut arrangement: Vec<usize> = (0..w.strands()).collect();
    let mut out = Vec::new();
    for &l in w.letters() {
        let k = l.unsigned_abs() as usize;
        let positive = l > 0;
        // The Schreier generator is nontrivial exactly when the letter's pair is
        // uncrossed in the coset just after (positive) or before (negative) it.
        if positive {
            arrangement.swap(k - 1, k);
        }
        if arrangement[k - 1] < arrangement[k] {
            let mut g = vec![PureLetter::new(k, k + 1, positive)];
            for &x in transversal(&arrangement).iter().rev() {
                g = conjugate_by_letter(x as usize, true, &g);
            }
            word::extend_reduced(&mut out, &g);
        }
        if !positive {
            arrangement.swap(k - 1, k);
        }
    }
    Ok(PureWord::from_parts(w.strands(), out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin;

    fn artin_eq(n: usize, a: &[i32], b: &[i32]) -> bool {
        artin::equal(
            &BraidWord::new(n, a.to_vec()).unwrap(),
            &BraidWord::new(n, b.to_vec()).unwrap(),
        )
    }

    fn pure_braid(n: usize, w: &[PureLetter]) -> Vec<i32> {
        PureWord::new(n, w.to_vec())
            .unwrap()
            .to_braid_word()
            .letters()
            .to_vec()
    }

    #[test]
    fn conjugation_table_matches_artin_action() {
        let n = 7;
        for j in 2..=n {
            for i in 1..j {
                for k in 1..n {
                    for positive in [true, false] {
                        let x = if positive { k as i32 } else { -(k as i32) };
                        let lhs = word::conjugate(&[x], &generator_word(i, j));
                        let rhs = pure_braid(n, &conjugate_generator(k, positive, i, j));
                        assert!(artin_eq(n, &lhs, &rhs), "x_{x} on A({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn transversal_realizes_arrangement() {
        let arrangement = vec![2, 0, 3, 1];
        let t = BraidWord::new(4, transversal(&arrangement)).unwrap();
        let mut check: Vec<usize> = (0..4).collect();
        for &l in t.letters() {
            check.swap(l as usize - 1, l as usize);
        }
        assert_eq!(check, arrangement);
        assert!(t.letters().iter().all(|&l| l > 0));
    }

    #[test]
    fn square_of_generator() {
        let w = BraidWord::new(3, vec![1, 1]).unwrap();
        assert_eq!(
            to_pure_generators(&w).unwrap().letters(),
            &[PureLetter::pos(1, 2)]
        );
        let w = BraidWord::new(3, vec![1, -1]).unwrap();
        assert!(to_pure_generators(&w).unwrap().letters().is_empty());
        assert_eq!(
            to_pure_generators(&BraidWord::new(3, vec![1]).unwrap()),
            Err(BraidError::NotPure)
        );
    }

    #[test]
    fn rewriting_preserves_the_braid() {
        let samples: Vec<(usize, Vec<i32>)> = vec![
            (4, vec![2, 1, 1, -2]),
            (5, vec![1, 2, 3, 4, 4, 3, 2, 1]),
            (5, vec![-3, 1, -2, 4, 4, 2, -1, 3, 1, 2, 1, 2, 1, 2]),
            (6, BraidWord::delta(6).unwrap().letters().to_vec()),
        ];
        for (n, letters) in samples {
            let w = BraidWord::new(n, letters.clone()).unwrap();
            let p = to_pure_generators(&w).unwrap();
            assert!(
                artin_eq(n, &letters, p.to_braid_word().letters()),
                "{letters:?}"
            );
        }
    }

    #[test]
    fn full_twist_is_delta() {
        for n in 3..8 {
            let twist = pure_braid(n, &full_twist(1, n));
            assert!(artin_eq(n, &twist, BraidWord::delta(n).unwrap().letters()));
        }
    }
}
