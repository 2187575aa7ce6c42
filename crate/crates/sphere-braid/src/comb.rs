//! Complete normal form for pure braids of the sphere.
//!
//! The last strand is sent to infinity: `P_n(S^2)` is identified with the disk
//! group `P_{n-1}(D)` modulo the square of its full twist, each `A_{i,n}`
//! becoming a product of interval twists. The disk word is then combed one
//! strand at a time, and the remaining `A_12` exponent is normalized away
//! against the full twist, leaving a parity bit.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::BraidError;
use crate::pure::{full_twist, PureLetter, PureWord};
use crate::word;

/// Fiber coordinates for levels `n` down to `4`, plus the base bit.
///
/// The level-`k` coordinate is a reduced word in the free generators
/// `a_i = A_{i,k-1}` (`i = 1..k-2`) of the disk fiber.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CombedForm {
    pub strands: usize,
    pub coords: Vec<Vec<i32>>,
    pub bit: u8,
}

impl CombedForm {
    pub fn is_trivial(&self) -> bool {
        self.bit == 0 && self.coords.iter().all(Vec::is_empty)
    }

    /// A pure word whose normal form is `self`.
    pub fn to_pure_word(&self) -> PureWord {
        let mut letters = Vec::new();
        for (idx, coord) in self.coords.iter().enumerate().rev() {
            let j = self.strands - 1 - idx;
            letters.extend(
                coord
                    .iter()
                    .map(|&a| PureLetter::new(a.unsigned_abs() as usize, j, a > 0)),
            );
        }
        if self.bit == 1 {
            letters.extend(full_twist(1, self.strands - 1));
        }
        PureWord::new(self.strands, letters).expect("coordinates stay in range")
    }
}

/// Image of `A_{i,n}^{±1}` after sending strand `n` to infinity.
fn strand_at_infinity(i: usize, n: usize, positive: bool) -> Vec<PureLetter> {
    let mut w = word::inverse(&full_twist(i, n - 1));
    w.extend(full_twist(1, i - 1));
    w.extend(word::inverse(&full_twist(1, i)));
    w.extend(full_twist(i + 1, n - 1));
    if positive {
        w
    } else {
        word::inverse(&w)
    }
}

/// Conjugation actions of lower pure generators on the level-`m` disk fiber.
struct FiberActions {
    level: usize,
    cache: HashMap<(usize, usize, bool), Vec<Vec<i32>>>,
}

impl FiberActions {
    fn new(level: usize) -> Self {
        Self {
            level,
            cache: HashMap::new(),
        }
    }

    /// `x_k^{±1} y x_k^{∓1}` on the fiber generators, for `k <= m - 2`.
    fn elementary(&self, k: usize, positive: bool) -> Vec<Vec<i32>> {
        let mut images: Vec<Vec<i32>> = (1..self.level as i32).map(|a| vec![a]).collect();
        let (a, b) = (k as i32, k as i32 + 1);
        if positive {
            images[k - 1] = vec![b];
            images[k] = vec![-b, a, b];
        } else {
            images[k - 1] = vec![a, b, -a];
            images[k] = vec![a];
        }
        images
    }

    /// Images of `y -> A_rs^{±1} y A_rs^{∓1}`.
    fn images(&mut self, r: usize, s: usize, positive: bool) -> &Vec<Vec<i32>> {
        if !self.cache.contains_key(&(r, s, positive)) {
            // A_rs = X x_r^2 X^-1 with X = x_{s-1} ... x_{r+1}; innermost map first.
            let mut steps: Vec<(usize, bool)> = ((r + 1)..s).rev().map(|k| (k, false)).collect();
            steps.push((r, positive));
            steps.push((r, positive));
            steps.extend(((r + 1)..s).map(|k| (k, true)));
            let mut total: Vec<Vec<i32>> = (1..self.level as i32).map(|a| vec![a]).collect();
            for (k, sign) in steps {
                let f = self.elementary(k, sign);
                total = total.iter().map(|w| word::substitute(w, &f)).collect();
            }
            self.cache.insert((r, s, positive), total);
        }
        &self.cache[&(r, s, positive)]
    }
}

/// Combs a disk pure word on `top` strands. Returns the coordinates for levels
/// `top..=3` and the leftover `A_12` exponent.
fn comb_disk(mut current: Vec<PureLetter>, top: usize) -> (Vec<Vec<i32>>, i64) {
    let mut coords = Vec::new();
    for m in (3..=top).rev() {
        let mut actions = FiberActions::new(m);
        let mut fiber: Vec<i32> = Vec::new();
        let mut lower: Vec<PureLetter> = Vec::with_capacity(current.len());
        // Invariant: the processed prefix equals `lower * fiber`.
        for letter in current {
            if letter.j == m {
                let a = letter.i as i32;
                word::push_reduced(&mut fiber, if letter.positive { a } else { -a });
            } else {
                word::push_reduced(&mut lower, letter);
                let images = actions.images(letter.i, letter.j, !letter.positive);
                fiber = word::substitute(&fiber, images);
            }
        }
        coords.push(fiber);
        current = lower;
    }
    let exponent = current
        .iter()
        .map(|l| if l.positive { 1 } else { -1 })
        .sum();
    (coords, exponent)
}

pub fn comb(p: &PureWord) -> Result<CombedForm, BraidError> {
    let n = p.strands();
    if n < 3 {
        return Err(BraidError::TooFewStrands { n, min: 3 });
    }
    let mut disk = Vec::with_capacity(p.letters().len());
    for l in p.letters() {
        if l.j == n {
            disk.extend(strand_at_infinity(l.i, n, l.positive));
        } else {
            disk.push(*l);
        }
    }
    let exponent: i64 = disk
        .iter()
        .filter(|l| l.i == 1 && l.j == 2)
        .map(|l| if l.positive { 1 } else { -1 })
        .sum();
    disk.extend(word::power(&full_twist(1, n - 1), -exponent));
    let disk = word::reduce(&disk);
    let (coords, leftover) = comb_disk(disk, n - 1);
    debug_assert_eq!(
        leftover, 0,
        "full twist normalization must clear the base exponent"
    );
    Ok(CombedForm {
        strands: n,
        coords,
        bit: exponent.rem_euclid(2) as u8,
    })
}
