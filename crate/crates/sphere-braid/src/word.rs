//! Free-group helpers shared by every alphabet.

/// A letter of a free group: something with a formal inverse.
pub trait Letter: Copy + Eq {
    fn inv(self) -> Self;
}

impl Letter for i32 {
    fn inv(self) -> Self {
        -self
    }
}

/// Pushes `letter` onto an already reduced word, cancelling if possible.
pub fn push_reduced<T: Letter>(word: &mut Vec<T>, letter: T) {
    if word.last() == Some(&letter.inv()) {
        word.pop();
    } else {
        word.push(letter);
    }
}

/// Appends `tail` to an already reduced word, keeping it reduced.
pub fn extend_reduced<T: Letter>(word: &mut Vec<T>, tail: &[T]) {
    for &l in tail {
        push_reduced(word, l);
    }
}

pub fn reduce<T: Letter>(letters: &[T]) -> Vec<T> {
    let mut out = Vec::with_capacity(letters.len());
    extend_reduced(&mut out, letters);
    out
}

pub fn inverse<T: Letter>(letters: &[T]) -> Vec<T> {
    letters.iter().rev().map(|l| l.inv()).collect()
}

/// `word^e` as a literal (unreduced) word.
pub fn power<T: Letter>(letters: &[T], e: i64) -> Vec<T> {
    let base = if e < 0 {
        inverse(letters)
    } else {
        letters.to_vec()
    };
    let mut out = Vec::with_capacity(base.len() * e.unsigned_abs() as usize);
    for _ in 0..e.unsigned_abs() {
        out.extend_from_slice(&base);
    }
    out
}

/// `u w u^-1` as a literal word.
pub fn conjugate<T: Letter>(u: &[T], w: &[T]) -> Vec<T> {
    let mut out = u.to_vec();
    out.extend_from_slice(w);
    out.extend(inverse(u));
    out
}

/// The commutator `a b a^-1 b^-1` as a literal word.
pub fn commutator<T: Letter>(a: &[T], b: &[T]) -> Vec<T> {
    let mut out = a.to_vec();
    out.extend_from_slice(b);
    out.extend(inverse(a));
    out.extend(inverse(b));
    out
}

/// Applies the endomorphism sending generator `i` (1-based) to `images[i-1]`.
pub fn substitute(word: &[i32], images: &[Vec<i32>]) -> Vec<i32> {
    let mut out = Vec::new();
    for &l in word {
        let img = &images[l.unsigned_abs() as usize - 1];
        if l > 0 {
            extend_reduced(&mut out, img);
        } else {
            for &x in img.iter().rev() {
                push_reduced(&mut out, -x);
            }
        }
    }
    out
}

/// Exponent sum of each generator `1..=rank`.
pub fn exponent_sums(word: &[i32], rank: usize) -> Vec<i64> {
    let mut sums = vec![0; rank];
    for &l in word {
        sums[l.unsigned_abs() as usize - 1] += i64::from(l.signum());
    }
    sums
}
