//! The Artin action of the disk braid group on the free group `F_n`.
//!
//! It is faithful, so it decides equality in `B_n(D)`. The sphere kernel never
//! relies on it; tests use it as an independent check of the rewriting tables.

use crate::braid::BraidWord;
use crate::word;

/// Images of the free generators `y_1..y_n` under the action of `w`.
pub fn images(w: &BraidWord) -> Vec<Vec<i32>> {
    let n = w.strands();
    let mut current: Vec<Vec<i32>> = (1..=n as i32).map(|i| vec![i]).collect();
    for &l in w.letters() {
        let k = l.unsigned_abs() as i32;
        let mut step: Vec<Vec<i32>> = (1..=n as i32).map(|i| vec![i]).collect();
        let (a, b) = ((k - 1) as usize, k as usize);
        if l > 0 {
            step[a] = vec![k, k + 1, -k];
            step[b] = vec![k];
        } else {
            step[a] = vec![k + 1];
            step[b] = vec![-(k + 1), k, k + 1];
        }
        current = step
            .iter()
            .map(|img| word::substitute(img, &current))
            .collect();
    }
    current
}

pub fn equal(a: &BraidWord, b: &BraidWord) -> bool {
    a.strands() == b.strands() && images(a) == images(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bw(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn braid_relations_hold() {
        assert!(equal(&bw(4, &[1, 2, 1]), &bw(4, &[2, 1, 2])));
        assert!(equal(&bw(4, &[1, 3]), &bw(4, &[3, 1])));
        assert!(equal(&bw(4, &[1, -1]), &bw(4, &[])));
    }

    #[test]
    fn separates_distinct_braids() {
        assert!(!equal(&bw(3, &[1]), &bw(3, &[-1])));
        assert!(!equal(&bw(3, &[1, 2]), &bw(3, &[2, 1])));
        assert!(!equal(&BraidWord::delta(3).unwrap(), &bw(3, &[])));
    }
}
