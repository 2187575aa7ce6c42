use serde::{Deserialize, Serialize};

use crate::error::LefschetzError;

/// Fiber genus `g >= 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "usize", into = "usize")]
pub struct Genus(usize);

impl Genus {
    pub fn new(g: usize) -> Result<Self, LefschetzError> {
        if g < 2 {
            return Err(LefschetzError::GenusTooSmall(g));
        }
        Ok(Self(g))
    }

    pub fn get(self) -> usize {
        self.0
    }

    /// Number of generators, `2g + 1`.
    pub fn generators(self) -> usize {
        2 * self.0 + 1
    }

    /// Number of marked points on the sphere quotient, `2g + 2`.
    pub fn strands(self) -> usize {
        2 * self.0 + 2
    }

    /// Largest separating-chain index `floor(g/2)`.
    pub fn max_chain(self) -> usize {
        self.0 / 2
    }

    pub fn is_odd(self) -> bool {
        self.0 % 2 == 1
    }

    pub fn check_word(self, letters: &[i32]) -> Result<(), LefschetzError> {
        let generators = self.generators();
        match letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize > generators)
        {
            Some(&letter) => Err(LefschetzError::LetterOutOfRange { letter, generators }),
            None => Ok(()),
        }
    }
}

impl TryFrom<usize> for Genus {
    type Error = LefschetzError;

    fn try_from(g: usize) -> Result<Self, Self::Error> {
        Self::new(g)
    }
}

impl From<Genus> for usize {
    fn from(g: Genus) -> usize {
        g.0
    }
}

/// Which generating set a word is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlphabetKind {
    /// Braid generators `x_i` of the sphere braid group.
    X,
    /// Half twists `ξ_i` of the spherical mapping class group.
    Xi,
    /// Dehn twists `ζ_i` of the hyperelliptic mapping class group.
    Zeta,
}

/// `1 2 ... m`.
pub fn ascending(m: usize) -> Vec<i32> {
    (1..=m as i32).collect()
}

/// `1 2 ... m m ... 2 1`.
pub fn palindrome(m: usize) -> Vec<i32> {
    let mut w = ascending(m);
    w.extend((1..=m as i32).rev());
    w
}

/// The hyperelliptic involution as `ζ_1 ... ζ_{2g+1} ζ_{2g+1} ... ζ_1`.
pub fn iota_word(g: Genus) -> Vec<i32> {
    palindrome(g.generators())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_bounds() {
        assert!(Genus::new(1).is_err());
        let g = Genus::new(3).unwrap();
        assert_eq!((g.generators(), g.strands(), g.max_chain()), (7, 8, 1));
        assert!(g.check_word(&[1, -7]).is_ok());
        assert!(g.check_word(&[8]).is_err());
    }

    #[test]
    fn iota_length() {
        assert_eq!(iota_word(Genus::new(2).unwrap()).len(), 10);
    }
}
