//! Relator tables for the spherical mapping class group, the sphere braid
//! group and the hyperelliptic mapping class group.

use serde::{Deserialize, Serialize};
use sphere_braid::word;

use crate::alphabet::{ascending, palindrome, AlphabetKind, Genus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TableKind {
    /// `C_0`: half twists, with the Dirac braid relator `r4`.
    C0,
    /// `C~`: sphere braids, relators `r1`, `r2`, `r3` only.
    CTilde,
    /// `C^`: Dehn twists, `r3` squared plus the commutator `r5`.
    CHat,
}

impl TableKind {
    pub fn alphabet(self) -> AlphabetKind {
        match self {
            Self::C0 => AlphabetKind::Xi,
            Self::CTilde => AlphabetKind::X,
            Self::CHat => AlphabetKind::Zeta,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum RelatorId {
    R1 { i: usize, j: usize },
    R2 { i: usize },
    R3,
    R4,
    R5,
}

/// Types of black vertices: `ℓ_0(i)` and `ℓ_h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum LetterType {
    Twist { i: usize },
    Chain { h: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relator {
    pub id: RelatorId,
    pub word: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelatorTable {
    pub kind: TableKind,
    pub genus: Genus,
    pub relators: Vec<Relator>,
    pub letters: Vec<(LetterType, Vec<i32>)>,
}

/// `(1 2 ... 2h)^{4h+2}`.
pub fn chain_word(h: usize) -> Vec<i32> {
    word::power(&ascending(2 * h), 4 * h as i64 + 2)
}

impl RelatorTable {
    pub fn new(kind: TableKind, genus: Genus) -> Self {
        let n = genus.generators();
        let mut relators = Vec::new();
        for i in 1..=n {
            for j in (i + 2)..=n {
                let (a, b) = (i as i32, j as i32);
                relators.push(Relator {
                    id: RelatorId::R1 { i, j },
                    word: vec![a, b, -a, -b],
                });
            }
        }
        for i in 1..n {
            let (a, b) = (i as i32, i as i32 + 1);
            relators.push(Relator {
                id: RelatorId::R2 { i },
                word: vec![a, b, a, -b, -a, -b],
            });
        }
        let iota = palindrome(n);
        let turn = ascending(n);
        match kind {
            TableKind::C0 => {
                relators.push(Relator {
                    id: RelatorId::R3,
                    word: iota,
                });
                relators.push(Relator {
                    id: RelatorId::R4,
                    word: word::power(&turn, n as i64 + 1),
                });
            }
            TableKind::CTilde => relators.push(Relator {
                id: RelatorId::R3,
                word: iota,
            }),
            TableKind::CHat => {
                relators.push(Relator {
                    id: RelatorId::R3,
                    word: word::power(&iota, 2),
                });
                relators.push(Relator {
                    id: RelatorId::R4,
                    word: word::power(&turn, n as i64 + 1),
                });
                relators.push(Relator {
                    id: RelatorId::R5,
                    word: word::commutator(&[1], &iota),
                });
            }
        }
        let mut letters: Vec<(LetterType, Vec<i32>)> = (1..=n)
            .map(|i| (LetterType::Twist { i }, vec![i as i32]))
            .collect();
        letters.extend((1..=genus.max_chain()).map(|h| (LetterType::Chain { h }, chain_word(h))));
        Self {
            kind,
            genus,
            relators,
            letters,
        }
    }

    pub fn relator(&self, id: RelatorId) -> Option<&[i32]> {
        self.relators
            .iter()
            .find(|r| r.id == id)
            .map(|r| r.word.as_slice())
    }

    pub fn letter(&self, t: LetterType) -> Option<&[i32]> {
        self.letters
            .iter()
            .find(|(l, _)| *l == t)
            .map(|(_, w)| w.as_slice())
    }

    /// Sum of exponents of a relator word (the signed edge degree of its vertex).
    pub fn degree(word: &[i32]) -> i64 {
        word.iter().map(|l| i64::from(l.signum())).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize) -> Genus {
        Genus::new(n).unwrap()
    }

    #[test]
    fn relator_lengths() {
        let c0 = RelatorTable::new(TableKind::C0, g(2));
        assert_eq!(c0.relator(RelatorId::R4).unwrap().len(), 30);
        let hat = RelatorTable::new(TableKind::CHat, g(2));
        assert_eq!(hat.relator(RelatorId::R3).unwrap().len(), 20);
        let tilde = RelatorTable::new(TableKind::CTilde, g(4));
        assert!(tilde.relator(RelatorId::R4).is_none());
        assert!(tilde.relator(RelatorId::R5).is_none());
    }

    #[test]
    fn family_sizes() {
        for n in 2..6 {
            let t = RelatorTable::new(TableKind::C0, g(n));
            let m = 2 * n + 1;
            let r1 = t
                .relators
                .iter()
                .filter(|r| matches!(r.id, RelatorId::R1 { .. }))
                .count();
            assert_eq!(r1, (m - 1) * (m - 2) / 2);
            let r2 = t
                .relators
                .iter()
                .filter(|r| matches!(r.id, RelatorId::R2 { .. }))
                .count();
            assert_eq!(r2, 2 * n);
            assert_eq!(t.letters.len(), m + n / 2);
        }
    }

    #[test]
    fn chain_letter_shape() {
        let t = RelatorTable::new(TableKind::CHat, g(4));
        assert_eq!(t.letter(LetterType::Chain { h: 2 }).unwrap().len(), 4 * 10);
        assert!(t.letter(LetterType::Chain { h: 3 }).is_none());
    }
}
