//! Word problems in `M_{0,2g+2}` and `H_g`.
//!
//! `ξ`-words lift letter for letter to sphere braids, whose kernel over
//! `M_{0,2g+2}` is `{1, Δ}`. `ζ`-words project letter for letter to `ξ`-words,
//! whose kernel over `H_g` is `{1, ι}`; the two are told apart by the sign
//! of the symplectic image.

use serde::{Deserialize, Serialize};
use sphere_braid::{dirac_class, word, BraidWord, DiracClass};

use crate::alphabet::Genus;
use crate::symplectic::symplectic_rep;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IotaClass {
    One,
    Iota,
    NotInKernel,
}

/// The sphere braid with the same letters as a `ξ`- or `ζ`-word.
pub fn lift(letters: &[i32], g: Genus) -> BraidWord {
    BraidWord::new(g.strands(), letters.to_vec()).expect("letters checked against the genus")
}

pub fn dirac_class_of(letters: &[i32], g: Genus) -> DiracClass {
    dirac_class(&lift(letters, g))
}

pub fn is_trivial_m0(letters: &[i32], g: Genus) -> bool {
    dirac_class_of(letters, g) != DiracClass::NotInKernel
}

pub fn iota_class(letters: &[i32], g: Genus) -> IotaClass {
    if !is_trivial_m0(letters, g) {
        return IotaClass::NotInKernel;
    }
    let m = symplectic_rep(letters, g);
    if m.is_identity() {
        IotaClass::One
    } else if m.is_minus_identity() {
        IotaClass::Iota
    } else {
        unreachable!("an element over the trivial sphere class acts by +I or -I")
    }
}

pub fn hg_is_trivial(letters: &[i32], g: Genus) -> bool {
    iota_class(letters, g) == IotaClass::One
}

pub fn hg_equal(u: &[i32], v: &[i32], g: Genus) -> bool {
    let mut w = u.to_vec();
    w.extend(word::inverse(v));
    hg_is_trivial(&w, g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::iota_word;
    use crate::relators::{RelatorId, RelatorTable, TableKind};

    fn g(n: usize) -> Genus {
        Genus::new(n).unwrap()
    }

    #[test]
    fn sphere_word_problem() {
        let t = RelatorTable::new(TableKind::C0, g(2));
        assert!(is_trivial_m0(t.relator(RelatorId::R4).unwrap(), g(2)));
        assert!(is_trivial_m0(t.relator(RelatorId::R3).unwrap(), g(2)));
        assert!(!is_trivial_m0(&[1], g(2)));
    }

    #[test]
    fn hyperelliptic_word_problem() {
        for n in 2..=4 {
            let t = RelatorTable::new(TableKind::CHat, g(n));
            for r in &t.relators {
                assert!(hg_is_trivial(&r.word, g(n)), "{:?}", r.id);
            }
            let iota = iota_word(g(n));
            assert_eq!(iota_class(&iota, g(n)), IotaClass::Iota);
            assert!(!hg_is_trivial(&iota, g(n)));
        }
        assert_eq!(iota_class(&[], g(2)), IotaClass::One);
        assert_eq!(iota_class(&[1], g(2)), IotaClass::NotInKernel);
    }

    #[test]
    fn equalities() {
        assert!(hg_equal(&[1, 2, 1], &[2, 1, 2], g(2)));
        assert!(hg_equal(&[1, 3], &[3, 1], g(2)));
        assert!(!hg_equal(&[1], &[2], g(2)));
    }
}
