use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::comb::{comb, CombedForm};
use crate::pure::to_pure_generators;

/// Position of a braid relative to the kernel `{1, Δ}` of `B_n(S^2) -> M_{0,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiracClass {
    One,
    Dirac,
    NotInKernel,
}

type FormCache = Mutex<HashMap<usize, Arc<OnceLock<CombedForm>>>>;

/// Normal form of the Dirac braid on `n` strands, computed once per `n`.
pub fn delta_form(n: usize) -> CombedForm {
    static CACHE: OnceLock<FormCache> = OnceLock::new();
    let slot = {
        let mut map = CACHE
            .get_or_init(Default::default)
            .lock()
            .expect("cache poisoned");
        map.entry(n).or_default().clone()
    };
    slot.get_or_init(|| {
        let delta = BraidWord::delta(n).expect("n >= 3");
        comb(&to_pure_generators(&delta).expect("delta is pure")).expect("n >= 3")
    })
    .clone()
}

pub fn dirac_class(w: &BraidWord) -> DiracClass {
    let n = w.strands();
    if !w.permutation().is_identity() {
        return DiracClass::NotInKernel;
    }
    if n < 3 {
        // P_2(S^2) is trivial.
        return DiracClass::One;
    }
    let form = comb(&to_pure_generators(w).expect("checked pure")).expect("n >= 3");
    if form.is_trivial() {
        DiracClass::One
    } else if form == delta_form(n) {
        DiracClass::Dirac
    } else {
        DiracClass::NotInKernel
    }
}
