//! Relator-application certificates between words over a presentation.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use sphere_braid::word;
use thiserror::Error;

use crate::alphabet::Genus;
use crate::relators::{RelatorId, RelatorTable, TableKind};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum Step {
    /// Inserts `letter letter^-1` before index `pos`.
    FreeInsert { pos: usize, letter: i32 },
    /// Deletes the cancelling pair at `pos, pos + 1`.
    FreeDelete { pos: usize },
    /// Inserts `u r^{±1} u^-1` before index `pos`.
    RelatorInsert {
        pos: usize,
        conjugator: Vec<i32>,
        relator: RelatorId,
        inverse: bool,
    },
    /// Deletes the literal subword `u r^{±1} u^-1` starting at `pos`.
    RelatorDelete {
        pos: usize,
        conjugator: Vec<i32>,
        relator: RelatorId,
        inverse: bool,
    },
}

impl Step {
    pub fn relator(&self) -> Option<RelatorId> {
        match self {
            Self::RelatorInsert { relator, .. } | Self::RelatorDelete { relator, .. } => {
                Some(*relator)
            }
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Derivation {
    pub table: TableKind,
    pub genus: Genus,
    pub steps: Vec<Step>,
}

impl Derivation {
    pub fn new(table: TableKind, genus: Genus) -> Self {
        Self {
            table,
            genus,
            steps: Vec::new(),
        }
    }

    /// Number of relator steps whose relator satisfies `pred`.
    pub fn count_relator(&self, pred: impl Fn(RelatorId) -> bool) -> usize {
        self.steps
            .iter()
            .filter_map(Step::relator)
            .filter(|&r| pred(r))
            .count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DerivationError {
    #[error("step {step}: position {pos} out of range for word of length {len}")]
    BadPosition { step: usize, pos: usize, len: usize },
    #[error("step {step}: subword at {pos} does not match")]
    Mismatch { step: usize, pos: usize },
    #[error("step {step}: relator {relator:?} is not in the table")]
    UnknownRelator { step: usize, relator: RelatorId },
    #[error("derivation is for {expected:?}, table is {got:?}")]
    WrongTable { expected: TableKind, got: TableKind },
    #[error("step {step}: letter {letter} out of range")]
    BadLetter { step: usize, letter: i32 },
}

fn relator_word(
    table: &RelatorTable,
    step: usize,
    conjugator: &[i32],
    relator: RelatorId,
    inverse: bool,
) -> Result<Vec<i32>, DerivationError> {
    let r = table
        .relator(relator)
        .ok_or(DerivationError::UnknownRelator { step, relator })?;
    let r = if inverse {
        word::inverse(r)
    } else {
        r.to_vec()
    };
    if let Some(&letter) = conjugator
        .iter()
        .find(|&&l| table.genus.check_word(&[l]).is_err())
    {
        return Err(DerivationError::BadLetter { step, letter });
    }
    Ok(word::conjugate(conjugator, &r))
}

/// Applies one step in place.
pub fn apply_step(
    w: &mut Vec<i32>,
    step: &Step,
    index: usize,
    table: &RelatorTable,
) -> Result<(), DerivationError> {
    let len = w.len();
    let bad = |pos| DerivationError::BadPosition {
        step: index,
        pos,
        len,
    };
    match step {
        Step::FreeInsert { pos, letter } => {
            if *pos > len {
                return Err(bad(*pos));
            }
            if table.genus.check_word(&[*letter]).is_err() {
                return Err(DerivationError::BadLetter {
                    step: index,
                    letter: *letter,
                });
            }
            w.splice(pos..pos, [*letter, -letter]);
        }
        Step::FreeDelete { pos } => {
            if pos + 1 >= len {
                return Err(bad(*pos));
            }
            if w[*pos] != -w[pos + 1] {
                return Err(DerivationError::Mismatch {
                    step: index,
                    pos: *pos,
                });
            }
            w.drain(*pos..pos + 2);
        }
        Step::RelatorInsert {
            pos,
            conjugator,
            relator,
            inverse,
        } => {
            if *pos > len {
                return Err(bad(*pos));
            }
            let r = relator_word(table, index, conjugator, *relator, *inverse)?;
            w.splice(pos..pos, r);
        }
        Step::RelatorDelete {
            pos,
            conjugator,
            relator,
            inverse,
        } => {
            let r = relator_word(table, index, conjugator, *relator, *inverse)?;
            if pos + r.len() > len {
                return Err(bad(*pos));
            }
            if w[*pos..pos + r.len()] != r[..] {
                return Err(DerivationError::Mismatch {
                    step: index,
                    pos: *pos,
                });
            }
            w.drain(*pos..pos + r.len());
        }
    }
    Ok(())
}

/// Replays `d` on `from`; true iff it ends exactly at `to`.
pub fn check(
    d: &Derivation,
    from: &[i32],
    to: &[i32],
    table: &RelatorTable,
) -> Result<bool, DerivationError> {
    if d.table != table.kind {
        return Err(DerivationError::WrongTable {
            expected: d.table,
            got: table.kind,
        });
    }
    let mut w = from.to_vec();
    for (i, step) in d.steps.iter().enumerate() {
        apply_step(&mut w, step, i, table)?;
    }
    Ok(w == to)
}

/// Steps that freely reduce `w`, always cancelling the leftmost pair.
pub fn reduction_steps(w: &[i32]) -> Vec<Step> {
    let mut out = Vec::new();
    let mut cur = w.to_vec();
    let mut i = 0;
    while i + 1 < cur.len() {
        if cur[i] == -cur[i + 1] {
            cur.drain(i..i + 2);
            out.push(Step::FreeDelete { pos: i });
            i = i.saturating_sub(1);
        } else {
            i += 1;
        }
    }
    out
}

/// Reverses a sequence of free steps starting at `a`.
fn reverse_steps(a: &[i32], steps: &[Step]) -> Vec<Step> {
    let mut words = vec![a.to_vec()];
    let mut out = Vec::with_capacity(steps.len());
    for s in steps {
        let mut w = words.last().cloned().expect("nonempty");
        let undo = match s {
            Step::FreeDelete { pos } => Step::FreeInsert {
                pos: *pos,
                letter: w[*pos],
            },
            Step::FreeInsert { pos, .. } => Step::FreeDelete { pos: *pos },
            Step::RelatorInsert {
                pos,
                conjugator,
                relator,
                inverse,
            } => Step::RelatorDelete {
                pos: *pos,
                conjugator: conjugator.clone(),
                relator: *relator,
                inverse: *inverse,
            },
            Step::RelatorDelete {
                pos,
                conjugator,
                relator,
                inverse,
            } => Step::RelatorInsert {
                pos: *pos,
                conjugator: conjugator.clone(),
                relator: *relator,
                inverse: *inverse,
            },
        };
        match s {
            Step::FreeDelete { pos } => {
                w.drain(*pos..pos + 2);
            }
            Step::FreeInsert { pos, letter } => {
                w.splice(pos..pos, [*letter, -letter]);
            }
            _ => unreachable!("only free steps are reversed here"),
        }
        words.push(w);
        out.push(undo);
    }
    out.reverse();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Maximum number of relator applications.
    pub depth: usize,
    /// Maximum length of an intermediate reduced word.
    pub length: usize,
}

impl Default for SearchBounds {
    fn default() -> Self {
        Self {
            depth: 3,
            length: 24,
        }
    }
}

/// A relator application expanded into its literal insertion plus reduction.
#[derive(Clone)]
struct Macro {
    pos: usize,
    conjugator: Vec<i32>,
    relator: RelatorId,
    inverse: bool,
    inserted: Vec<i32>,
}

fn macros(table: &RelatorTable, len: usize) -> Vec<Macro> {
    let mut out = Vec::new();
    for pos in 0..=len {
        for r in &table.relators {
            for inverse in [false, true] {
                let base = if inverse {
                    word::inverse(&r.word)
                } else {
                    r.word.clone()
                };
                // Rotation by `k`: conjugating by the inverse of the first `k` letters.
                for k in 0..base.len() {
                    let conjugator = word::inverse(&base[..k]);
                    let inserted = word::conjugate(&conjugator, &base);
                    out.push(Macro {
                        pos,
                        conjugator,
                        relator: r.id,
                        inverse,
                        inserted,
                    });
                }
            }
        }
    }
    out
}

/// Bounded iterative-deepening search for a derivation from `from` to `to`.
///
/// Moves are relator insertions (any rotation, any position) followed by
/// free reduction. The first derivation in enumeration order at the least
/// depth is returned, so results are deterministic.
pub fn search(
    from: &[i32],
    to: &[i32],
    table: &RelatorTable,
    bounds: SearchBounds,
) -> Option<Derivation> {
    let start = word::reduce(from);
    let goal = word::reduce(to);
    let mut prefix = reduction_steps(from);
    let suffix = reverse_steps(to, &reduction_steps(to));
    let mut cache: HashMap<usize, Vec<Macro>> = HashMap::new();
    for depth in 0..=bounds.depth {
        let mut path = Vec::new();
        let mut seen: HashMap<Vec<i32>, usize> = HashMap::new();
        if dfs(
            &start, &goal, depth, table, bounds, &mut cache, &mut path, &mut seen,
        ) {
            prefix.extend(path);
            prefix.extend(suffix);
            return Some(Derivation {
                table: table.kind,
                genus: table.genus,
                steps: prefix,
            });
        }
    }
    None
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    w: &[i32],
    goal: &[i32],
    depth: usize,
    table: &RelatorTable,
    bounds: SearchBounds,
    cache: &mut HashMap<usize, Vec<Macro>>,
    path: &mut Vec<Step>,
    seen: &mut HashMap<Vec<i32>, usize>,
) -> bool {
    if w == goal {
        return true;
    }
    if depth == 0 {
        return false;
    }
    if seen.get(w).is_some_and(|&d| d >= depth) {
        return false;
    }
    seen.insert(w.to_vec(), depth);
    let moves = cache
        .entry(w.len())
        .or_insert_with(|| macros(table, w.len()))
        .clone();
    for m in moves {
        let mut next = w.to_vec();
        next.splice(m.pos..m.pos, m.inserted.iter().copied());
        let reduce = reduction_steps(&next);
        let reduced = word::reduce(&next);
        if reduced.len() > bounds.length {
            continue;
        }
        let mark = path.len();
        path.push(Step::RelatorInsert {
            pos: m.pos,
            conjugator: m.conjugator.clone(),
            relator: m.relator,
            inverse: m.inverse,
        });
        path.extend(reduce);
        if dfs(&reduced, goal, depth - 1, table, bounds, cache, path, seen) {
            return true;
        }
        path.truncate(mark);
    }
    false
}

/// Records relator applications on positive words while keeping the word current.
struct Rewriter<'a> {
    table: &'a RelatorTable,
    word: Vec<i32>,
    steps: Vec<Step>,
}

impl<'a> Rewriter<'a> {
    /// Replaces `p` at `pos` by `q`, where `q p^-1` is literally `r^{±1}`.
    fn replace(&mut self, pos: usize, p: &[i32], q: &[i32], relator: RelatorId, inverse: bool) {
        debug_assert_eq!(&self.word[pos..pos + p.len()], p);
        let mut inserted = q.to_vec();
        inserted.extend(word::inverse(p));
        let r = self.table.relator(relator).expect("relator in table");
        debug_assert_eq!(
            inserted,
            if inverse {
                word::inverse(r)
            } else {
                r.to_vec()
            }
        );
        self.word.splice(pos..pos, inserted);
        self.steps.push(Step::RelatorInsert {
            pos,
            conjugator: Vec::new(),
            relator,
            inverse,
        });
        let inner = pos + q.len() + p.len() - 1;
        for t in 0..p.len() {
            self.free_delete(inner - t);
        }
    }

    fn free_delete(&mut self, pos: usize) {
        debug_assert_eq!(self.word[pos], -self.word[pos + 1]);
        self.word.drain(pos..pos + 2);
        self.steps.push(Step::FreeDelete { pos });
    }

    /// Swaps the commuting letters at `pos, pos + 1`.
    fn swap(&mut self, pos: usize) {
        let (a, b) = (self.word[pos], self.word[pos + 1]);
        let (lo, hi) = (a.min(b) as usize, a.max(b) as usize);
        self.replace(pos, &[a, b], &[b, a], RelatorId::R1 { i: lo, j: hi }, a < b);
    }

    /// `i (i+1) i <-> (i+1) i (i+1)` at `pos`.
    fn braid(&mut self, pos: usize) {
        let p = self.word[pos..pos + 3].to_vec();
        let q = [p[1], p[0], p[1]];
        let i = p[0].min(p[1]) as usize;
        self.replace(pos, &p, &q, RelatorId::R2 { i }, p[0] == i as i32);
    }

    /// Moves the letter `x_j` at `at` right through one block `x_1 ... x_{n-1}`.
    fn pass(&mut self, at: usize, j: usize, n: usize) -> usize {
        let mut at = at;
        for _ in 0..j - 2 {
            self.swap(at);
            at += 1;
        }
        self.braid(at);
        at += 2;
        for _ in j + 1..n {
            self.swap(at);
            at += 1;
        }
        at
    }

    /// Rewrites `δ δ` on generators `s..=e` starting at `start` into `τ δ x_e`
    /// with `δ = x_s ... x_e` and `τ = x_{s+1} ... x_e`.
    fn double_turn(&mut self, s: usize, e: usize, start: usize) {
        if s == e {
            return;
        }
        let len = e - s + 1;
        let mut at = start + len;
        for _ in 0..(e - s - 1) {
            self.swap(at - 1);
            at -= 1;
        }
        self.braid(start);
        self.double_turn(s + 1, e, start + 2);
        for at in (start + 1..).take(len.saturating_sub(2)) {
            self.swap(at);
        }
    }
}

/// A derivation from `[x_k, Δ]` to the empty word over the braid relators.
///
/// `x_k` is pushed right through the `2g+2` blocks of `Δ`: one block turns
/// `x_j` into `x_{j-1}`, and when `x_1` is reached the next two blocks turn it
/// into `x_{2g+1}`. Every step is an `r1` or `r2` application or a free
/// deletion; the total is below `FILLER_STEP_CONSTANT * g^2`.
pub fn centrality_filler(k: usize, genus: Genus) -> Result<Derivation, crate::LefschetzError> {
    let n = genus.strands();
    if k == 0 || k >= n {
        return Err(crate::LefschetzError::GeneratorIndex {
            index: k,
            max: n - 1,
        });
    }
    let table = RelatorTable::new(TableKind::CTilde, genus);
    let from = commutator_with_delta(k, genus);
    let mut rw = Rewriter {
        table: &table,
        word: from,
        steps: Vec::new(),
    };
    let block = n - 1;
    let (mut at, mut j, mut blocks) = (0, k, n);
    while blocks > 0 {
        if j == 1 {
            rw.double_turn(1, block, at + 1);
            at += 2 * block;
            j = block;
            blocks -= 2;
        } else {
            at = rw.pass(at, j, n);
            j -= 1;
            blocks -= 1;
        }
    }
    debug_assert_eq!(j, k);
    let mut pos = n * block;
    rw.free_delete(pos);
    while pos > 0 {
        pos -= 1;
        rw.free_delete(pos);
    }
    debug_assert!(rw.word.is_empty());
    Ok(Derivation {
        table: TableKind::CTilde,
        genus,
        steps: rw.steps,
    })
}

/// Bound constant `c` in `steps(centrality_filler(k, g)) <= c g^2`.
pub const FILLER_STEP_CONSTANT: usize = 40;

/// `x_k Δ x_k^-1 Δ^-1` in the braid alphabet.
pub fn commutator_with_delta(k: usize, genus: Genus) -> Vec<i32> {
    let turn: Vec<i32> = (1..=genus.generators() as i32).collect();
    let delta = word::power(&turn, genus.strands() as i64);
    word::commutator(&[k as i32], &delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize) -> Genus {
        Genus::new(n).unwrap()
    }

    #[test]
    fn trivial_and_single_step() {
        let t = RelatorTable::new(TableKind::C0, g(2));
        let empty = Derivation::new(TableKind::C0, g(2));
        assert_eq!(check(&empty, &[1, 2], &[1, 2], &t), Ok(true));
        let r4 = t.relator(RelatorId::R4).unwrap().to_vec();
        let mut d = Derivation::new(TableKind::C0, g(2));
        d.steps.push(Step::RelatorInsert {
            pos: 0,
            conjugator: vec![],
            relator: RelatorId::R4,
            inverse: false,
        });
        assert_eq!(check(&d, &[], &r4, &t), Ok(true));
        assert_eq!(check(&d, &[], &[1], &t), Ok(false));
    }

    #[test]
    fn bad_positions_are_errors() {
        let t = RelatorTable::new(TableKind::C0, g(2));
        let mut d = Derivation::new(TableKind::C0, g(2));
        d.steps.push(Step::FreeDelete { pos: 0 });
        assert!(matches!(
            check(&d, &[1, 2], &[], &t),
            Err(DerivationError::Mismatch { .. })
        ));
        d.steps[0] = Step::FreeInsert { pos: 5, letter: 1 };
        assert!(matches!(
            check(&d, &[1], &[], &t),
            Err(DerivationError::BadPosition { .. })
        ));
    }

    #[test]
    fn search_finds_commutation_and_braid() {
        let t = RelatorTable::new(TableKind::C0, g(2));
        let d = search(&[1, 3], &[3, 1], &t, SearchBounds::default()).unwrap();
        assert_eq!(d.count_relator(|r| r == RelatorId::R1 { i: 1, j: 3 }), 1);
        assert_eq!(check(&d, &[1, 3], &[3, 1], &t), Ok(true));
        let d = search(&[1, 2, 1], &[2, 1, 2], &t, SearchBounds::default()).unwrap();
        assert_eq!(d.count_relator(|r| r == RelatorId::R2 { i: 1 }), 1);
        assert!(search(&[1, 2], &[1, 2], &t, SearchBounds::default())
            .unwrap()
            .steps
            .is_empty());
    }

    #[test]
    fn search_handles_unreduced_endpoints() {
        let t = RelatorTable::new(TableKind::C0, g(2));
        let d = search(&[1, 2, -2, 3], &[3, -4, 4, 1], &t, SearchBounds::default()).unwrap();
        assert_eq!(check(&d, &[1, 2, -2, 3], &[3, -4, 4, 1], &t), Ok(true));
    }

    #[test]
    fn filler_step_counts() {
        for n in 2..=4 {
            for k in 1..=2 * n + 1 {
                let d = centrality_filler(k, g(n)).unwrap();
                assert!(d.steps.len() <= FILLER_STEP_CONSTANT * n * n);
                assert_eq!(
                    d.count_relator(|r| matches!(r, RelatorId::R3 | RelatorId::R4)),
                    0
                );
            }
        }
    }

    #[test]
    fn filler_checks_for_small_genus() {
        for n in 2..=3 {
            let t = RelatorTable::new(TableKind::CTilde, g(n));
            for k in 1..=2 * n + 1 {
                let d = centrality_filler(k, g(n)).unwrap();
                assert_eq!(
                    check(&d, &commutator_with_delta(k, g(n)), &[], &t),
                    Ok(true),
                    "g={n} k={k}"
                );
            }
        }
        assert!(centrality_filler(0, g(2)).is_err());
        assert!(centrality_filler(6, g(2)).is_err());
    }
}
