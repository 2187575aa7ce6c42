//! Charts on a closed oriented surface, stored as rotation systems.
//!
//! Every edge is a pair of darts. A dart knows its label and whether the
//! edge points away from the vertex it leaves. Vertex words are read
//! counterclockwise, an outgoing edge contributing `+label` and an incoming
//! one `-label`. White vertices read a relator (or its inverse). Black
//! vertices read the inverse of their fiber's letter, so a positive type I
//! fiber is a sink.

mod build;
mod moves;

use serde::{Deserialize, Serialize};
use sphere_braid::word;
use thiserror::Error;

use crate::alphabet::Genus;
use crate::derivation::DerivationError;
use crate::error::LefschetzError;
use crate::hurwitz::{ChainCount, Sign};
use crate::relators::{LetterType, RelatorId, RelatorTable, TableKind};

pub use build::{
    from_hurwitz, gamma0_chart, l0_chart, lh_chart, patch_from_steps, r3_chart, r4_chart,
};
pub use moves::{apply_move, channel_changes, conjugacy_sites, pair_deaths, ChartMove, DiskPatch};

#[derive(Debug, Error)]
pub enum ChartError {
    #[error("dart arrays disagree: {pairing} pairings, {labels} labels, {outgoing} orientations")]
    ArrayLengths {
        pairing: usize,
        labels: usize,
        outgoing: usize,
    },
    #[error("dart {dart} is paired with {partner}, which does not pair back")]
    BadPairing { dart: usize, partner: usize },
    #[error("dart {0} and its partner disagree on label or orientation")]
    EdgeMismatch(usize),
    #[error("dart {dart} appears in {count} vertex rotations")]
    DartOwnership { dart: usize, count: usize },
    #[error("label {label} on dart {dart} is outside 1..={generators}")]
    LabelRange {
        dart: usize,
        label: usize,
        generators: usize,
    },
    #[error("hoop {hoop} has label {label} outside 1..={generators}")]
    HoopLabel {
        hoop: usize,
        label: usize,
        generators: usize,
    },
    #[error("mark of vertex {0} is not one of its darts")]
    Mark(usize),
    #[error("a component has odd Euler characteristic {0}")]
    OddEuler(i64),
    #[error("components need total genus {needed}, the surface has genus {surface}")]
    Embedding { needed: usize, surface: usize },
    #[error("dart {0} does not exist")]
    NoSuchDart(usize),
    #[error("vertex {0} does not exist")]
    NoSuchVertex(usize),
    #[error("vertex words do not match the table at vertices {0:?}")]
    InvalidVertices(Vec<usize>),
    #[error("crossing {0} does not start in the region where the previous one ended")]
    NonAdjacent(usize),
    #[error("inadmissible move: {0}")]
    Inadmissible(String),
    #[error("malformed patch: {0}")]
    Patch(String),
    #[error("charts are built over the sphere only, base genus is {0}")]
    NotOverSphere(usize),
    #[error("certificate does not reduce the global word to the identity")]
    CertificateFails,
    #[error(transparent)]
    Derivation(#[from] DerivationError),
    #[error(transparent)]
    System(#[from] LefschetzError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    White,
    Black,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vertex {
    pub kind: VertexKind,
    /// Darts leaving the vertex, counterclockwise.
    pub rotation: Vec<usize>,
    /// Dart where the exact relator word starts, for marked vertices.
    pub mark: Option<usize>,
}

/// A closed edge without vertices, bounding an empty disk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hoop {
    pub label: usize,
    pub counterclockwise: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chart {
    pub table: TableKind,
    pub fiber_genus: Genus,
    pub surface_genus: usize,
    pub pairing: Vec<usize>,
    pub labels: Vec<usize>,
    pub outgoing: Vec<bool>,
    pub vertices: Vec<Vertex>,
    pub hoops: Vec<Hoop>,
    /// A dart whose right-hand region holds the base point.
    pub base_region: Option<usize>,
}

/// Which relator or fiber a vertex realizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum VertexType {
    White { relator: RelatorId, sign: Sign },
    Black { letter: LetterType, sign: Sign },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartReport {
    pub valid: bool,
    /// Vertices whose words match nothing in the table.
    pub offending: Vec<usize>,
    /// One entry per vertex, `None` where the word matches nothing.
    pub types: Vec<Option<VertexType>>,
}

/// Derived incidence data of a structurally sound chart.
#[derive(Debug, Clone)]
pub(crate) struct Topology {
    pub owner: Vec<usize>,
    pub next_ccw: Vec<usize>,
    /// Region on the right of each dart.
    pub face: Vec<usize>,
    pub faces: usize,
}

/// Crossing the edge of `dart`, from its right side to its left side iff `leftward`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Crossing {
    pub dart: usize,
    pub leftward: bool,
}

impl Crossing {
    pub fn reversed(self) -> Self {
        Self {
            leftward: !self.leftward,
            ..self
        }
    }
}

impl Chart {
    pub fn empty(table: TableKind, fiber_genus: Genus, surface_genus: usize) -> Self {
        Self {
            table,
            fiber_genus,
            surface_genus,
            pairing: Vec::new(),
            labels: Vec::new(),
            outgoing: Vec::new(),
            vertices: Vec::new(),
            hoops: Vec::new(),
            base_region: None,
        }
    }

    pub fn darts(&self) -> usize {
        self.pairing.len()
    }

    pub fn relator_table(&self) -> RelatorTable {
        RelatorTable::new(self.table, self.fiber_genus)
    }

    /// Signed letter a dart contributes to the word of its vertex.
    pub fn dart_letter(&self, d: usize) -> i32 {
        let l = self.labels[d] as i32;
        if self.outgoing[d] {
            l
        } else {
            -l
        }
    }

    /// Counterclockwise word of a vertex, starting at its mark when present.
    pub fn vertex_word(&self, v: usize) -> Vec<i32> {
        let vx = &self.vertices[v];
        let start = vx
            .mark
            .and_then(|m| vx.rotation.iter().position(|&d| d == m))
            .unwrap_or(0);
        let n = vx.rotation.len();
        (0..n)
            .map(|t| self.dart_letter(vx.rotation[(start + t) % n]))
            .collect()
    }

    pub(crate) fn topology(&self) -> Result<Topology, ChartError> {
        let n = self.darts();
        if self.labels.len() != n || self.outgoing.len() != n {
            return Err(ChartError::ArrayLengths {
                pairing: n,
                labels: self.labels.len(),
                outgoing: self.outgoing.len(),
            });
        }
        let generators = self.fiber_genus.generators();
        for d in 0..n {
            let p = self.pairing[d];
            if p >= n || p == d || self.pairing[p] != d {
                return Err(ChartError::BadPairing {
                    dart: d,
                    partner: p,
                });
            }
            if self.labels[d] != self.labels[p] || self.outgoing[d] == self.outgoing[p] {
                return Err(ChartError::EdgeMismatch(d));
            }
            if self.labels[d] == 0 || self.labels[d] > generators {
                return Err(ChartError::LabelRange {
                    dart: d,
                    label: self.labels[d],
                    generators,
                });
            }
        }
        for (hoop, h) in self.hoops.iter().enumerate() {
            if h.label == 0 || h.label > generators {
                return Err(ChartError::HoopLabel {
                    hoop,
                    label: h.label,
                    generators,
                });
            }
        }
        let mut owner = vec![usize::MAX; n];
        let mut next_ccw = vec![usize::MAX; n];
        let mut seen = vec![0usize; n];
        for (v, vx) in self.vertices.iter().enumerate() {
            for (t, &d) in vx.rotation.iter().enumerate() {
                if d >= n {
                    return Err(ChartError::NoSuchDart(d));
                }
                seen[d] += 1;
                owner[d] = v;
                next_ccw[d] = vx.rotation[(t + 1) % vx.rotation.len()];
            }
            if let Some(m) = vx.mark {
                if !vx.rotation.contains(&m) {
                    return Err(ChartError::Mark(v));
                }
            }
        }
        if let Some((dart, &count)) = seen.iter().enumerate().find(|(_, &c)| c != 1) {
            return Err(ChartError::DartOwnership { dart, count });
        }
        if let Some(b) = self.base_region {
            if b >= n {
                return Err(ChartError::NoSuchDart(b));
            }
        }
        let mut face = vec![usize::MAX; n];
        let mut faces = 0;
        for d in 0..n {
            if face[d] != usize::MAX {
                continue;
            }
            let mut x = d;
            while face[x] == usize::MAX {
                face[x] = faces;
                x = next_ccw[self.pairing[x]];
            }
            faces += 1;
        }
        let topo = Topology {
            owner,
            next_ccw,
            face,
            faces,
        };
        self.check_embedding(&topo)?;
        Ok(topo)
    }

    /// Every component must be a closed surface whose genera fit in the ambient surface.
    fn check_embedding(&self, topo: &Topology) -> Result<(), ChartError> {
        let nv = self.vertices.len();
        let mut comp: Vec<usize> = (0..nv).collect();
        fn root(comp: &mut [usize], mut v: usize) -> usize {
            while comp[v] != v {
                comp[v] = comp[comp[v]];
                v = comp[v];
            }
            v
        }
        for d in 0..self.darts() {
            let (a, b) = (
                root(&mut comp, topo.owner[d]),
                root(&mut comp, topo.owner[self.pairing[d]]),
            );
            comp[a] = b;
        }
        let mut euler = vec![0i64; nv];
        for v in 0..nv {
            let r = root(&mut comp, v);
            euler[r] += 1;
            if self.vertices[v].rotation.is_empty() {
                euler[r] += 1;
            }
        }
        let mut face_seen = vec![false; topo.faces];
        for d in 0..self.darts() {
            let r = root(&mut comp, topo.owner[d]);
            if d < self.pairing[d] {
                euler[r] -= 1;
            }
            if !face_seen[topo.face[d]] {
                face_seen[topo.face[d]] = true;
                euler[r] += 1;
            }
        }
        let mut needed = 0;
        for (v, &chi) in euler.iter().enumerate().take(nv) {
            if root(&mut comp, v) != v {
                continue;
            }
            if chi % 2 != 0 || chi > 2 {
                return Err(ChartError::OddEuler(chi));
            }
            needed += ((2 - chi) / 2) as usize;
        }
        if needed > self.surface_genus {
            return Err(ChartError::Embedding {
                needed,
                surface: self.surface_genus,
            });
        }
        Ok(())
    }

    fn classify(&self, table: &RelatorTable) -> Vec<Option<VertexType>> {
        (0..self.vertices.len())
            .map(|v| classify_vertex(self, v, table))
            .collect()
    }
}

fn is_rotation(a: &[i32], b: &[i32]) -> bool {
    let n = a.len();
    n == b.len() && (n == 0 || (0..n).any(|k| a[k..] == b[..n - k] && a[..k] == b[n - k..]))
}

/// Matches `w` against `target` and its inverse; exact when `marked`.
fn match_signed(w: &[i32], target: &[i32], marked: bool) -> Option<Sign> {
    let inv = word::inverse(target);
    let same = |x: &[i32]| if marked { w == x } else { is_rotation(w, x) };
    if same(target) {
        Some(Sign::Plus)
    } else if same(&inv) {
        Some(Sign::Minus)
    } else {
        None
    }
}

fn classify_vertex(c: &Chart, v: usize, table: &RelatorTable) -> Option<VertexType> {
    let w = c.vertex_word(v);
    if w.is_empty() {
        return None;
    }
    let marked = c.vertices[v].mark.is_some();
    match c.vertices[v].kind {
        VertexKind::White => table.relators.iter().find_map(|r| {
            match_signed(&w, &r.word, marked).map(|sign| VertexType::White {
                relator: r.id,
                sign,
            })
        }),
        VertexKind::Black => table.letters.iter().find_map(|(letter, s)| {
            // black words read the inverse of the fiber letter
            match_signed(&w, s, marked).map(|sign| VertexType::Black {
                letter: *letter,
                sign: if sign.is_plus() {
                    Sign::Minus
                } else {
                    Sign::Plus
                },
            })
        }),
    }
}

pub fn validate_chart(c: &Chart) -> Result<ChartReport, ChartError> {
    c.topology()?;
    let types = c.classify(&c.relator_table());
    let offending: Vec<usize> = types
        .iter()
        .enumerate()
        .filter(|(_, t)| t.is_none())
        .map(|(v, _)| v)
        .collect();
    Ok(ChartReport {
        valid: offending.is_empty(),
        offending,
        types,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PairCount {
    pub i: usize,
    pub j: usize,
    pub count: i64,
}

/// Signed white-vertex tallies by relator family and black-vertex tallies by fiber type.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChartCounts {
    pub m1: Vec<PairCount>,
    /// Indexed by `i - 1`.
    pub m2: Vec<i64>,
    pub m3: i64,
    pub m4: i64,
    pub m5: i64,
    /// Indexed by `i - 1`.
    pub n0_plus: Vec<usize>,
    pub n0_minus: Vec<usize>,
    pub chains: Vec<ChainCount>,
    /// Parity of the number of `r4` and `r4^-1` vertices.
    pub w: u8,
}

impl ChartCounts {
    fn zero(table: &RelatorTable) -> Self {
        let g = table.genus;
        let n = g.generators();
        Self {
            m1: table
                .relators
                .iter()
                .filter_map(|r| match r.id {
                    RelatorId::R1 { i, j } => Some(PairCount { i, j, count: 0 }),
                    _ => None,
                })
                .collect(),
            m2: vec![0; n.saturating_sub(1)],
            m3: 0,
            m4: 0,
            m5: 0,
            n0_plus: vec![0; n],
            n0_minus: vec![0; n],
            chains: (1..=g.max_chain())
                .map(|h| ChainCount {
                    h,
                    plus: 0,
                    minus: 0,
                })
                .collect(),
            w: 0,
        }
    }

    fn tally(table: &RelatorTable, types: impl IntoIterator<Item = VertexType>) -> Self {
        let mut c = Self::zero(table);
        let mut r4 = 0usize;
        for t in types {
            match t {
                VertexType::White { relator, sign } => {
                    let s = i64::from(i32::from(sign));
                    match relator {
                        RelatorId::R1 { i, j } => {
                            if let Some(p) = c.m1.iter_mut().find(|p| p.i == i && p.j == j) {
                                p.count += s;
                            }
                        }
                        RelatorId::R2 { i } => c.m2[i - 1] += s,
                        RelatorId::R3 => c.m3 += s,
                        RelatorId::R4 => {
                            c.m4 += s;
                            r4 += 1;
                        }
                        RelatorId::R5 => c.m5 += s,
                    }
                }
                VertexType::Black { letter, sign } => match letter {
                    LetterType::Twist { i } => {
                        if sign.is_plus() {
                            c.n0_plus[i - 1] += 1;
                        } else {
                            c.n0_minus[i - 1] += 1;
                        }
                    }
                    LetterType::Chain { h } => {
                        let ch = &mut c.chains[h - 1];
                        if sign.is_plus() {
                            ch.plus += 1;
                        } else {
                            ch.minus += 1;
                        }
                    }
                },
            }
        }
        c.w = (r4 % 2) as u8;
        c
    }

    /// Signed count of type I fibers.
    pub fn n0(&self) -> i64 {
        self.n0_plus.iter().sum::<usize>() as i64 - self.n0_minus.iter().sum::<usize>() as i64
    }
}

pub fn counts(c: &Chart) -> Result<ChartCounts, ChartError> {
    let report = validate_chart(c)?;
    if !report.valid {
        return Err(ChartError::InvalidVertices(report.offending));
    }
    Ok(ChartCounts::tally(
        &c.relator_table(),
        report.types.into_iter().flatten(),
    ))
}

/// Every edge leaves one vertex and enters another, so the signed degrees
/// of white vertices and black vertices balance.
///
/// Vertices are classified from their words alone, so a chart with a
/// missing vertex still yields a (failing) answer.
pub fn degree_sum_check(c: &Chart) -> bool {
    let table = c.relator_table();
    let counts = ChartCounts::tally(&table, c.classify(&table).into_iter().flatten());
    let degree = |id| table.relator(id).map_or(0, RelatorTable::degree);
    let white = degree(RelatorId::R3) * counts.m3 + degree(RelatorId::R4) * counts.m4;
    let black: i64 = counts.n0()
        + counts
            .chains
            .iter()
            .map(|ch| (4 * ch.h * (2 * ch.h + 1)) as i64 * (ch.plus as i64 - ch.minus as i64))
            .sum::<i64>();
    white == black
}

/// Reads the signed labels crossed by a path of crossings.
///
/// Crossing an edge from its right to its left, relative to the edge's
/// orientation, reads `+label`.
pub fn intersection_word(c: &Chart, path: &[Crossing]) -> Result<Vec<i32>, ChartError> {
    let topo = c.topology()?;
    let mut prev_end = None;
    let mut out = Vec::with_capacity(path.len());
    for (index, x) in path.iter().enumerate() {
        if x.dart >= c.darts() {
            return Err(ChartError::NoSuchDart(x.dart));
        }
        let (right, left) = (topo.face[x.dart], topo.face[c.pairing[x.dart]]);
        let (from, to) = if x.leftward {
            (right, left)
        } else {
            (left, right)
        };
        if prev_end.is_some_and(|f| f != from) {
            return Err(ChartError::NonAdjacent(index));
        }
        prev_end = Some(to);
        let sign = if x.leftward == c.outgoing[x.dart] {
            1
        } else {
            -1
        };
        out.push(sign * c.labels[x.dart] as i32);
    }
    Ok(out)
}

/// Counterclockwise loop around a vertex; it reads the vertex word.
pub fn meridian(c: &Chart, v: usize) -> Result<Vec<Crossing>, ChartError> {
    let vx = c.vertices.get(v).ok_or(ChartError::NoSuchVertex(v))?;
    Ok(vx
        .rotation
        .iter()
        .map(|&dart| Crossing {
            dart,
            leftward: true,
        })
        .collect())
}

/// Clockwise loop around a black vertex; it reads the fiber's monodromy.
pub fn fiber_loop(c: &Chart, v: usize) -> Result<Vec<Crossing>, ChartError> {
    let mut m = meridian(c, v)?;
    m.reverse();
    Ok(m.into_iter().map(Crossing::reversed).collect())
}
