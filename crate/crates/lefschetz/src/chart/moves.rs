//! Local chart moves. Every move validates its output.

use serde::{Deserialize, Serialize};

use super::{
    classify_vertex, validate_chart, Chart, ChartError, Hoop, Topology, Vertex, VertexKind,
    VertexType,
};
use crate::relators::RelatorId;
use sphere_braid::word;

/// Replacement contents for a disk: darts listed by `ports` are left open
/// and are glued, counterclockwise, to the edges leaving the site.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiskPatch {
    pub pairing: Vec<Option<usize>>,
    pub labels: Vec<usize>,
    pub outgoing: Vec<bool>,
    pub vertices: Vec<Vertex>,
    pub hoops: Vec<Hoop>,
    pub ports: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum ChartMove {
    /// Reconnects two consistently oriented, equally labeled edges across a shared region.
    ChannelChange {
        first: usize,
        second: usize,
    },
    HoopBirth {
        label: usize,
        counterclockwise: bool,
    },
    HoopDeath {
        hoop: usize,
    },
    /// Adds two white vertices reading `r` and `r^-1`, joined by parallel edges.
    PairBirth {
        relator: RelatorId,
        inverse: bool,
    },
    PairDeath {
        first: usize,
        second: usize,
    },
    /// Replaces a disk without black vertices.
    ReplaceDisk {
        site: Vec<usize>,
        start: usize,
        patch: DiskPatch,
    },
    /// Replaces a disk around one black vertex by one around a black vertex of the same type.
    Transition {
        site: Vec<usize>,
        start: usize,
        patch: DiskPatch,
    },
    /// Moves the base point across the edge of `dart`.
    Conjugacy {
        dart: usize,
    },
}

fn inadmissible(why: impl Into<String>) -> ChartError {
    ChartError::Inadmissible(why.into())
}

/// Unordered dart pairs admitting a channel change.
pub fn channel_changes(c: &Chart) -> Result<Vec<(usize, usize)>, ChartError> {
    let topo = c.topology()?;
    let mut out = Vec::new();
    for a in 0..c.darts() {
        for b in a + 1..c.darts() {
            if channel_admissible(c, &topo, a, b) {
                out.push((a, b));
            }
        }
    }
    Ok(out)
}

fn channel_admissible(c: &Chart, topo: &Topology, a: usize, b: usize) -> bool {
    a != b
        && c.pairing[a] != b
        && c.labels[a] == c.labels[b]
        && c.outgoing[a] == c.outgoing[b]
        && topo.face[a] == topo.face[b]
}

/// Vertex pairs admitting a pair death.
pub fn pair_deaths(c: &Chart) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..c.vertices.len() {
        for b in a + 1..c.vertices.len() {
            if mirrored(c, a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// True iff the darts of `a` and `b` pair off in mirrored order.
fn mirrored(c: &Chart, a: usize, b: usize) -> bool {
    let (va, vb) = (&c.vertices[a], &c.vertices[b]);
    let n = va.rotation.len();
    if va.kind != VertexKind::White
        || vb.kind != VertexKind::White
        || n == 0
        || n != vb.rotation.len()
    {
        return false;
    }
    let Some(k) = vb
        .rotation
        .iter()
        .position(|&d| d == c.pairing[va.rotation[0]])
    else {
        return false;
    };
    (0..n).all(|t| c.pairing[va.rotation[t]] == vb.rotation[(k + n - t) % n])
}

/// Darts on the base region's boundary, whose edges the base point may cross.
pub fn conjugacy_sites(c: &Chart) -> Result<Vec<usize>, ChartError> {
    let topo = c.topology()?;
    Ok(match c.base_region {
        Some(b) => (0..c.darts())
            .filter(|&d| topo.face[d] == topo.face[b])
            .collect(),
        None => Vec::new(),
    })
}

pub fn apply_move(c: &Chart, mv: &ChartMove) -> Result<Chart, ChartError> {
    let topo = c.topology()?;
    let mut out = match mv {
        ChartMove::ChannelChange { first, second } => {
            let (a, b) = (*first, *second);
            if a >= c.darts() || b >= c.darts() || !channel_admissible(c, &topo, a, b) {
                return Err(inadmissible(
                    "darts do not face each other across one region",
                ));
            }
            let mut out = c.clone();
            let (pa, pb) = (c.pairing[a], c.pairing[b]);
            out.pairing[a] = pb;
            out.pairing[pb] = a;
            out.pairing[b] = pa;
            out.pairing[pa] = b;
            out
        }
        ChartMove::HoopBirth {
            label,
            counterclockwise,
        } => {
            let mut out = c.clone();
            out.hoops.push(Hoop {
                label: *label,
                counterclockwise: *counterclockwise,
            });
            out
        }
        ChartMove::HoopDeath { hoop } => {
            if *hoop >= c.hoops.len() {
                return Err(inadmissible(format!("no hoop {hoop}")));
            }
            let mut out = c.clone();
            out.hoops.remove(*hoop);
            out
        }
        ChartMove::PairBirth { relator, inverse } => pair_birth(c, *relator, *inverse)?,
        ChartMove::PairDeath { first, second } => {
            let n = c.vertices.len();
            if *first >= n || *second >= n || !mirrored(c, *first, *second) {
                return Err(inadmissible("vertices are not a mirrored white pair"));
            }
            let mut gone = vec![false; n];
            gone[*first] = true;
            gone[*second] = true;
            remove_vertices(c, &topo, &gone).0
        }
        ChartMove::ReplaceDisk { site, start, patch } => {
            replace_disk(c, &topo, site, *start, patch, false)?
        }
        ChartMove::Transition { site, start, patch } => {
            replace_disk(c, &topo, site, *start, patch, true)?
        }
        ChartMove::Conjugacy { dart } => {
            let b = c
                .base_region
                .ok_or_else(|| inadmissible("chart has no base region"))?;
            if *dart >= c.darts() || topo.face[*dart] != topo.face[b] {
                return Err(inadmissible("edge does not bound the base region"));
            }
            let mut out = c.clone();
            out.base_region = Some(c.pairing[*dart]);
            out
        }
    };
    if out.base_region.is_some() && out.darts() == 0 {
        out.base_region = None;
    }
    let report =
        validate_chart(&out).map_err(|e| inadmissible(format!("result is malformed: {e}")))?;
    if !report.valid {
        return Err(inadmissible(format!(
            "result has unmatched vertices {:?}",
            report.offending
        )));
    }
    Ok(out)
}

fn pair_birth(c: &Chart, relator: RelatorId, inverse: bool) -> Result<Chart, ChartError> {
    let table = c.relator_table();
    let r = table
        .relator(relator)
        .ok_or_else(|| inadmissible(format!("{relator:?} is not in the table")))?;
    let r = if inverse {
        word::inverse(r)
    } else {
        r.to_vec()
    };
    let mut out = c.clone();
    let base = c.darts();
    let n = r.len();
    for (t, &l) in r.iter().enumerate() {
        out.pairing.push(base + n + t);
        out.labels.push(l.unsigned_abs() as usize);
        out.outgoing.push(l > 0);
    }
    for (t, &l) in r.iter().enumerate() {
        out.pairing.push(base + t);
        out.labels.push(l.unsigned_abs() as usize);
        out.outgoing.push(l < 0);
    }
    let first: Vec<usize> = (base..base + n).collect();
    let second: Vec<usize> = (base + n..base + 2 * n).rev().collect();
    out.vertices.push(Vertex {
        kind: VertexKind::White,
        mark: Some(first[0]),
        rotation: first,
    });
    out.vertices.push(Vertex {
        kind: VertexKind::White,
        mark: Some(second[0]),
        rotation: second,
    });
    Ok(out)
}

/// Drops the flagged vertices and their darts, keeping every other index order.
/// Darts whose partner was dropped are left unpaired. Returns the new chart and the dart map.
fn remove_vertices(c: &Chart, topo: &Topology, gone: &[bool]) -> (Chart, Vec<Option<usize>>) {
    let mut map = vec![None; c.darts()];
    let mut next = 0;
    for d in 0..c.darts() {
        if !gone[topo.owner[d]] {
            map[d] = Some(next);
            next += 1;
        }
    }
    let mut out = Chart {
        pairing: Vec::new(),
        labels: Vec::new(),
        outgoing: Vec::new(),
        vertices: Vec::new(),
        ..c.clone()
    };
    for d in (0..c.darts()).filter(|&d| map[d].is_some()) {
        out.pairing.push(map[c.pairing[d]].unwrap_or(usize::MAX));
        out.labels.push(c.labels[d]);
        out.outgoing.push(c.outgoing[d]);
    }
    for (v, vx) in c.vertices.iter().enumerate() {
        if !gone[v] {
            out.vertices.push(Vertex {
                kind: vx.kind,
                rotation: vx
                    .rotation
                    .iter()
                    .map(|&d| map[d].expect("kept vertex"))
                    .collect(),
                mark: vx.mark.and_then(|m| map[m]),
            });
        }
    }
    out.base_region = c.base_region.and_then(|b| {
        // stay in the same region if any of its darts survive
        let mut x = b;
        loop {
            if let Some(y) = map[x] {
                return Some(y);
            }
            x = topo.next_ccw[c.pairing[x]];
            if x == b {
                return None;
            }
        }
    });
    (out, map)
}

fn black_types(c: &Chart, vertices: impl Iterator<Item = usize>) -> Vec<Option<VertexType>> {
    let table = c.relator_table();
    vertices
        .filter(|&v| c.vertices[v].kind == VertexKind::Black)
        .map(|v| classify_vertex(c, v, &table))
        .collect()
}

/// Open darts of a disk in counterclockwise boundary order, starting at `start`.
fn boundary_walk(
    start: usize,
    next_ccw: impl Fn(usize) -> usize,
    partner: impl Fn(usize) -> Option<usize>,
    limit: usize,
) -> Option<Vec<usize>> {
    let mut out = vec![start];
    let mut d = start;
    let mut budget = limit + 1;
    loop {
        d = next_ccw(d);
        while let Some(p) = partner(d) {
            d = next_ccw(p);
            budget = budget.checked_sub(1)?;
        }
        if d == start {
            return Some(out);
        }
        out.push(d);
        budget = budget.checked_sub(1)?;
    }
}

fn replace_disk(
    c: &Chart,
    topo: &Topology,
    site: &[usize],
    start: usize,
    patch: &DiskPatch,
    transition: bool,
) -> Result<Chart, ChartError> {
    let nv = c.vertices.len();
    let mut in_site = vec![false; nv];
    for &v in site {
        if v >= nv || in_site[v] {
            return Err(inadmissible(format!("bad site vertex {v}")));
        }
        in_site[v] = true;
    }
    let site_darts: Vec<usize> = site
        .iter()
        .flat_map(|&v| c.vertices[v].rotation.iter().copied())
        .collect();
    let internal = |d: usize| in_site[topo.owner[c.pairing[d]]];
    let cut: Vec<usize> = site_darts
        .iter()
        .copied()
        .filter(|&d| !internal(d))
        .collect();

    let site_order = if cut.is_empty() {
        Vec::new()
    } else {
        if !cut.contains(&start) {
            return Err(inadmissible("start dart does not leave the site"));
        }
        let walk = boundary_walk(
            start,
            |d| topo.next_ccw[d],
            |d| internal(d).then(|| c.pairing[d]),
            site_darts.len(),
        )
        .ok_or_else(|| inadmissible("site boundary does not close up"))?;
        if walk.len() != cut.len() {
            return Err(inadmissible("site is not bounded by a single circle"));
        }
        walk
    };
    if let Some(b) = c.base_region {
        if site_darts.contains(&b) {
            let inside = {
                let mut x = b;
                loop {
                    if !in_site[topo.owner[x]] {
                        break false;
                    }
                    x = topo.next_ccw[c.pairing[x]];
                    if x == b {
                        break true;
                    }
                }
            };
            if inside && !cut.is_empty() {
                return Err(inadmissible("base point lies inside the site"));
            }
        }
    }

    check_patch(c, patch)?;
    if patch.ports.len() != site_order.len() {
        return Err(inadmissible(format!(
            "site has {} boundary edges, patch has {}",
            site_order.len(),
            patch.ports.len()
        )));
    }
    for (k, (&d, &p)) in site_order.iter().zip(&patch.ports).enumerate() {
        if c.labels[d] != patch.labels[p] || c.outgoing[d] != patch.outgoing[p] {
            return Err(inadmissible(format!(
                "boundary edge {k} differs from patch port"
            )));
        }
    }

    let old_black = black_types(c, site.iter().copied());
    let patch_chart = Chart {
        pairing: patch
            .pairing
            .iter()
            .map(|p| p.unwrap_or(usize::MAX))
            .collect(),
        labels: patch.labels.clone(),
        outgoing: patch.outgoing.clone(),
        vertices: patch.vertices.clone(),
        hoops: Vec::new(),
        base_region: None,
        ..c.clone()
    };
    let new_black = black_types(&patch_chart, 0..patch.vertices.len());
    if transition {
        if old_black.len() != 1
            || new_black.len() != 1
            || old_black[0].is_none()
            || old_black != new_black
        {
            return Err(inadmissible(
                "transition needs one black vertex of the same type on each side",
            ));
        }
    } else if !old_black.is_empty() || !new_black.is_empty() {
        return Err(inadmissible(
            "disk replacement may not involve black vertices",
        ));
    }

    let (mut out, map) = remove_vertices(c, topo, &in_site);
    let offset = out.darts();
    for (d, p) in patch.pairing.iter().enumerate() {
        out.pairing.push(p.map_or(usize::MAX, |q| q + offset));
        out.labels.push(patch.labels[d]);
        out.outgoing.push(patch.outgoing[d]);
    }
    for (&d, &p) in site_order.iter().zip(&patch.ports) {
        let outside = map[c.pairing[d]].expect("cut edges end outside the site");
        out.pairing[outside] = p + offset;
        out.pairing[p + offset] = outside;
    }
    out.vertices.extend(patch.vertices.iter().map(|vx| Vertex {
        kind: vx.kind,
        rotation: vx.rotation.iter().map(|d| d + offset).collect(),
        mark: vx.mark.map(|m| m + offset),
    }));
    out.hoops.extend(patch.hoops.iter().copied());
    if out.base_region.is_none() && c.base_region.is_some() {
        out.base_region = site_order.first().and_then(|&d| map[c.pairing[d]]);
    }
    Ok(out)
}

fn check_patch(c: &Chart, patch: &DiskPatch) -> Result<(), ChartError> {
    let n = patch.pairing.len();
    if patch.labels.len() != n || patch.outgoing.len() != n {
        return Err(ChartError::Patch("dart arrays disagree in length".into()));
    }
    for (d, p) in patch.pairing.iter().enumerate() {
        match *p {
            Some(q) if q >= n || q == d || patch.pairing[q] != Some(d) => {
                return Err(ChartError::Patch(format!(
                    "dart {d} is paired inconsistently"
                )));
            }
            None if !patch.ports.contains(&d) => {
                return Err(ChartError::Patch(format!(
                    "dart {d} is open but not a port"
                )));
            }
            _ => {}
        }
    }
    if patch
        .ports
        .iter()
        .any(|&p| p >= n || patch.pairing[p].is_some())
    {
        return Err(ChartError::Patch("ports must be open darts".into()));
    }
    let mut owner = vec![usize::MAX; n];
    let mut next = vec![usize::MAX; n];
    for (v, vx) in patch.vertices.iter().enumerate() {
        for (t, &d) in vx.rotation.iter().enumerate() {
            if d >= n || owner[d] != usize::MAX {
                return Err(ChartError::Patch(format!("dart {d} has no single vertex")));
            }
            owner[d] = v;
            next[d] = vx.rotation[(t + 1) % vx.rotation.len()];
        }
    }
    if owner.contains(&usize::MAX) {
        return Err(ChartError::Patch("a dart belongs to no vertex".into()));
    }
    if let Some(&first) = patch.ports.first() {
        let walk = boundary_walk(first, |d| next[d], |d| patch.pairing[d], n)
            .ok_or_else(|| ChartError::Patch("boundary does not close up".into()))?;
        if walk != patch.ports {
            return Err(ChartError::Patch("ports are not in boundary order".into()));
        }
    }
    if patch
        .labels
        .iter()
        .any(|&l| l == 0 || l > c.fiber_genus.generators())
    {
        return Err(ChartError::Patch("label out of range".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Genus;
    use crate::chart::{counts, degree_sum_check, patch_from_steps, r4_chart};
    use crate::derivation::Step;
    use crate::hurwitz::{Core, Factor};
    use crate::relators::TableKind;

    fn g(n: usize) -> Genus {
        Genus::new(n).unwrap()
    }

    #[test]
    fn hoop_birth_then_death() {
        let c = r4_chart(g(2));
        let born = apply_move(
            &c,
            &ChartMove::HoopBirth {
                label: 3,
                counterclockwise: true,
            },
        )
        .unwrap();
        let back = apply_move(&born, &ChartMove::HoopDeath { hoop: 0 }).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn pair_birth_then_death() {
        let c = r4_chart(g(2));
        let born = apply_move(
            &c,
            &ChartMove::PairBirth {
                relator: RelatorId::R2 { i: 1 },
                inverse: false,
            },
        )
        .unwrap();
        assert_eq!(counts(&born).unwrap().m2[0], 0);
        let n = born.vertices.len();
        assert_eq!(pair_deaths(&born), vec![(n - 2, n - 1)]);
        let back = apply_move(
            &born,
            &ChartMove::PairDeath {
                first: n - 2,
                second: n - 1,
            },
        )
        .unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn channel_change_keeps_counts() {
        let c = apply_move(
            &r4_chart(g(2)),
            &ChartMove::PairBirth {
                relator: RelatorId::R3,
                inverse: true,
            },
        )
        .unwrap();
        let sites = channel_changes(&c).unwrap();
        assert!(!sites.is_empty());
        for &(first, second) in sites.iter().take(20) {
            let moved = apply_move(&c, &ChartMove::ChannelChange { first, second }).unwrap();
            assert_eq!(counts(&moved).unwrap(), counts(&c).unwrap());
            assert!(degree_sum_check(&moved));
        }
    }

    #[test]
    fn conjugacy_moves_base() {
        let c = r4_chart(g(2));
        let sites = conjugacy_sites(&c).unwrap();
        let moved = apply_move(&c, &ChartMove::Conjugacy { dart: sites[0] }).unwrap();
        assert_eq!(moved.base_region, Some(c.pairing[sites[0]]));
        assert!(apply_move(
            &Chart::empty(TableKind::CHat, g(2), 0),
            &ChartMove::Conjugacy { dart: 0 }
        )
        .is_err());
    }

    #[test]
    fn transition_with_even_r4_box() {
        let c = r4_chart(g(3));
        let leaf = (0..c.vertices.len())
            .find(|&v| c.vertices[v].kind == VertexKind::Black)
            .unwrap();
        let d = c.vertices[leaf].rotation[0];
        let k = c.labels[d];
        let steps = [
            Step::RelatorInsert {
                pos: 1,
                conjugator: vec![],
                relator: RelatorId::R4,
                inverse: false,
            },
            Step::RelatorDelete {
                pos: 1,
                conjugator: vec![],
                relator: RelatorId::R4,
                inverse: false,
            },
        ];
        let patch = patch_from_steps(
            TableKind::CHat,
            g(3),
            &[Factor::plain(Core::twist(k))],
            &steps,
        )
        .unwrap();
        let moved = apply_move(
            &c,
            &ChartMove::Transition {
                site: vec![leaf],
                start: d,
                patch: patch.clone(),
            },
        )
        .unwrap();
        let (before, after) = (counts(&c).unwrap(), counts(&moved).unwrap());
        assert_eq!(after.w, before.w);
        assert_eq!(after.m4, before.m4);
        assert_eq!(after.n0_plus, before.n0_plus);
        assert_eq!(moved.vertices.len(), c.vertices.len() + 2);
        let err = apply_move(
            &c,
            &ChartMove::ReplaceDisk {
                site: vec![leaf],
                start: d,
                patch,
            },
        );
        assert!(matches!(err, Err(ChartError::Inadmissible(_))));
    }

    #[test]
    fn replace_white_vertex_by_itself_with_crossing_pair() {
        let c = r4_chart(g(2));
        let white = (0..c.vertices.len())
            .find(|&v| c.vertices[v].kind == VertexKind::White)
            .unwrap();
        // the patch lists its ports from the one carrying the last letter
        let start = *c.vertices[white].rotation.last().unwrap();
        let r4 = c.relator_table().relator(RelatorId::R4).unwrap().to_vec();
        // the disk around a vertex reading r4 reads r4^-1 clockwise
        let steps = [
            Step::RelatorInsert {
                pos: 0,
                conjugator: vec![],
                relator: RelatorId::R4,
                inverse: true,
            },
            Step::FreeInsert { pos: 0, letter: 2 },
            Step::RelatorInsert {
                pos: 1,
                conjugator: vec![],
                relator: RelatorId::R2 { i: 1 },
                inverse: true,
            },
            Step::RelatorDelete {
                pos: 1,
                conjugator: vec![],
                relator: RelatorId::R2 { i: 1 },
                inverse: true,
            },
            Step::FreeDelete { pos: 0 },
        ];
        let patch = patch_from_steps(TableKind::CHat, g(2), &[], &steps).unwrap();
        assert_eq!(patch.ports.len(), r4.len());
        let moved = apply_move(
            &c,
            &ChartMove::ReplaceDisk {
                site: vec![white],
                start,
                patch,
            },
        )
        .unwrap();
        let k = counts(&moved).unwrap();
        assert_eq!((k.m4, k.w, k.m2[0]), (1, 1, 0));
        assert_eq!(moved.hoops.len(), 1);
        assert!(degree_sum_check(&moved));
    }
}
