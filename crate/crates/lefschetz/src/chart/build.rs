//! Charts realizing Hurwitz systems, filled in by relator certificates.
//!
//! The factors become black vertices inside a disk. Their conjugators are
//! nested arcs around them. The ports on the disk boundary, read clockwise
//! (inward edges positive), spell the global word. Each certificate step
//! then rewrites the ports from the outside: deletions attach a white vertex
//! or an arc to consecutive ports, and insertions create new ones.

use sphere_braid::word;

use super::{Chart, ChartError, DiskPatch, Hoop, Vertex, VertexKind};
use crate::alphabet::Genus;
use crate::corpus::Example;
use crate::derivation::{apply_step, check, reduction_steps, Derivation, Step};
use crate::hurwitz::{involution_power, validate, Core, Factor, MonodromyData, Sign};
use crate::relators::{RelatorId, RelatorTable, TableKind};

const UNPAIRED: usize = usize::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Far {
    Dart(usize),
    /// The other open end of a vertex-free arc.
    Port(usize),
}

struct Builder {
    chart: Chart,
    table: RelatorTable,
    letters: Vec<i32>,
    far: Vec<Far>,
    /// Current boundary, clockwise.
    boundary: Vec<usize>,
}

impl Builder {
    fn new(table: TableKind, genus: Genus) -> Self {
        Self {
            chart: Chart::empty(table, genus, 0),
            table: RelatorTable::new(table, genus),
            letters: Vec::new(),
            far: Vec::new(),
            boundary: Vec::new(),
        }
    }

    fn word(&self) -> Vec<i32> {
        self.boundary.iter().map(|&p| self.letters[p]).collect()
    }

    /// Adds a vertex reading `ccw` counterclockwise from its first dart.
    fn vertex(&mut self, kind: VertexKind, ccw: &[i32], marked: bool) -> Vec<usize> {
        let start = self.chart.darts();
        for &l in ccw {
            self.chart.pairing.push(UNPAIRED);
            self.chart.labels.push(l.unsigned_abs() as usize);
            self.chart.outgoing.push(l > 0);
        }
        let rotation: Vec<usize> = (start..start + ccw.len()).collect();
        let mark = if marked {
            rotation.first().copied()
        } else {
            None
        };
        self.chart.vertices.push(Vertex {
            kind,
            rotation: rotation.clone(),
            mark,
        });
        rotation
    }

    fn port(&mut self, letter: i32, far: Far) -> usize {
        self.letters.push(letter);
        self.far.push(far);
        self.letters.len() - 1
    }

    /// Ports `letter`, `-letter` joined by an arc.
    fn arc(&mut self, letter: i32) -> (usize, usize) {
        let p = self.port(letter, Far::Dart(UNPAIRED));
        let q = self.port(-letter, Far::Port(p));
        self.far[p] = Far::Port(q);
        (p, q)
    }

    fn attach(&mut self, end: Far, to: Far) {
        match (end, to) {
            (Far::Dart(a), Far::Dart(b)) => {
                self.chart.pairing[a] = b;
                self.chart.pairing[b] = a;
            }
            (Far::Port(x), other) | (other, Far::Port(x)) => {
                self.far[x] = other;
                if let Far::Port(y) = other {
                    self.far[y] = Far::Port(x);
                }
            }
        }
    }

    /// Joins two ports with cancelling letters by an arc outside the boundary.
    fn join(&mut self, p: usize, q: usize) {
        if self.far[p] == Far::Port(q) {
            let l = self.letters[p];
            self.chart.hoops.push(Hoop {
                label: l.unsigned_abs() as usize,
                counterclockwise: l > 0,
            });
            return;
        }
        self.attach(self.far[p], self.far[q]);
    }

    /// Places factors inside the disk, left to right along the boundary.
    fn factors(&mut self, factors: &[Factor]) {
        for f in factors {
            let arcs: Vec<(usize, usize)> = f.conjugator.iter().map(|&l| self.arc(l)).collect();
            let ccw = word::inverse(&f.core.word());
            let darts = self.vertex(VertexKind::Black, &ccw, false);
            self.boundary.extend(arcs.iter().map(|a| a.0));
            for (t, &d) in darts.iter().enumerate().rev() {
                let p = self.port(-ccw[t], Far::Dart(d));
                self.boundary.push(p);
            }
            self.boundary.extend(arcs.iter().rev().map(|a| a.1));
        }
    }

    fn relator(&self, id: RelatorId, inverse: bool) -> Vec<i32> {
        let r = self
            .table
            .relator(id)
            .expect("checked by apply_step")
            .to_vec();
        if inverse {
            word::inverse(&r)
        } else {
            r
        }
    }

    fn step(&mut self, step: &Step, index: usize) -> Result<(), ChartError> {
        let mut w = self.word();
        apply_step(&mut w, step, index, &self.table)?;
        match step {
            Step::FreeInsert { pos, letter } => {
                let (p, q) = self.arc(*letter);
                self.boundary.splice(pos..pos, [p, q]);
            }
            Step::FreeDelete { pos } => {
                let (p, q) = (self.boundary[*pos], self.boundary[pos + 1]);
                self.join(p, q);
                self.boundary.drain(*pos..pos + 2);
            }
            Step::RelatorDelete {
                pos,
                conjugator,
                relator,
                inverse,
            } => {
                let r = self.relator(*relator, *inverse);
                let (lu, lr) = (conjugator.len(), r.len());
                let span: Vec<usize> = self.boundary.drain(*pos..pos + 2 * lu + lr).collect();
                let darts = self.vertex(VertexKind::White, &r, true);
                for (t, &d) in darts.iter().enumerate() {
                    self.attach(self.far[span[lu + t]], Far::Dart(d));
                }
                for t in 0..lu {
                    self.join(span[t], span[2 * lu + lr - 1 - t]);
                }
            }
            Step::RelatorInsert {
                pos,
                conjugator,
                relator,
                inverse,
            } => {
                let r = self.relator(*relator, *inverse);
                let ccw = word::inverse(&r);
                let darts = self.vertex(VertexKind::White, &ccw, true);
                let arcs: Vec<(usize, usize)> = conjugator.iter().map(|&l| self.arc(l)).collect();
                let mut span: Vec<usize> = arcs.iter().map(|a| a.0).collect();
                for (t, &l) in r.iter().enumerate() {
                    let p = self.port(l, Far::Dart(darts[darts.len() - 1 - t]));
                    span.push(p);
                }
                span.extend(arcs.iter().rev().map(|a| a.1));
                self.boundary.splice(pos..pos, span);
            }
        }
        debug_assert_eq!(self.word(), w);
        Ok(())
    }

    fn run(&mut self, steps: &[Step]) -> Result<(), ChartError> {
        for (i, s) in steps.iter().enumerate() {
            self.step(s, i)?;
        }
        Ok(())
    }
}

/// A chart over the sphere realizing `m`, with one white vertex per relator step of `cert`.
pub fn from_hurwitz(m: &MonodromyData, cert: &Derivation) -> Result<Chart, ChartError> {
    if m.base_genus != 0 {
        return Err(ChartError::NotOverSphere(m.base_genus));
    }
    let report = validate(m)?;
    if !report.is_valid() {
        return Err(crate::LefschetzError::InvalidSystem(report.validity.to_string()).into());
    }
    let table = RelatorTable::new(cert.table, m.fiber_genus);
    let global = m.global_word();
    if !check(cert, &global, &[], &table)? {
        return Err(ChartError::CertificateFails);
    }
    let mut b = Builder::new(cert.table, m.fiber_genus);
    b.factors(&m.factors);
    b.run(&cert.steps)?;
    debug_assert!(b.boundary.is_empty());
    let mut chart = b.chart;
    assert!(
        chart.pairing.iter().all(|&p| p != UNPAIRED),
        "closed replay leaves no open darts"
    );
    chart.base_region = (chart.darts() > 0).then_some(0);
    Ok(chart)
}

/// A disk whose boundary, read clockwise, is the result of applying `steps` to the factor word.
pub fn patch_from_steps(
    table: TableKind,
    genus: Genus,
    factors: &[Factor],
    steps: &[Step],
) -> Result<DiskPatch, ChartError> {
    let mut b = Builder::new(table, genus);
    b.factors(factors);
    b.run(steps)?;
    let mut ports = Vec::with_capacity(b.boundary.len());
    for &p in &b.boundary {
        match b.far[p] {
            Far::Dart(d) => ports.push(d),
            Far::Port(_) => {
                return Err(ChartError::Patch(
                    "an arc runs from boundary to boundary".into(),
                ))
            }
        }
    }
    // clockwise boundary, listed counterclockwise from its first port
    if ports.len() > 1 {
        ports[1..].reverse();
    }
    let c = b.chart;
    Ok(DiskPatch {
        pairing: c
            .pairing
            .iter()
            .map(|&p| (p != UNPAIRED).then_some(p))
            .collect(),
        labels: c.labels,
        outgoing: c.outgoing,
        vertices: c.vertices,
        hoops: c.hoops,
        ports,
    })
}

fn delete(id: RelatorId) -> Derivation {
    let mut d = Derivation::new(TableKind::CHat, Genus::new(2).expect("valid genus"));
    d.steps.push(Step::RelatorDelete {
        pos: 0,
        conjugator: Vec::new(),
        relator: id,
        inverse: false,
    });
    d
}

fn with_genus(mut d: Derivation, g: Genus) -> Derivation {
    d.genus = g;
    d
}

/// One white `r3` vertex joined to `4(2g+1)` positive type I fibers.
pub fn r3_chart(g: Genus) -> Chart {
    from_hurwitz(
        &involution_power(g, 2),
        &with_genus(delete(RelatorId::R3), g),
    )
    .expect("I^2 is filled by r3")
}

/// The chart of the reference system used for stabilization; it is [`r3_chart`].
pub fn gamma0_chart(g: Genus) -> Chart {
    r3_chart(g)
}

/// One white `r4` vertex joined to `2(g+1)(2g+1)` positive type I fibers.
pub fn r4_chart(g: Genus) -> Chart {
    let m = Example::ChainOdd.build(g).expect("defined for every genus");
    from_hurwitz(&m, &with_genus(delete(RelatorId::R4), g)).expect("the odd chain is filled by r4")
}

fn free_chart(g: Genus, factors: Vec<Factor>) -> Result<Chart, ChartError> {
    let m = MonodromyData::over_sphere(g, factors);
    let mut cert = Derivation::new(TableKind::CHat, g);
    cert.steps = reduction_steps(&m.global_word());
    from_hurwitz(&m, &cert)
}

/// A free edge labeled `i` between a positive and a negative type I fiber.
pub fn l0_chart(g: Genus, i: usize) -> Result<Chart, ChartError> {
    g.check_word(&[i as i32])?;
    free_chart(
        g,
        vec![
            Factor::plain(Core::twist(i)),
            Factor::plain(Core::Twist {
                index: i,
                sign: Sign::Minus,
            }),
        ],
    )
}

/// A positive type II_h fiber whose edges end at negative type I fibers.
pub fn lh_chart(g: Genus, h: usize) -> Result<Chart, ChartError> {
    if h == 0 || h > g.max_chain() {
        return Err(crate::LefschetzError::ChainOutOfRange {
            h,
            max: g.max_chain(),
        }
        .into());
    }
    let core = Core::chain(h);
    let mut factors = vec![Factor::plain(core)];
    factors.extend(word::inverse(&core.word()).iter().map(|&l| {
        Factor::plain(Core::Twist {
            index: l.unsigned_abs() as usize,
            sign: Sign::Minus,
        })
    }));
    free_chart(g, factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::{counts, degree_sum_check, fiber_loop, intersection_word, validate_chart};
    use crate::hurwitz::fiber_counts;

    fn g(n: usize) -> Genus {
        Genus::new(n).unwrap()
    }

    #[test]
    fn r4_chart_counts() {
        for n in 2..=4 {
            let c = r4_chart(g(n));
            assert!(validate_chart(&c).unwrap().valid);
            let k = counts(&c).unwrap();
            assert_eq!((k.m4, k.m3, k.w), (1, 0, 1));
            assert_eq!(k.n0() as usize, 2 * (n + 1) * (2 * n + 1));
            assert!(degree_sum_check(&c));
            assert_eq!(c.vertices.len(), 1 + 2 * (n + 1) * (2 * n + 1));
        }
    }

    #[test]
    fn gamma0_chart_counts() {
        let c = gamma0_chart(g(3));
        let k = counts(&c).unwrap();
        assert_eq!(
            (k.m3, k.m4, k.w, k.n0_plus.iter().sum::<usize>()),
            (1, 0, 0, 28)
        );
        assert!(degree_sum_check(&c));
    }

    #[test]
    fn free_charts() {
        let c = l0_chart(g(2), 4).unwrap();
        assert_eq!(c.vertices.len(), 2);
        assert!(validate_chart(&c).unwrap().valid);
        let loop0 = fiber_loop(&c, 0).unwrap();
        assert_eq!(intersection_word(&c, &loop0).unwrap(), vec![4]);
        for h in 1..=2 {
            let c = lh_chart(g(4), h).unwrap();
            let k = counts(&c).unwrap();
            assert_eq!(k.chains[h - 1].plus, 1);
            assert_eq!(k.n0_minus.iter().sum::<usize>(), 4 * h * (2 * h + 1));
            assert!(degree_sum_check(&c));
        }
        assert!(lh_chart(g(3), 2).is_err());
    }

    #[test]
    fn conjugators_and_insertions_embed() {
        let genus = g(2);
        let m = MonodromyData::over_sphere(
            genus,
            vec![
                Factor::conjugated(vec![2, 3], Core::twist(1)),
                Factor::conjugated(
                    vec![2, 3],
                    Core::Twist {
                        index: 1,
                        sign: Sign::Minus,
                    },
                ),
            ],
        );
        let mut cert = Derivation::new(TableKind::CHat, genus);
        cert.steps.push(Step::RelatorInsert {
            pos: 3,
            conjugator: vec![1],
            relator: RelatorId::R4,
            inverse: false,
        });
        cert.steps.push(Step::RelatorDelete {
            pos: 3,
            conjugator: vec![1],
            relator: RelatorId::R4,
            inverse: false,
        });
        cert.steps.extend(reduction_steps(&m.global_word()));
        let c = from_hurwitz(&m, &cert).unwrap();
        let k = counts(&c).unwrap();
        assert_eq!((k.m4, k.w), (0, 0));
        assert_eq!((k.n0_plus[0], k.n0_minus[0]), (1, 1));
        assert!(degree_sum_check(&c));
    }

    #[test]
    fn black_counts_follow_the_system() {
        let m = involution_power(g(2), 2);
        let c = r3_chart(g(2));
        let k = counts(&c).unwrap();
        let f = fiber_counts(&m);
        assert_eq!(k.n0_plus.iter().sum::<usize>(), f.n0_plus);
    }

    #[test]
    fn empty_system_gives_empty_chart() {
        let m = MonodromyData::over_sphere(g(2), vec![]);
        let c = from_hurwitz(&m, &Derivation::new(TableKind::CHat, g(2))).unwrap();
        assert_eq!(c, Chart::empty(TableKind::CHat, g(2), 0));
    }

    #[test]
    fn failing_certificate() {
        let m = involution_power(g(2), 2);
        let cert = Derivation::new(TableKind::CHat, g(2));
        assert!(matches!(
            from_hurwitz(&m, &cert),
            Err(ChartError::CertificateFails)
        ));
    }
}
