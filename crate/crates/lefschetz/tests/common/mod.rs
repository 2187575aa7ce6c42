#![allow(dead_code)]

use lefschetz::chart::{channel_changes, conjugacy_sites, pair_deaths, Chart, ChartMove};
use lefschetz::corpus::Example;
use lefschetz::hurwitz::{
    elementary_transformation, simultaneous_conjugate, Direction, MonodromyData,
};
use lefschetz::relators::RelatorId;
use lefschetz::Genus;
use rand::Rng;

pub fn genus(n: usize) -> Genus {
    Genus::new(n).unwrap()
}

/// Every fixed example at genus 2 and 3, plus a few powers of `I`.
pub fn small_corpus() -> Vec<(String, MonodromyData)> {
    let mut out = Vec::new();
    for n in [2, 3] {
        let g = genus(n);
        let mut names: Vec<Example> = Example::FIXED
            .into_iter()
            .filter(|e| e.supports(g))
            .collect();
        names.extend([Example::Involution(2), Example::Involution(4)]);
        for e in names {
            out.push((format!("{e}@{n}"), e.build(g).unwrap()));
        }
    }
    out
}

pub fn random_word(rng: &mut impl Rng, g: Genus, max_len: usize) -> Vec<i32> {
    let n = g.generators() as i32;
    let len = rng.gen_range(0..=max_len);
    (0..len)
        .map(|_| rng.gen_range(1..=n) * if rng.gen_bool(0.5) { 1 } else { -1 })
        .collect()
}

/// One slide in either direction or a short simultaneous conjugation.
pub fn random_hurwitz_move(rng: &mut impl Rng, m: &MonodromyData) -> MonodromyData {
    if rng.gen_bool(0.8) && m.factors.len() > 1 {
        let at = rng.gen_range(0..m.factors.len() - 1);
        let dir = if rng.gen_bool(0.5) {
            Direction::Left
        } else {
            Direction::Right
        };
        elementary_transformation(m, at, dir).unwrap()
    } else {
        let u = random_word(rng, m.fiber_genus, 3);
        simultaneous_conjugate(m, &u).unwrap()
    }
}

/// A random admissible move: channel change, hoop or pair birth and death, or conjugacy.
pub fn random_chart_move(rng: &mut impl Rng, c: &Chart) -> ChartMove {
    loop {
        match rng.gen_range(0..6) {
            0 => {
                let sites = channel_changes(c).unwrap();
                if !sites.is_empty() {
                    let (first, second) = sites[rng.gen_range(0..sites.len())];
                    return ChartMove::ChannelChange { first, second };
                }
            }
            1 => {
                let label = rng.gen_range(1..=c.fiber_genus.generators());
                return ChartMove::HoopBirth {
                    label,
                    counterclockwise: rng.gen_bool(0.5),
                };
            }
            2 if !c.hoops.is_empty() => {
                return ChartMove::HoopDeath {
                    hoop: rng.gen_range(0..c.hoops.len()),
                }
            }
            3 => {
                let n = c.fiber_genus.generators();
                let relator = match rng.gen_range(0..4) {
                    0 => RelatorId::R2 {
                        i: rng.gen_range(1..n),
                    },
                    1 => RelatorId::R1 { i: 1, j: 3 },
                    2 => RelatorId::R3,
                    _ => RelatorId::R5,
                };
                return ChartMove::PairBirth {
                    relator,
                    inverse: rng.gen_bool(0.5),
                };
            }
            4 => {
                let pairs = pair_deaths(c);
                if !pairs.is_empty() {
                    let (first, second) = pairs[rng.gen_range(0..pairs.len())];
                    return ChartMove::PairDeath { first, second };
                }
            }
            5 => {
                let sites = conjugacy_sites(c).unwrap();
                if !sites.is_empty() {
                    return ChartMove::Conjugacy {
                        dart: sites[rng.gen_range(0..sites.len())],
                    };
                }
            }
            _ => {}
        }
    }
}
