//! Hurwitz systems over a closed oriented base and their invariants.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use sphere_braid::{word, DiracClass};

use crate::alphabet::{palindrome, Genus};
use crate::error::LefschetzError;
use crate::mcg::{dirac_class_of, IotaClass};
use crate::relators::chain_word;
use crate::symplectic::symplectic_rep;

/// `+1` or `-1`, serialized as an integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "i32", into = "i32")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn is_plus(self) -> bool {
        self == Self::Plus
    }
}

impl TryFrom<i32> for Sign {
    type Error = LefschetzError;

    fn try_from(v: i32) -> Result<Self, Self::Error> {
        match v {
            1 => Ok(Self::Plus),
            -1 => Ok(Self::Minus),
            other => Err(LefschetzError::BadSign(other)),
        }
    }
}

impl From<Sign> for i32 {
    fn from(s: Sign) -> i32 {
        if s.is_plus() {
            1
        } else {
            -1
        }
    }
}

/// The standard twist a factor is conjugate to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Core {
    /// `ζ_i^{±1}`: a type I fiber.
    Twist { index: usize, sign: Sign },
    /// `(ζ_1 ... ζ_{2h})^{±(4h+2)}`: a type II_h fiber.
    Chain { h: usize, sign: Sign },
}

impl Core {
    pub fn twist(index: usize) -> Self {
        Self::Twist {
            index,
            sign: Sign::Plus,
        }
    }

    pub fn chain(h: usize) -> Self {
        Self::Chain {
            h,
            sign: Sign::Plus,
        }
    }

    pub fn word(&self) -> Vec<i32> {
        match *self {
            Self::Twist { index, sign } => vec![i32::from(sign) * index as i32],
            Self::Chain { h, sign } => {
                let w = chain_word(h);
                if sign.is_plus() {
                    w
                } else {
                    word::inverse(&w)
                }
            }
        }
    }

    pub fn sign(&self) -> Sign {
        match *self {
            Self::Twist { sign, .. } | Self::Chain { sign, .. } => sign,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub conjugator: Vec<i32>,
    pub core: Core,
}

impl Factor {
    pub fn plain(core: Core) -> Self {
        Self {
            conjugator: Vec::new(),
            core,
        }
    }

    pub fn conjugated(conjugator: Vec<i32>, core: Core) -> Self {
        Self { conjugator, core }
    }

    /// `conjugator core conjugator^-1`.
    pub fn word(&self) -> Vec<i32> {
        word::conjugate(&self.conjugator, &self.core.word())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonodromyData {
    pub fiber_genus: Genus,
    pub base_genus: usize,
    pub handle_words: Vec<Vec<i32>>,
    pub factors: Vec<Factor>,
}

impl MonodromyData {
    pub fn over_sphere(g: Genus, factors: Vec<Factor>) -> Self {
        Self {
            fiber_genus: g,
            base_genus: 0,
            handle_words: Vec::new(),
            factors,
        }
    }

    /// Index and chain bounds, and the number of handle words.
    pub fn check_structure(&self) -> Result<(), LefschetzError> {
        let g = self.fiber_genus;
        let expected = 2 * self.base_genus;
        if self.handle_words.len() != expected {
            return Err(LefschetzError::HandleCount {
                base_genus: self.base_genus,
                expected,
                got: self.handle_words.len(),
            });
        }
        for w in &self.handle_words {
            g.check_word(w)?;
        }
        for f in &self.factors {
            g.check_word(&f.conjugator)?;
            match f.core {
                Core::Twist { index, .. } => {
                    if index == 0 || index > g.generators() {
                        return Err(LefschetzError::LetterOutOfRange {
                            letter: index as i32,
                            generators: g.generators(),
                        });
                    }
                }
                Core::Chain { h, .. } => {
                    if h == 0 || h > g.max_chain() {
                        return Err(LefschetzError::ChainOutOfRange {
                            h,
                            max: g.max_chain(),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The global relation `prod [a_i, b_i] * prod (conj core conj^-1)`.
    pub fn global_word(&self) -> Vec<i32> {
        let mut w = Vec::new();
        for pair in self.handle_words.chunks(2) {
            w.extend(word::commutator(&pair[0], &pair[1]));
        }
        for f in &self.factors {
            w.extend(f.word());
        }
        w
    }

    /// Product of the factor words only.
    fn factor_product(&self) -> Vec<i32> {
        word::reduce(
            &self
                .factors
                .iter()
                .flat_map(Factor::word)
                .collect::<Vec<_>>(),
        )
    }
}

/// Outcome of checking the global relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Validity {
    Valid,
    /// The global relation is already nontrivial on the marked sphere.
    NontrivialOnSphere,
    /// The global relation equals the hyperelliptic involution.
    EqualsIota,
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Valid => "valid",
            Self::NontrivialOnSphere => {
                "global relation is nontrivial in the spherical mapping class group"
            }
            Self::EqualsIota => "global relation equals the hyperelliptic involution",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub validity: Validity,
    /// Dirac class of the lifted global relation (meaningful unless nontrivial on the sphere).
    pub lift: DiracClass,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.validity == Validity::Valid
    }
}

pub fn validate(m: &MonodromyData) -> Result<ValidationReport, LefschetzError> {
    m.check_structure()?;
    let g = m.fiber_genus;
    let w = word::reduce(&m.global_word());
    let lift = dirac_class_of(&w, g);
    let class = if lift == DiracClass::NotInKernel {
        IotaClass::NotInKernel
    } else if symplectic_rep(&w, g).is_identity() {
        IotaClass::One
    } else {
        IotaClass::Iota
    };
    let validity = match class {
        IotaClass::One => Validity::Valid,
        IotaClass::Iota => Validity::EqualsIota,
        IotaClass::NotInKernel => Validity::NontrivialOnSphere,
    };
    Ok(ValidationReport { validity, lift })
}

fn require_valid(m: &MonodromyData) -> Result<ValidationReport, LefschetzError> {
    let report = validate(m)?;
    if report.is_valid() {
        Ok(report)
    } else {
        Err(LefschetzError::InvalidSystem(report.validity.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainCount {
    pub h: usize,
    pub plus: usize,
    pub minus: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FiberCounts {
    pub n0_plus: usize,
    pub n0_minus: usize,
    /// One entry per `h = 1..=floor(g/2)`.
    pub chains: Vec<ChainCount>,
}

impl FiberCounts {
    pub fn total(&self) -> usize {
        self.n0_plus + self.n0_minus + self.chains.iter().map(|c| c.plus + c.minus).sum::<usize>()
    }
}

pub fn fiber_counts(m: &MonodromyData) -> FiberCounts {
    let mut counts = FiberCounts {
        n0_plus: 0,
        n0_minus: 0,
        chains: (1..=m.fiber_genus.max_chain())
            .map(|h| ChainCount {
                h,
                plus: 0,
                minus: 0,
            })
            .collect(),
    };
    for f in &m.factors {
        match f.core {
            Core::Twist { sign, .. } => {
                if sign.is_plus() {
                    counts.n0_plus += 1;
                } else {
                    counts.n0_minus += 1;
                }
            }
            Core::Chain { h, sign } => {
                let c = &mut counts.chains[h - 1];
                if sign.is_plus() {
                    c.plus += 1;
                } else {
                    c.minus += 1;
                }
            }
        }
    }
    counts
}

pub fn euler_characteristic(m: &MonodromyData) -> i64 {
    let g = m.fiber_genus.get() as i64;
    let k = m.base_genus as i64;
    (2 - 2 * g) * (2 - 2 * k) + fiber_counts(m).total() as i64
}

/// Endo's localization of the signature on singular fibers.
pub fn signature_from_counts(g: Genus, counts: &FiberCounts) -> Result<i64, LefschetzError> {
    let gi = g.get() as i64;
    let denom = 2 * gi + 1;
    let type_one = counts.n0_plus as i64 - counts.n0_minus as i64;
    let mut sigma = Ratio::new(-(gi + 1) * type_one, denom);
    for c in &counts.chains {
        let h = c.h as i64;
        let local = Ratio::new(4 * h * (gi - h), denom) - 1;
        sigma += local * (c.plus as i64 - c.minus as i64);
    }
    if sigma.is_integer() {
        Ok(sigma.to_integer())
    } else {
        Err(LefschetzError::NonIntegralSignature(sigma))
    }
}

pub fn signature(m: &MonodromyData) -> Result<i64, LefschetzError> {
    signature_from_counts(m.fiber_genus, &fiber_counts(m))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WValue {
    pub value: u8,
    /// True iff the fiber genus is odd, where `w` is an isomorphism invariant.
    pub invariant_for_this_genus: bool,
}

pub fn w_invariant(m: &MonodromyData) -> Result<WValue, LefschetzError> {
    let report = require_valid(m)?;
    Ok(w_from_lift(m.fiber_genus, report.lift))
}

fn w_from_lift(g: Genus, lift: DiracClass) -> WValue {
    WValue {
        value: u8::from(lift == DiracClass::Dirac),
        invariant_for_this_genus: g.is_odd(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantReport {
    pub fiber_genus: Genus,
    pub base_genus: usize,
    pub n0_plus: usize,
    pub n0_minus: usize,
    pub chains: Vec<ChainCount>,
    pub n: usize,
    pub chi: i64,
    pub sigma: i64,
    pub w: WValue,
}

pub fn invariants(m: &MonodromyData) -> Result<InvariantReport, LefschetzError> {
    let report = require_valid(m)?;
    let counts = fiber_counts(m);
    Ok(InvariantReport {
        fiber_genus: m.fiber_genus,
        base_genus: m.base_genus,
        n0_plus: counts.n0_plus,
        n0_minus: counts.n0_minus,
        n: counts.total(),
        chi: euler_characteristic(m),
        sigma: signature_from_counts(m.fiber_genus, &counts)?,
        w: w_from_lift(m.fiber_genus, report.lift),
        chains: counts.chains,
    })
}

/// Which way the first factor of the addressed pair moves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `(α, β) -> (β, β^-1 α β)`.
    Right,
    /// `(α, β) -> (α β α^-1, α)`.
    Left,
}

/// Hurwitz move on the factors at `index` and `index + 1` (0-based).
pub fn elementary_transformation(
    m: &MonodromyData,
    index: usize,
    direction: Direction,
) -> Result<MonodromyData, LefschetzError> {
    let len = m.factors.len();
    if index + 1 >= len {
        return Err(LefschetzError::FactorIndex { index, len });
    }
    let (a, b) = (&m.factors[index], &m.factors[index + 1]);
    let (first, second) = match direction {
        Direction::Right => {
            let mut conj = word::inverse(&b.word());
            conj.extend(&a.conjugator);
            (b.clone(), Factor::conjugated(word::reduce(&conj), a.core))
        }
        Direction::Left => {
            let mut conj = a.word();
            conj.extend(&b.conjugator);
            (Factor::conjugated(word::reduce(&conj), b.core), a.clone())
        }
    };
    let mut out = m.clone();
    out.factors[index] = first;
    out.factors[index + 1] = second;
    Ok(out)
}

/// Conjugates every factor and handle word by `u`.
pub fn simultaneous_conjugate(
    m: &MonodromyData,
    u: &[i32],
) -> Result<MonodromyData, LefschetzError> {
    m.fiber_genus.check_word(u)?;
    let mut out = m.clone();
    for f in &mut out.factors {
        let mut conj = u.to_vec();
        conj.extend(&f.conjugator);
        f.conjugator = word::reduce(&conj);
    }
    for w in &mut out.handle_words {
        *w = word::reduce(&word::conjugate(u, w));
    }
    Ok(out)
}

/// Fiber sum along `twist`: the factors of `m1`, then those of `m2` conjugated by `twist`.
///
/// The handle words of `m2` are conjugated by `twist` and by the factor
/// product of `m1`, so that the global relation of the sum is literally the
/// product of the two global relations.
pub fn fiber_sum(
    m1: &MonodromyData,
    m2: &MonodromyData,
    twist: &[i32],
) -> Result<MonodromyData, LefschetzError> {
    if m1.fiber_genus != m2.fiber_genus {
        return Err(LefschetzError::GenusMismatch(
            m1.fiber_genus.get(),
            m2.fiber_genus.get(),
        ));
    }
    let moved = simultaneous_conjugate(m2, twist)?;
    let shift = m1.factor_product();
    let mut out = m1.clone();
    out.base_genus += m2.base_genus;
    out.handle_words.extend(
        moved
            .handle_words
            .iter()
            .map(|w| word::reduce(&word::conjugate(&shift, w))),
    );
    out.factors.extend(moved.factors);
    Ok(out)
}

/// `I^k`: the factors `ζ_1, ..., ζ_{2g+1}, ζ_{2g+1}, ..., ζ_1` repeated `k` times.
pub fn involution_power(g: Genus, k: usize) -> MonodromyData {
    let block = palindrome(g.generators());
    let one: Vec<Factor> = block
        .iter()
        .map(|&i| Factor::plain(Core::twist(i as usize)))
        .collect();
    let factors = one.iter().cycle().take(k * one.len()).cloned().collect();
    MonodromyData::over_sphere(g, factors)
}

/// The reference system `I^2` used for stabilization.
pub fn gamma0(g: Genus) -> MonodromyData {
    involution_power(g, 2)
}

pub fn stabilize(m: &MonodromyData, times: usize) -> Result<MonodromyData, LefschetzError> {
    let base = gamma0(m.fiber_genus);
    let mut out = m.clone();
    for _ in 0..times {
        out = fiber_sum(&out, &base, &[])?;
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StableDecision {
    pub stably_isomorphic: bool,
    pub differences: Vec<String>,
    pub reports: [InvariantReport; 2],
}

impl fmt::Display for StableDecision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.stably_isomorphic {
            write!(f, "stably isomorphic")
        } else {
            write!(f, "not stably isomorphic: {}", self.differences.join("; "))
        }
    }
}

pub fn stably_isomorphic(
    m1: &MonodromyData,
    m2: &MonodromyData,
) -> Result<StableDecision, LefschetzError> {
    if m1.fiber_genus != m2.fiber_genus {
        return Err(LefschetzError::GenusMismatch(
            m1.fiber_genus.get(),
            m2.fiber_genus.get(),
        ));
    }
    if m1.base_genus != m2.base_genus {
        return Err(LefschetzError::BaseMismatch(m1.base_genus, m2.base_genus));
    }
    let a = invariants(m1)?;
    let b = invariants(m2)?;
    let mut differences = Vec::new();
    let mut compare = |name: &str, x: usize, y: usize| {
        if x != y {
            differences.push(format!("{name} differs ({x} vs {y})"));
        }
    };
    compare("n0+", a.n0_plus, b.n0_plus);
    compare("n0-", a.n0_minus, b.n0_minus);
    for (ca, cb) in a.chains.iter().zip(&b.chains) {
        compare(&format!("n{}+", ca.h), ca.plus, cb.plus);
        compare(&format!("n{}-", ca.h), ca.minus, cb.minus);
    }
    if m1.fiber_genus.is_odd() {
        compare("w", a.w.value.into(), b.w.value.into());
    }
    Ok(StableDecision {
        stably_isomorphic: differences.is_empty(),
        differences,
        reports: [a, b],
    })
}
