//! Parameter-level arithmetic for strongly regular and amply regular graphs:
//! SRG completion, eigenvalue integrality, the F(s, r) family, the local
//! quotient recursion and its inverse, the quadratic in `c`, and the scan
//! over `(k, λ, μ)` that follows quotient towers down to an F(s, r) root.
//!
//! Everything here is exact. Nothing in this module decides whether a graph
//! exists; a surviving tower is only parameter-feasible.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::AmplyRegularParams;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize, Deserialize)]
pub enum FeasibilityError {
    #[error("invalid parameters: {0}")]
    Invalid(String),
    #[error("{divisor} does not divide {numerator} (remainder {remainder})")]
    NotDivisible {
        numerator: u128,
        divisor: u128,
        remainder: u128,
    },
    #[error("F({s},{r}) is empty: s + 1 > r")]
    TooFewCliques { s: u64, r: u64 },
    #[error("descent needs mu >= 2, got {0}")]
    MuTooSmall(u64),
    #[error("arithmetic overflow")]
    Overflow,
}

/// `(k, λ, μ)` of an amply regular graph whose vertex count is not needed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HostParams {
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl From<AmplyRegularParams> for HostParams {
    fn from(p: AmplyRegularParams) -> Self {
        HostParams {
            k: p.k,
            lambda: p.lambda,
            mu: p.mu,
        }
    }
}

impl fmt::Display for HostParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.k, self.lambda, self.mu)
    }
}

/// `(v, k, λ, μ)` with `v = 1 + k + k(k-λ-1)/μ` exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SrgParams {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub mu: u64,
}

impl SrgParams {
    pub fn new(v: u64, k: u64, lambda: u64, mu: u64) -> Result<SrgParams, FeasibilityError> {
        let p = srg_complete(k, lambda, mu)?;
        if p.v != v {
            return Err(FeasibilityError::Invalid(format!(
                "v = {v} but 1 + k + k(k-λ-1)/μ = {}",
                p.v
            )));
        }
        Ok(p)
    }

    pub fn host(&self) -> HostParams {
        HostParams {
            k: self.k,
            lambda: self.lambda,
            mu: self.mu,
        }
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Completes `(k, λ, μ)` to SRG parameters.
pub fn srg_complete(k: u64, lambda: u64, mu: u64) -> Result<SrgParams, FeasibilityError> {
    if k == 0 || mu == 0 || lambda >= k || mu > k {
        return Err(FeasibilityError::Invalid(format!(
            "need k >= 1, 1 <= mu <= k, lambda <= k-1; got ({k},{lambda},{mu})"
        )));
    }
    let numerator = k as u128 * (k - lambda - 1) as u128;
    let divisor = mu as u128;
    let remainder = numerator % divisor;
    if remainder != 0 {
        return Err(FeasibilityError::NotDivisible {
            numerator,
            divisor,
            remainder,
        });
    }
    let v = 1 + k as u128 + numerator / divisor;
    Ok(SrgParams {
        v: u64::try_from(v).map_err(|_| FeasibilityError::Overflow)?,
        k,
        lambda,
        mu,
    })
}

/// Eigenvalues other than `k` are the roots of `x² + (μ-λ)x + (μ-k) = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueCheck {
    /// `(μ-λ)² + 4(k-μ)`.
    #[serde(with = "crate::rational::bigint_serde")]
    pub discriminant: BigInt,
    /// `[r, s]` with `r > s`, when the discriminant is a perfect square.
    pub roots: Option<[Rational; 2]>,
    /// Multiplicities of `[r, s]`.
    pub multiplicities: [Rational; 2],
    pub integral: bool,
    /// Equal multiplicities: `(v-1)(μ-λ) = 2k`.
    pub conference: bool,
    pub feasible: bool,
}

pub fn eigenvalue_feasible(p: &SrgParams) -> EigenvalueCheck {
    let (v, k, l, m) = (
        BigInt::from(p.v),
        BigInt::from(p.k),
        BigInt::from(p.lambda),
        BigInt::from(p.mu),
    );
    let diff = &m - &l;
    let discriminant = &diff * &diff + 4 * (&k - &m);
    let conference = (&v - 1) * &diff == 2 * &k;
    let half = |x: BigInt| Rational::new(x, 2);
    match exact_sqrt(&discriminant) {
        Some(root) => {
            let r = half(-&diff + &root);
            let s = half(-&diff - &root);
            // f - g = -(2k + (v-1)(λ-μ)) / sqrt(disc)
            let num: BigInt = (&v - 1) * &diff - 2 * &k;
            let skew = Rational::new(num, root);
            let total = Rational::integer(&v - 1);
            let f = Rational((&total.0 + &skew.0) / BigInt::from(2));
            let g = Rational((&total.0 - &skew.0) / BigInt::from(2));
            let integral = r.is_integer()
                && s.is_integer()
                && f.is_integer()
                && g.is_integer()
                && !f.is_negative()
                && !g.is_negative();
            EigenvalueCheck {
                discriminant,
                roots: Some([r, s]),
                multiplicities: [f, g],
                integral,
                conference,
                feasible: integral,
            }
        }
        None => EigenvalueCheck {
            discriminant,
            roots: None,
            multiplicities: [half(&v - 1), half(&v - 1)],
            integral: false,
            conference,
            feasible: conference,
        },
    }
}

fn exact_sqrt(x: &BigInt) -> Option<BigInt> {
    if x.is_negative() {
        return None;
    }
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

/// A member of F(s, r): local graphs are `r` disjoint `s`-cliques.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FsrParams {
    pub s: u64,
    pub r: u64,
}

impl FsrParams {
    pub fn v(&self) -> u64 {
        1 + self.r * self.s + self.s * self.s * self.r * (self.r - 1)
    }

    pub fn k(&self) -> u64 {
        self.r * self.s
    }

    pub fn lambda(&self) -> u64 {
        self.s - 1
    }

    pub fn mu(&self) -> u64 {
        1
    }

    pub fn srg(&self) -> SrgParams {
        SrgParams {
            v: self.v(),
            k: self.k(),
            lambda: self.lambda(),
            mu: 1,
        }
    }

    /// λ = 0 and μ = 1.
    pub fn is_moore(&self) -> bool {
        self.s == 1
    }
}

impl fmt::Display for FsrParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F({},{})", self.s, self.r)
    }
}

/// F(s, r) parameters, rejected when `s + 1 > r`.
pub fn fsr_params(s: u64, r: u64) -> Result<FsrParams, FeasibilityError> {
    if s == 0 || r == 0 {
        return Err(FeasibilityError::Invalid(format!("need s, r >= 1; got ({s},{r})")));
    }
    if s + 1 > r {
        return Err(FeasibilityError::TooFewCliques { s, r });
    }
    Ok(FsrParams { s, r })
}

/// Reads `(s, r)` off SRG parameters with μ = 1: `s = λ + 1`, `r = k / s`.
pub fn fsr_of(p: &SrgParams) -> Option<(u64, u64)> {
    let s = p.lambda + 1;
    (p.mu == 1 && p.k.is_multiple_of(s)).then(|| (s, p.k / s))
}

/// One quotient step: the local graph is the α-clique extension of a graph
/// with parameters `params`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Descent {
    pub alpha: u64,
    pub params: SrgParams,
}

/// All α for which the local graph of an amply regular Terwilliger graph with
/// these parameters can be the α-clique extension of an SRG: `v̄ = k/α`,
/// `k̄ = (λ-α+1)/α`, `μ̄ = (μ-1)/α`, with `λ̄` solved from the SRG identity
/// and `α <= λ̄ + 1`.
pub fn descend_to_quotient(host: HostParams) -> Result<Vec<Descent>, FeasibilityError> {
    let HostParams { k, lambda, mu } = host;
    if mu < 2 {
        return Err(FeasibilityError::MuTooSmall(mu));
    }
    let mut out = Vec::new();
    for alpha in 1..=lambda + 1 {
        if (mu - 1) % alpha != 0 || k % alpha != 0 || (lambda + 1 - alpha) % alpha != 0 {
            continue;
        }
        let vbar = k / alpha;
        let kbar = (lambda + 1 - alpha) / alpha;
        let mubar = (mu - 1) / alpha;
        if kbar == 0 || vbar < kbar + 1 {
            continue;
        }
        // k̄(k̄ - λ̄ - 1) = μ̄(v̄ - 1 - k̄)
        let rhs = mubar as u128 * (vbar - 1 - kbar) as u128;
        if !rhs.is_multiple_of(kbar as u128) {
            continue;
        }
        let t = rhs / kbar as u128;
        if t > (kbar - 1) as u128 {
            continue;
        }
        let lambar = kbar - 1 - t as u64;
        let Ok(params) = SrgParams::new(vbar, kbar, lambar, mubar) else {
            continue;
        };
        if alpha <= lambar + 1 {
            out.push(Descent { alpha, params });
        }
    }
    Ok(out)
}

/// Inverse of one descent step: `k = α v̄`, `λ = α k̄ + α - 1`, `μ = α μ̄ + 1`.
pub fn compose_from_quotient(alpha: u64, p: &SrgParams) -> Result<HostParams, FeasibilityError> {
    if alpha == 0 {
        return Err(FeasibilityError::Invalid("alpha must be positive".into()));
    }
    if p.mu == 0 || p.lambda >= p.k.max(1) {
        return Err(FeasibilityError::Invalid(format!("not SRG parameters: {p}")));
    }
    let numerator = p.k as u128 * (p.k - p.lambda - 1) as u128;
    let divisor = p.mu as u128;
    let remainder = numerator % divisor;
    if remainder != 0 {
        return Err(FeasibilityError::NotDivisible {
            numerator,
            divisor,
            remainder,
        });
    }
    let to_u64 = |x: u128| u64::try_from(x).map_err(|_| FeasibilityError::Overflow);
    let a = alpha as u128;
    Ok(HostParams {
        k: to_u64(a * (1 + p.k as u128 + numerator / divisor))?,
        lambda: to_u64(a * p.k as u128 + a - 1)?,
        mu: to_u64(a * p.mu as u128 + 1)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "roots", rename_all = "snake_case")]
pub enum QuadraticRoots {
    NoRealRoot,
    NoIntegralRoot,
    /// Integer roots `>= 2`, ascending.
    Integral(Vec<u64>),
}

/// The inequality `((μ̄/2) - (k̄+1))² >= 2 k̄ (k̄ - λ̄ - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscriminantBound {
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadraticCheck {
    /// `(μ̄ + 2(k̄+1))² - 8 v̄ μ̄`.
    #[serde(with = "crate::rational::bigint_serde")]
    pub discriminant: BigInt,
    pub roots: QuadraticRoots,
    pub discriminant_bound: DiscriminantBound,
}

impl QuadraticCheck {
    pub fn integral_roots(&self) -> &[u64] {
        match &self.roots {
            QuadraticRoots::Integral(r) => r,
            _ => &[],
        }
    }
}

/// Roots of `c² μ̄ - c(μ̄ + 2(k̄+1)) + 2 v̄ = 0`, i.e. the coclique sizes at
/// which the μ-bound of the quotient is tight, plus the DiscriminantBound predicate.
pub fn c_from_quadratic(p: &SrgParams) -> QuadraticCheck {
    let (v, k, l, m) = (
        BigInt::from(p.v),
        BigInt::from(p.k),
        BigInt::from(p.lambda),
        BigInt::from(p.mu),
    );
    let b = &m + 2 * (&k + 1);
    let discriminant: BigInt = &b * &b - 8 * &v * &m;
    let roots = if discriminant.is_negative() {
        QuadraticRoots::NoRealRoot
    } else {
        match exact_sqrt(&discriminant) {
            None => QuadraticRoots::NoIntegralRoot,
            Some(sq) => {
                let den: BigInt = 2 * &m;
                let candidates: [BigInt; 2] = [&b - &sq, &b + &sq];
                let mut found: Vec<u64> = candidates
                    .into_iter()
                    .filter(|num| (num % &den).is_zero())
                    .filter_map(|num| u64::try_from(num / &den).ok())
                    .filter(|&c| c >= 2)
                    .collect();
                found.sort_unstable();
                found.dedup();
                if found.is_empty() {
                    QuadraticRoots::NoIntegralRoot
                } else {
                    QuadraticRoots::Integral(found)
                }
            }
        }
    };
    let half_mu_minus = Rational::new(m.clone() - 2 * (&k + 1), 2);
    let lhs = Rational(&half_mu_minus.0 * &half_mu_minus.0);
    let rhs = Rational::integer(2 * &k * (&k - &l - 1));
    let holds = lhs >= rhs;
    QuadraticCheck {
        discriminant,
        roots,
        discriminant_bound: DiscriminantBound { lhs, rhs, holds },
    }
}

/// `k < λ + μ + 2`.
pub fn degree_gap_check(p: &SrgParams) -> bool {
    p.k < p.lambda + p.mu + 2
}

/// Basic intersection-array feasibility, re-exported for parameter work.
pub use crate::array::ArrayFeasibility;

pub fn drg_array_feasible(a: &crate::array::IntersectionArray) -> ArrayFeasibility {
    a.feasibility()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Level {
    pub alpha: u64,
    pub params: SrgParams,
}

/// A chain of local quotients `(α_1, Σ_1), .., (α_h, Σ_h)` below a top
/// parameter set, ending in F(s_h, r_h).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tower {
    pub top: HostParams,
    pub levels: Vec<Level>,
    pub root: FsrParams,
    /// Integral roots of the quadratic at the first quotient.
    pub c_roots: Vec<u64>,
}

impl Tower {
    pub fn height(&self) -> usize {
        self.levels.len()
    }

    /// Each level composes back to the one above it and the root is the
    /// last level.
    pub fn is_consistent(&self) -> bool {
        let mut above = self.top;
        for level in &self.levels {
            match compose_from_quotient(level.alpha, &level.params) {
                Ok(h) if h == above => above = level.params.host(),
                _ => return false,
            }
        }
        self.levels.last().map(|l| l.params) == Some(self.root.srg())
    }
}

impl fmt::Display for Tower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.top)?;
        for l in &self.levels {
            write!(f, " -[α={}]-> {}", l.alpha, l.params)?;
        }
        write!(f, " = {}", self.root)
    }
}

/// Why a branch of the scan died.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RejectReason {
    /// `μ̄ < k̄` fails at an SRG level.
    MuNotBelowK,
    NoRealRoot {
        #[serde(with = "crate::rational::bigint_serde")]
        discriminant: BigInt,
        /// Always failing here; kept so the report shows both sides.
        bound: DiscriminantBound,
    },
    NoIntegralRoot {
        #[serde(with = "crate::rational::bigint_serde")]
        discriminant: BigInt,
    },
    DiscriminantBound { lhs: Rational, rhs: Rational },
    /// μ = 1 level whose parameters are not of the form F(s, r).
    NotFsr,
    TooFewCliques { s: u64, r: u64 },
    /// `rs < 2(s+1)` fails at a μ = 1 first quotient.
    FsrDegree { s: u64, r: u64 },
    /// No Moore graph has this degree (eigenvalue integrality).
    NoMooreGraph { r: u64 },
    /// `k̄ <= 2(λ̄+1)` fails at a first quotient with μ̄ > 1.
    QuotientDegree,
    DegreeGap,
    /// An SRG level with μ > 1 admits no further descent.
    NoDescent,
    /// Root with `s_h > 1`: `k_h - λ_h - μ_h = s_h(r_h - 1) > 1` propagates
    /// up to the first level and contradicts DegreeGap.
    Monotonicity { s: u64, r: u64 },
    /// A strongly regular level whose local graphs are Moore graphs of
    /// degree `r` would have diameter at least 3.
    LocallyMoore { r: u64, parent_eigen_feasible: bool },
}

impl RejectReason {
    pub fn label(&self) -> &'static str {
        match self {
            RejectReason::MuNotBelowK => "mu_not_below_k",
            RejectReason::NoRealRoot { .. } => "no_real_root",
            RejectReason::NoIntegralRoot { .. } => "no_integral_root",
            RejectReason::DiscriminantBound { .. } => "discriminant_bound",
            RejectReason::NotFsr => "not_fsr",
            RejectReason::TooFewCliques { .. } => "s_plus_1_gt_r",
            RejectReason::FsrDegree { .. } => "rs_ge_2s_plus_2",
            RejectReason::NoMooreGraph { .. } => "no_moore_graph",
            RejectReason::QuotientDegree => "quotient_degree",
            RejectReason::DegreeGap => "degree_gap",
            RejectReason::NoDescent => "no_descent",
            RejectReason::Monotonicity { .. } => "monotonicity",
            RejectReason::LocallyMoore { .. } => "locally_moore_diameter",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rejection {
    pub top: HostParams,
    pub chain: Vec<Level>,
    pub reason: RejectReason,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanOptions {
    /// Also require DiscriminantBound at every SRG level below the first quotient.
    pub strict_discriminant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub max_k: u64,
    pub options: ScanOptions,
    /// Candidates `(k, λ, μ)` examined.
    pub candidates: u64,
    /// Candidates with at least one descent.
    pub with_descent: u64,
    /// Parameter-feasible towers, sorted by top parameters then chain.
    pub towers: Vec<Tower>,
    pub rejections: Vec<Rejection>,
    /// Rejections that would have survived without the `μ̄ < k̄` condition.
    pub rejected_only_by_mu_below_k: Vec<Rejection>,
}

impl ScanReport {
    pub fn reason_counts(&self) -> BTreeMap<&'static str, usize> {
        let mut m = BTreeMap::new();
        for r in &self.rejections {
            *m.entry(r.reason.label()).or_insert(0) += 1;
        }
        m
    }

    pub fn rejections_of(&self, top: HostParams) -> impl Iterator<Item = &Rejection> {
        self.rejections.iter().filter(move |r| r.top == top)
    }
}

/// Scans every `(k, λ, μ)` with `k <= max_k`, `0 <= λ < k`, `2 <= μ <= k`
/// for towers of local quotients compatible with equality in the μ-bound.
pub fn tower_scan(max_k: u64, options: ScanOptions) -> ScanReport {
    let grid: Vec<HostParams> = (1..=max_k)
        .flat_map(|k| {
            (0..k).flat_map(move |lambda| (2..=k).map(move |mu| HostParams { k, lambda, mu }))
        })
        .collect();
    let results: Vec<(bool, Outcome)> = grid
        .par_iter()
        .map(|&top| {
            let descents = descend_to_quotient(top).expect("mu >= 2 on the grid");
            (!descents.is_empty(), scan_top(top, &descents, options))
        })
        .collect();

    let mut report = ScanReport {
        max_k,
        options,
        candidates: grid.len() as u64,
        with_descent: 0,
        towers: Vec::new(),
        rejections: Vec::new(),
        rejected_only_by_mu_below_k: Vec::new(),
    };
    for (had_descent, outcome) in results {
        report.with_descent += had_descent as u64;
        report.towers.extend(outcome.towers);
        report.rejections.extend(outcome.rejections);
        report
            .rejected_only_by_mu_below_k
            .extend(outcome.only_mu_below_k);
    }
    report.towers.sort_by(tower_order);
    report
}

fn tower_order(a: &Tower, b: &Tower) -> Ordering {
    (a.top, &a.levels).cmp(&(b.top, &b.levels))
}

#[derive(Default)]
struct Outcome {
    towers: Vec<Tower>,
    rejections: Vec<Rejection>,
    only_mu_below_k: Vec<Rejection>,
}

struct Walker {
    top: HostParams,
    options: ScanOptions,
    enforce_mu_below_k: bool,
    c_roots: Vec<u64>,
    towers: Vec<Tower>,
    rejections: Vec<Rejection>,
}

fn scan_top(top: HostParams, descents: &[Descent], options: ScanOptions) -> Outcome {
    let mut out = Outcome::default();
    for d in descents {
        let run = |enforce| {
            let mut w = Walker {
                top,
                options,
                enforce_mu_below_k: enforce,
                c_roots: Vec::new(),
                towers: Vec::new(),
                rejections: Vec::new(),
            };
            w.first_quotient(Level {
                alpha: d.alpha,
                params: d.params,
            });
            w
        };
        let strict = run(true);
        if strict
            .rejections
            .iter()
            .any(|r| r.reason == RejectReason::MuNotBelowK)
        {
            let relaxed = run(false);
            if !relaxed.towers.is_empty() {
                out.only_mu_below_k.extend(
                    strict
                        .rejections
                        .iter()
                        .filter(|r| r.reason == RejectReason::MuNotBelowK)
                        .cloned(),
                );
            }
        }
        out.towers.extend(strict.towers);
        out.rejections.extend(strict.rejections);
    }
    out
}

impl Walker {
    fn reject(&mut self, chain: &[Level], reason: RejectReason) {
        self.rejections.push(Rejection {
            top: self.top,
            chain: chain.to_vec(),
            reason,
        });
    }

    fn accept(&mut self, chain: &[Level], root: FsrParams) {
        self.towers.push(Tower {
            top: self.top,
            levels: chain.to_vec(),
            root,
            c_roots: self.c_roots.clone(),
        });
    }

    /// The quotient Δ of the local graph of the top graph.
    fn first_quotient(&mut self, level: Level) {
        let chain = [level];
        let p = level.params;
        if self.enforce_mu_below_k && p.mu >= p.k {
            return self.reject(&chain, RejectReason::MuNotBelowK);
        }
        let q = c_from_quadratic(&p);
        match &q.roots {
            QuadraticRoots::NoRealRoot => {
                return self.reject(
                    &chain,
                    RejectReason::NoRealRoot {
                        discriminant: q.discriminant.clone(),
                        bound: q.discriminant_bound.clone(),
                    },
                )
            }
            QuadraticRoots::NoIntegralRoot => {
                return self.reject(
                    &chain,
                    RejectReason::NoIntegralRoot {
                        discriminant: q.discriminant.clone(),
                    },
                )
            }
            QuadraticRoots::Integral(roots) => self.c_roots = roots.clone(),
        }
        if !q.discriminant_bound.holds {
            return self.reject(
                &chain,
                RejectReason::DiscriminantBound {
                    lhs: q.discriminant_bound.lhs,
                    rhs: q.discriminant_bound.rhs,
                },
            );
        }
        if p.mu == 1 {
            self.first_quotient_fsr(&chain)
        } else {
            // DiscriminantBound together with μ̄ < k̄ forces k̄ <= 2(λ̄ + 1)
            if p.k > 2 * (p.lambda + 1) {
                return self.reject(&chain, RejectReason::QuotientDegree);
            }
            self.descend(chain.to_vec())
        }
    }

    /// Δ ∈ F(s, r): `rs < 2(s+1)` and `s + 1 <= r` leave `s = 1`, `r ∈ {2, 3}`.
    fn first_quotient_fsr(&mut self, chain: &[Level]) {
        let p = chain[0].params;
        let Some((s, r)) = fsr_of(&p) else {
            return self.reject(chain, RejectReason::NotFsr);
        };
        let root = match fsr_params(s, r) {
            Ok(root) => root,
            Err(_) => return self.reject(chain, RejectReason::TooFewCliques { s, r }),
        };
        if r * s >= 2 * (s + 1) {
            return self.reject(chain, RejectReason::FsrDegree { s, r });
        }
        if !eigenvalue_feasible(&root.srg()).feasible {
            return self.reject(chain, RejectReason::NoMooreGraph { r });
        }
        self.accept(chain, root)
    }

    /// Descends below the last level of `chain`, which has μ > 1.
    fn descend(&mut self, chain: Vec<Level>) {
        let parent = chain.last().expect("nonempty chain").params;
        let descents = descend_to_quotient(parent.host()).expect("parent has mu > 1");
        if descents.is_empty() {
            return self.reject(&chain, RejectReason::NoDescent);
        }
        for d in descents {
            let level = Level {
                alpha: d.alpha,
                params: d.params,
            };
            let mut next = chain.clone();
            next.push(level);
            let p = d.params;
            if self.enforce_mu_below_k && p.mu >= p.k {
                self.reject(&next, RejectReason::MuNotBelowK);
                continue;
            }
            // DegreeGap applies to Σ_1, the quotient one level below Δ
            if next.len() == 2 && !degree_gap_check(&p) {
                self.reject(&next, RejectReason::DegreeGap);
                continue;
            }
            if self.options.strict_discriminant {
                let q = c_from_quadratic(&p);
                if !q.discriminant_bound.holds {
                    self.reject(
                        &next,
                        RejectReason::DiscriminantBound {
                            lhs: q.discriminant_bound.lhs,
                            rhs: q.discriminant_bound.rhs,
                        },
                    );
                    continue;
                }
            }
            if p.mu > 1 {
                self.descend(next);
                continue;
            }
            self.deep_root(&next);
        }
    }

    /// Σ_h with μ = 1 below an SRG level Σ_{h-1}.
    fn deep_root(&mut self, chain: &[Level]) {
        let p = chain.last().expect("nonempty chain").params;
        let Some((s, r)) = fsr_of(&p) else {
            return self.reject(chain, RejectReason::NotFsr);
        };
        if fsr_params(s, r).is_err() {
            return self.reject(chain, RejectReason::TooFewCliques { s, r });
        }
        if s > 1 {
            return self.reject(chain, RejectReason::Monotonicity { s, r });
        }
        if !eigenvalue_feasible(&p).feasible {
            return self.reject(chain, RejectReason::NoMooreGraph { r });
        }
        let parent = chain[chain.len() - 2].params;
        self.reject(
            chain,
            RejectReason::LocallyMoore {
                r,
                parent_eigen_feasible: eigenvalue_feasible(&parent).feasible,
            },
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn srg(v: u64, k: u64, l: u64, m: u64) -> SrgParams {
        SrgParams::new(v, k, l, m).unwrap()
    }

    #[test]
    fn completion() {
        assert_eq!(srg_complete(7, 0, 1).unwrap().v, 50);
        assert_eq!(srg_complete(50, 7, 2).unwrap().v, 1101);
        assert_eq!(srg_complete(3, 0, 1).unwrap().v, 10);
        assert_eq!(
            srg_complete(5, 2, 2),
            Ok(SrgParams { v: 11, k: 5, lambda: 2, mu: 2 })
        );
        assert!(matches!(
            srg_complete(5, 1, 2),
            Err(FeasibilityError::NotDivisible { numerator: 15, divisor: 2, remainder: 1 })
        ));
        assert!(matches!(srg_complete(3, 3, 1), Err(FeasibilityError::Invalid(_))));
        assert!(SrgParams::new(12, 5, 2, 2).is_err());
    }

    #[test]
    fn eigenvalues() {
        let e = eigenvalue_feasible(&srg(1101, 50, 7, 2));
        assert_eq!(e.discriminant, BigInt::from(217));
        assert!(!e.feasible && !e.conference && e.roots.is_none());

        let e = eigenvalue_feasible(&srg(50, 7, 0, 1));
        assert!(e.feasible && e.integral);
        assert_eq!(e.roots, Some([Rational::integer(2), Rational::integer(-3)]));
        assert_eq!(e.multiplicities, [Rational::integer(28), Rational::integer(21)]);

        // integral eigenvalues 3 and -4 but multiplicity 1794/7
        let e = eigenvalue_feasible(&srg(170, 13, 0, 1));
        assert!(!e.feasible && e.roots.is_some());
        assert!(!e.multiplicities[0].is_integer());

        let e = eigenvalue_feasible(&srg(5, 2, 0, 1));
        assert!(e.feasible && e.conference && !e.integral);
        assert_eq!(e.discriminant, BigInt::from(5));
    }

    #[test]
    fn moore_degrees_from_eigenvalues() {
        let feasible: Vec<u64> = (2..=60)
            .filter(|&r| eigenvalue_feasible(&fsr_params(1, r).unwrap().srg()).feasible)
            .collect();
        assert_eq!(feasible, vec![2, 3, 7, 57]);
    }

    #[test]
    fn fsr() {
        assert_eq!(fsr_params(1, 2).unwrap().srg(), srg(5, 2, 0, 1));
        assert_eq!(fsr_params(1, 3).unwrap().srg(), srg(10, 3, 0, 1));
        assert_eq!(fsr_params(2, 2), Err(FeasibilityError::TooFewCliques { s: 2, r: 2 }));
        assert!(fsr_params(0, 2).is_err());
    }

    #[test]
    fn descents() {
        let d = descend_to_quotient(HostParams { k: 5, lambda: 2, mu: 2 }).unwrap();
        assert_eq!(d, vec![Descent { alpha: 1, params: srg(5, 2, 0, 1) }]);
        let d = descend_to_quotient(HostParams { k: 10, lambda: 3, mu: 2 }).unwrap();
        assert_eq!(d, vec![Descent { alpha: 1, params: srg(10, 3, 0, 1) }]);
        assert_eq!(
            descend_to_quotient(HostParams { k: 7, lambda: 0, mu: 1 }),
            Err(FeasibilityError::MuTooSmall(1))
        );
        // composes from (2, pentagon), but α = 2 > λ̄ + 1 = 1 is excluded
        let d = descend_to_quotient(HostParams { k: 10, lambda: 5, mu: 3 }).unwrap();
        assert!(d.is_empty());
    }

    #[test]
    fn compose() {
        assert_eq!(
            compose_from_quotient(1, &srg(5, 2, 0, 1)).unwrap(),
            HostParams { k: 5, lambda: 2, mu: 2 }
        );
        assert_eq!(
            compose_from_quotient(1, &srg(10, 3, 0, 1)).unwrap(),
            HostParams { k: 10, lambda: 3, mu: 2 }
        );
        assert_eq!(
            compose_from_quotient(2, &srg(5, 2, 0, 1)).unwrap(),
            HostParams { k: 10, lambda: 5, mu: 3 }
        );
    }

    #[test]
    fn quadratic() {
        let q = c_from_quadratic(&srg(5, 2, 0, 1));
        assert_eq!(q.roots, QuadraticRoots::Integral(vec![2, 5]));
        assert!(q.discriminant_bound.holds);
        assert_eq!(q.discriminant_bound.lhs, Rational::new(25, 4));
        assert_eq!(q.discriminant_bound.rhs, Rational::integer(4));

        let q = c_from_quadratic(&srg(10, 3, 0, 1));
        assert_eq!(q.roots, QuadraticRoots::Integral(vec![4, 5]));
        assert_eq!((q.discriminant_bound.lhs.clone(), q.discriminant_bound.rhs.clone()), (Rational::new(49, 4), Rational::integer(12)));
        assert!(q.discriminant_bound.holds);

        let q = c_from_quadratic(&srg(50, 7, 0, 1));
        assert_eq!(q.roots, QuadraticRoots::NoRealRoot);
        assert_eq!(q.discriminant, BigInt::from(17 * 17 - 400));
        assert_eq!(q.discriminant_bound.lhs, Rational::new(225, 4));
        assert_eq!(q.discriminant_bound.rhs, Rational::integer(84));
        assert!(!q.discriminant_bound.holds);
    }

    #[test]
    fn degree_gap() {
        assert!(degree_gap_check(&srg(5, 2, 0, 1)));
        assert!(!degree_gap_check(&srg(10, 3, 0, 1)));
        assert!(!degree_gap_check(&srg(50, 7, 0, 1)));
    }

    #[test]
    fn small_scans() {
        assert!(tower_scan(4, ScanOptions::default()).towers.is_empty());
        let r = tower_scan(10, ScanOptions::default());
        let tops: Vec<HostParams> = r.towers.iter().map(|t| t.top).collect();
        assert_eq!(
            tops,
            vec![HostParams { k: 5, lambda: 2, mu: 2 }, HostParams { k: 10, lambda: 3, mu: 2 }]
        );
        assert!(r.towers.iter().all(Tower::is_consistent));
    }
}
