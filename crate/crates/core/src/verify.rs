//! Named exhaustive checks, one per identity, with the first counterexample
//! reported when one turns up.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use serde::Serialize;

use crate::bijections::{
    foata, foata_inverse, lambda_inv, lambda_map, phi, phi_inv, psi, psi_bar, psi_phi_variant,
};
use crate::enumeration::{
    des2_recurrence, egf_a2_coefficients, factorial, harmonic_popularity, stirling_table,
    DistributionTable, EnumConfig, JointTable,
};
use crate::error::{Error, Result};
use crate::patterns::{statistic, MeshPattern, StatisticName};
use crate::perm::Permutation;
use crate::transposition::TranspositionArray;

use StatisticName::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm5PaperFoil,
    Thm6,
    Thm7,
    Cor1,
    Cor2,
    Cor3,
    Conj1,
    Conj2,
    RemarkNoneq,
    Symmetry,
    FoataFoil,
    Foata,
    Lemma1,
}

impl CheckId {
    pub const ALL: [CheckId; 18] = [
        Self::Thm1,
        Self::Thm2,
        Self::Thm3,
        Self::Thm4,
        Self::Thm5,
        Self::Thm5PaperFoil,
        Self::Thm6,
        Self::Thm7,
        Self::Cor1,
        Self::Cor2,
        Self::Cor3,
        Self::Conj1,
        Self::Conj2,
        Self::RemarkNoneq,
        Self::Symmetry,
        Self::FoataFoil,
        Self::Foata,
        Self::Lemma1,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Thm1 => "thm1",
            Self::Thm2 => "thm2",
            Self::Thm3 => "thm3",
            Self::Thm4 => "thm4",
            Self::Thm5 => "thm5",
            Self::Thm5PaperFoil => "thm5-paper-foil",
            Self::Thm6 => "thm6",
            Self::Thm7 => "thm7",
            Self::Cor1 => "cor1",
            Self::Cor2 => "cor2",
            Self::Cor3 => "cor3",
            Self::Conj1 => "conj1",
            Self::Conj2 => "conj2",
            Self::RemarkNoneq => "remark-noneq",
            Self::Symmetry => "symmetry",
            Self::FoataFoil => "foata-foil",
            Self::Foata => "foata",
            Self::Lemma1 => "lemma1",
        }
    }

    pub fn default_n_max(self) -> usize {
        match self {
            Self::Conj1 | Self::Conj2 => 9,
            Self::Symmetry => 7,
            Self::RemarkNoneq => 3,
            _ => 8,
        }
    }

    /// Foils pass by failing: finding a counterexample is the expected outcome.
    pub fn is_foil(self) -> bool {
        matches!(self, Self::Thm5PaperFoil | Self::FoataFoil)
    }

    pub fn is_conjecture(self) -> bool {
        matches!(self, Self::Conj1 | Self::Conj2)
    }

    /// Statistics, bijections and table operations the check exercises.
    pub fn touches(self) -> &'static [&'static str] {
        match self {
            Self::Thm1 => &[
                "des0",
                "des1",
                "distribution",
                "stirling_table",
                "insert_last",
            ],
            Self::Thm2 => &[
                "des2",
                "distribution",
                "des2_recurrence",
                "egf_a2_coefficients",
                "insert_last",
            ],
            Self::Thm3 => &["des2", "pcyc", "phi", "phi-inv"],
            Self::Thm4 => &["pex", "fix", "lambda", "lambda-inv"],
            Self::Thm5 => &["pex", "cyc", "psi"],
            Self::Thm5PaperFoil => &["pex", "cyc", "psi-phi"],
            Self::Thm6 => &["pex", "fix", "pcyc", "psi-bar"],
            Self::Thm7 => &["pex", "des2", "distribution"],
            Self::Cor1 => &["des2", "popularity", "harmonic_popularity"],
            Self::Cor2 => &["cyc", "pex", "fix", "distribution"],
            Self::Cor3 => &[
                "des0",
                "des1",
                "des2",
                "pex",
                "popularity",
                "harmonic_popularity",
            ],
            Self::Conj1 => &["des2", "pex", "cyc", "joint_distribution"],
            Self::Conj2 => &["des2", "pex", "des", "exc", "joint_distribution"],
            Self::RemarkNoneq => &["exc", "des", "cyc", "joint_distribution"],
            Self::Symmetry => &["des0", "des1", "des2", "count_mesh", "reverse_complement"],
            Self::FoataFoil => &["pex", "des2", "foata"],
            Self::Foata => &["des", "exc", "foata"],
            Self::Lemma1 => &["cyc", "fix", "pdes", "lrmax", "transposition_array"],
        }
    }
}

impl fmt::Display for CheckId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CheckId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_owned()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    RefutedAsExpected,
}

impl Status {
    pub fn is_acceptable(self) -> bool {
        self != Self::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
            Self::RefutedAsExpected => "refuted-as-expected",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Offending permutations (empty when the mismatch is between whole tables)
/// and the values that disagree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub n: usize,
    pub permutations: Vec<Permutation>,
    pub detail: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for p in &self.permutations {
            write!(f, " [{p}]")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: CheckId,
    pub n_min: usize,
    pub n_max: usize,
    pub status: Status,
    pub counterexample: Option<Counterexample>,
    pub summary: String,
    /// Excluded from serialization so that reports are reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<16} {:<20} n={}..={}  {}",
            self.id.as_str(),
            self.status.as_str(),
            self.n_min,
            self.n_max,
            self.summary
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n{:<16} counterexample {c}", "")?;
        }
        Ok(())
    }
}

pub fn run_check(id: CheckId, n_max: usize) -> Result<VerificationReport> {
    run_check_with(id, n_max, &EnumConfig::default())
}

/// Runs `id` for every length up to `n_max`, sharding enumeration as
/// configured. The report does not depend on the shard count.
pub fn run_check_with(
    id: CheckId,
    n_max: usize,
    config: &EnumConfig,
) -> Result<VerificationReport> {
    let n_max = if id == CheckId::RemarkNoneq { 3 } else { n_max };
    config.check(n_max)?;
    let n_min = if id == CheckId::RemarkNoneq { 3 } else { 1 };
    let start = Instant::now();
    let ctx = Ctx {
        config,
        n_min,
        n_max,
    };
    let outcome = match id {
        CheckId::Thm1 => ctx.thm1(),
        CheckId::Thm2 => ctx.thm2(),
        CheckId::Thm3 => ctx.thm3(),
        CheckId::Thm4 => ctx.thm4(),
        CheckId::Thm5 => ctx.thm5(),
        CheckId::Thm5PaperFoil => ctx.psi_phi_foil(),
        CheckId::Thm6 => ctx.thm6(),
        CheckId::Thm7 => ctx.thm7(),
        CheckId::Cor1 => ctx.cor1(),
        CheckId::Cor2 => ctx.cor2(),
        CheckId::Cor3 => ctx.cor3(),
        CheckId::Conj1 => ctx.conjecture((Des2, Cyc), (Pex, Cyc)),
        CheckId::Conj2 => ctx.conjecture((Des2, Des), (Pex, Exc)),
        CheckId::RemarkNoneq => ctx.remark_noneq(),
        CheckId::Symmetry => ctx.symmetry(),
        CheckId::FoataFoil => ctx.foata_foil(),
        CheckId::Foata => ctx.foata(),
        CheckId::Lemma1 => ctx.lemma1(),
    }?;
    let status = match (&outcome.counterexample, id.is_foil()) {
        (None, false) => Status::Pass,
        (Some(_), false) => Status::Fail,
        (Some(_), true) => Status::RefutedAsExpected,
        (None, true) => Status::Fail,
    };
    let mut summary = outcome.summary;
    if id.is_conjecture() && status == Status::Pass {
        summary.push_str(" (evidence so far, not a proof)");
    }
    Ok(VerificationReport {
        id,
        n_min,
        n_max,
        status,
        counterexample: outcome.counterexample,
        summary,
        elapsed: start.elapsed(),
    })
}

struct Outcome {
    counterexample: Option<Counterexample>,
    summary: String,
}

impl Outcome {
    fn ok(summary: String) -> Self {
        Self {
            counterexample: None,
            summary,
        }
    }

    fn failed(n: usize, permutations: Vec<Permutation>, detail: String, summary: String) -> Self {
        Self {
            counterexample: Some(Counterexample {
                n,
                permutations,
                detail,
            }),
            summary,
        }
    }
}

/// Per-shard state of a scan: the lexicographically first failure seen and
/// how many permutations were examined.
#[derive(Default)]
struct Scan {
    failure: Option<(Permutation, String)>,
    visited: u64,
}

impl Scan {
    fn merge(&mut self, other: Scan) {
        self.visited += other.visited;
        self.failure = match (self.failure.take(), other.failure) {
            (Some(a), Some(b)) => Some(if a.0.as_slice() <= b.0.as_slice() {
                a
            } else {
                b
            }),
            (a, b) => a.or(b),
        };
    }
}

type Probe<'a> = dyn Fn(&Permutation) -> std::result::Result<(), String> + Sync + 'a;

struct Ctx<'a> {
    config: &'a EnumConfig,
    n_min: usize,
    n_max: usize,
}

impl Ctx<'_> {
    fn lengths(&self) -> std::ops::RangeInclusive<usize> {
        self.n_min..=self.n_max
    }

    /// Applies `probe` to every permutation of length `n` (derangements only
    /// if asked) and keeps the first failure.
    fn scan(&self, n: usize, derangements: bool, probe: &Probe<'_>) -> Result<Scan> {
        self.config.fold(
            n,
            Scan::default,
            |acc, p| {
                if derangements && !p.is_derangement() {
                    return;
                }
                acc.visited += 1;
                if acc.failure.is_none() {
                    if let Err(detail) = probe(p) {
                        acc.failure = Some((p.clone(), detail));
                    }
                }
            },
            Scan::merge,
        )
    }

    /// Runs `probe` over every length, stopping at the first failing one.
    fn scan_all(&self, derangements: bool, what: &str, probe: &Probe<'_>) -> Result<Outcome> {
        let mut total = 0;
        for n in self.lengths() {
            let scan = self.scan(n, derangements, probe)?;
            total += scan.visited;
            if let Some((p, detail)) = scan.failure {
                return Ok(Outcome::failed(
                    n,
                    vec![p],
                    detail,
                    format!("{what}: violated"),
                ));
            }
        }
        let domain = if derangements {
            "derangements"
        } else {
            "permutations"
        };
        Ok(Outcome::ok(format!("{what} ({total} {domain})")))
    }

    fn distribution(&self, name: StatisticName, n: usize) -> Result<DistributionTable> {
        self.config.distribution(name, n)
    }

    fn joint(&self, a: StatisticName, b: StatisticName, n: usize) -> Result<JointTable> {
        self.config.joint_distribution(a, b, n)
    }

    fn thm1(&self) -> Result<Outcome> {
        let c = stirling_table::<BigUint>(self.n_max);
        for n in self.lengths() {
            let stirling = c.distribution(n, 1);
            for name in [Des0, Des1] {
                let d = self.distribution(name, n)?;
                if let Some((k, x, y)) = d.first_difference(&stirling) {
                    let detail = format!("k={k}: {name} count {x}, c(n,k+1)={y}");
                    return Ok(Outcome::failed(
                        n,
                        vec![],
                        detail,
                        "distribution mismatch".into(),
                    ));
                }
            }
        }
        let growth = self.growth_laws(&[Des0, Des1])?;
        if growth.counterexample.is_some() {
            return Ok(growth);
        }
        Ok(Outcome::ok(format!(
            "des0 and des1 distributions equal shifted Stirling rows; {}",
            growth.summary
        )))
    }

    /// Insertion growth laws, scanning `S_{n−1}` for each `n` in range.
    fn growth_laws(&self, names: &[StatisticName]) -> Result<Outcome> {
        let mut total = 0;
        for n in self.lengths() {
            let probe = |p: &Permutation| {
                let last = p.as_slice().last().copied();
                for x in 1..=n {
                    let q = p.insert_last(x).map_err(|e| e.to_string())?;
                    for &name in names {
                        let gain = match name {
                            Des0 => x == 1 && !p.is_empty(),
                            Des1 => last == Some(x),
                            Des2 => x < n && last == Some(n - 1),
                            _ => unreachable!("no growth law for {name}"),
                        };
                        let expected = statistic(name, p) + usize::from(gain);
                        let got = statistic(name, &q);
                        if got != expected {
                            return Err(format!(
                                "insert_last(x={x}) gives {name}={got}, expected {expected}"
                            ));
                        }
                    }
                }
                Ok(())
            };
            let scan = self.scan(n - 1, false, &probe)?;
            total += scan.visited;
            if let Some((p, detail)) = scan.failure {
                return Ok(Outcome::failed(
                    n,
                    vec![p],
                    detail,
                    "growth law violated".into(),
                ));
            }
        }
        Ok(Outcome::ok(format!(
            "growth laws hold ({total} insertion bases)"
        )))
    }

    fn thm2(&self) -> Result<Outcome> {
        let rec = des2_recurrence::<BigUint>(self.n_max);
        let egf = egf_a2_coefficients(self.n_max);
        for n in self.lengths() {
            let d = self.distribution(Des2, n)?;
            for (source, table) in [("recurrence", &rec), ("egf", &egf)] {
                if let Some((k, x, y)) = d.first_difference(&table.distribution(n, 0)) {
                    let detail = format!("k={k}: enumeration {x}, {source} {y}");
                    return Ok(Outcome::failed(
                        n,
                        vec![],
                        detail,
                        "des2 table mismatch".into(),
                    ));
                }
            }
        }
        let growth = self.growth_laws(&[Des2])?;
        if growth.counterexample.is_some() {
            return Ok(growth);
        }
        Ok(Outcome::ok(format!(
            "des2 enumeration = recurrence = EGF; {}",
            growth.summary
        )))
    }

    fn thm3(&self) -> Result<Outcome> {
        self.scan_all(
            false,
            "pcyc(phi) = des2, phi_inv inverts phi both ways",
            &|p| {
                let q = phi(p);
                let (d, c) = (statistic(Des2, p), statistic(Pcyc, &q));
                if d != c {
                    return Err(format!("des2={d}, pcyc(phi)={c} (phi = {q})"));
                }
                if phi_inv(&q) != *p {
                    return Err(format!("phi_inv(phi) = {}", phi_inv(&q)));
                }
                if phi(&phi_inv(p)) != *p {
                    return Err(format!("phi(phi_inv) = {}", phi(&phi_inv(p))));
                }
                Ok(())
            },
        )
    }

    fn thm4(&self) -> Result<Outcome> {
        let mut total = 0;
        for n in self.lengths() {
            let scan = self.scan(n, true, &|p| {
                let t = lambda_map(p).map_err(|e| e.to_string())?;
                if let Some(i) = t.star_violation() {
                    return Err(format!("lambda = {t} is not a star array at {i}"));
                }
                let (x, f) = (statistic(Pex, p), t.fix());
                if x != f {
                    return Err(format!("pex={x}, fix(lambda)={f} (lambda = {t})"));
                }
                match lambda_inv(&t) {
                    Ok(q) if q == *p => Ok(()),
                    Ok(q) => Err(format!("lambda_inv(lambda) = {q}")),
                    Err(e) => Err(format!("lambda_inv failed: {e}")),
                }
            })?;
            total += scan.visited;
            if let Some((p, detail)) = scan.failure {
                return Ok(Outcome::failed(
                    n,
                    vec![p],
                    detail,
                    "lambda transport violated".into(),
                ));
            }
            // injective (it has a left inverse), so equal sizes give a bijection
            let stars = TranspositionArray::all(n)
                .filter(TranspositionArray::is_star)
                .count() as u64;
            if stars != scan.visited {
                let detail = format!("{} derangements but {stars} star arrays", scan.visited);
                return Ok(Outcome::failed(
                    n,
                    vec![],
                    detail,
                    "lambda is not onto".into(),
                ));
            }
        }
        Ok(Outcome::ok(format!(
            "lambda is a bijection onto star arrays with fix = pex ({total} derangements)"
        )))
    }

    fn thm5(&self) -> Result<Outcome> {
        self.scan_all(
            true,
            "psi is injective into derangements with cyc = pex",
            &|p| {
                let q = psi(p).map_err(|e| e.to_string())?;
                let (x, c) = (statistic(Pex, p), statistic(Cyc, &q));
                if x != c {
                    return Err(format!("pex={x}, cyc(psi)={c} (psi = {q})"));
                }
                if !q.is_derangement() {
                    return Err(format!("psi = {q} has a fixed point"));
                }
                // psi = T⁻¹∘lambda, so lambda_inv∘T undoes it
                let back = lambda_inv(&q.transposition_array()).map_err(|e| e.to_string())?;
                if back != *p {
                    return Err(format!("psi is not invertible here: recovered {back}"));
                }
                Ok(())
            },
        )
    }

    fn psi_phi_foil(&self) -> Result<Outcome> {
        self.scan_all(true, "cyc(phi∘T⁻¹∘lambda) = pex", &|p| {
            let q = psi_phi_variant(p).map_err(|e| e.to_string())?;
            let (x, c) = (statistic(Pex, p), statistic(Cyc, &q));
            if x != c {
                return Err(format!("pex={x}, cyc(variant)={c} (variant = {q})"));
            }
            Ok(())
        })
    }

    fn thm6(&self) -> Result<Outcome> {
        let mut total = 0;
        for n in self.lengths() {
            let scan = self.scan(n, false, &|p| {
                let q = psi_bar(p);
                let lhs = (statistic(Pex, p), statistic(Fix, p));
                let rhs = (statistic(Pcyc, &q), statistic(Fix, &q));
                if lhs != rhs {
                    return Err(format!(
                        "(pex,fix)={lhs:?}, (pcyc,fix)(psi_bar)={rhs:?} ({q})"
                    ));
                }
                Ok(())
            })?;
            total += scan.visited;
            if let Some((p, detail)) = scan.failure {
                return Ok(Outcome::failed(
                    n,
                    vec![p],
                    detail,
                    "psi_bar transport violated".into(),
                ));
            }
            if let Some((a, b, image)) = first_collision(n, psi_bar) {
                let detail = format!("both map to {image}");
                return Ok(Outcome::failed(
                    n,
                    vec![a, b],
                    detail,
                    "psi_bar not injective".into(),
                ));
            }
        }
        Ok(Outcome::ok(format!(
            "psi_bar is a bijection sending (pex,fix) to (pcyc,fix) ({total} permutations)"
        )))
    }

    fn equidistributed(
        &self,
        label: &str,
        lhs: impl Fn(&Permutation) -> usize + Sync,
        rhs: impl Fn(&Permutation) -> usize + Sync,
    ) -> Result<Outcome> {
        for n in self.lengths() {
            let a: DistributionTable = self.config.distribution_by(n, &lhs)?;
            let b: DistributionTable = self.config.distribution_by(n, &rhs)?;
            if let Some((k, x, y)) = a.first_difference(&b) {
                let detail = format!("value {k}: {x} vs {y}");
                return Ok(Outcome::failed(
                    n,
                    vec![],
                    detail,
                    format!("{label}: differ"),
                ));
            }
        }
        Ok(Outcome::ok(format!("{label}: equal distributions")))
    }

    fn thm7(&self) -> Result<Outcome> {
        self.equidistributed("pex vs des2", |p| statistic(Pex, p), |p| statistic(Des2, p))
    }

    fn cor2(&self) -> Result<Outcome> {
        self.equidistributed(
            "cyc vs pex+fix",
            |p| statistic(Cyc, p),
            |p| statistic(Pex, p) + statistic(Fix, p),
        )
    }

    fn popularities(&self, names: &[StatisticName]) -> Result<Outcome> {
        for n in self.lengths() {
            let expected: BigUint = harmonic_popularity(n);
            for &name in names {
                let got = self.config.popularity(name, n)?;
                if got != expected {
                    let detail = format!("{name} popularity {got}, n!(H_n-1) = {expected}");
                    return Ok(Outcome::failed(
                        n,
                        vec![],
                        detail,
                        "popularity mismatch".into(),
                    ));
                }
            }
        }
        let list: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        Ok(Outcome::ok(format!(
            "popularity of {} equals n!(H_n-1)",
            list.join(", ")
        )))
    }

    fn cor1(&self) -> Result<Outcome> {
        self.popularities(&[Des2])
    }

    fn cor3(&self) -> Result<Outcome> {
        self.popularities(&[Des0, Des1, Des2, Pex])
    }

    fn conjecture(
        &self,
        (a, b): (StatisticName, StatisticName),
        (c, d): (StatisticName, StatisticName),
    ) -> Result<Outcome> {
        let label = format!("({a},{b}) vs ({c},{d})");
        for n in self.lengths() {
            let left = self.joint(a, b, n)?;
            let right = self.joint(c, d, n)?;
            if let Some(((x, y), l, r)) = left.first_difference(&right) {
                let detail = format!("cell ({x},{y}): {l} vs {r}");
                return Ok(Outcome::failed(
                    n,
                    vec![],
                    detail,
                    format!("{label}: tables differ"),
                ));
            }
        }
        Ok(Outcome::ok(format!("{label}: joint tables equal")))
    }

    fn remark_noneq(&self) -> Result<Outcome> {
        let exc = self.joint(Exc, Cyc, 3)?.get(1, 2);
        let des = self.joint(Des, Cyc, 3)?.get(1, 2);
        if exc == BigUint::from(3u32) && des == BigUint::from(2u32) {
            Ok(Outcome::ok(format!(
                "joint(exc,cyc,3)(1,2) = {exc} but joint(des,cyc,3)(1,2) = {des}"
            )))
        } else {
            let detail = format!("joint(exc,cyc)(1,2)={exc}, joint(des,cyc)(1,2)={des}");
            Ok(Outcome::failed(
                3,
                vec![],
                detail,
                "expected counts 3 and 2".into(),
            ))
        }
    }

    fn symmetry(&self) -> Result<Outcome> {
        let pairs: Vec<(MeshPattern, MeshPattern)> = (0..=2)
            .map(|i| (MeshPattern::left(i), MeshPattern::right(2 - i)))
            .collect();
        self.scan_all(false, "count(p_i, pi) = count(p'_(2-i), rc(pi))", &|p| {
            let rc = p.reverse_complement();
            for (i, (l, r)) in pairs.iter().enumerate() {
                let (x, y) = (l.count(p), r.count(&rc));
                if x != y {
                    return Err(format!("i={i}: {x} vs {y}"));
                }
            }
            Ok(())
        })
    }

    fn foata_foil(&self) -> Result<Outcome> {
        self.scan_all(false, "pex = des2∘foata", &|p| {
            let q = foata(p);
            let (x, d) = (statistic(Pex, p), statistic(Des2, &q));
            if x != d {
                return Err(format!("pex={x}, des2(foata)={d} (foata = {q})"));
            }
            Ok(())
        })
    }

    fn foata(&self) -> Result<Outcome> {
        self.scan_all(
            false,
            "des = exc∘foata, foata_inverse inverts foata",
            &|p| {
                let q = foata(p);
                let (d, e) = (statistic(Des, p), statistic(Exc, &q));
                if d != e {
                    return Err(format!("des={d}, exc(foata)={e} (foata = {q})"));
                }
                if foata_inverse(&q) != *p {
                    return Err(format!("foata_inverse(foata) = {}", foata_inverse(&q)));
                }
                Ok(())
            },
        )
    }

    fn lemma1(&self) -> Result<Outcome> {
        self.scan_all(
            false,
            "T round trip, fix(T) = cyc, star iff derangement, pdes = des1",
            &|p| {
                let t = p.transposition_array();
                if t.to_permutation() != *p {
                    return Err(format!("T = {t} does not invert"));
                }
                let (f, c) = (t.fix(), statistic(Cyc, p));
                if f != c {
                    return Err(format!("fix(T)={f}, cyc={c} (T = {t})"));
                }
                if t.is_star() != p.is_derangement() {
                    return Err(format!(
                        "T = {t}: star={}, derangement={}",
                        t.is_star(),
                        p.is_derangement()
                    ));
                }
                if statistic(Pdes, p) != statistic(Des1, p) {
                    return Err("pdes differs from des1".into());
                }
                if statistic(Lrmax, p) == 0 && !p.is_empty() {
                    return Err("no left-to-right maximum".into());
                }
                Ok(())
            },
        )
    }
}

/// First pair of permutations of length `n` (in lexicographic order of the
/// later one) with the same image under `f`.
fn first_collision(
    n: usize,
    f: impl Fn(&Permutation) -> Permutation,
) -> Option<(Permutation, Permutation, Permutation)> {
    let mut seen: HashMap<Permutation, Permutation> = HashMap::with_capacity(factorial::<usize>(n));
    for p in crate::enumeration::iter_permutations(n, &[]).expect("empty prefix") {
        let image = f(&p);
        if let Some(prev) = seen.insert(image.clone(), p.clone()) {
            return Some((prev, p, image));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections::Bijection;

    #[test]
    fn ids_round_trip() {
        for id in CheckId::ALL {
            assert_eq!(id.as_str().parse::<CheckId>(), Ok(id));
        }
        assert_eq!(
            "thm8".parse::<CheckId>(),
            Err(Error::UnknownCheck("thm8".into()))
        );
    }

    #[test]
    fn serialized_names_match_cli_names() {
        for id in CheckId::ALL {
            assert_eq!(serde_json::to_value(id).unwrap(), id.as_str());
        }
        let report = run_check(CheckId::Thm5PaperFoil, 3).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["status"], "refuted-as-expected");
        assert_eq!(
            json["counterexample"]["permutations"][0],
            serde_json::json!([3, 1, 2])
        );
        assert!(json.get("elapsed").is_none());
    }

    #[test]
    fn suite_touches_every_statistic_bijection_and_table() {
        let touched: std::collections::HashSet<&str> = CheckId::ALL
            .iter()
            .flat_map(|id| id.touches().iter().copied())
            .collect();
        for name in StatisticName::ALL {
            assert!(touched.contains(name.as_str()), "{name} untested");
        }
        for b in Bijection::ALL {
            assert!(touched.contains(b.as_str()), "{b} untested");
        }
        for op in [
            "distribution",
            "joint_distribution",
            "popularity",
            "harmonic_popularity",
            "stirling_table",
            "des2_recurrence",
            "egf_a2_coefficients",
        ] {
            assert!(touched.contains(op), "{op} untested");
        }
    }

    #[test]
    fn small_suites_pass() {
        for id in CheckId::ALL {
            let report = run_check(id, 6).unwrap();
            assert!(report.status.is_acceptable(), "{report}");
            match report.status {
                Status::Pass => assert!(report.counterexample.is_none()),
                _ => assert!(report.counterexample.is_some()),
            }
        }
    }

    #[test]
    fn psi_phi_foil_refuted_at_three() {
        let report = run_check(CheckId::Thm5PaperFoil, 3).unwrap();
        assert_eq!(report.status, Status::RefutedAsExpected);
        let c = report.counterexample.unwrap();
        assert_eq!(c.n, 3);
        assert_eq!(c.permutations, vec!["3 1 2".parse().unwrap()]);
        assert!(
            c.detail.starts_with("pex=1, cyc(variant)=2"),
            "{}",
            c.detail
        );
    }

    #[test]
    fn foata_foil_refuted_by_four() {
        let report = run_check(CheckId::FoataFoil, 4).unwrap();
        assert_eq!(report.status, Status::RefutedAsExpected);
        assert!(report.counterexample.unwrap().n <= 4);
    }

    #[test]
    fn foil_without_counterexample_fails() {
        let report = run_check(CheckId::FoataFoil, 2).unwrap();
        assert_eq!(report.status, Status::Fail);
        assert!(report.counterexample.is_none());
    }

    #[test]
    fn remark_counts() {
        let report = run_check(CheckId::RemarkNoneq, 8).unwrap();
        assert_eq!(report.status, Status::Pass);
        assert_eq!((report.n_min, report.n_max), (3, 3));
        assert!(report.summary.contains("= 3 but"), "{}", report.summary);
    }

    #[test]
    fn reports_are_deterministic_across_shards() {
        let sharded = EnumConfig::new(11, 5).unwrap();
        for id in [
            CheckId::Thm3,
            CheckId::Thm5PaperFoil,
            CheckId::FoataFoil,
            CheckId::Conj1,
        ] {
            let mut a = run_check(id, 6).unwrap();
            let mut b = run_check_with(id, 6, &sharded).unwrap();
            a.elapsed = Duration::ZERO;
            b.elapsed = Duration::ZERO;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn cap_is_enforced() {
        let cfg = EnumConfig::new(5, 1).unwrap();
        assert!(matches!(
            run_check_with(CheckId::Thm3, 6, &cfg),
            Err(Error::CapExceeded { len: 6, cap: 5 })
        ));
    }

    #[test]
    fn collision_finder() {
        let constant = |p: &Permutation| Permutation::identity(p.len());
        let (a, b, image) = first_collision(3, constant).unwrap();
        assert_eq!(
            (a.to_string(), b.to_string()),
            ("1 2 3".into(), "1 3 2".into())
        );
        assert!(image.is_identity());
        assert!(first_collision(4, |p| p.inverse()).is_none());
    }
}
