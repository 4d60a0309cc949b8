//! Verification driver: groups of identity checks and the dual-engine crosscheck.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_traits::Signed;

use crate::classical::{
    decomposition_check, frak_checks, monic_uniqueness_check, shift_check, square_diagonalization_check,
    transmute_check, weight_diagonalization_check, JacobiParams,
};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::multiplicity::{Mode, Multiplicity};
use crate::nonsym::{eigenfunction_e, NonsymFamily};
use crate::pairing::InnerProductEngine;
use crate::rational::{fmt_rational, rat, to_f64};
use crate::spherical::{generator_eigen_check, identification_check, spherical_eigen_check};
use crate::transport::gamma;
use crate::vector::{gamma_star_check, matrix_family_checks, matrix_orthogonality_check};
use crate::verdict::OperatorVerdict;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Eigen,
    Ortho,
    Matrix,
    Shift,
    Transmute,
    Spherical,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] =
        [Suite::Eigen, Suite::Ortho, Suite::Matrix, Suite::Shift, Suite::Transmute, Suite::Spherical];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Eigen => "eigen",
            Suite::Ortho => "ortho",
            Suite::Matrix => "matrix",
            Suite::Shift => "shift",
            Suite::Transmute => "transmute",
            Suite::Spherical => "spherical",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "eigen" => Suite::Eigen,
            "ortho" => Suite::Ortho,
            "matrix" => Suite::Matrix,
            "shift" => Suite::Shift,
            "transmute" => Suite::Transmute,
            "spherical" => Suite::Spherical,
            "all" => Suite::All,
            other => return Err(Error::ParameterOutOfRange(format!("unknown suite {other:?}"))),
        })
    }
}

/// Parameters shared by all suites.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub k: Multiplicity,
    /// `n` runs over `[-range, range]`.
    pub range: i64,
    /// Matrix degrees `0..=big_n`.
    pub big_n: u64,
    pub params: JacobiParams,
    pub ms: Vec<u32>,
    pub degree: u32,
    /// Tolerance for the floating-point crosscheck.
    pub tol: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        Self {
            k: Multiplicity::exact(1, 1).expect("valid"),
            range: 8,
            big_n: 6,
            params: JacobiParams::new(rat(3, 2), rat(1, 2)),
            ms: (1..=5).collect(),
            degree: 8,
            tol: 1e-10,
        }
    }
}

/// One verdict with the identity it checks and the time taken.
#[derive(Clone, Debug)]
pub struct ReportEntry {
    pub suite: Suite,
    pub identity: &'static str,
    pub verdict: OperatorVerdict,
    pub micros: u128,
}

impl fmt::Display for ReportEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} | {} | {}us", self.suite.name(), self.verdict, self.identity, self.micros)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn all_hold(&self) -> bool {
        self.entries.iter().all(|e| e.verdict.holds())
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.verdict.holds())
    }

    fn sort(&mut self) {
        self.entries.sort_by(|a, b| (a.suite, &a.verdict.case).cmp(&(b.suite, &b.verdict.case)));
    }
}

struct Recorder {
    suite: Suite,
    entries: Vec<ReportEntry>,
}

impl Recorder {
    fn new(suite: Suite) -> Self {
        Self { suite, entries: Vec::new() }
    }

    fn run(&mut self, identity: &'static str, f: impl FnOnce() -> Result<OperatorVerdict>) {
        self.run_many(identity, || f().map(|v| vec![v]));
    }

    fn run_many(&mut self, identity: &'static str, f: impl FnOnce() -> Result<Vec<OperatorVerdict>>) {
        let start = Instant::now();
        let verdicts = f().unwrap_or_else(|e| vec![OperatorVerdict::from_bool(identity, false, e.to_string())]);
        let micros = start.elapsed().as_micros();
        let each = micros / verdicts.len().max(1) as u128;
        self.entries.extend(verdicts.into_iter().map(|verdict| ReportEntry {
            suite: self.suite,
            identity,
            verdict,
            micros: each,
        }));
    }
}

fn eigen_suite(cfg: &SuiteConfig) -> Vec<ReportEntry> {
    let mut rec = Recorder::new(Suite::Eigen);
    let mut family = match NonsymFamily::new(&cfg.k) {
        Ok(f) => f,
        Err(e) => {
            rec.run("D_k E(n,k) = λ_n E(n,k)", || Err(e));
            return rec.entries;
        }
    };
    for n in -cfg.range..=cfg.range {
        rec.run("D_k E(n,k) = λ_n E(n,k)", || family.eigen_check(n));
        rec.run("E(n,k): Gram–Schmidt = triangular eigenfunction", || {
            let gs = family.e(n)?.clone();
            let ef = eigenfunction_e(&cfg.k, n)?;
            Ok(OperatorVerdict::exact(
                format!("eigenfunction-agreement k={} n={n}", cfg.k),
                &(&gs - &ef).max_abs_coeff(),
                "",
            ))
        });
    }
    for n in 0..=cfg.range.max(0) as u64 {
        rec.run("[z^{-n}] E(n+1,k) = k1/(1+2n+2ρ)", || family.subleading_check(n));
    }
    rec.entries
}

fn ortho_suite(cfg: &SuiteConfig) -> Vec<ReportEntry> {
    let mut rec = Recorder::new(Suite::Ortho);
    let k = cfg.k.clone();
    let range = cfg.range;
    rec.run("(E(n,k), E(m,k))_k = 0 for n ≠ m", || {
        let mut family = NonsymFamily::new(&k)?;
        let engine = InnerProductEngine::new(&k)?;
        let es: Vec<LaurentPoly> = (-range..=range).map(|n| family.e(n).cloned()).collect::<Result<_>>()?;
        let mut worst = rat(0, 1);
        for (i, a) in es.iter().enumerate() {
            for b in &es[i + 1..] {
                worst = worst.max(engine.ct_pair(a, b)?.abs());
            }
        }
        Ok(OperatorVerdict::exact(format!("e-orthogonality k={k} |n|<={range}"), &worst, ""))
    });
    rec.run("vec_pair(P(n,k), P(m,k)) = 0 for n ≠ m", || {
        let mut family = NonsymFamily::new(&k)?;
        let engine = InnerProductEngine::new(&k)?;
        let ps: Vec<_> = (-range..=range).map(|n| family.e(n).map(gamma)).collect::<Result<_>>()?;
        let mut ok = true;
        for (i, a) in ps.iter().enumerate() {
            for (j, b) in ps.iter().enumerate() {
                let v = engine.vec_pair(a, b)?;
                ok &= if i == j { v.is_positive() } else { v.is_zero_within(0.0) };
            }
        }
        Ok(OperatorVerdict::from_bool(format!("p-orthogonality k={k} |n|<={range}"), ok, ""))
    });
    if let Some((k1, k2)) = k.integer_parts() {
        let degree = cfg.degree.min(12) as i64;
        rec.run("|quad_pair - ct_pair| <= tol (1 + |ct_pair|)", || {
            crosscheck(&Multiplicity::exact(k1.into(), k2.into())?, degree, cfg.tol).map(|r| r.verdict())
        });
    }
    rec.entries
}

fn matrix_suite(cfg: &SuiteConfig) -> Vec<ReportEntry> {
    let mut rec = Recorder::new(Suite::Matrix);
    let k = cfg.k.clone();
    rec.run("U 𝒲 U^T = 2 diag(1-x, 1+x)", || Ok(weight_diagonalization_check()));
    for j in -10..=10 {
        rec.run("Γ_*(D_k) first form = second form = Γ ∘ D_k", || {
            gamma_star_check(&k, &LaurentPoly::monomial(j))
        });
    }
    let mut family = match NonsymFamily::new(&k) {
        Ok(f) => f,
        Err(e) => {
            rec.run("ℳ(N,k)", || Err(e));
            return rec.entries;
        }
    };
    for n in 0..=cfg.big_n {
        rec.run_many("lc ℳ(N,k) = C_N(k); 𝒟_k ℳ(N,k) = ℳ(N,k) Λ(N,k)", || {
            matrix_family_checks(&mut family, n)
        });
        for m in 0..=cfg.big_n {
            rec.run("mat_pair(ℳ(N), ℳ(M)) = 0 for N ≠ M, diagonal for N = M", || {
                matrix_orthogonality_check(&mut family, n, m)
            });
        }
        rec.run("U ℳ(N,k) C_N^{-1} U^{-1} = 𝒩(N) lc(𝒩(N))^{-1}", || {
            monic_uniqueness_check(&mut family, n)
        });
        rec.run("E(-N), E(N+1) from P_N^{(α+1,β)}, P_N^{(α,β+1)} and c_N(k)", || {
            Ok(decomposition_check(&mut family, n))
        });
        rec.run_many("𝔇 = U 𝒟_k U^{-1}; 𝔏 = U C_N Λ C_N^{-1} U^{-1}; 𝔇 𝒩 = 𝒩 𝔏", || {
            Ok(frak_checks(&k, n))
        });
        rec.run("U 𝒟_k(𝒟_k - I) U^{-1} diagonal with eigenvalue (N+ρ)(N+ρ+1)", || {
            Ok(square_diagonalization_check(&k, n))
        });
    }
    rec.entries
}

fn shift_suite(cfg: &SuiteConfig) -> Vec<ReportEntry> {
    let mut rec = Recorder::new(Suite::Shift);
    for n in 0..=cfg.big_n as usize {
        rec.run("((x±1)∂ + ·) shift identities for P_N", || Ok(shift_check(&cfg.params, n)));
    }
    rec.entries
}

fn transmute_suite(cfg: &SuiteConfig) -> Vec<ReportEntry> {
    let mut rec = Recorder::new(Suite::Transmute);
    rec.run("𝒟_{k'} ∘ ∂_x = ∂_x ∘ 𝒟_k, k' = (k1, k2+1)", || {
        transmute_check(&cfg.k, cfg.degree as usize)
    });
    rec.entries
}

fn spherical_suite(cfg: &SuiteConfig) -> Vec<ReportEntry> {
    let mut rec = Recorder::new(Suite::Spherical);
    for &m in &cfg.ms {
        rec.run("Q_m + I = Γ_*(D_{(0,m)}) at scale 2", || identification_check(m, cfg.degree));
        rec.run("R_m (z, z^{-1}) = (2m+1)(z, z^{-1}); R_m (z^{-1}, z) = -(2m+1)(z^{-1}, z)", || {
            generator_eigen_check(m)
        });
        for n in -2..=2 {
            rec.run("R_m Φ_n = (2λ_n - 1) Φ_n", || spherical_eigen_check(m, n));
        }
    }
    rec.entries
}

fn run_one(suite: Suite, cfg: &SuiteConfig) -> Vec<ReportEntry> {
    match suite {
        Suite::Eigen => eigen_suite(cfg),
        Suite::Ortho => ortho_suite(cfg),
        Suite::Matrix => matrix_suite(cfg),
        Suite::Shift => shift_suite(cfg),
        Suite::Transmute => transmute_suite(cfg),
        Suite::Spherical => spherical_suite(cfg),
        Suite::All => unreachable!(),
    }
}

/// Runs the selected suite (all six groups in parallel for [`Suite::All`]); entries are
/// sorted by suite and case.
pub fn run_suite(suite: Suite, cfg: &SuiteConfig) -> Report {
    let entries = if suite == Suite::All {
        std::thread::scope(|s| {
            let handles: Vec<_> = Suite::ALL.iter().map(|&g| s.spawn(move || run_one(g, cfg))).collect();
            handles.into_iter().flat_map(|h| h.join().expect("suite thread")).collect()
        })
    } else {
        run_one(suite, cfg)
    };
    let mut report = Report { entries };
    report.sort();
    report
}

/// Result of comparing the two pairing engines.
#[derive(Clone, Debug)]
pub struct CrosscheckReport {
    pub k: Multiplicity,
    pub degree: i64,
    pub pairs: usize,
    /// Largest `|quad - exact| / (1 + |exact|)`.
    pub max_deviation: f64,
    pub tol: f64,
}

impl CrosscheckReport {
    pub fn passed(&self) -> bool {
        self.max_deviation <= self.tol
    }

    pub fn verdict(&self) -> OperatorVerdict {
        OperatorVerdict::within(
            format!("crosscheck k={} degree<={}", self.k, self.degree),
            self.max_deviation,
            self.tol,
            format!("pairs={}", self.pairs),
        )
    }
}

/// Compares `quad_pair` and `ct_pair` on all monomial pairs `z^a, z^b`, `|a|, |b| ≤ degree`.
pub fn crosscheck(k: &Multiplicity, degree: i64, tol: f64) -> Result<CrosscheckReport> {
    if k.integer_parts().is_none() || k.scale() != 1 {
        return Err(Error::InvalidMultiplicity(format!(
            "crosscheck needs nonnegative integer k at root scale 1, got {k}"
        )));
    }
    let exact = InnerProductEngine::new(&k.with_mode(Mode::Exact)?)?;
    let float = InnerProductEngine::new(&k.with_mode(Mode::Float)?)?;
    let mut max_deviation: f64 = 0.0;
    let mut pairs = 0;
    for a in -degree..=degree {
        let p = LaurentPoly::monomial(a);
        for b in -degree..=degree {
            let q = LaurentPoly::monomial(b);
            let e = to_f64(&exact.ct_pair(&p, &q)?);
            let f = float.quad_pair(&p, &q)?;
            max_deviation = max_deviation.max((f - e).abs() / (1.0 + e.abs()));
            pairs += 1;
        }
    }
    Ok(CrosscheckReport { k: k.clone(), degree, pairs, max_deviation, tol })
}

/// Short description of a multiplicity for report headers.
pub fn describe(k: &Multiplicity) -> String {
    format!("k1={} k2={} scale={}", fmt_rational(k.k1()), fmt_rational(k.k2()), k.scale())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SuiteConfig {
        SuiteConfig { range: 3, big_n: 2, degree: 4, ms: vec![1, 2], ..SuiteConfig::default() }
    }

    #[test]
    fn each_suite_passes_on_small_config() {
        let cfg = small();
        for s in Suite::ALL {
            let r = run_suite(s, &cfg);
            assert!(!r.entries.is_empty(), "{}", s.name());
            let first = r.failures().next().map(|e| e.to_string());
            assert!(first.is_none(), "{first:?}");
        }
    }

    #[test]
    fn all_is_sorted_union() {
        let cfg = small();
        let all = run_suite(Suite::All, &cfg);
        let total: usize = Suite::ALL.iter().map(|&s| run_suite(s, &cfg).entries.len()).sum();
        assert_eq!(all.entries.len(), total);
        assert!(all.entries.windows(2).all(|w| (w[0].suite, &w[0].verdict.case) <= (w[1].suite, &w[1].verdict.case)));
        assert!(all.all_hold());
    }

    #[test]
    fn crosscheck_examples() {
        let r = crosscheck(&Multiplicity::exact(1, 1).unwrap(), 12, 1e-10).unwrap();
        assert!(r.passed(), "{}", r.max_deviation);
        let r = crosscheck(&Multiplicity::exact(0, 0).unwrap(), 4, 1e-10).unwrap();
        assert!(r.max_deviation < 1e-14);
        assert!(crosscheck(&Multiplicity::float(rat(1, 2), rat(1, 1)).unwrap(), 2, 1e-10).is_err());
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }
}
