//! Seeded reproducibility report bundling the injectivity diagnostics,
//! strip convergence and loop monodromy checks into one JSON artifact.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::covering::{circle_path, monodromy_check, winding_number, SampledPath};
use crate::error::Result;
use crate::limits::{injectivity_in_limit, strip_convergence, ConvergenceReport, StripSpec};

#[derive(Debug, Clone)]
pub struct ReportConfig {
    pub seed: u64,
    pub n_schedule: Vec<u32>,
    pub strip: StripSpec,
    pub nu: usize,
    pub nv: usize,
    pub sample_points: usize,
    pub loops: usize,
    /// Extra paths supplied by the caller, monodromy-checked alongside the
    /// generated ones.
    pub extra_paths: Vec<SampledPath>,
}

impl ReportConfig {
    pub fn with_seed(seed: u64) -> Result<Self> {
        Ok(ReportConfig {
            seed,
            n_schedule: vec![1, 10, 100],
            strip: StripSpec::new(std::f64::consts::PI, -2.0, 2.0)?,
            nu: 41,
            nv: 41,
            sample_points: 20,
            loops: 25,
            extra_paths: Vec::new(),
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InjectivitySummary {
    pub pairs_checked: usize,
    pub pass: bool,
    pub worst_excess: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonodromySummary {
    pub loops_checked: usize,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct StripSummary {
    pub pass: bool,
    pub reports: Vec<ConvergenceReport>,
}

/// Aggregate result; field order is alphabetical so the JSON is key-sorted.
#[derive(Debug, Clone, Serialize)]
pub struct ReportOutput {
    pub injectivity: InjectivitySummary,
    pub monodromy: MonodromySummary,
    pub pass: bool,
    pub seed: u64,
    pub strip: StripSummary,
}

pub fn run_report(cfg: &ReportConfig) -> Result<ReportOutput> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    // Injectivity: random sample points in a moderate box.
    let zs: Vec<Complex64> = (0..cfg.sample_points)
        .map(|_| Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-20.0..20.0)))
        .collect();
    let rows = injectivity_in_limit(&zs, &cfg.n_schedule)?;
    let worst_excess = rows
        .iter()
        .map(|r| r.gap - r.bound)
        .fold(f64::NEG_INFINITY, f64::max);
    let injectivity = InjectivitySummary {
        pairs_checked: rows.len(),
        pass: rows.iter().all(|r| r.within_bound),
        worst_excess,
    };

    // Strip convergence over the schedule.
    let mut reports = Vec::with_capacity(cfg.n_schedule.len());
    for &n in &cfg.n_schedule {
        reports.push(strip_convergence(n, &cfg.strip, cfg.nu, cfg.nv)?);
    }
    let strip = StripSummary {
        pass: reports.iter().all(|r| r.passes(1e-12)),
        reports,
    };

    // Monodromy on random loops: winding in [-5, 5], random radius, and a
    // mix of origin-centered and contractible circles.
    let mut loops_pass = true;
    let mut loops_checked = 0usize;
    for _ in 0..cfg.loops {
        let turns: i64 = rng.gen_range(-5..=5);
        let radius = rng.gen_range(0.5..3.0);
        let contractible = rng.gen_bool(0.3);
        let center = if contractible {
            Complex64::from_polar(radius + rng.gen_range(0.5..2.0), rng.gen_range(0.0..6.28))
        } else {
            Complex64::new(0.0, 0.0)
        };
        let samples = 64 * (turns.unsigned_abs() as usize).max(1);
        let path = circle_path(center, radius, turns, samples)?;
        let expect = if contractible { 0 } else { turns };
        let w = winding_number(&path)?;
        let m = monodromy_check(&path, rng.gen_range(-3..=3))?;
        loops_pass &= w == expect && m == expect;
        loops_checked += 1;
    }
    for path in &cfg.extra_paths {
        if path.is_closed() {
            loops_pass &= monodromy_check(path, 0)? == winding_number(path)?;
            loops_checked += 1;
        }
    }
    let monodromy = MonodromySummary {
        loops_checked,
        pass: loops_pass,
    };

    let pass = injectivity.pass && strip.pass && monodromy.pass;
    Ok(ReportOutput {
        injectivity,
        monodromy,
        pass,
        seed: cfg.seed,
    strip,
    })
}
