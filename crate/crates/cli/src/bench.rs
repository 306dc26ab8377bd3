//! Wall-clock scaling of the decision loop on relabeled random pairs.

use std::fmt::Write;
use std::time::{Duration, Instant};

use anyhow::{ensure, Result};
use isopos_core::corpus::{connected_gnp, random_permutation, Seed};
use isopos_core::{decide_isomorphism, Outcome};

pub const MIN_SIZE: usize = 4;

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub p: f64,
    pub reps: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchPoint {
    pub n: usize,
    pub median: Duration,
    pub accepted: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchReport {
    pub points: Vec<BenchPoint>,
    pub reps: usize,
    /// Least-squares slope of log time against log n; `None` for one size.
    pub slope: Option<f64>,
}

impl BenchReport {
    pub fn render(&self) -> String {
        let mut out = String::new();
        for pt in &self.points {
            let _ = writeln!(
                out,
                "n={} median_seconds={:.6} reps={} accepted={}",
                pt.n,
                pt.median.as_secs_f64(),
                self.reps,
                pt.accepted
            );
        }
        match self.slope {
            Some(s) => {
                let _ = writeln!(out, "slope={s:.3}");
            }
            None => out.push_str("slope=undefined\n"),
        }
        out
    }
}

pub fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2
    }
}

/// Slope of the least-squares line through `(ln x, ln y)`.
pub fn log_log_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let k = logs.len() as f64;
    let mean_x = logs.iter().map(|p| p.0).sum::<f64>() / k;
    let mean_y = logs.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = logs.iter().map(|&(x, y)| (x - mean_x) * (y - mean_y)).sum();
    let sxx: f64 = logs.iter().map(|&(x, _)| (x - mean_x).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport> {
    ensure!(!cfg.sizes.is_empty(), "at least one size is required");
    ensure!(cfg.reps >= 1, "reps must be at least 1");
    ensure!(
        cfg.sizes.iter().all(|&n| n >= MIN_SIZE),
        "sizes must be at least {MIN_SIZE}"
    );
    ensure!(
        cfg.sizes.windows(2).all(|w| w[0] < w[1]),
        "sizes must be strictly increasing"
    );
    let mut points = Vec::with_capacity(cfg.sizes.len());
    for &n in &cfg.sizes {
        let mut rng = Seed(cfg.seed).rng();
        rng.set_stream(n as u64);
        let mut samples = Vec::with_capacity(cfg.reps);
        let mut accepted = 0;
        for _ in 0..cfg.reps {
            let g = connected_gnp(n, cfg.p, &mut rng)?;
            let h = g.apply_permutation(&random_permutation(&g, &mut rng))?;
            let start = Instant::now();
            let decision = decide_isomorphism(&g, &h)?;
            samples.push(start.elapsed().max(Duration::from_nanos(1)));
            if decision.verdict.outcome() == Outcome::HeuristicIsomorphic {
                accepted += 1;
            }
        }
        points.push(BenchPoint {
            n,
            median: median(samples),
            accepted,
        });
    }
    let xy: Vec<(f64, f64)> = points
        .iter()
        .map(|pt| (pt.n as f64, pt.median.as_secs_f64()))
        .collect();
    Ok(BenchReport {
        slope: log_log_slope(&xy),
        points,
        reps: cfg.reps,
    })
}
