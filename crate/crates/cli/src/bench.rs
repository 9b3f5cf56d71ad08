//! Timing of the CCO decision on random interval-structured yes-instances.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cobip_core::matrix::cco_decision;
use cobip_core::BinaryMatrix;

/// Longest row interval of a generated instance.
const MAX_RUN: usize = 8;

/// Square matrix of about `target` size (rows + columns + ones) whose rows
/// are intervals with nondecreasing endpoints, shuffled in both dimensions.
/// Rows and columns then both have circularly compatible ones.
pub fn interval_matrix(target: usize, rng: &mut impl Rng) -> BinaryMatrix {
    // a row carries about six 1s once ends are pushed up to stay monotone
    let n = (target / 8).max(1);
    let mut starts: Vec<usize> = (0..n).map(|_| rng.gen_range(0..n)).collect();
    starts.sort_unstable();
    let mut rows = Vec::with_capacity(n);
    let mut prev_end = 0;
    for &d in &starts {
        let len = rng.gen_range(1..=MAX_RUN);
        let e = (d + len - 1).min(n - 1).max(prev_end);
        prev_end = e;
        rows.push((d..=e).collect::<Vec<usize>>());
    }
    let mut row_perm: Vec<usize> = (0..n).collect();
    let mut col_perm: Vec<usize> = (0..n).collect();
    row_perm.shuffle(rng);
    col_perm.shuffle(rng);
    let m = BinaryMatrix::new(n, rows).expect("indices in range");
    m.permute(&row_perm, &col_perm)
}

#[derive(Clone, Debug)]
pub struct BenchRow {
    pub size: usize,
    pub rows: usize,
    pub cols: usize,
    pub ones: usize,
    /// Median over the repetitions.
    pub ns: u128,
    pub decision: bool,
}

impl BenchRow {
    pub const CSV_HEADER: &'static str = "size,rows,cols,ones,ns,decision";

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.size,
            self.rows,
            self.cols,
            self.ones,
            self.ns,
            if self.decision { "CCO" } else { "NOT-CCO" }
        )
    }
}

pub const DEFAULT_SIZES: [usize; 4] = [1_000, 10_000, 100_000, 1_000_000];

/// Times the decision once per instance, `reps` instances per size.
pub fn run_bench(sizes: &[usize], reps: usize, seed: u64) -> Vec<BenchRow> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sizes
        .iter()
        .map(|&target| {
            let mut samples = Vec::with_capacity(reps.max(1));
            let mut last = None;
            let mut decision = true;
            for _ in 0..reps.max(1) {
                let m = interval_matrix(target, &mut rng);
                let start = Instant::now();
                let yes = cco_decision(&m);
                samples.push(start.elapsed().as_nanos());
                decision &= yes;
                last = Some(m);
            }
            samples.sort_unstable();
            let m = last.unwrap();
            BenchRow {
                size: m.size(),
                rows: m.row_count(),
                cols: m.col_count(),
                ones: m.ones(),
                ns: samples[samples.len() / 2],
                decision,
            }
        })
        .collect()
}

/// Least-squares slope of `log ns` against `log size`.
pub fn fit_exponent(rows: &[BenchRow]) -> Option<f64> {
    if rows.len() < 2 {
        return None;
    }
    let pts: Vec<(f64, f64)> = rows
        .iter()
        .map(|r| ((r.size as f64).ln(), (r.ns.max(1) as f64).ln()))
        .collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generated_instances_are_yes_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for target in [50, 200, 1000] {
            let m = interval_matrix(target, &mut rng);
            assert!(cco_decision(&m));
            let size = m.size() as f64;
            assert!(size > target as f64 * 0.5 && size < target as f64 * 1.5, "{size} vs {target}");
        }
    }

    #[test]
    fn slope_of_exact_power_law() {
        let rows: Vec<BenchRow> = [10usize, 100, 1000]
            .iter()
            .map(|&s| BenchRow {
                size: s,
                rows: 0,
                cols: 0,
                ones: 0,
                ns: (s * s) as u128,
                decision: true,
            })
            .collect();
        assert!((fit_exponent(&rows).unwrap() - 2.0).abs() < 1e-9);
    }
}
