//! Seeded random instances for cross-checking and benchmarking.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::arith::Integer;
use crate::eq::{solve_eq_congruence, solve_eq_gcd};
use crate::error::SolveError;
use crate::model::{dot, LinearSystem};

/// Shape of a random system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub min_m: usize,
    pub max_m: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub max_coeff: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub id: usize,
    pub system: LinearSystem,
    /// The point used to build `b`, when the instance was made solvable.
    pub planted: Option<Vec<Integer>>,
}

fn random_row(rng: &mut ChaCha8Rng, n: usize, c: i64) -> Vec<i64> {
    loop {
        let row: Vec<i64> = (0..n).map(|_| rng.random_range(-c..=c)).collect();
        if row.iter().any(|&v| v != 0) {
            return row;
        }
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, shape: &Shape) -> (usize, Vec<Vec<i64>>) {
    let m = rng.random_range(shape.min_m..=shape.max_m);
    let n = rng.random_range(shape.min_n..=shape.max_n);
    let a = (0..m).map(|_| random_row(rng, n, shape.max_coeff)).collect();
    (n, a)
}

fn build(a: &[Vec<i64>], b: &[Integer]) -> LinearSystem {
    let n = a[0].len();
    let vars = (1..=n).map(|j| format!("x{j}")).collect();
    let a = a
        .iter()
        .map(|r| r.iter().map(|&v| Integer::from(v)).collect())
        .collect();
    LinearSystem::new(vars, a, b.to_vec()).expect("generated rows are rectangular")
}

/// A system with `b = A·x*`, `x*` uniform in `[-x_bound, x_bound]^n`.
pub fn random_solvable(rng: &mut ChaCha8Rng, shape: &Shape, x_bound: i64) -> (LinearSystem, Vec<Integer>) {
    let (n, a) = random_matrix(rng, shape);
    let x: Vec<Integer> = (0..n)
        .map(|_| Integer::from(rng.random_range(-x_bound..=x_bound)))
        .collect();
    let b: Vec<Integer> = a
        .iter()
        .map(|r| dot(&r.iter().map(|&v| Integer::from(v)).collect::<Vec<_>>(), &x))
        .collect();
    (build(&a, &b), x)
}

/// A system with `b` uniform in `[-b_bound, b_bound]^m`; may or may not be
/// solvable.
pub fn random_any(rng: &mut ChaCha8Rng, shape: &Shape, b_bound: i64) -> LinearSystem {
    let (_, a) = random_matrix(rng, shape);
    let b: Vec<Integer> = a
        .iter()
        .map(|_| Integer::from(rng.random_range(-b_bound..=b_bound)))
        .collect();
    build(&a, &b)
}

pub const SYSTEM_SHAPE: Shape = Shape {
    min_m: 1,
    max_m: 3,
    min_n: 1,
    max_n: 5,
    max_coeff: 9,
};

/// `solvable` planted systems followed by `unplanted` systems with random
/// right-hand sides.
pub fn system_corpus(seed: u64, solvable: usize, unplanted: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(solvable + unplanted);
    for id in 0..solvable {
        let (system, x) = random_solvable(&mut rng, &SYSTEM_SHAPE, 3);
        out.push(Instance {
            id,
            system,
            planted: Some(x),
        });
    }
    for id in solvable..solvable + unplanted {
        out.push(Instance {
            id,
            system: random_any(&mut rng, &SYSTEM_SHAPE, 20),
            planted: None,
        });
    }
    out
}

pub const EQUATION_SHAPE: Shape = Shape {
    min_m: 1,
    max_m: 1,
    min_n: 1,
    max_n: 4,
    max_coeff: 20,
};

/// Single equations, alternating planted and random right-hand sides.
pub fn equation_corpus(seed: u64, count: usize) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|id| {
            if id % 2 == 0 {
                let (system, x) = random_solvable(&mut rng, &EQUATION_SHAPE, 5);
                Instance {
                    id,
                    system,
                    planted: Some(x),
                }
            } else {
                Instance {
                    id,
                    system: random_any(&mut rng, &EQUATION_SHAPE, 60),
                    planted: None,
                }
            }
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchConfig {
    pub trials: usize,
    pub seed: u64,
    pub max_n: usize,
    pub max_coeff: i64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            trials: 100,
            seed: 1,
            max_n: 4,
            max_coeff: 30,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub instance_id: usize,
    pub n: usize,
    pub e1_iterations: u64,
    pub e2_iterations: u64,
    pub e1_peak_coeff: Integer,
    pub e2_peak_coeff: Integer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

pub const CSV_HEADER: &str = "instance_id,n,e1_iterations,e2_iterations,e1_peak_coeff,e2_peak_coeff";

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{},{}\n",
                r.instance_id, r.n, r.e1_iterations, r.e2_iterations, r.e1_peak_coeff, r.e2_peak_coeff
            ));
        }
        out
    }

    /// Instances where the congruence method needed no more rounds.
    pub fn e2_not_slower(&self) -> usize {
        self.rows
            .iter()
            .filter(|r| r.e2_iterations <= r.e1_iterations)
            .count()
    }

    pub fn summary(&self) -> String {
        let total = self.rows.len();
        let wins = self.e2_not_slower();
        if total == 0 {
            return "no instances; fraction with e2 iterations <= e1 iterations undefined".into();
        }
        format!(
            "fraction with e2 iterations <= e1 iterations: {:.4} ({wins}/{total})",
            wins as f64 / total as f64
        )
    }
}

/// Runs both equation solvers on one equation.
pub fn bench_instance(id: usize, eq: &LinearSystem) -> Result<BenchRow, SolveError> {
    let e1 = solve_eq_gcd(eq)?;
    let e2 = solve_eq_congruence(eq)?;
    Ok(BenchRow {
        instance_id: id,
        n: eq.num_vars(),
        e1_iterations: e1.trace.iterations,
        e2_iterations: e2.trace.iterations,
        e1_peak_coeff: e1.trace.peak_coeff,
        e2_peak_coeff: e2.trace.peak_coeff,
    })
}

/// Equations with `n` uniform in `2..=max_n` (just `max_n` if it is below 2),
/// coefficients uniform in `[-max_coeff, max_coeff]`, never all zero, and
/// `b = a·x*` for `x*` uniform in the same range.
pub fn bench_equations(cfg: &BenchConfig) -> Vec<LinearSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let lo = cfg.max_n.clamp(1, 2);
    let shape = Shape {
        min_m: 1,
        max_m: 1,
        min_n: lo,
        max_n: cfg.max_n.max(lo),
        max_coeff: cfg.max_coeff.max(1),
    };
    (0..cfg.trials)
        .map(|_| random_solvable(&mut rng, &shape, shape.max_coeff).0)
        .collect()
}

pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport, SolveError> {
    run_bench_on(&bench_equations(cfg))
}

/// Instances are solved in parallel; rows come back in instance order.
pub fn run_bench_on(eqs: &[LinearSystem]) -> Result<BenchReport, SolveError> {
    let rows = eqs
        .par_iter()
        .enumerate()
        .map(|(id, eq)| bench_instance(id, eq))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(BenchReport { rows })
}
