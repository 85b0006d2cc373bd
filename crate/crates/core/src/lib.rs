//! Exact integer solutions of linear Diophantine equations and systems.
//!
//! Every solver returns either a witness that no integer solution exists or
//! the full solution set as an affine lattice `x = C·k + d`, `k ∈ Z^p`, with
//! the columns of `C` independent.
//!
//! ```
//! use dioph_core::{solve, textio, Algorithm};
//!
//! let sys = textio::parse_system("6x1 - 12x2 - 8x3 + 22x4 = 14").unwrap();
//! let solved = solve(&sys, Algorithm::E1).unwrap();
//! assert_eq!(solved.outcome.solution().unwrap().num_params(), 3);
//! ```

pub mod arith;
pub mod corpus;
pub mod eq;
mod error;
pub mod model;
pub mod oracle;
pub mod sys;
pub mod textio;
mod workspace;

use std::fmt;
use std::str::FromStr;

pub use arith::{Integer, Rational};
pub use eq::{solve_eq_congruence, solve_eq_gcd, EquationMethod};
pub use error::SolveError;
pub use model::{
    GeneralSolution, LinearSystem, ModelError, NoSolution, SolveOutcome, SolverTrace, Witness,
};
pub use sys::{
    solve_sys_elim, solve_sys_fraction, solve_sys_hybrid, solve_sys_modpivot,
    solve_sys_substitution,
};
pub use workspace::Solved;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Equation: smallest-coefficient descent.
    E1,
    /// Equation: least-residue descent.
    E2,
    /// System: one equation at a time.
    S1,
    /// System: unit coefficients and least residues.
    S2,
    /// System: rational elimination, then residues on the fractional parts.
    S3,
    /// System: smallest coefficient with floor division.
    S4,
    /// System: rational elimination, then floor division on the fractional parts.
    S5,
    /// E2 for one equation, S5 otherwise.
    Auto,
}

impl Algorithm {
    pub const SYSTEM: [Algorithm; 5] = [
        Algorithm::S1,
        Algorithm::S2,
        Algorithm::S3,
        Algorithm::S4,
        Algorithm::S5,
    ];

    /// The concrete algorithm `Auto` stands for on this input.
    pub fn resolve(self, sys: &LinearSystem) -> Algorithm {
        match self {
            Algorithm::Auto if sys.num_equations() == 1 => Algorithm::E2,
            Algorithm::Auto => Algorithm::S5,
            other => other,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::E1 => "e1",
            Algorithm::E2 => "e2",
            Algorithm::S1 => "s1",
            Algorithm::S2 => "s2",
            Algorithm::S3 => "s3",
            Algorithm::S4 => "s4",
            Algorithm::S5 => "s5",
            Algorithm::Auto => "auto",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm `{0}` (expected e1, e2, s1..s5 or auto)")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "e1" => Algorithm::E1,
            "e2" => Algorithm::E2,
            "s1" => Algorithm::S1,
            "s2" => Algorithm::S2,
            "s3" => Algorithm::S3,
            "s4" => Algorithm::S4,
            "s5" => Algorithm::S5,
            "auto" => Algorithm::Auto,
            _ => return Err(UnknownAlgorithm(s.to_string())),
        })
    }
}

/// Runs the chosen algorithm.
pub fn solve(sys: &LinearSystem, alg: Algorithm) -> Result<Solved, SolveError> {
    match alg.resolve(sys) {
        Algorithm::E1 => solve_eq_gcd(sys),
        Algorithm::E2 => solve_eq_congruence(sys),
        Algorithm::S1 => solve_sys_substitution(sys),
        Algorithm::S2 => solve_sys_elim(sys),
        Algorithm::S3 => solve_sys_fraction(sys),
        Algorithm::S4 => solve_sys_modpivot(sys),
        Algorithm::S5 | Algorithm::Auto => solve_sys_hybrid(sys),
    }
}
