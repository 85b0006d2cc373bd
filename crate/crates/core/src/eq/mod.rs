//! Single-equation solvers.

mod congruence;
mod gcd;

pub use congruence::solve_eq_congruence;
pub use gcd::solve_eq_gcd;

use num_traits::Zero;

use crate::error::SolveError;
use crate::model::{GeneralSolution, LinearSystem, NoSolution, SolveOutcome, SolverTrace, Witness};
use crate::workspace::Solved;

/// Which single-equation method to run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EquationMethod {
    /// Descent on the smallest coefficient.
    Gcd,
    /// Descent on the least residue between coefficient pairs.
    #[default]
    Congruence,
}

impl EquationMethod {
    pub fn solve(self, eq: &LinearSystem) -> Result<Solved, SolveError> {
        match self {
            EquationMethod::Gcd => solve_eq_gcd(eq),
            EquationMethod::Congruence => solve_eq_congruence(eq),
        }
    }
}

fn require_single(eq: &LinearSystem) -> Result<(), SolveError> {
    if eq.num_equations() != 1 {
        return Err(SolveError::InvalidInput(format!(
            "expected a single equation, got {}",
            eq.num_equations()
        )));
    }
    Ok(())
}

/// The all-zero equation: everything or nothing.
fn trivial(eq: &LinearSystem) -> Option<Result<Solved, SolveError>> {
    if !eq.matrix()[0].iter().all(Zero::is_zero) {
        return None;
    }
    let b = &eq.rhs()[0];
    let outcome = if b.is_zero() {
        match GeneralSolution::full_lattice(eq.vars().to_vec()) {
            Ok(gs) => SolveOutcome::Solution(gs),
            Err(e) => return Some(Err(e.into())),
        }
    } else {
        SolveOutcome::NoSolution(NoSolution {
            reason: format!("all coefficients are zero but the right-hand side is {b}"),
            witness: Witness::Contradiction { rhs: b.clone() },
        })
    };
    Some(Ok(Solved {
        outcome,
        trace: SolverTrace::default(),
    }))
}
