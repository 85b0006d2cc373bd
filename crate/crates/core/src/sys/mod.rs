//! System preprocessing, the Cramer feasibility test and the system solvers.

mod elim;
mod feasibility;
mod fraction;
mod modpivot;
mod substitution;

pub use elim::solve_sys_elim;
pub use feasibility::{feasibility_cramer, feasibility_cramer_with, FeasibilityStatus, FeasibilityVerdict, MinorSearch};
pub use fraction::{solve_sys_fraction, solve_sys_hybrid};
pub use modpivot::solve_sys_modpivot;
pub(crate) use feasibility::determinant as feasibility_determinant;
pub use substitution::{solve_sys_substitution, solve_sys_substitution_with};

use crate::model::{LinearSystem, NoSolution};
use crate::workspace::Workspace;

/// Result of [`preprocess`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Preprocessed {
    System(LinearSystem),
    /// Every row vanished: all of `Z^n` solves it.
    Unconstrained,
}

/// Divides rows by their coefficient gcd, drops `0 = 0` rows and duplicates,
/// and rejects rows that cannot hold over the integers.
pub fn preprocess(sys: &LinearSystem) -> Result<Preprocessed, NoSolution> {
    let mut ws = Workspace::new(sys);
    if let Some(ns) = ws.preprocess() {
        return Err(ns);
    }
    if ws.eqs.is_empty() {
        return Ok(Preprocessed::Unconstrained);
    }
    let n = sys.num_vars();
    let a = ws
        .eqs
        .iter()
        .map(|e| (0..n).map(|j| e.coeff(j)).collect())
        .collect();
    let b = ws.eqs.iter().map(|e| e.rhs.clone()).collect();
    let out = LinearSystem::new(sys.vars().to_vec(), a, b)
        .expect("rows keep the original width");
    Ok(Preprocessed::System(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::model::Witness;

    #[test]
    fn preprocess_examples() {
        let sys = LinearSystem::from_i64(&[&[15, 0, 21, 69]], &[3]).unwrap();
        let Ok(Preprocessed::System(out)) = preprocess(&sys) else {
            panic!()
        };
        assert_eq!(out.matrix()[0], vec![int(5), int(0), int(7), int(23)]);
        assert_eq!(out.rhs()[0], int(1));

        let zero = LinearSystem::from_i64(&[&[0, 0]], &[0]).unwrap();
        assert_eq!(preprocess(&zero), Ok(Preprocessed::Unconstrained));

        let bad = LinearSystem::from_i64(&[&[0, 0]], &[5]).unwrap();
        assert_eq!(preprocess(&bad).unwrap_err().witness, Witness::Contradiction { rhs: int(5) });
    }

    #[test]
    fn preprocess_keeps_the_zero_row_out_of_example_two() {
        let sys = LinearSystem::from_i64(
            &[&[12, -7, 9, 0], &[0, -5, 8, 10], &[0, 0, 0, 0], &[15, 0, 21, 69]],
            &[12, 0, 0, 3],
        )
        .unwrap();
        let Ok(Preprocessed::System(out)) = preprocess(&sys) else {
            panic!()
        };
        assert_eq!(out.num_equations(), 3);
    }
}
