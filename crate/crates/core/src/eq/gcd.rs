use num_traits::{One, Signed, Zero};

use super::{require_single, trivial};
use crate::arith::{div_floor, gcd_many, Integer};
use crate::error::SolveError;
use crate::model::{LinearSystem, NoSolution, Witness};
use crate::workspace::{Affine, Solved, Workspace};

/// Solves `a·x = b` by repeatedly dividing through the smallest coefficient.
///
/// Each round picks the nonzero coefficient of least magnitude (lowest slot
/// on ties), floor-divides the rest of the equation by it and replaces the
/// pivot variable with a fresh one, which leaves only remainders behind.
/// The loop ends on a pivot of magnitude 1.
pub fn solve_eq_gcd(eq: &LinearSystem) -> Result<Solved, SolveError> {
    require_single(eq)?;
    if let Some(done) = trivial(eq) {
        return done;
    }
    let mut ws = Workspace::new(eq);
    if let Some(ns) = gcd_test(eq) {
        return Ok(ws.fail(ns));
    }
    if let Some(ns) = ws.preprocess() {
        return Ok(ws.fail(ns));
    }
    loop {
        let row = ws.eqs[0].clone();
        let (&pivot, a) = row
            .coeffs
            .iter()
            .min_by_key(|(v, c)| (c.abs(), ws.slot(**v)))
            .ok_or_else(|| SolveError::Internal("equation lost all its terms".into()))?;
        let a = a.clone();
        ws.trace.round(a.abs());
        if a.abs().is_one() {
            ws.extract(0, pivot)?;
            break;
        }
        // x_i = -Σ q_j x_j + q - t turns the equation into -a t + Σ r_j x_j = r
        let mut expr = Affine::default();
        for (&v, c) in &row.coeffs {
            if v != pivot {
                let (q, _) = div_floor(c, &a).map_err(internal)?;
                expr.add_term(v, &-q);
            }
        }
        let (q, _) = div_floor(&row.rhs, &a).map_err(internal)?;
        expr.constant = q;
        let t = ws.fresh(Some(pivot));
        expr.add_term(t, &-Integer::one());
        ws.bind(pivot, expr, None)?;
    }
    ws.finish(eq)
}

pub(super) fn gcd_test(eq: &LinearSystem) -> Option<NoSolution> {
    let g = gcd_many(&eq.matrix()[0]);
    let b = &eq.rhs()[0];
    if g.is_zero() || (b % &g).is_zero() {
        return None;
    }
    Some(NoSolution {
        reason: format!("gcd {g} of the coefficients does not divide {b}"),
        witness: Witness::GcdDoesNotDivide {
            gcd: g,
            rhs: b.clone(),
        },
    })
}

pub(super) fn internal(e: crate::arith::ArithError) -> SolveError {
    SolveError::Internal(e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::model::SolveOutcome;

    fn rows(xs: &[&[i64]]) -> Vec<Vec<Integer>> {
        xs.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect()
    }

    #[test]
    fn application_equation() {
        let eq = LinearSystem::from_i64(&[&[6, -12, -8, 22]], &[14]).unwrap();
        let solved = solve_eq_gcd(&eq).unwrap();
        let gs = solved.outcome.solution().unwrap();
        assert_eq!(gs.num_params(), 3);
        // the descent reproduces the worked answer term for term
        assert_eq!(
            gs.matrix(),
            rows(&[&[2, -5, 4], &[1, 0, 0], &[0, -1, 3], &[0, 1, 0]]).as_slice()
        );
        assert_eq!(gs.offset(), &[int(5), int(0), int(2), int(0)]);
        assert_eq!(solved.trace.iterations, 3);
        assert_eq!(solved.trace.descent, vec![int(3), int(2), int(1)]);
    }

    #[test]
    fn parity_has_no_solution() {
        let eq = LinearSystem::from_i64(&[&[2, 4]], &[7]).unwrap();
        match solve_eq_gcd(&eq).unwrap().outcome {
            SolveOutcome::NoSolution(ns) => {
                assert_eq!(ns.witness, Witness::GcdDoesNotDivide { gcd: int(2), rhs: int(7) });
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn trivial_equation_is_everything() {
        let eq = LinearSystem::from_i64(&[&[0, 0]], &[0]).unwrap();
        let gs = solve_eq_gcd(&eq).unwrap().outcome.solution().cloned().unwrap();
        assert_eq!(gs.num_params(), 2);
        assert_eq!(gs.matrix(), rows(&[&[1, 0], &[0, 1]]).as_slice());
        assert_eq!(gs.offset(), &[int(0), int(0)]);
    }

    #[test]
    fn zero_coefficient_becomes_parameter() {
        let eq = LinearSystem::from_i64(&[&[0, 3]], &[6]).unwrap();
        let gs = solve_eq_gcd(&eq).unwrap().outcome.solution().cloned().unwrap();
        assert_eq!(gs.matrix(), rows(&[&[1], &[0]]).as_slice());
        assert_eq!(gs.offset(), &[int(0), int(2)]);
    }

    #[test]
    fn rejects_systems() {
        let sys = LinearSystem::from_i64(&[&[1, 1], &[1, -1]], &[0, 0]).unwrap();
        assert!(matches!(solve_eq_gcd(&sys), Err(SolveError::InvalidInput(_))));
    }
}
