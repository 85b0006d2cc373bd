use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::elim::{min_residue, substitute_residue};
use super::modpivot::{floor_step, min_pivot};
use crate::arith::{div_nearest, Integer};
use crate::error::SolveError;
use crate::model::{rank_and_reduce, LinearSystem, NoSolution, RationalReducedForm, Reduction, Witness};
use crate::workspace::{Affine, Equation, Solved, Workspace};

#[derive(Clone, Copy)]
enum Inner {
    /// Least cross-coefficient residues, as in the elimination solver.
    Residue,
    /// Smallest coefficient with floor division, as in the pivot solver.
    FloorPivot,
}

/// Rational elimination first, then integer clean-up of the fractional parts.
///
/// Each main variable is `(Σ e_j x_j + e_0)/Δ`; it becomes its integer part
/// plus a fresh `y`, and `Σ r_j x_j - Δ·y = -r_0` records what the fraction
/// demands. Those side equations are then eliminated by unit coefficients and
/// least residues.
pub fn solve_sys_fraction(sys: &LinearSystem) -> Result<Solved, SolveError> {
    run(sys, Inner::Residue)
}

/// Same front end as [`solve_sys_fraction`], but the side equations are
/// eliminated around their smallest coefficient with floor division.
pub fn solve_sys_hybrid(sys: &LinearSystem) -> Result<Solved, SolveError> {
    run(sys, Inner::FloorPivot)
}

fn run(sys: &LinearSystem, inner: Inner) -> Result<Solved, SolveError> {
    let mut ws = Workspace::new(sys);
    match rank_and_reduce(sys) {
        Reduction::Inconsistent { multipliers, value } => {
            return Ok(ws.fail(NoSolution {
                reason: format!("a rational combination of the equations reads 0 = {value}"),
                witness: Witness::Inconsistent { multipliers, value },
            }));
        }
        Reduction::Reduced(form) => front_end(&mut ws, &form)?,
    }
    'outer: loop {
        redecompose(&mut ws)?;
        loop {
            if let Some(ns) = ws.preprocess() {
                return Ok(ws.fail(ns));
            }
            if ws.eqs.is_empty() {
                break 'outer;
            }
            ws.check_against(sys)?;
            match inner {
                Inner::Residue => {
                    if let Some((row, v)) = ws.find_unit() {
                        ws.trace.round(Integer::one());
                        ws.extract(row, v)?;
                        continue 'outer;
                    }
                    let (row, j1, j2, r) = min_residue(&ws)?;
                    ws.trace.round(r.abs());
                    substitute_residue(&mut ws, row, j1, j2, &r, true)?;
                    if r.abs().is_one() {
                        ws.extract(row, j1)?;
                        continue 'outer;
                    }
                }
                Inner::FloorPivot => {
                    let (row, v, a) = min_pivot(&ws)?;
                    ws.trace.round(a.abs());
                    if a.abs().is_one() {
                        ws.extract(row, v)?;
                        continue 'outer;
                    }
                    floor_step(&mut ws, row, v, true)?;
                }
            }
        }
    }
    ws.finish(sys)
}

fn nearest(a: &Integer, m: &Integer) -> Result<(Integer, Integer), SolveError> {
    div_nearest(a, m).map_err(|e| SolveError::Internal(e.to_string()))
}

/// Replaces the original rows by integer parts plus side equations.
fn front_end(ws: &mut Workspace, form: &RationalReducedForm) -> Result<(), SolveError> {
    ws.eqs.clear();
    for (expr, &col) in form.exprs.iter().zip(&form.pivot_cols) {
        let delta = expr
            .coeffs
            .iter()
            .chain(std::iter::once(&expr.constant))
            .fold(Integer::one(), |acc, c| acc.lcm(c.denom()));
        let scale = |c: &crate::arith::Rational| (c * &delta).to_integer();
        let numer: Vec<Integer> = expr.coeffs.iter().map(scale).collect();
        let numer0 = scale(&expr.constant);

        let mut whole = Affine::default();
        let mut side = Equation::new(Default::default(), Integer::zero());
        for (e, &f) in numer.iter().zip(&form.free_cols) {
            let (q, r) = nearest(e, &delta)?;
            whole.add_term(f, &q);
            if !r.is_zero() {
                side.coeffs.insert(f, r);
            }
        }
        let (q0, r0) = nearest(&numer0, &delta)?;
        whole.constant = q0;
        if delta.is_one() {
            ws.bind(col, whole, None)?;
            continue;
        }
        let y = ws.fresh(None);
        whole.add_term(y, &Integer::one());
        ws.bind(col, whole, None)?;
        side.coeffs.insert(y, -delta);
        side.rhs = -r0;
        side.anchor = Some(y);
        ws.eqs.push(side);
    }
    Ok(())
}

/// For each side equation `c_y·y + Σ c_v v = b`, reduces every `c_v` and `b`
/// to its least residue modulo `c_y` by shifting `y`.
fn redecompose(ws: &mut Workspace) -> Result<(), SolveError> {
    for idx in 0..ws.eqs.len() {
        let eq = ws.eqs[idx].clone();
        let Some(y) = eq.anchor else { continue };
        let cy = eq.coeff(y);
        if cy.is_zero() {
            ws.eqs[idx].anchor = None;
            continue;
        }
        if cy.abs().is_one() {
            continue;
        }
        // y = y' - Σ q_v v + q_0 leaves c_y y' + Σ r_v v = r_0
        let mut shift = Affine::default();
        for (&v, c) in &eq.coeffs {
            if v != y {
                let (q, _) = nearest(c, &cy)?;
                shift.add_term(v, &-q);
            }
        }
        let (q0, _) = nearest(&eq.rhs, &cy)?;
        shift.constant = q0;
        if shift.terms.is_empty() && shift.constant.is_zero() {
            continue;
        }
        let y2 = ws.fresh(Some(y));
        shift.add_term(y2, &Integer::one());
        ws.bind(y, shift, Some(y2))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::model::SolveOutcome;

    fn example3() -> LinearSystem {
        LinearSystem::from_i64(
            &[&[3, 4, 0, 22, -8], &[6, 0, 0, 46, -12], &[0, 4, 3, -1, 9]],
            &[25, 2, 26],
        )
        .unwrap()
    }

    #[test]
    fn example_three_has_two_parameters() {
        let solved = solve_sys_fraction(&example3()).unwrap();
        assert_eq!(solved.outcome.solution().unwrap().num_params(), 2);
        let hybrid = solve_sys_hybrid(&example3()).unwrap();
        assert_eq!(hybrid.outcome.solution().unwrap().num_params(), 2);
    }

    #[test]
    fn already_integral() {
        let sys = LinearSystem::from_i64(&[&[1, 1], &[0, 1]], &[2, 1]).unwrap();
        for solve in [solve_sys_fraction, solve_sys_hybrid] {
            let solved = solve(&sys).unwrap();
            let gs = solved.outcome.solution().unwrap();
            assert_eq!(gs.num_params(), 0);
            assert_eq!(gs.offset(), &[int(1), int(1)]);
            assert_eq!(solved.trace.iterations, 0);
        }
    }

    #[test]
    fn half_is_not_an_integer() {
        let sys = LinearSystem::from_i64(&[&[2]], &[1]).unwrap();
        for solve in [solve_sys_fraction, solve_sys_hybrid] {
            let SolveOutcome::NoSolution(ns) = solve(&sys).unwrap().outcome else {
                panic!("2x = 1 has no integer solution");
            };
            assert!(ns.witness.holds());
        }
    }

    #[test]
    fn rationally_inconsistent() {
        let sys = LinearSystem::from_i64(&[&[1, 1], &[2, 2]], &[1, 3]).unwrap();
        let SolveOutcome::NoSolution(ns) = solve_sys_fraction(&sys).unwrap().outcome else {
            panic!()
        };
        assert!(ns.witness.holds_for(&sys));
    }

    #[test]
    fn example_five_has_three_parameters() {
        let sys = LinearSystem::from_i64(&[&[3, 0, 6, 2, 0], &[0, 4, -2, 0, -7]], &[0, -1]).unwrap();
        let solved = solve_sys_hybrid(&sys).unwrap();
        assert_eq!(solved.outcome.solution().unwrap().num_params(), 3);
    }
}
