use crate::eq::EquationMethod;
use crate::error::SolveError;
use crate::model::{LinearSystem, NoSolution, SolveOutcome, Witness};
use crate::workspace::{Affine, Solved, Workspace};

/// Solves one equation at a time, in input order, with the congruence method
/// and pushes its parametric solution into the rest of the system.
pub fn solve_sys_substitution(sys: &LinearSystem) -> Result<Solved, SolveError> {
    solve_sys_substitution_with(sys, EquationMethod::default())
}

pub fn solve_sys_substitution_with(
    sys: &LinearSystem,
    method: EquationMethod,
) -> Result<Solved, SolveError> {
    let mut ws = Workspace::new(sys);
    let mut done = 0;
    while !ws.eqs.is_empty() {
        done += 1;
        let eq = ws.eqs.remove(0);
        if eq.coeffs.is_empty() {
            if eq.rhs == num_traits::Zero::zero() {
                continue;
            }
            return Ok(ws.fail(NoSolution {
                reason: format!("equation {done} reduces to 0 = {}", eq.rhs),
                witness: Witness::Contradiction { rhs: eq.rhs },
            }));
        }
        let vars: Vec<_> = eq.coeffs.keys().copied().collect();
        let single = LinearSystem::new(
            vars.iter().map(|v| format!("v{v}")).collect(),
            vec![eq.coeffs.values().cloned().collect()],
            vec![eq.rhs.clone()],
        )?;
        let inner = method.solve(&single)?;
        ws.trace.absorb(&inner.trace);
        let gs = match inner.outcome {
            SolveOutcome::Solution(gs) => gs,
            SolveOutcome::NoSolution(ns) => {
                return Ok(ws.fail(NoSolution {
                    reason: format!("equation {done} after substitution: {}", ns.reason),
                    witness: ns.witness,
                }));
            }
        };
        let params: Vec<_> = (0..gs.num_params()).map(|_| ws.fresh(None)).collect();
        for (idx, &v) in vars.iter().enumerate() {
            let mut expr = Affine::constant(gs.offset()[idx].clone());
            for (c, &k) in gs.matrix()[idx].iter().zip(&params) {
                expr.add_term(k, c);
            }
            ws.bind(v, expr, None)?;
        }
        ws.check_against(sys)?;
    }
    ws.finish(sys)
}
