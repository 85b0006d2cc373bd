use num_traits::{One, Signed};

use crate::arith::{div_floor, Integer};
use crate::error::SolveError;
use crate::model::LinearSystem;
use crate::workspace::{Affine, Solved, VarId, Workspace};

/// Elimination around the globally smallest coefficient.
///
/// Each round preprocesses, then picks the least `|a_ij|` (first row, then
/// lowest slot). A unit pivot is solved for. Otherwise the pivot row is
/// floor-divided by the pivot and `x_{j0} = -Σ q_j x_j + q + t` is substituted,
/// leaving `p·t + Σ r_j x_j = r` with `0 <= r_j < |p|`.
pub fn solve_sys_modpivot(sys: &LinearSystem) -> Result<Solved, SolveError> {
    let mut ws = Workspace::new(sys);
    loop {
        if let Some(ns) = ws.preprocess() {
            return Ok(ws.fail(ns));
        }
        if ws.eqs.is_empty() {
            break;
        }
        ws.check_against(sys)?;
        let (row, v, a) = min_pivot(&ws)?;
        ws.trace.round(a.abs());
        if a.abs().is_one() {
            ws.extract(row, v)?;
        } else {
            floor_step(&mut ws, row, v, false)?;
        }
    }
    ws.finish(sys)
}

/// Least `|a_ij|` with ties broken by row, then slot.
pub(super) fn min_pivot(ws: &Workspace) -> Result<(usize, VarId, Integer), SolveError> {
    ws.eqs
        .iter()
        .enumerate()
        .flat_map(|(i, eq)| eq.coeffs.iter().map(move |(&v, c)| (i, v, c)))
        .min_by_key(|&(i, v, c)| (c.abs(), i, ws.slot(v)))
        .map(|(i, v, c)| (i, v, c.clone()))
        .ok_or_else(|| SolveError::Internal("no coefficient to pivot on".into()))
}

/// Floor-divides row `row` by the coefficient of `pivot` and substitutes
/// `pivot = -Σ q_j x_j + q + t`.
pub(super) fn floor_step(
    ws: &mut Workspace,
    row: usize,
    pivot: VarId,
    pass_anchor: bool,
) -> Result<VarId, SolveError> {
    let eq = ws.eqs[row].clone();
    let p = eq.coeff(pivot);
    let floor = |x: &Integer| div_floor(x, &p).map_err(|e| SolveError::Internal(e.to_string()));
    let mut expr = Affine::default();
    for (&v, c) in &eq.coeffs {
        if v != pivot {
            let (q, _) = floor(c)?;
            expr.add_term(v, &-q);
        }
    }
    expr.constant = floor(&eq.rhs)?.0;
    let t = ws.fresh(Some(pivot));
    expr.add_term(t, &Integer::one());
    ws.bind(pivot, expr, pass_anchor.then_some(t))?;
    Ok(t)
}
