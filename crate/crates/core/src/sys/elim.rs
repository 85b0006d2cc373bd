use num_integer::Integer as _;
use num_traits::{Signed, One};

use crate::arith::{exact_div, least_abs_residue, Integer};
use crate::error::SolveError;
use crate::model::LinearSystem;
use crate::workspace::{Affine, Solved, VarId, Workspace};

/// Elimination by unit coefficients and least cross-coefficient residues.
///
/// Each round preprocesses the rows. A coefficient ±1 is solved for directly.
/// Otherwise the smallest residue `r ≡ a_{i,j1} (mod a_{i,j2})` over all rows
/// and ordered pairs is taken and `x_{j2} = t - ((a_{i,j1} - r)/a_{i,j2})·x_{j1}`
/// is substituted. When `|r| = 1` the row is then solved for `x_{j1}`.
pub fn solve_sys_elim(sys: &LinearSystem) -> Result<Solved, SolveError> {
    let mut ws = Workspace::new(sys);
    loop {
        if let Some(ns) = ws.preprocess() {
            return Ok(ws.fail(ns));
        }
        if ws.eqs.is_empty() {
            break;
        }
        ws.check_against(sys)?;
        if let Some((row, v)) = ws.find_unit() {
            ws.trace.round(Integer::one());
            ws.extract(row, v)?;
            continue;
        }
        let (row, j1, j2, r) = min_residue(&ws)?;
        ws.trace.round(r.abs());
        substitute_residue(&mut ws, row, j1, j2, &r, false)?;
        if r.abs().is_one() {
            ws.extract(row, j1)?;
        }
    }
    ws.finish(sys)
}

type ResidueChoice = ((Integer, usize, usize, usize), VarId, VarId, Integer);

/// Smallest `(|r|, row, slot j1, slot j2)` over all rows.
pub(super) fn min_residue(ws: &Workspace) -> Result<(usize, VarId, VarId, Integer), SolveError> {
    let mut best: Option<ResidueChoice> = None;
    for (i, eq) in ws.eqs.iter().enumerate() {
        for (&j1, a1) in &eq.coeffs {
            for (&j2, a2) in &eq.coeffs {
                if j1 == j2 || a1.is_multiple_of(a2) {
                    continue;
                }
                let r = least_abs_residue(a1, a2)
                    .map_err(|e| SolveError::Internal(e.to_string()))?;
                let key = (r.abs(), i, ws.slot(j1), ws.slot(j2));
                if best.as_ref().is_none_or(|(k, ..)| key < *k) {
                    best = Some((key, j1, j2, r));
                }
            }
        }
    }
    best.map(|((_, i, _, _), j1, j2, r)| (i, j1, j2, r))
        .ok_or_else(|| SolveError::Internal("no reducible coefficient pair".into()))
}

/// Binds `x_{j2} = t - M·x_{j1}`; `t` takes over `j2`'s slot and, with
/// `pass_anchor`, any anchor held by `x_{j2}`.
pub(super) fn substitute_residue(
    ws: &mut Workspace,
    row: usize,
    j1: VarId,
    j2: VarId,
    r: &Integer,
    pass_anchor: bool,
) -> Result<VarId, SolveError> {
    let eq = &ws.eqs[row];
    let m = exact_div(&(eq.coeff(j1) - r), &eq.coeff(j2))
        .ok_or_else(|| SolveError::Internal("residue does not reconstruct".into()))?;
    let t = ws.fresh(Some(j2));
    let mut expr = Affine::var(t);
    expr.add_term(j1, &-m);
    ws.bind(j2, expr, pass_anchor.then_some(t))?;
    Ok(t)
}
