use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use super::gcd::{gcd_test, internal};
use super::{require_single, trivial};
use crate::arith::{exact_div, least_abs_residue, Integer};
use crate::error::SolveError;
use crate::model::LinearSystem;
use crate::workspace::{Affine, Solved, VarId, Workspace};

/// Solves `a·x = b` by descent on least residues between coefficient pairs.
///
/// Each round looks at every ordered pair `(i, j)` with `a_j ∤ a_i` and takes
/// the smallest `|r|`, `r ≡ a_i (mod a_j)`, breaking ties on `(i, j)`. For
/// `|r| > 1` it substitutes `x_j = t - ((a_i - r)/a_j)·x_i`, which puts `r`
/// in front of `x_i`. For `|r| = 1` the pair is solved in closed form.
pub fn solve_eq_congruence(eq: &LinearSystem) -> Result<Solved, SolveError> {
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
    if let Some((_, v)) = ws.find_unit() {
        ws.trace.round(Integer::one());
        ws.extract(0, v)?;
        return ws.finish(eq);
    }
    loop {
        let (i, j, r) = best_pair(&ws)?;
        ws.trace.round(r.abs());
        let row = ws.eqs[0].clone();
        let (ai, aj) = (row.coeff(i), row.coeff(j));
        let m = exact_div(&(&ai - &r), &aj)
            .ok_or_else(|| SolveError::Internal("residue does not reconstruct".into()))?;
        if r.abs().is_one() {
            close_pair(&mut ws, i, j, &r, &m)?;
            break;
        }
        let t = ws.fresh(Some(j));
        let mut expr = Affine::var(t);
        expr.add_term(i, &-m);
        ws.bind(j, expr, None)?;
    }
    ws.finish(eq)
}

/// Sort key, the pair, and the residue.
type PairChoice = ((Integer, usize, usize), VarId, VarId, Integer);

fn best_pair(ws: &Workspace) -> Result<(VarId, VarId, Integer), SolveError> {
    let row = &ws.eqs[0];
    let mut best: Option<PairChoice> = None;
    for (&i, ai) in &row.coeffs {
        for (&j, aj) in &row.coeffs {
            if i == j || ai.is_multiple_of(aj) {
                continue;
            }
            let r = least_abs_residue(ai, aj).map_err(internal)?;
            let key = (r.abs(), ws.slot(i), ws.slot(j));
            if best.as_ref().is_none_or(|(k, ..)| key < *k) {
                best = Some((key, i, j, r));
            }
        }
    }
    best.map(|(_, i, j, r)| (i, j, r))
        .ok_or_else(|| SolveError::Internal("no coefficient pair left to reduce".into()))
}

/// With `a_i = M·a_j + r`, `r = ±1`, and `S = Σ a_s x_s` over the others:
/// `x_i = r(-a_j t - S + b)`, `x_j = r(a_i t + M S - M b)`.
fn close_pair(
    ws: &mut Workspace,
    i: VarId,
    j: VarId,
    r: &Integer,
    m: &Integer,
) -> Result<(), SolveError> {
    let row = ws.eqs.remove(0);
    let (ai, aj) = (row.coeff(i), row.coeff(j));
    let mut rest = Affine::constant(-row.rhs.clone());
    for (&s, a) in &row.coeffs {
        if s != i && s != j {
            rest.add_term(s, a);
        }
    }
    let t = ws.fresh(None);
    let mut xi = rest.scaled(&-r);
    xi.add_term(t, &-(r * &aj));
    let mut xj = rest.scaled(&(r * m));
    xj.add_term(t, &(r * &ai));

    // a_i X_i + a_j X_j + S - b must vanish identically
    let mut check = rest.clone();
    check.add_scaled(&xi, &ai);
    check.add_scaled(&xj, &aj);
    if !check.terms.is_empty() || !check.constant.is_zero() {
        return Err(SolveError::Internal(format!(
            "two-variable closed form leaves residue {check:?}"
        )));
    }
    ws.bind(i, xi, None)?;
    ws.bind(j, xj, None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::model::{SolveOutcome, Witness};

    #[test]
    fn example_equation_takes_two_rounds() {
        let eq = LinearSystem::with_names_i64(
            vec!["x".into(), "y".into(), "z".into()],
            &[&[17, -7, 10]],
            &[-12],
        )
        .unwrap();
        let solved = solve_eq_congruence(&eq).unwrap();
        let gs = solved.outcome.solution().unwrap();
        assert_eq!(gs.num_params(), 2);
        assert_eq!(solved.trace.iterations, 2);
        assert_eq!(solved.trace.descent, vec![int(3), int(1)]);
    }

    #[test]
    fn unit_coefficient_uses_closed_form() {
        let eq = LinearSystem::from_i64(&[&[4, -1, 6]], &[3]).unwrap();
        let solved = solve_eq_congruence(&eq).unwrap();
        assert_eq!(solved.trace.iterations, 1);
        let gs = solved.outcome.solution().unwrap();
        // x2 = 4x1 + 6x3 - 3
        assert_eq!(gs.offset(), &[int(0), int(-3), int(0)]);
        assert_eq!(gs.matrix()[1], vec![int(4), int(6)]);
    }

    #[test]
    fn gcd_failure() {
        let eq = LinearSystem::from_i64(&[&[4, 6]], &[3]).unwrap();
        match solve_eq_congruence(&eq).unwrap().outcome {
            SolveOutcome::NoSolution(ns) => assert_eq!(
                ns.witness,
                Witness::GcdDoesNotDivide { gcd: int(2), rhs: int(3) }
            ),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn two_variable_bezout() {
        let eq = LinearSystem::from_i64(&[&[3, 5]], &[1]).unwrap();
        let gs = solve_eq_congruence(&eq).unwrap().outcome.solution().cloned().unwrap();
        assert_eq!(gs.num_params(), 1);
        // generator of the kernel is ±(5, -3)
        let col = gs.column(0);
        assert!(col == vec![int(5), int(-3)] || col == vec![int(-5), int(3)]);
    }
}
