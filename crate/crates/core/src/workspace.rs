//! Shared bookkeeping for the elimination solvers.
//!
//! Every solver works on a set of integer equations over variables that are
//! either original unknowns or auxiliaries introduced along the way. Binding a
//! variable to an affine expression substitutes it eagerly into every equation
//! and every stored statement, so statements only ever mention live variables.

use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use crate::arith::{gcd_many, Integer};
use crate::error::SolveError;
use crate::model::{
    infeasibility_certificate, rational_rank, satisfies, GeneralSolution, LinearSystem, NoSolution, SolveOutcome,
    SolverTrace, Witness,
};

pub(crate) type VarId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub(crate) struct Affine {
    pub terms: BTreeMap<VarId, Integer>,
    pub constant: Integer,
}

impl Affine {
    pub fn var(v: VarId) -> Self {
        Affine {
            terms: BTreeMap::from([(v, Integer::one())]),
            constant: Integer::zero(),
        }
    }

    pub fn constant(c: Integer) -> Self {
        Affine {
            terms: BTreeMap::new(),
            constant: c,
        }
    }

    pub fn add_term(&mut self, v: VarId, c: &Integer) {
        add_into(&mut self.terms, v, c);
    }

    pub fn add_scaled(&mut self, other: &Affine, k: &Integer) {
        for (&v, c) in &other.terms {
            add_into(&mut self.terms, v, &(c * k));
        }
        self.constant += &other.constant * k;
    }

    pub fn scaled(&self, k: &Integer) -> Affine {
        let mut out = Affine::default();
        out.add_scaled(self, k);
        out
    }

    pub fn coeff(&self, v: VarId) -> Integer {
        self.terms.get(&v).cloned().unwrap_or_default()
    }

    fn substitute(&mut self, v: VarId, expr: &Affine) {
        if let Some(c) = self.terms.remove(&v) {
            self.add_scaled(expr, &c);
        }
    }
}

fn add_into(terms: &mut BTreeMap<VarId, Integer>, v: VarId, c: &Integer) {
    if c.is_zero() {
        return;
    }
    let entry = terms.entry(v).or_default();
    *entry += c;
    if entry.is_zero() {
        terms.remove(&v);
    }
}

/// `Σ coeffs[v]·v = rhs`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Equation {
    pub coeffs: BTreeMap<VarId, Integer>,
    pub rhs: Integer,
    /// The auxiliary this equation defines, for the fraction solvers.
    pub anchor: Option<VarId>,
}

impl Equation {
    pub fn new(coeffs: BTreeMap<VarId, Integer>, rhs: Integer) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Equation {
            coeffs,
            rhs,
            anchor: None,
        }
    }

    pub fn coeff(&self, v: VarId) -> Integer {
        self.coeffs.get(&v).cloned().unwrap_or_default()
    }

    fn substitute(&mut self, v: VarId, expr: &Affine) {
        if let Some(c) = self.coeffs.remove(&v) {
            for (&w, e) in &expr.terms {
                add_into(&mut self.coeffs, w, &(&c * e));
            }
            self.rhs -= &c * &expr.constant;
        }
    }

    fn negated_equals(&self, other: &Equation) -> bool {
        self.rhs == -&other.rhs
            && self.coeffs.len() == other.coeffs.len()
            && self
                .coeffs
                .iter()
                .all(|(v, c)| other.coeffs.get(v).is_some_and(|o| *o == -c))
    }
}

pub(crate) struct Workspace {
    slots: Vec<usize>,
    bound: Vec<bool>,
    next_slot: usize,
    /// One entry per original variable; `None` while it is still free.
    pub stmts: Vec<Option<Affine>>,
    pub eqs: Vec<Equation>,
    pub trace: SolverTrace,
    origin: LinearSystem,
}

impl Workspace {
    pub fn new(sys: &LinearSystem) -> Self {
        let n = sys.num_vars();
        let eqs: Vec<Equation> = sys
            .matrix()
            .iter()
            .zip(sys.rhs())
            .map(|(row, b)| Equation::new(row.iter().cloned().enumerate().collect(), b.clone()))
            .collect();
        let mut ws = Workspace {
            slots: (0..n).collect(),
            bound: vec![false; n],
            next_slot: n,
            stmts: vec![None; n],
            eqs,
            trace: SolverTrace::default(),
            origin: sys.clone(),
        };
        ws.observe_all();
        ws
    }

    pub fn num_original(&self) -> usize {
        self.stmts.len()
    }

    pub fn slot(&self, v: VarId) -> usize {
        self.slots[v]
    }

    /// A fresh auxiliary. With `heir_of`, it takes over that variable's slot
    /// for tie-breaking purposes.
    pub fn fresh(&mut self, heir_of: Option<VarId>) -> VarId {
        let slot = match heir_of {
            Some(v) => self.slots[v],
            None => {
                self.next_slot += 1;
                self.next_slot - 1
            }
        };
        self.slots.push(slot);
        self.bound.push(false);
        self.slots.len() - 1
    }

    /// Replaces `v` everywhere by `expr`. Equations anchored on `v` pass the
    /// anchor to `heir` when it survives in them.
    pub fn bind(&mut self, v: VarId, expr: Affine, heir: Option<VarId>) -> Result<(), SolveError> {
        if self.bound[v] {
            return Err(SolveError::Internal(format!("variable {v} bound twice")));
        }
        if expr.terms.contains_key(&v) {
            return Err(SolveError::Internal(format!(
                "variable {v} bound to an expression containing itself"
            )));
        }
        for eq in &mut self.eqs {
            eq.substitute(v, &expr);
            if eq.anchor == Some(v) {
                eq.anchor = heir.filter(|h| eq.coeffs.contains_key(h));
            }
        }
        for stmt in self.stmts.iter_mut().flatten() {
            stmt.substitute(v, &expr);
        }
        if v < self.stmts.len() {
            self.stmts[v] = Some(expr);
        }
        self.bound[v] = true;
        self.trace.substitutions += 1;
        self.observe_all();
        Ok(())
    }

    /// Removes equation `idx` and solves it for `v`, whose coefficient is ±1.
    pub fn extract(&mut self, idx: usize, v: VarId) -> Result<(), SolveError> {
        let eq = self.eqs.remove(idx);
        let c = eq.coeff(v);
        if !c.abs().is_one() {
            return Err(SolveError::Internal(format!(
                "extracting variable {v} with coefficient {c}"
            )));
        }
        // c = ±1, so 1/c = c
        let mut expr = Affine::constant(&eq.rhs * &c);
        for (&w, a) in &eq.coeffs {
            if w != v {
                expr.add_term(w, &-(a * &c));
            }
        }
        self.bind(v, expr, None)
    }

    /// First unit coefficient, scanning rows in order then slots.
    pub fn find_unit(&self) -> Option<(usize, VarId)> {
        self.eqs.iter().enumerate().find_map(|(i, eq)| {
            eq.coeffs
                .iter()
                .filter(|(_, c)| c.abs().is_one())
                .min_by_key(|(v, _)| self.slots[**v])
                .map(|(&v, _)| (i, v))
        })
    }

    /// Drops `0 = 0` rows, rejects `0 = c`, divides rows by their gcd and
    /// removes duplicates (also up to sign). The first copy of a row survives.
    pub fn preprocess(&mut self) -> Option<NoSolution> {
        let mut kept: Vec<Equation> = Vec::with_capacity(self.eqs.len());
        for (i, mut eq) in std::mem::take(&mut self.eqs).into_iter().enumerate() {
            if eq.coeffs.is_empty() {
                if eq.rhs.is_zero() {
                    continue;
                }
                return Some(NoSolution {
                    reason: format!("working equation {} reduces to 0 = {}", i + 1, eq.rhs),
                    witness: Witness::Contradiction { rhs: eq.rhs },
                });
            }
            let g = gcd_many(eq.coeffs.values());
            if !g.is_one() {
                if !(&eq.rhs % &g).is_zero() {
                    return Some(NoSolution {
                        reason: format!(
                            "working equation {}: coefficient gcd {} does not divide {}",
                            i + 1,
                            g,
                            eq.rhs
                        ),
                        witness: Witness::GcdDoesNotDivide {
                            gcd: g,
                            rhs: eq.rhs,
                        },
                    });
                }
                for c in eq.coeffs.values_mut() {
                    *c /= &g;
                }
                eq.rhs /= &g;
            }
            let dup = kept.iter().any(|k| {
                (k.coeffs == eq.coeffs && k.rhs == eq.rhs) || k.negated_equals(&eq)
            });
            if !dup {
                kept.push(eq);
            }
        }
        self.eqs = kept;
        None
    }

    fn observe_all(&mut self) {
        let mut peak = self.trace.peak_coeff.clone();
        let mut see = |x: &Integer| {
            if x.abs() > peak {
                peak = x.abs();
            }
        };
        for eq in &self.eqs {
            eq.coeffs.values().for_each(&mut see);
            see(&eq.rhs);
        }
        for s in self.stmts.iter().flatten() {
            s.terms.values().for_each(&mut see);
            see(&s.constant);
        }
        self.trace.peak_coeff = peak;
    }

    /// The original equations, rewritten through the statements, must follow
    /// rationally from the equations still open.
    pub fn check_against(&self, sys: &LinearSystem) -> Result<(), SolveError> {
        let width = self.slots.len() + 1;
        let row_of = |coeffs: &BTreeMap<VarId, Integer>, rhs: &Integer| {
            let mut row = vec![Integer::zero(); width];
            for (&v, c) in coeffs {
                row[v] = c.clone();
            }
            row[width - 1] = rhs.clone();
            row
        };
        let mut base: Vec<Vec<Integer>> =
            self.eqs.iter().map(|e| row_of(&e.coeffs, &e.rhs)).collect();
        let rank = rational_rank(&base);
        for (i, (a, b)) in sys.matrix().iter().zip(sys.rhs()).enumerate() {
            let mut form = Affine::default();
            for (j, c) in a.iter().enumerate() {
                match &self.stmts[j] {
                    Some(expr) => form.add_scaled(expr, c),
                    None => form.add_term(j, c),
                }
            }
            let rhs = b - &form.constant;
            if form.terms.is_empty() && rhs.is_zero() {
                continue;
            }
            base.push(row_of(&form.terms, &rhs));
            let implied = rational_rank(&base) == rank;
            base.pop();
            if !implied {
                return Err(SolveError::Internal(format!(
                    "original equation {} is no longer implied by the working system",
                    i + 1
                )));
            }
        }
        Ok(())
    }

    /// Assembles the lattice once every equation has been eliminated. Live
    /// variables become k1..kp, originals first, then auxiliaries in creation
    /// order.
    pub fn finish(self, sys: &LinearSystem) -> Result<Solved, SolveError> {
        if !self.eqs.is_empty() {
            return Err(SolveError::Internal("finishing with open equations".into()));
        }
        let n = self.num_original();
        let mut used = vec![false; self.slots.len()];
        for (j, s) in self.stmts.iter().enumerate() {
            match s {
                Some(expr) => expr.terms.keys().for_each(|&v| used[v] = true),
                None => used[j] = true,
            }
        }
        let live: Vec<VarId> = (0..self.slots.len())
            .filter(|&v| used[v] && !self.bound[v])
            .collect();
        let mut c = Vec::with_capacity(n);
        let mut d = Vec::with_capacity(n);
        for (j, s) in self.stmts.iter().enumerate() {
            let expr = s.clone().unwrap_or_else(|| Affine::var(j));
            c.push(live.iter().map(|&v| expr.coeff(v)).collect());
            d.push(expr.constant);
        }
        let gs = GeneralSolution::new(sys.vars().to_vec(), c, d)?;
        if !satisfies(sys, &gs)? {
            return Err(SolveError::Internal(
                "assembled lattice does not satisfy the system".into(),
            ));
        }
        Ok(Solved {
            outcome: SolveOutcome::Solution(gs),
            trace: self.trace,
        })
    }

    /// Gives up. A witness found on a working equation only speaks about that
    /// equation, so it is swapped for a certificate against the input.
    pub fn fail(self, mut ns: NoSolution) -> Solved {
        if !ns.witness.holds_for(&self.origin) {
            if let Some(w) = infeasibility_certificate(&self.origin) {
                ns.witness = w;
            }
        }
        Solved {
            outcome: SolveOutcome::NoSolution(ns),
            trace: self.trace,
        }
    }
}

/// A solver's verdict together with its run statistics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solved {
    pub outcome: SolveOutcome,
    pub trace: SolverTrace,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    #[test]
    fn preprocess_divides_and_drops() {
        let sys = LinearSystem::from_i64(
            &[&[12, -7, 9, 0], &[0, -5, 8, 10], &[0, 0, 0, 0], &[15, 0, 21, 69], &[-12, 7, -9, 0]],
            &[12, 0, 0, 3, -12],
        )
        .unwrap();
        let mut ws = Workspace::new(&sys);
        assert!(ws.preprocess().is_none());
        assert_eq!(ws.eqs.len(), 3);
        let last = &ws.eqs[2];
        assert_eq!(last.coeff(0), int(5));
        assert_eq!(last.coeff(2), int(7));
        assert_eq!(last.coeff(3), int(23));
        assert_eq!(last.rhs, int(1));
    }

    #[test]
    fn preprocess_reports_contradiction() {
        let sys = LinearSystem::from_i64(&[&[0, 0]], &[5]).unwrap();
        let mut ws = Workspace::new(&sys);
        let ns = ws.preprocess().unwrap();
        assert_eq!(ns.witness, Witness::Contradiction { rhs: int(5) });
    }

    #[test]
    fn bind_substitutes_everywhere() {
        let sys = LinearSystem::from_i64(&[&[1, 2, 3]], &[4]).unwrap();
        let mut ws = Workspace::new(&sys);
        let t = ws.fresh(Some(1));
        assert_eq!(ws.slot(t), 1);
        let mut e = Affine::var(t);
        e.add_term(2, &int(-1));
        e.constant = int(1);
        ws.bind(1, e, None).unwrap();
        // x + 2(t - z + 1) + 3z = 4  ->  x + 2t + z = 2
        let eq = &ws.eqs[0];
        assert_eq!(eq.coeff(t), int(2));
        assert_eq!(eq.coeff(2), int(1));
        assert_eq!(eq.rhs, int(2));
        ws.check_against(&sys).unwrap();
        ws.extract(0, 0).unwrap();
        assert_eq!(ws.trace.substitutions, 2);
        let solved = ws.finish(&sys).unwrap();
        assert_eq!(solved.outcome.solution().unwrap().num_params(), 2);
    }
}
