//! Independent checks of solver output: exact verification, lattice
//! membership, brute-force enumeration over a box, and structural tests.
//!
//! Generality cannot be decided by enumeration, so it is checked relative to
//! a box `[-B, B]^n`: every integer solution inside the box must be reachable
//! with integer parameters. Two lattices count as equivalent when they have
//! the same parameter count and both pass that check.

use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::arith::{gcd_many, Integer};
use crate::model::{
    column_gcds, dot, independent_rows, rational_rank, satisfies, GeneralSolution, LinearSystem,
    ModelError,
};
use crate::sys::feasibility_determinant as determinant;

pub const DEFAULT_ENUM_BUDGET: u128 = 10_000_000;
pub const ENUM_BUDGET_VAR: &str = "DIOPH_ENUM_BUDGET";
pub const DEFAULT_BOX: u32 = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("box enumeration needs {needed} candidate points, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u128 },
    #[error("box radius must be positive")]
    EmptyBox,
}

/// The enumeration cap: `DIOPH_ENUM_BUDGET` if set and valid, else 10^7.
pub fn enum_budget() -> u128 {
    std::env::var(ENUM_BUDGET_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_ENUM_BUDGET)
}

/// `A·x = b` exactly.
pub fn verify_particular(sys: &LinearSystem, x: &[Integer]) -> Result<bool, ModelError> {
    Ok(sys.residual(x)?.iter().all(Zero::is_zero))
}

/// `A·C = 0` and `A·d = b`, which by linearity is the same as every parameter
/// choice giving a solution.
pub fn verify_symbolic(sys: &LinearSystem, gs: &GeneralSolution) -> Result<bool, ModelError> {
    satisfies(sys, gs)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Membership {
    Member(Vec<Integer>),
    NotRepresentable,
}

/// Solves `C·k = x - d` through a fixed nonsingular `p×p` block of `C`.
pub struct MembershipSolver<'a> {
    gs: &'a GeneralSolution,
    rows: Vec<usize>,
    adjugate: Vec<Vec<Integer>>,
    det: Integer,
}

impl<'a> MembershipSolver<'a> {
    pub fn new(gs: &'a GeneralSolution) -> Self {
        let rows = independent_rows(gs.matrix());
        let block: Vec<Vec<Integer>> = rows.iter().map(|&r| gs.matrix()[r].clone()).collect();
        let p = gs.num_params();
        let det = determinant(block.clone());
        // adj(S)[i][j] = (-1)^(i+j) · minor(S without row j, column i)
        let adjugate = (0..p)
            .map(|i| {
                (0..p)
                    .map(|j| {
                        let minor: Vec<Vec<Integer>> = block
                            .iter()
                            .enumerate()
                            .filter(|(r, _)| *r != j)
                            .map(|(_, row)| {
                                row.iter()
                                    .enumerate()
                                    .filter(|(c, _)| *c != i)
                                    .map(|(_, v)| v.clone())
                                    .collect()
                            })
                            .collect();
                        let m = determinant(minor);
                        if (i + j) % 2 == 0 {
                            m
                        } else {
                            -m
                        }
                    })
                    .collect()
            })
            .collect();
        MembershipSolver {
            gs,
            rows,
            adjugate,
            det,
        }
    }

    pub fn solve(&self, x: &[Integer]) -> Result<Membership, ModelError> {
        if x.len() != self.gs.num_vars() {
            return Err(ModelError::Dimension(format!(
                "point has {} entries, lattice has {} variables",
                x.len(),
                self.gs.num_vars()
            )));
        }
        let v: Vec<Integer> = self
            .rows
            .iter()
            .map(|&r| &x[r] - &self.gs.offset()[r])
            .collect();
        let mut k = Vec::with_capacity(self.adjugate.len());
        for row in &self.adjugate {
            let num = dot(row, &v);
            if !(&num % &self.det).is_zero() {
                return Ok(Membership::NotRepresentable);
            }
            k.push(num / &self.det);
        }
        // the block fixes k; the other rows must agree with it
        if self.gs.substitute(&k)? == x {
            Ok(Membership::Member(k))
        } else {
            Ok(Membership::NotRepresentable)
        }
    }
}

/// The integer parameters reaching `x`, if there are any.
pub fn membership(gs: &GeneralSolution, x: &[Integer]) -> Result<Membership, ModelError> {
    MembershipSolver::new(gs).solve(x)
}

fn candidate_count(n: usize, bound: u32) -> Option<u128> {
    let side = 2 * u128::from(bound) + 1;
    (0..n).try_fold(1u128, |acc, _| acc.checked_mul(side))
}

/// All `x ∈ [-B, B]^n` with `A·x = b`, lexicographically ordered.
pub fn brute_particulars(sys: &LinearSystem, bound: u32) -> Result<Vec<Vec<Integer>>, OracleError> {
    brute_particulars_with_budget(sys, bound, enum_budget())
}

pub fn brute_particulars_with_budget(
    sys: &LinearSystem,
    bound: u32,
    budget: u128,
) -> Result<Vec<Vec<Integer>>, OracleError> {
    if bound == 0 {
        return Err(OracleError::EmptyBox);
    }
    let n = sys.num_vars();
    match candidate_count(n, bound) {
        Some(c) if c <= budget => {}
        Some(c) => {
            return Err(OracleError::BudgetExceeded {
                needed: c.to_string(),
                budget,
            })
        }
        None => {
            return Err(OracleError::BudgetExceeded {
                needed: format!("(2*{bound}+1)^{n}"),
                budget,
            })
        }
    }
    let b = i64::from(bound);
    // shard on the first coordinate; shards are concatenated in order
    let shards: Vec<Vec<Vec<i64>>> = (-b..=b)
        .into_par_iter()
        .map(|x0| match small_system(sys, bound) {
            Some(small) => enumerate_small(&small, x0, b),
            None => enumerate_big(sys, x0, b),
        })
        .collect();
    Ok(shards
        .into_iter()
        .flatten()
        .map(|x| x.into_iter().map(Integer::from).collect())
        .collect())
}

struct Small {
    cols: Vec<Vec<i128>>,
    rhs: Vec<i128>,
}

/// i128 copy of the system when no residual in the box can overflow.
fn small_system(sys: &LinearSystem, bound: u32) -> Option<Small> {
    let limit = Integer::one() << 100;
    let b = Integer::from(bound);
    for (row, rhs) in sys.matrix().iter().zip(sys.rhs()) {
        let worst: Integer = row.iter().map(|a| a.abs() * &b).sum::<Integer>() + rhs.abs();
        if worst >= limit {
            return None;
        }
    }
    let n = sys.num_vars();
    let cols = (0..n)
        .map(|j| sys.matrix().iter().map(|r| r[j].to_i128().unwrap()).collect())
        .collect();
    let rhs = sys.rhs().iter().map(|v| v.to_i128().unwrap()).collect();
    Some(Small { cols, rhs })
}

/// Odometer with the last coordinate fastest; residuals updated per step.
fn enumerate_small(s: &Small, x0: i64, b: i64) -> Vec<Vec<i64>> {
    let n = s.cols.len();
    let mut x = vec![-b; n];
    x[0] = x0;
    let mut res: Vec<i128> = s.rhs.iter().map(|v| -v).collect();
    for (j, col) in s.cols.iter().enumerate() {
        for (r, a) in res.iter_mut().zip(col) {
            *r += a * i128::from(x[j]);
        }
    }
    let span = 2 * i128::from(b);
    let mut out = Vec::new();
    loop {
        if res.iter().all(|r| *r == 0) {
            out.push(x.clone());
        }
        let mut j = n;
        loop {
            if j == 1 {
                return out;
            }
            j -= 1;
            if x[j] < b {
                x[j] += 1;
                for (r, a) in res.iter_mut().zip(&s.cols[j]) {
                    *r += a;
                }
                break;
            }
            x[j] = -b;
            for (r, a) in res.iter_mut().zip(&s.cols[j]) {
                *r -= a * span;
            }
        }
    }
}

fn enumerate_big(sys: &LinearSystem, x0: i64, b: i64) -> Vec<Vec<i64>> {
    let n = sys.num_vars();
    let mut x = vec![-b; n];
    x[0] = x0;
    let mut out = Vec::new();
    loop {
        let point: Vec<Integer> = x.iter().map(|&v| Integer::from(v)).collect();
        if sys.residual(&point).map(|r| r.iter().all(Zero::is_zero)).unwrap_or(false) {
            out.push(x.clone());
        }
        let mut j = n;
        loop {
            if j == 1 {
                return out;
            }
            j -= 1;
            if x[j] < b {
                x[j] += 1;
                break;
            }
            x[j] = -b;
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generality {
    /// Every in-box solution has integer parameters.
    General,
    /// An in-box solution the lattice misses.
    Counterexample(Vec<Integer>),
    /// The lattice does not even solve the system.
    NotASolution,
}

/// Checks coverage of the given particular solutions.
pub fn general_on_points(
    sys: &LinearSystem,
    gs: &GeneralSolution,
    points: &[Vec<Integer>],
) -> Result<Generality, OracleError> {
    if !verify_symbolic(sys, gs)? {
        return Ok(Generality::NotASolution);
    }
    let solver = MembershipSolver::new(gs);
    for x in points {
        if solver.solve(x)? == Membership::NotRepresentable {
            return Ok(Generality::Counterexample(x.clone()));
        }
    }
    Ok(Generality::General)
}

/// Every solution in `[-B, B]^n` is reachable from `gs`.
pub fn is_general_on_box(
    sys: &LinearSystem,
    gs: &GeneralSolution,
    bound: u32,
) -> Result<Generality, OracleError> {
    if !verify_symbolic(sys, gs)? {
        return Ok(Generality::NotASolution);
    }
    general_on_points(sys, gs, &brute_particulars(sys, bound)?)
}

/// Equal parameter counts and both general on the box.
pub fn equivalent_on_box(
    sys: &LinearSystem,
    a: &GeneralSolution,
    b: &GeneralSolution,
    bound: u32,
) -> Result<bool, OracleError> {
    if a.num_params() != b.num_params() {
        return Ok(false);
    }
    if !verify_symbolic(sys, a)? || !verify_symbolic(sys, b)? {
        return Ok(false);
    }
    let points = brute_particulars(sys, bound)?;
    Ok(general_on_points(sys, a, &points)? == Generality::General
        && general_on_points(sys, b, &points)? == Generality::General)
}

/// Generality on the box `d + [-B, B]^n` around the lattice's own offset.
///
/// A box at the origin can miss every solution when `d` is far out; this one
/// always contains `d` and the kernel points near it.
pub fn is_general_near_offset(
    sys: &LinearSystem,
    gs: &GeneralSolution,
    bound: u32,
) -> Result<Generality, OracleError> {
    if !verify_symbolic(sys, gs)? {
        return Ok(Generality::NotASolution);
    }
    let hom = GeneralSolution::new(
        gs.vars().to_vec(),
        gs.matrix().to_vec(),
        vec![Integer::zero(); gs.num_vars()],
    )?;
    Ok(match is_general_on_box(&sys.homogeneous(), &hom, bound)? {
        Generality::Counterexample(y) => {
            Generality::Counterexample(y.iter().zip(gs.offset()).map(|(a, b)| a + b).collect())
        }
        other => other,
    })
}

/// Exact equality of two lattices: each one's offset and offset-plus-column
/// points lie in the other.
pub fn same_lattice(a: &GeneralSolution, b: &GeneralSolution) -> Result<bool, ModelError> {
    if a.num_vars() != b.num_vars() || a.num_params() != b.num_params() {
        return Ok(false);
    }
    let contains = |outer: &GeneralSolution, inner: &GeneralSolution| -> Result<bool, ModelError> {
        let solver = MembershipSolver::new(outer);
        if solver.solve(inner.offset())? == Membership::NotRepresentable {
            return Ok(false);
        }
        for j in 0..inner.num_params() {
            let x: Vec<Integer> = inner
                .column(j)
                .iter()
                .zip(inner.offset())
                .map(|(c, d)| c + d)
                .collect();
            if solver.solve(&x)? == Membership::NotRepresentable {
                return Ok(false);
            }
        }
        Ok(true)
    };
    Ok(contains(a, b)? && contains(b, a)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub checks: Vec<CheckResult>,
}

impl StructureReport {
    /// No check failed (inapplicable checks do not count against).
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }
}

fn fmt_ints(xs: &[Integer]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

fn row_gcds(gs: &GeneralSolution) -> Vec<Integer> {
    gs.matrix().iter().map(gcd_many).collect()
}

/// gcd of `row` with entry `skip` left out.
fn gcd_without(row: &[Integer], skip: usize) -> Integer {
    gcd_many(row.iter().enumerate().filter(|(j, _)| *j != skip).map(|(_, v)| v))
}

/// Necessary conditions every general solution meets:
/// 1. `rank C = p = n - rank A`;
/// 2. homogeneous systems: `d = 0` and every column of `C` has gcd 1;
/// 3. a homogeneous equation with coprime coefficients: the gcd of row `i`
///    of `C` equals the gcd of the coefficients other than `a_i`.
///
/// Passing all three does not make a solution general.
pub fn structure_checks(sys: &LinearSystem, gs: &GeneralSolution) -> StructureReport {
    let mut checks = Vec::new();

    let rank_c = rational_rank(gs.matrix());
    let rank_a = rational_rank(sys.matrix());
    let p = gs.num_params();
    let expected = sys.num_vars().saturating_sub(rank_a);
    let ok = rank_c == p && p == expected;
    checks.push(CheckResult {
        name: "parameter count",
        status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
        detail: format!("rank C = {rank_c}, p = {p}, n - rank A = {expected}"),
    });

    if sys.is_homogeneous() {
        let gcds = column_gcds(gs);
        let zero_d = gs.offset().iter().all(Zero::is_zero);
        let unit = gcds.iter().all(One::is_one);
        checks.push(CheckResult {
            name: "standard form",
            status: if zero_d && unit { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: format!("d = {}, column gcds {}", fmt_ints(gs.offset()), fmt_ints(&gcds)),
        });
    } else {
        checks.push(CheckResult {
            name: "standard form",
            status: CheckStatus::NotApplicable,
            detail: "system is not homogeneous".into(),
        });
    }

    let single = sys.num_equations() == 1
        && sys.is_homogeneous()
        && gcd_many(&sys.matrix()[0]).is_one();
    if single {
        let a = &sys.matrix()[0];
        let want: Vec<Integer> = (0..a.len()).map(|i| gcd_without(a, i)).collect();
        let got = row_gcds(gs);
        checks.push(CheckResult {
            name: "row gcds",
            status: if want == got { CheckStatus::Pass } else { CheckStatus::Fail },
            detail: format!("row gcds {} against {}", fmt_ints(&got), fmt_ints(&want)),
        });
    } else {
        checks.push(CheckResult {
            name: "row gcds",
            status: CheckStatus::NotApplicable,
            detail: "needs one homogeneous equation with coprime coefficients".into(),
        });
    }
    StructureReport { checks }
}

/// For every equation `h` with coprime coefficients and every variable `i`,
/// the gcd of `a_h` without `a_{hi}` divides the gcd of row `i` of `C`.
pub fn row_divisibility(sys: &LinearSystem, gs: &GeneralSolution) -> CheckResult {
    let got = row_gcds(gs);
    let mut relevant = false;
    for (h, row) in sys.matrix().iter().enumerate() {
        if !gcd_many(row).is_one() {
            continue;
        }
        relevant = true;
        for (i, g) in got.iter().enumerate() {
            let d = gcd_without(row, i);
            let divides = if d.is_zero() { g.is_zero() } else { (g % &d).is_zero() };
            if !divides {
                return CheckResult {
                    name: "row divisibility",
                    status: CheckStatus::Fail,
                    detail: format!(
                        "equation {}: {} does not divide row {} gcd {}",
                        h + 1,
                        d,
                        i + 1,
                        g
                    ),
                };
            }
        }
    }
    CheckResult {
        name: "row divisibility",
        status: if relevant { CheckStatus::Pass } else { CheckStatus::NotApplicable },
        detail: format!("row gcds {}", fmt_ints(&got)),
    }
}
