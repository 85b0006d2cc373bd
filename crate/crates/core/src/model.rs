//! Equations, systems, solution lattices, and exact rational elimination.

use std::collections::HashSet;
use std::fmt;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::{gcd_many, Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("a system needs at least one equation and one variable")]
    Empty,
    #[error("row {row} has {found} coefficients, expected {expected}")]
    RaggedRow {
        row: usize,
        found: usize,
        expected: usize,
    },
    #[error("right-hand side has {found} entries, expected {expected}")]
    RhsLength { found: usize, expected: usize },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("the parameter columns are linearly dependent (rank {rank} < {p})")]
    DependentColumns { rank: usize, p: usize },
    #[error("homogeneous part must have a zero offset")]
    NonzeroOffset,
}

/// `A·x = b` over the integers. A single equation is the one-row case.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystem {
    vars: Vec<String>,
    a: Vec<Vec<Integer>>,
    b: Vec<Integer>,
}

impl LinearSystem {
    pub fn new(
        vars: Vec<String>,
        a: Vec<Vec<Integer>>,
        b: Vec<Integer>,
    ) -> Result<Self, ModelError> {
        let n = vars.len();
        if n == 0 || a.is_empty() {
            return Err(ModelError::Empty);
        }
        check_unique(&vars)?;
        for (row, coeffs) in a.iter().enumerate() {
            if coeffs.len() != n {
                return Err(ModelError::RaggedRow {
                    row,
                    found: coeffs.len(),
                    expected: n,
                });
            }
        }
        if b.len() != a.len() {
            return Err(ModelError::RhsLength {
                found: b.len(),
                expected: a.len(),
            });
        }
        Ok(LinearSystem { vars, a, b })
    }

    /// Builds a system with variables named `x1..xn`.
    pub fn from_i64(a: &[&[i64]], b: &[i64]) -> Result<Self, ModelError> {
        let n = a.first().map_or(0, |r| r.len());
        let vars = (1..=n).map(|i| format!("x{i}")).collect();
        Self::with_names_i64(vars, a, b)
    }

    pub fn with_names_i64(
        vars: Vec<String>,
        a: &[&[i64]],
        b: &[i64],
    ) -> Result<Self, ModelError> {
        let a = a
            .iter()
            .map(|r| r.iter().map(|&v| Integer::from(v)).collect())
            .collect();
        let b = b.iter().map(|&v| Integer::from(v)).collect();
        Self::new(vars, a, b)
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn matrix(&self) -> &[Vec<Integer>] {
        &self.a
    }

    pub fn rhs(&self) -> &[Integer] {
        &self.b
    }

    pub fn num_equations(&self) -> usize {
        self.a.len()
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.b.iter().all(Zero::is_zero)
    }

    /// Residual `A·x - b`.
    pub fn residual(&self, x: &[Integer]) -> Result<Vec<Integer>, ModelError> {
        if x.len() != self.num_vars() {
            return Err(ModelError::Dimension(format!(
                "point has {} entries, system has {} variables",
                x.len(),
                self.num_vars()
            )));
        }
        Ok(self
            .a
            .iter()
            .zip(&self.b)
            .map(|(row, b)| dot(row, x) - b)
            .collect())
    }

    /// The same equations with rows restricted to `rows`.
    pub fn select_rows(&self, rows: &[usize]) -> Result<Self, ModelError> {
        Self::new(
            self.vars.clone(),
            rows.iter().map(|&r| self.a[r].clone()).collect(),
            rows.iter().map(|&r| self.b[r].clone()).collect(),
        )
    }

    /// Homogeneous counterpart `A·x = 0`.
    pub fn homogeneous(&self) -> Self {
        LinearSystem {
            vars: self.vars.clone(),
            a: self.a.clone(),
            b: vec![Integer::zero(); self.a.len()],
        }
    }
}

impl LinearSystem {
    /// Columns written out per row. Zero terms are skipped unless the row is
    /// all zero or they are needed so that the parser meets the variables in
    /// their original order.
    fn printed_columns(&self) -> Vec<Vec<usize>> {
        let n = self.num_vars();
        let silent: Vec<bool> = (0..n)
            .map(|j| self.a.iter().all(|r| r[j].is_zero()))
            .collect();
        let sparse: Vec<Vec<usize>> = self
            .a
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let all_zero = row.iter().all(Zero::is_zero);
                (0..n)
                    .filter(|&j| !row[j].is_zero() || all_zero || (i == 0 && silent[j]))
                    .collect()
            })
            .collect();
        let mut seen = vec![false; n];
        let mut order = Vec::with_capacity(n);
        for &j in sparse.iter().flatten() {
            if !seen[j] {
                seen[j] = true;
                order.push(j);
            }
        }
        if order.iter().copied().eq(0..n) {
            return sparse;
        }
        let mut dense = sparse;
        dense[0] = (0..n).collect();
        dense
    }
}

/// Renders the system in the same text format the parser accepts.
impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for ((row, b), cols) in self.a.iter().zip(&self.b).zip(self.printed_columns()) {
            for (pos, &j) in cols.iter().enumerate() {
                let c = &row[j];
                let name = &self.vars[j];
                if pos == 0 {
                    if c.is_negative() {
                        write!(f, "-")?;
                    }
                } else if c.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                let mag = c.abs();
                if mag.is_one() {
                    write!(f, "{name}")?;
                } else {
                    write!(f, "{mag}*{name}")?;
                }
            }
            writeln!(f, " = {b}")?;
        }
        Ok(())
    }
}

fn check_unique(vars: &[String]) -> Result<(), ModelError> {
    let mut seen = HashSet::new();
    for v in vars {
        if !seen.insert(v.as_str()) {
            return Err(ModelError::DuplicateVariable(v.clone()));
        }
    }
    Ok(())
}

pub(crate) fn dot(row: &[Integer], x: &[Integer]) -> Integer {
    row.iter().zip(x).map(|(a, b)| a * b).sum()
}

/// Affine lattice `x = C·k + d`, `k ∈ Z^p`.
///
/// `c` is stored row-major: one row per variable, one column per parameter.
/// The columns are always rationally independent, so every lattice point has
/// exactly one parameter vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralSolution {
    vars: Vec<String>,
    c: Vec<Vec<Integer>>,
    d: Vec<Integer>,
    p: usize,
}

impl GeneralSolution {
    pub fn new(
        vars: Vec<String>,
        c: Vec<Vec<Integer>>,
        d: Vec<Integer>,
    ) -> Result<Self, ModelError> {
        let n = vars.len();
        check_unique(&vars)?;
        if c.len() != n || d.len() != n {
            return Err(ModelError::Dimension(format!(
                "{n} variables but C has {} rows and d has {} entries",
                c.len(),
                d.len()
            )));
        }
        let p = c.first().map_or(0, Vec::len);
        if let Some((row, r)) = c.iter().enumerate().find(|(_, r)| r.len() != p) {
            return Err(ModelError::RaggedRow {
                row,
                found: r.len(),
                expected: p,
            });
        }
        let rank = rational_rank(&transpose(&c, p));
        if rank != p {
            return Err(ModelError::DependentColumns { rank, p });
        }
        Ok(GeneralSolution { vars, c, d, p })
    }

    /// The whole of `Z^n`: identity matrix, zero offset.
    pub fn full_lattice(vars: Vec<String>) -> Result<Self, ModelError> {
        let n = vars.len();
        let c = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Integer::one() } else { Integer::zero() })
                    .collect()
            })
            .collect();
        Self::new(vars, c, vec![Integer::zero(); n])
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    /// Row-major `n×p` parameter matrix.
    pub fn matrix(&self) -> &[Vec<Integer>] {
        &self.c
    }

    pub fn offset(&self) -> &[Integer] {
        &self.d
    }

    pub fn num_params(&self) -> usize {
        self.p
    }

    pub fn num_vars(&self) -> usize {
        self.vars.len()
    }

    /// Column `j` of `C`.
    pub fn column(&self, j: usize) -> Vec<Integer> {
        self.c.iter().map(|row| row[j].clone()).collect()
    }

    /// Evaluates `C·k + d`.
    pub fn substitute(&self, k: &[Integer]) -> Result<Vec<Integer>, ModelError> {
        if k.len() != self.p {
            return Err(ModelError::Dimension(format!(
                "expected {} parameters, got {}",
                self.p,
                k.len()
            )));
        }
        Ok(self
            .c
            .iter()
            .zip(&self.d)
            .map(|(row, d)| dot(row, k) + d)
            .collect())
    }

    /// Shifts a homogeneous lattice (`d = 0`) by a particular point.
    pub fn compose(&self, particular: &[Integer]) -> Result<Self, ModelError> {
        if particular.len() != self.num_vars() {
            return Err(ModelError::Dimension(format!(
                "particular point has {} entries, lattice has {} variables",
                particular.len(),
                self.num_vars()
            )));
        }
        if !self.d.iter().all(Zero::is_zero) {
            return Err(ModelError::NonzeroOffset);
        }
        Ok(GeneralSolution {
            vars: self.vars.clone(),
            c: self.c.clone(),
            d: particular.to_vec(),
            p: self.p,
        })
    }

    /// Same lattice with the variables listed in `order` (names must match).
    pub fn reorder(&self, order: &[String]) -> Result<Self, ModelError> {
        if order.len() != self.vars.len() {
            return Err(ModelError::Dimension(format!(
                "{} names given for {} variables",
                order.len(),
                self.vars.len()
            )));
        }
        let mut c = Vec::with_capacity(order.len());
        let mut d = Vec::with_capacity(order.len());
        for name in order {
            let i = self
                .vars
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| ModelError::Dimension(format!("unknown variable `{name}`")))?;
            c.push(self.c[i].clone());
            d.push(self.d[i].clone());
        }
        Self::new(order.to_vec(), c, d)
    }
}

/// Machine-checkable evidence that a system has no integer solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// An equation of the system whose coefficient gcd does not divide its
    /// right-hand side.
    GcdDoesNotDivide { gcd: Integer, rhs: Integer },
    /// An equation `0 = rhs` with `rhs != 0`.
    Contradiction { rhs: Integer },
    /// Integer multipliers `y` with `yᵀA = 0` and `yᵀb = value != 0`.
    Inconsistent {
        multipliers: Vec<Integer>,
        value: Integer,
    },
    /// Integer multipliers `y` with every entry of `yᵀA` divisible by
    /// `modulus` while `yᵀb` is not. Covers systems that have rational
    /// solutions but no integer ones.
    Modular {
        multipliers: Vec<Integer>,
        modulus: Integer,
    },
}

impl Witness {
    /// Checks the witness's own arithmetic claim.
    pub fn holds(&self) -> bool {
        match self {
            Witness::GcdDoesNotDivide { gcd, rhs } => {
                if gcd.is_zero() {
                    !rhs.is_zero()
                } else {
                    !rhs.is_multiple_of(gcd)
                }
            }
            Witness::Contradiction { rhs } => !rhs.is_zero(),
            Witness::Inconsistent { value, .. } => !value.is_zero(),
            Witness::Modular { modulus, .. } => modulus.abs() > Integer::one(),
        }
    }

    /// Checks the witness against the system it claims to refute.
    pub fn holds_for(&self, sys: &LinearSystem) -> bool {
        if !self.holds() {
            return false;
        }
        let rows = || sys.matrix().iter().zip(sys.rhs());
        match self {
            Witness::GcdDoesNotDivide { gcd, rhs } => {
                rows().any(|(row, b)| b == rhs && row.iter().all(|a| a.is_multiple_of(gcd)))
            }
            Witness::Contradiction { rhs } => {
                rows().any(|(row, b)| b == rhs && row.iter().all(Zero::is_zero))
            }
            Witness::Modular { multipliers, modulus } => {
                combine(multipliers, sys).is_some_and(|ya| {
                    ya.iter().all(|v| v.is_multiple_of(modulus))
                        && !dot(multipliers, sys.rhs()).is_multiple_of(modulus)
                })
            }
            Witness::Inconsistent { multipliers, value } => {
                combine(multipliers, sys).is_some_and(|ya| {
                    ya.iter().all(Zero::is_zero) && &dot(multipliers, sys.rhs()) == value
                })
            }
        }
    }
}

/// `yᵀA`, or `None` when `y` has the wrong length.
fn combine(y: &[Integer], sys: &LinearSystem) -> Option<Vec<Integer>> {
    if y.len() != sys.num_equations() {
        return None;
    }
    Some(
        (0..sys.num_vars())
            .map(|j| y.iter().zip(sys.matrix()).map(|(yi, row)| yi * &row[j]).sum())
            .collect(),
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NoSolution {
    pub reason: String,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    NoSolution(NoSolution),
    Solution(GeneralSolution),
}

impl SolveOutcome {
    pub fn solution(&self) -> Option<&GeneralSolution> {
        match self {
            SolveOutcome::Solution(gs) => Some(gs),
            SolveOutcome::NoSolution(_) => None,
        }
    }

    pub fn is_solution(&self) -> bool {
        matches!(self, SolveOutcome::Solution(_))
    }
}

/// Per-run solver statistics.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SolverTrace {
    /// Pivot-selection rounds, the terminal unit-pivot round included.
    pub iterations: u64,
    /// Variable substitutions performed.
    pub substitutions: u64,
    /// Largest absolute coefficient seen in working equations or statements.
    pub peak_coeff: Integer,
    /// Pivot (or residue) magnitude chosen at each round, in order.
    pub descent: Vec<Integer>,
}

impl SolverTrace {
    pub fn observe(&mut self, value: &Integer) {
        if value.abs() > self.peak_coeff {
            self.peak_coeff = value.abs();
        }
    }

    pub(crate) fn round(&mut self, magnitude: Integer) {
        self.iterations += 1;
        self.descent.push(magnitude);
    }

    pub(crate) fn absorb(&mut self, inner: &SolverTrace) {
        self.iterations += inner.iterations;
        self.substitutions += inner.substitutions;
        self.descent.extend(inner.descent.iter().cloned());
        self.observe(&inner.peak_coeff);
    }
}

/// `sum coeffs[j] * free[j] + constant`, rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalAffine {
    pub coeffs: Vec<Rational>,
    pub constant: Rational,
}

/// Main variables expressed through the free ones after rational elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalReducedForm {
    /// Pivot columns (main variables), increasing.
    pub pivot_cols: Vec<usize>,
    /// The remaining columns, increasing; coefficient order of every `expr`.
    pub free_cols: Vec<usize>,
    /// `exprs[i]` is the value of variable `pivot_cols[i]`.
    pub exprs: Vec<RationalAffine>,
    pub rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reduction {
    Reduced(RationalReducedForm),
    /// `yᵀA = 0` but `yᵀb = value != 0`.
    Inconsistent {
        multipliers: Vec<Integer>,
        value: Integer,
    },
}

/// Gauss-Jordan elimination restricted to the first `pivotable` columns.
/// Pivot rule: leftmost column with a nonzero entry, then the smallest row.
/// Returns `(row, col)` of each pivot; pivot rows are scaled to 1.
fn gauss_jordan(m: &mut [Vec<Rational>], pivotable: usize) -> Vec<(usize, usize)> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..pivotable {
        if next == rows {
            break;
        }
        let Some(found) = (next..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(found, next);
        let inv = m[next][col].recip();
        for v in m[next].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[next].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push((next, col));
        next += 1;
    }
    pivots
}

fn to_rational_rows(rows: &[Vec<Integer>]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| r.iter().map(|v| Rational::from_integer(v.clone())).collect())
        .collect()
}

fn transpose(rows: &[Vec<Integer>], cols: usize) -> Vec<Vec<Integer>> {
    (0..cols)
        .map(|j| rows.iter().map(|r| r[j].clone()).collect())
        .collect()
}

/// Rank over the rationals of an integer matrix given by rows.
pub fn rational_rank(rows: &[Vec<Integer>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let width = first.len();
    let mut m = to_rational_rows(rows);
    gauss_jordan(&mut m, width).len()
}

/// Indices of a maximal set of rationally independent rows, chosen greedily
/// in input order.
pub fn independent_rows(rows: &[Vec<Integer>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<Integer>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        basis.push(row.clone());
        if rational_rank(&basis) == basis.len() {
            chosen.push(i);
        } else {
            basis.pop();
        }
    }
    chosen
}

/// Exact elimination of `A·x = b` over the rationals.
///
/// Dependent rows disappear; an inconsistent system yields integer multipliers
/// that combine the rows into `0 = value`.
pub fn rank_and_reduce(sys: &LinearSystem) -> Reduction {
    let m = sys.num_equations();
    let n = sys.num_vars();
    // [A | b | I_m], the identity part records the row combinations
    let mut aug: Vec<Vec<Rational>> = sys
        .matrix()
        .iter()
        .zip(sys.rhs())
        .enumerate()
        .map(|(i, (row, b))| {
            let mut r: Vec<Rational> = row
                .iter()
                .map(|v| Rational::from_integer(v.clone()))
                .collect();
            r.push(Rational::from_integer(b.clone()));
            r.extend((0..m).map(|k| {
                if k == i {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let pivots = gauss_jordan(&mut aug, n);
    let rank = pivots.len();

    if let Some(bad) = aug[rank..].iter().find(|r| !r[n].is_zero()) {
        let ys = &bad[n + 1..];
        let den = ys
            .iter()
            .chain(std::iter::once(&bad[n]))
            .fold(Integer::one(), |acc, y| acc.lcm(y.denom()));
        let multipliers: Vec<Integer> = ys
            .iter()
            .map(|y| (y * Rational::from_integer(den.clone())).to_integer())
            .collect();
        let value = dot(&multipliers, sys.rhs());
        return Reduction::Inconsistent { multipliers, value };
    }

    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free_cols: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    let exprs = pivots
        .iter()
        .map(|&(r, _)| RationalAffine {
            coeffs: free_cols.iter().map(|&f| -aug[r][f].clone()).collect(),
            constant: aug[r][n].clone(),
        })
        .collect();
    Reduction::Reduced(RationalReducedForm {
        pivot_cols,
        free_cols,
        exprs,
        rank,
    })
}

/// Checkable evidence that `A·x = b` has no integer solution, or `None` when
/// it has one.
///
/// Rational inconsistency gives [`Witness::Inconsistent`]. Otherwise the
/// independent rows are brought to a lower-triangular `H` by unimodular
/// column operations; `x` exists iff `z = H⁻¹b` is integral, and a fractional
/// `z_i` yields `y = e_iᵀH⁻¹` with `yᵀA` integral and `yᵀb = z_i` not. Scaled
/// by the common denominator this is a [`Witness::Modular`].
pub fn infeasibility_certificate(sys: &LinearSystem) -> Option<Witness> {
    if let Reduction::Inconsistent { multipliers, value } = rank_and_reduce(sys) {
        return Some(Witness::Inconsistent { multipliers, value });
    }
    let rows = independent_rows(sys.matrix());
    let r = rows.len();
    let n = sys.num_vars();
    let mut h: Vec<Vec<Integer>> = rows.iter().map(|&i| sys.matrix()[i].clone()).collect();
    for i in 0..r {
        if h[i][i].is_zero() {
            let j = (i + 1..n)
                .find(|&j| !h[i][j].is_zero())
                .expect("independent rows keep a nonzero entry right of the diagonal");
            h.iter_mut().for_each(|row| row.swap(i, j));
        }
        for j in i + 1..n {
            if h[i][j].is_zero() {
                continue;
            }
            let (a, b) = (h[i][i].clone(), h[i][j].clone());
            let e = a.extended_gcd(&b);
            let (ua, ub) = (&a / &e.gcd, &b / &e.gcd);
            // [col_i, col_j] <- [s·col_i + t·col_j, -ub·col_i + ua·col_j], det 1
            for row in h.iter_mut() {
                let (ci, cj) = (row[i].clone(), row[j].clone());
                row[i] = &e.x * &ci + &e.y * &cj;
                row[j] = &ua * &cj - &ub * &ci;
            }
        }
    }
    let b: Vec<Rational> = rows.iter().map(|&i| Rational::from(sys.rhs()[i].clone())).collect();
    let mut z: Vec<Rational> = Vec::with_capacity(r);
    for i in 0..r {
        let s: Rational = (0..i).map(|k| Rational::from(h[i][k].clone()) * &z[k]).sum();
        z.push((&b[i] - s) / Rational::from(h[i][i].clone()));
    }
    let bad = z.iter().position(|v| !v.is_integer())?;
    // yᵀH = e_badᵀ, solved from the last row up since H is lower triangular
    let mut y = vec![Rational::zero(); r];
    for k in (0..r).rev() {
        let target = if k == bad { Rational::one() } else { Rational::zero() };
        let s: Rational = (k + 1..r).map(|i| &y[i] * Rational::from(h[i][k].clone())).sum();
        y[k] = (target - s) / Rational::from(h[k][k].clone());
    }
    let q = y.iter().fold(Integer::one(), |acc, v| acc.lcm(v.denom()));
    let mut multipliers = vec![Integer::zero(); sys.num_equations()];
    for (v, &i) in y.iter().zip(&rows) {
        multipliers[i] = v.numer() * (&q / v.denom());
    }
    let f = gcd_many(multipliers.iter().chain(std::iter::once(&q)));
    let multipliers: Vec<Integer> = multipliers.iter().map(|v| v / &f).collect();
    let modulus = &q / &f;
    Some(Witness::Modular { multipliers, modulus })
}

/// `A·C = 0` and `A·d = b`, checked exactly.
pub fn satisfies(sys: &LinearSystem, gs: &GeneralSolution) -> Result<bool, ModelError> {
    if sys.num_vars() != gs.num_vars() {
        return Err(ModelError::Dimension(format!(
            "system has {} variables, solution has {}",
            sys.num_vars(),
            gs.num_vars()
        )));
    }
    for (row, b) in sys.matrix().iter().zip(sys.rhs()) {
        for j in 0..gs.num_params() {
            if !dot(row, &gs.column(j)).is_zero() {
                return Ok(false);
            }
        }
        if &dot(row, gs.offset()) != b {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Gcd of each column of `C`.
pub fn column_gcds(gs: &GeneralSolution) -> Vec<Integer> {
    (0..gs.num_params())
        .map(|j| gcd_many(&gs.column(j)))
        .collect()
}
