use num_integer::Integer as _;
use num_traits::{One, Zero};

use crate::arith::Integer;
use crate::model::LinearSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeasibilityStatus {
    /// An integer solution exists.
    Guaranteed,
    /// The criterion says nothing either way.
    Unknown,
    /// Square nonsingular system whose unique rational solution is fractional.
    Infeasible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MinorSearch {
    /// Stop at the first column subset (lexicographic) with a nonzero minor.
    #[default]
    FirstNonzero,
    /// Try every subset until one satisfies the divisibility test.
    Exhaustive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityVerdict {
    pub status: FeasibilityStatus,
    /// Columns of the minor used, empty if none was needed or found.
    pub columns: Vec<usize>,
    /// The minor `Δ`.
    pub delta: Option<Integer>,
    /// `Δ_x` for each column in `columns`: the minor with that column
    /// replaced by `b`.
    pub replaced: Vec<Integer>,
}

/// Cramer divisibility test with the default search.
pub fn feasibility_cramer(sys: &LinearSystem) -> FeasibilityVerdict {
    feasibility_cramer_with(sys, MinorSearch::default())
}

/// Looks for an `m×m` minor `Δ ≠ 0` that divides every `Δ_x`. If one exists
/// the system has an integer solution (the other variables set to zero).
///
/// The rows should be independent; with dependent rows every minor vanishes
/// and the answer is `Unknown`.
pub fn feasibility_cramer_with(sys: &LinearSystem, search: MinorSearch) -> FeasibilityVerdict {
    let mut verdict = FeasibilityVerdict {
        status: FeasibilityStatus::Unknown,
        columns: Vec::new(),
        delta: None,
        replaced: Vec::new(),
    };
    if sys.is_homogeneous() {
        verdict.status = FeasibilityStatus::Guaranteed;
        return verdict;
    }
    let m = sys.num_equations();
    let n = sys.num_vars();
    if m > n {
        return verdict;
    }
    let mut subset: Vec<usize> = (0..m).collect();
    loop {
        if let Some(found) = try_minor(sys, &subset) {
            let good = found.status == FeasibilityStatus::Guaranteed;
            if verdict.delta.is_none() || good {
                verdict = found;
            }
            if good || search == MinorSearch::FirstNonzero {
                break;
            }
        }
        if !next_subset(&mut subset, n) {
            break;
        }
    }
    verdict
}

fn try_minor(sys: &LinearSystem, cols: &[usize]) -> Option<FeasibilityVerdict> {
    let pick = |replace: Option<usize>| -> Vec<Vec<Integer>> {
        sys.matrix()
            .iter()
            .zip(sys.rhs())
            .map(|(row, b)| {
                cols.iter()
                    .enumerate()
                    .map(|(h, &c)| {
                        if Some(h) == replace {
                            b.clone()
                        } else {
                            row[c].clone()
                        }
                    })
                    .collect()
            })
            .collect()
    };
    let delta = determinant(pick(None));
    if delta.is_zero() {
        return None;
    }
    let replaced: Vec<Integer> = (0..cols.len()).map(|h| determinant(pick(Some(h)))).collect();
    let divides = replaced.iter().all(|dx| dx.is_multiple_of(&delta));
    let status = if divides {
        FeasibilityStatus::Guaranteed
    } else if cols.len() == sys.num_vars() {
        FeasibilityStatus::Infeasible
    } else {
        FeasibilityStatus::Unknown
    };
    Some(FeasibilityVerdict {
        status,
        columns: cols.to_vec(),
        delta: Some(delta),
        replaced,
    })
}

/// Next `k`-subset of `0..n` in lexicographic order.
fn next_subset(s: &mut [usize], n: usize) -> bool {
    let k = s.len();
    for i in (0..k).rev() {
        if s[i] < n - k + i {
            s[i] += 1;
            for j in i + 1..k {
                s[j] = s[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Fraction-free (Bareiss) determinant.
pub(crate) fn determinant(mut a: Vec<Vec<Integer>>) -> Integer {
    let n = a.len();
    if n == 0 {
        return Integer::one();
    }
    let mut sign = Integer::one();
    let mut prev = Integer::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Integer::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use proptest::prelude::*;

    fn naive_det(a: &[Vec<i64>]) -> i64 {
        if a.is_empty() {
            return 1;
        }
        (0..a.len())
            .map(|c| {
                let minor: Vec<Vec<i64>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| *v).collect())
                    .collect();
                let s = if c % 2 == 0 { 1 } else { -1 };
                s * a[0][c] * naive_det(&minor)
            })
            .sum()
    }

    #[test]
    fn homogeneous_is_guaranteed() {
        let sys = LinearSystem::from_i64(&[&[3, 5, 7], &[2, 2, 9]], &[0, 0]).unwrap();
        assert_eq!(feasibility_cramer(&sys).status, FeasibilityStatus::Guaranteed);
    }

    #[test]
    fn unit_minor() {
        let sys = LinearSystem::from_i64(&[&[1, 0], &[0, 1]], &[3, 4]).unwrap();
        let v = feasibility_cramer(&sys);
        assert_eq!(v.status, FeasibilityStatus::Guaranteed);
        assert_eq!(v.delta, Some(int(1)));
        assert_eq!(v.replaced, vec![int(3), int(4)]);
    }

    #[test]
    fn parity_is_unknown() {
        let sys = LinearSystem::from_i64(&[&[2, 4]], &[7]).unwrap();
        let v = feasibility_cramer(&sys);
        assert_eq!(v.status, FeasibilityStatus::Unknown);
        assert_eq!(v.delta, Some(int(2)));
        let v = feasibility_cramer_with(&sys, MinorSearch::Exhaustive);
        assert_eq!(v.status, FeasibilityStatus::Unknown);
    }

    #[test]
    fn exhaustive_search_finds_a_later_minor() {
        // first minor 2 misses, the second 3 divides 3
        let sys = LinearSystem::from_i64(&[&[2, 3]], &[3]).unwrap();
        assert_eq!(feasibility_cramer(&sys).status, FeasibilityStatus::Unknown);
        let v = feasibility_cramer_with(&sys, MinorSearch::Exhaustive);
        assert_eq!(v.status, FeasibilityStatus::Guaranteed);
        assert_eq!(v.columns, vec![1]);
    }

    #[test]
    fn square_fractional_is_infeasible() {
        let sys = LinearSystem::from_i64(&[&[2, 0], &[0, 1]], &[1, 1]).unwrap();
        assert_eq!(feasibility_cramer(&sys).status, FeasibilityStatus::Infeasible);
    }

    proptest! {
        #[test]
        fn bareiss_matches_cofactor(v in prop::collection::vec(-9i64..9, 16), k in 1usize..5) {
            let a: Vec<Vec<i64>> = (0..k).map(|i| v[i * 4..i * 4 + k].to_vec()).collect();
            let big = a.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect();
            prop_assert_eq!(determinant(big), int(naive_det(&a)));
        }
    }
}
