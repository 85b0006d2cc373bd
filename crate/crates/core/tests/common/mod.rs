#![allow(dead_code)]

use dioph_core::{GeneralSolution, Integer, LinearSystem};

pub fn ints(xs: &[i64]) -> Vec<Integer> {
    xs.iter().map(|&x| Integer::from(x)).collect()
}

fn names(ns: &[&str]) -> Vec<String> {
    ns.iter().map(|s| s.to_string()).collect()
}

fn indexed(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("x{i}")).collect()
}

pub fn lattice(vars: Vec<String>, c: &[&[i64]], d: &[i64]) -> GeneralSolution {
    GeneralSolution::new(vars, c.iter().map(|r| ints(r)).collect(), ints(d)).unwrap()
}

pub fn application() -> LinearSystem {
    LinearSystem::from_i64(&[&[6, -12, -8, 22]], &[14]).unwrap()
}

pub fn application_printed() -> GeneralSolution {
    lattice(
        indexed(4),
        &[&[2, -5, 4], &[1, 0, 0], &[0, -1, 3], &[0, 1, 0]],
        &[5, 0, 2, 0],
    )
}

pub fn congruence_example() -> LinearSystem {
    LinearSystem::with_names_i64(names(&["x", "y", "z"]), &[&[17, -7, 10]], &[-12]).unwrap()
}

pub fn congruence_printed() -> GeneralSolution {
    lattice(
        names(&["x", "y", "z"]),
        &[&[3, -7], &[-17, 43], &[-17, 42]],
        &[12, -72, -72],
    )
}

pub fn example1() -> LinearSystem {
    LinearSystem::with_names_i64(
        names(&["x", "y", "z", "w"]),
        &[&[5, -7, -2, 6], &[-4, 6, -3, 11]],
        &[6, 0],
    )
    .unwrap()
}

pub fn example1_printed() -> GeneralSolution {
    lattice(
        names(&["x", "y", "z", "w"]),
        &[&[3, 4], &[1, 0], &[31, 79], &[9, 23]],
        &[2, 0, 23, 7],
    )
}

pub fn example2() -> LinearSystem {
    LinearSystem::with_names_i64(
        names(&["x", "y", "z", "w"]),
        &[&[12, -7, 9, 0], &[0, -5, 8, 10], &[0, 0, 0, 0], &[15, 0, 21, 69]],
        &[12, 0, 0, 3],
    )
    .unwrap()
}

/// A reference answer that does not satisfy the first equation.
pub fn example2_printed() -> GeneralSolution {
    lattice(
        names(&["x", "y", "z", "w"]),
        &[&[-237], &[-918], &[1030], &[365]],
        &[728, 2826, 3170, -1123],
    )
}

pub fn example3() -> LinearSystem {
    LinearSystem::from_i64(
        &[&[3, 4, 0, 22, -8], &[6, 0, 0, 46, -12], &[0, 4, 3, -1, 9]],
        &[25, 2, 26],
    )
    .unwrap()
}

pub fn example3_printed() -> GeneralSolution {
    lattice(
        indexed(5),
        &[&[-40, -92], &[3, 3], &[-11, 0], &[6, 12], &[3, 0]],
        &[27, 4, 8, -4, -2],
    )
}

pub fn example4() -> LinearSystem {
    LinearSystem::from_i64(&[&[3, 0, -7, 6, 0], &[4, 3, 0, 6, -5]], &[-2, 19]).unwrap()
}

/// A reference answer that does not satisfy the second equation.
pub fn example4_printed() -> GeneralSolution {
    lattice(
        indexed(5),
        &[&[49, -6, 10], &[0, 1, 0], &[-3, 0, 0], &[-28, 3, -5], &[0, 0, 1]],
        &[59, 0, -1, -31, 0],
    )
}

pub fn example5() -> LinearSystem {
    LinearSystem::from_i64(&[&[3, 0, 6, 2, 0], &[0, 4, -2, 0, -7]], &[0, -1]).unwrap()
}

pub fn example5_printed() -> GeneralSolution {
    lattice(
        indexed(5),
        &[&[-6, -4, -2], &[-2, 1, 0], &[3, 2, 0], &[0, 0, 3], &[-2, 0, 0]],
        &[2, 1, -1, 0, 1],
    )
}

/// `-13x1 + 3x2 - 4x3 = 0`
pub fn eq8() -> LinearSystem {
    LinearSystem::from_i64(&[&[-13, 3, -4]], &[0]).unwrap()
}

/// Satisfies `eq8` and its structural checks, yet misses `(1, 7, 2)`.
pub fn candidate7() -> GeneralSolution {
    lattice(indexed(3), &[&[-1, 1], &[5, 3], &[7, -1]], &[0, 0, 0])
}
