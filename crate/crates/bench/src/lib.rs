//! Fixed inputs for the benchmarks.

pub use dioph_core::{Algorithm, LinearSystem};

fn parse(text: &str) -> LinearSystem {
    dioph_core::textio::parse_system(text).expect("fixture parses")
}

/// Single equations, named.
pub fn equations() -> Vec<(&'static str, LinearSystem)> {
    vec![
        ("four-term", parse("6x1 - 12x2 - 8x3 + 22x4 = 14")),
        ("three-term", parse("17x - 7y + 10z = -12")),
        ("homogeneous", parse("-13x1 + 3x2 - 4x3 = 0")),
        (
            "wide",
            parse("9173x1 - 4411x2 + 7702x3 - 6529x4 + 3301x5 - 8887x6 + 1234x7 = 987654321"),
        ),
    ]
}

/// Systems with two or three equations, named.
pub fn systems() -> Vec<(&'static str, LinearSystem)> {
    vec![
        ("3x4", parse("5x1 - 7x2 - 2x3 + 6x4 = 6\n-4x1 + 6x2 - 3x3 + 11x4 = 0")),
        (
            "3x5",
            parse(
                "3x1 + 4x2 + 22x4 - 8x5 = 25\n6x1 + 46x4 - 12x5 = 2\n4x2 + 3x3 - x4 + 9x5 = 26",
            ),
        ),
        ("2x5", parse("3x1 + 6x3 + 2x4 = 0\n4x2 - 2x3 - 7x5 = -1")),
        (
            "3x6-large",
            parse(
                "731a - 412b + 95c + 1009d - 66e + 3f = 17\n\
                 -58a + 903b - 711c + 24d + 487e - 905f = -4\n\
                 212a + 17b + 333c - 808d + 91e + 640f = 123",
            ),
        ),
    ]
}
