//! Order-language formulas shared by the translation checks.

pub const BATTERY: &[&str] = &[
    "x <= y",
    "~(x <= y')",
    "x <= x",
    "x <= y & y <= x -> x = y",
    "x <= y & y <= z -> x <= z",
    "x <= y -> y' <= x'",
    "x'' = x",
    "0 <= x & x <= 1",
    "x <= y | y <= x",
    "x <= x' | x' <= x",
    "x <= y' -> y <= x'",
    "x = x'",
    "~(x = x')",
    "x <= x' -> x = 0",
    "x <= y | x <= y'",
    "x <= y & x <= y' -> x = 0",
    "0' = 1 & 1' = 0",
    "x <= y | y <= z | z <= x",
    "x <= y & y <= x' -> x <= y'",
    "~(x <= y) | ~(y <= x) | x = y",
    "x <= y & (forall z: ~(z <= x') | ~(z <= y) | z = 0) -> x = y",
    "(forall z: ~(z <= x) | ~(z <= x') | z = 0) -> x <= x' | x' <= x",
    "x' <= y & y <= x -> x' <= x",
    "~(x = 0) & ~(x = 1) -> ~(x <= x') | ~(x' <= x)",
];
