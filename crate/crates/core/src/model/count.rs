use num_bigint::BigUint;
use num_traits::One;

fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Number of `n x n` ASMs: `prod_{i=0}^{n-1} (3i+1)! / (n+i)!`, evaluated exactly.
pub fn asm_count_formula(n: usize) -> BigUint {
    let (num, den) = (0..n).fold((BigUint::one(), BigUint::one()), |(num, den), i| {
        (num * factorial(3 * i + 1), den * factorial(n + i))
    });
    debug_assert!((&num % &den) == BigUint::from(0u8));
    num / den
}
