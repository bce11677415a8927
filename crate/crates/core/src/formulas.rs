//! Closed-form dominated chromatic numbers for the named families.

use crate::error::{Error, Result};

/// Dominated chromatic number of the path on `n` vertices, `n >= 2`.
/// n/2 when n ≡ 0 (mod 4), ⌊n/2⌋ + 1 otherwise; the n = 2 value is the
/// forced one (two singleton classes dominating each other).
pub fn formula_path(n: usize) -> Result<usize> {
    match n {
        0 | 1 => Err(Error::domain(format!(
            "path formula requires n >= 2, got {n}"
        ))),
        2 => Ok(2),
        _ => Ok(if n.is_multiple_of(4) {
            n / 2
        } else {
            n / 2 + 1
        }),
    }
}

/// Dominated chromatic number of the cycle on `n` vertices, `n >= 4`.
/// The n = 3 case is excluded: C_3 = K_3 needs 3 colors while the
/// closed form would give 2.
pub fn formula_cycle(n: usize) -> Result<usize> {
    if n < 4 {
        return Err(Error::domain(format!(
            "cycle formula requires n >= 4, got {n}"
        )));
    }
    Ok(if n.is_multiple_of(4) {
        n / 2
    } else {
        n / 2 + 1
    })
}

/// χ_dom(K_n) = n for n >= 2.
pub fn formula_complete(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::domain(format!(
            "complete formula requires n >= 2, got {n}"
        )));
    }
    Ok(n)
}

/// χ_dom of the star on `n` vertices (center plus n-1 leaves) is 2.
pub fn formula_star(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::domain(format!(
            "star formula requires n >= 2 vertices, got {n}"
        )));
    }
    Ok(2)
}

/// χ_dom(W_n) for rim length `n >= 3`. The hub is adjacent to every
/// other vertex, which forces χ_dom = χ_d^t = χ; χ(W_n) is 4 for odd
/// rims and 3 for even rims.
pub fn formula_wheel(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::domain(format!(
            "wheel formula requires rim length n >= 3, got {n}"
        )));
    }
    Ok(if n % 2 == 1 { 4 } else { 3 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_values() {
        assert_eq!(formula_path(2).unwrap(), 2);
        assert_eq!(formula_path(3).unwrap(), 2);
        assert_eq!(formula_path(4).unwrap(), 2);
        assert_eq!(formula_path(8).unwrap(), 4);
        assert_eq!(formula_path(11).unwrap(), 6);
        assert!(formula_path(1).is_err());
    }

    #[test]
    fn cycle_values() {
        assert_eq!(formula_cycle(4).unwrap(), 2);
        assert_eq!(formula_cycle(5).unwrap(), 3);
        assert_eq!(formula_cycle(6).unwrap(), 4);
        assert_eq!(formula_cycle(8).unwrap(), 4);
        assert!(formula_cycle(3).is_err());
    }

    #[test]
    fn complete_star_wheel() {
        assert_eq!(formula_complete(7).unwrap(), 7);
        assert_eq!(formula_star(5).unwrap(), 2);
        assert_eq!(formula_wheel(5).unwrap(), 4);
        assert_eq!(formula_wheel(6).unwrap(), 3);
        assert!(formula_complete(1).is_err());
        assert!(formula_wheel(2).is_err());
    }
}
