//! Index conventions shared by every module.
//!
//! Group indices live in `Z_N` as residues `0..N`. Matrix and vector labels
//! are `1..N`, and a label `k` stands for the residue `k mod N`, so label `N`
//! is the residue `0`. Every reduction goes through these helpers.

/// Reduces an arbitrary integer into the label range `1..=n`.
pub fn label(n: usize, x: i64) -> usize {
    let r = x.rem_euclid(n as i64) as usize;
    if r == 0 {
        n
    } else {
        r
    }
}

/// Reduces an arbitrary integer into the residue range `0..n`.
pub fn residue(n: usize, x: i64) -> usize {
    x.rem_euclid(n as i64) as usize
}

/// Kronecker delta evaluated modulo `n`.
pub fn delta_mod(n: usize, x: i64, y: i64) -> bool {
    (x - y).rem_euclid(n as i64) == 0
}

/// Zero-based storage position of a label.
pub fn slot(n: usize, x: i64) -> usize {
    label(n, x) - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_wrap_into_one_based_range() {
        assert_eq!(label(3, 0), 3);
        assert_eq!(label(3, 3), 3);
        assert_eq!(label(3, 4), 1);
        assert_eq!(label(3, -1), 2);
        assert_eq!(residue(3, -1), 2);
        assert_eq!(slot(4, 0), 3);
    }

    #[test]
    fn delta_is_taken_mod_n() {
        assert!(delta_mod(3, 4, 1));
        assert!(delta_mod(2, 0, 2));
        assert!(!delta_mod(5, 1, 2));
    }
}
