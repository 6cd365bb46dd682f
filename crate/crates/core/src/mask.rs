//! Compact supports for square-free monomials.
//!
//! A square-free monomial in `n` variables is stored as an `n`-bit mask in
//! which variable `x1` occupies the most significant of the `n` low bits.
//! With that layout, ascending integer order on masks coincides with
//! lexicographic order on exponent vectors, so sorted mask tuples and sorted
//! monomial lists agree without any conversion.

/// Variable-subset bitmask; supports up to [`MAX_VARS`] variables.
pub type Mask = u16;

/// Hard cap on the variable count for the bitmask representation.
pub const MAX_VARS: usize = 16;

/// The bit holding variable `var` (1-based) in an `n`-variable mask.
#[inline]
pub fn var_bit(n: usize, var: usize) -> Mask {
    debug_assert!(var >= 1 && var <= n && n <= MAX_VARS);
    1 << (n - var)
}

/// Mask with all `n` variables present.
#[inline]
pub fn full(n: usize) -> Mask {
    debug_assert!(n <= MAX_VARS);
    (((1u32) << n) - 1) as Mask
}

/// Number of variables present.
#[inline]
pub fn weight(mask: Mask) -> usize {
    mask.count_ones() as usize
}

pub fn from_vars(n: usize, vars: &[usize]) -> Mask {
    vars.iter().fold(0, |m, &v| m | var_bit(n, v))
}

/// Variables present in `mask`, in ascending order.
pub fn vars(n: usize, mask: Mask) -> Vec<usize> {
    (1..=n).filter(|&v| mask & var_bit(n, v) != 0).collect()
}

/// Relabel the variables of `mask` by a permutation given as 0-based images
/// (`images[i]` is the image of variable `i + 1`, also 0-based).
pub fn permute(n: usize, images: &[usize], mask: Mask) -> Mask {
    let mut out = 0;
    for v in 1..=n {
        if mask & var_bit(n, v) != 0 {
            out |= var_bit(n, images[v - 1] + 1);
        }
    }
    out
}

/// Drop variable `var` and compact the survivors order-preservingly to
/// `1..n-1`. The caller guarantees `var` is absent from `mask`.
pub fn delete_var(n: usize, var: usize, mask: Mask) -> Mask {
    debug_assert_eq!(mask & var_bit(n, var), 0);
    let low = mask & (var_bit(n, var) - 1);
    let high = mask >> (n - var + 1);
    (high << (n - var)) | low
}

/// All weight-`d` masks over `n` variables, ascending.
pub fn masks_of_weight(n: usize, d: usize) -> Vec<Mask> {
    (0..=full(n)).filter(|&m| weight(m) == d).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn msb_layout_matches_lexicographic_order() {
        // x2x3 < x1x3 < x1x2 lexicographically for n = 3.
        let x2x3 = from_vars(3, &[2, 3]);
        let x1x3 = from_vars(3, &[1, 3]);
        let x1x2 = from_vars(3, &[1, 2]);
        assert!(x2x3 < x1x3 && x1x3 < x1x2);
        assert_eq!(vars(3, x1x3), vec![1, 3]);
    }

    #[test]
    fn delete_var_compacts_survivors() {
        // {x1, x3, x5} in n = 5, drop x2 -> {x1, x2, x4} in n = 4.
        let m = from_vars(5, &[1, 3, 5]);
        assert_eq!(delete_var(5, 2, m), from_vars(4, &[1, 2, 4]));
        // dropping the last variable just truncates
        let m = from_vars(5, &[1, 4]);
        assert_eq!(delete_var(5, 5, m), from_vars(4, &[1, 4]));
    }

    #[test]
    fn weight_enumeration_is_complete_and_sorted() {
        let all = masks_of_weight(6, 3);
        assert_eq!(all.len(), 20);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|&m| weight(m) == 3));
    }

    #[test]
    fn permute_relabels_variables() {
        // (1 2) swaps x1 and x2.
        let images = vec![1, 0, 2];
        let m = from_vars(3, &[1, 3]);
        assert_eq!(permute(3, &images, m), from_vars(3, &[2, 3]));
    }
}
