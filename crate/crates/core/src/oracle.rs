//! A deliberately naive reference enumeration, kept independent of the
//! census pipeline so the two can check each other.
//!
//! No pruning beyond well-formedness, determinants by cofactor expansion
//! rather than elimination, subsets by plain recursion rather than the
//! colexicographic iterator, and orbit dedup by explicit minimization over a
//! lexicographic permutation generator rather than Heap's.

use std::collections::BTreeSet;

use crate::mask::Mask;
use crate::symmetry::CanonicalForm;

/// Every Cremona orbit of n-subsets of the degree-d square-free monomials,
/// as canonical forms. Exhaustive and unpruned, so n <= 6.
pub fn brute_force_oracle(n: usize, d: usize) -> BTreeSet<CanonicalForm> {
    assert!((3..=6).contains(&n), "the oracle is limited to 3 <= n <= 6");
    assert!(d >= 1 && d < n, "degree must satisfy 1 <= d <= n-1");

    let universe = monomials(n, d);
    let mut found = BTreeSet::new();
    let mut subset = Vec::with_capacity(n);
    choose(&universe, 0, n, &mut subset, &mut |masks| {
        let det = cofactor_determinant(n, masks);
        if det.unsigned_abs() as usize == d {
            found.insert(CanonicalForm::from_key_unchecked(n, minimize(n, masks)));
        }
    });
    found
}

/// Degree-d square-free monomials built by direct recursion over variables.
fn monomials(n: usize, d: usize) -> Vec<Mask> {
    fn rec(n: usize, d: usize, next_var: usize, acc: Mask, out: &mut Vec<Mask>) {
        if d == 0 {
            out.push(acc);
            return;
        }
        if next_var > n {
            return;
        }
        rec(n, d - 1, next_var + 1, acc | (1 << (n - next_var)), out);
        rec(n, d, next_var + 1, acc, out);
    }
    let mut out = Vec::new();
    rec(n, d, 1, 0, &mut out);
    out
}

fn choose<F: FnMut(&[Mask])>(
    universe: &[Mask],
    start: usize,
    remaining: usize,
    acc: &mut Vec<Mask>,
    visit: &mut F,
) {
    if remaining == 0 {
        visit(acc);
        return;
    }
    if universe.len() - start < remaining {
        return;
    }
    for i in start..universe.len() {
        acc.push(universe[i]);
        choose(universe, i + 1, remaining - 1, acc, visit);
        acc.pop();
    }
}

/// Laplace expansion row by row over the columns still available.
fn cofactor_determinant(n: usize, columns: &[Mask]) -> i64 {
    fn go(n: usize, columns: &[Mask], row: usize, used: u32) -> i64 {
        if row == n {
            return 1;
        }
        let mut acc = 0i64;
        let mut sign = 1i64;
        for (j, &col) in columns.iter().enumerate() {
            if used & (1 << j) != 0 {
                continue;
            }
            let entry = ((col >> (n - 1 - row)) & 1) as i64;
            if entry != 0 {
                acc += sign * go(n, columns, row + 1, used | (1 << j));
            }
            sign = -sign;
        }
        acc
    }
    go(n, columns, 0, 0)
}

/// Minimal sorted mask tuple over all permutations, generated in
/// lexicographic successor order.
fn minimize(n: usize, masks: &[Mask]) -> Vec<Mask> {
    let mut images: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<Mask>> = None;
    loop {
        let mut candidate: Vec<Mask> = masks
            .iter()
            .map(|&m| {
                let mut out = 0;
                for (v, &image) in images.iter().enumerate() {
                    if m & (1 << (n - 1 - v)) != 0 {
                        out |= 1 << (n - 1 - image);
                    }
                }
                out
            })
            .collect();
        candidate.sort();
        match &best {
            Some(b) if *b <= candidate => {}
            _ => best = Some(candidate),
        }
        if !lex_successor(&mut images) {
            break;
        }
    }
    best.expect("at least the identity permutation was tried")
}

/// Standard next-permutation on a 0..n index array.
fn lex_successor(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_sizes_are_binomials() {
        assert_eq!(monomials(6, 3).len(), 20);
        assert_eq!(monomials(5, 2).len(), 10);
    }

    #[test]
    fn lex_successor_visits_every_permutation_once() {
        let mut a = vec![0, 1, 2, 3];
        let mut count = 1;
        while lex_successor(&mut a) {
            count += 1;
        }
        assert_eq!(count, 24);
        assert_eq!(a, vec![3, 2, 1, 0]);
    }

    #[test]
    fn cofactor_determinant_matches_known_values() {
        // anti-Kronecker n=4 in sorted column order
        let cols = [0b0111u16, 0b1011, 0b1101, 0b1110];
        assert_eq!(cofactor_determinant(4, &cols), -3);
        // 4-cycle
        let cols = [0b1100u16, 0b0110, 0b0011, 0b1001];
        assert_eq!(cofactor_determinant(4, &cols), 0);
    }

    #[test]
    fn small_counts_match_the_classification() {
        assert_eq!(brute_force_oracle(4, 2).len(), 1);
        assert_eq!(brute_force_oracle(5, 2).len(), 4);
        assert_eq!(brute_force_oracle(5, 3).len(), 4);
    }
}
