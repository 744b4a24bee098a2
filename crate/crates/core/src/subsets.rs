//! Exhaustive subset search helpers.

use alloc::vec::Vec;

/// Calls `f` on every `size`-subset of `0..n`, in lexicographic order.
/// Stops early and returns false as soon as `f` returns false.
pub(crate) fn for_each_combination<F>(n: usize, size: usize, mut f: F) -> bool
where
    F: FnMut(&[usize]) -> bool,
{
    if size > n {
        return true;
    }
    let mut idx: Vec<usize> = (0..size).collect();
    loop {
        if !f(&idx) {
            return false;
        }
        // advance the rightmost index that still has room
        let mut i = size;
        loop {
            if i == 0 {
                return true;
            }
            i -= 1;
            if idx[i] < n - size + i {
                break;
            }
            if i == 0 {
                return true;
            }
        }
        idx[i] += 1;
        for j in i + 1..size {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// All inclusion-minimal subsets of `0..n` with at most `max_size` elements
/// that satisfy the monotone predicate `valid`. Subsets are searched by
/// ascending size; a candidate containing an already found solution is
/// skipped without evaluating `valid`.
pub(crate) fn minimal_subsets<F>(n: usize, max_size: usize, mut valid: F) -> Vec<Vec<usize>>
where
    F: FnMut(&[usize]) -> bool,
{
    let mut found: Vec<Vec<usize>> = Vec::new();
    for size in 0..=max_size.min(n) {
        let mut fresh = Vec::new();
        for_each_combination(n, size, |idx| {
            let dominated = found.iter().any(|s| is_sorted_subset(s, idx));
            if !dominated && valid(idx) {
                fresh.push(idx.to_vec());
            }
            true
        });
        found.extend(fresh);
    }
    found
}

/// `small ⊆ big` for strictly increasing slices.
pub(crate) fn is_sorted_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}
