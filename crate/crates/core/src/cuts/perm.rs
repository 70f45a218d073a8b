//! Lexicographic permutation enumeration by rank range.

use std::ops::Range;

pub(crate) fn factorial(d: usize) -> u64 {
    (1..=d as u64).product()
}

/// The permutation of `1..=d` with the given lexicographic rank.
pub(crate) fn unrank(mut rank: u64, d: usize) -> Vec<u8> {
    let mut pool: Vec<u8> = (1..=d as u8).collect();
    let mut out = Vec::with_capacity(d);
    for k in (0..d).rev() {
        let f = factorial(k);
        let idx = (rank / f) as usize;
        rank %= f;
        out.push(pool.remove(idx));
    }
    out
}

/// Advances to the lexicographic successor; false after the last permutation.
pub(crate) fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Calls `visit` on each permutation whose rank lies in `range`, in order.
pub(crate) fn for_each_in_range(d: usize, range: Range<u64>, mut visit: impl FnMut(&[u8])) {
    if range.is_empty() {
        return;
    }
    let mut p = unrank(range.start, d);
    let len = range.end - range.start;
    for k in 0..len {
        visit(&p);
        if k + 1 < len {
            next_permutation(&mut p);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_walk_in_lex_order() {
        let mut seen = Vec::new();
        for_each_in_range(4, 0..24, |p| seen.push(p.to_vec()));
        assert_eq!(seen.len(), 24);
        for (r, p) in seen.iter().enumerate() {
            assert_eq!(&unrank(r as u64, 4), p);
        }
        let mut sorted = seen.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted, seen);
    }

    #[test]
    fn partial_ranges_concatenate() {
        let mut whole = Vec::new();
        for_each_in_range(5, 0..120, |p| whole.push(p.to_vec()));
        let mut parts = Vec::new();
        for r in [0..7, 7..50, 50..50, 50..120] {
            for_each_in_range(5, r, |p| parts.push(p.to_vec()));
        }
        assert_eq!(whole, parts);
    }
}
