//! Brute-force oracles shared by the integration tests. Nothing here calls
//! into the library's recurrences.

#![allow(dead_code)]

/// Every set partition of `{0..n}` as a restricted growth string: entry `i`
/// is the block index of element `i`.
pub fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn extend(prefix: &mut Vec<usize>, n: usize, blocks: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for b in 0..=blocks {
            prefix.push(b);
            extend(prefix, n, blocks.max(b + 1), out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), n, 0, &mut out);
    out
}

/// Partitions of `{1..n}` into `k` blocks with `1..r` in distinct blocks.
pub fn count_partitions(n: usize, k: usize, r: usize) -> u64 {
    set_partitions(n)
        .iter()
        .filter(|p| p.iter().max().map_or(0, |m| m + 1) == k)
        .filter(|p| {
            let mut firsts = p[..r.min(n)].to_vec();
            firsts.sort_unstable();
            firsts.dedup();
            firsts.len() == r.min(n)
        })
        .count() as u64
}

/// `Σ_{k=0}^m k^n` in integers, `0^0 = 1`.
pub fn power_sum(n: u32, m: u64) -> u128 {
    (0..=m).map(|k| (k as u128).pow(n)).sum()
}
