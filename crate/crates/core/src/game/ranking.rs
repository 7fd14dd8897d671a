//! Ranking of cop multisets.
//!
//! A sorted multiset `c0 ≤ c1 ≤ … ≤ c(j-1)` over `0..n` maps to the strictly
//! increasing combination `xi = ci + i` over `0..n+j-1`, ranked in colex
//! order as `Σ C(xi, i+1)`. Ranks of `j`-multisets are dense in
//! `0..C(n+j-1, j)`.

use alloc::vec;
use alloc::vec::Vec;

#[derive(Clone, Debug)]
pub struct MultisetRanker {
    n: usize,
    max_size: usize,
    /// `binom[a * (max_size + 1) + b] = C(a, b)` for `a < n + max_size`.
    binom: Vec<u64>,
}

impl MultisetRanker {
    pub fn new(n: usize, max_size: usize) -> Self {
        let rows = n + max_size;
        let cols = max_size + 1;
        let mut binom = vec![0u64; rows * cols];
        for a in 0..rows {
            binom[a * cols] = 1;
            for b in 1..cols.min(a + 1) {
                let up = binom[(a - 1) * cols + b - 1];
                let left = if b < a { binom[(a - 1) * cols + b] } else { 0 };
                binom[a * cols + b] = up.saturating_add(left);
            }
        }
        MultisetRanker { n, max_size, binom }
    }

    #[inline]
    fn choose(&self, a: usize, b: usize) -> u64 {
        if b > a {
            0
        } else {
            self.binom[a * (self.max_size + 1) + b]
        }
    }

    /// Number of multisets of size `size`, saturating.
    pub fn count(&self, size: usize) -> u64 {
        assert!(size <= self.max_size);
        if size == 0 {
            return 1;
        }
        if self.n == 0 {
            return 0;
        }
        self.choose(self.n + size - 1, size)
    }

    #[inline]
    pub fn rank(&self, sorted: &[u32]) -> usize {
        debug_assert!(sorted.windows(2).all(|w| w[0] <= w[1]));
        let mut r = 0u64;
        for (i, &c) in sorted.iter().enumerate() {
            r += self.choose(c as usize + i, i + 1);
        }
        r as usize
    }

    pub fn unrank(&self, mut rank: usize, out: &mut [u32]) {
        let size = out.len();
        let mut hi = self.n + size - 1;
        for i in (0..size).rev() {
            // Largest x with C(x, i+1) ≤ rank; C(i, i+1) = 0 bounds the scan.
            let mut x = hi;
            while self.choose(x, i + 1) as usize > rank {
                x -= 1;
            }
            rank -= self.choose(x, i + 1) as usize;
            out[i] = (x - i) as u32;
            hi = x;
        }
    }
}

/// Saturating `C(n + size - 1, size)` without building a table.
pub fn multiset_count(n: usize, size: usize) -> u64 {
    if size == 0 {
        return 1;
    }
    if n == 0 {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..size as u128 {
        acc = acc * (n as u128 + i) / (i + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}
