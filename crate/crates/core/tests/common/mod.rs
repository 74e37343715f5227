//! Reference computations that avoid the library's field tables and search.
#![allow(dead_code)]

/// Powers of a root of a monic modulus, as trit vectors built by
/// shift-and-reduce.
pub struct PowerTable {
    pub m: usize,
    pub n: usize,
    pub pw: Vec<Vec<u8>>,
}

/// Low coefficients `c0..c_(m-1)` of the default moduli for small `m`.
pub fn default_low(m: usize) -> Vec<u8> {
    match m {
        2 => vec![2, 1],
        3 => vec![1, 2, 0],
        4 => vec![2, 0, 0, 2],
        5 => vec![1, 2, 0, 0, 0],
        _ => panic!("no reference modulus for m={m}"),
    }
}

impl PowerTable {
    pub fn new(low: &[u8]) -> PowerTable {
        let m = low.len();
        let n = 3usize.pow(m as u32) - 1;
        let mut cur = vec![0u8; m];
        cur[0] = 1;
        let mut pw = Vec::with_capacity(n);
        for _ in 0..n {
            pw.push(cur.clone());
            let top = cur[m - 1];
            let mut next = vec![0u8; m];
            for i in (1..m).rev() {
                next[i] = cur[i - 1];
            }
            for i in 0..m {
                next[i] = (next[i] + 3 * 3 - top * low[i] % 3) % 3;
            }
            cur = next;
        }
        assert_eq!(cur[0], 1, "modulus is not primitive");
        assert!(cur[1..].iter().all(|&c| c == 0), "modulus is not primitive");
        PowerTable { m, n, pw }
    }

    pub fn for_m(m: usize) -> PowerTable {
        PowerTable::new(&default_low(m))
    }

    /// Syndrome column of coordinate `p` for the zero exponents.
    pub fn column(&self, p: usize, zeros: &[usize]) -> Vec<u8> {
        zeros
            .iter()
            .flat_map(|&z| self.pw[(p * z) % self.n].iter().copied())
            .collect()
    }

    /// Whether some word of weight exactly `w` has all syndromes zero,
    /// trying every support and every sign pattern.
    pub fn brute_force_exists(&self, zeros: &[usize], w: usize) -> bool {
        const L: usize = 16;
        let cols: Vec<[u8; L]> = (0..self.n)
            .map(|p| {
                let c = self.column(p, zeros);
                assert!(c.len() <= L);
                let mut a = [0u8; L];
                a[..c.len()].copy_from_slice(&c);
                a
            })
            .collect();
        fn rec(cols: &[[u8; L]], start: usize, left: usize, acc: &[u8; L]) -> bool {
            if left == 0 {
                return acc.iter().all(|&v| v == 0);
            }
            for p in start..=cols.len() - left {
                for c in [1u8, 2] {
                    let mut next = *acc;
                    for (a, &b) in next.iter_mut().zip(&cols[p]) {
                        *a = (*a + c * b) % 3;
                    }
                    if rec(cols, p + 1, left - 1, &next) {
                        return true;
                    }
                }
            }
            false
        }
        rec(&cols, 0, w, &[0u8; L])
    }

    /// Every codeword, by enumerating all `3^n` vectors. Only for `n = 8`.
    pub fn codebook(&self, zeros: &[usize]) -> Vec<Vec<u8>> {
        assert!(self.n <= 8);
        let cols: Vec<Vec<u8>> = (0..self.n).map(|p| self.column(p, zeros)).collect();
        let mut out = Vec::new();
        for idx in 0..3usize.pow(self.n as u32) {
            let mut v = idx;
            let word: Vec<u8> = (0..self.n)
                .map(|_| {
                    let d = (v % 3) as u8;
                    v /= 3;
                    d
                })
                .collect();
            let mut acc = vec![0u8; cols[0].len()];
            for (p, &c) in word.iter().enumerate() {
                for (a, &b) in acc.iter_mut().zip(&cols[p]) {
                    *a = (*a + c * b) % 3;
                }
            }
            if acc.iter().all(|&a| a == 0) {
                out.push(word);
            }
        }
        out
    }
}

/// `{j 3^i mod n}`.
pub fn coset_of(j: usize, m: usize) -> Vec<usize> {
    let n = 3usize.pow(m as u32) - 1;
    let mut out: Vec<usize> = (0..m).map(|i| j * 3usize.pow(i as u32) % n).collect();
    out.sort_unstable();
    out.dedup();
    out
}
