//! p-cyclotomic cosets modulo p^m - 1.

use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CyclotomicCoset {
    p: u64,
    modulus: u64,
    leader: u64,
    members: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn p(&self) -> u64 {
        self.p
    }

    /// p^m - 1.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Smallest member.
    pub fn leader(&self) -> u64 {
        self.leader
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, j: u64) -> bool {
        self.members.binary_search(&(j % self.modulus)).is_ok()
    }
}

fn modulus_of(p: u64, m: u32) -> u64 {
    p.pow(m) - 1
}

/// The orbit of `j` under multiplication by `p` modulo `p^m - 1`.
/// `j` is reduced first.
pub fn coset(p: u64, m: u32, j: u64) -> CyclotomicCoset {
    let modulus = modulus_of(p, m);
    let start = j % modulus;
    let mut members = vec![start];
    let mut cur = (start as u128 * p as u128 % modulus as u128) as u64;
    while cur != start {
        members.push(cur);
        cur = (cur as u128 * p as u128 % modulus as u128) as u64;
    }
    members.sort_unstable();
    CyclotomicCoset {
        p,
        modulus,
        leader: members[0],
        members,
    }
}

/// Leader of the ternary coset containing `j`.
pub fn coset_leader(m: u32, j: u64) -> u64 {
    coset(3, m, j).leader
}

/// Every coset modulo `p^m - 1`, ordered by leader.
pub fn all_cosets(p: u64, m: u32) -> Vec<CyclotomicCoset> {
    let modulus = modulus_of(p, m);
    let mut seen = vec![false; modulus as usize];
    let mut out = Vec::new();
    for j in 0..modulus {
        if seen[j as usize] {
            continue;
        }
        let c = coset(p, m, j);
        for &x in &c.members {
            seen[x as usize] = true;
        }
        out.push(c);
    }
    out
}

/// True iff gcd(e, 3^m - 1) = 2. In that case the coset of `e` must have
/// exactly `m` members; a mismatch is reported as an internal error.
pub fn lemma_zero_check(m: u32, e: u64) -> Result<bool, Error> {
    let n = modulus_of(3, m);
    if e.gcd(&n) != 2 {
        return Ok(false);
    }
    if coset(3, m, e).len() != m as usize {
        return Err(Error::Internal("gcd(e, n) = 2 but |C_e| != m"));
    }
    Ok(true)
}

/// True iff the ternary cosets of `a` and `b` share no member.
pub fn cosets_disjoint(m: u32, a: u64, b: u64) -> bool {
    let ca = coset(3, m, a);
    !coset(3, m, b).members.iter().any(|&x| ca.contains(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let z = coset(3, 3, 0);
        assert_eq!(z.members(), &[0]);
        assert_eq!(coset(3, 5, 160).len(), 5);
        assert_eq!(coset(3, 2, 4).members(), &[4]);
        assert_eq!(coset(3, 3, 1).members(), &[1, 3, 9]);
        assert_eq!(coset(3, 3, 29).leader(), 1);
    }

    #[test]
    fn gcd_two_examples() {
        assert!(lemma_zero_check(5, 116).unwrap());
        assert!(!lemma_zero_check(4, 4).unwrap());
        assert!(lemma_zero_check(6, 362).unwrap());
    }

    #[test]
    fn disjointness() {
        assert!(cosets_disjoint(5, 1, 160));
        assert!(!cosets_disjoint(4, 7, 7));
        assert!(!cosets_disjoint(3, 1, 3));
    }

    #[test]
    fn all_cosets_small() {
        let cs = all_cosets(3, 2);
        let leaders: Vec<u64> = cs.iter().map(|c| c.leader()).collect();
        assert_eq!(leaders, [0, 1, 2, 4, 5]);
        assert_eq!(cs.iter().map(|c| c.len()).sum::<usize>(), 8);
    }
}
