//! Residue combinatorics on Z_n: base-q expansions and digit weights,
//! cyclotomic cosets, and modular inverses.

use crate::error::{Error, Result};

/// Base-q digits of a residue, least significant first, zero-padded to
/// exactly m digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Expansion {
    digits: Vec<u8>,
}

impl Expansion {
    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Reconstruct the residue the digits came from.
    pub fn value(&self, q: u32) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * q as u64 + d as u64)
    }
}

/// Base-q expansion of i, for 0 <= i <= q^m - 1.
pub fn expansion(i: u64, q: u32, m: u32) -> Result<Expansion> {
    let bound = (q as u64).pow(m);
    if i >= bound {
        return Err(Error::OutOfRange { value: i, bound });
    }
    let mut digits = Vec::with_capacity(m as usize);
    let mut v = i;
    for _ in 0..m {
        digits.push((v % q as u64) as u8);
        v /= q as u64;
    }
    Ok(Expansion { digits })
}

/// Sum of the base-q digits of i (the q-weight).
pub fn q_weight(i: u64, q: u32, m: u32) -> Result<u32> {
    let bound = (q as u64).pow(m);
    if i >= bound {
        return Err(Error::OutOfRange { value: i, bound });
    }
    Ok(digit_sum(i, q))
}

#[inline]
pub(crate) fn digit_sum(mut i: u64, q: u32) -> u32 {
    let mut s = 0;
    while i > 0 {
        s += (i % q as u64) as u32;
        i /= q as u64;
    }
    s
}

/// The orbit of a residue under multiplication by q mod n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coset {
    leader: u32,
    members: Vec<u32>,
}

impl Coset {
    /// Smallest member; the canonical representative.
    pub fn leader(&self) -> u32 {
        self.leader
    }

    /// All members, sorted ascending.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    /// l_s: the orbit size.
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// The q-cyclotomic coset of s mod n: {s, sq, sq^2, ...} mod n.
pub fn cyclotomic_coset(s: u32, q: u32, n: u32) -> Result<Coset> {
    check_coprime_q(q, n)?;
    if s >= n {
        return Err(Error::OutOfRange {
            value: s as u64,
            bound: n as u64,
        });
    }
    let mut members = vec![s];
    let mut t = (s as u64 * q as u64 % n as u64) as u32;
    while t != s {
        members.push(t);
        t = (t as u64 * q as u64 % n as u64) as u32;
    }
    members.sort_unstable();
    Ok(Coset {
        leader: members[0],
        members,
    })
}

/// Partition Z_n into q-cyclotomic cosets, ordered by leader.
pub fn all_cosets(q: u32, n: u32) -> Result<Vec<Coset>> {
    check_coprime_q(q, n)?;
    let mut seen = vec![false; n as usize];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s as usize] {
            continue;
        }
        let coset = cyclotomic_coset(s, q, n)?;
        for &v in coset.members() {
            seen[v as usize] = true;
        }
        out.push(coset);
    }
    Ok(out)
}

fn check_coprime_q(q: u32, n: u32) -> Result<()> {
    if n == 0 || gcd(q as u64, n as u64) != 1 {
        return Err(Error::QDividesN { q, n });
    }
    Ok(())
}

/// The residue u with u*v = 1 (mod n), by the extended Euclid algorithm.
pub fn mod_inverse(v: u64, n: u64) -> Result<u64> {
    if n == 0 || gcd(v % n, n) != 1 {
        return Err(Error::NotCoprime { v, n });
    }
    let (mut r0, mut r1) = (n as i128, (v % n) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (t0, t1) = (t1, t0 - quot * t1);
    }
    debug_assert_eq!(r0, 1);
    Ok(t0.rem_euclid(n as i128) as u64)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
