//! Dense polynomials over GF(q) for prime q.
//!
//! Coefficients are stored ascending with no trailing zeros, so the zero
//! polynomial is the empty vector. Printing uses descending powers with
//! unit coefficients elided ("x^13 + 2x^11 + ... + 1"), and `parse`
//! accepts the same shape back.

use std::fmt;

use crate::error::{Error, Result};
use crate::gf::{FieldElement, FieldSpec};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    q: u32,
    coeffs: Vec<u8>,
}

impl Poly {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    /// Digits must already be reduced mod q.
    pub fn from_coeffs(q: u32, mut coeffs: Vec<u8>) -> Poly {
        debug_assert!(coeffs.iter().all(|&c| (c as u32) < q));
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { q, coeffs }
    }

    /// Checked variant of [`Poly::from_coeffs`] for external input.
    pub fn new(q: u32, coeffs: Vec<u8>) -> Result<Poly> {
        if let Some(&c) = coeffs.iter().find(|&&c| c as u32 >= q) {
            return Err(Error::OutOfRange {
                value: c as u64,
                bound: q as u64,
            });
        }
        Ok(Poly::from_coeffs(q, coeffs))
    }

    pub fn zero(q: u32) -> Poly {
        Poly {
            q,
            coeffs: Vec::new(),
        }
    }

    pub fn one(q: u32) -> Poly {
        Poly::from_coeffs(q, vec![1])
    }

    pub fn constant(q: u32, c: u8) -> Poly {
        Poly::from_coeffs(q, vec![c % q as u8])
    }

    /// c * x^d
    pub fn monomial(q: u32, c: u8, d: usize) -> Poly {
        let mut coeffs = vec![0u8; d + 1];
        coeffs[d] = c % q as u8;
        Poly::from_coeffs(q, coeffs)
    }

    /// x^n - 1 over GF(q).
    pub fn x_pow_minus_one(q: u32, n: usize) -> Poly {
        let mut coeffs = vec![0u8; n + 1];
        coeffs[0] = (q - 1) as u8;
        coeffs[n] = 1;
        Poly::from_coeffs(q, coeffs)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Coefficient of x^i (0 past the degree).
    pub fn coeff(&self, i: usize) -> u8 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u8] {
        &self.coeffs
    }

    /// Number of nonzero coefficients (the Hamming weight as a codeword).
    pub fn weight(&self) -> u32 {
        self.coeffs.iter().filter(|&&c| c != 0).count() as u32
    }

    pub fn add(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.q, other.q);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(((self.coeff(i) as u32 + other.coeff(i) as u32) % self.q) as u8);
        }
        Poly::from_coeffs(self.q, out)
    }

    pub fn neg(&self) -> Poly {
        let q = self.q;
        let out = self
            .coeffs
            .iter()
            .map(|&c| ((q - c as u32) % q) as u8)
            .collect();
        Poly::from_coeffs(q, out)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scalar_mul(&self, s: u8) -> Poly {
        let q = self.q;
        let out = self
            .coeffs
            .iter()
            .map(|&c| (c as u32 * s as u32 % q) as u8)
            .collect();
        Poly::from_coeffs(q, out)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        debug_assert_eq!(self.q, other.q);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.q);
        }
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + a as u32 * b as u32) % self.q;
            }
        }
        Poly::from_coeffs(self.q, out.into_iter().map(|c| c as u8).collect())
    }

    /// Euclidean division: returns (quotient, remainder) with
    /// deg(remainder) < deg(divisor).
    pub fn divmod(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        debug_assert_eq!(self.q, divisor.q);
        if divisor.is_zero() {
            return Err(Error::DivisionByZeroPoly);
        }
        let q = self.q;
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = mod_inv_digit(divisor.coeffs[dd] as u32, q);
        let mut rem: Vec<u32> = self.coeffs.iter().map(|&c| c as u32).collect();
        let mut quot = vec![0u8; self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let c = rem[rem.len() - 1] * lead_inv % q;
            let shift = rem.len() - 1 - dd;
            if c != 0 {
                quot[shift] = c as u8;
                for (i, &di) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] = (rem[shift + i] + q * q - c * di as u32) % q;
                }
            }
            rem.pop();
            while rem.last() == Some(&0) {
                rem.pop();
            }
        }
        Ok((
            Poly::from_coeffs(q, quot),
            Poly::from_coeffs(q, rem.into_iter().map(|c| c as u8).collect()),
        ))
    }

    /// True when `divisor` divides self exactly.
    pub fn divisible_by(&self, divisor: &Poly) -> bool {
        matches!(self.divmod(divisor), Ok((_, r)) if r.is_zero())
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.divmod(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a
    }

    /// self^e mod m by square and multiply.
    pub fn pow_mod(&self, mut e: u64, m: &Poly) -> Poly {
        let mut result = Poly::one(self.q).divmod(m).expect("nonzero modulus").1;
        let mut base = self.divmod(m).expect("nonzero modulus").1;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base).divmod(m).expect("nonzero modulus").1;
            }
            base = base.mul(&base).divmod(m).expect("nonzero modulus").1;
            e >>= 1;
        }
        result
    }

    /// Scale so the leading coefficient is 1.
    pub fn make_monic(&self) -> Poly {
        match self.coeffs.last() {
            None | Some(&1) => self.clone(),
            Some(&lead) => self.scalar_mul(mod_inv_digit(lead as u32, self.q) as u8),
        }
    }

    /// Monic reversal of the nonzero part: drop the x^t factor, reverse
    /// the remaining coefficients, and normalize monic.
    pub fn reciprocal(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero(self.q);
        }
        let start = self.coeffs.iter().position(|&c| c != 0).expect("nonzero");
        let mut rev: Vec<u8> = self.coeffs[start..].to_vec();
        rev.reverse();
        Poly::from_coeffs(self.q, rev).make_monic()
    }

    /// x^k * self mod (x^n - 1): a cyclic coordinate shift.
    pub fn cyclic_shift(&self, k: usize, n: usize) -> Poly {
        debug_assert!(self.degree().is_none_or(|d| d < n));
        let mut out = vec![0u8; n];
        for (i, &c) in self.coeffs.iter().enumerate() {
            let j = (i + k) % n;
            out[j] = ((out[j] as u32 + c as u32) % self.q) as u8;
        }
        Poly::from_coeffs(self.q, out)
    }

    /// Evaluate at a field element by Horner's rule; base-field
    /// coefficients embed as packed constants.
    pub fn eval_elem(&self, field: &FieldSpec, at: FieldElement) -> FieldElement {
        let mut acc = FieldElement::Zero;
        for &c in self.coeffs.iter().rev() {
            acc = field.add(field.mul(acc, at), field.from_base(c as u32));
        }
        acc
    }

    /// Parse the descending-power display format.
    pub fn parse(q: u32, s: &str) -> Result<Poly> {
        let body = s.trim();
        if body.is_empty() {
            return Err(Error::PolyParse("empty input".into()));
        }
        if body == "0" {
            return Ok(Poly::zero(q));
        }
        let mut acc: Vec<(u8, usize)> = Vec::new();
        for term in body.split('+') {
            let term = term.trim().replace(' ', "");
            if term.is_empty() {
                return Err(Error::PolyParse(format!("empty term in {s:?}")));
            }
            let (coeff_str, exp) = match term.find('x') {
                None => (term.as_str(), 0usize),
                Some(pos) => {
                    let exp = match term[pos + 1..].strip_prefix('^') {
                        None if term[pos + 1..].is_empty() => 1,
                        None => return Err(Error::PolyParse(format!("bad term {term:?}"))),
                        Some(e) => e
                            .parse::<usize>()
                            .map_err(|_| Error::PolyParse(format!("bad exponent in {term:?}")))?,
                    };
                    (&term[..pos], exp)
                }
            };
            let coeff: u32 = if coeff_str.is_empty() {
                1
            } else {
                coeff_str
                    .parse()
                    .map_err(|_| Error::PolyParse(format!("bad coefficient in {term:?}")))?
            };
            if coeff >= q {
                return Err(Error::PolyParse(format!(
                    "coefficient {coeff} not reduced mod {q}"
                )));
            }
            acc.push((coeff as u8, exp));
        }
        let deg = acc.iter().map(|&(_, e)| e).max().unwrap_or(0);
        let mut coeffs = vec![0u8; deg + 1];
        for (c, e) in acc {
            coeffs[e] = ((coeffs[e] as u32 + c as u32) % q) as u8;
        }
        Ok(Poly::from_coeffs(q, coeffs))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for d in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[d];
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, d) {
                (c, 0) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (c, 1) => write!(f, "{c}x")?,
                (1, d) => write!(f, "x^{d}")?,
                (c, d) => write!(f, "{c}x^{d}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[GF({})]({})", self.q, self)
    }
}

/// Inverse of a nonzero digit mod prime q via Fermat.
fn mod_inv_digit(c: u32, q: u32) -> u32 {
    debug_assert!(c != 0 && c < q);
    let mut result = 1u64;
    let mut base = c as u64;
    let mut e = q - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % q as u64;
        }
        base = base * base % q as u64;
        e >>= 1;
    }
    result as u32
}
