//! Finite fields GF(q^m) for prime q, in discrete-log representation.
//!
//! A [`FieldSpec`] owns exp/log tables indexed by powers of a designated
//! primitive element alpha, plus a Zech-logarithm table so that addition
//! stays in the exponent domain. Elements are coordinate vectors over
//! GF(q) packed into a `u32` as a base-q integer (digit i = coefficient
//! of x^i), which keeps the base-field embedding trivial: packed values
//! below q are exactly the base-field constants.

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::residues;

/// Sentinel for "no logarithm" (the zero element) in `log` and `zech`.
const NONE32: u32 = u32::MAX;

/// A nonzero element is alpha^e; exponents are kept reduced mod q^m - 1.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Zero,
    Pow(u32),
}

impl FieldElement {
    pub fn is_zero(self) -> bool {
        matches!(self, FieldElement::Zero)
    }

    /// Exponent of alpha, or `None` for zero.
    pub fn exponent(self) -> Option<u32> {
        match self {
            FieldElement::Zero => None,
            FieldElement::Pow(e) => Some(e),
        }
    }
}

/// A concrete model of GF(q^m): modulus polynomial, primitive element,
/// and the exp/log/Zech tables for its multiplicative group.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    q: u32,
    m: u32,
    /// q^m - 1, the order of the multiplicative group (and code length n).
    order: u32,
    /// Monic degree-m modulus, ascending coefficients, length m + 1.
    modulus: Vec<u8>,
    /// Packed coordinates of the designated primitive element alpha.
    alpha_packed: u32,
    /// exp[e] = packed coordinates of alpha^e, length `order`.
    exp: Vec<u32>,
    /// log[packed] = e with alpha^e = packed; log[0] is a sentinel.
    log: Vec<u32>,
    /// zech[e] = log(1 + alpha^e), or sentinel when 1 + alpha^e = 0.
    zech: Vec<u32>,
}

/// Primitive monic polynomials used when the caller does not supply a
/// modulus: the lexicographically least primitive polynomial per (q, m),
/// ordering candidates by their packed base-q coefficient value.
/// `default_modulus_search` reproduces every entry; a test pins that.
const DEFAULT_MODULI: &[(u32, u32, &[u8])] = &[
    (3, 1, &[1, 1]),
    (3, 2, &[2, 1, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 1, 0, 0, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 1, 0, 0, 0, 0, 1]),
    (3, 7, &[1, 2, 1, 0, 0, 0, 0, 1]),
    (3, 8, &[2, 0, 0, 1, 0, 0, 0, 0, 1]),
    (3, 9, &[1, 0, 1, 2, 0, 0, 0, 0, 0, 1]),
    (3, 10, &[2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (3, 11, &[1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 12, &[2, 2, 2, 1, 2, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 13, &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 1, &[2, 1]),
    (5, 2, &[2, 1, 1]),
    (5, 3, &[2, 3, 0, 1]),
    (5, 4, &[2, 2, 1, 0, 1]),
    (5, 5, &[2, 4, 0, 0, 0, 1]),
    (5, 6, &[2, 1, 0, 0, 0, 0, 1]),
];

impl FieldSpec {
    /// Build GF(q^m) with the built-in default modulus for (q, m).
    ///
    /// For (q, m) outside the shipped table the lexicographically least
    /// primitive polynomial is searched at construction time.
    pub fn new(q: u32, m: u32) -> Result<FieldSpec> {
        check_parameters(q, m)?;
        let modulus = match DEFAULT_MODULI
            .iter()
            .find(|&&(dq, dm, _)| dq == q && dm == m)
        {
            Some(&(_, _, coeffs)) => coeffs.to_vec(),
            None => default_modulus_search(q, m)?,
        };
        Self::build(q, m, modulus, true)
    }

    /// Build GF(q^m) over a caller-supplied monic irreducible modulus.
    ///
    /// If x is not primitive mod the modulus, the smallest primitive
    /// element (by packed coordinate value) is searched and designated
    /// alpha instead.
    pub fn with_modulus(q: u32, m: u32, modulus: &[u8]) -> Result<FieldSpec> {
        check_parameters(q, m)?;
        Self::build(q, m, validate_modulus(q, m, modulus)?, true)
    }

    /// Like [`FieldSpec::with_modulus`] but fails with
    /// [`Error::NonPrimitiveModulusWithoutFallback`] instead of searching
    /// for a primitive element when x is not primitive.
    pub fn with_modulus_strict(q: u32, m: u32, modulus: &[u8]) -> Result<FieldSpec> {
        check_parameters(q, m)?;
        Self::build(q, m, validate_modulus(q, m, modulus)?, false)
    }

    fn build(q: u32, m: u32, modulus: Vec<u8>, allow_fallback: bool) -> Result<FieldSpec> {
        let size = (q as u64).pow(m); // fits: check_parameters bounds q^m
        let order = (size - 1) as u32;

        let mut exp = vec![0u32; order as usize];
        let mut log = vec![NONE32; size as usize];

        // First attempt: alpha = x. Powers of x are a digit shift plus a
        // reduction by the modulus, so the whole table is one pass.
        let mut digits = vec![0u8; m as usize];
        let x_primitive = fill_by_x_powers(q, m, &modulus, &mut digits, &mut exp, &mut log);

        let alpha_packed;
        if x_primitive {
            alpha_packed = exp[if order == 1 { 0 } else { 1 }];
        } else {
            if !allow_fallback {
                return Err(Error::NonPrimitiveModulusWithoutFallback);
            }
            alpha_packed = smallest_primitive_packed(q, m, &modulus, order)?;
            exp.iter_mut().for_each(|v| *v = 0);
            log.iter_mut().for_each(|v| *v = NONE32);
            let mut cur = 1u32;
            for e in 0..order {
                debug_assert_eq!(log[cur as usize], NONE32);
                exp[e as usize] = cur;
                log[cur as usize] = e;
                cur = mul_packed(q, m, &modulus, cur, alpha_packed);
            }
            debug_assert_eq!(cur, 1);
        }

        // Zech logarithms: zech[e] = log(1 + alpha^e).
        let mut zech = vec![NONE32; order as usize];
        for e in 0..order as usize {
            let s = add_packed(q, m, exp[e], 1);
            zech[e] = if s == 0 { NONE32 } else { log[s as usize] };
        }

        let spec = FieldSpec {
            q,
            m,
            order,
            modulus,
            alpha_packed,
            exp,
            log,
            zech,
        };
        spec.assert_alpha_order()?;
        Ok(spec)
    }

    /// Exact primitivity proof: alpha^((q^m-1)/p) != 1 for every prime p
    /// dividing q^m - 1.
    fn assert_alpha_order(&self) -> Result<()> {
        for p in prime_factors(self.order as u64) {
            let e = (self.order as u64 / p) as u32;
            if self.exp[e as usize] == 1 && self.order > 1 {
                return Err(Error::InvalidModulus(format!(
                    "designated element has order dividing (q^m-1)/{p}"
                )));
            }
        }
        Ok(())
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// q^m - 1: the multiplicative group order and the code length n.
    pub fn order(&self) -> u32 {
        self.order
    }

    /// Modulus coefficients, ascending degree, length m + 1.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// Modulus as a comma-separated ascending coefficient list.
    pub fn modulus_string(&self) -> String {
        format_coeff_list(&self.modulus)
    }

    /// The designated primitive element.
    pub fn alpha(&self) -> FieldElement {
        if self.order == 1 {
            FieldElement::Pow(0)
        } else {
            FieldElement::Pow(1)
        }
    }

    /// Packed coordinates of alpha (mostly useful for diagnostics).
    pub fn alpha_packed(&self) -> u32 {
        self.alpha_packed
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement::Zero
    }

    pub fn one(&self) -> FieldElement {
        FieldElement::Pow(0)
    }

    /// alpha^e with any signed exponent.
    pub fn alpha_pow(&self, e: i64) -> FieldElement {
        FieldElement::Pow(e.rem_euclid(self.order as i64) as u32)
    }

    /// Element from packed base-q coordinates.
    pub fn element(&self, packed: u32) -> FieldElement {
        if packed == 0 {
            FieldElement::Zero
        } else {
            debug_assert!((packed as usize) < self.log.len());
            FieldElement::Pow(self.log[packed as usize])
        }
    }

    /// Embed a base-field digit c in 0..q.
    pub fn from_base(&self, c: u32) -> FieldElement {
        debug_assert!(c < self.q);
        self.element(c)
    }

    /// Packed base-q coordinates of an element (0 for zero).
    pub fn packed(&self, a: FieldElement) -> u32 {
        match a {
            FieldElement::Zero => 0,
            FieldElement::Pow(e) => self.exp[e as usize],
        }
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match (a, b) {
            (FieldElement::Pow(i), FieldElement::Pow(j)) => {
                FieldElement::Pow(((i as u64 + j as u64) % self.order as u64) as u32)
            }
            _ => FieldElement::Zero,
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        match (a, b) {
            (FieldElement::Zero, x) | (x, FieldElement::Zero) => x,
            (FieldElement::Pow(i), FieldElement::Pow(j)) => {
                // a + b = alpha^i (1 + alpha^(j-i))
                let d = ((j as u64 + self.order as u64 - i as u64) % self.order as u64) as u32;
                match self.zech[d as usize] {
                    NONE32 => FieldElement::Zero,
                    z => FieldElement::Pow(((i as u64 + z as u64) % self.order as u64) as u32),
                }
            }
        }
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        match a {
            FieldElement::Zero => FieldElement::Zero,
            FieldElement::Pow(i) => {
                let minus_one = self.log[(self.q - 1) as usize];
                FieldElement::Pow(((i as u64 + minus_one as u64) % self.order as u64) as u32)
            }
        }
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        match a {
            FieldElement::Zero => Err(Error::DivisionByZero),
            FieldElement::Pow(i) => Ok(FieldElement::Pow((self.order - i) % self.order)),
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: FieldElement, k: i64) -> Result<FieldElement> {
        match a {
            FieldElement::Zero => match k {
                0 => Ok(FieldElement::Pow(0)),
                k if k > 0 => Ok(FieldElement::Zero),
                _ => Err(Error::DivisionByZero),
            },
            FieldElement::Pow(i) => {
                let k = k.rem_euclid(self.order as i64);
                let e = (i as i64 * k).rem_euclid(self.order as i64);
                Ok(FieldElement::Pow(e as u32))
            }
        }
    }

    /// Minimal polynomial of alpha^j over GF(q): the product of
    /// (x - alpha^i) over the q-cyclotomic coset of j mod q^m - 1.
    /// Monic of degree |coset|, with all coefficients in the base field.
    pub fn minimal_polynomial(&self, j: u32) -> Result<Poly> {
        if j >= self.order {
            return Err(Error::OutOfRange {
                value: j as u64,
                bound: self.order as u64,
            });
        }
        let coset = residues::cyclotomic_coset(j, self.q, self.order)?;
        let mut mp: Vec<FieldElement> = vec![self.one()];
        for &i in coset.members() {
            let root = FieldElement::Pow(i);
            let mut next = vec![FieldElement::Zero; mp.len() + 1];
            for (d, &c) in mp.iter().enumerate() {
                next[d + 1] = self.add(next[d + 1], c);
                next[d] = self.sub(next[d], self.mul(root, c));
            }
            mp = next;
        }
        let mut digits = Vec::with_capacity(mp.len());
        for c in mp {
            let packed = self.packed(c);
            assert!(
                packed < self.q,
                "minimal polynomial coefficient escaped the base field"
            );
            digits.push(packed as u8);
        }
        Ok(Poly::from_coeffs(self.q, digits))
    }
}

fn check_parameters(q: u32, m: u32) -> Result<()> {
    if !is_prime(q as u64) {
        return Err(Error::NonPrimeQ(q as u64));
    }
    if m == 0 {
        return Err(Error::InvalidModulus(
            "extension degree m must be >= 1".into(),
        ));
    }
    match (q as u64).checked_pow(m) {
        Some(size) if size <= 1 << 31 => Ok(()),
        _ => Err(Error::FieldTooLarge { q: q as u64, m }),
    }
}

fn validate_modulus(q: u32, m: u32, modulus: &[u8]) -> Result<Vec<u8>> {
    if modulus.len() != m as usize + 1 {
        return Err(Error::InvalidModulus(format!(
            "expected {} coefficients for degree {m}, got {}",
            m + 1,
            modulus.len()
        )));
    }
    if modulus.iter().any(|&c| c as u32 >= q) {
        return Err(Error::InvalidModulus(format!(
            "coefficients must lie in 0..{q}"
        )));
    }
    if modulus[m as usize] != 1 {
        return Err(Error::InvalidModulus("modulus must be monic".into()));
    }
    let poly = Poly::from_coeffs(q, modulus.to_vec());
    if !is_irreducible(&poly) {
        return Err(Error::ReducibleModulus { q });
    }
    Ok(modulus.to_vec())
}

/// Fill exp/log with powers of x; returns false (tables partially filled)
/// if x repeats before exhausting the group, i.e. x is not primitive.
fn fill_by_x_powers(
    q: u32,
    m: u32,
    modulus: &[u8],
    digits: &mut [u8],
    exp: &mut [u32],
    log: &mut [u32],
) -> bool {
    digits.fill(0);
    digits[0] = 1;
    let order = exp.len() as u32;
    for e in 0..order {
        let packed = pack(q, digits);
        if log[packed as usize] != NONE32 {
            return false;
        }
        exp[e as usize] = packed;
        log[packed as usize] = e;
        // multiply by x: shift digits up, fold x^m = -modulus[..m] back in
        let carry = digits[m as usize - 1] as u32;
        for i in (1..m as usize).rev() {
            digits[i] = digits[i - 1];
        }
        digits[0] = 0;
        if carry != 0 {
            for i in 0..m as usize {
                let fold = carry * ((q - modulus[i] as u32) % q);
                digits[i] = ((digits[i] as u32 + fold) % q) as u8;
            }
        }
    }
    true
}

fn pack(q: u32, digits: &[u8]) -> u32 {
    let mut out = 0u64;
    for &d in digits.iter().rev() {
        out = out * q as u64 + d as u64;
    }
    out as u32
}

/// Digit-wise sum of two packed coordinate vectors.
fn add_packed(q: u32, m: u32, mut a: u32, mut b: u32) -> u32 {
    let mut out = 0u64;
    let mut scale = 1u64;
    for _ in 0..m {
        out += (((a % q) + (b % q)) % q) as u64 * scale;
        a /= q;
        b /= q;
        scale *= q as u64;
    }
    out as u32
}

/// Coordinate-vector product mod the modulus (schoolbook); only used on
/// the fallback path where no log table exists yet.
fn mul_packed(q: u32, m: u32, modulus: &[u8], a: u32, b: u32) -> u32 {
    let ad = unpack(q, m, a);
    let bd = unpack(q, m, b);
    let mut prod = vec![0u32; 2 * m as usize];
    for (i, &ai) in ad.iter().enumerate() {
        if ai == 0 {
            continue;
        }
        for (j, &bj) in bd.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai as u32 * bj as u32) % q;
        }
    }
    for d in (m as usize..2 * m as usize).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for i in 0..m as usize {
            let sub = c * modulus[i] as u32 % q;
            prod[d - m as usize + i] = (prod[d - m as usize + i] + q - sub) % q;
        }
    }
    let digits: Vec<u8> = prod[..m as usize].iter().map(|&v| v as u8).collect();
    pack(q, &digits)
}

fn unpack(q: u32, m: u32, mut v: u32) -> Vec<u8> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push((v % q) as u8);
        v /= q;
    }
    out
}

/// Smallest packed value generating the whole multiplicative group.
fn smallest_primitive_packed(q: u32, m: u32, modulus: &[u8], order: u32) -> Result<u32> {
    let factors = prime_factors(order as u64);
    'candidates: for v in 2..=(order as u64) {
        let v = v as u32;
        for &p in &factors {
            if pow_packed(q, m, modulus, v, order as u64 / p) == 1 {
                continue 'candidates;
            }
        }
        return Ok(v);
    }
    Err(Error::InvalidModulus("no primitive element found".into()))
}

fn pow_packed(q: u32, m: u32, modulus: &[u8], base: u32, mut e: u64) -> u32 {
    let mut result = 1u32;
    let mut b = base;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_packed(q, m, modulus, result, b);
        }
        b = mul_packed(q, m, modulus, b, b);
        e >>= 1;
    }
    result
}

/// Rabin irreducibility test for a monic polynomial over GF(q).
pub fn is_irreducible(f: &Poly) -> bool {
    let q = f.q();
    let m = match f.degree() {
        Some(d) if d >= 1 => d as u32,
        _ => return false,
    };
    if f.coeff(0) == 0 && m > 1 {
        return false; // x divides f
    }
    let x = Poly::from_coeffs(q, vec![0, 1]);
    // x^(q^m) == x mod f
    let qe = (q as u64).checked_pow(m).expect("bounded by field budget");
    if x.pow_mod(qe, f) != x.divmod(f).expect("nonzero").1 {
        return false;
    }
    for p in prime_factors(m as u64) {
        let e = (q as u64).pow((m as u64 / p) as u32);
        let xq = x.pow_mod(e, f);
        let diff = xq.sub(&x);
        if f.gcd(&diff).degree().is_some_and(|d| d >= 1) {
            return false;
        }
    }
    true
}

/// x primitive mod f? (f assumed irreducible of degree m.)
fn is_x_primitive(f: &Poly, order: u64) -> bool {
    let x = Poly::from_coeffs(f.q(), vec![0, 1]);
    prime_factors(order)
        .into_iter()
        .all(|p| !x.pow_mod(order / p, f).is_one())
}

/// The lexicographically least primitive polynomial for (q, m), ordering
/// monic candidates by the packed base-q value of their coefficients.
pub fn default_modulus_search(q: u32, m: u32) -> Result<Vec<u8>> {
    check_parameters(q, m)?;
    let order = (q as u64).pow(m) - 1;
    for packed in 1..(q as u64).pow(m) {
        let digits = unpack(q, m, packed as u32);
        if digits[0] == 0 {
            continue;
        }
        let mut coeffs = digits;
        coeffs.push(1);
        let f = Poly::from_coeffs(q, coeffs);
        if is_irreducible(&f) && is_x_primitive(&f, order) {
            return Ok(f.coeffs().to_vec());
        }
    }
    Err(Error::InvalidModulus(format!(
        "no primitive polynomial of degree {m} over GF({q})"
    )))
}

/// Parse a comma-separated ascending coefficient list ("1,2,0,1").
pub fn parse_coeff_list(s: &str) -> Result<Vec<u8>> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<u8>()
                .map_err(|_| Error::InvalidModulus(format!("bad coefficient {t:?}")))
        })
        .collect()
}

pub fn format_coeff_list(coeffs: &[u8]) -> String {
    coeffs
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Distinct prime factors by trial division (inputs stay below 2^31).
pub fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
