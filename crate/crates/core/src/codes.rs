//! Cyclic codes of length n = q^m - 1 whose defining sets are unions of
//! digit-weight classes.
//!
//! For 0 <= i <= 3 the class T_i collects the residues 1 <= j <= n-1
//! whose base-q digit sum is congruent to i mod 4. A pair of distinct
//! classes yields the defining set T_{i1} u T_{i2}, the generator
//! polynomial is the product of the minimal polynomials of alpha^j over
//! the coset leaders j of that set, and the dimension is n - |T|.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::poly::Poly;
use crate::residues::{cyclotomic_coset, digit_sum};

/// An unordered pair of distinct weight classes in 0..=3.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightPair {
    i1: u8,
    i2: u8,
}

/// The four pairs whose codes carry proven distance lower bounds on
/// the order of sqrt(n).
pub const ANALYZED_PAIRS: [WeightPair; 4] = [
    WeightPair { i1: 0, i2: 3 },
    WeightPair { i1: 1, i2: 2 },
    WeightPair { i1: 0, i2: 1 },
    WeightPair { i1: 2, i2: 3 },
];

impl WeightPair {
    pub fn new(i1: u8, i2: u8) -> Result<WeightPair> {
        if i1 > 3 {
            return Err(Error::ClassOutOfRange(i1));
        }
        if i2 > 3 {
            return Err(Error::ClassOutOfRange(i2));
        }
        if i1 == i2 {
            return Err(Error::SameClass(i1));
        }
        Ok(WeightPair {
            i1: i1.min(i2),
            i2: i1.max(i2),
        })
    }

    pub fn i1(self) -> u8 {
        self.i1
    }

    pub fn i2(self) -> u8 {
        self.i2
    }

    /// One of the four analyzed families?
    pub fn is_analyzed(self) -> bool {
        ANALYZED_PAIRS.contains(&self)
    }

    /// The complementary pair: the two classes not in self. For the
    /// analyzed families this swaps (0,3) <-> (1,2) and (0,1) <-> (2,3).
    pub fn partner(self) -> Result<WeightPair> {
        if !self.is_analyzed() {
            return Err(Error::UnsupportedPair(self.i1, self.i2));
        }
        let others: Vec<u8> = (0..4).filter(|i| *i != self.i1 && *i != self.i2).collect();
        WeightPair::new(others[0], others[1])
    }

    /// Parse "i1,i2".
    pub fn parse(s: &str) -> Result<WeightPair> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let bad = || Error::PolyParse(format!("expected a pair like \"0,3\", got {s:?}"));
        if parts.len() != 2 {
            return Err(bad());
        }
        let i1: u8 = parts[0].parse().map_err(|_| bad())?;
        let i2: u8 = parts[1].parse().map_err(|_| bad())?;
        WeightPair::new(i1, i2)
    }
}

impl std::fmt::Display for WeightPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.i1, self.i2)
    }
}

/// A subset of Z_n closed under multiplication by q: the root-exponent
/// set of a cyclic code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefiningSet {
    q: u32,
    n: u32,
    members: Vec<u32>,
    pair: Option<WeightPair>,
}

impl DefiningSet {
    /// Build from explicit members, validating range and closure under
    /// multiplication by q mod n.
    pub fn from_members(q: u32, n: u32, members: Vec<u32>) -> Result<DefiningSet> {
        let mut members = members;
        members.sort_unstable();
        members.dedup();
        if let Some(&v) = members.last() {
            if v >= n {
                return Err(Error::OutOfRange {
                    value: v as u64,
                    bound: n as u64,
                });
            }
        }
        let set = DefiningSet {
            q,
            n,
            members,
            pair: None,
        };
        for &j in &set.members {
            let image = (j as u64 * q as u64 % n as u64) as u32;
            if !set.contains(image) {
                return Err(Error::NotCosetClosed { witness: j });
            }
        }
        Ok(set)
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Sorted members.
    pub fn members(&self) -> &[u32] {
        &self.members
    }

    pub fn contains(&self, j: u32) -> bool {
        self.members.binary_search(&j).is_ok()
    }

    /// Weight-class provenance, when derived from one.
    pub fn pair(&self) -> Option<WeightPair> {
        self.pair
    }

    pub(crate) fn with_pair(mut self, pair: WeightPair) -> DefiningSet {
        self.pair = Some(pair);
        self
    }

    /// Coset leaders (minimum of each cyclotomic coset meeting the set).
    pub fn leaders(&self) -> Vec<u32> {
        let mut leaders = Vec::new();
        for &j in &self.members {
            let mut min = j;
            let mut t = (j as u64 * self.q as u64 % self.n as u64) as u32;
            while t != j {
                min = min.min(t);
                t = (t as u64 * self.q as u64 % self.n as u64) as u32;
            }
            if min == j {
                leaders.push(j);
            }
        }
        leaders
    }

    /// Defining set of the dual code: the negation mod n of the
    /// complement of self in Z_n.
    pub fn complement_negated(&self) -> DefiningSet {
        let mut members = Vec::with_capacity(self.n as usize - self.members.len());
        for j in 0..self.n {
            if !self.contains(j) {
                members.push((self.n - j) % self.n);
            }
        }
        members.sort_unstable();
        DefiningSet {
            q: self.q,
            n: self.n,
            members,
            pair: self.pair,
        }
    }

    /// Union of two sets over the same (q, n).
    pub fn union(&self, other: &DefiningSet) -> DefiningSet {
        debug_assert_eq!((self.q, self.n), (other.q, other.n));
        let mut members = self.members.clone();
        members.extend_from_slice(&other.members);
        members.sort_unstable();
        members.dedup();
        DefiningSet {
            q: self.q,
            n: self.n,
            members,
            pair: None,
        }
    }
}

/// T_i for one class: residues 1 <= j <= n-1 with digit weight = i mod 4.
pub fn weight_class_set(i: u8, q: u32, m: u32) -> Result<DefiningSet> {
    if i > 3 {
        return Err(Error::ClassOutOfRange(i));
    }
    let n = checked_order(q, m)?;
    let members: Vec<u32> = (1..n)
        .filter(|&j| digit_sum(j as u64, q) % 4 == i as u32)
        .collect();
    // closed by construction: digit weights are constant on cosets
    Ok(DefiningSet {
        q,
        n,
        members,
        pair: None,
    })
}

/// T_{i1} u T_{i2} for a pair of classes.
pub fn weight_pair_set(pair: WeightPair, q: u32, m: u32) -> Result<DefiningSet> {
    let n = checked_order(q, m)?;
    let members: Vec<u32> = (1..n)
        .filter(|&j| {
            let w = digit_sum(j as u64, q) % 4;
            w == pair.i1 as u32 || w == pair.i2 as u32
        })
        .collect();
    Ok(DefiningSet {
        q,
        n,
        members,
        pair: Some(pair),
    })
}

fn checked_order(q: u32, m: u32) -> Result<u32> {
    match (q as u64).checked_pow(m) {
        Some(size) if size <= 1 << 31 => Ok((size - 1) as u32),
        _ => Err(Error::FieldTooLarge { q: q as u64, m }),
    }
}

/// Closed form for |T_i| in the ternary case, odd m:
/// every class has (3^m - 3)/4 residues except one that carries one
/// extra (T_1 when m = 1 mod 4, T_3 when m = 3 mod 4).
pub fn ti_cardinality_closed_form(i: u8, m: u32) -> Result<u64> {
    if i > 3 {
        return Err(Error::ClassOutOfRange(i));
    }
    if m % 2 == 0 || m < 3 {
        return Err(Error::EvenM(m));
    }
    let base = (3u64.pow(m) - 3) / 4;
    let bumped = if m % 4 == 1 { 1 } else { 3 };
    Ok(if i == bumped { base + 1 } else { base })
}

/// Dimension of the family code (or its dual) from the closed forms,
/// ternary, odd m >= 3.
pub fn theorem_dimension(pair: WeightPair, m: u32, dual: bool) -> Result<u64> {
    if !pair.is_analyzed() {
        return Err(Error::UnsupportedPair(pair.i1, pair.i2));
    }
    if m % 2 == 0 || m < 3 {
        return Err(Error::EvenM(m));
    }
    let n = 3u64.pow(m) - 1;
    let low_pair = pair == ANALYZED_PAIRS[0] || pair == ANALYZED_PAIRS[3]; // (0,3), (2,3)
    let primal = match (low_pair, m % 4) {
        (true, 3) | (false, 1) => n / 2,
        _ => (n + 2) / 2,
    };
    Ok(if dual { n - primal } else { primal })
}

/// How a code was obtained; carried for labeling and serialization.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeKind {
    WeightFamily(WeightPair),
    DualOf(WeightPair),
    ComplementOf(WeightPair),
    Custom,
}

/// A cyclic code of length n = q^m - 1 with its generator polynomial.
#[derive(Debug, Clone)]
pub struct CyclicCode {
    field: Arc<FieldSpec>,
    kind: CodeKind,
    defining_set: DefiningSet,
    generator: Poly,
    k: u32,
}

impl CyclicCode {
    /// The code for a weight-class pair over the given field.
    pub fn from_pair(field: Arc<FieldSpec>, pair: WeightPair) -> Result<CyclicCode> {
        let set = weight_pair_set(pair, field.q(), field.m())?;
        let mut code = CyclicCode::from_defining_set(field, set)?;
        code.kind = CodeKind::WeightFamily(pair);
        Ok(code)
    }

    /// The code with an arbitrary (coset-closed) defining set.
    pub fn from_defining_set(field: Arc<FieldSpec>, set: DefiningSet) -> Result<CyclicCode> {
        if set.n() != field.order() || set.q() != field.q() {
            return Err(Error::FieldMismatch {
                expected_q: set.q(),
                expected_m: field.m(),
            });
        }
        let mut generator = Poly::one(field.q());
        for leader in set.leaders() {
            generator = generator.mul(&field.minimal_polynomial(leader)?);
        }
        assert_eq!(
            generator.degree().unwrap_or(0),
            set.len(),
            "generator degree must equal the defining set size"
        );
        let k = field.order() - set.len() as u32;
        Ok(CyclicCode {
            field,
            kind: CodeKind::Custom,
            defining_set: set,
            generator,
            k,
        })
    }

    pub fn field(&self) -> &Arc<FieldSpec> {
        &self.field
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn m(&self) -> u32 {
        self.field.m()
    }

    /// Code length n = q^m - 1.
    pub fn n(&self) -> u32 {
        self.field.order()
    }

    /// Dimension k = n - |T| = n - deg(generator).
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn kind(&self) -> CodeKind {
        self.kind
    }

    pub fn defining_set(&self) -> &DefiningSet {
        &self.defining_set
    }

    pub fn generator(&self) -> &Poly {
        &self.generator
    }

    /// Weight-class provenance, if any.
    pub fn pair(&self) -> Option<WeightPair> {
        match self.kind {
            CodeKind::WeightFamily(p) | CodeKind::DualOf(p) | CodeKind::ComplementOf(p) => Some(p),
            CodeKind::Custom => self.defining_set.pair(),
        }
    }

    /// True when the parameters fall outside the analyzed families
    /// (excluded pairs, or even m): constructible, but none of the proven
    /// bounds apply.
    pub fn outside_analyzed_range(&self) -> bool {
        let pair_ok = self.pair().is_some_and(WeightPair::is_analyzed);
        !pair_ok || self.m() % 2 == 0
    }

    /// The dual code: generator is the monic reciprocal of the check
    /// polynomial h = (x^n - 1)/g; defining set is the negated complement.
    pub fn dual(&self) -> CyclicCode {
        let n = self.n() as usize;
        let xn1 = Poly::x_pow_minus_one(self.q(), n);
        let (h, rem) = xn1.divmod(&self.generator).expect("generator is nonzero");
        assert!(rem.is_zero(), "generator must divide x^n - 1");
        let generator = h.reciprocal();
        let defining_set = self.defining_set.complement_negated();
        assert_eq!(generator.degree().unwrap_or(0), defining_set.len());
        let kind = match self.kind {
            CodeKind::WeightFamily(p) => CodeKind::DualOf(p),
            CodeKind::DualOf(p) => CodeKind::WeightFamily(p),
            _ => CodeKind::Custom,
        };
        CyclicCode {
            field: Arc::clone(&self.field),
            kind,
            defining_set,
            generator,
            k: self.n() - self.k,
        }
    }

    /// The complement code: generator (x - 1) * g_partner, where the
    /// partner pair covers the remaining two weight classes. Defined for
    /// the analyzed families; it has the dual's parameters.
    pub fn complement(&self) -> Result<CyclicCode> {
        let pair = match self.kind {
            CodeKind::WeightFamily(p) if p.is_analyzed() => p,
            _ => {
                let (i1, i2) = self.pair().map_or((0, 0), |p| (p.i1(), p.i2()));
                return Err(Error::UnsupportedPair(i1, i2));
            }
        };
        let partner = pair.partner()?;
        let partner_code = CyclicCode::from_pair(Arc::clone(&self.field), partner)?;
        let x_minus_one = Poly::from_coeffs(self.q(), vec![(self.q() - 1) as u8, 1]);
        let generator = x_minus_one.mul(partner_code.generator());
        let mut members = partner_code.defining_set().members().to_vec();
        members.push(0);
        members.sort_unstable();
        let defining_set = DefiningSet {
            q: self.q(),
            n: self.n(),
            members,
            pair: Some(partner),
        };
        assert_eq!(generator.degree().unwrap_or(0), defining_set.len());
        let k = partner_code.k() - 1;
        Ok(CyclicCode {
            field: Arc::clone(&self.field),
            kind: CodeKind::ComplementOf(pair),
            defining_set,
            generator,
            k,
        })
    }

    /// Root test: w is a codeword iff it vanishes at alpha^j for every
    /// coset leader j of the defining set (closure covers the rest).
    pub fn is_codeword(&self, w: &Poly) -> bool {
        debug_assert!(w.degree().is_none_or(|d| d < self.n() as usize));
        self.defining_set.leaders().iter().all(|&j| {
            w.eval_elem(&self.field, self.field.alpha_pow(j as i64))
                .is_zero()
        })
    }

    pub fn to_document(&self) -> CodeDocument {
        let (variant, pair) = match self.kind {
            CodeKind::WeightFamily(p) => ("primal", Some(p)),
            CodeKind::DualOf(p) => ("dual", Some(p)),
            CodeKind::ComplementOf(p) => ("complement", Some(p)),
            CodeKind::Custom => ("custom", self.pair()),
        };
        CodeDocument {
            schema: "v1".to_string(),
            q: self.q(),
            m: self.m(),
            n: self.n(),
            i1: pair.map(WeightPair::i1),
            i2: pair.map(WeightPair::i2),
            variant: variant.to_string(),
            k: self.k,
            defining_set_leaders: self.defining_set.leaders(),
            generator: self.generator.to_string(),
            modulus: self.field.modulus_string(),
        }
    }

    /// Rebuild a code from its serialized document and verify that the
    /// reconstruction reproduces the recorded generator and dimension.
    pub fn from_document(doc: &CodeDocument) -> Result<CyclicCode> {
        let modulus = crate::gf::parse_coeff_list(&doc.modulus)?;
        let field = Arc::new(FieldSpec::with_modulus(doc.q, doc.m, &modulus)?);
        let n = field.order();
        let mut members = Vec::new();
        for &leader in &doc.defining_set_leaders {
            members.extend_from_slice(cyclotomic_coset(leader, doc.q, n)?.members());
        }
        let set = DefiningSet::from_members(doc.q, n, members)?;
        let mut code = CyclicCode::from_defining_set(field, set)?;
        code.kind = match (doc.variant.as_str(), doc.i1, doc.i2) {
            ("primal", Some(i1), Some(i2)) => CodeKind::WeightFamily(WeightPair::new(i1, i2)?),
            ("dual", Some(i1), Some(i2)) => CodeKind::DualOf(WeightPair::new(i1, i2)?),
            ("complement", Some(i1), Some(i2)) => CodeKind::ComplementOf(WeightPair::new(i1, i2)?),
            _ => CodeKind::Custom,
        };
        if code.k != doc.k || code.generator.to_string() != doc.generator {
            return Err(Error::PolyParse(
                "document is inconsistent with its reconstruction".into(),
            ));
        }
        Ok(code)
    }
}

/// JSON form of a code (schema "v1").
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CodeDocument {
    pub schema: String,
    pub q: u32,
    pub m: u32,
    pub n: u32,
    pub i1: Option<u8>,
    pub i2: Option<u8>,
    pub variant: String,
    pub k: u32,
    pub defining_set_leaders: Vec<u32>,
    pub generator: String,
    pub modulus: String,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf27() -> Arc<FieldSpec> {
        Arc::new(FieldSpec::new(3, 3).unwrap())
    }

    fn pair(i1: u8, i2: u8) -> WeightPair {
        WeightPair::new(i1, i2).unwrap()
    }

    #[test]
    fn weight_pair_validation() {
        assert_eq!(WeightPair::new(1, 1).unwrap_err(), Error::SameClass(1));
        assert_eq!(
            WeightPair::new(4, 1).unwrap_err(),
            Error::ClassOutOfRange(4)
        );
        assert_eq!(pair(3, 0), pair(0, 3));
        assert!(pair(0, 3).is_analyzed());
        assert!(!pair(0, 2).is_analyzed());
        assert_eq!(pair(0, 3).partner().unwrap(), pair(1, 2));
        assert_eq!(pair(2, 3).partner().unwrap(), pair(0, 1));
        assert_eq!(
            pair(0, 2).partner().unwrap_err(),
            Error::UnsupportedPair(0, 2)
        );
        assert_eq!(WeightPair::parse("0,3").unwrap(), pair(0, 3));
        assert!(WeightPair::parse("0").is_err());
        assert_eq!(pair(0, 3).to_string(), "(0, 3)");
    }

    #[test]
    fn class_cardinalities_m3() {
        assert_eq!(weight_class_set(0, 3, 3).unwrap().len(), 6);
        assert_eq!(weight_class_set(3, 3, 3).unwrap().len(), 7);
        assert_eq!(weight_class_set(1, 3, 5).unwrap().len(), 61);
        assert_eq!(ti_cardinality_closed_form(0, 3).unwrap(), 6);
        assert_eq!(ti_cardinality_closed_form(3, 3).unwrap(), 7);
        assert_eq!(ti_cardinality_closed_form(1, 5).unwrap(), 61);
        assert_eq!(
            ti_cardinality_closed_form(0, 4).unwrap_err(),
            Error::EvenM(4)
        );
    }

    #[test]
    fn closed_form_matches_enumeration() {
        for m in [3u32, 5, 7, 9] {
            for i in 0..4u8 {
                assert_eq!(
                    weight_class_set(i, 3, m).unwrap().len() as u64,
                    ti_cardinality_closed_form(i, m).unwrap(),
                    "class {i}, m = {m}"
                );
            }
            let even: usize = [0u8, 2]
                .iter()
                .map(|&i| weight_class_set(i, 3, m).unwrap().len())
                .sum();
            let odd: usize = [1u8, 3]
                .iter()
                .map(|&i| weight_class_set(i, 3, m).unwrap().len())
                .sum();
            assert_eq!(even as u64, (3u64.pow(m) - 3) / 2);
            assert_eq!(odd as u64, (3u64.pow(m) - 1) / 2);
        }
    }

    #[test]
    fn generators_match_published_m3_examples() {
        let field = gf27();
        let cases = [
            (
                (0, 3),
                13,
                "x^13 + 2x^11 + x^10 + x^8 + x^6 + x^4 + 2x^3 + 1",
            ),
            (
                (1, 2),
                14,
                "x^12 + x^11 + 2x^10 + x^9 + 2x^8 + 2x^7 + x^6 + x^5 + x^4 + 2x^3 + x^2 + x + 1",
            ),
            (
                (0, 1),
                14,
                "x^12 + x^11 + x^10 + 2x^9 + x^8 + x^7 + x^6 + 2x^5 + 2x^4 + x^3 + 2x^2 + x + 1",
            ),
            (
                (2, 3),
                13,
                "x^13 + 2x^10 + x^9 + x^7 + x^5 + x^3 + 2x^2 + 1",
            ),
        ];
        for ((i1, i2), k, generator) in cases {
            let code = CyclicCode::from_pair(Arc::clone(&field), pair(i1, i2)).unwrap();
            assert_eq!(code.n(), 26);
            assert_eq!(code.k(), k, "family ({i1}, {i2})");
            assert_eq!(
                code.generator().to_string(),
                generator,
                "family ({i1}, {i2})"
            );
            assert!(!code.outside_analyzed_range());
        }
    }

    #[test]
    fn duals_match_published_m3_examples() {
        let field = gf27();
        let cases = [
            ((0, 3), 13, "x^13 + x^10 + 2x^9 + x^6 + 2x^4 + x^3 + 2x^2 + 2"),
            (
                (1, 2),
                12,
                "x^14 + 2x^13 + 2x^11 + 2x^10 + 2x^9 + x^8 + 2x^7 + x^6 + 2x^5 + x^4 + x^3 + x^2 + x + 2",
            ),
            (
                (0, 1),
                12,
                "x^14 + 2x^13 + 2x^12 + 2x^11 + 2x^10 + x^9 + 2x^8 + x^7 + 2x^6 + x^5 + x^4 + x^3 + x + 2",
            ),
            ((2, 3), 13, "x^13 + x^11 + 2x^10 + x^9 + 2x^7 + x^4 + 2x^3 + 2"),
        ];
        for ((i1, i2), k, generator) in cases {
            let code = CyclicCode::from_pair(Arc::clone(&field), pair(i1, i2)).unwrap();
            let dual = code.dual();
            assert_eq!(dual.k(), k, "dual of ({i1}, {i2})");
            assert_eq!(
                dual.generator().to_string(),
                generator,
                "dual of ({i1}, {i2})"
            );
            // dual of dual restores the original
            let back = dual.dual();
            assert_eq!(back.generator(), code.generator());
            assert_eq!(back.defining_set(), code.defining_set());
        }
    }

    #[test]
    fn complement_factorization() {
        let field = gf27();
        let c03 = CyclicCode::from_pair(Arc::clone(&field), pair(0, 3)).unwrap();
        let c12 = CyclicCode::from_pair(Arc::clone(&field), pair(1, 2)).unwrap();
        // (x - 1) g_(0,3) g_(1,2) = x^26 - 1
        let x_minus_one = Poly::parse(3, "x + 2").unwrap();
        let product = x_minus_one.mul(c03.generator()).mul(c12.generator());
        assert_eq!(product, Poly::x_pow_minus_one(3, 26));

        let comp = c03.complement().unwrap();
        assert_eq!(comp.k(), c12.k() - 1);
        assert_eq!(comp.generator(), &x_minus_one.mul(c12.generator()));
        assert_eq!(comp.generator().degree(), Some(13));
        assert!(comp.defining_set().contains(0));

        let excluded = CyclicCode::from_pair(Arc::clone(&field), pair(0, 2)).unwrap();
        assert_eq!(
            excluded.complement().unwrap_err(),
            Error::UnsupportedPair(0, 2)
        );
        assert_eq!(
            c03.dual().complement().unwrap_err(),
            Error::UnsupportedPair(0, 3)
        );
    }

    #[test]
    fn generator_divides_xn_minus_one() {
        for m in [3u32, 5] {
            let field = Arc::new(FieldSpec::new(3, m).unwrap());
            let xn1 = Poly::x_pow_minus_one(3, field.order() as usize);
            for p in ANALYZED_PAIRS {
                let code = CyclicCode::from_pair(Arc::clone(&field), p).unwrap();
                assert!(xn1.divisible_by(code.generator()));
                assert_eq!(
                    code.k() as usize + code.defining_set().len(),
                    code.n() as usize
                );
            }
        }
    }

    #[test]
    fn codeword_membership() {
        let field = gf27();
        let code = CyclicCode::from_pair(field, pair(0, 3)).unwrap();
        assert!(code.is_codeword(code.generator()));
        assert!(code.is_codeword(&Poly::zero(3)));
        assert!(!code.is_codeword(&Poly::one(3)));
        let shifted = code.generator().cyclic_shift(1, 26);
        assert!(code.is_codeword(&shifted));
        let shifted_far = code.generator().cyclic_shift(20, 26);
        assert!(code.is_codeword(&shifted_far));
    }

    #[test]
    fn outside_range_constructions_still_work() {
        // even m
        let field = Arc::new(FieldSpec::new(3, 4).unwrap());
        let code = CyclicCode::from_pair(field, pair(0, 3)).unwrap();
        assert_eq!(code.n(), 80);
        assert!(code.outside_analyzed_range());
        // excluded pair
        let code = CyclicCode::from_pair(gf27(), pair(1, 3)).unwrap();
        assert!(code.outside_analyzed_range());
        assert_eq!(code.k() as usize, 26 - code.defining_set().len());
    }

    #[test]
    fn defining_set_validation() {
        assert_eq!(
            DefiningSet::from_members(3, 26, vec![1]).unwrap_err(),
            Error::NotCosetClosed { witness: 1 }
        );
        assert!(DefiningSet::from_members(3, 26, vec![1, 3, 9]).is_ok());
        assert!(DefiningSet::from_members(3, 26, vec![30]).is_err());
        let set = weight_pair_set(pair(0, 3), 3, 3).unwrap();
        assert_eq!(set.leaders(), vec![5, 7, 8, 13, 14]);
        assert_eq!(
            set.members(),
            &[5, 7, 8, 11, 13, 14, 15, 16, 19, 20, 21, 22, 24]
        );
    }

    #[test]
    fn theorem_dimensions() {
        for (p, m, k) in [
            (pair(0, 3), 3, 13u64),
            (pair(1, 2), 3, 14),
            (pair(0, 1), 3, 14),
            (pair(2, 3), 3, 13),
            (pair(0, 3), 7, 1093),
            (pair(0, 3), 5, 122),
            (pair(1, 2), 5, 121),
        ] {
            assert_eq!(theorem_dimension(p, m, false).unwrap(), k, "{p} m={m}");
        }
        assert_eq!(theorem_dimension(pair(0, 3), 3, true).unwrap(), 13);
        assert_eq!(theorem_dimension(pair(1, 2), 3, true).unwrap(), 12);
        assert_eq!(
            theorem_dimension(pair(0, 3), 4, false).unwrap_err(),
            Error::EvenM(4)
        );
        assert!(theorem_dimension(pair(0, 2), 3, false).is_err());
    }

    #[test]
    fn document_round_trip() {
        let field = gf27();
        for kind in ["primal", "dual", "complement"] {
            let base = CyclicCode::from_pair(Arc::clone(&field), pair(0, 3)).unwrap();
            let code = match kind {
                "primal" => base,
                "dual" => base.dual(),
                _ => base.complement().unwrap(),
            };
            let doc = code.to_document();
            assert_eq!(doc.schema, "v1");
            let text = serde_json::to_string(&doc).unwrap();
            let parsed: CodeDocument = serde_json::from_str(&text).unwrap();
            let rebuilt = CyclicCode::from_document(&parsed).unwrap();
            assert_eq!(rebuilt.generator(), code.generator(), "{kind}");
            assert_eq!(
                rebuilt.defining_set().members(),
                code.defining_set().members()
            );
            assert_eq!(rebuilt.k(), code.k());
        }
    }
}
