//! Minimum-distance computation.
//!
//! Three routes, picked by dimension: exhaustive codeword enumeration
//! with incremental weight updates when q^k is small, a canonicalized
//! bounded-weight search otherwise (cyclic shifts put a support position
//! at 0, scaling fixes the first coefficient to 1), and a BCH-only lower
//! bound when search budgets run out.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::bounds;
use crate::codes::CyclicCode;
use crate::error::{Error, Result};
use crate::gf::FieldElement;
use crate::poly::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    BoundedWeight,
    BchOnly,
}

/// How hard the searches are allowed to work.
#[derive(Debug, Clone, Copy)]
pub struct SearchBudget {
    /// Maximum q^k for full codebook enumeration.
    pub exhaustive_max_words: u64,
    /// Maximum number of bounded-weight membership tests.
    pub work_ceiling: u64,
    /// Maximum n^2-style cost for an exhaustive multiplier scan.
    pub delta_max_cost: u64,
}

impl Default for SearchBudget {
    fn default() -> SearchBudget {
        SearchBudget {
            exhaustive_max_words: 100_000_000,
            work_ceiling: 1_000_000_000,
            delta_max_cost: 1_000_000_000,
        }
    }
}

/// Outcome of a distance computation. `lower <= exact <= upper` whenever
/// present; `exact` is set only when the method proved matching bounds.
#[derive(Debug, Clone)]
pub struct DistanceReport {
    pub method: Method,
    pub exact: Option<u32>,
    pub lower: u32,
    pub upper: Option<u32>,
    pub witness: Option<Poly>,
    pub budget_exhausted: bool,
    pub work_units: u64,
}

impl DistanceReport {
    pub fn to_json(&self) -> serde_json::Value {
        let (support, coeffs) = match &self.witness {
            None => (Vec::new(), Vec::new()),
            Some(w) => {
                let support: Vec<usize> =
                    (0..w.coeffs().len()).filter(|&i| w.coeff(i) != 0).collect();
                let coeffs: Vec<u8> = support.iter().map(|&i| w.coeff(i)).collect();
                (support, coeffs)
            }
        };
        json!({
            "schema": "v1",
            "method": self.method,
            "exact": self.exact,
            "lower": self.lower,
            "upper": self.upper,
            "witness_support": support,
            "witness_coeffs": coeffs,
            "work_units": self.work_units,
        })
    }
}

/// Walk every codeword once: messages in loopless reflected mixed-radix
/// Gray order, so each step adds or subtracts a single shift of the
/// generator and the Hamming weight updates in O(deg g).
fn enumerate_codewords<F: FnMut(u32, &[u8])>(code: &CyclicCode, mut visit: F) {
    let q = code.q() as u8;
    let k = code.k() as usize;
    let n = code.n() as usize;
    let gen = code.generator().coeffs();

    let mut word = vec![0u8; n];
    let mut weight = 0u32;
    let mut digits = vec![0u8; k];
    let mut dir = vec![true; k]; // true = increment
    let mut focus: Vec<usize> = (0..=k).collect();

    visit(weight, &word);
    loop {
        let j = focus[0];
        focus[0] = 0;
        if j == k {
            break;
        }
        if dir[j] {
            digits[j] += 1;
            apply_shift(&mut word, &mut weight, gen, j, q, false);
        } else {
            digits[j] -= 1;
            apply_shift(&mut word, &mut weight, gen, j, q, true);
        }
        if digits[j] == 0 || digits[j] == q - 1 {
            dir[j] = !dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        visit(weight, &word);
    }
}

/// word += (or -=) x^offset * g, tracking zero/nonzero transitions.
#[inline]
fn apply_shift(
    word: &mut [u8],
    weight: &mut u32,
    gen: &[u8],
    offset: usize,
    q: u8,
    subtract: bool,
) {
    for (i, &gi) in gen.iter().enumerate() {
        if gi == 0 {
            continue;
        }
        let p = offset + i;
        let old = word[p];
        let delta = if subtract { q - gi } else { gi };
        let new = (old + delta) % q;
        word[p] = new;
        *weight += (new != 0) as u32;
        *weight -= (old != 0) as u32;
    }
}

fn codebook_size(code: &CyclicCode, budget: &SearchBudget) -> Result<u64> {
    match (code.q() as u64).checked_pow(code.k()) {
        Some(size) if size <= budget.exhaustive_max_words => Ok(size),
        _ => Err(Error::BudgetExceeded(format!(
            "{}^{} messages exceed the exhaustive budget of {}",
            code.q(),
            code.k(),
            budget.exhaustive_max_words
        ))),
    }
}

/// Exact minimum distance by full enumeration; q^k must fit the budget.
pub fn exhaustive_min_distance(code: &CyclicCode, budget: &SearchBudget) -> Result<DistanceReport> {
    let words = codebook_size(code, budget)?;
    if code.k() == 0 {
        return Err(Error::EmptySet);
    }
    let mut min = u32::MAX;
    let mut witness: Option<Poly> = None;
    let q = code.q();
    enumerate_codewords(code, |weight, word| {
        if weight > 0 && weight < min {
            min = weight;
            witness = Some(Poly::from_coeffs(q, word.to_vec()));
        }
    });
    Ok(DistanceReport {
        method: Method::Exhaustive,
        exact: Some(min),
        lower: min,
        upper: Some(min),
        witness,
        budget_exhausted: false,
        work_units: words,
    })
}

/// Codeword count per Hamming weight; counts sum to q^k.
pub fn weight_distribution(code: &CyclicCode, budget: &SearchBudget) -> Result<Vec<u64>> {
    codebook_size(code, budget)?;
    let mut counts = vec![0u64; code.n() as usize + 1];
    enumerate_codewords(code, |weight, _| counts[weight as usize] += 1);
    Ok(counts)
}

/// A found low-weight codeword, in canonical position.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Hit {
    support: Vec<u32>,
    coeffs: Vec<u8>,
}

/// Search all codewords of weight <= w_max up to cyclic and scalar
/// symmetry. Finding a codeword at weight w after exhausting smaller
/// weights settles the distance exactly; exhausting weight w without a
/// find certifies the lower bound w + 1.
pub fn bounded_weight_search(
    code: &CyclicCode,
    w_max: u32,
    budget: &SearchBudget,
) -> Result<DistanceReport> {
    if w_max == 0 {
        return Err(Error::OutOfRange { value: 0, bound: 1 });
    }
    if code.k() == 0 {
        return Err(Error::EmptySet);
    }
    let n = code.n();
    let q = code.q();
    let field = code.field();
    let leaders = code.defining_set().leaders();

    // alpha^(j*s) exponent rows per defining-set leader j, so the inner
    // loop is exponent additions and Zech lookups only.
    let rows: Vec<Vec<u32>> = leaders
        .iter()
        .map(|&j| {
            (0..n)
                .map(|s| (j as u64 * s as u64 % n as u64) as u32)
                .collect()
        })
        .collect();

    let mut work: u64 = 0;
    let mut exhausted = 0u32;
    let mut budget_exhausted = false;
    let mut found: Option<Hit> = None;

    for w in 1..=w_max.min(n) {
        let level_cost = level_estimate(n, q, w);
        if work.saturating_add(level_cost) > budget.work_ceiling {
            budget_exhausted = true;
            break;
        }
        // defining set empty => every word passes; weight-1 exists
        if leaders.is_empty() {
            found = Some(Hit {
                support: vec![0],
                coeffs: vec![1],
            });
            work += 1;
            break;
        }

        let digit_log: Vec<u32> = (0..q)
            .map(|c| field.element(c).exponent().unwrap_or(0))
            .collect();
        let test = |support: &[u32], coeffs: &[u8]| -> bool {
            rows.iter().all(|row| {
                let mut acc = FieldElement::Zero;
                for (&s, &c) in support.iter().zip(coeffs) {
                    let e = (row[s as usize] + digit_log[c as usize]) % n;
                    acc = field.add(acc, FieldElement::Pow(e));
                }
                acc.is_zero()
            })
        };

        if w == 1 {
            work += 1;
            if test(&[0], &[1]) {
                found = Some(Hit {
                    support: vec![0],
                    coeffs: vec![1],
                });
                break;
            }
            exhausted = 1;
            continue;
        }

        // Position 0 is fixed; partition the level by the second support
        // position. Each partition scans lexicographically and short
        // circuits on its first (lexicographically least) hit, so the
        // min-by-s2 merge is deterministic under any thread schedule.
        let partitions: Vec<u32> = (1..n).collect();
        let results: Vec<(Option<Hit>, u64)> = partitions
            .par_iter()
            .map(|&s2| search_partition(n, q, w, s2, &test))
            .collect();
        let mut level_hit: Option<Hit> = None;
        for (hit, tests) in results {
            work += tests;
            if level_hit.is_none() {
                level_hit = hit;
            }
        }
        if level_hit.is_some() {
            found = level_hit;
            break;
        }
        exhausted = w;
    }

    Ok(match found {
        Some(hit) => {
            let w = hit.support.len() as u32;
            let mut coeffs = vec![0u8; n as usize];
            for (&s, &c) in hit.support.iter().zip(&hit.coeffs) {
                coeffs[s as usize] = c;
            }
            let witness = Poly::from_coeffs(q, coeffs);
            debug_assert!(code.is_codeword(&witness));
            DistanceReport {
                method: Method::BoundedWeight,
                exact: Some(w),
                lower: w,
                upper: Some(w),
                witness: Some(witness),
                budget_exhausted: false,
                work_units: work,
            }
        }
        None => DistanceReport {
            method: Method::BoundedWeight,
            exact: None,
            lower: exhausted + 1,
            upper: None,
            witness: None,
            budget_exhausted,
            work_units: work,
        },
    })
}

/// One bounded-weight partition: supports {0, s2, rest...} with the rest
/// drawn from (s2, n), all coefficient patterns (1, c2..cw), cI in 1..q.
fn search_partition(
    n: u32,
    q: u32,
    w: u32,
    s2: u32,
    test: &(impl Fn(&[u32], &[u8]) -> bool + Sync),
) -> (Option<Hit>, u64) {
    let rest = (w - 2) as usize;
    let mut support = vec![0u32; w as usize];
    support[1] = s2;
    let mut coeffs = vec![1u8; w as usize];
    let mut tests = 0u64;

    let mut combo: Vec<u32> = (0..rest as u32).map(|i| s2 + 1 + i).collect();
    loop {
        if rest > 0 {
            if combo[rest - 1] >= n {
                break;
            }
            support[2..].copy_from_slice(&combo);
        }
        // all coefficient patterns for this support
        coeffs[1..].fill(1);
        loop {
            tests += 1;
            if test(&support, &coeffs) {
                return (
                    Some(Hit {
                        support: support.clone(),
                        coeffs: coeffs.clone(),
                    }),
                    tests,
                );
            }
            // odometer over digits 1..q
            let mut pos = w as usize - 1;
            loop {
                if pos == 0 {
                    break;
                }
                coeffs[pos] += 1;
                if coeffs[pos] < q as u8 {
                    break;
                }
                coeffs[pos] = 1;
                pos -= 1;
            }
            if pos == 0 {
                break;
            }
        }
        if rest == 0 {
            break;
        }
        // next combination from (s2, n)
        let mut i = rest;
        loop {
            if i == 0 {
                return (None, tests);
            }
            i -= 1;
            combo[i] += 1;
            if combo[i] <= n - (rest - i) as u32 {
                for j in i + 1..rest {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
            if i == 0 {
                return (None, tests);
            }
        }
    }
    (None, tests)
}

/// Membership tests needed to exhaust weight w, for budget gating.
fn level_estimate(n: u32, q: u32, w: u32) -> u64 {
    let mut combos: u128 = 1;
    for i in 0..(w - 1) as u128 {
        combos = combos.saturating_mul(n as u128 - 1 - i) / (i + 1);
    }
    let patterns = (q as u128 - 1).saturating_pow(w - 1);
    u64::try_from(combos.saturating_mul(patterns)).unwrap_or(u64::MAX)
}

/// Best cheap BCH-style lower bound for a code.
fn bch_lower(code: &CyclicCode, budget: &SearchBudget) -> u32 {
    let set = code.defining_set();
    if set.is_empty() {
        return 1;
    }
    let n = code.n() as u64;
    if n.saturating_mul(n) <= budget.delta_max_cost {
        if let Ok(report) = bounds::delta_max(set) {
            return report.bch_delta;
        }
    }
    let mut best = match bounds::longest_cyclic_run(code.n(), set.members()) {
        Ok((_, len)) => len + 1,
        Err(_) => 1,
    };
    if let Some(pair) = code.pair() {
        if code.q() == 3 {
            if let Ok(report) = bounds::lemma_window_check(pair, code.m()) {
                best = best.max(report.bch_delta);
            }
        }
    }
    best
}

/// Distance strategy for [`min_distance`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Exhaustive,
    Bounded { w_max: u32 },
    BchOnly,
}

/// Dispatch: exhaustive when the codebook fits, otherwise bounded-weight
/// with growing weight until a witness or the work ceiling, otherwise
/// the BCH lower bound alone.
pub fn min_distance(
    code: &CyclicCode,
    strategy: Strategy,
    budget: &SearchBudget,
) -> Result<DistanceReport> {
    match strategy {
        Strategy::Exhaustive => exhaustive_min_distance(code, budget),
        Strategy::Bounded { w_max } => bounded_weight_search(code, w_max, budget),
        Strategy::BchOnly => Ok(DistanceReport {
            method: Method::BchOnly,
            exact: None,
            lower: bch_lower(code, budget),
            upper: None,
            witness: None,
            budget_exhausted: false,
            work_units: 0,
        }),
        Strategy::Auto => {
            if codebook_size(code, budget).is_ok() {
                return exhaustive_min_distance(code, budget);
            }
            let mut report = bounded_weight_search(code, code.n(), budget)?;
            if report.exact.is_some() {
                return Ok(report);
            }
            let bch = bch_lower(code, budget);
            if bch > report.lower {
                report.lower = bch;
                report.method = Method::BchOnly;
            }
            Ok(report)
        }
    }
}
