//! The `verify` subcommand: replay every built-in reference value and
//! print a pass/fail ledger. Claims are keyed by stable ids so diffs of
//! ledger output stay meaningful across runs.

use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use anyhow::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tcw_core::bounds::{
    delta_max, lemma_window_check, longest_cyclic_run, multiplied_set, theorem_bound,
};
use tcw_core::codes::{
    ti_cardinality_closed_form, weight_class_set, weight_pair_set, ANALYZED_PAIRS,
};
use tcw_core::distance::{bounded_weight_search, exhaustive_min_distance, weight_distribution};
use tcw_core::residues::gcd;
use tcw_core::{CyclicCode, FieldSpec, Poly, SearchBudget, WeightPair};

use crate::{Output, VerifyArgs};

/// The eight published m = 3 generator polynomials.
const GOLDEN_M3: [((u8, u8), bool, &str); 8] = [
    (
        (0, 3),
        false,
        "x^13 + 2x^11 + x^10 + x^8 + x^6 + x^4 + 2x^3 + 1",
    ),
    (
        (1, 2),
        false,
        "x^12 + x^11 + 2x^10 + x^9 + 2x^8 + 2x^7 + x^6 + x^5 + x^4 + 2x^3 + x^2 + x + 1",
    ),
    (
        (0, 1),
        false,
        "x^12 + x^11 + x^10 + 2x^9 + x^8 + x^7 + x^6 + 2x^5 + 2x^4 + x^3 + 2x^2 + x + 1",
    ),
    (
        (2, 3),
        false,
        "x^13 + 2x^10 + x^9 + x^7 + x^5 + x^3 + 2x^2 + 1",
    ),
    (
        (0, 3),
        true,
        "x^13 + x^10 + 2x^9 + x^6 + 2x^4 + x^3 + 2x^2 + 2",
    ),
    (
        (1, 2),
        true,
        "x^14 + 2x^13 + 2x^11 + 2x^10 + 2x^9 + x^8 + 2x^7 + x^6 + 2x^5 + x^4 + x^3 + x^2 + x + 2",
    ),
    (
        (0, 1),
        true,
        "x^14 + 2x^13 + 2x^12 + 2x^11 + 2x^10 + x^9 + 2x^8 + x^7 + 2x^6 + x^5 + x^4 + x^3 + x + 2",
    ),
    (
        (2, 3),
        true,
        "x^13 + x^11 + 2x^10 + x^9 + 2x^7 + x^4 + 2x^3 + 2",
    ),
];

/// m = 3 parameters [n, k, d] and dual parameters.
const PARAMS_M3: [((u8, u8), (u32, u32), (u32, u32)); 4] = [
    ((0, 3), (13, 8), (13, 8)),
    ((1, 2), (14, 7), (12, 9)),
    ((0, 1), (14, 7), (12, 9)),
    ((2, 3), (13, 8), (13, 8)),
];

/// q = 5, m = 3 parameters and dual parameters.
const PARAMS_Q5: [((u8, u8), (u32, u32), (u32, u32)); 6] = [
    ((2, 3), (62, 3), (62, 3)),
    ((0, 1), (63, 3), (61, 4)),
    ((0, 3), (63, 3), (61, 4)),
    ((1, 2), (62, 3), (62, 3)),
    ((1, 3), (62, 2), (62, 2)),
    ((0, 2), (63, 2), (61, 4)),
];

/// Lemma windows: (family, m, v, delta).
const LEMMAS: [((u8, u8), u32, u32, u32); 20] = [
    ((0, 3), 5, 13, 7),
    ((0, 3), 7, 41, 17),
    ((0, 3), 9, 121, 43),
    ((0, 3), 11, 365, 125),
    ((0, 3), 13, 1093, 367),
    ((1, 2), 5, 5, 11),
    ((1, 2), 7, 13, 19),
    ((1, 2), 9, 41, 47),
    ((1, 2), 11, 121, 127),
    ((1, 2), 13, 365, 371),
    ((0, 1), 5, 5, 11),
    ((0, 1), 7, 13, 19),
    ((0, 1), 9, 41, 47),
    ((0, 1), 11, 121, 127),
    ((0, 1), 13, 365, 371),
    ((2, 3), 5, 13, 7),
    ((2, 3), 7, 41, 17),
    ((2, 3), 9, 121, 43),
    ((2, 3), 11, 365, 125),
    ((2, 3), 13, 1093, 367),
];

/// Closed-form distance bounds: (family, m, primal, dual).
const BOUNDS: [((u8, u8), u32, u64, u64); 20] = [
    ((0, 3), 5, 7, 12),
    ((1, 2), 5, 11, 8),
    ((0, 1), 5, 11, 8),
    ((2, 3), 5, 7, 12),
    ((0, 3), 7, 17, 20),
    ((1, 2), 7, 19, 18),
    ((0, 1), 7, 19, 18),
    ((2, 3), 7, 17, 20),
    ((0, 3), 9, 43, 48),
    ((1, 2), 9, 47, 44),
    ((0, 1), 9, 47, 44),
    ((2, 3), 9, 43, 48),
    ((0, 3), 11, 125, 128),
    ((1, 2), 11, 127, 126),
    ((0, 1), 11, 127, 126),
    ((2, 3), 11, 125, 128),
    ((0, 3), 13, 367, 372),
    ((1, 2), 13, 371, 368),
    ((0, 1), 13, 371, 368),
    ((2, 3), 13, 367, 372),
];

const DELTA_MAX_TABLE: [(u32, u32); 4] = [(3, 5), (5, 11), (7, 19), (9, 43)];

struct Ctx {
    budget: SearchBudget,
    seed: u64,
    override_modulus: Option<(u32, u32, Vec<u8>)>,
}

impl Ctx {
    fn field(&self, q: u32, m: u32) -> tcw_core::Result<Arc<FieldSpec>> {
        match &self.override_modulus {
            Some((oq, om, coeffs)) if *oq == q && *om == m => {
                Ok(Arc::new(FieldSpec::with_modulus(q, m, coeffs)?))
            }
            _ => Ok(Arc::new(FieldSpec::new(q, m)?)),
        }
    }

    fn code(&self, q: u32, m: u32, i1: u8, i2: u8, dual: bool) -> tcw_core::Result<CyclicCode> {
        let pair = WeightPair::new(i1, i2)?;
        let code = CyclicCode::from_pair(self.field(q, m)?, pair)?;
        Ok(if dual { code.dual() } else { code })
    }
}

struct ClaimResult {
    id: String,
    expected: String,
    computed: String,
    pass: bool,
    millis: u128,
}

fn run_claim(
    results: &mut Vec<ClaimResult>,
    ctx: &Ctx,
    id: impl Into<String>,
    expected: String,
    f: impl Fn(&Ctx) -> Result<String>,
) {
    let start = Instant::now();
    let computed = match catch_unwind(AssertUnwindSafe(|| f(ctx))) {
        Ok(Ok(value)) => value,
        Ok(Err(e)) => format!("error: {e:#}"),
        Err(_) => "error: panicked".to_string(),
    };
    results.push(ClaimResult {
        id: id.into(),
        pass: computed == expected,
        expected,
        computed,
        millis: start.elapsed().as_millis(),
    });
}

pub fn run(args: &VerifyArgs, budget: &SearchBudget, json: bool) -> Result<Output> {
    let ctx = Ctx {
        budget: *budget,
        seed: args.seed,
        override_modulus: args
            .modulus
            .clone()
            .map(|coeffs| (args.q, args.m.unwrap_or(3), coeffs.0)),
    };
    let start = Instant::now();
    let mut results = Vec::new();
    let r = &mut results;

    run_claim(r, &ctx, "field-gf27", "alpha has order 26".into(), |ctx| {
        let f = ctx.field(3, 3)?;
        let ok = f.pow(f.alpha(), 26)? == f.one()
            && f.pow(f.alpha(), 13)? != f.one()
            && f.pow(f.alpha(), 2)? != f.one();
        Ok(if ok {
            "alpha has order 26".into()
        } else {
            "alpha order is smaller".into()
        })
    });

    for ((i1, i2), (k, d), (kd, dd)) in PARAMS_M3 {
        for (dual, kk, ddd) in [(false, k, d), (true, kd, dd)] {
            let id = claim_id("params-m3", i1, i2, dual);
            run_claim(r, &ctx, id, format!("[26, {kk}, {ddd}]"), move |ctx| {
                let code = ctx.code(3, 3, i1, i2, dual)?;
                let report = exhaustive_min_distance(&code, &ctx.budget)?;
                Ok(format!(
                    "[{}, {}, {}]",
                    code.n(),
                    code.k(),
                    report.exact.unwrap_or(0)
                ))
            });
        }
    }

    run_claim(
        r,
        &ctx,
        "golden-generators-m3",
        "8/8 under a single alpha".into(),
        |ctx| {
            let field = ctx.field(3, 3)?;
            let n = field.order();
            // generators for alpha^t arise from the defining sets t*T
            let mut best_single = 0;
            for t in (1..n).filter(|&t| gcd(t as u64, n as u64) == 1) {
                let mut hits = 0;
                for ((i1, i2), dual, text) in GOLDEN_M3 {
                    let set = weight_pair_set(WeightPair::new(i1, i2)?, 3, 3)?;
                    let code = CyclicCode::from_defining_set(
                        Arc::clone(&field),
                        multiplied_set(&set, t)?,
                    )?;
                    let code = if dual { code.dual() } else { code };
                    if code.generator().to_string() == text {
                        hits += 1;
                    }
                }
                best_single = best_single.max(hits);
                if hits == 8 {
                    return Ok("8/8 under a single alpha".into());
                }
            }
            Ok(format!("best single alpha matches only {best_single}/8"))
        },
    );

    for m in [3u32, 5, 7, 9, 11, 13] {
        let id: &'static str = Box::leak(format!("dims-m{m}").into_boxed_str());
        run_claim(
            r,
            &ctx,
            id,
            "cardinalities and dimensions match".into(),
            move |_| {
                let n = 3u64.pow(m) - 1;
                let sizes: Vec<u64> = (0..4u8)
                    .map(|i| Ok(weight_class_set(i, 3, m)?.len() as u64))
                    .collect::<Result<_>>()?;
                for i in 0..4u8 {
                    if sizes[i as usize] != ti_cardinality_closed_form(i, m)? {
                        return Ok(format!("|T_{i}| = {} off closed form", sizes[i as usize]));
                    }
                }
                for p in ANALYZED_PAIRS {
                    let k = n - sizes[p.i1() as usize] - sizes[p.i2() as usize];
                    if k != tcw_core::codes::theorem_dimension(p, m, false)? {
                        return Ok(format!("family {p}: k = {k} off closed form"));
                    }
                }
                Ok("cardinalities and dimensions match".into())
            },
        );
    }

    for ((i1, i2), m, v, delta) in LEMMAS {
        let id: &'static str = Box::leak(format!("lemma-c{i1}{i2}-m{m}").into_boxed_str());
        run_claim(
            r,
            &ctx,
            id,
            format!("v = {v}, delta = {delta}, window contained"),
            move |_| {
                let report = lemma_window_check(WeightPair::new(i1, i2)?, m)?;
                Ok(format!(
                    "v = {}, delta = {}, window contained",
                    report.v, report.bch_delta
                ))
            },
        );
    }

    for (m, expected) in DELTA_MAX_TABLE {
        if args.quick && m == 9 {
            continue;
        }
        run_claim(r, &ctx, format!("delta-max-m{m}"), format!("delta_max = {expected}"), move |_| {
            let set = weight_pair_set(WeightPair::new(0, 3)?, 3, m)?;
            Ok(format!("delta_max = {}", delta_max(&set)?.bch_delta))
        });
    }

    for ((i1, i2), (k, d), (kd, dd)) in PARAMS_Q5 {
        for (dual, kk, ddd) in [(false, k, d), (true, kd, dd)] {
            if args.quick && ddd >= 4 {
                continue; // the weight-4 exhaustions are the slow entries
            }
            let id = claim_id("q5", i1, i2, dual);
            run_claim(r, &ctx, id, format!("[124, {kk}, {ddd}]"), move |ctx| {
                let code = ctx.code(5, 3, i1, i2, dual)?;
                let report = bounded_weight_search(&code, 4, &ctx.budget)?;
                match report.exact {
                    Some(d) => Ok(format!("[{}, {}, {}]", code.n(), code.k(), d)),
                    None => Ok(format!("[{}, {}, > 4]", code.n(), code.k())),
                }
            });
        }
    }

    run_claim(r, &ctx, "bounds-closed-forms", "40/40 match".into(), |_| {
        let mut hits = 0;
        for ((i1, i2), m, primal, dual) in BOUNDS {
            let p = WeightPair::new(i1, i2)?;
            hits += (theorem_bound(p, m, false, false)? == primal) as u32;
            hits += (theorem_bound(p, m, true, false)? == dual) as u32;
        }
        Ok(format!("{hits}/40 match"))
    });

    run_claim(
        r,
        &ctx,
        "m5-search-consistency",
        "no codeword of weight <= 4".into(),
        |ctx| {
            for p in ANALYZED_PAIRS {
                for dual in [false, true] {
                    let code = ctx.code(3, 5, p.i1(), p.i2(), dual)?;
                    let report = bounded_weight_search(&code, 4, &ctx.budget)?;
                    if let Some(d) = report.exact {
                        return Ok(format!("family {p} dual={dual} has weight {d}"));
                    }
                }
            }
            Ok("no codeword of weight <= 4".into())
        },
    );

    run_claim(
        r,
        &ctx,
        "random-generators-divide",
        "20/20 divide x^n - 1".into(),
        |ctx| {
            let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
            let mut hits = 0;
            for _ in 0..20 {
                let (q, m) = if rng.gen_bool(0.5) {
                    (3u32, rng.gen_range(2..=8))
                } else {
                    (5u32, rng.gen_range(2..=4))
                };
                let i1 = rng.gen_range(0..4u8);
                let i2 = (i1 + rng.gen_range(1..4u8)) % 4;
                let field = Arc::new(FieldSpec::new(q, m)?);
                let code = CyclicCode::from_pair(field, WeightPair::new(i1, i2)?)?;
                let xn1 = Poly::x_pow_minus_one(q, code.n() as usize);
                hits += xn1.divisible_by(code.generator()) as u32;
            }
            Ok(format!("{hits}/20 divide x^n - 1"))
        },
    );

    run_claim(
        r,
        &ctx,
        "bch-soundness-m3",
        "d >= run + 1 for every unit".into(),
        |ctx| {
            for p in ANALYZED_PAIRS {
                let code = ctx.code(3, 3, p.i1(), p.i2(), false)?;
                let d = exhaustive_min_distance(&code, &ctx.budget)?.exact.unwrap();
                for v in (1..26u32).filter(|&v| gcd(v as u64, 26) == 1) {
                    let mapped = multiplied_set(code.defining_set(), v)?;
                    let (_, run) = longest_cyclic_run(26, mapped.members())?;
                    if d < run + 1 {
                        return Ok(format!("family {p}, v = {v}: run {run} beats d = {d}"));
                    }
                }
            }
            Ok("d >= run + 1 for every unit".into())
        },
    );

    run_claim(
        r,
        &ctx,
        "dual-complement-wd-m3",
        "4/4 distributions equal".into(),
        |ctx| {
            let mut hits = 0;
            for p in ANALYZED_PAIRS {
                let code = ctx.code(3, 3, p.i1(), p.i2(), false)?;
                let dual_wd = weight_distribution(&code.dual(), &ctx.budget)?;
                let comp_wd = weight_distribution(&code.complement()?, &ctx.budget)?;
                hits += (dual_wd == comp_wd) as u32;
            }
            Ok(format!("{hits}/4 distributions equal"))
        },
    );

    if !args.quick {
        run_claim(
            r,
            &ctx,
            "alpha-independence-m3",
            "invariant over all 12 elements".into(),
            |ctx| {
                let field = ctx.field(3, 3)?;
                for p in ANALYZED_PAIRS {
                    let code = CyclicCode::from_pair(Arc::clone(&field), p)?;
                    let reference = weight_distribution(&code, &ctx.budget)?;
                    for t in (3..26u32).filter(|&t| gcd(t as u64, 26) == 1) {
                        let mapped = multiplied_set(code.defining_set(), t)?;
                        let image = CyclicCode::from_defining_set(Arc::clone(&field), mapped)?;
                        if image.k() != code.k()
                            || weight_distribution(&image, &ctx.budget)? != reference
                        {
                            return Ok(format!("family {p} changes at alpha^{t}"));
                        }
                    }
                }
                Ok("invariant over all 12 elements".into())
            },
        );
    }

    run_claim(
        r,
        &ctx,
        "exhaustive-vs-bounded-m3",
        "8/8 agree".into(),
        |ctx| {
            let mut hits = 0;
            for p in ANALYZED_PAIRS {
                for dual in [false, true] {
                    let code = ctx.code(3, 3, p.i1(), p.i2(), dual)?;
                    let d = exhaustive_min_distance(&code, &ctx.budget)?.exact.unwrap();
                    let report = bounded_weight_search(&code, d, &ctx.budget)?;
                    hits += (report.exact == Some(d)) as u32;
                }
            }
            Ok(format!("{hits}/8 agree"))
        },
    );

    let failed = results.iter().filter(|c| !c.pass).count();
    let total = results.len();
    let elapsed = start.elapsed();

    if json {
        let claims: Vec<serde_json::Value> = results
            .iter()
            .map(|c| {
                serde_json::json!({
                    "id": c.id,
                    "expected": c.expected,
                    "computed": c.computed,
                    "status": if c.pass { "pass" } else { "fail" },
                    "millis": c.millis,
                })
            })
            .collect();
        let doc = serde_json::json!({
            "schema": "v1",
            "quick": args.quick,
            "seed": args.seed,
            "claims": claims,
            "failed": failed,
            "total": total,
            "overall": if failed == 0 { "pass" } else { "fail" },
        });
        return Ok(Output {
            text: serde_json::to_string_pretty(&doc)?,
            failed: failed > 0,
        });
    }

    let mut text = format!(
        "reference ledger (seed = {}, quick = {})\n",
        args.seed, args.quick
    );
    let id_width = results.iter().map(|c| c.id.len()).max().unwrap_or(0);
    for c in &results {
        if c.pass {
            writeln!(
                text,
                "  {:<id_width$}  pass  {:>6} ms  {}",
                c.id, c.millis, c.expected
            )?;
        } else {
            writeln!(
                text,
                "  {:<id_width$}  FAIL  {:>6} ms  expected: {} / computed: {}",
                c.id, c.millis, c.expected, c.computed
            )?;
        }
    }
    write!(
        text,
        "overall: {} ({total} claims, {failed} failed, {:.1} s)",
        if failed == 0 { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64()
    )?;
    Ok(Output {
        text,
        failed: failed > 0,
    })
}

fn claim_id(prefix: &str, i1: u8, i2: u8, dual: bool) -> String {
    format!("{prefix}-c{i1}{i2}{}", if dual { "-dual" } else { "" })
}
