//! The construct/bound/delta-max/distance subcommands.

use std::fmt::Write as _;
use std::sync::Arc;

use anyhow::{Context, Result};

use tcw_core::bounds::{self, WindowSide};
use tcw_core::distance::{self, Strategy};
use tcw_core::{CyclicCode, FieldSpec, SearchBudget};

use crate::{
    BoundArgs, CodeSelector, ConstructArgs, DeltaMaxArgs, DistanceArgs, Output, StrategyArg,
};

fn build_field(selector: &CodeSelector) -> Result<Arc<FieldSpec>> {
    let field = match &selector.modulus {
        None => FieldSpec::new(selector.q, selector.m),
        Some(coeffs) => FieldSpec::with_modulus(selector.q, selector.m, &coeffs.0),
    }
    .with_context(|| format!("cannot build GF({}^{})", selector.q, selector.m))?;
    Ok(Arc::new(field))
}

fn build_code(selector: &CodeSelector) -> Result<CyclicCode> {
    let field = build_field(selector)?;
    let code = CyclicCode::from_pair(field, selector.pair)?;
    if code.outside_analyzed_range() {
        eprintln!(
            "warning: family {} with m = {} is outside the analyzed parameter range; \
             no distance bound is claimed",
            selector.pair, selector.m
        );
    }
    Ok(if selector.dual {
        code.dual()
    } else if selector.complement {
        code.complement()?
    } else {
        code
    })
}

fn describe(code: &CyclicCode) -> String {
    let variant = match (code.kind(), code.pair()) {
        (tcw_core::codes::CodeKind::DualOf(p), _) => format!("dual of family {p}"),
        (tcw_core::codes::CodeKind::ComplementOf(p), _) => format!("complement of family {p}"),
        (_, Some(p)) => format!("family {p}"),
        (_, None) => "custom defining set".to_string(),
    };
    format!(
        "[{}, {}] cyclic code over GF({}), {variant}, m = {}",
        code.n(),
        code.k(),
        code.q(),
        code.m()
    )
}

pub fn construct(args: &ConstructArgs, json: bool) -> Result<Output> {
    let code = build_code(&args.selector)?;
    if json {
        return Ok(Output::ok(serde_json::to_string_pretty(
            &code.to_document(),
        )?));
    }
    let mut text = describe(&code);
    let leaders = code.defining_set().leaders();
    write!(
        text,
        "\ndefining set: {} residues in {} cosets\nleaders: {}\ngenerator: {}\nmodulus: {}",
        code.defining_set().len(),
        leaders.len(),
        leaders
            .iter()
            .map(|l| l.to_string())
            .collect::<Vec<_>>()
            .join(", "),
        code.generator(),
        code.field().modulus_string(),
    )?;
    Ok(Output::ok(text))
}

pub fn bound(args: &BoundArgs, json: bool) -> Result<Output> {
    let selector = &args.selector;
    let pair = selector.pair;
    let m = selector.m;

    // An explicit multiplier: report the run of T(v) directly.
    if let Some(v) = args.v {
        let set = tcw_core::codes::weight_pair_set(pair, selector.q, m)?;
        let base = if selector.dual {
            set.complement_negated()
        } else {
            set
        };
        let mapped = bounds::multiplied_set(&base, v)?;
        let (start, len) = bounds::longest_cyclic_run(mapped.n(), mapped.members())?;
        let report = tcw_core::BoundReport {
            family: Some(pair),
            m,
            v,
            window_start: start,
            run_length: len,
            bch_delta: len + 1,
            source: tcw_core::BoundSource::SingleMultiplier,
        };
        if json {
            return Ok(Output::ok(serde_json::to_string_pretty(&report.to_json())?));
        }
        return Ok(Output::ok(format!(
            "family {pair}, m = {m}, multiplier v = {v}: run of length {len} starting at {start}\nBCH bound: d >= {}",
            len + 1
        )));
    }

    if selector.dual {
        let bound = bounds::theorem_bound(pair, m, true, false)?;
        let text = format!(
            "dual of family {pair}, m = {m} ({} mod 4 branch): d >= {bound}",
            m % 4
        );
        if json {
            return Ok(Output::ok(serde_json::to_string_pretty(
                &serde_json::json!({
                    "schema": "v1",
                    "family": [pair.i1(), pair.i2()],
                    "m": m,
                    "dual": true,
                    "bound": bound,
                }),
            )?));
        }
        return Ok(Output::ok(text));
    }

    let report = bounds::lemma_window_check(pair, m)?;
    if json {
        return Ok(Output::ok(serde_json::to_string_pretty(&report.to_json())?));
    }
    let lemma = bounds::lemma_parameters(pair, m)?;
    let window = match lemma.side {
        WindowSide::Low => format!("{{1..{}}}", report.bch_delta - 1),
        WindowSide::High => format!("{{n-{}..n-1}}", report.bch_delta - 1),
    };
    let mut text = format!(
        "family {pair}, m = {m} ({} mod 4 branch): v = {}, delta = {}, window {window} contained in T(v)\nBCH bound: d >= {}",
        m % 4,
        report.v,
        report.bch_delta,
        report.bch_delta,
    );
    if let Ok(thm) = bounds::theorem_bound(pair, m, false, false) {
        write!(text, "\nclosed-form bound: d >= {thm}")?;
    }
    Ok(Output::ok(text))
}

pub fn delta_max(args: &DeltaMaxArgs, json: bool) -> Result<Output> {
    let selector = &args.selector;
    let set = tcw_core::codes::weight_pair_set(selector.pair, selector.q, selector.m)?;
    let set = if selector.dual {
        set.complement_negated()
    } else {
        set
    };
    let mut report = bounds::delta_max(&set)?;
    report.m = selector.m;
    if json {
        return Ok(Output::ok(serde_json::to_string_pretty(&report.to_json())?));
    }
    Ok(Output::ok(format!(
        "family {}, m = {}, n = {}: delta_max = {} (run of {} at v = {}, start {})",
        selector.pair,
        selector.m,
        set.n(),
        report.bch_delta,
        report.run_length,
        report.v,
        report.window_start,
    )))
}

pub fn distance(args: &DistanceArgs, budget: &SearchBudget, json: bool) -> Result<Output> {
    let code = build_code(&args.selector)?;
    let strategy = match args.strategy {
        StrategyArg::Auto => Strategy::Auto,
        StrategyArg::Exhaustive => Strategy::Exhaustive,
        StrategyArg::Bounded => Strategy::Bounded { w_max: args.w_max },
        StrategyArg::Bch => Strategy::BchOnly,
    };
    let report = distance::min_distance(&code, strategy, budget)?;
    if json {
        return Ok(Output::ok(serde_json::to_string_pretty(&report.to_json())?));
    }
    let mut text = describe(&code);
    write!(text, "\nmethod: {}", method_name(report.method))?;
    match report.exact {
        Some(d) => write!(text, "\nexact distance: {d}")?,
        None => {
            write!(text, "\ndistance lower bound: {}", report.lower)?;
            if let Some(u) = report.upper {
                write!(text, "\ndistance upper bound: {u}")?;
            }
            if report.budget_exhausted {
                write!(text, "\n(search stopped at the work ceiling)")?;
            }
        }
    }
    if let Some(witness) = &report.witness {
        write!(text, "\nwitness weight {}: {}", witness.weight(), witness)?;
    }
    write!(text, "\nwork units: {}", report.work_units)?;
    Ok(Output::ok(text))
}

fn method_name(method: distance::Method) -> &'static str {
    match method {
        distance::Method::Exhaustive => "exhaustive",
        distance::Method::BoundedWeight => "bounded_weight",
        distance::Method::BchOnly => "bch_only",
    }
}
