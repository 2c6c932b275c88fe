use anyhow::{anyhow, bail, Context, Result};
use serde_json::{json, Value};
use umbral_core::families::family_value;
use umbral_core::stochastic::{
    exact_moment, ks_check, ks_check_against, Complex64, mc_moment, quad_bernoulli_even, Cdf, KsOutcome,
};
use umbral_core::{
    verify, verify_all_with, Bounds, Construction, ExactScalar, Family, IdentityId, IdentityReport, Path,
    SamplerSpec, Status, Target,
};

use crate::args::{AllArgs, CdfChoice, ComputeArgs, McArgs, PathChoice, ProfileChoice, QuadArgs, TargetChoice, VerifyArgs};
use crate::report::{Item, ItemStatus};

/// Gate for Monte Carlo moments, in standard errors.
pub const SE_GATE: f64 = 5.0;

pub fn exact_json(s: &ExactScalar) -> Value {
    if s.is_real() {
        Value::String(s.to_string())
    } else {
        let (re, im) = s.clone().into_parts();
        json!({"re": ExactScalar::real(re).to_string(), "im": ExactScalar::real(im).to_string()})
    }
}

fn complex_json(re: f64, im: f64) -> Value {
    json!({"re": re, "im": im})
}

pub fn compute(args: &ComputeArgs) -> Result<Vec<Item>> {
    let family: Family = args.family.parse()?;
    let indices = match family {
        Family::CarlitzHermite | Family::ZeilbergerHermite => {
            vec![args.m.ok_or_else(|| anyhow!("{family} needs --m and --n"))?, args.n]
        }
        Family::PowerSum => vec![args.k.ok_or_else(|| anyhow!("power-sum needs --k and --n"))?, args.n],
        _ => vec![args.n],
    };
    let paths: &[Path] = match args.path {
        PathChoice::Oracle => &[Path::Oracle],
        PathChoice::Umbral => &[Path::Umbral],
        PathChoice::Both => &[Path::Oracle, Path::Umbral],
    };
    let values: Vec<_> = paths
        .iter()
        .map(|&p| family_value(family, &indices, p).expect("indices match arity"))
        .collect();
    let first = &values[0];
    let agree = values.iter().all(|v| v.value == first.value);
    let summary = if agree {
        first.to_string()
    } else {
        let parts: Vec<String> = paths.iter().zip(&values).map(|(p, v)| format!("{p}: {}", v.value)).collect();
        format!("{} disagrees: {}", first.label(), parts.join("; "))
    };
    let by_path: serde_json::Map<String, Value> = paths
        .iter()
        .zip(&values)
        .map(|(p, v)| (p.to_string(), Value::String(v.value.to_string())))
        .collect();
    Ok(vec![Item {
        id: first.label(),
        status: ItemStatus::from_bool(agree),
        detail: json!({
            "kind": "value",
            "summary": summary,
            "family": family.name(),
            "indices": indices,
            "values": by_path,
        }),
    }])
}

pub fn bounds_for(profile: ProfileChoice) -> Bounds {
    match profile {
        ProfileChoice::Quick => Bounds::quick(),
        ProfileChoice::Full => Bounds::full(),
    }
}

fn identity_item(r: &IdentityReport) -> Item {
    let unexpected: Vec<&str> = r.witnesses.iter().filter(|w| !w.as_expected()).map(|w| w.label.as_str()).collect();
    let mut summary = format!("{} ({} comparisons)", r.range, r.checked);
    if let Some(c) = &r.counterexample {
        summary.push_str(&format!("; first mismatch at {}", c.params));
    }
    if !unexpected.is_empty() {
        summary.push_str(&format!("; witness not as expected: {}", unexpected.join(", ")));
    }
    Item {
        id: r.id.name().to_string(),
        status: ItemStatus::from_bool(r.status == Status::Pass),
        detail: json!({
            "kind": "identity",
            "summary": summary,
            "statement": r.id.statement(),
            "range": r.range,
            "checked": r.checked,
            "counterexample": r.counterexample.as_ref().map(|c| json!({
                "params": c.params,
                "lhs": c.lhs.to_string(),
                "rhs": c.rhs.to_string(),
            })),
            "witnesses": r.witnesses.iter().map(|w| json!({
                "label": w.label,
                "params": w.params,
                "expect_hold": w.expect_hold,
                "held": w.held,
                "as_expected": w.as_expected(),
            })).collect::<Vec<_>>(),
        }),
    }
}

pub fn verify_cmd(args: &VerifyArgs) -> Result<Vec<Item>> {
    let mut bounds = bounds_for(args.profile);
    if let Some(v) = args.index {
        bounds.index = v;
    }
    if let Some(v) = args.pair_index {
        bounds.pair_index = v;
    }
    if let Some(v) = args.order {
        bounds.series_order = v;
    }
    if let Some(v) = args.quintuple_order {
        bounds.quintuple_order = v;
    }
    bounds.validate()?;
    let reports = match &args.id {
        Some(name) => {
            let id: IdentityId = name.parse()?;
            vec![verify(id, &bounds)?]
        }
        None => verify_all_with(&bounds)?,
    };
    Ok(reports.iter().map(identity_item).collect())
}

fn target_of(t: TargetChoice) -> Target {
    match t {
        TargetChoice::L => Target::LogisticL,
        TargetChoice::L0 => Target::SechL0,
        TargetChoice::Laplace => Target::LaplaceViaGauss,
        TargetChoice::Half => Target::CompoundHalf,
    }
}

fn default_construction(t: Target) -> Construction {
    match t {
        Target::LogisticL => Construction::LogUniformRatio,
        Target::SechL0 => Construction::LogAbsCauchy,
        Target::LaplaceViaGauss => Construction::GaussTimesSqrtExp,
        Target::CompoundHalf => Construction::AverageL0L,
    }
}

fn cdf_of(c: CdfChoice) -> Cdf {
    match c {
        CdfChoice::Logistic => Cdf::Logistic,
        CdfChoice::Sech => Cdf::HyperbolicSecant,
        CdfChoice::Laplace => Cdf::Laplace,
    }
}

fn cdf_name(c: Cdf) -> &'static str {
    match c {
        Cdf::Logistic => "logistic",
        Cdf::HyperbolicSecant => "sech",
        Cdf::Laplace => "laplace",
    }
}

/// One moment estimate checked against its exact value.
pub fn moment_item(spec: &SamplerSpec, shift: f64, n: u32, count: usize) -> Result<Item> {
    let exact_shift = ExactScalar::from_f64(shift).context("shift must be finite")?;
    let exact = exact_moment(spec.target, &exact_shift, n);
    let (ere, eim) = exact.to_f64_parts();
    let stats = mc_moment(spec, shift, n, count)?;
    let reference = Complex64::new(ere, eim);
    let ok = stats.within(reference, SE_GATE);
    let z = stats.z_score(reference);
    Ok(Item {
        id: format!("mc:{}:moment{n}", spec.construction),
        status: ItemStatus::from_bool(ok),
        detail: json!({
            "kind": "moment",
            "summary": format!(
                "E(iX{shift:+})^{n} = {:.6}{:+.6}i, exact {exact}, {z:.2} SE (gate {SE_GATE}), count {count}, seed {}",
                stats.estimate.re, stats.estimate.im, spec.seed
            ),
            "construction": spec.construction.name(),
            "seed": spec.seed,
            "n": n,
            "shift": shift,
            "count": stats.count,
            "estimate": complex_json(stats.estimate.re, stats.estimate.im),
            "std_error": complex_json(stats.std_error.re, stats.std_error.im),
            "exact": exact_json(&exact),
            "z": z,
        }),
    })
}

/// A KS gate; `expect_pass = false` turns it into a negative control that
/// passes only when the test rejects.
pub fn ks_item(spec: &SamplerSpec, count: usize, against: Option<Cdf>, expect_pass: bool) -> Result<Item> {
    let cdf = against.unwrap_or_else(|| Cdf::for_target(spec.target));
    let out: KsOutcome = match against {
        Some(c) => ks_check_against(spec, count, c)?,
        None => ks_check(spec, count)?,
    };
    let ok = out.pass == expect_pass;
    let verdict = if out.pass { "accepted" } else { "rejected" };
    let role = if expect_pass { "" } else { " (negative control)" };
    Ok(Item {
        id: format!("ks:{}:{}", spec.construction, cdf_name(cdf)),
        status: ItemStatus::from_bool(ok),
        detail: json!({
            "kind": "ks",
            "summary": format!(
                "sqrt(n) D = {:.4} vs 1.949, {verdict}{role}, count {count}, seed {}",
                out.scaled, spec.seed
            ),
            "construction": spec.construction.name(),
            "cdf": cdf_name(cdf),
            "seed": spec.seed,
            "count": out.count,
            "statistic": out.statistic,
            "scaled": out.scaled,
            "accepted": out.pass,
            "expect_accept": expect_pass,
        }),
    })
}

pub fn mc(args: &McArgs) -> Result<Vec<Item>> {
    let target = target_of(args.target);
    let construction = match &args.construction {
        Some(c) => c.parse()?,
        None => default_construction(target),
    };
    let spec = SamplerSpec::new(target, construction, args.seed)?;
    let run_moment = args.moment.is_some() || !args.ks;
    let mut items = Vec::new();
    if run_moment {
        let n = args.moment.unwrap_or(2);
        let shift = args.shift.unwrap_or(match target {
            Target::LogisticL | Target::CompoundHalf => -0.5,
            _ => 0.0,
        });
        items.push(moment_item(&spec, shift, n, args.count)?);
    }
    if args.ks || args.ks_against.is_some() || args.moment.is_none() {
        let against = args.ks_against.map(cdf_of);
        let expect_pass = against.is_none_or(|c| c == Cdf::for_target(target));
        items.push(ks_item(&spec, args.count, against, expect_pass)?);
    }
    Ok(items)
}

fn quad_item(n: u32) -> Item {
    let exact = umbral_core::families::bernoulli_number(2 * n, Path::Oracle);
    let target = exact.to_f64_parts().0;
    let (status, summary, value) = match quad_bernoulli_even(n) {
        Ok(v) => {
            let err = (v - target).abs();
            (ItemStatus::from_bool(err < 1e-8), format!("{v:.12} vs B_{} = {exact}, |error| = {err:.2e}", 2 * n), Some(v))
        }
        Err(e) => (ItemStatus::Fail, e.to_string(), None),
    };
    Item {
        id: format!("quad:B_{}", 2 * n),
        status,
        detail: json!({
            "kind": "quadrature",
            "summary": summary,
            "n": n,
            "value": value,
            "exact": exact_json(&exact),
            "tolerance": 1e-8,
        }),
    }
}

pub fn quad(args: &QuadArgs) -> Result<Vec<Item>> {
    match args.n {
        Some(n) if !(1..=5).contains(&n) => bail!("--n must lie in 1..=5"),
        Some(n) => Ok(vec![quad_item(n)]),
        None => Ok((1..=5).map(quad_item).collect()),
    }
}

/// Fixed Monte Carlo battery: Bernoulli and Euler moments, KS gates for
/// every construction of L and L0, `(L0 + L)/2 ~ L`, and a wrong-CDF
/// control.
pub fn mc_battery(count: usize, ks_count: usize, seed: u64) -> Result<Vec<Item>> {
    let l = SamplerSpec::of(Construction::LogUniformRatio, seed);
    let l0 = SamplerSpec::of(Construction::LogAbsCauchy, seed);
    let mut items = Vec::new();
    for n in [2, 3, 4] {
        items.push(moment_item(&l, -0.5, n, count)?);
    }
    items.push(moment_item(&l0, 0.0, 2, count)?);
    for c in [
        Construction::LogUniformRatio,
        Construction::LogExpRatio,
        Construction::LogAbsCauchy,
        Construction::LogAbsGaussRatio,
        Construction::AverageL0L,
        Construction::GaussTimesSqrtExp,
    ] {
        items.push(ks_item(&SamplerSpec::of(c, seed), ks_count, None, true)?);
    }
    items.push(ks_item(&l, ks_count, Some(Cdf::HyperbolicSecant), false)?);
    items.push(ks_item(
        &SamplerSpec::of(Construction::GaussOverSqrtExp, seed),
        ks_count,
        None,
        false,
    )?);
    Ok(items)
}

pub fn all(args: &AllArgs) -> Result<Vec<Item>> {
    let bounds = bounds_for(args.profile);
    let mut items: Vec<Item> = verify_all_with(&bounds)?.iter().map(identity_item).collect();
    items.extend(mc_battery(args.count, args.ks_count, args.seed)?);
    items.extend(quad(&QuadArgs { n: None })?);
    Ok(items)
}
