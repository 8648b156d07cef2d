//! One function per verb. Each returns the text payload and its JSON mirror.

use num_bigint::BigInt;
use serde_json::{json, Value};

use crossnest::checks::{self, CheckReport, Status, CRITERIA};
use crossnest::counting::{build_multigraph, closed_walk_sequence, colored_nc_sequence};
use crossnest::partition::{count_ncn_brute, cr_ne_oracle, enumerate_colored, ColoredSetPartition, EndpointFilter};
use crossnest::series::{
    c2_prefactor, c2_step_polynomial, ct_power_product, fit_p_recurrence, gf_from_graph, ncn_poly_in_r_with,
    LaurentPoly2,
};
use crossnest::tableaux::{from_vacillating, to_vacillating, transpose_partition, RPartiteTableau};
use crossnest::variants::{enumerate_variant, VariantKind};
use crossnest::{Bound, Error};

use crate::args::{
    BijectArgs, BoundArgs, CountArgs, EnumerateArgs, FilterArgs, FitArgs, GfArgs, Method, PolyArgs, SeriesArgs,
    VerifyArgs,
};

pub struct Output {
    pub text: String,
    pub json: Value,
    /// Set when a check reported FAIL.
    pub failed: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, failed: false }
    }
}

#[derive(Debug)]
pub enum Failure {
    /// Bad arguments or unparsable input; exit code 2.
    Usage(String),
    /// A well-formed request that exceeds a configured bound; exit code 1.
    Infeasible(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Infeasible { .. } => Failure::Infeasible(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

fn usage<T>(msg: impl Into<String>) -> Outcome<T> {
    Err(Failure::Usage(msg.into()))
}

fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().expect("nonempty row")];
        for x in &row {
            let v = next.last().expect("nonempty row").saturating_add(*x);
            next.push(v);
        }
        row = next;
    }
    row[0]
}

/// Upper bound on the number of `r`-colored partitions of `[n]`.
fn colored_partition_work(n: usize, r: usize) -> u128 {
    let colorings = (r as u128).saturating_pow(n.saturating_sub(1) as u32);
    bell(n).saturating_mul(colorings)
}

fn guard(work: u128, max_work: u64, what: &str) -> Outcome<()> {
    if work > u128::from(max_work) {
        Err(Failure::Infeasible(format!(
            "{what} would visit up to {work} objects, above --max-work {max_work}"
        )))
    } else {
        Ok(())
    }
}

fn filter_of(f: &FilterArgs) -> Option<EndpointFilter> {
    let (min, max) = (f.min_set.as_ref()?, f.max_set.as_ref()?);
    Some(EndpointFilter::new(min.iter().copied().collect(), max.iter().copied().collect()))
}

fn is_noncrossing_only(j: Bound, k: Bound) -> bool {
    matches!((j, k), (Bound::At(2), Bound::Unbounded) | (Bound::Unbounded, Bound::At(2)))
}

fn pick_method(method: Method, j: Bound, k: Bound, filtered: bool) -> Method {
    match method {
        Method::Auto if filtered => Method::Brute,
        Method::Auto if is_noncrossing_only(j, k) => Method::Lattice,
        Method::Auto if j.finite().is_some_and(|x| x >= 2) && k.finite().is_some_and(|x| x >= 2) => Method::Walks,
        Method::Auto => Method::Brute,
        other => other,
    }
}

/// `NCN_{j,k}(n, r)` for `n = 0..=last` by the chosen method.
fn ncn_sequence(bounds: &BoundArgs, r: usize, last: usize, method: Method, max_work: u64) -> Outcome<Vec<BigInt>> {
    let (j, k) = bounds.resolve();
    if r == 0 {
        return usage("-r must be at least 1");
    }
    let method = pick_method(method, j, k, false);
    let values: Vec<BigInt> = match method {
        Method::Lattice => {
            if !is_noncrossing_only(j, k) {
                return usage("the lattice method needs --nc or --nn");
            }
            colored_nc_sequence(r, last).into_iter().map(BigInt::from).collect()
        }
        Method::Walks => {
            let (Some(jf), Some(kf)) = (j.finite(), k.finite()) else {
                return usage("the walk method needs finite -j and -k");
            };
            let g = build_multigraph(jf, kf, r)?;
            let mut out = vec![BigInt::from(1)];
            if last > 0 {
                out.extend(closed_walk_sequence(&g, last - 1).into_iter().map(BigInt::from));
            }
            out
        }
        Method::ConstantTerm => {
            if !is_noncrossing_only(j, k) || r != 2 {
                return usage("the constant-term method covers --nc with -r 2 only");
            }
            let s = &c2_step_polynomial() + &LaurentPoly2::constant(BigInt::from(3));
            let f = c2_prefactor();
            (0..=last)
                .map(|n| if n == 0 { BigInt::from(1) } else { ct_power_product(&f, &s, n - 1) })
                .collect()
        }
        Method::Brute | Method::Auto => {
            guard(colored_partition_work(last, r), max_work, "brute-force enumeration")?;
            (0..=last).map(|n| BigInt::from(count_ncn_brute(n, r, j, k, None))).collect()
        }
    };
    Ok(values)
}

pub fn count(a: &CountArgs, max_work: u64) -> Outcome<Output> {
    let (j, k) = a.bounds.resolve();
    let filter = filter_of(&a.filter);
    let method = pick_method(a.method, j, k, filter.is_some());
    let value = if let Some(f) = &filter {
        if method != Method::Brute {
            return usage("endpoint filters need the brute method");
        }
        guard(colored_partition_work(a.n, a.r), max_work, "brute-force enumeration")?;
        BigInt::from(count_ncn_brute(a.n, a.r, j, k, Some(f)))
    } else if method == Method::Brute {
        guard(colored_partition_work(a.n, a.r), max_work, "brute-force enumeration")?;
        BigInt::from(count_ncn_brute(a.n, a.r, j, k, None))
    } else {
        ncn_sequence(&a.bounds, a.r, a.n, method, max_work)?.pop().expect("sequence has n + 1 terms")
    };
    let json = json!({
        "n": a.n.to_string(), "r": a.r.to_string(), "j": j.to_string(), "k": k.to_string(),
        "count": value.to_string(),
    });
    Ok(Output::new(value.to_string(), json))
}

fn join(values: &[BigInt]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn strings(values: &[BigInt]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

pub fn series(a: &SeriesArgs, max_work: u64) -> Outcome<Output> {
    let values = ncn_sequence(&a.bounds, a.r, a.last, a.method, max_work)?;
    let json = json!({ "values": strings(&values) });
    Ok(Output::new(join(&values), json))
}

pub fn gf(a: &GfArgs) -> Outcome<Output> {
    let g = gf_from_graph(&build_multigraph(a.j, a.k, a.r)?);
    let json = json!({
        "num": strings(g.numerator().coeffs()),
        "den": strings(g.denominator().coeffs()),
    });
    Ok(Output::new(g.to_string(), json))
}

pub fn poly(a: &PolyArgs) -> Outcome<Output> {
    let (j, k) = a.bounds.resolve();
    let filter = filter_of(&a.filter);
    let p = ncn_poly_in_r_with(a.n, j, k, filter.as_ref(), a.limit)?;
    let json = json!({ "coeffs": strings(p.coeffs()), "text": p.to_string() });
    Ok(Output::new(p.to_string(), json))
}

pub fn biject(a: &BijectArgs, max_work: u64) -> Outcome<Output> {
    if a.inverse {
        let t: RPartiteTableau = a.input.parse()?;
        guard(colored_partition_work(t.length() / 2, t.r()), max_work, "preimage search")?;
        let lam = from_vacillating(&t)?;
        let json = json!({ "partition": lam.to_string() });
        return Ok(Output::new(lam.to_string(), json));
    }
    let lam: ColoredSetPartition = a.input.parse()?;
    if a.transpose {
        guard(colored_partition_work(lam.n(), lam.r()), max_work, "preimage search")?;
        let mu = transpose_partition(&lam);
        let json = json!({ "partition": mu.to_string() });
        return Ok(Output::new(mu.to_string(), json));
    }
    let t = to_vacillating(&lam);
    let json = json!({ "tableau": t.to_string() });
    Ok(Output::new(t.to_string(), json))
}

fn report_json(r: &CheckReport) -> Value {
    json!({
        "criterion": r.id.to_string(),
        "check": r.name,
        "status": r.status.to_string(),
        "detail": r.detail,
    })
}

pub fn verify(a: &VerifyArgs) -> Outcome<Output> {
    if a.check == "all" {
        let reports: Vec<CheckReport> = (1..=CRITERIA.len()).filter_map(checks::run_criterion).collect();
        let text = reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n");
        let json = json!({ "reports": reports.iter().map(report_json).collect::<Vec<_>>() });
        let failed = reports.iter().any(|r| r.status == Status::Fail);
        return Ok(Output { text, json, failed });
    }
    let report = match (a.check.as_str(), a.n, a.last) {
        ("symmetry", Some(n), _) => checks::symmetry(n, a.r.unwrap_or(1)),
        ("reflection", _, Some(last)) => checks::reflection(last),
        (name, _, _) => match checks::run_named(name) {
            Some(r) => r,
            None => {
                return usage(format!("unknown check `{name}`; expected `all`, 1-14, or one of {}", CRITERIA.join(", ")))
            }
        },
    };
    let mut text = report.status.to_string();
    if a.verbose {
        text.push('\n');
        text.push_str(&report.to_string());
    }
    Ok(Output { text, json: report_json(&report), failed: report.status == Status::Fail })
}

pub fn fit(a: &FitArgs, max_work: u64) -> Outcome<Output> {
    let seq: Vec<BigInt> = match &a.values {
        Some(vals) => vals
            .iter()
            .map(|v| v.trim().parse::<BigInt>().map_err(|_| Failure::Usage(format!("bad value `{v}`"))))
            .collect::<Outcome<_>>()?,
        None => {
            if a.terms == 0 {
                return usage("-N must be positive");
            }
            ncn_sequence(&a.bounds, a.r, a.terms - 1, Method::Auto, max_work)?
        }
    };
    let found = fit_p_recurrence(&seq, a.max_order, a.max_degree)?;
    Ok(match found {
        Some(rec) => {
            let json = json!({
                "recurrence": rec.to_string(),
                "coeffs": rec.coeffs().iter().map(|p| strings(p.coeffs())).collect::<Vec<_>>(),
            });
            Output::new(rec.to_string(), json)
        }
        None => Output::new("none".into(), json!({ "recurrence": Value::Null })),
    })
}

pub fn enumerate(a: &EnumerateArgs, max_work: u64) -> Outcome<Output> {
    let (j, k) = a.bounds.resolve();
    let keep = |cr: usize, ne: usize| j.admits(cr) && k.admits(ne);
    let lines: Vec<String> = if a.kind == "partition" {
        guard(colored_partition_work(a.n, a.r), max_work, "enumeration")?;
        enumerate_colored(a.n, a.r, None)
            .filter(|lam| {
                let s = cr_ne_oracle(lam);
                keep(s.cr, s.ne)
            })
            .map(|lam| lam.to_string())
            .collect()
    } else {
        let kind: VariantKind = a.kind.parse()?;
        let ground = if kind == VariantKind::Permutation || kind == VariantKind::Tangled { 2 * a.n } else { a.n };
        guard(colored_partition_work(ground, a.r).saturating_mul(a.r as u128), max_work, "enumeration")?;
        enumerate_variant(kind, a.n, a.r)
            .filter(|v| {
                let s = v.stats();
                keep(s.cr, s.ne)
            })
            .map(|v| v.to_string())
            .collect()
    };
    let json = json!({ "count": lines.len().to_string(), "objects": lines });
    Ok(Output::new(lines.join("\n"), json))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let got: Vec<u128> = (0..8).map(bell).collect();
        assert_eq!(got, vec![1, 1, 2, 5, 15, 52, 203, 877]);
        assert_eq!(bell(200), u128::MAX);
    }

    #[test]
    fn auto_method_choice() {
        use Bound::{At, Unbounded};
        assert_eq!(pick_method(Method::Auto, At(2), Unbounded, false), Method::Lattice);
        assert_eq!(pick_method(Method::Auto, At(3), At(2), false), Method::Walks);
        assert_eq!(pick_method(Method::Auto, At(3), Unbounded, false), Method::Brute);
        assert_eq!(pick_method(Method::Auto, At(2), Unbounded, true), Method::Brute);
        assert_eq!(pick_method(Method::Walks, At(2), Unbounded, false), Method::Walks);
    }
}
