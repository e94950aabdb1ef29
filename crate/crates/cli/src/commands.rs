use std::collections::BTreeMap;
use std::fmt::Write as _;

use anyhow::{anyhow, bail, Result};
use clap::{Args, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use invseq::closedform;
use invseq::counting::{
    brute_stat_triangle, count_avoiders, stat_triangle, CountEntry, CountReport, Method,
};
use invseq::seqcore::Pattern;
use invseq::series::{
    assemble_from_dp, catalan_root, check_f11_closed, check_kernel_roots, check_l_last,
    closed_form, format_rational, parse_rational, sqrt_one_minus_4q, verify_with, Form, GfData,
    Identity, ParamPoint, Which,
};
use invseq::{BigTriangle, Rational, RationalSeries};

use crate::syntax::{class_label, parse_class, parse_classes, parse_range};
use crate::{Format, GlobalOpts, Outcome};

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

// ---------------------------------------------------------------- count

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Brute,
    Dp,
    Formula,
    All,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    /// One pattern class, e.g. 0012 or 021,120.
    #[arg(long, default_value = "0012")]
    pub patterns: String,
    /// Lengths, e.g. 1..6 (inclusive) or 7.
    #[arg(long, default_value = "1..8")]
    pub n: String,
    #[arg(long, value_enum, default_value_t = MethodArg::All)]
    pub method: MethodArg,
    /// Count only sequences whose last entry is n-1 (class 0012 only).
    #[arg(long)]
    pub last_max: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    Avoid0012,
    LastMax0012,
    Bell,
    Schroder,
    Other,
}

impl Family {
    fn of(class: &[Pattern], last_max: bool) -> Result<Family> {
        let label = class_label(class);
        Ok(match (label.as_str(), last_max) {
            ("0012", false) => Family::Avoid0012,
            ("0012", true) => Family::LastMax0012,
            (_, true) => bail!("--last-max is only defined for the class 0012"),
            ("011", _) => Family::Bell,
            ("021", _) => Family::Schroder,
            _ => Family::Other,
        })
    }

    fn supports(self, method: Method) -> bool {
        match method {
            Method::Brute => true,
            Method::Dp => matches!(self, Family::Avoid0012 | Family::LastMax0012),
            Method::Formula => self != Family::Other,
        }
    }

    fn count(self, class: &[Pattern], n: usize, method: Method, cap: usize) -> Result<BigUint> {
        if !self.supports(method) {
            bail!("method {method} is not available for this class");
        }
        let value = match (self, method) {
            (Family::LastMax0012, m) => invseq::counting::count_last_max(n, m, cap)?,
            (Family::Avoid0012, m) => invseq::counting::count_avoid_0012(n, m, cap)?,
            (_, Method::Brute) => count_avoiders(n, class, cap)?,
            (Family::Bell, _) => closedform::bell(n)?,
            (Family::Schroder, _) => closedform::schroder(n)?,
            _ => unreachable!("checked by supports"),
        };
        Ok(value)
    }
}

#[derive(Debug, Serialize)]
struct AllRow {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    brute: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    dp: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    formula: Option<String>,
    agree: bool,
}

#[derive(Debug, Serialize)]
struct AllReport {
    family: String,
    methods: Vec<Method>,
    rows: Vec<AllRow>,
    agree: bool,
}

pub fn count(args: &CountArgs, global: &GlobalOpts) -> Result<Outcome> {
    let class = parse_class(&args.patterns)?;
    let family = Family::of(&class, args.last_max)?;
    let range = parse_range(&args.n)?;
    if *range.start() == 0 {
        bail!("n must be at least 1");
    }
    let mut label = class_label(&class);
    if args.last_max {
        label.push_str(":last-max");
    }
    let cap = global.brute_cap;

    let single = match args.method {
        MethodArg::Brute => Some(Method::Brute),
        MethodArg::Dp => Some(Method::Dp),
        MethodArg::Formula => Some(Method::Formula),
        MethodArg::All => None,
    };
    if let Some(method) = single {
        let values = range
            .clone()
            .map(|n| {
                Ok(CountEntry {
                    n,
                    count: family.count(&class, n, method, cap)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let report = CountReport::new(label, method, values)?;
        let text = match global.format {
            Format::Json => json_line(&report),
            Format::Csv => {
                let mut s = String::from("family,method,n,count\n");
                for e in &report.values {
                    let _ = writeln!(s, "{},{},{},{}", csv_field(&report.family), method, e.n, e.count);
                }
                s
            }
            Format::Pretty => {
                let mut s = format!("# family {} method {}\n", report.family, method);
                for e in &report.values {
                    let _ = writeln!(s, "{:>4}  {}", e.n, e.count);
                }
                s
            }
        };
        return Ok(Outcome {
            text,
            ok: true,
            notes: Vec::new(),
        });
    }

    let methods: Vec<Method> = Method::ALL
        .into_iter()
        .filter(|&m| family.supports(m))
        .collect();
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for n in range {
        let mut got: BTreeMap<&'static str, BigUint> = BTreeMap::new();
        for &m in &methods {
            if m == Method::Brute && n > cap {
                continue;
            }
            got.insert(m.as_str(), family.count(&class, n, m, cap)?);
        }
        let mut values = got.values();
        let first = values.next().cloned();
        let agree = values.all(|v| Some(v) == first.as_ref());
        if !agree {
            let detail: Vec<String> = got.iter().map(|(m, v)| format!("{m}={v}")).collect();
            notes.push(format!("disagreement at n={n}: {}", detail.join(" ")));
        }
        let s = |m: &str| got.get(m).map(|v| v.to_string());
        rows.push(AllRow {
            n,
            brute: s("brute"),
            dp: s("dp"),
            formula: s("formula"),
            agree,
        });
    }
    let all_agree = rows.iter().all(|r| r.agree);
    let report = AllReport {
        family: label,
        methods: methods.clone(),
        rows,
        agree: all_agree,
    };
    let cell = |v: &Option<String>| v.clone().unwrap_or_default();
    let text = match global.format {
        Format::Json => json_line(&report),
        Format::Csv => {
            let mut s = String::from("n,brute,dp,formula,agree\n");
            for r in &report.rows {
                let _ = writeln!(s, "{},{},{},{},{}", r.n, cell(&r.brute), cell(&r.dp), cell(&r.formula), r.agree);
            }
            s
        }
        Format::Pretty => {
            let mut s = format!("# family {}\n", report.family);
            let _ = writeln!(s, "{:>4}  {:>14}  {:>14}  {:>14}  agree", "n", "brute", "dp", "formula");
            let dash = |v: &Option<String>| v.clone().unwrap_or_else(|| "-".into());
            for r in &report.rows {
                let _ = writeln!(
                    s,
                    "{:>4}  {:>14}  {:>14}  {:>14}  {}",
                    r.n,
                    dash(&r.brute),
                    dash(&r.dp),
                    dash(&r.formula),
                    if r.agree { "yes" } else { "NO" }
                );
            }
            let _ = writeln!(s, "agreement: {}", if all_agree { "yes" } else { "NO" });
            s
        }
    };
    Ok(Outcome {
        text,
        ok: all_agree,
        notes,
    })
}

// ---------------------------------------------------------------- table

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableSource {
    Dp,
    Brute,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = TableSource::Dp)]
    pub source: TableSource,
}

pub fn table(args: &TableArgs, global: &GlobalOpts) -> Result<Outcome> {
    if args.n == 0 {
        bail!("n must be at least 1");
    }
    let tri: BigTriangle = match args.source {
        TableSource::Dp => stat_triangle(args.n)?,
        TableSource::Brute => brute_stat_triangle(args.n, global.brute_cap)?,
    };
    let text = match global.format {
        Format::Csv => tri.to_csv(),
        Format::Json => {
            let mut s = tri.to_json();
            s.push('\n');
            s
        }
        Format::Pretty => {
            let mut s = format!("# f_{}(k, l): rows l, columns k\n", args.n);
            for l in 0..args.n {
                let row: Vec<String> = (0..=l).map(|k| tri.cell(k, l).to_string()).collect();
                let _ = writeln!(s, "l={l:<3} {}", row.join(" "));
            }
            let _ = writeln!(s, "total {}", tri.total());
            s
        }
    };
    Ok(Outcome {
        text,
        ok: true,
        notes: Vec::new(),
    })
}

// ---------------------------------------------------------------- series

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesKind {
    #[value(name = "L")]
    L,
    #[value(name = "D")]
    D,
    #[value(name = "F")]
    F,
    Sqrt,
    Catalan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesSource {
    Dp,
    Closed,
    Both,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub which: SeriesKind,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub x: String,
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    pub y: String,
    #[arg(long, default_value_t = 10)]
    pub order: usize,
    #[arg(long, value_enum, default_value_t = SeriesSource::Closed)]
    pub source: SeriesSource,
}

#[derive(Debug, Serialize)]
struct SeriesReport {
    which: String,
    x: String,
    y: String,
    order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    dp: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    closed: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<Vec<String>>,
}

fn coeff_strings(s: &RationalSeries) -> Vec<String> {
    s.coeffs().iter().map(format_rational).collect()
}

pub fn series(args: &SeriesArgs, global: &GlobalOpts) -> Result<Outcome> {
    let x = parse_rational(&args.x)?;
    let y = parse_rational(&args.y)?;
    let point = ParamPoint::new(x.clone(), y.clone());
    let order = args.order;
    let (name, dp, closed) = match args.which {
        SeriesKind::Sqrt => ("sqrt(1-4q)".to_string(), None, Some(sqrt_one_minus_4q::<Rational>(order))),
        SeriesKind::Catalan => ("y1".to_string(), None, Some(catalan_root::<Rational>(order))),
        kind => {
            let which = match kind {
                SeriesKind::L => Which::L,
                SeriesKind::D => Which::D,
                _ => Which::F,
            };
            let want_dp = args.source != SeriesSource::Closed;
            let want_closed = args.source != SeriesSource::Dp;
            if want_dp && order == 0 {
                bail!("dp assembly needs order >= 1");
            }
            let dp = want_dp.then(|| assemble_from_dp(which, &point, order)).transpose()?;
            let closed = want_closed.then(|| closed_form(which, &point, order)).transpose()?;
            (which.to_string(), dp, closed)
        }
    };
    let residual = match (&dp, &closed) {
        (Some(a), Some(b)) => Some(a - b),
        _ => None,
    };
    let ok = residual.as_ref().is_none_or(|r| r.is_zero());
    let notes = match &residual {
        Some(r) if !ok => vec![format!(
            "residual nonzero from q^{}: {}",
            r.first_nonzero().unwrap_or(0),
            r
        )],
        _ => Vec::new(),
    };
    let text = match global.format {
        Format::Json => json_line(&SeriesReport {
            which: name,
            x: format_rational(&x),
            y: format_rational(&y),
            order,
            dp: dp.as_ref().map(coeff_strings),
            closed: closed.as_ref().map(coeff_strings),
            residual: residual.as_ref().map(coeff_strings),
        }),
        Format::Csv => {
            let cols: Vec<(&str, &RationalSeries)> = [("dp", &dp), ("closed", &closed), ("residual", &residual)]
                .into_iter()
                .filter_map(|(n, s)| s.as_ref().map(|s| (n, s)))
                .collect();
            let mut s = String::from("i");
            for (n, _) in &cols {
                s.push(',');
                s.push_str(n);
            }
            s.push('\n');
            for i in 0..=order {
                s.push_str(&i.to_string());
                for (_, c) in &cols {
                    s.push(',');
                    s.push_str(&format_rational(c.coeff(i)));
                }
                s.push('\n');
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            let show_point = !matches!(args.which, SeriesKind::Sqrt | SeriesKind::Catalan);
            if show_point {
                let _ = writeln!(s, "# {name} at x={x}, y={y}, order {order}");
            } else {
                let _ = writeln!(s, "# {name}, order {order}");
            }
            if let Some(d) = &dp {
                let _ = writeln!(s, "dp:       {d}");
            }
            if let Some(c) = &closed {
                let label = if dp.is_some() { "closed:   " } else { "" };
                let _ = writeln!(s, "{label}{c}");
            }
            if let Some(r) = &residual {
                let _ = writeln!(s, "residual: {r}");
            }
            s
        }
    };
    Ok(Outcome { text, ok, notes })
}

// ---------------------------------------------------------------- verify

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// An identity name (G-gf, func-G, D-1, D-2, F-x1, F-xy, F-1y),
    /// kernel-roots, F11-closed, L-last, or all.
    #[arg(long, default_value = "all")]
    pub identity: String,
    #[arg(long, default_value_t = 50)]
    pub order: usize,
    /// Sample values per parameter; defaults to order + 3.
    #[arg(long)]
    pub samples: Option<usize>,
    /// Form residuals without clearing denominators (skips singular samples).
    #[arg(long)]
    pub as_stated: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Check {
    Identity(Identity),
    KernelRoots,
    F11Closed,
    LLast,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Identity(id) => id.name(),
            Check::KernelRoots => "kernel-roots",
            Check::F11Closed => "F11-closed",
            Check::LLast => "L-last",
        }
    }

    fn all() -> Vec<Check> {
        let mut v: Vec<Check> = Identity::ALL.into_iter().map(Check::Identity).collect();
        v.extend([Check::KernelRoots, Check::F11Closed, Check::LLast]);
        v
    }

    fn parse(s: &str) -> Result<Vec<Check>> {
        if s.eq_ignore_ascii_case("all") {
            return Ok(Check::all());
        }
        Check::all()
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s))
            .map(|c| vec![c])
            .ok_or_else(|| anyhow!(invseq::Error::UnknownIdentity(s.to_string())))
    }
}

#[derive(Debug, Serialize)]
struct CheckResult {
    check: String,
    passed: bool,
    points: usize,
    detail: String,
}

pub fn verify(args: &VerifyArgs, global: &GlobalOpts) -> Result<Outcome> {
    let checks = Check::parse(&args.identity)?;
    if args.order == 0 {
        bail!("order must be at least 1");
    }
    let samples = args.samples.unwrap_or(args.order + 3);
    let form = if args.as_stated { Form::AsStated } else { Form::Cleared };
    let needs_data = checks.iter().any(|c| matches!(c, Check::Identity(_)));
    let data = needs_data.then(|| GfData::<Rational>::new(args.order));
    let mut results = Vec::new();
    for check in checks {
        let result = match check {
            Check::Identity(id) => {
                let rep = verify_with(data.as_ref().expect("built"), id, samples, form)?;
                let detail = match rep.failures.first() {
                    None => format!("order {} samples {}", rep.order, rep.samples_per_param),
                    Some(f) => format!(
                        "{} failing points; first at {}: coefficient of q^{} is {}",
                        rep.failures.len(),
                        f.point,
                        f.first_nonzero,
                        f.coefficient
                    ),
                };
                CheckResult {
                    check: id.name().into(),
                    passed: rep.passed(),
                    points: rep.points,
                    detail,
                }
            }
            Check::KernelRoots => {
                let rep = check_kernel_roots::<Rational>(args.order, samples.min(16))?;
                let prefix: Vec<String> = rep.catalan_prefix.iter().take(5).map(|c| c.to_string()).collect();
                let failed: Vec<&str> = rep
                    .checks
                    .iter()
                    .filter(|(_, ok)| !ok)
                    .map(|(d, _)| d.as_str())
                    .collect();
                let detail = if failed.is_empty() {
                    format!("root y1 = {}, ...", prefix.join(","))
                } else {
                    format!("failed: {}", failed.join("; "))
                };
                CheckResult {
                    check: check.name().into(),
                    passed: rep.passed(),
                    points: rep.checks.len(),
                    detail,
                }
            }
            Check::F11Closed | Check::LLast => {
                let bad = if check == Check::F11Closed {
                    check_f11_closed::<Rational>(args.order)
                } else {
                    check_l_last::<Rational>(args.order)
                };
                CheckResult {
                    check: check.name().into(),
                    passed: bad.is_empty(),
                    points: args.order + 1,
                    detail: if bad.is_empty() {
                        format!("coefficients 0..={} match", args.order)
                    } else {
                        format!("mismatch at n = {bad:?}")
                    },
                }
            }
        };
        results.push(result);
    }
    let ok = results.iter().all(|r| r.passed);
    let notes = results
        .iter()
        .filter(|r| !r.passed)
        .map(|r| format!("{} failed: {}", r.check, r.detail))
        .collect();
    let text = match global.format {
        Format::Json => json_line(&results),
        Format::Csv => {
            let mut s = String::from("check,passed,points,detail\n");
            for r in &results {
                let _ = writeln!(s, "{},{},{},{}", r.check, r.passed, r.points, csv_field(&r.detail));
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            for r in &results {
                let _ = writeln!(
                    s,
                    "{} {:<13} points={:<5} {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.check,
                    r.points,
                    r.detail
                );
            }
            s
        }
    };
    Ok(Outcome { text, ok, notes })
}

// ---------------------------------------------------------------- wilf

#[derive(Debug, Args)]
pub struct WilfArgs {
    /// Semicolon-separated pattern classes.
    #[arg(long, default_value = "0012;021,120;102,110;102,120")]
    pub classes: String,
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
}

#[derive(Debug, Serialize)]
struct WilfRow {
    n: usize,
    counts: Vec<String>,
    equal: bool,
}

#[derive(Debug, Serialize)]
struct WilfReport {
    classes: Vec<String>,
    rows: Vec<WilfRow>,
    equivalent: bool,
}

pub fn wilf(args: &WilfArgs, global: &GlobalOpts) -> Result<Outcome> {
    let classes = parse_classes(&args.classes)?;
    if args.max_n > global.brute_cap {
        return Err(invseq::Error::CapExceeded {
            n: args.max_n,
            cap: global.brute_cap,
        }
        .into());
    }
    let labels: Vec<String> = classes.iter().map(|c| class_label(c)).collect();
    let mut rows = Vec::new();
    for n in 1..=args.max_n {
        let counts = classes
            .iter()
            .map(|c| count_avoiders(n, c, global.brute_cap))
            .collect::<Result<Vec<_>, _>>()?;
        let equal = counts.iter().all(|c| *c == counts[0]);
        rows.push(WilfRow {
            n,
            counts: counts.iter().map(|c| c.to_string()).collect(),
            equal,
        });
    }
    let equivalent = rows.iter().all(|r| r.equal);
    let notes = rows
        .iter()
        .find(|r| !r.equal)
        .map(|r| vec![format!("classes differ first at n={}: {}", r.n, r.counts.join(" vs "))])
        .unwrap_or_default();
    let report = WilfReport {
        classes: labels,
        rows,
        equivalent,
    };
    let text = match global.format {
        Format::Json => json_line(&report),
        Format::Csv => {
            let mut s = String::from("n");
            for l in &report.classes {
                s.push(',');
                s.push_str(&csv_field(l));
            }
            s.push_str(",equal\n");
            for r in &report.rows {
                let _ = writeln!(s, "{},{},{}", r.n, r.counts.join(","), r.equal);
            }
            s
        }
        Format::Pretty => {
            let mut s = String::new();
            let header: Vec<String> = report.classes.iter().map(|l| format!("{l:>10}")).collect();
            let _ = writeln!(s, "{:>3}  {}  equal", "n", header.join("  "));
            for r in &report.rows {
                let cells: Vec<String> = r.counts.iter().map(|c| format!("{c:>10}")).collect();
                let _ = writeln!(s, "{:>3}  {}  {}", r.n, cells.join("  "), if r.equal { "yes" } else { "NO" });
            }
            let _ = writeln!(s, "Wilf-equivalent through n={}: {}", args.max_n, if equivalent { "yes" } else { "no" });
            s
        }
    };
    Ok(Outcome {
        text,
        ok: equivalent,
        notes,
    })
}
