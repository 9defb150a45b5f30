use std::fmt::Write as _;
use std::io::Write;

use megs_core::{
    class_breakdown, class_operator, enumerate_megs, full_report, operator_choices, split_anti_diagonal,
    split_sign_components, states, ClassBreakdown, ClassKind, ClassLabel, ComplexMatrix, Complex64, Config,
    LambdaIndex, MultiState,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::{emit, CliError, ConcurrenceArgs, Format, ListArgs, MakeStateArgs, OperatorArgs, StateFile, StateKind};

/// Rounds to 12 decimals for printing; clears negative zero.
fn r12(x: f64) -> f64 {
    let v: f64 = format!("{x:.12}").parse().expect("formatted float parses");
    v + 0.0
}

fn c12(z: Complex64) -> [f64; 2] {
    [r12(z.re), r12(z.im)]
}

fn fmt_complex(z: Complex64) -> String {
    let (re, im) = (r12(z.re), r12(z.im));
    format!("{re:.12}{}{:.12}i", if im < 0.0 { '-' } else { '+' }, im.abs())
}

fn to_json<T: Serialize>(value: &T) -> String {
    crate::json::to_string(value)
}

#[derive(Serialize)]
struct ListDoc {
    m: usize,
    counts: Vec<(usize, u64)>,
    total: usize,
    labels: Vec<String>,
}

pub fn cmd_list(args: &ListArgs, cfg: &Config, stdout: &mut dyn Write) -> Result<(), CliError> {
    let catalog = enumerate_megs(args.m, cfg)?;
    let text = match args.output.format {
        Format::Text => catalog.labels().iter().fold(String::new(), |mut s, l| {
            let _ = writeln!(s, "{l}");
            s
        }),
        Format::Machine => to_json(&ListDoc {
            m: catalog.m(),
            counts: catalog.counts().iter().map(|(&k, &v)| (k, v)).collect(),
            total: catalog.len(),
            labels: catalog.labels().iter().map(ToString::to_string).collect(),
        }),
    };
    emit(args.output.out.as_deref(), stdout, &text)
}

fn make_state(args: &MakeStateArgs) -> Result<(MultiState, String), CliError> {
    let need_m = |kind: &str| {
        args.m
            .ok_or_else(|| CliError::Usage(format!("--m is required for {kind} states")))
    };
    let need_dims = |kind: &str| {
        args.dims
            .clone()
            .ok_or_else(|| CliError::Usage(format!("--dims is required for {kind} states")))
    };
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    Ok(match args.kind {
        StateKind::Bell => {
            if args.m.is_some_and(|m| m != 2) {
                return Err(CliError::Usage("a Bell state has exactly 2 qubits".into()));
            }
            (states::bell(), "bell".into())
        }
        StateKind::Ghz => {
            let m = need_m("GHZ")?;
            (states::ghz(m)?, format!("ghz m={m}"))
        }
        StateKind::W => {
            let m = need_m("W")?;
            if m < 3 {
                return Err(CliError::Usage(format!("W states need m >= 3, got {m}")));
            }
            (states::w(m)?, format!("w m={m}"))
        }
        StateKind::Product => {
            let dims = need_dims("product")?;
            (states::product(&dims, &mut rng)?, format!("product seed={}", args.seed))
        }
        StateKind::Random => {
            let dims = need_dims("random")?;
            (states::random(&dims, &mut rng)?, format!("random seed={}", args.seed))
        }
    })
}

pub fn cmd_make_state(args: &MakeStateArgs, stdout: &mut dyn Write) -> Result<(), CliError> {
    let (state, label) = make_state(args)?;
    let file = StateFile::from_state(&state, Some(label));
    emit(args.out.as_deref(), stdout, &file.to_json())
}

#[derive(Serialize)]
struct PartDoc {
    part: String,
    value: [f64; 2],
}

#[derive(Serialize)]
struct OperatorValueDoc {
    pi_half_pair: (usize, usize),
    lambda: Vec<(usize, usize)>,
    value: [f64; 2],
    magnitude: f64,
    parts: Vec<PartDoc>,
}

#[derive(Serialize)]
struct ClassDoc {
    label: String,
    value: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    operators: Option<Vec<OperatorValueDoc>>,
}

#[derive(Serialize)]
struct ReportDoc {
    per_class: Vec<ClassDoc>,
    w_class: f64,
    total: f64,
    state_digest: String,
}

#[derive(Serialize)]
struct ConcurrenceDoc {
    dims: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<ReportDoc>,
    #[serde(skip_serializing_if = "Option::is_none")]
    class: Option<ClassDoc>,
}

fn class_doc(b: &ClassBreakdown, verbose: bool) -> ClassDoc {
    ClassDoc {
        label: b.label.to_string(),
        value: r12(b.value),
        operators: verbose.then(|| {
            b.operators
                .iter()
                .map(|o| OperatorValueDoc {
                    pi_half_pair: o.pi_half_pair,
                    lambda: o.lambda.pairs().to_vec(),
                    value: c12(o.value),
                    magnitude: r12(o.value.norm()),
                    parts: o
                        .parts
                        .iter()
                        .map(|(name, v)| PartDoc {
                            part: name.clone(),
                            value: c12(*v),
                        })
                        .collect(),
                })
                .collect()
        }),
    }
}

fn write_breakdown_text(out: &mut String, b: &ClassBreakdown) {
    for o in &b.operators {
        let _ = writeln!(
            out,
            "    pair ({},{})  lambda {}  |value| {:.12}  value {}",
            o.pi_half_pair.0,
            o.pi_half_pair.1,
            o.lambda,
            r12(o.value.norm()),
            fmt_complex(o.value)
        );
        for (name, v) in &o.parts {
            let _ = writeln!(out, "        {name:<6}{}", fmt_complex(*v));
        }
    }
}

pub fn cmd_concurrence(args: &ConcurrenceArgs, cfg: &Config, stdout: &mut dyn Write) -> Result<(), CliError> {
    let state = StateFile::read(&args.state)?.to_state(args.normalize)?;
    let selector = args.label.trim();
    let text = if selector.eq_ignore_ascii_case("all") {
        let report = full_report(&state, cfg)?;
        let breakdowns: Vec<ClassBreakdown> = if args.verbose {
            report
                .per_class
                .keys()
                .map(|&l| class_breakdown(&state, l, cfg))
                .collect::<Result<_, _>>()?
        } else {
            Vec::new()
        };
        match args.output.format {
            Format::Text => {
                let mut s = String::new();
                let _ = writeln!(s, "dims    {:?}", state.dims());
                let _ = writeln!(s, "digest  {}", report.state_digest);
                let width = report.per_class.keys().map(|l| l.to_string().len()).max().unwrap_or(0).max(5);
                for (i, (label, v)) in report.per_class.iter().enumerate() {
                    let _ = writeln!(s, "{:<width$}  {:.12}", label.to_string(), r12(*v));
                    if let Some(b) = breakdowns.get(i) {
                        write_breakdown_text(&mut s, b);
                    }
                }
                let _ = writeln!(s, "{:<width$}  {:.12}", "W", r12(report.w_class));
                let _ = writeln!(s, "{:<width$}  {:.12}", "total", r12(report.total));
                s
            }
            Format::Machine => {
                let per_class = report
                    .per_class
                    .iter()
                    .enumerate()
                    .map(|(i, (label, v))| match breakdowns.get(i) {
                        Some(b) => class_doc(b, true),
                        None => ClassDoc {
                            label: label.to_string(),
                            value: r12(*v),
                            operators: None,
                        },
                    })
                    .collect();
                to_json(&ConcurrenceDoc {
                    dims: state.dims().to_vec(),
                    report: Some(ReportDoc {
                        per_class,
                        w_class: r12(report.w_class),
                        total: r12(report.total),
                        state_digest: report.state_digest,
                    }),
                    class: None,
                })
            }
        }
    } else {
        let label: ClassLabel = selector.parse()?;
        let b = class_breakdown(&state, label, cfg)?;
        match args.output.format {
            Format::Text => {
                let mut s = format!("{label}  {:.12}\n", r12(b.value));
                if args.verbose {
                    write_breakdown_text(&mut s, &b);
                }
                s
            }
            Format::Machine => to_json(&ConcurrenceDoc {
                dims: state.dims().to_vec(),
                report: None,
                class: Some(class_doc(&b, args.verbose)),
            }),
        }
    };
    emit(args.output.out.as_deref(), stdout, &text)
}

fn parse_pair(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("cannot parse index pair {s:?}; expected `a,b`"));
    let t = s.trim().trim_start_matches('(').trim_end_matches(')');
    let (a, b) = t.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn parse_lambda(s: &str) -> Result<LambdaIndex, CliError> {
    s.split(';').map(parse_pair).collect::<Result<_, _>>().map(LambdaIndex::new)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Part {
    Full,
    Upper,
    Lower,
    Sign(usize),
}

impl Part {
    fn parse(s: &str) -> Result<Self, CliError> {
        let up = s.trim().to_ascii_uppercase();
        match up.as_str() {
            "FULL" => Ok(Part::Full),
            "U" => Ok(Part::Upper),
            "L" => Ok(Part::Lower),
            _ => up
                .strip_prefix("P_")
                .or_else(|| up.strip_prefix('P'))
                .and_then(|i| i.parse().ok())
                .map(Part::Sign)
                .ok_or_else(|| CliError::Usage(format!("unknown part {s:?}; use FULL, U, L or P_i"))),
        }
    }

    fn name(self) -> String {
        match self {
            Part::Full => "FULL".into(),
            Part::Upper => "U".into(),
            Part::Lower => "L".into(),
            Part::Sign(i) => format!("P_{i}"),
        }
    }
}

#[derive(Serialize)]
struct OperatorDoc {
    dims: Vec<usize>,
    label: String,
    pi_half_pair: (usize, usize),
    lambda: Vec<(usize, usize)>,
    part: String,
    rows: Vec<Vec<[f64; 2]>>,
}

pub fn cmd_operator_dump(args: &OperatorArgs, cfg: &Config, stdout: &mut dyn Write) -> Result<(), CliError> {
    let label: ClassLabel = args.label.parse()?;
    let part = Part::parse(&args.part)?;
    let pair = args.pair.as_deref().map(parse_pair).transpose()?;
    let lambda = args.lambda.as_deref().map(parse_lambda).transpose()?;
    let (pair, lambda) = match (pair, lambda) {
        (Some(p), Some(l)) => (p, l),
        (pair, lambda) => operator_choices(&args.dims, label)?
            .into_iter()
            .find(|(p, l)| pair.is_none_or(|q| q == *p) && lambda.as_ref().is_none_or(|q| q == l))
            .ok_or_else(|| CliError::Usage(format!("no operator of {label} matches the given pair/lambda")))?,
    };
    let op = class_operator(&args.dims, label, pair, lambda, cfg)?;
    let matrix: ComplexMatrix = match (part, label.kind()) {
        (Part::Full, _) => op.matrix().clone(),
        (Part::Upper | Part::Lower, ClassKind::Epr) => {
            let (u, l) = split_anti_diagonal(&op)?;
            if part == Part::Upper { u } else { l }
        }
        (Part::Sign(i), ClassKind::Ghz) => {
            let parts = split_sign_components(&op)?;
            let n = parts.len();
            parts
                .into_iter()
                .nth(i)
                .ok_or_else(|| CliError::Usage(format!("part P_{i} out of range; {label} has P_0..P_{}", n - 1)))?
        }
        _ => {
            return Err(CliError::Usage(format!(
                "part {} does not apply to {label}; EPR uses U/L, GHZ uses P_i",
                part.name()
            )))
        }
    };
    let text = match args.output.format {
        Format::Machine => to_json(&OperatorDoc {
            dims: args.dims.clone(),
            label: label.to_string(),
            pi_half_pair: op.pi_half_pair(),
            lambda: op.lambda().pairs().to_vec(),
            part: part.name(),
            rows: (0..matrix.rows()).map(|i| matrix.row(i).iter().map(|z| c12(*z)).collect()).collect(),
        }),
        Format::Text => {
            let mut s = format!(
                "{label}  pair ({},{})  lambda {}  part {}\n",
                op.pi_half_pair().0,
                op.pi_half_pair().1,
                op.lambda(),
                part.name()
            );
            for i in 0..matrix.rows() {
                let row: Vec<String> = matrix
                    .row(i)
                    .iter()
                    .map(|z| match (z.re, z.im) {
                        (re, 0.0) => format!("{:>5}", r12(re)),
                        (0.0, im) => format!("{:>4}i", r12(im)),
                        _ => fmt_complex(*z),
                    })
                    .collect();
                let _ = writeln!(s, "{}", row.join(" "));
            }
            s
        }
    };
    emit(args.output.out.as_deref(), stdout, &text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_clears_negative_zero() {
        assert_eq!(r12(-1e-17).to_bits(), 0.0f64.to_bits());
        assert_eq!(r12(3f64.sqrt()), 1.732050807569);
        assert_eq!(fmt_complex(Complex64::new(-1.0, -1e-18)), "-1.000000000000+0.000000000000i");
    }

    #[test]
    fn part_and_pair_parsing() {
        assert_eq!(Part::parse("p_2").unwrap(), Part::Sign(2));
        assert_eq!(Part::parse("full").unwrap(), Part::Full);
        assert!(Part::parse("Q").is_err());
        assert_eq!(parse_pair("(0, 2)").unwrap(), (0, 2));
        assert!(parse_pair("0").is_err());
        assert_eq!(parse_lambda("0,1;1,2").unwrap().pairs(), &[(0, 1), (1, 2)]);
    }
}
