use std::io::Write;
use std::path::Path;

use somos_core::algebra::Rational;
use somos_core::bfile::BFile;
use somos_core::invariants::{build_representation, manifest, run_suite, DegreeComparison, Pattern, Suite};
use somos_core::report::Report;
use somos_core::somos::{
    eval_s, find_alignments, search_integer_windows, Extension, SomosSequence, SomosRule, Term, TransformSpec,
};

use crate::Format;

type Outcome = Result<bool, String>;

fn io(e: std::io::Error) -> String {
    if e.kind() == std::io::ErrorKind::BrokenPipe {
        std::process::exit(0);
    }
    format!("write failed: {e}")
}

pub fn parse_init(text: &str) -> Result<Vec<Rational>, String> {
    text.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<Rational>().map_err(|_| format!("bad initial value '{t}'"))
        })
        .collect()
}

fn sequence(k: usize, init: &str, base: i64) -> Result<SomosSequence, String> {
    let rule = SomosRule::new(k).map_err(|e| e.to_string())?;
    SomosSequence::new(rule, base, parse_init(init)?).map_err(|e| e.to_string())
}

pub fn verify(
    out: &mut dyn Write,
    suite: &str,
    path: Option<&Path>,
    format: Format,
    print_manifest: bool,
    no_timing: bool,
) -> Outcome {
    let suite: Suite = suite.parse()?;
    if print_manifest {
        let text = serde_json::to_string_pretty(&manifest(suite)).map_err(|e| e.to_string())?;
        writeln!(out, "{text}").map_err(io)?;
        return Ok(true);
    }
    let mut report = Report::new(suite, run_suite(suite));
    if no_timing {
        report = report.without_timing();
    }
    let body = match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    match path {
        Some(p) => {
            std::fs::write(p, body).map_err(|e| format!("cannot write {}: {e}", p.display()))?;
            let m = &report.summary;
            writeln!(
                out,
                "{}: {} claims, {} verified, {} expected refutations, {} unexpected refutations, {} errors",
                suite, m.total, m.verified, m.expected_refuted, m.unexpected_refuted, m.errors
            )
            .map_err(io)?;
        }
        None => out.write_all(body.as_bytes()).map_err(io)?,
    }
    Ok(report.exit_ok())
}

fn show(term: &Term) -> String {
    match term {
        Term::Value(v) => v.to_string(),
        Term::Blocked { pivot } => format!("blocked (a({pivot}) = 0)"),
    }
}

#[allow(clippy::too_many_arguments)]
pub fn seq(
    out: &mut dyn Write,
    k: usize,
    init: &str,
    base: i64,
    from: Option<i64>,
    to: Option<i64>,
    transform: Option<&str>,
    windows: bool,
) -> Outcome {
    let mut s = sequence(k, init, base)?;
    let from = from.unwrap_or(base);
    let to = to.unwrap_or(base + k as i64 + 7);
    if to < from {
        return Err(format!("empty range {from}..{to}"));
    }
    let spec: TransformSpec = match transform {
        Some(t) => t.parse()?,
        None => TransformSpec::identity(),
    };
    let terms: Vec<(i64, Term)> = (from..=to)
        .map(|n| {
            let t = match s.term(spec.source_index(n)) {
                Term::Value(v) => Term::Value(spec.factor(n) * v),
                blocked => blocked,
            };
            (n, t)
        })
        .collect();
    if windows {
        for w in terms.windows(k) {
            let vals: Option<Vec<Rational>> = w
                .iter()
                .map(|(_, t)| match t {
                    Term::Value(v) => Some(v.clone()),
                    Term::Blocked { .. } => None,
                })
                .collect();
            let n = w[0].0;
            match vals {
                Some(v) => {
                    let coords: Vec<String> = v.iter().map(ToString::to_string).collect();
                    if k == 4 {
                        writeln!(out, "{n} ({}) S = {}", coords.join(":"), eval_s(&v)).map_err(io)?;
                    } else {
                        writeln!(out, "{n} ({})", coords.join(":")).map_err(io)?;
                    }
                }
                None => writeln!(out, "{n} blocked").map_err(io)?,
            }
        }
    } else {
        for (n, t) in &terms {
            writeln!(out, "{n} {}", show(t)).map_err(io)?;
        }
    }
    Ok(true)
}

fn mark(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "match",
        Some(false) => "mismatch",
        None => "no printed list",
    }
}

pub fn degrees(out: &mut dyn Write, k: usize, pattern: &str, n_max: usize) -> Outcome {
    let pattern: Pattern = pattern.parse()?;
    let rep = build_representation(k).map_err(|e| e.to_string())?;
    let cmp = DegreeComparison::compute(&rep, pattern, n_max).map_err(|e| e.to_string())?;
    let name = match pattern {
        Pattern::F => "F^n",
        Pattern::RF => "R F^n",
        Pattern::J => "J(alpha)^n",
    };
    writeln!(out, "Somos-{k}, deg {name}, n = 0..{n_max}").map_err(io)?;
    writeln!(out, "{:>3} {:>9} {:>10} {:>8}", "n", "computed", "reflected", "printed").map_err(io)?;
    for n in 0..=n_max {
        let printed = cmp
            .expected
            .as_ref()
            .and_then(|e| e.get(n))
            .map_or_else(|| "-".to_string(), ToString::to_string);
        writeln!(out, "{n:>3} {:>9} {:>10} {printed:>8}", cmp.computed[n], cmp.reflected[n]).map_err(io)?;
    }
    writeln!(out, "reading 1, term by term: {}", mark(cmp.in_order)).map_err(io)?;
    writeln!(out, "reading 2, set of degrees {:?}: {}", cmp.degree_set, mark(cmp.as_set)).map_err(io)?;
    Ok(cmp.expected.is_none() || cmp.in_order == Some(true) || cmp.as_set == Some(true))
}

fn extension(e: &Extension) -> String {
    match e {
        Extension::Integral { steps } => format!("integral for {steps}"),
        Extension::NonIntegral { index } => format!("non-integral at {index}"),
        Extension::Blocked { index } => format!("blocked at {index}"),
    }
}

pub fn search(out: &mut dyn Write, height: i64, len: usize, format: Format) -> Outcome {
    let found = search_integer_windows(height, len).map_err(|e| e.to_string())?;
    match format {
        Format::Json => {
            let text = serde_json::to_string_pretty(&found).map_err(|e| e.to_string())?;
            writeln!(out, "{text}").map_err(io)?;
        }
        Format::Text => {
            for w in &found {
                let c = w.coords;
                let p = format!("({}:{}:{}:{})", c[0], c[1], c[2], c[3]);
                writeln!(out, "{p:<24} forward {:<20} backward {}", extension(&w.forward), extension(&w.backward))
                    .map_err(io)?;
            }
            writeln!(out, "{} windows with height <= {height}", found.len()).map_err(io)?;
        }
    }
    Ok(true)
}

pub fn crosscheck(
    out: &mut dyn Write,
    path: &Path,
    k: usize,
    init: &str,
    base: i64,
    max_shift: i64,
    min_overlap: usize,
) -> Outcome {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let b: BFile = text.parse().map_err(|e| format!("{}: {e}", path.display()))?;
    let reference = b.to_map();
    let (lo, hi) = (b.entries[0].0, b.entries[b.len() - 1].0);
    let mut s = sequence(k, init, base)?;
    for n in (lo - max_shift)..=(hi + max_shift) {
        let _ = s.get(n);
    }
    let overlap = s.cached_terms().filter(|(n, _)| reference.contains_key(n)).count();
    if max_shift == 0 && overlap == 0 {
        return Err(format!("no overlap between {lo}..{hi} and the generated terms"));
    }
    let name = b.id.clone().unwrap_or_else(|| path.display().to_string());
    let found = find_alignments(&s, &reference, max_shift, min_overlap.max(1));
    if found.is_empty() {
        let first = s.cached_terms().find_map(|(n, v)| {
            reference
                .get(&n)
                .filter(|r| Rational::from_integer((*r).clone()) != *v)
                .map(|r| format!("index {n}: generated {v}, b-file {r}"))
        });
        writeln!(out, "mismatch against {name}: {}", first.unwrap_or_else(|| "overlap too short".into()))
            .map_err(io)?;
        return Ok(false);
    }
    for a in &found {
        writeln!(out, "match against {name}: {a}").map_err(io)?;
    }
    Ok(true)
}
