//! Registry of every checked statement, grouped into suites.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use serde::Serialize;
use serde_json::{json, Value};

use super::{
    build_representation, check_invariant, construct_curve, curve_identity, faithfulness_probe,
    printed_g, verify_closed_forms, verify_j_powers, verify_j_spot_check, vieta_involution, DegreeComparison,
    InvariantError, Parity, Pattern, Representation, CURVE_IDENTITIES,
};
use crate::algebra::{Polynomial, Rational};
use crate::bfile::BFile;
use crate::fixtures;
use crate::projmap::{BirationalMap, Multiplicity, Order, ProjectivePoint};
use crate::somos::{
    check_divisibility_relations, check_laurent, eval_s, find_alignments, known, s_polynomial,
    search_integer_windows, split_even_odd, verify_s_propagation, DivisibilityRanges, SignRule, SomosSequence,
};
use crate::verdict::{Status, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    Surface,
    Curves,
    Relations,
    Degrees,
    Divisibility,
    Jacobians,
}

impl Suite {
    pub const NAMED: [Suite; 6] =
        [Suite::Surface, Suite::Curves, Suite::Relations, Suite::Degrees, Suite::Divisibility, Suite::Jacobians];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Surface => "surface",
            Suite::Curves => "curves",
            Suite::Relations => "relations",
            Suite::Degrees => "degrees",
            Suite::Divisibility => "divisibility",
            Suite::Jacobians => "jacobians",
        }
    }

    pub fn contains(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        std::iter::once(Suite::All)
            .chain(Suite::NAMED)
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite '{s}'"))
    }
}

/// Lazily built representations, shared by every claim.
#[derive(Default)]
pub struct Context {
    reps: [OnceLock<Result<Representation, InvariantError>>; 4],
}

impl Context {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rep(&self, k: usize) -> Result<&Representation, InvariantError> {
        if !(2..=5).contains(&k) {
            return Err(InvariantError::Order(k));
        }
        self.reps[k - 2].get_or_init(|| build_representation(k)).as_ref().map_err(Clone::clone)
    }
}

type Runner = Box<dyn Fn(&Context) -> Result<Verdict, InvariantError> + Send + Sync>;

pub struct Claim {
    pub id: String,
    pub suite: Suite,
    /// The statement, written as a formula.
    pub anchor: String,
    pub verifier: &'static str,
    pub args: Value,
    pub expected: Status,
    run: Runner,
}

impl Claim {
    fn new<F>(id: impl Into<String>, suite: Suite, anchor: impl Into<String>, verifier: &'static str, args: Value, run: F) -> Self
    where
        F: Fn(&Context) -> Result<Verdict, InvariantError> + Send + Sync + 'static,
    {
        Claim {
            id: id.into(),
            suite,
            anchor: anchor.into(),
            verifier,
            args,
            expected: Status::Verified,
            run: Box::new(run),
        }
    }

    fn expect(mut self, status: Status) -> Self {
        self.expected = status;
        self
    }

    pub fn run(&self, ctx: &Context) -> Result<Verdict, InvariantError> {
        (self.run)(ctx)
    }

    pub fn entry(&self) -> ManifestEntry {
        ManifestEntry {
            id: self.id.clone(),
            suite: self.suite,
            anchor: self.anchor.clone(),
            verifier: self.verifier,
            args: self.args.clone(),
            expected: self.expected,
        }
    }
}

impl fmt::Debug for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Claim").field("id", &self.id).field("expected", &self.expected).finish()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ManifestEntry {
    pub id: String,
    pub suite: Suite,
    pub anchor: String,
    pub verifier: &'static str,
    pub args: Value,
    pub expected: Status,
}

pub const MANIFEST_VERSION: u32 = 1;

#[derive(Debug, Clone, Serialize)]
pub struct Manifest {
    pub version: u32,
    pub claims: Vec<ManifestEntry>,
}

pub fn manifest(suite: Suite) -> Manifest {
    Manifest { version: MANIFEST_VERSION, claims: registry(suite).iter().map(Claim::entry).collect() }
}

/// Result of running one claim.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimOutcome {
    pub id: String,
    pub suite: Suite,
    pub anchor: String,
    pub status: Status,
    pub expected: Status,
    pub witness: String,
    pub ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl ClaimOutcome {
    /// Refuted although expected to hold.
    pub fn unexpected(&self) -> bool {
        self.error.is_none() && self.status == Status::Refuted && self.expected != Status::Refuted
    }

    pub fn as_expected(&self) -> bool {
        self.error.is_none() && self.status == self.expected
    }
}

fn elapsed_ms(start: Option<std::time::Instant>) -> u64 {
    start.map_or(0, |s| s.elapsed().as_millis() as u64)
}

fn now() -> Option<std::time::Instant> {
    if cfg!(target_arch = "wasm32") {
        None
    } else {
        Some(std::time::Instant::now())
    }
}

pub fn run_claim(claim: &Claim, ctx: &Context) -> ClaimOutcome {
    let start = now();
    let result = claim.run(ctx);
    let ms = elapsed_ms(start);
    let (status, witness, error) = match result {
        Ok(v) => (v.status, v.witness, None),
        Err(e) => (Status::Skipped, format!("error: {e}"), Some(e.to_string())),
    };
    ClaimOutcome {
        id: claim.id.clone(),
        suite: claim.suite,
        anchor: claim.anchor.clone(),
        status,
        expected: claim.expected,
        witness,
        ms,
        error,
    }
}

/// Runs every claim of `suite`; results come back in manifest order.
pub fn run_suite(suite: Suite) -> Vec<ClaimOutcome> {
    let claims = registry(suite);
    let ctx = Context::new();
    run_claims(&claims, &ctx)
}

pub fn run_claims(claims: &[Claim], ctx: &Context) -> Vec<ClaimOutcome> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        claims.par_iter().map(|c| run_claim(c, ctx)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        claims.iter().map(|c| run_claim(c, ctx)).collect()
    }
}

/// Every claim in `suite`, in manifest order.
pub fn registry(suite: Suite) -> Vec<Claim> {
    let mut out = Vec::new();
    for s in Suite::NAMED {
        if suite.contains(s) {
            match s {
                Suite::Surface => surface(&mut out),
                Suite::Curves => curves(&mut out),
                Suite::Relations => relations(&mut out),
                Suite::Degrees => degrees(&mut out),
                Suite::Divisibility => divisibility(&mut out),
                Suite::Jacobians => jacobians(&mut out),
                Suite::All => unreachable!(),
            }
        }
    }
    out
}

fn int(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn point(coords: &[i64]) -> ProjectivePoint {
    ProjectivePoint::from_ints(coords).expect("nonzero literal")
}

fn no_params() -> BTreeMap<String, Rational> {
    BTreeMap::new()
}

/// `cofactor = const * expected`.
fn proportional(cofactor: &Polynomial, expected: &Polynomial) -> bool {
    cofactor.div_exact(expected).is_ok_and(|q| q.is_constant() && !q.is_zero())
}

fn invariance(phi: &BirationalMap, p: &Polynomial, expected_cofactor: Option<&Polynomial>) -> Result<Verdict, InvariantError> {
    let check = check_invariant(phi, p)?;
    match (expected_cofactor, &check.cofactor) {
        (Some(want), Some(cof)) if check.verdict.is_verified() => Ok(Verdict::check(
            proportional(cof, want),
            format!("cofactor {}, expected a multiple of {}", cof.pretty(), want.pretty()),
        )),
        _ => Ok(check.verdict),
    }
}

fn window_s(window: &[i64]) -> Rational {
    eval_s(&window.iter().map(|&v| int(v)).collect::<Vec<_>>())
}

const PRINTED_WINDOWS: [[i64; 4]; 3] = [[0, 1, 1, -1], [1, 1, -1, 1], [7, -4, -23, 29]];

fn same_point(a: &[i64], b: &[i64]) -> bool {
    point(a) == point(b)
}

fn surface(out: &mut Vec<Claim>) {
    let s = Suite::Surface;
    out.push(Claim::new(
        "surface.a006769_windows",
        s,
        "S(a(n), a(n+1), a(n+2), a(n+3)) = 0 for A006769, n = 0..29",
        "eval_s",
        json!({"seed": [1, 1, -1, 1], "base": 1, "windows": 30}),
        |_| {
            let mut seq = known::a006769();
            let mut printed_seen = [false; 3];
            for n in 0..30 {
                let w = seq.window(n, 4)?;
                let v = eval_s(&w);
                if !num_traits::Zero::is_zero(&v) {
                    return Ok(Verdict::refuted(format!("window at n = {n} gives S = {v}")));
                }
                let ints: Vec<i64> = w.iter().map(|x| i64::try_from(x.to_integer()).unwrap_or(0)).collect();
                for (i, p) in PRINTED_WINDOWS.iter().enumerate() {
                    printed_seen[i] |= ints == p.to_vec();
                }
            }
            Ok(Verdict::check(
                printed_seen.iter().all(|&b| b),
                format!("30 windows on S; printed windows present: {printed_seen:?}"),
            ))
        },
    ));
    out.push(Claim::new(
        "surface.propagation",
        s,
        "S(a1, a2, a3, a4) a0^2 = S(a0, a1, a2, a3) (a1 a3 + a2^2)",
        "verify_s_propagation",
        json!({}),
        |_| Ok(verify_s_propagation()?.propagation),
    ));
    out.push(Claim::new(
        "surface.eight_step_even",
        s,
        "S(a0..a3) | numerator(a0 a8 - a2 a6 - a4^2)",
        "verify_s_propagation",
        json!({"part": "even"}),
        |_| Ok(verify_s_propagation()?.even),
    ));
    out.push(Claim::new(
        "surface.eight_step_odd",
        s,
        "S(a0..a3) | numerator(a1 a9 - a3 a7 - a5^2)",
        "verify_s_propagation",
        json!({"part": "odd"}),
        |_| Ok(verify_s_propagation()?.odd),
    ));
    let targets: [(&str, &str, Option<&str>); 5] = [
        ("F", "S o F = a0^2 (a1 a3 + a2^2) S", Some("a0^2*(a1*a3 + a2^2)")),
        ("R", "S o R = S", Some("1")),
        ("M(c)", "S o M(c) = c^6 S", Some("c^6")),
        ("G", "S o G = cofactor * S", None),
        ("H", "S o H = cofactor * S, H: a0 -> -(a2^3 + 2 a1 a2 a3)/a3^2 - a0", None),
    ];
    for (key, anchor, cof) in targets {
        out.push(Claim::new(
            format!("surface.s_under_{}", key.replace("(c)", "")),
            s,
            anchor,
            "check_invariant",
            json!({"k": 4, "map": key, "cofactor": cof}),
            move |ctx| {
                let rep = ctx.rep(4)?;
                let want = cof.map(|c| rep.poly(c));
                invariance(rep.get(key)?, &s_polynomial(rep.ring()), want.as_ref())
            },
        ));
    }
    out.push(
        Claim::new(
            "surface.s_under_printed_h",
            s,
            "S o Hp = cofactor * S, Hp: a0 -> (a2^3 - 2 a1 a2 a3)/a3^2 - a0",
            "check_invariant",
            json!({"k": 4, "map": "Hp", "probe": [0, 1, 1, -1]}),
            |ctx| {
                let rep = ctx.rep(4)?;
                let hp = rep.get("Hp")?;
                let check = check_invariant(hp, &s_polynomial(rep.ring()))?;
                let start = point(&[0, 1, 1, -1]);
                let image = hp.apply(&start, &no_params())?;
                let img: Vec<i64> = image.normalized().iter().map(|x| i64::try_from(x).unwrap_or(0)).collect();
                let witness = format!(
                    "{start} -> {} with S = {}, while S{start} = {}",
                    ProjectivePoint::from_ints(&img).map_or_else(|_| image.to_string(), |p| p.to_string()),
                    window_s(&img),
                    window_s(&[0, 1, 1, -1])
                );
                Ok(Verdict { status: check.verdict.status, witness })
            },
        )
        .expect(Status::Refuted),
    );
    out.push(Claim::new(
        "surface.vieta_h_point",
        s,
        "H(0:1:1:-1) = (1:1:1:-1), S = 0 at both",
        "map_apply",
        json!({"k": 4, "map": "H", "point": [0, 1, 1, -1]}),
        |ctx| {
            let rep = ctx.rep(4)?;
            let start = point(&[0, 1, 1, -1]);
            let image = rep.get("H")?.apply(&start, &no_params())?;
            let want = point(&[1, 1, 1, -1]);
            let s_img = eval_s(image.coords());
            Ok(Verdict::check(
                image == want && num_traits::Zero::is_zero(&s_img) && num_traits::Zero::is_zero(&eval_s(start.coords())),
                format!("{start} -> {image}, S = {s_img}"),
            ))
        },
    ));
    out.push(Claim::new(
        "surface.search_height_30",
        s,
        "integer points of S with height <= 30 include (0:1:1:-1), (1:1:-1:1), (7:-4:-23:29)",
        "search_integer_windows",
        json!({"height": 30, "len": 4}),
        |_| {
            let found = search_integer_windows(30, 4)?;
            if let Some(w) = found.iter().find(|w| !num_traits::Zero::is_zero(&window_s(&w.coords))) {
                return Ok(Verdict::refuted(format!("{:?} is not on S", w.coords)));
            }
            let missing: Vec<_> = PRINTED_WINDOWS
                .iter()
                .filter(|p| !found.iter().any(|w| same_point(&w.coords, &p[..])))
                .collect();
            Ok(Verdict::check(
                missing.is_empty(),
                if missing.is_empty() {
                    format!("{} windows, all on S, printed windows present", found.len())
                } else {
                    format!("missing {missing:?}")
                },
            ))
        },
    ));
}

const C2: &str = "a0*a2 + a1^2";
const C2A: &str = "a0*a2 - a1^2";
const C4: &str = "a0^2*a2^2 + a1^4 + alpha*a0*a1^2*a2";

fn curves(out: &mut Vec<Claim>) {
    let s = Suite::Curves;
    for &(id, statement, expected) in CURVE_IDENTITIES {
        out.push(
            Claim::new(format!("curves.{id}"), s, statement, "curve_identity", json!({"id": id}), move |_| {
                curve_identity(id)
            })
            .expect(expected),
        );
    }
    let cases: [(&str, &str, &[&str]); 3] = [
        ("c2", C2, &["M(c)", "R", "F", "G", "H1"]),
        ("c2a", C2A, &["M(c)", "R", "F", "G", "H1"]),
        ("c4", C4, &["M(c)", "R", "F", "G", "H1", "H(alpha)", "J(alpha)"]),
    ];
    for (name, poly, maps) in cases {
        for &key in maps {
            out.push(Claim::new(
                format!("curves.{name}_under_{}", key.replace("(c)", "").replace("(alpha)", "_alpha")),
                s,
                format!("({poly}) o {key} = cofactor * ({poly})"),
                "check_invariant",
                json!({"k": 3, "map": key, "polynomial": poly}),
                move |ctx| {
                    let rep = ctx.rep(3)?;
                    invariance(rep.get(key)?, &rep.poly(poly), None)
                },
            ));
        }
    }
    for (name, poly, alpha) in [("c2", C2, 2), ("c2a", C2A, -2)] {
        out.push(Claim::new(
            format!("curves.{name}_under_j{}", if alpha > 0 { "_plus2" } else { "_minus2" }),
            s,
            format!("({poly}) o J({alpha}) = cofactor * ({poly})"),
            "check_invariant",
            json!({"k": 3, "map": "J(alpha)", "alpha": alpha, "polynomial": poly}),
            move |ctx| {
                let rep = ctx.rep(3)?;
                let j = rep.get("J(alpha)")?.bind("alpha", &int(alpha))?;
                invariance(&j, &rep.poly(poly), None)
            },
        ));
    }
    for d in [2u32, 4, 6, 8] {
        for parity in [Parity::Symmetric, Parity::Antisymmetric] {
            let tag = if parity == Parity::Symmetric { "sym" } else { "anti" };
            out.push(Claim::new(
                format!("curves.construct_d{d}_{tag}"),
                s,
                format!("P(a2, a1, a0) = P and P(a0, c a1, c^2 a2) = c^{d} P"),
                "construct_curve",
                json!({"degree": d, "parity": tag}),
                move |_| construction_check(d, parity),
            ));
        }
    }
    out.push(Claim::new(
        "curves.vieta_c4_is_h_alpha",
        s,
        "Vieta involution of C4(alpha) in a0 = (-alpha a1^2/a2 - a0 : a1 : a2)",
        "vieta_involution",
        json!({"k": 3, "polynomial": C4, "variable": "a0"}),
        |ctx| {
            let rep = ctx.rep(3)?;
            let v = vieta_involution(&rep.poly(C4), 0)?;
            let h = rep.get("H(alpha)")?;
            Ok(Verdict::check(v.equal_projective(h), format!("vieta {v}, H(alpha) {h}")))
        },
    ));
    for m in 1..=6u32 {
        out.push(Claim::new(
            format!("curves.j_power_{m}"),
            s,
            "J^(2n) = (U^(2n) : (-1)^n a0^(n-1) a1 a2^n U^n : a0^(2n-1) a2^(2n+1)), U = a0 a2 + alpha a1^2, and the odd powers",
            "verify_j_powers",
            json!({"m": m}),
            move |ctx| {
                let rep = ctx.rep(3)?;
                let all = verify_j_powers(rep, m)?;
                Ok(all.into_iter().find(|(i, _)| *i == m).map(|(_, v)| v).unwrap_or_else(|| Verdict::skipped("not computed")))
            },
        ));
    }
    out.push(Claim::new(
        "curves.j_power_spot_check",
        s,
        "J(0)^4 (2:3:5) by iteration equals the closed form",
        "verify_j_spot_check",
        json!({"alpha": 0, "point": [2, 3, 5], "m": 4}),
        |ctx| verify_j_spot_check(ctx.rep(3)?),
    ));
}

fn construction_check(d: u32, parity: Parity) -> Result<Verdict, InvariantError> {
    let fam = construct_curve(d, parity)?;
    let p = &fam.polynomial;
    let ring = p.ring();
    let x = |i| Polynomial::var(ring, i);
    let r = BirationalMap::from_polynomials(ring, vec![x(2), x(1), x(0)])?;
    let c = Polynomial::var_named(ring, "c")?;
    let m = BirationalMap::from_polynomials(ring, vec![x(0), &x(1) * &c, &x(2) * &c.pow(2)])?;
    let fixed = r.pullback(p)? == *p;
    let scaled = m.pullback(p)? == &c.pow(d) * p;
    Ok(Verdict::check(
        fixed && scaled,
        format!("P = {}; fixed by R: {fixed}; scales by c^{d}: {scaled}", p.pretty()),
    ))
}

fn relation(id: String, anchor: String, k: usize, word: &'static [&'static str], out: &mut Vec<Claim>) {
    out.push(Claim::new(id, Suite::Relations, anchor, "map_compose", json!({"k": k, "word": word}), move |ctx| {
        let rep = ctx.rep(k)?;
        let mut acc = BirationalMap::identity(rep.ring());
        for key in word.iter().rev() {
            acc = rep.get(key)?.compose(&acc)?;
        }
        Ok(Verdict::check(acc.is_identity(), format!("{} = {acc}", word.join("."))))
    }));
}

const NUMERIC_C: [(i64, i64); 4] = [(2, 1), (3, 1), (-5, 1), (7, 3)];

fn relations(out: &mut Vec<Claim>) {
    let s = Suite::Relations;
    for k in 2..=5usize {
        relation(format!("relations.k{k}.r_squared"), "R.R = id".into(), k, &["R", "R"], out);
        relation(format!("relations.k{k}.g_squared"), "G.G = id".into(), k, &["G", "G"], out);
        relation(format!("relations.k{k}.rmrm"), "R.M(c).R.M(c) = id".into(), k, &["R", "M(c)", "R", "M(c)"], out);
        relation(format!("relations.k{k}.gmgm"), "G.M(c).G.M(c) = id".into(), k, &["G", "M(c)", "G", "M(c)"], out);
        out.push(Claim::new(
            format!("relations.k{k}.rmrm_numeric"),
            s,
            "R.M(c).R.M(c) = id and G.M(c).G.M(c) = id for c = 2, 3, -5, 7/3",
            "map_compose",
            json!({"k": k, "c": ["2", "3", "-5", "7/3"]}),
            move |ctx| {
                let rep = ctx.rep(k)?;
                let (r, g) = (rep.get("R")?, rep.get("G")?);
                for (n, d) in NUMERIC_C {
                    let c = Rational::new(n.into(), d.into());
                    let m = rep.get("M(c)")?.bind("c", &c)?;
                    for (name, x) in [("R", r), ("G", g)] {
                        let w = x.compose(&m)?.compose(x)?.compose(&m)?;
                        if !w.is_identity() {
                            return Ok(Verdict::refuted(format!("{name}.M({c}).{name}.M({c}) = {w}")));
                        }
                    }
                }
                Ok(Verdict::verified("identity at every sampled c"))
            },
        ));
        let (expected, anchor): (Order, &str) = match k {
            2 => (Order::Finite(1), "F = id"),
            3 => (Order::Finite(2), "F^2 = id, F != id"),
            _ => (Order::ExceedsBound(6), "F^n != id for n <= 6"),
        };
        out.push(Claim::new(
            format!("relations.k{k}.f_order"),
            s,
            anchor,
            "map_order",
            json!({"k": k, "bound": 6}),
            move |ctx| {
                let got = ctx.rep(k)?.get("F")?.order(6)?;
                Ok(Verdict::check(got == expected, format!("order {got:?}")))
            },
        ));
        if k >= 3 {
            let printed = match k {
                3 => "G = (a1 a2/a0 : a2 : a1)",
                4 => "G = ((a1 a3 + a2^2)/a0 : a3 : a2 : a1)",
                _ => "G = ((a1 a4 + a2 a3)/a0 : a4 : a3 : a2 : a1)",
            };
            out.push(Claim::new(
                format!("relations.k{k}.printed_g"),
                s,
                format!("R o F = {}", printed.trim_start_matches("G = ")),
                "map_compose",
                json!({"k": k}),
                move |ctx| {
                    let rep = ctx.rep(k)?;
                    let g = rep.get("G")?;
                    match printed_g(rep)? {
                        Some(p) => Ok(Verdict::check(g.equal_projective(&p), format!("R o F = {g}"))),
                        None => Ok(Verdict::skipped("no printed form")),
                    }
                },
            ));
        }
    }
    relation("relations.k3.h1_squared".into(), "H1.H1 = id".into(), 3, &["H1", "H1"], out);
    relation("relations.k3.h_alpha_squared".into(), "H(alpha).H(alpha) = id".into(), 3, &["H(alpha)", "H(alpha)"], out);
    relation("relations.k4.h_squared".into(), "H.H = id".into(), 4, &["H", "H"], out);
    for (k, key) in [(3usize, "H1"), (3, "H(alpha)"), (4, "H")] {
        out.push(Claim::new(
            format!("relations.k{k}.{}_commutes_m", key.to_lowercase().replace("(alpha)", "_alpha")),
            s,
            format!("{key}.M(c) = M(c).{key}"),
            "map_compose",
            json!({"k": k, "map": key}),
            move |ctx| {
                let rep = ctx.rep(k)?;
                let (h, m) = (rep.get(key)?, rep.get("M(c)")?);
                let (hm, mh) = (h.compose(m)?, m.compose(h)?);
                Ok(Verdict::check(hm.equal_projective(&mh), format!("{key}.M(c) = {hm}")))
            },
        ));
    }
    for (k, lo, hi) in [(4usize, -8i64, 12i64), (5, 5, 10), (6, 6, 9), (7, 7, 10)] {
        out.push(Claim::new(
            format!("relations.laurent_k{k}"),
            s,
            format!("denominator of a_n is a monomial, Somos-{k}, n = {lo}..{hi}"),
            "check_laurent",
            json!({"k": k, "lo": lo, "hi": hi}),
            move |_| {
                let entries = check_laurent(k, lo, hi)?;
                Ok(match entries.iter().find(|e| !e.monomial_denominator) {
                    Some(e) => Verdict::refuted(format!("n = {}: denominator {}", e.index, e.denominator)),
                    None => Verdict::verified(format!(
                        "{} terms; a_{hi} has denominator {}",
                        entries.len(),
                        entries.last().map_or("", |e| e.denominator.as_str())
                    )),
                })
            },
        ));
    }
    let forms = [
        (2usize, "a_n = a1^n / a0^(n-1)"),
        (3, "a_(2n) = a2^n / a0^(n-1), a_(2n+1) = a1 a2^n / a0^n"),
    ];
    for (k, anchor) in forms {
        out.push(Claim::new(
            format!("relations.closed_form_k{k}"),
            s,
            format!("{anchor}, |n| <= 10"),
            "verify_closed_forms",
            json!({"k": k, "bound": 10}),
            move |_| verify_closed_forms(k, 10),
        ));
    }
    for k in 2..=4usize {
        out.push(Claim::new(
            format!("relations.faithful_k{k}"),
            s,
            "reduced words in R, F, RFR up to length 6 are the identity exactly when the dihedral quotient says so",
            "faithfulness_probe",
            json!({"k": k, "max_len": 6}),
            move |ctx| Ok(faithfulness_probe(ctx.rep(k)?, 6)?.verdict()),
        ));
    }
}

fn degrees(out: &mut Vec<Claim>) {
    let cases: [(usize, Pattern, usize, &str); 4] = [
        (4, Pattern::F, 7, "deg F^n: 1, 2, 3, 5, 8, 10, 14, 18"),
        (5, Pattern::F, 6, "deg F^n: 1, 2, 3, 4, 6, 9, 11"),
        (3, Pattern::F, 5, "deg F^n periodic mod 2: 1, 2, 1, 2"),
        (3, Pattern::J, 4, "deg J(alpha)^n: 1, 2, 4, 6, 8"),
    ];
    for (k, pattern, n_max, anchor) in cases {
        out.push(Claim::new(
            format!("degrees.k{k}_{}", pattern.to_string().to_lowercase()),
            Suite::Degrees,
            anchor,
            "degree_sequence",
            json!({"k": k, "pattern": pattern.to_string(), "n_max": n_max}),
            move |ctx| {
                let cmp = DegreeComparison::compute(ctx.rep(k)?, pattern, n_max)?;
                Ok(degree_verdict(&cmp))
            },
        ));
    }
}

fn reading(v: Option<bool>) -> &'static str {
    match v {
        Some(true) => "match",
        Some(false) => "mismatch",
        None => "n/a",
    }
}

pub fn degree_verdict(cmp: &DegreeComparison) -> Verdict {
    let witness = format!(
        "computed {:?}; expected {:?}; in order: {}; as degree set {:?}: {}",
        cmp.computed,
        cmp.expected.as_deref().unwrap_or(&[]),
        reading(cmp.in_order),
        cmp.degree_set,
        reading(cmp.as_set)
    );
    match (cmp.in_order, cmp.as_set) {
        (None, None) => Verdict::skipped(witness),
        (a, b) => Verdict::check(a == Some(true) || b == Some(true), witness),
    }
}

fn fixture(id: &str) -> Result<BFile, InvariantError> {
    fixtures::load(id).ok_or_else(|| InvariantError::Curve(format!("missing fixture {id}")))
}

fn divisibility(out: &mut Vec<Claim>) {
    let s = Suite::Divisibility;
    let relations = [
        ("eds", "A006769(n) | A006769(nk), n <= 8, k <= 4", "A006769(n) | A006769(nk)"),
        ("a006720_progression", "A006720(n) | A006720(n + (2n-3)k), n = 2..6, k = 1..3", "A006720(n) | A006720(n+(2n-3)k)"),
        ("a006720_a051138", "A006720(n) | A051138((2n-3)k), n = 2..6, k = 1..3", "A006720(n) | A051138((2n-3)k)"),
    ];
    for (id, anchor, relation) in relations {
        out.push(Claim::new(
            format!("divisibility.{id}"),
            s,
            anchor,
            "check_divisibility_relations",
            json!({"relation": relation}),
            move |_| {
                let report = check_divisibility_relations(DivisibilityRanges::default())?;
                let mine: Vec<_> = report.instances.iter().filter(|i| i.relation == relation).collect();
                if let Some(bad) = mine.iter().find(|i| i.status == Status::Refuted) {
                    return Ok(Verdict::refuted(format!(
                        "n = {}, k = {}: {} does not divide {}",
                        bad.n, bad.k, bad.divisor, bad.dividend
                    )));
                }
                let skipped = mine.iter().filter(|i| i.status == Status::Skipped).count();
                Ok(Verdict::verified(format!("{} instances, {skipped} with zero divisor", mine.len())))
            },
        ));
    }
    out.push(Claim::new(
        "divisibility.even_part",
        s,
        "A006769(2m) = A051138(m), a Somos-4 sequence",
        "split_even_odd",
        json!({"range": [0, 59], "fixture": "A051138"}),
        |_| {
            let mut seq = known::a006769();
            let (even, _) = split_even_odd(&mut seq, 0, 59)?;
            even.check_rule()?;
            let reference = fixture("A051138")?.to_map();
            let found = find_alignments(&even, &reference, 0, 10);
            Ok(match found.iter().find(|a| a.sign == SignRule::Plus) {
                Some(a) => Verdict::verified(a.to_string()),
                None => Verdict::refuted(format!("no exact alignment; candidates {found:?}")),
            })
        },
    ));
    out.push(Claim::new(
        "divisibility.odd_part",
        s,
        "A006769(2j+1) = (-1)^n A006720(n), n = j + 2, a Somos-4 sequence",
        "split_even_odd",
        json!({"range": [0, 59], "fixture": "A006720", "max_shift": 4}),
        |_| {
            let mut seq = known::a006769();
            let (_, odd) = split_even_odd(&mut seq, 0, 59)?;
            odd.check_rule()?;
            let reference = fixture("A006720")?.to_map();
            let found = find_alignments(&odd, &reference, 4, 10);
            let alternating = found
                .iter()
                .find(|a| a.shift == 2 && matches!(a.sign, SignRule::AltRef | SignRule::AltSub));
            let all: Vec<String> = found.iter().map(ToString::to_string).collect();
            Ok(Verdict::check(alternating.is_some(), format!("alignments: {}", all.join("; "))))
        },
    ));
    out.push(Claim::new(
        "divisibility.fixture_selfcheck",
        s,
        "bundled A006769, A006720, A051138 prefixes equal the recurrence",
        "bfile",
        json!({"fixtures": ["A006769", "A006720", "A051138"]}),
        |_| {
            let seeds: [(&str, i64, [i64; 4]); 3] =
                [("A006769", 1, [1, 1, -1, 1]), ("A006720", 0, [1, 1, 1, 1]), ("A051138", 1, [1, 1, -1, -5])];
            let mut notes = Vec::new();
            for (id, base, init) in seeds {
                let b = fixture(id)?;
                let mut seq = SomosSequence::from_ints(4, base, &init)?;
                for (i, v) in &b.entries {
                    let got = seq.get(*i)?;
                    if got != Rational::from_integer(v.clone()) {
                        return Ok(Verdict::refuted(format!("{id}({i}): fixture {v}, recurrence {got}")));
                    }
                }
                notes.push(format!("{id}: {} terms", b.len()));
            }
            Ok(Verdict::verified(notes.join(", ")))
        },
    ));
}

fn jacobians(out: &mut Vec<Claim>) {
    let s = Suite::Jacobians;
    let at_least = Multiplicity::AtLeast(1);
    let cases: Vec<(&str, usize, &str, Vec<(&str, Multiplicity)>, &str)> = vec![
        ("k3_g", 3, "G", vec![("a0", at_least), ("a1", at_least), ("a2", at_least)], "det J(G) = const a0^m0 a1^m1 a2^m2"),
        ("k4_g", 4, "G", vec![("a0", at_least), ("a1*a3 + a2^2", at_least)], "det J(G) = const a0^m (a1 a3 + a2^2)^n"),
        ("k5_g", 5, "G", vec![("a0", at_least), ("a1*a4 + a2*a3", at_least)], "det J(G) = const a0^m (a1 a4 + a2 a3)^n"),
        ("k3_h_alpha", 3, "H(alpha)", vec![("a2", Multiplicity::Exactly(3))], "det J(H(alpha)) = const a2^3"),
        ("k4_h", 4, "H", vec![("a3", Multiplicity::Exactly(8))], "det J(H) = const a3^8"),
        ("k4_r", 4, "R", vec![], "det J(R) = const"),
    ];
    for (id, k, key, factors, anchor) in cases {
        let names: Vec<&str> = factors.iter().map(|f| f.0).collect();
        out.push(Claim::new(
            format!("jacobians.{id}"),
            s,
            anchor,
            "jacobian_factors",
            json!({"k": k, "map": key, "factors": names}),
            move |ctx| {
                let rep = ctx.rep(k)?;
                let claimed: Vec<(Polynomial, Multiplicity)> =
                    factors.iter().map(|(p, m)| (rep.poly(p), *m)).collect();
                let check = rep.get(key)?.jacobian_factors(&claimed)?;
                Ok(Verdict::check(check.verified, check.detail))
            },
        ));
    }
    out.push(Claim::new(
        "jacobians.k4_m",
        s,
        "det J(M(c)) = const c^e",
        "jacobian_factors",
        json!({"k": 4, "map": "M(c)", "factors": []}),
        |ctx| {
            let rep = ctx.rep(4)?;
            let check = rep.get("M(c)")?.jacobian_factors(&[])?;
            let c = Polynomial::var_named(rep.ring(), "c")?;
            let ok = check.verified && (0..=12).any(|e| proportional(&check.cofactor, &c.pow(e)));
            Ok(Verdict::check(ok, format!("det = {}", check.determinant.pretty())))
        },
    ));
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;
    use crate::invariants::curve_ring;

    #[test]
    fn ids_are_unique_and_suites_partition() {
        let all = registry(Suite::All);
        let ids: HashSet<&str> = all.iter().map(|c| c.id.as_str()).collect();
        assert_eq!(ids.len(), all.len());
        let split: usize = Suite::NAMED.iter().map(|s| registry(*s).len()).sum();
        assert_eq!(split, all.len());
        assert!(all.iter().all(|c| c.id.starts_with(c.suite.name())));
    }

    #[test]
    fn suite_names_round_trip() {
        for s in std::iter::once(Suite::All).chain(Suite::NAMED) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn mutated_r_breaks_rmrm() {
        let ctx = Context::new();
        let rep = ctx.rep(4).unwrap();
        let x = |i| Polynomial::var(rep.ring(), i);
        // swaps a0 and a1 only
        let bad = BirationalMap::from_polynomials(rep.ring(), vec![x(1), x(0), x(2), x(3)]).unwrap();
        let m = rep.get("M(c)").unwrap();
        let w = bad.compose(m).unwrap().compose(&bad).unwrap().compose(m).unwrap();
        assert!(!w.is_identity());
    }

    #[test]
    fn refuted_claims_carry_witnesses() {
        let claims = registry(Suite::Surface);
        let ctx = Context::new();
        for o in run_claims(&claims, &ctx) {
            assert!(o.error.is_none(), "{}: {:?}", o.id, o.error);
            assert!(o.as_expected(), "{}: {} {}", o.id, o.status, o.witness);
            if o.status == Status::Refuted {
                assert!(!o.witness.is_empty());
            }
        }
    }

    #[test]
    fn printed_h_witness() {
        let ctx = Context::new();
        let claims = registry(Suite::Surface);
        let c = claims.iter().find(|c| c.id == "surface.s_under_printed_h").unwrap();
        let o = run_claim(c, &ctx);
        assert_eq!(o.status, Status::Refuted);
        assert!(o.witness.starts_with("(0:1:1:-1) -> (3:1:1:-1) with S = 6"), "{}", o.witness);
    }

    #[test]
    fn degree_verdict_readings() {
        let cmp = DegreeComparison {
            k: 4,
            pattern: Pattern::F,
            computed: vec![1, 2],
            reflected: vec![1, 2],
            degree_set: vec![1, 2],
            expected: Some(vec![1, 3]),
            in_order: Some(false),
            as_set: Some(false),
        };
        assert_eq!(degree_verdict(&cmp).status, Status::Refuted);
        let unknown = DegreeComparison { expected: None, in_order: None, as_set: None, ..cmp };
        assert_eq!(degree_verdict(&unknown).status, Status::Skipped);
    }

    #[test]
    fn construction_scales() {
        assert!(construction_check(6, Parity::Symmetric).unwrap().is_verified());
        assert!(construction_check(4, Parity::Antisymmetric).unwrap().is_verified());
    }

    #[test]
    fn curve_ring_has_c() {
        assert!(curve_ring().var_index("c").is_ok());
    }
}
