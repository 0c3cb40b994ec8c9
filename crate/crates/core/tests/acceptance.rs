//! Acceptance criteria, one line each. Criteria known to be unattainable as
//! stated are listed in `KNOWN_FAILURES`; they still run and print FAIL, but
//! only abort the run when `ACCEPTANCE_STRICT=1`.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use somos_core::algebra::Rational;
use somos_core::invariants::{
    build_representation, registry, run_claims, verify_curve_identities, ClaimOutcome, Context,
    DegreeComparison, Pattern, Suite, CURVE_IDENTITIES,
};
use somos_core::projmap::BirationalMap;
use somos_core::report::Report;
use somos_core::somos::{
    check_divisibility_relations, check_laurent, eval_s, known, search_integer_windows, split_even_odd,
    verify_s_propagation, DivisibilityRanges, SomosSequence,
};
use somos_core::verdict::Status;
use somos_core::{bfile::BFile, fixtures};

/// The printed C6a factorization is false, so 9 fails, and its expected
/// refutation makes a second one, so 12 fails.
const KNOWN_FAILURES: [u32; 2] = [9, 12];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// Plain BigInt Somos-4, exact division asserted.
fn somos4_oracle(seed: [i64; 4], len: usize) -> Vec<BigInt> {
    let mut a: Vec<BigInt> = seed.iter().map(|&x| BigInt::from(x)).collect();
    while a.len() < len {
        let n = a.len();
        let num = &a[n - 3] * &a[n - 1] + &a[n - 2] * &a[n - 2];
        let (quo, rem) = num.div_rem(&a[n - 4]);
        assert!(rem.is_zero(), "oracle hit a non-integer term");
        a.push(quo);
    }
    a
}

fn s_int(w: &[BigInt]) -> BigInt {
    let (a0, a1, a2, a3) = (&w[0], &w[1], &w[2], &w[3]);
    a0 * a0 * a3 * a3 + a1 * a1 * a2 * a2 + a0 * a2 * a2 * a2 + a3 * a1 * a1 * a1 + 2 * a0 * a1 * a2 * a3
}

/// A006769 from index 0: the seed at 1..4 preceded by a(0) = 0.
fn a006769_oracle(len: usize) -> Vec<BigInt> {
    let tail = somos4_oracle([1, 1, -1, 1], len - 1);
    std::iter::once(BigInt::zero()).chain(tail).collect()
}

fn failures(list: &[ClaimOutcome], prefix: &str) -> Vec<String> {
    list.iter()
        .filter(|o| o.id.starts_with(prefix) && !o.as_expected())
        .map(|o| format!("{} {}: {}", o.id, o.status, o.witness))
        .collect()
}

fn c1_quartic_membership() -> Outcome {
    let start = Instant::now();
    let oracle = a006769_oracle(34);
    let mut seq = known::a006769();
    let printed: [[i64; 4]; 3] = [[0, 1, 1, -1], [1, 1, -1, 1], [7, -4, -23, 29]];
    let mut seen = [false; 3];
    for n in 0..30usize {
        let w = seq.window(n as i64, 4).unwrap();
        let ow: Vec<Rational> = oracle[n..n + 4].iter().map(|x| Rational::from_integer(x.clone())).collect();
        if w != ow {
            return outcome(false, format!("engine window {n} differs from the BigInt recurrence"));
        }
        if !eval_s(&w).is_zero() || !s_int(&oracle[n..n + 4]).is_zero() {
            return outcome(false, format!("S != 0 at window {n}"));
        }
        for (i, p) in printed.iter().enumerate() {
            seen[i] |= oracle[n..n + 4].iter().zip(p).all(|(a, &b)| *a == BigInt::from(b));
        }
    }
    let t = start.elapsed();
    outcome(
        seen.iter().all(|&b| b) && t < Duration::from_secs(1),
        format!("30 windows on S, printed windows found {seen:?}, {} ms", t.as_millis()),
    )
}

fn c2_propagation() -> Outcome {
    let start = Instant::now();
    let report = verify_s_propagation().unwrap();
    let t = start.elapsed();
    // random rational windows: S(a1..a4) a0^2 = S(a0..a3)(a1 a3 + a2^2)
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let numeric = (0..50).all(|_| {
        let a: Vec<Rational> = (0..4).map(|_| Rational::new(rng.gen_range(-20..=20).into(), rng.gen_range(1..=9).into())).collect();
        if a[0].is_zero() {
            return true;
        }
        let a4 = (&a[1] * &a[3] + &a[2] * &a[2]) / &a[0];
        let next = [a[1].clone(), a[2].clone(), a[3].clone(), a4];
        eval_s(&next) * &a[0] * &a[0] == eval_s(&a) * (&a[1] * &a[3] + &a[2] * &a[2])
    });
    let ok = report.overall().is_verified() && numeric && t < Duration::from_secs(5);
    outcome(
        ok,
        format!(
            "symbolic: {}; even: {}; odd: {}; 50 random windows agree: {numeric}; {} ms",
            report.propagation.status,
            report.even.status,
            report.odd.status,
            t.as_millis()
        ),
    )
}

fn bfile(id: &str) -> BFile {
    fixtures::load(id).unwrap()
}

fn c3_subsequences() -> Outcome {
    let mut seq = known::a006769();
    let (even, odd) = split_even_odd(&mut seq, 0, 59).unwrap();
    let rule_ok = even.check_rule().is_ok() && odd.check_rule().is_ok();
    let a051138 = bfile("A051138").to_map();
    let a006720 = bfile("A006720").to_map();
    let mut even_terms = 0;
    let even_ok = even.cached_terms().all(|(j, v)| match a051138.get(&j) {
        Some(r) => {
            even_terms += 1;
            Rational::from_integer(r.clone()) == *v
        }
        None => true,
    });
    // odd part j holds a(2j+1) and matches (-1)^n A006720(n), n = j + 2
    let mut odd_terms = 0;
    let odd_ok = odd.cached_terms().all(|(j, v)| match a006720.get(&(j + 2)) {
        Some(r) => {
            odd_terms += 1;
            let signed = if (j + 2) % 2 == 0 { r.clone() } else { -r.clone() };
            Rational::from_integer(signed) == *v
        }
        None => true,
    });
    let ok = rule_ok && even_ok && odd_ok && even_terms >= 10 && odd_terms >= 10;
    outcome(
        ok,
        format!(
            "even = A051138 on {even_terms} terms: {even_ok}; odd(j) = (-1)^n A006720(n), n = j+2, on {odd_terms} terms: {odd_ok}; Somos-4 windows: {rule_ok}"
        ),
    )
}

fn c4_divisibility() -> Outcome {
    let report = check_divisibility_relations(DivisibilityRanges::default()).unwrap();
    let refuted = report.count(Status::Refuted);
    let skipped = report.count(Status::Skipped);
    // independent recomputation with the BigInt oracles
    let eds = a006769_oracle(80);
    let classical = somos4_oracle([1, 1, 1, 1], 40);
    let divides = |d: &BigInt, x: &BigInt| !d.is_zero() && (x % d).is_zero();
    let mut oracle_ok = true;
    for n in 1..=8usize {
        for k in 1..=4usize {
            oracle_ok &= divides(&eds[n], &eds[n * k]);
        }
    }
    for n in 2..=6usize {
        for k in 1..=3usize {
            let step = (2 * n - 3) * k;
            oracle_ok &= divides(&classical[n], &classical[n + step]);
            oracle_ok &= divides(&classical[n], &eds[2 * step]);
        }
    }
    outcome(
        refuted == 0 && skipped == 0 && oracle_ok,
        format!("{} instances, {refuted} refuted, {skipped} skipped; oracle agrees: {oracle_ok}", report.instances.len()),
    )
}

fn c5_laurent() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for (k, lo, hi) in [(4usize, -8i64, 12i64), (5, 5, 10), (6, 6, 9), (7, 7, 10)] {
        let entries = check_laurent(k, lo, hi).unwrap();
        let mono = entries.iter().all(|e| e.monomial_denominator);
        // with +-1 initial values every term of a Laurent sequence is an integer
        let mut rng = ChaCha8Rng::seed_from_u64(k as u64);
        let init: Vec<i64> = (0..k).map(|_| if rng.gen_bool(0.5) { 1 } else { -1 }).collect();
        let mut s = SomosSequence::from_ints(k, 0, &init).unwrap();
        let integral = (lo..=hi).all(|n| s.get(n).map_or(true, |v| v.is_integer()));
        ok &= mono && integral && entries.len() == (hi - lo + 1) as usize;
        notes.push(format!("k={k} [{lo},{hi}]: {}", if mono && integral { "monomial" } else { "NOT monomial" }));
    }
    let t = start.elapsed();
    outcome(ok && t < Duration::from_secs(30), format!("{}; {} ms", notes.join(", "), t.as_millis()))
}

fn random_point(rng: &mut ChaCha8Rng, dim: usize, params: usize) -> Vec<Rational> {
    (0..dim + params).map(|_| q(rng.gen_range(1..=17))).collect()
}

fn apply_numeric(m: &BirationalMap, p: &[Rational]) -> Vec<Rational> {
    m.components().iter().map(|c| c.eval(p).unwrap()).collect()
}

fn proportional(a: &[Rational], b: &[Rational]) -> bool {
    (0..a.len()).all(|i| (0..a.len()).all(|j| &a[i] * &b[j] == &a[j] * &b[i]))
}

fn c6_group_relations(rel: &[ClaimOutcome]) -> Outcome {
    let bad = failures(rel, "relations.k");
    let wanted = ["r_squared", "g_squared", "rmrm", "gmgm", "f_order"];
    let mut count = 0;
    for k in 2..=5 {
        for w in wanted {
            count += rel.iter().filter(|o| o.id == format!("relations.k{k}.{w}") && o.as_expected()).count();
        }
        if k >= 3 {
            count += rel.iter().filter(|o| o.id == format!("relations.k{k}.printed_g") && o.as_expected()).count();
        }
    }
    // numeric oracle: G(G(p)) is proportional to p
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut numeric = true;
    for k in 2..=5 {
        let rep = build_representation(k).unwrap();
        let g = rep.get("G").unwrap();
        let extra = rep.ring().len() - k;
        let p = random_point(&mut rng, k, extra);
        let mut gp = apply_numeric(g, &p);
        gp.extend_from_slice(&p[k..]);
        let ggp = apply_numeric(g, &gp);
        numeric &= proportional(&ggp, &p[..k]);
    }
    outcome(
        bad.is_empty() && count == 23 && numeric,
        format!("{count}/23 relation claims verified; numeric G^2: {numeric}{}", if bad.is_empty() { String::new() } else { format!("; {}", bad.join("; ")) }),
    )
}

fn c7_degrees() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    let mut ok = true;
    for (k, pattern, n) in [(4usize, Pattern::F, 7usize), (5, Pattern::F, 6), (3, Pattern::F, 5), (3, Pattern::J, 4)] {
        let rep = build_representation(k).unwrap();
        let cmp = DegreeComparison::compute(&rep, pattern, n).unwrap();
        let reading = |v: Option<bool>| if v == Some(true) { "match" } else { "mismatch" };
        ok &= cmp.in_order == Some(true) || cmp.as_set == Some(true);
        notes.push(format!(
            "k={k} {pattern} {:?}: in order {}, as set {}",
            cmp.computed,
            reading(cmp.in_order),
            reading(cmp.as_set)
        ));
    }
    let t = start.elapsed();
    outcome(ok && t < Duration::from_secs(120), format!("{}; {} ms", notes.join("; "), t.as_millis()))
}

fn c8_invariance(surface: &[ClaimOutcome], curves: &[ClaimOutcome]) -> Outcome {
    let s_ids = ["F", "R", "M", "G", "H"].map(|k| format!("surface.s_under_{k}"));
    let s_ok = s_ids.iter().all(|id| surface.iter().any(|o| &o.id == id && o.status == Status::Verified));
    let curve_claims: Vec<&ClaimOutcome> =
        curves.iter().filter(|o| o.id.contains("_under_")).collect();
    let c_ok = curve_claims.iter().all(|o| o.status == Status::Verified);
    // numeric oracle: S(phi(p)) / S(p) equals the cofactor at p
    let rep = build_representation(4).unwrap();
    let s = somos_core::somos::s_polynomial(rep.ring());
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut numeric = true;
    for key in ["F", "R", "M(c)", "G", "H"] {
        let phi = rep.get(key).unwrap();
        let cof = phi.pullback(&s).unwrap().div_exact(&s).unwrap();
        for _ in 0..5 {
            let p = random_point(&mut rng, 4, 1);
            let mut img = apply_numeric(phi, &p);
            img.push(p[4].clone());
            numeric &= s.eval(&img).unwrap() == cof.eval(&p).unwrap() * s.eval(&p).unwrap();
        }
    }
    outcome(
        s_ok && c_ok && curve_claims.len() >= 19 && numeric,
        format!(
            "S under F, R, M(c), G, H: {s_ok}; {} curve invariance claims verified: {c_ok}; numeric cofactors: {numeric}",
            curve_claims.len()
        ),
    )
}

fn c9_curve_identities() -> Outcome {
    let results = verify_curve_identities().unwrap();
    let nonzero: Vec<String> = results
        .iter()
        .filter(|(_, v)| !v.is_verified())
        .map(|(id, v)| format!("{id}: {}", v.witness))
        .collect();
    // numeric oracle for the failing case: X = a0 a2, Y = a1^2 at a = (1, 1, 2), alpha = 3
    let (x, y, alpha) = (q(2), q(1), q(3));
    let c4 = |b: &Rational| &x * &x + &y * &y + b * &x * &y;
    let c6a = &x * &x * &x - &y * &y * &y + &alpha * (&x * &x * &y - &x * &y * &y);
    let printed = c4(&(&alpha - q(1))) * (&x - &y);
    let shifted = c4(&(&alpha + q(1))) * (&x - &y);
    outcome(
        nonzero.is_empty() && results.len() == CURVE_IDENTITIES.len(),
        format!(
            "{} of {} zero-residual; nonzero: [{}]; numeric C6a = {c6a}, C4(alpha-1) C2a = {printed}, C4(alpha+1) C2a = {shifted}",
            results.len() - nonzero.len(),
            results.len(),
            nonzero.join("; ")
        ),
    )
}

fn c10_j_powers(curves: &[ClaimOutcome]) -> Outcome {
    let js: Vec<&ClaimOutcome> = curves.iter().filter(|o| o.id.starts_with("curves.j_power_")).collect();
    let ok = js.len() == 7 && js.iter().all(|o| o.status == Status::Verified);
    outcome(ok, format!("{} J-power claims (m = 1..6 and a spot check), all verified: {ok}", js.len()))
}

/// Exact determinant by Gaussian elimination.
fn det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else { return Rational::zero() };
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= &m[c][c];
        for r in c + 1..n {
            let f = &m[r][c] / &m[c][c];
            for j in c..n {
                let t = &f * &m[c][j];
                m[r][j] -= t;
            }
        }
    }
    d
}

fn c11_jacobians(jac: &[ClaimOutcome]) -> Outcome {
    let bad = failures(jac, "jacobians.");
    // numeric oracle: det of the evaluated Jacobian equals the symbolic determinant
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut numeric = true;
    for (k, key) in [(3usize, "G"), (4, "G"), (5, "G"), (3, "H(alpha)"), (4, "H")] {
        let rep = build_representation(k).unwrap();
        let phi = rep.get(key).unwrap();
        let p = random_point(&mut rng, k, rep.ring().len() - k);
        let rows: Vec<Vec<Rational>> = phi
            .components()
            .iter()
            .map(|c| (0..k).map(|j| c.derivative(j).eval(&p).unwrap()).collect())
            .collect();
        numeric &= det(rows) == phi.jacobian_determinant().eval(&p).unwrap();
    }
    let corrected = jac.iter().any(|o| o.id == "jacobians.k4_h" && o.status == Status::Verified);
    outcome(
        bad.is_empty() && jac.len() == 7 && corrected && numeric,
        format!(
            "{} Jacobian claims as expected, H has a3^8: {corrected}; numeric determinants agree: {numeric}",
            jac.len() - bad.len()
        ),
    )
}

fn c12_typo(all: &Report) -> Outcome {
    let printed = all.claims.iter().find(|c| c.id == "surface.s_under_printed_h").unwrap();
    let vieta = all.claims.iter().find(|c| c.id == "surface.s_under_H").unwrap();
    let witness_ok = printed.witness.starts_with("(0:1:1:-1) -> (3:1:1:-1) with S = 6");
    // independent: S(3, 1, 1, -1) = 9 + 1 + 3 - 1 - 6
    let s_img = s_int(&[3, 1, 1, -1].map(BigInt::from));
    let expected: Vec<&str> = all
        .claims
        .iter()
        .filter(|c| c.expected == Status::Refuted && c.status == Status::Refuted)
        .map(|c| c.id.as_str())
        .collect();
    let ok = printed.status == Status::Refuted
        && witness_ok
        && s_img == BigInt::from(6)
        && vieta.status == Status::Verified
        && all.exit_ok()
        && expected == ["surface.s_under_printed_h"];
    outcome(
        ok,
        format!(
            "printed H {} with witness ok: {witness_ok}; Vieta H {}; exit ok: {}; expected refutations: {expected:?}",
            printed.status,
            vieta.status,
            all.exit_ok()
        ),
    )
}

fn c13_search() -> Outcome {
    let found = search_integer_windows(30, 4).unwrap();
    let on_s = found.iter().all(|w| s_int(&w.coords.map(BigInt::from)).is_zero());
    let printed: [[i64; 4]; 3] = [[0, 1, 1, -1], [1, 1, -1, 1], [7, -4, -23, 29]];
    // up to scale and sign: both are primitive, so compare up to +-1
    let present = printed.iter().all(|p| {
        found.iter().any(|w| w.coords == *p || w.coords.iter().zip(p).all(|(a, b)| *a == -b))
    });
    let bounded = found.iter().all(|w| w.coords.iter().all(|c| c.abs() <= 30));
    let nonzero = found.iter().all(|w| w.coords.iter().any(|&c| c != 0));
    outcome(
        on_s && present && bounded && nonzero,
        format!("{} windows, all on S: {on_s}, printed windows present: {present}", found.len()),
    )
}

fn main() {
    let strict = std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1");
    let ctx = Context::new();
    let all_claims = registry(Suite::All);
    let all = run_claims(&all_claims, &ctx);
    let pick = |s: Suite| all.iter().filter(|o| o.suite == s).cloned().collect::<Vec<_>>();
    let (surface, curves, rel, jac) = (pick(Suite::Surface), pick(Suite::Curves), pick(Suite::Relations), pick(Suite::Jacobians));
    let report = Report::new(Suite::All, all.clone());

    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "quartic membership", c1_quartic_membership()),
        (2, "propagation identity", c2_propagation()),
        (3, "subsequences", c3_subsequences()),
        (4, "divisibility", c4_divisibility()),
        (5, "Laurent property", c5_laurent()),
        (6, "group relations", c6_group_relations(&rel)),
        (7, "degree sequences", c7_degrees()),
        (8, "invariance", c8_invariance(&surface, &curves)),
        (9, "curve identities", c9_curve_identities()),
        (10, "J-power closed forms", c10_j_powers(&curves)),
        (11, "Jacobian claims", c11_jacobians(&jac)),
        (12, "typo adjudication", c12_typo(&report)),
        (13, "integer search", c13_search()),
    ];

    let mut fatal = Vec::new();
    for (n, name, o) in &results {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let note = if !o.pass && KNOWN_FAILURES.contains(n) { " [known]" } else { "" };
        println!("{tag} {n:>2} {name}: {}{note}", o.detail);
        if !o.pass && (strict || !KNOWN_FAILURES.contains(n)) {
            fatal.push(*n);
        }
    }
    let passed = results.iter().filter(|r| r.2.pass).count();
    println!("acceptance: {passed}/{} criteria pass", results.len());
    if !fatal.is_empty() {
        println!("unexpected failures: {fatal:?}");
        std::process::exit(1);
    }
}
