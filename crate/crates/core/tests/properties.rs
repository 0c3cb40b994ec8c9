use std::collections::BTreeMap;

use num_traits::Zero;
use proptest::prelude::*;

use somos_core::algebra::{poly_gcd, substitute, Monomial, Polynomial, Rational, RationalFunction, Ring};
use somos_core::bfile::BFile;
use somos_core::invariants::{
    build_representation, check_invariant, construct_curve, vieta_involution, Parity, Representation,
};
use somos_core::projmap::{word_to_map, BindingMode, BirationalMap, MapWord, ProjectivePoint};
use somos_core::somos::{eval_s, s_polynomial, symbolic_term, SomosRule, SomosSequence, TransformSpec};

fn q(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn ring3() -> Ring {
    Ring::new(3, &[])
}

/// Small polynomials in a0, a1, a2.
fn poly() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(((0u16..3, 0u16..3, 0u16..3), -5i64..=5), 0..5).prop_map(|terms| {
        let r = ring3();
        Polynomial::from_terms(&r, terms.into_iter().map(|((a, b, c), k)| (Monomial::from_exponents(&[a, b, c]), q(k))))
    })
}

fn nonzero_poly() -> impl Strategy<Value = Polynomial> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn ratio() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn reps() -> &'static [Representation] {
    use std::sync::OnceLock;
    static R: OnceLock<Vec<Representation>> = OnceLock::new();
    R.get_or_init(|| (2..=5).map(|k| build_representation(k).unwrap()).collect())
}

fn rep(k: usize) -> &'static Representation {
    &reps()[k - 2]
}

/// Words in the k = 4 generators, kept short so compositions stay cheap.
fn word4() -> impl Strategy<Value = MapWord> {
    prop::collection::vec(prop::sample::select(vec!["R", "F", "G", "M(c=2)", "M(c=-1/3)", "H"]), 1..4)
        .prop_map(|ls| ls.join(".").parse().unwrap())
}

fn map4(w: &MapWord) -> BirationalMap {
    word_to_map(rep(4), w, BindingMode::Numeric).unwrap()
}

fn point4() -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(ratio(), 4).prop_filter("nonzero", |v| v.iter().any(|x| !x.is_zero()))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division_undoes_multiplication(a in poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
    }

    #[test]
    fn gcd_contains_common_factor(a in nonzero_poly(), b in nonzero_poly(), c in nonzero_poly()) {
        let g = poly_gcd(&(&a * &c), &(&b * &c));
        prop_assert!(g.div_exact(&c.primitive_part()).is_ok());
        prop_assert!((&a * &c).div_exact(&g).is_ok());
        prop_assert!((&b * &c).div_exact(&g).is_ok());
    }

    #[test]
    fn substitution_is_a_homomorphism(a in poly(), b in poly(), img in nonzero_poly()) {
        let r = ring3();
        let assign: BTreeMap<usize, RationalFunction> =
            [(1usize, RationalFunction::new(img.clone(), Polynomial::var(&r, 0)).unwrap())].into_iter().collect();
        let lhs = substitute(&(&a * &b), &assign).unwrap();
        let rhs = substitute(&a, &assign).unwrap().try_mul(&substitute(&b, &assign).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_commutes_with_substitution(a in poly(), img in poly(), x in prop::collection::vec(ratio(), 3)) {
        let composed = a.compose(&[Polynomial::var(&ring3(), 0), img.clone(), Polynomial::var(&ring3(), 2)]).unwrap();
        let y = img.eval(&x).unwrap();
        let direct = a.eval(&[x[0].clone(), y, x[2].clone()]).unwrap();
        prop_assert_eq!(composed.eval(&x).unwrap(), direct);
    }

    #[test]
    fn normalization_is_idempotent(w in word4()) {
        let m = map4(&w);
        let again = BirationalMap::from_polynomials(m.ring(), m.components().to_vec()).unwrap();
        prop_assert_eq!(again.components(), m.components());
    }

    #[test]
    fn composition_is_associative(a in word4(), b in word4(), c in word4()) {
        let (a, b, c) = (map4(&a), map4(&b), map4(&c));
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert!(left.equal_projective(&right));
    }

    #[test]
    fn apply_respects_composition(a in word4(), b in word4(), p in point4()) {
        let (a, b) = (map4(&a), map4(&b));
        let p = ProjectivePoint::new(p).unwrap();
        let none = BTreeMap::new();
        let step = b.apply(&p, &none).and_then(|x| a.apply(&x, &none));
        let both = a.compose(&b).unwrap().apply(&p, &none);
        // off the indeterminacy loci of a, b and a o b the images agree
        if let (Ok(x), Ok(y)) = (step, both) {
            prop_assert_eq!(x, y);
        }
    }

    #[test]
    fn degree_is_submultiplicative(a in word4(), b in word4()) {
        let (a, b) = (map4(&a), map4(&b));
        prop_assert!(a.compose(&b).unwrap().degree() <= a.degree() * b.degree());
    }

    #[test]
    fn words_invert(w in word4()) {
        // every generator here is an involution except F = R.G and M
        let m = map4(&w);
        let text = w.to_string();
        let inverse: Vec<String> = text
            .split('.')
            .rev()
            .map(|l| match l {
                "F" => "G.R".to_string(),
                "M(c=2)" => "M(c=1/2)".to_string(),
                "M(c=-1/3)" => "M(c=-3)".to_string(),
                other => other.to_string(),
            })
            .collect();
        let inv = map4(&inverse.join(".").parse().unwrap());
        prop_assert!(m.compose(&inv).unwrap().is_identity());
    }

    #[test]
    fn recurrence_round_trips(k in 2usize..=6, init in prop::collection::vec(1i64..=4, 6), steps in 0i64..10) {
        let mut s = SomosSequence::from_ints(k, 0, &init[..k]).unwrap();
        let later = s.window(steps, k).unwrap();
        let mut back = SomosSequence::new(SomosRule::new(k).unwrap(), steps, later).unwrap();
        prop_assert_eq!(back.window(0, k).unwrap(), s.window(0, k).unwrap());
    }

    #[test]
    fn transforms_preserve_the_recurrence(
        k in 2usize..=5,
        init in prop::collection::vec(1i64..=3, 5),
        b in ratio().prop_filter("nonzero", |x| !x.is_zero()),
        c in ratio().prop_filter("nonzero", |x| !x.is_zero()),
        m in -3i64..=3,
        reflect in any::<bool>(),
    ) {
        let mut s = SomosSequence::from_ints(k, 0, &init[..k]).unwrap();
        let t = TransformSpec::new(b, c, m, reflect).unwrap();
        let image = t.apply(&mut s, -4, 8);
        prop_assert!(image.is_ok(), "{:?}", image.err());
        prop_assert!(image.unwrap().check_rule().is_ok());
    }

    #[test]
    fn transform_group_law(
        b1 in ratio().prop_filter("nz", |x| !x.is_zero()), c1 in ratio().prop_filter("nz", |x| !x.is_zero()),
        m1 in -3i64..=3, r1 in any::<bool>(),
        b2 in ratio().prop_filter("nz", |x| !x.is_zero()), c2 in ratio().prop_filter("nz", |x| !x.is_zero()),
        m2 in -3i64..=3, r2 in any::<bool>(),
    ) {
        let mut s = SomosSequence::from_ints(4, 0, &[1, 2, 1, 3]).unwrap();
        let t1 = TransformSpec::new(b1, c1, m1, r1).unwrap();
        let t2 = TransformSpec::new(b2, c2, m2, r2).unwrap();
        let mut first = t1.apply(&mut s, -12, 12).unwrap();
        let mut twice = t2.apply(&mut first, -4, 4).unwrap();
        let mut once = t2.after(&t1).apply(&mut s, -4, 4).unwrap();
        prop_assert_eq!(twice.window(-4, 9).unwrap(), once.window(-4, 9).unwrap());
        let mut undone = t1.after(&t1.inverse()).apply(&mut s, -3, 3).unwrap();
        prop_assert_eq!(undone.window(-3, 7).unwrap(), s.window(-3, 7).unwrap());
    }

    #[test]
    fn symbolic_terms_match_numeric(k in 2usize..=5, n in -4i64..=9, init in prop::collection::vec(1i64..=5, 5)) {
        let t = symbolic_term(k, n).unwrap();
        let x: Vec<Rational> = init[..k].iter().map(|&v| q(v)).collect();
        let mut s = SomosSequence::from_ints(k, 0, &init[..k]).unwrap();
        let num = t.numerator().eval(&x).unwrap();
        let den = t.denominator().eval(&x).unwrap();
        prop_assert_eq!(num / den, s.get(n).unwrap());
    }

    #[test]
    fn vieta_is_an_involution_preserving_p(a in nonzero_poly(), b in poly(), c in poly()) {
        // P = a v^2 + b v + c with v = a0 and a, b, c free of a0, homogenized
        let r = Ring::new(4, &[]);
        let lift = |p: &Polynomial| {
            p.embed(&r).unwrap().compose(&[Polynomial::var(&r, 1), Polynomial::var(&r, 2), Polynomial::var(&r, 3)]).unwrap()
        };
        let (a, b, c) = (lift(&a), lift(&b), lift(&c));
        let terms: Vec<(Polynomial, u32)> = vec![(a, 2), (b, 1), (c, 0)];
        let v = Polynomial::var(&r, 0);
        // homogenize each coefficient to a common total degree
        let deg = terms.iter().filter_map(|(p, e)| p.total_degree().map(|d| d + e)).max().unwrap();
        let w = Polynomial::var(&r, 1);
        let p = terms.iter().fold(Polynomial::zero(&r), |acc, (coef, e)| {
            if coef.is_zero() {
                return acc;
            }
            let parts = coef.terms().iter().fold(Polynomial::zero(&r), |s, (m, k)| {
                let mono = Polynomial::from_terms(&r, [(m.clone(), k.clone())]);
                let pad = deg - e - m.total_degree();
                &s + &(&mono * &w.pow(pad))
            });
            &acc + &(&parts * &v.pow(*e))
        });
        let h = vieta_involution(&p, 0);
        prop_assume!(h.is_ok());
        let h = h.unwrap();
        prop_assert!(h.compose(&h).unwrap().is_identity());
        let check = check_invariant(&h, &p).unwrap();
        prop_assert!(check.verdict.is_verified(), "{}", check.verdict.witness);
        let cof = check.cofactor.unwrap();
        prop_assert_eq!(&cof * &p, h.pullback(&p).unwrap());
    }

    #[test]
    fn invariance_composes(a in word4(), b in word4()) {
        let (phi, psi) = (map4(&a), map4(&b));
        let s = s_polynomial(rep(4).ring());
        let ca = check_invariant(&phi, &s).unwrap().cofactor.unwrap();
        let cb = check_invariant(&psi, &s).unwrap().cofactor.unwrap();
        let both = check_invariant(&phi.compose(&psi).unwrap(), &s).unwrap();
        prop_assert!(both.verdict.is_verified());
        // raw composition: S o phi o psi = psi^*(ca) cb S exactly
        let raw: Vec<Polynomial> =
            phi.components().iter().map(|c| c.compose(psi.components()).unwrap()).collect();
        let predicted = &psi.pullback(&ca).unwrap() * &cb;
        prop_assert_eq!(s.compose(&raw).unwrap(), &predicted * &s);
        // normalizing divides the raw components by a common h, so cofactors differ by h^4
        let norm = phi.compose(&psi).unwrap();
        let i = norm.components().iter().position(|c| !c.is_zero()).unwrap();
        let h = raw[i].div_exact(&norm.components()[i]).unwrap();
        let got = both.cofactor.unwrap();
        let ratio = predicted.div_exact(&(&got * &h.pow(4)));
        prop_assert!(ratio.is_ok_and(|r| r.is_constant()), "{} vs {}", predicted.pretty(), got.pretty());
    }

    #[test]
    fn curves_are_fixed_by_r_and_scale(half in 1u32..=6, anti in any::<bool>()) {
        let d = 2 * half;
        let parity = if anti { Parity::Antisymmetric } else { Parity::Symmetric };
        let fam = construct_curve(d, parity).unwrap();
        let p = &fam.polynomial;
        let r = p.ring();
        let x = |i| Polynomial::var(r, i);
        let reversed = p.compose(&[x(2), x(1), x(0)]).unwrap();
        prop_assert_eq!(&reversed, p);
        if let Ok(c) = Polynomial::var_named(r, "c") {
            let scaled = p.compose(&[x(0), &x(1) * &c, &x(2) * &c.pow(2)]).unwrap();
            prop_assert_eq!(scaled, &c.pow(d) * p);
        }
    }

    #[test]
    fn projective_points_ignore_scale(p in point4(), s in ratio().prop_filter("nz", |x| !x.is_zero())) {
        let a = ProjectivePoint::new(p.clone()).unwrap();
        let b = ProjectivePoint::new(p.iter().map(|x| x * &s).collect()).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.normalized(), b.normalized());
    }

    #[test]
    fn s_vanishes_along_a006769_orbits(h in prop::sample::select(vec!["G", "R", "H", "M(c=3)"]), n in 0i64..12) {
        let mut s = somos_core::somos::known::a006769();
        let w = s.window(n, 4).unwrap();
        let m = map4(&h.parse().unwrap());
        if let Ok(img) = m.apply(&ProjectivePoint::new(w).unwrap(), &BTreeMap::new()) {
            prop_assert!(eval_s(img.coords()).is_zero());
        }
    }

    #[test]
    fn bfile_round_trips(start in -5i64..5, vals in prop::collection::vec(-1_000_000i64..1_000_000, 1..20)) {
        let text: String = std::iter::once("# A123456 sample\n".to_string())
            .chain(vals.iter().enumerate().map(|(i, v)| format!("{} {v}\n", start + i as i64)))
            .collect();
        let b: BFile = text.parse().unwrap();
        prop_assert_eq!(b.id.as_deref(), Some("A123456"));
        prop_assert_eq!(b.offset(), start);
        prop_assert_eq!(b.entries.iter().map(|(_, v)| v.to_string()).collect::<Vec<_>>(),
                        vals.iter().map(ToString::to_string).collect::<Vec<_>>());
    }
}

#[test]
fn laurent_terms_are_integral_for_unit_seeds() {
    for k in 4..=7 {
        let mut s = SomosSequence::from_ints(k, 0, &vec![1; k]).unwrap();
        for n in -10..20 {
            assert!(s.get(n).unwrap().is_integer(), "k = {k}, n = {n}");
        }
    }
    let _ = rep(2);
}
