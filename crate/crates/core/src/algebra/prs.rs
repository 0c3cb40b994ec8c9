//! Primitive pseudo-remainder sequence gcd. Slow but simple; kept as an
//! independent reference for the modular algorithm.

use super::monomial::Monomial;
use super::{Polynomial, Rational};
use num_traits::One;

fn content_in(p: &Polynomial, var: usize) -> Polynomial {
    if !p.involves(var) {
        return p.primitive_part();
    }
    let mut acc = Polynomial::zero(p.ring());
    for c in p.coefficients_in(var) {
        if c.is_zero() {
            continue;
        }
        acc = gcd_prs(&acc, &c);
        if acc.is_constant() {
            break;
        }
    }
    acc
}

fn pseudo_remainder(f: &Polynomial, g: &Polynomial, var: usize) -> Polynomial {
    let ring = f.ring();
    let dg = g.degree_in(var);
    let lc_g = g.coefficients_in(var).pop().expect("nonzero");
    let mut r = f.clone();
    while !r.is_zero() && r.degree_in(var) >= dg {
        let dr = r.degree_in(var);
        let lc_r = r.coefficients_in(var).pop().expect("nonzero");
        let shift = Polynomial::monomial(ring, Monomial::var(ring.len(), var, dr - dg), Rational::one());
        r = &(&lc_g * &r) - &(&(&lc_r * &shift) * g);
    }
    r
}

pub fn gcd_prs(p: &Polynomial, q: &Polynomial) -> Polynomial {
    if p.is_zero() {
        return q.primitive_part();
    }
    if q.is_zero() {
        return p.primitive_part();
    }
    let ring = p.ring();
    let var = match (0..ring.len()).find(|&v| p.involves(v) || q.involves(v)) {
        Some(v) => v,
        None => return Polynomial::one(ring),
    };
    let cp = content_in(p, var);
    let cq = content_in(q, var);
    let d = gcd_prs(&cp, &cq);
    let mut f = p.div_exact(&cp).expect("content divides");
    let mut g = q.div_exact(&cq).expect("content divides");
    if !f.involves(var) || !g.involves(var) {
        return d.primitive_part();
    }
    if f.degree_in(var) < g.degree_in(var) {
        std::mem::swap(&mut f, &mut g);
    }
    let result = loop {
        let r = pseudo_remainder(&f, &g, var);
        if r.is_zero() {
            break g.div_exact(&content_in(&g, var)).expect("content divides");
        }
        if !r.involves(var) {
            break Polynomial::one(ring);
        }
        f = g;
        g = r.div_exact(&content_in(&r, var)).expect("content divides");
    };
    (&d * &result).primitive_part()
}
