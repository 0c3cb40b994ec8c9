//! Arithmetic over word-size prime fields and Brown's dense modular gcd.

use std::collections::BTreeMap;

use rand::Rng;
use smallvec::SmallVec;

pub(crate) type Exps = SmallVec<[u16; 8]>;
/// Sparse polynomial mod p, terms sorted in descending lex order.
pub(crate) type FlatPoly = Vec<(Exps, u64)>;
type Dense = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.p - 2)
    }

    fn trim(v: &mut Dense) {
        while v.last() == Some(&0) {
            v.pop();
        }
    }

    pub fn eval(self, a: &[u64], x: u64) -> u64 {
        a.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    fn scale(self, a: &[u64], c: u64) -> Dense {
        let mut v: Dense = a.iter().map(|&x| self.mul(x, c)).collect();
        Self::trim(&mut v);
        v
    }

    fn mul_dense(self, a: &[u64], b: &[u64]) -> Dense {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = self.add(out[i + j], self.mul(x, y));
            }
        }
        Self::trim(&mut out);
        out
    }

    fn add_dense(self, a: &mut Dense, b: &[u64]) {
        if a.len() < b.len() {
            a.resize(b.len(), 0);
        }
        for (i, &y) in b.iter().enumerate() {
            a[i] = self.add(a[i], y);
        }
        Self::trim(a);
    }

    fn divrem(self, a: &[u64], b: &[u64]) -> (Dense, Dense) {
        assert!(!b.is_empty(), "division by zero polynomial");
        let mut r: Dense = a.to_vec();
        Self::trim(&mut r);
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let inv_lc = self.inv(*b.last().unwrap());
        let mut q = vec![0u64; r.len() - b.len() + 1];
        while r.len() >= b.len() {
            let shift = r.len() - b.len();
            let f = self.mul(*r.last().unwrap(), inv_lc);
            q[shift] = f;
            for (i, &y) in b.iter().enumerate() {
                r[shift + i] = self.sub(r[shift + i], self.mul(f, y));
            }
            Self::trim(&mut r);
        }
        Self::trim(&mut q);
        (q, r)
    }

    fn monic_dense(self, a: &[u64]) -> Dense {
        match a.last() {
            None => Vec::new(),
            Some(&lc) => self.scale(a, self.inv(lc)),
        }
    }

    pub fn gcd_dense(self, a: &[u64], b: &[u64]) -> Dense {
        let mut x = a.to_vec();
        let mut y = b.to_vec();
        Self::trim(&mut x);
        Self::trim(&mut y);
        while !y.is_empty() {
            let (_, r) = self.divrem(&x, &y);
            x = y;
            y = r;
        }
        self.monic_dense(&x)
    }

    fn div_exact_dense(self, a: &[u64], b: &[u64]) -> Dense {
        let (q, r) = self.divrem(a, b);
        debug_assert!(r.is_empty(), "inexact univariate division");
        q
    }
}

fn is_one(p: &FlatPoly) -> bool {
    p.len() == 1 && p[0].0.iter().all(|&e| e == 0)
}

fn monic_flat(f: Field, mut p: FlatPoly) -> FlatPoly {
    if let Some(&(_, lc)) = p.first() {
        let inv = f.inv(lc);
        for t in p.iter_mut() {
            t.1 = f.mul(t.1, inv);
        }
    }
    p
}

/// Splits off the last variable: prefix exponents -> dense coefficient.
fn to_recursive(p: &FlatPoly, nvars: usize) -> BTreeMap<Exps, Dense> {
    let mut out: BTreeMap<Exps, Dense> = BTreeMap::new();
    for (e, c) in p {
        let key: Exps = e[..nvars - 1].iter().copied().collect();
        let k = e[nvars - 1] as usize;
        let d = out.entry(key).or_default();
        if d.len() <= k {
            d.resize(k + 1, 0);
        }
        d[k] = *c;
    }
    out
}

fn from_recursive(rec: &BTreeMap<Exps, Dense>) -> FlatPoly {
    let mut out = Vec::new();
    for (key, dense) in rec.iter().rev() {
        for k in (0..dense.len()).rev() {
            if dense[k] != 0 {
                let mut e = key.clone();
                e.push(k as u16);
                out.push((e, dense[k]));
            }
        }
    }
    out
}

fn dense_to_flat(d: &[u64]) -> FlatPoly {
    (0..d.len())
        .rev()
        .filter(|&k| d[k] != 0)
        .map(|k| (SmallVec::from_slice(&[k as u16]), d[k]))
        .collect()
}

fn flat_to_dense(p: &FlatPoly) -> Dense {
    let mut d = Vec::new();
    for (e, c) in p {
        let k = e[0] as usize;
        if d.len() <= k {
            d.resize(k + 1, 0);
        }
        d[k] = *c;
    }
    d
}

/// Monic gcd in `Z_p[x_0..x_{n-1}]` by dense evaluation/interpolation on
/// the last variable.
pub(crate) fn pgcd<R: Rng>(f: Field, a: &FlatPoly, b: &FlatPoly, nvars: usize, rng: &mut R) -> FlatPoly {
    if a.is_empty() {
        return monic_flat(f, b.clone());
    }
    if b.is_empty() {
        return monic_flat(f, a.clone());
    }
    if nvars == 1 {
        let g = f.gcd_dense(&flat_to_dense(a), &flat_to_dense(b));
        return dense_to_flat(&g);
    }
    let mut ra = to_recursive(a, nvars);
    let mut rb = to_recursive(b, nvars);
    let content = |r: &BTreeMap<Exps, Dense>| {
        r.values()
            .fold(Vec::new(), |acc: Dense, d| f.gcd_dense(&acc, d))
    };
    let ca = content(&ra);
    let cb = content(&rb);
    for d in ra.values_mut() {
        *d = f.div_exact_dense(d, &ca);
    }
    for d in rb.values_mut() {
        *d = f.div_exact_dense(d, &cb);
    }
    let c = f.gcd_dense(&ca, &cb);
    let lca = ra.values().next_back().unwrap().clone();
    let lcb = rb.values().next_back().unwrap().clone();
    let gamma = f.gcd_dense(&lca, &lcb);
    let deg_a = ra.values().map(|d| d.len() - 1).max().unwrap();
    let deg_b = rb.values().map(|d| d.len() - 1).max().unwrap();
    let bound = deg_a.min(deg_b) + gamma.len() - 1;

    let mut interp: BTreeMap<Exps, Dense> = BTreeMap::new();
    let mut nodes: Dense = vec![1];
    let mut lead: Option<Exps> = None;
    let mut count = 0usize;
    let eval_rec = |r: &BTreeMap<Exps, Dense>, x: u64| -> FlatPoly {
        r.iter()
            .rev()
            .filter_map(|(k, d)| {
                let v = f.eval(d, x);
                (v != 0).then(|| (k.clone(), v))
            })
            .collect()
    };
    while count <= bound {
        let x = rng.gen_range(1..f.p);
        if f.eval(&lca, x) == 0 || f.eval(&lcb, x) == 0 {
            continue;
        }
        let qx = f.eval(&nodes, x);
        if qx == 0 {
            continue;
        }
        let ia = eval_rec(&ra, x);
        let ib = eval_rec(&rb, x);
        let ig = pgcd(f, &ia, &ib, nvars - 1, rng);
        if is_one(&ig) {
            return dense_to_flat_in(&f.monic_dense(&c), nvars);
        }
        let lm = ig[0].0.clone();
        match &lead {
            Some(cur) if lm > *cur => continue,
            Some(cur) if lm == *cur => {}
            _ => {
                lead = Some(lm);
                interp.clear();
                nodes = vec![1];
                count = 0;
            }
        }
        let qx = f.eval(&nodes, x);
        let scale = f.eval(&gamma, x);
        let inv_q = f.inv(qx);
        let image: BTreeMap<Exps, u64> = ig.into_iter().map(|(e, v)| (e, f.mul(v, scale))).collect();
        let mut keys: Vec<Exps> = interp.keys().cloned().collect();
        keys.extend(image.keys().cloned());
        keys.sort();
        keys.dedup();
        for key in keys {
            let h = interp.get(&key).map(|d| f.eval(d, x)).unwrap_or(0);
            let v = image.get(&key).copied().unwrap_or(0);
            let diff = f.mul(f.sub(v, h), inv_q);
            if diff != 0 {
                let delta = f.scale(&nodes, diff);
                let entry = interp.entry(key).or_default();
                f.add_dense(entry, &delta);
            }
        }
        interp.retain(|_, d| !d.is_empty());
        nodes = f.mul_dense(&nodes, &[f.sub(0, x), 1]);
        count += 1;
    }
    let cont = content(&interp);
    for d in interp.values_mut() {
        *d = f.mul_dense(&f.div_exact_dense(d, &cont), &c);
    }
    monic_flat(f, from_recursive(&interp))
}

fn dense_to_flat_in(d: &[u64], nvars: usize) -> FlatPoly {
    (0..d.len())
        .rev()
        .filter(|&k| d[k] != 0)
        .map(|k| {
            let mut e: Exps = SmallVec::from_elem(0, nvars);
            e[nvars - 1] = k as u16;
            (e, d[k])
        })
        .collect()
}

/// Upper bound on the gcd's degree in variable `v` from one univariate image.
/// Returns `None` if the evaluation point drops a leading coefficient.
pub(crate) fn univariate_degree_bound<R: Rng>(
    f: Field,
    a: &FlatPoly,
    b: &FlatPoly,
    v: usize,
    expected: (usize, usize),
    nvars: usize,
    rng: &mut R,
) -> Option<usize> {
    let point: Vec<u64> = (0..nvars).map(|_| rng.gen_range(1..f.p)).collect();
    let image = |p: &FlatPoly| {
        let mut d: Dense = Vec::new();
        for (e, c) in p {
            let k = e[v] as usize;
            let mut t = *c;
            for (j, &ej) in e.iter().enumerate() {
                if j != v && ej > 0 {
                    t = f.mul(t, f.pow(point[j], ej as u64));
                }
            }
            if d.len() <= k {
                d.resize(k + 1, 0);
            }
            d[k] = f.add(d[k], t);
        }
        Field::trim(&mut d);
        d
    };
    let da = image(a);
    let db = image(b);
    if da.len() != expected.0 + 1 || db.len() != expected.1 + 1 {
        return None;
    }
    Some(f.gcd_dense(&da, &db).len() - 1)
}

fn is_probable_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let f = Field { p: n };
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = f.pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = f.mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, descending.
pub(crate) fn primes() -> impl Iterator<Item = u64> {
    let mut n = (1u64 << 62) - 1;
    std::iter::from_fn(move || {
        while !is_probable_prime(n) {
            n -= 2;
        }
        let p = n;
        n -= 2;
        Some(p)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn primes_are_prime() {
        let ps: Vec<u64> = primes().take(3).collect();
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(is_probable_prime(1_000_000_007));
        assert!(!is_probable_prime(1_000_000_007 * 3));
    }

    #[test]
    fn univariate_gcd_mod_p() {
        let f = Field { p: 1_000_000_007 };
        // (x+1)(x+2) and (x+1)(x+3)
        let a = f.mul_dense(&[1, 1], &[2, 1]);
        let b = f.mul_dense(&[1, 1], &[3, 1]);
        assert_eq!(f.gcd_dense(&a, &b), vec![1, 1]);
    }

    #[test]
    fn bivariate_gcd_mod_p() {
        let f = Field { p: 1_000_000_007 };
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        // g = x + y, a = g*(x - y), b = g*(x*y + 1)
        let t = |x: u16, y: u16, c: u64| (SmallVec::from_slice(&[x, y]), c);
        let a: FlatPoly = vec![t(2, 0, 1), t(0, 2, f.p - 1)];
        let b: FlatPoly = vec![t(2, 1, 1), t(1, 2, 1), t(1, 0, 1), t(0, 1, 1)];
        let g = pgcd(f, &a, &b, 2, &mut rng);
        assert_eq!(g, vec![t(1, 0, 1), t(0, 1, 1)]);
    }
}
