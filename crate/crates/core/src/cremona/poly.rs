use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::ratlin::{fmt_rat, to_rat, Int, Rat};

/// Sparse multivariate polynomial over Q.
///
/// Monomials are exponent vectors; the printing and normalization order is
/// graded lexicographic with `x0 > x1 > ...`. The module works almost
/// exclusively with homogeneous polynomials, see [`HPoly`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

/// A polynomial used as a form: every monomial has the same degree. The
/// alias documents intent; [`Poly::is_homogeneous`] checks it.
pub type HPoly = Poly;

fn grlex_key(e: &[u32]) -> (u32, &[u32]) {
    (e.iter().sum(), e)
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        Poly::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Poly::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(nvars, e, Rat::one())
    }

    /// The variables `x0, ..., x_{n-1}` as polynomials.
    pub fn vars(nvars: usize) -> Vec<Poly> {
        (0..nvars).map(|i| Poly::var(nvars, i)).collect()
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Rat) -> Self {
        assert_eq!(exps.len(), nvars, "exponent vector length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exps, c);
        }
        Poly { nvars, terms }
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Self {
        let mut p = Poly::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    /// From `(coefficient, exponents)` pairs with small integers.
    pub fn from_i64(nvars: usize, terms: &[(i64, &[u32])]) -> Self {
        Poly::from_terms(nvars, terms.iter().map(|&(c, e)| (e.to_vec(), Rat::from_integer(c.into()))))
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        assert_eq!(e.len(), self.nvars, "exponent vector length");
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Rat::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: &[u32]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|e| e[var]).max().unwrap_or(0)
    }

    /// Leading term in graded lexicographic order.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms.iter().max_by(|a, b| grlex_key(a.0).cmp(&grlex_key(b.0)))
    }

    /// Largest monomial in pure lexicographic order (used for division).
    fn lex_leading(&self) -> Option<(&Vec<u32>, &Rat)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut s = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t *= x;
                }
            }
            s += t;
        }
        s
    }

    /// `self(subs[0], ..., subs[n-1])`; all substitutes share one ring.
    pub fn substitute(&self, subs: &[Poly]) -> Poly {
        assert_eq!(subs.len(), self.nvars, "one substitute per variable");
        let target = subs.first().map_or(0, Poly::nvars);
        let mut powers: Vec<Vec<Poly>> = subs.iter().map(|s| vec![Poly::one(target), s.clone()]).collect();
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &subs[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][k as usize];
            }
            out = &out + &t;
        }
        out
    }

    pub fn derivative(&self, var: usize) -> Poly {
        Poly::from_terms(
            self.nvars,
            self.terms.iter().filter(|(e, _)| e[var] > 0).map(|(e, c)| {
                let mut e2 = e.clone();
                e2[var] -= 1;
                (e2, c * Rat::from_integer(e[var].into()))
            }),
        )
    }

    /// Coefficients of `self` as a polynomial in `var`; entry `k` multiplies `var^k`.
    pub fn coeffs_in(&self, var: usize) -> Vec<Poly> {
        let mut out = vec![Poly::zero(self.nvars); self.degree_in(var) as usize + 1];
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            let k = e2[var] as usize;
            e2[var] = 0;
            out[k].add_term(e2, c.clone());
        }
        out
    }

    fn times_var_power(&self, var: usize, k: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e2 = e.clone();
                    e2[var] += k;
                    (e2, c.clone())
                })
                .collect(),
        }
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let (de, dc) = d.lex_leading().map(|(e, c)| (e.clone(), c.clone()))?;
        let mut r = self.clone();
        let mut q = Poly::zero(self.nvars);
        while let Some((re, rc)) = r.lex_leading().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let t = Poly::monomial(self.nvars, e, rc / &dc);
            r = &r - &(&t * d);
            q = &q + &t;
        }
        Some(q)
    }

    /// Scalar multiple with coprime integer coefficients and positive
    /// graded-lex leading coefficient. Zero stays zero.
    pub fn normalized(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.terms.values().fold(Int::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<Int> = self.terms.values().map(|c| (c * to_rat(&l)).to_integer()).collect();
        let g = ints.iter().fold(Int::zero(), |g, x| g.gcd(x));
        let mut s = Rat::new(l, g);
        if self.leading_term().expect("nonzero").1.is_negative() {
            s = -s;
        }
        self.scale(&s)
    }

    /// Text form `c*x^a*y^b + ...` in graded-lex order with the given names.
    pub fn to_text_with(&self, names: &[&str]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut ts: Vec<(&Vec<u32>, &Rat)> = self.terms.iter().collect();
        ts.sort_by(|a, b| grlex_key(b.0).cmp(&grlex_key(a.0)));
        let mut out = String::new();
        for (k, (e, c)) in ts.into_iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(i, &x)| if x == 1 { names[i].to_string() } else { format!("{}^{}", names[i], x) })
                .collect();
            if mono.is_empty() {
                out.push_str(&fmt_rat(&a));
            } else {
                if !a.is_one() {
                    out.push_str(&fmt_rat(&a));
                    out.push('*');
                }
                out.push_str(&mono.join("*"));
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let names = default_names(self.nvars);
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.to_text_with(&refs)
    }

    /// Canonical text of the normalized polynomial.
    pub fn canonical_text(&self) -> String {
        self.normalized().to_text()
    }
}

/// `x, y, z` for three variables, `s, t` for two, `X0..` for five, else `x0..`.
pub fn default_names(n: usize) -> Vec<String> {
    match n {
        2 => vec!["s".into(), "t".into()],
        3 => vec!["x".into(), "y".into(), "z".into()],
        5 => (0..5).map(|i| format!("X{i}")).collect(),
        _ => (0..n).map(|i| format!("x{i}")).collect(),
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect() }
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert_eq!(self.nvars, rhs.nvars, "variable count mismatch");
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(Rat::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Poly { nvars: self.nvars, terms }
    }
}

macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

fn highest_var(f: &Poly, g: &Poly) -> Option<usize> {
    (0..f.nvars).rev().find(|&v| f.degree_in(v) > 0 || g.degree_in(v) > 0)
}

/// gcd of the coefficients of `f` viewed as a polynomial in `var`.
fn content_in(f: &Poly, var: usize) -> Poly {
    f.coeffs_in(var).iter().filter(|c| !c.is_zero()).fold(Poly::zero(f.nvars), |g, c| gcd(&g, c))
}

fn primitive_in(f: &Poly, var: usize) -> Poly {
    if f.is_zero() {
        return f.clone();
    }
    f.div_exact(&content_in(f, var)).expect("content divides")
}

fn pseudo_remainder(a: &Poly, b: &Poly, var: usize) -> Poly {
    let db = b.degree_in(var);
    let lb = b.coeffs_in(var).pop().expect("nonzero divisor");
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(var) >= db {
        let dr = r.degree_in(var);
        let lr = r.coeffs_in(var).pop().expect("nonzero");
        r = &(&r * &lb) - &(&lr * &b.times_var_power(var, dr - db));
    }
    r
}

/// Greatest common divisor, normalized (coprime integer coefficients,
/// positive leading coefficient). `gcd(0, 0) = 0`.
///
/// Recursive: split off the content with respect to the highest variable,
/// then run a primitive pseudo-remainder sequence on the primitive parts.
pub fn gcd(f: &Poly, g: &Poly) -> Poly {
    assert_eq!(f.nvars, g.nvars, "variable count mismatch");
    if f.is_zero() {
        return g.normalized();
    }
    if g.is_zero() {
        return f.normalized();
    }
    let Some(v) = highest_var(f, g) else {
        return Poly::one(f.nvars);
    };
    let cf = content_in(f, v);
    let cg = content_in(g, v);
    let c = gcd(&cf, &cg);
    let mut a = f.div_exact(&cf).expect("content divides");
    let mut b = g.div_exact(&cg).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    let h = loop {
        if b.degree_in(v) == 0 {
            break Poly::one(f.nvars);
        }
        let r = pseudo_remainder(&a, &b, v);
        if r.is_zero() {
            break b;
        }
        a = b;
        b = primitive_in(&r, v);
    };
    (&c * &primitive_in(&h, v)).normalized()
}

pub fn gcd_all(ps: &[Poly]) -> Option<Poly> {
    let first = ps.first()?;
    Some(ps.iter().fold(Poly::zero(first.nvars), |g, p| gcd(&g, p)))
}

/// Determinant of a square matrix of polynomials (fraction-free Bareiss).
pub fn det_poly(m: Vec<Vec<Poly>>, nvars: usize) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one(nvars);
    }
    let mut a = m;
    let mut prev = Poly::one(nvars);
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return Poly::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

/// Resultant of `f` and `g` with respect to `var` (Sylvester determinant).
pub fn resultant(f: &Poly, g: &Poly, var: usize) -> Poly {
    let n = f.nvars;
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let (df, dg) = (fc.len() - 1, gc.len() - 1);
    let size = df + dg;
    if size == 0 {
        return Poly::one(n);
    }
    let mut m = vec![vec![Poly::zero(n); size]; size];
    for r in 0..dg {
        for (k, c) in fc.iter().rev().enumerate() {
            m[r][r + k] = c.clone();
        }
    }
    for r in 0..df {
        for (k, c) in gc.iter().rev().enumerate() {
            m[dg + r][r + k] = c.clone();
        }
    }
    det_poly(m, n)
}

/// All monomials of degree `d` in `n` variables, in descending graded-lex order.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 1 {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n - 1, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    rec(n, d, &mut Vec::new(), &mut out);
    out
}
