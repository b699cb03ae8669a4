//! Sparse multivariate Laurent polynomials with exact rational coefficients.
//!
//! Text form: terms are printed with the non-constant terms in ascending
//! lexicographic exponent order followed by the constant term, using `*`
//! for products and `^` for powers (`y3*y4 + y1 - 1`).

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rational>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Poly {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Poly {
        Poly::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Poly {
        Poly::monomial(nvars, vec![0; nvars], c)
    }

    pub fn monomial(nvars: usize, exp: Vec<i64>, c: Rational) -> Poly {
        assert_eq!(exp.len(), nvars);
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Poly { nvars, terms }
    }

    pub fn var(nvars: usize, i: usize) -> Poly {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Poly::monomial(nvars, e, Rational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i64>, Rational)>>(nvars: usize, it: I) -> Poly {
        let mut p = Poly::zero(nvars);
        for (e, c) in it {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rational)> {
        self.terms.iter()
    }

    pub fn exponents(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.terms.keys()
    }

    pub fn coeff(&self, e: &[i64]) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, e: Vec<i64>, c: Rational) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x >= 0))
    }

    /// True when the polynomial is a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn total_degree(&self) -> i64 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// Multiplication by `c · t^e`.
    pub fn mul_term(&self, e: &[i64], c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(x, v)| (x.iter().zip(e).map(|(a, b)| a + b).collect(), v * c))
                .collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Componentwise minimum of the exponents (zero vector for the zero polynomial).
    pub fn min_exponent(&self) -> Vec<i64> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return vec![0; self.nvars];
        };
        it.fold(first.clone(), |acc, e| acc.iter().zip(e).map(|(a, b)| *a.min(b)).collect())
    }

    /// Applies `f` to every exponent; exponents mapped to the same vector are summed.
    pub fn map_exponents<F: Fn(&[i64]) -> Vec<i64>>(&self, nvars: usize, f: F) -> Poly {
        Poly::from_terms(nvars, self.terms.iter().map(|(e, c)| (f(e), c.clone())))
    }

    /// Exact evaluation; `None` if a negative power of a zero coordinate is needed.
    pub fn eval(&self, t: &[Rational]) -> Option<Rational> {
        assert_eq!(t.len(), self.nvars);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in t.iter().zip(e) {
                if k == 0 {
                    continue;
                }
                if x.is_zero() {
                    if k < 0 {
                        return None;
                    }
                    term = Rational::zero();
                    break;
                }
                term *= pow_rat(x, k);
            }
            acc += term;
        }
        Some(acc)
    }

    /// Substitutes polynomial `images[i]` for variable `i`; every exponent
    /// must be nonnegative unless the corresponding image is a monomial.
    pub fn substitute(&self, images: &[Poly]) -> Poly {
        assert_eq!(images.len(), self.nvars);
        let target = images.first().map_or(0, |p| p.nvars);
        let mut out = Poly::zero(target);
        for (e, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (img, &k) in images.iter().zip(e) {
                if k >= 0 {
                    term = &term * &img.pow(k as u32);
                } else {
                    let (m, v) = img.terms.iter().next().expect("monomial image");
                    assert!(img.is_monomial(), "negative power of a non-monomial");
                    let inv_e: Vec<i64> = m.iter().map(|x| -x * (-k)).collect();
                    term = term.mul_term(&inv_e, &pow_rat(v, k));
                }
            }
            out = &out + &term;
        }
        out
    }

    /// Exact quotient `self / d` if `d` divides `self` in the Laurent ring.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Poly::zero(self.nvars));
        }
        // Clear monomial factors; then Laurent divisibility is polynomial
        // divisibility, decided by the division algorithm for lex order.
        let ms = self.min_exponent();
        let md = d.min_exponent();
        let neg = |m: &[i64]| m.iter().map(|x| -x).collect::<Vec<_>>();
        let num = self.mul_term(&neg(&ms), &Rational::one());
        let den = d.mul_term(&neg(&md), &Rational::one());
        let (lead_e, lead_c) = den.terms.iter().next_back().expect("nonzero");
        let mut rem = num;
        let mut q = Poly::zero(self.nvars);
        while let Some((re, rc)) = rem.terms.iter().next_back() {
            let qe: Vec<i64> = re.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&x| x < 0) {
                return None;
            }
            let qc = rc / lead_c;
            rem = &rem - &den.mul_term(&qe, &qc);
            q.add_term(qe, qc);
        }
        let shift: Vec<i64> = ms.iter().zip(&md).map(|(a, b)| a - b).collect();
        Some(q.mul_term(&shift, &Rational::one()))
    }

    /// Formats with the given variable names: non-constant terms in
    /// ascending lex order of exponents, constant term last.
    pub fn to_string_with(&self, names: &[&str]) -> String {
        assert!(names.len() >= self.nvars);
        let zero = vec![0i64; self.nvars];
        let ordered = self
            .terms
            .iter()
            .filter(|(e, _)| **e != zero)
            .chain(self.terms.get_key_value(&zero));
        format_terms(ordered.map(|(e, c)| (e.as_slice(), c)), names)
    }

    /// Formats all terms in ascending lex order of exponents.
    pub fn to_string_lex(&self, names: &[&str]) -> String {
        assert!(names.len() >= self.nvars);
        format_terms(self.terms.iter().map(|(e, c)| (e.as_slice(), c)), names)
    }

    /// Parses a polynomial over the given variable names. Accepts `+ - * ^`,
    /// parentheses, integer powers (negative powers only on variables) and
    /// rational literals `p/q`.
    pub fn parse(input: &str, names: &[&str]) -> Result<Poly> {
        let mut p = Parser { src: input.as_bytes(), pos: 0, names, input };
        let poly = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(p.err("unexpected trailing input"));
        }
        Ok(poly)
    }
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Writes `c_1*m_1 + c_2*m_2 ...` in the given term order.
pub fn format_terms<'a, I>(terms: I, names: &[&str]) -> String
where
    I: IntoIterator<Item = (&'a [i64], &'a Rational)>,
{
    let mut s = String::new();
    for (i, (e, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mono = format_monomial(e, names);
        if mono.is_empty() {
            write_rational(&mut s, &abs);
        } else {
            if !abs.is_one() {
                write_rational(&mut s, &abs);
                s.push('*');
            }
            s.push_str(&mono);
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

pub fn pow_rat(x: &Rational, k: i64) -> Rational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    let mut r = Rational::one();
    let mut b = base;
    let mut n = k.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            r *= &b;
        }
        n >>= 1;
        if n > 0 {
            b = &b * &b;
        }
    }
    r
}

fn write_rational(s: &mut String, r: &Rational) {
    if r.is_integer() {
        let _ = write!(s, "{}", r.numer());
    } else {
        let _ = write!(s, "{}/{}", r.numer(), r.denom());
    }
}

fn format_monomial(e: &[i64], names: &[&str]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (i, &k) in e.iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(names[i].to_string()),
            _ => parts.push(alloc::format!("{}^{}", names[i], k)),
        }
    }
    parts.join("*")
}

/// Variable names `prefix1 … prefixN`.
pub fn var_names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| alloc::format!("{prefix}{i}")).collect()
}

impl core::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars);
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }
}

impl core::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars);
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), -c.clone());
        }
        r
    }
}

impl core::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl core::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        assert_eq!(self.nvars, o.nvars);
        let mut r = Poly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                r.add_term(add(e1, e2), c1 * c2);
            }
        }
        r
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    names: &'a [&'a str],
    input: &'a str,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::Parse { input: self.input.to_string(), message: alloc::format!("{msg} at byte {}", self.pos) }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly> {
        let n = self.names.len();
        let mut acc = Poly::zero(n);
        let mut sign = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -1
            }
            Some(b'+') => {
                self.pos += 1;
                1
            }
            _ => 1,
        };
        loop {
            let t = self.term()?;
            acc = if sign < 0 { &acc - &t } else { &acc + &t };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    sign = 1;
                }
                Some(b'-') => {
                    self.pos += 1;
                    sign = -1;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let f = self.factor()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn integer(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected integer"));
        }
        let s = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        s.parse::<BigInt>().map_err(|_| self.err("bad integer"))
    }

    fn exponent(&mut self) -> Result<i64> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        let k = self.integer()?;
        let k: i64 = i64::try_from(k).map_err(|_| self.err("exponent too large"))?;
        Ok(if neg { -k } else { k })
    }

    fn factor(&mut self) -> Result<Poly> {
        let n = self.names.len();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    let k = self.exponent()?;
                    if k < 0 {
                        if !inner.is_monomial() {
                            return Err(self.err("negative power of a non-monomial"));
                        }
                        return Ok(inner.substitute_self_pow(k));
                    }
                    return Ok(inner.pow(k as u32));
                }
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                let mut value = Rational::from_integer(num);
                if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let den = self.integer()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    value /= Rational::from_integer(den);
                }
                Ok(Poly::constant(n, value))
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = core::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                let Some(i) = self.names.iter().position(|v| *v == name) else {
                    self.pos = start;
                    return Err(self.err(&alloc::format!("unknown variable {name:?}")));
                };
                let mut e = vec![0i64; n];
                e[i] = 1;
                if self.peek() == Some(b'^') {
                    self.pos += 1;
                    e[i] = self.exponent()?;
                }
                Ok(Poly::monomial(n, e, Rational::one()))
            }
            _ => Err(self.err("expected a term")),
        }
    }
}

impl Poly {
    fn substitute_self_pow(&self, k: i64) -> Poly {
        let (e, c) = self.terms.iter().next().expect("monomial");
        Poly::monomial(self.nvars, e.iter().map(|x| x * k).collect(), pow_rat(c, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, ratio};

    const Y: [&str; 5] = ["y1", "y2", "y3", "y4", "y5"];

    #[test]
    fn canonical_order_matches_printed_ideal() {
        for s in ["y3*y4 + y1 - 1", "y5 + y2*y3 - 1", "y4*y5 + y2*y3*y4 + y1*y2 - 1"] {
            let p = Poly::parse(s, &Y).unwrap();
            assert_eq!(p.to_string_with(&Y), s);
        }
    }

    #[test]
    fn parse_powers_and_rationals() {
        let t = ["t1", "t2"];
        let p = Poly::parse("(1+t1)^2*(1+t2)", &t).unwrap();
        assert_eq!(p.len(), 6);
        assert_eq!(p.coeff(&[1, 1]), rat(2));
        let q = Poly::parse("3/2*t1^-1 - t2", &t).unwrap();
        assert_eq!(q.coeff(&[-1, 0]), ratio(3, 2));
        assert_eq!(q.to_string_with(&t), "3/2*t1^-1 - t2");
        assert!(Poly::parse("t3 + 1", &t).is_err());
        assert!(Poly::parse("1 +", &t).is_err());
    }

    #[test]
    fn exact_division() {
        let t = ["t1", "t2"];
        let a = Poly::parse("(1+t1)^2*(1+t2)", &t).unwrap();
        let b = Poly::parse("(1+t1)*(1+t2)", &t).unwrap();
        assert_eq!(a.div_exact(&b).unwrap(), Poly::parse("1 + t1", &t).unwrap());
        assert!(b.div_exact(&a).is_none());
        let c = Poly::parse("1 + t2 + t1*t2", &t).unwrap();
        assert!(a.div_exact(&c).is_none());
        let m = Poly::parse("t1^-1*t2 + t2", &t).unwrap();
        let u = Poly::parse("1 + t1", &t).unwrap();
        assert_eq!(m.div_exact(&u).unwrap(), Poly::parse("t1^-1*t2", &t).unwrap());
    }

    #[test]
    fn evaluation() {
        let t = ["t1", "t2"];
        let p = Poly::parse("t1^-1 + 2*t2", &t).unwrap();
        assert_eq!(p.eval(&[rat(2), ratio(1, 3)]), Some(ratio(7, 6)));
        assert_eq!(p.eval(&[rat(0), rat(1)]), None);
    }
}
