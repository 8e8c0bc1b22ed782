//! Sparse multivariate polynomials over exact rationals. Exponents are
//! positively supported `NVector`s; the term order used throughout is
//! degree first, then "larger entry at the largest differing index wins"
//! within a degree (this is the order that makes the stated leading terms
//! of slide, forest and Schubert polynomials come out right).

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::nvector::NVector;

pub type Q = BigRational;

pub fn q_int(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_ratio(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

fn q_pow(base: &Q, e: u32) -> Q {
    Q::new(base.numer().pow(e), base.denom().pow(e))
}

/// Compares two exponent vectors: total degree first, then the one with the
/// larger entry at the largest index where they differ wins.
pub fn revlex_cmp(a: &NVector, b: &NVector) -> Ordering {
    match a.weight().cmp(&b.weight()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    let hi = a.max_support().unwrap_or(0).max(b.max_support().unwrap_or(0));
    let lo = a.min_support().unwrap_or(0).min(b.min_support().unwrap_or(0));
    for i in (lo..=hi).rev() {
        match a.get(i).cmp(&b.get(i)) {
            Ordering::Equal => {}
            ord => return ord,
        }
    }
    Ordering::Equal
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<NVector, Q>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::monomial(NVector::zero(), q_int(1))
    }

    pub fn constant(c: Q) -> Self {
        Polynomial::monomial(NVector::zero(), c)
    }

    pub fn monomial(exp: NVector, coef: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !coef.is_zero() {
            terms.insert(exp, coef);
        }
        Polynomial { terms }
    }

    pub fn variable(i: i32) -> Self {
        Polynomial::monomial(NVector::from_entries([(i, 1)]), q_int(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exp: &NVector) -> Q {
        self.terms.get(exp).cloned().unwrap_or_else(Q::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&NVector, &Q)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, exp: NVector, coef: Q) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
        }
    }

    pub fn plus(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Polynomial) -> Polynomial {
        self.plus(&other.scaled(&q_int(-1)))
    }

    pub fn scaled(&self, s: &Q) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * s))
                .collect(),
        }
    }

    pub fn times(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                out.add_term(ea.plus(eb), ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one();
        for _ in 0..e {
            out = out.times(self);
        }
        out
    }

    /// Largest index of any variable appearing, 0 for constants.
    pub fn max_variable(&self) -> i32 {
        self.terms
            .keys()
            .filter_map(|e| e.max_support())
            .max()
            .unwrap_or(0)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|e| e.weight() as usize).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(|e| e.weight());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }

    /// Splits into homogeneous components, keyed by degree.
    pub fn homogeneous_components(&self) -> BTreeMap<usize, Polynomial> {
        let mut out: BTreeMap<usize, Polynomial> = BTreeMap::new();
        for (e, c) in self.terms() {
            out.entry(e.weight() as usize)
                .or_default()
                .add_term(e.clone(), c.clone());
        }
        out
    }

    /// The order-maximal exponent among the terms of top degree.
    pub fn leading_exponent(&self) -> Result<NVector> {
        self.terms
            .keys()
            .max_by(|a, b| revlex_cmp(a, b))
            .cloned()
            .ok_or(Error::NoLeadingTerm)
    }

    /// Evaluates with `values[i]` substituted for `x_{i+1}`; every variable
    /// of the polynomial must be covered.
    pub fn eval(&self, values: &[Q]) -> Result<Q> {
        let mut total = Q::zero();
        for (e, c) in self.terms() {
            let mut term = c.clone();
            for (i, m) in e.iter() {
                if i < 1 || i as usize > values.len() {
                    return Err(Error::UnboundVariable(i));
                }
                term *= q_pow(&values[i as usize - 1], m);
            }
            total += term;
        }
        Ok(total)
    }

    /// `f(1,...,1,0,0,...)` with `n` ones.
    pub fn at_ones(&self, n: usize) -> Q {
        let mut total = Q::zero();
        for (e, c) in self.terms() {
            if e.max_support().unwrap_or(0) <= n as i32 && e.min_support().unwrap_or(1) >= 1 {
                total += c.clone();
            }
        }
        total
    }

    /// Substitutes `x_i := q^(i-1)`.
    pub fn at_geometric(&self, q: &Q) -> Result<Q> {
        let hi = self.max_variable().max(1) as usize;
        let mut point = Vec::with_capacity(hi);
        let mut power = Q::one();
        for _ in 0..hi {
            point.push(power.clone());
            power *= q;
        }
        self.eval(&point)
    }

    /// Terms sorted descending in the term order.
    pub fn sorted_terms(&self) -> Vec<(NVector, Q)> {
        let mut terms: Vec<(NVector, Q)> =
            self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        terms.sort_by(|a, b| revlex_cmp(&b.0, &a.0));
        terms
    }

    /// Parses a signed sum of terms `q*x1^a*x2^b`, with optional rational
    /// coefficient `q` (e.g. `x2^2*x4 + 3/2*x1 - 2`).
    pub fn parse(text: &str) -> Result<Polynomial> {
        let mut out = Polynomial::zero();
        let bytes = text.as_bytes();
        let mut pos = 0usize;
        let n = bytes.len();
        let skip_ws = |pos: &mut usize| {
            while *pos < n && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if pos == n {
            return Err(Error::Parse { position: pos, expected: "a polynomial".into() });
        }
        let mut first = true;
        while pos < n {
            skip_ws(&mut pos);
            let mut sign = 1i64;
            if pos < n && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    sign = -1;
                }
                pos += 1;
            } else if !first {
                return Err(Error::Parse { position: pos, expected: "'+' or '-'".into() });
            }
            first = false;
            skip_ws(&mut pos);
            let (exp, coef, next) = parse_term(text, pos)?;
            out.add_term(exp, coef * q_int(sign));
            pos = next;
            skip_ws(&mut pos);
        }
        Ok(out)
    }
}

fn parse_term(text: &str, mut pos: usize) -> Result<(NVector, Q, usize)> {
    let bytes = text.as_bytes();
    let n = bytes.len();
    let mut coef = Q::one();
    let mut exp = NVector::zero();
    loop {
        if pos < n && bytes[pos] == b'x' {
            pos += 1;
            let (var, next) = parse_uint(text, pos, "variable index after 'x'")?;
            pos = next;
            let mut power = 1u32;
            if pos < n && bytes[pos] == b'^' {
                pos += 1;
                let (p, next) = parse_uint(text, pos, "exponent after '^'")?;
                power = p as u32;
                pos = next;
            }
            exp.set(var as i32, exp.get(var as i32) + power);
        } else if pos < n && bytes[pos].is_ascii_digit() {
            let (num, next) = parse_uint(text, pos, "number")?;
            pos = next;
            let mut den = 1u64;
            if pos < n && bytes[pos] == b'/' {
                pos += 1;
                let (d, next) = parse_uint(text, pos, "denominator after '/'")?;
                den = d;
                pos = next;
            }
            if den == 0 {
                return Err(Error::Parse { position: pos, expected: "nonzero denominator".into() });
            }
            coef *= Q::new(BigInt::from(num), BigInt::from(den));
        } else {
            return Err(Error::Parse {
                position: pos,
                expected: "a factor ('x<i>' or a number)".into(),
            });
        }
        // another factor?
        let mut look = pos;
        while look < n && bytes[look].is_ascii_whitespace() {
            look += 1;
        }
        if look < n && bytes[look] == b'*' {
            pos = look + 1;
            while pos < n && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            continue;
        }
        break;
    }
    Ok((exp, coef, pos))
}

fn parse_uint(text: &str, mut pos: usize, what: &str) -> Result<(u64, usize)> {
    let bytes = text.as_bytes();
    let start = pos;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == start {
        return Err(Error::Parse { position: pos, expected: what.into() });
    }
    text[start..pos]
        .parse::<u64>()
        .map(|v| (v, pos))
        .map_err(|_| Error::Parse { position: start, expected: what.into() })
}

fn format_monomial(e: &NVector) -> String {
    let mut parts = Vec::new();
    for (i, m) in e.iter() {
        if m == 1 {
            parts.push(format!("x{}", i));
        } else {
            parts.push(format!("x{}^{}", i, m));
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = format_monomial(&e);
            if mono.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", abs, mono)?;
            }
        }
        Ok(())
    }
}

// JSON form: {"terms":[{"exp":[...],"num":...,"den":...}]}
impl Polynomial {
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                serde_json::json!({
                    "exp": e.to_dense(),
                    "num": big_number(c.numer()),
                    "den": big_number(c.denom()),
                })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Polynomial> {
        let terms = value
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| Error::Invalid("expected {\"terms\": [...]}".into()))?;
        let mut out = Polynomial::zero();
        for t in terms {
            let exp = t
                .get("exp")
                .and_then(|e| e.as_array())
                .ok_or_else(|| Error::Invalid("term missing exp".into()))?;
            let exp: Vec<u32> = exp
                .iter()
                .map(|v| v.as_u64().map(|x| x as u32))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::Invalid("bad exponent entry".into()))?;
            let num = parse_big(t.get("num"))?;
            let den = parse_big(t.get("den"))?;
            if den.is_zero() {
                return Err(Error::Invalid("zero denominator".into()));
            }
            out.add_term(NVector::from_slice(&exp), Q::new(num, den));
        }
        Ok(out)
    }
}

fn big_number(v: &BigInt) -> serde_json::Value {
    serde_json::Value::Number(
        serde_json::Number::from_string_unchecked(v.to_string()),
    )
}

fn parse_big(v: Option<&serde_json::Value>) -> Result<BigInt> {
    let v = v.ok_or_else(|| Error::Invalid("term missing num/den".into()))?;
    match v {
        serde_json::Value::Number(n) => n
            .as_str()
            .parse::<BigInt>()
            .map_err(|_| Error::Invalid("bad integer".into())),
        serde_json::Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| Error::Invalid("bad integer".into())),
        _ => Err(Error::Invalid("num/den must be integers".into())),
    }
}
