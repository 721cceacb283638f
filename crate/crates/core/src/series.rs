//! Hilbert and Poincaré series as exact rational functions.
//!
//! A series is a Laurent numerator with integer coefficients over a product
//! of factors `(1 - s^d)`. All arithmetic and comparisons are exact; no
//! power-series truncation is involved in certificates.

use crate::error::{Error, Result};
use crate::ring::{GradedRing, Monomial};
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial in one variable `s` with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ZPoly {
    coeffs: BTreeMap<i64, i64>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly::default()
    }

    pub fn one() -> Self {
        ZPoly::term(0, 1)
    }

    pub fn term(exp: i64, coeff: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if coeff != 0 {
            coeffs.insert(exp, coeff);
        }
        ZPoly { coeffs }
    }

    /// `1 - s^d`
    pub fn one_minus_power(d: i64) -> Self {
        let mut p = ZPoly::one();
        p.add_term(d, -1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(e, c)| (*e, *c))
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        let entry = self.coeffs.entry(exp).or_insert(0);
        *entry += coeff;
        if *entry == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn add(&self, other: &ZPoly) -> ZPoly {
        let mut out = self.clone();
        for (e, c) in &other.coeffs {
            out.add_term(*e, *c);
        }
        out
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn sub(&self, other: &ZPoly) -> ZPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &ZPoly) -> ZPoly {
        let mut out = ZPoly::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    pub fn shift(&self, k: i64) -> ZPoly {
        ZPoly {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + k, *c)).collect(),
        }
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.values().sum()
    }

    /// Exact division by `1 - s^d`, if possible.
    pub fn div_one_minus_power(&self, d: i64) -> Option<ZPoly> {
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        let max = self.max_exp().unwrap();
        let mut rem = self.clone();
        let mut quot = ZPoly::zero();
        while let Some(e) = rem.min_exp() {
            if e > max - d {
                return None;
            }
            let c = rem.coeff(e);
            quot.add_term(e, c);
            // (1 - s^d)·c s^e = c s^e - c s^{e+d}
            rem.add_term(e, -c);
            rem.add_term(e + d, c);
        }
        Some(quot)
    }

    /// Multiplicity of the root s = 1.
    pub fn multiplicity_at_one(&self) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let mut p = self.clone();
        let mut mult = 0;
        while p.eval_at_one() == 0 {
            p = p
                .div_one_minus_power(1)
                .expect("value 0 at s=1 implies a (1-s) factor");
            mult += 1;
        }
        mult
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.coeffs {
            let mag = c.abs();
            if first {
                if *c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if *c < 0 {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            match (*e, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "s")?,
                (1, m) => write!(f, "{m}*s")?,
                (e, 1) => write!(f, "s^{e}")?,
                (e, m) => write!(f, "{m}*s^{e}")?,
            }
        }
        Ok(())
    }
}

/// Parse the numerator syntax produced by `Display`, e.g. `1-2*s+s^3`.
pub fn parse_zpoly(input: &str) -> Result<ZPoly> {
    let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::InvalidInput("empty series numerator".into()));
    }
    let mut out = ZPoly::zero();
    let mut rest = compact.as_str();
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    loop {
        let split = rest
            .char_indices()
            .skip(1)
            .find(|(i, c)| (*c == '+' || *c == '-') && !rest[..*i].ends_with('^'))
            .map(|(i, _)| i);
        let (tok, next) = match split {
            Some(i) => (&rest[..i], Some(&rest[i..])),
            None => (rest, None),
        };
        out.add_term_from_token(tok, sign)?;
        match next {
            Some(n) => {
                sign = if n.starts_with('-') { -1 } else { 1 };
                rest = &n[1..];
            }
            None => break,
        }
    }
    Ok(out)
}

impl ZPoly {
    fn add_term_from_token(&mut self, tok: &str, sign: i64) -> Result<()> {
        let bad = || Error::InvalidInput(format!("bad series term `{tok}`"));
        let (coeff, rest) = match tok.find(|c: char| !c.is_ascii_digit()) {
            Some(0) => (1i64, tok),
            Some(i) => {
                let c: i64 = tok[..i].parse().map_err(|_| bad())?;
                let rest = tok[i..].strip_prefix('*').unwrap_or(&tok[i..]);
                (c, rest)
            }
            None => (tok.parse().map_err(|_| bad())?, ""),
        };
        let exp = if rest.is_empty() {
            0
        } else if rest == "s" {
            1
        } else if let Some(e) = rest.strip_prefix("s^") {
            e.parse().map_err(|_| bad())?
        } else {
            return Err(bad());
        };
        self.add_term(exp, sign * coeff);
        Ok(())
    }
}

/// Rational series `num / Π (1 - s^d)` in canonical cancelled form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    num: ZPoly,
    /// One entry per denominator factor, sorted ascending.
    den: Vec<i64>,
}

impl RationalSeries {
    pub fn new(num: ZPoly, mut den: Vec<i64>) -> Result<Self> {
        if den.iter().any(|&d| d < 1) {
            return Err(Error::InvalidInput(
                "denominator exponents must be positive".into(),
            ));
        }
        den.sort_unstable();
        let mut s = RationalSeries { num, den };
        s.normalize();
        Ok(s)
    }

    pub fn zero() -> Self {
        RationalSeries {
            num: ZPoly::zero(),
            den: Vec::new(),
        }
    }

    pub fn polynomial(num: ZPoly) -> Self {
        RationalSeries::new(num, Vec::new()).expect("no denominator")
    }

    pub fn one() -> Self {
        RationalSeries::polynomial(ZPoly::one())
    }

    /// Series of the free rank-1 module over a graded ring.
    pub fn free_ring(ring: &GradedRing) -> Self {
        RationalSeries::new(ZPoly::one(), ring.var_degrees().to_vec()).expect("positive degrees")
    }

    pub fn numerator(&self) -> &ZPoly {
        &self.num
    }

    pub fn denominator_exponents(&self) -> &[i64] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
            return;
        }
        // cancel factors greedily, largest d first, restarting after a hit
        'outer: loop {
            for k in (0..self.den.len()).rev() {
                if let Some(q) = self.num.div_one_minus_power(self.den[k]) {
                    self.num = q;
                    self.den.remove(k);
                    continue 'outer;
                }
            }
            break;
        }
    }

    pub fn add(&self, other: &RationalSeries) -> RationalSeries {
        // common denominator: union with multiplicity max
        let mut union: BTreeMap<i64, usize> = BTreeMap::new();
        for &d in &self.den {
            *union.entry(d).or_insert(0) += 1;
        }
        let mut other_counts: BTreeMap<i64, usize> = BTreeMap::new();
        for &d in &other.den {
            *other_counts.entry(d).or_insert(0) += 1;
        }
        for (&d, &c) in &other_counts {
            let e = union.entry(d).or_insert(0);
            *e = (*e).max(c);
        }
        let mut num_a = self.num.clone();
        let mut num_b = other.num.clone();
        let mut den = Vec::new();
        for (&d, &total) in &union {
            let in_a = self.den.iter().filter(|&&x| x == d).count();
            let in_b = other_counts.get(&d).copied().unwrap_or(0);
            for _ in in_a..total {
                num_a = num_a.mul(&ZPoly::one_minus_power(d));
            }
            for _ in in_b..total {
                num_b = num_b.mul(&ZPoly::one_minus_power(d));
            }
            for _ in 0..total {
                den.push(d);
            }
        }
        RationalSeries::new(num_a.add(&num_b), den).expect("positive denominators")
    }

    pub fn sub(&self, other: &RationalSeries) -> RationalSeries {
        self.add(&RationalSeries {
            num: other.num.neg(),
            den: other.den.clone(),
        })
    }

    pub fn mul(&self, other: &RationalSeries) -> RationalSeries {
        let mut den = self.den.clone();
        den.extend_from_slice(&other.den);
        RationalSeries::new(self.num.mul(&other.num), den).expect("positive denominators")
    }

    /// Multiply by `s^k` (degree shift of the underlying module).
    pub fn shifted(&self, k: i64) -> RationalSeries {
        RationalSeries {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    /// Exact equality as rational functions, by cross multiplication.
    pub fn eq_series(&self, other: &RationalSeries) -> bool {
        let mut lhs = self.num.clone();
        for &d in &other.den {
            lhs = lhs.mul(&ZPoly::one_minus_power(d));
        }
        let mut rhs = other.num.clone();
        for &d in &self.den {
            rhs = rhs.mul(&ZPoly::one_minus_power(d));
        }
        lhs == rhs
    }

    /// Order of the pole at s = 1; 0 for polynomials, -1 for the zero series
    /// has no meaning so zero reports 0 as well (callers special-case it).
    pub fn pole_order_at_one(&self) -> usize {
        if self.num.is_zero() {
            return 0;
        }
        self.den
            .len()
            .saturating_sub(self.num.multiplicity_at_one())
    }

    /// Power-series coefficients of the expansion on `lo..=hi`.
    pub fn expand(&self, lo: i64, hi: i64) -> Vec<i64> {
        if hi < lo {
            return Vec::new();
        }
        let base = self.num.min_exp().unwrap_or(0).min(lo);
        let len = (hi - base + 1) as usize;
        let mut acc = vec![0i64; len];
        for (e, c) in self.num.coeffs() {
            if e <= hi {
                acc[(e - base) as usize] += c;
            }
        }
        for &d in &self.den {
            // multiply by 1/(1 - s^d): prefix sums with stride d
            let d = d as usize;
            for i in d..len {
                acc[i] += acc[i - d];
            }
        }
        acc[(lo - base) as usize..].to_vec()
    }

    /// The leading exponent of the expansion (valuation), if nonzero.
    pub fn valuation(&self) -> Option<i64> {
        if self.num.is_zero() {
            return None;
        }
        // denominators expand starting at s^0 with coefficient 1
        self.num.min_exp()
    }
}

impl fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.num)?;
        for &d in &self.den {
            write!(f, "/(1-s^{d})")?;
        }
        Ok(())
    }
}

/// Numerator of the Hilbert series of `R/I` for a monomial ideal, over the
/// full denominator `Π_v (1 - s^{deg v})`.
pub fn monomial_quotient_numerator(ring: &GradedRing, gens: &[Monomial]) -> ZPoly {
    let minimal = minimalize(gens.to_vec());
    k_numerator(ring, minimal)
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in &gens {
        if !gens.iter().any(|h| h != g && h.divides(g)) {
            out.push(*g);
        }
    }
    out
}

fn k_numerator(ring: &GradedRing, gens: Vec<Monomial>) -> ZPoly {
    if gens.is_empty() {
        return ZPoly::one();
    }
    if gens.iter().any(|g| g.is_one()) {
        return ZPoly::zero();
    }
    // base case: pure powers. After minimalization their variables are
    // automatically distinct, so this is a complete intersection.
    if gens.iter().all(|g| g.support().count() == 1) {
        let mut p = ZPoly::one();
        for g in &gens {
            p = p.mul(&ZPoly::one_minus_power(ring.mono_degree(g)));
        }
        return p;
    }
    // pivot on the most frequent variable among mixed-support generators;
    // restricting to mixed generators makes both branches strictly smaller
    let mut counts = [0usize; crate::ring::MAX_VARS];
    let mut mixed = [false; crate::ring::MAX_VARS];
    for g in &gens {
        let support: Vec<usize> = g.support().collect();
        for &v in &support {
            counts[v] += 1;
            if support.len() >= 2 {
                mixed[v] = true;
            }
        }
    }
    let pivot = (0..ring.nvars())
        .filter(|&v| mixed[v])
        .max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a)))
        .expect("a mixed generator exists past the base case");
    let pv = Monomial::var(pivot);

    // I + (x): generators not divisible by x, plus x itself
    let mut plus: Vec<Monomial> = gens.iter().filter(|g| g.exp(pivot) == 0).copied().collect();
    plus.push(pv);
    // I : x
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| if g.exp(pivot) > 0 { pv.div_into(g) } else { *g })
        .collect();
    let k_plus = k_numerator(ring, minimalize(plus));
    let k_colon = k_numerator(ring, minimalize(colon));
    k_plus.add(&k_colon.shift(ring.var_degree(pivot)))
}
