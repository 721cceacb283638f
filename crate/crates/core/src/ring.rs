//! Graded polynomial rings over GF(2) and their monomials.
//!
//! A ring is described by an ordered list of variable names together with a
//! positive degree for each variable. Monomials are fixed-width exponent
//! vectors so that comparison and multiplication are O(1) at desk scale.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Hard cap on the number of ring variables; keeps monomials `Copy`.
pub const MAX_VARS: usize = 8;

/// Ambient graded polynomial ring descriptor.
///
/// The variable order is fixed and total; it determines the degrevlex
/// comparison used everywhere for canonical forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedRing {
    vars: Vec<String>,
    degrees: Vec<i64>,
    padded: [i64; MAX_VARS],
}

impl GradedRing {
    pub fn new<S: Into<String>>(vars: Vec<S>, degrees: Vec<i64>) -> Result<Arc<Self>> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        if vars.len() > MAX_VARS {
            return Err(Error::TooManyVariables(vars.len()));
        }
        if vars.len() != degrees.len() {
            return Err(Error::InvalidInput(
                "variable and degree lists have different lengths".into(),
            ));
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::DuplicateVariable(v.clone()));
            }
        }
        for (v, &d) in vars.iter().zip(&degrees) {
            if d < 1 {
                return Err(Error::InvalidVariableDegree(v.clone()));
            }
        }
        let mut padded = [0i64; MAX_VARS];
        padded[..degrees.len()].copy_from_slice(&degrees);
        Ok(Arc::new(GradedRing {
            vars,
            degrees,
            padded,
        }))
    }

    /// Ring with all variables in degree one.
    pub fn standard<S: Into<String>>(vars: Vec<S>) -> Result<Arc<Self>> {
        let n = vars.len();
        GradedRing::new(vars, vec![1; n])
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_degree(&self, i: usize) -> i64 {
        self.degrees[i]
    }

    pub fn var_degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Weighted degree of a monomial in this ring.
    pub fn mono_degree(&self, m: &Monomial) -> i64 {
        let mut d = 0;
        for i in 0..self.nvars() {
            d += self.padded[i] * m.exps[i] as i64;
        }
        d
    }

    /// Degrevlex comparison: weighted degree first, ties broken by the
    /// reverse-lexicographic rule (smaller exponent in the last differing
    /// variable wins).
    pub fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let da = self.mono_degree(a);
        let db = self.mono_degree(b);
        match da.cmp(&db) {
            Ordering::Equal => {}
            ord => return ord,
        }
        for i in (0..self.nvars()).rev() {
            match a.exps[i].cmp(&b.exps[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    /// All monomials of exact weighted degree `d`, sorted descending.
    pub fn monomials_of_degree(&self, d: i64) -> Vec<Monomial> {
        let mut out = Vec::new();
        if d < 0 {
            return out;
        }
        let mut cur = Monomial::one();
        self.enumerate_monomials(0, d, &mut cur, &mut out);
        out.sort_by(|a, b| self.cmp_mono(b, a));
        out
    }

    fn enumerate_monomials(
        &self,
        var: usize,
        rem: i64,
        cur: &mut Monomial,
        out: &mut Vec<Monomial>,
    ) {
        if var == self.nvars() {
            if rem == 0 {
                out.push(*cur);
            }
            return;
        }
        let dv = self.degrees[var];
        let max = rem / dv;
        for e in 0..=max {
            cur.exps[var] = e as u16;
            self.enumerate_monomials(var + 1, rem - e * dv, cur, out);
        }
        cur.exps[var] = 0;
    }
}

impl fmt::Display for GradedRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2)[")?;
        for (i, v) in self.vars.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// Exponent vector of a monomial, fixed width, implicitly padded with zeros.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub(crate) exps: [u16; MAX_VARS],
}

impl Monomial {
    pub fn one() -> Self {
        Monomial {
            exps: [0; MAX_VARS],
        }
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::one();
        m.exps[i] = 1;
        m
    }

    pub fn from_exps(exps: &[u16]) -> Self {
        let mut m = Monomial::one();
        m.exps[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn exp(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i] + other.exps[i];
        }
        m
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// Quotient `other / self`; caller must ensure divisibility.
    pub fn div_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = other.exps[i] - self.exps[i];
        }
        m
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::one();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
        }
        m
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// Variables with positive exponent, as indices.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_VARS).filter(|&i| self.exps[i] > 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_rejects_bad_input() {
        assert!(matches!(
            GradedRing::new(vec!["t", "t"], vec![1, 1]),
            Err(Error::DuplicateVariable(_))
        ));
        assert!(matches!(
            GradedRing::new(vec!["t"], vec![0]),
            Err(Error::InvalidVariableDegree(_))
        ));
        let names: Vec<String> = (0..9).map(|i| format!("x{i}")).collect();
        assert!(matches!(
            GradedRing::new(names, vec![1; 9]),
            Err(Error::TooManyVariables(9))
        ));
    }

    #[test]
    fn degrevlex_prefers_earlier_variables() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let t2 = Monomial::from_exps(&[2, 0]);
        let tw = Monomial::from_exps(&[1, 1]);
        let w2 = Monomial::from_exps(&[0, 2]);
        assert_eq!(r.cmp_mono(&t2, &tw), Ordering::Greater);
        assert_eq!(r.cmp_mono(&tw, &w2), Ordering::Greater);
        // degree dominates
        let t3 = Monomial::from_exps(&[3, 0]);
        assert_eq!(r.cmp_mono(&w2, &t3), Ordering::Less);
    }

    #[test]
    fn weighted_degree_and_enumeration() {
        // c has degree 2, w degree 1
        let r = GradedRing::new(vec!["c", "w"], vec![2, 1]).unwrap();
        let c = Monomial::var(0);
        let w = Monomial::var(1);
        assert_eq!(r.mono_degree(&c), 2);
        assert_eq!(r.mono_degree(&c.mul(&w)), 3);
        // degree 2: c and w^2
        let monos = r.monomials_of_degree(2);
        assert_eq!(monos.len(), 2);
        assert_eq!(r.cmp_mono(&monos[0], &monos[1]), Ordering::Greater);
        // degree 4 in two standard vars: 5 monomials
        let s = GradedRing::standard(vec!["t", "w"]).unwrap();
        assert_eq!(s.monomials_of_degree(4).len(), 5);
    }

    #[test]
    fn monomial_arithmetic() {
        let a = Monomial::from_exps(&[2, 1]);
        let b = Monomial::from_exps(&[1, 3]);
        assert_eq!(a.lcm(&b), Monomial::from_exps(&[2, 3]));
        assert!(!a.divides(&b));
        assert!(a.divides(&a.mul(&b)));
        assert_eq!(a.div_into(&a.mul(&b)), b);
        assert!(!a.coprime(&b));
        assert!(Monomial::var(0).coprime(&Monomial::var(1)));
    }
}
