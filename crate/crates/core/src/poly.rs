//! Multivariate polynomials over the two-element field.
//!
//! A polynomial is a canonically ordered set of distinct monomials; the
//! coefficient 1 is implicit and addition is symmetric difference. The empty
//! set is the zero polynomial, so equal polynomials have identical
//! representations.

use crate::error::{Error, Result};
use crate::ring::{GradedRing, Monomial};
use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// Homogeneity report for a nonzero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomogeneousDegree {
    Degree(i64),
    Inhomogeneous,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Arc<GradedRing>,
    /// Distinct monomials, sorted descending in degrevlex.
    terms: Vec<Monomial>,
}

impl Polynomial {
    pub fn zero(ring: &Arc<GradedRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<GradedRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![Monomial::one()],
        }
    }

    pub fn var(ring: &Arc<GradedRing>, i: usize) -> Self {
        assert!(i < ring.nvars(), "variable index out of range");
        Polynomial {
            ring: ring.clone(),
            terms: vec![Monomial::var(i)],
        }
    }

    pub fn monomial(ring: &Arc<GradedRing>, m: Monomial) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![m],
        }
    }

    /// Builds a polynomial from an arbitrary monomial list; duplicates cancel
    /// in pairs (characteristic two).
    pub fn from_monomials(
        ring: &Arc<GradedRing>,
        monos: impl IntoIterator<Item = Monomial>,
    ) -> Self {
        let mut terms: Vec<Monomial> = monos.into_iter().collect();
        terms.sort_by(|a, b| ring.cmp_mono(b, a));
        let terms = cancel_sorted(terms);
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].is_one()
    }

    /// True for a nonzero constant, i.e. the only unit of GF(2).
    pub fn is_unit(&self) -> bool {
        self.is_one()
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading monomial in the storage (degrevlex) order.
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// Sum, i.e. symmetric difference of the term sets.
    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: merge_xor(&self.ring, &self.terms, &other.terms),
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                prods.push(a.mul(b));
            }
        }
        Ok(Polynomial::from_monomials(&self.ring, prods))
    }

    /// Multiplication by a single monomial preserves the term order.
    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|t| t.mul(m)).collect(),
        }
    }

    /// Squaring is term-wise in characteristic two (Frobenius).
    pub fn square(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|t| t.mul(t)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        if k == 0 {
            return Polynomial::one(&self.ring);
        }
        let mut base = self.clone();
        let mut k = k;
        // peel squarings while the exponent is even
        while k.is_multiple_of(2) {
            base = base.square();
            k /= 2;
        }
        let mut acc = base.clone();
        let mut sq = base;
        k /= 2;
        while k > 0 {
            sq = sq.square();
            if k % 2 == 1 {
                acc = acc.mul(&sq).expect("same ring");
            }
            k /= 2;
        }
        acc
    }

    /// Common weighted degree of all terms, or the inhomogeneous marker.
    /// The zero polynomial has no degree.
    pub fn homogeneous_degree(&self) -> Result<HomogeneousDegree> {
        let first = self.terms.first().ok_or(Error::DegreeOfZero)?;
        let d = self.ring.mono_degree(first);
        for t in &self.terms[1..] {
            if self.ring.mono_degree(t) != d {
                return Ok(HomogeneousDegree::Inhomogeneous);
            }
        }
        Ok(HomogeneousDegree::Degree(d))
    }

    pub fn is_homogeneous_of_degree(&self, d: i64) -> bool {
        match self.homogeneous_degree() {
            Ok(HomogeneousDegree::Degree(e)) => e == d,
            _ => false,
        }
    }

    /// Maximum weighted term degree; zero polynomial reports `None`.
    pub fn max_degree(&self) -> Option<i64> {
        self.terms.iter().map(|t| self.ring.mono_degree(t)).max()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::text::render_poly(self))
    }
}

/// Merge two descending term lists, cancelling equal monomials in pairs.
pub(crate) fn merge_xor(ring: &GradedRing, a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match ring.cmp_mono(&a[i], &b[j]) {
            Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            Ordering::Less => {
                out.push(b[j]);
                j += 1;
            }
            Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Remove pairs of equal adjacent monomials from a sorted list.
fn cancel_sorted(terms: Vec<Monomial>) -> Vec<Monomial> {
    let mut out: Vec<Monomial> = Vec::with_capacity(terms.len());
    let mut iter = terms.into_iter().peekable();
    while let Some(t) = iter.next() {
        let mut count = 1usize;
        while iter.peek() == Some(&t) {
            iter.next();
            count += 1;
        }
        if count % 2 == 1 {
            out.push(t);
        }
    }
    out
}

/// Graded ring homomorphism given by one image per source variable.
///
/// Each image must be homogeneous of the source variable's degree (the zero
/// polynomial is allowed), so the map preserves degrees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingMap {
    source: Arc<GradedRing>,
    target: Arc<GradedRing>,
    images: Vec<Polynomial>,
}

impl RingMap {
    pub fn new(
        source: &Arc<GradedRing>,
        target: &Arc<GradedRing>,
        images: Vec<Polynomial>,
    ) -> Result<Self> {
        if images.len() != source.nvars() {
            return Err(Error::InvalidInput(format!(
                "ring map needs {} images, got {}",
                source.nvars(),
                images.len()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if img.ring() != target {
                return Err(Error::RingMismatch);
            }
            if !img.is_zero() && !img.is_homogeneous_of_degree(source.var_degree(i)) {
                return Err(Error::NotHomogeneous(format!(
                    "image of {} (expected degree {})",
                    source.var_name(i),
                    source.var_degree(i)
                )));
            }
        }
        Ok(RingMap {
            source: source.clone(),
            target: target.clone(),
            images,
        })
    }

    pub fn identity(ring: &Arc<GradedRing>) -> Self {
        let images = (0..ring.nvars())
            .map(|i| Polynomial::var(ring, i))
            .collect();
        RingMap {
            source: ring.clone(),
            target: ring.clone(),
            images,
        }
    }

    pub fn source(&self) -> &Arc<GradedRing> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GradedRing> {
        &self.target
    }

    pub fn images(&self) -> &[Polynomial] {
        &self.images
    }

    /// Substitute variable images and expand to canonical form.
    pub fn apply(&self, f: &Polynomial) -> Result<Polynomial> {
        if f.ring() != &self.source {
            return Err(Error::RingMismatch);
        }
        let mut acc = Polynomial::zero(&self.target);
        for t in f.terms() {
            let mut prod = Polynomial::one(&self.target);
            for i in 0..self.source.nvars() {
                let e = t.exp(i);
                if e > 0 {
                    prod = prod.mul(&self.images[i].pow(e as u32))?;
                }
            }
            acc = acc.add(&prod)?;
        }
        Ok(acc)
    }

    /// Composite `g ∘ self` (apply `self` first, then `g`).
    pub fn then(&self, g: &RingMap) -> Result<RingMap> {
        if self.target != g.source {
            return Err(Error::RingMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|img| g.apply(img))
            .collect::<Result<Vec<_>>>()?;
        RingMap::new(&self.source, &g.target, images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn ring_tw() -> Arc<GradedRing> {
        GradedRing::standard(vec!["t", "w"]).unwrap()
    }

    #[test]
    fn addition_is_symmetric_difference() {
        let r = ring_tw();
        let a = parse_poly(&r, "t^2+t*w").unwrap();
        let b = parse_poly(&r, "t*w+w^2").unwrap();
        let sum = a.add(&b).unwrap();
        assert_eq!(sum, parse_poly(&r, "t^2+w^2").unwrap());
        // f + f = 0
        assert!(a.add(&a).unwrap().is_zero());
    }

    #[test]
    fn product_expands_y() {
        // y = t(t + w) = t^2 + tw
        let r = ring_tw();
        let t = Polynomial::var(&r, 0);
        let w = Polynomial::var(&r, 1);
        let y = t.mul(&t.add(&w).unwrap()).unwrap();
        assert_eq!(y, parse_poly(&r, "t^2+t*w").unwrap());
    }

    #[test]
    fn frobenius_square() {
        let r = ring_tw();
        let f = parse_poly(&r, "t+w").unwrap();
        assert_eq!(f.square(), parse_poly(&r, "t^2+w^2").unwrap());
        assert_eq!(f.pow(2), f.square());
        assert_eq!(f.pow(0), Polynomial::one(&r));
        // x(x+w) with x := t
        let x = Polynomial::var(&r, 0);
        let e = x.mul(&x.add(&Polynomial::var(&r, 1)).unwrap()).unwrap();
        assert_eq!(e, parse_poly(&r, "t^2+t*w").unwrap());
    }

    #[test]
    fn one_is_identity() {
        let r = ring_tw();
        let f = parse_poly(&r, "t^2+t*w+w^2").unwrap();
        assert_eq!(Polynomial::one(&r).mul(&f).unwrap(), f);
    }

    #[test]
    fn homogeneous_degree_reporting() {
        let r = ring_tw();
        assert_eq!(
            parse_poly(&r, "t^2+t*w")
                .unwrap()
                .homogeneous_degree()
                .unwrap(),
            HomogeneousDegree::Degree(2)
        );
        assert_eq!(
            parse_poly(&r, "t+w^2")
                .unwrap()
                .homogeneous_degree()
                .unwrap(),
            HomogeneousDegree::Inhomogeneous
        );
        assert_eq!(
            Polynomial::zero(&r).homogeneous_degree(),
            Err(Error::DegreeOfZero)
        );
        // degree-2 variable
        let rg = GradedRing::new(vec!["c"], vec![2]).unwrap();
        assert_eq!(
            Polynomial::var(&rg, 0).homogeneous_degree().unwrap(),
            HomogeneousDegree::Degree(2)
        );
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let r = ring_tw();
        let s = GradedRing::standard(vec!["a", "b"]).unwrap();
        let f = Polynomial::var(&r, 0);
        let g = Polynomial::var(&s, 0);
        assert_eq!(f.add(&g), Err(Error::RingMismatch));
        assert_eq!(f.mul(&g), Err(Error::RingMismatch));
    }

    #[test]
    fn ring_map_substitution() {
        // i*(c) = t^2 + tw on GF(2)[c,w'] -> GF(2)[t,w]
        let rg = GradedRing::new(vec!["c", "w"], vec![2, 1]).unwrap();
        let rh = ring_tw();
        let i_star = RingMap::new(
            &rg,
            &rh,
            vec![
                parse_poly(&rh, "t^2+t*w").unwrap(),
                parse_poly(&rh, "w").unwrap(),
            ],
        )
        .unwrap();
        let c = Polynomial::var(&rg, 0);
        assert_eq!(
            i_star.apply(&c).unwrap(),
            parse_poly(&rh, "t^2+t*w").unwrap()
        );

        // fixed point of the Weyl generator: t^2 + tw under t -> t+w
        let phi = RingMap::new(
            &rh,
            &rh,
            vec![
                parse_poly(&rh, "t+w").unwrap(),
                parse_poly(&rh, "w").unwrap(),
            ],
        )
        .unwrap();
        let y = parse_poly(&rh, "t^2+t*w").unwrap();
        assert_eq!(phi.apply(&y).unwrap(), y);

        // identity
        let id = RingMap::identity(&rh);
        let f = parse_poly(&rh, "t^2+w^2+t*w").unwrap();
        assert_eq!(id.apply(&f).unwrap(), f);
    }

    #[test]
    fn ring_map_rejects_inhomogeneous_images() {
        let rg = GradedRing::new(vec!["c"], vec![2]).unwrap();
        let rh = ring_tw();
        let bad = RingMap::new(&rg, &rh, vec![parse_poly(&rh, "t").unwrap()]);
        assert!(matches!(bad, Err(Error::NotHomogeneous(_))));
        // zero image is fine
        let ok = RingMap::new(&rg, &rh, vec![Polynomial::zero(&rh)]);
        assert!(ok.is_ok());
    }
}
