//! Module monomial orders.
//!
//! The storage and default computation order is degrevlex extended
//! term-over-position to free modules. Resolution steps use Schreyer orders
//! induced by the leading terms of the previous differential.

use crate::ring::{GradedRing, Monomial};
use std::cmp::Ordering;

/// A module term: monomial times a basis position.
pub type ModTerm = (Monomial, usize);

#[derive(Debug, Clone)]
pub enum ModuleOrder {
    /// Degrevlex on the monomial; ties go to the earlier basis position.
    Top,
    /// Induced order: `m·e_i > m'·e_j` iff `m·lead_i > m'·lead_j` in the
    /// inner order, with ties broken by position.
    Schreyer {
        leads: Vec<ModTerm>,
        inner: Box<ModuleOrder>,
    },
}

impl ModuleOrder {
    pub fn schreyer(leads: Vec<ModTerm>, inner: ModuleOrder) -> Self {
        ModuleOrder::Schreyer {
            leads,
            inner: Box::new(inner),
        }
    }

    pub fn cmp(&self, ring: &GradedRing, a: &ModTerm, b: &ModTerm) -> Ordering {
        match self {
            ModuleOrder::Top => match ring.cmp_mono(&a.0, &b.0) {
                Ordering::Equal => b.1.cmp(&a.1),
                ord => ord,
            },
            ModuleOrder::Schreyer { leads, inner } => {
                let ca = (a.0.mul(&leads[a.1].0), leads[a.1].1);
                let cb = (b.0.mul(&leads[b.1].0), leads[b.1].1);
                match inner.cmp(ring, &ca, &cb) {
                    Ordering::Equal => b.1.cmp(&a.1),
                    ord => ord,
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GradedRing;

    #[test]
    fn top_order_is_term_over_position() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let o = ModuleOrder::Top;
        let t = Monomial::var(0);
        let w = Monomial::var(1);
        assert_eq!(o.cmp(&r, &(t, 1), &(w, 0)), Ordering::Greater);
        assert_eq!(o.cmp(&r, &(t, 1), &(t, 0)), Ordering::Less);
        assert_eq!(o.cmp(&r, &(t, 0), &(t, 0)), Ordering::Equal);
    }

    #[test]
    fn schreyer_order_uses_composite_leads() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let t = Monomial::var(0);
        let w = Monomial::var(1);
        // leads g_0 = w·e_0, g_1 = t·e_0
        let o = ModuleOrder::schreyer(vec![(w, 0), (t, 0)], ModuleOrder::Top);
        // t·e_0 composes to tw·f_0, w·e_1 composes to tw·f_0: tie -> position 0 wins
        assert_eq!(o.cmp(&r, &(t, 0), &(w, 1)), Ordering::Greater);
        // 1·e_0 composes to w, 1·e_1 composes to t: t > w in degrevlex
        assert_eq!(
            o.cmp(&r, &(Monomial::one(), 0), &(Monomial::one(), 1)),
            Ordering::Less
        );
    }
}
