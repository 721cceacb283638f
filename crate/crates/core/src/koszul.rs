//! Koszul complexes of homogeneous ring elements.

use crate::error::{Error, Result};
use crate::homalg::{self, ChainComplex};
use crate::module::{FreeModule, ModuleElement, ModuleMap, PresentedModule};
use crate::poly::Polynomial;
use crate::ring::GradedRing;
use std::sync::Arc;

/// Exterior-algebra complex on a list of homogeneous elements; a free
/// resolution of `R/(f_1, ..., f_k)` exactly when the sequence is regular.
pub struct KoszulComplex {
    ring: Arc<GradedRing>,
    elements: Vec<Polynomial>,
    complex: ChainComplex,
    /// subsets of `{0..k}` per exterior degree, each a bitmask list
    bases: Vec<Vec<u32>>,
}

impl KoszulComplex {
    pub fn new(ring: &Arc<GradedRing>, elements: Vec<Polynomial>) -> Result<Self> {
        let k = elements.len();
        let mut degs = Vec::with_capacity(k);
        for (i, f) in elements.iter().enumerate() {
            if f.ring() != ring {
                return Err(Error::RingMismatch);
            }
            match f.homogeneous_degree() {
                Ok(crate::poly::HomogeneousDegree::Degree(d)) => degs.push(d),
                _ => return Err(Error::NotHomogeneous(format!("Koszul element {i}"))),
            }
        }
        // bases[i]: bitmasks of cardinality i, ascending
        let mut bases: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
        for mask in 0u32..(1 << k) {
            bases[mask.count_ones() as usize].push(mask);
        }
        let subset_degree =
            |mask: u32| -> i64 { (0..k).filter(|j| mask >> j & 1 == 1).map(|j| degs[j]).sum() };
        let modules: Vec<Arc<FreeModule>> = bases
            .iter()
            .map(|masks| FreeModule::new(ring, masks.iter().map(|&m| subset_degree(m)).collect()))
            .collect();
        let mut maps = Vec::with_capacity(k);
        for i in 1..=k {
            let target = &modules[i - 1];
            let source = &modules[i];
            let columns = bases[i]
                .iter()
                .map(|&mask| {
                    let mut coords = vec![Polynomial::zero(ring); target.rank()];
                    for (j, element) in elements.iter().enumerate() {
                        if mask >> j & 1 == 1 {
                            let sub = mask & !(1 << j);
                            let pos = bases[i - 1].binary_search(&sub).expect("subset present");
                            coords[pos] = coords[pos].add(element)?;
                        }
                    }
                    ModuleElement::new(target, coords)
                })
                .collect::<Result<Vec<_>>>()?;
            maps.push(ModuleMap::new(source, target, columns)?);
        }
        let complex = ChainComplex::new(modules, maps)?;
        Ok(KoszulComplex {
            ring: ring.clone(),
            elements,
            complex,
            bases,
        })
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn rank(&self, i: usize) -> usize {
        self.bases[i].len()
    }

    /// Differential `d_i : Λ^i -> Λ^{i-1}` for `1 <= i <= k`.
    pub fn differential(&self, i: usize) -> &ModuleMap {
        self.complex.map(i - 1)
    }

    /// The quotient `R/(f_1,...,f_k)` presented by the row of elements.
    pub fn quotient(&self) -> PresentedModule {
        homalg::cokernel_presentation(self.differential(1))
    }

    /// Regularity via codimension: `k` homogeneous elements are a regular
    /// sequence iff the quotient has dimension `nvars - k`.
    pub fn is_regular_sequence(&self) -> Result<bool> {
        let expected = self.ring.nvars() as i64 - self.elements.len() as i64;
        Ok(homalg::dimension(&self.quotient())? == expected)
    }

    /// Image of `d_i`, presented abstractly: generators are the columns of
    /// `d_i`, relations their engine-computed syzygies.
    pub fn syzygy_module(&self, i: usize) -> Result<PresentedModule> {
        homalg::image_presentation(self.differential(i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    #[test]
    fn koszul_of_two_variables() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let kz =
            KoszulComplex::new(&r, vec![Polynomial::var(&r, 0), Polynomial::var(&r, 1)]).unwrap();
        assert_eq!(kz.rank(0), 1);
        assert_eq!(kz.rank(1), 2);
        assert_eq!(kz.rank(2), 1);
        assert!(kz.complex().composites_are_zero().unwrap());
        assert!(kz.is_regular_sequence().unwrap());
    }

    #[test]
    fn koszul_of_y_elements() {
        let r = GradedRing::standard(vec!["t1", "t2", "w"]).unwrap();
        let y1 = parse_poly(&r, "t1^2+t1*w").unwrap();
        let y2 = parse_poly(&r, "t2^2+t2*w").unwrap();
        let kz = KoszulComplex::new(&r, vec![y1.clone(), y2.clone()]).unwrap();
        assert_eq!(kz.rank(1), 2);
        // d_1 row is (y1 y2)
        let d1 = kz.differential(1);
        assert_eq!(d1.entry(0, 0), &y1);
        assert_eq!(d1.entry(0, 1), &y2);
        assert!(kz.complex().composites_are_zero().unwrap());
        assert!(kz.is_regular_sequence().unwrap());
        // dimension of R/(y1, y2) is 1
        assert_eq!(homalg::dimension(&kz.quotient()).unwrap(), 1);
    }

    #[test]
    fn not_regular_when_elements_overlap() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let t = Polynomial::var(&r, 0);
        let tw = parse_poly(&r, "t*w").unwrap();
        let kz = KoszulComplex::new(&r, vec![t, tw]).unwrap();
        assert!(!kz.is_regular_sequence().unwrap());
    }

    #[test]
    fn syzygy_module_generator_counts() {
        // K_i := im(d_{i+1}) has binomial(n, i+1) generators
        let r = GradedRing::standard(vec!["t1", "t2", "t3", "w"]).unwrap();
        let ys: Vec<Polynomial> = (0..3)
            .map(|i| parse_poly(&r, &format!("t{0}^2+t{0}*w", i + 1)).unwrap())
            .collect();
        let kz = KoszulComplex::new(&r, ys).unwrap();
        for i in 1..=3usize {
            let m = kz.syzygy_module(i).unwrap();
            assert_eq!(m.ambient().rank(), kz.rank(i), "generators of im(d_{i})");
        }
    }
}
