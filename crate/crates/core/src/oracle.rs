//! Degreewise linear algebra over GF(2).
//!
//! Every graded piece of a free module is a finite GF(2) vector space with
//! the monomial basis. Exact row reduction on those pieces gives an oracle
//! for membership, kernels, images and Hilbert functions that is independent
//! of the Gröbner code path; it certifies that engine up to a degree bound.

use crate::module::{FreeModule, ModuleElement, ModuleMap};
use crate::ring::Monomial;
use std::collections::HashMap;
use std::sync::Arc;

/// Monomial basis of the degree-`degree` piece of a free module.
pub struct DegreeBasis {
    module: Arc<FreeModule>,
    pub degree: i64,
    basis: Vec<(usize, Monomial)>,
    index: HashMap<(usize, Monomial), usize>,
}

impl DegreeBasis {
    pub fn new(module: &Arc<FreeModule>, degree: i64) -> Self {
        let ring = module.ring();
        let mut basis = Vec::new();
        for (c, &tw) in module.twists().iter().enumerate() {
            for m in ring.monomials_of_degree(degree - tw) {
                basis.push((c, m));
            }
        }
        let index = basis.iter().enumerate().map(|(i, k)| (*k, i)).collect();
        DegreeBasis {
            module: module.clone(),
            degree,
            basis,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn pairs(&self) -> &[(usize, Monomial)] {
        &self.basis
    }

    fn words(&self) -> usize {
        self.basis.len().div_ceil(64)
    }

    /// Bit vector of a homogeneous element of this degree. Terms of other
    /// degrees would indicate a grading bug and are rejected by panic.
    pub fn vector_of(&self, v: &ModuleElement) -> Vec<u64> {
        assert_eq!(v.ambient(), &self.module, "element from a different module");
        let mut bits = vec![0u64; self.words()];
        for (c, p) in v.coords().iter().enumerate() {
            for m in p.terms() {
                let i = *self
                    .index
                    .get(&(c, *m))
                    .expect("term degree does not match the graded piece");
                bits[i / 64] ^= 1 << (i % 64);
            }
        }
        bits
    }

    /// All monomial multiples of `gens` landing in this degree, as vectors.
    pub fn multiples_of(&self, gens: &[ModuleElement]) -> Vec<Vec<u64>> {
        let ring = self.module.ring();
        let mut rows = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            let d = g
                .homogeneous_degree()
                .expect("oracle expects homogeneous generators");
            for m in ring.monomials_of_degree(self.degree - d) {
                let mg = g
                    .scale(&crate::poly::Polynomial::monomial(ring, m))
                    .unwrap();
                rows.push(self.vector_of(&mg));
            }
        }
        rows
    }
}

/// Incremental GF(2) row space; rows are reduced against recorded pivots.
pub struct RowSpace {
    rows: Vec<(usize, Vec<u64>)>,
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, row: &mut [u64]) -> Option<usize> {
        for (pivot, basis_row) in &self.rows {
            if row[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (a, b) in row.iter_mut().zip(basis_row) {
                    *a ^= b;
                }
            }
        }
        row.iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Insert a row; returns true if it enlarged the span.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        match self.reduce(&mut row) {
            Some(pivot) => {
                self.rows.push((pivot, row));
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, row: &[u64]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r).is_none()
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Self {
        let mut s = RowSpace::new();
        for r in rows {
            s.insert(r);
        }
        s
    }
}

impl Default for RowSpace {
    fn default() -> Self {
        Self::new()
    }
}

/// Dimension of the degree-`d` piece of the submodule generated by `gens`.
pub fn submodule_piece_dim(module: &Arc<FreeModule>, gens: &[ModuleElement], d: i64) -> usize {
    let basis = DegreeBasis::new(module, d);
    RowSpace::from_rows(basis.multiples_of(gens)).rank()
}

/// Membership of a homogeneous element in the submodule generated by `gens`,
/// decided degreewise.
pub fn submodule_contains(
    module: &Arc<FreeModule>,
    gens: &[ModuleElement],
    v: &ModuleElement,
) -> bool {
    if v.is_zero() {
        return true;
    }
    let d = match v.homogeneous_degree() {
        Some(d) => d,
        None => return false,
    };
    let basis = DegreeBasis::new(module, d);
    let space = RowSpace::from_rows(basis.multiples_of(gens));
    space.contains(&basis.vector_of(v))
}

/// Rank of the degree-`d` piece of a module map.
pub fn map_image_dim(f: &ModuleMap, d: i64) -> usize {
    let src = DegreeBasis::new(f.source(), d);
    let tgt = DegreeBasis::new(f.target(), d);
    let ring = f.ring();
    let mut rows = Vec::with_capacity(src.dim());
    for (c, m) in src.pairs() {
        let img = f.columns()[*c]
            .scale(&crate::poly::Polynomial::monomial(ring, *m))
            .unwrap();
        rows.push(tgt.vector_of(&img));
    }
    RowSpace::from_rows(rows).rank()
}

/// Kernel dimension of the degree-`d` piece of a module map.
pub fn map_kernel_dim(f: &ModuleMap, d: i64) -> usize {
    let src = DegreeBasis::new(f.source(), d);
    src.dim() - map_image_dim(f, d)
}

/// Exactness of `g ∘ f`-style pairs at the middle module: the composite must
/// be zero and `dim ker(g)_d = dim im(f)_d` for every degree in the range.
/// `f: F2 -> F1`, `g: F1 -> F0`.
pub fn exact_at_middle(f: &ModuleMap, g: &ModuleMap, degrees: impl Iterator<Item = i64>) -> bool {
    for d in degrees {
        let im = map_image_dim(f, d);
        let ker = map_kernel_dim(g, d);
        if im != ker {
            return false;
        }
    }
    true
}

/// Graded dimension of the cokernel of `relations` inside `module`.
pub fn quotient_piece_dim(module: &Arc<FreeModule>, relations: &[ModuleElement], d: i64) -> usize {
    let basis = DegreeBasis::new(module, d);
    basis.dim() - RowSpace::from_rows(basis.multiples_of(relations)).rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::GradedRing;
    use crate::text::parse_poly;

    #[test]
    fn degree_basis_counts_monomials() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let f = crate::module::FreeModule::new(&r, vec![0, 1]);
        // degree 2: three monomials in comp 0, two in comp 1
        let b = DegreeBasis::new(&f, 2);
        assert_eq!(b.dim(), 5);
        // weighted ring
        let rg = GradedRing::new(vec!["c", "w"], vec![2, 1]).unwrap();
        let g = crate::module::FreeModule::rank_n(&rg, 1);
        // degree 4: c^2, cw^2, w^4
        assert_eq!(DegreeBasis::new(&g, 4).dim(), 3);
    }

    #[test]
    fn membership_matches_ideal_arithmetic() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let f = crate::module::FreeModule::rank_n(&r, 1);
        let gens = vec![
            ModuleElement::new(&f, vec![parse_poly(&r, "t^2+t*w").unwrap()]).unwrap(),
            ModuleElement::new(&f, vec![parse_poly(&r, "w").unwrap()]).unwrap(),
        ];
        let t3 = ModuleElement::new(&f, vec![parse_poly(&r, "t^3").unwrap()]).unwrap();
        assert!(submodule_contains(&f, &gens, &t3));
        let t = ModuleElement::new(&f, vec![parse_poly(&r, "t").unwrap()]).unwrap();
        assert!(!submodule_contains(&f, &gens, &t));
        // quotient dimensions of R/(t^2+tw, w): 1, 1, 0, 0, ...
        assert_eq!(quotient_piece_dim(&f, &gens, 0), 1);
        assert_eq!(quotient_piece_dim(&f, &gens, 1), 1);
        assert_eq!(quotient_piece_dim(&f, &gens, 2), 0);
        assert_eq!(quotient_piece_dim(&f, &gens, 5), 0);
    }

    #[test]
    fn kernel_dims_of_koszul_map() {
        // (a, b) -> at + bw: kernel is generated by (w, t), so dim ker in
        // degree d equals the number of monomials of degree d - 2
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let target = crate::module::FreeModule::rank_n(&r, 1);
        let cols = vec![
            ModuleElement::new(&target, vec![parse_poly(&r, "t").unwrap()]).unwrap(),
            ModuleElement::new(&target, vec![parse_poly(&r, "w").unwrap()]).unwrap(),
        ];
        let f = ModuleMap::from_columns(&target, cols).unwrap();
        for d in 1..7 {
            let expected = if d >= 2 { (d - 1) as usize } else { 0 };
            assert_eq!(map_kernel_dim(&f, d), expected, "degree {d}");
        }
    }
}
