//! Graded free modules, their elements, and maps between them.

use crate::error::{Error, Result};
use crate::poly::{HomogeneousDegree, Polynomial};
use crate::ring::GradedRing;
use std::sync::Arc;

/// Free module over a graded ring with one integer degree shift per basis
/// element. Basis element `i` of a module with twist `k_i` sits in degree
/// `k_i`, so an element `p·e_i` is homogeneous of degree `deg p + k_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    ring: Arc<GradedRing>,
    twists: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: &Arc<GradedRing>, twists: Vec<i64>) -> Arc<Self> {
        Arc::new(FreeModule {
            ring: ring.clone(),
            twists,
        })
    }

    pub fn rank_n(ring: &Arc<GradedRing>, rank: usize) -> Arc<Self> {
        FreeModule::new(ring, vec![0; rank])
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    /// Same module with all twists shifted by `k`.
    pub fn shifted(&self, k: i64) -> Arc<FreeModule> {
        FreeModule::new(&self.ring, self.twists.iter().map(|t| t + k).collect())
    }

    pub fn zero_element(self: &Arc<Self>) -> ModuleElement {
        ModuleElement {
            ambient: self.clone(),
            coords: vec![Polynomial::zero(&self.ring); self.rank()],
        }
    }

    pub fn basis_element(self: &Arc<Self>, i: usize) -> ModuleElement {
        let mut coords = vec![Polynomial::zero(&self.ring); self.rank()];
        coords[i] = Polynomial::one(&self.ring);
        ModuleElement {
            ambient: self.clone(),
            coords,
        }
    }
}

/// Element of a free module, stored as one polynomial per basis position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleElement {
    ambient: Arc<FreeModule>,
    coords: Vec<Polynomial>,
}

impl ModuleElement {
    pub fn new(ambient: &Arc<FreeModule>, coords: Vec<Polynomial>) -> Result<Self> {
        if coords.len() != ambient.rank() {
            return Err(Error::AmbientMismatch);
        }
        for p in &coords {
            if p.ring() != ambient.ring() {
                return Err(Error::RingMismatch);
            }
        }
        Ok(ModuleElement {
            ambient: ambient.clone(),
            coords,
        })
    }

    pub fn ambient(&self) -> &Arc<FreeModule> {
        &self.ambient
    }

    pub fn coords(&self) -> &[Polynomial] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Polynomial {
        &self.coords[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &ModuleElement) -> Result<ModuleElement> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a.add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleElement {
            ambient: self.ambient.clone(),
            coords,
        })
    }

    pub fn scale(&self, p: &Polynomial) -> Result<ModuleElement> {
        let coords = self
            .coords
            .iter()
            .map(|c| c.mul(p))
            .collect::<Result<Vec<_>>>()?;
        Ok(ModuleElement {
            ambient: self.ambient.clone(),
            coords,
        })
    }

    /// Twisted degree when every nonzero coordinate agrees; `None` otherwise
    /// or for the zero element.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degree = None;
        for (i, p) in self.coords.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            match p.homogeneous_degree() {
                Ok(HomogeneousDegree::Degree(d)) => {
                    let total = d + self.ambient.twists()[i];
                    match degree {
                        None => degree = Some(total),
                        Some(e) if e == total => {}
                        Some(_) => return None,
                    }
                }
                _ => return None,
            }
        }
        degree
    }
}

/// Degree-compatible map of graded free modules, stored column-wise: column
/// `j` is the image of source basis element `j` and must be homogeneous of
/// the source twist `j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    source: Arc<FreeModule>,
    target: Arc<FreeModule>,
    columns: Vec<ModuleElement>,
}

impl ModuleMap {
    pub fn new(
        source: &Arc<FreeModule>,
        target: &Arc<FreeModule>,
        columns: Vec<ModuleElement>,
    ) -> Result<Self> {
        if source.ring() != target.ring() {
            return Err(Error::RingMismatch);
        }
        if columns.len() != source.rank() {
            return Err(Error::InvalidInput(format!(
                "map needs {} columns, got {}",
                source.rank(),
                columns.len()
            )));
        }
        for (j, col) in columns.iter().enumerate() {
            if col.ambient() != target {
                return Err(Error::AmbientMismatch);
            }
            if !col.is_zero() {
                match col.homogeneous_degree() {
                    Some(d) if d == source.twists()[j] => {}
                    _ => {
                        return Err(Error::NotHomogeneous(format!(
                            "column {j} (expected degree {})",
                            source.twists()[j]
                        )))
                    }
                }
            }
        }
        Ok(ModuleMap {
            source: source.clone(),
            target: target.clone(),
            columns,
        })
    }

    /// Build the map from columns, deriving source twists from the columns'
    /// degrees (zero columns get twist 0).
    pub fn from_columns(target: &Arc<FreeModule>, columns: Vec<ModuleElement>) -> Result<Self> {
        let mut twists = Vec::with_capacity(columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.ambient() != target {
                return Err(Error::AmbientMismatch);
            }
            if col.is_zero() {
                twists.push(0);
            } else {
                twists.push(
                    col.homogeneous_degree()
                        .ok_or_else(|| Error::NotHomogeneous(format!("column {j}")))?,
                );
            }
        }
        let source = FreeModule::new(target.ring(), twists);
        ModuleMap::new(&source, target, columns)
    }

    pub fn zero(source: &Arc<FreeModule>, target: &Arc<FreeModule>) -> Result<Self> {
        let columns = (0..source.rank()).map(|_| target.zero_element()).collect();
        ModuleMap::new(source, target, columns)
    }

    pub fn identity(module: &Arc<FreeModule>) -> Self {
        let columns = (0..module.rank())
            .map(|i| module.basis_element(i))
            .collect();
        ModuleMap {
            source: module.clone(),
            target: module.clone(),
            columns,
        }
    }

    pub fn source(&self) -> &Arc<FreeModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FreeModule> {
        &self.target
    }

    pub fn columns(&self) -> &[ModuleElement] {
        &self.columns
    }

    pub fn entry(&self, row: usize, col: usize) -> &Polynomial {
        self.columns[col].coord(row)
    }

    pub fn apply(&self, v: &ModuleElement) -> Result<ModuleElement> {
        if v.ambient() != &self.source {
            return Err(Error::AmbientMismatch);
        }
        let mut acc = self.target.zero_element();
        for (j, p) in v.coords().iter().enumerate() {
            if !p.is_zero() {
                acc = acc.add(&self.columns[j].scale(p)?)?;
            }
        }
        Ok(acc)
    }

    /// Composite `self ∘ g` (apply `g` first).
    pub fn compose(&self, g: &ModuleMap) -> Result<ModuleMap> {
        if g.target != self.source {
            return Err(Error::AmbientMismatch);
        }
        let columns = g
            .columns
            .iter()
            .map(|c| self.apply(c))
            .collect::<Result<Vec<_>>>()?;
        ModuleMap::new(&g.source, &self.target, columns)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(|c| c.is_zero())
    }

    /// Transpose with negated twists: the dual map `Hom(-, R)`.
    pub fn dual(&self) -> ModuleMap {
        let dual_source = FreeModule::new(
            self.ring(),
            self.target.twists().iter().map(|t| -t).collect(),
        );
        let dual_target = FreeModule::new(
            self.ring(),
            self.source.twists().iter().map(|t| -t).collect(),
        );
        let columns = (0..dual_source.rank())
            .map(|r| {
                let coords = (0..dual_target.rank())
                    .map(|c| self.columns[c].coord(r).clone())
                    .collect();
                ModuleElement {
                    ambient: dual_target.clone(),
                    coords,
                }
            })
            .collect();
        ModuleMap {
            source: dual_source,
            target: dual_target,
            columns,
        }
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        self.source.ring()
    }
}

/// Finitely presented graded module, given as the cokernel of `relations`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentedModule {
    relations: ModuleMap,
}

impl PresentedModule {
    pub fn new(relations: ModuleMap) -> Self {
        PresentedModule { relations }
    }

    /// Free module presented with no relations.
    pub fn free(ambient: &Arc<FreeModule>) -> Self {
        let empty = FreeModule::new(ambient.ring(), Vec::new());
        PresentedModule {
            relations: ModuleMap::new(&empty, ambient, Vec::new()).expect("empty map"),
        }
    }

    pub fn ambient(&self) -> &Arc<FreeModule> {
        self.relations.target()
    }

    pub fn relations(&self) -> &ModuleMap {
        &self.relations
    }

    pub fn ring(&self) -> &Arc<GradedRing> {
        self.relations.ring()
    }

    /// Same module with all degrees shifted by `k`.
    pub fn shifted(&self, k: i64) -> PresentedModule {
        let target = self.ambient().shifted(k);
        let source = self.relations.source().shifted(k);
        let columns = self
            .relations
            .columns()
            .iter()
            .map(|c| ModuleElement {
                ambient: target.clone(),
                coords: c.coords().to_vec(),
            })
            .collect();
        PresentedModule {
            relations: ModuleMap {
                source,
                target,
                columns,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    #[test]
    fn homogeneity_with_twists() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let f = FreeModule::new(&r, vec![0, 1]);
        let v = ModuleElement::new(
            &f,
            vec![parse_poly(&r, "t^2").unwrap(), parse_poly(&r, "w").unwrap()],
        )
        .unwrap();
        assert_eq!(v.homogeneous_degree(), Some(2));
        let mixed = ModuleElement::new(
            &f,
            vec![parse_poly(&r, "t").unwrap(), parse_poly(&r, "w").unwrap()],
        )
        .unwrap();
        assert_eq!(mixed.homogeneous_degree(), None);
    }

    #[test]
    fn map_validation_and_apply() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let target = FreeModule::rank_n(&r, 1);
        let cols = vec![
            ModuleElement::new(&target, vec![parse_poly(&r, "t").unwrap()]).unwrap(),
            ModuleElement::new(&target, vec![parse_poly(&r, "w").unwrap()]).unwrap(),
        ];
        let f = ModuleMap::from_columns(&target, cols).unwrap();
        assert_eq!(f.source().twists(), &[1, 1]);
        let v = ModuleElement::new(
            f.source(),
            vec![parse_poly(&r, "w").unwrap(), parse_poly(&r, "t").unwrap()],
        )
        .unwrap();
        // (w, t) maps to wt + tw = 0
        assert!(f.apply(&v).unwrap().is_zero());
    }

    #[test]
    fn dual_is_transpose_with_negated_twists() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let target = FreeModule::new(&r, vec![0, 1]);
        let cols = vec![ModuleElement::new(
            &target,
            vec![parse_poly(&r, "t^2").unwrap(), parse_poly(&r, "w").unwrap()],
        )
        .unwrap()];
        let f = ModuleMap::from_columns(&target, cols).unwrap();
        let d = f.dual();
        assert_eq!(d.source().twists(), &[0, -1]);
        assert_eq!(d.target().twists(), &[-2]);
        assert_eq!(d.entry(0, 0), f.entry(0, 0));
        assert_eq!(d.entry(0, 1), f.entry(1, 0));
        // duality is degree-correct, hence constructible
        assert!(ModuleMap::new(d.source(), d.target(), d.columns().to_vec()).is_ok());
    }
}
