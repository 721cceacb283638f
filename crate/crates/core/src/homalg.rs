//! Graded module theory: kernels, presentations, minimal free resolutions,
//! Betti tables, Hilbert series, Krull dimension, Ext modules, base change.

use crate::error::{Error, Result};
use crate::groebner::{
    self, express_in_terms, kernel_generators, kernel_generators_in_order,
    reduced_groebner_basis_in,
};
use crate::module::{FreeModule, ModuleElement, ModuleMap, PresentedModule};
use crate::order::ModuleOrder;
use crate::poly::{Polynomial, RingMap};
use crate::ring::{GradedRing, Monomial};
use crate::series::{monomial_quotient_numerator, RationalSeries, ZPoly};
use std::collections::BTreeMap;
use std::sync::Arc;

/// Complex of free modules `F_0 <- F_1 <- ...`; `maps[i]` is the
/// differential `F_{i+1} -> F_i`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    modules: Vec<Arc<FreeModule>>,
    maps: Vec<ModuleMap>,
}

impl ChainComplex {
    pub fn new(modules: Vec<Arc<FreeModule>>, maps: Vec<ModuleMap>) -> Result<Self> {
        if modules.is_empty() || maps.len() + 1 != modules.len() {
            return Err(Error::InvalidInput("complex shape mismatch".into()));
        }
        for (i, f) in maps.iter().enumerate() {
            if f.target() != &modules[i] || f.source() != &modules[i + 1] {
                return Err(Error::InvalidInput(format!(
                    "differential {i} has wrong endpoints"
                )));
            }
        }
        Ok(ChainComplex { modules, maps })
    }

    pub fn length(&self) -> usize {
        self.maps.len()
    }

    pub fn modules(&self) -> &[Arc<FreeModule>] {
        &self.modules
    }

    pub fn module(&self, i: usize) -> &Arc<FreeModule> {
        &self.modules[i]
    }

    pub fn maps(&self) -> &[ModuleMap] {
        &self.maps
    }

    pub fn map(&self, i: usize) -> &ModuleMap {
        &self.maps[i]
    }

    /// Structural d∘d = 0 check, exact.
    pub fn composites_are_zero(&self) -> Result<bool> {
        for i in 0..self.maps.len().saturating_sub(1) {
            let comp = self.maps[i].compose(&self.maps[i + 1])?;
            if !comp.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Betti numbers: (homological index, internal degree) -> rank.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, i64), usize>,
}

impl BettiTable {
    pub fn from_complex(complex: &ChainComplex) -> Self {
        let mut entries = BTreeMap::new();
        for (i, module) in complex.modules().iter().enumerate() {
            for &t in module.twists() {
                *entries.entry((i, t)).or_insert(0) += 1;
            }
        }
        BettiTable { entries }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, i64), usize)> + '_ {
        self.entries.iter().map(|(k, v)| (*k, *v))
    }

    pub fn get(&self, i: usize, degree: i64) -> usize {
        self.entries.get(&(i, degree)).copied().unwrap_or(0)
    }

    /// Total Betti number at homological index `i`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((h, _), _)| *h == i)
            .map(|(_, v)| v)
            .sum()
    }
}

/// Minimal free resolution with its Betti table.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub complex: ChainComplex,
    pub betti: BettiTable,
}

impl Resolution {
    /// Projective dimension: index of the last nonzero free module.
    pub fn length(&self) -> usize {
        self.complex.length()
    }
}

// ---------------------------------------------------------------------------
// basic constructions

/// Presentation of the cokernel of a map: the module it surjects onto.
pub fn cokernel_presentation(f: &ModuleMap) -> PresentedModule {
    PresentedModule::new(f.clone())
}

/// Kernel of a module map, as generators plus their inclusion.
pub struct KernelModule {
    /// Abstract presentation of the kernel.
    pub module: PresentedModule,
    /// Inclusion of the kernel into the source of the original map; its
    /// columns are the kernel generators.
    pub inclusion: ModuleMap,
}

/// Kernel generators of `f`, certified to generate by Schreyer's theorem.
pub fn kernel(f: &ModuleMap) -> Result<Vec<ModuleElement>> {
    kernel_generators(f)
}

/// Kernel of `f` presented abstractly: ambient free on the kernel
/// generators, relations = their syzygies.
pub fn kernel_module(f: &ModuleMap) -> Result<KernelModule> {
    let gens = kernel_generators(f)?;
    let inclusion = ModuleMap::from_columns(f.source(), gens.clone())?;
    let ambient = inclusion.source().clone();
    let relations = if gens.is_empty() {
        ModuleMap::zero(&FreeModule::new(f.ring(), Vec::new()), &ambient)?
    } else {
        let syz = groebner::syzygy_generators(f.source(), ModuleOrder::Top, &gens)?;
        let syz = syz
            .into_iter()
            .map(|s| ModuleElement::new(&ambient, s.coords().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        ModuleMap::from_columns(&ambient, syz)?
    };
    Ok(KernelModule {
        module: PresentedModule::new(relations),
        inclusion,
    })
}

/// Image of a map presented abstractly: the ambient is free on the columns,
/// the relations are their syzygies.
pub fn image_presentation(f: &ModuleMap) -> Result<PresentedModule> {
    let gens: Vec<ModuleElement> = f.columns().to_vec();
    let ambient = f.source().clone();
    let relations = if gens.is_empty() {
        ModuleMap::zero(&FreeModule::new(f.ring(), Vec::new()), &ambient)?
    } else {
        let syz = groebner::syzygy_generators(f.target(), ModuleOrder::Top, &gens)?;
        let syz = syz
            .into_iter()
            .map(|s| ModuleElement::new(&ambient, s.coords().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        ModuleMap::from_columns(&ambient, syz)?
    };
    Ok(PresentedModule::new(relations))
}

/// Direct sum of presented modules with degree shifts applied.
pub fn module_assemble(parts: &[(PresentedModule, i64)]) -> Result<PresentedModule> {
    let ring = match parts.first() {
        Some((m, _)) => m.ring().clone(),
        None => return Err(Error::InvalidInput("empty direct sum".into())),
    };
    let mut amb_twists = Vec::new();
    let mut rel_twists = Vec::new();
    for (m, shift) in parts {
        if m.ring() != &ring {
            return Err(Error::RingMismatch);
        }
        amb_twists.extend(m.ambient().twists().iter().map(|t| t + shift));
        rel_twists.extend(m.relations().source().twists().iter().map(|t| t + shift));
    }
    let ambient = FreeModule::new(&ring, amb_twists);
    let source = FreeModule::new(&ring, rel_twists);
    let mut columns = Vec::new();
    let mut row_offset = 0usize;
    for (m, _) in parts {
        for col in m.relations().columns() {
            let mut coords = vec![Polynomial::zero(&ring); ambient.rank()];
            for (r, p) in col.coords().iter().enumerate() {
                coords[row_offset + r] = p.clone();
            }
            columns.push(ModuleElement::new(&ambient, coords)?);
        }
        row_offset += m.ambient().rank();
    }
    Ok(PresentedModule::new(ModuleMap::new(
        &source, &ambient, columns,
    )?))
}

/// Extension of scalars along a graded ring map: relation entries are mapped
/// through `phi`, ambient twists are preserved.
pub fn base_change(m: &PresentedModule, phi: &RingMap) -> Result<PresentedModule> {
    if m.ring() != phi.source() {
        return Err(Error::RingMismatch);
    }
    let ambient = FreeModule::new(phi.target(), m.ambient().twists().to_vec());
    let source = FreeModule::new(phi.target(), m.relations().source().twists().to_vec());
    let columns = m
        .relations()
        .columns()
        .iter()
        .map(|col| {
            let coords = col
                .coords()
                .iter()
                .map(|p| phi.apply(p))
                .collect::<Result<Vec<_>>>()?;
            ModuleElement::new(&ambient, coords)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PresentedModule::new(ModuleMap::new(
        &source, &ambient, columns,
    )?))
}

// ---------------------------------------------------------------------------
// minimal free resolutions

/// Column-major working matrix for minimalization.
struct WorkMat {
    ring: Arc<GradedRing>,
    row_twists: Vec<i64>,
    col_twists: Vec<i64>,
    /// cols[c][r]
    cols: Vec<Vec<Polynomial>>,
}

impl WorkMat {
    fn from_map(f: &ModuleMap) -> Self {
        WorkMat {
            ring: f.ring().clone(),
            row_twists: f.target().twists().to_vec(),
            col_twists: f.source().twists().to_vec(),
            cols: f.columns().iter().map(|c| c.coords().to_vec()).collect(),
        }
    }

    fn to_map(&self) -> ModuleMap {
        let target = FreeModule::new(&self.ring, self.row_twists.clone());
        let source = FreeModule::new(&self.ring, self.col_twists.clone());
        let columns = self
            .cols
            .iter()
            .map(|coords| ModuleElement::new(&target, coords.clone()).expect("consistent matrix"))
            .collect();
        ModuleMap::new(&source, &target, columns).expect("homogeneous matrix")
    }

    fn find_unit(&self) -> Option<(usize, usize)> {
        for (c, col) in self.cols.iter().enumerate() {
            for (r, p) in col.iter().enumerate() {
                if p.is_unit() {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Drop zero columns (vacuous relations).
    fn drop_zero_columns(&mut self) {
        let mut keep_cols = Vec::new();
        let mut keep_twists = Vec::new();
        for (c, col) in self.cols.drain(..).enumerate() {
            if col.iter().any(|p| !p.is_zero()) {
                keep_cols.push(col);
                keep_twists.push(self.col_twists[c]);
            }
        }
        self.cols = keep_cols;
        self.col_twists = keep_twists;
    }
}

/// Cancel one unit entry of `a` at (r0, c0): basis elements c0 of the source
/// and r0 of the target are split off. `prev` is the previous differential
/// (source = target of `a`); it loses column r0.
fn cancel_unit(a: &mut WorkMat, prev: Option<&mut WorkMat>, r0: usize, c0: usize) {
    // clear row r0 using column c0
    let pivot_col = a.cols[c0].clone();
    for c in 0..a.cols.len() {
        if c == c0 {
            continue;
        }
        let q = a.cols[c][r0].clone();
        if q.is_zero() {
            continue;
        }
        for (r, pivot_entry) in pivot_col.iter().enumerate() {
            let add = pivot_entry.mul(&q).expect("same ring");
            a.cols[c][r] = a.cols[c][r].add(&add).expect("same ring");
        }
    }
    // the row ops clearing column c0 only affect row r0 of other columns,
    // which is already zero; both the pivot row and column can be deleted
    for col in &mut a.cols {
        col.remove(r0);
    }
    a.row_twists.remove(r0);
    a.cols.remove(c0);
    a.col_twists.remove(c0);
    if let Some(b) = prev {
        b.cols.remove(r0);
        b.col_twists.remove(r0);
    }
}

fn minimalize_pair(a: &mut WorkMat, mut prev: Option<&mut WorkMat>) {
    while let Some((r0, c0)) = a.find_unit() {
        cancel_unit(a, prev.as_deref_mut(), r0, c0);
    }
    a.drop_zero_columns();
}

/// Minimal presentation: same module, no unit entries in the relation
/// matrix, no zero relations.
pub fn minimal_presentation(m: &PresentedModule) -> PresentedModule {
    let mut mat = WorkMat::from_map(m.relations());
    minimalize_pair(&mut mat, None);
    PresentedModule::new(mat.to_map())
}

/// A module is free exactly when its minimal presentation has no relations.
pub fn is_free(m: &PresentedModule) -> bool {
    minimal_presentation(m).relations().columns().is_empty()
}

/// Minimal free resolution of a finitely presented graded module.
///
/// Kernels are computed by Schreyer's construction with the induced orders
/// threaded through the steps; every step is minimalized by unit
/// cancellation, so the Betti numbers can be read off the twists. The length
/// is capped by the Hilbert syzygy theorem; exceeding `max_length` reports
/// an internal error.
pub fn minimal_free_resolution(
    m: &PresentedModule,
    max_length: Option<usize>,
) -> Result<Resolution> {
    let key_material = format!(
        "{}|max:{:?}",
        crate::text::render_module_file(m),
        max_length
    );
    let key = crate::cache::content_key("res", &key_material);
    if let Some(payload) = crate::cache::global_get("res", &key) {
        if let Ok(res) = crate::text::parse_resolution(&payload) {
            return Ok(res);
        }
    }
    let res = minimal_free_resolution_uncached(m, max_length)?;
    crate::cache::global_put("res", &key, &crate::text::render_resolution(&res));
    Ok(res)
}

fn minimal_free_resolution_uncached(
    m: &PresentedModule,
    max_length: Option<usize>,
) -> Result<Resolution> {
    let nvars = m.ring().nvars();
    let cap = max_length.unwrap_or(nvars + 1);
    let mut d1 = WorkMat::from_map(m.relations());
    minimalize_pair(&mut d1, None);

    let mut mats: Vec<WorkMat> = Vec::new();
    if !d1.cols.is_empty() {
        mats.push(d1);
        // order on the target of the differential whose kernel comes next;
        // F_{i} is final once the pair (d_{i+1}, d_i) has been minimalized,
        // so the Schreyer order is derived only at that point
        let mut target_order = ModuleOrder::Top;
        loop {
            let last = mats.last().unwrap().to_map();
            let gens = kernel_generators_in_order(&last, &target_order)?;
            if gens.iter().all(|g| g.is_zero()) {
                break;
            }
            let inclusion = ModuleMap::from_columns(last.source(), gens)?;
            let mut next = WorkMat::from_map(&inclusion);
            {
                let prev = mats.last_mut().unwrap();
                minimalize_pair(&mut next, Some(prev));
            }
            if next.cols.is_empty() {
                break;
            }
            let finalized = mats.last().unwrap().to_map();
            target_order = groebner::schreyer_order_of(&finalized, &target_order);
            mats.push(next);
            if mats.len() > cap {
                return Err(Error::Internal(format!(
                    "resolution exceeded length {cap}; the Hilbert syzygy bound is {nvars}"
                )));
            }
        }
    } else {
        // free module: resolution is F_0 alone
        let ambient = FreeModule::new(m.ring(), d1.row_twists.clone());
        let complex = ChainComplex::new(vec![ambient], Vec::new())?;
        let betti = BettiTable::from_complex(&complex);
        return Ok(Resolution { complex, betti });
    }

    let maps: Vec<ModuleMap> = mats.iter().map(|w| w.to_map()).collect();
    let mut modules = vec![maps[0].target().clone()];
    for f in &maps {
        modules.push(f.source().clone());
    }
    // the last kernel was zero, so the final free module in `modules` is the
    // last source; the complex ends there
    let complex = ChainComplex::new(modules, maps)?;
    let betti = BettiTable::from_complex(&complex);
    Ok(Resolution { complex, betti })
}

// ---------------------------------------------------------------------------
// Hilbert series and dimension

/// Initial data of the relation submodule: minimal monomial generators per
/// ambient component.
fn initial_data(m: &PresentedModule) -> Result<Vec<Vec<Monomial>>> {
    let ambient = m.ambient();
    let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); ambient.rank()];
    let rels: Vec<ModuleElement> = m
        .relations()
        .columns()
        .iter()
        .filter(|c| !c.is_zero())
        .cloned()
        .collect();
    if rels.is_empty() {
        return Ok(per_comp);
    }
    let gb = reduced_groebner_basis_in(ambient, &rels)?;
    for (mono, comp) in groebner::initial_module(&gb) {
        per_comp[comp].push(mono);
    }
    Ok(per_comp)
}

/// Hilbert series of the graded dimension function, computed from the
/// initial module of the relations; exact and canonical.
pub fn hilbert_series(m: &PresentedModule) -> Result<RationalSeries> {
    let ring = m.ring();
    if m.ambient().rank() == 0 {
        return Ok(RationalSeries::zero());
    }
    let init = initial_data(m)?;
    let mut num = ZPoly::zero();
    for (c, gens) in init.iter().enumerate() {
        let k = monomial_quotient_numerator(ring, gens);
        num = num.add(&k.shift(m.ambient().twists()[c]));
    }
    RationalSeries::new(num, ring.var_degrees().to_vec())
}

/// Krull dimension of a monomial quotient `R/I`: the largest coordinate
/// subspace missing every generator's support. `-1` for the zero module.
fn monomial_quotient_dim(ring: &GradedRing, gens: &[Monomial]) -> i64 {
    if gens.iter().any(|g| g.is_one()) {
        return -1;
    }
    let n = ring.nvars();
    let supports: Vec<u32> = gens
        .iter()
        .map(|g| g.support().fold(0u32, |acc, v| acc | (1 << v)))
        .collect();
    let mut best: i64 = 0;
    for mask in 0u32..(1 << n) {
        if supports.iter().any(|s| s & mask == *s) {
            continue;
        }
        best = best.max(mask.count_ones() as i64);
    }
    best
}

/// Krull dimension of the support, via the initial module. The zero module
/// has dimension -1 by convention.
pub fn dimension(m: &PresentedModule) -> Result<i64> {
    if m.ambient().rank() == 0 {
        return Ok(-1);
    }
    let init = initial_data(m)?;
    let mut dim = -1i64;
    for gens in &init {
        dim = dim.max(monomial_quotient_dim(m.ring(), gens));
    }
    Ok(dim)
}

// ---------------------------------------------------------------------------
// Ext modules

/// `Ext^i(M, R)` for `1 <= i <= i_max`, each returned as a presented module.
/// Indices past the variable count vanish identically (the projective
/// dimension is capped by the variable count), so those entries come back
/// as zero modules without further computation.
pub fn ext_modules(m: &PresentedModule, i_max: usize) -> Result<Vec<PresentedModule>> {
    let nvars = m.ring().nvars();
    let res = minimal_free_resolution(m, None)?;
    let mut out = Vec::with_capacity(i_max);
    for i in 1..=i_max.min(nvars) {
        out.push(ext_at(&res, i)?);
    }
    while out.len() < i_max {
        out.push(zero_module(m.ring()));
    }
    Ok(out)
}

fn ext_at(res: &Resolution, i: usize) -> Result<PresentedModule> {
    let ring = res.complex.module(0).ring().clone();
    let p = res.complex.length();
    if i > p {
        return Ok(zero_module(&ring));
    }
    // duals: d_i^T : F_{i-1}^* -> F_i^*, d_{i+1}^T : F_i^* -> F_{i+1}^*
    let d_i_dual = res.complex.map(i - 1).dual();
    let ker_gens: Vec<ModuleElement> = if i < p {
        let d_next_dual = res.complex.map(i).dual();
        kernel_generators(&d_next_dual)?
    } else {
        let f = d_i_dual.target().clone();
        (0..f.rank()).map(|k| f.basis_element(k)).collect()
    };
    if ker_gens.is_empty() {
        return Ok(zero_module(&ring));
    }
    let ambient_dual = d_i_dual.target().clone();
    let ext_ambient_map = ModuleMap::from_columns(&ambient_dual, ker_gens.clone())?;
    let ext_ambient = ext_ambient_map.source().clone();

    // relations: syzygies of the kernel generators, plus the image of d_i^T
    // expressed in those generators
    let mut rel_cols: Vec<ModuleElement> = Vec::new();
    let syz = groebner::syzygy_generators(&ambient_dual, ModuleOrder::Top, &ker_gens)?;
    for s in syz {
        rel_cols.push(ModuleElement::new(&ext_ambient, s.coords().to_vec())?);
    }
    for col in d_i_dual.columns() {
        if col.is_zero() {
            continue;
        }
        let coeffs = express_in_terms(&ker_gens, col)?.ok_or_else(|| {
            Error::Internal("image of the dualized differential escapes the kernel".into())
        })?;
        rel_cols.push(ModuleElement::new(&ext_ambient, coeffs)?);
    }
    let relations = ModuleMap::from_columns(&ext_ambient, rel_cols)?;
    Ok(minimal_presentation(&PresentedModule::new(relations)))
}

pub fn zero_module(ring: &Arc<GradedRing>) -> PresentedModule {
    PresentedModule::free(&FreeModule::new(ring, Vec::new()))
}
