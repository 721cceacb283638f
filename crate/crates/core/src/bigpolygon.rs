//! The equivariant-cohomology module of big polygon spaces.
//!
//! Over `R = GF(2)[t_1..t_n, w]`, the inclusion of the complement induces a
//! map `iota` between free modules indexed by short subsets (source) and all
//! subsets (target), with `V_J -> V_J` and `W_J -> sum_{j not in J}
//! y_j^b V_{J+j}` for `y_j = t_j(t_j + w)`. The module of interest is the
//! direct sum of the cokernel and the kernel of `iota` (the duality sequence
//! splits), and for equilateral `n = 2m+1` its syzygy order is exactly `m`.
//!
//! Homological dimensions are converted to internal twists by negation with
//! the global offset `n·d`, so the generator over the full subset sits in
//! degree zero; the kernel summand is shifted one step below the cokernel
//! summand.

use crate::error::{Error, Result};
use crate::homalg::{self, hilbert_series, kernel_module, module_assemble, KernelModule};
use crate::koszul::KoszulComplex;
use crate::module::{FreeModule, ModuleElement, ModuleMap, PresentedModule};
use crate::poly::Polynomial;
use crate::ring::GradedRing;
use crate::series::RationalSeries;
use crate::syzygy::{self, SyzygyAnalysis, SyzygyOrder};
use serde::Serialize;
use std::sync::Arc;

/// Positive rational edge length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Length {
    num: u64,
    den: u64,
}

impl Length {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::InvalidInput("lengths must be positive".into()));
        }
        let g = gcd(num, den);
        Ok(Length {
            num: num / g,
            den: den / g,
        })
    }

    pub fn one() -> Self {
        Length { num: 1, den: 1 }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::InvalidInput(format!("bad length `{s}`"));
        match s.split_once('/') {
            Some((a, b)) => Length::new(
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ),
            None => Length::new(s.trim().parse().map_err(|_| bad())?, 1),
        }
    }
}

impl std::fmt::Display for Length {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exact sum of lengths as a reduced fraction over u128.
fn sum_lengths(ls: impl Iterator<Item = Length>) -> Result<(u128, u128)> {
    let mut num: u128 = 0;
    let mut den: u128 = 1;
    for l in ls {
        let (ln, ld) = (l.num as u128, l.den as u128);
        num = num
            .checked_mul(ld)
            .and_then(|x| x.checked_add(ln.checked_mul(den)?))
            .ok_or_else(|| Error::InvalidInput("length sum overflow".into()))?;
        den = den
            .checked_mul(ld)
            .ok_or_else(|| Error::InvalidInput("length sum overflow".into()))?;
        let g = gcd128(num, den);
        num /= g;
        den /= g;
    }
    Ok((num, den))
}

fn gcd128(a: u128, b: u128) -> u128 {
    if b == 0 {
        a.max(1)
    } else {
        gcd128(b, a % b)
    }
}

/// Configuration of a big polygon space `X_{a,b}(l)`.
#[derive(Debug, Clone)]
pub struct PolygonConfig {
    pub n: usize,
    pub a: u32,
    pub b: u32,
    pub lengths: Vec<Length>,
}

impl PolygonConfig {
    pub fn new(n: usize, a: u32, b: u32, lengths: Option<Vec<Length>>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidInput("n must be at least 1".into()));
        }
        if n + 1 > crate::ring::MAX_VARS {
            return Err(Error::TooManyVariables(n + 1));
        }
        if a < 1 || b < 1 {
            return Err(Error::InvalidInput("a and b must be positive".into()));
        }
        let lengths = lengths.unwrap_or_else(|| vec![Length::one(); n]);
        if lengths.len() != n {
            return Err(Error::InvalidInput(format!("expected {n} lengths")));
        }
        let cfg = PolygonConfig { n, a, b, lengths };
        // genericity: no subset weighs exactly half
        for mask in 0u32..(1 << n) {
            if cfg.cmp_halves(mask)? == std::cmp::Ordering::Equal {
                return Err(Error::InvalidInput(format!(
                    "lengths are not generic: subset {mask:#b} has half the total length"
                )));
            }
        }
        Ok(cfg)
    }

    pub fn equilateral(n: usize, a: u32, b: u32) -> Result<Self> {
        PolygonConfig::new(n, a, b, None)
    }

    /// Sphere dimension `d = 2a + 2b - 1`.
    pub fn d(&self) -> i64 {
        2 * self.a as i64 + 2 * self.b as i64 - 1
    }

    /// Fixed-sphere dimension `2a - 1`.
    pub fn d_bar(&self) -> i64 {
        2 * self.a as i64 - 1
    }

    /// `m = (n-1)/2` for odd n.
    pub fn m(&self) -> usize {
        (self.n - 1) / 2
    }

    pub fn is_equilateral(&self) -> bool {
        self.lengths.iter().all(|l| *l == self.lengths[0])
    }

    fn cmp_halves(&self, mask: u32) -> Result<std::cmp::Ordering> {
        let inside = sum_lengths(
            (0..self.n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| self.lengths[i]),
        )?;
        let outside = sum_lengths(
            (0..self.n)
                .filter(|i| mask >> i & 1 == 0)
                .map(|i| self.lengths[i]),
        )?;
        // inside.0/inside.1 vs outside.0/outside.1
        let lhs = inside
            .0
            .checked_mul(outside.1)
            .ok_or_else(|| Error::InvalidInput("length overflow".into()))?;
        let rhs = outside
            .0
            .checked_mul(inside.1)
            .ok_or_else(|| Error::InvalidInput("length overflow".into()))?;
        Ok(lhs.cmp(&rhs))
    }

    /// `J` is short when its length is less than the complement's.
    pub fn is_short(&self, mask: u32) -> bool {
        matches!(self.cmp_halves(mask), Ok(std::cmp::Ordering::Less))
    }

    pub fn short_subsets(&self) -> Vec<u32> {
        let mut shorts: Vec<u32> = (0u32..(1 << self.n))
            .filter(|&m| self.is_short(m))
            .collect();
        shorts.sort_by_key(|&m| (m.count_ones(), m));
        shorts
    }

    pub fn all_subsets(&self) -> Vec<u32> {
        let mut subs: Vec<u32> = (0u32..(1 << self.n)).collect();
        subs.sort_by_key(|&m| (m.count_ones(), m));
        subs
    }

    /// Ambient coefficient ring `GF(2)[t_1..t_n, w]`.
    pub fn ring(&self) -> Result<Arc<GradedRing>> {
        let mut vars: Vec<String> = (1..=self.n).map(|i| format!("t{i}")).collect();
        vars.push("w".into());
        GradedRing::standard(vars)
    }

    /// `y_j^b` with `y_j = t_j(t_j + w)`, 0-indexed.
    pub fn y_power(&self, ring: &Arc<GradedRing>, j: usize) -> Polynomial {
        let t = Polynomial::var(ring, j);
        let w = Polynomial::var(ring, self.n);
        let y = t.mul(&t.add(&w).expect("same ring")).expect("same ring");
        y.pow(self.b)
    }
}

/// The map `iota` together with the bookkeeping of its bases.
pub struct IotaMap {
    pub config: PolygonConfig,
    pub ring: Arc<GradedRing>,
    pub map: ModuleMap,
    /// target components: all subsets, sorted by (size, mask)
    pub target_subsets: Vec<u32>,
    /// source components: V over short subsets, then W over short subsets
    pub short_subsets: Vec<u32>,
}

/// Build `iota` from the short-subset bases onto the full-subset basis.
pub fn build_iota(cfg: &PolygonConfig) -> Result<IotaMap> {
    let ring = cfg.ring()?;
    let d = cfg.d();
    let d_bar = cfg.d_bar();
    let n = cfg.n;
    let target_subsets = cfg.all_subsets();
    let shorts = cfg.short_subsets();

    let target_twists: Vec<i64> = target_subsets
        .iter()
        .map(|m| (n as i64 - m.count_ones() as i64) * d)
        .collect();
    let target = FreeModule::new(&ring, target_twists);
    let pos_of = |mask: u32| -> usize {
        target_subsets
            .iter()
            .position(|&x| x == mask)
            .expect("subset present")
    };

    let mut source_twists = Vec::with_capacity(2 * shorts.len());
    let mut columns = Vec::with_capacity(2 * shorts.len());
    // V block: V_J -> V_J
    for &j_mask in &shorts {
        let size = j_mask.count_ones() as i64;
        source_twists.push((n as i64 - size) * d);
        columns.push(target.basis_element(pos_of(j_mask)));
    }
    // W block: W_J -> sum_{j not in J} y_j^b V_{J+j}
    for &j_mask in &shorts {
        let size = j_mask.count_ones() as i64;
        source_twists.push((n as i64 - size) * d - d_bar);
        let mut coords = vec![Polynomial::zero(&ring); target.rank()];
        for j in 0..n {
            if j_mask >> j & 1 == 0 {
                let up = j_mask | (1 << j);
                let pos = pos_of(up);
                coords[pos] = coords[pos].add(&cfg.y_power(&ring, j))?;
            }
        }
        columns.push(ModuleElement::new(&target, coords)?);
    }
    let source = FreeModule::new(&ring, source_twists);
    let map = ModuleMap::new(&source, &target, columns)?;
    Ok(IotaMap {
        config: cfg.clone(),
        ring,
        map,
        target_subsets,
        short_subsets: shorts,
    })
}

/// The equivariant-cohomology module: cokernel plus kernel of `iota`, the
/// kernel summand shifted one degree below the cokernel summand.
pub struct BigPolygonModule {
    pub iota: IotaMap,
    pub kernel: KernelModule,
    pub cokernel: PresentedModule,
    pub module: PresentedModule,
}

pub fn bigpolygon_module(cfg: &PolygonConfig) -> Result<BigPolygonModule> {
    let iota = build_iota(cfg)?;
    let kernel = kernel_module(&iota.map)?;
    let cokernel = homalg::cokernel_presentation(&iota.map);
    let module = module_assemble(&[(cokernel.clone(), 0), (kernel.module.clone(), -1)])?;
    Ok(BigPolygonModule {
        iota,
        kernel,
        cokernel,
        module,
    })
}

/// Certificate of the main syzygy-order verification.
#[derive(Debug, Clone, Serialize)]
pub struct SyzygyTheoremCertificate {
    pub n: usize,
    pub m: usize,
    pub a: u32,
    pub b: u32,
    pub analysis: SyzygyAnalysis,
    pub is_mth: bool,
    pub is_m_plus_first: bool,
    pub expected_order: usize,
    pub passed: bool,
}

/// Verify that the equilateral big polygon module for `n = 2m+1` is an m-th
/// but not an (m+1)-st syzygy.
pub fn verify_syzygy_theorem(m: usize, b: u32, a: u32) -> Result<SyzygyTheoremCertificate> {
    if m < 1 {
        return Err(Error::InvalidInput("the theorem needs m >= 1".into()));
    }
    let n = 2 * m + 1;
    let cfg = PolygonConfig::equilateral(n, a, b)?;
    let bp = bigpolygon_module(&cfg)?;
    let analysis = syzygy::analyze(&bp.module)?;
    let is_mth = syzygy::is_jth_syzygy(&bp.module, m)?;
    let is_m_plus_first = syzygy::is_jth_syzygy(&bp.module, m + 1)?;
    let passed = analysis.syzygy_order == SyzygyOrder::Finite(m) && is_mth && !is_m_plus_first;
    Ok(SyzygyTheoremCertificate {
        n,
        m,
        a,
        b,
        analysis,
        is_mth,
        is_m_plus_first,
        expected_order: m,
        passed,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesMatch {
    pub part: String,
    pub computed: String,
    pub claimed: String,
    /// extra shift applied to the Koszul summand to match; 0 means the
    /// stated twist is exact
    pub fitted_offset: i64,
    pub matches: bool,
}

/// Certificate of the structural kernel/cokernel decomposition: Hilbert
/// series of the computed kernel and cokernel against the stated
/// free-plus-twisted-Koszul-syzygy decompositions, with fitted offsets
/// reported rather than silently corrected.
#[derive(Debug, Clone, Serialize)]
pub struct DecompositionCertificate {
    pub n: usize,
    pub m: usize,
    pub a: u32,
    pub b: u32,
    pub kernel: SeriesMatch,
    pub cokernel: SeriesMatch,
    pub kernel_free_generators: usize,
    pub cokernel_free_generators: usize,
    pub regular_sequence: bool,
    pub passed: bool,
}

pub fn structural_decomposition_check(cfg: &PolygonConfig) -> Result<DecompositionCertificate> {
    if cfg.n.is_multiple_of(2) || !cfg.is_equilateral() {
        return Err(Error::InvalidInput(
            "the decomposition is stated for equilateral odd n".into(),
        ));
    }
    let m = cfg.m();
    if m < 1 {
        return Err(Error::InvalidInput("the decomposition needs m >= 1".into()));
    }
    let n = cfg.n;
    let d = cfg.d();
    let d_bar = cfg.d_bar();
    let deg_y = 2 * cfg.b as i64;
    let bp = bigpolygon_module(cfg)?;
    let ring = bp.iota.ring.clone();
    let ring_series = RationalSeries::free_ring(&ring);

    let kz = KoszulComplex::new(&ring, (0..n).map(|j| cfg.y_power(&ring, j)).collect())?;
    let regular_sequence = kz.is_regular_sequence().unwrap_or(false);
    // normalized Koszul syzygy series: generators moved to degree 0
    let k_series = |i: usize| -> Result<RationalSeries> {
        Ok(hilbert_series(&kz.syzygy_module(i)?)?.shifted(-(i as i64) * deg_y))
    };

    // kernel: frees over |J| < m at (n-|J|)d - d_bar, plus K_{m+2} at
    // (m+1)d - d_bar + 2 in this grading
    let ker_computed = hilbert_series(&bp.kernel.module)?;
    let mut ker_free = RationalSeries::zero();
    let mut kernel_free_generators = 0usize;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size < m {
            kernel_free_generators += 1;
            ker_free = ker_free.add(&ring_series.shifted((n as i64 - size as i64) * d - d_bar));
        }
    }
    let ker_koszul_claimed_shift = (m as i64 + 1) * d - d_bar + 2;
    let kernel_match = fit_summand(
        "kernel",
        &ker_computed,
        &ker_free,
        &k_series(m + 2)?,
        ker_koszul_claimed_shift,
    );

    // cokernel: frees over |J| > m+1 at (n-|J|)d, plus K_m at m·d
    let coker_computed = hilbert_series(&bp.cokernel)?;
    let mut coker_free = RationalSeries::zero();
    let mut cokernel_free_generators = 0usize;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size > m + 1 {
            cokernel_free_generators += 1;
            coker_free = coker_free.add(&ring_series.shifted((n as i64 - size as i64) * d));
        }
    }
    let coker_koszul_claimed_shift = m as i64 * d;
    let cokernel_match = fit_summand(
        "cokernel",
        &coker_computed,
        &coker_free,
        &k_series(m)?,
        coker_koszul_claimed_shift,
    );

    let passed = kernel_match.matches && cokernel_match.matches && regular_sequence;
    Ok(DecompositionCertificate {
        n,
        m,
        a: cfg.a,
        b: cfg.b,
        kernel: kernel_match,
        cokernel: cokernel_match,
        kernel_free_generators,
        cokernel_free_generators,
        regular_sequence,
        passed,
    })
}

/// Match `computed = free + s^{claimed_shift + offset} * koszul`, fitting the
/// offset from the valuations when the stated shift does not hold exactly.
fn fit_summand(
    part: &str,
    computed: &RationalSeries,
    free: &RationalSeries,
    koszul_normalized: &RationalSeries,
    claimed_shift: i64,
) -> SeriesMatch {
    let remainder = computed.sub(free);
    let claimed = free.add(&koszul_normalized.shifted(claimed_shift));
    let mut fitted_offset = 0i64;
    let matches = if remainder.is_zero() && koszul_normalized.is_zero() {
        true
    } else if remainder.is_zero() || koszul_normalized.is_zero() {
        false
    } else if remainder.eq_series(&koszul_normalized.shifted(claimed_shift)) {
        true
    } else {
        match (remainder.valuation(), koszul_normalized.valuation()) {
            (Some(rv), Some(kv)) => {
                let shift = rv - kv;
                fitted_offset = shift - claimed_shift;
                remainder.eq_series(&koszul_normalized.shifted(shift))
            }
            _ => false,
        }
    };
    SeriesMatch {
        part: part.to_string(),
        computed: computed.to_string(),
        claimed: claimed.to_string(),
        fitted_offset,
        matches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::text::render_element;

    #[test]
    fn shortness_for_equilateral_odd_n() {
        for m in 1..=2usize {
            let n = 2 * m + 1;
            let cfg = PolygonConfig::equilateral(n, 1, 1).unwrap();
            for mask in 0u32..(1 << n) {
                assert_eq!(
                    cfg.is_short(mask),
                    (mask.count_ones() as usize) <= m,
                    "n={n} mask={mask:#b}"
                );
            }
        }
    }

    #[test]
    fn genericity_rejects_balanced_lengths() {
        let lengths = vec![
            Length::new(1, 1).unwrap(),
            Length::new(1, 1).unwrap(),
            Length::new(2, 1).unwrap(),
        ];
        assert!(PolygonConfig::new(3, 1, 1, Some(lengths)).is_err());
        // generic non-equilateral is fine
        let lengths = vec![
            Length::new(1, 1).unwrap(),
            Length::new(1, 2).unwrap(),
            Length::new(2, 1).unwrap(),
        ];
        let cfg = PolygonConfig::new(3, 1, 1, Some(lengths)).unwrap();
        assert!(!cfg.is_equilateral());
    }

    #[test]
    fn iota_columns_match_the_paper_formulas() {
        let cfg = PolygonConfig::equilateral(3, 1, 1).unwrap();
        let iota = build_iota(&cfg).unwrap();
        // target components: sizes 0,1,1,1,2,2,2,3
        assert_eq!(iota.target_subsets.len(), 8);
        assert_eq!(iota.short_subsets.len(), 4);
        assert_eq!(iota.map.source().rank(), 8);
        // V_J columns are basis vectors
        for (k, &j_mask) in iota.short_subsets.iter().enumerate() {
            let col = &iota.map.columns()[k];
            let pos = iota
                .target_subsets
                .iter()
                .position(|&x| x == j_mask)
                .unwrap();
            assert_eq!(col, &iota.map.target().basis_element(pos));
        }
        // W_empty -> y1 V_{1} + y2 V_{2} + y3 V_{3}
        let w_empty = &iota.map.columns()[iota.short_subsets.len()];
        let rendered = render_element(w_empty);
        assert_eq!(rendered, "1: t1^2+t1*w; 2: t2^2+t2*w; 3: t3^2+t3*w");
        // W_{1} -> y2 V_{12} + y3 V_{13}; component order is (size, mask)
        let w1 = &iota.map.columns()[iota.short_subsets.len() + 1];
        assert_eq!(render_element(w1), "4: t2^2+t2*w; 5: t3^2+t3*w");
    }

    #[test]
    fn kernel_contains_the_w_empty_relation() {
        let cfg = PolygonConfig::equilateral(3, 1, 1).unwrap();
        let iota = build_iota(&cfg).unwrap();
        let ker = kernel_module(&iota.map).unwrap();
        // the kernel of iota is generated by W_0 - sum y_j V_j and the
        // Koszul relation among the W_{j}
        assert_eq!(ker.module.ambient().rank(), 2);
        // each generator maps to zero
        for col in ker.inclusion.columns() {
            assert!(iota.map.apply(col).unwrap().is_zero());
        }
        // the stated element lies in the kernel: W_0 + sum_j y_j V_{j}
        let source = iota.map.source();
        let ring = &iota.ring;
        let mut coords = vec![Polynomial::zero(ring); source.rank()];
        // V-block positions of singletons {1},{2},{3} are 1,2,3; W_0 is at 4
        for (k, &mask) in iota.short_subsets.iter().enumerate() {
            if mask.count_ones() == 1 {
                let j = mask.trailing_zeros() as usize;
                coords[k] = cfg.y_power(ring, j);
            }
        }
        coords[iota.short_subsets.len()] = Polynomial::one(ring);
        let elem = ModuleElement::new(source, coords).unwrap();
        assert!(iota.map.apply(&elem).unwrap().is_zero());
        assert!(oracle::submodule_contains(
            source,
            ker.inclusion.columns(),
            &elem
        ));
    }

    #[test]
    fn kernel_generation_certified_by_oracle() {
        let cfg = PolygonConfig::equilateral(3, 1, 1).unwrap();
        let iota = build_iota(&cfg).unwrap();
        let ker = kernel_module(&iota.map).unwrap();
        // degreewise: dim span(kernel gens) == dim ker(iota_d)
        for degree in 0..=12 {
            let span =
                oracle::submodule_piece_dim(iota.map.source(), ker.inclusion.columns(), degree);
            let expected = oracle::map_kernel_dim(&iota.map, degree);
            assert_eq!(span, expected, "degree {degree}");
        }
    }

    #[test]
    fn assembled_module_series_matches_the_oracle() {
        let cfg = PolygonConfig::equilateral(3, 1, 1).unwrap();
        let bp = bigpolygon_module(&cfg).unwrap();
        let hs = hilbert_series(&bp.module).unwrap();
        let lo = *bp.module.ambient().twists().iter().min().unwrap();
        let coeffs = hs.expand(lo, lo + 12);
        for (k, expected) in coeffs.iter().enumerate() {
            let d = lo + k as i64;
            let dim =
                oracle::quotient_piece_dim(bp.module.ambient(), bp.module.relations().columns(), d);
            assert_eq!(dim as i64, *expected, "graded dimension in degree {d}");
        }
    }

    #[test]
    fn non_equilateral_lengths_build_consistent_modules() {
        // lengths (1, 1/2, 2): short subsets are those of total weight < 7/4
        let lengths = vec![
            Length::new(1, 1).unwrap(),
            Length::new(1, 2).unwrap(),
            Length::new(2, 1).unwrap(),
        ];
        let cfg = PolygonConfig::new(3, 1, 1, Some(lengths)).unwrap();
        // {}, {1}, {2}, {1,2} are short; anything containing edge 3 is long
        let shorts = cfg.short_subsets();
        assert_eq!(shorts, vec![0b000, 0b001, 0b010, 0b011]);
        let iota = build_iota(&cfg).unwrap();
        let ker = kernel_module(&iota.map).unwrap();
        for col in ker.inclusion.columns() {
            assert!(iota.map.apply(col).unwrap().is_zero());
        }
        for degree in 0..=10 {
            let span =
                oracle::submodule_piece_dim(iota.map.source(), ker.inclusion.columns(), degree);
            let expected = oracle::map_kernel_dim(&iota.map, degree);
            assert_eq!(span, expected, "degree {degree}");
        }
        // the assembled module still satisfies series additivity
        let bp = bigpolygon_module(&cfg).unwrap();
        let total = hilbert_series(&bp.module).unwrap();
        let parts = hilbert_series(&bp.cokernel)
            .unwrap()
            .add(&hilbert_series(&bp.kernel.module).unwrap().shifted(-1));
        assert!(total.eq_series(&parts));
    }

    #[test]
    fn degenerate_single_edge_case_is_torsion() {
        // n = 1: X is a free orbit sphere, the module is R/(y^b), torsion
        let cfg = PolygonConfig::equilateral(1, 1, 1).unwrap();
        let bp = bigpolygon_module(&cfg).unwrap();
        assert_eq!(
            syzygy::syzygy_order(&bp.module).unwrap(),
            SyzygyOrder::Finite(0)
        );
    }

    #[test]
    fn theorem_holds_for_m1() {
        let cert = verify_syzygy_theorem(1, 1, 1).unwrap();
        assert!(cert.passed, "{cert:?}");
        assert_eq!(cert.analysis.syzygy_order, SyzygyOrder::Finite(1));
    }

    #[test]
    fn decomposition_matches_for_n3() {
        let cfg = PolygonConfig::equilateral(3, 1, 1).unwrap();
        let cert = structural_decomposition_check(&cfg).unwrap();
        assert!(cert.passed, "{cert:?}");
        assert_eq!(cert.kernel_free_generators, 1);
        assert_eq!(cert.cokernel_free_generators, 1);
        assert_eq!(cert.kernel.fitted_offset, 0, "b=1 matches the stated twist");
        assert_eq!(cert.cokernel.fitted_offset, 0);
    }

    #[test]
    fn stated_kernel_twist_is_off_by_2b_minus_2_for_higher_b() {
        // the series force the Koszul summand of the kernel to sit 2b-2
        // degrees away from the stated twist; for b = 1 the two agree
        for b in 2..=3u32 {
            let cfg = PolygonConfig::equilateral(3, 1, b).unwrap();
            let cert = structural_decomposition_check(&cfg).unwrap();
            assert!(cert.passed, "series still match after fitting: {cert:?}");
            assert_eq!(cert.kernel.fitted_offset, 2 * b as i64 - 2);
            assert_eq!(cert.cokernel.fitted_offset, 0);
        }
        // the theorem itself is insensitive to the shift
        let cert = verify_syzygy_theorem(1, 2, 1).unwrap();
        assert!(cert.passed);
    }

    #[test]
    fn assembly_order_is_the_minimum_of_the_parts() {
        let cfg = PolygonConfig::equilateral(3, 1, 1).unwrap();
        let bp = bigpolygon_module(&cfg).unwrap();
        let coker_order = syzygy::syzygy_order(&bp.cokernel).unwrap();
        let ker_order = syzygy::syzygy_order(&bp.kernel.module).unwrap();
        let total = syzygy::syzygy_order(&bp.module).unwrap();
        assert_eq!(total, coker_order.min(ker_order));
        // for n = 3 the kernel part is free and the cokernel realizes m = 1
        assert_eq!(ker_order, SyzygyOrder::Infinite);
        assert_eq!(coker_order, SyzygyOrder::Finite(1));
    }
}
