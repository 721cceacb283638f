//! The coefficient rings of 2-torus equivariant cohomology and their
//! verification routines: the twisted restriction map, freeness of the
//! rank-2^n basis, Weyl invariants, Euler-class restrictions, and
//! Poincaré-series factorizations of free extensions.

use crate::error::{Error, Result};
use crate::oracle::{DegreeBasis, RowSpace};
use crate::poly::Polynomial;
use crate::ring::{GradedRing, Monomial};
use crate::series::RationalSeries;
use crate::{FreeModule, ModuleElement, RingMap};
use serde::Serialize;
use std::sync::Arc;

/// The pair of coefficient rings with the restriction between them:
/// `R_G = GF(2)[c_1..c_n, w_1..w_m]` with `deg c_i = 2`, and
/// `R_H = GF(2)[t_1..t_n, w_1..w_m]` in degree one, with
/// `c_i -> t_i^2 + t_i(w_1 + ... + w_m)` and `w_j -> w_j`.
#[derive(Debug, Clone)]
pub struct BorelPair {
    pub n: usize,
    pub m: usize,
    pub ring_g: Arc<GradedRing>,
    pub ring_h: Arc<GradedRing>,
    pub restriction: RingMap,
}

fn w_names(m: usize) -> Vec<String> {
    if m == 1 {
        vec!["w".into()]
    } else {
        (1..=m).map(|j| format!("w{j}")).collect()
    }
}

pub fn build_borel_pair(n: usize, m: usize) -> Result<BorelPair> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidInput("both ranks must be at least 1".into()));
    }
    let mut g_vars: Vec<String> = (1..=n).map(|i| format!("c{i}")).collect();
    g_vars.extend(w_names(m));
    let mut g_degs = vec![2i64; n];
    g_degs.extend(vec![1i64; m]);
    let ring_g = GradedRing::new(g_vars, g_degs)?;

    let mut h_vars: Vec<String> = (1..=n).map(|i| format!("t{i}")).collect();
    h_vars.extend(w_names(m));
    let ring_h = GradedRing::standard(h_vars)?;

    let w_sum = Polynomial::from_monomials(&ring_h, (0..m).map(|j| Monomial::var(n + j)));
    let mut images = Vec::with_capacity(n + m);
    for i in 0..n {
        let t = Polynomial::var(&ring_h, i);
        let image = t.square().add(&t.mul(&w_sum)?)?;
        images.push(image);
    }
    for j in 0..m {
        images.push(Polynomial::var(&ring_h, n + j));
    }
    let restriction = RingMap::new(&ring_g, &ring_h, images)?;
    Ok(BorelPair {
        n,
        m,
        ring_g,
        ring_h,
        restriction,
    })
}

/// Weyl generators for `m = 1`: the involutions `t_i -> t_i + w`.
#[derive(Debug, Clone)]
pub struct WeylAction {
    pub generators: Vec<RingMap>,
}

pub fn weyl_action(pair: &BorelPair) -> Result<WeylAction> {
    if pair.m != 1 {
        return Err(Error::InvalidInput(
            "the Weyl action is implemented for m = 1".into(),
        ));
    }
    let rh = &pair.ring_h;
    let w = Polynomial::var(rh, pair.n);
    let mut generators = Vec::with_capacity(pair.n);
    for i in 0..pair.n {
        let mut images = Vec::with_capacity(pair.n + 1);
        for k in 0..pair.n {
            let t = Polynomial::var(rh, k);
            images.push(if k == i { t.add(&w)? } else { t });
        }
        images.push(w.clone());
        generators.push(RingMap::new(rh, rh, images)?);
    }
    Ok(WeylAction { generators })
}

/// Certificate of the rank-2^n freeness of `R_H` over `R_G`.
#[derive(Debug, Clone, Serialize)]
pub struct BasisFreenessCertificate {
    pub n: usize,
    pub m: usize,
    pub rank: u64,
    pub basis: Vec<String>,
    /// multiset of basis degrees: `degree_multiset[d]` counts basis elements
    /// of degree `d`
    pub degree_multiset: Vec<(i64, u64)>,
    pub degree_bound: i64,
    pub series_identity: bool,
    pub generation_and_independence: bool,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Check that `R_H` is a free `R_G`-module on the square-free monomials
/// `t^eps`: degreewise generation and independence up to the bound, plus the
/// exact series identity `(1+s)^n * HS(R_G) = HS(R_H)`.
pub fn verify_basis_freeness(
    pair: &BorelPair,
    degree_bound: i64,
) -> Result<BasisFreenessCertificate> {
    let n = pair.n;
    let rh_free = FreeModule::rank_n(&pair.ring_h, 1);
    let rg = &pair.ring_g;

    // the 2^n candidate basis elements
    let mut basis_monos = Vec::with_capacity(1 << n);
    for mask in 0u32..(1 << n) {
        let mut mono = Monomial::one();
        for i in 0..n {
            if mask >> i & 1 == 1 {
                mono = mono.mul(&Monomial::var(i));
            }
        }
        basis_monos.push(mono);
    }
    basis_monos.sort_by(|a, b| pair.ring_h.cmp_mono(a, b));
    let basis: Vec<String> = basis_monos
        .iter()
        .map(|m| crate::text::render_monomial(&pair.ring_h, m))
        .collect();
    let mut degree_multiset = std::collections::BTreeMap::new();
    for m in &basis_monos {
        *degree_multiset
            .entry(pair.ring_h.mono_degree(m))
            .or_insert(0u64) += 1;
    }

    let mut generation_and_independence = true;
    let mut witness = None;
    'degrees: for d in 0..=degree_bound {
        let target = DegreeBasis::new(&rh_free, d);
        let mut space = RowSpace::new();
        let mut rows = 0usize;
        for bm in &basis_monos {
            let bdeg = pair.ring_h.mono_degree(bm);
            for mu in rg.monomials_of_degree(d - bdeg) {
                let image = pair
                    .restriction
                    .apply(&Polynomial::monomial(rg, mu))?
                    .mul_monomial(bm);
                let elem = ModuleElement::new(&rh_free, vec![image])?;
                rows += 1;
                if !space.insert(target.vector_of(&elem)) {
                    generation_and_independence = false;
                    witness = Some(format!(
                        "degree {d}: products of basis element {} are linearly dependent",
                        crate::text::render_monomial(&pair.ring_h, bm)
                    ));
                    break 'degrees;
                }
            }
        }
        if space.rank() != target.dim() || rows != target.dim() {
            generation_and_independence = false;
            witness = Some(format!(
                "degree {d}: span dimension {} of {} expected",
                space.rank(),
                target.dim()
            ));
            break;
        }
    }

    // (1+s)^n / ((1-s^2)^n (1-s)^m) = 1/(1-s)^{n+m}
    let mut lhs_num = crate::series::ZPoly::one();
    let one_plus_s = {
        let mut p = crate::series::ZPoly::one();
        p.add_term(1, 1);
        p
    };
    for _ in 0..n {
        lhs_num = lhs_num.mul(&one_plus_s);
    }
    let lhs = RationalSeries::new(lhs_num, rg.var_degrees().to_vec())?;
    let rhs = RationalSeries::free_ring(&pair.ring_h);
    let series_identity = lhs.eq_series(&rhs);

    let passed = generation_and_independence && series_identity;
    Ok(BasisFreenessCertificate {
        n,
        m: pair.m,
        rank: 1 << n,
        basis,
        degree_multiset: degree_multiset.into_iter().collect(),
        degree_bound,
        series_identity,
        generation_and_independence,
        passed,
        witness,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct WeylInvariantsCertificate {
    pub n: usize,
    pub degree_bound: i64,
    pub involutions: bool,
    pub commuting: bool,
    pub image_fixed: bool,
    /// per degree: (degree, invariant dimension, image dimension)
    pub dimensions: Vec<(i64, usize, usize)>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failed_degree: Option<i64>,
}

/// Degreewise comparison of the simultaneous fixed space of the Weyl
/// generators with the image subring of the restriction.
pub fn weyl_invariants_check(
    pair: &BorelPair,
    degree_bound: i64,
) -> Result<WeylInvariantsCertificate> {
    let action = weyl_action(pair)?;
    let rh = &pair.ring_h;
    let rg = &pair.ring_g;
    let identity = RingMap::identity(rh);

    let mut involutions = true;
    let mut commuting = true;
    for phi in &action.generators {
        if phi.then(phi)? != identity {
            involutions = false;
        }
    }
    for a in &action.generators {
        for b in &action.generators {
            if a.then(b)? != b.then(a)? {
                commuting = false;
            }
        }
    }

    // each generator fixes the images of the ring generators exactly
    let mut image_fixed = true;
    for i in 0..rg.nvars() {
        let img = pair.restriction.apply(&Polynomial::var(rg, i))?;
        for phi in &action.generators {
            if phi.apply(&img)? != img {
                image_fixed = false;
            }
        }
    }

    let rh_free = FreeModule::rank_n(rh, 1);
    let mut dimensions = Vec::new();
    let mut failed_degree = None;
    for d in 0..=degree_bound {
        let basis = DegreeBasis::new(&rh_free, d);
        let dim = basis.dim();
        // rank of v -> (phi_i(v) - v)_i
        let mut rows = Vec::with_capacity(dim);
        for (_, mono) in basis.pairs() {
            let v = Polynomial::monomial(rh, *mono);
            let mut stacked: Vec<u64> = Vec::new();
            for phi in &action.generators {
                let diff = phi.apply(&v)?.add(&v)?;
                let elem = ModuleElement::new(&rh_free, vec![diff])?;
                stacked.extend(basis.vector_of(&elem));
            }
            rows.push(stacked);
        }
        let rank = RowSpace::from_rows(rows).rank();
        let fixed_dim = dim - rank;
        // image of the restriction in degree d
        let mut image_rows = Vec::new();
        for mu in rg.monomials_of_degree(d) {
            let img = pair.restriction.apply(&Polynomial::monomial(rg, mu))?;
            let elem = ModuleElement::new(&rh_free, vec![img])?;
            image_rows.push(basis.vector_of(&elem));
        }
        let image_dim = RowSpace::from_rows(image_rows).rank();
        if fixed_dim != image_dim && failed_degree.is_none() {
            failed_degree = Some(d);
        }
        dimensions.push((d, fixed_dim, image_dim));
    }

    let passed = involutions && commuting && image_fixed && failed_degree.is_none();
    Ok(WeylInvariantsCertificate {
        n: pair.n,
        degree_bound,
        involutions,
        commuting,
        image_fixed,
        dimensions,
        passed,
        failed_degree,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct EulerRestrictionCertificate {
    pub class: String,
    /// (name, substitution, expected, computed, ok)
    pub rows: Vec<(String, String, String, String, bool)>,
    pub passed: bool,
}

/// The three restriction identities of the rank-2 Euler class `x(x+w)`:
/// `(x,w) -> (t,0)` gives `t^2`, `(x,w) -> (0,t)` gives `0`, and
/// `(x,w) -> (t,t)` gives `0`.
pub fn euler_class_restriction_table() -> Result<EulerRestrictionCertificate> {
    let rg = GradedRing::standard(vec!["x", "w"])?;
    let rk = GradedRing::standard(vec!["t"])?;
    let x = Polynomial::var(&rg, 0);
    let w = Polynomial::var(&rg, 1);
    let euler = x.mul(&x.add(&w)?)?;

    let t = Polynomial::var(&rk, 0);
    let zero = Polynomial::zero(&rk);
    let cases = [
        ("j1", vec![t.clone(), zero.clone()], t.square()),
        ("j2", vec![zero.clone(), t.clone()], zero.clone()),
        ("j3", vec![t.clone(), t.clone()], zero.clone()),
    ];
    let mut rows = Vec::new();
    let mut passed = true;
    for (name, images, expected) in cases {
        let subst = format!(
            "x->{}, w->{}",
            crate::text::render_poly(&images[0]),
            crate::text::render_poly(&images[1])
        );
        let map = RingMap::new(&rg, &rk, images)?;
        let computed = map.apply(&euler)?;
        let ok = computed == expected;
        passed &= ok;
        rows.push((
            name.to_string(),
            subst,
            crate::text::render_poly(&expected),
            crate::text::render_poly(&computed),
            ok,
        ));
    }
    Ok(EulerRestrictionCertificate {
        class: crate::text::render_poly(&euler),
        rows,
        passed,
    })
}

/// Built-in catalog: the circle against its 2-torsion subgroup, and tori of
/// rank up to three against their maximal elementary abelian 2-subgroups.
pub fn default_series_catalog() -> Vec<crate::certificate::SeriesCatalogEntry> {
    use crate::certificate::{HilbertJson, SeriesCatalogEntry};
    let mut entries = vec![SeriesCatalogEntry {
        name: "circle-mod-two-torsion".into(),
        bk: HilbertJson {
            num: "1".into(),
            den: vec![1],
        },
        bg: HilbertJson {
            num: "1".into(),
            den: vec![2],
        },
        fibers: vec![HilbertJson {
            num: "1+s".into(),
            den: vec![],
        }],
    }];
    for n in 1..=3usize {
        let mut fiber = crate::series::ZPoly::one();
        let one_plus_s = {
            let mut p = crate::series::ZPoly::one();
            p.add_term(1, 1);
            p
        };
        for _ in 0..n {
            fiber = fiber.mul(&one_plus_s);
        }
        entries.push(SeriesCatalogEntry {
            name: format!("torus-rank-{n}-mod-2-torus"),
            bk: HilbertJson {
                num: "1".into(),
                den: vec![1; n],
            },
            bg: HilbertJson {
                num: "1".into(),
                den: vec![2; n],
            },
            fibers: vec![HilbertJson {
                num: fiber.to_string(),
                den: vec![],
            }],
        });
    }
    entries
}

/// Product identity `P_BK = P_BG * Π fibers`, exactly as rational series.
/// The chain is `[P_BK, P_BG, fiber factors...]`.
pub fn free_extension_series_check(chain: &[RationalSeries]) -> Result<bool> {
    if chain.len() < 2 {
        return Err(Error::InvalidInput(
            "series chain needs the total space, the base, and the fiber factors".into(),
        ));
    }
    let mut rhs = chain[1].clone();
    for f in &chain[2..] {
        rhs = rhs.mul(f);
    }
    Ok(chain[0].eq_series(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{parse_zpoly, ZPoly};
    use crate::text::parse_poly;

    #[test]
    fn restriction_images_match_the_twisted_form() {
        let pair = build_borel_pair(1, 1).unwrap();
        let c = Polynomial::var(&pair.ring_g, 0);
        assert_eq!(
            pair.restriction.apply(&c).unwrap(),
            parse_poly(&pair.ring_h, "t1^2+t1*w").unwrap()
        );
        let w = Polynomial::var(&pair.ring_g, 1);
        assert_eq!(
            pair.restriction.apply(&w).unwrap(),
            parse_poly(&pair.ring_h, "w").unwrap()
        );

        let pair2 = build_borel_pair(1, 2).unwrap();
        let c = Polynomial::var(&pair2.ring_g, 0);
        assert_eq!(
            pair2.restriction.apply(&c).unwrap(),
            parse_poly(&pair2.ring_h, "t1^2+t1*w1+t1*w2").unwrap()
        );
        // w_j restrict identically for any ranks
        let pair3 = build_borel_pair(2, 2).unwrap();
        for j in 0..2 {
            let w = Polynomial::var(&pair3.ring_g, 2 + j);
            assert_eq!(
                pair3.restriction.apply(&w).unwrap(),
                Polynomial::var(&pair3.ring_h, 2 + j)
            );
        }
    }

    #[test]
    fn freeness_certificates_for_small_ranks() {
        let pair = build_borel_pair(1, 1).unwrap();
        let cert = verify_basis_freeness(&pair, 8).unwrap();
        assert!(cert.passed);
        assert_eq!(cert.rank, 2);
        assert_eq!(cert.basis, vec!["1", "t1"]);

        let pair = build_borel_pair(2, 1).unwrap();
        let cert = verify_basis_freeness(&pair, 8).unwrap();
        assert!(cert.passed);
        assert_eq!(cert.rank, 4);
        assert_eq!(cert.basis, vec!["1", "t2", "t1", "t1*t2"]);
        assert_eq!(cert.degree_multiset, vec![(0, 1), (1, 2), (2, 1)]);
    }

    #[test]
    fn weyl_invariants_match_image_dimensions() {
        let pair = build_borel_pair(1, 1).unwrap();
        let cert = weyl_invariants_check(&pair, 6).unwrap();
        assert!(cert.passed, "{cert:?}");
        // degree 1: invariants spanned by w only
        assert_eq!(cert.dimensions[1], (1, 1, 1));
        // degree 2: t^2+tw and w^2
        assert_eq!(cert.dimensions[2], (2, 2, 2));

        let pair2 = build_borel_pair(2, 1).unwrap();
        let cert2 = weyl_invariants_check(&pair2, 8).unwrap();
        assert!(cert2.passed, "{cert2:?}");
    }

    #[test]
    fn euler_table_passes() {
        let cert = euler_class_restriction_table().unwrap();
        assert!(cert.passed);
        assert_eq!(cert.class, "x^2+x*w");
        assert_eq!(cert.rows[0].2, "t^2");
        assert_eq!(cert.rows[1].2, "0");
        assert_eq!(cert.rows[2].2, "0");
    }

    #[test]
    fn restriction_preserves_degrees_on_samples() {
        let pair = build_borel_pair(2, 1).unwrap();
        let mut rng = crate::sample::Rng::new(31);
        for _ in 0..25 {
            let d = 1 + rng.below(6) as i64;
            let f = crate::sample::homogeneous_poly(&mut rng, &pair.ring_g, d);
            if f.is_zero() {
                continue;
            }
            let img = pair.restriction.apply(&f).unwrap();
            assert!(
                img.is_zero() || img.is_homogeneous_of_degree(d),
                "degree {d}"
            );
        }
    }

    #[test]
    fn base_change_of_frees_scales_series_by_the_fiber_factor() {
        // HS(F ⊗ R_H) = HS(F) · (1+s)^n for every free R_G-module F
        let pair = build_borel_pair(2, 1).unwrap();
        let free =
            crate::module::PresentedModule::free(&FreeModule::new(&pair.ring_g, vec![0, 1, 3]));
        let bc = crate::homalg::base_change(&free, &pair.restriction).unwrap();
        let fiber = {
            let mut p = ZPoly::one();
            p.add_term(1, 1);
            RationalSeries::polynomial(p.mul(&p))
        };
        let lhs = crate::homalg::hilbert_series(&bc).unwrap();
        let rhs = crate::homalg::hilbert_series(&free).unwrap().mul(&fiber);
        assert!(lhs.eq_series(&rhs));
    }

    #[test]
    fn series_factorization_examples() {
        // (S^1, Z/2): 1/(1-s) = 1/(1-s^2) * (1+s)
        let bk = RationalSeries::new(ZPoly::one(), vec![1]).unwrap();
        let bg = RationalSeries::new(ZPoly::one(), vec![2]).unwrap();
        let fiber = RationalSeries::polynomial(parse_zpoly("1+s").unwrap());
        assert!(free_extension_series_check(&[bk.clone(), bg.clone(), fiber]).unwrap());
        // corrupted fiber fails
        let bad = RationalSeries::polynomial(parse_zpoly("1+s^2").unwrap());
        assert!(!free_extension_series_check(&[bk, bg, bad]).unwrap());
    }
}
