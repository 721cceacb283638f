//! Built-in verification battery: the worked examples of every module plus
//! seeded property suites. `selftest` on the command line runs exactly this.

use crate::bigpolygon::{self, PolygonConfig};
use crate::borel::{self, build_borel_pair};
use crate::error::Result;
use crate::groebner::{normal_form, reduced_groebner_basis_in};
use crate::homalg::{
    self, base_change, dimension, hilbert_series, image_presentation, kernel_module,
    minimal_free_resolution, module_assemble,
};
use crate::module::{FreeModule, ModuleElement, ModuleMap, PresentedModule};
use crate::oracle;
use crate::poly::{Polynomial, RingMap};
use crate::ring::GradedRing;
use crate::sample::{self, Rng};
use crate::series::{parse_zpoly, RationalSeries};
use crate::syzygy::{self, SyzygyOrder};
use crate::text::parse_poly;
use serde::Serialize;
use std::sync::Arc;

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub details: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelfTestReport {
    pub seed: u64,
    pub degree_bound: i64,
    pub checks: Vec<CheckResult>,
    pub passed: bool,
}

struct Battery {
    checks: Vec<CheckResult>,
}

impl Battery {
    fn run(&mut self, name: &str, f: impl FnOnce() -> Result<(bool, String)>) {
        let (passed, details) = match f() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {e}")),
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            passed,
            details,
        });
    }
}

pub fn run_selftest(seed: u64, degree_bound: i64) -> SelfTestReport {
    let mut b = Battery { checks: Vec::new() };
    let d = degree_bound;

    b.run("examples/gf2-poly", examples_gf2_poly);
    b.run("examples/groebner", examples_groebner);
    b.run("examples/series", examples_series);
    b.run("examples/homalg", examples_homalg);
    b.run("examples/syzygy", examples_syzygy);
    b.run("examples/borel", examples_borel);
    b.run("examples/bigpolygon", examples_bigpolygon);

    b.run("properties/poly-algebra", move || {
        poly_algebra_properties(seed, 40)
    });
    b.run("properties/ring-maps", move || {
        ring_map_properties(seed ^ 0x1111, 25)
    });
    b.run("properties/groebner", move || {
        groebner_properties(seed ^ 0x2222, 12, d)
    });
    b.run("properties/kernels", move || {
        kernel_properties(seed ^ 0x3333, 12, d)
    });
    b.run("properties/resolutions", move || {
        resolution_properties(seed ^ 0x4444, 20, d)
    });
    b.run("properties/series-additivity", move || {
        additivity_properties(seed ^ 0x5555, 12)
    });
    b.run("properties/syzygy-orders", move || {
        syzygy_properties(seed ^ 0x6666, 10)
    });
    b.run("properties/thread-determinism", thread_determinism);
    b.run("properties/cache-determinism", cache_determinism);

    let passed = b.checks.iter().all(|c| c.passed);
    SelfTestReport {
        seed,
        degree_bound,
        checks: b.checks,
        passed,
    }
}

fn ok(details: impl Into<String>) -> Result<(bool, String)> {
    Ok((true, details.into()))
}

fn fail(details: impl Into<String>) -> Result<(bool, String)> {
    Ok((false, details.into()))
}

fn ring_tw() -> Result<Arc<GradedRing>> {
    GradedRing::standard(vec!["t", "w"])
}

fn examples_gf2_poly() -> Result<(bool, String)> {
    let r = ring_tw()?;
    let t = Polynomial::var(&r, 0);
    let w = Polynomial::var(&r, 1);
    // (t^2+tw) + (tw+w^2) = t^2+w^2
    let lhs = parse_poly(&r, "t^2+t*w")?.add(&parse_poly(&r, "t*w+w^2")?)?;
    if lhs != parse_poly(&r, "t^2+w^2")? {
        return fail("characteristic-two addition");
    }
    let f = parse_poly(&r, "t^2+t*w+w^2")?;
    if !f.add(&f)?.is_zero() {
        return fail("f + f != 0");
    }
    if t.mul(&t.add(&w)?)? != parse_poly(&r, "t^2+t*w")? {
        return fail("y = t(t+w) expansion");
    }
    if t.add(&w)?.square() != parse_poly(&r, "t^2+w^2")? {
        return fail("Frobenius");
    }
    if Polynomial::one(&r).mul(&f)? != f {
        return fail("multiplicative identity");
    }
    let rg = GradedRing::new(vec!["c", "w"], vec![2, 1])?;
    let i_star = RingMap::new(
        &rg,
        &r,
        vec![parse_poly(&r, "t^2+t*w")?, parse_poly(&r, "w")?],
    )?;
    if i_star.apply(&Polynomial::var(&rg, 0))? != parse_poly(&r, "t^2+t*w")? {
        return fail("restriction image of c");
    }
    match parse_poly(&r, "t+w^2")?.homogeneous_degree()? {
        crate::poly::HomogeneousDegree::Inhomogeneous => {}
        _ => return fail("inhomogeneous detection"),
    }
    ok("addition, products, Frobenius, substitution, degrees")
}

fn examples_groebner() -> Result<(bool, String)> {
    let r = ring_tw()?;
    let ambient = FreeModule::rank_n(&r, 1);
    let gens = vec![
        ModuleElement::new(&ambient, vec![parse_poly(&r, "t^2+t*w")?])?,
        ModuleElement::new(&ambient, vec![parse_poly(&r, "w")?])?,
    ];
    let gb = reduced_groebner_basis_in(&ambient, &gens)?;
    let printed: Vec<String> = gb
        .generators()
        .iter()
        .map(crate::text::render_element)
        .collect();
    if printed != vec!["w", "t^2"] {
        return fail(format!("reduced basis of <t^2+tw, w> was {printed:?}"));
    }
    let t3 = ModuleElement::new(&ambient, vec![parse_poly(&r, "t^3")?])?;
    if !normal_form(&t3, &gb)?.is_zero() {
        return fail("t^3 must reduce to zero");
    }
    let t = ModuleElement::new(&ambient, vec![parse_poly(&r, "t")?])?;
    if normal_form(&t, &gb)? != t {
        return fail("t is its own normal form");
    }
    let zero_gb = reduced_groebner_basis_in(&ambient, &[ambient.zero_element()])?;
    if !zero_gb.is_empty() {
        return fail("basis of the zero ideal");
    }
    ok("spec ideals, normal forms, zero ideal")
}

fn examples_series() -> Result<(bool, String)> {
    // (1+s)^n/((1-s^2)^n (1-s)^m) = 1/(1-s)^{n+m}
    for n in 1..=3usize {
        for m in 1..=2usize {
            let mut num = crate::series::ZPoly::one();
            for _ in 0..n {
                num = num.mul(&parse_zpoly("1+s")?);
            }
            let mut den = vec![2i64; n];
            den.extend(vec![1i64; m]);
            let lhs = RationalSeries::new(num, den)?;
            let rhs = RationalSeries::new(crate::series::ZPoly::one(), vec![1; n + m])?;
            if !lhs.eq_series(&rhs) {
                return fail(format!("series identity n={n} m={m}"));
            }
        }
    }
    let chain_ok = borel::free_extension_series_check(&[
        RationalSeries::new(crate::series::ZPoly::one(), vec![1])?,
        RationalSeries::new(crate::series::ZPoly::one(), vec![2])?,
        RationalSeries::polynomial(parse_zpoly("1+s")?),
    ])?;
    let chain_bad = borel::free_extension_series_check(&[
        RationalSeries::new(crate::series::ZPoly::one(), vec![1])?,
        RationalSeries::new(crate::series::ZPoly::one(), vec![2])?,
        RationalSeries::polynomial(parse_zpoly("1+s^2")?),
    ])?;
    if !chain_ok || chain_bad {
        return fail("free extension factorization");
    }
    ok("factorizations and corrupted-entry rejection")
}

fn examples_homalg() -> Result<(bool, String)> {
    let m = crate::text::parse_module_file("ring: t w deg 1 1\nambient: rank 1\nt\nw\n")?;
    let res = minimal_free_resolution(&m, None)?;
    if res.betti.total(0) != 1 || res.betti.total(1) != 2 || res.betti.total(2) != 1 {
        return fail("Betti numbers of the residue field");
    }
    if !res.complex.composites_are_zero()? {
        return fail("d∘d = 0");
    }
    let y = crate::text::parse_module_file("ring: t w deg 1 1\nambient: rank 1\nt^2+t*w\n")?;
    let hs = hilbert_series(&y)?;
    if !hs.eq_series(&RationalSeries::new(parse_zpoly("1+s")?, vec![1])?) {
        return fail("Hilbert series of R/(y)");
    }
    if dimension(&y)? != 1 || dimension(&m)? != 0 {
        return fail("dimensions");
    }
    let exts = homalg::ext_modules(&m, 2)?;
    if !hilbert_series(&exts[0])?.is_zero() || hilbert_series(&exts[1])?.is_zero() {
        return fail("Ext of the residue field");
    }
    // base change of R_G/(c1) along the restriction is R_H/(y1)
    let pair = build_borel_pair(1, 1)?;
    let amb = FreeModule::rank_n(&pair.ring_g, 1);
    let c_col = ModuleElement::new(&amb, vec![Polynomial::var(&pair.ring_g, 0)])?;
    let quot = PresentedModule::new(ModuleMap::from_columns(&amb, vec![c_col])?);
    let bc = base_change(&quot, &pair.restriction)?;
    if !hilbert_series(&bc)?.eq_series(&hs) {
        return fail("base change of R_G/(c)");
    }
    ok("resolutions, series, dimension, Ext, base change")
}

fn examples_syzygy() -> Result<(bool, String)> {
    let ring = ring_tw()?;
    let free = PresentedModule::free(&FreeModule::rank_n(&ring, 1));
    if syzygy::syzygy_order(&free)? != SyzygyOrder::Infinite {
        return fail("free module order");
    }
    let ambient = FreeModule::new(&ring, vec![1, 1]);
    let rel = ModuleElement::new(
        &ambient,
        vec![parse_poly(&ring, "w")?, parse_poly(&ring, "t")?],
    )?;
    let ideal = PresentedModule::new(ModuleMap::from_columns(&ambient, vec![rel])?);
    if syzygy::syzygy_order(&ideal)? != SyzygyOrder::Finite(1) {
        return fail("maximal ideal order");
    }
    if syzygy::is_jth_syzygy(&ideal, 2)? {
        return fail("maximal ideal is not a second syzygy");
    }
    let k = crate::text::parse_module_file("ring: t w deg 1 1\nambient: rank 1\nt\nw\n")?;
    if syzygy::syzygy_order(&k)? != SyzygyOrder::Finite(0) {
        return fail("torsion module order");
    }
    if syzygy::depth(&k)? != 0 || syzygy::depth(&free)? != 2 {
        return fail("depth");
    }
    ok("orders 0, 1 and infinite; depth")
}

fn examples_borel() -> Result<(bool, String)> {
    for n in 1..=2usize {
        for m in 1..=2usize {
            let pair = build_borel_pair(n, m)?;
            let cert = borel::verify_basis_freeness(&pair, 6)?;
            if !cert.passed || cert.rank != 1 << n {
                return fail(format!("freeness certificate n={n} m={m}"));
            }
        }
    }
    let pair = build_borel_pair(1, 1)?;
    let weyl = borel::weyl_invariants_check(&pair, 6)?;
    if !weyl.passed {
        return fail("Weyl invariants n=1");
    }
    let euler = borel::euler_class_restriction_table()?;
    if !euler.passed {
        return fail("Euler restriction table");
    }
    ok("basis freeness, Weyl invariants, Euler table")
}

fn examples_bigpolygon() -> Result<(bool, String)> {
    let cert = bigpolygon::verify_syzygy_theorem(1, 1, 1)?;
    if !cert.passed {
        return fail("order of the n=3 module");
    }
    let cfg = PolygonConfig::equilateral(3, 1, 1)?;
    let dec = bigpolygon::structural_decomposition_check(&cfg)?;
    if !dec.passed || dec.kernel.fitted_offset != 0 {
        return fail("n=3 decomposition");
    }
    // shortness combinatorics
    for mask in 0u32..8 {
        if cfg.is_short(mask) != (mask.count_ones() <= 1) {
            return fail("shortness for equilateral n=3");
        }
    }
    ok("n=3 syzygy order, decomposition, shortness")
}

fn poly_algebra_properties(seed: u64, rounds: usize) -> Result<(bool, String)> {
    let mut rng = Rng::new(seed);
    for i in 0..rounds {
        let ring = sample::small_ring(&mut rng);
        let f = sample::poly_up_to(&mut rng, &ring, 6);
        let g = sample::poly_up_to(&mut rng, &ring, 6);
        let h = sample::poly_up_to(&mut rng, &ring, 4);
        if !f.add(&f)?.is_zero() {
            return fail(format!("round {i}: f+f"));
        }
        if f.add(&g)? != g.add(&f)? {
            return fail(format!("round {i}: commutativity"));
        }
        if f.add(&g)?.add(&h)? != f.add(&g.add(&h)?)? {
            return fail(format!("round {i}: associativity"));
        }
        if f.mul(&g)? != g.mul(&f)? {
            return fail(format!("round {i}: product commutativity"));
        }
        if f.mul(&g.add(&h)?)? != f.mul(&g)?.add(&f.mul(&h)?)? {
            return fail(format!("round {i}: distributivity"));
        }
        if f.add(&g)?.square() != f.square().add(&g.square())? {
            return fail(format!("round {i}: Frobenius"));
        }
        // canonical form: shuffled construction compares equal
        let mut monos: Vec<_> = f.terms().to_vec();
        monos.reverse();
        if Polynomial::from_monomials(&ring, monos) != f {
            return fail(format!("round {i}: canonical form"));
        }
    }
    ok(format!("{rounds} sampled rounds"))
}

fn ring_map_properties(seed: u64, rounds: usize) -> Result<(bool, String)> {
    let mut rng = Rng::new(seed);
    for i in 0..rounds {
        let source = sample::small_ring(&mut rng);
        let target = sample::small_ring(&mut rng);
        let images: Vec<Polynomial> = (0..source.nvars())
            .map(|k| sample::homogeneous_poly(&mut rng, &target, source.var_degree(k)))
            .collect();
        let phi = match RingMap::new(&source, &target, images) {
            Ok(p) => p,
            Err(_) => continue,
        };
        let f = sample::poly_up_to(&mut rng, &source, 5);
        let g = sample::poly_up_to(&mut rng, &source, 5);
        if phi.apply(&f.add(&g)?)? != phi.apply(&f)?.add(&phi.apply(&g)?)? {
            return fail(format!("round {i}: additivity"));
        }
        if phi.apply(&f.mul(&g)?)? != phi.apply(&f)?.mul(&phi.apply(&g)?)? {
            return fail(format!("round {i}: multiplicativity"));
        }
    }
    ok(format!("{rounds} sampled homomorphisms"))
}

fn groebner_properties(seed: u64, rounds: usize, degree_bound: i64) -> Result<(bool, String)> {
    let mut rng = Rng::new(seed);
    for i in 0..rounds {
        let ring = sample::small_ring(&mut rng);
        let m = sample::presented_module(&mut rng, &ring);
        let ambient = m.ambient().clone();
        let gens: Vec<ModuleElement> = m.relations().columns().to_vec();
        if gens.is_empty() {
            continue;
        }
        let gb = reduced_groebner_basis_in(&ambient, &gens)?;
        // permutation invariance
        let mut permuted = gens.clone();
        permuted.reverse();
        let last = permuted.len() - 1;
        if rng.flip() && permuted.len() > 2 {
            permuted.swap(0, last);
        }
        if reduced_groebner_basis_in(&ambient, &permuted)? != gb {
            return fail(format!("round {i}: permutation invariance"));
        }
        // membership soundness: every generator reduces to zero
        for g in &gens {
            if !normal_form(g, &gb)?.is_zero() {
                return fail(format!("round {i}: generator does not reduce"));
            }
        }
        // idempotence on a random element
        let probe = ModuleElement::new(
            &ambient,
            (0..ambient.rank())
                .map(|_| sample::poly_up_to(&mut rng, &ring, 4))
                .collect(),
        )?;
        let nf = normal_form(&probe, &gb)?;
        if normal_form(&nf, &gb)? != nf {
            return fail(format!("round {i}: idempotence"));
        }
        // probe - nf lies in the submodule (oracle-decided)
        let diff = probe.add(&nf)?;
        if !diff.is_zero() {
            match diff.homogeneous_degree() {
                Some(_) => {
                    if !oracle::submodule_contains(&ambient, &gens, &diff) {
                        return fail(format!("round {i}: v - nf escapes the submodule"));
                    }
                }
                None => {
                    // inhomogeneous difference: check the whole element via
                    // a second normal form, which must vanish
                    if !normal_form(&diff, &gb)?.is_zero() {
                        return fail(format!("round {i}: v - nf escapes the submodule"));
                    }
                }
            }
        }
        // degreewise span equality against the oracle
        for d in 0..=degree_bound {
            let a = oracle::submodule_piece_dim(&ambient, &gens, d);
            let b = oracle::submodule_piece_dim(&ambient, gb.generators(), d);
            if a != b {
                return fail(format!(
                    "round {i}: span mismatch in degree {d}: {a} vs {b}"
                ));
            }
        }
    }
    ok(format!(
        "{rounds} sampled ideals/modules, oracle to degree {degree_bound}"
    ))
}

fn kernel_properties(seed: u64, rounds: usize, degree_bound: i64) -> Result<(bool, String)> {
    let mut rng = Rng::new(seed);
    for i in 0..rounds {
        let ring = sample::small_ring(&mut rng);
        let f = sample::module_map(&mut rng, &ring);
        if f.columns().is_empty() {
            continue;
        }
        let ker = kernel_module(&f)?;
        for col in ker.inclusion.columns() {
            if !f.apply(col)?.is_zero() {
                return fail(format!("round {i}: kernel generator not in the kernel"));
            }
        }
        for d in 0..=degree_bound {
            let span = oracle::submodule_piece_dim(f.source(), ker.inclusion.columns(), d);
            let expected = oracle::map_kernel_dim(&f, d);
            if span != expected {
                return fail(format!(
                    "round {i}: kernel completeness fails in degree {d}: {span} vs {expected}"
                ));
            }
        }
    }
    ok(format!(
        "{rounds} sampled maps, oracle to degree {degree_bound}"
    ))
}

fn resolution_properties(seed: u64, rounds: usize, degree_bound: i64) -> Result<(bool, String)> {
    let mut rng = Rng::new(seed);
    let mut tested = 0usize;
    while tested < rounds {
        let ring = sample::small_ring(&mut rng);
        let m = sample::presented_module(&mut rng, &ring);
        tested += 1;
        let res = minimal_free_resolution(&m, None)?;
        if !res.complex.composites_are_zero()? {
            return fail(format!("module {tested}: d∘d != 0"));
        }
        if res.length() > ring.nvars() {
            return fail(format!(
                "module {tested}: resolution exceeds the syzygy bound"
            ));
        }
        // minimality
        for f in res.complex.maps() {
            for col in f.columns() {
                for p in col.coords() {
                    if p.is_unit() {
                        return fail(format!("module {tested}: unit entry in a differential"));
                    }
                }
            }
        }
        // exactness at homological positions >= 1, against the oracle
        for pos in 1..res.length() {
            let inner = res.complex.map(pos);
            let outer = res.complex.map(pos - 1);
            if !oracle::exact_at_middle(inner, outer, 0..=degree_bound) {
                return fail(format!("module {tested}: inexact at position {pos}"));
            }
        }
        if res.length() >= 1 {
            // kernel of the last differential is zero
            let last = res.complex.map(res.length() - 1);
            for d in 0..=degree_bound {
                if oracle::map_kernel_dim(last, d) != 0 {
                    return fail(format!("module {tested}: last differential has kernel"));
                }
            }
        }
        // H_0 of the resolution is the module: graded quotient dimensions
        for d in 0..=degree_bound {
            let from_res = if res.length() >= 1 {
                oracle::quotient_piece_dim(res.complex.module(0), res.complex.map(0).columns(), d)
            } else {
                oracle::DegreeBasis::new(res.complex.module(0), d).dim()
            };
            let from_m = oracle::quotient_piece_dim(m.ambient(), m.relations().columns(), d);
            if from_res != from_m {
                return fail(format!("module {tested}: H_0 mismatch in degree {d}"));
            }
        }
        // Euler characteristic: alternating sum of twisted free series
        let mut euler = RationalSeries::zero();
        let mut sign = 1i64;
        for module in res.complex.modules() {
            let mut part = RationalSeries::zero();
            for &t in module.twists() {
                part = part.add(&RationalSeries::free_ring(&ring).shifted(t));
            }
            euler = if sign > 0 {
                euler.add(&part)
            } else {
                euler.sub(&part)
            };
            sign = -sign;
        }
        if !euler.eq_series(&hilbert_series(&m)?) {
            return fail(format!("module {tested}: Euler characteristic"));
        }
        // two independent dimension computations must agree: the initial
        // monomial combinatorics and the pole order of the Hilbert series
        let hs = hilbert_series(&m)?;
        if !hs.is_zero() {
            let dim = dimension(&m)?;
            if dim != hs.pole_order_at_one() as i64 {
                return fail(format!(
                    "module {tested}: dimension {dim} vs pole order {}",
                    hs.pole_order_at_one()
                ));
            }
        }
        // Auslander-Buchsbaum cross-check: pd equals the top nonvanishing Ext
        if !hilbert_series(&m)?.is_zero() {
            let exts = homalg::ext_modules(&m, ring.nvars())?;
            let top_ext = exts
                .iter()
                .enumerate()
                .rev()
                .find(|(_, e)| !hilbert_series(e).map(|h| h.is_zero()).unwrap_or(true))
                .map(|(k, _)| k + 1)
                .unwrap_or(0);
            if top_ext != res.length() {
                return fail(format!(
                    "module {tested}: pd {} vs top Ext {top_ext}",
                    res.length()
                ));
            }
            let depth = syzygy::depth(&m)?;
            if depth < 0 || depth > ring.nvars() as i64 {
                return fail(format!("module {tested}: depth out of range"));
            }
            // Ext codimensions obey the regular-ring bound codim >= i
            for ec in syzygy::ext_codimensions(&m)? {
                if let Some(c) = ec.codim {
                    if c < ec.i as i64 {
                        return fail(format!(
                            "module {tested}: codim Ext^{} = {c} below the index",
                            ec.i
                        ));
                    }
                }
            }
        }
    }
    ok(format!(
        "{rounds} sampled modules, oracle to degree {degree_bound}"
    ))
}

fn additivity_properties(seed: u64, rounds: usize) -> Result<(bool, String)> {
    let mut rng = Rng::new(seed);
    for i in 0..rounds {
        let ring = sample::small_ring(&mut rng);
        let f = sample::module_map(&mut rng, &ring);
        if f.columns().is_empty() {
            continue;
        }
        // 0 -> ker f -> source -> im f -> 0
        let ker = kernel_module(&f)?;
        let im = image_presentation(&f)?;
        let middle = PresentedModule::free(f.source());
        let lhs = hilbert_series(&middle)?;
        let rhs = hilbert_series(&ker.module)?.add(&hilbert_series(&im)?);
        if !lhs.eq_series(&rhs) {
            return fail(format!("round {i}: additivity on kernel/free/image"));
        }
        // assembled sums add series
        let m = sample::presented_module(&mut rng, &ring);
        let sum = module_assemble(&[(m.clone(), 0), (im.clone(), 2)])?;
        let expect = hilbert_series(&m)?.add(&hilbert_series(&im)?.shifted(2));
        if !hilbert_series(&sum)?.eq_series(&expect) {
            return fail(format!("round {i}: additivity of direct sums"));
        }
    }
    ok(format!("{rounds} sampled exact sequences"))
}

fn syzygy_properties(seed: u64, rounds: usize) -> Result<(bool, String)> {
    let mut rng = Rng::new(seed);
    for i in 0..rounds {
        let ring = sample::small_ring(&mut rng);
        let m = sample::presented_module(&mut rng, &ring);
        let order = syzygy::syzygy_order(&m)?;
        // shift invariance
        let k = rng.below(5) as i64 - 2;
        if syzygy::syzygy_order(&m.shifted(k))? != order {
            return fail(format!("round {i}: shift invariance"));
        }
        // monotonicity
        let mut prev = true;
        for j in 1..=ring.nvars() {
            let now = syzygy::is_jth_syzygy(&m, j)?;
            if now && !prev {
                return fail(format!("round {i}: monotonicity violated at j={j}"));
            }
            prev = now;
        }
        // direct sum takes the minimum; adding a free summand keeps it
        let free = PresentedModule::free(&FreeModule::rank_n(&ring, 1));
        let sum = module_assemble(&[(m.clone(), 0), (free, 1)])?;
        if syzygy::syzygy_order(&sum)? != order {
            return fail(format!("round {i}: free summand changed the order"));
        }
        // kernels of maps into frees are at least first syzygies
        let f = sample::module_map(&mut rng, &ring);
        if !f.columns().is_empty() {
            let ker = kernel_module(&f)?;
            match syzygy::syzygy_order(&ker.module)? {
                SyzygyOrder::Infinite => {}
                SyzygyOrder::Finite(j) if j >= 1 => {}
                SyzygyOrder::Finite(j) => {
                    return fail(format!("round {i}: kernel has order {j}"));
                }
            }
        }
        // order bounded by depth for modules of full support
        if !hilbert_series(&m)?.is_zero() && dimension(&m)? == ring.nvars() as i64 {
            if let SyzygyOrder::Finite(j) = order {
                if (j as i64) > syzygy::depth(&m)? {
                    return fail(format!("round {i}: order exceeds depth"));
                }
            }
        }
    }
    ok(format!("{rounds} sampled modules"))
}

/// The reduced basis and kernel generators must be bit-identical no matter
/// how many worker threads reduce the S-pair batches.
fn thread_determinism() -> Result<(bool, String)> {
    let ring = GradedRing::standard(vec!["t1", "t2", "t3", "w"])?;
    let ambient = FreeModule::rank_n(&ring, 2);
    let mut gens = Vec::new();
    for i in 0..3usize {
        let y = parse_poly(&ring, &format!("t{0}^2+t{0}*w", i + 1))?;
        let other = parse_poly(&ring, &format!("t{}*w", (i % 3) + 1))?;
        gens.push(ModuleElement::new(&ambient, vec![y, other])?);
    }
    gens.push(ModuleElement::new(
        &ambient,
        vec![parse_poly(&ring, "w^2")?, parse_poly(&ring, "t1*t2+t3*w")?],
    )?);
    let inclusion = ModuleMap::from_columns(&ambient, gens.clone())?;

    let mut rendered: Vec<(String, String)> = Vec::new();
    for threads in [1usize, 2, 4] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| crate::error::Error::Internal(e.to_string()))?;
        let (gb_text, ker_text) = pool.install(|| -> Result<(String, String)> {
            let gb = reduced_groebner_basis_in(&ambient, &gens)?;
            let ker = kernel_module(&inclusion)?;
            Ok((
                crate::text::render_groebner(&gb),
                crate::text::render_module_file(&ker.module),
            ))
        })?;
        rendered.push((gb_text, ker_text));
    }
    if rendered.iter().any(|r| r != &rendered[0]) {
        return fail("outputs differ across thread counts");
    }
    ok("identical bases and kernels for 1, 2 and 4 threads")
}

/// Cached and freshly computed resolutions serialize identically.
fn cache_determinism() -> Result<(bool, String)> {
    let m = crate::text::parse_module_file("ring: t w deg 1 1\nambient: rank 1\nt\nw\nt^2+t*w\n")?;
    let fresh = crate::text::render_resolution(&minimal_free_resolution(&m, None)?);
    let dir = std::env::temp_dir().join(format!("syzalg-selftest-cache-{}", std::process::id()));
    let cache = crate::cache::Cache::open(&dir)
        .map_err(|e| crate::error::Error::Internal(e.to_string()))?;
    crate::cache::set_global_cache(Some(cache));
    let first = crate::text::render_resolution(&minimal_free_resolution(&m, None)?);
    let second = crate::text::render_resolution(&minimal_free_resolution(&m, None)?);
    crate::cache::set_global_cache(None);
    std::fs::remove_dir_all(&dir).ok();
    if first != fresh || second != fresh {
        return fail("cached and fresh resolutions differ");
    }
    ok("cache round trip is byte-identical")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_battery_passes() {
        let report = run_selftest(0x5EED, 6);
        for c in &report.checks {
            assert!(c.passed, "{}: {}", c.name, c.details);
        }
        assert!(report.passed);
        assert!(report.checks.len() >= 15);
    }
}
