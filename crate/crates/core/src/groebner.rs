//! Buchberger engine for submodules of graded free modules over GF(2).
//!
//! The engine keeps an append-only basis; every processed S-pair contributes
//! either a new basis element or a syzygy of the input generators, obtained
//! by tracking lifts through all reductions (Schreyer's construction). Pairs
//! skipped by the coprimality criterion contribute their Koszul syzygy; the
//! chain criterion cites only pairs decided earlier, which keeps the
//! recorded syzygies a generating set of the full syzygy module.

use crate::error::{Error, Result};
use crate::module::{FreeModule, ModuleElement, ModuleMap};
use crate::order::{ModTerm, ModuleOrder};
use crate::poly::Polynomial;
use crate::ring::{GradedRing, Monomial};
use rayon::prelude::*;
use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

/// Sorted-descending term vector; the engine's working representation.
type SVec = Vec<ModTerm>;

fn svec_from_element(ring: &GradedRing, order: &ModuleOrder, v: &ModuleElement) -> SVec {
    let mut terms: SVec = Vec::new();
    for (c, p) in v.coords().iter().enumerate() {
        terms.extend(p.terms().iter().map(|m| (*m, c)));
    }
    terms.sort_by(|a, b| order.cmp(ring, b, a));
    terms
}

fn svec_to_element(ambient: &Arc<FreeModule>, terms: &[ModTerm]) -> ModuleElement {
    let ring = ambient.ring();
    let mut buckets: Vec<Vec<Monomial>> = vec![Vec::new(); ambient.rank()];
    for (m, c) in terms {
        buckets[*c].push(*m);
    }
    let coords = buckets
        .into_iter()
        .map(|monos| Polynomial::from_monomials(ring, monos))
        .collect();
    ModuleElement::new(ambient, coords).expect("consistent construction")
}

/// Merge two descending term vectors, cancelling duplicates in pairs.
fn svec_add(ring: &GradedRing, order: &ModuleOrder, a: &[ModTerm], b: &[ModTerm]) -> SVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match order.cmp(ring, &a[i], &b[j]) {
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

fn svec_mul_mono(v: &[ModTerm], m: &Monomial) -> SVec {
    v.iter().map(|(t, c)| (t.mul(m), *c)).collect()
}

struct Elem {
    terms: SVec,
    /// Expression of `terms` as a combination of the input generators,
    /// kept in the plain Top order of the input index space.
    lift: SVec,
    sugar: i64,
    /// True when every term lives in the lead component; enables the
    /// product criterion, which is only valid in that case for modules.
    single_component: bool,
}

struct Reduced {
    terms: SVec,
    lift: SVec,
    sugar: i64,
}

pub(crate) struct Engine<'a> {
    ring: Arc<GradedRing>,
    order: ModuleOrder,
    target_twists: Vec<i64>,
    elems: Vec<Elem>,
    /// Elem indices per lead component, in insertion order.
    by_comp: Vec<Vec<usize>>,
    queue: BTreeSet<(i64, usize, usize)>,
    decided: HashSet<(usize, usize)>,
    syzygies: Vec<SVec>,
    collect_syzygies: bool,
    inputs: &'a [ModuleElement],
}

impl<'a> Engine<'a> {
    pub(crate) fn new(
        ambient: &Arc<FreeModule>,
        order: ModuleOrder,
        inputs: &'a [ModuleElement],
        collect_syzygies: bool,
    ) -> Result<Self> {
        let ring = ambient.ring().clone();
        if ring.nvars() == 0 {
            return Err(Error::InvalidInput("empty ring".into()));
        }
        for v in inputs {
            if v.ambient() != ambient {
                return Err(Error::AmbientMismatch);
            }
        }
        Ok(Engine {
            ring,
            order,
            target_twists: ambient.twists().to_vec(),
            elems: Vec::new(),
            by_comp: vec![Vec::new(); ambient.rank()],
            queue: BTreeSet::new(),
            decided: HashSet::new(),
            syzygies: Vec::new(),
            collect_syzygies,
            inputs,
        })
    }

    fn sugar_of(&self, terms: &[ModTerm]) -> i64 {
        terms
            .iter()
            .map(|(m, c)| self.ring.mono_degree(m) + self.target_twists[*c])
            .max()
            .unwrap_or(0)
    }

    fn lead(&self, k: usize) -> &ModTerm {
        &self.elems[k].terms[0]
    }

    /// Full normal form of (terms, lift) against the current basis; the lift
    /// accumulates every reduction step.
    fn reduce_full(
        &self,
        elems: &[Elem],
        mut terms: SVec,
        mut lift: SVec,
        mut sugar: i64,
    ) -> Reduced {
        let mut done: SVec = Vec::new();
        'outer: while let Some(lead) = terms.first().copied() {
            for &k in &self.by_comp[lead.1] {
                if k >= elems.len() {
                    break;
                }
                let red = &elems[k];
                let rl = &red.terms[0];
                if rl.1 == lead.1 && rl.0.divides(&lead.0) {
                    let m = rl.0.div_into(&lead.0);
                    terms = svec_add(
                        &self.ring,
                        &self.order,
                        &terms,
                        &svec_mul_mono(&red.terms, &m),
                    );
                    lift = svec_add_top(&self.ring, &lift, &svec_mul_mono(&red.lift, &m));
                    sugar = sugar.max(red.sugar + self.ring.mono_degree(&m));
                    continue 'outer;
                }
            }
            // lead irreducible: freeze it and keep reducing the tail
            done.push(lead);
            terms.remove(0);
        }
        Reduced {
            terms: done,
            lift,
            sugar,
        }
    }

    fn push_elem(&mut self, terms: SVec, lift: SVec, sugar: i64) {
        let idx = self.elems.len();
        let lead_comp = terms[0].1;
        let single_component = terms.iter().all(|(_, c)| *c == lead_comp);
        self.by_comp[lead_comp].push(idx);
        self.elems.push(Elem {
            terms,
            lift,
            sugar,
            single_component,
        });
        for prev in 0..idx {
            if self.lead(prev).1 == lead_comp {
                let key = self.pair_key(prev, idx);
                self.queue.insert(key);
            }
        }
    }

    fn pair_key(&self, i: usize, j: usize) -> (i64, usize, usize) {
        let (mi, _) = self.lead(i);
        let (mj, _) = self.lead(j);
        let lcm = mi.lcm(mj);
        let ui = mi.div_into(&lcm);
        let uj = mj.div_into(&lcm);
        let sugar = (self.elems[i].sugar + self.ring.mono_degree(&ui))
            .max(self.elems[j].sugar + self.ring.mono_degree(&uj));
        (sugar, i, j)
    }

    fn chain_criterion(&self, i: usize, j: usize) -> bool {
        let (mi, c) = *self.lead(i);
        let (mj, _) = *self.lead(j);
        let lcm = mi.lcm(&mj);
        for &k in &self.by_comp[c] {
            if k == i || k == j {
                continue;
            }
            if !self.lead(k).0.divides(&lcm) {
                continue;
            }
            let (a, b) = (i.min(k), i.max(k));
            let (p, q) = (j.min(k), j.max(k));
            if self.decided.contains(&(a, b)) && self.decided.contains(&(p, q)) {
                return true;
            }
        }
        false
    }

    fn product_criterion(&self, i: usize, j: usize) -> bool {
        self.elems[i].single_component
            && self.elems[j].single_component
            && self.lead(i).0.coprime(&self.lead(j).0)
    }

    /// Koszul syzygy of two single-component elements, mapped to input space.
    fn koszul_syzygy(&self, i: usize, j: usize) -> SVec {
        let mut acc: SVec = Vec::new();
        for (m, _) in &self.elems[j].terms {
            acc = svec_add_top(&self.ring, &acc, &svec_mul_mono(&self.elems[i].lift, m));
        }
        for (m, _) in &self.elems[i].terms {
            acc = svec_add_top(&self.ring, &acc, &svec_mul_mono(&self.elems[j].lift, m));
        }
        acc
    }

    fn spair(&self, i: usize, j: usize) -> (SVec, SVec, i64) {
        let (mi, _) = *self.lead(i);
        let (mj, _) = *self.lead(j);
        let lcm = mi.lcm(&mj);
        let ui = mi.div_into(&lcm);
        let uj = mj.div_into(&lcm);
        let terms = svec_add(
            &self.ring,
            &self.order,
            &svec_mul_mono(&self.elems[i].terms, &ui),
            &svec_mul_mono(&self.elems[j].terms, &uj),
        );
        let lift = svec_add_top(
            &self.ring,
            &svec_mul_mono(&self.elems[i].lift, &ui),
            &svec_mul_mono(&self.elems[j].lift, &uj),
        );
        let sugar = (self.elems[i].sugar + self.ring.mono_degree(&ui))
            .max(self.elems[j].sugar + self.ring.mono_degree(&uj));
        (terms, lift, sugar)
    }

    pub(crate) fn run(&mut self) {
        for (idx, v) in self.inputs.iter().enumerate() {
            let terms = svec_from_element(&self.ring, &self.order, v);
            let lift = vec![(Monomial::one(), idx)];
            if terms.is_empty() {
                if self.collect_syzygies {
                    self.syzygies.push(lift);
                }
                continue;
            }
            let sugar = self.sugar_of(&terms);
            self.push_elem(terms, lift, sugar);
        }

        while let Some(&(sugar, _, _)) = self.queue.iter().next() {
            // batch: every queued pair at the minimal sugar degree
            let batch: Vec<(i64, usize, usize)> = self
                .queue
                .iter()
                .take_while(|(s, _, _)| *s == sugar)
                .copied()
                .collect();
            for key in &batch {
                self.queue.remove(key);
            }
            let mut survivors: Vec<(usize, usize)> = Vec::new();
            for &(_, i, j) in &batch {
                if self.chain_criterion(i, j) {
                    self.decided.insert((i, j));
                    continue;
                }
                if self.product_criterion(i, j) {
                    if self.collect_syzygies {
                        let syz = self.koszul_syzygy(i, j);
                        if !syz.is_empty() {
                            self.syzygies.push(syz);
                        }
                    }
                    self.decided.insert((i, j));
                    continue;
                }
                survivors.push((i, j));
                self.decided.insert((i, j));
            }

            // reduce all survivors against the current snapshot, in parallel,
            // then merge sequentially in pair order for determinism
            let snapshot = self.elems.len();
            let reduced: Vec<Reduced> = if survivors.len() > 1 {
                survivors
                    .par_iter()
                    .map(|&(i, j)| {
                        let (t, l, s) = self.spair(i, j);
                        self.reduce_full(&self.elems[..snapshot], t, l, s)
                    })
                    .collect()
            } else {
                survivors
                    .iter()
                    .map(|&(i, j)| {
                        let (t, l, s) = self.spair(i, j);
                        self.reduce_full(&self.elems[..snapshot], t, l, s)
                    })
                    .collect()
            };

            for r in reduced {
                // re-reduce against elements appended earlier in this batch
                let r = if self.elems.len() > snapshot {
                    self.reduce_full(&self.elems, r.terms, r.lift, r.sugar)
                } else {
                    r
                };
                if r.terms.is_empty() {
                    if self.collect_syzygies && !r.lift.is_empty() {
                        self.syzygies.push(r.lift);
                    }
                } else {
                    self.push_elem(r.terms, r.lift, r.sugar);
                }
            }
        }
    }

    /// Normal form of an external element, with the accumulated lift.
    fn normal_form_with_lift(&self, v: &ModuleElement) -> (SVec, SVec) {
        let terms = svec_from_element(&self.ring, &self.order, v);
        let sugar = self.sugar_of(&terms);
        let r = self.reduce_full(&self.elems, terms, Vec::new(), sugar);
        (r.terms, r.lift)
    }

    /// Interreduced basis: minimal leads, tails in normal form, sorted
    /// ascending by leading term. This is the unique reduced basis.
    fn reduced_basis(&self) -> Vec<SVec> {
        let mut keep: Vec<usize> = Vec::new();
        let mut order: Vec<usize> = (0..self.elems.len()).collect();
        order.sort_by(|&a, &b| {
            self.order
                .cmp(&self.ring, &self.elems[a].terms[0], &self.elems[b].terms[0])
        });
        for &k in &order {
            let (m, c) = self.lead(k);
            let redundant = keep.iter().any(|&k2| {
                let (m2, c2) = self.lead(k2);
                *c2 == *c && m2.divides(m)
            });
            if !redundant {
                keep.push(k);
            }
        }
        // tail-reduce each kept element against the others
        let kept: Vec<&Elem> = keep.iter().map(|&k| &self.elems[k]).collect();
        let mut out: Vec<SVec> = Vec::new();
        for (pos, e) in kept.iter().enumerate() {
            let mut done: SVec = vec![e.terms[0]];
            let mut rest: SVec = e.terms[1..].to_vec();
            'outer: while let Some(lead) = rest.first().copied() {
                for (pos2, r) in kept.iter().enumerate() {
                    if pos2 == pos {
                        continue;
                    }
                    let rl = &r.terms[0];
                    if rl.1 == lead.1 && rl.0.divides(&lead.0) {
                        let m = rl.0.div_into(&lead.0);
                        rest =
                            svec_add(&self.ring, &self.order, &rest, &svec_mul_mono(&r.terms, &m));
                        continue 'outer;
                    }
                }
                done.push(lead);
                rest.remove(0);
            }
            out.push(done);
        }
        out
    }
}

/// Merge in the canonical Top order of the lift space.
fn svec_add_top(ring: &GradedRing, a: &[ModTerm], b: &[ModTerm]) -> SVec {
    let mut a = a.to_vec();
    let top = ModuleOrder::Top;
    a.sort_by(|x, y| top.cmp(ring, y, x));
    let mut b = b.to_vec();
    b.sort_by(|x, y| top.cmp(ring, y, x));
    svec_add(ring, &top, &a, &b)
}

/// Unique reduced Gröbner basis of a submodule of a graded free module, in
/// the degrevlex term-over-position order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroebnerBasis {
    ambient: Arc<FreeModule>,
    generators: Vec<ModuleElement>,
}

impl GroebnerBasis {
    /// Reassemble a basis from its serialized parts (cache path).
    pub fn from_parts(ambient: Arc<FreeModule>, generators: Vec<ModuleElement>) -> Result<Self> {
        for g in &generators {
            if g.ambient() != &ambient {
                return Err(Error::AmbientMismatch);
            }
        }
        Ok(GroebnerBasis {
            ambient,
            generators,
        })
    }

    pub fn ambient(&self) -> &Arc<FreeModule> {
        &self.ambient
    }

    pub fn generators(&self) -> &[ModuleElement] {
        &self.generators
    }

    /// Descriptor of the order the basis is reduced with respect to.
    pub fn order(&self) -> &'static str {
        "degrevlex term-over-position"
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Leading terms of the generators.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        let ring = self.ambient.ring();
        let order = ModuleOrder::Top;
        self.generators
            .iter()
            .map(|g| {
                let sv = svec_from_element(ring, &order, g);
                sv[0]
            })
            .collect()
    }
}

/// Compute the unique reduced Gröbner basis of the submodule generated by
/// `gens` inside their common ambient module.
pub fn reduced_groebner_basis(gens: &[ModuleElement]) -> Result<GroebnerBasis> {
    let ambient = match gens.first() {
        Some(g) => g.ambient().clone(),
        None => {
            return Err(Error::InvalidInput(
                "no generators and no ambient module".into(),
            ))
        }
    };
    reduced_groebner_basis_in(&ambient, gens)
}

pub fn reduced_groebner_basis_in(
    ambient: &Arc<FreeModule>,
    gens: &[ModuleElement],
) -> Result<GroebnerBasis> {
    let key_material = {
        let mut m = String::new();
        m.push_str(&format!(
            "{:?}|{:?}|",
            ambient.ring().var_names(),
            ambient.ring().var_degrees()
        ));
        m.push_str(&format!("{:?}|degrevlex-top|", ambient.twists()));
        for g in gens {
            m.push_str(&crate::text::render_element(g));
            m.push('\n');
        }
        m
    };
    let key = crate::cache::content_key("gb", &key_material);
    if let Some(payload) = crate::cache::global_get("gb", &key) {
        if let Ok(gb) = crate::text::parse_groebner(&payload) {
            if gb.ambient() == ambient {
                return Ok(gb);
            }
        }
    }
    let mut engine = Engine::new(ambient, ModuleOrder::Top, gens, false)?;
    engine.run();
    let generators = engine
        .reduced_basis()
        .into_iter()
        .map(|sv| svec_to_element(ambient, &sv))
        .collect();
    let gb = GroebnerBasis {
        ambient: ambient.clone(),
        generators,
    };
    crate::cache::global_put("gb", &key, &crate::text::render_groebner(&gb));
    Ok(gb)
}

/// Normal form of `v` against a reduced basis: no term of the result is
/// divisible by any leading term, and `v - result` lies in the submodule.
pub fn normal_form(v: &ModuleElement, gb: &GroebnerBasis) -> Result<ModuleElement> {
    if v.ambient() != &gb.ambient {
        return Err(Error::AmbientMismatch);
    }
    let ring = gb.ambient.ring();
    let order = ModuleOrder::Top;
    let reducers: Vec<(SVec, ModTerm)> = gb
        .generators
        .iter()
        .map(|g| {
            let sv = svec_from_element(ring, &order, g);
            let lead = sv[0];
            (sv, lead)
        })
        .collect();
    let mut rest = svec_from_element(ring, &order, v);
    let mut done: SVec = Vec::new();
    'outer: while let Some(lead) = rest.first().copied() {
        for (sv, rl) in &reducers {
            if rl.1 == lead.1 && rl.0.divides(&lead.0) {
                let m = rl.0.div_into(&lead.0);
                rest = svec_add(ring, &order, &rest, &svec_mul_mono(sv, &m));
                continue 'outer;
            }
        }
        done.push(lead);
        rest.remove(0);
    }
    Ok(svec_to_element(&gb.ambient, &done))
}

/// Leading terms of a reduced basis, minimalized under componentwise
/// divisibility.
pub fn initial_module(gb: &GroebnerBasis) -> Vec<(Monomial, usize)> {
    let leads = gb.leading_terms();
    let mut minimal: Vec<(Monomial, usize)> = Vec::new();
    for (m, c) in &leads {
        if !leads
            .iter()
            .any(|(m2, c2)| c2 == c && m2 != m && m2.divides(m))
            && !minimal.contains(&(*m, *c))
        {
            minimal.push((*m, *c));
        }
    }
    minimal
}

/// Generators of the syzygy module of `gens`: every element `v` of the
/// source free module with `Σ v_j · gens_j = 0` is a combination of the
/// returned elements, whose twists are the generator degrees.
pub(crate) fn syzygy_generators(
    ambient: &Arc<FreeModule>,
    order: ModuleOrder,
    gens: &[ModuleElement],
) -> Result<Vec<ModuleElement>> {
    let mut engine = Engine::new(ambient, order, gens, true)?;
    engine.run();
    let ring = ambient.ring();
    let twists: Vec<i64> = gens
        .iter()
        .map(|g| g.homogeneous_degree().unwrap_or(0))
        .collect();
    let source = FreeModule::new(ring, twists);
    Ok(engine
        .syzygies
        .iter()
        .map(|sv| svec_to_element(&source, sv))
        .collect())
}

/// Kernel generators of a module map, via Schreyer's construction on a
/// Gröbner basis of the image.
pub fn kernel_generators(f: &ModuleMap) -> Result<Vec<ModuleElement>> {
    let syz = syzygy_generators(f.target(), ModuleOrder::Top, f.columns())?;
    // re-hang the syzygies on the declared source (identical twists)
    syz.into_iter()
        .map(|s| ModuleElement::new(f.source(), s.coords().to_vec()))
        .collect()
}

/// Kernel generators of `f` computed with a caller-supplied order on the
/// target; resolution steps pass the Schreyer orders threaded through the
/// previous differentials.
pub(crate) fn kernel_generators_in_order(
    f: &ModuleMap,
    target_order: &ModuleOrder,
) -> Result<Vec<ModuleElement>> {
    let syz = syzygy_generators(f.target(), target_order.clone(), f.columns())?;
    syz.into_iter()
        .map(|s| ModuleElement::new(f.source(), s.coords().to_vec()))
        .collect()
}

/// The Schreyer order induced on the source of `f` by its column leads,
/// taken with respect to the order on the target.
pub(crate) fn schreyer_order_of(f: &ModuleMap, target_order: &ModuleOrder) -> ModuleOrder {
    let ring = f.ring();
    let leads: Vec<ModTerm> = f
        .columns()
        .iter()
        .map(|c| {
            let sv = svec_from_element(ring, target_order, c);
            sv.first().copied().unwrap_or((Monomial::one(), 0))
        })
        .collect();
    ModuleOrder::schreyer(leads, target_order.clone())
}

/// Express `v` as a combination of `gens`, if it lies in their span.
/// Returns one polynomial coefficient per generator.
pub fn express_in_terms(
    gens: &[ModuleElement],
    v: &ModuleElement,
) -> Result<Option<Vec<Polynomial>>> {
    let ambient = v.ambient();
    let mut engine = Engine::new(ambient, ModuleOrder::Top, gens, false)?;
    engine.run();
    let (nf, lift) = engine.normal_form_with_lift(v);
    if !nf.is_empty() {
        return Ok(None);
    }
    let ring = ambient.ring();
    let mut buckets: Vec<Vec<Monomial>> = vec![Vec::new(); gens.len()];
    for (m, c) in lift {
        buckets[c].push(m);
    }
    Ok(Some(
        buckets
            .into_iter()
            .map(|monos| Polynomial::from_monomials(ring, monos))
            .collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_poly;

    fn ideal_gens(ring: &Arc<GradedRing>, polys: &[&str]) -> (Arc<FreeModule>, Vec<ModuleElement>) {
        let ambient = FreeModule::rank_n(ring, 1);
        let gens = polys
            .iter()
            .map(|s| ModuleElement::new(&ambient, vec![parse_poly(ring, s).unwrap()]).unwrap())
            .collect();
        (ambient, gens)
    }

    #[test]
    fn reduced_basis_of_spec_ideal() {
        // <t^2 + tw, w> reduces to {w, t^2}
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let (_, gens) = ideal_gens(&r, &["t^2+t*w", "w"]);
        let gb = reduced_groebner_basis(&gens).unwrap();
        let printed: Vec<String> = gb
            .generators()
            .iter()
            .map(crate::text::render_element)
            .collect();
        assert_eq!(printed, vec!["w", "t^2"]);
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let ambient = FreeModule::rank_n(&r, 1);
        let zero = ambient.zero_element();
        let gb = reduced_groebner_basis_in(&ambient, &[zero]).unwrap();
        assert!(gb.is_empty());
        assert!(initial_module(&gb).is_empty());
    }

    #[test]
    fn normal_forms_against_spec_basis() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let (ambient, gens) = ideal_gens(&r, &["t^2+t*w", "w"]);
        let gb = reduced_groebner_basis(&gens).unwrap();
        let t3 = ModuleElement::new(&ambient, vec![parse_poly(&r, "t^3").unwrap()]).unwrap();
        assert!(normal_form(&t3, &gb).unwrap().is_zero());
        let t = ModuleElement::new(&ambient, vec![parse_poly(&r, "t").unwrap()]).unwrap();
        assert_eq!(normal_form(&t, &gb).unwrap(), t);
        // empty basis leaves elements untouched
        let empty = GroebnerBasis {
            ambient: ambient.clone(),
            generators: vec![],
        };
        assert_eq!(normal_form(&t, &empty).unwrap(), t);
        // idempotence
        let nf = normal_form(&t3, &gb).unwrap();
        assert_eq!(normal_form(&nf, &gb).unwrap(), nf);
    }

    #[test]
    fn generators_reduce_to_zero_against_their_basis() {
        let r = GradedRing::standard(vec!["t1", "t2", "t3", "w"]).unwrap();
        let ys: Vec<String> = (0..3).map(|i| format!("t{0}^2+t{0}*w", i + 1)).collect();
        let (_, gens) = ideal_gens(&r, &ys.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        let gb = reduced_groebner_basis(&gens).unwrap();
        for g in &gens {
            assert!(normal_form(g, &gb).unwrap().is_zero());
        }
    }

    #[test]
    fn initial_module_is_minimal() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let (_, gens) = ideal_gens(&r, &["t^2+t*w", "w"]);
        let gb = reduced_groebner_basis(&gens).unwrap();
        let init = initial_module(&gb);
        assert_eq!(init.len(), 2);
        // single generator: leading term t^2 under degrevlex
        let (_, gens2) = ideal_gens(&r, &["t^2+t*w"]);
        let gb2 = reduced_groebner_basis(&gens2).unwrap();
        let init2 = initial_module(&gb2);
        assert_eq!(init2, vec![(Monomial::from_exps(&[2, 0]), 0)]);
    }

    #[test]
    fn basis_independent_of_generator_order() {
        let r = GradedRing::standard(vec!["t1", "t2", "w"]).unwrap();
        let polys = ["t1^2+t1*w", "t2^2+t2*w", "t1*t2+w^2", "w^3"];
        let (_, gens) = ideal_gens(&r, &polys);
        let gb1 = reduced_groebner_basis(&gens).unwrap();
        let mut permuted = gens.clone();
        permuted.reverse();
        let gb2 = reduced_groebner_basis(&permuted).unwrap();
        assert_eq!(gb1, gb2);
        permuted.swap(0, 2);
        let gb3 = reduced_groebner_basis(&permuted).unwrap();
        assert_eq!(gb1, gb3);
    }

    #[test]
    fn koszul_kernel_of_two_variables() {
        // kernel of (a,b) -> at + bw is generated by (w, t)
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let target = FreeModule::rank_n(&r, 1);
        let cols = vec![
            ModuleElement::new(&target, vec![parse_poly(&r, "t").unwrap()]).unwrap(),
            ModuleElement::new(&target, vec![parse_poly(&r, "w").unwrap()]).unwrap(),
        ];
        let f = ModuleMap::from_columns(&target, cols).unwrap();
        let ker = kernel_generators(&f).unwrap();
        assert_eq!(ker.len(), 1);
        assert_eq!(crate::text::render_element(&ker[0]), "0: w; 1: t");
        assert!(f.apply(&ker[0]).unwrap().is_zero());
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let m = FreeModule::rank_n(&r, 2);
        let id = ModuleMap::identity(&m);
        assert!(kernel_generators(&id).unwrap().is_empty());
    }

    #[test]
    fn express_recovers_membership_witness() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        let (ambient, gens) = ideal_gens(&r, &["t^2+t*w", "w"]);
        let v = ModuleElement::new(&ambient, vec![parse_poly(&r, "t^3").unwrap()]).unwrap();
        let coeffs = express_in_terms(&gens, &v)
            .unwrap()
            .expect("t^3 is in the ideal");
        // check Σ c_i g_i = v
        let mut acc = ambient.zero_element();
        for (c, g) in coeffs.iter().zip(&gens) {
            acc = acc.add(&g.scale(c).unwrap()).unwrap();
        }
        assert_eq!(acc, v);
        let outside = ModuleElement::new(&ambient, vec![parse_poly(&r, "t").unwrap()]).unwrap();
        assert!(express_in_terms(&gens, &outside).unwrap().is_none());
    }
}
