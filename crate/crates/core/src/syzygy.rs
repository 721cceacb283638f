//! Syzygy orders of finitely generated graded modules.
//!
//! Over the polynomial ring, a module is a j-th syzygy exactly when
//! `codim Ext^i(M, R) >= i + j` for all `i >= 1`; free modules are the
//! infinite-order case by the Hilbert syzygy theorem. Depth comes from the
//! Auslander-Buchsbaum identity.

use crate::borel::{BasisFreenessCertificate, BorelPair};
use crate::error::{Error, Result};
use crate::homalg::{
    self, base_change, dimension, hilbert_series, is_free, minimal_free_resolution,
};
use crate::module::PresentedModule;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

/// Largest `j` for which the module is a j-th syzygy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SyzygyOrder {
    Finite(usize),
    Infinite,
}

impl SyzygyOrder {
    pub fn is_infinite(&self) -> bool {
        matches!(self, SyzygyOrder::Infinite)
    }

    pub fn min(self, other: SyzygyOrder) -> SyzygyOrder {
        match (self, other) {
            (SyzygyOrder::Infinite, o) => o,
            (o, SyzygyOrder::Infinite) => o,
            (SyzygyOrder::Finite(a), SyzygyOrder::Finite(b)) => SyzygyOrder::Finite(a.min(b)),
        }
    }
}

impl std::fmt::Display for SyzygyOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SyzygyOrder::Finite(j) => write!(f, "{j}"),
            SyzygyOrder::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for SyzygyOrder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            SyzygyOrder::Finite(j) => s.serialize_u64(*j as u64),
            SyzygyOrder::Infinite => s.serialize_str("inf"),
        }
    }
}

/// Codimension of one Ext module; `None` encodes the zero module, whose
/// codimension is infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtCodim {
    pub i: usize,
    pub codim: Option<i64>,
}

impl Serialize for ExtCodim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&self.i)?;
        match self.codim {
            Some(c) => seq.serialize_element(&c)?,
            None => seq.serialize_element("inf")?,
        }
        seq.end()
    }
}

/// Full syzygy analysis backing the JSON certificate.
#[derive(Debug, Clone, Serialize)]
pub struct SyzygyAnalysis {
    pub syzygy_order: SyzygyOrder,
    pub ext_codims: Vec<ExtCodim>,
    pub depth: i64,
    pub pd: usize,
}

/// Depth via Auslander-Buchsbaum: number of variables minus the length of
/// the minimal free resolution. Undefined for the zero module.
pub fn depth(m: &PresentedModule) -> Result<i64> {
    if hilbert_series(m)?.is_zero() {
        return Err(Error::DepthOfZeroModule);
    }
    let res = minimal_free_resolution(m, None)?;
    Ok(m.ring().nvars() as i64 - res.length() as i64)
}

/// Ext codimensions for `i = 1..=nvars`.
pub fn ext_codimensions(m: &PresentedModule) -> Result<Vec<ExtCodim>> {
    let nvars = m.ring().nvars();
    let exts = homalg::ext_modules(m, nvars)?;
    let mut out = Vec::with_capacity(nvars);
    for (k, e) in exts.iter().enumerate() {
        let i = k + 1;
        let codim = if hilbert_series(e)?.is_zero() {
            None
        } else {
            Some(nvars as i64 - dimension(e)?)
        };
        out.push(ExtCodim { i, codim });
    }
    Ok(out)
}

fn order_from_codims(nvars: usize, codims: &[ExtCodim]) -> SyzygyOrder {
    let mut order = SyzygyOrder::Infinite;
    for ec in codims {
        if let Some(c) = ec.codim {
            let bound = (c - ec.i as i64).max(0) as usize;
            order = order.min(SyzygyOrder::Finite(bound));
        }
    }
    match order {
        SyzygyOrder::Finite(j) if j >= nvars => SyzygyOrder::Infinite,
        o => o,
    }
}

/// Whether `M` is a j-th syzygy, via the Ext-codimension criterion.
pub fn is_jth_syzygy(m: &PresentedModule, j: usize) -> Result<bool> {
    if j == 0 {
        return Ok(true);
    }
    let codims = ext_codimensions(m)?;
    Ok(codims
        .iter()
        .all(|ec| ec.codim.is_none_or(|c| c >= ec.i as i64 + j as i64)))
}

/// Largest `j` such that `M` is a j-th syzygy, with the promotion to
/// infinite verified against an independent freeness check.
pub fn syzygy_order(m: &PresentedModule) -> Result<SyzygyOrder> {
    Ok(analyze(m)?.syzygy_order)
}

pub fn analyze(m: &PresentedModule) -> Result<SyzygyAnalysis> {
    let nvars = m.ring().nvars();
    if hilbert_series(m)?.is_zero() {
        // the zero module is free of rank zero
        return Ok(SyzygyAnalysis {
            syzygy_order: SyzygyOrder::Infinite,
            ext_codims: (1..=nvars).map(|i| ExtCodim { i, codim: None }).collect(),
            depth: nvars as i64,
            pd: 0,
        });
    }
    let res = minimal_free_resolution(m, None)?;
    let pd = res.length();
    let codims = ext_codimensions(m)?;
    let order = order_from_codims(nvars, &codims);
    if order.is_infinite() && !is_free(m) {
        return Err(Error::Internal(
            "order reached the variable count but the module is not free".into(),
        ));
    }
    Ok(SyzygyAnalysis {
        syzygy_order: order,
        ext_codims: codims,
        depth: nvars as i64 - pd as i64,
        pd,
    })
}

/// Report of the syzygy-order transfer along a restriction map.
#[derive(Debug, Clone, Serialize)]
pub struct TransferReport {
    pub order_over_source: SyzygyOrder,
    pub order_over_target: SyzygyOrder,
    pub agree: bool,
}

/// Compare the syzygy order of a module over `R_G` with the order of its
/// base change to `R_H` along the restriction. Requires the freeness
/// certificate of the pair; refuses to run on a failed certificate.
pub fn syzygy_transfer_check(
    m: &PresentedModule,
    pair: &BorelPair,
    freeness: &BasisFreenessCertificate,
) -> Result<TransferReport> {
    if !freeness.passed {
        return Err(Error::InvalidInput(
            "freeness precondition failed: the target is not certified free over the image".into(),
        ));
    }
    if m.ring() != &pair.ring_g {
        return Err(Error::RingMismatch);
    }
    let order_over_source = syzygy_order(m)?;
    let changed = base_change(m, &pair.restriction)?;
    let order_over_target = syzygy_order(&changed)?;
    Ok(TransferReport {
        order_over_source,
        order_over_target,
        agree: order_over_source == order_over_target,
    })
}
