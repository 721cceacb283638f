//! JSON certificate shapes shared by the library and the command line.

use crate::error::Result;
use crate::homalg::{BettiTable, Resolution};
use crate::series::{parse_zpoly, RationalSeries};
use serde::{Deserialize, Serialize};

/// Serialized rational series: numerator text over `(1-s^d)` factors.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct HilbertJson {
    pub num: String,
    pub den: Vec<i64>,
}

impl HilbertJson {
    pub fn of(series: &RationalSeries) -> Self {
        HilbertJson {
            num: series.numerator().to_string(),
            den: series.denominator_exponents().to_vec(),
        }
    }

    pub fn to_series(&self) -> Result<RationalSeries> {
        RationalSeries::new(parse_zpoly(&self.num)?, self.den.clone())
    }
}

/// Betti table plus Hilbert series, the `resolve` certificate payload.
#[derive(Debug, Clone, Serialize)]
pub struct ResolveCertificate {
    /// rows `[homological index, internal degree, rank]`
    pub betti: Vec<(usize, i64, usize)>,
    pub hilbert: HilbertJson,
}

impl ResolveCertificate {
    pub fn new(resolution: &Resolution, series: &RationalSeries) -> Self {
        ResolveCertificate {
            betti: betti_rows(&resolution.betti),
            hilbert: HilbertJson::of(series),
        }
    }
}

pub fn betti_rows(betti: &BettiTable) -> Vec<(usize, i64, usize)> {
    betti.entries().map(|((i, d), v)| (i, d, v)).collect()
}

/// One named entry of the free-extension series catalog: the total space
/// series, the base series, and the fiber factors.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeriesCatalogEntry {
    pub name: String,
    pub bk: HilbertJson,
    pub bg: HilbertJson,
    pub fibers: Vec<HilbertJson>,
}

impl SeriesCatalogEntry {
    pub fn chain(&self) -> Result<Vec<crate::series::RationalSeries>> {
        let mut out = vec![self.bk.to_series()?, self.bg.to_series()?];
        for f in &self.fibers {
            out.push(f.to_series()?);
        }
        Ok(out)
    }
}
