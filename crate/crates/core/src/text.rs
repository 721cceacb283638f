//! Textual syntax for polynomials and module files.
//!
//! Polynomials: terms joined by `+`, factors by `*`, powers by `^`, e.g.
//! `t1^2+t1*w`. The only admissible coefficient is an optional `1`; `0`
//! denotes the zero polynomial. Module elements are semicolon-separated
//! component polynomials.

use crate::error::{Error, Result};
use crate::module::{FreeModule, ModuleElement, ModuleMap, PresentedModule};
use crate::poly::Polynomial;
use crate::ring::{GradedRing, Monomial};
use std::sync::Arc;

pub fn render_poly(p: &Polynomial) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    p.terms()
        .iter()
        .map(|m| render_monomial(p.ring(), m))
        .collect::<Vec<_>>()
        .join("+")
}

pub fn render_monomial(ring: &GradedRing, m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for i in 0..ring.nvars() {
        let e = m.exp(i);
        if e == 1 {
            parts.push(ring.var_name(i).to_string());
        } else if e > 1 {
            parts.push(format!("{}^{}", ring.var_name(i), e));
        }
    }
    parts.join("*")
}

/// One element per line; each nonzero component rendered as `index: poly`,
/// components joined by `; `. Rank-1 elements render as a bare polynomial.
pub fn render_element(elem: &ModuleElement) -> String {
    let coords = elem.coords();
    if coords.len() == 1 {
        return render_poly(&coords[0]);
    }
    let parts: Vec<String> = coords
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .map(|(i, p)| format!("{}: {}", i, render_poly(p)))
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("; ")
    }
}

pub fn parse_poly(ring: &Arc<GradedRing>, input: &str) -> Result<Polynomial> {
    parse_poly_at(ring, input, 1, 1)
}

/// Parse with an externally supplied line/column origin for error reporting.
pub fn parse_poly_at(
    ring: &Arc<GradedRing>,
    input: &str,
    line: usize,
    col0: usize,
) -> Result<Polynomial> {
    let err = |col: usize, msg: String| Error::Parse {
        line,
        col: col0 + col,
        msg,
    };
    let bytes = input.as_bytes();
    let mut pos = 0usize;
    let mut monomials: Vec<Monomial> = Vec::new();
    let mut any = false;
    let mut is_zero_literal = false;

    loop {
        skip_ws(bytes, &mut pos);
        let term_start = pos;
        let mut mono = Monomial::one();
        let mut saw_factor = false;
        loop {
            skip_ws(bytes, &mut pos);
            if pos >= bytes.len() {
                break;
            }
            let c = bytes[pos];
            if c == b'1'
                && !bytes
                    .get(pos + 1)
                    .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
            {
                pos += 1;
                saw_factor = true;
            } else if c == b'0'
                && !bytes
                    .get(pos + 1)
                    .is_some_and(|b| b.is_ascii_alphanumeric() || *b == b'_')
            {
                if any || saw_factor || !rest_is_ws(bytes, pos + 1) {
                    return Err(err(pos, "`0` is only valid as the whole polynomial".into()));
                }
                pos += 1;
                is_zero_literal = true;
                saw_factor = true;
            } else if c.is_ascii_digit() {
                return Err(err(
                    pos,
                    "coefficients other than an optional 1 are not allowed".into(),
                ));
            } else if c.is_ascii_alphabetic() || c == b'_' {
                let start = pos;
                while pos < bytes.len()
                    && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
                {
                    pos += 1;
                }
                let name = &input[start..pos];
                let idx = ring
                    .var_index(name)
                    .ok_or_else(|| err(start, format!("unknown variable `{name}`")))?;
                let mut exp: u32 = 1;
                skip_ws(bytes, &mut pos);
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    skip_ws(bytes, &mut pos);
                    let dstart = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if dstart == pos {
                        return Err(err(dstart, "expected exponent after `^`".into()));
                    }
                    exp = input[dstart..pos]
                        .parse()
                        .map_err(|_| err(dstart, "exponent out of range".into()))?;
                    if exp > u16::MAX as u32 {
                        return Err(err(dstart, "exponent out of range".into()));
                    }
                }
                for _ in 0..exp {
                    mono = mono.mul(&Monomial::var(idx));
                }
                saw_factor = true;
            } else {
                break;
            }
            skip_ws(bytes, &mut pos);
            if pos < bytes.len() && bytes[pos] == b'*' {
                pos += 1;
                continue;
            }
            break;
        }
        if !saw_factor {
            return Err(err(term_start, "expected a term".into()));
        }
        if !is_zero_literal {
            monomials.push(mono);
        }
        any = true;
        skip_ws(bytes, &mut pos);
        if pos < bytes.len() && bytes[pos] == b'+' {
            pos += 1;
            continue;
        }
        break;
    }
    skip_ws(bytes, &mut pos);
    if pos != bytes.len() {
        return Err(err(
            pos,
            format!("unexpected character `{}`", &input[pos..pos + 1]),
        ));
    }
    Ok(Polynomial::from_monomials(ring, monomials))
}

fn skip_ws(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && (bytes[*pos] == b' ' || bytes[*pos] == b'\t') {
        *pos += 1;
    }
}

fn rest_is_ws(bytes: &[u8], from: usize) -> bool {
    bytes[from..]
        .iter()
        .all(|&b| b == b' ' || b == b'\t' || b == b'+' || b == b';' || b == b'\n')
}

/// Line-oriented module file:
///
/// ```text
/// ring: t1 t2 w deg 1 1 1
/// ambient: rank 2 twists 0,1
/// t1; w
/// t2^2+t1*w; 0
/// ```
///
/// Blank lines and lines starting with `#` are skipped. Every relation column
/// must be homogeneous with respect to the ambient twists.
pub fn parse_module_file(input: &str) -> Result<PresentedModule> {
    let mut ring: Option<Arc<GradedRing>> = None;
    let mut ambient: Option<Arc<FreeModule>> = None;
    let mut relations: Vec<ModuleElement> = Vec::new();

    for (lineno, raw) in input.lines().enumerate() {
        let line = lineno + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("ring:") {
            if ring.is_some() {
                return Err(Error::Parse {
                    line,
                    col: 1,
                    msg: "duplicate ring declaration".into(),
                });
            }
            ring = Some(parse_ring_decl(rest, line)?);
        } else if let Some(rest) = trimmed.strip_prefix("ambient:") {
            let r = ring.as_ref().ok_or(Error::Parse {
                line,
                col: 1,
                msg: "ambient declared before ring".into(),
            })?;
            if ambient.is_some() {
                return Err(Error::Parse {
                    line,
                    col: 1,
                    msg: "duplicate ambient declaration".into(),
                });
            }
            ambient = Some(parse_ambient_decl(r, rest, line)?);
        } else {
            let amb = ambient.as_ref().ok_or(Error::Parse {
                line,
                col: 1,
                msg: "relation appears before ambient declaration".into(),
            })?;
            let r = ring.as_ref().unwrap();
            let col_offset = raw.len() - raw.trim_start().len();
            let mut coords = Vec::with_capacity(amb.rank());
            let mut col = col_offset;
            for (k, chunk) in raw.trim_start().split(';').enumerate() {
                if k >= amb.rank() {
                    return Err(Error::Parse {
                        line,
                        col: col + 1,
                        msg: format!("relation has more than {} components", amb.rank()),
                    });
                }
                coords.push(parse_poly_at(r, chunk, line, col + 1)?);
                col += chunk.len() + 1;
            }
            while coords.len() < amb.rank() {
                coords.push(Polynomial::zero(r));
            }
            let elem = ModuleElement::new(amb, coords)?;
            if !elem.is_zero() && elem.homogeneous_degree().is_none() {
                return Err(Error::Parse {
                    line,
                    col: col_offset + 1,
                    msg: "relation column is not homogeneous".into(),
                });
            }
            relations.push(elem);
        }
    }

    let ambient = ambient.ok_or(Error::Parse {
        line: input.lines().count().max(1),
        col: 1,
        msg: "missing ambient declaration".into(),
    })?;
    let map = ModuleMap::from_columns(&ambient, relations)?;
    Ok(PresentedModule::new(map))
}

fn parse_ring_decl(rest: &str, line: usize) -> Result<Arc<GradedRing>> {
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    let deg_pos = tokens
        .iter()
        .position(|&t| t == "deg")
        .ok_or(Error::Parse {
            line,
            col: 1,
            msg: "ring declaration needs `deg` keyword".into(),
        })?;
    let names: Vec<String> = tokens[..deg_pos].iter().map(|s| s.to_string()).collect();
    let degrees = tokens[deg_pos + 1..]
        .iter()
        .map(|s| {
            s.parse::<i64>().map_err(|_| Error::Parse {
                line,
                col: 1,
                msg: format!("bad degree `{s}`"),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    if names.is_empty() || names.len() != degrees.len() {
        return Err(Error::Parse {
            line,
            col: 1,
            msg: "ring declaration needs one degree per variable".into(),
        });
    }
    GradedRing::new(names, degrees)
}

fn parse_ambient_decl(ring: &Arc<GradedRing>, rest: &str, line: usize) -> Result<Arc<FreeModule>> {
    let tokens: Vec<&str> = rest.split_whitespace().collect();
    let bad = |msg: &str| Error::Parse {
        line,
        col: 1,
        msg: msg.into(),
    };
    if tokens.len() < 2 || tokens[0] != "rank" {
        return Err(bad("ambient declaration must start with `rank R`"));
    }
    let rank: usize = tokens[1].parse().map_err(|_| bad("bad rank"))?;
    let twists = if tokens.len() >= 4 && tokens[2] == "twists" {
        let list = tokens[3..].join("");
        list.split(',')
            .map(|s| {
                s.trim().parse::<i64>().map_err(|_| Error::Parse {
                    line,
                    col: 1,
                    msg: format!("bad twist `{s}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?
    } else if tokens.len() == 2 {
        vec![0; rank]
    } else {
        return Err(bad("expected `rank R` or `rank R twists k1,...,kR`"));
    };
    if twists.len() != rank {
        return Err(bad("twist list length differs from rank"));
    }
    Ok(FreeModule::new(ring, twists))
}

/// Parse one element line as produced by [`render_element`].
pub fn parse_element(ambient: &Arc<FreeModule>, line: &str) -> Result<ModuleElement> {
    let ring = ambient.ring();
    let mut coords = vec![Polynomial::zero(ring); ambient.rank()];
    let trimmed = line.trim();
    if ambient.rank() == 1 {
        coords[0] = parse_poly(ring, trimmed)?;
        return ModuleElement::new(ambient, coords);
    }
    if trimmed == "0" {
        return ModuleElement::new(ambient, coords);
    }
    for chunk in trimmed.split(';') {
        let (idx, poly) = chunk.split_once(':').ok_or(Error::Parse {
            line: 1,
            col: 1,
            msg: format!("expected `index: polynomial` in `{chunk}`"),
        })?;
        let i: usize = idx.trim().parse().map_err(|_| Error::Parse {
            line: 1,
            col: 1,
            msg: format!("bad component index `{idx}`"),
        })?;
        if i >= ambient.rank() {
            return Err(Error::Parse {
                line: 1,
                col: 1,
                msg: format!("component index {i} out of range"),
            });
        }
        coords[i] = parse_poly(ring, poly)?;
    }
    ModuleElement::new(ambient, coords)
}

fn render_ring_line(ring: &GradedRing) -> String {
    let mut out = String::from("ring:");
    for v in ring.var_names() {
        out.push(' ');
        out.push_str(v);
    }
    out.push_str(" deg");
    for d in ring.var_degrees() {
        out.push_str(&format!(" {d}"));
    }
    out
}

fn render_twists(twists: &[i64]) -> String {
    if twists.is_empty() {
        "-".to_string()
    } else {
        twists
            .iter()
            .map(|t| t.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

fn parse_twists(text: &str) -> Result<Vec<i64>> {
    if text == "-" {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<i64>()
                .map_err(|_| Error::InvalidInput(format!("bad twist `{s}`")))
        })
        .collect()
}

/// Serialize a reduced basis for the cache: ambient twists, then one
/// generator per line.
pub fn render_groebner(gb: &crate::groebner::GroebnerBasis) -> String {
    let mut out = String::new();
    out.push_str(&render_ring_line(gb.ambient().ring()));
    out.push('\n');
    out.push_str(&format!(
        "twists: {}\n",
        render_twists(gb.ambient().twists())
    ));
    for g in gb.generators() {
        out.push_str(&render_element(g));
        out.push('\n');
    }
    out
}

pub fn parse_groebner(payload: &str) -> Result<crate::groebner::GroebnerBasis> {
    let mut lines = payload.lines();
    let ring_line = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty basis payload".into()))?;
    let ring = parse_ring_decl(
        ring_line
            .strip_prefix("ring:")
            .ok_or_else(|| Error::InvalidInput("missing ring line".into()))?,
        1,
    )?;
    let twists_line = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("missing twists".into()))?;
    let twists = parse_twists(
        twists_line
            .strip_prefix("twists: ")
            .ok_or_else(|| Error::InvalidInput("missing twists".into()))?,
    )?;
    let ambient = FreeModule::new(&ring, twists);
    let gens = lines
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_element(&ambient, l))
        .collect::<Result<Vec<_>>>()?;
    crate::groebner::GroebnerBasis::from_parts(ambient, gens)
}

/// Serialize a resolution for the cache.
pub fn render_resolution(res: &crate::homalg::Resolution) -> String {
    let mut out = String::new();
    let f0 = res.complex.module(0);
    out.push_str(&render_ring_line(f0.ring()));
    out.push('\n');
    out.push_str(&format!("module: {}\n", render_twists(f0.twists())));
    for map in res.complex.maps() {
        out.push_str(&format!("map: {}\n", render_twists(map.source().twists())));
        for col in map.columns() {
            out.push_str(&render_element(col));
            out.push('\n');
        }
    }
    out
}

pub fn parse_resolution(payload: &str) -> Result<crate::homalg::Resolution> {
    let mut lines = payload.lines().peekable();
    let ring_line = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("empty resolution payload".into()))?;
    let ring = parse_ring_decl(
        ring_line
            .strip_prefix("ring:")
            .ok_or_else(|| Error::InvalidInput("missing ring line".into()))?,
        1,
    )?;
    let module_line = lines
        .next()
        .ok_or_else(|| Error::InvalidInput("missing module line".into()))?;
    let twists = parse_twists(
        module_line
            .strip_prefix("module: ")
            .ok_or_else(|| Error::InvalidInput("missing module line".into()))?,
    )?;
    let mut modules = vec![FreeModule::new(&ring, twists)];
    let mut maps = Vec::new();
    while let Some(line) = lines.next() {
        if line.trim().is_empty() {
            continue;
        }
        let src_twists = parse_twists(
            line.strip_prefix("map: ")
                .ok_or_else(|| Error::InvalidInput(format!("expected map line, got `{line}`")))?,
        )?;
        let target = modules.last().unwrap().clone();
        let source = FreeModule::new(&ring, src_twists);
        let mut columns = Vec::with_capacity(source.rank());
        for _ in 0..source.rank() {
            let col_line = lines
                .next()
                .ok_or_else(|| Error::InvalidInput("truncated resolution payload".into()))?;
            columns.push(parse_element(&target, col_line)?);
        }
        maps.push(ModuleMap::new(&source, &target, columns)?);
        modules.push(maps.last().unwrap().source().clone());
    }
    let complex = crate::homalg::ChainComplex::new(modules, maps)?;
    let betti = crate::homalg::BettiTable::from_complex(&complex);
    Ok(crate::homalg::Resolution { complex, betti })
}

/// Render a presented module in the same file format.
pub fn render_module_file(m: &PresentedModule) -> String {
    let ring = m.ring();
    let mut out = String::new();
    out.push_str("ring:");
    for v in ring.var_names() {
        out.push(' ');
        out.push_str(v);
    }
    out.push_str(" deg");
    for d in ring.var_degrees() {
        out.push_str(&format!(" {d}"));
    }
    out.push('\n');
    let twists: Vec<String> = m.ambient().twists().iter().map(|t| t.to_string()).collect();
    out.push_str(&format!(
        "ambient: rank {} twists {}\n",
        m.ambient().rank(),
        twists.join(",")
    ));
    for col in m.relations().columns() {
        let parts: Vec<String> = col.coords().iter().map(render_poly).collect();
        out.push_str(&parts.join("; "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render_round_trip() {
        let r = GradedRing::standard(vec!["t1", "t2", "w"]).unwrap();
        for text in ["t1^2+t1*w", "1", "0", "t1*t2*w", "t2^3+1"] {
            let p = parse_poly(&r, text).unwrap();
            assert_eq!(render_poly(&p), text, "round trip of {text}");
        }
        // canonical ordering independent of input order
        let a = parse_poly(&r, "t1*w+t1^2").unwrap();
        let b = parse_poly(&r, "t1^2+t1*w").unwrap();
        assert_eq!(a, b);
        assert_eq!(render_poly(&a), "t1^2+t1*w");
    }

    #[test]
    fn parser_rejects_coefficients() {
        let r = GradedRing::standard(vec!["t", "w"]).unwrap();
        assert!(parse_poly(&r, "2*t").is_err());
        assert!(parse_poly(&r, "t+3").is_err());
        assert!(parse_poly(&r, "x").is_err());
        assert!(parse_poly(&r, "t^").is_err());
        assert!(parse_poly(&r, "t+0").is_err());
        // whitespace and explicit 1 coefficient are fine
        assert!(parse_poly(&r, " 1*t + w ").is_ok());
    }

    #[test]
    fn module_file_parsing() {
        let text =
            "# residue field of GF(2)[t,w]\nring: t w deg 1 1\nambient: rank 1 twists 0\nt\nw\n";
        let m = parse_module_file(text).unwrap();
        assert_eq!(m.ambient().rank(), 1);
        assert_eq!(m.relations().columns().len(), 2);
        let rendered = render_module_file(&m);
        let again = parse_module_file(&rendered).unwrap();
        assert_eq!(render_module_file(&again), rendered);
    }

    #[test]
    fn module_file_errors_carry_position() {
        let bad = "ring: t w deg 1 1\nambient: rank 1\nt+q\n";
        match parse_module_file(bad) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        let inhom = "ring: t w deg 1 1\nambient: rank 1\nt+w^2\n";
        match parse_module_file(inhom) {
            Err(Error::Parse { line, msg, .. }) => {
                assert_eq!(line, 3);
                assert!(msg.contains("homogeneous"));
            }
            other => panic!("expected homogeneity error, got {other:?}"),
        }
    }
}
