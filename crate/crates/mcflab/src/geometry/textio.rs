//! Plain-text geometry format with exact round-trip.
//!
//! One header line, then one vertex per line:
//!
//! ```text
//! curve n=512
//! 1 0
//! 0.9996988186962042 0.024541228522912288
//! ...
//! ```
//!
//! Surfaces use `axisym sphere n=256 m=64` or `axisym torus n=256 m=64`
//! followed by `r z` lines. Coordinates are written with Rust's shortest
//! round-trip float formatting, so parse(write(g)) reproduces the exact
//! bits.

use nalgebra::Vector2;
use std::fmt::Write as _;

use super::{AxisymmetricSurface, DiscreteCurve, Geometry, ProfileKind};

#[derive(Debug, thiserror::Error)]
pub enum TextIoError {
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error(transparent)]
    Geometry(#[from] super::GeometryError),
}

pub fn write_geometry(g: &Geometry) -> String {
    let mut out = String::new();
    match g {
        Geometry::Curve(c) => {
            writeln!(out, "curve n={}", c.len()).unwrap();
            for v in c.vertices() {
                writeln!(out, "{} {}", v.x, v.y).unwrap();
            }
        }
        Geometry::Axisym(s) => {
            let kind = match s.kind() {
                ProfileKind::SphereType => "sphere",
                ProfileKind::TorusType => "torus",
            };
            writeln!(out, "axisym {kind} n={} m={}", s.profile().len(), s.azimuthal_samples())
                .unwrap();
            for p in s.profile() {
                writeln!(out, "{} {}", p.x, p.y).unwrap();
            }
        }
    }
    out
}

fn parse_kv(tok: &str, key: &str, line: usize) -> Result<usize, TextIoError> {
    tok.strip_prefix(key)
        .and_then(|v| v.parse::<usize>().ok())
        .ok_or_else(|| TextIoError::Parse(line, format!("expected {key}<count>, got '{tok}'")))
}

pub fn read_geometry(text: &str) -> Result<Geometry, TextIoError> {
    let mut lines = text.lines().enumerate();
    let (hline, header) = lines
        .next()
        .ok_or_else(|| TextIoError::Parse(1, "empty input".into()))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    let parse_vertices = |lines: &mut dyn Iterator<Item = (usize, &str)>,
                          n: usize|
     -> Result<Vec<Vector2<f64>>, TextIoError> {
        let mut verts = Vec::with_capacity(n);
        for _ in 0..n {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| TextIoError::Parse(0, "unexpected end of vertex list".into()))?;
            let mut it = line.split_whitespace();
            let x: f64 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| TextIoError::Parse(ln + 1, "bad x coordinate".into()))?;
            let y: f64 = it
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| TextIoError::Parse(ln + 1, "bad y coordinate".into()))?;
            if it.next().is_some() {
                return Err(TextIoError::Parse(ln + 1, "trailing tokens".into()));
            }
            verts.push(Vector2::new(x, y));
        }
        Ok(verts)
    };
    match toks.as_slice() {
        ["curve", ntok] => {
            let n = parse_kv(ntok, "n=", hline + 1)?;
            let verts = parse_vertices(&mut lines, n)?;
            Ok(Geometry::Curve(DiscreteCurve::new(verts)?))
        }
        ["axisym", kind, ntok, mtok] => {
            let n = parse_kv(ntok, "n=", hline + 1)?;
            let m = parse_kv(mtok, "m=", hline + 1)?;
            let kind = match *kind {
                "sphere" => ProfileKind::SphereType,
                "torus" => ProfileKind::TorusType,
                other => {
                    return Err(TextIoError::Parse(
                        hline + 1,
                        format!("unknown axisym kind '{other}'"),
                    ))
                }
            };
            let profile = parse_vertices(&mut lines, n)?;
            Ok(Geometry::Axisym(AxisymmetricSurface::new(profile, kind, m)?))
        }
        _ => Err(TextIoError::Parse(
            hline + 1,
            format!("unrecognized header '{header}'"),
        )),
    }
}
