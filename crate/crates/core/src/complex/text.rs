//! Line-oriented text formats for complexes and degeneracy tables.
//!
//! Complexes:
//!
//! ```text
//! semisimplicial <N_max>
//! simplex <id> <degree>
//! face <id> <i> <target-id>
//! ```
//!
//! or
//!
//! ```text
//! multisemisimplicial <l> <M_max>
//! simplex <id> <n1> .. <nl>
//! face <id> <p> <i> <target-id>      # p in 1..=l
//! ```
//!
//! Degeneracy tables are `s <j> <x> <value>` (`t` for the auxiliary table),
//! or `s <q> <j> <x> <value>` for multisemisimplicial input. Lines starting
//! with `#` are comments.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use super::multi::{MultiIndex, MultiSemiSimplicialSet, MultiSemiSimplicialSetBuilder};
use super::simplicial::{DegeneracyTable, MultiDegeneracyTable};
use super::single::{SemiSimplicialSet, SemiSimplicialSetBuilder, SimplexId};
use crate::error::{Error, Result};

/// A parsed complex file; the header decides which variant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Complex {
    Single(SemiSimplicialSet),
    Multi(MultiSemiSimplicialSet),
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(idx, raw)| {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            None
        } else {
            Some((idx + 1, line.split_whitespace().collect()))
        }
    })
}

fn num<T: FromStr>(line: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse().map_err(|_| parse_err(line, format!("expected {what}, found `{tok}`")))
}

fn arity(line: usize, toks: &[&str], want: usize) -> Result<()> {
    if toks.len() != want {
        return Err(parse_err(line, format!("`{}` takes {} fields, found {}", toks[0], want - 1, toks.len() - 1)));
    }
    Ok(())
}

/// Records declaration lines so that builder errors can be pinned to a line.
#[derive(Default)]
struct Lines {
    simplices: BTreeMap<SimplexId, usize>,
    faces: BTreeMap<(SimplexId, Option<usize>, usize), usize>,
}

impl Lines {
    fn locate(&self, err: Error, last: usize) -> Error {
        let line = match &err {
            Error::UnknownSimplex(id) => self.faces.iter().find(|(k, _)| k.0 == *id).map(|(_, &l)| l),
            Error::FaceIndexOutOfRange { simplex, axis, index }
            | Error::DanglingFace { simplex, axis, index, .. }
            | Error::FaceWrongDegree { simplex, axis, index, .. } => {
                self.faces.get(&(*simplex, *axis, *index)).copied()
            }
            Error::MissingFace { simplex, .. } => self.simplices.get(simplex).copied(),
            _ => None,
        };
        parse_err(line.unwrap_or(last), err.to_string())
    }
}

impl FromStr for Complex {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        parse_complex(text)
    }
}

pub fn parse_complex(text: &str) -> Result<Complex> {
    let mut lines = content_lines(text);
    let Some((hline, header)) = lines.next() else {
        return Err(parse_err(1, "empty input: missing header"));
    };
    match header[0] {
        "semisimplicial" => {
            arity(hline, &header, 2)?;
            let truncation = num(hline, header[1], "truncation degree")?;
            parse_single(truncation, hline, lines).map(Complex::Single)
        }
        "multisemisimplicial" => {
            arity(hline, &header, 3)?;
            let axes = num(hline, header[1], "axis count")?;
            let truncation = num(hline, header[2], "truncation degree")?;
            parse_multi(axes, truncation, hline, lines).map(Complex::Multi)
        }
        other => Err(parse_err(hline, format!("unknown header `{other}`"))),
    }
}

fn parse_single<'a>(
    truncation: usize,
    mut last: usize,
    lines: impl Iterator<Item = (usize, Vec<&'a str>)>,
) -> Result<SemiSimplicialSet> {
    let mut b = SemiSimplicialSetBuilder::new(truncation);
    let mut at = Lines::default();
    for (line, toks) in lines {
        last = line;
        match toks[0] {
            "simplex" => {
                arity(line, &toks, 3)?;
                let id = SimplexId(num(line, toks[1], "simplex id")?);
                let degree = num(line, toks[2], "degree")?;
                b.simplex(id, degree).map_err(|e| parse_err(line, e.to_string()))?;
                at.simplices.insert(id, line);
            }
            "face" => {
                arity(line, &toks, 4)?;
                let id = SimplexId(num(line, toks[1], "simplex id")?);
                let i = num(line, toks[2], "face index")?;
                let target = SimplexId(num(line, toks[3], "target id")?);
                b.face(id, i, target).map_err(|e| parse_err(line, e.to_string()))?;
                at.faces.insert((id, None, i), line);
            }
            other => return Err(parse_err(line, format!("unknown declaration `{other}`"))),
        }
    }
    b.build().map_err(|e| at.locate(e, last))
}

fn parse_multi<'a>(
    axes: usize,
    truncation: usize,
    mut last: usize,
    lines: impl Iterator<Item = (usize, Vec<&'a str>)>,
) -> Result<MultiSemiSimplicialSet> {
    let mut b = MultiSemiSimplicialSetBuilder::new(axes, truncation).map_err(|e| parse_err(last, e.to_string()))?;
    let mut at = Lines::default();
    for (line, toks) in lines {
        last = line;
        match toks[0] {
            "simplex" => {
                arity(line, &toks, 2 + axes)?;
                let id = SimplexId(num(line, toks[1], "simplex id")?);
                let entries =
                    toks[2..].iter().map(|t| num(line, t, "multi-index entry")).collect::<Result<Vec<usize>>>()?;
                b.simplex(id, MultiIndex::new(entries)).map_err(|e| parse_err(line, e.to_string()))?;
                at.simplices.insert(id, line);
            }
            "face" => {
                arity(line, &toks, 5)?;
                let id = SimplexId(num(line, toks[1], "simplex id")?);
                let p: usize = num(line, toks[2], "axis")?;
                if p == 0 || p > axes {
                    return Err(parse_err(line, format!("axis {p} outside 1..={axes}")));
                }
                let i = num(line, toks[3], "face index")?;
                let target = SimplexId(num(line, toks[4], "target id")?);
                b.face(id, p - 1, i, target).map_err(|e| parse_err(line, e.to_string()))?;
                at.faces.insert((id, Some(p - 1), i), line);
            }
            other => return Err(parse_err(line, format!("unknown declaration `{other}`"))),
        }
    }
    b.build().map_err(|e| at.locate(e, last))
}

pub fn write_complex(complex: &SemiSimplicialSet) -> String {
    let mut out = String::new();
    writeln!(out, "semisimplicial {}", complex.truncation()).unwrap();
    for (n, x) in complex.iter() {
        writeln!(out, "simplex {x} {n}").unwrap();
        for (i, f) in complex.faces(x).unwrap_or_default().iter().enumerate() {
            writeln!(out, "face {x} {i} {f}").unwrap();
        }
    }
    out
}

pub fn write_multi_complex(complex: &MultiSemiSimplicialSet) -> String {
    let mut out = String::new();
    writeln!(out, "multisemisimplicial {} {}", complex.axes(), complex.truncation()).unwrap();
    for (n, x) in complex.iter() {
        write!(out, "simplex {x}").unwrap();
        for v in n.entries() {
            write!(out, " {v}").unwrap();
        }
        out.push('\n');
        for p in 0..complex.axes() {
            if n.get(p) == 0 {
                continue;
            }
            for i in 0..=n.get(p) {
                writeln!(out, "face {x} {} {i} {}", p + 1, complex.face(x, p, i)).unwrap();
            }
        }
    }
    out
}

/// Writes `s` lines, then `t` lines when given.
pub fn write_table(s: &DegeneracyTable, t: Option<&DegeneracyTable>) -> String {
    let mut out = String::new();
    for (tag, table) in [("s", Some(s)), ("t", t)] {
        for (&(x, j), v) in table.into_iter().flatten() {
            writeln!(out, "{tag} {j} {x} {v}").unwrap();
        }
    }
    out
}

pub fn write_multi_table(s: &MultiDegeneracyTable, t: Option<&MultiDegeneracyTable>) -> String {
    let mut out = String::new();
    for (tag, table) in [("s", Some(s)), ("t", t)] {
        for (&(x, q, j), v) in table.into_iter().flatten() {
            writeln!(out, "{tag} {} {j} {x} {v}", q + 1).unwrap();
        }
    }
    out
}

/// Parses a single-axis table into its `s` and `t` parts.
pub fn parse_table(text: &str) -> Result<(DegeneracyTable, DegeneracyTable)> {
    let mut s = DegeneracyTable::new();
    let mut t = DegeneracyTable::new();
    for (line, toks) in content_lines(text) {
        let table = match toks[0] {
            "s" => &mut s,
            "t" => &mut t,
            other => return Err(parse_err(line, format!("unknown table entry `{other}`"))),
        };
        arity(line, &toks, 4)?;
        let j = num(line, toks[1], "index")?;
        let x = SimplexId(num(line, toks[2], "simplex id")?);
        let v = SimplexId(num(line, toks[3], "value id")?);
        if table.insert((x, j), v).is_some() {
            return Err(parse_err(line, format!("duplicate entry for index {j} of {x}")));
        }
    }
    Ok((s, t))
}

pub fn parse_multi_table(text: &str) -> Result<(MultiDegeneracyTable, MultiDegeneracyTable)> {
    let mut s = MultiDegeneracyTable::new();
    let mut t = MultiDegeneracyTable::new();
    for (line, toks) in content_lines(text) {
        let table = match toks[0] {
            "s" => &mut s,
            "t" => &mut t,
            other => return Err(parse_err(line, format!("unknown table entry `{other}`"))),
        };
        arity(line, &toks, 5)?;
        let q: usize = num(line, toks[1], "axis")?;
        if q == 0 {
            return Err(parse_err(line, "axes are numbered from 1"));
        }
        let j = num(line, toks[2], "index")?;
        let x = SimplexId(num(line, toks[3], "simplex id")?);
        let v = SimplexId(num(line, toks[4], "value id")?);
        if table.insert((x, q - 1, j), v).is_some() {
            return Err(parse_err(line, format!("duplicate entry for axis {q} index {j} of {x}")));
        }
    }
    Ok((s, t))
}
