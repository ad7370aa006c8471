//! Certificate text format: a header `chi <k>` or `omega <k>` followed by
//! `color <v> <c>` or `member <v>` lines with 0-based vertices. What the
//! solvers print, the checker reads back.

use std::io::{BufRead, Write};

use crate::graph::{CliqueCert, Coloring, Graph, VertexSet};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    Chi(Coloring),
    Omega(CliqueCert),
}

impl Certificate {
    pub fn value(&self) -> usize {
        match self {
            Certificate::Chi(c) => c.colors_used(),
            Certificate::Omega(c) => c.len(),
        }
    }
}

pub fn write_certificate<W: Write>(w: &mut W, cert: &Certificate) -> std::io::Result<()> {
    match cert {
        Certificate::Chi(coloring) => {
            writeln!(w, "chi {}", coloring.colors_used())?;
            for (v, c) in coloring.assignment().iter().enumerate() {
                writeln!(w, "color {v} {c}")?;
            }
        }
        Certificate::Omega(clique) => {
            writeln!(w, "omega {}", clique.len())?;
            for v in clique.vertices.iter() {
                writeln!(w, "member {v}")?;
            }
        }
    }
    Ok(())
}

pub fn certificate_to_string(cert: &Certificate) -> String {
    let mut buf = Vec::new();
    write_certificate(&mut buf, cert).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("certificates are ASCII")
}

pub fn read_certificate<R: BufRead>(reader: R) -> Result<Certificate> {
    let mut header: Option<(String, usize)> = None;
    let mut colors: Vec<(usize, usize)> = Vec::new();
    let mut members: Vec<usize> = Vec::new();

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        let err = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match (header.is_some(), fields[0]) {
            (false, kind @ ("chi" | "omega")) => {
                if fields.len() != 2 {
                    return Err(err(format!("expected `{kind} <k>`")));
                }
                let k = fields[1]
                    .parse()
                    .map_err(|_| err(format!("bad value `{}`", fields[1])))?;
                header = Some((kind.to_string(), k));
            }
            (false, other) => {
                return Err(err(format!(
                    "expected a `chi` or `omega` header, got `{other}`"
                )));
            }
            (true, "color") => {
                if fields.len() != 3 {
                    return Err(err("expected `color <v> <c>`".into()));
                }
                let v = fields[1].parse().map_err(|_| err("bad vertex".into()))?;
                let c = fields[2].parse().map_err(|_| err("bad color".into()))?;
                colors.push((v, c));
            }
            (true, "member") => {
                if fields.len() != 2 {
                    return Err(err("expected `member <v>`".into()));
                }
                members.push(fields[1].parse().map_err(|_| err("bad vertex".into()))?);
            }
            (true, other) => {
                return Err(err(format!("unknown line type `{other}`")));
            }
        }
    }

    match header {
        Some((kind, k)) if kind == "chi" => {
            if !members.is_empty() {
                return Err(Error::Parse("`member` lines in a chi certificate".into()));
            }
            let n = colors.len();
            let mut assignment = vec![0usize; n];
            for (v, c) in colors {
                if v >= n {
                    return Err(Error::Parse(format!(
                        "color line for vertex {v}, but only {n} color lines present"
                    )));
                }
                if assignment[v] != 0 {
                    return Err(Error::Parse(format!("vertex {v} colored twice")));
                }
                assignment[v] = c;
            }
            let coloring = Coloring::new(assignment)?;
            if coloring.colors_used() != k {
                return Err(Error::ClaimMismatch(format!(
                    "header says chi {k} but the coloring uses {} colors",
                    coloring.colors_used()
                )));
            }
            Ok(Certificate::Chi(coloring))
        }
        Some((_, k)) => {
            if !colors.is_empty() {
                return Err(Error::Parse("`color` lines in an omega certificate".into()));
            }
            let set = VertexSet::new(members.clone());
            if set.len() != members.len() {
                return Err(Error::Parse("duplicate clique member".into()));
            }
            if set.len() != k {
                return Err(Error::ClaimMismatch(format!(
                    "header says omega {k} but {} members are listed",
                    set.len()
                )));
            }
            Ok(Certificate::Omega(CliqueCert::new(set)))
        }
        None => Err(Error::Parse("empty certificate".into())),
    }
}

/// Check a certificate against a graph: the coloring must be total and
/// proper, the clique pairwise adjacent. Returns the certified value.
pub fn check_certificate(g: &Graph, cert: &Certificate) -> Result<usize> {
    match cert {
        Certificate::Chi(coloring) => {
            if coloring.assignment().len() != g.order() {
                return Err(Error::ClaimMismatch(format!(
                    "coloring covers {} vertices, graph has {}",
                    coloring.assignment().len(),
                    g.order()
                )));
            }
            if !coloring.is_proper_for(g) {
                return Err(Error::ClaimMismatch(
                    "the coloring is not proper for the graph".into(),
                ));
            }
            Ok(coloring.colors_used())
        }
        Certificate::Omega(clique) => {
            if !clique.is_valid_for(g) {
                return Err(Error::ClaimMismatch(
                    "the clique members are not pairwise adjacent".into(),
                ));
            }
            Ok(clique.len())
        }
    }
}
