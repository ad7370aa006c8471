//! DIMACS `.col` reading and writing.
//!
//! The format: comment lines start with `c`, one header `p edge <n> <m>`,
//! then edge lines `e <u> <v>` with 1-based endpoints. Writing is canonical:
//! each undirected edge appears once as `e u v` with u < v, sorted
//! lexicographically, so `read(write(G))` reproduces `G` exactly.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use crate::graph::Graph;
use crate::{Error, Result};

pub fn read_col<R: BufRead>(reader: R) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        let err = |msg: String| Error::Parse(format!("line {}: {msg}", lineno + 1));
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if order.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                if fields.len() != 4 {
                    return Err(err(format!("expected `p edge <n> <m>`, got `{line}`")));
                }
                let n: usize = fields[2]
                    .parse()
                    .map_err(|_| err(format!("bad vertex count `{}`", fields[2])))?;
                // The declared edge count is not trusted; duplicate or
                // mirrored edge lines occur in the wild.
                fields[3]
                    .parse::<usize>()
                    .map_err(|_| err(format!("bad edge count `{}`", fields[3])))?;
                order = Some(n);
            }
            "e" => {
                let n = order.ok_or_else(|| err("edge line before problem line".into()))?;
                if fields.len() != 3 {
                    return Err(err(format!("expected `e <u> <v>`, got `{line}`")));
                }
                let u: usize = fields[1]
                    .parse()
                    .map_err(|_| err(format!("bad endpoint `{}`", fields[1])))?;
                let v: usize = fields[2]
                    .parse()
                    .map_err(|_| err(format!("bad endpoint `{}`", fields[2])))?;
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(format!(
                        "endpoint out of range 1..={n} in `{line}`"
                    )));
                }
                if u == v {
                    return Err(Error::SelfLoop(u - 1));
                }
                edges.push((u - 1, v - 1));
            }
            other => {
                return Err(err(format!("unknown line type `{other}`")));
            }
        }
    }

    let order = order.ok_or_else(|| Error::Parse("missing problem line".into()))?;
    Graph::from_edges(order, &edges)
}

pub fn read_col_path<P: AsRef<Path>>(path: P) -> Result<Graph> {
    let file = File::open(path.as_ref()).map_err(|e| {
        Error::Parse(format!("cannot open {}: {e}", path.as_ref().display()))
    })?;
    read_col(BufReader::new(file))
}

pub fn write_col<W: Write>(writer: &mut W, g: &Graph) -> std::io::Result<()> {
    writeln!(writer, "p edge {} {}", g.order(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(writer, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn write_col_path<P: AsRef<Path>>(path: P, g: &Graph) -> Result<()> {
    let mut out = BufWriter::new(File::create(path)?);
    write_col(&mut out, g)?;
    Ok(())
}

/// Canonical text form of a graph, handy for byte-identity checks.
pub fn to_col_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write_col(&mut buf, g).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("col output is ASCII")
}
