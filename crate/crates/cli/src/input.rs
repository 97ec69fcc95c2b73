//! Graph, weight and point files.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use chordalpoly::rational::{self, Rational};
use chordalpoly::{parse_graph, ExtendedVector, Graph};

/// A file's contents together with its path, for error context and digests.
pub struct Source {
    pub path: String,
    pub text: String,
}

impl Source {
    pub fn read(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
        Ok(Source {
            path: path.display().to_string(),
            text,
        })
    }
}

pub fn load_graph(src: &Source) -> Result<Graph> {
    parse_graph(&src.text).with_context(|| format!("{}: invalid graph", src.path))
}

/// Parses `v <id> <rational>` and `e <u> <v> <rational>` lines (1-based ids)
/// into a vector over `V ⊎ E`. Unmentioned items are zero; a repeated item
/// is an error.
pub fn parse_vector(text: &str, g: &Graph) -> Result<ExtendedVector> {
    let mut p = ExtendedVector::zeros(g);
    let mut seen = vec![false; g.dim()];
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let vertex = |tok: &str| -> Result<usize> {
            match tok.parse::<usize>() {
                Ok(v) if (1..=g.n()).contains(&v) => Ok(v - 1),
                _ => bail!("line {line_no}: unknown vertex `{tok}`"),
            }
        };
        let value = |tok: &str| -> Result<Rational> {
            rational::parse(tok).with_context(|| format!("line {line_no}: bad rational `{tok}`"))
        };
        let (coord, val) = match tokens.as_slice() {
            ["v", id, val] => (vertex(id)?, value(val)?),
            ["e", a, b, val] => {
                let (u, v) = (vertex(a)?, vertex(b)?);
                let e = g
                    .edge_index(u, v)
                    .with_context(|| format!("line {line_no}: {a}-{b} is not an edge"))?;
                (g.n() + e, value(val)?)
            }
            _ => bail!("line {line_no}: expected `v <id> <value>` or `e <u> <v> <value>`"),
        };
        if std::mem::replace(&mut seen[coord], true) {
            bail!("line {line_no}: item given twice");
        }
        if coord < g.n() {
            p.x[coord] = val;
        } else {
            p.y[coord - g.n()] = val;
        }
    }
    Ok(p)
}

pub fn load_vector(src: &Source, g: &Graph) -> Result<ExtendedVector> {
    parse_vector(&src.text, g).with_context(|| format!("{}: invalid vector file", src.path))
}

/// Renders a vector in the same format, skipping zeros.
pub fn format_vector(p: &ExtendedVector, g: &Graph) -> String {
    use num_traits::Zero;
    let mut s = String::new();
    for (v, val) in p.x.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
        s.push_str(&format!("v {} {}\n", v + 1, rational::format(val)));
    }
    for (e, val) in p.y.iter().enumerate().filter(|(_, r)| !r.is_zero()) {
        let (u, v) = g.edge(e);
        s.push_str(&format!("e {} {} {}\n", u + 1, v + 1, rational::format(val)));
    }
    s
}
