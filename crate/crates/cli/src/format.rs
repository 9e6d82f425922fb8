//! Line-oriented instance files. Vertices, sets and elements are 1-indexed
//! in files and 0-indexed in memory.
//!
//! ```text
//! c <comment>
//! p dwc <n> <m> <k>
//! w <v> <weight>          exactly n lines
//! e <u> <v>               exactly m lines, u < v
//!
//! p interval <n> <k>
//! i <v> <left> <right> <weight>
//!
//! p setcover <|U|> <|S|> <ell>
//! s <set-id> <elem>...
//! ```

use std::fmt::Write as _;

use dualcolor::lab::{Interval, IntervalRepresentation, SetCoverInstance};
use dualcolor::{DualInstance, WeightedGraph};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing problem line")]
    MissingHeader,
    #[error("expected a {expected} file, found {found}")]
    WrongKind { expected: &'static str, found: &'static str },
    #[error(transparent)]
    Model(#[from] dualcolor::Error),
}

type Result<T> = std::result::Result<T, FormatError>;

/// Any of the three instance kinds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Instance {
    Dwc(DualInstance),
    Interval(DualInstance, IntervalRepresentation),
    SetCover(SetCoverInstance),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Dwc(_) => "dwc",
            Instance::Interval(..) => "interval",
            Instance::SetCover(_) => "setcover",
        }
    }

    /// The coloring instance; set-cover files go through the reduction.
    pub fn to_dual(&self) -> Result<DualInstance> {
        Ok(match self {
            Instance::Dwc(inst) | Instance::Interval(inst, _) => inst.clone(),
            Instance::SetCover(sc) => dualcolor::lab::reduce_setcover(sc)?,
        })
    }
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
        }
    }
}

impl<'a> Iterator for Lines<'a> {
    /// 1-based line number and whitespace-separated fields.
    type Item = (usize, Vec<&'a str>);

    fn next(&mut self) -> Option<Self::Item> {
        for (i, line) in self.inner.by_ref() {
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields.is_empty() || fields[0] == "c" {
                continue;
            }
            return Some((i + 1, fields));
        }
        None
    }
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, field: &str, what: &str) -> Result<T> {
    field
        .parse()
        .map_err(|_| syntax(line, format!("invalid {what} '{field}'")))
}

/// A 1-indexed id in `1..=n`, returned 0-indexed.
fn id(line: usize, field: &str, n: usize, what: &str) -> Result<usize> {
    let v: usize = number(line, field, what)?;
    if v == 0 || v > n {
        return Err(syntax(line, format!("{what} {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

fn arity(line: usize, fields: &[&str], expected: usize) -> Result<()> {
    if fields.len() != expected {
        return Err(syntax(
            line,
            format!("'{}' expects {} fields, found {}", fields[0], expected - 1, fields.len() - 1),
        ));
    }
    Ok(())
}

/// Parses any instance file, dispatching on the problem line.
pub fn parse(text: &str) -> Result<Instance> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    if header[0] != "p" || header.len() < 2 {
        return Err(syntax(line, "the first non-comment line must be a problem line"));
    }
    match header[1] {
        "dwc" => parse_dwc_body(line, &header, lines).map(Instance::Dwc),
        "interval" => parse_interval_body(line, &header, lines).map(|(i, r)| Instance::Interval(i, r)),
        "setcover" => parse_setcover_body(line, &header, lines).map(Instance::SetCover),
        other => Err(syntax(line, format!("unknown problem kind '{other}'"))),
    }
}

pub fn parse_dwc(text: &str) -> Result<DualInstance> {
    match parse(text)? {
        Instance::Dwc(inst) => Ok(inst),
        other => Err(FormatError::WrongKind {
            expected: "dwc",
            found: other.kind(),
        }),
    }
}

fn parse_dwc_body(line: usize, header: &[&str], lines: Lines) -> Result<DualInstance> {
    arity(line, header, 5)?;
    let n: usize = number(line, header[2], "vertex count")?;
    let m: usize = number(line, header[3], "edge count")?;
    let k: u64 = number(line, header[4], "parameter")?;
    let mut weights: Vec<Option<u64>> = vec![None; n];
    let mut edges = Vec::with_capacity(m);
    for (line, fields) in lines {
        match fields[0] {
            "w" => {
                arity(line, &fields, 3)?;
                let v = id(line, fields[1], n, "vertex")?;
                let w: u64 = number(line, fields[2], "weight")?;
                if w == 0 {
                    return Err(syntax(line, "weights must be positive"));
                }
                if weights[v].replace(w).is_some() {
                    return Err(syntax(line, format!("vertex {} weighted twice", v + 1)));
                }
            }
            "e" => {
                arity(line, &fields, 3)?;
                let u = id(line, fields[1], n, "vertex")?;
                let v = id(line, fields[2], n, "vertex")?;
                if u >= v {
                    return Err(syntax(line, "edges must be written as 'e u v' with u < v"));
                }
                edges.push((u, v));
            }
            other => return Err(syntax(line, format!("unexpected '{other}' line in a dwc file"))),
        }
    }
    if let Some(v) = weights.iter().position(Option::is_none) {
        return Err(syntax(line, format!("vertex {} has no weight line", v + 1)));
    }
    if edges.len() != m {
        return Err(syntax(line, format!("header announces {m} edges, found {}", edges.len())));
    }
    let weights = weights.into_iter().map(Option::unwrap).collect();
    let graph = WeightedGraph::new(n, &edges, weights)?;
    Ok(DualInstance::new(graph, k)?)
}

fn parse_interval_body(line: usize, header: &[&str], lines: Lines) -> Result<(DualInstance, IntervalRepresentation)> {
    arity(line, header, 4)?;
    let n: usize = number(line, header[2], "vertex count")?;
    let k: u64 = number(line, header[3], "parameter")?;
    let mut slots: Vec<Option<(Interval, u64)>> = vec![None; n];
    for (line, fields) in lines {
        if fields[0] != "i" {
            return Err(syntax(line, format!("unexpected '{}' line in an interval file", fields[0])));
        }
        arity(line, &fields, 5)?;
        let v = id(line, fields[1], n, "vertex")?;
        let left: i64 = number(line, fields[2], "left endpoint")?;
        let right: i64 = number(line, fields[3], "right endpoint")?;
        let w: u64 = number(line, fields[4], "weight")?;
        if slots[v].replace((Interval::new(left, right), w)).is_some() {
            return Err(syntax(line, format!("vertex {} given twice", v + 1)));
        }
    }
    if let Some(v) = slots.iter().position(Option::is_none) {
        return Err(syntax(line, format!("vertex {} has no interval line", v + 1)));
    }
    let (intervals, weights) = slots.into_iter().map(Option::unwrap).unzip();
    let rep = IntervalRepresentation::new(intervals, weights)?;
    let inst = DualInstance::new(rep.to_graph(), k)?;
    Ok((inst, rep))
}

fn parse_setcover_body(line: usize, header: &[&str], lines: Lines) -> Result<SetCoverInstance> {
    arity(line, header, 5)?;
    let universe: usize = number(line, header[2], "universe size")?;
    let count: usize = number(line, header[3], "set count")?;
    let budget: usize = number(line, header[4], "budget")?;
    let mut sets: Vec<Option<Vec<usize>>> = vec![None; count];
    for (line, fields) in lines {
        if fields[0] != "s" || fields.len() < 2 {
            return Err(syntax(line, "expected 's <set-id> <elem>...'"));
        }
        let s = id(line, fields[1], count, "set")?;
        let elems = fields[2..]
            .iter()
            .map(|f| id(line, f, universe, "element"))
            .collect::<Result<Vec<_>>>()?;
        if sets[s].replace(elems).is_some() {
            return Err(syntax(line, format!("set {} given twice", s + 1)));
        }
    }
    if let Some(s) = sets.iter().position(Option::is_none) {
        return Err(syntax(line, format!("set {} is missing", s + 1)));
    }
    Ok(SetCoverInstance::new(
        universe,
        sets.into_iter().map(Option::unwrap).collect(),
        budget,
    )?)
}

/// Canonical dwc text: weights in vertex order, edges sorted.
pub fn write_dwc(inst: &DualInstance, comment: Option<&str>) -> String {
    let g = &inst.graph;
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            writeln!(out, "c {line}").unwrap();
        }
    }
    writeln!(out, "p dwc {} {} {}", g.n(), g.edge_count(), inst.k).unwrap();
    for v in g.vertices() {
        writeln!(out, "w {} {}", v + 1, g.weight(v)).unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn write_interval(k: u64, rep: &IntervalRepresentation, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            writeln!(out, "c {line}").unwrap();
        }
    }
    writeln!(out, "p interval {} {k}", rep.len()).unwrap();
    for (v, (iv, w)) in rep.intervals().iter().zip(rep.weights()).enumerate() {
        writeln!(out, "i {} {} {} {w}", v + 1, iv.left, iv.right).unwrap();
    }
    out
}

pub fn write_setcover(sc: &SetCoverInstance, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(c) = comment {
        for line in c.lines() {
            writeln!(out, "c {line}").unwrap();
        }
    }
    writeln!(out, "p setcover {} {} {}", sc.universe(), sc.sets().len(), sc.budget()).unwrap();
    for (i, set) in sc.sets().iter().enumerate() {
        write!(out, "s {}", i + 1).unwrap();
        for e in set {
            write!(out, " {}", e + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn write(instance: &Instance) -> String {
    match instance {
        Instance::Dwc(inst) => write_dwc(inst, None),
        Instance::Interval(inst, rep) => write_interval(inst.k, rep, None),
        Instance::SetCover(sc) => write_setcover(sc, None),
    }
}
