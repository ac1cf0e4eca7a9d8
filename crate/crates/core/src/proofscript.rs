//! Case-analysis proof scripts and their replay.
//!
//! A script names a graph, lists partially oriented starting copies, and
//! then walks every copy to a contradiction with four kinds of step:
//!
//! * `MC X`: move to the pending copy `X`;
//! * `C x1..xk`: apply the cycle rule to the cycle `x1..xk` (it must fire);
//! * `B xy (NC X)`: branch on edge `xy`, continuing with `x -> y` and parking
//!   `y -> x` as copy `X`;
//! * `S x1..xk`: the listed vertices carry a shortcut, closing the copy.
//!
//! `A xy note` adds an arc justified outside the kernel (usually a symmetry
//! argument); every such arc is reported as a trust obligation.
//!
//! ```text
//! graph grotzsch
//! copy 2a:
//!   1>2 2>3 1>5 4>5 4>3
//! steps 2a:
//!   C1232', B02' (NC 2b), ...
//! ```
//!
//! A vertex token is one digit or a parenthesised number, optionally primed:
//! `S98(12)5` lists vertices 9, 8, 12, 5. Labels go through the family's
//! label map, so the usual drawing labels can be used verbatim.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::FamilySpec;
use crate::format;
use crate::graph::Graph;
use crate::orientation::PartialOrientation;
use crate::solver::{apply_cycle_rule, CatalogCycle};

/// Proof of the Chvátal case analysis, copies A to F.
pub const CHVATAL_SCRIPT: &str = include_str!("../scripts/chvatal.proof");
/// Proof of the Grötzsch case analysis, cases 1a, 1b, 2a, 2b.
pub const GROTZSCH_SCRIPT: &str = include_str!("../scripts/grotzsch.proof");

/// A vertex as written in a script, e.g. `12` or `2'`.
pub type Label = String;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphRef {
    Family(FamilySpec),
    File(PathBuf),
}

impl fmt::Display for GraphRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphRef::Family(spec) => write!(f, "{spec}"),
            GraphRef::File(path) => write!(f, "{}", path.display()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Mc(String),
    C(Vec<Label>),
    B(Label, Label, String),
    S(Vec<Label>),
    Assume(Label, Label, String),
}

fn write_label(f: &mut impl fmt::Write, label: &str) -> fmt::Result {
    let (digits, prime) = match label.strip_suffix('\'') {
        Some(d) => (d, "'"),
        None => (label, ""),
    };
    if digits.len() == 1 {
        write!(f, "{digits}{prime}")
    } else {
        write!(f, "({digits}){prime}")
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let seq = |f: &mut fmt::Formatter<'_>, letter: &str, vs: &[Label]| {
            f.write_str(letter)?;
            vs.iter().try_for_each(|v| write_label(f, v))
        };
        match self {
            Step::Mc(name) => write!(f, "MC {name}"),
            Step::C(vs) => seq(f, "C", vs),
            Step::S(vs) => seq(f, "S", vs),
            Step::B(x, y, name) => {
                seq(f, "B", &[x.clone(), y.clone()])?;
                write!(f, " (NC {name})")
            }
            Step::Assume(x, y, note) => {
                seq(f, "A", &[x.clone(), y.clone()])?;
                if !note.is_empty() {
                    write!(f, " {note}")?;
                }
                Ok(())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    pub graph: GraphRef,
    /// Starting copies in declaration order.
    pub copies: Vec<(String, Vec<(Label, Label)>)>,
    pub steps: Vec<Step>,
}

impl fmt::Display for Script {
    /// Canonical text; parsing it gives back an identical script.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {}", self.graph)?;
        for (name, arcs) in &self.copies {
            writeln!(f, "copy {name}:")?;
            let mut line = String::new();
            for (u, v) in arcs {
                if !line.is_empty() {
                    line.push(' ');
                }
                write_label(&mut line, u)?;
                line.push('>');
                write_label(&mut line, v)?;
            }
            if !line.is_empty() {
                writeln!(f, "  {line}")?;
            }
        }
        let mut open_line = false;
        for step in &self.steps {
            match step {
                Step::Mc(name) => {
                    if open_line {
                        writeln!(f)?;
                    }
                    writeln!(f, "steps {name}:")?;
                    open_line = false;
                }
                Step::Assume(..) => {
                    if open_line {
                        writeln!(f)?;
                    }
                    writeln!(f, "  {step}")?;
                    open_line = false;
                }
                _ => {
                    if open_line {
                        write!(f, ", {step}")?;
                    } else {
                        write!(f, "  {step}")?;
                        open_line = true;
                    }
                }
            }
        }
        if open_line {
            writeln!(f)?;
        }
        Ok(())
    }
}

struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    text: &'a str,
}

impl Cursor<'_> {
    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn column(&self) -> usize {
        self.pos + 1
    }

    fn error(&self, column: usize, message: impl Into<String>) -> Error {
        let token: String = self.chars[(column - 1).min(self.chars.len())..]
            .iter()
            .take_while(|c| !c.is_whitespace() && **c != ',')
            .collect();
        Error::Parse {
            line: self.line,
            column,
            token: if token.is_empty() { self.text.trim().to_string() } else { token },
            message: message.into(),
        }
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace() || c == ',' || c == ';') {
            self.pos += 1;
        }
    }

    fn skip_spaces(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, s: &str) -> bool {
        let cs: Vec<char> = s.chars().collect();
        if self.chars[self.pos..].starts_with(&cs) {
            self.pos += cs.len();
            true
        } else {
            false
        }
    }

    fn starts_vertex(&self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || c == '(')
    }

    fn vertex(&mut self) -> Result<Label> {
        let start = self.column();
        let mut label = String::new();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                label.push(c);
                self.pos += 1;
            }
            Some('(') => {
                self.pos += 1;
                while let Some(c) = self.peek().filter(|c| c.is_ascii_digit()) {
                    label.push(c);
                    self.pos += 1;
                }
                if label.is_empty() || !self.eat(")") {
                    return Err(self.error(start, "expected `(digits)`"));
                }
            }
            _ => return Err(self.error(start, "expected a vertex")),
        }
        if self.eat("'") {
            label.push('\'');
        }
        Ok(label)
    }

    fn name(&mut self) -> Result<String> {
        let start = self.column();
        let mut name = String::new();
        while let Some(c) = self.peek().filter(|c| c.is_ascii_alphanumeric() || *c == '_') {
            name.push(c);
            self.pos += 1;
        }
        if name.is_empty() {
            return Err(self.error(start, "expected a copy name"));
        }
        Ok(name)
    }

    fn step(&mut self) -> Result<Step> {
        let start = self.column();
        if self.eat("MC") {
            self.skip_spaces();
            return Ok(Step::Mc(self.name()?));
        }
        let letter = self.peek();
        self.pos += 1;
        match letter {
            Some(l @ ('C' | 'S')) => {
                let mut vs = Vec::new();
                while self.starts_vertex() {
                    vs.push(self.vertex()?);
                }
                if vs.len() < 4 {
                    return Err(self.error(start, format!("`{l}` needs at least four vertices")));
                }
                Ok(if l == 'C' { Step::C(vs) } else { Step::S(vs) })
            }
            Some('B') => {
                let (x, y) = (self.vertex()?, self.vertex()?);
                self.skip_spaces();
                let at = self.column();
                if !self.eat("(NC") {
                    return Err(self.error(at, "expected `(NC <name>)`"));
                }
                self.skip_spaces();
                let name = self.name()?;
                self.skip_spaces();
                if !self.eat(")") {
                    return Err(self.error(self.column(), "expected `)`"));
                }
                Ok(Step::B(x, y, name))
            }
            Some('A') => {
                let (x, y) = (self.vertex()?, self.vertex()?);
                let note: String = self.chars[self.pos..].iter().collect();
                self.pos = self.chars.len();
                Ok(Step::Assume(x, y, note.trim().to_string()))
            }
            _ => Err(self.error(start, "unknown step")),
        }
    }
}

enum Section {
    Header,
    Copy,
    Steps,
}

/// Parses script text. Errors carry 1-based line and column.
pub fn parse(text: &str) -> Result<Script> {
    let mut graph = None;
    let mut copies: Vec<(String, Vec<(Label, Label)>)> = Vec::new();
    let mut steps = Vec::new();
    let mut section = Section::Header;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor {
            chars: body.chars().collect(),
            pos: 0,
            line: line_no,
            text: body,
        };
        cur.skip_spaces();
        let head = cur.pos;
        let trimmed = body.trim();
        if let Some(rest) = trimmed.strip_prefix("graph ") {
            let rest = rest.trim();
            graph = Some(match rest.parse::<FamilySpec>() {
                Ok(spec) => GraphRef::Family(spec),
                Err(_) if !rest.contains(':') || rest.contains('/') || rest.contains('.') => {
                    GraphRef::File(PathBuf::from(rest))
                }
                Err(e) => return Err(cur.error(head + 7, format!("bad graph reference: {e}"))),
            });
            continue;
        }
        for (keyword, next) in [("copy ", Section::Copy), ("steps ", Section::Steps)] {
            if let Some(rest) = trimmed.strip_prefix(keyword) {
                let name_part = rest.trim();
                let Some(name) = name_part.strip_suffix(':').map(str::trim) else {
                    return Err(cur.error(head + 1, format!("expected `{}NAME:`", keyword)));
                };
                if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
                    return Err(cur.error(head + 1, "bad copy name"));
                }
                match next {
                    Section::Copy => {
                        if copies.iter().any(|(n, _)| n == name) {
                            return Err(cur.error(head + 1, format!("copy {name} declared twice")));
                        }
                        copies.push((name.to_string(), Vec::new()));
                    }
                    _ => steps.push(Step::Mc(name.to_string())),
                }
                section = next;
                break;
            }
        }
        if trimmed.starts_with("copy ") || trimmed.starts_with("steps ") {
            continue;
        }
        match section {
            Section::Header => return Err(cur.error(head + 1, "expected `graph`, `copy` or `steps`")),
            Section::Copy => loop {
                cur.skip_separators();
                if cur.peek().is_none() {
                    break;
                }
                let u = cur.vertex()?;
                if !cur.eat(">") {
                    return Err(cur.error(cur.column(), "expected `>`"));
                }
                let v = cur.vertex()?;
                copies.last_mut().expect("inside a copy").1.push((u, v));
            },
            Section::Steps => loop {
                cur.skip_separators();
                if cur.peek().is_none() {
                    break;
                }
                steps.push(cur.step()?);
            },
        }
    }
    let graph = graph.ok_or(Error::Parse {
        line: 0,
        column: 0,
        token: String::new(),
        message: "missing `graph` line".into(),
    })?;
    if steps.is_empty() {
        return Err(Error::Parse {
            line: 0,
            column: 0,
            token: String::new(),
            message: "script has no steps".into(),
        });
    }
    Ok(Script { graph, copies, steps })
}

/// How a copy ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CopyOutcome {
    ClosedByS,
    ClosedByContradiction,
    Open,
}

#[derive(Clone, Debug, Serialize)]
pub struct CopyReport {
    pub name: String,
    /// Copy this one branched from, `None` for declared copies.
    pub parent: Option<String>,
    pub outcome: CopyOutcome,
    pub closed_at: Option<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivedArcs {
    pub index: usize,
    pub copy: String,
    pub step: String,
    pub arcs: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Assumption {
    pub index: usize,
    pub copy: String,
    pub arc: String,
    pub note: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReplayReport {
    pub graph: String,
    pub copies: Vec<CopyReport>,
    pub derived: Vec<DerivedArcs>,
    /// Arcs taken on trust.
    pub assumed: Vec<Assumption>,
    pub all_closed: bool,
    pub verdict: &'static str,
    #[serde(skip)]
    pub trace: Vec<String>,
}

impl ReplayReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn human_trace(&self) -> String {
        let mut out = self.trace.join("\n");
        out.push('\n');
        out
    }

    pub fn copy(&self, name: &str) -> Option<&CopyReport> {
        self.copies.iter().find(|c| c.name == name)
    }
}

/// Checks that `vertices`, in the given order, is a long path
/// `v0 -> .. -> vk` (`k >= 3`) of assigned arcs with `v0 -> vk` assigned and
/// some pair not adjacent. Unassigned edges never count as arcs.
pub fn check_s_step(p: &PartialOrientation, vertices: &[usize]) -> std::result::Result<(), String> {
    let k = vertices.len();
    if k < 4 {
        return Err(format!("a shortcut needs at least 4 vertices, got {k}"));
    }
    let g = p.graph();
    if let Some(&v) = vertices.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(format!("vertex {v} out of range"));
    }
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err("vertices repeat".into());
    }
    let has_nonadjacent = (0..k).any(|i| (i + 1..k).any(|j| !g.adjacent(vertices[i], vertices[j])));
    if !has_nonadjacent {
        return Err("every listed pair is adjacent".into());
    }
    if let Some(w) = vertices.windows(2).find(|w| !p.has_arc(w[0], w[1])) {
        return Err(format!("{} -> {} is not an arc", w[0], w[1]));
    }
    if !p.has_arc(vertices[0], vertices[k - 1]) {
        return Err(format!("no shortcutting arc {} -> {}", vertices[0], vertices[k - 1]));
    }
    Ok(())
}

struct Labels {
    spec: Option<FamilySpec>,
}

impl Labels {
    fn resolve(&self, g: &Graph, label: &str) -> Option<usize> {
        let v = match &self.spec {
            Some(spec) => spec.resolve_label(label)?,
            None => label.parse().ok()?,
        };
        (v < g.vertex_count()).then_some(v)
    }

    fn name(&self, v: usize) -> String {
        match &self.spec {
            Some(spec) => spec.label_of(v),
            None => v.to_string(),
        }
    }

    fn arc(&self, (u, v): (usize, usize)) -> String {
        format!("{}>{}", self.name(u), self.name(v))
    }
}

struct CopyState {
    partial: PartialOrientation,
    parent: Option<String>,
    outcome: CopyOutcome,
    closed_at: Option<usize>,
}

/// Loads the script's graph and replays every step.
pub fn replay(script: &Script) -> Result<ReplayReport> {
    let (graph, spec) = match &script.graph {
        GraphRef::Family(spec) => (spec.build()?, Some(spec.clone())),
        GraphRef::File(path) => (format::read_edge_list(&std::fs::read_to_string(path)?)?, None),
    };
    replay_on(script, &graph, spec)
}

/// Replays against an explicit graph; labels go through `spec`'s label map,
/// or are plain indices when `spec` is `None`.
pub fn replay_on(script: &Script, graph: &Graph, spec: Option<FamilySpec>) -> Result<ReplayReport> {
    let labels = Labels { spec };
    let mut copies: BTreeMap<String, CopyState> = BTreeMap::new();
    let mut order: Vec<String> = Vec::new();
    let mut trace = vec![format!("graph {}", script.graph)];

    let header_error = |message: String| Error::StepRejected {
        index: 0,
        step: "copy".into(),
        copy: String::new(),
        reason: message,
        state: String::new(),
    };
    for (name, arcs) in &script.copies {
        let mut partial = PartialOrientation::new(graph.clone());
        for (u, v) in arcs {
            let (a, b) = match (labels.resolve(graph, u), labels.resolve(graph, v)) {
                (Some(a), Some(b)) => (a, b),
                _ => return Err(header_error(format!("copy {name}: unknown vertex in {u}>{v}"))),
            };
            partial
                .add_arc(a, b)
                .map_err(|e| header_error(format!("copy {name}: arc {u}>{v}: {e}")))?;
        }
        copies.insert(
            name.clone(),
            CopyState {
                partial,
                parent: None,
                outcome: CopyOutcome::Open,
                closed_at: None,
            },
        );
        order.push(name.clone());
    }

    let mut derived = Vec::new();
    let mut assumed = Vec::new();
    let mut current: Option<String> = None;

    for (index, step) in script.steps.iter().enumerate() {
        let copy_name = current.clone().unwrap_or_default();
        let reject = |copies: &BTreeMap<String, CopyState>, reason: String| {
            let state = copies
                .get(&copy_name)
                .map(|c| {
                    let arcs: Vec<String> = c.partial.arcs().into_iter().map(|a| labels.arc(a)).collect();
                    format!("arcs of {copy_name}: {}", arcs.join(" "))
                })
                .unwrap_or_else(|| "no current copy".into());
            Error::StepRejected {
                index,
                step: step.to_string(),
                copy: copy_name.clone(),
                reason,
                state,
            }
        };
        let resolve = |copies: &BTreeMap<String, CopyState>, l: &Label| {
            labels
                .resolve(graph, l)
                .ok_or_else(|| reject(copies, format!("unknown vertex {l}")))
        };

        if let Step::Mc(name) = step {
            match copies.get(name) {
                None => return Err(reject(&copies, format!("no copy named {name}"))),
                Some(c) if c.outcome != CopyOutcome::Open => {
                    return Err(reject(&copies, format!("copy {name} is already closed")))
                }
                Some(_) => {}
            }
            trace.push(format!("MC {name}"));
            current = Some(name.clone());
            continue;
        }

        let Some(name) = current.clone() else {
            return Err(reject(&copies, "no current copy".into()));
        };
        if copies[&name].outcome != CopyOutcome::Open {
            return Err(reject(&copies, format!("copy {name} is already closed")));
        }

        match step {
            Step::Mc(_) => unreachable!(),
            Step::C(vs) => {
                let vertices = vs.iter().map(|l| resolve(&copies, l)).collect::<Result<Vec<_>>>()?;
                let cycle = CatalogCycle::from_vertices(graph, &vertices)
                    .ok_or_else(|| reject(&copies, "not a cycle of the graph".into()))?;
                if cycle.induces_clique(graph) {
                    return Err(reject(&copies, "cycle spans a clique".into()));
                }
                let state = copies.get_mut(&name).unwrap();
                match apply_cycle_rule(&state.partial, &cycle) {
                    Err(()) => {
                        state.outcome = CopyOutcome::ClosedByContradiction;
                        state.closed_at = Some(index);
                        trace.push(format!("  {step}: contradiction, {name} closed"));
                    }
                    Ok(arcs) if arcs.is_empty() => {
                        return Err(reject(&copies, "the cycle rule derives nothing".into()));
                    }
                    Ok(arcs) => {
                        for &(u, v) in &arcs {
                            state.partial.add_arc(u, v).expect("forced edges are unassigned");
                        }
                        let shown: Vec<String> = arcs.iter().map(|&a| labels.arc(a)).collect();
                        trace.push(format!("  {step}: {}", shown.join(" ")));
                        derived.push(DerivedArcs {
                            index,
                            copy: name.clone(),
                            step: step.to_string(),
                            arcs: shown,
                        });
                    }
                }
            }
            Step::B(x, y, new_name) => {
                let (a, b) = (resolve(&copies, x)?, resolve(&copies, y)?);
                if !graph.adjacent(a, b) {
                    return Err(reject(&copies, format!("{x}{y} is not an edge")));
                }
                if copies[&name].partial.is_assigned(a, b) {
                    return Err(reject(&copies, format!("edge {x}{y} is already oriented")));
                }
                if copies.contains_key(new_name) {
                    return Err(reject(&copies, format!("copy {new_name} already exists")));
                }
                let mut other = copies[&name].partial.clone();
                other.add_arc(b, a).expect("unassigned");
                copies.get_mut(&name).unwrap().partial.add_arc(a, b).expect("unassigned");
                copies.insert(
                    new_name.clone(),
                    CopyState {
                        partial: other,
                        parent: Some(name.clone()),
                        outcome: CopyOutcome::Open,
                        closed_at: None,
                    },
                );
                order.push(new_name.clone());
                trace.push(format!("  {step}: {x}>{y} here, {y}>{x} in {new_name}"));
            }
            Step::S(vs) => {
                let vertices = vs.iter().map(|l| resolve(&copies, l)).collect::<Result<Vec<_>>>()?;
                let state = copies.get_mut(&name).unwrap();
                match check_s_step(&state.partial, &vertices) {
                    Ok(()) => {
                        state.outcome = CopyOutcome::ClosedByS;
                        state.closed_at = Some(index);
                        let shown: Vec<String> = vertices.iter().map(|&v| labels.name(v)).collect();
                        trace.push(format!("  {step}: shortcut {}, {name} closed", shown.join(">")));
                    }
                    Err(reason) => return Err(reject(&copies, reason)),
                }
            }
            Step::Assume(x, y, note) => {
                let (a, b) = (resolve(&copies, x)?, resolve(&copies, y)?);
                let state = copies.get_mut(&name).unwrap();
                match state.partial.add_arc(a, b) {
                    Ok(true) => {}
                    Ok(false) => return Err(reject(&copies, format!("{x}>{y} is already present"))),
                    Err(e) => return Err(reject(&copies, e.to_string())),
                }
                trace.push(format!("  {step}: assumed"));
                assumed.push(Assumption {
                    index,
                    copy: name.clone(),
                    arc: labels.arc((a, b)),
                    note: note.clone(),
                });
            }
        }
    }

    let copy_reports: Vec<CopyReport> = order
        .iter()
        .map(|n| {
            let c = &copies[n];
            CopyReport {
                name: n.clone(),
                parent: c.parent.clone(),
                outcome: c.outcome,
                closed_at: c.closed_at,
            }
        })
        .collect();
    let all_closed = copy_reports.iter().all(|c| c.outcome != CopyOutcome::Open);
    let verdict = if all_closed { "all branches closed" } else { "open branches remain" };
    trace.push(format!("{verdict}: {} copies", copy_reports.len()));
    Ok(ReplayReport {
        graph: script.graph.to_string(),
        copies: copy_reports,
        derived,
        assumed,
        all_closed,
        verdict,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn labels(vs: &[&str]) -> Vec<Label> {
        vs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn step_tokens() {
        let s = parse("graph chvatal\ncopy X:\n1>2\nsteps X:\nS98(12)5, B9(10) (NC C4)\n").unwrap();
        assert_eq!(s.steps[1], Step::S(labels(&["9", "8", "12", "5"])));
        assert_eq!(s.steps[2], Step::B("9".into(), "10".into(), "C4".into()));
        let err = parse("graph chvatal\ncopy X:\n1>2\nsteps X:\nX123\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 5, column: 1, .. }), "{err:?}");
        let err = parse("graph grotzsch\ncopy X:\n1>2\nsteps X:\n  C12, S1234\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 5, column: 3, .. }), "{err:?}");
    }

    #[test]
    fn primes_and_notes() {
        let s = parse("graph grotzsch\ncopy 1:\n5>1\nsteps 1:\nA12 by symmetry, honest\nC1232'\n").unwrap();
        assert_eq!(s.steps[1], Step::Assume("1".into(), "2".into(), "by symmetry, honest".into()));
        assert_eq!(s.steps[2], Step::C(labels(&["1", "2", "3", "2'"])));
    }

    #[test]
    fn shipped_scripts_round_trip() {
        for text in [CHVATAL_SCRIPT, GROTZSCH_SCRIPT] {
            let s = parse(text).unwrap();
            let printed = s.to_string();
            assert_eq!(parse(&printed).unwrap(), s);
        }
    }

    #[test]
    fn s_step_checks() {
        let g = families::complete(4);
        let p = PartialOrientation::with_arcs(g, &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 2), (1, 3)]).unwrap();
        assert!(check_s_step(&p, &[0, 1, 2, 3]).is_err());
        assert!(check_s_step(&p, &[0, 1, 2]).is_err());

        let c4 = families::cycle(4).unwrap();
        let p = PartialOrientation::with_arcs(c4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(check_s_step(&p, &[0, 1, 2, 3]).is_ok());
        assert!(check_s_step(&p, &[2, 3, 0, 1]).is_err());
        assert!(check_s_step(&p, &[0, 2, 1, 3]).is_err());
    }

    #[test]
    fn rejects_bad_s_step() {
        let text = "graph cycle:4\ncopy X:\n0>1 1>2 2>3 0>3\nsteps X:\nS0132\n";
        let err = replay(&parse(text).unwrap()).unwrap_err();
        assert!(matches!(err, Error::StepRejected { index: 1, .. }), "{err}");
    }

    #[test]
    fn silent_cycle_step_is_an_error() {
        let text = "graph cycle:4\ncopy X:\n0>1\nsteps X:\nC0123\n";
        let err = replay(&parse(text).unwrap()).unwrap_err();
        assert!(matches!(err, Error::StepRejected { ref reason, .. } if reason.contains("derives nothing")));
    }

    #[test]
    fn shipped_scripts_close() {
        let chv = replay(&parse(CHVATAL_SCRIPT).unwrap()).unwrap();
        assert!(chv.all_closed, "{}", chv.human_trace());
        let names: Vec<&str> = chv.copies.iter().map(|c| c.name.as_str()).collect();
        let mut sorted = names.clone();
        sorted.sort();
        assert_eq!(sorted, ["A", "B", "B1", "C", "C1", "C2", "C3", "C4", "D", "D1", "E", "E1", "F"]);

        let gro = replay(&parse(GROTZSCH_SCRIPT).unwrap()).unwrap();
        assert!(gro.all_closed, "{}", gro.human_trace());
        assert_eq!(gro.copies.len(), 4);
        assert!(gro.assumed.is_empty());
    }
}
