//! Graphs of groups with surface-type vertices.
//!
//! Vertices are either plain (an arbitrary presentation) or surface type
//! (a bounded surface with its standard free presentation and boundary
//! words). Edge groups are infinite cyclic; each edge records the word its
//! generator maps to at both endpoints.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::surfaces::{standard_presentation, SurfaceDatum, SurfaceError, SurfacePresentation};
use crate::word::{Alphabet, CyclicWord, Generator, Word, WordError};
use crate::word_problem::{GroupModel, ModelError, Presentation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GogError {
    #[error("duplicate vertex or edge id `{0}`")]
    DuplicateId(String),
    #[error("edge `{edge}` refers to unknown vertex `{vertex}`")]
    UnknownVertex { edge: String, vertex: String },
    #[error("structure check `{0}` failed: {1}")]
    Invalid(&'static str, String),
    #[error("edge `{0}` induces a trivial relator")]
    TrivialEdgeRelator(String),
    #[error("decomposition has no plain vertex")]
    NoPlainVertex,
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Model(#[from] ModelError),
}

#[derive(Debug, Clone)]
pub enum VertexKind {
    Plain(Presentation),
    Surface(SurfacePresentation),
}

#[derive(Debug, Clone)]
pub struct VertexData {
    pub id: String,
    pub kind: VertexKind,
}

impl VertexData {
    pub fn plain(id: impl Into<String>, presentation: Presentation) -> Self {
        VertexData { id: id.into(), kind: VertexKind::Plain(presentation) }
    }

    /// A surface vertex with the standard presentation of `datum`, its
    /// generators renamed to `names` in order.
    pub fn surface(id: impl Into<String>, datum: SurfaceDatum, names: &[&str]) -> Result<Self, GogError> {
        let names = names.iter().map(|n| Generator::new(n)).collect::<Result<Vec<_>, _>>()?;
        let sp = standard_presentation(datum)?.with_generators(&names)?;
        Ok(VertexData { id: id.into(), kind: VertexKind::Surface(sp) })
    }

    pub fn presentation(&self) -> &Presentation {
        match &self.kind {
            VertexKind::Plain(p) => p,
            VertexKind::Surface(sp) => &sp.presentation,
        }
    }

    pub fn generators(&self) -> &Alphabet {
        self.presentation().generators()
    }

    pub fn is_surface(&self) -> bool {
        matches!(self.kind, VertexKind::Surface(_))
    }

    pub fn surface_datum(&self) -> Option<SurfaceDatum> {
        match &self.kind {
            VertexKind::Surface(sp) => Some(sp.datum),
            VertexKind::Plain(_) => None,
        }
    }
}

/// An edge `src -- dst` with infinite cyclic edge group.
///
/// Tree edges identify the two embedding words; a non-tree edge with stable
/// letter `t` contributes `t · w_src · t⁻¹ = w_dst`.
#[derive(Debug, Clone)]
pub struct EdgeData {
    pub id: String,
    pub endpoints: [String; 2],
    pub embeddings: [Word; 2],
    pub tree: bool,
    pub stable_letter: Option<Generator>,
}

impl EdgeData {
    pub fn tree(id: impl Into<String>, src: (&str, Word), dst: (&str, Word)) -> Self {
        EdgeData {
            id: id.into(),
            endpoints: [src.0.to_string(), dst.0.to_string()],
            embeddings: [src.1, dst.1],
            tree: true,
            stable_letter: None,
        }
    }

    pub fn stable(id: impl Into<String>, letter: Generator, src: (&str, Word), dst: (&str, Word)) -> Self {
        EdgeData {
            id: id.into(),
            endpoints: [src.0.to_string(), dst.0.to_string()],
            embeddings: [src.1, dst.1],
            tree: false,
            stable_letter: Some(letter),
        }
    }
}

#[derive(Debug, Clone)]
pub struct GraphOfGroupsWithSurfaces {
    vertices: Vec<VertexData>,
    edges: Vec<EdgeData>,
    index: HashMap<String, usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureCheck {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Pass/fail per structural check, in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StructureReport {
    pub checks: Vec<StructureCheck>,
}

/// Checks that make the Bass-Serre presentation well defined.
pub const WELL_FORMED_CHECKS: [&str; 5] = ["alphabets", "embeddings", "connectivity", "spanning-tree", "boundary-bijection"];

impl StructureReport {
    fn push(&mut self, name: &'static str, failures: Vec<String>, ok_detail: &str) {
        let passed = failures.is_empty();
        let detail = if passed { ok_detail.to_string() } else { failures.join("; ") };
        self.checks.push(StructureCheck { name, passed, detail });
    }

    pub fn get(&self, name: &str) -> Option<&StructureCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn passed(&self, name: &str) -> bool {
        self.get(name).is_some_and(|c| c.passed)
    }

    /// All checks passed, including bipartism and non-triviality.
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn is_well_formed(&self) -> bool {
        WELL_FORMED_CHECKS.iter().all(|n| self.passed(n))
    }

    pub fn first_failure(&self) -> Option<&StructureCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl fmt::Display for StructureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{:<20} {}  {}", c.name, if c.passed { "pass" } else { "FAIL" }, c.detail)?;
        }
        Ok(())
    }
}

impl GraphOfGroupsWithSurfaces {
    /// Requires unique ids and edges referring to existing vertices; every
    /// other condition is reported by [`validate_structure`].
    pub fn new(vertices: Vec<VertexData>, edges: Vec<EdgeData>) -> Result<Self, GogError> {
        let mut index = HashMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(GogError::DuplicateId(v.id.clone()));
            }
        }
        let mut edge_ids = HashSet::new();
        for e in &edges {
            if !edge_ids.insert(e.id.as_str()) {
                return Err(GogError::DuplicateId(e.id.clone()));
            }
            for v in &e.endpoints {
                if !index.contains_key(v) {
                    return Err(GogError::UnknownVertex { edge: e.id.clone(), vertex: v.clone() });
                }
            }
        }
        Ok(GraphOfGroupsWithSurfaces { vertices, edges, index })
    }

    pub fn vertices(&self) -> &[VertexData] {
        &self.vertices
    }

    pub fn edges(&self) -> &[EdgeData] {
        &self.edges
    }

    pub fn vertex(&self, id: &str) -> Option<&VertexData> {
        self.index.get(id).map(|&i| &self.vertices[i])
    }

    pub fn surface_vertices(&self) -> impl Iterator<Item = &VertexData> {
        self.vertices.iter().filter(|v| v.is_surface())
    }

    pub fn plain_vertices(&self) -> impl Iterator<Item = &VertexData> {
        self.vertices.iter().filter(|v| !v.is_surface())
    }

    pub fn stable_letters(&self) -> Vec<Generator> {
        self.edges.iter().filter_map(|e| e.stable_letter).collect()
    }

    fn endpoint(&self, e: &EdgeData, side: usize) -> &VertexData {
        &self.vertices[self.index[&e.endpoints[side]]]
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
        ra != rb
    }
}

/// Runs every structural check; failures are entries, never errors.
pub fn validate_structure(g: &GraphOfGroupsWithSurfaces) -> StructureReport {
    let mut report = StructureReport::default();
    let n = g.vertices.len();

    let mut seen: HashMap<Generator, String> = HashMap::new();
    let mut failures = Vec::new();
    for v in &g.vertices {
        for x in v.generators().iter() {
            if let Some(prev) = seen.insert(x, v.id.clone()) {
                failures.push(format!("generator {x} in both `{prev}` and `{}`", v.id));
            }
        }
    }
    for e in &g.edges {
        match (e.tree, e.stable_letter) {
            (true, Some(t)) => failures.push(format!("tree edge `{}` has stable letter {t}", e.id)),
            (false, None) => failures.push(format!("non-tree edge `{}` has no stable letter", e.id)),
            (false, Some(t)) => {
                if let Some(prev) = seen.insert(t, format!("edge {}", e.id)) {
                    failures.push(format!("stable letter {t} of `{}` already used by {prev}", e.id));
                }
            }
            (true, None) => {}
        }
    }
    report.push("alphabets", failures, "vertex alphabets and stable letters are disjoint");

    let mut failures = Vec::new();
    for e in &g.edges {
        for side in 0..2 {
            let v = g.endpoint(e, side);
            let w = &e.embeddings[side];
            if w.is_identity() {
                failures.push(format!("edge `{}` embeds trivially at `{}`", e.id, v.id));
            } else if let Err(err) = v.generators().check(w) {
                failures.push(format!("edge `{}` at `{}`: {err}", e.id, v.id));
            }
        }
    }
    report.push("embeddings", failures, "edge words lie in their vertex groups");

    let mut uf = UnionFind((0..n).collect());
    for e in &g.edges {
        uf.union(g.index[&e.endpoints[0]], g.index[&e.endpoints[1]]);
    }
    let components: HashSet<usize> = (0..n).map(|i| uf.find(i)).collect();
    let failures = match components.len() {
        0 => vec!["graph has no vertices".to_string()],
        1 => vec![],
        k => vec![format!("graph has {k} components")],
    };
    report.push("connectivity", failures, "underlying graph is connected");

    let mut uf = UnionFind((0..n).collect());
    let mut failures = Vec::new();
    let mut tree_edges = 0;
    for e in g.edges.iter().filter(|e| e.tree) {
        tree_edges += 1;
        if !uf.union(g.index[&e.endpoints[0]], g.index[&e.endpoints[1]]) {
            failures.push(format!("tree edge `{}` closes a cycle", e.id));
        }
    }
    if failures.is_empty() && n > 0 && tree_edges + 1 != n {
        failures.push(format!("{tree_edges} tree edges do not span {n} vertices"));
    }
    report.push("spanning-tree", failures, "tree edges form a spanning tree");

    let mut failures = Vec::new();
    for v in &g.vertices {
        let VertexKind::Surface(sp) = &v.kind else { continue };
        let mut used = vec![0usize; sp.boundary_words.len()];
        let mut incident = 0;
        for e in &g.edges {
            for side in 0..2 {
                if e.endpoints[side] != v.id {
                    continue;
                }
                incident += 1;
                match sp.boundary_words.iter().position(|b| *b == e.embeddings[side]) {
                    Some(i) => used[i] += 1,
                    None => failures.push(format!(
                        "edge `{}` embeds {} at `{}`, not a designated boundary word",
                        e.id, e.embeddings[side], v.id
                    )),
                }
            }
        }
        if incident != sp.boundary_words.len() {
            failures.push(format!(
                "`{}` has {} boundary components but {incident} incident edge ends",
                v.id,
                sp.boundary_words.len()
            ));
        }
        for (i, &k) in used.iter().enumerate() {
            if k > 1 {
                failures.push(format!("boundary word {} of `{}` used {k} times", sp.boundary_words[i], v.id));
            }
        }
    }
    report.push("boundary-bijection", failures, "edges match boundary components one to one");

    let failures: Vec<String> = g
        .edges
        .iter()
        .filter(|e| g.endpoint(e, 0).is_surface() == g.endpoint(e, 1).is_surface())
        .map(|e| format!("edge `{}` joins `{}` and `{}` of the same type", e.id, e.endpoints[0], e.endpoints[1]))
        .collect();
    report.push("bipartism", failures, "every edge joins a surface and a plain vertex");

    let mut failures = Vec::new();
    if g.edges.is_empty() {
        failures.push("no edges".to_string());
    }
    if g.surface_vertices().next().is_none() {
        failures.push("no surface vertex".to_string());
    }
    report.push(
        "non-triviality",
        failures,
        "at least one edge and one surface vertex (interpretation of non-trivial)",
    );
    report
}

/// The Bass-Serre presentation: vertex generators then stable letters;
/// vertex relators then one relator per edge, in edge order.
pub fn induced_presentation(g: &GraphOfGroupsWithSurfaces) -> Result<Presentation, GogError> {
    let report = validate_structure(g);
    if let Some(bad) = WELL_FORMED_CHECKS.iter().filter_map(|n| report.get(n)).find(|c| !c.passed) {
        return Err(GogError::Invalid(bad.name, bad.detail.clone()));
    }
    let mut alphabet = Alphabet::default();
    let mut relators = Vec::new();
    for v in &g.vertices {
        alphabet = alphabet.disjoint_union(v.generators())?;
        relators.extend(v.presentation().relators().iter().map(|r| r.representative().clone()));
    }
    for e in &g.edges {
        let [src, dst] = &e.embeddings;
        let lhs = match e.stable_letter {
            Some(t) => {
                alphabet.push(t)?;
                src.conjugate(&Word::gen(t))
            }
            None => src.clone(),
        };
        let rel = lhs.compose(&dst.inverse());
        if CyclicWord::new(&rel).is_empty() {
            return Err(GogError::TrivialEdgeRelator(e.id.clone()));
        }
        relators.push(rel);
    }
    Ok(Presentation::new(alphabet, relators)?)
}

/// Presentation of the free product of the plain vertex groups.
pub fn plain_vertex_presentation(g: &GraphOfGroupsWithSurfaces) -> Result<Presentation, GogError> {
    let mut plain = g.plain_vertices();
    let first = plain.next().ok_or(GogError::NoPlainVertex)?;
    let mut out = first.presentation().clone();
    for v in plain {
        out = out.free_product(v.presentation())?;
    }
    Ok(out)
}

/// Word-problem model of the free product of the plain vertex groups.
pub fn plain_vertex_free_product(g: &GraphOfGroupsWithSurfaces) -> Result<GroupModel, GogError> {
    let models = g
        .plain_vertices()
        .map(|v| GroupModel::from_presentation(v.presentation()))
        .collect::<Result<Vec<_>, _>>()?;
    match models.len() {
        0 => Err(GogError::NoPlainVertex),
        1 => Ok(models.into_iter().next().expect("one model")),
        _ => Ok(GroupModel::free_product(models)?),
    }
}

/// Vertex ids reachable from `start` (used for diagnostics).
pub fn reachable(g: &GraphOfGroupsWithSurfaces, start: &str) -> Vec<String> {
    let Some(&s) = g.index.get(start) else { return Vec::new() };
    let mut adj = vec![Vec::new(); g.vertices.len()];
    for e in &g.edges {
        let (a, b) = (g.index[&e.endpoints[0]], g.index[&e.endpoints[1]]);
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut seen = vec![false; g.vertices.len()];
    let mut queue = VecDeque::from([s]);
    seen[s] = true;
    let mut out = Vec::new();
    while let Some(v) = queue.pop_front() {
        out.push(g.vertices[v].id.clone());
        for &u in &adj[v] {
            if !seen[u] {
                seen[u] = true;
                queue.push_back(u);
            }
        }
    }
    out
}
