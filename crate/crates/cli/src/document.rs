//! Declarative input documents: presentations, surfaces, decompositions,
//! maps, floor candidates and tower candidates.

use std::collections::HashSet;
use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};
use tower_core::homs::Fill;
use tower_core::{SurfaceDatum, Word};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct InputDocument {
    pub presentations: Vec<PresentationDecl>,
    pub surfaces: Vec<SurfaceDecl>,
    pub decompositions: Vec<DecompositionDecl>,
    pub maps: Vec<MapDecl>,
    pub floors: Vec<FloorDecl>,
    pub towers: Vec<TowerDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDecl {
    pub name: String,
    pub generators: Vec<String>,
    #[serde(default)]
    pub relators: Vec<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceDecl {
    pub name: String,
    pub datum: SurfaceDatum,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionDecl {
    pub name: String,
    pub vertices: Vec<VertexDecl>,
    pub edges: Vec<EdgeDecl>,
}

/// A vertex is surface-type exactly when `surface` is present.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexDecl {
    pub id: String,
    pub generators: Vec<String>,
    #[serde(default)]
    pub relators: Vec<Word>,
    #[serde(default)]
    pub surface: Option<SurfaceDatum>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeDecl {
    pub id: String,
    pub embeddings: [(String, Word); 2],
    #[serde(default = "yes")]
    pub tree: bool,
    #[serde(default)]
    pub stable_letter: Option<String>,
}

fn yes() -> bool {
    true
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapDecl {
    pub name: String,
    pub images: Vec<(String, Word)>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FillMode {
    #[default]
    Required,
    Trivial,
    Identity,
}

impl FillMode {
    pub fn keyword(self) -> &'static str {
        match self {
            FillMode::Required => "required",
            FillMode::Trivial => "trivial",
            FillMode::Identity => "identity",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "required" => Some(FillMode::Required),
            "trivial" => Some(FillMode::Trivial),
            "identity" => Some(FillMode::Identity),
            _ => None,
        }
    }
}

impl From<FillMode> for Fill {
    fn from(m: FillMode) -> Fill {
        match m {
            FillMode::Required => Fill::Required,
            FillMode::Trivial => Fill::Trivial,
            FillMode::Identity => Fill::Identity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionDecl {
    pub letter: String,
    pub map: String,
    #[serde(default)]
    pub fill: FillMode,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentificationDecl {
    pub ambient: String,
    pub forward: String,
    pub backward: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FloorDecl {
    pub name: String,
    pub decomposition: String,
    pub retraction: String,
    #[serde(default)]
    pub fill: FillMode,
    #[serde(default)]
    pub inclusion: Option<String>,
    #[serde(default)]
    pub extension: Option<ExtensionDecl>,
    #[serde(default)]
    pub identification: Option<IdentificationDecl>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDecl {
    pub vertex: String,
    pub words: Vec<Word>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroundSurfaceDecl {
    pub datum: SurfaceDatum,
    pub generators: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerDecl {
    pub name: String,
    pub ambient: String,
    #[serde(default)]
    pub floors: Vec<String>,
    #[serde(default)]
    pub witnesses: Vec<WitnessDecl>,
    #[serde(default)]
    pub base: Vec<String>,
    #[serde(default)]
    pub free: Vec<String>,
    #[serde(default)]
    pub ground_surfaces: Vec<GroundSurfaceDecl>,
}

/// A name collision or dangling reference, attributed to a declaration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationError {
    pub kind: &'static str,
    pub name: String,
    pub message: String,
}

impl fmt::Display for ValidationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} `{}`: {}", self.kind, self.name, self.message)
    }
}

impl InputDocument {
    pub fn is_empty(&self) -> bool {
        self.presentations.is_empty()
            && self.surfaces.is_empty()
            && self.decompositions.is_empty()
            && self.maps.is_empty()
            && self.floors.is_empty()
            && self.towers.is_empty()
    }

    pub fn presentation(&self, name: &str) -> Option<&PresentationDecl> {
        self.presentations.iter().find(|p| p.name == name)
    }

    pub fn surface(&self, name: &str) -> Option<&SurfaceDecl> {
        self.surfaces.iter().find(|s| s.name == name)
    }

    pub fn decomposition(&self, name: &str) -> Option<&DecompositionDecl> {
        self.decompositions.iter().find(|d| d.name == name)
    }

    pub fn map(&self, name: &str) -> Option<&MapDecl> {
        self.maps.iter().find(|m| m.name == name)
    }

    pub fn floor(&self, name: &str) -> Option<&FloorDecl> {
        self.floors.iter().find(|f| f.name == name)
    }

    pub fn tower(&self, name: &str) -> Option<&TowerDecl> {
        self.towers.iter().find(|t| t.name == name)
    }

    /// Names are unique per kind and every reference resolves.
    pub fn validate(&self) -> Result<(), ValidationError> {
        fn unique<'a>(kind: &'static str, names: impl Iterator<Item = &'a String>) -> Result<(), ValidationError> {
            let mut seen = HashSet::new();
            for n in names {
                if !seen.insert(n) {
                    return Err(ValidationError { kind, name: n.clone(), message: "declared twice".into() });
                }
            }
            Ok(())
        }
        unique("presentation", self.presentations.iter().map(|p| &p.name))?;
        unique("surface", self.surfaces.iter().map(|s| &s.name))?;
        unique("decomposition", self.decompositions.iter().map(|d| &d.name))?;
        unique("map", self.maps.iter().map(|m| &m.name))?;
        unique("floor", self.floors.iter().map(|f| &f.name))?;
        unique("tower", self.towers.iter().map(|t| &t.name))?;

        for d in &self.decompositions {
            let err = |message: String| ValidationError { kind: "decomposition", name: d.name.clone(), message };
            let mut ids = HashSet::new();
            for v in &d.vertices {
                if !ids.insert(&v.id) {
                    return Err(err(format!("vertex `{}` declared twice", v.id)));
                }
            }
            let mut edge_ids = HashSet::new();
            for e in &d.edges {
                if !edge_ids.insert(&e.id) {
                    return Err(err(format!("edge `{}` declared twice", e.id)));
                }
                for (v, _) in &e.embeddings {
                    if !ids.contains(v) {
                        return Err(err(format!("edge `{}` refers to unknown vertex `{v}`", e.id)));
                    }
                }
                if !e.tree && e.stable_letter.is_none() {
                    return Err(err(format!("edge `{}` is not a tree edge but has no stable letter", e.id)));
                }
            }
        }

        let need = |kind: &'static str, owner: &str, what: &str, name: &str, ok: bool| {
            if ok {
                Ok(())
            } else {
                Err(ValidationError { kind, name: owner.to_string(), message: format!("unknown {what} `{name}`") })
            }
        };
        for f in &self.floors {
            need("floor", &f.name, "decomposition", &f.decomposition, self.decomposition(&f.decomposition).is_some())?;
            need("floor", &f.name, "map", &f.retraction, self.map(&f.retraction).is_some())?;
            if let Some(i) = &f.inclusion {
                need("floor", &f.name, "map", i, self.map(i).is_some())?;
            }
            if let Some(x) = &f.extension {
                need("floor", &f.name, "map", &x.map, self.map(&x.map).is_some())?;
            }
            if let Some(id) = &f.identification {
                need("floor", &f.name, "presentation", &id.ambient, self.presentation(&id.ambient).is_some())?;
                need("floor", &f.name, "map", &id.forward, self.map(&id.forward).is_some())?;
                need("floor", &f.name, "map", &id.backward, self.map(&id.backward).is_some())?;
            }
        }
        for t in &self.towers {
            need("tower", &t.name, "presentation", &t.ambient, self.presentation(&t.ambient).is_some())?;
            for f in &t.floors {
                need("tower", &t.name, "floor", f, self.floor(f).is_some())?;
            }
        }
        Ok(())
    }
}

fn is_bare(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || matches!(c, '_' | '-' | '.' | '\''))
        && !name.contains("->")
        && !matches!(name, "true" | "false")
}

fn name(s: &str) -> String {
    if is_bare(s) {
        s.to_string()
    } else {
        quoted(s)
    }
}

fn quoted(s: &str) -> String {
    let mut out = String::from("\"");
    for c in s.chars() {
        match c {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

fn names(items: &[String]) -> String {
    format!("[{}]", items.iter().map(|s| name(s)).collect::<Vec<_>>().join(", "))
}

fn words(items: &[Word]) -> String {
    format!("[{}]", items.iter().map(|w| quoted(&w.to_string())).collect::<Vec<_>>().join(", "))
}

fn surface_fields(out: &mut String, indent: &str, s: &SurfaceDatum) {
    let _ = writeln!(out, "{indent}orientable = {}", s.is_orientable());
    let _ = writeln!(out, "{indent}chi = {}", s.euler_char());
    let _ = writeln!(out, "{indent}boundary = {}", s.boundary_count());
}

/// Canonical text form; [`crate::syntax::parse`] reads it back to an equal
/// document.
impl fmt::Display for InputDocument {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for p in &self.presentations {
            let _ = writeln!(out, "presentation {} {{", name(&p.name));
            let _ = writeln!(out, "  generators = {}", names(&p.generators));
            let _ = writeln!(out, "  relators = {}", words(&p.relators));
            out.push_str("}\n\n");
        }
        for s in &self.surfaces {
            let _ = writeln!(out, "surface {} {{", name(&s.name));
            surface_fields(&mut out, "  ", &s.datum);
            out.push_str("}\n\n");
        }
        for d in &self.decompositions {
            let _ = writeln!(out, "decomposition {} {{", name(&d.name));
            for v in &d.vertices {
                let _ = writeln!(out, "  vertex {} {{", name(&v.id));
                let _ = writeln!(out, "    generators = {}", names(&v.generators));
                if !v.relators.is_empty() {
                    let _ = writeln!(out, "    relators = {}", words(&v.relators));
                }
                if let Some(s) = &v.surface {
                    out.push_str("    surface {\n");
                    surface_fields(&mut out, "      ", s);
                    out.push_str("    }\n");
                }
                out.push_str("  }\n");
            }
            for e in &d.edges {
                let _ = writeln!(out, "  edge {} {{", name(&e.id));
                for (v, w) in &e.embeddings {
                    let _ = writeln!(out, "    embedding_at = {}: {}", name(v), quoted(&w.to_string()));
                }
                let _ = writeln!(out, "    tree = {}", e.tree);
                if let Some(t) = &e.stable_letter {
                    let _ = writeln!(out, "    stable_letter = {}", name(t));
                }
                out.push_str("  }\n");
            }
            out.push_str("}\n\n");
        }
        for m in &self.maps {
            let pairs: Vec<String> =
                m.images.iter().map(|(g, w)| format!("{} -> {}", name(g), quoted(&w.to_string()))).collect();
            let _ = writeln!(out, "map {} {{ {} }}\n", name(&m.name), pairs.join(", "));
        }
        for fl in &self.floors {
            let _ = writeln!(out, "floor {} {{", name(&fl.name));
            let _ = writeln!(out, "  decomposition = {}", name(&fl.decomposition));
            let _ = writeln!(out, "  retraction = {}", name(&fl.retraction));
            let _ = writeln!(out, "  fill = {}", fl.fill.keyword());
            if let Some(i) = &fl.inclusion {
                let _ = writeln!(out, "  inclusion = {}", name(i));
            }
            if let Some(x) = &fl.extension {
                let _ = writeln!(
                    out,
                    "  extension {{ letter = {}, map = {}, fill = {} }}",
                    name(&x.letter),
                    name(&x.map),
                    x.fill.keyword()
                );
            }
            if let Some(id) = &fl.identification {
                let _ = writeln!(
                    out,
                    "  identification {{ ambient = {}, forward = {}, backward = {} }}",
                    name(&id.ambient),
                    name(&id.forward),
                    name(&id.backward)
                );
            }
            out.push_str("}\n\n");
        }
        for t in &self.towers {
            let _ = writeln!(out, "tower {} {{", name(&t.name));
            let _ = writeln!(out, "  ambient = {}", name(&t.ambient));
            let _ = writeln!(out, "  floors = {}", names(&t.floors));
            for w in &t.witnesses {
                let _ = writeln!(out, "  witness {{ vertex = {}, words = {} }}", name(&w.vertex), words(&w.words));
            }
            let _ = writeln!(out, "  base = {}", names(&t.base));
            let _ = writeln!(out, "  free = {}", names(&t.free));
            for g in &t.ground_surfaces {
                out.push_str("  ground_surface {\n");
                surface_fields(&mut out, "    ", &g.datum);
                let _ = writeln!(out, "    generators = {}", names(&g.generators));
                out.push_str("  }\n");
            }
            out.push_str("}\n\n");
        }
        f.write_str(out.trim_end())?;
        if !out.is_empty() {
            f.write_char('\n')?;
        }
        Ok(())
    }
}
