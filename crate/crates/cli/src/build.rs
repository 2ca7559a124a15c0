//! Turning document declarations into core objects.

use thiserror::Error;
use tower_core::catalog::builtin_group;
use tower_core::gog::GogError;
use tower_core::towers::{BaseWitness, GroundFloor, TowerError};
use tower_core::word::WordError;
use tower_core::word_problem::ModelError;
use tower_core::{
    Alphabet, EdgeData, FloorCandidate, Generator, GraphOfGroupsWithSurfaces, Presentation, TowerCandidate,
    VertexData,
};

use crate::document::*;

#[derive(Debug, Error)]
pub enum BuildError {
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
    #[error("{context}: {message}")]
    Invalid { context: String, message: String },
}

fn invalid(context: &str, e: impl std::fmt::Display) -> BuildError {
    BuildError::Invalid { context: context.to_string(), message: e.to_string() }
}

fn generators(context: &str, names: &[String]) -> Result<Vec<Generator>, BuildError> {
    names.iter().map(|n| Generator::new(n).map_err(|e: WordError| invalid(context, e))).collect()
}

pub fn presentation(p: &PresentationDecl) -> Result<Presentation, BuildError> {
    let ctx = format!("presentation {}", p.name);
    let alpha = Alphabet::new(generators(&ctx, &p.generators)?).map_err(|e| invalid(&ctx, e))?;
    Presentation::new(alpha, p.relators.clone()).map_err(|e: ModelError| invalid(&ctx, e))
}

/// A presentation declared in `doc`, else a built-in group.
pub fn group(doc: Option<&InputDocument>, name: &str) -> Result<Presentation, BuildError> {
    if let Some(p) = doc.and_then(|d| d.presentation(name)) {
        return presentation(p);
    }
    builtin_group(name).ok_or_else(|| BuildError::Unknown { kind: "group", name: name.to_string() })
}

pub fn decomposition(d: &DecompositionDecl) -> Result<GraphOfGroupsWithSurfaces, BuildError> {
    let ctx = format!("decomposition {}", d.name);
    let mut vertices = Vec::new();
    for v in &d.vertices {
        let vertex = match v.surface {
            Some(datum) => {
                if !v.relators.is_empty() {
                    return Err(invalid(&ctx, format!("surface vertex `{}` takes no relators", v.id)));
                }
                let names: Vec<&str> = v.generators.iter().map(String::as_str).collect();
                VertexData::surface(v.id.clone(), datum, &names).map_err(|e: GogError| invalid(&ctx, e))?
            }
            None => {
                let alpha = Alphabet::new(generators(&ctx, &v.generators)?).map_err(|e| invalid(&ctx, e))?;
                let p = Presentation::new(alpha, v.relators.clone()).map_err(|e| invalid(&ctx, e))?;
                VertexData::plain(v.id.clone(), p)
            }
        };
        vertices.push(vertex);
    }
    let mut edges = Vec::new();
    for e in &d.edges {
        let [(a, wa), (b, wb)] = &e.embeddings;
        let (src, dst) = ((a.as_str(), wa.clone()), (b.as_str(), wb.clone()));
        let edge = match (&e.stable_letter, e.tree) {
            (_, true) => EdgeData::tree(e.id.clone(), src, dst),
            (Some(t), false) => {
                let t = Generator::new(t).map_err(|err| invalid(&ctx, err))?;
                EdgeData::stable(e.id.clone(), t, src, dst)
            }
            (None, false) => return Err(invalid(&ctx, format!("edge `{}` needs a stable letter", e.id))),
        };
        edges.push(edge);
    }
    GraphOfGroupsWithSurfaces::new(vertices, edges).map_err(|e| invalid(&ctx, e))
}

fn pairs(m: &MapDecl) -> Vec<(String, String)> {
    m.images.iter().map(|(g, w)| (g.clone(), w.to_string())).collect()
}

fn borrowed(p: &[(String, String)]) -> Vec<(&str, &str)> {
    p.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect()
}

fn lookup_map<'a>(doc: &'a InputDocument, name: &str) -> Result<&'a MapDecl, BuildError> {
    doc.map(name).ok_or_else(|| BuildError::Unknown { kind: "map", name: name.to_string() })
}

pub fn floor(doc: &InputDocument, f: &FloorDecl) -> Result<FloorCandidate, BuildError> {
    let ctx = format!("floor {}", f.name);
    let tower_err = |e: TowerError| invalid(&ctx, e);
    let d = doc
        .decomposition(&f.decomposition)
        .ok_or_else(|| BuildError::Unknown { kind: "decomposition", name: f.decomposition.clone() })?;
    let r = pairs(lookup_map(doc, &f.retraction)?);
    let mut c = FloorCandidate::new(f.name.clone(), decomposition(d)?, &borrowed(&r), f.fill.into()).map_err(tower_err)?;
    if let Some(i) = &f.inclusion {
        let p = pairs(lookup_map(doc, i)?);
        c = c.with_inclusion(&borrowed(&p)).map_err(tower_err)?;
    }
    if let Some(x) = &f.extension {
        let p = pairs(lookup_map(doc, &x.map)?);
        c = c.with_extension(&x.letter, &borrowed(&p), x.fill.into()).map_err(tower_err)?;
    }
    if let Some(id) = &f.identification {
        let ambient = group(Some(doc), &id.ambient)?;
        let fwd = pairs(lookup_map(doc, &id.forward)?);
        let bwd = pairs(lookup_map(doc, &id.backward)?);
        c = c.with_identification(ambient, &borrowed(&fwd), &borrowed(&bwd)).map_err(tower_err)?;
    }
    Ok(c)
}

pub fn tower(doc: &InputDocument, t: &TowerDecl) -> Result<TowerCandidate, BuildError> {
    let ctx = format!("tower {}", t.name);
    let floors = t
        .floors
        .iter()
        .map(|n| {
            let f = doc.floor(n).ok_or_else(|| BuildError::Unknown { kind: "floor", name: n.clone() })?;
            floor(doc, f)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let witnesses = t.witnesses.iter().map(|w| BaseWitness { vertex: w.vertex.clone(), words: w.words.clone() }).collect();
    let surfaces = t
        .ground_surfaces
        .iter()
        .map(|g| Ok((g.datum, generators(&ctx, &g.generators)?)))
        .collect::<Result<Vec<_>, BuildError>>()?;
    Ok(TowerCandidate {
        name: t.name.clone(),
        ambient: group(Some(doc), &t.ambient)?,
        floors,
        witnesses,
        ground: GroundFloor { base: generators(&ctx, &t.base)?, free: generators(&ctx, &t.free)?, surfaces },
    })
}
