//! Text and JSON readers for [`InputDocument`].
//!
//! ```text
//! presentation S4 { generators = [d1, d2, d3, d4]  relators = ["d1 d1 d2 d2 d3 d3 d4 d4"] }
//! map r { h -> "h", a -> "h" }
//! ```
//!
//! A document is a sequence of `kind name { ... }` blocks. Inside a block,
//! entries are `key = value`, nested blocks, or `generator -> "word"` pairs,
//! optionally separated by commas or semicolons. `#` starts a comment.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;
use tower_core::{SurfaceDatum, Word};

use crate::document::*;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{line}:{col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl Pos {
    fn error(self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, col: self.col, message: message.into() }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Str(String),
    Int(i64),
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Comma,
    Semi,
    Colon,
    Eq,
    Arrow,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Str(s) => write!(f, "string {s:?}"),
            Tok::Int(n) => write!(f, "integer {n}"),
            Tok::LBrace => f.write_str("`{`"),
            Tok::RBrace => f.write_str("`}`"),
            Tok::LBracket => f.write_str("`[`"),
            Tok::RBracket => f.write_str("`]`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Colon => f.write_str("`:`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, Pos)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    let advance = |i: &mut usize, line: &mut usize, col: &mut usize, c: char| {
        *i += 1;
        if c == '\n' {
            *line += 1;
            *col = 1;
        } else {
            *col += 1;
        }
    };
    while i < chars.len() {
        let c = chars[i];
        let pos = Pos { line, col };
        if c.is_whitespace() {
            advance(&mut i, &mut line, &mut col, c);
            continue;
        }
        if c == '#' {
            while i < chars.len() && chars[i] != '\n' {
                let d = chars[i];
                advance(&mut i, &mut line, &mut col, d);
            }
            continue;
        }
        let single = match c {
            '{' => Some(Tok::LBrace),
            '}' => Some(Tok::RBrace),
            '[' => Some(Tok::LBracket),
            ']' => Some(Tok::RBracket),
            ',' => Some(Tok::Comma),
            ';' => Some(Tok::Semi),
            ':' => Some(Tok::Colon),
            '=' => Some(Tok::Eq),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, pos));
            advance(&mut i, &mut line, &mut col, c);
            continue;
        }
        if c == '-' && chars.get(i + 1) == Some(&'>') {
            out.push((Tok::Arrow, pos));
            advance(&mut i, &mut line, &mut col, c);
            advance(&mut i, &mut line, &mut col, '>');
            continue;
        }
        if c == '"' {
            advance(&mut i, &mut line, &mut col, c);
            let mut s = String::new();
            loop {
                let Some(&d) = chars.get(i) else {
                    return Err(pos.error("unterminated string"));
                };
                advance(&mut i, &mut line, &mut col, d);
                match d {
                    '"' => break,
                    '\\' => {
                        let Some(&e) = chars.get(i) else {
                            return Err(pos.error("unterminated string"));
                        };
                        advance(&mut i, &mut line, &mut col, e);
                        s.push(match e {
                            'n' => '\n',
                            't' => '\t',
                            other => other,
                        });
                    }
                    d => s.push(d),
                }
            }
            out.push((Tok::Str(s), pos));
            continue;
        }
        if c.is_ascii_digit() || (c == '-' && chars.get(i + 1).is_some_and(char::is_ascii_digit)) {
            let start = i;
            advance(&mut i, &mut line, &mut col, c);
            while i < chars.len() && chars[i].is_ascii_digit() {
                let d = chars[i];
                advance(&mut i, &mut line, &mut col, d);
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| pos.error(format!("integer out of range: {s}")))?;
            out.push((Tok::Int(n), pos));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() {
                let d = chars[i];
                let continues = d.is_ascii_alphanumeric()
                    || matches!(d, '_' | '.' | '\'')
                    || (d == '-' && chars.get(i + 1) != Some(&'>'));
                if !continues {
                    break;
                }
                advance(&mut i, &mut line, &mut col, d);
            }
            out.push((Tok::Ident(chars[start..i].iter().collect()), pos));
            continue;
        }
        return Err(pos.error(format!("unexpected character `{c}`")));
    }
    out.push((Tok::Eof, Pos { line, col }));
    Ok(out)
}

#[derive(Debug, Clone)]
enum Value {
    Ident(String, Pos),
    Str(String, Pos),
    Int(i64, Pos),
    List(Vec<Value>, Pos),
    Tagged(String, String, Pos),
}

impl Value {
    fn pos(&self) -> Pos {
        match self {
            Value::Ident(_, p) | Value::Str(_, p) | Value::Int(_, p) | Value::List(_, p) | Value::Tagged(_, _, p) => *p,
        }
    }
}

#[derive(Debug, Clone)]
enum Item {
    Assign(String, Pos, Value),
    Block(Block),
    Pair(String, Pos, String, Pos),
}

#[derive(Debug, Clone)]
struct Block {
    kind: String,
    name: Option<String>,
    pos: Pos,
    items: Vec<Item>,
}

struct Parser {
    toks: Vec<(Tok, Pos)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].0
    }

    fn peek2(&self) -> &Tok {
        &self.toks[(self.at + 1).min(self.toks.len() - 1)].0
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].1
    }

    fn bump(&mut self) -> (Tok, Pos) {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok) -> Result<Pos, ParseError> {
        let (t, p) = self.bump();
        if t == want {
            Ok(p)
        } else {
            Err(p.error(format!("expected {want}, found {t}")))
        }
    }

    fn name(&mut self) -> Result<(String, Pos), ParseError> {
        match self.bump() {
            (Tok::Ident(s), p) | (Tok::Str(s), p) => Ok((s, p)),
            (t, p) => Err(p.error(format!("expected a name, found {t}"))),
        }
    }

    fn document(&mut self) -> Result<Vec<Block>, ParseError> {
        let mut blocks = Vec::new();
        while *self.peek() != Tok::Eof {
            blocks.push(self.block()?);
            self.separators();
        }
        Ok(blocks)
    }

    fn separators(&mut self) {
        while matches!(self.peek(), Tok::Comma | Tok::Semi) {
            self.bump();
        }
    }

    fn block(&mut self) -> Result<Block, ParseError> {
        let (kind, pos) = match self.bump() {
            (Tok::Ident(s), p) => (s, p),
            (t, p) => return Err(p.error(format!("expected a declaration, found {t}"))),
        };
        let name = if *self.peek() == Tok::LBrace { None } else { Some(self.name()?.0) };
        self.expect(Tok::LBrace)?;
        let mut items = Vec::new();
        loop {
            self.separators();
            if *self.peek() == Tok::RBrace {
                self.bump();
                break;
            }
            if *self.peek() == Tok::Eof {
                return Err(self.pos().error(format!("unclosed `{kind}` block")));
            }
            items.push(self.item()?);
        }
        Ok(Block { kind, name, pos, items })
    }

    fn item(&mut self) -> Result<Item, ParseError> {
        match (self.peek().clone(), self.peek2().clone()) {
            (Tok::Ident(_) | Tok::Str(_), Tok::Arrow) => {
                let (from, fp) = self.name()?;
                self.bump();
                match self.bump() {
                    (Tok::Str(w), wp) => Ok(Item::Pair(from, fp, w, wp)),
                    (t, p) => Err(p.error(format!("expected a quoted word, found {t}"))),
                }
            }
            (Tok::Ident(key), Tok::Eq) => {
                let p = self.pos();
                self.bump();
                self.bump();
                Ok(Item::Assign(key, p, self.value()?))
            }
            (Tok::Ident(_), _) => Ok(Item::Block(self.block()?)),
            (t, _) => Err(self.pos().error(format!("expected an entry, found {t}"))),
        }
    }

    fn value(&mut self) -> Result<Value, ParseError> {
        let (t, p) = self.bump();
        Ok(match t {
            Tok::Ident(s) if *self.peek() == Tok::Colon => {
                self.bump();
                match self.bump() {
                    (Tok::Str(w), _) => Value::Tagged(s, w, p),
                    (t, q) => return Err(q.error(format!("expected a quoted word after `{s}:`, found {t}"))),
                }
            }
            Tok::Ident(s) => Value::Ident(s, p),
            Tok::Str(s) => Value::Str(s, p),
            Tok::Int(n) => Value::Int(n, p),
            Tok::LBracket => {
                let mut items = Vec::new();
                loop {
                    self.separators();
                    if *self.peek() == Tok::RBracket {
                        self.bump();
                        break;
                    }
                    items.push(self.value()?);
                    if !matches!(self.peek(), Tok::Comma | Tok::RBracket) {
                        let (t, q) = self.bump();
                        return Err(q.error(format!("expected `,` or `]`, found {t}")));
                    }
                }
                Value::List(items, p)
            }
            t => return Err(p.error(format!("expected a value, found {t}"))),
        })
    }
}

/// Assignments of one block, consumed key by key; leftovers are errors.
struct Fields {
    kind: String,
    pos: Pos,
    assigns: Vec<(String, Pos, Value)>,
    blocks: Vec<Block>,
    pairs: Vec<(String, Pos, String, Pos)>,
}

impl Fields {
    fn new(b: Block) -> Result<Self, ParseError> {
        let mut f = Fields { kind: b.kind, pos: b.pos, assigns: Vec::new(), blocks: Vec::new(), pairs: Vec::new() };
        for item in b.items {
            match item {
                Item::Assign(k, p, v) => {
                    if k != "embedding_at" && f.assigns.iter().any(|(k2, _, _)| *k2 == k) {
                        return Err(p.error(format!("duplicate key `{k}`")));
                    }
                    f.assigns.push((k, p, v));
                }
                Item::Block(b) => f.blocks.push(b),
                Item::Pair(a, ap, w, wp) => f.pairs.push((a, ap, w, wp)),
            }
        }
        Ok(f)
    }

    fn take(&mut self, key: &str) -> Option<Value> {
        let i = self.assigns.iter().position(|(k, _, _)| k == key)?;
        Some(self.assigns.remove(i).2)
    }

    fn required(&mut self, key: &str) -> Result<Value, ParseError> {
        self.take(key).ok_or_else(|| self.pos.error(format!("`{}` block is missing `{key}`", self.kind)))
    }

    fn take_all(&mut self, key: &str) -> Vec<Value> {
        let mut out = Vec::new();
        while let Some(v) = self.take(key) {
            out.push(v);
        }
        out
    }

    fn take_blocks(&mut self, kind: &str) -> Vec<Block> {
        let (hit, rest) = std::mem::take(&mut self.blocks).into_iter().partition(|b| b.kind == kind);
        self.blocks = rest;
        hit
    }

    fn finish(self) -> Result<(), ParseError> {
        if let Some((k, p, _)) = self.assigns.first() {
            return Err(p.error(format!("unknown key `{k}` in `{}` block", self.kind)));
        }
        if let Some(b) = self.blocks.first() {
            return Err(b.pos.error(format!("unexpected `{}` block inside `{}`", b.kind, self.kind)));
        }
        if let Some((_, p, _, _)) = self.pairs.first() {
            return Err(p.error(format!("`->` pairs are only allowed in maps, not in `{}`", self.kind)));
        }
        Ok(())
    }
}

fn ident(v: Value) -> Result<String, ParseError> {
    match v {
        Value::Ident(s, _) | Value::Str(s, _) => Ok(s),
        other => Err(other.pos().error("expected a name")),
    }
}

fn boolean(v: Value) -> Result<bool, ParseError> {
    match v {
        Value::Ident(s, _) if s == "true" => Ok(true),
        Value::Ident(s, _) if s == "false" => Ok(false),
        other => Err(other.pos().error("expected `true` or `false`")),
    }
}

fn integer(v: Value) -> Result<i64, ParseError> {
    match v {
        Value::Int(n, _) => Ok(n),
        other => Err(other.pos().error("expected an integer")),
    }
}

fn word_at(text: &str, pos: Pos) -> Result<Word, ParseError> {
    Word::parse(text).map_err(|e| pos.error(e.to_string()))
}

fn word(v: Value) -> Result<Word, ParseError> {
    match v {
        Value::Str(s, p) => word_at(&s, p),
        other => Err(other.pos().error("expected a quoted word")),
    }
}

fn list<T>(v: Value, f: impl Fn(Value) -> Result<T, ParseError>) -> Result<Vec<T>, ParseError> {
    match v {
        Value::List(items, _) => items.into_iter().map(f).collect(),
        other => Err(other.pos().error("expected a list `[...]`")),
    }
}

fn fill(v: Value) -> Result<FillMode, ParseError> {
    let p = v.pos();
    let s = ident(v)?;
    FillMode::from_keyword(&s).ok_or_else(|| p.error(format!("fill must be required, trivial or identity, not `{s}`")))
}

fn block_name(b: &Block) -> Result<String, ParseError> {
    b.name.clone().ok_or_else(|| b.pos.error(format!("`{}` block needs a name", b.kind)))
}

fn no_name(b: &Block) -> Result<(), ParseError> {
    match &b.name {
        Some(n) => Err(b.pos.error(format!("`{}` block takes no name, found `{n}`", b.kind))),
        None => Ok(()),
    }
}

fn surface_datum(f: &mut Fields) -> Result<SurfaceDatum, ParseError> {
    let orientable = boolean(f.required("orientable")?)?;
    let chi = integer(f.required("chi")?)?;
    let boundary_value = f.required("boundary")?;
    let bp = boundary_value.pos();
    let boundary = u32::try_from(integer(boundary_value)?).map_err(|_| bp.error("boundary must be non-negative"))?;
    SurfaceDatum::new(orientable, chi, boundary).map_err(|e| f.pos.error(e.to_string()))
}

fn presentation(b: Block) -> Result<PresentationDecl, ParseError> {
    let name = block_name(&b)?;
    let mut f = Fields::new(b)?;
    let generators = list(f.required("generators")?, ident)?;
    let relators = f.take("relators").map(|v| list(v, word)).transpose()?.unwrap_or_default();
    f.finish()?;
    Ok(PresentationDecl { name, generators, relators })
}

fn surface(b: Block) -> Result<SurfaceDecl, ParseError> {
    let name = block_name(&b)?;
    let mut f = Fields::new(b)?;
    let datum = surface_datum(&mut f)?;
    f.finish()?;
    Ok(SurfaceDecl { name, datum })
}

fn vertex(b: Block) -> Result<VertexDecl, ParseError> {
    let id = block_name(&b)?;
    let mut f = Fields::new(b)?;
    let generators = list(f.required("generators")?, ident)?;
    let relators = f.take("relators").map(|v| list(v, word)).transpose()?.unwrap_or_default();
    let mut surfaces = f.take_blocks("surface");
    if surfaces.len() > 1 {
        return Err(surfaces[1].pos.error("a vertex has at most one surface"));
    }
    let surface = match surfaces.pop() {
        Some(s) => {
            no_name(&s)?;
            let mut sf = Fields::new(s)?;
            let d = surface_datum(&mut sf)?;
            sf.finish()?;
            Some(d)
        }
        None => None,
    };
    f.finish()?;
    Ok(VertexDecl { id, generators, relators, surface })
}

fn edge(b: Block) -> Result<EdgeDecl, ParseError> {
    let id = block_name(&b)?;
    let pos = b.pos;
    let mut f = Fields::new(b)?;
    let mut ends = Vec::new();
    for v in f.take_all("embedding_at") {
        match v {
            Value::Tagged(vertex, w, p) => ends.push((vertex, word_at(&w, p)?)),
            other => return Err(other.pos().error("expected `<vertex>: \"<word>\"`")),
        }
    }
    let embeddings: [(String, Word); 2] =
        ends.try_into().map_err(|_| pos.error(format!("edge `{id}` needs exactly two `embedding_at` entries")))?;
    let tree = f.take("tree").map(boolean).transpose()?.unwrap_or(true);
    let stable_letter = f.take("stable_letter").map(ident).transpose()?;
    f.finish()?;
    Ok(EdgeDecl { id, embeddings, tree, stable_letter })
}

fn decomposition(b: Block) -> Result<DecompositionDecl, ParseError> {
    let name = block_name(&b)?;
    let mut f = Fields::new(b)?;
    let vertices = f.take_blocks("vertex").into_iter().map(vertex).collect::<Result<_, _>>()?;
    let edges = f.take_blocks("edge").into_iter().map(edge).collect::<Result<_, _>>()?;
    f.finish()?;
    Ok(DecompositionDecl { name, vertices, edges })
}

fn map(b: Block) -> Result<MapDecl, ParseError> {
    let name = block_name(&b)?;
    let mut f = Fields::new(b)?;
    let mut images = Vec::new();
    for (g, gp, w, wp) in std::mem::take(&mut f.pairs) {
        if images.iter().any(|(h, _)| *h == g) {
            return Err(gp.error(format!("`{g}` is mapped twice")));
        }
        images.push((g, word_at(&w, wp)?));
    }
    f.finish()?;
    Ok(MapDecl { name, images })
}

fn floor(b: Block) -> Result<FloorDecl, ParseError> {
    let name = block_name(&b)?;
    let mut f = Fields::new(b)?;
    let decomposition = ident(f.required("decomposition")?)?;
    let retraction = ident(f.required("retraction")?)?;
    let fill_mode = f.take("fill").map(fill).transpose()?.unwrap_or_default();
    let inclusion = f.take("inclusion").map(ident).transpose()?;
    let mut extension = None;
    for x in f.take_blocks("extension") {
        if extension.is_some() {
            return Err(x.pos.error("duplicate `extension` block"));
        }
        no_name(&x)?;
        let mut xf = Fields::new(x)?;
        let letter = ident(xf.required("letter")?)?;
        let map = ident(xf.required("map")?)?;
        let fill_mode = xf.take("fill").map(fill).transpose()?.unwrap_or_default();
        xf.finish()?;
        extension = Some(ExtensionDecl { letter, map, fill: fill_mode });
    }
    let mut identification = None;
    for x in f.take_blocks("identification") {
        if identification.is_some() {
            return Err(x.pos.error("duplicate `identification` block"));
        }
        no_name(&x)?;
        let mut xf = Fields::new(x)?;
        let ambient = ident(xf.required("ambient")?)?;
        let forward = ident(xf.required("forward")?)?;
        let backward = ident(xf.required("backward")?)?;
        xf.finish()?;
        identification = Some(IdentificationDecl { ambient, forward, backward });
    }
    f.finish()?;
    Ok(FloorDecl { name, decomposition, retraction, fill: fill_mode, inclusion, extension, identification })
}

fn tower(b: Block) -> Result<TowerDecl, ParseError> {
    let name = block_name(&b)?;
    let mut f = Fields::new(b)?;
    let ambient = ident(f.required("ambient")?)?;
    let floors = f.take("floors").map(|v| list(v, ident)).transpose()?.unwrap_or_default();
    let base = f.take("base").map(|v| list(v, ident)).transpose()?.unwrap_or_default();
    let free = f.take("free").map(|v| list(v, ident)).transpose()?.unwrap_or_default();
    let mut witnesses = Vec::new();
    for w in f.take_blocks("witness") {
        no_name(&w)?;
        let mut wf = Fields::new(w)?;
        let vertex = ident(wf.required("vertex")?)?;
        let words = list(wf.required("words")?, word)?;
        wf.finish()?;
        witnesses.push(WitnessDecl { vertex, words });
    }
    let mut ground_surfaces = Vec::new();
    for g in f.take_blocks("ground_surface") {
        no_name(&g)?;
        let mut gf = Fields::new(g)?;
        let datum = surface_datum(&mut gf)?;
        let generators = list(gf.required("generators")?, ident)?;
        gf.finish()?;
        ground_surfaces.push(GroundSurfaceDecl { datum, generators });
    }
    f.finish()?;
    Ok(TowerDecl { name, ambient, floors, witnesses, base, free, ground_surfaces })
}

/// Parses the text format.
pub fn parse(text: &str) -> Result<InputDocument, ParseError> {
    let toks = lex(text)?;
    let blocks = Parser { toks, at: 0 }.document()?;
    let mut doc = InputDocument::default();
    let mut positions: HashMap<(&'static str, String), Pos> = HashMap::new();
    for b in blocks {
        let pos = b.pos;
        let key = |kind: &'static str, name: &str| ((kind, name.to_string()), pos);
        let (k, p) = match b.kind.as_str() {
            "presentation" => {
                let d = presentation(b)?;
                let e = key("presentation", &d.name);
                doc.presentations.push(d);
                e
            }
            "surface" => {
                let d = surface(b)?;
                let e = key("surface", &d.name);
                doc.surfaces.push(d);
                e
            }
            "decomposition" => {
                let d = decomposition(b)?;
                let e = key("decomposition", &d.name);
                doc.decompositions.push(d);
                e
            }
            "map" => {
                let d = map(b)?;
                let e = key("map", &d.name);
                doc.maps.push(d);
                e
            }
            "floor" => {
                let d = floor(b)?;
                let e = key("floor", &d.name);
                doc.floors.push(d);
                e
            }
            "tower" => {
                let d = tower(b)?;
                let e = key("tower", &d.name);
                doc.towers.push(d);
                e
            }
            other => return Err(pos.error(format!("unknown declaration `{other}`"))),
        };
        positions.entry(k).or_insert(p);
    }
    doc.validate().map_err(|e| {
        let p = positions.get(&(e.kind, e.name.clone())).copied().unwrap_or_default();
        p.error(e.to_string())
    })?;
    Ok(doc)
}

/// Parses the JSON form (the serde encoding of [`InputDocument`]).
pub fn parse_json(text: &str) -> Result<InputDocument, ParseError> {
    let doc: InputDocument = serde_json::from_str(text)
        .map_err(|e| ParseError { line: e.line(), col: e.column(), message: e.to_string() })?;
    for s in doc
        .surfaces
        .iter()
        .map(|s| s.datum)
        .chain(doc.decompositions.iter().flat_map(|d| d.vertices.iter().filter_map(|v| v.surface)))
        .chain(doc.towers.iter().flat_map(|t| t.ground_surfaces.iter().map(|g| g.datum)))
    {
        SurfaceDatum::new(s.is_orientable(), s.euler_char(), s.boundary_count())
            .map_err(|e| ParseError { line: 0, col: 0, message: e.to_string() })?;
    }
    doc.validate().map_err(|e| ParseError { line: 0, col: 0, message: e.to_string() })?;
    Ok(doc)
}

/// JSON when the first non-blank character is `{`, text otherwise.
pub fn parse_any(text: &str) -> Result<InputDocument, ParseError> {
    if text.trim_start().starts_with('{') && serde_json::from_str::<serde_json::Value>(text).is_ok() {
        parse_json(text)
    } else {
        parse(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_in_errors() {
        let e = parse("presentation P {\n  generators = [a\n}").unwrap_err();
        assert_eq!((e.line, e.col), (3, 1));
        let e = parse("map m { a -> b }").unwrap_err();
        assert_eq!((e.line, e.col), (1, 14));
        let e = parse("floor f {\n  decomposition = d\n  retraction = r\n}").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(e.message.contains("unknown decomposition"));
    }

    #[test]
    fn identifiers_stop_before_arrows() {
        let d = parse("map m { a->\"b\", c -> \"a^-1\" }").unwrap();
        assert_eq!(d.maps[0].images.len(), 2);
    }

    #[test]
    fn comments_and_separators() {
        let d = parse("# header\npresentation P { generators = [a, b]; relators = [\"a b a^-1 b^-1\"], }").unwrap();
        assert_eq!(d.presentations[0].generators, vec!["a", "b"]);
    }
}
