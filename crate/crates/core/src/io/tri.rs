//! The TRI text format.
//!
//! ```text
//! TRI 1
//! FACE <name> <sides>
//! GLUE <face>.<side> <face>.<side>
//! LABEL <face>.<side> <label>
//! MARK <name> IN <face>
//! CURVE <family> <name> : <chord>{,<chord>}
//! ARC <family> <name> : <chord>{,<chord>}
//! META <key> <value...>
//! ```
//!
//! A chord is `<face>[<end>-><end>]` with an end either `<side>.<order>`
//! (order counted along the side from its start corner) or `MARK <name>`.
//! Families are `alpha`, `beta`, `gamma`, or `none` for loose curves.

use std::collections::{BTreeMap, BTreeSet};

use crate::combsurf::{CombSurface, FaceId, Slot};
use crate::curves::{Chord, Curve, Drawing, End};
use crate::diagrams::{Diagram, Family, Params};
use crate::error::{Error, Result};

/// A parsed file: the diagram plus its `META` entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriDocument {
    pub diagram: Diagram,
    pub meta: BTreeMap<String, String>,
}

impl TriDocument {
    pub fn new(diagram: Diagram) -> Self {
        TriDocument { diagram, meta: BTreeMap::new() }
    }

    /// Parameters named by `META params`, if any.
    pub fn declared_params(&self) -> Result<Option<Params>> {
        self.meta.get("params").map(|s| parse_params(s)).transpose()
    }
}

fn token(s: &str) -> String {
    let t: String = s
        .chars()
        .map(|c| if c.is_whitespace() || "[],.:".contains(c) { '_' } else { c })
        .collect();
    if t.is_empty() || t == "MARK" {
        format!("_{t}")
    } else {
        t
    }
}

/// Parameters in the `Display` form of [`Params`].
pub fn parse_params(s: &str) -> Result<Params> {
    let bad = || Error::SyntaxError { line: 0, col: 0, msg: format!("bad parameters `{s}`") };
    let (head, tail) = s.split_once('=').ok_or_else(bad)?;
    let nums: Vec<u32> = tail
        .trim_matches(|c| c == '(' || c == ')')
        .split([',', ';'])
        .map(|x| x.trim().parse().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match (head, &nums[..]) {
        ("(g,k)", &[g, k]) => Ok(Params::Closed { g, k: [k; 3] }),
        ("(g;k1,k2,k3)", &[g, a, b, c]) => Ok(Params::Closed { g, k: [a, b, c] }),
        ("(g,k,p,b)", &[g, k, p, b]) => Ok(Params::Relative { g, k, p, b }),
        ("(g,k;c,b)", &[g, k, c, b]) => Ok(Params::Shadow { g, k, c, b }),
        _ => Err(bad()),
    }
}

/// Canonical text: faces in id order, gluings and labels sorted, curves
/// grouped by family in the diagram's order, then loose curves by name.
pub fn write_tri(doc: &TriDocument) -> String {
    let d = &doc.diagram;
    let s = d.drawing.surface();
    let mut names: BTreeMap<FaceId, String> = BTreeMap::new();
    let mut used = BTreeSet::new();
    for id in s.face_ids() {
        let base = token(&s.face(id).name);
        let mut name = base.clone();
        let mut k = 1;
        while !used.insert(name.clone()) {
            name = format!("{base}#{k}");
            k += 1;
        }
        names.insert(id, name);
    }
    let slot = |sl: Slot| format!("{}.{}", names[&sl.face], sl.side);
    let mut out = String::from("TRI 1\n");
    for (id, n) in &names {
        out += &format!("FACE {n} {}\n", s.sides(*id));
    }
    let key = |sl: Slot| (names[&sl.face].clone(), sl.side);
    let mut glues: Vec<(Slot, Slot)> = s
        .pairs()
        .map(|(a, b)| if key(a) <= key(b) { (a, b) } else { (b, a) })
        .collect();
    glues.sort_by_key(|(a, b)| (key(*a), key(*b)));
    for (a, b) in glues {
        out += &format!("GLUE {} {}\n", slot(a), slot(b));
    }
    let mut labels: Vec<(Slot, &String)> = s.labels().iter().map(|(k, v)| (*k, v)).collect();
    labels.sort_by_key(|(sl, _)| key(*sl));
    for (sl, l) in labels {
        out += &format!("LABEL {} {}\n", slot(sl), token(l));
    }
    for (m, f) in s.marks() {
        out += &format!("MARK {} IN {}\n", token(m), names[f]);
    }
    let end = |face: FaceId, e: End| match e {
        End::Mark => format!("MARK {}", token(s.mark_of_face(face).unwrap_or("?"))),
        End::Point { side, point } => format!("{side}.{}", d.drawing.local_index(Slot::new(face, side), point)),
    };
    let curve_line = |kw: &str, fam: &str, c: &Curve| {
        let chords: Vec<String> =
            c.chords.iter().map(|ch| format!("{}[{}->{}]", names[&ch.face], end(ch.face, ch.a), end(ch.face, ch.b))).collect();
        format!("{kw} {fam} {} : {}\n", token(&c.name), chords.join(","))
    };
    let mut placed = BTreeSet::new();
    for (kw, lists) in [("CURVE", &d.curves), ("ARC", &d.arcs)] {
        for f in Family::ALL {
            for n in &lists[f.index()] {
                if let Ok(c) = d.drawing.curve(n) {
                    out += &curve_line(kw, f.name(), c);
                    placed.insert(n.clone());
                }
            }
        }
    }
    let mut loose: Vec<&Curve> = d.drawing.curves().iter().filter(|c| !placed.contains(&c.name)).collect();
    loose.sort_by(|a, b| a.name.cmp(&b.name));
    for c in loose {
        out += &curve_line(if c.closed { "CURVE" } else { "ARC" }, "none", c);
    }
    let mut meta = doc.meta.clone();
    if let Some(e) = d.euler_number {
        meta.insert("euler_number".into(), e.to_string());
    }
    for (k, v) in &meta {
        out += &format!("META {} {}\n", token(k), v.replace('\n', " "));
    }
    out
}

struct Line<'a> {
    no: usize,
    text: &'a str,
}

impl<'a> Line<'a> {
    fn err(&self, at: &str, msg: impl Into<String>) -> Error {
        let off = (at.as_ptr() as usize).wrapping_sub(self.text.as_ptr() as usize);
        let col = if off <= self.text.len() { off + 1 } else { 1 };
        Error::SyntaxError { line: self.no, col, msg: msg.into() }
    }

    fn words(&self) -> Vec<&'a str> {
        self.text.split_whitespace().collect()
    }
}

struct RawEnd {
    side: usize,
    order: usize,
}

enum RawEndOrMark {
    Point(RawEnd),
    Mark,
}

struct RawChord {
    face: FaceId,
    a: RawEndOrMark,
    b: RawEndOrMark,
}

struct RawCurve {
    name: String,
    family: Option<Family>,
    arc: bool,
    chords: Vec<RawChord>,
    line: usize,
}

pub fn parse_tri(text: &str) -> Result<TriDocument> {
    let mut surface = CombSurface::new();
    let mut faces: BTreeMap<String, FaceId> = BTreeMap::new();
    let mut glued: BTreeSet<Slot> = BTreeSet::new();
    let mut labels = Vec::new();
    let mut marks = Vec::new();
    let mut raw: Vec<RawCurve> = Vec::new();
    let mut meta = BTreeMap::new();
    let mut header = false;

    for (i, text) in text.lines().enumerate() {
        let line = Line { no: i + 1, text };
        let w = line.words();
        if w.is_empty() || w[0].starts_with('%') {
            continue;
        }
        if !header {
            if w != ["TRI", "1"] {
                return Err(line.err(w[0], "expected `TRI 1` header"));
            }
            header = true;
            continue;
        }
        let face_of = |word: &str| faces.get(word).copied().ok_or_else(|| line.err(word, format!("unknown face `{word}`")));
        let slot_of = |word: &'_ str| -> Result<Slot> {
            let (f, k) = word.rsplit_once('.').ok_or_else(|| line.err(word, "expected <face>.<side>"))?;
            let side: usize = k.parse().map_err(|_| line.err(word, "bad side index"))?;
            let face = face_of(f)?;
            if side >= surface.sides(face) {
                return Err(line.err(word, format!("face {f} has no side {side}")));
            }
            Ok(Slot::new(face, side))
        };
        match w[0] {
            "FACE" => {
                let [_, name, n] = w[..] else { return Err(line.err(w[0], "expected FACE <name> <sides>")) };
                let n: usize = n.parse().ok().filter(|n| *n > 0).ok_or_else(|| line.err(n, "bad side count"))?;
                if faces.contains_key(name) {
                    return Err(line.err(name, "duplicate face"));
                }
                let id = surface.add_face(name, n);
                faces.insert(name.to_string(), id);
            }
            "GLUE" => {
                let [_, a, b] = w[..] else { return Err(line.err(w[0], "expected GLUE <slot> <slot>")) };
                let (sa, sb) = (slot_of(a)?, slot_of(b)?);
                for (s, word) in [(sa, a), (sb, b)] {
                    if !glued.insert(s) {
                        return Err(Error::DanglingPairing(format!("line {}: {word} is glued twice", line.no)));
                    }
                }
                if sa == sb {
                    return Err(Error::DanglingPairing(format!("line {}: {a} glued to itself", line.no)));
                }
                surface.glue(sa, sb)?;
            }
            "LABEL" => {
                let [_, s, l] = w[..] else { return Err(line.err(w[0], "expected LABEL <slot> <label>")) };
                labels.push((slot_of(s)?, l.to_string(), line.no));
            }
            "MARK" => {
                let [_, name, "IN", f] = w[..] else { return Err(line.err(w[0], "expected MARK <name> IN <face>")) };
                marks.push((name.to_string(), face_of(f)?));
            }
            "CURVE" | "ARC" => {
                let (head, body) = text.split_once(':').ok_or_else(|| line.err(w[0], "missing `:`"))?;
                let hw: Vec<&str> = head.split_whitespace().collect();
                let [_, fam, name] = hw[..] else { return Err(line.err(w[0], "expected <family> <name> before `:`")) };
                let family = match fam {
                    "none" => None,
                    _ => Some(
                        Family::ALL.into_iter().find(|f| f.name() == fam).ok_or_else(|| line.err(fam, "unknown family"))?,
                    ),
                };
                let mut chords = Vec::new();
                for part in body.split(',') {
                    chords.push(parse_chord(&line, part, &faces)?);
                }
                raw.push(RawCurve { name: name.to_string(), family, arc: w[0] == "ARC", chords, line: line.no });
            }
            "META" => {
                let key = w.get(1).ok_or_else(|| line.err(w[0], "expected META <key> <value>"))?;
                let rest = text.trim_start()[4..].trim_start()[key.len()..].trim();
                meta.insert(key.to_string(), rest.to_string());
            }
            other => return Err(Error::UnknownSection(format!("line {}: {other}", line.no))),
        }
    }
    if !header {
        return Err(Error::SyntaxError { line: 1, col: 1, msg: "empty document".into() });
    }
    for (s, l, no) in labels {
        if !surface.is_boundary(s) {
            return Err(Error::SyntaxError { line: no, col: 1, msg: "label on a glued side".into() });
        }
        surface.set_label(s, l);
    }
    for (m, f) in marks {
        surface.add_mark(m, f)?;
    }
    build(surface, raw, meta)
}

fn parse_chord(line: &Line, part: &str, faces: &BTreeMap<String, FaceId>) -> Result<RawChord> {
    let part = part.trim();
    let at = if part.is_empty() { line.text } else { part };
    let (f, rest) = part.split_once('[').ok_or_else(|| line.err(at, "expected <face>[<end>-><end>]"))?;
    let inner = rest.strip_suffix(']').ok_or_else(|| line.err(at, "missing `]`"))?;
    let (a, b) = inner.split_once("->").ok_or_else(|| line.err(at, "missing `->`"))?;
    let face = faces.get(f.trim()).copied().ok_or_else(|| line.err(at, format!("unknown face `{}`", f.trim())))?;
    let end = |e: &str| -> Result<RawEndOrMark> {
        let e = e.trim();
        if e.starts_with("MARK") {
            return Ok(RawEndOrMark::Mark);
        }
        let (s, o) = e.split_once('.').ok_or_else(|| line.err(at, format!("bad end `{e}`")))?;
        let side = s.parse().map_err(|_| line.err(at, format!("bad end `{e}`")))?;
        let order = o.parse().map_err(|_| line.err(at, format!("bad end `{e}`")))?;
        Ok(RawEndOrMark::Point(RawEnd { side, order }))
    };
    Ok(RawChord { face, a: end(a)?, b: end(b)? })
}

fn build(surface: CombSurface, raw: Vec<RawCurve>, mut meta: BTreeMap<String, String>) -> Result<TriDocument> {
    let mut refs: Vec<(Slot, usize)> = Vec::new();
    let bad = |rc: &RawCurve, msg: String| Error::SyntaxError { line: rc.line, col: 1, msg };
    for rc in &raw {
        for ch in &rc.chords {
            for e in [&ch.a, &ch.b] {
                if let RawEndOrMark::Point(p) = e {
                    if p.side >= surface.sides(ch.face) {
                        return Err(bad(rc, format!("side {} out of range", p.side)));
                    }
                    refs.push((Slot::new(ch.face, p.side), p.order));
                }
            }
        }
    }
    // orders on the far side of an edge run backwards, so first count points per edge
    let mut counts: BTreeMap<Slot, BTreeMap<Slot, BTreeSet<usize>>> = BTreeMap::new();
    for (s, o) in &refs {
        counts.entry(surface.canonical(*s)).or_default().entry(*s).or_default().insert(*o);
    }
    let mut size: BTreeMap<Slot, usize> = BTreeMap::new();
    for (c, sides) in &counts {
        let n = sides.values().map(|v| v.len()).max().unwrap_or(0);
        for v in sides.values() {
            if v.iter().any(|o| *o >= n) {
                return Err(Error::SyntaxError { line: 0, col: 0, msg: format!("orders on {} skip positions", surface.slot_name(*c)) });
            }
        }
        size.insert(*c, n);
    }
    let mut dr = Drawing::new(surface.clone());
    let mut ids: BTreeMap<(Slot, usize), usize> = BTreeMap::new();
    for (c, n) in &size {
        for k in 0..*n {
            ids.insert((*c, k), dr.insert_point(*c, k));
        }
    }
    let point = |s: Slot, o: usize| {
        let c = surface.canonical(s);
        let k = if c == s { o } else { size[&c] - 1 - o };
        ids[&(c, k)]
    };
    let mut d = Diagram::new(Drawing::new(CombSurface::new()));
    for rc in &raw {
        let conv = |face: FaceId, e: &RawEndOrMark| match e {
            RawEndOrMark::Mark => End::Mark,
            RawEndOrMark::Point(p) => End::Point { side: p.side, point: point(Slot::new(face, p.side), p.order) },
        };
        let chords: Vec<Chord> = rc.chords.iter().map(|c| Chord { face: c.face, a: conv(c.face, &c.a), b: conv(c.face, &c.b) }).collect();
        let closed = !rc.arc;
        dr.add_curve(Curve { name: rc.name.clone(), closed, chords })?;
        if let Some(f) = rc.family {
            let list = if rc.arc { &mut d.arcs } else { &mut d.curves };
            list[f.index()].push(rc.name.clone());
        }
    }
    d.drawing = dr;
    if let Some(e) = meta.remove("euler_number") {
        d.euler_number = Some(e.parse().map_err(|_| Error::SyntaxError { line: 0, col: 0, msg: format!("bad euler_number `{e}`") })?);
    }
    Ok(TriDocument { diagram: d, meta })
}

/// Checks the declared parameters, if any, against the derived ones.
pub fn check_declared(doc: &TriDocument) -> Result<()> {
    let Some(want) = doc.declared_params()? else { return Ok(()) };
    let d = &doc.diagram;
    let report = match want {
        Params::Closed { .. } => d.validate_trisection(),
        Params::Relative { .. } => d.validate_relative(),
        Params::Shadow { .. } => d.validate_shadow(),
    };
    let report = report.into_result()?;
    match report.params {
        Some(p) if p == want => Ok(()),
        got => Err(Error::ValidationFailed(format!("declared {want}, derived {}", got.map_or("nothing".into(), |p| p.to_string())))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::construct::{cp1_shadow, cp2, fig2_example, unknotted_rp2_shadow};
    use crate::complement::{build_complement, select_arcs, SelectionMode};

    fn round_trip(d: Diagram) {
        let mut doc = TriDocument::new(d);
        doc.meta.insert("note".into(), "test entry".into());
        let text = write_tri(&doc);
        let back = parse_tri(&text).unwrap();
        assert_eq!(write_tri(&back), text);
        let a = doc.diagram.validate_relative();
        let b = back.diagram.validate_relative();
        assert_eq!(a.params, b.params);
        assert_eq!(back.diagram.euler_number, doc.diagram.euler_number);
    }

    #[test]
    fn corpus_round_trips() {
        round_trip(cp2().unwrap().0);
        round_trip(cp1_shadow().unwrap());
        round_trip(fig2_example().unwrap());
        let (rp2, _) = unknotted_rp2_shadow().unwrap();
        round_trip(rp2.clone());
        round_trip(build_complement(&rp2, &select_arcs(&rp2, &SelectionMode::AutoP0B3).unwrap()).unwrap());
    }

    #[test]
    fn errors() {
        let doubled = "TRI 1\nFACE a 4\nFACE b 4\nGLUE a.0 b.0\nGLUE a.0 b.1\n";
        assert!(matches!(parse_tri(doubled), Err(Error::DanglingPairing(_))));
        assert!(matches!(parse_tri("TRI 1\nBOGUS x\n"), Err(Error::UnknownSection(_))));
        match parse_tri("TRI 1\nFACE a 4\nGLUE a.0 a.9\n") {
            Err(Error::SyntaxError { line, col, .. }) => assert_eq!((line, col), (3, 10)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_tri("TRY 1\n"), Err(Error::SyntaxError { line: 1, col: 1, .. })));
    }

    #[test]
    fn declared_params() {
        let (d, _) = cp2().unwrap();
        let mut doc = TriDocument::new(d);
        doc.meta.insert("params".into(), "(g,k)=(1,0)".into());
        check_declared(&parse_tri(&write_tri(&doc)).unwrap()).unwrap();
        doc.meta.insert("params".into(), "(g,k)=(1,1)".into());
        assert!(matches!(check_declared(&doc), Err(Error::ValidationFailed(_))));
    }
}
