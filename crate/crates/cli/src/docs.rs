//! The structured text document format.
//!
//! Six document kinds — `category`, `groupoid`, `group`, `bundle`, `action`,
//! `group-action` — share a line-oriented layout of `key: value` fields and
//! multi-line table sections. Undefined composition entries are written `-`.
//! Parsing checks syntax, index ranges, duplicate sections, and (for action
//! documents) coverage of the action domain; algebraic laws are left to the
//! commands so that a law-breaking document can still be loaded and reported.
//! `parse_document(emit(d)) == Ok(d)` for every document value.

use smallcat::action::{action_domain, ActionTables};
use smallcat::category::{validate_category, RawCategory, UNDEFINED};
use std::collections::HashSet;
use std::fmt;
use std::fmt::Write as _;

/// The payload of one document; the variant is the document kind.
#[derive(Debug, Clone, PartialEq)]
pub enum Payload {
    Category(RawCategory),
    Groupoid(RawCategory),
    /// A group multiplication table, one row per element.
    Group(Vec<Vec<usize>>),
    /// A partition of `points` with one group table per class, in the order
    /// the classes are written.
    Bundle { points: usize, classes: Vec<Vec<usize>>, fibers: Vec<Vec<Vec<usize>>> },
    /// Action tables; the embedded categories are validated at parse time and
    /// the alpha entries cover the action domain exactly, but the action
    /// axioms themselves are not checked here.
    Action(ActionTables),
    /// A group table acting on `points`, one row per group element.
    GroupAction { table: Vec<Vec<usize>>, points: usize, rows: Vec<Vec<usize>> },
}

impl Payload {
    pub fn kind(&self) -> &'static str {
        match self {
            Payload::Category(_) => "category",
            Payload::Groupoid(_) => "groupoid",
            Payload::Group(_) => "group",
            Payload::Bundle { .. } => "bundle",
            Payload::Action(_) => "action",
            Payload::GroupAction { .. } => "group-action",
        }
    }
}

/// A named document of one of the six kinds.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub name: String,
    pub payload: Payload,
}

/// A parse failure, located by 1-based line and byte column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

type PResult<T> = Result<T, ParseError>;

fn fail<T>(line: usize, column: usize, message: impl Into<String>) -> PResult<T> {
    Err(ParseError { line, column, message: message.into() })
}

/// Whitespace-separated tokens of `line[from..]` with 1-based byte columns.
fn tokens(line: &str, from: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line[from..].char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((from + s + 1, &line[from + s..from + i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((from + s + 1, &line[from + s..]));
    }
    out
}

fn parse_int(line: usize, column: usize, token: &str, what: &str) -> PResult<usize> {
    match token.parse::<usize>() {
        Ok(v) => Ok(v),
        Err(_) => fail(line, column, format!("expected an integer for {what}, found '{token}'")),
    }
}

/// Line cursor over the non-blank lines of a document.
struct Cursor<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
    last_line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Cursor<'a> {
        let mut last_line = 0;
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .inspect(|(i, _)| last_line = i + 1)
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| (i + 1, l))
            .collect();
        Cursor { lines, pos: 0, last_line }
    }

    fn eof_line(&self) -> usize {
        self.last_line + 1
    }

    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        let item = self.lines.get(self.pos).copied();
        if item.is_some() {
            self.pos += 1;
        }
        item
    }

    /// The next line must be `key: value`; returns the line number, the byte
    /// offset where the value starts, and the raw value. Consumed keys are
    /// tracked in `seen` so a repeated section is reported as a duplicate.
    fn field(
        &mut self,
        key: &'static str,
        seen: &mut Vec<&'static str>,
    ) -> PResult<(usize, usize, &'a str)> {
        let Some((line, text)) = self.next_line() else {
            return fail(self.eof_line(), 1, format!("unexpected end of document, expected '{key}:'"));
        };
        let Some(colon) = text.find(':') else {
            return fail(line, 1, format!("expected '{key}:', found '{}'", text.trim()));
        };
        let found = text[..colon].trim();
        if found != key {
            if seen.iter().any(|&s| s == found) {
                return fail(line, 1, format!("duplicate section name '{found}'"));
            }
            return fail(line, 1, format!("expected '{key}:', found '{found}:'"));
        }
        seen.push(key);
        Ok((line, colon + 1, &text[colon + 1..]))
    }

    /// A `key: value` field whose value is free text (trimmed, nonempty);
    /// the returned column points at the first value character.
    fn field_text(&mut self, key: &'static str, seen: &mut Vec<&'static str>) -> PResult<(usize, usize, String)> {
        let (line, offset, value) = self.field(key, seen)?;
        let trimmed = value.trim();
        if trimmed.is_empty() {
            return fail(line, offset + 1, format!("'{key}' must not be empty"));
        }
        let leading = value.len() - value.trim_start().len();
        Ok((line, offset + leading + 1, trimmed.to_string()))
    }

    /// A `key: N` field holding exactly one count.
    fn field_count(&mut self, key: &'static str, seen: &mut Vec<&'static str>) -> PResult<usize> {
        let (line, offset, value) = self.field(key, seen)?;
        let toks = tokens(value, 0);
        match toks.as_slice() {
            [(col, tok)] => parse_int(line, offset + col, tok, key),
            [] => fail(line, offset + 1, format!("'{key}' expects one integer")),
            [_, (col, tok), ..] => {
                fail(line, offset + col, format!("unexpected extra token '{tok}' after '{key}'"))
            }
        }
    }

    /// A `key: a b c` field of indices, each `< bound`; `expected` fixes the
    /// list length when known.
    fn field_indices(
        &mut self,
        key: &'static str,
        seen: &mut Vec<&'static str>,
        expected: Option<usize>,
        bound: usize,
        bound_what: &str,
    ) -> PResult<(usize, Vec<usize>)> {
        let (line, offset, value) = self.field(key, seen)?;
        let toks = tokens(value, 0);
        if let Some(want) = expected {
            if toks.len() != want {
                return fail(
                    line,
                    offset + 1,
                    format!("'{key}' expects {want} entries, found {}", toks.len()),
                );
            }
        }
        let mut out = Vec::with_capacity(toks.len());
        for (col, tok) in toks {
            let v = parse_int(line, offset + col, tok, key)?;
            if v >= bound {
                return fail(
                    line,
                    offset + col,
                    format!("index {v} out of range: there are {bound} {bound_what}"),
                );
            }
            out.push(v);
        }
        Ok((line, out))
    }

    /// A `key:` section header with no inline value.
    fn field_header(&mut self, key: &'static str, seen: &mut Vec<&'static str>) -> PResult<usize> {
        let (line, offset, value) = self.field(key, seen)?;
        if !value.trim().is_empty() {
            return fail(line, offset + 1, format!("'{key}' is a section header and takes no value"));
        }
        Ok(line)
    }

    /// The next line as a bare table row of exactly `expected` index tokens,
    /// each `< bound`; `-` is accepted as `UNDEFINED` when `dashes` is set.
    fn row(
        &mut self,
        what: &str,
        expected: usize,
        bound: usize,
        bound_what: &str,
        dashes: bool,
    ) -> PResult<(usize, Vec<usize>)> {
        let Some((line, text)) = self.next_line() else {
            return fail(self.eof_line(), 1, format!("unexpected end of document, expected {what}"));
        };
        let toks = tokens(text, 0);
        if toks.len() != expected {
            return fail(line, 1, format!("{what} expects {expected} entries, found {}", toks.len()));
        }
        let mut out = Vec::with_capacity(expected);
        for (col, tok) in toks {
            if dashes && tok == "-" {
                out.push(UNDEFINED);
                continue;
            }
            let v = parse_int(line, col, tok, what)?;
            if v >= bound {
                return fail(line, col, format!("index {v} out of range: there are {bound} {bound_what}"));
            }
            out.push(v);
        }
        Ok((line, out))
    }
}

/// Parses the `objects/morphisms/source/target/identity/compose` block shared
/// by category and groupoid documents (and embedded in action documents).
fn parse_category_block(cur: &mut Cursor) -> PResult<RawCategory> {
    let mut seen = Vec::new();
    let n = cur.field_count("objects", &mut seen)?;
    let m = cur.field_count("morphisms", &mut seen)?;
    let (_, source) = cur.field_indices("source", &mut seen, Some(m), n, "objects")?;
    let (_, target) = cur.field_indices("target", &mut seen, Some(m), n, "objects")?;
    let (_, identity) = cur.field_indices("identity", &mut seen, Some(n), m, "morphisms")?;
    cur.field_header("compose", &mut seen)?;
    let mut compose = Vec::with_capacity(m * m);
    for h in 0..m {
        let (_, row) = cur.row(&format!("compose row {h}"), m, m, "morphisms", true)?;
        compose.extend(row);
    }
    Ok(RawCategory { n_objects: n, source, target, identity, compose })
}

/// Parses the `order/table` block of a group document (and the embedded group
/// of a group-action document).
fn parse_group_block(cur: &mut Cursor) -> PResult<Vec<Vec<usize>>> {
    let mut seen = Vec::new();
    let order = cur.field_count("order", &mut seen)?;
    cur.field_header("table", &mut seen)?;
    let mut rows = Vec::with_capacity(order);
    for a in 0..order {
        let (_, row) = cur.row(&format!("table row {a}"), order, order, "elements", false)?;
        rows.push(row);
    }
    Ok(rows)
}

fn parse_bundle(cur: &mut Cursor) -> PResult<Payload> {
    let mut seen = Vec::new();
    let points = cur.field_count("points", &mut seen)?;
    let n_classes = cur.field_count("classes", &mut seen)?;
    let classes_line = cur.lines.get(cur.pos.saturating_sub(1)).map_or(1, |&(l, _)| l);
    let mut classes = Vec::with_capacity(n_classes);
    let mut owner = vec![usize::MAX; points];
    for k in 0..n_classes {
        let mut repeat = Vec::new();
        let (line, class) = cur.field_indices("class", &mut repeat, None, points, "points")?;
        if class.is_empty() {
            return fail(line, 1, format!("class {k} is empty"));
        }
        for &p in &class {
            if owner[p] != usize::MAX {
                return fail(line, 1, format!("point {p} appears in more than one class"));
            }
            owner[p] = k;
        }
        classes.push(class);
    }
    if let Some(p) = owner.iter().position(|&o| o == usize::MAX) {
        return fail(classes_line, 1, format!("point {p} belongs to no class"));
    }
    let mut fibers = Vec::with_capacity(n_classes);
    for _ in 0..n_classes {
        let mut repeat = Vec::new();
        let order = cur.field_count("fiber", &mut repeat)?;
        let mut rows = Vec::with_capacity(order);
        for a in 0..order {
            let (_, row) = cur.row(&format!("fiber table row {a}"), order, order, "elements", false)?;
            rows.push(row);
        }
        fibers.push(rows);
    }
    Ok(Payload::Bundle { points, classes, fibers })
}

fn parse_action(cur: &mut Cursor) -> PResult<Payload> {
    let mut seen = Vec::new();
    let acting_line = cur.field_header("acting", &mut seen)?;
    let acting_raw = parse_category_block(cur)?;
    let acted_line = cur.field_header("acted", &mut seen)?;
    let acted_raw = parse_category_block(cur)?;
    let acting = validate_category(acting_raw)
        .map_err(|e| ParseError { line: acting_line, column: 1, message: format!("the acting category is invalid: {e}") })?;
    let acted = validate_category(acted_raw)
        .map_err(|e| ParseError { line: acted_line, column: 1, message: format!("the acted category is invalid: {e}") })?;
    let (_, phi) =
        cur.field_indices("phi", &mut seen, Some(acted.n_objects()), acting.n_objects(), "acting objects")?;
    let alpha_line = cur.field_header("alpha", &mut seen)?;

    let domain: HashSet<(usize, usize)> =
        action_domain(&acting, &acted, &phi).into_iter().map(|(g, h)| (g.0, h.0)).collect();
    let mg = acting.n_morphisms();
    let mh = acted.n_morphisms();
    let mut entries = Vec::new();
    let mut covered: HashSet<(usize, usize)> = HashSet::new();
    while let Some((line, text)) = cur.next_line() {
        let toks = tokens(text, 0);
        let [(cg, tg), (ch, th), (cr, tr)] = toks.as_slice() else {
            return fail(line, 1, format!("an alpha entry expects 3 tokens 'g h result', found {}", toks.len()));
        };
        let g = parse_int(line, *cg, tg, "an acting morphism")?;
        if g >= mg {
            return fail(line, *cg, format!("index {g} out of range: there are {mg} acting morphisms"));
        }
        let h = parse_int(line, *ch, th, "an acted morphism")?;
        if h >= mh {
            return fail(line, *ch, format!("index {h} out of range: there are {mh} acted morphisms"));
        }
        let r = parse_int(line, *cr, tr, "an acted morphism")?;
        if r >= mh {
            return fail(line, *cr, format!("index {r} out of range: there are {mh} acted morphisms"));
        }
        if !domain.contains(&(g, h)) {
            return fail(line, *cg, format!("pair (g={g}, h={h}) is outside the action domain"));
        }
        if !covered.insert((g, h)) {
            return fail(line, *cg, format!("pair (g={g}, h={h}) already has an entry"));
        }
        entries.push((g, h, r));
    }
    let mut missing: Vec<(usize, usize)> =
        domain.difference(&covered).copied().collect();
    missing.sort_unstable();
    if let Some((g, h)) = missing.first() {
        return fail(alpha_line, 1, format!("the action domain pair (g={g}, h={h}) has no alpha entry"));
    }
    let tables = ActionTables::from_entries(acting, acted, phi, &entries)
        .map_err(|e| ParseError { line: alpha_line, column: 1, message: format!("{e}") })?;
    Ok(Payload::Action(tables))
}

fn parse_group_action(cur: &mut Cursor) -> PResult<Payload> {
    let mut seen = Vec::new();
    cur.field_header("group", &mut seen)?;
    let table = parse_group_block(cur)?;
    let points = cur.field_count("points", &mut seen)?;
    cur.field_header("action", &mut seen)?;
    let mut rows = Vec::with_capacity(table.len());
    for g in 0..table.len() {
        let (_, row) = cur.row(&format!("action row {g}"), points, points, "points", false)?;
        rows.push(row);
    }
    Ok(Payload::GroupAction { table, points, rows })
}

/// Parses one document from `text`.
pub fn parse_document(text: &str) -> PResult<Document> {
    let mut cur = Cursor::new(text);
    let mut seen = Vec::new();
    let (kind_line, kind_column, kind) = cur.field_text("kind", &mut seen)?;
    let (_, _, name) = cur.field_text("name", &mut seen)?;
    let payload = match kind.as_str() {
        "category" => Payload::Category(parse_category_block(&mut cur)?),
        "groupoid" => Payload::Groupoid(parse_category_block(&mut cur)?),
        "group" => Payload::Group(parse_group_block(&mut cur)?),
        "bundle" => parse_bundle(&mut cur)?,
        "action" => parse_action(&mut cur)?,
        "group-action" => parse_group_action(&mut cur)?,
        other => {
            return fail(
                kind_line,
                kind_column,
                format!("unknown kind '{other}': expected category, groupoid, group, bundle, action, or group-action"),
            )
        }
    };
    if let Some((line, text)) = cur.next_line() {
        return fail(line, 1, format!("unexpected content after the document: '{}'", text.trim()));
    }
    Ok(Document { name, payload })
}

fn write_list(out: &mut String, key: &str, items: &[usize]) {
    out.push_str(key);
    out.push(':');
    for v in items {
        let _ = write!(out, " {v}");
    }
    out.push('\n');
}

fn emit_category_block(out: &mut String, raw: &RawCategory) {
    let m = raw.n_morphisms();
    let _ = writeln!(out, "objects: {}", raw.n_objects);
    let _ = writeln!(out, "morphisms: {m}");
    write_list(out, "source", &raw.source);
    write_list(out, "target", &raw.target);
    write_list(out, "identity", &raw.identity);
    out.push_str("compose:\n");
    for h in 0..m {
        for k in 0..m {
            if k > 0 {
                out.push(' ');
            }
            match raw.compose[h * m + k] {
                UNDEFINED => out.push('-'),
                c => {
                    let _ = write!(out, "{c}");
                }
            }
        }
        out.push('\n');
    }
}

fn emit_group_block(out: &mut String, rows: &[Vec<usize>]) {
    let _ = writeln!(out, "order: {}", rows.len());
    out.push_str("table:\n");
    for row in rows {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&line.join(" "));
        out.push('\n');
    }
}

/// Emits a document in the format `parse_document` reads.
pub fn emit(doc: &Document) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "kind: {}", doc.payload.kind());
    let _ = writeln!(out, "name: {}", doc.name);
    match &doc.payload {
        Payload::Category(raw) | Payload::Groupoid(raw) => emit_category_block(&mut out, raw),
        Payload::Group(rows) => emit_group_block(&mut out, rows),
        Payload::Bundle { points, classes, fibers } => {
            let _ = writeln!(out, "points: {points}");
            let _ = writeln!(out, "classes: {}", classes.len());
            for class in classes {
                write_list(&mut out, "class", class);
            }
            for rows in fibers {
                let _ = writeln!(out, "fiber: {}", rows.len());
                for row in rows {
                    let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                    out.push_str(&line.join(" "));
                    out.push('\n');
                }
            }
        }
        Payload::Action(tables) => {
            out.push_str("acting:\n");
            emit_category_block(&mut out, &tables.g.to_raw());
            out.push_str("acted:\n");
            emit_category_block(&mut out, &tables.h.to_raw());
            write_list(&mut out, "phi", &tables.phi);
            out.push_str("alpha:\n");
            for (g, h, r) in tables.entries() {
                let _ = writeln!(out, "{g} {h} {r}");
            }
        }
        Payload::GroupAction { table, points, rows } => {
            out.push_str("group:\n");
            emit_group_block(&mut out, table);
            let _ = writeln!(out, "points: {points}");
            out.push_str("action:\n");
            for row in rows {
                let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                out.push_str(&line.join(" "));
                out.push('\n');
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use smallcat::action::validate_action;
    use smallcat::bundle::one_object_groupoid;
    use smallcat::category::FiniteCategory;
    use smallcat::group::FiniteGroup;

    fn z2_rows() -> Vec<Vec<usize>> {
        vec![vec![0, 1], vec![1, 0]]
    }

    fn round_trip(doc: &Document) {
        let text = emit(doc);
        let back = parse_document(&text).expect("emitted documents parse");
        assert_eq!(&back, doc);
        assert_eq!(emit(&back), text);
    }

    #[test]
    fn the_six_kinds_round_trip() {
        let z2 = FiniteGroup::cyclic(2);
        let gpd = one_object_groupoid(&z2);
        round_trip(&Document {
            name: "walk".into(),
            payload: Payload::Category(FiniteCategory::discrete(2).to_raw()),
        });
        round_trip(&Document {
            name: "z2".into(),
            payload: Payload::Groupoid(gpd.category().to_raw()),
        });
        round_trip(&Document { name: "z2".into(), payload: Payload::Group(z2_rows()) });
        round_trip(&Document {
            name: "b".into(),
            payload: Payload::Bundle {
                points: 3,
                classes: vec![vec![0, 2], vec![1]],
                fibers: vec![z2_rows(), vec![vec![0]]],
            },
        });
        let tables = ActionTables::from_fn(
            gpd.category().clone(),
            FiniteCategory::discrete(2),
            vec![0, 0],
            |g, h| if g.0 == 0 { h } else { smallcat::category::MorphismId(1 - h.0) },
        );
        validate_action(tables.clone()).expect("the swap action is lawful");
        round_trip(&Document { name: "swap".into(), payload: Payload::Action(tables) });
        round_trip(&Document {
            name: "swap-set".into(),
            payload: Payload::GroupAction {
                table: z2_rows(),
                points: 2,
                rows: vec![vec![0, 1], vec![1, 0]],
            },
        });
    }

    #[test]
    fn an_empty_category_round_trips() {
        round_trip(&Document {
            name: "empty".into(),
            payload: Payload::Category(FiniteCategory::discrete(0).to_raw()),
        });
    }

    #[test]
    fn blank_lines_are_ignored() {
        let doc = Document { name: "z1".into(), payload: Payload::Group(vec![vec![0]]) };
        let spaced = emit(&doc).replace('\n', "\n\n");
        assert_eq!(parse_document(&spaced).unwrap(), doc);
    }

    #[test]
    fn unknown_kinds_are_rejected_with_a_position() {
        let e = parse_document("kind: monoid\nname: m\norder: 1\ntable:\n0\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 7));
        assert!(e.message.contains("unknown kind 'monoid'"), "{e}");
    }

    #[test]
    fn out_of_range_indices_are_rejected_with_a_column() {
        let text = "kind: category\nname: c\nobjects: 1\nmorphisms: 1\nsource: 3\ntarget: 0\nidentity: 0\ncompose:\n0\n";
        let e = parse_document(text).unwrap_err();
        assert_eq!((e.line, e.column), (5, 9));
        assert!(e.message.contains("index 3 out of range"), "{e}");
    }

    #[test]
    fn duplicate_sections_are_named() {
        let text = "kind: group\nname: g\norder: 1\norder: 1\ntable:\n0\n";
        let e = parse_document(text).unwrap_err();
        assert!(e.message.contains("duplicate section name 'order'"), "{e}");
    }

    #[test]
    fn a_class_with_an_unknown_point_is_rejected() {
        let text = "kind: bundle\nname: b\npoints: 2\nclasses: 1\nclass: 0 5\nfiber: 1\n0\n";
        let e = parse_document(text).unwrap_err();
        assert_eq!(e.line, 5);
        assert!(e.message.contains("index 5 out of range"), "{e}");
    }

    #[test]
    fn overlapping_and_uncovered_points_are_rejected() {
        let overlap = "kind: bundle\nname: b\npoints: 2\nclasses: 2\nclass: 0 1\nclass: 1\nfiber: 1\n0\nfiber: 1\n0\n";
        let e = parse_document(overlap).unwrap_err();
        assert!(e.message.contains("point 1 appears in more than one class"), "{e}");
        let uncovered = "kind: bundle\nname: b\npoints: 2\nclasses: 1\nclass: 0\nfiber: 1\n0\n";
        let e = parse_document(uncovered).unwrap_err();
        assert!(e.message.contains("point 1 belongs to no class"), "{e}");
    }

    #[test]
    fn a_missing_domain_pair_is_listed() {
        let doc = Document {
            name: "swap".into(),
            payload: Payload::Action(ActionTables::from_fn(
                one_object_groupoid(&FiniteGroup::cyclic(2)).category().clone(),
                FiniteCategory::discrete(2),
                vec![0, 0],
                |g, h| if g.0 == 0 { h } else { smallcat::category::MorphismId(1 - h.0) },
            )),
        };
        let text = emit(&doc);
        let truncated: Vec<&str> = text.lines().filter(|l| *l != "1 0 1").collect();
        let e = parse_document(&truncated.join("\n")).unwrap_err();
        assert!(e.message.contains("(g=1, h=0) has no alpha entry"), "{e}");
    }

    #[test]
    fn off_domain_and_duplicate_alpha_entries_are_rejected() {
        let base = "kind: action\nname: a\nacting:\nobjects: 1\nmorphisms: 1\nsource: 0\ntarget: 0\nidentity: 0\ncompose:\n0\nacted:\nobjects: 2\nmorphisms: 2\nsource: 0 1\ntarget: 0 1\nidentity: 0 1\ncompose:\n0 -\n- 1\nphi: 0 0\nalpha:\n0 0 0\n0 1 1\n";
        assert!(parse_document(base).is_ok());
        let dup = format!("{base}0 1 1\n");
        let e = parse_document(&dup).unwrap_err();
        assert!(e.message.contains("already has an entry"), "{e}");
    }

    #[test]
    fn compose_rows_must_match_the_morphism_count() {
        let text = "kind: category\nname: c\nobjects: 1\nmorphisms: 1\nsource: 0\ntarget: 0\nidentity: 0\ncompose:\n0 0\n";
        let e = parse_document(text).unwrap_err();
        assert!(e.message.contains("expects 1 entries, found 2"), "{e}");
    }

    #[test]
    fn trailing_content_is_rejected() {
        let text = format!(
            "{}extra: 1\n",
            emit(&Document { name: "z1".into(), payload: Payload::Group(vec![vec![0]]) })
        );
        let e = parse_document(&text).unwrap_err();
        assert!(e.message.contains("unexpected content"), "{e}");
    }

    #[test]
    fn a_lawless_embedded_category_is_a_parse_error() {
        // the acting "category" below breaks associativity of nothing but has
        // a non-endomorphism identity: identity of object 0 runs 0 -> 1
        let text = "kind: action\nname: bad\nacting:\nobjects: 2\nmorphisms: 2\nsource: 0 1\ntarget: 1 0\nidentity: 0 1\ncompose:\n- 0\n1 -\nacted:\nobjects: 1\nmorphisms: 1\nsource: 0\ntarget: 0\nidentity: 0\ncompose:\n0\nphi: 0\nalpha:\n";
        let e = parse_document(text).unwrap_err();
        assert!(e.message.contains("the acting category is invalid"), "{e}");
    }
}
