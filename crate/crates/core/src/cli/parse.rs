//! Line-oriented presentation format.
//!
//! ```text
//! algebra A
//! vertices 1 2 3
//! arrow a : 1 -> 2
//! arrow b : 2 -> 3
//! relation 1*b*a
//! ```
//!
//! Paths are written left-factor-last, so `b*a` is "a, then b". Lines after
//! the header may come in any order; `#` starts a comment.

use crate::algebra::{AlgebraPresentation, Arrow, Quiver, Relation};
use crate::error::{Error, Result};
use crate::exactlin::Scalar;

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

struct Line<'a> {
    number: usize,
    text: &'a str,
}

impl Line<'_> {
    fn column_of(&self, needle: &str) -> usize {
        self.text.find(needle).map_or(1, |i| i + 1)
    }
}

pub fn parse_presentation(text: &str) -> Result<AlgebraPresentation> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        if !body.trim().is_empty() {
            lines.push(Line {
                number: i + 1,
                text: body,
            });
        }
    }
    let Some(first) = lines.first() else {
        return Err(err(1, 1, "empty presentation"));
    };
    let mut words = first.text.split_whitespace();
    if words.next() != Some("algebra") {
        return Err(err(
            first.number,
            first.column_of(first.text.trim()),
            "expected `algebra <name>` header",
        ));
    }
    let name = match (words.next(), words.next()) {
        (Some(n), None) => n.to_string(),
        _ => return Err(err(first.number, 1, "expected exactly one algebra name")),
    };

    let mut vertices: Option<(usize, Vec<String>)> = None;
    let mut arrow_lines = Vec::new();
    let mut relation_lines = Vec::new();
    for line in &lines[1..] {
        let trimmed = line.text.trim_start();
        let keyword = trimmed.split_whitespace().next().unwrap_or("");
        let rest = trimmed[keyword.len()..].trim();
        match keyword {
            "vertices" => {
                if vertices.is_some() {
                    return Err(err(
                        line.number,
                        line.column_of("vertices"),
                        "vertices declared twice",
                    ));
                }
                let vs: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if vs.is_empty() {
                    return Err(err(
                        line.number,
                        line.column_of("vertices"),
                        "empty vertex list",
                    ));
                }
                for (i, v) in vs.iter().enumerate() {
                    if vs[..i].contains(v) {
                        return Err(err(
                            line.number,
                            line.column_of(v),
                            format!("duplicate vertex `{v}`"),
                        ));
                    }
                }
                vertices = Some((line.number, vs));
            }
            "arrow" => arrow_lines.push((line, rest)),
            "relation" => relation_lines.push((line, rest)),
            "algebra" => return Err(err(line.number, 1, "second `algebra` header")),
            other => {
                return Err(err(
                    line.number,
                    line.column_of(other),
                    format!("unknown keyword `{other}`"),
                ))
            }
        }
    }
    let Some((_, vertices)) = vertices else {
        return Err(err(first.number, 1, "missing `vertices` line"));
    };

    let mut arrows: Vec<Arrow> = Vec::new();
    for (line, rest) in arrow_lines {
        let (name_part, ends) = rest.split_once(':').ok_or_else(|| {
            err(
                line.number,
                line.column_of("arrow"),
                "expected `arrow <name> : <src> -> <tgt>`",
            )
        })?;
        let arrow_name = name_part.trim();
        if arrow_name.is_empty()
            || arrow_name.contains(char::is_whitespace)
            || arrow_name.contains('*')
        {
            return Err(err(line.number, line.column_of(":"), "invalid arrow name"));
        }
        let (src, tgt) = ends.split_once("->").ok_or_else(|| {
            err(
                line.number,
                line.column_of(":"),
                "expected `<src> -> <tgt>`",
            )
        })?;
        let lookup = |v: &str| {
            vertices.iter().position(|x| x == v).ok_or_else(|| {
                err(
                    line.number,
                    line.column_of(v),
                    format!("unknown vertex `{v}`"),
                )
            })
        };
        let source = lookup(src.trim())?;
        let target = lookup(tgt.trim())?;
        if arrows.iter().any(|a| a.name == arrow_name) {
            return Err(err(
                line.number,
                line.column_of(arrow_name),
                format!("duplicate arrow `{arrow_name}`"),
            ));
        }
        arrows.push(Arrow {
            name: arrow_name.to_string(),
            source,
            target,
        });
    }

    let mut relations = Vec::new();
    for (line, rest) in relation_lines {
        relations.push(parse_relation(line, rest, &arrows)?);
    }
    Ok(AlgebraPresentation {
        name,
        quiver: Quiver { vertices, arrows },
        relations,
    })
}

fn split_terms(body: &str) -> Vec<(bool, String)> {
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    for ch in body.chars() {
        match ch {
            '+' | '-' if !current.trim().is_empty() && !current.trim_end().ends_with('*') => {
                terms.push((negative, current.trim().to_string()));
                current.clear();
                negative = ch == '-';
            }
            '-' if current.trim().is_empty() => negative = !negative,
            '+' if current.trim().is_empty() => {}
            c => current.push(c),
        }
    }
    terms.push((negative, current.trim().to_string()));
    terms
}

fn parse_relation(line: &Line<'_>, body: &str, arrows: &[Arrow]) -> Result<Relation> {
    if body.is_empty() {
        return Err(err(
            line.number,
            line.column_of("relation"),
            "empty relation",
        ));
    }
    let mut terms = Vec::new();
    for (negative, term) in split_terms(body) {
        if term.is_empty() {
            return Err(err(
                line.number,
                line.column_of("relation"),
                "dangling sign in relation",
            ));
        }
        let factors: Vec<&str> = term.split('*').map(str::trim).collect();
        let (mut coeff, names) = match factors[0].parse::<Scalar>() {
            Ok(c) => (c, &factors[1..]),
            Err(_) => (Scalar::one(), &factors[..]),
        };
        if negative {
            coeff = -coeff;
        }
        let mut path = Vec::new();
        for name in names.iter().rev() {
            let idx = arrows.iter().position(|a| a.name == *name).ok_or_else(|| {
                err(
                    line.number,
                    line.column_of(name),
                    format!("unknown arrow `{name}`"),
                )
            })?;
            path.push(idx);
        }
        if path.len() < 2 {
            return Err(err(
                line.number,
                line.column_of(&term),
                "relation terms need at least two arrows",
            ));
        }
        for w in path.windows(2) {
            if arrows[w[0]].target != arrows[w[1]].source {
                return Err(err(
                    line.number,
                    line.column_of(&term),
                    format!(
                        "`{}` does not compose after `{}`",
                        arrows[w[1]].name, arrows[w[0]].name
                    ),
                ));
            }
        }
        terms.push((coeff, path));
    }
    let ends = |p: &Vec<usize>| (arrows[p[0]].source, arrows[*p.last().unwrap()].target);
    let first = ends(&terms[0].1);
    if terms.iter().any(|(_, p)| ends(p) != first) {
        return Err(err(
            line.number,
            line.column_of("relation"),
            "relation mixes paths with different ends",
        ));
    }
    Ok(Relation { terms })
}

/// Canonical text of a presentation, used for cache keys.
pub fn normalise(p: &AlgebraPresentation) -> String {
    let mut out = format!(
        "algebra {}\nvertices {}\n",
        p.name,
        p.quiver.vertices.join(" ")
    );
    for a in &p.quiver.arrows {
        out.push_str(&format!(
            "arrow {} : {} -> {}\n",
            a.name, p.quiver.vertices[a.source], p.quiver.vertices[a.target]
        ));
    }
    for r in &p.relations {
        let terms: Vec<String> = r
            .terms
            .iter()
            .map(|(c, path)| {
                let names: Vec<&str> = path
                    .iter()
                    .rev()
                    .map(|&i| p.quiver.arrows[i].name.as_str())
                    .collect();
                format!("{c}*{}", names.join("*"))
            })
            .collect();
        out.push_str(&format!("relation {}\n", terms.join(" + ")));
    }
    out
}
