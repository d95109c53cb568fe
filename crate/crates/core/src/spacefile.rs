//! Line-oriented text format for spaces.
//!
//! ```text
//! # comments run to end of line
//! space Example1
//! points a b c
//! open {}
//! open {a}
//! open {b}
//! open {a b}
//! open {a b c}
//! gamma rule intclosure
//! end
//! ```
//!
//! Instead of `gamma rule ...` a file may list one `gamma {a b} = {a b c}`
//! line per open set. Rules are `identity`, `closure`, `intclosure`,
//! `clintcl`, or `if-contains <point> then <rule> else <rule>`.

use thiserror::Error;

use crate::operation::{OperationError, RuleExpr};
use crate::space::{Space, SpaceError};
use crate::subset::{SetFamily, SubSet, MAX_POINTS};
use crate::topology::{validate_topology, TopologyError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}, column {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}, column {col}: unknown point `{name}`")]
    UnknownPoint { name: String, line: usize, col: usize },
    #[error("invalid topology: {0}")]
    TopologyInvalid(TopologyError),
    #[error("invalid operation: {0}")]
    OperationInvalid(OperationError),
}

impl From<SpaceError> for ParseError {
    fn from(e: SpaceError) -> Self {
        match e {
            SpaceError::Topology(t) => ParseError::TopologyInvalid(t),
            SpaceError::Operation(o) => ParseError::OperationInvalid(o),
            SpaceError::ForeignTable => {
                ParseError::OperationInvalid(OperationError::ExtraEntry(SubSet::empty(0)))
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Token<'a> {
    text: &'a str,
    col: usize,
}

fn tokenize(line: &str) -> Vec<Token<'_>> {
    let line = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in line.char_indices() {
        let single = matches!(ch, '{' | '}' | '=');
        if ch.is_whitespace() || single {
            if let Some(s) = start.take() {
                out.push(Token { text: &line[s..i], col: s + 1 });
            }
            if single {
                out.push(Token {
                    text: &line[i..i + 1],
                    col: i + 1,
                });
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push(Token { text: &line[s..], col: s + 1 });
    }
    out
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

struct Cursor<'a, 'b> {
    tokens: &'b [Token<'a>],
    pos: usize,
    line: usize,
    eol_col: usize,
}

impl<'a, 'b> Cursor<'a, 'b> {
    fn new(tokens: &'b [Token<'a>], line: usize, raw: &str) -> Self {
        Cursor {
            tokens,
            pos: 0,
            line,
            eol_col: raw.len() + 1,
        }
    }

    fn col(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.eol_col, |t| t.col)
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::Syntax {
            line: self.line,
            col: self.col(),
            msg: msg.into(),
        }
    }

    fn next(&mut self) -> Option<Token<'a>> {
        let t = self.tokens.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, text: &str) -> Result<(), ParseError> {
        match self.tokens.get(self.pos) {
            Some(t) if t.text == text => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => Err(self.err(format!("expected `{text}`, found `{}`", t.text))),
            None => Err(self.err(format!("expected `{text}`"))),
        }
    }

    fn finish(&self) -> Result<(), ParseError> {
        match self.tokens.get(self.pos) {
            None => Ok(()),
            Some(t) => Err(self.err(format!("unexpected `{}`", t.text))),
        }
    }

    fn point(&mut self, names: &[String]) -> Result<usize, ParseError> {
        let col = self.col();
        let t = self.next().ok_or_else(|| self.err("expected a point name"))?;
        names.iter().position(|n| n == t.text).ok_or(ParseError::UnknownPoint {
            name: t.text.to_string(),
            line: self.line,
            col,
        })
    }

    fn set(&mut self, names: &[String]) -> Result<SubSet, ParseError> {
        self.expect("{")?;
        let mut out = SubSet::empty(names.len());
        loop {
            match self.tokens.get(self.pos) {
                Some(t) if t.text == "}" => {
                    self.pos += 1;
                    return Ok(out);
                }
                Some(_) => out = out.with(self.point(names)?),
                None => return Err(self.err("unterminated set literal")),
            }
        }
    }

    fn rule(&mut self, names: &[String], depth: usize) -> Result<RuleExpr, ParseError> {
        let t = self.next().ok_or_else(|| self.err("expected a rule"))?;
        match t.text {
            "identity" => Ok(RuleExpr::Identity),
            "closure" => Ok(RuleExpr::Closure),
            "intclosure" => Ok(RuleExpr::IntClosure),
            "clintcl" => Ok(RuleExpr::ClIntCl),
            "if-contains" => {
                if depth >= crate::operation::MAX_RULE_DEPTH {
                    return Err(ParseError::OperationInvalid(OperationError::TooDeep));
                }
                let point = self.point(names)?;
                self.expect("then")?;
                let then = self.rule(names, depth + 1)?;
                self.expect("else")?;
                let otherwise = self.rule(names, depth + 1)?;
                Ok(RuleExpr::if_contains(point, then, otherwise))
            }
            other => Err(ParseError::Syntax {
                line: self.line,
                col: t.col,
                msg: format!("unknown rule `{other}`"),
            }),
        }
    }
}

enum Gamma {
    Rule(RuleExpr),
    Table(Vec<(SubSet, SubSet)>),
}

/// Parses and fully validates a space description.
pub fn parse_space_file(text: &str) -> Result<Space, ParseError> {
    let mut name: Option<String> = None;
    let mut names: Option<Vec<String>> = None;
    let mut opens: Vec<SubSet> = Vec::new();
    let mut gamma: Option<Gamma> = None;
    let mut ended = false;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let tokens = tokenize(raw);
        if tokens.is_empty() {
            continue;
        }
        let mut cur = Cursor::new(&tokens, line, raw);
        if ended {
            return Err(cur.err("content after `end`"));
        }
        let keyword = cur.next().unwrap();
        match keyword.text {
            "space" => {
                if name.is_some() {
                    return Err(ParseError::Syntax {
                        line,
                        col: keyword.col,
                        msg: "duplicate `space` line".into(),
                    });
                }
                let t = cur.next().ok_or_else(|| cur.err("expected a space name"))?;
                name = Some(t.text.to_string());
                cur.finish()?;
            }
            "points" => {
                if name.is_none() {
                    return Err(ParseError::Syntax {
                        line,
                        col: keyword.col,
                        msg: "`points` before `space`".into(),
                    });
                }
                if names.is_some() {
                    return Err(ParseError::Syntax {
                        line,
                        col: keyword.col,
                        msg: "duplicate `points` line".into(),
                    });
                }
                let mut list: Vec<String> = Vec::new();
                while let Some(t) = cur.next() {
                    if !is_identifier(t.text) {
                        return Err(ParseError::Syntax {
                            line,
                            col: t.col,
                            msg: format!("`{}` is not a valid point name", t.text),
                        });
                    }
                    if list.iter().any(|n| n == t.text) {
                        return Err(ParseError::Syntax {
                            line,
                            col: t.col,
                            msg: format!("point `{}` declared twice", t.text),
                        });
                    }
                    list.push(t.text.to_string());
                }
                if list.len() > MAX_POINTS {
                    return Err(ParseError::TopologyInvalid(TopologyError::CarrierOutOfRange(list.len())));
                }
                names = Some(list);
            }
            "open" => {
                let pts = names.as_deref().ok_or_else(|| ParseError::Syntax {
                    line,
                    col: keyword.col,
                    msg: "`open` before `points`".into(),
                })?;
                if gamma.is_some() {
                    return Err(ParseError::Syntax {
                        line,
                        col: keyword.col,
                        msg: "`open` after `gamma`".into(),
                    });
                }
                opens.push(cur.set(pts)?);
                cur.finish()?;
            }
            "gamma" => {
                let pts = names.as_deref().ok_or_else(|| ParseError::Syntax {
                    line,
                    col: keyword.col,
                    msg: "`gamma` before `points`".into(),
                })?;
                if cur.tokens.get(cur.pos).is_some_and(|t| t.text == "rule") {
                    cur.next();
                    if gamma.is_some() {
                        return Err(ParseError::Syntax {
                            line,
                            col: keyword.col,
                            msg: "operation already given".into(),
                        });
                    }
                    gamma = Some(Gamma::Rule(cur.rule(pts, 0)?));
                } else {
                    let k = cur.set(pts)?;
                    cur.expect("=")?;
                    let v = cur.set(pts)?;
                    match &mut gamma {
                        None => gamma = Some(Gamma::Table(vec![(k, v)])),
                        Some(Gamma::Table(entries)) => entries.push((k, v)),
                        Some(Gamma::Rule(_)) => {
                            return Err(ParseError::Syntax {
                                line,
                                col: keyword.col,
                                msg: "table entry after a rule".into(),
                            })
                        }
                    }
                }
                cur.finish()?;
            }
            "end" => {
                cur.finish()?;
                ended = true;
            }
            other => {
                return Err(ParseError::Syntax {
                    line,
                    col: keyword.col,
                    msg: format!("unknown keyword `{other}`"),
                })
            }
        }
    }

    let eof = |msg: &str| ParseError::Syntax {
        line: last_line + 1,
        col: 1,
        msg: msg.into(),
    };
    let name = name.ok_or_else(|| eof("missing `space` line"))?;
    let names = names.ok_or_else(|| eof("missing `points` line"))?;
    let gamma = gamma.ok_or_else(|| eof("missing `gamma` line"))?;
    if !ended {
        return Err(eof("missing `end`"));
    }
    let n = names.len();
    let topology = validate_topology(SetFamily::new(opens), n)
        .and_then(|t| t.with_names(names))
        .map_err(ParseError::TopologyInvalid)?;
    let space = match gamma {
        Gamma::Rule(rule) => Space::from_rule(name, topology, rule)?,
        Gamma::Table(entries) => Space::from_table(name, topology, &entries)?,
    };
    Ok(space)
}

/// Renders a space so that [`parse_space_file`] gives it back unchanged.
pub fn render_space_file(s: &Space) -> String {
    let names = s.names();
    let mut out = format!("space {}\n", s.name());
    out.push_str("points");
    for n in names {
        out.push(' ');
        out.push_str(n);
    }
    out.push('\n');
    for &u in s.topology().opens() {
        out.push_str(&format!("open {}\n", u.render(names)));
    }
    match s.rule() {
        Some(rule) => out.push_str(&format!("gamma rule {}\n", rule.render(names))),
        None => {
            for (k, v) in s.operation().entries() {
                out.push_str(&format!("gamma {} = {}\n", k.render(names), v.render(names)));
            }
        }
    }
    out.push_str("end\n");
    out
}
