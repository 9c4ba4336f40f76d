//! Line-oriented ring specification files.
//!
//! ```text
//! # comment
//! ring AU
//! var x : 1
//! var b : 2
//! var e : 1 odd
//! let H = (4*z - y)/2
//! ideal
//! gen H^3
//! ```
//!
//! All `var` lines come before any `let` or `ideal`. `let` bodies may use
//! earlier lets. `gen` lines follow `ideal`. LF and CRLF are accepted.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::expr::parse_poly_with;
use crate::groebner::Ideal;
use crate::poly::Polynomial;
use crate::ring::{make_ring, Ring, RingSpec, VarSpec};

#[derive(Clone, Debug)]
pub struct SpecFile {
    pub name: String,
    pub ring: Ring,
    pub lets: Vec<(String, Polynomial)>,
    pub ideal: Ideal,
    bindings: HashMap<String, Polynomial>,
}

impl SpecFile {
    pub fn parse(text: &str) -> Result<Self> {
        Parser::default().run(text)
    }

    /// Parses an expression over the ring with the file's lets in scope.
    pub fn parse_expr(&self, text: &str) -> Result<Polynomial> {
        parse_poly_with(&self.ring, text, &self.bindings)
    }
}

#[derive(Default)]
struct Parser {
    name: Option<String>,
    vars: Vec<VarSpec>,
    ring: Option<Ring>,
    lets: Vec<(String, Polynomial)>,
    bindings: HashMap<String, Polynomial>,
    in_ideal: bool,
    gens: Vec<Polynomial>,
}

fn err(line: usize, message: impl Into<String>) -> Error {
    Error::SpecFile {
        line,
        message: message.into(),
    }
}

impl Parser {
    fn run(mut self, text: &str) -> Result<SpecFile> {
        let mut last = 0;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            last = line;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (keyword, rest) = match content.split_once(char::is_whitespace) {
                Some((k, r)) => (k, r.trim()),
                None => (content, ""),
            };
            match keyword {
                "ring" => self.ring_line(line, rest)?,
                "var" => self.var_line(line, rest)?,
                "let" => self.let_line(line, rest)?,
                "ideal" => {
                    if !rest.is_empty() {
                        return Err(err(line, "`ideal` takes no arguments"));
                    }
                    if self.in_ideal {
                        return Err(err(line, "only one ideal block is allowed"));
                    }
                    self.ring(line)?;
                    self.in_ideal = true;
                }
                "gen" => {
                    if !self.in_ideal {
                        return Err(err(line, "`gen` outside an ideal block"));
                    }
                    let p = self.expr(line, rest)?;
                    self.gens.push(p);
                }
                other => return Err(err(line, format!("unknown directive `{other}`"))),
            }
        }
        let ring = self.ring(last.max(1))?;
        let name = self.name.ok_or_else(|| err(1, "missing `ring NAME` line"))?;
        let ideal = Ideal::new(&ring, self.gens)?;
        Ok(SpecFile {
            name,
            ring,
            lets: self.lets,
            ideal,
            bindings: self.bindings,
        })
    }

    fn ring_line(&mut self, line: usize, rest: &str) -> Result<()> {
        if self.name.is_some() {
            return Err(err(line, "duplicate `ring` line"));
        }
        if rest.is_empty() || rest.contains(char::is_whitespace) {
            return Err(err(line, "expected `ring NAME`"));
        }
        self.name = Some(rest.to_string());
        Ok(())
    }

    fn var_line(&mut self, line: usize, rest: &str) -> Result<()> {
        if self.name.is_none() {
            return Err(err(line, "`var` before `ring`"));
        }
        if self.ring.is_some() {
            return Err(err(line, "`var` after the ring is complete"));
        }
        let (name, decl) = rest
            .split_once(':')
            .ok_or_else(|| err(line, "expected `var NAME : WEIGHT [odd]`"))?;
        let name = name.trim();
        let mut words = decl.split_whitespace();
        let weight: u32 = words
            .next()
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| err(line, "weight must be a positive integer"))?;
        let odd = match words.next() {
            None => false,
            Some("odd") => true,
            Some(w) => return Err(err(line, format!("unexpected `{w}`"))),
        };
        if let Some(w) = words.next() {
            return Err(err(line, format!("unexpected `{w}`")));
        }
        self.vars.push(if odd {
            VarSpec::odd(name, weight)
        } else {
            VarSpec::even(name, weight)
        });
        Ok(())
    }

    fn let_line(&mut self, line: usize, rest: &str) -> Result<()> {
        if self.in_ideal {
            return Err(err(line, "`let` inside the ideal block"));
        }
        let (name, body) = rest
            .split_once('=')
            .ok_or_else(|| err(line, "expected `let NAME = EXPR`"))?;
        let name = name.trim();
        let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(err(line, format!("invalid let name `{name}`")));
        }
        let ring = self.ring(line)?;
        if ring.index_of(name).is_some() || self.bindings.contains_key(name) {
            return Err(err(line, format!("`{name}` is already defined")));
        }
        let p = self.expr(line, body)?;
        self.bindings.insert(name.to_string(), p.clone());
        self.lets.push((name.to_string(), p));
        Ok(())
    }

    fn ring(&mut self, line: usize) -> Result<Ring> {
        if let Some(r) = &self.ring {
            return Ok(r.clone());
        }
        if self.name.is_none() {
            return Err(err(line, "missing `ring NAME` line"));
        }
        let ring = make_ring(RingSpec::new(std::mem::take(&mut self.vars))).map_err(|e| err(line, e.to_string()))?;
        self.ring = Some(ring.clone());
        Ok(ring)
    }

    fn expr(&mut self, line: usize, text: &str) -> Result<Polynomial> {
        let ring = self.ring(line)?;
        parse_poly_with(&ring, text, &self.bindings).map_err(|e| err(line, e.to_string()))
    }
}
