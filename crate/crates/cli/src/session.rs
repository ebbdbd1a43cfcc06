//! Session files: one ring declaration, then named ideals and filtrations.
//!
//! ```text
//! ring p=32003 vars=x,y,z order=grevlex weights=3,4,5
//! ideal p = y^2 - x*z, x^3 - y*z
//! filtration F = symbolic:p
//! ```

use spreadlab::filtration::Filtration;
use spreadlab::{Ideal, MonomialOrder, Ring, RingRef};
use std::fmt;

#[derive(Debug)]
pub struct SessionError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for SessionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "session line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for SessionError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FiltrationSpec {
    Adic(String),
    Symbolic(String, Option<String>),
    TrivialM,
}

impl fmt::Display for FiltrationSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiltrationSpec::Adic(i) => write!(f, "adic:{i}"),
            FiltrationSpec::Symbolic(i, None) => write!(f, "symbolic:{i}"),
            FiltrationSpec::Symbolic(i, Some(j)) => write!(f, "symbolic:{i}:{j}"),
            FiltrationSpec::TrivialM => write!(f, "trivial-m"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Session {
    pub ring: RingRef,
    order_name: String,
    pub ideals: Vec<(String, Ideal)>,
    pub filtrations: Vec<(String, FiltrationSpec)>,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_list<T: std::str::FromStr>(s: &str, line: usize, what: &str) -> Result<Vec<T>, SessionError> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| SessionError { line, msg: format!("bad {what} entry {x:?}") }))
        .collect()
}

impl Session {
    pub fn parse(src: &str) -> Result<Session, SessionError> {
        let mut ring: Option<(RingRef, String)> = None;
        let mut ideals: Vec<(String, Ideal)> = Vec::new();
        let mut filtrations: Vec<(String, FiltrationSpec)> = Vec::new();
        for (k, raw) in src.lines().enumerate() {
            let line = k + 1;
            let err = |msg: String| SessionError { line, msg };
            let text = raw.split('#').next().unwrap().trim();
            if text.is_empty() {
                continue;
            }
            let (head, rest) = text.split_once(char::is_whitespace).unwrap_or((text, ""));
            match head {
                "ring" => {
                    if ring.is_some() {
                        return Err(err("second ring declaration".into()));
                    }
                    ring = Some(Self::parse_ring(rest, line)?);
                }
                "ideal" | "filtration" => {
                    let Some((r, _)) = &ring else {
                        return Err(err(format!("{head} before the ring declaration")));
                    };
                    let (name, body) = rest.split_once('=').ok_or_else(|| err(format!("expected `{head} <name> = ...`")))?;
                    let name = name.trim().to_string();
                    if !valid_name(&name) {
                        return Err(err(format!("invalid name {name:?}")));
                    }
                    if ideals.iter().any(|(n, _)| *n == name) || filtrations.iter().any(|(n, _)| *n == name) {
                        return Err(err(format!("{name} is defined twice")));
                    }
                    if head == "ideal" {
                        let i = Ideal::parse(r, body.trim()).map_err(|e| err(e.to_string()))?;
                        ideals.push((name, i));
                    } else {
                        let spec = Self::parse_filtration(body.trim(), &ideals, line)?;
                        filtrations.push((name, spec));
                    }
                }
                other => return Err(err(format!("unknown declaration {other:?}"))),
            }
        }
        let (ring, order_name) = ring.ok_or(SessionError { line: 0, msg: "missing ring declaration".into() })?;
        Ok(Session { ring, order_name, ideals, filtrations })
    }

    fn parse_ring(rest: &str, line: usize) -> Result<(RingRef, String), SessionError> {
        let err = |msg: String| SessionError { line, msg };
        let (mut p, mut vars, mut order, mut weights) = (None, None, "grevlex".to_string(), None);
        for field in rest.split_whitespace() {
            let (key, value) = field.split_once('=').ok_or_else(|| err(format!("expected key=value, got {field:?}")))?;
            match key {
                "p" => p = Some(value.parse::<u32>().map_err(|_| err(format!("bad prime {value:?}")))?),
                "vars" => vars = Some(value.split(',').map(|v| v.trim().to_string()).collect::<Vec<_>>()),
                "order" => order = value.to_string(),
                "weights" => weights = Some(parse_list::<u32>(value, line, "weight")?),
                _ => return Err(err(format!("unknown ring field {key:?}"))),
            }
        }
        let vars = vars.ok_or_else(|| err("ring needs vars=".into()))?;
        if vars.iter().any(|v| !valid_name(v)) {
            return Err(err("variable names must be identifiers".into()));
        }
        let n = vars.len();
        let mono_order = match order.as_str() {
            "grevlex" => MonomialOrder::Grevlex,
            "lex" => MonomialOrder::Lex,
            "wgrevlex" => MonomialOrder::WeightedGrevlex(weights.clone().unwrap_or_else(|| vec![1; n])),
            other => return Err(err(format!("unknown order {other:?} (grevlex, lex, wgrevlex)"))),
        };
        let names: Vec<&str> = vars.iter().map(String::as_str).collect();
        let ring = Ring::new(p.unwrap_or(spreadlab::DEFAULT_PRIME), &names, mono_order, weights)
            .map_err(|e| err(e.to_string()))?;
        Ok((ring, order))
    }

    fn parse_filtration(body: &str, ideals: &[(String, Ideal)], line: usize) -> Result<FiltrationSpec, SessionError> {
        let err = |msg: String| SessionError { line, msg };
        let parts: Vec<&str> = body.split(':').map(str::trim).collect();
        let known = |n: &str| {
            if ideals.iter().any(|(k, _)| k == n) {
                Ok(n.to_string())
            } else {
                Err(err(format!("unknown ideal {n:?}")))
            }
        };
        match parts.as_slice() {
            ["adic", i] => Ok(FiltrationSpec::Adic(known(i)?)),
            ["symbolic", i] => Ok(FiltrationSpec::Symbolic(known(i)?, None)),
            ["symbolic", i, j] => Ok(FiltrationSpec::Symbolic(known(i)?, Some(known(j)?))),
            ["trivial-m"] => Ok(FiltrationSpec::TrivialM),
            _ => Err(err(format!("bad filtration {body:?} (adic:I, symbolic:I[:J], trivial-m)"))),
        }
    }

    pub fn ideal(&self, name: &str) -> Option<&Ideal> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, i)| i)
    }

    pub fn filtration_spec(&self, name: &str) -> Option<&FiltrationSpec> {
        self.filtrations.iter().find(|(n, _)| n == name).map(|(_, f)| f)
    }

    pub fn filtration(&self, name: &str) -> Option<spreadlab::Result<Filtration>> {
        let spec = self.filtration_spec(name)?;
        Some(match spec {
            FiltrationSpec::Adic(i) => Ok(Filtration::adic(self.ideal(i).unwrap())),
            FiltrationSpec::Symbolic(i, j) => {
                Filtration::symbolic(self.ideal(i).unwrap(), j.as_ref().map(|j| self.ideal(j).unwrap()))
            }
            FiltrationSpec::TrivialM => Ok(Filtration::trivial_m(&self.ring)),
        })
    }
}

/// Canonical text: comments and spacing dropped, generators as given.
impl fmt::Display for Session {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |xs: Vec<String>| xs.join(",");
        writeln!(
            f,
            "ring p={} vars={} order={} weights={}",
            self.ring.p(),
            join(self.ring.vars().to_vec()),
            self.order_name,
            join(self.ring.weights().iter().map(|w| w.to_string()).collect())
        )?;
        for (name, i) in &self.ideals {
            let gens: Vec<String> = i.gens().iter().map(|g| g.to_string()).collect();
            let body = if gens.is_empty() { "0".to_string() } else { gens.join(", ") };
            writeln!(f, "ideal {name} = {body}")?;
        }
        for (name, spec) in &self.filtrations {
            writeln!(f, "filtration {name} = {spec}")?;
        }
        Ok(())
    }
}
