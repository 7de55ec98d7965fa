//! JSON documents describing automata.
//!
//! Probabilities are written as `"p/q"` strings. States keep their index
//! order, so the state list doubles as the id table; transitions are sorted
//! by source, symbol, certificate symbol, counter test and target.
//!
//! ```json
//! {
//!   "kind": "pfa",
//!   "alphabet": ["0", "1"],
//!   "states": ["s", "acc", "rej"],
//!   "start": "s", "accept": "acc", "reject": "rej",
//!   "transitions": [{ "from": "s", "symbol": "¢", "to": "acc", "p": "1/1" }]
//! }
//! ```

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::alphabet::{Alphabet, SymbolId};
use crate::counter::{CounterOp, PostPca};
use crate::engine::{PostPfa, StateId};
use crate::error::{Error, Result};
use crate::rational::{format_rational, parse_rational};
use crate::verifier::{HeadMove, VerifierPfa};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Pfa,
    Verifier,
    Pca,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CounterTest {
    Zero,
    Nonzero,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Move {
    Stay,
    Advance,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionRecord {
    pub from: String,
    pub symbol: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counter: Option<CounterTest>,
    pub to: String,
    #[serde(default, skip_serializing_if = "Option::is_none", rename = "move")]
    pub head: Option<Move>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub update: Option<i8>,
    pub p: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AutomatonDocument {
    pub kind: Kind,
    pub alphabet: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate_alphabet: Option<Vec<String>>,
    pub states: Vec<String>,
    pub start: String,
    pub accept: String,
    pub reject: String,
    pub transitions: Vec<TransitionRecord>,
}

/// Any of the three machine types a document can hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Automaton {
    Pfa(PostPfa),
    Verifier(VerifierPfa),
    Pca(PostPca),
}

impl From<PostPfa> for Automaton {
    fn from(p: PostPfa) -> Self {
        Automaton::Pfa(p)
    }
}

impl From<VerifierPfa> for Automaton {
    fn from(v: VerifierPfa) -> Self {
        Automaton::Verifier(v)
    }
}

impl From<PostPca> for Automaton {
    fn from(p: PostPca) -> Self {
        Automaton::Pca(p)
    }
}

impl Automaton {
    pub fn kind(&self) -> Kind {
        match self {
            Automaton::Pfa(_) => Kind::Pfa,
            Automaton::Verifier(_) => Kind::Verifier,
            Automaton::Pca(_) => Kind::Pca,
        }
    }
}

fn letters(a: &Alphabet) -> Vec<String> {
    a.letters().iter().map(|c| c.to_string()).collect()
}

fn sym(a: &Alphabet, id: SymbolId) -> String {
    a.symbol(id).to_string()
}

fn record(names: &[String], a: &Alphabet, s: StateId, k: SymbolId, t: StateId, p: &crate::Rational) -> TransitionRecord {
    TransitionRecord {
        from: names[s].clone(),
        symbol: sym(a, k),
        certificate: None,
        counter: None,
        to: names[t].clone(),
        head: None,
        update: None,
        p: format_rational(p),
    }
}

impl AutomatonDocument {
    pub fn from_automaton(m: &Automaton) -> Self {
        let mut transitions = Vec::new();
        let (alphabet, names, designated, cert) = match m {
            Automaton::Pfa(p) => {
                let (a, n) = (p.alphabet(), p.state_names());
                for s in 0..p.state_count() {
                    for k in 0..a.symbol_count() {
                        for (t, pr) in p.row(s, k) {
                            transitions.push(record(n, a, s, k, *t, pr));
                        }
                    }
                }
                (a, n, (p.start(), p.accept(), p.reject()), None)
            }
            Automaton::Verifier(v) => {
                let (a, n, ca) = (v.alphabet(), v.state_names(), v.certificate_alphabet());
                for s in 0..v.state_count() {
                    for k in 0..a.symbol_count() {
                        for (c, label) in ca.iter().enumerate() {
                            for (t, mv, pr) in v.row(s, k, c) {
                                transitions.push(TransitionRecord {
                                    certificate: Some(label.clone()),
                                    head: Some(match mv {
                                        HeadMove::Stay => Move::Stay,
                                        HeadMove::Advance => Move::Advance,
                                    }),
                                    ..record(n, a, s, k, *t, pr)
                                });
                            }
                        }
                    }
                }
                (a, n, (v.start(), v.accept(), v.reject()), Some(ca.to_vec()))
            }
            Automaton::Pca(p) => {
                let (a, n) = (p.alphabet(), p.state_names());
                for s in 0..p.state_count() {
                    for k in 0..a.symbol_count() {
                        for zero in [true, false] {
                            for (t, op, pr) in p.row(s, k, zero) {
                                transitions.push(TransitionRecord {
                                    counter: Some(if zero { CounterTest::Zero } else { CounterTest::Nonzero }),
                                    update: Some(op.delta() as i8),
                                    ..record(n, a, s, k, *t, pr)
                                });
                            }
                        }
                    }
                }
                (a, n, (p.start(), p.accept(), p.reject()), None)
            }
        };
        AutomatonDocument {
            kind: m.kind(),
            alphabet: letters(alphabet),
            certificate_alphabet: cert,
            states: names.to_vec(),
            start: names[designated.0].clone(),
            accept: names[designated.1].clone(),
            reject: names[designated.2].clone(),
            transitions,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))
    }

    /// Builds and validates the automaton.
    pub fn into_automaton(self) -> Result<Automaton> {
        let at = |field: String| move |msg: String| Error::parse(field, msg);
        let mut chars = Vec::new();
        for (i, l) in self.alphabet.iter().enumerate() {
            chars.push(single_char(l).ok_or_else(|| at(format!("alphabet[{i}]"))(format!("{l:?} is not a single character")))?);
        }
        let alphabet = Alphabet::new(chars).map_err(|e| Error::parse("alphabet", e.to_string()))?;
        let ids: HashMap<&str, StateId> = self.states.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let state = |name: &str, field: String| ids.get(name).copied().ok_or_else(|| at(field)(format!("unknown state {name:?}")));
        let start = state(&self.start, "start".into())?;
        let accept = state(&self.accept, "accept".into())?;
        let reject = state(&self.reject, "reject".into())?;
        let cert_ids: Option<HashMap<&str, usize>> =
            self.certificate_alphabet.as_ref().map(|c| c.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect());
        match (self.kind, &cert_ids) {
            (Kind::Verifier, None) => return Err(Error::parse("certificate_alphabet", "verifier documents need one")),
            (Kind::Pfa | Kind::Pca, Some(_)) => {
                return Err(Error::parse("certificate_alphabet", "only verifier documents have one"))
            }
            _ => {}
        }
        let n = self.states.len();
        let k = alphabet.symbol_count();
        let c = cert_ids.as_ref().map_or(1, |m| m.len());
        let width = match self.kind {
            Kind::Pfa => 1,
            Kind::Verifier => c,
            Kind::Pca => 2,
        };
        // entries grouped by (state, symbol, sub-key)
        let mut rows: Vec<Vec<(StateId, i8, crate::Rational)>> = vec![Vec::new(); n * k * width];
        for (i, t) in self.transitions.iter().enumerate() {
            let f = |name: &str| format!("transitions[{i}].{name}");
            let s = state(&t.from, f("from"))?;
            let to = state(&t.to, f("to"))?;
            let symbol = single_char(&t.symbol)
                .and_then(|ch| alphabet.id(ch))
                .ok_or_else(|| at(f("symbol"))(format!("{:?} is not a symbol of the alphabet", t.symbol)))?;
            let p = parse_rational(&t.p).map_err(|_| at(f("p"))(format!("{:?} is not a rational p/q", t.p)))?;
            let (sub, tag) = match self.kind {
                Kind::Pfa => {
                    forbid(t.certificate.is_some(), f("certificate"))?;
                    forbid(t.head.is_some(), f("move"))?;
                    forbid(t.counter.is_some(), f("counter"))?;
                    forbid(t.update.is_some(), f("update"))?;
                    (0, 0)
                }
                Kind::Verifier => {
                    forbid(t.counter.is_some(), f("counter"))?;
                    forbid(t.update.is_some(), f("update"))?;
                    let label = t.certificate.as_deref().ok_or_else(|| at(f("certificate"))("missing".into()))?;
                    let cid = cert_ids.as_ref().and_then(|m| m.get(label).copied());
                    let cid = cid.ok_or_else(|| at(f("certificate"))(format!("unknown certificate symbol {label:?}")))?;
                    let mv = t.head.ok_or_else(|| at(f("move"))("missing".into()))?;
                    (cid, if mv == Move::Advance { 1 } else { 0 })
                }
                Kind::Pca => {
                    forbid(t.certificate.is_some(), f("certificate"))?;
                    forbid(t.head.is_some(), f("move"))?;
                    let test = t.counter.ok_or_else(|| at(f("counter"))("missing".into()))?;
                    let u = t.update.ok_or_else(|| at(f("update"))("missing".into()))?;
                    if !(-1..=1).contains(&u) {
                        return Err(at(f("update"))(format!("{u} is not one of -1, 0, 1")));
                    }
                    (if test == CounterTest::Zero { 0 } else { 1 }, u)
                }
            };
            rows[(s * k + symbol) * width + sub].push((to, tag, p));
        }
        let names = self.states;
        let m = match self.kind {
            Kind::Pfa => {
                let grouped = group(rows, k, 1, |(t, _, p)| (t, p));
                let grouped = grouped.into_iter().map(|g| g.into_iter().map(|mut r| r.remove(0)).collect()).collect();
                Automaton::Pfa(PostPfa::new(alphabet, names, start, accept, reject, grouped)?)
            }
            Kind::Verifier => {
                let grouped = group(rows, k, c, |(t, m, p)| (t, if m == 1 { HeadMove::Advance } else { HeadMove::Stay }, p));
                let labels = self.certificate_alphabet.unwrap_or_default();
                Automaton::Verifier(VerifierPfa::new(alphabet, labels, names, start, accept, reject, grouped)?)
            }
            Kind::Pca => {
                let op = |u: i8| match u {
                    -1 => CounterOp::Dec,
                    0 => CounterOp::Keep,
                    _ => CounterOp::Inc,
                };
                let grouped = group(rows, k, 2, |(t, u, p)| (t, op(u), p));
                let grouped = grouped
                    .into_iter()
                    .map(|g| g.into_iter().map(|mut pair| [pair.remove(0), pair.remove(0)]).collect())
                    .collect();
                Automaton::Pca(PostPca::new(alphabet, names, start, accept, reject, grouped)?)
            }
        };
        let report = match &m {
            Automaton::Pfa(p) => p.validate(),
            Automaton::Verifier(v) => v.validate(),
            Automaton::Pca(p) => p.validate(),
        };
        report.into_result()?;
        Ok(m)
    }
}

type Raw = (StateId, i8, crate::Rational);

fn group<E>(rows: Vec<Vec<Raw>>, k: usize, width: usize, f: impl Fn(Raw) -> E + Copy) -> Vec<Vec<Vec<Vec<E>>>> {
    let mut it = rows.into_iter();
    let n = it.len() / (k * width);
    (0..n)
        .map(|_| {
            (0..k)
                .map(|_| (0..width).map(|_| it.next().unwrap().into_iter().map(f).collect()).collect())
                .collect()
        })
        .collect()
}

fn forbid(present: bool, field: String) -> Result<()> {
    if present {
        Err(Error::parse(field, "not allowed for this kind of automaton"))
    } else {
        Ok(())
    }
}

fn single_char(s: &str) -> Option<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Some(c),
        _ => None,
    }
}

pub fn serialize(m: &Automaton) -> String {
    AutomatonDocument::from_automaton(m).to_json()
}

pub fn parse(text: &str) -> Result<Automaton> {
    AutomatonDocument::from_json(text)?.into_automaton()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    #[test]
    fn round_trip_equal() {
        let p = crate::zoo::build_equal(&rat(1, 4)).unwrap();
        let m = Automaton::Pfa(p);
        let text = serialize(&m);
        assert_eq!(parse(&text).unwrap(), m);
        assert_eq!(serialize(&parse(&text).unwrap()), text);
    }

    #[test]
    fn zero_denominator_is_a_parse_error() {
        let text = serialize(&Automaton::Pfa(crate::zoo::build_equal(&rat(1, 4)).unwrap()));
        let bad = text.replacen("\"p\": \"1/2\"", "\"p\": \"2/0\"", 1);
        assert_ne!(bad, text);
        match parse(&bad) {
            Err(Error::Parse { location, .. }) => assert!(location.ends_with(".p"), "{location}"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn short_row_names_the_row() {
        let doc = r#"{"kind":"pfa","alphabet":["0"],"states":["s","a","r"],"start":"s","accept":"a","reject":"r",
            "transitions":[{"from":"s","symbol":"¢","to":"a","p":"3/4"}]}"#;
        let err = parse(doc).unwrap_err();
        assert!(matches!(err, Error::MalformedAutomaton(_)));
        assert!(err.to_string().contains("(s, ¢) sums to 3/4"), "{err}");
    }
}
