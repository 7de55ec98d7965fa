//! Breadth-first construction of transition tables from a step function.
//!
//! Builders describe a machine by its state type and a closure giving the
//! weighted successors of a state under a key (input symbol, possibly paired
//! with a certificate symbol or counter test). Only reachable states are kept.

use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;

use num_traits::Zero;

use crate::rational::Rational;

pub(crate) struct Table<E> {
    pub names: Vec<String>,
    /// Flattened `[state * keys + key]`; each row sorted by `(target, label)`.
    pub rows: Vec<Vec<(usize, E, Rational)>>,
}

pub(crate) fn explore<S, E>(
    roots: &[S],
    keys: usize,
    mut step: impl FnMut(&S, usize) -> Vec<(S, E, Rational)>,
) -> Table<E>
where
    S: Clone + Eq + Hash + Debug,
    E: Copy + Ord,
{
    let mut index: HashMap<S, usize> = HashMap::new();
    let mut states: Vec<S> = Vec::new();
    for r in roots {
        if !index.contains_key(r) {
            index.insert(r.clone(), states.len());
            states.push(r.clone());
        }
    }
    let mut rows = Vec::new();
    let mut next = 0;
    while next < states.len() {
        let s = states[next].clone();
        for key in 0..keys {
            let mut row: Vec<(usize, E, Rational)> = Vec::new();
            for (t, label, p) in step(&s, key) {
                if p.is_zero() {
                    continue;
                }
                let id = *index.entry(t.clone()).or_insert_with(|| {
                    states.push(t);
                    states.len() - 1
                });
                row.push((id, label, p));
            }
            rows.push(normalize_row(row));
        }
        next += 1;
    }
    Table {
        names: states.iter().map(|s| format!("{s:?}")).collect(),
        rows,
    }
}

/// Sorts by `(target, label)` and merges duplicates.
pub(crate) fn normalize_row<E: Copy + Ord>(mut row: Vec<(usize, E, Rational)>) -> Vec<(usize, E, Rational)> {
    row.sort_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)));
    let mut out: Vec<(usize, E, Rational)> = Vec::with_capacity(row.len());
    for (t, l, p) in row {
        match out.last_mut() {
            Some(last) if last.0 == t && last.1 == l => last.2 += p,
            _ => out.push((t, l, p)),
        }
    }
    out.retain(|e| !e.2.is_zero());
    out
}
