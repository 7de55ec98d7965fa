use crate::alphabet::RIGHT;
use crate::error::Result;

use super::{PfaDistribution, PostPfa, RunResult};

/// Calls `f` on every word of length `<= max_len` over the automaton's
/// letters, in shortlex-per-branch DFS order, with its exact run result.
///
/// Prefixes share their distributions, so the cost is one step per word
/// rather than one run per word.
pub fn enumerate_words(pfa: &PostPfa, max_len: usize, mut f: impl FnMut(&str, &RunResult)) -> Result<()> {
    pfa.validate().into_result()?;
    let start = pfa.initial_distribution().step(pfa, crate::alphabet::LEFT);
    let mut word = String::new();
    dfs(pfa, &start, max_len, &mut word, &mut f);
    Ok(())
}

fn dfs(pfa: &PostPfa, d: &PfaDistribution, left: usize, word: &mut String, f: &mut impl FnMut(&str, &RunResult)) {
    let here = d.step(pfa, RIGHT).outcome(pfa);
    f(word, &here);
    if left == 0 {
        return;
    }
    let letters = pfa.alphabet().letters();
    let next: Vec<PfaDistribution> = (0..letters.len()).map(|i| d.step(pfa, i + 2)).collect();
    if next.iter().all(|n| n == d) {
        // no letter moves any mass, so every extension ends the same way
        for &c in letters {
            word.push(c);
            fixed(letters, &here, left - 1, word, f);
            word.pop();
        }
        return;
    }
    for (i, n) in next.iter().enumerate() {
        word.push(letters[i]);
        dfs(pfa, n, left - 1, word, f);
        word.pop();
    }
}

fn fixed(letters: &[char], r: &RunResult, left: usize, word: &mut String, f: &mut impl FnMut(&str, &RunResult)) {
    f(word, r);
    if left == 0 {
        return;
    }
    for &c in letters {
        word.push(c);
        fixed(letters, r, left - 1, word, f);
        word.pop();
    }
}

/// All words of length `<= max_len` over `letters`, shortest first.
pub fn words_up_to(letters: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * letters.len());
        for w in &layer {
            for &c in letters {
                let mut v = w.clone();
                v.push(c);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
