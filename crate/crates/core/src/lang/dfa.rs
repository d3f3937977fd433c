use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt;

use super::{Alphabet, LangError, Regex, Word};

pub const DEFAULT_STATE_CAP: usize = 10_000;

/// Brzozowski automaton: states are canonical derivatives, state 0 is the
/// start. The `Empty` sink, when reachable, is an ordinary state.
#[derive(Clone, Debug)]
pub struct Dfa {
    pub alphabet: Alphabet,
    pub states: Vec<Regex>,
    /// `transitions[state][symbol index]`
    pub transitions: Vec<Vec<usize>>,
    pub accepting: Vec<bool>,
}

impl Dfa {
    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    /// Run the automaton. Symbols outside the alphabet reject.
    pub fn accepts(&self, w: &Word) -> bool {
        let mut s = 0;
        for &c in &w.0 {
            match self.alphabet.index_of(c) {
                Some(i) => s = self.transitions[s][i],
                None => return false,
            }
        }
        self.accepting[s]
    }
}

impl fmt::Display for Dfa {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "state  acc")?;
        for c in self.alphabet.symbols() {
            write!(f, "  {c:>5}")?;
        }
        writeln!(f, "  regex")?;
        for (i, r) in self.states.iter().enumerate() {
            write!(f, "{i:>5}  {:>3}", if self.accepting[i] { "*" } else { "" })?;
            for &t in &self.transitions[i] {
                write!(f, "  {t:>5}")?;
            }
            writeln!(f, "  {r}")?;
        }
        Ok(())
    }
}

/// Explore derivatives breadth-first. Termination follows from the
/// finiteness of ACI-canonical derivatives; `state_cap` guards it anyway.
pub fn build_dfa(r: &Regex, alphabet: &Alphabet, state_cap: usize) -> Result<Dfa, LangError> {
    assert!(state_cap >= 1, "state_cap must be at least 1");
    let mut index: HashMap<Regex, usize> = HashMap::new();
    let mut states = vec![r.clone()];
    let mut transitions: Vec<Vec<usize>> = vec![Vec::new()];
    index.insert(r.clone(), 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(s) = queue.pop_front() {
        let mut row = Vec::with_capacity(alphabet.len());
        for &c in alphabet.symbols() {
            let next = states[s].deriv(c);
            let t = match index.get(&next) {
                Some(&t) => t,
                None => {
                    if states.len() == state_cap {
                        return Err(LangError::StateCapExceeded(state_cap));
                    }
                    let t = states.len();
                    index.insert(next.clone(), t);
                    states.push(next);
                    transitions.push(Vec::new());
                    queue.push_back(t);
                    t
                }
            };
            row.push(t);
        }
        transitions[s] = row;
    }
    let accepting = states.iter().map(Regex::nullable).collect();
    Ok(Dfa {
        alphabet: alphabet.clone(),
        states,
        transitions,
        accepting,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::{enumerate, parse_regex};

    #[test]
    fn ab_star_has_two_live_states_and_a_sink() {
        let ab = Alphabet::default();
        let r = parse_regex("(ab)*", &ab).unwrap();
        let dfa = build_dfa(&r, &ab, DEFAULT_STATE_CAP).unwrap();
        assert_eq!(dfa.num_states(), 3);
        assert!(dfa.states.contains(&Regex::Empty));
        let window = enumerate(&r, &ab, 8).unwrap();
        for w in ab.words_up_to(8) {
            assert_eq!(dfa.accepts(&w), window.contains(&w), "{w}");
        }
    }

    #[test]
    fn empty_language_is_one_rejecting_state() {
        let ab = Alphabet::default();
        let dfa = build_dfa(&Regex::Empty, &ab, 10).unwrap();
        assert_eq!(dfa.num_states(), 1);
        assert!(!dfa.accepting[0]);
    }

    #[test]
    fn alt_agrees_with_matcher() {
        let ab = Alphabet::default();
        let r = parse_regex("a|b", &ab).unwrap();
        let dfa = build_dfa(&r, &ab, 10).unwrap();
        for w in ab.words_up_to(4) {
            assert_eq!(dfa.accepts(&w), r.matches(&w));
        }
    }

    #[test]
    fn state_cap_is_reported() {
        let ab = Alphabet::default();
        let r = parse_regex("(ab)*", &ab).unwrap();
        assert_eq!(
            build_dfa(&r, &ab, 2).unwrap_err(),
            LangError::StateCapExceeded(2)
        );
    }
}
