//! Denotational oracle: the words of a regex's language up to a length bound,
//! computed by structural recursion (union, bounded concatenation, bounded
//! star closure). Never consults derivatives.

use std::collections::BTreeSet;

use super::{Alphabet, LangError, Regex, Word};

pub const DEFAULT_ENUM_CAP: usize = 10;

/// Hard ceiling on the number of words a window may index.
const MAX_WINDOW_WORDS: usize = 1 << 22;

/// The words of a language of length at most `max_length`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LangSample {
    pub max_length: usize,
    pub words: BTreeSet<Word>,
}

impl LangSample {
    pub fn contains(&self, w: &Word) -> bool {
        self.words.contains(w)
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// A bitset over all words of length `≤ max_length`. Word `w` of length `n`
/// lives at `offset[n] + code(w)`, `code` being base-`k` positional.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    k: usize,
    max_length: usize,
    offsets: Vec<usize>,
    bits: Vec<bool>,
}

impl Window {
    fn blank(k: usize, max_length: usize) -> Self {
        let mut offsets = Vec::with_capacity(max_length + 2);
        let mut total = 0usize;
        let mut layer = 1usize;
        for _ in 0..=max_length {
            offsets.push(total);
            total += layer;
            layer *= k;
        }
        offsets.push(total);
        Window {
            k,
            max_length,
            offsets,
            bits: vec![false; total],
        }
    }

    fn len_of(&self, idx: usize) -> usize {
        self.offsets.partition_point(|&o| o <= idx) - 1
    }

    fn pow(&self, n: usize) -> usize {
        self.offsets[n + 1] - self.offsets[n]
    }

    fn members(&self) -> Vec<usize> {
        (0..self.bits.len()).filter(|&i| self.bits[i]).collect()
    }

    pub fn union_in_place(&mut self, other: &Window) {
        for (x, y) in self.bits.iter_mut().zip(&other.bits) {
            *x |= *y;
        }
    }

    fn concat(&self, other: &Window) -> Window {
        let mut out = Window::blank(self.k, self.max_length);
        let rhs = other.members();
        for u in self.members() {
            let lu = self.len_of(u);
            let cu = u - self.offsets[lu];
            for &v in &rhs {
                let lv = other.len_of(v);
                if lu + lv > self.max_length {
                    continue;
                }
                let cv = v - self.offsets[lv];
                out.bits[self.offsets[lu + lv] + cu * self.pow(lv) + cv] = true;
            }
        }
        out
    }

    fn star(&self) -> Window {
        let mut base = self.clone();
        base.bits[0] = false;
        let mut acc = Window::blank(self.k, self.max_length);
        acc.bits[0] = true;
        loop {
            let mut next = base.concat(&acc);
            next.union_in_place(&acc);
            if next == acc {
                return acc;
            }
            acc = next;
        }
    }

    /// Compute the window of `r`. Literals outside the alphabet denote no
    /// word of the window.
    pub fn of(r: &Regex, alphabet: &Alphabet, max_length: usize) -> Result<Window, LangError> {
        if max_length > DEFAULT_ENUM_CAP {
            return Err(LangError::CapExceeded {
                requested: max_length,
                cap: DEFAULT_ENUM_CAP,
            });
        }
        Self::of_capped(r, alphabet, max_length, DEFAULT_ENUM_CAP)
    }

    pub fn of_capped(
        r: &Regex,
        alphabet: &Alphabet,
        max_length: usize,
        cap: usize,
    ) -> Result<Window, LangError> {
        let too_big = alphabet
            .len()
            .checked_pow(max_length as u32 + 1)
            .is_none_or(|n| n > MAX_WINDOW_WORDS);
        if max_length > cap || too_big {
            return Err(LangError::CapExceeded {
                requested: max_length,
                cap,
            });
        }
        Ok(Self::build(r, alphabet, max_length))
    }

    fn build(r: &Regex, alphabet: &Alphabet, max_length: usize) -> Window {
        let k = alphabet.len();
        match r {
            Regex::Empty => Window::blank(k, max_length),
            Regex::Eps => {
                let mut w = Window::blank(k, max_length);
                w.bits[0] = true;
                w
            }
            Regex::Lit(c) => {
                let mut w = Window::blank(k, max_length);
                if let (Some(i), true) = (alphabet.index_of(*c), max_length >= 1) {
                    w.bits[1 + i] = true;
                }
                w
            }
            Regex::Alt(l, r) => {
                let mut w = Self::build(l, alphabet, max_length);
                w.union_in_place(&Self::build(r, alphabet, max_length));
                w
            }
            Regex::Cat(l, r) => {
                Self::build(l, alphabet, max_length).concat(&Self::build(r, alphabet, max_length))
            }
            Regex::Star(inner) => Self::build(inner, alphabet, max_length).star(),
        }
    }

    pub fn max_length(&self) -> usize {
        self.max_length
    }

    pub fn contains_index(&self, idx: usize) -> bool {
        self.bits[idx]
    }

    pub fn index_of(&self, w: &Word, alphabet: &Alphabet) -> Option<usize> {
        if w.len() > self.max_length {
            return None;
        }
        let mut code = 0usize;
        for &c in &w.0 {
            code = code * self.k + alphabet.index_of(c)?;
        }
        Some(self.offsets[w.len()] + code)
    }

    pub fn contains(&self, w: &Word, alphabet: &Alphabet) -> bool {
        self.index_of(w, alphabet).is_some_and(|i| self.bits[i])
    }

    fn word_at(&self, idx: usize, alphabet: &Alphabet) -> Word {
        let len = self.len_of(idx);
        let mut code = idx - self.offsets[len];
        let mut v = vec![' '; len];
        for slot in v.iter_mut().rev() {
            *slot = alphabet.symbols()[code % self.k];
            code /= self.k;
        }
        Word(v)
    }

    /// Shortest word in exactly one of the two windows.
    pub fn first_difference(&self, other: &Window, alphabet: &Alphabet) -> Option<Word> {
        (0..self.bits.len())
            .find(|&i| self.bits[i] != other.bits[i])
            .map(|i| self.word_at(i, alphabet))
    }

    /// Words of `self` whose length-bounded products with `other` fall
    /// outside `target`; returns the first offending pair.
    pub fn concat_escapes(
        &self,
        other: &Window,
        target: &Window,
        alphabet: &Alphabet,
    ) -> Option<(Word, Word)> {
        let prod = self.concat(other);
        let bad = (0..prod.bits.len()).find(|&i| prod.bits[i] && !target.bits[i])?;
        // recover a factorisation of the offending word
        let w = prod.word_at(bad, alphabet);
        (0..=w.len()).find_map(|cut| {
            let u = Word(w.0[..cut].to_vec());
            let v = Word(w.0[cut..].to_vec());
            (self.contains(&u, alphabet) && other.contains(&v, alphabet)).then_some((u, v))
        })
    }

    pub fn to_sample(&self, alphabet: &Alphabet) -> LangSample {
        LangSample {
            max_length: self.max_length,
            words: self
                .members()
                .into_iter()
                .map(|i| self.word_at(i, alphabet))
                .collect(),
        }
    }
}

/// The words of `L(r)` of length at most `max_length`.
pub fn enumerate(
    r: &Regex,
    alphabet: &Alphabet,
    max_length: usize,
) -> Result<LangSample, LangError> {
    Ok(Window::of(r, alphabet, max_length)?.to_sample(alphabet))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lang::parse_regex;

    fn words(r: &str, n: usize) -> Vec<String> {
        let ab = Alphabet::default();
        enumerate(&parse_regex(r, &ab).unwrap(), &ab, n)
            .unwrap()
            .words
            .iter()
            .map(|w| w.0.iter().collect())
            .collect()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(words("a*", 3), ["", "a", "aa", "aaa"]);
        assert_eq!(words("a(b|1)", 2), ["a", "ab"]);
        assert_eq!(words("(a|b)*", 2), ["", "a", "aa", "ab", "b", "ba", "bb"]);
        assert!(words("0", 4).is_empty());
        assert_eq!(words("(ab)*", 6), ["", "ab", "abab", "ababab"]);
    }

    #[test]
    fn cap_is_enforced() {
        let ab = Alphabet::default();
        assert_eq!(
            enumerate(&Regex::Eps, &ab, 11),
            Err(LangError::CapExceeded {
                requested: 11,
                cap: 10
            })
        );
        assert!(enumerate(&Regex::Eps, &ab, 10).is_ok());
    }

    #[test]
    fn word_index_roundtrip() {
        let ab = Alphabet::parse("abc").unwrap();
        let w = Window::of(&Regex::Empty, &ab, 4).unwrap();
        for word in ab.words_up_to(4) {
            let i = w.index_of(&word, &ab).unwrap();
            assert_eq!(w.word_at(i, &ab), word);
        }
    }
}
