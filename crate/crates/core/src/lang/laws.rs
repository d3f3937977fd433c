use super::{random_regex, Alphabet, Regex, Window, Word};
use crate::report::{LawReport, LawStatus};
use crate::rig::{Derivation, Rig, SeededRng};

const INSTANCE: &str = "langwindow";

fn window(r: &Regex, alphabet: &Alphabet, max_length: usize) -> Window {
    Window::of(r, alphabet, max_length).expect("window length within cap")
}

fn compare(
    law: &str,
    lhs: &Window,
    rhs: &Window,
    alphabet: &Alphabet,
    context: Vec<String>,
) -> LawReport {
    match lhs.first_difference(rhs, alphabet) {
        None => LawReport::pass(INSTANCE, law, 1),
        Some(w) => {
            let mut cex = context;
            cex.push(format!("word={w}"));
            LawReport::fail(INSTANCE, law, 1, cex)
        }
    }
}

/// `∂_a(rs) = ∂_a(r)·s ∪ γ(r)·∂_a(s)`, compared as language windows.
pub fn check_twisted_leibniz(
    r: &Regex,
    s: &Regex,
    a: char,
    alphabet: &Alphabet,
    max_length: usize,
) -> LawReport {
    let lhs = window(
        &Regex::cat(r.clone(), s.clone()).deriv(a),
        alphabet,
        max_length,
    );
    let mut rhs = window(&Regex::cat(r.deriv(a), s.clone()), alphabet, max_length);
    if r.nullable() {
        rhs.union_in_place(&window(&s.deriv(a), alphabet, max_length));
    }
    compare(
        "twisted-leibniz",
        &lhs,
        &rhs,
        alphabet,
        vec![r.to_string(), s.to_string(), a.to_string()],
    )
}

/// The same rule with `γ` the identity: `∂_a(rs) = ∂_a(r)·s ∪ r·∂_a(s)`.
/// Expected to fail for non-nullable `r`.
pub fn check_untwisted_leibniz(
    r: &Regex,
    s: &Regex,
    a: char,
    alphabet: &Alphabet,
    max_length: usize,
) -> LawReport {
    let lhs = window(
        &Regex::cat(r.clone(), s.clone()).deriv(a),
        alphabet,
        max_length,
    );
    let rhs = window(
        &Regex::alt(
            Regex::cat(r.deriv(a), s.clone()),
            Regex::cat(r.clone(), s.deriv(a)),
        ),
        alphabet,
        max_length,
    );
    compare(
        "untwisted-leibniz",
        &lhs,
        &rhs,
        alphabet,
        vec![r.to_string(), s.to_string(), a.to_string()],
    )
}

/// `∂_a(r ∪ s) = ∂_a r ∪ ∂_a s` and `∂_a ∅ = ∅`.
pub fn check_linearity(
    r: &Regex,
    s: &Regex,
    a: char,
    alphabet: &Alphabet,
    max_length: usize,
) -> LawReport {
    let empty = window(&Regex::Empty, alphabet, max_length);
    let d_empty = window(&Regex::Empty.deriv(a), alphabet, max_length);
    if let Some(w) = d_empty.first_difference(&empty, alphabet) {
        return LawReport::fail(
            INSTANCE,
            "linearity",
            1,
            vec!["0".into(), a.to_string(), format!("word={w}")],
        );
    }
    let lhs = window(
        &Regex::alt(r.clone(), s.clone()).deriv(a),
        alphabet,
        max_length,
    );
    let mut rhs = window(&r.deriv(a), alphabet, max_length);
    rhs.union_in_place(&window(&s.deriv(a), alphabet, max_length));
    compare(
        "linearity",
        &lhs,
        &rhs,
        alphabet,
        vec![r.to_string(), s.to_string(), a.to_string()],
    )
}

/// Right action of a monoid language `M` on its derivative:
/// `L(∂_w M)·L(M) ⊆ L(∂_w M)` within the window.
///
/// Reports `PreconditionUnmet` unless the window of `M` contains `ε` and
/// is closed under length-bounded concatenation.
pub fn check_module_action(
    m: &Regex,
    w: &Word,
    alphabet: &Alphabet,
    max_length: usize,
) -> LawReport {
    let law = "module-action";
    let mw = window(m, alphabet, max_length);
    let closed = mw.concat_escapes(&mw, &mw, alphabet).is_none();
    if !mw.contains(&Word::empty(), alphabet) || !closed {
        return LawReport::with_status(INSTANCE, law, LawStatus::PreconditionUnmet, 0, None);
    }
    let dw = window(&m.deriv_word(w), alphabet, max_length);
    match dw.concat_escapes(&mw, &dw, alphabet) {
        None => LawReport::pass(INSTANCE, law, 1),
        Some((u, v)) => LawReport::fail(
            INSTANCE,
            law,
            1,
            vec![m.to_string(), w.to_string(), u.to_string(), v.to_string()],
        ),
    }
}

/// Regexes modulo agreement on all words up to `max_length`, with union
/// and concatenation. Windows are exact truncations of the true languages,
/// so every rig law and the twisted Leibniz rule hold.
#[derive(Clone, Debug)]
pub struct LangRig {
    pub alphabet: Alphabet,
    pub max_length: usize,
    pub sample_depth: usize,
}

impl LangRig {
    pub fn new(alphabet: Alphabet, max_length: usize) -> Self {
        LangRig {
            alphabet,
            max_length,
            sample_depth: 4,
        }
    }

    /// `∂_a`, twisted by `γ(r) = r ∩ {ε}`.
    pub fn brzozowski(a: char) -> Derivation<Regex> {
        Derivation::new(format!("brzozowski-{a}"), move |r: &Regex| r.deriv(a))
            .twisted(Regex::nullable_part)
    }

    pub fn derivations(&self) -> Vec<Derivation<Regex>> {
        self.alphabet
            .symbols()
            .iter()
            .map(|&a| Self::brzozowski(a))
            .collect()
    }
}

impl Rig for LangRig {
    type Elem = Regex;

    fn name(&self) -> String {
        INSTANCE.into()
    }

    fn sample(&self, rng: &mut SeededRng, size: usize) -> Regex {
        random_regex(rng, &self.alphabet, size.min(self.sample_depth))
    }

    fn equiv(&self, a: &Regex, b: &Regex) -> bool {
        a == b
            || window(a, &self.alphabet, self.max_length)
                == window(b, &self.alphabet, self.max_length)
    }

    fn zero(&self) -> Regex {
        Regex::Empty
    }

    fn one(&self) -> Regex {
        Regex::Eps
    }

    fn add(&self, a: &Regex, b: &Regex) -> Regex {
        Regex::alt(a.clone(), b.clone())
    }

    fn mul(&self, a: &Regex, b: &Regex) -> Regex {
        Regex::cat(a.clone(), b.clone())
    }

    fn render(&self, a: &Regex) -> String {
        a.to_string()
    }
}
