use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use diffrig::lang::{
    build_dfa, check_twisted_leibniz, check_untwisted_leibniz, parse_regex, Alphabet, Regex,
};
use diffrig::lattice::{self, boundary, conot, downsets, DownSet, Poset};
use diffrig::poly::{dpe_check_solution, parse_diffpoly, poly_derive, poly_eval, Poly};
use diffrig::registry::Instance;
use diffrig::report::REPORT_SCHEMA;
use diffrig::rig::instances::{Card, CardinalRig, NatRig};
use diffrig::rig::seeded_rng;
use diffrig::species::{
    check_chain_rule, check_nfold_leibniz, check_power_rule, check_tuple_rule, chi_egf,
    count_structures, parse_species, random_empty_free, random_species, seq_of, CardSeq,
    SpeciesExpr,
};
use diffrig::{LawReport, Rig};
use rand::Rng;
use serde_json::{json, Value};

use crate::{
    Base, Cli, Command, DpeCommand, DpolyCommand, LatticeCommand, PolyCommand, RegexCommand, Rule,
    SpeciesCommand,
};

/// What a command produced. `ok = false` means a law failed or a
/// counterexample was found.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Outcome {
    fn plain(text: impl Into<String>, json: Value) -> Outcome {
        let mut text = text.into();
        text.push('\n');
        Outcome {
            text,
            json,
            ok: true,
        }
    }

    fn report(r: LawReport) -> Outcome {
        Outcome {
            text: format!("{r}\n"),
            ok: r.passed,
            json: serde_json::to_value(&r).expect("reports serialize"),
        }
    }
}

type Res = Result<Outcome, String>;

fn err(e: impl ToString) -> String {
    e.to_string()
}

pub fn run(cli: &Cli) -> Res {
    match &cli.command {
        Command::Laws { instance, alphabet } => laws(cli, instance, alphabet),
        Command::Regex { alphabet, command } => {
            regex(cli, &Alphabet::parse(alphabet).map_err(err)?, command)
        }
        Command::Species { command } => species(cli, command),
        Command::Poly { command } => poly(command),
        Command::Dpoly { command } => dpoly(command),
        Command::Dpe { command } => dpe(command),
        Command::Lattice { command } => lattice_cmd(command),
    }
}

fn laws(cli: &Cli, name: &str, alphabet: &str) -> Res {
    let alphabet = Alphabet::parse(alphabet).map_err(err)?;
    let instance = match name.strip_prefix("downsets:") {
        Some(path) => Instance::DownSets(read_poset(Path::new(path))?),
        None => Instance::parse(name, &alphabet, cli.maxlen).map_err(err)?,
    };
    let out = instance.run(cli.samples as usize, cli.seed);
    let ok = out.all_passed();
    let mut text = String::new();
    for r in &out.reports {
        writeln!(text, "{r}").unwrap();
    }
    for n in &out.notes {
        writeln!(text, "{n}").unwrap();
    }
    let failed = out.reports.iter().filter(|r| !r.passed).count();
    writeln!(
        text,
        "{}: {} reports, {failed} failed",
        out.instance,
        out.reports.len()
    )
    .unwrap();
    let json = json!({
        "schema": REPORT_SCHEMA,
        "instance": out.instance,
        "passed": ok,
        "reports": out.reports,
        "notes": out.notes,
    });
    Ok(Outcome { text, json, ok })
}

fn regex(cli: &Cli, alphabet: &Alphabet, command: &RegexCommand) -> Res {
    let parse = |s: &str| parse_regex(s, alphabet).map_err(err);
    match command {
        RegexCommand::Match { regex, word } => {
            let (r, w) = (parse(regex)?, alphabet.word(word).map_err(err)?);
            let m = r.matches(&w);
            Ok(Outcome::plain(
                m.to_string(),
                json!({"schema": REPORT_SCHEMA, "regex": r.to_string(), "word": word, "matches": m}),
            ))
        }
        RegexCommand::Derive { regex, word } => {
            let (r, w) = (parse(regex)?, alphabet.word(word).map_err(err)?);
            let d = r.deriv_word(&w);
            Ok(Outcome::plain(
                d.to_string(),
                json!({"schema": REPORT_SCHEMA, "regex": r.to_string(), "word": word, "derivative": d.to_string()}),
            ))
        }
        RegexCommand::Dfa { regex, state_cap } => {
            let r = parse(regex)?;
            if *state_cap == 0 {
                return Err("--state-cap must be at least 1".into());
            }
            let dfa = build_dfa(&r, alphabet, *state_cap).map_err(err)?;
            let states: Vec<String> = dfa.states.iter().map(Regex::to_string).collect();
            let json = json!({
                "schema": REPORT_SCHEMA,
                "alphabet": alphabet.symbols().iter().collect::<String>(),
                "states": states,
                "accepting": dfa.accepting,
                "transitions": dfa.transitions,
            });
            Ok(Outcome {
                text: dfa.to_string(),
                json,
                ok: true,
            })
        }
        RegexCommand::Leibniz {
            r,
            s,
            symbol,
            untwisted,
        } => {
            let (r, s) = (parse(r)?, parse(s)?);
            if !alphabet.contains(*symbol) {
                return Err(format!("symbol `{symbol}` is not in the alphabet"));
            }
            let check = if *untwisted {
                check_untwisted_leibniz
            } else {
                check_twisted_leibniz
            };
            Ok(Outcome::report(check(
                &r, &s, *symbol, alphabet, cli.maxlen,
            )))
        }
    }
}

fn strings<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

fn species(cli: &Cli, command: &SpeciesCommand) -> Res {
    let parse = |s: &str| parse_species(s).map_err(err);
    match command {
        SpeciesCommand::Seq { expr, n } => {
            let f = parse(expr)?;
            let seq = seq_of(&f, *n).map_err(err)?;
            Ok(Outcome::plain(
                seq.to_string(),
                json!({"schema": REPORT_SCHEMA, "expr": f.to_string(), "seq": strings(&seq.coeffs)}),
            ))
        }
        SpeciesCommand::Count { expr, size } => {
            let f = parse(expr)?;
            let c = count_structures(&f, *size).map_err(err)?;
            Ok(Outcome::plain(
                c.to_string(),
                json!({"schema": REPORT_SCHEMA, "expr": f.to_string(), "size": size, "count": c.to_string()}),
            ))
        }
        SpeciesCommand::Egf { expr, n } => {
            let f = parse(expr)?;
            let e = chi_egf(&f, *n).map_err(err)?;
            Ok(Outcome::plain(
                e.to_string(),
                json!({"schema": REPORT_SCHEMA, "expr": f.to_string(), "egf": strings(&e.coeffs)}),
            ))
        }
        SpeciesCommand::Check { rule, cases, n } => species_check(cli, *rule, *cases, *n),
    }
}

fn species_check(cli: &Cli, rule: Rule, cases: usize, n: usize) -> Res {
    let mut rng = seeded_rng(cli.seed);
    let mut reports = Vec::with_capacity(cases);
    for _ in 0..cases {
        let r = match rule {
            Rule::Chain => {
                let f = random_species(&mut rng, 3);
                let g = random_empty_free(&mut rng, 3);
                check_chain_rule(&f, &g, n)
            }
            Rule::Power => {
                let f = random_species(&mut rng, 3);
                let k = rng.gen_range(1..=5);
                check_power_rule(&f, k, n)
            }
            Rule::Leibniz => {
                let f = random_species(&mut rng, 3);
                let g = random_species(&mut rng, 3);
                let k = rng.gen_range(1..=3);
                check_nfold_leibniz(&f, &g, k, n)
            }
            Rule::Tuple => {
                let m = rng.gen_range(1..=4);
                let fs: Vec<SpeciesExpr> = (0..m).map(|_| random_species(&mut rng, 3)).collect();
                check_tuple_rule(&fs, n)
            }
        };
        reports.push(r.map_err(err)?);
    }
    let passed = reports.iter().filter(|r| r.passed).count();
    let law = reports
        .first()
        .map_or("none", |r| r.law.as_str())
        .to_string();
    let mut text = String::new();
    for r in reports.iter().filter(|r| !r.passed) {
        writeln!(text, "{r}").unwrap();
    }
    writeln!(text, "{law}: {passed}/{cases} cases pass at N={n}").unwrap();
    let ok = passed == cases;
    let json = json!({"schema": REPORT_SCHEMA, "law": law, "passed": ok, "reports": reports});
    Ok(Outcome { text, json, ok })
}

fn parse_coeffs<E>(
    text: &str,
    parse: impl Fn(&str) -> Result<E, String>,
) -> Result<Vec<E>, String> {
    let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
    if inner.trim().is_empty() {
        return Err("empty coefficient list".into());
    }
    inner.split(',').map(|c| parse(c.trim())).collect()
}

fn parse_nat(s: &str) -> Result<u64, String> {
    s.parse().map_err(|_| format!("bad natural number `{s}`"))
}

fn poly_with<R: Rig>(
    base: R,
    command: &PolyCommand,
    parse: impl Fn(&str) -> Result<R::Elem, String>,
) -> Res {
    let base = Arc::new(base);
    let (coeffs, at) = match command {
        PolyCommand::Derive { coeffs, .. } => (coeffs, None),
        PolyCommand::Eval { coeffs, at, .. } => (coeffs, Some(at)),
    };
    let p = Poly::new(Arc::clone(&base), parse_coeffs(coeffs, &parse)?);
    let render = |q: &Poly<R>| strings(q.coeffs().iter().map(|c| base.render(c)));
    match at {
        None => {
            let d = poly_derive(&p, None);
            Ok(Outcome::plain(
                d.to_string(),
                json!({"schema": REPORT_SCHEMA, "poly": p.to_string(), "derivative": d.to_string(), "coeffs": render(&d)}),
            ))
        }
        Some(at) => {
            let e = parse(at)?;
            let v = poly_eval(&p, |c: &R::Elem| c.clone(), base.as_ref(), &e).map_err(err)?;
            let shown = base.render(&v);
            Ok(Outcome::plain(
                shown.clone(),
                json!({"schema": REPORT_SCHEMA, "poly": p.to_string(), "at": base.render(&e), "value": shown}),
            ))
        }
    }
}

fn poly(command: &PolyCommand) -> Res {
    let base = match command {
        PolyCommand::Derive { base, .. } | PolyCommand::Eval { base, .. } => base.base,
    };
    match base {
        Base::Nat => poly_with(NatRig::new(), command, parse_nat),
        Base::Cardinal => poly_with(CardinalRig::default(), command, |s| s.parse::<Card>()),
    }
}

fn nat_diffpoly(text: &str) -> Result<diffrig::poly::DiffPoly<NatRig>, String> {
    parse_diffpoly(Arc::new(NatRig::new()), text, |t| t.parse().ok()).map_err(err)
}

fn dpoly(command: &DpolyCommand) -> Res {
    let DpolyCommand::Derive { dpoly, times } = command;
    let dp = nat_diffpoly(dpoly)?;
    let d = (0..*times).fold(dp.clone(), |acc, _| acc.derive());
    Ok(Outcome::plain(
        d.to_string(),
        json!({"schema": REPORT_SCHEMA, "dpoly": dp.to_string(), "times": times, "derivative": d.to_string()}),
    ))
}

fn dpe(command: &DpeCommand) -> Res {
    let DpeCommand::Check {
        dpoly,
        candidate,
        n,
    } = command;
    let dp = nat_diffpoly(dpoly)?;
    let seq: CardSeq = candidate.parse()?;
    let order = dp.order().unwrap_or(0) as usize;
    let n = match n {
        Some(n) => *n,
        None => seq
            .truncation()
            .checked_sub(order)
            .ok_or_else(|| format!("candidate needs at least {} coefficients", order + 1))?,
    };
    Ok(Outcome::report(
        dpe_check_solution(&dp, &seq, n).map_err(err)?,
    ))
}

fn read_poset(path: &Path) -> Result<Arc<Poset>, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Poset::parse(&text)
        .map(Arc::new)
        .map_err(|e| format!("{}: {e}", path.display()))
}

fn lattice_cmd(command: &LatticeCommand) -> Res {
    match command {
        LatticeCommand::Boundary { poset, set } => {
            let p = read_poset(poset)?;
            let x = DownSet::from_names(&p, set).map_err(err)?;
            let (c, b) = (conot(&x), boundary(&x));
            let text = format!("set      {x}\nconot    {c}\nboundary {b}");
            Ok(Outcome::plain(
                text,
                json!({"schema": REPORT_SCHEMA, "set": x.to_string(), "conot": c.to_string(), "boundary": b.to_string()}),
            ))
        }
        LatticeCommand::Leibniz { poset } => {
            let p = read_poset(poset)?;
            Ok(Outcome::report(
                lattice::check_leibniz_boundary(&p).map_err(err)?,
            ))
        }
        LatticeCommand::Linearity { poset } => {
            let p = read_poset(poset)?;
            let pairs = downsets(&p).map_err(err)?.len().pow(2);
            match lattice::find_linearity_counterexample(&p).map_err(err)? {
                None => Ok(Outcome::plain(
                    format!("boundary is additive on all {pairs} pairs"),
                    json!({"schema": REPORT_SCHEMA, "pairs": pairs, "counterexample": null}),
                )),
                Some((a, b)) => {
                    let lhs = boundary(&a.join(&b));
                    let rhs = boundary(&a).join(&boundary(&b));
                    let text = format!(
                        "counterexample: a = {a}, b = {b}\nboundary(a ∪ b) = {lhs}\nboundary(a) ∪ boundary(b) = {rhs}\n"
                    );
                    let json = json!({
                        "schema": REPORT_SCHEMA,
                        "pairs": pairs,
                        "counterexample": [a.to_string(), b.to_string()],
                        "lhs": lhs.to_string(),
                        "rhs": rhs.to_string(),
                    });
                    Ok(Outcome {
                        text,
                        json,
                        ok: false,
                    })
                }
            }
        }
    }
}
