use std::process::ExitCode;
use std::sync::Arc;

use braidqp::conjugacy::{
    are_conjugate, cycling_orbit, decycling_orbit, sliding_circuits, slide_to_circuit,
    SearchLimits,
};
use braidqp::qp3::{qp3_with_budget, raw_pa_form, reduce, DEFAULT_NODE_BUDGET};
use braidqp::recognition::{
    default_recognizer, recognize_with, recognizer_by_name, RecognitionQuery, RecognitionResult,
    Witness, RECOGNIZER_NAMES,
};
use braidqp::words::{strands_mentioned, Letter};
use braidqp::{
    parse_word, structure_by_name, BraidError, BraidWord, GarsideStructure, NormalForm, Perm,
};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "braidqp", version, about = "Garside normal forms, sliding circuits and quasipositivity recognition for braids")]
struct Cli {
    #[command(flatten)]
    opts: GlobalOpts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GlobalOpts {
    /// Garside structure: standard (artin) or dual (bkl).
    #[arg(long, global = true, default_value = "standard")]
    structure: String,
    /// Number of strands; inferred from the words when omitted.
    #[arg(short = 'n', long = "strands", global = true)]
    strands: Option<usize>,
    /// Emit JSON on stdout.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on the size of a set of sliding circuits.
    #[arg(long, global = true, env = "BRAIDQP_MAX_SC", default_value_t = 100_000)]
    max_sc: usize,
    /// Cap on orbit and sliding trajectory lengths.
    #[arg(long, global = true, env = "BRAIDQP_MAX_ORBIT", default_value_t = 1_000_000)]
    max_orbit: usize,
    /// Worker threads for sliding circuit expansion.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Left normal form.
    Nf {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Summit inf, sup and canonical length.
    Invariants {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Set of sliding circuits and its orbit decomposition.
    Sc {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Print every element.
        #[arg(long)]
        list: bool,
    },
    /// Cycling (or decycling) orbit of the circuit element reached by sliding.
    Orbit {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        decycling: bool,
    },
    /// Conjugacy test with a conjugating element.
    Conjugate {
        #[arg(allow_hyphen_values = true)]
        first: String,
        #[arg(allow_hyphen_values = true)]
        second: String,
    },
    /// Decide membership in (x^k)^G or (x^k)^G (y^l)^G.
    Recognize {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Atom x, as a one-letter word.
        #[arg(short = 'x', long, default_value = "1")]
        x: String,
        #[arg(short = 'k', long, default_value_t = 1)]
        k: usize,
        /// Atom y, as a one-letter word.
        #[arg(short = 'y', long)]
        y: Option<String>,
        /// Exponent of y; defaults to 1 when y is given.
        #[arg(short = 'l', long)]
        l: Option<usize>,
        /// Search strategy: orbit-walk or full-sc.
        #[arg(long)]
        strategy: Option<String>,
        /// Re-multiply the witness and check it against the input.
        #[arg(long)]
        verify: bool,
    },
    /// Quasipositivity of a 3-braid.
    Qp3 {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Cap on recursion nodes of the solver.
        #[arg(long, env = "BRAIDQP_MAX_NODES", default_value_t = DEFAULT_NODE_BUDGET)]
        max_nodes: u64,
    },
}

enum Failure {
    Engine(BraidError),
    Usage(String),
    Internal(String),
}

impl From<BraidError> for Failure {
    fn from(e: BraidError) -> Self {
        Failure::Engine(e)
    }
}

type Run = Result<(Value, String), Failure>;

struct Ctx {
    g: Arc<dyn GarsideStructure>,
    limits: SearchLimits,
}

impl Ctx {
    fn new(opts: &GlobalOpts, words: &[&str], default_n: Option<usize>) -> Result<Ctx, Failure> {
        let n = opts
            .strands
            .or(default_n)
            .unwrap_or_else(|| words.iter().map(|w| strands_mentioned(w)).max().unwrap_or(2));
        let g = structure_by_name(&opts.structure, n)?;
        let limits = SearchLimits { max_sc: opts.max_sc, max_orbit: opts.max_orbit, threads: opts.threads.max(1) };
        Ok(Ctx { g, limits })
    }

    fn g(&self) -> &dyn GarsideStructure {
        &*self.g
    }

    fn parse(&self, text: &str) -> Result<NormalForm, Failure> {
        Ok(NormalForm::from_word(self.g(), &parse_word(text, self.g())?))
    }

    fn atom(&self, text: &str) -> Result<usize, Failure> {
        let w = parse_word(text, self.g())?;
        match w.letters.as_slice() {
            [l] if !l.inverse && w.garside_power == 0 => Ok(l.atom),
            _ => Err(Failure::Usage(format!("{text:?} is not a single atom"))),
        }
    }

    fn atom_name(&self, i: usize) -> String {
        BraidWord::from_letters(self.g.id(), vec![Letter::pos(i)]).text()
    }

    fn simple_text(&self, s: &Perm) -> String {
        if s.is_identity() {
            return "1".into();
        }
        let letters = self.g.simple_atoms(s).into_iter().map(Letter::pos).collect();
        BraidWord::from_letters(self.g.id(), letters).text()
    }

    fn nf_json(&self, x: &NormalForm) -> Value {
        json!({
            "inf": x.inf,
            "sup": x.sup(),
            "length": x.len(),
            "factors": x.factors.iter().map(|f| self.simple_text(f)).collect::<Vec<_>>(),
            "word": x.to_word(self.g()).text(),
        })
    }
}

fn header(ctx: &Ctx) -> String {
    format!("structure: {} on {} strands", ctx.g.kind().name(), ctx.g.strands())
}

fn cmd_nf(ctx: &Ctx, word: &str) -> Run {
    let x = ctx.parse(word)?;
    let text = format!(
        "{}\nnormal form: {}\ninf = {}, sup = {}, length = {}\nexponent sum = {}",
        header(ctx),
        x.display(ctx.g()),
        x.inf,
        x.sup(),
        x.len(),
        x.algebraic_length(ctx.g())
    );
    let mut v = ctx.nf_json(&x);
    v["structure"] = json!(ctx.g.kind().name());
    v["strands"] = json!(ctx.g.strands());
    v["exponent_sum"] = json!(x.algebraic_length(ctx.g()));
    Ok((v, text))
}

fn cmd_invariants(ctx: &Ctx, word: &str) -> Run {
    let x = ctx.parse(word)?;
    let (xt, c) = slide_to_circuit(ctx.g(), &x, &ctx.limits)?;
    let text = format!(
        "{}\ninf_s = {}\nsup_s = {}\nell_s = {}\nexponent sum = {}\ncircuit element: {}",
        header(ctx),
        xt.inf,
        xt.sup(),
        xt.len(),
        x.algebraic_length(ctx.g()),
        xt.display(ctx.g())
    );
    let v = json!({
        "structure": ctx.g.kind().name(),
        "strands": ctx.g.strands(),
        "inf_s": xt.inf,
        "sup_s": xt.sup(),
        "ell_s": xt.len(),
        "exponent_sum": x.algebraic_length(ctx.g()),
        "circuit_element": ctx.nf_json(&xt),
        "conjugator": c.to_word(ctx.g()).text(),
    });
    Ok((v, text))
}

fn cmd_sc(ctx: &Ctx, word: &str, list: bool) -> Run {
    let x = ctx.parse(word)?;
    let sc = sliding_circuits(ctx.g(), &x, &ctx.limits)?;
    let cyc = sc.cycling_orbits(ctx.g())?;
    let dec = sc.decycling_orbits(ctx.g())?;
    let sizes = |o: &[Vec<usize>]| o.iter().map(|v| v.len()).collect::<Vec<_>>();
    let mut text = format!(
        "{}\ninf_s = {}, sup_s = {}, ell_s = {}\n|SC| = {}\ncycling orbit sizes: {:?}\ndecycling orbit sizes: {:?}\narrows: {}",
        header(ctx),
        sc.inf_s(),
        sc.sup_s(),
        sc.ell_s(),
        sc.len(),
        sizes(&cyc),
        sizes(&dec),
        sc.arrows.len()
    );
    let mut v = json!({
        "structure": ctx.g.kind().name(),
        "strands": ctx.g.strands(),
        "inf_s": sc.inf_s(),
        "sup_s": sc.sup_s(),
        "ell_s": sc.ell_s(),
        "sc_size": sc.len(),
        "orbit_sizes": sizes(&cyc),
        "decycling_orbit_sizes": sizes(&dec),
        "arrows": sc.arrows.len(),
    });
    if list {
        let elems: Vec<Value> = sc.elements.iter().map(|z| ctx.nf_json(z)).collect();
        for (i, z) in sc.elements.iter().enumerate() {
            text.push_str(&format!("\n[{i}] {}", z.display(ctx.g())));
        }
        v["elements"] = Value::Array(elems);
    }
    Ok((v, text))
}

fn cmd_orbit(ctx: &Ctx, word: &str, decycling: bool) -> Run {
    let x = ctx.parse(word)?;
    let (xt, _) = slide_to_circuit(ctx.g(), &x, &ctx.limits)?;
    let orbit = if decycling {
        decycling_orbit(ctx.g(), &xt, &ctx.limits)?
    } else {
        cycling_orbit(ctx.g(), &xt, &ctx.limits)?
    };
    let kind = if decycling { "decycling" } else { "cycling" };
    let mut text = format!("{}\n{kind} orbit of size {}", header(ctx), orbit.len());
    for (i, z) in orbit.iter().enumerate() {
        text.push_str(&format!("\n[{i}] {}", z.display(ctx.g())));
    }
    let v = json!({
        "structure": ctx.g.kind().name(),
        "strands": ctx.g.strands(),
        "kind": kind,
        "inf_s": xt.inf,
        "sup_s": xt.sup(),
        "ell_s": xt.len(),
        "orbit_sizes": [orbit.len()],
        "elements": orbit.iter().map(|z| ctx.nf_json(z)).collect::<Vec<_>>(),
    });
    Ok((v, text))
}

fn cmd_conjugate(ctx: &Ctx, first: &str, second: &str) -> Run {
    let x = ctx.parse(first)?;
    let y = ctx.parse(second)?;
    let w = are_conjugate(ctx.g(), &x, &y, &ctx.limits)?;
    if let Some(c) = &w {
        if x.conjugate(ctx.g(), c) != y {
            return Err(Failure::Internal("conjugating element does not check out".into()));
        }
    }
    let text = match &w {
        Some(c) => format!("{}\nconjugate: yes\nconjugator: {}", header(ctx), c.display(ctx.g())),
        None => format!("{}\nconjugate: no", header(ctx)),
    };
    let v = json!({
        "structure": ctx.g.kind().name(),
        "strands": ctx.g.strands(),
        "verdict": w.is_some(),
        "conjugator": w.as_ref().map(|c| c.to_word(ctx.g()).text()),
    });
    Ok((v, text))
}

fn witness_json(ctx: &Ctx, w: &Witness) -> Value {
    json!({
        "n": w.n,
        "x1": ctx.atom_name(w.x1),
        "y1": w.y1.map(|y| ctx.atom_name(y)),
        "a": w.a.iter().map(|s| ctx.simple_text(s)).collect::<Vec<_>>(),
        "b": w.b.iter().map(|s| ctx.simple_text(s)).collect::<Vec<_>>(),
        "element": ctx.nf_json(&w.element),
        "conjugator": w.conjugator.to_word(ctx.g()).text(),
        "position": w.position,
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_recognize(
    ctx: &Ctx,
    word: &str,
    x: &str,
    k: usize,
    y: Option<&str>,
    l: Option<usize>,
    strategy: Option<&str>,
    verify: bool,
) -> Run {
    let input = ctx.parse(word)?;
    let xa = ctx.atom(x)?;
    let query = match y {
        Some(y) => RecognitionQuery::pair(xa, k, ctx.atom(y)?, l.unwrap_or(1))?,
        None if l.is_some() => return Err(Failure::Usage("-l needs -y".into())),
        None => RecognitionQuery::single(xa, k)?,
    };
    let strat = match strategy {
        Some(name) => recognizer_by_name(name).ok_or_else(|| {
            Failure::Usage(format!("unknown strategy {name:?} (known: {})", RECOGNIZER_NAMES.join(", ")))
        })?,
        None => default_recognizer(ctx.g.kind()),
    };
    let r: RecognitionResult = recognize_with(ctx.g(), &*strat, &input, &query, &ctx.limits)?;
    let verified = if verify {
        let ok = r.witness.as_ref().map(|w| w.verify(ctx.g(), &input, &query));
        if ok == Some(false) {
            return Err(Failure::Internal("witness failed verification".into()));
        }
        ok
    } else {
        None
    };
    let target = match (y, query.l) {
        (Some(y), Some(l)) => format!("({x}^{k})^G ({y}^{l})^G"),
        _ => format!("({x}^{k})^G"),
    };
    let mut text = format!(
        "{}\nquery: X in {target}\nverdict: {}\ndecided by: {}",
        header(ctx),
        if r.verdict { "YES" } else { "NO" },
        r.decided_by
    );
    if let (Some(i), Some(s), Some(e)) = (r.inf_s, r.sup_s, r.ell_s) {
        text.push_str(&format!("\ninf_s = {i}, sup_s = {s}, ell_s = {e}"));
    }
    if let Some(n) = r.sc_size {
        text.push_str(&format!("\n|SC| = {n}"));
    }
    if let Some(n) = r.orbit_size {
        text.push_str(&format!("\norbit size = {n}"));
    }
    if let Some(w) = &r.witness {
        text.push_str(&format!(
            "\nwitness: n = {}, x1 = {}{}\n  A = [{}]\n  B = [{}]\n  element: {}\n  conjugator: {}",
            w.n,
            ctx.atom_name(w.x1),
            w.y1.map(|y| format!(", y1 = {}", ctx.atom_name(y))).unwrap_or_default(),
            w.a.iter().map(|s| ctx.simple_text(s)).collect::<Vec<_>>().join(" | "),
            w.b.iter().map(|s| ctx.simple_text(s)).collect::<Vec<_>>().join(" | "),
            w.element.display(ctx.g()),
            w.conjugator.display(ctx.g()),
        ));
    }
    if let Some(ok) = verified {
        text.push_str(&format!("\nwitness verified: {ok}"));
    }
    let v = json!({
        "structure": ctx.g.kind().name(),
        "strands": ctx.g.strands(),
        "strategy": strat.name(),
        "verdict": r.verdict,
        "decided_by": r.decided_by.to_string(),
        "witness": r.witness.as_ref().map(|w| witness_json(ctx, w)),
        "verified": verified,
        "inf_s": r.inf_s,
        "sup_s": r.sup_s,
        "ell_s": r.ell_s,
        "sc_size": r.sc_size,
        "orbit_sizes": r.orbit_size.map(|n| vec![n]),
    });
    Ok((v, text))
}

fn cmd_qp3(ctx: &Ctx, word: &str, max_nodes: u64) -> Run {
    if ctx.g.strands() != 3 || ctx.g.kind() != braidqp::StructureKind::Standard {
        return Err(Failure::Usage("qp3 needs the standard structure on 3 strands".into()));
    }
    let x = ctx.parse(word)?;
    let (raw, _) = raw_pa_form(ctx.g(), &x)?;
    let red = reduce(&raw);
    let verdict = qp3_with_budget(&raw, max_nodes)?;
    let text = format!(
        "exponent sum = {}\nreduced encoding: p = {}, a = {:?}\nquasipositive: {verdict}",
        x.algebraic_length(ctx.g()),
        red.p,
        red.a
    );
    let v = json!({
        "verdict": verdict,
        "quasipositive": verdict,
        "exponent_sum": x.algebraic_length(ctx.g()),
        "p": red.p,
        "a": red.a,
    });
    Ok((v, text))
}

fn run(cli: &Cli) -> Run {
    let o = &cli.opts;
    match &cli.command {
        Command::Nf { word } => cmd_nf(&Ctx::new(o, &[word], None)?, word),
        Command::Invariants { word } => cmd_invariants(&Ctx::new(o, &[word], None)?, word),
        Command::Sc { word, list } => cmd_sc(&Ctx::new(o, &[word], None)?, word, *list),
        Command::Orbit { word, decycling } => cmd_orbit(&Ctx::new(o, &[word], None)?, word, *decycling),
        Command::Conjugate { first, second } => {
            cmd_conjugate(&Ctx::new(o, &[first, second], None)?, first, second)
        }
        Command::Recognize { word, x, k, y, l, strategy, verify } => {
            let mut words = vec![word.as_str(), x.as_str()];
            words.extend(y.as_deref());
            cmd_recognize(
                &Ctx::new(o, &words, None)?,
                word,
                x,
                *k,
                y.as_deref(),
                *l,
                strategy.as_deref(),
                *verify,
            )
        }
        Command::Qp3 { word, max_nodes } => cmd_qp3(&Ctx::new(o, &[word], Some(3))?, word, *max_nodes),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((v, text)) => {
            if cli.opts.json {
                println!("{}", serde_json::to_string_pretty(&v).expect("serializable report"));
            } else {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(f) => {
            let (code, msg) = match f {
                Failure::Engine(e @ BraidError::ResourceLimit { .. }) => (3, e.to_string()),
                Failure::Engine(e) => (2, e.to_string()),
                Failure::Usage(m) => (2, m),
                Failure::Internal(m) => (1, m),
            };
            eprintln!("braidqp: {msg}");
            ExitCode::from(code)
        }
    }
}
