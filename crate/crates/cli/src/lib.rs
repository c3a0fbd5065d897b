//! Command dispatch for the `primgen` binary.
//!
//! `run` takes the full argument vector and returns the exit code with the
//! text meant for stdout, so the whole interface can be tested in process.
//! Exit code 0 is success, 1 a usage or parse error, 2 a domain error.

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use primgen_core::closure::{self, in_normal_closure, primitive_for};
use primgen_core::construct::{self, Construction};
use primgen_core::normal_form::{is_primitive, second_normal_form, NormalForm, Reason};
use primgen_core::oracle::{enumerate_basic_preimages, primitive_orbit_up_to};
use primgen_core::palindrome::{conjugate_palindrome_form, helling_form, palindrome_factorization};
use primgen_core::{AutoSeq, Error, ExponentPair, Word};

#[derive(Debug, Parser)]
#[command(
    name = "primgen",
    version,
    about = "Primitive elements of the free group on x, y"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a primitive word with exponent pair (X, Y).
    Construct {
        #[arg(allow_negative_numbers = true)]
        x: i64,
        #[arg(allow_negative_numbers = true)]
        y: i64,
    },
    /// Decide whether a word is primitive.
    IsPrimitive { word: String },
    /// Second normal form of a primitive word.
    NormalForm { word: String },
    /// Write a primitive word as one or two palindromes.
    Palindromes {
        word: String,
        /// Show the form z⁻¹ a w z with w a palindrome instead.
        #[arg(long)]
        conjugate: bool,
    },
    /// Helling's form z y⁻¹ v x z⁻¹ or z x⁻¹ v y z⁻¹.
    Helling { word: String },
    /// Membership of R in the normal closure of the primitive P.
    Ncl {
        r: String,
        p: String,
        /// Print conjugators f with R = ∏ f⁻¹ P^±1 f.
        #[arg(long)]
        certificate: bool,
    },
    /// A primitive whose normal closure contains the word.
    FindPrimitive { word: String },
    /// Apply an automorphism sequence (left to right) to a word.
    Apply { autos: String, word: String },
    /// Run the small exhaustive checks.
    SelfTest,
}

enum Failure {
    Usage(String),
    Domain(Error),
    /// A domain failure whose full text is already formatted.
    Report(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse(_) => Failure::Usage(format!("ERR {}: {e}", e.code())),
            other => Failure::Domain(other),
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    match dispatch(&cli) {
        Ok(mut out) => {
            if !out.ends_with('\n') {
                out.push('\n');
            }
            (0, out)
        }
        Err(Failure::Usage(msg)) => (1, format!("{msg}\n")),
        Err(Failure::Domain(e)) => (2, format!("ERR {}: {e}\n", e.code())),
        Err(Failure::Report(text)) => (2, format!("{text}\n")),
    }
}

fn parse_word(s: &str) -> Result<Word, Failure> {
    s.parse::<Word>().map_err(Failure::from)
}

fn dispatch(cli: &Cli) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Construct { x, y } => cmd_construct(*x, *y, json),
        Command::IsPrimitive { word } => cmd_is_primitive(&parse_word(word)?, json),
        Command::NormalForm { word } => cmd_normal_form(&parse_word(word)?, json),
        Command::Palindromes { word, conjugate } => {
            cmd_palindromes(&parse_word(word)?, *conjugate, json)
        }
        Command::Helling { word } => cmd_helling(&parse_word(word)?, json),
        Command::Ncl { r, p, certificate } => {
            cmd_ncl(&parse_word(r)?, &parse_word(p)?, *certificate, json)
        }
        Command::FindPrimitive { word } => cmd_find_primitive(&parse_word(word)?, json),
        Command::Apply { autos, word } => {
            let seq: AutoSeq = autos.parse().map_err(Failure::from)?;
            cmd_apply(&seq, &parse_word(word)?, json)
        }
        Command::SelfTest => cmd_self_test(json),
    }
}

fn pair_json(p: ExponentPair) -> Value {
    json!([p.x, p.y])
}

fn render(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("json values serialize")
}

fn construction_json(c: &Construction) -> Value {
    let trace = c.trace.as_ref().map(|t| {
        json!({
            "steps": t.steps.iter().map(|s| json!({
                "pair_in": pair_json(s.pair_in),
                "pair_out": pair_json(s.pair_out),
                "n": s.n,
                "branch": s.branch.to_string(),
                "phi": s.phi.to_string(),
            })).collect::<Vec<_>>(),
            "terminal": pair_json(t.terminal),
            "seed": t.seed_word.to_string(),
            "lifting": t.lifting_sequence().to_string(),
        })
    });
    json!({
        "schema": 1,
        "pair": pair_json(c.word.exponent_pair()),
        "word": c.word.to_string(),
        "core_pair": pair_json(c.norm.core_pair),
        "gamma": c.norm.gamma,
        "delta": c.norm.delta,
        "epsilon": c.norm.epsilon,
        "normalization": c.norm.automorphism().to_string(),
        "trace": trace,
    })
}

fn cmd_construct(x: i64, y: i64, json: bool) -> Outcome {
    let c = construct::construct(x, y)?;
    if json {
        Ok(render(construction_json(&c)))
    } else {
        Ok(c.word.to_string())
    }
}

fn reason_code(r: Reason) -> &'static str {
    match r {
        Reason::NotCoprime => "not-coprime",
        Reason::NotConjugateToCanonical => "not-conjugate-to-canonical",
        Reason::Primitive => "primitive",
    }
}

fn normal_form_json(nf: &NormalForm) -> Value {
    json!({
        "phis": nf.phis.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
        "gamma": nf.gamma,
        "delta": nf.delta,
        "epsilon": nf.epsilon,
        "v": nf.v.to_string(),
        "v_tie": nf.v_tie,
        "automorphism": nf.automorphism().to_string(),
    })
}

fn cmd_is_primitive(w: &Word, json: bool) -> Outcome {
    let verdict = is_primitive(w);
    if json {
        return Ok(render(json!({
            "schema": 1,
            "word": w.to_string(),
            "primitive": verdict.primitive,
            "reason": reason_code(verdict.reason),
            "normal_form": verdict.certificate.as_ref().map(normal_form_json),
        })));
    }
    if verdict.primitive {
        Ok("primitive".to_string())
    } else {
        Ok(format!("not-primitive: {}", reason_code(verdict.reason)))
    }
}

fn cmd_normal_form(p: &Word, json: bool) -> Outcome {
    let nf = second_normal_form(p)?;
    if json {
        let mut v = normal_form_json(&nf);
        v["schema"] = json!(1);
        v["word"] = json!(p.to_string());
        return Ok(render(v));
    }
    let phis = AutoSeq::new(nf.phis.clone());
    let flag = |b: bool| u8::from(b);
    let mut out = format!(
        "phis: {phis}\ngamma: {}\ndelta: {}\nepsilon: {}\nv: {}",
        flag(nf.gamma),
        flag(nf.delta),
        flag(nf.epsilon),
        nf.v
    );
    if nf.v_tie {
        out.push_str("\nv-tie: another conjugator of the same length exists");
    }
    Ok(out)
}

fn cmd_palindromes(p: &Word, conjugate: bool, json: bool) -> Outcome {
    if conjugate {
        let f = conjugate_palindrome_form(p)?;
        let verified = f.reassemble() == *p && f.w.is_palindrome();
        let a = f.a.map(|l| l.to_char().to_string());
        if json {
            return Ok(render(json!({
                "schema": 1,
                "word": p.to_string(),
                "z": f.z.to_string(),
                "a": a,
                "w": f.w.to_string(),
                "verified": verified,
            })));
        }
        return Ok(format!(
            "z: {}\na: {}\nw: {}",
            f.z,
            a.unwrap_or_else(|| "1".to_string()),
            f.w
        ));
    }
    let f = palindrome_factorization(p)?;
    let verified = f.product() == *p && f.factors.iter().all(Word::is_palindrome);
    let factors: Vec<String> = f.factors.iter().map(Word::to_string).collect();
    if json {
        return Ok(render(json!({
            "schema": 1,
            "word": p.to_string(),
            "factors": factors,
            "verified": verified,
        })));
    }
    Ok(factors.join(" "))
}

fn cmd_helling(p: &Word, json: bool) -> Outcome {
    let h = helling_form(p)?;
    let verified = h.reassemble() == *p && h.is_valid();
    if json {
        return Ok(render(json!({
            "schema": 1,
            "word": p.to_string(),
            "side": h.side.to_string(),
            "z": h.z.to_string(),
            "v": h.v.to_string(),
            "verified": verified,
        })));
    }
    Ok(format!("side: {}\nz: {}\nv: {}", h.side, h.z, h.v))
}

fn sign_str(s: i64) -> &'static str {
    if s > 0 {
        "+1"
    } else {
        "-1"
    }
}

fn cmd_ncl(r: &Word, p: &Word, with_certificate: bool, json: bool) -> Outcome {
    let member = in_normal_closure(r, p)?;
    if !with_certificate {
        if json {
            return Ok(render(json!({
                "schema": 1,
                "r": r.to_string(),
                "p": p.to_string(),
                "member": member,
            })));
        }
        return Ok(member.to_string());
    }
    let cert = closure::certificate(r, p)?;
    let verified = cert.reassemble() == *r;
    if json {
        return Ok(render(json!({
            "schema": 1,
            "r": r.to_string(),
            "p": p.to_string(),
            "member": true,
            "certificate": cert.conjugators.iter().map(|(f, s)| json!({
                "f": f.to_string(),
                "sign": s,
            })).collect::<Vec<_>>(),
            "verified": verified,
        })));
    }
    let mut lines = vec!["true".to_string()];
    lines.extend(
        cert.conjugators
            .iter()
            .map(|(f, s)| format!("{} {f}", sign_str(*s))),
    );
    Ok(lines.join("\n"))
}

fn cmd_find_primitive(r: &Word, json: bool) -> Outcome {
    let pf = primitive_for(r);
    if json {
        return Ok(render(json!({
            "schema": 1,
            "r": r.to_string(),
            "p": pf.p.to_string(),
            "k": pf.k,
            "all_primitives_contain": pf.all_primitives_contain,
        })));
    }
    if pf.all_primitives_contain {
        Ok(format!("{} {} all-primitives-contain", pf.p, pf.k))
    } else {
        Ok(format!("{} {}", pf.p, pf.k))
    }
}

fn cmd_apply(seq: &AutoSeq, w: &Word, json: bool) -> Outcome {
    let image = seq.apply(w);
    if json {
        return Ok(render(json!({
            "schema": 1,
            "autos": seq.to_string(),
            "word": w.to_string(),
            "image": image.to_string(),
        })));
    }
    Ok(image.to_string())
}

fn self_test_checks() -> Vec<(&'static str, bool)> {
    let mut checks = Vec::new();

    let orbit = primitive_orbit_up_to(6).expect("bound is within the guard");
    let decision = Word::all_up_to(6)
        .iter()
        .all(|w| is_primitive(w).primitive == orbit.contains(w));
    checks.push(("primitivity-vs-orbit-6", decision));

    let mut sweep = true;
    let mut forms = true;
    for x in -12i64..=12 {
        for y in -12i64..=12 {
            if primgen_core::word::gcd(x, y) != 1 {
                continue;
            }
            let p = construct::canonical_primitive(x, y).expect("pair is coprime");
            sweep &= p.exponent_pair() == ExponentPair::new(x, y);
            let conj = p.conjugate_by(&"xY".parse().expect("literal parses"));
            for q in [&p, &conj] {
                forms &= second_normal_form(q)
                    .map(|nf| nf.reconstruct() == *q)
                    .unwrap_or(false);
                forms &= palindrome_factorization(q)
                    .map(|f| f.product() == *q)
                    .unwrap_or(false);
                forms &= helling_form(q)
                    .map(|h| h.reassemble() == *q)
                    .unwrap_or(false);
            }
        }
    }
    checks.push(("construct-sweep-12", sweep));
    checks.push(("normal-forms-12", forms));

    let mut unique = true;
    for x in 2..=30i64 {
        for y in (x + 1)..=30 {
            if primgen_core::word::gcd(x, y) == 1 {
                unique &= enumerate_basic_preimages(x, y)
                    .map(|v| v.len() == 1)
                    .unwrap_or(false);
            }
        }
    }
    checks.push(("unique-predecessor-30", unique));

    let mut certs = true;
    for p in ["y", "xy", "xyy", "xyyxy"] {
        let p: Word = p.parse().expect("literal parses");
        for r in Word::all_up_to(4) {
            if in_normal_closure(&r, &p).unwrap_or(false) {
                certs &= closure::certificate(&r, &p)
                    .map(|c| c.reassemble() == r)
                    .unwrap_or(false);
            }
        }
    }
    checks.push(("ncl-certificates-4", certs));
    checks
}

fn cmd_self_test(json: bool) -> Outcome {
    let checks = self_test_checks();
    let all = checks.iter().all(|(_, ok)| *ok);
    let out = if json {
        render(json!({
            "schema": 1,
            "passed": all,
            "checks": checks.iter().map(|(name, ok)| json!({"name": name, "ok": ok})).collect::<Vec<_>>(),
        }))
    } else {
        checks
            .iter()
            .map(|(name, ok)| format!("{} {name}", if *ok { "ok" } else { "FAIL" }))
            .collect::<Vec<_>>()
            .join("\n")
    };
    if all {
        Ok(out)
    } else {
        Err(Failure::Report(out))
    }
}
