//! Job documents: the structured-text input format of the command-line
//! tool.
//!
//! A job is a TOML document. Every numeric coefficient is an exact
//! string; floats are rejected. Coefficient entries follow the grammar
//!
//! ```text
//! entry  := ['-'] term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := rational | 'sqrt(d)' | 't' ['^' uint]
//! rational := integer ['/' positive-integer]
//! ```
//!
//! so `"1/3"`, `"2*sqrt(d)"`, and `"t^2 - 4"` are all valid entries.
//! `sqrt(d)` refers to the optional top-level radicand key `d`; `t` is
//! the unknown parameter of `conditions` jobs.

use num::traits::Zero;
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Poly, QuadExt, Rational};
use crate::ode::OdeSpec;

pub const FORMAT_VERSION: u32 = 1;

/// The command a job asks for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Classify,
    Solve,
    Conditions,
    Scan,
    Scheffe,
    Demo,
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Classify => "classify",
            Command::Solve => "solve",
            Command::Conditions => "conditions",
            Command::Scan => "scan",
            Command::Scheffe => "scheffe",
            Command::Demo => "demo",
        }
    }

    fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "classify" => Command::Classify,
            "solve" => Command::Solve,
            "conditions" => Command::Conditions,
            "scan" => Command::Scan,
            "scheffe" => Command::Scheffe,
            "demo" => Command::Demo,
            other => {
                return Err(Error::Parse(format!(
                    "field `command`: unknown command {other:?}"
                )))
            }
        })
    }
}

/// Built-in case studies runnable without a job file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DemoName {
    Heun,
    Dirac,
    Invsqrt,
    CauchyEuler,
    Hermite,
}

impl DemoName {
    pub fn name(&self) -> &'static str {
        match self {
            DemoName::Heun => "heun",
            DemoName::Dirac => "dirac",
            DemoName::Invsqrt => "invsqrt",
            DemoName::CauchyEuler => "cauchy_euler",
            DemoName::Hermite => "hermite",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Ok(match name {
            "heun" => DemoName::Heun,
            "dirac" => DemoName::Dirac,
            "invsqrt" => DemoName::Invsqrt,
            "cauchy_euler" => DemoName::CauchyEuler,
            "hermite" => DemoName::Hermite,
            other => {
                return Err(Error::Parse(format!(
                    "field `demo.name`: unknown demo {other:?} (expected heun, dirac, \
                     invsqrt, cauchy_euler, or hermite)"
                )))
            }
        })
    }
}

/// Equation coefficients as parsed from a job: polynomials in t over
/// Q(sqrt(d)). Degree zero throughout means a concrete equation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecInput {
    pub n: usize,
    pub d: Rational,
    pub alpha: Vec<Poly>,
    pub beta: Vec<Poly>,
    pub tau: Vec<Poly>,
}

impl SpecInput {
    pub fn is_parametric(&self) -> bool {
        self.alpha
            .iter()
            .chain(&self.beta)
            .chain(&self.tau)
            .any(|p| p.degree() > Some(0))
    }

    /// Concrete equation spec; errors if any entry still involves t.
    pub fn to_ode_spec(&self) -> Result<OdeSpec> {
        if self.is_parametric() {
            return Err(Error::Parse(
                "spec contains the unknown t; this command needs concrete coefficients".into(),
            ));
        }
        let scalar = |p: &Poly| p.coeff(0);
        OdeSpec::new(
            self.alpha.iter().map(scalar).collect(),
            self.beta.iter().map(scalar).collect(),
            self.tau.iter().map(scalar).collect(),
        )
    }

    pub fn to_param_spec(&self) -> Result<crate::conditions::ParamOdeSpec> {
        crate::conditions::ParamOdeSpec::new(
            self.alpha.clone(),
            self.beta.clone(),
            self.tau.clone(),
        )
    }
}

/// A fully validated job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobConfig {
    pub format_version: u32,
    pub command: Command,
    pub spec: Option<SpecInput>,
    pub m: Option<usize>,
    pub m_max: Option<usize>,
    pub s: Option<QuadExt>,
    pub demo: Option<DemoName>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJob {
    format_version: Option<u32>,
    command: Option<String>,
    /// Radicand for `sqrt(d)` entries; alias for `spec.d`.
    d: Option<String>,
    spec: Option<RawSpec>,
    m: Option<i64>,
    m_max: Option<i64>,
    s: Option<String>,
    demo: Option<RawDemo>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    n: i64,
    d: Option<String>,
    alpha: Vec<String>,
    beta: Vec<String>,
    tau: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDemo {
    name: String,
}

/// Parse and validate a job document. The `command` key must be present;
/// use [`parse_job_with_command`] when the command arrives externally.
pub fn parse_job(input: &[u8]) -> Result<JobConfig> {
    parse_impl(input, None)
}

/// Parse a job document, supplying the command (a document-level
/// `command` key, if present, must agree).
pub fn parse_job_with_command(input: &[u8], command: Command) -> Result<JobConfig> {
    parse_impl(input, Some(command))
}

fn parse_impl(input: &[u8], external: Option<Command>) -> Result<JobConfig> {
    let text = std::str::from_utf8(input)
        .map_err(|_| Error::Parse("job document is not valid UTF-8".into()))?;
    let raw: RawJob =
        toml::from_str(text).map_err(|e| Error::Parse(e.to_string().trim().to_string()))?;

    let format_version = raw.format_version.unwrap_or(FORMAT_VERSION);
    if format_version != FORMAT_VERSION {
        return Err(Error::Parse(format!(
            "field `format_version`: unsupported version {format_version} (expected {FORMAT_VERSION})"
        )));
    }
    let command = match (&raw.command, external) {
        (Some(name), None) => Command::from_name(name)?,
        (None, Some(cmd)) => cmd,
        (Some(name), Some(cmd)) => {
            let named = Command::from_name(name)?;
            if named != cmd {
                return Err(Error::Parse(format!(
                    "field `command`: document says {:?} but the invocation asks for {:?}",
                    named.name(),
                    cmd.name()
                )));
            }
            named
        }
        (None, None) => {
            return Err(Error::Parse("field `command`: missing".into()));
        }
    };

    let spec = raw
        .spec
        .map(|mut s| {
            match (&s.d, &raw.d) {
                (Some(a), Some(b)) if a != b => {
                    return Err(Error::Parse(
                        "field `d`: given both top-level and in [spec] with different values"
                            .into(),
                    ))
                }
                (None, Some(b)) => s.d = Some(b.clone()),
                _ => {}
            }
            parse_spec(&s)
        })
        .transpose()?;
    let m = raw
        .m
        .map(|v| usize::try_from(v).map_err(|_| Error::Parse("field `m`: must be >= 0".into())))
        .transpose()?;
    let m_max = raw
        .m_max
        .map(|v| usize::try_from(v).map_err(|_| Error::Parse("field `m_max`: must be >= 0".into())))
        .transpose()?;
    let d_context = spec.as_ref().map(|s| s.d.clone()).unwrap_or_else(zero_rat);
    let s = raw
        .s
        .map(|text| {
            let poly = parse_entry(&text, &d_context)
                .map_err(|e| Error::Parse(format!("field `s`: {e}")))?;
            if poly.degree() > Some(0) {
                return Err(Error::Parse("field `s`: must not involve t".into()));
            }
            Ok(poly.coeff(0))
        })
        .transpose()?;
    let demo = raw.demo.map(|d| DemoName::from_name(&d.name)).transpose()?;

    let config = JobConfig {
        format_version,
        command,
        spec,
        m,
        m_max,
        s,
        demo,
    };
    validate(&config)?;
    Ok(config)
}

fn zero_rat() -> Rational {
    num::traits::Zero::zero()
}

fn parse_spec(raw: &RawSpec) -> Result<SpecInput> {
    let n = usize::try_from(raw.n)
        .ok()
        .filter(|&n| n >= 2)
        .ok_or_else(|| Error::Parse("field `spec.n`: must be an integer >= 2".into()))?;
    let d = match &raw.d {
        Some(text) => parse_rational(text)
            .ok_or_else(|| Error::Parse(format!("field `spec.d`: invalid rational {text:?}")))?,
        None => zero_rat(),
    };
    if d < zero_rat() {
        return Err(Error::Parse(
            "field `spec.d`: the radicand must be >= 0".into(),
        ));
    }
    let parse_vec = |field: &str, entries: &[String], want: usize| -> Result<Vec<Poly>> {
        if entries.len() != want {
            return Err(Error::Parse(format!(
                "field `spec.{field}`: expected {want} entries for n = {n}, got {}",
                entries.len()
            )));
        }
        entries
            .iter()
            .enumerate()
            .map(|(i, e)| {
                parse_entry(e, &d)
                    .map_err(|err| Error::Parse(format!("field `spec.{field}[{i}]`: {err}")))
            })
            .collect()
    };
    Ok(SpecInput {
        n,
        d: d.clone(),
        alpha: parse_vec("alpha", &raw.alpha, n + 1)?,
        beta: parse_vec("beta", &raw.beta, n)?,
        tau: parse_vec("tau", &raw.tau, n - 1)?,
    })
}

fn validate(config: &JobConfig) -> Result<()> {
    let need_spec = |cmd: &str| {
        config
            .spec
            .as_ref()
            .ok_or_else(|| Error::Parse(format!("command {cmd} requires a [spec] table")))
    };
    match config.command {
        Command::Classify | Command::Scheffe => {
            need_spec(config.command.name())?;
        }
        Command::Solve => {
            need_spec("solve")?;
            if config.m.is_none() {
                return Err(Error::Parse("command solve requires `m`".into()));
            }
        }
        Command::Scan => {
            need_spec("scan")?;
            if config.m_max.is_none() {
                return Err(Error::Parse("command scan requires `m_max`".into()));
            }
        }
        Command::Conditions => {
            let spec = need_spec("conditions")?;
            if config.m.is_none() {
                return Err(Error::Parse("command conditions requires `m`".into()));
            }
            if !spec.is_parametric() {
                return Err(Error::Parse(
                    "command conditions requires at least one coefficient involving t".into(),
                ));
            }
        }
        Command::Demo => {
            if config.demo.is_none() {
                return Err(Error::Parse("command demo requires [demo] name".into()));
            }
        }
    }
    Ok(())
}

// ---- entry grammar ----

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Number(Rational),
    Sqrt,
    T,
    Caret,
    Star,
    Plus,
    Minus,
}

fn lex_entry(text: &str) -> std::result::Result<Vec<Token>, String> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            't' => {
                tokens.push(Token::T);
                i += 1;
            }
            's' => {
                let rest = &text[i..];
                if let Some(stripped) = rest.strip_prefix("sqrt(d)") {
                    let _ = stripped;
                    tokens.push(Token::Sqrt);
                    i += "sqrt(d)".len();
                } else {
                    return Err(format!("unexpected token at {:?}", &text[i..]));
                }
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i < bytes.len() && bytes[i] == b'/' {
                    i += 1;
                    let den_start = i;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                    if i == den_start {
                        return Err("missing denominator digits".into());
                    }
                }
                let lit = &text[start..i];
                let value = parse_rational(lit)
                    .ok_or_else(|| format!("invalid rational literal {lit:?}"))?;
                tokens.push(Token::Number(value));
            }
            other => return Err(format!("unexpected character {other:?}")),
        }
    }
    Ok(tokens)
}

/// Parse one coefficient entry into a polynomial in t over Q(sqrt(d)).
pub fn parse_entry(text: &str, d: &Rational) -> std::result::Result<Poly, String> {
    let tokens = lex_entry(text)?;
    if tokens.is_empty() {
        return Err("empty entry".into());
    }
    let mut pos = 0usize;
    let mut acc = Poly::zero();
    let mut negate = match tokens[0] {
        Token::Minus => {
            pos = 1;
            true
        }
        Token::Plus => {
            pos = 1;
            false
        }
        _ => false,
    };
    loop {
        let (term, next) = parse_term(&tokens, pos, d)?;
        acc = if negate { &acc - &term } else { &acc + &term };
        pos = next;
        match tokens.get(pos) {
            None => break,
            Some(Token::Plus) => {
                negate = false;
                pos += 1;
            }
            Some(Token::Minus) => {
                negate = true;
                pos += 1;
            }
            Some(t) => return Err(format!("expected + or - between terms, found {t:?}")),
        }
    }
    Ok(acc)
}

fn parse_term(
    tokens: &[Token],
    mut pos: usize,
    d: &Rational,
) -> std::result::Result<(Poly, usize), String> {
    let mut product = Poly::one();
    loop {
        let (factor, next) = parse_factor(tokens, pos, d)?;
        product = &product * &factor;
        pos = next;
        if tokens.get(pos) == Some(&Token::Star) {
            pos += 1;
            continue;
        }
        return Ok((product, pos));
    }
}

fn parse_factor(
    tokens: &[Token],
    pos: usize,
    d: &Rational,
) -> std::result::Result<(Poly, usize), String> {
    match tokens.get(pos) {
        Some(Token::Number(v)) => Ok((Poly::constant(QuadExt::from_rational(v.clone())), pos + 1)),
        Some(Token::Sqrt) => {
            if d == &zero_rat() {
                return Err("sqrt(d) used but the spec declares no radicand d".into());
            }
            Ok((Poly::constant(QuadExt::sqrt_of(d.clone())), pos + 1))
        }
        Some(Token::T) => {
            if tokens.get(pos + 1) == Some(&Token::Caret) {
                match tokens.get(pos + 2) {
                    Some(Token::Number(v)) if v.is_integer() && *v > zero_rat() => {
                        let k = num::traits::ToPrimitive::to_usize(v.numer())
                            .ok_or("exponent too large")?;
                        Ok((Poly::monomial(QuadExt::one(), k), pos + 3))
                    }
                    _ => Err("expected a positive integer exponent after ^".into()),
                }
            } else {
                Ok((Poly::monomial(QuadExt::one(), 1), pos + 1))
            }
        }
        other => Err(format!(
            "expected a rational, sqrt(d), or t, found {other:?}"
        )),
    }
}

// ---- emission ----

/// Render a rational without extra formatting (p or p/q).
pub fn rational_str(r: &Rational) -> String {
    r.to_string()
}

/// Render one coefficient entry in the job grammar.
pub fn entry_str(p: &Poly) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(Rational, bool, usize)> = Vec::new(); // (coef, has_sqrt, power)
    for (k, c) in p.coeffs().iter().enumerate() {
        if !c.rational_part().is_zero() {
            terms.push((c.rational_part().clone(), false, k));
        }
        if !c.radical_part().is_zero() {
            terms.push((c.radical_part().clone(), true, k));
        }
    }
    let mut out = String::new();
    for (idx, (coef, has_sqrt, power)) in terms.iter().enumerate() {
        let neg = coef < &zero_rat();
        let mag = if neg { -coef.clone() } else { coef.clone() };
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors: Vec<String> = Vec::new();
        let one = Rational::from_integer(1.into());
        if mag != one || (!has_sqrt && *power == 0) {
            factors.push(rational_str(&mag));
        }
        if *has_sqrt {
            factors.push("sqrt(d)".into());
        }
        match power {
            0 => {}
            1 => factors.push("t".into()),
            k => factors.push(format!("t^{k}")),
        }
        out.push_str(&factors.join("*"));
    }
    out
}

/// Serialize a config back to the job document format;
/// `parse_job(emit_job(c)) == c` for every valid config.
pub fn emit_job(config: &JobConfig) -> String {
    let mut out = String::new();
    out.push_str(&format!("format_version = {}\n", config.format_version));
    out.push_str(&format!("command = \"{}\"\n", config.command.name()));
    if let Some(m) = config.m {
        out.push_str(&format!("m = {m}\n"));
    }
    if let Some(m_max) = config.m_max {
        out.push_str(&format!("m_max = {m_max}\n"));
    }
    if let Some(s) = &config.s {
        let poly = Poly::constant(s.clone());
        out.push_str(&format!("s = \"{}\"\n", entry_str(&poly)));
    }
    if let Some(spec) = &config.spec {
        out.push_str("\n[spec]\n");
        out.push_str(&format!("n = {}\n", spec.n));
        if spec.d != zero_rat() {
            out.push_str(&format!("d = \"{}\"\n", rational_str(&spec.d)));
        }
        let emit_vec = |out: &mut String, name: &str, v: &[Poly]| {
            let items: Vec<String> = v.iter().map(|p| format!("\"{}\"", entry_str(p))).collect();
            out.push_str(&format!("{name} = [{}]\n", items.join(", ")));
        };
        emit_vec(&mut out, "alpha", &spec.alpha);
        emit_vec(&mut out, "beta", &spec.beta);
        emit_vec(&mut out, "tau", &spec.tau);
    }
    if let Some(demo) = &config.demo {
        out.push_str("\n[demo]\n");
        out.push_str(&format!("name = \"{}\"\n", demo.name()));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{rat, rat_i64};

    #[test]
    fn minimal_classify_job() {
        let doc = br#"
command = "classify"

[spec]
n = 2
alpha = ["1", "0", "1"]
beta = ["0", "1"]
tau = ["2"]
"#;
        let config = parse_job(doc).unwrap();
        assert_eq!(config.command, Command::Classify);
        let spec = config.spec.unwrap();
        assert_eq!(spec.n, 2);
        assert!(!spec.is_parametric());
        assert!(spec.to_ode_spec().is_ok());
    }

    #[test]
    fn wrong_length_names_the_field() {
        let doc = br#"
command = "classify"

[spec]
n = 2
alpha = ["1", "0"]
beta = ["0", "1"]
tau = ["2"]
"#;
        let err = parse_job(doc).unwrap_err();
        assert!(err.to_string().contains("spec.alpha"), "{err}");
        assert!(err.to_string().contains("expected 3"), "{err}");
    }

    #[test]
    fn rationals_parse_exactly() {
        let p = parse_entry("1/3", &zero_rat()).unwrap();
        assert_eq!(p, Poly::from_rationals(&[rat(1, 3)]));
        assert!(parse_entry("0.3333", &zero_rat()).is_err());
    }

    #[test]
    fn entry_grammar_cases() {
        let d = rat_i64(6);
        assert_eq!(
            parse_entry("2*sqrt(d)", &d).unwrap(),
            Poly::constant(QuadExt::new(rat_i64(0), rat_i64(2), d.clone()))
        );
        assert_eq!(
            parse_entry("t^2 - 4", &d).unwrap(),
            Poly::from_ints(&[-4, 0, 1])
        );
        assert_eq!(
            parse_entry("-1/2*t + 3", &d).unwrap(),
            Poly::from_rationals(&[rat_i64(3), rat(-1, 2)])
        );
        // sqrt(d)*sqrt(d) folds to d
        assert_eq!(
            parse_entry("sqrt(d)*sqrt(d)", &d).unwrap(),
            Poly::from_ints(&[6])
        );
        assert!(parse_entry("sqrt(d)", &zero_rat()).is_err());
        assert!(parse_entry("t^-1", &d).is_err());
        assert!(parse_entry("", &d).is_err());
    }

    #[test]
    fn entry_rendering_round_trips() {
        let d = rat_i64(6);
        for text in [
            "0",
            "5",
            "-1/2",
            "t^2 - 4",
            "2*sqrt(d)",
            "-3/4*sqrt(d)*t^2 + t - 1",
            "sqrt(d) + 1/7",
        ] {
            let p = parse_entry(text, &d).unwrap();
            let rendered = entry_str(&p);
            let reparsed = parse_entry(&rendered, &d).unwrap();
            assert_eq!(p, reparsed, "{text} -> {rendered}");
        }
    }

    #[test]
    fn job_round_trip() {
        let doc = br#"
format_version = 1
command = "conditions"
m = 2
s = "0"

[spec]
n = 3
d = "6"
alpha = ["0", "1", "0", "0"]
beta = ["3", "2*sqrt(d)", "-2"]
tau = ["-3*sqrt(d)*t", "t^2 - 4"]
"#;
        let config = parse_job(doc).unwrap();
        assert!(config.spec.as_ref().unwrap().is_parametric());
        let emitted = emit_job(&config);
        let reparsed = parse_job(emitted.as_bytes()).unwrap();
        assert_eq!(config, reparsed);
    }

    #[test]
    fn command_mismatch_detected() {
        let doc = br#"
command = "solve"
m = 1

[spec]
n = 2
alpha = ["1", "0", "0"]
beta = ["0", "-2"]
tau = ["-4"]
"#;
        assert!(parse_job_with_command(doc, Command::Solve).is_ok());
        let err = parse_job_with_command(doc, Command::Scan).unwrap_err();
        assert!(err.to_string().contains("command"), "{err}");
    }

    #[test]
    fn conditions_requires_parameter() {
        let doc = br#"
command = "conditions"
m = 1

[spec]
n = 2
alpha = ["1", "0", "0"]
beta = ["0", "-2"]
tau = ["-4"]
"#;
        let err = parse_job(doc).unwrap_err();
        assert!(err.to_string().contains('t'), "{err}");
    }

    #[test]
    fn floats_rejected_by_toml_types() {
        let doc = br#"
command = "solve"
m = 1

[spec]
n = 2
alpha = [1.5, "0", "0"]
beta = ["0", "-2"]
tau = ["-4"]
"#;
        assert!(parse_job(doc).is_err());
    }

    #[test]
    fn top_level_radicand_alias() {
        let doc = br#"
command = "classify"
d = "6"

[spec]
n = 3
alpha = ["0", "1", "0", "0"]
beta = ["3", "2*sqrt(d)", "-2"]
tau = ["-3*sqrt(d)", "2"]
"#;
        let config = parse_job(doc).unwrap();
        assert_eq!(config.spec.unwrap().d, rat_i64(6));

        let conflicting = br#"
command = "classify"
d = "5"

[spec]
n = 2
d = "6"
alpha = ["1", "0", "1"]
beta = ["0", "1"]
tau = ["1"]
"#;
        assert!(parse_job(conflicting).is_err());
    }

    #[test]
    fn demo_job() {
        let doc = br#"
command = "demo"

[demo]
name = "hermite"
"#;
        let config = parse_job(doc).unwrap();
        assert_eq!(config.demo, Some(DemoName::Hermite));
        let reparsed = parse_job(emit_job(&config).as_bytes()).unwrap();
        assert_eq!(config, reparsed);
    }
}
