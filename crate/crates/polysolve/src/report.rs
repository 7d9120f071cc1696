//! Report generation: dispatch a validated job to the library and render
//! a deterministic structured-text report.
//!
//! Reports mirror the job format (TOML-shaped key/value text). Exact
//! values only: rationals as `p/q`, values in Q(sqrt(d)) as `(a, b, d)`
//! triples; decimal approximations carry an explicit `approx` key. A
//! candidate is stamped `verified = true` only after the independent
//! residual substitution confirms the engine verdict.

use num::traits::ToPrimitive;

use crate::conditions::{common_roots, invsqrt_nonexistence, parametric_conditions, RootLocation};
use crate::error::Error;
use crate::exact::{rat, rat_i64, Poly, QuadExt, Rational};
use crate::fixtures::{
    build_dirac, build_invsqrt, cauchy_euler_spec, hermite_spec, heun_demo_spec, DiracParams,
    InvSqrtParams,
};
use crate::job::{entry_str, Command, DemoName, JobConfig, FORMAT_VERSION};
use crate::ode::{classify_origin, indicial_roots, theorem_case, OdeSpec, SingularityClass};
use crate::recurrence::{find_polynomial_solutions, necessary_condition_residual, ScanEntry};
use crate::scheffe::{
    detect_scheffe, hypergeometric_params, indicial_roots_scheffe, series_coefficients,
    term_ratio_identity_holds, termination_degree, two_term_recurrence, ParamFactor,
};
use crate::verify::verify_candidate;

/// A rendered report plus the process exit code
/// (0 completed, 1 input error, 2 unsupported equation class).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutput {
    pub report: String,
    pub exit_code: i32,
}

/// Execute a validated job. Never panics on well-formed configs; errors
/// are folded into the report with the documented exit codes.
pub fn run(config: &JobConfig) -> RunOutput {
    let mut w = Writer::new();
    w.head
        .push_str(&format!("format_version = {FORMAT_VERSION}\n"));
    w.head
        .push_str(&format!("command = \"{}\"\n", config.command.name()));
    let result = match config.command {
        Command::Classify => classify_cmd(&mut w, config),
        Command::Solve => solve_cmd(&mut w, config),
        Command::Scan => scan_cmd(&mut w, config),
        Command::Conditions => conditions_cmd(&mut w, config),
        Command::Scheffe => scheffe_cmd(&mut w, config),
        Command::Demo => demo_cmd(&mut w, config),
    };
    let exit_code = match result {
        Ok(()) => {
            w.kv_str_first("status", "completed");
            0
        }
        Err(e) => {
            let code = error_code(&e);
            w.kv_str_first("status", "error");
            w.kv_str_first("error", &e.to_string());
            code
        }
    };
    RunOutput {
        report: w.finish(),
        exit_code,
    }
}

fn error_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) | Error::InvalidSpec(_) => 1,
        Error::UnsupportedEquation(_) | Error::NoRealIndicialRoot | Error::UnsupportedField => 2,
        _ => 0,
    }
}

// ---- rendering ----

struct Writer {
    head: String,
    body: String,
}

impl Writer {
    fn new() -> Self {
        Writer {
            head: String::new(),
            body: String::new(),
        }
    }

    fn kv_str(&mut self, key: &str, value: &str) {
        self.body.push_str(&format!("{key} = \"{value}\"\n"));
    }

    fn kv_str_first(&mut self, key: &str, value: &str) {
        self.head.push_str(&format!("{key} = \"{value}\"\n"));
    }

    fn kv_int(&mut self, key: &str, value: i64) {
        self.body.push_str(&format!("{key} = {value}\n"));
    }

    fn kv_bool(&mut self, key: &str, value: bool) {
        self.body.push_str(&format!("{key} = {value}\n"));
    }

    fn kv_f64(&mut self, key: &str, value: f64) {
        self.body.push_str(&format!("{key} = {value:.12e}\n"));
    }

    fn kv_list(&mut self, key: &str, values: &[String]) {
        let items: Vec<String> = values.iter().map(|v| format!("\"{v}\"")).collect();
        self.body
            .push_str(&format!("{key} = [{}]\n", items.join(", ")));
    }

    fn kv_bool_list(&mut self, key: &str, values: &[bool]) {
        let items: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        self.body
            .push_str(&format!("{key} = [{}]\n", items.join(", ")));
    }

    fn section(&mut self, name: &str) {
        self.body.push_str(&format!("\n[{name}]\n"));
    }

    fn item(&mut self, name: &str) {
        self.body.push_str(&format!("\n[[{name}]]\n"));
    }

    fn finish(self) -> String {
        let mut out = self.head;
        out.push_str(&self.body);
        out
    }
}

fn qx_str(v: &QuadExt) -> String {
    v.to_string()
}

fn qx_list(vs: &[QuadExt]) -> Vec<String> {
    vs.iter().map(qx_str).collect()
}

fn rational_str(r: &Rational) -> String {
    r.to_string()
}

fn require_spec(config: &JobConfig) -> Result<&crate::job::SpecInput, Error> {
    config
        .spec
        .as_ref()
        .ok_or_else(|| Error::Parse("this command requires a [spec] table".into()))
}

fn equation_section(w: &mut Writer, spec: &OdeSpec) {
    w.section("equation");
    w.kv_int("n", spec.n() as i64);
    w.kv_list("alpha", &qx_list(spec.alphas()));
    w.kv_list("beta", &qx_list(spec.betas()));
    w.kv_list("tau", &qx_list(spec.taus()));
    w.kv_str("class", &classify_origin(spec).to_string());
    w.kv_str("case", &theorem_case(spec).to_string());
}

// ---- commands ----

fn classify_cmd(w: &mut Writer, config: &JobConfig) -> Result<(), Error> {
    let spec = require_spec(config)?.to_ode_spec()?;
    equation_section(w, &spec);
    if classify_origin(&spec) == SingularityClass::Irregular {
        return Err(Error::UnsupportedEquation(
            "the origin is an irregular singular point; the constructive \
             theorems do not apply"
                .into(),
        ));
    }
    let roots = indicial_roots(&spec)?;
    w.kv_list("indicial_roots", &qx_list(&roots.roots));
    for root in &roots.roots {
        if !root.is_rational() {
            w.kv_f64("indicial_root_approx", root.to_f64());
        }
    }
    Ok(())
}

fn candidate_item(w: &mut Writer, spec: &OdeSpec, entry: &ScanEntry) {
    w.item("candidate");
    w.kv_str("s", &qx_str(&entry.s));
    w.kv_int("m", entry.m as i64);
    match &entry.outcome {
        Ok(c) => {
            w.kv_list("coeffs", &qx_list(&c.coeffs));
            w.kv_list("sufficient_residuals", &qx_list(&c.sufficient_residuals));
            w.kv_str("necessary_residual", &qx_str(&c.necessary_residual));
            if !c.free_coefficients.is_empty() {
                let free: Vec<String> = c
                    .free_coefficients
                    .iter()
                    .map(|i| format!("C{i}"))
                    .collect();
                w.kv_list("free_coefficients", &free);
            }
            w.kv_bool("is_solution", c.is_solution);
            if c.is_solution {
                w.kv_bool("verified", verify_candidate(spec, c));
            }
        }
        Err(e) => {
            w.kv_str("error", &e.to_string());
        }
    }
}

fn solve_cmd(w: &mut Writer, config: &JobConfig) -> Result<(), Error> {
    let spec = require_spec(config)?.to_ode_spec()?;
    let m = config
        .m
        .ok_or_else(|| Error::Parse("command solve requires `m`".into()))?;
    equation_section(w, &spec);
    let entries = find_polynomial_solutions(&spec, m)?;
    let mut solutions = 0;
    for entry in entries.iter().filter(|e| e.m == m) {
        candidate_item(w, &spec, entry);
        if entry.outcome.as_ref().is_ok_and(|c| c.is_solution) {
            solutions += 1;
        }
    }
    w.section("summary");
    w.kv_int("solutions_found", solutions);
    Ok(())
}

fn scan_cmd(w: &mut Writer, config: &JobConfig) -> Result<(), Error> {
    let spec = require_spec(config)?.to_ode_spec()?;
    let m_max = config
        .m_max
        .ok_or_else(|| Error::Parse("command scan requires `m_max`".into()))?;
    equation_section(w, &spec);
    scan_into(w, &spec, m_max)
}

fn scan_into(w: &mut Writer, spec: &OdeSpec, m_max: usize) -> Result<(), Error> {
    let entries = find_polynomial_solutions(spec, m_max)?;
    let mut solutions = 0;
    for entry in &entries {
        candidate_item(w, spec, entry);
        if entry.outcome.as_ref().is_ok_and(|c| c.is_solution) {
            solutions += 1;
        }
    }
    w.section("summary");
    w.kv_int("solutions_found", solutions);
    Ok(())
}

fn conditions_cmd(w: &mut Writer, config: &JobConfig) -> Result<(), Error> {
    let input = require_spec(config)?;
    let m = config
        .m
        .ok_or_else(|| Error::Parse("command conditions requires `m`".into()))?;
    let pspec = input.to_param_spec()?;
    let s = config.s.clone().unwrap_or_else(QuadExt::zero);
    let sys = parametric_conditions(&pspec, m, &s)?;
    w.section("conditions");
    w.kv_int("m", m as i64);
    w.kv_str("s", &qx_str(&sys.s));
    let suff: Vec<String> = sys.sufficient.iter().map(entry_str).collect();
    w.kv_list("sufficient", &suff);
    w.kv_str("necessary", &entry_str(&sys.necessary));
    match common_roots(&sys) {
        Ok(roots) => {
            for root in &roots {
                w.item("root");
                match &root.location {
                    RootLocation::Exact(r) => {
                        w.kv_str("t", &rational_str(r));
                    }
                    RootLocation::Interval { lo, hi } => {
                        w.kv_list("t_interval", &[rational_str(lo), rational_str(hi)]);
                        w.kv_f64("approx", lo.to_f64().unwrap_or(f64::NAN));
                    }
                }
                w.kv_bool_list("conditions_hold", &root.conditions_hold);
                w.kv_bool("is_common", root.is_common);
            }
            w.section("summary");
            w.kv_int(
                "common_roots",
                roots.iter().filter(|r| r.is_common).count() as i64,
            );
        }
        Err(Error::AllValuesAdmissible) => {
            w.section("summary");
            w.kv_str(
                "note",
                "every condition vanishes identically: all parameter values admissible",
            );
        }
        Err(e) => return Err(e),
    }
    Ok(())
}

fn scheffe_cmd(w: &mut Writer, config: &JobConfig) -> Result<(), Error> {
    let spec = require_spec(config)?.to_ode_spec()?;
    equation_section(w, &spec);
    // the detector works on p2 u'' + p1 u' + p0 u = 0, so p0 = -R
    let p2 = spec.p();
    let p1 = spec.q();
    let p0 = -&spec.r();
    let Some(form) = detect_scheffe(&p2, &p1, &p0) else {
        w.section("scheffe");
        w.kv_bool("two_term", false);
        return Ok(());
    };
    w.section("scheffe");
    w.kv_bool("two_term", true);
    w.kv_int("m", form.m_shift);
    w.kv_int("h", form.h as i64);
    for j in (0..3).rev() {
        w.kv_list(
            &format!("q{j}"),
            &[qx_str(form.q_at(j, false)), qx_str(form.q_at(j, true))],
        );
    }
    let roots = indicial_roots_scheffe(&form)?;
    w.kv_list("indicial_roots", &qx_list(&roots.roots));
    if roots.repeated {
        w.kv_bool("repeated_root", true);
    }
    for lambda in &roots.roots {
        w.item("branch");
        w.kv_str("lambda", &qx_str(lambda));
        let rec = two_term_recurrence(&form, lambda);
        w.kv_list("numerator_quadratic", &qx_list(&rec.num));
        w.kv_list("denominator_quadratic", &qx_list(&rec.den));
        let rep = hypergeometric_params(&form, lambda)?;
        let describe = |f: &ParamFactor| match f {
            ParamFactor::Root(a) => qx_str(a),
            ParamFactor::Pair { sum, prod } => {
                format!("pair(sum {}, product {})", qx_str(sum), qx_str(prod))
            }
        };
        let upper: Vec<String> = rep.upper.iter().map(describe).collect();
        let lower: Vec<String> = rep.lower.iter().map(describe).collect();
        w.kv_list("upper_parameters", &upper);
        w.kv_list("lower_parameters", &lower);
        w.kv_str("argument_scale", &qx_str(&rep.argument_scale));
        w.kv_bool(
            "term_ratio_identity",
            term_ratio_identity_holds(&rec, &rep, 10),
        );
        match termination_degree(&rec) {
            Some(k) => {
                w.kv_int("terminates_at", k as i64);
                match series_coefficients(&rec, k) {
                    Ok(coeffs) => {
                        let head: Vec<QuadExt> = coeffs.iter().take(k).cloned().collect();
                        w.kv_list("polynomial_coeffs", &qx_list(&head));
                    }
                    Err(e) => w.kv_str("series_error", &e.to_string()),
                }
            }
            None => match series_coefficients(&rec, 5 * rec.h as usize) {
                Ok(coeffs) => {
                    let grid: Vec<QuadExt> =
                        coeffs.iter().step_by(rec.h as usize).cloned().collect();
                    w.kv_list("series_head", &qx_list(&grid));
                }
                Err(e) => w.kv_str("series_error", &e.to_string()),
            },
        }
    }
    Ok(())
}

fn demo_cmd(w: &mut Writer, config: &JobConfig) -> Result<(), Error> {
    let name = config
        .demo
        .ok_or_else(|| Error::Parse("command demo requires a demo name".into()))?;
    w.kv_str("demo", name.name());
    match name {
        DemoName::Hermite => {
            let spec = hermite_spec();
            equation_section(w, &spec);
            scan_into(w, &spec, config.m_max.unwrap_or(3))
        }
        DemoName::Heun => {
            let spec = heun_demo_spec();
            equation_section(w, &spec);
            scan_into(w, &spec, config.m_max.unwrap_or(3))
        }
        DemoName::CauchyEuler => {
            let spec = cauchy_euler_spec();
            equation_section(w, &spec);
            scan_into(w, &spec, config.m_max.unwrap_or(3))
        }
        DemoName::Invsqrt => invsqrt_demo(w, config),
        DemoName::Dirac => dirac_demo(w, config),
    }
}

fn invsqrt_demo(w: &mut Writer, config: &JobConfig) -> Result<(), Error> {
    let l = rat_i64(0);
    let m = config.m.unwrap_or(1);
    let params = InvSqrtParams::on_nc_branch(l.clone(), m);
    let spec = build_invsqrt(&params)?;
    equation_section(w, &spec);
    w.section("nonexistence");
    w.kv_int("m", m as i64);
    w.kv_str("lambda", &qx_str(&params.lambda));
    let ncr = necessary_condition_residual(&spec, m, &QuadExt::zero());
    w.kv_str("necessary_residual", &qx_str(&ncr));
    w.kv_bool("necessary_condition_satisfied", ncr.is_zero());
    let delta = invsqrt_nonexistence(&l, m);
    w.kv_str("delta", &qx_str(&delta));
    if !delta.is_rational() {
        w.kv_f64("delta_approx", delta.to_f64());
    }
    let entries = find_polynomial_solutions(&spec, m)?;
    let found = entries
        .iter()
        .filter(|e| e.outcome.as_ref().is_ok_and(|c| c.is_solution))
        .count();
    w.kv_int("polynomial_solutions_found", found as i64);
    let verdict = if delta.is_zero() || found > 0 {
        "polynomial solution exists"
    } else {
        "no polynomial solution (necessary condition holds, determinant nonzero)"
    };
    w.kv_str("verdict", verdict);
    Ok(())
}

fn dirac_demo(w: &mut Writer, config: &JobConfig) -> Result<(), Error> {
    // sample parameters: e = 1, B = 2, l = 0, gamma = 1/2, M = 0, Z = 1
    let base = DiracParams {
        e_level: rat_i64(0),
        mass: rat_i64(0),
        l: rat_i64(0),
        gamma: rat(1, 2),
        z: rat_i64(1),
        e: rat_i64(1),
        b: rat_i64(2),
    };
    w.section("parameters");
    w.kv_str("e", &rational_str(&base.e));
    w.kv_str("B", &rational_str(&base.b));
    w.kv_str("l", &rational_str(&base.l));
    w.kv_str("gamma", &rational_str(&base.gamma));
    w.kv_str("M", &rational_str(&base.mass));
    w.kv_str("Z", &rational_str(&base.z));
    for m in 0..=config.m_max.unwrap_or(2) {
        w.item("level");
        w.kv_int("m", m as i64);
        // E^2 = eB(m + l + gamma + 3/2) + M^2
        let curve = &base.e * &base.b * (rat_i64(m as i64) + &base.l + &base.gamma + rat(3, 2))
            + &base.mass * &base.mass;
        let nc_poly = Poly::from_rationals(&[-curve.clone(), rat_i64(0), rat_i64(1)]);
        w.kv_str("energy_polynomial", &entry_str(&nc_poly));
        match crate::conditions::rational_roots(&nc_poly) {
            Ok(roots) => {
                let root_strs: Vec<String> = roots.iter().map(rational_str).collect();
                w.kv_list("energy_roots", &root_strs);
                for e_root in roots {
                    let p = DiracParams {
                        e_level: e_root.clone(),
                        ..base.clone()
                    };
                    if (&p.e_level + &p.mass) == rat_i64(0) {
                        continue;
                    }
                    let spec = build_dirac(&p)?;
                    let ncr = necessary_condition_residual(&spec, m, &QuadExt::zero());
                    w.kv_bool(
                        &format!(
                            "nc_vanishes_at_E_{}",
                            rational_str(&e_root).replace('-', "neg").replace('/', "_")
                        ),
                        ncr.is_zero(),
                    );
                }
            }
            Err(Error::AllValuesAdmissible) => {
                w.kv_str("energy_roots", "all");
            }
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
