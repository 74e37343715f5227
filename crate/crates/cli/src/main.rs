mod driver;
mod output;

use std::io::Write;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use trit_codes::codes::{
    analyze, distance_bound, generator_polynomial, minimal_polynomial, AnalyzeOptions, CodeSpec,
    DEFAULT_BUDGET, MAX_WEIGHT,
};
use trit_codes::conditions::{check_conditions, cross_validate};
use trit_codes::corpus::{eval_expression, replay};
use trit_codes::cosets::coset;
use trit_codes::families::{catalog_at, survey, verify_claim, ClaimOptions, ClaimStatus, FamilyId};
use trit_codes::planar::{differential_spectrum_partial, known_pn_family, DifferentialSpectrum};
use trit_codes::poly3::factorize;
use trit_codes::{Error, F3Poly, FieldContext, FieldElement};

use driver::Threaded;
use output::{claim_json, code_text, status_name, CodeJson};

#[derive(Parser)]
#[command(
    name = "trit-codes",
    version,
    about = "Ternary cyclic codes C(1,e) and C(1,e,s)"
)]
struct Cli {
    #[command(flatten)]
    run: RunConfig,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Search threads; results do not depend on this.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Cap on search cells per weight.
    #[arg(long, global = true, env = "TRIT_CODES_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    /// Heaviest weight searched.
    #[arg(long, global = true, default_value_t = MAX_WEIGHT)]
    w_max: usize,
    /// Defining polynomial of GF(3^m) instead of the default one.
    #[arg(long, global = true)]
    modulus: Option<String>,
    /// Run work above the budget, weight-5 searches on long codes, and
    /// accept e in the coset of 1.
    #[arg(long, global = true)]
    force: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generator polynomial and dimension of C(1,e) or C(1,e,s).
    Construct {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        e: u64,
        /// Build the subcode C(1,e,s).
        #[arg(long = "s")]
        s: bool,
        /// Also determine the minimum distance.
        #[arg(long)]
        analyze: bool,
    },
    /// Check a family's parameter claim at one m.
    Verify {
        #[arg(long)]
        family: String,
        #[arg(short)]
        m: u32,
    },
    /// Factor a polynomial over GF(3), or replay the stored corpus.
    Factor {
        #[arg(required_unless_present = "corpus")]
        poly: Option<String>,
        #[arg(long)]
        corpus: bool,
    },
    /// The 3-cyclotomic coset of j modulo 3^m - 1.
    Coset {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        j: u64,
    },
    /// Minimal polynomial of alpha^i.
    Minpoly {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        i: u64,
    },
    /// Differential spectrum of x^r over GF(3^m).
    Spectrum {
        #[arg(short)]
        m: u32,
        #[arg(short)]
        r: u64,
    },
    /// Exhaustive check of conditions C1-C3 for an exponent or a family.
    Conditions {
        #[arg(short)]
        m: u32,
        #[arg(short, required_unless_present = "family")]
        e: Option<u64>,
        #[arg(long, conflicts_with = "e")]
        family: Option<String>,
    },
    /// Optimal codes over all even exponents at one m.
    Survey {
        #[arg(short)]
        m: u32,
        #[arg(long = "s")]
        s: bool,
    },
}

/// Process exit codes.
mod exit {
    pub const PASS: u8 = 0;
    pub const CLAIM_FAIL: u8 = 1;
    pub const INPUT: u8 = 2;
    pub const BUDGET: u8 = 3;
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::BudgetExceeded { .. } => exit::BUDGET,
        _ => exit::INPUT,
    }
}

struct Runner {
    cfg: RunConfig,
    driver: Threaded,
}

impl Runner {
    fn field(&self, m: u32) -> Result<Arc<FieldContext>, Error> {
        let ctx = match &self.cfg.modulus {
            Some(s) => FieldContext::new(m, s.parse::<F3Poly>()?)?,
            None => FieldContext::with_default_modulus(m)?,
        };
        Ok(Arc::new(ctx))
    }

    fn analyze_options(&self) -> AnalyzeOptions {
        AnalyzeOptions {
            w_max: self.cfg.w_max,
            budget: self.cfg.budget,
            force_w5: self.cfg.force,
            ..AnalyzeOptions::default()
        }
    }

    fn json(&self) -> bool {
        self.cfg.format == Format::Json
    }

    /// Writes to stdout; a closed pipe is not an error.
    fn emit(&self, text: &str, json: &impl serde::Serialize) {
        let mut out = std::io::stdout().lock();
        let _ = if self.json() {
            let body = serde_json::to_string_pretty(json).expect("serializable output");
            writeln!(out, "{body}")
        } else {
            write!(out, "{text}")
        };
    }

    fn construct(&self, m: u32, e: u64, s: bool, run_analysis: bool) -> Result<u8, Error> {
        let start = Instant::now();
        let ctx = self.field(m)?;
        let spec = if self.cfg.force {
            CodeSpec::forced(ctx, e, s)
        } else {
            CodeSpec::new(ctx, e, s)?
        };
        let tags: Vec<String> = catalog_at(m, s)
            .into_iter()
            .filter(|f| {
                f.exponent_of(m)
                    .is_ok_and(|x| x.leader == coset(3, m, spec.e()).leader())
            })
            .map(|f| f.tag())
            .collect();
        let family = Value::from(tags.clone());
        if run_analysis {
            let report = analyze(&spec, &self.analyze_options(), &self.driver)?;
            let mut text = code_text(&report);
            if !tags.is_empty() {
                text += &format!("family: {}\n", tags.join(", "));
            }
            let ms = start.elapsed().as_secs_f64() * 1e3;
            self.emit(&text, &CodeJson::new(&report, family, ms));
            return Ok(exit::PASS);
        }
        let g = generator_polynomial(&spec)?;
        let n = spec.n();
        let k = n - g.degree().unwrap_or(0) as u64;
        let bound = distance_bound(n, k);
        let mut text = format!("{g}\n[{n}, {k}]\nmodulus: {}\n", spec.field().modulus());
        if spec.outside_hypotheses() {
            text += "note: e lies outside the usual hypotheses (|C_e| != m or e in C_1)\n";
        }
        let json = serde_json::json!({
            "spec": {
                "label": spec.label(),
                "m": m,
                "e": spec.e(),
                "s_check": s,
                "modulus": spec.field().modulus().to_string(),
                "outside_hypotheses": spec.outside_hypotheses(),
            },
            "n": n,
            "k": k,
            "d_exact": Value::Null,
            "d_lower": 1,
            "d_upper": bound.applied,
            "generator": g.to_string(),
            "optimal": Value::Null,
            "certificates": [],
            "family": family,
            "timings": {"total_ms": start.elapsed().as_secs_f64() * 1e3, "searches": []},
        });
        self.emit(&text, &json);
        Ok(exit::PASS)
    }

    fn verify(&self, tag: &str, m: u32) -> Result<u8, Error> {
        let start = Instant::now();
        let fam: FamilyId = tag.parse()?;
        let ctx = self.field(m)?;
        let opts = ClaimOptions {
            analyze: self.analyze_options(),
            force: self.cfg.force,
        };
        let claim = match verify_claim(fam, ctx, &opts, &self.driver) {
            Err(Error::NotApplicable { reason, .. }) => {
                let json = serde_json::json!({
                    "spec": Value::Null, "n": Value::Null, "k": Value::Null,
                    "d_exact": Value::Null, "d_lower": Value::Null, "d_upper": Value::Null,
                    "generator": Value::Null, "optimal": Value::Null, "certificates": [],
                    "family": {"tag": fam.tag(), "status": "fail", "reasons": [reason]},
                    "timings": {"total_ms": start.elapsed().as_secs_f64() * 1e3, "searches": []},
                });
                self.emit(
                    &format!("family: {fam}\nstatus: fail\nreason: {reason}\n"),
                    &json,
                );
                return Ok(exit::CLAIM_FAIL);
            }
            other => other?,
        };
        let mut text = format!("family: {fam}\n");
        text += &format!(
            "exponent: e={} (coset leader {})\n",
            claim.exponent.e, claim.exponent.leader
        );
        if let Some(eq) = claim.exponent.equivalent {
            text += &format!("equivalent exponent: {eq}\n");
        }
        text += &format!(
            "claimed: [{}, {}, {}]\n",
            claim.claimed.0, claim.claimed.1, claim.claimed.2
        );
        text += &code_text(&claim.report);
        for c in &claim.checks {
            text += &format!("check {}: {}\n", c.name, if c.ok { "ok" } else { "FAILED" });
        }
        text += &format!("status: {}\n", status_name(&claim.status));
        match &claim.status {
            ClaimStatus::Fail(reasons) => {
                for r in reasons {
                    text += &format!("reason: {r}\n");
                }
            }
            ClaimStatus::PredictedUnverified(why) => text += &format!("reason: {why}\n"),
            ClaimStatus::Pass => {}
        }
        let ms = start.elapsed().as_secs_f64() * 1e3;
        self.emit(&text, &CodeJson::new(&claim.report, claim_json(&claim), ms));
        Ok(match claim.status {
            ClaimStatus::Pass => exit::PASS,
            ClaimStatus::Fail(_) => exit::CLAIM_FAIL,
            ClaimStatus::PredictedUnverified(_) => exit::BUDGET,
        })
    }

    fn factor(&self, poly: Option<&str>, corpus: bool) -> Result<u8, Error> {
        if corpus {
            let results = replay()?;
            let failed = results.iter().filter(|r| !r.ok).count();
            let mut text = String::new();
            for r in &results {
                let mark = if r.ok { "ok" } else { "FAIL" };
                text += &format!("{mark} [{}] {}", r.context, r.statement);
                if !r.ok {
                    text += &format!(" (computed {})", r.detail);
                }
                text.push('\n');
            }
            text += &format!(
                "{} of {} claims reproduced\n",
                results.len() - failed,
                results.len()
            );
            let json: Vec<Value> = results
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "context": r.context, "statement": r.statement,
                        "ok": r.ok, "computed": r.detail,
                    })
                })
                .collect();
            self.emit(&text, &json);
            return Ok(if failed == 0 {
                exit::PASS
            } else {
                exit::CLAIM_FAIL
            });
        }
        let input = poly.unwrap_or_default();
        let f = if input.contains(',') {
            input.parse::<F3Poly>()?
        } else {
            eval_expression(input)?
        };
        let fact = factorize(&f)?;
        let json = serde_json::json!({
            "input": f.to_string(),
            "unit": fact.unit.value(),
            "factors": fact.factors.iter().map(|(p, k)| serde_json::json!({"factor": p.to_string(), "multiplicity": k})).collect::<Vec<_>>(),
            "canonical": fact.to_string(),
        });
        self.emit(&format!("{fact}\n"), &json);
        Ok(exit::PASS)
    }

    fn coset(&self, m: u32, j: u64) -> Result<u8, Error> {
        let ctx = self.field(m)?;
        let c = coset(3, m, j % ctx.n() as u64);
        let members: Vec<String> = c.members().iter().map(u64::to_string).collect();
        let text = format!(
            "C_{} = {{{}}}\nleader: {}\nsize: {}\n",
            j % c.modulus(),
            members.join(", "),
            c.leader(),
            c.len()
        );
        let json = serde_json::json!({
            "j": j % c.modulus(), "modulus": c.modulus(), "leader": c.leader(),
            "size": c.len(), "members": c.members(),
        });
        self.emit(&text, &json);
        Ok(exit::PASS)
    }

    fn minpoly(&self, m: u32, i: u64) -> Result<u8, Error> {
        let ctx = self.field(m)?;
        let p = minimal_polynomial(&ctx, i)?;
        let json = serde_json::json!({
            "m": m, "i": i, "modulus": ctx.modulus().to_string(), "minimal_polynomial": p.to_string(),
        });
        self.emit(&format!("{p}\n"), &json);
        Ok(exit::PASS)
    }

    fn spectrum(&self, m: u32, r: u64) -> Result<u8, Error> {
        let ctx = self.field(m)?;
        let q = ctx.size();
        let needed = q as u128 * q as u128;
        if needed > self.cfg.budget && !self.cfg.force {
            return Err(Error::BudgetExceeded {
                needed,
                budget: self.cfg.budget,
            });
        }
        let workers = self.driver.workers.clamp(1, q as usize - 1) as u32;
        let chunk = (q - 1).div_ceil(workers);
        let ranges: Vec<_> = (0..workers)
            .map(|w| (1 + w * chunk)..(1 + (w + 1) * chunk).min(q))
            .filter(|r| !r.is_empty())
            .collect();
        let parts: Vec<DifferentialSpectrum> = std::thread::scope(|scope| {
            let handles: Vec<_> = ranges
                .into_iter()
                .map(|range| {
                    let ctx = &ctx;
                    scope.spawn(move || differential_spectrum_partial(ctx, r, range))
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("spectrum worker panicked"))
                .collect()
        });
        let mut spec = parts[0].clone();
        for p in &parts[1..] {
            spec.merge(p);
        }
        let kind = if spec.is_pn() {
            "PN"
        } else if spec.is_apn() {
            "APN"
        } else {
            "neither PN nor APN"
        };
        let mut text = format!(
            "x^{r} over GF(3^{m}): {kind}\nmax count: {}\n",
            spec.max_count
        );
        for (count, mult) in &spec.histogram {
            text += &format!("count {count}: {mult}\n");
        }
        if let Some(fam) = known_pn_family(m, r) {
            text += &format!("known planar family: {fam:?}\n");
        }
        let hist: serde_json::Map<String, Value> = spec
            .histogram
            .iter()
            .map(|(c, k)| (c.to_string(), Value::from(*k)))
            .collect();
        let json = serde_json::json!({
            "m": m, "r": r, "pn": spec.is_pn(), "apn": spec.is_apn(),
            "max_count": spec.max_count, "histogram": hist,
        });
        self.emit(&text, &json);
        Ok(exit::PASS)
    }

    fn conditions(&self, m: u32, e: Option<u64>, family: Option<&str>) -> Result<u8, Error> {
        let ctx = self.field(m)?;
        let (e, case) = match family {
            Some(tag) => {
                let fam: FamilyId = tag.parse()?;
                (fam.exponent_of(m)?.e, fam.case_family())
            }
            None => (e.unwrap_or_default() % ctx.n() as u64, None),
        };
        let size = ctx.size() as u128;
        if size * 4 > self.cfg.budget && !self.cfg.force {
            return Err(Error::BudgetExceeded {
                needed: size * 4,
                budget: self.cfg.budget,
            });
        }
        let v = check_conditions(&ctx, e);
        let show = |xs: &[FieldElement]| -> Vec<String> {
            xs.iter()
                .map(|&x| match ctx.log(x) {
                    Some(0) => "1".to_string(),
                    Some(l) => format!("a^{l}"),
                    None => "0".to_string(),
                })
                .collect()
        };
        let (c2s, c3s) = (show(&v.c2_solutions), show(&v.c3_solutions));
        let yes = |b: bool| if b { "holds" } else { "fails" };
        let mut text = format!(
            "e = {e}, m = {m}\nC1 (e even): {}\nC2 (only x=1): {} (roots: {})\nC3 (only x=0): {} (roots: {})\n",
            yes(v.c1),
            yes(v.c2()),
            c2s.join(", "),
            yes(v.c3()),
            c3s.join(", ")
        );
        let agree = match case {
            Some((fam, r)) => {
                let ok = cross_validate(&ctx, fam, r)?;
                text += &format!(
                    "symbolic route: {}\n",
                    if ok { "agrees" } else { "DISAGREES" }
                );
                Some(ok)
            }
            None => None,
        };
        let json = serde_json::json!({
            "m": m, "e": e, "c1": v.c1, "c2": v.c2(), "c3": v.c3(),
            "c2_roots": c2s, "c3_roots": c3s, "symbolic_agrees": agree,
        });
        self.emit(&text, &json);
        Ok(if v.all() && agree != Some(false) {
            exit::PASS
        } else {
            exit::CLAIM_FAIL
        })
    }

    fn survey(&self, m: u32, s: bool) -> Result<u8, Error> {
        let start = Instant::now();
        let ctx = self.field(m)?;
        let hits = survey(
            ctx,
            s,
            &self.analyze_options(),
            self.cfg.force,
            &self.driver,
        )?;
        let mut text = String::new();
        let mut json = Vec::new();
        for h in &hits {
            let members: Vec<String> = coset(3, m, h.e)
                .members()
                .iter()
                .map(u64::to_string)
                .collect();
            text += &format!(
                "e={:<6} {} {{{}}}",
                h.e,
                h.report.parameters(),
                members.join(",")
            );
            if !h.families.is_empty() {
                text += &format!("  {}", h.families.join(" "));
            }
            text.push('\n');
            json.push(CodeJson::new(
                &h.report,
                Value::from(h.families.clone()),
                start.elapsed().as_secs_f64() * 1e3,
            ));
        }
        text += &format!("{} optimal exponent classes\n", hits.len());
        self.emit(&text, &json);
        Ok(exit::PASS)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli
        .run
        .workers
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
        .max(1);
    let runner = Runner {
        cfg: cli.run,
        driver: Threaded { workers },
    };
    let result = match &cli.command {
        Command::Construct { m, e, s, analyze } => runner.construct(*m, *e, *s, *analyze),
        Command::Verify { family, m } => runner.verify(family, *m),
        Command::Factor { poly, corpus } => runner.factor(poly.as_deref(), *corpus),
        Command::Coset { m, j } => runner.coset(*m, *j),
        Command::Minpoly { m, i } => runner.minpoly(*m, *i),
        Command::Spectrum { m, r } => runner.spectrum(*m, *r),
        Command::Conditions { m, e, family } => runner.conditions(*m, *e, family.as_deref()),
        Command::Survey { m, s } => runner.survey(*m, *s),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code(&err))
        }
    }
}
