use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use jetscheme::greenberg::{enumerate_jets, hensel_lift, DEFAULT_BUDGET};
use jetscheme::groebner::{
    ideal_member, krull_dimension, radical_member, saturate, GbOptions, Ideal, DEFAULT_STEP_LIMIT,
};
use jetscheme::jet::jet_ideal;
use jetscheme::parse::parse_element;
use jetscheme::scenario::variety_mod_q;
use jetscheme::smooth::nonsmooth_ideal;
use jetscheme::{
    parse_variety, render_report, run_scenario, Error, Field, Format, LiftProblem, Poly, ScenarioOptions, VarietySpec,
};

#[derive(Parser)]
#[command(name = "jetscheme", version, about = "Exact jet schemes, Groebner bases and arc lifting")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
    /// Maximum S-pair reductions per Groebner basis.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_LIMIT)]
    step_limit: usize,
    /// Maximum candidate points examined by jet enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Level-n jet ideal generators, one per line.
    Jet {
        #[arg(long)]
        order: usize,
        file: PathBuf,
    },
    /// Reduced Groebner basis (degrevlex).
    Gb { file: PathBuf },
    /// Krull dimension of the variety.
    Dim { file: PathBuf },
    /// Non-smooth locus ideal by the Jacobian criterion.
    Nsm { file: PathBuf },
    /// Ideal membership of a polynomial.
    Member { poly: String, file: PathBuf },
    /// Radical membership of a polynomial.
    RadicalMember { poly: String, file: PathBuf },
    /// Saturation of the ideal by a polynomial.
    Saturate { poly: String, file: PathBuf },
    /// Newton lifting of a truncated arc.
    Lift {
        file: PathBuf,
        /// Known coefficients, e.g. "x=1,1;y=1".
        #[arg(long)]
        arc: String,
        /// Solved variables, one per generator, e.g. "y".
        #[arg(long)]
        solve: String,
        /// Target jet level.
        #[arg(long)]
        to: usize,
        /// Number of trusted coefficients of the solved variables.
        #[arg(long)]
        nu: Option<usize>,
    },
    /// All jets of a given level over F_q.
    Enumerate {
        file: PathBuf,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        order: usize,
    },
    /// Image sizes of level-m jets in level nu-1 over F_q.
    Greenberg {
        file: PathBuf,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long, default_value_t = 1)]
        nu: usize,
        #[arg(long = "max", default_value_t = 3)]
        m_max: usize,
    },
    /// Runs a named scenario.
    Verify {
        scenario: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        q: Option<u64>,
        #[arg(long)]
        nu: Option<usize>,
        #[arg(long = "max")]
        m_max: Option<usize>,
        /// Variety file for scenarios that accept one.
        #[arg(long)]
        file: Option<PathBuf>,
    },
}

/// A failure with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = if e.is_limit() {
            3
        } else if e.is_input() {
            2
        } else {
            1
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn lib<E: Into<Error>>(e: E) -> Failure {
    Failure::from(e.into())
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

/// Command output: text lines, a JSON value, and whether it counts as a pass.
struct Output {
    text: String,
    json: Value,
    passed: bool,
}

impl Output {
    fn ok(text: String, json: Value) -> Self {
        Output { text, json, passed: true }
    }
}

fn read_variety(path: &Path) -> Result<VarietySpec, Failure> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_variety(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn lines(polys: &[Poly]) -> String {
    polys.iter().map(|p| format!("{p}\n")).collect()
}

fn strings(polys: &[Poly]) -> Vec<String> {
    polys.iter().map(|p| p.to_string()).collect()
}

fn ideal_of(spec: &VarietySpec) -> Result<Ideal<jetscheme::FieldDescriptor>, Failure> {
    Ideal::new(&spec.ctx, &spec.field, spec.gens.clone()).map_err(lib)
}

fn membership(spec: &VarietySpec, poly: &str, radical: bool, gb: &GbOptions) -> Result<Output, Failure> {
    let f = spec.polynomial(poly).map_err(lib)?;
    let ideal = ideal_of(spec)?;
    let inside = if radical {
        radical_member(&f, &ideal, gb)
    } else {
        ideal_member(&f, &ideal, gb)
    }
    .map_err(lib)?;
    Ok(Output::ok(format!("{inside}\n"), json!({ "polynomial": f.to_string(), "member": inside })))
}

/// Parses `x=1,1;y=1` into per-variable coefficient lists.
fn parse_arc(spec: &VarietySpec, text: &str) -> Result<Vec<Vec<jetscheme::FieldElement>>, Failure> {
    let mut coeffs = vec![None; spec.ctx.len()];
    for part in text.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, values) = part
            .split_once('=')
            .ok_or_else(|| usage(format!("arc entry `{part}` needs the form var=c0,c1,...")))?;
        let j = spec
            .ctx
            .index_of(name.trim())
            .ok_or_else(|| usage(format!("unknown variable `{}` in --arc", name.trim())))?;
        let list = values
            .split(',')
            .map(|v| parse_element(v.trim(), &spec.field).map_err(lib))
            .collect::<Result<Vec<_>, _>>()?;
        if coeffs[j].replace(list).is_some() {
            return Err(usage(format!("variable `{}` given twice in --arc", name.trim())));
        }
    }
    Ok(coeffs.into_iter().map(Option::unwrap_or_default).collect())
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let gb = GbOptions {
        step_limit: cli.step_limit,
    };
    match &cli.command {
        Command::Jet { order, file } => {
            let spec = read_variety(file)?;
            let jet = jet_ideal(&spec.ctx, &spec.field, &spec.gens, *order).map_err(lib)?;
            let mut text = String::new();
            let mut levels = Vec::new();
            for i in 0..=*order {
                let gens = jet.level_generators(i);
                for (g, p) in gens.iter().enumerate() {
                    text.push_str(&format!("F_{i},{g} = {p}\n"));
                }
                levels.push(json!(strings(gens)));
            }
            Ok(Output::ok(
                text,
                json!({ "level": order, "variables": jet.ctx().names(), "generators": levels }),
            ))
        }
        Command::Gb { file } => {
            let spec = read_variety(file)?;
            let basis = ideal_of(&spec)?.groebner_default(&gb).map_err(lib)?;
            let polys = basis.polynomials();
            Ok(Output::ok(lines(&polys), json!({ "order": "degrevlex", "basis": strings(&polys) })))
        }
        Command::Dim { file } => {
            let spec = read_variety(file)?;
            let dim = krull_dimension(&ideal_of(&spec)?, &gb).map_err(lib)?;
            Ok(Output::ok(format!("{dim}\n"), json!({ "dimension": dim })))
        }
        Command::Nsm { file } => {
            let spec = read_variety(file)?;
            let codim = spec.codim.unwrap_or(1);
            let ideal = nonsmooth_ideal(&spec.ctx, &spec.field, &spec.gens, codim).map_err(lib)?;
            Ok(Output::ok(
                lines(ideal.generators()),
                json!({ "codim": codim, "generators": strings(ideal.generators()) }),
            ))
        }
        Command::Member { poly, file } => membership(&read_variety(file)?, poly, false, &gb),
        Command::RadicalMember { poly, file } => membership(&read_variety(file)?, poly, true, &gb),
        Command::Saturate { poly, file } => {
            let spec = read_variety(file)?;
            let f = spec.polynomial(poly).map_err(lib)?;
            let sat = saturate(&ideal_of(&spec)?, &f, &gb).map_err(lib)?;
            Ok(Output::ok(
                lines(sat.generators()),
                json!({ "saturator": f.to_string(), "generators": strings(sat.generators()) }),
            ))
        }
        Command::Lift {
            file,
            arc,
            solve,
            to,
            nu,
        } => {
            let spec = read_variety(file)?;
            let coeffs = parse_arc(&spec, arc)?;
            let solve = solve
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|name| {
                    spec.ctx
                        .index_of(name)
                        .ok_or_else(|| usage(format!("unknown variable `{name}` in --solve")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let mut problem = LiftProblem::new(&spec.ctx, &spec.field, &spec.gens, coeffs, solve, *to);
            if let Some(nu) = nu {
                problem = problem.with_nu(*nu);
            }
            let lifted = hensel_lift(&problem).map_err(lib)?;
            let shown: Vec<Vec<String>> = lifted
                .coeffs()
                .iter()
                .map(|c| c.iter().map(|x| spec.field.format_element(x)).collect())
                .collect();
            Ok(Output::ok(
                format!("{}\n", lifted.format_with(spec.ctx.names())),
                json!({ "level": lifted.level(), "variables": spec.ctx.names(), "coefficients": shown }),
            ))
        }
        Command::Enumerate { file, q, order } => {
            let spec = variety_mod_q(&read_variety(file)?, *q).map_err(Failure::from)?;
            let jets = enumerate_jets(&spec.ctx, &spec.field, &spec.gens, *order, cli.budget).map_err(lib)?;
            let shown: Vec<String> = jets.iter().map(|a| a.format_with(spec.ctx.names())).collect();
            let mut text = format!("{} jets at level {order} over F_{q}\n", jets.len());
            for s in &shown {
                text.push_str(s);
                text.push('\n');
            }
            Ok(Output::ok(
                text,
                json!({ "q": q, "level": order, "count": jets.len(), "jets": shown }),
            ))
        }
        Command::Greenberg { file, q, nu, m_max } => {
            let options = ScenarioOptions {
                q: *q,
                nu: Some(*nu),
                m_max: Some(*m_max),
                variety: Some(read_variety(file)?),
                gb,
                budget: cli.budget,
                ..Default::default()
            };
            report(&options, "greenberg-scan", cli.format)
        }
        Command::Verify {
            scenario,
            p,
            n,
            d,
            q,
            nu,
            m_max,
            file,
        } => {
            let variety = file.as_deref().map(read_variety).transpose()?;
            let options = ScenarioOptions {
                p: *p,
                n: *n,
                d: *d,
                q: *q,
                nu: *nu,
                m_max: *m_max,
                variety,
                gb,
                budget: cli.budget,
                ..Default::default()
            };
            report(&options, scenario, cli.format)
        }
    }
}

fn report(options: &ScenarioOptions, name: &str, format: OutputFormat) -> Result<Output, Failure> {
    let report = run_scenario(name, options).map_err(Failure::from)?;
    if report.limit_hit {
        let text = render_report(&report, Format::Text);
        return Err(Failure {
            code: 3,
            message: format!("computation limit reached\n{text}"),
        });
    }
    let rendered = match format {
        OutputFormat::Text => render_report(&report, Format::Text),
        OutputFormat::Json => render_report(&report, Format::Json),
    };
    Ok(Output {
        json: serde_json::from_str(&rendered).unwrap_or(Value::Null),
        text: rendered,
        passed: report.passed(),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                OutputFormat::Text => print!("{}", out.text),
                OutputFormat::Json => println!("{}", serde_json::to_string_pretty(&out.json).expect("json")),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
