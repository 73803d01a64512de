//! `oitkit`: validate information models, evaluate their metrics, and run
//! the classical and physical calculators from the command line.
//!
//! Exit status: 0 on success, 1 on domain errors (invalid models, missing
//! measures, failed checks), 2 on usage errors and unreadable input files.

mod render;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use oitkit::classical::{self, KalmanScenario, SearchAlgorithm, SearchSetup};
use oitkit::metrics::{metric_report, DistanceKind, DistanceSpec, EquivalenceRelation, RelationSet};
use oitkit::physics::{self, CarrierSpec, PhysicalConstants, Regime};
use oitkit::{fixtures, Execution, Gap, InformationModel, Seconds};
use serde::de::DeserializeOwned;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "oitkit",
    version,
    about = "Objective information models: validation, metrics, classical calculators and physical bounds"
)]
struct Cli {
    /// Report format; text is rendered from the JSON report
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to this file instead of standard output
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Physical constants: `paper`, `codata` or a JSON constants file
    #[arg(long, global = true)]
    constants: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Check a model against the invariants of the sextuple model and test restorability
    ///
    /// A model is valid when noumena and carriers are nonempty, states live in
    /// the occurrence time and reflections in the reflection time, and the
    /// mapping is a total surjection onto the reflections. It is restorable when
    /// the mapping is also injective on state values, so that every state can
    /// be recovered from its reflection.
    Validate {
        /// Model file (JSON)
        model: PathBuf,
    },
    /// Evaluate the information metrics of a model
    ///
    /// Reports volume, delay, duration, scope, granularity, sampling rate and
    /// coverage; variety, aggregation and mismatch are added when a relation,
    /// relation set or target model is given.
    Metrics(MetricsArgs),
    /// Recover noumenon states from carrier reflections through the inverse mapping
    Restore {
        /// Model file (JSON); must be restorable
        model: PathBuf,
        /// Restore only this reflection index
        #[arg(long)]
        reflection: Option<usize>,
    },
    /// Compose a serial transmission chain into one model
    ///
    /// Each file holds one link or an array of links; links are taken in order.
    /// The composed model is always written as model JSON, whatever `--format`
    /// says, so that it can be validated and loaded again.
    Chain {
        #[arg(required = true)]
        files: Vec<PathBuf>,
    },
    /// Classical formulas recovered as special cases of the information metrics
    #[command(subcommand)]
    Classical(Classical),
    /// Information volume bounds from matter, energy and time
    #[command(subcommand)]
    Physics(Physics),
    /// Run the built-in penguin-photo and universe-budget scenarios
    ///
    /// Uses the `paper` constants unless `--constants` says otherwise.
    Demo,
}

#[derive(Args)]
struct DistanceArgs {
    /// Distance on values: discrete, l1, l2 or linf
    #[arg(long, value_enum)]
    distance: Option<Kind>,
    /// Six comma-separated mismatch weights for o, T_h, f, c, T_m, g
    #[arg(long, value_parser = parse_weights)]
    weights: Option<Weights>,
}

#[derive(Clone, Copy)]
struct Weights([f64; 6]);

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Discrete,
    L1,
    L2,
    Linf,
}

impl DistanceArgs {
    fn apply(&self, mut spec: DistanceSpec) -> DistanceSpec {
        if let Some(kind) = self.distance {
            spec.kind = match kind {
                Kind::Discrete => DistanceKind::Discrete,
                Kind::L1 => DistanceKind::L1,
                Kind::L2 => DistanceKind::L2,
                Kind::Linf => DistanceKind::Linf,
            };
        }
        if let Some(Weights(w)) = self.weights {
            spec.weights = w;
        }
        spec
    }
}

#[derive(Args)]
struct MetricsArgs {
    /// Model file (JSON)
    model: PathBuf,
    /// Report a single metric; a failure of that metric exits with status 1
    #[arg(long)]
    metric: Option<String>,
    /// Equivalence relation file for variety: {"labels": {"0": "a", ...}}
    #[arg(long)]
    relation: Option<PathBuf>,
    /// Relation set file for aggregation: {"edges": [[0, 1, "label"], ...]}
    #[arg(long)]
    relations: Option<PathBuf>,
    /// Sampling gaps file: [["lo", "hi"], ...]; derived from the occurrence time when absent
    #[arg(long)]
    gaps: Option<PathBuf>,
    /// Target model for mismatch
    #[arg(long)]
    target: Option<PathBuf>,
    #[command(flatten)]
    distance: DistanceArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Sequential,
    Bisection,
}

impl From<Algorithm> for SearchAlgorithm {
    fn from(a: Algorithm) -> Self {
        match a {
            Algorithm::Sequential => SearchAlgorithm::Sequential,
            Algorithm::Bisection => SearchAlgorithm::Bisection,
        }
    }
}

#[derive(Clone, Copy)]
struct Session {
    start: Seconds,
    end: Seconds,
}

#[derive(Subcommand)]
enum Classical {
    /// Minimum restorable volume of random-event information: Shannon entropy in bits
    Entropy {
        /// Comma-separated probabilities summing to 1
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        p: Vec<f64>,
    },
    /// Delay of a serial chain: the sum of its link delays, in exact decimal seconds
    ChainDelay {
        /// Comma-separated link delays in seconds
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        delays: Vec<Seconds>,
    },
    /// Radar range equation: maximum detection range grows with the quartic root of the target scope
    Radar {
        /// Transmit power (W)
        #[arg(long)]
        pt: f64,
        /// Antenna gain
        #[arg(long)]
        gt: f64,
        /// Effective aperture (m^2)
        #[arg(long)]
        ae: f64,
        /// Minimum detectable signal (W)
        #[arg(long)]
        smin: f64,
        /// Target cross section, the scope of the information (m^2)
        #[arg(long)]
        sigma: f64,
    },
    /// Rayleigh criterion: optical granularity is wavelength over aperture width
    Rayleigh {
        /// Wavelength (m)
        #[arg(long)]
        wavelength: f64,
        /// Aperture width (m)
        #[arg(long)]
        aperture: f64,
    },
    /// Variety invariance: equivalence classes count the same on states and reflections
    Variety {
        /// Restorable model file (JSON)
        model: PathBuf,
        /// Equivalence relation file; every state in its own class when absent
        #[arg(long)]
        relation: Option<PathBuf>,
    },
    /// Aggregation invariance: relations per element agree on states and reflections
    Aggregation {
        /// Restorable model file (JSON)
        model: PathBuf,
        /// Relation set file
        #[arg(long)]
        relations: PathBuf,
    },
    /// Mean monitoring-session duration, equal to the MTBF of the collecting device
    Mtbf {
        /// A session as START:END in seconds; repeat for each session
        #[arg(long = "session", required = true, value_parser = parse_session, allow_hyphen_values = true)]
        sessions: Vec<Session>,
    },
    /// Nyquist sampling: the lowest restorable sampling rate of period-T content is 1/(2T)
    Nyquist {
        /// Shortest period T of the content, in seconds
        #[arg(long)]
        period: Seconds,
        /// Check this sampling rate (Hz) against the bound
        #[arg(long)]
        rate: Option<f64>,
        /// Check the occurrence-time gaps of this model against the bound
        #[arg(long)]
        model: Option<PathBuf>,
    },
    /// Metcalfe's law: network value n^2 equals maximum scope times maximum coverage
    Metcalfe {
        /// Network model file (JSON)
        model: Option<PathBuf>,
        /// Node count, when no model is given
        #[arg(long, conflicts_with = "model")]
        nodes: Option<u64>,
    },
    /// Kalman filter: minimum-distortion restoration of the states of a linear system
    ///
    /// The scenario file holds A, B, H, Q, R, x0, P0, U and z (matrices as row
    /// lists); the report is the per-step trace of x, P and the gain G.
    Kalman {
        /// Scenario file (JSON)
        scenario: PathBuf,
    },
    /// Average search length of sequential or bisection search
    Asl {
        /// Number of candidates (bisection needs n = 2^h - 1)
        #[arg(long, required_unless_present = "p")]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Algorithm::Sequential)]
        algorithm: Algorithm,
        /// Comma-separated search probabilities, instead of the uniform 1/n
        #[arg(long, value_delimiter = ',', conflicts_with = "n")]
        p: Option<Vec<f64>>,
    },
    /// Minimum-mismatch search for the candidate model closest to a target
    Search {
        /// Setup file: {"candidates": [...], "target": {...}, "spec", "threshold", "algorithm"}
        setup: PathBuf,
        #[arg(long, value_enum)]
        algorithm: Option<Algorithm>,
        /// Stop at the first candidate whose mismatch is at most this value
        #[arg(long)]
        threshold: Option<f64>,
        #[command(flatten)]
        distance: DistanceArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RegimeArg {
    Large,
    Instant,
    Auto,
}

#[derive(Subcommand)]
enum Physics {
    /// Information volume of a single quantum: floor(4 dE t / h) + 1 qubits
    Quantum {
        /// Energy of the quantum above its ground state (J)
        #[arg(long)]
        delta_e: f64,
        /// Duration (s)
        #[arg(long)]
        t: f64,
    },
    /// Information volume a carrier of mass m and radiation energy E_r can bear over time t
    Carrier {
        /// Carrier file: {"mass", "radiation_energy", "quantum_count", "duration"}
        spec: Option<PathBuf>,
        /// Matter mass (kg)
        #[arg(long)]
        mass: Option<f64>,
        /// Radiation energy (J)
        #[arg(long)]
        radiation_energy: Option<f64>,
        /// Number of quanta in the carrier
        #[arg(long)]
        quanta: Option<f64>,
        /// Duration (s)
        #[arg(long)]
        duration: Option<f64>,
        #[arg(long, value_enum, default_value_t = RegimeArg::Auto)]
        regime: RegimeArg,
    },
    /// Minimum mass of one bit of classical memory at temperature T, and bits per kilogram
    BitMass {
        /// Temperature (K)
        #[arg(long, default_value_t = 300.0)]
        temperature: f64,
    },
    /// Information budget of the observable universe from its critical density
    Universe {
        /// Radius (light-years)
        #[arg(long, default_value_t = physics::DEFAULT_UNIVERSE_RADIUS_LY)]
        radius_ly: f64,
        /// Age (s)
        #[arg(long, default_value_t = physics::DEFAULT_UNIVERSE_AGE_S)]
        age: f64,
    },
    /// Qubits a one-kilogram carrier bears per second (4C^2/h), with electron and photon counts
    MassEnergy {
        /// Photon energy (eV)
        #[arg(long, default_value_t = 0.2e-3)]
        photon_ev: f64,
    },
}

fn parse_weights(s: &str) -> Result<Weights, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|p| p.trim().parse::<f64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    let w: [f64; 6] = parts
        .try_into()
        .map_err(|v: Vec<f64>| format!("expected 6 weights, got {}", v.len()))?;
    Ok(Weights(w))
}

fn parse_session(s: &str) -> Result<Session, String> {
    let (start, end) = s.split_once(':').ok_or("expected START:END")?;
    let start = start.parse().map_err(|e: oitkit::Error| e.to_string())?;
    let end = end.parse().map_err(|e: oitkit::Error| e.to_string())?;
    Ok(Session { start, end })
}

enum Failure {
    Usage(anyhow::Error),
    Domain(anyhow::Error),
}

impl From<oitkit::Error> for Failure {
    fn from(e: oitkit::Error) -> Self {
        Failure::Domain(e.into())
    }
}

type Outcome<T> = Result<T, Failure>;

struct Report {
    body: Value,
    /// Always written as JSON (model files).
    raw: bool,
    /// Printed report, but exit with status 1.
    failed: Option<String>,
}

impl Report {
    fn ok(body: Value) -> Self {
        Report {
            body,
            raw: false,
            failed: None,
        }
    }

    fn failing_if(mut self, failed: Option<String>) -> Self {
        self.failed = failed;
        self
    }
}

fn read(path: &Path) -> Outcome<String> {
    fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::Usage)
}

fn load<T: DeserializeOwned>(path: &Path) -> Outcome<T> {
    serde_json::from_str(&read(path)?)
        .with_context(|| format!("cannot parse {}", path.display()))
        .map_err(Failure::Usage)
}

fn load_model(path: &Path) -> Outcome<InformationModel> {
    load(path)
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize to JSON")
}

fn constants(cli: &Cli, fallback: &str) -> Outcome<PhysicalConstants> {
    let name = cli.constants.as_deref().unwrap_or(fallback);
    let consts = PhysicalConstants::resolve(name)
        .with_context(|| format!("cannot load constants {name:?}"))
        .map_err(Failure::Usage)?;
    consts.check()?;
    Ok(consts)
}

fn validation(model: &InformationModel) -> Outcome<(Value, Option<String>)> {
    let report = oitkit::validate(model);
    let valid = report.is_valid();
    let restorable = if valid { Some(oitkit::is_restorable(model)?) } else { None };
    let summary = match restorable {
        Some(true) => "valid, restorable".to_string(),
        Some(false) => "valid, not restorable".to_string(),
        None => format!("invalid: {} violation(s)", report.violations.len()),
    };
    let failed = report.violations.first().map(|v| format!("invalid model: {v}"));
    let body = json!({
        "summary": summary,
        "valid": valid,
        "restorable": restorable,
        "violations": report.violations,
        "notes": report.notes,
    });
    Ok((body, failed))
}

fn metrics(args: &MetricsArgs) -> Outcome<Report> {
    let model = load_model(&args.model)?;
    oitkit::validate(&model).into_result()?;
    let relation: Option<EquivalenceRelation> = args.relation.as_deref().map(load).transpose()?;
    let relations: Option<RelationSet> = args.relations.as_deref().map(load).transpose()?;
    let gaps: Option<Vec<Gap>> = args.gaps.as_deref().map(load).transpose()?;
    let target = args.target.as_deref().map(load_model).transpose()?;
    let spec = args.distance.apply(DistanceSpec::default());
    let report = metric_report(
        &model,
        relation.as_ref(),
        relations.as_ref(),
        gaps.as_deref(),
        target.as_ref().map(|t| (t, &spec)),
    );
    let Some(name) = &args.metric else {
        return Ok(Report::ok(to_json(&report)));
    };
    let entry = report.get(name.as_str()).ok_or_else(|| {
        let known: Vec<&str> = report.keys().map(String::as_str).collect();
        Failure::Usage(anyhow!("no metric {name:?} in this report; available: {}", known.join(", ")))
    })?;
    let failed = entry.error.as_ref().map(|e| format!("{name}: {e}"));
    Ok(Report::ok(json!({ name.as_str(): entry })).failing_if(failed))
}

fn restore(model: &Path, reflection: Option<usize>) -> Outcome<Report> {
    let model = load_model(model)?;
    let indices: Vec<usize> = match reflection {
        Some(i) => vec![i],
        None => (0..model.reflections.len()).collect(),
    };
    let restored = indices
        .into_iter()
        .map(|i| Ok(json!({ "reflection": i, "state": oitkit::restore(&model, i)? })))
        .collect::<Outcome<Vec<Value>>>()?;
    Ok(Report::ok(json!({ "restored": restored })))
}

fn chain(files: &[PathBuf]) -> Outcome<Report> {
    let mut links = Vec::new();
    for path in files {
        let value: Value = load(path)?;
        let parsed = if value.is_array() {
            serde_json::from_value::<Vec<InformationModel>>(value)
        } else {
            serde_json::from_value::<InformationModel>(value).map(|m| vec![m])
        };
        links.extend(
            parsed
                .with_context(|| format!("cannot parse {}", path.display()))
                .map_err(Failure::Usage)?,
        );
    }
    let composed = oitkit::compose_chain(&links)?;
    Ok(Report {
        body: to_json(&composed),
        raw: true,
        failed: None,
    })
}

fn check_failure(equal: bool, what: &str) -> Option<String> {
    (!equal).then(|| format!("{what} differs between states and reflections"))
}

fn classical(cmd: &Classical) -> Outcome<Report> {
    let body = match cmd {
        Classical::Entropy { p } => json!({ "p": p, "volume": classical::shannon_min_volume(p)?, "unit": "bit" }),
        Classical::ChainDelay { delays } => json!({
            "delays": delays,
            "delay": classical::serial_chain_delay(delays),
            "unit": "s",
        }),
        Classical::Radar { pt, gt, ae, smin, sigma } => json!({
            "inputs": { "pt": pt, "gt": gt, "ae": ae, "smin": smin, "sigma": sigma },
            "max_range": classical::radar_max_range(*pt, *gt, *ae, *smin, *sigma)?,
            "unit": "m",
        }),
        Classical::Rayleigh { wavelength, aperture } => json!({
            "wavelength": wavelength,
            "aperture": aperture,
            "granularity": classical::rayleigh_granularity(*wavelength, *aperture)?,
            "unit": "rad",
        }),
        Classical::Variety { model, relation } => {
            let model = load_model(model)?;
            let relation = match relation {
                Some(path) => load(path)?,
                None => EquivalenceRelation::identity(model.states.len()),
            };
            let check = classical::variety_invariance_check(&model, &relation)?;
            return Ok(Report::ok(to_json(&check)).failing_if(check_failure(check.equal, "variety")));
        }
        Classical::Aggregation { model, relations } => {
            let model = load_model(model)?;
            let relations: RelationSet = load(relations)?;
            let check = classical::aggregation_invariance_check(&model, &relations)?;
            return Ok(Report::ok(to_json(&check)).failing_if(check_failure(check.equal, "aggregation")));
        }
        Classical::Mtbf { sessions } => {
            let pairs: Vec<(Seconds, Seconds)> = sessions.iter().map(|s| (s.end, s.start)).collect();
            json!({ "sessions": sessions.len(), "mtbf": classical::mtbf_duration(&pairs)?, "unit": "s" })
        }
        Classical::Nyquist { period, rate, model } => {
            let t = period.as_f64();
            let mut body = json!({ "period": period, "min_rate": classical::nyquist_min_rate(t)?, "unit": "Hz" });
            if let Some(rate) = rate {
                body["rate"] = json!(rate);
                body["restorable"] = json!(classical::nyquist_restorable(*rate, t)?);
            }
            if let Some(path) = model {
                let model = load_model(path)?;
                let gaps = model.occurrence.gaps();
                body["gaps"] = to_json(&gaps);
                body["gaps_restorable"] = json!(classical::nyquist_restorable_gaps(&gaps, *period)?);
            }
            body
        }
        Classical::Metcalfe { model, nodes } => match (model, nodes) {
            (Some(path), _) => {
                let check = classical::metcalfe_check(&load_model(path)?)?;
                return Ok(Report::ok(to_json(&check)).failing_if(check_failure(check.equal, "n^2")));
            }
            (None, Some(n)) => json!({ "nodes": n, "value": big(classical::metcalfe_value(*n)) }),
            (None, None) => return Err(Failure::Usage(anyhow!("give a network model file or --nodes"))),
        },
        Classical::Kalman { scenario } => {
            let scenario: KalmanScenario = load(scenario)?;
            to_json(&scenario.run()?)
        }
        Classical::Asl { n, algorithm, p } => {
            let alg = SearchAlgorithm::from(*algorithm);
            match (p, n) {
                (Some(p), _) => json!({ "algorithm": alg, "p": p, "asl": classical::asl_weighted(alg, p)? }),
                (None, Some(n)) => {
                    let exact = classical::asl_exact(alg, *n)?;
                    json!({ "algorithm": alg, "n": n, "asl": exact.to_f64(), "exact": exact.to_string() })
                }
                (None, None) => return Err(Failure::Usage(anyhow!("give --n or --p"))),
            }
        }
        Classical::Search { setup, algorithm, threshold, distance } => {
            let mut setup: SearchSetup = load(setup)?;
            if let Some(a) = algorithm {
                setup.algorithm = (*a).into();
            }
            if let Some(t) = threshold {
                setup.threshold = *t;
            }
            setup.spec = distance.apply(setup.spec);
            let outcome = classical::search_min_mismatch(&setup, Execution::Sequential)?;
            json!({
                "algorithm": setup.algorithm,
                "candidates": setup.candidates.len(),
                "threshold": setup.threshold,
                "spec": setup.spec,
                "index": outcome.index,
                "comparisons": outcome.comparisons,
                "mismatch": outcome.mismatch,
            })
        }
    };
    Ok(Report::ok(body))
}

/// u128 as a JSON number when it fits, else as a decimal string.
fn big(v: u128) -> Value {
    u64::try_from(v).map(Value::from).unwrap_or_else(|_| Value::String(v.to_string()))
}

fn physics_cmd(cli: &Cli, cmd: &Physics) -> Outcome<Report> {
    let consts = constants(cli, "codata")?;
    let report = match cmd {
        Physics::Quantum { delta_e, t } => physics::quantum_report(*delta_e, *t, &consts)?,
        Physics::Carrier {
            spec,
            mass,
            radiation_energy,
            quanta,
            duration,
            regime,
        } => {
            let mut s: CarrierSpec = spec.as_deref().map(load).transpose()?.unwrap_or_default();
            s.mass = mass.unwrap_or(s.mass);
            s.radiation_energy = radiation_energy.unwrap_or(s.radiation_energy);
            s.quantum_count = quanta.or(s.quantum_count);
            s.duration = duration.unwrap_or(s.duration);
            let regime = match regime {
                RegimeArg::Large => Regime::Large,
                RegimeArg::Instant => Regime::Instant,
                RegimeArg::Auto => Regime::Auto,
            };
            physics::carrier_report(&s, regime, &consts)?
        }
        Physics::BitMass { temperature } => physics::bit_mass_report(*temperature, &consts)?,
        Physics::Universe { radius_ly, age } => physics::universe_report(&consts, *radius_ly, *age)?,
        Physics::MassEnergy { photon_ev } => physics::mass_energy_report(&consts, *photon_ev)?,
    };
    Ok(Report::ok(to_json(&report)))
}

fn demo(cli: &Cli) -> Outcome<Report> {
    let penguin = fixtures::penguin();
    let (validation, failed) = validation(&penguin)?;
    let metrics = metric_report(&penguin, None, None, None, None);
    let consts = constants(cli, "paper")?;
    let universe = physics::universe_report(
        &consts,
        physics::DEFAULT_UNIVERSE_RADIUS_LY,
        physics::DEFAULT_UNIVERSE_AGE_S,
    )?;
    let body = json!({
        "penguin": { "validation": validation, "metrics": metrics },
        "universe": universe,
    });
    Ok(Report::ok(body).failing_if(failed))
}

fn run(cli: &Cli) -> Outcome<Report> {
    match &cli.command {
        Command::Validate { model } => {
            let (body, failed) = validation(&load_model(model)?)?;
            Ok(Report::ok(body).failing_if(failed))
        }
        Command::Metrics(args) => metrics(args),
        Command::Restore { model, reflection } => restore(model, *reflection),
        Command::Chain { files } => chain(files),
        Command::Classical(cmd) => classical(cmd),
        Command::Physics(cmd) => physics_cmd(cli, cmd),
        Command::Demo => demo(cli),
    }
}

fn emit(cli: &Cli, report: &Report) -> anyhow::Result<()> {
    let text = if report.raw || cli.format == Format::Json {
        let mut s = serde_json::to_string_pretty(&report.body)?;
        s.push('\n');
        s
    } else {
        render::text(&report.body)
    };
    match &cli.output {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if let Err(e) = emit(&cli, &report) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            match report.failed {
                Some(msg) => {
                    eprintln!("error: {msg}");
                    ExitCode::from(1)
                }
                None => ExitCode::SUCCESS,
            }
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
