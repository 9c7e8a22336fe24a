//! Command-line front end. Every report is deterministic plain text; grids use
//! the `%grid` format and shapes the `%shape` format.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use algsubshift::algebra::sublattice_four_dot;
use algsubshift::complexity::{annihilator_from_kernel, complexity_count, Shape};
use algsubshift::config::{
    check_annihilates, detect_periods, fourdot_decompose_at, sublattice_counterexample,
    ConfigSource, LineFamily, Region, Window,
};
use algsubshift::elimination::{bezout_cofactors, resultant};
use algsubshift::linefactors::{classify_nivat, line_factor_profile, NivatClass};
use algsubshift::newton::{candidate_line_directions, newton_polygon, sublattice_index};
use algsubshift::pipeline::{
    ledrappier_ideal_membership, nivat_pipeline, worked_example, PipelineOptions,
    WORKED_EXAMPLE_NAMES,
};
use algsubshift::{Error, LaurentPoly, Point, Result, Ring, Var};

#[derive(Parser)]
#[command(name = "algsubshift", version, about = "Algebraic subshifts over prime fields")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Coefficient ring: a prime p, or 0 for the integers.
    #[arg(long = "mod", global = true, default_value_t = 2)]
    modulus: u64,
    /// Window origin `x,y`.
    #[arg(long, global = true, value_parser = parse_point, allow_hyphen_values = true)]
    origin: Option<Point>,
    /// Window size `WxH`.
    #[arg(long, global = true, value_parser = parse_size)]
    size: Option<(usize, usize)>,
    /// Sample region `WxH` (centered) or `WxH@x,y`.
    #[arg(long, global = true, value_parser = parse_region, allow_hyphen_values = true)]
    region: Option<Region>,
    /// Search bound for periods.
    #[arg(long, global = true, default_value_t = 32)]
    bound: usize,
    /// `block:WxH`, `scattered:N:STEP`, or a `%shape` file.
    #[arg(long, global = true)]
    shape: Option<String>,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Variable to eliminate.
    #[arg(long, global = true, value_parser = parse_var, default_value = "X")]
    axis: Var,
}

#[derive(Subcommand)]
enum Command {
    /// Polynomial algebra and line-factor analysis.
    #[command(subcommand)]
    Poly(PolyCmd),
    /// Configuration windows and checks.
    #[command(subcommand)]
    Config(ConfigCmd),
    /// Pattern complexity.
    #[command(subcommand)]
    Complexity(ComplexityCmd),
    /// End-to-end periodicity analysis.
    #[command(subcommand)]
    Pipeline(PipelineCmd),
}

#[derive(Subcommand)]
enum PolyCmd {
    /// Support, normal form, Newton polygon, line directions.
    Info { f: String },
    /// Line-factor class; exits with 2 for several directions.
    Classify { f: String },
    /// Sylvester resultant along `--axis`.
    Resultant { f: String, g: String },
    /// Cofactors with `alpha f + beta g` free of `--axis`.
    Bezout { f: String, g: String },
    /// Membership in the ideal generated by `1 + X + Y` over F_2.
    MemberLedrappier { g: String },
}

#[derive(Subcommand)]
enum ConfigCmd {
    /// Print a window of a source.
    Gen { source: String },
    /// Check that `f` annihilates a source on the window.
    Check { f: String, source: String },
    /// Translation vectors under which the window agrees with itself.
    Periods { source: String },
    /// Split a four-dot configuration into horizontal and vertical parts.
    Decompose4 {
        source: String,
        /// Anchor cell `x,y` whose row and column define the parts.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true, default_value = "0,0")]
        anchor: Point,
    },
    /// The non-periodic low-complexity sublattice configuration.
    Counterexample,
}

#[derive(Subcommand)]
enum ComplexityCmd {
    /// Count distinct shape patterns over the region.
    Count { source: String },
    /// Annihilator from the kernel of the pattern matrix.
    Annihilator { source: String },
}

#[derive(Subcommand)]
enum PipelineCmd {
    /// Run on a worked example, or on a source and its defining polynomial.
    Run {
        /// One of: fourdot, counterexample, ledrappier-torus.
        #[arg(long, conflicts_with_all = ["source", "f"])]
        example: Option<String>,
        #[arg(required_unless_present = "example")]
        source: Option<String>,
        #[arg(required_unless_present = "example")]
        f: Option<String>,
    },
}

fn parse_pair<T: std::str::FromStr>(s: &str, sep: char) -> std::result::Result<(T, T), String> {
    let (a, b) = s.split_once(sep).ok_or_else(|| format!("expected a{sep}b"))?;
    let num = |t: &str| t.trim().parse().map_err(|_| format!("not a number: {t:?}"));
    Ok((num(a)?, num(b)?))
}

fn parse_point(s: &str) -> std::result::Result<Point, String> {
    parse_pair(s, ',')
}

fn parse_size(s: &str) -> std::result::Result<(usize, usize), String> {
    let (w, h) = parse_pair(s, 'x')?;
    if w == 0 || h == 0 {
        return Err("sizes must be positive".into());
    }
    Ok((w, h))
}

fn parse_region(s: &str) -> std::result::Result<Region, String> {
    match s.split_once('@') {
        Some((size, origin)) => {
            let (w, h) = parse_size(size)?;
            Ok(Region::new(parse_point(origin)?, w, h))
        }
        None => {
            let (w, h) = parse_size(s)?;
            Ok(Region::new((-(w as i64 / 2), -(h as i64 / 2)), w, h))
        }
    }
}

fn parse_var(s: &str) -> std::result::Result<Var, String> {
    match s {
        "X" | "x" => Ok(Var::X),
        "Y" | "y" => Ok(Var::Y),
        _ => Err("expected X or Y".into()),
    }
}

impl Global {
    fn ring(&self) -> Result<Ring> {
        Ring::from_modulus(self.modulus)
    }

    fn poly(&self, text: &str) -> Result<LaurentPoly> {
        LaurentPoly::parse(self.ring()?, text)
    }

    /// The window given by `--origin` and `--size`, 8x8 at the origin by default.
    fn window(&self) -> Region {
        let (w, h) = self.size.unwrap_or((8, 8));
        Region::new(self.origin.unwrap_or((0, 0)), w, h)
    }

    fn sample_region(&self, default: usize) -> Region {
        match (self.region, self.origin, self.size) {
            (Some(r), _, _) => r,
            (None, None, None) => Region::centered(default),
            _ => self.window(),
        }
    }

    fn shape(&self, default: &str) -> Result<Shape> {
        let spec = self.shape.as_deref().unwrap_or(default);
        let bad = || Error::Precondition(format!("bad shape {spec:?}"));
        if let Some(size) = spec.strip_prefix("block:") {
            let (w, h) = parse_size(size).map_err(|_| bad())?;
            Shape::block(w, h)
        } else if let Some(rest) = spec.strip_prefix("scattered:") {
            let (n, step) = parse_pair(rest, ':').map_err(|_| bad())?;
            Shape::scattered_square(n, step)
        } else {
            Shape::parse(&read(spec)?)
        }
    }

    /// Parses a source descriptor:
    /// `sublattice`, `sublattice-h`, `sublattice-v`, `fourdot:R/S`,
    /// `ca:RULE:SEED`, `torus:PATH`, `zlift:DESC`, or a `%grid` file path.
    fn source(&self, desc: &str) -> Result<ConfigSource> {
        let bad = |msg: &str| Error::Source(format!("{desc:?}: {msg}"));
        let bits = |w: &str| -> Result<Vec<u8>> {
            w.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(|| bad("words are digit strings")))
                .collect()
        };
        match desc.split_once(':').unwrap_or((desc, "")) {
            ("sublattice", "") => Ok(ConfigSource::sublattice_lines(LineFamily::Both)),
            ("sublattice-h", "") => Ok(ConfigSource::sublattice_lines(LineFamily::Horizontal)),
            ("sublattice-v", "") => Ok(ConfigSource::sublattice_lines(LineFamily::Vertical)),
            ("fourdot", words) => {
                let (r, s) = words.split_once('/').ok_or_else(|| bad("expected fourdot:R/S"))?;
                ConfigSource::fourdot(&bits(r)?, &bits(s)?)
            }
            ("ca", rest) => {
                let (rule, seed) = rest.rsplit_once(':').ok_or_else(|| bad("expected ca:RULE:SEED"))?;
                let seed: Vec<i64> = if seed.contains(',') {
                    seed.split(',')
                        .map(|t| t.trim().parse().map_err(|_| bad("bad seed")))
                        .collect::<Result<_>>()?
                } else {
                    bits(seed)?.into_iter().map(i64::from).collect()
                };
                ConfigSource::additive_ca(&self.poly(rule)?, &seed)
            }
            ("zlift", inner) => ConfigSource::zlift(self.source(inner)?),
            ("torus", path) => Ok(ConfigSource::torus(Window::parse_grid(&read(path)?)?)),
            _ => Ok(ConfigSource::torus(Window::parse_grid(&read(desc)?)?)),
        }
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Source(format!("cannot read {path}: {e}")))
}

/// Report text plus exit code.
type Outcome = (String, u8);

fn poly_cmd(g: &Global, cmd: &PolyCmd) -> Result<Outcome> {
    let mut out = String::new();
    let mut code = 0;
    match cmd {
        PolyCmd::Info { f } => {
            let f = g.poly(f)?;
            writeln!(out, "polynomial: {f}").unwrap();
            writeln!(out, "ring: {}", f.ring()).unwrap();
            writeln!(out, "terms: {}", f.num_terms()).unwrap();
            let support: Vec<String> = f.support().iter().map(|(i, j)| format!("({i},{j})")).collect();
            writeln!(out, "support: {}", support.join(" ")).unwrap();
            let (proper, m) = f.monomial_normal_form()?;
            writeln!(out, "normal form: {proper}").unwrap();
            writeln!(out, "monomial: {m}").unwrap();
            let polygon = newton_polygon(&f)?;
            let vs: Vec<String> = polygon.vertices().iter().map(|(i, j)| format!("({i},{j})")).collect();
            writeln!(out, "newton polygon: {}", vs.join(" ")).unwrap();
            for e in polygon.edges() {
                writeln!(
                    out,
                    "edge: ({},{}) -> ({},{}) normal ({},{})",
                    e.start.0, e.start.1, e.end.0, e.end.1, e.normal.0, e.normal.1
                )
                .unwrap();
            }
            let dirs: Vec<String> = candidate_line_directions(&f)?.iter().map(|d| d.to_string()).collect();
            writeln!(out, "candidate directions: {}", if dirs.is_empty() { "none".into() } else { dirs.join(" ") })
                .unwrap();
            writeln!(out, "sublattice index: {}", sublattice_index(&f)?).unwrap();
            if f.ring().is_field() {
                for e in line_factor_profile(&f)?.candidates() {
                    writeln!(out, "line content {}: {}", e.direction, e.content).unwrap();
                }
            }
        }
        PolyCmd::Classify { f } => {
            let class = classify_nivat(&g.poly(f)?)?;
            writeln!(out, "class: {class}").unwrap();
            writeln!(out, "verdict: {}", class.verdict()).unwrap();
            if matches!(class, NivatClass::MultiDirection { .. }) {
                code = 2;
            }
        }
        PolyCmd::Resultant { f, g: h } => {
            let r = resultant(&g.poly(f)?, &g.poly(h)?, g.axis)?;
            writeln!(out, "Res_{}: {r}", g.axis).unwrap();
        }
        PolyCmd::Bezout { f, g: h } => {
            writeln!(out, "{}", bezout_cofactors(&g.poly(f)?, &g.poly(h)?, g.axis)?).unwrap();
        }
        PolyCmd::MemberLedrappier { g: h } => {
            let m = ledrappier_ideal_membership(&LaurentPoly::parse(Ring::F2, h)?)?;
            writeln!(out, "member: {}", m.member).unwrap();
            writeln!(out, "witness: {}", m.witness).unwrap();
        }
    }
    Ok((out, code))
}

fn config_cmd(g: &Global, cmd: &ConfigCmd) -> Result<Outcome> {
    let mut out = String::new();
    let mut code = 0;
    match cmd {
        ConfigCmd::Gen { source } => {
            out = g.source(source)?.generate_window(g.window())?.to_grid_text();
        }
        ConfigCmd::Check { f, source } => {
            let src = g.source(source)?;
            let f = LaurentPoly::parse(src.ring(), f)?;
            let cert = check_annihilates(&f, &src, g.window())?;
            writeln!(out, "polynomial: {f}").unwrap();
            writeln!(out, "source: {src}").unwrap();
            writeln!(out, "result: {cert}").unwrap();
            if !cert.is_verified() {
                code = 1;
            }
        }
        ConfigCmd::Periods { source } => {
            let win = g.source(source)?.generate_window(g.window())?;
            let periods = detect_periods(&win, g.bound);
            writeln!(out, "window: {} (bound {}; window evidence only)", win.region(), g.bound).unwrap();
            if periods.is_empty() {
                writeln!(out, "no period found").unwrap();
            }
            for e in periods {
                writeln!(out, "({},{}) overlap {}", e.vector.0, e.vector.1, e.overlap).unwrap();
            }
        }
        ConfigCmd::Decompose4 { source, anchor } => {
            let win = g.source(source)?.generate_window(g.window())?;
            let dec = fourdot_decompose_at(&win, *anchor)?;
            writeln!(out, "anchor: ({},{})", anchor.0, anchor.1).unwrap();
            for (name, w) in [("c", &win), ("h", &dec.h), ("v", &dec.v), ("d", &dec.d)] {
                writeln!(out, "{name}:").unwrap();
                out.push_str(&w.to_grid_text());
            }
            writeln!(out, "c = h + v over F_2: {}", dec.field_identity).unwrap();
            writeln!(out, "c = h + v - 2d over Z: {}", dec.integer_identity).unwrap();
        }
        ConfigCmd::Counterexample => {
            let src = sublattice_counterexample();
            let win = src.generate_window(g.window())?;
            writeln!(out, "source: {src}").unwrap();
            out.push_str(&win.to_grid_text());
            let big = Region::centered(128);
            let cert = check_annihilates(&sublattice_four_dot(Ring::F2), &src, big)?;
            writeln!(out, "annihilated by (1 + X^2)(1 + Y^2): {cert}").unwrap();
            let count = complexity_count(&src, &Shape::scattered_square(3, 2)?, Region::centered(64))?;
            writeln!(out, "scattered 3x3 shape on {}: {count}", Region::centered(64)).unwrap();
            let periods = detect_periods(&src.generate_window(big)?, g.bound);
            writeln!(out, "periods up to {} on {big}: {}", g.bound, periods.len()).unwrap();
        }
    }
    Ok((out, code))
}

fn complexity_cmd(g: &Global, cmd: &ComplexityCmd) -> Result<Outcome> {
    let mut out = String::new();
    let mut code = 0;
    let region = g.sample_region(64);
    let shape = g.shape("block:2x2")?;
    match cmd {
        ComplexityCmd::Count { source } => {
            let src = g.source(source)?;
            writeln!(out, "source: {src}").unwrap();
            writeln!(out, "shape: {shape}").unwrap();
            writeln!(out, "region: {region}").unwrap();
            writeln!(out, "{}", complexity_count(&src, &shape, region)?).unwrap();
        }
        ComplexityCmd::Annihilator { source } => {
            let src = g.source(source)?;
            writeln!(out, "source: {src}").unwrap();
            writeln!(out, "shape: {shape}").unwrap();
            writeln!(out, "region: {region}").unwrap();
            match annihilator_from_kernel(&src, &shape, region, g.ring()?)? {
                Some(k) => {
                    writeln!(out, "annihilator: {}", k.polynomial()).unwrap();
                    writeln!(out, "route: {}", k.route).unwrap();
                    writeln!(out, "certificate: {}", k.certificate).unwrap();
                }
                None => {
                    writeln!(out, "annihilator: none (pattern matrix has full rank)").unwrap();
                    code = 3;
                }
            }
        }
    }
    Ok((out, code))
}

fn pipeline_cmd(g: &Global, cmd: &PipelineCmd) -> Result<Outcome> {
    let PipelineCmd::Run { example, source, f } = cmd;
    let opts = PipelineOptions { bound: g.bound, ..PipelineOptions::default() };
    let report = match (example, source, f) {
        (Some(name), _, _) => worked_example(name)
            .map_err(|_| Error::Source(format!("expected one of {}", WORKED_EXAMPLE_NAMES.join(", "))))?
            .run(opts)?,
        (None, Some(source), Some(f)) => {
            let src = g.source(source)?;
            let f = LaurentPoly::parse(src.ring(), f)?;
            let region = match src.torus_view() {
                Some(t) if g.region.is_none() && g.size.is_none() => t.region(),
                _ => g.sample_region(64),
            };
            nivat_pipeline(&src, &f, &g.shape("block:3x3")?, region, opts)?
        }
        _ => unreachable!("clap enforces the argument combinations"),
    };
    Ok((report.to_string(), report.verdict.exit_code() as u8))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let g = &cli.global;
    let result = match &cli.command {
        Command::Poly(cmd) => poly_cmd(g, cmd),
        Command::Config(cmd) => config_cmd(g, cmd),
        Command::Complexity(cmd) => complexity_cmd(g, cmd),
        Command::Pipeline(cmd) => pipeline_cmd(g, cmd),
    };
    match result {
        Ok((text, code)) => {
            match &g.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(1);
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
