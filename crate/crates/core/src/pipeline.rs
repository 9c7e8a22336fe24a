//! End-to-end periodicity analysis of a configuration in an algebraic
//! subshift, and ideal membership for the Ledrappier polynomial.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::{ledrappier, LaurentPoly};
use crate::complexity::{complexity_count, kernel_annihilators, Shape};
use crate::config::{
    check_annihilates, close_ca_torus, detect_periods, sublattice_counterexample, ConfigSource,
    Region,
};
use crate::elimination::{coprime_periodicity, poly_gcd};
use crate::error::{Error, Result};
use crate::linefactors::{classify_nivat, line_direction_of, NivatClass};
use crate::newton::Direction;
use crate::ring::Ring;
use crate::Point;

/// Membership of `g` in the principal ideal `(1 + X + Y)` over `F_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedrappierMembership {
    pub member: bool,
    /// `g` with `X := 1 + Y` after monomial normalization; zero iff member.
    pub witness: LaurentPoly,
}

/// Decides `g in (1 + X + Y)` by eliminating `X = 1 + Y` from the
/// normalized `g`.
pub fn ledrappier_ideal_membership(g: &LaurentPoly) -> Result<LedrappierMembership> {
    g.ring().require_same(Ring::F2)?;
    let (proper, _) = g.monomial_normal_form()?;
    let root = LaurentPoly::parse(Ring::F2, "1 + Y")?;
    let witness = proper.substitute_x(&root)?;
    Ok(LedrappierMembership { member: witness.is_zero(), witness })
}

/// The conclusion of a pipeline run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Two independent periods, proved by elimination or seen on the window.
    TwoPeriodic { periods: Vec<Point> },
    PeriodicInDirection(Direction),
    /// No period up to the search bound on the sampled window.
    NonPeriodicEvidence,
    Inconclusive,
}

impl Verdict {
    /// Process exit code: 0 periodic, 3 inconclusive, 4 non-periodic.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::TwoPeriodic { .. } | Verdict::PeriodicInDirection(_) => 0,
            Verdict::Inconclusive => 3,
            Verdict::NonPeriodicEvidence => 4,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::TwoPeriodic { periods } => {
                let ps: Vec<String> = periods.iter().map(|(a, b)| format!("({a},{b})")).collect();
                write!(f, "two-periodic evidence, periods {}", ps.join(" and "))
            }
            Verdict::PeriodicInDirection(u) => write!(f, "periodic-in-direction {u}"),
            Verdict::NonPeriodicEvidence => f.write_str("non-periodic evidence"),
            Verdict::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step {
    pub name: String,
    pub lines: Vec<String>,
    pub outcome: String,
}

/// Fixed-order record of a pipeline run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PipelineReport {
    pub source: String,
    pub polynomial: LaurentPoly,
    pub shape: Shape,
    pub region: Region,
    pub steps: Vec<Step>,
    pub verdict: Verdict,
}

impl fmt::Display for PipelineReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "source: {}", self.source)?;
        writeln!(f, "polynomial: {} over {}", self.polynomial, self.polynomial.ring())?;
        writeln!(f, "shape: {} (|D| = {})", self.shape, self.shape.len())?;
        writeln!(f, "region: {}", self.region)?;
        for (k, step) in self.steps.iter().enumerate() {
            writeln!(f, "[{}] {}", k + 1, step.name)?;
            for line in &step.lines {
                writeln!(f, "    {line}")?;
            }
            writeln!(f, "    => {}", step.outcome)?;
        }
        writeln!(f, "verdict: {}", self.verdict)
    }
}

/// Options that do not change the meaning of the run.
#[derive(Clone, Copy, Debug)]
pub struct PipelineOptions {
    /// Search bound for window periods.
    pub bound: usize,
    /// Largest period looked for when inverting univariate annihilators.
    pub period_cap: u64,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { bound: 32, period_cap: 1 << 12 }
    }
}

enum Algebraic {
    TwoPeriodic(Vec<Point>),
    Direction(Direction),
    Blocked,
}

/// Runs the chain: annihilation check, complexity, kernel annihilator over
/// the integers, reduction mod `p`, line-factor analysis of `f`, elimination
/// against each reduced annihilator, and a window period cross-check.
///
/// When elimination is blocked the verdict falls back to the window periods.
pub fn nivat_pipeline(
    src: &ConfigSource,
    f: &LaurentPoly,
    shape: &Shape,
    region: Region,
    opts: PipelineOptions,
) -> Result<PipelineReport> {
    let ring = src.ring();
    ring.require_field()?;
    f.ring().require_same(ring)?;
    let mut steps = Vec::new();

    let cert = check_annihilates(f, src, region)?;
    if !cert.is_verified() {
        return Err(Error::Precondition(format!("f does not annihilate the source: {cert}")));
    }
    steps.push(Step {
        name: "annihilation of the source by f".into(),
        lines: vec![format!("certificate: {cert}")],
        outcome: "verified".into(),
    });

    let count = complexity_count(src, shape, region)?;
    steps.push(Step {
        name: "pattern complexity".into(),
        lines: vec![count.to_string()],
        outcome: if count.is_low { "low".into() } else { "high".into() },
    });

    let kernel = kernel_annihilators(src, shape, region, Ring::Z)?;
    let mut lines: Vec<String> = kernel
        .iter()
        .map(|k| format!("g = {} ({}; {})", k.polynomial(), k.route, k.certificate))
        .collect();
    let verified: Vec<&LaurentPoly> = kernel
        .iter()
        .filter(|k| k.certificate.is_verified())
        .map(|k| k.polynomial())
        .collect();
    if kernel.is_empty() {
        lines.push("the pattern matrix has full rank".into());
    }
    steps.push(Step {
        name: "integer annihilator from the pattern kernel".into(),
        lines,
        outcome: format!("{} verified annihilator(s)", verified.len()),
    });

    let reduced: Vec<LaurentPoly> = verified
        .iter()
        .map(|g| g.reduce_mod_p(ring))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .filter(|g| !g.is_zero())
        .collect();
    steps.push(Step {
        name: format!("reduction modulo {}", ring.modulus()),
        lines: reduced.iter().map(|g| format!("g mod {} = {g}", ring.modulus())).collect(),
        outcome: format!("{} nonzero reduction(s)", reduced.len()),
    });

    let class = classify_nivat(f)?;
    steps.push(Step {
        name: "line factors of f".into(),
        lines: vec![class.to_string(), class.verdict()],
        outcome: class.name().into(),
    });

    let (algebraic, lines) = eliminate(f, &reduced, src, region, opts)?;
    steps.push(Step {
        name: "elimination".into(),
        lines,
        outcome: match &algebraic {
            Algebraic::TwoPeriodic(_) => "two-periodic".into(),
            Algebraic::Direction(u) => format!("periodic in direction {u}"),
            Algebraic::Blocked if reduced.is_empty() => "skipped".into(),
            Algebraic::Blocked => "blocked: every gcd with f is a non-line factor".into(),
        },
    });

    // Torus sources are sampled on a doubled fundamental domain so that every
    // true period has overlap.
    let (win, bound) = match src.torus_view() {
        Some(t) => {
            let r = Region::new(t.origin(), 2 * t.width(), 2 * t.height());
            (src.generate_window(r)?, opts.bound.max(t.width()).max(t.height()))
        }
        None => (src.generate_window(region)?, opts.bound),
    };
    let periods = detect_periods(&win, bound);
    let window_verdict = window_verdict(&periods);
    let mut lines = vec![format!("window {} with bound {bound}", win.region())];
    lines.push(match periods.iter().filter(|e| e.vector > (0, 0)).take(8).map(|e| {
        format!("({},{})", e.vector.0, e.vector.1)
    }).collect::<Vec<_>>() {
        v if v.is_empty() => "no period found".into(),
        v => format!("{} vector(s), first: {}", periods.len() / 2, v.join(" ")),
    });
    steps.push(Step {
        name: "window periods".into(),
        lines,
        outcome: window_verdict.to_string(),
    });

    let verdict = match algebraic {
        Algebraic::TwoPeriodic(periods) => Verdict::TwoPeriodic { periods },
        Algebraic::Direction(u) => Verdict::PeriodicInDirection(u),
        Algebraic::Blocked if verified.is_empty() => Verdict::Inconclusive,
        Algebraic::Blocked => window_verdict,
    };
    if let (Verdict::NonPeriodicEvidence, NivatClass::MultiDirection { .. }) = (&verdict, &class) {
        steps.push(Step {
            name: "note".into(),
            lines: vec![
                "f has line factors in several directions, so low complexity does not force periodicity".into(),
            ],
            outcome: "sublattice escape".into(),
        });
    }
    Ok(PipelineReport {
        source: src.to_string(),
        polynomial: f.clone(),
        shape: shape.clone(),
        region,
        steps,
        verdict,
    })
}

fn eliminate(
    f: &LaurentPoly,
    reduced: &[LaurentPoly],
    src: &ConfigSource,
    region: Region,
    opts: PipelineOptions,
) -> Result<(Algebraic, Vec<String>)> {
    let mut lines = Vec::new();
    let mut directions = BTreeSet::new();
    for g in reduced {
        match coprime_periodicity(f, g) {
            Ok(cp) => {
                lines.push(format!("f and {g} are coprime"));
                lines.push(format!("Y-relation: {}", cp.vertical_annihilator()));
                lines.push(format!("X-relation: {}", cp.horizontal_annihilator()));
                if let Some((a, b)) = cp.periods(opts.period_cap) {
                    let ring = f.ring();
                    let xa = LaurentPoly::from_terms(ring, [((a as i64, 0), 1), ((0, 0), -1)]);
                    let yb = LaurentPoly::from_terms(ring, [((0, b as i64), 1), ((0, 0), -1)]);
                    let cx = check_annihilates(&xa, src, region.expand((-(a as i64), 0), (0, 0)))?;
                    let cy = check_annihilates(&yb, src, region.expand((0, -(b as i64)), (0, 0)))?;
                    lines.push(format!("X^{a} - 1: {cx}"));
                    lines.push(format!("Y^{b} - 1: {cy}"));
                    if cx.is_verified() && cy.is_verified() {
                        return Ok((Algebraic::TwoPeriodic(vec![(a as i64, 0), (0, b as i64)]), lines));
                    }
                } else {
                    lines.push(format!("periods exceed {}", opts.period_cap));
                }
            }
            Err(Error::CommonFactor(_)) => {
                let h = poly_gcd(f, g)?;
                match line_direction_of(&h)? {
                    Some(u) => {
                        lines.push(format!("gcd(f, {g}) = {h}, a line polynomial in direction {u}"));
                        directions.insert(u);
                    }
                    None => lines.push(format!("gcd(f, {g}) = {h}, not a line polynomial")),
                }
            }
            Err(e) => return Err(e),
        }
    }
    Ok(match directions.len() {
        0 => (Algebraic::Blocked, lines),
        1 => (Algebraic::Direction(*directions.iter().next().unwrap()), lines),
        _ => {
            lines.push("periodic in two independent directions".into());
            let periods = directions.iter().map(|u| u.vector()).collect();
            (Algebraic::TwoPeriodic(periods), lines)
        }
    })
}

fn window_verdict(periods: &[crate::config::PeriodEvidence]) -> Verdict {
    // Shortest vectors first, so the reported pair is the most convincing.
    let mut positive: Vec<Point> = periods.iter().map(|e| e.vector).filter(|&v| v > (0, 0)).collect();
    positive.sort_by_key(|&(x, y)| (x.abs().max(y.abs()), x, y));
    let Some(&first) = positive.first() else {
        return Verdict::NonPeriodicEvidence;
    };
    match positive.iter().find(|v| v.0 * first.1 != v.1 * first.0) {
        Some(&second) => Verdict::TwoPeriodic { periods: vec![first, second] },
        None => Verdict::PeriodicInDirection(Direction::new(first.0, first.1).expect("nonzero period")),
    }
}

/// A ready-made pipeline input.
#[derive(Clone, Debug)]
pub struct WorkedExample {
    pub name: &'static str,
    pub source: ConfigSource,
    pub polynomial: LaurentPoly,
    pub shape: Shape,
    pub region: Region,
}

pub const WORKED_EXAMPLE_NAMES: [&str; 3] = ["fourdot", "counterexample", "ledrappier-torus"];

/// The named worked examples: a periodic element of the four-dot subshift,
/// the sublattice counterexample, and a Ledrappier torus.
pub fn worked_example(name: &str) -> Result<WorkedExample> {
    let f2 = |s: &str| LaurentPoly::parse(Ring::F2, s);
    Ok(match name {
        "fourdot" => WorkedExample {
            name: "fourdot",
            source: ConfigSource::fourdot(&[0, 1], &[0, 0, 1, 1])?,
            polynomial: f2("1 + X + Y + X*Y")?,
            shape: Shape::block(4, 4)?,
            region: Region::centered(64),
        },
        "counterexample" => WorkedExample {
            name: "counterexample",
            source: sublattice_counterexample(),
            polynomial: f2("1 + X^2 + Y^2 + X^2*Y^2")?,
            shape: Shape::scattered_square(3, 2)?,
            region: Region::centered(128),
        },
        "ledrappier-torus" => {
            let rule = f2("1 + X")?;
            let source = close_ca_torus(&rule, &[1, 1, 0], 64)?
                .ok_or_else(|| Error::Source("seed does not close into a torus".into()))?;
            let grid = source.torus_view().expect("closed CA orbits are tori");
            WorkedExample {
                name: "ledrappier-torus",
                source,
                polynomial: ledrappier(Ring::F2),
                shape: Shape::block(3, 3)?,
                region: grid.region(),
            }
        }
        _ => {
            return Err(Error::Source(format!(
                "unknown example {name:?}; expected one of {}",
                WORKED_EXAMPLE_NAMES.join(", ")
            )))
        }
    })
}

impl WorkedExample {
    pub fn run(&self, opts: PipelineOptions) -> Result<PipelineReport> {
        nivat_pipeline(&self.source, &self.polynomial, &self.shape, self.region, opts)
    }
}
