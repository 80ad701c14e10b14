use std::collections::BTreeMap;
use std::time::Instant;

use monocurve::closedform::{
    self, betti_b1, betti_bn, compare_displayed, gor4_total_shift, shifts_gor4, BettiTable, CaseTag,
};
use monocurve::curve::{self, ArithmeticSequence};
use monocurve::exactalg::{Field, PolyRing, Polynomial};
use monocurve::homology::{self, verify_complex, GradedComplex, Witness};
use monocurve::oracle::{ideal_equal, minimal_resolution, toric_ideal, verify_exactness, OracleConfig};
use rayon::prelude::*;
use serde::Serialize;

use crate::args::MethodChoice;
use crate::config::{Config, FieldChoice};
use crate::report::{
    betti_steps, CellStatus, CheckOutcome, MatrixDump, Method, RunReport, ScanCell, ScanReport, SequenceEcho,
};
use crate::CliError;

pub fn field_name(choice: FieldChoice) -> String {
    match choice {
        FieldChoice::Rational => "q".into(),
        FieldChoice::Prime(p) => format!("fp:{p}"),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct GeneratorEntry {
    pub label: String,
    pub degree: i64,
    pub poly: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct GensReport {
    pub sequence: SequenceEcho,
    pub count: usize,
    pub generators: Vec<GeneratorEntry>,
}

impl GensReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let s = &self.sequence;
        let mut out = format!("sequence: m0={} d={} n={} (a={}, b={})\n", s.m0, s.d, s.n, s.a, s.b);
        out.push_str(&format!("{} generators\n", self.count));
        for g in &self.generators {
            out.push_str(&format!("  {:<12} deg {:>6}  {}\n", g.label, g.degree, g.poly));
        }
        out
    }
}

pub fn gens(m0: u64, d: u64, n: usize) -> Result<GensReport, CliError> {
    let seq = ArithmeticSequence::validate(m0, d, n)?;
    let ring = seq.ring::<monocurve::Rational>();
    let set = curve::generators(&seq, &ring);
    let generators = set
        .all()
        .iter()
        .map(|g| GeneratorEntry { label: g.label.to_string(), degree: g.degree, poly: ring.display(&g.poly) })
        .collect();
    Ok(GensReport { sequence: SequenceEcho::from(&seq), count: set.len(), generators })
}

#[derive(Clone, Debug)]
pub struct ResolveOptions {
    pub method: MethodChoice,
    pub verify: bool,
    pub emit_matrices: bool,
    pub timing: bool,
    pub config: Config,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions { method: MethodChoice::Auto, verify: false, emit_matrices: false, timing: false, config: Config::default() }
    }
}

struct Timer {
    enabled: bool,
    phases: BTreeMap<String, u64>,
}

impl Timer {
    fn run<T>(&mut self, phase: &str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            *self.phases.entry(phase.into()).or_default() += start.elapsed().as_millis() as u64;
        }
        out
    }
}

fn pick_method(seq: &ArithmeticSequence, choice: MethodChoice) -> Result<Method, CliError> {
    let (b, n) = (seq.b(), seq.n());
    let gor4 = b == 2 && n == 4;
    let wrong = |what: &str| CliError::Invalid(format!("method {what} does not apply: b = {b}, n = {n}"));
    Ok(match choice {
        MethodChoice::Auto if b == 1 => Method::B1En,
        MethodChoice::Auto if b as usize == n => Method::BnCone,
        MethodChoice::Auto if gor4 => Method::Gor4Closedform,
        MethodChoice::Auto | MethodChoice::Oracle => Method::Oracle,
        MethodChoice::En if b == 1 => Method::B1En,
        MethodChoice::En => return Err(wrong("en (needs b = 1)")),
        MethodChoice::Cone if b as usize == n => Method::BnCone,
        MethodChoice::Cone => return Err(wrong("cone (needs b = n)")),
        MethodChoice::Closedform if gor4 => Method::Gor4Closedform,
        MethodChoice::Closedform => return Err(wrong("closedform (needs b = 2, n = 4)")),
    })
}

fn witness_text(w: Option<Witness>) -> String {
    match w {
        Some(w) => format!("d_{} entry ({}, {})", w.step, w.row, w.col),
        None => "unspecified".into(),
    }
}

fn complex_checks<F: Field>(ring: &PolyRing<F>, c: &GradedComplex<F>, checks: &mut BTreeMap<String, CheckOutcome>) {
    let r = verify_complex(ring, c);
    for (name, res) in [("dd_zero", r.dd_zero), ("homogeneous", r.homogeneous), ("minimal", r.minimal)] {
        checks.insert(name.into(), CheckOutcome::from_bool(res.passed, || witness_text(res.witness)));
    }
}

fn exactness_check<F: Field>(
    ring: &PolyRing<F>,
    c: &GradedComplex<F>,
    gens: &[Polynomial<F>],
    cfg: &OracleConfig,
) -> Result<CheckOutcome, CliError> {
    let r = verify_exactness(ring, c, gens, cfg)?;
    Ok(if !r.ideal_matches {
        CheckOutcome::fail("entries of d_1 do not generate the ideal")
    } else if let Some(step) = r.first_failure() {
        let idx = r.steps.iter().find(|s| s.step == step).and_then(|s| s.witness).unwrap_or(0);
        CheckOutcome::fail(format!("syzygy {idx} of d_{step} is not a boundary"))
    } else {
        CheckOutcome::pass()
    })
}

fn table_check(ours: &BettiTable, theirs: &BettiTable, what: &str) -> CheckOutcome {
    CheckOutcome::from_bool(ours.same_shifts(theirs), || {
        let step = (0..=ours.length().max(theirs.length())).find(|&s| ours.step(s) != theirs.step(s)).unwrap_or(0);
        format!("step {step}: {:?} vs {what} {:?}", ours.step(step), theirs.step(step))
    })
}

fn betti_check(got: &[u64], expected: &[u64]) -> CheckOutcome {
    CheckOutcome::from_bool(got == expected, || format!("got {got:?}, formula gives {expected:?}"))
}

fn dump<F: Field>(ring: &PolyRing<F>, c: &GradedComplex<F>) -> Vec<MatrixDump> {
    (1..=c.length()).map(|s| MatrixDump { step: s, rows: c.d(s).to_strings(ring) }).collect()
}

/// Runs `resolve` (and `verify` when `opts.verify`) over the field `F`.
pub fn resolve<F: Field>(m0: u64, d: u64, n: usize, field: &str, opts: &ResolveOptions) -> Result<RunReport, CliError> {
    let seq = ArithmeticSequence::validate(m0, d, n)?;
    let method = pick_method(&seq, opts.method)?;
    let ring = seq.ring::<F>();
    let gens = curve::generators(&seq, &ring).polys();
    let mut timer = Timer { enabled: opts.timing, phases: BTreeMap::new() };
    let mut checks = BTreeMap::new();
    let cfg = opts.config.oracle_config();

    let (table, complex) = match method {
        Method::B1En | Method::BnCone => {
            let c = timer.run("construct", || -> Result<_, CliError> {
                Ok(if method == Method::B1En {
                    homology::resolution_b1(&seq, &ring)?
                } else {
                    homology::resolution_bn(&seq, &ring)?.trimmed()
                })
            })?;
            let case = if method == Method::B1En { CaseTag::B1 } else { CaseTag::Bn };
            let table = BettiTable::from_complex(case, &c);
            let formula = if method == Method::B1En { betti_b1(n) } else { betti_bn(n) };
            checks.insert("betti_formula".into(), betti_check(&table.betti(), &formula));
            if opts.verify {
                let displayed = if method == Method::B1En {
                    closedform::displayed_shifts_b1(&seq)?
                } else {
                    closedform::displayed_shifts_bn(&seq)?
                };
                let diff = compare_displayed(&table, &displayed);
                checks.insert(
                    "displayed_shifts".into(),
                    CheckOutcome::from_bool(diff.is_empty(), || {
                        let first = &diff[0];
                        match &first.displayed {
                            Some(src) => format!("displayed summand {src} (step {}, shift {}) unmatched", first.step, first.shift),
                            None => format!("shift {} at step {} missing from the display", first.shift, first.step),
                        }
                    }),
                );
            }
            (table, Some(c))
        }
        Method::Gor4Closedform => {
            let table = timer.run("construct", || shifts_gor4(seq.a(), seq.d()))?;
            checks.insert("betti_formula".into(), betti_check(&table.betti(), &[1, 9, 16, 9, 1]));
            let total = gor4_total_shift(seq.a(), seq.d())?;
            checks.insert(
                "gor4_symmetry".into(),
                CheckOutcome::from_bool(table.is_palindromic(total), || format!("not symmetric under x -> {total} - x")),
            );
            (table, None)
        }
        Method::Oracle => {
            let c = timer.run("oracle", || minimal_resolution(&ring, &gens, &cfg))?;
            (BettiTable::from_complex(CaseTag::Oracle, &c), Some(c))
        }
    };

    let mut oracle_complex = None;
    if method == Method::Gor4Closedform || (opts.verify && method != Method::Oracle) {
        let c = timer.run("oracle", || minimal_resolution(&ring, &gens, &cfg))?;
        let theirs = BettiTable::from_complex(CaseTag::Oracle, &c);
        checks.insert("oracle_shifts".into(), table_check(&table, &theirs, "oracle"));
        oracle_complex = Some(c);
    }

    if opts.verify {
        let target = complex.as_ref().or(oracle_complex.as_ref()).expect("some complex is available");
        timer.run("verify_complex", || complex_checks(&ring, target, &mut checks));
        let ex = timer.run("exactness", || exactness_check(&ring, target, &gens, &cfg))?;
        checks.insert("exactness".into(), ex);
        let same = timer.run("ideal_identity", || -> Result<bool, CliError> {
            let toric = toric_ideal::<F>(&seq, &cfg)?;
            Ok(ideal_equal(&ring, &gens, toric.generators(), &cfg)?)
        })?;
        checks.insert(
            "ideal_identity".into(),
            CheckOutcome::from_bool(same, || "generators and toric ideal differ".into()),
        );
    }

    let matrices = if opts.emit_matrices {
        complex.as_ref().or(oracle_complex.as_ref()).map(|c| dump(&ring, c))
    } else {
        None
    };

    Ok(RunReport {
        sequence: SequenceEcho::from(&seq),
        method,
        field: field.into(),
        betti: betti_steps(&table),
        checks,
        timing_ms: timer.phases,
        matrices,
    })
}

/// Oracle Betti vector of one scan cell.
pub fn scan_cell<F: Field>(n: usize, b: u64, a: u64, d: u64, config: &Config) -> Result<ScanCell, CliError> {
    let m0 = a * n as u64 + b;
    let seq = match ArithmeticSequence::validate(m0, d, n) {
        Ok(s) => s,
        Err(e) => {
            return Ok(ScanCell { a, d, m0, status: CellStatus::Invalid, betti: None, reason: Some(e.to_string()) })
        }
    };
    let ring = seq.ring::<F>();
    let gens = curve::generators(&seq, &ring).polys();
    match minimal_resolution(&ring, &gens, &config.oracle_config()).map_err(CliError::from) {
        Ok(c) => Ok(ScanCell {
            a,
            d,
            m0,
            status: CellStatus::Ok,
            betti: Some(BettiTable::from_complex(CaseTag::Oracle, &c).betti()),
            reason: None,
        }),
        Err(CliError::Resource(m)) => Ok(ScanCell { a, d, m0, status: CellStatus::Skipped, betti: None, reason: Some(m) }),
        Err(e) => Err(e),
    }
}

/// The scan grid, computed in parallel and assembled in `(a, d)` order.
pub fn scan<F: Field>(
    n: usize,
    b: u64,
    a_range: std::ops::RangeInclusive<u64>,
    d_range: std::ops::RangeInclusive<u64>,
    field: &str,
    config: &Config,
) -> Result<ScanReport, CliError> {
    if n < 2 {
        return Err(CliError::Invalid("n must be at least 2".into()));
    }
    if b == 0 || b > n as u64 {
        return Err(CliError::Invalid(format!("b = {b} must lie in [1, {n}]")));
    }
    if *a_range.start() == 0 {
        return Err(CliError::Invalid("a must be at least 1".into()));
    }
    let grid: Vec<(u64, u64)> = a_range.flat_map(|a| d_range.clone().map(move |d| (a, d))).collect();
    let cells = grid
        .par_iter()
        .map(|&(a, d)| scan_cell::<F>(n, b, a, d, config))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ScanReport::from_cells(n, b, field.into(), cells))
}
