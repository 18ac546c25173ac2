use std::fmt;
use std::io::{Read, Write};
use std::path::Path;

use num_traits::ToPrimitive;

use zopoly::exact::{factorial, Int, Rat};
use zopoly::extremal::{alon_vu, alon_vu_01, chi, huge_coefficient_simplex, verify_huge_facet};
use zopoly::generators::{
    centered_sum, classify, correlation_polytope, cross_polytope, cube, cut_polytope, family_fd,
    family_fd_free_positions, half_cube, metric_polytope, simplex_corner, simplex_standard,
    simplicial_2d_search,
};
use zopoly::hull::{
    connectivity_at_least, diameter, expansion_holds, facets_by_span, graph, incidence,
    neighborliness, normalized_volume, simpliciality, vrep_to_hrep, DEFAULT_FACE_LIMIT,
    DEFAULT_SPAN_LIMIT, DEFAULT_SUBSET_LIMIT,
};
use zopoly::pm_io::{self, PolyFile, Section};
use zopoly::polytope::is_centered;
use zopoly::randlab::{
    estimate_pd, exact_md, expected_det_sq, hadamard_verdict, komlos_lower_bound,
    random_polytope_experiment, rho_search, DetSqMode, DetSqResult, SeededRng, SignModel,
};
use zopoly::{Error, HRep, VertexSet01};

use crate::report::Report;
use crate::{Cli, Command, Experiment, Family, Model, Oracle};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    /// A long-running tier was requested without `--long`.
    Long(String),
    Lib(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 1,
            CliError::Long(_) => 2,
            CliError::Lib(Error::GuardExceeded { .. }) => 2,
            CliError::Lib(Error::Invariant(_)) => 3,
            CliError::Lib(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
            CliError::Long(what) => write!(f, "{what} is in the long tier; pass --long"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read_input(path: Option<&Path>) -> Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => {
            text = std::fs::read_to_string(p)
                .map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
        }
        _ => {
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn emit(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::write(p, text)
            .map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}

fn read_poly(path: Option<&Path>) -> Result<PolyFile> {
    Ok(pm_io::parse(&read_input(path)?)?)
}

fn require_long(long: bool, what: String) -> Result<()> {
    if long {
        Ok(())
    } else {
        Err(CliError::Long(what))
    }
}

pub fn run(cli: Cli) -> Result<()> {
    let format = cli.format;
    match cli.command {
        Command::Gen { family, output } => {
            let file = generate(family)?;
            emit(output.as_deref(), &pm_io::write(&file))
        }
        Command::Hull {
            input,
            oracle,
            output,
        } => {
            let p = pm_io::to_vertex_set(&read_poly(input.as_deref())?)?;
            let h = hull(&p, oracle)?;
            emit(output.as_deref(), &pm_io::write(&pm_io::from_polytope(&p, Some(&h))))
        }
        Command::Analyze { input } => {
            let file = read_poly(input.as_deref())?;
            let p = pm_io::to_vertex_set(&file)?;
            let h = pm_io::to_hrep(&file)?;
            emit(None, &analyze(&p, h)?.render(format))
        }
        Command::Classify {
            d,
            long,
            simplicial_2d,
        } => {
            if d >= 4 {
                require_long(long, format!("classify {d}"))?;
            }
            emit(None, &classify_report(d, simplicial_2d)?.render(format))
        }
        Command::Rand { experiment } => emit(None, &rand_report(experiment)?.render(format)),
        Command::Alonvu { m, output, long } => {
            if m >= 6 {
                require_long(long, format!("alonvu {m}"))?;
            }
            let (report, file) = alonvu(m)?;
            if let Some(path) = output {
                emit(Some(&path), &pm_io::write(&file))?;
            }
            emit(None, &report.render(format))
        }
        Command::Convert { input, output } => {
            let file = read_poly(input.as_deref())?;
            emit(output.as_deref(), &pm_io::write(&file))
        }
    }
}

fn generate(family: Family) -> Result<PolyFile> {
    let p = match family {
        Family::Cube { d } => cube(d)?,
        Family::Simplex { d, corner } => {
            if corner {
                simplex_corner(d)?
            } else {
                simplex_standard(d)?
            }
        }
        Family::Cross { d } => cross_polytope(d)?,
        Family::Halfcube { d } => half_cube(d)?,
        Family::Cut { n } => cut_polytope(n)?,
        Family::Cor { n } => correlation_polytope(n)?,
        Family::Met { n } => {
            let h = metric_polytope(n)?.to_hrep();
            let mut file = PolyFile::new();
            file.set(Section::Facets, h.facets.iter().map(|f| f.rat_row()).collect());
            file.set(Section::AffineHull, Vec::new());
            file.set(Section::Dimension, vec![vec![Rat::from_integer(Int::from(h.dim()))]]);
            return Ok(file);
        }
        Family::Fd { d, selector } => {
            let free = family_fd_free_positions(d)?.len();
            let bits: Vec<bool> = match selector {
                None => vec![false; free],
                Some(s) => s
                    .chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(CliError::Usage(format!("selector digit '{c}' is not 0/1"))),
                    })
                    .collect::<Result<_>>()?,
            };
            if bits.len() != free {
                return Err(CliError::Usage(format!(
                    "selector needs {free} digits, got {}",
                    bits.len()
                )));
            }
            family_fd(d, &bits)?
        }
        Family::Sum { first, second } => {
            let a = pm_io::to_vertex_set(&read_poly(Some(&first))?)?;
            let b = pm_io::to_vertex_set(&read_poly(Some(&second))?)?;
            centered_sum(&a, &b)?
        }
    };
    Ok(pm_io::from_polytope(&p, None))
}

fn hull(p: &VertexSet01, oracle: Oracle) -> Result<HRep> {
    Ok(match oracle {
        Oracle::Fm => vrep_to_hrep(p)?,
        Oracle::Span => facets_by_span(p, DEFAULT_SPAN_LIMIT)?,
        Oracle::Both => {
            let fm = vrep_to_hrep(p)?;
            let span = facets_by_span(p, DEFAULT_SPAN_LIMIT)?;
            if fm != span {
                return Err(Error::Invariant(format!(
                    "oracles disagree: {} facets by elimination, {} by spanning sets",
                    fm.facets.len(),
                    span.facets.len()
                ))
                .into());
            }
            fm
        }
    })
}

/// Checks that a description read from a file is valid for `p` and that
/// every row is tight on a face of the right dimension.
fn check_hrep(p: &VertexSet01, h: &HRep) -> Result<()> {
    let bad = |m: &str| CliError::Usage(format!("FACETS/AFFINE_HULL in the file: {m}"));
    if h.ambient != p.dim() {
        return Err(bad("dimension differs from the vertices"));
    }
    if !p.words().iter().all(|&w| h.contains_word(w)) {
        return Err(bad("a vertex violates a row"));
    }
    let dim = p.subset_affine_dim(&p.all_indices());
    if h.dim() != dim {
        return Err(bad("affine hull has the wrong dimension"));
    }
    for f in &h.facets {
        if p.subset_affine_dim(&f.tight_set(p)) + 1 != dim {
            return Err(bad(&format!("{f} does not define a facet")));
        }
    }
    Ok(())
}

fn guarded<T: fmt::Display>(r: zopoly::Result<T>) -> Result<String> {
    match r {
        Ok(v) => Ok(v.to_string()),
        Err(Error::GuardExceeded { .. }) => Ok("guard".into()),
        Err(e) => Err(e.into()),
    }
}

pub fn analyze(p: &VertexSet01, given: Option<HRep>) -> Result<Report> {
    let h = match given {
        Some(h) => {
            check_hrep(p, &h)?;
            h
        }
        None => vrep_to_hrep(p)?,
    };
    let inc = incidence(p, &h);
    let dim = h.dim();
    let g = graph(p, &inc);
    let mut r = Report::new();
    r.push("ambient", p.dim());
    r.push("dim", dim);
    r.push("vertices", p.len());
    r.push("facets", h.facets.len());
    r.push("equations", h.equations.len());
    r.push("greatest_coefficient", h.greatest_coefficient());
    r.push("centered", is_centered(p)?);
    r.push("diameter", diameter(&g)?);
    r.push("connectivity_ge_dim", connectivity_at_least(&g, dim));
    r.push("neighborliness", guarded(neighborliness(&inc, DEFAULT_SUBSET_LIMIT))?);
    r.push("simpliciality", guarded(simpliciality(p, &inc, DEFAULT_FACE_LIMIT))?);
    let expansion = match expansion_holds(&g) {
        Ok(true) => "no-counterexample",
        Ok(false) => "violated",
        Err(Error::GuardExceeded { .. }) => "guard",
        Err(e) => return Err(e.into()),
    };
    r.push("expansion", expansion);
    if dim == p.dim() {
        r.push("normalized_volume", normalized_volume(p, &inc)?);
    }
    Ok(r)
}

fn classify_report(d: usize, simplicial_2d: bool) -> Result<Report> {
    let keys = classify(d)?;
    let mut r = Report::new();
    r.push("d", d);
    r.push("classes", keys.len());
    for k in &keys {
        r.push("key", k);
    }
    if simplicial_2d {
        let found = simplicial_2d_search(d)?;
        r.push("simplicial_2d_classes", found.len());
        for c in found {
            r.push(
                "simplicial_2d",
                format!(
                    "{} facets={} combinatorial_cross={} centrally_symmetric={} standard_cross={}",
                    c.key, c.facets, c.combinatorial_cross, c.centrally_symmetric, c.standard_cross
                ),
            );
        }
    }
    Ok(r)
}

fn decimal(x: &Rat) -> String {
    format!("{:.8}", x.to_f64().unwrap_or(f64::NAN))
}

fn rand_report(e: Experiment) -> Result<Report> {
    let mut r = Report::new();
    match e {
        Experiment::Pd { d, sampling } => {
            let est = estimate_pd(d, sampling.trials, &SeededRng::new(sampling.seed))?;
            r.push("experiment", "pd");
            r.push("d", d);
            r.push("seed", sampling.seed);
            r.push("trials", est.trials);
            r.push("singular", est.hits);
            r.push("estimate", format!("{:.8}", est.value()));
            r.push("stderr", format!("{:.8}", est.stderr));
            r.push("komlos_lower_bound", decimal(&komlos_lower_bound(d)));
        }
        Experiment::Md { d, long } => {
            if d >= 5 {
                require_long(long, format!("rand md {d}"))?;
            }
            let m = exact_md(d)?;
            let total = Int::from(2).pow((d * d) as u32);
            r.push("experiment", "md");
            r.push("d", d);
            r.push("singular", &m);
            r.push("total", &total);
            r.push("probability", decimal(&Rat::new(m, total)));
        }
        Experiment::Detsq {
            n,
            model,
            exhaustive,
            sampling,
        } => {
            let (sign, reference) = match model {
                Model::PlusMinusOne => (SignModel::PlusMinusOne, Rat::from_integer(factorial(n as u64))),
                Model::ZeroOne => (
                    SignModel::ZeroOne,
                    Rat::new(factorial(n as u64 + 1), Int::from(2).pow(2 * n as u32)),
                ),
            };
            let mode = if exhaustive {
                DetSqMode::Exhaustive
            } else {
                DetSqMode::MonteCarlo {
                    trials: sampling.trials,
                    seed: sampling.seed,
                }
            };
            r.push("experiment", "detsq");
            r.push("n", n);
            r.push(
                "model",
                match model {
                    Model::PlusMinusOne => "plus-minus-one",
                    Model::ZeroOne => "zero-one",
                },
            );
            match expected_det_sq(n, mode, sign)? {
                DetSqResult::Exact(v) => {
                    r.push("mode", "exhaustive");
                    r.push("mean", &v);
                    r.push("matches_reference", v == reference);
                }
                DetSqResult::Estimate(m) => {
                    r.push("mode", "monte-carlo");
                    r.push("seed", sampling.seed);
                    r.push("trials", m.trials);
                    r.push("mean", decimal(&m.mean));
                    r.push("stderr", format!("{:.8}", m.stderr));
                }
            }
            r.push("reference", &reference);
        }
        Experiment::Rho { n, long } => {
            if n >= 6 {
                require_long(long, format!("rand rho {n}"))?;
            }
            let res = rho_search(n)?;
            let h = hadamard_verdict(n, &res.value);
            r.push("experiment", "rho");
            r.push("n", n);
            r.push("rho", &res.value);
            r.push("hadamard", if h.holds { "holds" } else { "violated" });
            for row in &res.witness {
                r.push("row", row.iter().map(u8::to_string).collect::<String>());
            }
        }
        Experiment::Polytope { d, n, sampling } => {
            let rep = random_polytope_experiment(d, n, sampling.trials, &SeededRng::new(sampling.seed))?;
            r.push("experiment", "polytope");
            r.push("seed", sampling.seed);
            for line in rep.to_kv().lines() {
                let (k, v) = line.split_once('=').expect("key=value record");
                r.push(k, v);
            }
        }
    }
    Ok(r)
}

fn alonvu(m: usize) -> Result<(Report, PolyFile)> {
    let b = alon_vu(m)?;
    let a01 = alon_vu_01(&b)?;
    let h = huge_coefficient_simplex(&a01)?;
    verify_huge_facet(&h)?;
    let hrep = vrep_to_hrep(&h.simplex)?;
    let min_abs = b.y.iter().map(|v| num_traits::Signed::abs(v)).min().expect("nonempty");
    let has_451 = hrep
        .facets
        .iter()
        .any(|f| f.coeffs.iter().any(|c| *c == Int::from(451) || *c == Int::from(-451)));
    let mut r = Report::new();
    r.push("m", m);
    r.push("n", b.n);
    r.push("i0", b.i0 + 1);
    r.push("entries_pm1", true);
    r.push("det_a", &b.det_a);
    r.push("x_i0", &b.x[b.i0]);
    r.push("x_n", &b.x[b.n - 1]);
    r.push("recursion_bound", "holds");
    r.push("product_bound", &b.product_bound);
    r.push("log2_lower_bound", format!("{:.4}", b.log2_bound));
    r.push("column_bound", &b.column_bound);
    r.push("column_min_abs", &min_abs);
    r.push("column_bound_holds", b.column_bound_holds);
    r.push("chi_pm1", chi(&b.a)?);
    r.push("chi_01", &h.chi);
    r.push("simplex_dim", h.simplex.dim());
    r.push("facet", &h.facet);
    r.push("facet_greatest_coefficient", h.facet.greatest_coefficient());
    r.push("greatest_coefficient", hrep.greatest_coefficient());
    r.push("hull_check", "agree");
    r.push("coefficient_451_present", has_451);
    let file = pm_io::from_polytope(&h.simplex, Some(&hrep));
    Ok((r, file))
}
