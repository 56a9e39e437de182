use std::fmt::Write as _;

use hnla_core::ensemble::{bayes_order_residual, heterodyne_scenario, photon_number_scenario, EprSpec, GridSpec, HeterodyneReport};
use hnla_core::fock::{auto_cutoff, coherent_squeezed_coeffs, fidelity_pure, quadrature_stats};
use hnla_core::hnla::transform as closed_form;
use hnla_core::units::{db_to_r, r_to_db};
use hnla_core::{
    apply_filtration_bruteforce, no_signaling_check, quadrature_gains, truncated_squeezer,
    Complex64, Error, SqueezedCoherentParams,
};
use serde::Serialize;

use crate::args::{EprArgs, Fig1Args, Format, NoSignalArgs, TransformArgs};
use crate::output::{format_sig, to_json};
use crate::{CliError, CliResult, Outcome, EXIT_OK, EXIT_PHYSICS};

/// Tail tolerance of the brute-force cross-check in `transform`.
const BRUTEFORCE_TAIL: f64 = 1e-12;

fn parse_range(spec: &str) -> CliResult<Vec<usize>> {
    let bad = || CliError::Config(format!("invalid --n-trunc `{spec}` (expected N or A-B)"));
    let spec = spec.trim();
    let (lo, hi) = match spec.split_once('-') {
        Some((a, b)) => (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?),
        None => {
            let n = spec.parse().map_err(|_| bad())?;
            (n, n)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok((lo..=hi).collect())
}

fn check_gain(g: f64, strict: bool) -> CliResult<()> {
    let ok = if strict { g > 1.0 } else { g >= 1.0 };
    if !g.is_finite() || !ok {
        let need = if strict { "> 1" } else { ">= 1" };
        return Err(CliError::Config(format!("--gain must be finite and {need}, got {g}")));
    }
    Ok(())
}

fn check_r(r: f64) -> CliResult<()> {
    if !r.is_finite() || r < 0.0 {
        return Err(CliError::Config(format!("squeezing r must be finite and >= 0, got {r}")));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Fig1Row {
    pub squeezing_db: f64,
    pub squeezing_r: f64,
    pub n_trunc: usize,
    pub fidelity: Option<f64>,
    pub p_succ_operational: Option<f64>,
    pub p_succ_formula: Option<f64>,
    pub status: String,
}

#[derive(Serialize)]
struct Fig1Doc<'a> {
    g: f64,
    rows: &'a [Fig1Row],
}

pub(crate) fn fig1_rows(args: &Fig1Args) -> CliResult<Vec<Fig1Row>> {
    check_gain(args.gain, true)?;
    let levels: Vec<(f64, f64)> = match (&args.squeezing.db, &args.squeezing.r) {
        (Some(db), _) => db.iter().map(|&d| (d, db_to_r(d))).collect(),
        (_, Some(r)) => r.iter().map(|&r| (r_to_db(r), r)).collect(),
        _ => return Err(CliError::Config("one of --squeezing-db or --squeezing-r is required".into())),
    };
    for &(_, r) in &levels {
        check_r(r)?;
    }
    let ns = parse_range(&args.n_trunc)?;
    let mut rows = Vec::with_capacity(levels.len() * ns.len());
    for &(db, r) in &levels {
        for &n in &ns {
            let row = match truncated_squeezer(r, 0.0, args.gain, n) {
                Ok(res) => Fig1Row {
                    squeezing_db: db,
                    squeezing_r: r,
                    n_trunc: n,
                    fidelity: Some(res.fidelity),
                    p_succ_operational: Some(res.p_succ),
                    p_succ_formula: Some(res.p_succ_formula),
                    status: "ok".into(),
                },
                Err(e @ Error::InvalidArgument(_)) => return Err(e.into()),
                Err(e) => Fig1Row {
                    squeezing_db: db,
                    squeezing_r: r,
                    n_trunc: n,
                    fidelity: None,
                    p_succ_operational: None,
                    p_succ_formula: None,
                    status: status_tag(&e).into(),
                },
            };
            rows.push(row);
        }
    }
    Ok(rows)
}

fn status_tag(e: &Error) -> &'static str {
    match e {
        Error::InvalidArgument(_) => "invalid-argument",
        Error::UnphysicalGain(_) => "unphysical-gain",
        Error::CutoffTooLarge(_) => "cutoff-too-large",
        Error::Budget(_) => "budget",
    }
}

/// Fidelity and success probability table over squeezing levels and cutoffs.
/// Failed points stay in the table with a status tag; any such row makes the
/// exit code 2.
pub fn fig1(args: &Fig1Args, format: Format) -> CliResult<Outcome> {
    let rows = fig1_rows(args)?;
    let text = match format {
        Format::Json => to_json(&Fig1Doc { g: args.gain, rows: &rows })?,
        Format::Csv => {
            let mut s = String::from("squeezing_db,N,fidelity,p_succ_operational,p_succ_formula,status\n");
            let opt = |v: Option<f64>| v.map(format_sig).unwrap_or_default();
            for row in &rows {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    format_sig(row.squeezing_db),
                    row.n_trunc,
                    opt(row.fidelity),
                    opt(row.p_succ_operational),
                    opt(row.p_succ_formula),
                    row.status
                );
            }
            s
        }
    };
    let failed = rows.iter().filter(|r| r.status != "ok").count();
    Ok(Outcome {
        text,
        exit_code: if failed == 0 { EXIT_OK } else { EXIT_PHYSICS },
        diagnostic: (failed > 0).then(|| format!("{failed} of {} points failed (see status column)", rows.len())),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BruteForceCheck {
    pub n_max: usize,
    /// `1 - |⟨closed form|brute force⟩|²`.
    pub infidelity: f64,
    /// Relative gap of the success weight against the closed form.
    pub weight_residual: f64,
    pub mean_x: f64,
    pub mean_p: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TransformReport {
    pub g: f64,
    pub alpha: Complex64,
    pub r: f64,
    pub phi: f64,
    pub alpha_prime: Complex64,
    pub r_prime: f64,
    pub x_prime: f64,
    pub p_prime: f64,
    /// Quadrature gains for an x-squeezed input (`phi = 0`).
    pub gain_x: f64,
    pub gain_p: f64,
    pub rel_success_weight: f64,
    pub bruteforce: BruteForceCheck,
}

pub(crate) fn transform_report(args: &TransformArgs) -> CliResult<TransformReport> {
    check_gain(args.gain, true)?;
    let r = match (args.squeezing.db, args.squeezing.r) {
        (Some(db), _) => db_to_r(db),
        (_, Some(r)) => r,
        _ => 0.0,
    };
    check_r(r)?;
    let params = SqueezedCoherentParams::new(Complex64::new(args.alpha_re, args.alpha_im), r, args.phi)?;
    let out = closed_form(&params, args.gain)?;
    let (gain_x, gain_p) = quadrature_gains(r, args.gain)?;

    let n_max = match args.n_max {
        Some(n) => n,
        None => auto_cutoff(&out.params_out, BRUTEFORCE_TAIL)?.max(auto_cutoff(&params, BRUTEFORCE_TAIL)?),
    };
    let input = coherent_squeezed_coeffs(&params, n_max)?;
    let (filtered, w) = apply_filtration_bruteforce(&input, args.gain)?;
    let ideal = coherent_squeezed_coeffs(&out.params_out, n_max)?;
    let stats = quadrature_stats(&filtered);
    let bruteforce = BruteForceCheck {
        n_max,
        infidelity: 1.0 - fidelity_pure(&ideal, &filtered),
        weight_residual: (w / input.norm_sqr()) / out.rel_success_weight - 1.0,
        mean_x: stats.mean_x,
        mean_p: stats.mean_p,
    };
    Ok(TransformReport {
        g: args.gain,
        alpha: params.alpha(),
        r,
        phi: params.phi(),
        alpha_prime: out.params_out.alpha(),
        r_prime: out.params_out.r(),
        x_prime: out.params_out.x(),
        p_prime: out.params_out.p(),
        gain_x,
        gain_p,
        rel_success_weight: out.rel_success_weight,
        bruteforce,
    })
}

/// Closed-form output of one squeezed coherent state plus a brute-force check.
pub fn transform(args: &TransformArgs, format: Format) -> CliResult<Outcome> {
    let rep = transform_report(args)?;
    let text = match format {
        Format::Json => to_json(&rep)?,
        Format::Csv => {
            let b = &rep.bruteforce;
            format!(
                "g,alpha_re,alpha_im,r,phi,alpha_prime_re,alpha_prime_im,r_prime,x_prime,p_prime,gain_x,gain_p,rel_success_weight,n_max,infidelity,weight_residual\n{}\n",
                [
                    rep.g, rep.alpha.re, rep.alpha.im, rep.r, rep.phi, rep.alpha_prime.re, rep.alpha_prime.im,
                    rep.r_prime, rep.x_prime, rep.p_prime, rep.gain_x, rep.gain_p, rep.rel_success_weight,
                ]
                .iter()
                .map(|v| format_sig(*v))
                .chain([b.n_max.to_string(), format_sig(b.infidelity), format_sig(b.weight_residual)])
                .collect::<Vec<_>>()
                .join(",")
            )
        }
    };
    Ok(Outcome {
        text,
        exit_code: EXIT_OK,
        diagnostic: None,
    })
}

fn grid_of(args: &NoSignalArgs) -> CliResult<GridSpec> {
    check_gain(args.gain, false)?;
    if !(args.s.is_finite() && args.s > 0.0) {
        return Err(CliError::Config(format!("--s must be finite and > 0, got {}", args.s)));
    }
    if !(args.tolerance.is_finite() && args.tolerance > 0.0) {
        return Err(CliError::Config(format!("--tolerance must be > 0, got {}", args.tolerance)));
    }
    let grid = args.grid.spec();
    grid.validate()?;
    Ok(grid)
}

/// Homodyne signaling test; exit 2 when any distance exceeds the tolerance
/// or a truncation budget is only marginally met.
pub fn nosignal(args: &NoSignalArgs, format: Format) -> CliResult<Outcome> {
    let grid = grid_of(args)?;
    let rep = no_signaling_check(args.s, args.gain, &grid, args.n_max)?;
    let mut problems = Vec::new();
    for (name, d) in [("d_xp", rep.d_xp), ("d_x_thermal", rep.d_x_thermal), ("d_p_thermal", rep.d_p_thermal)] {
        if !(d < args.tolerance) {
            problems.push(format!("{name} = {d:e} exceeds tolerance {:e}", args.tolerance));
        }
    }
    problems.extend(rep.diagnostics.budget_warnings.iter().cloned());
    let text = match format {
        Format::Json => to_json(&rep)?,
        Format::Csv => format!(
            "s,g,s_prime,grid_kind,grid_points,grid_sigmas,n_max,d_xp,d_x_thermal,d_p_thermal,identity_residual_max,runtime_ms\n{},{},{},{},{},{},{},{},{},{},{},{}\n",
            format_sig(rep.s),
            format_sig(rep.g),
            format_sig(rep.s_prime),
            kind_name(&grid),
            grid.points,
            format_sig(grid.sigmas),
            rep.n_max,
            format_sig(rep.d_xp),
            format_sig(rep.d_x_thermal),
            format_sig(rep.d_p_thermal),
            format_sig(rep.identity_residual_max),
            format_sig(rep.runtime_ms),
        ),
    };
    Ok(verdict(text, problems))
}

fn kind_name(grid: &GridSpec) -> &'static str {
    match grid.kind {
        hnla_core::GridKind::Gauss => "gauss",
        hnla_core::GridKind::Uniform => "uniform",
    }
}

fn verdict(text: String, problems: Vec<String>) -> Outcome {
    Outcome {
        text,
        exit_code: if problems.is_empty() { EXIT_OK } else { EXIT_PHYSICS },
        diagnostic: (!problems.is_empty()).then(|| problems.join("\n")),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EprReport {
    pub s: f64,
    pub g: f64,
    pub s_prime: f64,
    pub tolerance: f64,
    /// Photon counting on Alice's side followed by amplification on Bob's.
    pub photon_number_n_max: usize,
    pub photon_number_max_deviation: f64,
    /// Schmidt coefficients of the filtered pair against those of `EPR_{s'}`.
    pub schmidt_max_deviation: f64,
    /// Measure-then-amplify versus amplify-then-trace, entrywise.
    pub order_residual: f64,
    /// Heterodyne on Alice's side; runtime is omitted so reruns are identical.
    pub heterodyne_n_max: usize,
    pub heterodyne_distance: f64,
    pub heterodyne_mean_photon_number: f64,
    pub heterodyne_expected_mean_photon_number: f64,
    pub grid: GridSpec,
}

pub(crate) fn epr_report(args: &EprArgs) -> CliResult<(EprReport, HeterodyneReport)> {
    let grid = grid_of(args)?;
    let pn = photon_number_scenario(args.s, args.gain, None)?;
    let order_residual = bayes_order_residual(args.s, args.gain, pn.n_max)?;
    let (filtered, _) = EprSpec::new(args.s)?.state(pn.n_max)?.filter_second_mode(args.gain)?;
    let filtered = filtered.normalized()?;
    let ideal = EprSpec::new(pn.s_prime)?.state(pn.n_max)?.normalized()?;
    let schmidt_max_deviation = filtered
        .lambdas()
        .iter()
        .zip(ideal.lambdas())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    let het = heterodyne_scenario(args.s, args.gain, &grid, args.n_max)?;
    Ok((
        EprReport {
            s: args.s,
            g: args.gain,
            s_prime: pn.s_prime,
            tolerance: args.tolerance,
            photon_number_n_max: pn.n_max,
            photon_number_max_deviation: pn.max_deviation,
            schmidt_max_deviation,
            order_residual,
            heterodyne_n_max: het.n_max,
            heterodyne_distance: het.distance,
            heterodyne_mean_photon_number: het.mean_photon_number,
            heterodyne_expected_mean_photon_number: het.expected_mean_photon_number,
            grid,
        },
        het,
    ))
}

/// Runs every EPR consistency check at one `(s, g)`.
pub fn epr(args: &EprArgs, format: Format) -> CliResult<Outcome> {
    let (rep, het) = epr_report(args)?;
    let mut problems = Vec::new();
    for (name, d) in [
        ("photon_number_max_deviation", rep.photon_number_max_deviation),
        ("schmidt_max_deviation", rep.schmidt_max_deviation),
        ("order_residual", rep.order_residual),
        ("heterodyne_distance", rep.heterodyne_distance),
    ] {
        if !(d < args.tolerance) {
            problems.push(format!("{name} = {d:e} exceeds tolerance {:e}", args.tolerance));
        }
    }
    problems.extend(het.budget_warnings);
    let text = match format {
        Format::Json => to_json(&rep)?,
        Format::Csv => format!(
            "s,g,s_prime,photon_number_max_deviation,schmidt_max_deviation,order_residual,heterodyne_n_max,heterodyne_distance,heterodyne_mean_photon_number,heterodyne_expected_mean_photon_number\n{},{},{},{},{},{},{},{},{},{}\n",
            format_sig(rep.s),
            format_sig(rep.g),
            format_sig(rep.s_prime),
            format_sig(rep.photon_number_max_deviation),
            format_sig(rep.schmidt_max_deviation),
            format_sig(rep.order_residual),
            rep.heterodyne_n_max,
            format_sig(rep.heterodyne_distance),
            format_sig(rep.heterodyne_mean_photon_number),
            format_sig(rep.heterodyne_expected_mean_photon_number),
        ),
    };
    Ok(verdict(text, problems))
}
