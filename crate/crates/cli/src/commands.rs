use anyhow::{bail, ensure, Context};
use cesaro_core::counterexamples::{remark_example, RemarkExample};
use cesaro_core::operators::{convergence_study, norm_study, SpaceNorm, TestFunction};
use cesaro_core::report::format_float;
use cesaro_core::seq::{powhalf_ratio, series_exp};
use cesaro_core::spaces::{b_from_phi, phi_growth_profile, projection_norm, SpaceId};
use cesaro_core::summatrix::{
    cesaro_gamma, cesaro_generator, left_inverse_residual_rows, wiener_left_inverse, wiener_matrix,
};
use cesaro_core::{Cell, Complex64, Grid, Hb, Matrix, Report, Seq, SeqKind};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::input::{parse_target, read_coefficients};
use crate::{Cli, Command};

pub fn dispatch(cli: &Cli) -> anyhow::Result<Report> {
    for &a in &cli.alpha {
        ensure!(a >= 0.0 && a.is_finite(), "alpha must be finite and >= 0, got {a}");
    }
    let grid = Grid::with_log2_size(cli.grid_log2)?;
    let (body, extra) = match &cli.command {
        Command::Lebesgue => (lebesgue(cli, &grid)?, vec![]),
        Command::Cesaro {
            target,
            function,
            degree,
        } => (
            cesaro(cli, &grid, target, function, *degree)?,
            vec![("target", target.clone()), ("function", function.clone()), ("degree", degree.to_string())],
        ),
        Command::Wiener { f_file } => (
            wiener(cli, f_file.as_deref())?,
            vec![("f_file", f_file.as_ref().map_or("none".into(), |p| p.display().to_string()))],
        ),
        Command::Limitation { space } => (limitation(cli, &grid, space)?, vec![("space", space.clone())]),
        Command::Hb { phi, phi_file } => {
            let source = match phi_file {
                Some(p) => format!("file:{}", p.display()),
                None => phi.clone(),
            };
            (hb(cli, phi, phi_file.as_deref())?, vec![("phi", source)])
        }
        Command::Counterexample { which } => (counterexample(cli, which)?, vec![("which", which.clone())]),
    };
    Ok(with_config(cli, extra, body))
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Lebesgue => "lebesgue",
        Command::Cesaro { .. } => "cesaro",
        Command::Wiener { .. } => "wiener",
        Command::Limitation { .. } => "limitation",
        Command::Hb { .. } => "hb",
        Command::Counterexample { .. } => "counterexample",
    }
}

/// Config entries first, then whatever metadata the computation produced.
fn with_config(cli: &Cli, extra: Vec<(&str, String)>, body: Report) -> Report {
    let mut out = Report::new(body.columns());
    out.set_meta("command", command_name(&cli.command));
    out.set_meta("alpha", join_floats(&cli.alpha));
    out.set_meta("n_max", cli.n_max.map_or("default".into(), |n| n.to_string()));
    out.set_meta("grid_log2", cli.grid_log2);
    out.set_meta("format", cli.format.name());
    out.set_meta("seed", cli.seed);
    for (k, v) in extra {
        out.set_meta(k, v);
    }
    for (k, v) in body.metadata() {
        out.set_meta(k.clone(), v);
    }
    for row in body.rows() {
        out.push_row(row.clone()).expect("same columns");
    }
    out
}

fn join_floats(v: &[f64]) -> String {
    if v.is_empty() {
        "default".into()
    } else {
        v.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(";")
    }
}

fn alphas(cli: &Cli, default: &[f64]) -> Vec<f64> {
    if cli.alpha.is_empty() {
        default.to_vec()
    } else {
        cli.alpha.clone()
    }
}

/// `0` (optionally), then `1, 2, 4, …` up to `n_max`, with `n_max` appended.
pub fn dyadic_schedule(n_max: usize, with_zero: bool) -> Vec<usize> {
    let mut ns = Vec::new();
    if with_zero {
        ns.push(0);
    }
    let mut n = 1usize;
    while n <= n_max {
        ns.push(n);
        n = match n.checked_mul(2) {
            Some(m) => m,
            None => break,
        };
    }
    if ns.last() != Some(&n_max) && n_max > 0 {
        ns.push(n_max);
    }
    ns
}

fn require_resolution(grid: &Grid, n_max: usize) -> anyhow::Result<()> {
    ensure!(
        grid.size() > 2 * n_max,
        "grid of size {} cannot resolve degree {n_max}; raise --grid-log2",
        grid.size()
    );
    Ok(())
}

fn lebesgue(cli: &Cli, grid: &Grid) -> anyhow::Result<Report> {
    let n_max = cli.n_max.unwrap_or(4096);
    require_resolution(grid, n_max)?;
    let ns = dyadic_schedule(n_max, true);
    let l1 = SpaceNorm::L1(grid.clone());
    let dirichlet = norm_study(&l1, &Matrix::cesaro(0.0)?, &TestFunction::dirac(), &ns)?;
    let fejer = Matrix::cesaro(1.0)?;
    let fejer_norm = norm_study(&l1, &fejer, &TestFunction::dirac(), &ns)?;
    let fejer_err = convergence_study(&SpaceNorm::Sup(grid.clone()), &fejer, &TestFunction::abs_theta(), &ns)?;

    let mut rep = Report::new(&["n", "dirichlet_l1", "fejer_l1", "fejer_sup_error_abs_theta"]);
    let cols = [
        dirichlet.column_f64("norm").expect("norm column"),
        fejer_norm.column_f64("norm").expect("norm column"),
        fejer_err.column_f64("error").expect("error column"),
    ];
    for (i, &n) in ns.iter().enumerate() {
        rep.push_row(vec![n.into(), cols[0][i].into(), cols[1][i].into(), cols[2][i].into()])?;
    }
    rep.set_meta("dirichlet_loglog_slope", dirichlet.meta("loglog_slope").unwrap_or("NaN"));
    rep.set_meta("fejer_error_loglog_slope", fejer_err.meta("loglog_slope").unwrap_or("NaN"));
    Ok(rep)
}

fn random_polynomial(seed: u64, degree: usize) -> Seq {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Seq::taylor_from_fn(degree, |_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
}

fn cesaro(cli: &Cli, grid: &Grid, target: &str, function: &str, degree: usize) -> anyhow::Result<Report> {
    let n_max = cli.n_max.unwrap_or(1024);
    require_resolution(grid, n_max)?;
    let space = parse_target(target, grid.clone())?;
    let f = match function {
        "abs_theta" => TestFunction::abs_theta(),
        "dirac" => TestFunction::dirac(),
        "random" => TestFunction::polynomial("random", random_polynomial(cli.seed, degree)),
        _ => bail!("unknown test function {function:?}"),
    };
    let ns = dyadic_schedule(n_max, false);
    let mut out: Option<Report> = None;
    for a in alphas(cli, &[0.0, 0.5, 1.0]) {
        let rep = convergence_study(&space, &Matrix::cesaro(a)?, &f, &ns)
            .with_context(|| format!("alpha = {a}"))?;
        let merged = out.get_or_insert_with(|| Report::new(rep.columns()));
        for (k, v) in rep.metadata() {
            if k == "growth_rule" || k == "test_function" {
                merged.set_meta(k.clone(), v);
            } else {
                merged.set_meta(format!("{k}[alpha={a}]"), v);
            }
        }
        for row in rep.rows() {
            merged.push_row(row.clone())?;
        }
    }
    out.context("no alpha values given")
}

fn wiener(cli: &Cli, f_file: Option<&std::path::Path>) -> anyhow::Result<Report> {
    let j_max = cli.n_max.unwrap_or(200);
    let custom = f_file.map(read_coefficients).transpose()?;
    let mut rep = Report::new(&[
        "alpha",
        "j",
        "gamma",
        "a_jj_abs",
        "b_jj_abs",
        "b_row_abs_sum",
        "b_row_abs_sum_over_gamma",
        "residual",
    ]);
    let mut worst = 0.0f64;
    for a in alphas(cli, &[1.0]) {
        let f = match &custom {
            Some(c) => Seq::taylor(c.clone()),
            None => cesaro_generator(a, j_max),
        };
        let gamma = cesaro_gamma(a, j_max);
        let m = wiener_matrix(&f, &gamma, j_max)?;
        let b = wiener_left_inverse(&f, &gamma, j_max)?;
        let res = left_inverse_residual_rows(&m, &b, j_max, j_max)?;
        for j in 0..=j_max {
            let bj = b.row_abs_sum(j);
            worst = worst.max(res[j]);
            rep.push_row(vec![
                a.into(),
                j.into(),
                gamma[j].into(),
                m.entry(j, j)?.norm().into(),
                b.row(j)[j].norm().into(),
                bj.into(),
                (bj / gamma[j]).into(),
                res[j].into(),
            ])?;
        }
    }
    rep.set_meta("max_residual", format_float(worst));
    Ok(rep)
}

fn w0_b(deg: usize) -> Seq {
    let w = (3.0 - 5f64.sqrt()) / 2.0;
    Seq::taylor_from_fn(deg, |i| {
        if i == 0 {
            Complex64::new(0.0, 0.0)
        } else {
            Complex64::new((1.0 - w) * w.powi(i as i32 - 1), 0.0)
        }
    })
}

fn geom_phi(deg: usize) -> Seq {
    Seq::taylor_from_fn(deg, |j| Complex64::new(if j == 0 { 0.0 } else { 1.0 }, 0.0))
}

fn expsqrt_phi(deg: usize) -> anyhow::Result<Seq> {
    Ok(series_exp(&powhalf_ratio::<Complex64>(deg), deg)?)
}

fn expsqrt_samples(grid: &Grid) -> Vec<Complex64> {
    grid.sample(|t| {
        if t == 0.0 {
            Complex64::new(f64::INFINITY, 0.0)
        } else {
            let z = Complex64::from_polar(1.0, t);
            ((1.0 + z) / (1.0 - z)).sqrt().exp()
        }
    })
}

fn limitation(cli: &Cli, grid: &Grid, space: &str) -> anyhow::Result<Report> {
    let j_max = cli.n_max.unwrap_or(64);
    require_resolution(grid, j_max)?;
    let id = match space {
        "continuous" => SpaceId::Continuous,
        "hardy1" => SpaceId::HardyOneBmoaProxy,
        "bergman1" => SpaceId::BergmanOneBloch,
        "hb-geom" => SpaceId::DeBrangesRovnyak(Hb::from_phi(geom_phi(j_max), j_max).with_b(w0_b(j_max))),
        "hb-expsqrt" => {
            let pc = b_from_phi(&expsqrt_samples(grid), grid, j_max)?;
            SpaceId::DeBrangesRovnyak(Hb::from_phi(expsqrt_phi(j_max)?, j_max).with_b(pc.b))
        }
        _ => bail!("unknown space {space:?}"),
    };
    let p_norms = (0..=j_max)
        .map(|j| projection_norm(&id, j, grid))
        .collect::<Result<Vec<f64>, _>>()?;
    let mut rep = Report::new(&["space", "alpha", "j", "projection_norm", "inverse_row_sum", "ratio"]);
    for a in alphas(cli, &[0.0, 0.5, 1.0]) {
        let b = wiener_left_inverse(&cesaro_generator(a, j_max), &cesaro_gamma(a, j_max), j_max)?;
        let ratios = cesaro_core::summatrix::limitation_ratio(&p_norms, &b, j_max)?;
        for j in 0..=j_max {
            rep.push_row(vec![
                Cell::from(id.name()),
                a.into(),
                j.into(),
                p_norms[j].into(),
                b.row_abs_sum(j).into(),
                ratios[j].into(),
            ])?;
        }
    }
    Ok(rep)
}

fn hb(cli: &Cli, phi: &str, phi_file: Option<&std::path::Path>) -> anyhow::Result<Report> {
    let (series, default_max) = match phi_file {
        Some(path) => {
            let c = read_coefficients(path)?;
            let len = c.len();
            (Seq::taylor(c), len - 1)
        }
        None => match phi {
            "geom" => (geom_phi(0), 100_000),
            "expsqrt" => (Seq::zero(SeqKind::Taylor), 1 << 13),
            _ => bail!("unknown phi {phi:?}; expected geom, expsqrt or --phi-file"),
        },
    };
    let j_max = cli.n_max.unwrap_or(default_max);
    let series = match (phi_file, phi) {
        (None, "geom") => geom_phi(j_max),
        (None, _) => expsqrt_phi(j_max)?,
        _ => series,
    };
    let space = Hb::from_phi(series, j_max);
    let js = dyadic_schedule(j_max, false);
    Ok(phi_growth_profile(&space, &alphas(cli, &[0.4, 0.5, 0.6]), &js)?)
}

fn random_vector(rng: &mut ChaCha8Rng, len: usize) -> Vec<Complex64> {
    (0..len)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

fn counterexample(cli: &Cli, which: &str) -> anyhow::Result<Report> {
    let example: RemarkExample = which.parse()?;
    let n_max = cli.n_max.unwrap_or(100);
    ensure!(n_max >= example.first_n(), "n_max must be at least {}", example.first_n());
    let c = |x: f64| Complex64::new(x, 0.0);
    let mut probes = vec![
        (vec![c(1.0)], vec![c(1.0), c(1.0), c(1.0)]),
        (vec![c(0.0), c(1.0), c(-1.0)], vec![c(2.0), c(0.0), c(1.0), c(0.5)]),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(cli.seed);
    for _ in 0..2 {
        let (lx, ly) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let x = random_vector(&mut rng, lx);
        let y = random_vector(&mut rng, ly);
        probes.push((x, y));
    }
    Ok(remark_example(example, n_max, &probes)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn schedules() {
        assert_eq!(dyadic_schedule(8, true), vec![0, 1, 2, 4, 8]);
        assert_eq!(dyadic_schedule(10, false), vec![1, 2, 4, 8, 10]);
        assert_eq!(dyadic_schedule(0, true), vec![0]);
        for n in [1usize, 7, 100, 4096] {
            let s = dyadic_schedule(n, true);
            assert!(s.windows(2).all(|w| w[1] > w[0]));
        }
    }
}
