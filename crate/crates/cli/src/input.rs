use std::fs;
use std::path::Path;

use anyhow::{bail, Context};
use cesaro_core::operators::SpaceNorm;
use cesaro_core::{Complex64, Grid};

/// Coefficients `c_0, c_1, …` from lines of `re im`; trailing blank lines are ignored.
pub fn read_coefficients(path: &Path) -> anyhow::Result<Vec<Complex64>> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_coefficients(&text).with_context(|| format!("in {}", path.display()))
}

pub fn parse_coefficients(text: &str) -> anyhow::Result<Vec<Complex64>> {
    let lines: Vec<&str> = text.lines().collect();
    let used = lines.iter().rposition(|l| !l.trim().is_empty()).map_or(0, |i| i + 1);
    if used == 0 {
        bail!("coefficient file is empty");
    }
    lines[..used]
        .iter()
        .enumerate()
        .map(|(i, line)| {
            let parts: Vec<&str> = line.split_whitespace().collect();
            let [re, im] = parts[..] else {
                bail!("line {}: expected `re im`, found {:?}", i + 1, line);
            };
            let re: f64 = re.parse().with_context(|| format!("line {}: bad real part {re:?}", i + 1))?;
            let im: f64 = im.parse().with_context(|| format!("line {}: bad imaginary part {im:?}", i + 1))?;
            if !(re.is_finite() && im.is_finite()) {
                bail!("line {}: coefficients must be finite", i + 1);
            }
            Ok(Complex64::new(re, im))
        })
        .collect()
}

/// `sup`, `l1`, `lp:P`, `hardy:P`, `bergman:P` or `bloch`.
pub fn parse_target(spec: &str, grid: Grid) -> anyhow::Result<SpaceNorm<f64>> {
    let (name, arg) = match spec.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (spec, None),
    };
    let exponent = |default: Option<f64>| -> anyhow::Result<f64> {
        match (arg, default) {
            (Some(a), _) => {
                let p: f64 = a.parse().with_context(|| format!("bad exponent {a:?}"))?;
                if !(p >= 1.0 && p.is_finite()) {
                    bail!("exponent must be a finite number >= 1, got {p}");
                }
                Ok(p)
            }
            (None, Some(d)) => Ok(d),
            (None, None) => bail!("target {name} needs an exponent, e.g. {name}:2"),
        }
    };
    Ok(match name {
        "sup" => SpaceNorm::Sup(grid),
        "l1" => SpaceNorm::L1(grid),
        "lp" => SpaceNorm::Lp(grid, exponent(None)?),
        "hardy" => SpaceNorm::Hardy(grid, exponent(Some(2.0))?),
        "bergman" => SpaceNorm::Bergman(grid, exponent(Some(2.0))?),
        "bloch" => SpaceNorm::Bloch(grid),
        _ => bail!("unknown target {spec:?}"),
    })
}
