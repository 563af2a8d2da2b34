//! Job configuration: diagram sources, formats, and weight parsing.
//!
//! A diagram comes either from a preset name or from explicit Satake data
//! (type name or integer matrix, black nodes, arrows). Config files use the
//! same keys as the flags; flags win on conflict, and the diagram source
//! given by flags replaces the file's source wholesale.

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::ValueEnum;
use serde::Deserialize;

use symmcomb::cartan::{CartanDatum, Weight};
use symmcomb::satake::{self, SatakeDiagram, Symmetric};

use crate::report::DiagramInfo;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoordSystem {
    /// Coordinates in the distinguished basis of the Picard lattice.
    Theta,
    /// Coordinates in the fundamental weights.
    Omega,
}

/// Global flags shared by every subcommand.
#[derive(Debug, Clone, clap::Args)]
pub struct Globals {
    /// Structured config file (key = value, lists in brackets).
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Diagram preset name, e.g. A1-split, B3-l1.
    #[arg(long, global = true)]
    pub preset: Option<String>,
    /// Cartan type name, e.g. "B3" or "A1xA1".
    #[arg(long, global = true)]
    pub cartan: Option<String>,
    /// Black node indices (1-based), comma separated.
    #[arg(long, global = true, value_delimiter = ',')]
    pub black: Vec<usize>,
    /// Arrow pairs (1-based) like "1:2,3:4".
    #[arg(long, global = true)]
    pub arrows: Option<String>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for sweeps.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
}

/// Config-file image of the globals.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub preset: Option<String>,
    pub cartan: Option<String>,
    pub cartan_matrix: Option<Vec<Vec<i64>>>,
    pub symmetrizers: Option<Vec<i64>>,
    pub black: Option<Vec<usize>>,
    pub arrows: Option<Vec<[usize; 2]>>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
}

pub fn load_file(path: &Path) -> anyhow::Result<FileConfig> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read config file {}", path.display()))?;
    toml::from_str(&text).with_context(|| format!("cannot parse config file {}", path.display()))
}

/// Output settings shared by all modes.
#[derive(Debug, Clone)]
pub struct OutputSettings {
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub jobs: usize,
}

/// Format, output path and worker count, with no diagram required.
pub fn resolve_output(globals: &Globals) -> anyhow::Result<OutputSettings> {
    let file = match &globals.config {
        Some(path) => load_file(path)?,
        None => FileConfig::default(),
    };
    let format = match globals.format {
        Some(f) => f,
        None => match file.format.as_deref() {
            Some("json") | None => OutputFormat::Json,
            Some("csv") => OutputFormat::Csv,
            Some("text") => OutputFormat::Text,
            Some(other) => bail!("unknown format '{other}'"),
        },
    };
    Ok(OutputSettings {
        format,
        out: globals.out.clone().or(file.out),
        jobs: globals.jobs.or(file.jobs).unwrap_or(1),
    })
}

/// The resolved job: diagram plus output settings.
#[derive(Debug, Clone)]
pub struct Job {
    pub diagram: SatakeDiagram,
    pub info: DiagramInfo,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
    pub jobs: usize,
}

pub fn resolve(globals: &Globals) -> anyhow::Result<Job> {
    let file = match &globals.config {
        Some(path) => load_file(path)?,
        None => FileConfig::default(),
    };

    let flags_have_source =
        globals.preset.is_some() || globals.cartan.is_some() || !globals.black.is_empty() || globals.arrows.is_some();

    let (preset_name, cartan_name, matrix, symmetrizers, black, arrows) = if flags_have_source {
        (
            globals.preset.clone(),
            globals.cartan.clone(),
            None,
            None,
            globals.black.clone(),
            parse_arrows(globals.arrows.as_deref())?,
        )
    } else {
        (
            file.preset.clone(),
            file.cartan.clone(),
            file.cartan_matrix.clone(),
            file.symmetrizers.clone(),
            file.black.clone().unwrap_or_default(),
            file.arrows.clone().unwrap_or_default().into_iter().map(|[a, b]| (a, b)).collect(),
        )
    };

    let diagram = match (&preset_name, &cartan_name, &matrix) {
        (Some(name), None, None) => {
            if !black.is_empty() || !arrows.is_empty() {
                bail!("a preset fixes the black nodes and arrows; drop the extra fields");
            }
            satake::preset(name)?
        }
        (None, Some(type_name), None) => {
            let datum = CartanDatum::from_name(type_name)?;
            explicit_diagram(datum, &black, &arrows)?
        }
        (None, None, Some(rows)) => {
            let datum = match &symmetrizers {
                Some(d) => CartanDatum::new(rows.clone(), d.clone())?,
                None => CartanDatum::from_matrix(rows.clone())?,
            };
            explicit_diagram(datum, &black, &arrows)?
        }
        (None, None, None) => bail!("no diagram source: give --preset, --cartan, or a config file"),
        _ => bail!("exactly one diagram source is required (preset, type name, or matrix)"),
    };

    let output = resolve_output(globals)?;
    let info = DiagramInfo::new(&diagram, preset_name);
    Ok(Job { diagram, info, format: output.format, out: output.out, jobs: output.jobs })
}

fn explicit_diagram(
    datum: CartanDatum,
    black_one_based: &[usize],
    arrows_one_based: &[(usize, usize)],
) -> anyhow::Result<SatakeDiagram> {
    let to_zero = |i: usize, what: &str| -> anyhow::Result<usize> {
        if i == 0 {
            bail!("{what} indices are 1-based");
        }
        Ok(i - 1)
    };
    let black = black_one_based
        .iter()
        .map(|&i| to_zero(i, "black"))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let arrows = arrows_one_based
        .iter()
        .map(|&(a, b)| Ok((to_zero(a, "arrow")?, to_zero(b, "arrow")?)))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(SatakeDiagram::new(datum, black, arrows))
}

fn parse_arrows(spec: Option<&str>) -> anyhow::Result<Vec<(usize, usize)>> {
    let Some(spec) = spec else {
        return Ok(Vec::new());
    };
    spec.split(',')
        .filter(|s| !s.is_empty())
        .map(|pair| {
            let (a, b) = pair
                .split_once(':')
                .with_context(|| format!("arrow '{pair}' is not of the form i:j"))?;
            Ok((a.trim().parse()?, b.trim().parse()?))
        })
        .collect()
}

/// Parses a comma-separated integer vector into a weight in the requested
/// coordinate system.
pub fn parse_weight(
    sym: &Symmetric,
    spec: &str,
    coords: CoordSystem,
) -> anyhow::Result<Weight> {
    let values: Vec<i64> = spec
        .split(',')
        .map(|s| s.trim().parse().with_context(|| format!("bad coordinate '{s}'")))
        .collect::<anyhow::Result<_>>()?;
    match coords {
        CoordSystem::Theta => {
            let r = sym.lattice().pic_rank();
            if values.len() != r {
                bail!("expected {r} basis coordinates, got {}", values.len());
            }
            Ok(sym.lattice().weight_from_theta(&values))
        }
        CoordSystem::Omega => {
            if values.len() != sym.rank() {
                bail!("expected {} fundamental coordinates, got {}", sym.rank(), values.len());
            }
            Ok(Weight::from_ints(&values))
        }
    }
}

/// Parses a 1-based comma-separated orbit subset.
pub fn parse_orbit_set(sym: &Symmetric, spec: Option<&str>) -> anyhow::Result<std::collections::BTreeSet<usize>> {
    let Some(spec) = spec else {
        return Ok(Default::default());
    };
    let ell = sym.restricted_rank();
    spec.split(',')
        .filter(|s| !s.is_empty())
        .map(|s| {
            let i: usize = s.trim().parse().with_context(|| format!("bad orbit index '{s}'"))?;
            if i == 0 || i > ell {
                bail!("orbit index {i} out of range 1..={ell}");
            }
            Ok(i - 1)
        })
        .collect()
}
