use std::collections::BTreeMap;
use std::path::PathBuf;

use bircones_core::conics;
use bircones_core::gkz::{self, VectorConfiguration};
use bircones_core::invariants;
use bircones_core::tl::{self, CurveBasis, CurveClass};
use bircones_core::{Cone, Error, RationalVector};
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use crate::document::*;

#[derive(Debug, Parser)]
#[command(
    name = "bircones",
    version,
    about = "Exact cone computations for TL_n and pointed conic spaces"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cones, canonical class, classification and Cox data of TL_n.
    #[command(subcommand)]
    Tl(TlCommand),
    /// Chamber counts of vector configurations.
    #[command(subcommand)]
    Gkz(GkzCommand),
    /// The one-pointed space of conics in LG(n, 2n).
    #[command(subcommand)]
    Conics(ConicsCommand),
    /// The orthogonal analogue TO_n.
    #[command(subcommand)]
    To(ToCommand),
    /// Closed-form dimensions.
    #[command(subcommand)]
    Dims(DimsCommand),
    /// Runs the invariant suite.
    Selftest {
        /// Skip chamber counting for n >= 3.
        #[arg(long)]
        quick: bool,
        /// Corrupts one Mori table entry; the duality checks must fail.
        #[arg(long, hide = true)]
        corrupt_table: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    Eff,
    Nef,
    Ne,
    Mov1,
    Mov,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CurveBasisArg {
    Epsilon,
    Pairing,
    Literal,
}

impl From<CurveBasisArg> for CurveBasis {
    fn from(b: CurveBasisArg) -> Self {
        match b {
            CurveBasisArg::Epsilon => CurveBasis::Epsilon,
            CurveBasisArg::Pairing => CurveBasis::Pairing,
            CurveBasisArg::Literal => CurveBasis::Literal,
        }
    }
}

#[derive(Debug, Args)]
pub struct NArg {
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum TlCommand {
    Cones {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Which::All)]
        which: Which,
        /// Coordinates for curve cones.
        #[arg(long, value_enum, default_value_t = CurveBasisArg::Epsilon)]
        curve_basis: CurveBasisArg,
    },
    Canonical(NArg),
    Classify(NArg),
    Cox(NArg),
}

#[derive(Debug, Subcommand)]
pub enum GkzCommand {
    Chambers(ChambersArgs),
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["n", "config_file"])))]
pub struct ChambersArgs {
    /// Use the B-stable divisors of TL_n.
    #[arg(long)]
    pub n: Option<usize>,
    /// JSON array of integer vectors.
    #[arg(long)]
    pub config_file: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ConicsCommand {
    Cones(NArg),
    Canonical(NArg),
    Classify(NArg),
}

#[derive(Debug, Subcommand)]
pub enum ToCommand {
    Classify(NArg),
}

#[derive(Debug, Subcommand)]
pub enum DimsCommand {
    /// Dimensions of the osculating loci Z_d; all d in 1..=n unless given.
    Osc {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: Option<usize>,
    },
    /// Expected dimension of the Kontsevich space of k-pointed degree-d maps.
    Kontsevich {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Section dimensions r_k; all k in 1..n unless given.
    Rk {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
}

/// Failure of a subcommand, carrying the process exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::ResourceBound(_) => 3,
            Error::Inconsistent(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<OutputDocument, Failure>;

fn cone_data(name: &str, space: &str, basis: Vec<String>, cone: &Cone) -> ConeData {
    let rs = cone.ray_set();
    ConeData {
        name: name.to_string(),
        space: space.to_string(),
        basis,
        rays: sorted_rows(&rs.rays),
        lineality: sorted_rows(&rs.lineality),
    }
}

fn curve_cone_data(n: usize, name: &str, basis: CurveBasis, cone: &Cone) -> Result<ConeData, Error> {
    let mut rays = Vec::new();
    for r in cone.extremal_rays() {
        rays.push(basis.coordinates(&CurveClass::new(n, r.clone())?)?.primitive_ray()?);
    }
    Ok(ConeData {
        name: name.to_string(),
        space: "curve".to_string(),
        basis: basis.labels(n),
        rays: sorted_rows(&rays),
        lineality: Vec::new(),
    })
}

pub fn tl_cones(n: usize, which: Which, basis: CurveBasis) -> Outcome {
    let labels = tl::basis_labels(n);
    let wanted = |w: Which| which == w || which == Which::All;
    let mut cones = Vec::new();
    if wanted(Which::Eff) {
        cones.push(cone_data("eff", "divisor", labels.clone(), &tl::effective_cone(n)?));
    }
    if wanted(Which::Nef) {
        cones.push(cone_data("nef", "divisor", labels.clone(), &tl::nef_cone(n)?));
    }
    if wanted(Which::Mov) {
        cones.push(cone_data("mov", "divisor", labels.clone(), &tl::movable_cone(n)?));
    }
    if wanted(Which::Ne) {
        cones.push(curve_cone_data(n, "ne", basis, &tl::mori_cone(n)?)?);
    }
    if wanted(Which::Mov1) {
        let rays = tl::verified_moving_curve_rays(n)?;
        let cone = Cone::new(tl::picard_rank(n), rays)?;
        cones.push(curve_cone_data(n, "mov1", basis, &cone)?);
    }
    Ok(OutputDocument::new(Some(n), Subject::Tl, Payload::Cones { cones }))
}

fn class(name: &str, basis: &[String], v: &RationalVector) -> NamedClass {
    NamedClass {
        name: name.to_string(),
        basis: basis.to_vec(),
        coords: coords(v),
    }
}

pub fn tl_canonical(n: usize) -> Outcome {
    let labels = tl::basis_labels(n);
    let k = tl::canonical_class(n)?;
    let classes = vec![class("K", &labels, k.coords()), class("-K", &labels, k.neg().coords())];
    let mut checks = BTreeMap::new();
    checks.insert("color_form_agrees".to_string(), tl::alt_canonical_check(n)?);
    checks.insert(
        "anticanonical_nonnegative_on_mori_generators".to_string(),
        tl::anticanonical_is_nef_on_generators(n)?,
    );
    Ok(OutputDocument::new(
        Some(n),
        Subject::Tl,
        Payload::Classes { classes, checks },
    ))
}

pub fn tl_classify(n: usize) -> Outcome {
    let report = tl::classify_tl(n)?;
    let k = tl::anticanonical_class(n)?;
    Ok(OutputDocument::new(
        Some(n),
        Subject::Tl,
        Payload::Classification(Classification::new(&report, tl::basis_labels(n), Some(k.coords()))),
    ))
}

pub fn tl_cox(n: usize) -> Outcome {
    let cox = tl::cox_data(n)?;
    let mut column_labels = Vec::new();
    for side in ["+", "-"] {
        column_labels.extend((0..n).map(|i| format!("s_D{i}{side}")));
    }
    for (k, r) in cox.color_multiplicities.iter().enumerate() {
        column_labels.extend((0..*r).map(|j| format!("s_B{}_{}", k + 1, j + 1)));
    }
    Ok(OutputDocument::new(
        Some(n),
        Subject::Tl,
        Payload::Cox {
            basis: tl::basis_labels(n),
            generator_count: cox.generator_count(),
            color_multiplicities: cox.color_multiplicities.clone(),
            columns: cox.columns.iter().map(|c| coords(c.coords())).collect(),
            column_labels,
        },
    ))
}

pub fn parse_config(text: &str) -> Result<VectorConfiguration, Failure> {
    let rows: Vec<Vec<i64>> = serde_json::from_str(text).map_err(|e| Failure {
        code: 2,
        message: format!("config file is not a JSON array of integer arrays: {e}"),
    })?;
    if rows.is_empty() {
        return Err(Failure {
            code: 2,
            message: "config file holds no vectors".to_string(),
        });
    }
    Ok(VectorConfiguration::from_int_rows(&rows)?)
}

fn chambers_document(n: Option<usize>, basis: Vec<String>, cfg: &VectorConfiguration) -> Outcome {
    let walls = gkz::wall_hyperplanes(cfg)?;
    let cells = gkz::chambers(cfg)?;
    Ok(OutputDocument::new(
        n,
        Subject::Gkz,
        Payload::Chambers {
            basis,
            vectors: sorted_rows(cfg.vectors()),
            walls: walls.len(),
            chambers: cells.len(),
            secondary_chambers: gkz::secondary_chamber_count(cfg, &cells),
        },
    ))
}

pub fn gkz_chambers(args: &ChambersArgs) -> Outcome {
    match (args.n, &args.config_file) {
        (Some(n), None) => {
            if n > gkz::TL_CHAMBER_MAX_N {
                gkz::chamber_count_tl(n)?;
            }
            let cfg = VectorConfiguration::tl(n)?;
            chambers_document(Some(n), tl::basis_labels(n), &cfg)
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure {
                code: 2,
                message: format!("cannot read {}: {e}", path.display()),
            })?;
            let cfg = parse_config(&text)?;
            let basis = (1..=cfg.ambient_dim()).map(|i| format!("x{i}")).collect();
            chambers_document(None, basis, &cfg)
        }
        _ => Err(Failure {
            code: 2,
            message: "exactly one of --n and --config-file is required".to_string(),
        }),
    }
}

pub fn conics_cones(n: usize) -> Outcome {
    let labels: Vec<String> = conics::CONIC_BASIS_LABELS.iter().map(|s| s.to_string()).collect();
    let cones = vec![
        cone_data("eff", "divisor", labels.clone(), &conics::eff_cone_conics(n)?),
        cone_data("nef", "divisor", labels.clone(), &conics::nef_cone_conics(n)?),
        cone_data("mov", "divisor", labels, &conics::movable_cone_conics(n)?),
    ];
    Ok(OutputDocument::new(Some(n), Subject::Conics, Payload::Cones { cones }))
}

pub fn conics_canonical(n: usize) -> Outcome {
    let labels: Vec<String> = conics::CONIC_BASIS_LABELS.iter().map(|s| s.to_string()).collect();
    let blowup: Vec<String> = conics::BLOWUP_BASIS_LABELS.iter().map(|s| s.to_string()).collect();
    let k = conics::anticanonical_conics(n)?;
    let from_t = conics::anticanonical_conics_from_tangency(n)?;
    let restricted = conics::restrict_to_blowup(&k);
    let classes = vec![
        class("-K", &labels, k.coords()),
        class("T", &labels, conics::tangency_class(n)?.coords()),
        class("D_unb", &labels, conics::unbalanced_class(n)?.coords()),
        class("-K|Bl", &blowup, restricted.coords()),
    ];
    let mut checks = BTreeMap::new();
    checks.insert("tangency_form_agrees".to_string(), k == from_t);
    checks.insert(
        "restriction_is_primitive".to_string(),
        restricted.divisibility() == Some(1.into()),
    );
    Ok(OutputDocument::new(
        Some(n),
        Subject::Conics,
        Payload::Classes { classes, checks },
    ))
}

pub fn conics_classify(n: usize) -> Outcome {
    let report = conics::classify_conics(n)?;
    let labels = conics::CONIC_BASIS_LABELS.iter().map(|s| s.to_string()).collect();
    let k = conics::anticanonical_conics(n)?;
    Ok(OutputDocument::new(
        Some(n),
        Subject::Conics,
        Payload::Classification(Classification::new(&report, labels, Some(k.coords()))),
    ))
}

pub fn to_classify(n: usize) -> Outcome {
    let report = invariants::classify_to(n)?;
    let basis = ["+", "-"]
        .iter()
        .flat_map(|s| (0..n / 2).map(move |i| format!("D{i}{s}")))
        .collect();
    Ok(OutputDocument::new(
        Some(n),
        Subject::To,
        Payload::Classification(Classification::new(&report, basis, None)),
    ))
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn dims(cmd: &DimsCommand) -> Outcome {
    let (n, basis, rows) = match *cmd {
        DimsCommand::Osc { n, d } => {
            let ds: Vec<usize> = d.map_or_else(|| (1..=n).collect(), |d| vec![d]);
            let mut rows = Vec::new();
            for d in ds {
                let dim = invariants::dim_osculating_locus(n, d)?;
                rows.push(vec![n.to_string(), d.to_string(), dim.to_string()]);
            }
            (n, labels(&["n", "d", "dim"]), rows)
        }
        DimsCommand::Kontsevich { n, d, k } => {
            let dim = invariants::dim_kontsevich(n, d, k)?;
            (
                n,
                labels(&["n", "d", "k", "dim"]),
                vec![vec![n.to_string(), d.to_string(), k.to_string(), dim.to_string()]],
            )
        }
        DimsCommand::Rk { n, k } => {
            let ks: Vec<usize> = k.map_or_else(|| (1..n).collect(), |k| vec![k]);
            let mut rows = Vec::new();
            for k in ks {
                let r = invariants::section_dimension_rk(n, k)?;
                rows.push(vec![n.to_string(), k.to_string(), r.to_string()]);
            }
            (n, labels(&["n", "k", "r_k"]), rows)
        }
    };
    Ok(OutputDocument::new(
        Some(n),
        Subject::Dims,
        Payload::Table { basis, rows },
    ))
}

/// Runs a parsed document-producing command.
pub fn execute(command: &Command) -> Outcome {
    match command {
        Command::Tl(TlCommand::Cones { n, which, curve_basis }) => tl_cones(*n, *which, (*curve_basis).into()),
        Command::Tl(TlCommand::Canonical(a)) => tl_canonical(a.n),
        Command::Tl(TlCommand::Classify(a)) => tl_classify(a.n),
        Command::Tl(TlCommand::Cox(a)) => tl_cox(a.n),
        Command::Gkz(GkzCommand::Chambers(a)) => gkz_chambers(a),
        Command::Conics(ConicsCommand::Cones(a)) => conics_cones(a.n),
        Command::Conics(ConicsCommand::Canonical(a)) => conics_canonical(a.n),
        Command::Conics(ConicsCommand::Classify(a)) => conics_classify(a.n),
        Command::To(ToCommand::Classify(a)) => to_classify(a.n),
        Command::Dims(d) => dims(d),
        Command::Selftest { .. } => Err(Failure {
            code: 2,
            message: "selftest does not produce a document".to_string(),
        }),
    }
}
