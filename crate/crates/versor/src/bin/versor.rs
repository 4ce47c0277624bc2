//! Command-line front end: every pipeline with stable, scriptable output.
//!
//! Exit codes: 0 success, 1 domain error (single-line message on stderr),
//! 2 usage error.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use versor::coxeter::plane_basis;
use versor::export;
use versor::{
    affine_orbit, affine_orbit_conformal, cartan_matrix_of, count_reflections,
    coxeter_descriptor, cyclic_rotation_group, cyclic_spin_group, degeneracy_report,
    generate_pin_group, generate_spin_group, golden_ratio, order_spectrum, project_to_plane,
    realize_orthogonal, root_system, translation_sweep, verify_group, ConformalContext, GroupId,
    Multivector, OrthogonalGroup, Result, SeedPolytope, TranslationSpec, VersorError,
    VersorGroup, TOL,
};

#[derive(Parser)]
#[command(name = "versor", version, about = "Coxeter root systems, versor groups and point arrays")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct Output {
    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Args)]
struct GroupArg {
    /// Group id: A1A1A1, A3, B3, H3, H2, or I2:n
    #[arg(long)]
    group: String,
    /// Shorthand for --group I2:n
    #[arg(long)]
    n: Option<usize>,
}

impl GroupArg {
    fn parse(&self) -> Result<GroupId> {
        if let Some(n) = self.n {
            return Ok(GroupId::I2(n));
        }
        self.group.parse()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Close catalog simple roots into the full root system
    Roots {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        output: Output,
    },
    /// Cartan matrix of a catalog group at diagram lengths
    Cartan {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        output: Output,
    },
    /// Realized orthogonal group (rotation-only or full)
    Group {
        #[command(flatten)]
        group: GroupArg,
        /// Rotation subgroup only (default)
        #[arg(long, conflicts_with = "full")]
        chiral: bool,
        /// Full reflection group
        #[arg(long)]
        full: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Binary polyhedral (spin) group with order spectrum and verification
    Binary {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        output: Output,
    },
    /// Rank-4 root system induced from the spinors
    Induce {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        output: Output,
    },
    /// Coxeter element, number, plane and exponents
    Coxeter {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        output: Output,
    },
    /// Project the root system onto the Coxeter plane
    Project {
        #[command(flatten)]
        group: GroupArg,
        #[command(flatten)]
        output: Output,
    },
    /// Affine point array: regular n-gon seed translated then orbited
    Array {
        #[command(flatten)]
        group: GroupArg,
        /// Translation direction x,y (token `tau` accepted)
        #[arg(long, default_value = "1,0")]
        translate: String,
        /// Translation length (token `tau` accepted)
        #[arg(long)]
        length: String,
        /// Rotation group only (default)
        #[arg(long, conflicts_with = "full")]
        chiral: bool,
        /// Full dihedral group
        #[arg(long)]
        full: bool,
        /// Keep the untranslated seed vertices in the array
        #[arg(long)]
        include_seed: bool,
        /// Compute via the conformal pipeline instead of plain 2D
        #[arg(long)]
        conformal: bool,
        /// Conformal length scale (used with --conformal)
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        #[command(flatten)]
        output: Output,
    },
    /// Cardinality as a function of translation length
    Sweep {
        #[command(flatten)]
        group: GroupArg,
        /// Translation direction x,y (token `tau` accepted)
        #[arg(long, default_value = "1,0")]
        translate: String,
        /// Comma-separated lengths (token `tau` accepted)
        #[arg(long)]
        lengths: String,
        #[command(flatten)]
        output: Output,
    },
    /// Verify the conformal pipeline against the 3D one; prints max deviation
    ConformalCheck {
        /// Conformal length scale
        #[arg(long, default_value_t = 1.0)]
        lambda: f64,
        /// Pass threshold on the max deviation
        #[arg(long, default_value_t = TOL)]
        tolerance: f64,
    },
}

fn parse_scalar(token: &str) -> Result<f64> {
    let t = token.trim().to_ascii_lowercase();
    match t.as_str() {
        "tau" => Ok(golden_ratio()),
        "-tau" => Ok(-golden_ratio()),
        "1/tau" => Ok(1.0 / golden_ratio()),
        "-1/tau" => Ok(-1.0 / golden_ratio()),
        _ => t
            .parse()
            .map_err(|_| VersorError::Malformed(format!("bad numeric literal {token:?}"))),
    }
}

fn parse_vector(list: &str) -> Result<Vec<f64>> {
    list.split(',').map(parse_scalar).collect()
}

fn emit(output: &Output, text: String) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| VersorError::Malformed(format!("cannot write {}: {e}", path.display()))),
        None => {
            std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| VersorError::Malformed(format!("stdout: {e}")))?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct RootsSummary {
    group: String,
    rank: usize,
    count: usize,
    roots: Vec<Vec<f64>>,
    lengths: Vec<f64>,
}

fn cmd_roots(group: GroupId, output: &Output) -> Result<()> {
    let rs = root_system(group)?;
    match output.format {
        Format::Csv => emit(output, export::root_system_csv(&rs)),
        Format::Json => {
            let summary = RootsSummary {
                group: group.to_string(),
                rank: rs.rank,
                count: rs.roots.len(),
                roots: rs.roots.iter().map(|r| r.vector_part()).collect(),
                lengths: rs.lengths.clone(),
            };
            emit(output, export::to_json(&summary)?)
        }
    }
}

#[derive(Serialize)]
struct CartanSummary {
    group: String,
    entries: Vec<Vec<f64>>,
}

fn cmd_cartan(group: GroupId, output: &Output) -> Result<()> {
    let cm = cartan_matrix_of(group)?;
    match output.format {
        Format::Csv => emit(output, export::cartan_csv(&cm)),
        Format::Json => emit(
            output,
            export::to_json(&CartanSummary {
                group: group.to_string(),
                entries: cm.entries,
            })?,
        ),
    }
}

#[derive(Serialize)]
struct GroupSummary {
    group: String,
    chirality: String,
    order: usize,
    reflections: usize,
    matrices: Vec<Vec<Vec<f64>>>,
}

fn cmd_group(group: GroupId, full: bool, output: &Output) -> Result<()> {
    let rs = root_system(group)?;
    let vg = if full {
        generate_pin_group(&rs)?
    } else {
        generate_spin_group(&rs)?
    };
    let og = realize_orthogonal(&vg)?;
    match output.format {
        Format::Csv => {
            // one matrix per row, entries flattened row-major
            let mut text = String::new();
            for m in &og.matrices {
                let flat: Vec<f64> = m.iter().flatten().copied().collect();
                text.push_str(
                    &flat
                        .iter()
                        .map(|&v| export::fmt_sig12(v))
                        .collect::<Vec<_>>()
                        .join(","),
                );
                text.push('\n');
            }
            emit(output, text)
        }
        Format::Json => emit(
            output,
            export::to_json(&GroupSummary {
                group: group.to_string(),
                chirality: if full { "full" } else { "chiral" }.into(),
                order: og.order(),
                reflections: count_reflections(&og),
                matrices: og.matrices,
            })?,
        ),
    }
}

#[derive(Serialize)]
struct BinarySummary {
    group: String,
    order: usize,
    label: Option<String>,
    order_spectrum: std::collections::BTreeMap<usize, usize>,
    axioms_pass: bool,
    failures: Vec<String>,
}

fn cmd_binary(group: GroupId, output: &Output) -> Result<()> {
    let vg = generate_spin_group(&root_system(group)?)?;
    let spectrum = order_spectrum(&vg)?;
    let report = verify_group(&vg, false)?;
    let summary = BinarySummary {
        group: group.to_string(),
        order: vg.order(),
        label: report.label.clone(),
        order_spectrum: spectrum.counts,
        axioms_pass: report.passed(),
        failures: report.failures,
    };
    match output.format {
        Format::Json => emit(output, export::to_json(&summary)?),
        Format::Csv => {
            let mut text = String::from("order_of_element,count\n");
            for (k, c) in &summary.order_spectrum {
                text.push_str(&format!("{k},{c}\n"));
            }
            emit(output, text)
        }
    }
}

#[derive(Serialize)]
struct InduceSummary {
    group: String,
    label: String,
    count: usize,
    roots: Vec<[f64; 4]>,
}

fn cmd_induce(group: GroupId, output: &Output) -> Result<()> {
    let vg = generate_spin_group(&root_system(group)?)?;
    let rs4 = versor::induce_root_system(&vg)?;
    let label = match rs4.label {
        versor::Rank4Label::A1Fourth => "A1^4",
        versor::Rank4Label::D4 => "D4",
        versor::Rank4Label::F4 => "F4",
        versor::Rank4Label::H4 => "H4",
    };
    match output.format {
        Format::Csv => {
            let mut text = String::from("w,x,y,z\n");
            for r in &rs4.roots {
                text.push_str(
                    &r.0.iter()
                        .map(|&v| export::fmt_sig12(v))
                        .collect::<Vec<_>>()
                        .join(","),
                );
                text.push('\n');
            }
            emit(output, text)
        }
        Format::Json => emit(
            output,
            export::to_json(&InduceSummary {
                group: group.to_string(),
                label: label.into(),
                count: rs4.len(),
                roots: rs4.roots.iter().map(|r| r.0).collect(),
            })?,
        ),
    }
}

#[derive(Serialize)]
struct CoxeterSummary {
    group: String,
    h: usize,
    exponents: Vec<usize>,
    versor: Multivector,
    plane: Multivector,
    normal: Option<Multivector>,
}

fn cmd_coxeter(group: GroupId, output: &Output) -> Result<()> {
    let desc = coxeter_descriptor(group)?;
    match output.format {
        Format::Json => emit(
            output,
            export::to_json(&CoxeterSummary {
                group: group.to_string(),
                h: desc.h,
                exponents: desc.exponents,
                versor: desc.versor.multivector().clone(),
                plane: desc.plane,
                normal: desc.normal,
            })?,
        ),
        Format::Csv => {
            let mut text = String::from("key,value\n");
            text.push_str(&format!("h,{}\n", desc.h));
            text.push_str(&format!(
                "exponents,{}\n",
                desc.exponents
                    .iter()
                    .map(|e| e.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            ));
            emit(output, text)
        }
    }
}

fn cmd_project(group: GroupId, output: &Output) -> Result<()> {
    let rs = root_system(group)?;
    let desc = coxeter_descriptor(group)?;
    let _ = plane_basis(&desc.plane)?;
    let projected = project_to_plane(&rs.roots, &desc.plane)?;
    match output.format {
        Format::Csv => emit(output, export::projection_csv(&projected)),
        Format::Json => emit(output, export::to_json(&projected)?),
    }
}

fn dihedral_seed_and_groups(group: GroupId) -> Result<(SeedPolytope, OrthogonalGroup, VersorGroup)> {
    let n = match group {
        GroupId::I2(n) => n,
        other => {
            return Err(VersorError::Malformed(format!(
                "point arrays need a 2D group (I2:n), got {other}"
            )))
        }
    };
    let vertices = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64;
            vec![theta.cos(), theta.sin()]
        })
        .collect();
    let name = if n == 5 {
        "pentagon".to_string()
    } else {
        format!("{n}-gon")
    };
    let seed = SeedPolytope::new(&name, 2, vertices)?;
    Ok((seed, cyclic_rotation_group(n)?, cyclic_spin_group(n)?))
}

#[derive(Serialize)]
struct ArraySummary {
    group: String,
    seed: String,
    translation: TranslationSpec,
    candidate_count: usize,
    cardinality: usize,
    degenerate: bool,
    points: Vec<Vec<f64>>,
    multiplicities: Vec<usize>,
}

#[allow(clippy::too_many_arguments)]
fn cmd_array(
    group: GroupId,
    translate: &str,
    length: &str,
    full: bool,
    include_seed: bool,
    conformal: bool,
    lambda: f64,
    output: &Output,
) -> Result<()> {
    let (seed, rotations, spin) = dihedral_seed_and_groups(group)?;
    let dir_raw = parse_vector(translate)?;
    let norm: f64 = dir_raw.iter().map(|c| c * c).sum::<f64>().sqrt();
    if norm < TOL {
        return Err(VersorError::Malformed("translation direction is zero".into()));
    }
    let direction: Vec<f64> = dir_raw.iter().map(|c| c / norm).collect();
    let t = TranslationSpec::new(direction, parse_scalar(length)?)?;
    let arr = if conformal {
        let ctx = ConformalContext::new(lambda)?;
        let vg = if full {
            generate_pin_group(&root_system(group)?)?
        } else {
            spin
        };
        affine_orbit_conformal(&seed, &vg, &t, &ctx, include_seed)?
    } else {
        let og = if full {
            realize_orthogonal(&generate_pin_group(&root_system(group)?)?)?
        } else {
            rotations
        };
        affine_orbit(&seed, &og, &t, include_seed)?
    };
    match output.format {
        Format::Csv => emit(output, export::point_array_csv(&arr)),
        Format::Json => {
            let report = degeneracy_report(&arr);
            emit(
                output,
                export::to_json(&ArraySummary {
                    group: group.to_string(),
                    seed: arr.seed_name.clone(),
                    translation: t,
                    candidate_count: arr.candidate_count,
                    cardinality: arr.cardinality(),
                    degenerate: report.degenerate,
                    points: arr.points.clone(),
                    multiplicities: arr.provenance.iter().map(|p| p.len()).collect(),
                })?,
            )
        }
    }
}

fn cmd_sweep(group: GroupId, translate: &str, lengths: &str, output: &Output) -> Result<()> {
    let (seed, rotations, _) = dihedral_seed_and_groups(group)?;
    let dir_raw = parse_vector(translate)?;
    let norm: f64 = dir_raw.iter().map(|c| c * c).sum::<f64>().sqrt();
    if norm < TOL {
        return Err(VersorError::Malformed("translation direction is zero".into()));
    }
    let direction: Vec<f64> = dir_raw.iter().map(|c| c / norm).collect();
    let lens = parse_vector(lengths)?;
    let sweep = translation_sweep(&seed, &rotations, &direction, &lens)?;
    match output.format {
        Format::Csv => emit(output, export::sweep_csv(&sweep)),
        Format::Json => emit(output, export::to_json(&sweep)?),
    }
}

// Small deterministic PRNG so the check is reproducible byte-for-byte.
struct SplitMix(u64);

impl SplitMix {
    fn next_unit(&mut self) -> f64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z = z ^ (z >> 31);
        (z >> 11) as f64 / (1u64 << 53) as f64 * 2.0 - 1.0
    }
}

fn cmd_conformal_check(lambda: f64, tolerance: f64) -> Result<()> {
    let ctx = ConformalContext::new(lambda)?;
    let mut max_dev: f64 = 0.0;

    // null embedding on random points
    let mut rng = SplitMix(0xc0ff_ee00);
    for _ in 0..1000 {
        let x = [
            3.0 * rng.next_unit(),
            3.0 * rng.next_unit(),
            3.0 * rng.next_unit(),
        ];
        let fx = ctx.embed(&x)?;
        let sq = fx.multivector().dot(fx.multivector())?;
        max_dev = max_dev.max(sq.abs());
        // translation covariance
        let a = [
            2.0 * rng.next_unit(),
            2.0 * rng.next_unit(),
            2.0 * rng.next_unit(),
        ];
        let t = ctx.translation_rotor(&a)?;
        let moved = ctx.translate(&fx, &t)?;
        let sum: Vec<f64> = x.iter().zip(&a).map(|(p, q)| p + q).collect();
        max_dev = max_dev.max(moved.multivector().max_deviation(ctx.embed(&sum)?.multivector()));
    }

    // distinguished pentagon arrays: 3D vs conformal point sets
    let tau = golden_ratio();
    let seed = SeedPolytope::pentagon();
    let rotations = cyclic_rotation_group(5)?;
    let spin = cyclic_spin_group(5)?;
    for length in [1.0, tau, 1.0 / tau] {
        let t = TranslationSpec::new(vec![1.0, 0.0], length)?;
        let plain = affine_orbit(&seed, &rotations, &t, false)?;
        let conf = affine_orbit_conformal(&seed, &spin, &t, &ctx, false)?;
        if plain.cardinality() != conf.cardinality() {
            return Err(VersorError::Malformed(format!(
                "pipelines disagree on cardinality at length {length}: {} vs {}",
                plain.cardinality(),
                conf.cardinality()
            )));
        }
        for p in &plain.points {
            let nearest = conf
                .points
                .iter()
                .map(|q| {
                    p.iter()
                        .zip(q)
                        .map(|(a, b)| (a - b).abs())
                        .fold(0.0_f64, f64::max)
                })
                .fold(f64::INFINITY, f64::min);
            max_dev = max_dev.max(nearest);
        }
    }

    println!("max deviation: {max_dev:e}");
    if max_dev < tolerance {
        println!("conformal-check: PASS");
        Ok(())
    } else {
        Err(VersorError::Malformed(format!(
            "conformal-check failed: max deviation {max_dev:e} >= {tolerance:e}"
        )))
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Roots { group, output } => cmd_roots(group.parse()?, &output),
        Command::Cartan { group, output } => cmd_cartan(group.parse()?, &output),
        Command::Group {
            group,
            chiral: _,
            full,
            output,
        } => cmd_group(group.parse()?, full, &output),
        Command::Binary { group, output } => cmd_binary(group.parse()?, &output),
        Command::Induce { group, output } => cmd_induce(group.parse()?, &output),
        Command::Coxeter { group, output } => cmd_coxeter(group.parse()?, &output),
        Command::Project { group, output } => cmd_project(group.parse()?, &output),
        Command::Array {
            group,
            translate,
            length,
            chiral: _,
            full,
            include_seed,
            conformal,
            lambda,
            output,
        } => cmd_array(
            group.parse()?,
            &translate,
            &length,
            full,
            include_seed,
            conformal,
            lambda,
            &output,
        ),
        Command::Sweep {
            group,
            translate,
            lengths,
            output,
        } => cmd_sweep(group.parse()?, &translate, &lengths, &output),
        Command::ConformalCheck { lambda, tolerance } => cmd_conformal_check(lambda, tolerance),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
