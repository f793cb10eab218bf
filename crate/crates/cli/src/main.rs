//! `paneled`: build and check the counterexample scene, scan embeddings for
//! linked cycle pairs, and export meshes.
//!
//! Exit codes: 0 success (for `verify-star`, every placement is blocked at
//! least once), 2 a witness or counter-pair was found, 1 error.

mod format;
mod manifest;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use paneled_core::counterexample::{
    build_scene, check_equator_claim, control_short_arc_config, default_scene_config, verify_star, Scene,
    SceneConfig,
};
use paneled_core::exact_geom::ExactScalar;
use paneled_core::linking::pairwise_link_scan;
use paneled_core::spatial_graph::LinearEmbedding;
use serde::Serialize;

use manifest::{sha256_hex, RunManifest};

#[derive(Parser, Debug)]
#[command(name = "paneled", version, about = "Exact checks on cone-disk panels and linking in spatial graphs")]
struct Cli {
    /// Cap on worker threads (defaults to all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check whether every placement near the center sees gamma' on one of
    /// its three segments.
    VerifyStar {
        #[command(flatten)]
        scene: SceneArgs,
        /// Include every placement in the report, not just the summary.
        #[arg(long)]
        full_dump: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that segments from premise placements to the upper hemisphere
    /// cross the cone over alpha.
    Equator {
        #[command(flatten)]
        scene: SceneArgs,
        /// Number of sample points on the upper hemisphere.
        #[arg(long, default_value_t = 40)]
        samples: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Linking numbers of all vertex-disjoint cycle pairs of an embedding.
    Lk {
        /// Embedding JSON file.
        #[arg(long)]
        embedding: PathBuf,
        #[arg(long, default_value_t = 8)]
        max_cycle_len: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the scene as a Wavefront OBJ mesh.
    Export {
        #[command(flatten)]
        scene: SceneArgs,
        #[arg(long)]
        obj: PathBuf,
    },
    /// Write a built-in scene config as JSON.
    WriteConfig {
        /// Write the negative-control config instead of the default one.
        #[arg(long)]
        control: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct SceneArgs {
    /// Scene config JSON file.
    #[arg(long, conflicts_with_all = ["demo", "control"])]
    config: Option<PathBuf>,
    /// Use the built-in default scene.
    #[arg(long, conflicts_with = "control")]
    demo: bool,
    /// Use the built-in negative-control scene.
    #[arg(long)]
    control: bool,
    #[arg(long)]
    grid_shells: Option<usize>,
    #[arg(long)]
    grid_dirs: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Placement radius as a rational, e.g. `1/100`.
    #[arg(long)]
    epsilon: Option<ExactScalar>,
}

/// A config together with where it came from and what was overridden.
struct LoadedConfig {
    cfg: SceneConfig,
    source: String,
    hash: String,
    overrides: Vec<(String, String)>,
}

fn parse_config(text: &str) -> Result<SceneConfig> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        anyhow::anyhow!("malformed config at `{path}`: {}", e.into_inner())
    })
}

fn load_config(args: &SceneArgs) -> Result<LoadedConfig> {
    let (mut cfg, source, hash) = if let Some(path) = &args.config {
        let text = fs::read_to_string(path).with_context(|| format!("cannot read config {}", path.display()))?;
        let cfg = parse_config(&text).with_context(|| format!("in {}", path.display()))?;
        (cfg, path.display().to_string(), sha256_hex(text.as_bytes()))
    } else if args.demo || args.control {
        let (cfg, name) = if args.control {
            (control_short_arc_config(), "builtin:control")
        } else {
            (default_scene_config(), "builtin:default")
        };
        let text = serde_json::to_string(&cfg)?;
        (cfg, name.to_string(), sha256_hex(text.as_bytes()))
    } else {
        bail!("one of --config, --demo or --control is required");
    };
    let mut overrides = Vec::new();
    if let Some(v) = args.grid_shells {
        cfg.grid.shells = v;
        overrides.push(("grid.shells".into(), v.to_string()));
    }
    if let Some(v) = args.grid_dirs {
        cfg.grid.dirs = v;
        overrides.push(("grid.dirs".into(), v.to_string()));
    }
    if let Some(v) = args.n {
        cfg.n = v;
        overrides.push(("n".into(), v.to_string()));
    }
    if let Some(v) = &args.epsilon {
        cfg.epsilon = v.clone();
        overrides.push(("epsilon".into(), v.to_string()));
    }
    Ok(LoadedConfig {
        cfg,
        source,
        hash,
        overrides,
    })
}

fn build(loaded: &LoadedConfig) -> Result<Scene> {
    build_scene(&loaded.cfg).with_context(|| format!("cannot build scene from {}", loaded.source))
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    manifest: &'a RunManifest,
    report: T,
}

fn emit<T: Serialize>(manifest: &RunManifest, report: T, out: Option<&Path>) -> Result<()> {
    let text = format::to_json_text(&Envelope { manifest, report })?;
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn outputs(paths: &[Option<&PathBuf>]) -> Vec<String> {
    paths.iter().flatten().map(|p| p.display().to_string()).collect()
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::VerifyStar { scene, full_dump, out } => {
            let loaded = load_config(&scene)?;
            let built = build(&loaded)?;
            let report = verify_star(&built, &loaded.cfg, None);
            let manifest = RunManifest::new("verify-star", &loaded, outputs(&[out.as_ref()]));
            let summary = &report.summary;
            eprintln!(
                "{} placements, {} evaluated, {} skipped, min blocked {:?}",
                summary.placements, summary.evaluated, summary.skipped, summary.min_blocked
            );
            let code = match summary.min_blocked {
                Some(0) => ExitCode::from(2),
                Some(_) => ExitCode::SUCCESS,
                None => bail!("no placement could be evaluated"),
            };
            if full_dump {
                emit(&manifest, &report, out.as_deref())?;
            } else {
                emit(&manifest, &report.summary, out.as_deref())?;
            }
            Ok(code)
        }
        Command::Equator { scene, samples, out } => {
            let loaded = load_config(&scene)?;
            let built = build(&loaded)?;
            let report = check_equator_claim(&built, &loaded.cfg, None, samples);
            let mut manifest = RunManifest::new("equator", &loaded, outputs(&[out.as_ref()]));
            manifest.overrides.push(("samples".into(), samples.to_string()));
            eprintln!(
                "{} premise placements, {} pairs, {} counter-pairs",
                report.premise_count,
                report.pairs_checked,
                report.counter_pairs.len()
            );
            let code = if report.holds() { ExitCode::SUCCESS } else { ExitCode::from(2) };
            emit(&manifest, &report, out.as_deref())?;
            Ok(code)
        }
        Command::Lk {
            embedding,
            max_cycle_len,
            out,
        } => {
            let text = fs::read_to_string(&embedding)
                .with_context(|| format!("cannot read embedding {}", embedding.display()))?;
            let de = &mut serde_json::Deserializer::from_str(&text);
            let e: LinearEmbedding = serde_path_to_error::deserialize(de).map_err(|err| {
                let path = err.path().to_string();
                anyhow::anyhow!("malformed embedding at `{path}`: {}", err.into_inner())
            })?;
            let report = pairwise_link_scan(&e, max_cycle_len)?;
            let manifest = RunManifest {
                tool: "paneled".into(),
                version: env!("CARGO_PKG_VERSION").into(),
                command: "lk".into(),
                config: embedding.display().to_string(),
                config_sha256: sha256_hex(text.as_bytes()),
                overrides: vec![("max_cycle_len".into(), max_cycle_len.to_string())],
                outputs: outputs(&[out.as_ref()]),
            };
            eprintln!(
                "{} disjoint cycle pairs, {} linked",
                report.pairs.len(),
                report.linked().count()
            );
            emit(&manifest, &report, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Export { scene, obj } => {
            let loaded = load_config(&scene)?;
            let built = build(&loaded)?;
            fs::write(&obj, built.to_obj()).with_context(|| format!("cannot write {}", obj.display()))?;
            eprintln!(
                "wrote {} (delta {}, delta_patch {}, gamma_prime {}, d_f {} triangles)",
                obj.display(),
                built.delta.triangle_count(),
                built.delta_patch.triangles().len(),
                built.gamma_prime.triangle_count(),
                built.d_f.triangle_count()
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::WriteConfig { control, out } => {
            let cfg = if control { control_short_arc_config() } else { default_scene_config() };
            let text = format::to_json_text(&cfg)?;
            match out {
                Some(path) => fs::write(&path, text).with_context(|| format!("cannot write {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = cli.threads;
    let result = match threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(cli)),
            Err(e) => Err(e.into()),
        },
        None => run(cli),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
