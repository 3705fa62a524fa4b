//! Command-line front end: transform signals from CSV, compare the two
//! implementation paths, count operations, and run the image pipeline.
//!
//! Exit codes: 0 on success (and on met thresholds), 1 for domain errors
//! (odd lengths, bad level counts, missed thresholds), 2 for I/O, parse and
//! usage errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fasthaar::io::{
    emit_svg_plot, read_pgm, read_signal_csv, write_pgm, write_signal_csv_with_comments,
    FormatError,
};
use fasthaar::rng::random_signal;
use fasthaar::{
    analyze2d, compare_transforms, complexity_report, decompose, difference_image,
    lowpass_display, reconstruct, DecompositionTree, GrayImage, HaarError, Mode, Signal,
};

/// Gain applied to the absolute band difference for the amplified display
/// image; the raw differences sit at rounding scale, far below one gray
/// level.
const DIFF_DISPLAY_GAIN: f64 = 1e14;

#[derive(Parser)]
#[command(name = "fasthaar", version, about = "Haar filter bank with direct and fast paths", disable_version_flag = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, Default)]
enum ModeArg {
    Direct,
    #[default]
    Fast,
}

impl From<ModeArg> for Mode {
    fn from(arg: ModeArg) -> Self {
        match arg {
            ModeArg::Direct => Mode::Direct,
            ModeArg::Fast => Mode::Fast,
        }
    }
}

#[derive(Clone, Copy, ValueEnum, Default, PartialEq)]
enum PadArg {
    #[default]
    None,
    Zero,
}

#[derive(Args)]
struct TransformOpts {
    /// Implementation path to run.
    #[arg(long, value_enum, default_value_t)]
    mode: ModeArg,
    /// Number of decomposition levels.
    #[arg(long, default_value_t = 1)]
    levels: usize,
    /// Handling of odd-length inputs: reject, or append one zero sample.
    #[arg(long, value_enum, default_value_t)]
    pad: PadArg,
}

#[derive(Subcommand)]
enum Command {
    /// Decompose a CSV signal into per-band CSV files.
    Analyze {
        #[arg(long = "in")]
        input: PathBuf,
        /// Output directory (created if missing).
        #[arg(long = "out")]
        output: PathBuf,
        #[command(flatten)]
        opts: TransformOpts,
    },
    /// Rebuild a signal from the band files written by `analyze`.
    Synthesize {
        /// Directory holding approx.csv and the detail band files.
        #[arg(long = "in")]
        input: PathBuf,
        /// Output CSV path.
        #[arg(long = "out")]
        output: PathBuf,
        #[command(flatten)]
        opts: TransformOpts,
    },
    /// Decompose and reconstruct, reporting the maximum absolute error.
    Roundtrip {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        opts: TransformOpts,
    },
    /// Run both analysis paths and report their per-band disagreement in dB.
    Compare {
        /// Signal to compare on; omitted means a seeded random signal.
        #[arg(long = "in")]
        input: Option<PathBuf>,
        /// Length of the generated signal when no input is given.
        #[arg(long, default_value_t = 1024)]
        n: usize,
        /// Seed for the generated signal.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Directory for the per-sample dB report files.
        #[arg(long = "out")]
        output: Option<PathBuf>,
        /// SVG plot of both dB curves.
        #[arg(long)]
        plot: Option<PathBuf>,
        /// Handling of odd-length inputs.
        #[arg(long, value_enum, default_value_t)]
        pad: PadArg,
    },
    /// Count operations in both paths and print the reduction ratios.
    Bench {
        #[arg(long, default_value_t = 1024)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        levels: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Also measure wall-clock medians over this many runs per path.
        #[arg(long)]
        time: Option<usize>,
    },
    /// Transform a PGM image with both paths and export the lowpass bands
    /// and their difference.
    Image {
        #[arg(long = "in")]
        input: PathBuf,
        /// Output directory (created if missing).
        #[arg(long = "out")]
        output: PathBuf,
    },
    /// Print the version.
    Version,
}

enum CliError {
    Domain(HaarError),
    Format(FormatError),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Format(_) => 2,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(e) => write!(f, "{e}"),
            CliError::Format(e) => write!(f, "{e}"),
        }
    }
}

impl From<HaarError> for CliError {
    fn from(e: HaarError) -> Self {
        CliError::Domain(e)
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        CliError::Format(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Analyze {
            input,
            output,
            opts,
        } => cmd_analyze(&input, &output, &opts),
        Command::Synthesize {
            input,
            output,
            opts,
        } => cmd_synthesize(&input, &output, &opts),
        Command::Roundtrip { input, opts } => cmd_roundtrip(&input, &opts),
        Command::Compare {
            input,
            n,
            seed,
            output,
            plot,
            pad,
        } => cmd_compare(
            input.as_deref(),
            n,
            seed,
            output.as_deref(),
            plot.as_deref(),
            pad,
        ),
        Command::Bench {
            n,
            levels,
            seed,
            time,
        } => cmd_bench(n, levels, seed, time),
        Command::Image { input, output } => cmd_image(&input, &output),
        Command::Version => {
            println!("fasthaar {}", env!("CARGO_PKG_VERSION"));
            Ok(0)
        }
    }
}

/// Applies the padding policy: `zero` appends a single zero sample to
/// odd-length signals. Returns the working signal and how many zeros were
/// appended.
fn apply_padding(x: Signal, pad: PadArg) -> (Signal, usize) {
    if pad == PadArg::Zero && !x.len().is_multiple_of(2) {
        let mut samples = x.into_samples();
        samples.push(0.0);
        (
            Signal::new(samples).expect("padding keeps samples finite"),
            1,
        )
    } else {
        (x, 0)
    }
}

fn ensure_dir(path: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(path).map_err(|e| CliError::Format(FormatError::Io(e)))?;
    Ok(())
}

fn detail_file_name(levels: usize, level_index: usize) -> String {
    if levels == 1 {
        "detail.csv".to_string()
    } else {
        format!("detail{}.csv", level_index + 1)
    }
}

fn write_band(band: &Signal, path: &Path, comments: &[String]) -> Result<(), CliError> {
    write_signal_csv_with_comments(band, path, comments)?;
    println!("wrote {}", path.display());
    Ok(())
}

fn cmd_analyze(input: &Path, output: &Path, opts: &TransformOpts) -> Result<u8, CliError> {
    let raw = read_signal_csv(input)?;
    let original_len = raw.len();
    let (x, padded_zeros) = apply_padding(raw, opts.pad);
    let mode = Mode::from(opts.mode);
    let tree = decompose(&x, opts.levels, mode, None)?;

    ensure_dir(output)?;
    let mut comments = vec![
        format!("mode: {}", mode.label()),
        format!("levels: {}", opts.levels),
        format!("original_length: {original_len}"),
    ];
    if padded_zeros > 0 {
        comments.push(format!("padded_zeros: {padded_zeros}"));
    }

    for (j, detail) in tree.details().iter().enumerate() {
        let mut band_comments = comments.clone();
        band_comments.push(format!("band: detail level {}", j + 1));
        write_band(
            detail,
            &output.join(detail_file_name(opts.levels, j)),
            &band_comments,
        )?;
    }
    let mut band_comments = comments.clone();
    band_comments.push("band: final approximation".to_string());
    write_band(tree.final_approx(), &output.join("approx.csv"), &band_comments)?;
    Ok(0)
}

fn cmd_synthesize(input: &Path, output: &Path, opts: &TransformOpts) -> Result<u8, CliError> {
    if opts.levels == 0 {
        return Err(HaarError::InvalidLevels { levels: 0 }.into());
    }
    let mut details = Vec::with_capacity(opts.levels);
    for j in 0..opts.levels {
        details.push(read_signal_csv(
            &input.join(detail_file_name(opts.levels, j)),
        )?);
    }
    let final_approx = read_signal_csv(&input.join("approx.csv"))?;
    let original_length = details[0].len() * 2;
    let tree = DecompositionTree::new(details, final_approx, original_length)?;
    let signal = reconstruct(&tree, Mode::from(opts.mode), None)?;
    write_signal_csv_with_comments(&signal, output, &[])?;
    println!("wrote {}", output.display());
    Ok(0)
}

fn cmd_roundtrip(input: &Path, opts: &TransformOpts) -> Result<u8, CliError> {
    let raw = read_signal_csv(input)?;
    let (x, _) = apply_padding(raw, opts.pad);
    let mode = Mode::from(opts.mode);
    let tree = decompose(&x, opts.levels, mode, None)?;
    let back = reconstruct(&tree, mode, None)?;
    let max_err = x
        .samples()
        .iter()
        .zip(back.samples())
        .fold(0.0f64, |m, (a, b)| m.max((a - b).abs()));
    println!("max abs error: {max_err:e}");
    Ok(u8::from(max_err > 1e-9))
}

fn cmd_compare(
    input: Option<&Path>,
    n: usize,
    seed: u64,
    output: Option<&Path>,
    plot: Option<&Path>,
    pad: PadArg,
) -> Result<u8, CliError> {
    let raw = match input {
        Some(path) => read_signal_csv(path)?,
        None => random_signal(n, seed),
    };
    let (x, _) = apply_padding(raw, pad);
    let (approx, detail) = compare_transforms(&x)?;
    println!("approx max_db: {}", approx.max_db);
    println!("detail max_db: {}", detail.max_db);

    if let Some(dir) = output {
        ensure_dir(dir)?;
        let comments = |band: &str, max_db: f64| {
            vec![
                format!("band: {band}"),
                format!("signal_length: {}", x.len()),
                format!("max_db: {max_db}"),
                "values: pointwise error in dB, peak-normalized".to_string(),
            ]
        };
        let approx_path = dir.join("approx_db.csv");
        let approx_db =
            Signal::new(approx.pointwise_db.clone()).expect("dB values are finite after flooring");
        write_signal_csv_with_comments(
            &approx_db,
            &approx_path,
            &comments("approx", approx.max_db),
        )?;
        println!("wrote {}", approx_path.display());

        let detail_path = dir.join("detail_db.csv");
        let detail_db =
            Signal::new(detail.pointwise_db.clone()).expect("dB values are finite after flooring");
        write_signal_csv_with_comments(
            &detail_db,
            &detail_path,
            &comments("detail", detail.max_db),
        )?;
        println!("wrote {}", detail_path.display());
    }

    if let Some(plot_path) = plot {
        let series = vec![
            ("approx dB".to_string(), approx.pointwise_db.clone()),
            ("detail dB".to_string(), detail.pointwise_db.clone()),
        ];
        emit_svg_plot(&series, plot_path)?;
        println!("wrote {}", plot_path.display());
    }

    Ok(u8::from(!(approx.max_db <= -90.0 && detail.max_db <= -90.0)))
}

fn cmd_bench(n: usize, levels: usize, seed: u64, time: Option<usize>) -> Result<u8, CliError> {
    let report = complexity_report(n, levels, seed, time)?;
    println!(
        "{:<28} {:>12} {:>12} {:>12}",
        "transform", "muls", "adds", "total"
    );
    for side in [&report.baseline, &report.fast] {
        println!(
            "{:<28} {:>12} {:>12} {:>12}",
            side.label,
            side.mul_count,
            side.add_count,
            side.total()
        );
    }
    println!("mul_ratio: {}", report.mul_ratio);
    println!("total_ratio: {}", report.total_ratio);
    if let (Some(direct_s), Some(fast_s)) = (report.wall_clock_baseline, report.wall_clock_fast) {
        println!("median wall clock direct: {direct_s:e} s");
        println!("median wall clock fast: {fast_s:e} s");
    }
    Ok(0)
}

fn cmd_image(input: &Path, output: &Path) -> Result<u8, CliError> {
    let img = read_pgm(input)?;
    let direct = analyze2d(&img, Mode::Direct, None)?;
    let fast = analyze2d(&img, Mode::Fast, None)?;
    ensure_dir(output)?;

    let direct_path = output.join("ll_direct.pgm");
    write_pgm(&lowpass_display(&direct), &direct_path)?;
    println!("wrote {}", direct_path.display());

    let fast_path = output.join("ll_fast.pgm");
    write_pgm(&lowpass_display(&fast), &fast_path)?;
    println!("wrote {}", fast_path.display());

    let diff = difference_image(&direct.ll, &fast.ll)?;
    let diff_path = output.join("diff.csv");
    let diff_signal = Signal::new(diff.pixels().to_vec()).expect("difference pixels are finite");
    write_signal_csv_with_comments(
        &diff_signal,
        &diff_path,
        &[
            "band: ll difference (direct - fast), row-major".to_string(),
            format!("width: {}", diff.width()),
            format!("height: {}", diff.height()),
        ],
    )?;
    println!("wrote {}", diff_path.display());

    let amplified = GrayImage::new(
        diff.width(),
        diff.height(),
        diff.pixels()
            .iter()
            .map(|p| (p.abs() * DIFF_DISPLAY_GAIN).clamp(0.0, 255.0))
            .collect(),
    )?;
    let display_path = output.join("diff_display.pgm");
    write_pgm(&amplified, &display_path)?;
    println!("wrote {}", display_path.display());

    println!("max |ll difference|: {:e}", diff.max_abs());
    Ok(0)
}
