//! Command-line pipeline: ingest an edge list, count per-vertex orbit tables
//! and 4-vertex edge orbits, convert to induced counts, and emit tables and
//! orbit-count distributions.

use anyhow::{bail, Context, Result};
use clap::{Parser, ValueEnum};
use graphlets::enumerate::{global_fundamental_counts, local_counts};
use graphlets::graph::{build_graph, build_oriented, parse_edge_list, Graph, CACHE_MAGIC};
use graphlets::orbit4::{count_edge_orbits4, count_voc4, EdgeOrbits};
use graphlets::orbit5::count_all_5voc_timed;
use graphlets::transform::{build_transform, to_induced, Transform, BLOCKS};
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Voc5,
    Voc4,
    EdgeOrbits4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Counts {
    Induced,
    Noninduced,
    Both,
}

/// Exact per-vertex orbit counts of all connected patterns on up to five
/// vertices. Default output is ORCA-compatible: line index = vertex id,
/// induced counts for orbits 0..72, space separated.
#[derive(Debug, Parser)]
#[command(name = "graphlets", version)]
struct RunConfig {
    /// Edge-list file (whitespace-separated pairs; '#'/'%' comments), or a
    /// binary graph cache written by --write-cache.
    input: Option<PathBuf>,

    /// What to compute.
    #[arg(long, value_enum, default_value_t = Mode::Voc5)]
    mode: Mode,

    /// Which counts to emit; "both" writes the non-induced table next to the
    /// induced one under "<out>.noninduced".
    #[arg(long, value_enum, default_value_t = Counts::Induced)]
    counts: Counts,

    /// Output path for the per-vertex table (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,

    /// Output path for the 4-vertex edge-orbit table.
    #[arg(long)]
    edge_orbits_out: Option<PathBuf>,

    /// Worker threads; 0 = all cores, 1 = sequential.
    #[arg(long, default_value_t = 0)]
    threads: usize,

    /// Comma-separated orbit indexes; writes one complementary cumulative
    /// distribution file per orbit.
    #[arg(long, value_delimiter = ',')]
    ccd: Vec<usize>,

    /// Prepend the vertex id to every output row.
    #[arg(long)]
    with_ids: bool,

    /// Print the induced<->non-induced transform matrices and exit.
    #[arg(long)]
    dump_transform_matrix: bool,

    /// Report wall time per pipeline stage and orbit group on stderr.
    #[arg(long)]
    timing: bool,

    /// Also store the parsed graph as a binary cache for fast reload.
    #[arg(long)]
    write_cache: Option<PathBuf>,
}

fn main() {
    let config = RunConfig::parse();
    if let Err(e) = run(&config) {
        eprintln!("error: {e:#}");
        std::process::exit(1);
    }
}

fn run(config: &RunConfig) -> Result<()> {
    if config.dump_transform_matrix {
        dump_transform_matrix()?;
        if config.input.is_none() {
            return Ok(());
        }
    }
    let Some(input) = &config.input else {
        bail!("missing input graph path");
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads)
        .build()
        .context("building thread pool")?;
    let mut timer = Timer::new(config.timing);

    let g = load_graph(input).with_context(|| format!("reading {}", input.display()))?;
    timer.stage("load");
    if let Some(cache) = &config.write_cache {
        write_atomic(cache, |w| g.write_cache(w))?;
        timer.stage("write-cache");
    }

    pool.install(|| run_counts(config, &g, &mut timer))
}

fn run_counts(config: &RunConfig, g: &Graph, timer: &mut Timer) -> Result<()> {
    let og = build_oriented(g);
    timer.stage("orient");
    let lc = local_counts(g, &og);
    timer.stage("local-counts");
    let v4 = count_voc4(g, &lc);
    timer.stage("voc4");

    let need_edge_orbits = config.mode != Mode::Voc4 || config.edge_orbits_out.is_some();
    let e4 = need_edge_orbits.then(|| {
        let e4 = count_edge_orbits4(g, &lc, &v4);
        timer.stage("edge-orbits");
        e4
    });

    let cols: Vec<Vec<i64>> = match config.mode {
        Mode::Voc4 | Mode::EdgeOrbits4 => (0..15).map(|j| v4.col_vec(j)).collect(),
        Mode::Voc5 => {
            let (table, group_times) =
                count_all_5voc_timed(g, &og, &lc, e4.as_ref().unwrap(), &v4);
            for (name, d) in group_times {
                timer.report(name, d);
            }
            timer.stage("voc5");
            table.cols
        }
    };
    let orbit_count = if config.mode == Mode::Voc5 { 73 } else { 15 };

    let transform = matches!(config.counts, Counts::Induced | Counts::Both)
        .then(build_transform);
    let induced = match &transform {
        Some(t) => {
            let ind = to_induced_prefix(t, &cols, orbit_count)?;
            timer.stage("transform");
            Some(ind)
        }
        None => None,
    };

    match config.mode {
        Mode::EdgeOrbits4 => {
            let dest = config.edge_orbits_out.as_ref().or(config.out.as_ref());
            emit_edge_orbits(g, e4.as_ref().unwrap(), dest.map(|p| p.as_path()))?;
        }
        _ => {
            match config.counts {
                Counts::Induced => {
                    emit_table(config, induced.as_ref().unwrap(), orbit_count, config.out.as_deref())?
                }
                Counts::Noninduced => emit_table(config, &cols, orbit_count, config.out.as_deref())?,
                Counts::Both => {
                    emit_table(config, induced.as_ref().unwrap(), orbit_count, config.out.as_deref())?;
                    let second = config
                        .out
                        .as_ref()
                        .map(|p| with_suffix(p, ".noninduced"))
                        .context("--counts both needs --out to place the second table")?;
                    emit_table(config, &cols, orbit_count, Some(&second))?;
                }
            }
            if let Some(dest) = &config.edge_orbits_out {
                if let Some(e4) = &e4 {
                    emit_edge_orbits(g, e4, Some(dest))?;
                }
            }
        }
    }
    timer.stage("output");

    if !config.ccd.is_empty() {
        let source = induced.as_ref().unwrap_or(&cols);
        for &orbit in &config.ccd {
            if orbit >= orbit_count {
                bail!("--ccd orbit {orbit} out of range for this mode");
            }
            let column: Vec<u64> = source[orbit].iter().map(|&x| x as u64).collect();
            let points = graphlets::ccd::emit_ccd(&column);
            match &config.out {
                Some(p) => {
                    let path = with_suffix(p, &format!(".ccd{orbit}"));
                    write_atomic(&path, |w| {
                        for (x, f) in &points {
                            writeln!(w, "{x}\t{f}")?;
                        }
                        Ok(())
                    })?;
                }
                None => {
                    let stdout = io::stdout();
                    let mut w = stdout.lock();
                    writeln!(w, "# ccd orbit {orbit}")?;
                    for (x, f) in &points {
                        writeln!(w, "{x}\t{f}")?;
                    }
                }
            }
        }
        timer.stage("ccd");
    }

    if config.timing {
        let f = global_fundamental_counts(g, &og);
        eprintln!(
            "# n={} m={} wedges={} diamonds={} dir3paths={} dirbipyramids={}",
            g.n(),
            g.m(),
            f.wedges,
            f.diamonds,
            f.dir_three_paths,
            f.dir_bipyramids
        );
    }
    Ok(())
}

/// Applies the induced transform to the leading `orbit_count` columns.
fn to_induced_prefix(t: &Transform, cols: &[Vec<i64>], orbit_count: usize) -> Result<Vec<Vec<i64>>> {
    // voc4 mode carries only the first three blocks
    let full;
    let cols_all: &[Vec<i64>] = if orbit_count == graphlets::patterns::NUM_ORBITS {
        cols
    } else {
        let n = cols.first().map_or(0, Vec::len);
        let mut padded = cols.to_vec();
        padded.resize(graphlets::patterns::NUM_ORBITS, vec![0i64; n]);
        full = padded;
        &full
    };
    let mut ind = to_induced(t, cols_all)?;
    ind.truncate(orbit_count);
    Ok(ind)
}

fn load_graph(path: &Path) -> Result<Graph> {
    let mut f = File::open(path)?;
    let mut magic = [0u8; 8];
    let is_cache = match f.read_exact(&mut magic) {
        Ok(()) => &magic == CACHE_MAGIC,
        Err(_) => false,
    };
    f.seek(SeekFrom::Start(0))?;
    if is_cache {
        Ok(Graph::read_cache(&mut BufReader::new(f))?)
    } else {
        let raw = parse_edge_list(BufReader::new(f))?;
        Ok(build_graph(&raw))
    }
}

fn with_suffix(p: &Path, suffix: &str) -> PathBuf {
    let mut s = p.as_os_str().to_os_string();
    s.push(suffix);
    PathBuf::from(s)
}

/// Writes through a temp file in the same directory, then renames.
fn write_atomic(
    path: &Path,
    f: impl FnOnce(&mut BufWriter<File>) -> io::Result<()>,
) -> Result<()> {
    let tmp = with_suffix(path, ".tmp");
    let mut w = BufWriter::new(
        File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?,
    );
    f(&mut w)?;
    w.flush()?;
    drop(w);
    std::fs::rename(&tmp, path)
        .with_context(|| format!("renaming {} into place", tmp.display()))?;
    Ok(())
}

fn emit_table(
    config: &RunConfig,
    cols: &[Vec<i64>],
    orbit_count: usize,
    dest: Option<&Path>,
) -> Result<()> {
    let n = cols.first().map_or(0, Vec::len);
    let body = |w: &mut dyn Write| -> io::Result<()> {
        let mut line = String::new();
        for v in 0..n {
            line.clear();
            if config.with_ids {
                line.push_str(&v.to_string());
                line.push(' ');
            }
            for (i, col) in cols[..orbit_count].iter().enumerate() {
                if i > 0 {
                    line.push(' ');
                }
                line.push_str(&col[v].to_string());
            }
            line.push('\n');
            w.write_all(line.as_bytes())?;
        }
        Ok(())
    };
    match dest {
        Some(p) => write_atomic(p, |w| body(w)),
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            body(&mut w)?;
            w.flush()?;
            Ok(())
        }
    }
}

/// One line per edge: u v, then E0..E11 with both orderings of the
/// asymmetric families.
fn emit_edge_orbits(g: &Graph, e4: &EdgeOrbits, dest: Option<&Path>) -> Result<()> {
    let body = |w: &mut dyn Write| -> io::Result<()> {
        let mut line = String::new();
        for (ei, &(u, v)) in g.canonical_edges().iter().enumerate() {
            let e = ei as u32;
            line.clear();
            line.push_str(&format!("{u} {v}"));
            let mut push = |x: i64| {
                line.push(' ');
                line.push_str(&x.to_string());
            };
            push(e4.asym(0, e, true));
            push(e4.asym(0, e, false));
            push(e4.sym(1, e));
            push(e4.asym(2, e, true));
            push(e4.asym(2, e, false));
            push(e4.sym(3, e));
            push(e4.asym(4, e, true));
            push(e4.asym(4, e, false));
            push(e4.sym(5, e));
            push(e4.asym(6, e, true));
            push(e4.asym(6, e, false));
            push(e4.sym(7, e));
            push(e4.asym(8, e, true));
            push(e4.asym(8, e, false));
            push(e4.asym(9, e, true));
            push(e4.asym(9, e, false));
            push(e4.sym(10, e));
            push(e4.sym(11, e));
            line.push('\n');
            w.write_all(line.as_bytes())?;
        }
        Ok(())
    };
    match dest {
        Some(p) => write_atomic(p, |w| body(w)),
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            body(&mut w)?;
            w.flush()?;
            Ok(())
        }
    }
}

fn dump_transform_matrix() -> Result<()> {
    let t = build_transform();
    let stdout = io::stdout();
    let mut w = BufWriter::new(stdout.lock());
    for (b, &(lo, hi)) in BLOCKS.iter().enumerate() {
        writeln!(w, "# induced-to-noninduced, orbits {lo}..{hi}")?;
        write!(w, "{}", t.blocks[b].to_text())?;
        writeln!(w, "# noninduced-to-induced, orbits {lo}..{hi}")?;
        write!(w, "{}", t.inverses[b].to_text())?;
    }
    w.flush()?;
    Ok(())
}

struct Timer {
    enabled: bool,
    last: Instant,
}

impl Timer {
    fn new(enabled: bool) -> Timer {
        Timer {
            enabled,
            last: Instant::now(),
        }
    }

    fn stage(&mut self, name: &str) {
        let now = Instant::now();
        if self.enabled {
            eprintln!("timing {name} {:.3}s", (now - self.last).as_secs_f64());
        }
        self.last = now;
    }

    fn report(&self, name: &str, d: std::time::Duration) {
        if self.enabled {
            eprintln!("timing group {name} {:.3}s", d.as_secs_f64());
        }
    }
}
