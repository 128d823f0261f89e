//! Command-line front end.
//!
//! Every math input is an exact rational string (`8`, `3/2`, `-1/70`); nothing
//! is parsed as a float. Exit codes: 0 success, 1 a check failed, 2 bad usage
//! or unreadable input.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::delzant::{compare, delzant, DelzantResult};
use crate::error::Error;
use crate::exactlin::{GVec, GVec3};
use crate::golden::GoldenRational;
use crate::quasilattice::star;
use crate::symmetry::{canonicalize, group, orbit_classes, q30_orbit};
use crate::tiling::{self, generate_patch, read_patch, stats, to_obj, verify_patch, write_patch, PatchConfig, Rhombohedron};

/// Shift used when `--shift` is not given; generic for the standard window.
pub const DEFAULT_SHIFT: [&str; 3] = ["1/70", "1/110", "1/130"];

#[derive(Parser, Debug)]
#[command(name = "quasitile", version, about = "Icosahedral rhombohedral tilings and their Delzant data, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a cut-and-project patch and write it as JSON.
    Gen {
        /// Cutoff radius on tile anchors, in units of the edge length.
        #[arg(long, default_value = "8")]
        radius: String,
        /// Internal-space shift, three rationals.
        #[arg(long, num_args = 3, value_names = ["X", "Y", "Z"], allow_hyphen_values = true)]
        shift: Option<Vec<String>>,
        /// Output file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Audit a patch; exits 1 if any violation is found.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Delzant data of one tile.
    Delzant {
        #[command(flatten)]
        tile: TileArgs,
        /// Print the full result as JSON instead of the report.
        #[arg(long)]
        json: bool,
    },
    /// The rigid motion carrying a tile to the canonical tile of its type.
    Canon {
        #[command(flatten)]
        tile: TileArgs,
    },
    /// Generate the icosahedral group and check its invariances.
    Group,
    /// Tile counts of a patch.
    Stats {
        #[arg(long)]
        input: PathBuf,
    },
    /// Write a patch as a Wavefront OBJ mesh.
    ExportObj {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare the Delzant data of two tiles.
    Compare {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Patch file for numeric tile selectors.
        #[arg(long)]
        patch: Option<PathBuf>,
    },
}

#[derive(clap::Args, Debug)]
struct TileArgs {
    /// `oblate-canonical`, `prolate-canonical` or a tile index into `--patch`.
    #[arg(long)]
    tile: String,
    #[arg(long)]
    patch: Option<PathBuf>,
}

enum Failure {
    /// Bad flags or unreadable input: exit 2.
    Usage(String),
    /// A check ran and failed: exit 1.
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

/// Runs the CLI with process stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = io::stdout();
    let stderr = io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            let _ = writeln!(err, "\nRun `quasitile --help` for usage.");
            2
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Gen { radius, shift, out: path } => cmd_gen(&radius, shift, path.as_deref(), out, err),
        Command::Verify { input, json } => cmd_verify(&input, json, out),
        Command::Delzant { tile, json } => cmd_delzant(&tile, json, out),
        Command::Canon { tile } => cmd_canon(&tile, out),
        Command::Group => cmd_group(out),
        Command::Stats { input } => cmd_stats(&input, out),
        Command::ExportObj { input, out: path } => cmd_export(&input, path.as_deref(), out),
        Command::Compare { a, b, patch } => cmd_compare(&a, &b, patch.as_deref(), out),
    }
}

fn load_patch(path: &Path) -> Result<tiling::Patch, Failure> {
    let f = File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    read_patch(BufReader::new(f)).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn select_tile(sel: &str, patch: Option<&Path>) -> Result<Rhombohedron, Failure> {
    match sel {
        "oblate-canonical" => Ok(Rhombohedron::oblate_canonical()),
        "prolate-canonical" => Ok(Rhombohedron::prolate_canonical()),
        _ => {
            let idx: usize = sel.parse().map_err(|_| {
                Failure::Usage(format!(
                    "tile selector `{sel}` is not oblate-canonical, prolate-canonical or an index"
                ))
            })?;
            let path = patch.ok_or_else(|| Failure::Usage(format!("tile index {idx} needs --patch")))?;
            let p = load_patch(path)?;
            let n = p.tiles.len();
            p.tiles
                .into_iter()
                .nth(idx)
                .ok_or_else(|| Failure::Usage(format!("tile index {idx} out of range (patch has {n} tiles)")))
        }
    }
}

/// `exact ≈ float`, with a closed form such as `-1/φ` when one is recognized.
fn show(x: &GoldenRational) -> String {
    match x.closed_form() {
        Some(c) if c != x.to_string() => format!("{x} = {c} ≈ {:.6}", x.to_f64()),
        _ => format!("{x} ≈ {:.6}", x.to_f64()),
    }
}

fn short(x: &GoldenRational) -> String {
    x.closed_form().unwrap_or_else(|| x.to_string())
}

fn star_label(v: &GVec3) -> String {
    let s = star();
    for (m, u) in s.u.iter().enumerate() {
        if v == u {
            return format!("U{}", m + 1);
        }
        if *v == -u {
            return format!("-U{}", m + 1);
        }
    }
    for (m, e) in s.v.iter().enumerate() {
        if v == e {
            return format!("V{}", m + 1);
        }
        if *v == -e {
            return format!("-V{}", m + 1);
        }
    }
    String::new()
}

fn subscript(n: usize) -> char {
    char::from_u32(0x2080 + n as u32).unwrap_or('?')
}

fn cmd_gen(
    radius: &str,
    shift: Option<Vec<String>>,
    path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> CmdResult {
    let shift = shift.unwrap_or_else(|| DEFAULT_SHIFT.map(String::from).to_vec());
    let cfg = PatchConfig::parse(radius, [&shift[0], &shift[1], &shift[2]].map(String::as_str))?;
    let patch = generate_patch(&cfg)?;
    match path {
        Some(p) => {
            let f = File::create(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
            let mut w = BufWriter::new(f);
            write_patch(&patch, &mut w)?;
            w.flush()?;
            let st = stats(&patch);
            writeln!(
                err,
                "wrote {} tiles ({} oblate, {} prolate) to {}",
                patch.tiles.len(),
                st.oblate,
                st.prolate,
                p.display()
            )?;
        }
        None => write_patch(&patch, out)?,
    }
    Ok(())
}

fn cmd_verify(input: &Path, json: bool, out: &mut dyn Write) -> CmdResult {
    let patch = load_patch(input)?;
    let report = verify_patch(&patch);
    if json {
        serde_json::to_writer_pretty(&mut *out, &report).map_err(Error::from)?;
        writeln!(out)?;
    } else {
        writeln!(out, "tiles: {}", report.tiles)?;
        writeln!(out, "distinct vertices: {}", report.distinct_vertices)?;
        writeln!(out, "touching pairs: {}", report.touching_pairs)?;
        writeln!(out, "violations: {}", report.violations.len())?;
        for v in &report.violations {
            writeln!(out, "  {v}")?;
        }
        writeln!(out, "{}", if report.is_clean() { "OK" } else { "FAILED" })?;
    }
    if report.is_clean() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn delzant_report(tile: &Rhombohedron, d: &DelzantResult) -> String {
    let mut s = String::new();
    let edges: Vec<String> = tile.edges.iter().map(star_label).collect();
    let _ = writeln!(
        s,
        "tile: {} rhombohedron, anchor {}, edges {}",
        d.invariants.tile_type,
        tile.anchor,
        edges.join(" ")
    );
    let _ = writeln!(s, "normals X_j in {}:", d.quasilattice);
    for (j, n) in d.rep.normals.iter().enumerate() {
        let label = star_label(n);
        let _ = writeln!(s, "  X{} = {n}{}", subscript(j + 1), if label.is_empty() { label } else { format!("  {label}") });
    }
    let _ = writeln!(s, "offsets:");
    for (j, l) in d.rep.offsets.iter().enumerate() {
        let _ = writeln!(s, "  λ{} = {}", subscript(j + 1), show(l));
    }
    let far = &d.rep.offsets[3..];
    if far.iter().all(|l| l == &far[0]) {
        let _ = writeln!(s, "  λ₄ = λ₅ = λ₆ = {}", short(&far[0]));
    }
    let _ = writeln!(s, "ker π:");
    for k in &d.ndesc.kernel_basis {
        let _ = writeln!(s, "  {k}");
    }
    let _ = writeln!(s, "Γ generators (rank {}), modulo ker π + ℤ⁶:", d.ndesc.gamma_rank);
    for x in &d.ndesc.gamma_generators {
        let _ = writeln!(s, "  {x}");
    }
    let _ = writeln!(s, "level set: three 3-spheres, radii²:");
    for (k, r) in d.radii_sq.iter().enumerate() {
        let _ = writeln!(s, "  r{}² = {}", subscript(k + 1), show(r));
    }
    if d.radii_sq.iter().all(|r| r == &d.radii_sq[0]) {
        let _ = writeln!(s, "  b² = {}", short(&d.radii_sq[0]));
    }
    let _ = writeln!(s, "vertex charts:");
    for c in &d.chart_groups {
        let facets: Vec<String> = c.facets.iter().map(|j| (j + 1).to_string()).collect();
        let gens: Vec<String> = c.generators.iter().map(ToString::to_string).collect();
        let _ = writeln!(
            s,
            "  vertex {} facets {{{}}}: {}",
            c.vertex,
            facets.join(","),
            gens.join(" ")
        );
    }
    let inv = &d.invariants;
    let _ = writeln!(s, "polytope volume: {}", show(&inv.polytope_volume));
    let _ = writeln!(s, "cover volume: {}", show(&inv.cover_volume));
    s
}

fn cmd_delzant(args: &TileArgs, json: bool, out: &mut dyn Write) -> CmdResult {
    let tile = select_tile(&args.tile, args.patch.as_deref())?;
    let d = delzant(&tile)?;
    if json {
        serde_json::to_writer_pretty(&mut *out, &d).map_err(Error::from)?;
        writeln!(out)?;
    } else {
        write!(out, "{}", delzant_report(&tile, &d))?;
    }
    Ok(())
}

fn cmd_canon(args: &TileArgs, out: &mut dyn Write) -> CmdResult {
    let tile = select_tile(&args.tile, args.patch.as_deref())?;
    let c = canonicalize(&tile)?;
    let m = c.motion.g.matrix();
    writeln!(out, "type: {}", c.tile_type)?;
    writeln!(out, "g =")?;
    for r in 0..3 {
        let row: GVec3 = GVec(std::array::from_fn(|j| m[(r, j)].clone()));
        writeln!(out, "  {row}")?;
    }
    writeln!(out, "det g = {}", c.motion.g.det())?;
    writeln!(out, "t = {}", c.motion.t)?;
    writeln!(out, "rotation suffices: {}", if c.rotation_suffices { "yes" } else { "no" })?;
    writeln!(out, "valid group elements: {}", c.candidates)?;
    Ok(())
}

fn cmd_group(out: &mut dyn Write) -> CmdResult {
    let grp = group();
    let s = star();
    let rotations = grp.rotations().count();
    let orthogonal = grp.elements().iter().all(|g| {
        let d = g.det();
        d == GoldenRational::one() || d == -GoldenRational::one()
    });
    let signed = s.signed_v();
    let mut sorted_v = signed.clone();
    sorted_v.sort();
    let star_ok = grp.elements().iter().all(|g| {
        let mut img: Vec<GVec3> = signed.iter().map(|v| g.apply(v)).collect();
        img.sort();
        img == sorted_v
    });
    let q30_ok = grp.elements().iter().all(|g| {
        let mut img: Vec<GVec3> = s.q30.iter().map(|v| g.apply(v)).collect();
        img.sort();
        img == s.q30
    });
    let orbit = q30_orbit();
    let (oblate, prolate) = orbit_classes();
    let closed = grp.is_closed();
    let yn = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "order: {}", grp.len())?;
    writeln!(out, "rotations: {rotations}")?;
    writeln!(out, "closed under composition: {}", yn(closed))?;
    writeln!(out, "orthogonal with det ±1: {}", yn(orthogonal))?;
    writeln!(out, "{{±V_i}} invariant: {}", yn(star_ok))?;
    writeln!(out, "Q30 invariant: {}", yn(q30_ok))?;
    writeln!(out, "orbit of U1: {} vectors", orbit.len())?;
    writeln!(out, "edge triples: {oblate} oblate, {prolate} prolate")?;
    let ok = grp.len() == 120 && rotations == 60 && closed && orthogonal && star_ok && q30_ok && orbit.len() == 30;
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn cmd_stats(input: &Path, out: &mut dyn Write) -> CmdResult {
    let st = stats(&load_patch(input)?);
    writeln!(out, "oblate: {}", st.oblate)?;
    writeln!(out, "prolate: {}", st.prolate)?;
    if st.invalid > 0 {
        writeln!(out, "invalid: {}", st.invalid)?;
    }
    writeln!(out, "prolate/oblate: {:.6}", st.ratio)?;
    Ok(())
}

fn cmd_export(input: &Path, path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let obj = to_obj(&load_patch(input)?);
    match path {
        Some(p) => std::fs::write(p, obj).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => out.write_all(obj.as_bytes())?,
    }
    Ok(())
}

fn cmd_compare(a: &str, b: &str, patch: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let ta = select_tile(a, patch)?;
    let tb = select_tile(b, patch)?;
    let v = compare(&ta, &tb)?;
    let ia = crate::delzant::invariants(&ta)?;
    let ib = crate::delzant::invariants(&tb)?;
    let yn = |b: bool| if b { "yes" } else { "no" };
    writeln!(out, "A: {} (polytope volume {}, cover volume {})", ia.tile_type, short(&ia.polytope_volume), short(&ia.cover_volume))?;
    writeln!(out, "B: {} (polytope volume {}, cover volume {})", ib.tile_type, short(&ib.polytope_volume), short(&ib.cover_volume))?;
    if let (Ok(p), Ok(c)) = (
        ib.polytope_volume.checked_div(&ia.polytope_volume),
        ib.cover_volume.checked_div(&ia.cover_volume),
    ) {
        writeln!(out, "volume ratio B/A: polytope {}, cover {}", show(&p), show(&c))?;
    }
    writeln!(out, "same reduction data: {}", yn(v.same_reduction_data))?;
    writeln!(
        out,
        "diffeomorphic: {}; symplectomorphic: {}",
        yn(v.same_diffeotype),
        yn(v.same_diffeotype && v.same_symplectotype)
    )?;
    Ok(())
}
