//! The gen, reduce, and solve commands: file I/O around the core operations.

use std::path::{Path, PathBuf};

use epimatch_core::{
    build, format_metadata, generate_instance, parse_instance, serialize_instance, solve,
    AlphabetKind, Error, ReductionInstance, Solver, Text,
};

use crate::{read_file, write_file, CliError, CliResult};

/// Generates an OV instance and writes it in the plain-text instance
/// format. Deterministic in `seed`.
pub fn run_gen(
    n: usize,
    m: usize,
    d: usize,
    planted: bool,
    seed: u64,
    out: &Path,
) -> CliResult<()> {
    let instance = generate_instance(n, m, d, planted, seed)?;
    write_file(out, &serialize_instance(&instance))
}

/// Paths written by [`run_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReduceOutput {
    pub s_path: PathBuf,
    pub p_path: PathBuf,
    pub meta_path: PathBuf,
    pub instance: ReductionInstance,
}

/// Reads an OV instance file, builds the reduction of the requested kind,
/// and emits `<prefix>.s.txt`, `<prefix>.p.txt`, and `<prefix>.meta.txt`.
///
/// After writing, the S and P files are read back and checked against the
/// built instance and its length invariants.
pub fn run_reduce(input: &Path, kind: AlphabetKind, out_prefix: &str) -> CliResult<ReduceOutput> {
    let instance = parse_instance(&read_file(input)?)?;
    let built = build(&instance, kind)?;
    built
        .check_geometry()
        .map_err(Error::InternalInvariant)?;

    let out = ReduceOutput {
        s_path: PathBuf::from(format!("{out_prefix}.s.txt")),
        p_path: PathBuf::from(format!("{out_prefix}.p.txt")),
        meta_path: PathBuf::from(format!("{out_prefix}.meta.txt")),
        instance: built,
    };
    write_file(&out.s_path, &out.instance.s().to_file_bytes())?;
    write_file(&out.p_path, &out.instance.p().to_file_bytes())?;
    write_file(&out.meta_path, format_metadata(&out.instance).as_bytes())?;

    // Re-verify the emitted files: they must parse back to exactly the
    // texts whose geometry was checked above.
    let s_back = Text::parse_file_bytes(kind, &read_file(&out.s_path)?)?;
    let p_back = Text::parse_file_bytes(kind, &read_file(&out.p_path)?)?;
    if s_back != *out.instance.s() || p_back != *out.instance.p() {
        return Err(CliError::Core(Error::InternalInvariant(
            "emitted reduction files do not round-trip".into(),
        )));
    }
    Ok(out)
}

/// Reads S and P files, runs the selected solver, and renders the result:
/// `<length> <window_start> <window_end>`, or `NONE` when the pattern does
/// not embed at all.
///
/// The source file fixes the alphabet: its smallest containing alphabet is
/// inferred, and the pattern must parse under it, so a four-symbol pattern
/// against a binary source is an alphabet mismatch rather than a `NONE`.
pub fn run_solve(s_path: &Path, p_path: &Path, solver: Solver) -> CliResult<String> {
    let s_bytes = read_file(s_path)?;
    let s_kind = infer_file_kind(&s_bytes)?;
    let s = Text::parse_file_bytes(s_kind, &s_bytes)?;

    let p_bytes = read_file(p_path)?;
    let p_kind = infer_file_kind(&p_bytes)?;
    if p_kind > s_kind {
        return Err(CliError::Core(Error::AlphabetMismatch {
            expected: s_kind,
            found: p_kind,
        }));
    }
    let p = Text::parse_file_bytes(s_kind, &p_bytes)?;

    Ok(match solve(&s, &p, solver)? {
        Some(episode) => format!(
            "{} {} {}",
            episode.length, episode.window_start, episode.window_end
        ),
        None => "NONE".to_string(),
    })
}

fn infer_file_kind(bytes: &[u8]) -> CliResult<AlphabetKind> {
    let mut content = bytes;
    if content.last() == Some(&b'\n') {
        content = &content[..content.len() - 1];
        if content.last() == Some(&b'\r') {
            content = &content[..content.len() - 1];
        }
    }
    AlphabetKind::infer(content).ok_or_else(|| {
        CliError::Core(Error::Parse(
            "text file contains bytes outside the 0/1/x/$ alphabet".into(),
        ))
    })
}
