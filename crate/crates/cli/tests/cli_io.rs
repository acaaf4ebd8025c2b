//! End-to-end tests through the compiled `epimatch` binary: file formats,
//! exit codes, and determinism of the gen / reduce / solve pipeline.

use std::path::PathBuf;
use std::process::{Command, Output};

fn epimatch(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epimatch"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn tmp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("epimatch-e2e-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn gen_writes_instance_file_with_expected_shape() {
    let dir = tmp_dir("gen");
    let out = dir.join("inst.ov");
    let result = epimatch(&[
        "gen", "--n", "4", "--m", "3", "--d", "3", "--planted", "--seed", "7", "--out",
        out.to_str().unwrap(),
    ]);
    assert!(result.status.success(), "{result:?}");

    let content = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = content.lines().collect();
    assert_eq!(lines[0], "4 3 3");
    assert_eq!(lines.len(), perm_header_plus_vectors(4, 3));
    assert!(lines[1..]
        .iter()
        .all(|l| l.len() == 3 && l.bytes().all(|b| b == b'0' || b == b'1')));
}

fn perm_header_plus_vectors(n: usize, m: usize) -> usize {
    1 + n + m
}

#[test]
fn gen_same_seed_is_byte_identical() {
    let dir = tmp_dir("gen-det");
    let one = dir.join("one.ov");
    let two = dir.join("two.ov");
    for path in [&one, &two] {
        let result = epimatch(&[
            "gen", "--n", "5", "--m", "2", "--d", "4", "--seed", "99", "--out",
            path.to_str().unwrap(),
        ]);
        assert!(result.status.success());
    }
    assert_eq!(std::fs::read(&one).unwrap(), std::fs::read(&two).unwrap());
}

#[test]
fn gen_rejects_m_larger_than_n() {
    let dir = tmp_dir("gen-bad");
    let out = dir.join("bad.ov");
    let result = epimatch(&[
        "gen", "--n", "2", "--m", "3", "--d", "2", "--out", out.to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(2), "{result:?}");
}

#[test]
fn reduce_emits_files_and_metadata() {
    let dir = tmp_dir("reduce");
    let inst = dir.join("inst.ov");
    // Fixed instance so the metadata is fully predictable.
    std::fs::write(&inst, "2 2 2\n11\n11\n11\n11\n").unwrap();

    let prefix = dir.join("four");
    let result = epimatch(&[
        "reduce", inst.to_str().unwrap(), "--kind", "4", "--out", prefix.to_str().unwrap(),
    ]);
    assert!(result.status.success(), "{result:?}");
    let meta = std::fs::read_to_string(dir.join("four.meta.txt")).unwrap();
    assert_eq!(
        meta,
        "kind=4\nn=2\nm=2\nd=2\nthreshold=19\ns_len=55\np_len=9\n"
    );
    let s = std::fs::read_to_string(dir.join("four.s.txt")).unwrap();
    let p = std::fs::read_to_string(dir.join("four.p.txt")).unwrap();
    assert_eq!(s.trim_end().len(), 55);
    assert_eq!(p.trim_end(), "$1x1$1x1$");

    let prefix = dir.join("bin");
    let result = epimatch(&[
        "reduce", inst.to_str().unwrap(), "--kind", "2", "--out", prefix.to_str().unwrap(),
    ]);
    assert!(result.status.success(), "{result:?}");
    let meta = std::fs::read_to_string(dir.join("bin.meta.txt")).unwrap();
    assert_eq!(
        meta,
        "kind=2\nn=2\nm=2\nd=2\nthreshold=38\ns_len=120\np_len=25\n"
    );
}

#[test]
fn reduce_rejects_malformed_header() {
    let dir = tmp_dir("reduce-bad");
    let inst = dir.join("broken.ov");
    std::fs::write(&inst, "2 2\n11\n11\n11\n11\n").unwrap();
    let result = epimatch(&[
        "reduce", inst.to_str().unwrap(), "--kind", "4", "--out",
        dir.join("x").to_str().unwrap(),
    ]);
    assert_eq!(result.status.code(), Some(2), "{result:?}");
}

#[test]
fn solve_prints_window_or_none() {
    let dir = tmp_dir("solve");
    let s = dir.join("s.txt");
    let p = dir.join("p.txt");

    std::fs::write(&s, "0110\n").unwrap();
    std::fs::write(&p, "10\n").unwrap();
    for algo in ["dp", "greedy", "brute"] {
        let result = epimatch(&[
            "solve", s.to_str().unwrap(), p.to_str().unwrap(), "--algo", algo,
        ]);
        assert!(result.status.success());
        assert_eq!(stdout(&result).trim(), "2 2 3");
    }

    std::fs::write(&p, "0110\n").unwrap();
    let result = epimatch(&["solve", s.to_str().unwrap(), p.to_str().unwrap()]);
    assert_eq!(stdout(&result).trim(), "4 0 3");

    std::fs::write(&s, "01\n").unwrap();
    std::fs::write(&p, "10\n").unwrap();
    let result = epimatch(&["solve", s.to_str().unwrap(), p.to_str().unwrap()]);
    assert!(result.status.success());
    assert_eq!(stdout(&result).trim(), "NONE");
}

#[test]
fn solve_rejects_empty_pattern_and_mismatched_alphabets() {
    let dir = tmp_dir("solve-bad");
    let s = dir.join("s.txt");
    let p = dir.join("p.txt");

    std::fs::write(&s, "0110\n").unwrap();
    std::fs::write(&p, "\n").unwrap();
    let result = epimatch(&["solve", s.to_str().unwrap(), p.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(2), "{result:?}");

    std::fs::write(&p, "0x1\n").unwrap();
    let result = epimatch(&["solve", s.to_str().unwrap(), p.to_str().unwrap()]);
    assert_eq!(result.status.code(), Some(2), "{result:?}");
}

#[test]
fn pipeline_reproduces_verify_decision() {
    // gen -> reduce -> solve -> threshold comparison must agree with the
    // planted flag, for both kinds.
    let dir = tmp_dir("pipeline");
    for (planted, seed) in [(true, 11u64), (false, 12)] {
        let inst = dir.join(format!("i{seed}.ov"));
        let result = epimatch(&[
            "gen", "--n", "5", "--m", "4", "--d", "3",
            "--seed", &seed.to_string(), "--out", inst.to_str().unwrap(),
        ]);
        // --planted is a flag, appended only when set.
        let result = if planted {
            epimatch(&[
                "gen", "--n", "5", "--m", "4", "--d", "3", "--planted",
                "--seed", &seed.to_string(), "--out", inst.to_str().unwrap(),
            ])
        } else {
            result
        };
        assert!(result.status.success());

        for kind in ["4", "2"] {
            let prefix = dir.join(format!("r{seed}k{kind}"));
            let result = epimatch(&[
                "reduce", inst.to_str().unwrap(), "--kind", kind, "--out",
                prefix.to_str().unwrap(),
            ]);
            assert!(result.status.success());
            let meta = std::fs::read_to_string(format!("{}.meta.txt", prefix.display())).unwrap();
            let threshold: usize = meta
                .lines()
                .find_map(|l| l.strip_prefix("threshold="))
                .unwrap()
                .parse()
                .unwrap();

            let result = epimatch(&[
                "solve",
                &format!("{}.s.txt", prefix.display()),
                &format!("{}.p.txt", prefix.display()),
                "--algo", "dp",
            ]);
            assert!(result.status.success());
            let line = stdout(&result);
            let episode_len: usize = line.split_whitespace().next().unwrap().parse().unwrap();
            assert_eq!(
                episode_len < threshold,
                planted,
                "kind={kind} seed={seed}: episode {episode_len} vs threshold {threshold}"
            );
        }
    }
}

#[test]
fn verify_small_sweep_exits_zero() {
    let result = epimatch(&[
        "verify", "--trials", "8", "--n", "4", "--d", "2", "--seed", "13", "--parallel", "1",
    ]);
    assert!(result.status.success(), "{result:?}");
    let text = stdout(&result);
    // 8 random + 272 exhaustive instances.
    assert!(text.contains("verified 280 instances: 280 pass, 0 fail"), "{text}");
    assert!(text.contains("negative control"), "{text}");
    assert!(text.contains("detected"), "{text}");
}

#[test]
fn bench_writes_well_formed_csv() {
    let dir = tmp_dir("bench");
    let csv_path = dir.join("bench.csv");
    let result = epimatch(&[
        "bench", "--n", "8,16", "--d", "2", "--kind", "4,2", "--algo", "dp,greedy",
        "--trials", "2", "--seed", "3", "--out", csv_path.to_str().unwrap(),
    ]);
    assert!(result.status.success(), "{result:?}");

    let csv = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = csv.lines();
    assert_eq!(
        lines.next().unwrap(),
        "kind,n,m,d,s_len,p_len,solver,episode_len,threshold,ov_decision,episode_decision,wall_time_ns"
    );
    let rows: Vec<&str> = lines.collect();
    // 2 kinds x 2 sizes x 2 solvers x 2 trials.
    assert_eq!(rows.len(), 16);
    for row in rows {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), 12, "{row}");
        assert!(fields[9] == "true" || fields[9] == "false");
        assert!(fields[10] == "true" || fields[10] == "false");
        let _: u64 = fields[11].parse().unwrap();
    }
}
