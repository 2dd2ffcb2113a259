use std::fs;
use std::process::{Command, Output};

fn rsinsdel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rsinsdel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn status(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn kv<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    text.lines()
        .find_map(|l| l.strip_prefix(key)?.strip_prefix('='))
}

#[test]
fn construct_square_over_gf7() {
    let out = rsinsdel(&[
        "construct",
        "--p",
        "7",
        "--e",
        "1",
        "--n",
        "6",
        "--kind",
        "square",
        "--format",
        "kv",
    ]);
    assert_eq!(status(&out), 0);
    let text = stdout(&out);
    assert_eq!(kv(&text, "gamma_min_poly"), Some("2,0,0,1"));
    assert_eq!(kv(&text, "delta"), Some("1,2,3,4,5,6"));
    assert!(stdout(&rsinsdel(&["construct", "--p", "7", "--n", "6"])).contains("GF(343)"));
}

#[test]
fn construct_inverse_char_two_and_limits() {
    let out = rsinsdel(&[
        "construct",
        "--p",
        "2",
        "--e",
        "3",
        "--n",
        "7",
        "--kind",
        "inverse",
        "--format",
        "kv",
    ]);
    assert_eq!(status(&out), 0);
    assert_eq!(kv(&stdout(&out), "n"), Some("7"));
    let too_long = rsinsdel(&["construct", "--p", "7", "--n", "6", "--kind", "inverse"]);
    assert_eq!(status(&too_long), 1);
    assert!(String::from_utf8_lossy(&too_long.stderr).contains("maximum 3"));
    assert_eq!(
        status(&rsinsdel(&[
            "construct",
            "--p",
            "2",
            "--e",
            "3",
            "--n",
            "4",
            "--kind",
            "square"
        ])),
        1
    );
    assert_eq!(status(&rsinsdel(&["construct", "--p", "6", "--n", "4"])), 1);
}

#[test]
fn verify_constructed_and_loaded_codes() {
    let out = rsinsdel(&["verify", "--p", "7", "--n", "6", "--format", "kv"]);
    assert_eq!(status(&out), 0);
    assert_eq!(kv(&stdout(&out), "passed"), Some("true"));
    assert_eq!(kv(&stdout(&out), "pairs_checked"), Some("290"));

    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.code");
    fs::write(
        &good,
        stdout(&rsinsdel(&["construct", "--p", "11", "--n", "10"])),
    )
    .unwrap();
    let loaded = rsinsdel(&["verify", "--file", good.to_str().unwrap(), "--sequential"]);
    assert_eq!(status(&loaded), 0);
    assert!(stdout(&loaded).contains("PASS"));

    // evaluation points 1..6 of GF(343)
    let ap = dir.path().join("ap.code");
    fs::write(
        &ap,
        "format=rsinsdel-code/1\np=7\ne=1\nmodulus=\ngamma_min_poly=2,0,0,1\nk=2\nn=6\nkind=none\nalpha=1,2,3,4,5,6\ndelta=\n",
    )
    .unwrap();
    let failed = rsinsdel(&[
        "verify",
        "--file",
        ap.to_str().unwrap(),
        "--format",
        "kv",
        "--witness-limit",
        "3",
    ]);
    assert_eq!(status(&failed), 2);
    let text = stdout(&failed);
    assert_eq!(kv(&text, "witness_i"), Some("1,2,3"));
    assert_eq!(kv(&text, "witness_j"), Some("1,3,5"));
    assert_eq!(kv(&text, "witness_det"), Some("0"));
    assert!(kv(&text, "witness_3").is_some());

    let missing = rsinsdel(&[
        "verify",
        "--file",
        dir.path().join("nope").to_str().unwrap(),
    ]);
    assert_eq!(status(&missing), 1);
    let garbage = dir.path().join("garbage.code");
    fs::write(&garbage, "hello\n").unwrap();
    assert_eq!(
        status(&rsinsdel(&["verify", "--file", garbage.to_str().unwrap()])),
        1
    );
}

#[test]
fn simulate_within_and_beyond_the_radius() {
    for seed in ["0", "1", "2", "123456789"] {
        let out = rsinsdel(&[
            "simulate", "--p", "11", "--n", "10", "--t-del", "4", "--t-ins", "3", "--seed", seed,
            "--format", "kv",
        ]);
        assert_eq!(status(&out), 0, "{}", stdout(&out));
        assert_eq!(kv(&stdout(&out), "success"), Some("true"));
    }
    let clean = rsinsdel(&["simulate", "--p", "7", "--n", "6", "--format", "kv"]);
    assert_eq!(status(&clean), 0);
    assert_eq!(kv(&stdout(&clean), "script"), Some(""));

    let refused = rsinsdel(&[
        "simulate", "--p", "11", "--n", "10", "--t-del", "5", "--t-ins", "3",
    ]);
    assert_eq!(status(&refused), 1);
    assert!(String::from_utf8_lossy(&refused.stderr).contains("--force"));
    let forced = rsinsdel(&[
        "simulate", "--p", "11", "--n", "10", "--t-del", "10", "--force", "--format", "kv",
    ]);
    assert_eq!(status(&forced), 2);
    assert_eq!(kv(&stdout(&forced), "result"), Some("too_many_errors"));
}

#[test]
fn bounds() {
    let out = rsinsdel(&["bounds", "--n", "6", "--format", "kv"]);
    assert_eq!(status(&out), 0);
    let text = stdout(&out);
    assert_eq!(kv(&text, "upper"), Some("343"));
    assert_eq!(kv(&text, "lower"), Some("19"));
    assert_eq!(kv(&text, "smallest_base_order"), Some("7"));
    assert_eq!(
        kv(
            &stdout(&rsinsdel(&["bounds", "--n", "3", "--format", "kv"])),
            "lower"
        ),
        Some("0")
    );
    assert_eq!(
        kv(
            &stdout(&rsinsdel(&["bounds", "--n", "100", "--format", "kv"])),
            "ratio"
        ),
        Some("6.3717")
    );
    assert_eq!(status(&rsinsdel(&["bounds", "--n", "2"])), 1);
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(status(&rsinsdel(&[])), 1);
    assert_eq!(status(&rsinsdel(&["frobnicate"])), 1);
    assert_eq!(status(&rsinsdel(&["verify", "--p", "7"])), 1);
    assert_eq!(
        status(&rsinsdel(&[
            "verify",
            "--p",
            "7",
            "--n",
            "6",
            "--witness-limit",
            "0"
        ])),
        1
    );
    assert_eq!(
        status(&rsinsdel(&[
            "construct",
            "--p",
            "7",
            "--n",
            "6",
            "--kind",
            "cube"
        ])),
        1
    );
    assert_eq!(status(&rsinsdel(&["--help"])), 0);
}

#[test]
fn output_is_reproducible() {
    let runs = [
        vec![
            "construct",
            "--p",
            "13",
            "--n",
            "12",
            "--shuffle",
            "4",
            "--format",
            "kv",
        ],
        vec!["verify", "--p", "13", "--n", "12", "--format", "kv"],
        vec![
            "simulate", "--p", "13", "--n", "12", "--t-del", "5", "--t-ins", "4", "--seed", "77",
            "--format", "kv",
        ],
        vec!["bounds", "--n", "20", "--format", "kv"],
    ];
    for args in runs {
        let (a, b) = (rsinsdel(&args), rsinsdel(&args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(status(&a), status(&b));
    }
    let seq = rsinsdel(&[
        "verify",
        "--p",
        "13",
        "--n",
        "12",
        "--format",
        "kv",
        "--sequential",
    ]);
    assert_eq!(
        seq.stdout,
        rsinsdel(&["verify", "--p", "13", "--n", "12", "--format", "kv"]).stdout
    );
}
