use std::path::PathBuf;
use std::process::Command;

fn instance(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "instances", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn magmoid(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_magmoid"))
        .args(args)
        .output()
        .expect("binary runs");
    let code = out.status.code().expect("exited normally");
    (code, String::from_utf8(out.stdout).expect("utf-8 output"))
}

#[test]
fn every_instance_passes_the_axiom_check() {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "instances"].iter().collect();
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let path = entry.unwrap().path();
        let (code, out) = magmoid(&["check", path.to_str().unwrap()]);
        assert_eq!(code, 0, "{}:\n{out}", path.display());
        assert!(out.ends_with("Verified\n"));
        seen += 1;
    }
    assert!(seen >= 10);
}

#[test]
fn theorem_commands_verify_on_their_instances() {
    for (cmd, file) in [
        ("points", "logical_or.json"),
        ("quotient", "smash.json"),
        ("diagonal", "logical_or.json"),
        ("diagonal", "fininj.json"),
        ("fixpoint", "logical_or.json"),
        ("fixpoint-regular", "logical_or.json"),
        ("hom-check", "slice.json"),
        ("hom-check", "pointed_bot.json"),
        ("uniform-fix", "pointed_bot.json"),
        ("fix-split-epi", "split_epi.json"),
    ] {
        let (code, out) = magmoid(&[cmd, &instance(file)]);
        assert_eq!(code, 0, "{cmd} {file}:\n{out}");
    }
}

#[test]
fn fixpoint_search_finds_the_logical_or_index() {
    let (code, out) = magmoid(&["fixpoint", "--search", &instance("logical_or.json")]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("c: 1→2 [*↦1]"), "{out}");
}

#[test]
fn missing_index_is_a_failure() {
    let (code, out) = magmoid(&["fixpoint", "--search", &instance("fininj.json")]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("NotFound"));
}

#[test]
fn statman_fpc_is_verified() {
    let (code, out) = magmoid(&["comb", "fpc", "B(WW)((BW)((BB)B))"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("Verified\n"));
    let (code, out) = magmoid(&["comb", "basis", "B(WW)((BW)((BB)B))"]);
    assert_eq!(code, 0);
    assert!(out.contains("FL_c"), "{out}");
}

#[test]
fn budget_exhaustion_is_inconclusive() {
    let (code, out) = magmoid(&["hom-check", &instance("smash.json"), "--budget", "2"]);
    assert_eq!(code, 2, "{out}");
    let (code, _) = magmoid(&["comb", "fpc", "K"]);
    assert_eq!(code, 2);
    let (code, _) = magmoid(&["comb", "reduce", "B (W W) (B W (B B B)) x", "--fuel", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn malformed_input_exits_three() {
    let dir = std::env::temp_dir().join(format!("magmoid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        "{\"variant\": \"finset\",\n \"t\": \"1\", \"bogus\": 1}",
    )
    .unwrap();
    let (code, out) = magmoid(&["check", bad.to_str().unwrap()]);
    assert_eq!(code, 3, "{out}");
    assert!(out.contains(":2:"), "line number reported: {out}");
    let truncated = dir.join("truncated.json");
    std::fs::write(&truncated, "{\"variant\": ").unwrap();
    assert_eq!(magmoid(&["check", truncated.to_str().unwrap()]).0, 3);
    assert_eq!(
        magmoid(&["check", dir.join("absent.json").to_str().unwrap()]).0,
        3
    );
    assert_eq!(magmoid(&["comb", "reduce", "B X"]).0, 3);
    assert_eq!(magmoid(&["frobnicate"]).0, 3);
    assert_eq!(magmoid(&["--help"]).0, 0);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn missing_role_is_an_input_error() {
    let (code, out) = magmoid(&["fix-split-epi", &instance("smash.json")]);
    assert_eq!(code, 3, "{out}");
    assert!(out.contains("missing role"), "{out}");
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["check".to_string(), instance("slice.json")],
        vec!["quotient".to_string(), instance("pointed_bot.json")],
        vec![
            "--format".into(),
            "structured".into(),
            "diagonal".into(),
            instance("fininj.json"),
        ],
        vec!["comb".into(), "fpc".into(), "B(WW)((BW)((BB)B))".into()],
    ] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(magmoid(&args), magmoid(&args), "{args:?}");
    }
}

#[test]
fn structured_output_is_json() {
    let (code, out) = magmoid(&[
        "--format",
        "structured",
        "fixpoint",
        &instance("logical_or.json"),
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["verdict"], "verified");
    assert_eq!(v["command"], "fixpoint");
}

#[test]
fn a_supplied_hom_candidate_that_is_not_representable_fails_with_a_witness() {
    let (code, out) = magmoid(&["hom-check", &instance("hom_candidate.json")]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("witness:"), "{out}");
    let (code, out) = magmoid(&["hom-check", &instance("hom_candidate.json"), "--probe-set", "2"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("probe 2"), "{out}");
}
