use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_pineapple"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_ds_exit_codes() {
    let (code, out, _) = run(&["verify-ds", "--pineapple", "4", "3"]);
    assert_eq!(code, 0);
    let json: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(json["mates"], serde_json::json!([]));
    assert_eq!(json["exhaustive"], serde_json::json!(true));
    assert_eq!(
        run(&["verify-ds", "--pineapple", "4", "4", "--workers", "2"]).0,
        3
    );
}

#[test]
fn certificate_file_is_written() {
    let path = std::env::temp_dir().join(format!("pineapple-cert-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, out, _) = run(&["verify-ds", "--graph6", "G~aCC?", "--out", p]);
    assert_eq!(code, 3);
    assert!(out.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    let cert = pineapple::DsCertificate::from_json(&text).unwrap();
    assert_eq!(cert.mates.len(), 2);
}

#[test]
fn census_streams_graph6() {
    let (code, out, err) = run(&["census", "--n", "7", "--edges", "17", "--connected"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 10);
    assert_eq!(err.trim(), "10");
    for line in out.lines() {
        let g = pineapple::decode_graph6(line).unwrap();
        assert_eq!((g.order(), g.edge_count()), (7, 17));
        assert!(g.is_connected());
    }
    let (_, again, _) = run(&[
        "census",
        "--n",
        "7",
        "--edges",
        "17",
        "--connected",
        "--workers",
        "1",
    ]);
    assert_eq!(out, again);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).0, 2);
    assert_eq!(
        run(&["charpoly", "--graph6", "A_", "--pineapple", "3", "1"]).0,
        2
    );
    assert_eq!(run(&["cospectral", "A_"]).0, 2);
    assert_eq!(run(&["pineapple", "x", "1"]).0, 2);
    assert_eq!(run(&["census", "--n", "11"]).0, 4);
}

#[test]
fn cospectral_and_charpoly() {
    let (code, out, _) = run(&["cospectral", "G~aCC?", "G_?@x{"]);
    assert_eq!((code, out.trim()), (0, "cospectral"));
    let (code, out, _) = run(&["cospectral", "G~aCC?", "G~}CC?"]);
    assert_eq!((code, out.trim()), (3, "not cospectral"));
    let (_, out, _) = run(&["charpoly", "--pineapple", "4", "4"]);
    assert_eq!(out.trim(), "x^8 - 10x^6 - 8x^5 + 9x^4 + 8x^3");
    let (code, out, _) = run(&["lemma4-audit", "--max-n", "6"]);
    assert_eq!(code, 0);
    assert!(out.trim_end().ends_with("violations: 0"));
}
