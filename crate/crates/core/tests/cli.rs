use std::path::Path;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("trisect").chain(args.iter().copied()).map(String::from);
    let code = trisect::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

#[test]
fn validate_catalog_files() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["cp2", "T2", "fig2_example", "torus_shadow"] {
        let f = path(dir.path(), name);
        assert_eq!(run(&["catalog", "get", name, "-o", &f]).0, 0);
        let (code, out, _) = run(&["validate", &f]);
        assert_eq!(code, 0, "{name}: {out}");
    }
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = path(dir.path(), "bad.tri");
    std::fs::write(&bad, "TRI 1\nFACE f 4\nGLUE f.0 nowhere\n").unwrap();
    assert_eq!(run(&["validate", &bad]).0, 2);
    assert_eq!(run(&["validate", &path(dir.path(), "missing.tri")]).0, 2);
    assert_eq!(run(&["catalog", "get", "nope"]).0, 4);

    let fig2 = path(dir.path(), "fig2.tri");
    run(&["catalog", "get", "fig2_example", "-o", &fig2]);
    assert_eq!(run(&["monodromy", &fig2]).0, 3);

    let cp1 = path(dir.path(), "cp1.tri");
    run(&["catalog", "get", "cp1_shadow", "-o", &cp1]);
    let (code, _, err) = run(&["complement", &cp1, "-o", &path(dir.path(), "c.tri")]);
    assert_eq!(code, 4, "{err}");
}

#[test]
fn declared_params_mismatch() {
    let dir = tempfile::tempdir().unwrap();
    let f = path(dir.path(), "cp2.tri");
    run(&["catalog", "get", "cp2", "-o", &f]);
    let text = std::fs::read_to_string(&f).unwrap();
    let line = text.lines().find(|l| l.starts_with("META params")).unwrap().to_string();
    std::fs::write(&f, text.replace(&line, "META params (2,0)")).unwrap();
    assert_eq!(run(&["validate", &f]).0, 1);
}

#[test]
fn price_twist_writes_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let shadow = path(dir.path(), "m.tri");
    run(&["catalog", "get", "unknotted_rp2_shadow_minus", "-o", &shadow]);
    let out = dir.path().join("twist");
    let (code, report, err) = run(&["price-twist", &shadow, "--euler", "-2", "-o", &out.to_string_lossy()]);
    assert_eq!(code, 0, "{err}");
    for f in ["complement.tri", "neighbourhood.tri", "trivial.tri", "tau.tri", "report.txt"] {
        assert!(out.join(f).exists(), "{f}");
    }
    assert!(report.contains("Z/2"));
    let (code, inv, _) = run(&["invariants", &out.join("tau.tri").to_string_lossy()]);
    assert_eq!(code, 0);
    assert!(inv.contains("H1 Z/2"), "{inv}");
}
