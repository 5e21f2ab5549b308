use std::process::Command;

#[test]
fn header_compiles_as_c_and_cpp() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let src = tempfile_path("acso_header_check.c");
    std::fs::write(
        &src,
        "#include \"acso.h\"\nint main(void) {\n  AcsoSpace *s = 0;\n  AcsoStatus st = acso_space_from_json(\"{}\", &s);\n  \
         acso_space_free(s);\n  return st == ACSO_STATUS_OK ? 0 : (int)st;\n}\n",
    )
    .unwrap();
    for (compiler, extra) in [("cc", vec!["-std=c99"]), ("c++", vec!["-x", "c++"])] {
        let Ok(out) = Command::new(compiler)
            .args(["-fsyntax-only", "-Wall", "-Werror", "-I"])
            .arg(format!("{dir}/include"))
            .args(&extra)
            .arg(&src)
            .output()
        else {
            eprintln!("{compiler} not available; skipped");
            continue;
        };
        assert!(
            out.status.success(),
            "{compiler}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
}

fn tempfile_path(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("{}_{name}", std::process::id()))
}
