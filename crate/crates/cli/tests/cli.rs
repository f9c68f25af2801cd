use std::path::{Path, PathBuf};

use argon_cli::{run, Outcome, EXIT_OK, EXIT_PARSE, EXIT_USAGE};
use argon_core::fixtures;
use argon_core::io::{serialize_extension, to_afdimacs, to_apx, to_tgf};
use argon_core::{Extensions, SemanticsId};
use tempfile::TempDir;

fn write(dir: &TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn argon(args: &[&str]) -> Outcome {
    run(std::iter::once("argon").chain(args.iter().copied()))
}

fn on_file(path: &Path, rest: &[&str]) -> Outcome {
    let p = path.to_str().unwrap();
    let mut args = vec!["--file", p];
    args.extend_from_slice(rest);
    argon(&args)
}

#[test]
fn grounded_of_chain() {
    let dir = TempDir::new().unwrap();
    let path = write(
        &dir,
        "chain.apx",
        "arg(a). arg(b). arg(c). att(a,b). att(b,c).",
    );
    let out = on_file(&path, &["--task", "SE-GR"]);
    assert_eq!(out.status, EXIT_OK);
    assert_eq!(out.stdout, "[a,c]\n");
}

#[test]
fn no_stable_extension_of_odd_cycle() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "cycle3.apx", &to_apx(&fixtures::three_cycle()));
    let out = on_file(&path, &["--task", "EE-ST"]);
    assert_eq!(out.status, EXIT_OK);
    assert_eq!(out.stdout, "# 0\n");
    assert_eq!(on_file(&path, &["--task", "SE-ST"]).stdout, "NO\n");
}

#[test]
fn skeptical_preferred_on_floating() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "float.apx", &to_apx(&fixtures::floating()));
    assert_eq!(
        on_file(&path, &["--task", "DS-PR", "--arg", "A"]).stdout,
        "NO\n"
    );
    assert_eq!(
        on_file(&path, &["--task", "DS-PR", "--arg", "D"]).stdout,
        "YES\n"
    );
    assert_eq!(
        on_file(&path, &["--task", "DC-PR", "--arg", "A"]).stdout,
        "YES\n"
    );
    assert_eq!(
        on_file(&path, &["--task", "DC-GR", "--arg", "A"]).stdout,
        "NO\n"
    );
}

#[test]
fn labelling_enumeration() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "simple.tgf", &to_tgf(&fixtures::simple4()));
    let out = on_file(&path, &["--task", "LE-PR"]);
    assert_eq!(out.status, EXIT_OK);
    assert_eq!(
        out.stdout,
        "{\"in\":[\"A\",\"C\"],\"out\":[\"B\",\"D\"],\"undec\":[]}\n\
         {\"in\":[\"A\",\"D\"],\"out\":[\"B\",\"C\"],\"undec\":[]}\n"
    );
}

#[test]
fn se_grounded_matches_fixpoint_on_every_fixture() {
    let dir = TempDir::new().unwrap();
    for (name, af) in fixtures::named() {
        let path = write(&dir, &format!("{name}.apx"), &to_apx(&af));
        let expected = serialize_extension(&af, &Extensions::new(&af).grounded());
        assert_eq!(
            on_file(&path, &["--task", "SE-GR"]).stdout,
            format!("{expected}\n")
        );
    }
}

#[test]
fn ee_count_matches_enumerator() {
    let dir = TempDir::new().unwrap();
    for (name, af) in fixtures::named() {
        let path = write(&dir, &format!("{name}.apx"), &to_apx(&af));
        let ext = Extensions::new(&af);
        for sem in SemanticsId::ALL {
            let task = format!("EE-{}", sem.abbreviation());
            let out = on_file(&path, &["--task", &task]);
            let lines: Vec<&str> = out.stdout.lines().collect();
            let count = ext.enumerate(sem).len();
            assert_eq!(
                lines.last().copied(),
                Some(format!("# {count}").as_str()),
                "{name} {task}"
            );
            assert_eq!(lines.len(), count + 1);
        }
    }
}

#[test]
fn pruned_flag_gives_identical_output() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "simple.apx", &to_apx(&fixtures::simple4()));
    for task in ["EE-CO", "EE-STG", "LE-CO", "LE-SST"] {
        assert_eq!(
            on_file(&path, &["--task", task]),
            on_file(&path, &["--task", task, "--pruned"]),
        );
    }
}

#[test]
fn format_detection_and_override() {
    let dir = TempDir::new().unwrap();
    let af_path = write(&dir, "g.af", &to_afdimacs(&fixtures::chain()));
    assert_eq!(on_file(&af_path, &["--task", "SE-GR"]).stdout, "[1,3]\n");

    let txt = write(&dir, "g.txt", "p af 2\n1 2\n");
    assert_eq!(on_file(&txt, &["--task", "SE-GR"]).status, EXIT_USAGE);
    let out = on_file(&txt, &["--format", "af", "--task", "SE-GR"]);
    assert_eq!(out.stdout, "[1]\n");
}

#[test]
fn parse_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "bad.apx", "arg(a).\natt(a,b).\n");
    let out = on_file(&path, &["--task", "SE-GR"]);
    assert_eq!(out.status, EXIT_PARSE);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);

    let path = write(&dir, "bad.af", "p af 2\n1 3\n");
    assert_eq!(on_file(&path, &["--task", "SE-GR"]).status, EXIT_PARSE);
}

#[test]
fn usage_errors_exit_with_one() {
    let dir = TempDir::new().unwrap();
    let path = write(&dir, "chain.apx", &to_apx(&fixtures::chain()));
    assert_eq!(on_file(&path, &["--task", "DC-PR"]).status, EXIT_USAGE);
    assert_eq!(
        on_file(&path, &["--task", "SE-PR", "--arg", "A"]).status,
        EXIT_USAGE
    );
    assert_eq!(on_file(&path, &["--task", "XX-PR"]).status, EXIT_USAGE);
    assert_eq!(on_file(&path, &["--task", "SE-FOO"]).status, EXIT_USAGE);
    assert_eq!(
        on_file(&path, &["--task", "DC-PR", "--arg", "Z"]).status,
        EXIT_USAGE
    );
    assert_eq!(argon(&[]).status, EXIT_USAGE);
    assert_eq!(argon(&["--bogus"]).status, EXIT_USAGE);
    assert_eq!(
        argon(&["--file", "/nonexistent/x.apx", "--task", "SE-GR"]).status,
        EXIT_USAGE
    );
    assert_eq!(argon(&["--help"]).status, EXIT_OK);
}

#[test]
fn meta_reports() {
    let out = argon(&["--meta", "NaiveLabellingFundamental", "--max-n", "3"]);
    assert_eq!(out.status, EXIT_OK);
    assert_eq!(
        out.stdout,
        "PROPERTY NaiveLabellingFundamental REFUTED\n\
         arg(A).\narg(B).\narg(C).\natt(A,B).\natt(B,C).\n\
         % Lab = ({A},{},{B,C})\n% a = C\n"
    );
    let out = argon(&["--meta", "LabellingFundamental", "--max-n", "3"]);
    assert_eq!(
        out.stdout,
        "PROPERTY LabellingFundamental VERIFIED n<=3 frameworks=531\n"
    );
    assert_eq!(argon(&["--meta", "NoSuchProperty"]).status, EXIT_USAGE);
    assert_eq!(
        argon(&["--meta", "ExtensionFundamental", "--max-n", "6"]).status,
        EXIT_USAGE
    );
}
