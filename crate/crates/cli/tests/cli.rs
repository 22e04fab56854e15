use mrb_cli::config::default_signature;
use mrb_cli::parse::parse;
use mrb_cli::render::{render, Format, Value};
use mrb_cli::{run, EXIT_OK, EXIT_PARSE, EXIT_PROPERTY, EXIT_USAGE};
use mrb_core::checks::mrbw_corpus;
use mrb_core::word::enumerate_words;
use mrb_core::{q, ratio, LinComb, Mrba};

fn mrb(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("mrb").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn nf_of_adjacent_units() {
    let (code, out, _) = mrb(&["nf", "[1]_a [1]_b"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "[[1]_a]_b + [[1]_b]_a - [1]_a\n");
    let sig = default_signature();
    assert_eq!(
        parse(out.trim(), &sig).unwrap(),
        parse("[[1]_b]_a + [[1]_a]_b - [1]_a", &sig).unwrap()
    );
}

#[test]
fn coproduct_of_nested_units_has_three_terms() {
    let (code, out, _) = mrb(&["coproduct", "--carrier", "mrb", "[[1]_a]_b"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "[[1]_a]_b ⊗ 1 + [1]_a ⊗ [1]_b + 1 ⊗ [[1]_a]_b\n");
    let (_, rt, _) = mrb(&["coproduct", "--carrier", "rt", "[[1]_a]_b"]);
    assert_eq!(rt, "b(a) ⊗ 1 + a ⊗ b + 1 ⊗ b(a)\n");
}

#[test]
fn antipode_on_both_carriers() {
    assert_eq!(mrb(&["antipode", "[[1]_a]_b"]).1, "[[1]_b]_a - [1]_a\n");
    assert_eq!(
        mrb(&["antipode", "--carrier", "rt", "[[1]_a]_b"]).1,
        "a b - b(a)\n"
    );
    assert_eq!(mrb(&["antipode", "x"]).1, "-x\n");
}

#[test]
fn eval_reduces_then_multiplies() {
    let (code, out, _) = mrb(&["eval", "[1]_a", "[1]_b"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, mrb(&["nf", "[1]_a [1]_b"]).1);
    assert_eq!(mrb(&["eval", "x", "2 * y"]).1, "2 * x y\n");
}

#[test]
fn convert_round_trip() {
    let (_, forest, _) = mrb(&["convert", "[x y]_a [1]_b"]);
    assert_eq!(forest, "a(x y) b\n");
    let (_, word, _) = mrb(&["convert", "--from", "forest", forest.trim()]);
    assert_eq!(word, "[x y]_a [1]_b\n");
}

#[test]
fn render_formats() {
    let expr = "P_a(x y) - 2/3 * x";
    assert_eq!(mrb(&["render", expr]).1, "[x y]_a - 2/3 * x\n");
    assert_eq!(
        mrb(&["render", "--format", "latex", expr]).1,
        "\\lfloor x y \\rfloor_{a} - \\frac{2}{3} x\n"
    );
    assert_eq!(
        mrb(&["--format", "ascii-tree", "render", "[x y]_a"]).1,
        "coefficient 1\na\n├── x\n└── y\n"
    );
    assert_eq!(
        mrb(&["render", "--format", "json", "[1]_a + 2 * x"]).1,
        "{\"basis\":\"word\",\"terms\":[{\"coeff\":\"1\",\"monomial\":\"[1]_a\"},{\"coeff\":\"2\",\"monomial\":\"x\"}]}\n"
    );
    assert_eq!(mrb(&["render", "x - x"]).1, "0\n");
    assert_eq!(mrb(&["render", "1"]).1, "1\n");
}

#[test]
fn output_is_byte_stable() {
    let args = ["coproduct", "--format", "json", "[x [y]_b]_a"];
    let first = mrb(&args);
    for _ in 0..3 {
        assert_eq!(mrb(&args), first);
    }
    // Input order of terms does not matter.
    assert_eq!(
        mrb(&["render", "--format", "json", "x + [1]_a"]),
        mrb(&["render", "--format", "json", "[1]_a + x"])
    );
}

#[test]
fn plain_rendering_round_trips() {
    let sig = default_signature();
    let words = enumerate_words(&sig, 3);
    let coeffs = [q(1), q(-1), ratio(2, 3), ratio(-7, 5), q(4)];
    for (i, w) in words.iter().enumerate() {
        let mut v = LinComb::term(w.clone(), coeffs[i % coeffs.len()].clone());
        v.add_term(
            words[(7 * i + 3) % words.len()].clone(),
            coeffs[(i + 2) % coeffs.len()].clone(),
        );
        let text = render(&sig, &Value::Words(v.clone()), Format::Plain);
        assert_eq!(parse(&text, &sig).unwrap(), v, "{text}");
    }
}

#[test]
fn rendered_products_round_trip() {
    let sig = default_signature().truncated(1, 2).unwrap();
    let mrba = Mrba::new(sig.clone());
    let words = mrbw_corpus(&sig, 2);
    for u in &words {
        for v in &words {
            let p = mrba.diamond_words(u, v);
            let text = render(&sig, &Value::Words(p.clone()), Format::Plain);
            assert_eq!(parse(&text, &sig).unwrap(), p, "{text}");
        }
    }
}

#[test]
fn parse_errors_exit_with_position() {
    let (code, out, err) = mrb(&["nf", "[x]_c"]);
    assert_eq!(code, EXIT_PARSE);
    assert!(out.is_empty());
    assert!(err.contains("column 5"), "{err}");
    assert!(err.contains("`c`"), "{err}");
    assert_eq!(mrb(&["nf", "x + 1/0 * y"]).0, EXIT_PARSE);
    assert_eq!(mrb(&["convert", "--from", "forest", "x(y)"]).0, EXIT_PARSE);
}

#[test]
fn usage_and_config_errors() {
    assert_eq!(mrb(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(mrb(&["nf"]).0, EXIT_USAGE);
    assert_eq!(mrb(&["coproduct", "--carrier", "tree", "x"]).0, EXIT_USAGE);
    assert_eq!(
        mrb(&["--config", "/nonexistent/sig.json", "nf", "x"]).0,
        EXIT_USAGE
    );
    let (code, out, _) = mrb(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Usage"));
}

#[test]
fn config_file_sets_signature() {
    let dir = std::env::temp_dir().join(format!("mrb-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("sig.json");
    std::fs::write(&good, r#"{"letters": ["u"], "operators": [{"name": "P", "weight": "1/2"}, {"name": "Q", "weight": "0"}]}"#).unwrap();
    let good = good.to_str().unwrap();
    assert_eq!(
        mrb(&["--config", good, "nf", "[u]_P [u]_Q"]).1,
        "[[u]_P u]_Q + [u [u]_Q]_P\n"
    );
    assert_eq!(
        mrb(&["--config", good, "nf", "[u]_Q [u]_P"]).1,
        "[u [u]_P]_Q + [[u]_Q u]_P + 1/2 * [u u]_Q\n"
    );
    assert_eq!(mrb(&["--config", good, "nf", "x"]).0, EXIT_PARSE);
    let bad = dir.join("bad.json");
    std::fs::write(
        &bad,
        r#"{"letters": ["u"], "operators": [{"name": "P", "weight": "one"}]}"#,
    )
    .unwrap();
    let (code, _, err) = mrb(&["--config", bad.to_str().unwrap(), "nf", "u"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("`one`"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gsb_check_passes_and_mutation_fails() {
    let (code, out, _) = mrb(&[
        "check",
        "--suite",
        "gsb",
        "--max-degree",
        "1",
        "--context-depth",
        "1",
    ]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.starts_with("PASS [gsb]"), "{out}");
    let (code, out, _) = mrb(&[
        "check",
        "--suite",
        "gsb",
        "--max-degree",
        "1",
        "--context-depth",
        "1",
        "--mutate-relations",
    ]);
    assert_eq!(code, EXIT_PROPERTY);
    assert!(
        out.starts_with("FAIL [gsb]") && out.contains("composition at"),
        "{out}"
    );
}

#[test]
fn gsb_check_at_default_degree() {
    let (code, out, _) = mrb(&["check", "--suite", "gsb", "--max-degree", "2"]);
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn other_suites_pass_at_small_bounds() {
    for suite in ["order", "mrba", "hopf"] {
        let (code, out, _) = mrb(&[
            "check",
            "--suite",
            suite,
            "--max-degree",
            "2",
            "--context-depth",
            "1",
            "--sequential",
        ]);
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.lines().all(|l| l.starts_with("PASS")), "{out}");
    }
}
