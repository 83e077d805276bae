use std::process::{Command, Output};

fn catalog(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_catalog")).args(args).output().expect("run catalog")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn format_hello_world() {
    let out = catalog(&["format", "--template", "Hello {}", "--args", "World"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "Hello World\n");
}

#[test]
fn format_arity_errors() {
    let out = catalog(&["format", "--template", "Hello {}", "--args", ""]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr(&out), "arity error: expected 1, got 0\n");

    let out = catalog(&["format", "--template", "Hello {}", "--args", "World,Again"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stderr(&out), "arity error: expected 1, got 2\n");
}

#[test]
fn format_escapes() {
    let out = catalog(&["format", "--template", "{{}}"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "{}\n");
}

#[test]
fn file_ten_bytes() {
    let out = catalog(&["file", "--path", "f.txt", "--content", "0123456789", "--chunk-size", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let (chunks, trace): (Vec<&str>, Vec<&str>) = text.lines().partition(|l| l.starts_with("chunk "));
    assert_eq!(chunks, ["chunk 0: 0123", "chunk 1: 4567", "chunk 2: 89"]);
    // open, (eof, read) x3, eof, close
    assert_eq!(trace.len(), 1 + 2 * 3 + 2);
    assert_eq!(trace.first(), Some(&"open(f.txt) -> 1"));
    assert_eq!(trace.last(), Some(&"close(1)"));
}

#[test]
fn file_empty_and_bad_chunk() {
    let out = catalog(&["file", "--path", "e.txt", "--content", "", "--chunk-size", "4"]);
    assert_eq!(stdout(&out), "open(e.txt) -> 1\neof(1) -> true\nclose(1)\n");

    let out = catalog(&["file", "--path", "e.txt", "--content", "x", "--chunk-size", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());
}

#[test]
fn events_scenario() {
    let out = catalog(&["events"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l == "OnClick#0 mouse_x=1 mouse_y=3"));
    let key_lines: Vec<&str> = text.lines().skip_while(|l| !l.starts_with("OnKeyPress")).collect();
    assert!(!key_lines.is_empty());
    assert!(key_lines.iter().all(|l| l.starts_with("OnKeyPress#")));

    let out = catalog(&["events", "--empty"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).is_empty());
}

#[test]
fn admin_routes() {
    let out = catalog(&["admin", "--user", "alice"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("ADMIN PANEL"));

    let out = catalog(&["admin", "--user", "bob"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("404"));
    assert!(!stdout(&out).contains("ADMIN PANEL"));

    assert_eq!(catalog(&["admin", "--user", "nobody"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(catalog(&["format"]).status.code(), Some(2));
    assert_eq!(catalog(&["file", "--path", "p", "--content", "c", "--chunk-size", "-1"]).status.code(), Some(2));
    assert_eq!(catalog(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [&["events"][..], &["file", "--path", "a", "--content", "hello world", "--chunk-size", "3"]] {
        let a = catalog(args);
        let b = catalog(args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.stderr, b.stderr);
    }
}
