use std::process::{Command, Output};

fn circword(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_circword"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn count() {
    let out = circword(&["count", "00101", "010"]);
    assert_eq!((code(&out), stdout(&out).as_str()), (0, "2\n"));
    let out = circword(&["count", "0001", "010"]);
    assert_eq!(stdout(&out), "1\n");
    assert_eq!(code(&circword(&["count", "", "010"])), 2);
    assert_eq!(code(&circword(&["count", "0a1", "010"])), 2);
    assert_eq!(code(&circword(&["count", "0101", ""])), 2);
    assert_eq!(code(&circword(&["count", "0101", "01", "--frobnicate"])), 2);
}

#[test]
fn report_formats() {
    let out = circword(&["report", "010011", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(
        v,
        serde_json::json!({"word": "010011", "d1": 1, "d2": 1, "d3": 1, "d4": 1,
                           "k_graph": 1, "k_decomp": 1, "consistent": true})
    );

    let out = circword(&["report", "101100", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "word,d1,d2,d3,d4,k_graph,k_decomp,consistent\n101100,-1,-1,-1,-1,-1,-1,true\n"
    );

    let out = circword(&["report", "0000"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("k (square winding) = 0"));

    assert_eq!(code(&circword(&["report", "0120"])), 2);
    assert_eq!(code(&circword(&["report", "01", "--format", "xml"])), 2);
}

#[test]
fn verify() {
    let out = circword(&["verify", "--max-len", "12"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "8190 words checked, 0 violations\n");

    let out = circword(&["verify", "--max-len", "16"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "131070 words checked, 0 violations\n");

    assert_eq!(code(&circword(&["verify", "--max-len", "0"])), 2);
    assert_eq!(code(&circword(&["verify"])), 2);

    let args = ["verify", "--max-len", "4", "--random", "20", "--seed", "9", "--rand-len", "40", "--format", "json"];
    let a = circword(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, circword(&args).stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["words_checked"], 30 + 20);
}

#[test]
fn rank() {
    let out = circword(&["rank", "--d", "2", "--l", "4", "--max-len", "10"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("rank = 9\n"));
    assert!(text.contains("predicted = 9\n"));
    assert!(text.contains("relations = 7\n"));

    let out = circword(&["rank", "--d", "3", "--l", "2", "--max-len", "6", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["span"]["rank"], 7);
    assert_eq!(v["passed"], true);

    let out = circword(&["rank", "--d", "2", "--l", "4", "--max-len", "10", "--spanning-set", "--cks"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    assert_eq!(code(&circword(&["rank", "--d", "2", "--l", "4", "--max-len", "30"])), 2);
    assert_eq!(code(&circword(&["rank", "--d", "3", "--l", "2", "--spanning-set"])), 2);
}

#[test]
fn express() {
    let out = circword(&["express", "0001"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("1000\t1/1\n"));
    assert!(text.ends_with("= 1000\n"));

    let out = circword(&["express", "0101"]);
    assert!(stdout(&out).ends_with("= 1010 + 1011 - 1101\n"));

    let out = circword(&["express", "0110", "--basis", "0110"]);
    assert_eq!(stdout(&out), "0110\t1/1\n= 0110\n");
    assert_eq!(code(&circword(&["express", "1010", "--basis", "0110"])), 2);
}

#[test]
fn matrix_csv() {
    let out = circword(&["matrix", "--l", "1", "--max-len", "1"]);
    assert_eq!(stdout(&out), "word,0,1\n0,1,0\n1,0,1\n");
}

#[test]
fn dot() {
    let out = circword(&["dot", "--d", "2", "--n", "3"]);
    let text = stdout(&out);
    assert_eq!(code(&out), 0);
    assert_eq!(text.matches(" -> ").count(), 16);
    assert_eq!(text.lines().filter(|l| l.starts_with("  \"") && !l.contains("->")).count(), 8);
    assert_eq!(text, stdout(&circword(&["dot", "--d", "2", "--n", "3"])));

    let out = circword(&["dot", "--square"]);
    let text = stdout(&out);
    assert_eq!(text.matches(" -> ").count(), 8);
    for v in ["110", "001", "101", "010"] {
        assert!(text.contains(&format!("  \"{v}\";\n")));
    }

    let out = circword(&["dot", "--d", "2", "--n", "3", "--word", "010011"]);
    assert_eq!(stdout(&out).matches("color=\"red\"").count(), 6);

    let out = circword(&["dot", "--circle", "110,101,010,001", "--highlight", "0011,1100"]);
    let text = stdout(&out);
    assert_eq!(text.matches("doublecircle").count(), 4);
    assert_eq!(text.matches("color=\"red\"").count(), 2);

    assert_eq!(code(&circword(&["dot", "--d", "2", "--n", "25"])), 2);
    assert_eq!(code(&circword(&["dot", "--highlight", "00111"])), 2);
    assert_eq!(code(&circword(&["dot", "--word", "0120"])), 2);
}
