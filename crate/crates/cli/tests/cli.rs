use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crystals")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(o)).unwrap()
}

#[test]
fn degree_zero_ball_is_one_vertex() {
    let o = run(&["graph", "--n", "3", "--l", "2", "--lambda", "1,1,0", "--deg", "0", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 1);
    assert!(v["edges"].as_array().unwrap().is_empty());
}

#[test]
fn level_one_ball_through_degree_three() {
    let o = run(&["graph", "--n", "3", "--l", "1", "--lambda", "1,0,0", "--deg", "3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    // partitions of size ≤ 3 that are 3-regular: 1 + 1 + 2 + 2
    assert_eq!(json(&o)["vertices"].as_array().unwrap().len(), 6);
}

#[test]
fn every_model_gives_the_same_ball() {
    let mut sizes = Vec::new();
    for model in ["abacus", "partition", "cpp", "kyoto"] {
        let o = run(&["graph", "--model", model, "--n", "3", "--l", "2", "--lambda", "1,1,0", "--deg", "5", "--format", "json"]);
        assert_eq!(o.status.code(), Some(0), "{model}");
        let v = json(&o);
        sizes.push((v["vertices"].as_array().unwrap().len(), v["edges"].as_array().unwrap().len()));
    }
    assert!(sizes.windows(2).all(|w| w[0] == w[1]), "{sizes:?}");
}

#[test]
fn corrupted_graph_fails() {
    let o = run(&["graph", "--n", "3", "--l", "1", "--lambda", "1,0,0", "--deg", "3", "--corrupt"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("violation"));
}

#[test]
fn bad_input_is_a_usage_error() {
    assert_eq!(run(&["graph", "--n", "3"]).status.code(), Some(2));
    assert_eq!(run(&["graph", "--n", "3", "--l", "2", "--lambda", "1,0,0"]).status.code(), Some(2));
    assert_eq!(run(&["graph", "--n", "2", "--l", "2", "--lambda", "1,1,0"]).status.code(), Some(2));
    assert_eq!(run(&["genfunc", "--n", "3", "--l", "1", "--lambda", "x,0,1"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&["graph", "--model", "partition", "--n", "2", "--l", "2", "--lambda", "1,1"]).status.code(),
        Some(2)
    );
}

#[test]
fn genfunc_three_way_equal() {
    let o = run(&["genfunc", "--n", "3", "--l", "2", "--lambda", "1,1,0", "--deg", "15"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("three-way-equal: true"));
}

#[test]
fn genfunc_rank_level_duality() {
    let o = run(&["genfunc", "compare", "--n", "3", "--l", "6", "--lambda", "2,3,1", "--deg", "15", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["three_way_equal"], true);
    assert_eq!(v["rank_level_equal"], true);
    assert_eq!(v["dual_lambda"], serde_json::json!([1, 1, 0, 0, 1, 0]));
}

#[test]
fn genfunc_csv_columns_agree() {
    let o = run(&["genfunc", "--n", "2", "--l", "3", "--lambda", "2,1", "--deg", "6", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("degree,weyl,borodin,enumerated"));
    let rows: Vec<_> = lines.collect();
    assert_eq!(rows.len(), 7);
    for row in rows {
        let cells: Vec<&str> = row.split(',').collect();
        assert!(cells[1] == cells[2] && cells[2] == cells[3], "{row}");
    }
}

#[test]
fn bijection_weight_zero() {
    let o = run(&["bijection", "--n", "3", "--l", "2", "--lambda", "1,1,0", "--weight", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["abacus_objects"], 1);
    assert_eq!(v["cpp_objects"], 1);
}

#[test]
fn bijection_counts_by_weight() {
    let o = run(&["bijection", "--n", "2", "--l", "2", "--lambda", "1,1", "--max-weight", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["mismatches"], 0);
    for pair in v["by_weight"].as_array().unwrap() {
        assert_eq!(pair[0], pair[1]);
    }
}

#[test]
fn kyoto_isomorphism() {
    let o = run(&["kyoto", "--n", "3", "--l", "4", "--lambda", "1,2,1", "--deg", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["pass"], true);
    assert_eq!(v["abacus_vertices"], v["path_vertices"]);
}

#[test]
fn commutor_small() {
    let o = run(&["commutor", "--m", "2", "--max-size", "3", "--leaf-size", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["pass"], true);
    assert_eq!(run(&["commutor", "--m", "1"]).status.code(), Some(2));
}

#[test]
fn json_output_is_byte_stable() {
    let args = ["graph", "--model", "cpp", "--n", "2", "--l", "2", "--lambda", "1,1", "--deg", "4", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let args = ["genfunc", "--n", "4", "--l", "2", "--lambda", "0,1,0,1", "--deg", "8", "--format", "json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn output_file_receives_the_graph() {
    let dir = std::env::temp_dir().join(format!("crystals-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ball.dot");
    let o = run(&["graph", "--model", "kyoto", "--n", "2", "--l", "1", "--lambda", "1,0", "--deg", "2", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("digraph crystal {"));
    std::fs::remove_dir_all(&dir).unwrap();
}
