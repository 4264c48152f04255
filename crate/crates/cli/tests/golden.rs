//! Fixed commands against checked-in outputs. Set `FINSYM_BLESS=1` to rewrite them.

use std::fs;
use std::path::{Path, PathBuf};

use finsym_cli::run;

const CASES: &[(&str, &str, i32)] = &[
    ("char", "char --rho [2,1] --nu [3]", 0),
    ("char-oracle", "char --rho [3,2,1] --nu [2,2,1,1] --oracle", 0),
    ("unipotent-gl-sp-4", "unipotent-table --case gl-sp --n 4", 0),
    ("unipotent-gl-o-eps-4-csv", "unipotent-table --case gl-o-eps --n 4 --format csv", 0),
    ("unipotent-u-uxu-3-csv", "unipotent-table --case u-uxu --n 3 --format csv", 0),
    ("involutions-plain", "involutions --nu [2,2,1] --filter l1_1=0 --weight (-2)^l1", 0),
    ("involutions-plus", "involutions --nu [2,1,1] --family plus --signature 2", 0),
    ("involutions-star", "involutions --nu [2,2] --family star --weight (-1)^l2", 0),
    ("tableaux", "tableaux --mu [3,1,1] --signature 1 --fixed-by psi", 0),
    ("orbits-q3", "orbits --q 3 --twist nonsplit --max-level 2", 0),
    ("mult-abstract", "mult --case gl-o-eps --input {data}/gl-o-eps-abstract.json", 0),
    ("mult-concrete", "mult --input {data}/u-uxu-concrete.json", 0),
    ("mult-so", "mult --case gl-o --input {data}/gl-o-concrete.json --so-zeta 1", 0),
    ("crosscheck-input", "crosscheck --input {data}/gl-glxgl-pair.json", 0),
    ("crosscheck-sweep", "crosscheck --case u-o-eps --max-size 4", 0),
    ("verify-text", "verify --identity all --max-size 5", 0),
    ("verify-json", "verify --identity gln-on --max-size 4 --json", 0),
];

fn dir(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join(name)
}

fn invoke(line: &str) -> (i32, String, String) {
    let data = dir("data");
    let line = line.replace("{data}", data.to_str().unwrap());
    let args = std::iter::once("finsym".to_string()).chain(line.split_whitespace().map(String::from));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(args, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn outputs_match_golden_files() {
    let bless = std::env::var_os("FINSYM_BLESS").is_some();
    let mut stale = Vec::new();
    for &(name, line, want_code) in CASES {
        let (code, out, err) = invoke(line);
        assert_eq!(code, want_code, "`{line}` exited {code}: {err}");
        let path = dir("golden").join(format!("{name}.out"));
        // the report echoes its arguments, which include the local data path
        let out = out.replace(dir("data").to_str().unwrap(), "{data}");
        if bless {
            fs::write(&path, &out).unwrap();
        } else if fs::read_to_string(&path).map_or(true, |g| g != out) {
            stale.push(format!("{name}:\n{out}"));
        }
    }
    assert!(stale.is_empty(), "outputs differ from golden files:\n{}", stale.join("\n"));
}

#[test]
fn output_carries_no_timing_unless_asked() {
    let (_, plain, err) = invoke("crosscheck --case gl-sp --max-size 2");
    assert!(!plain.contains("wall_time") && !err.contains("wall time"));
    let (_, timed, err) = invoke("crosscheck --case gl-sp --max-size 2 --timing");
    assert!(timed.contains("wall_time_ms") && err.contains("wall time"));
}

#[test]
fn exit_codes() {
    assert_eq!(invoke("verify --identity ff-inv --max-size 4").0, 0);
    assert_eq!(invoke("nonsense").0, 2);
    assert_eq!(invoke("char --rho [1,2] --nu [3]").0, 2);
    assert_eq!(invoke("char --rho [2] --nu [3]").0, 2);
    assert_eq!(invoke("verify --identity no-such-identity").0, 2);
    assert_eq!(invoke("unipotent-table --case gl-o --n 2").0, 2);
    assert_eq!(invoke("crosscheck --max-size 9").0, 2);
    assert_eq!(invoke("mult --case gl-sp --input {data}/u-uxu-concrete.json").0, 2);
    assert_eq!(invoke("--help").0, 0);
}

#[test]
fn progress_goes_to_the_error_stream() {
    let (_, out, err) = invoke("verify --identity all --max-size 3 --json");
    let v: serde_json::Value = serde_json::from_str(&out).expect("stdout is pure JSON");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert!(err.contains("checking ff-inv"));
}

#[test]
fn cli_examples() {
    assert_eq!(invoke("char --rho [2,1] --nu [3]").1.trim(), "-1");
    let (_, out, _) = invoke("unipotent-table --case gl-sp --n 4");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let values: Vec<i64> = v["rows"].as_array().unwrap().iter().map(|r| r["multiplicity"].as_i64().unwrap()).collect();
    assert_eq!(values, [1, 0, 1, 0, 0]);
    assert_eq!(invoke("verify --identity all --max-size 6").0, 0);
}
