use serde_json::Value;
use spreadlab_cli::session::Session;
use std::io::Write;
use std::process::Command;

const CURVE: &str = "\
# monomial curve
ring p=32003 vars=x,y,z order=grevlex weights=3,4,5
ideal p = y^2 - x*z,  x^3 - y*z, x^2*y - z^2   # prime
ideal m = x, y, z
ideal zero = 0
filtration S = symbolic:p
filtration T = trivial-m
";

const PLANE: &str = "ring p=32003 vars=x,y,z order=grevlex\nideal p = x, y\nideal q = x^2, x*y\n";

fn session_file(src: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(src.as_bytes()).unwrap();
    f
}

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_spreadlab")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(s: &str) -> Value {
    serde_json::from_str(s.trim()).unwrap()
}

#[test]
fn session_round_trip() {
    let s = Session::parse(CURVE).unwrap();
    let canon = s.to_string();
    let again = Session::parse(&canon).unwrap();
    assert_eq!(again.to_string(), canon);
    assert!(canon.starts_with("ring p=32003 vars=x,y,z order=grevlex weights=3,4,5\n"));
    assert!(canon.contains("filtration S = symbolic:p\n"));
    assert!(!canon.contains('#'));
    let plane = Session::parse(PLANE).unwrap();
    assert!(plane.to_string().starts_with("ring p=32003 vars=x,y,z order=grevlex weights=1,1,1\n"));
}

#[test]
fn session_errors() {
    let bad = [
        "ideal p = x",
        "ring p=32003 vars=x,y order=grevlex\nideal p = w",
        "ring p=32003 vars=x,y order=foo",
        "ring p=32003 vars=x,y\nideal p = x\nideal p = y",
        "ring p=32003 vars=x,y\nfiltration F = symbolic:q",
        "ring p=32003 vars=x,y\nfiltration F = weird:x",
        "ring p=32003 vars=x,y\nmatrix M = 1",
        "ring p=32004 vars=x,y",
    ];
    for src in bad {
        assert!(Session::parse(src).is_err(), "{src}");
    }
}

#[test]
fn spec_examples() {
    let plane = session_file(PLANE);
    let (code, out, _) = bin(&["ell", "-f", plane.path().to_str().unwrap(), "-i", "p"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!((v["ell"].as_i64(), v["ht"].as_i64(), v["equimultiple"].as_bool()), (Some(2), Some(2), Some(true)));
    assert_eq!(v["schema"], "1");
    assert_eq!(v["op"], "ell");
    assert_eq!(v["bounds"]["ht_le_ell"], true);

    let (code, out, _) = bin(&["fatpoints", "h0", "--r", "16", "--m", "1", "--d", "4", "--seed", "42"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!((v["h0"].as_u64(), v["seed"].as_u64()), (Some(0), Some(42)));

    let curve = session_file(CURVE);
    let (code, out, _) = bin(&["dim", "-f", curve.path().to_str().unwrap(), "-i", "zero"]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["dim"], 3);
}

#[test]
fn envelope_order_and_digest() {
    let plane = session_file(PLANE);
    let path = plane.path().to_str().unwrap();
    let (_, out, _) = spreadlab_cli::run(["spreadlab", "ht", "-f", path, "-i", "q"]);
    let keys: Vec<String> = json(&out).as_object().unwrap().keys().cloned().collect();
    assert_eq!(&keys[..3], ["schema", "op", "input_digest"]);
    let digest = json(&out)["input_digest"].as_str().unwrap().to_string();
    assert_eq!(digest.len(), 64);
    // comments and spacing do not change the digest
    let noisy = session_file(&format!("# header\n{}\n\n", PLANE.replace("x, y", "x ,  y")));
    let (_, out2, _) = spreadlab_cli::run(["spreadlab", "ht", "-f", noisy.path().to_str().unwrap(), "-i", "q"]);
    assert_eq!(json(&out2)["input_digest"], digest.as_str());
    let (_, out3, _) = spreadlab_cli::run(["spreadlab", "ht", "-f", path, "-i", "p"]);
    assert_ne!(json(&out3)["input_digest"], digest.as_str());
}

#[test]
fn outputs_are_byte_identical() {
    let curve = session_file(CURVE);
    let path = curve.path().to_str().unwrap();
    let runs: Vec<Vec<&str>> = vec![
        vec!["gb", "-f", path, "-i", "p"],
        vec!["symbolic", "-f", path, "-i", "p", "-n", "2"],
        vec!["ell-trunc", "-f", path, "--filtration", "S", "-a", "2"],
        vec!["fatpoints", "contain", "--r", "12", "--elliptic", "--seed", "5", "-n", "1", "--s-power", "2", "--d-max", "10"],
    ];
    for args in runs {
        let a = bin(&args);
        let b = bin(&args);
        assert_eq!(a.0, 0, "{args:?}: {}", a.2);
        assert_eq!(a, b);
    }
}

#[test]
fn exit_codes() {
    let curve = session_file(CURVE);
    let path = curve.path().to_str().unwrap();
    // usage errors
    assert_eq!(bin(&["frobnicate"]).0, 2);
    assert_eq!(bin(&["fatpoints", "h0", "--r", "16", "--m", "1", "--d", "4"]).0, 2);
    assert_eq!(bin(&["gb", "-f", path]).0, 2);
    // validation errors
    assert_eq!(bin(&["gb", "-f", "/nonexistent/session", "-i", "p"]).0, 2);
    assert_eq!(bin(&["gb", "-f", path, "-i", "nope"]).0, 2);
    assert_eq!(bin(&["closure-monomial", "-f", path, "-i", "p"]).0, 2);
    assert_eq!(bin(&["symbolic", "-f", path, "-i", "m", "-n", "0"]).0, 2);
    let inhom = session_file("ring p=32003 vars=x,y\nideal i = x + y^2\n");
    let (code, out, err) = bin(&["ell", "-f", inhom.path().to_str().unwrap(), "-i", "i"]);
    assert_eq!(code, 2);
    assert!(out.is_empty() && err.starts_with("error:"));
    // help is not an error
    assert_eq!(bin(&["--help"]).0, 0);
}

#[test]
fn ideal_commands() {
    let src = "ring p=32003 vars=x,y,z\nideal a = x*y, x*z\nideal b = x\nideal c = y, z\nideal mono = x^2, y^2\n";
    let f = session_file(src);
    let path = f.path().to_str().unwrap();
    let run = |args: &[&str]| {
        let mut v = vec!["spreadlab"];
        v.extend_from_slice(args);
        let (code, out, err) = spreadlab_cli::run(v);
        assert_eq!(code, 0, "{args:?}: {err}");
        json(&out)
    };
    assert_eq!(run(&["quotient", "-f", path, "-i", "a", "-j", "b"])["ideal"], serde_json::json!(["z", "y"]));
    assert_eq!(run(&["intersect", "-f", path, "-i", "b", "-j", "c"])["ideal"], serde_json::json!(["x*z", "x*y"]));
    assert_eq!(run(&["saturate", "-f", path, "-i", "a", "-j", "c"])["ideal"], serde_json::json!(["x"]));
    assert_eq!(run(&["closure-monomial", "-f", path, "-i", "mono"])["ideal"].as_array().unwrap().len(), 3);
    assert_eq!(run(&["nf", "-f", path, "-i", "b", "--poly", "x*y + z"])["nf"], "z");
    assert_eq!(run(&["ht", "-f", path, "-i", "c"])["ht"], 2);
    let e = run(&["equimult", "-f", path, "-i", "a"]);
    assert_eq!((e["ht"].as_i64(), e["ell"].as_i64(), e["equimultiple"].as_bool()), (Some(1), Some(2), Some(false)));
}

#[test]
fn filtration_commands() {
    let curve = session_file(CURVE);
    let path = curve.path().to_str().unwrap();
    let (code, out, err) = spreadlab_cli::run(["spreadlab", "sp0", "-f", path, "--filtration", "T", "-n", "2", "--poly", "x"]);
    assert_eq!(code, 0, "{err}");
    assert!(json(&out)["witness"].is_u64());
    let (code, out, _) =
        spreadlab_cli::run(["spreadlab", "fingen-probe", "-f", path, "-i", "p", "--max-a", "2", "--max-n", "3"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["stabilization"], 2);
    assert!(v["label"].as_str().unwrap().contains("a = 2"));
    let (code, out, _) = spreadlab_cli::run(["spreadlab", "--format", "text", "dim", "-f", path, "-i", "p"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("schema: 1\nop: dim\n"));
    assert!(out.ends_with("dim: 1\n"));
}

#[test]
fn fatpoint_commands() {
    let run = |args: &[&str]| {
        let mut v = vec!["spreadlab", "fatpoints"];
        v.extend_from_slice(args);
        let (code, out, err) = spreadlab_cli::run(v);
        assert_eq!(code, 0, "{args:?}: {err}");
        json(&out)
    };
    let v = run(&["multmap", "--r", "16", "--m", "1", "--d", "8", "--seed", "3"]);
    assert_eq!((v["surjective"].as_bool(), v["seed"].as_u64()), (Some(true), Some(3)));
    let v = run(&["h0", "--r", "12", "--elliptic", "--m", "1", "--d", "3", "--seed", "7"]);
    assert_eq!(v["h0"], 1);
    let v = run(&["census", "--r", "12", "--elliptic", "--n-max", "1", "--d-max", "6", "--s-power", "4", "--seed", "7"]);
    assert_eq!(v["levels"][0]["survivors"], serde_json::json!([[3, 1]]));
    let (code, _, _) = spreadlab_cli::run(["spreadlab", "fatpoints", "h0", "--r", "40", "--p", "5", "--m", "1", "--d", "2", "--seed", "1"]);
    assert_eq!(code, 2);
}
