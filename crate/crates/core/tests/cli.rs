use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use leafage::cert::Certificate;
use leafage::tree::two_block_spider;
use leafage::Family;

fn leafage(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leafage"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

struct Scratch(tempfile::TempDir);

impl Scratch {
    fn new() -> Self {
        Scratch(tempfile::tempdir().unwrap())
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    fn matrix(&self, family: Family) -> PathBuf {
        let path = self.path(&format!("{family}.txt"));
        fs::write(&path, family.digraph().to_matrix_text()).unwrap();
        path
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_writes_matrix_and_prints_order() {
    let dir = Scratch::new();
    let out = dir.path("d4.txt");
    let run = leafage(&["gen", "Dn", "4", "-o", s(&out)]);
    assert_eq!(code(&run), 0);
    assert_eq!(stdout(&run), "n=4\n");
    assert_eq!(
        fs::read_to_string(&out).unwrap(),
        "0111\n1011\n1101\n1110\n"
    );
}

#[test]
fn gen_block_layout_and_closing_matrix() {
    assert_eq!(
        stdout(&leafage(&["gen", "Mkm", "2", "3"])),
        "100111\n010111\n001111\n000100\n000010\n000001\n"
    );
    assert_eq!(
        stdout(&leafage(&["gen", "Closing5"])),
        "10010\n11001\n01101\n00111\n11111\n"
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&leafage(&["gen", "Nope", "3"])), 2);
    assert_eq!(code(&leafage(&["gen", "Dn"])), 2);
    assert_eq!(code(&leafage(&["frobnicate"])), 2);
    assert_eq!(code(&leafage(&["sweep", "5"])), 2);
    let dir = Scratch::new();
    let bad = dir.path("bad.txt");
    fs::write(&bad, "01\n1\n").unwrap();
    let run = leafage(&["compute", s(&bad)]);
    assert_eq!(code(&run), 2);
    assert!(stdout(&run).is_empty());
}

#[test]
fn compute_reports_the_chain() {
    let dir = Scratch::new();
    let d3 = dir.matrix(Family::Dn(3));
    let run = leafage(&["compute", "--all", s(&d3)]);
    assert_eq!(code(&run), 0);
    assert_eq!(stdout(&run), "f=3 f*=3 l=3 l*=3 w=3 n=3\n");
}

#[test]
fn compute_single_parameters() {
    let dir = Scratch::new();
    let c5 = dir.matrix(Family::Cn(5));
    assert_eq!(stdout(&leafage(&["compute", "--f2", s(&c5)])), "f<=2: no\n");
    let f7 = dir.matrix(Family::Fn(7));
    assert_eq!(stdout(&leafage(&["compute", "--w", s(&f7)])), "w=6\n");
    let m23 = dir.matrix(Family::Mkm(2, 3));
    assert_eq!(
        stdout(&leafage(&["compute", "--f", "--fstar", s(&m23)])),
        "f=2 f*=3\n"
    );
}

#[test]
fn exhausted_budget_exits_three() {
    let dir = Scratch::new();
    let c5 = dir.matrix(Family::Cn(5));
    let run = leafage(&["compute", "--l", "--budget-nodes", "50", s(&c5)]);
    assert_eq!(code(&run), 3);
    assert_eq!(stdout(&run), "l=[3,5]\n");
}

#[test]
fn emitted_certificates_verify() {
    let dir = Scratch::new();
    for family in [
        Family::Dn(3),
        Family::Cn(4),
        Family::Mkm(2, 3),
        Family::Fn(5),
    ] {
        let matrix = dir.matrix(family);
        let certs = dir.path(&format!("{family}-certs"));
        assert_eq!(
            code(&leafage(&["compute", s(&matrix), "--cert-out", s(&certs)])),
            0
        );
        for name in ["f.json", "fstar.json", "l.json", "lstar.json"] {
            let cert = certs.join(name);
            let run = leafage(&["verify", s(&matrix), s(&cert)]);
            assert_eq!(code(&run), 0, "{family} {name}");
            assert_eq!(stdout(&run), "accept\n");
        }
        let report: serde_json::Value =
            serde_json::from_str(&fs::read_to_string(certs.join("report.json")).unwrap()).unwrap();
        assert_eq!(report["l"]["certificate"], "l.json");
    }
}

#[test]
fn verify_accepts_spider_and_rejects_tampering() {
    let dir = Scratch::new();
    let m23 = dir.matrix(Family::Mkm(2, 3));
    let spider = dir.path("spider.json");
    fs::write(
        &spider,
        Certificate::from_representation(&two_block_spider(3)).to_json(),
    )
    .unwrap();
    assert_eq!(code(&leafage(&["verify", s(&m23), s(&spider)])), 0);

    let mut rep = two_block_spider(3);
    rep.sinks.swap(0, 4);
    let tampered = dir.path("tampered.json");
    fs::write(&tampered, Certificate::from_representation(&rep).to_json()).unwrap();
    let run = leafage(&["verify", s(&m23), s(&tampered)]);
    assert_eq!(code(&run), 1);
    assert_eq!(stdout(&run), "reject\n");
    assert!(String::from_utf8_lossy(&run.stderr).contains("pair"));

    let garbage = dir.path("garbage.json");
    fs::write(&garbage, "{\"kind\": \"representation\"}").unwrap();
    assert_eq!(code(&leafage(&["verify", s(&m23), s(&garbage)])), 2);
}

#[test]
fn extract_and_dot() {
    let dir = Scratch::new();
    let m23 = dir.matrix(Family::Mkm(2, 3));
    let spider = dir.path("spider.json");
    fs::write(
        &spider,
        Certificate::from_representation(&two_block_spider(3)).to_json(),
    )
    .unwrap();
    let cover = dir.path("cover.json");
    assert_eq!(
        code(&leafage(&["extract", s(&m23), s(&spider), "-o", s(&cover)])),
        0
    );
    let cert = Certificate::from_json(&fs::read_to_string(&cover).unwrap()).unwrap();
    assert_eq!(cert.kind(), "ferrers-cover");
    assert_eq!(cert.to_cover().unwrap().len(), 3);
    assert_eq!(code(&leafage(&["verify", s(&m23), s(&cover)])), 0);

    let dot = stdout(&leafage(&["dot", s(&spider)]));
    assert!(dot.starts_with("graph host {"));
    assert_eq!(dot.matches(" -- ").count(), 6);
}

#[test]
fn sweeps() {
    let run = leafage(&["sweep", "2"]);
    assert_eq!(code(&run), 0);
    let text = stdout(&run);
    assert_eq!(text.lines().count(), 17);
    assert_eq!(
        text.lines().next().unwrap(),
        "n,f,f_star,l_lo,l_hi,l_exact,lstar_lo,lstar_hi,lstar_exact,w"
    );

    let args = [
        "sweep", "5", "--mode", "random", "--count", "100", "--seed", "7",
    ];
    let a = stdout(&leafage(&args));
    assert_eq!(a.lines().count(), 101);
    assert_eq!(a, stdout(&leafage(&args)));
}
