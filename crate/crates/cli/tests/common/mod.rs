#![allow(dead_code)]

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_iasi"))
}

pub fn test_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn fixture(name: &str) -> String {
    test_dir().join("fixtures").join(name).display().to_string()
}

pub fn run(args: &[String]) -> Output {
    bin().args(args).output().expect("the iasi binary runs")
}

/// A command whose stdout is compared byte for byte with `golden/<name>.out`.
pub struct GoldenCase {
    pub name: &'static str,
    pub args: &'static [&'static str],
    pub exit: i32,
}

impl GoldenCase {
    /// Arguments with `@file` replaced by the fixture path.
    pub fn resolved_args(&self) -> Vec<String> {
        self.args
            .iter()
            .map(|a| match a.strip_prefix('@') {
                Some(name) => fixture(name),
                None => a.to_string(),
            })
            .collect()
    }

    pub fn golden_path(&self) -> PathBuf {
        test_dir().join("golden").join(format!("{}.out", self.name))
    }

    /// `Err` describes the first mismatch.
    pub fn check(&self) -> Result<(), String> {
        let output = run(&self.resolved_args());
        let code = output.status.code();
        if code != Some(self.exit) {
            return Err(format!(
                "{}: exit {code:?}, expected {}; stderr: {}",
                self.name,
                self.exit,
                String::from_utf8_lossy(&output.stderr)
            ));
        }
        let expected = fs::read(self.golden_path())
            .map_err(|e| format!("{}: missing golden file: {e}", self.name))?;
        if output.stdout != expected {
            return Err(format!(
                "{}: stdout differs from golden\n--- expected\n{}--- actual\n{}",
                self.name,
                String::from_utf8_lossy(&expected),
                String::from_utf8_lossy(&output.stdout)
            ));
        }
        Ok(())
    }
}

pub const GOLDEN_CASES: &[GoldenCase] = &[
    GoldenCase {
        name: "verify_c4_expect_weakly_2",
        args: &[
            "verify",
            "-g",
            "@c4.edges",
            "-l",
            "@c4_weakly2.labels",
            "--expect-weakly",
            "2",
        ],
        exit: 0,
    },
    GoldenCase {
        name: "verify_c4_expect_uniform_3",
        args: &[
            "verify",
            "-g",
            "@c4.edges",
            "-l",
            "@c4_weakly2.labels",
            "--expect-uniform",
            "3",
        ],
        exit: 1,
    },
    GoldenCase {
        name: "verify_malformed",
        args: &["verify", "-g", "@c4.edges", "-l", "@malformed.labels"],
        exit: 2,
    },
    GoldenCase {
        name: "verify_collision",
        args: &["verify", "-g", "@c4.edges", "-l", "@c4_collision.labels"],
        exit: 1,
    },
    GoldenCase {
        name: "verify_c4_json",
        args: &[
            "--format",
            "json-lines",
            "verify",
            "-g",
            "@c4.edges",
            "-l",
            "@c4_weakly2.labels",
            "--expect-weakly",
            "2",
        ],
        exit: 0,
    },
    GoldenCase {
        name: "verify_self_loop",
        args: &[
            "verify",
            "-g",
            "@self_loop.edges",
            "-l",
            "@c4_weakly2.labels",
        ],
        exit: 2,
    },
    GoldenCase {
        name: "construct_odd_k5_k4",
        args: &["construct", "odd", "--k", "5", "--family", "complete:4"],
        exit: 0,
    },
    GoldenCase {
        name: "construct_weakly_k2_c5",
        args: &["construct", "weakly", "--k", "2", "--family", "cycle:5"],
        exit: 1,
    },
    GoldenCase {
        name: "construct_odd_k4",
        args: &["construct", "odd", "--k", "4", "--family", "complete:4"],
        exit: 2,
    },
    GoldenCase {
        name: "construct_weakly_k3_paw",
        args: &[
            "construct",
            "weakly",
            "--k",
            "3",
            "-g",
            "@paw_isolated.edges",
        ],
        exit: 1,
    },
    GoldenCase {
        name: "construct_bipartite_k4_c4",
        args: &["construct", "bipartite", "--k", "4", "-g", "@c4.edges"],
        exit: 0,
    },
    GoldenCase {
        name: "construct_bipartite_m2_n3_d2",
        args: &[
            "construct",
            "bipartite",
            "--m",
            "2",
            "--n",
            "3",
            "--d",
            "2",
            "--family",
            "complete-bipartite:2,3",
        ],
        exit: 0,
    },
    GoldenCase {
        name: "construct_weakly_k3_tree_json",
        args: &[
            "--format",
            "json-lines",
            "construct",
            "weakly",
            "--k",
            "3",
            "--family",
            "tree:-,0,0,1,1",
        ],
        exit: 0,
    },
    GoldenCase {
        name: "decide_c7_k2",
        args: &["decide", "--family", "cycle:7", "--k", "2"],
        exit: 1,
    },
    GoldenCase {
        name: "decide_c7_k7",
        args: &["decide", "--family", "cycle:7", "--k", "7"],
        exit: 0,
    },
    GoldenCase {
        name: "decide_c8_k2",
        args: &["decide", "--family", "cycle:8", "--k", "2"],
        exit: 0,
    },
    GoldenCase {
        name: "decide_c5_weakly_k1",
        args: &["decide", "--family", "cycle:5", "--k", "1", "--weakly"],
        exit: 0,
    },
    GoldenCase {
        name: "decide_c7_k2_json",
        args: &[
            "--format",
            "json-lines",
            "decide",
            "--family",
            "cycle:7",
            "--k",
            "2",
        ],
        exit: 1,
    },
    GoldenCase {
        name: "search_c3_weakly_k2",
        args: &[
            "search",
            "weakly",
            "--family",
            "cycle:3",
            "--k",
            "2",
            "--universe",
            "9",
        ],
        exit: 1,
    },
    GoldenCase {
        name: "search_k2_uniform_k1",
        args: &[
            "search",
            "uniform",
            "--family",
            "path:2",
            "--k",
            "1",
            "--universe",
            "2",
        ],
        exit: 0,
    },
    GoldenCase {
        name: "search_k4_uniform_k3_u2",
        args: &[
            "search",
            "uniform",
            "--family",
            "complete:4",
            "--k",
            "3",
            "--universe",
            "2",
        ],
        exit: 1,
    },
    GoldenCase {
        name: "search_budget",
        args: &[
            "search",
            "uniform",
            "--family",
            "complete:4",
            "--k",
            "3",
            "--universe",
            "31",
            "--budget",
            "10",
        ],
        exit: 3,
    },
    GoldenCase {
        name: "search_p3_all",
        args: &[
            "search",
            "uniform",
            "--family",
            "path:3",
            "--k",
            "2",
            "--universe",
            "3",
            "--max-size",
            "2",
            "--all",
            "3",
        ],
        exit: 0,
    },
    GoldenCase {
        name: "search_k2_json",
        args: &[
            "--format",
            "json-lines",
            "search",
            "uniform",
            "--family",
            "path:2",
            "--k",
            "1",
            "--universe",
            "2",
        ],
        exit: 0,
    },
];

/// Construct then verify with the matching expectation.
pub struct RoundTrip {
    pub mode: &'static str,
    pub graph: &'static str,
    pub params: &'static [&'static str],
    pub expect: (&'static str, &'static str),
}

pub const ROUND_TRIPS: &[RoundTrip] = &[
    RoundTrip {
        mode: "weakly",
        graph: "path:1",
        params: &["--k", "2"],
        expect: ("--expect-weakly", "2"),
    },
    RoundTrip {
        mode: "weakly",
        graph: "path:6",
        params: &["--k", "1"],
        expect: ("--expect-weakly", "1"),
    },
    RoundTrip {
        mode: "weakly",
        graph: "cycle:5",
        params: &["--k", "1"],
        expect: ("--expect-weakly", "1"),
    },
    RoundTrip {
        mode: "weakly",
        graph: "complete:5",
        params: &["--k", "1"],
        expect: ("--expect-weakly", "1"),
    },
    RoundTrip {
        mode: "weakly",
        graph: "cycle:6",
        params: &["--k", "2"],
        expect: ("--expect-weakly", "2"),
    },
    RoundTrip {
        mode: "weakly",
        graph: "complete-bipartite:3,4",
        params: &["--k", "5"],
        expect: ("--expect-weakly", "5"),
    },
    RoundTrip {
        mode: "weakly",
        graph: "tree:-,0,0,1,1,2,2",
        params: &["--k", "3"],
        expect: ("--expect-weakly", "3"),
    },
    RoundTrip {
        mode: "weakly",
        graph: "@c4.edges",
        params: &["--k", "4"],
        expect: ("--expect-weakly", "4"),
    },
    RoundTrip {
        mode: "weakly",
        graph: "empty:3",
        params: &["--k", "2"],
        expect: ("--expect-weakly", "2"),
    },
    RoundTrip {
        mode: "bipartite",
        graph: "path:5",
        params: &["--k", "2"],
        expect: ("--expect-uniform", "2"),
    },
    RoundTrip {
        mode: "bipartite",
        graph: "cycle:8",
        params: &["--k", "6"],
        expect: ("--expect-uniform", "6"),
    },
    RoundTrip {
        mode: "bipartite",
        graph: "complete-bipartite:2,5",
        params: &["--m", "2", "--n", "3"],
        expect: ("--expect-uniform", "4"),
    },
    RoundTrip {
        mode: "bipartite",
        graph: "complete-bipartite:3,3",
        params: &["--m", "3", "--n", "3", "--d", "3"],
        expect: ("--expect-uniform", "5"),
    },
    RoundTrip {
        mode: "bipartite",
        graph: "@c4.edges",
        params: &["--k", "3", "--m", "2"],
        expect: ("--expect-uniform", "3"),
    },
    RoundTrip {
        mode: "odd",
        graph: "complete:4",
        params: &["--k", "5"],
        expect: ("--expect-uniform", "5"),
    },
    RoundTrip {
        mode: "odd",
        graph: "complete:6",
        params: &["--k", "3"],
        expect: ("--expect-uniform", "3"),
    },
    RoundTrip {
        mode: "odd",
        graph: "cycle:7",
        params: &["--k", "7"],
        expect: ("--expect-uniform", "7"),
    },
    RoundTrip {
        mode: "odd",
        graph: "cycle:3",
        params: &["--m", "1"],
        expect: ("--expect-uniform", "1"),
    },
    RoundTrip {
        mode: "odd",
        graph: "@paw_isolated.edges",
        params: &["--k", "3", "--d", "2"],
        expect: ("--expect-uniform", "3"),
    },
    RoundTrip {
        mode: "odd",
        graph: "tree:-,0,1,2,3",
        params: &["--m", "4", "--d", "5"],
        expect: ("--expect-uniform", "7"),
    },
];

fn graph_args(graph: &str) -> Vec<String> {
    match graph.strip_prefix('@') {
        Some(name) => vec!["-g".into(), fixture(name)],
        None => vec!["--family".into(), graph.into()],
    }
}

impl RoundTrip {
    pub fn check(&self) -> Result<(), String> {
        let label = format!("{} {} {:?}", self.mode, self.graph, self.params);
        let mut args = vec!["construct".to_string(), self.mode.to_string()];
        args.extend(graph_args(self.graph));
        args.extend(self.params.iter().map(|s| s.to_string()));
        let built = run(&args);
        if built.status.code() != Some(0) {
            return Err(format!(
                "{label}: construct exited {:?}: {}",
                built.status.code(),
                String::from_utf8_lossy(&built.stderr)
            ));
        }
        let file = tempfile::NamedTempFile::new().map_err(|e| e.to_string())?;
        fs::write(file.path(), &built.stdout).map_err(|e| e.to_string())?;

        let mut args = vec!["verify".to_string()];
        args.extend(graph_args(self.graph));
        args.extend(["-l".into(), file.path().display().to_string()]);
        args.extend([self.expect.0.to_string(), self.expect.1.to_string()]);
        let checked = run(&args);
        match checked.status.code() {
            Some(0) => Ok(()),
            code => Err(format!(
                "{label}: verify exited {code:?}\n{}",
                String::from_utf8_lossy(&checked.stdout)
            )),
        }
    }
}
