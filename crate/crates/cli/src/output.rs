//! Output records for subcommands and their plain-text renderings.

use std::fmt::Write as _;

use serde::Serialize;

use mockinj::sl2::{RemarkSweep, SimpleDecomposition, SocleCertificate};
use mockinj::{Character, Classification, FiberReport, ReproductionReport, RootSystem, Weight};

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &mut dyn Iterator<Item = &str>| {
        let mut s = String::new();
        for (i, cell) in cells.enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            let _ = write!(s, "{:<width$}", cell, width = widths[i]);
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&mut header.iter().copied());
    for row in rows {
        line(&mut row.iter().map(String::as_str));
    }
    out
}

fn set(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[derive(Serialize)]
pub struct RootSystemOut {
    #[serde(rename = "type")]
    pub cartan_type: String,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub positive_roots: Vec<Weight>,
    pub highest_root: Weight,
}

impl RootSystemOut {
    pub fn new(rs: &RootSystem) -> Self {
        RootSystemOut {
            cartan_type: rs.label(),
            rank: rs.rank(),
            cartan_matrix: rs.cartan_matrix().to_vec(),
            positive_roots: rs.positive_roots().iter().map(|r| r.as_weight().clone()).collect(),
            highest_root: rs.highest_root().as_weight().clone(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("type {}  rank {}\ncartan matrix\n", self.cartan_type, self.rank);
        let rows: Vec<Vec<String>> = self
            .cartan_matrix
            .iter()
            .map(|r| r.iter().map(|a| format!("{a:>2}")).collect())
            .collect();
        for r in rows {
            let _ = writeln!(out, "  {}", r.join(" "));
        }
        let _ = writeln!(out, "positive roots ({})", self.positive_roots.len());
        let rows: Vec<Vec<String>> = self
            .positive_roots
            .iter()
            .map(|w| vec![w.height().to_string(), w.to_string()])
            .collect();
        out.push_str(&table(&["height", "root"], &rows));
        let _ = writeln!(out, "highest root {}", self.highest_root);
        out
    }
}

#[derive(Serialize)]
pub struct KujDimOut {
    #[serde(rename = "type")]
    pub cartan_type: String,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    pub weight: Weight,
    pub dim: u64,
}

impl KujDimOut {
    pub fn to_text(&self) -> String {
        format!(
            "{}  J = {}  weight {}  dim {}\n",
            self.cartan_type,
            set(&self.j),
            self.weight,
            self.dim
        )
    }
}

#[derive(Serialize)]
pub struct FiberOut {
    #[serde(rename = "type")]
    pub cartan_type: String,
    #[serde(rename = "J")]
    pub j: Vec<usize>,
    #[serde(flatten)]
    pub report: FiberReport,
}

impl FiberOut {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{}  J = {}  chi = {}\n",
            self.cartan_type,
            set(&self.j),
            self.report.chi
        );
        let rows: Vec<Vec<String>> = self
            .report
            .entries
            .iter()
            .map(|e| vec![e.weight.to_string(), e.dim.to_string()])
            .collect();
        out.push_str(&table(&["weight", "dim"], &rows));
        let _ = writeln!(
            out,
            "total dim {}  max degree {}",
            self.report.total_dim, self.report.max_exponent_sum
        );
        out
    }
}

#[derive(Serialize)]
pub struct Sl2CharOut {
    pub p: u64,
    pub lam: u64,
    pub digits: Vec<u64>,
    pub dim: i64,
    pub character: Character,
}

impl Sl2CharOut {
    pub fn to_text(&self) -> String {
        format!(
            "ch L({}) = {}\np = {}  dim {}\n",
            self.lam, self.character, self.p, self.dim
        )
    }
}

fn factor_rows(d: &SimpleDecomposition) -> String {
    let rows: Vec<Vec<String>> = d
        .multiplicities
        .iter()
        .map(|(lam, m)| vec![format!("L({lam})"), m.to_string()])
        .collect();
    table(&["factor", "mult"], &rows)
}

#[derive(Serialize)]
pub struct TensorOut {
    pub p: u64,
    pub mu: u64,
    pub nu: u64,
    pub factors: SimpleDecomposition,
}

impl TensorOut {
    pub fn to_text(&self) -> String {
        let mut out = format!("L({}) (x) L({})  p = {}\n", self.mu, self.nu, self.p);
        out.push_str(&factor_rows(&self.factors));
        out
    }
}

pub fn decomposition_text(d: &SimpleDecomposition) -> String {
    let mut out = format!("p = {}  genuine {}\n", d.p, d.genuine);
    out.push_str(&factor_rows(d));
    out
}

#[derive(Serialize)]
pub struct HomOut {
    pub p: u64,
    pub mu: u64,
    pub lam: u64,
    pub module: Character,
    pub dim: u64,
}

impl HomOut {
    pub fn to_text(&self) -> String {
        format!(
            "dim Hom(L({}), I({}) (x) M) = {}  p = {}\n",
            self.mu, self.lam, self.dim, self.p
        )
    }
}

pub fn remark_text(s: &RemarkSweep) -> String {
    let rows: Vec<Vec<String>> = s
        .hits
        .iter()
        .map(|h| vec![h.mu.to_string(), h.multiplicity.to_string()])
        .collect();
    let mut out = format!("mu <= {} with [L(mu) (x) L(1) : L(0)] != 0, p = 2\n", s.max);
    out.push_str(&table(&["mu", "mult"], &rows));
    out
}

pub fn socle_text(c: &SocleCertificate) -> String {
    use mockinj::sl2::InductionCase;
    let rows: Vec<Vec<String>> = c
        .steps
        .iter()
        .map(|s| {
            let case = match s.case {
                InductionCase::Trivial => "trivial".to_string(),
                InductionCase::Odd => "odd".to_string(),
                InductionCase::Halve { to } => format!("halve -> {to}"),
            };
            vec![
                s.lam.to_string(),
                case,
                s.zero_weight_mult.to_string(),
                s.hom_bound.to_string(),
                if s.ok { "ok" } else { "FAIL" }.to_string(),
            ]
        })
        .collect();
    let mut out = table(&["lam", "case", "zero wt", "hom bound", ""], &rows);
    let socle: Vec<String> = c.socle.iter().map(|l| format!("L({l})")).collect();
    let _ = writeln!(
        out,
        "p = {}  lam <= {}  socle {}  {}",
        c.p,
        c.lam_max,
        socle.join(" + "),
        if c.passed { "PASS" } else { "FAIL" }
    );
    out
}

pub fn classification_text(c: &Classification) -> String {
    let mut out = format!(
        "G0 = {}  |pi0| = {}  p = {}\nlinearly reductive {}\nproper mock injectives {}\n",
        c.group.identity_component,
        c.group.component_group_order,
        c.p,
        c.linearly_reductive,
        c.has_proper_mock_injectives
    );
    if let Some(w) = &c.witness {
        let line = match w {
            mockinj::Witness::NonTorusIdentityComponent { cartan_type } => {
                format!("witness: identity component {cartan_type} is not a torus")
            }
            mockinj::Witness::CyclicComponentCohomology { order, degree, dim } => {
                format!("witness: dim H^{degree}(Z/{order}, k) = {dim}")
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn reproduction_text(r: &ReproductionReport) -> String {
    let rows: Vec<Vec<String>> = r
        .claims
        .iter()
        .map(|c| {
            vec![
                c.id.to_string(),
                if c.passed { "PASS" } else { "FAIL" }.to_string(),
                c.name.clone(),
                c.result.clone(),
            ]
        })
        .collect();
    let mut out = table(&["#", "", "claim", "result"], &rows);
    let _ = writeln!(out, "{}", if r.passed { "all claims pass" } else { "some claims FAILED" });
    out
}
