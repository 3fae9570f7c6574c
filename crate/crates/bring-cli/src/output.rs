//! Rendering of reports and tables as human text, JSON, and CSV.
//!
//! Machine formats print every binary64 with 17 significant digits, which
//! round-trips exactly, and are byte-deterministic for fixed inputs. The
//! human format favours readability and makes no byte-level promises.

use bring_core::diagnostics::{PartialSumTable, ScanPoint, TermTable};
use bring_core::solver::SolveReport;
use bring_core::CoefficientTable;

/// 17 significant digits, round-trip-exact for binary64.
pub fn machine(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_opt(x: Option<f64>) -> String {
    match x {
        Some(v) => machine(v),
        None => "null".into(),
    }
}

pub fn human_report(report: &SolveReport, dump: bool) -> String {
    let mut out = String::new();
    out.push_str(&format!("root                 {}\n", report.root));
    match report.scaled_root {
        Some(s) => out.push_str(&format!("scaled root          {s}\n")),
        None => out.push_str("scaled root          n/a\n"),
    }
    out.push_str(&format!("residual             {:e}\n", report.residual));
    out.push_str(&format!(
        "method               {}\n",
        report.method.as_str()
    ));
    out.push_str(&format!(
        "terms or iterations  {}\n",
        report.terms_or_iterations
    ));
    out.push_str(&format!(
        "polished             {}\n",
        if report.polished { "yes" } else { "no" }
    ));
    if dump {
        if let Some(set) = &report.ultraradicals {
            out.push_str(&format!("\nseries values at |a| = {}\n", set.a));
            let names = ["K0", "K1", "K2", "K3", "K4"];
            for (i, v) in set.values().iter().enumerate() {
                out.push_str(&format!(
                    "  {}  {:<24}  terms {:>2}  stop {}\n",
                    names[i],
                    v,
                    set.m_used[i],
                    set.stop_reason[i].as_str()
                ));
            }
        }
        if let Some(roots) = &report.quartic_roots {
            out.push_str("\nquartic roots\n");
            for z in &roots.roots {
                out.push_str(&format!("  {} {:+}i\n", z.re, z.im));
            }
            out.push_str(&format!("  max residual {:e}\n", roots.max_residual));
        }
    }
    out
}

pub fn json_report(report: &SolveReport, dump: bool) -> String {
    let mut out = String::from("{");
    out.push_str(&format!("\"root\":{},", machine(report.root)));
    out.push_str(&format!(
        "\"scaled_root\":{},",
        json_opt(report.scaled_root)
    ));
    out.push_str(&format!("\"residual\":{},", machine(report.residual)));
    out.push_str(&format!("\"method\":\"{}\",", report.method.as_str()));
    out.push_str(&format!(
        "\"terms_or_iterations\":{},",
        report.terms_or_iterations
    ));
    out.push_str(&format!("\"polished\":{}", report.polished));
    if dump {
        match &report.ultraradicals {
            Some(set) => {
                out.push_str(&format!(",\"ultraradicals\":{{\"a\":{}", machine(set.a)));
                let names = ["k0", "k1", "k2", "k3", "k4"];
                for (i, v) in set.values().iter().enumerate() {
                    out.push_str(&format!(",\"{}\":{}", names[i], machine(*v)));
                }
                out.push_str(",\"m_used\":[");
                for (i, m) in set.m_used.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&m.to_string());
                }
                out.push_str("],\"stop_reason\":[");
                for (i, r) in set.stop_reason.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&format!("\"{}\"", r.as_str()));
                }
                out.push_str("]}");
            }
            None => out.push_str(",\"ultraradicals\":null"),
        }
        match &report.quartic_roots {
            Some(set) => {
                out.push_str(",\"quartic_roots\":{\"roots\":[");
                for (i, z) in set.roots.iter().enumerate() {
                    if i > 0 {
                        out.push(',');
                    }
                    out.push_str(&format!(
                        "{{\"re\":{},\"im\":{}}}",
                        machine(z.re),
                        machine(z.im)
                    ));
                }
                out.push_str(&format!(
                    "],\"max_residual\":{}}}",
                    machine(set.max_residual)
                ));
            }
            None => out.push_str(",\"quartic_roots\":null"),
        }
    }
    out.push_str("}\n");
    out
}

pub fn csv_report(report: &SolveReport) -> String {
    let mut out = String::from("root,scaled_root,residual,method,terms_or_iterations,polished\n");
    out.push_str(&format!(
        "{},{},{},{},{},{}\n",
        machine(report.root),
        report.scaled_root.map(machine).unwrap_or_default(),
        machine(report.residual),
        report.method.as_str(),
        report.terms_or_iterations,
        report.polished
    ));
    out
}

pub fn csv_coefficients(coeffs: &CoefficientTable, max_k: usize) -> String {
    let mut out = String::from("k,c_k\n");
    for k in 1..=max_k {
        let c = coeffs.get(k).expect("table covers 1..=max_k");
        out.push_str(&format!("{},{}\n", k, machine(c)));
    }
    out
}

pub fn csv_terms(table: &TermTable) -> String {
    let mut out = String::from("m,t_m\n");
    for (m, t) in &table.entries {
        out.push_str(&format!("{},{}\n", m, machine(*t)));
    }
    out
}

pub fn csv_partial_sums(table: &PartialSumTable) -> String {
    let mut out = String::from("a");
    for c in &table.checkpoints {
        out.push_str(&format!(",s_{c}"));
    }
    out.push('\n');
    for (i, a) in table.a_values.iter().enumerate() {
        out.push_str(&machine(*a));
        for s in &table.sums[i] {
            out.push(',');
            out.push_str(&machine(*s));
        }
        out.push('\n');
    }
    out
}

pub fn csv_scan(points: &[ScanPoint]) -> String {
    let mut out = String::from("a,series_root,oracle_root,abs_error,m_used,error\n");
    for p in points {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            machine(p.a),
            p.series_root.map(machine).unwrap_or_default(),
            machine(p.oracle_root),
            p.abs_error.map(machine).unwrap_or_default(),
            p.m_used.map(|m| m.to_string()).unwrap_or_default(),
            p.error.as_ref().map(|e| e.kind()).unwrap_or_default()
        ));
    }
    out
}

pub fn json_scan(points: &[ScanPoint]) -> String {
    let mut out = String::from("{\"points\":[");
    for (i, p) in points.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!("{{\"a\":{}", machine(p.a)));
        out.push_str(&format!(",\"series_root\":{}", json_opt(p.series_root)));
        out.push_str(&format!(",\"oracle_root\":{}", machine(p.oracle_root)));
        out.push_str(&format!(",\"abs_error\":{}", json_opt(p.abs_error)));
        match p.m_used {
            Some(m) => out.push_str(&format!(",\"m_used\":{m}")),
            None => out.push_str(",\"m_used\":null"),
        }
        match &p.error {
            Some(e) => out.push_str(&format!(",\"error\":\"{}\"", e.kind())),
            None => out.push_str(",\"error\":null"),
        }
        out.push('}');
    }
    out.push_str("]}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn machine_round_trips() {
        for &x in &[1.5, -0.025536, 1e-300, 9.09375, 0.1649484536082474] {
            assert_eq!(machine(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn machine_is_exponent_notation() {
        assert_eq!(machine(1.5), "1.5000000000000000e0");
        assert_eq!(machine(-0.25), "-2.5000000000000000e-1");
    }
}
