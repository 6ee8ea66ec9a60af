//! Rendering of reports and tables: text for reading, csv and json for
//! machines. Equal inputs produce byte-equal output.

use clap::ValueEnum;
use pfaffian_ladders::invariants::{InvariantReport, Source};
use pfaffian_ladders::ladder::LadderIdealSpec;
use pfaffian_ladders::oracle::VerifyReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

fn corner_list(spec: &LadderIdealSpec) -> String {
    spec.corners()
        .iter()
        .zip(spec.t())
        .map(|(c, t)| format!("({},{})t{t}", c.a, c.b))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn spec_summary(spec: &LadderIdealSpec) -> String {
    if spec.is_empty() {
        format!("n={} (no corners)", spec.n())
    } else {
        format!("n={} {}", spec.n(), corner_list(spec))
    }
}

fn source_name(source: Source) -> &'static str {
    match source {
        Source::Formula => "formula",
        Source::Engine => "engine",
        Source::Oracle => "oracle",
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn invariants(r: &InvariantReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json_line(r),
        OutputFormat::Csv => {
            let hvec = r
                .hvector
                .as_ref()
                .map(|h| format!("{:?}", h.coeffs()))
                .unwrap_or_default();
            let reg = r.regularity.map(|v| v.to_string()).unwrap_or_default();
            format!(
                "n,corners,height,multiplicity,hvector,regularity,source\n{},{},{},{},{},{},{}\n",
                r.spec.n(),
                csv_field(&corner_list(&r.spec)),
                r.height,
                r.multiplicity,
                csv_field(&hvec),
                reg,
                source_name(r.source),
            )
        }
        OutputFormat::Text => {
            let mut out = format!("spec: {}\n", spec_summary(&r.spec));
            out.push_str(&format!("height: {}\n", r.height));
            out.push_str(&format!("multiplicity: {}\n", r.multiplicity));
            if let Some(h) = &r.hvector {
                out.push_str(&format!("h-vector: {:?}\n", h.coeffs()));
            }
            if let Some(reg) = r.regularity {
                out.push_str(&format!("regularity: {reg}\n"));
            }
            out.push_str(&format!("source: {}\n", source_name(r.source)));
            out
        }
    }
}

pub fn verification(r: &VerifyReport, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => json_line(r),
        OutputFormat::Csv => {
            let mut out = String::from("field,expected,actual,pass\n");
            for c in &r.checks {
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    c.field,
                    csv_field(&c.expected),
                    csv_field(&c.actual),
                    c.pass
                ));
            }
            out
        }
        OutputFormat::Text => {
            let mut out = format!("spec: {}\n", spec_summary(&r.spec));
            out.push_str(&format!("groebner basis size: {}\n", r.gb_size));
            out.push_str(&format!("numerator: {}\n", r.numerator.join(" ")));
            for c in &r.checks {
                let mark = if c.pass { "ok" } else { "MISMATCH" };
                out.push_str(&format!(
                    "{}: expected {}, oracle {} [{mark}]\n",
                    c.field, c.expected, c.actual
                ));
            }
            out.push_str(if r.pass { "PASS\n" } else { "FAIL\n" });
            out
        }
    }
}

/// One multiplicity grid; every row carries values for the same columns.
pub struct Table {
    pub family: &'static str,
    pub columns: Vec<&'static str>,
    pub rows: Vec<TableRow>,
}

pub struct TableRow {
    pub params: Vec<usize>,
    pub multiplicity: String,
}

pub fn table(t: &Table, format: OutputFormat) -> String {
    match format {
        OutputFormat::Csv => {
            let mut out = format!("family,{},multiplicity\n", t.columns.join(","));
            for row in &t.rows {
                let params: Vec<String> = row.params.iter().map(|v| v.to_string()).collect();
                out.push_str(&format!(
                    "{},{},{}\n",
                    t.family,
                    params.join(","),
                    row.multiplicity
                ));
            }
            out
        }
        OutputFormat::Json => {
            let items: Vec<String> = t
                .rows
                .iter()
                .map(|row| {
                    let mut parts = vec![format!("\"family\":\"{}\"", t.family)];
                    for (name, v) in t.columns.iter().zip(&row.params) {
                        parts.push(format!("\"{name}\":{v}"));
                    }
                    parts.push(format!("\"multiplicity\":\"{}\"", row.multiplicity));
                    format!("{{{}}}", parts.join(","))
                })
                .collect();
            format!("[{}]\n", items.join(","))
        }
        OutputFormat::Text => {
            let mut grid: Vec<Vec<String>> = Vec::with_capacity(t.rows.len() + 1);
            let mut header = vec!["family".to_string()];
            header.extend(t.columns.iter().map(|c| c.to_string()));
            header.push("multiplicity".to_string());
            grid.push(header);
            for row in &t.rows {
                let mut cells = vec![t.family.to_string()];
                cells.extend(row.params.iter().map(|v| v.to_string()));
                cells.push(row.multiplicity.clone());
                grid.push(cells);
            }
            let ncols = grid[0].len();
            let widths: Vec<usize> = (0..ncols)
                .map(|c| grid.iter().map(|row| row[c].len()).max().unwrap_or(0))
                .collect();
            let mut out = String::new();
            for row in &grid {
                for (c, cell) in row.iter().enumerate() {
                    if c + 1 == ncols {
                        out.push_str(cell);
                    } else {
                        out.push_str(&format!("{:<width$}  ", cell, width = widths[c]));
                    }
                }
                out.push('\n');
            }
            out
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use pfaffian_ladders::ladder::Family;

    #[test]
    fn csv_fields_quote_commas_and_quotes() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("[1, 3, 1]"), "\"[1, 3, 1]\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn spec_summaries_list_corners_with_sizes() {
        let spec = Family::Ln { t: 2, n: 6 }.spec().unwrap();
        assert_eq!(spec_summary(&spec), "n=6 (1,5)t2 (2,6)t2");
    }

    #[test]
    fn tables_align_and_stay_parseable() {
        let t = Table {
            family: "Lk",
            columns: vec!["t", "k"],
            rows: vec![
                TableRow {
                    params: vec![1, 1],
                    multiplicity: "1".into(),
                },
                TableRow {
                    params: vec![2, 10],
                    multiplicity: "123456".into(),
                },
            ],
        };
        assert_eq!(
            table(&t, OutputFormat::Csv),
            "family,t,k,multiplicity\nLk,1,1,1\nLk,2,10,123456\n"
        );
        assert_eq!(
            table(&t, OutputFormat::Json),
            "[{\"family\":\"Lk\",\"t\":1,\"k\":1,\"multiplicity\":\"1\"},\
             {\"family\":\"Lk\",\"t\":2,\"k\":10,\"multiplicity\":\"123456\"}]\n"
        );
        let text = table(&t, OutputFormat::Text);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "family  t  k   multiplicity");
        assert_eq!(lines[1], "Lk      1  1   1");
        assert_eq!(lines[2], "Lk      2  10  123456");
    }
}
