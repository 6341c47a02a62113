//! Deterministic table rendering: CSV and JSON with every float printed to
//! 12 significant digits, so identical configs produce identical bytes.

/// 12 significant digits, scientific notation.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.11e}")
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Str(&'static str),
    Empty,
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(v) => fmt_num(*v),
            Cell::Str(s) => (*s).to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Num(v) => fmt_num(*v),
            Cell::Str(s) => format!("\"{s}\""),
            Cell::Empty => "null".to_string(),
        }
    }
}

/// Tabular command output plus leading/trailing metadata.
#[derive(Debug, Clone, Default)]
pub struct Table {
    /// `(key, value)` pairs rendered as `# key = value` comments in CSV and
    /// top-level string fields in JSON.
    pub meta: Vec<(&'static str, String)>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Metadata that belongs after the data (e.g. a normalization check).
    pub trailing: Vec<(&'static str, String)>,
}

impl Table {
    pub fn render_csv(&self) -> String {
        let mut out = String::new();
        for (key, value) in &self.meta {
            out.push_str(&format!("# {key} = {value}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        for (key, value) in &self.trailing {
            out.push_str(&format!("# {key} = {value}\n"));
        }
        out
    }

    pub fn render_json(&self, command: &str) -> String {
        let mut out = String::new();
        out.push_str(&format!("{{\n  \"command\": \"{command}\""));
        for (key, value) in &self.meta {
            out.push_str(&format!(",\n  \"{key}\": \"{value}\""));
        }
        out.push_str(",\n  \"rows\": [");
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str("\n    {");
            let fields: Vec<String> = self
                .columns
                .iter()
                .zip(row)
                .map(|(col, cell)| format!("\"{col}\": {}", cell.json()))
                .collect();
            out.push_str(&fields.join(", "));
            out.push('}');
        }
        out.push_str("\n  ]");
        for (key, value) in &self.trailing {
            out.push_str(&format!(",\n  \"{key}\": {value}"));
        }
        out.push_str("\n}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        Table {
            meta: vec![("coupling", "coulomb".to_string())],
            columns: vec!["n", "epsilon", "status"],
            rows: vec![
                vec![Cell::Int(0), Cell::Num(5.0_f64.sqrt()), Cell::Str("ok")],
                vec![Cell::Int(1), Cell::Empty, Cell::Str("NoBoundStates")],
            ],
            trailing: vec![("normalization", fmt_num(1.0))],
        }
    }

    #[test]
    fn csv_layout() {
        let csv = sample().render_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "# coupling = coulomb");
        assert_eq!(lines[1], "n,epsilon,status");
        assert_eq!(lines[2], "0,2.23606797750e0,ok");
        assert_eq!(lines[3], "1,,NoBoundStates");
        assert_eq!(lines[4], "# normalization = 1.00000000000e0");
    }

    #[test]
    fn json_is_wellformed_enough() {
        let json = sample().render_json("spectrum");
        assert!(json.contains("\"command\": \"spectrum\""));
        assert!(json.contains("\"epsilon\": 2.23606797750e0"));
        assert!(json.contains("\"epsilon\": null"));
        assert!(json.contains("\"normalization\": 1.00000000000e0"));
        // braces balance
        assert_eq!(json.matches('{').count(), json.matches('}').count());
    }

    #[test]
    fn twelve_significant_digits() {
        assert_eq!(fmt_num(1.0), "1.00000000000e0");
        assert_eq!(fmt_num(-0.000123456789012345), "-1.23456789012e-4");
    }
}
