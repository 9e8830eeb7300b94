//! Row/table plumbing for the three output formats. Identical inputs must
//! produce identical bytes, so everything is buffered and written in one
//! deterministic pass.

use esc::berggren::{MatrixLabel, TreeTriple};
use esc::kernel::Nat;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub enum Cell {
    Num(Nat),
    Text(String),
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Num(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Num(n) => n.to_string(),
            Cell::Text(s) => json_string(s),
        }
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

pub struct Row {
    cells: Vec<(&'static str, Cell)>,
}

impl Row {
    pub fn solution(p: Nat, x: Nat, y: Nat, z: Nat) -> Self {
        Row {
            cells: vec![
                ("p", Cell::Num(p)),
                ("x", Cell::Num(x)),
                ("y", Cell::Num(y)),
                ("z", Cell::Num(z)),
            ],
        }
    }

    pub fn tree(node: &TreeTriple) -> Self {
        Row {
            cells: vec![
                ("a", Cell::Num(node.a)),
                ("b", Cell::Num(node.b)),
                ("c", Cell::Num(node.c)),
                ("depth", Cell::Num(node.depth() as Nat)),
                ("path", Cell::Text(path_string(&node.path))),
            ],
        }
    }

    pub fn triple(mut self, a: Nat, b: Nat, c: Nat) -> Self {
        self.cells.push(("A", Cell::Num(a)));
        self.cells.push(("B", Cell::Num(b)));
        self.cells.push(("C", Cell::Num(c)));
        self
    }

    pub fn kind(mut self, kind: String) -> Self {
        self.cells.push(("kind", Cell::Text(kind)));
        self
    }

    pub fn m(mut self, m: Nat) -> Self {
        self.cells.push(("m", Cell::Num(m)));
        self
    }

    pub fn k(mut self, k: Nat) -> Self {
        self.cells.push(("k", Cell::Num(k)));
        self
    }

    pub fn num(mut self, key: &'static str, n: Nat) -> Self {
        self.cells.push((key, Cell::Num(n)));
        self
    }

    pub fn text(mut self, key: &'static str, value: impl Into<String>) -> Self {
        self.cells.push((key, Cell::Text(value.into())));
        self
    }

    fn get(&self, key: &str) -> &Cell {
        self.cells
            .iter()
            .find(|(k, _)| *k == key)
            .map(|(_, c)| c)
            .unwrap_or_else(|| panic!("row is missing column {key}"))
    }
}

pub struct Table {
    headers: Vec<&'static str>,
    rows: Vec<Row>,
}

impl Table {
    pub fn new(headers: &[&'static str]) -> Self {
        Table { headers: headers.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Row) {
        self.rows.push(row);
    }

    pub fn emit(&self, format: Format) {
        print!("{}", self.render(format));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn render_text(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.len()).collect();
        let mut grid: Vec<Vec<String>> = Vec::with_capacity(self.rows.len());
        for row in &self.rows {
            let cells: Vec<String> = self.headers.iter().map(|h| row.get(h).plain()).collect();
            for (w, c) in widths.iter_mut().zip(&cells) {
                *w = (*w).max(c.len());
            }
            grid.push(cells);
        }
        let mut out = String::new();
        let line = |cells: &[String], out: &mut String| {
            for (i, (c, w)) in cells.iter().zip(&widths).enumerate() {
                if i > 0 {
                    out.push_str("  ");
                }
                out.push_str(&" ".repeat(w - c.len()));
                out.push_str(c);
            }
            out.push('\n');
        };
        let headers: Vec<String> = self.headers.iter().map(|h| h.to_string()).collect();
        line(&headers, &mut out);
        for cells in &grid {
            line(cells, &mut out);
        }
        out
    }

    fn render_csv(&self) -> String {
        let mut out = self.headers.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = self.headers.iter().map(|h| row.get(h).plain()).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn render_json(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push('{');
            for (i, h) in self.headers.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                out.push_str(&json_string(h));
                out.push(':');
                out.push_str(&row.get(h).json());
            }
            out.push_str("}\n");
        }
        out
    }
}

pub fn path_string(path: &[MatrixLabel]) -> String {
    if path.is_empty() {
        return "-".to_string();
    }
    path.iter().map(|l| l.to_string()).collect()
}
