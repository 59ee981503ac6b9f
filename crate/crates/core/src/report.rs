//! Count rows shared by every engine's report output.

use serde::Serialize;

use crate::table::Side;

pub const CSV_HEADER: &str = "system,n,side,exact,count,bound_note";

/// One count of distinct sets at one length. `exact = false` marks a
/// depth-limited lower bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub system: String,
    pub n: usize,
    pub side: Side,
    pub exact: bool,
    pub count: usize,
    pub bound_note: String,
}

impl CountRow {
    pub fn exact(system: &str, n: usize, side: Side, count: usize, note: &str) -> Self {
        CountRow {
            system: system.to_string(),
            n,
            side,
            exact: true,
            count,
            bound_note: note.to_string(),
        }
    }

    pub fn lower_bound(system: &str, n: usize, side: Side, count: usize, depth: usize) -> Self {
        CountRow {
            system: system.to_string(),
            n,
            side,
            exact: false,
            count,
            bound_note: format!("lower bound from depth-{depth} profiles"),
        }
    }

    pub fn csv(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            csv_field(&self.system),
            self.n,
            self.side,
            self.exact,
            self.count,
            csv_field(&self.bound_note)
        )
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn rows_to_csv(rows: &[CountRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.csv());
        out.push('\n');
    }
    out
}
