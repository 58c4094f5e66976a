use std::fmt::Write;

/// Text table. Columns holding only numbers are right-aligned, the rest
/// left-aligned.
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<I, S>(header: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Table {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn row<I, S>(&mut self, cells: I)
    where
        I: IntoIterator<Item = S>,
        S: ToString,
    {
        self.rows
            .push(cells.into_iter().map(|c| c.to_string()).collect());
    }

    pub fn render(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (k, cell) in row.iter().enumerate() {
                if k < widths.len() {
                    widths[k] = widths[k].max(cell.chars().count());
                }
            }
        }
        let numeric: Vec<bool> = (0..widths.len())
            .map(|k| {
                self.rows.iter().all(|row| {
                    row.get(k).is_none_or(|c| {
                        c == "-" || c.trim_start_matches(">=").parse::<i64>().is_ok()
                    })
                })
            })
            .collect();
        let mut out = String::new();
        let mut line = |cells: &[String]| {
            let parts: Vec<String> = cells
                .iter()
                .zip(widths.iter().zip(&numeric))
                .map(|(c, (&w, &num))| {
                    if num {
                        format!("{c:>w$}")
                    } else {
                        format!("{c:<w$}")
                    }
                })
                .collect();
            writeln!(out, "{}", parts.join("  ").trim_end()).unwrap();
        };
        line(&self.header);
        for row in &self.rows {
            line(row);
        }
        out
    }
}

/// `key  value` lines with the keys padded to a common width.
pub fn key_values(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    pairs
        .iter()
        .map(|(k, v)| format!("{k:<width$}  {v}\n"))
        .collect()
}

pub fn join<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn columns_align() {
        let mut t = Table::new(["n", "reg"]);
        t.row([10, 5]);
        t.row([100, 12]);
        assert_eq!(t.render(), "  n  reg\n 10    5\n100   12\n");
        let mut t = Table::new(["name", "n"]);
        t.row(["ab", "7"]);
        assert_eq!(t.render(), "name  n\nab    7\n");
    }
}
