//! Text format for biquandle operation tables.
//!
//! ```text
//! biquandle v1
//! n=<int>
//! up:
//! <n lines of n space-separated indices, row a column b = a^b>
//! down:
//! <n lines, row a column b = a_b>
//! names:            (optional)
//! <n lines "<index> <display-name>">
//! ```

use std::fmt::Write as _;

use super::biquandle::{FiniteBiquandle, SwitchTables};
use crate::error::TableFileError;

const HEADER: &str = "biquandle v1";

/// A parsed table file: unverified tables plus optional element names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableFile {
    pub tables: SwitchTables,
    pub names: Option<Vec<String>>,
}

pub fn write_tables(tables: &SwitchTables, names: Option<&[String]>) -> String {
    let n = tables.size();
    let mut out = String::new();
    let _ = writeln!(out, "{HEADER}");
    let _ = writeln!(out, "n={n}");
    for (label, rows) in [("up:", tables.up_rows()), ("down:", tables.down_rows())] {
        let _ = writeln!(out, "{label}");
        for row in rows {
            let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(out, "{}", line.join(" "));
        }
    }
    if let Some(names) = names {
        let _ = writeln!(out, "names:");
        for (i, name) in names.iter().enumerate() {
            let _ = writeln!(out, "{i} {name}");
        }
    }
    out
}

/// Writes a biquandle, including a `names:` section unless every name is
/// just its index.
pub fn write_biquandle(b: &FiniteBiquandle) -> String {
    let default = b
        .names()
        .iter()
        .enumerate()
        .all(|(i, s)| *s == i.to_string());
    write_tables(b.tables(), (!default).then_some(b.names()))
}

struct Lines<'a> {
    lines: Vec<&'a str>,
    cursor: usize,
}

impl<'a> Lines<'a> {
    fn next(&mut self, what: &str) -> Result<(usize, &'a str), TableFileError> {
        let line_no = self.cursor + 1;
        let line = self
            .lines
            .get(self.cursor)
            .copied()
            .ok_or_else(|| err(line_no, format!("unexpected end of file, expected {what}")))?;
        self.cursor += 1;
        Ok((line_no, line))
    }

    fn expect(&mut self, label: &str) -> Result<(), TableFileError> {
        let (ln, line) = self.next(label)?;
        if line.trim_end() != label {
            return Err(err(ln, format!("expected {label:?}, found {line:?}")));
        }
        Ok(())
    }

    fn at_end(&self) -> bool {
        self.cursor >= self.lines.len()
    }

    fn matrix(&mut self, label: &str, n: usize) -> Result<Vec<Vec<usize>>, TableFileError> {
        self.expect(label)?;
        (0..n)
            .map(|_| {
                let (ln, line) = self.next("a table row")?;
                let row = line
                    .split_whitespace()
                    .map(|tok| {
                        let x: usize = tok
                            .parse()
                            .map_err(|_| err(ln, format!("bad entry {tok:?}")))?;
                        if x >= n {
                            return Err(err(ln, format!("entry {x} out of range 0..{n}")));
                        }
                        Ok(x)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if row.len() != n {
                    return Err(err(
                        ln,
                        format!("row has {} entries, expected {n}", row.len()),
                    ));
                }
                Ok(row)
            })
            .collect()
    }
}

fn err(line: usize, message: String) -> TableFileError {
    TableFileError { line, message }
}

pub fn read_tables(text: &str) -> Result<TableFile, TableFileError> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    let mut lines = Lines {
        lines: body.split('\n').collect(),
        cursor: 0,
    };

    lines.expect(HEADER)?;
    let (ln, size) = lines.next("n=<int>")?;
    let n: usize = size
        .trim_end()
        .strip_prefix("n=")
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| err(ln, format!("expected n=<int>, found {size:?}")))?;

    let up = lines.matrix("up:", n)?;
    let down = lines.matrix("down:", n)?;

    let mut names = None;
    if !lines.at_end() {
        let (ln, line) = lines.next("names:")?;
        if line.trim_end() != "names:" {
            return Err(err(ln, format!("trailing garbage {line:?}")));
        }
        let mut list = vec![None; n];
        for _ in 0..n {
            let (ln, line) = lines.next("a name line")?;
            let (idx, name) = line
                .split_once(' ')
                .ok_or_else(|| err(ln, format!("expected \"<index> <name>\", found {line:?}")))?;
            let idx: usize = idx
                .parse()
                .ok()
                .filter(|&i| i < n)
                .ok_or_else(|| err(ln, format!("bad name index {idx:?}")))?;
            let name = name.trim();
            if name.is_empty() || list[idx].is_some() {
                return Err(err(ln, format!("empty or repeated name for index {idx}")));
            }
            list[idx] = Some(name.to_string());
        }
        names = Some(
            list.into_iter()
                .map(|s| s.expect("all n indices named"))
                .collect(),
        );
    }
    if !lines.at_end() {
        let ln = lines.cursor + 1;
        return Err(err(
            ln,
            format!("trailing garbage {:?}", lines.lines[lines.cursor]),
        ));
    }

    let tables =
        SwitchTables::from_rows(&up, &down).map_err(|e| err(lines.cursor, e.to_string()))?;
    Ok(TableFile { tables, names })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{alexander_biquandle, wada_biquandle, FiniteGroup};

    #[test]
    fn writes_exact_format() {
        let b = alexander_biquandle(3, 2, 2).unwrap();
        let text = write_biquandle(&b);
        // λ = μ = 2, 1 − μλ = 0 mod 3: up(a, b) = 2a, down(a, b) = 2a.
        let expected = "biquandle v1\nn=3\nup:\n0 0 0\n2 2 2\n1 1 1\ndown:\n0 0 0\n2 2 2\n1 1 1\n";
        assert_eq!(text, expected);
    }

    #[test]
    fn round_trip_with_names() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let b = wada_biquandle(&s3).unwrap();
        let text = write_biquandle(&b);
        assert!(text.contains("names:\n0 ()\n"));
        let parsed = read_tables(&text).unwrap();
        assert_eq!(&parsed.tables, b.tables());
        assert_eq!(parsed.names.as_deref(), Some(b.names()));
    }

    #[test]
    fn rejects_bad_input_with_line_numbers() {
        let good = "biquandle v1\nn=2\nup:\n0 0\n1 1\ndown:\n0 0\n1 1\n";
        assert!(read_tables(good).is_ok());

        let cases = [
            ("biquandle v2\n", 1),
            ("biquandle v1\nn=x\n", 2),
            ("biquandle v1\nn=2\nup:\n0 2\n1 1\ndown:\n0 0\n1 1\n", 4),
            ("biquandle v1\nn=2\nup:\n0 0\n1\ndown:\n0 0\n1 1\n", 5),
            ("biquandle v1\nn=2\nup:\n0 0\n1 1\ndown:\n0 0\n", 8),
            (
                "biquandle v1\nn=2\nup:\n0 0\n1 1\ndown:\n0 0\n1 1\nextra\n",
                9,
            ),
            (
                "biquandle v1\nn=2\nup:\n0 0\n1 1\ndown:\n0 0\n1 1\nnames:\n0 a\n0 b\n",
                11,
            ),
            (
                "biquandle v1\nn=2\nup:\n0 0\n1 1\ndown:\n0 0\n1 1\nnames:\n0 a\n1 b\nmore\n",
                12,
            ),
        ];
        for (text, line) in cases {
            let e = read_tables(text).unwrap_err();
            assert_eq!(e.line, line, "{text:?}: {e}");
        }
    }
}
