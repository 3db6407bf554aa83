//! Output formats.
//!
//! `text` and `latex` show the triple `(A, x, C)`: the matrix, the
//! generic nullspace vector as a column and the upper triangle of the
//! generic symmetric solution. The parametric parts are recomputed from the
//! matrix, which is cheap and keeps the JSON record small.

use std::io::Write;

use num_traits::{One, Signed};
use shadows::exactla::{nullspace_generic, symmetric_kernel_generic, LinearForm, Rational};

use crate::record::OutputRecord;
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Jsonl,
    Text,
    Latex,
    Csv,
}

/// Writes a whole record stream. `csv` ignores the individual records and
/// writes a single counts row.
pub fn write_records(out: &mut dyn Write, records: &[OutputRecord], format: Format) -> Result<()> {
    if format == Format::Csv {
        out.write_all(counts_csv(records).as_bytes())?;
        return Ok(());
    }
    for (k, rec) in records.iter().enumerate() {
        if k > 0 && format != Format::Jsonl {
            out.write_all(b"\n")?;
        }
        out.write_all(render_record(rec, format)?.as_bytes())?;
    }
    Ok(())
}

pub fn render_record(rec: &OutputRecord, format: Format) -> Result<String> {
    Ok(match format {
        Format::Jsonl => {
            let mut line = serde_json::to_string(rec).expect("records always serialize");
            line.push('\n');
            line
        }
        Format::Text => render_text(rec)?,
        Format::Latex => render_latex(rec)?,
        Format::Csv => counts_csv(std::slice::from_ref(rec)),
    })
}

/// Header plus one row per size present, in increasing `n`.
pub fn counts_csv(records: &[OutputRecord]) -> String {
    let mut sizes: Vec<usize> = records.iter().map(|r| r.n).collect();
    sizes.sort_unstable();
    sizes.dedup();
    let mut out = String::from("n,shades,shadows,essential\n");
    for n in sizes {
        let of_size: Vec<_> = records.iter().filter(|r| r.n == n).collect();
        let classified = of_size.iter().all(|r| r.is_classified());
        let count = |f: fn(&OutputRecord) -> Option<bool>| {
            if classified {
                of_size
                    .iter()
                    .filter(|r| f(r) == Some(true))
                    .count()
                    .to_string()
            } else {
                String::new()
            }
        };
        out.push_str(&format!(
            "{n},{},{},{}\n",
            of_size.len(),
            count(|r| r.is_shadow),
            count(|r| r.is_essential)
        ));
    }
    out
}

fn status(rec: &OutputRecord) -> &'static str {
    match (rec.is_shadow, rec.is_essential) {
        (Some(true), Some(true)) => "essential shadow",
        (Some(true), _) => "shadow",
        (Some(false), _) => "not a shadow",
        (None, _) => "shade",
    }
}

fn subscript(k: usize) -> String {
    k.to_string()
        .chars()
        .map(|d| char::from_u32(0x2080 + d.to_digit(10).unwrap()).unwrap())
        .collect()
}

/// A linear form with parameters named by `name(k)` (0-based `k`) and
/// coefficients rendered by `coeff`.
fn form(
    f: &LinearForm,
    name: &dyn Fn(usize) -> String,
    coeff: &dyn Fn(&Rational) -> String,
) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (k, c)) in f.terms().enumerate() {
        s.push_str(match (i, c.is_negative()) {
            (0, true) => "-",
            (0, false) => "",
            (_, true) => " - ",
            (_, false) => " + ",
        });
        let magnitude = c.abs();
        if !magnitude.is_one() {
            s.push_str(&coeff(&magnitude));
            s.push(' ');
        }
        s.push_str(&name(k));
    }
    s
}

fn grid_lines(cells: &[Vec<String>]) -> Vec<String> {
    let cols = cells.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|j| {
            cells
                .iter()
                .filter_map(|r| r.get(j))
                .map(|c| c.chars().count())
                .max()
                .unwrap_or(0)
        })
        .collect();
    cells
        .iter()
        .map(|row| {
            let padded: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:>w$}"))
                .collect();
            format!("[{}]", padded.join("  "))
        })
        .collect()
}

fn int_cells(m: &[Vec<i64>]) -> Vec<Vec<String>> {
    m.iter()
        .map(|r| r.iter().map(i64::to_string).collect())
        .collect()
}

fn render_text(rec: &OutputRecord) -> Result<String> {
    let a = rec.to_matrix()?;
    let mut out = format!("({}) n = {}, {}\n", rec.index, rec.n, status(rec));
    let mut block = |label: &str, lines: Vec<String>| {
        out.push_str(label);
        out.push('\n');
        for line in lines {
            out.push_str("  ");
            out.push_str(&line);
            out.push('\n');
        }
    };
    block("A =", grid_lines(&int_cells(&rec.matrix)));
    if !rec.is_classified() {
        return Ok(out);
    }
    let plain = |r: &Rational| crate::record::rational_string(r);
    let x = nullspace_generic(&a);
    let v = |k: usize| format!("v{}", subscript(k + 1));
    let x_cells: Vec<Vec<String>> = x
        .entries
        .iter()
        .map(|f| vec![form(f, &v, &plain)])
        .collect();
    block("x =", grid_lines(&x_cells));
    let c = symmetric_kernel_generic(&a);
    let cn = |k: usize| format!("c{}", subscript(k + 1));
    let c_cells: Vec<Vec<String>> = (0..rec.n)
        .map(|i| {
            (0..rec.n)
                .map(|j| {
                    if j < i {
                        "·".to_string()
                    } else {
                        form(c.get(i, j), &cn, &plain)
                    }
                })
                .collect()
        })
        .collect();
    block("C =", grid_lines(&c_cells));
    if let Some(w) = &rec.witness {
        let w: Vec<Vec<i64>> = w
            .iter()
            .map(|r| r.iter().map(|&v| v as i64).collect())
            .collect();
        block("witness =", grid_lines(&int_cells(&w)));
    }
    Ok(out)
}

fn bmatrix(cells: &[Vec<String>]) -> String {
    let rows: Vec<String> = cells.iter().map(|r| r.join(" & ")).collect();
    format!(
        "\\begin{{bmatrix}}\n{}\n\\end{{bmatrix}}",
        rows.join(" \\\\\n")
    )
}

fn render_latex(rec: &OutputRecord) -> Result<String> {
    let a = rec.to_matrix()?;
    let mut out = format!(
        "% ({}) {}\n\\[\n{}",
        rec.index,
        status(rec),
        bmatrix(&int_cells(&rec.matrix))
    );
    if rec.is_classified() {
        let frac = |r: &Rational| {
            if r.is_integer() {
                r.numer().to_string()
            } else {
                format!("\\tfrac{{{}}}{{{}}}", r.numer(), r.denom())
            }
        };
        let x = nullspace_generic(&a);
        let v = |k: usize| format!("v_{{{}}}", k + 1);
        let x_cells: Vec<Vec<String>> =
            x.entries.iter().map(|f| vec![form(f, &v, &frac)]).collect();
        let c = symmetric_kernel_generic(&a);
        let cn = |k: usize| format!("c_{{{}}}", k + 1);
        let c_cells: Vec<Vec<String>> = (0..rec.n)
            .map(|i| {
                (0..rec.n)
                    .map(|j| {
                        if j < i {
                            String::new()
                        } else {
                            form(c.get(i, j), &cn, &frac)
                        }
                    })
                    .collect()
            })
            .collect();
        out.push_str(",\n");
        out.push_str(&bmatrix(&x_cells));
        out.push_str(",\n");
        out.push_str(&bmatrix(&c_cells));
    }
    out.push_str("\n\\]\n");
    Ok(out)
}
