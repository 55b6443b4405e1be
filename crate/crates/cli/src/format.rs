//! Text and JSON matrix formats.
//!
//! Text: one line per row over `+`, `-`, `.`. JSON: `{"n": n, "rows": [[..]]}`
//! for square matrices, `{"rows": r, "cols": c, "entries": [[..]]}` for any
//! grid. Input starting with `{` is read as JSON.

use asm_core::{Asm, Grid};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SquareJson {
    n: usize,
    rows: Vec<Vec<i8>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GridJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<i8>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AnyJson {
    Square(SquareJson),
    Grid(GridJson),
}

pub fn parse_text(input: &str) -> Result<Grid, String> {
    let mut rows = Vec::new();
    for (i, line) in input.lines().enumerate() {
        let line = line.trim_end();
        if line.is_empty() {
            continue;
        }
        let row = line
            .chars()
            .enumerate()
            .map(|(j, c)| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                '.' => Ok(0),
                other => Err(format!(
                    "line {}, column {}: unexpected character '{other}'",
                    i + 1,
                    j + 1
                )),
            })
            .collect::<Result<Vec<i8>, _>>()?;
        rows.push(row);
    }
    Grid::from_rows(&rows).map_err(|e| e.to_string())
}

fn checked(rows: Vec<Vec<i8>>, r: usize, c: usize) -> Result<Grid, String> {
    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
        return Err(format!("declared shape {r}x{c} does not match the rows given"));
    }
    Grid::from_rows(&rows).map_err(|e| e.to_string())
}

pub fn parse_json(input: &str) -> Result<Grid, String> {
    match serde_json::from_str::<AnyJson>(input) {
        Ok(AnyJson::Square(s)) => checked(s.rows, s.n, s.n),
        Ok(AnyJson::Grid(g)) => checked(g.entries, g.rows, g.cols),
        Err(e) => Err(format!("not a matrix object: {e}")),
    }
}

pub fn parse(input: &str) -> Result<Grid, String> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

pub fn grid_json(g: &Grid) -> String {
    let j = GridJson {
        rows: g.rows(),
        cols: g.cols(),
        entries: g.to_rows(),
    };
    serde_json::to_string(&j).expect("plain data serialises")
}

pub fn asm_json(a: &Asm) -> String {
    let j = SquareJson {
        n: a.n(),
        rows: a.grid().to_rows(),
    };
    serde_json::to_string(&j).expect("plain data serialises")
}

/// A grid in the given format, without a trailing newline. Square grids use
/// the `n`/`rows` JSON form.
pub fn emit_grid(g: &Grid, format: Format) -> String {
    match format {
        Format::Text => g.to_string(),
        Format::Json if g.is_square() => {
            let j = SquareJson {
                n: g.rows(),
                rows: g.to_rows(),
            };
            serde_json::to_string(&j).expect("plain data serialises")
        }
        Format::Json => grid_json(g),
    }
}

pub fn emit(a: &Asm, format: Format) -> String {
    match format {
        Format::Text => a.to_string(),
        Format::Json => asm_json(a),
    }
}
