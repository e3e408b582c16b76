//! JSON and ASCII encodings of shapes and colorings.
//!
//! JSON: `{"n": 2, "cells": [{"x": 0, "y": 0, "color": 1}, ...]}` with cells
//! sorted by `(x, y)`; uncolored shapes omit `n` and `color`.
//!
//! ASCII: one line per lattice row from the top row down, a digit per colored
//! cell, `#` for an uncolored cell and `.` for an absent one.

use serde::{Deserialize, Serialize};

use super::{Cell, ColoredCellSet, ColoredPolyomino, LatticeError, Polyomino};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonCell {
    pub x: i32,
    pub y: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub color: Option<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonShape {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u8>,
    pub cells: Vec<JsonCell>,
}

impl JsonShape {
    pub fn from_polyomino(p: &Polyomino) -> Self {
        JsonShape { n: None, cells: p.cells().iter().map(|c| JsonCell { x: c.x, y: c.y, color: None }).collect() }
    }

    pub fn from_colored(cp: &ColoredPolyomino) -> Self {
        Self::from_colored_set(&cp.to_colored_cell_set())
    }

    pub fn from_colored_set(s: &ColoredCellSet) -> Self {
        JsonShape {
            n: Some(s.n()),
            cells: s.cells().iter().map(|&(c, k)| JsonCell { x: c.x, y: c.y, color: Some(k) }).collect(),
        }
    }

    /// The uncolored shape; any colors are ignored.
    pub fn to_polyomino(&self) -> Result<Polyomino, LatticeError> {
        Polyomino::from_cells(self.cells.iter().map(|c| Cell::new(c.x, c.y)))
    }

    pub fn to_colored_set(&self) -> Result<ColoredCellSet, LatticeError> {
        let n = self.n.ok_or_else(|| LatticeError::Parse("colored shape needs `n`".into()))?;
        let cells = self
            .cells
            .iter()
            .map(|c| {
                c.color
                    .map(|k| (Cell::new(c.x, c.y), k))
                    .ok_or_else(|| LatticeError::Parse(format!("cell ({}, {}) has no color", c.x, c.y)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        ColoredCellSet::new(n, cells)
    }

    pub fn to_colored(&self) -> Result<ColoredPolyomino, LatticeError> {
        self.to_colored_set()?.into_polyomino()
    }

    pub fn is_colored(&self) -> bool {
        self.n.is_some()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, LatticeError> {
        serde_json::from_str(s).map_err(|e| LatticeError::Parse(e.to_string()))
    }
}

/// Renders cells top row first; `glyph` picks the character for each cell.
pub fn render_ascii<F: Fn(Cell) -> char>(cells: &[Cell], glyph: F) -> String {
    if cells.is_empty() {
        return String::new();
    }
    let min_x = cells.iter().map(|c| c.x).min().unwrap();
    let max_x = cells.iter().map(|c| c.x).max().unwrap();
    let min_y = cells.iter().map(|c| c.y).min().unwrap();
    let max_y = cells.iter().map(|c| c.y).max().unwrap();
    let present: std::collections::HashSet<Cell> = cells.iter().copied().collect();
    let mut out = String::new();
    for y in (min_y..=max_y).rev() {
        for x in min_x..=max_x {
            let c = Cell::new(x, y);
            out.push(if present.contains(&c) { glyph(c) } else { '.' });
        }
        out.push('\n');
    }
    out
}

pub(crate) fn render_colored_ascii(cp: &ColoredPolyomino) -> String {
    render_ascii(cp.shape().cells(), |c| color_glyph(cp.color_at(c).unwrap()))
}

pub(crate) fn render_colored_set_ascii(s: &ColoredCellSet) -> String {
    let map: std::collections::HashMap<Cell, u8> = s.cells().iter().copied().collect();
    let cells: Vec<Cell> = s.cells().iter().map(|&(c, _)| c).collect();
    render_ascii(&cells, |c| color_glyph(map[&c]))
}

fn color_glyph(k: u8) -> char {
    char::from_digit(k as u32, 36).unwrap_or('?')
}

/// Parses the ASCII grid format. The last line is row `y = 0`.
///
/// Returns each present cell with its color (`None` for `#`).
pub fn parse_ascii(text: &str) -> Result<Vec<(Cell, Option<u8>)>, LatticeError> {
    let lines: Vec<&str> = text.lines().map(str::trim_end).filter(|l| !l.is_empty()).collect();
    let h = lines.len() as i32;
    let mut out = Vec::new();
    for (row, line) in lines.iter().enumerate() {
        let y = h - 1 - row as i32;
        for (x, ch) in line.chars().enumerate() {
            let c = Cell::new(x as i32, y);
            match ch {
                '.' | ' ' => {}
                '#' => out.push((c, None)),
                d if d.is_ascii_digit() && d != '0' => out.push((c, d.to_digit(10).map(|k| k as u8))),
                other => {
                    return Err(LatticeError::Parse(format!("unexpected character {other:?} at row {row}, column {x}")))
                }
            }
        }
    }
    Ok(out)
}

impl ColoredPolyomino {
    /// Parses a colored ASCII grid with colors `1..=n`.
    pub fn from_ascii(n: u8, text: &str) -> Result<Self, LatticeError> {
        let cells = parse_ascii(text)?
            .into_iter()
            .map(|(c, k)| k.map(|k| (c, k)).ok_or_else(|| LatticeError::Parse(format!("cell {c} has no color"))))
            .collect::<Result<Vec<_>, _>>()?;
        ColoredPolyomino::from_colored_cells(n, cells)
    }

    pub fn to_ascii(&self) -> String {
        render_colored_ascii(self)
    }
}

impl ColoredCellSet {
    pub fn to_ascii(&self) -> String {
        render_colored_set_ascii(self)
    }
}

impl Polyomino {
    /// Parses an ASCII grid; any non-`.` character marks a cell.
    pub fn from_ascii(text: &str) -> Result<Self, LatticeError> {
        Polyomino::from_cells(parse_ascii(text)?.into_iter().map(|(c, _)| c))
    }

    pub fn to_ascii(&self) -> String {
        render_ascii(self.cells(), |_| '#')
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uncolored_json_omits_color() {
        let j = JsonShape::from_polyomino(&Polyomino::l_tromino()).to_json();
        assert_eq!(j, r#"{"cells":[{"x":0,"y":0},{"x":0,"y":1},{"x":1,"y":0}]}"#);
    }

    #[test]
    fn colored_json_round_trip() {
        let cp = ColoredPolyomino::from_ascii(3, "12.\n321\n").unwrap();
        let j = JsonShape::from_colored(&cp).to_json();
        assert_eq!(
            j,
            r#"{"n":3,"cells":[{"x":0,"y":0,"color":3},{"x":0,"y":1,"color":1},{"x":1,"y":0,"color":2},{"x":1,"y":1,"color":2},{"x":2,"y":0,"color":1}]}"#
        );
        let back = JsonShape::from_json(&j).unwrap().to_colored().unwrap();
        assert_eq!(back, cp);
    }

    #[test]
    fn ascii_prints_top_row_first() {
        let cp =
            ColoredPolyomino::from_colored_cells(2, [(Cell::new(0, 0), 1), (Cell::new(1, 0), 2), (Cell::new(0, 1), 2)])
                .unwrap();
        assert_eq!(cp.to_ascii(), "2.\n12\n");
        assert_eq!(Polyomino::t_tetromino().to_ascii(), ".#.\n###\n");
    }

    #[test]
    fn missing_color_is_an_error() {
        let j = r#"{"n":2,"cells":[{"x":0,"y":0}]}"#;
        assert!(JsonShape::from_json(j).unwrap().to_colored().is_err());
        assert!(JsonShape::from_json("{").is_err());
        assert!(parse_ascii("1x\n").is_err());
    }
}
