//! Grid and arrival-time files.
//!
//! Layout: four text lines (magic, axis count, space-separated extents,
//! cell size `h`) followed by one little-endian `f64` per cell in flat order
//! (axis 0 fastest). Velocity files use the magic `EIKGRID 1`, arrival-time
//! files `EIKTIME 1`.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use crate::error::{FormatError, GridError};
use crate::grid::Grid;

pub const GRID_MAGIC: &str = "EIKGRID 1";
pub const TIME_MAGIC: &str = "EIKTIME 1";

/// Header plus per-cell values of either file kind.
#[derive(Debug, Clone, PartialEq)]
pub struct FieldFile {
    pub dims: Vec<usize>,
    pub h: f64,
    pub values: Vec<f64>,
}

impl FieldFile {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

pub fn write_field<W: Write>(
    mut w: W,
    magic: &str,
    dims: &[usize],
    h: f64,
    values: &[f64],
) -> Result<(), FormatError> {
    let expected: usize = dims.iter().product();
    if values.len() != expected {
        return Err(GridError::LengthMismatch {
            expected,
            got: values.len(),
        }
        .into());
    }
    let extents: Vec<String> = dims.iter().map(usize::to_string).collect();
    write!(w, "{magic}\n{}\n{}\n{h}\n", dims.len(), extents.join(" "))?;
    let mut buf = Vec::with_capacity(values.len() * 8);
    for v in values {
        buf.extend_from_slice(&v.to_le_bytes());
    }
    w.write_all(&buf)?;
    w.flush()?;
    Ok(())
}

fn header_line<R: BufRead>(r: &mut R, what: &str) -> Result<String, FormatError> {
    let mut line = String::new();
    if r.read_line(&mut line)? == 0 {
        return Err(FormatError::Header(format!("missing {what} line")));
    }
    Ok(line.trim_end_matches(['\n', '\r']).to_string())
}

pub fn read_field<R: Read>(r: R, magic: &str) -> Result<FieldFile, FormatError> {
    let mut r = BufReader::new(r);
    let found = header_line(&mut r, "magic")?;
    if found != magic {
        return Err(FormatError::BadMagic {
            expected: magic.to_string(),
            found,
        });
    }
    let n: usize = header_line(&mut r, "axis count")?
        .trim()
        .parse()
        .map_err(|e| FormatError::Header(format!("axis count: {e}")))?;
    let dims = header_line(&mut r, "extents")?
        .split_whitespace()
        .map(|t| t.parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| FormatError::Header(format!("extents: {e}")))?;
    if dims.len() != n {
        return Err(FormatError::Header(format!(
            "axis count {n} but {} extents",
            dims.len()
        )));
    }
    let h: f64 = header_line(&mut r, "cell size")?
        .trim()
        .parse()
        .map_err(|e| FormatError::Header(format!("cell size: {e}")))?;
    let len = dims
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .and_then(|c| c.checked_mul(8).map(|_| c))
        .ok_or(GridError::TooLarge)?;
    let mut payload = Vec::new();
    r.read_to_end(&mut payload)?;
    if payload.len() != len * 8 {
        return Err(FormatError::Payload {
            expected: len * 8,
            got: payload.len(),
        });
    }
    let values = payload
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().expect("chunk of 8")))
        .collect();
    Ok(FieldFile { dims, h, values })
}

pub fn write_grid<W: Write>(w: W, grid: &Grid) -> Result<(), FormatError> {
    write_field(w, GRID_MAGIC, grid.dims(), grid.h(), grid.velocity())
}

pub fn read_grid<R: Read>(r: R) -> Result<Grid, FormatError> {
    let f = read_field(r, GRID_MAGIC)?;
    Ok(Grid::with_velocity(&f.dims, f.h, f.values)?)
}

/// Writes the grid's current arrival times.
pub fn write_time<W: Write>(w: W, grid: &Grid) -> Result<(), FormatError> {
    write_field(w, TIME_MAGIC, grid.dims(), grid.h(), grid.time())
}

pub fn read_time<R: Read>(r: R) -> Result<FieldFile, FormatError> {
    read_field(r, TIME_MAGIC)
}

pub fn save_grid(path: impl AsRef<Path>, grid: &Grid) -> Result<(), FormatError> {
    write_grid(BufWriter::new(File::create(path)?), grid)
}

pub fn load_grid(path: impl AsRef<Path>) -> Result<Grid, FormatError> {
    read_grid(File::open(path)?)
}

pub fn save_time(path: impl AsRef<Path>, grid: &Grid) -> Result<(), FormatError> {
    write_time(BufWriter::new(File::create(path)?), grid)
}

pub fn load_time(path: impl AsRef<Path>) -> Result<FieldFile, FormatError> {
    read_time(File::open(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_bytes_of_small_file() {
        let g = Grid::with_velocity(&[2, 1], 0.5, vec![1.0, 0.0]).unwrap();
        let mut buf = Vec::new();
        write_grid(&mut buf, &g).unwrap();
        let mut expected = b"EIKGRID 1\n2\n2 1\n0.5\n".to_vec();
        expected.extend_from_slice(&1.0f64.to_le_bytes());
        expected.extend_from_slice(&0.0f64.to_le_bytes());
        assert_eq!(buf, expected);
    }

    #[test]
    fn grid_round_trip() {
        let v: Vec<f64> = (0..24).map(|i| i as f64 * 0.1).collect();
        let g = Grid::with_velocity(&[2, 3, 4], 1.0 / 3.0, v).unwrap();
        let mut buf = Vec::new();
        write_grid(&mut buf, &g).unwrap();
        assert_eq!(read_grid(&buf[..]).unwrap(), g);
    }

    #[test]
    fn time_round_trip_keeps_infinity() {
        let mut g = Grid::new(&[3], 1.0).unwrap();
        g.time_mut().copy_from_slice(&[0.0, 1.5, f64::INFINITY]);
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("t.eik");
        save_time(&p, &g).unwrap();
        let f = load_time(&p).unwrap();
        assert_eq!(f.values, g.time());
        assert_eq!(f.dims, vec![3]);
    }

    #[test]
    fn malformed_inputs() {
        let g = Grid::new(&[2, 2], 1.0).unwrap();
        let mut buf = Vec::new();
        write_grid(&mut buf, &g).unwrap();
        assert!(matches!(
            read_time(&buf[..]),
            Err(FormatError::BadMagic { .. })
        ));
        assert!(matches!(
            read_grid(&buf[..buf.len() - 3]),
            Err(FormatError::Payload { .. })
        ));
        assert!(matches!(
            read_grid(&b"EIKGRID 1\n2\n2\n1\n"[..]),
            Err(FormatError::Header(_))
        ));
        assert!(matches!(
            read_grid(&b"EIKGRID 1\n1\nx\n1\n"[..]),
            Err(FormatError::Header(_))
        ));
        assert!(matches!(read_grid(&b""[..]), Err(FormatError::Header(_))));
        let mut bad = b"EIKGRID 1\n1\n1\n1\n".to_vec();
        bad.extend_from_slice(&(-1.0f64).to_le_bytes());
        assert!(matches!(read_grid(&bad[..]), Err(FormatError::Grid(_))));
    }
}
