//! Basis multiplication tables for export.

use serde::Serialize;

use crate::cayley_dickson::{CdElement, MAX_LEVEL};
use crate::clifford::{blade_label, blade_sign, MAX_GENERATORS};
use crate::conformal::SCHEMA_VERSION;
use crate::error::{Error, Result};
use crate::octonion::{unit_label, Octonion};

/// Row `i`, column `j` holds the signed basis element `b_i b_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicationTable {
    pub schema: u32,
    pub algebra: String,
    pub n: usize,
    pub basis: Vec<String>,
    pub table: Vec<Vec<String>>,
}

impl MultiplicationTable {
    /// The 7×7 table of the imaginary units `e1..e7`.
    pub fn octonion() -> Self {
        let basis = (1..8).map(|k| unit_label(1, k)).collect();
        let table = (1..8)
            .map(|i| {
                (1..8)
                    .map(|j| {
                        let (s, k) = Octonion::basis_product(i, j);
                        unit_label(s, k)
                    })
                    .collect()
            })
            .collect();
        Self { schema: SCHEMA_VERSION, algebra: "octonion".into(), n: 7, basis, table }
    }

    /// All `2^n` blades of `Cl_n`, in bitmask order.
    pub fn clifford(n: usize) -> Result<Self> {
        if n > MAX_GENERATORS {
            return Err(Error::InvalidInput(format!("n = {n} exceeds maximum {MAX_GENERATORS}")));
        }
        let dim = 1usize << n;
        let basis = (0..dim).map(blade_label).collect();
        let table = (0..dim)
            .map(|a| {
                (0..dim)
                    .map(|b| {
                        let label = blade_label(a ^ b);
                        if blade_sign(a, b) < 0.0 {
                            format!("-{label}")
                        } else {
                            label
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(Self { schema: SCHEMA_VERSION, algebra: "clifford".into(), n, basis, table })
    }

    /// All `2^level` units of the doubling algebra, by coefficient index.
    pub fn cayley_dickson(level: usize) -> Result<Self> {
        if level > MAX_LEVEL as usize {
            return Err(Error::InvalidInput(format!("level {level} exceeds maximum {MAX_LEVEL}")));
        }
        let level = level as u32;
        let dim = 1usize << level;
        let basis = (0..dim).map(|k| unit_label(1, k)).collect();
        let mut table = Vec::with_capacity(dim);
        for i in 0..dim {
            let ei = CdElement::unit(level, i)?;
            let mut row = Vec::with_capacity(dim);
            for j in 0..dim {
                let p = ei.mul(&CdElement::unit(level, j)?)?;
                let (k, c) = p
                    .coeffs()
                    .iter()
                    .enumerate()
                    .find(|(_, c)| **c != 0.0)
                    .expect("product of units is a signed unit");
                row.push(unit_label(if *c < 0.0 { -1 } else { 1 }, k));
            }
            table.push(row);
        }
        Ok(Self { schema: SCHEMA_VERSION, algebra: "cayley-dickson".into(), n: level as usize, basis, table })
    }

    /// Aligned plain-text grid.
    pub fn to_text(&self) -> String {
        let width = self
            .table
            .iter()
            .flatten()
            .chain(&self.basis)
            .map(String::len)
            .max()
            .unwrap_or(1);
        let mut out = format!("{:>width$} |", "");
        for b in &self.basis {
            out.push_str(&format!(" {b:>width$}"));
        }
        out.push('\n');
        out.push_str(&"-".repeat((width + 1) * (self.basis.len() + 1) + 1));
        out.push('\n');
        for (b, row) in self.basis.iter().zip(&self.table) {
            out.push_str(&format!("{b:>width$} |"));
            for cell in row {
                out.push_str(&format!(" {cell:>width$}"));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::Io(e.to_string());
        let mut header = vec![String::new()];
        header.extend(self.basis.iter().cloned());
        w.write_record(&header).map_err(io)?;
        for (b, row) in self.basis.iter().zip(&self.table) {
            let mut r = vec![b.clone()];
            r.extend(row.iter().cloned());
            w.write_record(&r).map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn octonion_table_shape_and_cells() {
        let t = MultiplicationTable::octonion();
        assert_eq!(t.table.len(), 7);
        assert!(t.table.iter().all(|r| r.len() == 7));
        assert_eq!(t.table[0][1], "e4");
        assert_eq!(t.table[6][5], "e1");
        assert!((0..7).all(|i| t.table[i][i] == "-1"));
    }

    #[test]
    fn clifford_tables() {
        let t0 = MultiplicationTable::clifford(0).unwrap();
        assert_eq!(t0.table, vec![vec!["1".to_string()]]);
        let t1 = MultiplicationTable::clifford(1).unwrap();
        assert_eq!(t1.table, vec![vec!["1", "e1"], vec!["e1", "-1"]]);
        let t2 = MultiplicationTable::clifford(2).unwrap();
        assert_eq!(t2.table[1][2], "e1e2");
        assert_eq!(t2.table[2][1], "-e1e2");
        assert!(MultiplicationTable::clifford(13).is_err());
    }

    #[test]
    fn cayley_dickson_complex_table() {
        let t = MultiplicationTable::cayley_dickson(1).unwrap();
        assert_eq!(t.table, vec![vec!["1", "e1"], vec!["e1", "-1"]]);
        assert!(MultiplicationTable::cayley_dickson(7).is_err());
    }

    #[test]
    fn csv_and_text_render() {
        let t = MultiplicationTable::octonion();
        let csv = t.to_csv().unwrap();
        assert_eq!(csv.lines().count(), 8);
        assert!(csv.lines().nth(1).unwrap().starts_with("e1,-1,e4,"));
        assert_eq!(t.to_text().lines().count(), 9);
    }
}
