//! JSON matrix interchange format.
//!
//! A matrix file is `{"n": N, "dims": [da, db], "entries": [[re, im], ...]}`
//! with `entries` row-major and `dims` optional.  The canonical writer
//! serializes every number with 17 significant digits, so parsing a
//! canonical file and re-serializing it is byte-stable.

use entvol::bloch::DensityMatrix;
use entvol::linalg::CMatrix;
use entvol::{CMatrix64, C64};
use serde::Deserialize;

use crate::output::fmt_f64;

#[derive(Debug, Clone, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    #[serde(default)]
    pub dims: Option<[usize; 2]>,
    pub entries: Vec<[f64; 2]>,
}

impl MatrixFile {
    pub fn parse(text: &str) -> Result<Self, String> {
        let file: MatrixFile =
            serde_json::from_str(text).map_err(|e| format!("invalid matrix JSON: {e}"))?;
        if file.entries.len() != file.n * file.n {
            return Err(format!(
                "matrix file declares n = {} but carries {} entries",
                file.n,
                file.entries.len()
            ));
        }
        if let Some([da, db]) = file.dims {
            if da * db != file.n {
                return Err(format!(
                    "dims {da}x{db} do not match matrix dimension {}",
                    file.n
                ));
            }
        }
        Ok(file)
    }

    pub fn from_matrix(m: &CMatrix64, dims: Option<(usize, usize)>) -> Self {
        let n = m.dim();
        let entries = (0..n * n)
            .map(|k| {
                let z = m.data()[k];
                [z.re, z.im]
            })
            .collect();
        Self {
            n,
            dims: dims.map(|(a, b)| [a, b]),
            entries,
        }
    }

    pub fn to_matrix(&self) -> CMatrix64 {
        CMatrix::from_fn(self.n, |r, c| {
            let [re, im] = self.entries[r * self.n + c];
            C64::new(re, im)
        })
    }

    /// Interprets the file as a density matrix, validating Hermiticity and
    /// unit trace.  Explicit `da`/`db` arguments override the stored dims.
    pub fn to_density(
        &self,
        da: Option<usize>,
        db: Option<usize>,
    ) -> Result<DensityMatrix<f64>, String> {
        let bipartition = match (da, db, self.dims) {
            (Some(a), Some(b), _) => Some((a, b)),
            (None, None, Some([a, b])) => Some((a, b)),
            (None, None, None) => None,
            _ => return Err("give both --da and --db or neither".into()),
        };
        DensityMatrix::new(self.to_matrix(), bipartition).map_err(|e| e.to_string())
    }

    /// Canonical serialization: fixed key order, 17 significant digits.
    pub fn to_canonical_json(&self) -> String {
        let mut out = String::with_capacity(64 * self.entries.len());
        out.push_str("{\"n\":");
        out.push_str(&self.n.to_string());
        if let Some([da, db]) = self.dims {
            out.push_str(",\"dims\":[");
            out.push_str(&da.to_string());
            out.push(',');
            out.push_str(&db.to_string());
            out.push(']');
        }
        out.push_str(",\"entries\":[");
        for (k, [re, im]) in self.entries.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push('[');
            out.push_str(&fmt_f64(*re));
            out.push(',');
            out.push_str(&fmt_f64(*im));
            out.push(']');
        }
        out.push_str("]}\n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_serialize_is_byte_stable() {
        let m = entvol::bloch::bell_density::<f64>(3).unwrap();
        let file = MatrixFile::from_matrix(m.matrix(), Some((2, 2)));
        let text = file.to_canonical_json();
        let reparsed = MatrixFile::parse(&text).unwrap();
        assert_eq!(reparsed.to_canonical_json(), text);
        assert_eq!(reparsed.to_matrix().max_abs_diff(m.matrix()), 0.0);
    }

    #[test]
    fn rejects_inconsistent_files() {
        assert!(MatrixFile::parse("{\"n\":2,\"entries\":[[1,0]]}").is_err());
        assert!(MatrixFile::parse(
            "{\"n\":2,\"dims\":[2,2],\"entries\":[[1,0],[0,0],[0,0],[0,0]]}"
        )
        .is_err());
        assert!(MatrixFile::parse("not json").is_err());
    }
}
