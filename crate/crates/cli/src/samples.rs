//! CSV sample ingestion: rows `k,re[,im]` with a contiguous integer k column.

use nvsinc_core::{Complex64, SampleGrid};
use std::path::Path;

/// Reads a sample grid from CSV. A header row is tolerated and skipped when
/// the first field does not parse as an integer. Rows are sorted by `k` and
/// must form a contiguous range without duplicates.
pub fn read_samples_csv(path: &Path) -> Result<SampleGrid, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("reading {path:?}: {e}"))?;
    let mut entries: Vec<(i64, Complex64)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        let k = match fields[0].parse::<i64>() {
            Ok(k) => k,
            Err(_) if lineno == 0 => continue, // header row
            Err(e) => return Err(format!("line {}: bad k `{}`: {e}", lineno + 1, fields[0])),
        };
        if fields.len() < 2 || fields.len() > 3 {
            return Err(format!("line {}: expected k,re[,im]", lineno + 1));
        }
        let re: f64 = fields[1]
            .parse()
            .map_err(|e| format!("line {}: bad re: {e}", lineno + 1))?;
        let im: f64 = if fields.len() == 3 {
            fields[2]
                .parse()
                .map_err(|e| format!("line {}: bad im: {e}", lineno + 1))?
        } else {
            0.0
        };
        entries.push((k, Complex64::new(re, im)));
    }
    if entries.is_empty() {
        return Err("no samples found".into());
    }
    entries.sort_by_key(|&(k, _)| k);
    let k_lo = entries[0].0;
    for (i, &(k, _)) in entries.iter().enumerate() {
        if k != k_lo + i as i64 {
            return Err(format!(
                "k column must be contiguous: expected {} but found {k}",
                k_lo + i as i64
            ));
        }
    }
    SampleGrid::new(k_lo, entries.into_iter().map(|(_, v)| v).collect())
        .map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_temp(tag: &str, content: &str) -> std::path::PathBuf {
        let mut path = std::env::temp_dir();
        path.push(format!("nvsinc-samples-{}-{tag}.csv", std::process::id()));
        let mut f = std::fs::File::create(&path).unwrap();
        f.write_all(content.as_bytes()).unwrap();
        path
    }

    #[test]
    fn reads_real_rows_with_header() {
        let path = write_temp("header", "k,re\n-1,0.5\n0,1.0\n1,0.25\n");
        let grid = read_samples_csv(&path).unwrap();
        std::fs::remove_file(&path).ok();
        assert_eq!(grid.k_lo(), -1);
        assert_eq!(grid.value(0), Some(Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn rejects_gaps() {
        let path = write_temp("gap", "0,1.0\n2,0.5\n");
        let err = read_samples_csv(&path).unwrap_err();
        std::fs::remove_file(&path).ok();
        assert!(err.contains("contiguous"), "{err}");
    }

    #[test]
    fn reads_complex_rows() {
        let path = write_temp("complex", "5,1.0,-2.0\n6,0.0,3.5\n");
        let grid = read_samples_csv(&path).unwrap();
        std::fs::remove_file(&path).ok();
        assert_eq!(grid.value(6), Some(Complex64::new(0.0, 3.5)));
    }
}
