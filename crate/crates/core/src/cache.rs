//! Persistent cache of rational-prime factorizations.
//!
//! Format, one prime per line after a header naming the polynomial:
//!
//! ```text
//! poly: [1,0,1]
//! 2: 2,1,[1,1]
//! 5: 1,1,[2,1]; 1,1,[3,1]
//! ```
//!
//! Each entry is `e,f,[g coefficients low degree first]`.

use std::collections::BTreeMap;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::ideal::PrimeIdeal;

pub struct FactorCache {
    path: PathBuf,
    entries: BTreeMap<u64, Vec<PrimeIdeal>>,
}

fn header(poly: &[i64]) -> String {
    let coeffs: Vec<String> = poly.iter().map(|c| c.to_string()).collect();
    format!("poly: [{}]", coeffs.join(","))
}

fn bad(line: &str) -> Error {
    Error::Io(format!("malformed cache line: {line}"))
}

pub fn format_line(p: u64, primes: &[PrimeIdeal]) -> String {
    let parts: Vec<String> = primes
        .iter()
        .map(|q| {
            let g: Vec<String> = q.local_factor.iter().map(|c| c.to_string()).collect();
            format!("{},{},[{}]", q.e, q.f, g.join(","))
        })
        .collect();
    format!("{p}: {}", parts.join("; "))
}

pub fn parse_line(line: &str, field_degree: u32) -> Result<(u64, Vec<PrimeIdeal>)> {
    let (p, rest) = line.split_once(':').ok_or_else(|| bad(line))?;
    let p: u64 = p.trim().parse().map_err(|_| bad(line))?;
    let mut primes = Vec::new();
    for part in rest.split(';') {
        let part = part.trim();
        let (ef, g) = part.split_once('[').ok_or_else(|| bad(line))?;
        let mut ef = ef.trim().trim_end_matches(',').split(',');
        let e: u32 = ef.next().and_then(|x| x.trim().parse().ok()).ok_or_else(|| bad(line))?;
        let f: u32 = ef.next().and_then(|x| x.trim().parse().ok()).ok_or_else(|| bad(line))?;
        let g = g.trim_end_matches(']');
        let local_factor: Vec<u64> =
            g.split(',').map(|x| x.trim().parse().map_err(|_| bad(line))).collect::<Result<_>>()?;
        if local_factor.len() != f as usize + 1 {
            return Err(bad(line));
        }
        primes.push(PrimeIdeal { p, f, e, local_factor, field_degree });
    }
    Ok((p, primes))
}

impl FactorCache {
    /// Open (or create) the cache for `poly`. A header for a different
    /// polynomial is an error.
    pub fn open(path: PathBuf, poly: &[i64]) -> Result<FactorCache> {
        let want = header(poly);
        let degree = (poly.len() - 1) as u32;
        let mut entries = BTreeMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(&path)?);
            let mut lines = reader.lines();
            match lines.next() {
                Some(h) => {
                    let h = h?;
                    if h.trim() != want {
                        return Err(Error::Io(format!(
                            "cache {} belongs to '{}', not '{}'",
                            path.display(),
                            h.trim(),
                            want
                        )));
                    }
                }
                None => {
                    let mut f = OpenOptions::new().append(true).open(&path)?;
                    writeln!(f, "{want}")?;
                }
            }
            for line in lines {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let (p, primes) = parse_line(&line, degree)?;
                entries.insert(p, primes);
            }
        } else {
            let mut f = File::create(&path)?;
            writeln!(f, "{want}")?;
        }
        Ok(FactorCache { path, entries })
    }

    pub fn entries(&self) -> &BTreeMap<u64, Vec<PrimeIdeal>> {
        &self.entries
    }

    pub fn append(&mut self, p: u64, primes: &[PrimeIdeal]) -> Result<()> {
        if self.entries.contains_key(&p) {
            return Ok(());
        }
        let mut f = OpenOptions::new().append(true).open(&self.path)?;
        writeln!(f, "{}", format_line(p, primes))?;
        self.entries.insert(p, primes.to_vec());
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn line_format() {
        let (p, primes) = parse_line("5: 1,1,[2,1]; 1,1,[3,1]", 2).unwrap();
        assert_eq!(p, 5);
        assert_eq!(primes.len(), 2);
        assert_eq!(primes[1].local_factor, vec![3, 1]);
        assert_eq!(format_line(p, &primes), "5: 1,1,[2,1]; 1,1,[3,1]");
        assert!(parse_line("5 1,1,[2,1]", 2).is_err());
        assert!(parse_line("5: 1,2,[2,1]", 2).is_err());
    }
}
