//! One census row and its CSV / JSON encodings.

use std::io::Write;

use num_bigint::{BigInt, BigUint};
use serde::{Deserialize, Serialize};

use crate::BigCount;

pub const CSV_HEADER: &str =
    "n,ell,p_n,p_ell_n,c_ell_n,z_lower,z_exact,z_star_exact,z_star_closed,main_term_num,main_term_den";

/// Counts for one `(n, ℓ)`.
///
/// `main_term_num / main_term_den` is `α_ℓ σ_ℓ(n + δ_ℓ) p(n)` in lowest
/// terms; it is absent for `ℓ < 5`, where `δ_ℓ` is not an integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub n: usize,
    pub ell: usize,
    #[serde(with = "dec")]
    pub p_n: BigCount,
    #[serde(with = "dec")]
    pub p_ell_n: BigCount,
    #[serde(with = "dec")]
    pub c_ell_n: BigCount,
    #[serde(with = "dec")]
    pub z_lower: BigCount,
    #[serde(with = "opt_dec")]
    pub z_exact: Option<BigCount>,
    #[serde(with = "opt_dec")]
    pub z_star_exact: Option<BigCount>,
    #[serde(with = "opt_dec")]
    pub z_star_closed: Option<BigCount>,
    #[serde(with = "opt_dec")]
    pub main_term_num: Option<BigInt>,
    #[serde(with = "opt_dec")]
    pub main_term_den: Option<BigUint>,
}

impl CensusRecord {
    /// Checks the record-level invariants; returns a description of the
    /// first violation.
    pub fn check(&self) -> Result<(), String> {
        if let Some(z) = &self.z_exact {
            if z < &self.z_lower {
                return Err(format!(
                    "n={} ell={}: z_exact {} < z_lower {}",
                    self.n, self.ell, z, self.z_lower
                ));
            }
        }
        if let (Some(star), Some(closed)) = (&self.z_star_exact, &self.z_star_closed) {
            if star != closed {
                return Err(format!(
                    "n={} ell={}: z_star_exact {} != closed form {}",
                    self.n, self.ell, star, closed
                ));
            }
        }
        Ok(())
    }

    pub fn to_csv_line(&self) -> String {
        fn opt<T: ToString>(v: &Option<T>) -> String {
            v.as_ref().map(T::to_string).unwrap_or_default()
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.n,
            self.ell,
            self.p_n,
            self.p_ell_n,
            self.c_ell_n,
            self.z_lower,
            opt(&self.z_exact),
            opt(&self.z_star_exact),
            opt(&self.z_star_closed),
            opt(&self.main_term_num),
            opt(&self.main_term_den),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

/// Writes records as CSV (header plus one LF-terminated line each) or as a
/// JSON array with one object per line.
pub fn write_records<W: Write>(
    mut out: W,
    records: &[CensusRecord],
    format: Format,
) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                writeln!(out, "{}", r.to_csv_line())?;
            }
        }
        Format::Json => {
            if records.is_empty() {
                writeln!(out, "[]")?;
            } else {
                writeln!(out, "[")?;
                for (i, r) in records.iter().enumerate() {
                    let sep = if i + 1 == records.len() { "" } else { "," };
                    writeln!(out, "{}{sep}", serde_json::to_string(r)?)?;
                }
                writeln!(out, "]")?;
            }
        }
    }
    out.flush()
}

/// Big integers as decimal strings.
mod dec {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};
    use std::fmt::Display;
    use std::str::FromStr;

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

mod opt_dec {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};
    use std::fmt::Display;
    use std::str::FromStr;

    pub fn serialize<T: Display, S: Serializer>(v: &Option<T>, s: S) -> Result<S::Ok, S::Error> {
        match v {
            Some(v) => s.collect_str(v),
            None => s.serialize_none(),
        }
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<Option<T>, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        Option::<String>::deserialize(d)?
            .map(|s| s.parse().map_err(D::Error::custom))
            .transpose()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> CensusRecord {
        CensusRecord {
            n: 6,
            ell: 5,
            p_n: 11u32.into(),
            p_ell_n: 10u32.into(),
            c_ell_n: 6u32.into(),
            z_lower: 6u32.into(),
            z_exact: Some(20u32.into()),
            z_star_exact: None,
            z_star_closed: None,
            main_term_num: Some(66.into()),
            main_term_den: Some(1u32.into()),
        }
    }

    #[test]
    fn csv_line_has_empty_optionals() {
        assert_eq!(sample().to_csv_line(), "6,5,11,10,6,6,20,,,66,1");
        assert_eq!(CSV_HEADER.split(',').count(), 11);
    }

    #[test]
    fn json_uses_decimal_strings() {
        let v = serde_json::to_value(sample()).unwrap();
        assert_eq!(v["p_n"], "11");
        assert_eq!(v["z_star_exact"], serde_json::Value::Null);
        assert_eq!(v["n"], 6);
        let back: CensusRecord = serde_json::from_value(v).unwrap();
        assert_eq!(back, sample());
    }

    #[test]
    fn empty_outputs() {
        let mut buf = Vec::new();
        write_records(&mut buf, &[], Format::Csv).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), format!("{CSV_HEADER}\n"));
        let mut buf = Vec::new();
        write_records(&mut buf, &[], Format::Json).unwrap();
        assert_eq!(buf, b"[]\n");
    }

    #[test]
    fn invariant_check() {
        let mut r = sample();
        assert!(r.check().is_ok());
        r.z_exact = Some(1u32.into());
        assert!(r.check().is_err());
    }
}
