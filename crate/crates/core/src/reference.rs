//! Reference statistics and tolerance bands for multi-run comparison.
//!
//! Four columns ship built in: the measured AS graph (April 2002
//! traceroute-derived, N = 11122) and the PFP, IG and BA models at the same
//! size. Each comes with default tolerance bands for the fields that define
//! an acceptable reproduction.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::generators::parse_kv;
use crate::metrics::MetricsReport;

/// Acceptance band for one field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Band {
    /// `|mean - reference| <= tol`
    Abs(f64),
    /// `lo <= mean <= hi`, independent of the reference value.
    Range(f64, f64),
}

impl Band {
    pub fn admits(&self, mean: f64, reference: Option<f64>) -> bool {
        match *self {
            Band::Abs(tol) => reference.is_some_and(|r| (mean - r).abs() <= tol),
            Band::Range(lo, hi) => lo <= mean && mean <= hi,
        }
    }
}

impl fmt::Display for Band {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Band::Abs(t) => write!(f, "±{t}"),
            Band::Range(lo, hi) => write!(f, "[{lo}, {hi}]"),
        }
    }
}

impl FromStr for Band {
    type Err = Error;

    /// `0.08` for an absolute band, `2000..3600` for a range.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("bad tolerance `{s}`"));
        if let Some((lo, hi)) = s.split_once("..") {
            let lo: f64 = lo.trim().parse().map_err(|_| bad())?;
            let hi: f64 = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            Ok(Band::Range(lo, hi))
        } else {
            let t: f64 = s.trim().parse().map_err(|_| bad())?;
            if t < 0.0 {
                return Err(bad());
            }
            Ok(Band::Abs(t))
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Reference {
    pub name: String,
    pub values: Vec<(&'static str, Option<f64>)>,
    pub bands: Vec<(String, Band)>,
}

impl Reference {
    pub fn value(&self, key: &str) -> Option<f64> {
        self.values
            .iter()
            .find(|(k, _)| *k == key)
            .and_then(|(_, v)| *v)
    }

    pub fn band(&self, key: &str) -> Option<Band> {
        self.bands.iter().find(|(k, _)| k == key).map(|(_, b)| *b)
    }

    /// Custom reference from a report; no bands until tolerances are given.
    pub fn from_report(name: impl Into<String>, report: &MetricsReport) -> Self {
        Reference {
            name: name.into(),
            values: report.fields(),
            bands: Vec::new(),
        }
    }

    /// Adds or replaces bands from a `key = band` tolerance file.
    pub fn apply_tolerances(&mut self, text: &str) -> Result<()> {
        for (key, value) in parse_kv(text)? {
            if !MetricsReport::KEYS.contains(&key.as_str()) {
                return Err(Error::Config(format!("unknown report key `{key}`")));
            }
            let band: Band = value.parse()?;
            match self.bands.iter_mut().find(|(k, _)| *k == key) {
                Some(slot) => slot.1 = band,
                None => self.bands.push((key, band)),
            }
        }
        Ok(())
    }

    /// Built-in column by name: `as`, `pfp`, `ig` or `ba`.
    // 3.14 below is a path length, not pi.
    #[allow(clippy::approx_constant)]
    pub fn builtin(name: &str) -> Option<Self> {
        let (values, bands): ([f64; 17], Vec<(&str, Band)>) = match name {
            "as" => (
                [
                    11122.0, 30054.0, 5.4, 2.22, 0.27, 2839.0, 0.26, 0.38, 0.14, 3.13, 12.7,
                    7482.0, 277.0, 9648.0, 660.0, 4.13, 3237.0,
                ],
                vec![
                    ("links", Band::Abs(450.0)),
                    ("gamma", Band::Abs(0.08)),
                    ("phi_1pct", Band::Abs(0.05)),
                    ("k_max", Band::Abs(800.0)),
                    ("l_star", Band::Abs(0.20)),
                    ("mean_kt", Band::Abs(4.0)),
                    ("mean_kq", Band::Abs(80.0)),
                    ("mean_cb", Band::Abs(0.25)),
                ],
            ),
            "pfp" => (
                [
                    11122.0, 30151.0, 5.4, 2.22, 0.30, 2785.0, 0.28, 0.36, 0.12, 3.14, 12.0,
                    8611.0, 247.0, 9431.0, 482.0, 4.14, 3419.0,
                ],
                vec![
                    ("links", Band::Range(29700.0, 30600.0)),
                    ("gamma", Band::Abs(0.08)),
                    ("k_max", Band::Range(2000.0, 3600.0)),
                    ("phi_1pct", Band::Abs(0.05)),
                    ("l_star", Band::Abs(0.20)),
                    ("mean_kt", Band::Abs(4.0)),
                    ("mean_kq", Band::Abs(80.0)),
                    ("mean_cb", Band::Abs(0.25)),
                ],
            ),
            "ig" => (
                [
                    11122.0, 33349.0, 6.0, 2.22, 0.32, 700.0, 0.26, 0.34, 0.11, 3.6, 10.4, 4123.0,
                    105.4, 8780.0, 103.0, 4.6, 1002.0,
                ],
                vec![
                    ("links", Band::Range(33250.0, 33450.0)),
                    ("gamma", Band::Abs(0.10)),
                    ("k_max", Band::Range(300.0, 1400.0)),
                ],
            ),
            "ba" => (
                [
                    11122.0, 33349.0, 6.0, 3.0, 0.045, 292.0, 0.0, 0.0, 0.40, 4.3, 0.1, 64.0, 1.3,
                    527.0, 20.0, 5.3, 1064.0,
                ],
                vec![
                    ("gamma", Band::Abs(0.15)),
                    ("phi_1pct", Band::Abs(0.02)),
                    ("k_max", Band::Range(150.0, 600.0)),
                    ("p_k1", Band::Abs(0.0)),
                    ("p_k2", Band::Abs(0.0)),
                    ("p_k3", Band::Abs(0.05)),
                ],
            ),
            _ => return None,
        };
        Some(Reference {
            name: name.to_string(),
            values: MetricsReport::KEYS
                .iter()
                .copied()
                .zip(values.into_iter().map(Some))
                .collect(),
            bands: bands.into_iter().map(|(k, b)| (k.to_string(), b)).collect(),
        })
    }
}

/// Field-wise mean over reports. Fields missing from every report are `None`.
pub fn average(reports: &[MetricsReport]) -> Vec<(&'static str, Option<f64>)> {
    MetricsReport::KEYS
        .iter()
        .enumerate()
        .map(|(i, &key)| {
            let vals: Vec<f64> = reports.iter().filter_map(|r| r.fields()[i].1).collect();
            let mean = (!vals.is_empty()).then(|| vals.iter().sum::<f64>() / vals.len() as f64);
            (key, mean)
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub key: &'static str,
    pub mean: Option<f64>,
    pub reference: Option<f64>,
    pub deviation: Option<f64>,
    pub band: Option<Band>,
    /// `None` when the field carries no band.
    pub pass: Option<bool>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub reference: String,
    pub runs: usize,
    pub rows: Vec<ComparisonRow>,
}

impl Comparison {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass != Some(false))
    }

    pub fn failures(&self) -> Vec<&'static str> {
        self.rows
            .iter()
            .filter(|r| r.pass == Some(false))
            .map(|r| r.key)
            .collect()
    }
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |x| format!("{x:.4}"));
        writeln!(
            f,
            "reference: {} ({} report(s) averaged)",
            self.reference, self.runs
        )?;
        writeln!(
            f,
            "{:<12} {:>14} {:>14} {:>14} {:>20}  status",
            "metric", "mean", "reference", "deviation", "band"
        )?;
        for r in &self.rows {
            let band = r.band.map_or_else(|| "-".to_string(), |b| b.to_string());
            let status = match r.pass {
                Some(true) => "pass",
                Some(false) => "FAIL",
                None => "",
            };
            writeln!(
                f,
                "{:<12} {:>14} {:>14} {:>14} {:>20}  {status}",
                r.key,
                num(r.mean),
                num(r.reference),
                num(r.deviation),
                band
            )?;
        }
        write!(f, "{}", if self.passed() { "PASS" } else { "FAIL" })
    }
}

/// Averages `reports` and checks every banded field against `reference`.
pub fn compare(reports: &[MetricsReport], reference: &Reference) -> Result<Comparison> {
    if reports.is_empty() {
        return Err(Error::InvalidParameter("no reports to compare".into()));
    }
    let rows = average(reports)
        .into_iter()
        .map(|(key, mean)| {
            let refv = reference.value(key);
            let band = reference.band(key);
            let deviation = mean.zip(refv).map(|(m, r)| m - r);
            let pass = band.map(|b| mean.is_some_and(|m| b.admits(m, refv)));
            ComparisonRow {
                key,
                mean,
                reference: refv,
                deviation,
                band,
                pass,
            }
        })
        .collect();
    Ok(Comparison {
        reference: reference.name.clone(),
        runs: reports.len(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report_like(name: &str) -> MetricsReport {
        let r = Reference::builtin(name).unwrap();
        let v = |k| r.value(k).unwrap();
        MetricsReport {
            n: v("n") as usize,
            links: v("links") as usize,
            mean_degree: v("mean_degree"),
            gamma: Some(v("gamma")),
            phi_1pct: v("phi_1pct"),
            k_max: v("k_max") as usize,
            p_k1: v("p_k1"),
            p_k2: v("p_k2"),
            p_k3: v("p_k3"),
            l_star: v("l_star"),
            mean_kt: v("mean_kt"),
            max_kt: v("max_kt") as u64,
            mean_kq: v("mean_kq"),
            max_kq: v("max_kq") as u64,
            mean_knn: v("mean_knn"),
            mean_cb: v("mean_cb"),
            max_cb: v("max_cb"),
        }
    }

    #[test]
    fn builtins_exist() {
        for name in ["as", "pfp", "ig", "ba"] {
            let r = Reference::builtin(name).unwrap();
            assert_eq!(r.values.len(), 17);
            assert_eq!(r.value("n"), Some(11122.0));
        }
        assert!(Reference::builtin("glp").is_none());
    }

    #[test]
    fn ba_fails_against_as_on_rich_club() {
        let cmp = compare(&[report_like("ba")], &Reference::builtin("as").unwrap()).unwrap();
        assert!(!cmp.passed());
        assert!(cmp.failures().contains(&"phi_1pct"));
    }

    #[test]
    fn column_passes_its_own_bands() {
        for name in ["as", "pfp", "ba"] {
            let cmp = compare(&[report_like(name)], &Reference::builtin(name).unwrap()).unwrap();
            assert!(cmp.passed(), "{name}: {cmp}");
        }
    }

    #[test]
    fn self_reference_has_zero_deviation() {
        let r = report_like("pfp");
        let mut reference = Reference::from_report("self", &r);
        reference
            .apply_tolerances("gamma = 0\nk_max = 0..5000\n")
            .unwrap();
        let cmp = compare(&[r.clone(), r], &reference).unwrap();
        assert!(cmp.rows.iter().all(|row| row.deviation == Some(0.0)));
        assert!(cmp.passed());
    }

    #[test]
    fn averaging_is_fieldwise() {
        let mut a = report_like("ig");
        let mut b = a.clone();
        a.l_star = 3.0;
        b.l_star = 4.0;
        b.gamma = None;
        let avg = average(&[a, b]);
        assert_eq!(avg.iter().find(|f| f.0 == "l_star").unwrap().1, Some(3.5));
        assert_eq!(avg.iter().find(|f| f.0 == "gamma").unwrap().1, Some(2.22));
    }

    #[test]
    fn band_parsing() {
        assert_eq!("0.08".parse::<Band>().unwrap(), Band::Abs(0.08));
        assert_eq!(
            "2000..3600".parse::<Band>().unwrap(),
            Band::Range(2000.0, 3600.0)
        );
        assert!("5..1".parse::<Band>().is_err());
        assert!("-1".parse::<Band>().is_err());
        let mut r = Reference::builtin("pfp").unwrap();
        assert!(r.apply_tolerances("bogus = 1").is_err());
        r.apply_tolerances("gamma = 0.5").unwrap();
        assert_eq!(r.band("gamma"), Some(Band::Abs(0.5)));
    }

    #[test]
    fn empty_input_rejected() {
        assert!(compare(&[], &Reference::builtin("pfp").unwrap()).is_err());
    }
}
