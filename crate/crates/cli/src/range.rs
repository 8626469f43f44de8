//! Inclusive ranges written `a..b` or as a single value `a`.

use std::ops::RangeInclusive;

use crate::ConfigError;

pub fn parse_range(s: &str) -> Result<RangeInclusive<u64>, ConfigError> {
    let bad = || ConfigError(format!("bad range `{s}` (expected `a..b` or `a`)"));
    let num = |t: &str| t.trim().parse::<u64>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(ConfigError(format!("empty range `{s}`: {lo} > {hi}")));
    }
    Ok(lo..=hi)
}

pub fn format_range(r: &RangeInclusive<u64>) -> String {
    if r.start() == r.end() {
        r.start().to_string()
    } else {
        format!("{}..{}", r.start(), r.end())
    }
}
