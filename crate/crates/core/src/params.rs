use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The data `(s, c, m, δ)` of a star configuration of `s` forms of common
/// degree `δ`, taken in codimension `c`, together with a symbolic power `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawParams", into = "RawParams")]
pub struct StarParams {
    s: usize,
    c: usize,
    m: usize,
    delta: usize,
}

impl StarParams {
    pub fn new(s: usize, c: usize, m: usize, delta: usize) -> Result<Self> {
        if s < 2 {
            return Err(Error::InvalidParams(format!("s = {s} must be at least 2")));
        }
        if c < 1 || c >= s {
            return Err(Error::InvalidParams(format!(
                "c = {c} must satisfy 1 <= c < s = {s}"
            )));
        }
        if m < 1 {
            return Err(Error::InvalidParams("m must be at least 1".into()));
        }
        if delta < 1 {
            return Err(Error::InvalidParams("delta must be at least 1".into()));
        }
        Ok(StarParams { s, c, m, delta })
    }

    /// Shorthand for `new(s, c, m, 1)`.
    pub fn linear(s: usize, c: usize, m: usize) -> Result<Self> {
        Self::new(s, c, m, 1)
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn delta(&self) -> usize {
        self.delta
    }

    /// Same configuration, different symbolic power.
    pub fn with_m(&self, m: usize) -> Result<Self> {
        Self::new(self.s, self.c, m, self.delta)
    }

    /// Smallest admissible normal-form length, `⌈m/c⌉`.
    pub fn min_length(&self) -> usize {
        self.m.div_ceil(self.c)
    }

    /// F-degree `t(s−c)+m` of a generator whose normal form has `t` layers.
    pub fn generator_f_degree(&self, t: usize) -> usize {
        t * (self.s - self.c) + self.m
    }

    pub(crate) fn check_length(&self, t: usize) -> Result<()> {
        let lo = self.min_length();
        if t < lo || t > self.m {
            return Err(Error::InvalidRange {
                what: "normal-form length t",
                value: t as i64,
                lo: lo as i64,
                hi: self.m as i64,
            });
        }
        Ok(())
    }
}

impl fmt::Display for StarParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "s={} c={} m={} delta={}",
            self.s, self.c, self.m, self.delta
        )
    }
}

#[derive(Serialize, Deserialize)]
struct RawParams {
    s: usize,
    c: usize,
    m: usize,
    delta: usize,
}

impl TryFrom<RawParams> for StarParams {
    type Error = Error;

    fn try_from(raw: RawParams) -> Result<Self> {
        StarParams::new(raw.s, raw.c, raw.m, raw.delta)
    }
}

impl From<StarParams> for RawParams {
    fn from(p: StarParams) -> Self {
        RawParams {
            s: p.s,
            c: p.c,
            m: p.m,
            delta: p.delta,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_codimension() {
        assert!(StarParams::linear(3, 3, 1).is_err());
        assert!(StarParams::linear(3, 0, 1).is_err());
        assert!(StarParams::linear(1, 1, 1).is_err());
        assert!(StarParams::new(3, 2, 0, 1).is_err());
        assert!(StarParams::new(3, 2, 1, 0).is_err());
        assert!(StarParams::linear(2, 1, 1).is_ok());
    }

    #[test]
    fn min_length_is_ceiling() {
        let p = StarParams::linear(10, 6, 19).unwrap();
        assert_eq!(p.min_length(), 4);
        let p = StarParams::linear(10, 6, 18).unwrap();
        assert_eq!(p.min_length(), 3);
    }

    #[test]
    fn serde_validates() {
        let err = serde_json::from_str::<StarParams>(r#"{"s":3,"c":3,"m":1,"delta":1}"#);
        assert!(err.is_err());
        let ok: StarParams = serde_json::from_str(r#"{"s":7,"c":3,"m":7,"delta":1}"#).unwrap();
        assert_eq!(ok, StarParams::linear(7, 3, 7).unwrap());
    }
}
