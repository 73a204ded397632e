//! Common result type returned by every capacity solver.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Theta,
    Sc,
    Bie,
    Fd,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::Theta => "theta",
            Method::Sc => "sc",
            Method::Bie => "bie",
            Method::Fd => "fd",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "theta" => Ok(Method::Theta),
            "sc" => Ok(Method::Sc),
            "bie" => Ok(Method::Bie),
            "fd" => Ok(Method::Fd),
            other => Err(format!("unknown method `{other}`")),
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Capacity value plus an a-posteriori error estimate and solver diagnostics.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CapacityResult {
    pub value: f64,
    pub method: Method,
    pub rel_err_estimate: f64,
    /// Ordered key/value pairs (iterations, levels, residuals, ...).
    pub diagnostics: Vec<(String, String)>,
}

impl CapacityResult {
    pub fn new(value: f64, method: Method, rel_err_estimate: f64) -> Self {
        CapacityResult {
            value,
            method,
            rel_err_estimate,
            diagnostics: Vec::new(),
        }
    }

    pub fn with(mut self, key: &str, value: impl std::fmt::Display) -> Self {
        self.diagnostics.push((key.to_string(), value.to_string()));
        self
    }

    pub fn diagnostic(&self, key: &str) -> Option<&str> {
        self.diagnostics
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

/// Format with 17 significant digits, the precision used in all reports.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}
