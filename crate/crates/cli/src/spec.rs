use std::fmt;

use serde::Deserialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Config,
    Cayley,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Config => "config",
            Model::Cayley => "cayley",
        })
    }
}

/// Flat JSON experiment description, e.g.
/// `{"model": "config", "n": 60, "r": 3, "d": 2, "g_max": 6, "trials": 1000, "seed": 1}`.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentSpec {
    pub model: Model,
    pub n: usize,
    pub r: usize,
    pub d: usize,
    pub g_max: usize,
    pub trials: u64,
    pub seed: u64,
    #[serde(default)]
    pub output: Option<String>,
}

impl ExperimentSpec {
    pub fn parse(text: &str) -> Result<Self, String> {
        let spec: Self = serde_json::from_str(text).map_err(|e| e.to_string())?;
        if spec.trials == 0 {
            return Err("trials must be at least 1".into());
        }
        let divides = match spec.model {
            Model::Config => spec.r != 0 && (spec.n * spec.d).is_multiple_of(spec.r),
            Model::Cayley => spec.r != 0 && spec.n.is_multiple_of(spec.r),
        };
        if !divides {
            return Err(format!("r={} does not fit n={} d={} for model {}", spec.r, spec.n, spec.d, spec.model));
        }
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_validates() {
        let s = ExperimentSpec::parse(r#"{"model":"config","n":60,"r":3,"d":2,"g_max":5,"trials":10,"seed":4}"#).unwrap();
        assert_eq!((s.model, s.n, s.trials, s.output), (Model::Config, 60, 10, None));
        assert!(ExperimentSpec::parse(r#"{"model":"config","n":61,"r":3,"d":2,"g_max":5,"trials":10,"seed":4}"#).is_err());
        assert!(ExperimentSpec::parse(r#"{"model":"cayley","n":6,"r":3,"d":2,"g_max":5,"trials":0,"seed":4}"#).is_err());
        assert!(ExperimentSpec::parse(r#"{"model":"other","n":6,"r":3,"d":2,"g_max":5,"trials":1,"seed":4}"#).is_err());
        assert!(ExperimentSpec::parse(r#"{"model":"cayley","n":6,"r":3,"d":2,"g_max":5,"trials":1,"seed":4,"x":1}"#).is_err());
    }
}
