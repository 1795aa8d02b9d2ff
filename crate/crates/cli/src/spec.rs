//! Experiment specifications and their compact CLI string forms.

use nvsinc_core::{
    default_config, validate_config, KptVariant, SamplingConfig, Signal, WindowMode,
};
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// A fully described batch experiment. Serializes to JSON and round-trips.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub name: String,
    pub config: ConfigSpec,
    pub signal: SignalSpec,
    pub t: Vec<f64>,
    pub l: Vec<u64>,
    pub windows: Vec<WindowModeSpec>,
    pub output: String,
    pub format: OutputFormat,
}

/// Sampling parameters with the optional fields filled by the default recipe:
/// `omega1 = (omega + pi)/2`, `n` the smallest even integer strictly greater
/// than `omega1/(pi - omega1)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigSpec {
    pub omega: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
}

impl ConfigSpec {
    pub fn resolve(&self) -> nvsinc_core::Result<SamplingConfig> {
        match (self.omega1, self.n) {
            (None, None) => default_config(self.omega),
            (omega1, n) => {
                let defaults = default_config(self.omega);
                let omega1 = match omega1 {
                    Some(v) => v,
                    None => defaults.as_ref().map(|c| c.omega1()).unwrap_or(f64::NAN),
                };
                let n = match n {
                    Some(v) => v,
                    None => smallest_even_above(omega1 / (PI - omega1)),
                };
                validate_config(self.omega, omega1, n)
            }
        }
    }
}

fn smallest_even_above(x: f64) -> i64 {
    if !x.is_finite() {
        return 0; // validate_config will reject the pair anyway
    }
    2 * (x / 2.0).floor() as i64 + 2
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Csv,
    Json,
}

/// Window centering in a spec file: `"zero"` or `"t"`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WindowModeSpec {
    Zero,
    T,
}

impl WindowModeSpec {
    pub fn to_mode(self) -> WindowMode {
        match self {
            WindowModeSpec::Zero => WindowMode::CenteredAtZero,
            WindowModeSpec::T => WindowMode::CenteredAtT,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            WindowModeSpec::Zero => "zero",
            WindowModeSpec::T => "t",
        }
    }
}

/// How a cosine's phase shift binds to the truncation half-width `L`:
/// a fixed number, `L/2`, or `omega*L/2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShiftSpec {
    Fixed(f64),
    HalfL,
    OmegaHalfL,
}

impl ShiftSpec {
    pub fn resolve(&self, omega: f64, l: u64) -> f64 {
        match *self {
            ShiftSpec::Fixed(v) => v,
            ShiftSpec::HalfL => l as f64 / 2.0,
            ShiftSpec::OmegaHalfL => omega * l as f64 / 2.0,
        }
    }
}

/// Signal description. The `kpt` amplitude defaults to `sqrt(4*M/5)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum SignalSpec {
    Cosine { omega: f64, shift: ShiftSpec },
    Kpt {
        m: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        a: Option<f64>,
        variant: u8,
    },
    Trig { band: f64, count: usize, seed: u64 },
}

impl SignalSpec {
    /// Materializes the signal for one truncation half-width.
    pub fn resolve(&self, l: u64) -> Result<Signal, String> {
        match self {
            SignalSpec::Cosine { omega, shift } => {
                Signal::cosine(*omega, shift.resolve(*omega, l)).map_err(|e| e.to_string())
            }
            SignalSpec::Kpt { m, a, variant } => {
                let amplitude = a.unwrap_or_else(|| (4.0 * m / 5.0).sqrt());
                let variant = match variant {
                    1 => KptVariant::HalfArgument,
                    2 => KptVariant::HalfTerm,
                    v => return Err(format!("kpt variant must be 1 or 2, got {v}")),
                };
                Signal::kpt_sinc(*m, amplitude, variant).map_err(|e| e.to_string())
            }
            SignalSpec::Trig { band, count, seed } => {
                nvsinc_core::random_trig_poly(*band, *count, *seed).map_err(|e| e.to_string())
            }
        }
    }

    /// True when the signal changes with `L` (the `L`-coupled shifts).
    pub fn depends_on_l(&self) -> bool {
        matches!(
            self,
            SignalSpec::Cosine { shift: ShiftSpec::HalfL | ShiftSpec::OmegaHalfL, .. }
        )
    }

    /// Compact one-line form with the shift resolved, for artifact rows.
    pub fn describe(&self, l: u64) -> String {
        match self {
            SignalSpec::Cosine { omega, shift } => {
                format!("cosine(omega={omega};shift={})", shift.resolve(*omega, l))
            }
            SignalSpec::Kpt { m, a, variant } => {
                let amplitude = a.unwrap_or_else(|| (4.0 * m / 5.0).sqrt());
                format!("kpt(M={m};A={amplitude};variant={variant})")
            }
            SignalSpec::Trig { band, count, seed } => {
                format!("trig(band={band};count={count};seed={seed})")
            }
        }
    }
}

/// Parses the compact `--signal` grammar:
/// `cosine:omega=<r>,shift=<r|L/2|omega*L/2>`,
/// `kpt:M=<r>[,A=<r>][,variant=<1|2>]`,
/// `trig:band=<r>,count=<n>,seed=<n>`.
pub fn parse_signal_spec(s: &str) -> Result<SignalSpec, String> {
    let (head, rest) = s
        .split_once(':')
        .ok_or_else(|| format!("signal spec `{s}` needs the form kind:key=value,..."))?;
    let mut kv = std::collections::BTreeMap::new();
    for part in rest.split(',') {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| format!("malformed signal field `{part}`"))?;
        kv.insert(k.trim().to_ascii_lowercase(), v.trim().to_string());
    }
    let take_f64 = |kv: &std::collections::BTreeMap<String, String>, key: &str| -> Result<f64, String> {
        kv.get(key)
            .ok_or_else(|| format!("signal spec missing `{key}`"))?
            .parse::<f64>()
            .map_err(|e| format!("bad `{key}`: {e}"))
    };
    match head {
        "cosine" => {
            let omega = take_f64(&kv, "omega")?;
            let shift_raw = kv
                .get("shift")
                .ok_or_else(|| "signal spec missing `shift`".to_string())?;
            let shift = match shift_raw.to_ascii_lowercase().as_str() {
                "l/2" => ShiftSpec::HalfL,
                "omega*l/2" => ShiftSpec::OmegaHalfL,
                other => ShiftSpec::Fixed(
                    other
                        .parse::<f64>()
                        .map_err(|e| format!("bad `shift`: {e}"))?,
                ),
            };
            Ok(SignalSpec::Cosine { omega, shift })
        }
        "kpt" => {
            let m = take_f64(&kv, "m")?;
            let a = kv
                .get("a")
                .map(|v| v.parse::<f64>().map_err(|e| format!("bad `A`: {e}")))
                .transpose()?;
            let variant = kv
                .get("variant")
                .map(|v| v.parse::<u8>().map_err(|e| format!("bad `variant`: {e}")))
                .transpose()?
                .unwrap_or(1);
            Ok(SignalSpec::Kpt { m, a, variant })
        }
        "trig" => Ok(SignalSpec::Trig {
            band: take_f64(&kv, "band")?,
            count: kv
                .get("count")
                .ok_or_else(|| "signal spec missing `count`".to_string())?
                .parse()
                .map_err(|e| format!("bad `count`: {e}"))?,
            seed: kv
                .get("seed")
                .ok_or_else(|| "signal spec missing `seed`".to_string())?
                .parse()
                .map_err(|e| format!("bad `seed`: {e}"))?,
        }),
        other => Err(format!("unknown signal kind `{other}`")),
    }
}

/// Field-level validation with the offending field named in the message.
pub fn validate_spec(spec: &ExperimentSpec) -> Result<(), (String, String)> {
    if spec.name.is_empty() {
        return Err(("name".into(), "must not be empty".into()));
    }
    spec.config
        .resolve()
        .map_err(|e| ("config".into(), e.to_string()))?;
    if spec.t.is_empty() {
        return Err(("t".into(), "list must not be empty".into()));
    }
    if let Some(bad) = spec.t.iter().find(|v| !v.is_finite()) {
        return Err(("t".into(), format!("non-finite entry {bad}")));
    }
    if spec.l.is_empty() {
        return Err(("l".into(), "list must not be empty".into()));
    }
    if spec.l.contains(&0) {
        return Err(("l".into(), "entries must be positive".into()));
    }
    if spec.windows.is_empty() {
        return Err(("windows".into(), "list must not be empty".into()));
    }
    spec.signal
        .resolve(spec.l[0])
        .map_err(|e| ("signal".into(), e))?;
    if spec.output.is_empty() {
        return Err(("output".into(), "must not be empty".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_spec() -> ExperimentSpec {
        ExperimentSpec {
            name: "demo".into(),
            config: ConfigSpec { omega: 1.0, omega1: None, n: None },
            signal: SignalSpec::Cosine { omega: 1.0, shift: ShiftSpec::HalfL },
            t: vec![4.5, 10.25],
            l: vec![100, 1000],
            windows: vec![WindowModeSpec::Zero, WindowModeSpec::T],
            output: "demo.csv".into(),
            format: OutputFormat::Csv,
        }
    }

    #[test]
    fn spec_round_trips_through_json() {
        let spec = sample_spec();
        let text = serde_json::to_string_pretty(&spec).unwrap();
        let back: ExperimentSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(spec, back);
    }

    #[test]
    fn config_resolution_fills_defaults() {
        let cfg = ConfigSpec { omega: 5.0 * PI / 12.0, omega1: None, n: None }
            .resolve()
            .unwrap();
        assert_eq!(cfg.n_even(), 4);
        let cfg2 = ConfigSpec {
            omega: 5.0 * PI / 12.0,
            omega1: Some(17.0 * PI / 24.0),
            n: None,
        }
        .resolve()
        .unwrap();
        assert_eq!(cfg2.n_even(), 4);
        let cfg3 = ConfigSpec { omega: 5.0 * PI / 12.0, omega1: None, n: Some(6) }
            .resolve()
            .unwrap();
        assert_eq!(cfg3.n_even(), 6);
    }

    #[test]
    fn signal_string_grammar() {
        assert_eq!(
            parse_signal_spec("cosine:omega=1.25,shift=L/2").unwrap(),
            SignalSpec::Cosine { omega: 1.25, shift: ShiftSpec::HalfL }
        );
        assert_eq!(
            parse_signal_spec("cosine:omega=1.25,shift=500").unwrap(),
            SignalSpec::Cosine { omega: 1.25, shift: ShiftSpec::Fixed(500.0) }
        );
        assert_eq!(
            parse_signal_spec("kpt:M=256,variant=2").unwrap(),
            SignalSpec::Kpt { m: 256.0, a: None, variant: 2 }
        );
        assert_eq!(
            parse_signal_spec("trig:band=0.9,count=10,seed=3").unwrap(),
            SignalSpec::Trig { band: 0.9, count: 10, seed: 3 }
        );
        assert!(parse_signal_spec("square:duty=0.5").is_err());
        assert!(parse_signal_spec("cosine:omega=1.0").is_err());
    }

    #[test]
    fn kpt_amplitude_defaults_to_source_normalization() {
        let sig = SignalSpec::Kpt { m: 256.0, a: None, variant: 1 }
            .resolve(1000)
            .unwrap();
        assert_eq!(sig.eval(0.0).unwrap().re, (256.0f64 * 4.0 / 5.0).sqrt());
    }

    #[test]
    fn validation_names_the_offending_field() {
        let mut spec = sample_spec();
        spec.t.clear();
        assert_eq!(validate_spec(&spec).unwrap_err().0, "t");
        let mut spec = sample_spec();
        spec.l = vec![0];
        assert_eq!(validate_spec(&spec).unwrap_err().0, "l");
        let mut spec = sample_spec();
        spec.config.omega = 4.0;
        assert_eq!(validate_spec(&spec).unwrap_err().0, "config");
        let mut spec = sample_spec();
        spec.signal = SignalSpec::Kpt { m: 256.0, a: None, variant: 9 };
        assert_eq!(validate_spec(&spec).unwrap_err().0, "signal");
    }

    #[test]
    fn shift_resolution() {
        assert_eq!(ShiftSpec::HalfL.resolve(1.0, 100_000), 50_000.0);
        assert_eq!(ShiftSpec::Fixed(3.0).resolve(1.0, 77), 3.0);
        assert_eq!(ShiftSpec::OmegaHalfL.resolve(2.0, 10), 10.0);
    }
}
