use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Named set of physical constants. Every physics output records `profile`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    #[serde(default = "file_profile")]
    pub profile: String,
    /// Planck constant, J·s.
    pub h: f64,
    /// Speed of light, m/s.
    pub c: f64,
    /// Boltzmann constant, J/K.
    pub k_b: f64,
    /// Gravitational constant, m³/(kg·s²).
    #[serde(rename = "G")]
    pub g: f64,
    /// Hubble parameter, 1/s.
    #[serde(rename = "H0")]
    pub h0: f64,
    /// Light-year, m.
    pub ly: f64,
    /// Electronvolt, J.
    #[serde(default = "electronvolt")]
    pub ev: f64,
    /// Electron mass, kg.
    #[serde(default = "electron_mass")]
    pub m_e: f64,
}

fn file_profile() -> String {
    "file".into()
}

const LIGHT_YEAR: f64 = 9_460_730_472_580_800.0;
const ELECTRONVOLT: f64 = 1.602_176_634e-19;
const MEGAPARSEC: f64 = 3.085_677_581_491_367e22;

fn electronvolt() -> f64 {
    ELECTRONVOLT
}

fn electron_mass() -> f64 {
    9.109_383_713_9e-31
}

impl PhysicalConstants {
    /// The rounded values used in the original cosmological estimate.
    /// Light-year and electronvolt are not rounded there; the IAU and SI
    /// values are used.
    pub fn paper() -> Self {
        PhysicalConstants {
            profile: "paper".into(),
            h: 6.6e-34,
            c: 3.0e8,
            k_b: 1.38e-23,
            g: 6.7e-11,
            h0: 2.1e-18,
            ly: LIGHT_YEAR,
            ev: ELECTRONVOLT,
            m_e: 9.1e-31,
        }
    }

    /// CODATA 2022 values, with H0 = 67.4 km/s/Mpc.
    pub fn codata() -> Self {
        PhysicalConstants {
            profile: "codata".into(),
            h: 6.626_070_15e-34,
            c: 299_792_458.0,
            k_b: 1.380_649e-23,
            g: 6.674_30e-11,
            h0: 67.4e3 / MEGAPARSEC,
            ly: LIGHT_YEAR,
            ev: ELECTRONVOLT,
            m_e: electron_mass(),
        }
    }

    /// Reads a JSON object with fields `h, c, k_b, G, H0, ly` and optional
    /// `ev, m_e, profile`.
    pub fn from_json(text: &str) -> Result<Self> {
        let consts: PhysicalConstants =
            serde_json::from_str(text).map_err(|e| Error::InvalidConstants(e.to_string()))?;
        consts.check()?;
        Ok(consts)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidConstants(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// `paper`, `codata`, or a path to a JSON constants file.
    pub fn resolve(name: &str) -> Result<Self> {
        match name {
            "paper" => Ok(Self::paper()),
            "codata" => Ok(Self::codata()),
            path => Self::from_file(Path::new(path)),
        }
    }

    pub fn check(&self) -> Result<()> {
        let fields = [
            ("h", self.h),
            ("c", self.c),
            ("k_b", self.k_b),
            ("G", self.g),
            ("H0", self.h0),
            ("ly", self.ly),
            ("ev", self.ev),
            ("m_e", self.m_e),
        ];
        for (name, value) in fields {
            if !(value > 0.0 && value.is_finite()) {
                return Err(Error::NonPositive { name, value });
            }
        }
        Ok(())
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::codata()
    }
}
