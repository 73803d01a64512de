//! Information volume of physical carriers: single quanta, mixed
//! matter/radiation carriers, the thermodynamic bit-mass bound and the
//! cosmological budget.

mod constants;

pub use constants::PhysicalConstants;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_UNIVERSE_RADIUS_LY: f64 = 4.56e10;
pub const DEFAULT_UNIVERSE_AGE_S: f64 = 4.3e17;
pub const SILICON_CHIP_MASS_KG: f64 = 1.6e-3;
pub const SILICON_CHIP_BITS: f64 = 1e12;
/// Commonly printed value of 4C²/h; see [`mass_energy_report`].
pub const PRINTED_FOUR_C2_OVER_H: f64 = 5.3853e50;

fn positive(name: &'static str, value: f64) -> Result<f64> {
    if value > 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonPositive { name, value })
    }
}

fn nonnegative(name: &'static str, value: f64) -> Result<f64> {
    if value >= 0.0 && value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Negative { name, value })
    }
}

/// Exact conversion of a nonnegative integral float.
fn biguint_from_integral(x: f64) -> BigUint {
    debug_assert!(x >= 0.0 && x.fract() == 0.0);
    if x < 18_446_744_073_709_551_616.0 {
        return BigUint::from(x as u64);
    }
    let bits = x.to_bits();
    let exponent = ((bits >> 52) & 0x7ff) as usize - 1075;
    let mantissa = (bits & ((1u64 << 52) - 1)) | (1u64 << 52);
    BigUint::from(mantissa) << exponent
}

/// Qubits carried by one quantum of mean energy `ΔE` over `t` seconds.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumVolume {
    /// `floor(4ΔEt/h) + 1`: one state per completed orthogonal transition plus the initial one.
    pub exact: BigUint,
    /// `4ΔEt/h`.
    pub asymptotic: f64,
    /// Margolus–Levitin time `h/(4ΔE)` between orthogonal states.
    pub transition_time: f64,
}

impl QuantumVolume {
    pub fn exact_f64(&self) -> f64 {
        self.asymptotic.floor() + 1.0
    }

    /// `(exact - asymptotic) / asymptotic`, evaluated without cancellation;
    /// infinite at `t = 0`.
    pub fn relative_gap(&self) -> f64 {
        let x = self.asymptotic;
        (1.0 - (x - x.floor())) / x
    }
}

pub fn quantum_volume(delta_e: f64, t: f64, consts: &PhysicalConstants) -> Result<QuantumVolume> {
    let delta_e = positive("quantum energy", delta_e)?;
    let t = nonnegative("duration", t)?;
    let asymptotic = 4.0 * delta_e * t / consts.h;
    if !asymptotic.is_finite() {
        return Err(Error::NonPositive {
            name: "4ΔEt/h (overflow)",
            value: asymptotic,
        });
    }
    Ok(QuantumVolume {
        exact: biguint_from_integral(asymptotic.floor()) + 1u32,
        asymptotic,
        transition_time: consts.h / (4.0 * delta_e),
    })
}

/// A carrier with matter mass `m`, radiation energy `E_r` and `N` quanta,
/// observed for `duration` seconds.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct CarrierSpec {
    #[serde(default)]
    pub mass: f64,
    #[serde(default)]
    pub radiation_energy: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quantum_count: Option<f64>,
    #[serde(default)]
    pub duration: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub temperature: Option<f64>,
}

impl CarrierSpec {
    pub fn check(&self) -> Result<()> {
        nonnegative("mass", self.mass)?;
        nonnegative("radiation energy", self.radiation_energy)?;
        nonnegative("duration", self.duration)?;
        if let Some(n) = self.quantum_count {
            nonnegative("quantum count", n)?;
        }
        if let Some(t) = self.temperature {
            nonnegative("temperature", t)?;
        }
        if self.mass == 0.0 && self.radiation_energy == 0.0 && self.quantum_count.unwrap_or(0.0) == 0.0 {
            return Err(Error::EmptyCarrier);
        }
        Ok(())
    }

    /// Total energy `m C² + E_r` in joules.
    pub fn energy(&self, consts: &PhysicalConstants) -> f64 {
        self.mass * consts.c * consts.c + self.radiation_energy
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    /// Long observation: `4Et/h`.
    Large,
    /// Snapshot: one state per quantum, `N`.
    Instant,
    /// `Large` once `t` reaches `hN/(4E)`, where both branches equal `N`;
    /// `Instant` before. Without `N` only `t > 0` can be decided.
    #[default]
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CarrierVolume {
    pub qubits: f64,
    pub regime: Regime,
    pub energy: f64,
}

pub fn carrier_volume(spec: &CarrierSpec, regime: Regime, consts: &PhysicalConstants) -> Result<CarrierVolume> {
    spec.check()?;
    let energy = spec.energy(consts);
    let large = |t: f64| 4.0 * energy * t / consts.h;
    let resolved = match regime {
        Regime::Auto => match spec.quantum_count {
            Some(n) if energy > 0.0 && large(spec.duration) >= n => Regime::Large,
            Some(_) => Regime::Instant,
            None if spec.duration > 0.0 => Regime::Large,
            None => return Err(Error::MissingQuantumCount),
        },
        r => r,
    };
    let qubits = match resolved {
        Regime::Instant => spec.quantum_count.ok_or(Error::MissingQuantumCount)?,
        _ => large(spec.duration),
    };
    Ok(CarrierVolume {
        qubits,
        regime: resolved,
        energy,
    })
}

/// Least mass that can hold one bit at temperature `T`: `k_b T ln2 / C²`.
pub fn min_bit_mass(temperature: f64, consts: &PhysicalConstants) -> Result<f64> {
    let t = positive("temperature", temperature)?;
    Ok(consts.k_b * t * std::f64::consts::LN_2 / (consts.c * consts.c))
}

/// `C² / (k_b T ln2)`. Holds for classical memory in equilibrium only.
pub fn bits_per_kg(temperature: f64, consts: &PhysicalConstants) -> Result<f64> {
    let t = positive("temperature", temperature)?;
    Ok(consts.c * consts.c / (consts.k_b * t * std::f64::consts::LN_2))
}

pub fn silicon_bits_per_kg(chip_mass_kg: f64, chip_bits: f64) -> Result<f64> {
    Ok(nonnegative("chip bits", chip_bits)? / positive("chip mass", chip_mass_kg)?)
}

/// Number of quanta of energy `quantum_energy` that make up `total_energy`.
pub fn quanta_count(total_energy: f64, quantum_energy: f64) -> Result<f64> {
    Ok(nonnegative("total energy", total_energy)? / positive("quantum energy", quantum_energy)?)
}

pub fn electron_count(mass: f64, consts: &PhysicalConstants) -> Result<f64> {
    quanta_count(nonnegative("mass", mass)?, consts.m_e)
}

/// Photons of `photon_ev` electronvolts carrying the rest energy of `mass`.
pub fn photon_count(mass: f64, photon_ev: f64, consts: &PhysicalConstants) -> Result<f64> {
    let energy = nonnegative("mass", mass)? * consts.c * consts.c;
    quanta_count(energy, positive("photon energy", photon_ev)? * consts.ev)
}

/// `4C²/h`: qubits per kilogram-second of rest energy.
pub fn four_c2_over_h(consts: &PhysicalConstants) -> f64 {
    4.0 * consts.c * consts.c / consts.h
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UniverseInfo {
    /// Critical density `3H0²/(8πG)`, kg/m³.
    pub rho_c: f64,
    /// `(4/3)π L³`, m³.
    pub volume: f64,
    /// `ρ_c V`, kg.
    pub mass: f64,
    /// `4 m C² t / h`, qubits.
    pub info: f64,
}

pub fn universe_info(consts: &PhysicalConstants, radius_ly: f64, age: f64) -> Result<UniverseInfo> {
    let radius = positive("radius", radius_ly)? * consts.ly;
    let age = positive("age", age)?;
    let rho_c = 3.0 * consts.h0 * consts.h0 / (8.0 * std::f64::consts::PI * consts.g);
    let volume = 4.0 / 3.0 * std::f64::consts::PI * radius.powi(3);
    let mass = rho_c * volume;
    let info = 4.0 * mass * consts.c * consts.c * age / consts.h;
    Ok(UniverseInfo {
        rho_c,
        volume,
        mass,
        info,
    })
}

/// A named value with its unit; `exact` holds integers too large for `value`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Quantity {
    pub name: String,
    pub value: f64,
    pub unit: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
}

impl Quantity {
    pub fn new(name: &str, value: f64, unit: &str) -> Self {
        Quantity {
            name: name.into(),
            value,
            unit: unit.into(),
            exact: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhysicsReport {
    pub name: String,
    pub profile: String,
    pub inputs: Vec<Quantity>,
    pub outputs: Vec<Quantity>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl PhysicsReport {
    fn new(name: &str, consts: &PhysicalConstants) -> Self {
        PhysicsReport {
            name: name.into(),
            profile: consts.profile.clone(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn output(&self, name: &str) -> Option<&Quantity> {
        self.outputs.iter().find(|q| q.name == name)
    }
}

pub fn quantum_report(delta_e: f64, t: f64, consts: &PhysicalConstants) -> Result<PhysicsReport> {
    let q = quantum_volume(delta_e, t, consts)?;
    let mut r = PhysicsReport::new("quantum", consts);
    r.inputs = vec![Quantity::new("delta_e", delta_e, "J"), Quantity::new("t", t, "s")];
    let mut exact = Quantity::new("exact", q.exact_f64(), "qubit");
    exact.exact = Some(q.exact.to_string());
    r.outputs = vec![
        exact,
        Quantity::new("asymptotic", q.asymptotic, "qubit"),
        Quantity::new("transition_time", q.transition_time, "s"),
    ];
    if t > 0.0 {
        r.outputs.push(Quantity::new("relative_gap", q.relative_gap(), "1"));
    }
    Ok(r)
}

pub fn carrier_report(spec: &CarrierSpec, regime: Regime, consts: &PhysicalConstants) -> Result<PhysicsReport> {
    let v = carrier_volume(spec, regime, consts)?;
    let mut r = PhysicsReport::new("carrier", consts);
    r.inputs = vec![
        Quantity::new("mass", spec.mass, "kg"),
        Quantity::new("radiation_energy", spec.radiation_energy, "J"),
        Quantity::new("duration", spec.duration, "s"),
    ];
    if let Some(n) = spec.quantum_count {
        r.inputs.push(Quantity::new("quantum_count", n, "1"));
    }
    r.outputs = vec![
        Quantity::new("energy", v.energy, "J"),
        Quantity::new("volume", v.qubits, "qubit"),
    ];
    let regime = match v.regime {
        Regime::Instant => "instant regime: one qubit per quantum",
        _ => "large-t regime: 4Et/h",
    };
    r.notes.push(regime.into());
    Ok(r)
}

pub fn bit_mass_report(temperature: f64, consts: &PhysicalConstants) -> Result<PhysicsReport> {
    let mut r = PhysicsReport::new("bit-mass", consts);
    r.inputs = vec![Quantity::new("temperature", temperature, "K")];
    r.outputs = vec![
        Quantity::new("min_bit_mass", min_bit_mass(temperature, consts)?, "kg"),
        Quantity::new("bits_per_kg", bits_per_kg(temperature, consts)?, "bit/kg"),
        Quantity::new(
            "silicon_bits_per_kg",
            silicon_bits_per_kg(SILICON_CHIP_MASS_KG, SILICON_CHIP_BITS)?,
            "bit/kg",
        ),
    ];
    r.notes.push("classical equilibrium memory only; not applicable to quantum carriers".into());
    r.notes
        .push("silicon baseline: a 1.6 g chip holding 1e12 bits".into());
    Ok(r)
}

pub fn universe_report(consts: &PhysicalConstants, radius_ly: f64, age: f64) -> Result<PhysicsReport> {
    let u = universe_info(consts, radius_ly, age)?;
    let mut r = PhysicsReport::new("universe", consts);
    r.inputs = vec![
        Quantity::new("radius", radius_ly, "ly"),
        Quantity::new("age", age, "s"),
    ];
    r.outputs = vec![
        Quantity::new("rho_c", u.rho_c, "kg/m^3"),
        Quantity::new("V", u.volume, "m^3"),
        Quantity::new("m", u.mass, "kg"),
        Quantity::new("I", u.info, "qubit"),
    ];
    Ok(r)
}

/// `4C²/h` together with the electron and photon snapshots of a 1 kg carrier.
pub fn mass_energy_report(consts: &PhysicalConstants, photon_ev: f64) -> Result<PhysicsReport> {
    let value = four_c2_over_h(consts);
    let mut r = PhysicsReport::new("mass-energy", consts);
    r.inputs = vec![
        Quantity::new("mass", 1.0, "kg"),
        Quantity::new("t", 1.0, "s"),
        Quantity::new("photon_energy", photon_ev, "eV"),
    ];
    r.outputs = vec![
        Quantity::new("four_c2_over_h", value, "qubit"),
        Quantity::new("electron_count", electron_count(1.0, consts)?, "qubit"),
        Quantity::new("rest_energy", consts.c * consts.c / consts.ev, "eV"),
        Quantity::new("photon_count", photon_count(1.0, photon_ev, consts)?, "qubit"),
    ];
    let relative = (value - PRINTED_FOUR_C2_OVER_H) / PRINTED_FOUR_C2_OVER_H;
    r.notes.push(format!(
        "discrepancy: the often printed 4C^2/h = {PRINTED_FOUR_C2_OVER_H:e} does not follow from \
         h = 6.6e-34 J s and C = 3.0e8 m/s (which give 5.4545e50); the value above is recomputed \
         from the {} constants and differs from the printed figure by {:+.2}%",
        consts.profile,
        relative * 100.0
    ));
    Ok(r)
}
