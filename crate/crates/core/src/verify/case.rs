use crate::error::{domain, ensure_finite, Error, Result};
use crate::gtsf::GtsfParams;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// The five transform identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Theorem {
    Euler,
    Laplace,
    Whittaker,
    #[serde(rename = "ktransform")]
    KTransform,
    #[serde(rename = "frft")]
    FracFourier,
}

impl Theorem {
    pub const ALL: [Theorem; 5] = [
        Theorem::Euler,
        Theorem::Laplace,
        Theorem::Whittaker,
        Theorem::KTransform,
        Theorem::FracFourier,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Euler => "euler",
            Theorem::Laplace => "laplace",
            Theorem::Whittaker => "whittaker",
            Theorem::KTransform => "ktransform",
            Theorem::FracFourier => "frft",
        }
    }

    /// Relative residual tolerance used when none is given.
    pub fn default_tolerance(self) -> f64 {
        match self {
            Theorem::Euler | Theorem::Laplace => 1e-8,
            Theorem::Whittaker | Theorem::KTransform => 1e-6,
            Theorem::FracFourier => 1e-5,
        }
    }

    /// Names of the transform parameters, in CSV column order.
    pub fn transform_params(self) -> &'static [&'static str] {
        match self {
            Theorem::Euler => &["r", "s"],
            Theorem::Laplace => &["s"],
            Theorem::Whittaker => &["zeta", "tau", "omega"],
            Theorem::KTransform => &["rho", "nu", "omega"],
            Theorem::FracFourier => &["order", "omega"],
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| domain(format!("unknown theorem '{s}'")))
    }
}

/// GTSF parameter names shared by every theorem.
pub const GTSF_PARAMS: [&str; 8] = ["a", "p", "b", "c", "lambda", "mu", "xi", "x"];

/// Every parameter name, in CSV column order.
pub const ALL_PARAMS: [&str; 16] = [
    "a", "p", "b", "c", "lambda", "mu", "xi", "x", "r", "s", "zeta", "tau", "omega", "rho", "nu",
    "order",
];

/// Transform-specific parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Transform {
    Euler {
        r: f64,
        s: f64,
    },
    Laplace {
        s: f64,
    },
    Whittaker {
        zeta: f64,
        tau: f64,
        omega: f64,
    },
    #[serde(rename = "ktransform")]
    KTransform {
        rho: f64,
        nu: f64,
        omega: f64,
    },
    #[serde(rename = "frft")]
    FracFourier {
        order: f64,
        omega: f64,
    },
}

impl Transform {
    pub fn theorem(&self) -> Theorem {
        match self {
            Transform::Euler { .. } => Theorem::Euler,
            Transform::Laplace { .. } => Theorem::Laplace,
            Transform::Whittaker { .. } => Theorem::Whittaker,
            Transform::KTransform { .. } => Theorem::KTransform,
            Transform::FracFourier { .. } => Theorem::FracFourier,
        }
    }

    fn values(&self) -> Vec<f64> {
        match *self {
            Transform::Euler { r, s } => vec![r, s],
            Transform::Laplace { s } => vec![s],
            Transform::Whittaker { zeta, tau, omega } => vec![zeta, tau, omega],
            Transform::KTransform { rho, nu, omega } => vec![rho, nu, omega],
            Transform::FracFourier { order, omega } => vec![order, omega],
        }
    }
}

/// One identity instance: GTSF parameters, the scale x in GTSF(x^{1/2} t),
/// and the transform parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformCase {
    pub gtsf: GtsfParams,
    pub x: f64,
    pub transform: Transform,
}

/// Reduced GTSF set with b = 1, c = 1, p = 1/2.
fn canonical_gtsf() -> GtsfParams {
    GtsfParams::reduced(0.5, 1.0, 1.0)
}

impl TransformCase {
    pub fn new(gtsf: GtsfParams, x: f64, transform: Transform) -> Self {
        TransformCase { gtsf, x, transform }
    }

    pub fn theorem(&self) -> Theorem {
        self.transform.theorem()
    }

    /// The reference instance of each theorem.
    pub fn canonical(theorem: Theorem) -> Self {
        let gtsf = canonical_gtsf();
        match theorem {
            Theorem::Euler => TransformCase::new(gtsf, 1.0, Transform::Euler { r: 2.0, s: 3.0 }),
            Theorem::Laplace => TransformCase::new(gtsf, 1.0, Transform::Laplace { s: 3.0 }),
            Theorem::Whittaker => TransformCase::new(
                gtsf,
                0.25,
                Transform::Whittaker {
                    zeta: 1.5,
                    tau: 0.2,
                    omega: 0.3,
                },
            ),
            Theorem::KTransform => TransformCase::new(
                gtsf,
                1.0,
                Transform::KTransform {
                    rho: 1.5,
                    nu: 0.3,
                    omega: 2.0,
                },
            ),
            Theorem::FracFourier => TransformCase::new(
                gtsf,
                0.25,
                Transform::FracFourier {
                    order: 1.0,
                    omega: 1.0,
                },
            ),
        }
    }

    /// Parameters by name.
    pub fn params(&self) -> BTreeMap<String, f64> {
        let g = &self.gtsf;
        let mut map: BTreeMap<String, f64> = [
            ("a", g.a as f64),
            ("p", g.p),
            ("b", g.b),
            ("c", g.c),
            ("lambda", g.lambda),
            ("mu", g.mu),
            ("xi", g.xi),
            ("x", self.x),
        ]
        .into_iter()
        .map(|(k, v)| (k.to_string(), v))
        .collect();
        for (name, v) in self
            .theorem()
            .transform_params()
            .iter()
            .zip(self.transform.values())
        {
            map.insert(name.to_string(), v);
        }
        map
    }

    /// Builds a case from named parameters; missing ones default to the
    /// canonical case of the theorem.
    pub fn from_params(theorem: Theorem, params: &BTreeMap<String, f64>) -> Result<Self> {
        let allowed: Vec<&str> = GTSF_PARAMS
            .iter()
            .chain(theorem.transform_params())
            .copied()
            .collect();
        if let Some(bad) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
            return Err(domain(format!(
                "parameter '{bad}' does not apply to the {theorem} transform"
            )));
        }
        let mut merged = Self::canonical(theorem).params();
        for (k, &v) in params {
            ensure_finite(k, v)?;
            merged.insert(k.clone(), v);
        }
        let get = |k: &str| merged[k];
        let a = get("a");
        if !(a >= 1.0 && a == a.floor() && a <= u32::MAX as f64) {
            return Err(domain(format!("a must be a positive integer, got {a}")));
        }
        let gtsf = GtsfParams::new(
            a as u32,
            get("p"),
            get("b"),
            get("c"),
            get("lambda"),
            get("mu"),
            get("xi"),
        )?;
        let transform = match theorem {
            Theorem::Euler => Transform::Euler {
                r: get("r"),
                s: get("s"),
            },
            Theorem::Laplace => Transform::Laplace { s: get("s") },
            Theorem::Whittaker => Transform::Whittaker {
                zeta: get("zeta"),
                tau: get("tau"),
                omega: get("omega"),
            },
            Theorem::KTransform => Transform::KTransform {
                rho: get("rho"),
                nu: get("nu"),
                omega: get("omega"),
            },
            Theorem::FracFourier => Transform::FracFourier {
                order: get("order"),
                omega: get("omega"),
            },
        };
        Ok(TransformCase::new(gtsf, get("x"), transform))
    }

    /// √(max(0, −c)·x): exponential growth rate of the GTSF integrand when c < 0.
    pub fn growth_rate(&self) -> f64 {
        (self.gtsf.c.min(0.0).abs() * self.x).sqrt()
    }

    /// Checks structural validity and the convergence conditions of the
    /// identity. Violations are reported as [`Error::InvalidCase`].
    pub fn validate(&self) -> Result<()> {
        self.gtsf.validate()?;
        ensure_finite("x", self.x)?;
        for v in self.transform.values() {
            ensure_finite("transform parameter", v)?;
        }
        if !(self.x > 0.0) {
            return Err(domain(format!("x must be positive, got {}", self.x)));
        }
        let g = &self.gtsf;
        if g.p <= -1.0 {
            return Err(invalid("p > -1 is required"));
        }
        let unbounded = self.theorem() != Theorem::Euler && g.c != 0.0;
        if unbounded && g.lambda + (g.a as f64) < 2.0 {
            return Err(invalid(
                "lambda + a >= 2 is required on (0, inf) when c != 0",
            ));
        }
        let growth = self.growth_rate();
        match self.transform {
            Transform::Euler { r, s } => {
                if !(r > 0.0 && s > 0.0) {
                    return Err(invalid(
                        "convergence margin violated: r > 0 and s > 0 required",
                    ));
                }
            }
            Transform::Laplace { s } => {
                if !(s > growth + 0.5) {
                    return Err(invalid(format!(
                        "convergence margin violated: s = {s} must exceed sqrt(max(0,-c) x) + 0.5 = {}",
                        growth + 0.5
                    )));
                }
            }
            Transform::Whittaker { zeta, omega, .. } => {
                let base = zeta + g.p + 1.5;
                if !(base + omega > 0.0 && base - omega > 0.0) {
                    return Err(invalid(
                        "convergence margin violated: zeta +- omega + p + 3/2 > 0 required",
                    ));
                }
                if !(growth < 1.0) {
                    return Err(invalid(
                        "convergence margin violated: sqrt(max(0,-c) x) < 1 required",
                    ));
                }
            }
            Transform::KTransform { rho, nu, omega } => {
                let base = rho + g.p + 1.0;
                if !(base + nu > 0.0 && base - nu > 0.0) {
                    return Err(invalid(
                        "convergence margin violated: rho + p + 1 +- nu > 0 required",
                    ));
                }
                if !(omega > 0.0) {
                    return Err(invalid("convergence margin violated: omega > 0 required"));
                }
                if !(omega > growth) {
                    return Err(invalid(
                        "convergence margin violated: omega > sqrt(max(0,-c) x) required",
                    ));
                }
            }
            Transform::FracFourier { order, omega } => {
                if !(order > 0.0 && order <= 1.0) {
                    return Err(invalid(
                        "convergence margin violated: 0 < order <= 1 required",
                    ));
                }
                if !(omega > 0.0) {
                    return Err(invalid("convergence margin violated: omega > 0 required"));
                }
                if g.c < 0.0 {
                    return Err(invalid(
                        "convergence margin violated: c >= 0 required (growing integrand)",
                    ));
                }
            }
        }
        Ok(())
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidCase(msg.into())
}
