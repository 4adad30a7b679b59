//! Parameter grids: `name=min:max:count` axes expanded into transform cases.

use crate::error::{domain, ensure_finite, Result};
use crate::verify::{Theorem, TransformCase};
use std::collections::BTreeMap;
use std::str::FromStr;

pub const DEFAULT_CASE_CAP: usize = 10_000;

/// One grid dimension: `count` evenly spaced values from `min` to `max`.
#[derive(Debug, Clone, PartialEq)]
pub struct GridAxis {
    pub name: String,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl GridAxis {
    pub fn values(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let step = (self.max - self.min) / (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.max
                } else {
                    self.min + step * i as f64
                }
            })
            .collect()
    }
}

impl FromStr for GridAxis {
    type Err = crate::Error;

    /// `name=min:max:count`, or `name=value` for a single point.
    fn from_str(s: &str) -> Result<Self> {
        let (name, range) = s.split_once('=').ok_or_else(|| {
            domain(format!(
                "malformed grid axis '{s}': expected name=min:max:count"
            ))
        })?;
        let name = name.trim();
        if name.is_empty() {
            return Err(domain(format!("malformed grid axis '{s}': empty name")));
        }
        let parts: Vec<&str> = range.split(':').map(str::trim).collect();
        let number = |t: &str| -> Result<f64> {
            let v: f64 = t
                .parse()
                .map_err(|_| domain(format!("malformed grid axis '{s}': '{t}' is not a number")))?;
            ensure_finite(name, v)?;
            Ok(v)
        };
        let (min, max, count) = match parts.as_slice() {
            [v] => {
                let v = number(v)?;
                (v, v, 1)
            }
            [lo, hi, n] => {
                let count: usize = n.parse().map_err(|_| {
                    domain(format!(
                        "malformed grid axis '{s}': count '{n}' is not a positive integer"
                    ))
                })?;
                (number(lo)?, number(hi)?, count)
            }
            _ => {
                return Err(domain(format!(
                    "malformed grid axis '{s}': expected name=min:max:count"
                )))
            }
        };
        if count == 0 {
            return Err(domain(format!(
                "malformed grid axis '{s}': count must be at least 1"
            )));
        }
        Ok(GridAxis {
            name: name.to_string(),
            min,
            max,
            count,
        })
    }
}

/// Number of grid points, or `None` on overflow.
pub fn grid_size(axes: &[GridAxis]) -> Option<usize> {
    axes.iter().try_fold(1usize, |n, a| n.checked_mul(a.count))
}

/// Expands `axes` over `base` (missing parameters take the theorem's
/// canonical values). Cases come out in lexicographic order of the grid
/// indices, the first axis varying slowest. Grids larger than `cap` are
/// rejected before any case is built.
pub fn expand(
    theorem: Theorem,
    axes: &[GridAxis],
    base: &BTreeMap<String, f64>,
    cap: usize,
) -> Result<Vec<TransformCase>> {
    for (i, a) in axes.iter().enumerate() {
        if axes[..i].iter().any(|b| b.name == a.name) {
            return Err(domain(format!("grid axis '{}' given twice", a.name)));
        }
    }
    let total = grid_size(axes).filter(|&n| n <= cap).ok_or_else(|| {
        domain(format!(
            "sweep of {} cases exceeds the cap of {cap}",
            axes.iter()
                .map(|a| a.count.to_string())
                .collect::<Vec<_>>()
                .join("x")
        ))
    })?;
    let values: Vec<Vec<f64>> = axes.iter().map(GridAxis::values).collect();
    let mut index = vec![0usize; axes.len()];
    let mut cases = Vec::with_capacity(total);
    for _ in 0..total {
        let mut params = base.clone();
        for (axis, (&i, vals)) in axes.iter().zip(index.iter().zip(&values)) {
            params.insert(axis.name.clone(), vals[i]);
        }
        cases.push(TransformCase::from_params(theorem, &params)?);
        for d in (0..axes.len()).rev() {
            index[d] += 1;
            if index[d] < axes[d].count {
                break;
            }
            index[d] = 0;
        }
    }
    Ok(cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn axis(s: &str) -> GridAxis {
        s.parse().unwrap()
    }

    #[test]
    fn parse_axes() {
        assert_eq!(
            axis("p=0:1:3"),
            GridAxis {
                name: "p".into(),
                min: 0.0,
                max: 1.0,
                count: 3
            }
        );
        assert_eq!(axis("x=2").count, 1);
        for bad in [
            "p",
            "=1",
            "p=0:1",
            "p=0:1:0",
            "p=a:1:2",
            "p=0:1:-2",
            "p=0:inf:2",
        ] {
            assert!(bad.parse::<GridAxis>().is_err(), "{bad}");
        }
    }

    #[test]
    fn values_hit_both_ends() {
        assert_eq!(axis("p=0:1:3").values(), vec![0.0, 0.5, 1.0]);
        assert_eq!(axis("p=0.3:0.9:7").values().last(), Some(&0.9));
    }

    #[test]
    fn three_by_three_is_lexicographic() {
        let axes = [axis("p=0:1:3"), axis("x=0.5:1.5:3")];
        let cases = expand(Theorem::Euler, &axes, &BTreeMap::new(), DEFAULT_CASE_CAP).unwrap();
        assert_eq!(cases.len(), 9);
        let pairs: Vec<(f64, f64)> = cases.iter().map(|c| (c.gtsf.p, c.x)).collect();
        assert_eq!(pairs[0], (0.0, 0.5));
        assert_eq!(pairs[1], (0.0, 1.0));
        assert_eq!(pairs[3], (0.5, 0.5));
        assert_eq!(pairs[8], (1.0, 1.5));
    }

    #[test]
    fn single_point_grid() {
        let cases = expand(
            Theorem::Laplace,
            &[axis("s=4")],
            &BTreeMap::new(),
            DEFAULT_CASE_CAP,
        )
        .unwrap();
        assert_eq!(cases.len(), 1);
        assert!(
            expand(Theorem::Laplace, &[], &BTreeMap::new(), DEFAULT_CASE_CAP)
                .unwrap()
                .len()
                == 1
        );
    }

    #[test]
    fn cap_and_foreign_names() {
        let axes = [axis("p=0:1:200"), axis("x=0.5:1.5:200")];
        assert!(expand(Theorem::Euler, &axes, &BTreeMap::new(), DEFAULT_CASE_CAP).is_err());
        assert!(expand(Theorem::Euler, &[axis("omega=1:2:2")], &BTreeMap::new(), 10).is_err());
        assert!(expand(
            Theorem::Euler,
            &[axis("p=0:1:2"), axis("p=0:1:2")],
            &BTreeMap::new(),
            10
        )
        .is_err());
    }
}
