use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::partition::{GeneralizedPartition, PartitionDefect, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GotError {
    #[error("shape sequence must start at the empty shape")]
    BadStart,
    #[error("shape {0} is not weakly decreasing with the given number of parts")]
    NotWeaklyDecreasing(usize),
    #[error("shape {0} has nonzero parts beyond the given number of parts")]
    TooManyParts(usize),
    #[error("shape {0} does not differ from its predecessor by a single box")]
    BadStep(usize),
    #[error("number of parts must be positive")]
    NoParts,
    #[error("declared length {declared} does not match {actual} steps")]
    LengthMismatch { declared: usize, actual: usize },
}

/// A generalized oscillating tableau: shapes `λ⁰ = ∅, λ¹, …, λᵏ`, each with
/// `n` parts, consecutive shapes differing by one box.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Got {
    n: usize,
    shapes: Vec<GeneralizedPartition>,
}

/// Wire form: `{"n":…,"k":…,"shapes":[[…],…]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GotJson {
    pub n: usize,
    pub k: usize,
    pub shapes: Vec<Vec<i32>>,
}

impl Got {
    /// Checks a raw shape sequence. Shorter shapes are zero-padded to `n` parts.
    pub fn validate<S: AsRef<[i32]>>(shapes: &[S], n: usize) -> Result<Self, GotError> {
        if n == 0 {
            return Err(GotError::NoParts);
        }
        let mut out = Vec::with_capacity(shapes.len());
        for (i, raw) in shapes.iter().enumerate() {
            let p = GeneralizedPartition::padded(raw.as_ref(), n).map_err(|d| match d {
                PartitionDefect::NotWeaklyDecreasing => GotError::NotWeaklyDecreasing(i),
                PartitionDefect::TooManyParts => GotError::TooManyParts(i),
            })?;
            if i == 0 && !p.is_empty_shape() {
                return Err(GotError::BadStart);
            }
            if i > 0 && out.last().and_then(|q: &GeneralizedPartition| q.step_to(&p)).is_none() {
                return Err(GotError::BadStep(i));
            }
            out.push(p);
        }
        if out.is_empty() {
            return Err(GotError::BadStart);
        }
        Ok(Got { n, shapes: out })
    }

    /// Builds a tableau from a start at `∅` and a list of legal steps.
    pub fn from_steps(n: usize, steps: &[Step]) -> Result<Self, GotError> {
        if n == 0 {
            return Err(GotError::NoParts);
        }
        let mut shapes = vec![GeneralizedPartition::empty(n)];
        for (i, &st) in steps.iter().enumerate() {
            let next = shapes[i]
                .apply(st)
                .ok_or(GotError::NotWeaklyDecreasing(i + 1))?;
            shapes.push(next);
        }
        Ok(Got { n, shapes })
    }

    /// The length-0 tableau `(∅)`.
    pub fn empty(n: usize) -> Self {
        Got {
            n,
            shapes: vec![GeneralizedPartition::empty(n)],
        }
    }

    pub(crate) fn from_shapes_unchecked(n: usize, shapes: Vec<GeneralizedPartition>) -> Self {
        debug_assert!(!shapes.is_empty());
        Got { n, shapes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn shapes(&self) -> &[GeneralizedPartition] {
        &self.shapes
    }

    /// `λⁱ`.
    pub fn shape(&self, i: usize) -> &GeneralizedPartition {
        &self.shapes[i]
    }

    /// The step from `λⁱ⁻¹` to `λⁱ`, for `1 ≤ i ≤ k`.
    pub fn step(&self, i: usize) -> Step {
        self.shapes[i - 1]
            .step_to(&self.shapes[i])
            .expect("validated tableau")
    }

    pub fn steps(&self) -> Vec<Step> {
        (1..=self.k()).map(|i| self.step(i)).collect()
    }

    /// Whether every shape is an ordinary partition and every step adds a box.
    pub fn is_standard(&self) -> bool {
        self.steps()
            .iter()
            .all(|s| s.dir == super::partition::Direction::Add)
    }

    /// Whether the last shape is `(m,…,m)`.
    pub fn ends_rectangular(&self) -> bool {
        let last = self.shapes.last().unwrap().parts();
        last.iter().all(|&p| p == last[0])
    }

    pub fn to_json(&self) -> GotJson {
        GotJson {
            n: self.n,
            k: self.k(),
            shapes: self.shapes.iter().map(|s| s.parts().to_vec()).collect(),
        }
    }

    pub fn from_json(json: &GotJson) -> Result<Self, GotError> {
        let got = Got::validate(&json.shapes, json.n)?;
        if got.k() != json.k {
            return Err(GotError::LengthMismatch {
                declared: json.k,
                actual: got.k(),
            });
        }
        Ok(got)
    }
}

impl Serialize for Got {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Got {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let json = GotJson::deserialize(d)?;
        Got::from_json(&json).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Got {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, s) in self.shapes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn introduction_example_is_valid() {
        let shapes: Vec<Vec<i32>> = vec![
            vec![],
            vec![1, 0],
            vec![1, -1],
            vec![2, -1],
            vec![2, 0],
            vec![1, 0],
        ];
        let got = Got::validate(&shapes, 2).unwrap();
        assert_eq!(got.k(), 5);
    }

    #[test]
    fn length_zero() {
        let got = Got::validate(&[Vec::<i32>::new()], 4).unwrap();
        assert_eq!(got.k(), 0);
        assert_eq!(got, Got::empty(4));
    }

    #[test]
    fn sequence_with_no_valid_part_count() {
        let shapes: Vec<Vec<i32>> = vec![vec![], vec![-1], vec![], vec![1], vec![2], vec![2, 1]];
        for n in 1..=8 {
            let err = Got::validate(&shapes, n).unwrap_err();
            assert!(
                matches!(
                    err,
                    GotError::NotWeaklyDecreasing(_) | GotError::BadStep(_) | GotError::TooManyParts(_)
                ),
                "n={n}: {err:?}"
            );
        }
    }

    #[test]
    fn bad_start_and_bad_step() {
        assert_eq!(
            Got::validate(&[vec![1, 0]], 2).unwrap_err(),
            GotError::BadStart
        );
        assert_eq!(
            Got::validate(&[vec![0, 0], vec![2, 0]], 2).unwrap_err(),
            GotError::BadStep(1)
        );
        assert_eq!(
            Got::validate(&[vec![0, 0], vec![1, 0], vec![1, 0]], 2).unwrap_err(),
            GotError::BadStep(2)
        );
        assert_eq!(
            Got::validate(&[vec![0, 0], vec![0, 1]], 2).unwrap_err(),
            GotError::NotWeaklyDecreasing(1)
        );
    }

    #[test]
    fn json_shape() {
        let got = Got::validate(&[vec![], vec![1]], 2).unwrap();
        let s = serde_json::to_string(&got).unwrap();
        assert_eq!(s, r#"{"n":2,"k":1,"shapes":[[0,0],[1,0]]}"#);
        let back: Got = serde_json::from_str(&s).unwrap();
        assert_eq!(back, got);
        assert!(serde_json::from_str::<Got>(r#"{"n":2,"k":2,"shapes":[[0,0],[1,0]]}"#).is_err());
    }
}
