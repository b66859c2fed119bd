use thiserror::Error;

use super::signature::{Color, Entry, SignatureStateString, State};
use crate::tableaux::{Direction, Got, Step};

/// Net step counts `(c₁, c₂, c₃)` in the three row directions.
pub type Point = [i32; 3];

pub fn in_chamber(p: Point) -> bool {
    p[0] >= p[1] && p[1] >= p[2]
}

pub fn on_upper_ray(p: Point) -> bool {
    p[0] == p[1]
}

pub fn on_lower_ray(p: Point) -> bool {
    p[1] == p[2]
}

/// The apex of the chamber (all counts equal).
pub fn at_origin(p: Point) -> bool {
    on_upper_ray(p) && on_lower_ray(p)
}

/// Moves `p` one step in the direction of `e`.
pub fn step_point(mut p: Point, e: Entry) -> Point {
    let delta = match e.color {
        Color::B => 1,
        Color::W => -1,
    };
    p[e.state.row() - 1] += delta;
    p
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StringError {
    #[error("path leaves the chamber after step {0}")]
    LeavesChamber(usize),
    #[error("tableau has {0} parts, expected 3")]
    NotThreeRows(usize),
    #[error("string is not dominant")]
    NotDominant,
    #[error("path never returns to the required extreme ray")]
    NoReturn,
}

/// The lattice path of a string, one point per prefix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantPath {
    points: Vec<Point>,
}

impl DominantPath {
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> Point {
        self.points[i]
    }

    pub fn end(&self) -> Point {
        *self.points.last().unwrap()
    }

    /// First index whose point is outside the chamber.
    pub fn first_exit(&self) -> Option<usize> {
        self.points.iter().position(|&p| !in_chamber(p))
    }

    pub fn in_chamber(&self) -> bool {
        self.first_exit().is_none()
    }
}

pub fn path_from_string(s: &SignatureStateString) -> DominantPath {
    let mut points = Vec::with_capacity(s.len() + 1);
    let mut p = [0; 3];
    points.push(p);
    for &e in s.entries() {
        p = step_point(p, e);
        points.push(p);
    }
    DominantPath { points }
}

/// Stays in the chamber and ends with equal counts. The empty string is dominant.
pub fn is_dominant(s: &SignatureStateString) -> bool {
    let path = path_from_string(s);
    path.in_chamber() && at_origin(path.end())
}

pub fn got_from_string(s: &SignatureStateString) -> Result<Got, StringError> {
    let path = path_from_string(s);
    if let Some(i) = path.first_exit() {
        return Err(StringError::LeavesChamber(i));
    }
    let steps: Vec<Step> = s
        .entries()
        .iter()
        .map(|e| Step {
            row: e.state.row(),
            dir: match e.color {
                Color::B => Direction::Add,
                Color::W => Direction::Remove,
            },
        })
        .collect();
    Ok(Got::from_steps(3, &steps).expect("in-chamber path is a tableau"))
}

pub fn string_from_got(got: &Got) -> Result<SignatureStateString, StringError> {
    if got.n() != 3 {
        return Err(StringError::NotThreeRows(got.n()));
    }
    Ok(got
        .steps()
        .into_iter()
        .map(|st| {
            let state = State::from_row(st.row).unwrap();
            match st.dir {
                Direction::Add => Entry::black(state),
                Direction::Remove => Entry::white(state),
            }
        })
        .collect::<Vec<_>>()
        .into())
}

type RayTest = fn(Point) -> bool;

/// Positions `(a, b)` of the first returns to the extreme rays.
///
/// When the string starts black, `a` is the first `i > 0` on the upper ray and
/// `b` the first `i > a` on the lower ray; a white start swaps the rays.
pub fn first_return_indices(s: &SignatureStateString) -> Result<(usize, usize), StringError> {
    if !is_dominant(s) || s.is_empty() {
        return Err(StringError::NotDominant);
    }
    let path = path_from_string(s);
    let (first, second): (RayTest, RayTest) = match s.at(1).color {
        Color::B => (on_upper_ray, on_lower_ray),
        Color::W => (on_lower_ray, on_upper_ray),
    };
    let a = (1..path.points().len())
        .find(|&i| first(path.point(i)))
        .ok_or(StringError::NoReturn)?;
    let b = (a + 1..path.points().len())
        .find(|&i| second(path.point(i)))
        .ok_or(StringError::NoReturn)?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(pairs: &[(i8, char)]) -> SignatureStateString {
        SignatureStateString::from_pairs(pairs)
    }

    fn eleven_vertex_string() -> SignatureStateString {
        s(&[
            (1, 'B'),
            (1, 'B'),
            (-1, 'W'),
            (0, 'B'),
            (-1, 'W'),
            (0, 'B'),
            (-1, 'B'),
            (-1, 'B'),
            (0, 'W'),
            (1, 'W'),
            (-1, 'B'),
        ])
    }

    #[test]
    fn path_points() {
        assert_eq!(path_from_string(&s(&[(1, 'B')])).points(), &[[0, 0, 0], [1, 0, 0]]);
        assert_eq!(
            path_from_string(&s(&[(-1, 'W'), (0, 'W'), (1, 'W')])).points(),
            &[[0, 0, 0], [0, 0, -1], [0, -1, -1], [-1, -1, -1]]
        );
        assert_eq!(path_from_string(&eleven_vertex_string()).end(), [1, 1, 1]);
    }

    #[test]
    fn dominance() {
        assert!(is_dominant(&eleven_vertex_string()));
        assert!(!is_dominant(&s(&[(1, 'W')])));
        assert!(!is_dominant(&s(&[(1, 'B')])));
        assert!(is_dominant(&SignatureStateString::default()));
    }

    #[test]
    fn string_to_tableau() {
        let st = s(&[
            (-1, 'W'),
            (0, 'W'),
            (1, 'B'),
            (0, 'B'),
            (-1, 'W'),
            (0, 'B'),
            (0, 'W'),
            (-1, 'B'),
            (-1, 'B'),
        ]);
        let got = got_from_string(&st).unwrap();
        let expected = Got::validate(
            &[
                vec![0, 0, 0],
                vec![0, 0, -1],
                vec![0, -1, -1],
                vec![1, -1, -1],
                vec![1, 0, -1],
                vec![1, 0, -2],
                vec![1, 1, -2],
                vec![1, 0, -2],
                vec![1, 0, -1],
                vec![1, 0, 0],
            ],
            3,
        )
        .unwrap();
        assert_eq!(got, expected);
        assert_eq!(string_from_got(&got).unwrap(), st);
        assert_eq!(got_from_string(&SignatureStateString::default()).unwrap(), Got::empty(3));
        assert_eq!(
            got_from_string(&s(&[(1, 'B'), (1, 'W')])).unwrap(),
            Got::validate(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 0, 0]], 3).unwrap()
        );
        assert_eq!(
            got_from_string(&s(&[(0, 'B')])),
            Err(StringError::LeavesChamber(1))
        );
        assert_eq!(string_from_got(&Got::empty(2)), Err(StringError::NotThreeRows(2)));
    }

    #[test]
    fn extreme_ray_returns() {
        let word = |w: &[i8]| s(&w.iter().map(|&x| (x, 'B')).collect::<Vec<_>>());
        assert_eq!(first_return_indices(&word(&[1, 0, -1])), Ok((2, 3)));
        assert_eq!(
            first_return_indices(&word(&[1, 1, 0, 1, -1, 0, 0, -1, -1])),
            Ok((7, 9))
        );
        assert_eq!(
            first_return_indices(&s(&[(1, 'B'), (0, 'B'), (0, 'W'), (1, 'W')])),
            Ok((2, 3))
        );
        assert_eq!(
            first_return_indices(&s(&[(1, 'B')])),
            Err(StringError::NotDominant)
        );
    }
}
