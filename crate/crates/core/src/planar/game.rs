use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The 2x2 payoff matrix `[[g11, g12], [g21, g22]]`; rows are the two
/// linear forms `g11 s1 + g12 s2` and `g21 s1 + g22 s2`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GameMatrix2 {
    pub g11: f64,
    pub g12: f64,
    pub g21: f64,
    pub g22: f64,
}

/// A probability vector `(s1, s2)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProbVector2 {
    pub s1: f64,
    pub s2: f64,
}

impl ProbVector2 {
    pub fn new(s1: f64, s2: f64) -> Result<Self> {
        if !(s1 >= 0.0 && s2 >= 0.0 && (s1 + s2 - 1.0).abs() <= 1e-14) {
            return Err(Error::Domain(format!(
                "({s1}, {s2}) is not a probability vector"
            )));
        }
        Ok(ProbVector2 { s1, s2 })
    }

    /// `(s, 1 - s)` for `s` in `[0, 1]`.
    pub fn from_first(s: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&s) {
            return Err(Error::Domain(format!("{s} is not in [0, 1]")));
        }
        Ok(ProbVector2 { s1: s, s2: 1.0 - s })
    }
}

impl GameMatrix2 {
    pub fn new(g11: f64, g12: f64, g21: f64, g22: f64) -> Self {
        GameMatrix2 { g11, g12, g21, g22 }
    }

    /// The two row payoffs at `s`.
    pub fn payoffs(&self, s: &ProbVector2) -> (f64, f64) {
        (
            self.g11 * s.s1 + self.g12 * s.s2,
            self.g21 * s.s1 + self.g22 * s.s2,
        )
    }

    fn payoff_at(&self, s: f64) -> (f64, f64) {
        (
            self.g11 * s + self.g12 * (1.0 - s),
            self.g21 * s + self.g22 * (1.0 - s),
        )
    }

    /// Value of the game: the maximum over `s` of the smaller row payoff.
    ///
    /// The objective is concave and piecewise linear in `s1`, so its maximum
    /// sits at an endpoint or at the crossing of the two rows.
    pub fn value(&self) -> f64 {
        let mut candidates = vec![0.0, 1.0];
        if let Some(s) = self.crossing() {
            candidates.push(s.clamp(0.0, 1.0));
        }
        candidates
            .into_iter()
            .map(|s| {
                let (p, q) = self.payoff_at(s);
                p.min(q)
            })
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// The dual form: minimum over `s` of the larger row payoff.
    pub fn value_minmax(&self) -> f64 {
        let mut candidates = vec![0.0, 1.0];
        if let Some(s) = self.crossing() {
            candidates.push(s.clamp(0.0, 1.0));
        }
        candidates
            .into_iter()
            .map(|s| {
                let (p, q) = self.payoff_at(s);
                p.max(q)
            })
            .fold(f64::INFINITY, f64::min)
    }

    fn crossing(&self) -> Option<f64> {
        let den = self.g11 - self.g12 - self.g21 + self.g22;
        let num = self.g22 - self.g12;
        (den != 0.0).then(|| num / den)
    }

    /// A probability vector with equal row payoffs, if one exists. When the
    /// rows coincide every vector works and `(1/2, 1/2)` is returned.
    pub fn equalizing_vector(&self) -> Option<ProbVector2> {
        let den = self.g11 - self.g12 - self.g21 + self.g22;
        let num = self.g22 - self.g12;
        let scale = [self.g11, self.g12, self.g21, self.g22]
            .iter()
            .fold(0.0f64, |m, g| m.max(g.abs()))
            .max(f64::MIN_POSITIVE);
        if den.abs() <= 1e-15 * scale {
            return (num.abs() <= 1e-15 * scale).then_some(ProbVector2 { s1: 0.5, s2: 0.5 });
        }
        let s = num / den;
        let slack = 1e-13;
        if s < -slack || s > 1.0 + slack {
            return None;
        }
        let s = s.clamp(0.0, 1.0);
        Some(ProbVector2 { s1: s, s2: 1.0 - s })
    }
}

/// Value of the game with payoff matrix `g`.
pub fn game_value(g: &GameMatrix2) -> f64 {
    g.value()
}

/// See [`GameMatrix2::equalizing_vector`].
pub fn equalizing_vector(g: &GameMatrix2) -> Option<ProbVector2> {
    g.equalizing_vector()
}
