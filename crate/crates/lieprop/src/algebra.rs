//! Structure constants, Lie bracket and Killing form for su(2) and su(1,1)
//! in the adjoint R^3 picture.
//!
//! Conventions: generators satisfy `[S_j, S_m] = i sum_l w_{jml} S_l` and the
//! bracket on coefficient vectors is `(a x b)_l = sum_{jm} a_j b_m w_{jml}`.
//! The Killing form is returned in closed form, signature (-,-,-) for su(2)
//! and (-,-,+) for su(1,1):
//!
//! * su(2):  `<a|b> = -2 (a1 b1 + a2 b2 + a3 b3)`
//! * su(1,1): `<a|b> = -2 a1 b1 - 2 a2 b2 + 2 a3 b3`
//!
//! [`killing_from_contraction`] computes `-tr(ad_a ad_b)` from the structure
//! constant table as an independent route. For su(1,1) it equals the closed
//! form; for su(2) it equals its negative (the closed form above is kept as
//! the normative value, the contraction route is a cross-check on the table).

use serde::{Deserialize, Serialize};

/// Selects one of the two supported Lie algebras.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    Su2,
    Su11,
}

impl AlgebraKind {
    pub fn name(self) -> &'static str {
        match self {
            AlgebraKind::Su2 => "su2",
            AlgebraKind::Su11 => "su11",
        }
    }
}

impl std::fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Coefficients `a = (a1, a2, a3)` of an algebra element `sum_j a_j S_j`.
///
/// Components are always finite; the constructor rejects NaN/Inf.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AdjointVector([f64; 3]);

impl AdjointVector {
    pub fn new(a1: f64, a2: f64, a3: f64) -> Self {
        assert!(
            a1.is_finite() && a2.is_finite() && a3.is_finite(),
            "adjoint vector components must be finite, got ({a1}, {a2}, {a3})"
        );
        Self([a1, a2, a3])
    }

    pub fn from_array(a: [f64; 3]) -> Self {
        Self::new(a[0], a[1], a[2])
    }

    pub fn components(self) -> [f64; 3] {
        self.0
    }

    pub fn a1(self) -> f64 {
        self.0[0]
    }

    pub fn a2(self) -> f64 {
        self.0[1]
    }

    pub fn a3(self) -> f64 {
        self.0[2]
    }

    /// Transverse radius `z = sqrt(a1^2 + a2^2)`.
    pub fn z(self) -> f64 {
        self.0[0].hypot(self.0[1])
    }

    /// su(2) radial scale `lambda = sqrt(z^2 + a3^2)`.
    pub fn lambda(self) -> f64 {
        self.z().hypot(self.0[2])
    }

    /// su(1,1) radial scale `mu = sqrt(|z^2 - a3^2|)`.
    pub fn mu(self) -> f64 {
        let z = self.z();
        (z * z - self.0[2] * self.0[2]).abs().sqrt()
    }

    /// `lambda` for su(2), `mu` for su(1,1).
    pub fn radial_scale(self, kind: AlgebraKind) -> f64 {
        match kind {
            AlgebraKind::Su2 => self.lambda(),
            AlgebraKind::Su11 => self.mu(),
        }
    }

    pub fn scaled(self, c: f64) -> Self {
        Self::new(c * self.0[0], c * self.0[1], c * self.0[2])
    }

    pub fn add(self, other: Self) -> Self {
        Self::new(
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        )
    }

    pub fn sub(self, other: Self) -> Self {
        self.add(other.scaled(-1.0))
    }

    /// Euclidean norm of the component vector (not the Killing norm).
    pub fn euclidean_norm(self) -> f64 {
        self.lambda()
    }
}

/// Antisymmetric structure constant table `w[j][m][l]`.
///
/// Stored explicitly so that bracket and Killing form can both be derived
/// from the same table and cross-checked against the closed forms.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    omega: [[[f64; 3]; 3]; 3],
}

const fn table_from_entries(entries: [(usize, usize, usize, f64); 6]) -> [[[f64; 3]; 3]; 3] {
    let mut w = [[[0.0; 3]; 3]; 3];
    let mut i = 0;
    while i < 6 {
        let (j, m, l, v) = entries[i];
        w[j - 1][m - 1][l - 1] = v;
        i += 1;
    }
    w
}

static SU2_TABLE: StructureConstants = StructureConstants {
    omega: table_from_entries([
        (1, 2, 3, 1.0),
        (2, 3, 1, 1.0),
        (3, 1, 2, 1.0),
        (1, 3, 2, -1.0),
        (2, 1, 3, -1.0),
        (3, 2, 1, -1.0),
    ]),
};

static SU11_TABLE: StructureConstants = StructureConstants {
    omega: table_from_entries([
        (1, 2, 3, 1.0),
        (3, 2, 1, 1.0),
        (1, 3, 2, 1.0),
        (2, 1, 3, -1.0),
        (2, 3, 1, -1.0),
        (3, 1, 2, -1.0),
    ]),
};

impl StructureConstants {
    pub fn for_kind(kind: AlgebraKind) -> &'static StructureConstants {
        match kind {
            AlgebraKind::Su2 => &SU2_TABLE,
            AlgebraKind::Su11 => &SU11_TABLE,
        }
    }

    /// `w_{jml}` with 1-based indices.
    pub fn omega(&self, j: usize, m: usize, l: usize) -> f64 {
        self.omega[j - 1][m - 1][l - 1]
    }
}

/// Bracket on raw component arrays, `(a x b)_l = sum_{jm} a_j b_m w_{jml}`.
pub(crate) fn bracket_components(kind: AlgebraKind, a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    let w = StructureConstants::for_kind(kind);
    let mut out = [0.0; 3];
    for l in 0..3 {
        let mut s = 0.0;
        for j in 0..3 {
            for m in 0..3 {
                let c = w.omega[j][m][l];
                if c != 0.0 {
                    s += a[j] * b[m] * c;
                }
            }
        }
        out[l] = s;
    }
    out
}

/// Lie bracket `a x b` of adjoint vectors.
pub fn bracket(kind: AlgebraKind, a: AdjointVector, b: AdjointVector) -> AdjointVector {
    AdjointVector::from_array(bracket_components(kind, a.components(), b.components()))
}

/// Killing form in closed form (normative values).
pub fn killing(kind: AlgebraKind, a: AdjointVector, b: AdjointVector) -> f64 {
    let [a1, a2, a3] = a.components();
    let [b1, b2, b3] = b.components();
    match kind {
        AlgebraKind::Su2 => -2.0 * (a1 * b1 + a2 * b2 + a3 * b3),
        AlgebraKind::Su11 => -2.0 * a1 * b1 - 2.0 * a2 * b2 + 2.0 * a3 * b3,
    }
}

/// Killing norm `<a|a>`.
pub fn killing_norm(kind: AlgebraKind, a: AdjointVector) -> f64 {
    killing(kind, a, a)
}

/// Killing form computed by double contraction of the structure constants,
/// `-sum_{mn} (sum_j w_{jmn} a_j)(sum_l w_{lnm} b_l) = -tr(ad_a ad_b)`.
///
/// Equals [`killing`] for su(1,1) and `-killing` for su(2).
pub fn killing_from_contraction(kind: AlgebraKind, a: AdjointVector, b: AdjointVector) -> f64 {
    let w = StructureConstants::for_kind(kind);
    let av = a.components();
    let bv = b.components();
    let mut total = 0.0;
    for m in 0..3 {
        for n in 0..3 {
            let mut first = 0.0;
            let mut second = 0.0;
            for j in 0..3 {
                first += w.omega[j][m][n] * av[j];
                second += w.omega[j][n][m] * bv[j];
            }
            total += first * second;
        }
    }
    -total
}
