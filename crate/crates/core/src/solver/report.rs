use num_complex::Complex64;

use super::params::SolverParams;

/// Identity a [`ResidualReport`] checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// f(z, y+x) + z f(z, y) = z g(y)
    FunctionalEquation,
    /// real-axis and contour representations of f agree
    RepresentationEquivalence,
    /// contour representation does not depend on a
    AbscissaIndependence,
    /// (1/2πi)(I_{a+1} − I_a) = g(y)
    ContourShiftResidue,
    /// f̄(z, ρ+x) + z f̄(z, ρ) = 0 at a zero ρ
    ZeroCriterion,
    /// H(t) = t⁻¹ H(1/t)
    KernelSelfReciprocity,
    /// g(s) = g(1 − s)
    MellinSymmetry,
}

impl Identity {
    pub fn label(self) -> &'static str {
        match self {
            Identity::FunctionalEquation => "functional_equation",
            Identity::RepresentationEquivalence => "representation_equivalence",
            Identity::AbscissaIndependence => "abscissa_independence",
            Identity::ContourShiftResidue => "contour_shift_residue",
            Identity::ZeroCriterion => "zero_criterion",
            Identity::KernelSelfReciprocity => "kernel_self_reciprocity",
            Identity::MellinSymmetry => "mellin_symmetry",
        }
    }
}

/// Which representation of f fed the check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representation {
    RealAxis,
    Contour,
    Both,
    /// The check does not evaluate f.
    None,
}

impl Representation {
    pub fn label(self) -> &'static str {
        match self {
            Representation::RealAxis => "real_axis",
            Representation::Contour => "contour",
            Representation::Both => "both",
            Representation::None => "none",
        }
    }
}

/// Outcome of one identity check. `passed` is always `residual <= tolerance`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport {
    pub identity: Identity,
    pub params: Option<SolverParams>,
    pub representation: Representation,
    /// The main computed quantity: the left-hand side of the identity, or
    /// the residue for the contour-shift check.
    pub value: Complex64,
    pub residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub evaluations: usize,
}

impl ResidualReport {
    pub fn new(
        identity: Identity,
        params: Option<SolverParams>,
        representation: Representation,
        value: Complex64,
        residual: f64,
        tolerance: f64,
        evaluations: usize,
    ) -> Self {
        Self {
            identity,
            params,
            representation,
            value,
            residual,
            tolerance,
            passed: residual <= tolerance,
            evaluations,
        }
    }
}
