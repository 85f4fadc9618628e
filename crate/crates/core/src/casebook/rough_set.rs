//! Two experts guessing a binary decision `D ∈ {d1, d2}`.
//!
//! Expert 1 observes `E1 ∈ {e11, e12, e13}` pointing at `{d1}`, `{d2}` and
//! `{d1, d2}`; expert 2 observes `E2` likewise. Neither expert ever points at
//! the wrong decision, so `e12` cannot occur under `d1` and so on. The
//! parameters are the prior of `D` and the conditional distribution of each
//! expert's observation given `D`.

use crate::belief::{combine_dempster, MassFunction};
use crate::error::MassError;
use crate::frame::{AtomSet, Frame};
use crate::scalar::{Arithmetic, Scalar};

pub const DECISIONS: [&str; 2] = ["d1", "d2"];

#[derive(Debug, Clone, PartialEq)]
pub struct RoughSetParams {
    /// `P(d1)`.
    pub p1: Scalar,
    /// `P(d2)`.
    pub p2: Scalar,
    /// `P(e11 | d1)` and `P(e13 | d1)`.
    pub e1_d1: Scalar,
    pub e3_d1: Scalar,
    /// `P(e12 | d2)` and `P(e13 | d2)`.
    pub e2_d2: Scalar,
    pub e3_d2: Scalar,
    /// `P(e21 | d1)` and `P(e23 | d1)`.
    pub f1_d1: Scalar,
    pub f3_d1: Scalar,
    /// `P(e22 | d2)` and `P(e23 | d2)`.
    pub f2_d2: Scalar,
    pub f3_d2: Scalar,
}

impl RoughSetParams {
    /// Builds the full parameter set from the five free parameters; the
    /// remaining ones are complements.
    pub fn from_free(
        p1: Scalar,
        e1_d1: Scalar,
        e2_d2: Scalar,
        f1_d1: Scalar,
        f2_d2: Scalar,
    ) -> Result<RoughSetParams, MassError> {
        let mode = [&p1, &e1_d1, &e2_d2, &f1_d1, &f2_d2]
            .iter()
            .fold(Arithmetic::Exact, |acc, v| acc.join(v.mode()));
        let one = Scalar::one(mode);
        let params = RoughSetParams {
            p2: &one - &p1,
            e3_d1: &one - &e1_d1,
            e3_d2: &one - &e2_d2,
            f3_d1: &one - &f1_d1,
            f3_d2: &one - &f2_d2,
            p1,
            e1_d1,
            e2_d2,
            f1_d1,
            f2_d2,
        };
        params.validate()?;
        Ok(params)
    }

    fn all(&self) -> [&Scalar; 10] {
        [
            &self.p1, &self.p2, &self.e1_d1, &self.e3_d1, &self.e2_d2, &self.e3_d2,
            &self.f1_d1, &self.f3_d1, &self.f2_d2, &self.f3_d2,
        ]
    }

    fn mode(&self) -> Arithmetic {
        self.all()
            .iter()
            .fold(Arithmetic::Exact, |acc, v| acc.join(v.mode()))
    }

    /// All values in `[0, 1]` and each of the five pairs sums to 1.
    pub fn validate(&self) -> Result<(), MassError> {
        let mode = self.mode();
        let zero = Scalar::zero(mode);
        let one = Scalar::one(mode);
        for v in self.all() {
            if !v.is_finite() || *v < zero || *v > one {
                return Err(MassError::InvalidParameter(format!("{v} is outside [0, 1]")));
            }
        }
        let pairs = [
            (&self.p1, &self.p2),
            (&self.e1_d1, &self.e3_d1),
            (&self.e2_d2, &self.e3_d2),
            (&self.f1_d1, &self.f3_d1),
            (&self.f2_d2, &self.f3_d2),
        ];
        for (a, b) in pairs {
            let s = a + b;
            if !s.approx_eq(&one, 1e-12) {
                return Err(MassError::InvalidParameter(format!(
                    "complementary pair sums to {s}"
                )));
            }
        }
        Ok(())
    }
}

pub fn decision_frame() -> Frame {
    Frame::new(&DECISIONS).expect("two distinct atoms")
}

const D1: AtomSet = AtomSet::from_bits(0b01);
const D2: AtomSet = AtomSet::from_bits(0b10);
const BOTH: AtomSet = AtomSet::from_bits(0b11);

/// Mass functions of the two experts taken separately.
pub fn rs_expert_masses(
    params: &RoughSetParams,
) -> Result<(MassFunction, MassFunction), MassError> {
    params.validate()?;
    let f = decision_frame();
    let p = params;
    let m1 = MassFunction::new(
        &f,
        [
            (D1, &p.e1_d1 * &p.p1),
            (D2, &p.e2_d2 * &p.p2),
            (BOTH, &(&p.e3_d1 * &p.p1) + &(&p.e3_d2 * &p.p2)),
        ],
    )?;
    let m2 = MassFunction::new(
        &f,
        [
            (D1, &p.f1_d1 * &p.p1),
            (D2, &p.f2_d2 * &p.p2),
            (BOTH, &(&p.f3_d1 * &p.p1) + &(&p.f3_d2 * &p.p2)),
        ],
    )?;
    Ok((m1, m2))
}

/// Mass function of both experts used together when their observations
/// are independent given `D`.
pub fn rs_combined_conditional(params: &RoughSetParams) -> Result<MassFunction, MassError> {
    params.validate()?;
    let p = params;
    let d1 = &p.p1
        * &(&(&(&p.e1_d1 * &p.f1_d1) + &(&p.e1_d1 * &p.f3_d1)) + &(&p.e3_d1 * &p.f1_d1));
    let d2 = &p.p2
        * &(&(&(&p.e2_d2 * &p.f2_d2) + &(&p.e2_d2 * &p.f3_d2)) + &(&p.e3_d2 * &p.f2_d2));
    let both = &(&(&p.e3_d1 * &p.f3_d1) * &p.p1) + &(&(&p.e3_d2 * &p.f3_d2) * &p.p2);
    MassFunction::new(&decision_frame(), [(D1, d1), (D2, d2), (BOTH, both)])
}

/// Largest per-set difference between the conditional-independence
/// combination and Dempster's combination of the two experts.
pub fn rs_gap(params: &RoughSetParams) -> Result<f64, MassError> {
    let conditional = rs_combined_conditional(params)?;
    let (m1, m2) = rs_expert_masses(params)?;
    let dempster = combine_dempster(&m1, &m2)?.result;
    conditional.max_abs_difference(&dempster)
}
