use std::f64::consts::{PI, SQRT_2};

use linalg_core::{commutator, lagrange_projector, OperatorMatrix, C64};

use crate::{build_so3_realization, CircleModel};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum O2Kind {
    Rotation(f64),
    Reflection,
}

#[derive(Debug, Clone)]
pub struct O2Transformed {
    pub unitary: OperatorMatrix,
    pub xi_plus: OperatorMatrix,
    pub xi_minus: OperatorMatrix,
    pub l_bar: OperatorMatrix,
}

pub fn o2_transform(model: &CircleModel, kind: O2Kind) -> O2Transformed {
    let so3 = build_so3_realization(model);
    let unitary = match kind {
        O2Kind::Rotation(theta) => {
            let phases: Vec<C64> = model.ms().map(|m| C64::from_polar(1.0, theta * m as f64)).collect();
            OperatorMatrix::diag_complex(&phases)
        }
        O2Kind::Reflection => {
            let jx = (&so3.e_plus + &so3.e_minus).scale_real(1.0 / SQRT_2);
            jx.exp_i_hermitian(PI).expect("J_x is Hermitian")
        }
    };
    O2Transformed {
        xi_plus: model.xi_plus.conjugate_by(&unitary),
        xi_minus: model.xi_minus.conjugate_by(&unitary),
        l_bar: model.l_bar.conjugate_by(&unitary),
        unitary,
    }
}

impl O2Transformed {
    /// Largest residual of the commutator and R² relations written in terms
    /// of the transformed operators, with edge projectors taken as
    /// polynomials in the transformed L̄.
    pub fn relation_residual(&self, model: &CircleModel) -> f64 {
        let n = model.dim();
        let id = OperatorMatrix::identity(n);
        let lam = model.lambda as f64;
        let spectrum: Vec<f64> = model.ms().map(|m| m as f64).collect();
        let top = lagrange_projector(&self.l_bar, &spectrum, lam);
        let bottom = lagrange_projector(&self.l_bar, &spectrum, -lam);
        let mu = model.mu();
        let comm = commutator(&self.xi_plus, &self.xi_minus).unwrap();
        let want = &self.l_bar.scale_real(-1.0 / model.k) + &(&top - &bottom).scale_real(mu / 2.0);
        let r2 = &(&self.xi_plus * &self.xi_minus) + &(&self.xi_minus * &self.xi_plus);
        let l2 = &self.l_bar * &self.l_bar;
        let r2_want = &(&id + &l2.scale_real(1.0 / model.k)) - &(&top + &bottom).scale_real(mu / 2.0);
        comm.max_diff(&want).max(r2.max_diff(&r2_want))
    }
}
