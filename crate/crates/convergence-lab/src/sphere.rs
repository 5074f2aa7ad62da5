use fuzzy_sphere::{build_fuzzy_harmonics, build_sphere, FuzzyHarmonicSet, SphereModel};
use harmonics::{LadderTable, SphereGrid};
use linalg_core::{OperatorMatrix, C64};
use rayon::prelude::*;

use crate::{
    check_grid, check_lambdas, check_normalized, prop_sphere_k, DecayRow, DecayTable, KSchedule, LabError, ProductRow,
    ProductTable, Result, TruncatedSphFn, YlmTable,
};

/// `f̂_Λ = Σ f_l^m Ŷ_l^m` over the degrees present in `harmonics`; the rest
/// of `f` is dropped.
pub fn fhat_sphere(f: &TruncatedSphFn, model: &SphereModel, harmonics: &FuzzyHarmonicSet) -> OperatorMatrix {
    let mut out = OperatorMatrix::zeros(model.dim());
    for l in 0..=f.degree().min(harmonics.l_max) {
        for m in -(l as i32)..=l as i32 {
            let c = f.get(l, m);
            if c != C64::new(0.0, 0.0) {
                out += &harmonics.get(l, m).scale(c);
            }
        }
    }
    out
}

/// Coefficients of the pointwise product of `fs`, by quadrature.
pub fn sphere_product(fs: &[&TruncatedSphFn], grid: &SphereGrid) -> Result<TruncatedSphFn> {
    let degree: usize = fs.iter().map(|f| f.degree()).sum();
    check_grid(grid, degree)?;
    let table = YlmTable::new(grid, degree);
    let mut samples = vec![C64::new(1.0, 0.0); grid.len()];
    for f in fs {
        for (s, v) in samples.iter_mut().zip(table.synthesize(f)) {
            *s *= v;
        }
    }
    Ok(table.analyze(&samples, degree))
}

struct Fuzzy {
    model: SphereModel,
    harmonics: FuzzyHarmonicSet,
}

fn build(schedule: &KSchedule, lambda: usize, degree: usize) -> Result<Fuzzy> {
    let k = schedule.k(lambda);
    if !(k > 0.0 && k.is_finite()) {
        return Err(LabError::BadSchedule { lambda, k });
    }
    let model = build_sphere(lambda, k, &LadderTable::new(lambda))?;
    let harmonics = build_fuzzy_harmonics(&model, degree.min(2 * lambda))?;
    Ok(Fuzzy { model, harmonics })
}

fn band_vector(phi: &TruncatedSphFn, model: &SphereModel) -> Vec<C64> {
    let mut v = vec![C64::new(0.0, 0.0); model.dim()];
    for l in 0..=model.lambda {
        for m in -(l as i32)..=l as i32 {
            v[model.index(l as i32, m)] = phi.get(l, m);
        }
    }
    v
}

fn distance(target: &TruncatedSphFn, v: &[C64], model: &SphereModel) -> f64 {
    let mut inside = 0.0;
    for l in 0..=model.lambda {
        for m in -(l as i32)..=l as i32 {
            inside += (target.get(l, m) - v[model.index(l as i32, m)]).norm_sqr();
        }
    }
    (inside + target.tail_norm_sqr(model.lambda)).sqrt()
}

/// `‖(f· − f̂_Λ)φ‖` given the product coefficients `fphi`.
pub fn sphere_error(f: &TruncatedSphFn, phi: &TruncatedSphFn, fphi: &TruncatedSphFn, model: &SphereModel, harmonics: &FuzzyHarmonicSet) -> f64 {
    let v = fhat_sphere(f, model, harmonics).apply(&band_vector(phi, model));
    distance(fphi, &v, model)
}

/// Square root of `‖f‖²‖φ‖²/Λ² + Σ_{l>Λ}|(fφ)_l^m|²`, valid for
/// `k >= 2^{3Λ+3}Λ^{Λ+5}(Λ+1)`. `‖f‖` is the L² norm.
pub fn flimit3d_bound(f: &TruncatedSphFn, phi: &TruncatedSphFn, fphi: &TruncatedSphFn, lambda: usize) -> f64 {
    let l = lambda as f64;
    (f.norm_sqr() * phi.norm_sqr() / (l * l) + fphi.tail_norm_sqr(lambda)).sqrt()
}

pub fn strong_convergence_sphere(
    f: &TruncatedSphFn,
    phi: &TruncatedSphFn,
    schedule: &KSchedule,
    lambdas: &[usize],
    grid: &SphereGrid,
) -> Result<DecayTable> {
    check_lambdas(lambdas)?;
    check_normalized(phi.norm())?;
    let fphi = sphere_product(&[f, phi], grid)?;
    let rows = lambdas
        .par_iter()
        .map(|&lambda| {
            let fz = build(schedule, lambda, f.degree())?;
            Ok(DecayRow {
                lambda,
                k: fz.model.k,
                error: sphere_error(f, phi, &fphi, &fz.model, &fz.harmonics),
                bound: flimit3d_bound(f, phi, &fphi, lambda),
                below_schedule: fz.model.k < prop_sphere_k(lambda),
                dropped_terms: f.degree() > 2 * lambda,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(DecayTable { label: "sphere ‖(f − f̂_Λ)φ‖".into(), schedule: schedule.name(), rows })
}

pub fn product_convergence_sphere(
    f: &TruncatedSphFn,
    g: &TruncatedSphFn,
    phi: &TruncatedSphFn,
    schedule: &KSchedule,
    lambdas: &[usize],
    grid: &SphereGrid,
) -> Result<ProductTable> {
    check_lambdas(lambdas)?;
    check_normalized(phi.norm())?;
    let target = sphere_product(&[f, g, phi], grid)?;
    let rows = lambdas
        .par_iter()
        .map(|&lambda| {
            let fz = build(schedule, lambda, f.degree().max(g.degree()))?;
            let fh = fhat_sphere(f, &fz.model, &fz.harmonics);
            let gh = fhat_sphere(g, &fz.model, &fz.harmonics);
            let v = band_vector(phi, &fz.model);
            let fg = fh.apply(&gh.apply(&v));
            let gf = gh.apply(&fh.apply(&v));
            let comm = fg.iter().zip(&gf).map(|(a, b)| (a - b).norm_sqr()).sum::<f64>().sqrt();
            Ok(ProductRow {
                lambda,
                k: fz.model.k,
                product_error: distance(&target, &fg, &fz.model),
                commutator: comm,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ProductTable { label: "sphere f̂_Λ ĝ_Λ vs (fg)".into(), schedule: schedule.name(), rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::product_grid;
    use std::f64::consts::PI;

    fn fuzzy(lambda: usize, k: f64, degree: usize) -> Fuzzy {
        build(&KSchedule::Fixed(k), lambda, degree).unwrap()
    }

    #[test]
    fn scalar_harmonic_is_multiple_of_identity() {
        let fz = fuzzy(2, 36.0, 0);
        let f = fhat_sphere(&TruncatedSphFn::harmonic(0, 0), &fz.model, &fz.harmonics);
        let want = OperatorMatrix::identity(9).scale_real(1.0 / (4.0 * PI).sqrt());
        assert!(f.max_diff(&want) < 1e-16);
    }

    #[test]
    fn t_zero_gives_x_zero() {
        let fz = fuzzy(3, 144.0, 1);
        let f = fhat_sphere(&TruncatedSphFn::t_component(0), &fz.model, &fz.harmonics);
        assert!(f.max_diff(fz.model.xa(0)) < 1e-12);
    }

    #[test]
    fn real_function_gives_hermitian_operator() {
        let f = TruncatedSphFn::from_fn(4, |l, m| {
            let base = C64::new(1.0 / (1.0 + l as f64), 0.2 * l as f64);
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            match m {
                0 => C64::new(base.re, 0.0),
                m if m > 0 => base * (m as f64),
                _ => base.conj() * (-m as f64) * sign,
            }
        });
        assert!(f.is_real(1e-15));
        let fz = fuzzy(2, 36.0, 4);
        assert!(fhat_sphere(&f, &fz.model, &fz.harmonics).hermitian_defect() < 1e-11);
    }

    #[test]
    fn product_of_t_zero_with_harmonic() {
        // t⁰ Y_l^0 = A Y_{l-1}^0 + B Y_{l+1}^0
        let grid = product_grid(4);
        let p = sphere_product(&[&TruncatedSphFn::t_component(0), &TruncatedSphFn::harmonic(3, 0)], &grid).unwrap();
        assert!((p.get(2, 0).re - harmonics::a_coef(0, 3, 0)).abs() < 1e-14);
        assert!((p.get(4, 0).re - harmonics::b_coef(0, 3, 0)).abs() < 1e-14);
        assert!((p.norm_sqr() - p.get(2, 0).norm_sqr() - p.get(4, 0).norm_sqr()).abs() < 1e-14);
    }

    #[test]
    fn rejects_coarse_grid() {
        let f = TruncatedSphFn::t_component(0);
        let phi = TruncatedSphFn::harmonic(2, 0);
        let r = strong_convergence_sphere(&f, &phi, &KSchedule::Default, &[1], &SphereGrid::new(3, 7));
        assert!(matches!(r, Err(LabError::GridTooCoarse { degree: 3, .. })));
    }

    #[test]
    fn constant_is_exact_on_band() {
        let f = TruncatedSphFn::constant(C64::new(1.5, 0.0));
        let phi = TruncatedSphFn::from_fn(2, |l, m| C64::new(1.0 + l as f64, m as f64)).normalized().unwrap();
        let t = strong_convergence_sphere(&f, &phi, &KSchedule::Default, &[2, 3], &product_grid(2)).unwrap();
        for r in &t.rows {
            assert!(r.error < 1e-14, "Λ={}: {}", r.lambda, r.error);
        }
    }
}
