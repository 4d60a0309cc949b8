//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::process::ExitCode;
use std::time::Instant;

use bc1_jacobi::classical::{
    decompose_e, monic_uniqueness_check, shift_check, transmute_check, weight_diagonalization_check,
    JacobiParams,
};
use bc1_jacobi::nonsym::NonsymFamily;
use bc1_jacobi::quadrature::gauss_jacobi_rule;
use bc1_jacobi::rational::{int, rat};
use bc1_jacobi::spherical::{generator_eigen_check, identification_check, SphericalKind, SphericalOp};
use bc1_jacobi::suite::crosscheck;
use bc1_jacobi::transport::gamma;
use bc1_jacobi::vector::{
    build_p, gamma_star_apply, gamma_star_check, matrix_family_checks, matrix_orthogonality_check, GammaForm,
};
use bc1_jacobi::{LaurentPoly, Multiplicity, VecLaurent2};

const K_SET: [(i64, i64); 5] = [(0, 1), (1, 1), (2, 1), (1, 2), (3, 2)];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ks() -> impl Iterator<Item = Multiplicity> {
    K_SET.iter().map(|&(a, b)| Multiplicity::exact(a, b).unwrap())
}

fn family(k: &Multiplicity) -> NonsymFamily {
    NonsymFamily::new(k).unwrap()
}

fn eigenvalue_law() -> Outcome {
    let mut checked = 0;
    for k in ks() {
        let mut f = family(&k);
        for n in -8..=8 {
            let v = f.eigen_check(n).map_err(|e| e.to_string())?;
            if !v.holds() {
                return Err(v.to_string());
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} eigen-identities with zero residual"))
}

fn subleading_coefficient() -> Outcome {
    for k in ks() {
        let mut f = family(&k);
        for n in 0..=8 {
            let v = f.subleading_check(n).map_err(|e| e.to_string())?;
            if !v.holds() {
                return Err(v.to_string());
            }
        }
    }
    let e1 = family(&Multiplicity::exact(1, 1).unwrap()).e(1).unwrap().clone();
    if e1.coeff(0) != rat(1, 4) {
        return Err(format!("E(1,(1,1)) = {e1}"));
    }
    Ok("k1/(1+2n+2ρ) for n in 0..=8; 1/4 at k=(1,1), n=0".into())
}

fn example_reproduction() -> Outcome {
    for k in ks() {
        let mut f = family(&k);
        let c = k.k1() / (int(1) + k.rho() * int(2));
        let p0 = build_p(&mut f, 0).map_err(|e| e.to_string())?;
        let p1 = build_p(&mut f, 1).map_err(|e| e.to_string())?;
        let want0 = VecLaurent2::new(LaurentPoly::one(), LaurentPoly::one());
        let want1 = VecLaurent2::new(
            LaurentPoly::from_terms([(1, int(1)), (0, c.clone())]),
            LaurentPoly::from_terms([(-1, int(1)), (0, c.clone())]),
        );
        if p0 != want0 || p1 != want1 {
            return Err(format!("k={k}: P(0)={p0:?} P(1)={p1:?}"));
        }
        for form in [GammaForm::First, GammaForm::Second] {
            let g0 = gamma_star_apply(&k, &p0, form).map_err(|e| e.to_string())?;
            let g1 = gamma_star_apply(&k, &p1, form).map_err(|e| e.to_string())?;
            if g0 != p0.scale(&-k.rho()) || g1 != p1.scale(&(int(1) + k.rho())) {
                return Err(format!("k={k}: eigenvalues off for {form:?}"));
            }
        }
    }
    Ok("P(0), P(1) and eigenvalues -ρ, 1+ρ for all five k".into())
}

fn form_equivalence() -> Outcome {
    let mut n = 0;
    for k in ks() {
        for j in -10..=10 {
            let v = gamma_star_check(&k, &LaurentPoly::monomial(j)).map_err(|e| e.to_string())?;
            if !v.holds() {
                return Err(v.to_string());
            }
            n += 1;
        }
    }
    Ok(format!("{n} inputs Γ(z^j), |j| <= 10: both forms equal Γ(D_k z^j)"))
}

fn matrix_family() -> Outcome {
    for k in ks() {
        let mut f = family(&k);
        for big_n in 0..=6 {
            for v in matrix_family_checks(&mut f, big_n).map_err(|e| e.to_string())? {
                if !v.holds() {
                    return Err(v.to_string());
                }
            }
            for big_m in 0..=6 {
                let v = matrix_orthogonality_check(&mut f, big_n, big_m).map_err(|e| e.to_string())?;
                if !v.holds() {
                    return Err(v.to_string());
                }
            }
        }
    }
    Ok("C_N(k), mat_pair orthogonality and 𝒟_k ℳ = ℳ Λ for N, M <= 6".into())
}

fn diagonalization() -> Outcome {
    let w = weight_diagonalization_check();
    if !w.holds() {
        return Err(w.to_string());
    }
    for k in ks() {
        let mut f = family(&k);
        for big_n in 0..=6 {
            let v = monic_uniqueness_check(&mut f, big_n).map_err(|e| e.to_string())?;
            if !v.holds() {
                return Err(v.to_string());
            }
        }
    }
    Ok("U𝒲U^T = 2 diag(1-x, 1+x); monic families agree for N <= 6".into())
}

fn decomposition() -> Outcome {
    let mut stated_prefactor_hits = 0;
    let mut stated_companion_hits = 0;
    let mut total = 0;
    for k in ks() {
        let mut f = family(&k);
        for big_n in 0..=6 {
            let d = decompose_e(&mut f, big_n).map_err(|e| format!("k={k} N={big_n}: {e}"))?;
            if d.sigma != d.sigma_closed_form {
                return Err(format!("k={k} N={big_n}: sigma {} vs {}", d.sigma, d.sigma_closed_form));
            }
            total += 1;
            stated_prefactor_hits += usize::from(d.stated_prefactor_matches());
            stated_companion_hits += usize::from(d.stated_companion_matches);
        }
    }
    Ok(format!(
        "{total} cases reconstructed with σ_N = 2^(2N-1) N!/(N+α+β+2)_N; N!/(α+β+1)_N agrees in \
         {stated_prefactor_hits}/{total}, companion form as stated in {stated_companion_hits}/{total}"
    ))
}

fn shift_identities() -> Outcome {
    for (a, b) in [(rat(3, 2), rat(1, 2)), (rat(5, 2), rat(1, 2)), (rat(7, 2), rat(3, 2))] {
        let p = JacobiParams::new(a, b);
        for n in 0..=12 {
            let v = shift_check(&p, n);
            if !v.holds() {
                return Err(v.to_string());
            }
        }
    }
    Ok("both shift identities for N <= 12 at three parameter pairs".into())
}

fn transmutation() -> Outcome {
    for (a, b) in [(1, 1), (0, 1)] {
        let v = transmute_check(&Multiplicity::exact(a, b).unwrap(), 8).map_err(|e| e.to_string())?;
        if !v.holds() {
            return Err(v.to_string());
        }
    }
    Ok("𝒟_{k'}∂ = ∂𝒟_k on E_ij x^d, d <= 8, k = (1,1), (0,1)".into())
}

fn spherical_identification() -> Outcome {
    for m in 1..=5 {
        let v = identification_check(m, 10).map_err(|e| e.to_string())?;
        if !v.holds() {
            return Err(v.to_string());
        }
        let g = generator_eigen_check(m).map_err(|e| e.to_string())?;
        if !g.holds() {
            return Err(g.to_string());
        }
    }
    let r = SphericalOp::new(1, SphericalKind::R).unwrap();
    let plus = gamma(&LaurentPoly::monomial(1));
    let minus = gamma(&LaurentPoly::monomial(-1));
    let rp = bc1_jacobi::spherical::spherical_apply(&r, &plus).map_err(|e| e.to_string())?;
    let rm = bc1_jacobi::spherical::spherical_apply(&r, &minus).map_err(|e| e.to_string())?;
    if rp != plus.scale(&int(3)) || rm != minus.scale(&int(-3)) {
        return Err("m=1 eigenvalues are not 3 and -3".into());
    }
    Ok("Q_m + I = Γ_*(D_(0,m)) at scale 2 for m <= 5, degree <= 10; eigenvalues ±(2m+1)".into())
}

fn dual_engine() -> Outcome {
    let mut worst: f64 = 0.0;
    let mut cases = 0;
    for k2 in 0..=3i64 {
        for k1 in 0..=(6 - 2 * k2) {
            let r = crosscheck(&Multiplicity::exact(k1, k2).unwrap(), 12, 1e-10).map_err(|e| e.to_string())?;
            if !r.passed() {
                return Err(r.verdict().to_string());
            }
            worst = worst.max(r.max_deviation);
            cases += 1;
        }
    }
    for n in 1..=12 {
        let rule = gauss_jacobi_rule(0.5, -0.5, n).map_err(|e| e.to_string())?;
        let err = (rule.integrate(|_| 1.0) - std::f64::consts::PI).abs();
        if err > 1e-13 {
            return Err(format!("{n}-point rule mass off by {err:e}"));
        }
    }
    Ok(format!("{cases} multiplicities, max relative deviation {worst:.2e}; mass π to 1e-13"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("eigenvalue law", eigenvalue_law),
        ("subleading coefficient", subleading_coefficient),
        ("example reproduction", example_reproduction),
        ("form equivalence", form_equivalence),
        ("matrix family", matrix_family),
        ("diagonalization", diagonalization),
        ("decomposition", decomposition),
        ("shift identities", shift_identities),
        ("transmutation", transmutation),
        ("spherical identification", spherical_identification),
        ("dual-engine consistency", dual_engine),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS {name} ({secs:.2}s): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.2}s): {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
