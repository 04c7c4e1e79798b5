use std::f64::consts::PI;

use super::{tol, Poly, ScalarError};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RealRoot {
    pub value: f64,
    pub multiplicity: u8,
}

/// Real roots of a cubic, ascending, with multiplicities.
#[derive(Debug, Clone, PartialEq)]
pub struct CubicRoots {
    pub real_roots: Vec<RealRoot>,
    /// Set when the discriminant says exactly one real root (counted with
    /// multiplicity one) exists.
    pub unique_real: bool,
}

impl CubicRoots {
    pub fn values(&self) -> Vec<f64> {
        self.real_roots.iter().map(|r| r.value).collect()
    }

    pub fn count_with_multiplicity(&self) -> usize {
        self.real_roots
            .iter()
            .map(|r| r.multiplicity as usize)
            .sum()
    }
}

/// Relative width of the band in which the discriminant counts as zero.
const DISCRIMINANT_EPS: f64 = 1e-14;

/// All real roots of a degree-3 polynomial.
///
/// One real root goes through Cardano's radicals, three through the
/// trigonometric form; either way each root is Newton-polished against the
/// original coefficients afterwards.
pub fn solve_cubic(p: &Poly<f64>) -> Result<CubicRoots, ScalarError> {
    if p.degree() != 3 || p.is_zero() {
        return Err(ScalarError::NotCubic(p.degree()));
    }
    let c = p.coeffs();
    let (a3, a2, a1, a0) = (c[3], c[2], c[1], c[0]);
    // monic x³ + b x² + c x + d, then x = t − b/3
    let (b, cc, d) = (a2 / a3, a1 / a3, a0 / a3);
    let shift = b / 3.0;
    let dp = cc - b * b / 3.0;
    let dq = 2.0 * b * b * b / 27.0 - b * cc / 3.0 + d;

    let half_q = dq / 2.0;
    let third_p = dp / 3.0;
    let disc = half_q * half_q + third_p * third_p * third_p;
    let scale = half_q * half_q + third_p.abs().powi(3);

    let mut roots: Vec<RealRoot> = if scale == 0.0 {
        vec![RealRoot {
            value: 0.0,
            multiplicity: 3,
        }]
    } else if disc.abs() <= DISCRIMINANT_EPS * scale {
        let simple = 3.0 * dq / dp;
        let double = -1.5 * dq / dp;
        vec![
            RealRoot {
                value: simple,
                multiplicity: 1,
            },
            RealRoot {
                value: double,
                multiplicity: 2,
            },
        ]
    } else if disc > 0.0 {
        let s = disc.sqrt();
        let t = (-half_q + s).cbrt() + (-half_q - s).cbrt();
        vec![RealRoot {
            value: t,
            multiplicity: 1,
        }]
    } else {
        let m = 2.0 * (-third_p).sqrt();
        let arg = (3.0 * dq / (dp * m)).clamp(-1.0, 1.0);
        let theta = arg.acos() / 3.0;
        (0..3)
            .map(|k| RealRoot {
                value: m * (theta - 2.0 * PI * k as f64 / 3.0).cos(),
                multiplicity: 1,
            })
            .collect()
    };

    for r in &mut roots {
        r.value -= shift;
        if r.multiplicity == 1 {
            r.value = polish(p, r.value);
        }
    }
    roots.sort_by(|l, r| l.value.total_cmp(&r.value));
    let unique_real = roots.len() == 1 && roots[0].multiplicity == 1;
    Ok(CubicRoots {
        real_roots: roots,
        unique_real,
    })
}

/// Real roots of `c0 + c1 x + c2 x²` with `c2 ≠ 0`, ascending.
pub fn solve_quadratic(c0: f64, c1: f64, c2: f64) -> Vec<f64> {
    let disc = c1 * c1 - 4.0 * c2 * c0;
    let scale = (c1 * c1).max((4.0 * c2 * c0).abs());
    if disc < -DISCRIMINANT_EPS * scale {
        return Vec::new();
    }
    if disc.abs() <= DISCRIMINANT_EPS * scale {
        return vec![-c1 / (2.0 * c2)];
    }
    // stable form avoiding cancellation
    let sgn = if c1 >= 0.0 { 1.0 } else { -1.0 };
    let q = -0.5 * (c1 + sgn * disc.sqrt());
    let mut out = if q == 0.0 {
        vec![disc.sqrt() / (2.0 * c2), -disc.sqrt() / (2.0 * c2)]
    } else {
        vec![q / c2, c0 / q]
    };
    out.sort_by(f64::total_cmp);
    out
}

fn polish(p: &Poly<f64>, mut x: f64) -> f64 {
    let dp = p.derivative();
    let mut best = p.eval(&x).abs();
    for _ in 0..16 {
        let fx = p.eval(&x);
        let dfx = dp.eval(&x);
        if fx == 0.0 || dfx == 0.0 {
            break;
        }
        let next = x - fx / dfx;
        let r = p.eval(&next).abs();
        if r >= best {
            break;
        }
        best = r;
        x = next;
    }
    x
}

/// Residual of `x` in the polynomial scaled to unit max coefficient.
pub fn scaled_residual(p: &Poly<f64>, x: f64) -> f64 {
    p.scaled_unit().eval(&x).abs()
}

/// True when every root satisfies the residual bound.
pub fn roots_certified(p: &Poly<f64>, roots: &CubicRoots) -> bool {
    roots
        .real_roots
        .iter()
        .all(|r| scaled_residual(p, r.value) < tol::ROOT_RESIDUAL)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[f64]) -> Poly<f64> {
        Poly::new(c.to_vec())
    }

    #[test]
    fn snub_cube_cubic_has_one_real_root() {
        let p = poly(&[-1.0, 4.0, -4.0, 2.0]);
        let r = solve_cubic(&p).unwrap();
        assert!(r.unique_real);
        assert_eq!(r.real_roots.len(), 1);
        assert!((r.real_roots[0].value - 0.352201129).abs() < 1e-9);
        assert!(roots_certified(&p, &r));
    }

    #[test]
    fn triple_root_at_zero() {
        let r = solve_cubic(&poly(&[0.0, 0.0, 0.0, 1.0])).unwrap();
        assert_eq!(
            r.real_roots,
            vec![RealRoot {
                value: 0.0,
                multiplicity: 3
            }]
        );
        assert!(!r.unique_real);
    }

    #[test]
    fn three_distinct_roots() {
        let p = poly(&[0.0, -1.0, 0.0, 1.0]);
        let r = solve_cubic(&p).unwrap();
        let v = r.values();
        assert_eq!(v.len(), 3);
        for (got, want) in v.iter().zip([-1.0, 0.0, 1.0]) {
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
        assert!(roots_certified(&p, &r));
    }

    #[test]
    fn double_root_is_reported_once_with_multiplicity() {
        // (x − 1)²(x + 2)
        let r = solve_cubic(&poly(&[2.0, -3.0, 0.0, 1.0])).unwrap();
        assert_eq!(r.count_with_multiplicity(), 3);
        assert_eq!(r.real_roots.len(), 2);
        assert!((r.real_roots[0].value + 2.0).abs() < 1e-12);
        assert!((r.real_roots[1].value - 1.0).abs() < 1e-12);
        assert_eq!(r.real_roots[1].multiplicity, 2);
    }

    #[test]
    fn rejects_non_cubics() {
        assert_eq!(
            solve_cubic(&poly(&[1.0, 2.0, 3.0])),
            Err(ScalarError::NotCubic(2))
        );
    }

    #[test]
    fn derivative_of_snub_cube_cubic_is_positive() {
        let dp = poly(&[-1.0, 4.0, -4.0, 2.0]).derivative();
        for i in 0..200 {
            let t = -10.0 + 20.0 * i as f64 / 199.0;
            assert!(dp.eval(&t) > 0.0, "p'({t}) <= 0");
        }
    }

    #[test]
    fn quadratic_roots() {
        assert_eq!(solve_quadratic(-1.0, 0.0, 1.0), vec![-1.0, 1.0]);
        assert!(solve_quadratic(1.0, 0.0, 1.0).is_empty());
        assert_eq!(solve_quadratic(1.0, -2.0, 1.0), vec![1.0]);
        let r = solve_quadratic(2.0, -3.0, 1.0);
        assert!((r[0] - 1.0).abs() < 1e-15 && (r[1] - 2.0).abs() < 1e-15);
    }
}
