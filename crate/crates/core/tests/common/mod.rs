//! Test-only oracles: a literal transcription of the published ket-bra expansions
//! built on plain `f64` arrays, plus random-state generators.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rand_distr::StandardNormal;

use wbroadcast::{ComplexMatrix, DensityMatrix};

pub type M4 = [[f64; 4]; 4];
pub type M16 = [[f64; 16]; 16];

fn idx(bits: &str) -> usize {
    usize::from_str_radix(bits, 2).unwrap()
}

/// Σ coef |ket⟩⟨bra| over two-qubit kets written as bit strings.
pub fn ketbras(terms: &[(f64, &str, &str)]) -> M4 {
    let mut m = [[0.0; 4]; 4];
    for &(c, k, b) in terms {
        m[idx(k)][idx(b)] += c;
    }
    m
}

pub fn add4(a: &M4, b: &M4, wa: f64, wb: f64) -> M4 {
    let mut m = [[0.0; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = wa * a[i][j] + wb * b[i][j];
        }
    }
    m
}

pub fn tensor(a: &M4, b: &M4) -> M16 {
    let mut m = [[0.0; 16]; 16];
    for i in 0..4 {
        for j in 0..4 {
            for k in 0..4 {
                for l in 0..4 {
                    m[4 * i + k][4 * j + l] = a[i][j] * b[k][l];
                }
            }
        }
    }
    m
}

const S: f64 = 1.0 / 6.0;
const T: f64 = 2.0 / 3.0;
const X: f64 = 1.0 / 3.0;

fn block_zero() -> M4 {
    ketbras(&[
        (T, "00", "00"),
        (S, "01", "01"),
        (S, "01", "10"),
        (S, "10", "01"),
        (S, "10", "10"),
    ])
}

fn block_one() -> M4 {
    ketbras(&[
        (T, "11", "11"),
        (S, "01", "01"),
        (S, "01", "10"),
        (S, "10", "01"),
        (S, "10", "10"),
    ])
}

/// {1/3(|00⟩⟨01|+|00⟩⟨10|) + 1/3(|01⟩⟨11|+|10⟩⟨11|)}
fn coherence_down() -> M4 {
    ketbras(&[
        (X, "00", "01"),
        (X, "00", "10"),
        (X, "01", "11"),
        (X, "10", "11"),
    ])
}

/// {1/3(|11⟩⟨01|+|11⟩⟨10|) + 1/3(|01⟩⟨00|+|10⟩⟨00|)}
fn coherence_up() -> M4 {
    ketbras(&[
        (X, "11", "01"),
        (X, "11", "10"),
        (X, "01", "00"),
        (X, "10", "00"),
    ])
}

/// ρ₁₂₄₅ in factor order (14) ⊗ (25).
pub fn rho_1245(a2: f64, b2: f64, g2: f64) -> M16 {
    let bg = (b2 * g2).sqrt();
    let terms = [
        (a2, tensor(&block_zero(), &block_zero())),
        (b2, tensor(&block_zero(), &block_one())),
        (g2, tensor(&block_one(), &block_zero())),
        (bg, tensor(&coherence_down(), &coherence_up())),
        (bg, tensor(&coherence_up(), &coherence_down())),
    ];
    let mut m = [[0.0; 16]; 16];
    for (w, t) in terms.iter() {
        for i in 0..16 {
            for j in 0..16 {
                m[i][j] += w * t[i][j];
            }
        }
    }
    m
}

/// ρ₁₅ and ρ₄₂ share the same expansion in their own label order.
fn nonlocal(a2: f64, b2: f64, g2: f64) -> M4 {
    let bg = (b2 * g2).sqrt();
    let alpha = ketbras(&[
        (25.0 / 36.0, "00", "00"),
        (5.0 / 36.0, "01", "01"),
        (5.0 / 36.0, "10", "10"),
        (1.0 / 36.0, "11", "11"),
    ]);
    let beta = ketbras(&[
        (5.0 / 36.0, "00", "00"),
        (25.0 / 36.0, "01", "01"),
        (1.0 / 36.0, "10", "10"),
        (5.0 / 36.0, "11", "11"),
    ]);
    let gamma = ketbras(&[
        (25.0 / 36.0, "10", "10"),
        (5.0 / 36.0, "11", "11"),
        (5.0 / 36.0, "00", "00"),
        (1.0 / 36.0, "01", "01"),
    ]);
    let coh = ketbras(&[(4.0 / 9.0, "01", "10"), (4.0 / 9.0, "10", "01")]);
    let m = add4(&alpha, &beta, a2, b2);
    let m = add4(&m, &gamma, 1.0, g2);
    add4(&m, &coh, 1.0, bg)
}

pub fn rho_15(a2: f64, b2: f64, g2: f64) -> M4 {
    nonlocal(a2, b2, g2)
}

pub fn rho_42(a2: f64, b2: f64, g2: f64) -> M4 {
    nonlocal(a2, b2, g2)
}

pub fn rho_14(a2: f64, b2: f64, g2: f64) -> M4 {
    let m = add4(&block_zero(), &block_zero(), a2, b2);
    add4(&m, &block_one(), 1.0, g2)
}

pub fn rho_25(a2: f64, b2: f64, g2: f64) -> M4 {
    let m = add4(&block_zero(), &block_one(), a2, b2);
    add4(&m, &block_zero(), 1.0, g2)
}

/// Largest |computed - oracle| over all entries.
pub fn max_diff<const N: usize>(computed: &ComplexMatrix, oracle: &[[f64; N]; N]) -> f64 {
    assert_eq!(computed.dim(), N);
    let mut worst: f64 = 0.0;
    for i in 0..N {
        for j in 0..N {
            let d = computed[(i, j)] - Complex64::new(oracle[i][j], 0.0);
            worst = worst.max(d.norm());
        }
    }
    worst
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Random (α², β², γ²) strictly inside the simplex.
pub fn random_params(rng: &mut StdRng) -> (f64, f64, f64) {
    loop {
        let a: f64 = rng.random_range(0.01..0.98);
        let b: f64 = rng.random_range(0.01..0.98);
        let g = 1.0 - a - b;
        if g > 0.01 {
            return (a, b, g);
        }
    }
}

fn gaussian(rng: &mut StdRng) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// A A† / Tr(A A†) for A with i.i.d. standard complex Gaussian entries.
pub fn random_density(rng: &mut StdRng) -> DensityMatrix {
    let a = ComplexMatrix::from_vec((0..16).map(|_| gaussian(rng)).collect()).unwrap();
    let aa = a.matmul(&a.adjoint());
    let tr = aa.trace().re;
    DensityMatrix::two_qubit(aa.scale_real(1.0 / tr)).unwrap()
}

/// exp(iφ)(cos θ I + i sin θ n·σ) with a random axis n.
pub fn random_unitary(rng: &mut StdRng) -> ComplexMatrix {
    let (x, y, z): (f64, f64, f64) = (
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
        rng.sample(StandardNormal),
    );
    let n = (x * x + y * y + z * z).sqrt();
    let (x, y, z) = (x / n, y / n, z / n);
    let theta: f64 = rng.random_range(0.0..std::f64::consts::PI);
    let phi: f64 = rng.random_range(0.0..std::f64::consts::TAU);
    let (c, s) = (theta.cos(), theta.sin());
    let i = Complex64::new(0.0, 1.0);
    let u = ComplexMatrix::from_vec(vec![
        c + i * s * z,
        i * s * x + s * y,
        i * s * x - s * y,
        c - i * s * z,
    ])
    .unwrap();
    u.scale(Complex64::from_polar(1.0, phi))
}
