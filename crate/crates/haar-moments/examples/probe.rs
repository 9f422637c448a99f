use nalgebra::{Complex, DMatrix};
use rand::prelude::*;
use rand_chacha::ChaCha12Rng;
use rand_distr::StandardNormal;

fn main() {
    let mut rng = ChaCha12Rng::seed_from_u64(7);
    rng.set_stream(3);
    for d in [1usize, 2, 4, 6, 8] {
        let g = DMatrix::<Complex<f64>>::from_fn(d, d, |_, _| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex::new(re, im) * std::f64::consts::FRAC_1_SQRT_2
        });
        let qr = g.clone().qr();
        let (q, r) = (qr.q(), qr.r());
        let mut u = q.clone();
        for i in 0..d {
            let rii = r[(i, i)];
            let phase = rii / Complex::new(rii.norm(), 0.0);
            for row in 0..d {
                u[(row, i)] *= phase;
            }
        }
        let err = (u.adjoint() * &u - DMatrix::<Complex<f64>>::identity(d, d))
            .map(|z| z.norm())
            .max();
        let schur = u.clone().schur();
        let t = schur.unpack().1;
        let eigs: Vec<Complex<f64>> = (0..d).map(|i| t[(i, i)]).collect();
        let z = Complex::new(0.3, -0.7);
        let lhs = (u.clone() - DMatrix::from_diagonal_element(d, d, z)).determinant();
        let rhs: Complex<f64> = eigs.iter().map(|&l| l - z).product();
        println!(
            "d={} unitarity_err={:.2e} eig_mod_err={:.2e} charpoly_pt_err={:.2e}",
            d,
            err,
            eigs.iter()
                .map(|l| (l.norm() - 1.0).abs())
                .fold(0.0, f64::max),
            (lhs - rhs).norm()
        );
    }
}
