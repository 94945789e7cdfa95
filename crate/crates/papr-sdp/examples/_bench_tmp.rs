use nalgebra::DMatrix;
use num_complex::Complex64;
use papr_sdp::solver::*;
use std::time::Instant;

fn main() {
    let n = 64usize;
    let d = n + 1;
    // eig timing
    let mut rng_state = 12345u64;
    let mut next = || {
        rng_state ^= rng_state << 13;
        rng_state ^= rng_state >> 7;
        rng_state ^= rng_state << 17;
        (rng_state as f64 / u64::MAX as f64) - 0.5
    };
    let mut m = DMatrix::<f64>::zeros(2 * d, 2 * d);
    for r in 0..2 * d {
        for c in 0..=r {
            let v = next();
            m[(r, c)] = v;
            m[(c, r)] = v;
        }
    }
    let t0 = Instant::now();
    let reps = 50;
    let mut acc = 0.0;
    for _ in 0..reps {
        let e = m.clone().symmetric_eigen();
        acc += e.eigenvalues[0];
    }
    println!("eig {}x{}: {:.3} ms each (acc {acc:.3})", 2 * d, 2 * d, t0.elapsed().as_secs_f64() * 1000.0 / reps as f64);

    // TR solve timing: min trace(H), [[H,x],[x^H,1]] psd, off-diag sums 0, x_I = s
    let mut obj = DMatrix::<Complex64>::identity(d, d);
    obj[(n, n)] = Complex64::ZERO;
    let mut p = StructuredSdp::new(d, obj);
    for k in 1..n {
        p.diag_sums.push(DiagSumConstraint { block: n, offset: k, target: Complex64::ZERO });
    }
    p.fixed.push(FixedEntry { row: n, col: n, value: Complex64::ONE });
    // lambda = 0.75: fix 48 entries to QAM16-ish values
    let qam = [-3.0, -1.0, 1.0, 3.0];
    let mut count = 0;
    for j in 0..n {
        if j % 4 != 3 && count < 48 {
            let re = qam[(j * 7 + 1) % 4] / 10f64.sqrt();
            let im = qam[(j * 13 + 2) % 4] / 10f64.sqrt();
            p.fixed.push(FixedEntry { row: j, col: n, value: Complex64::new(re, im) });
            count += 1;
        }
    }
    let opts = SolverOptions::default();
    let t0 = Instant::now();
    let sol = solve(&p, &opts, None).unwrap();
    println!("TR n=64 m=48: obj={:.4} iters={} status={:?} {:.2}s", sol.objective_value, sol.iterations, sol.status, t0.elapsed().as_secs_f64());
}
