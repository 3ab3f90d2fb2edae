//! Acceptance suite. Each check prints one pass/fail line; any failure
//! fails the whole test target.

use std::f64::consts::PI;
use std::process::Command;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use helicover::covering::{circle_path, lift_path, monodromy_check, winding_number};
use helicover::limits::StripSpec;
use helicover::logmap::{omega_realize, xi_realize};
use helicover::{
    complex_exp, exp_field, log_field, make_grid, pointwise_gap, project_to_plane,
    strip_convergence, theta_map, Error, GridSpec, HelicoidParams, HelicoidPoint,
};

struct Scoreboard {
    failures: Vec<String>,
}

impl Scoreboard {
    fn new() -> Self {
        Scoreboard { failures: Vec::new() }
    }

    fn record(&mut self, name: &str, ok: bool) {
        println!("{} .. {}", name, if ok { "pass" } else { "FAIL" });
        if !ok {
            self.failures.push(name.to_string());
        }
    }

    fn finish(self) {
        assert!(self.failures.is_empty(), "failed criteria: {:?}", self.failures);
    }
}

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed)
}

#[test]
fn acceptance() {
    let mut board = Scoreboard::new();

    criterion_1_roundtrip(&mut board);
    criterion_2_commuting_diagram(&mut board);
    criterion_3_exact_rate(&mut board);
    criterion_4_uniform_strip_bound(&mut board);
    criterion_5_theta_system(&mut board);
    criterion_6_realization(&mut board);
    criterion_7_covering_monodromy(&mut board);
    criterion_8_multi_coherence(&mut board);
    criterion_9_deterministic_artifacts(&mut board);

    board.finish();
}

/// 10,000 random z with |Re z| <= 5, |Im z| <= 50, n in {1, 2, 5, 100}:
/// |log_field(n, exp_field(1/n, z)) - z| <= 1e-10.
fn criterion_1_roundtrip(board: &mut Scoreboard) {
    let mut rng = rng();
    let mut ok = true;
    for _ in 0..10_000 {
        let z = Complex64::new(rng.gen_range(-5.0..5.0), rng.gen_range(-50.0..50.0));
        for n in [1u32, 2, 5, 100] {
            let p = HelicoidParams::new(1.0 / n as f64).unwrap();
            let q = exp_field(p, z).unwrap();
            let back = log_field(n, q).unwrap();
            ok &= (back - z).norm() <= 1e-10;
        }
    }
    board.record("1 roundtrip log_field o exp_field = id", ok);
}

/// ||project_to_plane(exp_field(a, z)) - complex_exp(z)|| <= 1e-12 on a
/// 101 x 101 grid for a in {0.1, 1, 10}.
fn criterion_2_commuting_diagram(board: &mut Scoreboard) {
    let spec = GridSpec::new(-3.0, 3.0, -10.0, 10.0, 101, 101).unwrap();
    let grid = make_grid(&spec);
    let mut ok = true;
    for a in [0.1, 1.0, 10.0] {
        let p = HelicoidParams::new(a).unwrap();
        for &z in &grid {
            let diff = project_to_plane(exp_field(p, z).unwrap()) - complex_exp(z).unwrap();
            ok &= diff.norm() <= 1e-12;
        }
    }
    board.record("2 commuting projection diagram", ok);
}

/// pointwise_gap(n, z) * n = |Im z| to relative error <= 1e-12 for
/// n in decades up to 10^3 and 1,000 random z.
fn criterion_3_exact_rate(board: &mut Scoreboard) {
    let mut rng = rng();
    let mut ok = true;
    for _ in 0..1_000 {
        let z = Complex64::new(rng.gen_range(-4.0..4.0), rng.gen_range(-30.0..30.0));
        for n in [1u32, 10, 100, 1000] {
            let gap = pointwise_gap(n, z).unwrap();
            let scaled = gap * n as f64;
            let expect = z.im.abs();
            let rel = if expect == 0.0 {
                scaled.abs()
            } else {
                (scaled - expect).abs() / expect
            };
            ok &= rel <= 1e-12;
        }
    }
    board.record("3 exact 1/n convergence rate", ok);
}

/// strip_convergence(n=100, M=pi) on a 201 x 201 grid: sup_observed <=
/// pi/100 + 1e-12, and doubling n halves sup_observed within 1e-9 relative.
fn criterion_4_uniform_strip_bound(board: &mut Scoreboard) {
    let strip = StripSpec::new(PI, -2.0, 2.0).unwrap();
    let r100 = strip_convergence(100, &strip, 201, 201).unwrap();
    let mut ok = r100.sup_observed <= PI / 100.0 + 1e-12;
    let r200 = strip_convergence(200, &strip, 201, 201).unwrap();
    let ratio = r100.sup_observed / r200.sup_observed;
    ok &= (ratio - 2.0).abs() <= 1e-9 * 2.0;
    board.record("4 uniform strip bound M/n", ok);
}

/// Theta_{n,n} = id exactly; Theta_{m,k} o Theta_{n,m} = Theta_{n,k} to
/// 1e-12 for all n, m, k in {1..6} on 100 random helicoid points.
fn criterion_5_theta_system(board: &mut Scoreboard) {
    let mut rng = rng();
    let mut ok = true;
    let points: Vec<HelicoidPoint> = (0..100)
        .map(|_| {
            let z = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-10.0..10.0));
            exp_field(HelicoidParams::new(1.0).unwrap(), z).unwrap()
        })
        .collect();
    for q in &points {
        for n in 1..=6u32 {
            ok &= theta_map(n, n, *q).unwrap() == *q;
            for m in 1..=6u32 {
                for k in 1..=6u32 {
                    let chained = theta_map(m, k, theta_map(n, m, *q).unwrap()).unwrap();
                    let direct = theta_map(n, k, *q).unwrap();
                    ok &= (chained.x - direct.x).abs() <= 1e-12
                        && (chained.y - direct.y).abs() <= 1e-12
                        && (chained.h - direct.h).abs() <= 1e-12;
                }
            }
        }
    }
    board.record("5 theta transition system", ok);
}

/// Xi o Omega and Omega o Xi are identities to 1e-10 on 1,000 random
/// surface points for a in {1/3, 1, 7}; off-surface points are rejected.
fn criterion_6_realization(board: &mut Scoreboard) {
    let mut rng = rng();
    let mut ok = true;
    for a in [1.0 / 3.0, 1.0, 7.0] {
        let p = HelicoidParams::new(a).unwrap();
        for _ in 0..1_000 {
            let z = Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-20.0..20.0));
            let q = exp_field(p, z).unwrap();
            let s = xi_realize(p, q).unwrap();
            let back = omega_realize(p, s).unwrap();
            ok &= (back.x - q.x).abs() <= 1e-10
                && (back.y - q.y).abs() <= 1e-10
                && (back.h - q.h).abs() <= 1e-10;
            let s2 = xi_realize(p, back).unwrap();
            ok &= (s2.u - s.u).abs() <= 1e-10 && (s2.v - s.v).abs() <= 1e-10;
        }
        // A decisively off-surface point must be refused.
        ok &= matches!(
            xi_realize(p, HelicoidPoint::new(1.0, 0.0, 0.5 * a)),
            Err(Error::NotOnSurface { .. })
        );
    }
    board.record("6 realization maps Xi/Omega", ok);
}

/// 100 random circular loops with winding w in [-5, 5]: monodromy equals
/// winding equals w exactly; lifts from two sheets differ by 2 pi i (k1-k2).
fn criterion_7_covering_monodromy(board: &mut Scoreboard) {
    let mut rng = rng();
    let mut ok = true;
    for _ in 0..100 {
        let w: i64 = rng.gen_range(-5..=5);
        let radius = rng.gen_range(0.25..4.0);
        let samples = 96 * (w.unsigned_abs() as usize).max(1);
        let path = circle_path(Complex64::new(0.0, 0.0), radius, w, samples).unwrap();
        ok &= winding_number(&path).unwrap() == w;
        ok &= monodromy_check(&path, rng.gen_range(-4..=4)).unwrap() == w;

        let k1: i64 = rng.gen_range(-4..=4);
        let k2: i64 = rng.gen_range(-4..=4);
        let l1 = lift_path(&path, k1).unwrap();
        let l2 = lift_path(&path, k2).unwrap();
        let expect = 2.0 * PI * (k1 - k2) as f64;
        for (a, b) in l1.points.iter().zip(&l2.points) {
            let diff = a - b;
            ok &= diff.re.abs() <= 1e-12 && (diff.im - expect).abs() <= 1e-12;
        }
    }
    board.record("7 covering monodromy = winding", ok);
}

/// Componentwise equality of multi ops with single ops is exact; the
/// per-component multi-strip bounds M_k/n hold at n = 100, m = 4.
fn criterion_8_multi_coherence(board: &mut Scoreboard) {
    use helicover::multi::{multi_exp, multi_log, multi_strip_convergence, MultiParams};
    let mut rng = rng();
    let mut ok = true;
    let pitches = vec![0.5, 1.0, 2.0, 0.25];
    let p = MultiParams::new(pitches.clone()).unwrap();
    for _ in 0..200 {
        let zs: Vec<Complex64> = (0..4)
            .map(|_| Complex64::new(rng.gen_range(-3.0..3.0), rng.gen_range(-15.0..15.0)))
            .collect();
        let q = multi_exp(&p, &zs).unwrap();
        for (idx, (&a, &z)) in pitches.iter().zip(&zs).enumerate() {
            let single = exp_field(HelicoidParams::new(a).unwrap(), z).unwrap();
            ok &= q.planar[idx] == single.planar() && q.heights[idx] == single.h;
        }
        let back = multi_log(&p, &q).unwrap();
        for (idx, &z) in zs.iter().enumerate() {
            let single = helicover::log_general(
                HelicoidParams::new(pitches[idx]).unwrap(),
                HelicoidPoint::new(q.planar[idx].re, q.planar[idx].im, q.heights[idx]),
            )
            .unwrap();
            ok &= back[idx] == single;
            ok &= (back[idx] - z).norm() <= 1e-10;
        }
    }
    let bounds = [PI, 2.0 * PI, 1.0, 0.5];
    let windows = [(-1.0, 1.0); 4];
    let report = multi_strip_convergence(100, &bounds, &windows, 41, 41).unwrap();
    for (r, &m) in report.components.iter().zip(&bounds) {
        ok &= r.sup_observed <= m / 100.0 + 1e-12;
    }
    ok &= report.aggregate_sup <= report.aggregate_predicted + 1e-12;
    board.record("8 multi-exponential coherence", ok);
}

/// `report --seed 42` twice is byte-identical; a 2x2 mesh has exactly
/// 4 vertices and 2 faces.
fn criterion_9_deterministic_artifacts(board: &mut Scoreboard) {
    let bin = env!("CARGO_BIN_EXE_helicover");
    let run_report = || {
        Command::new(bin)
            .args(["report", "--seed", "42"])
            .output()
            .expect("report run")
    };
    let a = run_report();
    let b = run_report();
    let mut ok = a.status.success() && b.status.success() && a.stdout == b.stdout;
    ok &= serde_json::from_slice::<serde_json::Value>(&a.stdout)
        .map(|v| v["pass"] == serde_json::Value::Bool(true))
        .unwrap_or(false);

    let dir = tempfile::tempdir().unwrap();
    let obj_path = dir.path().join("quad.obj");
    let status = Command::new(bin)
        .args([
            "mesh", "--a", "1", "--u-min", "0", "--u-max", "1", "--v-min", "0", "--v-max", "1",
            "--nu", "2", "--nv", "2", "--out",
        ])
        .arg(&obj_path)
        .status()
        .expect("mesh run");
    ok &= status.success();
    let obj = std::fs::read_to_string(&obj_path).unwrap();
    ok &= obj.lines().filter(|l| l.starts_with("v ")).count() == 4;
    ok &= obj.lines().filter(|l| l.starts_with("f ")).count() == 2;
    board.record("9 deterministic artifacts", ok);
}
