//! Acceptance suite. Runs without the libtest harness so every criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any criterion fails.

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use himul_core::constructors::{
    nc_ideal, power_scale_check, qdivisor_ideal, spectrum_diagonal, spectrum_one_var,
    spectrum_ordinary_fermat, spectrum_thom_sebastiani,
};
use himul_core::invariants::{
    gdim_ordinary, hodge_prim_hypersurface, independent_conditions_degree, nontriviality_data,
};
use himul_core::resolution::{builtin_family, min_exponent_bounds};
use himul_core::{ExpVec, MonIdeal, Rat, VSpectrum};
use num_bigint::BigUint;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn r(p: i64, q: i64) -> Rat {
    Rat::new(p, q)
}

fn ideal(gens: &[&[u32]]) -> MonIdeal {
    ideal_from(gens[0].len(), gens.iter().map(|g| g.to_vec()).collect())
}

fn cusp_table() -> Outcome {
    let v = spectrum_diagonal(&[2, 3], &r(13, 6)).map_err(|e| e.to_string())?;
    let jumps = [r(5, 6), r(7, 6), r(11, 6), r(13, 6)];
    ensure!(
        v.jumping_numbers() == jumps,
        "jumps {:?}",
        v.jumping_numbers()
    );

    let unit = MonIdeal::unit(2);
    let xy = ideal(&[&[1, 0], &[0, 1]]);
    let xy2 = ideal(&[&[1, 0], &[0, 2]]);
    let x2_xy_y3 = ideal(&[&[2, 0], &[1, 1], &[0, 3]]);
    let pieces = [unit.clone(), xy.clone(), xy2.clone(), x2_xy_y3.clone()];
    let mut lower = Rat::zero();
    for (upper, want) in jumps.iter().zip(&pieces) {
        for beta in [(&lower + upper) / Rat::int(2), upper.clone()] {
            let got = v.v_at(&beta).map_err(|e| e.to_string())?;
            ensure!(&got == want, "Ṽ^{beta} = {got}, want {want}");
        }
        lower = upper.clone();
    }

    // α on a 1/12 grid of [-1, 0]
    for j in 0..=12 {
        let a = r(-j, 12);
        let i0 = if a >= r(-5, 6) { &unit } else { &xy };
        let i1 = if a >= r(-1, 6) {
            &xy
        } else if a >= r(-5, 6) {
            &xy2
        } else {
            &x2_xy_y3
        };
        for (k, want) in [(0, i0), (1, i1)] {
            let got = v.hmi(k, &a).map_err(|e| e.to_string())?;
            ensure!(&got == want, "I_{{{k},{a}}} = {got}, want {want}");
        }
        if a >= r(-1, 6) {
            let got = v.hmi(2, &a).map_err(|e| e.to_string())?;
            ensure!(got == x2_xy_y3, "I_{{2,{a}}} = {got}");
        }
    }
    ensure!(v.hmi(1, &Rat::zero()).unwrap() == xy, "I_{{1,0}}");
    ensure!(v.hmi(2, &Rat::zero()).unwrap() == x2_xy_y3, "I_{{2,0}}");
    ensure!(v.hmi(0, &Rat::int(-1)).unwrap() == xy, "I_{{0,-1}}");
    ensure!(v.hmi(1, &Rat::int(-1)).unwrap() == x2_xy_y3, "I_{{1,-1}}");
    Ok(())
}

fn node_law() -> Outcome {
    let v = spectrum_diagonal(&[2, 2], &Rat::int(4)).map_err(|e| e.to_string())?;
    for k in 0..=3u32 {
        for j in 0..=4 {
            let a = r(-j, 4);
            let q = (Rat::int(k as i64) - &a - Rat::one())
                .ceil_i64()
                .unwrap()
                .max(0);
            let want = max_power(2, q as u32);
            let got = v.hmi(k, &a).map_err(|e| e.to_string())?;
            ensure!(got == want, "I_{{{k},{a}}} = {got}, want {want}");
        }
    }
    Ok(())
}

fn minimal_exponents() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let len = rng.gen_range(1..=4);
        let m: Vec<u32> = (0..len).map(|_| rng.gen_range(2..=6)).collect();
        let want: Rat = m.iter().map(|&x| r(1, x as i64)).sum();
        let v = spectrum_diagonal(&m, &(&want + Rat::one())).map_err(|e| e.to_string())?;
        ensure!(
            v.minimal_exponent() == Some(want.clone()),
            "diagonal {m:?}: {:?}",
            v.minimal_exponent()
        );
    }
    for n in 3..=5usize {
        for m in 2..=4u32 {
            let want = r(n as i64, m as i64);
            let v =
                spectrum_ordinary_fermat(n, m, &(&want + Rat::one())).map_err(|e| e.to_string())?;
            ensure!(
                v.minimal_exponent() == Some(want.clone()),
                "fermat ({n},{m}): {:?}",
                v.minimal_exponent()
            );
        }
    }
    Ok(())
}

fn fermat_pair(n: usize, m: u32) -> Result<(VSpectrum, VSpectrum), String> {
    let b = r(n as i64, m as i64) + Rat::int(2);
    let d = spectrum_diagonal(&vec![m; n], &b).map_err(|e| e.to_string())?;
    let f = spectrum_ordinary_fermat(n, m, &b).map_err(|e| e.to_string())?;
    Ok((d, f))
}

fn fermat_double_derivation() -> Outcome {
    for n in 1..=4usize {
        for m in 2..=4u32 {
            let (d, f) = fermat_pair(n, m)?;
            ensure!(
                d.jumping_numbers() == f.jumping_numbers(),
                "({n},{m}) jumps differ"
            );
            for (a, b) in d.jumps().iter().zip(f.jumps()) {
                ensure!(
                    a.ideal == b.ideal,
                    "({n},{m}) at {}: {} vs {}",
                    a.beta,
                    a.ideal,
                    b.ideal
                );
            }
        }
    }
    Ok(())
}

fn ordinary_tables() -> Outcome {
    for n in 2..=5usize {
        for m in 2..=4u32 {
            let (k, rem) = (n as u32 / m, n as u32 % m);
            let v = spectrum_ordinary_fermat(n, m, &Rat::int(k as i64 + 1))
                .map_err(|e| e.to_string())?;
            for p in 0..=m {
                let want = if p <= rem {
                    MonIdeal::unit(n)
                } else if p <= m.min(m + rem - 1) {
                    max_power(n, p - rem)
                } else {
                    max_power_plus_jacobian(n, m)
                };
                let a = r(-(p as i64), m as i64);
                let got = v.hmi(k, &a).map_err(|e| e.to_string())?;
                ensure!(
                    got == want,
                    "n={n}, m={m}: I_{{{k},{a}}} = {got}, want {want}"
                );
            }
        }
    }
    Ok(())
}

fn hodge_numbers() -> Outcome {
    for (n, m, k, want) in [(3usize, 3u32, 1u32, 1u64), (4, 4, 2, 19), (5, 5, 2, 101)] {
        let oracle = milnor_count(n, m, (m * k) as i64 - n as i64);
        ensure!(oracle == want, "oracle ({n},{m},{k}) = {oracle}");
        let got = hodge_prim_hypersurface(n, m, k).map_err(|e| e.to_string())?;
        ensure!(
            got == BigUint::from(want),
            "({n},{m},{k}) = {got}, want {want}"
        );
    }
    Ok(())
}

fn gdim_cross_check() -> Outcome {
    for n in 2..=4usize {
        for m in 2..=4u32 {
            let (_, f) = fermat_pair(n, m)?;
            for k in 0..=4u32 {
                for p in 0..(2 * m) {
                    // α over (-1, 0] in steps of 1/(2m), so non-integral mα is covered too
                    let a = r(-(p as i64), 2 * m as i64);
                    if a <= Rat::int(-1) || Rat::int(k as i64) - &a >= *f.cutoff() {
                        continue;
                    }
                    let got = f.graded_dim(k, &a).map_err(|e| e.to_string())?;
                    let want = gdim_ordinary(n, m, k, &a).map_err(|e| e.to_string())?;
                    ensure!(
                        got.finite().map(BigUint::from) == Some(want.clone()),
                        "({n},{m},{k},{a}): {got:?} vs {want}"
                    );
                }
            }
        }
    }
    let g = gdim_ordinary(3, 3, 2, &Rat::int(-1)).map_err(|e| e.to_string())?;
    ensure!(g == BigUint::from(9u32), "gdim(3,3,2,-1) = {g}");
    Ok(())
}

fn theta_computations() -> Outcome {
    let mut cases: Vec<(String, Rat)> = Vec::new();
    cases.extend((3..=9).map(|g| (format!("hyperelliptic_theta({g})"), r(3, 2))));
    cases.extend((4..=16).map(|g| (format!("bn_general_theta({g})"), Rat::int(2))));
    cases.extend((2..=6).map(|n| (format!("determinantal({n})"), Rat::int(2))));
    cases.extend((1..=5).map(|n| (format!("secant({n})"), r(3, 2))));
    cases.push(("cubic_threefold".into(), r(5, 3)));
    for (call, want) in cases {
        let d = builtin_family(&call).map_err(|e| e.to_string())?;
        ensure!(
            d.expected_min_exponent == want,
            "{call}: expected {}",
            d.expected_min_exponent
        );
        let res = d
            .resolution
            .as_ref()
            .ok_or(format!("{call}: no resolution"))?;
        let b = min_exponent_bounds(res, &d.strata).map_err(|e| e.to_string())?;
        ensure!(
            b.lower == want && b.upper == want,
            "{call}: bounds [{}, {}]",
            b.lower,
            b.upper
        );
    }
    Ok(())
}

fn random_m_vec(rng: &mut ChaCha8Rng, max_len: usize, max_m: u32) -> Vec<u32> {
    let len = rng.gen_range(1..=max_len);
    (0..len).map(|_| rng.gen_range(2..=max_m)).collect()
}

fn is_sub(a: &MonIdeal, b: &MonIdeal) -> bool {
    a.is_subset(b).unwrap()
}

/// One randomized case of the given kind.
fn property_case(kind: usize, rng: &mut ChaCha8Rng) -> Outcome {
    match kind {
        0 => {
            let m = random_m_vec(rng, 3, 5);
            let v = spectrum_diagonal(&m, &Rat::int(2)).unwrap();
            let mut x = r(rng.gen_range(1..=24), 12);
            let mut y = r(rng.gen_range(1..=24), 12);
            if x > y {
                std::mem::swap(&mut x, &mut y);
            }
            ensure!(
                is_sub(&v.v_at(&y).unwrap(), &v.v_at(&x).unwrap()),
                "{m:?}: Ṽ^{y} ⊄ Ṽ^{x}"
            );
        }
        1 => {
            let m = random_m_vec(rng, 3, 5);
            let v = spectrum_diagonal(&m, &Rat::int(3)).unwrap();
            let a = r(-rng.gen_range(0..=12), 12);
            let k = rng.gen_range(0..=1);
            let here = v.hmi(k, &a).unwrap();
            ensure!(
                is_sub(&v.hmi(k + 1, &a).unwrap(), &here),
                "{m:?}: I_{{{},{a}}} ⊄ I_{{{k},{a}}}",
                k + 1
            );
        }
        2 => {
            let m = random_m_vec(rng, 3, 5);
            let v = spectrum_diagonal(&m, &Rat::int(3)).unwrap();
            let a = r(-rng.gen_range(0..=12), 12);
            let k = rng.gen_range(0..=1);
            let shifted = v.hmi(k + 1, &(&a + Rat::one())).unwrap();
            ensure!(
                shifted == v.hmi(k, &a).unwrap(),
                "{m:?}: transversality fails at ({k},{a})"
            );
        }
        3 => {
            let len = rng.gen_range(1..=3);
            let mut m: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=5)).collect();
            m[0] = m[0].max(1);
            let a = r(-rng.gen_range(1..=24), rng.gen_range(1..=12));
            let h = nc_ideal(&m, 0, &a).unwrap();
            ensure!(
                h.f_power == 0 && h.ideal == howald(&m, &a, false),
                "nc {m:?} at {a}"
            );
        }
        4 => {
            let len = rng.gen_range(1..=3);
            let mut base: Vec<u32> = (0..len).map(|_| rng.gen_range(0..=3)).collect();
            base[0] = base[0].max(1);
            let p = rng.gen_range(1..=4);
            let k = rng.gen_range(0..=3);
            let a = r(-rng.gen_range(0..=12), 6);
            let (lhs, rhs) = power_scale_check(&ExpVec::new(base.clone()), p, k, &a).unwrap();
            ensure!(lhs == rhs, "power scaling {base:?}, p={p}, k={k}, α={a}");
        }
        5 => {
            let b = r(rng.gen_range(2..=6), 2);
            let m1 = random_m_vec(rng, 2, 4);
            let m2 = random_m_vec(rng, 2, 4);
            let v1 = spectrum_diagonal(&m1, &b).unwrap();
            let v2 = spectrum_diagonal(&m2, &b).unwrap();
            let ab = spectrum_thom_sebastiani(&v1, &v2, &b).unwrap();
            let ba = spectrum_thom_sebastiani(&v2, &v1, &b).unwrap();
            ensure!(
                ba.permuted(&swap_blocks(m1.len(), m2.len())).unwrap() == ab,
                "TS {m1:?} {m2:?}"
            );
        }
        6 => {
            let b = r(rng.gen_range(2..=5), 2);
            let m: Vec<u32> = (0..3).map(|_| rng.gen_range(2..=5)).collect();
            let v: Vec<VSpectrum> = m
                .iter()
                .map(|&x| spectrum_one_var(x, &b).unwrap())
                .collect();
            let ts = |x: &VSpectrum, y: &VSpectrum| spectrum_thom_sebastiani(x, y, &b).unwrap();
            let left = ts(&ts(&v[0], &v[1]), &v[2]);
            let right = ts(&v[0], &ts(&v[1], &v[2]));
            ensure!(left == right, "TS associativity {m:?}");
            ensure!(
                left == spectrum_diagonal(&m, &b).unwrap(),
                "TS vs diagonal {m:?}"
            );
        }
        7 => {
            let len = rng.gen_range(1..=3);
            let mut c: Vec<Rat> = (0..len)
                .map(|_| r(rng.gen_range(0..=8), rng.gen_range(1..=4)))
                .collect();
            if c.iter().all(|x| !x.is_positive()) {
                c[0] = r(1, 2);
            }
            let k = rng.gen_range(0..=2);
            let a = r(-rng.gen_range(0..=6), 3);
            let i = qdivisor_ideal(&c, k, &a).unwrap();
            ensure!(
                i.divisorial_part().unwrap().is_zero(),
                "qdivisor {c:?} at ({k},{a}): {i}"
            );
        }
        _ => unreachable!(),
    }
    Ok(())
}

fn property_suite() -> Outcome {
    const KINDS: usize = 8;
    const CASES: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for i in 0..CASES {
        property_case(i % KINDS, &mut rng).map_err(|e| format!("case {i}: {e}"))?;
    }
    Ok(())
}

fn bs_classes() -> Outcome {
    let cusp = spectrum_diagonal(&[2, 3], &Rat::int(4)).unwrap();
    ensure!(
        cusp.bs_root_classes() == [Rat::int(-1), r(-5, 6), r(-1, 6)],
        "cusp {:?}",
        cusp.bs_root_classes()
    );
    let node = spectrum_diagonal(&[2, 2], &Rat::int(4)).unwrap();
    ensure!(
        node.bs_root_classes() == [Rat::int(-1)],
        "node {:?}",
        node.bs_root_classes()
    );
    for m in 1..=9u32 {
        let v = spectrum_one_var(m, &Rat::int(3)).unwrap();
        let got = v.bs_root_classes();
        ensure!(got == one_var_bs_classes(m), "x^{m}: {got:?}");
        for b in v.jumping_numbers() {
            let class = Rat::from_bigint(b.ceil()) - Rat::one() - &b;
            ensure!(got.contains(&class), "x^{m}: jump {b} has no class");
        }
    }
    Ok(())
}

fn criteria_arithmetic() -> Outcome {
    for d in 2..=20i64 {
        let got = independent_conditions_degree(3, 2, d).map_err(|e| e.to_string())?;
        ensure!(got == 2 * d - 4, "d={d}: {got}");
    }
    for m in 2..=6u64 {
        for g in 2 * m - 1..=2 * m + 8 {
            let nd = nontriviality_data(g, g + 1 - 2 * m, m).map_err(|e| e.to_string())?;
            let want = (1, m - 1, -r(m as i64 - 1, m as i64));
            ensure!(
                (nd.k, nd.r, nd.alpha.clone()) == want,
                "g={g}, m={m}: {nd:?}"
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("cusp golden table", cusp_table),
        ("node law", node_law),
        ("minimal exponents", minimal_exponents),
        ("Fermat double derivation", fermat_double_derivation),
        ("ordinary singularity tables", ordinary_tables),
        ("Hodge numbers", hodge_numbers),
        ("gdim cross-check", gdim_cross_check),
        ("theta divisors", theta_computations),
        ("randomized property suite", property_suite),
        ("Bernstein-Sato root classes", bs_classes),
        ("criteria arithmetic", criteria_arithmetic),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {:>2} {name}: PASS ({ms} ms)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({ms} ms): {e}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
