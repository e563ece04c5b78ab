//! Acceptance gate. Runs every criterion, prints one line per criterion and
//! exits nonzero if any of them fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use pexlab::bijections::{free_square_grid, lambda_map};
use pexlab::enumeration::{
    des2_recurrence, egf_a2_coefficients, harmonic_popularity, joint_distribution, stirling_table,
    DistributionTable, EnumConfig,
};
use pexlab::verify::{run_check, CheckId, Status};
use pexlab::{MeshPattern, Permutation, StatisticName::*};

type Verdict = Result<String, String>;
type Criterion = (&'static str, fn() -> Verdict);

fn ensure(cond: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(message())
    }
}

fn dense(t: &DistributionTable) -> Vec<u64> {
    t.dense()
        .into_iter()
        .map(|c| u64::try_from(c).expect("small count"))
        .collect()
}

/// Counts of permutations of length n with k occurrences of p₂, n = 1..=8.
const P2_TABLE: [&[u64]; 8] = [
    &[1],
    &[1, 1],
    &[1, 5],
    &[1, 20, 3],
    &[1, 84, 35],
    &[1, 409, 295, 15],
    &[1, 2365, 2359, 315],
    &[1, 16064, 19670, 4480, 105],
];

fn p2_table() -> Verdict {
    let cfg = EnumConfig::default();
    let rec = des2_recurrence::<BigUint>(8);
    let egf = egf_a2_coefficients(8);
    let mut n8 = Duration::ZERO;
    for (idx, expected) in P2_TABLE.iter().enumerate() {
        let n = idx + 1;
        let start = Instant::now();
        let enumerated = cfg.distribution(Des2, n).map_err(|e| e.to_string())?;
        if n == 8 {
            n8 = start.elapsed();
        }
        for (source, got) in [
            ("enumeration", dense(&enumerated)),
            ("recurrence", dense(&rec.distribution(n, 0))),
            ("egf", dense(&egf.distribution(n, 0))),
        ] {
            ensure(got == *expected, || {
                format!("n={n} {source}: {got:?} != {expected:?}")
            })?;
        }
    }
    let spot = [(6, 1, 409u64), (7, 2, 2359), (8, 3, 4480), (8, 4, 105)];
    for (n, k, v) in spot {
        ensure(rec.get(n, k) == BigUint::from(v), || {
            format!("a({n},{k}) != {v}")
        })?;
    }
    ensure(n8 <= Duration::from_secs(60), || {
        format!("n=8 enumeration took {n8:?}")
    })?;
    Ok(format!(
        "n=1..8 exact from all three sources; n=8 enumeration {:.2} s",
        n8.as_secs_f64()
    ))
}

fn stirling_identity() -> Verdict {
    let c = stirling_table::<BigUint>(8);
    for n in 1..=8 {
        let shifted = c.distribution(n, 1);
        for name in [Des0, Des1] {
            let d = pexlab::enumeration::distribution(name, n).map_err(|e| e.to_string())?;
            ensure(d == shifted, || {
                format!("{name} at n={n} differs from c(n,k+1)")
            })?;
        }
    }
    Ok("des0 = des1 = c(n,k+1) for n=1..8".into())
}

fn popularity() -> Verdict {
    let expected = [0u64, 1, 5, 26, 154, 1044, 8028, 69264];
    for (idx, &v) in expected.iter().enumerate() {
        let n = idx + 1;
        let v = BigUint::from(v);
        ensure(harmonic_popularity::<BigUint>(n) == v, || {
            format!("sum n!/k at n={n}")
        })?;
        for name in [Des0, Des1, Des2, Pex] {
            let got = pexlab::enumeration::popularity(name, n).map_err(|e| e.to_string())?;
            ensure(got == v, || {
                format!("{name} popularity at n={n}: {got} != {v}")
            })?;
        }
    }
    Ok("des0, des1, des2, pex all give 0 1 5 26 154 1044 8028 69264".into())
}

fn lambda_example() -> Verdict {
    let p: Permutation = "6 8 12 5 4 7 3 2 11 1 9 10"
        .parse()
        .map_err(|e: pexlab::Error| e.to_string())?;
    let t = lambda_map(&p).map_err(|e| e.to_string())?;
    ensure(t.to_string() == "1 1 2 4 4 2 1 1 9 1 9 10", || {
        format!("lambda = {t}")
    })?;
    let grid = free_square_grid(&p).map_err(|e| e.to_string())?;
    let columns: [(usize, &[usize]); 5] = [
        (3, &[8, 12]),
        (6, &[5, 7, 8, 12]),
        (7, &[3, 5, 6, 8, 12]),
        (8, &[2, 3, 5, 6, 7, 12]),
        (12, &[2, 3, 5, 6, 7, 8, 10, 11]),
    ];
    for (i, rows) in columns {
        ensure(grid.column(i).free_rows == rows, || {
            format!("column {i}: {:?}", grid.column(i))
        })?;
        for (label, &j) in rows.iter().enumerate() {
            ensure(grid.label(i, j) == Some(label + 1), || {
                format!("label of ({i},{j})")
            })?;
        }
    }
    Ok("lambda image and labels of columns 3, 6, 7, 8, 12 exact".into())
}

fn expect_pass(id: CheckId, n_max: usize) -> Result<Duration, String> {
    let r = run_check(id, n_max).map_err(|e| e.to_string())?;
    ensure(r.status == Status::Pass, || format!("{r}"))?;
    Ok(r.elapsed)
}

fn bijection_suites() -> Verdict {
    let start = Instant::now();
    for id in [
        CheckId::Thm3,
        CheckId::Thm4,
        CheckId::Thm5,
        CheckId::Thm6,
        CheckId::Thm7,
        CheckId::Cor2,
    ] {
        expect_pass(id, 8)?;
    }
    let total = start.elapsed();
    ensure(total <= Duration::from_secs(600), || {
        format!("suite took {total:?}")
    })?;
    Ok(format!(
        "phi, lambda, psi, psi_bar, pex/des2 and cyc/pex+fix on n<=8 in {:.2} s",
        total.as_secs_f64()
    ))
}

fn foils() -> Verdict {
    let r = run_check(CheckId::Thm5PaperFoil, 3).map_err(|e| e.to_string())?;
    ensure(r.status == Status::RefutedAsExpected, || format!("{r}"))?;
    let c = r
        .counterexample
        .expect("refuted reports carry a counterexample");
    ensure(c.n == 3 && c.permutations[0].to_string() == "3 1 2", || {
        format!("{c}")
    })?;
    let f = run_check(CheckId::FoataFoil, 4).map_err(|e| e.to_string())?;
    ensure(f.status == Status::RefutedAsExpected, || format!("{f}"))?;
    let fc = f
        .counterexample
        .expect("refuted reports carry a counterexample");
    expect_pass(CheckId::Foata, 8)?;
    Ok(format!(
        "psi variant fails at [3 1 2]; foata foil at n={} [{}]; des = exc∘foata on n<=8",
        fc.n, fc.permutations[0]
    ))
}

fn conjectures() -> Verdict {
    expect_pass(CheckId::Conj1, 9)?;
    expect_pass(CheckId::Conj2, 9)?;
    Ok("(des2,cyc)~(pex,cyc) and (des2,des)~(pex,exc) for n<=9 (evidence, not proof)".into())
}

fn remark() -> Verdict {
    let exc = joint_distribution(Exc, Cyc, 3)
        .map_err(|e| e.to_string())?
        .get(1, 2);
    let des = joint_distribution(Des, Cyc, 3)
        .map_err(|e| e.to_string())?
        .get(1, 2);
    ensure(
        exc == BigUint::from(3u32) && des == BigUint::from(2u32),
        || format!("{exc} and {des}"),
    )?;
    expect_pass(CheckId::RemarkNoneq, 3)?;
    Ok("joint(exc,cyc,3)(1,2) = 3, joint(des,cyc,3)(1,2) = 2".into())
}

fn mesh_symmetry() -> Verdict {
    let mut checked = 0;
    for n in 0..=7 {
        for p in pexlab::enumeration::iter_permutations(n, &[]).map_err(|e| e.to_string())? {
            let rc = p.reverse_complement();
            for i in 0..=2 {
                let (a, b) = (
                    MeshPattern::left(i).count(&p),
                    MeshPattern::right(2 - i).count(&rc),
                );
                ensure(a == b, || format!("i={i} on {p}: {a} vs {b}"))?;
            }
            checked += 1;
        }
    }
    Ok(format!(
        "p_i on pi = p'_(2-i) on rc(pi) for {checked} permutations"
    ))
}

fn shard_determinism() -> Verdict {
    let commands: [&[&str]; 6] = [
        &["table", "des2", "9", "--format", "csv"],
        &["table", "pex", "9", "--format", "json"],
        &["joint", "pex", "cyc", "9", "--format", "json"],
        &["joint", "des2", "des", "8", "--format", "csv"],
        &["popularity", "des1", "9", "--format", "text"],
        &["check", "conj1", "thm4", "--max-n", "8", "--format", "json"],
    ];
    for cmd in commands {
        let out = |shards: &str| {
            let mut args = vec!["pexlab", "--shards", shards];
            args.extend_from_slice(cmd);
            pexlab_cli::run(args)
        };
        let (one, eight) = (out("1"), out("8"));
        ensure(one.code == 0, || format!("{cmd:?}: {}", one.stderr))?;
        ensure(one == eight, || {
            format!("{cmd:?} differs between 1 and 8 shards")
        })?;
    }
    Ok(format!(
        "{} commands byte-identical with 1 and 8 shards",
        commands.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        (
            "p2 distribution table via enumeration, recurrence and EGF",
            p2_table,
        ),
        (
            "des0 and des1 follow the Stirling numbers",
            stirling_identity,
        ),
        ("common popularity n!(H_n - 1)", popularity),
        (
            "lambda worked example and free-square labels",
            lambda_example,
        ),
        ("bijection suites", bijection_suites),
        ("foil checks and the Foata contract", foils),
        ("conjecture evidence", conjectures),
        ("(exc,cyc) and (des,cyc) differ on S_3", remark),
        ("mesh pattern symmetry", mesh_symmetry),
        ("shard-count determinism", shard_determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", k + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {detail}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
