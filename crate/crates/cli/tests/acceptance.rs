//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unipress::{
    census, count_sequences_bruteforce, cup_count, generate_cup, graph_root, instructional_root,
    principal_submatrix, random_cup, recognize, successful_sequences_bruteforce, total_count,
    transpose_mul, BitMatrix, Label, PressingSequence, PseudoGraph,
};

type Check = Result<String, String>;
type Criterion = (&'static str, &'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pairs(n: usize) -> Vec<(Label, Label)> {
    (1..=n as Label)
        .flat_map(|i| (i..=n as Label).map(move |j| (i, j)))
        .collect()
}

fn graph_from_mask(n: usize, pairs: &[(Label, Label)], mask: u64) -> PseudoGraph {
    let edges = pairs
        .iter()
        .enumerate()
        .filter(|&(b, _)| (mask >> b) & 1 == 1)
        .map(|(_, &e)| e);
    PseudoGraph::on_range(n, edges).unwrap()
}

fn ac1_golden_root() -> Check {
    let m = BitMatrix::from_01(&[
        [1, 0, 0, 0, 1],
        [0, 1, 0, 1, 0],
        [0, 0, 0, 0, 0],
        [0, 1, 0, 1, 0],
        [1, 0, 0, 0, 1],
    ])
    .unwrap();
    let expected = "5\n10001\n01010\n00000\n00000\n00000\n";
    let start = Instant::now();
    let root = instructional_root(&m).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(root.matrix().to_text() == expected, || {
        format!("root was {:?}", root.matrix().to_text())
    })?;
    ensure(transpose_mul(root.matrix()) == m, || {
        "U^T U differs from M".into()
    })?;
    ensure(elapsed < Duration::from_millis(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("root byte-exact, U^T U = M, {elapsed:?}"))
}

fn ac2_four_vertex_root() -> Check {
    // edges are the pairs with dot product 1, plus the loop of the odd-weight vertex 1
    let g = PseudoGraph::on_range(4, [(1, 1), (1, 2), (1, 4), (2, 3)]).unwrap();
    let root = graph_root(&g).map_err(|e| e.to_string())?;
    let weights = root.weights();
    ensure(weights == vec![1, 2, 2, 4], || {
        format!("weights {weights:?}")
    })?;
    let printed = [
        ((1, 2), true),
        ((1, 3), false),
        ((1, 4), true),
        ((2, 3), true),
        ((2, 4), false),
        ((3, 4), false),
    ];
    for ((i, j), want) in printed {
        let got = root.vertex_dot(i, j).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("<{i},{j}> = {got}"))?;
    }
    Ok("weights (1,2,2,4), six dot products match".into())
}

fn ac3_oracle_equivalence() -> Check {
    let mut checked = 0u64;
    let agree = |g: &PseudoGraph| -> Result<(), String> {
        let unique = count_sequences_bruteforce(g, 10).map_err(|e| e.to_string())? == 1;
        let yes = recognize(g).is_yes();
        ensure(yes == unique, || {
            format!("disagreement on {g:?}: recognize={yes}, unique={unique}")
        })
    };
    for n in 0..=4 {
        let p = pairs(n);
        for mask in 0..1u64 << p.len() {
            agree(&graph_from_mask(n, &p, mask))?;
            checked += 1;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut yes = 0;
    for _ in 0..10_000 {
        let n = rng.gen_range(5..=7);
        let p = pairs(n);
        let g = graph_from_mask(n, &p, rng.gen::<u64>() & ((1u64 << p.len()) - 1));
        agree(&g)?;
        yes += u32::from(recognize(&g).is_yes());
        checked += 1;
    }
    Ok(format!(
        "{checked} graphs agree ({yes} random samples accepted)"
    ))
}

fn ac4_counting() -> Check {
    for n in 2..=12 {
        let expected = if n % 2 == 0 {
            3u64.pow((n as u32 - 2) / 2)
        } else {
            2 * 3u64.pow((n as u32 - 3) / 2)
        };
        let got = generate_cup(n).len() as u64;
        ensure(got == expected, || {
            format!("generate_cup({n}) has {got}, want {expected}")
        })?;
        ensure(cup_count(n) == expected.into(), || {
            format!("cup_count({n})")
        })?;
    }
    for n in 0..=5usize {
        let expected: u64 = match n {
            0 => 1,
            1 => 2,
            _ if n % 2 == 0 => (5 * 3u64.pow((n as u32 - 2) / 2)).div_ceil(2),
            _ => 3u64.pow((n as u32).div_ceil(2)).div_ceil(2),
        };
        let c = census(n).map_err(|e| e.to_string())?;
        ensure(c.up_iso_classes == expected, || {
            format!("census({n}) = {}, want {expected}", c.up_iso_classes)
        })?;
        ensure(total_count(n) == expected.into(), || {
            format!("total_count({n})")
        })?;
    }
    ensure(census(2).unwrap().up_iso_classes == 3, || "T_2 != 3".into())?;
    Ok("generate sizes n=2..12 and census n<=5 match closed forms".into())
}

fn ac5_uniqueness() -> Check {
    let mut total = 0;
    for n in 1..=8 {
        for g in generate_cup(n) {
            let seqs = successful_sequences_bruteforce(&g, 10).map_err(|e| e.to_string())?;
            ensure(seqs == vec![PressingSequence::identity(n)], || {
                format!("{g:?} has sequences {seqs:?}")
            })?;
            total += 1;
        }
    }
    Ok(format!(
        "{total} generated graphs each have the single sequence 1..n"
    ))
}

fn ac6_counterexamples() -> Check {
    let v1 = BitMatrix::from_01(&[[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]]).unwrap();
    let v2 = BitMatrix::from_01(&[[1, 1, 1, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]]).unwrap();
    let g1 = PseudoGraph::from_adjacency(&transpose_mul(&v1)).unwrap();
    let g2 = PseudoGraph::from_adjacency(&transpose_mul(&v2)).unwrap();
    let r2 = recognize(&g2);
    ensure(!r2.is_yes(), || "V2 graph accepted".into())?;
    let second = PressingSequence::new(vec![3, 4, 1, 2]).unwrap();
    ensure(g2.is_successful(&second), || {
        "(3,4,1,2) not successful".into()
    })?;
    ensure(recognize(&g1).is_yes(), || "V1 graph rejected".into())?;
    Ok(format!(
        "V2 graph rejected ({}), (3,4,1,2) successful, V1 graph accepted",
        r2.reason.map(|r| r.to_string()).unwrap_or_default()
    ))
}

fn ac7_hereditary() -> Check {
    let mut total = 0;
    for n in 2..=10 {
        for g in generate_cup(n) {
            let u = graph_root(&g).map_err(|e| e.to_string())?.into_matrix();
            let first = graph_root(&g.press_and_delete(1).unwrap()).map_err(|e| e.to_string())?;
            ensure(
                first.matrix() == &principal_submatrix(&u, 2, n).unwrap(),
                || format!("press-and-delete 1 on {g:?}"),
            )?;
            let last =
                graph_root(&g.delete_vertex(n as Label).unwrap()).map_err(|e| e.to_string())?;
            ensure(
                last.matrix() == &principal_submatrix(&u, 1, n - 1).unwrap(),
                || format!("delete {n} on {g:?}"),
            )?;
            total += 1;
        }
    }
    Ok(format!(
        "{total} generated graphs, both deletions match submatrices"
    ))
}

fn best_time(g: &PseudoGraph, runs: usize) -> Result<Duration, String> {
    let mut best = Duration::MAX;
    for _ in 0..runs {
        let start = Instant::now();
        let report = recognize(g);
        let t = start.elapsed();
        ensure(report.is_yes(), || {
            format!("random CUP graph on {} vertices rejected", g.n())
        })?;
        best = best.min(t);
    }
    Ok(best)
}

fn ac8_scaling() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let small = random_cup(512, &mut rng);
    let large = random_cup(1024, &mut rng);
    let t_small = best_time(&small, 15)?;
    let t_large = best_time(&large, 9)?;
    let ratio = t_large.as_secs_f64() / t_small.as_secs_f64();
    let detail = format!("n=512 {t_small:?}, n=1024 {t_large:?}, ratio {ratio:.2}");
    ensure((4.0..=16.0).contains(&ratio), || detail.clone())?;
    Ok(detail)
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("data")
}

fn run_cli(dir: &Path, args: &[&str]) -> Result<(Vec<u8>, i32), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_unipress"))
        .args(args)
        .current_dir(dir)
        .output()
        .map_err(|e| e.to_string())?;
    Ok((out.stdout, out.status.code().unwrap_or(-1)))
}

fn ac9_cli_golden() -> Check {
    let dir = data_dir();
    let cases = fs::read_to_string(dir.join("cases.tsv")).map_err(|e| e.to_string())?;
    let mut count = 0;
    for line in cases
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
    {
        let mut fields = line.split('\t');
        let (name, code, args) = match (fields.next(), fields.next(), fields.next()) {
            (Some(n), Some(c), Some(a)) => (n, c.parse::<i32>().map_err(|e| e.to_string())?, a),
            _ => return Err(format!("bad case line {line:?}")),
        };
        let args: Vec<&str> = args.split_whitespace().collect();
        let (first, code1) = run_cli(&dir, &args)?;
        let (second, code2) = run_cli(&dir, &args)?;
        ensure(first == second && code1 == code2, || {
            format!("{name}: runs differ")
        })?;
        ensure(code1 == code, || {
            format!("{name}: exit {code1}, want {code}")
        })?;
        let golden =
            fs::read(dir.join(format!("{name}.out"))).map_err(|e| format!("{name}: {e}"))?;
        ensure(first == golden, || {
            format!(
                "{name}: output {:?} differs from golden",
                String::from_utf8_lossy(&first)
            )
        })?;
        count += 1;
    }
    Ok(format!(
        "{count} cases byte-identical across two runs with expected exit codes"
    ))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("AC1", "golden instructional root", ac1_golden_root),
        (
            "AC2",
            "four-vertex root weights and dot products",
            ac2_four_vertex_root,
        ),
        (
            "AC3",
            "recognizer equals brute-force uniqueness",
            ac3_oracle_equivalence,
        ),
        ("AC4", "counting formulas", ac4_counting),
        (
            "AC5",
            "generated graphs are uniquely pressable",
            ac5_uniqueness,
        ),
        ("AC6", "four-vertex counterexamples", ac6_counterexamples),
        ("AC7", "hereditary roots", ac7_hereditary),
        ("AC8", "cubic scaling of recognize", ac8_scaling),
        ("AC9", "CLI golden suite", ac9_cli_golden),
    ];
    let mut failed = 0;
    for (id, title, check) in criteria {
        match check() {
            Ok(detail) => println!("{id} PASS {title}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("{id} FAIL {title}: {detail}");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
