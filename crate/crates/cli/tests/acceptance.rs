//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
//!
//! Criteria 1 to 9 run the library suites at their full scope. Criterion 10
//! checks the fast kernels against brute-force oracles written here. Criterion
//! 11 runs the binary twice and compares the reports byte for byte.

use std::collections::BTreeMap;
use std::process::Command;
use std::time::{Duration, Instant};

use clifford_forge::cocycle::{is_coboundary, FactorSet};
use clifford_forge::groupcore::{all_subgroups, catalog, GroupTable, Subgroup};
use clifford_forge::meataxe::{hom_basis_all_elements, hom_basis_reps};
use clifford_forge::repmod::{induce, regular_rep, tensor, trivial_rep, Representation};
use clifford_forge::scenarios::{run_suite, Report, SuiteConfig, Verdict};
use clifford_forge::{Matrix, Polynomial, PrimeField};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn config(max_order: usize, primes: &[u64]) -> SuiteConfig {
    SuiteConfig {
        max_order,
        primes: primes.to_vec(),
        ..SuiteConfig::default()
    }
}

fn suite(id: &str, cfg: &SuiteConfig) -> Result<(Report, Duration), String> {
    let start = Instant::now();
    let report = run_suite(id, cfg).map_err(|e| e.to_string())?;
    Ok((report, start.elapsed()))
}

/// Counts per claim, and an error naming the first failure.
fn tally(report: &Report) -> Result<BTreeMap<String, usize>, String> {
    if let Some(bad) = report.failures().next() {
        return Err(format!(
            "{} FAIL, first {} {}: {}",
            report.summary().fail,
            bad.claim,
            bad.scenario,
            bad.witness.lines().next().unwrap_or("")
        ));
    }
    let mut counts = BTreeMap::new();
    for e in &report.entries {
        if e.verdict == Verdict::Pass {
            *counts.entry(e.claim.clone()).or_insert(0) += 1;
        }
    }
    Ok(counts)
}

fn require(counts: &BTreeMap<String, usize>, claim: &str, at_least: usize) -> Result<usize, String> {
    let n = counts.get(claim).copied().unwrap_or(0);
    if n < at_least {
        return Err(format!("{claim}: {n} passing checks, expected at least {at_least}"));
    }
    Ok(n)
}

fn has_pass(report: &Report, claim: &str, scenario: &str) -> Result<(), String> {
    report
        .entries
        .iter()
        .any(|e| e.claim == claim && e.scenario == scenario && e.verdict == Verdict::Pass)
        .then_some(())
        .ok_or_else(|| format!("missing passing {claim} on {scenario}"))
}

fn summarize(counts: &BTreeMap<String, usize>, elapsed: Duration) -> String {
    let parts: Vec<String> = counts.iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{} in {:.1}s", parts.join(" "), elapsed.as_secs_f64())
}

fn criterion_mackey() -> Outcome {
    let (report, elapsed) = suite("mackey", &config(16, &[2, 3, 5, 7]))?;
    let counts = tally(&report)?;
    for claim in ["mackey-tensor", "mackey-restriction", "resext", "perm-tensor"] {
        require(&counts, claim, 1)?;
    }
    require(&counts, "mackey-random", 100)?;
    has_pass(&report, "mackey-ledger", "S3/2|2/p5")?;
    Ok(summarize(&counts, elapsed))
}

fn criterion_clifford() -> Outcome {
    let (report, elapsed) = suite("clifford", &config(16, &[2, 3, 5, 7]))?;
    let counts = tally(&report)?;
    require(&counts, "stage1", 1)?;
    require(&counts, "stage2", 1)?;
    Ok(summarize(&counts, elapsed))
}

fn criterion_correspondence() -> Outcome {
    let (report, elapsed) = suite("correspondence", &config(16, &[2, 3, 5, 7]))?;
    let counts = tally(&report)?;
    require(&counts, "correspondence", 1)?;
    has_pass(&report, "correspondence-s3", "S3/A3/p7")?;
    has_pass(&report, "correspondence-degenerate", "radical-p3-m2-a2")?;
    Ok(summarize(&counts, elapsed))
}

fn criterion_gluing() -> Outcome {
    let (report, elapsed) = suite("gluing", &config(16, &[2, 3, 5, 7]))?;
    let counts = tally(&report)?;
    require(&counts, "gluing", 1)?;
    has_pass(&report, "gluing-radical", "radical-p3-m2-a2")?;
    Ok(summarize(&counts, elapsed))
}

fn criterion_forma() -> Outcome {
    let (report, elapsed) = suite("forma", &config(16, &[2, 3, 5, 7]))?;
    let counts = tally(&report)?;
    require(&counts, "forma", 200)?;
    Ok(summarize(&counts, elapsed))
}

fn criterion_radical() -> Outcome {
    let (report, elapsed) = suite("radical", &config(16, &[2, 3, 5, 7]))?;
    let counts = tally(&report)?;
    // (7,3,3) is present only when the builder confirms t^3 - 3 irreducible mod 7.
    let instances = require(&counts, "end-field-degree", 3)?;
    for claim in ["induced-irreducible", "inertia-order", "narr-holding", "split"] {
        require(&counts, claim, instances)?;
    }
    if elapsed >= Duration::from_secs(10) {
        return Err(format!("took {:.1}s, budget 10s", elapsed.as_secs_f64()));
    }
    Ok(summarize(&counts, elapsed))
}

fn criterion_narr() -> Outcome {
    let (report, elapsed) = suite("narr", &config(16, &[2, 3, 5, 7]))?;
    let counts = tally(&report)?;
    require(&counts, "narr", 1)?;
    Ok(summarize(&counts, elapsed))
}

fn criterion_frobenius() -> Outcome {
    let (report, elapsed) = suite("frobenius", &config(16, &[3, 5, 7]))?;
    let counts = tally(&report)?;
    require(&counts, "frobenius", 1)?;
    Ok(summarize(&counts, elapsed))
}

fn criterion_direct_product() -> Outcome {
    let (report, elapsed) = suite("direct-product", &config(16, &[2, 3, 5, 7]))?;
    let counts = tally(&report)?;
    require(&counts, "direct-product", 4)?;
    Ok(summarize(&counts, elapsed))
}

fn field(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

/// Rank of the flattened matrices, as vectors.
fn span_rank(field: PrimeField, mats: &[Matrix]) -> usize {
    if mats.is_empty() {
        return 0;
    }
    let rows: Vec<Vec<u32>> = mats.iter().map(|m| m.entries().to_vec()).collect();
    Matrix::from_row_vectors(field, rows[0].len(), &rows).rank()
}

fn oracle_modules(h: &Subgroup, f: PrimeField, rng: &mut ChaCha8Rng) -> Vec<Representation> {
    let mut out = vec![trivial_rep(h, f), regular_rep(h, f)];
    let subs = all_subgroups(h);
    let k = &subs[rng.gen_range(0..subs.len())];
    let perm = induce(&trivial_rep(k, f), h);
    out.push(tensor(&perm, &perm).unwrap());
    out.push(perm);
    out
}

fn hom_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let groups = catalog(12);
    let mut total_dim = 0;
    for case in 0..50 {
        let g = Subgroup::full(groups[rng.gen_range(1..groups.len())].clone());
        let f = field([2, 3, 5, 7][rng.gen_range(0..4)]);
        let subs = all_subgroups(&g);
        let h = &subs[rng.gen_range(0..subs.len())];
        let mods = oracle_modules(h, f, &mut rng);
        let a = &mods[rng.gen_range(0..mods.len())];
        let b = &mods[rng.gen_range(0..mods.len())];
        let fast = hom_basis_reps(a, b).map_err(|e| e.to_string())?.basis;
        let brute = hom_basis_all_elements(a, b).map_err(|e| e.to_string())?;
        let mut joint = fast.clone();
        joint.extend(brute.iter().cloned());
        let agree = span_rank(f, &fast) == fast.len()
            && fast.len() == brute.len()
            && span_rank(f, &joint) == fast.len()
            && fast.iter().all(|t| a.intertwines_to(b, t));
        if !agree {
            return Err(format!(
                "hom case {case} on {}: fast {} vs brute {}",
                g.parent().name(),
                fast.len(),
                brute.len()
            ));
        }
        total_dim += fast.len();
    }
    Ok(format!("hom 50 cases (total dim {total_dim})"))
}

/// Homomorphisms `G -> Z/m` as value tables, found by brute force.
fn cyclic_characters(table: &GroupTable, m: usize) -> Vec<Vec<usize>> {
    let n = table.order();
    let mut out = Vec::new();
    let mut values = vec![0usize; n];
    loop {
        let hom = table
            .elements()
            .all(|x| table.elements().all(|y| values[table.mul(x, y)] == (values[x] + values[y]) % m));
        if hom {
            out.push(values.clone());
        }
        let mut i = 0;
        while i < n && values[i] == m - 1 {
            values[i] = 0;
            i += 1;
        }
        if i == n {
            return out;
        }
        values[i] += 1;
    }
}

fn exhaustive_coboundary(alpha: &FactorSet) -> bool {
    let g = alpha.group();
    let f = alpha.field();
    let members = g.members();
    let k = members.len();
    let units: Vec<u32> = (1..f.modulus()).collect();
    let mut digits = vec![0usize; k];
    loop {
        let mu = |x: usize| units[digits[g.position(x).unwrap()]];
        let table = g.parent();
        let ok = members.iter().all(|&x| {
            members.iter().all(|&y| {
                let rhs = f.mul(f.mul(mu(x), mu(y)), f.inv(mu(table.mul(x, y))));
                alpha.value(x, y) == rhs
            })
        });
        if ok {
            return true;
        }
        let mut i = 0;
        while i < k && digits[i] == units.len() - 1 {
            digits[i] = 0;
            i += 1;
        }
        if i == k {
            return false;
        }
        digits[i] += 1;
    }
}

fn coboundary_oracle() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut cases, mut yes) = (0, 0);
    for table in catalog(6) {
        let g = Subgroup::full(table.clone());
        for p in [3, 5, 7] {
            let f = field(p);
            for m in [2, 3] {
                for chi in cyclic_characters(&table, m) {
                    for c in 1..p as u32 {
                        // Pullback of a cyclic extension class, times a random coboundary.
                        let mu: Vec<u32> = (0..table.order()).map(|_| rng.gen_range(1..p as u32)).collect();
                        let alpha = FactorSet::from_fn(&g, f, |x, y| {
                            let base = if chi[x] + chi[y] >= m { c } else { 1 };
                            let cob = f.mul(f.mul(mu[x], mu[y]), f.inv(mu[table.mul(x, y)]));
                            f.mul(base, cob)
                        })
                        .map_err(|e| e.to_string())?;
                        let brute = exhaustive_coboundary(&alpha);
                        let fast = is_coboundary(&alpha);
                        if fast.is_some() != brute {
                            return Err(format!("coboundary disagreement on {} p={p}", table.name()));
                        }
                        cases += 1;
                        yes += brute as usize;
                    }
                }
            }
        }
    }
    if yes == 0 || yes == cases {
        return Err(format!("coboundary oracle saw only one outcome in {cases} cases"));
    }
    Ok(format!("coboundary {cases} cases ({yes} coboundaries)"))
}

fn all_monic(f: PrimeField, degree: usize) -> Vec<Polynomial> {
    let p = f.modulus() as usize;
    (0..p.pow(degree as u32))
        .map(|mut code| {
            let mut coeffs: Vec<u32> = (0..degree)
                .map(|_| {
                    let c = (code % p) as u32;
                    code /= p;
                    c
                })
                .collect();
            coeffs.push(1);
            Polynomial::new(f, coeffs)
        })
        .collect()
}

fn poly_oracle() -> Result<String, String> {
    let mut cases = 0;
    for p in [2, 3, 5, 7] {
        let f = field(p);
        let divisors: Vec<Polynomial> = (1..=2).flat_map(|d| all_monic(f, d)).collect();
        for degree in 1..=4 {
            for poly in all_monic(f, degree) {
                let brute = divisors
                    .iter()
                    .filter(|d| 2 * d.degree().unwrap() <= degree)
                    .all(|d| !poly.rem(d).is_zero());
                let scaled = poly.scale((p - 1) as u32);
                for q in [&poly, &scaled] {
                    let fast = q.is_irreducible().map_err(|e| e.to_string())?;
                    if fast != brute {
                        return Err(format!("irreducibility disagreement on {q:?} mod {p}"));
                    }
                    cases += 1;
                }
            }
        }
    }
    Ok(format!("poly {cases} cases"))
}

fn criterion_oracles() -> Outcome {
    Ok([hom_oracle()?, coboundary_oracle()?, poly_oracle()?].join(", "))
}

fn criterion_determinism() -> Outcome {
    let run = || -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_clifford-forge"))
            .args(["verify", "--suite", "all", "--seed", "7"])
            .env_remove("CLIFFORD_FORGE_SEED")
            .output()
            .map_err(|e| e.to_string())?;
        if !out.status.success() {
            return Err(format!("verify exited with {}", out.status));
        }
        Ok(out.stdout)
    };
    let start = Instant::now();
    let (first, second) = (run()?, run()?);
    if first != second {
        return Err("reports differ between runs".into());
    }
    Ok(format!(
        "{} identical bytes in {:.1}s",
        first.len(),
        start.elapsed().as_secs_f64()
    ))
}

fn main() {
    let criteria: [(u32, &str, fn() -> Outcome); 11] = [
        (1, "mackey", criterion_mackey),
        (2, "clifford stages", criterion_clifford),
        (3, "correspondence", criterion_correspondence),
        (4, "gluing", criterion_gluing),
        (5, "intertwiner factoring", criterion_forma),
        (6, "radical family", criterion_radical),
        (7, "inertia conditions", criterion_narr),
        (8, "frobenius reciprocity", criterion_frobenius),
        (9, "direct product", criterion_direct_product),
        (10, "kernel oracles", criterion_oracles),
        (11, "determinism", criterion_determinism),
    ];
    let filter: Vec<u32> = std::env::var("ACCEPTANCE_ONLY")
        .ok()
        .map(|s| s.split(',').filter_map(|t| t.trim().parse().ok()).collect())
        .unwrap_or_default();
    let mut failed = 0;
    for (id, name, check) in criteria {
        if !filter.is_empty() && !filter.contains(&id) {
            continue;
        }
        match check() {
            Ok(detail) => println!("criterion {id:>2} PASS {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("criterion {id:>2} FAIL {name}: {why}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
