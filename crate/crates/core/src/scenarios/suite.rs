//! Theorem suites over the built-in catalog. Every suite expands into
//! independent jobs in a fixed order; the jobs run on a pool sized by
//! `jobs` and their entries are concatenated in job order.

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::builders::{build_crossed_product, build_radical_example, FactorTable};
use super::claims::evaluate;
use super::report::{Report, ReportEntry, Verdict};
use super::ScenarioError;
use crate::clifford::{
    enumerate_irreducibles, factor_intertwiner, inertia_group, lies_over, narr_conditions,
    verify_correspondence, verify_direct_product, verify_frobenius, verify_stage1, verify_stage2,
    Verification,
};
use crate::cocycle::glue_all;
use crate::exactfield::{linear_combination, Matrix, PrimeField};
use crate::groupcore::{
    all_subgroups, catalog, catalog_entry, is_normal, GroupTable, Subgroup,
};
use crate::meataxe::{end_ring, hom_basis, is_irreducible, is_isomorphic_reps};
use crate::mackey::{mackey_restriction, mackey_tensor, perm_tensor_corollary, resext_iso};
use crate::repmod::{induce, regular_rep, restrict, trivial_rep, AlgebraModule, Representation};

/// Suite names in the order `all` runs them.
pub const SUITES: [&str; 10] = [
    "mackey",
    "clifford",
    "correspondence",
    "gluing",
    "forma",
    "frobenius",
    "narr",
    "direct-product",
    "radical",
    "crossed",
];

const RANDOM_MACKEY_INSTANCES: usize = 100;
const RANDOM_INTERTWINERS: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Largest catalog group order visited.
    pub max_order: usize,
    pub primes: Vec<u64>,
    /// Seeds the randomized instances.
    pub seed: u64,
    /// Worker threads; 0 picks the number of available cores.
    pub jobs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_order: 12,
            primes: vec![2, 3, 5, 7],
            seed: 1,
            jobs: 0,
        }
    }
}

type Job = Box<dyn Fn() -> Vec<ReportEntry> + Send + Sync>;

/// Runs one suite, or every suite for `all`.
pub fn run_suite(id: &str, config: &SuiteConfig) -> Result<Report, ScenarioError> {
    let names: Vec<&str> = if id == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&id) {
        vec![id]
    } else {
        return Err(ScenarioError::UnknownSuite(id.to_string()));
    };
    let mut fields = Vec::new();
    for &p in &config.primes {
        fields.push(PrimeField::new(p).map_err(|e| ScenarioError::Parameters(e.to_string()))?);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| ScenarioError::Parameters(e.to_string()))?;
    let ctx = Context {
        groups: catalog(config.max_order),
        fields,
        seed: config.seed,
    };
    let mut report = Report::default();
    for name in names {
        let jobs = ctx.jobs(name);
        let entries: Vec<Vec<ReportEntry>> = pool.install(|| jobs.par_iter().map(|j| j()).collect());
        report.extend(Report::new(entries.into_iter().flatten().collect()));
    }
    Ok(report)
}

struct Context {
    groups: Vec<Arc<GroupTable>>,
    fields: Vec<PrimeField>,
    seed: u64,
}

fn entry(scenario: String, claim: &str, start: Instant, outcome: Result<String, String>) -> ReportEntry {
    let (verdict, witness) = match outcome {
        Ok(w) => (Verdict::Pass, w),
        Err(w) => (Verdict::Fail, w),
    };
    ReportEntry {
        scenario,
        claim: claim.to_string(),
        verdict,
        witness,
        elapsed: start.elapsed(),
    }
}

fn info(scenario: String, claim: &str, start: Instant, witness: String) -> ReportEntry {
    ReportEntry {
        scenario,
        claim: claim.to_string(),
        verdict: Verdict::Info,
        witness,
        elapsed: start.elapsed(),
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn verdict(v: &Verification) -> Result<(), String> {
    let failures: Vec<String> = v.failures().map(|(id, m)| format!("{id}: {m}")).collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures.join("; "))
    }
}

fn coprime(field: PrimeField, order: usize) -> bool {
    !order.is_multiple_of(field.modulus() as usize)
}

/// `<group>/<order>.<index>` for a member of `all_subgroups(group)`.
fn sub_label(table: &GroupTable, subs: &[Subgroup], h: &Subgroup) -> String {
    let i = subs.iter().position(|s| s == h).expect("subgroup from the list");
    format!("{}/{}.{}", table.name(), h.order(), i)
}

/// Trivial, regular, then the irreducibles in enumeration order.
fn modules(h: &Subgroup, field: PrimeField) -> Result<Vec<Representation>, String> {
    let mut out = vec![trivial_rep(h, field), regular_rep(h, field)];
    out.extend(enumerate_irreducibles(h, field).map_err(err)?);
    Ok(out)
}

fn irreducibles(h: &Subgroup, field: PrimeField) -> Result<Vec<Representation>, String> {
    enumerate_irreducibles(h, field).map_err(err)
}

/// Every `(G, N)` with `N` normal, in catalog then subgroup order.
fn normal_pairs(groups: &[Arc<GroupTable>]) -> Vec<(Arc<GroupTable>, Vec<Subgroup>, Subgroup)> {
    let mut out = Vec::new();
    for t in groups {
        let g = Subgroup::full(t.clone());
        let subs = all_subgroups(&g);
        for n in subs.iter().filter(|h| is_normal(h)) {
            out.push((t.clone(), subs.clone(), n.clone()));
        }
    }
    out
}

fn is_abs_irreducible(w: &Representation) -> Result<bool, String> {
    Ok(end_ring(&w.to_algebra_module()).map_err(err)?.is_scalar)
}

impl Context {
    fn jobs(&self, suite: &str) -> Vec<Job> {
        match suite {
            "mackey" => self.mackey(),
            "clifford" => self.per_normal_pair(true, clifford_job),
            "correspondence" => {
                let mut jobs = self.per_normal_pair(true, correspondence_job);
                jobs.push(Box::new(correspondence_fixed));
                jobs
            }
            "gluing" => {
                let mut jobs = self.per_normal_pair(true, gluing_job);
                jobs.push(Box::new(gluing_radical));
                jobs
            }
            "forma" => self.forma(),
            "frobenius" => self.frobenius(),
            "narr" => self.per_normal_pair(false, narr_job),
            "direct-product" => self.direct_product(),
            "radical" => radical_jobs(),
            "crossed" => crossed_jobs(),
            _ => unreachable!("suite names are checked by run_suite"),
        }
    }

    fn per_normal_pair(
        &self,
        coprime_only: bool,
        run: fn(&GroupTable, &[Subgroup], &Subgroup, PrimeField) -> Vec<ReportEntry>,
    ) -> Vec<Job> {
        let mut jobs: Vec<Job> = Vec::new();
        for (t, subs, n) in normal_pairs(&self.groups) {
            let subs = Arc::new(subs);
            for &field in &self.fields {
                if coprime_only && !coprime(field, t.order()) {
                    continue;
                }
                let (t, subs, n) = (t.clone(), subs.clone(), n.clone());
                jobs.push(Box::new(move || run(&t, &subs, &n, field)));
            }
        }
        jobs
    }

    fn mackey(&self) -> Vec<Job> {
        let mut jobs: Vec<Job> = Vec::new();
        for t in &self.groups {
            let g = Subgroup::full(t.clone());
            let subs = all_subgroups(&g);
            for &field in &self.fields {
                let cache = Arc::new(ModuleCache::new(subs.clone(), field));
                for i in 0..subs.len() {
                    for j in 0..subs.len() {
                        let (t, cache) = (t.clone(), cache.clone());
                        jobs.push(Box::new(move || mackey_pair(&t, &cache, i, j)));
                    }
                }
            }
        }
        let (groups, fields, seed) = (self.groups.clone(), self.fields.clone(), self.seed);
        if !groups.is_empty() && !fields.is_empty() {
            for k in 0..RANDOM_MACKEY_INSTANCES {
                let (groups, fields) = (groups.clone(), fields.clone());
                jobs.push(Box::new(move || mackey_random(&groups, &fields, seed, k)));
            }
        }
        jobs.push(Box::new(mackey_s3_ledger));
        jobs
    }

    fn forma(&self) -> Vec<Job> {
        let (groups, fields, seed) = (self.groups.clone(), self.fields.clone(), self.seed);
        if groups.is_empty() || fields.is_empty() {
            return Vec::new();
        }
        (0..RANDOM_INTERTWINERS)
            .map(|k| {
                let (groups, fields) = (groups.clone(), fields.clone());
                Box::new(move || vec![forma_instance(&groups, &fields, seed, k)]) as Job
            })
            .collect()
    }

    fn frobenius(&self) -> Vec<Job> {
        let mut jobs: Vec<Job> = Vec::new();
        for t in &self.groups {
            let g = Subgroup::full(t.clone());
            let subs = Arc::new(all_subgroups(&g));
            for &field in &self.fields {
                for i in 0..subs.len() {
                    let (t, subs) = (t.clone(), subs.clone());
                    jobs.push(Box::new(move || frobenius_job(&t, &subs, i, field)));
                }
            }
        }
        jobs
    }

    fn direct_product(&self) -> Vec<Job> {
        let mut jobs: Vec<Job> = Vec::new();
        for (a, b) in [("C2", "C2"), ("S3", "C2"), ("S3", "C3"), ("C4", "C2")] {
            let g1 = catalog_entry(a).expect("catalog name").into_arc();
            let g2 = catalog_entry(b).expect("catalog name").into_arc();
            for &field in &self.fields {
                if !coprime(field, g1.order() * g2.order()) {
                    continue;
                }
                let (g1, g2) = (g1.clone(), g2.clone());
                jobs.push(Box::new(move || {
                    let start = Instant::now();
                    let name = format!("{}x{}/p{}", g1.name(), g2.name(), field.modulus());
                    let outcome = verify_direct_product(&g1, &g2, field)
                        .map_err(err)
                        .and_then(|r| {
                            verdict(&r.verification)?;
                            let mut dims: Vec<usize> = r.irreducibles.iter().map(|v| v.dim()).collect();
                            dims.sort_unstable();
                            Ok(format!(
                                "{} outer products, irreducible dimensions {dims:?}",
                                r.pairs.len()
                            ))
                        });
                    vec![entry(name, "direct-product", start, outcome)]
                }));
            }
        }
        jobs
    }
}

/// Module lists of every subgroup of one group over one field, built on
/// first use and shared by all pair jobs.
struct ModuleCache {
    subs: Vec<Subgroup>,
    field: PrimeField,
    lists: Vec<OnceLock<Result<Vec<Representation>, String>>>,
}

impl ModuleCache {
    fn new(subs: Vec<Subgroup>, field: PrimeField) -> Self {
        let lists = subs.iter().map(|_| OnceLock::new()).collect();
        ModuleCache { subs, field, lists }
    }

    fn get(&self, i: usize) -> Result<&[Representation], String> {
        self.lists[i]
            .get_or_init(|| modules(&self.subs[i], self.field))
            .as_deref()
            .map_err(Clone::clone)
    }
}

fn mackey_pair(t: &GroupTable, cache: &ModuleCache, i: usize, j: usize) -> Vec<ReportEntry> {
    let subs = &cache.subs;
    let field = cache.field;
    let g = Subgroup::full(subs[0].parent().clone());
    let (h1, h2) = (&subs[i], &subs[j]);
    let name = format!(
        "{}|{}/p{}",
        sub_label(t, subs, h1),
        sub_label(t, subs, h2).split_once('/').unwrap().1,
        field.modulus()
    );
    let start = Instant::now();
    let lists = cache
        .get(i)
        .and_then(|m1| Ok((m1, cache.get(j)?, cache.get(subs.len() - 1)?)));
    let (m1, m2, mg) = match lists {
        Ok(l) => l,
        Err(e) => return vec![entry(name, "mackey-modules", start, Err(e))],
    };
    // Pairs are taken along the diagonal so every module on each side appears.
    let count = m1.len().max(m2.len());
    let pick = |k: usize| (&m1[k % m1.len()], &m2[k % m2.len()], &mg[k % mg.len()]);
    let mut out = Vec::with_capacity(4);
    let mut run = |claim: &str, f: &dyn Fn(&Representation, &Representation, &Representation) -> Result<usize, String>| {
        let start = Instant::now();
        let mut dims = 0;
        let mut outcome = Ok(());
        for k in 0..count {
            let (v1, v2, v) = pick(k);
            match f(v1, v2, v) {
                Ok(d) => dims += d,
                Err(e) => {
                    outcome = Err(format!("module pair {k}: {e}"));
                    break;
                }
            }
        }
        let outcome = outcome.map(|()| format!("{count} module pairs, total dimension {dims}"));
        out.push(entry(name.clone(), claim, start, outcome));
    };
    run("mackey-tensor", &|v1, v2, _| {
        let w = mackey_tensor(v1, v2, &g).map_err(err)?;
        let ledger: usize = w
            .block_map
            .iter()
            .map(|b| g.order() / b.subgroup.order() * v1.dim() * v2.dim())
            .sum();
        if ledger != w.lhs.dim() {
            return Err(format!("blocks sum to {ledger}, not {}", w.lhs.dim()));
        }
        Ok(w.lhs.dim())
    });
    run("mackey-restriction", &|v1, _, _| {
        Ok(mackey_restriction(v1, h2, &g).map_err(err)?.lhs.dim())
    });
    run("resext", &|v1, _, v| Ok(resext_iso(v1, v).map_err(err)?.lhs.dim()));
    run("perm-tensor", &|_, v2, _| {
        Ok(perm_tensor_corollary(h1, v2, &g).map_err(err)?.lhs.dim())
    });
    out
}

fn mackey_random(groups: &[Arc<GroupTable>], fields: &[PrimeField], seed: u64, k: usize) -> Vec<ReportEntry> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x6d61_636b ^ ((k as u64) << 32));
    let t = &groups[rng.gen_range(0..groups.len())];
    let field = fields[rng.gen_range(0..fields.len())];
    let g = Subgroup::full(t.clone());
    let subs = all_subgroups(&g);
    let h1 = &subs[rng.gen_range(0..subs.len())];
    let h2 = &subs[rng.gen_range(0..subs.len())];
    let name = format!(
        "random-{k}:{}|{}/p{}",
        sub_label(t, &subs, h1),
        sub_label(t, &subs, h2).split_once('/').unwrap().1,
        field.modulus()
    );
    let start = Instant::now();
    let outcome = (|| {
        let m1 = modules(h1, field)?;
        let m2 = modules(h2, field)?;
        let mg = modules(&g, field)?;
        let v1 = &m1[rng.gen_range(0..m1.len())];
        let v2 = &m2[rng.gen_range(0..m2.len())];
        let v = &mg[rng.gen_range(0..mg.len())];
        let w = mackey_tensor(v1, v2, &g).map_err(err)?;
        mackey_restriction(v1, h2, &g).map_err(err)?;
        resext_iso(v1, v).map_err(err)?;
        perm_tensor_corollary(h1, v2, &g).map_err(err)?;
        Ok(format!(
            "dimensions {} x {}, tensor blocks {:?}",
            v1.dim(),
            v2.dim(),
            w.block_dims()
        ))
    })();
    vec![entry(name, "mackey-random", start, outcome)]
}

/// `ind 1 (x) ind 1` from the order-two subgroup of `S3` splits as `3 + 6`.
fn mackey_s3_ledger() -> Vec<ReportEntry> {
    let start = Instant::now();
    let t = catalog_entry("S3").expect("S3 is in the catalog").into_arc();
    let g = Subgroup::full(t.clone());
    let field = PrimeField::new(5).expect("5 is prime");
    let involution = t.elements().find(|&a| t.element_order(a) == 2).unwrap();
    let h = crate::groupcore::subgroup_generated(&t, &[involution]);
    let triv = trivial_rep(&h, field);
    let outcome = mackey_tensor(&triv, &triv, &g).map_err(err).and_then(|w| {
        let dims = w.block_dims();
        if w.lhs.dim() == 9 && dims == [3, 6] {
            Ok(format!("9 = 3 + 6\n{}", w.provenance().trim_end()))
        } else {
            Err(format!("dimension {} splits as {dims:?}", w.lhs.dim()))
        }
    });
    vec![entry("S3/2|2/p5".into(), "mackey-ledger", start, outcome)]
}

fn pair_name(t: &GroupTable, subs: &[Subgroup], n: &Subgroup, field: PrimeField) -> String {
    format!("{}/p{}", sub_label(t, subs, n), field.modulus())
}

fn clifford_job(t: &GroupTable, subs: &[Subgroup], n: &Subgroup, field: PrimeField) -> Vec<ReportEntry> {
    let name = pair_name(t, subs, n, field);
    let g = Subgroup::full(n.parent().clone());
    let start = Instant::now();
    let stage1 = (|| {
        let irr = irreducibles(&g, field)?;
        for (i, v) in irr.iter().enumerate() {
            let report = verify_stage1(v, n).map_err(err)?;
            verdict(&report.verification).map_err(|e| format!("V{i}: {e}"))?;
            let back = induce(report.s.as_ref().expect("passing report has S"), &g);
            if is_isomorphic_reps(&back, v).map_err(err)?.is_none() {
                return Err(format!("V{i}: re-induction does not recover V"));
            }
        }
        Ok(format!("{} irreducibles of G", irr.len()))
    })();
    let mut out = vec![entry(name.clone(), "stage1", start, stage1)];
    let start = Instant::now();
    let stage2 = (|| {
        let mut checked = 0;
        for w in irreducibles(n, field)? {
            let t_sub = inertia_group(&w, &g).map_err(err)?.subgroup;
            for s in irreducibles(&t_sub, field)? {
                if !lies_over(&s, &w).map_err(err)? {
                    continue;
                }
                verdict(&verify_stage2(&s, &w, &g).map_err(err)?)?;
                checked += 1;
            }
        }
        Ok(format!("{checked} pairs (W, S)"))
    })();
    out.push(entry(name, "stage2", start, stage2));
    out
}

fn correspondence_job(t: &GroupTable, subs: &[Subgroup], n: &Subgroup, field: PrimeField) -> Vec<ReportEntry> {
    let name = pair_name(t, subs, n, field);
    let g = Subgroup::full(n.parent().clone());
    let start = Instant::now();
    let outcome = (|| {
        let mut classes = Vec::new();
        for (i, w) in irreducibles(n, field)?.iter().enumerate() {
            let r = verify_correspondence(w, &g).map_err(err)?;
            if !r.round_trip_ok {
                return Err(format!("W{i}: forward {:?}, backward {:?}", r.forward, r.backward));
            }
            classes.push(r.over_w_in_g.len());
        }
        Ok(format!("classes over each W: {classes:?}"))
    })();
    vec![entry(name, "correspondence", start, outcome)]
}

/// `S3` over `A3` at `p = 7`, and the radical example at `(3, 2, 2)`.
fn correspondence_fixed() -> Vec<ReportEntry> {
    let mut out = Vec::new();
    let start = Instant::now();
    let outcome = (|| {
        let t = catalog_entry("S3").expect("S3 is in the catalog").into_arc();
        let g = Subgroup::full(t.clone());
        let field = PrimeField::new(7).expect("7 is prime");
        let a3 = all_subgroups(&g).into_iter().find(|h| h.order() == 3).expect("A3");
        let mut nontrivial = 0;
        for w in irreducibles(&a3, field)? {
            if w.images().all(Matrix::is_identity) {
                continue;
            }
            nontrivial += 1;
            let r = verify_correspondence(&w, &g).map_err(err)?;
            if !r.round_trip_ok || r.over_w_in_t.len() != 1 || r.over_w_in_g.len() != 1 {
                return Err(format!(
                    "{} classes in T, {} in G",
                    r.over_w_in_t.len(),
                    r.over_w_in_g.len()
                ));
            }
        }
        if nontrivial != 2 {
            return Err(format!("{nontrivial} nontrivial characters of A3"));
        }
        Ok("one class on each side for both nontrivial characters".to_string())
    })();
    out.push(entry("S3/A3/p7".into(), "correspondence-s3", start, outcome));
    let start = Instant::now();
    let outcome = build_radical_example(3, 2, 2).map_err(err).and_then(|s| {
        let r = verify_correspondence(&s.module_w, &s.group).map_err(err)?;
        let degenerate = r.inertia == s.group
            && r.round_trip_ok
            && r.over_w_in_t.len() == r.over_w_in_g.len()
            && r.over_w_in_t.iter().zip(&r.over_w_in_g).all(|(a, b)| a.same_matrices(b));
        if degenerate {
            Ok(format!("T = G, {} class on each side", r.over_w_in_g.len()))
        } else {
            Err("correspondence is not the identity on T = G".into())
        }
    });
    out.push(entry("radical-p3-m2-a2".into(), "correspondence-degenerate", start, outcome));
    out
}

/// Checks the glued modules over an invariant, absolutely irreducible `W`.
fn check_gluing(w: &Representation, g: &Subgroup) -> Result<String, String> {
    let field = w.field();
    let glued = glue_all(w, g).map_err(err)?;
    let mut over_w = Vec::new();
    for v in irreducibles(g, field)? {
        if lies_over(&v, w).map_err(err)? {
            over_w.push(v);
        }
    }
    let mut hit = vec![false; over_w.len()];
    for (i, piece) in glued.iter().enumerate() {
        let v = &piece.module;
        if !is_irreducible(&v.to_algebra_module()).map_err(err)?.is_irreducible() {
            return Err(format!("glued module {i} is reducible"));
        }
        let copies = AlgebraModule::new(
            field,
            v.dim(),
            w.generator_images()
                .iter()
                .map(|a| Matrix::identity(field, piece.twisted.dim()).kronecker(a))
                .collect(),
            "U (x) W",
        );
        let res = restrict(v, w.group()).to_algebra_module();
        if crate::meataxe::is_isomorphic(&res, &copies).map_err(err)?.is_none() {
            return Err(format!(
                "glued module {i} does not restrict to {} copies of W",
                piece.twisted.dim()
            ));
        }
        let Some(j) = over_w
            .iter()
            .position(|u| u.dim() == v.dim() && is_isomorphic_reps(u, v).ok().flatten().is_some())
        else {
            return Err(format!("glued module {i} is not an irreducible over W"));
        };
        if std::mem::replace(&mut hit[j], true) {
            return Err(format!("glued module {i} repeats class {j}"));
        }
    }
    if hit.iter().any(|h| !h) {
        return Err(format!("{} glued modules for {} classes over W", glued.len(), over_w.len()));
    }
    Ok(format!("{} classes, twisted dimensions {:?}", glued.len(), glued.iter().map(|p| p.twisted.dim()).collect::<Vec<_>>()))
}

fn gluing_job(t: &GroupTable, subs: &[Subgroup], n: &Subgroup, field: PrimeField) -> Vec<ReportEntry> {
    let name = pair_name(t, subs, n, field);
    let g = Subgroup::full(n.parent().clone());
    let start = Instant::now();
    let outcome = (|| {
        let mut notes = Vec::new();
        for (i, w) in irreducibles(n, field)?.iter().enumerate() {
            if inertia_group(w, &g).map_err(err)?.subgroup != g || !is_abs_irreducible(w)? {
                continue;
            }
            notes.push(format!("W{i}: {}", check_gluing(w, &g).map_err(|e| format!("W{i}: {e}"))?));
        }
        Ok(if notes.is_empty() {
            "no invariant absolutely irreducible W".to_string()
        } else {
            notes.join("\n")
        })
    })();
    vec![entry(name, "gluing", start, outcome)]
}

/// The radical example at `(3, 2, 2)` rebuilt from the glue path.
fn gluing_radical() -> Vec<ReportEntry> {
    let start = Instant::now();
    let outcome = build_radical_example(3, 2, 2).map_err(err).and_then(|s| {
        let glued = glue_all(&s.module_w, &s.group).map_err(err)?;
        let v = induce(&s.module_w, &s.group);
        match glued.as_slice() {
            [one] if is_isomorphic_reps(&one.module, &v).map_err(err)?.is_some() => {
                Ok(format!("glue gives ind W of dimension {}", v.dim()))
            }
            _ => Err(format!("{} glued modules, none isomorphic to ind W", glued.len())),
        }
    });
    vec![entry("radical-p3-m2-a2".into(), "gluing-radical", start, outcome)]
}

/// Random `T` in `Hom(F^a (x) W, F^b (x) W)` for absolutely irreducible `W`.
fn forma_instance(groups: &[Arc<GroupTable>], fields: &[PrimeField], seed: u64, k: usize) -> ReportEntry {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x666f_726d ^ ((k as u64) << 32));
    let t = &groups[rng.gen_range(0..groups.len())];
    let field = fields[rng.gen_range(0..fields.len())];
    let g = Subgroup::full(t.clone());
    let (a, b) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
    let start = Instant::now();
    let mut name = format!("forma-{k}:{}/p{}", t.name(), field.modulus());
    let outcome = (|| {
        let candidates: Vec<Representation> = irreducibles(&g, field)?
            .into_iter()
            .filter(|w| is_abs_irreducible(w).unwrap_or(false))
            .collect();
        let w = &candidates[rng.gen_range(0..candidates.len())];
        name.push_str(&format!("/dim{}/{a}x{b}", w.dim()));
        let module = w.to_algebra_module();
        let copies = |m: usize| {
            AlgebraModule::new(
                field,
                m * w.dim(),
                module
                    .generators()
                    .iter()
                    .map(|x| Matrix::identity(field, m).kronecker(x))
                    .collect(),
                "U (x) W",
            )
        };
        let basis = hom_basis(&copies(a), &copies(b)).map_err(err)?.basis;
        let coeffs: Vec<u32> = (0..basis.len())
            .map(|_| rng.gen_range(0..field.modulus()))
            .collect();
        let hom = linear_combination(field, &coeffs, &basis);
        let s = factor_intertwiner(&hom, a, b, &module).map_err(err)?;
        if s.kronecker(&Matrix::identity(field, w.dim())) == hom {
            Ok(format!("S of shape {}x{} with S (x) 1 = T", s.rows(), s.cols()))
        } else {
            Err("S (x) 1 differs from T".into())
        }
    })();
    entry(name, "forma", start, outcome)
}

fn frobenius_job(t: &GroupTable, subs: &[Subgroup], i: usize, field: PrimeField) -> Vec<ReportEntry> {
    let h = &subs[i];
    let g = Subgroup::full(h.parent().clone());
    let name = format!("{}/p{}", sub_label(t, subs, h), field.modulus());
    let start = Instant::now();
    let outcome = (|| {
        let irr_g = irreducibles(&g, field)?;
        let mut checked = 0;
        for (a, w) in irreducibles(h, field)?.iter().enumerate() {
            let ind = induce(w, &g);
            for v in std::iter::once(&ind).chain(&irr_g) {
                verdict(&verify_frobenius(w, v).map_err(err)?).map_err(|e| format!("W{a}: {e}"))?;
                checked += 1;
            }
        }
        Ok(format!("{checked} pairs (W, V)"))
    })();
    vec![entry(name, "frobenius", start, outcome)]
}

fn narr_job(t: &GroupTable, subs: &[Subgroup], n: &Subgroup, field: PrimeField) -> Vec<ReportEntry> {
    let name = pair_name(t, subs, n, field);
    let g = Subgroup::full(n.parent().clone());
    let start = Instant::now();
    let outcome = (|| {
        let mut notes = Vec::new();
        for (i, w) in irreducibles(n, field)?.iter().enumerate() {
            if !is_irreducible(&induce(w, &g).to_algebra_module()).map_err(err)?.is_irreducible() {
                continue;
            }
            let r = narr_conditions(w, &g).map_err(err)?;
            verdict(&r.verification).map_err(|e| format!("W{i}: {e}"))?;
            let holding: String = [('a', &r.surjective), ('e', &r.extends), ('f', &r.split_linear)]
                .iter()
                .filter(|(_, c)| c.holds())
                .map(|(c, _)| *c)
                .collect();
            notes.push(format!("W{i}: T of order {}, holding [{holding}]", r.inertia.order()));
        }
        Ok(if notes.is_empty() {
            "no W with irreducible induction".to_string()
        } else {
            notes.join("\n")
        })
    })();
    vec![entry(name, "narr", start, outcome)]
}

/// The radical parameter sets; `t^3 - 3` over `F_7` is checked by the builder.
const RADICAL: [(u64, usize, u64); 4] = [(3, 2, 2), (5, 2, 2), (5, 2, 3), (7, 3, 3)];

fn radical_jobs() -> Vec<Job> {
    RADICAL
        .iter()
        .map(|&(p, m, a)| {
            Box::new(move || {
                let start = Instant::now();
                match build_radical_example(p, m, a) {
                    Ok(s) => evaluate(&s),
                    Err(e @ super::ScenarioError::ReducibleRadical { .. }) => vec![info(
                        format!("radical-p{p}-m{m}-a{a}"),
                        "build",
                        start,
                        e.to_string(),
                    )],
                    Err(e) => vec![entry(format!("radical-p{p}-m{m}-a{a}"), "build", start, Err(err(e)))],
                }
            }) as Job
        })
        .collect()
}

fn crossed_jobs() -> Vec<Job> {
    let cases: Vec<(u64, usize, usize, FactorTable)> = vec![
        (3, 2, 1, FactorTable::Trivial),
        (2, 2, 1, FactorTable::Trivial),
        (3, 2, 2, FactorTable::Trivial),
        (2, 3, 1, FactorTable::Trivial),
        (3, 2, 1, FactorTable::Logs(vec![vec![0, 0], vec![0, 4]])),
    ];
    cases
        .into_iter()
        .map(|(p, r, power, table)| {
            Box::new(move || {
                let start = Instant::now();
                match build_crossed_product(p, r, power, &table) {
                    Ok(s) => {
                        let mut entries = evaluate(&s);
                        if let FactorTable::Logs(_) = table {
                            for e in &mut entries {
                                e.scenario.push_str("-twisted");
                            }
                        }
                        entries
                    }
                    Err(e) => vec![entry(format!("crossed-p{p}-r{r}-g{power}"), "build", start, Err(err(e)))],
                }
            }) as Job
        })
        .collect()
}
