//! The nine acceptance criteria, one line each. Runs without the libtest harness
//! so the lines always show under `cargo test`.

use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use finmod::classify::{classify, Predicate, Witness};
use finmod::harness::checks::{all_subsets_summand, semisimple_sweep, small_subsets_summand};
use finmod::harness::oracle::SUMMAND_ORACLE_ORDER;
use finmod::harness::search::Outcome;
use finmod::harness::{
    run_oracles, run_search, run_selected, run_theorems, Caps, Catalog, InstanceFamily, Status, SuiteConfig,
    TheoremCheck,
};
use finmod::instance::{parse_spec, Built};
use finmod::torsion::t_operator;

const SUITE_BUDGET: Duration = Duration::from_secs(600);

type Check = Result<String, String>;

fn catalog() -> &'static Catalog {
    static CAT: OnceLock<Catalog> = OnceLock::new();
    CAT.get_or_init(|| Catalog::build(&InstanceFamily::defaults(Caps::default())).expect("default catalog"))
}

/// Full replay over the shared catalog, timed once.
fn full_run() -> &'static (Vec<TheoremCheck>, Duration) {
    static RUN: OnceLock<(Vec<TheoremCheck>, Duration)> = OnceLock::new();
    RUN.get_or_init(|| {
        let start = Instant::now();
        let checks = run_theorems(catalog());
        (checks, start.elapsed())
    })
}

fn check<'a>(checks: &'a [TheoremCheck], id: &str) -> &'a TheoremCheck {
    checks.iter().find(|c| c.id == id).unwrap_or_else(|| panic!("registry entry {id}"))
}

fn no_fail(checks: &[TheoremCheck], ids: &[&str]) -> Result<usize, String> {
    let mut checked = 0;
    for id in ids {
        let c = check(checks, id);
        if c.status == Status::Fail {
            return Err(format!("{id} failed: {:?}", c.witness));
        }
        if c.checked == 0 {
            return Err(format!("{id} checked nothing"));
        }
        checked += c.checked;
    }
    Ok(checked)
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn z4_example() -> Check {
    let start = Instant::now();
    let Built::Module(m) = parse_spec("module zabelian 4").map_err(|e| e.to_string())? else {
        return Err("not a module".into());
    };
    let r = classify(&m).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(r.verdicts["goldie_rickart"], || "goldie_rickart is false".into())?;
    ensure(!r.verdicts["rickart"], || "rickart is true".into())?;
    ensure(r.facts.singular == m.full() && r.facts.goldie_torsion == m.full(), || {
        "Z(M) or Z2(M) is not the whole module".into()
    })?;
    match r.witnesses.get("rickart") {
        Some(Witness::Endomorphism { map, submodule, .. }) => {
            ensure(*map == [0, 2, 0, 2], || format!("witness map {map:?}"))?;
            ensure(submodule.to_vec() == [0, 2], || format!("witness kernel {submodule:?}"))?;
        }
        w => return Err(format!("rickart witness {w:?}")),
    }
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("goldie_rickart=true rickart=false, kernel of x -> 2x is {{0,2}}, {elapsed:.1?}"))
}

fn decomposition() -> Check {
    let (checks, elapsed) = full_run();
    let c = check(checks, "goldie-decomposition");
    ensure(c.status == Status::Pass, || format!("status {:?}: {:?}", c.status, c.witness))?;
    ensure(c.checked == catalog().len(), || format!("checked {} of {}", c.checked, catalog().len()))?;
    let fails = checks.iter().filter(|c| c.status == Status::Fail).count();
    ensure(fails == 0, || format!("{fails} registry failures"))?;
    ensure(*elapsed < SUITE_BUDGET, || format!("full sweep took {elapsed:?}"))?;
    Ok(format!("{} instances over {} families, full sweep {elapsed:.1?}", c.checked, catalog().families.len()))
}

fn finite_subsets() -> Check {
    let mut literal = 0;
    for (_, e) in catalog().entries() {
        let a = e.analysis.as_ref().ok_or_else(|| format!("{} not analysed", e.instance.id))?;
        let m = a.module();
        let g = a.holds(Predicate::GoldieRickart).map_err(|e| e.to_string())?;
        let id = &e.instance.id;
        ensure(small_subsets_summand(a) == g, || format!("{id}: subsets of size <= 3 disagree"))?;
        if a.end().len() <= 64 {
            ensure(all_subsets_summand(a) == g, || format!("{id}: all subsets disagree"))?;
        }
        // literal triples of maps, through the operator itself
        let n = a.end().len();
        if n <= 24 {
            literal += 1;
            let maps = a.end().maps();
            let mut all = true;
            'outer: for i in 0..n {
                for j in i..n {
                    for k in j..n {
                        let t = t_operator(m, [&maps[i], &maps[j], &maps[k]]).map_err(|e| e.to_string())?;
                        if !m.is_direct_summand(&t).map_err(|e| e.to_string())? {
                            all = false;
                            break 'outer;
                        }
                    }
                }
            }
            ensure(all == g, || format!("{id}: literal triples give {all}, goldie_rickart={g}"))?;
        }
    }
    let c = check(&full_run().0, "finite-subsets");
    ensure(c.status == Status::Pass, || format!("registry status {:?}", c.status))?;
    Ok(format!("{} instances, {literal} also by literal map triples", catalog().len()))
}

fn implication_lattice() -> Check {
    let n = no_fail(
        &full_run().0,
        &["t-baer-gr", "t-extending-gr", "sip-over-z2", "summand-closure", "rickart-versus-gr"],
    )?;
    Ok(format!("{n} instance checks, zero violations"))
}

fn semisimple() -> Check {
    let cat = catalog();
    let mut parts = Vec::new();
    for name in ["zmod6", "m2f2"] {
        let fam = cat.family(name).ok_or(format!("family {name}"))?;
        let s = semisimple_sweep(fam).map_err(|e| e.to_string())?;
        ensure(s.semisimple, || format!("{name} not recognised as semisimple"))?;
        ensure(s.witness.is_none(), || format!("{name}: {:?}", s.witness))?;
        ensure(s.checked == fam.entries.len(), || format!("{name}: checked {}", s.checked))?;
        parts.push(format!("{name} {} modules pass", s.checked));
    }
    let s = semisimple_sweep(cat.family("zmod4").ok_or("family zmod4")?).map_err(|e| e.to_string())?;
    ensure(!s.semisimple, || "zmod4 recognised as semisimple".into())?;
    let w = s.witness.ok_or("no zmod4 witness")?;
    ensure(w.spec == "module quotient (module regular (ring zmod 4)) gens 2", || format!("witness {}", w.spec))?;
    ensure(w.z2_is_whole_module && !w.z2_projective, || format!("{w:?}"))?;
    parts.push(format!("zmod4 witness {} with Z2 = M, not projective", w.instance));
    Ok(parts.join(", "))
}

fn relative_suite() -> Check {
    let start = Instant::now();
    let checks = run_selected(
        catalog(),
        &SuiteConfig::default(),
        &[
            "relative-restriction",
            "relative-corollary",
            "c2-direct-sums",
            "relative-injective-sums",
            "relative-injective-corollary",
        ],
    )
    .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let n = no_fail(
        &checks,
        &["relative-restriction", "relative-corollary", "c2-direct-sums", "relative-injective-sums"],
    )?;
    ensure(elapsed < SUITE_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("{n} pair and sum checks, {elapsed:.1?}"))
}

fn oracles() -> Check {
    let report = run_oracles(catalog()).map_err(|e| e.to_string())?;
    for c in &report.checks {
        ensure(c.disagreement.is_none(), || format!("{}: {:?}", c.name, c.disagreement))?;
        ensure(c.checked > 0, || format!("{} checked nothing", c.name))?;
    }
    let small = catalog()
        .entries()
        .filter(|(_, e)| e.instance.module.order() <= SUMMAND_ORACLE_ORDER)
        .count();
    let summands = &report.checks[0];
    ensure(summands.checked == small, || format!("summand oracle covered {} of {small}", summands.checked))?;
    Ok(report
        .checks
        .iter()
        .map(|c| format!("{} {}", c.name, c.checked))
        .collect::<Vec<_>>()
        .join(", "))
}

fn report_bytes(cat: &Catalog) -> Result<String, String> {
    let mut out = String::new();
    let lines = |v: &mut String, x: serde_json::Result<String>| -> Result<(), String> {
        v.push_str(&x.map_err(|e| e.to_string())?);
        v.push('\n');
        Ok(())
    };
    for c in run_theorems(cat) {
        lines(&mut out, serde_json::to_string(&c))?;
    }
    for t in ["goldie_rickart&!rickart", "direct-sum"] {
        let r = run_search(&t.parse().unwrap(), cat, &SuiteConfig::default()).map_err(|e| e.to_string())?;
        lines(&mut out, serde_json::to_string(&r))?;
    }
    lines(&mut out, serde_json::to_string(&run_oracles(cat).map_err(|e| e.to_string())?))?;
    Ok(out)
}

fn determinism() -> Check {
    let first = report_bytes(catalog())?;
    let fresh = Catalog::build(&InstanceFamily::defaults(Caps::default())).map_err(|e| e.to_string())?;
    let second = report_bytes(&fresh)?;
    ensure(first == second, || "reports differ".into())?;
    Ok(format!("two runs, {} identical bytes", first.len()))
}

fn search_contract() -> Check {
    let z = Catalog::build(&[InstanceFamily::named("zabelian", Caps::default()).unwrap()]).map_err(|e| e.to_string())?;
    let r = run_search(&"goldie_rickart&!rickart".parse().unwrap(), &z, &SuiteConfig::default())
        .map_err(|e| e.to_string())?;
    let w = r.witness().ok_or("no witness over the integer family")?;
    ensure(w.spec == "module zabelian 4", || format!("witness {}", w.spec))?;
    let r = run_search(&"rickart&!goldie_rickart".parse().unwrap(), catalog(), &SuiteConfig::default())
        .map_err(|e| e.to_string())?;
    ensure(r.result.outcome == Outcome::Exhausted, || format!("unexpected witness {:?}", r.witness()))?;
    Ok(format!(
        "witness {} ({}); rickart&!goldie_rickart exhausted after {} instances",
        w.instance, w.spec, r.result.examined
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check); 9] = [
        ("Z4 over Z is Goldie Rickart and not Rickart", z4_example),
        ("decomposition theorem over the default catalogs", decomposition),
        ("finite-subset characterisation", finite_subsets),
        ("implication lattice", implication_lattice),
        ("semisimple sweep", semisimple),
        ("relative suite on 2- and 3-factor sums", relative_suite),
        ("oracle agreement", oracles),
        ("determinism", determinism),
        ("search contract", search_contract),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        match outcome {
            Ok(detail) => println!("PASS  {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {}. {name}: {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
