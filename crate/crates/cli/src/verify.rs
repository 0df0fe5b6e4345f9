use clap::Subcommand;
use lucaskit::coxcat::{self, CoxeterType, Finding, Status};
use lucaskit::exec::Exec;
use lucaskit::involution::verify_involution;
use lucaskit::lucas;
use serde_json::{json, Value};

use crate::output::Output;

#[derive(Debug, Clone, Subcommand)]
pub enum Target {
    /// {n brace k} = {k+1}{n-1 brace k} + t{n-k-1}{n-1 brace k-1}
    Recursion {
        #[arg(long, default_value_t = 12)]
        max_n: u32,
    },
    /// {k}...{k-r+1}{n brace k} = {n-k+r}...{n-k+1}{n brace n-k+r}
    Symmetry {
        #[arg(long, default_value_t = 10)]
        max_n: u32,
    },
    /// C_n = {2n-1 brace n-1} + t{2n-1 brace n-2}
    CatalanId {
        #[arg(long, default_value_t = 8)]
        max_n: u32,
    },
    /// First-row decomposition of the Fuss-Catalan polynomial
    FussId {
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        #[arg(long, default_value_t = 3)]
        max_k: u32,
    },
    /// Closed form of the type D Coxeter-Catalan polynomial
    #[command(name = "catD")]
    CatD {
        #[arg(long, default_value_t = 3)]
        min_n: u32,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
    /// Nonnegativity of the generalized type D expression
    #[command(name = "genCatD")]
    GenCatD {
        #[arg(long, default_value_t = 6)]
        max_md: u32,
        #[arg(long, default_value_t = 4)]
        max_n: u32,
    },
    /// {m} divides {n} iff m divides n, with nonnegative quotient
    HoggattLong {
        #[arg(long, default_value_t = 20)]
        max: u32,
    },
    /// Common divisors {e} of {m} and {n} are those with e | gcd(m, n)
    GcdLemma {
        #[arg(long, default_value_t = 12)]
        max: u32,
    },
    /// {n} at s = 2x, t = -1 is U_{n-1}(x)
    Cheby {
        #[arg(long, default_value_t = 30)]
        max_n: u32,
    },
    /// Exhaustive check of the involution on one type, or on all types
    /// up to --max-n when no type is given
    Involution {
        #[arg(long, requires_all = ["k", "r"])]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
    },
    /// Coxeter-Catalan and Coxeter-Fuss-Catalan polynomials
    Coxeter {
        #[arg(long, default_value_t = 6)]
        max_rank: u32,
        #[arg(long, default_value_t = 12)]
        max_m: u32,
        #[arg(long, default_value_t = 3)]
        max_k: u32,
    },
    /// Nonnegativity sweep of the Narayana analogues
    Narayana {
        #[arg(long, default_value_t = 40)]
        max_n: u32,
    },
    /// Polynomiality and nonnegativity of the rational Catalan analogues
    Rational {
        #[arg(long, default_value_t = 12)]
        max: u32,
    },
}

struct Check {
    params: Value,
    ok: bool,
}

fn checks(name: &str, items: Vec<Check>) -> Output {
    let failures: Vec<&Check> = items.iter().filter(|c| !c.ok).collect();
    let mut pretty = format!(
        "{name}: {} checks, {} failures: {}",
        items.len(),
        failures.len(),
        if failures.is_empty() { "PASS" } else { "FAIL" }
    );
    for f in &failures {
        pretty.push_str(&format!("\n  failed at {}", f.params));
    }
    let json = json!({
        "check": name,
        "total": items.len(),
        "failures": failures.iter().map(|c| c.params.clone()).collect::<Vec<_>>(),
        "passed": failures.is_empty(),
    });
    let ok = failures.is_empty();
    Output::new(pretty).json(json).passed(ok)
}

fn findings(name: &str, items: Vec<Finding>) -> Output {
    let count = |s: Status| items.iter().filter(|f| f.status == s).count();
    let (pass, fail, found) = (count(Status::Pass), count(Status::Fail), count(Status::Finding));
    let mut pretty = format!("{name}: {} cases, {pass} pass, {fail} fail, {found} findings", items.len());
    for f in items.iter().filter(|f| f.status != Status::Pass) {
        pretty.push_str(&format!("\n  {:?} {}: {}", f.status, f.params, f.detail));
    }
    let lines = coxcat::findings_to_json_lines(&items);
    Output::new(pretty)
        .json(Value::Array(items.iter().map(|f| serde_json::to_value(f).expect("finding")).collect()))
        .csv(lines)
        .passed(fail == 0 && found == 0)
}

fn grid<F: Fn(u32, u32) -> bool + Sync>(pairs: Vec<(u32, u32)>, names: [&str; 2], f: F) -> Vec<Check> {
    Exec::default().map(&pairs, |&(a, b)| Check { params: json!({names[0]: a, names[1]: b}), ok: f(a, b) })
}

pub fn run(target: Target) -> Output {
    match target {
        Target::Recursion { max_n } => {
            let pairs = (2..=max_n).flat_map(|n| (1..n).map(move |k| (n, k))).collect();
            checks("recursion", grid(pairs, ["n", "k"], lucas::verify_lucasnomial_recursion))
        }
        Target::Symmetry { max_n } => {
            let triples: Vec<(u32, u32, u32)> = (0..=max_n)
                .flat_map(|n| (0..=n).flat_map(move |k| (0..=k).map(move |r| (n, k, r))))
                .collect();
            let items = Exec::default().map(&triples, |&(n, k, r)| Check {
                params: json!({"n": n, "k": k, "r": r}),
                ok: lucas::verify_symmetry_identity(n, k, r),
            });
            checks("symmetry", items)
        }
        Target::CatalanId { max_n } => {
            let pairs = (2..=max_n).map(|n| (n, 0)).collect();
            checks("catalan-id", grid(pairs, ["n", "_"], |n, _| coxcat::verify_catalan_identity(n)))
        }
        Target::FussId { max_n, max_k } => {
            let pairs = (2..=max_n).flat_map(|n| (1..=max_k).map(move |k| (n, k))).collect();
            checks("fuss-id", grid(pairs, ["n", "k"], coxcat::verify_fuss_identity))
        }
        Target::CatD { min_n, max_n } => {
            let pairs = (min_n.max(3)..=max_n).map(|n| (n, 0)).collect();
            checks("catD", grid(pairs, ["n", "_"], |n, _| coxcat::verify_cat_d(n)))
        }
        Target::GenCatD { max_md, max_n } => findings("genCatD", coxcat::gen_cat_d_sweep(max_md, max_n, Exec::default())),
        Target::HoggattLong { max } => {
            let pairs = (1..=max).flat_map(|m| (1..=max).map(move |n| (m, n))).collect();
            checks("hoggatt-long", grid(pairs, ["m", "n"], lucas::verify_hoggatt_long))
        }
        Target::GcdLemma { max } => {
            let pairs = (1..=max).flat_map(|m| (1..=max).map(move |n| (m, n))).collect();
            checks("gcd-lemma", grid(pairs, ["m", "n"], lucas::verify_gcd_lemma))
        }
        Target::Cheby { max_n } => {
            let pairs = (1..=max_n).map(|n| (n, 0)).collect();
            checks("cheby", grid(pairs, ["n", "_"], |n, _| lucas::verify_chebyshev_bridge(n)))
        }
        Target::Involution { n, k, r, max_n } => {
            let kinds: Vec<(u32, u32, u32)> = match (n, k, r) {
                (Some(n), Some(k), Some(r)) => vec![(n, k, r)],
                _ => (0..=max_n)
                    .flat_map(|n| (0..=n).flat_map(move |k| (0..=k).map(move |r| (n, k, r))))
                    .collect(),
            };
            involution(kinds)
        }
        Target::Coxeter { max_rank, max_m, max_k } => {
            let mut types: Vec<CoxeterType> = Vec::new();
            types.extend((1..=max_rank).map(CoxeterType::A));
            types.extend((1..=max_rank).map(CoxeterType::B));
            types.extend((3..=max_rank).map(CoxeterType::D));
            types.extend((2..=max_m).map(CoxeterType::I2));
            types.extend(CoxeterType::EXCEPTIONAL);
            findings("coxeter", coxcat::coxeter_sweep(&types, max_k, Exec::default()))
        }
        Target::Narayana { max_n } => findings("narayana", coxcat::narayana_sweep(max_n, Exec::default())),
        Target::Rational { max } => findings("rational", coxcat::rational_catalan_sweep(max, Exec::default())),
    }
}

fn involution(kinds: Vec<(u32, u32, u32)>) -> Output {
    let mut pretty = String::new();
    let mut reports = Vec::new();
    let mut ok = true;
    for (n, k, r) in kinds {
        match verify_involution(n, k, r, Exec::default()) {
            Ok(rep) => {
                let [a, b, c, d] = rep.case_counts;
                pretty.push_str(&format!(
                    "involution ({n},{k},{r}): {} inputs, cases a={a} b={b} c={c} d={d}: {}\n",
                    rep.count,
                    if rep.passed() { "PASS" } else { "FAIL" }
                ));
                for v in &rep.violations {
                    pretty.push_str(&format!("  {v}\n"));
                }
                ok &= rep.passed();
                reports.push(json!({
                    "type": [n, k, r],
                    "inputs": rep.count,
                    "cases": {"a": a, "b": b, "c": c, "d": d},
                    "class_sum": rep.class_sum.to_json_value(),
                    "image_sum": rep.image_sum.to_json_value(),
                    "violations": rep.violations,
                    "passed": rep.passed(),
                }));
            }
            Err(e) => {
                pretty.push_str(&format!("involution ({n},{k},{r}): {e}\n"));
                ok = false;
                reports.push(json!({"type": [n, k, r], "error": e.to_string(), "passed": false}));
            }
        }
    }
    Output::new(pretty).json(Value::Array(reports)).passed(ok)
}
