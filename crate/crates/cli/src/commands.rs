//! The subcommands, generic over the family.

use num_bigint::BigInt;
use serde_json::{json, Value};

use ncpqg_core::categories::closure_failures;
use ncpqg_core::diagram::PartitionJson;
use ncpqg_core::family::{crosscheck, dimensions, irreps, Family};
use ncpqg_core::fusion::{check_budget, tensor_decompose, DimensionTable, FusionTermJson};

use crate::config::LoadedFamily;
use crate::{CliError, Command, Method, Opts, Output};

/// Pairs sampled per closure check in a crosscheck report.
const CLOSURE_PAIRS: usize = 100;

pub fn run(family: &LoadedFamily, cmd: &Command, opts: &Opts) -> Result<Output, CliError> {
    match family {
        LoadedFamily::OPlusPlus(f) => run_family(f, cmd, opts),
        LoadedFamily::Wreath(f) => run_family(f, cmd, opts),
    }
}

fn run_family<F: Family>(fam: &F, cmd: &Command, opts: &Opts) -> Result<Output, CliError> {
    match cmd {
        Command::Fusion { left, right } => fusion(fam, left, right, opts),
        Command::Irreps => irreps_cmd(fam, opts),
        Command::Check { partition } => check(fam, partition, opts),
        Command::Crosscheck => crosscheck_cmd(fam, opts),
        Command::Dims => dims(fam, opts),
    }
}

fn names<L: ToString>(ls: &[L]) -> Vec<String> {
    ls.iter().map(|l| l.to_string()).collect()
}

/// `a ⊗ b → c;d`
fn cell(a: &str, b: &str, terms: &[String]) -> String {
    format!("{a} ⊗ {b} → {}", terms.join(";"))
}

fn sum(terms: &[String]) -> String {
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

/// Small dimensions as JSON numbers, larger ones as decimal strings.
fn dim_value(d: &BigInt) -> Value {
    match i64::try_from(d) {
        Ok(v) => json!(v),
        Err(_) => json!(d.to_string()),
    }
}

fn fusion<F: Family>(fam: &F, left: &str, right: &str, opts: &Opts) -> Result<Output, CliError> {
    let a = fam.parse_label(left)?;
    let b = fam.parse_label(right)?;
    let (a_name, b_name) = (a.to_string(), b.to_string());
    let mut doc = json!({
        "family": fam.describe(),
        "left": a_name,
        "right": b_name,
        "method": format!("{:?}", opts.method).to_lowercase(),
    });
    let mut plain = String::new();
    let mut csv = String::new();

    let closed = match opts.method {
        Method::Closed | Method::Both => Some(names(&fam.closed_fusion(&a, &b)?)),
        Method::Diagram => None,
    };
    let diagram = match opts.method {
        Method::Diagram | Method::Both => {
            let p = fam.representative(&a)?;
            let q = fam.representative(&b)?;
            check_budget(2 * (p.upper().len() + q.upper().len()), opts.budget_points)?;
            let mut terms = Vec::new();
            let mut labels = Vec::new();
            for t in tensor_decompose(&p, &q, fam.category())? {
                let l = fam.label_of_projective(&t.partition)?.to_string();
                terms.push(FusionTermJson::new(&t, Some(l.clone())));
                labels.push(l);
            }
            labels.sort();
            doc["terms"] = json!(terms);
            Some(labels)
        }
        Method::Closed => None,
    };
    if let Some(c) = &closed {
        doc["closed"] = json!(c);
        plain += &format!("closed:  {a_name} ⊗ {b_name} = {}\n", sum(c));
        csv += &format!("closed,{}\n", cell(&a_name, &b_name, c));
    }
    if let Some(d) = &diagram {
        doc["diagram"] = json!(d);
        plain += &format!("diagram: {a_name} ⊗ {b_name} = {}\n", sum(d));
        csv += &format!("diagram,{}\n", cell(&a_name, &b_name, d));
    }
    let mut status = 0;
    if let (Some(c), Some(d)) = (&closed, &diagram) {
        let agree = c == d;
        doc["agree"] = json!(agree);
        plain += &format!("agree:   {agree}\n");
        if !agree {
            status = 4;
        }
    }
    Ok(Output {
        json: doc,
        plain,
        csv,
        status,
    })
}

fn dimension_table<F: Family>(
    fam: &F,
    n: u64,
    maxlen: usize,
    budget: usize,
) -> Result<DimensionTable<F::Label>, CliError> {
    check_budget(2 * maxlen, budget)?;
    Ok(dimensions(fam, n, maxlen, budget)?)
}

fn irreps_cmd<F: Family>(fam: &F, opts: &Opts) -> Result<Output, CliError> {
    let maxlen = opts.maxlen.unwrap_or(2);
    let labels = irreps(fam, maxlen, opts.budget_points)?;
    let table = match opts.n {
        Some(n) => Some(dimension_table(fam, n, maxlen, opts.budget_points)?),
        None => None,
    };
    let mut rows = Vec::new();
    let mut plain = String::new();
    let mut csv = String::from(if table.is_some() {
        "label,dimension\n"
    } else {
        "label\n"
    });
    for l in &labels {
        let name = l.to_string();
        match &table {
            Some(t) => {
                let d = t.determined.get(l);
                let shown = d.map_or("?".to_string(), |d| d.to_string());
                rows.push(json!({"label": name, "dimension": d.map(dim_value)}));
                plain += &format!("{name}\t{shown}\n");
                csv += &format!("{name},{}\n", d.map_or(String::new(), |d| d.to_string()));
            }
            None => {
                rows.push(json!({"label": name}));
                plain += &format!("{name}\n");
                csv += &format!("{name}\n");
            }
        }
    }
    let mut doc = json!({
        "family": fam.describe(),
        "maxlen": maxlen,
        "labels": rows,
    });
    if let Some(n) = opts.n {
        doc["N"] = json!(n);
    }
    Ok(Output {
        json: doc,
        plain,
        csv,
        status: 0,
    })
}

fn check<F: Family>(fam: &F, path: &std::path::Path, _opts: &Opts) -> Result<Output, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
    let cat = fam.category();
    let p = PartitionJson::parse(&text, &cat.alphabet())
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    let violation = cat
        .check(&p)
        .map_err(|e| CliError::Config(e.to_string()))?
        .map(|v| v.to_string());
    let member = violation.is_none();
    let plain = match &violation {
        None => format!("{p}: member of {}\n", cat.describe()),
        Some(v) => format!("{p}: not a member of {}: {v}\n", cat.describe()),
    };
    let csv = format!(
        "member,violation\n{member},\"{}\"\n",
        violation.as_deref().unwrap_or("").replace('"', "\"\"")
    );
    Ok(Output {
        json: json!({
            "category": cat.describe(),
            "partition": PartitionJson::from(&p),
            "member": member,
            "violation": violation,
        }),
        plain,
        csv,
        status: 0,
    })
}

fn crosscheck_cmd<F: Family>(fam: &F, opts: &Opts) -> Result<Output, CliError> {
    let budget = opts.budget_points;
    let report = crosscheck(fam, budget)?;
    let (pairs, closure) = if budget == 0 {
        (0, Vec::new())
    } else {
        let fails = closure_failures(fam.category(), 0, CLOSURE_PAIRS, budget.min(10))
            .map_err(|e| CliError::Runtime(e.to_string()))?;
        (CLOSURE_PAIRS, fails)
    };
    let disagreements = report.disagreements() + closure.len();
    let mut doc = serde_json::to_value(&report).map_err(|e| CliError::Runtime(e.to_string()))?;
    doc["budget_points"] = json!(budget);
    doc["closure"] = json!({"pairs": pairs, "failures": closure});
    doc["disagreements"] = json!(disagreements);
    doc["all_agree"] = json!(disagreements == 0);

    let mut plain = format!(
        "{}: {} labels, {} fusion cells, {} disagreements\n",
        report.family,
        report.labels.len(),
        report.cells.len(),
        report.cells.iter().filter(|c| !c.agree).count()
    );
    let sections = [
        ("Frobenius failures", &report.frobenius_failures),
        ("associativity failures", &report.associativity_failures),
        ("label failures", &report.label_failures),
        ("closure failures", &closure),
    ];
    for (name, list) in sections {
        plain += &format!("{name}: {}\n", list.len());
        for f in list {
            plain += &format!("  {f}\n");
        }
    }
    for c in report.cells.iter().filter(|c| !c.agree) {
        plain += &format!(
            "  {}  vs diagram {}\n",
            cell(&c.left, &c.right, &c.closed),
            c.diagram.join(";")
        );
    }
    let mut csv = String::from("closed,diagram,agree\n");
    for c in &report.cells {
        csv += &format!(
            "{},{},{}\n",
            cell(&c.left, &c.right, &c.closed),
            c.diagram.join(";"),
            c.agree
        );
    }
    Ok(Output {
        json: doc,
        plain,
        csv,
        status: if disagreements == 0 { 0 } else { 4 },
    })
}

fn dims<F: Family>(fam: &F, opts: &Opts) -> Result<Output, CliError> {
    let n = opts
        .n
        .ok_or_else(|| CliError::Config("dims needs --N".to_string()))?;
    let maxlen = opts.maxlen.unwrap_or(3);
    let table = dimension_table(fam, n, maxlen, opts.budget_points)?;
    let mut rows = Vec::new();
    let mut plain = String::new();
    let mut csv = String::from("label,dimension\n");
    for (l, d) in &table.determined {
        rows.push(json!({"label": l.to_string(), "dimension": dim_value(d)}));
        plain += &format!("{l}\t{d}\n");
        csv += &format!("{l},{d}\n");
    }
    let undetermined = names(&table.undetermined);
    if !undetermined.is_empty() {
        plain += &format!("undetermined: {}\n", undetermined.join(", "));
        eprintln!(
            "error: dimensions are underdetermined for: {}",
            undetermined.join(", ")
        );
    }
    Ok(Output {
        json: json!({
            "family": fam.describe(),
            "N": n,
            "maxlen": maxlen,
            "dimensions": rows,
            "undetermined": undetermined,
        }),
        plain,
        csv,
        status: if undetermined.is_empty() { 0 } else { 1 },
    })
}
