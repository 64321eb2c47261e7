use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use perfcode::analysis::{record, Analysis, AnalysisRecord};
use perfcode::catalog::{build_with, default_catalogue, parse_spec};
use perfcode::codes::DeltaOptions;
use perfcode::theorems::CheckStatus;
use perfcode::verify::run_verification;
use perfcode::{GroupError, Limits};

#[derive(Parser)]
#[command(name = "perfcode", version, about = "Subgroup perfect codes of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one group given by a spec string, e.g. `sl2:5` or `perm:(1,2,3);(1,2)`.
    Analyze {
        spec: String,
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        #[arg(long)]
        csv: bool,
        /// Cross-check every class with the transversal search and the Cayley graph.
        #[arg(long)]
        audit: bool,
        /// Raise the lattice cap (and the group cap, if lower) to N.
        #[arg(long, value_name = "N")]
        cap: Option<usize>,
    },
    /// Analyze the default catalogue up to an order.
    Survey {
        #[arg(long, value_name = "N")]
        max_order: u64,
        #[arg(long, value_enum)]
        filter: Option<Filter>,
        #[arg(long)]
        json: bool,
    },
    /// Run the acceptance suite.
    Verify {
        /// Add the order-24288 double cover of PGL(2,23).
        #[arg(long)]
        include_stretch: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Filter {
    Solvable,
    Nonsolvable,
}

fn exit_code(e: &GroupError) -> ExitCode {
    match e {
        GroupError::Parse { .. } => ExitCode::from(2),
        GroupError::CapExceeded { .. } => ExitCode::from(3),
        _ => ExitCode::from(1),
    }
}

fn fail(e: GroupError) -> ExitCode {
    eprintln!("error: {e}");
    exit_code(&e)
}

fn print_table(r: &AnalysisRecord) {
    println!("group          {}", r.spec);
    println!("order          {}", r.order);
    let pi: Vec<String> = r.pi.iter().map(ToString::to_string).collect();
    println!("primes         {{{}}}", pi.join(", "));
    println!("solvable       {}", r.solvable);
    println!("shape          {}", r.shape);
    println!("sylow-2        {}", r.sylow2_shape);
    println!("O_2            order {}", r.o2_order);
    println!("subgroups      {} in {} classes", r.subgroup_count, r.class_count);
    println!("|Δ|            {}", r.delta_count);
    if r.empty_delta_family {
        println!("               (cyclic 2-group or generalized quaternion: Δ is empty)");
    }
    for c in &r.delta_classes {
        let routes: Vec<String> = c
            .routes
            .iter()
            .filter_map(|x| serde_json::to_value(x).ok()?.as_str().map(String::from))
            .collect();
        println!("  order {:>5}  class size {:>4}  {:<28} {}", c.order, c.class_size, c.shape, routes.join(","));
    }
    println!("checks");
    for c in &r.checks {
        let status = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::NotApplicable => "n/a",
        };
        println!("  {:<28} {:<5} {}", c.check_name, status, c.details);
        if let Some(w) = &c.witness {
            println!("  {:<28}       witness: {}", "", w.value);
        }
    }
    if let Some(d) = &r.audit_disagreements {
        println!("audit          {} disagreements", d.len());
        for line in d {
            println!("  {line}");
        }
    }
}

fn analyze(spec: &str, json: bool, csv: bool, audit: bool, cap: Option<usize>) -> ExitCode {
    let limits = match cap {
        Some(c) => Limits::from_env().with_cap(c),
        None => Limits::from_env(),
    };
    let result = parse_spec(spec)
        .and_then(|s| build_with(&s, &limits))
        .and_then(|g| Analysis::new(g, &limits, DeltaOptions { audit }));
    let a = match result {
        Ok(a) => a,
        Err(e) => return fail(e),
    };
    let r = record(&a, audit);
    if json {
        println!("{}", serde_json::to_string_pretty(&r).expect("records serialize"));
    } else if csv {
        println!("{}", AnalysisRecord::CSV_HEADER);
        println!("{}", r.csv_row());
    } else {
        print_table(&r);
    }
    ExitCode::SUCCESS
}

fn survey(max_order: u64, filter: Option<Filter>, json: bool) -> ExitCode {
    let limits = Limits::from_env();
    if max_order as usize > limits.lattice_order {
        return fail(GroupError::CapExceeded {
            what: "survey max order",
            limit: limits.lattice_order,
        });
    }
    let mut out = io::stdout().lock();
    if !json {
        let _ = writeln!(out, "{}", AnalysisRecord::CSV_HEADER);
    }
    let (mut groups, mut equality, mut solvable_equality, mut applicable) = (0usize, 0usize, 0usize, 0usize);
    let mut failures = Vec::new();
    for spec in default_catalogue(max_order) {
        let a = match build_with(&spec, &limits).and_then(|g| Analysis::new(g, &limits, DeltaOptions::default())) {
            Ok(a) => a,
            Err(e) => {
                let _ = out.flush();
                eprintln!("error: {spec}: {e}");
                return exit_code(&e);
            }
        };
        match filter {
            Some(Filter::Solvable) if !a.solvable => continue,
            Some(Filter::Nonsolvable) if a.solvable => continue,
            _ => {}
        }
        let r = record(&a, false);
        groups += 1;
        if r.delta_count == r.pi.len() && !r.pi.is_empty() {
            equality += 1;
        }
        if r.solvable && r.order > 1 && r.delta_count + 2 == 1 << r.pi.len() {
            solvable_equality += 1;
        }
        if r.checks.iter().any(|c| c.status != CheckStatus::NotApplicable) {
            applicable += 1;
        }
        for c in r.checks.iter().filter(|c| c.status == CheckStatus::Fail) {
            failures.push(format!("{}: {}", r.spec, c.check_name));
        }
        let line = if json {
            serde_json::to_string(&r).expect("records serialize")
        } else {
            r.csv_row()
        };
        // Flushed per record so an interrupted run keeps what it computed.
        if writeln!(out, "{line}").and_then(|_| out.flush()).is_err() {
            return ExitCode::from(1);
        }
    }
    let summary = serde_json::json!({
        "summary": {
            "groups": groups,
            "groups_with_applicable_checks": applicable,
            "equality_delta_eq_pi": equality,
            "equality_solvable_bound": solvable_equality,
            "failures": failures,
        }
    });
    if json {
        let _ = writeln!(out, "{summary}");
    } else {
        let _ = writeln!(
            out,
            "# {groups} groups, {equality} with |Δ| = |π|, {solvable_equality} solvable with |Δ| = 2^|π| - 2, {} failures",
            failures.len()
        );
        for f in &failures {
            let _ = writeln!(out, "# FAIL {f}");
        }
    }
    ExitCode::SUCCESS
}

fn verify(include_stretch: bool, json: bool) -> ExitCode {
    let outcomes = run_verification(include_stretch);
    if json {
        println!("{}", serde_json::to_string_pretty(&outcomes).expect("outcomes serialize"));
    } else {
        for o in &outcomes {
            println!("{}", o.line());
        }
    }
    if outcomes.iter().all(|o| o.passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze {
            spec,
            json,
            csv,
            audit,
            cap,
        } => analyze(&spec, json, csv, audit, cap),
        Command::Survey {
            max_order,
            filter,
            json,
        } => survey(max_order, filter, json),
        Command::Verify { include_stretch, json } => verify(include_stretch, json),
    }
}
