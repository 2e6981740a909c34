//! Implementations behind the subcommands.

use std::path::Path;
use std::sync::Arc;

use ising_kitchen_core::fourier::{fourier, inverse_fourier, plancherel_npoint};
use ising_kitchen_core::group::FiniteGroup;
use ising_kitchen_core::ising::{
    partition_bruteforce, partition_closed, partition_convolution, IsingParams,
};
use ising_kitchen_core::repr::{CharacterTable, IrrepSet};
use ising_kitchen_core::{GroupFunction, Tolerances, C64};
use serde_json::json;

use crate::formats::{
    catalog_for, fmt_c64, fmt_f64, FunctionJson, GroupJson, IrrepsJson, SpectralJson,
};
use crate::selftest;
use crate::{registry, CliError, IsingMethod};

// ----------------------------------------------------------------------
// group
// ----------------------------------------------------------------------

/// A registry name, or a path to a group JSON file.
fn group_from_name_or_file(name_or_file: &str) -> Result<(String, Arc<FiniteGroup>), CliError> {
    let path = Path::new(name_or_file);
    if path.is_file() {
        let parsed: GroupJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
        Ok((name_or_file.to_string(), parsed.build()?))
    } else {
        Ok((
            name_or_file.to_ascii_lowercase(),
            registry::resolve(name_or_file)?,
        ))
    }
}

pub fn group(name_or_file: &str, json: bool) -> Result<(), CliError> {
    let (label, group) = group_from_name_or_file(name_or_file)?;
    if json {
        let classes: Vec<Vec<usize>> = group.classes().to_vec();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "name": label,
                "order": group.order(),
                "exponent": group.exponent(),
                "abelian": group.is_abelian(),
                "identity": group.identity(),
                "labels": group.labels(),
                "classes": classes,
            }))?
        );
        return Ok(());
    }
    println!("group: {label}");
    println!("order: {}", group.order());
    println!("exponent: {}", group.exponent());
    println!("abelian: {}", group.is_abelian());
    println!("classes ({}):", group.class_count());
    for (i, class) in group.classes().iter().enumerate() {
        let members: Vec<&str> = class.iter().map(|&g| group.label(g)).collect();
        println!("  [{i}] size {}: {}", class.len(), members.join(", "));
    }
    Ok(())
}

// ----------------------------------------------------------------------
// chartable
// ----------------------------------------------------------------------

pub fn chartable(name: &str, csv: bool, json: bool) -> Result<(), CliError> {
    let group = registry::resolve(name)?;
    let table = CharacterTable::compute(&group)?;
    let class_labels: Vec<String> = (0..group.class_count())
        .map(|c| group.label(group.class_representative(c)).to_string())
        .collect();
    if json {
        let rows: Vec<Vec<[f64; 2]>> = table
            .rows()
            .iter()
            .map(|r| r.values().iter().map(|z| [z.re, z.im]).collect())
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "group": name.to_ascii_lowercase(),
                "class_labels": class_labels,
                "class_sizes": table.class_sizes(),
                "dims": table.dims(),
                "rows": rows,
            }))?
        );
        return Ok(());
    }
    if csv {
        println!("class,{}", class_labels.join(","));
        println!(
            "size,{}",
            table
                .class_sizes()
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(",")
        );
        for (t, row) in table.rows().iter().enumerate() {
            let cells: Vec<String> = row.values().iter().map(|&z| csv_c64(z)).collect();
            println!("chi_{t},{}", cells.join(","));
        }
        return Ok(());
    }
    println!(
        "character table of {} ({} classes)",
        name.to_ascii_lowercase(),
        table.rows().len()
    );
    let mut grid: Vec<Vec<String>> = Vec::new();
    let mut header = vec!["".to_string()];
    header.extend(class_labels.iter().cloned());
    grid.push(header);
    let mut sizes_row = vec!["size".to_string()];
    sizes_row.extend(table.class_sizes().iter().map(usize::to_string));
    grid.push(sizes_row);
    for (t, row) in table.rows().iter().enumerate() {
        let mut cells = vec![format!("chi_{t} (dim {})", row.dimension())];
        cells.extend(row.values().iter().map(|&z| fmt_c64(z)));
        grid.push(cells);
    }
    print_aligned(&grid);
    Ok(())
}

fn csv_c64(z: C64) -> String {
    // No commas inside a CSV cell: a+bi / a-bi.
    if z.im < 0.0 {
        format!("{}-{}i", fmt_f64(z.re), fmt_f64(-z.im))
    } else {
        format!("{}+{}i", fmt_f64(z.re), fmt_f64(z.im))
    }
}

fn print_aligned(grid: &[Vec<String>]) {
    let cols = grid.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            grid.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    for row in grid {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, cell)| format!("{cell:>width$}", width = widths[c]))
            .collect();
        println!("{}", line.join("  "));
    }
}

// ----------------------------------------------------------------------
// fourier / invert
// ----------------------------------------------------------------------

fn irreps_for(
    group_name: Option<&str>,
    fallback_name: &str,
    irreps_file: Option<&Path>,
) -> Result<(String, Arc<FiniteGroup>, Arc<IrrepSet>), CliError> {
    let name = group_name.unwrap_or(fallback_name).to_ascii_lowercase();
    match irreps_file {
        Some(path) => {
            let parsed: IrrepsJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
            let group = match group_name {
                Some(n) => registry::resolve(n)?,
                None => parsed.group.resolve()?,
            };
            let set = parsed.build(Some(&group))?;
            Ok((name, group, Arc::new(set)))
        }
        None => {
            let (group, set) = catalog_for(&name)?;
            Ok((name, group, set))
        }
    }
}

pub fn fourier_cmd(
    file: &Path,
    group_name: Option<&str>,
    irreps_file: Option<&Path>,
    json: bool,
) -> Result<(), CliError> {
    let parsed: FunctionJson = serde_json::from_str(&std::fs::read_to_string(file)?)?;
    let fallback = match &parsed.group {
        crate::formats::GroupRef::Name(n) => n.clone(),
        crate::formats::GroupRef::Inline(_) => {
            return Err(CliError::Input(
                "inline groups have no catalog irreps; pass --group or --irreps".into(),
            ))
        }
    };
    let (name, group, irreps) = irreps_for(group_name, &fallback, irreps_file)?;
    let f = parsed.build(Some(&group))?;
    let phi = fourier(&f, &irreps)?;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&SpectralJson::from_spectral(&name, &phi))?
        );
        return Ok(());
    }
    println!("fourier transform over {name} ({} blocks)", irreps.len());
    for (i, block) in phi.blocks().iter().enumerate() {
        println!("block {i} (dim {}):", block.rows());
        for r in 0..block.rows() {
            let cells: Vec<String> = (0..block.cols())
                .map(|c| fmt_c64(block.get(r, c)))
                .collect();
            println!("  [{}]", cells.join(", "));
        }
    }
    Ok(())
}

pub fn invert_cmd(
    file: &Path,
    group_name: Option<&str>,
    irreps_file: Option<&Path>,
    json: bool,
) -> Result<(), CliError> {
    let parsed: SpectralJson = serde_json::from_str(&std::fs::read_to_string(file)?)?;
    let (name, _group, irreps) = irreps_for(group_name, &parsed.irreps, irreps_file)?;
    let phi = parsed.build(&irreps)?;
    let f = inverse_fourier(&phi);
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&FunctionJson::from_function(&name, &f))?
        );
        return Ok(());
    }
    println!("inverse transform over {name}");
    for g in 0..f.group().order() {
        println!("  {:>10}  {}", f.group().label(g), fmt_c64(f.value(g)));
    }
    Ok(())
}

// ----------------------------------------------------------------------
// plancherel
// ----------------------------------------------------------------------

pub fn plancherel_cmd(
    name: &str,
    n: usize,
    seed: u64,
    files: &[std::path::PathBuf],
    json: bool,
    tol: &Tolerances,
) -> Result<(), CliError> {
    let (group, irreps) = catalog_for(name)?;
    let thetas: Vec<GroupFunction> = if files.is_empty() {
        if n == 0 {
            return Err(CliError::Input(
                "need at least one function (n >= 1)".into(),
            ));
        }
        // Functions take consecutive seeds starting at --seed.
        (0..n)
            .map(|i| GroupFunction::random(Arc::clone(&group), seed + i as u64))
            .collect()
    } else {
        files
            .iter()
            .map(|path| -> Result<GroupFunction, CliError> {
                let parsed: FunctionJson = serde_json::from_str(&std::fs::read_to_string(path)?)?;
                parsed.build(Some(&group))
            })
            .collect::<Result<_, _>>()?
    };
    let n = thetas.len();
    let check = plancherel_npoint(&thetas, &irreps)?;
    let norms: f64 = thetas.iter().map(GroupFunction::max_norm).product();
    let scale = (norms * (group.order() as f64).powi(n as i32 - 1)).max(1.0);
    let bound = tol.identity * scale;
    let pass = check.gap <= bound;
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "group": name.to_ascii_lowercase(),
                "n": n,
                "seed": seed,
                "lhs": [check.lhs.re, check.lhs.im],
                "rhs": [check.rhs.re, check.rhs.im],
                "gap": check.gap,
                "scale": scale,
                "tolerance": bound,
                "pass": pass,
            }))?
        );
    } else {
        println!(
            "group = {}  n = {n}  seed = {seed}",
            name.to_ascii_lowercase()
        );
        println!("lhs  = {}", fmt_c64(check.lhs));
        println!("rhs  = {}", fmt_c64(check.rhs));
        println!("gap  = {}", fmt_f64(check.gap));
        println!(
            "tol  = {} (base {} x scale {})",
            fmt_f64(bound),
            fmt_f64(tol.identity),
            fmt_f64(scale)
        );
        println!("status = {}", if pass { "PASS" } else { "FAIL" });
    }
    if pass {
        Ok(())
    } else {
        Err(CliError::ToleranceViolation(format!(
            "plancherel gap {} exceeds {}",
            fmt_f64(check.gap),
            fmt_f64(bound)
        )))
    }
}

// ----------------------------------------------------------------------
// ising
// ----------------------------------------------------------------------

fn parse_betas(text: &str) -> Result<Vec<C64>, CliError> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<f64>()
                .map(|x| C64::new(x, 0.0))
                .map_err(|_| CliError::Input(format!("cannot parse beta '{tok}'")))
        })
        .collect()
}

fn parse_sizes(text: &str) -> Result<Vec<usize>, CliError> {
    let bad = || CliError::Input(format!("cannot parse n '{text}' (want an integer or a..b)"));
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.trim().parse().map_err(|_| bad())?;
        let hi: usize = hi.trim().parse().map_err(|_| bad())?;
        if lo == 0 || hi < lo {
            return Err(bad());
        }
        Ok((lo..=hi).collect())
    } else {
        let n: usize = text.trim().parse().map_err(|_| bad())?;
        Ok(vec![n])
    }
}

struct IsingRow {
    beta: C64,
    n: usize,
    brute: Option<C64>,
    conv: Option<C64>,
    closed: Option<C64>,
    max_gap: Option<f64>,
}

pub fn ising_cmd(
    beta_text: &str,
    n_text: &str,
    method: IsingMethod,
    csv: bool,
    json: bool,
    tol: &Tolerances,
) -> Result<(), CliError> {
    let betas = parse_betas(beta_text)?;
    let sizes = parse_sizes(n_text)?;
    let mut rows = Vec::new();
    let mut violation: Option<String> = None;
    for &beta in &betas {
        for &n in &sizes {
            let params = IsingParams::new(beta, n)?;
            let mut row = IsingRow {
                beta,
                n,
                brute: None,
                conv: None,
                closed: None,
                max_gap: None,
            };
            match method {
                IsingMethod::Brute => row.brute = Some(partition_bruteforce(&params)?),
                IsingMethod::Conv => row.conv = Some(partition_convolution(&params)),
                IsingMethod::Closed => row.closed = Some(partition_closed(&params)),
                IsingMethod::All => {
                    let brute = partition_bruteforce(&params)?;
                    let conv = partition_convolution(&params);
                    let closed = partition_closed(&params);
                    let gap = (brute - conv)
                        .norm()
                        .max((brute - closed).norm())
                        .max((conv - closed).norm());
                    let bound = tol.identity * closed.norm().max(1.0);
                    if gap > bound && violation.is_none() {
                        violation = Some(format!(
                            "evaluators disagree at beta = {}, n = {n}: max gap {} (tol {})",
                            fmt_f64(beta.re),
                            fmt_f64(gap),
                            fmt_f64(bound)
                        ));
                    }
                    row.brute = Some(brute);
                    row.conv = Some(conv);
                    row.closed = Some(closed);
                    row.max_gap = Some(gap);
                }
            }
            rows.push(row);
        }
    }
    emit_ising(&rows, method, csv, json)?;
    match violation {
        Some(v) => Err(CliError::ToleranceViolation(v)),
        None => Ok(()),
    }
}

fn emit_ising(
    rows: &[IsingRow],
    method: IsingMethod,
    csv: bool,
    json: bool,
) -> Result<(), CliError> {
    if json {
        let items: Vec<serde_json::Value> = rows
            .iter()
            .map(|r| {
                let c = |z: Option<C64>| z.map(|z| vec![z.re, z.im]);
                json!({
                    "beta": [r.beta.re, r.beta.im],
                    "n": r.n,
                    "brute": c(r.brute),
                    "conv": c(r.conv),
                    "closed": c(r.closed),
                    "max_gap": r.max_gap,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({ "results": items }))?
        );
        return Ok(());
    }
    if csv {
        if method == IsingMethod::All {
            println!(
                "beta_re,beta_im,n,brute_re,brute_im,conv_re,conv_im,closed_re,closed_im,max_gap"
            );
            for r in rows {
                let (b, c, cl) = (r.brute.unwrap(), r.conv.unwrap(), r.closed.unwrap());
                println!(
                    "{},{},{},{},{},{},{},{},{},{}",
                    fmt_f64(r.beta.re),
                    fmt_f64(r.beta.im),
                    r.n,
                    fmt_f64(b.re),
                    fmt_f64(b.im),
                    fmt_f64(c.re),
                    fmt_f64(c.im),
                    fmt_f64(cl.re),
                    fmt_f64(cl.im),
                    fmt_f64(r.max_gap.unwrap()),
                );
            }
        } else {
            println!("beta_re,beta_im,n,value_re,value_im");
            for r in rows {
                let v = r.brute.or(r.conv).or(r.closed).unwrap();
                println!(
                    "{},{},{},{},{}",
                    fmt_f64(r.beta.re),
                    fmt_f64(r.beta.im),
                    r.n,
                    fmt_f64(v.re),
                    fmt_f64(v.im),
                );
            }
        }
        return Ok(());
    }
    for r in rows {
        println!("beta = {}  n = {}", fmt_f64(r.beta.re), r.n);
        if let Some(v) = r.brute {
            println!("  brute  = {}", fmt_c64(v));
        }
        if let Some(v) = r.conv {
            println!("  conv   = {}", fmt_c64(v));
        }
        if let Some(v) = r.closed {
            println!("  closed = {}", fmt_c64(v));
        }
        if let Some(g) = r.max_gap {
            println!("  max pairwise gap = {}", fmt_f64(g));
        }
    }
    Ok(())
}

// ----------------------------------------------------------------------
// selftest
// ----------------------------------------------------------------------

pub fn selftest_cmd(json: bool, tol: &Tolerances) -> Result<(), CliError> {
    let results = selftest::run_all(tol);
    let passed = results.iter().filter(|r| r.passed).count();
    let total_seconds: f64 = results.iter().map(|r| r.seconds).sum();
    if json {
        let items: Vec<serde_json::Value> = results
            .iter()
            .map(|r| {
                json!({
                    "name": r.name,
                    "passed": r.passed,
                    "detail": r.detail,
                    "seconds": r.seconds,
                })
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&json!({
                "criteria": items,
                "passed": passed,
                "total": results.len(),
                "seconds": total_seconds,
            }))?
        );
    } else {
        for r in &results {
            println!("{}", r.line());
        }
        println!(
            "{passed}/{} criteria passed in {total_seconds:.2}s",
            results.len()
        );
    }
    if passed == results.len() {
        Ok(())
    } else {
        Err(CliError::ToleranceViolation(format!(
            "{} of {} acceptance criteria failed",
            results.len() - passed,
            results.len()
        )))
    }
}
