//! Command-line front end: cycle indices, cycle support polynomials,
//! orbit censuses, Harary-Palmer counts, and graded dimensions.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use wsym_core::bwsym::{self, BWBasis};
use wsym_core::combinat::set_partitions;
use wsym_core::enumeration::{
    self, bw_cycle_support_poly, evaluate_at_ones, orbit_census, word_cycle_support_poly, zhg,
    zhg_oracle,
};
use wsym_core::groups::{PermGroup, DEFAULT_MAX_ORDER};
use wsym_core::linear::coeff_string;
use wsym_core::sym::{cycle_index, p_to_m};
use wsym_core::variants::{graded_dimension, Algebra};
use wsym_core::wsym::{self, WBasis};
use wsym_core::{Error, Result};

#[derive(Parser)]
#[command(name = "wsym", version, about = "Word symmetric functions and Polya-type enumeration")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the group induced on edge slots by the symmetric group on vertices
    EdgeGroup {
        vertices: usize,
    },
    /// Cycle index of a permutation group in commutative symmetric functions
    CycleIndex {
        /// group file, or "-" for stdin
        #[arg(default_value = "-")]
        group: String,
        /// p (power sums) or m (monomials)
        #[arg(long, default_value = "p")]
        basis: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Cycle support polynomial of a group in WSym
    WordCsp {
        #[arg(default_value = "-")]
        group: String,
        /// Phi or M
        #[arg(long, default_value = "Phi")]
        basis: String,
        /// realize the polynomial over this many letters instead
        #[arg(long)]
        letters: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Cycle support polynomial of a group in BWSym
    BwCsp {
        #[arg(default_value = "-")]
        group: String,
        /// Phi, M, or Mp
        #[arg(long, default_value = "Phi")]
        basis: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Brute-force orbit census of words under a group acting on positions
    Orbits {
        #[arg(default_value = "-")]
        group: String,
        #[arg(long, default_value_t = 2)]
        letters: usize,
        #[arg(long)]
        max_words: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Harary-Palmer word polynomial for groups H on letters and G on positions
    HararyPalmer {
        h: String,
        g: String,
        /// print only the total orbit weight (the value at all letters = 1)
        #[arg(long)]
        eval_ones: bool,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
        max_order: usize,
    },
    /// Graded dimensions of BWSym and its variants
    Dims {
        /// BWSym, BWQSym, BSym, or BQSym
        algebra: String,
        max_n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run the cross-module invariant suite
    Verify {
        /// largest degree exercised by the exhaustive checks
        #[arg(long, default_value_t = 4)]
        degree: usize,
    },
}

fn load_group(path: &str, max_order: usize) -> Result<PermGroup> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::Parse(format!("cannot read stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {path}: {e}")))?
    };
    PermGroup::parse_group_file(&text, max_order)
}

fn emit(format: Format, value: serde_json::Value, text: String) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&value).unwrap()),
        Format::Text => println!("{text}"),
    }
}

fn parse_wbasis(s: &str) -> Result<WBasis> {
    match s {
        "Phi" => Ok(WBasis::Phi),
        "M" => Ok(WBasis::M),
        _ => Err(Error::Parse(format!("unknown WSym basis {s:?} (expected Phi or M)"))),
    }
}

fn parse_bwbasis(s: &str) -> Result<BWBasis> {
    match s {
        "Phi" => Ok(BWBasis::Phi),
        "M" => Ok(BWBasis::M),
        "Mp" => Ok(BWBasis::Mp),
        _ => Err(Error::Parse(format!(
            "unknown BWSym basis {s:?} (expected Phi, M, or Mp)"
        ))),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.cmd {
        Cmd::EdgeGroup { vertices } => {
            let g = wsym_core::groups::induced_edge_group(vertices, None)?;
            print!("{}", g.to_group_file());
        }
        Cmd::CycleIndex { group, basis, format, max_order } => {
            let g = load_group(&group, max_order)?;
            let z = cycle_index(&g);
            let z = match basis.as_str() {
                "p" => z,
                "m" => p_to_m(&z)?,
                other => {
                    return Err(Error::Parse(format!(
                        "unknown Sym basis {other:?} (expected p or m)"
                    )))
                }
            };
            emit(format, z.to_json(), z.to_string());
        }
        Cmd::WordCsp { group, basis, letters, format, max_order } => {
            let g = load_group(&group, max_order)?;
            let z = word_cycle_support_poly(&g);
            if let Some(k) = letters {
                if k == 0 {
                    return Err(Error::Parse("--letters must be at least 1".into()));
                }
                let poly = wsym::realize(&z, k);
                emit(format, poly.to_json("words"), poly.to_string());
            } else {
                let z = wsym::convert(&z, parse_wbasis(&basis)?);
                emit(format, z.to_json(), z.to_string());
            }
        }
        Cmd::BwCsp { group, basis, format, max_order } => {
            let g = load_group(&group, max_order)?;
            let z = bw_cycle_support_poly(&g);
            let z = match parse_bwbasis(&basis)? {
                BWBasis::Mp => bwsym::mprime_expansion(&z)?,
                b => bwsym::convert(&z, b)?,
            };
            emit(format, z.to_json(), z.to_string());
        }
        Cmd::Orbits { group, letters, max_words, format, max_order } => {
            if letters == 0 {
                return Err(Error::Parse("--letters must be at least 1".into()));
            }
            let g = load_group(&group, max_order)?;
            let census = orbit_census(&g, letters, max_words)?;
            let orbits: Vec<_> = census
                .orbit_sizes
                .iter()
                .map(|(rep, size)| json!({"rep": rep.to_string(), "size": size}))
                .collect();
            let types: Vec<_> = census
                .type_counts
                .iter()
                .map(|(lambda, count)| json!({"type": lambda.to_string(), "count": count}))
                .collect();
            let value = json!({
                "degree": census.degree,
                "letters": census.letters,
                "group_order": census.group_order,
                "orbit_count": census.orbit_count(),
                "orbits": orbits,
                "type_counts": types,
            });
            let mut text = format!(
                "{} orbits of words of length {} over {} letters (|G| = {})\n",
                census.orbit_count(),
                census.degree,
                census.letters,
                census.group_order
            );
            for (rep, size) in &census.orbit_sizes {
                text.push_str(&format!("  orbit of {rep}: size {size}\n"));
            }
            for (lambda, count) in &census.type_counts {
                text.push_str(&format!("  n_{lambda} = {count}\n"));
            }
            emit(format, value, text.trim_end().to_string());
        }
        Cmd::HararyPalmer { h, g, eval_ones, format, max_order } => {
            let hg = load_group(&h, max_order)?;
            let gg = load_group(&g, max_order)?;
            let poly = zhg(&hg, &gg)?;
            if eval_ones {
                let total = evaluate_at_ones(&poly);
                emit(format, json!({"eval_ones": coeff_string(&total)}), coeff_string(&total));
            } else {
                emit(format, poly.to_json("words"), poly.to_string());
            }
        }
        Cmd::Dims { algebra, max_n, format } => {
            let alg: Algebra = algebra.parse()?;
            let dims: Vec<u64> = (0..=max_n)
                .map(|n| graded_dimension(alg, n))
                .collect::<Result<_>>()?;
            let text = format!(
                "{alg} dimensions 0..={max_n}: {}",
                dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
            );
            emit(format, json!({"algebra": alg.to_string(), "dims": dims}), text);
        }
        Cmd::Verify { degree } => verify(degree)?,
    }
    Ok(())
}

fn check(ok: bool, what: &str) -> Result<()> {
    if ok {
        println!("ok: {what}");
        Ok(())
    } else {
        Err(Error::Inconsistency(what.to_string()))
    }
}

fn verify(degree: usize) -> Result<()> {
    let degree = degree.min(5);

    for n in 0..=degree {
        for pi in set_partitions(n) {
            let e = wsym_core::wsym::WSymElement::phi(pi);
            if wsym::convert(&wsym::convert(&e, WBasis::M), WBasis::Phi) != e {
                return Err(Error::Inconsistency("WSym basis round trip failed".into()));
            }
        }
    }
    println!("ok: WSym Phi/M round trip to degree {degree}");

    let g6 = wsym_core::groups::induced_edge_group(3, None)?;
    for pi in set_partitions(6).into_iter().filter(|p| p.num_blocks() <= 4) {
        enumeration::wpolya_coefficient(&g6, &pi)?;
    }
    println!("ok: word Redfield-Polya coefficients match stabilizers on the edge group");

    // the census validates the orbit-stabilizer relation internally
    let census = orbit_census(&g6, 2, None)?;
    check(census.group_order == 6, "orbit census of the edge group over 2 letters")?;

    let s3 = PermGroup::symmetric(3);
    let h = PermGroup::closure(
        &[wsym_core::combinat::Permutation::new(vec![2, 3, 1])?],
        DEFAULT_MAX_ORDER,
    )?;
    let poly = zhg(&h, &s3)?;
    check(poly == zhg_oracle(&h, &s3)?, "Harary-Palmer polynomial matches two-sided oracle")?;
    check(
        evaluate_at_ones(&poly) == wsym_core::linear::rat(72),
        "Harary-Palmer total weight",
    )?;

    for n in 0..=5usize {
        let expect = if n == 0 {
            1
        } else {
            (1u64 << (n - 1)) * wsym_core::combinat::factorial(n)
        };
        check(
            graded_dimension(Algebra::BWQSym, n)? == expect,
            "BWQSym graded dimension",
        )?;
    }

    println!("all invariants hold");
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
