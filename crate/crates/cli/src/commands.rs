use std::collections::BTreeMap;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use anyhow::Context;
use rayon::prelude::*;
use serde::Serialize;

use goodpairs::min_gen::{min_gen_subsystem, min_gen_type_a_orbits, reflection_length};
use goodpairs::pairs::{
    bad_pairs, classify as classify_with, enumerate_pairs_with, Criterion, PairFilter, PairVerdict, Verdict,
};
use goodpairs::patterns::{left_bad_exists, right_bad_exists, verify_pattern_theorem};
use goodpairs::poly::VariableId;
use goodpairs::root_core::{named_cartan, RationalVector, RootSystem};
use goodpairs::varieties::{
    additional_equation_scan, check_point, p_polynomials, sample_points, witness_transcript, EquationSet,
};
use goodpairs::weyl::{parse_perm, Perm, WeylGroup};
use goodpairs::Error;

use crate::{
    ClassifyArgs, CriterionArg, EmitArgs, EnumerateArgs, FilterArg, FormatArg, MingsArgs, PatternsQueryArgs,
    PatternsVerifyArgs, SampleArgs, ScanArgs, SideArg, WitnessArgs,
};

/// Largest `n` for which enumeration runs without `--large`.
const DEFAULT_MAX_N: usize = 6;
/// Pairs scanned between progress reports.
const SCAN_CHUNK: usize = 64;

pub enum Outcome {
    Success,
    /// A check that should hold did not; exit status 1.
    Mismatch(String),
}

pub type CmdResult = anyhow::Result<Outcome>;

/// `2` for bad input, `1` for everything else.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<Error>() {
        Some(
            Error::InvalidArgument(_)
            | Error::InvalidRoot(_)
            | Error::Parse(_)
            | Error::Precondition(_)
            | Error::NotFiniteType { .. }
            | Error::GroupTooLarge { .. },
        ) => 2,
        _ => 1,
    }
}

fn print_json<T: Serialize>(value: &T) -> anyhow::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn output(path: Option<&Path>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn check_degree(n: usize, large: bool) -> Result<(), Error> {
    let max = if large { goodpairs::pairs::MAX_ENUMERATION_DEGREE } else { DEFAULT_MAX_N };
    if !(2..=max).contains(&n) {
        let hint = if large || n > goodpairs::pairs::MAX_ENUMERATION_DEGREE { "" } else { " (pass --large for n = 7)" };
        return Err(Error::InvalidArgument(format!("n = {n} outside 2..={max}{hint}")));
    }
    Ok(())
}

#[derive(Serialize)]
struct ClassifyAll {
    #[serde(flatten)]
    verdict: PairVerdict,
    criteria: BTreeMap<&'static str, Verdict>,
    agree: bool,
}

fn criterion_name(c: Criterion) -> &'static str {
    match c {
        Criterion::Chain => "chain",
        Criterion::Parabolic => "parabolic",
        Criterion::Orbit => "orbit",
        Criterion::Flatten => "flatten",
    }
}

pub fn classify(args: ClassifyArgs) -> CmdResult {
    let w1 = parse_perm(&args.w1, args.n)?;
    let w2 = parse_perm(&args.w2, args.n)?;
    let g = WeylGroup::symmetric(args.n)?;
    let single = match args.criteria {
        CriterionArg::Chain => Some(Criterion::Chain),
        CriterionArg::Parabolic => Some(Criterion::Parabolic),
        CriterionArg::Orbit => Some(Criterion::Orbit),
        CriterionArg::Flatten => Some(Criterion::Flatten),
        CriterionArg::All => None,
    };
    if let Some(c) = single {
        print_json(&classify_with(&g, c, &w1, &w2)?)?;
        return Ok(Outcome::Success);
    }
    let verdicts =
        Criterion::ALL.iter().map(|&c| Ok((c, classify_with(&g, c, &w1, &w2)?))).collect::<anyhow::Result<Vec<_>>>()?;
    let agree = verdicts.iter().all(|(_, v)| v.verdict == verdicts[0].1.verdict);
    let mut merged = verdicts[0].1.clone();
    for (c, v) in &verdicts {
        match c {
            Criterion::Parabolic => merged.parabolic_data = v.parabolic_data.clone(),
            Criterion::Orbit => merged.violating_orbit = v.violating_orbit.clone(),
            _ => {}
        }
    }
    let criteria = verdicts.iter().map(|(c, v)| (criterion_name(*c), v.verdict)).collect();
    print_json(&ClassifyAll { verdict: merged, criteria, agree })?;
    Ok(if agree { Outcome::Success } else { Outcome::Mismatch(format!("criteria disagree on ({w1}, {w2})")) })
}

pub fn enumerate(args: EnumerateArgs) -> CmdResult {
    check_degree(args.n, args.large)?;
    let filter = match args.filter {
        FilterArg::Good => PairFilter::Good,
        FilterArg::Bad => PairFilter::Bad,
        FilterArg::All => PairFilter::All,
    };
    let mut out = output(args.out.as_deref())?;
    eprintln!("enumerating comparable pairs of S_{}", args.n);
    let summary = enumerate_pairs_with(args.n, filter, |v| {
        serde_json::to_writer(&mut out, v).map_err(|e| Error::Internal(e.to_string()))?;
        writeln!(out).map_err(|e| Error::Internal(e.to_string()))
    })?;
    serde_json::to_writer(&mut out, &summary)?;
    writeln!(out)?;
    out.flush()?;
    eprintln!("{} comparable pairs, {} bad", summary.total_comparable, summary.bad_count);
    Ok(Outcome::Success)
}

pub fn patterns_verify(args: PatternsVerifyArgs) -> CmdResult {
    check_degree(args.n, args.large)?;
    let report = verify_pattern_theorem(args.n)?;
    print_json(&report)?;
    Ok(if report.mismatches.is_empty() {
        Outcome::Success
    } else {
        Outcome::Mismatch(format!("{} mismatches for n = {}", report.mismatches.len(), args.n))
    })
}

pub fn patterns_query(args: PatternsQueryArgs) -> CmdResult {
    let w: Perm = args.w.parse()?;
    let report = match args.side {
        SideArg::Left => left_bad_exists(&w),
        SideArg::Right => right_bad_exists(&w),
    };
    print_json(&report)?;
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct MingsRecord {
    w: String,
    d_w: usize,
    reflection_length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    orbits: Option<Vec<Vec<u8>>>,
    phi_w: Vec<RationalVector>,
}

pub fn mings_show(args: MingsArgs) -> CmdResult {
    let (g, w, orbits) = match (&args.w, &args.system) {
        (Some(w), None) => {
            let n = args.n.ok_or_else(|| Error::InvalidArgument("--w needs --n".into()))?;
            let p = parse_perm(w, n)?;
            let g = WeylGroup::symmetric(n)?;
            let id = g.id_of_perm(&p).ok_or_else(|| Error::Internal("permutation not in group".into()))?;
            (g, id, Some(min_gen_type_a_orbits(&p).0))
        }
        (None, Some(name)) => {
            let g = WeylGroup::new(RootSystem::from_cartan(&named_cartan(name)?)?)?;
            let rank = g.system().rank();
            let word = args.word.clone().unwrap_or_default();
            if let Some(&bad) = word.iter().find(|&&s| s == 0 || s > rank) {
                return Err(Error::InvalidArgument(format!("simple reflection {bad} outside 1..={rank}")).into());
            }
            let zero_based: Vec<usize> = word.iter().map(|s| s - 1).collect();
            let id = g.from_word(&zero_based);
            (g, id, None)
        }
        _ => return Err(Error::InvalidArgument("give either --n with --w, or --system with --word".into()).into()),
    };
    let m = min_gen_subsystem(&g, w);
    let record = MingsRecord {
        w: g.label(w),
        d_w: m.d_w,
        reflection_length: reflection_length(&g, w),
        orbits,
        phi_w: m.phi_w.iter().map(|&r| g.system().root(r).clone()).collect(),
    };
    print_json(&record)?;
    Ok(Outcome::Success)
}

fn write_equations_text(eqs: &EquationSet, out: &mut dyn Write) -> io::Result<()> {
    let x = |i: &goodpairs::root_core::IndexSubset| {
        VariableId::plucker(i.elements()).map(|v| v.to_string()).unwrap_or_else(|_| format!("{i:?}"))
    };
    writeln!(out, "# plucker")?;
    for p in &eqs.plucker {
        writeln!(out, "{p}")?;
    }
    writeln!(out, "# incidence")?;
    for p in &eqs.incidence {
        writeln!(out, "{p}")?;
    }
    writeln!(out, "# cell {}", eqs.cell.w)?;
    for i in &eqs.cell.nonvanishing {
        writeln!(out, "{} != 0", x(i))?;
    }
    for i in &eqs.cell.vanishing {
        writeln!(out, "{} = 0", x(i))?;
    }
    writeln!(out, "# p_equations")?;
    for e in &eqs.p_equations {
        writeln!(out, "P[{},{}]: {}", x(&e.index), e.s, e.polynomial)?;
    }
    Ok(())
}

pub fn equations_emit(args: EmitArgs) -> CmdResult {
    let w = parse_perm(&args.w, args.n)?;
    let eqs = p_polynomials(&w)?;
    match args.format {
        FormatArg::Json => print_json(&eqs)?,
        FormatArg::Text => {
            let mut out = BufWriter::new(io::stdout().lock());
            write_equations_text(&eqs, &mut out)?;
            out.flush()?;
        }
    }
    Ok(Outcome::Success)
}

pub fn counterexample_scan(args: ScanArgs) -> CmdResult {
    if !(2..=goodpairs::varieties::MAX_EQUATION_DEGREE).contains(&args.n) {
        return Err(Error::InvalidArgument(format!(
            "n = {} outside 2..={}",
            args.n,
            goodpairs::varieties::MAX_EQUATION_DEGREE
        ))
        .into());
    }
    let pairs = bad_pairs(args.n)?;
    eprintln!("scanning {} bad pairs of S_{}", pairs.len(), args.n);
    let mut out = output(args.out.as_deref())?;
    let mut refuted = 0;
    for (k, chunk) in pairs.chunks(SCAN_CHUNK).enumerate() {
        let reports =
            chunk.par_iter().map(|(w1, w2)| additional_equation_scan(w2, w1)).collect::<Result<Vec<_>, Error>>()?;
        for r in &reports {
            if r.witness.is_some() {
                refuted += 1;
            }
            serde_json::to_writer(&mut out, r)?;
            writeln!(out)?;
        }
        eprintln!("{}/{}", (k * SCAN_CHUNK + chunk.len()), pairs.len());
    }
    out.flush()?;
    eprintln!("{refuted} of {} bad pairs have a verified witness", pairs.len());
    Ok(Outcome::Success)
}

pub fn witness_verify(args: WitnessArgs) -> CmdResult {
    let w = parse_perm(&args.w, args.n)?;
    let w_prime = parse_perm(&args.wprime, args.n)?;
    let (a, b) = match (args.a, args.b) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            let report = additional_equation_scan(&w, &w_prime)?;
            let hit = report
                .orbit_separated_hits
                .first()
                .ok_or_else(|| Error::Precondition(format!("({w}, {w_prime}) has no orbit-separated hit")))?;
            (hit.a, hit.b)
        }
    };
    let tr = witness_transcript(&w, &w_prime, a, b)?;
    print_json(&tr)?;
    Ok(if tr.in_fiber() {
        Outcome::Success
    } else {
        Outcome::Mismatch(format!("witness for ({w}, {w_prime}) at ({a}, {b}) is not in the fiber"))
    })
}

#[derive(Serialize)]
struct SampleRecord {
    w: Perm,
    samples: usize,
    seed: u64,
    plucker: bool,
    incidence: bool,
    cell: bool,
    p_equations: bool,
}

pub fn sample_check(args: SampleArgs) -> CmdResult {
    let w = parse_perm(&args.w, args.n)?;
    let eqs = p_polynomials(&w)?;
    let points = sample_points(&w, args.samples, args.seed)?;
    let mut rec = SampleRecord {
        w,
        samples: args.samples,
        seed: args.seed,
        plucker: true,
        incidence: true,
        cell: true,
        p_equations: true,
    };
    for s in &points {
        let c = check_point(&eqs, &s.point)?;
        rec.plucker &= c.plucker;
        rec.incidence &= c.incidence;
        rec.cell &= c.cell;
        rec.p_equations &= c.p_equations;
    }
    print_json(&rec)?;
    Ok(if rec.plucker && rec.incidence && rec.cell && rec.p_equations {
        Outcome::Success
    } else {
        Outcome::Mismatch(format!("an equation family of {} fails at a sampled point", rec.w))
    })
}
