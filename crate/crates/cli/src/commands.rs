use std::fs;
use std::path::Path;

use subshift::criteria::{all_checks, conjecture_probe, word_complexity_check, DepthLimited, FollowerSource, SoficKnowledge};
use subshift::graph::{builtin, LabeledGraph};
use subshift::oracle::DEFAULT_BUDGET;
use subshift::report::CountRow;
use subshift::{CodedSystem, Language, Oracle, SGapSpec, Side, SoficShift, UpDown};

use crate::output::{CheckRow, CliError, CliResult, ComplexityRow, Output, WitnessRow};
use crate::{Builtin, GapRule, Opts, Report};

fn lengths(opts: &Opts) -> CliResult<std::ops::RangeInclusive<usize>> {
    if opts.max_n == 0 {
        return Err(CliError::Usage("--max-n must be at least 1".into()));
    }
    Ok(1..=opts.max_n)
}

fn oracle<L: Language>(lang: L, opts: &Opts) -> Oracle<L> {
    Oracle::with_budget(lang, opts.budget.unwrap_or(DEFAULT_BUDGET))
}

fn load_graph(path: &Path) -> CliResult<(LabeledGraph, String)> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let name = path
        .file_stem()
        .map_or_else(|| "graph".to_string(), |s| s.to_string_lossy().into_owned());
    Ok((LabeledGraph::parse(&text)?, name))
}

fn side_of(report: Report) -> Option<Side> {
    match report {
        Report::Followers => Some(Side::Follower),
        Report::Predecessors => Some(Side::Predecessor),
        Report::Extenders => Some(Side::Extender),
        _ => None,
    }
}

fn lower_bound_rows<L: Language>(lang: L, side: Side, opts: &Opts) -> CliResult<Vec<CountRow>> {
    let name = lang.name();
    let o = oracle(lang, opts);
    let mut rows = Vec::new();
    for n in lengths(opts)? {
        let count = o.classify(n, side, opts.depth())?.count();
        rows.push(CountRow::lower_bound(&name, n, side, count, opts.depth()));
    }
    Ok(rows)
}

fn complexity<L: Language>(lang: L, opts: &Opts) -> CliResult<Output> {
    let name = lang.name();
    let o = oracle(lang, opts);
    let counts = o.complexity(opts.max_n)?;
    let range = lengths(opts)?;
    Ok(Output::Complexity(
        counts
            .into_iter()
            .filter(|(n, _)| range.contains(n))
            .map(|(n, words)| ComplexityRow {
                system: name.clone(),
                n,
                words,
            })
            .collect(),
    ))
}

fn criteria<L: Language + ?Sized>(
    src: &dyn FollowerSource,
    lang: &L,
    knowledge: SoficKnowledge,
    opts: &Opts,
) -> CliResult<Output> {
    let range = lengths(opts)?;
    let mut reports = all_checks(src, opts.max_n)?;
    reports.push(word_complexity_check(lang, opts.max_n)?);
    let counts = range.map(|n| src.follower_count(n)).collect::<subshift::Result<Vec<_>>>()?;
    reports.push(conjecture_probe(&src.system(), &counts, src.exact(), knowledge));
    Ok(Output::Criteria(reports))
}

pub fn graph(file: &Path, opts: &Opts) -> CliResult<Output> {
    let (g, name) = load_graph(file)?;
    sofic(SoficShift::named(&g, &name)?, opts)
}

fn sofic(shift: SoficShift, opts: &Opts) -> CliResult<Output> {
    match opts.report() {
        Report::Extenders => Ok(Output::Counts(lower_bound_rows(&shift, Side::Extender, opts)?)),
        Report::Complexity => complexity(&shift, opts),
        Report::Criteria => criteria(&shift, &shift, SoficKnowledge::Sofic, opts),
        r => {
            let side = side_of(r).expect("followers or predecessors");
            let mut rows = Vec::new();
            for n in lengths(opts)? {
                let count = shift.class_table(n, side)?.count();
                rows.push(CountRow::exact(&shift.name(), n, side, count, "subset construction"));
            }
            Ok(Output::Counts(rows))
        }
    }
}

pub fn updown(witnesses: bool, opts: &Opts) -> CliResult<Output> {
    let u = UpDown::default();
    if witnesses {
        return updown_witnesses(&u, opts);
    }
    match opts.report() {
        Report::Extenders => Ok(Output::Counts(lower_bound_rows(&u, Side::Extender, opts)?)),
        Report::Complexity => complexity(&u, opts),
        Report::Criteria => criteria(&u, &u, SoficKnowledge::Nonsofic, opts),
        r => {
            let side = side_of(r).expect("followers or predecessors");
            let mut rows = Vec::new();
            for n in lengths(opts)? {
                let (count, note) = match side {
                    Side::Follower => (u.follower_table(n)?.count(), "terminal vertex sets"),
                    _ => (u.predecessor_table(n)?.count(), "initial vertex sets"),
                };
                rows.push(CountRow::exact(&u.name(), n, side, count, note));
            }
            Ok(Output::Counts(rows))
        }
    }
}

fn updown_witnesses(u: &UpDown, opts: &Opts) -> CliResult<Output> {
    if opts.max_n < 7 {
        return Err(CliError::Usage("witness sets need --max-n of at least 7".into()));
    }
    let mut rows = Vec::new();
    for n in 7..=opts.max_n {
        for w in u.witness_set(n)? {
            let (v, tail) = w.split_at(n / 2);
            let initial = u.initial(&w)?;
            let formula = u.closed_form(v, u.initial(tail)?)?;
            rows.push(WitnessRow {
                n,
                word: u.render(&w),
                initial: initial.to_string(),
                closed_form: formula.to_string(),
                agrees: initial == formula,
            });
        }
    }
    Ok(Output::Witnesses(rows))
}

pub fn sgap(gaps: &[u64], rule: Option<GapRule>, cutoff: Option<u64>, opts: &Opts) -> CliResult<Output> {
    let (spec, knowledge) = match rule {
        Some(GapRule::PowersOf2) => {
            let cutoff = cutoff.ok_or_else(|| CliError::Usage("--gap-rule needs --cutoff".into()))?;
            (SGapSpec::powers_of_two(cutoff)?, SoficKnowledge::Unknown)
        }
        None => (SGapSpec::from_gaps(gaps.iter().copied())?, SoficKnowledge::Sofic),
    };
    depth_limited(CodedSystem::sgap(spec), knowledge, opts)
}

pub fn coded(file: &Path, separator: &str, opts: &Opts) -> CliResult<Output> {
    let (g, name) = load_graph(file)?;
    let y = CodedSystem::from_shift(SoficShift::named(&g, &name)?, separator)?;
    depth_limited(y, SoficKnowledge::Unknown, opts)
}

fn depth_limited(y: CodedSystem, knowledge: SoficKnowledge, opts: &Opts) -> CliResult<Output> {
    match opts.report() {
        Report::Complexity => complexity(&y, opts),
        Report::Criteria => {
            let src = DepthLimited::new(oracle(&y, opts), opts.depth());
            criteria(&src, &y, knowledge, opts)
        }
        r => {
            let side = side_of(r).expect("a count report");
            Ok(Output::Counts(lower_bound_rows(&y, side, opts)?))
        }
    }
}

pub fn oracle_check(file: Option<&Path>, system: Option<Builtin>, opts: &Opts) -> CliResult<Output> {
    let shift = match (file, system) {
        (Some(path), _) => {
            let (g, name) = load_graph(path)?;
            SoficShift::named(&g, &name)?
        }
        (None, Some(Builtin::Updown)) => return check_updown(opts),
        (None, Some(b)) => {
            let (g, name) = match b {
                Builtin::GoldenMean => (builtin::golden_mean(), "golden-mean"),
                Builtin::EvenShift => (builtin::even_shift(), "even-shift"),
                Builtin::FullShift => (builtin::full_shift(), "full-shift"),
                _ => (builtin::periodic_01(), "periodic-01"),
            };
            SoficShift::named(&g, name)?
        }
        (None, None) => return Err(CliError::Usage("give --file or --system".into())),
    };
    let o = oracle(&shift, opts);
    check_rows(&shift.name(), opts, |n, side| {
        Ok((shift.class_table(n, side)?.count(), o.classify(n, side, opts.depth())?.count()))
    })
}

fn check_updown(opts: &Opts) -> CliResult<Output> {
    let u = UpDown::default();
    let o = oracle(&u, opts);
    check_rows(&u.name(), opts, |n, side| {
        let exact = match side {
            Side::Follower => u.follower_table(n)?.count(),
            _ => u.predecessor_table(n)?.count(),
        };
        Ok((exact, o.classify(n, side, opts.depth())?.count()))
    })
}

fn check_rows<F>(system: &str, opts: &Opts, mut counts: F) -> CliResult<Output>
where
    F: FnMut(usize, Side) -> subshift::Result<(usize, usize)>,
{
    let mut rows = Vec::new();
    for n in lengths(opts)? {
        for side in [Side::Follower, Side::Predecessor] {
            let (exact, est) = counts(n, side)?;
            // profiles can only merge classes the exact engine separates
            if est > exact {
                return Err(CliError::Inconsistent(format!("{system} n={n} {side}: {est} > {exact}")));
            }
            rows.push(CheckRow {
                system: system.to_string(),
                n,
                side: side.to_string(),
                exact_count: exact,
                oracle_count: est,
                depth: opts.depth(),
                agrees: exact == est,
            });
        }
    }
    Ok(Output::Check(rows))
}
