//! Acceptance checks, one line per criterion. Exits non-zero if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dsf_core::enumeration::{Mode as Family, SequenceIter};
use dsf_core::oracle::{
    is_cut_vertex, oracle_verdict, realize_cut_witness, Mode, Property, DEFAULT_BOUND,
};
use dsf_core::random::{experiment_grid, Generator, RandomSpec};
use dsf_core::{
    check_unimodal, count_tables, extremal_largest_term, forcibly_biconnected,
    forcibly_biconnected_basic, forcibly_connected, potentially_biconnected, potentially_connected,
    CountTable, DegreeSequence, Error, Exec, Filter, Gate, Itemize, Tester,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn tables(param: u32, family: Family, filters: &[Filter], kind: Itemize) -> Vec<CountTable> {
    count_tables(param, family, filters, kind, Exec::default()).expect("valid parameter")
}

fn row(t: &CountTable, keys: impl IntoIterator<Item = u32>) -> Vec<u64> {
    keys.into_iter().map(|k| t.get(k)).collect()
}

fn sequence_totals() -> Outcome {
    let fb = [3u64, 9, 30, 105, 381, 1412, 5296, 20010, 76045];
    let fc = [6u64, 18, 63, 216, 783, 2843, 10535, 39232, 147457];
    for (i, n) in (4..=12).enumerate() {
        let t = tables(
            n,
            Family::Sequences,
            &[Filter::ForciblyBiconnected, Filter::ForciblyConnected],
            Itemize::Totals,
        );
        let got = (t[0].total(), t[1].total());
        ensure(got == (fb[i], fc[i]), || {
            format!("n = {n}: got {got:?}, expected {:?}", (fb[i], fc[i]))
        })?;
    }
    Ok("n = 4..12 exact".into())
}

fn length_seven_by_sum() -> Outcome {
    let c2 = [1u64, 1, 3, 7, 14, 17, 18, 19, 16, 12, 8, 5, 2, 1, 1];
    let f2 = [0u64, 0, 0, 2, 8, 14, 17, 19, 16, 12, 8, 5, 2, 1, 1];
    let t = tables(
        7,
        Family::Sequences,
        &[Filter::PotentiallyBiconnected, Filter::ForciblyBiconnected],
        Itemize::ByDegreeSum,
    );
    let keys = || (14..=42).step_by(2);
    let (got_c, got_f) = (row(&t[0], keys()), row(&t[1], keys()));
    ensure(got_c == c2, || format!("potentially biconnected row {got_c:?}"))?;
    ensure(got_f == f2, || format!("forcibly biconnected row {got_f:?}"))?;
    ensure(t[1].get(20) == 2, || "count at sum 20".into())?;
    for n in (28..=42).step_by(2) {
        ensure(t[0].get(n) == t[1].get(n), || format!("band breaks at {n}"))?;
    }
    ensure(t[1].counts.keys().copied().eq(keys()), || "key range is not 14..=42".into())?;
    Ok("both rows exact, equal for sums 28..42".into())
}

fn partition_totals() -> Outcome {
    let expect = [(2u64, 8u64), (10, 81), (55, 586), (262, 3308), (1062, 15748)];
    for (i, total) in (10..=50).step_by(10).enumerate() {
        let t = tables(
            total,
            Family::Partitions,
            &[Filter::ForciblyBiconnected, Filter::ForciblyConnected],
            Itemize::Totals,
        );
        let got = (t[0].total(), t[1].total());
        ensure(got == expect[i], || format!("N = {total}: got {got:?}, expected {:?}", expect[i]))?;
    }
    Ok("N = 10..50 exact".into())
}

fn partitions_of_thirty() -> Outcome {
    let c2 = [1u64, 16, 44, 54, 30, 15, 7, 3, 1, 1];
    let f2 = [1u64, 16, 30, 8, 0, 0, 0, 0, 0, 0];
    let l2 = [2u64, 13, 23, 13, 4];
    let parts = tables(
        30,
        Family::Partitions,
        &[Filter::PotentiallyBiconnected, Filter::ForciblyBiconnected],
        Itemize::ByNumParts,
    );
    let largest =
        &tables(30, Family::Partitions, &[Filter::ForciblyBiconnected], Itemize::ByLargestPart)[0];
    let (got_c, got_f, got_l) =
        (row(&parts[0], 6..=15), row(&parts[1], 6..=15), row(largest, 4..=8));
    ensure(got_c == c2, || format!("potentially biconnected by parts {got_c:?}"))?;
    ensure(got_f == f2, || format!("forcibly biconnected by parts {got_f:?}"))?;
    ensure(got_l == l2, || format!("forcibly biconnected by largest part {got_l:?}"))?;
    ensure(largest.counts.keys().copied().eq(4..=8), || "largest-part keys".into())?;

    let seven = tables(
        7,
        Family::Sequences,
        &[Filter::PotentiallyBiconnected, Filter::ForciblyBiconnected],
        Itemize::ByDegreeSum,
    );
    let cross = [parts[0].get(7), parts[1].get(7), seven[0].get(30), seven[1].get(30)];
    ensure(cross == [16; 4], || format!("cross-check {cross:?}"))?;
    Ok("by parts, by largest part and the length/sum cross-check exact".into())
}

fn extremal_values() -> Outcome {
    let fb = [2u32, 2, 3, 3, 4, 4, 4, 5, 5, 6, 6];
    let fc = [2u32, 2, 3, 3, 3, 4, 4, 5, 5, 5, 6];
    for (i, n) in (4..=14).enumerate() {
        let r = extremal_largest_term(n, Family::Sequences).map_err(|e| e.to_string())?;
        let got = (r.value_forcibly_biconnected, r.value_forcibly_connected);
        ensure(got == (fb[i], fc[i]), || format!("n = {n}: got {got:?}"))?;
    }
    let parts = [2u32, 3, 4, 5, 5, 6];
    for (i, total) in (10..=60).step_by(10).enumerate() {
        let r = extremal_largest_term(total, Family::Partitions).map_err(|e| e.to_string())?;
        let got = (r.value_forcibly_biconnected, r.value_forcibly_connected);
        ensure(got == (parts[i], parts[i]), || format!("N = {total}: got {got:?}"))?;
    }
    Ok("sequences n = 4..14, partitions N = 10..60".into())
}

fn oracle_agreement() -> Outcome {
    let mut checked = 0usize;
    for n in 4..=8 {
        for d in SequenceIter::new(n) {
            let ask = |p, m| oracle_verdict(&d, p, m).expect("within bound");
            let fb = forcibly_biconnected(&d).is_forcibly_biconnected();
            let basic = forcibly_biconnected_basic(&d);
            let fc = forcibly_connected(&d).expect("graphical").is_forcibly_connected();
            let checks = [
                ("forcibly biconnected", fb, ask(Property::Biconnected, Mode::Forcibly)),
                ("basic test", basic, ask(Property::Biconnected, Mode::Forcibly)),
                (
                    "potentially biconnected",
                    potentially_biconnected(&d),
                    ask(Property::Biconnected, Mode::Potentially),
                ),
                ("forcibly connected", fc, ask(Property::Connected, Mode::Forcibly)),
                (
                    "potentially connected",
                    potentially_connected(&d),
                    ask(Property::Connected, Mode::Potentially),
                ),
            ];
            for (name, mine, brute) in checks {
                ensure(mine == brute, || format!("{name} disagrees on ({d}): {mine} vs {brute}"))?;
            }
            checked += 1;
        }
    }
    ensure(checked == 7 + 20 + 71 + 240 + 871, || format!("swept {checked} sequences"))?;
    Ok(format!("{checked} sequences, zero disagreements"))
}

fn check_witness(d: &DegreeSequence, w: &dsf_core::CutWitness) -> Result<(), String> {
    w.validate(d).map_err(|e| format!("({d}): {e}"))?;
    let (g, v) = realize_cut_witness(w, DEFAULT_BOUND)
        .map_err(|e| e.to_string())?
        .ok_or_else(|| format!("({d}): witness has no realization"))?;
    ensure(g.sorted_degrees() == d.terms(), || format!("({d}): glued graph has wrong degrees"))?;
    ensure(is_cut_vertex(&g, v), || format!("({d}): glued vertex is not a cut vertex"))?;
    ensure(g.degree_of[v] == w.cut_degree, || format!("({d}): cut vertex degree differs"))
}

fn witness_soundness() -> Outcome {
    let (mut witnesses, mut sequences) = (0usize, 0usize);
    for n in 4..=8 {
        for d in SequenceIter::new(n) {
            if let Some(w) = forcibly_biconnected(&d).cut_witness() {
                check_witness(&d, w)?;
                witnesses += 1;
            }
            let search = Tester::new().find_cut_witnesses(&d, None).map_err(|e| e.to_string())?;
            if search.gate == Gate::Passed {
                sequences += 1;
                for w in &search.witnesses {
                    check_witness(&d, w)?;
                    witnesses += 1;
                }
            }
        }
    }
    ensure(witnesses > 0, || "no witnesses emitted".into())?;
    Ok(format!("{witnesses} witnesses over {sequences} gated sequences, zero violations"))
}

fn unimodality() -> Outcome {
    let mut findings = Vec::new();
    for n in 4..=10 {
        let t =
            &tables(n, Family::Sequences, &[Filter::ForciblyBiconnected], Itemize::ByDegreeSum)[0];
        if !check_unimodal(&t.values()) {
            findings.push(format!("sequences n = {n} by sum"));
        }
    }
    for total in (2..=40).step_by(2) {
        for kind in [Itemize::ByNumParts, Itemize::ByLargestPart] {
            let t = &tables(total, Family::Partitions, &[Filter::ForciblyBiconnected], kind)[0];
            if !check_unimodal(&t.values()) {
                findings.push(format!("partitions N = {total} {kind}"));
            }
        }
    }
    let required = [
        tables(7, Family::Sequences, &[Filter::ForciblyBiconnected], Itemize::ByDegreeSum),
        tables(30, Family::Partitions, &[Filter::ForciblyBiconnected], Itemize::ByNumParts),
        tables(30, Family::Partitions, &[Filter::ForciblyBiconnected], Itemize::ByLargestPart),
    ];
    for t in required.iter().map(|t| &t[0]) {
        ensure(check_unimodal(&t.values()), || {
            format!("required row {} {} {} is not unimodal", t.mode, t.fixed_parameter, t.kind)
        })?;
    }
    if findings.is_empty() {
        Ok("all rows unimodal".into())
    } else {
        Ok(format!("required rows unimodal; non-unimodal findings: {}", findings.join("; ")))
    }
}

fn random_performance() -> Outcome {
    let limit = Duration::from_millis(100);
    let (mut total, mut fast) = (0usize, 0usize);
    for (i, (p_low, p_high)) in experiment_grid().into_iter().enumerate() {
        let spec =
            RandomSpec::new(100, p_low, p_high, 100, 1000 + i as u64).map_err(|e| e.to_string())?;
        let mut gen = Generator::new(&spec).map_err(|e| e.to_string())?;
        for _ in 0..spec.count {
            let d = gen.sample().map_err(|e| e.to_string())?;
            let start = Instant::now();
            let verdict = Tester::new().with_budget(limit).forcibly_biconnected(&d);
            total += 1;
            match verdict {
                Ok(_) if start.elapsed() < limit => fast += 1,
                Ok(_) | Err(Error::Timeout) => {}
                Err(e) => return Err(e.to_string()),
            }
        }
    }
    let share = fast as f64 / total as f64;
    ensure(share >= 0.95, || format!("{fast}/{total} decided under 0.1 s ({share:.4})"))?;
    Ok(format!("{fast}/{total} decided under 0.1 s ({share:.4})"))
}

fn shortcut_counter() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut done = 0usize;
    while done < 1000 {
        let n = rng.gen_range(4..=60usize);
        let p_high = rng.gen_range(0.55..=0.99);
        let spec = RandomSpec::new(n, 0.5, p_high, 1, rng.gen()).map_err(|e| e.to_string())?;
        let d = Generator::new(&spec).and_then(|mut g| g.sample()).map_err(|e| e.to_string())?;
        if 2 * (d.min_term() as usize) < n {
            continue;
        }
        let mut tester = Tester::new();
        let verdict = tester.forcibly_biconnected(&d).map_err(|e| e.to_string())?;
        ensure(verdict.is_forcibly_biconnected(), || format!("({d}) not forcibly biconnected"))?;
        let stats = tester.stats();
        ensure(stats.cut_searches == 0 && stats.low_candidates == 0, || {
            format!("({d}) entered the cut search: {stats:?}")
        })?;
        done += 1;
    }
    Ok(format!("{done} sequences, cut-search counter 0"))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("forcibly (bi)connected sequence totals, n = 4..12", sequence_totals),
        ("length-7 counts by degree sum", length_seven_by_sum),
        ("forcibly (bi)connected partition totals, N = 10..50", partition_totals),
        ("partitions of 30 by parts and by largest part", partitions_of_thirty),
        ("minimum largest terms", extremal_values),
        ("brute-force agreement, n = 4..8", oracle_agreement),
        ("cut witness soundness, n = 4..8", witness_soundness),
        ("unimodality of count rows", unimodality),
        ("random instances at n = 100 decided under 0.1 s", random_performance),
        ("shortcut leaves the cut search untouched", shortcut_counter),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {:>2}: {name} [{detail}] ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {:>2}: {name} [{detail}] ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
