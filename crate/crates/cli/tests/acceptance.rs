//! Acceptance report: one PASS/FAIL line per primary criterion.
//!
//! Runs without the test harness so the report is always printed. The process
//! fails when a criterion fails in any way other than the two documented
//! deviations: the prenecklace step bound, which does not hold for d ≥ 2, and
//! four misprinted cells of the length-four distance table.

use necklace_core::counting::{
    count_atranslational, count_fc_atranslational, count_fc_lyndon, count_fc_necklaces, count_lyndon,
    count_necklaces, parikh_vectors,
};
use necklace_core::generation::{enumerate, next_necklace};
use necklace_core::kcentre::{
    approx_ratio, de_bruijn_sequence, k_centre_1d, overlap_distance, select_lambda, ExactRatio,
};
use necklace_core::ranking::{beta, ns, FixedContentRanker, Ranker};
use necklace_core::unranking::{FixedContentUnranker, Unranker};
use necklace_core::{SizeVec, Word};
use necklace_oracle::{census_with_guard, oracle_beta, oracle_max_distance, oracle_ns, size_grid, Census, Fraction};
use num_bigint::BigUint;
use std::collections::{HashMap, HashSet};
use std::time::{Duration, Instant};

/// Largest cell count on the verification grid.
const MAX_CELLS: usize = 16;
/// Largest dimension count on the verification grid.
const MAX_DIMS: usize = 4;
/// Sizes with at most this many necklaces are ranked and unranked exhaustively.
const FULL_LIMIT: usize = 6000;
/// Evenly spaced ranks checked on larger sizes, besides both ends.
const SAMPLE_STRIDE_COUNT: usize = 300;
/// Necklaces checked at each end of a sampled size.
const SAMPLE_ENDS: usize = 50;
/// Fixed-content round trips cover every member when the size has at most this many necklaces.
const FC_FULL_LIMIT: usize = 1000;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Outcome {
    Pass,
    Fail,
}

struct Line {
    name: &'static str,
    outcome: Outcome,
    detail: String,
    /// A failure matching a documented deviation exactly.
    known: bool,
}

fn size(dims: &[usize]) -> SizeVec {
    SizeVec::new(dims).unwrap()
}

fn word(text: &str, dims: &[usize], q: u8) -> Word {
    Word::parse_text(text, &size(dims), q).unwrap()
}

fn secs(d: Duration) -> String {
    format!("{:.1}s", d.as_secs_f64())
}

/// The census with a guard wide enough for the whole grid.
fn full_census(s: &SizeVec, q: u8) -> Census {
    census_with_guard(s, q, (q as u128).pow(MAX_CELLS as u32)).unwrap()
}

/// Indices checked for one size: all of them, or both ends plus an even stride.
fn checked_indices(len: usize) -> (Vec<usize>, bool) {
    if len <= FULL_LIMIT {
        return ((0..len).collect(), true);
    }
    let mut set: Vec<usize> = (0..SAMPLE_ENDS).chain(len - SAMPLE_ENDS..len).collect();
    set.extend((0..SAMPLE_STRIDE_COUNT).map(|k| k * len / SAMPLE_STRIDE_COUNT));
    set.sort_unstable();
    set.dedup();
    (set, false)
}

fn content(cells: &[u8], q: u8) -> Vec<usize> {
    let mut p = vec![0; q as usize];
    for &c in cells {
        p[c as usize - 1] += 1;
    }
    p
}

/// Per-size results shared by the grid criteria.
#[derive(Default)]
struct GridTally {
    sizes: usize,
    count_time: Duration,
    count_errors: Vec<String>,
    generation_errors: Vec<String>,
    step_violations: Vec<String>,
    steps_1d_ok: bool,
    rank_errors: Vec<String>,
    ranked: usize,
    unrank_errors: Vec<String>,
    sampled_sizes: Vec<String>,
    fc_errors: Vec<String>,
    fc_checked: usize,
    fc_sampled_sizes: Vec<String>,
}

fn run_grid() -> GridTally {
    let mut t = GridTally {
        steps_1d_ok: true,
        ..Default::default()
    };
    for s in size_grid(MAX_CELLS, MAX_DIMS) {
        for q in 2..=3u8 {
            t.sizes += 1;
            let c = full_census(&s, q);
            check_counts(&s, q, &c, &mut t);
            check_generation(&s, q, &c, &mut t);
            check_ranks(&s, q, &c, &mut t);
            if s.total() <= 12 {
                check_fixed_content(&s, q, &c, &mut t);
            }
        }
    }
    t
}

fn check_counts(s: &SizeVec, q: u8, c: &Census, t: &mut GridTally) {
    let start = Instant::now();
    let fast = [count_necklaces(s, q), count_lyndon(s, q), count_atranslational(s, q)];
    let mut by_content: HashMap<Vec<usize>, [usize; 3]> = HashMap::new();
    let mut fixed = Vec::new();
    for p in parikh_vectors(s.total(), q as usize) {
        let counts = [
            count_fc_necklaces(s, &p).unwrap(),
            count_fc_lyndon(s, &p).unwrap(),
            count_fc_atranslational(s, &p).unwrap(),
        ];
        fixed.push((p, counts));
    }
    t.count_time += start.elapsed();
    let oracle = [c.len(), c.lyndon_count(), c.atranslational_count()];
    for (k, (f, o)) in fast.iter().zip(oracle).enumerate() {
        if f != &BigUint::from(o) {
            t.count_errors.push(format!("{s} q={q} kind {k}: {f} vs {o}"));
        }
    }
    for i in 0..c.len() {
        let e = by_content.entry(content(c.cells(i), q)).or_default();
        e[0] += 1;
        e[1] += usize::from(c.is_lyndon(i));
        e[2] += usize::from(c.is_atranslational(i));
    }
    for (p, counts) in fixed {
        let o = by_content.get(&p).copied().unwrap_or_default();
        for k in 0..3 {
            if counts[k] != BigUint::from(o[k]) {
                t.count_errors.push(format!("{s} q={q} {p:?} kind {k}: {} vs {}", counts[k], o[k]));
            }
        }
    }
}

fn check_generation(s: &SizeVec, q: u8, c: &Census, t: &mut GridTally) {
    let mut it = enumerate(s, q);
    let mut i = 0;
    for w in it.by_ref() {
        if i >= c.len() || w.cells() != c.cells(i) {
            t.generation_errors.push(format!("{s} q={q}: mismatch at {i}"));
            return;
        }
        i += 1;
    }
    if i != c.len() {
        t.generation_errors.push(format!("{s} q={q}: {i} of {} necklaces", c.len()));
    }
    if it.max_steps() > s.last() {
        if s.d() == 1 {
            t.steps_1d_ok = false;
        }
        t.step_violations.push(format!("{s} q={q}: {} > {}", it.max_steps(), s.last()));
    }
}

fn check_ranks(s: &SizeVec, q: u8, c: &Census, t: &mut GridTally) {
    let mut lyndon_below = Vec::with_capacity(c.len());
    let mut atrans_below = Vec::with_capacity(c.len());
    let (mut l, mut a) = (0usize, 0usize);
    for i in 0..c.len() {
        lyndon_below.push(l);
        atrans_below.push(a);
        l += usize::from(c.is_lyndon(i));
        a += usize::from(c.is_atranslational(i));
    }
    let (indices, full) = checked_indices(c.len());
    if !full {
        t.sampled_sizes.push(format!("{s} q={q} ({} of {})", indices.len(), c.len()));
    }
    let mut ranker = Ranker::new(s, q);
    let mut unranker = Unranker::new(s, q);
    for &i in &indices {
        let w = c.word(i);
        let r = ranker.rank(&w).unwrap();
        if r.rn != BigUint::from(i) || r.rl != BigUint::from(lyndon_below[i]) || r.ra != BigUint::from(atrans_below[i]) {
            t.rank_errors.push(format!("{s} q={q} {}: {r:?} vs ({i}, {}, {})", w.to_text(), lyndon_below[i], atrans_below[i]));
        }
        match unranker.unrank(&BigUint::from(i)) {
            Ok(u) if u == w => {}
            other => t.unrank_errors.push(format!("{s} q={q} rank {i}: {other:?}")),
        }
        t.ranked += 1;
    }
}

fn check_fixed_content(s: &SizeVec, q: u8, c: &Census, t: &mut GridTally) {
    let mut members: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    for i in 0..c.len() {
        members.entry(content(c.cells(i), q)).or_default().push(i);
    }
    let full = c.len() <= FC_FULL_LIMIT;
    if !full {
        t.fc_sampled_sizes.push(format!("{s} q={q}"));
    }
    for p in parikh_vectors(s.total(), q as usize) {
        let list = members.remove(&p).unwrap_or_default();
        let mut ranker = FixedContentRanker::new(s, &p).unwrap();
        let mut unranker = FixedContentUnranker::new(s, &p).unwrap();
        if unranker.count() != &BigUint::from(list.len()) {
            t.fc_errors.push(format!("{s} {p:?}: count {} vs {}", unranker.count(), list.len()));
            continue;
        }
        let ks: Vec<usize> = if full || list.len() <= 3 {
            (0..list.len()).collect()
        } else {
            vec![0, list.len() / 2, list.len() - 1]
        };
        for k in ks {
            let w = c.word(list[k]);
            let r = ranker.rank(&w).unwrap();
            let u = unranker.unrank(&BigUint::from(k)).unwrap();
            if r != BigUint::from(k) || u != w {
                t.fc_errors.push(format!("{s} {p:?} rank {k}: {r}, {}", u.to_text()));
            }
            t.fc_checked += 1;
        }
    }
}

fn summarize(errors: &[String]) -> String {
    match errors.len() {
        0 => String::new(),
        n => format!("; {n} errors, first: {}", errors[0]),
    }
}

fn counting_line(t: &GridTally) -> Line {
    let examples = count_necklaces(&size(&[2, 2]), 2) == BigUint::from(7u32)
        && count_necklaces(&size(&[4]), 2) == BigUint::from(6u32);
    let fast_enough = t.count_time < Duration::from_secs(300);
    let ok = examples && t.count_errors.is_empty() && fast_enough;
    Line {
        name: "Counting",
        outcome: if ok { Outcome::Pass } else { Outcome::Fail },
        detail: format!(
            "(2,2)->7 and (4)->6 {}; six counts (incl. every Parikh vector) equal the census on {} (size, q) pairs \
             (N <= {MAX_CELLS}, d <= {MAX_DIMS}, q in {{2,3}}); closed forms took {}{}",
            if examples { "ok" } else { "WRONG" },
            t.sizes,
            secs(t.count_time),
            summarize(&t.count_errors)
        ),
        known: false,
    }
}

fn generation_line(t: &GridTally) -> Line {
    let seq: Vec<String> = enumerate(&size(&[2, 2]), 2).map(|w| w.to_text()).collect();
    let reference = ["[aa;aa]", "[aa;ab]", "[aa;bb]", "[ab;ab]", "[ab;ba]", "[ab;bb]", "[bb;bb]"];
    let seq_ok = seq == reference;
    let lists_ok = t.generation_errors.is_empty();
    let bound_ok = t.step_violations.is_empty();
    let outcome = if seq_ok && lists_ok && bound_ok { Outcome::Pass } else { Outcome::Fail };
    Line {
        name: "Generation",
        outcome,
        detail: format!(
            "(2,2) sequence {}; enumerate equals the census on all {} (size, q) pairs {}; \
             prenecklace steps per next_necklace <= n_d: {}",
            if seq_ok { "ok" } else { "WRONG" },
            t.sizes,
            if lists_ok { "ok".to_string() } else { summarize(&t.generation_errors) },
            if bound_ok {
                "ok".to_string()
            } else {
                format!(
                    "violated at {} multidimensional sizes (1-D {}), e.g. {}",
                    t.step_violations.len(),
                    if t.steps_1d_ok { "within bound" } else { "ALSO violated" },
                    t.step_violations.iter().take(4).cloned().collect::<Vec<_>>().join(", ")
                )
            },
        ),
        // Documented: the step bound fails only in d >= 2; everything else must hold.
        known: seq_ok && lists_ok && t.steps_1d_ok,
    }
}

fn ranking_line(t: &GridTally) -> Line {
    let s = size(&[2, 2]);
    let example_rank = Ranker::new(&s, 2).rank(&word("[ab;ab]", &[2, 2], 2)).unwrap().rn == BigUint::from(3u32);
    let example_unrank = Unranker::new(&s, 2).unrank(&BigUint::from(4u32)).unwrap() == word("[ab;ba]", &[2, 2], 2);
    let ok = example_rank && example_unrank && t.rank_errors.is_empty();
    Line {
        name: "Ranking",
        outcome: if ok { Outcome::Pass } else { Outcome::Fail },
        detail: format!(
            "rank([ab;ab])=3 {}, unrank(4)=[ab;ba] {}; rn/rl/ra equal census ranks for {} necklaces, \
             exhaustive except {} sizes with more than {FULL_LIMIT} necklaces (ends + stride sample: {}){}",
            if example_rank { "ok" } else { "WRONG" },
            if example_unrank { "ok" } else { "WRONG" },
            t.ranked,
            t.sampled_sizes.len(),
            t.sampled_sizes.join(", "),
            summarize(&t.rank_errors)
        ),
        known: false,
    }
}

fn round_trip_line(t: &GridTally) -> Line {
    let ok = t.unrank_errors.is_empty() && t.rank_errors.is_empty() && t.fc_errors.is_empty();
    Line {
        name: "Round trip",
        outcome: if ok { Outcome::Pass } else { Outcome::Fail },
        detail: format!(
            "unrank(i) = i-th census necklace and rank of it = i on the same {} indices as ranking; \
             fixed content (N <= 12, every Parikh vector, q in {{2,3}}): {} round trips, all members except \
             first/middle/last on {} larger sizes ({}){}{}",
            t.ranked,
            t.fc_checked,
            t.fc_sampled_sizes.len(),
            t.fc_sampled_sizes.join(", "),
            summarize(&t.unrank_errors),
            summarize(&t.fc_errors)
        ),
        known: false,
    }
}

fn beta_ns_line() -> Line {
    let sizes: &[&[usize]] = &[
        &[6], &[8], &[1, 6], &[2, 4], &[2, 6], &[3, 3], &[3, 4], &[4, 2], &[4, 3], &[2, 2, 2], &[2, 2, 3],
    ];
    let mut cases = 0usize;
    let mut errors = Vec::new();
    for dims in sizes {
        let s = size(dims);
        let c = full_census(&s, 2);
        let m = s.last();
        for w in c.necklaces() {
            for i in 0..=m {
                for j in 0..=i {
                    cases += 1;
                    if beta(&w, i, j).unwrap() != BigUint::from(oracle_beta(&w, i, j)) {
                        errors.push(format!("beta {} i={i} j={j}", w.to_text()));
                    }
                }
            }
            for j in 0..m {
                cases += 1;
                if ns(&w, j).unwrap() != BigUint::from(oracle_ns(&w, j)) {
                    errors.push(format!("ns {} j={j}", w.to_text()));
                }
            }
        }
    }
    Line {
        name: "beta/NS",
        outcome: if errors.is_empty() { Outcome::Pass } else { Outcome::Fail },
        detail: format!(
            "{cases} (w, i, j) cases over {} sizes with cross-sections of <= 4 cells, q=2, equal direct enumeration{}",
            sizes.len(),
            summarize(&errors)
        ),
        known: false,
    }
}

fn distance_line() -> Line {
    let example = overlap_distance(&word("ababab", &[6], 2), &word("abbabb", &[6], 2)).unwrap() == ExactRatio::new(25, 36);
    // Reference values in sixteenths, rows and columns in the order aaaa, aaab, aabb, abab, abbb, bbbb.
    let printed: [[u64; 6]; 6] = [
        [0, 10, 13, 14, 15, 16],
        [10, 0, 9, 10, 12, 15],
        [13, 9, 0, 10, 8, 13],
        [14, 10, 10, 0, 6, 14],
        [15, 12, 8, 10, 0, 10],
        [16, 15, 13, 14, 8, 0],
    ];
    let names = ["A", "B", "C", "D", "E", "F"];
    let ws: Vec<Word> = full_census(&size(&[4]), 2).necklaces().collect();
    let mut mismatches = Vec::new();
    for (a, wa) in ws.iter().enumerate() {
        for (b, wb) in ws.iter().enumerate() {
            let d = overlap_distance(wa, wb).unwrap();
            if d != ExactRatio::new(printed[a][b], 16) {
                mismatches.push(format!("{}-{}: {} (printed {}/16)", names[a], names[b], d, printed[a][b]));
            }
        }
    }
    let mut axioms_ok = true;
    let mut triples = 0usize;
    for dims in [vec![4], vec![2, 2]] {
        let ws: Vec<Word> = full_census(&size(&dims), 2).necklaces().collect();
        let n = ws.len();
        let d: Vec<Vec<ExactRatio>> = ws.iter().map(|a| ws.iter().map(|b| overlap_distance(a, b).unwrap()).collect()).collect();
        for i in 0..n {
            for j in 0..n {
                axioms_ok &= (d[i][j] == ExactRatio::from_integer(0)) == (i == j) && d[i][j] == d[j][i];
                for k in 0..n {
                    axioms_ok &= d[i][k] <= d[i][j] + d[j][k];
                    triples += 1;
                }
            }
        }
    }
    let table_ok = mismatches.is_empty();
    let documented: HashSet<&str> = ["B-C", "C-B", "D-E", "F-E"].into_iter().collect();
    let found: HashSet<&str> = mismatches.iter().map(|m| &m[..3]).collect();
    Line {
        name: "Distance",
        outcome: if example && table_ok && axioms_ok { Outcome::Pass } else { Outcome::Fail },
        detail: format!(
            "O(ababab, abbabb) = 25/36 {}; 6x6 table: {}/36 cells match{}; metric axioms over {triples} triples \
             for (4) and (2,2), q=2: {}",
            if example { "ok" } else { "WRONG" },
            36 - mismatches.len(),
            if table_ok { String::new() } else { format!(" (differ: {})", mismatches.join(", ")) },
            if axioms_ok { "ok" } else { "VIOLATED" }
        ),
        // Documented: the printed table has four misprinted cells (it is not even symmetric).
        known: example && axioms_ok && found == documented,
    }
}

fn de_bruijn_line() -> Line {
    let reference = "0000001000011000101000111001001011001101001111010101110110111111";
    let seq: String = de_bruijn_sequence(2, 6).unwrap().cells().iter().map(|&c| char::from(b'0' + c - 1)).collect();
    let reference_ok = seq == reference;
    let mut coverage_ok = true;
    let mut checked = 0;
    for q in 2..=3u8 {
        for order in 1..=8usize {
            let w = de_bruijn_sequence(q, order).unwrap();
            let cells = w.cells();
            let len = cells.len();
            let mut seen = HashSet::new();
            for start in 0..len {
                let window: Vec<u8> = (0..order).map(|t| cells[(start + t) % len]).collect();
                seen.insert(window);
            }
            coverage_ok &= len == (q as usize).pow(order as u32) && seen.len() == len;
            checked += 1;
        }
    }
    Line {
        name: "de Bruijn",
        outcome: if reference_ok && coverage_ok { Outcome::Pass } else { Outcome::Fail },
        detail: format!(
            "order-6 binary sequence {} the reference; exactly-once cyclic coverage for {checked} (q, order) pairs, \
             q in {{2,3}}, order <= 8: {}",
            if reference_ok { "matches" } else { "DIFFERS from" },
            if coverage_ok { "ok" } else { "VIOLATED" }
        ),
        known: false,
    }
}

fn k_centre_line() -> Line {
    let start = Instant::now();
    let set = k_centre_1d(20, 2, 4).unwrap();
    let lambda = select_lambda(20, 2, 4) as usize;
    let mut present = HashSet::new();
    for c in &set.centres {
        let cells = c.cells();
        for s in 0..cells.len() {
            present.insert((0..lambda).map(|t| cells[(s + t) % cells.len()]).collect::<Vec<u8>>());
        }
    }
    let distinct: HashSet<&Word> = set.centres.iter().collect();
    let cover_ok = set.centres.len() == 4
        && distinct.len() == 4
        && set.centres.iter().all(|c| c.cells().len() == 20)
        && set.lambda == lambda
        && present.len() == 1 << lambda;
    let mut bound_ok = true;
    let mut worst_note = Vec::new();
    for n in 1..=12usize {
        let c = full_census(&size(&[n]), 2);
        for k in [1usize, 2, 4] {
            let set = k_centre_1d(n, 2, k).unwrap();
            let worst = oracle_max_distance(&set.centres, &c).unwrap();
            let l = set.lambda as u64;
            let nn = n as u64;
            let bound = Fraction::from_integer(1) - Fraction::new(l * (l + 1), 2 * nn * nn);
            if worst > bound {
                bound_ok = false;
                worst_note.push(format!("n={n} k={k}: {worst} > {bound}"));
            }
        }
    }
    let elapsed = start.elapsed();
    let fast = elapsed < Duration::from_secs(120);
    Line {
        name: "k-centre",
        outcome: if cover_ok && bound_ok && fast { Outcome::Pass } else { Outcome::Fail },
        detail: format!(
            "n=20, k=4: {} distinct centres, all {} words of length lambda={lambda} present: {}; n <= 12, k in {{1,2,4}}: \
             max distance <= 1 - lambda(lambda+1)/(2n^2) {}; {}",
            distinct.len(),
            1 << lambda,
            if cover_ok { "ok" } else { "NO" },
            if bound_ok { "ok".to_string() } else { format!("VIOLATED: {}", worst_note.join(", ")) },
            secs(elapsed)
        ),
        known: false,
    }
}

fn ratio_table_line() -> Line {
    // Reference rows k = 1..8, columns n = 1..8; 1.0 marks sentinel cells.
    let binary: [[f64; 8]; 8] = [
        [1.0, 1.75, 1.8242, 1.75, 1.6657, 1.59388, 1.53532, 1.4875],
        [1.0, 1.0, 4.54496, 2.875, 2.322, 2.04096, 1.86822, 1.75],
        [1.0, 1.0, 1.0, 5.76696, 3.17774, 2.48677, 2.15592, 1.95785],
        [1.0, 1.0, 1.0, 1.0, 4.61912, 3.00217, 2.43963, 2.14583],
        [1.0, 1.0, 1.0, 1.0, 7.98402, 3.65337, 2.73732, 2.32623],
        [1.0, 1.0, 1.0, 1.0, 27.84082, 4.54496, 3.06221, 2.50535],
        [1.0, 1.0, 1.0, 1.0, 1.0, 5.88615, 3.4276, 2.68724],
        [1.0, 1.0, 1.0, 1.0, 1.0, 8.19368, 3.84946, 2.875],
    ];
    let octal: [[f64; 8]; 8] = [
        [1.0, 1.18333, 1.19493, 1.18333, 1.16897, 1.15565, 1.144, 1.13393],
        [1.41667, 1.41667, 1.34509, 1.29167, 1.25296, 1.22393, 1.20138, 1.18333],
        [1.8242, 1.59388, 1.44797, 1.36238, 1.30633, 1.26659, 1.23682, 1.2136],
        [2.33333, 1.75, 1.53018, 1.41667, 1.34644, 1.29825, 1.2629, 1.23575],
        [3.09914, 1.89704, 1.6006, 1.46153, 1.379, 1.32369, 1.28372, 1.25334],
        [4.54496, 2.04096, 1.66333, 1.50021, 1.40664, 1.34509, 1.30113, 1.26799],
        [8.75423, 2.18549, 1.72065, 1.53449, 1.4308, 1.36364, 1.31615, 1.28059],
        [1.0, 2.33333, 1.77396, 1.56548, 1.45235, 1.38007, 1.32939, 1.29167],
    ];
    let mut compared = 0;
    let mut errors = Vec::new();
    for (q, table) in [(2u8, &binary), (8u8, &octal)] {
        for (ki, row) in table.iter().enumerate() {
            for (ni, &printed) in row.iter().enumerate() {
                if printed == 1.0 {
                    continue;
                }
                compared += 1;
                match approx_ratio(ni + 1, q, ki + 1) {
                    Some(v) if (v - printed).abs() <= 1e-4 => {}
                    other => errors.push(format!("q={q} k={} n={}: {other:?} vs {printed}", ki + 1, ni + 1)),
                }
            }
        }
    }
    Line {
        name: "Ratio table",
        outcome: if errors.is_empty() { Outcome::Pass } else { Outcome::Fail },
        detail: format!("{compared} non-sentinel cells for q=2 and q=8 within 1e-4{}", summarize(&errors)),
        known: false,
    }
}

fn complexity_line() -> Line {
    let s = size(&[4, 4, 4]);
    // A fixed pseudo-random binary word, canonicalized.
    let mut x: u64 = 0x9e37_79b9_7f4a_7c15;
    let cells: Vec<u8> = (0..64)
        .map(|_| {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            (x & 1) as u8 + 1
        })
        .collect();
    let w = Word::new(s.clone(), 2, cells).unwrap().canonicalize().0;
    let start = Instant::now();
    let r = Ranker::new(&s, 2).rank(&w).unwrap();
    let elapsed = start.elapsed();
    let next = next_necklace(&w).unwrap();
    let consistent = Ranker::new(&s, 2).rank(&next).unwrap().rn == &r.rn + 1u32;
    let ok = elapsed < Duration::from_secs(60) && consistent;
    Line {
        name: "Complexity smoke",
        outcome: if ok { Outcome::Pass } else { Outcome::Fail },
        detail: format!(
            "rank of a (4,4,4) binary necklace took {} (budget 60s; regression ceiling only), rn={} and its successor ranks rn+1: {}",
            secs(elapsed),
            r.rn,
            if consistent { "ok" } else { "NO" }
        ),
        known: false,
    }
}

fn main() {
    // Behave like a test binary when asked to list tests.
    if std::env::args().any(|a| a == "--list") {
        println!("acceptance: test");
        return;
    }
    let start = Instant::now();
    let mut lines = Vec::new();
    let grid = run_grid();
    lines.push(counting_line(&grid));
    lines.push(generation_line(&grid));
    lines.push(ranking_line(&grid));
    lines.push(round_trip_line(&grid));
    lines.push(beta_ns_line());
    lines.push(distance_line());
    lines.push(de_bruijn_line());
    lines.push(k_centre_line());
    lines.push(ratio_table_line());
    lines.push(complexity_line());

    println!("acceptance report ({} total)", secs(start.elapsed()));
    let mut unexpected = 0;
    for l in &lines {
        let tag = match l.outcome {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
        };
        let note = if l.outcome == Outcome::Fail && l.known { " [documented deviation]" } else { "" };
        println!("{tag} {}: {}{note}", l.name, l.detail);
        if l.outcome == Outcome::Fail && !l.known {
            unexpected += 1;
        }
    }
    if unexpected > 0 {
        eprintln!("{unexpected} criteria failed unexpectedly");
        std::process::exit(1);
    }
}
