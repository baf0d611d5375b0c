//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::time::{Duration, Instant};

use rand::Rng;

use cograph_spectra::analysis::{class_eigenvalues, counterexample_search, verify_conjecture};
use cograph_spectra::cotree::{Cotree, Kind};
use cograph_spectra::diagonalize::{
    batch_equal_join, batch_equal_union, count_relative, diagonalize, diagonalize_by_selection,
    eliminate_pair, spectrum, DeepestLeftmost, RandomPair,
};
use cograph_spectra::families::{family_pair, family_spectrum};
use cograph_spectra::generate::{random_cotree, random_equivalent_pair, rng_from_seed};
use cograph_spectra::oracle::dense_laplacian_spectrum;
use cograph_spectra::rational::Rational;

const CORPUS_SEED: u64 = 0x5eed_0003;
const CORPUS_SIZE: usize = 500;
const CORPUS_MAX_N: usize = 30;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed <= limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:.2?}, limit {limit:.2?}"))
    }
}

fn equivalent_corpus() -> Vec<(Cotree, Cotree)> {
    let mut rng = rng_from_seed(CORPUS_SEED);
    (0..CORPUS_SIZE)
        .map(|_| random_equivalent_pair(&mut rng, 2, CORPUS_MAX_N))
        .collect()
}

fn family_closed_form() -> Outcome {
    let start = Instant::now();
    for n in 3..=20 {
        let pair = match family_pair(n) {
            Ok(p) => p,
            Err(e) => return outcome(false, format!("n={n}: {e}")),
        };
        let (sg, sh) = (spectrum(&pair.first), spectrum(&pair.second));
        let expected = family_spectrum(n);
        if sg.as_ref() != Ok(&expected) || sh.as_ref() != Ok(&expected) {
            return outcome(false, format!("n={n}: {sg:?} / {sh:?}, expected {expected}"));
        }
        if pair.first.canonical_form(None) == pair.second.canonical_form(None) {
            return outcome(false, format!("n={n}: members are isomorphic"));
        }
    }
    match within(start.elapsed(), Duration::from_secs(5)) {
        Ok(()) => outcome(true, format!("n=3..20 in {:.2?}", start.elapsed())),
        Err(e) => outcome(false, e),
    }
}

fn dense_oracle_agreement() -> Outcome {
    let start = Instant::now();
    let mut rng = rng_from_seed(2);
    let (mut queries, mut mismatches) = (0usize, Vec::new());
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        let t = random_cotree(&mut rng, n);
        let dense = match dense_laplacian_spectrum(&t.to_graph()) {
            Ok(d) => d,
            Err(e) => return outcome(false, format!("{t}: {e}")),
        };
        let integers = (-1..=n as i64 + 1).map(|x| (x, 1));
        let halves = (0..n as i64).map(|x| (2 * x + 1, 2));
        for (p, q) in integers.chain(halves) {
            let exact = count_relative(&t, &Rational::new(p, q)).expect("nonempty");
            let approx = dense.count_relative(p as f64 / q as f64, 1e-8);
            queries += 1;
            if exact != approx {
                mismatches.push(format!("{t} at {p}/{q}: {exact} vs {approx}"));
            }
        }
    }
    if let Err(e) = within(start.elapsed(), Duration::from_secs(60)) {
        return outcome(false, e);
    }
    match mismatches.first() {
        None => outcome(true, format!("{queries} queries, 0 mismatches in {:.2?}", start.elapsed())),
        Some(m) => outcome(false, format!("{} mismatches, first {m}", mismatches.len())),
    }
}

fn shared_eigenvalue_bound(corpus: &[(Cotree, Cotree)]) -> Outcome {
    let start = Instant::now();
    let worked = verify_conjecture(
        &Cotree::parse("J(1,U(J(2),J(2)))").unwrap(),
        &Cotree::parse("J(1,U(2,J(2)))").unwrap(),
    );
    match &worked {
        Ok(r) if r.common == 4 && r.bound == 4 => {}
        other => return outcome(false, format!("worked pair: {other:?}")),
    }
    let mut tight = 0;
    for (g, h) in corpus {
        match verify_conjecture(g, h) {
            Ok(r) if r.holds => tight += usize::from(r.common == r.bound),
            Ok(r) => return outcome(false, format!("{g} / {h}: common {} < bound {}", r.common, r.bound)),
            Err(e) => return outcome(false, format!("{g} / {h}: {e}")),
        }
    }
    if let Err(e) = within(start.elapsed(), Duration::from_secs(60)) {
        return outcome(false, e);
    }
    outcome(
        true,
        format!(
            "{} pairs, {tight} tight, worked pair common=bound=4, {:.2?}",
            corpus.len(),
            start.elapsed()
        ),
    )
}

fn no_cospectral_counterexample() -> Outcome {
    match counterexample_search(CORPUS_SEED, CORPUS_SIZE, 2, CORPUS_MAX_N) {
        Ok(found) if found.is_empty() => outcome(true, format!("{CORPUS_SIZE} pairs, none found")),
        Ok(found) => outcome(
            false,
            format!("{} found, first {} / {}", found.len(), found[0].first, found[0].second),
        ),
        Err(e) => outcome(false, e.to_string()),
    }
}

fn class_eigenvalue_claims(corpus: &[(Cotree, Cotree)]) -> Outcome {
    let mut claims = 0;
    for t in corpus.iter().flat_map(|(g, h)| [g, h]) {
        match class_eigenvalues(t) {
            Ok(list) => {
                claims += list.len();
                if let Some(bad) = list.iter().find(|c| !c.confirmed()) {
                    return outcome(false, format!("{t}: {bad:?}"));
                }
            }
            Err(e) => return outcome(false, format!("{t}: {e}")),
        }
    }
    outcome(true, format!("{claims} claims confirmed"))
}

fn conservation(corpus: &[(Cotree, Cotree)]) -> Outcome {
    let mut rng = rng_from_seed(6);
    let extra: Vec<Cotree> = (0..500)
        .map(|_| {
            let n = rng.gen_range(1..=40);
            random_cotree(&mut rng, n)
        })
        .collect();
    let mut checked = 0;
    for t in corpus.iter().flat_map(|(g, h)| [g, h]).chain(&extra) {
        let s = match spectrum(t) {
            Ok(s) => s,
            Err(e) => return outcome(false, format!("{t}: {e}")),
        };
        let g = t.to_graph();
        let (n, twice_m, components) = (g.n(), 2 * g.edge_count() as u64, g.connected_components().len());
        if s.total() != n || s.weighted_sum() != twice_m || s.multiplicity(0) != components {
            return outcome(
                false,
                format!("{t}: {s} vs n={n} 2|E|={twice_m} components={components}"),
            );
        }
        checked += 1;
    }
    outcome(true, format!("{checked} cographs, 0 violations"))
}

fn selection_order_independence() -> Outcome {
    let mut rng = rng_from_seed(7);
    for i in 0..1000 {
        let n = rng.gen_range(1..=16);
        let t = random_cotree(&mut rng, n);
        let x = Rational::new(rng.gen_range(-2..=2 * n as i64 + 2), 2);
        let reference = diagonalize_by_selection(&t, &-&x, &mut DeepestLeftmost).map(|d| d.inertia());
        let random = diagonalize_by_selection(&t, &-&x, &mut RandomPair(rng_from_seed(i)))
            .map(|d| d.inertia());
        let fast = count_relative(&t, &x);
        if reference != random || reference != fast {
            return outcome(false, format!("{t} at {x}: {reference:?} / {random:?} / {fast:?}"));
        }
    }
    outcome(true, "1000 instances agree")
}

fn batch_matches_iteration() -> Outcome {
    let mut rng = rng_from_seed(8);
    let mut done = 0;
    while done < 1000 {
        let kind = if rng.gen_bool(0.5) { Kind::Join } else { Kind::Union };
        let y = Rational::new(rng.gen_range(-60..=60), rng.gen_range(1..=12));
        let m = rng.gen_range(2..=50);
        let batch = match kind {
            Kind::Join => batch_equal_join(&y, m),
            Kind::Union => batch_equal_union(&y, m),
        };
        // the excluded values take singular subcases and are rejected
        let Ok(batch) = batch else { continue };
        let mut survivor = y.clone();
        for j in 1..m {
            let step = eliminate_pair(kind, &survivor, &y);
            if step.both_final || step.dk != batch.emitted[j - 1] {
                return outcome(false, format!("{kind:?} y={y} m={m} iteration {j}: {step:?}"));
            }
            survivor = step.dl;
        }
        if survivor != batch.retained {
            return outcome(false, format!("{kind:?} y={y} m={m}: retained {survivor} vs {}", batch.retained));
        }
        done += 1;
    }
    outcome(true, "1000 (y, m) instances agree")
}

fn median_query_time(n: usize) -> Duration {
    let t = random_cotree(&mut rng_from_seed(9 + n as u64), n);
    let x = Rational::new(n as i64 / 3 + 1, 2);
    let _ = diagonalize(&t, &x);
    let mut times: Vec<Duration> = (0..7)
        .map(|_| {
            let start = Instant::now();
            count_relative(&t, &x).expect("nonempty");
            start.elapsed()
        })
        .collect();
    times.sort();
    times[times.len() / 2]
}

fn linear_time() -> Outcome {
    let small = median_query_time(10_000);
    let large = median_query_time(100_000);
    let ratio = large.as_secs_f64() / small.as_secs_f64();
    let detail = format!("10^4: {small:.2?}, 10^5: {large:.2?}, ratio {ratio:.1}");
    outcome(large < Duration::from_millis(200) && ratio <= 20.0, detail)
}

type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;

fn main() {
    let corpus = equivalent_corpus();
    let criteria: Vec<(&str, Check)> = vec![
        ("1 cospectral family closed form", Box::new(family_closed_form)),
        ("2 exact counts match dense oracle", Box::new(dense_oracle_agreement)),
        ("3 shared eigenvalue bound", Box::new(|| shared_eigenvalue_bound(&corpus))),
        ("4 no equivalent cospectral nonisomorphic pair", Box::new(no_cospectral_counterexample)),
        ("5 per-class eigenvalue claims", Box::new(|| class_eigenvalue_claims(&corpus))),
        ("6 integrality and conservation", Box::new(|| conservation(&corpus))),
        ("7 pair selection order independence", Box::new(selection_order_independence)),
        ("8 batch formulas match iteration", Box::new(batch_matches_iteration)),
        ("9 linear-time count query", Box::new(linear_time)),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let result = check();
        let status = if result.pass { "PASS" } else { "FAIL" };
        println!("criterion {name}: {status} ({})", result.detail);
        failed += usize::from(!result.pass);
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
