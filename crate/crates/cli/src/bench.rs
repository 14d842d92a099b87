//! Convolution benchmark: naive double loop, transform path, and the
//! materialized circulant multiply, with a correctness cross-check per size.

use std::time::Instant;

use serde_json::json;

use gring::{
    circulant_matrix, convolve_fast, make_ring, seeded_rng, CoefficientRing, Error,
    FiniteAbelianGroup, GroupRing, GroupRingElement, RingHandle, TransformRing,
};

use crate::output::{self, BenchRow};
use crate::{BenchArgs, Outcome};

const REPS: usize = 5;
/// Above this order the materialized circulant is skipped (the dense matrix
/// costs n^2 entries).
const CIRCULANT_LIMIT: usize = 2048;

pub(crate) fn run(args: &BenchArgs) -> Result<Outcome, Error> {
    if !args.group.eq_ignore_ascii_case("zn") {
        return Err(Error::InvalidGroupSpec(format!(
            "bench varies the cyclic order itself; --group must stay Zn, got {}",
            args.group
        )));
    }
    if args.sizes.is_empty() {
        return Err(Error::InvalidGroupSpec(
            "bench needs at least one size".into(),
        ));
    }
    let ring = make_ring(&args.ring, args.tol)?;
    match &ring {
        RingHandle::Real(r) => bench_with(args, &ring, r),
        RingHandle::Complex(r) => bench_with(args, &ring, r),
        other => Err(Error::UnsupportedRing(format!(
            "bench needs an approximate ring for the transform path; got {} (try --ring f64)",
            other.spec_name()
        ))),
    }
}

fn bench_with<R: TransformRing>(
    args: &BenchArgs,
    handle: &RingHandle,
    ring: &R,
) -> Result<Outcome, Error> {
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    for &n in &args.sizes {
        let group = FiniteAbelianGroup::new(&[n])?;
        let vring = GroupRing::new(group, ring.clone());
        let mut rng = seeded_rng(args.seed ^ n as u64);
        let a = vring.sample_element(&mut rng);
        let b = vring.sample_element(&mut rng);

        let (naive_ms, naive) = time_path(|| a.convolve_naive(&b).expect("same structure"));
        rows.push(BenchRow {
            size: n,
            path: "naive",
            median_ms: naive_ms,
            residual: 0.0,
        });

        let (fast_ms, fast) = time_path(|| convolve_fast(&a, &b).expect("same structure"));
        let fast_residual = fast.residual(&naive)?;
        check_paths(n, "fast", &fast, &naive)?;
        rows.push(BenchRow {
            size: n,
            path: "fast",
            median_ms: fast_ms,
            residual: fast_residual,
        });

        if n <= CIRCULANT_LIMIT {
            let (circ_ms, circ) =
                time_path(|| circulant_matrix(&a).matvec(&b).expect("same structure"));
            let circ_residual = circ.residual(&naive)?;
            check_paths(n, "circulant", &circ, &naive)?;
            rows.push(BenchRow {
                size: n,
                path: "circulant",
                median_ms: circ_ms,
                residual: circ_residual,
            });
        } else {
            notes.push(format!(
                "size {n}: materialized circulant skipped (limit {CIRCULANT_LIMIT})"
            ));
        }
    }

    let config = json!({
        "group": "Zn",
        "ring": handle.spec_name(),
        "seed": args.seed,
        "sizes": args.sizes,
        "repetitions": REPS,
        "rng": gring::RNG_SCHEME,
    });
    output::emit_bench(args.format, &config, &rows, &notes);
    Ok(Outcome { pass: true })
}

fn time_path<T>(mut f: impl FnMut() -> T) -> (f64, T) {
    let mut times = Vec::with_capacity(REPS);
    let mut result = None;
    for _ in 0..REPS {
        let start = Instant::now();
        let value = f();
        times.push(start.elapsed().as_secs_f64() * 1e3);
        result = Some(value);
    }
    times.sort_by(f64::total_cmp);
    (times[REPS / 2], result.expect("at least one repetition"))
}

fn check_paths<R: CoefficientRing>(
    n: usize,
    path: &str,
    got: &GroupRingElement<R>,
    reference: &GroupRingElement<R>,
) -> Result<(), Error> {
    if got.eq_elem(reference)? {
        Ok(())
    } else {
        Err(Error::Mismatch(format!(
            "size {n}: {path} path disagrees with naive beyond tolerance (residual {:.3e})",
            got.residual(reference)?
        )))
    }
}
