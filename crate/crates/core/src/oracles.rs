//! Brute-force enumerations of permutations, set partitions and
//! surjections, used as independent oracles for the triangles that count
//! them.

use crate::algebra::rat;
use crate::families::{EulerianParams, FamilyKind, NamedFamily, StirlingParams};
use crate::gkp::{triangle_from_recurrence, GkpParams, Triangle};
use crate::report::Report;

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut a: Vec<usize> = (0..n).collect();
    let mut out = vec![a.clone()];
    let mut c = vec![0; n];
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

fn histogram(n: usize, values: impl Iterator<Item = usize>) -> Vec<u64> {
    let mut h = vec![0; n + 1];
    for v in values {
        h[v] += 1;
    }
    h
}

pub fn descents(p: &[usize]) -> usize {
    p.windows(2).filter(|w| w[0] > w[1]).count()
}

/// Peaks `p[i-1] < p[i] > p[i+1]` with a virtual `p[-1] = -∞`, so a
/// descent at the first position counts.
pub fn left_peaks(p: &[usize]) -> usize {
    (0..p.len().saturating_sub(1))
        .filter(|&i| (i == 0 || p[i - 1] < p[i]) && p[i] > p[i + 1])
        .count()
}

/// Permutations of `n` by number of descents.
pub fn descent_distribution(n: usize) -> Vec<u64> {
    histogram(n, permutations(n).iter().map(|p| descents(p)))
}

/// Permutations of `n` by number of left peaks.
pub fn left_peak_distribution(n: usize) -> Vec<u64> {
    histogram(n, permutations(n).iter().map(|p| left_peaks(p)))
}

/// Set partitions of `n` elements by number of blocks, enumerated as
/// restricted growth strings.
pub fn set_partition_distribution(n: usize) -> Vec<u64> {
    fn go(i: usize, n: usize, blocks: usize, h: &mut [u64]) {
        if i == n {
            h[blocks] += 1;
            return;
        }
        for b in 0..=blocks {
            go(i + 1, n, blocks.max(b + 1), h);
        }
    }
    let mut h = vec![0; n + 1];
    go(0, n, 0, &mut h);
    h
}

/// Surjections from an `n`-set onto a `k`-set, for each `k`, by running
/// through all `k^n` maps.
pub fn surjection_distribution(n: usize) -> Vec<u64> {
    (0..=n)
        .map(|k| {
            if k == 0 {
                return u64::from(n == 0);
            }
            let total = (k as u64).pow(n as u32);
            (0..total)
                .filter(|&code| {
                    let mut hit = vec![false; k];
                    let mut c = code;
                    for _ in 0..n {
                        hit[(c % k as u64) as usize] = true;
                        c /= k as u64;
                    }
                    hit.iter().all(|&x| x)
                })
                .count() as u64
        })
        .collect()
}

fn compare(name: &str, tri: &Triangle, n_max: usize, count: impl Fn(usize) -> Vec<u64>) -> Report {
    let mut rep = Report::new(name);
    for n in 0..=n_max {
        let want: Vec<_> = count(n).into_iter().map(|c| rat(c as i64)).collect();
        let got = tri.row(n);
        rep.check(got == want.as_slice(), || format!("n = {n}: triangle {got:?}, enumeration {want:?}"));
    }
    rep
}

/// The four enumerations against their triangles: descents `n ≤ 6`, set
/// partitions `n ≤ 7`, surjections `n ≤ 6`, left peaks `n ≤ 6`.
pub fn combinatorial_oracles() -> Vec<Report> {
    let eulerian = EulerianParams::new(rat(0), rat(1), rat(1), rat(0)).triangle(6);
    let stirling2 = StirlingParams::new(rat(0), rat(1), rat(0)).triangle(7);
    let surj = triangle_from_recurrence(&GkpParams::from_ints([0, 1, 0, 0, 1, 1]), 6);
    let peaks = crate::families::family_triangle(
        &NamedFamily::new(FamilyKind::SecTanRS, rat(2), rat(1), rat(0)),
        6,
    );
    vec![
        compare("descents of permutations", &eulerian, 6, descent_distribution),
        compare("blocks of set partitions", &stirling2, 7, set_partition_distribution),
        compare("surjections onto k points", &surj, 6, surjection_distribution),
        compare("left peaks of permutations", &peaks, 6, left_peak_distribution),
    ]
}
