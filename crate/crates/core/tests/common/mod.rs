//! Shared fixtures: exhaustive small codes, a brute-force coloring oracle
//! and a set of small biquandles.
#![allow(dead_code)]

use bqlong::algebra::{alexander_biquandle, rack_switch, wada_biquandle, FiniteGroup};
use bqlong::{FiniteBiquandle, LongGaussCode, Pass, Role, Sign};

/// Every code with exactly `k` crossings, up to relabeling: ids appear in
/// order of first occurrence.
pub fn all_codes(k: usize) -> Vec<LongGaussCode> {
    let mut sequences = Vec::new();
    let mut seq = Vec::with_capacity(2 * k);
    let mut used = vec![0u8; k];
    fill(k, &mut seq, &mut used, &mut sequences);

    let mut out = Vec::new();
    for seq in sequences {
        for under_first in 0..1u32 << k {
            for negative in 0..1u32 << k {
                let mut seen = vec![false; k];
                let passes = seq
                    .iter()
                    .map(|&c| {
                        let first = !std::mem::replace(&mut seen[c], true);
                        let under = (under_first >> c & 1 == 1) == first;
                        let role = if under { Role::Under } else { Role::Over };
                        let sign = if negative >> c & 1 == 1 {
                            Sign::Negative
                        } else {
                            Sign::Positive
                        };
                        Pass::new(c as u32 + 1, role, sign)
                    })
                    .collect();
                out.push(LongGaussCode::new(passes).expect("generated codes are valid"));
            }
        }
    }
    out
}

fn fill(k: usize, seq: &mut Vec<usize>, used: &mut [u8], out: &mut Vec<Vec<usize>>) {
    if seq.len() == 2 * k {
        out.push(seq.clone());
        return;
    }
    let opened = used.iter().filter(|&&u| u > 0).count();
    for c in 0..k {
        // A new id may only be the next unopened one.
        let allowed = (used[c] == 1) || (used[c] == 0 && c == opened);
        if allowed {
            used[c] += 1;
            seq.push(c);
            fill(k, seq, used, out);
            seq.pop();
            used[c] -= 1;
        }
    }
}

/// Positions of (under, over, sign) for each crossing.
fn crossings(code: &LongGaussCode) -> Vec<(usize, usize, Sign)> {
    let max = code.max_crossing_id() as usize;
    let mut under = vec![usize::MAX; max + 1];
    let mut over = vec![usize::MAX; max + 1];
    let mut sign = vec![Sign::Positive; max + 1];
    for (k, p) in code.passes().iter().enumerate() {
        let c = p.crossing as usize;
        match p.role {
            Role::Under => under[c] = k,
            Role::Over => over[c] = k,
        }
        sign[c] = p.sign;
    }
    (1..=max)
        .filter(|&c| under[c] != usize::MAX)
        .map(|c| (under[c], over[c], sign[c]))
        .collect()
}

/// Checks a coloring with the up/down tables only. At a positive crossing
/// `S(under_in, over_in) = (over_out, under_out)`; at a negative one
/// `S(under_out, over_out) = (over_in, under_in)`.
fn satisfies(b: &FiniteBiquandle, xs: &[(usize, usize, Sign)], colors: &[usize]) -> bool {
    xs.iter().all(|&(u, o, sign)| {
        let (ui, uo, oi, oo) = (colors[u], colors[u + 1], colors[o], colors[o + 1]);
        match sign {
            Sign::Positive => b.down(oi, ui) == oo && b.up(ui, oi) == uo,
            Sign::Negative => b.down(oo, uo) == oi && b.up(uo, oo) == ui,
        }
    })
}

/// All colorings by exhaustive search over `n^segments`, in lexicographic
/// order.
pub fn brute_force_colorings(code: &LongGaussCode, b: &FiniteBiquandle) -> Vec<Vec<usize>> {
    let n = b.size();
    let segments = code.segment_count();
    let xs = crossings(code);
    let mut colors = vec![0; segments];
    let mut out = Vec::new();
    loop {
        if satisfies(b, &xs, &colors) {
            out.push(colors.clone());
        }
        // Odometer with the last segment fastest.
        let mut i = segments;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            colors[i] += 1;
            if colors[i] < n {
                break;
            }
            colors[i] = 0;
        }
    }
}

pub fn dihedral_quandle(n: usize) -> Vec<Vec<usize>> {
    (0..n)
        .map(|a| (0..n).map(|b| (2 * b + n - a) % n).collect())
        .collect()
}

/// Biquandles and one birack of order at most 5.
pub fn small_structures() -> Vec<(String, FiniteBiquandle)> {
    let shift: Vec<Vec<usize>> = (0..3).map(|a| vec![(a + 1) % 3; 3]).collect();
    vec![
        ("swap 2".into(), FiniteBiquandle::swap(2)),
        (
            "dihedral 3".into(),
            rack_switch(&dihedral_quandle(3)).unwrap(),
        ),
        ("shift rack 3".into(), rack_switch(&shift).unwrap()),
        (
            "alexander 4,1,3".into(),
            alexander_biquandle(4, 1, 3).unwrap(),
        ),
        (
            "alexander 5,2,3".into(),
            alexander_biquandle(5, 2, 3).unwrap(),
        ),
        (
            "wada Z/5".into(),
            wada_biquandle(&FiniteGroup::cyclic(5).unwrap()).unwrap(),
        ),
    ]
}

pub fn wada_s3() -> FiniteBiquandle {
    wada_biquandle(&FiniteGroup::symmetric(3).unwrap()).unwrap()
}
