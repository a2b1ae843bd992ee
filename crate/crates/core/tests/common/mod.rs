//! Brute-force reference computations on raw arrays, plus the worked-example
//! data. Nothing here goes through the library's types.
#![allow(dead_code)]

/// One single-valued cell: truth, indeterminacy, falsity sequences.
pub type Sv = [Vec<f64>; 3];
/// One interval cell: `[lo, hi]` pairs per slot.
pub type Iv = [Vec<[f64; 2]>; 3];

pub fn sv(t: [f64; 3], i: [f64; 3], f: [f64; 3]) -> Sv {
    [t.to_vec(), i.to_vec(), f.to_vec()]
}

pub fn iv(t: [[f64; 2]; 3], i: [[f64; 2]; 3], f: [[f64; 2]; 3]) -> Iv {
    [t.to_vec(), i.to_vec(), f.to_vec()]
}

pub fn flat_sv(c: &Sv) -> Vec<f64> {
    c.iter().flatten().copied().collect()
}

/// Interval endpoints selected by `ends` (0 = lower, 1 = upper).
pub fn flat_iv(c: &Iv, ends: &[usize]) -> Vec<f64> {
    let mut out = Vec::new();
    for comp in c {
        for pair in comp {
            for &e in ends {
                out.push(pair[e]);
            }
        }
    }
    out
}

pub fn project(c: &Iv, end: usize) -> Sv {
    [0, 1, 2].map(|k| c[k].iter().map(|p| p[end]).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum M {
    J,
    D,
    C,
}

pub const MEASURES: [M; 3] = [M::J, M::D, M::C];

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    let mut s = 0.0;
    for k in 0..a.len() {
        s += a[k] * b[k];
    }
    s
}

pub fn term(m: M, a: &[f64], b: &[f64]) -> f64 {
    let ab = dot(a, b);
    let aa = dot(a, a);
    let bb = dot(b, b);
    if aa == 0.0 || bb == 0.0 {
        return 0.0;
    }
    match m {
        M::J => ab / (aa + bb - ab),
        M::D => 2.0 * ab / (aa + bb),
        M::C => ab / (aa.sqrt() * bb.sqrt()),
    }
}

/// Plain mean when `w` is `None`, otherwise the weighted sum.
pub fn sim(m: M, xs: &[Vec<f64>], ys: &[Vec<f64>], w: Option<&[f64]>) -> f64 {
    let n = xs.len();
    let mut s = 0.0;
    for j in 0..n {
        let wj = w.map_or(1.0 / n as f64, |w| w[j]);
        s += wj * term(m, &xs[j], &ys[j]);
    }
    s
}

pub fn sim_sv(m: M, a: &[Sv], b: &[Sv], w: Option<&[f64]>) -> f64 {
    let xs: Vec<_> = a.iter().map(flat_sv).collect();
    let ys: Vec<_> = b.iter().map(flat_sv).collect();
    sim(m, &xs, &ys, w)
}

pub fn sim_iv(m: M, a: &[Iv], b: &[Iv], w: Option<&[f64]>, ends: &[usize]) -> f64 {
    let xs: Vec<_> = a.iter().map(|c| flat_iv(c, ends)).collect();
    let ys: Vec<_> = b.iter().map(|c| flat_iv(c, ends)).collect();
    sim(m, &xs, &ys, w)
}

/// Positive ideal: benefit columns take max truth, min indet, min falsity;
/// cost columns the reverse.
pub fn ideal_sv(rows: &[Vec<Sv>], benefit: &[bool]) -> Vec<Sv> {
    (0..benefit.len())
        .map(|j| {
            [0, 1, 2].map(|k| {
                let take_max = benefit[j] == (k == 0);
                (0..rows[0][j][k].len())
                    .map(|i| {
                        let vals = rows.iter().map(|r| r[j][k][i]);
                        if take_max {
                            vals.fold(f64::MIN, f64::max)
                        } else {
                            vals.fold(f64::MAX, f64::min)
                        }
                    })
                    .collect()
            })
        })
        .collect()
}

pub fn ideal_iv(rows: &[Vec<Iv>], benefit: &[bool]) -> Vec<Iv> {
    (0..benefit.len())
        .map(|j| {
            [0, 1, 2].map(|k| {
                let take_max = benefit[j] == (k == 0);
                (0..rows[0][j][k].len())
                    .map(|i| {
                        [0, 1].map(|e| {
                            let vals = rows.iter().map(|r| r[j][k][i][e]);
                            if take_max {
                                vals.fold(f64::MIN, f64::max)
                            } else {
                                vals.fold(f64::MAX, f64::min)
                            }
                        })
                    })
                    .collect()
            })
        })
        .collect()
}

pub const BENEFIT: [bool; 3] = [true, true, false];
pub const WEIGHTS: [f64; 3] = [0.35, 0.25, 0.40];
pub const ALTERNATIVES: [&str; 4] = ["A1", "A2", "A3", "A4"];

/// Single-valued decision matrix, with the A4/C1 falsity slot 3 read as 1.0.
pub fn svnr_matrix() -> Vec<Vec<Sv>> {
    vec![
        vec![
            sv([0.1, 0.2, 0.4], [0.3, 0.3, 0.5], [0.2, 0.4, 0.8]),
            sv([0.1, 0.4, 0.6], [0.2, 0.3, 0.7], [0.1, 0.3, 0.3]),
            sv([0.0, 0.3, 0.3], [0.1, 0.5, 0.6], [0.5, 0.6, 0.9]),
        ],
        vec![
            sv([0.5, 0.6, 0.7], [0.2, 0.4, 0.4], [0.1, 0.6, 0.6]),
            sv([0.4, 0.6, 0.7], [0.2, 0.5, 0.8], [0.1, 0.5, 0.5]),
            sv([0.3, 0.3, 0.4], [0.2, 0.6, 0.7], [0.3, 0.4, 0.7]),
        ],
        vec![
            sv([0.3, 0.3, 0.5], [0.0, 0.1, 0.3], [0.1, 0.4, 0.7]),
            sv([0.4, 0.5, 0.6], [0.2, 0.3, 0.6], [0.1, 0.3, 0.4]),
            sv([0.1, 0.3, 0.4], [0.1, 0.4, 0.6], [0.3, 0.3, 0.5]),
        ],
        vec![
            sv([0.2, 0.4, 0.9], [0.1, 0.5, 0.6], [0.3, 0.5, 1.0]),
            sv([0.0, 0.2, 0.4], [0.1, 0.5, 0.7], [0.6, 0.7, 0.9]),
            sv([0.8, 0.8, 0.9], [0.3, 0.4, 0.4], [0.6, 0.6, 0.8]),
        ],
    ]
}

/// Interval decision matrix with the two dropped decimal points restored.
pub fn inr_matrix() -> Vec<Vec<Iv>> {
    vec![
        vec![
            iv([[0.2, 0.3], [0.2, 0.5], [0.4, 0.7]], [[0.3, 0.4], [0.3, 0.6], [0.5, 0.9]], [[0.2, 0.5], [0.4, 0.7], [0.8, 0.8]]),
            iv([[0.1, 0.5], [0.4, 0.5], [0.6, 1.0]], [[0.2, 0.4], [0.3, 0.7], [0.7, 0.8]], [[0.1, 0.2], [0.3, 0.8], [0.3, 0.8]]),
            iv([[0.0, 0.3], [0.3, 0.5], [0.3, 0.9]], [[0.1, 0.2], [0.5, 0.6], [0.6, 0.6]], [[0.5, 0.5], [0.6, 0.7], [0.9, 0.9]]),
        ],
        vec![
            iv([[0.1, 0.2], [0.2, 0.8], [0.4, 0.8]], [[0.4, 0.5], [0.3, 0.6], [0.5, 0.7]], [[0.1, 0.3], [0.4, 0.5], [0.8, 0.8]]),
            iv([[0.1, 0.4], [0.4, 0.5], [0.6, 0.6]], [[0.2, 0.3], [0.3, 0.4], [0.7, 0.8]], [[0.1, 0.5], [0.3, 0.6], [0.3, 0.7]]),
            iv([[0.0, 0.3], [0.3, 0.4], [0.3, 0.5]], [[0.1, 0.6], [0.5, 0.6], [0.6, 0.7]], [[0.5, 0.8], [0.6, 0.8], [0.9, 1.0]]),
        ],
        vec![
            iv([[0.1, 0.4], [0.2, 0.5], [0.4, 0.6]], [[0.3, 0.4], [0.3, 0.4], [0.6, 0.7]], [[0.2, 0.3], [0.4, 0.5], [0.8, 1.0]]),
            iv([[0.2, 0.3], [0.4, 0.5], [0.6, 0.7]], [[0.2, 0.5], [0.3, 0.6], [0.7, 0.8]], [[0.1, 0.2], [0.3, 0.4], [0.4, 0.5]]),
            iv([[0.0, 0.1], [0.3, 0.3], [0.3, 0.4]], [[0.1, 0.2], [0.5, 0.6], [0.6, 0.7]], [[0.5, 0.6], [0.6, 0.7], [0.9, 0.9]]),
        ],
        vec![
            iv([[0.1, 0.4], [0.2, 0.4], [0.4, 0.4]], [[0.3, 0.5], [0.3, 0.6], [0.5, 0.6]], [[0.2, 0.5], [0.4, 0.6], [0.8, 0.9]]),
            iv([[0.1, 0.5], [0.4, 0.5], [0.4, 0.6]], [[0.2, 0.4], [0.3, 0.5], [0.7, 0.9]], [[0.2, 0.2], [0.3, 0.4], [0.3, 0.4]]),
            iv([[0.0, 0.2], [0.3, 0.4], [0.3, 0.5]], [[0.1, 0.4], [0.5, 0.6], [0.6, 0.8]], [[0.5, 0.6], [0.6, 0.7], [0.9, 1.0]]),
        ],
    ]
}

/// Example sets: Ã, B̃, C̃ are the first three rows of the single-valued matrix.
pub fn example_sets() -> [Vec<Sv>; 3] {
    let m = svnr_matrix();
    [m[0].clone(), m[1].clone(), m[2].clone()]
}

pub const EXAMPLE_WEIGHTS: [f64; 3] = [0.7, 0.2, 0.1];

pub fn data_path(name: &str) -> String {
    format!("{}/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

pub fn read_data(name: &str) -> String {
    std::fs::read_to_string(data_path(name)).expect("fixture exists")
}

/// Values printed in the worked examples, by data set.
pub mod printed {
    pub const EXAMPLE_SETS: [f64; 3] = [0.834, 0.908, 0.928];
    pub const EXAMPLE_SETS_WEIGHTED: [f64; 3] = [0.786, 0.879, 0.429];

    /// Rows J, D, C, weighted J, weighted D, weighted C; columns A1..A4.
    pub const SVNR_SCORES: [[f64; 4]; 6] = [
        [0.83489, 0.90254, 0.86578, 0.65791],
        [0.90283, 0.94872, 0.92618, 0.78961],
        [0.90937, 0.95841, 0.96019, 0.80492],
        [0.83534, 0.75035, 0.85113, 0.66726],
        [0.90259, 0.94726, 0.91794, 0.79671],
        [0.90911, 0.95613, 0.95695, 0.81158],
    ];

    pub const INR_SCORES: [[f64; 4]; 6] = [
        [0.83489, 0.95699, 0.95304, 0.94042],
        [0.90283, 0.97768, 0.97595, 0.96903],
        [0.90937, 0.97790, 0.97758, 0.97007],
        [0.83534, 0.96355, 0.95420, 0.94270],
        [0.90259, 0.98114, 0.97656, 0.97021],
        [0.90911, 0.98138, 0.97849, 0.97112],
    ];

    /// (lower column, upper column, degree) per variant.
    pub const CONSISTENCY: [([f64; 4], [f64; 4], f64); 6] = [
        ([0.99220, 0.99313, 0.99118, 0.98014], [0.87306, 0.93997, 0.93188, 0.92097], 0.07269),
        ([0.99608, 0.99655, 0.99556, 0.98987], [0.93187, 0.96832, 0.96472, 0.95835], 0.03870),
        ([0.99649, 0.99660, 0.99587, 0.99089], [0.94012, 0.96869, 0.96947, 0.95975], 0.03545),
        ([0.99207, 0.99353, 0.99145, 0.98376], [0.86958, 0.94931, 0.93316, 0.92248], 0.07157),
        ([0.99602, 0.99674, 0.99569, 0.99173], [0.92984, 0.97337, 0.96541, 0.95912], 0.03811),
        ([0.99649, 0.99679, 0.99599, 0.99249], [0.93678, 0.97377, 0.97097, 0.96049], 0.03494),
    ];
}

/// Variant order used by the table constants.
pub const VARIANTS: [(M, bool); 6] = [
    (M::J, false),
    (M::D, false),
    (M::C, false),
    (M::J, true),
    (M::D, true),
    (M::C, true),
];
