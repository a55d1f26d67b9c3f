//! Independent oracles shared by the integration tests.
//!
//! Nothing here calls the library's group law or length code: affine Weyl
//! groups are rebuilt from the Cartan matrix as pairs `(y, M)` of plain
//! integer vectors and matrices.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

pub type Elem = (Vec<i64>, Vec<i64>);

pub struct OracleGroup {
    pub rank: usize,
    pub gens: Vec<Elem>,
}

fn mat_mul(r: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; r * r];
    for i in 0..r {
        for k in 0..r {
            for j in 0..r {
                out[i * r + j] += a[i * r + k] * b[k * r + j];
            }
        }
    }
    out
}

fn mat_vec(r: usize, a: &[i64], y: &[i64]) -> Vec<i64> {
    (0..r).map(|i| (0..r).map(|j| a[i * r + j] * y[j]).sum()).collect()
}

pub fn compose(r: usize, a: &Elem, b: &Elem) -> Elem {
    let sy = mat_vec(r, &a.1, &b.0);
    (a.0.iter().zip(&sy).map(|(p, q)| p + q).collect(), mat_mul(r, &a.1, &b.1))
}

/// Positive roots (simple-root coefficients) paired with their coroots, by
/// closing `(alpha_i, alpha_i^vee)` under simple reflections.
pub fn roots_with_coroots(cartan: &[Vec<i64>]) -> Vec<(Vec<i64>, Vec<i64>)> {
    let r = cartan.len();
    let unit = |i: usize| (0..r).map(|k| i64::from(k == i)).collect::<Vec<i64>>();
    let mut out: Vec<(Vec<i64>, Vec<i64>)> = (0..r).map(|i| (unit(i), unit(i))).collect();
    let mut k = 0;
    while k < out.len() {
        let (b, bc) = out[k].clone();
        for j in 0..r {
            // <beta, alpha_j^vee> and <alpha_j, beta^vee>
            let p: i64 = (0..r).map(|m| b[m] * cartan[m][j]).sum();
            let q: i64 = (0..r).map(|m| cartan[j][m] * bc[m]).sum();
            let mut nb = b.clone();
            nb[j] -= p;
            let mut nbc = bc.clone();
            nbc[j] -= q;
            if nb.iter().all(|&c| c >= 0) && !out.iter().any(|(x, _)| x == &nb) {
                out.push((nb, nbc));
            }
        }
        k += 1;
    }
    out
}

/// Generators of `(nY) x| W`: the affine reflection `(-n theta^vee, s_theta)` then `s_1..s_r`.
pub fn oracle_group(cartan: &[Vec<i64>], n: i64) -> OracleGroup {
    let r = cartan.len();
    let roots = roots_with_coroots(cartan);
    let (theta, theta_c) = roots
        .iter()
        .max_by_key(|(c, _)| c.iter().sum::<i64>())
        .cloned()
        .unwrap();
    let theta_f: Vec<i64> = (0..r).map(|j| (0..r).map(|m| theta[m] * cartan[m][j]).sum()).collect();
    let mut s_theta = vec![0; r * r];
    for i in 0..r {
        for j in 0..r {
            s_theta[i * r + j] = i64::from(i == j) - theta_c[i] * theta_f[j];
        }
    }
    let mut gens = vec![(theta_c.iter().map(|x| -n * x).collect(), s_theta)];
    for i in 0..r {
        let mut m = vec![0; r * r];
        for a in 0..r {
            for b in 0..r {
                m[a * r + b] = i64::from(a == b) - if a == i { cartan[i][b] } else { 0 };
            }
        }
        gens.push((vec![0; r], m));
    }
    OracleGroup { rank: r, gens }
}

/// Word length of every element up to `max` by breadth-first search from the identity.
pub fn bfs_depths(g: &OracleGroup, max: u64) -> HashMap<Elem, u64> {
    let r = g.rank;
    let id: Elem = (vec![0; r], (0..r * r).map(|k| i64::from(k / r == k % r)).collect());
    let mut depth = HashMap::from([(id.clone(), 0u64)]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        let d = depth[&w];
        if d == max {
            continue;
        }
        for s in &g.gens {
            let x = compose(r, s, &w);
            if !depth.contains_key(&x) {
                depth.insert(x.clone(), d + 1);
                queue.push_back(x);
            }
        }
    }
    depth
}

pub fn counts_by_depth(depths: &HashMap<Elem, u64>, max: u64) -> Vec<u64> {
    let mut c = vec![0; max as usize + 1];
    for &d in depths.values() {
        if d <= max {
            c[d as usize] += 1;
        }
    }
    c
}

/// Coefficients of `prod_i (1 + t + ... + t^{m_i}) / (1 - t^{m_i})` up to `t^max`.
pub fn bott_series(exponents: &[u64], max: usize) -> Vec<u64> {
    let mut series = vec![0u64; max + 1];
    series[0] = 1;
    for &m in exponents {
        let m = m as usize;
        // multiply by 1 + ... + t^m
        let mut next = vec![0u64; max + 1];
        for (i, &c) in series.iter().enumerate() {
            for k in 0..=m {
                if i + k <= max {
                    next[i + k] += c;
                }
            }
        }
        // divide by 1 - t^m
        for i in m..=max {
            next[i] += next[i - m];
        }
        series = next;
    }
    series
}

/// First `count` values of `n >= 1` passing the tabulated oasitic gcd conditions.
pub fn first_table_oasitic(letter: char, rank: usize, count: usize) -> Vec<u64> {
    (1u64..)
        .filter(|&n| table_condition(letter, rank, n))
        .take(count)
        .collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The tabulated gcd conditions, coded independently of the library.
pub fn table_condition(letter: char, rank: usize, n: u64) -> bool {
    match letter {
        'A' => gcd(n, rank as u64 + 1) == 1,
        'B' | 'C' | 'D' => n % 2 == 1,
        'E' if rank == 8 => !n.is_multiple_of(2) && !n.is_multiple_of(3) && !n.is_multiple_of(5),
        'E' | 'F' | 'G' => !n.is_multiple_of(2) && !n.is_multiple_of(3),
        _ => unreachable!("not a Cartan type letter"),
    }
}
