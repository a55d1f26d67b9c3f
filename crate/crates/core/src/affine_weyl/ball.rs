use std::collections::HashMap;

use super::{AffineElement, AffineWeylGroup};

/// Which length bounds the ball.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LengthKind {
    /// Ambient length `l_G` of `Y x| W`.
    G,
    /// Coxeter length `l_{G_{Q,n}}` of `W~_ex`.
    GQn,
}

/// One element of an enumerated ball.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallElement {
    pub element: AffineElement,
    /// Breadth-first distance from `Omega` under left multiplication by generators.
    pub depth: u64,
    pub length_g: u64,
    pub length_gqn: u64,
    /// `element = generators[gen] * list[parent]`, when the parent is in the list.
    pub parent: Option<(usize, usize)>,
}

/// Every element whose selected length is at most `max_len`, each exactly once.
///
/// The search is a breadth-first walk from the length-zero elements by left
/// multiplication with the Coxeter generators. Since `l_G >= l_{G_{Q,n}}`,
/// the `l_G` ball is the `l_{G_{Q,n}}` ball of the same radius filtered by
/// `l_G`; parents that fall outside the filtered list are dropped.
pub fn enumerate_ball(group: &AffineWeylGroup, max_len: u64, kind: LengthKind) -> Vec<BallElement> {
    let mut index: HashMap<AffineElement, usize> = HashMap::new();
    let mut out: Vec<BallElement> = Vec::new();
    for o in group.omega() {
        index.insert(o.clone(), out.len());
        out.push(BallElement {
            element: o.clone(),
            depth: 0,
            length_g: group.length_g(o),
            length_gqn: group.length(o),
            parent: None,
        });
    }
    let mut start = 0;
    for depth in 1..=max_len {
        let end = out.len();
        for p in start..end {
            for g in 0..group.num_generators() {
                let w = group.left_mul_generator(g, &out[p].element);
                if index.contains_key(&w) {
                    continue;
                }
                index.insert(w.clone(), out.len());
                let length_g = group.length_g(&w);
                let length_gqn = group.length(&w);
                out.push(BallElement {
                    element: w,
                    depth,
                    length_g,
                    length_gqn,
                    parent: Some((p, g)),
                });
            }
        }
        start = end;
    }

    if kind == LengthKind::GQn {
        return out;
    }
    let mut remap = vec![None; out.len()];
    let mut kept = Vec::new();
    for (i, e) in out.into_iter().enumerate() {
        if e.length_g <= max_len {
            remap[i] = Some(kept.len());
            kept.push(e);
        }
    }
    for e in &mut kept {
        e.parent = e.parent.and_then(|(p, g)| remap[p].map(|q| (q, g)));
    }
    kept
}

/// Number of elements of each length `0..=max_len` in a ball.
pub fn graded_counts(ball: &[BallElement], kind: LengthKind, max_len: u64) -> Vec<u64> {
    let mut counts = vec![0u64; max_len as usize + 1];
    for e in ball {
        let l = match kind {
            LengthKind::G => e.length_g,
            LengthKind::GQn => e.length_gqn,
        };
        if l <= max_len {
            counts[l as usize] += 1;
        }
    }
    counts
}
