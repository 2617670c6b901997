//! delta-matching feasibility via bipartite matching.
//!
//! Multiplicities are expanded into unit nodes. Every unit on either side
//! gets a private dummy partner on the opposite side, usable only when the
//! unit is short (length <= 2 delta); dummy-dummy edges are free. A perfect
//! matching of the augmented graph exists exactly when a delta-matching in
//! the sense of the barcode definition does.

use super::Barcode;
use crate::error::Result;
use crate::geom::{delta_equivalent, length, GeomObject, Model};

/// Maximum bipartite matching by augmenting paths (Kuhn's algorithm);
/// sizes here are tiny so no Hopcroft-Karp phases are needed.
pub(crate) fn max_bipartite_matching(n_left: usize, n_right: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    let mut match_right: Vec<Option<usize>> = vec![None; n_right];
    let mut match_left: Vec<Option<usize>> = vec![None; n_left];
    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        seen: &mut [bool],
        match_left: &mut [Option<usize>],
        match_right: &mut [Option<usize>],
    ) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if match_right[v].is_none()
                || augment(match_right[v].unwrap(), adj, seen, match_left, match_right)
            {
                match_right[v] = Some(u);
                match_left[u] = Some(v);
                return true;
            }
        }
        false
    }
    for u in 0..n_left {
        let mut seen = vec![false; n_right];
        augment(u, adj, &mut seen, &mut match_left, &mut match_right);
    }
    match_left
}

/// Expanded units of a barcode: one object per multiplicity count.
pub(crate) fn units(b: &Barcode) -> Vec<GeomObject> {
    b.entries
        .iter()
        .flat_map(|(g, m)| std::iter::repeat_n(g.clone(), *m))
        .collect()
}

/// A witness matching: unit pairs matched across the barcodes; unmatched
/// units (sent to dummies) are short on the matching's threshold.
#[derive(Debug, Clone)]
pub struct MatchingWitness {
    pub pairs: Vec<(usize, usize)>,
    pub unmatched_left: Vec<usize>,
    pub unmatched_right: Vec<usize>,
}

/// Feasibility of a delta-matching, with a witness on success.
pub fn delta_matching_witness(
    b1: &Barcode,
    b2: &Barcode,
    delta: u32,
) -> Result<Option<MatchingWitness>> {
    crate::geom::check_same_model(&b1.quiver, &b2.quiver)?;
    let model = Model::new(&b1.quiver).ok();
    let left = units(b1);
    let right = units(b2);
    let threshold = 2 * delta as u64;
    let short = |g: &GeomObject| length(g).is_some_and(|l| l <= threshold);

    // Left side: real units then right-side dummies; right side: real units
    // then left-side dummies.
    let nl = left.len() + right.len();
    let nr = right.len() + left.len();
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); nl];
    for (i, a) in left.iter().enumerate() {
        for (j, b) in right.iter().enumerate() {
            let eq = match (&model, a) {
                (_, GeomObject::IntervalA { .. }) | (None, _) => {
                    classical_interval_equivalent(a, b, delta)
                }
                (Some(m), _) => delta_equivalent(m, a, b, delta)?,
            };
            if eq {
                adj[i].push(j);
            }
        }
        if short(a) {
            adj[i].push(right.len() + i); // own dummy on the right
        }
    }
    for (j, b) in right.iter().enumerate() {
        let dummy_left = left.len() + j;
        if short(b) {
            adj[dummy_left].push(j);
        }
        // dummy-dummy edges are always allowed
        for i in 0..left.len() {
            adj[dummy_left].push(right.len() + i);
        }
    }
    let matching = max_bipartite_matching(nl, nr, &adj);
    if matching.iter().any(|m| m.is_none()) {
        return Ok(None);
    }
    let mut pairs = Vec::new();
    let mut unmatched_left = Vec::new();
    let mut unmatched_right = vec![true; right.len()];
    for (i, m) in matching.iter().enumerate().take(left.len()) {
        let j = m.unwrap();
        if j < right.len() {
            pairs.push((i, j));
            unmatched_right[j] = false;
        } else {
            unmatched_left.push(i);
        }
    }
    Ok(Some(MatchingWitness {
        pairs,
        unmatched_left,
        unmatched_right: unmatched_right
            .iter()
            .enumerate()
            .filter(|(_, u)| **u)
            .map(|(j, _)| j)
            .collect(),
    }))
}

/// The classical containment condition for disc intervals.
fn classical_interval_equivalent(a: &GeomObject, b: &GeomObject, delta: u32) -> bool {
    match (a, b) {
        (GeomObject::IntervalA { a: a1, b: b1 }, GeomObject::IntervalA { a: a2, b: b2 }) => {
            let d = delta as i64;
            (*a1 as i64 - *a2 as i64).abs() <= d && (*b1 as i64 - *b2 as i64).abs() <= d
        }
        _ => false,
    }
}

/// Brute-force delta-matching feasibility by enumerating partial matchings,
/// for validating the dummy-augmentation reduction on small barcodes.
pub fn delta_matched_brute(b1: &Barcode, b2: &Barcode, delta: u32) -> Result<bool> {
    let model = Model::new(&b1.quiver).ok();
    let left = units(b1);
    let right = units(b2);
    let threshold = 2 * delta as u64;
    let long = |g: &GeomObject| length(g).is_none_or(|l| l > threshold);
    let equivalent = |a: &GeomObject, b: &GeomObject| -> Result<bool> {
        Ok(match (&model, a) {
            (_, GeomObject::IntervalA { .. }) | (None, _) => {
                classical_interval_equivalent(a, b, delta)
            }
            (Some(m), _) => delta_equivalent(m, a, b, delta)?,
        })
    };
    // Enumerate assignments of left units to (right unit | unmatched).
    fn go(
        i: usize,
        left: &[GeomObject],
        right: &[GeomObject],
        used: &mut Vec<bool>,
        long: &dyn Fn(&GeomObject) -> bool,
        equivalent: &dyn Fn(&GeomObject, &GeomObject) -> Result<bool>,
    ) -> Result<bool> {
        if i == left.len() {
            // all long right units must be used
            for (j, u) in used.iter().enumerate() {
                if !u && long(&right[j]) {
                    return Ok(false);
                }
            }
            return Ok(true);
        }
        if !long(&left[i]) && go(i + 1, left, right, used, long, equivalent)? {
            return Ok(true);
        }
        for j in 0..right.len() {
            if !used[j] && equivalent(&left[i], &right[j])? {
                used[j] = true;
                if go(i + 1, left, right, used, long, equivalent)? {
                    used[j] = false;
                    return Ok(true);
                }
                used[j] = false;
            }
        }
        Ok(false)
    }
    let mut used = vec![false; right.len()];
    go(0, &left, &right, &mut used, &long, &equivalent)
}
