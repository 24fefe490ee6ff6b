//! Right coset representatives of `𝔅_f × 𝔖_{r−2f}` in `𝔖_r`.
//!
//! `𝔅_f` is the hyperoctahedral subgroup of `𝔖_{2f}` that permutes the pairs
//! `{1,2}, {3,4}, …, {2f−1,2f}` and swaps within them; `𝔖_{r−2f}` acts on
//! `{2f+1, …, r}`. A coset `H·d` is determined by where `d` sends the pairs
//! and the tail, so the distinguished representative sends each pair in
//! increasing order, the pairs in increasing order of their minima, and the
//! tail increasingly.

use std::collections::BTreeSet;

use super::perm::Permutation;

/// `𝒟^f ⊂ 𝔖_{2f}`: perfect matchings of `{1..2f}` in canonical form,
/// sorted by one-line images.
pub fn matchings(f: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(2 * f);
    let mut used = vec![false; 2 * f + 1];
    fn rec(f: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if cur.len() == 2 * f {
            out.push(Permutation::from_images(cur.clone()));
            return;
        }
        let a = (1..=2 * f).find(|&i| !used[i]).expect("free element");
        used[a] = true;
        for b in a + 1..=2 * f {
            if !used[b] {
                used[b] = true;
                cur.push(a);
                cur.push(b);
                rec(f, cur, used, out);
                cur.pop();
                cur.pop();
                used[b] = false;
            }
        }
        used[a] = false;
    }
    rec(f, &mut cur, &mut used, &mut out);
    out
}

/// `𝒟^f` embedded in `𝔖_r`.
pub fn coset_reps_upper(r: usize, f: usize) -> Vec<Permutation> {
    matchings(f).iter().map(|d| d.shifted(0, r)).collect()
}

/// `P_f`: increasing sequences `1 ≤ i_1 < ⋯ < i_{2f} ≤ r`, lexicographic.
pub fn subsets(r: usize, f: usize) -> Vec<Vec<usize>> {
    let k = 2 * f;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, r: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=r {
            if r - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, r, k, cur, out);
            cur.pop();
        }
    }
    rec(1, r, k, &mut cur, &mut out);
    out
}

/// `d_J = s_{2f,i_{2f}} s_{2f−1,i_{2f−1}} ⋯ s_{1,i_1}`.
pub fn d_j(r: usize, j: &[usize]) -> Permutation {
    let mut d = Permutation::identity(r);
    for k in (1..=j.len()).rev() {
        d = d.mul(&Permutation::s_chain(r, k, j[k - 1]));
    }
    d
}

/// `d_0 = s_{2f−2,2f} s_{2f−4,2f} ⋯ s_{2,2f}`, the longest element of `𝒟^f`.
pub fn d_0(r: usize, f: usize) -> Permutation {
    let mut d = Permutation::identity(r);
    let mut k = 2 * f;
    while k >= 4 {
        k -= 2;
        d = d.mul(&Permutation::s_chain(r, k, 2 * f));
    }
    d
}

/// `J_0 = (r−2f+1, …, r)`.
pub fn j_0(r: usize, f: usize) -> Vec<usize> {
    (r - 2 * f + 1..=r).collect()
}

/// `𝒟_f` as the union of `𝒟^f · d_J` over `J ∈ P_f`, ordered by `J` and
/// then by the `𝒟^f` factor.
pub fn coset_reps_df(r: usize, f: usize) -> Vec<Permutation> {
    assert!(2 * f <= r);
    let upper = coset_reps_upper(r, f);
    subsets(r, f).iter().flat_map(|j| {
        let dj = d_j(r, j);
        upper.iter().map(move |d| d.mul(&dj)).collect::<Vec<_>>()
    }).collect()
}

/// Whether `d` is the distinguished representative of its coset.
pub fn is_distinguished(d: &Permutation, f: usize) -> bool {
    let r = d.degree();
    let pairs_ok = (1..=f).all(|i| d.apply(2 * i - 1) < d.apply(2 * i));
    let minima_ok = (1..f).all(|i| d.apply(2 * i - 1) < d.apply(2 * i + 1));
    let tail_ok = (2 * f + 1..r).all(|k| d.apply(k) < d.apply(k + 1));
    pairs_ok && minima_ok && tail_ok
}

/// Elements of `𝔅_f × 𝔖_{r−2f}` inside `𝔖_r`, by closure under generators.
pub fn stabilizer_subgroup(r: usize, f: usize) -> Vec<Permutation> {
    let mut gens = Vec::new();
    if f >= 1 {
        gens.push(Permutation::simple(r, 1));
    }
    for i in 2..=f {
        // swaps the pairs {2i−3, 2i−2} and {2i−1, 2i}
        gens.push(Permutation::from_word(r, &[2 * i - 2, 2 * i - 1, 2 * i - 3, 2 * i - 2]));
    }
    for j in 2 * f + 1..r {
        gens.push(Permutation::simple(r, j));
    }
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut frontier = vec![Permutation::identity(r)];
    seen.insert(Permutation::identity(r));
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    fn expected_count(r: usize, f: usize) -> usize {
        factorial(r) / ((1 << f) * factorial(f) * factorial(r - 2 * f))
    }

    #[test]
    fn small_examples() {
        assert_eq!(coset_reps_df(3, 1).len(), 3);
        let d = coset_reps_df(2, 1);
        assert_eq!(d.len(), 1);
        assert!(d[0].is_identity());
        for f in 0..=3 {
            assert!(d_j(7, &(1..=2 * f).collect::<Vec<_>>()).is_identity());
        }
        assert_eq!(d_0(4, 2).images(), &[1, 4, 2, 3]);
    }

    #[test]
    fn d_j_sends_k_to_i_k() {
        for r in 0..=6 {
            for f in 0..=r / 2 {
                for j in subsets(r, f) {
                    let d = d_j(r, &j);
                    for (k, &i) in j.iter().enumerate() {
                        assert_eq!(d.apply(k + 1), i);
                    }
                    assert!(is_distinguished(&d, f));
                }
            }
        }
    }

    #[test]
    fn cosets_tile_the_symmetric_group() {
        for r in 0..=6 {
            for f in 0..=r / 2 {
                let reps = coset_reps_df(r, f);
                assert_eq!(reps.len(), expected_count(r, f));
                assert!(reps.iter().all(|d| is_distinguished(d, f)));
                let h = stabilizer_subgroup(r, f);
                assert_eq!(h.len(), (1 << f) * factorial(f) * factorial(r - 2 * f));
                let mut all = BTreeSet::new();
                for d in &reps {
                    for x in &h {
                        assert!(all.insert(x.mul(d)), "cosets overlap for r={r} f={f}");
                    }
                }
                assert_eq!(all.len(), factorial(r));
            }
        }
    }

    #[test]
    fn brauer_dimension_identity() {
        for r in 1..=6 {
            let total: usize = (0..=r / 2).map(|f| expected_count(r, f).pow(2) * factorial(r - 2 * f)).sum();
            let direct: usize = (0..=r / 2).map(|f| coset_reps_df(r, f).len().pow(2) * factorial(r - 2 * f)).sum();
            let double_fact: usize = (1..=r).map(|k| 2 * k - 1).product();
            assert_eq!(direct, total);
            assert_eq!(direct, double_fact);
        }
    }

    #[test]
    fn length_additivity() {
        for r in 2..=6 {
            for f in 1..=r / 2 {
                let d0 = d_0(r, f);
                for d in coset_reps_upper(r, f) {
                    let w = d.inverse().mul(&d0);
                    assert_eq!(d0.length(), d.length() + w.length(), "r={r} f={f} d={d}");
                }
                let dj0 = d_j(r, &j_0(r, f));
                for j in subsets(r, f) {
                    let dj = d_j(r, &j);
                    let w = dj.inverse().mul(&dj0);
                    assert_eq!(dj0.length(), dj.length() + w.length());
                }
                // every representative other than the top one climbs by a simple reflection
                let reps = coset_reps_df(r, f);
                let top = d0.mul(&dj0);
                assert!(reps.contains(&top));
                for d in &reps {
                    if *d == top {
                        continue;
                    }
                    let up = (1..r).any(|j| {
                        let ds = d.mul(&Permutation::simple(r, j));
                        ds.length() == d.length() + 1 && reps.contains(&ds)
                    });
                    assert!(up, "no ascent from {d}");
                }
            }
        }
    }
}
