//! Zelevinsky multisegments: profiles, ladders, linkage classes, `w(𝔪)`,
//! the hook partition `α(𝔪)` and the BGG terms of a ladder.

use crate::clifford::{epsilon_of, spin_irrep_dimension};
use crate::exactalg::{sqrt_of, Field};
use crate::weyl::partition::Partition;
use crate::weyl::symmetric::SymClassFn;
use crate::{Error, Result, Scalar};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize)]
pub struct Segment {
    pub a: i64,
    pub b: i64,
}

impl Segment {
    pub fn new(a: i64, b: i64) -> Result<Self> {
        if b < a {
            return Err(Error::Invalid(format!("[{a},{b}] is not a segment")));
        }
        Ok(Segment { a, b })
    }

    pub fn len(&self) -> usize {
        (self.b - self.a + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, e: i64) -> bool {
        self.a <= e && e <= self.b
    }

    /// `o` is right linked to `self`: `o.b + 1 = self.a`.
    pub fn right_linked_from(&self, o: &Segment) -> bool {
        o.b + 1 == self.a
    }

    pub fn linked(&self, o: &Segment) -> bool {
        self.b + 1 == o.a || o.b + 1 == self.a
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.a, self.b)
    }
}

/// Ordered list of segments.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Multisegment(pub Vec<Segment>);

impl Serialize for Multisegment {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl fmt::Display for Multisegment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|s| s.to_string()).collect();
        f.write_str(&parts.join(";"))
    }
}

impl FromStr for Multisegment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.as_bytes();
        let mut pos = 0;
        let mut segs = Vec::new();
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let expect = |pos: &mut usize, c: u8| -> Result<()> {
            skip_ws(pos);
            if bytes.get(*pos) == Some(&c) {
                *pos += 1;
                Ok(())
            } else {
                Err(Error::Parse {
                    pos: *pos,
                    msg: format!("expected '{}'", c as char),
                })
            }
        };
        let int = |pos: &mut usize| -> Result<i64> {
            skip_ws(pos);
            let start = *pos;
            if bytes.get(*pos) == Some(&b'-') || bytes.get(*pos) == Some(&b'+') {
                *pos += 1;
            }
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            s[start..*pos].parse().map_err(|_| Error::Parse {
                pos: start,
                msg: "expected an integer".into(),
            })
        };
        loop {
            expect(&mut pos, b'[')?;
            let start = pos;
            let a = int(&mut pos)?;
            expect(&mut pos, b',')?;
            let b = int(&mut pos)?;
            expect(&mut pos, b']')?;
            segs.push(Segment::new(a, b).map_err(|e| Error::Parse {
                pos: start,
                msg: e.to_string(),
            })?);
            skip_ws(&mut pos);
            if pos == bytes.len() {
                break;
            }
            expect(&mut pos, b';')?;
        }
        Ok(Multisegment(segs))
    }
}

impl Multisegment {
    pub fn new(segs: Vec<Segment>) -> Self {
        Multisegment(segs)
    }

    pub fn from_pairs(p: &[(i64, i64)]) -> Result<Self> {
        Ok(Multisegment(
            p.iter().map(|&(a, b)| Segment::new(a, b)).collect::<Result<_>>()?,
        ))
    }

    pub fn segments(&self) -> &[Segment] {
        &self.0
    }

    /// `l = Σ` lengths.
    pub fn rank(&self) -> usize {
        self.0.iter().map(|s| s.len()).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `b_1 > b_2 > … > b_n`.
    pub fn in_z(&self) -> bool {
        self.0.windows(2).all(|w| w[0].b > w[1].b)
    }

    /// In `Z_l` with `a_1 > a_2 > … > a_n`.
    pub fn is_ladder(&self) -> bool {
        self.in_z() && self.0.windows(2).all(|w| w[0].a > w[1].a)
    }

    pub fn require_ladder(&self) -> Result<()> {
        if self.is_ladder() {
            Ok(())
        } else {
            Err(Error::NotLadder)
        }
    }

    /// Of the form `{[−b_1,b_1], …}`.
    pub fn is_symmetric(&self) -> bool {
        self.0.iter().all(|s| s.a == -s.b)
    }
}

/// `m(𝔪, e)`.
pub fn m_profile(m: &Multisegment, e: i64) -> usize {
    m.0.iter().filter(|s| s.contains(e)).count()
}

/// Non-zero values of the profile.
pub fn profile(m: &Multisegment) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for s in &m.0 {
        for e in s.a..=s.b {
            *out.entry(e).or_insert(0) += 1;
        }
    }
    out
}

/// The symmetric multisegment with the same profile, if any.
pub fn temp_of(m: &Multisegment) -> Option<Multisegment> {
    let p = profile(m);
    let top = p.keys().map(|e| e.abs()).max()?;
    let mut segs = Vec::new();
    for k in (0..=top).rev() {
        let here = p.get(&k).copied().unwrap_or(0);
        let above = p.get(&(k + 1)).copied().unwrap_or(0);
        match here.checked_sub(above) {
            Some(0) => {}
            Some(1) => segs.push(Segment { a: -k, b: k }),
            _ => return None,
        }
    }
    let cand = Multisegment(segs);
    (profile(&cand) == p).then_some(cand)
}

pub fn is_elliptic_cc(m: &Multisegment) -> bool {
    m.in_z() && temp_of(m).is_some()
}

/// Segment lengths as a partition.
pub fn lambda_of(m: &Multisegment) -> Partition {
    Partition::new(m.0.iter().map(|s| s.len()).collect())
}

/// Up to a peak the profile weakly increases, then weakly decreases.
pub fn has_up_then_down(m: &Multisegment) -> bool {
    let p = profile(m);
    let (Some(&lo), Some(&hi)) = (p.keys().next(), p.keys().last()) else {
        return true;
    };
    let vals: Vec<usize> = (lo..=hi).map(|e| p.get(&e).copied().unwrap_or(0)).collect();
    let peak = (0..vals.len()).max_by_key(|&i| (vals[i], std::cmp::Reverse(i))).unwrap_or(0);
    vals[..=peak].windows(2).all(|w| w[0] <= w[1]) && vals[peak..].windows(2).all(|w| w[0] >= w[1])
}

/// A linkage class: segment indices from top (`[a¹,b¹]`) to bottom, with
/// `J(f) = [a(f), b(f)]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkClass {
    pub members: Vec<usize>,
    pub a: i64,
    pub b: i64,
}

impl LinkClass {
    pub fn j(&self) -> Segment {
        Segment {
            a: self.a,
            b: self.b,
        }
    }
}

/// Classes of the linkage relation, in order of their top segment.
pub fn linkage_classes(m: &Multisegment) -> Result<Vec<LinkClass>> {
    m.require_ladder()?;
    let n = m.len();
    let segs = &m.0;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        // walk up to the top of the chain
        let mut top = start;
        while let Some(up) = (0..n).find(|&j| segs[j].right_linked_from(&segs[top])) {
            top = up;
        }
        let mut members = vec![top];
        let mut cur = top;
        while let Some(down) = (0..n).find(|&j| segs[cur].right_linked_from(&segs[j])) {
            members.push(down);
            cur = down;
        }
        for &i in &members {
            seen[i] = true;
        }
        out.push(LinkClass {
            a: segs[cur].a,
            b: segs[top].b,
            members,
        });
    }
    out.sort_by_key(|c| c.members[0]);
    Ok(out)
}

/// Permutation of `{0..n}` stored as images; printed 1-based in cycle form.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Perm(pub Vec<usize>);

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let p = &self.0;
        let mut c = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    c += 1;
                }
            }
        }
        c
    }

    pub fn sign(&self) -> i64 {
        if self.length().is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for i in 0..n {
            if seen[i] || self.0[i] == i {
                continue;
            }
            let mut c = vec![i];
            seen[i] = true;
            let mut j = self.0[i];
            while j != i {
                seen[j] = true;
                c.push(j);
                j = self.0[j];
            }
            out.push(c);
        }
        out
    }

    /// All permutations of `n` letters in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        let mut used = vec![false; n];
        fn rec(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Perm>) {
            if cur.len() == n {
                out.push(Perm(cur.clone()));
                return;
            }
            for i in 0..n {
                if !used[i] {
                    used[i] = true;
                    cur.push(i);
                    rec(n, cur, used, out);
                    cur.pop();
                    used[i] = false;
                }
            }
        }
        rec(n, &mut cur, &mut used, &mut out);
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return f.write_str("()");
        }
        for c in cs {
            let s: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for Perm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Classes in the two orders of Step 1: by decreasing `b(f)` and by
/// increasing `a(f)`.
fn ordered_classes(m: &Multisegment) -> Result<(Vec<LinkClass>, Vec<LinkClass>)> {
    let cls = linkage_classes(m)?;
    let mut by_b = cls.clone();
    by_b.sort_by(|x, y| y.b.cmp(&x.b));
    let mut by_a = cls;
    by_a.sort_by_key(|c| c.a);
    Ok((by_b, by_a))
}

/// `w(𝔪)` with `G(a_i) = a_{w(i)}`.
///
/// For `d > 1` the map sends `a(i_e, d)` to `a(i_e, d−1)`: reading the
/// second index as `j_e` makes `G` non-injective on the four-segment
/// example, while this reading reproduces both worked examples.
pub fn w_of(m: &Multisegment) -> Result<Perm> {
    let (ib, ja) = ordered_classes(m)?;
    let n = m.len();
    let mut w = vec![usize::MAX; n];
    for (fi, fj) in ib.iter().zip(&ja) {
        for (d, &idx) in fi.members.iter().enumerate() {
            let target = if d == 0 {
                *fj.members.last().expect("non-empty class")
            } else {
                fi.members[d - 1]
            };
            w[idx] = target;
        }
    }
    let mut hit = vec![false; n];
    for &t in &w {
        if t == usize::MAX || hit[t] {
            return Err(Error::Certificate(format!("G is not a bijection for {m}")));
        }
        hit[t] = true;
    }
    Ok(Perm(w))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HookData {
    pub hk: Vec<usize>,
    pub ht: Vec<usize>,
    /// `α'(𝔪)`, whose hooks are described by `hk`, `ht`.
    pub alpha_prime: Partition,
    pub alpha: Partition,
}

/// `α(𝔪) = α'(𝔪)^T`, where the `e`-th hook of `α'` has length `hk(𝔪,e)`
/// and height `ht(𝔪,e)`.
pub fn alpha_of(m: &Multisegment) -> Result<HookData> {
    if !is_elliptic_cc(m) {
        return Err(Error::Invalid(format!("{m} is not elliptic")));
    }
    let (ib, ja) = ordered_classes(m)?;
    let mut hk = Vec::new();
    let mut ht = Vec::new();
    for (fi, fj) in ib.iter().zip(&ja) {
        let len = fi.b - fj.a + 1;
        if len < 1 {
            return Err(Error::Certificate(format!("non-positive hook in {m}")));
        }
        hk.push(len as usize);
        ht.push(m.0.iter().filter(|s| fj.a <= s.b && s.b <= fi.b).count());
    }
    // Frobenius coordinates: arm = hk − ht, leg = ht − 1
    let s = hk.len();
    let mut arms = Vec::with_capacity(s);
    let mut legs = Vec::with_capacity(s);
    for e in 0..s {
        if ht[e] == 0 || ht[e] > hk[e] {
            return Err(Error::Certificate(format!("inconsistent hook {e} in {m}")));
        }
        arms.push(hk[e] - ht[e]);
        legs.push(ht[e] - 1);
    }
    if !arms.windows(2).all(|w| w[0] > w[1]) || !legs.windows(2).all(|w| w[0] > w[1]) {
        return Err(Error::Certificate(format!("hooks of {m} do not nest")));
    }
    let mut rows = vec![0usize; s + legs.first().copied().unwrap_or(0)];
    for e in 0..s {
        rows[e] += arms[e] + 1;
        for r in e + 1..=e + legs[e] {
            rows[r] += 1;
        }
    }
    let alpha_prime = Partition::new(rows.clone());
    if alpha_prime.parts() != rows.iter().copied().filter(|&x| x > 0).collect::<Vec<_>>()
        || alpha_prime.size() != m.rank()
    {
        return Err(Error::Certificate(format!("hooks of {m} give no partition")));
    }
    let alpha = alpha_prime.transpose();
    Ok(HookData {
        hk,
        ht,
        alpha_prime,
        alpha,
    })
}

/// Length `l_e + t_e − 2e + 1` of the `e`-th hook (1-based `e`).
pub fn hook_length(alpha: &Partition, e: usize) -> usize {
    let t = alpha.transpose();
    alpha.parts()[e - 1] + t.parts()[e - 1] + 1 - 2 * e
}

/// Height `t_e − e + 1` of the `e`-th hook.
pub fn hook_height(alpha: &Partition, e: usize) -> usize {
    alpha.transpose().parts()[e - 1] + 1 - e
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BggTerm {
    pub w: Perm,
    pub length: usize,
    pub sign: i64,
    /// `𝔪^w`, or `None` when some `a_{w(k)} > b_k + 1`.
    pub multisegment: Option<Multisegment>,
}

/// All `n!` terms `𝔪^w = {[a_{w(k)}, b_k]}` of the BGG complex.
pub fn bgg_terms(m: &Multisegment) -> Result<Vec<BggTerm>> {
    m.require_ladder()?;
    let segs = &m.0;
    Ok(Perm::all(m.len())
        .into_iter()
        .map(|w| {
            let zero = (0..segs.len()).any(|k| segs[w.0[k]].a > segs[k].b + 1);
            let ms = (!zero).then(|| {
                // an empty segment [b+1, b] contributes nothing
                Multisegment(
                    (0..segs.len())
                        .filter(|&k| segs[w.0[k]].a <= segs[k].b)
                        .map(|k| Segment {
                            a: segs[w.0[k]].a,
                            b: segs[k].b,
                        })
                        .collect(),
                )
            });
            BggTerm {
                length: w.length(),
                sign: w.sign(),
                w,
                multisegment: ms,
            }
        })
        .collect())
}

/// `Ind_{S_λ}^{S_l} sgn`, the `W`-character of `E(𝔪)`.
pub fn standard_character(m: &Multisegment) -> SymClassFn {
    SymClassFn::induced_sign(&lambda_of(m))
}

/// `Σ_w (−1)^{l(w)} char E(𝔪^w)`, the `W`-character of `L(𝔪)` for a ladder.
pub fn bgg_character(m: &Multisegment) -> Result<SymClassFn> {
    let mut out = SymClassFn::zero(m.rank());
    for t in bgg_terms(m)? {
        if let Some(ms) = t.multisegment {
            out.add_scaled(t.sign, &standard_character(&ms));
        }
    }
    Ok(out)
}

/// Dimension `Σ_w (−1)^{l(w)} dim E(𝔪^w)`.
pub fn bgg_dimension(m: &Multisegment) -> Result<i64> {
    Ok(bgg_character(m)?.degree())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderPrediction {
    pub lambda: Partition,
    /// `λ = (l)`: the answer is `S` itself.
    pub basic: bool,
    pub spin_dim: usize,
    /// `k` with `ε_{(n)}`, `n` the number of segments.
    pub k_n: String,
    /// `k` with `ε_{(l)}`.
    pub k_l: String,
    pub dim_n: Option<usize>,
    pub dim_l: Option<usize>,
}

fn k_value(lambda: &Partition, other: &Partition) -> Result<Scalar> {
    let num = {
        let len = lambda.len();
        let base = Scalar::from_int(1i64 << (len / 2));
        if len % 2 == 1 {
            base
        } else {
            // 2^{(len−1)/2} = 2^{len/2} / √2
            base.mul_ref(&sqrt_of(2).inv().expect("non-zero"))
        }
    };
    let den = epsilon_of(lambda)?.mul_ref(&epsilon_of(other)?);
    Ok(num.mul_ref(&den.inv().expect("non-zero")))
}

/// The ladder theorem's prediction for `H_D(L(𝔪))`, with both readings of
/// the normalizing `ε`.
pub fn ladder_hd_prediction(m: &Multisegment) -> Result<LadderPrediction> {
    m.require_ladder()?;
    let temp = temp_of(m).ok_or_else(|| Error::Invalid(format!("{m} is not elliptic")))?;
    let lambda = lambda_of(&temp);
    let l = m.rank();
    let spin_dim = spin_irrep_dimension(&lambda)?;
    let basic = lambda.len() == 1;
    let n = m.len();
    let eps_n = Partition::new(vec![n]);
    let eps_l = Partition::new(vec![l]);
    let k_n = k_value(&lambda, &eps_n)?;
    let k_l = k_value(&lambda, &eps_l)?;
    let dim = |k: &Scalar| -> Option<usize> {
        if basic {
            Some(spin_dim)
        } else {
            k.as_integer()
                .filter(|&x| x >= 0)
                .map(|x| x as usize * spin_dim)
        }
    };
    Ok(LadderPrediction {
        dim_n: dim(&k_n),
        dim_l: dim(&k_l),
        k_n: k_n.to_string(),
        k_l: k_l.to_string(),
        lambda,
        basic,
        spin_dim,
    })
}

/// All `𝔪 ∈ Z_l` with endpoints in `[−window, window]`.
pub fn enumerate_z(l: usize, window: i64) -> Vec<Multisegment> {
    let mut segs: Vec<Segment> = Vec::new();
    for a in -window..=window {
        for b in a..=window {
            segs.push(Segment { a, b });
        }
    }
    // b strictly decreasing: choose segments in decreasing b
    segs.sort_by(|x, y| y.b.cmp(&x.b).then(y.a.cmp(&x.a)));
    let mut out = Vec::new();
    fn rec(
        segs: &[Segment],
        start: usize,
        left: usize,
        last_b: Option<i64>,
        cur: &mut Vec<Segment>,
        out: &mut Vec<Multisegment>,
    ) {
        if left == 0 {
            out.push(Multisegment(cur.clone()));
            return;
        }
        for i in start..segs.len() {
            let s = segs[i];
            if last_b.is_some_and(|b| s.b >= b) || s.len() > left {
                continue;
            }
            cur.push(s);
            rec(segs, i + 1, left - s.len(), Some(s.b), cur, out);
            cur.pop();
        }
    }
    rec(&segs, 0, l, None, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn enumerate_ladders(l: usize, window: i64) -> Vec<Multisegment> {
    enumerate_z(l, window)
        .into_iter()
        .filter(|m| m.is_ladder())
        .collect()
}

/// All symmetric `𝔪 ∈ Z_l`, one per partition of `l` into distinct odd parts.
pub fn symmetric_multisegments(l: usize) -> Vec<Multisegment> {
    crate::weyl::partition::distinct_odd_partitions(l)
        .into_iter()
        .map(|p| {
            Multisegment(
                p.parts()
                    .iter()
                    .map(|&x| {
                        let h = (x as i64 - 1) / 2;
                        Segment { a: -h, b: h }
                    })
                    .collect(),
            )
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::partition::distinct_odd_partitions;
    use proptest::prelude::*;

    fn ms(s: &str) -> Multisegment {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let m = ms("[-1,1]; [0,0]");
        assert_eq!(m.to_string(), "[-1,1];[0,0]");
        assert!(matches!("[1,0]".parse::<Multisegment>(), Err(Error::Parse { .. })));
        assert!(matches!(
            "[0,1];".parse::<Multisegment>(),
            Err(Error::Parse { pos: 6, .. })
        ));
    }

    #[test]
    fn profile_example() {
        let m = ms("[4,5];[2,4];[1,3]");
        let v: Vec<usize> = (1..=5).map(|e| m_profile(&m, e)).collect();
        assert_eq!(v, vec![1, 2, 2, 2, 1]);
        assert_eq!(m_profile(&m, 9), 0);
        assert_eq!(profile(&m).values().sum::<usize>(), m.rank());
    }

    #[test]
    fn temperings() {
        assert_eq!(temp_of(&ms("[0,1];[-1,0]")), Some(ms("[-1,1];[0,0]")));
        assert_eq!(temp_of(&ms("[-1,1]")), Some(ms("[-1,1]")));
        assert_eq!(temp_of(&ms("[0,1]")), None);
    }

    #[test]
    fn linkage_examples() {
        let m = ms("[5,7];[3,5];[2,4];[1,3]");
        let js: Vec<String> = linkage_classes(&m)
            .unwrap()
            .iter()
            .map(|c| c.j().to_string())
            .collect();
        assert_eq!(js, vec!["[2,7]", "[3,5]", "[1,3]"]);
        let (ib, ja) = ordered_classes(&m).unwrap();
        let ib: Vec<String> = ib.iter().map(|c| c.j().to_string()).collect();
        let ja: Vec<String> = ja.iter().map(|c| c.j().to_string()).collect();
        assert_eq!(ib, vec!["[2,7]", "[3,5]", "[1,3]"]);
        assert_eq!(ja, vec!["[1,3]", "[2,7]", "[3,5]"]);
        assert_eq!(linkage_classes(&ms("[0,1];[-1,0]")).unwrap().len(), 2);
        assert_eq!(linkage_classes(&ms("[2,4]")).unwrap()[0].j().to_string(), "[2,4]");
        assert!(linkage_classes(&ms("[0,1];[1,2]")).is_err());
    }

    #[test]
    fn w_examples() {
        assert_eq!(w_of(&ms("[7,10];[4,8];[3,6]")).unwrap().to_string(), "(1,3)");
        assert_eq!(
            w_of(&ms("[5,7];[3,5];[2,4];[1,3]")).unwrap().to_string(),
            "(1,4,2,3)"
        );
        assert_eq!(w_of(&ms("[0,1];[-1,0]")).unwrap().to_string(), "(1,2)");
    }

    #[test]
    fn lambda_and_hooks() {
        assert_eq!(lambda_of(&ms("[3,7];[2,6];[1,3]")).to_string(), "(5,5,3)");
        let a = Partition::new(vec![5, 1, 1, 1]);
        assert_eq!(hook_length(&a, 1), 8);
        assert_eq!(hook_height(&a, 1), 4);
        let h = alpha_of(&ms("[0,1];[-1,0]")).unwrap();
        assert_eq!((h.hk.clone(), h.ht.clone()), (vec![3, 1], vec![2, 1]));
        assert_eq!(h.alpha.to_string(), "(2,2)");
        assert_eq!(alpha_of(&ms("[-1,1]")).unwrap().alpha.to_string(), "(1,1,1)");
    }

    #[test]
    fn bgg_examples() {
        let t = bgg_terms(&ms("[0,1];[-1,0]")).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t[0].multisegment, Some(ms("[0,1];[-1,0]")));
        assert_eq!(t[1].multisegment, Some(ms("[-1,1];[0,0]")));
        assert_eq!(t[1].sign, -1);
        let m = ms("[7,10];[4,8];[3,6]");
        for t in bgg_terms(&m).unwrap() {
            let segs = m.segments();
            let zero = (0..3).any(|k| segs[t.w.0[k]].a > segs[k].b + 1);
            assert_eq!(zero, t.multisegment.is_none());
        }
        assert_eq!(bgg_dimension(&ms("[0,1];[-1,0]")).unwrap(), 2);
    }

    #[test]
    fn predictions() {
        let p = ladder_hd_prediction(&ms("[-1,1]")).unwrap();
        assert!(p.basic);
        assert_eq!(p.dim_l, Some(2));
        let p = ladder_hd_prediction(&ms("[0,1];[-1,0]")).unwrap();
        assert_eq!(p.lambda.to_string(), "(3,1)");
        assert_eq!(p.k_l, "1");
        assert_eq!(p.dim_l, Some(4));
        let p = ladder_hd_prediction(&ms("[0,2];[-1,1];[-2,0]")).unwrap();
        assert_eq!(p.lambda.to_string(), "(5,3,1)");
        assert_eq!(p.k_l, "2");
    }

    #[test]
    fn symmetric_count_matches_odd_partitions() {
        for l in 1..=9 {
            let sym: Vec<_> = enumerate_z(l, 4).into_iter().filter(|m| m.is_symmetric()).collect();
            assert_eq!(sym.len(), distinct_odd_partitions(l).len());
            assert_eq!(symmetric_multisegments(l).len(), sym.len());
        }
    }

    #[test]
    fn enumerations_consistent() {
        for l in 1..=8 {
            for m in enumerate_ladders(l, 3) {
                assert!(m.is_ladder());
                if !is_elliptic_cc(&m) {
                    continue;
                }
                assert!(has_up_then_down(&m), "{m}");
                let h = alpha_of(&m).unwrap();
                assert_eq!(h.alpha.size(), l);
                // ht(𝔪,e) = w(N) − N + e with a_N = a(i_e, 1)
                let w = w_of(&m).unwrap();
                let (ib, _) = ordered_classes(&m).unwrap();
                for (e, f) in ib.iter().enumerate() {
                    let nn = f.members[0] as i64;
                    let wn = w.0[f.members[0]] as i64;
                    assert_eq!(h.ht[e] as i64, wn - nn + e as i64 + 1, "{m}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn text_round_trip(v in proptest::collection::vec((-5i64..5, 0i64..4), 1..5)) {
            let m = Multisegment(v.iter().map(|&(a, d)| Segment { a, b: a + d }).collect());
            prop_assert_eq!(m.to_string().parse::<Multisegment>().unwrap(), m);
        }

        #[test]
        fn profile_sums_to_rank(v in proptest::collection::vec((-5i64..5, 0i64..4), 1..5)) {
            let m = Multisegment(v.iter().map(|&(a, d)| Segment { a, b: a + d }).collect());
            prop_assert_eq!(profile(&m).values().sum::<usize>(), m.rank());
        }
    }
}
