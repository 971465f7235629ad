use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

/// Multiplication of group elements.
pub type MulFn<T> = Arc<dyn Fn(&T, &T) -> T + Send + Sync>;

/// Conjugacy class data shared by a group and its class functions.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassData {
    pub group_order: usize,
    pub sizes: Vec<usize>,
    /// Index (into the group's element list) of each class representative.
    pub reps: Vec<usize>,
    /// Shortlex-least word in the generators for each representative.
    pub rep_words: Vec<Vec<usize>>,
    pub elt_orders: Vec<usize>,
    pub inverse_class: Vec<usize>,
    /// `power_classes[j][s]` is the class of `g_j^s` for `0 ≤ s < o(g_j)`.
    pub power_classes: Vec<Vec<usize>>,
}

impl ClassData {
    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> usize {
        self.elt_orders
            .iter()
            .fold(1, |a, &b| num_integer::lcm(a, b))
    }
}

/// A finite group given by generators and a multiplication, enumerated by
/// breadth-first search. Element 0 is the identity and words are shortlex
/// least in the generator order.
pub struct FiniteGroup<T> {
    elems: Vec<T>,
    index: HashMap<T, usize>,
    gens: Vec<usize>,
    words: Vec<Vec<usize>>,
    mul: MulFn<T>,
    class_of: Vec<usize>,
    inverse: Vec<usize>,
    classes: Arc<ClassData>,
}

impl<T: Clone + Eq + Hash + Debug + Send + Sync> FiniteGroup<T> {
    pub fn generate(identity: T, gens: Vec<T>, mul: MulFn<T>, max_order: usize) -> Result<Self> {
        let mut elems = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut head = 0;
        while head < elems.len() {
            for (g, gen) in gens.iter().enumerate() {
                let y = mul(&elems[head], gen);
                if !index.contains_key(&y) {
                    if elems.len() >= max_order {
                        return Err(Error::SizeBound(format!(
                            "group order exceeds {max_order}"
                        )));
                    }
                    let mut w = words[head].clone();
                    w.push(g);
                    index.insert(y.clone(), elems.len());
                    elems.push(y);
                    words.push(w);
                }
            }
            head += 1;
        }
        let gen_idx = gens.iter().map(|g| index[g]).collect();
        let n = elems.len();
        let mut grp = FiniteGroup {
            elems,
            index,
            gens: gen_idx,
            words,
            mul,
            class_of: vec![usize::MAX; n],
            inverse: vec![0; n],
            classes: Arc::new(ClassData {
                group_order: n,
                sizes: vec![],
                reps: vec![],
                rep_words: vec![],
                elt_orders: vec![],
                inverse_class: vec![],
                power_classes: vec![],
            }),
        };
        grp.compute_inverses();
        grp.compute_classes();
        Ok(grp)
    }

    fn compute_inverses(&mut self) {
        // x = parent·g, so x⁻¹ = g⁻¹·parent⁻¹; generators' inverses are found
        // by powering.
        let n = self.elems.len();
        let gen_inv: Vec<usize> = self
            .gens
            .iter()
            .map(|&g| {
                let mut p = g;
                let mut prev = 0;
                while p != 0 {
                    prev = p;
                    p = self.mul_idx(p, g);
                }
                prev
            })
            .collect();
        let mut inv = vec![0usize; n];
        for x in 1..n {
            let w = &self.words[x];
            let mut acc = 0;
            for &g in w.iter().rev() {
                acc = self.mul_idx(acc, gen_inv[g]);
            }
            inv[x] = acc;
        }
        self.inverse = inv;
    }

    fn compute_classes(&mut self) {
        let n = self.elems.len();
        let mut class_of = vec![usize::MAX; n];
        let mut sizes = Vec::new();
        let mut reps = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            reps.push(x);
            class_of[x] = c;
            let mut stack = vec![x];
            let mut size = 1;
            while let Some(y) = stack.pop() {
                for gi in 0..self.gens.len() {
                    let g = self.gens[gi];
                    let z = self.mul_idx(self.mul_idx(g, y), self.inverse[g]);
                    if class_of[z] == usize::MAX {
                        class_of[z] = c;
                        size += 1;
                        stack.push(z);
                    }
                }
            }
            sizes.push(size);
        }
        let mut elt_orders = Vec::new();
        let mut power_classes = Vec::new();
        for &r in &reps {
            let mut pcs = vec![class_of[0]];
            let mut p = r;
            while p != 0 {
                pcs.push(class_of[p]);
                p = self.mul_idx(p, r);
            }
            elt_orders.push(pcs.len());
            power_classes.push(pcs);
        }
        let inverse_class = reps.iter().map(|&r| class_of[self.inverse[r]]).collect();
        let rep_words = reps.iter().map(|&r| self.words[r].clone()).collect();
        self.class_of = class_of;
        self.classes = Arc::new(ClassData {
            group_order: n,
            sizes,
            reps,
            rep_words,
            elt_orders,
            inverse_class,
            power_classes,
        });
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn elements(&self) -> &[T] {
        &self.elems
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elems[i]
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Shortlex-least word for element `i`.
    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn mul_idx(&self, a: usize, b: usize) -> usize {
        let p = (self.mul)(&self.elems[a], &self.elems[b]);
        self.index[&p]
    }

    pub fn mul_elt(&self, a: &T, b: &T) -> T {
        (self.mul)(a, b)
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn classes(&self) -> &Arc<ClassData> {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Class multiplication coefficients `c[j][i][k]`: the number of pairs
    /// `(a, b) ∈ C_j × C_i` with `ab = g_k`.
    pub fn class_constants(&self) -> Vec<Vec<Vec<u64>>> {
        let k = self.num_classes();
        let mut c = vec![vec![vec![0u64; k]; k]; k];
        for (kk, &z) in self.classes.reps.iter().enumerate() {
            for a in 0..self.order() {
                let b = self.mul_idx(self.inverse[a], z);
                c[self.class_of[a]][self.class_of[b]][kk] += 1;
            }
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm_mul(a: &Vec<usize>, b: &Vec<usize>) -> Vec<usize> {
        // (a·b)(i) = a(b(i))
        b.iter().map(|&x| a[x]).collect()
    }

    #[test]
    fn s3_classes() {
        let g = FiniteGroup::generate(
            vec![0, 1, 2],
            vec![vec![1, 0, 2], vec![0, 2, 1]],
            Arc::new(perm_mul),
            100,
        )
        .unwrap();
        assert_eq!(g.order(), 6);
        let mut sizes = g.classes().sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        for x in 0..6 {
            assert_eq!(g.mul_idx(x, g.inverse(x)), 0);
        }
        let c = g.class_constants();
        // Σ_{j,i} c[j][i][k] = |G| for every k
        for k in 0..3 {
            let s: u64 = c.iter().flatten().map(|v| v[k]).sum();
            assert_eq!(s, 6);
        }
    }

    #[test]
    fn size_bound() {
        let r = FiniteGroup::generate(
            vec![0, 1, 2, 3],
            vec![vec![1, 0, 2, 3], vec![1, 2, 3, 0]],
            Arc::new(perm_mul),
            10,
        );
        assert!(matches!(r, Err(Error::SizeBound(_))));
    }
}
