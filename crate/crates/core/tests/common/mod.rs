//! Brute-force oracles for the golden values. Everything here works
//! pointwise over the full element set of a finite algebra: sets of residue
//! tuples and the defining equations, no echelon forms, no shared code paths
//! with the library's linear algebra.

#![allow(dead_code)]

use std::collections::BTreeSet;

use algext::{Algebra, Field, Scalar};

/// A multiplication table over F_p with entries as plain residues,
/// c[(i*dim+j)*dim+k] the e_k coefficient of e_i e_j.
pub struct Table {
    pub p: u64,
    pub dim: usize,
    pub c: Vec<u64>,
}

impl Table {
    pub fn of(a: &Algebra) -> Table {
        let Field::Prime { p } = a.field() else {
            panic!("oracle wants a finite field");
        };
        let d = a.dim();
        let mut c = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    c.push(a.structure_constant(i, j, k).residue());
                }
            }
        }
        Table { p, dim: d, c }
    }

    pub fn from_digits(p: u64, dim: usize, digits: &[u64]) -> Table {
        assert_eq!(digits.len(), dim * dim * dim);
        Table {
            p,
            dim,
            c: digits.to_vec(),
        }
    }

    pub fn mul(&self, u: &[u64], v: &[u64]) -> Vec<u64> {
        let d = self.dim;
        let mut w = vec![0u64; d];
        for i in 0..d {
            if u[i] == 0 {
                continue;
            }
            for j in 0..d {
                if v[j] == 0 {
                    continue;
                }
                let uv = u[i] * v[j] % self.p;
                for k in 0..d {
                    w[k] = (w[k] + uv * self.c[(i * d + j) * d + k]) % self.p;
                }
            }
        }
        w
    }

    /// All p^dim element tuples, lexicographic.
    pub fn elements(&self) -> Vec<Vec<u64>> {
        all_tuples(self.p, self.dim)
    }

    pub fn is_associative_on_elements(&self) -> bool {
        let els = self.elements();
        for u in &els {
            for v in &els {
                let uv = self.mul(u, v);
                for w in &els {
                    if self.mul(&uv, w) != self.mul(u, &self.mul(v, w)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

pub fn all_tuples(p: u64, len: usize) -> Vec<Vec<u64>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * p as usize);
        for t in &out {
            for d in 0..p {
                let mut t = t.clone();
                t.push(d);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

pub fn add(p: u64, u: &[u64], v: &[u64]) -> Vec<u64> {
    u.iter().zip(v).map(|(a, b)| (a + b) % p).collect()
}

pub fn sub(p: u64, u: &[u64], v: &[u64]) -> Vec<u64> {
    u.iter().zip(v).map(|(a, b)| (a + p - b % p) % p).collect()
}

/// Counts associative tables of the given dimension by running the
/// all-element check over every one of the p^(dim^3) candidates.
pub fn count_associative_tables(p: u64, dim: usize) -> usize {
    all_tuples(p, dim * dim * dim)
        .iter()
        .filter(|digits| Table::from_digits(p, dim, digits).is_associative_on_elements())
        .count()
}

/// Smallest additive subgroup containing `gens` (subspace closure; over F_p
/// scaling is repeated addition so addition closure is enough).
pub fn span_closure(p: u64, dim: usize, gens: &[Vec<u64>]) -> BTreeSet<Vec<u64>> {
    let mut set: BTreeSet<Vec<u64>> = BTreeSet::new();
    set.insert(vec![0; dim]);
    for g in gens {
        set.insert(g.clone());
    }
    loop {
        let mut grew = false;
        let snapshot: Vec<Vec<u64>> = set.iter().cloned().collect();
        for u in &snapshot {
            for v in &snapshot {
                if set.insert(add(p, u, v)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return set;
        }
    }
}

/// Every element of the ideal generated by all commutators uv - vu, computed
/// by alternating span closure with one-sided multiplications until nothing
/// new appears.
pub fn commutator_ideal_elements(t: &Table) -> BTreeSet<Vec<u64>> {
    let els = t.elements();
    let mut gens = Vec::new();
    for u in &els {
        for v in &els {
            gens.push(sub(t.p, &t.mul(u, v), &t.mul(v, u)));
        }
    }
    let mut set = span_closure(t.p, t.dim, &gens);
    loop {
        let mut products = Vec::new();
        for s in &set {
            for a in &els {
                products.push(t.mul(a, s));
                products.push(t.mul(s, a));
            }
        }
        let bigger = span_closure(
            t.p,
            t.dim,
            &set.iter().cloned().chain(products).collect::<Vec<_>>(),
        );
        if bigger == set {
            return set;
        }
        set = bigger;
    }
}

fn apply(p: u64, m: &[u64], dim: usize, x: &[u64]) -> Vec<u64> {
    (0..dim)
        .map(|k| (0..dim).map(|j| m[k * dim + j] * x[j] % p).sum::<u64>() % p)
        .collect()
}

/// Number of pairs (phi, psi) of dim x dim matrices with
/// x phi(x') = psi(x) x' for every pair of elements x, x'.
pub fn weak_actor_pair_count(t: &Table) -> usize {
    let d = t.dim;
    let els = t.elements();
    all_tuples(t.p, 2 * d * d)
        .iter()
        .filter(|digits| {
            let (phi, psi) = digits.split_at(d * d);
            els.iter().all(|x| {
                els.iter().all(|y| {
                    t.mul(x, &apply(t.p, phi, d, y)) == t.mul(&apply(t.p, psi, d, x), y)
                })
            })
        })
        .count()
}

/// Number of operator-family pairs (l, r) on `x` indexed by a basis of `b`
/// whose semidirect multiplication table is associative on all elements.
/// Associativity of that table is the defining content of an action, so this
/// counts actions without touching the axiom list.
pub fn action_count_by_semidirect(b: &Table, x: &Table) -> usize {
    assert_eq!(b.p, x.p);
    let (p, n, m) = (b.p, b.dim, x.dim);
    let d = n + m;
    all_tuples(p, 2 * n * m * m)
        .iter()
        .filter(|digits| {
            let (l, r) = digits.split_at(n * m * m);
            let mut c = vec![0u64; d * d * d];
            let mut put = |i: usize, j: usize, k: usize, val: u64| {
                c[(i * d + j) * d + k] = val % p;
            };
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        put(i, j, k, b.c[(i * n + j) * n + k]);
                    }
                }
            }
            for i in 0..n {
                for j in 0..m {
                    for k in 0..m {
                        // b_i x_j = l_i e_j, column j of the i-th left matrix
                        put(i, n + j, n + k, l[i * m * m + k * m + j]);
                        // x_j b_i = r_i e_j
                        put(n + j, i, n + k, r[i * m * m + k * m + j]);
                    }
                }
            }
            for i in 0..m {
                for j in 0..m {
                    for k in 0..m {
                        put(n + i, n + j, n + k, x.c[(i * m + j) * m + k]);
                    }
                }
            }
            Table::from_digits(p, d, &c).is_associative_on_elements()
        })
        .count()
}

pub fn residues(v: &[Scalar]) -> Vec<u64> {
    v.iter().map(Scalar::residue).collect()
}
