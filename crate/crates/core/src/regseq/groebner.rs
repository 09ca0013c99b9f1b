//! Buchberger completion on raw exponent vectors.
//!
//! Pairs are selected by the normal strategy (smallest lcm first) and pruned
//! with the Gebauer–Möller criteria. Reduction is full (head and tail).

use std::cmp::Ordering;

use serde::Serialize;

use crate::poly::{revlex, Coeff, CoeffDomain};

/// Monomial orders supported by the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic order (unweighted).
    GrevLex,
    /// Block order: the first `block` variables are compared first by
    /// grevlex, ties broken by grevlex on the remaining variables. The
    /// restriction to the remaining variables is grevlex, so intersecting a
    /// basis with them yields a grevlex basis of the elimination ideal.
    Elimination { block: usize },
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match *self {
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::Elimination { block } => {
                grevlex(&a[..block], &b[..block]).then_with(|| grevlex(&a[block..], &b[block..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| revlex(a, b))
}

pub(crate) type RawTerm = (Vec<u32>, Coeff);

/// Polynomial with terms sorted descending in the engine's order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct RawPoly {
    pub terms: Vec<RawTerm>,
}

impl RawPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lm(&self) -> &[u32] {
        &self.terms[0].0
    }

    pub fn is_constant(&self) -> bool {
        !self.terms.is_empty() && self.terms[0].0.iter().all(|&e| e == 0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BudgetExceeded {
    pub budget: usize,
}

fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub(crate) struct Engine {
    pub domain: CoeffDomain,
    pub order: MonomialOrder,
    pub budget: usize,
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Vec<u32>,
}

impl Engine {
    pub fn sort(&self, mut terms: Vec<RawTerm>) -> RawPoly {
        terms.sort_by(|a, b| self.order.cmp(&b.0, &a.0));
        // merge duplicates
        let mut out: Vec<RawTerm> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == e => last.1 = self.domain.add(&last.1, &c),
                _ => out.push((e, c)),
            }
        }
        out.retain(|t| !t.1.is_zero());
        RawPoly { terms: out }
    }

    fn monic(&self, p: &mut RawPoly) {
        if let Some(lead) = p.terms.first().map(|t| t.1.clone()) {
            if lead.is_one() {
                return;
            }
            let inv = self.domain.inv(&lead).expect("nonzero leading coefficient");
            for t in p.terms.iter_mut() {
                t.1 = self.domain.mul(&t.1, &inv);
            }
        }
    }

    /// `p - c·x^m·g`, keeping order.
    fn sub_mul(&self, p: &[RawTerm], c: &Coeff, m: &[u32], g: &[RawTerm]) -> Vec<RawTerm> {
        let d = self.domain;
        let mut out = Vec::with_capacity(p.len() + g.len());
        let shifted = g.iter().map(|(e, x)| {
            (e.iter().zip(m).map(|(a, b)| a + b).collect::<Vec<u32>>(), d.mul(x, c))
        });
        let mut i = 0;
        let mut shifted = shifted.peekable();
        while i < p.len() || shifted.peek().is_some() {
            let take = match (p.get(i), shifted.peek()) {
                (Some(a), Some(b)) => self.order.cmp(&a.0, &b.0),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => unreachable!(),
            };
            match take {
                Ordering::Greater => {
                    out.push(p[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (e, x) = shifted.next().unwrap();
                    out.push((e, d.neg(&x)));
                }
                Ordering::Equal => {
                    let (e, x) = shifted.next().unwrap();
                    let v = d.sub(&p[i].1, &x);
                    if !v.is_zero() {
                        out.push((e, v));
                    }
                    i += 1;
                }
            }
        }
        out
    }

    /// Full reduction of `p` modulo the listed (monic) basis elements.
    pub fn reduce(&self, p: &RawPoly, basis: &[&RawPoly]) -> RawPoly {
        let mut rest: Vec<RawTerm> = p.terms.clone();
        let mut done: Vec<RawTerm> = Vec::new();
        // `rest` shrinks from the front; keep an offset to avoid O(n) removals
        let mut start = 0;
        while start < rest.len() {
            let (lm, lc) = (&rest[start].0, &rest[start].1);
            let reducer = basis.iter().find(|g| divides(g.lm(), lm));
            match reducer {
                Some(g) => {
                    let m: Vec<u32> = lm.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
                    let c = self.domain.div(lc, &g.terms[0].1).expect("monic basis");
                    let tail = &rest[start..];
                    rest = self.sub_mul(tail, &c, &m, &g.terms);
                    start = 0;
                }
                None => {
                    done.push(rest[start].clone());
                    start += 1;
                }
            }
        }
        RawPoly { terms: done }
    }

    fn s_poly(&self, f: &RawPoly, g: &RawPoly, l: &[u32]) -> RawPoly {
        let mf: Vec<u32> = l.iter().zip(f.lm()).map(|(a, b)| a - b).collect();
        let mg: Vec<u32> = l.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
        let d = self.domain;
        let cf = d.inv(&f.terms[0].1).expect("nonzero");
        let cg = d.inv(&g.terms[0].1).expect("nonzero");
        let a: Vec<RawTerm> = f
            .terms
            .iter()
            .map(|(e, c)| (e.iter().zip(&mf).map(|(x, y)| x + y).collect(), d.mul(c, &cf)))
            .collect();
        RawPoly { terms: self.sub_mul(&a, &cg, &mg, &g.terms) }
    }

    /// Gebauer–Möller update after adding `store[h]`.
    fn update(&self, store: &[RawPoly], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize) {
        let lh = store[h].lm().to_vec();
        let mut candidates: Vec<Pair> = active
            .iter()
            .map(|&g| Pair { i: g, j: h, lcm: lcm(store[g].lm(), &lh) })
            .collect();
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = candidates.pop() {
            let copr = coprime(store[p.i].lm(), &lh);
            let dominated = candidates.iter().chain(kept.iter()).any(|q| divides(&q.lcm, &p.lcm));
            if copr || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !coprime(store[p.i].lm(), &lh));
        pairs.retain(|p| {
            !(divides(&lh, &p.lcm)
                && lcm(store[p.i].lm(), &lh) != p.lcm
                && lcm(store[p.j].lm(), &lh) != p.lcm)
        });
        pairs.extend(kept);
        active.retain(|&g| !divides(&lh, store[g].lm()));
        active.push(h);
    }

    /// Reduced Gröbner basis (monic, sorted by leading monomial descending).
    pub fn groebner(&self, input: Vec<RawPoly>) -> Result<Vec<RawPoly>, BudgetExceeded> {
        let mut store: Vec<RawPoly> = Vec::new();
        let mut active: Vec<usize> = Vec::new();
        let mut pairs: Vec<Pair> = Vec::new();
        let mut steps = 0usize;

        let add = |h: RawPoly,
                       store: &mut Vec<RawPoly>,
                       active: &mut Vec<usize>,
                       pairs: &mut Vec<Pair>|
         -> bool {
            let mut h = h;
            self.monic(&mut h);
            let unit = h.is_constant();
            store.push(h);
            let idx = store.len() - 1;
            self.update(store, active, pairs, idx);
            unit
        };

        let mut input = input;
        input.retain(|p| !p.is_zero());
        input.sort_by(|a, b| self.order.cmp(a.lm(), b.lm()));
        for f in input {
            let basis: Vec<&RawPoly> = active.iter().map(|&i| &store[i]).collect();
            let h = self.reduce(&f, &basis);
            if h.is_zero() {
                continue;
            }
            if add(h, &mut store, &mut active, &mut pairs) {
                return Ok(vec![store.pop().expect("just added")]);
            }
        }

        while !pairs.is_empty() {
            let (best, _) = pairs
                .iter()
                .enumerate()
                .min_by(|a, b| self.order.cmp(&a.1.lcm, &b.1.lcm))
                .expect("nonempty");
            let pair = pairs.swap_remove(best);
            steps += 1;
            if steps > self.budget {
                return Err(BudgetExceeded { budget: self.budget });
            }
            let s = self.s_poly(&store[pair.i], &store[pair.j], &pair.lcm);
            let basis: Vec<&RawPoly> = active.iter().map(|&i| &store[i]).collect();
            let h = self.reduce(&s, &basis);
            if h.is_zero() {
                continue;
            }
            if add(h, &mut store, &mut active, &mut pairs) {
                return Ok(vec![store.pop().expect("just added")]);
            }
        }

        // inter-reduce the minimal basis
        let minimal: Vec<RawPoly> = active.iter().map(|&i| store[i].clone()).collect();
        let mut reduced = Vec::with_capacity(minimal.len());
        for (k, g) in minimal.iter().enumerate() {
            let others: Vec<&RawPoly> =
                minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, p)| p).collect();
            let head = RawPoly { terms: vec![g.terms[0].clone()] };
            let tail = RawPoly { terms: g.terms[1..].to_vec() };
            let tail = self.reduce(&tail, &others);
            let mut terms = head.terms;
            terms.extend(tail.terms);
            let mut p = RawPoly { terms };
            self.monic(&mut p);
            reduced.push(p);
        }
        reduced.sort_by(|a, b| self.order.cmp(b.lm(), a.lm()));
        Ok(reduced)
    }

    /// Whether every S-polynomial of the basis reduces to zero.
    pub fn is_groebner(&self, basis: &[RawPoly]) -> bool {
        let refs: Vec<&RawPoly> = basis.iter().collect();
        for i in 0..basis.len() {
            for j in i + 1..basis.len() {
                let l = lcm(basis[i].lm(), basis[j].lm());
                let s = self.s_poly(&basis[i], &basis[j], &l);
                if !self.reduce(&s, &refs).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}
