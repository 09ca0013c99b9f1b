//! Dense univariate polynomials over `F_p`: Euclid, root finding and interpolation.
//!
//! Coefficients are stored low degree first with no trailing zeros.

use rand::Rng;

use super::modular::{add_mod, inv_mod, mul_mod, sub_mod};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    pub coeffs: Vec<u64>,
    pub modulus: u64,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<u64>, modulus: u64) -> Self {
        for c in coeffs.iter_mut() {
            *c %= modulus;
        }
        let mut p = UniPoly { coeffs, modulus };
        p.trim();
        p
    }

    pub fn zero(modulus: u64) -> Self {
        UniPoly { coeffs: Vec::new(), modulus }
    }

    /// The monomial `x`.
    pub fn x(modulus: u64) -> Self {
        UniPoly::new(vec![0, 1], modulus)
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.modulus;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| add_mod(mul_mod(acc, x, p), c, p))
    }

    pub fn add(&self, other: &Self) -> Self {
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                add_mod(
                    *self.coeffs.get(i).unwrap_or(&0),
                    *other.coeffs.get(i).unwrap_or(&0),
                    p,
                )
            })
            .collect();
        UniPoly::new(c, p)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let p = self.modulus;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                sub_mod(
                    *self.coeffs.get(i).unwrap_or(&0),
                    *other.coeffs.get(i).unwrap_or(&0),
                    p,
                )
            })
            .collect();
        UniPoly::new(c, p)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let p = self.modulus;
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(p);
        }
        let mut c = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = add_mod(c[i + j], mul_mod(a, b, p), p);
            }
        }
        UniPoly::new(c, p)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let p = self.modulus;
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = inv_mod(divisor.coeffs[dd], p).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (UniPoly::zero(p), self.clone());
        }
        let mut quot = vec![0u64; rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = mul_mod(rem[i], lead_inv, p);
            if c == 0 {
                continue;
            }
            quot[i - dd] = c;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = sub_mod(rem[i - dd + j], mul_mod(c, d, p), p);
            }
        }
        (UniPoly::new(quot, p), UniPoly::new(rem, p))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    pub fn monic(&self) -> Self {
        match self.coeffs.last() {
            None => self.clone(),
            Some(&lead) => {
                let inv = inv_mod(lead, self.modulus).expect("nonzero");
                UniPoly::new(
                    self.coeffs.iter().map(|&c| mul_mod(c, inv, self.modulus)).collect(),
                    self.modulus,
                )
            }
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `self^e mod modulus_poly`.
    pub fn pow_mod(&self, mut e: u64, modulus_poly: &Self) -> Self {
        let p = self.modulus;
        let mut acc = UniPoly::new(vec![1], p).rem(modulus_poly);
        let mut base = self.rem(modulus_poly);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus_poly);
            }
            base = base.mul(&base).rem(modulus_poly);
            e >>= 1;
        }
        acc
    }

    /// All distinct roots in `F_p`, sorted ascending.
    ///
    /// The zero polynomial has every element as a root; callers must handle it
    /// before asking (this returns an empty list for it).
    pub fn roots<R: Rng>(&self, rng: &mut R) -> Vec<u64> {
        let p = self.modulus;
        if self.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        if p < 64 {
            out = (0..p).filter(|&x| self.eval(x) == 0).collect();
            return out;
        }
        // split off the product of linear factors: gcd(f, x^p - x)
        let f = self.monic();
        let xp = UniPoly::x(p).pow_mod(p, &f);
        let linear = f.gcd(&xp.sub(&UniPoly::x(p)));
        split_linear(&linear, rng, &mut out);
        out.sort_unstable();
        out
    }

    /// Lagrange interpolation through `(xs[i], ys[i])` with distinct `xs`.
    pub fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Self {
        let mut acc = UniPoly::zero(p);
        for (i, (&xi, &yi)) in xs.iter().zip(ys).enumerate() {
            if yi == 0 {
                continue;
            }
            let mut basis = UniPoly::new(vec![1], p);
            let mut denom = 1u64;
            for (j, &xj) in xs.iter().enumerate() {
                if i == j {
                    continue;
                }
                basis = basis.mul(&UniPoly::new(vec![sub_mod(0, xj, p), 1], p));
                denom = mul_mod(denom, sub_mod(xi, xj, p), p);
            }
            let scale = mul_mod(yi, inv_mod(denom, p).expect("distinct nodes"), p);
            acc = acc.add(&UniPoly::new(
                basis.coeffs.iter().map(|&c| mul_mod(c, scale, p)).collect(),
                p,
            ));
        }
        acc
    }
}

/// Equal-degree splitting of a squarefree product of distinct linear factors.
fn split_linear<R: Rng>(f: &UniPoly, rng: &mut R, out: &mut Vec<u64>) {
    let p = f.modulus;
    match f.degree() {
        None | Some(0) => {}
        Some(1) => {
            let f = f.monic();
            out.push(sub_mod(0, f.coeffs[0], p));
        }
        Some(_) => loop {
            let shift = rng.gen_range(0..p);
            let h = UniPoly::new(vec![shift, 1], p).pow_mod((p - 1) / 2, f);
            let g = f.gcd(&h.sub(&UniPoly::new(vec![1], p)));
            let dg = g.degree().unwrap_or(0);
            if dg > 0 && dg < f.degree().unwrap_or(0) {
                let (q, _) = f.div_rem(&g);
                split_linear(&g, rng, out);
                split_linear(&q, rng, out);
                return;
            }
        },
    }
}

/// Determinant over `F_p` by Gaussian elimination.
pub fn determinant_mod(mut m: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = m.len();
    let mut det = 1u64;
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| m[r][col] != 0) else {
            return 0;
        };
        if piv != col {
            m.swap(piv, col);
            det = sub_mod(0, det, p);
        }
        det = mul_mod(det, m[col][col], p);
        let inv = inv_mod(m[col][col], p).expect("nonzero pivot");
        for r in col + 1..n {
            if m[r][col] == 0 {
                continue;
            }
            let factor = mul_mod(m[r][col], inv, p);
            for c in col..n {
                let v = mul_mod(factor, m[col][c], p);
                m[r][c] = sub_mod(m[r][c], v, p);
            }
        }
    }
    det
}

/// Sylvester determinant of two coefficient lists (low degree first) with
/// the given formal degrees; zero leading entries are kept.
pub fn sylvester_resultant(a: &[u64], da: usize, b: &[u64], db: usize, p: u64) -> u64 {
    let n = da + db;
    if n == 0 {
        return 1;
    }
    let coeff = |v: &[u64], i: usize| *v.get(i).unwrap_or(&0);
    let mut m = vec![vec![0u64; n]; n];
    for row in 0..db {
        for k in 0..=da {
            m[row][row + k] = coeff(a, da - k);
        }
    }
    for row in 0..da {
        for k in 0..=db {
            m[db + row][row + k] = coeff(b, db - k);
        }
    }
    determinant_mod(m, p)
}
