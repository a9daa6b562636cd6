//! Dense polynomials over a small prime field, coefficients low to high.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub(crate) type Fp = Vec<u64>;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Field {
    pub p: u64,
}

impl Field {
    pub fn new(p: u64) -> Self {
        Field { p }
    }

    fn trim(mut a: Fp) -> Fp {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn inv(&self, a: u64) -> u64 {
        self.pow_u(a, self.p - 2)
    }

    fn pow_u(&self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1u64;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % self.p;
            }
            a = a * a % self.p;
            e >>= 1;
        }
        r
    }

    pub fn norm(&self, a: Fp) -> Fp {
        Self::trim(a.into_iter().map(|c| c % self.p).collect())
    }

    pub fn sub(&self, a: &Fp, b: &Fp) -> Fp {
        let n = a.len().max(b.len());
        let out = (0..n)
            .map(|i| {
                (a.get(i).copied().unwrap_or(0) + self.p - b.get(i).copied().unwrap_or(0)) % self.p
            })
            .collect();
        Self::trim(out)
    }

    pub fn scale(&self, a: &Fp, c: u64) -> Fp {
        Self::trim(a.iter().map(|&x| x * c % self.p).collect())
    }

    pub fn mul(&self, a: &Fp, b: &Fp) -> Fp {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        Self::trim(out)
    }

    pub fn divrem(&self, a: &Fp, b: &Fp) -> (Fp, Fp) {
        assert!(!b.is_empty(), "division by zero polynomial mod p");
        let mut r = a.clone();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let inv = self.inv(*b.last().unwrap());
        let mut q = vec![0u64; r.len() - b.len() + 1];
        for k in (0..q.len()).rev() {
            let c = r[k + b.len() - 1] * inv % self.p;
            q[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.iter().enumerate() {
                r[k + j] = (r[k + j] + self.p - c * bj % self.p) % self.p;
            }
        }
        (Self::trim(q), Self::trim(r))
    }

    pub fn rem(&self, a: &Fp, b: &Fp) -> Fp {
        self.divrem(a, b).1
    }

    pub fn monic(&self, a: &Fp) -> Fp {
        match a.last() {
            None => Vec::new(),
            Some(&l) => self.scale(a, self.inv(l)),
        }
    }

    pub fn gcd(&self, a: &Fp, b: &Fp) -> Fp {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// `s` with `s·a ≡ 1 (mod m)`, if `a` is a unit.
    pub fn inverse_mod(&self, a: &Fp, m: &Fp) -> Option<Fp> {
        let (mut r0, mut r1) = (m.clone(), self.rem(a, m));
        let (mut s0, mut s1): (Fp, Fp) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (q, r) = self.divrem(&r0, &r1);
            let s = self.sub(&s0, &self.mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        if r0.len() != 1 {
            return None;
        }
        let c = self.inv(r0[0]);
        Some(self.rem(&self.scale(&s0, c), m))
    }

    pub fn derivative(&self, a: &Fp) -> Fp {
        Self::trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * (i as u64 % self.p) % self.p)
                .collect(),
        )
    }

    pub fn powmod(&self, a: &Fp, mut e: u64, m: &Fp) -> Fp {
        let mut base = self.rem(a, m);
        let mut r: Fp = self.rem(&vec![1], m);
        while e > 0 {
            if e & 1 == 1 {
                r = self.rem(&self.mul(&r, &base), m);
            }
            base = self.rem(&self.mul(&base, &base), m);
            e >>= 1;
        }
        r
    }

    pub fn is_squarefree(&self, a: &Fp) -> bool {
        let d = self.derivative(a);
        !d.is_empty() && self.gcd(a, &d).len() == 1
    }

    /// Monic irreducible factors of a square-free polynomial.
    pub fn factor_squarefree(&self, f: &Fp, rng: &mut ChaCha8Rng) -> Vec<Fp> {
        let mut f = self.monic(f);
        let mut out = Vec::new();
        let x: Fp = vec![0, 1];
        let mut h = x.clone();
        let mut d = 0usize;
        while f.len() > 1 {
            d += 1;
            if 2 * d > f.len() - 1 {
                out.push(f.clone());
                break;
            }
            h = self.powmod(&h, self.p, &f);
            let g = self.gcd(&self.sub(&h, &x), &f);
            if g.len() > 1 {
                self.split_equal_degree(&g, d, rng, &mut out);
                f = self.divrem(&f, &g).0;
                h = self.rem(&h, &f);
            }
        }
        out.sort();
        out
    }

    fn split_equal_degree(&self, g: &Fp, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<Fp>) {
        let n = g.len() - 1;
        if n == d {
            out.push(g.clone());
            return;
        }
        loop {
            let a: Fp = Self::trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            // a^((p^d - 1)/2) = (a · a^p · … · a^(p^(d-1)))^((p-1)/2)
            let mut c = self.rem(&a, g);
            let mut norm = c.clone();
            for _ in 1..d {
                c = self.powmod(&c, self.p, g);
                norm = self.rem(&self.mul(&norm, &c), g);
            }
            let b = self.powmod(&norm, (self.p - 1) / 2, g);
            let u = self.gcd(&self.sub(&b, &vec![1]), g);
            if u.len() > 1 && u.len() < g.len() {
                let v = self.divrem(g, &u).0;
                self.split_equal_degree(&u, d, rng, out);
                self.split_equal_degree(&self.monic(&v), d, rng, out);
                return;
            }
        }
    }
}
