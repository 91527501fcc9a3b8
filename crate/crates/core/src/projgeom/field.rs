use super::PlaneError;

/// Finite field of order `q = p^k`, with elements encoded as `0..q`.
///
/// An element's code is its coefficient vector in base `p` with respect to
/// a fixed irreducible modulus, `c_0 + c_1 p + ... + c_{k-1} p^(k-1)`. Prime
/// fields use residues directly.
#[derive(Clone, Debug)]
pub struct Fq {
    q: u32,
    p: u32,
    modulus: Vec<u32>,
    add: Vec<u32>,
    mul: Vec<u32>,
}

/// Monic irreducible polynomials (low-degree coefficient first, leading 1
/// omitted) used for the non-prime orders within the default bound.
const MODULUS_TABLE: &[(u32, &[u32])] = &[
    (4, &[1, 1]),        // x^2 + x + 1 over F_2
    (8, &[1, 1, 0]),     // x^3 + x + 1 over F_2
    (9, &[1, 0]),        // x^2 + 1 over F_3
    (16, &[1, 1, 0, 0]), // x^4 + x + 1 over F_2
];

/// `Some((p, k))` when `q = p^k` with `p` prime and `k >= 1`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl Fq {
    pub fn new(q: u32) -> Result<Self, PlaneError> {
        let (p, k) = prime_power(q).ok_or(PlaneError::NotPrimePower(q))?;
        let modulus = if k == 1 {
            Vec::new()
        } else {
            MODULUS_TABLE
                .iter()
                .find(|(order, _)| *order == q)
                .map(|(_, m)| m.to_vec())
                .unwrap_or_else(|| find_irreducible(p, k as usize))
        };
        let mut f = Self {
            q,
            p,
            modulus,
            add: Vec::new(),
            mul: Vec::new(),
        };
        let n = q as usize;
        f.add = (0..n * n)
            .map(|i| f.slow_add((i / n) as u32, (i % n) as u32))
            .collect();
        f.mul = (0..n * n)
            .map(|i| f.slow_mul((i / n) as u32, (i % n) as u32))
            .collect();
        Ok(f)
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse exists")
    }

    /// `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (1..self.q).find(|&b| self.mul(a, b) == 1)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let k = self.modulus.len().max(1);
        let mut d = Vec::with_capacity(k);
        for _ in 0..k {
            d.push(a % self.p);
            a /= self.p;
        }
        d
    }

    fn encode(&self, d: &[u32]) -> u32 {
        d.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    fn slow_add(&self, a: u32, b: u32) -> u32 {
        let (da, db) = (self.digits(a), self.digits(b));
        let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % self.p).collect();
        self.encode(&s)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        if self.modulus.is_empty() {
            return (a * b) % self.p;
        }
        let (da, db) = (self.digits(a), self.digits(b));
        let k = self.modulus.len();
        let mut prod = vec![0u32; 2 * k - 1];
        for (i, x) in da.iter().enumerate() {
            for (j, y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % self.p;
            }
        }
        // x^k = -(m_0 + m_1 x + ... + m_{k-1} x^{k-1})
        for top in (k..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, m) in self.modulus.iter().enumerate() {
                let sub = (c * m) % self.p;
                prod[top - k + i] = (prod[top - k + i] + self.p - sub) % self.p;
            }
        }
        self.encode(&prod[..k])
    }
}

/// Smallest monic irreducible of degree `k` over `F_p` (coefficients low
/// first, leading one omitted), found by trial division.
fn find_irreducible(p: u32, k: usize) -> Vec<u32> {
    let count = (p as usize).pow(k as u32);
    let poly = |code: usize, deg: usize| -> Vec<u32> {
        let mut c = Vec::with_capacity(deg + 1);
        let mut x = code;
        for _ in 0..deg {
            c.push((x % p as usize) as u32);
            x /= p as usize;
        }
        c.push(1);
        c
    };
    let divides = |d: &[u32], n: &[u32]| -> bool {
        let mut r = n.to_vec();
        let dd = d.len() - 1;
        while r.len() > dd {
            let lead = *r.last().unwrap();
            let shift = r.len() - 1 - dd;
            for (i, c) in d.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p * p - (lead * c) % p) % p;
            }
            r.pop();
        }
        r.iter().all(|&c| c == 0)
    };
    (0..count)
        .map(|code| poly(code, k))
        .find(|cand| {
            (1..=k / 2)
                .all(|deg| (0..(p as usize).pow(deg as u32)).all(|c| !divides(&poly(c, deg), cand)))
        })
        .map(|mut m| {
            m.pop();
            m
        })
        .expect("irreducible polynomials exist in every degree")
}
