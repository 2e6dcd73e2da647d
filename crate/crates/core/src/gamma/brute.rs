//! Vector-scan evaluation of Γ and Π_r. Nothing here solves a linear
//! system: subspaces are expanded into their element sets and the defining
//! conditions are tested pointwise.

use crate::error::{Error, Result};
use crate::exactla::{FiniteField, Matrix};
use crate::modspace::Subspace;

/// Largest |W| the scanner accepts.
pub const MAX_SCAN_SIZE: usize = 1024;

/// Vectors of 𝕂ⁿ encoded as integers in base p, with an addition table.
pub struct ScanSpace<F: FiniteField> {
    field: F,
    n: usize,
    size: usize,
    add: Vec<u16>,
    neg: Vec<u16>,
}

/// A subspace expanded into its elements and a membership table.
pub struct Expanded {
    pub elements: Vec<u16>,
    pub member: Vec<bool>,
}

impl<F: FiniteField> ScanSpace<F> {
    pub fn new(field: &F, n: usize) -> Result<Self> {
        let p = field.order();
        let size = (0..n).try_fold(1usize, |acc, _| acc.checked_mul(p).filter(|&s| s <= MAX_SCAN_SIZE));
        let Some(size) = size else {
            return Err(Error::TooLarge(format!("GF({p})^{n} has more than {MAX_SCAN_SIZE} vectors")));
        };
        let mut s = ScanSpace { field: field.clone(), n, size, add: Vec::new(), neg: Vec::new() };
        let vecs: Vec<Vec<F::Elem>> = (0..size).map(|i| s.decode(i)).collect();
        s.add = Vec::with_capacity(size * size);
        for u in &vecs {
            for v in &vecs {
                let w: Vec<F::Elem> = u.iter().zip(v).map(|(&a, &b)| field.add(a, b)).collect();
                s.add.push(s.encode(&w) as u16);
            }
        }
        s.neg = vecs
            .iter()
            .map(|u| s.encode(&u.iter().map(|&a| field.neg(a)).collect::<Vec<_>>()) as u16)
            .collect();
        Ok(s)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn decode(&self, mut i: usize) -> Vec<F::Elem> {
        let p = self.field.order();
        (0..self.n)
            .map(|_| {
                let d = i % p;
                i /= p;
                self.field.element(d)
            })
            .collect()
    }

    pub fn encode(&self, v: &[F::Elem]) -> usize {
        let p = self.field.order();
        v.iter().rev().fold(0, |acc, &e| acc * p + self.field.index_of(e))
    }

    #[inline]
    fn add(&self, u: u16, v: u16) -> u16 {
        self.add[u as usize * self.size + v as usize]
    }

    #[inline]
    fn sub(&self, u: u16, v: u16) -> u16 {
        self.add(u, self.neg[v as usize])
    }

    /// All elements of `x`: every 𝕂-combination of its basis rows.
    pub fn expand(&self, x: &Subspace<F>) -> Expanded {
        let f = &self.field;
        let p = f.order();
        let rows: Vec<u16> = (0..x.dim()).map(|r| self.encode(x.basis().row(r)) as u16).collect();
        // multiples[r][c] = c·row_r
        let multiples: Vec<Vec<u16>> = rows
            .iter()
            .enumerate()
            .map(|(r, _)| {
                (0..p)
                    .map(|c| {
                        let scaled: Vec<F::Elem> =
                            x.basis().row(r).iter().map(|&e| f.mul(f.element(c), e)).collect();
                        self.encode(&scaled) as u16
                    })
                    .collect()
            })
            .collect();
        let mut elements = vec![0u16];
        for m in &multiples {
            let mut next = Vec::with_capacity(elements.len() * p);
            for &e in &elements {
                for &mv in m {
                    next.push(self.add(e, mv));
                }
            }
            elements = next;
        }
        let mut member = vec![false; self.size];
        for &e in &elements {
            member[e as usize] = true;
        }
        Expanded { elements, member }
    }

    /// Turns a membership table into a canonical subspace, checking that the
    /// set really is one.
    fn collect(&self, hits: &[bool]) -> Result<Subspace<F>> {
        let elems: Vec<usize> = (0..self.size).filter(|&i| hits[i]).collect();
        let rows: Vec<Vec<F::Elem>> = elems.iter().map(|&i| self.decode(i)).collect();
        let m = Matrix::from_rows(&self.field, self.n, &rows)?;
        let s = Subspace::span_of(&m);
        let expected = self.field.order().pow(s.dim() as u32);
        if elems.len() != expected {
            return Err(Error::OracleInconsistency(format!(
                "scan produced {} vectors spanning a space of {} vectors",
                elems.len(),
                expected
            )));
        }
        Ok(s)
    }

    pub fn gamma(&self, x: &Expanded, a: &Expanded, y: &Expanded, b: &Expanded, z: &Expanded) -> Result<Subspace<F>> {
        let mut hits = vec![false; self.size];
        for &alpha in &a.elements {
            for &zeta in &z.elements {
                let omega = self.sub(zeta, alpha);
                if hits[omega as usize] {
                    continue;
                }
                let oa = self.add(omega, alpha);
                for &beta in &b.elements {
                    if x.member[self.add(omega, beta) as usize] && y.member[self.add(oa, beta) as usize] {
                        hits[omega as usize] = true;
                        break;
                    }
                }
            }
        }
        self.collect(&hits)
    }

    pub fn pi(&self, r: F::Elem, x: &Expanded, a: &Expanded, z: &Expanded) -> Result<Subspace<F>> {
        let f = &self.field;
        let one_minus_r = f.sub(f.one(), r);
        let mut hits = vec![false; self.size];
        for &xi in &x.elements {
            for &zeta in &z.elements {
                if !a.member[self.sub(zeta, xi) as usize] {
                    continue;
                }
                let xv = self.decode(xi as usize);
                let zv = self.decode(zeta as usize);
                let w: Vec<F::Elem> = xv
                    .iter()
                    .zip(&zv)
                    .map(|(&s, &t)| f.add(f.mul(one_minus_r, s), f.mul(r, t)))
                    .collect();
                hits[self.encode(&w)] = true;
            }
        }
        self.collect(&hits)
    }
}

/// Γ by exhaustive vector scan. Builds the scan tables on every call; bulk
/// callers should hold a [`ScanSpace`] and expanded subspaces instead.
pub fn gamma_bruteforce<F: FiniteField>(
    x: &Subspace<F>,
    a: &Subspace<F>,
    y: &Subspace<F>,
    b: &Subspace<F>,
    z: &Subspace<F>,
) -> Result<Subspace<F>> {
    let n = x.ambient_dim();
    if [a, y, b, z].iter().any(|s| s.ambient_dim() != n) {
        return Err(Error::MixedSpaces);
    }
    let s = ScanSpace::new(x.field(), n)?;
    s.gamma(&s.expand(x), &s.expand(a), &s.expand(y), &s.expand(b), &s.expand(z))
}

pub fn pi_bruteforce<F: FiniteField>(r: F::Elem, x: &Subspace<F>, a: &Subspace<F>, z: &Subspace<F>) -> Result<Subspace<F>> {
    let n = x.ambient_dim();
    if a.ambient_dim() != n || z.ambient_dim() != n {
        return Err(Error::MixedSpaces);
    }
    let s = ScanSpace::new(x.field(), n)?;
    s.pi(r, &s.expand(x), &s.expand(a), &s.expand(z))
}
