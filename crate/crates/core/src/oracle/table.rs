use std::cell::RefCell;
use std::collections::HashMap;

use super::enumerate::Grassmannian;
use crate::exactla::FiniteField;
use crate::gamma::{gamma_extended, pi_extended, ScanSpace};

/// Largest table (entries) that will be materialized.
pub const MAX_TABLE_ENTRIES: usize = 1 << 24;

/// Γ on indices of an enumerated Grassmannian.
pub trait Quintary {
    fn size(&self) -> usize;
    fn gamma(&self, x: usize, a: usize, y: usize, b: usize, z: usize) -> usize;
}

/// Π_r on indices, for a fixed scalar r.
pub trait Ternary {
    fn size(&self) -> usize;
    fn pi(&self, x: usize, a: usize, z: usize) -> usize;
}

/// Fully materialized Γ: N⁵ entries.
#[derive(Clone, Debug)]
pub struct GammaTable {
    n: usize,
    data: Vec<u16>,
}

impl GammaTable {
    /// Tabulates the extended route, or `None` if N⁵ exceeds the ceiling.
    pub fn build<F: FiniteField>(g: &Grassmannian<F>) -> Option<Self> {
        let n = g.len();
        let total = n.checked_pow(5).filter(|&t| t <= MAX_TABLE_ENTRIES)?;
        let e = g.elements();
        let mut data = Vec::with_capacity(total);
        for z in e {
            for b in e {
                for y in e {
                    for a in e {
                        for x in e {
                            data.push(g.expect_index(&gamma_extended(x, a, y, b, z)) as u16);
                        }
                    }
                }
            }
        }
        Some(GammaTable { n, data })
    }

    /// Tabulates the vector-scan route instead.
    pub fn build_bruteforce<F: FiniteField>(g: &Grassmannian<F>) -> Option<crate::error::Result<Self>> {
        let n = g.len();
        let total = n.checked_pow(5).filter(|&t| t <= MAX_TABLE_ENTRIES)?;
        let scan = match ScanSpace::new(g.space().field(), g.space().dim()) {
            Ok(s) => s,
            Err(e) => return Some(Err(e)),
        };
        let ex: Vec<_> = g.elements().iter().map(|s| scan.expand(s)).collect();
        let mut data = Vec::with_capacity(total);
        for z in &ex {
            for b in &ex {
                for y in &ex {
                    for a in &ex {
                        for x in &ex {
                            match scan.gamma(x, a, y, b, z) {
                                Ok(s) => data.push(g.expect_index(&s) as u16),
                                Err(e) => return Some(Err(e)),
                            }
                        }
                    }
                }
            }
        }
        Some(Ok(GammaTable { n, data }))
    }

    pub fn raw(&self) -> &[u16] {
        &self.data
    }

    #[inline]
    fn offset(&self, x: usize, a: usize, y: usize, b: usize, z: usize) -> usize {
        let n = self.n;
        (((z * n + b) * n + y) * n + a) * n + x
    }
}

impl Quintary for GammaTable {
    fn size(&self) -> usize {
        self.n
    }

    #[inline]
    fn gamma(&self, x: usize, a: usize, y: usize, b: usize, z: usize) -> usize {
        self.data[self.offset(x, a, y, b, z)] as usize
    }
}

/// Γ computed on demand through the extended route, with a memo.
pub struct DirectGamma<'g, F: FiniteField> {
    grass: &'g Grassmannian<F>,
    memo: RefCell<HashMap<[u16; 5], u16>>,
}

impl<'g, F: FiniteField> DirectGamma<'g, F> {
    pub fn new(grass: &'g Grassmannian<F>) -> Self {
        DirectGamma { grass, memo: RefCell::new(HashMap::new()) }
    }
}

impl<F: FiniteField> Quintary for DirectGamma<'_, F> {
    fn size(&self) -> usize {
        self.grass.len()
    }

    fn gamma(&self, x: usize, a: usize, y: usize, b: usize, z: usize) -> usize {
        let key = [x as u16, a as u16, y as u16, b as u16, z as u16];
        if let Some(&v) = self.memo.borrow().get(&key) {
            return v as usize;
        }
        let e = self.grass.elements();
        let v = self.grass.expect_index(&gamma_extended(&e[x], &e[a], &e[y], &e[b], &e[z]));
        self.memo.borrow_mut().insert(key, v as u16);
        v
    }
}

/// Γ for the enumerated space: a full table when small, on-demand otherwise.
pub enum GammaOracle<'g, F: FiniteField> {
    Table(GammaTable),
    Direct(DirectGamma<'g, F>),
}

impl<'g, F: FiniteField> GammaOracle<'g, F> {
    pub fn new(grass: &'g Grassmannian<F>) -> Self {
        match GammaTable::build(grass) {
            Some(t) => GammaOracle::Table(t),
            None => GammaOracle::Direct(DirectGamma::new(grass)),
        }
    }

    pub fn is_materialized(&self) -> bool {
        matches!(self, GammaOracle::Table(_))
    }
}

impl<F: FiniteField> Quintary for GammaOracle<'_, F> {
    fn size(&self) -> usize {
        match self {
            GammaOracle::Table(t) => t.size(),
            GammaOracle::Direct(d) => d.size(),
        }
    }

    #[inline]
    fn gamma(&self, x: usize, a: usize, y: usize, b: usize, z: usize) -> usize {
        match self {
            GammaOracle::Table(t) => t.gamma(x, a, y, b, z),
            GammaOracle::Direct(d) => d.gamma(x, a, y, b, z),
        }
    }
}

/// Materialized Π_r for one scalar: N³ entries.
#[derive(Clone, Debug)]
pub struct PiTable {
    n: usize,
    data: Vec<u16>,
}

impl PiTable {
    pub fn build<F: FiniteField>(g: &Grassmannian<F>, r: F::Elem) -> Self {
        let n = g.len();
        let e = g.elements();
        let mut data = Vec::with_capacity(n * n * n);
        for z in e {
            for a in e {
                for x in e {
                    data.push(g.expect_index(&pi_extended(r, x, a, z)) as u16);
                }
            }
        }
        PiTable { n, data }
    }
}

impl Ternary for PiTable {
    fn size(&self) -> usize {
        self.n
    }

    #[inline]
    fn pi(&self, x: usize, a: usize, z: usize) -> usize {
        self.data[(z * self.n + a) * self.n + x] as usize
    }
}
