use super::Rational;

/// Sparse coordinate vector: `(index, value)` pairs sorted by index, no zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// `y + a * x` for sorted sparse vectors.
pub fn axpy(y: &[(usize, Rational)], a: &Rational, x: &[(usize, Rational)]) -> SparseVec {
    if a.is_zero() {
        return y.to_vec();
    }
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() && j < x.len() {
        let (yi, yv) = &y[i];
        let (xi, xv) = &x[j];
        match yi.cmp(xi) {
            std::cmp::Ordering::Less => {
                out.push((*yi, yv.clone()));
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((*xi, a * xv));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = yv.add_mul(a, xv);
                if !v.is_zero() {
                    out.push((*yi, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend(y[i..].iter().cloned());
    out.extend(x[j..].iter().map(|(k, v)| (*k, a * v)));
    out
}

pub fn scale(x: &[(usize, Rational)], a: &Rational) -> SparseVec {
    if a.is_zero() {
        return Vec::new();
    }
    x.iter().map(|(k, v)| (*k, v * a)).collect()
}

pub fn get(x: &[(usize, Rational)], idx: usize) -> Rational {
    match x.binary_search_by_key(&idx, |(k, _)| *k) {
        Ok(p) => x[p].1.clone(),
        Err(_) => Rational::zero(),
    }
}

/// Accumulates unsorted `(index, value)` contributions into a [`SparseVec`].
#[derive(Debug, Clone, Default)]
pub struct VecBuilder {
    items: Vec<(usize, Rational)>,
}

impl VecBuilder {
    pub fn new() -> Self {
        Self { items: Vec::new() }
    }

    pub fn push(&mut self, idx: usize, v: Rational) {
        if !v.is_zero() {
            self.items.push((idx, v));
        }
    }

    pub fn add_scaled(&mut self, x: &[(usize, Rational)], a: &Rational) {
        if a.is_zero() {
            return;
        }
        for (k, v) in x {
            self.items.push((*k, v * a));
        }
    }

    pub fn add_int(&mut self, idx: usize, n: i64) {
        if n != 0 {
            self.items.push((idx, Rational::from_int(n)));
        }
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn finish(mut self) -> SparseVec {
        self.items.sort_by_key(|(k, _)| *k);
        let mut out: SparseVec = Vec::with_capacity(self.items.len());
        for (k, v) in self.items {
            match out.last_mut() {
                Some((lk, lv)) if *lk == k => *lv += &v,
                _ => out.push((k, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        out
    }
}

pub fn to_dense(x: &[(usize, Rational)], dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (k, v) in x {
        out[*k] = v.clone();
    }
    out
}

pub fn from_dense(x: &[Rational]) -> SparseVec {
    x.iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(k, v)| (k, v.clone()))
        .collect()
}
