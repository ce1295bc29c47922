//! Finite inverse semigroups given by a multiplication table.
//!
//! Elements are the indices `0..m`. Everything here works from the table
//! alone: inverses, idempotents, the natural partial order and its Möbius
//! function, D-classes with their maximal subgroups, the groupoid basis
//! product rule, Steinberg's isomorphism `φ: ℚD_k → M_{r_k}(ℚG_k)` and the
//! irreducible representations induced from the maximal subgroups.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rook::{enumerate_rook_monoid, PartialRanking};
use crate::Rational;

/// A validated finite inverse semigroup.
#[derive(Debug)]
pub struct FiniteInverseSemigroup {
    table: Vec<Vec<usize>>,
    inv: Vec<usize>,
    idempotent: Vec<bool>,
    // For each s, the pairs (t, μ(t, s)) over all t ≤ s.
    mobius_below: OnceLock<Vec<Vec<(usize, i64)>>>,
}

impl FiniteInverseSemigroup {
    /// Checks associativity and uniqueness of inverses.
    pub fn validate(table: Vec<Vec<usize>>) -> Result<Self> {
        let m = table.len();
        if m == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != m {
                return Err(Error::MalformedTable(format!("row {i} has {} entries, expected {m}", row.len())));
            }
            if let Some(&bad) = row.iter().find(|&&x| x >= m) {
                return Err(Error::MalformedTable(format!("row {i} contains {bad} >= {m}")));
            }
        }
        for a in 0..m {
            for b in 0..m {
                let ab = table[a][b];
                for c in 0..m {
                    if table[ab][c] != table[a][table[b][c]] {
                        return Err(Error::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let mut inv = Vec::with_capacity(m);
        for x in 0..m {
            let candidates: Vec<usize> = (0..m)
                .filter(|&y| table[table[x][y]][x] == x && table[table[y][x]][y] == y)
                .collect();
            if candidates.len() != 1 {
                return Err(Error::InverseCount { element: x, count: candidates.len() });
            }
            inv.push(candidates[0]);
        }
        let idempotent = (0..m).map(|x| table[x][x] == x).collect();
        Ok(FiniteInverseSemigroup { table, inv, idempotent, mobius_below: OnceLock::new() })
    }

    /// Parses the plain-text table format: `m`, then `m` rows of `m`
    /// whitespace-separated 0-based indices.
    pub fn parse_table(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (first_line, first) = lines
            .next()
            .ok_or_else(|| Error::Parse { line: 1, message: "missing size line".into() })?;
        let m: usize = first.trim().parse().map_err(|_| Error::Parse {
            line: first_line + 1,
            message: format!("invalid size {:?}", first.trim()),
        })?;
        let mut table = Vec::with_capacity(m);
        for (idx, line) in lines {
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: idx + 1,
                        message: format!("invalid entry {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            table.push(row);
        }
        if table.len() != m {
            return Err(Error::MalformedTable(format!("expected {m} rows, found {}", table.len())));
        }
        Self::validate(table)
    }

    pub fn to_table_text(&self) -> String {
        let mut out = format!("{}\n", self.size());
        for row in &self.table {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            out.push_str(&cells.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn size(&self) -> usize {
        self.table.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.idempotent[a]
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size()).filter(|&a| self.idempotent[a]).collect()
    }

    /// `s⁻¹s`.
    pub fn domain_idempotent(&self, s: usize) -> usize {
        self.mul(self.inv(s), s)
    }

    /// `ss⁻¹`.
    pub fn range_idempotent(&self, s: usize) -> usize {
        self.mul(s, self.inv(s))
    }

    /// Natural partial order: `t ≤ s` iff `t = es` for some idempotent `e`.
    pub fn leq(&self, t: usize, s: usize) -> bool {
        (0..self.size()).any(|e| self.idempotent[e] && self.mul(e, s) == t)
    }

    fn mobius_below(&self) -> &Vec<Vec<(usize, i64)>> {
        self.mobius_below.get_or_init(|| {
            let m = self.size();
            let below: Vec<Vec<usize>> = (0..m)
                .map(|s| (0..m).filter(|&t| self.leq(t, s)).collect())
                .collect();
            let mut out: Vec<Vec<(usize, i64)>> = vec![Vec::new(); m];
            for t in 0..m {
                // Elements above t, in an order extending ≤ (by down-set size).
                let mut above: Vec<usize> = (0..m).filter(|&u| below[u].contains(&t)).collect();
                above.sort_by_key(|&u| below[u].len());
                let mut mu: HashMap<usize, i64> = HashMap::new();
                for &s in &above {
                    let value = if s == t {
                        1
                    } else {
                        -above
                            .iter()
                            .filter(|&&u| u != s && below[s].contains(&u))
                            .map(|u| mu[u])
                            .sum::<i64>()
                    };
                    mu.insert(s, value);
                    out[s].push((t, value));
                }
            }
            for list in &mut out {
                list.sort_unstable();
            }
            out
        })
    }

    /// Möbius function of the natural partial order, by the standard
    /// recursion `μ(t,t) = 1`, `μ(t,s) = -Σ_{t ≤ u < s} μ(t,u)`.
    pub fn mobius(&self, t: usize, s: usize) -> Result<i64> {
        self.mobius_below()[s]
            .iter()
            .find(|(u, _)| *u == t)
            .map(|&(_, v)| v)
            .ok_or_else(|| Error::NotComparable(t.to_string(), s.to_string()))
    }

    /// Pairs `(t, μ(t, s))` for every `t ≤ s`.
    pub fn below(&self, s: usize) -> &[(usize, i64)] {
        &self.mobius_below()[s]
    }

    /// Groupoid basis rule: `⌊s⌋⌊t⌋ = ⌊st⌋` if `s⁻¹s = tt⁻¹`, else zero.
    pub fn groupoid_product(&self, s: usize, t: usize) -> Option<usize> {
        (self.domain_idempotent(s) == self.range_idempotent(t)).then(|| self.mul(s, t))
    }

    /// D-classes, ordered by their smallest element.
    pub fn d_classes(&self) -> Vec<DClassInfo> {
        let m = self.size();
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut root = x;
            while parent[root] != root {
                root = parent[root];
            }
            let mut cur = x;
            while parent[cur] != root {
                let next = parent[cur];
                parent[cur] = root;
                cur = next;
            }
            root
        }
        for s in 0..m {
            let a = find(&mut parent, self.domain_idempotent(s));
            let b = find(&mut parent, self.range_idempotent(s));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut by_root: Vec<(usize, Vec<usize>)> = Vec::new();
        for s in 0..m {
            let root = find(&mut parent, self.domain_idempotent(s));
            match by_root.iter_mut().find(|(r, _)| *r == root) {
                Some((_, members)) => members.push(s),
                None => by_root.push((root, vec![s])),
            }
        }
        by_root
            .into_iter()
            .enumerate()
            .map(|(index, (_, elements))| {
                let idempotents: Vec<usize> =
                    elements.iter().copied().filter(|&s| self.idempotent[s]).collect();
                let base = idempotents[0];
                let group: Vec<usize> = elements
                    .iter()
                    .copied()
                    .filter(|&s| self.domain_idempotent(s) == base && self.range_idempotent(s) == base)
                    .collect();
                let connectors = idempotents
                    .iter()
                    .map(|&a| {
                        if a == base {
                            base
                        } else {
                            *elements
                                .iter()
                                .find(|&&s| self.domain_idempotent(s) == base && self.range_idempotent(s) == a)
                                .expect("idempotents of a D-class are isomorphic")
                        }
                    })
                    .collect();
                DClassInfo { index, elements, idempotents, base, group, connectors }
            })
            .collect()
    }

    /// Steinberg's `φ(⌊s⌋) = (p_f⁻¹ s p_e) E_{f,e}` with `f = ss⁻¹`, `e = s⁻¹s`.
    pub fn steinberg_phi(&self, class: &DClassInfo, s: usize) -> Result<PhiImage> {
        if !class.contains(s) {
            return Err(Error::NotInClass { element: s, class: class.index });
        }
        let e = self.domain_idempotent(s);
        let f = self.range_idempotent(s);
        let pf = class.connector(f).expect("range idempotent lies in the class");
        let pe = class.connector(e).expect("domain idempotent lies in the class");
        let g = self.mul(self.mul(self.inv(pf), s), pe);
        Ok(PhiImage { group_element: g, row: f, col: e })
    }

    /// Inverse of [`steinberg_phi`](Self::steinberg_phi): `(g, f, e) ↦ p_f g p_e⁻¹`.
    pub fn steinberg_phi_inverse(&self, class: &DClassInfo, image: PhiImage) -> Result<usize> {
        if !class.group.contains(&image.group_element) {
            return Err(Error::NotInClass { element: image.group_element, class: class.index });
        }
        let pf = class.connector(image.row).ok_or(Error::NotIdempotent(image.row))?;
        let pe = class.connector(image.col).ok_or(Error::NotIdempotent(image.col))?;
        Ok(self.mul(self.mul(pf, image.group_element), self.inv(pe)))
    }

    /// `ρ̄(⌊s⌋) = E_{f,e} ⊗ ρ(p_f⁻¹ s p_e)` for `s ∈ D_k`, zero otherwise.
    pub fn evaluate_extended_irrep(
        &self,
        class: &DClassInfo,
        rho: &MatrixIrrep,
        s: usize,
    ) -> Result<RationalMatrix> {
        let r = class.idempotents.len();
        let d = rho.dimension();
        if !class.contains(s) {
            return Ok(RationalMatrix::zero(r * d, r * d));
        }
        let phi = self.steinberg_phi(class, s)?;
        let row = class.idempotent_position(phi.row).unwrap();
        let col = class.idempotent_position(phi.col).unwrap();
        let unit = RationalMatrix::unit(r, row, col);
        Ok(unit.kron(rho.image(phi.group_element)))
    }

    /// Linear extension of [`evaluate_extended_irrep`](Self::evaluate_extended_irrep)
    /// to a groupoid-basis coefficient vector.
    pub fn evaluate_extended_irrep_on(
        &self,
        class: &DClassInfo,
        rho: &MatrixIrrep,
        groupoid_coeffs: &[Rational],
    ) -> Result<RationalMatrix> {
        let n = class.idempotents.len() * rho.dimension();
        let mut out = RationalMatrix::zero(n, n);
        for (s, c) in groupoid_coeffs.iter().enumerate() {
            if !c.is_zero() && class.contains(s) {
                out = out.add(&self.evaluate_extended_irrep(class, rho, s)?.scale(*c));
            }
        }
        Ok(out)
    }

    /// `⌊p_b⌋ (Σ_x c(x)⌊x⌋) ⌊p_a⁻¹⌋` as groupoid-basis coefficients.
    pub fn fourier_basis_element(
        &self,
        class: &DClassInfo,
        b: usize,
        a: usize,
        coefficients: &[(usize, Rational)],
    ) -> Result<Vec<Rational>> {
        let pb = class.connector(b).ok_or(Error::NotIdempotent(b))?;
        let pa = class.connector(a).ok_or(Error::NotIdempotent(a))?;
        let pa_inv = self.inv(pa);
        let mut out = vec![Rational::zero(); self.size()];
        for &(x, c) in coefficients {
            if !class.group.contains(&x) {
                return Err(Error::NotInClass { element: x, class: class.index });
            }
            let left = self.groupoid_product(pb, x);
            if let Some(y) = left.and_then(|y| self.groupoid_product(y, pa_inv)) {
                out[y] += c;
            }
        }
        Ok(out)
    }

    /// Semigroup-basis coefficients to groupoid-basis coefficients:
    /// `g(σ) = Σ_{t ≥ σ} f(t)`.
    pub fn to_groupoid(&self, semigroup_coeffs: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.size()];
        for (t, c) in semigroup_coeffs.iter().enumerate() {
            if !c.is_zero() {
                for &(s, _) in self.below(t) {
                    out[s] += c;
                }
            }
        }
        out
    }

    /// Groupoid-basis coefficients to semigroup-basis coefficients via
    /// `⌊t⌋ = Σ_{s ≤ t} μ(s,t) s`.
    pub fn to_semigroup(&self, groupoid_coeffs: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.size()];
        for (t, c) in groupoid_coeffs.iter().enumerate() {
            if !c.is_zero() {
                for &(s, mu) in self.below(t) {
                    out[s] += c * Rational::from_integer(mu);
                }
            }
        }
        out
    }

    /// Convolution of semigroup-basis coefficient vectors.
    pub fn convolve(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.size()];
        for (s, ca) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (t, cb) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                out[self.mul(s, t)] += ca * cb;
            }
        }
        out
    }

    /// Product of groupoid-basis coefficient vectors via the groupoid rule.
    pub fn multiply_groupoid(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.size()];
        for (s, ca) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (t, cb) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                if let Some(st) = self.groupoid_product(s, t) {
                    out[st] += ca * cb;
                }
            }
        }
        out
    }

    /// The table of `R_n` in canonical enumeration order, with the
    /// rankings each index stands for.
    pub fn rook_monoid(n: usize) -> (FiniteInverseSemigroup, Vec<PartialRanking>) {
        let elements = enumerate_rook_monoid(n);
        let index: HashMap<&PartialRanking, usize> =
            elements.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let table = elements
            .iter()
            .map(|s| elements.iter().map(|t| index[&s.compose_unchecked(t)]).collect())
            .collect();
        let semigroup = Self::validate(table).expect("R_n is an inverse monoid");
        (semigroup, elements)
    }
}

/// Image of `⌊s⌋` under Steinberg's isomorphism: `g · E_{row,col}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PhiImage {
    pub group_element: usize,
    pub row: usize,
    pub col: usize,
}

/// A D-class together with the data needed for Steinberg's isomorphism.
#[derive(Clone, Debug)]
pub struct DClassInfo {
    pub index: usize,
    pub elements: Vec<usize>,
    /// Idempotents in enumeration order; they index matrix rows/columns.
    pub idempotents: Vec<usize>,
    /// The chosen idempotent `e_k` (first in enumeration order).
    pub base: usize,
    /// The maximal subgroup `G_k` at `e_k`.
    pub group: Vec<usize>,
    /// `p_a` for each idempotent `a`, parallel to `idempotents`.
    pub connectors: Vec<usize>,
}

impl DClassInfo {
    pub fn contains(&self, s: usize) -> bool {
        self.elements.binary_search(&s).is_ok()
    }

    pub fn idempotent_position(&self, a: usize) -> Option<usize> {
        self.idempotents.iter().position(|&x| x == a)
    }

    pub fn connector(&self, a: usize) -> Option<usize> {
        self.idempotent_position(a).map(|i| self.connectors[i])
    }
}

/// A dense rational matrix, sized for verification work.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// The `n × n` matrix unit `E_{row,col}`.
    pub fn unit(n: usize, row: usize, col: usize) -> Self {
        let mut m = Self::zero(n, n);
        m.data[row * n + col] = Rational::one();
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        RationalMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_integers(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_integer(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: Rational) -> RationalMatrix {
        RationalMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| a * c).collect() }
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &RationalMatrix) -> RationalMatrix {
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Self::zero(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..other.rows {
                    for q in 0..other.cols {
                        out.data[(i * other.rows + p) * cols + j * other.cols + q] = a * other.get(p, q);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect();
        f.debug_list().entries(rows).finish()
    }
}

/// A matrix representation of a maximal subgroup `G_k`, supplied by the
/// caller and checked for multiplicativity.
#[derive(Clone, Debug)]
pub struct MatrixIrrep {
    dimension: usize,
    images: HashMap<usize, RationalMatrix>,
}

impl MatrixIrrep {
    pub fn new(
        semigroup: &FiniteInverseSemigroup,
        class: &DClassInfo,
        images: Vec<(usize, RationalMatrix)>,
    ) -> Result<Self> {
        let images: HashMap<usize, RationalMatrix> = images.into_iter().collect();
        let dimension = images
            .get(&class.base)
            .ok_or_else(|| Error::NotMultiplicative("no image for the identity of G_k".into()))?
            .rows();
        for &g in &class.group {
            let m = images
                .get(&g)
                .ok_or_else(|| Error::NotMultiplicative(format!("no image for group element {g}")))?;
            if m.rows() != dimension || m.cols() != dimension {
                return Err(Error::NotMultiplicative(format!("image of {g} has the wrong shape")));
            }
        }
        if images.len() != class.group.len() {
            return Err(Error::NotMultiplicative("images given outside G_k".into()));
        }
        if images[&class.base] != RationalMatrix::identity(dimension) {
            return Err(Error::NotMultiplicative("identity does not map to I".into()));
        }
        for &g in &class.group {
            for &h in &class.group {
                let gh = semigroup.mul(g, h);
                if images[&gh] != images[&g].mul(&images[&h]) {
                    return Err(Error::NotMultiplicative(format!("rho({g}·{h}) != rho({g})rho({h})")));
                }
            }
        }
        Ok(MatrixIrrep { dimension, images })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn image(&self, g: usize) -> &RationalMatrix {
        &self.images[&g]
    }
}
