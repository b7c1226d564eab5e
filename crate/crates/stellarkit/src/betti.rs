//! Graded Betti tables: Koszul tables with one mixed degree, degree shifts,
//! the two-resolution combination that resolves an unprojection ring, and
//! the closed form and recursion for boundary complexes of stacked
//! polytopes.
//!
//! Tables carry no differentials; minimality claims are certified elsewhere
//! by comparing against the brute-force oracle.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Multiplicities `b_{ij}` of the degree-`j` summands in homological
/// position `i` of a graded free resolution of length `length`. Every
/// position `0..=length` has at least one entry and all multiplicities are
/// positive.
#[derive(Clone, PartialEq, Eq)]
pub struct BettiTable {
    length: usize,
    entries: BTreeMap<(usize, usize), u64>,
}

/// Degree of the new variable in an unprojection; always at least 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct KmShift(u32);

impl KmShift {
    pub fn new(s: u32) -> Result<Self> {
        if s == 0 {
            return Err(Error::InvalidArgument(
                "the unprojection shift must be at least 1".into(),
            ));
        }
        Ok(KmShift(s))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl BettiTable {
    pub fn new(length: usize, entries: BTreeMap<(usize, usize), u64>) -> Result<Self> {
        for (&(i, _), &b) in &entries {
            if b == 0 {
                return Err(Error::InvalidTable("zero multiplicity entry".into()));
            }
            if i > length {
                return Err(Error::InvalidTable(format!(
                    "entry at homological index {i} exceeds the length {length}"
                )));
            }
        }
        for i in 0..=length {
            if !entries.keys().any(|&(ei, _)| ei == i) {
                return Err(Error::InvalidTable(format!(
                    "no entry in homological index {i}"
                )));
            }
        }
        Ok(BettiTable { length, entries })
    }

    pub fn from_entries(length: usize, entries: &[(usize, usize, u64)]) -> Result<Self> {
        let mut map = BTreeMap::new();
        for &(i, j, b) in entries {
            *map.entry((i, j)).or_insert(0) += b;
        }
        BettiTable::new(length, map)
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Entries sorted by (i, j).
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// Total rank of the free module in homological position `i`.
    pub fn rank_at(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(ei, _), _)| ei == i)
            .map(|(_, &b)| b)
            .sum()
    }

    /// All internal degrees shifted up by `s`, multiplicities unchanged.
    pub fn shift(&self, s: KmShift) -> BettiTable {
        let entries = self
            .entries
            .iter()
            .map(|(&(i, j), &b)| ((i, j + s.get() as usize), b))
            .collect();
        BettiTable {
            length: self.length,
            entries,
        }
    }

    /// The alternating-sum numerator `sum (-1)^i b_{ij} t^j`.
    pub fn hilbert_numerator(&self) -> IntPolynomial {
        let top = self.entries.keys().map(|&(_, j)| j).max().unwrap_or(0);
        let mut coeffs = vec![0i64; top + 1];
        for (&(i, j), &b) in &self.entries {
            let signed = if i % 2 == 0 { b as i64 } else { -(b as i64) };
            coeffs[j] += signed;
        }
        IntPolynomial::from_coeffs(coeffs)
    }

    /// Renders a Macaulay-style diagram: rows indexed by `j - i`, columns by
    /// `i`, with a totals row.
    pub fn to_diagram_text(&self) -> String {
        let max_row = self
            .entries
            .keys()
            .map(|&(i, j)| j - i)
            .max()
            .unwrap_or(0);
        let cols = self.length + 1;
        let mut cells: Vec<Vec<String>> = Vec::new();
        let header: Vec<String> = std::iter::once(String::new())
            .chain((0..cols).map(|i| i.to_string()))
            .collect();
        cells.push(header);
        let totals: Vec<String> = std::iter::once("total:".to_string())
            .chain((0..cols).map(|i| self.rank_at(i).to_string()))
            .collect();
        cells.push(totals);
        for r in 0..=max_row {
            let mut row = vec![format!("{r}:")];
            for i in 0..cols {
                let b = self.get(i, i + r);
                row.push(if b == 0 { ".".to_string() } else { b.to_string() });
            }
            cells.push(row);
        }
        let widths: Vec<usize> = (0..cells[0].len())
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap())
            .collect();
        cells
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .map(|(c, s)| format!("{:>width$}", s, width = widths[c]))
                    .collect::<Vec<_>>()
                    .join(" ")
                    .trim_end()
                    .to_string()
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BettiTable(len={}, {{", self.length)?;
        for (k, (i, j, b)) in self.entries().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({i},{j}):{b}")?;
        }
        write!(f, "}})")
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut out = 1u64;
    for step in 0..k {
        out = out
            .checked_mul(n - step)
            .expect("binomial coefficient overflow")
            / (step + 1);
    }
    out
}

/// The Betti table of the Koszul complex on `p` homogeneous elements of a
/// regular sequence, `p - 1` of degree 1 and one of degree `q`: position `i`
/// holds `R(-i)^C(p-1,i) ⊕ R(-q-i+1)^C(p-1,p-i)`, ending in `R(-p-q+1)`.
/// With `q = 1` this collapses to the binomial table `b_{i,i} = C(p,i)`.
pub fn koszul_table(p: u32, q: u32) -> Result<BettiTable> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidArgument(format!(
            "koszul_table needs p >= 1 and q >= 1, got p={p}, q={q}"
        )));
    }
    let (p, q) = (p as usize, q as usize);
    let mut entries = BTreeMap::new();
    entries.insert((0usize, 0usize), 1u64);
    for i in 1..p {
        let linear = binomial((p - 1) as u64, i as u64);
        if linear > 0 {
            *entries.entry((i, i)).or_insert(0) += linear;
        }
        let mixed = binomial((p - 1) as u64, (p - i) as u64);
        if mixed > 0 {
            *entries.entry((i, q + i - 1)).or_insert(0) += mixed;
        }
    }
    *entries.entry((p, p + q - 1)).or_insert(0) += 1;
    BettiTable::new(p, entries)
}

/// Combines the resolutions of the two rings of an unprojection pair into a
/// (not necessarily minimal) resolution of the unprojection ring. `a`
/// resolves the smaller quotient and has length `g >= 2`; `b` resolves the
/// larger one and must have length `g - 1`. `s` is the degree of the new
/// variable; shifted summands have their internal degrees raised by it.
///
/// For `g >= 3` the result is
/// `F_0 = B_0`, `F_1 = B_1 ⊕ A_1(s)`,
/// `F_i = B_i ⊕ A_i(s) ⊕ B_{i-1}(s)` for `2 <= i <= g-2`,
/// `F_{g-1} = A_{g-1}(s) ⊕ B_{g-2}(s)`, `F_g = B_{g-1}(s)`;
/// for `g = 2` it is `F_0 = B_0`, `F_1 = A_1(s)`, `F_2 = B_1(s)`.
/// Multiplicities add; no cancellation is attempted.
pub fn km_combine(a: &BettiTable, b: &BettiTable, s: KmShift) -> Result<BettiTable> {
    let g = a.length();
    if g < 2 {
        return Err(Error::InvalidArgument(format!(
            "the longer resolution must have length at least 2, got {g}"
        )));
    }
    if b.length() != g - 1 {
        return Err(Error::LengthMismatch {
            expected: g - 1,
            got: b.length(),
        });
    }
    let shift = s.get() as usize;
    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    let mut add = |i: usize, j: usize, mult: u64| {
        if mult > 0 {
            *entries.entry((i, j)).or_insert(0) += mult;
        }
    };
    // F_0 = B_0 in both shapes
    for (i, j, mult) in b.entries() {
        if i == 0 {
            add(0, j, mult);
        }
    }
    if g == 2 {
        for (i, j, mult) in a.entries() {
            if i == 1 {
                add(1, j + shift, mult);
            }
        }
        for (i, j, mult) in b.entries() {
            if i == 1 {
                add(2, j + shift, mult);
            }
        }
    } else {
        // unshifted B contributes B_i to F_i for 1 <= i <= g-2
        for (i, j, mult) in b.entries() {
            if (1..=g - 2).contains(&i) {
                add(i, j, mult);
            }
        }
        // shifted A contributes A_i(s) to F_i for 1 <= i <= g-1
        for (i, j, mult) in a.entries() {
            if (1..=g - 1).contains(&i) {
                add(i, j + shift, mult);
            }
        }
        // shifted B contributes B_{i-1}(s) to F_i for 2 <= i <= g
        for (i, j, mult) in b.entries() {
            if (1..=g - 1).contains(&i) {
                add(i + 1, j + shift, mult);
            }
        }
    }
    BettiTable::new(g, entries)
}

/// `θ(d, m, i) = i * C(m-d, i+1)`, with the conventions
/// `θ(d, m, 0) = θ(d, m, m-d) = 0`.
pub fn theta(d: u32, m: u32, i: u32) -> Result<u64> {
    if d < 2 || m <= d {
        return Err(Error::InvalidArgument(format!(
            "theta needs d >= 2 and m > d, got d={d}, m={m}"
        )));
    }
    if i > m - d {
        return Err(Error::InvalidArgument(format!(
            "theta needs 0 <= i <= m-d, got i={i} for m-d={}",
            m - d
        )));
    }
    if i == 0 || i == m - d {
        return Ok(0);
    }
    Ok(i as u64 * binomial((m - d) as u64, (i + 1) as u64))
}

fn check_stacked_args(d: u32, m: u32) -> Result<()> {
    if d < 2 || m < d + 2 {
        return Err(Error::InvalidArgument(format!(
            "stacked Betti tables need d >= 2 and m >= d + 2, got d={d}, m={m}"
        )));
    }
    Ok(())
}

/// Closed-form Betti table of the face ring of a stacked d-polytope boundary
/// with m vertices: corners `b_{0,0} = b_{m-d,m} = 1`; for `d >= 3` the rows
/// `b_{i,i+1} = θ(d,m,i)` and `b_{i,d+i-1} = θ(d,m,m-d-i)`, and for `d = 2`
/// the two coincide and add.
pub fn stacked_betti_closed(d: u32, m: u32) -> Result<BettiTable> {
    check_stacked_args(d, m)?;
    let g = (m - d) as usize;
    let mut entries = BTreeMap::new();
    entries.insert((0usize, 0usize), 1u64);
    entries.insert((g, m as usize), 1);
    for i in 1..g {
        let iu = i as u32;
        if d == 2 {
            let b = theta(d, m, iu)? + theta(d, m, m - d - iu)?;
            if b > 0 {
                entries.insert((i, i + 1), b);
            }
        } else {
            let linear = theta(d, m, iu)?;
            if linear > 0 {
                entries.insert((i, i + 1), linear);
            }
            let dual = theta(d, m, m - d - iu)?;
            if dual > 0 {
                entries.insert((i, d as usize + i - 1), dual);
            }
        }
    }
    BettiTable::new(g, entries)
}

/// The same table computed by the unprojection recursion: the base case
/// `m = d + 2` is the type (2, d) complete intersection, and each step to
/// `m + 1` combines the current table with the Koszul table on the `m - d`
/// vertex monomials outside the subdivided facet together with the degree
/// `d - 1` variable, at shift 1. Specializing the regular variable away does
/// not change graded Betti numbers, so the step output is the table itself.
pub fn stacked_betti_recursive(d: u32, m: u32) -> Result<BettiTable> {
    check_stacked_args(d, m)?;
    let mut table = if d == 2 {
        BettiTable::from_entries(2, &[(0, 0, 1), (1, 2, 2), (2, 4, 1)])?
    } else {
        BettiTable::from_entries(
            2,
            &[
                (0, 0, 1),
                (1, 2, 1),
                (1, d as usize, 1),
                (2, d as usize + 2, 1),
            ],
        )?
    };
    let shift = KmShift::new(1)?;
    for current in (d + 2)..m {
        let koszul = koszul_table(current - d + 1, d - 1)?;
        table = km_combine(&koszul, &table, shift)?;
    }
    Ok(table)
}
