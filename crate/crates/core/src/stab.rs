//! Stabilizer groups presented by check matrices: construction from graphs,
//! exhaustive element enumeration, distance, minimal supports and the
//! Minimal Support Condition, support subgroups and Schmidt ranks.

use crate::bits::BitVec;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::Graph;
use crate::pauli::{CliffordGate, Letter, PauliElement};

/// An independent, pairwise-commuting set of Pauli generators on `n` qubits.
///
/// Independence over GF(2) rules out generating `-I`; every row must carry a
/// real (+/-) displayed phase.
#[derive(Clone, PartialEq, Eq)]
pub struct CheckMatrix {
    n: usize,
    rows: Vec<PauliElement>,
}

impl CheckMatrix {
    pub fn new(n: usize, rows: Vec<PauliElement>) -> Result<Self> {
        for r in &rows {
            if r.n() != n {
                return Err(Error::MalformedCheckMatrix(format!(
                    "row on {} qubits in a {n}-qubit matrix",
                    r.n()
                )));
            }
            if !r.phase().is_real() {
                return Err(Error::MalformedCheckMatrix(format!(
                    "row {r} has imaginary phase"
                )));
            }
        }
        for (i, a) in rows.iter().enumerate() {
            for b in rows.iter().skip(i + 1) {
                if !a.commutes_with(b) {
                    return Err(Error::MalformedCheckMatrix(format!(
                        "rows {a} and {b} anticommute"
                    )));
                }
            }
        }
        let m = Self::symplectic_rows(n, &rows);
        if m.rank_xor() != rows.len() {
            return Err(Error::MalformedCheckMatrix(
                "rows are dependent over GF(2)".into(),
            ));
        }
        Ok(CheckMatrix { n, rows })
    }

    fn symplectic_rows(n: usize, rows: &[PauliElement]) -> BitMatrix {
        BitMatrix::from_fn(rows.len(), 2 * n, |i, j| {
            if j < n {
                rows[i].xbits().get(j)
            } else {
                rows[i].zbits().get(j - n)
            }
        })
    }

    /// Row `a` is `K_a`: X on vertex a, Z on each neighbour.
    pub fn from_graph(g: &Graph) -> Self {
        let n = g.n();
        let rows = (0..n)
            .map(|a| {
                let mut x = BitVec::zeros(n);
                x.set(a, true);
                PauliElement::from_bits(x, g.neighbors_bits(a).clone(), 0)
            })
            .collect();
        CheckMatrix { n, rows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_generators(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[PauliElement] {
        &self.rows
    }

    /// The `[X|Z]` bit block pair.
    pub fn x_block(&self) -> BitMatrix {
        BitMatrix::from_fn(self.rows.len(), self.n, |i, j| self.rows[i].xbits().get(j))
    }

    pub fn z_block(&self) -> BitMatrix {
        BitMatrix::from_fn(self.rows.len(), self.n, |i, j| self.rows[i].zbits().get(j))
    }

    /// Conjugates every row by a single-qubit Clifford gate; rows remain
    /// independent and commuting.
    pub fn apply_gate(&self, q: usize, gate: CliffordGate) -> Result<Self> {
        if q >= self.n {
            return Err(Error::VertexOutOfRange { vertex: q, n: self.n });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.conjugate(q, gate))
            .collect::<Result<_>>()?;
        Ok(CheckMatrix { n: self.n, rows })
    }

    pub fn apply_gates(&self, gates: &[(usize, CliffordGate)]) -> Result<Self> {
        let mut out = self.clone();
        for &(q, gate) in gates {
            out = out.apply_gate(q, gate)?;
        }
        Ok(out)
    }

    /// Canonical generator set: reduced row echelon form of the symplectic
    /// rows (X columns first) with phases carried through the row products.
    /// Two check matrices generate the same stabilizer group iff their
    /// canonical forms are equal.
    pub fn canonical(&self) -> CheckMatrix {
        let mut rows = self.rows.clone();
        let col = |r: &PauliElement, c: usize| {
            if c < self.n {
                r.xbits().get(c)
            } else {
                r.zbits().get(c - self.n)
            }
        };
        let mut pivot_row = 0;
        for c in 0..2 * self.n {
            if pivot_row == rows.len() {
                break;
            }
            let Some(p) = (pivot_row..rows.len()).find(|&r| col(&rows[r], c)) else {
                continue;
            };
            rows.swap(pivot_row, p);
            let pivot = rows[pivot_row].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != pivot_row && col(row, c) {
                    *row = row.mul(&pivot);
                }
            }
            pivot_row += 1;
        }
        CheckMatrix { n: self.n, rows }
    }

    /// Same stabilizer group, phases included.
    pub fn same_group(&self, other: &CheckMatrix) -> bool {
        self.n == other.n
            && self.rows.len() == other.rows.len()
            && self.canonical().rows == other.canonical().rows
    }

    /// Same group modulo signs (equal GF(2) row spaces).
    pub fn same_group_up_to_signs(&self, other: &CheckMatrix) -> bool {
        if self.n != other.n || self.rows.len() != other.rows.len() {
            return false;
        }
        let a = self.canonical();
        let b = other.canonical();
        (0..a.rows.len()).all(|i| {
            a.rows[i].xbits() == b.rows[i].xbits() && a.rows[i].zbits() == b.rows[i].zbits()
        })
    }

    /// Parses one generator per line in sign-prefixed letter form, `+XZZ`.
    pub fn parse_text(text: &str) -> Result<Self> {
        let rows: Vec<PauliElement> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(PauliElement::parse)
            .collect::<Result<_>>()?;
        if rows.is_empty() {
            return Err(Error::Parse("no generators given".into()));
        }
        let n = rows[0].n();
        Self::new(n, rows)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&r.to_string());
            out.push('\n');
        }
        out
    }
}

impl std::fmt::Debug for CheckMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CheckMatrix(n={}, rows={:?})", self.n, self.rows)
    }
}

/// The fully enumerated stabilizer group of a check matrix: 2^k elements for
/// k generators, indexed by generator subset.
pub struct StabilizerGroup {
    n: usize,
    elements: Vec<PauliElement>,
}

impl StabilizerGroup {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[PauliElement] {
        &self.elements
    }
}

/// Materializes all 2^k products of the generators, phases tracked; element
/// `mask` is the product of the generators in `mask`.
pub fn enumerate_stabilizer(c: &CheckMatrix, limits: &Limits) -> Result<StabilizerGroup> {
    let k = c.num_generators();
    if k > limits.enumeration {
        return Err(Error::ResourceLimit(format!(
            "enumerating 2^{k} stabilizer elements exceeds limit 2^{}",
            limits.enumeration
        )));
    }
    let mut elements = Vec::with_capacity(1 << k);
    elements.push(PauliElement::identity(c.n()));
    for mask in 1usize..1 << k {
        let low = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        elements.push(elements[rest].mul(&c.rows()[low]));
    }
    Ok(StabilizerGroup { n: c.n(), elements })
}

/// Minimum weight over the non-identity stabilizer elements.
pub fn distance(c: &CheckMatrix, limits: &Limits) -> Result<usize> {
    let group = enumerate_stabilizer(c, limits)?;
    group
        .elements()
        .iter()
        .skip(1)
        .map(PauliElement::weight)
        .min()
        .ok_or_else(|| Error::MalformedCheckMatrix("trivial stabilizer has no distance".into()))
}

/// All elements whose support is minimal under strict inclusion among the
/// non-identity element supports.
pub fn minimal_elements(c: &CheckMatrix, limits: &Limits) -> Result<Vec<PauliElement>> {
    let group = enumerate_stabilizer(c, limits)?;
    let supports: Vec<BitVec> = group
        .elements()
        .iter()
        .skip(1)
        .map(PauliElement::support)
        .collect();
    let mut out = Vec::new();
    for (i, e) in group.elements().iter().enumerate().skip(1) {
        let s = &supports[i - 1];
        let minimal = supports
            .iter()
            .all(|t| t == s || !t.is_subset_of(s));
        if minimal {
            out.push(e.clone());
        }
    }
    Ok(out)
}

/// The subgroup generated by the minimal elements.
pub fn minimal_subgroup(c: &CheckMatrix, limits: &Limits) -> Result<StabilizerGroup> {
    let minimal = minimal_elements(c, limits)?;
    // independent subset spanning the same subgroup
    let mut basis: Vec<PauliElement> = Vec::new();
    let mut echelon = BitMatrix::zeros(0, 2 * c.n());
    for e in minimal {
        let mut row = BitVec::zeros(2 * c.n());
        for i in e.xbits().iter_ones() {
            row.set(i, true);
        }
        for i in e.zbits().iter_ones() {
            row.set(c.n() + i, true);
        }
        let mut probe = echelon.clone();
        probe.push_row(row.clone());
        if probe.rank_xor() > echelon.nrows() {
            echelon.push_row(row);
            echelon.rref_in_place();
            basis.push(e);
        }
    }
    let sub = CheckMatrix {
        n: c.n(),
        rows: basis,
    };
    enumerate_stabilizer(&sub, limits)
}

/// Minimal Support Condition: X, Y and Z each occur on every qubit within the
/// subgroup generated by the minimal-support elements. Defined for connected
/// graph states only.
pub fn check_msc(g: &Graph, limits: &Limits) -> Result<bool> {
    if !g.is_connected() {
        return Err(Error::DisconnectedGraph);
    }
    let c = CheckMatrix::from_graph(g);
    let sub = minimal_subgroup(&c, limits)?;
    for q in 0..g.n() {
        let mut seen = [false; 3];
        for e in sub.elements() {
            match e.letter_at(q) {
                Letter::I => {}
                Letter::X => seen[0] = true,
                Letter::Y => seen[1] = true,
                Letter::Z => seen[2] = true,
            }
        }
        if !seen.iter().all(|&b| b) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// All stabilizer elements with support inside `region` (always a subgroup).
pub fn support_subgroup(
    c: &CheckMatrix,
    region: &BitVec,
    limits: &Limits,
) -> Result<StabilizerGroup> {
    let group = enumerate_stabilizer(c, limits)?;
    let elements: Vec<PauliElement> = group
        .elements()
        .iter()
        .filter(|e| e.support().is_subset_of(region))
        .cloned()
        .collect();
    Ok(StabilizerGroup { n: c.n(), elements })
}

/// Schmidt rank of the graph state across the cut `(region, rest)`:
/// `|R| - log2 |S_R|`.
pub fn schmidt_rank(g: &Graph, region: &[usize], limits: &Limits) -> Result<usize> {
    let n = g.n();
    if region.is_empty() || region.len() >= n {
        return Err(Error::InvalidPartition(format!(
            "need 0 < |R| < {n}, got |R| = {}",
            region.len()
        )));
    }
    let mut mask = BitVec::zeros(n);
    for &v in region {
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        if mask.get(v) {
            return Err(Error::InvalidPartition(format!("vertex {v} repeated")));
        }
        mask.set(v, true);
    }
    let c = CheckMatrix::from_graph(g);
    let sub = support_subgroup(&c, &mask, limits)?;
    debug_assert!(sub.order().is_power_of_two());
    Ok(region.len() - sub.order().trailing_zeros() as usize)
}

/// The Eq.(4)-style local Clifford realizing the local complementation at
/// `a`: `sqrt(-iX)` at `a` and (up to phase) `sqrt(iZ)` at each neighbour.
pub fn lc_gate_sequence(g: &Graph, a: usize) -> Result<Vec<(usize, CliffordGate)>> {
    if a >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: a, n: g.n() });
    }
    let mut gates = vec![(a, CliffordGate::SqrtXdg)];
    gates.extend(g.neighbors(a).into_iter().map(|b| (b, CliffordGate::Sdg)));
    Ok(gates)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn limits() -> Limits {
        Limits::default()
    }

    #[test]
    fn graph_check_matrix_rows() {
        let star = Graph::star(3).unwrap();
        let c = CheckMatrix::from_graph(&star);
        let texts: Vec<String> = c.rows().iter().map(|r| r.to_string()).collect();
        assert_eq!(texts, vec!["+XZZ", "+ZXI", "+ZIX"]);
        let single = CheckMatrix::from_graph(&Graph::empty(1));
        assert_eq!(single.rows()[0].to_string(), "+X");
    }

    #[test]
    fn validation_rejects_bad_sets() {
        // anticommuting pair
        let rows = vec![
            PauliElement::parse("+XI").unwrap(),
            PauliElement::parse("+ZI").unwrap(),
        ];
        assert!(matches!(
            CheckMatrix::new(2, rows),
            Err(Error::MalformedCheckMatrix(_))
        ));
        // dependent pair
        let rows = vec![
            PauliElement::parse("+XX").unwrap(),
            PauliElement::parse("-XX").unwrap(),
        ];
        assert!(CheckMatrix::new(2, rows).is_err());
    }

    /// Dense 4x4 matrix oracle for the two-qubit stabilizer of the single
    /// edge: multiply explicit Pauli matrices and compare phases.
    #[test]
    fn single_edge_group_matches_matrix_oracle() {
        let g = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let c = CheckMatrix::from_graph(&g);
        let group = enumerate_stabilizer(&c, &limits()).unwrap();
        assert_eq!(group.order(), 4);

        type M = [[Complex64; 4]; 4];
        let i = Complex64::i();
        let o = Complex64::new(0.0, 0.0);
        let l = Complex64::new(1.0, 0.0);
        fn kron(a: [[Complex64; 2]; 2], b: [[Complex64; 2]; 2]) -> M {
            let mut m = [[Complex64::new(0.0, 0.0); 4]; 4];
            for r in 0..4 {
                for c in 0..4 {
                    m[r][c] = a[r / 2][c / 2] * b[r % 2][c % 2];
                }
            }
            m
        }
        let paulis = |letter: Letter| -> [[Complex64; 2]; 2] {
            match letter {
                Letter::I => [[l, o], [o, l]],
                Letter::X => [[o, l], [l, o]],
                Letter::Y => [[o, -i], [i, o]],
                Letter::Z => [[l, o], [o, -l]],
            }
        };
        for e in group.elements() {
            let phase = match e.phase().0 {
                0 => l,
                1 => i,
                2 => -l,
                _ => -i,
            };
            let m = kron(paulis(e.letter_at(0)), paulis(e.letter_at(1)));
            // oracle: multiply the generator matrices for this subset index
            let idx = group.elements().iter().position(|x| x == e).unwrap();
            let mut acc = kron(paulis(Letter::I), paulis(Letter::I));
            for (bit, gen) in c.rows().iter().enumerate() {
                if idx >> bit & 1 == 1 {
                    let gm = kron(paulis(gen.letter_at(0)), paulis(gen.letter_at(1)));
                    let mut next = [[o; 4]; 4];
                    for r in 0..4 {
                        for cc in 0..4 {
                            for k in 0..4 {
                                next[r][cc] += acc[r][k] * gm[k][cc];
                            }
                        }
                    }
                    acc = next;
                }
            }
            for r in 0..4 {
                for cc in 0..4 {
                    assert!((acc[r][cc] - phase * m[r][cc]).norm() < 1e-12);
                }
            }
            assert!(e.phase().is_real());
        }
        // the YY element carries a + sign
        assert!(group
            .elements()
            .iter()
            .any(|e| e.to_string() == "+YY"));
    }

    #[test]
    fn group_order_and_no_minus_identity() {
        let g = Graph::cycle(5).unwrap();
        let c = CheckMatrix::from_graph(&g);
        let group = enumerate_stabilizer(&c, &limits()).unwrap();
        assert_eq!(group.order(), 32);
        for e in group.elements().iter().skip(1) {
            assert!(!e.is_identity_letters(), "-I generated");
        }
    }

    #[test]
    fn distance_examples() {
        let lim = limits();
        // connected graphs with a leaf have distance 2
        for g in [
            Graph::star(5).unwrap(),
            Graph::repeater_complete(3).unwrap(),
            Graph::path(4).unwrap(),
        ] {
            assert_eq!(distance(&CheckMatrix::from_graph(&g), &lim).unwrap(), 2);
        }
        let single = CheckMatrix::from_graph(&Graph::empty(1));
        assert_eq!(distance(&single, &lim).unwrap(), 1);
    }

    #[test]
    fn minimal_elements_star_and_k2() {
        let lim = limits();
        // Star(4): the leaf operators X_l Z_0 are minimal
        let star = Graph::star(4).unwrap();
        let min = minimal_elements(&CheckMatrix::from_graph(&star), &lim).unwrap();
        for leaf in 1..4 {
            assert!(min
                .iter()
                .any(|e| e.letter_at(leaf) == Letter::X && e.letter_at(0) == Letter::Z));
        }
        // no minimal element touches the hub with X
        assert!(min.iter().all(|e| e.letter_at(0) != Letter::X));
        // K2: all three non-identity elements share the full support
        let k2 = Graph::complete(2).unwrap();
        let min = minimal_elements(&CheckMatrix::from_graph(&k2), &lim).unwrap();
        assert_eq!(min.len(), 3);
    }

    #[test]
    fn msc_examples() {
        let lim = limits();
        assert!(!check_msc(&Graph::star(4).unwrap(), &lim).unwrap());
        assert!(!check_msc(&Graph::complete(5).unwrap(), &lim).unwrap());
        // disconnected input is rejected
        assert!(matches!(
            check_msc(&Graph::empty(3), &lim),
            Err(Error::DisconnectedGraph)
        ));
    }

    #[test]
    fn support_subgroup_examples() {
        let lim = limits();
        let g = Graph::biclique(2, 2).unwrap();
        let c = CheckMatrix::from_graph(&g);
        let left = BitVec::from_indices(4, &[0, 1]);
        let sub = support_subgroup(&c, &left, &lim).unwrap();
        assert_eq!(sub.order(), 2);
        assert!(sub
            .elements()
            .iter()
            .any(|e| e.to_string() == "+XXII"));
        let all = support_subgroup(&c, &BitVec::ones(4), &lim).unwrap();
        assert_eq!(all.order(), 16);
        let none = support_subgroup(&c, &BitVec::zeros(4), &lim).unwrap();
        assert_eq!(none.order(), 1);
    }

    #[test]
    fn schmidt_rank_examples() {
        let lim = limits();
        assert_eq!(
            schmidt_rank(&Graph::biclique(2, 2).unwrap(), &[0, 1], &lim).unwrap(),
            1
        );
        assert_eq!(
            schmidt_rank(&Graph::biclique(3, 4).unwrap(), &[0, 1, 2], &lim).unwrap(),
            1
        );
        let edge = Graph::from_edges(2, &[(0, 1)]).unwrap();
        assert_eq!(schmidt_rank(&edge, &[0], &lim).unwrap(), 1);
        assert!(schmidt_rank(&edge, &[], &lim).is_err());
        assert!(schmidt_rank(&edge, &[0, 1], &lim).is_err());
    }

    #[test]
    fn hadamard_all_swaps_blocks() {
        let g = Graph::cycle(4).unwrap();
        let c = CheckMatrix::from_graph(&g);
        let mut h = c.clone();
        for q in 0..4 {
            h = h.apply_gate(q, CliffordGate::H).unwrap();
        }
        assert_eq!(h.x_block(), c.z_block());
        assert_eq!(h.z_block(), c.x_block());
    }

    #[test]
    fn z_gate_preserves_unsigned_group() {
        let g = Graph::biclique(2, 3).unwrap();
        let c = CheckMatrix::from_graph(&g);
        for q in 0..5 {
            let zc = c.apply_gate(q, CliffordGate::Z).unwrap();
            assert!(c.same_group_up_to_signs(&zc));
            assert!(!c.same_group(&zc)); // signs flip on rows with X at q
            // the sign pattern is exactly the X-at-q character
            let (a, b) = (c.canonical(), zc.canonical());
            for (ra, rb) in a.rows().iter().zip(b.rows()) {
                let flip = ra.xbits().get(q);
                assert_eq!(ra.phase() == rb.phase(), !flip);
            }
        }
    }

    #[test]
    fn lc_rule_on_triangle() {
        let g = Graph::complete(3).unwrap();
        let lc = g.local_complement(0).unwrap();
        let conjugated = CheckMatrix::from_graph(&g)
            .apply_gates(&lc_gate_sequence(&g, 0).unwrap())
            .unwrap();
        assert!(conjugated.same_group(&CheckMatrix::from_graph(&lc)));
    }

    #[test]
    fn text_round_trip() {
        let c = CheckMatrix::from_graph(&Graph::star(3).unwrap());
        let parsed = CheckMatrix::parse_text(&c.to_text()).unwrap();
        assert!(parsed.same_group(&c));
        assert_eq!(parsed.to_text(), c.to_text());
        assert!(CheckMatrix::parse_text("+XX\n+ZI\n").is_err()); // anticommute
    }
}
