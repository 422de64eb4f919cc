//! Exact state vectors of stabilizer states.
//!
//! Amplitudes of an n-qubit stabilizer state are `i^t / sqrt(|S|)` on an
//! affine support S and zero elsewhere, so a state is stored as one optional
//! i-exponent per basis index. The global phase is fixed by making the
//! lowest-index support amplitude `+1`. Basis index bit `q` (LSB first) is
//! the value of qubit `q`.

use crate::bits::BitVec;
use crate::config::Limits;
use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::graph::Graph;
use crate::pauli::CliffordGate;
use crate::stab::{enumerate_stabilizer, CheckMatrix};
use num_complex::Complex64;

/// Normalized amplitudes of a stabilizer state, exactly represented.
#[derive(Clone, PartialEq, Eq)]
pub struct StateVector {
    n: usize,
    /// `Some(t)` at index x means amplitude `i^t / sqrt(support)`.
    amps: Vec<Option<u8>>,
}

impl StateVector {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn support_size(&self) -> usize {
        self.amps.iter().filter(|a| a.is_some()).count()
    }

    /// i-exponent of the amplitude at basis index `x`, or None when zero.
    pub fn exponent(&self, x: usize) -> Option<u8> {
        self.amps[x]
    }

    /// Number of basis states with a strictly negative (real) amplitude.
    pub fn minus_signs(&self) -> usize {
        self.amps.iter().filter(|&&a| a == Some(2)).count()
    }

    pub fn to_complex(&self) -> Vec<Complex64> {
        let norm = 1.0 / (self.support_size() as f64).sqrt();
        self.amps
            .iter()
            .map(|a| match a {
                None => Complex64::new(0.0, 0.0),
                Some(0) => Complex64::new(norm, 0.0),
                Some(1) => Complex64::new(0.0, norm),
                Some(2) => Complex64::new(-norm, 0.0),
                _ => Complex64::new(0.0, -norm),
            })
            .collect()
    }

    /// Graph-state amplitudes: `2^{-n/2} (-1)^{q(x)}` with `q(x)` the number
    /// of edges inside the support of `x`, mod 2.
    pub fn of_graph(g: &Graph, limits: &Limits) -> Result<StateVector> {
        let n = g.n();
        if n > limits.statevec {
            return Err(Error::ResourceLimit(format!(
                "state vector on {n} qubits exceeds limit {}",
                limits.statevec
            )));
        }
        let rows: Vec<u64> = (0..n)
            .map(|v| g.neighbors_bits(v).as_words().first().copied().unwrap_or(0))
            .collect();
        let mut amps = vec![Some(0u8); 1 << n];
        // edge-interior parity by peeling the lowest set bit
        for x in 1usize..1 << n {
            let low = x.trailing_zeros() as usize;
            let rest = x & (x - 1);
            let prev = amps[rest].unwrap() / 2;
            let added = (rows[low] & rest as u64).count_ones() as u8 & 1;
            amps[x] = Some(2 * ((prev + added) & 1));
        }
        Ok(StateVector { n, amps })
    }

    /// General construction through the projector average
    /// `2^{-n} sum_g g` applied to a computational reference state. Requires
    /// a full set of n generators.
    pub fn of_check_matrix(c: &CheckMatrix, limits: &Limits) -> Result<StateVector> {
        let n = c.n();
        if n > limits.statevec {
            return Err(Error::ResourceLimit(format!(
                "state vector on {n} qubits exceeds limit {}",
                limits.statevec
            )));
        }
        if c.num_generators() != n {
            return Err(Error::MalformedCheckMatrix(format!(
                "state vector needs {n} generators, got {}",
                c.num_generators()
            )));
        }
        let group = enumerate_stabilizer(c, limits)?;
        let x0 = reference_state(c)?;
        let mut amps: Vec<Option<u8>> = vec![None; 1 << n];
        for e in group.elements() {
            let xmask = low_word(e.xbits());
            let zmask = low_word(e.zbits());
            let y = x0 ^ xmask as usize;
            let sign = 2 * ((zmask & x0 as u64).count_ones() as u8 & 1);
            let t = (e.exp() + sign) % 4;
            match amps[y] {
                None => amps[y] = Some(t),
                // elements sharing an X part agree on the contribution
                Some(prev) => debug_assert_eq!(prev, t),
            }
        }
        let mut sv = StateVector { n, amps };
        sv.normalize_global_phase();
        Ok(sv)
    }

    /// Rotates the global phase so that the lowest-index support amplitude
    /// is `+1`.
    fn normalize_global_phase(&mut self) {
        let Some(base) = self.amps.iter().flatten().next().copied() else {
            return;
        };
        if base != 0 {
            for a in self.amps.iter_mut().flatten() {
                *a = (*a + 4 - base) % 4;
            }
        }
    }

    pub fn approx_eq(&self, other: &StateVector, tol: f64) -> bool {
        if self.n != other.n {
            return false;
        }
        self.to_complex()
            .iter()
            .zip(other.to_complex())
            .all(|(a, b)| (a - b).norm() <= tol)
    }
}

impl std::fmt::Debug for StateVector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "StateVector(n={}, support={})", self.n, self.support_size())?;
        for (x, a) in self.amps.iter().enumerate() {
            if let Some(t) = a {
                write!(f, " {x:0width$b}:{t}", width = self.n)?;
            }
        }
        Ok(())
    }
}

fn low_word(v: &BitVec) -> u64 {
    v.as_words().first().copied().unwrap_or(0)
}

/// A computational basis state with nonzero overlap: solves `z_i . x0 = s_i`
/// over GF(2) for the pure-Z subgroup generators.
fn reference_state(c: &CheckMatrix) -> Result<usize> {
    let n = c.n();
    // RREF with X columns first leaves the pure-Z subgroup generators as the
    // trailing rows of the canonical form.
    let canonical = c.canonical();
    let z_rows: Vec<_> = canonical
        .rows()
        .iter()
        .filter(|r| r.xbits().is_zero())
        .collect();
    // solve A x0 = s where rows of A are the z masks and s their signs
    let mut a = BitMatrix::zeros(z_rows.len(), n + 1);
    for (i, r) in z_rows.iter().enumerate() {
        for j in r.zbits().iter_ones() {
            a.set(i, j, true);
        }
        a.set(i, n, r.phase().0 == 2);
    }
    let pivots = a.rref_in_place();
    if pivots.contains(&n) {
        return Err(Error::MalformedCheckMatrix(
            "inconsistent pure-Z constraints (group contains -I?)".into(),
        ));
    }
    let mut x0 = 0usize;
    for (row, &col) in pivots.iter().enumerate() {
        if a.get(row, n) {
            x0 |= 1 << col;
        }
    }
    Ok(x0)
}

/// Dense complex amplitude transforms, for cross-checking exact results and
/// replaying recorded Clifford gates on state vectors.
pub mod dense {
    use super::*;

    pub fn apply_gate(amps: &mut [Complex64], q: usize, gate: CliffordGate) {
        let bit = 1usize << q;
        let i = Complex64::i();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        match gate {
            CliffordGate::H => {
                for x in 0..amps.len() {
                    if x & bit == 0 {
                        let (a0, a1) = (amps[x], amps[x | bit]);
                        amps[x] = s * (a0 + a1);
                        amps[x | bit] = s * (a0 - a1);
                    }
                }
            }
            CliffordGate::S => phase_if_set(amps, bit, i),
            CliffordGate::Sdg => phase_if_set(amps, bit, -i),
            CliffordGate::Z => phase_if_set(amps, bit, -Complex64::ONE),
            CliffordGate::X => {
                for x in 0..amps.len() {
                    if x & bit == 0 {
                        amps.swap(x, x | bit);
                    }
                }
            }
            CliffordGate::Y => {
                for x in 0..amps.len() {
                    if x & bit == 0 {
                        let (a0, a1) = (amps[x], amps[x | bit]);
                        amps[x] = -i * a1;
                        amps[x | bit] = i * a0;
                    }
                }
            }
            CliffordGate::SqrtX => {
                for x in 0..amps.len() {
                    if x & bit == 0 {
                        let (a0, a1) = (amps[x], amps[x | bit]);
                        amps[x] = s * (a0 + i * a1);
                        amps[x | bit] = s * (i * a0 + a1);
                    }
                }
            }
            CliffordGate::SqrtXdg => {
                for x in 0..amps.len() {
                    if x & bit == 0 {
                        let (a0, a1) = (amps[x], amps[x | bit]);
                        amps[x] = s * (a0 - i * a1);
                        amps[x | bit] = s * (-i * a0 + a1);
                    }
                }
            }
        }
    }

    fn phase_if_set(amps: &mut [Complex64], bit: usize, factor: Complex64) {
        for (x, a) in amps.iter_mut().enumerate() {
            if x & bit != 0 {
                *a *= factor;
            }
        }
    }

    /// Relabels qubits: qubit `q` moves to position `perm[q]`.
    pub fn apply_qubit_perm(amps: &[Complex64], perm: &[usize]) -> Vec<Complex64> {
        let n = perm.len();
        let mut out = vec![Complex64::new(0.0, 0.0); amps.len()];
        for (x, &a) in amps.iter().enumerate() {
            let mut y = 0usize;
            for q in 0..n {
                if x >> q & 1 == 1 {
                    y |= 1 << perm[q];
                }
            }
            out[y] = a;
        }
        out
    }

    /// Max amplitude deviation up to a global phase aligned on the largest
    /// entry of `a`.
    pub fn distance_up_to_phase(a: &[Complex64], b: &[Complex64]) -> f64 {
        assert_eq!(a.len(), b.len());
        let k = (0..a.len())
            .max_by(|&i, &j| a[i].norm().total_cmp(&a[j].norm()))
            .unwrap();
        if a[k].norm() < 1e-15 {
            return b.iter().map(|x| x.norm()).fold(0.0, f64::max);
        }
        let phase = b[k] / a[k];
        let phase = if phase.norm() < 1e-15 {
            Complex64::ONE
        } else {
            phase / phase.norm()
        };
        a.iter()
            .zip(b)
            .map(|(x, y)| (x * phase - y).norm())
            .fold(0.0, f64::max)
    }
}

/// Number of minus signs in the computational basis decomposition of the
/// graph state.
pub fn minus_sign_count(g: &Graph, limits: &Limits) -> Result<usize> {
    Ok(StateVector::of_graph(g, limits)?.minus_signs())
}
