use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::poly::{RationalPoint, VariableId};
use crate::root_core::rational::rat;
use crate::root_core::{IndexSubset, Rational, RationalMatrix};
use crate::weyl::Perm;

/// Entries of random matrices are drawn from `-RANGE..=RANGE`.
pub const RANGE: i64 = 9;

/// A point of `Ṽ_w`: the matrix `g` whose columns span the flag, the
/// endomorphism `ψ`, and the resulting coordinates.
#[derive(Clone, Debug)]
pub struct SampledPoint {
    pub g: RationalMatrix,
    pub psi: RationalMatrix,
    pub point: RationalPoint,
}

/// Permutation matrix with `P[w(j)][j] = 1`.
pub fn permutation_matrix(w: &Perm) -> RationalMatrix {
    let n = w.n();
    let mut m = RationalMatrix::zeros(n, n);
    for j in 1..=n {
        m.set(w.get(j) - 1, j - 1, rat(1));
    }
    m
}

fn random_upper(n: usize, rng: &mut ChaCha8Rng) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n, n);
    for r in 0..n {
        loop {
            let v = rng.random_range(-RANGE..=RANGE);
            if v != 0 {
                m.set(r, r, rat(v));
                break;
            }
        }
        for c in r + 1..n {
            m.set(r, c, rat(rng.random_range(-RANGE..=RANGE)));
        }
    }
    m
}

fn upper_positions(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|r| (r..n).map(move |c| (r, c))).collect()
}

/// Basis of `{ψ upper triangular : g⁻¹ψg upper triangular}`, i.e. of the
/// upper-triangular `ψ` with `ψ g = g c` for some upper-triangular `c`.
pub fn flag_stabilizer_basis(g: &RationalMatrix) -> Vec<RationalMatrix> {
    let n = g.rows();
    let pos = upper_positions(n);
    let m = pos.len();
    // unknowns: ψ entries then c entries; equations: (ψ g - g c)[r][s] = 0
    let mut a = RationalMatrix::zeros(n * n, 2 * m);
    for r in 0..n {
        for s in 0..n {
            let row = r * n + s;
            for (k, &(i, j)) in pos.iter().enumerate() {
                // (E_ij g)[r][s] = [r == i] g[j][s]
                if i == r && !g.get(j, s).is_zero() {
                    a.set(row, k, g.get(j, s).clone());
                }
                // (g E_ij)[r][s] = g[r][i] [s == j]
                if j == s && !g.get(r, i).is_zero() {
                    a.set(row, m + k, -g.get(r, i).clone());
                }
            }
        }
    }
    a.kernel_basis()
        .into_iter()
        .map(|v| {
            let mut psi = RationalMatrix::zeros(n, n);
            for (k, &(i, j)) in pos.iter().enumerate() {
                psi.set(i, j, v.coords()[k].clone());
            }
            psi
        })
        .filter(|psi| (0..n).any(|i| (i..n).any(|j| !psi.get(i, j).is_zero())))
        .collect()
}

/// Plücker coordinates of the flag of `g` (minors on rows `I`, columns
/// `1..d`) together with the entries of `ψ`.
pub fn point_from(g: &RationalMatrix, psi: &RationalMatrix) -> Result<RationalPoint> {
    let n = g.rows();
    let mut pt = RationalPoint::new();
    for d in 1..n {
        let cols: Vec<usize> = (0..d).collect();
        for i in IndexSubset::all_of_size(n as u8, d) {
            let rows: Vec<usize> = i.elements().iter().map(|&r| r as usize - 1).collect();
            pt.insert(VariableId::plucker(i.elements())?, g.submatrix(&rows, &cols).determinant()?);
        }
    }
    for r in 0..n {
        for c in r..n {
            let v = VariableId::matrix_entry(r as u8 + 1, c as u8 + 1).expect("upper entry");
            pt.insert(v, psi.get(r, c).clone());
        }
    }
    Ok(pt)
}

/// A seeded random point of `Ṽ_w`: `g = b_1 P_w b_2` with random invertible
/// upper-triangular `b_i`, and a random integer combination of a basis of
/// the admissible `ψ`.
pub fn sample_point_on_vw(w: &Perm, seed: u64) -> Result<SampledPoint> {
    let n = w.n();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b1 = random_upper(n, &mut rng);
    let b2 = random_upper(n, &mut rng);
    let g = b1.mul(&permutation_matrix(w)).mul(&b2);
    let basis = flag_stabilizer_basis(&g);
    if basis.is_empty() {
        return Err(Error::Internal("stabilizer of a flag cannot be zero".into()));
    }
    let mut psi = RationalMatrix::zeros(n, n);
    for b in &basis {
        let c: Rational = rat(rng.random_range(-RANGE..=RANGE));
        for r in 0..n {
            for s in r..n {
                let v = psi.get(r, s) + &(b.get(r, s) * &c);
                psi.set(r, s, v);
            }
        }
    }
    let point = point_from(&g, &psi)?;
    Ok(SampledPoint { g, psi, point })
}
