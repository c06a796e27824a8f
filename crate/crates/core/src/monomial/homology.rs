use crate::algebra::Fp;
use crate::error::{Error, Result};

use super::MonomialIdeal;

/// Stanley–Reisner complex of a squarefree monomial ideal: a vertex set is a
/// face iff it contains the support of no generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    nvars: usize,
    nonfaces: Vec<u64>,
}

impl SimplicialComplex {
    pub fn stanley_reisner(i: &MonomialIdeal) -> Result<Self> {
        if !i.is_squarefree() {
            return Err(Error::NotSquarefree);
        }
        if i.nvars() > 64 {
            return Err(Error::SizeLimit {
                what: "Stanley-Reisner ground set",
                size: i.nvars(),
                limit: 64,
            });
        }
        Ok(SimplicialComplex {
            nvars: i.nvars(),
            nonfaces: i.generators().iter().map(|g| g.support()).collect(),
        })
    }

    /// The complex whose minimal non-faces are `nonfaces`.
    pub fn from_nonfaces(nvars: usize, nonfaces: Vec<u64>) -> Self {
        SimplicialComplex { nvars, nonfaces }
    }

    /// The full simplex on `nvars` vertices.
    pub fn simplex(nvars: usize) -> Self {
        SimplicialComplex {
            nvars,
            nonfaces: Vec::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn minimal_nonfaces(&self) -> &[u64] {
        &self.nonfaces
    }

    #[inline]
    pub fn is_face(&self, mask: u64) -> bool {
        self.nonfaces.iter().all(|&g| g & !mask != 0)
    }

    /// Faces of the restriction to `sigma`, grouped by cardinality
    /// (`result[k]` holds the faces with `k` vertices, sorted).
    pub fn faces_within(&self, sigma: u64) -> Vec<Vec<u64>> {
        let verts: Vec<u64> = (0..64)
            .filter(|b| sigma >> b & 1 == 1)
            .map(|b| 1u64 << b)
            .collect();
        let mut by_size = vec![Vec::new(); verts.len() + 1];
        // Depth-first over increasing vertex sequences; a non-face has no
        // face supersets, so its branch is cut.
        let mut stack = vec![(0u64, 0usize)];
        while let Some((face, from)) = stack.pop() {
            by_size[face.count_ones() as usize].push(face);
            for (k, &v) in verts.iter().enumerate().skip(from) {
                let next = face | v;
                if self.is_face(next) {
                    stack.push((next, k + 1));
                }
            }
        }
        for faces in &mut by_size {
            faces.sort_unstable();
        }
        while by_size.len() > 1 && by_size.last().is_some_and(Vec::is_empty) {
            by_size.pop();
        }
        by_size
    }

    /// Largest face cardinality.
    pub fn max_face_size(&self) -> usize {
        let all = if self.nvars == 64 {
            u64::MAX
        } else {
            (1u64 << self.nvars) - 1
        };
        self.faces_within(all).len() - 1
    }
}

/// Matrix of `∂: C_{k} → C_{k-1}` restricted to `sigma`, where `C_k` is
/// spanned by the faces with `k` vertices (so `k = 0` is the empty face of
/// the augmented complex). Rows index the `k`-vertex faces, columns the
/// `(k-1)`-vertex faces, entries in `GF(p)`.
pub fn boundary_matrix(
    complex: &SimplicialComplex,
    sigma: u64,
    k: usize,
    field: Fp,
) -> Vec<Vec<u32>> {
    let faces = complex.faces_within(sigma);
    boundary_from_faces(&faces, k, field)
}

fn boundary_from_faces(faces: &[Vec<u64>], k: usize, field: Fp) -> Vec<Vec<u32>> {
    if k == 0 || k >= faces.len() {
        return Vec::new();
    }
    let lower = &faces[k - 1];
    faces[k]
        .iter()
        .map(|&f| {
            let mut row = vec![0u32; lower.len()];
            let mut rest = f;
            let mut pos = 0;
            while rest != 0 {
                let v = rest & rest.wrapping_neg();
                rest &= rest - 1;
                let col = lower
                    .binary_search(&(f & !v))
                    .expect("faces are closed under subsets");
                row[col] = if pos % 2 == 0 { 1 } else { field.neg(1) };
                pos += 1;
            }
            row
        })
        .collect()
}

/// Rank over `GF(p)` by Gaussian elimination.
pub fn rank_mod_p(mut rows: Vec<Vec<u32>>, field: Fp) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][col]);
        for x in &mut rows[rank][col..] {
            *x = field.mul(*x, inv);
        }
        let (top, below) = rows.split_at_mut(rank + 1);
        let prow = &top[rank];
        for row in below.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for c in col..ncols {
                if prow[c] != 0 {
                    row[c] = field.sub(row[c], field.mul(factor, prow[c]));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Ranks of `H̃_d(Δ|_σ; GF(p))` for `d = -1, …, |σ| - 1`; entry `d + 1` of
/// the result.
pub fn reduced_homology_ranks(
    complex: &SimplicialComplex,
    sigma: u64,
    p: u32,
) -> Result<Vec<usize>> {
    let field = Fp::new(p)?;
    let size = sigma.count_ones() as usize;
    let faces = complex.faces_within(sigma);
    // ranks[k] = rank of ∂ out of the k-vertex faces.
    let ranks: Vec<usize> = (0..=size + 1)
        .map(|k| rank_mod_p(boundary_from_faces(&faces, k, field), field))
        .collect();
    Ok((0..=size)
        .map(|k| {
            let fk = faces.get(k).map_or(0, Vec::len);
            fk - ranks[k] - ranks[k + 1]
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: u32 = 32003;

    #[test]
    fn two_points() {
        // Vertices 0, 1 with the edge {0,1} a non-face.
        let c = SimplicialComplex::from_nonfaces(2, vec![0b11]);
        assert_eq!(reduced_homology_ranks(&c, 0b11, P).unwrap(), vec![0, 1, 0]);
    }

    #[test]
    fn simplex_is_acyclic() {
        let c = SimplicialComplex::simplex(4);
        assert_eq!(reduced_homology_ranks(&c, 0b1111, P).unwrap(), vec![0; 5]);
        assert_eq!(reduced_homology_ranks(&c, 0b10, P).unwrap(), vec![0; 2]);
    }

    #[test]
    fn empty_restriction() {
        let c = SimplicialComplex::simplex(3);
        assert_eq!(reduced_homology_ranks(&c, 0, P).unwrap(), vec![1]);
    }

    #[test]
    fn hollow_triangle() {
        let c = SimplicialComplex::from_nonfaces(3, vec![0b111]);
        assert_eq!(
            reduced_homology_ranks(&c, 0b111, P).unwrap(),
            vec![0, 0, 1, 0]
        );
        for p in [2, 3] {
            assert_eq!(
                reduced_homology_ranks(&c, 0b111, p).unwrap(),
                vec![0, 0, 1, 0]
            );
        }
    }

    #[test]
    fn boundary_squares_to_zero_on_octahedron() {
        // Boundary of the octahedron: antipodal pairs are the non-faces.
        let c = SimplicialComplex::from_nonfaces(6, vec![0b000011, 0b001100, 0b110000]);
        let f = Fp::new(P).unwrap();
        for k in 1..4 {
            let upper = boundary_matrix(&c, 0b111111, k + 1, f);
            let lower = boundary_matrix(&c, 0b111111, k, f);
            for row in &upper {
                for col in 0..lower.first().map_or(0, Vec::len) {
                    let s = row
                        .iter()
                        .zip(&lower)
                        .fold(0, |acc, (&a, l)| f.add(acc, f.mul(a, l[col])));
                    assert_eq!(s, 0);
                }
            }
        }
        assert_eq!(
            reduced_homology_ranks(&c, 0b111111, P).unwrap(),
            vec![0, 0, 0, 1, 0, 0, 0]
        );
        assert_eq!(c.max_face_size(), 3);
    }

    #[test]
    fn rank_examples() {
        let f = Fp::new(7).unwrap();
        assert_eq!(rank_mod_p(vec![vec![1, 2], vec![2, 4]], f), 1);
        assert_eq!(rank_mod_p(vec![vec![1, 2], vec![3, 4]], f), 2);
        assert_eq!(rank_mod_p(Vec::new(), f), 0);
    }
}
