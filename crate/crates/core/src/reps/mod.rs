//! Matrix representations of knot groups and the integer matrices attached
//! to them.

pub mod appendix;
pub mod dihedral;
pub mod metacyclic;
pub mod theta;

use std::collections::BTreeMap;

use crate::algebra::{Ring, RingMatrix};
use crate::error::{Error, Result};
use crate::fox::FreeWord;
use crate::knots::Presentation;

pub use appendix::{f_value, u_matrix, v_matrix, AppendixTables};
pub use dihedral::{dihedral_pi, dihedral_pi0, dihedral_xi, DihedralXi};
pub use metacyclic::{binary_dihedral_pair, kmeta_pair, nqp_pair};
pub use theta::{omega_ring, theta, XYPowerTable};

/// Generator images and their inverses; every generator has t-degree 1
/// unless set otherwise.
#[derive(Clone, Debug)]
pub struct MatrixRep<R: Ring> {
    dim: usize,
    images: BTreeMap<char, RingMatrix<R>>,
    inverses: BTreeMap<char, RingMatrix<R>>,
    t_degrees: BTreeMap<char, i64>,
}

impl<R: Ring> MatrixRep<R> {
    pub fn new(images: Vec<(char, RingMatrix<R>)>) -> Result<Self> {
        let dim = images
            .first()
            .map(|(_, m)| m.rows())
            .ok_or_else(|| Error::InvalidInput("empty representation".into()))?;
        let mut rep = MatrixRep {
            dim,
            images: BTreeMap::new(),
            inverses: BTreeMap::new(),
            t_degrees: BTreeMap::new(),
        };
        for (g, m) in images {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::InvalidInput(format!(
                    "image of {g} is {}x{}, expected {dim}x{dim}",
                    m.rows(),
                    m.cols()
                )));
            }
            let inv = m
                .inverse()
                .ok_or_else(|| Error::InvalidInput(format!("image of {g} is not invertible")))?;
            rep.images.insert(g, m);
            rep.inverses.insert(g, inv);
            rep.t_degrees.insert(g, 1);
        }
        Ok(rep)
    }

    /// Builds the representation and checks every relator maps to the
    /// identity.
    pub fn for_presentation(
        pres: &Presentation,
        images: Vec<(char, RingMatrix<R>)>,
    ) -> Result<Self> {
        let rep = Self::new(images)?;
        rep.check_relators(pres)?;
        Ok(rep)
    }

    pub fn check_relators(&self, pres: &Presentation) -> Result<()> {
        for &g in pres.generators() {
            if !self.images.contains_key(&g) {
                return Err(Error::UnassignedGenerator(g));
            }
        }
        for (i, r) in pres.relators().iter().enumerate() {
            if !self.image(r)?.is_identity() {
                return Err(Error::RelatorNotTrivial { index: i });
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generator_image(&self, g: char) -> Result<&RingMatrix<R>> {
        self.images.get(&g).ok_or(Error::UnassignedGenerator(g))
    }

    pub fn generator_inverse(&self, g: char) -> Result<&RingMatrix<R>> {
        self.inverses.get(&g).ok_or(Error::UnassignedGenerator(g))
    }

    pub fn t_degree(&self, g: char) -> Result<i64> {
        self.t_degrees
            .get(&g)
            .copied()
            .ok_or(Error::UnassignedGenerator(g))
    }

    /// Matrix image of a word, letters multiplied left to right.
    pub fn image(&self, w: &FreeWord) -> Result<RingMatrix<R>> {
        let mut acc = RingMatrix::identity(self.dim);
        for l in w.letters() {
            let m = if l.inverse {
                self.generator_inverse(l.gen)?
            } else {
                self.generator_image(l.gen)?
            };
            acc = acc.mul(m);
        }
        Ok(acc)
    }

    /// t-exponent of a word.
    pub fn degree(&self, w: &FreeWord) -> Result<i64> {
        w.letters()
            .iter()
            .map(|l| Ok(self.t_degree(l.gen)? * l.exponent()))
            .sum()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S + Copy) -> MatrixRep<S> {
        MatrixRep {
            dim: self.dim,
            images: self.images.iter().map(|(g, m)| (*g, m.map(f))).collect(),
            inverses: self.inverses.iter().map(|(g, m)| (*g, m.map(f))).collect(),
            t_degrees: self.t_degrees.clone(),
        }
    }
}

/// A finite group given by an element `s` and a rotation `a`; knot
/// generators go to elements `s a^j`.
#[derive(Clone, Debug)]
pub struct BasePair<R: Ring> {
    pub s: RingMatrix<R>,
    pub a: RingMatrix<R>,
    /// order of `a`
    pub p: u64,
}

impl<R: Ring> BasePair<R> {
    pub fn element(&self, j: u64) -> RingMatrix<R> {
        self.s.mul(&self.a.pow((j % self.p) as u32))
    }

    /// Representation with generator `g_i -> s a^{j_i}`, relators checked.
    pub fn assign(&self, pres: &Presentation, js: &[u64]) -> Result<MatrixRep<R>> {
        if js.len() != pres.generators().len() {
            return Err(Error::InvalidInput(format!(
                "{} exponents for {} generators",
                js.len(),
                pres.generators().len()
            )));
        }
        let images = pres
            .generators()
            .iter()
            .zip(js)
            .map(|(&g, &j)| (g, self.element(j)))
            .collect();
        MatrixRep::for_presentation(pres, images)
    }

    /// Tries `preferred`, then every non-constant exponent tuple with the
    /// first generator fixed at `s`.
    pub fn search(
        &self,
        pres: &Presentation,
        preferred: &[u64],
    ) -> Result<(Vec<u64>, MatrixRep<R>)> {
        if let Ok(rep) = self.assign(pres, preferred) {
            return Ok((preferred.to_vec(), rep));
        }
        let k = pres.generators().len();
        let mut js = vec![0u64; k];
        loop {
            // odometer over positions 1..k
            let mut i = k - 1;
            loop {
                if i == 0 {
                    return Err(Error::NoValidAssignment);
                }
                js[i] += 1;
                if js[i] < self.p {
                    break;
                }
                js[i] = 0;
                i -= 1;
            }
            if js.iter().all(|&j| j == 0) {
                continue;
            }
            if let Ok(rep) = self.assign(pres, &js) {
                return Ok((js, rep));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int_matrix, IntMatrix};
    use crate::knots::presentation;

    #[test]
    fn search_finds_dihedral_assignment() {
        let pi = dihedral_pi(3).unwrap();
        let pair = BasePair {
            s: pi.0.clone(),
            a: pi.0.mul(&pi.1),
            p: 3,
        };
        let pres = presentation(&"1/3".parse().unwrap());
        let (js, rep) = pair.search(&pres, &[0, 1]).unwrap();
        assert_eq!(js, vec![0, 1]);
        assert_eq!(rep.dim(), 3);
        // 1/5 has no D_3 quotient
        let pres5 = presentation(&"1/5".parse().unwrap());
        assert_eq!(
            pair.search(&pres5, &[0, 1]).unwrap_err(),
            Error::NoValidAssignment
        );
    }

    #[test]
    fn image_multiplies_left_to_right() {
        let a = int_matrix(&[&[1, 1], &[0, 1]]);
        let b = int_matrix(&[&[1, 0], &[1, 1]]);
        let rep: MatrixRep<_> = MatrixRep::new(vec![('x', a.clone()), ('y', b.clone())]).unwrap();
        let w = FreeWord::parse("xyX").unwrap();
        let expect: IntMatrix = a.mul(&b).mul(&a.inverse().unwrap());
        assert_eq!(rep.image(&w).unwrap(), expect);
        assert_eq!(rep.degree(&w).unwrap(), 1);
    }
}
