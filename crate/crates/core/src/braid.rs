//! Braid words, braid-group representations on tensor powers, and the
//! exact verification of the braid and Yang-Baxter identities.
//!
//! Generator images are placed by Kronecker products
//! `1^(i-1) (x) R (x) 1^(m-i-1)`; inverses come from the spectral inverse
//! of the braiding, never from elimination. A [`BraidRep`] is certified at
//! construction (braid relations, far commutativity, invertibility) and
//! evaluation never re-verifies.

use crate::error::{Error, Result};
use crate::matrix::QMat;
use crate::qarith::FieldElement;
use crate::qmodule::QModule;
use crate::ribbon::CertifiedBraiding;
use std::fmt;

// ---- Braid words ----

/// A word in the braid group `B_m`: signed generator letters, sign meaning
/// crossing inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Parse(format!(
                "braid group needs at least 2 strands, got {strands}"
            )));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize > strands - 1 {
                return Err(Error::GeneratorOutOfRange {
                    index: l.unsigned_abs() as usize,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    /// Parse whitespace-separated signed integers, e.g. `"1 2 -1"`.
    pub fn parse(text: &str, strands: usize) -> Result<Self> {
        let letters = text
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad braid letter {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation (group multiplication).
    pub fn concat(&self, rhs: &BraidWord) -> Result<BraidWord> {
        if self.strands != rhs.strands {
            return Err(Error::StrandMismatch {
                word: rhs.strands,
                rep: self.strands,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        BraidWord::new(self.strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

// ---- Generator placement ----

/// Place an operator on `V (x) V` onto the `(i, i+1)` pair of factors of
/// `V^(x m)` (1-based `i`), identity elsewhere. Row-major flattening, first
/// factor slow.
pub fn place_generator(r: &QMat, strands: usize, i: usize, dim_v: usize) -> Result<QMat> {
    if i < 1 || i > strands - 1 {
        return Err(Error::GeneratorOutOfRange { index: i, strands });
    }
    if r.rows() != dim_v * dim_v || r.cols() != dim_v * dim_v {
        let side = dim_v * dim_v;
        return Err(Error::DimensionMismatch(format!(
            "operator is {}x{}, expected {side}x{side} for factor dimension {dim_v}",
            r.rows(),
            r.cols(),
        )));
    }
    let left = QMat::identity(dim_v.pow((i - 1) as u32));
    let right = QMat::identity(dim_v.pow((strands - 1 - i) as u32));
    Ok(left.kron(r).kron(&right))
}

// ---- Yang-Baxter ----

/// Result of an exact identity check on matrices, with the first differing
/// entry when it fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub holds: bool,
    pub first_difference: Option<(usize, usize)>,
}

fn compare(lhs: &QMat, rhs: &QMat) -> IdentityCheck {
    for r in 0..lhs.rows() {
        for c in 0..lhs.cols() {
            if lhs.get(r, c) != rhs.get(r, c) {
                return IdentityCheck {
                    holds: false,
                    first_difference: Some((r, c)),
                };
            }
        }
    }
    IdentityCheck {
        holds: true,
        first_difference: None,
    }
}

/// Check `(R (x) 1)(1 (x) R)(R (x) 1) = (1 (x) R)(R (x) 1)(1 (x) R)` on
/// `V^(x 3)` exactly.
pub fn verify_yang_baxter(r: &QMat, dim_v: usize) -> IdentityCheck {
    let id = QMat::identity(dim_v);
    let r12 = r.kron(&id);
    let r23 = id.kron(r);
    let lhs = r12.mul(&r23).mul(&r12);
    let rhs = r23.mul(&r12).mul(&r23);
    compare(&lhs, &rhs)
}

pub fn yang_baxter_holds(r: &QMat, dim_v: usize) -> bool {
    verify_yang_baxter(r, dim_v).holds
}

/// Product over the given eigenvalues of `(m - eig * 1)`; vanishing is the
/// exact annihilating-polynomial certificate that the eigenvalue set of
/// `m` is contained in the list.
pub fn annihilator_vanishes(m: &QMat, eigenvalues: &[FieldElement]) -> bool {
    let id = QMat::identity(m.rows());
    let mut acc = id.clone();
    for eig in eigenvalues {
        acc = acc.mul(&m.sub(&id.scaled(eig)));
    }
    acc.is_zero()
}

// ---- Braid representations ----

/// A certified representation of `B_m` on `V^(x m)`: generator images and
/// their inverses, with the braid relations verified exactly at
/// construction.
#[derive(Clone, Debug)]
pub struct BraidRep {
    strands: usize,
    dim_v: usize,
    root_order: u32,
    generators: Vec<QMat>,
    inverses: Vec<QMat>,
}

impl BraidRep {
    /// Build the representation induced by a certified braiding. The
    /// construction re-verifies the braid relation on every adjacent pair
    /// and far commutativity on every distant pair; any failure aborts
    /// with the offending pair.
    pub fn build(braiding: &CertifiedBraiding, strands: usize) -> Result<Self> {
        if strands < 2 {
            return Err(Error::Parse(format!(
                "need at least 2 strands, got {strands}"
            )));
        }
        let dim_v = braiding.dim_v();
        let mut generators = Vec::with_capacity(strands - 1);
        let mut inverses = Vec::with_capacity(strands - 1);
        for i in 1..strands {
            generators.push(place_generator(&braiding.rmatrix, strands, i, dim_v)?);
            inverses.push(place_generator(&braiding.rmatrix_inv, strands, i, dim_v)?);
        }

        for (g, ginv) in generators.iter().zip(&inverses) {
            if !g.mul(ginv).is_identity() {
                return Err(Error::CertificationFailure(
                    "generator image is not invertible by its spectral inverse".into(),
                ));
            }
        }
        for i in 0..strands - 1 {
            for j in i + 1..strands - 1 {
                if j == i + 1 {
                    let lhs = generators[i].mul(&generators[j]).mul(&generators[i]);
                    let rhs = generators[j].mul(&generators[i]).mul(&generators[j]);
                    if lhs != rhs {
                        return Err(Error::CertificationFailure(format!(
                            "braid relation fails for generators {} and {}",
                            i + 1,
                            j + 1
                        )));
                    }
                } else if !generators[i].commutes_with(&generators[j]) {
                    return Err(Error::CertificationFailure(format!(
                        "far commutativity fails for generators {} and {}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }

        Ok(BraidRep {
            strands,
            dim_v,
            root_order: braiding.root_order(),
            generators,
            inverses,
        })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn dim_v(&self) -> usize {
        self.dim_v
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn total_dim(&self) -> usize {
        self.dim_v.pow(self.strands as u32)
    }

    /// Image of `sigma_i` (1-based).
    pub fn generator(&self, i: usize) -> &QMat {
        &self.generators[i - 1]
    }

    pub fn generator_inverse(&self, i: usize) -> &QMat {
        &self.inverses[i - 1]
    }

    /// Evaluate a braid word: the ordered product of generator images.
    /// The empty word evaluates to the identity.
    pub fn evaluate(&self, word: &BraidWord) -> Result<QMat> {
        if word.strands() != self.strands {
            return Err(Error::StrandMismatch {
                word: word.strands(),
                rep: self.strands,
            });
        }
        let mut acc = QMat::identity(self.total_dim());
        for &letter in word.letters() {
            let image = if letter > 0 {
                &self.generators[letter as usize - 1]
            } else {
                &self.inverses[(-letter) as usize - 1]
            };
            acc = acc.mul(image);
        }
        Ok(acc)
    }
}

// ---- Hexagon coherence on triples ----

/// Braiding assignments for the pairs of a module triple.
pub struct TripleBraidings {
    mats: Vec<Option<QMat>>, // 3x3, row-major; entry (i, j) = c_{M_i, M_j}
}

impl TripleBraidings {
    pub fn empty() -> Self {
        TripleBraidings {
            mats: vec![None; 9],
        }
    }

    pub fn set(&mut self, i: usize, j: usize, c: QMat) {
        self.mats[i * 3 + j] = Some(c);
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&QMat> {
        self.mats[i * 3 + j].as_ref()
    }

    /// What the same-module pipeline can supply: equal factors get the
    /// certified braiding; a trivial (unit) factor braids by the identity.
    /// Pairs of distinct nontrivial modules stay unavailable.
    pub fn from_pipeline(
        modules: [&QModule; 3],
        certified: &[(&QModule, &CertifiedBraiding)],
    ) -> Self {
        let mut out = Self::empty();
        for i in 0..3 {
            for j in 0..3 {
                let (a, b) = (modules[i], modules[j]);
                if a == b {
                    if let Some((_, cb)) = certified.iter().find(|(m, _)| *m == a) {
                        out.set(i, j, cb.rmatrix.clone());
                        continue;
                    }
                }
                if is_unit(a) || is_unit(b) {
                    out.set(i, j, QMat::identity(a.dim() * b.dim()));
                }
            }
        }
        out
    }
}

fn is_unit(m: &QModule) -> bool {
    m.dim() == 1 && m.weights()[0].is_zero()
}

/// Check the braid coherence the hexagon axioms force on a triple
/// `(V, W, X)`: braiding the first strand past the other two, factor by
/// factor, gives the same map `V (x) W (x) X -> X (x) W (x) V` along both
/// hexagon decompositions. Requires all pairwise braidings; missing ones
/// are an unsupported configuration, never silently skipped.
pub fn verify_hexagon_on_triple(
    modules: [&QModule; 3],
    braidings: &TripleBraidings,
) -> Result<IdentityCheck> {
    let [v, w, x] = modules;
    let need = |i: usize, j: usize| -> Result<&QMat> {
        braidings.get(i, j).ok_or_else(|| {
            Error::UnsupportedConfiguration(format!(
                "no braiding available for factor pair ({}, {})",
                i + 1,
                j + 1
            ))
        })
    };
    let c_vw = need(0, 1)?;
    let c_vx = need(0, 2)?;
    let c_wx = need(1, 2)?;

    let id_v = QMat::identity(v.dim());
    let id_w = QMat::identity(w.dim());
    let id_x = QMat::identity(x.dim());

    // route 1: (c_WX (x) 1_V) (1_W (x) c_VX) (c_VW (x) 1_X)
    let route1 = c_wx
        .kron(&id_v)
        .mul(&id_w.kron(c_vx))
        .mul(&c_vw.kron(&id_x));
    // route 2: (1_X (x) c_VW) (c_VX (x) 1_W) (1_V (x) c_WX)
    let route2 = id_x.kron(c_vw).mul(&c_vx.kron(&id_w)).mul(&id_v.kron(c_wx));

    Ok(compare(&route1, &route2))
}
