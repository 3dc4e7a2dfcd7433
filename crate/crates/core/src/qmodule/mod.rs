//! Explicit finite-dimensional quantum-group modules.
//!
//! A [`QModule`] carries the generator actions `E_i`, `F_i`, `K_i^{±1}` as
//! matrices over the exact field, together with a weight grading of the
//! basis. Built-in simple sl2 modules use the weight-basis normalization
//! `F v_k = v_{k+1}`, `E v_k = [k][m-k+1] v_{k-1}`, which keeps all entries
//! Laurent polynomials. Higher-rank modules are ingested from files and
//! validated on load; see [`mod@format`].

pub mod format;

use crate::cartan::{CartanData, LieType, Weight};
use crate::error::{Error, Result};
use crate::matrix::QMat;
use crate::qarith::{q_integer, FieldElement};
use crate::Rat;
use num_bigint::BigInt;
use num_traits::One;

/// Generator kinds, in the fixed file/report order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E,
    F,
    K,
    KInv,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::E, Generator::F, Generator::K, Generator::KInv];

    pub fn label(self) -> &'static str {
        match self {
            Generator::E => "E",
            Generator::F => "F",
            Generator::K => "K",
            Generator::KInv => "Kinv",
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct QModule {
    cd: CartanData,
    root_order: u32,
    dim: usize,
    weights: Vec<Weight>,
    e: Vec<QMat>,
    f: Vec<QMat>,
    k: Vec<QMat>,
    k_inv: Vec<QMat>,
}

/// A weight-homogeneous vector annihilated by every `E_i`.
#[derive(Clone, Debug, PartialEq)]
pub struct HighestWeightVector {
    pub weight: Weight,
    pub coeffs: Vec<FieldElement>,
}

/// Outcome of checking the defining relations on a module.
#[derive(Clone, Debug, Default)]
pub struct RelationReport {
    pub failures: Vec<String>,
}

impl RelationReport {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

impl QModule {
    /// Assemble a module from raw parts and validate the defining
    /// relations plus the weight grading; rejects on any failure.
    pub fn from_parts(
        cd: CartanData,
        root_order: u32,
        weights: Vec<Weight>,
        e: Vec<QMat>,
        f: Vec<QMat>,
        k: Vec<QMat>,
        k_inv: Vec<QMat>,
    ) -> Result<Self> {
        let dim = weights.len();
        let rank = cd.rank();
        if e.len() != rank || f.len() != rank || k.len() != rank || k_inv.len() != rank {
            return Err(Error::DimensionMismatch(format!(
                "expected {rank} generator matrices per kind"
            )));
        }
        for m in e.iter().chain(&f).chain(&k).chain(&k_inv) {
            if m.rows() != dim || m.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator matrix is {}x{}, module dimension is {dim}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        for w in &weights {
            if w.rank() != rank {
                return Err(Error::DimensionMismatch(format!(
                    "weight {w} has rank {}, expected {rank}",
                    w.rank()
                )));
            }
        }
        let module = QModule {
            cd,
            root_order,
            dim,
            weights,
            e,
            f,
            k,
            k_inv,
        };
        let report = module.verify_relations();
        if !report.pass() {
            return Err(Error::RelationFailure(report.failures.join("\n")));
        }
        Ok(module)
    }

    /// The simple (m+1)-dimensional U_q(sl2)-module with highest weight
    /// `m omega`, over `s = q^(1/root_order)`.
    pub fn sl2_simple(m: u32, root_order: u32) -> Self {
        let cd = CartanData::new(LieType::A, 1).expect("A_1 exists");
        let dim = m as usize + 1;
        let d = root_order as i64;
        let weights: Vec<Weight> = (0..dim)
            .map(|kk| Weight::new(vec![m as i64 - 2 * kk as i64]))
            .collect();

        let mut e = QMat::zeros(dim, dim);
        let mut f = QMat::zeros(dim, dim);
        let mut k = QMat::zeros(dim, dim);
        let mut k_inv = QMat::zeros(dim, dim);
        for kk in 0..dim {
            // <(m - 2k) omega, alpha> = m - 2k, so K has s-exponent D(m - 2k).
            let exp = d * (m as i64 - 2 * kk as i64);
            k.set(kk, kk, FieldElement::monomial(Rat::one(), exp, root_order));
            k_inv.set(kk, kk, FieldElement::monomial(Rat::one(), -exp, root_order));
            if kk + 1 < dim {
                // F v_k = v_{k+1}
                f.set(kk + 1, kk, FieldElement::one_with_order(root_order));
                // E v_{k+1} = [k+1][m-k] v_k
                let coeff = &q_integer(kk as i64 + 1, 1, root_order)
                    * &q_integer(m as i64 - kk as i64, 1, root_order);
                e.set(kk, kk + 1, coeff);
            }
        }
        QModule {
            cd,
            root_order,
            dim,
            weights,
            e: vec![e],
            f: vec![f],
            k: vec![k],
            k_inv: vec![k_inv],
        }
    }

    // ---- Accessors ----

    pub fn cartan(&self) -> &CartanData {
        &self.cd
    }

    pub fn root_order(&self) -> u32 {
        self.root_order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Generator matrix, 1-based simple-root index.
    pub fn generator(&self, g: Generator, i: usize) -> &QMat {
        assert!(
            (1..=self.cd.rank()).contains(&i),
            "generator index out of range"
        );
        match g {
            Generator::E => &self.e[i - 1],
            Generator::F => &self.f[i - 1],
            Generator::K => &self.k[i - 1],
            Generator::KInv => &self.k_inv[i - 1],
        }
    }

    pub fn e(&self, i: usize) -> &QMat {
        self.generator(Generator::E, i)
    }

    pub fn f(&self, i: usize) -> &QMat {
        self.generator(Generator::F, i)
    }

    pub fn k(&self, i: usize) -> &QMat {
        self.generator(Generator::K, i)
    }

    pub fn k_inv(&self, i: usize) -> &QMat {
        self.generator(Generator::KInv, i)
    }

    fn one(&self) -> FieldElement {
        FieldElement::one_with_order(self.root_order)
    }

    /// `q_i = q^(d_i)` as a field element.
    pub fn q_i(&self, i: usize) -> FieldElement {
        FieldElement::monomial(
            Rat::one(),
            self.cd.d(i) * self.root_order as i64,
            self.root_order,
        )
    }

    // ---- Relation verification ----

    /// Check every defining relation (Cartan commutations, `[E_i, F_j]`,
    /// q-Serre for rank >= 2) plus the weight grading, as exact matrix
    /// identities. Failures are reported, not raised.
    pub fn verify_relations(&self) -> RelationReport {
        let mut report = RelationReport::default();
        let rank = self.cd.rank();

        for i in 1..=rank {
            if !self.k(i).mul(self.k_inv(i)).is_identity()
                || !self.k_inv(i).mul(self.k(i)).is_identity()
            {
                report.failures.push(format!("K_{i} K_{i}^-1 != 1"));
            }
            for j in 1..=rank {
                if i < j && !self.k(i).commutes_with(self.k(j)) {
                    report.failures.push(format!("K_{i} K_{j} != K_{j} K_{i}"));
                }

                // K_i E_j K_i^-1 = q_i^{a_ij} E_j and the F-counterpart
                let a_ij = self.cd.cartan_entry(i, j);
                let qi_pow = self.q_i(i).pow(a_ij).expect("monomial power");
                let lhs = self.k(i).mul(self.e(j)).mul(self.k_inv(i));
                if lhs != self.e(j).scaled(&qi_pow) {
                    report
                        .failures
                        .push(format!("K_{i} E_{j} K_{i}^-1 != q_{i}^({a_ij}) E_{j}"));
                }
                let qi_pow_inv = self.q_i(i).pow(-a_ij).expect("monomial power");
                let lhs = self.k(i).mul(self.f(j)).mul(self.k_inv(i));
                if lhs != self.f(j).scaled(&qi_pow_inv) {
                    report
                        .failures
                        .push(format!("K_{i} F_{j} K_{i}^-1 != q_{i}^({}) F_{j}", -a_ij));
                }

                // [E_i, F_j] = delta_ij (K_i - K_i^-1)/(q_i - q_i^-1)
                let comm = self.e(i).mul(self.f(j)).sub(&self.f(j).mul(self.e(i)));
                let rhs = if i == j {
                    let denom = &self.q_i(i) - &self.q_i(i).inv().expect("q_i nonzero");
                    let scale = denom.inv().expect("q_i - q_i^-1 nonzero");
                    self.k(i).sub(self.k_inv(i)).scaled(&scale)
                } else {
                    QMat::zeros(self.dim, self.dim)
                };
                if comm != rhs {
                    report.failures.push(if i == j {
                        format!("[E_{i}, F_{i}] != (K_{i} - K_{i}^-1)/(q_{i} - q_{i}^-1)")
                    } else {
                        format!("[E_{i}, F_{j}] != 0")
                    });
                }
            }
        }

        if rank >= 2 {
            for i in 1..=rank {
                for j in 1..=rank {
                    if i == j {
                        continue;
                    }
                    if !self.serre_relation_holds(i, j, true) {
                        report
                            .failures
                            .push(format!("q-Serre relation fails for E_{i}, E_{j}"));
                    }
                    if !self.serre_relation_holds(i, j, false) {
                        report
                            .failures
                            .push(format!("q-Serre relation fails for F_{i}, F_{j}"));
                    }
                }
            }
        }

        // K_i acts diagonally by q^{<mu, alpha_i>} on the weight grading,
        // and E_i/F_i shift weights by +/- alpha_i.
        for i in 1..=rank {
            let alpha = self.cd.simple_root(i).expect("index in range");
            for r in 0..self.dim {
                for c in 0..self.dim {
                    let kv = self.k(i).get(r, c);
                    if r == c {
                        let pairing = self
                            .cd
                            .weight_inner_product(&self.weights[r], &alpha)
                            .expect("rank-checked");
                        let expected = FieldElement::q_power(&pairing, self.root_order);
                        match expected {
                            Ok(expected) if *kv == expected => {}
                            _ => {
                                report.failures.push(format!(
                                    "K_{i} entry ({r},{r}) is not q^(<mu_{r}, alpha_{i}>)"
                                ));
                            }
                        }
                    } else if !kv.is_zero() {
                        report
                            .failures
                            .push(format!("K_{i} is not diagonal at ({r},{c})"));
                    }

                    if !self.e(i).get(r, c).is_zero()
                        && self.weights[r] != self.weights[c].add(&alpha)
                    {
                        report
                            .failures
                            .push(format!("E_{i} entry ({r},{c}) violates the weight grading"));
                    }
                    if !self.f(i).get(r, c).is_zero()
                        && self.weights[r] != self.weights[c].sub(&alpha)
                    {
                        report
                            .failures
                            .push(format!("F_{i} entry ({r},{c}) violates the weight grading"));
                    }
                }
            }
        }

        report
    }

    fn serre_relation_holds(&self, i: usize, j: usize, raising: bool) -> bool {
        let a_ij = self.cd.cartan_entry(i, j);
        let n = (1 - a_ij) as u64;
        let xi = if raising { self.e(i) } else { self.f(i) };
        let xj = if raising { self.e(j) } else { self.f(j) };
        let mut acc = QMat::zeros(self.dim, self.dim);
        let mut xi_pows = vec![QMat::identity(self.dim)];
        for _ in 0..n {
            xi_pows.push(xi_pows.last().unwrap().mul(xi));
        }
        for kk in 0..=n {
            let coeff = crate::qarith::q_binomial(n, kk, self.cd.d(i), self.root_order);
            let term = xi_pows[kk as usize]
                .mul(xj)
                .mul(&xi_pows[(n - kk) as usize]);
            let signed = if kk % 2 == 0 {
                term.scaled(&coeff)
            } else {
                term.scaled(&coeff).neg()
            };
            acc = acc.add(&signed);
        }
        acc.is_zero()
    }

    // ---- Tensor products ----

    /// Tensor product along the coproduct
    /// `E_i -> E_i (x) K_i + 1 (x) E_i`, `F_i -> F_i (x) 1 + K_i^-1 (x) F_i`,
    /// `K_i -> K_i (x) K_i`. Basis ordering is row-major with the first
    /// factor on the slow index; weights add.
    pub fn tensor(&self, other: &QModule) -> Result<QModule> {
        if self.cd != other.cd {
            return Err(Error::DimensionMismatch(format!(
                "tensor factors over different Cartan data: {} vs {}",
                self.cd, other.cd
            )));
        }
        if self.root_order != other.root_order {
            return Err(Error::DimensionMismatch(format!(
                "tensor factors with different root orders: {} vs {}",
                self.root_order, other.root_order
            )));
        }
        let rank = self.cd.rank();
        let id_m = QMat::identity(self.dim);
        let id_n = QMat::identity(other.dim);

        let mut e = Vec::with_capacity(rank);
        let mut f = Vec::with_capacity(rank);
        let mut k = Vec::with_capacity(rank);
        let mut k_inv = Vec::with_capacity(rank);
        for i in 1..=rank {
            e.push(self.e(i).kron(other.k(i)).add(&id_m.kron(other.e(i))));
            f.push(self.f(i).kron(&id_n).add(&self.k_inv(i).kron(other.f(i))));
            k.push(self.k(i).kron(other.k(i)));
            k_inv.push(self.k_inv(i).kron(other.k_inv(i)));
        }

        let mut weights = Vec::with_capacity(self.dim * other.dim);
        for wm in &self.weights {
            for wn in &other.weights {
                weights.push(wm.add(wn));
            }
        }

        Ok(QModule {
            cd: self.cd.clone(),
            root_order: self.root_order,
            dim: self.dim * other.dim,
            weights,
            e,
            f,
            k,
            k_inv,
        })
    }

    // ---- Highest weight vectors ----

    /// Deterministic basis of the joint kernel of all raising operators,
    /// computed weight space by weight space (echelon form within each).
    /// Returned in decreasing Casimir order of the weight, ties broken by
    /// descending weight coordinates.
    pub fn highest_weight_vectors(&self) -> Vec<HighestWeightVector> {
        let rank = self.cd.rank();
        // group basis indices by weight
        let mut groups: Vec<(Weight, Vec<usize>)> = Vec::new();
        for (idx, w) in self.weights.iter().enumerate() {
            match groups.iter_mut().find(|(gw, _)| gw == w) {
                Some((_, v)) => v.push(idx),
                None => groups.push((w.clone(), vec![idx])),
            }
        }
        groups.sort_by(|(wa, _), (wb, _)| {
            let ca = self.hw_sort_key(wa);
            let cb = self.hw_sort_key(wb);
            cb.partial_cmp(&ca)
                .unwrap()
                .then_with(|| wb.coords().cmp(wa.coords()))
        });

        let mut out = Vec::new();
        for (w, cols) in &groups {
            // stack the restrictions of every E_i from this weight space
            let mut rows_total = 0;
            let mut blocks: Vec<(usize, Vec<usize>)> = Vec::new(); // (gen index, target rows)
            for i in 1..=rank {
                let alpha = self.cd.simple_root(i).expect("in range");
                let target = w.add(&alpha);
                let target_rows: Vec<usize> = (0..self.dim)
                    .filter(|&r| self.weights[r] == target)
                    .collect();
                rows_total += target_rows.len();
                blocks.push((i, target_rows));
            }
            let kernel = if rows_total == 0 {
                // no raising possible from this weight: everything is highest
                (0..cols.len())
                    .map(|j| {
                        let mut v =
                            vec![FieldElement::zero_with_order(self.root_order); cols.len()];
                        v[j] = self.one();
                        v
                    })
                    .collect::<Vec<_>>()
            } else {
                let mut stacked = QMat::zeros(rows_total, cols.len());
                let mut row_off = 0;
                for (i, target_rows) in &blocks {
                    let em = self.e(*i);
                    for (rr, &r) in target_rows.iter().enumerate() {
                        for (cc, &c) in cols.iter().enumerate() {
                            stacked.set(row_off + rr, cc, em.get(r, c).clone());
                        }
                    }
                    row_off += target_rows.len();
                }
                stacked.kernel_basis()
            };
            for kv in kernel {
                let mut coeffs = vec![FieldElement::zero_with_order(self.root_order); self.dim];
                for (cc, &c) in cols.iter().enumerate() {
                    coeffs[c] = kv[cc].clone();
                }
                out.push(HighestWeightVector {
                    weight: w.clone(),
                    coeffs,
                });
            }
        }
        out
    }

    fn hw_sort_key(&self, w: &Weight) -> Rat {
        // Casimir of the shifted weight; monotone enough for a stable,
        // reproducible ordering even on non-dominant weights.
        let two_rho = self.cd.weyl_vector().scaled(2);
        self.cd
            .weight_inner_product(w, &w.add(&two_rho))
            .unwrap_or_else(|_| Rat::from_integer(BigInt::from(0)))
    }

    /// Apply a generator to a coefficient vector.
    pub fn apply(&self, g: Generator, i: usize, v: &[FieldElement]) -> Vec<FieldElement> {
        self.generator(g, i).mul_vec(v)
    }
}
