//! The functor `E_m(V) = V ⊗ G(C^m ⊗ C^n)` with its Yangian action, and
//! coinvariant spaces of induced modules realized through canonical
//! representatives `1 ⊗ b ⊗ x_g`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enveloping::{basis, verma_apply, VermaVector, Weight};
use crate::error::{Error, Result};
use crate::exact::{determinant, nullspace, to_sparse, QMatrix, Rational, RowEchelon, Subspace};
use crate::glmodule::GlModule;
use crate::grassmann::{bits_of, gamma, COperator, GElement, Mask, Shape};
use crate::hecke::{cherednik, index_of};
use crate::perm::Perm;
use crate::report::CheckOutcome;
use crate::yangian::{
    degree_masks, full_evaluation_module, intertwiner_space_masked, skew_drinfeld_parts, submatrix,
    tau_shift, tensor, YangianModule,
};

/// `x_{ai} ∂_{bj}`.
fn xd(shape: Shape, a: usize, i: usize, b: usize, j: usize) -> COperator {
    COperator::term(shape, 1 << shape.beta(a, i), 1 << shape.beta(b, j), Rational::one())
}

fn columns_to_matrix(dim: usize, cols: Vec<BTreeMap<usize, Rational>>) -> QMatrix {
    let trip = cols
        .into_iter()
        .enumerate()
        .flat_map(|(c, col)| col.into_iter().map(move |(r, v)| (r, c, v)));
    QMatrix::from_triplets(dim, dim, trip.collect::<Vec<_>>())
}

/// Matrix of `T_ij^{(s+1)}` on `E_m(V)`, i.e. of
/// `Σ E_{c1c0} E_{c2c1} ⋯ E_{c_s c_{s−1}} ⊗ x_{c0 i} ∂_{c_s j}`
/// (index of `v ⊗ x_g` is `v · 2^{mn} + g`).
pub fn e_action(v: &GlModule, n: usize, s: usize, i: usize, j: usize) -> Result<QMatrix> {
    let (m, d) = (v.rank(), v.dim());
    if i >= n || j >= n {
        return Err(Error::IndexOutOfRange(format!("({i},{j}) for n = {n}")));
    }
    let shape = Shape::new(m, n);
    // Block (a, b) of `hat` is ρ(E_ba), so block (c0, cs) of hat^s is the
    // image of E_{c1c0} ⋯ E_{c_s c_{s−1}} summed over inner indices.
    let grid: Vec<Vec<QMatrix>> = (0..m).map(|a| (0..m).map(|b| v.e(b, a).clone()).collect()).collect();
    let hat = QMatrix::from_blocks(&grid).pow(s);
    let mut acc = QMatrix::zeros(d << shape.bits(), d << shape.bits());
    for c0 in 0..m {
        for cs in 0..m {
            let blk = hat.block(c0 * d, cs * d, d, d);
            if !blk.is_zero() {
                acc = &acc + &blk.kron(&xd(shape, c0, i, cs, j).to_matrix());
            }
        }
    }
    Ok(acc)
}

/// `E_m(V)` as a `Y(gl_n)`-module up to order `S`.
pub fn e_action_module(v: &GlModule, n: usize, order: usize) -> YangianModule {
    let t = (0..order)
        .map(|s| {
            (0..n * n)
                .map(|k| e_action(v, n, s, k / n, k % n).expect("indices in range"))
                .collect()
        })
        .collect();
    YangianModule::new(n, v.dim() << (v.rank() * n), t).expect("consistent sizes")
}

/// Diagonal `gl_m` action `ρ(E_ab) ⊗ 1 + 1 ⊗ γ(E_ab)` on `E_m(V)`.
pub fn e_gl_action(v: &GlModule, n: usize, a: usize, b: usize) -> QMatrix {
    let shape = Shape::new(v.rank(), n);
    &v.e(a, b).kron(&QMatrix::identity(shape.dim()))
        + &QMatrix::identity(v.dim()).kron(&gamma(shape, a, b).expect("in range").to_matrix())
}

/// Lowering subalgebra used for coinvariants, as a set of units `E_ba`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoweringSet {
    rank: usize,
    split: usize,
    parabolic: bool,
}

impl LoweringSet {
    /// `n`: all `E_ba` with `a < b`.
    pub fn borel(m: usize) -> Self {
        LoweringSet {
            rank: m,
            split: 0,
            parabolic: false,
        }
    }

    /// `q`: all `E_ba` with `a < m ≤ b` inside `gl_{m+l}`.
    pub fn parabolic(m: usize, l: usize) -> Self {
        LoweringSet {
            rank: m + l,
            split: m,
            parabolic: true,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Whether the unit `E_cd` belongs to the set.
    pub fn contains(&self, c: usize, d: usize) -> bool {
        c < self.rank
            && d < self.rank
            && if self.parabolic {
                d < self.split && self.split <= c
            } else {
                d < c
            }
    }

    /// The units in the set, ordered lexicographically by `(c, d)`.
    pub fn units(&self) -> Vec<(usize, usize)> {
        (0..self.rank)
            .flat_map(|c| (0..self.rank).map(move |d| (c, d)))
            .filter(|&(c, d)| self.contains(c, d))
            .collect()
    }
}

/// `Σ c · X_1 ⋯ X_k (1 ⊗ b) ⊗ x_g` before reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTerm {
    pub lowering: Vec<(usize, usize)>,
    pub base: usize,
    pub mask: Mask,
    pub coeff: Rational,
}

/// A coinvariant class stored by its canonical representative
/// `Σ c · 1 ⊗ b ⊗ x_g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvariantVector {
    shape: Shape,
    base_dim: usize,
    terms: BTreeMap<(usize, Mask), Rational>,
}

impl CoinvariantVector {
    pub fn zero(shape: Shape, base_dim: usize) -> Self {
        CoinvariantVector {
            shape,
            base_dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, Mask), Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, base: usize, g: &GElement, c: &Rational) {
        for (mask, x) in g.terms() {
            let e = self.terms.entry((base, *mask)).or_insert_with(Rational::zero);
            *e += x * c;
            if e.is_zero() {
                self.terms.remove(&(base, *mask));
            }
        }
    }

    /// Coordinates, with `1 ⊗ b ⊗ x_g` at index `b · 2^{bits} + g`.
    pub fn to_vector(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.base_dim * self.shape.dim()];
        for ((b, g), c) in &self.terms {
            v[b * self.shape.dim() + *g as usize] = c.clone();
        }
        v
    }
}

/// `X_1 ⋯ X_k w ⊗ g ≡ (−1)^k w ⊗ γ(X_k) ⋯ γ(X_1) g`, peeling the leftmost
/// factor first.
fn peel(shape: Shape, word: &[(usize, usize)], g: GElement) -> GElement {
    word.iter().fold(g, |acc, &(c, d)| {
        gamma(shape, c, d).expect("in range").apply(&acc).scale(&-Rational::one())
    })
}

/// Canonical representative of a raw element modulo the lowering set.
pub fn reduce(raw: &[RawTerm], lowering: &LoweringSet, shape: Shape, base_dim: usize) -> Result<CoinvariantVector> {
    if shape.m != lowering.rank() {
        return Err(Error::RankMismatch(shape.m, lowering.rank()));
    }
    let mut out = CoinvariantVector::zero(shape, base_dim);
    for t in raw {
        if let Some(&(c, d)) = t.lowering.iter().find(|&&(c, d)| !lowering.contains(c, d)) {
            return Err(Error::IndexOutOfRange(format!("E_{}{} is not in the lowering set", c + 1, d + 1)));
        }
        if t.base >= base_dim || t.mask >> shape.bits() != 0 {
            return Err(Error::IndexOutOfRange(format!("base {} or mask {:#b}", t.base, t.mask)));
        }
        let g = peel(shape, &t.lowering, GElement::monomial(shape, t.mask, Rational::one()));
        out.push(t.base, &g, &t.coeff);
    }
    Ok(out)
}

/// `E_m(M_μ)_n` together with the `h`-action.
#[derive(Clone, Debug)]
pub struct VermaCoinvariants {
    pub mu: Weight,
    pub shape: Shape,
    pub module: YangianModule,
    /// Diagonal matrices of `E_aa`.
    pub h: Vec<QMatrix>,
}

/// `n`-coinvariants of `M_μ ⊗ G(C^m ⊗ C^n)` on the `2^{mn}` canonical
/// vectors `1_μ ⊗ x_g`.
pub fn verma_coinvariants_module(mu: &Weight, n: usize, order: usize) -> VermaCoinvariants {
    let m = mu.len();
    let shape = Shape::new(m, n);
    let dim = shape.dim();
    let b = basis(m);
    // vs[s][c0*m + cs] = E_{c1c0} ⋯ E_{cs c_{s−1}} 1_μ
    let mut vs: Vec<Vec<VermaVector>> = vec![(0..m * m)
        .map(|k| {
            if k / m == k % m {
                VermaVector::highest(mu)
            } else {
                VermaVector::zero(mu)
            }
        })
        .collect()];
    for s in 1..order {
        let prev = &vs[s - 1];
        let row = (0..m * m)
            .map(|k| {
                let (c0, cs) = (k / m, k % m);
                (0..m).fold(VermaVector::zero(mu), |acc, c1| {
                    acc.add(&verma_apply(c1, c0, &prev[c1 * m + cs]))
                })
            })
            .collect();
        vs.push(row);
    }
    let mut t = Vec::with_capacity(order);
    for vrow in vs.iter().take(order) {
        let mut row = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut cols = Vec::with_capacity(dim);
                for g in 0..dim as Mask {
                    let mut out = CoinvariantVector::zero(shape, 1);
                    let gel = GElement::monomial(shape, g, Rational::one());
                    for c0 in 0..m {
                        for cs in 0..m {
                            let vec = &vrow[c0 * m + cs];
                            if vec.is_zero() {
                                continue;
                            }
                            let h = xd(shape, c0, i, cs, j).apply(&gel);
                            if h.is_zero() {
                                continue;
                            }
                            for (mono, c) in vec.terms() {
                                let word: Vec<(usize, usize)> = mono.iter().map(|&x| b.unit(x)).collect();
                                out.push(0, &peel(shape, &word, h.clone()), c);
                            }
                        }
                    }
                    cols.push(out.terms.into_iter().map(|((_, g2), c)| (g2 as usize, c)).collect());
                }
                row.push(columns_to_matrix(dim, cols));
            }
        }
        t.push(row);
    }
    let h = (0..m)
        .map(|a| {
            let trip = (0..dim).map(|g| {
                let w = shape.row_weight(g as Mask)[a];
                (g, g, &mu.0[a] + Rational::from_integer((w as i64).into()))
            });
            QMatrix::from_triplets(dim, dim, trip.collect::<Vec<_>>())
        })
        .collect();
    VermaCoinvariants {
        mu: mu.clone(),
        shape,
        module: YangianModule::new(n, dim, t).expect("consistent sizes"),
        h,
    }
}

/// Elements `Σ c · Y · (1 ⊗ w)` of the induced module, `Y` a sorted word
/// in the abelian `q`.
type Induced = BTreeMap<(Vec<(usize, usize)>, usize), Rational>;

fn add_induced(acc: &mut Induced, key: (Vec<(usize, usize)>, usize), c: Rational) {
    if c.is_zero() {
        return;
    }
    let e = acc.entry(key.clone()).or_insert_with(Rational::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&key);
    }
}

/// `gl_{m+l}` acting on the module induced from `V ⊗ U`.
struct InducedAction {
    k: usize,
    lowering: LoweringSet,
    /// Transposes of the Levi matrices on `V ⊗ U`, keyed by `(c, d)`.
    levi_t: HashMap<(usize, usize), QMatrix>,
}

impl InducedAction {
    fn new(v: &GlModule, u: &GlModule) -> Self {
        let (m, l) = (v.rank(), u.rank());
        let k = m + l;
        let (iv, iu) = (QMatrix::identity(v.dim()), QMatrix::identity(u.dim()));
        let mut levi_t = HashMap::new();
        for c in 0..k {
            for d in 0..k {
                let mat = if c < m && d < m {
                    v.e(c, d).kron(&iu)
                } else if c >= m && d >= m {
                    iv.kron(u.e(c - m, d - m))
                } else {
                    continue;
                };
                levi_t.insert((c, d), mat.transpose());
            }
        }
        InducedAction {
            k,
            lowering: LoweringSet::parabolic(m, l),
            levi_t,
        }
    }

    /// `E_cd · Y (1 ⊗ w)` using `E_cd Y_1 R = Y_1 E_cd R + [E_cd, Y_1] R`.
    fn apply_term(&self, c: usize, d: usize, word: &[(usize, usize)], w: usize, coeff: &Rational, out: &mut Induced) {
        if self.lowering.contains(c, d) {
            let mut nw = word.to_vec();
            nw.push((c, d));
            nw.sort_unstable();
            add_induced(out, (nw, w), coeff.clone());
            return;
        }
        let Some((&y, rest)) = word.split_first() else {
            // Raising units of the complement act by zero on 1 ⊗ w.
            if let Some(t) = self.levi_t.get(&(c, d)) {
                for (r, x) in t.row(w) {
                    add_induced(out, (Vec::new(), *r), coeff * x);
                }
            }
            return;
        };
        let mut tmp = Induced::new();
        self.apply_term(c, d, rest, w, coeff, &mut tmp);
        for ((mut wd, b), x) in tmp {
            wd.push(y);
            wd.sort_unstable();
            add_induced(out, (wd, b), x);
        }
        let (a, b) = y;
        if d == a {
            self.apply_term(c, b, rest, w, coeff, out);
        }
        if b == c {
            self.apply_term(a, d, rest, w, &-coeff.clone(), out);
        }
    }

    fn apply(&self, c: usize, d: usize, x: &Induced) -> Induced {
        let mut out = Induced::new();
        for ((word, w), coeff) in x {
            self.apply_term(c, d, word, *w, coeff, &mut out);
        }
        out
    }
}

/// `q`-coinvariants of the module induced from `V ⊗ U`, tensored with
/// `G(C^{m+l} ⊗ C^n)`.
#[derive(Clone, Debug)]
pub struct ParabolicCoinvariants {
    pub m: usize,
    pub l: usize,
    pub n: usize,
    pub dim_v: usize,
    pub dim_u: usize,
    /// Basis `1 ⊗ (v ⊗ u) ⊗ x_g` at index `(v · dim U + u) · 2^{(m+l)n} + g`.
    pub module: YangianModule,
    /// Matrices of the Levi units `E_cd` (both indices in the same block),
    /// keyed by `(c, d)`.
    pub levi: BTreeMap<(usize, usize), QMatrix>,
}

pub fn parabolic_coinvariants_module(v: &GlModule, u: &GlModule, n: usize, order: usize) -> ParabolicCoinvariants {
    let act = InducedAction::new(v, u);
    let k = act.k;
    let shape = Shape::new(k, n);
    let base_dim = v.dim() * u.dim();
    let gdim = shape.dim();
    let dim = base_dim * gdim;
    // per base vector: vs[s][c0*k + cs]
    let per_base: Vec<Vec<Vec<Induced>>> = (0..base_dim)
        .map(|w| {
            let mut vs = vec![(0..k * k)
                .map(|x| {
                    let mut e = Induced::new();
                    if x / k == x % k {
                        e.insert((Vec::new(), w), Rational::one());
                    }
                    e
                })
                .collect::<Vec<_>>()];
            for s in 1..order {
                let row = (0..k * k)
                    .map(|x| {
                        let (c0, cs) = (x / k, x % k);
                        let mut acc = Induced::new();
                        for c1 in 0..k {
                            for (key, c) in act.apply(c1, c0, &vs[s - 1][c1 * k + cs]) {
                                add_induced(&mut acc, key, c);
                            }
                        }
                        acc
                    })
                    .collect();
                vs.push(row);
            }
            vs
        })
        .collect();
    let mut t = Vec::with_capacity(order);
    for s in 0..order {
        let mut row = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut cols = Vec::with_capacity(dim);
                for vs in &per_base {
                    for g in 0..gdim as Mask {
                        let mut out = CoinvariantVector::zero(shape, base_dim);
                        let gel = GElement::monomial(shape, g, Rational::one());
                        for c0 in 0..k {
                            for cs in 0..k {
                                let x = &vs[s][c0 * k + cs];
                                if x.is_empty() {
                                    continue;
                                }
                                let h = xd(shape, c0, i, cs, j).apply(&gel);
                                if h.is_zero() {
                                    continue;
                                }
                                for ((word, b), c) in x {
                                    out.push(*b, &peel(shape, word, h.clone()), c);
                                }
                            }
                        }
                        cols.push(
                            out.terms
                                .into_iter()
                                .map(|((b, g2), c)| (b * gdim + g2 as usize, c))
                                .collect(),
                        );
                    }
                }
                row.push(columns_to_matrix(dim, cols));
            }
        }
        t.push(row);
    }
    let mut levi = BTreeMap::new();
    for (&(c, d), mt) in &act.levi_t {
        let g = gamma(shape, c, d).expect("in range").to_matrix();
        levi.insert((c, d), &mt.transpose().kron(&QMatrix::identity(gdim)) + &QMatrix::identity(base_dim).kron(&g));
    }
    ParabolicCoinvariants {
        m: v.rank(),
        l: u.rank(),
        n,
        dim_v: v.dim(),
        dim_u: u.dim(),
        module: YangianModule::new(n, dim, t).expect("consistent sizes"),
        levi,
    }
}

/// Basis map `χ`: entry `k` of the tensor basis of `E_m(V) ⊗ E_l(U)` is the
/// canonical vector with the returned index (all signs `+1`, the rows of
/// `V`'s grid coming first).
pub fn chi_map(p: &ParabolicCoinvariants) -> Vec<(Rational, usize)> {
    let (g1, g2) = (1usize << (p.m * p.n), 1usize << (p.l * p.n));
    let right = p.dim_u * g2;
    (0..p.dim_v * g1 * right)
        .map(|k| {
            let (left, r) = (k / right, k % right);
            let (v, a) = (left / g1, left % g1);
            let (u, b) = (r / g2, r % g2);
            (Rational::one(), (v * p.dim_u + u) * g1 * g2 + (a | b << (p.m * p.n)))
        })
        .collect()
}

fn first_module_mismatch(a: &YangianModule, b: &YangianModule) -> Option<String> {
    if a.dim() != b.dim() || a.order() != b.order() {
        return Some(format!("shapes differ: dim {} vs {}", a.dim(), b.dim()));
    }
    a.generators()
        .zip(b.generators())
        .find(|((_, _, _, x), (_, _, _, y))| x != y)
        .map(|((s, i, j, _), _)| format!("T_{}{}^({s}) differs", i + 1, j + 1))
}

/// Compares the `q`-coinvariants with `E_m(V) ⊗ τ_{z}(E_l(U))` under `χ`.
pub fn compare_parind(v: &GlModule, u: &GlModule, n: usize, order: usize, shift: &Rational) -> Option<String> {
    let p = parabolic_coinvariants_module(v, u, n, order);
    let left = e_action_module(v, n, order);
    let right = tau_shift(&e_action_module(u, n, order), shift);
    let expected = tensor(&left, &right).expect("same n");
    let chi = chi_map(&p);
    let transported = YangianModule::new(
        n,
        p.module.dim(),
        (1..=order)
            .map(|s| {
                (0..n * n)
                    .map(|x| p.module.t(s, x / n, x % n).transport(&chi))
                    .collect()
            })
            .collect(),
    )
    .expect("consistent sizes");
    first_module_mismatch(&transported, &expected)
}

/// Equality of the parabolic coinvariants with `E_m(V) ⊗ τ_{−m}(E_l(U))`.
pub fn check_parind(v: &GlModule, u: &GlModule, n: usize, order: usize) -> CheckOutcome {
    let shift = -Rational::from_integer((v.rank() as i64).into());
    CheckOutcome::from_failure("parind", compare_parind(v, u, n, order, &shift))
}

/// Outcome of the bimodule-equivalence search.
#[derive(Clone, Debug)]
pub struct BimequivOutcome {
    pub solution_dim: usize,
    pub determinant: Rational,
    pub outcome: CheckOutcome,
}

/// Weight index of a tensor basis vector of `⊗_a Λ(C^n)` (first factor most
/// significant) in terms of the Grassmann mask with row `a` = factor `a`.
fn tensor_index_of_mask(shape: Shape, g: Mask) -> usize {
    let row = (1usize << shape.n) - 1;
    (0..shape.m).fold(0, |acc, a| (acc << shape.n) | ((g as usize >> (a * shape.n)) & row))
}

/// `⊗_a τ_{−a}(Λ(C^n) at z = μ_a)`, factor `a = 0` leftmost.
pub fn bimequiv_target(mu: &Weight, n: usize, order: usize) -> YangianModule {
    (0..mu.len())
        .map(|a| {
            let shift = -Rational::from_integer((a as i64).into());
            tau_shift(&full_evaluation_module(n, &mu.0[a], order), &shift)
        })
        .reduce(|acc, f| tensor(&acc, &f).expect("same n"))
        .expect("m ≥ 1")
}

/// Searches an invertible `h`-equivariant intertwiner from `E_m(M_μ)_n` to
/// the tensor product of shifted evaluation modules: unknowns live in
/// matching weight blocks and a seeded random combination of the solution
/// basis is tested for a nonzero determinant.
pub fn check_bimequiv(mu: &Weight, n: usize, order: usize, seed: u64) -> BimequivOutcome {
    let vc = verma_coinvariants_module(mu, n, order);
    let target = bimequiv_target(mu, n, order);
    let shape = vc.shape;
    let dim = shape.dim();
    // Weight of a basis vector of either side, as row counts.
    let mut tindex = vec![0; dim];
    let mut src_weight = vec![Vec::new(); dim];
    let mut dst_weight = vec![Vec::new(); dim];
    for g in 0..dim {
        let w = shape.row_weight(g as Mask);
        tindex[g] = tensor_index_of_mask(shape, g as Mask);
        src_weight[g] = w.clone();
        dst_weight[tindex[g]] = w;
    }
    let h_target: Vec<QMatrix> = (0..mu.len())
        .map(|a| {
            let trip = (0..dim).map(|r| (r, r, &mu.0[a] + Rational::from_integer((dst_weight[r][a] as i64).into())));
            QMatrix::from_triplets(dim, dim, trip.collect::<Vec<_>>())
        })
        .collect();
    let extra: Vec<(QMatrix, QMatrix)> = vc.h.iter().cloned().zip(h_target).collect();
    let allowed = |r: usize, c: usize| dst_weight[r] == src_weight[c];
    let sols = intertwiner_space_masked(&vc.module, &target, &extra, Some(&allowed)).expect("same shapes");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let combo = sols.iter().fold(QMatrix::zeros(dim, dim), |acc, x| {
        acc.add_scaled(x, &Rational::from_integer(rng.gen_range(1i64..=97).into()))
    });
    let det = determinant(&combo);
    let outcome = if sols.is_empty() {
        CheckOutcome::fail("bimequiv", "no intertwiner")
    } else if det.is_zero() {
        CheckOutcome::fail("bimequiv", format!("{} intertwiners, random combination singular", sols.len()))
    } else {
        CheckOutcome::pass("bimequiv")
    };
    BimequivOutcome {
        solution_dim: sols.len(),
        determinant: det,
        outcome,
    }
}

/// Embedding `e_v ⊗ x_{β_1} ⋯ x_{β_N} ↦ Σ_π sgn(π) e_v ⊗ e_{a_π} ⊗ e_{i_π}`
/// of a degree-`N` block of `E_m(V)` into `V ⊗ (C^m)^{⊗N} ⊗ (C^n)^{⊗N}`.
fn antisymmetrized_tensor(dim_v: usize, shape: Shape, v: usize, g: Mask) -> Vec<Rational> {
    let bits: Vec<usize> = bits_of(g).collect();
    let np = bits.len();
    let (m, n) = (shape.m, shape.n);
    let (mp, np_pow) = (m.pow(np as u32), n.pow(np as u32));
    let mut out = vec![Rational::zero(); dim_v * mp * np_pow];
    for pi in Perm::all(np) {
        let a: Vec<usize> = (0..np).map(|k| shape.row_of(bits[pi.apply(k)])).collect();
        let i: Vec<usize> = (0..np).map(|k| shape.col_of(bits[pi.apply(k)])).collect();
        let idx = (v * mp + index_of(&a, m)) * np_pow + index_of(&i, n);
        out[idx] += Rational::from_integer(pi.sign().into());
    }
    out
}

/// Compares `E_m(V)` on its degree-`N` block with the skew Drinfeld functor
/// applied to the Cherednik module `V ⊗ (C^m)^{⊗N}`.
pub fn check_dast_oracle(v: &GlModule, n: usize, np: usize, order: usize) -> CheckOutcome {
    let name = "dast-oracle";
    let (m, dv) = (v.rank(), v.dim());
    let shape = Shape::new(m, n);
    let masks = degree_masks(m * n, np);
    let idx: Vec<usize> = (0..dv)
        .flat_map(|x| masks.iter().map(move |&g| x * shape.dim() + g as usize))
        .collect();
    let e = e_action_module(v, n, order);
    let w = cherednik(v, np);
    let (sd, sub) = match skew_drinfeld_parts(&w, n, order) {
        Ok(x) => x,
        Err(err) => return CheckOutcome::fail(name, err.to_string()),
    };
    if sub.dim() != idx.len() {
        return CheckOutcome::fail(name, format!("skew-invariants of dim {} vs block of dim {}", sub.dim(), idx.len()));
    }
    let mut cols = Vec::with_capacity(idx.len());
    for x in 0..dv {
        for &g in &masks {
            match sub.coords(&antisymmetrized_tensor(dv, shape, x, g)) {
                Some(c) => cols.push(c),
                None => return CheckOutcome::fail(name, "embedded vector is not skew-invariant"),
            }
        }
    }
    let p = QMatrix::from_columns(sub.dim(), &cols);
    if determinant(&p).is_zero() {
        return CheckOutcome::fail(name, "identification is singular");
    }
    for s in 1..=order {
        for i in 0..n {
            for j in 0..n {
                let blk = submatrix(e.t(s, i, j), &idx);
                if sd.t(s, i, j) * &p != &p * &blk {
                    return CheckOutcome::fail(name, format!("T_{}{}^({s}) differs", i + 1, j + 1));
                }
            }
        }
    }
    CheckOutcome::pass(name)
}

/// `μ*_b = #{a : μ_a ≥ b}`, `b = 1, …, μ_1`.
pub fn conjugate_partition(mu: &[usize]) -> Vec<usize> {
    let top = mu.iter().copied().max().unwrap_or(0);
    (1..=top).map(|b| mu.iter().filter(|&&x| x >= b).count()).collect()
}

/// Validates a polynomial weight (non-negative, non-increasing labels).
pub fn polynomial_weight(mu: &[i64]) -> Result<Vec<usize>> {
    if mu.iter().any(|&x| x < 0) || mu.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotPolynomial(format!("{mu:?}")));
    }
    Ok(mu.iter().map(|&x| x as usize).collect())
}

/// `Π_{a<b} (μ_a − μ_b + b − a) / (b − a)`.
pub fn weyl_dimension(mu: &[usize]) -> usize {
    let m = mu.len();
    let mut r = Rational::one();
    for a in 0..m {
        for b in a + 1..m {
            r *= Rational::new(
                (mu[a] as i64 - mu[b] as i64 + (b - a) as i64).into(),
                ((b - a) as i64).into(),
            );
        }
    }
    r.to_integer().try_into().expect("small dimension")
}

/// `L_μ` realized inside `G(C^m ⊗ C^{μ_1})`.
#[derive(Clone, Debug)]
pub struct PolynomialIrrep {
    pub mu: Vec<usize>,
    pub shape: Shape,
    pub space: Subspace,
    pub module: GlModule,
}

/// Span of lowering operators applied to `Π_j x_{1j} x_{2j} ⋯ x_{μ*_j j}`.
pub fn construct_polynomial_irrep(mu: &[i64]) -> Result<PolynomialIrrep> {
    let mu = polynomial_weight(mu)?;
    let m = mu.len();
    let cols = mu.first().copied().unwrap_or(0);
    let shape = Shape::new(m, cols);
    if cols == 0 {
        let space = Subspace::new(1, vec![vec![Rational::one()]]).expect("nonzero");
        return Ok(PolynomialIrrep {
            mu,
            shape,
            space,
            module: GlModule::trivial(m),
        });
    }
    let conj = conjugate_partition(&mu);
    let gens: Vec<(usize, usize)> = conj
        .iter()
        .enumerate()
        .flat_map(|(j, &h)| (0..h).map(move |a| (a, j)))
        .collect();
    let top = GElement::product_of(shape, &gens)?;
    let lowering: Vec<COperator> = (0..m)
        .flat_map(|a| (a + 1..m).map(move |b| (b, a)))
        .map(|(b, a)| gamma(shape, b, a).expect("in range"))
        .collect();
    let mut ech = RowEchelon::new(shape.dim());
    let mut found = Vec::new();
    let mut queue = vec![top];
    while let Some(x) = queue.pop() {
        let v = x.to_vector();
        if ech.insert(&to_sparse(&v)) {
            found.push(v);
            queue.extend(lowering.iter().map(|op| op.apply(&x)).filter(|y| !y.is_zero()));
        }
    }
    let space = Subspace::new(shape.dim(), found).expect("independent by construction");
    let module = GlModule::grassmann(m, cols).restrict(&space)?;
    Ok(PolynomialIrrep {
        mu,
        shape,
        space,
        module,
    })
}

/// Dimension of highest-weight-`λ` vectors in `L_μ ⊗ G(C^m ⊗ C^n)`.
pub fn hom_multiplicity(lambda: &[i64], mu: &[i64], n: usize) -> Result<usize> {
    let lam = polynomial_weight(lambda)?;
    let irrep = construct_polynomial_irrep(mu)?;
    let m = irrep.mu.len();
    if lam.len() != m {
        return Err(Error::RankMismatch(lam.len(), m));
    }
    let total = if n == 0 {
        irrep.module.clone()
    } else {
        irrep.module.tensor(&GlModule::grassmann(m, n))
    };
    let d = total.dim();
    let mut blocks = Vec::new();
    for a in 0..m {
        blocks.push(vec![total.e(a, a).add_scaled(&QMatrix::identity(d), &-Rational::from_integer((lam[a] as i64).into()))]);
        for b in a + 1..m {
            blocks.push(vec![total.e(a, b).clone()]);
        }
    }
    Ok(nullspace(&QMatrix::from_blocks(&blocks)).len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use crate::grassmann::gln_op;
    use crate::report::all_passed;
    use crate::yangian::check_yangian_relations;

    #[test]
    fn zeroth_coefficient_is_gl_n() {
        let v = GlModule::natural(2);
        let shape = Shape::new(2, 2);
        for i in 0..2 {
            for j in 0..2 {
                let expect = QMatrix::identity(2).kron(&gln_op(shape, i, j).unwrap().to_matrix());
                assert_eq!(e_action(&v, 2, 0, i, j).unwrap(), expect);
            }
        }
    }

    #[test]
    fn rank_one_character() {
        let t = rat(3, 7);
        let v = GlModule::scalar_character(1, t.clone());
        let shape = Shape::new(1, 2);
        for s in 0..4 {
            let ts = (0..s).fold(Rational::one(), |acc, _| acc * &t);
            for i in 0..2 {
                for j in 0..2 {
                    let expect = xd(shape, 0, i, 0, j).to_matrix().scale(&ts);
                    assert_eq!(e_action(&v, 2, s, i, j).unwrap(), expect);
                }
            }
        }
    }

    #[test]
    fn e_action_commutes_with_gl_m() {
        for m in 1..=2 {
            for n in 1..=2 {
                let v = GlModule::natural(m);
                for s in 0..=3 {
                    for i in 0..n {
                        for j in 0..n {
                            let t = e_action(&v, n, s, i, j).unwrap();
                            for a in 0..m {
                                for b in 0..m {
                                    assert!(t.commutator(&e_gl_action(&v, n, a, b)).is_zero());
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn e_action_module_relations() {
        let m = e_action_module(&GlModule::natural(2), 2, 4);
        assert!(check_yangian_relations(&m).passed);
    }

    #[test]
    fn reduce_single_peel() {
        let shape = Shape::new(2, 1);
        let raw = [RawTerm {
            lowering: vec![(1, 0)],
            base: 0,
            mask: 1 << shape.beta(0, 0),
            coeff: int(1),
        }];
        let r = reduce(&raw, &LoweringSet::borel(2), shape, 1).unwrap();
        let expect = BTreeMap::from([((0, 1 << shape.beta(1, 0)), int(-1))]);
        assert_eq!(r.terms(), &expect);
        let canon = [RawTerm {
            lowering: vec![],
            base: 0,
            mask: 3,
            coeff: rat(2, 3),
        }];
        let r = reduce(&canon, &LoweringSet::borel(2), shape, 1).unwrap();
        assert_eq!(r.terms(), &BTreeMap::from([((0, 3), rat(2, 3))]));
        let bad = [RawTerm {
            lowering: vec![(0, 1)],
            ..canon[0].clone()
        }];
        assert!(reduce(&bad, &LoweringSet::borel(2), shape, 1).is_err());
    }

    #[test]
    fn reduce_is_independent_of_peeling_order() {
        // X1 X2 = X2 X1 + [X1, X2]: reduce both sides of the rewrite.
        let shape = Shape::new(3, 2);
        let low = LoweringSet::borel(3);
        let units = low.units();
        for &x1 in &units {
            for &x2 in &units {
                for mask in [0b000011u64, 0b000101, 0b010010, 0b001001] {
                    let term = |word: Vec<(usize, usize)>, c: Rational| RawTerm {
                        lowering: word,
                        base: 0,
                        mask,
                        coeff: c,
                    };
                    let direct = reduce(&[term(vec![x1, x2], int(1))], &low, shape, 1).unwrap();
                    let mut swapped = vec![term(vec![x2, x1], int(1))];
                    // [E_ab, E_cd] = δ_bc E_ad − δ_da E_cb
                    let ((a, b), (c, d)) = (x1, x2);
                    if b == c {
                        swapped.push(term(vec![(a, d)], int(1)));
                    }
                    if d == a {
                        swapped.push(term(vec![(c, b)], int(-1)));
                    }
                    assert_eq!(direct, reduce(&swapped, &low, shape, 1).unwrap());
                }
            }
        }
    }

    #[test]
    fn verma_rank_one_is_evaluation() {
        let t = rat(2, 5);
        let vc = verma_coinvariants_module(&Weight(vec![t.clone()]), 2, 4);
        assert_eq!(vc.module, full_evaluation_module(2, &t, 4));
    }

    #[test]
    fn verma_coinvariants_relations_and_weights() {
        let mu = Weight(vec![rat(1, 3), rat(-1, 5)]);
        let vc = verma_coinvariants_module(&mu, 2, 4);
        assert!(check_yangian_relations(&vc.module).passed);
        let g = 1usize << vc.shape.beta(0, 0);
        assert_eq!(vc.h[0].get(g, g), &mu.0[0] + int(1));
        assert_eq!(vc.h[1].get(g, g), mu.0[1].clone());
        for (_, _, _, t) in vc.module.generators() {
            for h in &vc.h {
                assert!(t.commutator(h).is_zero());
            }
        }
    }

    #[test]
    fn parabolic_dimensions_and_levi() {
        let v = GlModule::scalar_character(1, rat(1, 2));
        let u = GlModule::scalar_character(1, rat(-1, 3));
        for n in 1..=2 {
            let p = parabolic_coinvariants_module(&v, &u, n, 3);
            assert_eq!(p.module.dim(), 1 << (2 * n));
            assert!(check_yangian_relations(&p.module).passed);
            for (_, _, _, t) in p.module.generators() {
                for l in p.levi.values() {
                    assert!(t.commutator(l).is_zero());
                }
            }
        }
    }

    #[test]
    fn parabolic_induction_trivial_case() {
        let v = GlModule::trivial(1);
        for n in 1..=2 {
            assert!(check_parind(&v, &v, n, 4).passed);
        }
    }

    #[test]
    fn dast_oracle_small() {
        assert!(check_dast_oracle(&GlModule::natural(1), 1, 1, 3).passed);
        assert!(check_dast_oracle(&GlModule::natural(2), 1, 2, 3).passed);
        assert!(check_dast_oracle(&GlModule::natural(2), 2, 2, 3).passed);
    }

    #[test]
    fn bimequiv_small() {
        let mu = Weight(vec![rat(1, 3), int(0)]);
        let res = check_bimequiv(&mu, 1, 3, 7);
        assert!(res.outcome.passed, "{res:?}");
        let one = check_bimequiv(&Weight(vec![rat(1, 3)]), 2, 3, 7);
        assert!(one.outcome.passed);
    }

    #[test]
    fn conjugates_and_weyl() {
        assert_eq!(conjugate_partition(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(conjugate_partition(&[0, 0]), Vec::<usize>::new());
        assert_eq!(weyl_dimension(&[2, 1]), 2);
        assert_eq!(weyl_dimension(&[2, 1, 0]), 8);
        assert!(polynomial_weight(&[1, 2]).is_err());
        assert!(polynomial_weight(&[1, -1]).is_err());
    }

    #[test]
    fn polynomial_irreps() {
        let nat = construct_polynomial_irrep(&[1, 0, 0]).unwrap();
        assert_eq!(nat.module.dim(), 3);
        assert_eq!(construct_polynomial_irrep(&[1, 1]).unwrap().module.dim(), 1);
        assert_eq!(construct_polynomial_irrep(&[2, 1]).unwrap().module.dim(), 2);
        for mu in [[2i64, 0, 0], [2, 1, 0], [2, 2, 1], [1, 1, 0], [0, 0, 0]] {
            let r = construct_polynomial_irrep(&mu).unwrap();
            assert_eq!(r.module.dim(), weyl_dimension(&r.mu));
            GlModule::new(3, (0..9).map(|k| r.module.e(k / 3, k % 3).clone()).collect()).unwrap();
        }
    }

    #[test]
    fn multiplicity_rank_one() {
        for n in 0..=3usize {
            for k in 0..=n as i64 {
                let expect = crate::exact::binomial(n, k as usize);
                let got = hom_multiplicity(&[k + 1], &[1], n).unwrap();
                assert_eq!(num_bigint::BigInt::from(got), expect);
            }
        }
        assert_eq!(hom_multiplicity(&[5], &[1], 2).unwrap(), 0);
    }

    #[test]
    fn lowering_sets() {
        assert_eq!(LoweringSet::borel(3).units(), vec![(1, 0), (2, 0), (2, 1)]);
        assert_eq!(LoweringSet::parabolic(1, 2).units(), vec![(1, 0), (2, 0)]);
        assert!(all_passed(&[CheckOutcome::pass("x")]));
    }
}
