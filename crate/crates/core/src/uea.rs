//! Symbolic `U(gl_n)` in the PBW basis, its action on `V = 𝔥 ⊕ 𝔥*`, and the
//! deformation map `κ: V ∧ V → U(gl_n)` built from the `r_m` generating series.
//!
//! The checks here certify the PBW property of `H_ξ` at small rank: `κ` must be
//! `gl_n`-equivariant and satisfy the Jacobi identity
//! `[κ(u,v),w] + [κ(v,w),u] + [κ(w,u),v] = 0`, evaluated in the free module
//! `V ⊗ U(gl_n)` via `[h, v] = (h_(1) ▷ v) h_(2)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::exec::Exec;
use crate::poly::Poly;
use crate::rational::{int, Rational};

/// Matrix unit `E_ij` (zero-based). The derived order is lexicographic in
/// `(i, j)` and fixes the PBW ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen {
    pub i: u8,
    pub j: u8,
}

impl Gen {
    pub fn new(i: usize, j: usize) -> Self {
        Gen {
            i: i as u8,
            j: j as u8,
        }
    }

    pub fn all(n: usize) -> Vec<Gen> {
        (0..n)
            .flat_map(|i| (0..n).map(move |j| Gen::new(i, j)))
            .collect()
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E{}{}", self.i + 1, self.j + 1)
    }
}

/// Non-decreasing word of generators.
pub type Monomial = Vec<Gen>;

/// Element of `U(gl_n)` in PBW normal form.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Uea {
    terms: BTreeMap<Monomial, Rational>,
}

fn add_term<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, c: Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// `[a, b]` for matrix units: `δ_jk E_il - δ_li E_kj`.
fn gen_bracket(a: Gen, b: Gen) -> Vec<(Gen, Rational)> {
    let mut out = Vec::new();
    if a.j == b.i {
        out.push((Gen { i: a.i, j: b.j }, Rational::one()));
    }
    if b.j == a.i {
        out.push((Gen { i: b.i, j: a.j }, -Rational::one()));
    }
    out
}

fn normal_order_into(word: Vec<Gen>, c: Rational, out: &mut BTreeMap<Monomial, Rational>) {
    let Some(pos) = word.windows(2).position(|w| w[0] > w[1]) else {
        add_term(out, word, c);
        return;
    };
    let (a, b) = (word[pos], word[pos + 1]);
    for (g, k) in gen_bracket(a, b) {
        let mut shorter = Vec::with_capacity(word.len() - 1);
        shorter.extend_from_slice(&word[..pos]);
        shorter.push(g);
        shorter.extend_from_slice(&word[pos + 2..]);
        normal_order_into(shorter, &c * k, out);
    }
    let mut swapped = word;
    swapped.swap(pos, pos + 1);
    normal_order_into(swapped, c, out);
}

impl Uea {
    pub fn zero() -> Self {
        Uea::default()
    }

    pub fn one() -> Self {
        Uea::scalar(Rational::one())
    }

    pub fn scalar(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, Vec::new(), c);
        Uea { terms }
    }

    pub fn gen(g: Gen) -> Self {
        Uea::word(&[g])
    }

    /// Normal form of an arbitrary (unordered) word.
    pub fn word(word: &[Gen]) -> Self {
        let mut terms = BTreeMap::new();
        normal_order_into(word.to_vec(), Rational::one(), &mut terms);
        Uea { terms }
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[Gen]) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Uea) -> Uea {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Uea { terms }
    }

    pub fn sub(&self, other: &Uea) -> Uea {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Uea {
        if c.is_zero() {
            return Uea::zero();
        }
        Uea {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    pub fn mul(&self, other: &Uea) -> Uea {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut w = ma.clone();
                w.extend_from_slice(mb);
                normal_order_into(w, ca * cb, &mut terms);
            }
        }
        Uea { terms }
    }

    pub fn commutator(&self, other: &Uea) -> Uea {
        self.mul(other).sub(&other.mul(self))
    }

    /// `ε(a)`: the coefficient of the empty monomial.
    pub fn counit(&self) -> Rational {
        self.coeff(&[])
    }

    /// `Δa = Σ a_(1) ⊗ a_(2)`. Generators are primitive, so a PBW monomial
    /// splits over all ordered sub-selections of its factors.
    pub fn coproduct(&self) -> BTreeMap<(Monomial, Monomial), Rational> {
        let mut out = BTreeMap::new();
        for (m, c) in &self.terms {
            for split in splits(m, 2) {
                let mut it = split.into_iter();
                let left = it.next().unwrap();
                let right = it.next().unwrap();
                add_term(&mut out, (left, right), c.clone());
            }
        }
        out
    }
}

impl fmt::Display for Uea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if m.is_empty() {
                    c.to_string()
                } else {
                    let w: Vec<String> = m.iter().map(Gen::to_string).collect();
                    format!("{c}·{}", w.join(""))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Uea {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Uea({self})")
    }
}

/// All assignments of the factors of `m` to `slots` ordered sub-words.
pub fn splits(m: &[Gen], slots: usize) -> Vec<Vec<Monomial>> {
    let total = slots.pow(m.len() as u32);
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut parts = vec![Vec::new(); slots];
        let mut c = code;
        for g in m {
            parts[c % slots].push(*g);
            c /= slots;
        }
        out.push(parts);
    }
    out
}

/// Basis of `V = 𝔥* ⊕ 𝔥`: index `a < n` is `x_{a+1}`, index `n + i` is `y_{i+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VBasis {
    X(usize),
    Y(usize),
}

impl VBasis {
    pub fn index(self, n: usize) -> usize {
        match self {
            VBasis::X(i) => i,
            VBasis::Y(i) => n + i,
        }
    }

    pub fn from_index(a: usize, n: usize) -> Self {
        if a < n {
            VBasis::X(a)
        } else {
            VBasis::Y(a - n)
        }
    }

    pub fn all(n: usize) -> Vec<VBasis> {
        (0..2 * n).map(|a| VBasis::from_index(a, n)).collect()
    }
}

impl fmt::Display for VBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VBasis::X(i) => write!(f, "x{}", i + 1),
            VBasis::Y(i) => write!(f, "y{}", i + 1),
        }
    }
}

/// Vector in `V`, dense in the basis `(x_1..x_n, y_1..y_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VVector {
    pub n: usize,
    pub coords: Vec<Rational>,
}

impl VVector {
    pub fn zero(n: usize) -> Self {
        VVector {
            n,
            coords: vec![Rational::zero(); 2 * n],
        }
    }

    pub fn basis(v: VBasis, n: usize) -> Self {
        let mut out = VVector::zero(n);
        out.coords[v.index(n)] = Rational::one();
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (VBasis, &Rational)> + '_ {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(a, c)| (VBasis::from_index(a, self.n), c))
    }
}

/// `E_ij · v`: `E_ij y_k = δ_jk y_i` on `𝔥`, `E_ij x_k = -δ_ik x_j` on `𝔥*`.
pub fn gen_act(g: Gen, v: &VVector) -> VVector {
    let n = v.n;
    let (i, j) = (g.i as usize, g.j as usize);
    let mut out = VVector::zero(n);
    out.coords[n + i] += &v.coords[n + j];
    out.coords[j] -= &v.coords[i];
    out
}

/// Module action of `U(gl_n)` on `V`, rightmost factor first.
pub fn act_on_v(a: &Uea, v: &VVector) -> VVector {
    let mut out = VVector::zero(v.n);
    for (m, c) in a.terms() {
        let image = m.iter().rev().fold(v.clone(), |acc, g| gen_act(*g, &acc));
        for (o, x) in out.coords.iter_mut().zip(image.coords) {
            *o += c * x;
        }
    }
    out
}

fn monomial_act(m: &[Gen], v: VBasis, n: usize) -> VVector {
    m.iter()
        .rev()
        .fold(VVector::basis(v, n), |acc, g| gen_act(*g, &acc))
}

/// Commutative polynomial in the matrix entries `a_kl`, keyed by sorted
/// multisets of variable indices `k·n + l`.
type CPoly = BTreeMap<Vec<u16>, Rational>;

fn cpoly_mul(a: &CPoly, b: &CPoly) -> CPoly {
    let mut out = CPoly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut m = ma.clone();
            m.extend_from_slice(mb);
            m.sort_unstable();
            add_term(&mut out, m, ca * cb);
        }
    }
    out
}

fn cpoly_add_scaled(acc: &mut CPoly, b: &CPoly, c: &Rational) {
    for (m, x) in b {
        add_term(acc, m.clone(), x * c);
    }
}

fn cpoly_const(c: Rational) -> CPoly {
    let mut p = CPoly::new();
    add_term(&mut p, Vec::new(), c);
    p
}

fn permutations(items: &[Gen]) -> Vec<Vec<Gen>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for k in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Symmetrization `S(gl_n) → U(gl_n)`: the average of all orderings.
pub fn symmetrize(factors: &[Gen]) -> Uea {
    let perms = permutations(factors);
    let weight = Rational::one() / int(perms.len() as i64);
    let mut terms = BTreeMap::new();
    for p in perms {
        normal_order_into(p, weight.clone(), &mut terms);
    }
    Uea { terms }
}

/// Which matrix unit the commutative variable `a_kl` is sent to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TracePairing {
    /// `a_kl ↦ E_lk`, from `Tr(E_lk · A) = a_kl`.
    Transpose,
    /// `a_kl ↦ E_kl`; kept only as a negative control.
    Direct,
}

/// `r_m(x_i, y_j)` for all `i, j`: the `τ^m` coefficient of
/// `(x_i, (1-τA)^{-1} y_j) · det(1-τA)^{-1}`, pushed into `U(gl_n)`.
pub fn r_matrix(n: usize, m: usize) -> Vec<Vec<Uea>> {
    r_matrix_with(n, m, TracePairing::Transpose)
}

pub fn r_matrix_with(n: usize, m: usize, pairing: TracePairing) -> Vec<Vec<Uea>> {
    let var = |k: usize, l: usize| (k * n + l) as u16;
    // powers[k] = A^k with entries in CPoly
    let mut powers: Vec<Vec<Vec<CPoly>>> = Vec::with_capacity(m + 1);
    let identity: Vec<Vec<CPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        cpoly_const(Rational::one())
                    } else {
                        CPoly::new()
                    }
                })
                .collect()
        })
        .collect();
    powers.push(identity);
    for k in 1..=m {
        let prev = &powers[k - 1];
        let mut next = vec![vec![CPoly::new(); n]; n];
        for (i, row) in next.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                for l in 0..n {
                    let mut a_lj = CPoly::new();
                    add_term(&mut a_lj, vec![var(l, j)], Rational::one());
                    let prod = cpoly_mul(&prev[i][l], &a_lj);
                    cpoly_add_scaled(cell, &prod, &Rational::one());
                }
            }
        }
        powers.push(next);
    }
    // det(1-τA)^{-1} = exp(Σ τ^k Tr(A^k)/k); c_j = (1/j) Σ_{k=1}^{j} Tr(A^k) c_{j-k}
    let traces: Vec<CPoly> = powers
        .iter()
        .map(|p| {
            let mut t = CPoly::new();
            for (i, row) in p.iter().enumerate() {
                cpoly_add_scaled(&mut t, &row[i], &Rational::one());
            }
            t
        })
        .collect();
    let mut det_inv = vec![cpoly_const(Rational::one())];
    for j in 1..=m {
        let mut cj = CPoly::new();
        for k in 1..=j {
            let prod = cpoly_mul(&traces[k], &det_inv[j - k]);
            cpoly_add_scaled(&mut cj, &prod, &(Rational::one() / int(j as i64)));
        }
        det_inv.push(cj);
    }
    let to_gen = |v: u16| {
        let (k, l) = (v as usize / n, v as usize % n);
        match pairing {
            TracePairing::Transpose => Gen::new(l, k),
            TracePairing::Direct => Gen::new(k, l),
        }
    };
    let mut out = vec![vec![Uea::zero(); n]; n];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            let mut comm = CPoly::new();
            for k in 0..=m {
                let prod = cpoly_mul(&powers[k][i][j], &det_inv[m - k]);
                cpoly_add_scaled(&mut comm, &prod, &Rational::one());
            }
            for (mono, c) in &comm {
                let factors: Vec<Gen> = mono.iter().map(|v| to_gen(*v)).collect();
                *cell = cell.add(&symmetrize(&factors).scale(c));
            }
        }
    }
    out
}

/// Skew-symmetric `κ: V ∧ V → U(gl_n)`, tabulated on basis pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kappa {
    n: usize,
    table: Vec<Vec<Uea>>,
}

impl Kappa {
    pub fn zero(n: usize) -> Self {
        Kappa {
            n,
            table: vec![vec![Uea::zero(); 2 * n]; 2 * n],
        }
    }

    /// `κ(y_j, x_i) = Σ_m ξ_m r_m(x_i, y_j)`, zero on `𝔥∧𝔥` and `𝔥*∧𝔥*`.
    pub fn from_xi(xi: &Poly, n: usize) -> Self {
        let r: Vec<_> = (0..xi.coeffs().len()).map(|m| r_matrix(n, m)).collect();
        Kappa::from_r_tables(xi, n, &r)
    }

    /// Same as [`Kappa::from_xi`] but with caller-supplied `r_m` tables.
    pub fn from_r_tables(xi: &Poly, n: usize, r: &[Vec<Vec<Uea>>]) -> Self {
        let mut k = Kappa::zero(n);
        for i in 0..n {
            for j in 0..n {
                let mut val = Uea::zero();
                for (m, c) in xi.coeffs().iter().enumerate() {
                    if !c.is_zero() {
                        val = val.add(&r[m][i][j].scale(c));
                    }
                }
                k.set(VBasis::Y(j), VBasis::X(i), val);
            }
        }
        k
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// Sets `κ(u, v)` and `κ(v, u) = -κ(u, v)`.
    pub fn set(&mut self, u: VBasis, v: VBasis, value: Uea) {
        let (a, b) = (u.index(self.n), v.index(self.n));
        assert!(a != b || value.is_zero(), "κ(v, v) must vanish");
        self.table[b][a] = value.scale(&-Rational::one());
        self.table[a][b] = value;
    }

    pub fn get(&self, u: VBasis, v: VBasis) -> &Uea {
        &self.table[u.index(self.n)][v.index(self.n)]
    }

    /// Bilinear extension to arbitrary vectors.
    pub fn eval(&self, u: &VVector, v: &VVector) -> Uea {
        let mut out = Uea::zero();
        for (a, ca) in u.terms() {
            for (b, cb) in v.terms() {
                out = out.add(&self.get(a, b).scale(&(ca * cb)));
            }
        }
        out
    }
}

/// Element of `Λ^k V ⊗ U(gl_n)`; keys are strictly increasing basis indices
/// (k = 1 gives `V ⊗ U(gl_n)`).
pub type WedgeH = BTreeMap<(Vec<usize>, Monomial), Rational>;

/// Wedge of basis vectors in normal order with its sign, or `None` if repeated.
fn sort_wedge(mut idx: Vec<usize>) -> Option<(Vec<usize>, bool)> {
    let mut negative = false;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((idx, negative))
}

/// `(v_1, …, v_k | h) = (h_(1) ▷ v_1) ∧ … ∧ (h_(k) ▷ v_k) ⊗ h_(k+1)`, where
/// `h ▷ v = h·v - ε(h) v`. For `k = 1` this is `[h, v]` in the smash product.
pub fn triangle_wedge(h: &Uea, vs: &[VBasis], n: usize) -> WedgeH {
    let k = vs.len();
    let mut out = WedgeH::new();
    for (m, c) in h.terms() {
        for split in splits(m, k + 1) {
            // ▷ kills the unit, so every acting slot must be nonempty.
            if split[..k].iter().any(Vec::is_empty) {
                continue;
            }
            let images: Vec<VVector> = split[..k]
                .iter()
                .zip(vs)
                .map(|(part, v)| monomial_act(part, *v, n))
                .collect();
            let rest = &split[k];
            // expand the wedge of images multilinearly
            let mut partial: Vec<(Vec<usize>, Rational)> = vec![(Vec::new(), c.clone())];
            for img in &images {
                let mut next = Vec::new();
                for (idx, coef) in &partial {
                    for (b, x) in img.terms() {
                        let mut idx2 = idx.clone();
                        idx2.push(b.index(n));
                        next.push((idx2, coef * x));
                    }
                }
                partial = next;
            }
            for (idx, coef) in partial {
                if let Some((sorted, negative)) = sort_wedge(idx) {
                    let val = if negative { -coef } else { coef };
                    add_term(&mut out, (sorted, rest.clone()), val);
                }
            }
        }
    }
    out
}

fn wedge_add(acc: &mut WedgeH, other: &WedgeH, sign: &Rational) {
    for (key, c) in other {
        add_term(acc, key.clone(), c * sign);
    }
}

/// Result of a sweep: `None` means every case vanished.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub failure: Option<CheckFailure>,
    pub cases: usize,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckFailure {
    /// Human-readable name of the offending basis tuple.
    pub case: String,
    /// Rendered nonzero residual.
    pub residual: String,
}

fn render_wedge(w: &WedgeH, n: usize) -> String {
    let parts: Vec<String> = w
        .iter()
        .map(|((idx, m), c)| {
            let vs: Vec<String> = idx
                .iter()
                .map(|a| VBasis::from_index(*a, n).to_string())
                .collect();
            let h = if m.is_empty() {
                "1".to_string()
            } else {
                m.iter().map(Gen::to_string).collect::<Vec<_>>().join("")
            };
            format!("{c}·{}⊗{h}", vs.join("∧"))
        })
        .collect();
    parts.join(" + ")
}

fn tuples(n: usize, k: usize) -> Vec<Vec<VBasis>> {
    let basis = VBasis::all(n);
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                basis.iter().map(move |b| {
                    let mut t2 = t.clone();
                    t2.push(*b);
                    t2
                })
            })
            .collect();
    }
    out
}

fn fmt_tuple(t: &[VBasis]) -> String {
    let parts: Vec<String> = t.iter().map(VBasis::to_string).collect();
    format!("({})", parts.join(", "))
}

/// Jacobi identity on every basis triple.
pub fn jacobi_check(kappa: &Kappa, exec: Exec) -> CheckOutcome {
    let n = kappa.rank();
    let cases = tuples(n, 3);
    let one = Rational::one();
    let failure = exec.find_first(&cases, |t| {
        let (u, v, w) = (t[0], t[1], t[2]);
        let mut total = WedgeH::new();
        for (a, b, c) in [(u, v, w), (v, w, u), (w, u, v)] {
            wedge_add(&mut total, &triangle_wedge(kappa.get(a, b), &[c], n), &one);
        }
        (!total.is_empty()).then(|| CheckFailure {
            case: fmt_tuple(t),
            residual: render_wedge(&total, n),
        })
    });
    CheckOutcome {
        failure,
        cases: cases.len(),
    }
}

/// The rank-two identity `(z,u|x,y) = (x,y|z,u)` and the rank-three
/// vanishing `(z,u,v|x,y) = 0` over all basis tuples.
pub fn higher_jacobi_checks(kappa: &Kappa, exec: Exec) -> CheckOutcome {
    let n = kappa.rank();
    let quads = tuples(n, 4);
    let minus = -Rational::one();
    let rank2 = exec.find_first(&quads, |t| {
        let (z, u, x, y) = (t[0], t[1], t[2], t[3]);
        let mut diff = triangle_wedge(kappa.get(x, y), &[z, u], n);
        wedge_add(&mut diff, &triangle_wedge(kappa.get(z, u), &[x, y], n), &minus);
        (!diff.is_empty()).then(|| CheckFailure {
            case: format!("rank 2 {}", fmt_tuple(t)),
            residual: render_wedge(&diff, n),
        })
    });
    if rank2.is_some() {
        return CheckOutcome {
            failure: rank2,
            cases: quads.len(),
        };
    }
    let quints = tuples(n, 5);
    let rank3 = exec.find_first(&quints, |t| {
        let w = triangle_wedge(kappa.get(t[3], t[4]), &t[..3], n);
        (!w.is_empty()).then(|| CheckFailure {
            case: format!("rank 3 {}", fmt_tuple(t)),
            residual: render_wedge(&w, n),
        })
    });
    CheckOutcome {
        failure: rank3,
        cases: quads.len() + quints.len(),
    }
}

/// `gl_n`-equivariance: `[E, κ(v,w)] = κ(E·v, w) + κ(v, E·w)` for all
/// generators `E` and basis pairs.
pub fn h_linearity_check(kappa: &Kappa, exec: Exec) -> CheckOutcome {
    let n = kappa.rank();
    let cases: Vec<(Gen, VBasis, VBasis)> = Gen::all(n)
        .into_iter()
        .flat_map(|g| {
            let basis = VBasis::all(n);
            basis
                .clone()
                .into_iter()
                .flat_map(move |a| basis.clone().into_iter().map(move |b| (g, a, b)))
        })
        .collect();
    let failure = exec.find_first(&cases, |&(g, a, b)| {
        let e = Uea::gen(g);
        let lhs = e.commutator(kappa.get(a, b));
        let va = VVector::basis(a, n);
        let vb = VVector::basis(b, n);
        let rhs = kappa
            .eval(&gen_act(g, &va), &vb)
            .add(&kappa.eval(&va, &gen_act(g, &vb)));
        let residual = lhs.sub(&rhs);
        (!residual.is_zero()).then(|| CheckFailure {
            case: format!("{g} on ({a}, {b})"),
            residual: residual.to_string(),
        })
    });
    CheckOutcome {
        failure,
        cases: cases.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn e(i: usize, j: usize) -> Gen {
        Gen::new(i - 1, j - 1)
    }

    #[test]
    fn multiplication_examples() {
        let a = Uea::gen(e(1, 2));
        let b = Uea::gen(e(2, 1));
        assert_eq!(a.mul(&b).terms().len(), 1);
        assert_eq!(a.mul(&b).coeff(&[e(1, 2), e(2, 1)]), int(1));
        let ba = b.mul(&a);
        let expected = Uea::word(&[e(1, 2), e(2, 1)])
            .add(&Uea::gen(e(2, 2)))
            .sub(&Uea::gen(e(1, 1)));
        assert_eq!(ba, expected);
        assert_eq!(Uea::one().mul(&ba), ba);
    }

    #[test]
    fn associativity_random_words() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let n = rng.gen_range(1..=3);
            let mut word = || -> Uea {
                let len = rng.gen_range(0..=3);
                let w: Vec<Gen> = (0..len)
                    .map(|_| Gen::new(rng.gen_range(0..n), rng.gen_range(0..n)))
                    .collect();
                Uea::word(&w)
            };
            let (a, b, c) = (word(), word(), word());
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }

    #[test]
    fn coproduct_examples() {
        let d = Uea::gen(e(1, 1)).coproduct();
        assert_eq!(d.len(), 2);
        assert_eq!(d[&(vec![e(1, 1)], vec![])], int(1));
        assert_eq!(d[&(vec![], vec![e(1, 1)])], int(1));
        let d = Uea::word(&[e(1, 1), e(1, 2)]).coproduct();
        assert_eq!(d.len(), 4);
        assert_eq!(d[&(vec![e(1, 1), e(1, 2)], vec![])], int(1));
        assert_eq!(d[&(vec![e(1, 1)], vec![e(1, 2)])], int(1));
        assert_eq!(d[&(vec![e(1, 2)], vec![e(1, 1)])], int(1));
        assert_eq!(d[&(vec![], vec![e(1, 1), e(1, 2)])], int(1));
        let d = Uea::one().coproduct();
        assert_eq!(d.len(), 1);
        assert_eq!(d[&(vec![], vec![])], int(1));
    }

    #[test]
    fn coproduct_coassociative_cocommutative() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let len = rng.gen_range(0..=3);
            let w: Vec<Gen> = (0..len)
                .map(|_| Gen::new(rng.gen_range(0..3), rng.gen_range(0..3)))
                .collect();
            let a = Uea::word(&w);
            let d = a.coproduct();
            let swapped: BTreeMap<_, _> = d
                .iter()
                .map(|((l, r), c)| ((r.clone(), l.clone()), c.clone()))
                .collect();
            assert_eq!(d, swapped);
            let mut left = BTreeMap::new();
            let mut right = BTreeMap::new();
            for ((l, r), c) in &d {
                for ((ll, lr), c2) in Uea::word(l).coproduct() {
                    add_term(&mut left, (ll, lr, r.clone()), c * c2);
                }
                for ((rl, rr), c2) in Uea::word(r).coproduct() {
                    add_term(&mut right, (l.clone(), rl, rr), c * c2);
                }
            }
            assert_eq!(left, right);
            // counit
            for ((l, r), c) in &d {
                if l.is_empty() {
                    assert_eq!(Uea::word(r).scale(c).terms().len(), 1);
                }
            }
            assert_eq!(a.counit(), if w.is_empty() { int(1) } else { int(0) });
        }
    }

    #[test]
    fn action_examples() {
        let n = 2;
        let y2 = VVector::basis(VBasis::Y(1), n);
        assert_eq!(act_on_v(&Uea::gen(e(1, 2)), &y2), VVector::basis(VBasis::Y(0), n));
        let x1 = VVector::basis(VBasis::X(0), n);
        let mut minus_x2 = VVector::zero(n);
        minus_x2.coords[1] = int(-1);
        assert_eq!(act_on_v(&Uea::gen(e(1, 2)), &x1), minus_x2);
        let y1 = VVector::basis(VBasis::Y(0), n);
        assert!(act_on_v(&Uea::gen(e(1, 2)), &y1).is_zero());
    }

    #[test]
    fn action_is_lie_action() {
        for n in 1..=3 {
            for a in Gen::all(n) {
                for b in Gen::all(n) {
                    let bracket = Uea::gen(a).commutator(&Uea::gen(b));
                    for v in VBasis::all(n) {
                        let v = VVector::basis(v, n);
                        let lhs = act_on_v(&bracket, &v);
                        let ab = gen_act(a, &gen_act(b, &v));
                        let ba = gen_act(b, &gen_act(a, &v));
                        let rhs: Vec<Rational> =
                            ab.coords.iter().zip(&ba.coords).map(|(p, q)| p - q).collect();
                        assert_eq!(lhs.coords, rhs);
                    }
                }
            }
        }
    }

    #[test]
    fn r_matrix_examples() {
        for n in 1..=3 {
            let r0 = r_matrix(n, 0);
            let r1 = r_matrix(n, 1);
            let trace = Gen::all(n)
                .into_iter()
                .filter(|g| g.i == g.j)
                .fold(Uea::zero(), |acc, g| acc.add(&Uea::gen(g)));
            for i in 0..n {
                for j in 0..n {
                    let delta = if i == j { Uea::one() } else { Uea::zero() };
                    assert_eq!(r0[i][j], delta);
                    let mut expected = Uea::gen(Gen::new(j, i));
                    if i == j {
                        expected = expected.add(&trace);
                    }
                    assert_eq!(r1[i][j], expected, "n={n} ({i},{j})");
                }
            }
        }
        for m in 0..=4 {
            let r = r_matrix(1, m);
            let expected = Uea::word(&vec![Gen::new(0, 0); m]).scale(&int(m as i64 + 1));
            assert_eq!(r[0][0], expected);
        }
    }

    #[test]
    fn symmetrization_ignores_factor_order() {
        let words = [
            vec![e(1, 2), e(2, 1)],
            vec![e(2, 1), e(1, 2)],
        ];
        assert_eq!(symmetrize(&words[0]), symmetrize(&words[1]));
        let w = vec![e(2, 1), e(1, 1), e(1, 2)];
        for p in permutations(&w) {
            assert_eq!(symmetrize(&p), symmetrize(&w));
        }
    }

    #[test]
    fn kappa_examples() {
        let k = Kappa::from_xi(&Poly::zero(), 2);
        assert_eq!(k, Kappa::zero(2));
        let xi1 = rat(3, 2);
        let k = Kappa::from_xi(&Poly::monomial(1, xi1.clone()), 1);
        assert_eq!(
            k.get(VBasis::Y(0), VBasis::X(0)),
            &Uea::gen(e(1, 1)).scale(&(int(2) * &xi1))
        );
        assert_eq!(
            k.get(VBasis::X(0), VBasis::Y(0)),
            &Uea::gen(e(1, 1)).scale(&(int(-2) * &xi1))
        );
        let k = Kappa::from_xi(&Poly::constant(int(5)), 2);
        for i in 0..2 {
            for j in 0..2 {
                let expected = if i == j { Uea::scalar(int(5)) } else { Uea::zero() };
                assert_eq!(k.get(VBasis::Y(j), VBasis::X(i)), &expected);
            }
        }
        assert!(k.get(VBasis::X(0), VBasis::X(1)).is_zero());
    }

    #[test]
    fn triangle_is_commutator() {
        // (v|h) must equal [h, v] computed by hand for h = E_12 E_21, v = y_1.
        let n = 2;
        let h = Uea::word(&[e(1, 2), e(2, 1)]);
        let w = triangle_wedge(&h, &[VBasis::Y(0)], n);
        // E_12 E_21 y_1 = y_1 ⊗ 1 ; (E_12 ▷ y_1) = 0 ; (E_21 ▷ y_1) E_12 = y_2 E_12
        let mut expected = WedgeH::new();
        add_term(&mut expected, (vec![2], vec![]), int(1));
        add_term(&mut expected, (vec![3], vec![e(1, 2)]), int(1));
        assert_eq!(w, expected);
    }

    #[test]
    fn checks_pass_for_genuine_kappa() {
        for n in 1..=2 {
            for deg in 0..=2 {
                let xi = Poly::new((0..=deg).map(|k| rat(k as i64 + 2, 3)).collect());
                let k = Kappa::from_xi(&xi, n);
                assert!(jacobi_check(&k, Exec::Sequential).passed(), "n={n} deg={deg}");
                assert!(higher_jacobi_checks(&k, Exec::Sequential).passed());
                assert!(h_linearity_check(&k, Exec::Sequential).passed());
            }
        }
        let z = Kappa::zero(2);
        assert!(jacobi_check(&z, Exec::Sequential).passed());
        assert!(higher_jacobi_checks(&z, Exec::Sequential).passed());
        assert!(h_linearity_check(&z, Exec::Sequential).passed());
    }

    #[test]
    fn corrupted_kappa_fails() {
        let n = 2;
        let xi = Poly::z();
        let mut r: Vec<_> = (0..2).map(|m| r_matrix(n, m)).collect();
        // double the E_21 coefficient in r_1(x_1, y_2)
        let cell = &r[1][0][1];
        let bump = Uea::gen(e(2, 1)).scale(&cell.coeff(&[e(2, 1)]));
        r[1][0][1] = cell.add(&bump);
        let k = Kappa::from_r_tables(&xi, n, &r);
        let out = jacobi_check(&k, Exec::Sequential);
        assert!(!out.passed());
        assert!(!out.failure.unwrap().residual.is_empty());

        let mut bad = Kappa::zero(2);
        bad.set(VBasis::Y(0), VBasis::X(0), Uea::gen(e(1, 2)));
        assert!(!h_linearity_check(&bad, Exec::Sequential).passed());
    }

    #[test]
    fn direct_pairing_is_rejected() {
        let n = 2;
        let xi = Poly::z();
        let r: Vec<_> = (0..2)
            .map(|m| r_matrix_with(n, m, TracePairing::Direct))
            .collect();
        let k = Kappa::from_r_tables(&xi, n, &r);
        assert!(!h_linearity_check(&k, Exec::Sequential).passed());
    }
}
