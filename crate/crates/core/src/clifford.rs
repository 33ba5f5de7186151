//! The Clifford algebra `C(V)` of `V = 𝔥* ⊕ 𝔥` with `⟨x_i, y_j⟩ = δ_ij`,
//! the spin module `S = C(V)·u` (`u = y_1⋯y_n`), and the map
//! `γ: gl_n → C(V)`, `γ(E_ij) = ¼(y_i x_j − x_j y_i)`.
//!
//! Generators are numbered `x_1..x_n` as `0..n` and `y_1..y_n` as `n..2n`,
//! matching [`VBasis::index`]; a normal-form monomial is a bitmask.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::CliffordError;
use crate::exec::Exec;
use crate::poly::{nabla_inverse, Poly};
use crate::rational::{half, int, rat, Rational};
use crate::uea::{gen_act, Gen, VBasis, VVector};
use crate::weights::Weight;

fn add_term(map: &mut BTreeMap<u32, Rational>, key: u32, c: Rational) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(key).or_insert_with(Rational::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&key);
    }
}

/// Element of `C(V)` for a fixed rank `n`.
#[derive(Clone, PartialEq, Eq)]
pub struct CliffordElement {
    n: usize,
    terms: BTreeMap<u32, Rational>,
}

impl CliffordElement {
    pub fn zero(n: usize) -> Self {
        assert!(2 * n <= 32, "rank too large for bitmask monomials");
        CliffordElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(n: usize, c: Rational) -> Self {
        let mut out = CliffordElement::zero(n);
        add_term(&mut out.terms, 0, c);
        out
    }

    pub fn one(n: usize) -> Self {
        CliffordElement::scalar(n, Rational::one())
    }

    /// The generator with index `g` (`x_{g+1}` if `g < n`, else `y_{g-n+1}`).
    pub fn generator(n: usize, g: usize) -> Self {
        let mut out = CliffordElement::zero(n);
        add_term(&mut out.terms, 1 << g, Rational::one());
        out
    }

    pub fn x(n: usize, i: usize) -> Self {
        CliffordElement::generator(n, i)
    }

    pub fn y(n: usize, i: usize) -> Self {
        CliffordElement::generator(n, n + i)
    }

    /// Embeds a vector of `V`.
    pub fn from_vector(v: &VVector) -> Self {
        let mut out = CliffordElement::zero(v.n);
        for (b, c) in v.terms() {
            add_term(&mut out.terms, 1 << b.index(v.n), c.clone());
        }
        out
    }

    /// Normal form of an arbitrary word in the generators.
    pub fn word(n: usize, word: &[usize]) -> Self {
        let mut out = CliffordElement::zero(n);
        normal_order_into(n, word.to_vec(), Rational::one(), &mut out.terms);
        out
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<u32, Rational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u32) -> Rational {
        self.terms.get(&mask).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, *m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = CliffordElement::zero(self.n);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "rank mismatch in Clifford product");
        let mut out = CliffordElement::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut word = bits(*ma);
                word.extend(bits(*mb));
                normal_order_into(self.n, word, ca * cb, &mut out.terms);
            }
        }
        out
    }

    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(CliffordElement::one(self.n), |acc, _| acc.mul(self))
    }
}

fn bits(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask >> b & 1 == 1).collect()
}

/// `⟨g, h⟩` on generators.
fn pairing(n: usize, g: usize, h: usize) -> i64 {
    i64::from(g + n == h || h + n == g)
}

fn normal_order_into(n: usize, word: Vec<usize>, c: Rational, out: &mut BTreeMap<u32, Rational>) {
    if c.is_zero() {
        return;
    }
    let Some(pos) = word.windows(2).position(|w| w[0] >= w[1]) else {
        let mask = word.iter().fold(0u32, |m, g| m | 1 << g);
        add_term(out, mask, c);
        return;
    };
    let (a, b) = (word[pos], word[pos + 1]);
    if a == b {
        // v² = ⟨v, v⟩ = 0 on basis vectors
        return;
    }
    // ab = −ba + 2⟨a, b⟩
    let p = pairing(n, a, b);
    if p != 0 {
        let mut shorter = word.clone();
        shorter.drain(pos..pos + 2);
        normal_order_into(n, shorter, &c * int(2 * p), out);
    }
    let mut swapped = word;
    swapped.swap(pos, pos + 1);
    normal_order_into(n, swapped, -c, out);
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let name = |g: usize| {
            if g < self.n {
                format!("x{}", g + 1)
            } else {
                format!("y{}", g - self.n + 1)
            }
        };
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *m == 0 {
                    c.to_string()
                } else {
                    let w: Vec<String> = bits(*m).into_iter().map(name).collect();
                    format!("{c}·{}", w.join(""))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clifford({self})")
    }
}

/// `γ(E_ij) = ¼(y_i x_j − x_j y_i)` (zero-based indices).
pub fn gamma_e(i: usize, j: usize, n: usize) -> CliffordElement {
    let yx = CliffordElement::word(n, &[n + i, j]);
    let xy = CliffordElement::word(n, &[j, n + i]);
    yx.sub(&xy).scale(&rat(1, 4))
}

/// `γ(v ⊗ v̄) = Σ v_i v_j γ(E_ij)` for a real unit vector `v`.
pub fn gamma_rank_one(v: &[Rational]) -> Result<CliffordElement, CliffordError> {
    let norm: Rational = v.iter().map(|c| c * c).sum();
    if !norm.is_one() {
        return Err(CliffordError::NotUnit(norm.to_string()));
    }
    let n = v.len();
    let mut out = CliffordElement::zero(n);
    for i in 0..n {
        for j in 0..n {
            out = out.add(&gamma_e(i, j, n).scale(&(&v[i] * &v[j])));
        }
    }
    Ok(out)
}

/// Vector of `S` in the basis `x^e u`, `e ⊆ {1..n}` as a bitmask.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpinVector {
    pub n: usize,
    pub terms: BTreeMap<u32, Rational>,
}

impl SpinVector {
    pub fn zero(n: usize) -> Self {
        SpinVector {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(n: usize, subset: u32) -> Self {
        let mut out = SpinVector::zero(n);
        add_term(&mut out.terms, subset, Rational::one());
        out
    }

    /// The vacuum `u`.
    pub fn vacuum(n: usize) -> Self {
        SpinVector::basis(n, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, subset: u32) -> Rational {
        self.terms.get(&subset).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = SpinVector::zero(self.n);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(m, a)| (*m, a * c)).collect();
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            add_term(&mut out.terms, *m, c.clone());
        }
        out
    }
}

/// `c · s`, computed as the Clifford normal form of `c · x^e · u`. Every
/// resulting monomial must end in the full `y_1⋯y_n`; anything else means the
/// normal form left the left ideal `C(V)u`.
pub fn spin_action(c: &CliffordElement, s: &SpinVector) -> Result<SpinVector, CliffordError> {
    let n = c.rank();
    assert_eq!(n, s.n, "rank mismatch in spin action");
    let full_y = ((1u32 << n) - 1) << n;
    let x_mask = (1u32 << n) - 1;
    let mut out = SpinVector::zero(n);
    for (e, coef) in &s.terms {
        let mut rep = CliffordElement::zero(n);
        add_term(&mut rep.terms, e | full_y, coef.clone());
        for (m, k) in c.mul(&rep).terms {
            if m & !x_mask != full_y {
                return Err(CliffordError::OutsideSpinIdeal(m));
            }
            add_term(&mut out.terms, m & x_mask, k);
        }
    }
    Ok(out)
}

/// Weights of `S` with multiplicities, read off from the diagonal action of
/// `γ(E_ii)` on the subset basis.
pub fn spin_weights(n: usize) -> Vec<(Weight, u64)> {
    let mut found: BTreeMap<Weight, u64> = BTreeMap::new();
    let diag: Vec<_> = (0..n).map(|i| gamma_e(i, i, n)).collect();
    for e in 0..(1u32 << n) {
        let v = SpinVector::basis(n, e);
        let coords: Vec<Rational> = diag
            .iter()
            .map(|g| {
                let image = spin_action(g, &v).expect("γ(E_ii) preserves S");
                let eigen = image.coeff(e);
                assert_eq!(image, v.scale(&eigen), "γ(E_ii) is diagonal on x^e u");
                eigen
            })
            .collect();
        *found.entry(Weight::new(coords)).or_default() += 1;
    }
    found.into_iter().collect()
}

/// `[γ(E_ij), γ(E_kl)] = γ([E_ij, E_kl])` for all generator pairs.
pub fn gamma_lie_hom_check(n: usize, exec: Exec) -> bool {
    let pairs: Vec<(Gen, Gen)> = Gen::all(n)
        .into_iter()
        .flat_map(|a| Gen::all(n).into_iter().map(move |b| (a, b)))
        .collect();
    let gamma = |g: Gen| gamma_e(g.i as usize, g.j as usize, n);
    exec.find_first(&pairs, |&(a, b)| {
        let lhs = gamma(a).commutator(&gamma(b));
        let mut rhs = CliffordElement::zero(n);
        if a.j == b.i {
            rhs = rhs.add(&gamma(Gen { i: a.i, j: b.j }));
        }
        if b.j == a.i {
            rhs = rhs.sub(&gamma(Gen { i: b.i, j: a.j }));
        }
        (lhs != rhs).then_some(())
    })
    .is_none()
}

/// `[γ(E_ij), v] = E_ij · v` inside `C(V)` for all generators and basis `v`.
pub fn gamma_lifts_action(n: usize, exec: Exec) -> bool {
    let cases: Vec<(Gen, VBasis)> = Gen::all(n)
        .into_iter()
        .flat_map(|g| VBasis::all(n).into_iter().map(move |v| (g, v)))
        .collect();
    exec.find_first(&cases, |&(g, v)| {
        let vec = VVector::basis(v, n);
        let lhs = gamma_e(g.i as usize, g.j as usize, n).commutator(&CliffordElement::from_vector(&vec));
        let rhs = CliffordElement::from_vector(&gen_act(g, &vec));
        (lhs != rhs).then_some(())
    })
    .is_none()
}

/// `f(z0 + G)` for a Clifford element `G`.
fn eval_at_shift(f: &Poly, z0: &Rational, g: &CliffordElement) -> CliffordElement {
    let n = g.rank();
    let arg = g.add(&CliffordElement::scalar(n, z0.clone()));
    f.coeffs()
        .iter()
        .rev()
        .fold(CliffordElement::zero(n), |acc, c| {
            acc.mul(&arg).add(&CliffordElement::scalar(n, c.clone()))
        })
}

/// The twisted identity `G·p(z) = f(z+G) + ½p(z) − f(z+½)`, `f = ∇_{1/2}^{-1}p`,
/// with `G = γ(v⊗v̄)`. Both sides are polynomials in `z` of degree at most
/// `deg f`, so agreement at `deg f + 1` points is a proof.
pub fn clifford_twisted_identity_check(p: &Poly, v: &[Rational]) -> Result<bool, CliffordError> {
    let g = gamma_rank_one(v)?;
    let n = v.len();
    let f = nabla_inverse(&half(), p);
    let points = f.degree().unwrap_or(0) + 1;
    for k in 0..points {
        let z0 = int(k as i64);
        let lhs = g.scale(&p.eval(&z0));
        let corr = p.eval(&z0) * half() - f.eval(&(&z0 + half()));
        let rhs = eval_at_shift(&f, &z0, &g).add(&CliffordElement::scalar(n, corr));
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn unit_vectors() -> Vec<Vec<Rational>> {
        vec![
            vec![int(1)],
            vec![rat(3, 5), rat(4, 5)],
            vec![rat(5, 13), rat(12, 13)],
            vec![rat(1, 3), rat(2, 3), rat(2, 3)],
        ]
    }

    #[test]
    fn multiplication_examples() {
        let n = 1;
        let x1 = CliffordElement::x(n, 0);
        let y1 = CliffordElement::y(n, 0);
        assert!(x1.mul(&x1).is_zero());
        assert_eq!(x1.mul(&y1).add(&y1.mul(&x1)), CliffordElement::scalar(n, int(2)));
        let n = 2;
        let p = CliffordElement::x(n, 0).mul(&CliffordElement::y(n, 1));
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.coeff(0b1001), int(1));
    }

    #[test]
    fn defining_relations() {
        for n in 1..=3 {
            for a in 0..2 * n {
                for b in 0..2 * n {
                    let va = CliffordElement::generator(n, a);
                    let vb = CliffordElement::generator(n, b);
                    let anti = va.mul(&vb).add(&vb.mul(&va));
                    let form = int(2 * pairing(n, a, b));
                    assert_eq!(anti, CliffordElement::scalar(n, form), "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn associativity_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = rng.gen_range(1..=3);
            let mut elem = || {
                let mut out = CliffordElement::zero(n);
                for _ in 0..3 {
                    let mask = rng.gen_range(0..(1u32 << (2 * n)));
                    let c = rat(rng.gen_range(-5..=5), rng.gen_range(1..=4));
                    add_term(&mut out.terms, mask, c);
                }
                out
            };
            let (a, b, c) = (elem(), elem(), elem());
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        }
    }

    #[test]
    fn gamma_examples() {
        let g = gamma_e(0, 0, 1);
        let expected = CliffordElement::scalar(1, half())
            .sub(&CliffordElement::word(1, &[0, 1]).scale(&half()));
        assert_eq!(g, expected);
        let n = 2;
        let y2 = CliffordElement::y(n, 1);
        assert_eq!(gamma_e(0, 1, n).commutator(&y2), CliffordElement::y(n, 0));
        for n in 1..=3 {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let xk = CliffordElement::x(n, k);
                        let expected = if i == k {
                            CliffordElement::x(n, j).scale(&int(-1))
                        } else {
                            CliffordElement::zero(n)
                        };
                        assert_eq!(gamma_e(i, j, n).commutator(&xk), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_lifts_the_action() {
        for n in 1..=3 {
            assert!(gamma_lifts_action(n, Exec::Sequential));
            assert!(gamma_lie_hom_check(n, Exec::default()));
        }
        let n = 2;
        let lhs = gamma_e(0, 1, n).commutator(&gamma_e(1, 0, n));
        assert_eq!(lhs, gamma_e(0, 0, n).sub(&gamma_e(1, 1, n)));
        assert!(gamma_e(0, 0, n).commutator(&gamma_e(1, 1, n)).is_zero());
    }

    #[test]
    fn spin_examples() {
        let n = 1;
        let u = SpinVector::vacuum(n);
        assert_eq!(spin_action(&CliffordElement::x(n, 0), &u).unwrap(), SpinVector::basis(n, 1));
        assert!(spin_action(&CliffordElement::y(n, 0), &u).unwrap().is_zero());
        for n in 1..=3 {
            for i in 0..n {
                for e in 0..(1u32 << n) {
                    let v = SpinVector::basis(n, e);
                    let sign = if e >> i & 1 == 1 { -half() } else { half() };
                    assert_eq!(spin_action(&gamma_e(i, i, n), &v).unwrap(), v.scale(&sign));
                    let yv = spin_action(&CliffordElement::y(n, i), &SpinVector::vacuum(n));
                    assert!(yv.unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn spin_module_is_a_module() {
        let n = 2;
        for a in 0..2 * n {
            for b in 0..2 * n {
                let ga = CliffordElement::generator(n, a);
                let gb = CliffordElement::generator(n, b);
                for e in 0..(1u32 << n) {
                    let v = SpinVector::basis(n, e);
                    let lhs = spin_action(&ga.mul(&gb), &v).unwrap();
                    let rhs = spin_action(&ga, &spin_action(&gb, &v).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn spin_weight_sets() {
        for n in 1..=4 {
            let w = spin_weights(n);
            assert_eq!(w.len(), 1 << n);
            let mut sum = vec![Rational::zero(); n];
            for (weight, mult) in &w {
                assert_eq!(*mult, 1);
                for (s, c) in sum.iter_mut().zip(weight.coords()) {
                    assert!(c == &half() || c == &-half());
                    *s += c;
                }
            }
            assert!(sum.iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn rank_one_squares_to_quarter() {
        for v in unit_vectors() {
            let g = gamma_rank_one(&v).unwrap();
            assert_eq!(g.mul(&g), CliffordElement::scalar(v.len(), rat(1, 4)), "{v:?}");
        }
        let v = vec![rat(3, 5), rat(4, 5)];
        let expected = gamma_e(0, 0, 2)
            .scale(&rat(9, 25))
            .add(&gamma_e(0, 1, 2).add(&gamma_e(1, 0, 2)).scale(&rat(12, 25)))
            .add(&gamma_e(1, 1, 2).scale(&rat(16, 25)));
        assert_eq!(gamma_rank_one(&v).unwrap(), expected);
        assert_eq!(gamma_rank_one(&[int(1), int(0)]).unwrap(), gamma_e(0, 0, 2));
        assert!(matches!(gamma_rank_one(&[int(1), int(1)]), Err(CliffordError::NotUnit(_))));
    }

    #[test]
    fn rank_one_is_quarter_commutator() {
        for v in unit_vectors() {
            let n = v.len();
            let mut vx = VVector::zero(n);
            let mut vy = VVector::zero(n);
            for (i, c) in v.iter().enumerate() {
                vx.coords[i] = c.clone();
                vy.coords[n + i] = c.clone();
            }
            let a = CliffordElement::from_vector(&vy);
            let b = CliffordElement::from_vector(&vx);
            assert_eq!(gamma_rank_one(&v).unwrap(), a.commutator(&b).scale(&rat(1, 4)));
        }
    }

    #[test]
    fn twisted_identity_in_clifford() {
        for v in unit_vectors().into_iter().filter(|v| v.len() <= 2) {
            for k in 0..=4 {
                let p = Poly::monomial(k, int(1));
                assert!(clifford_twisted_identity_check(&p, &v).unwrap(), "k={k} v={v:?}");
            }
        }
        // a non-involutive element must not satisfy it
        let v = vec![rat(3, 5), rat(4, 5)];
        let bad = gamma_rank_one(&v).unwrap().scale(&int(2));
        let f = nabla_inverse(&half(), &Poly::monomial(2, int(1)));
        let z0 = int(1);
        let p = Poly::monomial(2, int(1));
        let lhs = bad.scale(&p.eval(&z0));
        let corr = p.eval(&z0) * half() - f.eval(&(&z0 + half()));
        let rhs = eval_at_shift(&f, &z0, &bad).add(&CliffordElement::scalar(2, corr));
        assert_ne!(lhs, rhs);
    }
}
