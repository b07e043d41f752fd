//! Dirichlet character groups mod q with exact root-of-unity values.
//!
//! Characters are represented by exponent vectors over a CRT decomposition of
//! (ℤ/q)^× with a fixed generator convention (smallest primitive root per odd
//! prime power; the {-1, 3} pair for 2^e, e ≥ 3), so labels are reproducible
//! across runs and values never drift: χ(n) is a reduced fraction k/d meaning
//! e^{2πik/d}, converted to floating point only on demand.

use crate::{Error, Result};
use num_complex::Complex64;
use std::sync::Arc;

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut ds = vec![1u64];
    for (p, e) in factorize(n) {
        let prev = ds.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            ds.extend(prev.iter().map(|d| d * pk));
        }
    }
    ds.sort_unstable();
    ds
}

/// A root of unity e^{2πi num/den}, stored as the reduced fraction num/den.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootOfUnity {
    num: u64,
    den: u64,
}

impl RootOfUnity {
    pub fn one() -> Self {
        RootOfUnity { num: 0, den: 1 }
    }

    /// e^{2πi k/d}, reduced.
    pub fn new(k: u64, d: u64) -> Self {
        assert!(d > 0);
        let k = k % d;
        let g = gcd(k, d);
        if k == 0 {
            RootOfUnity { num: 0, den: 1 }
        } else {
            RootOfUnity { num: k / g, den: d / g }
        }
    }

    pub fn mul(self, o: RootOfUnity) -> RootOfUnity {
        // num/den + num'/den' mod 1
        let den = lcm(self.den, o.den);
        let num = (self.num * (den / self.den) + o.num * (den / o.den)) % den;
        RootOfUnity::new(num, den)
    }

    pub fn conj(self) -> RootOfUnity {
        if self.num == 0 {
            self
        } else {
            RootOfUnity { num: self.den - self.num, den: self.den }
        }
    }

    pub fn pow(self, e: u64) -> RootOfUnity {
        RootOfUnity::new((self.num as u128 * e as u128 % self.den as u128) as u64, self.den)
    }

    pub fn is_one(self) -> bool {
        self.num == 0
    }

    pub fn order(self) -> u64 {
        self.den
    }

    pub fn numerator(self) -> u64 {
        self.num
    }

    /// Exact values at the 4th roots, trig elsewhere.
    pub fn value(self) -> Complex64 {
        match (self.num, self.den) {
            (0, _) => Complex64::new(1.0, 0.0),
            (1, 2) => Complex64::new(-1.0, 0.0),
            (1, 4) => Complex64::new(0.0, 1.0),
            (3, 4) => Complex64::new(0.0, -1.0),
            (n, d) => {
                let theta = 2.0 * std::f64::consts::PI * n as f64 / d as f64;
                Complex64::new(theta.cos(), theta.sin())
            }
        }
    }

    pub fn is_real(self) -> bool {
        self.den <= 2
    }
}

/// One cyclic factor of (ℤ/q)^×: discrete logs to a fixed generator.
#[derive(Debug)]
struct Component {
    modulus: u64,
    order: u64,
    /// dlog[n mod modulus] = exponent of the generator, u32::MAX off the orbit.
    dlog: Vec<u32>,
}

const NO_DLOG: u32 = u32::MAX;

fn smallest_primitive_root(p: u64, pe: u64) -> u64 {
    // smallest primitive root mod p^e (p odd); a primitive root mod p that
    // stays primitive mod p² works for all e
    let phi_p = p - 1;
    let prime_factors: Vec<u64> = factorize(phi_p).into_iter().map(|(f, _)| f).collect();
    let mut g = 2;
    loop {
        if gcd(g, p) == 1 {
            let primitive_mod_p = prime_factors.iter().all(|&f| pow_mod(g, phi_p / f, p) != 1);
            if primitive_mod_p {
                if pe == p {
                    return g;
                }
                // lift: g is primitive mod p^e unless g^{p-1} ≡ 1 mod p²
                if pow_mod(g, p - 1, p * p) != 1 {
                    return g;
                }
                // g + p always works in that degenerate case
                return g + p;
            }
        }
        g += 1;
    }
}

fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mm = m as u128;
    let mut bb = (b % m) as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * bb % mm;
        }
        bb = bb * bb % mm;
        e >>= 1;
    }
    acc as u64
}

fn component_for_odd_prime_power(p: u64, e: u32) -> Component {
    let pe = p.pow(e);
    let order = pe / p * (p - 1);
    let g = smallest_primitive_root(p, pe);
    let mut dlog = vec![NO_DLOG; pe as usize];
    let mut acc = 1u64;
    for k in 0..order {
        dlog[acc as usize] = k as u32;
        acc = acc * g % pe;
    }
    Component { modulus: pe, order, dlog }
}

fn components_for_two_power(e: u32) -> Vec<Component> {
    let m = 1u64 << e;
    match e {
        0 | 1 => vec![],
        2 => {
            // (ℤ/4)^× = {1, 3}, generated by 3
            let mut dlog = vec![NO_DLOG; 4];
            dlog[1] = 0;
            dlog[3] = 1;
            vec![Component { modulus: 4, order: 2, dlog }]
        }
        _ => {
            // (ℤ/2^e)^× = <-1> × <3>
            let half_order = m / 4;
            let mut dlog_sign = vec![NO_DLOG; m as usize];
            let mut dlog_three = vec![NO_DLOG; m as usize];
            for a in 0..2u64 {
                let mut acc = if a == 0 { 1 } else { m - 1 };
                for b in 0..half_order {
                    dlog_sign[acc as usize] = a as u32;
                    dlog_three[acc as usize] = b as u32;
                    acc = acc * 3 % m;
                }
            }
            vec![
                Component { modulus: m, order: 2, dlog: dlog_sign },
                Component { modulus: m, order: half_order, dlog: dlog_three },
            ]
        }
    }
}

#[derive(Debug)]
pub struct GroupTables {
    q: u64,
    components: Vec<Component>,
    /// Group exponent: lcm of the component orders (1 for trivial groups).
    exponent: u64,
    phi: u64,
}

impl GroupTables {
    fn build(q: u64) -> Self {
        let mut components = Vec::new();
        for (p, e) in factorize(q) {
            if p == 2 {
                components.extend(components_for_two_power(e));
            } else {
                components.push(component_for_odd_prime_power(p, e));
            }
        }
        let exponent = components.iter().fold(1u64, |m, c| lcm(m, c.order));
        GroupTables { q, components, exponent, phi: euler_phi(q) }
    }

    fn dlogs(&self, n: u64) -> Option<Vec<u64>> {
        if gcd(n, self.q) != 1 {
            return None;
        }
        let mut out = Vec::with_capacity(self.components.len());
        for c in &self.components {
            let r = (n % c.modulus) as usize;
            let d = c.dlog[r];
            if d == NO_DLOG {
                return None;
            }
            out.push(d as u64);
        }
        Some(out)
    }
}

/// One Dirichlet character mod q, immutable and cheap to clone.
#[derive(Clone)]
pub struct Character {
    tables: Arc<GroupTables>,
    index: usize,
    exps: Vec<u64>,
    conductor: u64,
    parity: u8,
}

impl std::fmt::Debug for Character {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Character")
            .field("q", &self.tables.q)
            .field("index", &self.index)
            .field("conductor", &self.conductor)
            .field("parity", &self.parity)
            .finish()
    }
}

impl Character {
    pub fn modulus(&self) -> u64 {
        self.tables.q
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// 𝖺(χ): 0 if χ(-1) = 1, else 1.
    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn is_principal(&self) -> bool {
        self.exps.iter().all(|&k| k == 0)
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor == self.tables.q
    }

    pub fn is_real(&self) -> bool {
        self.tables
            .components
            .iter()
            .zip(&self.exps)
            .all(|(c, &k)| k == 0 || 2 * k == c.order || c.order == 1)
    }

    /// Exact χ(n): None when gcd(n, q) > 1.
    pub fn eval(&self, n: u64) -> Option<RootOfUnity> {
        let dlogs = self.tables.dlogs(n)?;
        let mut acc = RootOfUnity::one();
        for ((c, &k), l) in self.tables.components.iter().zip(&self.exps).zip(dlogs) {
            if k != 0 {
                acc = acc.mul(RootOfUnity::new(
                    (k as u128 * l as u128 % c.order as u128) as u64,
                    c.order,
                ));
            }
        }
        Some(acc)
    }

    /// χ(n) as a complex number, 0 off the units.
    pub fn value(&self, n: u64) -> Complex64 {
        self.eval(n).map_or(Complex64::new(0.0, 0.0), RootOfUnity::value)
    }

    /// Index of the conjugate character within the same group.
    pub fn conjugate_index(&self) -> usize {
        let exps: Vec<u64> = self
            .tables
            .components
            .iter()
            .zip(&self.exps)
            .map(|(c, &k)| if k == 0 { 0 } else { c.order - k })
            .collect();
        rank_of(&self.tables, &exps)
    }

    pub fn group_exponent(&self) -> u64 {
        self.tables.exponent
    }
}

fn rank_of(tables: &GroupTables, exps: &[u64]) -> usize {
    let mut rank = 0u64;
    for (c, &k) in tables.components.iter().zip(exps) {
        rank = rank * c.order + k;
    }
    rank as usize
}

/// The full group of φ(q) characters mod q, principal first, ordered
/// lexicographically by CRT component exponents.
pub struct CharacterGroup {
    tables: Arc<GroupTables>,
    chars: Vec<Character>,
}

impl CharacterGroup {
    pub fn modulus(&self) -> u64 {
        self.tables.q
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Character> {
        self.chars.iter()
    }

    pub fn get(&self, index: usize) -> Option<&Character> {
        self.chars.get(index)
    }

    pub fn principal(&self) -> &Character {
        &self.chars[0]
    }

    pub fn exponent(&self) -> u64 {
        self.tables.exponent
    }

    pub fn phi(&self) -> u64 {
        self.tables.phi
    }

    /// Units mod q in increasing order.
    pub fn units(&self) -> Vec<u64> {
        (1..=self.tables.q.max(1))
            .filter(|&n| gcd(n, self.tables.q) == 1)
            .map(|n| n % self.tables.q)
            .collect()
    }
}

/// Construct the full character group mod q.
pub fn character_group(q: u64) -> Result<CharacterGroup> {
    if q == 0 {
        return Err(Error::InvalidInput("modulus q must be positive".into()));
    }
    let tables = Arc::new(GroupTables::build(q));
    let orders: Vec<u64> = tables.components.iter().map(|c| c.order).collect();
    let phi: u64 = orders.iter().product::<u64>().max(1);
    debug_assert_eq!(phi, tables.phi);
    let mut chars = Vec::with_capacity(phi as usize);
    let mut exps = vec![0u64; orders.len()];
    for index in 0..phi as usize {
        let mut ch = Character {
            tables: Arc::clone(&tables),
            index,
            exps: exps.clone(),
            conductor: 1,
            parity: 0,
        };
        ch.conductor = compute_conductor(&ch);
        ch.parity = if q <= 2 {
            0
        } else {
            match ch.eval(q - 1) {
                Some(r) if r.is_one() => 0,
                Some(_) => 1,
                None => unreachable!("-1 is always a unit"),
            }
        };
        chars.push(ch);
        // lexicographic increment, rightmost fastest
        for i in (0..orders.len()).rev() {
            exps[i] += 1;
            if exps[i] < orders[i] {
                break;
            }
            exps[i] = 0;
        }
    }
    Ok(CharacterGroup { tables, chars })
}

fn compute_conductor(ch: &Character) -> u64 {
    let q = ch.tables.q;
    // smallest d | q with χ(n) = 1 for every unit n ≡ 1 (mod d)
    'outer: for d in divisors(q) {
        let mut n = 1 + d;
        while n < 1 + q.max(1) {
            if gcd(n, q) == 1 {
                match ch.eval(n) {
                    Some(r) if r.is_one() => {}
                    _ => continue 'outer,
                }
            }
            n += d;
        }
        return d;
    }
    q
}

/// Conductor q₁ of χ and the primitive character χ₁ mod q₁ inducing it.
pub fn conductor_and_primitive(ch: &Character) -> Result<(u64, Character)> {
    let q = ch.modulus();
    let q1 = ch.conductor();
    let sub = character_group(q1)?;
    'cand: for cand in sub.iter() {
        if !cand.is_primitive() {
            continue;
        }
        // χ₁ agrees with χ on every n coprime to q; lift each unit mod q₁
        // to a residue coprime to q and compare there (both sides periodic)
        for u in 1..=q1.max(1) {
            if gcd(u, q1) != 1 {
                continue;
            }
            let mut n = u;
            while gcd(n, q) != 1 {
                n += q1;
            }
            if cand.eval(n) != ch.eval(n) {
                continue 'cand;
            }
        }
        return Ok((q1, cand.clone()));
    }
    Err(Error::Data(format!(
        "no primitive character mod {q1} induces χ index {} mod {q}",
        ch.index()
    )))
}

/// Σ of integer multiples of den-th roots of unity, kept exact.
/// Coefficient k holds the multiplicity of e^{2πik/den}.
#[derive(Clone, Debug)]
pub struct CyclotomicSum {
    den: u64,
    coeffs: Vec<i64>,
}

impl CyclotomicSum {
    pub fn zero(den: u64) -> Self {
        assert!(den > 0);
        CyclotomicSum { den, coeffs: vec![0; den as usize] }
    }

    pub fn order(&self) -> u64 {
        self.den
    }

    pub fn add_root(&mut self, r: RootOfUnity, weight: i64) {
        assert_eq!(self.den % r.order(), 0, "root order must divide sum order");
        let idx = (r.numerator() * (self.den / r.order())) as usize;
        self.coeffs[idx] += weight;
    }

    pub fn add(&mut self, other: &CyclotomicSum) {
        assert_eq!(self.den, other.den);
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += *b;
        }
    }

    /// Multiply by e^{2πi·shift/den}: a rotation of the coefficient vector.
    pub fn rotated(&self, r: RootOfUnity) -> CyclotomicSum {
        assert_eq!(self.den % r.order(), 0);
        let shift = (r.numerator() * (self.den / r.order())) as usize;
        let n = self.coeffs.len();
        let mut out = vec![0i64; n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[(k + shift) % n] = c;
        }
        CyclotomicSum { den: self.den, coeffs: out }
    }

    pub fn value(&self) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                acc += RootOfUnity::new(k as u64, self.den).value() * c as f64;
            }
        }
        acc
    }

    /// Exact test of equality with an integer, via reduction modulo the
    /// den-th cyclotomic polynomial over ℤ.
    pub fn equals_integer(&self, c: i64) -> bool {
        let mut v = self.coeffs.clone();
        v[0] -= c;
        let phi = cyclotomic_poly(self.den);
        let rem = poly_rem(&v, &phi);
        rem.iter().all(|&x| x == 0)
    }
}

/// Coefficients of the m-th cyclotomic polynomial (ascending degree).
pub fn cyclotomic_poly(m: u64) -> Vec<i64> {
    // Φ_m = (x^m - 1) / ∏_{d|m, d<m} Φ_d, exact integer division throughout
    let mut num = vec![0i64; m as usize + 1];
    num[0] = -1;
    num[m as usize] = 1;
    for d in divisors(m) {
        if d == m {
            continue;
        }
        let phi_d = cyclotomic_poly(d);
        num = poly_div_exact(&num, &phi_d);
    }
    num
}

fn poly_div_exact(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    assert_eq!(b[db], 1, "divisor must be monic");
    let mut rem = a.to_vec();
    let da = rem.len() - 1;
    assert!(da >= db);
    let mut quot = vec![0i64; da - db + 1];
    for i in (db..=da).rev() {
        let c = rem[i];
        if c != 0 {
            quot[i - db] = c;
            for (j, &bj) in b.iter().enumerate() {
                rem[i - db + j] -= c * bj;
            }
        }
    }
    assert!(rem.iter().all(|&x| x == 0), "non-exact polynomial division");
    quot
}

fn poly_rem(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    assert_eq!(b[db], 1);
    let mut rem = a.to_vec();
    for i in (db..rem.len()).rev() {
        let c = rem[i];
        if c != 0 {
            for (j, &bj) in b.iter().enumerate() {
                rem[i - db + j] -= c * bj;
            }
        }
    }
    rem.truncate(db);
    rem
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_group_mod_1() {
        let g = character_group(1).unwrap();
        assert_eq!(g.len(), 1);
        let ch = g.principal();
        for n in 1..50 {
            assert_eq!(ch.eval(n), Some(RootOfUnity::one()));
        }
        assert_eq!(ch.conductor(), 1);
        assert_eq!(ch.parity(), 0);
    }

    #[test]
    fn rejects_zero_modulus() {
        assert!(character_group(0).is_err());
    }

    /// Brute-force oracle: all homomorphisms (ℤ/4)^× = {1,3} → roots of unity.
    #[test]
    fn group_mod_4_matches_brute_force() {
        let g = character_group(4).unwrap();
        assert_eq!(g.len(), 2);
        // f(3)² = f(9 mod 4) = f(1) = 1, so f(3) ∈ {1, -1}: exactly two homs
        let values: Vec<Complex64> = g.iter().map(|c| c.value(3)).collect();
        assert_eq!(values[0], Complex64::new(1.0, 0.0));
        assert_eq!(values[1], Complex64::new(-1.0, 0.0));
        assert_eq!(g.get(1).unwrap().parity(), 1);
    }

    /// Brute-force oracle: homomorphisms from the cyclic group of order 4.
    #[test]
    fn group_mod_5_matches_brute_force() {
        let g = character_group(5).unwrap();
        assert_eq!(g.len(), 4);
        // exactly one real nonprincipal character
        let real_nonprincipal: Vec<_> =
            g.iter().filter(|c| !c.is_principal() && c.is_real()).collect();
        assert_eq!(real_nonprincipal.len(), 1);
        // 2 generates (ℤ/5)^×; a generator character maps it to a primitive 4th root
        let mut primitive_4th = 0;
        for c in g.iter() {
            let r = c.eval(2).unwrap();
            if r.order() == 4 {
                primitive_4th += 1;
            }
        }
        assert_eq!(primitive_4th, 2);
        // Legendre character mod 5 is even: χ(4) = χ(2)² = 1
        let legendre = real_nonprincipal[0];
        assert!(legendre.eval(4).unwrap().is_one());
        assert_eq!(legendre.parity(), 0);
    }

    #[test]
    fn conductor_examples() {
        // principal mod 6 → conductor 1, trivial inducing character
        let g6 = character_group(6).unwrap();
        let (q1, chi1) = conductor_and_primitive(g6.principal()).unwrap();
        assert_eq!(q1, 1);
        assert!(chi1.is_principal());

        // the mod-8 character with χ(3) = -1, χ(5) = 1 has conductor 4
        let g8 = character_group(8).unwrap();
        let target = g8
            .iter()
            .find(|c| {
                c.value(3) == Complex64::new(-1.0, 0.0) && c.value(5) == Complex64::new(1.0, 0.0)
            })
            .expect("character with χ(3)=-1, χ(5)=1 exists mod 8");
        let (q1, chi1) = conductor_and_primitive(target).unwrap();
        assert_eq!(q1, 4);
        assert!(chi1.is_primitive());

        // prime modulus: every nonprincipal character mod 5 is primitive
        let g5 = character_group(5).unwrap();
        for c in g5.iter().skip(1) {
            assert_eq!(c.conductor(), 5, "divisor test");
        }
    }

    #[test]
    fn conductor_roundtrip_reinduces_exactly() {
        for q in [8u64, 9, 12, 15, 16, 24, 30, 45] {
            let g = character_group(q).unwrap();
            for ch in g.iter() {
                let (q1, chi1) = conductor_and_primitive(ch).unwrap();
                assert_eq!(q % q1, 0);
                for n in 1..=3 * q {
                    if gcd(n, q) == 1 {
                        assert_eq!(ch.eval(n), chi1.eval(n % q1.max(1)), "q={q} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicativity_periodicity_vanishing() {
        for q in [1u64, 2, 3, 4, 8, 9, 12, 16, 21, 30, 40, 49, 60] {
            let g = character_group(q).unwrap();
            for ch in g.iter() {
                for n in 1..=2 * q.max(3) {
                    // gcd rule
                    assert_eq!(ch.eval(n).is_none(), gcd(n, q) != 1);
                    // periodicity
                    assert_eq!(ch.eval(n), ch.eval(n + q));
                }
                for m in 1..q.max(2) {
                    for n in 1..q.max(2) {
                        let lhs = ch.eval(m * n);
                        let rhs = match (ch.eval(m), ch.eval(n)) {
                            (Some(a), Some(b)) => Some(a.mul(b)),
                            _ => None,
                        };
                        assert_eq!(lhs, rhs, "q={q} χ_{} m={m} n={n}", ch.index());
                    }
                }
            }
        }
    }

    #[test]
    fn exactly_one_principal_per_group() {
        for q in 1..=60u64 {
            let g = character_group(q).unwrap();
            let principals = g
                .iter()
                .filter(|c| g.units().iter().all(|&u| c.eval(u).map_or(false, |r| r.is_one())))
                .count();
            assert_eq!(principals, 1, "q={q}");
            assert!(g.principal().is_principal());
            assert_eq!(g.len() as u64, euler_phi(q));
        }
    }

    #[test]
    fn orthogonality_exact_in_cyclotomic_arithmetic() {
        for q in [3u64, 4, 5, 8, 12, 15, 24, 36] {
            let g = character_group(q).unwrap();
            for &a in &g.units() {
                for &n in &g.units() {
                    let mut sum = CyclotomicSum::zero(g.exponent());
                    for ch in g.iter() {
                        let r = ch.eval(a).unwrap().conj().mul(ch.eval(n).unwrap());
                        sum.add_root(r, 1);
                    }
                    let expected = if a == n { g.phi() as i64 } else { 0 };
                    assert!(sum.equals_integer(expected), "q={q} a={a} n={n}");
                }
            }
        }
    }

    #[test]
    fn orthogonality_floating_point() {
        for q in 1..=40u64 {
            let g = character_group(q).unwrap();
            let phi = g.phi() as f64;
            for &a in &g.units() {
                for n in 1..=q.max(1) {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for ch in g.iter() {
                        acc += ch.value(a).conj() * ch.value(n);
                    }
                    acc /= phi;
                    let expected = if n % q.max(1) == a % q.max(1) && gcd(n, q) == 1 {
                        1.0
                    } else {
                        0.0
                    };
                    assert!(
                        (acc - expected).norm() < 1e-12,
                        "q={q} a={a} n={n}: got {acc}"
                    );
                }
            }
        }
    }

    #[test]
    fn conjugate_index_involution() {
        for q in [5u64, 7, 9, 13, 16, 21] {
            let g = character_group(q).unwrap();
            for ch in g.iter() {
                let cidx = ch.conjugate_index();
                let conj = g.get(cidx).unwrap();
                assert_eq!(conj.conjugate_index(), ch.index());
                for &u in &g.units() {
                    assert_eq!(conj.eval(u), Some(ch.eval(u).unwrap().conj()));
                }
            }
        }
    }

    #[test]
    fn cyclotomic_polys_are_correct() {
        assert_eq!(cyclotomic_poly(1), vec![-1, 1]);
        assert_eq!(cyclotomic_poly(2), vec![1, 1]);
        assert_eq!(cyclotomic_poly(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_poly(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_poly(12), vec![1, 0, -1, 0, 1]);
        // Σ over all primitive m-th roots counted once equals μ(m); degree φ(m)
        for m in 1..=30u64 {
            assert_eq!(cyclotomic_poly(m).len() as u64 - 1, euler_phi(m));
        }
    }

    #[test]
    fn root_of_unity_algebra() {
        let a = RootOfUnity::new(1, 3);
        let b = RootOfUnity::new(1, 6);
        assert_eq!(a.mul(b), RootOfUnity::new(1, 2));
        assert_eq!(a.mul(a.conj()), RootOfUnity::one());
        assert_eq!(a.pow(3), RootOfUnity::one());
        assert!((a.value() - Complex64::new(-0.5, 0.75f64.sqrt())).norm() < 1e-15);
    }
}
