//! Segmented sieve for μ(n) and Λ(n); exact Mertens sums plain, in
//! progressions, and twisted by Dirichlet characters.
//!
//! Segments are independent work units combined by ordered summation. Sieved
//! segments can be cached on disk in a fixed little-endian layout (16-byte
//! header: magic, version, log2 width, lo) at 2 bits per value, so repeated
//! CLI runs over the same range skip the sieve.

use crate::characters::{gcd, Character, CyclotomicSum};
use crate::{Error, Result};
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

/// Default segment width (values per segment).
pub const SEGMENT_WIDTH: u64 = 1 << 20;
/// Default hard cap on sieve range.
pub const DEFAULT_MAX: u64 = 1_000_000_000;

const CACHE_MAGIC: &[u8; 4] = b"MUSG";
const CACHE_VERSION: u16 = 1;

fn simple_prime_sieve(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut is_comp = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !is_comp[p] {
            primes.push(p as u64);
            let mut m = p * p;
            while m <= n {
                is_comp[m] = true;
                m += p;
            }
        }
    }
    primes
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Exact μ(n) for lo ≤ n ≤ hi by segmented sieving with primes ≤ √hi.
pub fn mobius_segment(lo: u64, hi: u64) -> Result<Vec<i8>> {
    mobius_segment_capped(lo, hi, DEFAULT_MAX)
}

pub fn mobius_segment_capped(lo: u64, hi: u64, max: u64) -> Result<Vec<i8>> {
    if lo < 1 || lo > hi {
        return Err(Error::InvalidInput(format!("bad segment [{lo}, {hi}]")));
    }
    if hi > max {
        return Err(Error::InvalidInput(format!(
            "segment end {hi} exceeds configured maximum {max}"
        )));
    }
    let primes = simple_prime_sieve(isqrt(hi));
    Ok(sieve_window(lo, hi, &primes))
}

fn sieve_window(lo: u64, hi: u64, primes: &[u64]) -> Vec<i8> {
    let len = (hi - lo + 1) as usize;
    let mut mu = vec![1i8; len];
    let mut rem: Vec<u64> = (lo..=hi).collect();
    for &p in primes {
        if p * p > hi {
            break;
        }
        let mut n = lo.div_ceil(p) * p;
        while n <= hi {
            let i = (n - lo) as usize;
            let mut cnt = 0;
            while rem[i] % p == 0 {
                rem[i] /= p;
                cnt += 1;
            }
            if cnt >= 2 {
                mu[i] = 0;
            } else {
                mu[i] = -mu[i];
            }
            n += p;
        }
    }
    for i in 0..len {
        if rem[i] > 1 && mu[i] != 0 {
            mu[i] = -mu[i];
        }
    }
    if lo == 1 {
        mu[0] = 1; // rem[0] = 1 untouched; μ(1) = 1
    }
    mu
}

/// Mertens' function M(x) = Σ_{n≤x} μ(n), streamed over segments.
pub fn mertens(x: u64) -> Result<i64> {
    if x < 1 {
        return Err(Error::InvalidInput("mertens requires x ≥ 1".into()));
    }
    let primes = simple_prime_sieve(isqrt(x));
    let mut total = 0i64;
    let mut lo = 1u64;
    while lo <= x {
        let hi = (lo + SEGMENT_WIDTH - 1).min(x);
        for &m in &sieve_window(lo, hi, &primes) {
            total += m as i64;
        }
        lo = hi + 1;
    }
    Ok(total)
}

/// M(x, q, a) = Σ_{n≤x, n≡a mod q} μ(n). gcd(a, q) > 1 is allowed; the sum
/// is well defined for every residue class.
pub fn mertens_progression(x: u64, q: u64, a: u64) -> Result<i64> {
    if x < 1 || q < 1 {
        return Err(Error::InvalidInput("mertens_progression requires x, q ≥ 1".into()));
    }
    if a >= q {
        return Err(Error::InvalidInput(format!("residue {a} out of range mod {q}")));
    }
    let primes = simple_prime_sieve(isqrt(x));
    let mut total = 0i64;
    let mut lo = 1u64;
    while lo <= x {
        let hi = (lo + SEGMENT_WIDTH - 1).min(x);
        let seg = sieve_window(lo, hi, &primes);
        let mut n = lo + ((a + q - lo % q) % q);
        while n <= hi {
            total += seg[(n - lo) as usize] as i64;
            n += q;
        }
        lo = hi + 1;
    }
    Ok(total)
}

/// Exact μ table with running sums, plain and per residue class mod q.
/// Desk-scale: holds all of [1, x] in memory.
pub struct MertensTable {
    pub x: u64,
    pub q: u64,
    mu: Vec<i8>,
    running: Vec<i64>,
    class_running: Vec<Vec<i64>>,
}

impl MertensTable {
    pub fn build(x: u64, q: u64) -> Result<Self> {
        if x < 1 || q < 1 {
            return Err(Error::InvalidInput("MertensTable requires x, q ≥ 1".into()));
        }
        if x > 100_000_000 {
            return Err(Error::InvalidInput(
                "MertensTable is desk-scale (x ≤ 1e8); use the streaming sums".into(),
            ));
        }
        let mu = mobius_segment_capped(1, x, x)?;
        let mut running = Vec::with_capacity(x as usize);
        let mut class_running = vec![Vec::new(); q as usize];
        let mut acc = 0i64;
        let mut class_acc = vec![0i64; q as usize];
        for n in 1..=x {
            let m = mu[(n - 1) as usize] as i64;
            acc += m;
            running.push(acc);
            let c = (n % q) as usize;
            class_acc[c] += m;
            class_running[c].push(class_acc[c]);
        }
        Ok(MertensTable { x, q, mu, running, class_running })
    }

    pub fn mu(&self, n: u64) -> i8 {
        self.mu[(n - 1) as usize]
    }

    pub fn mertens(&self, t: u64) -> i64 {
        if t == 0 {
            0
        } else {
            self.running[(t.min(self.x) - 1) as usize]
        }
    }

    /// M(t, q, a) from the per-class running sums.
    pub fn mertens_class(&self, t: u64, a: u64) -> i64 {
        let class = &self.class_running[(a % self.q) as usize];
        // number of n ≤ t with n ≡ a (mod q)
        let count = if a == 0 {
            t / self.q
        } else if t >= a {
            (t - a) / self.q + 1
        } else {
            0
        };
        if count == 0 {
            0
        } else {
            class[(count - 1) as usize]
        }
    }
}

/// Λ(n): log p when n = p^k, else 0.
pub fn vonmangoldt(n: u64) -> f64 {
    if n < 2 {
        return 0.0;
    }
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            return if m == 1 { (p as f64).ln() } else { 0.0 };
        }
        p += 1;
    }
    (m as f64).ln() // n itself prime
}

/// Λ(n) for all n ≤ limit via a smallest-prime-factor sieve.
pub fn vonmangoldt_sieve(limit: u64) -> Vec<f64> {
    let n = limit as usize;
    let mut spf = vec![0u32; n + 1];
    for p in 2..=n {
        if spf[p] == 0 {
            let mut m = p;
            while m <= n {
                if spf[m] == 0 {
                    spf[m] = p as u32;
                }
                m += p;
            }
        }
    }
    let mut lam = vec![0.0f64; n + 1];
    for k in 2..=n {
        let p = spf[k] as usize;
        let mut m = k;
        while m % p == 0 {
            m /= p;
        }
        if m == 1 {
            lam[k] = (p as f64).ln();
        }
    }
    lam
}

/// Σ_{n≤x} χ(n) μ(n), exact in root-of-unity arithmetic.
pub fn twisted_sum(x: u64, chi: &Character) -> Result<CyclotomicSum> {
    if x < 1 {
        return Err(Error::InvalidInput("twisted_sum requires x ≥ 1".into()));
    }
    let q = chi.modulus();
    // per-residue values, computed once
    let values: Vec<Option<crate::characters::RootOfUnity>> =
        (0..q.max(1)).map(|r| chi.eval(if r == 0 { q.max(1) } else { r })).collect();
    let mut sum = CyclotomicSum::zero(chi.group_exponent());
    let primes = simple_prime_sieve(isqrt(x));
    let mut lo = 1u64;
    while lo <= x {
        let hi = (lo + SEGMENT_WIDTH - 1).min(x);
        let seg = sieve_window(lo, hi, &primes);
        for n in lo..=hi {
            let m = seg[(n - lo) as usize];
            if m != 0 {
                if let Some(r) = values[(n % q.max(1)) as usize] {
                    sum.add_root(r, m as i64);
                }
            }
        }
        lo = hi + 1;
    }
    Ok(sum)
}

fn encode_mu(m: i8) -> u8 {
    match m {
        0 => 0,
        1 => 1,
        -1 => 2,
        _ => unreachable!(),
    }
}

fn decode_mu(c: u8) -> i8 {
    match c {
        0 => 0,
        1 => 1,
        2 => -1,
        _ => 0,
    }
}

/// Disk cache of sieved segments, keyed by (segment index, width).
pub struct SegmentCache {
    dir: PathBuf,
    pub width: u64,
}

impl SegmentCache {
    pub fn new(dir: impl AsRef<Path>, width: u64) -> Result<Self> {
        assert!(width.is_power_of_two(), "segment width must be a power of two");
        std::fs::create_dir_all(dir.as_ref())?;
        Ok(SegmentCache { dir: dir.as_ref().to_path_buf(), width })
    }

    fn path(&self, index: u64) -> PathBuf {
        self.dir.join(format!("mu_w{}_s{}.seg", self.width.trailing_zeros(), index))
    }

    /// μ over segment `index` (values lo = index·width + 1 ..= lo+width-1),
    /// sieving and writing the cache file on a miss.
    pub fn segment(&self, index: u64, max: u64) -> Result<Vec<i8>> {
        let lo = index * self.width + 1;
        let hi = lo + self.width - 1;
        let path = self.path(index);
        if let Ok(data) = std::fs::read(&path) {
            if let Some(seg) = self.parse(&data, lo) {
                return Ok(seg);
            }
        }
        let seg = mobius_segment_capped(lo, hi, max)?;
        let mut buf = Vec::with_capacity(16 + seg.len().div_ceil(4));
        buf.extend_from_slice(CACHE_MAGIC);
        buf.extend_from_slice(&CACHE_VERSION.to_le_bytes());
        buf.extend_from_slice(&(self.width.trailing_zeros() as u16).to_le_bytes());
        buf.extend_from_slice(&lo.to_le_bytes());
        let mut packed = 0u8;
        for (i, &m) in seg.iter().enumerate() {
            packed |= encode_mu(m) << ((i % 4) * 2);
            if i % 4 == 3 {
                buf.push(packed);
                packed = 0;
            }
        }
        if seg.len() % 4 != 0 {
            buf.push(packed);
        }
        let tmp = path.with_extension("tmp");
        {
            let mut f = std::fs::File::create(&tmp)?;
            f.write_all(&buf)?;
        }
        std::fs::rename(&tmp, &path)?;
        Ok(seg)
    }

    fn parse(&self, data: &[u8], expect_lo: u64) -> Option<Vec<i8>> {
        if data.len() < 16 || &data[0..4] != CACHE_MAGIC {
            return None;
        }
        let version = u16::from_le_bytes([data[4], data[5]]);
        let log2w = u16::from_le_bytes([data[6], data[7]]);
        let lo = u64::from_le_bytes(data[8..16].try_into().ok()?);
        if version != CACHE_VERSION || (1u64 << log2w) != self.width || lo != expect_lo {
            return None;
        }
        let n = self.width as usize;
        if data.len() < 16 + n.div_ceil(4) {
            return None;
        }
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let byte = data[16 + i / 4];
            out.push(decode_mu((byte >> ((i % 4) * 2)) & 0b11));
        }
        Some(out)
    }

    /// M(x) using cached segments.
    pub fn mertens(&self, x: u64, max: u64) -> Result<i64> {
        let mut total = 0i64;
        let mut index = 0u64;
        loop {
            let lo = index * self.width + 1;
            if lo > x {
                break;
            }
            let seg = self.segment(index, max.max(lo + self.width - 1))?;
            let hi = (lo + self.width - 1).min(x);
            for n in lo..=hi {
                total += seg[(n - lo) as usize] as i64;
            }
            index += 1;
        }
        Ok(total)
    }
}

/// Header fields of a cached segment file, for inspection.
pub fn read_segment_header(path: &Path) -> Result<(u16, u64, u64)> {
    let mut f = std::fs::File::open(path)?;
    let mut head = [0u8; 16];
    f.read_exact(&mut head)?;
    if &head[0..4] != CACHE_MAGIC {
        return Err(Error::Data(format!("{}: bad magic", path.display())));
    }
    let version = u16::from_le_bytes([head[4], head[5]]);
    let log2w = u16::from_le_bytes([head[6], head[7]]);
    let lo = u64::from_le_bytes(head[8..16].try_into().unwrap());
    Ok((version, 1u64 << log2w, lo))
}
