//! End-to-end acceptance checks. Each check prints one PASS/FAIL line; the
//! process exits nonzero if any check fails.
//!
//! Reference values are recomputed here from first principles: excluded
//! primes from the type table, characteristic polynomials by
//! Faddeev-LeVerrier, root valuations by Newton polygons, conjugations by
//! explicit root-group products.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kostant::chevalley::{
    build_algebra, graded_ad_y, symplectic_form, ChevalleyAlgebra, RepFamily, StandardRep,
};
use kostant::linalg::Rationals;
use kostant::padic::{trace_form, Valuation};
use kostant::reduction::{check_selfdual, constants, d_g, is_topologically_nilpotent, Reducer};
use kostant::rootdata::{lambda_cocharacter, CartanType, DatumSpec, Isogeny, RootDatum};
use kostant::sections::{
    build_section, excluded_primes, is_g_good, is_n_good, section_invert, smith_decompose, InvariantSystem,
    KostantSection,
};

type Q = BigRational;
type Mat = Vec<Vec<Q>>;

fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

// ---------- independent exact arithmetic ----------

fn to_mat(m: &kostant::linalg::Matrix<Q>) -> Mat {
    m.to_rows()
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let k = b.len();
    let m = b[0].len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|t| &a[i][t] * &b[t][j]).sum())
                .collect()
        })
        .collect()
}

fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { q(1) } else { q(0) }).collect())
        .collect()
}

fn trace(a: &Mat) -> Q {
    (0..a.len()).map(|i| a[i][i].clone()).sum()
}

/// Coefficients `c_0 = 1, c_1, .., c_n` of `det(t - A) = sum c_k t^{n-k}`.
fn faddeev_leverrier(a: &Mat) -> Vec<Q> {
    let n = a.len();
    let mut c = vec![q(1)];
    let mut m = vec![vec![q(0); n]; n];
    for k in 1..=n {
        let mut next = mat_mul(a, &m);
        for i in 0..n {
            next[i][i] += &c[k - 1];
        }
        m = next;
        let ck = -trace(&mat_mul(a, &m)) / q(k as i64);
        c.push(ck);
    }
    c
}

/// `e_k` for `k = 1..n`.
fn elementary(a: &Mat) -> Vec<Q> {
    faddeev_leverrier(a)
        .into_iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| if k % 2 == 0 { c } else { -c })
        .collect()
}

fn val(x: &Q, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let count = |mut n: BigInt| {
        let mut v = 0;
        while (&n % &p).is_zero() {
            n /= &p;
            v += 1;
        }
        v
    };
    Some(count(x.numer().abs()) - count(x.denom().abs()))
}

/// All roots of the monic polynomial `sum c_k t^{n-k}` have positive
/// valuation, read off the Newton polygon of `(i, v(a_i))`, `a_i` the
/// coefficient of `t^i`.
fn newton_all_roots_positive(c: &[Q], p: u64) -> bool {
    let n = c.len() - 1;
    let pts: Vec<(i64, i64)> = (0..=n)
        .filter_map(|i| val(&c[n - i], p).map(|v| (i as i64, v)))
        .collect();
    // lower convex hull, left to right
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &pt in &pts {
        while hull.len() >= 2 {
            let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (b.0 - a.0) * (pt.1 - a.1) - (b.1 - a.1) * (pt.0 - a.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }
    // a segment of slope s carries roots of valuation -s
    hull.windows(2).all(|w| w[1].1 < w[0].1)
}

fn rank_mod_p(rows: &[Vec<BigInt>], p: u64) -> usize {
    let p = BigInt::from(p);
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.mod_floor(&p)).collect())
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][c].modpow(&(&p - 2u32), &p);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = (&m[r][c] * &inv).mod_floor(&p);
                for k in 0..cols {
                    let sub = &f * &m[rank][k];
                    m[r][k] = (&m[r][k] - sub).mod_floor(&p);
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_q(rows: &Mat) -> usize {
    let mut m = rows.clone();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &m[rank][c];
                for k in 0..cols {
                    let sub = &f * &m[rank][k];
                    m[r][k] -= sub;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn residue(x: &Q, modulus: &BigInt) -> BigInt {
    let d = x.denom().mod_floor(modulus);
    let e = d.extended_gcd(modulus);
    assert!(e.gcd.is_one(), "denominator not invertible");
    (x.numer() * e.x).mod_floor(modulus)
}

fn nilpotent_exp(m: &Mat) -> Mat {
    let n = m.len();
    let mut out = identity(n);
    let mut term = identity(n);
    for k in 1..=n {
        term = mat_mul(&term, m)
            .into_iter()
            .map(|r| r.into_iter().map(|x| x / q(k as i64)).collect())
            .collect();
        for i in 0..n {
            for j in 0..n {
                out[i][j] += &term[i][j];
            }
        }
    }
    out
}

fn scale(s: &Q, m: &Mat) -> Mat {
    m.iter().map(|r| r.iter().map(|x| x * s).collect()).collect()
}

fn image(rep: &StandardRep, x: &[Q]) -> Mat {
    to_mat(&rep.image(&Rationals, x))
}

fn basis_matrix(rep: &StandardRep, b: usize) -> Mat {
    rep.matrix(b)
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(Q::from_integer).collect())
        .collect()
}

// ---------- catalog ----------

struct Entry {
    label: String,
    datum: RootDatum,
    /// Type-dependent excluded primes of the simply connected cover.
    type_primes: Vec<u64>,
    pi1: u64,
    center: u64,
    has_c: bool,
    has_g2: bool,
}

fn cartan_det(c: &[Vec<i64>]) -> u64 {
    let mut m: Mat = c.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
    let n = m.len();
    let mut det = q(1);
    for k in 0..n {
        let piv = (k..n)
            .find(|&r| !m[r][k].is_zero())
            .expect("Cartan matrix is nonsingular");
        if piv != k {
            m.swap(piv, k);
            det = -det;
        }
        det *= &m[k][k];
        for r in k + 1..n {
            let f = &m[r][k] / &m[k][k];
            for j in k..n {
                let sub = &f * &m[k][j];
                m[r][j] -= sub;
            }
        }
    }
    det.to_integer().abs().to_u64().unwrap()
}

fn type_primes(t: CartanType, r: usize) -> Vec<u64> {
    match (t, r) {
        (CartanType::B, r) if r >= 3 => vec![2],
        (CartanType::D, _) | (CartanType::G, _) => vec![2],
        (CartanType::F, _) | (CartanType::E, 6) | (CartanType::E, 7) => vec![2, 3],
        (CartanType::E, 8) => vec![2, 3, 5],
        _ => vec![],
    }
}

fn catalog() -> Vec<Entry> {
    let mut types = Vec::new();
    types.extend((1..=7).map(|r| (CartanType::A, r)));
    types.extend((3..=4).map(|r| (CartanType::B, r)));
    types.extend((2..=4).map(|r| (CartanType::C, r)));
    types.extend((4..=5).map(|r| (CartanType::D, r)));
    types.extend((6..=8).map(|r| (CartanType::E, r)));
    types.push((CartanType::F, 4));
    types.push((CartanType::G, 2));
    let mut out = Vec::new();
    for (t, r) in types {
        for iso in [Isogeny::SimplyConnected, Isogeny::Adjoint] {
            let datum = DatumSpec::new(t, r, iso).build().unwrap();
            let det = cartan_det(datum.root_system().cartan_matrix());
            let sc = iso == Isogeny::SimplyConnected;
            out.push(Entry {
                label: format!("{t}{r} {}", iso.short_name()),
                datum,
                type_primes: type_primes(t, r),
                pi1: if sc { 1 } else { det },
                center: if sc { det } else { 1 },
                has_c: t == CartanType::C,
                has_g2: t == CartanType::G,
            });
        }
    }
    for n in 2..=4 {
        out.push(Entry {
            label: format!("GL{n}"),
            datum: RootDatum::general_linear(n).unwrap(),
            type_primes: vec![],
            pi1: 1,
            center: 1,
            has_c: false,
            has_g2: false,
        });
    }
    out
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn oracle_n(e: &Entry) -> u64 {
    let mut primes = e.type_primes.clone();
    primes.extend(prime_divisors(e.pi1));
    primes.sort_unstable();
    primes.dedup();
    primes.iter().product()
}

fn oracle_g_good(e: &Entry, p: u64) -> bool {
    !oracle_n(e).is_multiple_of(p)
        && !(p == 2 && e.has_c)
        && !(p == 3 && e.has_g2)
        && !e.pi1.is_multiple_of(p)
        && !e.center.is_multiple_of(p)
}

// ---------- harness ----------

struct Outcome {
    name: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
}

fn run(name: &'static str, budget: Duration, f: impl FnOnce() -> Result<String, String>) -> Outcome {
    let start = Instant::now();
    let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f));
    let elapsed = start.elapsed();
    let (passed, detail) = match result {
        Ok(Ok(d)) if elapsed <= budget => (true, d),
        Ok(Ok(d)) => (false, format!("{d}; exceeded {budget:?}")),
        Ok(Err(e)) => (false, e),
        Err(_) => (false, "panicked".into()),
    };
    let outcome = Outcome {
        name,
        passed,
        detail,
        elapsed,
    };
    println!(
        "{} {}: {} ({:.2?})",
        if outcome.passed { "PASS" } else { "FAIL" },
        outcome.name,
        outcome.detail,
        outcome.elapsed
    );
    outcome
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

// ---------- checks ----------

fn excluded_prime_tables(cat: &[Entry]) -> Result<String, String> {
    for e in cat {
        let alg = build_algebra(&e.datum).map_err(|x| x.to_string())?;
        let n = excluded_primes(&smith_decompose(&graded_ad_y(&alg)), &e.datum);
        let expected = oracle_n(e);
        ensure(n == expected, || {
            format!("{}: N = {n}, expected {expected}", e.label)
        })?;
    }
    let e8 = cat.iter().find(|e| e.label == "E8 sc").unwrap();
    ensure(oracle_n(e8) == 30, || "E8 table entry".into())?;
    Ok(format!("{} data", cat.len()))
}

fn goodness_classifiers(cat: &[Entry]) -> Result<String, String> {
    let primes = [2u64, 3, 5, 7, 11, 13];
    let mut checked = 0;
    for e in cat {
        let alg = build_algebra(&e.datum).map_err(|x| x.to_string())?;
        for &p in &primes {
            let n_good = is_n_good(&alg, p).map_err(|x| x.to_string())?;
            let g_good = is_g_good(&alg, p).map_err(|x| x.to_string())?;
            ensure(n_good == !oracle_n(e).is_multiple_of(p), || {
                format!("{} n-good at {p}", e.label)
            })?;
            ensure(g_good == oracle_g_good(e, p), || {
                format!("{} g-good at {p}", e.label)
            })?;
            if e.label == "C2 sc" && p == 2 {
                ensure(n_good && !g_good, || "Sp4 at 2".into())?;
            }
            if e.label == "A2 sc" && p == 3 {
                ensure(!g_good, || "SL3 at 3".into())?;
            }
            if e.label.starts_with("GL") {
                ensure(g_good, || format!("{} at {p}", e.label))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} (datum, prime) pairs"))
}

fn lambda_pairing(cat: &[Entry]) -> Result<String, String> {
    let mut count = 0;
    for e in cat {
        let lambda = lambda_cocharacter(&e.datum);
        for alpha in e.datum.root_system().simple_roots() {
            let v = lambda.pair(&e.datum.root_character(&alpha));
            ensure(v == 2, || format!("{}: <alpha, lambda> = {v}", e.label))?;
            count += 1;
        }
    }
    Ok(format!("{count} simple roots"))
}

struct Family {
    label: String,
    algebra: ChevalleyAlgebra,
    rep: StandardRep,
    section: KostantSection,
    invariants: InvariantSystem,
    retained: Vec<usize>,
}

fn family(kind: &str, n: usize) -> Family {
    let (datum, fam) = match kind {
        "gl" => (RootDatum::general_linear(n).unwrap(), RepFamily::Gl),
        "sl" => (
            DatumSpec::new(CartanType::A, n - 1, Isogeny::SimplyConnected)
                .build()
                .unwrap(),
            RepFamily::Sl,
        ),
        "sp" => (
            DatumSpec::new(CartanType::C, n / 2, Isogeny::SimplyConnected)
                .build()
                .unwrap(),
            RepFamily::Sp,
        ),
        _ => unreachable!(),
    };
    let algebra = build_algebra(&datum).unwrap();
    let rep = StandardRep::new(&algebra, fam).unwrap();
    let section = build_section(&algebra);
    let invariants = InvariantSystem::new(&rep);
    let retained = match kind {
        "gl" => (1..=n).collect(),
        "sl" => (2..=n).collect(),
        _ => (2..=n).step_by(2).collect(),
    };
    Family {
        label: format!("{kind}{n}"),
        algebra,
        rep,
        section,
        invariants,
        retained,
    }
}

fn y_coords(alg: &ChevalleyAlgebra) -> Vec<Q> {
    alg.principal_nilpotent()
        .coordinates
        .iter()
        .map(|&v| q(v))
        .collect()
}

fn section_point(f: &Family, u: &[Q]) -> Vec<Q> {
    let xi = f.section.combine(&Rationals, u).unwrap();
    xi.iter().zip(y_coords(&f.algebra)).map(|(a, b)| a + b).collect()
}

fn section_round_trip() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5ec7);
    let families = [
        ("gl", 2),
        ("gl", 3),
        ("gl", 4),
        ("sl", 2),
        ("sl", 3),
        ("sl", 4),
        ("sp", 4),
    ];
    for (kind, n) in families {
        let f = family(kind, n);
        for _ in 0..100 {
            let c: Vec<Q> = (0..f.retained.len())
                .map(|_| q(rng.random_range(-1_000_000..=1_000_000)))
                .collect();
            let u = section_invert(&Rationals, &f.algebra, &f.section, &f.rep, &f.invariants, &c)
                .map_err(|e| format!("{}: {e}", f.label))?;
            let e = elementary(&image(&f.rep, &section_point(&f, &u)));
            let got: Vec<Q> = f.retained.iter().map(|&k| e[k - 1].clone()).collect();
            ensure(got == c, || format!("{}: chi(Y + xi) != c", f.label))?;
        }
    }
    Ok(format!("{} families x 100", families.len()))
}

/// `g_0 = prod x_alpha(p t_alpha) * torus`, with its inverse.
fn random_group_element(rng: &mut ChaCha8Rng, f: &Family, p: u64) -> (Mat, Mat) {
    let size = f.rep.size();
    let pi = p as i64;
    let mut g = identity(size);
    let mut g_inv = identity(size);
    for b in f.algebra.rank()..f.algebra.dim() {
        let s = q(pi * rng.random_range(-3..=3));
        let x = basis_matrix(&f.rep, b);
        g = mat_mul(&g, &nilpotent_exp(&scale(&s, &x)));
        g_inv = mat_mul(&nilpotent_exp(&scale(&-s, &x)), &g_inv);
    }
    let mut units: Vec<Q> = (0..size).map(|_| q(1 + pi * rng.random_range(-3..=3))).collect();
    match f.rep.family() {
        RepFamily::Sl => {
            let prod: Q = units[..size - 1].iter().product();
            units[size - 1] = prod.recip();
        }
        RepFamily::Sp => {
            for i in 0..size / 2 {
                units[size - 1 - i] = units[i].recip();
            }
        }
        _ => {}
    }
    let diag = |v: &[Q]| -> Mat {
        (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| if i == j { v[i].clone() } else { q(0) })
                    .collect()
            })
            .collect()
    };
    let inv_units: Vec<Q> = units.iter().map(|u| u.recip()).collect();
    (mat_mul(&g, &diag(&units)), mat_mul(&diag(&inv_units), &g_inv))
}

fn in_group(f: &Family, g: &Mat) -> bool {
    match f.rep.family() {
        RepFamily::Sp => {
            let r = f.rep.size() / 2;
            let j: Mat = symplectic_form(r)
                .to_rows()
                .into_iter()
                .map(|row| row.into_iter().map(Q::from_integer).collect())
                .collect();
            let gt: Mat = (0..g.len())
                .map(|i| (0..g.len()).map(|k| g[k][i].clone()).collect())
                .collect();
            mat_mul(&mat_mul(&gt, &j), g) == j
        }
        RepFamily::Sl => to_mat_det(g) == q(1),
        _ => true,
    }
}

fn to_mat_det(g: &Mat) -> Q {
    let c = faddeev_leverrier(g);
    let n = g.len();
    if n.is_multiple_of(2) {
        c[n].clone()
    } else {
        -c[n].clone()
    }
}

fn reduction_round_trip() -> Result<String, String> {
    const PRECISION: u32 = 20;
    let mut total = 0;
    for (kind, n) in [("gl", 2), ("gl", 3), ("sl", 3), ("sp", 4)] {
        let f = family(kind, n);
        for p in [3u64, 5, 7] {
            if kind == "sl" && p == 3 {
                continue;
            }
            let reducer = Reducer::new(&f.algebra, &f.rep, &f.section, p, PRECISION)
                .map_err(|e| format!("{} at {p}: {e}", f.label))?;
            let modulus = BigInt::from(p).pow(PRECISION);
            let mut rng = ChaCha8Rng::seed_from_u64(1000 * p + n as u64);
            for trial in 0..100 {
                let xi0: Vec<BigInt> = (0..f.section.rank())
                    .map(|_| BigInt::from(p) * BigInt::from(rng.random_range(0..u64::MAX)) % &modulus)
                    .collect();
                let xi0_q: Vec<Q> = xi0.iter().cloned().map(Q::from_integer).collect();
                let point = image(&f.rep, &section_point(&f, &xi0_q));
                let (g0, g0_inv) = random_group_element(&mut rng, &f, p);
                ensure(mat_mul(&g0, &g0_inv) == identity(f.rep.size()), || {
                    "bad inverse".into()
                })?;
                ensure(in_group(&f, &g0), || format!("{}: g0 left the group", f.label))?;
                let z_mat = mat_mul(&mat_mul(&g0, &point), &g0_inv);
                let z = f
                    .rep
                    .coordinates(&kostant::linalg::Matrix::from_rows(z_mat.clone()))
                    .ok_or_else(|| format!("{}: conjugate not in the image", f.label))?;
                ensure(image(&f.rep, &z) == z_mat, || "coordinate extraction".into())?;

                let cert = reducer
                    .reduce(&z)
                    .map_err(|e| format!("{} p={p} #{trial}: {e}", f.label))?;
                let recovered: Vec<BigInt> = cert
                    .xi_coefficients
                    .iter()
                    .map(|c| c.mod_floor(&modulus))
                    .collect();
                ensure(recovered == xi0, || {
                    format!("{} p={p} #{trial}: recovered xi differs", f.label)
                })?;

                // certificate by direct multiplication modulo p^N
                let g: Vec<Vec<BigInt>> = cert.conjugator.clone();
                let size = g.len();
                let zr: Vec<Vec<BigInt>> = z_mat
                    .iter()
                    .map(|r| r.iter().map(|x| residue(x, &modulus)).collect())
                    .collect();
                let sec_q: Vec<Q> = cert.xi.iter().cloned().map(Q::from_integer).collect();
                let sec: Vec<Q> = sec_q
                    .iter()
                    .zip(y_coords(&f.algebra))
                    .map(|(a, b)| a + b)
                    .collect();
                let s_mat: Vec<Vec<BigInt>> = image(&f.rep, &sec)
                    .iter()
                    .map(|r| r.iter().map(|x| residue(x, &modulus)).collect())
                    .collect();
                let mul = |a: &Vec<Vec<BigInt>>, b: &Vec<Vec<BigInt>>| -> Vec<Vec<BigInt>> {
                    (0..size)
                        .map(|i| {
                            (0..size)
                                .map(|j| {
                                    (0..size)
                                        .map(|k| &a[i][k] * &b[k][j])
                                        .sum::<BigInt>()
                                        .mod_floor(&modulus)
                                })
                                .collect()
                        })
                        .collect()
                };
                ensure(mul(&g, &zr) == mul(&s_mat, &g), || {
                    format!("{} p={p}: gZ != (Y+xi)g", f.label)
                })?;
                let pb = BigInt::from(p);
                let congruent = (0..size).all(|i| {
                    (0..size).all(|j| {
                        let target = if i == j { BigInt::one() } else { BigInt::zero() };
                        ((&g[i][j] - target).mod_floor(&pb)).is_zero()
                    })
                });
                ensure(congruent, || "conjugator not congruent to 1".into())?;
                let ez = elementary(&z_mat);
                let es = elementary(&image(&f.rep, &sec));
                for &k in &f.retained {
                    let d = &ez[k - 1] - &es[k - 1];
                    ensure(val(&d, p).is_none_or(|v| v >= PRECISION as i64), || {
                        format!("{} p={p}: e_{k} differs below precision", f.label)
                    })?;
                }
                let check = cert
                    .verify(&f.algebra, &f.rep, &f.invariants, &z)
                    .map_err(|e| e.to_string())?;
                ensure(check.passed(), || {
                    format!("{} p={p}: certificate self-check {check:?}", f.label)
                })?;
                total += 1;
            }
        }
    }
    Ok(format!("{total} instances at precision {PRECISION}"))
}

fn nilpotence_equivalence() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a11);
    let mut summary = Vec::new();
    for (kind, n) in [("gl", 2), ("gl", 3), ("sp", 4)] {
        let f = family(kind, n);
        let dim = f.algebra.dim();
        let mut positives = 0;
        for trial in 0..500 {
            let p = [2u64, 3, 5, 7][trial % 4];
            let pq = q(p as i64);
            // half the draws are biased toward topologically nilpotent elements
            let biased = trial % 2 == 0;
            let x: Vec<Q> = (0..dim)
                .map(|b| {
                    if rng.random_range(0..5) == 0 {
                        return q(0);
                    }
                    let lo = if !biased {
                        -2
                    } else if b < f.algebra.rank() || f.algebra.degree(b) < 0 {
                        1
                    } else {
                        0
                    };
                    let v = rng.random_range(lo..=2);
                    let mut unit = rng.random_range(1..=50i64);
                    while unit % p as i64 == 0 {
                        unit += 1;
                    }
                    let unit = if rng.random_bool(0.5) { -unit } else { unit };
                    let num = rng.random_range(1..=9i64);
                    let num = if num % p as i64 == 0 { 1 } else { num };
                    q(unit) * pq.pow(v) * Q::new(1.into(), num.into())
                })
                .collect();
            let verdict = is_topologically_nilpotent(&f.algebra, &f.rep, &x, p).map_err(|e| e.to_string())?;
            let oracle = newton_all_roots_positive(&faddeev_leverrier(&image(&f.rep, &x)), p);
            ensure(verdict.is_topologically_nilpotent == oracle, || {
                format!(
                    "{} p={p} #{trial}: verdict {} vs oracle {oracle}",
                    f.label, verdict.is_topologically_nilpotent
                )
            })?;
            positives += oracle as usize;
        }
        summary.push(format!("{}: {positives}/500 nilpotent", f.label));
    }
    Ok(summary.join(", "))
}

fn selfdual_lattice() -> Result<String, String> {
    const PRECISION: u32 = 20;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e1f);
    let mut total = 0;
    for (kind, n, primes) in [
        ("sl", 2, vec![3u64, 5, 7]),
        ("sl", 3, vec![5, 7]),
        ("sp", 4, vec![3, 5, 7]),
    ] {
        let f = family(kind, n);
        let form = trace_form(&f.algebra, &f.rep);
        let dim = f.algebra.dim();
        let rk = f.algebra.rank();
        for i in 0..50 {
            let p = primes[i % primes.len()];
            let modulus = BigInt::from(p).pow(PRECISION - 1);
            let x = loop {
                let u: Vec<Q> = (0..f.section.rank())
                    .map(|_| {
                        Q::from_integer(BigInt::from(p) * (BigInt::from(rng.random::<u64>()) % &modulus))
                    })
                    .collect();
                let x = section_point(&f, &u);
                // regular semisimple: distinct eigenvalues in the standard representation
                let c = faddeev_leverrier(&image(&f.rep, &x));
                if discriminant_nonzero(&c) {
                    break x;
                }
            };
            let report =
                check_selfdual(&f.algebra, &f.rep, &form, &x, p).map_err(|e| format!("{}: {e}", f.label))?;
            ensure(report.holds(), || format!("{} p={p}: {report:?}", f.label))?;
            ensure(
                report.dual_levels.len() == dim - rk && report.dual_levels.iter().all(|&v| v == 0),
                || format!("{} p={p}: dual levels {:?}", f.label, report.dual_levels),
            )?;

            // B_X(a, b) = tr(X [e_a, e_b]) from matrices, unimodular on g / t_X
            let xm = image(&f.rep, &x);
            let es: Vec<Mat> = (0..dim).map(|b| basis_matrix(&f.rep, b)).collect();
            let gram: Mat = (0..dim)
                .map(|a| {
                    (0..dim)
                        .map(|b| {
                            let ab = mat_mul(&es[a], &es[b]);
                            let ba = mat_mul(&es[b], &es[a]);
                            trace(&mat_mul(&xm, &ab)) - trace(&mat_mul(&xm, &ba))
                        })
                        .collect()
                })
                .collect();
            let gram_int: Vec<Vec<BigInt>> = gram
                .iter()
                .map(|r| r.iter().map(|v| v.to_integer()).collect())
                .collect();
            ensure(
                rank_q(&gram) == dim - rk && rank_mod_p(&gram_int, p) == dim - rk,
                || format!("{} p={p}: twisted form not unimodular on the quotient", f.label),
            )?;
            // rank of ad X modulo p equals dim - rk
            let ad: Vec<Vec<BigInt>> = f
                .algebra
                .ad_matrix(&Rationals, &x)
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(|v| v.to_integer()).collect())
                .collect();
            ensure(rank_mod_p(&ad, p) == dim - rk, || {
                format!("{} p={p}: ad X rank mod p", f.label)
            })?;
            total += 1;
        }
    }
    Ok(format!("{total} regular semisimple elements"))
}

/// Nonzero discriminant of `sum c_k t^{n-k}` via the resultant-free test
/// `gcd(f, f') = 1`.
fn discriminant_nonzero(c: &[Q]) -> bool {
    let n = c.len() - 1;
    let f: Vec<Q> = c.iter().rev().cloned().collect();
    let df: Vec<Q> = (1..=n).map(|i| &f[i] * q(i as i64)).collect();
    let trim = |mut v: Vec<Q>| {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        v
    };
    let (mut a, mut b) = (trim(f), trim(df));
    while !b.is_empty() {
        while a.len() >= b.len() {
            let s = a.last().unwrap() / b.last().unwrap();
            let shift = a.len() - b.len();
            for (i, bi) in b.iter().enumerate() {
                a[i + shift] -= &s * bi;
            }
            a = trim(a);
            if a.is_empty() {
                break;
            }
        }
        std::mem::swap(&mut a, &mut b);
    }
    a.len() == 1
}

fn orbital_constants() -> Result<String, String> {
    for (kind, n, expected) in [("sl", 2, -2i64), ("gl", 3, -6), ("sp", 4, -8)] {
        let f = family(kind, n);
        for p in [3u64, 5, 7, 11, 13] {
            let c = constants(&f.algebra, p).map_err(|e| e.to_string())?;
            ensure(
                c.exponent.is_integer() && c.exponent.to_integer() == expected,
                || format!("{} p={p}: exponent {}", f.label, c.exponent),
            )?;
            let dim = f.algebra.dim() as i64;
            let rk = f.algebra.rank() as i64;
            ensure(expected == -(dim - rk), || "table".into())?;
        }
    }
    let f = family("sl", 2);
    for p in [3u64, 5, 7, 11, 13] {
        let pp = (p * p) as i64;
        let x = vec![q(0), q(1), q(pp)];
        ensure(
            image(&f.rep, &x) == vec![vec![q(0), q(1)], vec![q(pp), q(0)]],
            || "sl2 element".into(),
        )?;
        let v = d_g(&f.algebra, &x, p).map_err(|e| e.to_string())?;
        ensure(v == Valuation::Finite(2), || format!("D_g valuation {v} at {p}"))?;
        // ad X has eigenvalues 0, 2p, -2p: the t^1 coefficient is -4p^2
        let c = faddeev_leverrier(&to_mat(&f.algebra.ad_matrix(&Rationals, &x)));
        ensure(c[2] == q(-4 * pp), || {
            format!("det(ad X; g/t_X) = {} at {p}", c[2])
        })?;
    }
    Ok("sl2 -2, gl3 -6, sp4 -8; D_g valuation 2".into())
}

fn main() {
    let cat = catalog();
    let outcomes = [
        run("excluded-prime tables", Duration::from_secs(60), || {
            excluded_prime_tables(&cat)
        }),
        run("goodness classifiers", Duration::from_secs(60), || {
            goodness_classifiers(&cat)
        }),
        run("lambda pairing", Duration::from_secs(60), || lambda_pairing(&cat)),
        run("section round trip", Duration::from_secs(120), section_round_trip),
        run(
            "reduction round trip",
            Duration::from_secs(600),
            reduction_round_trip,
        ),
        run(
            "nilpotence equivalence",
            Duration::from_secs(600),
            nilpotence_equivalence,
        ),
        run("self-dual lattice", Duration::from_secs(600), selfdual_lattice),
        run("orbital constants", Duration::from_secs(60), orbital_constants),
    ];
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    println!("{} passed, {failed} failed", outcomes.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
