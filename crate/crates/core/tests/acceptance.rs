//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tangent_sections::algebra::matrix::{self, Matrix};
use tangent_sections::algebra::{Field, PolyRing, PrimeField, Rationals};
use tangent_sections::chow::{bidegree_oracle, ChowClass, ChowRing};
use tangent_sections::lab::{
    count_v, default_catalog, random_conjugate, verify_chart_cover, verify_reducible_split,
    verify_sing_prediction, CatalogEntry, FiniteSection, ShapeCount,
};
use tangent_sections::section::{classify, dual_membership, local_chart_equation, ReducibleKind};

type Outcome = Result<String, String>;

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, || format!("took {t:.2?}, limit {limit:?}"))
}

fn q(v: i64) -> BigRational {
    Rationals.from_i64(v)
}

fn rational_matrix(rows: &[&[i64]]) -> Matrix<BigRational> {
    Matrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&v| q(v)).collect())
            .collect(),
    )
    .unwrap()
}

fn random_rational(rng: &mut ChaCha8Rng, size: usize, range: i64) -> Matrix<BigRational> {
    Matrix::from_fn(size, size, |_, _| q(rng.gen_range(-range..=range)))
}

fn random_invertible_rational(
    rng: &mut ChaCha8Rng,
    size: usize,
) -> (Matrix<BigRational>, Matrix<BigRational>) {
    loop {
        let p = random_rational(rng, size, 3);
        if let Some(inv) = matrix::inverse(&Rationals, &p) {
            return (p, inv);
        }
    }
}

/// Block-diagonal Jordan matrix over Q with a random block structure, so
/// that repeated eigenvalues are common.
fn random_jordan_rational(rng: &mut ChaCha8Rng, size: usize) -> Matrix<BigRational> {
    let mut blocks = Vec::new();
    let mut left = size;
    while left > 0 {
        let k = rng.gen_range(1..=left);
        blocks.push(matrix::jordan_block(
            &Rationals,
            &q(rng.gen_range(-1..=1)),
            k,
        ));
        left -= k;
    }
    matrix::direct_sum(&Rationals, &blocks)
}

fn random_class(ring: &ChowRing, rng: &mut ChaCha8Rng) -> ChowClass {
    let mut c = ring.zero();
    for k in 0..=ring.top_degree() {
        for b in ring.basis(k).unwrap() {
            let coeff: i64 = rng.gen_range(-9..=9);
            c = ring.add(&c, &ring.from_basis(b, coeff.into())).unwrap();
        }
    }
    c
}

fn degree_reproduction() -> Outcome {
    let start = Instant::now();
    for n in 2..=10u32 {
        let ring = ChowRing::new(n).unwrap();
        let top = ring.pow(&ring.zeta(), (2 * n - 2) as u64).unwrap();
        let got = ring.intersection_number(&top).unwrap();
        let want = binom(2 * n as u64, n as u64);
        ensure(got == want, || format!("n = {n}: got {got}, want {want}"))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok("zeta^(2n-2) = C(2n, n) for n = 2..10".into())
}

fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for n in 2..=8u32 {
        let ring = ChowRing::new(n).unwrap();
        for b in 0..=2 * n - 2 {
            let a = 2 * n - 2 - b;
            let class = ring
                .mul(
                    &ring.pow(&ring.zeta(), a as u64).unwrap(),
                    &ring.pow(&ring.alpha(), b as u64).unwrap(),
                )
                .unwrap();
            let got = ring.intersection_number(&class).unwrap();
            let oracle = bidegree_oracle(n, a, b).unwrap();
            // Closed form of the same truncated expansion: only the h1^n h2^n
            // coefficient of (h1 + h2)^(a+2) h2^b survives.
            let closed = if b <= n {
                binom(a as u64 + 2, n as u64)
            } else {
                BigInt::from(0)
            };
            ensure(got == oracle && got == closed, || {
                format!("n = {n}, (a, b) = ({a}, {b}): ring {got}, oracle {oracle}, closed form {closed}")
            })?;
            checked += 1;
        }
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!(
        "{checked} bidegrees agree with the truncated expansion"
    ))
}

fn exceptional_identities() -> Outcome {
    for n in 2..=8u32 {
        let ring = ChowRing::new(n).unwrap();
        let zn1 = ring.pow(&ring.zeta(), (n - 1) as u64).unwrap();
        let top = ring.monomial(n - 2, n);
        let sign = if n % 2 == 1 { 1 } else { -1 };
        for i in 0..=n {
            let ei = ring.exc(i).unwrap();
            let z = ring
                .intersection_number(&ring.mul(&zn1, &ei).unwrap())
                .unwrap();
            ensure(z == BigInt::from(1), || {
                format!("n = {n}: zeta^(n-1) E{i} = {z}")
            })?;
            for j in 0..=n {
                let prod = ring.mul(&ei, &ring.exc(j).unwrap()).unwrap();
                let want = if i == j {
                    ring.scale(&top, &sign.into())
                } else {
                    ring.zero()
                };
                ensure(prod == want, || {
                    format!("n = {n}: E{i} E{j} = {prod}, want {want}")
                })?;
            }
        }
    }
    Ok("zeta^(n-1) Ej = 1 and Ei Ej = (-1)^(n-1) delta_ij for n = 2..8".into())
}

fn relation_confluence() -> Outcome {
    for n in 2..=8u32 {
        let ring = ChowRing::new(n).unwrap();
        let got = ring.pow(&ring.zeta(), n as u64).unwrap();
        let mut want = ring.zero();
        for j in 1..=n {
            let sign: BigInt = if j % 2 == 1 { 1.into() } else { (-1).into() };
            let c = sign * binom(n as u64 + 1, j as u64);
            want = ring
                .add(&want, &ring.scale(&ring.monomial(n - j, j), &c))
                .unwrap();
        }
        ensure(got == want, || {
            format!("n = {n}: zeta^n = {got}, want {want}")
        })?;
    }
    Ok("zeta^n matches the alternating binomial sum for n = 2..8".into())
}

fn ring_axioms() -> Outcome {
    let start = Instant::now();
    for n in 2..=6u32 {
        let ring = ChowRing::new(n).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE + n as u64);
        for t in 0..500 {
            let (a, b, c) = (
                random_class(&ring, &mut rng),
                random_class(&ring, &mut rng),
                random_class(&ring, &mut rng),
            );
            let ab = ring.mul(&a, &b).unwrap();
            ensure(ab == ring.mul(&b, &a).unwrap(), || {
                format!("n = {n}, triple {t}: ab != ba")
            })?;
            let ab_c = ring.mul(&ab, &c).unwrap();
            let a_bc = ring.mul(&a, &ring.mul(&b, &c).unwrap()).unwrap();
            ensure(ab_c == a_bc, || {
                format!("n = {n}, triple {t}: (ab)c != a(bc)")
            })?;
            let lhs = ring.mul(&a, &ring.add(&b, &c).unwrap()).unwrap();
            let rhs = ring.add(&ab, &ring.mul(&a, &c).unwrap()).unwrap();
            ensure(lhs == rhs, || {
                format!("n = {n}, triple {t}: a(b+c) != ab+ac")
            })?;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok("500 seeded triples per n = 2..6".into())
}

fn section(e: &CatalogEntry) -> FiniteSection {
    FiniteSection::new(e.field().unwrap(), e.build().unwrap()).unwrap()
}

fn singular_counts() -> Outcome {
    let start = Instant::now();
    let catalog = default_catalog();
    ensure(catalog.len() >= 20, || {
        format!("catalog has only {} entries", catalog.len())
    })?;
    let mut shapes = std::collections::BTreeSet::new();
    let mut irreducible = 0;
    for e in &catalog {
        let sec = section(e);
        if sec.rank_one_eigenvalue().is_some() {
            continue;
        }
        irreducible += 1;
        let classes = sec
            .split_classes()
            .map_err(|err| format!("{}: {err}", e.label()))?;
        let expected = e.expected_classes().unwrap();
        ensure(classes == expected, || {
            format!(
                "{}: Jordan data {classes:?}, built from {expected:?}",
                e.label()
            )
        })?;
        let report = verify_sing_prediction(&sec).unwrap();
        let predicted: u64 = expected
            .iter()
            .map(|c| count_v(c.s, c.r, e.q).unwrap())
            .sum();
        ensure(
            report.sing_count_enumerated == predicted && report.passed,
            || {
                format!(
                    "{}: enumerated {}, predicted {predicted}",
                    e.label(),
                    report.sing_count_enumerated
                )
            },
        )?;
        for c in &expected {
            shapes.insert((sec.n(), c.s, c.r));
        }
    }
    for n in 2..=3 {
        for r in 1..n {
            for s in 0..=r {
                ensure(shapes.contains(&(n, s, r)), || {
                    format!("no entry with n = {n} and shape ({s}, {r})")
                })?;
            }
        }
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "{irreducible} irreducible entries match the V-shape sums"
    ))
}

fn reducible_split() -> Outcome {
    let start = Instant::now();
    for qq in [3, 5] {
        let f = PrimeField::new(qq).unwrap();
        for n in 2..=3usize {
            let mut j1 = matrix::zeros(&f, n + 1, n + 1);
            j1.set(0, 0, 1);
            let mut j2 = matrix::zeros(&f, n + 1, n + 1);
            j2.set(0, 1, 1);
            for (a, kind, s) in [
                (j1, ReducibleKind::Diagonalizable, 0),
                (j2, ReducibleKind::NonDiagonalizable, 1),
            ] {
                let sec = FiniteSection::new(f, a).unwrap();
                let r = verify_reducible_split(&sec).unwrap();
                let split = r.split_check.clone().unwrap();
                let want = count_v(s, n, qq).unwrap();
                ensure(
                    split.union_equal
                        && split.kind == kind
                        && split.intersection == want
                        && r.passed,
                    || format!("q = {qq}, n = {n}, {kind:?}: {split:?}, want |D1 ∩ D2| = {want}"),
                )?;
                ensure(
                    split.d1 + split.d2 - split.intersection == r.h_count,
                    || format!("q = {qq}, n = {n}: inclusion-exclusion fails"),
                )?;
            }
        }
    }
    within(start, Duration::from_secs(10))?;
    Ok("D1 ∪ D2 = H and |D1 ∩ D2| = count_V for J1, J2 over F3, F5, n = 2, 3".into())
}

fn invariance() -> Outcome {
    let bases: Vec<(usize, Matrix<BigRational>)> = vec![
        (2, rational_matrix(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]])),
        (2, rational_matrix(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 1]])),
        (2, rational_matrix(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]])),
        (2, rational_matrix(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]])),
        (
            3,
            rational_matrix(&[&[0, 1, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, 0, 0]]),
        ),
        (
            3,
            rational_matrix(&[&[0, 1, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 0], &[0, 0, 0, 5]]),
        ),
        (
            3,
            matrix::direct_sum(
                &Rationals,
                &[
                    matrix::companion(&Rationals, &PolyRing::new(Rationals).from_i64s(&[-2, 0, 1])),
                    matrix::companion(&Rationals, &PolyRing::new(Rationals).from_i64s(&[-2, 0, 1])),
                ],
            ),
        ),
        (
            3,
            matrix::companion(
                &Rationals,
                &PolyRing::new(Rationals).from_i64s(&[1, 0, 0, -2, 1]),
            ),
        ),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for seed in 0..100 {
        let (n, a) = &bases[seed % bases.len()];
        let base = serde_json::to_string(&classify(&Rationals, a, *n).unwrap()).unwrap();
        let (p, inv) = random_invertible_rational(&mut rng, n + 1);
        let conj = matrix::mul(&Rationals, &matrix::mul(&Rationals, &p, a), &inv);
        let got = serde_json::to_string(&classify(&Rationals, &conj, *n).unwrap()).unwrap();
        ensure(got == base, || {
            format!("conjugation {seed}: {got} != {base}")
        })?;
        let c = BigRational::new(rng.gen_range(1..=7).into(), rng.gen_range(1..=5).into());
        let c = if rng.gen_bool(0.5) { -c } else { c };
        let d = BigRational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into());
        let affine = matrix::add(
            &Rationals,
            &matrix::scale(&Rationals, a, &c),
            &matrix::scale(&Rationals, &matrix::identity(&Rationals, n + 1), &d),
        );
        let got = serde_json::to_string(&classify(&Rationals, &affine, *n).unwrap()).unwrap();
        ensure(got == base, || {
            format!("affine change {seed}: {got} != {base}")
        })?;
    }

    let counts = |sec: &FiniteSection| -> (usize, usize, Vec<ShapeCount>) {
        let h = sec.enumerate_h();
        let sing = h.iter().filter(|p| sec.is_singular(p)).count();
        let breakdown = verify_sing_prediction(sec)
            .map(|r| r.breakdown)
            .unwrap_or_default();
        (h.len(), sing, breakdown)
    };
    let catalog = default_catalog();
    for e in &catalog {
        let sec = section(e);
        let base = counts(&sec);
        for seed in 0..100 {
            let b = random_conjugate(sec.field(), sec.matrix(), seed);
            let got = counts(&FiniteSection::new(*sec.field(), b).unwrap());
            ensure(got == base, || {
                format!("{} seed {seed}: counts changed", e.label())
            })?;
        }
    }
    Ok(format!(
        "100 rational conjugations and affine changes; 100 F_q conjugations of {} entries",
        catalog.len()
    ))
}

fn chart_bound() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for n in 2..=4usize {
        for t in 0..200 {
            let a = if t % 2 == 0 {
                random_rational(&mut rng, n + 1, 5)
            } else {
                random_jordan_rational(&mut rng, n + 1)
            };
            if matrix::is_scalar(&Rationals, &a) {
                continue;
            }
            for i in 0..=n {
                for j in (0..=n).filter(|&j| j != i) {
                    let eq = local_chart_equation(&Rationals, &a, n, i, j).unwrap();
                    ensure(eq.degree() <= Some(3), || {
                        format!(
                            "n = {n}, matrix {t}, chart ({i}, {j}): degree {:?}",
                            eq.degree()
                        )
                    })?;
                }
            }
        }
    }
    let catalog = default_catalog();
    for e in &catalog {
        ensure(verify_chart_cover(&section(e)).unwrap(), || {
            format!("{}: chart singular points differ", e.label())
        })?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!(
        "deg P <= 3 on 600 random matrices; charts cover {} catalog entries",
        catalog.len()
    ))
}

fn dual_check<F: Field>(f: &F, a: &Matrix<F::Elem>, n: usize) -> Result<(), String> {
    let dual = dual_membership(f, a).unwrap();
    let r = classify(f, a, n).unwrap();
    let expected = r.reducible || r.nonempty_shapes().next().is_some();
    ensure(dual == expected, || {
        format!("dual_membership {dual} but report says {expected}")
    })
}

fn dual_consistency() -> Outcome {
    let catalog = default_catalog();
    for e in &catalog {
        let sec = section(e);
        dual_check(sec.field(), sec.matrix(), sec.n())
            .map_err(|m| format!("{}: {m}", e.label()))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut members = 0;
    for t in 0..500 {
        let n = 2 + t % 3;
        let a = match t % 3 {
            0 => random_rational(&mut rng, n + 1, 2),
            1 => random_jordan_rational(&mut rng, n + 1),
            _ => {
                let (p, inv) = random_invertible_rational(&mut rng, n + 1);
                let j = random_jordan_rational(&mut rng, n + 1);
                matrix::mul(&Rationals, &matrix::mul(&Rationals, &p, &j), &inv)
            }
        };
        if matrix::is_scalar(&Rationals, &a) {
            continue;
        }
        members += dual_membership(&Rationals, &a).unwrap() as usize;
        dual_check(&Rationals, &a, n).map_err(|m| format!("random matrix {t}: {m}"))?;
    }
    Ok(format!(
        "catalog plus 500 random matrices ({members} on the dual variety)"
    ))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("1 degree reproduction", degree_reproduction),
        ("2 oracle equivalence", oracle_equivalence),
        ("3 exceptional class identities", exceptional_identities),
        ("4 zeta^n relation", relation_confluence),
        ("5 ring axioms", ring_axioms),
        ("6 finite-field singular counts", singular_counts),
        ("7 reducible split", reducible_split),
        ("8 invariance fuzzing", invariance),
        ("9 chart degree bound", chart_bound),
        ("10 dual-variety consistency", dual_consistency),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS  {name:<34} {t:>10.2?}  {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name:<34} {t:>10.2?}  {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
