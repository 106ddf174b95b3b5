//! Self-checks comparing the interpolated formulas with independent
//! computations. Each suite reports every failed assertion instead of
//! stopping at the first.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::affine::{
    c_infinity, c_infinity_tilde, c_zero_infinity, stabilization_check, sugawara_constants,
    LieFamily,
};
use crate::arith::{factorial, rat, BinomialForm, GeomTerm, Poly, Rat, RatFunc, Series};
use crate::center::{bernoulli_p, bernoulli_sum, chi_gl, chi_gl_partitions, classical_chi};
use crate::diagrams::{cup_cap, gram_det, hom_basis, hom_dim, DiagElement, Object};
use crate::dims::{dim_gl, dim_o, verify_duality, verify_q_sequence, verify_tensor_v, weyl_dim_gl};
use crate::invariants::{
    harmonic_hilbert, kostant_report, necklace_generators, verify_hilser, KostantRhs,
    NecklaceFamily, Variant,
};
use crate::partitions::{padded_weight, partitions_of, partitions_up_to, Partition};
use crate::symfunc::{class_size, kronecker, principal_spec, sn_character};
use crate::Error;

/// Outcome of one suite.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub id: usize,
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{status}] {:>2} {:<12} {} checks",
            self.id, self.name, self.checks
        )?;
        for msg in &self.failures {
            write!(f, "\n      {msg}")?;
        }
        Ok(())
    }
}

struct Probe {
    checks: usize,
    failures: Vec<String>,
}

impl Probe {
    fn new() -> Self {
        Probe {
            checks: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(msg());
        }
    }

    fn eq<T: PartialEq + fmt::Display>(
        &mut self,
        got: &T,
        want: &T,
        what: impl FnOnce() -> String,
    ) {
        self.check(got == want, || {
            format!("{}: got {got}, expected {want}", what())
        });
    }

    fn ok<T>(&mut self, r: Result<T, Error>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.checks += 1;
                self.failures.push(format!("{}: {e}", what()));
                None
            }
        }
    }

    fn finish(self, id: usize, name: &'static str) -> CheckResult {
        CheckResult {
            id,
            name,
            checks: self.checks,
            failures: self.failures,
        }
    }
}

pub const SUITES: [&str; 10] = [
    "diagrams",
    "gram",
    "dims",
    "identities",
    "center",
    "kostant",
    "necklaces",
    "affine",
    "sugawara",
    "properties",
];

/// Runs a suite by name or number (1-based).
pub fn run_suite(key: &str) -> Result<CheckResult, Error> {
    let id = match key.parse::<usize>() {
        Ok(n) if (1..=SUITES.len()).contains(&n) => n,
        _ => SUITES
            .iter()
            .position(|&s| s == key)
            .map(|i| i + 1)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {key:?}")))?,
    };
    Ok(match id {
        1 => diagrams(),
        2 => gram(),
        3 => dims(),
        4 => identities(),
        5 => center(),
        6 => kostant(),
        7 => necklaces(),
        8 => affine(),
        9 => sugawara(),
        _ => properties(0x5eed),
    })
}

pub fn run_all() -> Vec<CheckResult> {
    SUITES
        .iter()
        .map(|s| run_suite(s).expect("known suite"))
        .collect()
}

fn t_pow(k: usize) -> Poly {
    Poly::monomial(Rat::one(), k)
}

pub fn diagrams() -> CheckResult {
    let mut p = Probe::new();
    let obj = Object::gl(1, 1);
    if let Some(e) = p.ok(cup_cap(&obj), || "cup-cap on [1,1]".into()) {
        let e = DiagElement::from(e);
        if let Some(ee) = p.ok(e.compose(&e), || "e∘e".into()) {
            p.eq(&ee, &e.scale(&RatFunc::from(Poly::t())), || {
                "e∘e in End([1,1])".into()
            });
        }
    }
    for r in 0..=4 {
        for s in 0..=4 - r {
            let obj = Object::gl(r, s);
            if let Some(tr) = p.ok(DiagElement::identity(&obj).closure_trace(), || {
                format!("trace of id_{obj}")
            }) {
                p.eq(&tr, &RatFunc::from(t_pow(r + s)), || format!("dim {obj}"));
            }
        }
    }
    for r1 in 0..=3usize {
        for s1 in 0..=3usize {
            for r2 in 0..=3usize {
                let Some(s2) = (r2 + s1).checked_sub(r1) else {
                    continue;
                };
                let m = r1 + s2;
                if m > 3 {
                    continue;
                }
                let (a, b) = (Object::gl(r1, s1), Object::gl(r2, s2));
                let want = factorial(m as u64);
                if let Some(d) = p.ok(hom_dim(&a, &b), || format!("hom_dim {a}->{b}")) {
                    p.eq(&d, &want, || format!("hom_dim {a}->{b}"));
                }
                if let Some(basis) = p.ok(hom_basis(&a, &b), || format!("hom_basis {a}->{b}")) {
                    p.eq(&BigInt::from(basis.len()), &want, || {
                        format!("|hom_basis {a}->{b}|")
                    });
                }
            }
        }
    }
    for m in 0..=4usize {
        let want: BigInt = (1..2 * m).step_by(2).fold(BigInt::one(), |acc, k| acc * k);
        for k in 0..=2 * m {
            let (a, b) = (Object::o(k), Object::o(2 * m - k));
            if let Some(basis) = p.ok(hom_basis(&a, &b), || format!("hom_basis {a}->{b}")) {
                p.eq(&BigInt::from(basis.len()), &want, || {
                    format!("|hom_basis {a}->{b}|")
                });
            }
            if let Some(d) = p.ok(hom_dim(&a, &b), || format!("hom_dim {a}->{b}")) {
                p.eq(&d, &want, || format!("hom_dim {a}->{b}"));
            }
        }
    }
    p.finish(1, "diagrams")
}

pub fn gram() -> CheckResult {
    let mut p = Probe::new();
    let objects = [
        Object::gl(1, 0),
        Object::gl(1, 1),
        Object::o(1),
        Object::o(2),
        Object::o(3),
    ];
    for obj in &objects {
        let Some(report) = p.ok(gram_det(obj), || format!("Gram determinant of End({obj})")) else {
            continue;
        };
        p.check(!report.det.is_zero(), || {
            format!("End({obj}): Gram determinant vanishes")
        });
        p.check(report.roots.all_integer(), || {
            format!("End({obj}): det {} has non-integer roots", report.det)
        });
        if *obj == Object::gl(1, 1) {
            p.eq(&report.det, &Poly::from_ints(&[0, 0, -1, 0, 1]), || {
                "det End([1,1])".into()
            });
            let roots: Vec<Rat> = report.roots.roots.iter().map(|(r, _)| r.clone()).collect();
            p.check(roots == vec![rat(-1, 1), rat(0, 1), rat(1, 1)], || {
                format!("roots of End([1,1]): {roots:?}")
            });
        }
    }
    p.finish(2, "gram")
}

pub fn dims() -> CheckResult {
    let mut p = Probe::new();
    let small = partitions_up_to(4);
    for l in &small {
        for m in &small {
            let Some(d) = p.ok(dim_gl(l, m), || format!("dim X_{{{l},{m}}}")) else {
                continue;
            };
            for n in (l.len() + m.len()).max(1)..=12 {
                let Some(w) = p.ok(padded_weight(l, m, n), || {
                    format!("padded weight {l};{m} at {n}")
                }) else {
                    continue;
                };
                if let Some(classical) =
                    p.ok(weyl_dim_gl(&w, n), || format!("Weyl dimension at {n}"))
                {
                    p.eq(&d.eval_int(n as i64), &Rat::from_integer(classical), || {
                        format!("dim X_{{{l},{m}}} at t={n}")
                    });
                }
            }
        }
    }
    let one = Partition::row(1);
    if let Some(d) = p.ok(dim_gl(&one, &one), || "dim adjoint".into()) {
        p.eq(&d, &Poly::from_ints(&[-1, 0, 1]), || "dim X_{1,1}".into());
    }
    if let Some(d) = p.ok(dim_o(&one), || "dim_o (1)".into()) {
        p.eq(&d, &Poly::t(), || "dim_o (1)".into());
    }
    if let Some(d) = p.ok(dim_o(&Partition::row(2)), || "dim_o (2)".into()) {
        p.eq(
            &d,
            &Poly::new(vec![rat(-1, 1), rat(1, 2), rat(1, 2)]),
            || "dim_o (2)".into(),
        );
    }
    let all = partitions_up_to(6);
    for l in &all {
        for m in all.iter().filter(|m| l.size() + m.size() <= 6) {
            if let Some(d) = p.ok(dim_gl(l, m), || format!("dim X_{{{l},{m}}}")) {
                let ok = BinomialForm::from_poly(&d).is_ok();
                p.check(ok, || format!("dim X_{{{l},{m}}} is not integer-valued"));
            }
        }
        if let Some(d) = p.ok(dim_o(l), || format!("dim_o {l}")) {
            let ok = BinomialForm::from_poly(&d).is_ok();
            p.check(ok, || format!("dim_o {l} is not integer-valued"));
        }
    }
    p.finish(3, "dims")
}

pub fn identities() -> CheckResult {
    let mut p = Probe::new();
    let all = partitions_up_to(6);
    for l in &all {
        for m in all.iter().filter(|m| l.size() + m.size() <= 6) {
            if let Some(ok) = p.ok(verify_duality(l, m), || format!("duality {l};{m}")) {
                p.check(ok, || format!("duality fails for {l};{m}"));
            }
        }
    }
    for m in 0..=4 {
        if let Some(ok) = p.ok(verify_tensor_v(m), || format!("X_{{{m},{m}}} ⊗ V")) {
            p.check(ok, || {
                format!(
                    "X_{{{m},{m}}} ⊗ V = X_{{{},{m}}} ⊕ X_{{({m},1),{m}}} fails",
                    m + 1
                )
            });
        }
    }
    for l in 0..=4 {
        if let Some(ok) = p.ok(verify_q_sequence(l), || format!("Q sequence at {l}")) {
            p.check(ok, || format!("Q sequence fails at {l}"));
        }
    }
    p.finish(4, "identities")
}

pub fn center() -> CheckResult {
    let mut p = Probe::new();
    p.eq(&bernoulli_p(0), &Poly::t(), || "P_0".into());
    p.eq(&bernoulli_p(1), &Poly::zero(), || "P_1".into());
    let p2 = Poly::new(vec![rat(0, 1), rat(-1, 12), rat(0, 1), rat(1, 12)]);
    p.eq(&bernoulli_p(2), &p2, || "P_2".into());
    for i in 0..=2 {
        let poly = bernoulli_p(i);
        for n in 1..=10 {
            p.eq(&poly.eval_int(n), &bernoulli_sum(i, n), || {
                format!("P_{i}({n})")
            });
        }
    }
    for l in 1..=5i64 {
        let chi = chi_gl(&[rat(l, 1)], &[], 1);
        p.eq(&chi.values()[0], &Poly::constant(rat(l, 1)), || {
            format!("χ_(({l}),∅)(C_1)")
        });
    }
    let ps = partitions_up_to(3);
    for l in &ps {
        for m in &ps {
            let chi = chi_gl_partitions(l, m, 4);
            for n in 8..=12usize {
                let Some(w) = p.ok(padded_weight(l, m, n), || format!("padded weight {l};{m}"))
                else {
                    continue;
                };
                for i in 1..=4 {
                    p.eq(
                        &chi.values()[i - 1].eval_int(n as i64),
                        &classical_chi(w.entries(), i),
                        || format!("χ_{{{l},{m}}}(C_{i}) at t={n}"),
                    );
                }
            }
        }
    }
    p.finish(5, "center")
}

pub fn kostant() -> CheckResult {
    let mut p = Probe::new();
    let one = Partition::row(1);
    if let Some(h) = p.ok(harmonic_hilbert(&one, &one, 12), || {
        "harmonic (1),(1)".into()
    }) {
        let mut want = vec![Rat::one(); 13];
        want[0] = Rat::zero();
        p.eq(&h, &Series::new(want, 12), || "harmonic (1),(1)".into());
    }
    if let Some(r) = p.ok(kostant_report(4, KostantRhs::Corrected), || {
        "Kostant identity".into()
    }) {
        p.check(r.passed(), || format!("corrected Kostant identity: {r}"));
    }
    if let Some(r) = p.ok(kostant_report(4, KostantRhs::Printed), || {
        "printed Kostant identity".into()
    }) {
        p.eq(&r.first_mismatch.map_or(-1, |k| k as i64), &2, || {
            "printed identity first mismatch".into()
        });
        let lhs = Poly::new(vec![
            rat(-1, 1),
            rat(0, 1),
            rat(-1, 2),
            rat(0, 1),
            rat(1, 2),
        ]);
        p.eq(&r.lhs.coeff(2), &lhs, || "LHS at q^2".into());
        p.eq(
            &r.rhs.coeff(2),
            &Poly::from_ints(&[-1, 0, -1, 0, 1]),
            || "printed RHS at q^2".into(),
        );
    }
    p.finish(6, "kostant")
}

pub fn necklaces() -> CheckResult {
    let mut p = Probe::new();
    for m in 1..=3 {
        if let Some(ok) = p.ok(verify_hilser(m, 6), || format!("h_{m}")) {
            p.check(ok, || {
                format!("necklace series differs from ∏(1 − {m}q^j)^-1")
            });
        }
    }
    let osp = NecklaceFamily {
        variant: Variant::OSp,
        letters: 1,
    };
    for j in 1..=12 {
        if let Some(a) = p.ok(necklace_generators(osp, j), || {
            format!("OSp generators in degree {j}")
        }) {
            let want = BigInt::from(usize::from(j % 2 == 0));
            p.eq(&a, &want, || format!("OSp generators in degree {j}"));
        }
    }
    p.finish(7, "necklaces")
}

pub fn affine() -> CheckResult {
    let mut p = Probe::new();
    let e = Partition::empty();
    let terms: Vec<_> = (2..=10)
        .map(|j| GeomTerm::unit(j, -(j as i64 - 1)))
        .collect();
    let c00 = crate::arith::geom_product(&terms, 10).expect("positive exponents");
    if let Some(c) = p.ok(c_infinity(&e, &e, 10), || "C_{0,0,∞}".into()) {
        p.eq(&c, &c00, || "C_{0,0,∞}".into());
    }
    for k in 1..=3usize {
        let row = Partition::row(k);
        let mut want = c_zero_infinity(10);
        for j in 1..=k {
            want.mul_geom(j, -2, &Rat::one())
                .expect("positive exponent");
        }
        let want = want.shift(k * k);
        if let Some(c) = p.ok(c_infinity(&row, &row, 10), || format!("C_{{{k},{k},∞}}")) {
            p.eq(&c, &want, || format!("C_{{{k},{k},∞}}"));
        }
    }
    let labels = [
        (e.clone(), e.clone()),
        (Partition::row(1), Partition::row(1)),
        (Partition::row(2), Partition::new(vec![1, 1])),
    ];
    for (l, m) in &labels {
        p.ok(stabilization_check(l, m, 6, None), || {
            format!("stabilization for {l};{m}")
        });
    }
    let ps = partitions_up_to(3);
    for l in &ps {
        for m in ps.iter().filter(|m| m.size() == l.size()) {
            for (kind, s) in [
                ("C", c_infinity(l, m, 10)),
                ("C~", c_infinity_tilde(l, m, 10)),
            ] {
                if let Some(s) = p.ok(s, || format!("{kind}_{{{l},{m},∞}}")) {
                    let ok = s
                        .coeffs()
                        .iter()
                        .all(|c| c.is_integer() && !c.is_negative());
                    p.check(ok, || {
                        format!(
                            "{kind}_{{{l},{m},∞}} has a negative or fractional coefficient: {s}"
                        )
                    });
                }
            }
        }
    }
    p.finish(8, "affine")
}

pub fn sugawara() -> CheckResult {
    let mut p = Probe::new();
    let one = Rat::one();
    if let Some((crit, c)) = p.ok(sugawara_constants(LieFamily::Sl, &one), || "sl_t".into()) {
        p.eq(&c, &RatFunc::from(Poly::from_ints(&[-1, 1])), || {
            "c(sl_t, 1)".into()
        });
        p.eq(&crit, &Poly::from_ints(&[0, -1]), || {
            "critical level of sl_t".into()
        });
    }
    if let Some((_, c)) = p.ok(sugawara_constants(LieFamily::O, &one), || "o_t".into()) {
        p.eq(
            &c,
            &RatFunc::from(Poly::new(vec![rat(0, 1), rat(1, 2)])),
            || "c(o_t, 1)".into(),
        );
    }
    p.finish(9, "sugawara")
}

/// A random element of `Hom(a, b)` with small integer coefficients.
fn random_element(rng: &mut ChaCha8Rng, a: &Object, b: &Object) -> DiagElement {
    let basis = hom_basis(a, b).expect("same family");
    let mut out = DiagElement::zero(a.clone(), b.clone());
    for d in basis.choose_multiple(rng, 3) {
        let c = Rat::from_integer(rng.gen_range(-3i64..=3).into());
        let coeff = if rng.gen_bool(0.3) {
            RatFunc::from(Poly::t().scale(&c))
        } else {
            RatFunc::constant(c)
        };
        out.add_term(d, coeff).expect("matching boundary");
    }
    out
}

/// Objects among which every hom space is nonzero.
fn object_pools() -> Vec<Vec<Object>> {
    let words = ["", "+-", "-+", "++--", "+-+-", "-++-"];
    let gl = words
        .iter()
        .map(|w| Object::parse(crate::diagrams::Family::Gl, w).expect("word"))
        .collect();
    let even = (0..=4).step_by(2).map(Object::o).collect();
    let odd = [1, 3].into_iter().map(Object::o).collect();
    vec![gl, even, odd]
}

fn diagram_laws(p: &mut Probe, seed: u64, trials: usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pools = object_pools();
    for trial in 0..trials {
        let pool = pools.choose(&mut rng).expect("nonempty");
        let pick = |rng: &mut ChaCha8Rng| pool.choose(rng).expect("nonempty").clone();
        let (a, b, c, d) = (
            pick(&mut rng),
            pick(&mut rng),
            pick(&mut rng),
            pick(&mut rng),
        );
        let f = random_element(&mut rng, &a, &b);
        let g = random_element(&mut rng, &b, &c);
        let h = random_element(&mut rng, &c, &d);
        let left = h.compose(&g).and_then(|hg| hg.compose(&f));
        let right = g.compose(&f).and_then(|gf| h.compose(&gf));
        p.check(left.is_ok() && left == right, || {
            format!("associativity, trial {trial}: {a} {b} {c} {d}")
        });

        let back = random_element(&mut rng, &b, &a);
        let fg = f.compose(&back).and_then(|x| x.closure_trace());
        let gf = back.compose(&f).and_then(|x| x.closure_trace());
        p.check(fg.is_ok() && fg == gf, || {
            format!("trace symmetry, trial {trial}: {a} {b}")
        });

        let (a2, b2, c2) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
        let g2 = random_element(&mut rng, &a2, &b2);
        let f2 = random_element(&mut rng, &b2, &c2);
        let lhs = g
            .tensor(&f2)
            .and_then(|x| f.tensor(&g2).and_then(|y| x.compose(&y)));
        let rhs = g
            .compose(&f)
            .and_then(|x| f2.compose(&g2).and_then(|y| x.tensor(&y)));
        p.check(lhs.is_ok() && lhs == rhs, || {
            format!("interchange law, trial {trial}")
        });
    }
}

fn character_orthogonality(p: &mut Probe, n: usize) {
    let parts = partitions_of(n);
    let order = factorial(n as u64);
    for l in &parts {
        for m in &parts {
            let mut sum = BigInt::zero();
            for rho in &parts {
                let (Ok(a), Ok(b)) = (sn_character(l, rho), sn_character(m, rho)) else {
                    p.check(false, || format!("character of S_{n} at {l}, {m}, {rho}"));
                    continue;
                };
                sum += class_size(rho) * a * b;
            }
            let want = if l == m {
                order.clone()
            } else {
                BigInt::zero()
            };
            p.eq(&sum, &want, || format!("⟨χ^{l}, χ^{m}⟩ in S_{n} times n!"));
        }
    }
}

fn kronecker_positivity(p: &mut Probe, n: usize) {
    let parts = partitions_of(n);
    for l in &parts {
        for m in &parts {
            let Some(k) = p.ok(kronecker(l, m), || format!("s_{l} * s_{m}")) else {
                continue;
            };
            let ok = k.terms().all(|(_, c)| c.is_integer() && !c.is_negative());
            p.check(ok, || format!("s_{l} * s_{m} = {k} has a bad coefficient"));
            // s_λ * s_(n) = s_λ
            if m.len() == 1 {
                p.eq(&k.coeff(l), &Rat::one(), || format!("s_{l} * s_{m}"));
            }
        }
    }
}

/// `s_λ(q, q², …)` as the Jacobi–Trudi determinant `det h_{λ_i − i + j}`
/// with `h_k(q, q², …) = q^k / ∏_{i ≤ k} (1 − q^i)`.
pub fn jacobi_trudi_spec(lam: &Partition, trunc: usize) -> Series<Rat> {
    let h = |k: i64| -> Series<Rat> {
        if k < 0 {
            return Series::zero(trunc);
        }
        let k = k as usize;
        let terms: Vec<_> = (1..=k.min(trunc)).map(|i| GeomTerm::unit(i, -1)).collect();
        crate::arith::geom_product(&terms, trunc)
            .expect("positive exponents")
            .shift(k)
    };
    let r = lam.len();
    let entries: Vec<Vec<Series<Rat>>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| h(lam.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    let mut total = Series::zero(trunc);
    let mut perm: Vec<usize> = (0..r).collect();
    permute(&mut perm, 0, &mut |sigma| {
        let mut term = Series::one(trunc);
        for (i, &j) in sigma.iter().enumerate() {
            term = term.mul(&entries[i][j]).expect("same truncation");
        }
        total = if sign(sigma) {
            total.add(&term)
        } else {
            total.sub(&term)
        }
        .expect("same truncation");
    });
    total
}

fn permute(v: &mut Vec<usize>, k: usize, emit: &mut dyn FnMut(&[usize])) {
    if k == v.len() {
        emit(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, emit);
        v.swap(k, i);
    }
}

/// True for even permutations.
fn sign(sigma: &[usize]) -> bool {
    let inversions = (0..sigma.len())
        .flat_map(|i| (i + 1..sigma.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| sigma[i] > sigma[j])
        .count();
    inversions % 2 == 0
}

pub fn properties(seed: u64) -> CheckResult {
    let mut p = Probe::new();
    diagram_laws(&mut p, seed, 60);
    for n in 1..=6 {
        character_orthogonality(&mut p, n);
        kronecker_positivity(&mut p, n);
    }
    for lam in partitions_up_to(5) {
        p.eq(
            &principal_spec(&lam, 14),
            &jacobi_trudi_spec(&lam, 14),
            || format!("principal specialization of s_{lam}"),
        );
    }
    p.finish(10, "properties")
}
