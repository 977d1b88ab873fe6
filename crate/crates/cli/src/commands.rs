use num_bigint::BigInt;
use num_traits::Signed;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;
use serde_json::Value;

use spverlinde::completion::graded::RelationReport;
use spverlinde::completion::{
    completion_rank_formula, completion_tower_sp1, delta, level1_graded_check,
    local_dimension_groebner_permuted, TowerReport,
};
use spverlinde::exact::arith::{is_prime, prime_factors};
use spverlinde::exact::AbelianPStructure;
use spverlinde::fusion::ring::AxiomFailure;
use spverlinde::fusion::{
    braun_douglas, braun_douglas_closed_form, braun_douglas_via_sums, build_fusion_ring, det_t_formula_sp1,
    douglas_sum, ever_conjecture, ever_conjecture_shifted, ClosedFormReading,
};
use spverlinde::ktheory::coproduct::render_tensor;
use spverlinde::ktheory::{
    coproduct_values, epsilon, epsilon_unshifted, euler_and_t, lhp_additive_path_table, lhp_ring,
    truncated_oracle, y_group_oracle, y_group_p_part, EulerReport, QuotientRingZ, TwoVarPoly,
};

use crate::output::Big;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl From<spverlinde::Error> for CliError {
    fn from(e: spverlinde::Error) -> Self {
        match e {
            spverlinde::Error::InvalidParameters(_) => CliError::Usage(e.to_string()),
            other => CliError::Failure(other.to_string()),
        }
    }
}

pub type CmdResult = Result<Value, CliError>;

fn to_value<T: Serialize>(x: &T) -> CmdResult {
    serde_json::to_value(x).map_err(|e| CliError::Failure(e.to_string()))
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn check_mn(m: u32, n: u32) -> Result<(), CliError> {
    if n < 1 || m < n + 2 {
        return usage(format!("V({m},{n}) needs n >= 1 and m >= n + 2"));
    }
    Ok(())
}

fn check_prime(p: u64) -> Result<(), CliError> {
    if !is_prime(p) {
        return usage(format!("{p} is not prime"));
    }
    Ok(())
}

fn check_prime_divides(p: u64, m: u64) -> Result<(), CliError> {
    check_prime(p)?;
    if !m.is_multiple_of(p) {
        return usage(format!("{p} does not divide {m}"));
    }
    Ok(())
}

#[derive(Serialize)]
struct ProductEntry {
    label: String,
    coeff: i64,
}

#[derive(Serialize)]
struct Product {
    a: String,
    b: String,
    product: Vec<ProductEntry>,
}

#[derive(Serialize)]
struct TableOut {
    m: u32,
    n: u32,
    rank: usize,
    labels: Vec<String>,
    products: Vec<Product>,
    axiom_failures: Vec<AxiomFailure>,
    ok: bool,
}

pub fn fusion_table(m: u32, n: u32) -> CmdResult {
    check_mn(m, n)?;
    let ring = build_fusion_ring(m, n)?;
    let names: Vec<String> = ring.labels().iter().map(|l| l.to_string()).collect();
    let l = ring.rank();
    let mut products = Vec::new();
    for a in 0..l {
        for b in a..l {
            let product = ring
                .product_basis(a, b)
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(c, coeff)| ProductEntry {
                    label: names[c].clone(),
                    coeff,
                })
                .collect();
            products.push(Product {
                a: names[a].clone(),
                b: names[b].clone(),
                product,
            });
        }
    }
    let failures = ring.check_axioms(64);
    to_value(&TableOut {
        m,
        n,
        rank: l,
        labels: names,
        products,
        ok: failures.is_empty(),
        axiom_failures: failures,
    })
}

#[derive(Serialize)]
struct DetTOut {
    #[serde(rename = "det_T")]
    det_t: Big,
    /// Only for `n = 1`.
    formula: Option<Big>,
    #[serde(rename = "match")]
    is_match: Option<bool>,
    abs_match: Option<bool>,
    m: u32,
    n: u32,
    rank: usize,
    /// Conjectured `|det T|` for `n >= 2`; informational.
    conjecture: Option<Big>,
    conjecture_status: Option<&'static str>,
    /// Exponent `C(m-3, n-1)` in place of `C(m-3, n-2)`; informational.
    conjecture_shifted: Option<Big>,
    conjecture_shifted_status: Option<&'static str>,
}

pub fn fusion_det_t(m: u32, n: u32) -> CmdResult {
    check_mn(m, n)?;
    let ring = build_fusion_ring(m, n)?;
    let det = ring.det_t();
    let (formula, is_match, abs_match) = if n == 1 {
        let f = det_t_formula_sp1(m);
        let am = f.abs() == det.abs();
        (Some(Big(f.clone())), Some(f == det), Some(am))
    } else {
        (None, None, None)
    };
    let conj = ever_conjecture(m, n);
    let conj_status = conj.as_ref().map(|c| status(*c == det.abs()));
    let shifted = ever_conjecture_shifted(m, n);
    let shifted_status = shifted.as_ref().map(|c| status(*c == det.abs()));
    to_value(&DetTOut {
        conjecture_shifted: shifted.map(Big),
        conjecture_shifted_status: shifted_status,
        det_t: Big(det),
        formula,
        is_match,
        abs_match,
        m,
        n,
        rank: ring.rank(),
        conjecture: conj.map(Big),
        conjecture_status: conj_status,
    })
}

#[derive(Serialize)]
struct DouglasOut {
    m: u32,
    n: u32,
    d: Big,
    via_sums: Big,
    #[serde(rename = "match")]
    is_match: bool,
    sums: Vec<Big>,
    closed_form_numerator_m: Big,
    closed_form_numerator_m_status: &'static str,
    closed_form_as_printed: Big,
    closed_form_as_printed_status: &'static str,
}

fn status(b: bool) -> &'static str {
    if b {
        "MATCH"
    } else {
        "MISMATCH"
    }
}

pub fn fusion_douglas(m: u32, n: u32) -> CmdResult {
    check_mn(m, n)?;
    let d = braun_douglas(m, n);
    let vs = braun_douglas_via_sums(m, n);
    let cm = braun_douglas_closed_form(m, n, ClosedFormReading::NumeratorM);
    let cp = braun_douglas_closed_form(m, n, ClosedFormReading::AsPrinted);
    to_value(&DouglasOut {
        m,
        n,
        is_match: d == vs,
        sums: (0..n).map(|i| Big(douglas_sum(m, 2 * i))).collect(),
        closed_form_numerator_m_status: status(cm == d),
        closed_form_as_printed_status: status(cp == d),
        closed_form_numerator_m: Big(cm),
        closed_form_as_printed: Big(cp),
        d: Big(d),
        via_sums: Big(vs),
    })
}

#[derive(Serialize)]
struct RankOut {
    m: u32,
    n: u32,
    prime: u64,
    delta: u64,
    rank: Big,
}

pub fn completion_rank(m: u32, n: u32, p: u64) -> CmdResult {
    check_mn(m, n)?;
    check_prime(p)?;
    to_value(&RankOut {
        m,
        n,
        prime: p,
        delta: delta(p, m as u64),
        rank: Big(completion_rank_formula(m as u64, n as u64, p)),
    })
}

#[derive(Serialize)]
struct GroebnerOut {
    m: u32,
    n: u32,
    prime: u64,
    groebner_dimension: u64,
    formula: Big,
    #[serde(rename = "match")]
    is_match: bool,
}

pub fn completion_groebner(m: u32, n: u32, p: u64, budget: usize) -> CmdResult {
    check_mn(m, n)?;
    check_prime(p)?;
    let perm: Vec<usize> = (0..n as usize).collect();
    let dim = local_dimension_groebner_permuted(m, n, p, &perm, budget)?;
    let f = completion_rank_formula(m as u64, n as u64, p);
    to_value(&GroebnerOut {
        m,
        n,
        prime: p,
        groebner_dimension: dim,
        is_match: f == BigInt::from(dim),
        formula: Big(f),
    })
}

#[derive(Serialize)]
struct TowerOut {
    #[serde(flatten)]
    report: TowerReport,
    ok: bool,
}

pub fn completion_tower(m: u32, n: u32, p: u64, ell_max: u32, precision: u32) -> CmdResult {
    if n != 1 {
        return usage("the tower is only modelled for n = 1");
    }
    check_prime(p)?;
    if ell_max == 0 {
        return usage("--ell-max must be positive");
    }
    let report = completion_tower_sp1(m, ell_max, p, precision)?;
    let ok = report.stages.iter().all(|s| s.map_ok);
    to_value(&TowerOut { report, ok })
}

#[derive(Serialize)]
struct YPrime {
    prime: u64,
    formula: String,
    oracle: String,
    exponents: Vec<u32>,
    #[serde(rename = "match")]
    is_match: bool,
    /// Without the `i - j` shift; informational.
    unshifted: String,
    unshifted_status: &'static str,
}

#[derive(Serialize)]
struct YOut {
    m: u64,
    l: u32,
    primes: Vec<YPrime>,
    #[serde(rename = "match")]
    is_match: bool,
}

fn primes_for(m: u64, prime: Option<u64>) -> Result<Vec<u64>, CliError> {
    match prime {
        Some(p) => {
            check_prime(p)?;
            Ok(vec![p])
        }
        None => Ok(prime_factors(m)),
    }
}

fn check_ml(m: u64, l: u32) -> Result<(), CliError> {
    if m < 2 || l < 1 {
        return usage("need m >= 2 and l >= 1");
    }
    Ok(())
}

pub fn ktheory_y_group(m: u64, l: u32, prime: Option<u64>) -> CmdResult {
    check_ml(m, l)?;
    let ell = l as u64;
    let mut primes = Vec::new();
    for p in primes_for(m, prime)? {
        let f = y_group_p_part(m, ell, p);
        let o = y_group_oracle(m, ell, p);
        let un = AbelianPStructure::from_finite(
            p,
            &(1..=ell + 1)
                .map(|r| epsilon_unshifted(p, ell, r, m) as u32)
                .collect::<Vec<_>>(),
        );
        primes.push(YPrime {
            prime: p,
            formula: f.to_string(),
            oracle: o.to_string(),
            exponents: (1..=ell + 1).map(|r| epsilon(p, ell, r, m) as u32).collect(),
            is_match: f == o,
            unshifted: un.to_string(),
            unshifted_status: status(un == o),
        });
    }
    let is_match = primes.iter().all(|x| x.is_match);
    to_value(&YOut { m, l, primes, is_match })
}

#[derive(Serialize)]
struct Confluence {
    samples: usize,
    seed: u64,
    agree: usize,
}

#[derive(Serialize)]
struct LhpOut {
    m: u64,
    l: u32,
    presentation: QuotientRingZ,
    relation_holds: bool,
    t_quotient_is_y_module: bool,
    t_quotient: Vec<(u64, String)>,
    confluence: Confluence,
    /// `m^2 / gcd(m, l+1)`; unverified metadata.
    n_comment: u64,
    ok: bool,
}

/// Random elements reduced by the canonical order and by a random order.
pub fn lhp_confluence_sample(m: u64, l: u32, samples: usize, seed: u64) -> usize {
    let ring = lhp_ring(m, l);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut agree = 0;
    for _ in 0..samples {
        let mut f = TwoVarPoly::zero();
        for _ in 0..rng.gen_range(1..=4) {
            let c: i64 = rng.gen_range(-60..=60);
            f.add_term(rng.gen_range(0..=l + 1), rng.gen_range(0..4), BigInt::from(c));
        }
        let a = ring.normal_form(&f);
        let b = ring.normal_form_with(&f, |k| rng.gen_range(0..k));
        if a == b {
            agree += 1;
        }
    }
    agree
}

pub fn ktheory_lhp_ring(m: u64, l: u32, prime: Option<u64>, seed: u64) -> CmdResult {
    check_ml(m, l)?;
    let ring = lhp_ring(m, l);
    let pres = spverlinde::completion::tower::sigma_quotient_presentation(m as u32, l);
    let tq = ring.t_quotient_presentation();
    let inv = spverlinde::exact::cokernel_invariants(&tq);
    let t_quotient = primes_for(m, prime)?
        .into_iter()
        .map(|p| (p, AbelianPStructure::from_invariants(p, &inv).to_string()))
        .collect();
    let samples = 1000;
    let agree = lhp_confluence_sample(m, l, samples, seed);
    let relation_holds = ring.relation_holds();
    let same = tq == pres;
    to_value(&LhpOut {
        m,
        l,
        presentation: ring.presentation(),
        relation_holds,
        t_quotient_is_y_module: same,
        t_quotient,
        confluence: Confluence { samples, seed, agree },
        n_comment: ring.n_comment(),
        ok: relation_holds && same && agree == samples,
    })
}

#[derive(Serialize)]
struct PathOut {
    length: usize,
    table: u32,
    start_column: u32,
    band: u32,
    critical: bool,
    boundary: bool,
    cells: Vec<(u32, u32, u32)>,
    appended: Vec<(u32, u32, u32)>,
}

#[derive(Serialize)]
struct PathTableOut {
    m: u64,
    l: u32,
    prime: u64,
    t_cutoff: u32,
    rows: u32,
    c: u32,
    lengths: Vec<u32>,
    in_window_lengths: Vec<u32>,
    oracle: Vec<u32>,
    disjoint: bool,
    #[serde(rename = "match")]
    is_match: bool,
    paths: Vec<PathOut>,
}

pub fn ktheory_path_table(m: u64, l: u32, p: u64, cutoff: u32) -> CmdResult {
    check_ml(m, l)?;
    check_prime_divides(p, m)?;
    let t = lhp_additive_path_table(m, l, p, cutoff)?;
    let oracle = truncated_oracle(m, l, p, cutoff).finite_exponents();
    let lengths = t.lengths();
    let disjoint = t.disjoint();
    to_value(&PathTableOut {
        m,
        l,
        prime: p,
        t_cutoff: cutoff,
        rows: t.rows,
        c: t.c,
        in_window_lengths: t.in_window_lengths(),
        is_match: disjoint && lengths == oracle,
        lengths,
        oracle,
        disjoint,
        paths: t
            .paths
            .iter()
            .filter(|p| !p.is_empty())
            .map(|p| PathOut {
                length: p.len(),
                table: p.table,
                start_column: p.start_column,
                band: p.band,
                critical: p.critical,
                boundary: p.boundary,
                cells: p.cells.clone(),
                appended: p.appended.clone(),
            })
            .collect(),
    })
}

#[derive(Serialize)]
struct CoproductOut {
    m: u64,
    l: u32,
    prime: u64,
    nu_1: String,
    nu_t: String,
    coefficient_condition: bool,
    delta: u64,
    l_is_delta: bool,
    #[serde(rename = "match")]
    is_match: bool,
}

pub fn ktheory_coproduct(m: u64, l: u32, p: u64) -> CmdResult {
    check_ml(m, l)?;
    check_prime_divides(p, m)?;
    let r = coproduct_values(m, l, p)?;
    to_value(&CoproductOut {
        m,
        l,
        prime: p,
        nu_1: render_tensor(&r.nu_1),
        nu_t: render_tensor(&r.nu_t),
        coefficient_condition: r.coefficient_condition,
        delta: r.delta,
        l_is_delta: r.ell_is_delta,
        is_match: r.consistent(),
    })
}

#[derive(Serialize)]
struct EulerOut {
    #[serde(flatten)]
    report: EulerReport,
    ok: bool,
}

pub fn ktheory_euler(l: u32) -> CmdResult {
    let report = euler_and_t(l)?;
    let ok = report.e_squared_zero;
    to_value(&EulerOut { report, ok })
}

#[derive(Serialize)]
struct GrOut {
    r: u32,
    n: u32,
    max_degree: u32,
    piece_ranks: Vec<usize>,
    expected_ranks: Vec<u64>,
    pieces_elementary: bool,
    two_degree: u32,
    two_represented_ok: bool,
    relations: Vec<RelationReport>,
    mod2_rank: u32,
    order_through_two: u32,
    #[serde(rename = "match")]
    is_match: bool,
}

pub fn gr_filtration(r: u32, max_degree: Option<u32>) -> CmdResult {
    if !(2..=5).contains(&r) {
        return usage("r must lie in 2..=5");
    }
    let md = max_degree.unwrap_or((1 << r) + 2);
    let g = level1_graded_check(r, md)?;
    let ranks_ok = g
        .piece_ranks
        .iter()
        .zip(&g.expected_ranks)
        .all(|(a, b)| *a as u64 == *b);
    let is_match = ranks_ok && g.pieces_elementary && g.two_represented_ok && g.relations.iter().all(|x| x.holds);
    to_value(&GrOut {
        r,
        n: g.n,
        max_degree: md,
        piece_ranks: g.piece_ranks,
        expected_ranks: g.expected_ranks,
        pieces_elementary: g.pieces_elementary,
        two_degree: g.two_degree,
        two_represented_ok: g.two_represented_ok,
        relations: g.relations,
        mod2_rank: g.mod2_rank,
        order_through_two: g.order_through_two,
        is_match,
    })
}
