//! Named groups of checks, shared by the command line and the acceptance
//! tests.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{Algebra, Element, Generator, QuotientMode, Ring, Sweep, Word};
use crate::drinfeld::{check_drinfeld_relations, embedding_check, h_variants, root_vector, CurrentKind};
use crate::error::RttError;
use crate::hopf::axioms::{cocommutativity_check, verify_hopf_axioms};
use crate::hopf::closed::Sl2Form;
use crate::hopf::formulas::HopfMap;
use crate::hopf::minors::{minor_hopf_check, pullback_routes_agree};
use crate::hopf::HopfContext;
use crate::report::VerificationReport;
use crate::rtt::{ybe_unitarity_check, ExpansionSide, GaussVariant, Yangian};
use crate::scalar::{rat, Rational};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    RMatrix,
    Algebra,
    Minors,
    Gauss,
    Drinfeld,
    HopfAxioms,
    Theorem5,
    Theorem6,
    Sl2,
    Sl3,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::RMatrix,
        Suite::Algebra,
        Suite::Minors,
        Suite::Gauss,
        Suite::Drinfeld,
        Suite::HopfAxioms,
        Suite::Theorem5,
        Suite::Theorem6,
        Suite::Sl2,
        Suite::Sl3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::RMatrix => "r-matrix",
            Suite::Algebra => "algebra",
            Suite::Minors => "minors",
            Suite::Gauss => "gauss",
            Suite::Drinfeld => "drinfeld",
            Suite::HopfAxioms => "hopf-axioms",
            Suite::Theorem5 => "theorem5",
            Suite::Theorem6 => "theorem6",
            Suite::Sl2 => "sl2",
            Suite::Sl3 => "sl3",
        }
    }

    /// Whether the suite runs on this configuration at all (rank-specific
    /// suites and the Hopf suites, which need `sl_n`).
    pub fn applies_to(self, cfg: &SuiteConfig) -> bool {
        let sl = cfg.mode == QuotientMode::Sl;
        match self {
            Suite::Sl2 => sl && cfg.n == 2,
            Suite::Sl3 => sl && cfg.n == 3,
            Suite::HopfAxioms | Suite::Theorem5 | Suite::Theorem6 => sl,
            _ => true,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite {s:?}"))
    }
}

/// 4 for `n = 2`, 3 for `n = 3`, 2 beyond.
pub fn default_order(n: usize) -> u32 {
    match n {
        2 => 4,
        3 => 3,
        _ => 2,
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub n: usize,
    pub order: u32,
    pub mode: QuotientMode,
    pub seed: u64,
    /// Sample sizes of the randomized suites.
    pub points: usize,
    pub words: usize,
}

impl SuiteConfig {
    pub fn new(n: usize) -> Self {
        SuiteConfig {
            n,
            order: default_order(n),
            mode: QuotientMode::Sl,
            seed: 2024,
            points: 10,
            words: 200,
        }
    }

    pub fn with_order(mut self, order: u32) -> Self {
        self.order = order;
        self
    }

    pub fn with_mode(mut self, mode: QuotientMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    fn base(&self, identity: &str) -> VerificationReport {
        VerificationReport::new(identity)
            .with_param("n", self.n)
            .with_param("order", self.order)
            .with_param("mode", self.mode.to_string())
    }

    fn yangian(&self) -> Result<Yangian, RttError> {
        Ok(Yangian::new(self.n, self.order, self.mode)?)
    }
}

pub fn run(suite: Suite, cfg: &SuiteConfig) -> Result<VerificationReport, RttError> {
    match suite {
        Suite::RMatrix => r_matrix(cfg),
        Suite::Algebra => algebra(cfg),
        Suite::Minors => minors(cfg),
        Suite::Gauss => gauss(cfg),
        Suite::Drinfeld => drinfeld(cfg),
        Suite::HopfAxioms => hopf_axioms(cfg),
        Suite::Theorem5 => theorem5(cfg),
        Suite::Theorem6 => theorem6(cfg),
        Suite::Sl2 => sl2(cfg),
        Suite::Sl3 => sl3(cfg),
    }
}

/// Every applicable suite, run in parallel and collated in a fixed order.
pub fn run_all(cfg: &SuiteConfig) -> Result<VerificationReport, RttError> {
    let results: Vec<_> = Suite::ALL
        .par_iter()
        .filter(|s| s.applies_to(cfg))
        .map(|&s| run(s, cfg))
        .collect();
    let mut top = cfg.base("all");
    for r in results {
        top.push_child(r?);
    }
    for s in Suite::ALL.iter().filter(|s| !s.applies_to(cfg)) {
        top.note(format!("{s} skipped for this configuration"));
    }
    Ok(top)
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-30..=30), rng.gen_range(1..=7))
}

/// Yang-Baxter and unitarity at seeded random rational points.
pub fn r_matrix(cfg: &SuiteConfig) -> Result<VerificationReport, RttError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut top = cfg.base("r-matrix").with_param("seed", cfg.seed);
    let mut done = 0;
    while done < cfg.points {
        let (u, v) = (random_rational(&mut rng), random_rational(&mut rng));
        match ybe_unitarity_check(cfg.n, &u, &v) {
            Ok(mut r) => {
                r.checks += 2;
                top.push_child(r);
                done += 1;
            }
            Err(RttError::Pole(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(top)
}

/// A random word of degree at most `max` with at least one symbol.
pub fn random_word(rng: &mut ChaCha8Rng, n: usize, max: u32) -> Word {
    let mut w = Vec::new();
    let mut deg = 0;
    let len = rng.gen_range(1..=4);
    while w.len() < len && deg < max {
        let k = rng.gen_range(1..=max - deg);
        w.push(Generator::new(rng.gen_range(1..=n), rng.gen_range(1..=n), k));
        deg += k;
    }
    Word(w)
}

/// Confluence of the rewriting (both sweep orders and the cached rewriter
/// agree) and associativity on seeded random words.
pub fn algebra(cfg: &SuiteConfig) -> Result<VerificationReport, RttError> {
    let alg = Algebra::new(cfg.n, cfg.order, cfg.mode)?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut top = cfg.base("algebra").with_param("seed", cfg.seed);
    let mut conf = VerificationReport::new("confluence").with_param("words", cfg.words);
    for _ in 0..cfg.words {
        let w = random_word(&mut rng, cfg.n, cfg.order);
        let cached = alg.normal_order(&w)?;
        let d = w.degree() as usize;
        conf.check_eq(&format!("{w} left sweep"), d, &alg.normal_order_by(&w, Sweep::LeftToRight), &cached);
        conf.check_eq(&format!("{w} right sweep"), d, &alg.normal_order_by(&w, Sweep::RightToLeft), &cached);
    }
    let mut assoc = VerificationReport::new("associativity").with_param("triples", cfg.words);
    if cfg.order < 3 {
        assoc.note("needs order >= 3 for three nonempty words");
    } else {
        for _ in 0..cfg.words {
            // split the degree budget so the product stays exact
            let a = random_word(&mut rng, cfg.n, cfg.order - 2);
            let b = random_word(&mut rng, cfg.n, cfg.order - 1 - a.degree());
            let c = random_word(&mut rng, cfg.n, cfg.order - a.degree() - b.degree());
            let total = (a.degree() + b.degree() + c.degree()) as usize;
            let xs: Vec<Element> = [&a, &b, &c].iter().map(|w| alg.normal_order(w)).collect::<Result<_, _>>()?;
            let left = alg.mul(&alg.mul(&xs[0], &xs[1]), &xs[2]);
            let right = alg.mul(&xs[0], &alg.mul(&xs[1], &xs[2]));
            assoc.check_eq(&format!("{a} {b} {c}"), total, &left, &right);
        }
    }
    top.push_child(conf);
    top.push_child(assoc);
    Ok(top)
}

fn increasing(n: usize, m: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, m: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for c in start..=n {
            cur.push(c);
            go(c + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, m, &mut Vec::new(), &mut out);
    out
}

/// Minor identities for all keys of size at most 3: the row form and both
/// expansions agree with the defining sum, swapping two rows or columns
/// flips the sign, and a repeated index gives zero.
pub fn minor_identities(y: &Yangian) -> Result<VerificationReport, RttError> {
    let order = y.order();
    let mut r = VerificationReport::new("minor identities")
        .with_param("n", y.n())
        .with_param("order", order);
    for m in 1..=y.n().min(3) {
        for rows in increasing(y.n(), m) {
            for cols in increasing(y.n(), m) {
                let key = format!("{rows:?};{cols:?}");
                let base = y.minor_unreduced(&rows, &cols)?;
                r.check_series(&format!("row form {key}"), &y.minor_row_form(&rows, &cols)?, &base, order);
                for (side, name) in [(ExpansionSide::LastColumn, "column"), (ExpansionSide::LastRow, "row")] {
                    r.check_series(&format!("last {name} expansion {key}"), &y.minor_expand(&rows, &cols, side)?, &base, order);
                }
                if m < 2 {
                    continue;
                }
                for p in 0..m - 1 {
                    let mut sr = rows.clone();
                    sr.swap(p, p + 1);
                    r.check_series(&format!("row swap {p} {key}"), &y.minor_unreduced(&sr, &cols)?, &base.neg(), order);
                    let mut sc = cols.clone();
                    sc.swap(p, p + 1);
                    r.check_series(&format!("column swap {p} {key}"), &y.minor_unreduced(&rows, &sc)?, &base.neg(), order);
                }
                let zero = crate::series::AlgebraSeries::zero(order);
                let mut dup = rows.clone();
                dup[1] = dup[0];
                r.check_series(&format!("repeated row {key}"), &y.minor_unreduced(&dup, &cols)?, &zero, order);
                let mut dup = cols.clone();
                dup[1] = dup[0];
                r.check_series(&format!("repeated column {key}"), &y.minor_unreduced(&rows, &dup)?, &zero, order);
            }
        }
    }
    Ok(r)
}

/// Minor identities, commutation with `T(u)`, the embedding, centrality of
/// `qdet` and, in `sl_n`, `qdet = 1`, the inverse-entry formula and the
/// starred-minor identities.
pub fn minors(cfg: &SuiteConfig) -> Result<VerificationReport, RttError> {
    let y = cfg.yangian()?;
    let n = cfg.n;
    let mut top = cfg.base("minors");
    top.push_child(minor_identities(&y)?);
    for m in 1..n {
        let lead: Vec<usize> = (1..=m).collect();
        for i in 1..=n {
            for j in 1..=n {
                top.push_child(y.minor_commutator_check(i, j, &lead, &lead)?);
            }
        }
        top.push_child(y.minor_embedding_check(m)?);
    }
    top.push_child(y.qdet_centrality(4.min(cfg.order as usize + 1)));
    if cfg.mode == QuotientMode::Sl {
        top.push_child(y.qdet_is_one());
        top.push_child(y.inverse_entry_check()?);
        top.push_child(y.star_minor_check()?);
    }
    Ok(top)
}

/// Both Gauss decompositions multiply back to `T(u)`.
pub fn gauss(cfg: &SuiteConfig) -> Result<VerificationReport, RttError> {
    let y = cfg.yangian()?;
    let order = y.order();
    let mut top = cfg.base("gauss");
    for variant in [GaussVariant::LowerDiagUpper, GaussVariant::UpperDiagLower] {
        let back = y.gauss_decompose(variant)?.reconstruct(&y);
        let mut r = VerificationReport::new(format!("reconstruct {variant:?}"));
        for i in 1..=y.n() {
            for j in 1..=y.n() {
                r.check_series(&format!("T{i}{j}"), back.entry(i, j), y.entry(i, j), order);
            }
        }
        top.push_child(r);
    }
    let short = y.gauss_upper_short_denominator()?.reconstruct(&y);
    if short.sub(y.t()).is_zero() {
        top.note("the complementary-minor denominator also reconstructs T(u)");
    } else {
        top.note("the complementary-minor denominator t(j+1..n) does not reconstruct T(u); t(j..n) is used");
    }
    Ok(top)
}

/// Drinfel'd relations of the current images, the `sl_n` relations of the
/// degree-zero modes, the root vectors and the three forms of `h_i(u)`.
pub fn drinfeld(cfg: &SuiteConfig) -> Result<VerificationReport, RttError> {
    let y = cfg.yangian()?;
    let order = y.order();
    let mut top = cfg.base("drinfeld");
    top.push_child(check_drinfeld_relations(&y)?);
    top.push_child(embedding_check(&y)?);
    let mut roots = VerificationReport::new("root vectors");
    for i in 1..=cfg.n {
        for j in 1..=cfg.n {
            if i != j {
                roots.check_eq(&format!("({i},{j})"), 1, &root_vector(&y, i, j)?, &y.generator(i, j, 1));
            }
        }
    }
    top.push_child(roots);
    let mut hv = VerificationReport::new("h variants");
    for i in 1..cfg.n {
        let [a, b, c] = h_variants(&y, i)?;
        hv.check_series(&format!("h{i} first form"), &b, &a, order);
        hv.check_series(&format!("h{i} second form"), &c, &a, order);
    }
    top.push_child(hv);
    Ok(top)
}

/// Hopf axioms for the pullback, minor images (with the antipode sign per
/// minor size), agreement of the two pullback routes and, for `n = 2`,
/// non-cocommutativity.
pub fn hopf_axioms(cfg: &SuiteConfig) -> Result<VerificationReport, RttError> {
    let y = cfg.yangian()?;
    let ctx = HopfContext::new(&y)?;
    let mut top = cfg.base("hopf-axioms");
    top.push_child(verify_hopf_axioms(&ctx));
    let (minor_report, signs) = minor_hopf_check(ctx.maps())?;
    top.push_child(minor_report);
    top.push_child(pullback_routes_agree(&ctx, &signs)?);
    if cfg.n == 2 && cfg.order >= 2 {
        top.push_child(cocommutativity_check(&ctx)?);
    }
    Ok(top)
}

fn theorem(cfg: &SuiteConfig, map: HopfMap) -> Result<VerificationReport, RttError> {
    let y = cfg.yangian()?;
    let ctx = HopfContext::new(&y)?;
    let name = match map {
        HopfMap::Delta => "theorem5",
        HopfMap::Antipode => "theorem6",
    };
    let mut top = cfg.base(name);
    for i in 1..cfg.n {
        for kind in [CurrentKind::E, CurrentKind::F, CurrentKind::H] {
            let d = ctx.diagnose(map, kind, i)?;
            let mut r = d.printed.report.clone();
            r.note(d.summary());
            top.note(d.summary());
            top.push_child(r);
        }
    }
    let (mut lemma, checks) = match map {
        HopfMap::Delta => ctx.check_lemma_quotients()?,
        HopfMap::Antipode => ctx.check_lemma_antipode()?,
    };
    let failing = checks.iter().filter(|c| !c.passed).count();
    lemma.note(format!("{} identities, {failing} differ", checks.len()));
    top.push_child(lemma);
    if map == HopfMap::Antipode {
        let mut eps = VerificationReport::new("counit");
        for i in 1..cfg.n {
            for kind in [CurrentKind::E, CurrentKind::F, CurrentKind::H] {
                eps.check_series(&format!("eps {kind}{i}"), &ctx.pullback_counit(kind, i), &ctx.counit_formula(kind), ctx.order());
            }
        }
        top.push_child(eps);
    }
    Ok(top)
}

/// The coproduct formulas against the pullback, with diagnoses, and the
/// quotient identities they rest on.
pub fn theorem5(cfg: &SuiteConfig) -> Result<VerificationReport, RttError> {
    theorem(cfg, HopfMap::Delta)
}

/// The antipode formulas against the pullback, with diagnoses, the
/// principal-ratio identities and the counit.
pub fn theorem6(cfg: &SuiteConfig) -> Result<VerificationReport, RttError> {
    theorem(cfg, HopfMap::Antipode)
}

/// The `sl_2` displays and the mutation scan of the power form of
/// `Delta(e)`.
pub fn sl2(cfg: &SuiteConfig) -> Result<VerificationReport, RttError> {
    let y = cfg.yangian()?;
    let ctx = HopfContext::new(&y)?;
    let mut top = cfg.base("sl2");
    for c in ctx.check_sl2_closed_forms()? {
        let mut r = c.report.report.clone();
        r.note(c.summary());
        top.note(c.summary());
        top.push_child(r);
    }
    let mut mutations = VerificationReport::new("mutation sensitivity");
    for m in ctx.mutation_scan(Sl2Form::DeltaEPowers)? {
        mutations.checks += 1;
        match m.first_failing_degree {
            Some(d) => mutations.note(format!("{} detected at u^-{d}", m.variant)),
            None => {
                mutations.fail();
                mutations.note(format!("{} NOT detected", m.variant));
            }
        }
    }
    top.push_child(mutations);
    Ok(top)
}

/// The `sl_3` coproduct displays and their `1 <-> 2` exchanges.
pub fn sl3(cfg: &SuiteConfig) -> Result<VerificationReport, RttError> {
    let y = cfg.yangian()?;
    let ctx = HopfContext::new(&y)?;
    let mut top = cfg.base("sl3");
    for c in ctx.check_sl3_closed_forms()? {
        let mut r = c.report.report.clone();
        r.note(c.summary());
        top.note(c.summary());
        top.push_child(r);
    }
    Ok(top)
}
