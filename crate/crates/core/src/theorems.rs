//! End-to-end verification of every result the library encodes.
//!
//! Each criterion is a deterministic function of a seed and returns a
//! [`CriterionReport`]. [`verify`] runs all of them and renders one line per
//! criterion; the same report drives the `verify` subcommand and the
//! acceptance test target.

use std::fmt::Write as _;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::checker::{check_congruence, classify, counting_summary, imbalances, Classification};
use crate::constructions::{gadget_inverse, heredity_embed, nbc_to_qnbc_gadget, verify_induced};
use crate::families::{self, Claim};
use crate::graph::{Color, Coloring, Graph};
use crate::products::{self, layer_pair, JoinMode, LexMode, Lift, ProductKind};
use crate::sample;
use crate::solver::{enumerate, oracle, solve, VariantMode};

pub const DEFAULT_SEED: u64 = 0x917B_C0DE;

/// Deliberate faults used to confirm the harness can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Mutation {
    /// Check `4·cross = 2|E| − r + s` instead of `2|E| + r − s`.
    FlipCountingSign,
    /// Color `P_n`, `n ≡ 0 (mod 4)`, with the `n ≡ 2, 3` pattern.
    BreakPathCase2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyConfig {
    pub seed: u64,
    pub mutation: Option<Mutation>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            seed: DEFAULT_SEED,
            mutation: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CriterionReport {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    /// Number of individual instances checked.
    pub checked: u64,
    pub detail: String,
    pub counterexample: Option<String>,
}

impl CriterionReport {
    pub fn line(&self) -> String {
        let mut s = format!(
            "[{}] {:>2} {:<22} checked={} {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checked,
            self.detail
        );
        if let Some(cx) = &self.counterexample {
            let _ = write!(s, " counterexample: {cx}");
        }
        s
    }
}

/// Tally that keeps the first failure.
struct Tally {
    checked: u64,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn finish(self, id: u8, name: &'static str, detail: impl Into<String>) -> CriterionReport {
        CriterionReport {
            id,
            name,
            passed: self.failure.is_none(),
            checked: self.checked,
            detail: detail.into(),
            counterexample: self.failure,
        }
    }
}

fn rng_for(cfg: &VerifyConfig, id: u8) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed ^ (u64::from(id) << 56))
}

fn describe(g: &Graph) -> String {
    let edges: Vec<String> = g
        .edges()
        .iter()
        .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
        .collect();
    format!("n={} edges=[{}]", g.n(), edges.join(","))
}

/// Criterion 1: search agrees with the exhaustive sweep.
pub fn oracle_agreement(cfg: &VerifyConfig) -> CriterionReport {
    let mut rng = rng_for(cfg, 1);
    let mut t = Tally::new();
    let check_graph = |g: &Graph, t: &mut Tally| {
        for mode in VariantMode::CORE {
            let fast = solve(g, mode);
            let slow = oracle(g, mode).expect("small graph");
            let witness_ok = fast
                .witness
                .as_ref()
                .is_none_or(|w| mode.accepts(&classify(g, w).expect("length")));
            t.check(fast.verdict == slow.verdict && witness_ok, || {
                format!(
                    "{} mode={mode} solve={:?} oracle={:?}",
                    describe(g),
                    fast.verdict,
                    slow.verdict
                )
            });
        }
    };
    for g in sample::labeled_graphs(5) {
        check_graph(&g, &mut t);
    }
    for _ in 0..500 {
        let n = rng.gen_range(6..=12);
        let g = sample::gnp(&mut rng, n, 0.5);
        check_graph(&g, &mut t);
    }
    t.finish(
        1,
        "oracle-agreement",
        "1024 graphs n=5 + 500 G(n,0.5) 6<=n<=12, 5 modes",
    )
}

/// Criterion 2: complete graphs.
pub fn complete_graph_theorem(_cfg: &VerifyConfig) -> CriterionReport {
    let mut t = Tally::new();
    for n in 1..=12 {
        let g = Graph::complete(n);
        let neg = solve(&g, VariantMode::Negative).satisfiable();
        t.check(neg == (n % 2 == 0), || format!("K_{n} negative={neg}"));
        if n % 2 == 1 {
            let any = solve(&g, VariantMode::AnyQnbc).satisfiable();
            t.check(!any, || format!("K_{n} any={any}"));
        }
        let fam = families::complete(n).expect("n >= 1");
        t.check(family_confirmed(&fam), || {
            format!("family K_{n} claim {}", fam.claim)
        });
    }
    t.finish(2, "complete-graphs", "1<=n<=12")
}

fn family_confirmed(fr: &families::FamilyResult) -> bool {
    match &fr.coloring {
        Some(c) => fr
            .claim
            .confirmed_by(&classify(&fr.graph, c).expect("length")),
        None => fr.claim == Claim::NotQnbc,
    }
}

/// Criterion 3: complete bipartite graphs.
pub fn complete_bipartite_theorem(_cfg: &VerifyConfig) -> CriterionReport {
    let mut t = Tally::new();
    for m in 1..=8 {
        for n in 1..=8 {
            let fam = families::complete_bipartite(m, n).expect("positive parts");
            let sat = solve(&fam.graph, VariantMode::Uniform(None)).satisfiable();
            let expect = m % 2 == 1 || n % 2 == 1;
            t.check(sat == expect, || format!("K_{{{m},{n}}} uniform={sat}"));
            t.check(
                family_confirmed(&fam) && fam.coloring.is_some() == expect,
                || format!("family K_{{{m},{n}}} claim {}", fam.claim),
            );
        }
    }
    t.finish(3, "complete-bipartite", "1<=m,n<=8")
}

fn path_coloring(n: usize, mutation: Option<Mutation>) -> Coloring {
    let fam = families::path(n).expect("n >= 2");
    let c = fam.coloring.expect("paths are always colored");
    if mutation == Some(Mutation::BreakPathCase2) && n % 4 == 0 {
        (1..=n)
            .map(|i| {
                if matches!(i % 4, 1 | 2) {
                    Color::Red
                } else {
                    Color::Blue
                }
            })
            .collect()
    } else {
        c
    }
}

/// Criterion 4: paths.
pub fn path_theorem(cfg: &VerifyConfig) -> CriterionReport {
    let mut t = Tally::new();
    let fixtures = [(5, "RRBBR"), (6, "RRBBRR"), (8, "RBBRRBBR")];
    for (n, want) in fixtures {
        let got = path_coloring(n, cfg.mutation).to_string();
        t.check(got == want, || {
            format!("P_{n} coloring {got}, expected {want}")
        });
    }
    for n in 2..=24 {
        let g = Graph::path(n);
        let class = classify(&g, &path_coloring(n, cfg.mutation)).expect("length");
        let uniform_expected = n % 4 != 1;
        t.check(
            class.is_qnbc() && class.uniform_dominant.is_some() == uniform_expected,
            || format!("P_{n} family coloring classified {class}"),
        );
        let sat = solve(&g, VariantMode::Uniform(None)).satisfiable();
        t.check(sat == uniform_expected, || {
            format!("P_{n} solve uniform={sat}")
        });
    }
    t.finish(4, "paths", "2<=n<=24, fixtures P5 P6 P8")
}

/// Criterion 5: generalized Petersen graphs.
pub fn petersen_theorem(_cfg: &VerifyConfig) -> CriterionReport {
    let mut t = Tally::new();
    for n in 3..=20 {
        for d in 1..=(n - 1) / 2 {
            let fam = families::generalized_petersen(n, d).expect("in range");
            let class =
                classify(&fam.graph, fam.coloring.as_ref().expect("colored")).expect("length");
            t.check(class.is_qnbc() && class.positive, || {
                format!("GP({n},{d}) classified {class}")
            });
        }
    }
    let fam = families::generalized_petersen(5, 1).expect("in range");
    let c = fam.coloring.as_ref().expect("colored");
    let imb = imbalances(&fam.graph, c).expect("length");
    let class = classify(&fam.graph, c).expect("length");
    t.check(
        class.positive && imb[..5].iter().all(|&x| x == 1) && imb[5..].iter().all(|&x| x == -1),
        || format!("GP(5,1) fixture classified {class}, imbalances {imb:?}"),
    );
    t.finish(
        5,
        "generalized-petersen",
        "3<=n<=20, 1<=d<=(n-1)/2, fixture GP(5,1)",
    )
}

/// Criterion 6: bistars.
pub fn bistar_theorem(_cfg: &VerifyConfig) -> CriterionReport {
    let mut t = Tally::new();
    for m in 1..=10 {
        for n in 1..=10 {
            let fam = families::bistar(m, n).expect("positive");
            let class =
                classify(&fam.graph, fam.coloring.as_ref().expect("colored")).expect("length");
            t.check(
                class.is_qnbc() && class.uniform_dominant == Some(Color::Red),
                || format!("B({m},{n}) classified {class}"),
            );
        }
    }
    let fam = families::bistar(5, 6).expect("positive");
    let c = fam.coloring.as_ref().expect("colored").colors().to_vec();
    let count = |s: &[Color], col: Color| s.iter().filter(|&&x| x == col).count();
    let ok = c[0] == Color::Red
        && c[1] == Color::Red
        && (count(&c[2..7], Color::Red), count(&c[2..7], Color::Blue)) == (2, 3)
        && (count(&c[7..13], Color::Red), count(&c[7..13], Color::Blue)) == (3, 3);
    t.check(ok, || {
        format!("B(5,6) coloring {}", fam.coloring.as_ref().unwrap())
    });
    t.finish(6, "bistars", "1<=m,n<=10, fixture B(5,6)")
}

/// Every QNBC pair among all labeled graphs with `n <= max_n`.
fn qnbc_sweep(max_n: usize, mut visit: impl FnMut(&Graph, &Coloring, &Classification)) {
    for n in 1..=max_n {
        for g in sample::labeled_graphs(n) {
            for mask in 0..1u64 << n {
                let c = Coloring::from_mask(n, mask);
                let class = classify(&g, &c).expect("length");
                if class.is_qnbc() {
                    visit(&g, &c, &class);
                }
            }
        }
    }
}

/// Criterion 7: counting identity, plus the sign-flipped form failing on K2.
pub fn counting_identity(cfg: &VerifyConfig) -> CriterionReport {
    let flipped = cfg.mutation == Some(Mutation::FlipCountingSign);
    let holds = |s: &crate::checker::CountingSummary| {
        if flipped {
            s.flipped_identity_holds()
        } else {
            s.identity_holds()
        }
    };
    let mut t = Tally::new();
    // K2 colored RB first, so a sign error is reported there.
    let k2 = Graph::complete(2);
    let rb = Coloring::new(vec![Color::Red, Color::Blue]);
    let k2s = counting_summary(&k2, &rb).expect("K2 RB is QNBC");
    t.check(holds(&k2s), || {
        format!(
            "K2 RB: r={} s={} cross={} |E|=1",
            k2s.r, k2s.s, k2s.cross_edges
        )
    });
    qnbc_sweep(5, |g, c, _| {
        let s = counting_summary(g, c).expect("QNBC");
        t.check(holds(&s) && s.r + s.s == s.k, || {
            format!(
                "{} coloring {c}: r={} s={} cross={}",
                describe(g),
                s.r,
                s.s,
                s.cross_edges
            )
        });
    });
    // The printed sign must be shown to fail on K2 RB.
    t.check(!k2s.flipped_identity_holds(), || {
        "sign-flipped identity unexpectedly holds on K2 RB".into()
    });
    t.finish(
        7,
        "counting-identity",
        format!(
            "4*cross = 2|E| + r - s over all QNBC pairs n<=5; (2|E|-r+s)/4 on K2 RB = {} != 1",
            k2s.flipped_predicted_cross_edges()
        ),
    )
}

/// Criterion 8: mod-4 congruence for positive and negative colorings.
pub fn congruence_theorem(_cfg: &VerifyConfig) -> CriterionReport {
    let mut t = Tally::new();
    qnbc_sweep(5, |g, c, class| {
        if class.positive || class.negative {
            let rep = check_congruence(g, c).expect("QNBC");
            t.check(rep.ok() && rep.twice_edges_mod4 == rep.k_mod4, || {
                format!(
                    "{} coloring {c}: 2|E| mod 4 = {}, k mod 4 = {}",
                    describe(g),
                    rep.twice_edges_mod4,
                    rep.k_mod4
                )
            });
        }
    });
    t.finish(
        8,
        "congruence",
        "2|E| = k (mod 4) for positive/negative pairs n<=5",
    )
}

/// Colorings of `g` accepted by `keep`, from a full sweep.
fn colorings_where(g: &Graph, keep: impl Fn(&Coloring, &Classification) -> bool) -> Vec<Coloring> {
    (0..1u64 << g.n())
        .map(|m| Coloring::from_mask(g.n(), m))
        .filter(|c| keep(c, &classify(g, c).expect("length")))
        .collect()
}

/// Draws random graphs until one has a coloring accepted by `keep`.
fn draw(
    rng: &mut ChaCha8Rng,
    sizes: std::ops::RangeInclusive<usize>,
    even_degrees: bool,
    keep: impl Fn(&Coloring, &Classification) -> bool,
) -> (Graph, Coloring) {
    loop {
        let n = rng.gen_range(sizes.clone());
        let p = [0.3, 0.5, 0.7][rng.gen_range(0..3)];
        let g = if even_degrees {
            sample::even_degree_gnp(rng, n, p)
        } else {
            sample::gnp(rng, n, p)
        };
        let pool = colorings_where(&g, &keep);
        if let Some(c) = pool.choose(rng) {
            return (g, c.clone());
        }
    }
}

fn red_count_diff(c: &Coloring) -> i64 {
    c.count(Color::Red) as i64 - c.count(Color::Blue) as i64
}

/// Rows of lexicographic lifts carry `h`; columns of the other
/// vertex-pair lifts carry `g` or its complement per `h(v)`.
fn layers_consistent(
    kind: ProductKind,
    lift: &Lift,
    g_col: Option<&Coloring>,
    h_col: &Coloring,
    lex_balanced: bool,
) -> bool {
    let hn = h_col.len();
    lift.coloring.colors().iter().enumerate().all(|(idx, &c)| {
        let (u, v) = layer_pair(idx, hn);
        match (kind, g_col) {
            (ProductKind::Lexicographic, _) if lex_balanced => c == h_col[v],
            (_, Some(g)) => {
                let base = g[u];
                c == if h_col[v] == Color::Red {
                    base
                } else {
                    base.flip()
                }
            }
            _ => false,
        }
    })
}

/// Criterion 9: product lifts.
pub fn product_lifts(cfg: &VerifyConfig) -> CriterionReport {
    let mut rng = rng_for(cfg, 9);
    let mut t = Tally::new();
    const PER_MODE: usize = 100;
    let qnbc = |_: &Coloring, k: &Classification| k.is_qnbc();
    let nbc = |_: &Coloring, k: &Classification| k.is_nbc();
    let balanced_qnbc = |c: &Coloring, k: &Classification| k.is_qnbc() && red_count_diff(c) == 0;
    let balanced_nbc = |c: &Coloring, k: &Classification| k.is_nbc() && red_count_diff(c) == 0;

    let run = |label: &str,
               t: &mut Tally,
               rng: &mut ChaCha8Rng,
               build: &dyn Fn(&mut ChaCha8Rng) -> (Lift, bool, String)| {
        for _ in 0..PER_MODE {
            let (lift, layers_ok, inputs) = build(rng);
            let class = classify(&lift.graph, &lift.coloring).expect("length");
            t.check(lift.promise.holds(&class) && layers_ok, || {
                format!("{label}: {inputs} promised {} got {class}", lift.promise)
            });
        }
    };

    run("lex-i", &mut t, &mut rng, &|rng| {
        let (g, _) = draw(rng, 1..=4, false, |_, _| true);
        let (h, hc) = draw(rng, 2..=6, false, balanced_qnbc);
        let l = products::lift_lexicographic(&g, None, &h, &hc, LexMode::Balanced)
            .expect("hypotheses hold");
        let ok = layers_consistent(ProductKind::Lexicographic, &l, None, &hc, true);
        (
            l,
            ok,
            format!("G {} H {} h={hc}", describe(&g), describe(&h)),
        )
    });
    run("lex-ii", &mut t, &mut rng, &|rng| {
        let (g, gc) = draw(rng, 1..=5, true, nbc);
        let (h, hc) = draw(rng, 2..=5, false, qnbc);
        let l = products::lift_lexicographic(&g, Some(&gc), &h, &hc, LexMode::NbcBase)
            .expect("hypotheses hold");
        let ok = layers_consistent(ProductKind::Lexicographic, &l, Some(&gc), &hc, false);
        (
            l,
            ok,
            format!("G {} g={gc} H {} h={hc}", describe(&g), describe(&h)),
        )
    });
    run("direct-nbc", &mut t, &mut rng, &|rng| {
        let (g, gc) = draw(rng, 2..=6, false, qnbc);
        let (h, hc) = draw(rng, 1..=5, true, nbc);
        let l = products::lift_direct(&g, &gc, &h, &hc).expect("hypotheses hold");
        let ok = layers_consistent(ProductKind::Direct, &l, Some(&gc), &hc, false);
        (
            l,
            ok,
            format!("G {} g={gc} H {} h={hc}", describe(&g), describe(&h)),
        )
    });
    run("direct-qnbc", &mut t, &mut rng, &|rng| {
        let (g, gc) = draw(rng, 2..=6, false, qnbc);
        let (h, hc) = draw(rng, 2..=6, false, qnbc);
        let l = products::lift_direct(&g, &gc, &h, &hc).expect("hypotheses hold");
        let ok = layers_consistent(ProductKind::Direct, &l, Some(&gc), &hc, false);
        (
            l,
            ok,
            format!("G {} g={gc} H {} h={hc}", describe(&g), describe(&h)),
        )
    });
    let over_nbc: [(&str, ProductKind, fn(&Classification) -> bool); 4] = [
        ("cartesian-plain", ProductKind::Cartesian, |k| k.is_qnbc()),
        ("cartesian-positive", ProductKind::Cartesian, |k| {
            k.is_qnbc() && k.positive
        }),
        ("cartesian-negative", ProductKind::Cartesian, |k| {
            k.is_qnbc() && k.negative
        }),
        ("strong", ProductKind::Strong, |k| k.is_qnbc()),
    ];
    for (label, kind, want) in over_nbc {
        run(label, &mut t, &mut rng, &|rng| {
            let (g, gc) = draw(rng, 2..=6, false, |_, k| want(k));
            let (h, hc) = draw(rng, 1..=5, true, nbc);
            let l = match kind {
                ProductKind::Cartesian => products::lift_cartesian(&g, &gc, &h, &hc),
                _ => products::lift_strong(&g, &gc, &h, &hc),
            }
            .expect("hypotheses hold");
            let ok = layers_consistent(kind, &l, Some(&gc), &hc, false);
            let variant_ok = match label {
                "cartesian-positive" => l.promise.positive,
                "cartesian-negative" => l.promise.negative,
                _ => true,
            };
            (
                l,
                ok && variant_ok,
                format!("G {} g={gc} H {} h={hc}", describe(&g), describe(&h)),
            )
        });
    }
    type Pick = fn(&Coloring, &Classification) -> bool;
    let join_modes: [(&str, JoinMode, Pick, Pick); 3] = [
        ("join-a", JoinMode::A, balanced_qnbc, balanced_qnbc),
        (
            "join-b",
            JoinMode::B,
            |c, k| k.is_nbc() && red_count_diff(c) == 1,
            balanced_nbc,
        ),
        (
            "join-c",
            JoinMode::C,
            |c, k| k.is_qnbc() && red_count_diff(c) == 1,
            balanced_nbc,
        ),
    ];
    for (label, mode, pick_g, pick_h) in join_modes {
        let g_even = mode == JoinMode::B;
        let h_even = mode != JoinMode::A;
        run(label, &mut t, &mut rng, &|rng| {
            let (g, gc) = draw(rng, 1..=6, g_even, pick_g);
            let (h, hc) = draw(rng, 2..=6, h_even, pick_h);
            let l = products::lift_join(&g, &gc, &h, &hc, mode).expect("hypotheses hold");
            (
                l,
                true,
                format!("G {} g={gc} H {} h={hc}", describe(&g), describe(&h)),
            )
        });
    }
    run("join-positive", &mut t, &mut rng, &|rng| {
        let pick =
            |c: &Coloring, k: &Classification| k.is_qnbc() && k.positive && red_count_diff(c) == 0;
        let (g, gc) = draw(rng, 2..=6, false, pick);
        let (h, hc) = draw(rng, 2..=6, false, pick);
        let l = products::lift_join(&g, &gc, &h, &hc, JoinMode::Positive).expect("hypotheses hold");
        let ok = l.promise.positive;
        (
            l,
            ok,
            format!("G {} g={gc} H {} h={hc}", describe(&g), describe(&h)),
        )
    });
    run("join-negative", &mut t, &mut rng, &|rng| {
        let pick =
            |c: &Coloring, k: &Classification| k.is_qnbc() && k.negative && red_count_diff(c) == 0;
        let (g, gc) = draw(rng, 2..=6, false, pick);
        let (h, hc) = draw(rng, 2..=6, false, pick);
        let l = products::lift_join(&g, &gc, &h, &hc, JoinMode::Negative).expect("hypotheses hold");
        let ok = l.promise.negative;
        (
            l,
            ok,
            format!("G {} g={gc} H {} h={hc}", describe(&g), describe(&h)),
        )
    });
    run("join-uniform", &mut t, &mut rng, &|rng| {
        let dominant = if rng.gen_bool(0.5) {
            Color::Red
        } else {
            Color::Blue
        };
        let pick = move |c: &Coloring, k: &Classification| {
            k.is_qnbc() && k.uniform_dominant == Some(dominant) && red_count_diff(c) == 0
        };
        let (g, gc) = draw(rng, 2..=6, false, pick);
        let (h, hc) = draw(rng, 2..=6, false, pick);
        let l = products::lift_join(&g, &gc, &h, &hc, JoinMode::Uniform).expect("hypotheses hold");
        let ok = l.promise.uniform == Some(dominant);
        (
            l,
            ok,
            format!("G {} g={gc} H {} h={hc}", describe(&g), describe(&h)),
        )
    });
    t.finish(
        9,
        "product-lifts",
        format!("{PER_MODE} seeded instances x 14 lift modes"),
    )
}

/// Criterion 10: every graph embeds in a QNBC graph.
pub fn heredity_embedding(cfg: &VerifyConfig) -> CriterionReport {
    let mut rng = rng_for(cfg, 10);
    let mut t = Tally::new();
    let (mut edgeless, mut disconnected) = (0, 0);
    for i in 0..200 {
        let n = rng.gen_range(1..=12);
        let p = if i % 10 == 0 {
            0.0
        } else {
            [0.1, 0.3, 0.5, 0.8][rng.gen_range(0..4)]
        };
        let g = sample::gnp(&mut rng, n, p);
        if g.edge_count() == 0 {
            edgeless += 1;
        }
        if !connected(&g) {
            disconnected += 1;
        }
        let e = heredity_embed(&g).expect("n >= 1");
        let class = classify(&e.host, &e.host_coloring).expect("length");
        let induced = verify_induced(&g, &e.host, &e.embedding).expect("well-formed map");
        t.check(
            class.is_qnbc() && class.uniform_dominant == Some(Color::Blue) && induced,
            || {
                format!(
                    "{} host classified {class}, induced={induced}",
                    describe(&g)
                )
            },
        );
    }
    t.finish(
        10,
        "heredity-embedding",
        format!("200 graphs n<=12 ({edgeless} edgeless, {disconnected} disconnected)"),
    )
}

fn connected(g: &Graph) -> bool {
    if g.n() == 0 {
        return true;
    }
    let mut seen = vec![false; g.n()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in g.neighbors(v) {
            if !std::mem::replace(&mut seen[w], true) {
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Criterion 11: gadget and its inverse.
pub fn gadget_round_trip(cfg: &VerifyConfig) -> CriterionReport {
    let mut rng = rng_for(cfg, 11);
    let mut t = Tally::new();
    let mut draws = 0u64;
    let mut found = 0;
    while found < 100 {
        draws += 1;
        let n = rng.gen_range(3..=10);
        let g = sample::even_degree_gnp(&mut rng, n, 0.5);
        if g.edge_count() == 0 {
            continue;
        }
        let Some(c) = solve(&g, VariantMode::Nbc).witness else {
            continue;
        };
        found += 1;
        let bichromatic: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| c[u] != c[v])
            .collect();
        let edge = if rng.gen_bool(0.5) {
            None
        } else {
            bichromatic.choose(&mut rng).copied()
        };
        let gr = nbc_to_qnbc_gadget(&g, &c, edge).expect("NBC input");
        let (a, b) = gr.anchor_edge;
        let class = classify(&gr.gprime, &gr.gprime_coloring).expect("length");
        let imb = imbalances(&gr.gprime, &gr.gprime_coloring).expect("length");
        let odd: Vec<usize> = gr
            .gprime
            .vertices()
            .filter(|&v| gr.gprime.degree(v) % 2 == 1)
            .collect();
        let shape_ok = class.is_qnbc()
            && odd == [a, b]
            && imb[a] == 1
            && imb[b] == 1
            && gr.gprime.degree(gr.added_vertex) == 2;
        let back = gadget_inverse(&gr);
        let round_trip = back.as_ref().is_ok_and(|(g2, c2)| *g2 == g && *c2 == c);
        t.check(shape_ok && round_trip, || {
            format!(
                "{} coloring {c} edge {:?}: gadget {class}, inverse {:?}",
                describe(&g),
                (a + 1, b + 1),
                back.err()
            )
        });
    }
    t.finish(
        11,
        "gadget-round-trip",
        format!("100 NBC instances from {draws} draws"),
    )
}

pub type CriterionFn = fn(&VerifyConfig) -> CriterionReport;

pub const CRITERIA: [CriterionFn; 11] = [
    oracle_agreement,
    complete_graph_theorem,
    complete_bipartite_theorem,
    path_theorem,
    petersen_theorem,
    bistar_theorem,
    counting_identity,
    congruence_theorem,
    product_lifts,
    heredity_embedding,
    gadget_round_trip,
];

pub fn render(reports: &[CriterionReport]) -> String {
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.line());
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub criteria: Vec<CriterionReport>,
    pub claims: Vec<ClaimCheck>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = render(&self.criteria);
        if !self.claims.is_empty() {
            out.push_str("variant and converse claims checked on small instances:\n");
            for c in &self.claims {
                out.push_str(&c.line());
                out.push('\n');
            }
        }
        out
    }
}

/// Runs criteria 1 to 11, then repeats them to confirm the rendered report
/// is byte-identical (criterion 12).
pub fn verify(cfg: &VerifyConfig) -> VerifyReport {
    let first: Vec<CriterionReport> = CRITERIA.iter().map(|f| f(cfg)).collect();
    let second: Vec<CriterionReport> = CRITERIA.iter().map(|f| f(cfg)).collect();
    let (a, b) = (render(&first), render(&second));
    let mismatch = a
        .lines()
        .zip(b.lines())
        .find(|(x, y)| x != y)
        .map(|(x, y)| format!("first run `{x}` vs second run `{y}`"));
    let mut criteria = first;
    criteria.push(CriterionReport {
        id: 12,
        name: "determinism",
        passed: a == b,
        checked: 1,
        detail: format!(
            "criteria 1-11 rerun with seed {:#x}, {} bytes compared",
            cfg.seed,
            a.len()
        ),
        counterexample: mismatch,
    });
    VerifyReport {
        criteria,
        claims: claim_checks(cfg.seed),
    }
}

/// Outcome of testing a variant-preservation claim that has no proof.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub claim: &'static str,
    pub holds: bool,
    pub evidence: String,
}

impl ClaimCheck {
    pub fn line(&self) -> String {
        format!(
            "[{}] {} :: {}",
            if self.holds { "HOLDS" } else { "REFUTED" },
            self.claim,
            self.evidence
        )
    }
}

/// Checks variant-preservation claims on small counterexample candidates,
/// and the converse direction of the gadget over every QNBC coloring of 100
/// random gadget graphs.
pub fn claim_checks(seed: u64) -> Vec<ClaimCheck> {
    let k2 = Graph::complete(2);
    let c4 = Graph::cycle(4).expect("n >= 3");
    let rb = Coloring::parse("RB").expect("literal");
    let rr = Coloring::parse("RR").expect("literal");
    let rrbb = Coloring::parse("RRBB").expect("literal");
    let classify_lift = |l: &Lift| classify(&l.graph, &l.coloring).expect("length");

    let mut out = Vec::new();

    let l = products::lift_direct(&k2, &rb, &k2, &rb).expect("hypotheses hold");
    let class = classify_lift(&l);
    out.push(ClaimCheck {
        claim: "direct product of two negative colorings is negative",
        holds: class.negative,
        evidence: format!(
            "K2 RB x K2 RB lifts to {} colored {} ({class})",
            describe(&l.graph),
            l.coloring
        ),
    });

    let l = products::lift_direct(&k2, &rr, &k2, &rr).expect("hypotheses hold");
    out.push(ClaimCheck {
        claim: "direct product of two positive colorings is positive",
        holds: classify_lift(&l).positive,
        evidence: format!("K2 RR x K2 RR: {}", classify_lift(&l)),
    });

    let l = products::lift_lexicographic(&c4, Some(&rrbb), &k2, &rr, LexMode::NbcBase)
        .expect("hypotheses hold");
    let class = classify_lift(&l);
    out.push(ClaimCheck {
        claim: "lexicographic lift over an NBC base preserves uniform",
        holds: class.uniform_dominant.is_some(),
        evidence: format!(
            "C4 RRBB [K2 RR] (uniform red): lift colored {} is {class}",
            l.coloring
        ),
    });

    let l = products::lift_strong(&k2, &rr, &c4, &rrbb).expect("hypotheses hold");
    let class = classify_lift(&l);
    out.push(ClaimCheck {
        claim: "strong lift preserves uniform",
        holds: class.uniform_dominant.is_some(),
        evidence: format!(
            "K2 RR (uniform red) x C4 RRBB: lift colored {} is {class}",
            l.coloring
        ),
    });

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xC0);
    let (mut instances, mut colorings) = (0, 0);
    let mut bad = None;
    while instances < 100 {
        let n = rng.gen_range(3..=9);
        let g = sample::even_degree_gnp(&mut rng, n, 0.5);
        let Some(c) = solve(&g, VariantMode::Nbc)
            .witness
            .filter(|_| g.edge_count() > 0)
        else {
            continue;
        };
        instances += 1;
        let gr = nbc_to_qnbc_gadget(&g, &c, None).expect("NBC input");
        let restored = gr.gprime.truncate(gr.added_vertex);
        for q in enumerate(&gr.gprime, VariantMode::AnyQnbc, usize::MAX) {
            colorings += 1;
            let rc: Coloring = q.colors()[..gr.added_vertex].iter().copied().collect();
            if bad.is_none() && !classify(&restored, &rc).expect("length").is_nbc() {
                bad = Some(format!("{} gadget coloring {q}", describe(&gr.gprime)));
            }
        }
    }
    out.push(ClaimCheck {
        claim: "every QNBC coloring of the gadget graph restricts to an NBC coloring",
        holds: bad.is_none(),
        evidence: match bad {
            Some(cx) => format!("{instances} gadgets, {colorings} QNBC colorings; {cx} restricts to a non-NBC coloring"),
            None => format!("{instances} gadgets, all {colorings} QNBC colorings restrict to NBC"),
        },
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_flip_mutation_fails_on_k2() {
        let cfg = VerifyConfig {
            mutation: Some(Mutation::FlipCountingSign),
            ..Default::default()
        };
        let rep = counting_identity(&cfg);
        assert!(!rep.passed);
        assert!(rep.counterexample.unwrap().starts_with("K2 RB"));
    }

    #[test]
    fn broken_path_case2_fails_at_8() {
        let cfg = VerifyConfig {
            mutation: Some(Mutation::BreakPathCase2),
            ..Default::default()
        };
        let rep = path_theorem(&cfg);
        assert!(!rep.passed);
        assert!(rep.counterexample.unwrap().starts_with("P_8 "));
    }

    #[test]
    fn claims_report() {
        let claims = claim_checks(DEFAULT_SEED);
        let find = |s: &str| claims.iter().find(|c| c.claim.contains(s)).unwrap();
        assert!(!find("two negative").holds);
        assert!(find("two positive").holds);
        assert!(!find("NBC base preserves uniform").holds);
        assert!(!find("strong lift").holds);
    }
}
