//! Shared helpers for the integration tests: seeded random programs, an
//! independent stable-model solver for plain extended programs, and a
//! naive pairwise minimality check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use lpod_core::eval::is_model;
use lpod_core::{Interpretation3, Literal, Program, Rule, Truth3};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Bounds for a random program.
#[derive(Clone, Copy, Debug)]
pub struct Shape {
    pub atoms: usize,
    pub strong_negation: bool,
    pub rules: usize,
    /// Longest ordered disjunction.
    pub levels: usize,
    /// Widest classical disjunction within a level.
    pub width: usize,
    pub body: usize,
}

/// LPODs: up to three atoms with optional strong negations, four rules,
/// heads of length three and bodies of two literals.
pub const LPOD: Shape = Shape {
    atoms: 3,
    strong_negation: true,
    rules: 4,
    levels: 3,
    width: 1,
    body: 2,
};

/// Disjunctive LPODs: three atoms, three rules, two levels of width two.
pub const DLPOD: Shape = Shape {
    atoms: 3,
    strong_negation: true,
    rules: 3,
    levels: 2,
    width: 2,
    body: 2,
};

/// Programs without ordered disjunction.
pub const PLAIN: Shape = Shape {
    atoms: 3,
    strong_negation: true,
    rules: 4,
    levels: 1,
    width: 1,
    body: 2,
};

/// Literal pools of at most three literals, for exhaustive checks.
pub const SMALL_LPOD: Shape = Shape {
    atoms: 3,
    strong_negation: false,
    rules: 4,
    levels: 3,
    width: 1,
    body: 2,
};
pub const SMALL_DLPOD: Shape = Shape {
    atoms: 3,
    strong_negation: false,
    rules: 3,
    levels: 2,
    width: 2,
    body: 2,
};

const ATOMS: [&str; 3] = ["a", "b", "c"];

fn pool(rng: &mut ChaCha8Rng, shape: &Shape) -> Vec<Literal> {
    let atoms = rng.gen_range(1..=shape.atoms);
    let mut pool = Vec::new();
    for atom in &ATOMS[..atoms] {
        pool.push(Literal::pos(*atom));
        if shape.strong_negation && rng.gen_bool(0.5) {
            pool.push(Literal::neg(*atom));
        }
    }
    pool
}

pub fn random_program(rng: &mut ChaCha8Rng, shape: &Shape) -> Program {
    let pool = pool(rng, shape);
    let rules = (0..rng.gen_range(1..=shape.rules))
        .map(|_| {
            let levels = rng.gen_range(1..=shape.levels);
            let head = (0..levels)
                .map(|_| {
                    let width = rng.gen_range(1..=shape.width.min(pool.len()));
                    pool.choose_multiple(rng, width).cloned().collect()
                })
                .collect();
            let (mut pos, mut neg) = (Vec::new(), Vec::new());
            for _ in 0..rng.gen_range(0..=shape.body) {
                let lit = pool.choose(rng).unwrap().clone();
                if rng.gen_bool(0.5) {
                    pos.push(lit);
                } else {
                    neg.push(lit);
                }
            }
            Rule::new(head, pos, neg).unwrap()
        })
        .collect();
    Program::new(rules)
}

/// `count` programs drawn from consecutive seeds starting at `seed`.
pub fn batch(seed: u64, count: usize, shape: &Shape) -> Vec<Program> {
    (0..count as u64)
        .map(|i| random_program(&mut rng(seed + i), shape))
        .collect()
}

/// Stable models of a program whose heads are single literals, computed
/// directly from the Gelfond–Lifschitz reduct over sets of literal names.
/// Only consistent sets are returned.
pub fn gelfond_lifschitz(program: &Program) -> BTreeSet<BTreeSet<String>> {
    struct Plain {
        head: String,
        pos: Vec<String>,
        neg: Vec<String>,
    }
    let names = |ls: &[Literal]| ls.iter().map(|l| l.to_string()).collect::<Vec<_>>();
    let rules: Vec<Plain> = program
        .rules()
        .iter()
        .map(|r| {
            assert!(
                r.head().len() == 1 && r.head()[0].len() == 1,
                "not a plain rule"
            );
            Plain {
                head: r.head()[0][0].to_string(),
                pos: names(r.body_pos()),
                neg: names(r.body_neg()),
            }
        })
        .collect();
    let mut universe: Vec<String> = Vec::new();
    for r in &rules {
        for l in std::iter::once(&r.head).chain(&r.pos).chain(&r.neg) {
            if !universe.contains(l) {
                universe.push(l.clone());
            }
        }
    }

    let mut stable = BTreeSet::new();
    for mask in 0u32..1 << universe.len() {
        let guess: BTreeSet<String> = universe
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, l)| l.clone())
            .collect();
        let consistent = guess.iter().all(|l| !guess.contains(&format!("-{l}")));
        if !consistent {
            continue;
        }
        let reduct: Vec<&Plain> = rules
            .iter()
            .filter(|r| r.neg.iter().all(|b| !guess.contains(b)))
            .collect();
        let mut derived = BTreeSet::new();
        loop {
            let before = derived.len();
            for r in &reduct {
                if r.pos.iter().all(|a| derived.contains(a)) {
                    derived.insert(r.head.clone());
                }
            }
            if derived.len() == before {
                break;
            }
        }
        if derived == guess {
            stable.insert(guess);
        }
    }
    stable
}

/// `u ⪯ v` on three values, written out from its definition: `F` lies
/// below everything, otherwise only equal values are related.
pub fn below3(u: Truth3, v: Truth3) -> bool {
    u == v || u == Truth3::F
}

/// All three-valued models of `program`, listed by brute force.
pub fn three_valued_models(program: &Program) -> Vec<Interpretation3> {
    let n = program.sigma().len() as u32;
    (0..3u64.pow(n))
        .map(|i| Interpretation3::from_index(program.sigma().clone(), i))
        .filter(|m| is_model(m, program).unwrap())
        .collect()
}

/// Models with no other model pointwise `⪯`-below them, found by
/// comparing every pair.
pub fn preceq_minimal_models(program: &Program) -> Vec<Interpretation3> {
    let models = three_valued_models(program);
    models
        .iter()
        .filter(|m| {
            !models.iter().any(|n| {
                n != *m
                    && n.values()
                        .iter()
                        .zip(m.values())
                        .all(|(&x, &y)| below3(x, y))
            })
        })
        .cloned()
        .collect()
}

pub fn sorted_names(set: &BTreeSet<Literal>) -> BTreeSet<String> {
    set.iter().map(|l| l.to_string()).collect()
}
