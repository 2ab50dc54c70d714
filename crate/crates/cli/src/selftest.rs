//! Self-test: runs the module invariant suites with their brute-force
//! oracles and prints one pass/fail line per suite.

use std::process::ExitCode;

use heptasym_core::atlas::{builtin_group, table2_orders_check, CatalogStatus};
use heptasym_core::error::Result;
use heptasym_core::graph::{quotient_graph, Graph, GroupAction};
use heptasym_core::group::brute_force_elements;
use heptasym_core::perm::Permutation;
use heptasym_core::search::{
    centralizer_in_group, core_of, intersection, normalizer, SearchBudget,
};
use heptasym_core::verify::{admissible_n_list, conjclass_size7_check};
use heptasym_core::PermGroup;

use crate::Cli;

struct Suite {
    failures: Vec<String>,
    any_failed: bool,
}

impl Suite {
    fn new() -> Self {
        Suite {
            failures: Vec::new(),
            any_failed: false,
        }
    }

    fn run(&mut self, name: &str, body: impl FnOnce() -> Result<()>) {
        match body() {
            Ok(()) => println!("suite {name}: pass"),
            Err(e) => {
                println!("suite {name}: FAIL ({e})");
                self.failures.push(name.to_string());
                self.any_failed = true;
            }
        }
    }
}

fn check(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(heptasym_core::Error::Hypothesis(what.to_string()))
    }
}

pub fn run(cli: &Cli, budget: &SearchBudget) -> Result<ExitCode> {
    use rand::SeedableRng;
    let mut suite = Suite::new();
    let seed = cli.seed;

    suite.run("chain-vs-bruteforce", || {
        for name in ["A:5", "A:6", "S:6", "A:7", "S:7", "PSL32@7", "PSL28@9", "AGL32"] {
            let g = builtin_group(name)?;
            let brute = brute_force_elements(g.gens(), g.degree(), 6000)
                .ok_or_else(|| heptasym_core::Error::Hypothesis("cap".into()))?;
            check(
                g.order_u64() == Some(brute.len() as u64),
                &format!("{name}: chain order vs closure"),
            )?;
        }
        Ok(())
    });

    suite.run("orbit-stabilizer", || {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0x05b1);
        let s7 = builtin_group("S:7")?;
        for _ in 0..25 {
            let g = PermGroup::new(
                7,
                vec![s7.random_element(&mut rng), s7.random_element(&mut rng)],
            )?;
            let order = g.order_u64().unwrap();
            for v in 0..7 {
                let orbit = g.orbit(v)?.len() as u64;
                let stab = g.point_stabilizer(v)?.order_u64().unwrap();
                check(orbit * stab == order, "orbit-stabilizer product")?;
            }
        }
        Ok(())
    });

    suite.run("searches-vs-bruteforce-s7", || {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0xb7);
        let s7 = builtin_group("S:7")?;
        let all = brute_force_elements(s7.gens(), 7, 5041)
            .ok_or_else(|| heptasym_core::Error::Hypothesis("cap".into()))?;
        for _ in 0..25 {
            let g = PermGroup::new(
                7,
                vec![s7.random_element(&mut rng), s7.random_element(&mut rng)],
            )?;
            let h = PermGroup::new(
                7,
                vec![g.random_element(&mut rng), g.random_element(&mut rng)],
            )?;
            // h <= g by construction
            let meet = intersection(&g, &h, budget)?;
            let brute_meet = all
                .iter()
                .filter(|p| g.contains(p).unwrap() && h.contains(p).unwrap())
                .count() as u64;
            check(meet.order_u64() == Some(brute_meet), "intersection")?;

            let n = normalizer(&g, &h, budget)?;
            let brute_n = all
                .iter()
                .filter(|p| {
                    g.contains(p).unwrap()
                        && h.gens()
                            .iter()
                            .all(|x| h.contains(&x.conjugate_by(p)).unwrap())
                })
                .count() as u64;
            check(n.order_u64() == Some(brute_n), "normalizer")?;

            let c = centralizer_in_group(&g, &h, budget)?;
            let brute_c = all
                .iter()
                .filter(|p| {
                    g.contains(p).unwrap()
                        && h.gens()
                            .iter()
                            .all(|x| x.compose(p) == p.compose(x))
                })
                .count() as u64;
            check(c.order_u64() == Some(brute_c), "centralizer")?;

            let core = core_of(&g, &h, budget)?;
            let g_elems: Vec<&Permutation> =
                all.iter().filter(|p| g.contains(p).unwrap()).collect();
            let brute_core = all
                .iter()
                .filter(|p| {
                    h.contains(p).unwrap()
                        && g_elems
                            .iter()
                            .all(|q| h.contains(&p.conjugate_by(q)).unwrap())
                })
                .count() as u64;
            check(core.order_u64() == Some(brute_core), "core")?;
        }
        Ok(())
    });

    suite.run("centralizer-in-sym", || {
        for name in ["A:5", "A:6", "A:7", "A:8", "PSL32@7", "PSL28@9", "C:7", "C:12"] {
            let g = builtin_group(name)?;
            if !g.is_transitive() {
                continue;
            }
            let c = heptasym_core::search::centralizer_in_sym(&g)?;
            check(c.is_semiregular(), &format!("{name}: semiregular centralizer"))?;
            if g.is_regular() {
                check(
                    c.order() == g.order() && c.is_transitive(),
                    &format!("{name}: regular centralizer of regular group"),
                )?;
            }
        }
        Ok(())
    });

    suite.run("witness-verification", || {
        let mut loaded = 0;
        let mut entries: Vec<_> = std::fs::read_dir(&cli.witness_dir)?
            .filter_map(|e| e.ok())
            .map(|e| e.path())
            .filter(|p| p.extension().map(|x| x == "wit").unwrap_or(false))
            .collect();
        entries.sort();
        for path in entries {
            heptasym_core::atlas::load_witness(&path)?;
            loaded += 1;
        }
        check(loaded > 0, "no witness files found")?;
        println!("  ({loaded} witness files verified)");
        Ok(())
    });

    suite.run("table2-orders", || {
        let entries = table2_orders_check(&cli.witness_dir)?;
        for e in &entries {
            check(
                e.status != CatalogStatus::Mismatch,
                &format!("{} order mismatch", e.name),
            )?;
        }
        let skipped = entries
            .iter()
            .filter(|e| e.status == CatalogStatus::Skipped)
            .count();
        println!("  ({} entries, {skipped} skipped)", entries.len());
        Ok(())
    });

    suite.run("class-union-obstruction", || {
        for name in ["A:5", "A:6", "A:7", "PSL32@7"] {
            check(
                !conjclass_size7_check(&builtin_group(name)?)?,
                &format!("{name}: no size-7 class union"),
            )?;
        }
        Ok(())
    });

    suite.run("quotient-cover", || {
        // bipartite double cover of K8, deck group of order 2
        let mut edges = Vec::new();
        for v in 0..8usize {
            for w in 0..8usize {
                if v != w {
                    edges.push((v, w + 8));
                }
            }
        }
        let cover = Graph::from_edges(16, &edges)?;
        let a8 = builtin_group("A:8")?;
        let mut gens = Vec::new();
        for g in a8.gens() {
            let images: Vec<usize> = (0..16)
                .map(|x| g.apply(x % 8) + 8 * (x / 8))
                .collect();
            gens.push(Permutation::from_images(images)?);
        }
        let swap = Permutation::from_images((0..16).map(|x| (x + 8) % 16).collect())?;
        gens.push(swap.clone());
        let action = GroupAction::new(PermGroup::new(16, gens)?, &cover)?;
        let deck = PermGroup::new(16, vec![swap])?;
        let (q, report) = quotient_graph(&cover, &action, &deck)?;
        check(q == Graph::complete(8), "quotient is K8")?;
        check(report.semiregular, "deck group semiregular")?;
        check(report.valency_preserved, "valency preserved at 7")?;
        Ok(())
    });

    suite.run("admissible-list", || {
        let list = admissible_n_list();
        check(list.len() == 15, "15 values")?;
        check(*list.last().unwrap() == 1_056_964_608, "largest value")?;
        Ok(())
    });

    suite.run("low-index-invariants", || {
        for (name, k) in [("A:7", 7usize), ("PSL32@7", 7), ("A:6", 6)] {
            let g = builtin_group(name)?;
            let subs = heptasym_core::search::low_index_subgroups(&g, k, budget)?;
            for s in &subs {
                let act = heptasym_core::search::coset_action(&g, s, budget)?;
                check(act.action.is_transitive(), "transitive coset action")?;
                check(act.action.degree() == k, "degree k action")?;
                let so = s.order();
                check(
                    (g.order() % so) == num_bigint::BigUint::from(0u32),
                    "lagrange",
                )?;
            }
        }
        Ok(())
    });

    suite.run("witness-tamper-detection", || {
        // corrupt one generator of a witness file and require a loud failure
        let path = cli.witness_dir.join("m11.wit");
        let text = std::fs::read_to_string(&path)?;
        let tampered = text.replacen("gen (0", "gen (1", 1);
        check(tampered != text, "tamper produced a change")?;
        let spec = heptasym_core::atlas::WitnessSpec::parse(&tampered, "tampered")?;
        check(spec.realize().is_err(), "tampered witness must fail to load")?;
        Ok(())
    });

    if suite.any_failed {
        println!("selftest: FAILED ({})", suite.failures.join(", "));
        Ok(ExitCode::from(1))
    } else {
        println!("selftest: all suites passed");
        Ok(ExitCode::from(0))
    }
}
