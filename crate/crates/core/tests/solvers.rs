use mixedcolor::bounds::chromatic_bounds;
use mixedcolor::random::corpus;
use mixedcolor::reductions::{grid_hamiltonian, hamiltonian_tournament, layered_cliques, oriented_star, tripartite};
use mixedcolor::solvers::ndm::{IlpEncoding, NdmOptions, PreorderMode};
use mixedcolor::solvers::{chi_exact, decide, Method, SolveOptions, SolverError, TreeDecomposition};
use mixedcolor::{check_proper, Budget, MixedGraph};

fn chi(g: &MixedGraph, m: Method, opts: &SolveOptions) -> usize {
    let r = chi_exact(g, m, opts).unwrap();
    assert_eq!(check_proper(g, &r.witness), Ok(None));
    assert_eq!(r.witness.max_color() as usize, r.chi);
    r.chi
}

#[test]
fn methods_agree_on_families() {
    let opts = SolveOptions::default();
    let graphs = [
        tripartite(2),
        hamiltonian_tournament(5),
        layered_cliques(2, 2),
        oriented_star(3),
        grid_hamiltonian(3),
    ];
    for g in &graphs {
        let c = chi(g, Method::TwDp, &opts);
        assert_eq!(chi(g, Method::Branch, &opts), c);
        assert_eq!(chi(g, Method::Ndm, &opts), c);
        let bounds = chromatic_bounds(g, &Budget::default());
        assert!(bounds.lower.combined <= c && c <= bounds.upper);
    }
    assert_eq!(chi(&hamiltonian_tournament(5), Method::Ndm, &opts), 5);
    assert_eq!(chi(&grid_hamiltonian(3), Method::TwDp, &opts), 9);
}

#[test]
fn ndm_option_combinations_agree() {
    let modes = [PreorderMode::Dominant, PreorderMode::Exhaustive];
    let encodings = [IlpEncoding::Literal, IlpEncoding::Pruned];
    for g in corpus(40, 60, 6) {
        let mut seen = Vec::new();
        for mode in modes {
            for encoding in encodings {
                let opts = SolveOptions {
                    ndm: NdmOptions { mode, encoding },
                    ..SolveOptions::default()
                };
                seen.push(chi(&g, Method::Ndm, &opts));
            }
        }
        assert!(seen.windows(2).all(|w| w[0] == w[1]), "{seen:?}");
        assert_eq!(seen[0], chi(&g, Method::Brute, &SolveOptions::default()));
    }
}

#[test]
fn supplied_decomposition_round_trips_through_pace() {
    let g = grid_hamiltonian(3);
    let td = TreeDecomposition::min_fill(&g);
    let text = td.to_pace(g.n());
    let back = TreeDecomposition::from_pace(&text).unwrap();
    back.validate(&g).unwrap();
    let opts = SolveOptions {
        td: Some(back),
        ..SolveOptions::default()
    };
    assert!(decide(&g, 9, Method::TwDp, &opts).unwrap().colorable);
    assert!(!decide(&g, 8, Method::TwDp, &opts).unwrap().colorable);
}

#[test]
fn limits_are_reported() {
    let g = layered_cliques(3, 3);
    let capped = SolveOptions {
        brute_cap: 4,
        ..SolveOptions::default()
    };
    assert!(matches!(decide(&g, 12, Method::Brute, &capped), Err(SolverError::CapExceeded { .. })));
    let tiny = SolveOptions {
        budget: 2,
        ..SolveOptions::default()
    };
    for m in [Method::TwDp, Method::Branch] {
        assert!(matches!(decide(&g, 11, m, &tiny), Err(SolverError::Budget(_))), "{}", m.name());
    }
}
