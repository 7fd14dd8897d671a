use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::constructions::{complete, cycle, path, petersen, star, triangle_with_pendants};
use crate::graph::Graph;

fn opts() -> SolveOptions {
    SolveOptions::default()
}

fn c(g: &Graph, k_max: usize) -> Option<usize> {
    cop_number(g, k_max, &opts()).unwrap().value
}

fn cc(g: &Graph, k_max: usize) -> Option<usize> {
    attacking_cop_number(g, k_max, &opts()).unwrap().value
}

fn small_graphs() -> Vec<Graph> {
    vec![
        path(4).unwrap(),
        cycle(4).unwrap(),
        cycle(5).unwrap(),
        cycle(6).unwrap(),
        star(3).unwrap(),
        complete(4).unwrap(),
        triangle_with_pendants(),
        Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5)]).unwrap(),
    ]
}

#[test]
fn small_cop_numbers() {
    let p4 = path(4).unwrap();
    assert_eq!((c(&p4, 3), cc(&p4, 3)), (Some(1), Some(2)));
    let c7 = cycle(7).unwrap();
    assert_eq!((c(&c7, 3), cc(&c7, 3)), (Some(2), Some(3)));
    let c4 = cycle(4).unwrap();
    assert_eq!((c(&c4, 3), cc(&c4, 3)), (Some(2), Some(2)));
    assert_eq!(cc(&triangle_with_pendants(), 2), Some(1));
    assert_eq!(cc(&star(5).unwrap(), 2), Some(1));
    assert_eq!(c(&petersen(), 3), Some(3));
    assert_eq!(c(&petersen(), 2), None);
}

#[test]
fn path_capture_distance() {
    let p4 = path(4).unwrap();
    let table = solve_classic(&p4, 1, &opts()).unwrap();
    let placement = table.placement(1);
    assert_eq!(placement, Placement { cops: vec![1], robber: 3, capture_in: Some(2) });
    let attacking = solve_attacking(&p4, 1, &opts()).unwrap();
    assert!(!attacking.placement(1).cops_win());
}

#[test]
fn single_vertex_is_captured_immediately() {
    let g = Graph::empty(1);
    let table = solve_attacking(&g, 1, &opts()).unwrap();
    let placement = table.placement(1);
    assert_eq!(placement.capture_in, Some(0));
    let cops = extract_strategy(&g, &table, Side::Cops);
    let robber = extract_strategy(&g, &table, Side::Robber);
    let trace = play(&g, GameKind::Attacking, &cops, &robber, &placement.start(), 10).unwrap();
    assert_eq!(trace.outcome, TraceOutcome::Captured { rounds: 0 });
}

#[test]
fn disconnected_and_bad_arguments() {
    let g = Graph::empty(2);
    assert_eq!(solve_classic(&g, 1, &opts()).unwrap_err(), Error::Disconnected);
    assert!(matches!(solve_classic(&path(3).unwrap(), 0, &opts()), Err(Error::Argument(_))));
    assert!(matches!(cop_number(&path(3).unwrap(), 0, &opts()), Err(Error::Argument(_))));
}

#[test]
fn naive_oracle_agrees() {
    for g in small_graphs() {
        for k in 1..=2 {
            for kind in [GameKind::Classic, GameKind::Attacking] {
                let fast = solve(&g, kind, k, &opts()).unwrap();
                let slow = naive_fixed_point(&g, k, kind).unwrap();
                assert_eq!(fast, slow, "{kind} k={k} on {:?}", g.edges().collect::<Vec<_>>());
            }
        }
    }
}

#[test]
fn tables_satisfy_the_recurrences() {
    for g in small_graphs().into_iter().chain([petersen(), cycle(7).unwrap()]) {
        for kind in [GameKind::Classic, GameKind::Attacking] {
            let table = solve(&g, kind, 2, &opts()).unwrap();
            assert_eq!(verify_fixed_point(&g, &table), 0);
        }
    }
}

#[test]
fn attacking_without_attacks_is_classic() {
    let no_attacks = SolveOptions { attack_transitions: false, ..opts() };
    for g in small_graphs().into_iter().chain([petersen()]) {
        for k in 1..=2 {
            let classic = solve_classic(&g, k, &opts()).unwrap();
            let attacking = solve_attacking(&g, k, &no_attacks).unwrap();
            let top = attacking.level(k).unwrap();
            assert_eq!(classic.levels()[0], *top);
        }
    }
}

#[test]
fn attacks_never_help_the_cops() {
    for g in small_graphs().into_iter().chain([petersen()]) {
        let classic = solve_classic(&g, 2, &opts()).unwrap();
        let attacking = solve_attacking(&g, 2, &opts()).unwrap();
        for side in [Side::Cops, Side::Robber] {
            let a = attacking.level(2).unwrap().raw_labels(side);
            let b = classic.levels()[0].raw_labels(side);
            assert!(a.iter().zip(b).all(|(x, y)| x >= y));
        }
    }
}

#[test]
fn extra_cops_never_hurt() {
    let g = petersen();
    let n = g.vertex_count();
    for kind in [GameKind::Classic, GameKind::Attacking] {
        let small = solve(&g, kind, 2, &opts()).unwrap();
        let big = solve(&g, kind, 3, &opts()).unwrap();
        for a in 0..n {
            for b in a..n {
                // A duplicate cop is safe even against attacks.
                let extras: Vec<usize> = if kind == GameKind::Classic { (0..n).collect() } else { vec![a, b] };
                for r in 0..n {
                    for side in [Side::Cops, Side::Robber] {
                        let base = small.outcome(&GameState::new(vec![a, b], r, side)).unwrap();
                        for &x in &extras {
                            let more = big.outcome(&GameState::new(vec![a, b, x], r, side)).unwrap();
                            let rank = |o: Outcome| o.moves().map_or(u64::MAX, u64::from);
                            assert!(rank(more) <= rank(base), "{kind} {a} {b} +{x} r={r} {side:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn optimal_play_takes_exactly_the_label() {
    for g in small_graphs().into_iter().chain([petersen(), cycle(7).unwrap()]) {
        for kind in [GameKind::Classic, GameKind::Attacking] {
            let table = solve(&g, kind, 2, &opts()).unwrap();
            let cops = extract_strategy(&g, &table, Side::Cops);
            let robber = extract_strategy(&g, &table, Side::Robber);
            for a in g.vertices() {
                for r in g.vertices() {
                    let start = GameState::new(vec![a, (a + 1) % g.vertex_count()], r, Side::Cops);
                    let trace = play(&g, kind, &cops, &robber, &start, 200).unwrap();
                    match table.outcome(&start).unwrap() {
                        Outcome::CopWin { moves } => {
                            assert_eq!(trace.outcome, TraceOutcome::Captured { rounds: moves as usize })
                        }
                        Outcome::RobberWin => assert!(!matches!(trace.outcome, TraceOutcome::Captured { .. })),
                    }
                }
            }
        }
    }
}

#[test]
fn robber_outlasts_too_few_cops() {
    let c7 = cycle(7).unwrap();
    let table = solve_attacking(&c7, 2, &opts()).unwrap();
    let placement = table.placement(2);
    assert!(!placement.cops_win());
    let cops = extract_strategy(&c7, &table, Side::Cops);
    let robber = extract_strategy(&c7, &table, Side::Robber);
    let trace = play(&c7, GameKind::Attacking, &cops, &robber, &placement.start(), 100).unwrap();
    assert!(matches!(trace.outcome, TraceOutcome::Survived { rounds: 100 } | TraceOutcome::CopsEliminated { .. }));
}

#[test]
fn lone_cop_on_a_path_is_attacked() {
    let p4 = path(4).unwrap();
    let table = solve_attacking(&p4, 1, &opts()).unwrap();
    // Every cop move loses, so the table's cop would idle; walk towards the robber instead.
    struct Chase;
    impl Policy for Chase {
        fn choose(&self, s: &GameState) -> Option<GameState> {
            let c = s.cops[0];
            let next = if c < s.robber { c + 1 } else { c - 1 };
            Some(GameState::new(vec![next], s.robber, Side::Robber))
        }
    }
    let robber = extract_strategy(&p4, &table, Side::Robber);
    let start = GameState::new(vec![0], 3, Side::Cops);
    let trace = play(&p4, GameKind::Attacking, &Chase, &robber, &start, 20).unwrap();
    assert!(matches!(trace.outcome, TraceOutcome::CopsEliminated { .. }));
    assert!(trace.rounds.iter().any(|r| r.attacked.is_some()));
}

#[test]
fn attack_on_a_stacked_cop_is_fatal() {
    let p3 = path(3).unwrap();
    let table = solve_attacking(&p3, 2, &opts()).unwrap();
    // Robber at 0, both cops on 1: attacking leaves a cop on the robber.
    let state = GameState::new(vec![1, 1], 0, Side::Robber);
    let attacked = GameState::new(vec![1], 1, Side::Cops);
    assert!(successors(&p3, GameKind::Attacking, &state).contains(&attacked));
    assert_eq!(table.outcome(&attacked), Some(Outcome::CopWin { moves: 0 }));
    assert_eq!(table.outcome(&state), Some(Outcome::CopWin { moves: 1 }));
}

#[test]
fn illegal_moves_are_rejected() {
    struct Teleport;
    impl Policy for Teleport {
        fn choose(&self, s: &GameState) -> Option<GameState> {
            Some(GameState::new(vec![s.robber], s.robber, Side::Robber))
        }
    }
    let p4 = path(4).unwrap();
    let table = solve_classic(&p4, 1, &opts()).unwrap();
    let robber = extract_strategy(&p4, &table, Side::Robber);
    let err = play(&p4, GameKind::Classic, &Teleport, &robber, &GameState::new(vec![0], 3, Side::Cops), 5);
    assert!(matches!(err, Err(Error::IllegalMove { round: 1, .. })));
}

#[test]
fn budget_is_enforced_up_front() {
    let tight = SolveOptions::with_budget(100);
    assert!(matches!(cop_number(&petersen(), 3, &tight), Err(Error::Budget { .. })));
    assert!(matches!(attacking_cop_number(&petersen(), 3, &tight), Err(Error::Budget { .. })));
    assert!(matches!(solve_attacking(&petersen(), 2, &tight), Err(Error::Budget { .. })));
    assert_eq!(required_states(GameKind::Classic, 10, 2), 2 * 55 * 10);
    assert_eq!(required_states(GameKind::Attacking, 10, 1), 2 * 10 + 2 * 100);
}
