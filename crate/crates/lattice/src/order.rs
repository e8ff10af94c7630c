//! The stronger-than ordering on descriptions: a fast closure-based decision
//! procedure plus the literal rule-application search used to validate it.

use crate::desc::{constraint::*, slot::*, Description, Placement, CONSTRAINTS, SLOTS};

/// Parameters bounded by each constraint (the "add a parameter bounded by a
/// present constraint" rule).
pub const BOUNDING: [(usize, usize); 10] = [
    (GENUS0_H, GENUS_H),
    (CC1_H, CC_H),
    (TW1_H, TW_H),
    (DMAX2_H, DMAX_H),
    (DMAX3_H, DMAX_H),
    (GENUS0_G, GENUS_G),
    (CC1_G, CC_G),
    (TW1_G, TW_G),
    (DMAX2_G, DMAX_G),
    (DMAX3_G, DMAX_G),
];

/// Subgraph-monotone parameters: the H copy may be added when the G copy is
/// present at the same position (everything except cliquewidth and component
/// count; |V(G)| is not a slot).
pub const G_TO_H_PARAM: [(usize, usize); 7] = [
    (DMAX_H, DMAX_G),
    (FVS_H, FVS_G),
    (PW_H, PW_G),
    (TW_H, TW_G),
    (GENUS_H, GENUS_G),
    (HADW_H, HADW_G),
    (HADWT_H, HADWT_G),
];

/// Constraints copied from G to H (connectivity excluded).
pub const G_TO_H_CONSTR: [(usize, usize); 4] = [
    (GENUS0_H, GENUS0_G),
    (TW1_H, TW1_G),
    (DMAX2_H, DMAX2_G),
    (DMAX3_H, DMAX3_G),
];

/// Parameters that become bounded when the graph is a union of paths and
/// cycles (dmax <= 2).
pub const DMAX2_PARAMS: [usize; 6] = [PW_H, TW_H, CW_H, GENUS_H, HADW_H, HADWT_H];
/// Parameters bounded on forests (tw <= 1). Pathwidth is absent: forests
/// can have unbounded pathwidth.
pub const TW1_PARAMS: [usize; 6] = [FVS_H, TW_H, CW_H, GENUS_H, HADW_H, HADWT_H];

/// Since the slot layout for G mirrors H shifted by 10 (and parameter slots
/// of G start at cc), shifting an H slot other than n by 9 gives the G slot.
pub fn mirror(slot_h: usize) -> usize {
    debug_assert!(slot_h >= 1 && slot_h < 10);
    slot_h + 9
}

/// Implication rules within one graph and one position: (sources, targets).
/// The n -> everything rule exists only on the H side.
pub const IMPLICATIONS_H: [(&[usize], &[usize]); 8] = [
    (
        &[N_H],
        &[
            DMAX_H, CC_H, FVS_H, PW_H, TW_H, CW_H, GENUS_H, HADW_H, HADWT_H,
        ],
    ),
    (&[PW_H], &[TW_H]),
    (&[FVS_H], &[TW_H]),
    (&[TW_H], &[CW_H, HADW_H]),
    (&[GENUS_H], &[HADW_H]),
    (&[HADW_H], &[HADWT_H]),
    (&[DMAX_H], &[HADWT_H]),
    (&[HADWT_H, CW_H], &[TW_H]),
];

pub const IMPLICATIONS_G: [(&[usize], &[usize]); 7] = [
    (&[PW_G], &[TW_G]),
    (&[FVS_G], &[TW_G]),
    (&[TW_G], &[CW_G, HADW_G]),
    (&[GENUS_G], &[HADW_G]),
    (&[HADW_G], &[HADWT_G]),
    (&[DMAX_G], &[HADWT_G]),
    (&[HADWT_G, CW_G], &[TW_G]),
];

/// Closure of a description under all parameter/constraint addition rules,
/// tracking per slot at which positions it can be made to appear:
/// `mult` bit set means the slot can appear in the multiplier of a stronger
/// description derived from the input, `exp` likewise for the exponent.
/// A slot placed in the multiplier of the input is only multiplier-achievable;
/// one in the exponent achieves both (it may be moved); added parameters
/// achieve whatever positions their rule sources achieve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Closure {
    pub mult: u32,
    pub exp: u32,
    pub constraints: u16,
}

pub fn constraint_closure(mut c: u16) -> u16 {
    loop {
        let before = c;
        for &(h, g) in &G_TO_H_CONSTR {
            if c >> g & 1 == 1 {
                c |= 1 << h;
            }
        }
        if c >> CC1_H & 1 == 1 {
            c |= 1 << CC1_G;
        }
        // dmax <= 2 gives dmax <= 3 and planarity; forests are planar.
        if c >> DMAX2_H & 1 == 1 {
            c |= (1 << DMAX3_H) | (1 << GENUS0_H);
        }
        if c >> DMAX2_G & 1 == 1 {
            c |= (1 << DMAX3_G) | (1 << GENUS0_G);
        }
        if c >> TW1_H & 1 == 1 {
            c |= 1 << GENUS0_H;
        }
        if c >> TW1_G & 1 == 1 {
            c |= 1 << GENUS0_G;
        }
        if c == before {
            return c;
        }
    }
}

pub fn closure(d: &Description) -> Closure {
    let cset = constraint_closure(d.constraints);
    let mut mult = 0u32;
    let mut exp = 0u32;
    for (i, p) in d.slots.iter().enumerate() {
        match p {
            Placement::Absent => {}
            Placement::Multiplier => mult |= 1 << i,
            // An exponent parameter can stay or be moved to the multiplier.
            Placement::Exponent => {
                mult |= 1 << i;
                exp |= 1 << i;
            }
        }
    }
    loop {
        let before = (mult, exp);
        // Parameters bounded by a present constraint: either position.
        for &(c, s) in &BOUNDING {
            if cset >> c & 1 == 1 {
                mult |= 1 << s;
                exp |= 1 << s;
            }
        }
        // dmax<=2 / tw<=1 bounded families, on each graph.
        for (flag_h, flag_g, params) in [
            (DMAX2_H, DMAX2_G, &DMAX2_PARAMS),
            (TW1_H, TW1_G, &TW1_PARAMS),
        ] {
            if cset >> flag_h & 1 == 1 {
                for &s in params.iter() {
                    mult |= 1 << s;
                    exp |= 1 << s;
                }
            }
            if cset >> flag_g & 1 == 1 {
                for &s in params.iter() {
                    mult |= 1 << mirror(s);
                    exp |= 1 << mirror(s);
                }
            }
        }
        // Copy a parameter from G to H at any position G achieves.
        for &(h, g) in &G_TO_H_PARAM {
            if mult >> g & 1 == 1 {
                mult |= 1 << h;
            }
            if exp >> g & 1 == 1 {
                exp |= 1 << h;
            }
        }
        // Combinatorial implications, within one position.
        for (sources, targets) in IMPLICATIONS_H.iter().chain(IMPLICATIONS_G.iter()) {
            let all_m = sources.iter().all(|&s| mult >> s & 1 == 1);
            let all_e = sources.iter().all(|&s| exp >> s & 1 == 1);
            for &t in targets.iter() {
                if all_m {
                    mult |= 1 << t;
                }
                if all_e {
                    exp |= 1 << t;
                }
            }
        }
        if (mult, exp) == before {
            return Closure {
                mult,
                exp,
                constraints: cset,
            };
        }
    }
}

/// Is `d2` stronger than (or equal to) `d1`? Decided by comparing `d2`
/// against the addition closure of `d1`.
pub fn stronger_than(d2: &Description, d1: &Description) -> bool {
    stronger_than_closure(d2, &closure(d1))
}

/// The same test against a precomputed closure of `d1`.
pub fn stronger_than_closure(d2: &Description, c1: &Closure) -> bool {
    let m2 = d2.multiplier_mask();
    let e2 = d2.exponent_mask();
    m2 & !c1.mult == 0 && e2 & !c1.exp == 0 && d2.constraints & !c1.constraints == 0
}

/// Literal single-step rule applications from Definition of the ordering;
/// the independent ground truth for `stronger_than`.
pub fn rule_neighbors(d: &Description) -> Vec<Description> {
    let mut out = Vec::new();
    // (a) remove a parameter; (b) move exponent -> multiplier.
    for s in 0..SLOTS {
        match d.slots[s] {
            Placement::Absent => {}
            Placement::Multiplier => {
                out.push(d.with_slot(s, Placement::Absent));
            }
            Placement::Exponent => {
                out.push(d.with_slot(s, Placement::Absent));
                out.push(d.with_slot(s, Placement::Multiplier));
            }
        }
    }
    // (c) remove a constraint.
    for c in 0..CONSTRAINTS {
        if d.has_constraint(c) {
            let mut d2 = *d;
            d2.constraints &= !(1 << c);
            out.push(d2);
        }
    }
    let mut add_param = |s: usize, out: &mut Vec<Description>| {
        if d.slots[s] == Placement::Absent {
            out.push(d.with_slot(s, Placement::Multiplier));
            out.push(d.with_slot(s, Placement::Exponent));
        }
    };
    // (d) add a parameter bounded by a present constraint.
    for &(c, s) in &BOUNDING {
        if d.has_constraint(c) {
            add_param(s, &mut out);
        }
    }
    // (e)(i) copy a G parameter to H at the same position.
    for &(h, g) in &G_TO_H_PARAM {
        if d.slots[h] == Placement::Absent && d.slots[g] != Placement::Absent {
            out.push(d.with_slot(h, d.slots[g]));
        }
    }
    // (e)(ii) copy a constraint from G to H.
    for &(h, g) in &G_TO_H_CONSTR {
        if d.has_constraint(g) && !d.has_constraint(h) {
            out.push(d.with_constraint(h));
        }
    }
    // (e)(iii) connectivity of H gives connectivity of G.
    if d.has_constraint(CC1_H) && !d.has_constraint(CC1_G) {
        out.push(d.with_constraint(CC1_G));
    }
    // (e)(iv) and (e)(v): bounded families and derived constraints.
    for (flag, params, new_constraints) in [
        (
            DMAX2_H,
            &DMAX2_PARAMS as &[usize],
            &[DMAX3_H, GENUS0_H] as &[usize],
        ),
        (TW1_H, &TW1_PARAMS, &[GENUS0_H]),
    ] {
        if d.has_constraint(flag) {
            for &s in params {
                add_param(s, &mut out);
            }
            for &c in new_constraints {
                if !d.has_constraint(c) {
                    out.push(d.with_constraint(c));
                }
            }
        }
        // Mirrored on G.
        let flag_g = flag + 5;
        if d.has_constraint(flag_g) {
            for &s in params {
                add_param(mirror(s), &mut out);
            }
            for &c in new_constraints {
                let c_g = c + 5;
                if !d.has_constraint(c_g) {
                    out.push(d.with_constraint(c_g));
                }
            }
        }
    }
    // (e)(vi) implications, within one graph and one position.
    for (sources, targets) in IMPLICATIONS_H.iter().chain(IMPLICATIONS_G.iter()) {
        for pos in [Placement::Multiplier, Placement::Exponent] {
            if sources.iter().all(|&s| d.slots[s] == pos) {
                for &t in targets.iter() {
                    if d.slots[t] == Placement::Absent {
                        out.push(d.with_slot(t, pos));
                    }
                }
            }
        }
    }
    out
}

/// Bounded-depth breadth-first search over rule applications. Returns
/// whether `d2` is reachable from `d1` within `max_depth` steps.
pub fn stronger_than_search(d2: &Description, d1: &Description, max_depth: usize) -> bool {
    use std::collections::HashSet;
    if d1 == d2 {
        return true;
    }
    let mut seen: HashSet<Description> = HashSet::new();
    let mut frontier = vec![*d1];
    seen.insert(*d1);
    for _ in 0..max_depth {
        let mut next = Vec::new();
        for d in frontier {
            for nb in rule_neighbors(&d) {
                if nb == *d2 {
                    return true;
                }
                if seen.insert(nb) {
                    next.push(nb);
                }
            }
        }
        if next.is_empty() {
            return false;
        }
        frontier = next;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::desc::parse_description;

    fn d(s: &str) -> Description {
        parse_description(s).unwrap()
    }

    #[test]
    fn reflexive() {
        for s in ["M:n(H)", "E:tw(G) C:cc(H)<=1", "M: E: C:"] {
            let x = d(s);
            assert!(stronger_than(&x, &x));
        }
    }

    #[test]
    fn tw_replaces_pw() {
        // Replacing pw(H) by tw(H) strengthens.
        assert!(stronger_than(&d("M:tw(H)"), &d("M:pw(H)")));
        assert!(!stronger_than(&d("M:pw(H)"), &d("M:tw(H)")));
    }

    #[test]
    fn exponent_moves_to_multiplier() {
        assert!(stronger_than(&d("M:tw(H)"), &d("E:tw(H)")));
        // The reverse would demote, which no rule allows.
        assert!(!stronger_than(&d("E:tw(H)"), &d("M:tw(H)")));
    }

    #[test]
    fn spec_four_slot_example() {
        let weak = d("M:n(H),genus(G) E:pw(H),dmax(G)");
        let strong = d("M:n(H) E:tw(H)");
        assert!(stronger_than(&strong, &weak));
    }

    #[test]
    fn paper_example_one() {
        // th:bigplanar covers the planar bounded-degree connected query.
        let query = d("E:fvs(G) C:genus(G)<=0,dmax(G)<=3,cc(H)<=1");
        let positive = d("M:dmax(G),fvs(G) E:genus(G),cc(H)");
        assert!(stronger_than(&positive, &query));
    }

    #[test]
    fn paper_example_two() {
        // The query is stronger than the grid-manycomp negative.
        let query = d("M:tw(G) E:dmax(G) C:cc(G)<=1,genus(G)<=0");
        let negative =
            d("M:cc(H),pw(G),fvs(G) E:pw(H) C:tw(H)<=1,cc(G)<=1,dmax(G)<=3,genus(G)<=0");
        assert!(stronger_than(&query, &negative));
    }

    #[test]
    fn closure_matches_search_on_handpicked_pairs() {
        let cases = [
            ("M:tw(H)", "M:pw(H)"),
            ("M:pw(H)", "M:tw(H)"),
            ("M:n(H) E:tw(H)", "M:n(H),genus(G) E:pw(H),dmax(G)"),
            ("E:cc(G) C:dmax(G)<=2", "E:cc(G),tw(G) C:dmax(G)<=2"),
            ("M:cw(G)", "M:tw(G)"),
            ("M:tw(G)", "M:cw(G)"),
            ("M:tw(G)", "M:cw(G),hadwT(G)"),
            ("M:fvs(H)", "C:tw(H)<=1"),
            ("C:cc(G)<=1", "C:cc(H)<=1"),
            ("C:cc(H)<=1", "C:cc(G)<=1"),
            ("M:genus(H)", "C:dmax(H)<=2"),
            ("M:hadwT(H)", "M:dmax(G)"),
        ];
        for (a, b) in cases {
            let (da, db) = (d(a), d(b));
            assert_eq!(
                stronger_than(&da, &db),
                stronger_than_search(&da, &db, 25),
                "disagree on ({a}, {b})"
            );
        }
    }
}
