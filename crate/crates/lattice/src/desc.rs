//! Descriptions: placements of the 19 parameter slots plus the 10 input
//! constraints, with parsing and printing.

use crate::{LatticeError, Result};
use std::fmt;

/// Parameter slots, ten for H and nine for G (the host size never appears).
pub const SLOTS: usize = 19;
/// Constraint flags, five per graph.
pub const CONSTRAINTS: usize = 10;

pub const SLOT_NAMES: [&str; SLOTS] = [
    "n(H)",
    "cc(H)",
    "dmax(H)",
    "fvs(H)",
    "pw(H)",
    "tw(H)",
    "cw(H)",
    "genus(H)",
    "hadw(H)",
    "hadwT(H)",
    "cc(G)",
    "dmax(G)",
    "fvs(G)",
    "pw(G)",
    "tw(G)",
    "cw(G)",
    "genus(G)",
    "hadw(G)",
    "hadwT(G)",
];

pub const CONSTRAINT_NAMES: [&str; CONSTRAINTS] = [
    "genus(H)<=0",
    "cc(H)<=1",
    "tw(H)<=1",
    "dmax(H)<=2",
    "dmax(H)<=3",
    "genus(G)<=0",
    "cc(G)<=1",
    "tw(G)<=1",
    "dmax(G)<=2",
    "dmax(G)<=3",
];

// Slot indices by name, for rule tables.
pub mod slot {
    pub const N_H: usize = 0;
    pub const CC_H: usize = 1;
    pub const DMAX_H: usize = 2;
    pub const FVS_H: usize = 3;
    pub const PW_H: usize = 4;
    pub const TW_H: usize = 5;
    pub const CW_H: usize = 6;
    pub const GENUS_H: usize = 7;
    pub const HADW_H: usize = 8;
    pub const HADWT_H: usize = 9;
    pub const CC_G: usize = 10;
    pub const DMAX_G: usize = 11;
    pub const FVS_G: usize = 12;
    pub const PW_G: usize = 13;
    pub const TW_G: usize = 14;
    pub const CW_G: usize = 15;
    pub const GENUS_G: usize = 16;
    pub const HADW_G: usize = 17;
    pub const HADWT_G: usize = 18;
}

pub mod constraint {
    pub const GENUS0_H: usize = 0;
    pub const CC1_H: usize = 1;
    pub const TW1_H: usize = 2;
    pub const DMAX2_H: usize = 3;
    pub const DMAX3_H: usize = 4;
    pub const GENUS0_G: usize = 5;
    pub const CC1_G: usize = 6;
    pub const TW1_G: usize = 7;
    pub const DMAX2_G: usize = 8;
    pub const DMAX3_G: usize = 9;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Placement {
    Absent,
    Multiplier,
    Exponent,
}

/// A description: where each parameter may appear in the running time, and
/// which constraints restrict the input. Canonical form keeps dmax<=3
/// whenever dmax<=2 holds for the same graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Description {
    pub slots: [Placement; SLOTS],
    /// Bitmask over `CONSTRAINT_NAMES`.
    pub constraints: u16,
}

impl Default for Description {
    fn default() -> Self {
        Self::empty()
    }
}

impl Description {
    pub fn empty() -> Self {
        Description {
            slots: [Placement::Absent; SLOTS],
            constraints: 0,
        }
    }

    pub fn with_slot(mut self, s: usize, p: Placement) -> Self {
        self.slots[s] = p;
        self
    }

    pub fn with_constraint(mut self, c: usize) -> Self {
        self.constraints |= 1 << c;
        self
    }

    pub fn has_constraint(&self, c: usize) -> bool {
        self.constraints >> c & 1 == 1
    }

    pub fn multiplier_mask(&self) -> u32 {
        let mut m = 0;
        for (i, p) in self.slots.iter().enumerate() {
            if *p == Placement::Multiplier {
                m |= 1 << i;
            }
        }
        m
    }

    pub fn exponent_mask(&self) -> u32 {
        let mut m = 0;
        for (i, p) in self.slots.iter().enumerate() {
            if *p == Placement::Exponent {
                m |= 1 << i;
            }
        }
        m
    }

    /// dmax(X)<=2 implies the strictly weaker dmax(X)<=3; canonical
    /// descriptions carry both flags.
    pub fn canonicalize(mut self) -> Self {
        use constraint::*;
        if self.has_constraint(DMAX2_H) {
            self.constraints |= 1 << DMAX3_H;
        }
        if self.has_constraint(DMAX2_G) {
            self.constraints |= 1 << DMAX3_G;
        }
        self
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }
}

impl fmt::Display for Description {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |mask: fn(&Description, usize) -> bool, d: &Description| -> String {
            (0..SLOTS)
                .filter(|&i| mask(d, i))
                .map(|i| SLOT_NAMES[i])
                .collect::<Vec<_>>()
                .join(",")
        };
        let m = join(|d, i| d.slots[i] == Placement::Multiplier, self);
        let e = join(|d, i| d.slots[i] == Placement::Exponent, self);
        let c = (0..CONSTRAINTS)
            .filter(|&i| self.has_constraint(i))
            .map(|i| CONSTRAINT_NAMES[i])
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "M:{m} E:{e} C:{c}")
    }
}

fn slot_index(name: &str) -> Result<usize> {
    SLOT_NAMES
        .iter()
        .position(|&s| s == name)
        .ok_or_else(|| LatticeError::BadSlot(name.to_string()))
}

fn constraint_index(name: &str) -> Result<usize> {
    CONSTRAINT_NAMES
        .iter()
        .position(|&s| s == name)
        .ok_or_else(|| LatticeError::BadConstraint(name.to_string()))
}

/// Parses the query grammar `M:<slots> E:<slots> C:<constraints>`, where the
/// lists are comma-separated and each section is optional.
pub fn parse_description(input: &str) -> Result<Description> {
    let mut d = Description::empty();
    for tok in input.split_whitespace() {
        let (kind, body) = tok
            .split_once(':')
            .ok_or_else(|| LatticeError::BadSyntax(tok.to_string()))?;
        for item in body.split(',').filter(|s| !s.is_empty()) {
            match kind {
                "M" => {
                    let s = slot_index(item)?;
                    d.slots[s] = Placement::Multiplier;
                }
                "E" => {
                    let s = slot_index(item)?;
                    d.slots[s] = Placement::Exponent;
                }
                "C" => {
                    let c = constraint_index(item)?;
                    d.constraints |= 1 << c;
                }
                other => return Err(LatticeError::BadSyntax(other.to_string())),
            }
        }
    }
    Ok(d.canonicalize())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_display_roundtrip() {
        let d = parse_description("M:n(H),cw(G) E:tw(H) C:cc(H)<=1").unwrap();
        assert_eq!(d.slots[slot::N_H], Placement::Multiplier);
        assert_eq!(d.slots[slot::CW_G], Placement::Multiplier);
        assert_eq!(d.slots[slot::TW_H], Placement::Exponent);
        assert!(d.has_constraint(constraint::CC1_H));
        let d2 = parse_description(&d.to_string()).unwrap();
        assert_eq!(d, d2);
    }

    #[test]
    fn canonical_dmax_rule() {
        let d = parse_description("C:dmax(G)<=2").unwrap();
        assert!(d.has_constraint(constraint::DMAX3_G));
        assert!(d.is_canonical());
    }

    #[test]
    fn unknown_names_rejected() {
        assert!(parse_description("M:tw(X)").is_err());
        assert!(parse_description("C:girth(G)<=3").is_err());
    }
}
