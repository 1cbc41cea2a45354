//! Named integer sequences, for table and b-file output.

use std::fmt;
use std::str::FromStr;

use crate::count::Count;
use crate::counts::{self, Arrangement};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SequenceKind {
    /// Colorful words of length n.
    Alpha,
    /// Necklaces: K(n).
    Necklace,
    /// Bracelets: K'(n).
    Bracelet,
    /// Necklaces using all three colors: K*(n).
    NecklaceExactColors,
    BraceletExactColors,
    /// Necklaces of exact period n (OEIS A011957).
    NecklaceExactPeriod,
    /// Bracelets of exact period n (OEIS A011768).
    BraceletExactPeriod,
    ClassicalNecklace {
        colors: u64,
    },
    ClassicalBracelet {
        colors: u64,
    },
}

impl SequenceKind {
    pub fn value(&self, n: u64) -> Result<Count> {
        use SequenceKind::*;
        match *self {
            Alpha => counts::alpha(n),
            Necklace => counts::necklace_count(n),
            Bracelet => counts::bracelet_count(n),
            NecklaceExactColors => counts::exact_color_count(n, Arrangement::Necklace),
            BraceletExactColors => counts::exact_color_count(n, Arrangement::Bracelet),
            NecklaceExactPeriod => counts::exact_period_count(n, Arrangement::Necklace),
            BraceletExactPeriod => counts::exact_period_count(n, Arrangement::Bracelet),
            ClassicalNecklace { colors } => counts::classical_necklace(n, colors),
            ClassicalBracelet { colors } => counts::classical_bracelet(n, colors),
        }
    }

    /// Applies the `exact colors` / `exact period` modifiers. Only the
    /// necklace and bracelet kinds accept a modifier, and at most one.
    pub fn with_modifiers(self, exact_colors: bool, exact_period: bool) -> Result<Self> {
        use SequenceKind::*;
        match (self, exact_colors, exact_period) {
            (kind, false, false) => Ok(kind),
            (_, true, true) => Err(Error::UnknownKind(
                "exact colors and exact period cannot be combined".into(),
            )),
            (Necklace, true, false) => Ok(NecklaceExactColors),
            (Bracelet, true, false) => Ok(BraceletExactColors),
            (Necklace, false, true) => Ok(NecklaceExactPeriod),
            (Bracelet, false, true) => Ok(BraceletExactPeriod),
            (kind, _, _) => Err(Error::UnknownKind(format!(
                "modifiers apply only to necklace and bracelet, not {kind}"
            ))),
        }
    }

    /// Parses a kind name; classical kinds take `colors`.
    pub fn parse_with_colors(name: &str, colors: Option<u64>) -> Result<Self> {
        use SequenceKind::*;
        let needs_colors = |make: fn(u64) -> SequenceKind| match colors {
            Some(0) => Err(Error::Zero { arg: "colors" }),
            Some(c) => Ok(make(c)),
            None => Err(Error::UnknownKind(format!("{name} requires a color count"))),
        };
        let kind = match name {
            "alpha" => Alpha,
            "necklace" | "K" => Necklace,
            "bracelet" | "K'" => Bracelet,
            "necklace-exact-colors" | "K*" => NecklaceExactColors,
            "bracelet-exact-colors" | "K'*" => BraceletExactColors,
            "necklace-exact-period" => NecklaceExactPeriod,
            "bracelet-exact-period" => BraceletExactPeriod,
            "classical-necklace" => return needs_colors(|colors| ClassicalNecklace { colors }),
            "classical-bracelet" => return needs_colors(|colors| ClassicalBracelet { colors }),
            other => return Err(Error::UnknownKind(other.to_string())),
        };
        if colors.is_some() {
            return Err(Error::UnknownKind(format!(
                "{name} does not take a color count"
            )));
        }
        Ok(kind)
    }

    pub fn name(&self) -> String {
        use SequenceKind::*;
        match self {
            Alpha => "alpha".into(),
            Necklace => "necklace".into(),
            Bracelet => "bracelet".into(),
            NecklaceExactColors => "necklace-exact-colors".into(),
            BraceletExactColors => "bracelet-exact-colors".into(),
            NecklaceExactPeriod => "necklace-exact-period".into(),
            BraceletExactPeriod => "bracelet-exact-period".into(),
            ClassicalNecklace { colors } => format!("classical-necklace:{colors}"),
            ClassicalBracelet { colors } => format!("classical-bracelet:{colors}"),
        }
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Accepts every name produced by [`SequenceKind::name`], including the
/// `classical-necklace:C` form.
impl FromStr for SequenceKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.split_once(':') {
            Some((name, colors)) => {
                let colors = colors
                    .parse()
                    .map_err(|_| Error::UnknownKind(s.to_string()))?;
                Self::parse_with_colors(name, Some(colors))
            }
            None => Self::parse_with_colors(s, None),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        let kinds = [
            SequenceKind::Alpha,
            SequenceKind::Necklace,
            SequenceKind::Bracelet,
            SequenceKind::NecklaceExactColors,
            SequenceKind::BraceletExactColors,
            SequenceKind::NecklaceExactPeriod,
            SequenceKind::BraceletExactPeriod,
            SequenceKind::ClassicalNecklace { colors: 2 },
            SequenceKind::ClassicalBracelet { colors: 7 },
        ];
        for kind in kinds {
            assert_eq!(kind.name().parse::<SequenceKind>().unwrap(), kind);
        }
    }

    #[test]
    fn aliases_and_errors() {
        assert_eq!("K".parse::<SequenceKind>().unwrap(), SequenceKind::Necklace);
        assert_eq!(
            "K'".parse::<SequenceKind>().unwrap(),
            SequenceKind::Bracelet
        );
        assert!("classical-necklace".parse::<SequenceKind>().is_err());
        assert!("classical-necklace:0".parse::<SequenceKind>().is_err());
        assert!("necklace:3".parse::<SequenceKind>().is_err());
        assert!("polytype".parse::<SequenceKind>().is_err());
    }

    #[test]
    fn modifiers() {
        use SequenceKind::*;
        assert_eq!(
            Necklace.with_modifiers(false, true).unwrap(),
            NecklaceExactPeriod
        );
        assert_eq!(
            Bracelet.with_modifiers(true, false).unwrap(),
            BraceletExactColors
        );
        assert!(Necklace.with_modifiers(true, true).is_err());
        assert!(Alpha.with_modifiers(true, false).is_err());
        assert!(ClassicalNecklace { colors: 2 }
            .with_modifiers(false, true)
            .is_err());
    }

    #[test]
    fn values_dispatch() {
        assert_eq!(SequenceKind::Necklace.value(12).unwrap(), 64);
        assert_eq!(SequenceKind::NecklaceExactPeriod.value(4).unwrap(), 1);
        assert_eq!(
            SequenceKind::ClassicalBracelet { colors: 3 }
                .value(3)
                .unwrap(),
            10
        );
    }
}
