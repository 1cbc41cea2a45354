//! Brute-force ground truth for small word lengths.
//!
//! Words are enumerated explicitly, group elements act on them letter by
//! letter, and orbits are counted through canonical representatives. None of
//! this uses the closed forms in [`crate::counts`].

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::count::Count;
use crate::error::{require_positive, Error, Result};
use crate::group::{GroupElement, GroupKind};
use crate::number_theory::divisors;

pub const DEFAULT_CAP: u64 = 16;

/// A cyclic word over the colors `1..=3` with no two cyclically adjacent
/// letters equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorfulWord(Vec<u8>);

impl ColorfulWord {
    pub fn new(letters: Vec<u8>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::InvalidWord("empty word".into()));
        }
        if let Some(bad) = letters.iter().find(|c| !(1..=3).contains(*c)) {
            return Err(Error::InvalidWord(format!(
                "letter {bad} is not a color in 1..=3"
            )));
        }
        if !is_colorful(&letters) {
            return Err(Error::InvalidWord(format!(
                "{} has two cyclically adjacent equal letters",
                Self::render(&letters)
            )));
        }
        Ok(ColorfulWord(letters))
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest `d | n` such that the word repeats with period `d`.
    pub fn minimal_period(&self) -> u64 {
        let n = self.0.len();
        divisors(n as u64)
            .expect("words are non-empty")
            .into_iter()
            .find(|&d| (0..n).all(|i| self.0[i] == self.0[(i + d as usize) % n]))
            .expect("n is always a period")
    }

    fn render(letters: &[u8]) -> String {
        letters.iter().map(|c| char::from(b'0' + c)).collect()
    }
}

impl fmt::Display for ColorfulWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Self::render(&self.0))
    }
}

impl FromStr for ColorfulWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .chars()
            .map(|ch| match ch {
                '1'..='3' => Ok(ch as u8 - b'0'),
                _ => Err(Error::InvalidWord(format!("unexpected character {ch:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        ColorfulWord::new(letters)
    }
}

pub fn is_colorful(letters: &[u8]) -> bool {
    let n = letters.len();
    n > 0 && (0..n).all(|i| letters[i] != letters[(i + 1) % n])
}

/// The word `g.w` with `(g.w)(i) = sigma(w(t^-1(i)))`.
pub fn apply(g: &GroupElement, w: &ColorfulWord) -> Result<ColorfulWord> {
    let n = w.len() as u64;
    if g.n() != n {
        return Err(Error::LengthMismatch {
            expected: g.n(),
            actual: n,
        });
    }
    let letters = (0..n)
        .map(|i| g.sigma().apply(w.0[g.position_inverse(i) as usize]))
        .collect();
    Ok(ColorfulWord(letters))
}

/// Exhaustive enumerator with a configurable length cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    cap: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle { cap: DEFAULT_CAP }
    }
}

impl Oracle {
    pub fn with_cap(cap: u64) -> Self {
        Oracle { cap }
    }

    pub fn cap(&self) -> u64 {
        self.cap
    }

    fn check(&self, n: u64) -> Result<()> {
        require_positive(n, "n")?;
        if n > self.cap {
            return Err(Error::CapExceeded { n, cap: self.cap });
        }
        Ok(())
    }

    /// All colorful words of length `n`, in lexicographic order.
    pub fn enumerate_colorful(&self, n: u64) -> Result<Vec<ColorfulWord>> {
        self.check(n)?;
        let n = n as usize;
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(n);
        extend(&mut prefix, n, &mut out);
        Ok(out)
    }

    /// Number of orbits of colorful words of length `n` under `kind`.
    pub fn orbit_count(&self, n: u64, kind: GroupKind) -> Result<Count> {
        let words = self.enumerate_colorful(n)?;
        let group = kind.elements(n)?;
        Ok(Count::from(distinct_canonical(&words, &group).len() as u64))
    }

    /// Number of colorful words fixed by `g`, by direct scan.
    pub fn fixed_point_scan(&self, g: &GroupElement) -> Result<Count> {
        let words = self.enumerate_colorful(g.n())?;
        let mut fixed = 0u64;
        for w in &words {
            if apply(g, w)? == *w {
                fixed += 1;
            }
        }
        Ok(Count::from(fixed))
    }

    /// Orbits of colorful words whose minimal period is exactly `n`.
    pub fn exact_period_scan(&self, n: u64, kind: GroupKind) -> Result<Count> {
        let words: Vec<ColorfulWord> = self
            .enumerate_colorful(n)?
            .into_iter()
            .filter(|w| w.minimal_period() == n)
            .collect();
        let group = kind.elements(n)?;
        Ok(Count::from(distinct_canonical(&words, &group).len() as u64))
    }
}

fn extend(prefix: &mut Vec<u8>, n: usize, out: &mut Vec<ColorfulWord>) {
    if prefix.len() == n {
        if is_colorful(prefix) {
            out.push(ColorfulWord(prefix.clone()));
        }
        return;
    }
    for color in 1..=3 {
        if prefix.last() == Some(&color) {
            continue;
        }
        prefix.push(color);
        extend(prefix, n, out);
        prefix.pop();
    }
}

/// Lexicographically smallest image of `w` under `group`.
pub fn canonical_form(w: &ColorfulWord, group: &[GroupElement]) -> Result<ColorfulWord> {
    let mut best: Option<ColorfulWord> = None;
    for g in group {
        let image = apply(g, w)?;
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    }
    best.ok_or_else(|| Error::Internal("empty group".into()))
}

fn distinct_canonical(words: &[ColorfulWord], group: &[GroupElement]) -> BTreeSet<ColorfulWord> {
    words
        .par_iter()
        .map(|w| canonical_form(w, group).expect("group matches word length"))
        .collect::<Vec<_>>()
        .into_iter()
        .collect()
}
