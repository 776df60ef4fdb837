//! Level sequences and their multiplicity signatures.
//!
//! Only the pattern of `=` and `<` between consecutive entries of a
//! nondecreasing sequence matters for the combinatorial type, so a sequence
//! reduces to the run lengths of its distinct values. Reversing the run
//! lengths also preserves the type, which gives a second, coarser key.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A nondecreasing sequence of integers and half-integers.
///
/// Values are stored in half-units: `3` means `1.5`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LevelSequence {
    halves: Vec<i64>,
}

impl LevelSequence {
    /// Builds from values in half-units.
    pub fn from_halves(halves: Vec<i64>) -> Result<Self> {
        if halves.is_empty() {
            return Err(Error::parse("", "empty sequence"));
        }
        if let Some(w) = halves.windows(2).find(|w| w[0] > w[1]) {
            return Err(Error::parse(
                format_half(w[1]),
                format!("not nondecreasing (follows {})", format_half(w[0])),
            ));
        }
        Ok(LevelSequence { halves })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::from_halves(values.iter().map(|v| 2 * v).collect())
    }

    pub fn halves(&self) -> &[i64] {
        &self.halves
    }

    pub fn len(&self) -> usize {
        self.halves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.halves.is_empty()
    }

    /// Multiplies every value by `factor > 0`; the type is unchanged.
    pub fn scaled(&self, factor: i64) -> Result<Self> {
        if factor <= 0 {
            return Err(Error::InvalidArgument(format!(
                "scale factor {factor} must be positive"
            )));
        }
        Self::from_halves(self.halves.iter().map(|v| v * factor).collect())
    }

    /// Multiplicities of the distinct values, in increasing order of value.
    pub fn canonicalize(&self) -> Signature {
        Signature {
            mults: run_lengths(&self.halves),
        }
    }
}

/// Run lengths of equal neighbours; the input is assumed sorted.
pub(crate) fn run_lengths<T: PartialEq>(values: &[T]) -> Vec<usize> {
    let mut mults: Vec<usize> = Vec::new();
    for (i, v) in values.iter().enumerate() {
        if i > 0 && values[i - 1] == *v {
            *mults.last_mut().expect("nonempty after first value") += 1;
        } else {
            mults.push(1);
        }
    }
    mults
}

fn format_half(h: i64) -> String {
    if h % 2 == 0 {
        (h / 2).to_string()
    } else {
        format!("{}", h as f64 / 2.0)
    }
}

impl fmt::Display for LevelSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.halves.iter().map(|&h| format_half(h)).collect();
        write!(f, "{}", parts.join(","))
    }
}

fn parse_half(token: &str) -> Result<i64> {
    let t = token.trim();
    let (int_part, frac) = match t.split_once('.') {
        Some((i, f)) => (i, Some(f)),
        None => (t, None),
    };
    let whole: i64 = int_part
        .parse()
        .map_err(|_| Error::parse(t, "not a decimal number"))?;
    let half = match frac {
        None => 0,
        Some(f) if f.is_empty() || !f.chars().all(|c| c.is_ascii_digit()) => {
            return Err(Error::parse(t, "not a decimal number"))
        }
        Some(f) => match f.trim_end_matches('0') {
            "" => 0,
            "5" => 1,
            _ => {
                return Err(Error::parse(
                    t,
                    "only integers and half-integers are allowed",
                ))
            }
        },
    };
    let doubled = whole
        .checked_mul(2)
        .ok_or_else(|| Error::parse(t, "value out of range"))?;
    Ok(if int_part.starts_with('-') {
        doubled - half
    } else {
        doubled + half
    })
}

/// Parses `v1,v2,...` where each value is an integer or ends in `.5`.
pub fn parse_sequence(text: &str) -> Result<LevelSequence> {
    if text.trim().is_empty() {
        return Err(Error::parse(text, "empty sequence"));
    }
    let tokens: Vec<&str> = text.split(',').collect();
    let mut halves = Vec::with_capacity(tokens.len());
    for (i, tok) in tokens.iter().enumerate() {
        let h = parse_half(tok)?;
        if let Some(&prev) = halves.last() {
            if prev > h {
                return Err(Error::parse(
                    tok.trim(),
                    format!(
                        "not nondecreasing (entry {} follows {})",
                        i + 1,
                        tokens[i - 1].trim()
                    ),
                ));
            }
        }
        halves.push(h);
    }
    LevelSequence::from_halves(halves)
}

impl FromStr for LevelSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s)
    }
}

/// Multiplicity vector `(i_1, ..., i_k)` naming the class of
/// `GZ(1^{i_1} 2^{i_2} ... k^{i_k})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Signature {
    mults: Vec<usize>,
}

impl Signature {
    pub fn new(mults: Vec<usize>) -> Result<Self> {
        if mults.is_empty() {
            return Err(Error::InvalidArgument("signature must be nonempty".into()));
        }
        if mults.contains(&0) {
            return Err(Error::InvalidArgument(format!(
                "signature entries must be positive, got {mults:?}"
            )));
        }
        Ok(Signature { mults })
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    /// Number of distinct values.
    pub fn k(&self) -> usize {
        self.mults.len()
    }

    /// Length of the underlying sequence.
    pub fn total_len(&self) -> usize {
        self.mults.iter().sum()
    }

    /// `e_2(i) = sum_{q<r} i_q i_r`.
    pub fn dimension(&self) -> usize {
        let s = self.total_len();
        let sq: usize = self.mults.iter().map(|i| i * i).sum();
        (s * s - sq) / 2
    }

    pub fn reversed(&self) -> Signature {
        let mut mults = self.mults.clone();
        mults.reverse();
        Signature { mults }
    }

    /// Lexicographic minimum of the signature and its reversal.
    pub fn reverse_normal_form(&self) -> Signature {
        let rev = self.reversed();
        if rev.mults < self.mults {
            rev
        } else {
            self.clone()
        }
    }

    /// Whether the polytope is a simplex: `(1, m)` or `(m, 1)`.
    pub fn simplex_dim(&self) -> Option<usize> {
        match self.mults[..] {
            [1, m] | [m, 1] => Some(m),
            _ => None,
        }
    }

    /// The canonical top row `1^{i_1} 2^{i_2} ... k^{i_k}`.
    pub fn top_row(&self) -> Vec<i64> {
        self.mults
            .iter()
            .enumerate()
            .flat_map(|(q, &m)| std::iter::repeat_n(q as i64 + 1, m))
            .collect()
    }

    pub fn to_level_sequence(&self) -> LevelSequence {
        LevelSequence::from_integers(&self.top_row()).expect("top row is nondecreasing")
    }

    /// Parses `i1,i2,...`.
    pub fn parse(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::parse(text, "empty signature"));
        }
        let mults = text
            .split(',')
            .map(|tok| match tok.trim().parse::<usize>() {
                Ok(0) => Err(Error::parse(tok.trim(), "multiplicities must be positive")),
                Ok(m) => Ok(m),
                Err(_) => Err(Error::parse(tok.trim(), "not a positive integer")),
            })
            .collect::<Result<Vec<_>>>()?;
        Signature::new(mults)
    }

    /// All `2^{s-1}` compositions of `s`, in lexicographic order.
    pub fn all_with_total(s: usize) -> Vec<Signature> {
        fn rec(rest: usize, prefix: &mut Vec<usize>, out: &mut Vec<Signature>) {
            if rest == 0 {
                out.push(Signature {
                    mults: prefix.clone(),
                });
                return;
            }
            for first in 1..=rest {
                prefix.push(first);
                rec(rest - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if s > 0 {
            rec(s, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Signature {
    type Error = Error;

    fn try_from(mults: Vec<usize>) -> Result<Self> {
        Signature::new(mults)
    }
}

impl From<Signature> for Vec<usize> {
    fn from(sig: Signature) -> Vec<usize> {
        sig.mults
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Signature::parse(s)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.mults.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sig(m: &[usize]) -> Signature {
        Signature::new(m.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        assert_eq!(parse_sequence("1,2,3").unwrap().halves(), &[2, 4, 6]);
        assert_eq!(
            parse_sequence("1.5,2,2,2.5").unwrap().halves(),
            &[3, 4, 4, 5]
        );
        assert_eq!(
            parse_sequence(" -1.5, -1,0 ").unwrap().halves(),
            &[-3, -2, 0]
        );
        assert_eq!(parse_sequence("2.0,2.50").unwrap().halves(), &[4, 5]);
    }

    #[test]
    fn parse_errors_name_the_token() {
        match parse_sequence("2,1") {
            Err(Error::Parse { token, reason }) => {
                assert_eq!(token, "1");
                assert!(reason.contains("nondecreasing"));
            }
            other => panic!("unexpected {other:?}"),
        }
        match parse_sequence("1,2.25,3") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "2.25"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_sequence("").is_err());
        assert!(parse_sequence("1,,2").is_err());
        assert!(parse_sequence("1,x").is_err());
        assert!(parse_sequence("1,.").is_err());
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(
            parse_sequence("1,2,3").unwrap().canonicalize(),
            sig(&[1, 1, 1])
        );
        for k in 1..6 {
            let mut halves = vec![3];
            halves.extend(std::iter::repeat_n(4, k - 1));
            halves.push(5);
            let seq = LevelSequence::from_halves(halves).unwrap();
            let mut want = vec![1];
            if k > 1 {
                want.push(k - 1);
            }
            want.push(1);
            assert_eq!(seq.canonicalize(), sig(&want));
        }
        assert_eq!(parse_sequence("5,5,5").unwrap().canonicalize(), sig(&[3]));
    }

    #[test]
    fn reverse_normal_form_examples() {
        assert_eq!(sig(&[1, 3, 1]).reverse_normal_form(), sig(&[1, 3, 1]));
        assert_eq!(sig(&[2, 1]).reverse_normal_form(), sig(&[1, 2]));
        assert_eq!(sig(&[1, 1, 3]).reverse_normal_form(), sig(&[1, 1, 3]));
        assert_eq!(sig(&[3, 1, 1]).reverse_normal_form(), sig(&[1, 1, 3]));
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(sig(&[1, 1, 1]).dimension(), 3);
        assert_eq!(sig(&[1, 5, 1]).dimension(), 11);
        assert_eq!(sig(&[4]).dimension(), 0);
        for k in 0..10 {
            assert_eq!(sig(&[1, k + 1, 1]).dimension(), 2 * (k + 1) + 1);
        }
    }

    #[test]
    fn signature_validation_and_parsing() {
        assert!(Signature::new(vec![]).is_err());
        assert!(Signature::new(vec![1, 0]).is_err());
        assert_eq!(Signature::parse("1, 3,1").unwrap(), sig(&[1, 3, 1]));
        assert!(Signature::parse("1,0").is_err());
        assert!(Signature::parse("a").is_err());
        assert!(Signature::parse("").is_err());
        assert_eq!(sig(&[1, 3, 1]).top_row(), vec![1, 2, 2, 2, 3]);
        assert_eq!(sig(&[2, 1]).to_string(), "(2,1)");
    }

    #[test]
    fn compositions_count() {
        for s in 1..=8 {
            let all = Signature::all_with_total(s);
            assert_eq!(all.len(), 1 << (s - 1));
            assert!(all.iter().all(|g| g.total_len() == s));
        }
        assert!(Signature::all_with_total(0).is_empty());
    }

    #[test]
    fn simplex_detection() {
        assert_eq!(sig(&[1, 4]).simplex_dim(), Some(4));
        assert_eq!(sig(&[4, 1]).simplex_dim(), Some(4));
        assert_eq!(sig(&[1, 1]).simplex_dim(), Some(1));
        assert_eq!(sig(&[2, 2]).simplex_dim(), None);
        assert_eq!(sig(&[1, 1, 1]).simplex_dim(), None);
    }

    fn any_sequence() -> impl Strategy<Value = LevelSequence> {
        prop::collection::vec(-6i64..6, 1..9).prop_map(|mut v| {
            v.sort();
            LevelSequence::from_halves(v).unwrap()
        })
    }

    fn any_signature() -> impl Strategy<Value = Signature> {
        prop::collection::vec(1usize..5, 1..6).prop_map(|m| Signature::new(m).unwrap())
    }

    proptest! {
        #[test]
        fn canonicalize_ignores_positive_scaling(seq in any_sequence(), factor in 1i64..5) {
            prop_assert_eq!(seq.scaled(factor).unwrap().canonicalize(), seq.canonicalize());
        }

        #[test]
        fn canonical_total_matches_length(seq in any_sequence()) {
            prop_assert_eq!(seq.canonicalize().total_len(), seq.len());
        }

        #[test]
        fn display_then_parse(seq in any_sequence()) {
            prop_assert_eq!(parse_sequence(&seq.to_string()).unwrap(), seq);
        }

        #[test]
        fn reverse_normal_form_idempotent(g in any_signature()) {
            let n = g.reverse_normal_form();
            prop_assert_eq!(n.reverse_normal_form(), n.clone());
            prop_assert_eq!(g.reversed().reverse_normal_form(), n);
        }

        #[test]
        fn dimension_reversal_invariant(g in any_signature()) {
            prop_assert_eq!(g.dimension(), g.reversed().dimension());
        }
    }
}
