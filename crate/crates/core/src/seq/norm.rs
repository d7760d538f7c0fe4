//! The norm functional N(f) = sup { r · #{x : f(x) ≥ r} } on
//! non-negative finite sequences. On finite data the supremum is attained
//! at one of the distinct entry values.

use super::{SeqError, TruncatedSequence};
use num_rational::BigRational;
use num_traits::Zero;
use std::collections::BTreeSet;

pub fn levin_norm(f: &TruncatedSequence) -> Result<BigRational, SeqError> {
    let entries: Vec<BigRational> = match f {
        TruncatedSequence::Exact(v) => v.clone(),
        TruncatedSequence::Float(v) => {
            // exact thresholds only make sense for exact data; floats are
            // converted through their decimal expansion
            v.iter()
                .map(|x| {
                    BigRational::from_float(*x).ok_or(SeqError::Parse(format!(
                        "non-finite entry {x}"
                    )))
                })
                .collect::<Result<_, _>>()?
        }
    };
    for (i, e) in entries.iter().enumerate() {
        if e < &BigRational::zero() {
            return Err(SeqError::NegativeEntry(i + 1));
        }
    }
    let thresholds: BTreeSet<&BigRational> = entries.iter().collect();
    let mut best = BigRational::zero();
    for r in thresholds {
        if r.is_zero() {
            continue;
        }
        let count = entries.iter().filter(|e| *e >= r).count();
        let candidate = r * BigRational::from_integer(count.into());
        if candidate > best {
            best = candidate;
        }
    }
    Ok(best)
}
