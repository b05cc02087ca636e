//! Bailey pairs, the transforms acting on them, and the finite-sum sides of
//! the ten multisum evaluations.

mod keychain;
mod pairs;
mod theorems;
mod transforms;

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::arith::{LaurentPoly, RationalFunction};

pub use keychain::{keychain_sides, verify_keychain, Keychain};
pub use pairs::{bp_alpha, bp_beta, verify_pair};
pub(crate) use pairs::hat_part;
pub use theorems::{family_of_theorem, family_rhs, family_rhs_laurent, verify_theorem_family};
pub use transforms::{
    bailey_lattice, bailey_lemma, bailey_lemma_iterated, dagger_transform, dual_pair, hat_transform, negate_alpha,
    star_transform,
};

/// The relative parameter `a` of a Bailey pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Rel {
    Q,
    Q2,
}

impl Rel {
    /// The exponent `e` with `a = q^e`.
    pub fn exponent(self) -> i64 {
        match self {
            Rel::Q => 1,
            Rel::Q2 => 2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Rel::Q => "q",
            Rel::Q2 => "q^2",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PairId {
    Bp(u8),
    Derived(String),
}

impl fmt::Display for PairId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairId::Bp(i) => write!(f, "BP{i}"),
            PairId::Derived(s) => write!(f, "{s}"),
        }
    }
}

type SeqFn = dyn Fn(u64) -> RationalFunction + Send + Sync;

/// A memoized sequence `k ↦ RationalFunction`.
#[derive(Clone)]
pub struct Sequence {
    f: Arc<SeqFn>,
    cache: Arc<Mutex<HashMap<u64, RationalFunction>>>,
}

impl Sequence {
    pub fn new(f: impl Fn(u64) -> RationalFunction + Send + Sync + 'static) -> Self {
        Self {
            f: Arc::new(f),
            cache: Arc::new(Mutex::new(HashMap::new())),
        }
    }

    pub fn from_laurent(f: impl Fn(u64) -> LaurentPoly + Send + Sync + 'static) -> Self {
        Self::new(move |k| RationalFunction::from_laurent(f(k)))
    }

    pub fn get(&self, k: u64) -> RationalFunction {
        if let Some(v) = self.cache.lock().unwrap().get(&k) {
            return v.clone();
        }
        let v = (self.f)(k);
        self.cache.lock().unwrap().insert(k, v.clone());
        v
    }
}

#[derive(Clone)]
pub struct BaileyPair {
    pub id: PairId,
    pub rel: Rel,
    pub alpha: Sequence,
    pub beta: Sequence,
}

impl BaileyPair {
    /// One of the pairs BP1..BP10.
    pub fn standard(i: u8) -> crate::Result<Self> {
        pairs::standard(i)
    }

    pub fn alpha(&self, k: u64) -> RationalFunction {
        self.alpha.get(k)
    }

    pub fn beta(&self, k: u64) -> RationalFunction {
        self.beta.get(k)
    }
}

impl fmt::Debug for BaileyPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BaileyPair({}, rel {})", self.id, self.rel.name())
    }
}
