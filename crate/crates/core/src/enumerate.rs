use rayon::prelude::*;

use crate::error::Error;

/// Default cap on three-valued candidates (`3^16`).
pub const DEFAULT_CAP_3: u64 = 43_046_721;
/// Default cap on four-valued candidates (`4^12`).
pub const DEFAULT_CAP_4: u64 = 16_777_216;
/// Default cap on two-valued candidates (`2^24`).
pub const DEFAULT_CAP_2: u64 = 16_777_216;

/// Enumeration limits shared by every exhaustive search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Limits {
    /// Overrides every per-lattice default cap on the candidate count.
    pub budget: Option<u64>,
    /// Worker threads for candidate checking; `0` or `1` runs inline.
    pub threads: usize,
}

impl Limits {
    pub fn with_budget(budget: u64) -> Self {
        Self {
            budget: Some(budget),
            ..Self::default()
        }
    }

    /// Number of candidates `base^literals`, or `BudgetExceeded`.
    pub(crate) fn candidates(&self, base: u64, literals: usize) -> Result<u64, Error> {
        let cap = self.budget.unwrap_or(match base {
            2 => DEFAULT_CAP_2,
            3 => DEFAULT_CAP_3,
            _ => DEFAULT_CAP_4,
        });
        u32::try_from(literals)
            .ok()
            .and_then(|n| base.checked_pow(n))
            .filter(|&count| count <= cap)
            .ok_or(Error::BudgetExceeded {
                base,
                literals,
                cap,
            })
    }

    /// Applies `check` to every candidate index in `0..count` and keeps the
    /// hits in index order, in parallel when configured.
    pub(crate) fn filter_map<T, F>(&self, count: u64, check: F) -> Result<Vec<T>, Error>
    where
        T: Send,
        F: Fn(u64) -> Result<Option<T>, Error> + Sync + Send,
    {
        if self.threads <= 1 {
            let mut out = Vec::new();
            for idx in 0..count {
                if let Some(hit) = check(idx)? {
                    out.push(hit);
                }
            }
            return Ok(out);
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .expect("failed to start worker threads");
        pool.install(|| {
            let hits: Vec<Option<T>> = (0..count)
                .into_par_iter()
                .map(&check)
                .collect::<Result<_, _>>()?;
            Ok(hits.into_iter().flatten().collect())
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_caps() {
        let l = Limits::default();
        assert_eq!(l.candidates(3, 16), Ok(DEFAULT_CAP_3));
        assert!(matches!(
            l.candidates(3, 17),
            Err(Error::BudgetExceeded { .. })
        ));
        assert_eq!(l.candidates(4, 12), Ok(DEFAULT_CAP_4));
        assert!(l.candidates(4, 13).is_err());
        assert!(l.candidates(3, 1000).is_err());
    }

    #[test]
    fn budget_overrides_caps() {
        let l = Limits::with_budget(8);
        assert_eq!(l.candidates(2, 3), Ok(8));
        assert_eq!(
            l.candidates(3, 2),
            Err(Error::BudgetExceeded {
                base: 3,
                literals: 2,
                cap: 8
            })
        );
    }

    #[test]
    fn parallel_filter_preserves_order() {
        let check = |i: u64| Ok((i % 7 == 3).then_some(i));
        let serial = Limits::default().filter_map(1000, check).unwrap();
        let parallel = Limits {
            threads: 4,
            ..Limits::default()
        }
        .filter_map(1000, check)
        .unwrap();
        assert_eq!(serial, parallel);
    }
}
