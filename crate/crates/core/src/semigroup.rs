//! Numerical semigroups, telescopic sequences and the Feng-Rao order bound.
//!
//! A [`NumericalSemigroup`] is built from a generator set with gcd 1. The
//! membership table is filled by dynamic programming up to the conductor at
//! construction time, after which every query is a table lookup.
//!
//! The order-bound functions follow the usual conventions for one-point
//! codes: the non-gap sequence is 1-indexed with `rho(1) = 0`, `nu(l)` counts
//! ordered non-gap pairs summing to `rho(l + 1)`, and `delta_fr(s)` is the
//! smallest `nu(m)` over `m >= s`.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("generator list is empty")]
    Empty,
    #[error("generators must be positive")]
    ZeroGenerator,
    #[error("generators have gcd {0}, the complement would be infinite")]
    NotCoprime(usize),
    #[error("sequence {0:?} is not telescopic")]
    NotTelescopic(Vec<usize>),
    #[error("the generalized Hermitian semigroup needs r >= 3, got {0}")]
    DegreeTooSmall(u32),
    #[error("index must be at least 1")]
    ZeroIndex,
    #[error("s = {s} lies outside the window {lo} < s <= {hi}, s >= {genus}")]
    OutsideWindow { s: usize, lo: i64, hi: i64, genus: usize },
    #[error("rho(s+1) = {rho} has no j with (j-1)*{a_k} < rho <= j*{a_k} <= {limit}")]
    OutsideLowRange { rho: usize, a_k: usize, limit: usize },
    #[error("the window formula needs a_k = max(A_k) and d_(k-1) > 1")]
    FormulaNotApplicable,
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn gcd_all(xs: &[usize]) -> usize {
    xs.iter().fold(0, |acc, &x| gcd(acc, x))
}

/// A numerical semigroup with finite complement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumericalSemigroup {
    generators: Vec<usize>,
    conductor: usize,
    genus: usize,
    // members[n] for n < conductor
    members: Vec<bool>,
}

impl NumericalSemigroup {
    pub fn new(generators: &[usize]) -> Result<Self, SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::Empty);
        }
        if generators.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        let g = gcd_all(generators);
        if g != 1 {
            return Err(SemigroupError::NotCoprime(g));
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();

        // Once `smallest` consecutive integers are members, everything after is.
        let smallest = gens[0];
        let mut members = vec![true];
        let mut run = 1;
        let mut n = 0;
        while run < smallest {
            n += 1;
            let m = gens.iter().any(|&g| g <= n && members[n - g]);
            members.push(m);
            run = if m { run + 1 } else { 0 };
        }
        // The last `run` entries are members; the conductor is where the run starts.
        let conductor = members.len() - run;
        members.truncate(conductor);
        let genus = members.iter().filter(|&&m| !m).count();
        Ok(NumericalSemigroup { generators: gens, conductor, genus, members })
    }

    /// Sorted, deduplicated generators.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn contains(&self, n: usize) -> bool {
        n >= self.conductor || self.members[n]
    }

    /// Smallest `c` with every integer `>= c` a member.
    pub fn conductor(&self) -> usize {
        self.conductor
    }

    pub fn gaps(&self) -> Vec<usize> {
        (0..self.conductor).filter(|&n| !self.members[n]).collect()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `|S ∩ [0, s]|`.
    pub fn count_up_to(&self, s: usize) -> usize {
        if s >= self.conductor {
            s + 1 - self.genus()
        } else {
            self.members[..=s].iter().filter(|&&m| m).count()
        }
    }

    /// Members in ascending order, without end.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..).filter(move |&n| self.contains(n))
    }

    /// The first `count` non-gaps.
    pub fn nongap_sequence(&self, count: usize) -> NonGapSequence {
        NonGapSequence(self.iter().take(count).collect())
    }

    /// `rho(index)` with `rho(1) = 0`.
    pub fn rho(&self, index: usize) -> Result<usize, SemigroupError> {
        if index == 0 {
            return Err(SemigroupError::ZeroIndex);
        }
        // Past the conductor the index and the value differ by the genus.
        let g = self.genus();
        let below = self.conductor - g;
        if index > below {
            Ok(self.conductor + (index - below - 1))
        } else {
            Ok(self.iter().nth(index - 1).expect("semigroup is infinite"))
        }
    }

    /// 1-based position of a member in the non-gap sequence.
    pub fn index_of(&self, value: usize) -> Option<usize> {
        self.contains(value).then(|| self.count_up_to(value))
    }

    /// Ordered pairs of members summing to `n`.
    pub fn pair_count(&self, n: usize) -> usize {
        (0..=n).filter(|&a| self.contains(a) && self.contains(n - a)).count()
    }

    /// `nu(l) = #{(i, j) : rho(i) + rho(j) = rho(l + 1)}`.
    pub fn nu(&self, l: usize) -> Result<usize, SemigroupError> {
        if l == 0 {
            return Err(SemigroupError::ZeroIndex);
        }
        Ok(self.pair_count(self.rho(l + 1)?))
    }

    /// Feng-Rao designed distance `min{nu(m) : m >= s}` by direct scan.
    ///
    /// For `n >= 2c - 1` every split of `n` with one part a gap leaves the
    /// other part a non-gap, so `nu` grows by one per step from there on and
    /// the scan can stop once `rho(m + 1) >= 2c`.
    pub fn feng_rao(&self, s: usize) -> Result<usize, SemigroupError> {
        if s == 0 {
            return Err(SemigroupError::ZeroIndex);
        }
        let cutoff = 2 * self.conductor;
        let mut best = usize::MAX;
        let mut m = s;
        loop {
            let next = self.rho(m + 1)?;
            best = best.min(self.pair_count(next));
            if next >= cutoff {
                return Ok(best);
            }
            m += 1;
        }
    }

    /// Goppa designed distance `rho(s) - 2g + 2` of the dual of the
    /// evaluation code of `rho(s) Q`. May be non-positive for small `s`.
    pub fn goppa_omega(&self, s: usize) -> Result<i64, SemigroupError> {
        let rho = self.rho(s)? as i64;
        Ok(rho - 2 * self.genus() as i64 + 2)
    }
}

/// Non-gaps in increasing order, read 1-based through [`NonGapSequence::rho`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonGapSequence(Vec<usize>);

impl NonGapSequence {
    pub fn rho(&self, index: usize) -> Option<usize> {
        index.checked_sub(1).and_then(|i| self.0.get(i).copied())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// One stage `i` of the telescopic test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelescopicStage {
    /// `d_i = gcd(a_1, ..., a_i)`.
    pub d: usize,
    /// `A_i = {a_1/d_i, ..., a_i/d_i}`.
    pub scaled: Vec<usize>,
    /// Whether `a_i / d_i` lies in the semigroup generated by `A_(i-1)`.
    /// Always true for the first stage.
    pub member: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TelescopicTrace {
    pub sequence: Vec<usize>,
    pub stages: Vec<TelescopicStage>,
}

impl TelescopicTrace {
    pub fn is_telescopic(&self) -> bool {
        self.stages.iter().all(|s| s.member)
    }
}

/// Runs the telescopic test on `seq` (in the given order), keeping the
/// per-stage data.
pub fn telescopic_trace(seq: &[usize]) -> Result<TelescopicTrace, SemigroupError> {
    if seq.is_empty() {
        return Err(SemigroupError::Empty);
    }
    if seq.contains(&0) {
        return Err(SemigroupError::ZeroGenerator);
    }
    let g = gcd_all(seq);
    if g != 1 {
        return Err(SemigroupError::NotCoprime(g));
    }
    let mut stages = Vec::with_capacity(seq.len());
    for i in 0..seq.len() {
        let d = gcd_all(&seq[..=i]);
        let scaled: Vec<usize> = seq[..=i].iter().map(|&a| a / d).collect();
        let member = if i == 0 {
            true
        } else {
            // Lambda_(i-1) is generated by A_(i-1), whose gcd is 1.
            let prev_d = stages.last().map(|s: &TelescopicStage| s.d).unwrap();
            let prev: Vec<usize> = seq[..i].iter().map(|&a| a / prev_d).collect();
            NumericalSemigroup::new(&prev)?.contains(seq[i] / d)
        };
        stages.push(TelescopicStage { d, scaled, member });
    }
    Ok(TelescopicTrace { sequence: seq.to_vec(), stages })
}

pub fn is_telescopic(seq: &[usize]) -> Result<bool, SemigroupError> {
    Ok(telescopic_trace(seq)?.is_telescopic())
}

/// Closed-form `(conductor, genus)` of a telescopic semigroup:
/// `c - 1 = sum (d_(i-1)/d_i - 1) a_i` with `d_0 = 0`, and `g = c/2`.
pub fn telescopic_conductor_genus(seq: &[usize]) -> Result<(usize, usize), SemigroupError> {
    let trace = telescopic_trace(seq)?;
    if !trace.is_telescopic() {
        return Err(SemigroupError::NotTelescopic(seq.to_vec()));
    }
    let mut sum: i64 = 0;
    let mut prev_d = 0usize;
    for (a, stage) in seq.iter().zip(&trace.stages) {
        sum += ((prev_d / stage.d) as i64 - 1) * *a as i64;
        prev_d = stage.d;
    }
    let conductor = (sum + 1) as usize;
    Ok((conductor, conductor / 2))
}

/// Generators `(2^(r-1), 2^(r-1) + 2^(r-2), 2^r + 1)`: the pole orders of
/// `x`, `y` and `theta` at the point at infinity.
pub fn gh_generators(r: u32) -> Result<[usize; 3], SemigroupError> {
    if r < 3 {
        return Err(SemigroupError::DegreeTooSmall(r));
    }
    let h = 1usize << (r - 1);
    Ok([h, h + h / 2, 2 * h + 1])
}

/// A semigroup together with the telescopic sequence generating it.
#[derive(Debug, Clone)]
pub struct TelescopicSemigroup {
    semigroup: NumericalSemigroup,
    trace: TelescopicTrace,
}

impl TelescopicSemigroup {
    pub fn new(seq: &[usize]) -> Result<Self, SemigroupError> {
        let trace = telescopic_trace(seq)?;
        if !trace.is_telescopic() {
            return Err(SemigroupError::NotTelescopic(seq.to_vec()));
        }
        Ok(TelescopicSemigroup { semigroup: NumericalSemigroup::new(seq)?, trace })
    }

    /// The semigroup `Lambda(r)` of the generalized Hermitian curve, `r >= 3`.
    pub fn gh(r: u32) -> Result<Self, SemigroupError> {
        Self::new(&gh_generators(r)?)
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn trace(&self) -> &TelescopicTrace {
        &self.trace
    }

    pub fn genus(&self) -> usize {
        self.semigroup.genus()
    }

    fn last(&self) -> usize {
        *self.trace.sequence.last().unwrap()
    }

    /// `d_(k-1)`, or 0 for a one-element sequence.
    fn d_prev(&self) -> usize {
        let st = &self.trace.stages;
        if st.len() < 2 {
            0
        } else {
            st[st.len() - 2].d
        }
    }

    fn check_applicable(&self) -> Result<(usize, usize), SemigroupError> {
        let a_k = self.last();
        let d = self.d_prev();
        let max = self.trace.sequence.iter().copied().max().unwrap();
        if d <= 1 || a_k != max {
            return Err(SemigroupError::FormulaNotApplicable);
        }
        Ok((a_k, d))
    }

    /// The half-open window `(lo, hi]` on which [`Self::feng_rao_window`]
    /// applies (together with `s >= g`).
    pub fn window(&self) -> Result<(i64, i64), SemigroupError> {
        let (a_k, d) = self.check_applicable()?;
        let g = self.genus() as i64;
        let hi = 3 * g - 2;
        Ok((hi - (d as i64 - 1) * a_k as i64, hi))
    }

    /// Feng-Rao distance from the telescopic window formula:
    /// the smallest non-gap `>= s + 1 - g`.
    pub fn feng_rao_window(&self, s: usize) -> Result<usize, SemigroupError> {
        let (lo, hi) = self.window()?;
        let g = self.genus();
        let si = s as i64;
        if si <= lo || si > hi || s < g {
            return Err(SemigroupError::OutsideWindow { s, lo, hi, genus: g });
        }
        let target = s + 1 - g;
        Ok((target..).find(|&n| self.semigroup.contains(n)).unwrap())
    }

    /// Feng-Rao distance `j + 1` for low indices, where
    /// `(j-1) a_k < rho(s+1) <= j a_k <= (d_(k-1) - 1) a_k`.
    pub fn feng_rao_low(&self, s: usize) -> Result<usize, SemigroupError> {
        if s == 0 {
            return Err(SemigroupError::ZeroIndex);
        }
        let rho = self.semigroup.rho(s + 1)?;
        self.feng_rao_low_from_rho(rho)
    }

    /// [`Self::feng_rao_low`] keyed by the value `rho(s+1)` directly.
    pub fn feng_rao_low_from_rho(&self, rho: usize) -> Result<usize, SemigroupError> {
        let a_k = self.last();
        let d = self.d_prev();
        let limit = d.saturating_sub(1) * a_k;
        if rho == 0 {
            return Err(SemigroupError::OutsideLowRange { rho, a_k, limit });
        }
        let j = rho.div_ceil(a_k);
        if j * a_k > limit {
            return Err(SemigroupError::OutsideLowRange { rho, a_k, limit });
        }
        Ok(j + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Membership by enumerating i*a + j*b + k*c <= n.
    fn brute_member(gens: &[usize], n: usize) -> bool {
        fn go(gens: &[usize], n: usize) -> bool {
            match gens.split_first() {
                None => n == 0,
                Some((&g, rest)) => (0..=n / g).any(|t| go(rest, n - t * g)),
            }
        }
        go(gens, n)
    }

    fn s469() -> NumericalSemigroup {
        NumericalSemigroup::new(&[4, 6, 9]).unwrap()
    }

    #[test]
    fn membership() {
        let s = s469();
        assert!(s.contains(0));
        assert!(!s.contains(11));
        assert!(s.contains(8));
        for n in 0..60 {
            assert_eq!(s.contains(n), brute_member(&[4, 6, 9], n), "n = {n}");
        }
    }

    #[test]
    fn construction_errors() {
        assert_eq!(NumericalSemigroup::new(&[]), Err(SemigroupError::Empty));
        assert_eq!(NumericalSemigroup::new(&[4, 6]), Err(SemigroupError::NotCoprime(2)));
        assert_eq!(NumericalSemigroup::new(&[0, 1]), Err(SemigroupError::ZeroGenerator));
        assert_eq!(is_telescopic(&[4, 6]), Err(SemigroupError::NotCoprime(2)));
    }

    #[test]
    fn gaps_and_conductor() {
        let s = s469();
        assert_eq!(s.gaps(), vec![1, 2, 3, 5, 7, 11]);
        assert_eq!(s.genus(), 6);
        assert_eq!(s.conductor(), 12);

        let h = NumericalSemigroup::new(&[2, 3]).unwrap();
        assert_eq!(h.gaps(), vec![1]);
        assert_eq!(h.genus(), 1);
        assert_eq!(h.conductor(), 2);

        let n = NumericalSemigroup::new(&[1]).unwrap();
        assert!(n.gaps().is_empty());
        assert_eq!(n.conductor(), 0);
        assert_eq!(n.genus(), 0);
    }

    #[test]
    fn conductor_matches_brute_force() {
        for gens in [vec![3, 5], vec![5, 7, 9], vec![6, 10, 15], vec![8, 12, 17], vec![11, 13]] {
            let s = NumericalSemigroup::new(&gens).unwrap();
            let c = s.conductor();
            if c > 0 {
                assert!(!brute_member(&gens, c - 1));
            }
            assert!((c..c + gens[0]).all(|n| brute_member(&gens, n)));
            let brute_gaps = (0..c).filter(|&n| !brute_member(&gens, n)).count();
            assert_eq!(s.genus(), brute_gaps);
        }
    }

    #[test]
    fn telescopic_examples() {
        for r in 3..=8 {
            assert!(is_telescopic(&gh_generators(r).unwrap()).unwrap());
        }
        let t = telescopic_trace(&[5, 6, 7]).unwrap();
        assert!(!t.is_telescopic());
        assert_eq!(t.stages[1].d, 1);
        assert!(!t.stages[2].member);
        assert!(is_telescopic(&[1]).unwrap());

        let t = telescopic_trace(&[4, 6, 9]).unwrap();
        let ds: Vec<usize> = t.stages.iter().map(|s| s.d).collect();
        assert_eq!(ds, vec![4, 2, 1]);
        assert_eq!(t.stages[1].scaled, vec![2, 3]);
    }

    #[test]
    fn telescopic_closed_forms() {
        assert_eq!(telescopic_conductor_genus(&[4, 6, 9]).unwrap(), (12, 6));
        assert_eq!(telescopic_conductor_genus(&[8, 12, 17]).unwrap(), (56, 28));
        assert_eq!(telescopic_conductor_genus(&[2, 3]).unwrap(), (2, 1));
        assert_eq!(telescopic_conductor_genus(&[1]).unwrap(), (0, 0));
        assert!(matches!(telescopic_conductor_genus(&[5, 6, 7]), Err(SemigroupError::NotTelescopic(_))));
        for gens in [[4, 6, 9], [8, 12, 17], [16, 24, 33]] {
            let s = NumericalSemigroup::new(&gens).unwrap();
            assert_eq!(telescopic_conductor_genus(&gens).unwrap(), (s.conductor(), s.genus()));
        }
    }

    #[test]
    fn gh_generator_values() {
        assert_eq!(gh_generators(3).unwrap(), [4, 6, 9]);
        assert_eq!(gh_generators(4).unwrap(), [8, 12, 17]);
        assert_eq!(gh_generators(5).unwrap(), [16, 24, 33]);
        assert_eq!(gh_generators(2), Err(SemigroupError::DegreeTooSmall(2)));
    }

    #[test]
    fn nongaps() {
        let s = s469();
        assert_eq!(s.nongap_sequence(8).as_slice(), &[0, 4, 6, 8, 9, 10, 12, 13]);
        assert_eq!(s.nongap_sequence(16).rho(16), Some(21));
        assert_eq!(s.rho(16).unwrap(), 21);
        assert_eq!(s.rho(1).unwrap(), 0);
        assert_eq!(s.rho(0), Err(SemigroupError::ZeroIndex));
        let n = NumericalSemigroup::new(&[1]).unwrap();
        assert_eq!(n.nongap_sequence(3).as_slice(), &[0, 1, 2]);
        for i in 1..60 {
            assert_eq!(s.rho(i).unwrap(), s.nongap_sequence(i).rho(i).unwrap());
            assert_eq!(s.index_of(s.rho(i).unwrap()), Some(i));
        }
        assert_eq!(s.index_of(11), None);
    }

    #[test]
    fn nu_examples() {
        let s = s469();
        assert_eq!(s.nu(16).unwrap(), 12);
        assert_eq!(s.nu(1).unwrap(), 2);
        let n = NumericalSemigroup::new(&[1]).unwrap();
        for l in 1..20 {
            assert_eq!(n.nu(l).unwrap(), l + 1);
        }
    }

    #[test]
    fn feng_rao_examples() {
        let s = s469();
        assert_eq!(s.feng_rao(16).unwrap(), 12);
        assert_eq!(s.feng_rao(8).unwrap(), 4);
        assert_eq!(s.feng_rao(12).unwrap(), 8);
        assert_eq!(s.feng_rao(13).unwrap(), 8);
        assert_eq!(s.feng_rao(0), Err(SemigroupError::ZeroIndex));
    }

    #[test]
    fn goppa_omega_examples() {
        let s = s469();
        assert_eq!(s.goppa_omega(16).unwrap(), 11);
        assert_eq!(s.goppa_omega(8).unwrap(), 3);
        assert_eq!(s.goppa_omega(11).unwrap(), 6);
    }

    #[test]
    fn window_formula() {
        let t = TelescopicSemigroup::gh(3).unwrap();
        assert_eq!(t.window().unwrap(), (7, 16));
        assert_eq!(t.feng_rao_window(14).unwrap(), 9);
        assert_eq!(t.feng_rao_window(10).unwrap(), 6);
        assert_eq!(t.feng_rao_window(9).unwrap(), 4);
        assert!(matches!(t.feng_rao_window(7), Err(SemigroupError::OutsideWindow { .. })));
        assert!(matches!(t.feng_rao_window(17), Err(SemigroupError::OutsideWindow { .. })));
        let h = TelescopicSemigroup::new(&[3, 2]).unwrap();
        assert_eq!(h.window(), Err(SemigroupError::FormulaNotApplicable));
    }

    #[test]
    fn low_formula() {
        let t = TelescopicSemigroup::gh(3).unwrap();
        assert_eq!(t.feng_rao_low_from_rho(4).unwrap(), 2);
        assert_eq!(t.feng_rao_low_from_rho(9).unwrap(), 2);
        assert!(matches!(t.feng_rao_low_from_rho(10), Err(SemigroupError::OutsideLowRange { .. })));
        assert!(t.feng_rao_low_from_rho(0).is_err());
        // rho(2) = 4
        assert_eq!(t.feng_rao_low(1).unwrap(), 2);
    }
}
