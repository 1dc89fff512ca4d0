//! Partition classes with initial repetitions, each described by a
//! parameterised layout: a forced block fixed by the parameter `j`, plus
//! blocks of optional parts with a multiplicity rule. One block per class
//! carries the sign: the number of its part sizes used exactly once is the
//! signed statistic whose parity splits the class into even and odd halves.
//!
//! Generation walks the layouts; membership ([`decompose`]) tests every
//! parameter against the same layouts and insists on a unique fit.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::PartitionError;
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    /// Partitions into distinct parts; the statistic is the length.
    DDistinct,
    /// Partitions with initial `k`-repetitions; the statistic is the number
    /// of parts of multiplicity one.
    InitK(u32),
    BEven,
    BOdd,
    C1,
    C2,
    C3,
    C4,
    C5,
    C6,
    C7,
    C8,
}

impl ClassId {
    pub const C_CLASSES: [ClassId; 8] =
        [ClassId::C1, ClassId::C2, ClassId::C3, ClassId::C4, ClassId::C5, ClassId::C6, ClassId::C7, ClassId::C8];

    /// Every class the command line knows about, with `init-2` standing in
    /// for the initial-repetition family.
    pub fn all() -> Vec<ClassId> {
        let mut v = vec![ClassId::DDistinct, ClassId::InitK(2), ClassId::BEven, ClassId::BOdd];
        v.extend(Self::C_CLASSES);
        v
    }

    /// Plain-language membership rule.
    pub fn describe(self) -> String {
        match self {
            ClassId::DDistinct => "all parts distinct".into(),
            ClassId::InitK(k) => format!(
                "any part repeated at least {k} times has every smaller positive integer repeated at least {k} times"
            ),
            ClassId::BEven => "initial 2-repetitions; all parts distinct or the largest repeated part is even".into(),
            ClassId::BOdd => "initial 2-repetitions; the largest repeated part is odd".into(),
            ClassId::C1 | ClassId::C8 => "evens 2..2j exactly four times; distinct odds <= 4j+1; distinct multiples of 4 that are >= 8j+8".into(),
            ClassId::C2 => "evens 2..2j exactly twice; odd parts at most 2j+1; distinct evens > 2j".into(),
            ClassId::C3 => "largest odd part 2j+1 appears at least j times; distinct evens > 2j+1".into(),
            ClassId::C4 => "parts 1..j exactly twice; parts > j distinct".into(),
            ClassId::C5 => "parts 1..j exactly twice plus at most one more copy of each odd; distinct evens >= 2j+2".into(),
            ClassId::C6 => "odds 1..2j-1 four or five times; other odds distinct and <= 4j-1; distinct multiples of 4 that are >= 8j+4".into(),
            ClassId::C7 => "1..j-1 twice and j three times, one more copy allowed for sizes 2 mod 4 below 4j; odds >= 2j+3; distinct evens >= 4j+4".into(),
        }
    }

    /// Builds the layout for parameter `j`, or `None` if `j` is not a valid
    /// parameter for this class.
    fn layout(self, j: u32) -> Option<Layout> {
        use Mult::{Below, Distinct, Free};
        let mut l = Layout::default();
        match self {
            ClassId::DDistinct => {
                if j > 0 {
                    return None;
                }
                l.block(1, 1, None, Distinct, true);
            }
            ClassId::InitK(k) => {
                l.force_range(1, 1, j, k);
                l.block(1, 1, Some(j), Free, false);
                l.block(j + 1, 1, None, Below(k), true);
            }
            ClassId::BEven => {
                l.force_range(1, 1, 2 * j, 2);
                l.block(1, 1, Some(2 * j), Free, false);
                l.block(2 * j + 1, 1, None, Distinct, false);
            }
            ClassId::BOdd => {
                if j == 0 {
                    return None;
                }
                l.force_range(1, 1, 2 * j - 1, 2);
                l.block(1, 1, Some(2 * j - 1), Free, false);
                l.block(2 * j, 1, None, Distinct, false);
            }
            ClassId::C1 | ClassId::C8 => {
                l.force_range(2, 2, 2 * j, 4);
                l.block(1, 2, Some(4 * j + 1), Distinct, false);
                l.block(8 * j + 8, 4, None, Distinct, true);
            }
            ClassId::C2 => {
                l.force_range(2, 2, 2 * j, 2);
                l.block(1, 2, Some(2 * j + 1), Free, false);
                l.block(2 * j + 2, 2, None, Distinct, true);
            }
            ClassId::C3 => {
                if j > 0 {
                    l.forced.push((2 * j + 1, j));
                }
                l.block(1, 2, Some(2 * j + 1), Free, false);
                l.block(2 * j + 2, 2, None, Distinct, true);
            }
            ClassId::C4 => {
                l.force_range(1, 1, j, 2);
                l.block(j + 1, 1, None, Distinct, true);
            }
            ClassId::C5 => {
                l.force_range(1, 1, j, 2);
                l.block(1, 2, None, Distinct, false);
                l.block(2 * j + 2, 2, None, Distinct, true);
            }
            ClassId::C6 => {
                if j > 0 {
                    l.force_range(1, 2, 2 * j - 1, 4);
                    l.block(1, 2, Some(4 * j - 1), Distinct, false);
                }
                l.block(8 * j + 4, 4, None, Distinct, true);
            }
            ClassId::C7 => {
                if j > 0 {
                    l.force_range(1, 1, j - 1, 2);
                    l.forced.push((j, 3));
                    l.block(2, 4, Some(4 * j - 2), Distinct, false);
                }
                l.block(2 * j + 3, 2, None, Free, false);
                l.block(4 * j + 4, 2, None, Distinct, true);
            }
        }
        Some(l)
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassId::DDistinct => f.write_str("d-distinct"),
            ClassId::InitK(k) => write!(f, "init-{k}"),
            ClassId::BEven => f.write_str("b-even"),
            ClassId::BOdd => f.write_str("b-odd"),
            ClassId::C1 => f.write_str("c1"),
            ClassId::C2 => f.write_str("c2"),
            ClassId::C3 => f.write_str("c3"),
            ClassId::C4 => f.write_str("c4"),
            ClassId::C5 => f.write_str("c5"),
            ClassId::C6 => f.write_str("c6"),
            ClassId::C7 => f.write_str("c7"),
            ClassId::C8 => f.write_str("c8"),
        }
    }
}

impl FromStr for ClassId {
    type Err = PartitionError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || PartitionError::UnknownClass(s.to_string());
        Ok(match s.trim() {
            "d-distinct" => ClassId::DDistinct,
            "b-even" => ClassId::BEven,
            "b-odd" => ClassId::BOdd,
            "c1" => ClassId::C1,
            "c2" => ClassId::C2,
            "c3" => ClassId::C3,
            "c4" => ClassId::C4,
            "c5" => ClassId::C5,
            "c6" => ClassId::C6,
            "c7" => ClassId::C7,
            "c8" => ClassId::C8,
            other => {
                let k: u32 = other.strip_prefix("init-").ok_or_else(unknown)?.parse().map_err(|_| unknown())?;
                if k < 2 {
                    return Err(unknown());
                }
                ClassId::InitK(k)
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mult {
    /// 0 or 1
    Distinct,
    /// any count
    Free,
    /// `0..k`
    Below(u32),
}

impl Mult {
    fn allows(self, m: u32) -> bool {
        match self {
            Mult::Distinct => m <= 1,
            Mult::Free => true,
            Mult::Below(k) => m < k,
        }
    }

    fn max(self) -> u32 {
        match self {
            Mult::Distinct => 1,
            Mult::Free => u32::MAX,
            Mult::Below(k) => k - 1,
        }
    }
}

/// Arithmetic progression of part sizes `start, start+step, ...`, capped at
/// `end` inclusive when given.
#[derive(Clone, Copy, Debug)]
struct Block {
    start: u32,
    step: u32,
    end: Option<u32>,
    mult: Mult,
    signed: bool,
}

impl Block {
    fn contains(&self, x: u32) -> bool {
        x >= self.start && (x - self.start).is_multiple_of(self.step) && self.end.is_none_or(|e| x <= e)
    }

    fn parts_upto(&self, limit: u32) -> impl Iterator<Item = u32> + '_ {
        let cap = self.end.map_or(limit, |e| e.min(limit));
        (self.start..=cap).step_by(self.step as usize)
    }
}

#[derive(Clone, Debug, Default)]
struct Layout {
    forced: Vec<(u32, u32)>,
    blocks: Vec<Block>,
}

impl Layout {
    /// Forces `count` copies of `start, start+step, ..., end` (nothing when
    /// `end < start`).
    fn force_range(&mut self, start: u32, step: u32, end: u32, count: u32) {
        if end >= start {
            self.forced.extend((start..=end).step_by(step as usize).map(|p| (p, count)));
        }
    }

    fn block(&mut self, start: u32, step: u32, end: Option<u32>, mult: Mult, signed: bool) {
        if end.is_none_or(|e| e >= start) {
            self.blocks.push(Block { start, step, end, mult, signed });
        }
    }

    fn forced_weight(&self) -> u64 {
        self.forced.iter().map(|&(p, c)| u64::from(p) * u64::from(c)).sum()
    }

    fn forced_count(&self, x: u32) -> u32 {
        self.forced.iter().find(|&&(p, _)| p == x).map_or(0, |&(_, c)| c)
    }

    fn block_of(&self, x: u32) -> Option<&Block> {
        self.blocks.iter().find(|b| b.contains(x))
    }
}

/// Parameter loop bound: every class's forced weight grows with `j`.
fn params(class: ClassId, max_weight: u64) -> impl Iterator<Item = (u32, Layout)> {
    (0u32..)
        .map(move |j| (j, class.layout(j)))
        .take_while(move |(j, l)| match l {
            Some(l) => l.forced_weight() <= max_weight,
            // only b-odd skips j = 0
            None => *j == 0 && class == ClassId::BOdd,
        })
        .filter_map(|(j, l)| l.map(|l| (j, l)))
}

/// A class member split into its forced block, the unsigned optional parts,
/// and the sign-carrying parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ClassDecomposition {
    pub class: ClassId,
    pub parameter: u32,
    pub signed_statistic: u32,
    pub forced: Partition,
    pub free: Partition,
    pub signed: Partition,
}

impl ClassDecomposition {
    pub fn reassemble(&self) -> Partition {
        self.forced.union(&self.free).union(&self.signed)
    }

    pub fn is_even(&self) -> bool {
        self.signed_statistic.is_multiple_of(2)
    }

    /// The statistic under a sign convention.
    pub fn statistic(&self, convention: SignConvention) -> u32 {
        match convention {
            SignConvention::Structural => self.signed_statistic,
            SignConvention::OddTail => {
                self.signed_statistic
                    + self.free.pairs().iter().filter(|&&(p, _)| p % 2 == 1).map(|&(_, m)| m).sum::<u32>()
            }
        }
    }
}

/// Which parts decide whether a member counts as even or odd.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum SignConvention {
    /// Part sizes used once in the signed block.
    #[default]
    Structural,
    /// As `Structural`, plus every odd part outside the forced and signed
    /// blocks, counted with multiplicity. For c7 these are the odd parts
    /// `>= 2j+3`, and this is the convention under which the c7 theorem holds.
    OddTail,
}

impl fmt::Display for SignConvention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SignConvention::Structural => "structural",
            SignConvention::OddTail => "odd-tail",
        })
    }
}

/// Tries every admissible parameter. `Ok(None)` means not a member;
/// more than one fitting parameter is reported as an error.
pub fn decompose(p: &Partition, class: ClassId) -> Result<Option<ClassDecomposition>, PartitionError> {
    let mut found = decompositions(p, class);
    match found.len() {
        0 => Ok(None),
        1 => Ok(found.pop()),
        count => Err(PartitionError::Ambiguous { partition: p.to_string(), class: class.to_string(), count }),
    }
}

/// Every parameter under which `p` fits the class layout.
pub fn decompositions(p: &Partition, class: ClassId) -> Vec<ClassDecomposition> {
    let table = p.multiplicity_table();
    params(class, p.weight()).filter_map(|(j, layout)| fit(&table, class, j, &layout)).collect()
}

fn fit(table: &[u32], class: ClassId, j: u32, layout: &Layout) -> Option<ClassDecomposition> {
    let top = layout.forced.iter().map(|&(x, _)| x as usize).max().unwrap_or(0).max(table.len().saturating_sub(1));
    let mut forced = vec![0u32; top + 1];
    let mut free = vec![0u32; top + 1];
    let mut signed = vec![0u32; top + 1];
    let mut stat = 0;
    for x in 1..=top as u32 {
        let have = table.get(x as usize).copied().unwrap_or(0);
        let need = layout.forced_count(x);
        let rest = have.checked_sub(need)?;
        forced[x as usize] = need;
        if rest == 0 {
            continue;
        }
        let block = layout.block_of(x)?;
        if !block.mult.allows(rest) {
            return None;
        }
        if block.signed {
            signed[x as usize] = rest;
            if rest == 1 {
                stat += 1;
            }
        } else {
            free[x as usize] = rest;
        }
    }
    Some(ClassDecomposition {
        class,
        parameter: j,
        signed_statistic: stat,
        forced: Partition::from_multiplicities(&forced),
        free: Partition::from_multiplicities(&free),
        signed: Partition::from_multiplicities(&signed),
    })
}

/// A member as seen during a walk, before any allocation.
pub struct MemberView<'a> {
    pub parameter: u32,
    pub weight: u64,
    pub signed_statistic: u32,
    layout: &'a Layout,
    choices: &'a [(u32, u32, bool)],
}

impl MemberView<'_> {
    pub fn decomposition(&self, class: ClassId) -> ClassDecomposition {
        let collect = |pred: &dyn Fn(bool) -> bool| {
            let mut parts: Vec<(u32, u32)> =
                self.choices.iter().filter(|c| pred(c.2)).map(|&(p, m, _)| (p, m)).collect();
            parts.sort_unstable_by_key(|&(p, _)| std::cmp::Reverse(p));
            Partition::from_pairs(parts).expect("block parts are disjoint")
        };
        let mut forced: Vec<(u32, u32)> = self.layout.forced.clone();
        forced.sort_unstable_by_key(|&(p, _)| std::cmp::Reverse(p));
        ClassDecomposition {
            class,
            parameter: self.parameter,
            signed_statistic: self.signed_statistic,
            forced: Partition::from_pairs(forced).expect("forced parts are distinct"),
            free: collect(&|s| !s),
            signed: collect(&|s| s),
        }
    }

    pub fn statistic(&self, convention: SignConvention) -> u32 {
        match convention {
            SignConvention::Structural => self.signed_statistic,
            SignConvention::OddTail => {
                self.signed_statistic
                    + self.choices.iter().filter(|&&(p, _, s)| !s && p % 2 == 1).map(|&(_, m, _)| m).sum::<u32>()
            }
        }
    }

    /// Number of different part sizes in the assembled partition.
    pub fn distinct_sizes(&self) -> usize {
        let mut sizes: Vec<u32> = self.layout.forced.iter().map(|&(p, _)| p).collect();
        sizes.extend(self.choices.iter().map(|&(p, _, _)| p));
        sizes.sort_unstable();
        sizes.dedup();
        sizes.len()
    }
}

struct Slot {
    part: u32,
    mult: Mult,
    signed: bool,
}

/// Visits every member of weight at most `max_weight`, parameter by
/// parameter. Order within a parameter is unspecified.
pub fn walk(class: ClassId, max_weight: u64, mut visit: impl FnMut(&MemberView<'_>)) {
    for (j, layout) in params(class, max_weight) {
        let budget = max_weight - layout.forced_weight();
        let mut slots: Vec<Slot> = layout
            .blocks
            .iter()
            .flat_map(|b| {
                b.parts_upto(budget.min(u64::from(u32::MAX)) as u32).map(move |part| Slot {
                    part,
                    mult: b.mult,
                    signed: b.signed,
                })
            })
            .collect();
        slots.sort_unstable_by_key(|s| s.part);
        let mut choices = Vec::new();
        let mut ctx = Walk { slots: &slots, layout: &layout, parameter: j, max_weight, visit: &mut visit };
        ctx.descend(0, budget, 0, &mut choices);
    }
}

struct Walk<'a, F> {
    slots: &'a [Slot],
    layout: &'a Layout,
    parameter: u32,
    max_weight: u64,
    visit: &'a mut F,
}

impl<F: FnMut(&MemberView<'_>)> Walk<'_, F> {
    fn descend(&mut self, idx: usize, budget: u64, stat: u32, choices: &mut Vec<(u32, u32, bool)>) {
        // slots ascend by part, so once one is unaffordable all later ones are
        if idx == self.slots.len() || u64::from(self.slots[idx].part) > budget {
            (self.visit)(&MemberView {
                parameter: self.parameter,
                weight: self.max_weight - budget,
                signed_statistic: stat,
                layout: self.layout,
                choices,
            });
            return;
        }
        let slot = &self.slots[idx];
        let part = u64::from(slot.part);
        let max = u64::from(slot.mult.max()).min(budget / part) as u32;
        self.descend(idx + 1, budget, stat, choices);
        for m in 1..=max {
            choices.push((slot.part, m, slot.signed));
            let stat = stat + u32::from(slot.signed && m == 1);
            self.descend(idx + 1, budget - part * u64::from(m), stat, choices);
            choices.pop();
        }
    }
}

/// Every member of weight at most `max_weight` with its decomposition.
/// Parameter-major; reverse-lexicographic within a parameter.
pub fn generate_class(class: ClassId, max_weight: u64) -> Vec<(Partition, ClassDecomposition)> {
    let mut out: Vec<(Partition, ClassDecomposition)> = Vec::new();
    walk(class, max_weight, |m| {
        let d = m.decomposition(class);
        out.push((d.reassemble(), d));
    });
    out.sort_by_cached_key(|(p, d)| (d.parameter, std::cmp::Reverse(p.parts())));
    out
}

/// Members of exactly weight `n`, in reverse-lexicographic order.
pub fn members_of_weight(class: ClassId, n: u64) -> Vec<(Partition, ClassDecomposition)> {
    let mut out: Vec<_> = generate_class(class, n).into_iter().filter(|(p, _)| p.weight() == n).collect();
    out.sort_by_cached_key(|(p, _)| std::cmp::Reverse(p.parts()));
    out
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SignedCount {
    pub even_count: u64,
    pub odd_count: u64,
}

impl SignedCount {
    pub fn total(&self) -> u64 {
        self.even_count + self.odd_count
    }

    pub fn difference(&self) -> i64 {
        self.even_count as i64 - self.odd_count as i64
    }
}

/// Even/odd counts at every weight `0..=max_weight`.
pub fn signed_counts(class: ClassId, max_weight: u64) -> Vec<SignedCount> {
    signed_counts_with(class, max_weight, SignConvention::Structural)
}

pub fn signed_counts_with(class: ClassId, max_weight: u64, convention: SignConvention) -> Vec<SignedCount> {
    let mut out = vec![SignedCount::default(); max_weight as usize + 1];
    walk(class, max_weight, |m| {
        let c = &mut out[m.weight as usize];
        if m.statistic(convention) % 2 == 0 {
            c.even_count += 1;
        } else {
            c.odd_count += 1;
        }
    });
    out
}

pub fn signed_count(class: ClassId, n: u64) -> SignedCount {
    signed_counts(class, n)[n as usize]
}

/// `sum_n (even_count(n) - odd_count(n)) q^n` from enumeration.
pub fn signed_gf(class: ClassId, order: usize) -> crate::series::TruncatedSeries {
    signed_gf_with(class, order, SignConvention::Structural)
}

pub fn signed_gf_with(class: ClassId, order: usize, convention: SignConvention) -> crate::series::TruncatedSeries {
    assert!(order >= 1);
    let counts = signed_counts_with(class, order as u64 - 1, convention);
    crate::series::TruncatedSeries::from_coeffs(counts.iter().map(|c| c.difference().into()).collect())
}

/// Class sizes at every weight `0..=max_weight`.
pub fn class_counts(class: ClassId, max_weight: u64) -> Vec<u64> {
    signed_counts(class, max_weight).iter().map(SignedCount::total).collect()
}

/// `D_e(m, n) - D_o(m, n)` over partitions with initial 2-repetitions, where
/// `m` counts different part sizes and parity is that of the number of parts
/// with multiplicity one. Every visited cell is present, zero or not.
pub fn andrews_d_table(max_n: u64) -> BTreeMap<(usize, u64), i64> {
    let mut table = BTreeMap::new();
    walk(ClassId::InitK(2), max_n, |m| {
        let cell = table.entry((m.distinct_sizes(), m.weight)).or_insert(0i64);
        *cell += if m.signed_statistic % 2 == 0 { 1 } else { -1 };
    });
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn strings(v: &[(Partition, ClassDecomposition)]) -> Vec<String> {
        v.iter().map(|(p, _)| p.to_string()).collect()
    }

    #[test]
    fn blocks_are_disjoint_in_every_layout() {
        for class in ClassId::all().into_iter().chain([ClassId::InitK(3)]) {
            for (j, layout) in params(class, 80) {
                for x in 1..200 {
                    let n = layout.blocks.iter().filter(|b| b.contains(x)).count();
                    assert!(n <= 1, "{class} j={j} part {x} in {n} blocks");
                }
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&p("5,1^2"), ClassId::C4).unwrap().unwrap();
        assert_eq!((d.parameter, d.signed_statistic), (1, 1));
        assert_eq!(d.signed, p("5"));
        let d = decompose(&p("9,5,4^4,2^4,1"), ClassId::C8).unwrap().unwrap();
        assert_eq!((d.parameter, d.signed_statistic), (2, 0));
        assert_eq!(d.forced, p("4^4,2^4"));
        assert_eq!(d.free, p("9,5,1"));
        assert_eq!(decompose(&p("3^2,1"), ClassId::C2).unwrap(), None);
    }

    #[test]
    fn c4_weight_seven_matches_worked_example() {
        let got = members_of_weight(ClassId::C4, 7);
        assert_eq!(strings(&got), ["7", "6,1", "5,2", "5,1^2", "4,3", "4,2,1", "3,2,1^2"]);
        assert_eq!(signed_count(ClassId::C4, 7), SignedCount { even_count: 4, odd_count: 3 });
    }

    #[test]
    fn c8_weight_39_matches_worked_example() {
        let got = members_of_weight(ClassId::C8, 39);
        assert_eq!(strings(&got), ["28,3,2^4", "9,5,4^4,2^4,1", "7,5,4^4,3,2^4"]);
        assert_eq!(signed_count(ClassId::C8, 39), SignedCount { even_count: 2, odd_count: 1 });
        let by_param: Vec<u32> = generate_class(ClassId::C8, 39)
            .iter()
            .filter(|(p, _)| p.weight() == 39)
            .map(|(_, d)| d.parameter)
            .collect();
        assert_eq!(by_param, [1, 2, 2]);
    }

    #[test]
    fn weight_zero_is_the_empty_partition() {
        for class in ClassId::all() {
            let got = generate_class(class, 0);
            if class == ClassId::BOdd {
                assert!(got.is_empty());
                continue;
            }
            assert_eq!(got.len(), 1, "{class}");
            let (part, d) = &got[0];
            assert!(part.is_empty());
            assert_eq!((d.parameter, d.signed_statistic), (0, 0));
        }
    }

    #[test]
    fn c2_weight_ten() {
        let c = signed_count(ClassId::C2, 10);
        assert_eq!(c.difference(), 1);
        assert_eq!(c.total(), 15);
        // (5^2) fits no layout
        assert_eq!(decompose(&p("5^2"), ClassId::C2).unwrap(), None);
    }

    #[test]
    fn c7_small_weights() {
        assert_eq!(class_counts(ClassId::C7, 3), [1, 0, 0, 2]);
        let three: Vec<String> = strings(&members_of_weight(ClassId::C7, 3));
        assert_eq!(three, ["3", "1^3"]);
        // the 2 mod 4 singleton below 4j+4 is not signed
        let d = decompose(&p("2^4,1^2"), ClassId::C7).unwrap().unwrap();
        assert_eq!((d.parameter, d.signed_statistic), (2, 0));
    }

    #[test]
    fn andrews_table_small_cells() {
        let t = andrews_d_table(6);
        assert_eq!(t[&(0, 0)], 1);
        assert_eq!(t[&(1, 1)], -1);
        assert_eq!(t[&(2, 3)], 1);
        assert_eq!(t[&(3, 6)], -1);
        assert_eq!(t[&(1, 2)], 0);
    }

    #[test]
    fn class_ids_parse() {
        for c in ClassId::all() {
            assert_eq!(c.to_string().parse::<ClassId>().unwrap(), c);
        }
        assert_eq!("init-3".parse::<ClassId>().unwrap(), ClassId::InitK(3));
        assert!("init-1".parse::<ClassId>().is_err());
        assert!("c9".parse::<ClassId>().is_err());
    }
}
