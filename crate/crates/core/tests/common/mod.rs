//! Class membership written out rule by rule from the structural
//! definitions, without the library's layouts.

#![allow(dead_code)]

use qpart_core::{ClassId, Partition};

/// Every `(j, statistic)` under which `p` satisfies the class rules.
pub fn fits(p: &Partition, class: ClassId) -> Vec<(u32, u32)> {
    let top = p.largest_part();
    (0..=top.max(1)).filter_map(|j| fits_at(p, class, j)).collect()
}

/// Statistic that also counts odd parts `>= 2j+3` of a c7 member.
pub fn c7_odd_tail(p: &Partition, j: u32, stat: u32) -> u32 {
    stat + p.pairs().iter().filter(|&&(x, _)| x % 2 == 1 && x >= 2 * j + 3).map(|&(_, c)| c).sum::<u32>()
}

fn all_present(p: &Partition, sizes: impl Iterator<Item = u32>, ok: impl Fn(u32, u32) -> bool) -> bool {
    sizes.into_iter().all(|x| ok(x, p.multiplicity(x)))
}

fn fits_at(p: &Partition, class: ClassId, j: u32) -> Option<(u32, u32)> {
    let pairs = p.pairs();
    let mut stat = 0;
    match class {
        ClassId::DDistinct => {
            if j != 0 || !p.is_distinct() {
                return None;
            }
            stat = p.len();
        }
        ClassId::InitK(k) => {
            if !all_present(p, 1..=j, |_, c| c >= k) {
                return None;
            }
            for &(x, c) in pairs {
                if x > j {
                    if c >= k {
                        return None;
                    }
                    stat += u32::from(c == 1);
                }
            }
        }
        ClassId::BEven | ClassId::BOdd => {
            let r = match class {
                ClassId::BEven => 2 * j,
                _ if j == 0 => return None,
                _ => 2 * j - 1,
            };
            if !all_present(p, 1..=r, |_, c| c >= 2) || pairs.iter().any(|&(x, c)| x > r && c > 1) {
                return None;
            }
        }
        ClassId::C1 | ClassId::C8 => {
            if !all_present(p, (2..=2 * j).step_by(2), |_, c| c == 4) {
                return None;
            }
            for &(x, c) in pairs {
                let ok = if x % 2 == 0 && x <= 2 * j {
                    true
                } else if x % 2 == 1 {
                    x <= 4 * j + 1 && c == 1
                } else {
                    stat += 1;
                    x % 4 == 0 && x >= 8 * j + 8 && c == 1
                };
                if !ok {
                    return None;
                }
            }
        }
        ClassId::C2 => {
            if !all_present(p, (2..=2 * j).step_by(2), |_, c| c == 2) {
                return None;
            }
            for &(x, c) in pairs {
                let ok = if x % 2 == 1 {
                    x <= 2 * j + 1
                } else if x <= 2 * j {
                    true
                } else {
                    stat += 1;
                    c == 1
                };
                if !ok {
                    return None;
                }
            }
        }
        ClassId::C3 => {
            if j > 0 && p.multiplicity(2 * j + 1) < j {
                return None;
            }
            for &(x, c) in pairs {
                let ok = if x % 2 == 1 {
                    x <= 2 * j + 1
                } else {
                    stat += 1;
                    x >= 2 * j + 2 && c == 1
                };
                if !ok {
                    return None;
                }
            }
        }
        ClassId::C4 => {
            if !all_present(p, 1..=j, |_, c| c == 2) {
                return None;
            }
            for &(x, c) in pairs {
                if x > j {
                    if c != 1 {
                        return None;
                    }
                    stat += 1;
                }
            }
        }
        ClassId::C5 => {
            if !all_present(p, 1..=j, |x, c| c == 2 || (x % 2 == 1 && c == 3)) {
                return None;
            }
            for &(x, c) in pairs {
                if x <= j {
                    continue;
                }
                let ok = if x % 2 == 1 {
                    c == 1
                } else {
                    stat += 1;
                    x >= 2 * j + 2 && c == 1
                };
                if !ok {
                    return None;
                }
            }
        }
        ClassId::C6 => {
            if !all_present(p, (1..2 * j).step_by(2), |_, c| c == 4 || c == 5) {
                return None;
            }
            for &(x, c) in pairs {
                let ok = if x % 2 == 1 && x < 2 * j {
                    true
                } else if x % 2 == 1 {
                    x < 4 * j && c == 1
                } else {
                    stat += 1;
                    x % 4 == 0 && x >= 8 * j + 4 && c == 1
                };
                if !ok {
                    return None;
                }
            }
        }
        ClassId::C7 => {
            let base = |i: u32| if i < j { 2 } else { 3 };
            if !all_present(p, 1..=j, |i, c| c == base(i) || (i % 4 == 2 && c == base(i) + 1)) {
                return None;
            }
            for &(x, c) in pairs {
                if x <= j {
                    continue;
                }
                let ok = if x % 2 == 1 {
                    x >= 2 * j + 3
                } else if x % 4 == 2 && x + 2 <= 4 * j {
                    c == 1
                } else {
                    stat += 1;
                    x >= 4 * j + 4 && c == 1
                };
                if !ok {
                    return None;
                }
            }
        }
    }
    Some((j, stat))
}
