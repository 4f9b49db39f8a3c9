//! Ranks over prime fields, used as an independent cross-check of the
//! integral computation.

use super::IntMatrix;

fn inv_mod(a: u64, p: u64) -> u64 {
    // Fermat; p is prime and small.
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Rank of `m` reduced modulo the prime `p` (`p < 2³²`).
pub fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    assert!((2..(1 << 32)).contains(&p), "prime out of range");
    let pi = ibig::IBig::from(p);
    let mut rows: Vec<Vec<(u32, u64)>> = vec![Vec::new(); m.rows()];
    for (r, c, v) in m.entries() {
        let red = u64::try_from(&(((v % &pi) + &pi) % &pi)).expect("reduced value fits");
        if red != 0 {
            rows[*r].push((*c as u32, red));
        }
    }
    // Gaussian elimination keyed by leading column.
    let mut pivots: std::collections::HashMap<u32, Vec<(u32, u64)>> = std::collections::HashMap::new();
    let mut rank = 0;
    rows.sort_by_key(Vec::len);
    for mut row in rows {
        loop {
            let Some(&(lead, lv)) = row.first() else { break };
            let Some(prow) = pivots.get(&lead) else {
                // Normalize to leading 1.
                let inv = inv_mod(lv, p);
                for e in &mut row {
                    e.1 = e.1 * inv % p;
                }
                pivots.insert(lead, row);
                rank += 1;
                break;
            };
            // row -= lv · prow (prow has leading coefficient 1).
            let mut out = Vec::with_capacity(row.len() + prow.len());
            let (mut i, mut j) = (0, 0);
            while i < row.len() || j < prow.len() {
                if j >= prow.len() || (i < row.len() && row[i].0 < prow[j].0) {
                    out.push(row[i]);
                    i += 1;
                } else if i >= row.len() || prow[j].0 < row[i].0 {
                    out.push((prow[j].0, (p - lv * prow[j].1 % p) % p));
                    j += 1;
                } else {
                    let v = (row[i].1 + p - lv * prow[j].1 % p) % p;
                    if v != 0 {
                        out.push((row[i].0, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
            row = out;
        }
    }
    rank
}
