use std::collections::HashMap;
use std::hash::Hash;

use super::{FiniteGroup, GroupElement};
use crate::error::{Error, Result};

/// Result of closing a generating set: the table group together with the
/// concrete representative of every element, in canonical order.
#[derive(Clone, Debug)]
pub struct Closure<T> {
    pub group: FiniteGroup,
    pub elements: Vec<T>,
}

fn generator_token(i: usize, count: usize) -> String {
    if count <= 26 {
        char::from(b'a' + i as u8).to_string()
    } else {
        format!("g{i}.")
    }
}

fn word_label(word: &[usize], count: usize) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        out.push_str(&generator_token(word[i], count));
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

/// Closes `generators` under `mul`, starting from `identity`.
///
/// Elements are numbered breadth-first by word length; inside a layer they
/// are sorted by `T`'s ordering. Each element is labelled by the first word
/// that reached it.
pub fn closure<T, F>(generators: &[T], identity: T, mul: F, cap: usize) -> Result<Closure<T>>
where
    T: Clone + Ord + Hash,
    F: Fn(&T, &T) -> T,
{
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut elements = vec![identity.clone()];
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    index.insert(identity, 0);

    let mut layer_start = 0;
    while layer_start < elements.len() {
        let layer_end = elements.len();
        let mut fresh: Vec<(T, Vec<usize>)> = Vec::new();
        let mut fresh_seen: HashMap<T, ()> = HashMap::new();
        for u in layer_start..layer_end {
            for (gi, s) in generators.iter().enumerate() {
                let v = mul(&elements[u], s);
                if index.contains_key(&v) || fresh_seen.contains_key(&v) {
                    continue;
                }
                let mut w = words[u].clone();
                w.push(gi);
                fresh_seen.insert(v.clone(), ());
                fresh.push((v, w));
            }
        }
        if elements.len() + fresh.len() > cap {
            return Err(Error::GroupTooLarge { cap });
        }
        fresh.sort_by(|a, b| a.0.cmp(&b.0));
        for (v, w) in fresh {
            index.insert(v.clone(), elements.len());
            elements.push(v);
            words.push(w);
        }
        layer_start = layer_end;
    }

    let n = elements.len();
    let mut table = vec![0u16; n * n];
    for a in 0..n {
        for b in 0..n {
            let ab = mul(&elements[a], &elements[b]);
            table[a * n + b] = *index.get(&ab).expect("closure is closed under multiplication") as u16;
        }
    }
    let labels = words.iter().map(|w| word_label(w, generators.len())).collect();
    let gens = generators.iter().map(|g| GroupElement::new(index[g])).collect();
    let group = FiniteGroup::from_flat_unchecked(n, table, labels, gens);
    Ok(Closure { group, elements })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_by_addition() {
        let c = closure(&[1u32], 0u32, |a, b| (a + b) % 5, 100).unwrap();
        assert_eq!(c.group.order(), 5);
        assert_eq!(c.elements, vec![0, 1, 2, 3, 4]);
        assert_eq!(c.group.label(GroupElement::new(3)), "a^3");
        c.group.validate().unwrap();
    }

    #[test]
    fn cap_is_enforced() {
        let err = closure(&[1u32], 0u32, |a, b| (a + b) % 50, 10).unwrap_err();
        assert_eq!(err, Error::GroupTooLarge { cap: 10 });
    }

    #[test]
    fn layers_sorted_by_representation() {
        // Z/2 x Z/2 with generators given in "descending" order.
        let c = closure(&[(0u8, 1u8), (1, 0)], (0, 0), |a, b| ((a.0 + b.0) % 2, (a.1 + b.1) % 2), 10).unwrap();
        assert_eq!(c.elements, vec![(0, 0), (0, 1), (1, 0), (1, 1)]);
        assert_eq!(c.group.label(GroupElement::new(3)), "ab");
    }
}
