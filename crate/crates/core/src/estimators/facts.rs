/// Santa Fe fact counter: the smallest positive index absent from `ks`.
///
/// A text mentioning indices `ks` lets the reader recover exactly the first
/// `count_facts(ks) - 1` facts. Zero entries are ignored.
pub fn count_facts(ks: &[u64]) -> u64 {
    // the answer is at most len + 1, so larger indices are irrelevant
    let mut seen = vec![false; ks.len() + 2];
    for &k in ks {
        if let Ok(i) = usize::try_from(k) {
            if i < seen.len() {
                seen[i] = true;
            }
        }
    }
    (1..seen.len()).find(|&i| !seen[i]).unwrap_or(seen.len()) as u64
}
