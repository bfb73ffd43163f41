use std::collections::HashMap;

use perigraph::processes::{
    gen_santa_fe_with, read_pairs, read_sequence, write_pairs, write_sequence, SEP,
};
use perigraph::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

const DRAWS: usize = 1_000_000;

fn zipf_counts(alpha: f64, seed: u64) -> (ZipfSampler, Vec<u64>) {
    let sampler = ZipfSampler::new(alpha).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // slot 0 collects every k > 20
    let mut counts = vec![0u64; 21];
    for _ in 0..DRAWS {
        let k = sampler.sample(&mut rng);
        counts[if k <= 20 { k as usize } else { 0 }] += 1;
    }
    (sampler, counts)
}

#[test]
fn zipf_chi_square_below_critical_value() {
    let critical = ChiSquared::new(20.0).unwrap().inverse_cdf(0.999);
    for alpha in [1.5, 2.0, 3.0] {
        let (sampler, counts) = zipf_counts(alpha, 11);
        let head: f64 = (1..=20).map(|k| sampler.pmf(k)).sum();
        let mut stat = 0.0;
        for (k, &c) in counts.iter().enumerate() {
            let p = if k == 0 {
                1.0 - head
            } else {
                sampler.pmf(k as u64)
            };
            let e = p * DRAWS as f64;
            stat += (c as f64 - e).powi(2) / e;
        }
        assert!(stat < critical, "alpha={alpha}: {stat} >= {critical}");
    }
}

#[test]
fn zipf_frequencies_within_three_sigma() {
    let (sampler, counts) = zipf_counts(2.0, 3);
    for k in 1..=10u64 {
        let p = sampler.pmf(k);
        let sd = (DRAWS as f64 * p * (1.0 - p)).sqrt();
        let dev = (counts[k as usize] as f64 - DRAWS as f64 * p).abs();
        assert!(dev <= 3.0 * sd, "k={k}: deviation {dev} > 3*{sd}");
    }
}

#[test]
fn zipf_analytic_values() {
    let s = ZipfSampler::new(2.0).unwrap();
    assert!((s.pmf(1) - 6.0 / std::f64::consts::PI.powi(2)).abs() < 1e-9);
    assert!((s.pmf(2) / s.pmf(1) - 0.25).abs() < 1e-12);
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    assert!(sample_zipf(1.0, &mut rng).is_err());
    assert!(sample_zipf(0.5, &mut rng).is_err());
}

#[test]
fn fact_bits_are_balanced_and_seeded() {
    let ones: u32 = (1..=100_000u64).map(|k| u32::from(fact_bit(k, 42))).sum();
    let frac = f64::from(ones) / 1e5;
    assert!((0.49..=0.51).contains(&frac), "{frac}");
    assert_eq!(fact_bit(5, 9), fact_bit(5, 9));
    assert!((1..=64).any(|k| fact_bit(k, 1) != fact_bit(k, 2)));
}

#[test]
fn santa_fe_first_index_frequency() {
    let pairs = gen_santa_fe(SantaFeParams::new(2.0, 8, 1).unwrap(), 10_000).unwrap();
    let ones = pairs.iter().filter(|p| p.k == 1).count() as f64 / 1e4;
    assert!((ones - 0.608).abs() <= 0.02, "{ones}");
    assert!(gen_santa_fe(SantaFeParams::new(2.0, 8, 1).unwrap(), 0)
        .unwrap()
        .is_empty());
    assert!(SantaFeParams::new(1.0, 0, 0).is_err());
}

#[test]
fn santa_fe_never_contradicts_itself() {
    let sampler = ZipfSampler::new(1.5).unwrap();
    for seed in 0..20 {
        let pairs = gen_santa_fe_with(&sampler, SantaFeParams::new(1.5, seed, 99).unwrap(), 5_000);
        let mut seen = HashMap::new();
        for p in &pairs {
            assert_eq!(*seen.entry(p.k).or_insert(p.bit), p.bit);
            assert!(p.k >= 1 && p.bit <= 1);
        }
    }
}

#[test]
fn generators_are_seed_deterministic() {
    let params = SantaFeParams::new(2.0, 123, 4).unwrap();
    assert_eq!(
        gen_santa_fe(params, 3000).unwrap(),
        gen_santa_fe(params, 3000).unwrap()
    );
    let other = SantaFeParams::new(2.0, 124, 4).unwrap();
    assert_ne!(
        gen_santa_fe(params, 3000).unwrap(),
        gen_santa_fe(other, 3000).unwrap()
    );

    let spec = MarkovSpec::binary_symmetric(0.9).unwrap();
    assert_eq!(
        gen_markov(&spec, 4096, 5).unwrap(),
        gen_markov(&spec, 4096, 5).unwrap()
    );
}

#[test]
fn binarization_examples_and_round_trip() {
    let enc = binarize_santa_fe(&[SantaFePair { k: 1, bit: 0 }, SantaFePair { k: 5, bit: 1 }]);
    assert_eq!(enc.alphabet_size(), 3);
    assert_eq!(enc.symbols(), &[1, 0, SEP, 1, 0, 1, 1, SEP]);

    let sampler = ZipfSampler::new(1.5).unwrap();
    for seed in 0..1000 {
        let params = SantaFeParams::new(1.5, seed, 7).unwrap();
        let pairs = gen_santa_fe_with(&sampler, params, 50);
        assert_eq!(decode_santa_fe(&binarize_santa_fe(&pairs)).unwrap(), pairs);
    }
}

#[test]
fn markov_examples() {
    let constant = gen_markov(&MarkovSpec::iid(vec![1.0, 0.0]).unwrap(), 100, 0).unwrap();
    assert!(constant.symbols().iter().all(|&s| s == 0));

    let cycle =
        MarkovSpec::new(1, 2, vec![vec![0.0, 1.0], vec![1.0, 0.0]], vec![1.0, 0.0]).unwrap();
    let x = gen_markov(&cycle, 10, 3).unwrap();
    assert_eq!(x.symbols(), &[0, 1, 0, 1, 0, 1, 0, 1, 0, 1]);

    let fair = gen_markov(&MarkovSpec::iid(vec![0.5, 0.5]).unwrap(), 100_000, 17).unwrap();
    let zeros = fair.symbols().iter().filter(|&&s| s == 0).count() as f64 / 1e5;
    assert!((zeros - 0.5).abs() <= 0.01, "{zeros}");

    assert!(MarkovSpec::new(1, 2, vec![vec![0.5, 0.6], vec![1.0, 0.0]], vec![1.0, 0.0]).is_err());
    assert!(MarkovSpec::iid(vec![-0.1, 1.1]).is_err());
}

#[test]
fn file_formats_round_trip() {
    let x = SymbolSeq::from_letters("abcabca", 3).unwrap();
    let mut buf = Vec::new();
    write_sequence(&mut buf, &x).unwrap();
    assert!(buf.starts_with(b"D=3\n"));
    assert_eq!(read_sequence(&buf[..]).unwrap(), x);

    let pairs = gen_santa_fe(SantaFeParams::new(2.0, 1, 1).unwrap(), 200).unwrap();
    let mut buf = Vec::new();
    write_pairs(&mut buf, &pairs).unwrap();
    assert_eq!(read_pairs(&buf[..]).unwrap(), pairs);
}
