//! The two explicit Penner families: alternating twists along a chain of
//! puncture-pair curves in `D_n`, and a chain of separating curves in `S_g`.

use super::{Claim, Curve, CurveClass, FamilyInstance, MulticurveConfiguration, TwistWord, Witness};
use crate::error::{Error, Result};
use crate::rational::ratio;
use crate::surface::Surface;

pub const WITNESS: &str = "gamma";

/// `f_n = T_{a_1} T_{a_2}^{-1} T_{a_3} ... T_{a_{n-1}}^{±1}` on `D_n`, where
/// `a_i` encloses punctures `i` and `i + 1`.
///
/// The witness meets only `a_{n-1}`; the seed is `a_1`.
pub fn purebraid_family(n: u32) -> Result<FamilyInstance> {
    if n < 4 {
        return Err(Error::Precondition(format!(
            "pure braid family needs n >= 4, got n = {n}"
        )));
    }
    let k = (n - 1) as usize;
    let curves = (1..=k)
        .map(|i| {
            let class = if i % 2 == 1 { CurveClass::A } else { CurveClass::B };
            Curve::new(format!("a{i}"), class, true)
        })
        .collect();
    let mut m = vec![vec![0u64; k]; k];
    for i in 0..k - 1 {
        m[i][i + 1] = 2;
        m[i + 1][i] = 2;
    }
    let mut gamma = vec![0u64; k];
    gamma[k - 1] = 2;
    let config = MulticurveConfiguration::new(
        Surface::disk(n),
        curves,
        m,
        vec![Witness {
            name: WITNESS.into(),
            intersections: gamma,
        }],
    )?;
    // Leftmost letter acts last, so a_{n-1} acts first.
    let word = TwistWord::new((1..=k).map(|i| format!("a{i}")));
    let mut inst = FamilyInstance::new(config, word, "a1", WITNESS)?;
    inst.claim = Some(Claim {
        family: "purebraid",
        parameter: n,
        j: u64::from(n - 3),
        bound: ratio(2, i64::from(n) - 3),
    });
    Ok(inst)
}

/// `f_g = T_B^{-1} T_A` on `S_g` for the separating chain
/// `a_0 - b_0 - a_1 - b_1 - ... - a_m - b_m` with `m = ⌊g/2⌋`.
///
/// The witness meets the curves of index 0 and of index at least `m - 1`;
/// the seed is `a_i` with `i = ⌈g/4⌉`.
pub fn torelli_family(g: u32) -> Result<FamilyInstance> {
    if g < 13 {
        return Err(Error::Precondition(format!(
            "Torelli family needs g >= 13, got g = {g}"
        )));
    }
    let m = (g / 2) as usize;
    let len = m + 1;
    let a = |k: usize| k;
    let b = |k: usize| len + k;

    let mut curves = Vec::with_capacity(2 * len);
    curves.extend((0..len).map(|k| Curve::new(format!("a{k}"), CurveClass::A, true)));
    curves.extend((0..len).map(|k| Curve::new(format!("b{k}"), CurveClass::B, true)));

    let mut x = vec![vec![0u64; 2 * len]; 2 * len];
    let mut link = |p: usize, q: usize| {
        x[p][q] = 2;
        x[q][p] = 2;
    };
    for k in 0..len {
        link(a(k), b(k));
        if k > 0 {
            link(a(k), b(k - 1));
        }
    }

    let mut gamma = vec![0u64; 2 * len];
    for k in (0..len).filter(|&k| k == 0 || k + 1 >= m) {
        gamma[a(k)] = 2;
        gamma[b(k)] = 2;
    }

    let config = MulticurveConfiguration::new(
        Surface::closed(g),
        curves,
        x,
        vec![Witness {
            name: WITNESS.into(),
            intersections: gamma,
        }],
    )?;

    // T_A acts first, each multitwist in descending index order.
    let word = TwistWord::new(
        (0..len)
            .map(|k| format!("b{k}"))
            .chain((0..len).map(|k| format!("a{k}"))),
    );
    let i = g.div_ceil(4);
    let mut inst = FamilyInstance::new(config, word, format!("a{i}"), WITNESS)?;
    inst.claim = Some(Claim {
        family: "torelli",
        parameter: g,
        j: u64::from(i - 3),
        bound: ratio(8, i64::from(g) - 12),
    });
    Ok(inst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configuration::validate_penner;

    fn degrees(c: &MulticurveConfiguration) -> Vec<usize> {
        let m = c.intersections();
        (0..c.num_curves())
            .map(|i| m[i].iter().filter(|&&x| x > 0).count())
            .collect()
    }

    /// A connected graph on `k` nodes with `k - 1` edges and maximum degree 2
    /// is a path; returns the node order from one end.
    fn path_order(c: &MulticurveConfiguration) -> Option<Vec<usize>> {
        let m = c.intersections();
        let k = c.num_curves();
        let deg = degrees(c);
        let edges: usize = deg.iter().sum::<usize>() / 2;
        if edges != k - 1 || deg.iter().any(|&d| d > 2) {
            return None;
        }
        let start = deg.iter().position(|&d| d <= 1)?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(next) = (0..k).find(|&j| j != prev && m[cur][j] > 0) {
            order.push(next);
            prev = cur;
            cur = next;
        }
        (order.len() == k).then_some(order)
    }

    #[test]
    fn purebraid_examples() {
        let inst = purebraid_family(4).unwrap();
        assert_eq!(inst.claim.as_ref().unwrap().bound, ratio(2, 1));

        let inst = purebraid_family(5).unwrap();
        assert_eq!(inst.config.num_curves(), 4);
        let expect = vec![
            vec![0, 2, 0, 0],
            vec![2, 0, 2, 0],
            vec![0, 2, 0, 2],
            vec![0, 0, 2, 0],
        ];
        assert_eq!(inst.config.intersections(), expect.as_slice());
        assert_eq!(inst.config.witnesses()[0].intersections, vec![0, 0, 0, 2]);
        assert!(validate_penner(&inst.config, &inst.word).unwrap().passed());
        let order: Vec<_> = inst.word.application_order().collect();
        assert_eq!(order, ["a4", "a3", "a2", "a1"]);
        assert!(purebraid_family(3).is_err());
    }

    #[test]
    fn purebraid_classes_alternate() {
        let inst = purebraid_family(8).unwrap();
        for (i, c) in inst.config.curves().iter().enumerate() {
            let expect = if i % 2 == 0 { CurveClass::A } else { CurveClass::B };
            assert_eq!(c.class, expect, "{}", c.name);
        }
    }

    #[test]
    fn torelli_examples() {
        let inst = torelli_family(13).unwrap();
        assert_eq!(inst.seed, "a4");
        let claim = inst.claim.as_ref().unwrap();
        assert_eq!(claim.j, 1);
        assert_eq!(claim.bound, ratio(8, 1));
        assert!(inst.config.curves().iter().all(|c| c.separating));

        let inst = torelli_family(20).unwrap();
        assert_eq!(inst.config.num_curves(), 22);
        assert_eq!(inst.claim.as_ref().unwrap().j, 2);
        assert!(torelli_family(12).is_err());
    }

    #[test]
    fn torelli_word_applies_a_first_descending() {
        let inst = torelli_family(14).unwrap();
        let order: Vec<_> = inst.word.application_order().collect();
        assert_eq!(&order[..3], ["a7", "a6", "a5"]);
        assert_eq!(order[8], "b7");
        assert_eq!(order[15], "b0");
    }

    #[test]
    fn generated_matrices_symmetric_even() {
        let instances = (4..=60)
            .map(purebraid_family)
            .chain((13..=60).map(torelli_family));
        for inst in instances {
            let inst = inst.unwrap();
            let c = &inst.config;
            let m = c.intersections();
            for i in 0..c.num_curves() {
                assert_eq!(m[i][i], 0);
                for j in 0..c.num_curves() {
                    assert_eq!(m[i][j], m[j][i]);
                    assert_eq!(m[i][j] % 2, 0);
                }
            }
            for w in c.witnesses() {
                assert!(w.intersections.iter().all(|x| x % 2 == 0));
            }
            assert!(validate_penner(c, &inst.word).unwrap().passed());
            for letter in &inst.word.letters {
                assert!(c.curve_index(letter).is_ok());
            }
        }
    }

    #[test]
    fn purebraid_graph_is_path() {
        for n in 4..=60 {
            let inst = purebraid_family(n).unwrap();
            let order = path_order(&inst.config).expect("path");
            assert_eq!(order.len(), (n - 1) as usize);
            let names: Vec<_> = order.iter().map(|&i| inst.config.coordinate_name(i)).collect();
            let fwd: Vec<String> = (1..n).map(|i| format!("a{i}")).collect();
            let rev: Vec<String> = fwd.iter().rev().cloned().collect();
            assert!(names == fwd || names == rev);
        }
    }

    #[test]
    fn torelli_graph_is_alternating_path() {
        for g in 13..=60 {
            let inst = torelli_family(g).unwrap();
            let c = &inst.config;
            let order = path_order(c).expect("path");
            assert_eq!(order.len(), 2 * (g as usize / 2) + 2);
            for pair in order.windows(2) {
                assert_ne!(c.curves()[pair[0]].class, c.curves()[pair[1]].class);
            }
        }
    }
}
