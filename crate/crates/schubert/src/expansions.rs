//! The generating functions of `R(w)` and their positive expansions: the
//! Stanley symmetric function with its Schur expansion, and the Schubert
//! polynomial with its Demazure expansion.

use crate::compositions::{Partition, WeakComposition, WeakDescent};
use crate::descents::{descent_composition, weak_descent_composition};
use crate::droplift::{is_yamanouchi, lift_canonical, word_stack};
use crate::perm::Permutation;
use crate::poly::{fundamental_qsym, fundamental_slide_descent, Polynomial};
use crate::tableau::YoungTableau;
use crate::word::{for_each_reduced_word, ReducedWord};
use std::collections::BTreeMap;

/// The Stanley symmetric function truncated to `m` variables: the sum of
/// `F_Des(rho)` over reduced words of `w`.
pub fn stanley_function(w: &Permutation, m: usize) -> Polynomial {
    let mut out = Polynomial::zero();
    for_each_reduced_word(w, &mut |letters| {
        let rho = ReducedWord::from_letters_unchecked(letters.to_vec());
        out += &fundamental_qsym(&descent_composition(&rho), m);
    });
    out
}

/// The Schubert polynomial: the sum of slide polynomials of the weak
/// descent compositions over reduced words; virtual words contribute zero.
pub fn schubert(w: &Permutation) -> Polynomial {
    let mut out = Polynomial::zero();
    for_each_reduced_word(w, &mut |letters| {
        let rho = ReducedWord::from_letters_unchecked(letters.to_vec());
        out += &fundamental_slide_descent(&weak_descent_composition(&rho));
    });
    out
}

/// The multiset of descent compositions of reduced words, i.e. the
/// fundamental expansion of the Stanley symmetric function.
pub fn fundamental_expansion(w: &Permutation) -> BTreeMap<crate::compositions::Composition, u32> {
    let mut out = BTreeMap::new();
    for_each_reduced_word(w, &mut |letters| {
        let rho = ReducedWord::from_letters_unchecked(letters.to_vec());
        *out.entry(descent_composition(&rho)).or_insert(0) += 1;
    });
    out
}

/// The multiset of slide indices of the Schubert polynomial: the
/// non-virtual weak descent compositions over reduced words.
pub fn slide_expansion(w: &Permutation) -> BTreeMap<WeakComposition, u32> {
    let mut out = BTreeMap::new();
    for_each_reduced_word(w, &mut |letters| {
        let rho = ReducedWord::from_letters_unchecked(letters.to_vec());
        if let WeakDescent::Des(a) = weak_descent_composition(&rho) {
            *out.entry(a).or_insert(0) += 1;
        }
    });
    out
}

/// The Schur expansion of the Stanley symmetric function: shapes of the
/// reduced words whose descent tableau is an increasing Young tableau.
pub fn schur_expansion(w: &Permutation) -> BTreeMap<Partition, u32> {
    let mut out = BTreeMap::new();
    for_each_reduced_word(w, &mut |letters| {
        let rho = ReducedWord::from_letters_unchecked(letters.to_vec());
        let stack = word_stack(&rho);
        if YoungTableau::from_rows(stack).is_increasing() {
            // the descent composition of an increasing word is its shape
            let lambda = Partition::new(descent_composition(&rho).parts().to_vec())
                .expect("increasing tableau shape is a partition");
            *out.entry(lambda).or_insert(0) += 1;
        }
    });
    out
}

/// The Demazure expansion of the Schubert polynomial: weak descent
/// compositions of the Yamanouchi words.  Computed both directly and by
/// lifting the increasing representatives; the two routes must agree.
pub fn demazure_expansion(w: &Permutation) -> BTreeMap<WeakComposition, u32> {
    let mut via_yamanouchi: BTreeMap<WeakComposition, u32> = BTreeMap::new();
    let mut via_lift: BTreeMap<WeakComposition, u32> = BTreeMap::new();
    for_each_reduced_word(w, &mut |letters| {
        let rho = ReducedWord::from_letters_unchecked(letters.to_vec());
        if is_yamanouchi(&rho) {
            let WeakDescent::Des(a) = weak_descent_composition(&rho) else {
                unreachable!("yamanouchi words are non-virtual");
            };
            *via_yamanouchi.entry(a).or_insert(0) += 1;
        }
        if YoungTableau::from_rows(word_stack(&rho)).is_increasing() {
            let lifted = lift_canonical(&rho).expect("increasing input");
            let WeakDescent::Des(a) = weak_descent_composition(&lifted) else {
                unreachable!("canonical lift is non-virtual");
            };
            *via_lift.entry(a).or_insert(0) += 1;
        }
    });
    assert_eq!(via_yamanouchi, via_lift, "expansion routes disagree for {w}");
    via_yamanouchi
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compositions::Composition;
    use crate::poly::schubert_oracle;
    use crate::tableau::{key_polynomial, schur};

    fn comp(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn wc(parts: &[u32]) -> WeakComposition {
        WeakComposition::new(parts.to_vec())
    }

    fn part(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn stanley_fundamental_expansion_of_153264() {
        let w = Permutation::parse("153264").unwrap();
        let got = fundamental_expansion(&w);
        let want: BTreeMap<Composition, u32> = [
            (comp(&[3, 1, 1]), 1),
            (comp(&[2, 2, 1]), 2),
            (comp(&[1, 3, 1]), 2),
            (comp(&[3, 2]), 1),
            (comp(&[1, 2, 2]), 2),
            (comp(&[1, 1, 3]), 1),
            (comp(&[2, 1, 2]), 1),
            (comp(&[2, 3]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn stanley_small_cases() {
        assert_eq!(stanley_function(&Permutation::identity(3), 4), Polynomial::one());
        let w321 = Permutation::parse("321").unwrap();
        let got = fundamental_expansion(&w321);
        let want: BTreeMap<Composition, u32> =
            [(comp(&[1, 2]), 1), (comp(&[2, 1]), 1)].into_iter().collect();
        assert_eq!(got, want);
        let s = stanley_function(&w321, 3);
        let expect = &fundamental_qsym(&comp(&[1, 2]), 3) + &fundamental_qsym(&comp(&[2, 1]), 3);
        assert_eq!(s, expect);
    }

    #[test]
    fn schubert_slide_expansion_of_153264() {
        let w = Permutation::parse("153264").unwrap();
        let got = slide_expansion(&w);
        let want: BTreeMap<WeakComposition, u32> = [
            (wc(&[0, 3, 1, 0, 1]), 1),
            (wc(&[2, 2, 0, 0, 1]), 1),
            (wc(&[1, 3, 0, 0, 1]), 1),
            (wc(&[0, 3, 2, 0, 0]), 1),
            (wc(&[2, 2, 1, 0, 0]), 1),
            (wc(&[1, 3, 1, 0, 0]), 1),
            (wc(&[2, 3, 0, 0, 0]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn schubert_identity_and_oracle() {
        assert_eq!(schubert(&Permutation::identity(4)), Polynomial::one());
        for s in ["153264", "321", "2143", "1432"] {
            let w = Permutation::parse(s).unwrap();
            assert_eq!(schubert(&w), schubert_oracle(&w), "slide model vs oracle at {w}");
        }
    }

    #[test]
    fn schur_expansion_examples() {
        let w = Permutation::parse("153264").unwrap();
        let got = schur_expansion(&w);
        let want: BTreeMap<Partition, u32> =
            [(part(&[3, 2]), 1), (part(&[3, 1, 1]), 1)].into_iter().collect();
        assert_eq!(got, want);

        let got = schur_expansion(&Permutation::parse("13625847").unwrap());
        let want: BTreeMap<Partition, u32> = [
            (part(&[3, 2, 1, 1]), 1),
            (part(&[3, 2, 2]), 1),
            (part(&[3, 3, 1]), 1),
            (part(&[4, 1, 1, 1]), 1),
            (part(&[4, 2, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);

        let got = schur_expansion(&Permutation::identity(3));
        assert_eq!(got, [(Partition::empty(), 1)].into_iter().collect());
    }

    #[test]
    fn demazure_expansion_examples() {
        let w = Permutation::parse("153264").unwrap();
        let got = demazure_expansion(&w);
        let want: BTreeMap<WeakComposition, u32> =
            [(wc(&[0, 3, 1, 0, 1]), 1), (wc(&[0, 3, 2]), 1)].into_iter().collect();
        assert_eq!(got, want);

        let got = demazure_expansion(&Permutation::parse("13625847").unwrap());
        let want: BTreeMap<WeakComposition, u32> = [
            (wc(&[0, 1, 3, 0, 1, 2]), 1),
            (wc(&[0, 2, 3, 0, 0, 2]), 1),
            (wc(&[0, 3, 3, 0, 0, 1]), 1),
            (wc(&[0, 1, 4, 0, 1, 1]), 1),
            (wc(&[0, 2, 4, 0, 0, 1]), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);

        let got = demazure_expansion(&Permutation::identity(4));
        assert_eq!(got, [(WeakComposition::empty(), 1)].into_iter().collect());
    }

    #[test]
    fn global_identities_on_a_sample() {
        // identity A at two truncations, identity B, on a few permutations
        for s in ["153264", "321", "2413", "3142", "21"] {
            let w = Permutation::parse(s).unwrap();
            for m in [w.length() + 1, w.length() + 2] {
                let lhs = stanley_function(&w, m);
                let mut rhs = Polynomial::zero();
                for (lambda, mult) in schur_expansion(&w) {
                    for _ in 0..mult {
                        rhs += &schur(&lambda, m);
                    }
                }
                assert_eq!(lhs, rhs, "Schur identity at {w}, m={m}");
            }
            let lhs = schubert(&w);
            let mut rhs = Polynomial::zero();
            for (a, mult) in demazure_expansion(&w) {
                for _ in 0..mult {
                    rhs += &key_polynomial(&a);
                }
            }
            assert_eq!(lhs, rhs, "Demazure identity at {w}");
        }
    }
}
