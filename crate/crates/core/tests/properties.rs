//! Randomized property tests for the algebraic kernels.

use proptest::prelude::*;
use skewtab_core::shapes::enumerate_connected_shapes;
use skewtab_core::tableaux::{enumerate_tableaux, to_parallelogram, to_tableau};
use skewtab_core::weights::{reflect, root_data, Kind, LaurentPoly, QPoly, Weight};

fn laurent_strategy(rank: usize) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((prop::collection::vec(-4i64..=4, rank), -5i64..=5), 0..8).prop_map(
        move |terms| {
            let mut p = LaurentPoly::zero();
            for (exp, c) in terms {
                p.add_term(&Weight(exp), c);
            }
            p
        },
    )
}

proptest! {
    #[test]
    fn reflect_is_an_involution_rank2(p in laurent_strategy(2), i in 1usize..=2) {
        let rd = root_data(Kind::A, 2).unwrap();
        let twice = reflect(&reflect(&p, i, &rd).unwrap(), i, &rd).unwrap();
        prop_assert_eq!(twice, p);
    }

    #[test]
    fn reflect_is_an_involution_rank3(p in laurent_strategy(3), i in 1usize..=3) {
        for kind in [Kind::A, Kind::B, Kind::D] {
            let rd = root_data(kind, 3).unwrap();
            let twice = reflect(&reflect(&p, i, &rd).unwrap(), i, &rd).unwrap();
            prop_assert_eq!(&twice, &p);
        }
    }

    #[test]
    fn exact_division_inverts_multiplication(
        a in prop::collection::vec(-6i64..=6, 1..8),
        b in prop::collection::vec(-6i64..=6, 0..6),
    ) {
        let a = QPoly::new(a);
        // force a unit constant term so low-end division applies
        let mut b_coeffs = vec![1i64];
        b_coeffs.extend(b);
        let b = QPoly::new(b_coeffs);
        let quotient = a.mul(&b).div_exact(&b).unwrap();
        prop_assert_eq!(quotient, a);
    }

    #[test]
    fn tableau_parallelogram_round_trip(shape_idx in 0usize..100, tab_idx in 0usize..1000) {
        let shapes = enumerate_connected_shapes(6, 3);
        let s = &shapes[shape_idx % shapes.len()];
        let tableaux = enumerate_tableaux(s);
        let t = &tableaux[tab_idx % tableaux.len()];
        let g = to_parallelogram(t);
        g.validate_framed_by(s).unwrap();
        prop_assert_eq!(&to_tableau(&g, s).unwrap(), t);
    }
}
