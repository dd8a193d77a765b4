use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use trisect::invariants::snf::{smith_normal_form, IntMatrix};

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..6, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-20i64..20, c), r))
}

fn unimodular(m: &IntMatrix) -> bool {
    m.determinant().abs() == BigInt::from(1)
}

proptest! {
    #[test]
    fn transforms_are_consistent(rows in matrix()) {
        let a = IntMatrix::from_rows(&rows);
        let r = smith_normal_form(&a);
        prop_assert!(unimodular(&r.u) && unimodular(&r.v));
        let s = r.u.mul(&a).mul(&r.v);
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                prop_assert_eq!(s.get(i, j), r.s.get(i, j));
                if i != j {
                    prop_assert!(s.get(i, j).is_zero());
                }
            }
        }
    }

    #[test]
    fn divisibility_chain(rows in matrix()) {
        let f = smith_normal_form(&IntMatrix::from_rows(&rows)).invariant_factors();
        for w in f.windows(2) {
            prop_assert!(w[0].is_positive() && (&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn transpose_has_same_factors(rows in matrix()) {
        let a = IntMatrix::from_rows(&rows);
        prop_assert_eq!(smith_normal_form(&a).invariant_factors(), smith_normal_form(&a.transpose()).invariant_factors());
    }
}
