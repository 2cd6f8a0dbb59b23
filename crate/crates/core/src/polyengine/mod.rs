//! Laurent polynomials, Wirtinger presentations, the Alexander and Conway
//! polynomials, and the Casson invariants of bottom tangles.

pub mod alexander;
pub mod laurent;
pub mod skein;
pub mod wirtinger;

pub use alexander::{alexander_a2, alexander_polynomial};
pub use laurent::LaurentPolynomial;
pub use skein::conway_skein;
pub use wirtinger::{wirtinger, Arc, Relation, WirtingerPresentation};

use crate::codec::Diagram;
use crate::error::Result;
use crate::tangle_ops::{component_knot, plat_closure};

/// `a_2` of the closure of component `i` alone.
pub fn a2_i(d: &Diagram, i: usize) -> Result<i64> {
    alexander_a2(&component_knot(d, i)?)
}

/// `a_2` of the plat closure of components `i < j`.
pub fn a2_ij(d: &Diagram, i: usize, j: usize) -> Result<i64> {
    alexander_a2(&plat_closure(d, i, j)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid;
    use crate::codec::Kind;
    use crate::tangle_ops::connected_sum_insert;

    #[test]
    fn trivial_tangle_is_zero() {
        let d = Diagram::trivial(Kind::BottomTangle, 3);
        for i in 1..=3 {
            assert_eq!(a2_i(&d, i).unwrap(), 0);
            for j in i + 1..=3 {
                assert_eq!(a2_ij(&d, i, j).unwrap(), 0);
            }
        }
    }

    #[test]
    fn trefoil_insertion_shifts_one_component() {
        let trefoil = braid::closure(2, &[1, 1, 1]).unwrap();
        let d = Diagram::trivial(Kind::BottomTangle, 3);
        let once = connected_sum_insert(&d, 2, &trefoil).unwrap();
        let twice = connected_sum_insert(&once, 2, &trefoil).unwrap();
        assert_eq!([1, 2, 3].map(|i| a2_i(&once, i).unwrap()), [0, 1, 0]);
        assert_eq!(a2_i(&twice, 2).unwrap(), 2);
        // Plat closures through component 2 see the knot as well.
        assert_eq!(a2_ij(&once, 1, 2).unwrap(), 1);
        assert_eq!(a2_ij(&once, 1, 3).unwrap(), 0);
    }
}
