use hopfcalc::index::{Composition, Partition};
use hopfcalc::lin::Lin;
use hopfcalc::nsym::{abelianize_nsym, expand_qsym, include_sym_in_qsym, ns_qs_pair, pair_tensors};
use hopfcalc::parse::{parse_element, parse_series, parse_sym};
use hopfcalc::renorm::{abelianize_tensor, bfk_abelianize};
use hopfcalc::{Bfk, Element, FaaDiBruno, NSym, QSym, Scalar, ScalarRing, Series, Sym, SymBasis, SymElement};
use proptest::prelude::*;

fn composition(max_len: usize, max_part: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|p| Composition::new(p).unwrap())
}

fn partition(max_len: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    composition(max_len, max_part).prop_map(|c| c.to_partition())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| Scalar::ratio(n, d))
}

fn lin<K: Ord + Clone + std::fmt::Debug>(key: impl Strategy<Value = K>) -> impl Strategy<Value = Lin<K>> {
    prop::collection::vec((key, scalar()), 0..=3).prop_map(|terms| terms.into_iter().collect())
}

fn nsym() -> impl Strategy<Value = Element<NSym>> {
    lin(composition(3, 2)).prop_map(Element::from_lin)
}

fn qsym() -> impl Strategy<Value = Element<QSym>> {
    lin(composition(3, 2)).prop_map(Element::from_lin)
}

fn basis() -> impl Strategy<Value = SymBasis> {
    prop::sample::select(SymBasis::ALL.to_vec())
}

fn sym() -> impl Strategy<Value = SymElement> {
    (basis(), lin(partition(3, 2))).prop_map(|(b, t)| SymElement::new(b, t))
}

/// A series `c_0 + c_1 T + ... + c_cap T^cap` over `A`.
fn series<A: hopfcalc::Algebra>(
    coeff: impl Strategy<Value = Element<A>>,
    cap: i64,
) -> impl Strategy<Value = Series<A>> {
    prop::collection::vec(coeff, (cap + 1) as usize)
        .prop_map(move |cs| Series::from_coeffs(cap, cs.into_iter().enumerate().map(|(k, c)| (k as i64, c))))
}

fn sym_e() -> impl Strategy<Value = Element<Sym>> {
    lin(partition(2, 2)).prop_map(Element::from_lin)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_field_laws(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn series_product_is_associative(
        f in series(nsym(), 3), g in series(nsym(), 3), h in series(nsym(), 3)
    ) {
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
    }

    #[test]
    fn series_inverse_is_two_sided(tail in series(nsym(), 4)) {
        let mut f = tail;
        f.set(0, Element::one());
        let inv = f.invert().unwrap();
        prop_assert_eq!(f.mul(&inv), Series::one(4));
        prop_assert_eq!(inv.mul(&f), Series::one(4));
    }

    #[test]
    fn composition_is_associative(f in series(sym_e(), 4), g in series(sym_e(), 4), h in series(sym_e(), 4)) {
        let mut g = g;
        let mut h = h;
        g.set(0, Element::zero());
        h.set(0, Element::zero());
        prop_assert_eq!(f.compose(&g).unwrap().compose(&h).unwrap(), f.compose(&g.compose(&h).unwrap()).unwrap());
    }

    #[test]
    fn reversion_round_trip(tail in prop::collection::vec(lin(partition(2, 2)).prop_map(Element::<FaaDiBruno>::from_lin), 3)) {
        let mut f = Series::<FaaDiBruno>::variable(4);
        for (k, c) in tail.into_iter().enumerate() {
            f.set(k as i64 + 2, c);
        }
        let g = f.revert().unwrap();
        prop_assert_eq!(f.compose(&g).unwrap(), Series::variable(4));
        prop_assert_eq!(g.compose(&f).unwrap(), Series::variable(4));
    }

    #[test]
    fn basis_conversions_round_trip(x in sym(), to in basis()) {
        let there = x.convert(to, ScalarRing::Rationals).unwrap();
        prop_assert_eq!(there.convert(x.basis(), ScalarRing::Rationals).unwrap(), x);
    }

    #[test]
    fn monomial_product_matches_expansion(a in partition(3, 2), b in partition(3, 2)) {
        let n = (a.parts().iter().sum::<u32>() + b.parts().iter().sum::<u32>()).max(1) as usize;
        let ma = SymElement::basis_element(SymBasis::M, a);
        let mb = SymElement::basis_element(SymBasis::M, b);
        prop_assert_eq!(ma.mul(&mb).expand(n), ma.expand(n).mul(&mb.expand(n)));
    }

    #[test]
    fn quasi_shuffle_matches_expansion(a in composition(3, 2), b in composition(2, 2)) {
        let n = (a.parts().iter().sum::<u32>() + b.parts().iter().sum::<u32>()).max(1) as usize;
        let ma = Element::<QSym>::basis(a);
        let mb = Element::<QSym>::basis(b);
        prop_assert_eq!(expand_qsym(&(&ma * &mb), n), expand_qsym(&ma, n).mul(&expand_qsym(&mb, n)));
    }

    #[test]
    fn abelianization_is_a_morphism(x in nsym(), y in nsym()) {
        prop_assert_eq!(abelianize_nsym(&(&x * &y)), &abelianize_nsym(&x) * &abelianize_nsym(&y));
        prop_assert_eq!(
            abelianize_tensor(&x.coproduct()),
            abelianize_nsym(&x).coproduct()
        );
        let z: Element<Bfk> = x.cast();
        prop_assert_eq!(abelianize_tensor(&z.coproduct()), bfk_abelianize(&z).coproduct());
        prop_assert_eq!(bfk_abelianize(&z.antipode()), bfk_abelianize(&z).antipode());
    }

    #[test]
    fn inclusion_is_multiplicative(f in sym(), g in sym()) {
        prop_assert_eq!(include_sym_in_qsym(&f.mul(&g)), &include_sym_in_qsym(&f) * &include_sym_in_qsym(&g));
    }

    #[test]
    fn pairing_adjunctions(x in nsym(), y in nsym(), m in qsym(), n in qsym()) {
        let xy = &x * &y;
        let lhs = ns_qs_pair(&xy, &m);
        let tensor: Lin<Vec<Composition>> = x.lin().bilinear(y.lin(), |a, b| Lin::basis(vec![a.clone(), b.clone()]));
        prop_assert_eq!(lhs, pair_tensors(&tensor, &m.coproduct()));
        let mn: Lin<Vec<Composition>> = m.lin().bilinear(n.lin(), |a, b| Lin::basis(vec![a.clone(), b.clone()]));
        prop_assert_eq!(pair_tensors(&x.coproduct(), &mn), ns_qs_pair(&x, &(&m * &n)));
    }

    #[test]
    fn antipodes_reverse_products(x in nsym(), y in nsym()) {
        prop_assert_eq!((&x * &y).antipode(), &y.antipode() * &x.antipode());
        let (a, b): (Element<Bfk>, Element<Bfk>) = (x.cast(), y.cast());
        prop_assert_eq!((&a * &b).antipode(), &b.antipode() * &a.antipode());
    }

    #[test]
    fn printed_elements_parse_back(x in nsym(), q in qsym(), s in sym()) {
        prop_assert_eq!(parse_element::<NSym>(&x.to_string()).unwrap(), x);
        prop_assert_eq!(parse_element::<QSym>(&q.to_string()).unwrap(), q);
        prop_assert_eq!(parse_sym(&s.to_string()).unwrap().convert(s.basis(), ScalarRing::Rationals).unwrap(), s);
    }

    #[test]
    fn printed_series_parse_back(f in series(nsym(), 3)) {
        prop_assert_eq!(parse_series::<NSym>(&f.to_string(), 3).unwrap(), f);
    }
}
