import unittest

from macdonald_lr.algebra.hooks import (
    FactorPosition,
    HookBinomial,
    HookKind,
    SignedHookFactor,
    cancel_reciprocal_pairs,
    hook_binomial,
    hook_from_exponents,
    signed_product,
    verify_hook_product,
)
from macdonald_lr.algebra.laurent import Q, T, LaurentPoly
from macdonald_lr.algebra.rational import QtRational


def num(q_exp, t_exp):
    return SignedHookFactor.numerator(hook_from_exponents(q_exp, t_exp))


def den(q_exp, t_exp):
    return SignedHookFactor.denominator(hook_from_exponents(q_exp, t_exp))


class TestHookBinomial(unittest.TestCase):
    def test_upper_and_lower(self):
        upper = HookBinomial.upper(1, 0)
        self.assertEqual(upper.exponents, (2, 0))
        self.assertEqual(str(upper), "U(1,0)")
        lower = HookBinomial.lower(0, 0)
        self.assertEqual(lower.value(), 1 - T)
        self.assertEqual(str(lower), "L(0,0)")

    def test_label_must_match_exponents(self):
        with self.assertRaises(ValueError):
            HookBinomial(1, 1, HookKind.UPPER, 1, 1)
        with self.assertRaises(ValueError):
            HookBinomial(1, 1, HookKind.LOWER)

    def test_negative_arm_is_unlabelled(self):
        binomial = HookBinomial.upper(-1, 0)
        self.assertIsNone(binomial.kind)
        self.assertTrue(binomial.is_zero())

    def test_oriented(self):
        binomial, sign, monomial = HookBinomial(-2, 0).oriented()
        self.assertEqual(binomial, HookBinomial.upper(1, 0))
        self.assertEqual(sign, -1)
        self.assertEqual(monomial, (-2, 0))
        value = LaurentPoly.monomial(*monomial, sign) * binomial.value()
        self.assertEqual(value, LaurentPoly.binomial(-2, 0))

    def test_oriented_keeps_positive_binomials(self):
        binomial = HookBinomial.lower(1, 1)
        self.assertEqual(binomial.oriented(), (binomial, 1, (0, 0)))

    def test_canonical_labels(self):
        self.assertEqual(hook_from_exponents(2, 0), HookBinomial.upper(1, 0))
        self.assertEqual(hook_from_exponents(1, 1), HookBinomial.lower(1, 0))
        self.assertIsNone(hook_from_exponents(-1, 2).kind)

    def test_candidate_kinds(self):
        self.assertEqual(
            HookBinomial(1, 1).candidate_kinds(),
            [HookKind.UPPER, HookKind.LOWER],
        )
        self.assertEqual(HookBinomial(0, 2).candidate_kinds(), [HookKind.LOWER])
        self.assertEqual(HookBinomial(-1, 0).candidate_kinds(), [])

    def test_hook_binomial(self):
        self.assertEqual(hook_binomial(1, 1, HookKind.UPPER), 1 - Q**2 * T)
        self.assertEqual(hook_binomial(1, 1, HookKind.LOWER), 1 - Q * T**2)


class TestSignedProducts(unittest.TestCase):
    def test_signed_product(self):
        value = signed_product([num(2, 0), den(1, 0)])
        self.assertEqual(value, QtRational(1 + Q))

    def test_cancel_reciprocal_pairs(self):
        survivors = cancel_reciprocal_pairs([num(2, 0), den(2, 0), num(1, 1)])
        self.assertEqual(survivors, [num(1, 1)])

    def test_cancel_keeps_later_duplicates(self):
        survivors = cancel_reciprocal_pairs([num(1, 0), den(1, 0), num(1, 0)])
        self.assertEqual(len(survivors), 1)
        self.assertIs(survivors[0].position, FactorPosition.NUMERATOR)

    def test_verify_with_monomial(self):
        f = QtRational(-(Q**-2) * (1 - Q**2))
        check = verify_hook_product(f, [num(2, 0)])
        self.assertTrue(check.ok)
        self.assertEqual(check.monomial.to_json(), [-2, 0, -1])

    def test_verify_mismatch(self):
        check = verify_hook_product(QtRational(1 + Q), [num(2, 0)])
        self.assertFalse(check.ok)
        self.assertIsNone(check.monomial)

    def test_verify_zero(self):
        zero = SignedHookFactor.numerator(HookBinomial(0, 0))
        self.assertTrue(verify_hook_product(QtRational.zero(), [zero]).ok)
        self.assertFalse(verify_hook_product(QtRational.one(), [zero]).ok)

    def test_to_json(self):
        self.assertEqual(
            den(1, 1).to_json(),
            {
                "q_exp": 1,
                "t_exp": 1,
                "label": "L(1,0)",
                "position": "denominator",
            },
        )


if __name__ == "__main__":
    unittest.main()
