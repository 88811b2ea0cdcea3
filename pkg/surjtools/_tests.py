"""
Unit tests for surjtools.

Note that these tests should test low-level functionality. More complete
example scripts should be included in the root directory and added to the list
in runall.py.

The oracle checks for n = 5 take several minutes; set SURJTOOLS_LONG_TESTS=1
to run them.
"""

import io
import json
import os
import unittest
from unittest import mock
from fractions import Fraction
import numpy as np
from . import util
from . import partitions
from . import tableaux
from . import characters
from . import surjections
from . import linalg
from . import oracle
from . import cartan
from . import cli
from .partitions import Partition as P, ds, sgn

LONG_TESTS = util.env_flag("SURJTOOLS_LONG_TESTS")


def setUpModule():
    util.setMaxVerbosity(0)


def tearDownModule():
    util.setMaxVerbosity(1)


class UtilTests(unittest.TestCase):
    """Exact counts and permutation helpers."""
    def test_stirling(self):
        self.assertEqual(util.stirling2(4, 2), 7)
        self.assertEqual(util.stirling2(0, 0), 1)
        self.assertEqual(util.stirling2(3, 0), 0)
        self.assertEqual(util.stirling2(2, 3), 0)

    def test_surjection_count(self):
        self.assertEqual(util.surjection_count(4, 2), 14)
        self.assertEqual(util.surjection_count(0, 0), 1)

    def test_algebra_dimension(self):
        self.assertEqual(util.algebra_dimension(2), 5)
        self.assertEqual(util.algebra_dimension(4), 93)
        self.assertEqual(util.algebra_dimension(5), 634)

    def test_compose_right_to_left(self):
        self.assertEqual(util.compose_perm((2, 1, 3), (1, 3, 2)), (2, 3, 1))
        p = (3, 1, 2)
        self.assertEqual(util.compose_perm(p, util.inverse_perm(p)),
                         util.identity_perm(3))

    def test_cycles(self):
        p = util.perm_from_cycles([(1, 3, 2, 4)], 4)
        self.assertEqual(p, (3, 4, 2, 1))
        self.assertEqual(util.cycle_lengths(p), (4,))
        self.assertEqual(util.perm_sign(p), -1)
        self.assertEqual(util.cycle_lengths((2, 1, 3)), (2, 1))

    def test_embed(self):
        self.assertEqual(util.embed_perm((2, 1), 4, 2), (1, 2, 4, 3))

    def test_readonlydict(self):
        d = util.ReadOnlyDict(a=1)
        with self.assertRaises(NotImplementedError):
            d["b"] = 2

    def test_env_flag(self):
        with mock.patch.dict(os.environ, {"SURJTOOLS_TEST_FLAG" : "0"}):
            self.assertFalse(util.env_flag("SURJTOOLS_TEST_FLAG"))
        with mock.patch.dict(os.environ, {"SURJTOOLS_TEST_FLAG" : "yes"}):
            self.assertTrue(util.env_flag("SURJTOOLS_TEST_FLAG"))


class PartitionTests(unittest.TestCase):
    """Partition enumeration, box moves and dimensions."""
    def test_order(self):
        self.assertEqual(partitions.enumerate_partitions(4),
                         [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)])
        self.assertEqual(partitions.enumerate_partitions(0), [()])
        legend = partitions.all_partitions_upto(2)
        self.assertEqual(legend, [(), (1,), (2,), (1, 1)])

    def test_counts_agree_with_pentagonal(self):
        for n in range(12):
            self.assertEqual(len(partitions.enumerate_partitions(n)),
                             partitions.partition_count(n))

    def test_partition_numbers_to_30(self):
        known = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176,
                 231, 297, 385, 490, 627, 792, 1002, 1255, 1575, 1958, 2436,
                 3010, 3718, 4565, 5604]
        self.assertEqual([partitions.partition_count(n) for n in range(31)],
                         known)
        for n in (20, 25, 30):
            self.assertEqual(len(partitions.enumerate_partitions(n)), known[n])

    def test_validation(self):
        for bad in [(1, 2), (2, 0), (-1,)]:
            with self.assertRaises(ValueError):
                P(bad)

    def test_parse(self):
        self.assertEqual(partitions.parse_partition("[2,1]"), (2, 1))
        self.assertEqual(partitions.parse_partition("[]"), ())
        for bad in ["[1,2]", "abc", "[0]", "[1.5]", '"x"', "[true]"]:
            with self.assertRaises(ValueError):
                partitions.parse_partition(bad)

    def test_str(self):
        self.assertEqual(str(P((2, 1))), "[2,1]")
        self.assertEqual(str(P()), "[]")
        self.assertEqual(P((2, 1)).to_json(), [2, 1])

    def test_conjugate(self):
        self.assertEqual(partitions.conjugate(P((3, 1))), (2, 1, 1))
        for lam in partitions.all_partitions_upto(6):
            self.assertEqual(partitions.conjugate(partitions.conjugate(lam)),
                             lam)

    def test_boxes(self):
        self.assertEqual(partitions.removable_boxes(P((2, 1))),
                         [(1, 1), (2,)])
        self.assertEqual(partitions.removable_boxes(P()), [])
        self.assertEqual(partitions.addable_boxes(P((1,))), [(2,), (1, 1)])

    def test_horizontal_strips(self):
        Y = partitions.add_boxes_no_two_same_column
        self.assertEqual(Y(P((1,)), 2), [(3,), (2, 1)])
        self.assertEqual(Y(P((2,)), 2), [(4,), (3, 1), (2, 2)])
        self.assertEqual(Y(P((1, 1)), 2), [(3, 1), (2, 1, 1)])
        self.assertEqual(Y(P(), 3), [(3,)])
        self.assertEqual(Y(P((2, 1)), 3),
                         [(5, 1), (4, 2), (4, 1, 1), (3, 2, 1)])

    def test_one_box_moves_are_inverse(self):
        for k in range(7):
            for lam in partitions.enumerate_partitions(k):
                self.assertEqual(
                    set(partitions.add_boxes_no_two_same_column(lam, 1)),
                    set(partitions.addable_boxes(lam)))
                for mu in partitions.enumerate_partitions(k + 1):
                    self.assertEqual(lam in partitions.removable_boxes(mu),
                                     mu in partitions.addable_boxes(lam))

    def test_two_boxes_come_from_single_boxes(self):
        for k in range(6):
            for lam in partitions.enumerate_partitions(k):
                twice = set(nu for mu in partitions.addable_boxes(lam)
                            for nu in partitions.addable_boxes(mu))
                strips = partitions.add_boxes_no_two_same_column(lam, 2)
                self.assertTrue(set(strips) <= twice)
                self.assertEqual(len(strips), len(set(strips)))

    def test_hook_dimension(self):
        self.assertEqual(partitions.hook_dimension(P((2, 1))), 2)
        self.assertEqual(partitions.hook_dimension(P((3, 2))), 5)
        self.assertEqual(partitions.hook_dimension(P()), 1)
        for k in range(7):
            total = 0
            for lam in partitions.enumerate_partitions(k):
                f = partitions.hook_dimension(lam)
                self.assertEqual(f, len(partitions.standard_tableaux(lam)))
                total += f**2
            self.assertEqual(total, util.factorial(k))
        for k in (7, 8):
            self.assertEqual(sum(partitions.hook_dimension(lam)**2 for lam
                                 in partitions.enumerate_partitions(k)),
                             util.factorial(k))

    def test_standard_tableaux(self):
        self.assertEqual(partitions.standard_tableaux(P((2, 1))),
                         [((1, 3), (2,)), ((1, 2), (3,))])
        self.assertEqual(partitions.row_filled_tableau(P((2, 1))),
                         ((1, 2), (3,)))

    def test_ds_sgn(self):
        self.assertEqual(ds(4), (2, 1, 1))
        self.assertEqual(sgn(3), (1, 1, 1))
        with self.assertRaises(ValueError):
            ds(1)


class TableauTests(unittest.TestCase):
    """Lattice words and Littlewood-Richardson coefficients."""
    def test_lattice_word_11322_fails_at_prefix_113(self):
        self.assertFalse(tableaux.is_lattice((1, 1, 3, 2, 2)))
        self.assertFalse(tableaux.is_lattice((1, 1, 3)))
        self.assertTrue(tableaux.is_lattice((1, 1, 2)))
        self.assertTrue(tableaux.is_lattice((1, 1, 2, 3, 2)))

    def test_row_word(self):
        shape = partitions.SkewShape((3, 2), (1,))
        t = tableaux.SkewTableau(shape, [(1, 1), (1, 2)])
        self.assertEqual(tableaux.row_word(t), (1, 1, 2, 1))
        self.assertTrue(t.is_semistandard())
        self.assertEqual(t.content(), (3, 1))

    def test_row_word_of_non_lattice_tableau(self):
        shape = partitions.SkewShape((4, 3, 1), (2, 1))
        t = tableaux.SkewTableau(shape, [(1, 1), (2, 3), (2,)])
        self.assertTrue(t.is_semistandard())
        word = tableaux.row_word(t)
        self.assertEqual(word, (1, 1, 3, 2, 2))
        self.assertFalse(tableaux.is_lattice(word))

    def test_coefficients(self):
        self.assertEqual(tableaux.lr_coefficient((2, 1), (2, 1), (3, 2, 1)),
                         2)
        self.assertEqual(tableaux.lr_coefficient((1,), (1,), (2,)), 1)
        self.assertEqual(tableaux.lr_coefficient((1,), (1,), (1, 1)), 1)
        self.assertEqual(tableaux.lr_coefficient((3,), (1,), (2, 2)), 0)
        self.assertEqual(tableaux.lr_coefficient((), (2, 1), (2, 1)), 1)

    def test_size_mismatch(self):
        with self.assertRaises(ValueError):
            tableaux.lr_coefficient((1,), (1,), (3,))

    def test_pieri_is_lr_with_one_row(self):
        for a in range(5):
            for lam in partitions.enumerate_partitions(a):
                for r in range(4):
                    self.assertEqual(tableaux.lr_expand(lam, P((r,)) if r
                                                        else P()),
                                     tableaux.pieri_expand(lam, r))

    def test_lr_matches_characters(self):
        for total in range(7):
            for a in range(total + 1):
                for lam in partitions.enumerate_partitions(a):
                    for delta in partitions.enumerate_partitions(total - a):
                        ind = characters.induce_product(
                            characters.irreducible(lam),
                            characters.irreducible(delta))
                        for gamma in partitions.enumerate_partitions(total):
                            c = characters.inner_product(
                                characters.irreducible(gamma), ind)
                            self.assertEqual(
                                tableaux.lr_coefficient(lam, delta, gamma), c)

    def test_symmetry_and_dimension(self):
        for total in range(8):
            for a in range(total + 1):
                for lam in partitions.enumerate_partitions(a):
                    for delta in partitions.enumerate_partitions(total - a):
                        expansion = tableaux.lr_expand(lam, delta)
                        self.assertEqual(expansion,
                                         tableaux.lr_expand(delta, lam))
                        dim = sum(c*partitions.hook_dimension(gamma)
                                  for (gamma, c) in expansion.items())
                        self.assertEqual(
                            dim, util.binomial(total, a)
                            *partitions.hook_dimension(lam)
                            *partitions.hook_dimension(delta))


class CharacterTests(unittest.TestCase):
    """Murnaghan-Nakayama values, inner products and inductions."""
    def test_values(self):
        self.assertEqual(characters.mn_character((2, 1), (1, 1, 1)), 2)
        self.assertEqual(characters.mn_character((2, 1), (2, 1)), 0)
        self.assertEqual(characters.mn_character((2, 1), (3,)), -1)
        self.assertEqual(characters.mn_character((), ()), 1)
        with self.assertRaises(ValueError):
            characters.mn_character((2,), (1,))

    def test_class_sizes(self):
        for k in range(7):
            total = sum(characters.class_size(mu)
                        for mu in partitions.enumerate_partitions(k))
            self.assertEqual(total, util.factorial(k))
        self.assertEqual(characters.class_size((2, 1, 1)), 6)

    def test_orthonormal(self):
        for k in range(6):
            irr = [characters.irreducible(lam)
                   for lam in partitions.enumerate_partitions(k)]
            for (i, a) in enumerate(irr):
                for (j, b) in enumerate(irr):
                    self.assertEqual(characters.inner_product(a, b),
                                     1 if i == j else 0)

    def test_degree_and_conjugate(self):
        for k in range(1, 6):
            for lam in partitions.enumerate_partitions(k):
                chi = characters.irreducible(lam)
                self.assertEqual(chi.degree(), partitions.hook_dimension(lam))
                self.assertEqual(
                    characters.irreducible(partitions.conjugate(lam)),
                    characters.sign(k)*chi)

    def test_transpose_symmetry(self):
        for k in range(6, 8):
            for mu in partitions.enumerate_partitions(k):
                sign = (-1)**(k - len(mu))
                for lam in partitions.enumerate_partitions(k):
                    self.assertEqual(
                        characters.mn_character(partitions.conjugate(lam), mu),
                        sign*characters.mn_character(lam, mu))

    def test_column_orthogonality(self):
        for k in range(8):
            shapes = partitions.enumerate_partitions(k)
            table = {(lam, mu) : characters.mn_character(lam, mu)
                     for lam in shapes for mu in shapes}
            for mu in shapes:
                for nu in shapes:
                    total = sum(table[lam, mu]*table[lam, nu]
                                for lam in shapes)
                    self.assertEqual(total, characters.centralizer_order(mu)
                                     if mu == nu else 0)

    def test_regular(self):
        dec = characters.decompose(characters.regular_character(3))
        self.assertEqual(dec, {P((3,)) : 1, P((2, 1)) : 2, P((1, 1, 1)) : 1})
        self.assertEqual(characters.from_multiset(dec, 3),
                         characters.regular_character(3))
        dec = characters.decompose(characters.regular_character(4))
        self.assertEqual(dec, {lam : partitions.hook_dimension(lam)
                               for lam in partitions.enumerate_partitions(4)})

    def test_not_a_character(self):
        phi = characters.ClassFunction((2,), {P((1, 1)) : 1})
        with self.assertRaises(ValueError):
            characters.decompose(phi)

    def test_frobenius_reciprocity(self):
        for (a, b) in [(1, 2), (2, 2), (2, 3)]:
            for lam in partitions.enumerate_partitions(a):
                for delta in partitions.enumerate_partitions(b):
                    x = characters.irreducible(lam)
                    y = characters.irreducible(delta)
                    self.assertEqual(
                        characters.induce_product(x, y, "formula"),
                        characters.induce_product(x, y, "reciprocity"))
                    ind = characters.induce_product(x, y)
                    for gamma in partitions.enumerate_partitions(a + b):
                        chi = characters.irreducible(gamma)
                        self.assertEqual(
                            characters.inner_product(ind, chi),
                            characters.inner_product(
                                x.tensor(y),
                                characters.restrict_to_young(chi, a, b)))

    def test_restriction_errors(self):
        with self.assertRaises(ValueError):
            characters.restrict_to_young(characters.trivial(3), 2, 2)

    def test_dihedral_inductions(self):
        D4 = characters.DIHEDRAL_D4
        self.assertEqual(len(set(D4)), 8)
        triv = characters.induce_from_subgroup(D4, characters.D4_TRIVIAL)
        self.assertEqual(characters.decompose(triv),
                         {P((4,)) : 1, P((2, 2)) : 1})
        sbar = characters.induce_from_subgroup(D4, characters.D4_SIGN_BAR)
        self.assertEqual(characters.decompose(sbar), {P((3, 1)) : 1})

    def test_nu(self):
        self.assertEqual(characters.D4_SIGN_BAR,
                         (1, 1, 1, 1, -1, -1, -1, -1))
        a = util.perm_from_cycles([(1, 2)], 4)
        b = util.perm_from_cycles([(1, 3), (2, 4)], 4)
        self.assertEqual(characters.nu(a), (1, 2))
        self.assertEqual(characters.nu(b), (2, 1))
        for s in characters.DIHEDRAL_D4:
            for t in characters.DIHEDRAL_D4:
                st = util.compose_perm(s, t)
                self.assertEqual(characters.nu(st),
                                 util.compose_perm(characters.nu(s),
                                                   characters.nu(t)))
        with self.assertRaises(ValueError):
            characters.nu(util.perm_from_cycles([(1, 2, 3)], 4))

    def test_subgroup_checks(self):
        with self.assertRaises(ValueError):
            characters.induce_from_subgroup([(2, 1, 3)], [1])
        cyc = [util.identity_perm(3), (2, 3, 1), (3, 1, 2)]
        with self.assertRaises(ValueError):
            characters.induce_from_subgroup(cyc, [1, 1])

    def test_json(self):
        chi = characters.irreducible((2, 1))
        payload = chi.to_json()
        self.assertEqual(payload["values"][0],
                         {"class" : [3], "value" : -1})
        self.assertEqual(characters.ClassFunction.from_json(payload), chi)


class SurjectionTests(unittest.TestCase):
    """Hom-sets, the S_k x S_r action, orbits and stabilizers."""
    def test_counts(self):
        S = surjections.enumerate_surjections
        self.assertEqual(len(S(0, 0)), 1)
        self.assertEqual(len(S(4, 2)), 14)
        self.assertEqual(len(S(3, 1)), 1)
        self.assertEqual(len(S(2, 3)), 0)
        self.assertEqual(len(S(2, 0)), 0)
        for r in range(7):
            for k in range(r + 1):
                self.assertEqual(len(S(r, k)), util.surjection_count(r, k))

    def test_not_onto(self):
        with self.assertRaises(ValueError):
            surjections.Surjection((1, 3))

    def test_kappas(self):
        self.assertEqual(surjections.kappa1(2).images, (1, 2, 2, 2))
        self.assertEqual(surjections.kappa2(2).images, (1, 1, 2, 2))
        for k in range(2, 6):
            self.assertEqual(surjections.kernel_type(surjections.kappa1(k)),
                             (3,) + (1,)*(k - 1))
            self.assertEqual(surjections.kernel_type(surjections.kappa2(k)),
                             (2, 2) + (1,)*(k - 2))
        with self.assertRaises(ValueError):
            surjections.kappa2(1)
        with self.assertRaises(ValueError):
            surjections.kappa1(0)

    def test_compose(self):
        k2 = surjections.kappa2(2)
        self.assertEqual(surjections.compose(k2, surjections.identity(4)), k2)
        self.assertEqual(surjections.compose(surjections.identity(2), k2), k2)
        cycle = surjections.Surjection((2, 3, 4, 1))
        (O1, _) = surjections.orbits_second_level(2)
        self.assertIn(surjections.compose(surjections.kappa1(2), cycle), O1)
        with self.assertRaises(ValueError):
            surjections.compose(k2, k2)

    def test_kernel_type(self):
        self.assertEqual(surjections.kernel_type(surjections.identity(3)),
                         (1, 1, 1))

    def test_action(self):
        f = surjections.kappa1(2)
        self.assertEqual(surjections.act((1, 2), (1, 2, 3, 4), f), f)
        for sigma in util.all_perms(2):
            for pi in util.all_perms(4):
                g = surjections.act(sigma, pi, f)
                self.assertEqual(surjections.kernel_type(g),
                                 surjections.kernel_type(f))
        with self.assertRaises(ValueError):
            surjections.act((1, 2), (1, 2, 3), f)

    def test_second_level_orbits(self):
        for k in range(2, 5):
            (O1, O2) = surjections.orbits_second_level(k)
            self.assertEqual((len(O1), len(O2)),
                             surjections.second_level_counts(k))
            self.assertEqual(len(O1) + len(O2),
                             util.surjection_count(k + 2, k))
        self.assertEqual(surjections.second_level_counts(2), (8, 6))
        self.assertEqual(surjections.second_level_counts(3), (60, 90))
        with self.assertRaises(ValueError):
            surjections.orbits_second_level(1)

    def test_orbit_count_is_kernel_types(self):
        for r in range(7):
            for k in range(r + 1):
                expected = sum(1 for lam in partitions.enumerate_partitions(r)
                               if len(lam) == k)
                self.assertEqual(len(surjections.orbits(r, k)), expected)

    def test_stabilizers(self):
        for k in range(2, 5):
            (K1, K2) = surjections.kappa_stabilizers(k)
            self.assertEqual(len(K1), util.factorial(k - 1)*6)
            self.assertEqual(len(K2), util.factorial(k - 2)*8)
            brute1 = surjections.stabilizer(surjections.kappa1(k))
            brute2 = surjections.stabilizer(surjections.kappa2(k))
            self.assertEqual(sorted(K1), sorted(brute1))
            self.assertEqual(sorted(K2), sorted(brute2))
            order = util.factorial(k)*util.factorial(k + 2)
            self.assertEqual(len(surjections.orbit(surjections.kappa1(k)))
                             *len(K1), order)
            self.assertEqual(len(surjections.orbit(surjections.kappa2(k)))
                             *len(K2), order)

    def test_block_map_fixers(self):
        D4 = set(characters.DIHEDRAL_D4)
        for tp in util.all_perms(2):
            for t in util.all_perms(4):
                expected = t in D4 and characters.nu(t) == tp
                self.assertEqual(surjections.fixes_block_map(tp, t), expected)

    def test_hom_character_is_sum_of_inductions(self):
        for k in range(2, 5):
            (K1, K2) = surjections.kappa_stabilizers(k)
            induced = (surjections.induce_trivial(K1, k, k + 2)
                       + surjections.induce_trivial(K2, k, k + 2))
            self.assertEqual(induced,
                             surjections.hom_permutation_character(k + 2, k))

    def test_hom_character_decompositions(self):
        for k in range(5):
            dec = characters.decompose(
                surjections.hom_permutation_character(k, k))
            self.assertEqual(dec, {(lam, lam) : 1 for lam
                                   in partitions.enumerate_partitions(k)})
        dec = characters.decompose(surjections.hom_permutation_character(3, 1))
        self.assertEqual(dec, {(P((1,)), P((3,))) : 1})
        for r in range(6):
            for k in range(r + 1):
                dec = characters.decompose(
                    surjections.hom_permutation_character(r, k))
                self.assertEqual(characters.multiset_dimension(dec),
                                 util.surjection_count(r, k))

    def test_empty_hom_character(self):
        chi = surjections.hom_permutation_character(1, 2)
        self.assertTrue(all(v == 0 for v in chi.values))


class LinalgTests(unittest.TestCase):
    """Fraction-free elimination."""
    def test_kernel(self):
        rels = linalg.kernel([{0 : 1}, {0 : 2}, {1 : 1}])
        self.assertEqual(rels, [{0 : 2, 1 : -1}])
        self.assertEqual(linalg.kernel([{}, {0 : 1}]), [{0 : 1}])

    def test_rank(self):
        self.assertEqual(linalg.rank([{0 : 1, 1 : 1}, {0 : 2, 1 : 2}]), 1)
        self.assertEqual(linalg.rank([{0 : Fraction(1, 2)}, {1 : 3}]), 2)
        eb = linalg.EchelonBasis([{0 : 1, 2 : 1}])
        self.assertIn({0 : 3, 2 : 3}, eb)
        self.assertNotIn({0 : 1}, eb)

    def test_rref_coordinates(self):
        red = linalg.rref([{0 : 2, 1 : 4}, {1 : 3}])
        self.assertEqual(red, [(0, {0 : 1}), (1, {1 : 1})])
        self.assertEqual(linalg.coordinates(red, {0 : 3, 1 : 5}), [3, 5])
        with self.assertRaises(ValueError):
            linalg.coordinates(red, {2 : 1})

    def test_normal_form(self):
        red = linalg.rref([{0 : 1, 1 : 1}])
        self.assertEqual(linalg.normal_form(red, {0 : 2, 1 : 3}), {1 : 1})


class OracleTests(unittest.TestCase):
    """The brute-force algebra and its certificates."""
    def test_dimension(self):
        self.assertEqual(oracle.build_algebra(2).dim, 5)
        self.assertEqual(oracle.build_algebra(4).dim, 93)

    def test_unit(self):
        A = oracle.build_algebra(3)
        one = A.unit()
        for i in range(A.dim):
            self.assertEqual(A.multiply(one, {i : 1}), {i : 1})
            self.assertEqual(A.multiply({i : 1}, one), {i : 1})

    def test_product_table(self):
        A = oracle.build_algebra(2)
        f = A.index[surjections.Surjection((1, 1))]
        i1 = A.identities[1]
        i2 = A.identities[2]
        self.assertEqual(A.table[i1, f], f)
        self.assertEqual(A.table[f, i2], f)
        self.assertEqual(A.table[f, f], -1)
        self.assertEqual(A.table[i2, f], -1)

    def test_guard(self):
        with mock.patch.dict(os.environ, {"SURJTOOLS_FORCE" : "0"}):
            with self.assertRaises(util.GuardError):
                oracle.build_algebra(oracle.SIZE_GUARD + 1)
        with self.assertRaises(ValueError):
            oracle.build_algebra(-1)

    def test_radical(self):
        self.assertEqual(oracle.radical_basis(oracle.build_algebra(1)), [])
        A = oracle.build_algebra(2)
        self.assertEqual(oracle.radical_basis(A),
                         [A.index[surjections.Surjection((1, 1))]])
        self.assertEqual(oracle.certify_radical(A), 2)
        for n in range(5):
            A = oracle.build_algebra(n)
            self.assertLessEqual(oracle.certify_radical(A), n + 1)
            quotient = A.dim - len(oracle.radical_basis(A))
            self.assertEqual(quotient, sum(util.factorial(k)
                                           for k in range(n + 1)))

    def test_radical_certified_before_use(self):
        for n in range(4):
            self.assertTrue(oracle.build_algebra(n)._radical_certified)
        A = oracle.AlgebraRep(3)
        self.assertFalse(A._radical_certified)
        self.assertEqual(oracle.global_dimension(A), 2)
        self.assertTrue(A._radical_certified)
        B = oracle.AlgebraRep(2)
        with mock.patch.object(oracle, "certify_radical",
                               side_effect=util.CertificateError("bad")):
            with self.assertRaises(util.CertificateError):
                oracle.minimal_resolution(B, (2,))

    def test_young_idempotents(self):
        A = oracle.build_algebra(3)
        idx = A.permutations
        half = Fraction(1, 2)
        e = oracle.young_idempotent(A, (1,)).coefficients
        self.assertEqual(e, {idx[(1,)] : 1})
        e = oracle.young_idempotent(A, (2,)).coefficients
        self.assertEqual(e, {idx[(1, 2)] : half, idx[(2, 1)] : half})
        e = oracle.young_idempotent(A, (1, 1)).coefficients
        self.assertEqual(e, {idx[(1, 2)] : half, idx[(2, 1)] : -half})
        e = oracle.young_idempotent(A, (2, 1)).coefficients
        self.assertEqual(A.multiply(e, e), e)
        self.assertEqual(e[idx[(1, 2, 3)]], Fraction(1, 3))
        e = oracle.young_idempotent(A, ()).coefficients
        self.assertEqual(e, {idx[()] : 1})

    def test_complete_idempotents(self):
        A = oracle.build_algebra(4)
        for k in range(5):
            idems = oracle.complete_idempotents(A, k)
            self.assertEqual(len(idems), sum(
                partitions.hook_dimension(lam)
                for lam in partitions.enumerate_partitions(k)))
            total = {}
            for u in idems:
                util.multiset_add(total, u.coefficients)
            self.assertEqual(total, {A.identities[k] : 1})

    def test_cartan_entries(self):
        A = oracle.build_algebra(4)
        self.assertEqual(oracle.cartan_via_dims(A, (2, 1), (3, 1)), 2)
        self.assertEqual(oracle.cartan_via_dims(A, (3, 1), (2, 1)), 0)
        for lam in A.simples():
            self.assertEqual(oracle.cartan_via_dims(A, lam, lam), 1)

    def test_modules(self):
        A = oracle.build_algebra(3)
        total = 0
        for lam in A.simples():
            Pm = oracle.projective_module(A, lam)
            S = oracle.simple_module(A, lam)
            self.assertEqual(S.dimension, partitions.hook_dimension(lam))
            total += Pm.dimension*S.dimension
        self.assertEqual(total, A.dim)
        S = oracle.simple_module(A, (2, 1))
        self.assertEqual(S.dimension, 2)
        self.assertTrue(S.check_action())
        self.assertTrue(oracle.projective_module(A, (2,)).check_action())

    def test_regular_module_n4(self):
        A = oracle.build_algebra(4)
        total = sum(len(A.projective_basis(lam))
                    *partitions.hook_dimension(lam) for lam in A.simples())
        self.assertEqual(total, A.dim)

    def test_sgn_projective_is_simple(self):
        A = oracle.build_algebra(4)
        for k in range(5):
            self.assertEqual(len(A.projective_basis(sgn(k))), 1)
            res = oracle.minimal_resolution(A, sgn(k))
            self.assertEqual(res.length, 0)
            for lam in A.simples():
                self.assertEqual(oracle.ext_dim(A, sgn(k), lam, 1), 0)

    def test_ds_resolutions(self):
        A = oracle.build_algebra(4)
        for k in range(2, 5):
            self.assertEqual(oracle.projective_dimension(A, ds(k)), k - 1)
            self.assertEqual(oracle.ext_dim(A, ds(k), (1,), k - 1), 1)
        for k in range(3, 5):
            res = oracle.minimal_resolution(A, ds(k))
            self.assertEqual(res.terms[1], {ds(k - 1) : 1, sgn(k - 1) : 1})

    def test_jh_factors(self):
        A = oracle.build_algebra(4)
        for k in range(3, 5):
            self.assertEqual(oracle.jh_factors(A, ds(k)),
                             {ds(k) : 1, ds(k - 1) : 1, sgn(k - 1) : 1})
            for beta in partitions.enumerate_partitions(k - 2):
                self.assertEqual(oracle.cartan_via_dims(A, beta, ds(k)), 0)

    def test_global_dimension(self):
        self.assertEqual(oracle.global_dimension(0), 0)
        for n in range(1, 5):
            self.assertEqual(oracle.global_dimension(n), n - 1)

    def test_resolutions_step_down(self):
        A = oracle.build_algebra(4)
        for lam in A.simples():
            res = oracle.minimal_resolution(A, lam)
            for (m, term) in enumerate(res.terms):
                for mu in term:
                    self.assertLessEqual(mu.size, lam.size - m)

    def test_truncation(self):
        A = oracle.build_algebra(3)
        res = oracle.minimal_resolution(A, ds(3), max_len=1)
        self.assertTrue(res.truncated)
        with self.assertRaises(util.TruncatedResolutionError):
            res.length
        with self.assertRaises(util.TruncatedResolutionError):
            oracle.ext_dim(A, ds(3), (1,), 2, max_len=1)
        self.assertEqual(oracle.ext_dim(A, ds(3), (1,), 2), 1)

    def test_resolution_json(self):
        A = oracle.build_algebra(2)
        payload = oracle.minimal_resolution(A, (2,)).to_json()
        self.assertEqual(payload["legend"], [[], [1], [2], [1, 1]])
        self.assertEqual(payload["terms"], [[0, 0, 1, 0], [0, 1, 0, 0]])
        self.assertFalse(payload["truncated"])

    def test_certificates(self):
        for n in range(5):
            oracle.certify_algebra(oracle.build_algebra(n))


class CartanTests(unittest.TestCase):
    """Cartan matrices by three methods and the quiver."""
    def test_small(self):
        C = cartan.full_cartan(0)
        self.assertEqual(C.rows(), [[1]])
        for method in cartan.METHODS:
            C = cartan.full_cartan(1, method)
            self.assertEqual(C.rows(), [[1, 0], [0, 1]])

    def test_column(self):
        C = cartan.full_cartan(4)
        self.assertEqual(C.column(ds(4)),
                         {ds(4) : 1, ds(3) : 1, sgn(3) : 1})
        self.assertEqual(C.column(sgn(4)), {sgn(4) : 1})

    def test_entries(self):
        E = cartan.cartan_entry_character
        self.assertEqual(E((1,), (3,)), 1)
        self.assertEqual(E((1,), (2, 1)), 0)
        self.assertEqual(E((1,), (1, 1, 1)), 0)
        self.assertEqual(E((2, 1), (3, 1)), 2)
        self.assertEqual(E((2, 1), (2, 1)), 1)
        self.assertEqual(E((3,), (2,)), 0)

    def test_first_superdiagonal(self):
        F = cartan.cartan_first_superdiagonal
        self.assertEqual(F((1,), (2,)), 1)
        self.assertEqual(F((1,), (1, 1)), 0)
        self.assertEqual(F((2, 1), (3, 1)), 2)
        for k in range(1, 6):
            for beta in partitions.enumerate_partitions(k):
                self.assertEqual(F(beta, sgn(k + 1)), 0)
        with self.assertRaises(ValueError):
            F((1,), (3,))

    def test_second_superdiagonal(self):
        S = cartan.cartan_second_superdiagonal
        self.assertEqual(S((1,), (3,)), 1)
        self.assertEqual(S((1,), (2, 1)), 0)
        self.assertEqual(S((1,), (1, 1, 1)), 0)
        self.assertEqual(cartan.second_superdiagonal_parts((1,), (3,)),
                         (1, 0))
        self.assertEqual(S((2,), (2, 2)),
                         cartan.cartan_entry_character((2,), (2, 2)))
        for k in range(3, 7):
            for beta in partitions.enumerate_partitions(k - 2):
                self.assertEqual(S(beta, ds(k)), 0)
        with self.assertRaises(ValueError):
            S((1,), (2,))

    def test_d4_table(self):
        self.assertEqual(cartan.regenerate_d4_substitution(),
                         cartan.D4_SUBSTITUTION)

    def test_methods_agree(self):
        for n in range(5):
            C = cartan.full_cartan(n, "character")
            self.assertTrue(C.is_block_unitriangular())
            self.assertTrue(C.is_nonnegative())
            self.assertEqual(cartan.full_cartan(n, "oracle"), C)
        self.assertEqual(cartan.full_cartan(3, "closed_form"),
                         cartan.full_cartan(3, "character"))
        with self.assertWarns(UserWarning):
            closed = cartan.full_cartan(4, "closed_form", fill="unknown")
        self.assertTrue(closed.has_unknowns())
        self.assertTrue(closed.agrees_with(cartan.full_cartan(4)))

    def test_closed_form_refuses_offset_three(self):
        with self.assertRaises(ValueError):
            cartan.full_cartan(4, "closed_form")
        with self.assertRaises(ValueError):
            cartan.full_cartan(2, "nonsense")

    def test_formats(self):
        C = cartan.full_cartan(2)
        payload = C.to_json()
        self.assertEqual(payload["legend"], [[], [1], [2], [1, 1]])
        self.assertEqual(payload["matrix"][1], [0, 1, 1, 0])
        lines = C.to_csv().splitlines()
        self.assertEqual(lines[0], ',[],[1],[2],"[1,1]"')
        self.assertEqual(len(lines), 5)

    def test_hom_decomposition(self):
        self.assertEqual(cartan.hom_decomposition(3, 1),
                         {(P((1,)), P((3,))) : 1})

    def test_quiver4(self):
        q = cartan.quiver(4)
        self.assertEqual(len(q.vertices), 12)
        expected = [
            ((4,), (3,)), ((3, 1), (3,)), ((2, 2), (3,)),
            ((4,), (2, 1)), ((3, 1), (2, 1)), ((3, 1), (2, 1)),
            ((2, 2), (2, 1)), ((2, 1, 1), (2, 1)),
            ((3, 1), (1, 1, 1)), ((2, 1, 1), (1, 1, 1)),
            ((3,), (2,)), ((2, 1), (2,)), ((3,), (1, 1)), ((2, 1), (1, 1)),
            ((2,), (1,)),
        ]
        self.assertEqual(sorted(q.arrow_list()), sorted(expected))
        self.assertEqual(q.num_arrows, 15)
        self.assertEqual(q.arrow_count((3, 1), (2, 1)), 2)
        for k in range(5):
            self.assertEqual(q.successors(sgn(k)), [])
        dot = q.to_dot()
        self.assertEqual(dot.count(" -> "), 15)
        self.assertEqual(dot.count('"[3,1]" -> "[2,1]";'), 2)
        self.assertEqual(len(q.to_json()["arrows"]), 14)

    def test_longest_paths(self):
        self.assertEqual(cartan.longest_path(cartan.quiver(1)), 0)
        self.assertEqual(cartan.longest_path(cartan.quiver(4)), 3)
        self.assertEqual(cartan.longest_path(cartan.quiver(6)), 5)
        q = cartan.quiver(4)
        self.assertEqual(cartan.longest_path_from(q, ds(4)), 3)
        self.assertEqual(cartan.longest_path_from(q, (1,)), 0)

    def test_cycle_detection(self):
        q = cartan.QuiverGraph(1, [P(), P((1,))],
                               {(P(), P((1,))) : 1, (P((1,)), P()) : 1})
        with self.assertRaises(ValueError):
            cartan.longest_path(q)

    def test_quiver_is_ext1(self):
        A = oracle.build_algebra(4)
        q = cartan.quiver(4)
        for alpha in q.vertices:
            for beta in q.vertices:
                self.assertEqual(oracle.ext_dim(A, alpha, beta, 1),
                                 q.arrow_count(alpha, beta))

    def test_pd_bounded_by_paths(self):
        A = oracle.build_algebra(4)
        q = cartan.quiver(4)
        for lam in A.simples():
            self.assertLessEqual(oracle.projective_dimension(A, lam),
                                 cartan.longest_path_from(q, lam))


class CliTests(unittest.TestCase):
    """Command-line dispatch, outputs and exit codes."""
    def call(self, *argv):
        with mock.patch("sys.stdout", new_callable=io.StringIO) as out, \
                mock.patch("sys.stderr", new_callable=io.StringIO):
            status = cli.main(list(argv))
        return (status, out.getvalue())

    def test_gdim(self):
        self.assertEqual(self.call("gdim", "--n", "3"), (0, "2\n"))

    def test_cartan_zero(self):
        (status, text) = self.call("cartan", "--n", "0")
        self.assertEqual(status, 0)
        self.assertIn('"matrix": [[1]]', text)
        self.assertEqual(self.call("cartan", "--n", "0", "--format", "text"),
                         (0, "1\n"))

    def test_quiver_dot(self):
        (status, text) = self.call("quiver", "--n", "4", "--format", "dot")
        self.assertEqual(status, 0)
        self.assertEqual(text.count(" -> "), 15)
        self.assertTrue(text.startswith("digraph"))

    def test_lr(self):
        self.assertEqual(self.call("lr", "--lambda", "[2,1]", "--delta",
                                   "[2,1]", "--gamma", "[3,2,1]"),
                         (0, '{"[3,2,1]": 2}\n'))
        self.assertEqual(self.call("lr", "--lambda", "[1]", "--delta", "[1]"),
                         (0, '{"[2]": 1, "[1,1]": 1}\n'))
        self.assertEqual(self.call("lr", "--lambda", "[1]", "--delta", "[1]",
                                   "--gamma", "[3]")[0], cli.EXIT_USAGE)

    def test_char(self):
        self.assertEqual(self.call("char", "--lambda", "[2,1]", "--mu", "[3]"),
                         (0, "-1\n"))
        (status, text) = self.call("char", "--lambda", "[2,1]")
        self.assertEqual(status, 0)
        self.assertEqual(characters.ClassFunction.from_json(json.loads(text)),
                         characters.irreducible((2, 1)))
        self.assertEqual(self.call("char", "--payload", text),
                         (0, '{"[2,1]": 1}\n'))
        regular = json.dumps(characters.regular_character(3).to_json())
        self.assertEqual(self.call("char", "--payload", regular),
                         (0, '{"[3]": 1, "[2,1]": 2, "[1,1,1]": 1}\n'))
        half = json.dumps({"degrees" : [2],
                           "values" : [{"class" : [1, 1], "value" : "1/2"}]})
        self.assertEqual(self.call("char", "--payload", half)[0],
                         cli.EXIT_USAGE)
        self.assertEqual(self.call("char", "--payload", "{")[0],
                         cli.EXIT_USAGE)
        self.assertEqual(self.call("char")[0], cli.EXIT_USAGE)

    def test_homchar(self):
        (status, text) = self.call("homchar", "--r", "3", "--k", "1",
                                   "--decompose")
        self.assertEqual(status, 0)
        self.assertEqual(text, '[{"beta": [1], "alpha": [3], '
                               '"multiplicity": 1}]\n')

    def test_resolve(self):
        (status, text) = self.call("resolve", "--n", "2", "--partition",
                                   "[2]")
        self.assertEqual(status, 0)
        self.assertIn('"terms": [[0, 0, 1, 0], [0, 1, 0, 0]]', text)

    def test_usage_errors(self):
        self.assertEqual(self.call("lr", "--lambda", "[1,2]", "--delta",
                                   "[1]")[0], cli.EXIT_USAGE)
        self.assertEqual(self.call("frobnicate")[0], cli.EXIT_USAGE)
        self.assertEqual(self.call()[0], cli.EXIT_USAGE)
        self.assertEqual(self.call("gdim", "--n", "-1")[0], cli.EXIT_USAGE)
        self.assertEqual(self.call("resolve", "--n", "2", "--partition",
                                   "[3]")[0], cli.EXIT_USAGE)

    def test_verbosity_restored(self):
        before = util.getMaxVerbosity()
        self.call("gdim", "--n", "2", "-v", "-v")
        self.assertEqual(util.getMaxVerbosity(), before)

    def test_guard(self):
        with mock.patch.dict(os.environ, {"SURJTOOLS_FORCE" : "0"}):
            (status, text) = self.call("gdim", "--n",
                                       str(oracle.SIZE_GUARD + 1))
        self.assertEqual(status, cli.EXIT_GUARD)
        self.assertEqual(text, "")

    def test_verify(self):
        (status, text) = self.call("verify", "--n", "3")
        self.assertEqual(status, 0)
        lines = text.splitlines()
        self.assertEqual(len(lines), len(cli.CHECKS))
        self.assertTrue(all(line.startswith("PASS") for line in lines))

    def test_deterministic(self):
        first = self.call("cartan", "--n", "3", "--format", "csv")
        self.assertEqual(first, self.call("cartan", "--n", "3", "--format",
                                          "csv"))


@unittest.skipUnless(LONG_TESTS, "set SURJTOOLS_LONG_TESTS=1 to run")
class LongTests(unittest.TestCase):
    """The n = 5 oracle checks."""
    def test_global_dimension_5(self):
        self.assertEqual(oracle.global_dimension(5), 4)

    def test_cartan_5(self):
        C = cartan.full_cartan(5, "character")
        self.assertEqual(cartan.full_cartan(5, "oracle"), C)
        with self.assertWarns(UserWarning):
            closed = cartan.full_cartan(5, "closed_form", fill="unknown")
        self.assertTrue(closed.agrees_with(C))

    def test_ds_ladder_5(self):
        A = oracle.build_algebra(5)
        self.assertEqual(oracle.projective_dimension(A, ds(5)), 4)
        self.assertEqual(oracle.ext_dim(A, ds(5), (1,), 4), 1)
        self.assertEqual(oracle.jh_factors(A, ds(5)),
                         {ds(5) : 1, ds(4) : 1, sgn(4) : 1})

    def test_certificates_5(self):
        oracle.certify_algebra(oracle.build_algebra(5))


if __name__ == "__main__":
    unittest.main()
