from fractions import Fraction
from functools import lru_cache
import itertools
from . import util
from .partitions import Partition, enumerate_partitions, hook_dimension

"""
Exact character theory of S_k and of products S_k x S_r.

Class functions are stored densely over cycle types in the global partition
order (pairs of cycle types in lexicographic pair order for product groups).
Values are exact Fractions; characters of genuine representations come out
integral.
"""

# =================================
# Conjugacy classes
# =================================

def classes_of(degrees):
    """Class labels for S_k (degrees=(k,)) or S_k x S_r (degrees=(k, r))."""
    degrees = tuple(degrees)
    if len(degrees) == 1:
        return enumerate_partitions(degrees[0])
    elif len(degrees) == 2:
        return [(mu, nu) for mu in enumerate_partitions(degrees[0])
                for nu in enumerate_partitions(degrees[1])]
    raise ValueError("Only S_k and S_k x S_r are supported, not %r."
                     % (degrees,))


def centralizer_order(mu):
    """z_mu = prod_i i^(m_i) m_i! for m_i parts equal to i."""
    z = 1
    for (part, group) in itertools.groupby(mu):
        m = len(list(group))
        z *= part**m*util.factorial(m)
    return z


def class_size(mu):
    """Number of permutations in S_|mu| with cycle type mu."""
    mu = Partition(mu)
    return util.factorial(mu.size)//centralizer_order(mu)


def _class_size(label):
    """Class size for a label of S_k or of S_k x S_r."""
    if isinstance(label, Partition):
        return class_size(label)
    (mu, nu) = label
    return class_size(mu)*class_size(nu)


def class_representative(mu):
    """The permutation (1..mu_1)(mu_1+1..mu_1+mu_2)... of cycle type mu."""
    mu = Partition(mu)
    cycles = []
    start = 1
    for p in mu:
        cycles.append(tuple(range(start, start + p)))
        start += p
    return util.perm_from_cycles(cycles, mu.size)


def cycle_type(p):
    """Cycle type of a permutation as a Partition."""
    return Partition(util.cycle_lengths(p))


def merge_types(mu, nu):
    """Cycle type of (sigma, pi) viewed inside S_(k+r)."""
    return Partition(sorted(tuple(mu) + tuple(nu), reverse=True))


class ClassFunction(object):
    """
    A class function on S_k or on S_k x S_r.

    degrees is (k,) or (k, r). values may be a dict keyed by class labels
    (missing labels are zero) or a sequence in class order.
    """
    def __init__(self, degrees, values):
        self.__degrees = tuple(int(d) for d in degrees)
        self.__classes = classes_of(self.__degrees)
        if util.is_mapping(values):
            unknown = set(values) - set(self.__classes)
            if unknown:
                raise ValueError("Unknown class labels: %r." % (unknown,))
            vals = [values.get(c, 0) for c in self.__classes]
        else:
            vals = list(values)
            if len(vals) != len(self.__classes):
                raise ValueError("Expected %d values, got %d."
                                 % (len(self.__classes), len(vals)))
        self.__values = tuple(Fraction(v) for v in vals)

    @property
    def degrees(self):
        return self.__degrees

    @property
    def classes(self):
        return list(self.__classes)

    @property
    def values(self):
        return self.__values

    @property
    def group_order(self):
        order = 1
        for d in self.__degrees:
            order *= util.factorial(d)
        return order

    def __call__(self, label):
        """Value on the class with the given label."""
        try:
            return self.__values[self.__classes.index(label)]
        except ValueError:
            raise KeyError("No class %r in %r." % (label, self.__degrees))

    def items(self):
        return zip(self.__classes, self.__values)

    def degree(self):
        """Value at the identity, i.e. the dimension for a character."""
        if len(self.__degrees) == 1:
            ident = Partition((1,)*self.__degrees[0])
        else:
            ident = (Partition((1,)*self.__degrees[0]),
                     Partition((1,)*self.__degrees[1]))
        return self(ident)

    def _check_same(self, other):
        if not isinstance(other, ClassFunction):
            raise TypeError("Expected a ClassFunction.")
        if other.degrees != self.degrees:
            raise ValueError("Class functions live on different groups: %r "
                             "and %r." % (self.degrees, other.degrees))

    def __add__(self, other):
        self._check_same(other)
        return ClassFunction(self.degrees, [a + b for (a, b)
                             in zip(self.values, other.values)])

    def __sub__(self, other):
        self._check_same(other)
        return ClassFunction(self.degrees, [a - b for (a, b)
                             in zip(self.values, other.values)])

    def __neg__(self):
        return ClassFunction(self.degrees, [-a for a in self.values])

    def __mul__(self, other):
        """Pointwise product with a class function, or scaling."""
        if isinstance(other, ClassFunction):
            self._check_same(other)
            return ClassFunction(self.degrees, [a*b for (a, b)
                                 in zip(self.values, other.values)])
        return ClassFunction(self.degrees, [a*other for a in self.values])

    __rmul__ = __mul__

    def __eq__(self, other):
        return (isinstance(other, ClassFunction)
                and self.degrees == other.degrees
                and self.values == other.values)

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.degrees, self.values))

    def tensor(self, other):
        """Outer product: a class function on S_k x S_r."""
        if len(self.degrees) != 1 or len(other.degrees) != 1:
            raise ValueError("Outer products need two class functions on "
                             "single symmetric groups.")
        values = {(mu, nu) : a*b for (mu, a) in self.items()
                  for (nu, b) in other.items()}
        return ClassFunction(self.degrees + other.degrees, values)

    def to_json(self):
        """JSON form: list of {"class": ..., "value": ...} records."""
        records = []
        for (c, v) in self.items():
            label = c.to_json() if isinstance(c, Partition) else \
                [c[0].to_json(), c[1].to_json()]
            value = int(v) if v.denominator == 1 else str(v)
            records.append({"class" : label, "value" : value})
        return {"degrees" : list(self.degrees), "values" : records}

    @classmethod
    def from_json(cls, payload):
        """Inverse of to_json; labels may be in any order."""
        try:
            degrees = tuple(payload["degrees"])
            values = {}
            for record in payload["values"]:
                label = record["class"]
                if len(degrees) == 1:
                    key = Partition(label)
                else:
                    key = (Partition(label[0]), Partition(label[1]))
                values[key] = Fraction(record["value"])
        except (KeyError, TypeError) as err:
            raise ValueError("Malformed class function payload: %s" % err)
        return cls(degrees, values)

    def __repr__(self):
        return "ClassFunction(%r, %r)" % (self.degrees,
                                          [str(v) for v in self.values])


# =================================
# Irreducible characters
# =================================

@lru_cache(maxsize=None)
def _mn(lam, mu):
    """Murnaghan-Nakayama recursion on beta-sets; lam, mu plain tuples."""
    if len(mu) == 0:
        return 1 if len(lam) == 0 else 0
    m = mu[0]
    rest = mu[1:]
    L = len(lam)
    beta = [lam[i] + (L - 1 - i) for i in range(L)]
    beads = set(beta)
    total = 0
    for b in beta:
        target = b - m
        if target < 0 or target in beads:
            continue
        height = sum(1 for c in beta if target < c < b)
        newbeta = sorted((beads - {b}) | {target}, reverse=True)
        newlam = tuple(x - (L - 1 - i) for (i, x) in enumerate(newbeta))
        newlam = tuple(x for x in newlam if x > 0)
        total += (-1)**height*_mn(newlam, rest)
    return total


def mn_character(lam, mu):
    """
    Irreducible character value chi^lam(mu).

    Border strips of length mu_1 are removed recursively. Raises ValueError
    on a size mismatch.
    """
    lam = Partition(lam)
    mu = Partition(mu)
    if lam.size != mu.size:
        raise ValueError("Size mismatch: |%s| != |%s|." % (lam, mu))
    return _mn(tuple(lam), tuple(mu))


def irreducible(lam):
    """The irreducible character chi^lam as a ClassFunction."""
    lam = Partition(lam)
    return ClassFunction((lam.size,), [mn_character(lam, mu) for mu
                                       in enumerate_partitions(lam.size)])


def trivial(k):
    """Trivial character tr_k."""
    return ClassFunction((k,), [1]*len(enumerate_partitions(k)))


def sign(k):
    """Sign character of S_k."""
    return ClassFunction((k,), [(-1)**(mu.size - len(mu)) for mu
                                in enumerate_partitions(k)])


def regular_character(k):
    """Character of the regular representation of S_k."""
    return ClassFunction((k,), {Partition((1,)*k) : util.factorial(k)})


def inner_product(phi, psi):
    """
    <phi, psi> = 1/|G| sum_g phi(g) psi(g), computed classwise.

    All values are real, so no conjugation is needed. Returns a Fraction.
    """
    phi._check_same(psi)
    total = sum(_class_size(c)*a*b for ((c, a), b)
                in zip(phi.items(), psi.values))
    return Fraction(total, phi.group_order)


def restrict_to_young(chi, a, b):
    """
    Restriction of a class function on S_(a+b) to S_a x S_b.

    The value at (mu, nu) is chi at the merged cycle type.
    """
    if len(chi.degrees) != 1:
        raise ValueError("Can only restrict class functions on S_k.")
    if a < 0 or b < 0 or a + b != chi.degrees[0]:
        raise ValueError("Cannot restrict S_%d to S_%d x S_%d."
                         % (chi.degrees[0], a, b))
    values = {(mu, nu) : chi(merge_types(mu, nu)) for (mu, nu)
              in classes_of((a, b))}
    return ClassFunction((a, b), values)


def induce_young(phi):
    """
    Induces a class function on S_a x S_b up to S_(a+b).

    Uses Ind(rho) = sum over (mu, nu) merging to rho of
    z_rho/(z_mu z_nu) phi(mu, nu).
    """
    if len(phi.degrees) != 2:
        raise ValueError("Need a class function on S_a x S_b.")
    (a, b) = phi.degrees
    values = {}
    for ((mu, nu), v) in phi.items():
        rho = merge_types(mu, nu)
        weight = Fraction(centralizer_order(rho),
                          centralizer_order(mu)*centralizer_order(nu))
        values[rho] = values.get(rho, 0) + weight*v
    return ClassFunction((a + b,), values)


def induce_product(chi1, chi2, method="formula"):
    """
    Ind from S_a x S_b to S_(a+b) of the outer product chi1 x chi2.

    method="formula" uses the induced-character formula; method="reciprocity"
    decomposes with Frobenius reciprocity against every irreducible and
    reassembles. Both give the same class function.
    """
    phi = chi1.tensor(chi2)
    if method == "formula":
        return induce_young(phi)
    elif method == "reciprocity":
        (a, b) = phi.degrees
        result = ClassFunction((a + b,), {})
        for gamma in enumerate_partitions(a + b):
            mult = inner_product(phi, restrict_to_young(irreducible(gamma),
                                                        a, b))
            if mult != 0:
                result = result + mult*irreducible(gamma)
        return result
    raise ValueError("Unknown induction method '%s'." % method)


def _check_subgroup(elements):
    """Raises ValueError unless elements form a group of permutations."""
    group = set(elements)
    if len(group) == 0:
        raise ValueError("Subgroup must be nonempty.")
    m = len(elements[0])
    if any(len(g) != m or not util.is_perm(g) for g in group):
        raise ValueError("Subgroup elements must be permutations of one set.")
    if util.identity_perm(m) not in group:
        raise ValueError("Subgroup must contain the identity.")
    for g in group:
        for h in group:
            if util.compose_perm(g, h) not in group:
                raise ValueError("Elements are not closed under composition.")
    return group


def induce_from_subgroup(elements, chi):
    """
    Induces a class function from a subgroup H of S_m to S_m.

    elements lists the permutations in H; chi gives the value on each element,
    either as a sequence aligned with elements or as a dict keyed by element.
    Uses Ind chi(g) = 1/|H| sum over x in S_m with x^-1 g x in H of
    chi(x^-1 g x), summed over the whole ambient group.
    """
    elements = [tuple(g) for g in elements]
    group = _check_subgroup(elements)
    if util.is_mapping(chi):
        values = {tuple(g) : Fraction(v) for (g, v) in chi.items()}
    else:
        chi = list(chi)
        if len(chi) != len(elements):
            raise ValueError("Need one value per subgroup element.")
        values = {g : Fraction(v) for (g, v) in zip(elements, chi)}
    if set(values) != group:
        raise ValueError("Values must be given on exactly the subgroup.")
    for g in group:
        for x in group:
            conj = util.compose_perm(util.compose_perm(x, g),
                                     util.inverse_perm(x))
            if values[conj] != values[g]:
                raise ValueError("chi is not constant on conjugacy classes.")
    m = len(elements[0])
    ambient = list(util.all_perms(m))
    result = {}
    for mu in enumerate_partitions(m):
        g = class_representative(mu)
        total = Fraction(0)
        for x in ambient:
            conj = util.compose_perm(util.compose_perm(util.inverse_perm(x),
                                                       g), x)
            if conj in values:
                total += values[conj]
        result[mu] = total/len(group)
    return ClassFunction((m,), result)


def decompose(chi):
    """
    Multiplicities of irreducibles in a character.

    Returns lam -> multiplicity for S_k, (lam, delta) -> multiplicity for
    S_k x S_r, with zero entries omitted. Raises ValueError("not a
    character") if some multiplicity is negative or not an integer.
    """
    result = {}
    if len(chi.degrees) == 1:
        labels = [(lam, irreducible(lam)) for lam
                  in enumerate_partitions(chi.degrees[0])]
    else:
        (k, r) = chi.degrees
        labels = [((lam, delta), irreducible(lam).tensor(irreducible(delta)))
                  for lam in enumerate_partitions(k)
                  for delta in enumerate_partitions(r)]
    for (label, irr) in labels:
        mult = inner_product(chi, irr)
        if mult.denominator != 1 or mult < 0:
            raise ValueError("not a character: multiplicity %s for %s."
                             % (mult, label))
        if mult != 0:
            result[label] = int(mult)
    return result


def multiset_dimension(mults):
    """sum of multiplicity times dimension for a decomposition."""
    total = 0
    for (label, m) in mults.items():
        if isinstance(label, Partition):
            total += m*hook_dimension(label)
        else:
            total += m*hook_dimension(label[0])*hook_dimension(label[1])
    return total


def from_multiset(mults, k):
    """Character sum of m_lam chi^lam for a multiset on partitions of k."""
    result = ClassFunction((k,), {})
    for (lam, m) in mults.items():
        result = result + m*irreducible(lam)
    return result


# =================================
# The dihedral subgroup D_4 of S_4
# =================================

# Generated by a = (12) and b = (13)(24), listed in the order of the
# character tables: the four elements keeping corners first.
DIHEDRAL_D4 = tuple(util.perm_from_cycles(c, 4) for c in [
    [], [(1, 2)], [(3, 4)], [(1, 2), (3, 4)],
    [(1, 3), (2, 4)], [(1, 4), (2, 3)], [(1, 3, 2, 4)], [(1, 4, 2, 3)],
])


def nu(tau):
    """
    The homomorphism D_4 -> S_2 with nu(a) = id and nu(b) = (12).

    It records whether tau swaps the blocks {1,2} and {3,4}.
    """
    tau = tuple(tau)
    if tau not in DIHEDRAL_D4:
        raise ValueError("%r is not in D_4." % (tau,))
    return (1, 2) if set(tau[:2]) == {1, 2} else (2, 1)


# Inflations of tr_2 and sgn_2 along nu, aligned with DIHEDRAL_D4.
D4_TRIVIAL = (1,)*8
D4_SIGN_BAR = tuple(util.perm_sign(nu(t)) for t in DIHEDRAL_D4)
