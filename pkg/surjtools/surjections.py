import itertools
from collections import Counter
from functools import lru_cache
from fractions import Fraction
from . import util
from . import characters
from .partitions import Partition

"""
The skeletal category of finite sets and surjections: hom-sets, composition,
kernel types, and the S_k x S_r action on SE(r, k) with its orbits,
stabilizers and permutation characters.
"""

class Surjection(object):
    """
    An onto map {1..r} -> {1..k} stored as its image table.

    images[i - 1] is the image of i. The codomain size is inferred from the
    images unless given; the empty map 0 -> 0 is valid.
    """
    __slots__ = ("images", "codomain_size")

    def __init__(self, images, codomain_size=None):
        images = tuple(int(x) for x in images)
        k = max(images) if images else 0
        if codomain_size is not None:
            if codomain_size != k:
                raise ValueError("Map %r does not hit every point of {1..%d}."
                                 % (images, codomain_size))
        if any(x < 1 for x in images):
            raise ValueError("Images must lie in {1..k}: %r." % (images,))
        if len(set(images)) != k:
            raise ValueError("Map %r is not onto {1..%d}." % (images, k))
        self.images = images
        self.codomain_size = k

    @property
    def domain_size(self):
        return len(self.images)

    def __call__(self, i):
        return self.images[i - 1]

    def is_identity(self):
        return self.images == util.identity_perm(len(self.images))

    def __eq__(self, other):
        return isinstance(other, Surjection) and self.images == other.images

    def __ne__(self, other):
        return not self == other

    def __lt__(self, other):
        return ((self.domain_size, self.codomain_size, self.images)
                < (other.domain_size, other.codomain_size, other.images))

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return "Surjection(%r)" % (self.images,)


def identity(k):
    """Identity morphism of the object k."""
    return Surjection(util.identity_perm(k))


@lru_cache(maxsize=None)
def _hom(r, k):
    if k < 0 or r < 0:
        raise ValueError("Object sizes must be nonnegative.")
    maps = []
    for images in itertools.product(range(1, k + 1), repeat=r):
        if len(set(images)) == k:
            maps.append(Surjection(images))
    return tuple(maps)


def enumerate_surjections(r, k):
    """
    All onto maps {1..r} -> {1..k} in lexicographic order of image tables.

    There are k! S(r, k) of them; the list is empty when r < k or when k = 0
    and r > 0. Hom-sets are cached per (r, k).
    """
    return list(_hom(r, k))


def compose(g, f):
    """
    Returns g o f (apply f first).

    Raises ValueError unless the codomain of f is the domain of g.
    """
    if f.codomain_size != g.domain_size:
        raise ValueError("Cannot compose %d -> %d after %d -> %d."
                         % (g.domain_size, g.codomain_size, f.domain_size,
                            f.codomain_size))
    return Surjection(tuple(g.images[j - 1] for j in f.images))


def kappa1(k):
    """
    The map k + 2 -> k fixing 1..k and sending k + 1, k + 2 to k.
    """
    if k < 1:
        raise ValueError("kappa1 needs k >= 1.")
    return Surjection(tuple(range(1, k + 1)) + (k, k))


def kappa2(k):
    """
    The map k + 2 -> k fixing 1..k-2, collapsing {k-1, k} to k - 1 and
    {k+1, k+2} to k.
    """
    if k < 2:
        raise ValueError("kappa2 needs k >= 2.")
    return Surjection(tuple(range(1, k - 1)) + (k - 1, k - 1, k, k))


def kernel_type(f):
    """Sizes of the fibers of f as a partition of r with k parts."""
    return Partition(sorted(Counter(f.images).values(), reverse=True))


def act(sigma, pi, f):
    """
    The action (sigma, pi) . f = sigma o f o pi^-1 of S_k x S_r on SE(r, k).
    """
    sigma = tuple(sigma)
    pi = tuple(pi)
    if len(sigma) != f.codomain_size or len(pi) != f.domain_size:
        raise ValueError("Cannot act with S_%d x S_%d on a map %d -> %d."
                         % (len(sigma), len(pi), f.domain_size,
                            f.codomain_size))
    piinv = util.inverse_perm(pi)
    return Surjection(tuple(sigma[f.images[j - 1] - 1] for j in piinv))


def _group_generators(k, r):
    """Generators of S_k x S_r as pairs of permutations."""
    idk = util.identity_perm(k)
    idr = util.identity_perm(r)
    return ([(s, idr) for s in util.perm_generators(k)]
            + [(idk, t) for t in util.perm_generators(r)])


def orbit(f):
    """The S_k x S_r orbit of f, found by closure under generators."""
    gens = _group_generators(f.codomain_size, f.domain_size)
    seen = {f}
    frontier = [f]
    while frontier:
        newfrontier = []
        for g in frontier:
            for (sigma, pi) in gens:
                h = act(sigma, pi, g)
                if h not in seen:
                    seen.add(h)
                    newfrontier.append(h)
        frontier = newfrontier
    return frozenset(seen)


def orbits(r, k):
    """
    All orbits of S_k x S_r on SE(r, k), each a frozenset.

    Orbits are listed by their smallest element. Every orbit is a single
    kernel type, and there is one orbit per partition of r into k parts.
    """
    remaining = set(_hom(r, k))
    result = []
    for f in _hom(r, k):
        if f in remaining:
            o = orbit(f)
            remaining -= o
            result.append(o)
    return result


def orbits_second_level(k):
    """
    Splits SE(k + 2, k) into O_1 (kernel type [3,1^(k-1)]) and O_2 (kernel
    type [2,2,1^(k-2)]).

    Each class is certified to be the single orbit of kappa1(k) or kappa2(k).
    Raises ValueError for k < 2, where the action is transitive.
    """
    if k < 2:
        raise ValueError("Second-level orbits need k >= 2; for k = 1 the "
                         "action on SE(3, 1) is transitive.")
    type1 = Partition((3,) + (1,)*(k - 1))
    type2 = Partition((2, 2) + (1,)*(k - 2))
    O1 = set()
    O2 = set()
    for f in _hom(k + 2, k):
        t = kernel_type(f)
        if t == type1:
            O1.add(f)
        elif t == type2:
            O2.add(f)
        else:
            raise util.CertificateError("Unexpected kernel type %s in "
                                        "SE(%d, %d)." % (t, k + 2, k))
    if orbit(kappa1(k)) != O1 or orbit(kappa2(k)) != O2:
        raise util.CertificateError("Kernel-type classes of SE(%d, %d) are "
                                    "not single orbits." % (k + 2, k))
    return (O1, O2)


def stabilizer(f):
    """
    All (sigma, pi) in S_k x S_r with sigma o f o pi^-1 = f, by brute force.
    """
    k = f.codomain_size
    r = f.domain_size
    stab = []
    for sigma in util.all_perms(k):
        for pi in util.all_perms(r):
            # sigma f = f pi is the same condition without inverting pi.
            if all(sigma[f.images[i] - 1] == f.images[pi[i] - 1]
                   for i in range(r)):
                stab.append((sigma, pi))
    return stab


def kappa_stabilizers(k):
    """
    The stabilizers K_1 of kappa1(k) and K_2 of kappa2(k) from their
    explicit descriptions.

    K_1 = {(rho, rho tau)} with rho in S_(k-1) and tau in S_3 on the last
    three points. K_2 = {(rho nu(tau), rho tau)} with rho in S_(k-2) and tau
    in D_4 on the last four points. Sizes are (k-1)! 3! and (k-2)! 8. K_2 is
    empty for k < 2.
    """
    if k < 1:
        raise ValueError("kappa stabilizers need k >= 1.")
    K1 = []
    for rho in util.all_perms(k - 1):
        sigma = util.embed_perm(rho, k)
        for tau in util.all_perms(3):
            pi = util.compose_perm(util.embed_perm(rho, k + 2),
                                   util.embed_perm(tau, k + 2, k - 1))
            K1.append((sigma, pi))
    K2 = []
    if k >= 2:
        for rho in util.all_perms(k - 2):
            for tau in characters.DIHEDRAL_D4:
                sigma = util.compose_perm(
                    util.embed_perm(rho, k),
                    util.embed_perm(characters.nu(tau), k, k - 2))
                pi = util.compose_perm(util.embed_perm(rho, k + 2),
                                       util.embed_perm(tau, k + 2, k - 2))
                K2.append((sigma, pi))
    return (K1, K2)


def induce_trivial(elements, k, r):
    """
    Class function of Ind from K to S_k x S_r of the trivial character.

    elements lists the pairs (sigma, pi) of the subgroup K. The value on a
    class c is |G| |K n c| / (|K| |c|).
    """
    elements = list(elements)
    if len(elements) == 0:
        raise ValueError("Subgroup must be nonempty.")
    hits = Counter((characters.cycle_type(s), characters.cycle_type(p))
                   for (s, p) in elements)
    order = util.factorial(k)*util.factorial(r)
    values = {}
    for ((mu, nu), count) in hits.items():
        size = characters.class_size(mu)*characters.class_size(nu)
        values[(mu, nu)] = Fraction(order*count, len(elements)*size)
    return characters.ClassFunction((k, r), values)


@lru_cache(maxsize=None)
def hom_permutation_character(r, k):
    """
    Permutation character of S_k x S_r acting on SE(r, k).

    The value at (mu, nu) counts the maps fixed by the fixed class
    representatives (sigma_mu, pi_nu). Zero when r < k.
    """
    homset = _hom(r, k)
    values = {}
    for (mu, nu) in characters.classes_of((k, r)):
        sigma = characters.class_representative(mu)
        pi = characters.class_representative(nu)
        fixed = 0
        for f in homset:
            if all(sigma[f.images[i] - 1] == f.images[pi[i] - 1]
                   for i in range(r)):
                fixed += 1
        values[(mu, nu)] = fixed
    return characters.ClassFunction((k, r), values)


def fixes_block_map(tau_prime, tau):
    """
    True if (tau', tau) in S_2 x S_4 fixes the map (1,1,2,2).

    This happens exactly for tau in D_4 and tau' = nu(tau).
    """
    kappa = kappa2(2)
    return act(tau_prime, tau, kappa) == kappa


def second_level_counts(k):
    """Closed forms (|O_1|, |O_2|) = (C(k+2,3) k!, C(k+2,2) C(k,2) k!/2)."""
    if k < 2:
        raise ValueError("Second-level orbits need k >= 2.")
    return (util.binomial(k + 2, 3)*util.factorial(k),
            util.binomial(k + 2, 2)*util.binomial(k, 2)*util.factorial(k)//2)
