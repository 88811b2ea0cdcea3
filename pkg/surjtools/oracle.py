from fractions import Fraction
from functools import lru_cache
import numpy as np
from . import util
from . import linalg
from .partitions import (Partition, all_partitions_upto, enumerate_partitions,
                         hook_dimension, row_filled_tableau, standard_tableaux)
from .surjections import enumerate_surjections

"""
Brute-force model of the category algebra QSE_n.

The algebra is built from its structure constants. Elements are sparse dicts
basis index -> coefficient; elements of the free module A^t use the keys
slot*dim + index. Every structural fact the computations rely on (the radical,
the idempotents, surjectivity and minimality of projective covers) is checked
exactly while it is computed and raises CertificateError if it fails.
"""

# Largest n built without an explicit override. QSE_5 has dimension 634.
SIZE_GUARD = 5

# Exhaustive associativity check up to this n; random triples above it.
FULL_ASSOCIATIVITY_N = 3
ASSOCIATIVITY_SAMPLES = 20000


class AlgebraRep(object):
    """
    The algebra QSE_n with basis all surjections r -> k, 0 <= k <= r <= n.

    The product g.f of basis elements is g o f if the codomain of f is the
    domain of g and zero otherwise; table[g, f] holds the index of g o f or
    -1. The unit is the sum of the identity morphisms.
    """
    def __init__(self, n):
        if n < 0:
            raise ValueError("n must be nonnegative.")
        self.n = n
        basis = []
        for r in range(n + 1):
            for k in range(r + 1):
                basis.extend(enumerate_surjections(r, k))
        self.basis = tuple(basis)
        self.dim = len(basis)
        self.index = {f : i for (i, f) in enumerate(basis)}
        self.domain = np.array([f.domain_size for f in basis], dtype=int)
        self.codomain = np.array([f.codomain_size for f in basis], dtype=int)

        util.printstatus("Building QSE_%d (dimension %d)." % (n, self.dim),
                         level=2)
        byimages = {f.images : i for (i, f) in enumerate(basis)}
        table = -np.ones((self.dim, self.dim), dtype=int)
        for (a, g) in enumerate(basis):
            for b in np.flatnonzero(self.codomain == g.domain_size):
                f = basis[b]
                table[a, b] = byimages[tuple(g.images[j - 1]
                                             for j in f.images)]
        self.table = table
        self._rows = table.tolist()
        self._domain = self.domain.tolist()
        self._codomain = self.codomain.tolist()

        self.identities = {f.domain_size : i for (i, f) in enumerate(basis)
                           if f.is_identity()}
        self.automorphisms = {k : [i for i in range(self.dim)
                                   if self._domain[i] == k
                                   and self._codomain[i] == k]
                              for k in range(n + 1)}
        self.permutations = {basis[i].images : i for k in self.automorphisms
                             for i in self.automorphisms[k]}
        self.radical = [i for i in range(self.dim)
                        if self.domain[i] > self.codomain[i]]
        self.one_step = [i for i in self.radical
                         if self.domain[i] == self.codomain[i] + 1]
        self._idempotents = {}
        self._projectives = {}
        self._radicals = {}
        self._resolutions = {}
        self._radical_certified = False
        self._check_structure()

    def _check_structure(self):
        """Dimension count, unit and associativity certificates."""
        if self.dim != util.algebra_dimension(self.n):
            raise util.CertificateError("Algebra has dimension %d, expected "
                                        "%d." % (self.dim,
                                                 util.algebra_dimension(
                                                     self.n)))
        unit = self.unit()
        for i in range(self.dim):
            x = {i : 1}
            if self.multiply(unit, x) != x or self.multiply(x, unit) != x:
                raise util.CertificateError("Unit fails on basis element %r."
                                            % (self.basis[i],))
        D = self.dim
        if self.n <= FULL_ASSOCIATIVITY_N:
            (a, b, c) = np.meshgrid(np.arange(D), np.arange(D), np.arange(D),
                                    indexing="ij")
            (a, b, c) = (a.ravel(), b.ravel(), c.ravel())
        else:
            rng = np.random.default_rng(self.n)
            (a, b, c) = rng.integers(0, D, size=(3, ASSOCIATIVITY_SAMPLES))
        T = self.table
        ab = T[a, b]
        bc = T[b, c]
        left = np.where(ab >= 0, T[np.maximum(ab, 0), c], -1)
        right = np.where(bc >= 0, T[a, np.maximum(bc, 0)], -1)
        bad = np.count_nonzero(left != right)
        if bad > 0:
            raise util.CertificateError("Product is not associative on %d "
                                        "triples." % bad)

    def unit(self):
        """The unit, sum of the identity morphisms."""
        return {i : 1 for i in self.identities.values()}

    def element(self, terms):
        """Converts a dict Surjection -> coefficient to an algebra element."""
        return {self.index[f] : c for (f, c) in terms.items() if c != 0}

    def multiply(self, x, v):
        """
        Product x.v of an algebra element x with an element v of A or A^t.
        """
        D = self.dim
        rows = self._rows
        bydomain = {}
        for (a, c) in x.items():
            bydomain.setdefault(self._domain[a], []).append((rows[a], c))
        result = {}
        for (key, c) in v.items():
            (slot, b) = divmod(key, D)
            terms = bydomain.get(self._codomain[b])
            if terms is None:
                continue
            base = slot*D
            for (row, xa) in terms:
                j = base + row[b]
                total = result.get(j, 0) + xa*c
                if total == 0:
                    result.pop(j, None)
                else:
                    result[j] = total
        return result

    def require_radical(self):
        """Runs certify_radical unless it has already passed."""
        if not self._radical_certified:
            certify_radical(self)

    def shift(self, v, slot):
        """Moves an element of A into the given slot of A^t."""
        base = slot*self.dim
        return {base + i : c for (i, c) in v.items()}

    def radical_span(self, vectors):
        """
        Echelon basis of rad(A).M for the submodule M spanned by vectors.

        Every level-decreasing map is a one-step map composed with another
        map and M is A-stable, so the one-step maps suffice.
        """
        self.require_radical()
        eb = linalg.EchelonBasis()
        for v in vectors:
            for h in self.one_step:
                w = self.multiply({h : 1}, v)
                if w:
                    eb.add(w)
        return eb

    def idempotent(self, lam):
        """Certified Young idempotent e_lam (cached)."""
        lam = Partition(lam)
        if lam.size > self.n:
            raise ValueError("%s has more than %d boxes." % (lam, self.n))
        if lam not in self._idempotents:
            self._idempotents[lam] = young_idempotent(self, lam)
        return self._idempotents[lam]

    def projective_basis(self, lam):
        """Integer echelon basis of the left ideal A e_lam (cached)."""
        lam = Partition(lam)
        if lam not in self._projectives:
            e = self.idempotent(lam).integer_vector()
            eb = linalg.EchelonBasis()
            for b in range(self.dim):
                if self.domain[b] == lam.size:
                    eb.add(self.multiply({b : 1}, e))
            self._projectives[lam] = eb.rows()
        return self._projectives[lam]

    def projective_radical(self, lam):
        """Integer echelon basis of rad P(lam) = rad(A) e_lam (cached)."""
        lam = Partition(lam)
        if lam not in self._radicals:
            self._radicals[lam] = self.radical_span(
                self.projective_basis(lam)).rows()
        return self._radicals[lam]

    def simples(self):
        """Indices of the simple modules in the global order."""
        return all_partitions_upto(self.n)

    def __repr__(self):
        return "AlgebraRep(n=%d, dim=%d)" % (self.n, self.dim)


@lru_cache(maxsize=None)
def _build(n):
    A = AlgebraRep(n)
    A.require_radical()
    return A


def build_algebra(n, force=None):
    """
    Builds (and caches) QSE_n.

    Refuses with GuardError when n exceeds SIZE_GUARD unless force is true
    or the environment variable SURJTOOLS_FORCE is set.
    """
    if n < 0:
        raise ValueError("n must be nonnegative.")
    if force is None:
        force = util.env_flag("SURJTOOLS_FORCE")
    if n > SIZE_GUARD and not force:
        raise util.GuardError("Refusing to build QSE_%d of dimension %d "
                              "(guard is n <= %d); use --force or set "
                              "SURJTOOLS_FORCE=1." % (n,
                              util.algebra_dimension(n), SIZE_GUARD))
    return _build(n)


# =================================
# Idempotents
# =================================

class IdempotentElement(object):
    """
    An idempotent of QS_k inside hom(k, k).

    coefficients maps algebra indices to Fractions. tableau is the tableau the
    element was built from.
    """
    def __init__(self, k, lam, coefficients, tableau=None):
        self.k = k
        self.lam = Partition(lam)
        self.coefficients = dict(coefficients)
        self.tableau = tableau

    def integer_vector(self):
        """Primitive integer multiple, for span computations."""
        return linalg.integral(self.coefficients)

    def __repr__(self):
        return "IdempotentElement(%s, %d terms)" % (self.lam,
                                                    len(self.coefficients))


def _symmetrizer(A, tableau, k):
    """
    a_T.b_T in hom(k, k): row symmetrizer times column antisymmetrizer.
    """
    rows = [set(r) for r in tableau]
    cols = [set(tableau[i][j] for i in range(len(tableau))
                if len(tableau[i]) > j)
            for j in range(len(tableau[0]) if tableau else 0)]

    def preserves(p, blocks):
        return all(set(p[x - 1] for x in b) == b for b in blocks)

    perms = list(util.all_perms(k))
    R = [p for p in perms if preserves(p, rows)]
    C = [q for q in perms if preserves(q, cols)]
    product = {}
    for p in R:
        for q in C:
            g = util.compose_perm(p, q)
            product[g] = product.get(g, 0) + util.perm_sign(q)
    return {A.permutations[g] : c for (g, c) in product.items() if c != 0}


def _scale(x, c):
    return {i : c*v for (i, v) in x.items()}


def _primitivity_rank(A, e, k):
    """dim e A_k e, the rank of {e g e} over hom(k, k)."""
    eb = linalg.EchelonBasis()
    for g in A.automorphisms[k]:
        eb.add(A.multiply(A.multiply(e, {g : 1}), e))
    return eb.rank


def young_idempotent(A, lam):
    """
    e_lam = (dim S^lam/k!) a_lam b_lam for the row-filled tableau of lam.

    Certified: e.e = e and dim e A_k e = 1. For k = 0 this is the empty map.
    """
    lam = Partition(lam)
    k = lam.size
    tableau = row_filled_tableau(lam)
    raw = _symmetrizer(A, tableau, k)
    e = _scale(raw, Fraction(hook_dimension(lam), util.factorial(k)))
    if A.multiply(e, e) != e:
        raise util.CertificateError("Young symmetrizer for %s is not "
                                    "idempotent." % (lam,))
    if _primitivity_rank(A, e, k) != 1:
        raise util.CertificateError("Young idempotent for %s is not "
                                    "primitive." % (lam,))
    return IdempotentElement(k, lam, e, tableau)


def complete_idempotents(A, k):
    """
    A complete set of primitive orthogonal idempotents of QS_k.

    QS_k is the direct sum of the left ideals QS_k y_T over standard
    tableaux T, y_T the Young symmetrizer. Writing the identity along this
    sum gives one idempotent u_T in each ideal. Certified: u_T u_T = u_T,
    u_S u_T = 0 for S != T, sum u_T = identity of hom(k, k), and
    dim u_T A_k u_T = 1.
    """
    if k < 0 or k > A.n:
        raise ValueError("Level %d is outside 0..%d." % (k, A.n))
    vectors = []
    owners = []
    labels = []
    for lam in enumerate_partitions(k):
        for T in standard_tableaux(lam):
            y = _symmetrizer(A, T, k)
            ideal = linalg.EchelonBasis(A.multiply({g : 1}, y)
                                        for g in A.automorphisms[k])
            if ideal.rank != hook_dimension(lam):
                raise util.CertificateError("Left ideal of %r has dimension "
                                            "%d, expected %d." % (T,
                                            ideal.rank, hook_dimension(lam)))
            for row in ideal.rows():
                vectors.append(row)
                owners.append(len(labels))
            labels.append((lam, T))
    eb = linalg.EchelonBasis(track=True)
    for (j, v) in enumerate(vectors):
        if eb.add(v, tag=j) is not None:
            raise util.CertificateError("Left ideals of standard tableaux "
                                        "do not form a direct sum for k = %d."
                                        % k)
    if eb.rank != util.factorial(k):
        raise util.CertificateError("Left ideals of standard tableaux span "
                                    "%d dimensions, expected %d."
                                    % (eb.rank, util.factorial(k)))
    one = {A.identities[k] : 1}
    relation = eb.add(one, tag="unit")
    c = relation.pop("unit")
    parts = [{} for _ in labels]
    for (j, coeff) in relation.items():
        util.multiset_add(parts[owners[j]], vectors[j], Fraction(-coeff, c))
    result = [IdempotentElement(k, lam, u, T)
              for ((lam, T), u) in zip(labels, parts)]
    _certify_complete(A, result, k)
    return result


def _certify_complete(A, idempotents, k):
    total = {}
    for (i, u) in enumerate(idempotents):
        for (j, w) in enumerate(idempotents):
            prod = A.multiply(u.coefficients, w.coefficients)
            expected = u.coefficients if i == j else {}
            if prod != expected:
                raise util.CertificateError("Idempotents %d and %d of level "
                                            "%d fail u.w = delta u." % (i, j,
                                                                      k))
        if _primitivity_rank(A, u.coefficients, k) != 1:
            raise util.CertificateError("Idempotent for %r is not primitive."
                                        % (u.tableau,))
        util.multiset_add(total, u.coefficients)
    if total != {A.identities[k] : 1}:
        raise util.CertificateError("Idempotents of level %d do not sum to "
                                    "the identity." % k)


# =================================
# Radical
# =================================

def certify_radical(A):
    """
    Certifies that the level-decreasing maps span the radical.

    Checks that they span a two-sided ideal, that the ideal is nilpotent of
    index at most n + 1, and that the quotient has dimension sum k! with
    identity Cartan matrix, i.e. is semisimple. Returns the nilpotency index.
    """
    T = A.table
    rad = np.array(A.radical, dtype=int)
    inrad = A.domain > A.codomain
    if rad.size > 0:
        for prods in (T[:, rad], T[rad, :]):
            hits = prods[prods >= 0]
            if not inrad[hits].all():
                raise util.CertificateError("Level-decreasing maps are not a "
                                            "two-sided ideal.")
    current = rad
    index = 1
    while current.size > 0:
        if index > A.n:
            raise util.CertificateError("Radical is not nilpotent of index "
                                        "at most %d." % (A.n + 1))
        prods = T[np.ix_(rad, current)]
        current = np.unique(prods[prods >= 0])
        index += 1
    quotient = A.dim - rad.size
    expected = sum(util.factorial(k) for k in range(A.n + 1))
    if quotient != expected:
        raise util.CertificateError("Quotient by the radical has dimension "
                                    "%d, expected %d." % (quotient, expected))
    for k in range(A.n + 1):
        for alpha in enumerate_partitions(k):
            e = A.idempotent(alpha).integer_vector()
            ideal = linalg.EchelonBasis(A.multiply({g : 1}, e)
                                        for g in A.automorphisms[k])
            for beta in enumerate_partitions(k):
                f = A.idempotent(beta).integer_vector()
                d = linalg.rank(A.multiply(f, y) for y in ideal.rows())
                if d != (1 if alpha == beta else 0):
                    raise util.CertificateError("Quotient by the radical is "
                                                "not semisimple: e_%s A e_%s "
                                                "has dimension %d." % (beta,
                                                alpha, d))
    A._radical_certified = True
    return index


def radical_basis(A):
    """
    Basis of rad(A): indices of all level-decreasing maps, certified.
    """
    A.require_radical()
    return list(A.radical)


# =================================
# Cartan entries and modules
# =================================

def cartan_via_dims(A, beta, alpha):
    """
    dim e_beta A e_alpha, the multiplicity of S(beta) in P(alpha).

    Computed as the rank of e_beta applied to a basis of A e_alpha; the
    result only involves maps |alpha| -> |beta|.
    """
    beta = Partition(beta)
    alpha = Partition(alpha)
    if beta.size > alpha.size:
        return 0
    f = A.idempotent(beta).integer_vector()
    return linalg.rank(A.multiply(f, y) for y in A.projective_basis(alpha))


def jh_factors(A, alpha):
    """Jordan-Holder multiplicities of P(alpha) as beta -> multiplicity."""
    alpha = Partition(alpha)
    result = {}
    for beta in all_partitions_upto(alpha.size):
        m = cartan_via_dims(A, beta, alpha)
        if m:
            result[beta] = m
    return result


class ModuleRep(object):
    """
    A left A-module given by exact action matrices.

    The module is span(vectors), or span(vectors)/span(submodule) when a
    submodule is given; both spans must be A-stable. action(i) is the matrix
    of basis element i in a fixed basis, as a numpy object array of
    Fractions.
    """
    def __init__(self, A, vectors, submodule=None):
        self.A = A
        if submodule is None:
            self._sub = []
            self._reduced = linalg.rref(vectors)
        else:
            self._sub = linalg.rref(submodule)
            self._reduced = linalg.rref([linalg.normal_form(self._sub, v)
                                         for v in vectors])
        self.basis = [row for (_, row) in self._reduced]
        self.dimension = len(self.basis)
        self.actions = [self._matrix(i) for i in range(A.dim)]

    def coordinates(self, v):
        """Coordinates of the class of v."""
        if self._sub:
            v = linalg.normal_form(self._sub, v)
        return linalg.coordinates(self._reduced, v)

    def _matrix(self, i):
        d = self.dimension
        M = np.empty((d, d), dtype=object)
        M.fill(Fraction(0))
        for (j, b) in enumerate(self.basis):
            M[:, j] = self.coordinates(self.A.multiply({i : 1}, b))
        return M

    def check_action(self, pairs=None):
        """
        Verifies action(a) action(b) = action(a.b) (zero if a.b = 0).

        pairs defaults to all pairs of basis elements.
        """
        A = self.A
        if pairs is None:
            pairs = [(a, b) for a in range(A.dim) for b in range(A.dim)]
        zero = np.zeros((self.dimension, self.dimension), dtype=int)
        for (a, b) in pairs:
            c = A.table[a, b]
            expected = self.actions[c] if c >= 0 else zero
            if not np.array_equal(self.actions[a].dot(self.actions[b]),
                                  expected):
                return False
        return True


def projective_module(A, lam):
    """P(lam) = A e_lam with the left multiplication action."""
    return ModuleRep(A, A.projective_basis(lam))


def simple_module(A, lam):
    """
    S(lam) = P(lam)/rad(A) P(lam). Its dimension is checked against the
    hook-length formula.
    """
    lam = Partition(lam)
    pbasis = A.projective_basis(lam)
    radP = A.projective_radical(lam)
    S = ModuleRep(A, pbasis, radP)
    if S.dimension != hook_dimension(lam):
        raise util.CertificateError("S(%s) has dimension %d, expected %d."
                                    % (lam, S.dimension, hook_dimension(lam)))
    return S


# =================================
# Resolutions
# =================================

class Resolution(object):
    """
    A minimal projective resolution P_0 <- P_1 <- ... of a simple module.

    terms[m] maps partitions to the multiplicity of that projective in P_m.
    generators[m] lists (lam, x) with x = e_lam x in the (m-1)-st syzygy,
    the image of e_lam under the cover map; generators[0] holds e_simple.
    truncated is True if the resolution was cut off before it ended.
    """
    def __init__(self, n, simple, terms, generators, truncated):
        self.n = n
        self.simple = simple
        self.terms = terms
        self.generators = generators
        self.truncated = truncated

    @property
    def length(self):
        """Projective dimension; raises if the resolution was truncated."""
        if self.truncated:
            raise util.TruncatedResolutionError("Resolution of S(%s) was "
                                                "truncated at degree %d."
                                                % (self.simple,
                                                   len(self.terms) - 1))
        return len(self.terms) - 1

    def multiplicity(self, m, lam):
        """Multiplicity of P(lam) in P_m."""
        if m >= len(self.terms):
            if self.truncated:
                raise util.TruncatedResolutionError("Degree %d is past the "
                                                    "truncation at %d; use a "
                                                    "larger max_len."
                                                    % (m, len(self.terms)
                                                       - 1))
            return 0
        return self.terms[m].get(Partition(lam), 0)

    def vectors(self):
        """Multiplicity vectors in the global order, one per degree."""
        legend = all_partitions_upto(self.n)
        return [[t.get(lam, 0) for lam in legend] for t in self.terms]

    def to_json(self):
        return {
            "simple" : self.simple.to_json(),
            "legend" : [lam.to_json() for lam in all_partitions_upto(self.n)],
            "terms" : self.vectors(),
            "truncated" : self.truncated,
        }


def _projective_cover(A, rows):
    """
    Minimal generators of the module spanned by rows.

    For each lam the generators are the e_lam v that stay independent modulo
    e_lam rad(M); there are dim e_lam M - dim e_lam rad(M) of them, the
    multiplicity of S(lam) in the top of M.
    """
    radM = A.radical_span(rows).rows()
    levels = set()
    for v in rows:
        for key in v:
            levels.add(A._codomain[key % A.dim])
    gens = []
    mults = {}
    for lam in all_partitions_upto(A.n):
        if lam.size not in levels:
            continue
        e = A.idempotent(lam).integer_vector()
        top = linalg.EchelonBasis(A.multiply(e, w) for w in radM)
        count = 0
        for v in rows:
            x = A.multiply(e, v)
            if x and top.add(x) is None:
                gens.append((lam, x))
                count += 1
        if count:
            mults[lam] = count
    return (mults, gens)


def _cover_kernel(A, gens, dimension, certify=True):
    """
    Kernel of the cover map sum_g A e_g -> M, u in slot g |-> u.x_g.

    Checks that the map is onto a space of the given dimension and, with
    certify, that the kernel lies in the radical of the cover.
    """
    images = []
    sources = []
    for (slot, (lam, x)) in enumerate(gens):
        for p in A.projective_basis(lam):
            images.append(A.multiply(p, x))
            sources.append(A.shift(p, slot))
    relations = linalg.kernel(images)
    if len(images) - len(relations) != dimension:
        raise util.CertificateError("Cover map has rank %d onto a module of "
                                    "dimension %d." % (len(images)
                                    - len(relations), dimension))
    kernel = linalg.EchelonBasis()
    for rel in relations:
        vec = {}
        for (j, c) in rel.items():
            util.multiset_add(vec, sources[j], c)
        kernel.add(vec)
    rows = kernel.rows()
    if certify and rows:
        radP = linalg.EchelonBasis()
        for (slot, (lam, _)) in enumerate(gens):
            for w in A.projective_radical(lam):
                radP.add(A.shift(w, slot))
        if any(v not in radP for v in rows):
            raise util.CertificateError("Syzygy is not contained in the "
                                        "radical of its cover.")
    return rows


def minimal_resolution(A, lam, max_len=None, certify=True):
    """
    Minimal projective resolution of S(lam).

    P_0 = P(lam) and the first syzygy is rad(A) e_lam. Each later term is the
    projective cover of the previous syzygy, read off from its top, and the
    next syzygy is the exact kernel of the cover map. Stops at the first zero
    syzygy, or after degree max_len with truncated=True. The default max_len
    is n, which is never reached since P_m lives at levels <= |lam| - m.
    """
    lam = Partition(lam)
    if lam.size > A.n:
        raise ValueError("%s is not a simple of QSE_%d." % (lam, A.n))
    if max_len is None:
        max_len = A.n
    if max_len < 0:
        raise ValueError("max_len must be nonnegative.")
    key = (lam, max_len, certify)
    if key in A._resolutions:
        return A._resolutions[key]
    e = A.idempotent(lam).integer_vector()
    terms = [{lam : 1}]
    generators = [[(lam, e)]]
    rows = A.projective_radical(lam)
    truncated = False
    while rows:
        if len(terms) > max_len:
            truncated = True
            break
        util.printstatus("S(%s): degree %d, syzygy of dimension %d."
                         % (lam, len(terms), len(rows)), level=2)
        (mults, gens) = _projective_cover(A, rows)
        terms.append(mults)
        generators.append(gens)
        rows = _cover_kernel(A, gens, len(rows), certify)
    res = Resolution(A.n, lam, terms, generators, truncated)
    A._resolutions[key] = res
    return res


def ext_dim(A, i, j, m, max_len=None):
    """
    dim Ext^m(S(i), S(j)), the multiplicity of P(j) in P_m of the minimal
    resolution of S(i).

    Raises TruncatedResolutionError if the resolution was cut off before
    degree m.
    """
    if m < 0:
        raise ValueError("Degree must be nonnegative.")
    if max_len is None:
        max_len = max(m, A.n)
    return minimal_resolution(A, i, max_len).multiplicity(m, j)


def projective_dimension(A, lam, max_len=None):
    """pd S(lam), the length of its minimal resolution."""
    return minimal_resolution(A, lam, max_len).length


def global_dimension(n, force=None):
    """
    Global dimension of QSE_n: the largest projective dimension of a simple.

    n may also be an already built AlgebraRep.
    """
    A = n if isinstance(n, AlgebraRep) else build_algebra(n, force)
    gdim = 0
    for lam in A.simples():
        pd = projective_dimension(A, lam)
        util.printstatus("pd S(%s) = %d" % (lam, pd), level=2)
        gdim = max(gdim, pd)
    return gdim


def certify_algebra(A):
    """
    Runs every certificate: radical, Young idempotents, complete idempotent
    sets per level. Returns the nilpotency index of the radical.
    """
    index = certify_radical(A)
    for k in range(A.n + 1):
        complete_idempotents(A, k)
    return index
