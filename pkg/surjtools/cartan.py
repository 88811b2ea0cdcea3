import csv
import io
import warnings
from collections import deque
import numpy as np
from . import util
from . import characters
from . import oracle
from .partitions import (Partition, all_partitions_upto, removable_boxes,
                         add_boxes_no_two_same_column)
from .tableaux import pieri_expand, lr_expand
from .surjections import hom_permutation_character

"""
Cartan matrix of QSE_n by three methods and the quiver read off its first
superdiagonal.

Rows and columns are indexed by all partitions of 0..n in the global order.
Entry (beta, alpha) is [P(alpha) : S(beta)] = dim e_beta A e_alpha, which is
zero unless |beta| <= |alpha|.
"""

METHODS = ("character", "closed_form", "oracle")

# Ind from D_4 to S_4 of the inflations of tr_2 and sgn_2 along nu.
D4_SUBSTITUTION = util.ReadOnlyDict({
    Partition((2,)) : util.ReadOnlyDict({Partition((4,)) : 1,
                                         Partition((2, 2)) : 1}),
    Partition((1, 1)) : util.ReadOnlyDict({Partition((3, 1)) : 1}),
})


def regenerate_d4_substitution():
    """Recomputes D4_SUBSTITUTION by inducing from D_4 to S_4."""
    return {
        Partition((2,)) : characters.decompose(characters.induce_from_subgroup(
            characters.DIHEDRAL_D4, characters.D4_TRIVIAL)),
        Partition((1, 1)) : characters.decompose(
            characters.induce_from_subgroup(characters.DIHEDRAL_D4,
                                            characters.D4_SIGN_BAR)),
    }


class CartanMatrix(object):
    """
    A Cartan matrix of QSE_n with its partition legend.

    data is a square numpy array; with the "unknown" fill policy of the
    closed-form method it has dtype object and None marks unknown entries.
    """
    def __init__(self, n, data, method):
        self.n = n
        self.legend = all_partitions_upto(n)
        self.method = method
        self.data = np.asarray(data)
        p = len(self.legend)
        if self.data.shape != (p, p):
            raise ValueError("Expected a %d x %d matrix, got %r."
                             % (p, p, self.data.shape))
        self._position = {lam : i for (i, lam) in enumerate(self.legend)}

    def index(self, lam):
        return self._position[Partition(lam)]

    def entry(self, beta, alpha):
        return self.data[self.index(beta), self.index(alpha)]

    def column(self, alpha):
        """Nonzero entries of column alpha as beta -> multiplicity."""
        j = self.index(alpha)
        return {beta : self.data[i, j] for (i, beta) in enumerate(self.legend)
                if self.data[i, j] is not None and self.data[i, j] != 0}

    def has_unknowns(self):
        return any(x is None for x in self.data.flat)

    def is_block_unitriangular(self):
        """
        Zero below the level blocks and identity on the diagonal blocks.
        Unknown entries are skipped.
        """
        for (i, beta) in enumerate(self.legend):
            for (j, alpha) in enumerate(self.legend):
                x = self.data[i, j]
                if x is None:
                    continue
                if beta.size > alpha.size and x != 0:
                    return False
                if beta.size == alpha.size and x != (1 if i == j else 0):
                    return False
        return True

    def is_nonnegative(self):
        return all(x is None or x >= 0 for x in self.data.flat)

    def certify(self):
        """Raises CertificateError unless unitriangular and nonnegative."""
        if not self.is_block_unitriangular():
            raise util.CertificateError("%s Cartan matrix for n = %d is not "
                                        "block upper unitriangular."
                                        % (self.method, self.n))
        if not self.is_nonnegative():
            raise util.CertificateError("%s Cartan matrix for n = %d has "
                                        "negative entries." % (self.method,
                                                               self.n))

    def agrees_with(self, other):
        """
        True if both matrices agree wherever both entries are known.
        """
        if self.n != other.n:
            return False
        for (x, y) in zip(self.data.flat, other.data.flat):
            if x is not None and y is not None and x != y:
                return False
        return True

    def __eq__(self, other):
        return (isinstance(other, CartanMatrix) and self.n == other.n
                and self.data.tolist() == other.data.tolist())

    def __ne__(self, other):
        return not self == other

    def rows(self):
        """Row-major list of lists with plain ints and None."""
        return [[None if x is None else int(x) for x in row]
                for row in self.data]

    def to_json(self):
        return {
            "n" : self.n,
            "method" : self.method,
            "legend" : [lam.to_json() for lam in self.legend],
            "matrix" : self.rows(),
        }

    def to_csv(self):
        """CSV text with a header row and a label column; unknowns are '?'."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        labels = [str(lam) for lam in self.legend]
        writer.writerow([""] + labels)
        for (label, row) in zip(labels, self.rows()):
            writer.writerow([label] + ["?" if x is None else x for x in row])
        return buf.getvalue()

    def __repr__(self):
        return "CartanMatrix(n=%d, method=%r)" % (self.n, self.method)


def cartan_entry_character(beta, alpha):
    """
    Multiplicity of S^beta x S^alpha in QSE(r, k) as an S_k x S_r module,
    for beta a partition of k and alpha of r. Zero when r < k.
    """
    beta = Partition(beta)
    alpha = Partition(alpha)
    (k, r) = (beta.size, alpha.size)
    if r < k:
        return 0
    irr = characters.irreducible(beta).tensor(characters.irreducible(alpha))
    m = characters.inner_product(irr, hom_permutation_character(r, k))
    if m.denominator != 1 or m < 0:
        raise util.CertificateError("Non-integral multiplicity %s for "
                                    "(%s, %s)." % (m, beta, alpha))
    return int(m)


def cartan_first_superdiagonal(beta, alpha):
    """
    Ways to get alpha from beta by removing one box and then adding two
    boxes, not in the same column.
    """
    beta = Partition(beta)
    alpha = Partition(alpha)
    if alpha.size != beta.size + 1:
        raise ValueError("Need |alpha| = |beta| + 1, got %s and %s."
                         % (beta, alpha))
    return sum(1 for mu in removable_boxes(beta)
               if alpha in add_boxes_no_two_same_column(mu, 2))


def second_superdiagonal_parts(beta, alpha):
    """
    The two orbit contributions (m1, m2) to the entry (beta, alpha) with
    |alpha| = |beta| + 2.

    m1 removes one box from beta and adds three, no two in a column. m2
    (only for |beta| >= 2) restricts chi^beta to S_(k-2) x S_2, replaces the
    S_2 factor through D4_SUBSTITUTION and induces back with the
    Littlewood-Richardson rule.
    """
    beta = Partition(beta)
    alpha = Partition(alpha)
    k = beta.size
    if alpha.size != k + 2:
        raise ValueError("Need |alpha| = |beta| + 2, got %s and %s."
                         % (beta, alpha))
    m1 = sum(pieri_expand(mu, 3).get(alpha, 0) for mu in removable_boxes(beta))
    m2 = 0
    if k >= 2:
        res = characters.restrict_to_young(characters.irreducible(beta),
                                           k - 2, 2)
        for ((gamma, eps), mult) in characters.decompose(res).items():
            for (delta, sub) in D4_SUBSTITUTION[eps].items():
                m2 += mult*sub*lr_expand(gamma, delta).get(alpha, 0)
    return (m1, m2)


def cartan_second_superdiagonal(beta, alpha):
    """Entry (beta, alpha) for |alpha| = |beta| + 2 as m1 + m2."""
    (m1, m2) = second_superdiagonal_parts(beta, alpha)
    return m1 + m2


def _closed_form_entry(beta, alpha):
    d = alpha.size - beta.size
    if d < 0 or (beta.size == 0 and alpha.size > 0):
        return 0
    if d == 0:
        return 1 if beta == alpha else 0
    if d == 1:
        return cartan_first_superdiagonal(beta, alpha)
    if d == 2:
        return cartan_second_superdiagonal(beta, alpha)
    return None


def full_cartan(n, method="character", fill=None, algebra=None, force=None):
    """
    The full Cartan matrix of QSE_n.

    method is "character" (inner products with hom-set permutation
    characters), "closed_form" (box moves on offsets 0, 1, 2) or "oracle"
    (dimensions e_beta A e_alpha in the built algebra). The closed form knows
    no entries at offset 3 or more beyond the zero row of level 0; it raises
    ValueError for them unless fill="unknown", which leaves None there.
    Every result is certified unitriangular and nonnegative.
    """
    if n < 0:
        raise ValueError("n must be nonnegative.")
    if method not in METHODS:
        raise ValueError("Unknown method '%s'; choose one of %s."
                         % (method, ", ".join(METHODS)))
    if fill not in (None, "unknown"):
        raise ValueError("Unknown fill policy '%s'." % (fill,))
    legend = all_partitions_upto(n)
    p = len(legend)
    if method == "oracle":
        A = algebra if algebra is not None else oracle.build_algebra(n, force)
        if A.n < n:
            raise ValueError("Algebra for n = %d cannot give n = %d."
                             % (A.n, n))
    dtype = object if (method == "closed_form" and fill == "unknown") else int
    data = np.zeros((p, p), dtype=dtype)
    unknown = 0
    for (j, alpha) in enumerate(legend):
        util.printstatus("Cartan column %s (%s)." % (alpha, method), level=2)
        for (i, beta) in enumerate(legend):
            if beta.size > alpha.size:
                continue
            if method == "character":
                x = cartan_entry_character(beta, alpha)
            elif method == "oracle":
                x = oracle.cartan_via_dims(A, beta, alpha)
            else:
                x = _closed_form_entry(beta, alpha)
                if x is None:
                    if fill != "unknown":
                        raise ValueError("No closed form for the entry (%s, "
                                         "%s) at offset %d; use "
                                         "fill='unknown'." % (beta, alpha,
                                         alpha.size - beta.size))
                    unknown += 1
            data[i, j] = x
    if unknown:
        warnings.warn("%d Cartan entries at offset >= 3 are unknown in the "
                      "closed form." % unknown)
    C = CartanMatrix(n, data, method)
    C.certify()
    return C


def hom_decomposition(r, k):
    """
    QSE(r, k) as an S_k x S_r module: (beta, alpha) -> multiplicity.
    """
    return characters.decompose(hom_permutation_character(r, k))


# =================================
# Quiver
# =================================

class QuiverGraph(object):
    """
    The quiver of QSE_n: one vertex per partition of 0..n, and arrows from
    level k + 1 down to level k with multiplicities.
    """
    def __init__(self, n, vertices, arrows):
        self.n = n
        self.vertices = list(vertices)
        self.arrows = dict((k, v) for (k, v) in arrows.items() if v > 0)
        position = {v : i for (i, v) in enumerate(self.vertices)}
        for (s, t) in self.arrows:
            if s not in position or t not in position:
                raise ValueError("Arrow %s -> %s has an unknown end." % (s, t))
        self._succ = {v : [] for v in self.vertices}
        for ((s, t), m) in sorted(self.arrows.items(), key=lambda a:
                                  (position[a[0][0]], position[a[0][1]])):
            self._succ[s].append((t, m))

    def arrow_count(self, source, target):
        return self.arrows.get((Partition(source), Partition(target)), 0)

    def successors(self, v):
        """(target, multiplicity) pairs out of v in the vertex order."""
        return list(self._succ[Partition(v)])

    @property
    def num_arrows(self):
        """Number of arrows counted with multiplicity."""
        return sum(self.arrows.values())

    def arrow_list(self):
        """All arrows as (source, target) pairs, repeated by multiplicity."""
        return [(s, t) for s in self.vertices for (t, m) in self._succ[s]
                for _ in range(m)]

    def topological_order(self):
        """
        Vertices so that every arrow points forward. Raises ValueError if
        the quiver has a cycle.
        """
        indegree = {v : 0 for v in self.vertices}
        for (s, t) in self.arrows:
            indegree[t] += 1
        queue = deque(v for v in self.vertices if indegree[v] == 0)
        order = []
        while queue:
            u = queue.popleft()
            order.append(u)
            for (t, _) in self._succ[u]:
                indegree[t] -= 1
                if indegree[t] == 0:
                    queue.append(t)
        if len(order) != len(self.vertices):
            raise ValueError("Quiver has a cycle.")
        return order

    def to_dot(self):
        """DOT text; multiple arrows are drawn as repeated edges."""
        lines = ['digraph "Q_%d" {' % self.n]
        for v in self.vertices:
            lines.append('  "%s";' % (v,))
        for (s, t) in self.arrow_list():
            lines.append('  "%s" -> "%s";' % (s, t))
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self):
        return {
            "n" : self.n,
            "vertices" : [v.to_json() for v in self.vertices],
            "arrows" : [{"source" : s.to_json(), "target" : t.to_json(),
                         "multiplicity" : m}
                        for s in self.vertices for (t, m) in self._succ[s]],
        }

    def __repr__(self):
        return "QuiverGraph(n=%d, %d vertices, %d arrows)" % (
            self.n, len(self.vertices), self.num_arrows)


def quiver(n):
    """
    Quiver of QSE_n. The number of arrows from alpha (level k + 1) to beta
    (level k) is the first-superdiagonal Cartan entry (beta, alpha).
    """
    if n < 0:
        raise ValueError("n must be nonnegative.")
    vertices = all_partitions_upto(n)
    arrows = {}
    for alpha in vertices:
        for beta in vertices:
            if beta.size + 1 == alpha.size:
                m = cartan_first_superdiagonal(beta, alpha)
                if m:
                    arrows[(alpha, beta)] = m
    return QuiverGraph(n, vertices, arrows)


def _path_lengths(q):
    """Longest path (in arrows) starting at each vertex."""
    lengths = {}
    for v in reversed(q.topological_order()):
        lengths[v] = max([1 + lengths[t] for (t, _) in q.successors(v)],
                         default=0)
    return lengths


def longest_path(q):
    """Largest number of arrows on a directed path of q."""
    return max(_path_lengths(q).values(), default=0)


def longest_path_from(q, v):
    """Largest number of arrows on a directed path starting at v."""
    return _path_lengths(q)[Partition(v)]
