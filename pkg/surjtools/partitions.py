import json
from functools import lru_cache
from . import util

"""
Integer partitions, Young diagrams, skew shapes, box moves and hook-length
dimensions.

Partitions are ordered by size and, within a size, reverse-lexicographically,
so [4], [3,1], [2,2], [2,1,1], [1,1,1,1] is the order for size 4. This order
fixes the rows and columns of every Cartan matrix in the package.
"""

class Partition(tuple):
    """
    A Young diagram stored as its weakly decreasing tuple of positive parts.

    The empty tuple is the unique partition of 0. Partitions are hashable
    value types and compare equal to plain tuples with the same parts.
    """
    def __new__(cls, parts=()):
        try:
            parts = tuple(int(p) for p in parts)
        except (TypeError, ValueError):
            raise TypeError("Partition parts must be integers, got %r."
                            % (parts,))
        if any(p <= 0 for p in parts):
            raise ValueError("Partition parts must be positive: %r."
                             % (list(parts),))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("Partition parts must be weakly decreasing: %r."
                             % (list(parts),))
        return tuple.__new__(cls, parts)

    @property
    def size(self):
        """Number of boxes."""
        return sum(self)

    @property
    def length(self):
        """Number of parts (rows)."""
        return len(self)

    def part(self, i):
        """Part i (0-based), with zero padding past the last row."""
        return self[i] if i < len(self) else 0

    def contains(self, other):
        """True if the diagram of other fits inside this one."""
        return (len(other) <= len(self) and
                all(other[i] <= self[i] for i in range(len(other))))

    def to_json(self):
        """JSON form: a list of integers, [] for the empty partition."""
        return list(self)

    def __str__(self):
        return "[%s]" % ",".join(str(p) for p in self)

    def __repr__(self):
        return "Partition(%s)" % (str(self),)

    def __getnewargs__(self):
        return (tuple(self),)


EMPTY = Partition()


def sort_key(lam):
    """Sort key giving the global order: size ascending, reverse-lex."""
    return (sum(lam), tuple(-p for p in lam))


def parse_partition(text):
    """
    Parses a partition from JSON (e.g. "[2,1]", "[]") or a list of integers.

    Raises ValueError for anything that is not a partition.
    """
    if isinstance(text, str):
        try:
            value = json.loads(text)
        except ValueError:
            raise ValueError("Invalid partition string '%s'." % text)
    else:
        value = text
    if not isinstance(value, (list, tuple)):
        raise ValueError("Partition must be a list of integers, got %r."
                         % (text,))
    if any(isinstance(p, bool) or not isinstance(p, int) for p in value):
        raise ValueError("Partition must be a list of integers, got %r."
                         % (text,))
    try:
        return Partition(value)
    except TypeError as err:
        raise ValueError(str(err))


@lru_cache(maxsize=None)
def _partitions(n, maxpart):
    """All partitions of n with parts <= maxpart, reverse-lex order."""
    if n == 0:
        return (EMPTY,)
    result = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - first, first):
            result.append(Partition((first,) + rest))
    return tuple(result)


def enumerate_partitions(n):
    """
    Returns all partitions of n in reverse-lexicographic order.

    [n] comes first and [1^n] last. The list has p(n) entries.
    """
    if n < 0:
        raise ValueError("n must be nonnegative.")
    return list(_partitions(n, n))


def all_partitions_upto(n):
    """All partitions of 0..n in the global order."""
    return [lam for k in range(n + 1) for lam in enumerate_partitions(k)]


def partition_count(n):
    """
    Number of partitions p(n) by Euler's pentagonal number recurrence.

    Independent of enumerate_partitions; used to check it.
    """
    if n < 0:
        return 0
    p = [1] + [0]*n
    for m in range(1, n + 1):
        total = 0
        j = 1
        while True:
            g1 = j*(3*j - 1)//2
            g2 = j*(3*j + 1)//2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign*p[m - g1]
            if g2 <= m:
                total += sign*p[m - g2]
            j += 1
        p[m] = total
    return p[n]


def conjugate(lam):
    """Transposed diagram."""
    if len(lam) == 0:
        return EMPTY
    return Partition(sum(1 for p in lam if p > j) for j in range(lam[0]))


def ds(k):
    """The partition [2,1^(k-2)] for k >= 2."""
    if k < 2:
        raise ValueError("ds_k needs k >= 2.")
    return Partition((2,) + (1,)*(k - 2))


def sgn(k):
    """The partition [1^k]."""
    if k < 0:
        raise ValueError("sgn_k needs k >= 0.")
    return Partition((1,)*k)


def removable_boxes(lam):
    """
    Partitions obtained from lam by removing one outer corner.

    Results are listed from the top row down. The empty partition has no
    removable box.
    """
    lam = Partition(lam)
    result = []
    for i in range(len(lam)):
        if lam.part(i) > lam.part(i + 1):
            parts = list(lam)
            parts[i] -= 1
            result.append(Partition(p for p in parts if p > 0))
    return result


def addable_boxes(lam):
    """Partitions obtained from lam by adding one box, top row first."""
    lam = Partition(lam)
    result = []
    for i in range(len(lam) + 1):
        if i == 0 or lam.part(i - 1) > lam.part(i):
            parts = list(lam) + [0]
            parts[i] += 1
            result.append(Partition(p for p in parts if p > 0))
    return result


def add_boxes_no_two_same_column(lam, r):
    """
    The set Y^r(lam): diagrams obtained by adding r boxes to lam, no two of
    them in the same column.

    These are the gamma containing lam with gamma_i <= lam_(i-1) for i >= 2
    (horizontal strips). Results come in the global order.
    """
    if r < 0:
        raise ValueError("r must be nonnegative.")
    lam = Partition(lam)
    rows = len(lam) + 1
    result = []

    def grow(i, remaining, parts):
        if i == rows:
            if remaining == 0:
                result.append(Partition(p for p in parts if p > 0))
            return
        base = lam.part(i)
        cap = remaining if i == 0 else min(remaining, lam.part(i - 1) - base)
        for extra in range(cap, -1, -1):
            grow(i + 1, remaining - extra, parts + [base + extra])

    grow(0, r, [])
    return sorted(set(result), key=sort_key)


def hook_lengths(lam):
    """Hook lengths of lam as a list of rows."""
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])]
            for i in range(len(lam))]


def hook_dimension(lam):
    """
    Dimension of the Specht module S^lam by the hook-length formula.

    Exact integer; equals the number of standard tableaux of shape lam.
    """
    lam = Partition(lam)
    product = 1
    for row in hook_lengths(lam):
        for h in row:
            product *= h
    return util.factorial(lam.size)//product


def standard_tableaux(lam):
    """
    All standard Young tableaux of shape lam as tuples of rows.

    The largest entry is placed in each removable corner in turn, top row
    first, so the row-filled tableau is the last one listed.
    """
    lam = Partition(lam)
    if lam.size == 0:
        return [()]
    k = lam.size
    tableaux = []
    for smaller in removable_boxes(lam):
        row = next(i for i in range(len(lam)) if lam[i] != smaller.part(i))
        for t in standard_tableaux(smaller):
            rows = [list(r) for r in t] + [[]]*(len(lam) - len(t))
            rows = [list(r) for r in rows]
            rows[row].append(k)
            tableaux.append(tuple(tuple(r) for r in rows))
    return tableaux


def row_filled_tableau(lam):
    """The canonical tableau filled 1..k left to right, top to bottom."""
    rows = []
    start = 1
    for p in lam:
        rows.append(tuple(range(start, start + p)))
        start += p
    return tuple(rows)


class SkewShape(object):
    """
    The skew diagram outer/inner obtained by erasing inner from outer.
    """
    def __init__(self, outer, inner=()):
        self.outer = Partition(outer)
        self.inner = Partition(inner)
        if not self.outer.contains(self.inner):
            raise ValueError("%s does not fit inside %s."
                             % (self.inner, self.outer))

    @property
    def size(self):
        return self.outer.size - self.inner.size

    def row_cells(self, i):
        """Column indices (0-based) of the boxes in row i."""
        return list(range(self.inner.part(i), self.outer.part(i)))

    def cells(self):
        """All boxes as (row, column) pairs, row by row, left to right."""
        return [(i, j) for i in range(len(self.outer))
                for j in self.row_cells(i)]

    def __eq__(self, other):
        return (isinstance(other, SkewShape) and self.outer == other.outer
                and self.inner == other.inner)

    def __hash__(self):
        return hash((self.outer, self.inner))

    def __repr__(self):
        return "SkewShape(%s/%s)" % (self.outer, self.inner)
