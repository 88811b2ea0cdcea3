from .partitions import (Partition, SkewShape, enumerate_partitions,
                         add_boxes_no_two_same_column)

"""
Semistandard skew tableaux, lattice words, and the Littlewood-Richardson and
Pieri expansions.

Multisets of partitions are dicts partition -> multiplicity with zero entries
omitted, listed in the global partition order.
"""

class SkewTableau(object):
    """
    A filling of a skew shape with positive integers.

    rows[i] holds the entries of row i of outer/inner from left to right.
    Rows that are empty in the skew shape hold empty tuples.
    """
    def __init__(self, shape, rows):
        if not isinstance(shape, SkewShape):
            raise TypeError("shape must be a SkewShape.")
        rows = [tuple(int(x) for x in r) for r in rows]
        rows += [()]*(len(shape.outer) - len(rows))
        if len(rows) != len(shape.outer):
            raise ValueError("Too many rows for shape %r." % (shape,))
        for (i, r) in enumerate(rows):
            if len(r) != len(shape.row_cells(i)):
                raise ValueError("Row %d has %d entries but the shape needs "
                                 "%d." % (i, len(r), len(shape.row_cells(i))))
            if any(x <= 0 for x in r):
                raise ValueError("Tableau entries must be positive.")
        self.shape = shape
        self.rows = tuple(rows)

    def entry(self, i, j):
        """Entry in row i, column j (0-based, absolute column)."""
        return self.rows[i][j - self.shape.inner.part(i)]

    def is_semistandard(self):
        """Rows weakly increase, columns strictly increase downwards."""
        shape = self.shape
        for (i, r) in enumerate(self.rows):
            if any(r[a] > r[a + 1] for a in range(len(r) - 1)):
                return False
            if i == 0:
                continue
            for j in shape.row_cells(i):
                if j >= shape.inner.part(i - 1):
                    if self.entry(i - 1, j) >= self.entry(i, j):
                        return False
        return True

    def content(self):
        """Composition whose i-th entry counts the boxes holding i + 1."""
        counts = {}
        for r in self.rows:
            for x in r:
                counts[x] = counts.get(x, 0) + 1
        top = max(counts) if counts else 0
        return tuple(counts.get(v, 0) for v in range(1, top + 1))

    def __repr__(self):
        return "SkewTableau(%r, %r)" % (self.shape, self.rows)


def row_word(t):
    """
    Reads the entries right to left, top row first.
    """
    word = []
    for r in t.rows:
        word.extend(reversed(r))
    return tuple(word)


def is_lattice(word):
    """
    True if every prefix has at least as many i as i+1, for every i >= 1.
    """
    counts = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


def lr_tableaux(lam, delta, gamma):
    """
    Generates the Littlewood-Richardson tableaux of shape gamma/lam with
    content delta: semistandard, with a lattice row word.

    Boxes are filled in row-word order. A partial filling is abandoned as
    soon as it breaks semistandardness, exceeds the content, or has a
    non-lattice prefix, so every pruned branch contains no solution.
    """
    lam = Partition(lam)
    delta = Partition(delta)
    gamma = Partition(gamma)
    if lam.size + delta.size != gamma.size:
        raise ValueError("Sizes do not add up: |%s| + |%s| != |%s|."
                         % (lam, delta, gamma))
    if not gamma.contains(lam):
        return
    shape = SkewShape(gamma, lam)
    order = [(i, j) for i in range(len(gamma))
             for j in reversed(shape.row_cells(i))]
    maxentry = len(delta)
    filling = {}
    counts = [0]*(maxentry + 2)

    def extend(pos):
        if pos == len(order):
            rows = [tuple(filling[(i, j)] for j in shape.row_cells(i))
                    for i in range(len(gamma))]
            yield SkewTableau(shape, rows)
            return
        (i, j) = order[pos]
        hi = maxentry
        if (i, j + 1) in filling:
            hi = min(hi, filling[(i, j + 1)])
        lo = 1
        if i > 0 and j >= lam.part(i - 1):
            lo = filling[(i - 1, j)] + 1
        for v in range(lo, hi + 1):
            if counts[v] >= delta[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filling[(i, j)] = v
            for t in extend(pos + 1):
                yield t
            del filling[(i, j)]
            counts[v] -= 1

    for t in extend(0):
        yield t


def lr_coefficient(lam, delta, gamma):
    """
    Littlewood-Richardson coefficient c^gamma_(lam, delta).

    Counts semistandard skew tableaux of shape gamma/lam and content delta
    whose row word is a lattice permutation. Returns 0 when lam does not fit
    in gamma; raises ValueError when the sizes do not add up.
    """
    return sum(1 for _ in lr_tableaux(lam, delta, gamma))


def pieri_expand(lam, r):
    """
    Ind(S^lam x tr_r) as a multiset: Y^r(lam), each with multiplicity 1.
    """
    return {g : 1 for g in add_boxes_no_two_same_column(lam, r)}


def lr_expand(lam, delta):
    """
    Ind(S^lam x S^delta) as a multiset gamma -> c^gamma_(lam, delta).
    """
    lam = Partition(lam)
    delta = Partition(delta)
    result = {}
    for gamma in enumerate_partitions(lam.size + delta.size):
        if not (gamma.contains(lam) and gamma.contains(delta)):
            continue
        c = lr_coefficient(lam, delta, gamma)
        if c != 0:
            result[gamma] = c
    return result
