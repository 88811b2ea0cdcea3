from fractions import Fraction
import math

"""
Exact sparse linear algebra over the rationals.

Vectors are dicts index -> number with zero entries omitted; indices are
nonnegative integers. Subspaces are kept as fraction-free integer echelon
bases: every row is primitive (content 1) with a positive leading entry at
its smallest index, and elimination cross-multiplies instead of dividing.
"""

def integral(vec):
    """
    Rescales a vector with int or Fraction entries to a primitive integer
    vector with the same span. Zero entries are dropped.
    """
    denom = 1
    for x in vec.values():
        if isinstance(x, Fraction):
            denom = denom*x.denominator//math.gcd(denom, x.denominator)
    result = {}
    for (i, x) in vec.items():
        y = x*denom
        if y != 0:
            result[i] = int(y)
    return _primitive(result)


def _primitive(vec, tags=None):
    """Divides vec (and tags) by their common content; makes the lead > 0."""
    g = 0
    for x in vec.values():
        g = math.gcd(g, x)
    if tags is not None:
        for x in tags.values():
            g = math.gcd(g, x)
    if g == 0:
        return vec if tags is None else (vec, tags)
    if vec and vec[min(vec)] < 0:
        g = -g
    if g != 1:
        vec = {i : x//g for (i, x) in vec.items()}
        if tags is not None:
            tags = {i : x//g for (i, x) in tags.items()}
    return vec if tags is None else (vec, tags)


def _combine(a, x, b, y):
    """Returns a*x + b*y for sparse vectors x, y, dropping zeros."""
    result = {i : a*v for (i, v) in x.items()}
    for (i, v) in y.items():
        total = result.get(i, 0) + b*v
        if total == 0:
            result.pop(i, None)
        else:
            result[i] = total
    return result


class EchelonBasis(object):
    """
    Fraction-free echelon basis of a subspace, grown one vector at a time.

    With tracking, every stored row also carries the integer combination of
    the added vectors (keyed by their tags) that produced it, so dependent
    vectors come back as linear relations. This is how kernels are found.
    """
    def __init__(self, vectors=(), track=False):
        self.__rows = {}
        self.__track = track
        for v in vectors:
            self.add(v)

    @property
    def rank(self):
        return len(self.__rows)

    def __len__(self):
        return len(self.__rows)

    def pivots(self):
        return sorted(self.__rows)

    def rows(self):
        """Basis rows sorted by pivot."""
        return [self.__rows[p][0] for p in sorted(self.__rows)]

    def _reduce(self, vec, tags):
        while vec:
            p = min(vec)
            row = self.__rows.get(p)
            if row is None:
                break
            (rvec, rtags) = row
            a = rvec[p]
            b = vec[p]
            g = math.gcd(a, b)
            (ma, mb) = (a//g, b//g)
            vec = _combine(ma, vec, -mb, rvec)
            if tags is None:
                vec = _primitive(vec)
            else:
                tags = _combine(ma, tags, -mb, rtags)
                (vec, tags) = _primitive(vec, tags)
        return (vec, tags)

    def reduce(self, vec):
        """Leading reduction of vec; empty iff vec is in the span."""
        (vec, _) = self._reduce(integral(vec), None)
        return vec

    def __contains__(self, vec):
        return len(self.reduce(vec)) == 0

    def add(self, vec, tag=None):
        """
        Adds vec to the basis.

        Returns None if vec was independent. Otherwise returns the relation
        found, a dict tag -> integer coefficient with sum of coeff * vector
        equal to zero (an empty dict when not tracking).
        """
        if self.__track:
            if tag is None:
                raise ValueError("Tracking echelon bases need a tag.")
            # Relations refer to vec itself, so it must not be rescaled.
            (vec, tags) = _primitive(_exact(vec), {tag : 1})
        else:
            (vec, tags) = (integral(vec), None)
        (vec, tags) = self._reduce(vec, tags)
        if vec:
            self.__rows[min(vec)] = (vec, tags)
            return None
        return tags if tags is not None else {}

    def extend(self, vectors):
        """Adds several vectors; returns the number that were independent."""
        before = self.rank
        for v in vectors:
            self.add(v)
        return self.rank - before


def rank(vectors):
    """Rank over Q of a collection of sparse vectors."""
    return EchelonBasis(vectors).rank


def kernel(images):
    """
    Basis of the kernel of the linear map sending e_j to images[j].

    Returns a list of integer relation vectors (dicts j -> coefficient),
    each primitive.
    """
    eb = EchelonBasis(track=True)
    relations = []
    for (j, v) in enumerate(images):
        if not v:
            relations.append({j : 1})
            continue
        rel = eb.add(v, tag=j)
        if rel is not None:
            relations.append(_primitive(rel))
    return relations


def _exact(vec):
    """Integer vector equal (not just proportional) to vec, if integral."""
    result = {}
    for (i, x) in vec.items():
        if x != 0:
            if isinstance(x, Fraction) and x.denominator != 1:
                raise ValueError("Tracked vectors must have integer entries.")
            result[i] = int(x)
    return result


def rref(vectors):
    """
    Reduced row echelon basis of the span, over the rationals.

    Returns a list of (pivot, row) with row[pivot] == 1 and every row zero at
    every other pivot, sorted by pivot.
    """
    eb = vectors if isinstance(vectors, EchelonBasis) else \
        EchelonBasis(vectors)
    rows = {p : {i : Fraction(x) for (i, x) in r.items()}
            for (p, r) in zip(eb.pivots(), eb.rows())}
    pivots = sorted(rows)
    for p in reversed(pivots):
        row = rows[p]
        lead = row[p]
        if lead != 1:
            row = {i : x/lead for (i, x) in row.items()}
            rows[p] = row
        for q in pivots:
            if q >= p:
                break
            other = rows[q]
            c = other.get(p, 0)
            if c != 0:
                rows[q] = _combine(1, other, -c, row)
    return [(p, rows[p]) for p in pivots]


def normal_form(reduced, vec):
    """
    Projection of vec killing every pivot of a reduced basis.

    This map is linear, so classes modulo the span have unique normal forms.
    """
    result = {i : Fraction(x) for (i, x) in vec.items() if x != 0}
    for (p, row) in reduced:
        c = result.get(p, 0)
        if c != 0:
            result = _combine(1, result, -c, row)
    return result


def coordinates(reduced, vec, check=True):
    """
    Coordinates of vec in a reduced basis (list of Fractions).

    With check=True raises ValueError if vec is not in the span.
    """
    coords = [Fraction(vec.get(p, 0)) for (p, _) in reduced]
    if check:
        rest = {i : Fraction(x) for (i, x) in vec.items() if x != 0}
        for ((p, row), c) in zip(reduced, coords):
            if c != 0:
                rest = _combine(1, rest, -c, row)
        if rest:
            raise ValueError("Vector is not in the span.")
    return coords
