import sys
import os
import itertools
import collections.abc
from contextlib import contextmanager
from functools import lru_cache
from scipy import special

"""
Shared helpers: permutations as image tables, exact counting functions,
status output, and the package exceptions.
"""

_MAX_VERBOSITY = 1

def setMaxVerbosity(verb=1):
    """
    Sets a module override for maximum verbosity setting.

    Level 0 is silent, 1 prints status lines, 2 and above print progress of
    long computations.
    """
    global _MAX_VERBOSITY
    _MAX_VERBOSITY = verb


def getMaxVerbosity():
    """Returns the current verbosity setting."""
    return _MAX_VERBOSITY


def printstatus(message, level=1, end="\n"):
    """
    Prints a status message to stderr if verbosity allows it.

    Status messages never go to stdout, which is reserved for data.
    """
    if level <= _MAX_VERBOSITY:
        sys.stderr.write(message + end)
        sys.stderr.flush()


# Exceptions. Bad inputs use the builtin ValueError and TypeError.
class GuardError(ValueError):
    """Computation refused because it exceeds the configured size guard."""
    pass


class CertificateError(RuntimeError):
    """A computational certificate failed; results cannot be trusted."""
    pass


class TruncatedResolutionError(RuntimeError):
    """A resolution was cut off before the requested degree."""
    pass


# =================================
# Exact counting
# =================================

def factorial(n):
    """Exact n! as a Python int."""
    return int(special.factorial(n, exact=True))


def binomial(n, k):
    """Exact binomial coefficient (0 outside 0 <= k <= n)."""
    if k < 0 or k > n:
        return 0
    return int(special.comb(n, k, exact=True))


@lru_cache(maxsize=None)
def stirling2(r, k):
    """
    Stirling number of the second kind S(r, k).

    Uses the inclusion-exclusion formula

        S(r, k) = 1/k! sum_i (-1)^i C(k, i) (k - i)^r

    with S(0, 0) = 1.
    """
    if r < 0 or k < 0:
        raise ValueError("Stirling numbers need r, k >= 0.")
    if k > r:
        return 0
    if k == 0:
        return 1 if r == 0 else 0
    total = sum((-1)**i*binomial(k, i)*(k - i)**r for i in range(k + 1))
    return total//factorial(k)


def surjection_count(r, k):
    """Number of onto maps {1..r} -> {1..k}, i.e. k! S(r, k)."""
    return factorial(k)*stirling2(r, k)


def algebra_dimension(n):
    """Dimension of QSE_n, the sum of k! S(r, k) over 0 <= k <= r <= n."""
    return sum(surjection_count(r, k) for r in range(n + 1)
               for k in range(r + 1))


# =================================
# Permutations
# =================================

# Permutations of {1..m} are tuples p with p[i - 1] the image of i, so the
# identity is (1, 2, ..., m). This is the same table a bijective surjection
# m -> m uses.

def identity_perm(m):
    """Identity permutation of {1..m}."""
    return tuple(range(1, m + 1))


def compose_perm(p, q):
    """Returns p o q (apply q first)."""
    if len(p) != len(q):
        raise ValueError("Cannot compose permutations of different sizes.")
    return tuple(p[j - 1] for j in q)


def inverse_perm(p):
    """Inverse permutation."""
    inv = [0]*len(p)
    for (i, j) in enumerate(p):
        inv[j - 1] = i + 1
    return tuple(inv)


def is_perm(p):
    """True if p is an image table of a permutation of {1..len(p)}."""
    return sorted(p) == list(range(1, len(p) + 1))


def perm_from_cycles(cycles, m):
    """
    Builds a permutation of {1..m} from 1-based cycle notation.

    E.g. perm_from_cycles([(1, 3, 2, 4)], 4) is the 4-cycle 1->3->2->4->1.
    """
    images = list(range(1, m + 1))
    for c in cycles:
        for (a, b) in zip(c, c[1:] + c[:1]):
            images[a - 1] = b
    p = tuple(images)
    if not is_perm(p):
        raise ValueError("Cycles %r do not define a permutation." % (cycles,))
    return p


def cycle_lengths(p):
    """Cycle lengths of p, sorted in decreasing order."""
    seen = [False]*len(p)
    lengths = []
    for start in range(len(p)):
        if not seen[start]:
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = p[j] - 1
                length += 1
            lengths.append(length)
    return tuple(sorted(lengths, reverse=True))


def perm_sign(p):
    """Sign of a permutation (+1 or -1)."""
    return -1 if sum(c - 1 for c in cycle_lengths(p)) % 2 else 1


def all_perms(m):
    """Iterator over all permutations of {1..m} as image tables."""
    return itertools.permutations(range(1, m + 1))


def perm_generators(m):
    """Adjacent transpositions generating S_m (empty for m < 2)."""
    gens = []
    for i in range(1, m):
        images = list(range(1, m + 1))
        images[i - 1], images[i] = images[i], images[i - 1]
        gens.append(tuple(images))
    return gens


def embed_perm(p, m, offset=0):
    """
    Embeds a permutation of {1..len(p)} into S_m acting on
    {offset+1 .. offset+len(p)} and fixing everything else.
    """
    if offset + len(p) > m:
        raise ValueError("Permutation does not fit in S_%d." % m)
    images = list(range(1, m + 1))
    for (i, j) in enumerate(p):
        images[offset + i] = offset + j
    return tuple(images)


# =================================
# Containers and output helpers
# =================================

class ReadOnlyDict(dict):
    """Read-only dictionary to prevent user changes."""
    def __readonly__(self, *args, **kwargs):
        raise NotImplementedError("Cannot modify ReadOnlyDict")
    __setitem__ = __readonly__
    __delitem__ = __readonly__
    pop = __readonly__
    popitem = __readonly__
    clear = __readonly__
    update = __readonly__
    setdefault = __readonly__
    del __readonly__


def multiset_add(target, source, scale=1):
    """
    Adds multiplicities from source into target (both dicts item -> int).

    Zero entries are removed so that multisets stay canonical.
    """
    for (k, v) in source.items():
        total = target.get(k, 0) + scale*v
        if total == 0:
            target.pop(k, None)
        else:
            target[k] = total
    return target


def is_mapping(x):
    """True for dict-like objects."""
    return isinstance(x, collections.abc.Mapping)


def strcolor(s, color=None, bold=False):
    """
    Adds ANSI escape sequences to colorize string s.

    color must be one of the eight standard colors (RGBCMYKW). Accepts full
    names or one-letter abbreviations.

    Keyword bold decides to make string bold.
    """
    colors = dict(_end="\033[0m", _bold="\033[1m", b="\033[94m", c="\033[96m",
        g="\033[92m", k="\033[90m", m="\033[95m", r="\033[91m", w="\033[97m",
        y="\033[93m")
    colors[""] = ""
    colors[None] = ""

    # Decide what color user gave.
    c = "" if color is None else color.lower()
    if c == "black":
        c = "k"
    elif len(c) > 0:
        c = c[0]
    try:
        c = colors[c]
    except KeyError:
        raise ValueError("Invalid color choice '%s'!" % (color,))

    # Build up front and back of string and return.
    front = (colors["_bold"] if bold else "") + c
    back = (colors["_end"] if len(front) > 0 else "")
    return "%s%s%s" % (front, s, back)


@contextmanager
def stdout_redirected(to=os.devnull):
    """
    Context to redirect Python output, e.g.,

        with stdout_redirected(to=filename):
            print("from Python")
    """
    old_stdout = sys.stdout
    with open(to, "w") as new_stdout:
        sys.stdout = new_stdout
        try:
            yield
        finally:
            sys.stdout.flush()
            sys.stdout = old_stdout


@contextmanager
def dummy_context(*args):
    """
    Dummy context for a with statement.
    """
    yield


def runfile(file, scope=None):
    """
    Executes a file in the given scope and return the dict of variables.

    The default is a new scope. If an existing scope is given, it is modified
    in place.
    """
    if scope is None:
        scope = {}
    with open(file, "r") as f:
        code = f.read()
    exec(compile(code, file, "exec"), scope)
    return scope


def env_flag(name):
    """True if environment variable name is set to something other than 0."""
    value = os.environ.get(name, "")
    return value not in ("", "0")
