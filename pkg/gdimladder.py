# Projective dimensions along ds_k = [2,1^(k-2)] and global dimensions.
import surjtools as sj
from surjtools.partitions import ds, sgn

Nmax = 4
A = sj.build_algebra(Nmax)

# The simple S(ds_k) needs a resolution of length exactly k - 1, ending in
# one copy of P([1]).
print("%4s %8s %12s" % ("k", "pd", "Ext^(k-1)"))
for k in range(2, Nmax + 1):
    res = sj.minimal_resolution(A, ds(k))
    ext = sj.ext_dim(A, ds(k), [1], k - 1)
    print("%4d %8d %12d" % (k, res.length, ext))
    for (m, term) in enumerate(res.terms):
        print("         P_%d = %s" % (m, " + ".join("%dP(%s)" % (c, lam)
                                                   for (lam, c)
                                                   in term.items())))

# Projectives of sign representations are simple.
for k in range(Nmax + 1):
    assert sj.ext_dim(A, sgn(k), [1], 1) == 0

# Global dimension for each n.
for n in range(Nmax + 1):
    print("gldim QSE_%d = %d" % (n, sj.global_dimension(n)))
