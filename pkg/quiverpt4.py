# Quiver of the surjection category algebra for n = 4.
import surjtools as sj

n = 4
q = sj.quiver(n)

# Arrows go from level k + 1 down to level k.
print("Quiver of QSE_%d: %d vertices, %d arrows." % (n, len(q.vertices),
                                                     q.num_arrows))
for v in q.vertices:
    for (t, m) in q.successors(v):
        mult = "" if m == 1 else "  (x%d)" % m
        print("    %s -> %s%s" % (v, t, mult))

# Every path loses one level per arrow.
print("Longest path: %d arrows." % sj.longest_path(q))
for k in range(n + 1):
    sink = sj.partitions.sgn(k)
    assert q.successors(sink) == [], "sgn_%d should be a sink" % k

# Compare with Ext^1 between simples computed in the algebra itself.
A = sj.build_algebra(n)
for alpha in q.vertices:
    for beta in q.vertices:
        if beta.size + 1 == alpha.size:
            ext = sj.ext_dim(A, alpha, beta, 1)
            assert ext == q.arrow_count(alpha, beta), \
                "Ext^1(S(%s), S(%s)) = %d" % (alpha, beta, ext)
print("Arrows agree with dim Ext^1.")

# DOT for graphviz.
with open("quiver%d.dot" % n, "w") as f:
    f.write(q.to_dot())
