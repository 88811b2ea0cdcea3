# Second superdiagonal of the Cartan matrix: closed form vs characters.
import surjtools as sj
from surjtools import cartan, partitions

Kmax = 5

mismatches = 0
for k in range(1, Kmax + 1):
    print("beta |- %d, alpha |- %d" % (k, k + 2))
    for beta in partitions.enumerate_partitions(k):
        for alpha in partitions.enumerate_partitions(k + 2):
            (m1, m2) = cartan.second_superdiagonal_parts(beta, alpha)
            exact = cartan.cartan_entry_character(beta, alpha)
            if m1 + m2 == 0 and exact == 0:
                continue
            flag = "" if m1 + m2 == exact else "  <-- MISMATCH"
            if flag:
                mismatches += 1
            print("    (%s, %s): %d + %d = %d, character %d%s"
                  % (beta, alpha, m1, m2, m1 + m2, exact, flag))

# Column ds_k has nothing two levels down.
for k in range(3, Kmax + 3):
    ds = partitions.ds(k)
    assert all(cartan.cartan_second_superdiagonal(beta, ds) == 0
               for beta in partitions.enumerate_partitions(k - 2))

if mismatches:
    raise RuntimeError("%d entries disagree." % mismatches)

# The orbit counts behind the two contributions.
for k in range(2, 5):
    (O1, O2) = sj.surjections.orbits_second_level(k)
    print("SE(%d, %d): |O_1| = %d, |O_2| = %d" % (k + 2, k, len(O1),
                                                  len(O2)))
