# Inductions from the dihedral group D_4 to S_4.
import surjtools as sj
from surjtools import characters, util

D4 = characters.DIHEDRAL_D4

# nu sends each element to the permutation it induces on the blocks
# {1,2} and {3,4}.
print("%16s %8s" % ("tau", "nu(tau)"))
for tau in D4:
    print("%16s %8s" % (tau, characters.nu(tau)))

# Induced characters and their decompositions.
for (name, chi) in [("trivial", characters.D4_TRIVIAL),
                    ("sign of nu", characters.D4_SIGN_BAR)]:
    induced = characters.induce_from_subgroup(D4, chi)
    dec = characters.decompose(induced)
    print("Ind %s = %s" % (name, " + ".join(str(lam) for lam in dec)))

# These are the substitutions used by the closed form.
assert sj.cartan.regenerate_d4_substitution() == sj.cartan.D4_SUBSTITUTION

# (tau', tau) fixes the map (1,1,2,2) exactly when tau' = nu(tau).
fixers = [(tp, t) for tp in util.all_perms(2) for t in util.all_perms(4)
          if sj.surjections.fixes_block_map(tp, t)]
print("%d pairs fix (1,1,2,2)." % len(fixers))
