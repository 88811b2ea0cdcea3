"""
Import common functions here to make things a bit easier for the users.

The package computes Cartan matrices, quivers, minimal resolutions and the
global dimension of the category algebra of finite sets and surjections,
together with the symmetric-group combinatorics these rest on. All arithmetic
is exact.
"""

# Version for surjtools.
__version__ = "1.0.0"

# Add modules and some specific functions.
from . import util
from . import partitions
from . import tableaux
from . import characters
from . import surjections
from . import linalg
from . import oracle
from . import cartan
from .partitions import Partition, parse_partition, enumerate_partitions
from .tableaux import lr_coefficient, pieri_expand, lr_expand
from .characters import (ClassFunction, mn_character, irreducible,
                         inner_product, decompose)
from .surjections import (Surjection, enumerate_surjections,
                          hom_permutation_character)
from .oracle import (build_algebra, minimal_resolution, ext_dim,
                     global_dimension)
from .cartan import full_cartan, quiver, longest_path
from .util import setMaxVerbosity, GuardError, CertificateError
