import argparse
import json
import sys
import warnings
from . import util
from . import cartan
from . import characters
from . import oracle
from . import surjections
from . import tableaux
from .partitions import (Partition, parse_partition, ds, sgn,
                         hook_dimension)

"""
Command-line front end: python -m surjtools COMMAND [options].

Data goes to stdout (JSON unless another format is asked for); status and
errors go to stderr. Exit codes are 0 for success, 1 for usage errors, 2 when
the size guard refuses a computation and 3 when a certificate fails.
"""

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_GUARD = 2
EXIT_CERTIFICATE = 3

COMMANDS = ("cartan", "quiver", "gdim", "resolve", "lr", "char", "homchar",
            "verify")
FORMATS = ("json", "csv", "dot", "text")


class UsageError(ValueError):
    """Bad command line."""
    pass


class _Parser(argparse.ArgumentParser):
    """Argument parser that raises instead of exiting."""
    def error(self, message):
        raise UsageError(message)


def make_parser():
    """Builds the argument parser with one subparser per command."""
    parser = _Parser(prog="surjtools", description=__doc__, add_help=False)
    parser.add_argument("--help", help="print this help", action="help")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="more status output on stderr (repeatable)")
    parser.add_argument("--force", action="store_true",
                        help="build algebras above the size guard")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("cartan", help="Cartan matrix of QSE_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=cartan.METHODS, default="character")
    p.add_argument("--format", choices=("json", "csv", "text"),
                   default="json")
    p.add_argument("--fill-unknown", action="store_true",
                   help="closed form: mark entries at offset >= 3 unknown")

    p = sub.add_parser("quiver", help="quiver of QSE_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("dot", "json", "text"),
                   default="dot")

    p = sub.add_parser("gdim", help="global dimension of QSE_n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("resolve", help="minimal resolution of a simple")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--partition", required=True,
                   help='simple module, e.g. "[2,1]"')
    p.add_argument("--max-len", type=int, default=None)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficients")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--delta", required=True)
    p.add_argument("--gamma", default=None,
                   help="single coefficient; omit for the full expansion")

    p = sub.add_parser("char", help="characters of S_k")
    p.add_argument("--lambda", dest="lam", default=None,
                   help="irreducible character chi^lambda")
    p.add_argument("--mu", default=None,
                   help="cycle type for a single value")
    p.add_argument("--payload", default=None,
                   help="JSON class function to decompose into irreducibles")

    p = sub.add_parser("homchar", help="permutation character of SE(r, k)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--decompose", action="store_true")

    p = sub.add_parser("verify", help="cross-method consistency checks")
    p.add_argument("--n", type=int, required=True)
    return parser


class RunConfig(object):
    """
    Validated settings for one command.
    """
    def __init__(self, command, n=None, method="character", partitions=None,
                 format="json", force=False, verbosity=0, options=None):
        if command not in COMMANDS:
            raise UsageError("Unknown command '%s'." % (command,))
        if n is not None and n < 0:
            raise UsageError("n must be nonnegative.")
        if method not in cartan.METHODS:
            raise UsageError("Unknown method '%s'." % (method,))
        if format not in FORMATS:
            raise UsageError("Unknown format '%s'." % (format,))
        self.command = command
        self.n = n
        self.method = method
        self.partitions = util.ReadOnlyDict(partitions or {})
        self.format = format
        self.force = force
        self.verbosity = verbosity
        self.options = util.ReadOnlyDict(options or {})

    @classmethod
    def from_args(cls, args):
        """Builds a RunConfig from parsed arguments."""
        if args.command is None:
            raise UsageError("No command given; choose one of %s."
                             % ", ".join(COMMANDS))
        partitions = {}
        for name in ("partition", "lam", "delta", "gamma", "mu"):
            text = getattr(args, name, None)
            if text is not None:
                partitions[name] = parse_partition(text)
        options = {}
        for name in ("max_len", "fill_unknown", "r", "k", "decompose"):
            if hasattr(args, name):
                options[name] = getattr(args, name)
        if getattr(args, "payload", None) is not None:
            options["payload"] = characters.ClassFunction.from_json(
                json.loads(args.payload))
        return cls(args.command, n=getattr(args, "n", None),
                   method=getattr(args, "method", "character"),
                   partitions=partitions,
                   format=getattr(args, "format", "json"),
                   force=args.force or util.env_flag("SURJTOOLS_FORCE"),
                   verbosity=args.verbose, options=options)


def _dumps(obj):
    return json.dumps(obj) + "\n"


def _matrix_text(C):
    rows = C.rows()
    width = max([len(str(x)) for row in rows for x in row] + [1])
    return "".join(" ".join(("?" if x is None else str(x)).rjust(width)
                            for x in row) + "\n" for row in rows)


def _run_cartan(config):
    fill = "unknown" if config.options.get("fill_unknown") else None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        C = cartan.full_cartan(config.n, config.method, fill=fill,
                               force=config.force)
    if config.format == "csv":
        return C.to_csv()
    elif config.format == "text":
        return _matrix_text(C)
    return _dumps(C.to_json())


def _run_quiver(config):
    q = cartan.quiver(config.n)
    if config.format == "json":
        return _dumps(q.to_json())
    elif config.format == "text":
        return "".join("%s -> %s\n" % (s, t) for (s, t) in q.arrow_list())
    return q.to_dot()


def _run_gdim(config):
    return "%d\n" % oracle.global_dimension(config.n, force=config.force)


def _run_resolve(config):
    lam = config.partitions["partition"]
    if lam.size > config.n:
        raise UsageError("%s has more than %d boxes." % (lam, config.n))
    A = oracle.build_algebra(config.n, force=config.force)
    res = oracle.minimal_resolution(A, lam, config.options.get("max_len"))
    return _dumps(res.to_json())


def _label_key(label):
    if isinstance(label, Partition):
        return str(label)
    return "%s x %s" % label


def _run_lr(config):
    lam = config.partitions["lam"]
    delta = config.partitions["delta"]
    gamma = config.partitions.get("gamma")
    if gamma is not None:
        expansion = {gamma : tableaux.lr_coefficient(lam, delta, gamma)}
    else:
        expansion = tableaux.lr_expand(lam, delta)
    return _dumps({_label_key(g) : m for (g, m) in expansion.items()})


def _run_char(config):
    payload = config.options.get("payload")
    lam = config.partitions.get("lam")
    if (payload is None) == (lam is None):
        raise UsageError("char needs exactly one of --lambda and --payload.")
    if payload is not None:
        dec = characters.decompose(payload)
        return _dumps({_label_key(label) : m for (label, m) in dec.items()})
    mu = config.partitions.get("mu")
    if mu is not None:
        return "%d\n" % characters.mn_character(lam, mu)
    return _dumps(characters.irreducible(lam).to_json())


def _run_homchar(config):
    (r, k) = (config.options["r"], config.options["k"])
    if r < 0 or k < 0:
        raise UsageError("r and k must be nonnegative.")
    if config.options.get("decompose"):
        dec = cartan.hom_decomposition(r, k)
        return _dumps([{"beta" : b.to_json(), "alpha" : a.to_json(),
                        "multiplicity" : m} for ((b, a), m) in dec.items()])
    return _dumps(surjections.hom_permutation_character(r, k).to_json())


# =================================
# Cross-method checks
# =================================

def _check_closed_form(n, A):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        closed = cartan.full_cartan(n, "closed_form", fill="unknown")
    return closed.agrees_with(cartan.full_cartan(n, "character"))


def _check_oracle_cartan(n, A):
    return (cartan.full_cartan(n, "oracle", algebra=A)
            == cartan.full_cartan(n, "character"))


def _check_quiver_ext(n, A):
    q = cartan.quiver(n)
    for alpha in q.vertices:
        for beta in q.vertices:
            if beta.size + 1 == alpha.size:
                if oracle.ext_dim(A, alpha, beta, 1) != q.arrow_count(alpha,
                                                                      beta):
                    return False
    return True


def _check_gdim(n, A):
    return oracle.global_dimension(A) == max(n - 1, 0)


def _check_pd_bound(n, A):
    q = cartan.quiver(n)
    return all(oracle.projective_dimension(A, lam)
               <= cartan.longest_path_from(q, lam) for lam in A.simples())


def _check_ds_ladder(n, A):
    for k in range(2, n + 1):
        if oracle.projective_dimension(A, ds(k)) != k - 1:
            return False
        if oracle.ext_dim(A, ds(k), Partition((1,)), k - 1) != 1:
            return False
    return True


def _check_sgn_projective(n, A):
    for k in range(n + 1):
        if oracle.projective_dimension(A, sgn(k)) != 0:
            return False
        if len(A.projective_basis(sgn(k))) != hook_dimension(sgn(k)):
            return False
    return True


def _check_jh_ds(n, A):
    C = cartan.full_cartan(n, "character")
    for k in range(3, n + 1):
        expected = {ds(k) : 1, ds(k - 1) : 1, sgn(k - 1) : 1}
        found = oracle.jh_factors(A, ds(k))
        if found != expected or found != C.column(ds(k)):
            return False
    return True


def _check_d4(n, A):
    return cartan.regenerate_d4_substitution() == cartan.D4_SUBSTITUTION


def _check_orbits(n, A):
    for k in range(2, n - 1):
        (O1, O2) = surjections.orbits_second_level(k)
        if len(O1) + len(O2) != util.surjection_count(k + 2, k):
            return False
        (K1, K2) = surjections.kappa_stabilizers(k)
        if (sorted(K1) != sorted(surjections.stabilizer(surjections.kappa1(k)))
                or sorted(K2) != sorted(surjections.stabilizer(
                    surjections.kappa2(k)))):
            return False
        induced = (surjections.induce_trivial(K1, k, k + 2)
                   + surjections.induce_trivial(K2, k, k + 2))
        if induced != surjections.hom_permutation_character(k + 2, k):
            return False
    return True


def _check_certificates(n, A):
    oracle.certify_algebra(A)
    return True


CHECKS = (
    ("radical and idempotent certificates", _check_certificates),
    ("closed form = character Cartan", _check_closed_form),
    ("oracle = character Cartan", _check_oracle_cartan),
    ("quiver arrows = dim Ext^1", _check_quiver_ext),
    ("global dimension = n - 1", _check_gdim),
    ("pd S(i) <= longest path from i", _check_pd_bound),
    ("pd S(ds_k) = k - 1", _check_ds_ladder),
    ("P(sgn_k) = S(sgn_k)", _check_sgn_projective),
    ("JH factors of P(ds_k)", _check_jh_ds),
    ("D4 substitution table", _check_d4),
    ("second-level orbits and stabilizers", _check_orbits),
)


def run_checks(n, force=False):
    """
    Runs every cross-method check for QSE_n.

    Returns a list of (name, passed). A failing certificate counts as a
    failed check; a guard refusal propagates.
    """
    A = oracle.build_algebra(n, force)
    results = []
    for (name, check) in CHECKS:
        util.printstatus("Checking %s." % name, level=2)
        try:
            passed = bool(check(n, A))
        except util.CertificateError as err:
            util.printstatus("%s: %s" % (name, err))
            passed = False
        results.append((name, passed))
    return results


def _run_verify(config):
    results = run_checks(config.n, config.force)
    color = sys.stdout.isatty()
    lines = []
    for (name, passed) in results:
        status = "PASS" if passed else "FAIL"
        if color:
            status = util.strcolor(status, "green" if passed else "red",
                                   bold=True)
        lines.append("%s  %s\n" % (status, name))
    failed = sum(1 for (_, passed) in results if not passed)
    return ("".join(lines), failed)


_DISPATCH = {
    "cartan" : _run_cartan,
    "quiver" : _run_quiver,
    "gdim" : _run_gdim,
    "resolve" : _run_resolve,
    "lr" : _run_lr,
    "char" : _run_char,
    "homchar" : _run_homchar,
}


def run(config, out=None):
    """
    Executes a RunConfig, writing data to out (default stdout).

    Returns the exit status.
    """
    if out is None:
        out = sys.stdout
    previous = util.getMaxVerbosity()
    util.setMaxVerbosity(1 + config.verbosity)
    try:
        return _run(config, out)
    finally:
        util.setMaxVerbosity(previous)


def _run(config, out):
    try:
        if config.command == "verify":
            (text, failed) = _run_verify(config)
            out.write(text)
            if failed:
                util.printstatus(util.strcolor("%d checks failed." % failed,
                                               "red", bold=True))
                return EXIT_CERTIFICATE
            return EXIT_OK
        out.write(_DISPATCH[config.command](config))
    except util.GuardError as err:
        util.printstatus("surjtools: %s" % err)
        return EXIT_GUARD
    except util.CertificateError as err:
        util.printstatus("surjtools: certificate failed: %s" % err)
        return EXIT_CERTIFICATE
    except (ValueError, TypeError, util.TruncatedResolutionError) as err:
        util.printstatus("surjtools: %s" % err)
        return EXIT_USAGE
    return EXIT_OK


def main(argv=None):
    """Entry point; returns the exit status."""
    parser = make_parser()
    try:
        config = RunConfig.from_args(parser.parse_args(argv))
    except (ValueError, TypeError) as err:
        util.printstatus("surjtools: %s" % err)
        util.printstatus(parser.format_usage().rstrip())
        return EXIT_USAGE
    return run(config)
