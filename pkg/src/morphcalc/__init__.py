"""morphcalc: exact calculator for the quantity polynomials of classical manifolds."""

from importlib import resources

from .quantity import (
    Classification,
    MorphError,
    MorphPoly,
    NonZeroRemainder,
    SemiIntegralForm,
    classify,
    div_exact,
    euler,
    evaluate_at,
    render,
    ring_arithmetic,
    semi_integral_minimal,
)
from .stability import (
    CellComplex,
    NormalForm,
    dimension,
    rewrite_reachable,
    stable_normal_form,
)
from .catalog import (
    catalog_entry,
    catalog_quantity,
    gaussian_binomial,
    hopf_family,
    registry_table,
    schubert_cells,
    sphere_addition,
)
from .factorize import (
    FactorizationResult,
    factor_into_catalog,
    grassmann_divide,
    periodicity_scan,
)
from .lang import eval_expr, parse, print_expr
from .corpus import (
    IdentityRecord,
    VerifyReport,
    bivector_audit,
    load_corpus,
    verify_corpus,
)

__version__ = "0.1.0"


def corpus_path():
    """Filesystem path of the identity corpus shipped with the package."""
    return resources.files(__name__).joinpath("data/identities.morph")
