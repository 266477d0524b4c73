"""Finite permutation groups: coprime-order products, nilpotency and Sylow factorizations."""

__version__ = "0.1.0"

from .errors import GroupError, ParseError, ResourceLimitError  # noqa: E402
from .perm import (  # noqa: E402
    Permutation,
    compose,
    cycle_decomposition,
    element_order,
    format_cycles,
    inverse,
    parse_cycles,
)
from .groups import (  # noqa: E402
    GroupTable,
    Subgroup,
    alternating,
    close,
    conjugate_subgroup,
    cyclic,
    dihedral,
    direct_product,
    is_normal,
    lower_central_series,
    normalizer,
    quaternion8,
    subgroup_from,
    symmetric,
)
from .sylow import (  # noqa: E402
    PrimeDecomposition,
    SylowSystem,
    all_sylow_subgroups,
    default_sylow_system,
    element_of_prime_order,
    prime_decomposition,
    sylow_subgroup,
)
from .properties import (  # noqa: E402
    check_property_a,
    check_property_a_tuples,
    is_nilpotent_lcs,
    is_nilpotent_sylow,
    verify_theorem,
)
from .factorization import (  # noqa: E402
    product_set,
    search_sylow_factorization,
    verify_product_injectivity,
)
