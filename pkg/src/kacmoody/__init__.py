"""Exact computations in truncated symmetrisable Kac-Moody algebras."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .gcm import (GCM, FINITE, AFFINE, INDEFINITE, bilinear, classify_subdiagram,  # noqa: F401
                  components, has_affine_subdiagram, is_connected, load_gcm, symmetrize,
                  validate_gcm)
from .roots import (RootClass, RootString, apply_word, classify_root, disjointify,  # noqa: F401
                    enumerate_positive_roots, is_root, reduce_min_height, reduced_word,
                    root_string, word_support)
from .algebra import Element, KacMoodyAlgebra, build  # noqa: F401
from .peterson import PetersonOracle, peterson_mult  # noqa: F401
from .expr import format_element, parse_element  # noqa: F401
from .subalgebra import (GradedSubalgebra, abelian_canonical_form,  # noqa: F401
                         check_locally_finite_structure, decompose, psi_analysis, series,
                         solvability_verdict, span_closure, subalgebra_from_fixture)
