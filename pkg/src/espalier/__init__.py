"""Band-generator braid calculus for espalier-positive links.

Submodules:
    braid       band words, parsing, Artin expansion, permutations
    trees       espaliers (non-crossing spanning trees) and classification
    garside     dual Garside normal form, word problem, staircase detection
    surface     braided Seifert surface accounting and homogenization
    cabling     staircase representatives for (p,q)-cables
    compose     connected sums of words and espaliers
    invariants  Laurent arithmetic, reduced Burau, Alexander polynomials
    diagram     closed-braid diagrams and the visual-primeness quick test
    cli         the `espalier` command-line front end
"""

from .braid import (
    BandGenerator,
    BraidWord,
    Permutation,
    closure_components,
    concat,
    conjugate,
    cyclic_rotations,
    exponent_sum,
    exponent_sum_by_edge,
    format_braid,
    free_reduce,
    invert,
    parse_braid,
    to_artin,
    underlying_permutation,
)
from .cabling import CableSpec, cable_delta, cable_generator, cable_staircase
from .compose import connected_sum_words, espalier_sum, shift_embed_left, shift_embed_right
from .diagram import (
    closed_braid_diagram,
    find_two_loops,
    region_dual_graph,
    visual_primeness_report,
)
from .garside import (
    NonCrossingPartition,
    NormalForm,
    band_to_simple,
    delta,
    is_staircase,
    left_complement,
    left_normal_form,
    simple_product,
    tau_shift,
    words_equal,
)
from .invariants import (
    alexander_of_closure,
    fibered_degree_check,
    reduced_burau,
    satellite_alexander,
    torus_alexander,
)
from .laurent import LaurentPolynomial
from .surface import (
    euler_characteristic,
    genus_of_knot_closure,
    homogenize,
    murasugi_decomposition,
)
from .trees import (
    Classification,
    Espalier,
    Kind,
    classify,
    enumerate_espaliers,
    find_espalier,
    linear,
    new_espalier,
    parse_espalier,
)

__version__ = "0.1.0"
