"""Packed words, weak plane posets, and their Hopf algebra structures."""

from .packed_words import (
    FUBINI,
    CapacityError,
    InvalidWordError,
    PackedWord,
    EMPTY_WORD,
    from_quasi_order,
    is_packed,
    iter_packed_words,
    pack,
    packed_words,
    to_quasi_order,
)
from .posets import (
    DoublePoset,
    NotWeakPlaneError,
    WeakPlanePoset,
    canonicalize,
    check_weak_plane,
    coproduct_terms,
    count_pictures,
    is_plane,
    open_sets,
    poset_of_word,
    product,
    restrict,
    swap_orders,
    word_of_poset,
)
from .orders import (
    HasseDiagram,
    hasse,
    inversion_set,
    leq_lin,
    lin_extensions,
    prec,
    weak_lin_extensions,
)
from .hopf import (
    DOT,
    SHUFFLE,
    STRUCTURES,
    WPP,
    HopfStructure,
    IntMatrix,
    ModuleElement,
    TensorElement,
    antipode,
    counit,
    delta_wqsym,
    induced_pairing,
    lin_ext_map,
    lin_ext_map_inverse,
    matrix_of,
    matrix_of_map,
    pairing,
    prec_downset_map,
    prec_downset_map_inverse,
    qshuffle,
    shifted_shuffle,
    verify_hopf,
    weak_lin_ext_map,
    wpp_coproduct,
    wpp_product,
)
from .verify import run_verification

__version__ = "0.1.0"
