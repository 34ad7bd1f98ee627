"""Exact higher Fitting ideals over polynomial rings and their quotients."""

from ._hfitt import (
    Complex,
    Error,
    Ideal,
    InputError,
    InvariantError,
    Matrix,
    Module,
    ParseError,
    Resolution,
    ResourceError,
    Ring,
    RingMismatch,
    Scheme,
    __version__,
    brill_noether_ideal,
    classical_fitting,
    determinant,
    determinantal_scheme,
    fitting_ideal,
    free_resolution,
    generic_rank,
    higher_singular_locus,
    kaehler_presentation,
    liftable_sections_rank,
    minimalize,
    minors_ideal,
    padding_is_quasi_iso,
    pd_locus,
    run_job,
    singular_locus,
    underline_fitting_ideal,
)
