"""Congruence analysis: surjectivity sweeps and non-congruence certificates."""

from .surjectivity import (
    sl2_mod_n_order,
    image_order_mod_n,
    surjects_mod_n,
    surjectivity_table,
)
from .certificates import (
    TncgWitness,
    TncgCertificate,
    columns_independent_mod_p,
    verify_theorem1,
    uniform_witness,
    abc_witness,
    certify_by_proposition,
    certify_by_abc,
)

__all__ = [
    "sl2_mod_n_order",
    "image_order_mod_n",
    "surjects_mod_n",
    "surjectivity_table",
    "TncgWitness",
    "TncgCertificate",
    "columns_independent_mod_p",
    "verify_theorem1",
    "uniform_witness",
    "abc_witness",
    "certify_by_proposition",
    "certify_by_abc",
]
