from .operations import (
    action_odotB,
    coaction_deltaB,
    coaction_oracle,
    coproduct_A,
    counit,
    fundamental_to_monomial_A,
    fundamental_to_monomial_B,
    monomial_to_fundamental_A,
    monomial_to_fundamental_B,
    product_A,
    shuffle_B_by_definition,
    shuffle_B_huang,
)
from .qsym_elements import QSymBasisError, QSymBElement, QSymElement
from .truncated import TruncatedPoly, expand_truncated

__all__ = [
    "QSymBasisError",
    "QSymBElement",
    "QSymElement",
    "TruncatedPoly",
    "action_odotB",
    "coaction_deltaB",
    "coaction_oracle",
    "coproduct_A",
    "counit",
    "expand_truncated",
    "fundamental_to_monomial_A",
    "fundamental_to_monomial_B",
    "monomial_to_fundamental_A",
    "monomial_to_fundamental_B",
    "product_A",
    "shuffle_B_by_definition",
    "shuffle_B_huang",
]
