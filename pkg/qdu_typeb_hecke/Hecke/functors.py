"""
Twists, induction and restriction of 0-Hecke modules.

Twists act on the stored generator matrices:

- theta: A -> -(A + I), the automorphism pi-bar_s -> -pi_s;
- chi: A -> A^T, the dual module under the anti-automorphism fixing each
  pi-bar_s. Labels gamma become w_0 gamma;
- phi: generator i -> n - i in type A, labels gamma become w_0 gamma w_0.
  In type B phi is the identity.

All twists keep the order of the basis.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Hashable, Mapping

from ..Coxeter.signed_permutation import Permutation, SignedPermutation
from ..Posets.bn_poset import BnPoset, linear_extensions_B
from ..Posets.finite_poset import FinitePoset
from ..Posets.surgery import (
    RestrictionBijection,
    bullet_B,
    disjoint_union_B,
    lower_subposets_B,
    minimal_coset_representatives,
    standardize_A,
    standardize_B,
    upper_subposets,
)
from .hecke_module import HeckeModule, HeckeModuleException, Row, direct_sum, generators_of, tensor
from .poset_modules import module_MBP, module_MP_typeA

log = logging.getLogger(__name__)

SparseMap = dict[int, dict[int, int]]


def _w0_left(label: Hashable) -> Hashable:
    if isinstance(label, (SignedPermutation, Permutation)):
        return type(label).longest(label.n) * label
    return label


def _w0_conjugate(label: Hashable) -> Hashable:
    if isinstance(label, Permutation):
        w0 = Permutation.longest(label.n)
        return w0 * label * w0
    return label


def twist_theta(module: HeckeModule) -> HeckeModule:
    actions: dict[int, list[Row]] = {}
    for i, rows in module.actions.items():
        new_rows = []
        for j, row in enumerate(rows):
            entries = {k: -c for k, c in row}
            entries[j] = entries.get(j, 0) - 1
            new_rows.append(tuple(sorted(entries.items())))
        actions[i] = new_rows
    return HeckeModule(module.coxeter_type, module.rank, module.basis, actions,
                       name=f"θ[{module.name}]", check=False)


def twist_chi(module: HeckeModule) -> HeckeModule:
    actions: dict[int, list[Row]] = {}
    for i, rows in module.actions.items():
        columns: list[list[tuple[int, int]]] = [[] for _ in rows]
        for j, row in enumerate(rows):
            for k, c in row:
                columns[k].append((j, c))
        actions[i] = [tuple(col) for col in columns]
    basis = [_w0_left(b) for b in module.basis]
    return HeckeModule(module.coxeter_type, module.rank, basis, actions,
                       name=f"χ[{module.name}]", check=False)


def twist_phi(module: HeckeModule) -> HeckeModule:
    if module.coxeter_type == "B":
        return module
    n = module.rank
    actions = {n - i: rows for i, rows in module.actions.items()}
    basis = [_w0_conjugate(b) for b in module.basis]
    return HeckeModule("A", n, basis, actions, name=f"φ[{module.name}]", check=False)


TWISTS: dict[str, Callable[[HeckeModule], HeckeModule]] = {
    "theta": twist_theta,
    "chi": twist_chi,
    "phi": twist_phi,
}


# induction

def _require_poset_module(module: HeckeModule, coxeter_type: str, kind: type) -> None:
    if module.coxeter_type != coxeter_type or module.variant != "bar" \
            or not isinstance(module.poset, kind):
        raise HeckeModuleException(
            f"expected a type-{coxeter_type} poset module, got {module!r}"
        )


def induce(left: HeckeModule, right: HeckeModule) -> HeckeModule:
    """
    M^B_{P1} ⊠^B M_{P2}, realized as M^B_{P1 ⊔_B P2}.

    Raises:
        HeckeModuleException: if either input is not a poset module.
    """
    _require_poset_module(left, "B", BnPoset)
    _require_poset_module(right, "A", FinitePoset)
    return module_MBP(disjoint_union_B(left.poset, right.poset))


def induction_basis_map(first: BnPoset, second: FinitePoset) -> dict[tuple, SignedPermutation]:
    """(sigma, rho, delta) -> (sigma ·_B rho) delta, a bijection onto Sigma^B_R(P1 ⊔_B P2)."""
    m, n = first.n, len(second)
    reps = minimal_coset_representatives(m, n)
    return {(sigma, rho, delta): bullet_B(sigma, rho) * delta
            for sigma in linear_extensions_B(first)
            for rho in second.linear_extensions()
            for delta in reps}


def induce_general(left: HeckeModule, right: HeckeModule) -> HeckeModule:
    """
    (M ⊗ N) ⊗ H^B_{m+n}(0) over H^B_m(0) ⊗ H_n(0), on the basis
    (x ⊗ y) ⊗ g_delta with delta a minimal coset representative.

    Generator i sends (x ⊗ y) ⊗ g_delta to its negative when i is a right
    descent of delta, to (x ⊗ y) ⊗ g_{delta s_i} when delta s_i is again
    minimal, and otherwise moves s_j = delta s_i delta^{-1} onto the factor.
    """
    if left.coxeter_type != "B" or right.coxeter_type != "A":
        raise HeckeModuleException("expected a type-B module and a type-A module")
    if left.generators != generators_of("B", left.rank) or \
            right.generators != generators_of("A", right.rank):
        raise HeckeModuleException("induction needs modules over the full algebras")
    m, n = left.rank, right.rank
    total = m + n
    reps = minimal_coset_representatives(m, n)
    rep_index = {delta: r for r, delta in enumerate(reps)}
    simples = {SignedPermutation.simple(total, j): j for j in range(total)}
    width = right.dim
    size = len(reps)

    def position(a: int, b: int, r: int) -> int:
        return (a * width + b) * size + r

    basis = [((la, lb), delta) for la in left.basis for lb in right.basis for delta in reps]
    actions: dict[int, list[Row]] = {}
    for i in range(total):
        rows: list[Row] = []
        for a in range(left.dim):
            for b in range(width):
                for r, delta in enumerate(reps):
                    if i in delta.right_descents():
                        rows.append(((position(a, b, r), -1),))
                        continue
                    moved = delta.times_simple(i)
                    if moved in rep_index:
                        rows.append(((position(a, b, rep_index[moved]), 1),))
                        continue
                    j = simples.get(moved * delta.inverse())
                    if j is None or j == m:
                        raise HeckeModuleException(
                            f"{delta} s_{i} leaves the parabolic double coset"
                        )
                    if j < m:
                        rows.append(tuple((position(k, b, r), c) for k, c in left.actions[j][a]))
                    else:
                        rows.append(tuple((position(a, k, r), c)
                                          for k, c in right.actions[j - m][b]))
        actions[i] = rows
    induced = HeckeModule("B", total, basis, actions,
                          name=f"Ind({left.name} ⊗ {right.name})")
    log.debug(f"induced module of dimension {induced.dim}")
    return induced


def induction_map(induced: HeckeModule, target: HeckeModule,
                  embed: Callable[[Hashable, Hashable], Mapping[int, int]]) -> SparseMap:
    """
    The map (x ⊗ y) ⊗ g_delta -> embed(x, y) · g_delta, acting on the
    target along a reduced word of delta.
    """
    rows: SparseMap = {}
    for r, ((la, lb), delta) in enumerate(induced.basis):
        vector = dict(embed(la, lb))
        rows[r] = target.act_word(vector, delta.reduced_word())
    return rows


# restriction

@dataclass(frozen=True)
class RestrictionSummand:
    lower: FinitePoset
    upper: FinitePoset
    left: HeckeModule
    right: HeckeModule


def restrict(module: HeckeModule, m: int) -> list[RestrictionSummand]:
    """
    The summands M^B_{st_B(Q)} ⊗ M_{st(U)} of the restriction of M^B_P to
    H^B_m(0) ⊗ H_{n-m}(0), one per lower subposet Q and upper subposet U.
    """
    _require_poset_module(module, "B", BnPoset)
    poset = module.poset
    if not 0 <= m <= poset.n:
        raise HeckeModuleException(f"split point {m} is outside [0,{poset.n}]")
    summands = []
    for lower in lower_subposets_B(poset, m):
        left = module_MBP(standardize_B(lower))
        for upper in upper_subposets(poset, lower):
            summands.append(RestrictionSummand(lower, upper, left,
                                               module_MP_typeA(standardize_A(upper))))
    log.debug(f"restriction to m={m} has {len(summands)} summands")
    return summands


def restricted_to_parabolic(module: HeckeModule, m: int) -> HeckeModule:
    """Forget generator m; the rank-n module is kept when m = n."""
    return module.restricted(m) if m in module.actions else module


def restriction_map(poset: BnPoset, m: int,
                    twist: Callable[[HeckeModule], HeckeModule] = lambda x: x
                    ) -> tuple[HeckeModule, HeckeModule, SparseMap]:
    """
    The permutation map gamma -> st+(gamma) ⊗ st-(gamma) from the restricted
    module onto the direct sum of the tensor products. With ``twist`` given,
    source and every tensor factor are twisted first.

    Returns:
        (source, target, rows) with rows in index form
    """
    source_module = module_MBP(poset)
    summands = restrict(source_module, m)
    source = restricted_to_parabolic(twist(source_module), m)
    target = direct_sum(*[tensor(twist(s.left), twist(s.right)) for s in summands])
    keys = {(s.lower, s.upper): k for k, s in enumerate(summands)}
    offsets, offset = [], 0
    for s in summands:
        offsets.append(offset)
        offset += s.left.dim * s.right.dim
    bijection = RestrictionBijection(poset, m)
    rows: SparseMap = {}
    for j, gamma in enumerate(source_module.basis):
        image = bijection.forward(gamma)
        k = keys[(image.lower, image.upper)]
        s = summands[k]
        local = s.left.index(image.gamma1) * s.right.dim + s.right.index(image.gamma2)
        rows[j] = {offsets[k] + local: 1}
    return source, target, rows
