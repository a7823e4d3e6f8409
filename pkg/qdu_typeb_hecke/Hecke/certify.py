"""
Exact certificates that two 0-Hecke modules are isomorphic.

A certificate is an invertible rational matrix X, rows indexed by the
source basis, with ``A_i X = X B_i`` for every generator i, where A_i and
B_i are the generator matrices of source and target. Linear algebra runs
over QQ with sympy's sparse DomainMatrix.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping, Optional

import numpy as np
from sympy import QQ, Poly, expand, symbols, zeros
from sympy.polys.matrices import DomainMatrix

from ..Posets.bn_poset import BnPoset
from ..Posets.finite_poset import FinitePoset
from ..Posets.surgery import bullet_B, disjoint_union_B
from .functors import (
    induce_general,
    induction_map,
    restriction_map,
    twist_chi,
    twist_phi,
    twist_theta,
)
from .hecke_module import HeckeModule, HeckeModuleException
from .poset_modules import module_MBP, module_MP_typeA, module_sfMBP

log = logging.getLogger(__name__)

SOLVER_MAX_DIM = 64
# largest dimension for the exact fallback through the generic determinant
GENERIC_MAX_DIM = 10
SparseMap = Mapping[int, Mapping[int, int]]


class CertificationInconclusiveError(RuntimeError):
    pass


def to_domain_matrix(rows: SparseMap, shape: tuple[int, int]) -> DomainMatrix:
    dod = {j: {k: QQ(int(c)) for k, c in row.items() if c} for j, row in rows.items()}
    return DomainMatrix({j: row for j, row in dod.items() if row}, shape, QQ)


def generator_matrix(module: HeckeModule, i: int) -> DomainMatrix:
    rows = {j: dict(row) for j, row in enumerate(module.actions[i])}
    return to_domain_matrix(rows, (module.dim, module.dim))


def intertwines(source: HeckeModule, target: HeckeModule, X: DomainMatrix) -> bool:
    for i in source.generators:
        A, B = generator_matrix(source, i), generator_matrix(target, i)
        if not (A * X - X * B).is_zero_matrix:
            log.debug(f"map fails to intertwine generator {i}")
            return False
    return True


@dataclass(frozen=True)
class IsomorphismCertificate:
    source: HeckeModule
    target: HeckeModule
    matrix: DomainMatrix
    method: str = "explicit"

    def compose(self, other: "IsomorphismCertificate") -> "IsomorphismCertificate":
        """self: M -> N followed by other: N -> L."""
        if other.source.dim != self.target.dim:
            raise HeckeModuleException("certificates do not compose")
        return IsomorphismCertificate(self.source, other.target, self.matrix * other.matrix,
                                      f"{self.method} ∘ {other.method}")

    def inverse(self) -> "IsomorphismCertificate":
        return IsomorphismCertificate(self.target, self.source, self.matrix.inv(),
                                      f"inverse({self.method})")

    def dual(self) -> "IsomorphismCertificate":
        """chi[source] -> chi[target], through the inverse transpose."""
        return IsomorphismCertificate(twist_chi(self.source), twist_chi(self.target),
                                      self.matrix.inv().transpose(), f"dual({self.method})")

    def theta(self) -> "IsomorphismCertificate":
        """theta[source] -> theta[target]; theta is an automorphism, X is unchanged."""
        return IsomorphismCertificate(twist_theta(self.source), twist_theta(self.target),
                                      self.matrix, f"theta({self.method})")

    def is_valid(self) -> bool:
        d = self.source.dim
        return (self.matrix.shape == (d, d) and self.matrix.rank() == d
                and intertwines(self.source, self.target, self.matrix))


def _check_shapes(source: HeckeModule, target: HeckeModule) -> None:
    if (source.coxeter_type, source.rank) != (target.coxeter_type, target.rank):
        raise HeckeModuleException(f"{source!r} and {target!r} are over different algebras")
    if source.generators != target.generators:
        raise HeckeModuleException("modules carry different generators")
    if source.dim != target.dim:
        raise HeckeModuleException(
            f"dimension mismatch: {source.dim} against {target.dim}"
        )


def label_map(source: HeckeModule, target: HeckeModule,
              relabel: Callable[[Hashable], Hashable] = lambda x: x,
              sign: Callable[[Hashable], int] = lambda x: 1) -> dict[int, dict[int, int]]:
    """Rows sending the basis vector labelled x to sign(x) times the one labelled relabel(x)."""
    return {j: {target.index(relabel(x)): sign(x)} for j, x in enumerate(source.basis)}


def _intertwiner_space(source: HeckeModule, target: HeckeModule) -> list[DomainMatrix]:
    """Basis of {X : A_i X = X B_i}, from the nullspace of I ⊗ A_i - B_i^T ⊗ I."""
    d = source.dim
    eye = np.eye(d, dtype=np.int64)
    blocks = [np.kron(eye, source.matrix(i)) - np.kron(target.matrix(i).T, eye)
              for i in source.generators]
    system = np.vstack(blocks) if blocks else np.zeros((0, d * d), dtype=np.int64)
    rows = {r: {c: int(system[r, c]) for c in np.flatnonzero(system[r])}
            for r in range(system.shape[0])}
    kernel = to_domain_matrix(rows, (system.shape[0], d * d)).nullspace()
    vectors = kernel.to_Matrix().tolist() if kernel.shape[0] else []
    space = []
    for vec in vectors:
        # column-major vec(X)
        entries = {(k % d, k // d): value for k, value in enumerate(vec) if value != 0}
        dod: dict[int, dict[int, object]] = {}
        for (r, c), value in entries.items():
            dod.setdefault(r, {})[c] = QQ(value.p, value.q)
        space.append(DomainMatrix(dod, (d, d), QQ))
    return space


def certify_isomorphism(source: HeckeModule, target: HeckeModule,
                        basis_map: Optional[SparseMap] = None,
                        seeds: Iterable[int] = range(8),
                        max_dim: int = SOLVER_MAX_DIM) -> Optional[IsomorphismCertificate]:
    """
    Check a given basis map, or search for an isomorphism.

    Without a map the intertwiner space is computed and random integer
    combinations of its basis are tested for invertibility, one per seed.
    When every draw is singular the determinant of the generic combination
    decides: the zero polynomial means no intertwiner is invertible,
    otherwise a point where it does not vanish gives the certificate.

    Returns:
        the certificate, or None when the modules are not isomorphic
        (a failing basis map, or an intertwiner space without invertible
        elements).

    Raises:
        HeckeModuleException: for modules over different algebras, of
            different dimension, or above ``max_dim``.
        CertificationInconclusiveError: when the draws fail and the
            dimension is above ``GENERIC_MAX_DIM``.
    """
    _check_shapes(source, target)
    d = source.dim
    if basis_map is not None:
        X = to_domain_matrix({j: dict(row) for j, row in basis_map.items()}, (d, d))
        certificate = IsomorphismCertificate(source, target, X)
        if certificate.is_valid():
            return certificate
        log.info(f"basis map {source.name} -> {target.name} is not an isomorphism")
        return None
    if d == 0:
        return IsomorphismCertificate(source, target, DomainMatrix({}, (0, 0), QQ), "empty")
    if d > max_dim:
        raise HeckeModuleException(f"solver is limited to dimension {max_dim}, got {d}")
    space = _intertwiner_space(source, target)
    log.debug(f"intertwiner space of dimension {len(space)} for dim {d}")
    if not space:
        return None
    for seed in seeds:
        rng = np.random.default_rng(seed)
        coeffs = rng.integers(-5, 6, size=len(space))
        X = _combination(space, [int(c) for c in coeffs], d)
        if X.rank() == d:
            return IsomorphismCertificate(source, target, X, f"solver(seed={seed})")
    if d > GENERIC_MAX_DIM:
        raise CertificationInconclusiveError(
            f"no invertible intertwiner among the seeded draws for {source.name} -> "
            f"{target.name}, and dimension {d} is above {GENERIC_MAX_DIM}"
        )
    coeffs = _nonvanishing_point(space, d)
    if coeffs is None:
        log.info(f"{source.name} and {target.name} are not isomorphic: "
                 f"every intertwiner is singular")
        return None
    X = _combination(space, coeffs, d)
    return IsomorphismCertificate(source, target, X, "generic determinant")


def _combination(space: list[DomainMatrix], coeffs: Iterable[int], d: int) -> DomainMatrix:
    X = DomainMatrix({}, (d, d), QQ)
    for c, basis_vector in zip(coeffs, space):
        if c:
            X = X + basis_vector * QQ(c)
    return X


def _nonvanishing_point(space: list[DomainMatrix], d: int) -> Optional[list[int]]:
    """
    Integer coefficients at which sum t_k X_k is invertible, or None when
    the determinant of the generic combination is the zero polynomial.
    """
    ts = symbols(f"t0:{len(space)}")
    generic = zeros(d, d)
    for t, basis_vector in zip(ts, space):
        generic += t * basis_vector.to_Matrix()
    det_matrix = DomainMatrix.from_Matrix(generic)
    det = expand(det_matrix.domain.to_sympy(det_matrix.det()))
    if det == 0:
        return None
    # a nonzero polynomial of degree e in t stays nonzero at one of 0..e
    point = []
    for t in ts:
        for c in range(Poly(det, t).degree() + 1):
            value = expand(det.subs(t, c))
            if value != 0:
                break
        point.append(c)
        det = value
    log.debug(f"generic determinant is nonzero at {point}")
    return point


# the isomorphisms between twisted poset modules

def _sign(x) -> int:
    return -1 if x.length % 2 else 1


def theta_certificate(poset: BnPoset) -> Optional[IsomorphismCertificate]:
    """theta[M^B_P] -> sfM^B_P, gamma -> (-1)^l(gamma) gamma."""
    source, target = twist_theta(module_MBP(poset)), module_sfMBP(poset)
    return certify_isomorphism(source, target, label_map(source, target, sign=_sign))


def chi_certificate(poset: BnPoset) -> Optional[IsomorphismCertificate]:
    """chi[M^B_P] -> sfM^B_{P*}; chi already carries gamma* to w_0 gamma."""
    source, target = twist_chi(module_MBP(poset)), module_sfMBP(poset.dual())
    return certify_isomorphism(source, target, label_map(source, target))


def theta_chi_certificate(poset: BnPoset) -> Optional[IsomorphismCertificate]:
    """theta chi[M^B_P] -> M^B_{P*}, signed by the length of the label."""
    source, target = twist_theta(twist_chi(module_MBP(poset))), module_MBP(poset.dual())
    return certify_isomorphism(source, target, label_map(source, target, sign=_sign))


def induction_certificate(first: BnPoset, second: FinitePoset) -> Optional[IsomorphismCertificate]:
    """(M^B_{P1} ⊗ M_{P2}) ⊗ H^B(0) -> M^B_{P1 ⊔_B P2} via (a ⊗ b) ⊗ g_delta -> (a ·_B b) g_delta."""
    induced = induce_general(module_MBP(first), module_MP_typeA(second))
    target = module_MBP(disjoint_union_B(first, second))
    rows = induction_map(induced, target, lambda a, b: {target.index(bullet_B(a, b)): 1})
    return certify_isomorphism(induced, target, rows)


def twisted_induction_certificate(first: BnPoset, second: FinitePoset,
                                  twist: str) -> Optional[IsomorphismCertificate]:
    """
    theta[M1 ⊠ M2] -> theta[M1] ⊠ theta[M2], or
    chi[M1 ⊠ M2] -> chi[M1] ⊠ (chi phi)[M2], both routed through the
    sf-module of the glued poset.
    """
    base = induction_certificate(first, second)
    if base is None:
        return None
    glued = disjoint_union_B(first, second)
    left, right = module_MBP(first), module_MP_typeA(second)
    if twist == "theta":
        twin = theta_certificate(glued)
        into_sf = base.theta().compose(twin) if twin else None
        twisted = induce_general(twist_theta(left), twist_theta(right))
        sf_target = module_sfMBP(glued)
        embed = lambda a, b: {sf_target.index(bullet_B(a, b)): _sign(a) * _sign(b)}
    elif twist == "chi":
        twin = chi_certificate(glued)
        into_sf = base.dual().compose(twin) if twin else None
        twisted = induce_general(twist_chi(left), twist_chi(twist_phi(right)))
        sf_target = module_sfMBP(disjoint_union_B(first.dual(), second.dual()))
        embed = lambda a, b: {sf_target.index(bullet_B(a, b)): 1}
    else:
        raise ValueError(f"unknown twist {twist!r}")
    if into_sf is None:
        return None
    other = certify_isomorphism(twisted, sf_target, induction_map(twisted, sf_target, embed))
    if other is None:
        return None
    return into_sf.compose(other.inverse())


def restriction_certificate(poset: BnPoset, m: int,
                            twist: Optional[str] = None) -> Optional[IsomorphismCertificate]:
    """
    Res M^B_P -> the direct sum of M^B_{st_B(Q)} ⊗ M_{st(U)}, or of the
    theta- or chi-twists of both sides, by the restriction bijection.
    """
    functor = {None: lambda x: x, "theta": twist_theta, "chi": twist_chi}[twist]
    source, target, rows = restriction_map(poset, m, functor)
    return certify_isomorphism(source, target, rows)
