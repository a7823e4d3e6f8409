"""
Right modules over the 0-Hecke algebras H_n(0) (type A) and H^B_n(0).

A module is a labelled basis together with one sparse integer matrix per
generator, stored row by row: ``e_j · g_i = sum(c * e_k for k, c in rows[i][j])``.
With ``A_i`` the dense matrix of generator ``i`` every stored module
satisfies ``A_i @ A_i == -A_i`` and the braid relations. For the usual
``bar`` variant ``A_i`` is the action of pi-bar_i; for ``sf`` it is the
action of pi_i minus the identity, which satisfies the same relations.
"""

from __future__ import annotations

import json
import logging
from functools import cached_property
from pathlib import Path
from typing import Callable, Hashable, Iterable, Mapping, Optional, Sequence, Union

import numpy as np

from ..Coxeter.signed_permutation import Permutation, SignedPermutation

log = logging.getLogger(__name__)

Row = tuple[tuple[int, int], ...]
RowLike = Union[Row, Mapping[int, int]]
VARIANTS = ("bar", "sf", None)


class HeckeRelationError(RuntimeError):
    """A defining relation of the 0-Hecke algebra fails on a module."""

    def __init__(self, message: str, relation: str, generators: tuple[int, ...]) -> None:
        super().__init__(message)
        self.relation = relation
        self.generators = generators


class HeckeModuleException(ValueError):
    pass


def generators_of(coxeter_type: str, rank: int) -> list[int]:
    """Generator indices: 0..n-1 in type B, 1..n-1 in type A."""
    if coxeter_type == "B":
        return list(range(rank))
    if coxeter_type == "A":
        return list(range(1, rank))
    raise HeckeModuleException(f"unknown Coxeter type {coxeter_type!r}")


def coxeter_m(coxeter_type: str, i: int, j: int) -> int:
    """Order of s_i s_j."""
    if i == j:
        return 1
    if coxeter_type == "B" and {i, j} == {0, 1}:
        return 4
    return 3 if abs(i - j) == 1 else 2


def _normalize_row(row: RowLike) -> Row:
    items = row.items() if isinstance(row, Mapping) else row
    total: dict[int, int] = {}
    for k, c in items:
        total[int(k)] = total.get(int(k), 0) + int(c)
    return tuple(sorted((k, c) for k, c in total.items() if c != 0))


def _alternating(first: np.ndarray, second: np.ndarray, length: int) -> np.ndarray:
    out = np.eye(len(first), dtype=np.int64)
    for step in range(length):
        out = out @ (first if step % 2 == 0 else second)
    return out


class HeckeModule:
    """
    A finite-dimensional right module over H_n(0) or H^B_n(0).

    Args:
        coxeter_type: 'A' or 'B'
        rank: n
        basis: labels of the basis vectors, in order
        actions: generator index -> one row per basis vector. A module may
            carry a subset of the generators, e.g. after restriction to a
            parabolic subalgebra.
        variant: 'bar' or 'sf' for modules built from ascent-compatible
            sets, None otherwise
        poset: the poset a poset module was built from
        name: free text used in reports
        check: verify the defining relations
    """

    def __init__(self,
                 coxeter_type: str,
                 rank: int,
                 basis: Sequence[Hashable],
                 actions: Mapping[int, Sequence[RowLike]],
                 variant: Optional[str] = None,
                 poset: object = None,
                 name: str = "",
                 check: bool = True) -> None:
        allowed = generators_of(coxeter_type, rank)
        if variant not in VARIANTS:
            raise HeckeModuleException(f"unknown variant {variant!r}")
        self.coxeter_type = coxeter_type
        self.rank = rank
        self.basis: tuple[Hashable, ...] = tuple(basis)
        self.variant = variant
        self.poset = poset
        self.name = name
        dim = len(self.basis)
        self.actions: dict[int, tuple[Row, ...]] = {}
        for i, rows in sorted(actions.items()):
            if i not in allowed:
                raise HeckeModuleException(
                    f"{i} is not a generator of the type-{coxeter_type} algebra of rank {rank}"
                )
            if len(rows) != dim:
                raise HeckeModuleException(
                    f"generator {i} has {len(rows)} rows for a basis of size {dim}"
                )
            normalized = tuple(_normalize_row(row) for row in rows)
            for row in normalized:
                if any(not 0 <= k < dim for k, _ in row):
                    raise HeckeModuleException(f"generator {i} maps outside the basis")
            self.actions[i] = normalized
        self._index = {label: j for j, label in enumerate(self.basis)}
        if len(self._index) != dim:
            raise HeckeModuleException("basis labels must be distinct")
        if check:
            self.check_relations()

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def generators(self) -> list[int]:
        return list(self.actions)

    def __len__(self) -> int:
        return self.dim

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return (f"<HeckeModule{label}: type {self.coxeter_type}, rank {self.rank}, "
                f"dim {self.dim}, generators {self.generators}>")

    def index(self, label: Hashable) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise HeckeModuleException(f"{label} is not a basis label") from None

    def row(self, i: int, j: int) -> dict[int, int]:
        return dict(self.actions[i][j])

    def matrix(self, i: int) -> np.ndarray:
        """Dense integer matrix of generator i, rows indexed by the source."""
        if i not in self.actions:
            raise HeckeModuleException(f"generator {i} does not act on this module")
        out = np.zeros((self.dim, self.dim), dtype=np.int64)
        for j, row in enumerate(self.actions[i]):
            for k, c in row:
                out[j, k] += c
        return out

    @cached_property
    def _matrices(self) -> dict[int, np.ndarray]:
        return {i: self.matrix(i) for i in self.actions}

    def act(self, vector: Mapping[int, int], i: int) -> dict[int, int]:
        """A sparse vector times generator i."""
        out: dict[int, int] = {}
        for j, c in vector.items():
            for k, d in self.actions[i][j]:
                out[k] = out.get(k, 0) + c * d
        return {k: c for k, c in out.items() if c != 0}

    def act_word(self, vector: Mapping[int, int], word: Iterable[int]) -> dict[int, int]:
        out = dict(vector)
        for i in word:
            out = self.act(out, i)
        return out

    def check_relations(self) -> None:
        """
        Raises:
            HeckeRelationError: naming the first failing relation.
        """
        mats = self._matrices
        for i, a in mats.items():
            if not np.array_equal(a @ a, -a):
                raise HeckeRelationError(
                    f"{self.name or 'module'}: generator {i} does not square to its negative",
                    "quadratic", (i,),
                )
        for i in mats:
            for j in mats:
                if j <= i:
                    continue
                m = coxeter_m(self.coxeter_type, i, j)
                if not np.array_equal(_alternating(mats[i], mats[j], m),
                                      _alternating(mats[j], mats[i], m)):
                    kind = "commutation" if m == 2 else f"braid of length {m}"
                    raise HeckeRelationError(
                        f"{self.name or 'module'}: {kind} fails for generators {i} and {j}",
                        kind, (i, j),
                    )
        log.debug(f"relations hold on {self!r}")

    def restricted(self, m: int) -> "HeckeModule":
        """Forget generator m, leaving a module over the parabolic subalgebra."""
        if m not in self.actions:
            raise HeckeModuleException(f"generator {m} does not act on this module")
        actions = {i: rows for i, rows in self.actions.items() if i != m}
        return HeckeModule(self.coxeter_type, self.rank, self.basis, actions,
                           self.variant, self.poset, f"{self.name}|{m}", check=False)

    def relabel(self, relabel: Callable[[Hashable], Hashable], name: Optional[str] = None) -> "HeckeModule":
        return HeckeModule(self.coxeter_type, self.rank, [relabel(b) for b in self.basis],
                           self.actions, self.variant, self.poset,
                           self.name if name is None else name, check=False)

    def is_submodule(self, labels: Iterable[Hashable]) -> bool:
        """Whether the span of the given basis vectors is stable."""
        chosen = {self.index(label) for label in labels}
        return all(k in chosen
                   for rows in self.actions.values()
                   for j in chosen
                   for k, _ in rows[j])

    def to_dict(self) -> dict:
        if not self.dim:
            raise HeckeModuleException("cannot dump an empty module")
        return {
            "type": self.coxeter_type,
            "rank": self.rank,
            "variant": self.variant,
            "name": self.name,
            "basis": [str(b) for b in self.basis],
            "actions": {str(i): [[j, k, c] for j, row in enumerate(rows) for k, c in row]
                        for i, rows in self.actions.items()},
        }

    def to_json(self, path: Optional[Union[str, Path]] = None) -> str:
        text = json.dumps(self.to_dict(), indent=2)
        if path is not None:
            Path(path).write_text(text + "\n")
        return text

    @classmethod
    def from_dict(cls, data: Mapping) -> "HeckeModule":
        try:
            coxeter_type, rank = data["type"], int(data["rank"])
            labels = [_parse_label(coxeter_type, text) for text in data["basis"]]
            actions: dict[int, list[dict[int, int]]] = {}
            for key, triples in data["actions"].items():
                rows: list[dict[int, int]] = [{} for _ in labels]
                for j, k, c in triples:
                    rows[j][k] = rows[j].get(k, 0) + c
                actions[int(key)] = rows
        except (KeyError, TypeError, ValueError, IndexError) as err:
            raise HeckeModuleException(f"malformed module dump: {err}") from err
        return cls(coxeter_type, rank, labels, actions, data.get("variant"),
                   name=data.get("name", ""))

    @classmethod
    def from_json(cls, text: str) -> "HeckeModule":
        return cls.from_dict(json.loads(text))


def _parse_label(coxeter_type: str, text: str) -> Hashable:
    try:
        if coxeter_type == "B" and text.startswith("["):
            return SignedPermutation.parse(text)
        if coxeter_type == "A" and text.isdigit():
            return Permutation.parse(text)
    except ValueError:
        pass
    return text


def tensor(left: HeckeModule, right: HeckeModule) -> HeckeModule:
    """
    The outer tensor product of a type-B module of rank m and a type-A
    module of rank n, a module over H^B_m(0) ⊗ H_n(0) sitting inside
    H^B_{m+n}(0) with generator j of the right factor renumbered m + j.
    """
    if left.coxeter_type != "B" or right.coxeter_type != "A":
        raise HeckeModuleException("expected a type-B module tensored with a type-A module")
    m, n = left.rank, right.rank
    basis = [(a, b) for a in left.basis for b in right.basis]
    width = right.dim
    actions: dict[int, list[Row]] = {}
    for i, rows in left.actions.items():
        actions[i] = [tuple((k * width + jb, c) for k, c in rows[ja])
                      for ja in range(left.dim) for jb in range(width)]
    for i, rows in right.actions.items():
        actions[m + i] = [tuple((ja * width + k, c) for k, c in rows[jb])
                          for ja in range(left.dim) for jb in range(width)]
    return HeckeModule("B", m + n, basis, actions,
                       name=f"{left.name} ⊗ {right.name}", check=False)


def direct_sum(*modules: HeckeModule) -> HeckeModule:
    """Direct sum; the basis label of summand k is (k, label)."""
    if not modules:
        raise HeckeModuleException("direct sum of no modules")
    first = modules[0]
    for other in modules[1:]:
        if (other.coxeter_type, other.rank, other.generators) != \
                (first.coxeter_type, first.rank, first.generators):
            raise HeckeModuleException("summands act through different algebras")
    basis: list[Hashable] = []
    actions: dict[int, list[Row]] = {i: [] for i in first.generators}
    offset = 0
    for k, module in enumerate(modules):
        basis.extend((k, b) for b in module.basis)
        for i in first.generators:
            actions[i].extend(tuple((t + offset, c) for t, c in row)
                              for row in module.actions[i])
        offset += module.dim
    return HeckeModule(first.coxeter_type, first.rank, basis, actions,
                       name=" ⊕ ".join(m.name for m in modules), check=False)
