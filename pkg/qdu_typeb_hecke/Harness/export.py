"""
DOT and tabular renderings of posets, modules and reports.

To draw a DOT file run ``dot -Tpng output.dot > output.png``.
"""

from __future__ import annotations

import json
import logging
from typing import Iterable, Mapping

import pandas as pd

from ..Coxeter.compositions import CompositionB
from ..Hecke.hecke_module import HeckeModule, HeckeModuleException
from ..Posets.bn_poset import BnPoset, linear_extensions_B

log = logging.getLogger(__name__)


def _node(label: object) -> str:
    return '"{}"'.format(label)


def hasse_dot(poset: BnPoset) -> str:
    """Hasse diagram drawn upwards, nodes declared in increasing order from -n to n."""
    lines = ["digraph {", "graph [rankdir=BT];", "node [shape=plaintext];"]
    append = lines.append
    for x in poset.elements:
        append(_node(x))
    for x, y in poset.covers():
        append(f"{_node(x)} -> {_node(y)}")
    append("}")
    return "\n".join(lines)


def quiver_dot(module: HeckeModule) -> str:
    """
    The action of the generators: an edge j -> k labelled by the generator
    for each nonzero coefficient, a loop for an eigenvector of eigenvalue -1.

    Raises:
        HeckeModuleException: for an empty module.
    """
    if not module.dim:
        raise HeckeModuleException("cannot draw an empty module")

    def name(i: int) -> str:
        return f"π̄{i}" if module.variant != "sf" else f"(π{i}-1)"

    lines = ["digraph {", "graph [rankdir=BT];", "node [shape=box];"]
    append = lines.append
    for label in module.basis:
        append(_node(label))
    for i, rows in module.actions.items():
        for j, row in enumerate(rows):
            source = _node(module.basis[j])
            for k, c in row:
                text = name(i) if c == 1 else f"{c}·{name(i)}"
                if k == j and c == -1:
                    append(f'{source} -> {source} [label="{name(i)}" style=dashed]')
                else:
                    append(f'{source} -> {_node(module.basis[k])} [label="{text}"]')
    append("}")
    return "\n".join(lines)


def extensions_frame(poset: BnPoset) -> pd.DataFrame:
    """One row per type-B linear extension, in lexicographic order."""
    rows = []
    for gamma in linear_extensions_B(poset):
        descents = sorted(gamma.right_descents())
        rows.append({
            "window": str(gamma),
            "descents": "{" + ",".join(map(str, descents)) + "}",
            "composition": str(CompositionB.from_set(descents, poset.n)),
        })
    return pd.DataFrame(rows, columns=["window", "descents", "composition"])


def report_frame(rows: Iterable[Mapping]) -> pd.DataFrame:
    return pd.DataFrame(list(rows), columns=["case", "status", "details"])


def render(frame: pd.DataFrame, output_format: str) -> str:
    if output_format == "json":
        return frame.to_json(orient="records", force_ascii=False)
    if frame.empty:
        return "(empty)"
    if "details" in frame.columns:
        frame = frame.assign(details=[json.dumps(d, sort_keys=True, default=str)
                                      for d in frame["details"]])
    return frame.to_string(index=False)
