"""
Settings of one command-line run, held as validated qcodes parameters.
"""

from __future__ import annotations

import logging
from typing import Any, Optional

from qcodes import ManualParameter
from qcodes.validators import Enum, Ints, MultiType, Strings

log = logging.getLogger(__name__)

COMMANDS = ("extensions", "kbp", "interval", "check", "export")
SUITES = ("relations", "partition", "grothendieck", "induction", "restriction",
          "twists", "distinguished", "regular-interval", "wbim")


class RunConfig:
    """
    Validated settings; assigning an out-of-range value raises ValueError.

    Args:
        command: one of ``COMMANDS``
        rank_cap: largest rank a check suite visits
        trunc: truncation bound V for the P-partition oracle, None for n+1
        seed: seed of the random poset samples
        samples: number of sampled posets per rank
        output_format: 'text', 'json' or 'dot'
        basis: 'fundamental' or 'monomial' output of ``kbp``
        out: output path, None for stdout
    """

    def __init__(self,
                 command: str = "check",
                 rank_cap: int = 4,
                 trunc: Optional[int] = None,
                 seed: int = 0,
                 samples: int = 20,
                 output_format: str = "text",
                 basis: str = "fundamental",
                 out: Optional[str] = None) -> None:

        self.command = ManualParameter("command",
                                       initial_value=command,
                                       vals=Enum(*COMMANDS),
                                       docstring="Command to run")
        self.rank_cap = ManualParameter("rank_cap",
                                        initial_value=rank_cap,
                                        vals=Ints(1, 6),
                                        docstring="Largest rank visited by the checks")
        self.trunc = ManualParameter("trunc",
                                     initial_value=trunc,
                                     vals=MultiType(Ints(1, 16), Enum(None)),
                                     docstring="Largest variable index of the oracle, None for n+1")
        self.seed = ManualParameter("seed",
                                    initial_value=seed,
                                    vals=Ints(0),
                                    docstring="Seed of the random samples")
        self.samples = ManualParameter("samples",
                                       initial_value=samples,
                                       vals=Ints(1),
                                       docstring="Sampled posets per rank")
        self.output_format = ManualParameter("output_format",
                                             initial_value=output_format,
                                             vals=Enum("text", "json", "dot"),
                                             docstring="Report format")
        self.basis = ManualParameter("basis",
                                     initial_value=basis,
                                     vals=Enum("fundamental", "monomial"),
                                     docstring="Output basis of K^B_P")
        self.out = ManualParameter("out",
                                   initial_value=out,
                                   vals=MultiType(Strings(), Enum(None)),
                                   docstring="Output path, None for stdout")

    @property
    def parameters(self) -> list[ManualParameter]:
        return [self.command, self.rank_cap, self.trunc, self.seed, self.samples,
                self.output_format, self.basis, self.out]

    def truncation(self, n: int) -> int:
        """V for rank n."""
        value = self.trunc()
        return n + 1 if value is None else value

    def snapshot(self) -> dict[str, Any]:
        return {p.name: p() for p in self.parameters}
