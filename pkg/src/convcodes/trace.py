"""Access instrumentation and conversion traces.

Conversion routines never index initial codewords directly: they go through
:class:`SourceWord`, which logs every coordinate read or retained, and write
through :class:`TargetWord`, which logs every coordinate written. The trace is
assembled from those logs, so the reported costs are what the code did rather
than what it claims to do.
"""

from __future__ import annotations

from dataclasses import dataclass

from .codes import Codeword


class SourceWord:
    """Read-logging view of one initial codeword."""

    def __init__(self, word: Codeword):
        self._word = word
        self.accessed: set[int] = set()
        self.retained: dict[int, int] = {}  # initial coord -> final coord

    def read(self, pos: int) -> int:
        self.accessed.add(pos)
        return self._word.symbols[pos]

    def retain(self, pos: int, target: int) -> int:
        """Hand a symbol over unchanged; this is not a read."""
        self.retained[pos] = target
        return self._word.symbols[pos]

    def __getitem__(self, pos: int) -> int:
        return self.read(pos)


class TargetWord:
    """Write-logging buffer for the final codeword."""

    def __init__(self, n: int):
        self._symbols: list[int | None] = [None] * n
        self.kept: dict[int, tuple[int, int]] = {}  # final coord -> (initial index, coord)
        self.written: dict[int, list] = {}  # final coord -> provenance list

    def keep(self, pos: int, source: SourceWord, index: int, src_pos: int):
        self._symbols[pos] = source.retain(src_pos, pos)
        self.kept[pos] = (index, src_pos)

    def write(self, pos: int, value: int, provenance: list):
        self._symbols[pos] = value
        self.written[pos] = provenance

    def __getitem__(self, pos: int) -> int:
        value = self._symbols[pos]
        if value is None:
            raise LookupError(f"final coordinate {pos} read before it was produced")
        return value

    def symbols(self) -> list[int]:
        missing = [i for i, v in enumerate(self._symbols) if v is None]
        if missing:
            raise LookupError(f"final coordinates {missing} never produced")
        return list(self._symbols)


@dataclass
class ConversionTrace:
    """Which symbols stayed, which were read, which were written.

    ``remaining[i]`` maps coordinates of initial codeword ``i`` to the final
    coordinate they occupy; ``accessed[i]`` is the set of coordinates read from
    initial codeword ``i``; ``new_coords`` are the freshly written final
    coordinates, of which ``repaired`` were computed from other final symbols.
    """

    remaining: list
    accessed: list
    new_coords: list
    repaired: list
    provenance: dict
    initial_lengths: list

    @classmethod
    def from_logs(cls, sources, target: TargetWord, repaired=()):
        return cls(
            remaining=[dict(sorted(s.retained.items())) for s in sources],
            accessed=[sorted(s.accessed) for s in sources],
            new_coords=sorted(target.written),
            repaired=sorted(repaired),
            provenance={pos: list(src) for pos, src in sorted(target.written.items())},
            initial_lengths=[len(s._word) for s in sources],
        )

    @property
    def read_cost(self) -> int:
        return sum(len(a) for a in self.accessed)

    @property
    def write_cost(self) -> int:
        return len(self.new_coords)

    @property
    def total(self) -> int:
        return self.read_cost + self.write_cost

    def summary(self) -> str:
        return f"read={self.read_cost} write={self.write_cost} total={self.total}"

    def records(self, initial_points, final_points) -> list[dict]:
        """One record per symbol with its role and where its value came from.

        Initial coordinates are named ``c<i>@<point>`` (1-based ``i``), final
        ones ``d@<point>``.
        """
        out = []
        for i, n in enumerate(self.initial_lengths):
            pts = initial_points[i]
            for pos in range(n):
                name = f"c{i + 1}@{pts[pos]}"
                if pos in self.accessed[i]:
                    role = "accessed"
                elif pos in self.remaining[i]:
                    role = "remaining"
                else:
                    role = "untouched"
                target = self.remaining[i].get(pos)
                out.append({
                    "coord": name,
                    "role": role,
                    "source": None,
                    "target": None if target is None else f"d@{final_points[target]}",
                })
        kept = {}
        for i, rem in enumerate(self.remaining):
            for src, dst in rem.items():
                kept[dst] = f"c{i + 1}@{initial_points[i][src]}"
        for pos, point in enumerate(final_points):
            name = f"d@{point}"
            if pos in kept:
                out.append({"coord": name, "role": "remaining", "source": kept[pos], "target": None})
            else:
                src = []
                for entry in self.provenance.get(pos, []):
                    kind, idx, spos = entry
                    if kind == "initial":
                        src.append(f"c{idx + 1}@{initial_points[idx][spos]}")
                    else:
                        src.append(f"d@{final_points[spos]}")
                out.append({"coord": name, "role": "new", "source": src, "target": None})
        return out
