"""Text formats: .poset files, .labels files, and DOT export of Hasse diagrams."""
from __future__ import annotations

from pathlib import Path

from .errors import FormatError
from .poset import Poset
from .shellability import EdgeLabeling


def parse_poset(text: str) -> Poset:
    """Parse the .poset format.

    Line 1 holds the element count; every further non-empty line is either a
    cover pair "a b" or "label i <text>".  Lines starting with '#' are
    ignored.
    """
    n = None
    edges: list[tuple[int, int]] = []
    labels: dict[int, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if n is None:
            try:
                n = int(line)
            except ValueError:
                raise FormatError(f"line {lineno}: expected the element count, got {line!r}")
            if n < 1:
                raise FormatError(f"line {lineno}: element count must be positive")
            continue
        parts = line.split(None, 2)
        if parts[0] == "label":
            if len(parts) != 3:
                raise FormatError(f"line {lineno}: label lines read 'label i <text>'")
            try:
                idx = int(parts[1])
            except ValueError:
                raise FormatError(f"line {lineno}: bad label index {parts[1]!r}")
            if not 0 <= idx < n:
                raise FormatError(f"line {lineno}: label index {idx} out of range")
            labels[idx] = parts[2]
            continue
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected a cover pair 'a b', got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: bad cover pair {line!r}")
        if not (0 <= a < n and 0 <= b < n):
            raise FormatError(f"line {lineno}: cover ({a}, {b}) out of range")
        edges.append((a, b))
    if n is None:
        raise FormatError("empty input: missing element count")
    label_list = [labels.get(i, str(i)) for i in range(n)] if labels else None
    return Poset.from_covers(n, edges, labels=label_list)


def read_poset(path: str | Path) -> Poset:
    return parse_poset(Path(path).read_text(encoding="utf-8"))


def format_poset(p: Poset) -> str:
    lines = [str(p.n)]
    lines.extend(f"{a} {b}" for a, b in p.covers)
    if p.labels is not None:
        lines.extend(f"label {i} {lab}" for i, lab in enumerate(p.labels))
    return "\n".join(lines) + "\n"


def write_poset(p: Poset, path: str | Path) -> None:
    Path(path).write_text(format_poset(p), encoding="utf-8")


def parse_labels(text: str) -> EdgeLabeling:
    """Parse the .labels format: lines "a b v" or "a b v1,v2,...,vm"."""
    mapping: dict[tuple[int, int], tuple[int, ...]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 3:
            raise FormatError(f"line {lineno}: expected 'a b v[,v...]', got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
            value = tuple(int(v) for v in parts[2].split(","))
        except ValueError:
            raise FormatError(f"line {lineno}: bad labeled edge {line!r}")
        if (a, b) in mapping:
            raise FormatError(f"line {lineno}: duplicate edge ({a}, {b})")
        mapping[(a, b)] = value
    if not mapping:
        raise FormatError("empty labeling")
    widths = {len(v) for v in mapping.values()}
    if len(widths) != 1:
        raise FormatError(f"inconsistent label widths: {sorted(widths)}")
    return EdgeLabeling(mapping)


def read_labels(path: str | Path) -> EdgeLabeling:
    return parse_labels(Path(path).read_text(encoding="utf-8"))


def format_labels(labeling: EdgeLabeling) -> str:
    lines = [f"{a} {b} " + ",".join(str(v) for v in label)
             for (a, b), label in labeling.items()]
    return "\n".join(lines) + "\n"


def write_labels(labeling: EdgeLabeling, path: str | Path) -> None:
    Path(path).write_text(format_labels(labeling), encoding="utf-8")


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(p: Poset, labeling: EdgeLabeling | None = None) -> str:
    """DOT rendering of the Hasse diagram, one edge per cover, drawn upward."""
    lines = ["digraph poset {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i in range(p.n):
        lines.append(f"  {i} [label={_quote(p.label(i))}];")
    for a, b in p.covers:
        attr = ""
        if labeling is not None:
            label = labeling.mapping.get((a, b))
            if label is not None:
                text = str(label[0]) if len(label) == 1 else ",".join(map(str, label))
                attr = f" [label={_quote(text)}]"
        lines.append(f"  {a} -> {b}{attr};")
    lines.append("}")
    return "\n".join(lines) + "\n"
