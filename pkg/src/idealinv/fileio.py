"""Ideal and lattice file formats, JSON reports, and the power-sequence
cache.

Ideal files:

    ring x y z          # ordered variable list, first
    ideal J             # one block per named ideal
      x^2, x*y
      y^2               # commas or newlines separate monomials
    end
    expect J regularity 2   # optional metadata for golden tests

Lattice files:

    rank 3
    gram
    0 1 1
    1 0 1
    1 1 0
    end
    ample h 1 1 0
    class H 1 2 0
    class C 1 1 1

The cache holds one JSON document per ideal hash; writes merge by power
index, reject conflicting values, and replace the file atomically.
"""

from __future__ import annotations

import hashlib
import json
import os
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .core import MonomialIdeal, Ring
from .surface import DivisorClass, NSLattice


class ParseError(Exception):
    """Parse failure with 1-based line and column."""

    def __init__(self, message, line, column=1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class CacheIntegrityError(Exception):
    """Conflicting cached values for the same power index."""


# ---------------------------------------------------------------------------
# ideal documents


@dataclass(frozen=True, eq=False)
class IdealDocument:
    ring: Ring
    ideals: dict = field(repr=False)
    order: tuple = ()
    metadata: dict = field(default_factory=dict, repr=False)

    def __eq__(self, other):
        return (isinstance(other, IdealDocument)
                and self.ring == other.ring
                and self.ideals == other.ideals
                and self.order == other.order
                and self.metadata == other.metadata)


def _strip_comment(line):
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def parse_ideal_document(text):
    lines = text.splitlines()
    ring = None
    ideals = {}
    order = []
    metadata = {}
    current = None  # (name, monomial list)
    for lineno, raw in enumerate(lines, start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        tokens = line.split()
        if ring is None:
            if tokens[0] != "ring":
                raise ParseError("expected a 'ring' declaration first",
                                 lineno, raw.index(tokens[0]) + 1)
            if len(tokens) < 2:
                raise ParseError("ring needs at least one variable", lineno)
            try:
                ring = Ring(tuple(tokens[1:]))
            except ValueError as exc:
                raise ParseError(str(exc), lineno) from exc
            continue
        if current is not None:
            if tokens[0] == "end" and len(tokens) == 1:
                name, gens = current
                ideals[name] = MonomialIdeal(ring, gens)
                order.append(name)
                current = None
                continue
            for piece in line.split(","):
                piece = piece.strip()
                if not piece:
                    continue
                try:
                    current[1].append(ring.parse_monomial(piece))
                except ValueError as exc:
                    column = raw.find(piece) + 1
                    raise ParseError(str(exc), lineno, column) from exc
            continue
        if tokens[0] == "ideal":
            if len(tokens) != 2:
                raise ParseError("ideal blocks are 'ideal <name>'", lineno)
            name = tokens[1]
            if name in ideals:
                raise ParseError(f"duplicate ideal name {name!r}", lineno)
            current = (name, [])
            continue
        if tokens[0] == "expect":
            if len(tokens) < 4:
                raise ParseError("metadata lines are "
                                 "'expect <ideal> <key> <value>'", lineno)
            metadata.setdefault(tokens[1], {})[tokens[2]] = \
                " ".join(tokens[3:])
            continue
        raise ParseError(f"unexpected statement {tokens[0]!r}", lineno,
                         raw.find(tokens[0]) + 1)
    if ring is None:
        raise ParseError("empty document: no ring declaration", max(len(lines), 1))
    if current is not None:
        raise ParseError(f"ideal {current[0]!r} not closed with 'end'",
                         len(lines))
    return IdealDocument(ring, ideals, tuple(order), metadata)


def format_ideal_document(doc):
    out = ["ring " + " ".join(doc.ring.variables)]
    for name in doc.order:
        out.append(f"ideal {name}")
        gens = doc.ideals[name].gens_strings()
        if gens:
            out.append("  " + ", ".join(gens))
        out.append("end")
    for name in sorted(doc.metadata):
        for key in sorted(doc.metadata[name]):
            out.append(f"expect {name} {key} {doc.metadata[name][key]}")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# lattice documents


def parse_lattice_document(text):
    """Returns (NSLattice, {name: DivisorClass})."""
    lines = text.splitlines()
    rank = None
    gram = None
    ample = None
    classes = {}
    in_gram = False
    gram_rows = []
    for lineno, raw in enumerate(lines, start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        tokens = line.split()
        if in_gram:
            if tokens[0] == "end":
                if len(gram_rows) != rank:
                    raise ParseError(f"gram matrix needs {rank} rows", lineno)
                gram = tuple(gram_rows)
                in_gram = False
                continue
            try:
                row = tuple(int(t) for t in tokens)
            except ValueError as exc:
                raise ParseError("gram rows must be integers", lineno) from exc
            if len(row) != rank:
                raise ParseError(f"gram rows need {rank} entries", lineno)
            gram_rows.append(row)
            continue
        if tokens[0] == "rank":
            if rank is not None:
                raise ParseError("duplicate rank declaration", lineno)
            if len(tokens) != 2 or not tokens[1].isdigit():
                raise ParseError("rank takes one positive integer", lineno)
            rank = int(tokens[1])
            continue
        if tokens[0] == "gram":
            if rank is None:
                raise ParseError("rank must come before gram", lineno)
            in_gram = True
            continue
        if tokens[0] in ("ample", "class"):
            if rank is None:
                raise ParseError("rank must come first", lineno)
            if len(tokens) != rank + 2:
                raise ParseError(
                    f"{tokens[0]} lines are '{tokens[0]} <name> "
                    f"<{rank} rational entries>'", lineno)
            try:
                vec = tuple(Fraction(t) for t in tokens[2:])
            except ValueError as exc:
                raise ParseError("entries must be rationals", lineno) from exc
            if tokens[0] == "ample":
                ample = vec
                classes[tokens[1]] = DivisorClass(vec)
            else:
                classes[tokens[1]] = DivisorClass(vec)
            continue
        raise ParseError(f"unexpected statement {tokens[0]!r}", lineno)
    if rank is None or gram is None:
        raise ParseError("lattice documents need rank and gram", len(lines) or 1)
    if ample is None:
        raise ParseError("lattice documents need an ample reference class",
                         len(lines) or 1)
    try:
        lattice = NSLattice(gram, ample)
    except ValueError as exc:
        raise ParseError(str(exc), len(lines) or 1) from exc
    return lattice, classes


# ---------------------------------------------------------------------------
# power-sequence cache


def ideal_hash(ideal):
    return hashlib.sha256(ideal.canonical_text().encode()).hexdigest()


def _cache_file(cache_dir, ideal):
    return os.path.join(cache_dir, ideal_hash(ideal) + ".json")


def read_power_cache(cache_dir, ideal):
    """Entries {p: PowerEntry} recorded for this ideal; empty when absent."""
    from .sbracket import PowerEntry
    path = _cache_file(cache_dir, ideal)
    if not os.path.exists(path):
        return {}
    with open(path, encoding="utf-8") as handle:
        doc = json.load(handle)
    if (doc.get("ring") != list(ideal.ring.variables)
            or doc.get("generators") != ideal.gens_strings()):
        raise CacheIntegrityError(
            f"cache file {path} does not describe this ideal")
    out = {}
    for key, entry in doc.get("entries", {}).items():
        out[int(key)] = PowerEntry(int(entry["d"]), int(entry["reg"]),
                                   float(entry.get("computed_at", 0.0)))
    return out


def write_power_cache(cache_dir, ideal, entries):
    """Merge entries into the cache document and atomically replace it.

    Conflicting (d, reg) values for the same power abort with both values
    shown; existing entries win timestamps.
    """
    os.makedirs(cache_dir, exist_ok=True)
    merged = read_power_cache(cache_dir, ideal)
    for p, entry in entries.items():
        old = merged.get(p)
        if old is not None and (old.d, old.reg) != (entry.d, entry.reg):
            raise CacheIntegrityError(
                f"cache conflict at p={p}: stored (d={old.d}, reg={old.reg}) "
                f"vs new (d={entry.d}, reg={entry.reg})")
        if old is None:
            merged[p] = entry
    doc = {
        "ring": list(ideal.ring.variables),
        "generators": ideal.gens_strings(),
        "entries": {str(p): {"d": e.d, "reg": e.reg,
                             "computed_at": e.computed_at}
                    for p, e in sorted(merged.items())},
    }
    path = _cache_file(cache_dir, ideal)
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as handle:
        json.dump(doc, handle, indent=1, sort_keys=True)
    os.replace(tmp, path)
    return merged


# ---------------------------------------------------------------------------
# reports


def format_rational(x):
    """Exact string plus a 6-place decimal rendering."""
    x = Fraction(x)
    return {"exact": str(x), "decimal": f"{x.numerator / x.denominator:.6f}"}


def format_algebraic(value):
    """Rendering for quadratic irrationals a + b*sqrt(d)."""
    return {"exact": repr(value), "decimal": f"{float(value):.6f}",
            "irrational": not value.is_rational}


def build_report(command, inputs, results, started):
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "timings": {"seconds": round(time.perf_counter() - started, 6)},
        "versions": {"package": _package_version(),
                     "python": sys.version.split()[0]},
    }


def _package_version():
    from . import __version__
    return __version__
