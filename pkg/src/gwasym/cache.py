"""Exact text persistence for count tables.

Caches are UTF-8 text: ``#``-prefixed header lines carrying ``version``,
``target``, ``genus`` and ``dmax``, followed by tab-separated rows of
exact values written as ``numerator/denominator``.  Plane-curve rows are
``d<TAB>n``; space-curve rows are ``d<TAB>p<TAB>n``.  Serialization is
canonical (rows sorted, no gaps), so parse(serialize(t)) reproduces the
table bit for bit.  CSV export appends the derived integer count column
``N = n * factorial`` for readability; the parser ignores trailing
columns, so exported files remain loadable.
"""

from __future__ import annotations

import os
import tempfile

from gmpy2 import mpq

from .errors import CacheFormatError, DomainError
from .recursions import CountTable

CACHE_VERSION = 1

__all__ = [
    "CACHE_VERSION",
    "serialize",
    "parse",
    "write_cache",
    "read_cache",
    "default_cache_dir",
    "cache_filename",
]


def default_cache_dir() -> str:
    """Cache directory: ``$GWASYM_CACHE_DIR`` or ``./.gwasym``."""
    return os.environ.get("GWASYM_CACHE_DIR", os.path.join(".", ".gwasym"))


def cache_filename(target: str, genus: int, d_max: int) -> str:
    return f"{target}_g{genus}_d{d_max}.txt"


def _fmt(v: mpq) -> str:
    return f"{v.numerator}/{v.denominator}"


def serialize(table: CountTable, with_counts: bool = False) -> str:
    """Canonical text form of a table; ``with_counts`` appends the integer
    ``N`` column (CSV export)."""
    if table.target not in ("p2", "p3"):
        raise DomainError(f"cannot serialize target {table.target!r}")
    lines = [
        "# gwasym cache",
        f"# version={CACHE_VERSION}",
        f"# target={table.target}",
        f"# genus={table.genus}",
        f"# dmax={table.d_max}",
    ]
    if table.target == "p3":
        for d in range(1, table.d_max + 1):
            for p in range(0, 2 * d + 1):
                row = f"{d}\t{p}\t{_fmt(table.n(d, p))}"
                if with_counts:
                    row += f"\t{table.N(d, p)}"
                lines.append(row)
    else:
        for d in range(1, table.d_max + 1):
            row = f"{d}\t{_fmt(table.n(d))}"
            if with_counts:
                row += f"\t{table.N(d)}"
            lines.append(row)
    return "\n".join(lines) + "\n"


def parse(text: str) -> CountTable:
    """Parse cache text back into a table; trailing row columns (e.g. the
    CSV count column) are ignored.  Raises :class:`CacheFormatError` on
    malformed input, header/row inconsistencies, gaps, or misordering."""
    header = {}
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if "=" in body:
                key, _, val = body.partition("=")
                header[key.strip()] = val.strip()
            continue
        rows.append((lineno, line.split("\t")))

    for key in ("version", "target", "genus", "dmax"):
        if key not in header:
            raise CacheFormatError(f"missing header field {key!r}")
    try:
        version = int(header["version"])
        genus = int(header["genus"])
        d_max = int(header["dmax"])
    except ValueError as exc:
        raise CacheFormatError(f"non-integer header field: {exc}") from None
    if version != CACHE_VERSION:
        raise CacheFormatError(f"unsupported cache version {version}")
    target = header["target"]
    if target not in ("p2", "p3"):
        raise CacheFormatError(f"unknown target {target!r}")
    if genus not in (0, 1) or (target == "p3" and genus != 0):
        raise CacheFormatError(f"unsupported target/genus {target}/{genus}")
    if d_max < 1:
        raise CacheFormatError(f"dmax must be >= 1, got {d_max}")

    ncols = 3 if target == "p3" else 2
    if target == "p3":
        expected = [(d, p) for d in range(1, d_max + 1)
                    for p in range(0, 2 * d + 1)]
    else:
        expected = [(d,) for d in range(1, d_max + 1)]
    if len(rows) != len(expected):
        raise CacheFormatError(
            f"expected {len(expected)} data rows, found {len(rows)}")

    values = {}
    for (lineno, parts), key in zip(rows, expected):
        if len(parts) < ncols:
            raise CacheFormatError(f"line {lineno}: too few columns")
        try:
            idx = tuple(int(p) for p in parts[:ncols - 1])
            val = mpq(parts[ncols - 1])
        except ValueError as exc:
            raise CacheFormatError(f"line {lineno}: {exc}") from None
        if idx != key:
            raise CacheFormatError(
                f"line {lineno}: expected index {key}, found {idx} "
                "(rows must be sorted with no gaps)")
        values[key if len(key) > 1 else key[0]] = val
    return CountTable(target, genus, d_max, values)


def write_cache(table: CountTable, path: str,
                with_counts: bool = False) -> None:
    """Atomic write: serialize to a temp file in the target directory,
    then rename over ``path``."""
    text = serialize(table, with_counts)
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_cache(path: str) -> CountTable:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CacheFormatError(f"cannot read cache {path}: {exc}") from None
    return parse(text)
