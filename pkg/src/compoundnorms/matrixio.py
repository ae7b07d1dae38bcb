"""Matrix file format and complex literals.

A matrix file is a header line ``n m`` followed by n rows of m
whitespace-separated complex literals: ``a``, ``a+bi``, ``a-bi`` or ``bi``.
Parts may use scientific notation.  Numbers are written with 17 significant
digits so a write/read round trip is lossless.
"""

from __future__ import annotations

import math
import re
from pathlib import Path

import numpy as np

from .errors import ParseError

_NUM = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_LITERAL = re.compile(
    rf"""^\s*(?:
        (?P<re>[+-]?{_NUM})(?:\s*(?P<sign>[+-])\s*(?P<im>{_NUM})?\s*i)?
      | (?P<pure>[+-]?(?:{_NUM})?)\s*i
    )\s*$""",
    re.VERBOSE,
)
# one literal inside a row, allowing spaces around the inner sign
_SCAN = re.compile(
    rf"""[+-]?(?:{_NUM}(?:\s*[+-]\s*(?:{_NUM})?i)?|(?:{_NUM})?i)(?![\w.])""",
    re.VERBOSE,
)


def parse_complex(text: str) -> complex:
    """Parse one literal; raises ParseError on anything else."""
    m = _LITERAL.match(text)
    if m is None or not text.strip():
        raise ParseError(f"bad complex literal {text!r}")
    if m.group("re") is not None:
        real = float(m.group("re"))
        if m.group("sign") is None:
            imag = 0.0
        else:
            mag = float(m.group("im")) if m.group("im") else 1.0
            imag = mag if m.group("sign") == "+" else -mag
    else:
        pure = m.group("pure")
        real = 0.0
        imag = float(pure + "1") if pure in ("", "+", "-") else float(pure)
    z = complex(real, imag)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParseError(f"non-finite literal {text!r}")
    return z


def _fmt(x: float) -> str:
    return f"{x:.17g}"


def format_complex(z: complex) -> str:
    z = complex(z)
    re_, im = z.real, z.imag
    if im == 0.0:
        return _fmt(re_ if re_ != 0.0 else 0.0)
    if re_ == 0.0:
        return _fmt(im) + "i"
    sign = "-" if im < 0 else "+"
    return f"{_fmt(re_)}{sign}{_fmt(abs(im))}i"


def _split_row(line: str, m: int, lineno: int) -> list:
    tokens = line.split()
    if len(tokens) == m:
        return [parse_complex(t) for t in tokens]
    found = [t.group(0) for t in _SCAN.finditer(line)]
    if len(found) == m and not _SCAN.sub("", line).strip():
        return [parse_complex(t.replace(" ", "").replace("\t", "")) for t in found]
    raise ParseError(f"line {lineno}: expected {m} entries, got {len(tokens)}")


def parse_matrix(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ParseError("empty matrix file")
    header = lines[0].split()
    if len(header) != 2:
        raise ParseError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise ParseError(f"header must be two integers, got {lines[0]!r}") from None
    if n < 1 or m < 1:
        raise ParseError(f"dimensions must be positive, got {n} x {m}")
    body = lines[1:]
    if len(body) != n:
        raise ParseError(f"header declares {n} rows, found {len(body)}")
    rows = [_split_row(line, m, i + 2) for i, line in enumerate(body)]
    return np.array(rows, dtype=np.complex128)


def format_matrix(a) -> str:
    a = np.atleast_2d(np.asarray(a, dtype=np.complex128))
    out = [f"{a.shape[0]} {a.shape[1]}"]
    out += [" ".join(format_complex(z) for z in row) for row in a]
    return "\n".join(out) + "\n"


def read_matrix(path) -> np.ndarray:
    try:
        text = Path(path).read_text()
    except (OSError, UnicodeDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return parse_matrix(text)


def write_matrix(path, a) -> None:
    Path(path).write_text(format_matrix(a))
