"""File formats for grid objects.

Wave/symbol files carry one header line

    # qha-grid N=<int> h=<float> kind=<wave|symbol>

followed by N rows: a wave row is ``re,im``; a symbol row holds N comma-
separated ``re:im`` pairs.  Values are printed with 17 significant digits;
the round trip is value-faithful though not guaranteed bit-exact.

Bare numeric CSV (no header) is also readable as a plain sequence, used by
the norm calculator with counting measure.
"""

from __future__ import annotations

import re
from pathlib import Path

import numpy as np

from .phasegrid import PhaseSymbol, WaveFunction, make_grid

__all__ = ["save_wave", "save_symbol", "load_grid_object", "load_sequence"]

_HEADER_RE = re.compile(
    r"^#\s*qha-grid\s+N=(?P<N>\d+)\s+h=(?P<h>[^\s]+)\s+kind=(?P<kind>wave|symbol)\s*$"
)


def _fmt(x: float) -> str:
    return format(x, ".17g")


def save_wave(f: WaveFunction, path: str | Path) -> None:
    lines = [f"# qha-grid N={f.grid.N} h={_fmt(f.grid.h)} kind=wave"]
    lines += [f"{_fmt(v.real)},{_fmt(v.imag)}" for v in f.values]
    Path(path).write_text("\n".join(lines) + "\n")


def save_symbol(a: PhaseSymbol, path: str | Path) -> None:
    lines = [f"# qha-grid N={a.grid.N} h={_fmt(a.grid.h)} kind=symbol"]
    for row in a.values:
        lines.append(",".join(f"{_fmt(v.real)}:{_fmt(v.imag)}" for v in row))
    Path(path).write_text("\n".join(lines) + "\n")


def load_grid_object(path: str | Path) -> WaveFunction | PhaseSymbol:
    text = Path(path).read_text().strip().splitlines()
    if not text:
        raise ValueError(f"{path}: empty file")
    m = _HEADER_RE.match(text[0])
    if m is None:
        raise ValueError(f"{path}: missing qha-grid header")
    N = int(m.group("N"))
    grid = make_grid(N)
    kind = m.group("kind")
    body = [ln for ln in text[1:] if ln.strip()]
    if len(body) != N:
        raise ValueError(f"{path}: expected {N} data rows, found {len(body)}")
    if kind == "wave":
        vals = np.array(
            [complex(float(a), float(b)) for a, b in (ln.split(",") for ln in body)]
        )
        return WaveFunction(grid=grid, values=vals)
    rows = []
    for ln in body:
        cells = ln.split(",")
        if len(cells) != N:
            raise ValueError(f"{path}: symbol rows must hold {N} re:im pairs")
        rows.append([complex(float(p), float(q)) for p, q in (c.split(":") for c in cells)])
    return PhaseSymbol(grid=grid, values=np.array(rows))


def load_sequence(path: str | Path) -> np.ndarray:
    """Headerless CSV of ``re[,im]`` rows as a complex sequence."""
    vals = []
    for ln in Path(path).read_text().strip().splitlines():
        ln = ln.strip()
        if not ln or ln.startswith("#"):
            continue
        parts = ln.split(",")
        if len(parts) == 1:
            vals.append(complex(float(parts[0]), 0.0))
        elif len(parts) == 2:
            vals.append(complex(float(parts[0]), float(parts[1])))
        else:
            raise ValueError(f"{path}: sequence rows must be 're' or 're,im'")
    if not vals:
        raise ValueError(f"{path}: no data")
    return np.array(vals)
