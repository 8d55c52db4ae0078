"""Line-oriented text format for explicit regions.

    t U <x> <y>                              an up triangle
    t D <x> <y>                              a down triangle
    w <o1> <x1> <y1> <o2> <x2> <y2> <p>/<q>  weight of the lozenge on two triangles
    # ...                                    comment

Lines may come in any order.  A triangle listed twice is an error.
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path

from .lattice import Orient, Region, TriRef, lozenge, tri_key


class RegionFileError(ValueError):
    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


_ORIENT = {"U": Orient.UP, "D": Orient.DOWN}


def _tri(o: str, x: str, y: str, line: int) -> TriRef:
    if o not in _ORIENT:
        raise RegionFileError(f"orientation must be U or D, got {o!r}", line)
    try:
        return TriRef(int(x), int(y), _ORIENT[o])
    except ValueError:
        raise RegionFileError(f"bad coordinates {x!r} {y!r}", line) from None


def _weight(text: str, line: int) -> Fraction:
    num, slash, den = text.partition("/")
    try:
        w = Fraction(int(num), int(den)) if slash else Fraction(int(num))
    except (ValueError, ZeroDivisionError):
        raise RegionFileError(f"weight must be p/q, got {text!r}", line) from None
    return w


def parse_region(text: str) -> Region:
    tris: set[TriRef] = set()
    weights = {}
    pending = []
    for no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].split()
        if not body:
            continue
        tag, rest = body[0], body[1:]
        if tag == "t" and len(rest) == 3:
            t = _tri(*rest, no)
            if t in tris:
                raise RegionFileError(f"triangle {t!r} listed twice", no)
            tris.add(t)
        elif tag == "w" and len(rest) == 7:
            s, t = _tri(*rest[0:3], no), _tri(*rest[3:6], no)
            pending.append((s, t, _weight(rest[6], no), no))
        else:
            raise RegionFileError(f"cannot read {raw.strip()!r}", no)
    for s, t, w, no in pending:
        try:
            loz = lozenge(s, t)
        except ValueError as exc:
            raise RegionFileError(str(exc), no) from None
        if loz in weights:
            raise RegionFileError(f"weight of {loz!r} given twice", no)
        weights[loz] = w
    try:
        return Region(tris, weights)
    except ValueError as exc:
        raise RegionFileError(str(exc)) from None


def format_region(r: Region) -> str:
    lines = [f"t {t.orient.letter} {t.x} {t.y}" for t in r.sorted_triangles()]
    for loz, w in sorted(r.weights.items(), key=lambda kv: (tri_key(kv[0].up), tri_key(kv[0].down))):
        u, d = loz.up, loz.down
        lines.append(f"w U {u.x} {u.y} D {d.x} {d.y} {w.numerator}/{w.denominator}")
    return "\n".join(lines) + "\n"


def load_region(path: str | Path) -> Region:
    return parse_region(Path(path).read_text(encoding="utf-8"))


def save_region(r: Region, path: str | Path) -> None:
    Path(path).write_text(format_region(r), encoding="utf-8")
