#!/usr/bin/env python3
"""Draw a few standard regions and one tiling of each into a directory."""

import sys
from pathlib import Path

from lozenge.expr import region_from_text
from lozenge.oracle import enumerate_tilings
from lozenge.svg import render_svg

EXAMPLES = {
    "hexagon": "hex(6,4,5)",
    "dented-hexagon": "dhex(4,3,3,4;[3,5];[3,5])",
    "half-hexagon": "V(2,3;[3,5])",
    "weighted-half": "VplusBar(2,3;[3,5])",
    "tube": "tube(6,2)",
}


def main(out: str = "figures") -> int:
    root = Path(out)
    root.mkdir(parents=True, exist_ok=True)
    for name, text in EXAMPLES.items():
        r = region_from_text(text)
        (root / f"{name}.svg").write_text(render_svg(r), encoding="utf-8")
        first = next(iter(enumerate_tilings(r, limit=max(len(r), 1))), None)
        if first is not None:
            (root / f"{name}-tiling.svg").write_text(render_svg(r, first.lozenges), encoding="utf-8")
        print(f"{name}: {text} -> {root / name}.svg")
    return 0


if __name__ == "__main__":
    sys.exit(main(*sys.argv[1:]))
