"""
scripts/02_render_figures.py
Level-set polylines for the two reference pictures, written as CSV under
data/figures/: Barrlund p = 2 circles about 0.3 in the unit disk, and the
ball-inclusion configuration a = 0.5, r = 0.2.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent.parent))

from src.barrlund.dispatcher import b
from src.barrlund.exponent import PExponent
from src.cli.levelset import LevelSetRequest, level_polylines, write_csv
from src.geometry.domains import UnitDisk
from src.utils.logger import get_logger
from src.validation.balls import inclusion_radius

log = get_logger("render_figures")

DISK = UnitDisk()


def render(name: str, req: LevelSetRequest, out_dir: Path) -> None:
    path = out_dir / f"{name}.csv"
    polylines = level_polylines(req)
    with open(path, "w", newline="", encoding="utf-8") as f:
        write_csv(polylines, f)
    log.info(f"{name}: {len(polylines)} polylines → {path}")


def main():
    parser = argparse.ArgumentParser(description="Render level-set CSVs for the reference figures")
    parser.add_argument("--grid", type=int, default=400)
    parser.add_argument("--output", default="data/figures")
    args = parser.parse_args()

    out_dir = Path(args.output)
    out_dir.mkdir(parents=True, exist_ok=True)
    p2 = PExponent(2.0)

    render("barrlund_disk_levels", LevelSetRequest(DISK, "b", p2, 0.3 + 0j, (0.4, 0.6, 0.8, 1.0), args.grid), out_dir)

    a, r = 0.5, 0.2
    c = b(DISK, p2, a, a + r).value
    log.info(f"Ball inclusion level c = b_2({a}, {a + r}) = {c:.10g}, R = {inclusion_radius(a, r):.10g}")
    render("ball_inclusion", LevelSetRequest(DISK, "b", p2, complex(a), (c,), args.grid), out_dir)


if __name__ == "__main__":
    main()
