"""Static SVG and ASCII pictures of grid graphs and their partitions."""

from __future__ import annotations

from .core import GridGraph, InputError, Partition

CELL = 20
PALETTE = (
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
)
UNCOLOURED = "#d9d9d9"
SYMBOLS = "0123456789abcdefghijklmnopqrstuvwxyz"


def _check(grid: GridGraph, partition: Partition | None):
    if grid.n == 0:
        raise InputError("nothing to render")
    if partition is not None and partition.n != grid.n:
        raise InputError(f"partition has {partition.n} vertices, grid has {grid.n}")


def render_svg(grid: GridGraph, partition: Partition | None = None, connectors=()) -> str:
    """One 20 px cell per vertex (y axis pointing up), lattice edges between cell centres.

    Connector edges are drawn bold.
    """
    _check(grid, partition)
    x0, y0, x1, y1 = grid.bounding_box()
    width, height = (x1 - x0 + 1) * CELL, (y1 - y0 + 1) * CELL

    def corner(v):
        x, y = grid.coords[v]
        return (x - x0) * CELL, (y1 - y) * CELL

    def centre(v):
        px, py = corner(v)
        return px + CELL // 2, py + CELL // 2

    lines = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        '<g class="cells" stroke="#ffffff" stroke-width="1">',
    ]
    for v in range(grid.n):
        px, py = corner(v)
        fill = UNCOLOURED if partition is None else PALETTE[partition.colour[v] % len(PALETTE)]
        lines.append(f'<rect class="cell" x="{px}" y="{py}" width="{CELL}" height="{CELL}" fill="{fill}"/>')
    lines.append("</g>")
    bold = {tuple(sorted(e)) for e in connectors}
    lines.append('<g class="edges" stroke="#333333" stroke-linecap="round">')
    for e in grid.edges:
        (ax, ay), (bx, by) = centre(e[0]), centre(e[1])
        w = 4 if e in bold else 1
        kind = "connector" if e in bold else "edge"
        lines.append(f'<line class="{kind}" x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke-width="{w}"/>')
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render_ascii(grid: GridGraph, partition: Partition | None = None) -> str:
    """Rows from top to bottom; '#' for an uncoloured vertex, '.' for an empty lattice point."""
    _check(grid, partition)
    x0, y0, x1, y1 = grid.bounding_box()
    rows = []
    for y in range(y1, y0 - 1, -1):
        row = []
        for x in range(x0, x1 + 1):
            v = grid.index.get((x, y))
            if v is None:
                row.append(".")
            elif partition is None:
                row.append("#")
            else:
                row.append(SYMBOLS[partition.colour[v] % len(SYMBOLS)])
        rows.append("".join(row))
    return "\n".join(rows) + "\n"
