"""SVG-рисунок решетки и ее образа при направленном масштабировании"""
import logging
import math
import xml.etree.ElementTree as ET
from typing import List, Tuple

from config import settings
from lattice import LatticeKind, LatticePoint, grid_points, mat_apply, point_float
from symmetry import InducedMap
from transform import DirectionalScaling, apply_exact, theta_degrees

logger = logging.getLogger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"

# Вершины единичной ячейки: квадрат и треугольник 1+w, 2+w, 2+2w
UNIT_CELLS = {
    LatticeKind.SQUARE: [(0, 0), (1, 0), (1, 1), (0, 1)],
    LatticeKind.TRIANGULAR: [(1, 1), (2, 1), (2, 2)],
}


def _num(value: float) -> str:
    text = f"{value:.3f}"
    return "0.000" if text == "-0.000" else text


def _to_svg(xy: Tuple[float, float]) -> Tuple[str, str]:
    """Lattice units to user units; y points down in SVG"""
    return _num(xy[0] * settings.SVG_UNIT), _num(-xy[1] * settings.SVG_UNIT)


def render_svg(ds: DirectionalScaling, im: InducedMap, radius: int) -> str:
    """Open circles: lattice points; filled dots: their images; line: direction theta."""
    style = settings.SVG_STYLE
    points: List[LatticePoint] = list(grid_points(ds.kind, radius))
    originals = [point_float(p) for p in points]
    half = math.ceil(max(max(abs(x), abs(y)) for x, y in originals)) + 1
    h = half * settings.SVG_UNIT
    size = 2 * h

    root = ET.Element(
        "svg",
        xmlns=SVG_NS,
        version="1.1",
        width=str(size),
        height=str(size),
        viewBox=f"{-h} {-h} {size} {size}",
    )
    title = ET.SubElement(root, "title")
    title.text = (
        f"{ds.kind.value} lattice, {ds.family_tag.label}, "
        f"theta={theta_degrees(ds):.6f} deg, radius={radius}"
    )

    cell = ET.SubElement(root, "polygon", id="unit-cell", fill="none", stroke=style["cell_stroke"])
    corners = []
    for m, n in UNIT_CELLS[ds.kind]:
        cx, cy = _to_svg(point_float(LatticePoint(m, n, ds.kind)))
        corners.append(f"{cx},{cy}")
    cell.set("points", " ".join(corners))

    reach = h * math.sqrt(2)
    dx, dy = math.cos(ds.theta) * reach, math.sin(ds.theta) * reach
    ET.SubElement(
        root,
        "line",
        id="direction",
        x1=_num(-dx),
        y1=_num(dy),
        x2=_num(dx),
        y2=_num(-dy),
        stroke=style["direction_stroke"],
    )

    lattice_group = ET.SubElement(root, "g", id="lattice")
    for xy in originals:
        cx, cy = _to_svg(xy)
        ET.SubElement(lattice_group, "circle", cx=cx, cy=cy, r="4", fill="none", stroke=style["lattice_stroke"])

    image_group = ET.SubElement(root, "g", id="images")
    for p in points:
        z = apply_exact(ds, p).embed()
        q = mat_apply(im.matrix, p)
        cx, cy = _to_svg((z.real, z.imag))
        dot = ET.SubElement(image_group, "circle", cx=cx, cy=cy, r="2", fill=style["image_fill"])
        # целые координаты образа в подрешетке scalar * Z[unit]
        ET.SubElement(dot, "title").text = f"({p.m},{p.n}) -> ({q.m},{q.n})"

    logger.info(f"Rendered {len(points)} points for {ds.family_tag.label}")
    body = ET.tostring(root, encoding="unicode")
    return f'<?xml version="1.0" encoding="UTF-8"?>\n{body}\n'
