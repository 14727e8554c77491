"""Pure-Python grid kernels.  Same contract as the compiled ``_kernels`` module."""

BACKEND = "python"


def expand_box(x1, y1, x2, y2):
    """All points of a corner-ordered box, y outer, x inner, ascending."""
    return [(x, y) for y in range(y1, y2 + 1) for x in range(x1, x2 + 1)]


def clip_union(boxes, window=None):
    """Distinct points of the union of ``boxes`` (each ``(x1, y1, x2, y2)``) inside ``window``.

    Returned in row-major order.  ``window=None`` means unclipped.
    """
    pts = set()
    for x1, y1, x2, y2 in boxes:
        if window is not None:
            x1, y1 = max(x1, window[0]), max(y1, window[1])
            x2, y2 = min(x2, window[2]), min(y2, window[3])
        for y in range(y1, y2 + 1):
            for x in range(x1, x2 + 1):
                pts.add((x, y))
    return sorted(pts, key=lambda p: (p[1], p[0]))


def count_in_box(points, box):
    x1, y1, x2, y2 = box
    return sum(1 for x, y in points if x1 <= x <= x2 and y1 <= y <= y2)
