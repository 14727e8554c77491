# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled grid kernels backing :mod:`stinv.kernels`."""
from libc.stdlib cimport calloc, free

BACKEND = "cython"

# bitmaps above this many cells fall back to a hash set
cdef long long MAX_BITMAP = 1 << 26


def expand_box(long long x1, long long y1, long long x2, long long y2):
    cdef long long x, y
    cdef list out = []
    for y in range(y1, y2 + 1):
        for x in range(x1, x2 + 1):
            out.append((x, y))
    return out


def clip_union(boxes, window=None):
    cdef list bxs = []
    cdef long long bx1, by1, bx2, by2
    cdef long long wx1, wy1, wx2, wy2
    cdef long long x, y, w, h, i, j
    cdef unsigned char *bits
    cdef list out = []

    for b in boxes:
        bx1, by1, bx2, by2 = b
        if window is not None:
            bx1 = max(bx1, <long long>window[0])
            by1 = max(by1, <long long>window[1])
            bx2 = min(bx2, <long long>window[2])
            by2 = min(by2, <long long>window[3])
        if bx1 <= bx2 and by1 <= by2:
            bxs.append((bx1, by1, bx2, by2))
    if not bxs:
        return out

    wx1, wy1, wx2, wy2 = bxs[0]
    for b in bxs:
        bx1, by1, bx2, by2 = b
        wx1 = min(wx1, bx1)
        wy1 = min(wy1, by1)
        wx2 = max(wx2, bx2)
        wy2 = max(wy2, by2)
    w = wx2 - wx1 + 1
    h = wy2 - wy1 + 1
    if w * h > MAX_BITMAP:
        pts = set()
        for b in bxs:
            pts.update(expand_box(*b))
        return sorted(pts, key=lambda p: (p[1], p[0]))

    bits = <unsigned char *>calloc(w * h, 1)
    if bits == NULL:
        raise MemoryError()
    try:
        for b in bxs:
            bx1, by1, bx2, by2 = b
            for j in range(by1 - wy1, by2 - wy1 + 1):
                for i in range(bx1 - wx1, bx2 - wx1 + 1):
                    bits[j * w + i] = 1
        for j in range(h):
            for i in range(w):
                if bits[j * w + i]:
                    out.append((wx1 + i, wy1 + j))
    finally:
        free(bits)
    return out


def count_in_box(points, box):
    cdef long long x1, y1, x2, y2, x, y
    cdef long long n = 0
    x1, y1, x2, y2 = box
    for p in points:
        x, y = p
        if x1 <= x <= x2 and y1 <= y <= y2:
            n += 1
    return n
