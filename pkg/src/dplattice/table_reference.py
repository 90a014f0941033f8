"""Closed-form intersection numbers of named rank-7 classes.

The product of two named classes depends only on how their index sets
overlap; this module states that dependence case by case, as reference
data against which the brute-force catalog products are checked cell
for cell.  Only the a0 >= 0 family representatives are named here.
"""

from __future__ import annotations

from .enumeration import _family_of, _indices_of


def _pre_pre(fx, ix, fy, iy):
    sx, sy = set(ix), set(iy)
    common = len(sx & sy)
    if (fx, fy) == ("A", "A"):
        return -1 if ix == iy else 0
    if (fx, fy) == ("A", "B"):
        return 1 if common else 0
    if (fx, fy) == ("A", "C"):
        return 0 if common else 1
    if (fx, fy) == ("A", "D"):
        return 2 if ix == iy else 1
    if (fx, fy) == ("B", "B"):
        return (-1, 0, 1)[2 - common] if common != 1 else 0
    if (fx, fy) == ("B", "C"):
        return common
    if (fx, fy) == ("B", "D"):
        return 0 if common else 1
    if (fx, fy) == ("C", "C"):
        return {2: -1, 1: 0, 0: 1}[common]
    if (fx, fy) == ("C", "D"):
        return 1 if common else 0
    if (fx, fy) == ("D", "D"):
        return -1 if ix == iy else 0
    return _pre_pre(fy, iy, fx, ix)


def _root_root(fx, ix, fy, iy):
    if (fx, fy) == ("A'", "A'"):
        i, j = ix
        l, m = iy
        if (i, j) == (l, m):
            return -2
        if (i, j) == (m, l):
            return 2
        if i == l or j == m:
            return -1
        if i == m or j == l:
            return 1
        return 0
    if (fx, fy) == ("A'", "B'"):
        i, j = ix
        return (i in iy) - (j in iy)
    if (fx, fy) == ("A'", "C'"):
        i, j = ix
        (l,) = iy
        return -1 if i == l else (1 if j == l else 0)
    if (fx, fy) == ("B'", "B'"):
        return {3: -2, 2: -1, 1: 0, 0: 1}[len(set(ix) & set(iy))]
    if (fx, fy) == ("B'", "C'"):
        return 0 if iy[0] in ix else -1
    if (fx, fy) == ("C'", "C'"):
        return -2 if ix == iy else -1
    return _root_root(fy, iy, fx, ix)


def _pre_root(fx, ix, fy, iy):
    sx = set(ix)
    if fy == "A'":
        k, l = iy
        if fx == "A":
            return -1 if ix[0] == k else (1 if ix[0] == l else 0)
        if fx == "B":
            return (k in sx) - (l in sx)
        if fx == "C":
            return (l in sx) - (k in sx)
        if fx == "D":
            return 1 if ix[0] == k else (-1 if ix[0] == l else 0)
    if fy == "B'":
        common = len(sx & set(iy))
        if fx == "A":
            return 1 if common else 0
        if fx == "B":
            return {2: -1, 1: 0, 0: 1}[common]
        if fx == "C":
            return {2: 1, 1: 0, 0: -1}[common]
        if fx == "D":
            return -1 if common else 0
    if fy == "C'":
        k = iy[0]
        if fx == "A":
            return 0 if ix[0] == k else 1
        if fx == "B":
            return 1 if k in sx else 0
        if fx == "C":
            return -1 if k in sx else 0
        if fx == "D":
            return 0 if ix[0] == k else -1
    raise KeyError((fx, fy))


def expected_product(name_x: str, name_y: str) -> int:
    """Product of two named classes from the case tables alone."""
    fx, fy = _family_of(name_x), _family_of(name_y)
    ix, iy = _indices_of(name_x), _indices_of(name_y)
    pre = ("A", "B", "C", "D")
    if fx in pre and fy in pre:
        return _pre_pre(fx, ix, fy, iy)
    if fx not in pre and fy not in pre:
        return _root_root(fx, ix, fy, iy)
    if fx in pre:
        return _pre_root(fx, ix, fy, iy)
    return _pre_root(fy, iy, fx, ix)
