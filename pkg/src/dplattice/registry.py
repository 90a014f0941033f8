"""Registry of stored configuration representatives for all 40 types.

One representative root set per Weyl orbit class, found once by the
exhaustive search in `registry_search` and stored literally (a test
regenerates the search and checks the stored data matches).  Six types
split into two orbit classes; their variants carry behavior-derived
names:

    A5       single-curve / two-curve      (one or two derived curves)
    A1+A3    single-curve / two-curve
    3A1      single-curve / six-curve
    2A1+A3   five-curve / six-curve
    4A1      triple-curve / no-triple-curve
    A1+A5    free-curves / no-free-curves  (same derived diagram; the
                                            classes differ in whether any
                                            (-1)-curve avoids all roots)

The three possibly-minimal arithmetic cases are built from this data:
case 1 is a lone A1, case 2 an A2 whose two roots are conjugate, and
case 3 the no-triple-curve 4A1 with all four components in one Galois
orbit.
"""

from __future__ import annotations

from .lattice import SurfaceLattice
from .enumeration import catalog
from .configuration import Configuration

REPRESENTATIVES = {
    ("A1", None): ("A'12",),
    ("A2", None): ("A'23", "A'12"),
    ("A3", None): ("A'34", "A'23", "A'12"),
    ("A4", None): ("A'45", "A'34", "A'23", "A'12"),
    ("A5", "single-curve"): ("A'45", "A'34", "A'23", "A'12", "B'167"),
    ("A5", "two-curve"): ("A'56", "A'45", "A'34", "A'23", "A'12"),
    ("A6", None): ("A'67", "A'56", "A'45", "A'34", "A'23", "A'12"),
    ("A7", None): ("A'67", "A'56", "A'45", "A'34", "A'23", "A'12", "C'7"),
    ("D4", None): ("A'34", "A'23", "A'12", "B'125"),
    ("D5", None): ("A'45", "A'34", "A'23", "A'12", "B'123"),
    ("D6", None): ("A'56", "A'45", "A'34", "A'23", "A'12", "B'127"),
    ("E6", None): ("A'56", "A'45", "A'34", "A'23", "A'12", "B'123"),
    ("E7", None): ("A'67", "A'56", "A'45", "A'34", "A'23", "A'12", "B'123"),
    ("2A1", None): ("A'34", "A'12"),
    ("A1+A2", None): ("A'45", "A'23", "A'12"),
    ("A1+A3", "single-curve"): ("A'34", "A'23", "A'12", "B'567"),
    ("A1+A3", "two-curve"): ("A'56", "A'34", "A'23", "A'12"),
    ("A1+A4", None): ("A'67", "A'45", "A'34", "A'23", "A'12"),
    ("A1+A5", "free-curves"): ("A'56", "A'45", "A'34", "A'23", "A'12", "C'7"),
    ("A1+A5", "no-free-curves"): ("A'67", "A'45", "A'34", "A'23", "A'12", "B'167"),
    ("A1+D4", None): ("A'56", "A'34", "A'23", "A'12", "B'127"),
    ("A1+D5", None): ("A'67", "A'45", "A'34", "A'23", "A'12", "B'123"),
    ("A1+D6", None): ("A'56", "A'45", "A'34", "A'23", "A'12", "B'127", "C'7"),
    ("2A2", None): ("A'56", "A'45", "A'23", "A'12"),
    ("A2+A3", None): ("A'67", "A'56", "A'34", "A'23", "A'12"),
    ("A2+A4", None): ("A'67", "A'45", "A'34", "A'23", "A'12", "C'7"),
    ("A2+A5", None): ("A'67", "A'45", "A'34", "A'23", "A'12", "B'167", "C'7"),
    ("2A3", None): ("A'67", "A'56", "A'34", "A'23", "A'12", "C'7"),
    ("3A1", "single-curve"): ("A'34", "A'12", "B'567"),
    ("3A1", "six-curve"): ("A'56", "A'34", "A'12"),
    ("2A1+A2", None): ("A'67", "A'45", "A'23", "A'12"),
    ("2A1+A3", "five-curve"): ("A'56", "A'34", "A'23", "A'12", "B'567"),
    ("2A1+A3", "six-curve"): ("A'56", "A'34", "A'23", "A'12", "C'7"),
    ("2A1+D4", None): ("A'56", "A'34", "A'23", "A'12", "B'127", "B'567"),
    ("A1+2A2", None): ("A'56", "A'45", "A'23", "A'12", "B'123"),
    ("A1+A2+A3", None): ("A'67", "A'56", "A'34", "A'23", "A'12", "B'567"),
    ("A1+2A3", None): ("A'67", "A'56", "A'34", "A'23", "A'12", "B'567", "C'7"),
    ("3A2", None): ("A'56", "A'45", "A'23", "A'12", "B'123", "B'456"),
    ("4A1", "triple-curve"): ("A'56", "A'34", "A'12", "B'127"),
    ("4A1", "no-triple-curve"): ("A'56", "A'34", "A'12", "C'7"),
    ("3A1+A2", None): ("A'67", "A'45", "A'23", "A'12", "B'123"),
    ("3A1+A3", None): ("A'56", "A'34", "A'23", "A'12", "B'567", "C'7"),
    ("3A1+D4", None): ("A'56", "A'34", "A'23", "A'12", "B'127", "B'567", "C'7"),
    ("5A1", None): ("A'56", "A'34", "A'12", "B'127", "B'347"),
    ("6A1", None): ("A'56", "A'34", "A'12", "B'127", "B'347", "B'567"),
    ("7A1", None): ("A'56", "A'34", "A'12", "B'127", "B'347", "B'567", "C'7"),
}

VARIANT_DEFAULTS = {
    "A5": "single-curve",
    "A1+A3": "single-curve",
    "3A1": "single-curve",
    "2A1+A3": "six-curve",
    "4A1": "triple-curve",
    "A1+A5": "free-curves",
}

# (number of root sets, number of orbit classes) per type, frozen from the
# exhaustive enumeration; the regeneration test recomputes these.
TYPE_CENSUS = {
    "A1": (126, 1), "A2": (1, 1), "A3": (30, 1), "A4": (360, 1),
    "A5": (1920, 2), "A6": (3600, 1), "A7": (4320, 1), "D4": (90, 1),
    "D5": (1440, 1), "D6": (3600, 1), "E6": (3600, 1), "E7": (8640, 1),
    "2A1": (3780, 1), "A1+A2": (30, 1), "A1+A3": (420, 2),
    "A1+A4": (2160, 1), "A1+A5": (5760, 2), "A1+D4": (540, 1),
    "A1+D5": (2880, 1), "A1+D6": (7200, 1), "2A2": (120, 1),
    "A2+A3": (720, 1), "A2+A4": (2160, 1), "A2+A5": (2880, 1),
    "2A3": (720, 1), "3A1": (32760, 2), "2A1+A2": (180, 1),
    "2A1+A3": (1080, 2), "2A1+D4": (1080, 1), "A1+2A2": (720, 1),
    "A1+A2+A3": (1440, 1), "A1+2A3": (1440, 1), "3A2": (360, 1),
    "4A1": (75600, 2), "3A1+A2": (120, 1), "3A1+A3": (720, 1),
    "3A1+D4": (720, 1), "5A1": (90720, 1), "6A1": (60480, 1),
    "7A1": (17280, 1),
}

NOTES = {
    "7A1": "realized on a surface only in characteristic 2",
}


def variants_of(type_str: str):
    """Registered variant tags for a type (a single None for most)."""
    tags = sorted(
        (v for t, v in REPRESENTATIVES if t == type_str),
        key=lambda v: (v != VARIANT_DEFAULTS.get(type_str), str(v)),
    )
    if not tags:
        raise KeyError(f"unknown singularity type {type_str!r}")
    return tuple(tags)


def all_entries():
    return tuple(sorted(REPRESENTATIVES, key=lambda tv: (tv[0], str(tv[1]))))


def representative(type_str: str, variant: str | None = None, orbits=None,
                   a2_conjugate=()) -> Configuration:
    """The stored configuration for a type (and variant, where one exists)."""
    if variant is None:
        variant = VARIANT_DEFAULTS.get(type_str)
    key = (type_str, variant)
    if key not in REPRESENTATIVES:
        raise KeyError(
            f"no representative for type {type_str!r} variant {variant!r}; "
            f"known variants: {variants_of(type_str)}"
        )
    cat = catalog(7)
    roots = [cat.named(n) for n in REPRESENTATIVES[key]]
    cfg = Configuration(SurfaceLattice(7), roots, orbits=orbits,
                        a2_conjugate=a2_conjugate)
    assert cfg.type_label.display() == type_str
    return cfg


def minimal_case_configuration(case: int) -> Configuration:
    """The three possibly-minimal configurations of the classification."""
    if case == 1:
        return representative("A1")
    if case == 2:
        return representative("A2", a2_conjugate=(0,))
    if case == 3:
        cfg = representative("4A1", "no-triple-curve", orbits=[(0, 1, 2, 3)])
        return cfg
    raise ValueError("case must be 1, 2 or 3")
