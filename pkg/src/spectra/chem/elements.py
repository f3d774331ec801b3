"""Element tables: symbols, atomic masses, and the organic valence model."""

from __future__ import annotations

from ..errors import ValenceError

# Supported elements (symbol -> atomic number). The SMILES subset only ever
# produces atoms from this table, and the graph decoder rounds the element
# feature column to the nearest member.
SYMBOL_TO_NUMBER: dict[str, int] = {
    "H": 1,
    "B": 5,
    "C": 6,
    "N": 7,
    "O": 8,
    "F": 9,
    "Si": 14,
    "P": 15,
    "S": 16,
    "Cl": 17,
    "As": 33,
    "Se": 34,
    "Br": 35,
    "Te": 52,
    "I": 53,
}

NUMBER_TO_SYMBOL: dict[int, str] = {v: k for k, v in SYMBOL_TO_NUMBER.items()}

SUPPORTED_NUMBERS: tuple[int, ...] = tuple(sorted(NUMBER_TO_SYMBOL))

# Organic-subset symbols may appear outside brackets; their aromatic
# (lowercase) forms are restricted to the elements that can be aromatic.
ORGANIC_SUBSET: frozenset[str] = frozenset(
    {"B", "C", "N", "O", "P", "S", "F", "Cl", "Br", "I"}
)
AROMATIC_SYMBOLS: frozenset[str] = frozenset({"b", "c", "n", "o", "p", "s"})
AROMATIC_CAPABLE: frozenset[int] = frozenset(
    SYMBOL_TO_NUMBER[s] for s in ("B", "C", "N", "O", "P", "S", "Se", "As")
)

# IUPAC standard atomic weights, 3 decimals.
ATOMIC_MASS: dict[int, float] = {
    1: 1.008,
    5: 10.811,
    6: 12.011,
    7: 14.007,
    8: 15.999,
    9: 18.998,
    14: 28.086,
    15: 30.974,
    16: 32.066,
    17: 35.453,
    33: 74.922,
    34: 78.971,
    35: 79.904,
    52: 127.600,
    53: 126.904,
}

# Allowed total valences per element (neutral atom).
VALENCES: dict[int, tuple[int, ...]] = {
    1: (1,),
    5: (3,),
    6: (4,),
    7: (3, 5),
    8: (2,),
    9: (1,),
    14: (4,),
    15: (3, 5),
    16: (2, 4, 6),
    17: (1,),
    33: (3, 5),
    34: (2, 4, 6),
    35: (1,),
    52: (2, 4, 6),
    53: (1,),
}

# Elements whose allowed valences shift by +charge. Carbon and boron are
# excluded: the shift is wrong there (a carbocation is 3-valent, not 5).
_CHARGE_SHIFTED: frozenset[int] = frozenset({7, 8, 15, 16, 33, 34, 52, 9, 17, 35, 53})


def allowed_valences(element: int, charge: int = 0) -> tuple[int, ...]:
    """Allowed total-valence set for an element, adjusted for formal charge."""
    try:
        base = VALENCES[element]
    except KeyError:
        raise ValenceError(f"no valence model for element {element}") from None
    if charge and element in _CHARGE_SHIFTED:
        shifted = tuple(v + charge for v in base if v + charge >= 0)
        if shifted:
            return shifted
    return base


def default_valence(element: int, charge: int = 0, at_least: float = 0.0) -> int:
    """Smallest allowed valence >= ``at_least``; raises if none exists."""
    for v in allowed_valences(element, charge):
        if v >= at_least - 1e-9:
            return v
    raise ValenceError(
        f"element {element} (charge {charge:+d}) cannot carry valence {at_least}"
    )


def max_valence(element: int, charge: int = 0) -> int:
    return max(allowed_valences(element, charge))
