"""SMILES subset parser.

Supported: organic-subset atoms, bracket atoms with chirality/H-count/charge,
ring closures (including %nn), branches, bond symbols ``- = # :``, aromatic
lowercase atoms, and directional ``/`` ``\\`` markers (folded into per-bond
cis/trans stereo). Isotopes, wildcards, atom classes, and ``.`` disconnection
are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import SmilesSyntaxError, ValenceError
from .elements import (
    AROMATIC_SYMBOLS,
    ORGANIC_SUBSET,
    SYMBOL_TO_NUMBER,
    allowed_valences,
    max_valence,
)
from .mol import STEREO_CIS, STEREO_NONE, STEREO_TRANS, Atom, Bond, Molecule

_BOND_ORDER = {"-": 1.0, "=": 2.0, "#": 3.0, ":": 1.5}
_TWO_LETTER = ("Cl", "Br")


def implicit_h_count(
    element: int, charge: int, aromatic: bool, order_sum: float, aromatic_bonds: int
) -> int:
    """Hydrogens implied by the smallest allowed valence covering the bonds.

    Aromatic atoms use sigma/pi accounting: each aromatic bond contributes one
    sigma bond, and C/N/P additionally consume one pi slot (O/S/B donate a
    lone pair to the ring instead, matching pyridine-vs-furan conventions).
    """
    if aromatic:
        sigma = order_sum - 0.5 * aromatic_bonds  # aromatic bonds count as 1
        pi = 1 if element in (6, 7, 15, 33) else 0
        total = sigma + pi
    else:
        total = order_sum
    for v in allowed_valences(element, charge):
        if v >= total - 1e-9:
            return int(round(v - total))
    raise ValenceError(
        f"element {element} (charge {charge:+d}) exceeds maximum valence: "
        f"bond order sum {total}"
    )


@dataclass
class _PendingRing:
    atom: int
    symbol: str | None  # bond symbol given at the opening digit
    direction: str | None


def parse_smiles(text: str) -> Molecule:
    """Parse a SMILES string into a Molecule with implicit hydrogens assigned."""
    if not text or not text.strip():
        raise SmilesSyntaxError("empty SMILES string")
    s = text.strip()
    if not s.isascii():
        raise SmilesSyntaxError("SMILES must be ASCII")

    mol = Molecule()
    stack: list[int] = []
    prev: int | None = None
    pending: str | None = None  # bond symbol awaiting its right-hand atom
    rings: dict[int, _PendingRing] = {}
    bracket_h: dict[int, int] = {}  # atoms whose H count was given explicitly
    directions: list[tuple[int, int, str]] = []  # (from, to, '/' or '\')
    bond_keys: set[tuple[int, int]] = set()

    def add_atom(atom: Atom) -> int:
        mol.atoms.append(atom)
        idx = len(mol.atoms) - 1
        nonlocal prev, pending
        if prev is not None:
            add_bond(prev, idx, pending)
        pending = None
        prev = idx
        return idx

    def add_bond(a: int, b: int, symbol: str | None) -> None:
        u, v = (a, b) if a < b else (b, a)
        if u == v:
            raise SmilesSyntaxError("self-bond")
        if (u, v) in bond_keys:
            raise SmilesSyntaxError(f"duplicate bond between atoms {u} and {v}")
        bond_keys.add((u, v))
        if symbol in ("/", "\\"):
            directions.append((a, b, symbol))
            order = 1.0
        elif symbol is None:
            both_aromatic = mol.atoms[a].aromatic and mol.atoms[b].aromatic
            order = 1.5 if both_aromatic else 1.0
        else:
            order = _BOND_ORDER[symbol]
        mol.bonds.append(Bond(u=u, v=v, order=order))

    i, n = 0, len(s)
    while i < n:
        ch = s[i]
        if ch == "[":
            end = s.find("]", i)
            if end < 0:
                raise SmilesSyntaxError(f"unclosed bracket at position {i}")
            atom, given_h = _parse_bracket(s[i + 1 : end], i)
            idx = add_atom(atom)
            bracket_h[idx] = given_h
            i = end + 1
        elif s.startswith(_TWO_LETTER, i):
            add_atom(Atom(element=SYMBOL_TO_NUMBER[s[i : i + 2]]))
            i += 2
        elif ch in ORGANIC_SUBSET and ch.isupper():
            add_atom(Atom(element=SYMBOL_TO_NUMBER[ch]))
            i += 1
        elif ch in AROMATIC_SYMBOLS:
            add_atom(Atom(element=SYMBOL_TO_NUMBER[ch.upper()], aromatic=True))
            i += 1
        elif ch in _BOND_ORDER or ch in ("/", "\\"):
            if pending is not None:
                raise SmilesSyntaxError(f"two bond symbols in a row at position {i}")
            pending = ch
            i += 1
        elif ch == "(":
            if prev is None:
                raise SmilesSyntaxError("branch before any atom")
            stack.append(prev)
            i += 1
        elif ch == ")":
            if not stack:
                raise SmilesSyntaxError(f"unbalanced ')' at position {i}")
            if pending is not None:
                raise SmilesSyntaxError("dangling bond symbol before ')'")
            prev = stack.pop()
            i += 1
        elif ch.isdigit() or ch == "%":
            if ch == "%":
                if i + 2 >= n or not s[i + 1 : i + 3].isdigit():
                    raise SmilesSyntaxError(f"malformed %nn ring closure at {i}")
                num = int(s[i + 1 : i + 3])
                i += 3
            else:
                num = int(ch)
                i += 1
            if prev is None:
                raise SmilesSyntaxError("ring closure before any atom")
            _close_or_open_ring(
                mol, rings, num, prev, pending, add_bond, directions
            )
            pending = None
        else:
            raise SmilesSyntaxError(f"unsupported character {ch!r} at position {i}")

    if stack:
        raise SmilesSyntaxError("unbalanced '(' (branch never closed)")
    if rings:
        raise SmilesSyntaxError(f"unclosed ring closures: {sorted(rings)}")
    if pending is not None:
        raise SmilesSyntaxError("dangling bond symbol at end of input")
    if not mol.atoms:
        raise SmilesSyntaxError("no atoms in SMILES")

    _demote_acyclic_aromatic_bonds(mol)
    _assign_implicit_hydrogens(mol, bracket_h)
    _assign_bond_stereo(mol, directions)
    return mol


def _close_or_open_ring(mol, rings, num, at, pending, add_bond, directions) -> None:
    if num in rings:
        open_ring = rings.pop(num)
        if open_ring.atom == at:
            raise SmilesSyntaxError(f"ring closure {num} bonds an atom to itself")
        sym = open_ring.symbol
        if pending is not None and sym is not None and pending != sym:
            raise SmilesSyntaxError(f"conflicting bond symbols on ring closure {num}")
        symbol = pending if pending is not None else sym
        if symbol in ("/", "\\"):
            # direction recorded from the atom that carried the marker
            if pending is not None:
                add_bond(at, open_ring.atom, None)
                directions.append((at, open_ring.atom, symbol))
            else:
                add_bond(open_ring.atom, at, None)
                directions.append((open_ring.atom, at, symbol))
        else:
            add_bond(open_ring.atom, at, symbol)
    else:
        direction = pending if pending in ("/", "\\") else None
        symbol = pending if pending not in ("/", "\\") else None
        rings[num] = _PendingRing(atom=at, symbol=symbol, direction=direction)
        if direction is not None:
            rings[num].symbol = direction


def _parse_bracket(body: str, pos: int) -> tuple[Atom, int]:
    """Parse the inside of ``[...]``: symbol, @/@@, Hn, charge."""
    if not body:
        raise SmilesSyntaxError(f"empty bracket atom at position {pos}")
    j = 0
    if body[0].isdigit():
        raise SmilesSyntaxError("isotope labels are not supported")
    aromatic = False
    symbol = None
    for cand in _TWO_LETTER + tuple(sorted(SYMBOL_TO_NUMBER, key=len, reverse=True)):
        if body.startswith(cand, j):
            symbol = cand
            break
    if symbol is None:
        low = body[j]
        if low in AROMATIC_SYMBOLS or low in {"se", "as"}:
            symbol = low.upper()
            aromatic = True
        elif body.startswith(("se", "as"), j):
            symbol = body[j : j + 2].capitalize()
            aromatic = True
            j += 1
        else:
            raise SmilesSyntaxError(f"unknown element in bracket: {body!r}")
    j += len(symbol) if not aromatic or len(symbol) == 2 else 1
    element = SYMBOL_TO_NUMBER[symbol]

    chiral = None
    if body.startswith("@@", j):
        chiral = "@@"
        j += 2
    elif body.startswith("@", j):
        chiral = "@"
        j += 1

    h_count = 0
    if j < len(body) and body[j] == "H":
        j += 1
        k = j
        while k < len(body) and body[k].isdigit():
            k += 1
        h_count = int(body[j:k]) if k > j else 1
        j = k

    charge = 0
    if j < len(body) and body[j] in "+-":
        sign = 1 if body[j] == "+" else -1
        j += 1
        k = j
        while k < len(body) and body[k].isdigit():
            k += 1
        if k > j:
            charge = sign * int(body[j:k])
            j = k
        else:
            charge = sign
            while j < len(body) and body[j] == body[j - 1]:
                charge += sign
                j += 1
    if j != len(body):
        raise SmilesSyntaxError(f"unsupported bracket content: {body!r}")

    atom = Atom(
        element=element,
        formal_charge=charge,
        aromatic=aromatic,
        explicit_h=h_count,
        chiral=chiral,
    )
    return atom, h_count


def _demote_acyclic_aromatic_bonds(mol: Molecule) -> None:
    """Default aromatic bonds outside any aromatic cycle become single.

    Handles the bare biphenyl bridge: an unspecified bond between two aromatic
    atoms parses as aromatic, but only ring bonds may stay aromatic.
    """
    from .mol import bridges

    arom_edges = [(b.u, b.v) for b in mol.bonds if b.order == 1.5]
    if not arom_edges:
        return
    bridge_set = bridges(mol.n_atoms, arom_edges)
    for b in mol.bonds:
        if b.order == 1.5 and (b.u, b.v) in bridge_set:
            b.order = 1.0


def _assign_implicit_hydrogens(mol: Molecule, bracket_h: dict[int, int]) -> None:
    adj = mol.neighbor_lists()
    for idx, atom in enumerate(mol.atoms):
        order_sum = sum(b.order for _, b in adj[idx])
        arom_bonds = sum(1 for _, b in adj[idx] if b.order == 1.5)
        if idx in bracket_h:
            total = order_sum + atom.explicit_h
            cap = max_valence(atom.element, atom.formal_charge)
            if atom.aromatic:
                total -= 0.5 * arom_bonds  # sigma accounting for the cap check
            if total > cap + 1e-9:
                raise ValenceError(
                    f"atom {idx} ({atom.symbol}) exceeds maximum valence {cap}"
                )
        else:
            atom.explicit_h = implicit_h_count(
                atom.element, atom.formal_charge, atom.aromatic, order_sum, arom_bonds
            )


def _assign_bond_stereo(mol: Molecule, directions: list[tuple[int, int, str]]) -> None:
    """Fold directional single-bond markers into cis/trans on double bonds."""
    if not directions:
        return
    orient: dict[tuple[int, int], int] = {}
    for a, b, sym in directions:
        val = 1 if sym == "/" else -1
        if a > b:
            a, b, val = b, a, -val
        orient[(a, b)] = val  # +1: '/' read u -> v

    def direction_into(center: int, nbr: int) -> int | None:
        u, v = (nbr, center) if nbr < center else (center, nbr)
        val = orient.get((u, v))
        if val is None:
            return None
        return val if nbr == u else -val  # read nbr -> center

    adj = mol.neighbor_lists()
    for bond in mol.bonds:
        if bond.order != 2.0:
            continue
        d_u = None
        for w, nb in sorted(adj[bond.u], key=lambda t: t[0]):
            if w != bond.v and nb.order == 1.0:
                d_u = direction_into(bond.u, w)
                if d_u is not None:
                    break
        d_v = None
        for x, nb in sorted(adj[bond.v], key=lambda t: t[0]):
            if x != bond.u and nb.order == 1.0:
                u2, v2 = (bond.v, x) if bond.v < x else (x, bond.v)
                val = orient.get((u2, v2))
                if val is not None:
                    d_v = val if bond.v == u2 else -val  # read v -> x
                    break
        if d_u is None or d_v is None:
            continue
        bond.stereo = STEREO_TRANS if d_u == d_v else STEREO_CIS
    # markers consumed; stereo on non-double bonds stays STEREO_NONE
    for bond in mol.bonds:
        if bond.order != 2.0 and bond.stereo != STEREO_NONE:
            bond.stereo = STEREO_NONE
