"""Construction of Lucas and Frierson magic squares of order 3**level.

The order-3 Lucas form is

    [[c+v, c-v-y, c+y],
     [c-v+y, c,   c+v-y],
     [c-y, c+v+y, c-v]]

with line sums 3c.  Frierson squares are the subfamily c = v+y with
nonnegative v, y.  Higher orders come from repeated compounding

    next = E3 (x) inner  +  L3(c, v, y) (x) E_m,

where (x) is the Kronecker product and E is the all-ones matrix; the level-1
triple is the innermost factor.  The eight dihedral images of a square
(its phases) act on the parameters by per-level sign changes and swaps of
(v, y), which this module implements both ways (on matrices and on
parameter tuples).
"""

from __future__ import annotations

from .exactmat import SquareMatrix, kron

Triple = tuple[int, int, int]
Pair = tuple[int, int]


def lucas3(c: int, v: int, y: int) -> SquareMatrix:
    """The general order-3 magic square with center c and line sum 3c."""
    return SquareMatrix(
        [
            [c + v, c - v - y, c + y],
            [c - v + y, c, c + v - y],
            [c - y, c + v + y, c - v],
        ]
    )


def frierson3(v: int, y: int) -> SquareMatrix:
    """lucas3 with c = v + y; parameters must be nonnegative."""
    if v < 0 or y < 0:
        raise ValueError("frierson parameters must be nonnegative")
    return lucas3(v + y, v, y)


def level_of_order(n: int) -> int:
    """The exponent l with n = 3**l, or ValueError if n is not a 3-power."""
    if n < 3:
        raise ValueError(f"order {n} is not a positive power of 3")
    level = 0
    while n > 1:
        if n % 3:
            raise ValueError(f"order is not a power of 3")
        n //= 3
        level += 1
    return level


def compound_once(inner: SquareMatrix, c: int, v: int, y: int) -> SquareMatrix:
    """One compounding step: E3 (x) inner + lucas3(c,v,y) (x) E_m.

    The result is magic with line sum 3*mu(inner) + 3**(l+1) * c when the
    inner square is magic of order 3**l.
    """
    level_of_order(inner.n)  # raises unless inner order is a 3-power
    e_m = SquareMatrix.all_ones(inner.n)
    return kron(SquareMatrix.all_ones(3), inner) + kron(lucas3(c, v, y), e_m)


def lucas(triples) -> SquareMatrix:
    """The compound Lucas square for a sequence of (c, v, y) triples.

    triples[0] is the innermost level; the order of the result is
    3**len(triples).
    """
    triples = normalize_triples(triples)
    m = lucas3(*triples[0])
    for c, v, y in triples[1:]:
        m = compound_once(m, c, v, y)
    return m


def frierson(pairs) -> SquareMatrix:
    """The compound Frierson square: lucas with c_i = v_i + y_i per level."""
    return lucas(frierson_to_lucas(pairs))


def frierson_to_lucas(pairs) -> tuple[Triple, ...]:
    pairs = normalize_pairs(pairs)
    return tuple((v + y, v, y) for v, y in pairs)


def frierson_well_formed(pairs) -> bool:
    """True when every parameter is strictly positive.

    Zero parameters are admitted by frierson() but produce degenerate
    (never natural) squares; this predicate is the advisory flag.
    """
    return all(v > 0 and y > 0 for v, y in normalize_pairs(pairs))


def normalize_triples(triples) -> tuple[Triple, ...]:
    out = tuple((int(c), int(v), int(y)) for c, v, y in triples)
    if not out:
        raise ValueError("at least one (c, v, y) triple is required")
    return out


def normalize_pairs(pairs) -> tuple[Pair, ...]:
    out = tuple((int(v), int(y)) for v, y in pairs)
    if not out:
        raise ValueError("at least one (v, y) pair is required")
    if any(v < 0 or y < 0 for v, y in out):
        raise ValueError("frierson parameters must be nonnegative")
    return out


def magic_index(triples) -> int:
    """The line sum of lucas(triples): 3**level * sum of the c_i."""
    triples = normalize_triples(triples)
    return 3 ** len(triples) * sum(c for c, _, _ in triples)


# ---------------------------------------------------------------------------
# Phases: the dihedral group of order 8, realized three ways — on matrices
# (reversal R and transpose), on (v, y) pairs, and as name composition.
# ---------------------------------------------------------------------------

# name -> (v, y) action; "mr" means right-multiplication by R, "rm" left,
# "t" transpose, and compositions read outermost-last ("rt" = R @ m.T).
PHASE_ACTIONS = {
    "identity": lambda v, y: (v, y),
    "mr": lambda v, y: (y, v),
    "rm": lambda v, y: (-y, -v),
    "rmr": lambda v, y: (-v, -y),
    "t": lambda v, y: (v, -y),
    "tr": lambda v, y: (-y, v),
    "rt": lambda v, y: (y, -v),
    "rtr": lambda v, y: (-v, y),
}

PHASE_NAMES = tuple(PHASE_ACTIONS)


def apply_phase(m: SquareMatrix, phase: str) -> SquareMatrix:
    """Apply one of the 8 dihedral transforms to a square matrix."""
    r = SquareMatrix.cross_identity(m.n)
    if phase == "identity":
        return m
    if phase == "mr":
        return m @ r
    if phase == "rm":
        return r @ m
    if phase == "rmr":
        return r @ m @ r
    if phase == "t":
        return m.T
    if phase == "tr":
        return m.T @ r
    if phase == "rt":
        return r @ m.T
    if phase == "rtr":
        return r @ m.T @ r
    raise ValueError(f"unknown phase {phase!r}")


def phase_parameters(triples, phase: str) -> tuple[Triple, ...]:
    """The parameter tuple of apply_phase(lucas(triples), phase).

    Each level's (v, y) transforms the same way; the c's are untouched.
    """
    act = PHASE_ACTIONS.get(phase)
    if act is None:
        raise ValueError(f"unknown phase {phase!r}")
    return tuple((c,) + act(v, y) for c, v, y in normalize_triples(triples))


def compose_phases(first: str, second: str) -> str:
    """The phase name equivalent to applying `first`, then `second`."""
    probe = ((0, 1, 2),)  # generic: all 8 images of (v,y)=(1,2) differ
    image = phase_parameters(phase_parameters(probe, first), second)
    for name in PHASE_NAMES:
        if phase_parameters(probe, name) == image:
            return name
    raise AssertionError("phase composition left the group")  # unreachable


def canonical_phase(m: SquareMatrix) -> SquareMatrix:
    """The lexicographically smallest (row-major) of the 8 phase images."""
    return min((apply_phase(m, p) for p in PHASE_NAMES), key=lambda x: x.rows)


def canonical_parameters(triples) -> tuple[Triple, ...]:
    """The lexicographically smallest of the 8 phase images of the params."""
    triples = normalize_triples(triples)
    return min(phase_parameters(triples, p) for p in PHASE_NAMES)


# ---------------------------------------------------------------------------
# Parameter-string grammar (CLI-facing): levels split by ";", values by ","
# ---------------------------------------------------------------------------


def parse_lucas_params(text: str) -> tuple[Triple, ...]:
    """Parse "c1,v1,y1;c2,v2,y2;..." into level triples."""
    return normalize_triples(_parse_groups(text, 3))


def parse_frierson_params(text: str) -> tuple[Pair, ...]:
    """Parse "v1,y1;v2,y2;..." into level pairs."""
    return normalize_pairs(_parse_groups(text, 2))


def _parse_groups(text: str, width: int):
    groups = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        vals = [tok.strip() for tok in chunk.split(",")]
        if len(vals) != width or not all(vals):
            raise ValueError(
                f"expected {width} comma-separated integers per level, got {chunk!r}"
            )
        try:
            groups.append(tuple(int(v) for v in vals))
        except ValueError:
            raise ValueError(f"non-integer parameter in {chunk!r}") from None
    if not groups:
        raise ValueError("empty parameter string")
    return groups


def format_lucas_params(triples) -> str:
    return ";".join(f"{c},{v},{y}" for c, v, y in normalize_triples(triples))


def format_frierson_params(pairs) -> str:
    return ";".join(f"{v},{y}" for v, y in normalize_pairs(pairs))


# The 12 fundamental order-9 Frierson parameter sets (v, y, s, t), in the
# traditional lettering: A-F are the classical six, G-L the further six
# fundamental under the 8-phase convention only.
FRIERSON9_SETS = {
    "A": (3, 1, 27, 9),
    "B": (27, 1, 9, 3),
    "C": (9, 1, 27, 3),
    "D": (27, 9, 3, 1),
    "E": (9, 3, 27, 1),
    "F": (27, 3, 9, 1),
    "G": (3, 1, 9, 27),
    "H": (27, 1, 3, 9),
    "I": (9, 1, 3, 27),
    "J": (9, 27, 3, 1),
    "K": (3, 9, 27, 1),
    "L": (3, 27, 9, 1),
}


def frierson9(letter: str) -> SquareMatrix:
    """One of the 12 fundamental order-9 Frierson squares by letter."""
    v, y, s, t = FRIERSON9_SETS[letter.upper()]
    return frierson([(v, y), (s, t)])
