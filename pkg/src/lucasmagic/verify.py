"""Property checks for integer squares: magic, regular, natural, and the
Frobenius-norm screen, plus Lucas parameter recovery.

All checks are exact integer arithmetic.  The Frobenius norm condition
(sum of squared entries equals n^2(n^2-1)(2n^2-1)/6) is necessary but not
sufficient for a magic square to be natural; the classic order-5 fixture in
the test suite passes the screen while failing naturalness.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict

from .exactmat import SquareMatrix
from .construct import Triple, level_of_order, lucas


def check_magic(m: SquareMatrix):
    """(True, mu) when all rows, columns, and both diagonals share sum mu."""
    n = m.n
    mu = sum(m.rows[0])
    for r in m.rows:
        if sum(r) != mu:
            return False, None
    for j in range(n):
        if sum(m.rows[i][j] for i in range(n)) != mu:
            return False, None
    if sum(m.rows[i][i] for i in range(n)) != mu:
        return False, None
    if sum(m.rows[i][n - 1 - i] for i in range(n)) != mu:
        return False, None
    return True, mu


def check_regular(m: SquareMatrix) -> bool:
    """True iff every centrosymmetric entry pair sums to 2*mu/n.

    Defined for magic squares only; non-magic input raises ValueError
    (regularity is then not applicable, as opposed to false).  The check is
    cross-multiplied — n*(M + R*M*R) == 2*mu*E — so no divisibility of
    2*mu by n is assumed.
    """
    is_magic, mu = check_magic(m)
    if not is_magic:
        raise ValueError("regularity is defined for magic squares only")
    n = m.n
    target = 2 * mu
    for i in range(n):
        for j in range(n):
            if n * (m.rows[i][j] + m.rows[n - 1 - i][n - 1 - j]) != target:
                return False
    return True


def check_natural(m: SquareMatrix) -> bool:
    """True iff the entries are exactly 0, 1, ..., n^2 - 1 (counting check)."""
    n2 = m.n * m.n
    seen = bytearray(n2)
    for x in m.entries():
        if not isinstance(x, int) or not 0 <= x < n2 or seen[x]:
            return False
        seen[x] = 1
    return True


def frobenius_norm_target(n: int) -> int:
    """The squared Frobenius norm of any natural order-n square."""
    return n * n * (n * n - 1) * (2 * n * n - 1) // 6


def check_fnc(m: SquareMatrix) -> bool:
    """The Frobenius norm condition: necessary (not sufficient) for natural."""
    return m.frobenius_sq() == frobenius_norm_target(m.n)


def fnc_parameter_equation(level: int) -> int:
    """Required sum(v_i^2 + y_i^2) for the FNC at the given level.

    Equals (9**(2*level) - 1) // 8, i.e. 10 at level 1, 820 at level 2.
    """
    if level < 1:
        raise ValueError("level must be >= 1")
    return (9 ** (2 * level) - 1) // 8


def recover_lucas_params(m: SquareMatrix):
    """Invert the compound Lucas construction, or return None.

    Reads v and y at each level from corner-vs-center element differences,
    descending into the central block.  Individual c_i are not determined
    by the matrix (only their total is), so the c's are gauged as
    c_i = |v_i| + |y_i| for i >= 2 with the remainder in c_1 — which
    reproduces the conventional values for natural squares.  The candidate
    is always verified by reconstruction; any mismatch returns None.
    """
    try:
        level = level_of_order(m.n)
    except ValueError:
        return None
    vy = []
    cur = m
    for _ in range(level, 1, -1):
        k = cur.n // 3
        center = cur.rows[k][k]
        vy.append((cur.rows[0][0] - center, cur.rows[0][2 * k] - center))
        cur = SquareMatrix(
            [[cur.rows[k + i][k + j] for j in range(k)] for i in range(k)]
        )
    c_total = cur.rows[1][1]
    vy.append((cur.rows[0][0] - c_total, cur.rows[0][2] - c_total))
    vy.reverse()  # innermost level first

    cs = [abs(v) + abs(y) for v, y in vy]
    cs[0] = c_total - sum(cs[1:])
    triples = tuple((c,) + p for c, p in zip(cs, vy))
    try:
        if lucas(triples) == m:
            return triples
    except (ValueError, TypeError):
        pass
    return None


@dataclass(frozen=True)
class VerificationReport:
    """Everything the checks above say about one square.

    is_regular is None (JSON null) when the square is not magic, since
    regularity is then not applicable.
    """

    order: int
    is_magic: bool
    summation_index: int | None
    is_regular: bool | None
    frobenius_sq: int
    fnc_pass: bool
    is_natural: bool
    exact_rank: int
    lucas_params: tuple[Triple, ...] | None

    def to_json(self) -> dict:
        d = asdict(self)
        if self.lucas_params is not None:
            d["lucas_params"] = [list(t) for t in self.lucas_params]
        return d


def verify_report(m: SquareMatrix) -> VerificationReport:
    """Run every check on one square and bundle the results."""
    is_magic, mu = check_magic(m)
    return VerificationReport(
        order=m.n,
        is_magic=is_magic,
        summation_index=mu,
        is_regular=check_regular(m) if is_magic else None,
        frobenius_sq=m.frobenius_sq(),
        fnc_pass=check_fnc(m),
        is_natural=check_natural(m),
        exact_rank=m.exact_rank(),
        lucas_params=recover_lucas_params(m),
    )
