"""Closed-form spectral data for compound Lucas squares.

For the order-3 square with parameters (c, v, y) the nonzero eigenvalues
are 3c and +-lambda with lambda = sqrt(3(v^2 - y^2)) (imaginary when
y^2 > v^2), and the singular values are |3c|, |phi|, |psi| with
phi = (v+y)sqrt(3), psi = (v-y)sqrt(3).  Compounding multiplies the inner
nonzero spectrum by 3 and appends the outer level's pair, so at level l the
nonzero eigenvalues are mu and +-3^(l-1) lambda_i and the nonzero singular
values are |mu|, 3^(l-1)|phi_i|, 3^(l-1)|psi_i| — everything else is zero.

The eigenvector and singular-vector matrices follow the same Kronecker
recursion as the squares themselves (outermost factor on the left), with
the diagonal kept in a fixed block order: mu first, the per-level pairs
(innermost level first), zeros last.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .construct import normalize_triples, lucas, lucas3, magic_index
from .exactmat import SquareMatrix, kron
from .radical import Radical, RadicalSum

POWER_CLOSED_FORM_MAX_LEVEL = 2

_MU = (0,)
_ZERO = (2,)


def lam(v: int, y: int) -> Radical:
    """lambda(v, y) = sqrt(3(v^2 - y^2)); imaginary for y^2 > v^2."""
    return Radical(1, 3 * (v * v - y * y))


def phi(v: int, y: int) -> Radical:
    return Radical(v + y, 3)


def psi(v: int, y: int) -> Radical:
    return Radical(v - y, 3)


def omega(v: int, y: int) -> Radical:
    """Omega = 3(v+y)/lambda — the eigenvector entry offset; needs v^2 != y^2."""
    disc = v * v - y * y
    if disc == 0:
        raise ValueError("omega undefined for v = +-y")
    return Radical(Fraction(v + y, disc), 3 * disc)


# ---------------------------------------------------------------------------
# Diagonals.  Built in raw Kronecker-recursion positions with provenance
# tags, then stably sorted into the block order [mu, pairs, zeros]; S/U/V
# columns are permuted by the same order so the pairings survive.
# ---------------------------------------------------------------------------


def _tagged_diagonal(triples, pair_for_level):
    """Diagonal entries (Radical, tag) in raw Kronecker positions.

    pair_for_level(k, c, v, y) supplies the two level-k pair entries, already
    scaled by 3^(k-1).  Tags: (0,) for the mu slot, (1, level, 0|1) for pair
    slots, (2,) for structural zeros.
    """
    c1, v1, y1 = triples[0]
    p, q = pair_for_level(1, c1, v1, y1)
    diag = [(Radical(3 * c1), _MU), (p, (1, 1, 0)), (q, (1, 1, 1))]
    for k in range(2, len(triples) + 1):
        c, v, y = triples[k - 1]
        m = 3 ** (k - 1)
        p, q = pair_for_level(k, c, v, y)
        new = [(Radical(0), _ZERO)] * (3 * m)
        head, tag = diag[0]
        new[0] = (head * 3 + 3 ** k * c, tag)
        for j in range(1, m):
            val, tag = diag[j]
            new[j] = (val * 3, tag)
        new[m] = (p, (1, k, 0))
        new[2 * m] = (q, (1, k, 1))
        diag = new
    return diag


def _jcf_pair(k, c, v, y):
    scaled = Radical(3 ** (k - 1), 3 * (v * v - y * y))
    return scaled, -scaled


def _svd_pair(k, c, v, y):
    s = 3 ** (k - 1)
    return Radical(s * (v + y), 3), Radical(s * (v - y), 3)


def _block_order(diag):
    return sorted(range(len(diag)), key=lambda i: diag[i][1])


def eigenvalues(triples) -> list[Radical]:
    """All 3**level eigenvalues: mu, +-3^(l-1)lambda_i per level, zeros."""
    triples = normalize_triples(triples)
    diag = _tagged_diagonal(triples, _jcf_pair)
    return [diag[i][0] for i in _block_order(diag)]


def singular_values(triples) -> list[Radical]:
    """All 3**level singular values in the same block order, nonnegative."""
    triples = normalize_triples(triples)
    diag = _tagged_diagonal(triples, _svd_pair)
    return [abs(diag[i][0]) for i in _block_order(diag)]


def sorted_singular_values(triples) -> list[Radical]:
    """Singular values in conventional descending order."""
    return sorted(singular_values(triples), reverse=True)


def nonzero_count(values) -> int:
    return sum(1 for r in values if not r.is_zero())


# ---------------------------------------------------------------------------
# Matrices of radical entries (eigenvector and singular-vector factors)
# ---------------------------------------------------------------------------


class RadMatrix:
    """A square matrix of RadicalSum entries; just enough linear algebra
    for building and checking the closed-form decompositions."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        self.rows = tuple(
            tuple(x if isinstance(x, RadicalSum) else RadicalSum(x) for x in row)
            for row in rows
        )
        self.n = len(self.rows)
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("square array required")

    def __eq__(self, other):
        return isinstance(other, RadMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def transpose(self) -> "RadMatrix":
        return RadMatrix(list(zip(*self.rows)))

    @property
    def T(self) -> "RadMatrix":
        return self.transpose()

    def __matmul__(self, other) -> "RadMatrix":
        cols = list(zip(*other.rows))
        return RadMatrix(
            [
                [
                    sum((a * b for a, b in zip(row, col)), RadicalSum())
                    for col in cols
                ]
                for row in self.rows
            ]
        )

    def scale_columns(self, factors) -> "RadMatrix":
        return RadMatrix(
            [[x * f for x, f in zip(row, factors)] for row in self.rows]
        )

    def permute_columns(self, order) -> "RadMatrix":
        return RadMatrix([[row[j] for j in order] for row in self.rows])

    def to_complex(self) -> np.ndarray:
        return np.array(
            [[complex(x) for x in row] for row in self.rows], dtype=complex
        )

    @staticmethod
    def identity(n: int) -> "RadMatrix":
        return RadMatrix([[1 if i == j else 0 for j in range(n)] for i in range(n)])


def rad_kron(a: RadMatrix, b: RadMatrix) -> RadMatrix:
    na, nb = a.n, b.n
    return RadMatrix(
        [
            [
                a.rows[i // nb][j // nb] * b.rows[i % nb][j % nb]
                for j in range(na * nb)
            ]
            for i in range(na * nb)
        ]
    )


def s3(v: int, y: int) -> RadMatrix:
    """Eigenvector matrix of lucas3(c, v, y): columns for 3c, +lambda, -lambda."""
    om = omega(v, y)
    one = RadicalSum(1)
    return RadMatrix(
        [
            [one, one + om, one - om],
            [one, RadicalSum(-2), RadicalSum(-2)],
            [one, one - om, one + om],
        ]
    )


def _u3() -> RadMatrix:
    h, s2, s6 = Fraction(1, 3), Fraction(1, 2), Fraction(1, 6)
    return RadMatrix(
        [
            [Radical(h, 3), Radical(-s2, 2), Radical(s6, 6)],
            [Radical(h, 3), 0, Radical(-h, 6)],
            [Radical(h, 3), Radical(s2, 2), Radical(s6, 6)],
        ]
    )


def _v3() -> RadMatrix:
    h, s2, s6 = Fraction(1, 3), Fraction(1, 2), Fraction(1, 6)
    return RadMatrix(
        [
            [Radical(h, 3), Radical(-s6, 6), Radical(s2, 2)],
            [Radical(h, 3), Radical(h, 6), 0],
            [Radical(h, 3), Radical(-s6, 6), Radical(-s2, 2)],
        ]
    )


U3 = _u3()
V3 = _v3()


@dataclass(frozen=True)
class DecompositionMatrices:
    """One decomposition's factors; S/D for the Jordan form, U/V/sigma for
    the SVD (the unused fields are None)."""

    s: RadMatrix | None = None
    d: tuple[Radical, ...] | None = None
    u: RadMatrix | None = None
    v: RadMatrix | None = None
    sigma: tuple[Radical, ...] | None = None


def jcf_matrices(triples) -> DecompositionMatrices:
    """Eigenvector matrix S and eigenvalue diagonal D with M S = S D.

    Refused (ValueError) when any level has v^2 = y^2: the eigenvector
    offset Omega is undefined there.
    """
    triples = normalize_triples(triples)
    for c, v, y in triples:
        if v * v == y * y:
            raise ValueError(
                f"degenerate level (v, y) = ({v}, {y}): eigenvector matrix undefined"
            )
    s = s3(triples[-1][1], triples[-1][2])
    for c, v, y in reversed(triples[:-1]):
        s = rad_kron(s, s3(v, y))
    diag = _tagged_diagonal(triples, _jcf_pair)
    order = _block_order(diag)
    return DecompositionMatrices(
        s=s.permute_columns(order),
        d=tuple(diag[i][0] for i in order),
    )


def svd_matrices(triples) -> DecompositionMatrices:
    """Orthogonal U, V and nonnegative diagonal sigma with U diag(sigma) V^T = M.

    The raw Kronecker recursion produces signed diagonal entries; each
    negative one is negated together with its U column.
    """
    triples = normalize_triples(triples)
    u = U3
    v = V3
    for _ in triples[1:]:
        u = rad_kron(U3, u)
        v = rad_kron(V3, v)
    diag = _tagged_diagonal(triples, _svd_pair)
    signs = [
        -1 if (val.is_real() and val.coeff < 0) else 1 for val, _ in diag
    ]
    u = u.scale_columns(signs)
    fixed = [(abs(val), tag) for val, tag in diag]
    order = _block_order(fixed)
    return DecompositionMatrices(
        u=u.permute_columns(order),
        v=v.permute_columns(order),
        sigma=tuple(fixed[i][0] for i in order),
    )


# ---------------------------------------------------------------------------
# Numeric residuals (floating point enters here only)
# ---------------------------------------------------------------------------


def _diag_complex(values) -> np.ndarray:
    return np.diag([complex(r) for r in values])


def jcf_residual(m: SquareMatrix, dec: DecompositionMatrices) -> float:
    """|| M S - S D ||_F / || M ||_F in floating point."""
    a = np.array(m.to_lists(), dtype=float)
    s = dec.s.to_complex()
    d = _diag_complex(dec.d)
    return float(np.linalg.norm(a @ s - s @ d) / np.linalg.norm(a))


def svd_residual(m: SquareMatrix, dec: DecompositionMatrices) -> float:
    """|| U Sigma V^T - M ||_F / || M ||_F in floating point."""
    a = np.array(m.to_lists(), dtype=float)
    u = dec.u.to_complex().real
    v = dec.v.to_complex().real
    sig = _diag_complex(dec.sigma).real
    return float(np.linalg.norm(u @ sig @ v.T - a) / np.linalg.norm(a))


def orthonormality_residual(mat: RadMatrix) -> float:
    """|| Q^T Q - I ||_F for a real radical matrix Q."""
    q = mat.to_complex().real
    return float(np.linalg.norm(q.T @ q - np.eye(mat.n)))


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpectrumReport:
    order: int
    mu: int
    eigenvalues: tuple[Radical, ...]
    singular_values: tuple[Radical, ...]
    rank: int
    jcf_residual: float | None  # None when the eigenvector matrix is refused
    svd_residual: float

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "mu": self.mu,
            "eigenvalues": [_radical_json(r) for r in self.eigenvalues],
            "singular_values": [_radical_json(r) for r in self.singular_values],
            "rank": self.rank,
            "jcf_residual": self.jcf_residual,
            "svd_residual": self.svd_residual,
        }


def _radical_json(r: Radical) -> dict:
    z = complex(r)
    return {"exact": str(r), "approx": [z.real, z.imag]}


def spectrum_report(triples) -> SpectrumReport:
    triples = normalize_triples(triples)
    m = lucas(triples)
    svs = singular_values(triples)
    try:
        jr = jcf_residual(m, jcf_matrices(triples))
    except ValueError:
        jr = None
    return SpectrumReport(
        order=m.n,
        mu=magic_index(triples),
        eigenvalues=tuple(eigenvalues(triples)),
        singular_values=tuple(svs),
        rank=nonzero_count(svs),
        jcf_residual=jr,
        svd_residual=svd_residual(m, svd_matrices(triples)),
    )


def table1_row(v: int, y: int, s: int, t: int) -> dict:
    """|lambda_1|, |lambda_2| and sigma_2..sigma_5 / sqrt(3) for an order-9
    Frierson square, in the layout the ``tables`` command prints."""
    evs = eigenvalues([(v + y, v, y), (s + t, s, t)])
    svs = singular_values([(v + y, v, y), (s + t, s, t)])
    sig_over_sqrt3 = []
    for r in svs[1:5]:
        if r.radicand not in (0, 3):
            raise AssertionError("sigma/sqrt(3) is not rational")
        sig_over_sqrt3.append(0 if r.is_zero() else int(r.coeff))
    return {
        "set": (v, y, s, t),
        "abs_lambda1": str(abs(evs[1])),
        "abs_lambda2": str(abs(evs[3])),
        "sigma_over_sqrt3": sig_over_sqrt3,
    }


# ---------------------------------------------------------------------------
# Matrix powers and the order-3 inverse
# ---------------------------------------------------------------------------


def matrix_power(triples, k: int) -> SquareMatrix:
    """The k-th power of lucas(triples).

    Levels 1 and 2 use the closed forms (odd/even branches); higher levels
    fall back to exact repeated multiplication.
    """
    triples = normalize_triples(triples)
    if k < 1:
        raise ValueError("power must be a positive integer")
    if len(triples) == 1:
        return _power3(*triples[0], k)
    if len(triples) == 2:
        return _power9(triples[0], triples[1], k)
    return lucas(triples) ** k


def _power3(c: int, v: int, y: int, n: int) -> SquareMatrix:
    e = SquareMatrix.all_ones(3)
    disc = v * v - y * y
    tail = 3 ** (n - 1) * c ** n
    if n % 2:
        head = 3 ** ((n - 1) // 2) * disc ** ((n - 1) // 2)
        return head * (lucas3(c, v, y) - c * e) + tail * e
    head = 3 ** (n // 2 - 1) * disc ** (n // 2)
    return head * (3 * SquareMatrix.identity(3) - e) + tail * e


def _power9(inner, outer, n: int) -> SquareMatrix:
    c, v, y = inner
    d, s, t = outer
    e3 = SquareMatrix.all_ones(3)
    i3 = SquareMatrix.identity(3)
    e9 = SquareMatrix.all_ones(9)
    disc_a = v * v - y * y
    disc_b = s * s - t * t
    tail = 9 ** (n - 1) * (c + d) ** n
    if n % 2:
        f = 3 ** (3 * (n - 1) // 2)
        a9 = kron(e3, lucas3(c, v, y))
        b9 = kron(lucas3(d, s, t), e3)
        return (
            f * disc_a ** ((n - 1) // 2) * (a9 - c * e9)
            + f * disc_b ** ((n - 1) // 2) * (b9 - d * e9)
            + tail * e9
        )
    f = 3 ** (3 * n // 2 - 2)
    return (
        f * disc_a ** (n // 2) * (3 * kron(e3, i3) - e9)
        + f * disc_b ** (n // 2) * (3 * kron(i3, e3) - e9)
        + tail * e9
    )


def lucas3_inverse(c: int, v: int, y: int) -> SquareMatrix:
    """Exact inverse of lucas3(c, v, y); needs c != 0 and v^2 != y^2.

    (The determinant is 9c(v^2 - y^2) up to sign, so both conditions are
    genuinely required even though only one is obvious from the formula.)
    """
    disc = v * v - y * y
    if c == 0 or disc == 0:
        raise ValueError("lucas3 is singular when c = 0 or v^2 = y^2")
    den = Fraction(1, 9 * c * disc)
    e = SquareMatrix.all_ones(3)
    return den * (3 * c * lucas3(c, v, y) + (disc - 3 * c * c) * e)
