"""Generalized partial-transposition engine: per-subsystem row/column
transpositions, composite transforms via index regrouping, realignment and
the SVD-based Kronecker-sum decomposition."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch
from .matlin import SubsystemDims, vec

# Singular values below this cutoff do not count toward the rank; inputs are
# unit-trace scale.
RANK_CUTOFF = 1e-12

FLAG_NAMES = ("rA", "cA", "rB", "cB")


@dataclass(frozen=True)
class GptOpSet:
    """A subset of the four transposition flags {rA, cA, rB, cB}."""

    rA: bool = False
    cA: bool = False
    rB: bool = False
    cB: bool = False

    @property
    def code(self) -> str:
        """Canonical text code, e.g. "cA,rB"; the empty set is "none"."""
        names = [name for name in FLAG_NAMES if getattr(self, name)]
        return ",".join(names) if names else "none"

    @classmethod
    def from_code(cls, code: str) -> "GptOpSet":
        """Parse a comma-separated flag code; "" and "none" mean the empty set."""
        text = code.strip()
        if text.lower() in ("", "none"):
            return cls()
        seen = set()
        for token in text.split(","):
            token = token.strip()
            if token not in FLAG_NAMES:
                raise ValueError(
                    f"unknown transposition flag {token!r}; expected one of {FLAG_NAMES}"
                )
            seen.add(token)
        return cls(**{name: name in seen for name in FLAG_NAMES})


def all_subsets() -> tuple[GptOpSet, ...]:
    """The 16 flag subsets in canonical counter order, rA the most
    significant bit and cB the least."""
    return tuple(
        GptOpSet(rA=bool(k & 8), cA=bool(k & 4), rB=bool(k & 2), cB=bool(k & 1))
        for k in range(16)
    )


def row_transposition(a) -> np.ndarray:
    """Whole-matrix row transposition: the 1-by-(rows*cols) row vec(a)^t."""
    return vec(a).T


def col_transposition(a) -> np.ndarray:
    """Whole-matrix column transposition: the (rows*cols)-by-1 column vec(a)."""
    return vec(a)


def double_transposition(a) -> np.ndarray:
    """Row and column transpositions applied jointly, in either order.

    The row transposition leaves a single row whose composite column index
    puts the original column digit above the original row digit; pulling
    the column digit back out as the row index yields the plain transpose.
    The two moves act on different slots, so the order does not matter.
    """
    a = np.asarray(a, dtype=complex)
    rows, cols = a.shape
    return row_transposition(a).reshape(cols, rows)


def _require_square(rho, dims: SubsystemDims) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    d = dims.total
    if rho.shape != (d, d):
        raise DimensionMismatch(
            f"matrix is {rho.shape}; dims ({dims.m}, {dims.n}) require ({d}, {d})"
        )
    return rho


def gpt_transform(rho, dims: SubsystemDims, y: GptOpSet) -> np.ndarray:
    """Apply the composite transposition selected by y as one index regrouping.

    Entries rho[(i,mu),(j,nu)] are addressed with composite row index i*n+mu
    and column index j*n+nu.  Each active flag moves one index slot to the
    other group: rA moves i to the columns, cA moves j to the rows, rB moves
    mu to the columns, cB moves nu to the rows.  Within a group, A-derived
    digits are higher-order than B-derived ones, and the column-origin digit
    of a subsystem (j or nu) outranks its row-origin digit (i or mu).  This
    reproduces the standard partial transpose for {rA,cA} and the
    realignment layout for {cA,rB} entry for entry; the flags act on
    disjoint slots, so the result is independent of application order.
    """
    m, n = dims.m, dims.n
    rho = _require_square(rho, dims)
    t = rho.reshape(m, n, m, n)  # axes (i, mu, j, nu)
    # Digits from highest to lowest order: j, i, nu, mu as (axis, size, in rows?).
    digits = ((2, m, y.cA), (0, m, not y.rA), (3, n, y.cB), (1, n, not y.rB))
    row_axes = [axis for axis, _, in_rows in digits if in_rows]
    col_axes = [axis for axis, _, in_rows in digits if not in_rows]
    rows = 1
    for _, size, in_rows in digits:
        if in_rows:
            rows *= size
    return t.transpose(row_axes + col_axes).reshape(rows, (m * m * n * n) // rows)


def realign(rho, dims: SubsystemDims) -> np.ndarray:
    """Realigned m^2-by-n^2 matrix whose rows are the vec'd n-by-n blocks.

    Row j*m+i holds vec(block at block position (i, j))^t, so
    realign(A kron B) = vec(A) vec(B)^t.
    """
    m, n = dims.m, dims.n
    rho = _require_square(rho, dims)
    out = np.empty((m * m, n * n), dtype=complex)
    for j in range(m):
        for i in range(m):
            block = rho[i * n:(i + 1) * n, j * n:(j + 1) * n]
            out[j * m + i, :] = block.reshape(-1, order="F")
    return out


def partial_transpose(rho, dims: SubsystemDims, which: str = "A") -> np.ndarray:
    """Transpose the indices of one subsystem only; an involution."""
    m, n = dims.m, dims.n
    rho = _require_square(rho, dims)
    t = rho.reshape(m, n, m, n)
    if which == "A":
        return t.transpose(2, 1, 0, 3).reshape(m * n, m * n)
    if which == "B":
        return t.transpose(0, 3, 2, 1).reshape(m * n, m * n)
    raise ValueError(f"which must be 'A' or 'B', got {which!r}")


@dataclass(frozen=True)
class KronTermList:
    """Factor pairs (X_i, Y_i) with Z = sum_i X_i kron Y_i, one pair per
    singular value above the rank cutoff."""

    terms: tuple[tuple[np.ndarray, np.ndarray], ...]
    sigma: tuple[float, ...]

    def reconstruct(self) -> np.ndarray:
        if not self.terms:
            raise ValueError("no terms above the rank cutoff; nothing to reconstruct")
        total = np.kron(*self.terms[0])
        for x, yi in self.terms[1:]:
            total = total + np.kron(x, yi)
        return total


def kron_decompose(z, dims: SubsystemDims) -> KronTermList:
    """Nearest-Kronecker-sum decomposition via the SVD of the realignment.

    With realign(z) = sum_i sigma_i u_i v_i^dagger, the factors are
    vec(X_i) = sqrt(sigma_i) u_i and vec(Y_i) = sqrt(sigma_i) conj(v_i).
    """
    z = _require_square(z, dims)
    zh = realign(z, dims)
    u, s, vh = np.linalg.svd(zh)
    terms: list[tuple[np.ndarray, np.ndarray]] = []
    kept: list[float] = []
    for idx in range(s.size):
        sig = float(s[idx])
        if sig <= RANK_CUTOFF:
            break
        root = np.sqrt(sig)
        x = (root * u[:, idx]).reshape(dims.m, dims.m, order="F")
        yi = (root * vh[idx, :]).reshape(dims.n, dims.n, order="F")
        terms.append((x, yi))
        kept.append(sig)
    return KronTermList(terms=tuple(terms), sigma=tuple(kept))
