"""Grids, discrete measures and banded stencils shared by the polynomial families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import DegenerateGrid


@dataclass(frozen=True)
class SpectralGrid:
    """Ordered grid points ``points[s]`` for ``s = 0..N``."""

    points: tuple

    def __post_init__(self):
        object.__setattr__(self, "points", tuple(self.points))
        seen = {}
        for s, p in enumerate(self.points):
            if p in seen:
                raise DegenerateGrid(seen[p], s, p)
            seen[p] = s

    def __len__(self):
        return len(self.points)

    def __getitem__(self, s):
        return self.points[s]

    def __iter__(self):
        return iter(self.points)

    @property
    def N(self) -> int:
        return len(self.points) - 1

    def shifted(self, delta) -> tuple:
        return tuple(p + delta for p in self.points)


@dataclass(frozen=True)
class DiscreteMeasure:
    """Point masses ``weights[s]`` on a grid together with the total mass ``kappa0``."""

    weights: tuple
    kappa0: object

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(self.weights))

    @property
    def positive(self) -> bool:
        return all(w > 0 for w in self.weights)

    def total(self):
        return sum(self.weights[1:], self.weights[0])

    def inner(self, f: Sequence, g: Sequence):
        """Discrete inner product ``sum_s w_s f_s g_s`` of two sampled functions."""
        acc = 0
        for w, a, b in zip(self.weights, f, g, strict=True):
            acc = acc + w * a * b
        return acc


@dataclass(frozen=True)
class Stencil:
    """Banded difference operator ``f(s) -> sum_k c_k(s) (f(s+k) - f(s))``.

    ``coeffs`` maps each nonzero offset ``k`` to a length-(N+1) coefficient
    tuple. Coefficients that would reach outside ``0..N`` must be zero; that is
    checked here rather than silently truncated.
    """

    coeffs: Mapping[int, tuple]

    def __post_init__(self):
        frozen = {int(k): tuple(v) for k, v in sorted(self.coeffs.items())}
        lengths = {len(v) for v in frozen.values()}
        if len(lengths) != 1:
            raise ValueError("all coefficient rows must have the same length")
        if 0 in frozen:
            raise ValueError("offset 0 is implied by the row-sum structure")
        n = lengths.pop()
        for k, row in frozen.items():
            for s, c in enumerate(row):
                if not 0 <= s + k < n and c != 0:
                    raise ValueError(
                        f"coefficient for offset {k} at s={s} reaches outside the grid but equals {c}"
                    )
        object.__setattr__(self, "coeffs", frozen)

    @property
    def size(self) -> int:
        return len(next(iter(self.coeffs.values())))

    @property
    def offsets(self) -> tuple:
        return tuple(self.coeffs)

    def diagonal(self) -> tuple:
        rows = list(self.coeffs.values())
        out = []
        for s in range(self.size):
            acc = 0 * rows[0][s]
            for row in rows:
                acc = acc + row[s]
            out.append(-acc)
        return tuple(out)

    def apply(self, f: Sequence) -> list:
        n = self.size
        if len(f) != n:
            raise ValueError(f"expected {n} samples, got {len(f)}")
        out = []
        for s in range(n):
            acc = 0 * f[s]
            for k, row in self.coeffs.items():
                if 0 <= s + k < n and row[s] != 0:
                    acc = acc + row[s] * (f[s + k] - f[s])
            out.append(acc)
        return out

    def matrix(self) -> list:
        """Dense ``(N+1) x (N+1)`` matrix acting on column vectors of samples."""
        n = self.size
        diag = self.diagonal()
        rows = []
        for s in range(n):
            row = [0 * diag[s]] * n
            row[s] = diag[s]
            for k, coeff_row in self.coeffs.items():
                if 0 <= s + k < n:
                    row[s + k] = row[s + k] + coeff_row[s]
            rows.append(row)
        return rows


def bandwidth(matrix: Sequence[Sequence]) -> int:
    """Largest ``|i - j|`` over the nonzero entries (0 for a diagonal matrix)."""
    width = 0
    for i, row in enumerate(matrix):
        for j, v in enumerate(row):
            if v != 0:
                width = max(width, abs(i - j))
    return width
