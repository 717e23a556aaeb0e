"""Dense Laurent polynomials over the complex numbers.

A Laurent polynomial is stored as a contiguous coefficient block together
with the exponent of its first entry, so p = sum_j coeffs[j] * z**(min_deg+j).
The zero polynomial is canonically (min_deg=0, coeffs=[0]); for everything
else the first and last stored coefficients are nonzero (exact zeros are
trimmed on construction, never near-zeros).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

# Products whose result has at most this many coefficients go through
# schoolbook convolution; larger ones use the FFT path.
FFT_THRESHOLD = 64


def _as_coeff_array(coeffs) -> np.ndarray:
    arr = np.asarray(coeffs, dtype=np.complex128)
    if arr.ndim != 1:
        raise ValueError("coefficients must be one-dimensional")
    return arr


@dataclass(frozen=True)
class LaurentPoly:
    """Laurent polynomial sum_j coeffs[j] z^(min_deg+j), exact-zero trimmed.

    >>> p = LaurentPoly(-1, [1, 2, 1])   # z^-1 + 2 + z
    >>> p.min_deg, p.max_deg
    (-1, 1)
    """

    min_deg: int
    coeffs: np.ndarray = field(compare=False)

    def __post_init__(self):
        arr = _as_coeff_array(self.coeffs)
        nz = np.flatnonzero(arr)
        if nz.size == 0:
            object.__setattr__(self, "min_deg", 0)
            object.__setattr__(self, "coeffs", np.zeros(1, dtype=np.complex128))
            return
        lo, hi = nz[0], nz[-1] + 1
        object.__setattr__(self, "min_deg", int(self.min_deg) + int(lo))
        arr = arr[lo:hi].copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    @property
    def max_deg(self) -> int:
        return self.min_deg + len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    def coefficient(self, k: int) -> complex:
        """Coefficient of z^k (zero outside the stored block)."""
        j = k - self.min_deg
        if 0 <= j < len(self.coeffs):
            return complex(self.coeffs[j])
        return 0.0 + 0.0j

    def __add__(self, other):
        if isinstance(other, LaurentPoly):
            return lp_add(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, LaurentPoly):
            return lp_add(self, lp_scale(other, -1.0))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, LaurentPoly):
            return lp_mul(self, other)
        if isinstance(other, (int, float, complex)):
            return lp_scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __call__(self, z: complex) -> complex:
        return lp_eval(self, z)

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_deg == other.min_deg and np.array_equal(self.coeffs, other.coeffs)

    def __hash__(self):
        return hash((self.min_deg, self.coeffs.tobytes()))


ZERO = LaurentPoly(0, [0.0])
ONE = LaurentPoly(0, [1.0])


def monomial(c: complex, k: int) -> LaurentPoly:
    """c * z^k."""
    return LaurentPoly(k, [c])


def lp_scale(p: LaurentPoly, c: complex) -> LaurentPoly:
    return LaurentPoly(p.min_deg, p.coeffs * c)


def lp_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Coefficient-wise sum on the union of the two exponent ranges."""
    if p.is_zero:
        return q
    if q.is_zero:
        return p
    lo = min(p.min_deg, q.min_deg)
    hi = max(p.max_deg, q.max_deg)
    out = np.zeros(hi - lo + 1, dtype=np.complex128)
    out[p.min_deg - lo : p.min_deg - lo + len(p.coeffs)] += p.coeffs
    out[q.min_deg - lo : q.min_deg - lo + len(q.coeffs)] += q.coeffs
    return LaurentPoly(lo, out)


def lp_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """Product; schoolbook below FFT_THRESHOLD output span, FFT above."""
    if p.is_zero or q.is_zero:
        return ZERO
    n_out = len(p.coeffs) + len(q.coeffs) - 1
    if n_out <= FFT_THRESHOLD:
        out = np.convolve(p.coeffs, q.coeffs)
    else:
        m = 1
        while m < n_out:
            m *= 2
        fp = np.fft.fft(p.coeffs, m)
        fq = np.fft.fft(q.coeffs, m)
        out = np.fft.ifft(fp * fq)[:n_out]
    return LaurentPoly(p.min_deg + q.min_deg, out)


def lp_conj_flip(p: LaurentPoly) -> LaurentPoly:
    """The involution p*(z) = conj(p(1/conj(z))): reverse and conjugate.

    On the unit circle p*(z) = conj(p(z)).
    """
    return LaurentPoly(-p.max_deg, np.conj(p.coeffs[::-1]))


def lp_eval(p: LaurentPoly, z: complex) -> complex:
    """Horner evaluation; z = 0 with negative min_deg is a pole."""
    if p.is_zero:
        return 0.0 + 0.0j
    if z == 0:
        if p.min_deg < 0:
            raise ZeroDivisionError("evaluation at 0 with negative exponents")
        return complex(p.coeffs[0]) if p.min_deg == 0 else 0.0 + 0.0j
    acc = 0.0 + 0.0j
    for c in p.coeffs[::-1]:
        acc = acc * z + c
    return acc * z**p.min_deg


@dataclass(frozen=True)
class CircleGrid:
    """Equispaced nodes radius * exp(2 pi i m / size).

    Any positive size is accepted (the FFT below is mixed-radix); the
    default grid choosers round up to powers of two, but fidelity checks
    pinned to 4n nodes need other sizes too."""

    size: int
    radius: float = 1.0

    def __post_init__(self):
        if self.size <= 0:
            raise ValueError("grid size must be positive")
        if not (0.0 < self.radius <= 1.0):
            raise ValueError("grid radius must lie in (0, 1]")

    @property
    def nodes(self) -> np.ndarray:
        ang = 2.0 * np.pi * np.arange(self.size) / self.size
        return self.radius * np.exp(1j * ang)


def grid_size_for(span: int, minimum: int = 64) -> int:
    """Power of two >= max(4 * span, minimum)."""
    m = minimum
    while m < 4 * span:
        m *= 2
    return m


def lp_eval_grid(p: LaurentPoly, g: CircleGrid) -> np.ndarray:
    """Values of p at all grid nodes via a single inverse FFT.

    Coefficients are scaled by radius**exponent and folded into residue
    classes mod the grid size; folding is exact because the nodes are
    size-th roots of unity scaled by the radius.
    """
    m = g.size
    exps = np.arange(p.min_deg, p.min_deg + len(p.coeffs))
    if g.radius == 1.0:
        scaled = p.coeffs
    else:
        scaled = p.coeffs * np.power(g.radius, exps.astype(np.float64))
    folded = np.zeros(m, dtype=np.complex128)
    np.add.at(folded, exps % m, scaled)
    return np.fft.ifft(folded) * m
