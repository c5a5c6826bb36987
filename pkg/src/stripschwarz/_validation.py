"""Input validation helpers.

Everything public accepts Python scalars or numpy arrays of complex points;
these helpers normalise the input and enforce domain membership so the
numerical kernels can assume clean ``complex128`` arrays.
"""
from enum import Enum

import numpy as np

from .exceptions import DomainError, InvalidParameterError

#: margin by which points must stay inside an open domain
EPS_DOM = 1e-12


class DomainTag(str, Enum):
    UNIT_DISC = "UnitDisc"
    STRIP = "Strip"
    PLANE = "Plane"

    def contains(self, other):
        """Whether ``other`` is a subset of this domain."""
        order = {DomainTag.UNIT_DISC: 0, DomainTag.STRIP: 1, DomainTag.PLANE: 2}
        return order[other] <= order[self]


def as_complex_array(z, name="z"):
    """Return ``z`` as a complex128 array, rejecting NaN and infinities."""
    arr = np.asarray(z, dtype=np.complex128)
    if not np.all(np.isfinite(arr)):
        raise DomainError(f"{name} contains non-finite values")
    return arr


def unwrap(arr, like=None):
    """Turn 0-d arrays back into numpy scalars; other arrays pass through."""
    return arr[()] if isinstance(arr, np.ndarray) else arr


def check_in_domain(z, domain, eps=EPS_DOM, closed=False, name="z"):
    """Validate membership of ``z`` in ``domain``.

    Open domains are shrunk by ``eps``; with ``closed=True`` the boundary is
    admitted (enlarged by ``eps`` instead).
    """
    arr = as_complex_array(z, name)
    domain = DomainTag(domain)
    if domain is DomainTag.PLANE:
        return arr
    size = np.abs(arr) if domain is DomainTag.UNIT_DISC else np.abs(arr.real)
    bad = size > 1.0 + eps if closed else size >= 1.0 - eps
    if np.any(bad):
        worst = arr.ravel()[np.argmax(bad.ravel())]
        raise DomainError(f"{name}={worst!r} lies outside {domain.value}")
    return arr


def check_disc_param(a, name="a"):
    a = complex(a)
    if not np.isfinite(a) or abs(a) >= 1.0:
        raise InvalidParameterError(f"{name} must satisfy |{name}| < 1, got {a!r}")
    return a


def check_open_interval(x, lo, hi, name):
    x = float(x)
    if not (lo < x < hi):
        raise InvalidParameterError(f"{name} must lie in ({lo}, {hi}), got {x!r}")
    return x


def check_at_least(x, lo, name):
    x = float(x)
    if not np.isfinite(x) or x < lo:
        raise InvalidParameterError(f"{name} must be >= {lo}, got {x!r}")
    return x


def check_positive(x, name):
    x = float(x)
    if not np.isfinite(x) or x <= 0:
        raise InvalidParameterError(f"{name} must be positive, got {x!r}")
    return x


def arg(z, convention="positive"):
    """Argument of ``z`` under one of two branch conventions.

    ``"positive"`` returns values in [0, 2*pi); ``"right"`` is the imaginary
    part of the logarithm on the right half-plane normalised by ``ln 1 = 0``,
    taking values in (-pi/2, pi/2).
    """
    arr = np.asarray(z, dtype=np.complex128)
    if convention == "positive":
        out = np.mod(np.angle(arr), 2.0 * np.pi)
        # mod can return exactly 2*pi for tiny negative angles
        out = np.where(out >= 2.0 * np.pi, 0.0, out)
    elif convention == "right":
        if np.any(arr.real <= 0):
            raise DomainError("right-half-plane argument needs Re z > 0")
        out = np.angle(arr)
    else:
        raise InvalidParameterError(f"unknown arg convention {convention!r}")
    return out[()] if out.ndim == 0 else out
