"""The concrete umbrae used throughout: Bernoulli, Bell, Hermite M, Euler...

Each factory returns a fresh :class:`Umbra` under the requested symbol.
"""

from __future__ import annotations

from math import factorial

from . import sequences as seq
from .poly import Poly
from .umbra import Umbra, rising_umbra


def bernoulli_umbra(name: str = "B") -> Umbra:
    return Umbra(name, seq.bernoulli)


def bell_umbra(name: str = "B") -> Umbra:
    return Umbra(name, seq.bell)


def charlier_umbra(name: str = "A", param: str = "alpha") -> Umbra:
    """A^n = (param)_n."""
    return rising_umbra(name, param)


def factorial_umbra(name: str = "A") -> Umbra:
    """A^n = n!, the Charlier umbra at alpha = 1."""
    return Umbra(name, factorial)


def hermite_umbra(name: str = "M") -> Umbra:
    """e^{Mx} = e^{-x^2}: M^{2k} = (-1)^k (2k)!/k!, odd moments 0."""

    def mom(n: int) -> int:
        if n % 2:
            return 0
        k = n // 2
        return (-1) ** k * factorial(2 * k) // factorial(k)

    return Umbra(name, mom)


def euler_umbra(name: str = "E") -> Umbra:
    return Umbra(name, seq.euler)


def xsech_umbra(name: str = "F") -> Umbra:
    """e^{Fx} = x sech x; F^0 = 0, so eval(1) = 0."""
    return Umbra(name, seq.xsech)


def genocchi_umbra(name: str = "g") -> Umbra:
    return Umbra(name, seq.genocchi)


def xexp_umbra(name: str = "A") -> Umbra:
    """e^{Ax} = x e^{-x}: A^n = (-1)^{n-1} n, A^0 = 0."""
    return Umbra(name, lambda n: 0 if n == 0 else (-1) ** (n - 1) * n)


def sinh_umbra(name: str = "C") -> Umbra:
    """e^{Cx} = sinh x: C^n = 1 for odd n, 0 otherwise."""
    return Umbra(name, lambda n: n % 2)


def constant_one_umbra(name: str) -> Umbra:
    """e^{ux} = e^x: every moment is 1."""
    return Umbra(name, lambda n: 1)


def sequence_umbra(name: str, values) -> Umbra:
    """Umbra over an arbitrary integer/rational/Poly sequence callable."""
    return Umbra(name, lambda n: values(n) if isinstance(values(n), Poly) else Poly.const(values(n)))
