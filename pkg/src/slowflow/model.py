"""Planar slow-flow model: parameters, states, vector field, and Hamiltonian.

The system is the two-dimensional flow

    a' =  b/2 - (3C/8) (a^2 + b^2) b - J/2 + (B/2) sin(gamma)
    b' = -a/2 + (3C/8) (a^2 + b^2) a - A/2 - (B/2) cos(gamma)

which is Hamiltonian: (a', b') = (dh/db, -dh/da) with

    h = (a^2+b^2)/4 - (3C/32)(a^2+b^2)^2 + (b/2)(B sin g - J) + (a/2)(A + B cos g).

The canonical substitution a = sqrt(2 rho) cos(theta), b = sqrt(2 rho) sin(theta)
puts h into action-angle-like form; those polar operations live here too.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DegenerateAngleError, SingularRadiusError

__all__ = [
    "SystemParams",
    "CartesianState",
    "PolarState",
    "Jacobian2",
    "vector_field",
    "jacobian",
    "hamiltonian_cartesian",
    "hamiltonian_polar",
    "to_polar",
    "from_polar",
    "drive_strength",
    "rho_dot",
    "theta_dot",
]


@dataclass(frozen=True)
class SystemParams:
    """Parameters of the slow flow.

    A, B  : drive amplitudes
    J     : detuning-like offset
    gamma : drive phase (radians)
    C     : cubic stiffness coefficient, must be positive
    """

    A: float
    B: float
    J: float
    gamma: float
    C: float

    def __post_init__(self) -> None:
        for name in ("A", "B", "J", "gamma", "C"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"parameter {name} must be finite")
        if self.C <= 0:
            raise ValueError("C must be positive")

    @property
    def sin_drive(self) -> float:
        """Coefficient of sin(theta) in the polar drive term: B sin(gamma) - J."""
        return self.B * math.sin(self.gamma) - self.J

    @property
    def cos_drive(self) -> float:
        """Coefficient of cos(theta) in the polar drive term: A + B cos(gamma)."""
        return self.A + self.B * math.cos(self.gamma)


@dataclass(frozen=True)
class CartesianState:
    a: float
    b: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.a) and math.isfinite(self.b)):
            raise ValueError("state components must be finite")


@dataclass(frozen=True)
class PolarState:
    """Action-like radius rho = (a^2+b^2)/2 and angle theta.

    theta is stored unreduced (not wrapped into [0, 2pi)) so that integrated
    phase histories stay continuous; wrapping is a display concern.
    """

    rho: float
    theta: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.rho) and math.isfinite(self.theta)):
            raise ValueError("state components must be finite")
        if self.rho < 0:
            raise ValueError("rho must be non-negative")


@dataclass(frozen=True)
class Jacobian2:
    """Jacobian of the flow; daa = d(a')/da, dab = d(a')/db, and so on."""

    daa: float
    dab: float
    dba: float
    dbb: float

    @property
    def trace(self) -> float:
        return self.daa + self.dbb

    @property
    def det(self) -> float:
        return self.daa * self.dbb - self.dab * self.dba


def vector_field(s: CartesianState, p: SystemParams) -> tuple[float, float]:
    """Right-hand side (a', b') of the flow at a Cartesian state."""
    r2 = s.a * s.a + s.b * s.b
    cubic = (3.0 * p.C / 8.0) * r2
    da = s.b / 2.0 - cubic * s.b + p.sin_drive / 2.0
    db = -s.a / 2.0 + cubic * s.a - p.cos_drive / 2.0
    return da, db


def jacobian(s: CartesianState, p: SystemParams) -> Jacobian2:
    """Analytic Jacobian of the vector field.

    The diagonal entries cancel, so the trace is zero by construction
    (Hamiltonian flow); dbb is set to -daa rather than recomputed.
    """
    a, b = s.a, s.b
    c38 = 3.0 * p.C / 8.0
    daa = -2.0 * c38 * a * b
    dab = 0.5 - c38 * (a * a + 3.0 * b * b)
    dba = -0.5 + c38 * (3.0 * a * a + b * b)
    return Jacobian2(daa=daa, dab=dab, dba=dba, dbb=-daa)


def hamiltonian_cartesian(s: CartesianState, p: SystemParams) -> float:
    """Conserved energy h(a, b)."""
    r2 = s.a * s.a + s.b * s.b
    return (r2 / 4.0 - (3.0 * p.C / 32.0) * r2 * r2
            + s.b * p.sin_drive / 2.0 + s.a * p.cos_drive / 2.0)


def hamiltonian_polar(s: PolarState, p: SystemParams) -> float:
    """Conserved energy in polar form.

    h = rho/2 - (3C/8) rho^2 + (sqrt(2 rho)/2)(sin(theta) X + cos(theta) Y)
    with X = B sin(gamma) - J and Y = A + B cos(gamma).
    """
    rho, th = s.rho, s.theta
    drive = math.sin(th) * p.sin_drive + math.cos(th) * p.cos_drive
    return rho / 2.0 - (3.0 * p.C / 8.0) * rho * rho + 0.5 * math.sqrt(2.0 * rho) * drive


def to_polar(s: CartesianState) -> PolarState:
    """Convert (a, b) to (rho, theta); the origin has no well-defined angle."""
    if s.a == 0.0 and s.b == 0.0:
        raise DegenerateAngleError("theta is undefined at the origin (rho = 0)")
    return PolarState(rho=(s.a * s.a + s.b * s.b) / 2.0, theta=math.atan2(s.b, s.a))


def from_polar(s: PolarState) -> CartesianState:
    r = math.sqrt(2.0 * s.rho)
    return CartesianState(a=r * math.cos(s.theta), b=r * math.sin(s.theta))


def drive_strength(p: SystemParams) -> float:
    """Squared magnitude of the constant drive, D = (A + B cos g)^2 + (J - B sin g)^2.

    D controls the equilibrium count (three real roots iff D < 16/(81 C)) and
    appears throughout the homoclinic construction.
    """
    return p.cos_drive * p.cos_drive + p.sin_drive * p.sin_drive


def rho_dot(s: PolarState, p: SystemParams) -> float:
    """Radial rate rho' = (sqrt(2 rho)/2)(X cos(theta) - Y sin(theta)).

    Equals a a' + b b' by the chain rule; the rotational and cubic terms of the
    flow are tangential and drop out.
    """
    rr = 0.5 * math.sqrt(2.0 * s.rho)
    return rr * (p.sin_drive * math.cos(s.theta) - p.cos_drive * math.sin(s.theta))


def theta_dot(s: PolarState, p: SystemParams) -> float:
    """Angular rate theta' = (a b' - b a')/(2 rho); singular at rho = 0."""
    if s.rho <= 0.0:
        raise SingularRadiusError("theta' is singular at rho = 0")
    rho, th = s.rho, s.theta
    drive = math.sin(th) * p.sin_drive + math.cos(th) * p.cos_drive
    num = rho - (3.0 * p.C / 2.0) * rho * rho + math.sqrt(rho / 2.0) * drive
    return -num / (2.0 * rho)
