"""Continuous-time Laplacian quantum walks with exact revival certification.

The walk operator exp(-i t L) is evaluated in floating point through the
spectral decomposition supplied by an exact certificate.  Fractional-revival
and perfect-state-transfer checks, by contrast, are pure congruence
arithmetic on integer eigenvalues and exact rational multiples of 2*pi;
floats only ever appear in the final cross-validation of a certificate.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .diagonalise import SpectrumAssignment, regularity_check
from .errors import ChdError, ExactnessError, InternalCheckError, PreconditionError
from .graphs import AbelianGroup, WeightedGraph, cayley
from .hadamard import ButsonMatrix, verify

__all__ = [
    "RationalAngle",
    "FRCertificate",
    "evolve",
    "strongly_cospectral",
    "check_fr",
    "check_pst",
    "find_fr",
    "cayley_fr_conditions",
    "double_cover_fr",
    "adjacency_walk_relation",
]


class RationalAngle:
    """An angle that is an exact rational multiple of 2*pi.

    Stored canonically as num/den of a full turn with 0 <= num < den and
    gcd(num, den) = 1, so equality is equality modulo 2*pi.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int) -> None:
        if den == 0:
            raise ChdError("angle denominator must be nonzero")
        f = Fraction(num, den) % 1
        self.num = f.numerator
        self.den = f.denominator

    @classmethod
    def of_turn(cls, num: int, den: int) -> "RationalAngle":
        """The angle 2*pi * num/den."""
        return cls(num, den)

    @classmethod
    def of_pi(cls, num: int, den: int) -> "RationalAngle":
        """The angle pi * num/den."""
        return cls(num, 2 * den)

    @classmethod
    def zero(cls) -> "RationalAngle":
        return cls(0, 1)

    def turns(self) -> Fraction:
        return Fraction(self.num, self.den)

    def times(self, k: int) -> "RationalAngle":
        return RationalAngle(self.num * k, self.den)

    def plus(self, other: "RationalAngle") -> "RationalAngle":
        f = self.turns() + other.turns()
        return RationalAngle(f.numerator, f.denominator)

    def neg(self) -> "RationalAngle":
        return RationalAngle(-self.num, self.den)

    def is_zero(self) -> bool:
        return self.num == 0

    def is_zero_mod_pi(self) -> bool:
        return self.times(2).is_zero()

    def equals_mod_pi(self, other: "RationalAngle") -> bool:
        return self.times(2) == other.times(2)

    def signed_turns_mod_half(self) -> Fraction:
        """Representative of the angle modulo pi in the window (-1/4, 1/4]
        of a full turn, i.e. in (-pi/2, pi/2] as a real angle."""
        f = self.turns() % Fraction(1, 2)
        if f > Fraction(1, 4):
            f -= Fraction(1, 2)
        return f

    def to_float(self) -> float:
        return 2.0 * math.pi * self.num / self.den

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalAngle):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __repr__(self) -> str:
        return f"RationalAngle({self.num}/{self.den} of 2pi)"

    def display(self) -> str:
        return f"{self.num}/{self.den} of 2pi"


@dataclass(frozen=True)
class FRCertificate:
    """Witness that the walk sends e_a to alpha e_a + beta e_b at time tau.

    gamma parametrises the pair as alpha = cos(g) e^{ig},
    beta = -i sin(g) e^{ig} with g the representative of gamma in
    (-pi/2, pi/2]; consequently alpha + beta = 1 and
    alpha - beta = e^{2ig} identically, and beta != 0 iff gamma is not a
    multiple of pi.
    """

    a: int
    b: int
    tau: RationalAngle
    gamma: RationalAngle
    sign_pattern: tuple[int, ...]

    def gamma_signed(self) -> Fraction:
        return self.gamma.signed_turns_mod_half()

    @property
    def alpha(self) -> complex:
        g = 2.0 * math.pi * float(self.gamma_signed())
        return math.cos(g) * cmath.exp(1j * g)

    @property
    def beta(self) -> complex:
        g = 2.0 * math.pi * float(self.gamma_signed())
        return -1j * math.sin(g) * cmath.exp(1j * g)

    @property
    def is_pst(self) -> bool:
        return self.gamma_signed() == Fraction(1, 4)

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "tau": {"num": self.tau.num, "den": self.tau.den, "unit": "2pi"},
            "tau_str": self.tau.display(),
            "gamma": {"num": self.gamma.num, "den": self.gamma.den, "unit": "2pi"},
            "gamma_str": self.gamma.display(),
            "alpha": [self.alpha.real, self.alpha.imag],
            "beta": [self.beta.real, self.beta.imag],
            "pst": self.is_pst,
            "sign_pattern": list(self.sign_pattern),
        }


def evolve(
    g: WeightedGraph,
    h: ButsonMatrix,
    spectrum: SpectrumAssignment,
    t: float,
) -> np.ndarray:
    """The walk unitary exp(-i t M) computed spectrally as
    (1/n) H exp(-i t Lambda) H*."""
    if g.n != h.n or spectrum.n != g.n:
        raise ChdError("graph, matrix and spectrum orders must agree")
    hc = h.to_complex()
    lam = np.array([e.to_complex().real for e in spectrum.entries])
    phases = np.exp(-1j * t * lam)
    return (hc * phases[None, :]) @ hc.conj().T / g.n


def strongly_cospectral(h: ButsonMatrix, a: int, b: int) -> tuple[int, ...] | None:
    """Sign pattern sigma with H[a, j] = sigma_j H[b, j] if one exists.

    Decided exactly on the exponents: +1 where they agree, -1 where they
    differ by a half turn (possible only for even root order), else None.
    """
    if not verify(h):
        raise PreconditionError("strongly_cospectral needs a verified matrix")
    if not h.is_dephased():
        raise PreconditionError("strongly_cospectral needs a dephased matrix")
    n, r = h.n, h.r
    sigma = []
    for j in range(n):
        diff = (int(h.exps[a, j]) - int(h.exps[b, j])) % r
        if diff == 0:
            sigma.append(1)
        elif r % 2 == 0 and diff == r // 2:
            sigma.append(-1)
        else:
            return None
    return tuple(sigma)


def _integer_spectrum(spectrum: SpectrumAssignment) -> list[int]:
    return spectrum.integers()


def check_fr(
    g: WeightedGraph,
    h: ButsonMatrix,
    spectrum: SpectrumAssignment,
    a: int,
    b: int,
    tau: RationalAngle,
    gamma: RationalAngle,
) -> bool:
    """Exact test of fractional revival from a to b at time tau with phase
    gamma: plus-columns need tau * lambda_j = 0 (mod 2pi), minus-columns
    need -tau * lambda_j = 2 gamma (mod 2pi), the minus set must be
    nonempty and gamma must not be a multiple of pi (beta != 0)."""
    lam = _integer_spectrum(spectrum)
    sigma = strongly_cospectral(h, a, b)
    if sigma is None:
        return False
    if all(s == 1 for s in sigma):
        return False
    if gamma.is_zero_mod_pi():
        return False
    two_gamma = gamma.times(2)
    for s, l in zip(sigma, lam):
        if s == 1:
            if not tau.times(l).is_zero():
                return False
        else:
            if tau.times(-l) != two_gamma:
                return False
    return True


def check_pst(
    g: WeightedGraph,
    h: ButsonMatrix,
    spectrum: SpectrumAssignment,
    a: int,
    b: int,
    tau: RationalAngle,
) -> bool:
    """Perfect state transfer is fractional revival with gamma = pi/2."""
    return check_fr(g, h, spectrum, a, b, tau, RationalAngle.of_pi(1, 2))


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def find_fr(
    g: WeightedGraph, h: ButsonMatrix, spectrum: SpectrumAssignment
) -> list[FRCertificate]:
    """All fractional-revival certificates over strongly cospectral pairs.

    For a pair with plus-eigenvalues P and minus-eigenvalues M, every valid
    time is tau = 2*pi*s/q with q dividing gcd(P \\ {0}); when P = {0} the
    denominators are capped at the divisors of 2*lcm(M), which still captures
    every perfect-state-transfer time (a documented completeness boundary).
    A candidate is kept when all of M is one residue class mod q and the
    resulting phase is not a multiple of pi.  Each certificate is
    cross-validated against the floating-point walk to 1e-9.
    """
    lam = _integer_spectrum(spectrum)
    n = g.n
    out: list[FRCertificate] = []
    for a in range(n):
        for b in range(a + 1, n):
            sigma = strongly_cospectral(h, a, b)
            if sigma is None:
                continue
            minus = sorted({l for s, l in zip(sigma, lam) if s == -1})
            if not minus or 0 in minus:
                continue
            plus_nonzero = sorted(
                {l for s, l in zip(sigma, lam) if s == 1 and l != 0}
            )
            if plus_nonzero:
                qs = _divisors(math.gcd(*plus_nonzero))
            else:
                qs = _divisors(2 * math.lcm(*minus))
            for q in qs:
                for s in range(1, q):
                    if math.gcd(s, q) != 1:
                        continue
                    tau = RationalAngle.of_turn(s, q)
                    mu = minus[0]
                    if any((l - mu) * s % q for l in minus):
                        continue
                    gamma2 = tau.times(-mu)  # = 2*gamma mod 2pi
                    if gamma2.is_zero():
                        continue  # beta would vanish
                    gamma = _half_of(gamma2)
                    cert = FRCertificate(a, b, tau, gamma, sigma)
                    _cross_validate(g, h, spectrum, cert)
                    out.append(cert)
    return out


def _half_of(angle: RationalAngle) -> RationalAngle:
    """A gamma with 2*gamma equal to the given angle mod 2pi, reported as its
    canonical representative (the choice mod pi is immaterial)."""
    return RationalAngle(angle.num, 2 * angle.den)


def _cross_validate(g, h, spectrum, cert: FRCertificate) -> None:
    u = evolve(g, h, spectrum, cert.tau.to_float())
    target = np.zeros(g.n, dtype=complex)
    target[cert.a] = cert.alpha
    target[cert.b] = cert.beta
    err = np.max(np.abs(u[:, cert.a] - target))
    if err > 1e-9:
        raise InternalCheckError(
            f"certificate {cert} failed float validation (residual {err:.2e})"
        )


def cayley_fr_conditions(
    group: AbelianGroup, connection, a, b, tau: RationalAngle
) -> bool:
    """Fractional-revival test for a Cayley graph straight from the group
    data: integer spectrum, difference of order two, and the single-phase
    congruence on each character class."""
    g = cayley(group, connection)
    table_exps, r = _character_data(group)
    lam: list[int] = []
    els = group.elements()
    conn_idx = [group.index(c) for c in {group.normalise(c) for c in connection}]
    from .cyclotomic import CyclotomicInt

    d = len(conn_idx)
    for j in range(group.order):
        coeffs = [0] * r
        coeffs[0] += d
        for ci in conn_idx:
            coeffs[table_exps[ci][j] % r] -= 1
        val = CyclotomicInt(r, coeffs).as_rational()
        if val is None or val.denominator != 1:
            return False  # irrational eigenvalue: no revival is possible
        lam.append(int(val))
    diff = group.sub(group.normalise(a), group.normalise(b))
    if group.element_order(diff) != 2:
        return False
    # chi_j(a-b) = +-1 is forced by the order-two difference
    di = group.index(diff)
    sigma = []
    for j in range(group.order):
        e = table_exps[di][j] % r
        if e == 0:
            sigma.append(1)
        elif r % 2 == 0 and e == r // 2:
            sigma.append(-1)
        else:
            return False
    minus = sorted({l for s, l in zip(sigma, lam) if s == -1})
    if not minus or 0 in minus:
        return False
    for s_, l in zip(sigma, lam):
        if s_ == 1 and not tau.times(l).is_zero():
            return False
    mu = minus[0]
    if any(not tau.times(l - mu).is_zero() for l in minus):
        return False
    return not tau.times(mu).is_zero()


def _character_data(group: AbelianGroup):
    from .hadamard import character_table

    table = character_table(group.moduli)
    return table.exps, table.r


def double_cover_fr(
    g1: WeightedGraph,
    g2: WeightedGraph,
    h: ButsonMatrix,
    spectra: tuple[SpectrumAssignment, SpectrumAssignment],
    tau: RationalAngle,
) -> RationalAngle | None:
    """Revival phase for the two-layer cover of G1 and G2 at time tau.

    Both graphs must be certified by the same dephased matrix; the phase is
    -d2 * tau (mod pi) and exists iff tau * (lambda_j + mu_j) and
    tau * (lambda_j - mu_j) vanish mod 2pi for every column, and it is not a
    multiple of pi (otherwise the revival degenerates).  A found phase is
    re-checked through the direct revival test on the built cover."""
    spec1, spec2 = spectra
    if g1.n != g2.n or spec1.n != g1.n or spec2.n != g2.n:
        raise ChdError("double cover needs equal orders and matching spectra")
    lam = spec1.integers()
    mu = spec2.integers()
    d2 = regularity_check(g2)
    if d2 is None or d2.denominator != 1:
        raise ExactnessError("second layer must be regular with integer degree")
    for l, m in zip(lam, mu):
        if not tau.times(l + m).is_zero():
            return None
        if not tau.times(l - m).is_zero():
            return None
    gamma = tau.times(-int(d2))
    if gamma.is_zero_mod_pi():
        return None
    from .diagonalise import certify
    from .graphs import merge
    from .hadamard import double

    cover = merge(g1, g2, 1, 1)
    doubled = double(h)
    cover_spec = certify(cover, doubled)
    if cover_spec is None or not check_fr(
        cover, doubled, cover_spec, 0, g1.n, tau, gamma
    ):
        raise InternalCheckError(
            "congruences accepted a phase the direct cover test rejects"
        )
    return gamma


def adjacency_walk_relation(
    g: WeightedGraph,
    h: ButsonMatrix,
    spectrum: SpectrumAssignment,
    t: float,
) -> bool:
    """Float check that exp(-i t A) equals exp(-i d t) * conj(exp(-i t L))
    for a d-regular graph, both sides computed spectrally, to 1e-9."""
    d = regularity_check(g)
    if d is None:
        raise PreconditionError("the relation needs a regular graph")
    if spectrum.target != "laplacian":
        raise ChdError("supply the laplacian spectrum")
    hc = h.to_complex()
    lam = np.array([e.to_complex().real for e in spectrum.entries])
    mu = float(d) - lam
    ua = (hc * np.exp(-1j * t * mu)[None, :]) @ hc.conj().T / g.n
    ul = (hc * np.exp(-1j * t * lam)[None, :]) @ hc.conj().T / g.n
    rhs = cmath.exp(-1j * float(d) * t) * np.conj(ul)
    return bool(np.max(np.abs(ua - rhs)) <= 1e-9)
