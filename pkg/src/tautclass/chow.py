"""Exact graded class arithmetic on projectivised tangent bundles.

A variety X of dimension n enters all computations through a
:class:`BaseProfile`: an ordered divisor basis, the top intersection form on
degree-n monomials, and the Chern classes of the tangent bundle.  Classes on
the projectivisation P(T_X) are sparse polynomials in the tautological class
``zeta`` and pulled-back divisors, with ``fractions.Fraction`` coefficients.
No floating point is used anywhere.

Sign convention
---------------
P(T_X) -> X is the projectivisation parametrising rank-one quotients, and
zeta = c_1(O(1)).  Degree-(2n-1) products are evaluated through the
pushforward rule

    pi_* (zeta^(n-1+j) . pi^* a) = s_j(Omega_X) . a,

where the Segre classes of the cotangent bundle are the series inverse
s(Omega_X) = 1 / c(Omega_X), with c_j(Omega_X) = (-1)^j c_j(T_X).  Monomials
whose zeta-power is below n-1 push forward to zero.  This is the single
source of sign truth for the whole package; it is pinned by two anchor
values that the test suite treats as mandatory: zeta^3 = -6 on the
cubic-surface profile and zeta^5 = -78 on the degree-1 del Pezzo threefold
profile.

All values in this module are immutable and hashable, so they can be shared
freely across threads or processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping, Union

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]


class DegreeMismatchError(ValueError):
    """Raised when a class fails a homogeneity or degree requirement."""


class ProfileMismatchError(ValueError):
    """Raised when values attached to different profiles are combined."""


def as_fraction(value: Scalar | str) -> Fraction:
    """Coerce an int, Fraction or 'p/q' string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if "." in value:
            raise ValueError(f"decimal literals are not exact: {value!r}")
        return Fraction(value)
    raise TypeError(f"not an exact scalar: {value!r}")


def fraction_str(value: Fraction) -> str:
    """Serialize a Fraction as a decimal-free 'p/q' (or bare 'p') string."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _add_exponents(a: Exponents, b: Exponents) -> Exponents:
    return tuple(x + y for x, y in zip(a, b))


@dataclass(frozen=True)
class BasePoly:
    """Formal polynomial in the divisor basis of a profile.

    Terms are stored as a sorted tuple of (exponent vector, coefficient)
    pairs with all coefficients nonzero, so equal polynomials compare and
    hash equal.
    """

    nsyms: int
    terms: tuple[tuple[Exponents, Fraction], ...]

    @staticmethod
    def make(nsyms: int, terms: Mapping[Exponents, Scalar]) -> "BasePoly":
        collected: dict[Exponents, Fraction] = {}
        for exps, coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nsyms:
                raise ValueError(f"exponent vector {exps} has length != {nsyms}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            q = as_fraction(coeff)
            if q:
                collected[exps] = collected.get(exps, Fraction(0)) + q
        normalized = tuple(sorted((e, c) for e, c in collected.items() if c))
        return BasePoly(nsyms, normalized)

    @staticmethod
    def zero(nsyms: int) -> "BasePoly":
        return BasePoly(nsyms, ())

    @staticmethod
    def constant(nsyms: int, value: Scalar) -> "BasePoly":
        return BasePoly.make(nsyms, {(0,) * nsyms: value})

    @staticmethod
    def symbol(nsyms: int, index: int) -> "BasePoly":
        exps = tuple(1 if i == index else 0 for i in range(nsyms))
        return BasePoly.make(nsyms, {exps: 1})

    def items(self) -> Iterator[tuple[Exponents, Fraction]]:
        return iter(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def homogeneous_degree(self) -> int | None:
        """Common degree of all terms, None for the zero polynomial."""
        degrees = {sum(e) for e, _ in self.terms}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise DegreeMismatchError(
                f"polynomial mixes degrees {sorted(degrees)}")
        return degrees.pop()

    def is_homogeneous(self, degree: int) -> bool:
        return all(sum(e) == degree for e, _ in self.terms)

    def _check(self, other: "BasePoly") -> None:
        if self.nsyms != other.nsyms:
            raise ValueError("polynomials over different bases")

    def __add__(self, other: "BasePoly") -> "BasePoly":
        self._check(other)
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, Fraction(0)) + c
        return BasePoly.make(self.nsyms, acc)

    def __sub__(self, other: "BasePoly") -> "BasePoly":
        return self + (-other)

    def __neg__(self) -> "BasePoly":
        return BasePoly(self.nsyms, tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other: "BasePoly | Scalar") -> "BasePoly":
        if isinstance(other, (int, Fraction)):
            q = as_fraction(other)
            if not q:
                return BasePoly.zero(self.nsyms)
            return BasePoly(self.nsyms, tuple((e, c * q) for e, c in self.terms))
        self._check(other)
        acc: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = _add_exponents(e1, e2)
                acc[e] = acc.get(e, Fraction(0)) + c1 * c2
        return BasePoly.make(self.nsyms, acc)

    def __rmul__(self, other: Scalar) -> "BasePoly":
        return self * other

    def __pow__(self, power: int) -> "BasePoly":
        if power < 0:
            raise ValueError("negative power")
        result = BasePoly.constant(self.nsyms, 1)
        for _ in range(power):
            result = result * self
        return result


@dataclass(frozen=True)
class BaseProfile:
    """Finite intersection-theoretic presentation of a variety.

    ``top_form`` assigns a rational number to degree-``dim`` exponent
    vectors over ``basis`` (missing monomials evaluate to zero); keying by
    exponent vector makes the form symmetric by construction.  ``chern``
    lists c_1..c_n of the tangent bundle, entry j homogeneous of degree j.
    ``canonical`` optionally records the canonical divisor class for use by
    the expression parser.
    """

    label: str
    dim: int
    basis: tuple[str, ...]
    top_form: tuple[tuple[Exponents, Fraction], ...]
    chern: tuple[BasePoly, ...]
    canonical: BasePoly | None = None

    @staticmethod
    def make(label: str,
             dim: int,
             basis: Iterable[str],
             top_form: Mapping[Exponents, Scalar],
             chern: Iterable[BasePoly],
             canonical: BasePoly | None = None) -> "BaseProfile":
        basis = tuple(basis)
        if dim < 1:
            raise ValueError("dim must be positive")
        if len(set(basis)) != len(basis) or not basis:
            raise ValueError("basis symbols must be distinct and nonempty")
        nsyms = len(basis)
        form: dict[Exponents, Fraction] = {}
        for exps, value in top_form.items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nsyms or any(e < 0 for e in exps):
                raise ValueError(f"bad top_form exponents {exps}")
            if sum(exps) != dim:
                raise ValueError(
                    f"top_form entry {exps} has degree {sum(exps)} != {dim}")
            q = as_fraction(value)
            if q:
                form[exps] = q
        chern = tuple(chern)
        if len(chern) != dim:
            raise ValueError(f"need exactly {dim} Chern entries, got {len(chern)}")
        for j, poly in enumerate(chern, start=1):
            if poly.nsyms != nsyms:
                raise ValueError(f"c_{j} is over a different basis")
            if not poly.is_homogeneous(j):
                raise DegreeMismatchError(f"c_{j} is not homogeneous of degree {j}")
        if canonical is not None and not canonical.is_homogeneous(1):
            raise DegreeMismatchError("canonical class must have degree 1")
        return BaseProfile(label, dim, basis,
                           tuple(sorted(form.items())), chern, canonical)

    @property
    def nsyms(self) -> int:
        return len(self.basis)

    def symbol(self, name: str) -> BasePoly:
        return BasePoly.symbol(self.nsyms, self.basis.index(name))

    def evaluate(self, poly: BasePoly) -> Fraction:
        """Evaluate a homogeneous degree-n polynomial against the top form."""
        if poly.nsyms != self.nsyms:
            raise ValueError("polynomial over a different basis")
        if not poly.is_homogeneous(self.dim):
            raise DegreeMismatchError(
                f"top evaluation needs degree {self.dim}, "
                f"got degrees {sorted({sum(e) for e, _ in poly.terms})}")
        form = dict(self.top_form)
        return sum((c * form.get(e, Fraction(0)) for e, c in poly.terms),
                   Fraction(0))

    def chern_omega(self, j: int) -> BasePoly:
        """c_j of the cotangent bundle: (-1)^j c_j(T_X)."""
        if j == 0:
            return BasePoly.constant(self.nsyms, 1)
        poly = self.chern[j - 1]
        return poly if j % 2 == 0 else -poly

    def to_json(self) -> dict:
        def poly_json(poly: BasePoly) -> list[dict]:
            return [{"exponents": list(e), "value": fraction_str(c)}
                    for e, c in poly.terms]

        doc = {
            "label": self.label,
            "dim": self.dim,
            "basis": list(self.basis),
            "top_form": [{"exponents": list(e), "value": fraction_str(c)}
                         for e, c in self.top_form],
            "chern": [poly_json(p) for p in self.chern],
        }
        if self.canonical is not None:
            doc["canonical"] = poly_json(self.canonical)
        return doc

    @staticmethod
    def from_json(doc: Mapping) -> "BaseProfile":
        nsyms = len(doc["basis"])

        def poly_from(entries) -> BasePoly:
            return BasePoly.make(
                nsyms,
                {tuple(item["exponents"]): as_fraction(item["value"])
                 for item in entries})

        return BaseProfile.make(
            doc["label"],
            int(doc["dim"]),
            doc["basis"],
            {tuple(item["exponents"]): as_fraction(item["value"])
             for item in doc["top_form"]},
            [poly_from(entries) for entries in doc["chern"]],
            poly_from(doc["canonical"]) if "canonical" in doc else None,
        )


@dataclass(frozen=True)
class SegreVector:
    """Segre classes s_0..s_n of the cotangent bundle of a profile."""

    entries: tuple[BasePoly, ...]

    def __getitem__(self, j: int) -> BasePoly:
        return self.entries[j]

    def __len__(self) -> int:
        return len(self.entries)


@lru_cache(maxsize=None)
def segre_omega(profile: BaseProfile) -> SegreVector:
    """Invert the total Chern class of Omega_X as a truncated power series.

    Returns s_0..s_n with s_0 = 1 and, degree by degree,
    s_j = -(c_1(Omega) s_{j-1} + ... + c_j(Omega) s_0), so that the
    truncated product s(Omega) . c(Omega) equals 1.
    """
    n = profile.dim
    entries = [BasePoly.constant(profile.nsyms, 1)]
    for j in range(1, n + 1):
        acc = BasePoly.zero(profile.nsyms)
        for i in range(1, j + 1):
            acc = acc + profile.chern_omega(i) * entries[j - i]
        entries.append(-acc)
    return SegreVector(tuple(entries))


@dataclass(frozen=True)
class PTClass:
    """Sparse graded class on P(T_X) in zeta and pulled-back divisors.

    Terms map (zeta power, base exponent vector) to a Fraction; the class
    remembers the label of the profile it lives over, and arithmetic between
    classes over different profiles is rejected.
    """

    profile_label: str
    nsyms: int
    terms: tuple[tuple[tuple[int, Exponents], Fraction], ...]

    @staticmethod
    def make(profile_label: str, nsyms: int,
             terms: Mapping[tuple[int, Exponents], Scalar]) -> "PTClass":
        collected: dict[tuple[int, Exponents], Fraction] = {}
        for (zp, exps), coeff in terms.items():
            exps = tuple(int(e) for e in exps)
            if zp < 0 or len(exps) != nsyms or any(e < 0 for e in exps):
                raise ValueError(f"bad term key ({zp}, {exps})")
            q = as_fraction(coeff)
            if q:
                key = (int(zp), exps)
                collected[key] = collected.get(key, Fraction(0)) + q
        normalized = tuple(sorted((k, c) for k, c in collected.items() if c))
        return PTClass(profile_label, nsyms, normalized)

    @staticmethod
    def zero(profile: BaseProfile) -> "PTClass":
        return PTClass(profile.label, profile.nsyms, ())

    @staticmethod
    def one(profile: BaseProfile) -> "PTClass":
        return PTClass.make(profile.label, profile.nsyms,
                            {(0, (0,) * profile.nsyms): 1})

    @staticmethod
    def zeta(profile: BaseProfile, power: int = 1) -> "PTClass":
        return PTClass.make(profile.label, profile.nsyms,
                            {(power, (0,) * profile.nsyms): 1})

    @staticmethod
    def pullback(profile: BaseProfile, poly: BasePoly) -> "PTClass":
        if poly.nsyms != profile.nsyms:
            raise ValueError("polynomial over a different basis")
        return PTClass.make(profile.label, profile.nsyms,
                            {(0, e): c for e, c in poly.terms})

    def items(self) -> Iterator[tuple[tuple[int, Exponents], Fraction]]:
        return iter(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check(self, other: "PTClass") -> None:
        if self.profile_label != other.profile_label or self.nsyms != other.nsyms:
            raise ProfileMismatchError(
                f"classes over {self.profile_label!r} and "
                f"{other.profile_label!r} cannot be combined")

    def __add__(self, other: "PTClass") -> "PTClass":
        self._check(other)
        acc = dict(self.terms)
        for k, c in other.terms:
            acc[k] = acc.get(k, Fraction(0)) + c
        return PTClass.make(self.profile_label, self.nsyms, acc)

    def __sub__(self, other: "PTClass") -> "PTClass":
        return self + (-other)

    def __neg__(self) -> "PTClass":
        return PTClass(self.profile_label, self.nsyms,
                       tuple((k, -c) for k, c in self.terms))

    def __mul__(self, other: "PTClass | Scalar") -> "PTClass":
        if isinstance(other, (int, Fraction)):
            q = as_fraction(other)
            if not q:
                return PTClass(self.profile_label, self.nsyms, ())
            return PTClass(self.profile_label, self.nsyms,
                           tuple((k, c * q) for k, c in self.terms))
        self._check(other)
        acc: dict[tuple[int, Exponents], Fraction] = {}
        for (z1, e1), c1 in self.terms:
            for (z2, e2), c2 in other.terms:
                key = (z1 + z2, _add_exponents(e1, e2))
                acc[key] = acc.get(key, Fraction(0)) + c1 * c2
        return PTClass.make(self.profile_label, self.nsyms, acc)

    def __rmul__(self, other: Scalar) -> "PTClass":
        return self * other

    def __pow__(self, power: int) -> "PTClass":
        if power < 0:
            raise ValueError("negative power")
        result = PTClass.make(self.profile_label, self.nsyms,
                              {(0, (0,) * self.nsyms): 1})
        for _ in range(power):
            result = result * self
        return result

    def total_degrees(self) -> set[int]:
        return {zp + sum(e) for (zp, e), _ in self.terms}

    def homogeneous_degree(self) -> int | None:
        """Common total degree zeta-power + |monomial|, None if zero."""
        degrees = self.total_degrees()
        if not degrees:
            return None
        if len(degrees) > 1:
            raise DegreeMismatchError(
                f"class mixes total degrees {sorted(degrees)}")
        return degrees.pop()

    def zeta_coefficient(self, zeta_power: int) -> Fraction:
        """Coefficient of zeta^k with trivial base monomial."""
        key = (zeta_power, (0,) * self.nsyms)
        for k, c in self.terms:
            if k == key:
                return c
        return Fraction(0)

    def base_part(self, zeta_power: int) -> BasePoly:
        """The base polynomial multiplying zeta^k."""
        return BasePoly.make(
            self.nsyms,
            {e: c for (zp, e), c in self.terms if zp == zeta_power})


def _require_profile(profile: BaseProfile, cls: PTClass) -> None:
    if cls.profile_label != profile.label or cls.nsyms != profile.nsyms:
        raise ProfileMismatchError(
            f"class over {cls.profile_label!r} evaluated against "
            f"profile {profile.label!r}")


def eval_top(profile: BaseProfile, cls: PTClass) -> Fraction:
    """Intersection number of a homogeneous degree-(2n-1) class on P(T_X).

    Each monomial zeta^(n-1+j) . pi^* m pushes forward to s_j(Omega_X) . m,
    which is then evaluated against the top form; monomials with zeta-power
    below n-1 contribute zero.  The map is linear in the class.
    """
    _require_profile(profile, cls)
    n = profile.dim
    expected = 2 * n - 1
    degree = cls.homogeneous_degree()
    if degree is None:
        return Fraction(0)
    if degree != expected:
        raise DegreeMismatchError(
            f"eval_top on {profile.label!r} needs total degree "
            f"{expected} (= 2*{n}-1), got {degree}")
    segre = segre_omega(profile)
    total = Fraction(0)
    for (zp, exps), coeff in cls.terms:
        j = zp - (n - 1)
        if j < 0:
            continue
        mono = BasePoly.make(profile.nsyms, {exps: 1})
        total += coeff * profile.evaluate(segre[j] * mono)
    return total


def eval_product(profile: BaseProfile, factors: Iterable[PTClass]) -> Fraction:
    """Expand a product of classes and evaluate it with :func:`eval_top`."""
    result = PTClass.one(profile)
    for factor in factors:
        _require_profile(profile, factor)
        result = result * factor
    return eval_top(profile, result)


def fiber_line_degree(profile: BaseProfile, cls: PTClass) -> Fraction:
    """Degree of a divisor class on a line in a pi-fibre.

    zeta restricts to the hyperplane class of the fibre and pulled-back
    divisors restrict to zero, so a degree-1 class c.zeta + pi^* D pairs to c.
    """
    _require_profile(profile, cls)
    degree = cls.homogeneous_degree()
    if degree not in (None, 1):
        raise DegreeMismatchError(
            f"fibre-line pairing needs a degree-1 class, got degree {degree}")
    return cls.zeta_coefficient(1)


def restrict_to_section(splitting: Iterable[int], quotient_index: int,
                        eps: Scalar) -> Fraction:
    """Degree of zeta + eps.pi^*H on the section picked by a quotient.

    For a line l with H.l = 1 and T_X|_l splitting into line bundles of the
    given degrees, the section of P(T_X|_l) defined by the quotient onto the
    summand of degree a_q meets zeta + eps.pi^*H in degree a_q + eps.
    """
    degrees = tuple(int(a) for a in splitting)
    if not 0 <= quotient_index < len(degrees):
        raise IndexError(
            f"quotient index {quotient_index} out of range for a "
            f"{len(degrees)}-summand splitting")
    return degrees[quotient_index] + as_fraction(eps)


def dual_vmrt_generic(profile: BaseProfile, deg_e: int,
                      pushforward_c1: BasePoly) -> PTClass:
    """Divisor class of a total dual VMRT from its two ingredients.

    For a minimal rational curve family with generically finite evaluation
    map of degree deg_e, the total dual VMRT has class
    deg_e . zeta - pi^* (pushforward of c_1 of the relative tangent sheaf).
    """
    if deg_e <= 0:
        raise ValueError("deg_e must be a positive integer")
    if not pushforward_c1.is_homogeneous(1):
        raise DegreeMismatchError(
            "pushforward class must be homogeneous of degree 1")
    return (PTClass.zeta(profile) * deg_e
            - PTClass.pullback(profile, pushforward_c1))
