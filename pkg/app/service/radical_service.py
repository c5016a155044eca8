import itertools
import logging
import re
from fractions import Fraction
from math import prod
from typing import Sequence

from app.entity.radical import Radical
from app.errors.business_exception import BusinessException, ErrorCodes
from app.schema.radical_dto import (DegreeReport, IndependenceCertificate, PairWitness, PositiveSumResult,
                                    ThetaMembership, fraction_text)
from app.schema.verdict import Rationality, Verdict
from app.service.number_core_service import NumberCoreService, number_core_service
from app.utils import relation_utils
from app.utils.lattice_utils import rational_lattice_index

_log = logging.getLogger(__name__)

_FACTOR_PATTERN = re.compile(r"^(\d+)(?:\^(?:\((-?\d+)(?:/(\d+))?\)|(-?\d+)(?:/(\d+))?))?$")


class RadicalService:
    """
    Independence and degree machinery for real radicals over Q.

    A set of real radicals that is pairwise linearly independent over Q is linearly independent,
    so every independence question here reduces to rationality of ratios, which the canonical
    exponent-map form turns into a denominator check.

    Attributes:
    number_core: NumberCoreService
        Factorization backend used to canonicalize bases
    """

    def __init__(self, number_core: NumberCoreService = number_core_service):
        self.number_core = number_core

    # region construction

    def radical_from(self, base: int, exponent: Fraction | int | str, sign: int = 1) -> Radical:
        exponent = Fraction(exponent)
        if base < 1:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"radical base must be >= 1, got {base}")
        if exponent <= 0:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"radical exponent must be positive, got {exponent}")
        factors = self.number_core.factor_dict(base)
        return Radical(sign, {p: e * exponent for p, e in factors.items()})

    def parse_radical(self, text: str) -> Radical:
        """
        Parse the text form [-]b1^(a1/c1)*b2^(a2/c2)*... where bases may be composite.

        :param text: e.g. "433^(1/6)", "-2^(1/2)*3^(-1/2)", "5"
        :return: canonical radical
        """
        body = text.strip().replace(" ", "")
        sign = 1
        if body.startswith("-"):
            sign, body = -1, body[1:]
        if not body:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"empty radical: {text!r}")
        result = Radical(sign)
        for token in body.split("*"):
            match = _FACTOR_PATTERN.match(token)
            if not match:
                raise BusinessException(ErrorCodes.INVALID_INPUT, f"cannot parse radical factor {token!r} in {text!r}")
            base = int(match.group(1))
            if base == 0:
                raise BusinessException(ErrorCodes.INVALID_INPUT, f"zero is not a radical: {text!r}")
            numerator, denominator = match.group(2, 3) if match.group(2) else match.group(4, 5)
            numerator = int(numerator) if numerator else 1
            denominator = int(denominator) if denominator else 1
            if denominator == 0:
                raise BusinessException(ErrorCodes.INVALID_INPUT, f"zero denominator in {token!r}")
            exponent = Fraction(numerator, denominator)
            factors = self.number_core.factor_dict(base)
            result = result * Radical(1, {p: e * exponent for p, e in factors.items()})
        return result

    @staticmethod
    def format_radical(a: Radical) -> str:
        return str(a)

    # endregion construction

    @staticmethod
    def root_degree(a: Radical) -> int:
        return a.root_degree()

    @staticmethod
    def is_rational(a: Radical) -> bool:
        return a.is_rational()

    @staticmethod
    def pairwise_independent(a: Radical, b: Radical) -> bool:
        """{a, b} is linearly independent over Q iff a/b is irrational. Signs never matter."""
        return not (a / b).is_rational()

    @staticmethod
    def pair_witness(a: Radical, b: Radical) -> PairWitness:
        ratio = a / b
        for p, e in ratio.items():
            if e.denominator != 1:
                return PairWitness(left=str(a), right=str(b), independent=True, prime=p, exponent=fraction_text(e))
        return PairWitness(left=str(a), right=str(b), independent=False, ratio=fraction_text(ratio.rational_value()))

    def theta_membership(self, elements: Sequence[Radical]) -> ThetaMembership:
        """
        Membership of a finite set of real radicals in the family of pairwise independent root sets over Q.

        Every radical has a finite root degree and the characteristic is 0, so only the size and the
        pairwise condition can fail.
        """
        _log.debug(f"RadicalService theta_membership of {len(elements)} elements")
        if len(elements) < 2:
            return ThetaMembership(member=False, size=len(elements), reason="fewer than two elements")
        for a, b in itertools.combinations(elements, 2):
            if not self.pairwise_independent(a, b):
                _log.debug(f"RadicalService dependent pair {a}, {b}")
                return ThetaMembership(member=False, size=len(elements), failing_pair=(str(a), str(b)),
                                       reason=f"{a} / {b} is rational")
        return ThetaMembership(member=True, size=len(elements))

    def independence_certificate(self, elements: Sequence[Radical]) -> IndependenceCertificate:
        witnesses = [self.pair_witness(a, b) for a, b in itertools.combinations(elements, 2)]
        independent = len(elements) >= 2 and all(w.independent for w in witnesses)
        verdict = Verdict.independent if independent else Verdict.dependent
        _log.debug(f"RadicalService certificate for {len(elements)} elements: {verdict.value}")
        return IndependenceCertificate(verdict=verdict, elements=[str(a) for a in elements], witnesses=witnesses)

    # region degrees

    @staticmethod
    def _exponent_vectors(elements: Sequence[Radical]) -> list[list[Fraction]]:
        primes = sorted({p for a in elements for p in a.primes()})
        return [a.exponent_vector(primes) for a in elements]

    def _multiplicative_condition_brute(self, elements: Sequence[Radical]) -> bool:
        vectors = self._exponent_vectors(elements)
        degrees = [a.root_degree() for a in elements]
        for exponents in itertools.product(*(range(n) for n in degrees)):
            if not any(exponents):
                continue
            combined = (sum(e * v[j] for e, v in zip(exponents, vectors)) for j in range(len(vectors[0])))
            if all(x.denominator == 1 for x in combined):
                _log.debug(f"RadicalService rational monomial with exponents {exponents}")
                return False
        return True

    def _multiplicative_condition_lattice(self, elements: Sequence[Radical]) -> bool:
        index = rational_lattice_index(self._exponent_vectors(elements))
        return index == prod(a.root_degree() for a in elements)

    def multiplicative_condition_check(self, elements: Sequence[Radical], method: str = "lattice") -> bool:
        """
        Decide whether x_1^e_1 ... x_r^e_r rational forces n_i | e_i for every i.

        :param elements: nonempty list of radicals
        :param method: "lattice" (Hermite normal form index) or "brute" (scan of the exponent box)
        """
        if not elements:
            raise BusinessException(ErrorCodes.INVALID_INPUT, "multiplicative condition needs at least one radical")
        if method == "lattice":
            return self._multiplicative_condition_lattice(elements)
        if method == "brute":
            return self._multiplicative_condition_brute(elements)
        raise BusinessException(ErrorCodes.INVALID_INPUT, f"unknown method {method!r}")

    def extension_degree(self, elements: Sequence[Radical]) -> int:
        if not self.multiplicative_condition_check(elements):
            _log.error(f"RadicalService multiplicative condition fails for {[str(a) for a in elements]}")
            raise BusinessException(ErrorCodes.HYPOTHESIS_VIOLATION,
                                    "multiplicative condition fails; reduce the generating set first")
        return prod(a.root_degree() for a in elements)

    def lattice_degree(self, elements: Sequence[Radical]) -> int:
        """
        Degree of Q(x_1, ..., x_r) over Q for real radicals.

        Signs are dropped since -1 is rational; the degree is the index of Z^k in the lattice
        spanned by Z^k and the prime-exponent vectors.
        """
        if not elements:
            return 1
        return rational_lattice_index(self._exponent_vectors([abs(a) for a in elements]))

    def sierpinski_degree(self, n: int) -> int:
        """Degree over Q of Q(2^(1/2), 3^(1/3), ..., n^(1/n))."""
        if n < 2:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"sierpinski degree needs n >= 2, got {n}")
        generators = [self.radical_from(k, Fraction(1, k)) for k in range(2, n + 1)]
        degree = self.lattice_degree(generators)
        _log.debug(f"RadicalService sierpinski degree n={n}: {degree}")
        return degree

    def degree_report(self, elements: Sequence[Radical]) -> DegreeReport:
        condition = self.multiplicative_condition_check(elements)
        return DegreeReport(
            elements=[str(a) for a in elements],
            root_degrees=[a.root_degree() for a in elements],
            multiplicative_condition=condition,
            lattice_degree=self.lattice_degree(elements),
            extension_degree=self.extension_degree(elements) if condition else None,
        )

    def monomial_basis(self, elements: Sequence[Radical]) -> list[Radical]:
        """The prod(n_i) monomials x_1^v_1 ... x_r^v_r with 0 <= v_i < n_i."""
        if not self.multiplicative_condition_check(elements):
            raise BusinessException(ErrorCodes.HYPOTHESIS_VIOLATION, "multiplicative condition fails")
        ranges = [range(a.root_degree()) for a in elements]
        basis = []
        for exponents in itertools.product(*ranges):
            monomial = Radical.one()
            for a, v in zip(elements, exponents):
                monomial = monomial * a ** v
            basis.append(monomial)
        return basis

    # endregion degrees

    # region linear forms

    def positive_sum_rationality(self, terms: Sequence[tuple[Fraction, Radical]]) -> PositiveSumResult:
        """A sum of positive rational multiples of positive radicals is rational iff every radical is."""
        for q, r in terms:
            if Fraction(q) <= 0 or r.sign < 0:
                raise BusinessException(ErrorCodes.INVALID_INPUT, f"positive terms required, got ({q}, {r})")
        if all(r.is_rational() for _, r in terms):
            value = sum((Fraction(q) * r.rational_value() for q, r in terms), Fraction(0))
            return PositiveSumResult(verdict=Rationality.rational, value=fraction_text(value))
        return PositiveSumResult(verdict=Rationality.irrational)

    @staticmethod
    def collapse_terms(terms: Sequence[tuple[Fraction, Radical]]) -> list[tuple[Radical, Fraction]]:
        """Group terms into classes with rational ratios, each collapsed onto its first member."""
        classes: list[list] = []
        for q, r in terms:
            q = Fraction(q)
            for entry in classes:
                ratio = r / entry[0]
                if ratio.is_rational():
                    entry[1] += q * ratio.rational_value()
                    break
            else:
                classes.append([r, q])
        return [(r, q) for r, q in classes]

    def linear_combination_is_zero(self, terms: Sequence[tuple[Fraction, Radical]]) -> bool:
        """
        Exact zero test for sum(q_i * r_i).

        The class representatives are pairwise independent, so the form vanishes iff every
        collapsed coefficient does.
        """
        return all(q == 0 for _, q in self.collapse_terms(terms))

    @staticmethod
    def numeric_relation_search(elements: Sequence[Radical], coeff_bound: int,
                                precision_bits: int) -> list[int] | None:
        return relation_utils.find_integer_relation(elements, coeff_bound, precision_bits)

    # endregion linear forms


radical_service = RadicalService()
