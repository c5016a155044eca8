import dataclasses
import logging
from functools import lru_cache
from math import gcd, isqrt
from typing import Sequence

import numpy as np

from app.conf.app_settings import field_settings
from app.entity.finite_field import FieldTower, FqElement, GaloisField
from app.errors.business_exception import BusinessException, ErrorCodes
from app.schema.finite_field_dto import FieldTowerReport, IndependenceCheck, RootIndexEntry, ThetaDiagnostics
from app.service.number_core_service import NumberCoreService, number_core_service
from app.utils.lattice_utils import gf_matrix_rank
from app.utils.poly_utils import lowest_irreducible

_log = logging.getLogger(__name__)


@lru_cache(maxsize=32)
def _baby_steps(tower: FieldTower) -> tuple[dict[tuple[int, ...], int], FqElement, int]:
    size = isqrt(tower.n - 1) + 1
    table: dict[tuple[int, ...], int] = {}
    power = tower.field.one()
    for j in range(size):
        table.setdefault(power.coeffs, j)
        power = power * tower.generator
    return table, tower.generator ** -size, size


class FiniteFieldService:
    """
    Towers GF(p^u) in GF(p^v) and the independent set indexed by the divisors of m = p^u - 1.

    Attributes:
    number_core: NumberCoreService
        Primality and factorization of the group orders
    exhaustive_limit: int
        Largest coefficient-tuple count verified by enumeration instead of rank
    """

    def __init__(self, number_core: NumberCoreService = number_core_service,
                 exhaustive_limit: int = field_settings.EXHAUSTIVE_LIMIT):
        self.number_core = number_core
        self.exhaustive_limit = exhaustive_limit

    # region tower

    def build_tower(self, p: int, u: int, v: int) -> FieldTower:
        if u < 1 or v < 1:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"degrees must be positive, got u={u}, v={v}")
        if not self.number_core.is_prime(p):
            raise BusinessException(ErrorCodes.NOT_PRIME, f"characteristic {p} is not prime")
        if v % u:
            raise BusinessException(ErrorCodes.NOT_DIVISIBLE, f"u={u} does not divide v={v}")
        return self._build_tower_cached(p, u, v)

    @lru_cache(maxsize=32)
    def _build_tower_cached(self, p: int, u: int, v: int) -> FieldTower:
        field = GaloisField(p, tuple(lowest_irreducible(p, v)))
        n_factors = tuple(tuple(f) for f in self.number_core.factor(p ** v - 1).factors)
        draft = FieldTower(p=p, u=u, v=v, field=field, generator=field.one(), n_factors=n_factors)
        tower = dataclasses.replace(draft, generator=self.find_generator(draft))
        _log.info(f"FiniteFieldService tower GF({p}^{u}) in GF({p}^{v}): modulus {list(field.modulus)}, "
                  f"generator {tower.generator}, l={tower.l}")
        return tower

    def has_full_order(self, tower: FieldTower, x: FqElement) -> bool:
        """x^(n/q) != 1 for every prime q | n certifies order exactly n."""
        if x.is_zero():
            return False
        one = tower.field.one()
        if x ** tower.n != one:
            return False
        return all(x ** (tower.n // q) != one for q, _ in tower.n_factors)

    def find_generator(self, tower: FieldTower) -> FqElement:
        """Smallest element by base-p index whose order is exactly n."""
        for index in range(1, tower.field.order):
            candidate = tower.field.from_index(index)
            if self.has_full_order(tower, candidate):
                _log.debug(f"FiniteFieldService generator index {index} for GF({tower.p}^{tower.v})")
                return candidate
        raise BusinessException(ErrorCodes.INTERNAL_SERVER_ERROR, f"no generator of GF({tower.p}^{tower.v})*")

    # endregion tower

    # region logarithms

    @staticmethod
    def discrete_log(tower: FieldTower, x: FqElement) -> int:
        """Baby-step giant-step with ceil(sqrt(n)) baby steps."""
        if x.is_zero():
            raise BusinessException(ErrorCodes.INVALID_INPUT, "discrete log of zero")
        table, giant, size = _baby_steps(tower)
        y = x
        for i in range(size + 1):
            j = table.get(y.coeffs)
            if j is not None:
                return (i * size + j) % tower.n
            y = y * giant
        raise BusinessException(ErrorCodes.INTERNAL_SERVER_ERROR, f"no discrete log for {x}")

    def root_index(self, tower: FieldTower, x: FqElement) -> int:
        """Minimal k with x^k in the subfield: l / gcd(l, log x)."""
        return tower.l // gcd(tower.l, self.discrete_log(tower, x))

    def pairwise_dependent(self, tower: FieldTower, x: FqElement, y: FqElement) -> bool:
        """x, y are dependent over the subfield iff their logs agree modulo l."""
        return (self.discrete_log(tower, x) - self.discrete_log(tower, y)) % tower.l == 0

    def subfield_elements(self, tower: FieldTower) -> list[FqElement]:
        s = tower.subfield_generator
        elements = [tower.field.zero()]
        power = tower.field.one()
        for _ in range(tower.m):
            elements.append(power)
            power = power * s
        return elements

    def theta_diagnostics(self, tower: FieldTower, elements: Sequence[FqElement]) -> ThetaDiagnostics:
        entries = []
        for x in elements:
            log = self.discrete_log(tower, x)
            n_x = tower.l // gcd(tower.l, log)
            entries.append(RootIndexEntry(element=list(x.coeffs), discrete_log=log, root_index=n_x,
                                          coprime_to_p=gcd(tower.p, n_x) == 1, divides_m=tower.m % n_x == 0))
        logs = [e.discrete_log % tower.l for e in entries]
        pairwise = len(set(logs)) == len(logs)
        hypotheses = pairwise and all(e.coprime_to_p and e.divides_m for e in entries)
        return ThetaDiagnostics(entries=entries, pairwise_independent=pairwise, hypotheses_hold=hypotheses)

    # endregion logarithms

    # region independent set

    def construct_exponents(self, tower: FieldTower) -> list[int]:
        if tower.m == 1:
            raise BusinessException(ErrorCodes.HYPOTHESIS_VIOLATION, f"m = p^u - 1 = 1 for p={tower.p}, u={tower.u}")
        if tower.l % tower.m:
            raise BusinessException(ErrorCodes.NOT_DIVISIBLE, f"m={tower.m} does not divide l={tower.l}")
        w = tower.l // tower.m
        return [d * w for d in self.number_core.divisors(tower.m)]

    def construct_independent_set(self, tower: FieldTower) -> list[FqElement]:
        return [tower.generator ** e for e in self.construct_exponents(tower)]

    def _verify_exhaustive(self, tower: FieldTower, elements: Sequence[FqElement]) -> bool:
        p = tower.p
        scalars = self.subfield_elements(tower)
        multiples = [np.array([list((c * a).coeffs) for c in scalars], dtype=np.int64) for a in elements]
        # partial sums over all coefficient tuples of every element but the first
        sums = np.zeros((1, tower.v), dtype=np.int64)
        for table in multiples[1:]:
            sums = ((sums[:, None, :] + table[None, :, :]) % p).reshape(-1, tower.v)
        for lead in multiples[0]:
            zeros = int(np.count_nonzero(~((sums + lead) % p).any(axis=1)))
            trivial = 1 if not lead.any() else 0
            if zeros > trivial:
                return False
        return True

    def _verify_rank(self, tower: FieldTower, elements: Sequence[FqElement]) -> bool:
        s = tower.subfield_generator
        basis = [s ** j for j in range(tower.u)]
        rows = [list((b * a).coeffs) for a in elements for b in basis]
        return gf_matrix_rank(rows, tower.p) == tower.u * len(elements)

    def check_linear_independence(self, tower: FieldTower, elements: Sequence[FqElement]) -> IndependenceCheck:
        if not elements:
            return IndependenceCheck(independent=True, method="exhaustive", combinations_checked=0)
        if any(x.is_zero() for x in elements):
            return IndependenceCheck(independent=False, method="contains-zero")
        combinations = tower.subfield_order ** len(elements)
        if combinations <= self.exhaustive_limit:
            independent = self._verify_exhaustive(tower, elements)
            _log.debug(f"FiniteFieldService exhaustive check of {combinations - 1} combinations: {independent}")
            return IndependenceCheck(independent=independent, method="exhaustive",
                                     combinations_checked=combinations - 1)
        independent = self._verify_rank(tower, elements)
        return IndependenceCheck(independent=independent, method="rank")

    def verify_linear_independence(self, tower: FieldTower, elements: Sequence[FqElement]) -> bool:
        return self.check_linear_independence(tower, elements).independent

    def tower_report(self, p: int, u: int, v: int, verify: bool = False) -> FieldTowerReport:
        tower = self.build_tower(p, u, v)
        exponents = self.construct_exponents(tower)
        elements = [tower.generator ** e for e in exponents]
        return FieldTowerReport(
            p=p, u=u, v=v, m=tower.m, n=tower.n, l=tower.l, w=tower.l // tower.m,
            modulus=list(tower.modulus), generator=list(tower.generator.coeffs),
            exponents=exponents, elements=[list(x.coeffs) for x in elements],
            verification=self.check_linear_independence(tower, elements) if verify else None,
        )

    # endregion independent set


finite_field_service = FiniteFieldService()
