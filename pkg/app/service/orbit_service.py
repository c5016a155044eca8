import logging
from collections import deque
from math import gcd
from typing import Sequence

from app.errors.business_exception import BusinessException, ErrorCodes
from app.schema.orbit_dto import OrbitClosure, OrbitPath, OrbitStep
from app.service.number_core_service import NumberCoreService, number_core_service

_log = logging.getLogger(__name__)


class OrbitService:
    """
    Generation of Z_n from 0 by the maps phi(x) = 1 + d*x and inv(x) = -x, gcd(d, n) = 1.

    Attributes:
    number_core: NumberCoreService
        Supplies the multiplicative order of d modulo n
    """

    def __init__(self, number_core: NumberCoreService = number_core_service):
        self.number_core = number_core

    @staticmethod
    def _normalize(n: int, d: int) -> int:
        if n < 1:
            raise BusinessException(ErrorCodes.INVALID_INPUT, f"modulus must be >= 1, got {n}")
        if gcd(d, n) != 1:
            raise BusinessException(ErrorCodes.NOT_COPRIME, f"gcd({d}, {n}) = {gcd(d, n)} != 1")
        return d % n if n > 1 else 0

    @staticmethod
    def phi(n: int, d: int, x: int) -> int:
        return (1 + d * x) % n

    @staticmethod
    def inv(n: int, x: int) -> int:
        return -x % n

    def phi_inverse(self, n: int, d: int, x: int) -> int:
        """e*(x - 1) with e*d = 1 mod n."""
        d = self._normalize(n, d)
        if n == 1:
            return 0
        return pow(d, -1, n) * (x - 1) % n

    def phi_period(self, n: int, d: int) -> int:
        """
        An exponent m with phi^m the identity: (d - 1) * ord_n(d), or 1 when d = 1.

        phi^m(x) = d^m x + (1 + d + ... + d^(m-1)); both parts collapse once r | m and
        (d - 1) * (1 + ... + d^(r-1)) = d^r - 1 = 0 mod n.
        """
        d = self._normalize(n, d)
        if n == 1 or d == 1:
            return n if d == 1 else 1
        return (d - 1) * self.number_core.multiplicative_order(d, n)

    def apply_word(self, n: int, d: int, word: Sequence[OrbitStep], start: int = 0) -> int:
        x = start % n
        for step in word:
            x = self.phi(n, d, x) if step == OrbitStep.phi else self.inv(n, x)
        return x

    def orbit_closure(self, n: int, d: int) -> OrbitClosure:
        d = self._normalize(n, d)
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for y in (self.phi(n, d, x), self.inv(n, x)):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        _log.debug(f"OrbitService closure n={n} d={d}: {len(seen)} residues")
        return OrbitClosure(n=n, d=d, size=len(seen), residues=sorted(seen))

    def _minus_two_block(self, n: int, d: int) -> list[OrbitStep]:
        # phi^(period - 1) is phi^-1 and inv.phi.inv.phi^-1 maps x to x - 2
        return [OrbitStep.phi] * (self.phi_period(n, d) - 1) + [OrbitStep.inv, OrbitStep.phi, OrbitStep.inv]

    def _even_word(self, n: int, d: int, target: int) -> list[OrbitStep]:
        """Word reaching target from 0 by k blocks of -2; target even when n is even."""
        if n % 2:
            k = (n - target) * (n + 1) // 2 % n
        else:
            k = (n - target) // 2 % (n // 2)
        return self._minus_two_block(n, d) * k

    def constructive_path(self, n: int, d: int, target: int) -> OrbitPath:
        d = self._normalize(n, d)
        target %= n
        if n == 1:
            word = []
        elif d == 1:
            word = [OrbitStep.phi] * target
        elif n % 2 == 0 and target % 2:
            # phi(e*(target - 1)) = target and e*(target - 1) stays even since e is odd
            word = self._even_word(n, d, self.phi_inverse(n, d, target)) + [OrbitStep.phi]
        else:
            word = self._even_word(n, d, target)
        endpoint = self.apply_word(n, d, word)
        if endpoint != target:
            raise BusinessException(ErrorCodes.INTERNAL_SERVER_ERROR,
                                    f"orbit word for n={n} d={d} ends at {endpoint}, expected {target}")
        _log.debug(f"OrbitService path n={n} d={d} target={target}: {len(word)} steps")
        return OrbitPath(n=n, d=d, target=target, word=word, endpoint=endpoint)


orbit_service = OrbitService()
