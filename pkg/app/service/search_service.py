import logging
import multiprocessing
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from app.conf.app_settings import search_settings
from app.conf.env.search_config import SearchSettings
from app.errors.business_exception import BusinessException, ErrorCodes
from app.repository.checkpoint_repository import CheckpointRepository
from app.schema.radical_dto import fraction_text
from app.schema.search_dto import CheckpointState, GuardCertificate, NearMiss, SearchConfig, SearchReport
from app.service.number_core_service import NumberCoreService, number_core_service
from app.service.radical_service import RadicalService, radical_service
from app.utils.interval_utils import CertifiedValue, RadicalTerm, certify_nonzero, eval_radical_sum

_log = logging.getLogger(__name__)

# s^r above this is no longer an exact float integer
_Z_LIMIT = float(1 << 52)
_EMPTY_EPS = np.zeros(0, dtype=np.float64)
_EMPTY_ROWS = np.zeros((0, 6), dtype=np.int64)


# region shard scan

def perfect_power_mask(values: np.ndarray, k: int) -> np.ndarray:
    """True where the int64 value is a perfect k-th power; values below 2^52."""
    values = np.asarray(values, dtype=np.int64)
    root = np.rint(np.power(values.astype(np.float64), 1.0 / k)).astype(np.int64)
    mask = np.zeros(values.shape, dtype=bool)
    for delta in (-1, 0, 1):
        candidate = np.maximum(root + delta, 0)
        mask |= np.power(candidate, k) == values
    return mask


def top_candidates(eps: np.ndarray, rows: np.ndarray, pool_size: int) -> tuple[np.ndarray, np.ndarray]:
    """Keep the pool_size smallest rows ordered by (|eps|, x, y, z, m, n, r)."""
    order = np.lexsort((rows[:, 5], rows[:, 4], rows[:, 3], rows[:, 2], rows[:, 1], rows[:, 0], eps))[:pool_size]
    return eps[order], rows[order]


def scan_shard(x: int, m: int, y_max: int, exponents: Sequence[int], mixed: bool,
               pool_size: int) -> tuple[np.ndarray, np.ndarray, int]:
    """
    Float prefilter of every admissible (y, z, n, r) for fixed x and m.

    :return: |eps| values, (x, y, z, m, n, r) rows, number of candidates evaluated
    """
    if x < 2 or perfect_power_mask(np.array([x]), m)[0]:
        return _EMPTY_EPS, _EMPTY_ROWS, 0
    ys = np.arange(x + 1, y_max + 1, dtype=np.int64)
    ys = ys[np.gcd(ys, x) == 1]
    x_root = np.float64(x) ** (1.0 / m)
    eps_parts, row_parts = [], []
    scanned = 0
    for n in (exponents if mixed else (m,)):
        y = ys[~perfect_power_mask(ys, n)]
        s = x_root + np.power(y.astype(np.float64), 1.0 / n)
        for r in (exponents if mixed else (m,)):
            zf = np.power(s, r)
            keep = zf < _Z_LIMIT
            s_r, y_r = s[keep], y[keep]
            z0 = np.rint(zf[keep]).astype(np.int64)
            for delta in (-1, 0, 1):
                z = z0 + delta
                ok = z >= 2
                ok[ok] = ~perfect_power_mask(z[ok], r)
                eps = np.abs(s_r[ok] - np.power(z[ok].astype(np.float64), 1.0 / r))
                count = len(eps)
                scanned += count
                eps_parts.append(eps)
                row_parts.append(np.column_stack([
                    np.full(count, x), y_r[ok], z[ok], np.full(count, m), np.full(count, n), np.full(count, r),
                ]).astype(np.int64))
    if not scanned:
        return _EMPTY_EPS, _EMPTY_ROWS, 0
    eps, rows = top_candidates(np.concatenate(eps_parts), np.concatenate(row_parts), pool_size)
    return eps, rows, scanned


def _scan_shard_task(args: tuple) -> tuple[np.ndarray, np.ndarray, int]:
    return scan_shard(*args)


def _certify_task(args: tuple) -> NearMiss:
    (x, y, z, m, n, r), start_bits, max_bits = args
    terms = [RadicalTerm(x, m), RadicalTerm(y, n), RadicalTerm(z, r, sign=-1)]
    value = certify_nonzero(terms, start_bits, max_bits)
    return NearMiss(x=x, y=y, z=z, m=m, n=n, r=r, eps_lo=fraction_text(value.interval.lo),
                    eps_hi=fraction_text(value.interval.hi), precision_bits=value.precision_bits)


def _make_executor(max_workers: int) -> Executor:
    """Process pool with the fork context where available, threads otherwise."""
    try:
        ctx = multiprocessing.get_context("fork")
        return ProcessPoolExecutor(max_workers=max_workers, mp_context=ctx)
    except (ValueError, OSError) as e:
        _log.warning(f"SearchService process pool unavailable ({e}); falling back to threads")
        return ThreadPoolExecutor(max_workers=max_workers)

# endregion shard scan


class SearchService:
    """
    Certified near-miss search for x^(1/m) + y^(1/n) = z^(1/r) and the exactness guard.

    The scan is split into (x, m) shards evaluated in double precision; the best pool_size
    candidates survive a deterministic merge and are then enclosed by certified intervals.

    Attributes:
    radicals: RadicalService
        Independence certificates for the guard
    number_core: NumberCoreService
        Perfect power checks for the guard
    settings: SearchSettings
        Precision limits, checkpoint cadence and prefilter margin
    """

    def __init__(self, radicals: RadicalService = radical_service,
                 number_core: NumberCoreService = number_core_service,
                 settings: SearchSettings = search_settings):
        self.radicals = radicals
        self.number_core = number_core
        self.settings = settings

    # region certified evaluation

    def eval_radical_sum(self, terms: Iterable[tuple[int, int] | RadicalTerm], target_width: Fraction) -> CertifiedValue:
        """
        Enclose a signed sum of k-th roots.

        :param terms: RadicalTerm or (signed base, k) pairs; a negative base means the root is subtracted
        :param target_width: positive width bound
        """
        normalized = [t if isinstance(t, RadicalTerm) else RadicalTerm(abs(t[0]), t[1], -1 if t[0] < 0 else 1)
                      for t in terms]
        return eval_radical_sum(normalized, Fraction(target_width), self.settings.START_PRECISION_BITS,
                                self.settings.MAX_PRECISION_BITS)

    def exactness_guard(self, x: int, m: int, y: int, n: int, z: int, r: int) -> GuardCertificate:
        """Certify x^(1/m) + y^(1/n) - z^(1/r) != 0 for inputs outside the trivial exclusions."""
        for name, value in (("x", x), ("y", y), ("z", z), ("m", m), ("n", n), ("r", r)):
            if value < 2:
                raise BusinessException(ErrorCodes.INVALID_INPUT, f"{name} must be >= 2, got {value}")
        if gcd(x, y) != 1:
            raise BusinessException(ErrorCodes.HYPOTHESIS_VIOLATION, f"gcd({x}, {y}) = {gcd(x, y)} != 1")
        for base, k in ((x, m), (y, n), (z, r)):
            if self.number_core.is_perfect_power(base, k):
                raise BusinessException(ErrorCodes.HYPOTHESIS_VIOLATION, f"{base} is a perfect {k}-th power")
        a = self.radicals.radical_from(x, Fraction(1, m))
        b = self.radicals.radical_from(y, Fraction(1, n))
        c = self.radicals.radical_from(z, Fraction(1, r))
        certificate = self.radicals.independence_certificate([a, b, c])
        classes = self.radicals.collapse_terms([(Fraction(1), a), (Fraction(1), b), (Fraction(-1), c)])
        if all(q == 0 for _, q in classes):
            _log.error(f"SearchService exact vanishing for {(x, m, y, n, z, r)}")
            raise BusinessException(ErrorCodes.INVALID_STATE, f"{a} + {b} - {c} is exactly 0")
        terms = [RadicalTerm(x, m), RadicalTerm(y, n), RadicalTerm(z, r, sign=-1)]
        value = certify_nonzero(terms, self.settings.START_PRECISION_BITS, self.settings.MAX_PRECISION_BITS)
        _log.debug(f"SearchService guard {(x, m, y, n, z, r)}: {certificate.verdict.value}, {len(classes)} classes")
        return GuardCertificate(x=x, m=m, y=y, n=n, z=z, r=r, nonzero=True, independence=certificate,
                                classes=len(classes), eps_lo=fraction_text(value.interval.lo),
                                eps_hi=fraction_text(value.interval.hi), precision_bits=value.precision_bits)

    # endregion certified evaluation

    # region search

    @staticmethod
    def shards(config: SearchConfig) -> list[tuple[int, int]]:
        return [(x, m) for x in range(2, config.x_max + 1) for m in config.exponents]

    def _prefilter(self, config: SearchConfig, shard_limit: int | None) -> tuple[CheckpointState, int]:
        repository = CheckpointRepository(config.checkpoint_path) if config.checkpoint_path else None
        state = repository.load(config.config_hash()) if repository else None
        if state is None:
            state = CheckpointState(config_hash=config.config_hash())
        done = {tuple(s) for s in state.completed_shards}
        pending = [s for s in self.shards(config) if s not in done]
        if shard_limit is not None:
            pending = pending[:shard_limit]
        pool = np.array(state.pool, dtype=np.float64).reshape(-1, 7)
        eps, rows = pool[:, 0], pool[:, 1:].astype(np.int64)
        completed = list(state.completed_shards)
        scanned = state.candidates_scanned
        tasks = [(x, m, config.y_max, config.exponents, config.allow_mixed_exponents, config.pool_size)
                 for x, m in pending]
        _log.info(f"SearchService scanning {len(pending)} shards ({len(done)} resumed) "
                  f"with {config.worker_count} workers")

        def snapshot() -> CheckpointState:
            return CheckpointState(
                config_hash=state.config_hash, completed_shards=completed, candidates_scanned=scanned,
                pool=[(float(e), *(int(v) for v in row)) for e, row in zip(eps, rows)],
            )

        executor = _make_executor(config.worker_count) if config.worker_count > 1 else None
        try:
            results = executor.map(_scan_shard_task, tasks, chunksize=16) if executor else map(_scan_shard_task, tasks)
            for i, (shard, (shard_eps, shard_rows, count)) in enumerate(zip(pending, results), start=1):
                eps, rows = top_candidates(np.concatenate([eps, shard_eps]), np.concatenate([rows, shard_rows]),
                                           config.pool_size)
                completed.append(shard)
                scanned += count
                if repository and i % self.settings.CHECKPOINT_EVERY == 0:
                    repository.save(snapshot())
                    _log.info(f"SearchService checkpoint after {len(completed)} shards, {scanned} candidates")
        finally:
            if executor:
                executor.shutdown()
        state = snapshot()
        if repository:
            repository.save(state)
        return state, len(completed)

    def _certify(self, config: SearchConfig, pool: list[tuple]) -> list[NearMiss]:
        tasks = [(tuple(int(v) for v in row[1:]), self.settings.START_PRECISION_BITS,
                  self.settings.MAX_PRECISION_BITS) for row in pool]
        if config.worker_count > 1 and tasks:
            with _make_executor(config.worker_count) as executor:
                certified = list(executor.map(_certify_task, tasks, chunksize=64))
        else:
            certified = [_certify_task(task) for task in tasks]
        certified.sort(key=NearMiss.sort_key)
        return certified[:config.top_k]

    def _margin_ok(self, config: SearchConfig, state: CheckpointState, results: list[NearMiss]) -> bool:
        """Whether no candidate left out of the pool can beat the last reported result."""
        if len(state.pool) < config.pool_size or not results:
            return True
        boundary = state.pool[-1][0]
        largest_sum = config.x_max ** (1 / config.exp_min) + config.y_max ** (1 / config.exp_min)
        float_error = self.settings.PREFILTER_MARGIN * np.finfo(np.float64).eps * largest_sum
        return float(results[-1].abs_upper) + float_error < boundary

    def run(self, config: SearchConfig, shard_limit: int | None = None) -> SearchReport:
        """
        Prefilter, merge and certify.

        :param shard_limit: stop after this many new shards; the checkpoint then holds the partial state
        """
        total = len(self.shards(config))
        state, completed = self._prefilter(config, shard_limit)
        report = SearchReport(shards_total=total, shards_completed=completed,
                              candidates_scanned=state.candidates_scanned, completed=completed == total)
        if not report.completed:
            _log.info(f"SearchService stopped after {completed}/{total} shards")
            return report
        report.results = self._certify(config, state.pool)
        report.pool_boundary = state.pool[-1][0] if state.pool else None
        report.pool_margin_ok = self._margin_ok(config, state, report.results)
        if not report.pool_margin_ok:
            _log.warning(f"SearchService pool boundary {report.pool_boundary} is within the float error of the "
                         f"reported results; raise SEARCH_POOL_SIZE")
        _log.info(f"SearchService {state.candidates_scanned} candidates, {len(report.results)} results")
        return report

    def near_miss_search(self, config: SearchConfig) -> list[NearMiss]:
        return self.run(config).results

    # endregion search


search_service = SearchService()
