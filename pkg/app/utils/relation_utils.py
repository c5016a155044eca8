"""
Bounded integer relation search among real radicals.

A float pass over the coefficient box proposes candidates; each survivor is re-checked with a
certified enclosure at the requested precision. Only relations whose enclosure still contains 0
are reported.
"""
import logging
from typing import Sequence

import numpy as np

from app.entity.radical import Radical
from app.errors.business_exception import BusinessException, ErrorCodes
from app.utils.interval_utils import linear_form_interval

_log = logging.getLogger(__name__)

FLOAT_TOLERANCE = 1e-9


def _canonical(coefficients: list[int]) -> list[int]:
    for c in coefficients:
        if c:
            return coefficients if c > 0 else [-x for x in coefficients]
    return coefficients


def find_integer_relation(elements: Sequence[Radical], coeff_bound: int, precision_bits: int) -> list[int] | None:
    """
    Search c in [-coeff_bound, coeff_bound]^k, c != 0, with sum(c_i * x_i) == 0.

    The last coefficient is solved by rounding, so the box scanned has (2B+1)^(k-1) points.

    :return: the relation with its first nonzero coefficient positive, or None
    """
    if coeff_bound < 1:
        raise BusinessException(ErrorCodes.INVALID_INPUT, f"coefficient bound must be >= 1, got {coeff_bound}")
    if precision_bits < 8:
        raise BusinessException(ErrorCodes.INVALID_INPUT, f"precision must be >= 8 bits, got {precision_bits}")
    k = len(elements)
    if k < 2:
        return None
    values = np.array([float(a) for a in elements], dtype=np.float64)
    magnitude = float(np.abs(values).max())
    span = np.arange(-coeff_bound, coeff_bound + 1, dtype=np.int64)
    for first in range(0, coeff_bound + 1):
        if k > 2:
            grids = np.meshgrid(*([span] * (k - 2)), indexing="ij")
            middle = np.stack([g.ravel() for g in grids], axis=1)
        else:
            middle = np.zeros((1, 0), dtype=np.int64)
        partial = first * values[0] + middle @ values[1:-1]
        last = np.rint(-partial / values[-1]).astype(np.int64)
        residual = np.abs(partial + last * values[-1])
        mask = (np.abs(last) <= coeff_bound) & (residual <= FLOAT_TOLERANCE * magnitude * coeff_bound)
        for row in np.flatnonzero(mask):
            coefficients = [first, *(int(c) for c in middle[row]), int(last[row])]
            if not any(coefficients):
                continue
            coefficients = _canonical(coefficients)
            interval = linear_form_interval(coefficients, elements, precision_bits)
            if interval.contains_zero():
                _log.debug(f"relation_utils relation {coefficients} at {precision_bits} bits")
                return coefficients
            _log.debug(f"relation_utils float candidate {coefficients} rejected at {precision_bits} bits")
    return None
