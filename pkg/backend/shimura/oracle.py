import logging
import time
from dataclasses import dataclass

from celery import group
from django.conf import settings

from api.v1.task import psi_chunk
from core.constants.arithmetic import MAX_BRUTE_FORCE_RANK_L, MIN_BRUTE_FORCE_DEPTH
from core.exceptions import PrecisionError, VerificationError
from scalars.ratfunc import RatFunc
from shimura.bruteforce import first_differing_cell
from shimura.closed import psi_closed

logger = logging.getLogger(__name__)


def chunk_bounds(cells, chunks):
    """Непустые отрезки [start, stop), делящие cells клеток на chunks частей."""
    bounds = [(i * cells // chunks, (i + 1) * cells // chunks) for i in range(chunks)]
    return [(start, stop) for start, stop in bounds if start < stop]


def psi_bruteforce(params, data, depth, intertwined=False):
    """
    Ψ прямым суммированием по сетке глубины depth.

    Клетки c делятся на BRUTE_FORCE_CHUNKS непрерывных кусков, которые
    считаются группой задач Celery; частичные суммы складываются в порядке
    номеров кусков.

    Args:
        params (SSParams): Параметры π.
        data (SectionData): τ и ψ_α.
        depth (int): Глубина сетки, не меньше MIN_BRUTE_FORCE_DEPTH.
        intertwined (bool): Интеграл от M(τ, s)f_s.

    Returns:
        RatFunc: Точная сумма.

    Raises:
        PrecisionError: Если глубина мала или l больше MAX_BRUTE_FORCE_RANK_L.
    """
    if depth < MIN_BRUTE_FORCE_DEPTH:
        raise PrecisionError(f"Глубина {depth} меньше {MIN_BRUTE_FORCE_DEPTH}")
    if params.l > MAX_BRUTE_FORCE_RANK_L:
        raise PrecisionError(
            f"Прямое суммирование при l = {params.l} вне бюджета (l ≤ {MAX_BRUTE_FORCE_RANK_L})"
        )
    cells = params.p ** (depth - 1)
    bounds = chunk_bounds(cells, settings.BRUTE_FORCE_CHUNKS)
    logger.debug(f"Ψ при {params}, D={depth}: {cells} клеток c в {len(bounds)} кусках")
    job = group(
        psi_chunk.s(params.to_json(), data.to_json(), depth, intertwined, start, stop)
        for start, stop in bounds
    )
    partials = job.apply_async().join()
    total = RatFunc.constant(params.p, 0)
    for partial in partials:
        total = total + RatFunc.from_json(partial)
    return total


@dataclass
class OracleReport:
    """Сравнение прямой суммы с замкнутой формой."""

    params: object
    data: object
    depth: int
    intertwined: bool
    closed: RatFunc
    brute_force: RatFunc
    seconds: float

    @property
    def matched(self):
        return self.closed == self.brute_force

    def as_dict(self):
        return {
            "params": self.params.to_json(),
            "tau": self.data.tau.to_json(),
            "psi": self.data.psi.to_json(),
            "depth": self.depth,
            "intertwined": self.intertwined,
            "closed": self.closed.to_json(),
            "brute_force": self.brute_force.to_json(),
            "matched": self.matched,
        }


def compare_with_closed(params, data, depth, intertwined=False):
    """
    Сравнивает psi_bruteforce с psi_closed.

    Raises:
        VerificationError: При расхождении; контрпример содержит первую
            клетку (c, a), на которой расходятся подынтегральные выражения.
    """
    started = time.perf_counter()
    closed = psi_closed(params, data, intertwined)
    brute = psi_bruteforce(params, data, depth, intertwined)
    report = OracleReport(
        params, data, depth, intertwined, closed, brute, time.perf_counter() - started
    )
    if not report.matched:
        cell = first_differing_cell(params, data, depth, intertwined) or {}
        logger.error(f"Ψ при {params}, τ={data.tau}: прямая сумма {brute}, формула {closed}")
        raise VerificationError(
            "Прямая сумма Ψ не совпала с замкнутой формой",
            {"closed": str(closed), "brute_force": str(brute), **cell},
        )
    logger.info(f"Ψ при {params}, D={depth}: совпадение за {report.seconds:.1f} с")
    return report
