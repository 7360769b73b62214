import logging

from celery import shared_task

from shimura.bruteforce import chunk_sum
from shimura.params import SectionData, SSParams

logger = logging.getLogger(__name__)


@shared_task
def psi_chunk(params, data, depth, intertwined, start, stop):
    """
    Асинхронная задача прямого суммирования одного куска сетки.
    Восстанавливает параметры из JSON, суммирует вклады клеток c с
    номерами [start, stop) и возвращает частичную сумму в JSON.
    Args:
        params (dict): SSParams.to_json().
        data (dict): SectionData.to_json().
        depth (int): Глубина сетки.
        intertwined (bool): Интеграл от M(τ, s)f_s.
        start (int): Первая клетка.
        stop (int): Клетка после последней.
    Returns:
        dict: RatFunc.to_json() частичной суммы.
    Raises:
        Exception: Любая ошибка вычисления пробрасывается после записи в лог.
    """

    try:
        partial = chunk_sum(
            SSParams.from_json(params),
            SectionData.from_json(data),
            depth,
            intertwined,
            start,
            stop,
        )
        logger.debug(f"Клетки [{start}, {stop}) просуммированы: {partial}")
        return partial.to_json()

    except Exception as error:
        logger.error(f"Непредвиденная ошибка суммирования клеток [{start}, {stop}): {error}")
        raise
