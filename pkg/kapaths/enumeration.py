# enumeration.py
"""
Generadores exhaustivos de todas las familias de caminos y contadores en forma
cerrada. Es la capa de oráculo por fuerza bruta de todas las identidades.

Todos los flujos siguen el orden lexicográfico U < D < H.
"""

import heapq
import logging
import math
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterable, Iterator, List, Sequence, Tuple

from kapaths.errors import MalformedColoredPath, NonIntegerResult
from kapaths.multiset import multiset_permutations
from kapaths.path_core import (
    DOWN,
    HORIZONTAL,
    INFINITY,
    UP,
    Hump,
    LatticePath,
    PathParams,
    humps,
    is_nonnegative,
    peaks,
)

logger = logging.getLogger(__name__)


class ColorMode(Enum):
    """Estadística coloreada: jorobas o picos"""
    HUMP = "hump"
    PEAK = "peak"


class Restriction(Enum):
    """S' = al menos un paso U; S'' = no empieza con H"""
    S_PRIME = "s_prime"
    S_DPRIME = "s_dprime"


FAMILIES = ("paths", "super", "s_prime", "s_dprime", "humps_total", "peaks_total")


@dataclass(frozen=True)
class StepComposition:
    """u pasos U, k·u pasos D y h pasos H"""
    u: int
    h: int

    def multiset(self, k: int) -> List:
        return [UP] * self.u + [DOWN] * (k * self.u) + [HORIZONTAL] * self.h


@dataclass(frozen=True)
class ColoredHumpPath:
    """Camino (k,a) con una joroba distinguida coloreada con c ∈ [1, k+1]"""
    path: LatticePath
    hump: Hump
    color: int

    def validate(self):
        """Comprueba las invariantes; lanza MalformedColoredPath"""
        path, hump = self.path, self.hump
        steps = path.steps
        if not 1 <= self.color <= path.params.k + 1:
            raise MalformedColoredPath(
                f"Color {self.color} fuera de [1, {path.params.k + 1}] en {path.word}"
            )
        if not (0 <= hump.up_index and hump.down_index < len(steps)):
            raise MalformedColoredPath(f"Joroba fuera del camino {path.word}")
        if steps[hump.up_index] is not UP or steps[hump.down_index] is not DOWN or any(
            step is not HORIZONTAL for step in steps[hump.up_index + 1:hump.down_index]
        ):
            raise MalformedColoredPath(
                f"No hay joroba en el índice {hump.up_index} de {path.word}"
            )
        if not path.is_closed or not is_nonnegative(path):
            raise MalformedColoredPath(f"{path.word} no es un camino ({path.params})")


def compositions(n: int, params: PathParams) -> List[StepComposition]:
    """Todas las (u, h) con u(k+1) + a·h = n, ordenadas por u"""
    if n < 0:
        return []
    k = params.k
    found = []
    for u in range(n // (k + 1) + 1):
        rest = n - u * (k + 1)
        if params.is_kary:
            if rest == 0:
                found.append(StepComposition(u, 0))
        elif rest % params.a == 0:
            found.append(StepComposition(u, rest // params.a))
    return found


@lru_cache(maxsize=None)
def _completable(k: int, a, width: int, height: int) -> bool:
    """¿Puede un sufijo de anchura ``width`` llevar la altura ``height`` a 0?"""
    rest = width - height
    if rest < 0:
        return False
    u = max(0, (-height + k - 1) // k)
    while u * (k + 1) <= rest:
        left = rest - u * (k + 1)
        if left == 0 or (a != INFINITY and left % a == 0):
            return True
        u += 1
    return False


def enumerate_paths(n: int, params: PathParams) -> Iterator[LatticePath]:
    """Caminos (k,a) de orden n (cerrados y no negativos), en profundidad con poda por altura"""
    if n < 0:
        return
    k, a = params.k, params.a
    horizontal = not params.is_kary
    steps: List = []

    def extend(width: int, height: int) -> Iterator[LatticePath]:
        if width == 0:
            yield LatticePath(params, tuple(steps))
            return
        if _completable(k, a, width - 1, height + k):
            steps.append(UP)
            yield from extend(width - 1, height + k)
            steps.pop()
        if height > 0 and _completable(k, a, width - 1, height - 1):
            steps.append(DOWN)
            yield from extend(width - 1, height - 1)
            steps.pop()
        if horizontal and width >= a and _completable(k, a, width - a, height):
            steps.append(HORIZONTAL)
            yield from extend(width - a, height)
            steps.pop()

    if _completable(k, a, n, 0):
        yield from extend(n, 0)


def enumerate_super(n: int, params: PathParams) -> Iterator[LatticePath]:
    """Súper caminos de orden n: permutaciones de cada composición, mezcladas en orden lexicográfico"""
    streams = [
        multiset_permutations(composition.multiset(params.k))
        for composition in compositions(n, params)
    ]
    for steps in heapq.merge(*streams):
        yield LatticePath(params, steps)


def count_super(n: int, params: PathParams) -> int:
    """|SP_n(k,a)| por la suma de multinomiales; 0 para n < 0"""
    total = 0
    k = params.k
    for composition in compositions(n, params):
        u, h = composition.u, composition.h
        length = u + k * u + h
        total += math.comb(length, u) * math.comb(length - u, k * u)
    return total


def delta_divides(n: int, params: PathParams) -> int:
    """δ_{a|n}; con a = inf vale 1 sólo para n = 0 (el camino vacío)"""
    if n < 0:
        return 0
    if params.is_kary:
        return 1 if n == 0 else 0
    return 1 if n % params.a == 0 else 0


def count_restricted(n: int, params: PathParams, which: Restriction) -> int:
    """|S'_n| o |S''_n| en forma cerrada"""
    if which is Restriction.S_PRIME:
        return count_super(n, params) - delta_divides(n, params)
    if n == 0:
        return 0
    width = 0 if params.is_kary else params.a
    shifted = count_super(n - width, params) if width else 0
    return count_super(n, params) - shifted


def _in_restriction(path: LatticePath, which: Restriction) -> bool:
    if which is Restriction.S_PRIME:
        return UP in path.steps
    # El camino vacío no empieza con un paso distinto de H
    return bool(path.steps) and path.steps[0] is not HORIZONTAL


def enumerate_restricted(n: int, params: PathParams, which: Restriction) -> Iterator[LatticePath]:
    for path in enumerate_super(n, params):
        if _in_restriction(path, which):
            yield path


def _statistic(mode: ColorMode):
    return humps if mode is ColorMode.HUMP else peaks


def enumerate_colored(n: int, params: PathParams, mode: ColorMode) -> Iterator[ColoredHumpPath]:
    """Cada camino, cada joroba (o pico) y cada color 1..k+1"""
    select = _statistic(mode)
    colors = range(1, params.k + 2)
    for path in enumerate_paths(n, params):
        for hump in select(path):
            for color in colors:
                yield ColoredHumpPath(path, hump, color)


def total_statistic(n: int, params: PathParams, mode: ColorMode) -> int:
    """Σ #Humps(P) (o #Peaks(P)) sobre P_n(k,a)"""
    select = _statistic(mode)
    total = 0
    paths = 0
    for path in enumerate_paths(n, params):
        total += len(select(path))
        paths += 1
    logger.debug("n=%s (%s): %s caminos, total %s=%s", n, params, paths, mode.value, total)
    return total


def count_paths(n: int, params: PathParams) -> int:
    """|P_n(k,a)| por programación dinámica sobre (x, altura)"""
    if n < 0:
        return 0
    k = params.k
    width = None if params.is_kary else params.a
    layers: List[Counter] = [Counter() for _ in range(n + 1)]
    layers[0][0] = 1
    for x in range(n + 1):
        for height, ways in layers[x].items():
            if x + 1 <= n:
                if height + k <= n - x - 1:
                    layers[x + 1][height + k] += ways
                if height > 0:
                    layers[x + 1][height - 1] += ways
            if width is not None and x + width <= n:
                layers[x + width][height] += ways
    return layers[n][0]


def binomial(n: int, r: int) -> int:
    """C(n, r) con C = 0 fuera de 0 <= r <= n"""
    if r < 0 or n < 0 or r > n:
        return 0
    return math.comb(n, r)


def _require_positive(n: int, k: int, m: int):
    if n < 1 or m < 1 or k < 1:
        raise ValueError(f"Se requiere n, k, m >= 1 (n={n}, k={k}, m={m})")


def count_SUU(n: int, k: int, m: int) -> int:  # noqa: N802
    """|S^UU_n(k, m)| = C(n-1, m)·C(kn-1, m-1)"""
    _require_positive(n, k, m)
    return binomial(n - 1, m) * binomial(k * n - 1, m - 1)


def count_SUD(n: int, k: int, m: int) -> int:  # noqa: N802
    """|S^UD_n(k, m)| = C(n-1, m-1)·C(kn-1, m-1)"""
    _require_positive(n, k, m)
    return binomial(n - 1, m - 1) * binomial(k * n - 1, m - 1)


def count_kary_peak_paths(n: int, k: int, m: int) -> int:
    """Caminos k-arios con n pasos U y m picos: (1/n)·C(n, m)·C(kn, m-1)"""
    _require_positive(n, k, m)
    numerator = binomial(n, m) * binomial(k * n, m - 1)
    quotient, remainder = divmod(numerator, n)
    if remainder:
        raise NonIntegerResult(f"C({n},{m})·C({k * n},{m - 1}) no es divisible por {n}")
    return quotient


def kary_peak_paths_by_derivation(n: int, k: int, m: int) -> int:
    """(1/m)(C(n-1,m-1)C(kn-1,m-2) + C(n-1,m-1)C(kn-1,m-1)): |S^UU(m-1)| + |S^UD(m)| repartido entre m picos"""
    _require_positive(n, k, m)
    numerator = binomial(n - 1, m - 1) * (binomial(k * n - 1, m - 2) + binomial(k * n - 1, m - 1))
    quotient, remainder = divmod(numerator, m)
    if remainder:
        raise NonIntegerResult(f"El numerador {numerator} no es divisible por m={m}")
    return quotient


def kary_words(n_up: int, k: int) -> Iterator[LatticePath]:
    """Todas las palabras con n_up pasos U y k·n_up pasos D (súper caminos k-arios)"""
    params = PathParams(k, INFINITY)
    for steps in multiset_permutations([UP] * n_up + [DOWN] * (k * n_up)):
        yield LatticePath(params, steps)


def count_peaks(path: LatticePath) -> int:
    return len(peaks(path))


def starts_uu(path: LatticePath) -> bool:
    return len(path.steps) >= 2 and path.steps[0] is UP and path.steps[1] is UP


def starts_ud(path: LatticePath) -> bool:
    return len(path.steps) >= 2 and path.steps[0] is UP and path.steps[1] is DOWN


def lemma_census(n_up: int, k: int) -> Dict[Tuple[str, int], int]:
    """Recuento por fuerza bruta de S^UU y S^UD por número de picos: {("UU", m): c, ("UD", m): c}"""
    census: Counter = Counter()
    for word in kary_words(n_up, k):
        if starts_uu(word):
            census[("UU", count_peaks(word))] += 1
        elif starts_ud(word):
            census[("UD", count_peaks(word))] += 1
    return dict(census)


def kary_peak_census(n_up: int, k: int) -> Dict[int, int]:
    """Caminos k-arios no negativos con n_up pasos U, agrupados por número de picos"""
    census: Counter = Counter()
    for path in enumerate_paths((k + 1) * n_up, PathParams(k, INFINITY)):
        census[count_peaks(path)] += 1
    return dict(census)


@dataclass(frozen=True)
class TableRow:
    n: int
    k: int
    a: str
    family: str
    value: int


def family_value(n: int, params: PathParams, family: str) -> int:
    if family == "paths":
        return count_paths(n, params)
    if family == "super":
        return count_super(n, params)
    if family == "s_prime":
        return count_restricted(n, params, Restriction.S_PRIME)
    if family == "s_dprime":
        return count_restricted(n, params, Restriction.S_DPRIME)
    if family == "humps_total":
        return total_statistic(n, params, ColorMode.HUMP)
    if family == "peaks_total":
        return total_statistic(n, params, ColorMode.PEAK)
    raise ValueError(f"Familia desconocida: {family}")


def count_table(n_values: Iterable[int], params: PathParams,
                families: Sequence[str] = FAMILIES) -> List[TableRow]:
    """Tabla de recuentos (n, k, a, familia, valor)"""
    return [
        TableRow(n, params.k, params.a_label, family, family_value(n, params, family))
        for n in n_values
        for family in families
    ]
