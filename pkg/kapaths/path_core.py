# path_core.py
"""
Caminos (k,a): representación, validación, estadísticas de jorobas/picos y
consultas geométricas (alturas, puntos de retorno, puntos más bajos y pasos
U que cruzan el eje x).

Un camino es una palabra sobre {U, D, H}: U avanza (1, k), D avanza (1, -1)
y H avanza (a, 0). Con a = INFINITY los pasos H no existen (caminos k-arios).
Las coordenadas x se miden en unidades reales del camino (H avanza a).
"""

import math
from dataclasses import dataclass
from enum import IntEnum
from functools import cached_property
from itertools import accumulate
from typing import List, Optional, Tuple, Union

from kapaths.errors import HorizontalForbidden, IllegalCharacter, InvalidParams, NoPointsRight

INFINITY = math.inf

Width = Union[int, float]


@dataclass(frozen=True)
class PathParams:
    """Parámetros (k, a) de la familia de caminos"""
    k: int
    a: Width

    def __post_init__(self):
        if isinstance(self.k, bool) or not isinstance(self.k, int) or self.k < 1:
            raise InvalidParams(f"k debe ser un entero >= 1, recibido {self.k!r}")
        if self.a != INFINITY and (isinstance(self.a, bool) or not isinstance(self.a, int) or self.a < 1):
            raise InvalidParams(f"a debe ser un entero >= 1 o inf, recibido {self.a!r}")

    @property
    def is_kary(self) -> bool:
        return self.a == INFINITY

    @property
    def a_label(self) -> str:
        return "inf" if self.is_kary else str(self.a)

    def __str__(self) -> str:
        return f"k={self.k}, a={self.a_label}"


def parse_width(value: Union[str, int, float]) -> Width:
    """Interpreta el parámetro a: entero o 'inf'"""
    if isinstance(value, str):
        normalized = value.strip().lower()
        if normalized in {"inf", "infinity", "∞"}:
            return INFINITY
        try:
            return int(normalized)
        except ValueError:
            raise InvalidParams(f"Valor de a inválido: {value!r}") from None
    if value == INFINITY:
        return INFINITY
    return value


def parse_params(k: Union[str, int], a: Union[str, int, float]) -> PathParams:
    try:
        k_value = int(k)
    except (TypeError, ValueError):
        raise InvalidParams(f"Valor de k inválido: {k!r}") from None
    return PathParams(k_value, parse_width(a))


class StepKind(IntEnum):
    """Tipo de paso; el orden U < D < H define el orden lexicográfico"""
    UP = 0
    DOWN = 1
    HORIZONTAL = 2

    @property
    def letter(self) -> str:
        return "UDH"[self]


_LETTERS = {"U": StepKind.UP, "D": StepKind.DOWN, "H": StepKind.HORIZONTAL}

UP = StepKind.UP
DOWN = StepKind.DOWN
HORIZONTAL = StepKind.HORIZONTAL


@dataclass(frozen=True)
class LatticePoint:
    x: int
    y: int

    def __str__(self) -> str:
        return f"({self.x},{self.y})"


@dataclass(frozen=True)
class Hump:
    """Joroba U H^run D localizada por índices de paso"""
    up_index: int
    run: int
    down_index: int

    def __post_init__(self):
        if self.down_index != self.up_index + self.run + 1:
            raise ValueError(
                f"Joroba inconsistente: up={self.up_index}, run={self.run}, down={self.down_index}"
            )

    @property
    def is_peak(self) -> bool:
        return self.run == 0


@dataclass(frozen=True)
class LatticePath:
    """Camino (o súper camino) sobre {U, D, H} con parámetros (k, a)"""
    params: PathParams
    steps: Tuple[StepKind, ...] = ()

    def __post_init__(self):
        if type(self.steps) is not tuple:
            object.__setattr__(self, "steps", tuple(StepKind(s) for s in self.steps))
        if self.params.is_kary and HORIZONTAL in self.steps:
            raise HorizontalForbidden(self.steps.index(HORIZONTAL))

    def __len__(self) -> int:
        return len(self.steps)

    def __str__(self) -> str:
        return self.word

    @cached_property
    def word(self) -> str:
        return "".join(step.letter for step in self.steps)

    @cached_property
    def heights(self) -> Tuple[int, ...]:
        """Altura tras cada paso"""
        rise = (self.params.k, -1, 0)
        return tuple(accumulate(rise[step] for step in self.steps))

    @cached_property
    def xs(self) -> Tuple[int, ...]:
        """Coordenada x del punto final de cada paso"""
        width = (1, 1, 0 if self.params.is_kary else self.params.a)
        return tuple(accumulate(width[step] for step in self.steps))

    @property
    def order(self) -> int:
        return self.xs[-1] if self.steps else 0

    def count(self, kind: StepKind) -> int:
        return self.steps.count(kind)

    @property
    def is_closed(self) -> bool:
        return not self.steps or self.heights[-1] == 0

    def start_height(self, index: int) -> int:
        return self.heights[index - 1] if index > 0 else 0

    def start_point(self, index: int) -> LatticePoint:
        if index == 0:
            return LatticePoint(0, 0)
        return LatticePoint(self.xs[index - 1], self.heights[index - 1])

    def end_point(self, index: int) -> LatticePoint:
        return LatticePoint(self.xs[index], self.heights[index])

    def leading_horizontals(self) -> int:
        count = 0
        for step in self.steps:
            if step is not HORIZONTAL:
                break
            count += 1
        return count

    def segment(self, lo: int, hi: int) -> "LatticePath":
        return LatticePath(self.params, self.steps[lo:hi])

    def concat(self, *others: "LatticePath") -> "LatticePath":
        steps = list(self.steps)
        for other in others:
            steps.extend(other.steps)
        return LatticePath(self.params, tuple(steps))


def parse_path(word: str, params: PathParams) -> LatticePath:
    """Convierte una palabra sobre {U, D, H} en un LatticePath"""
    steps = []
    for position, char in enumerate(word):
        step = _LETTERS.get(char)
        if step is None:
            raise IllegalCharacter(position, char)
        if step is HORIZONTAL and params.is_kary:
            raise HorizontalForbidden(position)
        steps.append(step)
    return LatticePath(params, tuple(steps))


def height_profile(path: LatticePath) -> List[int]:
    return list(path.heights)


def is_nonnegative(path: LatticePath) -> bool:
    return all(h >= 0 for h in path.heights)


def reverse_path(path: LatticePath) -> LatticePath:
    """Camino leído de derecha a izquierda, sin cambiar las letras"""
    return LatticePath(path.params, path.steps[::-1])


def humps(path: LatticePath) -> List[Hump]:
    """Todas las jorobas U H* D, ordenadas por índice del paso U"""
    steps = path.steps
    size = len(steps)
    found = []
    for i, step in enumerate(steps):
        if step is not UP:
            continue
        j = i + 1
        while j < size and steps[j] is HORIZONTAL:
            j += 1
        if j < size and steps[j] is DOWN:
            found.append(Hump(i, j - i - 1, j))
    return found


def peaks(path: LatticePath) -> List[Hump]:
    return [hump for hump in humps(path) if hump.run == 0]


def leftmost_crossing_up(path: LatticePath) -> Optional[int]:
    """Índice del primer U que empieza en y <= 0 y termina en y >= 0"""
    k = path.params.k
    for i, step in enumerate(path.steps):
        if step is UP:
            start = path.start_height(i)
            if start <= 0 <= start + k:
                return i
    return None


def first_return_index(path: LatticePath, x0: int) -> Optional[int]:
    """Índice del paso cuyo punto final es el primer retorno con x > x0"""
    for i, (x, y) in enumerate(zip(path.xs, path.heights)):
        if x > x0 and y == 0:
            return i
    return None


def rightmost_lowest_index(path: LatticePath, x0: int) -> int:
    """Índice del paso que termina en el punto más bajo (el de mayor x) con x > x0"""
    best = None
    best_height = None
    for i, (x, y) in enumerate(zip(path.xs, path.heights)):
        if x > x0 and (best_height is None or y <= best_height):
            best, best_height = i, y
    if best is None:
        raise NoPointsRight(x0)
    return best


def first_return_after(path: LatticePath, x0: int) -> Optional[LatticePoint]:
    index = first_return_index(path, x0)
    return None if index is None else path.end_point(index)


def rightmost_lowest_after(path: LatticePath, x0: int) -> LatticePoint:
    return path.end_point(rightmost_lowest_index(path, x0))
