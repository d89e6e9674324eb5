# bijection.py
"""
Biyección φ entre caminos (k,a) con una joroba coloreada con k+1 colores y
súper caminos con al menos un paso U, y su inversa ψ.

Ambas se apoyan en una descomposición única:

    camino coloreado:  R_1 P' p_l H^run d_1 R_2 d_2 ... R_k d_k P''
    súper camino:      H^m d_1 R̂_1 ... d_j R̂_j q_l R_{j+1} d_{j+1} ... R_k d_k Q' Q''

donde R̂ es el camino invertido y j = |p| es la profundidad del inicio de q_l.
Con j = c - 1 los tres casos de color (c = 1, c = k+1 y 1 < c < k+1) son un
único patrón.

Los segmentos se guardan como rangos [lo, hi) sobre la tupla de pasos
original y sólo se materializan al ensamblar.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from kapaths.enumeration import ColoredHumpPath
from kapaths.errors import NoUpStep, NotClosed, StructureViolation
from kapaths.path_core import (
    DOWN,
    HORIZONTAL,
    UP,
    Hump,
    LatticePath,
    LatticePoint,
    StepKind,
    first_return_index,
    is_nonnegative,
    leftmost_crossing_up,
    rightmost_lowest_index,
)

logger = logging.getLogger(__name__)

Segment = Tuple[int, int]


class SuperCase(Enum):
    """Caso según las alturas (p, q) de q_l"""
    CASE_I = "I"      # p = 0
    CASE_II = "II"    # q = 0
    CASE_III = "III"  # p < 0 < q


def case_for_color(color: int, k: int) -> SuperCase:
    if color == 1:
        return SuperCase.CASE_I
    if color == k + 1:
        return SuperCase.CASE_II
    return SuperCase.CASE_III


def _fail(message: str, path: LatticePath):
    logger.error("Violación de estructura: %s en %s", message, path.word)
    raise StructureViolation(message, path.word)


def _is_path_segment(steps: Tuple[StepKind, ...], path: LatticePath) -> bool:
    """¿Es el segmento, trasladado a altura 0, un camino (k,a) cerrado y no negativo?"""
    segment = LatticePath(path.params, steps)
    return segment.is_closed and is_nonnegative(segment)


@dataclass(frozen=True)
class HumpDecomposition:
    """R_1 P' p_l H^run d_1 R_2 d_2 ... R_k d_k P''"""
    path: LatticePath
    r1: Segment
    p_prime: Segment
    pl_index: int
    run: int
    d_indices: Tuple[int, ...]
    r_segments: Tuple[Segment, ...]  # R_1..R_k; r_segments[0] == r1
    p_dprime: Segment
    anchor: LatticePoint

    def steps_of(self, segment: Segment) -> Tuple[StepKind, ...]:
        lo, hi = segment
        return self.path.steps[lo:hi]

    def reassemble(self) -> Tuple[StepKind, ...]:
        steps = self.path.steps
        parts: List[StepKind] = []
        parts.extend(self.steps_of(self.r1))
        parts.extend(self.steps_of(self.p_prime))
        parts.append(steps[self.pl_index])
        parts.extend([HORIZONTAL] * self.run)
        for i, d_index in enumerate(self.d_indices):
            if i > 0:
                parts.extend(self.steps_of(self.r_segments[i]))
            parts.append(steps[d_index])
        parts.extend(self.steps_of(self.p_dprime))
        return tuple(parts)


@dataclass(frozen=True)
class SuperDecomposition:
    """H^m d_1 R̂_1 ... d_j R̂_j q_l R_{j+1} d_{j+1} ... R_k d_k Q' Q''"""
    path: LatticePath
    case_tag: SuperCase
    leading_h: int
    ql_index: int
    d_indices: Tuple[int, ...]
    r_segments: Tuple[Segment, ...]  # rango en el súper camino; los j primeros van invertidos
    q_prime: Segment
    q_dprime: Segment
    anchorA: LatticePoint  # noqa: N815
    anchorB: LatticePoint  # noqa: N815
    p: int
    q: int

    @property
    def depth(self) -> int:
        """j = |p|: número de d_i a la izquierda de q_l"""
        return -self.p

    @property
    def color(self) -> int:
        return self.depth + 1

    def r_steps(self, i: int) -> Tuple[StepKind, ...]:
        """R_{i+1} recuperado (deshaciendo la inversión cuando corresponde)"""
        lo, hi = self.r_segments[i]
        steps = self.path.steps[lo:hi]
        return steps[::-1] if i < self.depth else steps

    def reassemble(self) -> Tuple[StepKind, ...]:
        steps = self.path.steps
        parts: List[StepKind] = [HORIZONTAL] * self.leading_h
        for i in range(self.depth):
            parts.append(steps[self.d_indices[i]])
            parts.extend(self.r_steps(i)[::-1])
        parts.append(steps[self.ql_index])
        for i in range(self.depth, len(self.d_indices)):
            parts.extend(self.r_steps(i))
            parts.append(steps[self.d_indices[i]])
        for lo, hi in (self.q_prime, self.q_dprime):
            parts.extend(steps[lo:hi])
        return tuple(parts)


def _first_down_from(path: LatticePath, start: int, level: int) -> Optional[int]:
    """Primer paso desde ``start`` que va de y=level a y=level-1"""
    steps = path.steps
    for index in range(start, len(steps)):
        if steps[index] is DOWN and path.start_height(index) == level:
            return index
    return None


def _last_down_before(path: LatticePath, stop: int, level: int) -> Optional[int]:
    """Último paso antes de ``stop`` que va de y=level a y=level-1"""
    steps = path.steps
    for index in range(stop - 1, -1, -1):
        if steps[index] is DOWN and path.start_height(index) == level:
            return index
    return None


def decompose_colored(cp: ColoredHumpPath, check: bool = True) -> HumpDecomposition:
    """Descomposición única del camino coloreado alrededor de su joroba"""
    cp.validate()
    path, hump = cp.path, cp.hump
    k = path.params.k
    pl = hump.up_index
    h = path.start_height(pl)

    d_indices = [hump.down_index]
    r_segments: List[Segment] = []
    for i in range(2, k + 1):
        d_index = _first_down_from(path, d_indices[-1] + 1, h + k + 1 - i)
        if d_index is None:
            _fail(f"no existe d_{i}", path)
        r_segments.append((d_indices[-1] + 1, d_index))
        d_indices.append(d_index)

    # P' empieza en el último punto de altura 0 antes de p_l
    start = pl
    if h > 0:
        start = next(j for j in range(pl - 1, -1, -1) if path.start_height(j) == 0)
    r1 = (0, start)

    decomposition = HumpDecomposition(
        path=path,
        r1=r1,
        p_prime=(start, pl),
        pl_index=pl,
        run=hump.run,
        d_indices=tuple(d_indices),
        r_segments=(r1, *r_segments),
        p_dprime=(d_indices[-1] + 1, len(path.steps)),
        anchor=path.start_point(pl),
    )
    if check:
        _check_hump_decomposition(decomposition)
    return decomposition


def _check_hump_decomposition(dec: HumpDecomposition):
    path = dec.path
    for i, d_index in enumerate(dec.d_indices, start=1):
        if path.steps[d_index] is not DOWN:
            _fail(f"d_{i} no es un paso D", path)
    for i, segment in enumerate(dec.r_segments, start=1):
        if not _is_path_segment(dec.steps_of(segment), path):
            _fail(f"R_{i} no es un camino (k,a)", path)
    lo, hi = dec.p_prime
    if lo < hi:
        if path.steps[lo] is not UP or any(path.heights[i] <= 0 for i in range(lo, hi)):
            _fail("P' no queda estrictamente sobre el eje", path)
    if dec.reassemble() != path.steps:
        _fail("la descomposición no reproduce el camino", path)


def phi(cp: ColoredHumpPath, check: bool = True) -> LatticePath:
    """φ: camino con joroba coloreada -> súper camino de S'"""
    dec = decompose_colored(cp, check)
    path = cp.path
    steps = path.steps
    k = path.params.k
    depth = cp.color - 1

    parts: List[StepKind] = [HORIZONTAL] * dec.run
    for i in range(depth):
        parts.append(steps[dec.d_indices[i]])
        parts.extend(dec.steps_of(dec.r_segments[i])[::-1])
    parts.append(steps[dec.pl_index])
    for i in range(depth, k):
        parts.extend(dec.steps_of(dec.r_segments[i]))
        parts.append(steps[dec.d_indices[i]])
    parts.extend(dec.steps_of(dec.p_dprime))
    parts.extend(dec.steps_of(dec.p_prime))

    image = LatticePath(path.params, tuple(parts))
    if check and not image.is_closed:
        _fail("φ produjo un camino no cerrado", path)
    return image


def decompose_super(qp: LatticePath, check: bool = True) -> SuperDecomposition:
    """Descomposición de un súper camino de S' alrededor de q_l, el primer U que cruza el eje"""
    if UP not in qp.steps:
        raise NoUpStep(f"{qp.word or '(vacío)'} no tiene pasos U")
    if not qp.is_closed:
        raise NotClosed(f"{qp.word} no termina a altura 0")

    k = qp.params.k
    ql = leftmost_crossing_up(qp)
    if ql is None:
        _fail("no hay paso U que cruce el eje", qp)
    p = qp.start_height(ql)
    q = p + k
    depth = -p
    x1 = qp.start_point(ql).x

    left: List[int] = []
    for i in range(1, depth + 1):
        d_index = _last_down_before(qp, ql, -i + 1)
        if d_index is None:
            _fail(f"no existe d_{i} a la izquierda de q_l", qp)
        left.append(d_index)

    right: List[int] = []
    r_right: List[Segment] = []
    previous = ql
    for i in range(depth + 1, k + 1):
        d_index = _first_down_from(qp, previous + 1, k + 1 - i)
        if d_index is None:
            _fail(f"no existe d_{i} a la derecha de q_l", qp)
        r_right.append((previous + 1, d_index))
        right.append(d_index)
        previous = d_index

    bounds = left + [ql]
    r_left = [(bounds[i] + 1, bounds[i + 1]) for i in range(depth)]
    leading_h = left[0] if left else ql

    a_index = first_return_index(qp, x1)
    b_index = rightmost_lowest_index(qp, x1)

    if p == 0:
        case_tag = SuperCase.CASE_I
    elif q == 0:
        case_tag = SuperCase.CASE_II
    else:
        case_tag = SuperCase.CASE_III

    decomposition = SuperDecomposition(
        path=qp,
        case_tag=case_tag,
        leading_h=leading_h,
        ql_index=ql,
        d_indices=tuple(left + right),
        r_segments=tuple(r_left + r_right),
        q_prime=(previous + 1, b_index + 1),
        q_dprime=(b_index + 1, len(qp.steps)),
        anchorA=qp.end_point(a_index) if a_index is not None else None,
        anchorB=qp.end_point(b_index),
        p=p,
        q=q,
    )
    if check:
        _check_super_decomposition(decomposition, a_index, b_index, previous)
    return decomposition


def _check_super_decomposition(dec: SuperDecomposition, a_index: Optional[int],
                               b_index: int, last: int):
    qp = dec.path
    if any(step is not HORIZONTAL for step in qp.steps[:dec.leading_h]):
        _fail("el prefijo antes de d_1 (o q_l) no es H^m", qp)
    if list(dec.d_indices[:dec.depth]) != sorted(dec.d_indices[:dec.depth]):
        _fail("los d_i de la izquierda no están ordenados", qp)
    for i in range(len(dec.r_segments)):
        if not _is_path_segment(dec.r_steps(i), qp):
            _fail(f"R_{i + 1} no es un camino (k,a)", qp)
    if a_index != last:
        _fail("A no es el final de d_k (o de q_l)", qp)
    if b_index < last:
        _fail("B queda a la izquierda de A", qp)
    if dec.reassemble() != qp.steps:
        _fail("la descomposición no reproduce el súper camino", qp)


def psi(qp: LatticePath, check: bool = True) -> ColoredHumpPath:
    """ψ: súper camino de S' -> camino con joroba coloreada por |p|+1"""
    dec = decompose_super(qp, check)
    steps = qp.steps
    k = qp.params.k

    parts: List[StepKind] = list(dec.r_steps(0))
    lo, hi = dec.q_dprime
    parts.extend(steps[lo:hi])
    up_index = len(parts)
    parts.append(steps[dec.ql_index])
    parts.extend([HORIZONTAL] * dec.leading_h)
    parts.append(steps[dec.d_indices[0]])
    for i in range(1, k):
        parts.extend(dec.r_steps(i))
        parts.append(steps[dec.d_indices[i]])
    lo, hi = dec.q_prime
    parts.extend(steps[lo:hi])

    path = LatticePath(qp.params, tuple(parts))
    colored = ColoredHumpPath(path, Hump(up_index, dec.leading_h, up_index + dec.leading_h + 1), dec.color)
    if check and not (path.is_closed and is_nonnegative(path)):
        _fail("ψ produjo un camino que baja del eje", qp)
    return colored


@dataclass(frozen=True)
class MappingResult:
    """Par (camino coloreado, súper camino) relacionado por φ"""
    colored: ColoredHumpPath
    output: LatticePath
    case: SuperCase


def map_colored(cp: ColoredHumpPath, check: bool = True) -> MappingResult:
    return MappingResult(cp, phi(cp, check), case_for_color(cp.color, cp.path.params.k))


def unmap_super(qp: LatticePath, check: bool = True) -> MappingResult:
    dec = decompose_super(qp, check)
    return MappingResult(psi(qp, check), qp, dec.case_tag)
