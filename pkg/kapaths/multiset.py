"""Permutaciones de un multiconjunto en orden lexicográfico."""

from typing import Iterator, Sequence, Tuple, TypeVar

T = TypeVar("T")


def multiset_permutations(items: Sequence[T]) -> Iterator[Tuple[T, ...]]:
    """Genera cada permutación distinta de ``items`` una sola vez, en orden
    lexicográfico creciente (algoritmo next-permutation).

    Devuelve copias en forma de tupla; para un multiconjunto vacío genera
    la tupla vacía.
    """
    seq = sorted(items)
    last = len(seq)
    yield tuple(seq)
    if last < 2:
        return
    while True:
        # Mayor i con seq[i] < seq[i + 1]
        i = last - 2
        while i >= 0 and not seq[i] < seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = last - 1
        while not seq[i] < seq[j]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])
        yield tuple(seq)
