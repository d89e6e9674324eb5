"""Excepciones de kapaths.

Las subclases de ``ValueError`` señalan entradas inválidas; las de
``RuntimeError`` señalan un fallo interno (una propiedad garantizada por la
construcción que no se cumple).
"""

from typing import Optional


class KapathError(Exception):
    """Base de todas las excepciones del paquete."""


class InvalidParams(KapathError, ValueError):
    """Parámetros (k, a) fuera de rango."""


class IllegalCharacter(KapathError, ValueError):
    """Carácter distinto de U, D, H en una palabra."""

    def __init__(self, position: int, char: str):
        self.position = position
        self.char = char
        super().__init__(f"Carácter inválido {char!r} en la posición {position}")


class HorizontalForbidden(KapathError, ValueError):
    """Paso H con a = INFINITY."""

    def __init__(self, position: int):
        self.position = position
        super().__init__(f"Paso horizontal no permitido con a=inf (posición {position})")


class NoPointsRight(KapathError, ValueError):
    """No hay puntos del camino a la derecha de x0."""

    def __init__(self, x0: int):
        self.x0 = x0
        super().__init__(f"No hay puntos a la derecha de x={x0}")


class MalformedColoredPath(KapathError, ValueError):
    """Camino coloreado inválido (joroba ausente, color fuera de rango, camino no válido)."""


class NoUpStep(KapathError, ValueError):
    """Súper camino sin pasos U (fuera de S')."""


class NonIntegerResult(KapathError, RuntimeError):
    """Una fórmula cerrada produjo un cociente no entero."""


class StructureViolation(KapathError, RuntimeError):
    """Una descomposición no cumple la estructura garantizada."""

    def __init__(self, message: str, word: Optional[str] = None):
        self.word = word
        if word is not None:
            message = f"{message} (camino {word})"
        super().__init__(message)


class BudgetExceeded(KapathError):
    """La enumeración solicitada supera el presupuesto configurado."""

    def __init__(self, size: int, budget: int):
        self.size = size
        self.budget = budget
        super().__init__(f"Tamaño {size} supera el presupuesto {budget}")


class NotClosed(KapathError, ValueError):
    """El camino no termina a altura 0."""
