# identities.py
"""
Comprobación de las identidades de conteo y de la biyección por celdas.

Cada comprobación devuelve un ``IdentityReport`` (o una lista, una por valor
de m) con los dos lados de la identidad como enteros exactos. Cuando la
identidad falla el reporte lleva un testigo serializado: el camino que rompe
la biyección o el comando para reproducir la celda.
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Set, Tuple

from kapaths.bijection import phi, psi
from kapaths.enumeration import (
    ColorMode,
    ColoredHumpPath,
    Restriction,
    binomial,
    count_kary_peak_paths,
    count_peaks,
    count_restricted,
    count_SUD,
    count_SUU,
    count_super,
    delta_divides,
    enumerate_colored,
    enumerate_paths,
    enumerate_restricted,
    kary_peak_census,
    kary_peak_paths_by_derivation,
    kary_words,
    lemma_census,
    starts_ud,
    starts_uu,
    total_statistic,
)
from kapaths.errors import KapathError
from kapaths.formats import colored_to_dict, dumps, path_to_json
from kapaths.path_core import INFINITY, LatticePath, PathParams, peaks

logger = logging.getLogger(__name__)


class Claim(Enum):
    """Identidades verificables"""
    EQ1 = "EQ1"            # 2·Σhumps(P_n(1,1)) = |SP_n(1,1)| - 1
    EQ2 = "EQ2"            # 2·Σpeaks(P_n(1,∞)) = |SP_n(1,∞)|
    EQ3 = "EQ3"            # 2·Σhumps(P_n(1,2)) = |SP_n(1,2)| - 1, n par
    EQ4 = "EQ4"            # (k+1)·Σhumps = |SP_n| - δ_{a|n}
    EQ5 = "EQ5"            # (k+1)·Σpeaks = |SP_n| - |SP_{n-a}|
    EQ6 = "EQ6"            # |caminos con joroba coloreada| = |S'_n|
    EQ7 = "EQ7"            # |caminos con pico coloreado| = |S''_n|
    THM1 = "THM1"          # longitud de la joroba = H iniciales de φ
    C1 = "C1"              # |S^UU_n(k,m)|
    C2 = "C2"              # |S^UD_n(k,m)|
    NARAYANA = "NARAYANA"  # caminos de Dyck por picos
    KARY = "KARY"          # caminos k-arios por picos
    CROSS = "CROSS"        # derivación vía S^UU/S^UD = forma cerrada
    PHI_PEAKS = "PHI_PEAKS"  # φ(picos coloreados con 1) = S^UU(m-1) ∪ S^UD(m)
    ROUNDTRIP = "ROUNDTRIP"  # ψ∘φ = id, φ∘ψ = id, imágenes S' y S''


@dataclass(frozen=True)
class IdentityReport:
    """Resultado de una identidad en una celda; verified <=> lhs == rhs"""
    claim: Claim
    params: Tuple[Tuple[str, Any], ...]
    lhs: int
    rhs: int
    witness: Optional[str] = None
    verified: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "verified", self.lhs == self.rhs)
        if self.verified and self.witness is not None:
            raise ValueError(f"Reporte {self.claim.value} verificado con testigo")

    def param(self, name: str, default: Any = None) -> Any:
        return dict(self.params).get(name, default)

    @property
    def sort_key(self) -> Tuple:
        values = dict(self.params)
        a = values.get("a")
        a_key = (1, 0) if a == "inf" else (0, a if a is not None else 0)
        return (self.claim.value, values.get("n", 0), values.get("k", 0), a_key, values.get("m", 0))

    def to_dict(self) -> Dict[str, Any]:
        """Enteros grandes como cadenas decimales"""
        payload: Dict[str, Any] = {"claim": self.claim.value}
        payload.update(self.params)
        payload["lhs"] = str(self.lhs)
        payload["rhs"] = str(self.rhs)
        payload["verified"] = self.verified
        if self.witness is not None:
            payload["witness"] = self.witness
        return payload

    def to_json(self) -> str:
        return dumps(self.to_dict())


def cell_params(n: int, params: PathParams) -> Tuple[Tuple[str, Any], ...]:
    return (("n", n), ("k", params.k), ("a", "inf" if params.is_kary else params.a))


def _replay(claim: Claim, **cell) -> str:
    """Testigo de las identidades de conteo: la celda a reproducir"""
    flags = " ".join(f"--{name} {value}" for name, value in cell.items() if name in ("n", "k", "a"))
    return f"kapath verify --claims {claim.value.lower()} {flags}"


def _report(claim: Claim, params: Tuple[Tuple[str, Any], ...], lhs: int, rhs: int,
            witness: Optional[str] = None) -> IdentityReport:
    if lhs == rhs:
        witness = None
    elif witness is None:
        witness = _replay(claim, **dict(params))
    report = IdentityReport(claim, params, lhs, rhs, witness)
    if not report.verified:
        logger.warning("%s falla en %s: lhs=%s rhs=%s", claim.value, dict(params), lhs, rhs)
    return report


# --- identidades principales ------------------------------------------------

def verify_hump_identity(n: int, params: PathParams) -> IdentityReport:
    """(k+1)·Σ #Humps = |SP_n| - δ_{a|n}"""
    lhs = (params.k + 1) * total_statistic(n, params, ColorMode.HUMP)
    rhs = count_super(n, params) - delta_divides(n, params)
    return _report(Claim.EQ4, cell_params(n, params), lhs, rhs)


def peak_identity_rhs(n: int, params: PathParams) -> int:
    """|SP_n| - |SP_{n-a}|; en n = 0 se descuenta el camino vacío"""
    shifted = 0 if params.is_kary else count_super(n - params.a, params)
    rhs = count_super(n, params) - shifted
    if n == 0:
        rhs -= 1
    return rhs


def verify_peak_identity(n: int, params: PathParams) -> IdentityReport:
    """(k+1)·Σ #Peaks = |SP_n| - |SP_{n-a}|"""
    lhs = (params.k + 1) * total_statistic(n, params, ColorMode.PEAK)
    return _report(Claim.EQ5, cell_params(n, params), lhs, peak_identity_rhs(n, params))


def verify_colored_cardinality(n: int, params: PathParams, mode: ColorMode) -> IdentityReport:
    """Recuento directo de caminos coloreados contra la enumeración de S' (o S'')"""
    which = Restriction.S_PRIME if mode is ColorMode.HUMP else Restriction.S_DPRIME
    lhs = sum(1 for _ in enumerate_colored(n, params, mode))
    rhs = sum(1 for _ in enumerate_restricted(n, params, which))
    if rhs != count_restricted(n, params, which):
        logger.error("Enumeración de %s inconsistente con su forma cerrada en n=%s (%s)",
                     which.value, n, params)
    claim = Claim.EQ6 if mode is ColorMode.HUMP else Claim.EQ7
    return _report(claim, cell_params(n, params), lhs, rhs)


def _colored_witness(cp: ColoredHumpPath, reason: str) -> str:
    payload = colored_to_dict(cp)
    payload["reason"] = reason
    return dumps(payload)


def _path_witness(path: LatticePath, reason: str) -> str:
    return path_to_json(path, reason=reason)


def verify_bijection(n: int, params: PathParams, check: bool = True) -> IdentityReport:
    """ψ∘φ = id sobre los caminos coloreados, φ∘ψ = id sobre S', φ(·) = S' y φ(picos) = S''.

    lhs cuenta las comprobaciones superadas y rhs las realizadas.
    """
    witness: Optional[str] = None
    passed = 0
    total = 0
    image: Set[LatticePath] = set()
    peak_image: Set[LatticePath] = set()

    for cp in enumerate_colored(n, params, ColorMode.HUMP):
        total += 1
        try:
            output = phi(cp, check)
            back = psi(output, check)
        except KapathError as exc:
            witness = witness or _colored_witness(cp, str(exc))
            continue
        if back != cp:
            witness = witness or _colored_witness(cp, "psi(phi(x)) != x")
            continue
        passed += 1
        image.add(output)
        if cp.hump.is_peak:
            peak_image.add(output)

    s_prime = set()
    for qp in enumerate_restricted(n, params, Restriction.S_PRIME):
        s_prime.add(qp)
        total += 1
        try:
            again = phi(psi(qp, check), check)
        except KapathError as exc:
            witness = witness or _path_witness(qp, str(exc))
            continue
        if again != qp:
            witness = witness or _path_witness(qp, "phi(psi(y)) != y")
            continue
        passed += 1

    s_dprime = set(enumerate_restricted(n, params, Restriction.S_DPRIME))
    for found, expected, label in ((image, s_prime, "S'"), (peak_image, s_dprime, "S''")):
        total += 1
        if found == expected:
            passed += 1
            continue
        stray = min(found ^ expected, key=lambda path: path.steps)
        witness = witness or _path_witness(stray, f"la imagen difiere de {label}")

    return _report(Claim.ROUNDTRIP, cell_params(n, params), passed, total, witness)


def verify_theorem1_refinement(n: int, params: PathParams, check: bool = True) -> IdentityReport:
    """La longitud de la joroba coloreada es el número de H iniciales de su imagen"""
    passed = 0
    total = 0
    witness: Optional[str] = None
    for cp in enumerate_colored(n, params, ColorMode.HUMP):
        total += 1
        try:
            image = phi(cp, check)
        except KapathError as exc:
            witness = witness or _colored_witness(cp, str(exc))
            continue
        if image.leading_horizontals() == cp.hump.run:
            passed += 1
        elif witness is None:
            witness = _colored_witness(cp, "H iniciales distintas de la longitud de la joroba")
    return _report(Claim.THM1, cell_params(n, params), passed, total, witness)


# --- caminos k-arios por picos ----------------------------------------------

def _nkm(n: int, k: int, m: int) -> Tuple[Tuple[str, Any], ...]:
    return (("n", n), ("k", k), ("m", m))


def verify_lemma_counts(n: int, k: int, m_max: Optional[int] = None) -> List[IdentityReport]:
    """|S^UU_n(k,m)| y |S^UD_n(k,m)| por fuerza bruta contra sus fórmulas, m = 1..m_max"""
    m_max = n if m_max is None else m_max
    census = lemma_census(n, k)
    reports = []
    for m in range(1, m_max + 1):
        reports.append(_report(Claim.C1, _nkm(n, k, m), census.get(("UU", m), 0), count_SUU(n, k, m)))
        reports.append(_report(Claim.C2, _nkm(n, k, m), census.get(("UD", m), 0), count_SUD(n, k, m)))
    return reports


def narayana(n: int, m: int) -> int:
    """N(n, m) = (1/n)·C(n, m)·C(n, m-1)"""
    return binomial(n, m) * binomial(n, m - 1) // n


def narayana_row(n: int) -> List[IdentityReport]:
    census = kary_peak_census(n, 1)
    reports = []
    for m in range(1, n + 1):
        closed = count_kary_peak_paths(n, 1, m)
        if closed != narayana(n, m):
            logger.error("La fórmula k-aria con k=1 no coincide con Narayana en (n=%s, m=%s)", n, m)
        reports.append(_report(Claim.NARAYANA, (("n", n), ("m", m)), census.get(m, 0), closed))
    return reports


def verify_narayana(n_max: int) -> List[IdentityReport]:
    """Caminos de Dyck por picos contra N(n, m) para n = 1..n_max"""
    reports: List[IdentityReport] = []
    for n in range(1, n_max + 1):
        reports.extend(narayana_row(n))
    return reports


def verify_kary_census(n: int, k: int) -> List[IdentityReport]:
    """Caminos k-arios con n pasos U y m picos contra (1/n)·C(n,m)·C(kn,m-1), y la derivación alternativa"""
    census = kary_peak_census(n, k)
    reports = []
    for m in range(1, n + 1):
        closed = count_kary_peak_paths(n, k, m)
        reports.append(_report(Claim.KARY, _nkm(n, k, m), census.get(m, 0), closed))
        reports.append(_report(Claim.CROSS, _nkm(n, k, m), kary_peak_paths_by_derivation(n, k, m), closed))
    return reports


def verify_kary_peak_refinement(n: int, k: int) -> List[IdentityReport]:
    """φ sobre caminos k-arios con un pico coloreado con 1 es una biyección con S^UU(m-1) ∪ S^UD(m).

    lhs cuenta imágenes distintas dentro del objetivo; rhs es el mayor de
    |Q_n(k,m)| y |objetivo|, de modo que sólo coinciden si φ es biyectiva.
    """
    params = PathParams(k, INFINITY)
    images: Dict[int, Set[LatticePath]] = defaultdict(set)
    sources: Dict[int, int] = defaultdict(int)
    first_colored: Dict[int, Dict[LatticePath, ColoredHumpPath]] = defaultdict(dict)
    for path in enumerate_paths((k + 1) * n, params):
        path_peaks = peaks(path)
        m = len(path_peaks)
        for peak in path_peaks:
            cp = ColoredHumpPath(path, peak, 1)
            output = phi(cp)
            sources[m] += 1
            images[m].add(output)
            first_colored[m].setdefault(output, cp)

    targets: Dict[int, Set[LatticePath]] = defaultdict(set)
    for word in kary_words(n, k):
        if starts_uu(word):
            targets[count_peaks(word) + 1].add(word)
        elif starts_ud(word):
            targets[count_peaks(word)].add(word)

    reports = []
    for m in range(1, n + 1):
        inside = images[m] & targets[m]
        witness = None
        stray = images[m] - targets[m]
        if stray:
            cp = first_colored[m][min(stray, key=lambda path: path.steps)]
            witness = _colored_witness(cp, "imagen fuera de S^UU(m-1) ∪ S^UD(m)")
        elif len(inside) != sources[m] or len(inside) != len(targets[m]):
            missing = targets[m] - images[m]
            if missing:
                witness = _path_witness(min(missing, key=lambda path: path.steps), "sin preimagen")
        reports.append(_report(Claim.PHI_PEAKS, _nkm(n, k, m), len(inside),
                               max(sources[m], len(targets[m])), witness))
    return reports


# --- casos particulares k = 1 -----------------------------------------------

def verify_specializations(n: int) -> List[IdentityReport]:
    """Formas clásicas con k = 1: Motzkin (a=1), Dyck (a=inf) y Schröder (a=2, n par)"""
    reports = []
    motzkin = PathParams(1, 1)
    reports.append(_report(
        Claim.EQ1, cell_params(n, motzkin),
        2 * total_statistic(n, motzkin, ColorMode.HUMP), count_super(n, motzkin) - 1,
    ))
    if n >= 1:
        dyck = PathParams(1, INFINITY)
        reports.append(_report(
            Claim.EQ2, cell_params(n, dyck),
            2 * total_statistic(n, dyck, ColorMode.PEAK), count_super(n, dyck),
        ))
    if n % 2 == 0:
        schroder = PathParams(1, 2)
        reports.append(_report(
            Claim.EQ3, cell_params(n, schroder),
            2 * total_statistic(n, schroder, ColorMode.HUMP), count_super(n, schroder) - 1,
        ))
    return reports


# --- registro ---------------------------------------------------------------

class CellKind(Enum):
    """Forma de la celda de una identidad"""
    NKA = "nka"  # (n, k, a)
    NK = "nk"    # (n, k), una fila por m
    N = "n"      # (n)


@dataclass(frozen=True)
class ClaimSpec:
    name: str
    kind: CellKind
    runner: Callable[..., List[IdentityReport]]
    min_n: int = 0
    checked: bool = False  # acepta check= (comprobaciones estructurales)


def _one(verify: Callable[..., IdentityReport]) -> Callable[..., List[IdentityReport]]:
    return lambda *args, **kwargs: [verify(*args, **kwargs)]


CLAIMS: Dict[str, ClaimSpec] = {
    "eq4": ClaimSpec("eq4", CellKind.NKA, _one(verify_hump_identity)),
    "eq5": ClaimSpec("eq5", CellKind.NKA, _one(verify_peak_identity)),
    "eq6": ClaimSpec("eq6", CellKind.NKA,
                     _one(lambda n, params: verify_colored_cardinality(n, params, ColorMode.HUMP))),
    "eq7": ClaimSpec("eq7", CellKind.NKA,
                     _one(lambda n, params: verify_colored_cardinality(n, params, ColorMode.PEAK))),
    "thm1": ClaimSpec("thm1", CellKind.NKA, _one(verify_theorem1_refinement), checked=True),
    "roundtrip": ClaimSpec("roundtrip", CellKind.NKA, _one(verify_bijection), checked=True),
    "lemma": ClaimSpec("lemma", CellKind.NK, verify_lemma_counts, min_n=1),
    "kary": ClaimSpec("kary", CellKind.NK, verify_kary_census, min_n=1),
    "phi_peaks": ClaimSpec("phi_peaks", CellKind.NK, verify_kary_peak_refinement, min_n=1),
    "narayana": ClaimSpec("narayana", CellKind.N, narayana_row, min_n=1),
    "special": ClaimSpec("special", CellKind.N, verify_specializations),
}

# Alias aceptados en --claims
CLAIM_ALIASES = {
    "eq1": "special", "eq2": "special", "eq3": "special",
    "c1": "lemma", "c2": "lemma", "cross": "kary",
}


def resolve_claims(names) -> List[str]:
    """Normaliza una lista de nombres de identidades; 'all' las selecciona todas"""
    resolved: List[str] = []
    for raw in names:
        name = str(raw).strip().lower()
        if not name:
            continue
        if name == "all":
            return list(CLAIMS)
        name = CLAIM_ALIASES.get(name, name)
        if name not in CLAIMS:
            raise ValueError(f"Identidad desconocida: {raw!r} (disponibles: {', '.join(CLAIMS)})")
        if name not in resolved:
            resolved.append(name)
    return resolved
