#!/usr/bin/env python3
# kapath_cli.py
"""
CLI de kapaths: enumeración, recuentos, φ / ψ, verificación de identidades
y tablas de fórmulas cerradas.

Códigos de salida: 0 correcto, 1 identidad fallida, 2 argumentos o entrada
inválidos, 3 presupuesto superado, 4 súper camino sin pasos U.
"""

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from config import (
    KapathConfig,
    apply_env_overrides,
    config_summary,
    generate_default_config,
    load_config,
    override_log_level,
    setup_logging,
)
from kapaths.bijection import map_colored, unmap_super
from kapaths.enumeration import (
    FAMILIES,
    ColoredHumpPath,
    Restriction,
    count_kary_peak_paths,
    count_paths,
    count_SUD,
    count_SUU,
    count_super,
    count_table,
    enumerate_paths,
    enumerate_restricted,
    enumerate_super,
)
from kapaths.errors import BudgetExceeded, KapathError, NoUpStep
from kapaths.formats import (
    colored_from_dict,
    colored_from_path,
    dumps,
    mapping_to_dict,
    path_from_json,
    path_to_dict,
    records_to_csv,
    report_lines,
    table_to_csv,
    table_to_json,
)
from kapaths.identities import CLAIMS, CellKind, resolve_claims
from kapaths.path_core import LatticePath, PathParams, Width, parse_path, parse_width
from kapaths.sweep import expand_grid, run_sweep
from monitoring import verify_metrics

logger = logging.getLogger("kapath_cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_NO_UP = 4

ENUMERABLE = ("paths", "super", "s_prime", "s_dprime")
FORMULAS = ("narayana", "peaks", "suu", "sud")


@dataclass
class CliConfig:
    """Parámetros comunes de una orden"""
    k: int
    a: Width
    n: int
    format: str
    budget: int
    m: Optional[List[int]] = None

    @property
    def params(self) -> PathParams:
        return PathParams(self.k, self.a)


def parse_int_range(text: str) -> List[int]:
    """'0..12', '1,2,5' o combinaciones como '1..3,7'"""
    values: List[int] = []
    try:
        for part in text.split(','):
            part = part.strip()
            if not part:
                continue
            if '..' in part:
                lo, hi = part.split('..', 1)
                lo_value, hi_value = int(lo), int(hi)
                if hi_value < lo_value:
                    raise argparse.ArgumentTypeError(f"Rango vacío: {part}")
                values.extend(range(lo_value, hi_value + 1))
            else:
                values.append(int(part))
    except ValueError:
        raise argparse.ArgumentTypeError(f"Rango inválido: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"Rango vacío: {text!r}")
    return list(dict.fromkeys(values))


def _range_from(minimum: int, name: str) -> Callable[[str], List[int]]:
    """parse_int_range que además exige valores >= minimum"""
    def parse(text: str) -> List[int]:
        values = parse_int_range(text)
        below = [value for value in values if value < minimum]
        if below:
            raise argparse.ArgumentTypeError(f"{name} debe ser >= {minimum}, recibido {below[0]}")
        return values
    return parse


parse_n_range = _range_from(0, "n")
parse_k_range = _range_from(1, "k")


def parse_a_values(text: str) -> List[Width]:
    """Lista de anchuras: '1,2,inf' (admite rangos enteros '1..3')"""
    values: List[Width] = []
    for part in text.split(','):
        part = part.strip()
        if not part:
            continue
        if '..' in part:
            values.extend(parse_int_range(part))
            continue
        try:
            values.append(parse_width(part))
        except KapathError:
            raise argparse.ArgumentTypeError(f"Valor de a inválido: {part!r}") from None
    if not values:
        raise argparse.ArgumentTypeError(f"Lista de a vacía: {text!r}")
    return list(dict.fromkeys(values))


def _width(text: str) -> Width:
    try:
        return parse_width(text)
    except KapathError:
        raise argparse.ArgumentTypeError(f"Valor de a inválido: {text!r}") from None


def _non_negative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"Entero inválido: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"Se esperaba un entero >= 0: {value}")
    return value


def _positive(text: str) -> int:
    value = _non_negative(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"Se esperaba un entero >= 1: {value}")
    return value


def _emit(text: str):
    if text:
        sys.stdout.write(text if text.endswith('\n') else text + '\n')
        sys.stdout.flush()


def _check_budget(size: int, budget: int):
    if size > budget:
        raise BudgetExceeded(size, budget)


# --- órdenes ----------------------------------------------------------------

def cmd_enumerate(cfg: CliConfig, family: str) -> int:
    """Imprime una palabra por línea (o un array JSON / CSV)"""
    params = cfg.params
    size = count_paths(cfg.n, params) if family == "paths" else count_super(cfg.n, params)
    _check_budget(size, cfg.budget)

    if family == "paths":
        stream = enumerate_paths(cfg.n, params)
    elif family == "super":
        stream = enumerate_super(cfg.n, params)
    else:
        stream = enumerate_restricted(cfg.n, params, Restriction(family))

    if cfg.format == "json":
        _emit(dumps([path_to_dict(path) for path in stream]))
    elif cfg.format == "csv":
        _emit(records_to_csv(("word",), ((path.word,) for path in stream)))
    else:
        for path in stream:
            _emit(path.word)
    return EXIT_OK


def cmd_count(cfg: CliConfig, n_values: Sequence[int], families: Sequence[str]) -> int:
    """Tabla (n, k, a, familia, valor)"""
    params = cfg.params
    if any(family in ("humps_total", "peaks_total") for family in families):
        for n in n_values:
            _check_budget(count_paths(n, params), cfg.budget)
    rows = count_table(n_values, params, families)
    if cfg.format == "json":
        _emit(table_to_json(rows))
    elif cfg.format == "csv":
        _emit(table_to_csv(rows))
    else:
        for row in rows:
            _emit(f"n={row.n} k={row.k} a={row.a} {row.family}={row.value}")
    return EXIT_OK


def _read_path(text: str, params: PathParams) -> LatticePath:
    """Palabra sobre {U, D, H} o registro JSON {"k", "a", "word"} con sus propios (k, a)"""
    if text.lstrip().startswith('{'):
        return path_from_json(text)
    return parse_path(text, params)


def _read_colored(text: str, params: PathParams, hump_up_index: Optional[int],
                  color: Optional[int]) -> ColoredHumpPath:
    """Camino coloreado desde una palabra o desde un testigo JSON {"path", "hump_up_index", "color"}.

    --hump y --color sustituyen a los campos del testigo.
    """
    if text.lstrip().startswith('{'):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ValueError(f"JSON inválido: {exc}") from None
        if isinstance(data, dict) and "path" in data:
            if hump_up_index is not None:
                data["hump_up_index"] = hump_up_index
            if color is not None:
                data["color"] = color
            return colored_from_dict(data)
    if hump_up_index is None or color is None:
        raise ValueError("map requiere --hump y --color salvo con un testigo JSON")
    return colored_from_path(_read_path(text, params), hump_up_index, color)


def cmd_map(cfg: CliConfig, word: str, hump_up_index: Optional[int], color: Optional[int],
            check: bool = True) -> int:
    """φ: imprime el registro JSON del mapeo"""
    colored = _read_colored(word, cfg.params, hump_up_index, color)
    _emit(dumps(mapping_to_dict(map_colored(colored, check))))
    return EXIT_OK


def cmd_unmap(cfg: CliConfig, word: str, check: bool = True) -> int:
    """ψ: imprime el registro JSON del par (camino coloreado, súper camino)"""
    path = _read_path(word, cfg.params)
    _emit(dumps(mapping_to_dict(unmap_super(path, check))))
    return EXIT_OK


def _claim_n_values(claim: str, config: KapathConfig) -> List[int]:
    grid = config.grid
    kind = CLAIMS[claim].kind
    if kind is CellKind.NK:
        return list(range(1, grid.lemma_n_max + 1))
    if claim == "narayana":
        return list(range(1, grid.narayana_n_max + 1))
    return grid.n_values


def cmd_verify(config: KapathConfig, claims: Sequence[str], k_values: Sequence[int],
               a_values: Sequence[Width], n_values: Optional[Sequence[int]], output_format: str,
               budget: int, workers: int) -> int:
    """Barrido de identidades; 1 si alguna falla"""
    cells = []
    for claim in claims:
        values = n_values if n_values is not None else _claim_n_values(claim, config)
        cells.extend(expand_grid([claim], k_values, a_values, values))

    result = run_sweep(cells, workers=workers, budget=budget, check=config.verification.strict_checks)

    if output_format == "json":
        for line in report_lines(result.reports):
            _emit(line)
    elif output_format == "csv":
        header = ("claim", "n", "k", "a", "m", "lhs", "rhs", "verified", "witness")
        _emit(records_to_csv(header, (
            (r.claim.value, r.param("n", ""), r.param("k", ""), r.param("a", ""), r.param("m", ""),
             r.lhs, r.rhs, str(r.verified).lower(), r.witness or "")
            for r in result.reports
        )))
    else:
        for report in result.reports:
            cell = " ".join(f"{name}={value}" for name, value in report.params)
            status = "OK" if report.verified else "FALLO"
            line = f"{report.claim.value} {cell} lhs={report.lhs} rhs={report.rhs} {status}"
            if report.witness:
                line += f" testigo={report.witness}"
            _emit(line)

    if result.skipped:
        logger.warning("%d celdas omitidas por presupuesto", len(result.skipped))
    if not result.all_verified:
        logger.error("%d reportes fallidos", len(result.failed))
        return EXIT_FAILED
    return EXIT_OK


def _formula(name: str, k: Optional[int]) -> Callable[[int, int], int]:
    k_value = 1 if k is None else k
    if name in ("narayana", "peaks"):
        return lambda n, m: count_kary_peak_paths(n, k_value, m)
    if name == "suu":
        return lambda n, m: count_SUU(n, k_value, m)
    return lambda n, m: count_SUD(n, k_value, m)


def cmd_table(cfg: CliConfig, formula: str, k: Optional[int]) -> int:
    """Valores de una fórmula cerrada sobre el rango de m"""
    if cfg.n < 1:
        raise ValueError(f"table requiere n >= 1, recibido {cfg.n}")
    m_values = cfg.m or list(range(1, cfg.n + 1))
    if min(m_values) < 1:
        raise ValueError("table requiere m >= 1")
    evaluate = _formula(formula, k)
    values = [(m, evaluate(cfg.n, m)) for m in m_values]
    if cfg.format == "json":
        _emit(dumps([{"m": m, "value": str(value)} for m, value in values]))
    elif cfg.format == "csv":
        _emit(records_to_csv(("m", "value"), values))
    else:
        _emit(",".join(str(value) for _, value in values))
    return EXIT_OK


# --- argumentos -------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kapath",
        description="Caminos (k,a), jorobas, picos y la biyección con súper caminos",
    )
    parser.add_argument('--config', default=None, help='Archivo de configuración YAML')
    parser.add_argument('--log-level', default=None,
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'],
                        help='Nivel de logging (stderr)')

    subparsers = parser.add_subparsers(dest='command', help='Comandos disponibles')

    def common(sub, with_n: bool = True, n_type=_non_negative):
        sub.add_argument('--k', type=_positive, default=1, help='Altura del paso U (k >= 1)')
        sub.add_argument('--a', type=_width, default=1, help="Anchura del paso H (entero o 'inf')")
        if with_n:
            sub.add_argument('--n', type=n_type, required=True, help='Orden del camino')
        sub.add_argument('--format', choices=['text', 'json', 'csv'], default=None, help='Formato de salida')
        sub.add_argument('--budget', type=_positive, default=None, help='Tamaño máximo de enumeración')

    # Comando enumerate
    enumerate_parser = subparsers.add_parser('enumerate', help='Enumerar caminos o súper caminos')
    enumerate_parser.add_argument('--family', choices=ENUMERABLE, default='paths', help='Familia a enumerar')
    common(enumerate_parser)

    # Comando count
    count_parser = subparsers.add_parser('count', help='Tabla de recuentos por familia')
    common(count_parser, n_type=parse_n_range)
    count_parser.add_argument('--families', default=",".join(FAMILIES),
                              help=f"Familias separadas por comas ({', '.join(FAMILIES)})")

    # Comando map
    map_parser = subparsers.add_parser('map', help='Aplicar φ a un camino con una joroba coloreada')
    map_parser.add_argument('word', help='Palabra sobre {U, D, H} o testigo JSON de camino coloreado')
    map_parser.add_argument('--hump', type=_non_negative, default=None, help='Índice del paso U de la joroba')
    map_parser.add_argument('--color', type=_positive, default=None, help='Color en [1, k+1]')
    common(map_parser, with_n=False)

    # Comando unmap
    unmap_parser = subparsers.add_parser('unmap', help='Aplicar ψ a un súper camino')
    unmap_parser.add_argument('word', help='Palabra sobre {U, D, H} o JSON {"k", "a", "word"}')
    common(unmap_parser, with_n=False)

    # Comando verify
    verify_parser = subparsers.add_parser('verify', help='Verificar identidades sobre una rejilla')
    verify_parser.add_argument('--claims', default=None,
                               help=f"Identidades separadas por comas ({', '.join(CLAIMS)}, all)")
    verify_parser.add_argument('--k', type=parse_k_range, default=None, help="Valores de k ('1..3')")
    verify_parser.add_argument('--a', type=parse_a_values, default=None, help="Valores de a ('1,2,inf')")
    verify_parser.add_argument('--n', type=parse_n_range, default=None, help="Valores de n ('0..12')")
    verify_parser.add_argument('--format', choices=['text', 'json', 'csv'], default=None, help='Formato de salida')
    verify_parser.add_argument('--budget', type=_positive, default=None, help='Súper caminos máximos por celda')
    verify_parser.add_argument('--workers', type=_positive, default=None, help='Procesos en paralelo')

    # Comando table
    table_parser = subparsers.add_parser('table', help='Tabla de una fórmula cerrada por m')
    table_parser.add_argument('--formula', choices=FORMULAS, required=True, help='Fórmula a tabular')
    table_parser.add_argument('--k', type=_positive, default=None, help='k (1 por defecto)')
    table_parser.add_argument('--n', type=_positive, required=True, help='Número de pasos U')
    table_parser.add_argument('--m', type=parse_int_range, default=None, help="Valores de m ('1..n')")
    table_parser.add_argument('--format', choices=['text', 'json', 'csv'], default=None, help='Formato de salida')

    # Comando init-config
    init_parser = subparsers.add_parser('init-config', help='Generar un archivo de configuración por defecto')
    init_parser.add_argument('--output', default='kapath_config_default.yaml', help='Archivo de salida')

    return parser


def _load(args) -> KapathConfig:
    config = load_config(args.config) if args.config else KapathConfig()
    apply_env_overrides(config)
    if args.log_level:
        override_log_level(config.logging, args.log_level)
    return config


def _cli_config(args, config: KapathConfig) -> CliConfig:
    k = getattr(args, 'k', None)
    a = getattr(args, 'a', None)
    n = getattr(args, 'n', None)
    return CliConfig(
        k=k if isinstance(k, int) else 1,
        a=a if a is not None and not isinstance(a, list) else 1,
        n=n if isinstance(n, int) else 0,
        format=getattr(args, 'format', None) or config.output.format,
        budget=getattr(args, 'budget', None) or config.verification.budget,
        m=getattr(args, 'm', None),
    )


def _dispatch(args, config: KapathConfig) -> int:
    cfg = _cli_config(args, config)
    check = config.verification.strict_checks

    if args.command == 'enumerate':
        return cmd_enumerate(cfg, args.family)
    if args.command == 'count':
        families = [family.strip() for family in args.families.split(',') if family.strip()]
        unknown = [family for family in families if family not in FAMILIES]
        if unknown:
            raise ValueError(f"Familias desconocidas: {', '.join(unknown)}")
        return cmd_count(cfg, args.n, families)
    if args.command == 'map':
        return cmd_map(cfg, args.word, args.hump, args.color, check)
    if args.command == 'unmap':
        return cmd_unmap(cfg, args.word, check)
    if args.command == 'verify':
        claims = resolve_claims((args.claims or "").split(',') if args.claims else config.verification.claims)
        grid = config.grid
        k_values = args.k or grid.k_values
        a_values = args.a or [parse_width(a) if isinstance(a, str) else a for a in grid.a_values]
        if config.monitoring.enabled and verify_metrics.start_metrics_server(config.monitoring.metrics_port):
            logger.info("Métricas expuestas en el puerto %d", config.monitoring.metrics_port)
        logger.info("Verificación: %s", config_summary(config))
        return cmd_verify(config, claims, k_values, a_values, args.n, cfg.format, cfg.budget,
                          args.workers or config.verification.workers)
    if args.command == 'table':
        return cmd_table(cfg, args.formula, args.k)
    if args.command == 'init-config':
        generate_default_config(args.output)
        return EXIT_OK
    raise ValueError(f"Comando desconocido: {args.command}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    try:
        config = _load(args)
    except (FileNotFoundError, ValueError) as exc:
        print(f"Error de configuración: {exc}", file=sys.stderr)
        return EXIT_USAGE

    setup_logging(config.logging)

    try:
        return _dispatch(args, config)
    except NoUpStep as exc:
        logger.error("%s", exc)
        return EXIT_NO_UP
    except BudgetExceeded as exc:
        logger.error("%s", exc)
        return EXIT_BUDGET
    except ValueError as exc:
        # Incluye InvalidParams, IllegalCharacter, MalformedColoredPath y NotClosed
        logger.error("Entrada inválida: %s", exc)
        return EXIT_USAGE
    except KapathError as exc:
        logger.error("Error interno: %s", exc)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
