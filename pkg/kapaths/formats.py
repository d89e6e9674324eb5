"""Codificación JSON / CSV / texto de caminos, mapeos, tablas y reportes."""

import csv
import io
import json
from typing import Any, Dict, Iterable, List, Sequence

from kapaths.enumeration import ColoredHumpPath, TableRow
from kapaths.errors import MalformedColoredPath
from kapaths.path_core import HORIZONTAL, Hump, LatticePath, parse_params, parse_path

TABLE_HEADER = ("n", "k", "a", "family", "value")


def path_to_dict(path: LatticePath) -> Dict[str, Any]:
    params = path.params
    return {"k": params.k, "a": "inf" if params.is_kary else params.a, "word": path.word}


def path_from_dict(data: Dict[str, Any]) -> LatticePath:
    if not isinstance(data, dict) or "k" not in data or "a" not in data:
        raise MalformedColoredPath(f"Se esperaba un objeto con k, a y word: {data}")
    params = parse_params(data["k"], data["a"])
    return parse_path(data.get("word", ""), params)


def path_to_json(path: LatticePath, **extra: Any) -> str:
    """{"k", "a", "word"} más los campos extra (p. ej. el motivo de un testigo)"""
    return dumps({**path_to_dict(path), **extra})


def path_from_json(text: str) -> LatticePath:
    """Acepta el registro de path_to_json; ignora los campos extra"""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedColoredPath(f"JSON inválido: {exc}") from None
    return path_from_dict(data)


def colored_to_dict(cp: ColoredHumpPath) -> Dict[str, Any]:
    return {
        "path": path_to_dict(cp.path),
        "hump_up_index": cp.hump.up_index,
        "color": cp.color,
    }


def colored_from_path(path: LatticePath, hump_up_index: int, color: int) -> ColoredHumpPath:
    """Construye el camino coloreado localizando la joroba que empieza en hump_up_index"""
    steps = path.steps
    end = hump_up_index + 1
    while end < len(steps) and steps[end] is HORIZONTAL:
        end += 1
    if not 0 <= hump_up_index < len(steps) or end >= len(steps):
        raise MalformedColoredPath(f"No hay joroba en el índice {hump_up_index} de {path.word}")
    cp = ColoredHumpPath(path, Hump(hump_up_index, end - hump_up_index - 1, end), color)
    cp.validate()
    return cp


def colored_from_dict(data: Dict[str, Any]) -> ColoredHumpPath:
    """Inversa de colored_to_dict; admite el campo extra "reason" de los testigos"""
    if not isinstance(data, dict) or not {"path", "hump_up_index", "color"} <= data.keys():
        raise MalformedColoredPath(f"Se esperaba un objeto con path, hump_up_index y color: {data}")
    return colored_from_path(path_from_dict(data["path"]), int(data["hump_up_index"]), int(data["color"]))


def mapping_to_dict(result) -> Dict[str, Any]:
    """Registro de un par φ: {"input", "hump_up_index", "color", "output", "case"}"""
    return {
        "input": path_to_dict(result.colored.path),
        "hump_up_index": result.colored.hump.up_index,
        "color": result.colored.color,
        "output": path_to_dict(result.output),
        "case": result.case.value,
    }


def dumps(payload: Any) -> str:
    return json.dumps(payload, ensure_ascii=False)


def table_to_csv(rows: Iterable[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(TABLE_HEADER)
    for row in rows:
        writer.writerow((row.n, row.k, row.a, row.family, row.value))
    return buffer.getvalue()


def table_to_json(rows: Iterable[TableRow]) -> str:
    return dumps([
        {"n": row.n, "k": row.k, "a": row.a, "family": row.family, "value": str(row.value)}
        for row in rows
    ])


def records_to_csv(header: Sequence[str], records: Iterable[Sequence[Any]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(records)
    return buffer.getvalue()


def report_lines(reports: Iterable[Any]) -> List[str]:
    """Una línea JSON por reporte (salida en streaming)"""
    return [dumps(report.to_dict()) for report in reports]
