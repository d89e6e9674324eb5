# config.py
"""
Configuración de kapaths: rejilla de verificación, presupuesto, salida,
logging y monitoreo
"""

import logging
from dataclasses import asdict, dataclass, field
from logging.handlers import RotatingFileHandler, TimedRotatingFileHandler
from typing import List, Dict, Any, Union
import yaml
import os

DEFAULT_BUDGET = 10_000_000
BUDGET_ENV_VAR = "KAPATH_BUDGET"

VALID_FORMATS = ('text', 'json', 'csv')
VALID_LEVELS = ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL')


@dataclass
class GridConfig:
    """Rejilla de parámetros de los barridos"""
    k_values: List[int] = field(default_factory=lambda: [1, 2, 3])
    a_values: List[Union[int, str]] = field(default_factory=lambda: [1, 2, 3, "inf"])
    n_min: int = 0
    n_max: int = 12
    narayana_n_max: int = 8
    lemma_n_max: int = 6

    @property
    def n_values(self) -> List[int]:
        return list(range(self.n_min, self.n_max + 1))


@dataclass
class VerificationConfig:
    """Qué identidades se comprueban y con qué límites"""
    claims: List[str] = field(default_factory=lambda: ["all"])
    budget: int = DEFAULT_BUDGET  # súper caminos por celda
    workers: int = 1
    strict_checks: bool = True  # comprobaciones estructurales en φ / ψ


@dataclass
class OutputConfig:
    """Formato de la salida de la CLI"""
    format: str = "text"  # text, json, csv


@dataclass
class MonitoringConfig:
    """Configuración de monitoreo y métricas"""
    enabled: bool = False
    metrics_port: int = 9090  # Para Prometheus


@dataclass
class LoggingConfig:
    """Configuración de logging"""
    level: str = "INFO"  # DEBUG, INFO, WARNING, ERROR, CRITICAL
    file_enabled: bool = False
    file_path: str = "logs/kapath.log"
    file_rotation: str = "daily"  # daily, size
    file_retention_days: int = 30
    console_enabled: bool = True
    format: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"

    # Logging específico por módulo
    module_levels: Dict[str, str] = field(default_factory=lambda: {
        'kapaths.enumeration': 'INFO',
        'kapaths.bijection': 'INFO',
        'kapaths.identities': 'INFO',
        'kapaths.sweep': 'INFO'
    })


@dataclass
class KapathConfig:
    """Configuración general"""
    grid: GridConfig = field(default_factory=GridConfig)
    verification: VerificationConfig = field(default_factory=VerificationConfig)
    output: OutputConfig = field(default_factory=OutputConfig)
    monitoring: MonitoringConfig = field(default_factory=MonitoringConfig)
    logging: LoggingConfig = field(default_factory=LoggingConfig)

    name: str = "kapaths"
    description: str = "Caminos (k,a), jorobas y la biyección con súper caminos"
    version: str = "1.0.0"


def load_config(config_file: str = "kapath_config.yaml") -> KapathConfig:
    """Carga la configuración desde un archivo YAML con validación"""

    if not os.path.exists(config_file):
        raise FileNotFoundError(f"Archivo de configuración no encontrado: {config_file}")

    with open(config_file, 'r', encoding='utf-8') as f:
        config_dict = yaml.safe_load(f) or {}

    known = ['grid', 'verification', 'output', 'monitoring', 'logging']
    try:
        config = KapathConfig(
            grid=GridConfig(**(config_dict.get('grid') or {})),
            verification=VerificationConfig(**(config_dict.get('verification') or {})),
            output=OutputConfig(**(config_dict.get('output') or {})),
            monitoring=MonitoringConfig(**(config_dict.get('monitoring') or {})),
            logging=LoggingConfig(**(config_dict.get('logging') or {})),
            **{k: v for k, v in config_dict.items() if k not in known}
        )
    except TypeError as exc:
        raise ValueError(f"Clave de configuración desconocida en {config_file}: {exc}") from None

    _validate_config(config)
    return config


def _validate_config(config: KapathConfig):
    """Valida rangos y valores enumerados"""
    grid = config.grid

    for k in grid.k_values:
        if not isinstance(k, int) or k < 1:
            raise ValueError(f"k inválido '{k}' en grid.k_values")

    for a in grid.a_values:
        if isinstance(a, str):
            if a.strip().lower() not in ('inf', 'infinity'):
                raise ValueError(f"a inválido '{a}' en grid.a_values")
        elif not isinstance(a, int) or a < 1:
            raise ValueError(f"a inválido '{a}' en grid.a_values")

    if grid.n_min < 0 or grid.n_max < grid.n_min:
        raise ValueError(f"Rango de n inválido: {grid.n_min}..{grid.n_max}")

    if config.verification.budget < 1:
        raise ValueError(f"verification.budget debe ser >= 1, recibido {config.verification.budget}")

    if config.verification.workers < 1:
        raise ValueError(f"verification.workers debe ser >= 1, recibido {config.verification.workers}")

    if config.output.format not in VALID_FORMATS:
        raise ValueError(f"Formato de salida inválido '{config.output.format}'")

    if config.logging.level not in VALID_LEVELS:
        raise ValueError(f"Nivel de logging inválido '{config.logging.level}'")

    for module, level in config.logging.module_levels.items():
        if level not in VALID_LEVELS:
            raise ValueError(f"Nivel de logging inválido '{level}' para {module}")

    if len(set(grid.k_values)) != len(grid.k_values):
        logging.warning(f"Valores de k duplicados en la rejilla: {grid.k_values}")


def apply_env_overrides(config: KapathConfig) -> KapathConfig:
    """Aplica las variables de entorno (KAPATH_BUDGET)"""
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw:
        try:
            budget = int(raw)
        except ValueError:
            raise ValueError(f"{BUDGET_ENV_VAR} debe ser un entero, recibido {raw!r}") from None
        if budget < 1:
            raise ValueError(f"{BUDGET_ENV_VAR} debe ser >= 1, recibido {budget}")
        config.verification.budget = budget
    return config


def _console_handler(fmt: str) -> logging.Handler:
    """Handler de stderr; colorlog si está instalado"""
    handler = logging.StreamHandler()
    try:
        import colorlog
    except ImportError:
        handler.setFormatter(logging.Formatter(fmt))
        return handler
    handler.setFormatter(colorlog.ColoredFormatter(
        f"%(log_color)s{fmt}",
        log_colors={
            'DEBUG': 'cyan',
            'INFO': 'green',
            'WARNING': 'yellow',
            'ERROR': 'red',
            'CRITICAL': 'red,bg_white',
        }
    ))
    return handler


def _file_handler(config: LoggingConfig) -> logging.Handler:
    """Archivo de log con rotación diaria o por tamaño"""
    log_dir = os.path.dirname(config.file_path)
    if log_dir:
        os.makedirs(log_dir, exist_ok=True)

    if config.file_rotation == 'daily':
        handler = TimedRotatingFileHandler(
            config.file_path,
            when='midnight',
            interval=1,
            backupCount=config.file_retention_days
        )
    elif config.file_rotation == 'size':
        handler = RotatingFileHandler(
            config.file_path,
            maxBytes=10*1024*1024,  # 10MB
            backupCount=5
        )
    else:
        handler = logging.FileHandler(config.file_path)
    handler.setFormatter(logging.Formatter(config.format))
    return handler


def override_log_level(config: LoggingConfig, level: str) -> LoggingConfig:
    """Impone un nivel global: raíz y todos los módulos kapaths.*"""
    if level not in VALID_LEVELS:
        raise ValueError(f"Nivel de logging inválido '{level}'")
    config.level = level
    config.module_levels = {module: level for module in config.module_levels}
    return config


def setup_logging(config: LoggingConfig = None):
    """Configura el logging; la consola escribe en stderr.

    Los niveles de module_levels se aplican después del nivel raíz, así que
    un módulo en INFO sigue emitiendo INFO aunque la raíz esté en ERROR.
    """
    if config is None:
        config = LoggingConfig()

    handlers: List[logging.Handler] = []
    if config.console_enabled:
        handlers.append(_console_handler(config.format))
    if config.file_enabled:
        handlers.append(_file_handler(config))
    if not handlers:
        handlers.append(logging.NullHandler())

    logging.basicConfig(
        level=getattr(logging, config.level),
        handlers=handlers,
        force=True
    )

    for module, level in config.module_levels.items():
        logging.getLogger(module).setLevel(getattr(logging, level))

    return logging.getLogger(__name__)


def save_config(config: KapathConfig, config_file: str = "kapath_config.yaml"):
    """Guarda la configuración en un archivo YAML (mismo esquema que load_config)"""
    with open(config_file, 'w', encoding='utf-8') as f:
        yaml.safe_dump(asdict(config), f, default_flow_style=False, sort_keys=False, allow_unicode=True)


def generate_default_config(config_file: str = "kapath_config_default.yaml") -> KapathConfig:
    """Genera un archivo de configuración por defecto con todas las opciones"""
    default_config = KapathConfig()
    save_config(default_config, config_file)
    logging.getLogger(__name__).info(f"Configuración por defecto generada: {config_file}")
    return default_config


def config_summary(config: KapathConfig) -> Dict[str, Any]:
    """Resumen para el log de arranque"""
    return {
        'k': config.grid.k_values,
        'a': config.grid.a_values,
        'n': f"{config.grid.n_min}..{config.grid.n_max}",
        'claims': config.verification.claims,
        'budget': config.verification.budget,
        'workers': config.verification.workers,
    }
