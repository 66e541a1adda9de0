"helpers shared by the loader, the runner and the CLI"

import json
import logging
import sys
from dataclasses import dataclass, field, fields
from pathlib import Path

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


_handler: logging.Handler | None = None


def setup_logging(level: int = logging.WARNING) -> logging.Logger:
    """One stream handler on stderr for the whole package; stdout stays free for results."""
    global _handler
    root = logging.getLogger()
    if _handler is not None:
        root.removeHandler(_handler)
    _handler = logging.StreamHandler(sys.stderr)
    _handler.setFormatter(logging.Formatter(LOG_FORMAT))
    root.addHandler(_handler)
    root.setLevel(level)
    return root


def verbosity_level(verbose: int) -> int:
    if verbose >= 2:
        return logging.DEBUG
    if verbose == 1:
        return logging.INFO
    return logging.WARNING


# -----------------------------
# Configuration
# -----------------------------

@dataclass(frozen=True)
class Config:
    """
    Run defaults. Relative paths are resolved against `root`, the directory of
    the config file they came from.

    Args:
        default_signature (str): signature file used when no --signature is given.
        max_countermodel_worlds (int): bound for countermodel search.
        corpus_workers (int): threads used by `corpus run`.
        fuzz_seed (int): seed for generated formulas and theorems.
        theories (tuple): theory files registered at start-up.
    """
    default_signature: str = "signatures/default.sig"
    max_countermodel_worlds: int = 3
    corpus_workers: int = 1
    fuzz_seed: int = 0
    theories: tuple[str, ...] = ()
    root: Path = field(default=Path("."), compare=False)

    def resolve(self, path: str | Path) -> Path:
        path = Path(path)
        return path if path.is_absolute() else self.root / path


_CONFIG_KEYS = {f.name for f in fields(Config)} - {"root"}


def load_config(path: str | Path | None = None) -> Config:
    """
    Reads a JSON config file; missing keys keep their defaults.

    Raises:
        KeyError: the file has a key Config does not know.
        FileNotFoundError, ValueError: unreadable or malformed file.
    """
    if path is None:
        return Config()
    path = Path(path)
    data = load_json(path)
    unknown = sorted(set(data) - _CONFIG_KEYS)
    if unknown:
        raise KeyError(f"Unknown config key(s) in {path}: {', '.join(unknown)}. "
                       f"Expected some of {', '.join(sorted(_CONFIG_KEYS))}.")
    if "theories" in data:
        data["theories"] = tuple(data["theories"])
    return Config(**data, root=path.parent)


# -----------------------------
# Files
# -----------------------------

def read_text(path: str | Path) -> str:
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(f"No such file: '{path}'.")
    return path.read_text(encoding="utf-8")


def load_json(path: str | Path):
    try:
        return json.loads(read_text(path))
    except json.JSONDecodeError as e:
        raise ValueError(f"'{path}' is not valid JSON: {e}") from None


def dump_json(obj) -> str:
    """Stable JSON text: sorted keys, so equal reports print identically."""
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False)


def save_json(obj, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(dump_json(obj) + "\n", encoding="utf-8")
    return path


def load_directory(base_path: str | Path, suffix: str) -> dict[str, object]:
    """Every file with the given suffix under base_path, keyed by stem; JSON files are decoded."""
    base_path = Path(base_path)
    if not base_path.is_dir():
        raise FileNotFoundError(f"No such directory: '{base_path}'.")
    result = {}
    for file_path in sorted(base_path.glob(f"*{suffix}")):
        result[file_path.stem] = load_json(file_path) if suffix == ".json" else read_text(file_path)
    return result
