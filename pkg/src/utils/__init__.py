from .utils import (
    Config, setup_logging, verbosity_level, load_config, read_text, load_json, dump_json, save_json,
    load_directory,
)
from .summary import CorpusSummary