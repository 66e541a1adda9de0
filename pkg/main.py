# main.py (at the project root)

import sys
from pathlib import Path

# Establish the absolute project root and add 'src' to the path
PROJECT_ROOT = Path(__file__).resolve().parent
SRC_PATH = PROJECT_ROOT / "src"
sys.path.insert(0, str(SRC_PATH))

from runner.cli import main

if __name__ == "__main__":
    # without arguments: check the whole corpus
    sys.exit(main(sys.argv[1:] or ["corpus", "run"]))
