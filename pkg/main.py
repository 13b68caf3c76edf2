import sys
from pathlib import Path

# Add the project root to the Python path
project_root = str(Path(__file__).parent)
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from src.cli import cli  # noqa: E402

if __name__ == "__main__":
    cli()
