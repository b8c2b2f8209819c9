import sys
from pathlib import Path

# flat top-level packages, as when running cli.py from the repository root
sys.path.insert(0, str(Path(__file__).parent))
