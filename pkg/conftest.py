import sys
from pathlib import Path

from hypothesis import settings

SRC = str(Path(__file__).resolve().parent / "src")
if SRC not in sys.path:
    sys.path.insert(0, SRC)

settings.register_profile("coretower", deadline=None)
settings.load_profile("coretower")
