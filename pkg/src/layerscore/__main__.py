# src/layerscore/__main__.py
import sys

from layerscore.main import main

if __name__ == "__main__":
    sys.exit(main())
