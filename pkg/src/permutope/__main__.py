"""Allow running as: python -m permutope"""

from permutope.cli import main

main()
