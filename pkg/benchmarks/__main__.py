"""Allow running the corpus harness as: python -m benchmarks"""

from benchmarks.run import main

main()
