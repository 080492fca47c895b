import sys

from curvcheck.cli import main

sys.exit(main())
