import sys

from qtasm.cli import main

sys.exit(main())
