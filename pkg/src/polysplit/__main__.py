import sys

from polysplit.cli import main

sys.exit(main())
