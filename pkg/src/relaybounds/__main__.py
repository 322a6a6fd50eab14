import sys

from relaybounds.cli import main

sys.exit(main())
