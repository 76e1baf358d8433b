import sys

from cpnqm.cli import main

sys.exit(main())
