import sys

from btz.cli import main

sys.exit(main())
