import sys

from kaj.cli import main

sys.exit(main())
