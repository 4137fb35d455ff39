import sys

from damspec.cli import main

sys.exit(main())
