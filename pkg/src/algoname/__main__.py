import sys

from algoname.cli import main

sys.exit(main())
