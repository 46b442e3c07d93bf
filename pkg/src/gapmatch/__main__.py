import sys

from gapmatch.cli import main

sys.exit(main())
